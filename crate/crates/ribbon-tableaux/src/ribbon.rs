//! `r`-ribbons with the cores and quotients they define.
//!
//! Horizontal and vertical `r`-ribbon strips carry a witness tiling, from
//! which their standardisation and spin are read.
//!
//! A ribbon is named by the content `k` of its head (top-right square).
//! Adding it to a shape swaps the edge bits at `(k - r, k)` from `(1, 0)` to
//! `(0, 1)`; the `r - 1` bits strictly between them are its form and their
//! sum is its height.
//!
//! Spin is stored doubled so that it stays an integer.
//!
//! ```
//! use ribbon_tableaux::partition::Partition;
//! use ribbon_tableaux::ribbon::{strip_check, Orientation};
//!
//! let mu = Partition::new(vec![16, 15, 15, 5, 4]).unwrap();
//! let kappa = Partition::new(vec![17, 17, 16, 13, 9, 5, 1, 1]).unwrap();
//! let strip = strip_check(&mu, &kappa, 4, Orientation::Horizontal).unwrap();
//! assert_eq!((strip.count(), strip.dspin()), (6, 7));
//! ```

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{BitBuf, EdgeSeq, Partition};

/// Whether a ribbon is to be added to or removed from a shape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Add,
    Remove,
}

/// Which ribbons [`list_ribbons`] reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Addable,
    Removable,
}

/// Orientation of a strip: ribbons added left to right, or top to bottom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "h")]
    Horizontal,
    #[serde(rename = "v")]
    Vertical,
}

/// An `r`-ribbon identified by the content of its head square.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Ribbon {
    /// Content (column minus row) of the head square.
    pub head: i64,
    /// The `r - 1` edge bits strictly between positions `head - r` and `head`.
    pub form: Vec<bool>,
    pub r: usize,
}

impl Ribbon {
    fn read(e: &EdgeSeq, head: i64, r: usize) -> Ribbon {
        let form = (head - r as i64 + 1..head).map(|i| e.get(i)).collect();
        Ribbon { head, form, r }
    }

    /// Number of rows occupied minus one: the sum of the form bits.
    pub fn height(&self) -> usize {
        self.form.iter().filter(|&&b| b).count()
    }
}

/// Ribbons that can be added to (or removed from) `mu`, sorted by head.
pub fn list_ribbons(mu: &Partition, r: usize, mode: Mode) -> Vec<Ribbon> {
    list_ribbons_seq(&mu.edge(), r, mode)
}

/// [`list_ribbons`] for an arbitrary bit sequence: positions `k` where the
/// pair `(e_{k-r}, e_k)` is `(1, 0)` (addable) or `(0, 1)` (removable).
pub fn list_ribbons_seq(e: &EdgeSeq, r: usize, mode: Mode) -> Vec<Ribbon> {
    let (lo, hi) = e.span();
    let want = match mode {
        Mode::Addable => (true, false),
        Mode::Removable => (false, true),
    };
    (lo..hi + r as i64)
        .filter(|&k| (e.get(k - r as i64), e.get(k)) == want)
        .map(|k| Ribbon::read(e, k, r))
        .collect()
}

/// Adds or removes the `r`-ribbon with head `k`.
pub fn apply_ribbon(lambda: &Partition, k: i64, r: usize, dir: Direction) -> Result<Partition> {
    let e = apply_ribbon_seq(&lambda.edge(), k, r, dir)?;
    Partition::from_edge(&e)
}

/// [`apply_ribbon`] on a bit sequence.
pub fn apply_ribbon_seq(e: &EdgeSeq, k: i64, r: usize, dir: Direction) -> Result<EdgeSeq> {
    let t = k - r as i64;
    let (from, action) = match dir {
        Direction::Add => ((true, false), "added"),
        Direction::Remove => ((false, true), "removed"),
    };
    if (e.get(t), e.get(k)) != from {
        return Err(Error::NotApplicable { head: k, r, action });
    }
    Ok(e.with_bits(&[(t, !from.0), (k, !from.1)]))
}

/// The ribbon `kappa / mu` if `kappa` is obtained from `mu` by adding a
/// single `r`-ribbon.
pub fn ribbon_between(mu: &Partition, kappa: &Partition, r: usize) -> Option<Ribbon> {
    ribbon_between_seq(&mu.edge(), &kappa.edge(), r)
}

/// [`ribbon_between`] on bit sequences.
pub fn ribbon_between_seq(mu: &EdgeSeq, kappa: &EdgeSeq, r: usize) -> Option<Ribbon> {
    if mu.left_fill() != kappa.left_fill() || mu.right_fill() != kappa.right_fill() {
        return None;
    }
    let (a, b) = mu.span();
    let (c, d) = kappa.span();
    let diffs: Vec<i64> = (a.min(c)..b.max(d))
        .filter(|&i| mu.get(i) != kappa.get(i))
        .collect();
    match diffs.as_slice() {
        &[t, k] if k - t == r as i64 && mu.get(t) && !mu.get(k) => Some(Ribbon::read(mu, k, r)),
        _ => None,
    }
}

/// True iff no `r`-ribbon can be removed from `lambda`.
pub fn is_core(lambda: &Partition, r: usize) -> bool {
    list_ribbons(lambda, r, Mode::Removable).is_empty()
}

/// An `r`-core together with an `r`-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: Vec<Partition>,
    pub r: usize,
}

/// Component `i` of `e` modulo `r`: the sequence `j ↦ e_{i + j r}`.
pub fn residue_class(e: &EdgeSeq, r: usize, i: usize) -> EdgeSeq {
    let r = r as i64;
    let i = i as i64;
    let (lo, hi) = e.span();
    let jlo = (lo - i).div_euclid(r) - 1;
    let jhi = (hi - i).div_euclid(r) + 2;
    EdgeSeq::from_fn(jlo, jhi, e.left_fill(), e.right_fill(), |j| {
        e.get(i + j * r)
    })
}

/// Charges of the residue classes of the edge sequence of `lambda`. They
/// depend only on the `r`-core and sum to 0.
pub fn class_charges(lambda: &Partition, r: usize) -> Vec<i64> {
    let e = lambda.edge();
    (0..r)
        .map(|i| {
            residue_class(&e, r, i)
                .charge()
                .expect("residue classes of an edge sequence have fills (1, 0)")
        })
        .collect()
}

fn core_from_charges(charges: &[i64]) -> Partition {
    let r = charges.len() as i64;
    let lo = charges.iter().map(|&c| c.min(0)).min().unwrap_or(0) * r - r;
    let hi = charges.iter().map(|&c| c.max(0)).max().unwrap_or(0) * r + r;
    let e = EdgeSeq::from_fn(lo, hi, true, false, |p| {
        let i = p.rem_euclid(r) as usize;
        p.div_euclid(r) < charges[i]
    });
    Partition::from_edge(&e).expect("class charges summing to zero encode a partition")
}

/// The `r`-core and `r`-quotient of `lambda`.
pub fn r_quotient(lambda: &Partition, r: usize) -> CoreQuotient {
    let e = lambda.edge();
    let mut charges = Vec::with_capacity(r);
    let mut quotient = Vec::with_capacity(r);
    for i in 0..r {
        let comp = residue_class(&e, r, i);
        let c = comp.charge().expect("fills are (1, 0)");
        charges.push(c);
        quotient
            .push(Partition::from_edge(&comp.shifted(c)).expect("a shifted class has charge 0"));
    }
    CoreQuotient {
        core: core_from_charges(&charges),
        quotient,
        r,
    }
}

/// Inverse of [`r_quotient`].
pub fn from_core_quotient(cq: &CoreQuotient) -> Result<Partition> {
    let r = cq.r;
    if r == 0 || cq.quotient.len() != r {
        return Err(Error::InvalidInput(format!(
            "an r-quotient needs exactly r = {r} components"
        )));
    }
    if !is_core(&cq.core, r) {
        return Err(Error::NotACore(cq.core.to_string()));
    }
    let charges = class_charges(&cq.core, r);
    let comps: Vec<EdgeSeq> = cq
        .quotient
        .iter()
        .zip(&charges)
        .map(|(q, &c)| q.edge().shifted(-c))
        .collect();
    let ri = r as i64;
    let lo = comps.iter().map(|c| c.span().0).min().unwrap_or(0) * ri - ri;
    let hi = comps.iter().map(|c| c.span().1).max().unwrap_or(0) * ri + ri;
    let e = EdgeSeq::from_fn(lo, hi, true, false, |p| {
        comps[p.rem_euclid(ri) as usize].get(p.div_euclid(ri))
    });
    Partition::from_edge(&e)
}

/// A horizontal `r`-ribbon strip `hi / lo` with its witness.
///
/// For a vertical strip of partitions the scan runs on the transposed
/// shapes: `lo`, `hi`, `witness`, `positions` and `heights` are then all in
/// transposed coordinates, while [`RibbonStrip::heads`],
/// [`RibbonStrip::original_heights`] and [`RibbonStrip::dspin`] report the
/// untransposed values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RibbonStrip {
    pub lo: EdgeSeq,
    pub hi: EdgeSeq,
    pub witness: EdgeSeq,
    /// Ribbon positions in increasing order.
    pub positions: Vec<i64>,
    /// Height of the ribbon at the matching entry of `positions`.
    pub heights: Vec<usize>,
    pub r: usize,
    pub orientation: Orientation,
}

impl RibbonStrip {
    /// Number of ribbons.
    pub fn count(&self) -> usize {
        self.positions.len()
    }

    /// Head contents of the ribbons in the untransposed shape, in
    /// standardisation order.
    pub fn heads(&self) -> Vec<i64> {
        match self.orientation {
            Orientation::Horizontal => self.positions.clone(),
            Orientation::Vertical => self
                .positions
                .iter()
                .map(|&j| self.r as i64 - 1 - j)
                .collect(),
        }
    }

    /// Heights of the ribbons in the untransposed shape, in standardisation
    /// order.
    pub fn original_heights(&self) -> Vec<usize> {
        match self.orientation {
            Orientation::Horizontal => self.heights.clone(),
            Orientation::Vertical => self.heights.iter().map(|&h| self.r - 1 - h).collect(),
        }
    }

    /// Twice the spin: the sum of the untransposed ribbon heights.
    pub fn dspin(&self) -> usize {
        self.original_heights().iter().sum()
    }

    /// The chain of bit sequences from `lo` to `hi` adding one ribbon at a
    /// time in increasing position order, in the scan coordinates.
    pub fn standardise_seq(&self) -> Vec<EdgeSeq> {
        let mut chain = vec![self.lo.clone()];
        for &k in &self.positions {
            let next = apply_ribbon_seq(
                chain.last().expect("chain is nonempty"),
                k,
                self.r,
                Direction::Add,
            )
            .expect("strip positions are addable in increasing order");
            chain.push(next);
        }
        chain
    }

    /// The standardisation as a chain of partitions, transposed back for
    /// vertical strips so that ribbons appear by decreasing head.
    pub fn standardise(&self) -> Result<Vec<Partition>> {
        self.standardise_seq()
            .iter()
            .map(|e| {
                let p = Partition::from_edge(e)?;
                Ok(match self.orientation {
                    Orientation::Horizontal => p,
                    Orientation::Vertical => p.transpose(),
                })
            })
            .collect()
    }
}

/// Witness scan: decides `s ≤ t` as a horizontal `r`-ribbon strip of bit
/// sequences.
pub fn strip_check_seq(s: &EdgeSeq, t: &EdgeSeq, r: usize) -> Option<RibbonStrip> {
    scan(s, t, r, Orientation::Horizontal)
}

fn scan(s: &EdgeSeq, t: &EdgeSeq, r: usize, orientation: Orientation) -> Option<RibbonStrip> {
    if r == 0 || s.left_fill() != t.left_fill() || s.right_fill() != t.right_fill() {
        return None;
    }
    let ri = r as i64;
    let (a, b) = s.span();
    let (c, d) = t.span();
    let (lo, hi) = (a.min(c), b.max(d));
    let mut w = BitBuf::from_seq(s, lo - ri, hi + ri);
    let mut positions = Vec::new();
    let mut heights = Vec::new();
    for i in lo..hi + ri {
        match (w.get(i - ri), t.get(i - ri)) {
            (true, false) => {
                if s.get(i) {
                    return None;
                }
                w.set(i, true);
                positions.push(i);
                heights.push((1..ri).filter(|&j| w.get(i - j)).count());
            }
            (false, true) => return None,
            _ => {}
        }
    }
    if (hi..hi + ri).any(|j| w.get(j) != t.get(j)) {
        return None;
    }
    Some(RibbonStrip {
        lo: s.clone(),
        hi: t.clone(),
        witness: w.to_seq(),
        positions,
        heights,
        r,
        orientation,
    })
}

/// Decides whether `mu / lambda` is a horizontal or vertical `r`-ribbon
/// strip and returns it with its witness.
pub fn strip_check(
    lambda: &Partition,
    mu: &Partition,
    r: usize,
    orientation: Orientation,
) -> Option<RibbonStrip> {
    match orientation {
        Orientation::Horizontal => scan(&lambda.edge(), &mu.edge(), r, orientation),
        Orientation::Vertical => scan(
            &lambda.transpose().edge(),
            &mu.transpose().edge(),
            r,
            orientation,
        ),
    }
}

/// All shapes `mu` such that `mu / lambda` is an `r`-ribbon strip of the
/// given orientation with exactly `count` ribbons, sorted.
///
/// Found by adding ribbons with strictly increasing heads (horizontal) or
/// strictly decreasing heads (vertical).
pub fn strips_above(
    lambda: &Partition,
    r: usize,
    orientation: Orientation,
    count: usize,
) -> Vec<Partition> {
    collect_strips(lambda, r, orientation, Mode::Addable, count, count)
}

/// All shapes `lambda` such that `mu / lambda` is an `r`-ribbon strip of the
/// given orientation with exactly `count` ribbons, sorted.
pub fn strips_below(
    mu: &Partition,
    r: usize,
    orientation: Orientation,
    count: usize,
) -> Vec<Partition> {
    collect_strips(mu, r, orientation, Mode::Removable, count, count)
}

/// All shapes `mu` such that `mu / lambda` is an `r`-ribbon strip of the
/// given orientation with at most `max_count` ribbons, sorted.
pub fn strips_above_upto(
    lambda: &Partition,
    r: usize,
    orientation: Orientation,
    max_count: usize,
) -> Vec<Partition> {
    collect_strips(lambda, r, orientation, Mode::Addable, 0, max_count)
}

/// All shapes `lambda` such that `mu / lambda` is an `r`-ribbon strip of the
/// given orientation with at most `max_count` ribbons, sorted.
pub fn strips_below_upto(
    mu: &Partition,
    r: usize,
    orientation: Orientation,
    max_count: usize,
) -> Vec<Partition> {
    collect_strips(mu, r, orientation, Mode::Removable, 0, max_count)
}

fn collect_strips(
    shape: &Partition,
    r: usize,
    orientation: Orientation,
    mode: Mode,
    min_count: usize,
    max_count: usize,
) -> Vec<Partition> {
    struct Walk {
        r: usize,
        mode: Mode,
        min_count: usize,
        max_count: usize,
        out: BTreeSet<Partition>,
    }
    fn rec(w: &mut Walk, e: &EdgeSeq, bound: i64, depth: usize) {
        if depth >= w.min_count {
            w.out
                .insert(Partition::from_edge(e).expect("ribbon moves keep charge 0"));
        }
        if depth == w.max_count {
            return;
        }
        let dir = match w.mode {
            Mode::Addable => Direction::Add,
            Mode::Removable => Direction::Remove,
        };
        for rib in list_ribbons_seq(e, w.r, w.mode) {
            let ordered = match w.mode {
                Mode::Addable => rib.head > bound,
                Mode::Removable => rib.head < bound,
            };
            if ordered {
                let next = apply_ribbon_seq(e, rib.head, w.r, dir).expect("listed ribbons apply");
                rec(w, &next, rib.head, depth + 1);
            }
        }
    }
    let base = match orientation {
        Orientation::Horizontal => shape.clone(),
        Orientation::Vertical => shape.transpose(),
    };
    let mut walk = Walk {
        r,
        mode,
        min_count,
        max_count,
        out: BTreeSet::new(),
    };
    let start = match mode {
        Mode::Addable => i64::MIN,
        Mode::Removable => i64::MAX,
    };
    rec(&mut walk, &base.edge(), start, 0);
    match orientation {
        Orientation::Horizontal => walk.out.into_iter().collect(),
        Orientation::Vertical => {
            let mut v: Vec<Partition> = walk.out.into_iter().map(|p| p.transpose()).collect();
            v.sort();
            v
        }
    }
}
