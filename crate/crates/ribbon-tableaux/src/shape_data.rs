//! Shape data: for fixed shapes `µ, ν`, bijections between shapes `κ` above
//! both and pairs `(a, λ)` of a matrix entry and a shape below both.
//!
//! Every datum is offered in two directions: `insert` computes `κ` from
//! `(λ, µ, ν, a)` and `extract` computes `(a, λ)` from `(µ, ν, κ)`.
//!
//! * RSK, by closed formulas on parts.
//! * Burge, by a column traversal and by an edge-sequence traversal with a
//!   printable trace. The edge form takes a general `r`, where it equals the
//!   Burge datum applied to each component of the `r`-quotient.
//! * Factored data: RSK or Burge applied componentwise on `r`-quotients.
//! * The spin-preserving symmetric datum, computed on arbitrary bit
//!   sequences through basic square configurations.
//! * The spin-preserving asymmetric datum with `a ∈ {0,1}ʳ`, whose `Q` side
//!   uses vertical strips.
//!
//! ```
//! use ribbon_tableaux::partition::Partition;
//! use ribbon_tableaux::shape_data::{spin_sym_extract_shapes, ColorVector};
//!
//! let p = |v: &[usize]| Partition::new(v.to_vec()).unwrap();
//! let (a, lambda, _) = spin_sym_extract_shapes(
//!     &p(&[16, 15, 15, 5, 4]),
//!     &p(&[14, 14, 14, 9, 4]),
//!     &p(&[17, 17, 16, 13, 9, 5, 1, 1]),
//!     4,
//! )
//! .unwrap();
//! assert_eq!(lambda, p(&[14, 13, 11, 5]));
//! assert_eq!(a, ColorVector::new(vec![0, 2, 0, 1]));
//! ```

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{is_horizontal_strip, BitBuf, EdgeSeq, Partition};
use crate::ribbon::{
    apply_ribbon, class_charges, from_core_quotient, r_quotient, strip_check, strip_check_seq,
    CoreQuotient, Direction, Orientation, RibbonStrip,
};

/// An element of `ℕʳ`: a matrix entry or the value `a` of a shape datum.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColorVector(pub Vec<u64>);

impl ColorVector {
    pub fn new(comps: Vec<u64>) -> Self {
        ColorVector(comps)
    }

    /// The zero vector of length `r`.
    pub fn zeros(r: usize) -> Self {
        ColorVector(vec![0; r])
    }

    /// The unit vector `e_h` of length `r`.
    pub fn unit(r: usize, h: usize) -> Self {
        let mut v = vec![0; r];
        v[h] = 1;
        ColorVector(v)
    }

    /// Number of components `r`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True when there are no components.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Component `h`.
    pub fn get(&self, h: usize) -> u64 {
        self.0[h]
    }

    /// The rank `|a| = Σ a_i`.
    pub fn rank(&self) -> u64 {
        self.0.iter().sum()
    }

    /// The colour weight `n(a) = Σ i·a_i`.
    pub fn weight(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &x)| i as u64 * x).sum()
    }

    /// True when every component is 0.
    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    /// All vectors of length `r` and rank `n`, in lexicographic order.
    pub fn all_of_rank(r: usize, n: u64) -> Vec<ColorVector> {
        fn rec(r: usize, n: u64, cur: &mut Vec<u64>, out: &mut Vec<ColorVector>) {
            if cur.len() + 1 == r {
                cur.push(n);
                out.push(ColorVector(cur.clone()));
                cur.pop();
                return;
            }
            for x in 0..=n {
                cur.push(x);
                rec(r, n - x, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if r > 0 {
            rec(r, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Debug for ColorVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

fn require_r(a: &ColorVector, r: usize) -> Result<()> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    if a.len() != r {
        return Err(Error::InvalidInput(format!(
            "colour vector {a:?} must have exactly r = {r} components"
        )));
    }
    Ok(())
}

fn require_hstrip(lo: &Partition, hi: &Partition, what: &str) -> Result<()> {
    if is_horizontal_strip(lo, hi) {
        Ok(())
    } else {
        Err(Error::PreconditionViolated(format!(
            "{hi}/{lo} is not a horizontal strip ({what})"
        )))
    }
}

fn require_rstrip(
    lo: &Partition,
    hi: &Partition,
    r: usize,
    orientation: Orientation,
    what: &str,
) -> Result<RibbonStrip> {
    strip_check(lo, hi, r, orientation).ok_or_else(|| {
        let kind = match orientation {
            Orientation::Horizontal => "horizontal",
            Orientation::Vertical => "vertical",
        };
        Error::PreconditionViolated(format!(
            "{hi}/{lo} is not a {kind} {r}-ribbon strip ({what})"
        ))
    })
}

// ---------------------------------------------------------------------------
// RSK
// ---------------------------------------------------------------------------

/// RSK datum, extraction: `a = κ₀ − max(µ₀, ν₀)` and
/// `λ_i = min(µ_i, ν_i) + max(µ_{i+1}, ν_{i+1}) − κ_{i+1}`.
pub fn rsk_extract(mu: &Partition, nu: &Partition, kappa: &Partition) -> Result<(u64, Partition)> {
    require_hstrip(mu, kappa, "kappa over mu")?;
    require_hstrip(nu, kappa, "kappa over nu")?;
    let a = kappa.part(0) - mu.part(0).max(nu.part(0));
    let n = mu.len().max(nu.len());
    let parts = (0..n)
        .map(|i| {
            mu.part(i).min(nu.part(i)) + mu.part(i + 1).max(nu.part(i + 1)) - kappa.part(i + 1)
        })
        .collect();
    Ok((a as u64, Partition::new(parts)?))
}

/// RSK datum, insertion: `κ₀ = max(µ₀, ν₀) + a` and
/// `κ_{i+1} = min(µ_i, ν_i) + max(µ_{i+1}, ν_{i+1}) − λ_i`.
pub fn rsk_insert(lambda: &Partition, mu: &Partition, nu: &Partition, a: u64) -> Result<Partition> {
    require_hstrip(lambda, mu, "mu over lambda")?;
    require_hstrip(lambda, nu, "nu over lambda")?;
    let n = mu.len().max(nu.len());
    let mut parts = vec![mu.part(0).max(nu.part(0)) + a as usize];
    for i in 0..n {
        parts
            .push(mu.part(i).min(nu.part(i)) + mu.part(i + 1).max(nu.part(i + 1)) - lambda.part(i));
    }
    Partition::new(parts)
}

// ---------------------------------------------------------------------------
// Burge, column form
// ---------------------------------------------------------------------------

/// Burge datum, insertion, by a left-to-right traversal of the columns.
pub fn burge_insert(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: u64,
) -> Result<Partition> {
    require_hstrip(lambda, mu, "mu over lambda")?;
    require_hstrip(lambda, nu, "nu over lambda")?;
    let (lt, mt, nt) = (lambda.transpose(), mu.transpose(), nu.transpose());
    let mut a = a;
    let mut cols = Vec::new();
    let mut j = 0;
    loop {
        let l = lt.part(j);
        let c = (mt.part(j) - l) + (nt.part(j) - l);
        let kj = match c {
            1 => mt.part(j).max(nt.part(j)),
            2 => {
                a += 1;
                l + 1
            }
            _ if a > 0 => {
                a -= 1;
                l + 1
            }
            _ => l,
        };
        if kj == 0 {
            break;
        }
        cols.push(kj);
        j += 1;
    }
    Ok(Partition::new(cols)?.transpose())
}

/// Burge datum, extraction, by a right-to-left traversal of the columns.
pub fn burge_extract(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
) -> Result<(u64, Partition)> {
    require_hstrip(mu, kappa, "kappa over mu")?;
    require_hstrip(nu, kappa, "kappa over nu")?;
    let (kt, mt, nt) = (kappa.transpose(), mu.transpose(), nu.transpose());
    let mut a = 0u64;
    let mut cols = vec![0; kappa.part(0)];
    for j in (0..kappa.part(0)).rev() {
        let k = kt.part(j);
        let c = (k - mt.part(j)) + (k - nt.part(j));
        cols[j] = match c {
            1 => mt.part(j).min(nt.part(j)),
            2 => {
                a += 1;
                k - 1
            }
            _ if a > 0 => {
                a -= 1;
                k - 1
            }
            _ => k,
        };
    }
    Ok((a, Partition::new(cols)?.transpose()))
}

// ---------------------------------------------------------------------------
// Burge, edge-sequence form
// ---------------------------------------------------------------------------

/// One processed diagonal of an edge-sequence Burge run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurgeRow {
    pub k: i64,
    /// The bit string before processing, with the pair `(k - r, k)`
    /// bracketed.
    pub before: String,
    /// Whether the strips `µ/λ` and `ν/λ` have a ribbon at `k`.
    pub mu_lambda: bool,
    pub nu_lambda: bool,
    /// Number of those strips having a ribbon at `k`.
    pub c: u8,
    pub action: String,
    pub after: String,
    /// Whether the strips `κ/µ` and `κ/ν` have a ribbon at `k`.
    pub kappa_mu: bool,
    pub kappa_nu: bool,
}

/// Result of an edge-sequence Burge run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BurgeTrace {
    /// `edge λ` (insertion) or `edge κ` (extraction) over the display window.
    pub initial: String,
    /// `edge κ` (insertion) or `edge λ` (extraction) over the display window.
    pub last: String,
    /// Starting value of `a` (insertion) or zero (extraction).
    pub a_initial: ColorVector,
    pub rows: Vec<BurgeRow>,
}

fn render(bits: &[bool], lo: i64, wlo: i64, whi: i64, bracket: Option<(i64, i64)>) -> String {
    let mut s = String::new();
    for i in wlo..=whi {
        if bracket.map(|b| b.0) == Some(i) {
            s.push('[');
        }
        let j = i - lo;
        let bit = if j < 0 {
            true
        } else {
            bits.get(j as usize).copied().unwrap_or(false)
        };
        s.push(if bit { '1' } else { '0' });
        if bracket.map(|b| b.1) == Some(i) {
            s.push(']');
        }
    }
    s
}

struct RawRow {
    k: i64,
    before: Vec<bool>,
    after: Vec<bool>,
    flags: (bool, bool),
    c: u8,
    action: String,
}

/// Burge datum in edge form for general `r`, insertion: one left-to-right
/// pass over the pairs `(w_{k-r}, w_k)`, with component `k mod r` of `a`
/// as the counter. For `r = 1` this is the Burge datum itself.
pub fn burge_edge_insert_r(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &ColorVector,
    r: usize,
) -> Result<(Partition, BurgeTrace)> {
    let (kappa, trace) = edge_insert(lambda, mu, nu, a, r, true)?;
    Ok((kappa, trace.expect("traced run")))
}

fn edge_insert(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &ColorVector,
    r: usize,
    traced: bool,
) -> Result<(Partition, Option<BurgeTrace>)> {
    require_r(a, r)?;
    let sm = require_rstrip(lambda, mu, r, Orientation::Horizontal, "mu over lambda")?;
    let sn = require_rstrip(lambda, nu, r, Orientation::Horizontal, "nu over lambda")?;
    let ri = r as i64;
    let e = lambda.edge();
    let (lo, hi) = e.span();
    let last_c = sm.positions.iter().chain(&sn.positions).copied().max();
    let budget = a.rank() as i64 + (sm.count() + sn.count()) as i64 + 3;
    let buf_hi = hi.max(last_c.unwrap_or(hi)) + ri * budget;
    let mut w = BitBuf::from_seq(&e, lo - ri, buf_hi);
    let mut cnt = a.0.clone();
    let mut raw = Vec::new();
    let mut k = lo;
    loop {
        let done = cnt.iter().all(|&x| x == 0) && last_c.map_or(true, |m| k > m);
        if done {
            break;
        }
        if k + 1 >= buf_hi {
            return Err(Error::Internal(
                "Burge edge traversal did not terminate".into(),
            ));
        }
        let cls = k.rem_euclid(ri) as usize;
        let flags = (sm.positions.contains(&k), sn.positions.contains(&k));
        let c = flags.0 as u8 + flags.1 as u8;
        let before = if traced {
            snapshot(&w, lo - ri, buf_hi)
        } else {
            Vec::new()
        };
        let action = if (w.get(k - ri), w.get(k)) == (true, false) {
            let act = match c {
                1 => Some("swap".to_string()),
                2 => {
                    cnt[cls] += 1;
                    Some(format!("a:=a+1={}, swap", cnt[cls]))
                }
                _ if cnt[cls] > 0 => {
                    cnt[cls] -= 1;
                    Some(format!("a:=a-1={}, swap", cnt[cls]))
                }
                _ => None,
            };
            match act {
                Some(s) => {
                    w.set(k - ri, false);
                    w.set(k, true);
                    s
                }
                None => "none (a=0)".to_string(),
            }
        } else if c > 0 {
            return Err(Error::Internal(format!(
                "a strip ribbon at {k} meets a pair that is not (1, 0)"
            )));
        } else {
            "none".to_string()
        };
        if traced {
            raw.push(RawRow {
                k,
                before,
                after: snapshot(&w, lo - ri, buf_hi),
                flags,
                c,
                action,
            });
        }
        k += 1;
    }
    let kappa = Partition::from_edge(&w.to_seq())?;
    let skm = require_rstrip(mu, &kappa, r, Orientation::Horizontal, "kappa over mu")?;
    let skn = require_rstrip(nu, &kappa, r, Orientation::Horizontal, "kappa over nu")?;
    if !traced {
        return Ok((kappa, None));
    }
    let wlo = lo - ri - 2;
    let whi = kappa.edge().span().1 + ri;
    let rows = raw
        .into_iter()
        .map(|row| BurgeRow {
            k: row.k,
            before: render(&row.before, lo - ri, wlo, whi, Some((row.k - ri, row.k))),
            mu_lambda: row.flags.0,
            nu_lambda: row.flags.1,
            c: row.c,
            action: row.action,
            after: render(&row.after, lo - ri, wlo, whi, Some((row.k - ri, row.k))),
            kappa_mu: skm.positions.contains(&row.k),
            kappa_nu: skn.positions.contains(&row.k),
        })
        .collect();
    let trace = BurgeTrace {
        initial: e.bit_string(wlo, whi + 1),
        last: kappa.edge().bit_string(wlo, whi + 1),
        a_initial: a.clone(),
        rows,
    };
    Ok((kappa, Some(trace)))
}

fn snapshot(w: &BitBuf, lo: i64, hi: i64) -> Vec<bool> {
    (lo..hi).map(|i| w.get(i)).collect()
}

/// Burge datum in edge form for general `r`, extraction: the mirror
/// right-to-left pass of [`burge_edge_insert_r`].
pub fn burge_edge_extract_r(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
) -> Result<(ColorVector, Partition, BurgeTrace)> {
    let (a, lambda, trace) = edge_extract(mu, nu, kappa, r, true)?;
    Ok((a, lambda, trace.expect("traced run")))
}

fn edge_extract(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
    traced: bool,
) -> Result<(ColorVector, Partition, Option<BurgeTrace>)> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    let skm = require_rstrip(mu, kappa, r, Orientation::Horizontal, "kappa over mu")?;
    let skn = require_rstrip(nu, kappa, r, Orientation::Horizontal, "kappa over nu")?;
    let ri = r as i64;
    let e = kappa.edge();
    let (lo, hi) = e.span();
    let (blo, bhi) = (lo - 2 * ri, hi + 2 * ri);
    let mut w = BitBuf::from_seq(&e, blo, bhi);
    let mut cnt = vec![0u64; r];
    let mut raw = Vec::new();
    for k in (lo - ri..hi + ri).rev() {
        let cls = k.rem_euclid(ri) as usize;
        let flags = (skm.positions.contains(&k), skn.positions.contains(&k));
        let c = flags.0 as u8 + flags.1 as u8;
        let before = if traced {
            snapshot(&w, blo, bhi)
        } else {
            Vec::new()
        };
        let pair = (w.get(k - ri), w.get(k));
        let action = if pair == (false, true) {
            let act = match c {
                1 => Some("restore".to_string()),
                2 => {
                    cnt[cls] += 1;
                    Some(format!("a:=a+1={}, restore", cnt[cls]))
                }
                _ if cnt[cls] > 0 => {
                    cnt[cls] -= 1;
                    Some(format!("a:=a-1={}, restore", cnt[cls]))
                }
                _ => None,
            };
            match act {
                Some(s) => {
                    w.set(k - ri, true);
                    w.set(k, false);
                    s
                }
                None => "none (a=0)".to_string(),
            }
        } else if c > 0 {
            return Err(Error::Internal(format!(
                "a strip ribbon at {k} meets a pair that is not (0, 1)"
            )));
        } else {
            "none".to_string()
        };
        if traced && (c > 0 || action != "none" || cnt.iter().any(|&x| x > 0)) {
            raw.push(RawRow {
                k,
                before,
                after: snapshot(&w, blo, bhi),
                flags,
                c,
                action,
            });
        }
    }
    let lambda = Partition::from_edge(&w.to_seq())?;
    let sml = require_rstrip(&lambda, mu, r, Orientation::Horizontal, "mu over lambda")?;
    let snl = require_rstrip(&lambda, nu, r, Orientation::Horizontal, "nu over lambda")?;
    let a = ColorVector(cnt);
    if !traced {
        return Ok((a, lambda, None));
    }
    let wlo = lambda.edge().span().0 - ri - 2;
    let whi = hi + ri;
    let rows = raw
        .into_iter()
        .map(|row| BurgeRow {
            k: row.k,
            before: render(&row.before, blo, wlo, whi, Some((row.k - ri, row.k))),
            mu_lambda: sml.positions.contains(&row.k),
            nu_lambda: snl.positions.contains(&row.k),
            c: row.c,
            action: row.action,
            after: render(&row.after, blo, wlo, whi, Some((row.k - ri, row.k))),
            kappa_mu: row.flags.0,
            kappa_nu: row.flags.1,
        })
        .collect();
    let trace = BurgeTrace {
        initial: e.bit_string(wlo, whi + 1),
        last: lambda.edge().bit_string(wlo, whi + 1),
        a_initial: ColorVector::zeros(r),
        rows,
    };
    Ok((a, lambda, Some(trace)))
}

/// Burge edge pass without a trace, insertion.
pub fn burge_edge_insert_untraced(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &ColorVector,
    r: usize,
) -> Result<Partition> {
    Ok(edge_insert(lambda, mu, nu, a, r, false)?.0)
}

/// Burge edge pass without a trace, extraction.
pub fn burge_edge_extract_untraced(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
) -> Result<(ColorVector, Partition)> {
    let (a, lambda, _) = edge_extract(mu, nu, kappa, r, false)?;
    Ok((a, lambda))
}

/// Burge datum in edge form (`r = 1`), insertion, with its trace.
pub fn burge_edge_insert(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: u64,
) -> Result<(Partition, BurgeTrace)> {
    burge_edge_insert_r(lambda, mu, nu, &ColorVector(vec![a]), 1)
}

/// Burge datum in edge form (`r = 1`), extraction, with its trace.
pub fn burge_edge_extract(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
) -> Result<(u64, Partition, BurgeTrace)> {
    let (a, lambda, trace) = burge_edge_extract_r(mu, nu, kappa, 1)?;
    Ok((a.get(0), lambda, trace))
}

// ---------------------------------------------------------------------------
// Factored data
// ---------------------------------------------------------------------------

/// The `r = 1` datum applied to each component of the `r`-quotients.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Base {
    Rsk,
    Burge,
}

impl Base {
    fn insert(
        self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        a: u64,
    ) -> Result<Partition> {
        match self {
            Base::Rsk => rsk_insert(lambda, mu, nu, a),
            Base::Burge => burge_insert(lambda, mu, nu, a),
        }
    }

    fn extract(
        self,
        mu: &Partition,
        nu: &Partition,
        kappa: &Partition,
    ) -> Result<(u64, Partition)> {
        match self {
            Base::Rsk => rsk_extract(mu, nu, kappa),
            Base::Burge => burge_extract(mu, nu, kappa),
        }
    }
}

fn same_core(shapes: &[&Partition], r: usize) -> Result<Vec<CoreQuotient>> {
    let cqs: Vec<CoreQuotient> = shapes.iter().map(|p| r_quotient(p, r)).collect();
    if cqs.windows(2).any(|w| w[0].core != w[1].core) {
        return Err(Error::CoreMismatch(r));
    }
    Ok(cqs)
}

/// Factored datum, insertion: component `i` of `a` is inserted into the
/// quotient components `(λ^i, µ^i, ν^i)`.
pub fn factored_insert(
    base: Base,
    r: usize,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &ColorVector,
) -> Result<Partition> {
    require_r(a, r)?;
    let q = same_core(&[lambda, mu, nu], r)?;
    let quotient = (0..r)
        .map(|i| {
            base.insert(
                &q[0].quotient[i],
                &q[1].quotient[i],
                &q[2].quotient[i],
                a.get(i),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    from_core_quotient(&CoreQuotient {
        core: q[0].core.clone(),
        quotient,
        r,
    })
}

/// Factored datum, extraction.
pub fn factored_extract(
    base: Base,
    r: usize,
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
) -> Result<(ColorVector, Partition)> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    let q = same_core(&[mu, nu, kappa], r)?;
    let mut a = Vec::with_capacity(r);
    let mut quotient = Vec::with_capacity(r);
    for i in 0..r {
        let (ai, li) = base.extract(&q[0].quotient[i], &q[1].quotient[i], &q[2].quotient[i])?;
        a.push(ai);
        quotient.push(li);
    }
    let lambda = from_core_quotient(&CoreQuotient {
        core: q[0].core.clone(),
        quotient,
        r,
    })?;
    Ok((ColorVector(a), lambda))
}

// ---------------------------------------------------------------------------
// Spin-preserving symmetric datum
// ---------------------------------------------------------------------------

/// What the insertion scan did at an index whose pair `(w_{i-r}, l_i)` is
/// `(1, 0)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SymAction {
    /// No ribbon of `k/l` at this index.
    Skip,
    /// A ribbon of `k/l` at this index, changing `a_h` by `d`.
    Ribbon { d: i8 },
}

/// One decision of the symmetric insertion scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymStep {
    pub i: i64,
    /// Height `Σ_{j=1}^{r-1} w_{i-j}`.
    pub h: usize,
    /// Whether `m/l` and `n/l` have a ribbon at `i`.
    pub in_m: bool,
    pub in_n: bool,
    pub action: SymAction,
    /// The carried vector `a(i+1)` after this step.
    pub a: ColorVector,
}

/// A basic square configuration `(l m / n k, a≪, a≫)` together with the
/// carried profile `a(i)` and the witness of `l ≤ k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasicSquareConfig {
    pub l: EdgeSeq,
    pub m: EdgeSeq,
    pub n: EdgeSeq,
    pub k: EdgeSeq,
    pub a_ll: ColorVector,
    pub a_gg: ColorVector,
    pub witness: EdgeSeq,
    /// First index of `profile`; `a(i) = a_ll` below it.
    pub profile_start: i64,
    /// `a(i)` for consecutive `i` from `profile_start`; `a(i) = a_gg` beyond.
    pub profile: Vec<ColorVector>,
    pub r: usize,
    pub steps: Vec<SymStep>,
}

impl BasicSquareConfig {
    /// The carried vector `a(i)`.
    pub fn a_at(&self, i: i64) -> &ColorVector {
        if i < self.profile_start {
            &self.a_ll
        } else {
            self.profile
                .get((i - self.profile_start) as usize)
                .unwrap_or(&self.a_gg)
        }
    }

    /// Checks the defining clauses of a basic square configuration and the
    /// level condition, recomputing every strip witness from scratch.
    pub fn verify(&self) -> Result<()> {
        let r = self.r;
        let ri = r as i64;
        let bad = |what: String| Err(Error::Internal(format!("configuration check: {what}")));
        let m_l = strip_check_seq(&self.l, &self.m, r);
        let n_l = strip_check_seq(&self.l, &self.n, r);
        let k_m = strip_check_seq(&self.m, &self.k, r);
        let k_n = strip_check_seq(&self.n, &self.k, r);
        let k_l = strip_check_seq(&self.l, &self.k, r);
        let (Some(m_l), Some(n_l), Some(k_m), Some(k_n), Some(k_l)) = (m_l, n_l, k_m, k_n, k_l)
        else {
            return bad("a required strip relation fails".into());
        };
        if k_l.witness != self.witness {
            return bad("stored witness differs from the witness of k over l".into());
        }
        let w = &k_l.witness;
        let spans = [&self.l, &self.m, &self.n, &self.k].map(EdgeSeq::span);
        let lo = spans
            .iter()
            .map(|s| s.0)
            .min()
            .unwrap_or(0)
            .min(self.profile_start)
            - 2 * ri;
        let hi = spans
            .iter()
            .map(|s| s.1)
            .max()
            .unwrap_or(0)
            .max(self.profile_start + self.profile.len() as i64)
            + 2 * ri;
        for i in lo..hi {
            let (ai, an) = (self.a_at(i), self.a_at(i + 1));
            let h = (1..ri).filter(|&j| w.get(i - j)).count();
            let ribbon = k_l.positions.contains(&i);
            if !ribbon && ai != an {
                return bad(format!("a changes at {i} without a ribbon"));
            }
            if w.get(i - ri) != w.get(i) && ai.get(h) != 0 {
                return bad(format!("a({i})_{h} is nonzero where the witness changes"));
            }
            if ribbon {
                let d: i64 = if m_l.positions.contains(&i) && n_l.positions.contains(&i) {
                    1
                } else if k_m.positions.contains(&i) && k_n.positions.contains(&i) {
                    -1
                } else {
                    0
                };
                let mut expect = ai.clone();
                let v = expect.0[h] as i64 + d;
                if v < 0 {
                    return bad(format!("a({i})_{h} would become negative"));
                }
                expect.0[h] = v as u64;
                if &expect != an {
                    return bad(format!("a({}) is not a({i}) + {d}·e_{h}", i + 1));
                }
            }
            let hi_level = (0..ri).filter(|&j| w.get(i - 1 - j)).count();
            if (hi_level..r).any(|x| ai.get(x) != 0) {
                return Err(Error::LevelViolation(i));
            }
        }
        if let Some(&first) = k_l.positions.first() {
            if self.a_at(first) != &self.a_ll {
                return bad("a does not start at a_ll".into());
            }
        }
        if let Some(&last) = k_l.positions.last() {
            if self.a_at(last + 1) != &self.a_gg {
                return bad("a does not end at a_gg".into());
            }
        }
        if k_l.positions.is_empty() && self.a_ll != self.a_gg {
            return bad("a_ll differs from a_gg without any ribbon".into());
        }
        Ok(())
    }
}

fn fill_level(fill: bool, r: usize) -> usize {
    if fill {
        r
    } else {
        0
    }
}

/// Spin-preserving symmetric insertion on bit sequences: given
/// `m ≥ l ≤ n` (horizontal `r`-ribbon strips) and `a≪`, computes the unique
/// `k` and `a≫` completing a basic square configuration.
pub fn spin_sym_insert(
    l: &EdgeSeq,
    m: &EdgeSeq,
    n: &EdgeSeq,
    a_ll: &ColorVector,
    r: usize,
) -> Result<BasicSquareConfig> {
    require_r(a_ll, r)?;
    let ri = r as i64;
    let sm = strip_check_seq(l, m, r)
        .ok_or_else(|| Error::PreconditionViolated("m over l is not a horizontal strip".into()))?;
    let sn = strip_check_seq(l, n, r)
        .ok_or_else(|| Error::PreconditionViolated("n over l is not a horizontal strip".into()))?;
    let h_ll = fill_level(l.left_fill(), r);
    if (h_ll..r).any(|h| a_ll.get(h) != 0) {
        return Err(Error::PreconditionViolated(format!(
            "a_ll {a_ll:?} must vanish from level {h_ll} upwards"
        )));
    }
    let spans = [l.span(), m.span(), n.span()];
    let lo = spans.iter().map(|s| s.0).min().unwrap_or(0);
    let hi = spans.iter().map(|s| s.1).max().unwrap_or(0);
    let start = lo - ri;
    let budget = 2 + a_ll.rank() as i64 + sm.count() as i64 + sn.count() as i64;
    let cap = hi + ri + 2 * ri * budget;
    let mut w = BitBuf::from_seq(l, start - ri, cap + ri);
    let mut k = BitBuf::from_seq(l, start - ri, cap + ri);
    let rf = l.right_fill();
    let mut a = a_ll.0.clone();
    let mut profile = Vec::new();
    let mut steps = Vec::new();
    let mut i = start;
    loop {
        if i > cap {
            return Err(Error::Internal(
                "symmetric insertion scan exceeded its window".into(),
            ));
        }
        let level = (0..ri).filter(|&j| w.get(i - 1 - j)).count();
        if (level..r).any(|h| a[h] != 0) {
            return Err(Error::LevelViolation(i));
        }
        profile.push(ColorVector(a.clone()));
        if i >= hi && (i - ri..i).all(|j| w.get(j) == rf) {
            break;
        }
        let h = (1..ri).filter(|&j| w.get(i - j)).count();
        if (w.get(i - ri), l.get(i)) != (true, false) {
            k.set(i - ri, w.get(i - ri));
            w.set(i, l.get(i));
        } else {
            let in_m = sm.positions.contains(&i);
            let in_n = sn.positions.contains(&i);
            let action = if !in_m && !in_n && a[h] == 0 {
                k.set(i - ri, true);
                w.set(i, false);
                SymAction::Skip
            } else {
                k.set(i - ri, false);
                w.set(i, true);
                let d: i8 = match (in_m, in_n) {
                    (true, true) => 1,
                    (false, false) => -1,
                    _ => 0,
                };
                a[h] = (a[h] as i64 + d as i64) as u64;
                SymAction::Ribbon { d }
            };
            steps.push(SymStep {
                i,
                h,
                in_m,
                in_n,
                action,
                a: ColorVector(a.clone()),
            });
        }
        i += 1;
    }
    for j in i - ri..i {
        k.set(j, w.get(j));
    }
    let a_gg = ColorVector(a);
    let h_gg = fill_level(rf, r);
    if (h_gg..r).any(|h| a_gg.get(h) != 0) {
        return Err(Error::Internal(format!(
            "final vector {a_gg:?} does not vanish from level {h_gg} upwards"
        )));
    }
    Ok(BasicSquareConfig {
        l: l.clone(),
        m: m.clone(),
        n: n.clone(),
        k: k.to_seq(),
        a_ll: a_ll.clone(),
        a_gg,
        witness: w.to_seq(),
        profile_start: start,
        profile,
        r,
        steps,
    })
}

/// Spin-preserving symmetric extraction on bit sequences: given
/// `m ≤ k ≥ n` and `a≫`, recovers `l` and `a≪`. Runs the insertion scan on
/// the reversed sequences, then rebuilds the forward configuration and
/// checks that it reproduces `k` and `a≫`.
pub fn spin_sym_extract(
    m: &EdgeSeq,
    n: &EdgeSeq,
    k: &EdgeSeq,
    a_gg: &ColorVector,
    r: usize,
) -> Result<BasicSquareConfig> {
    let rev = spin_sym_insert(&k.reversed(), &n.reversed(), &m.reversed(), a_gg, r)?;
    let l = rev.k.reversed();
    let fwd = spin_sym_insert(&l, m, n, &rev.a_gg, r)?;
    if &fwd.k != k || &fwd.a_gg != a_gg {
        return Err(Error::Internal(
            "reversed insertion does not invert the forward scan".into(),
        ));
    }
    Ok(fwd)
}

/// The symmetric datum on partitions, insertion: `κ` from `(λ, µ, ν, a)`.
pub fn spin_sym_insert_shapes(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &ColorVector,
    r: usize,
) -> Result<(Partition, BasicSquareConfig)> {
    require_r(a, r)?;
    if class_charges(mu, r) != class_charges(nu, r)
        || class_charges(lambda, r) != class_charges(mu, r)
    {
        return Err(Error::CoreMismatch(r));
    }
    let cfg = spin_sym_insert(&lambda.edge(), &mu.edge(), &nu.edge(), a, r)?;
    if !cfg.a_gg.is_zero() {
        return Err(Error::Internal("a_gg must vanish for partitions".into()));
    }
    Ok((Partition::from_edge(&cfg.k)?, cfg))
}

/// The symmetric datum on partitions, extraction: `(a, λ)` from `(µ, ν, κ)`.
pub fn spin_sym_extract_shapes(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
) -> Result<(ColorVector, Partition, BasicSquareConfig)> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    if class_charges(mu, r) != class_charges(nu, r)
        || class_charges(kappa, r) != class_charges(mu, r)
    {
        return Err(Error::CoreMismatch(r));
    }
    let cfg = spin_sym_extract(
        &mu.edge(),
        &nu.edge(),
        &kappa.edge(),
        &ColorVector::zeros(r),
        r,
    )?;
    Ok((cfg.a_ll.clone(), Partition::from_edge(&cfg.l)?, cfg))
}

// ---------------------------------------------------------------------------
// Spin-preserving asymmetric datum
// ---------------------------------------------------------------------------

/// The profile `Δʳ(µ,ν)_k = Edge µ_{k-r} − Edge ν_k` over a window covering
/// every change, with its rises `S′` and falls `T′`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaProfile {
    pub r: usize,
    /// First index of `values`.
    pub start: i64,
    /// `Δʳ_k` for consecutive `k` from `start`; `r` below, `0` beyond.
    pub values: Vec<i64>,
    /// Indices `k` with `edge µ_{k-r} − edge ν_k = −1`.
    pub rises: Vec<i64>,
    /// Indices `k` with `edge µ_{k-r} − edge ν_k = +1`.
    pub falls: Vec<i64>,
    /// True when every value lies in `{0, 1}`.
    pub binary: bool,
}

impl DeltaProfile {
    /// `Δʳ_k` at any index.
    pub fn at(&self, k: i64) -> i64 {
        if k < self.start {
            self.r as i64
        } else {
            self.values
                .get((k - self.start) as usize)
                .copied()
                .unwrap_or(0)
        }
    }
}

/// Computes `Δʳ(µ, ν)`.
pub fn delta_profile(mu: &Partition, nu: &Partition, r: usize) -> DeltaProfile {
    let ri = r as i64;
    let (em, en) = (mu.edge(), nu.edge());
    let (ml, mh) = em.span();
    let (nl, nh) = en.span();
    let start = (ml + ri).min(nl) - 1;
    let end = (mh + ri).max(nh) + 1;
    let big = |e: &EdgeSeq, k: i64| {
        e.big_edge(k)
            .expect("edge sequences of partitions converge") as i64
    };
    let values: Vec<i64> = (start..=end)
        .map(|k| big(&em, k - ri) - big(&en, k))
        .collect();
    let mut rises = Vec::new();
    let mut falls = Vec::new();
    for k in start..=end {
        match em.get(k - ri) as i64 - en.get(k) as i64 {
            -1 => rises.push(k),
            1 => falls.push(k),
            _ => {}
        }
    }
    let binary = values.iter().all(|&v| v == 0 || v == 1);
    DeltaProfile {
        r,
        start,
        values,
        rises,
        falls,
        binary,
    }
}

/// Head sets of the four strips of an asymmetric datum application, in
/// untransposed diagonal indices.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AsymHeads {
    /// Horizontal strip `µ/λ`.
    pub mu_lambda: Vec<i64>,
    /// Vertical strip `ν/λ`.
    pub nu_lambda: Vec<i64>,
    /// Vertical strip `κ/µ`.
    pub kappa_mu: Vec<i64>,
    /// Horizontal strip `κ/ν`.
    pub kappa_nu: Vec<i64>,
}

/// Full result of the asymmetric datum in either direction.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AsymOutcome {
    pub lambda: Partition,
    pub kappa: Partition,
    pub a: ColorVector,
    pub heads: AsymHeads,
    pub delta: DeltaProfile,
    /// Doubled spins: vertical `κ/µ`, horizontal `κ/ν`, horizontal `µ/λ`,
    /// vertical `ν/λ`.
    pub dspin_kappa_mu: usize,
    pub dspin_kappa_nu: usize,
    pub dspin_mu_lambda: usize,
    pub dspin_nu_lambda: usize,
}

impl AsymOutcome {
    /// `dspinᵥ(κ/µ) + dspin(κ/ν) − dspin(µ/λ) − dspinᵥ(ν/λ)`.
    pub fn spin_balance(&self) -> i64 {
        self.dspin_kappa_mu as i64 + self.dspin_kappa_nu as i64
            - self.dspin_mu_lambda as i64
            - self.dspin_nu_lambda as i64
    }
}

fn sorted_heads(s: &RibbonStrip) -> Vec<i64> {
    let mut v = s.heads();
    v.sort_unstable();
    v
}

fn asym_bits(a: &ColorVector, r: usize) -> Result<Vec<bool>> {
    require_r(a, r)?;
    a.0.iter()
        .map(|&x| match x {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(Error::InvalidInput(format!(
                "the asymmetric datum takes a in {{0,1}}^r, got {a:?}"
            ))),
        })
        .collect()
}

fn inadmissible<T>(msg: String) -> Result<T> {
    Err(Error::Inadmissible(msg))
}

fn asym_window(mu: &Partition, nu: &Partition, r: usize, extra: &[i64]) -> (i64, i64) {
    let ri = r as i64;
    let (ml, mh) = mu.edge().span();
    let (nl, nh) = nu.edge().span();
    let lo = (ml + ri)
        .min(nl)
        .min(extra.iter().copied().min().unwrap_or(nl))
        - 1;
    let hi = (mh + ri)
        .max(nh)
        .max(extra.iter().copied().max().unwrap_or(nh))
        + 1;
    (lo, hi)
}

/// Asymmetric datum, insertion: `κ` from `λ`, `µ ≥ʰ λ ≤ᵛ ν` and
/// `a ∈ {0,1}ʳ`, by one ascending pass tracking the level `h = Δʳ_k`.
pub fn spin_asym_insert(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    a: &ColorVector,
    r: usize,
) -> Result<AsymOutcome> {
    let mut bits = asym_bits(a, r)?;
    let sml = require_rstrip(lambda, mu, r, Orientation::Horizontal, "mu over lambda")
        .map_err(|e| Error::Inadmissible(e.to_string()))?;
    let snl = require_rstrip(lambda, nu, r, Orientation::Vertical, "nu over lambda")
        .map_err(|e| Error::Inadmissible(e.to_string()))?;
    let i_ml = sorted_heads(&sml);
    let i_nl = sorted_heads(&snl);
    let all: Vec<i64> = i_ml.iter().chain(&i_nl).copied().collect();
    let (lo, hi) = asym_window(mu, nu, r, &all);
    let ri = r as i64;
    let (em, en) = (mu.edge(), nu.edge());
    let mut h = r;
    let mut i_km = Vec::new();
    let mut i_kn = Vec::new();
    for k in lo..=hi {
        let (in_ml, in_nl) = (i_ml.contains(&k), i_nl.contains(&k));
        match (em.get(k - ri), en.get(k)) {
            (true, false) => {
                if h == 0 {
                    return inadmissible(format!("level would drop below 0 at {k}"));
                }
                if in_ml || in_nl {
                    return inadmissible(format!("a head at {k} sits on a fall of the profile"));
                }
                h -= 1;
                if bits[h] {
                    i_km.push(k);
                    i_kn.push(k);
                }
                bits[h] = false;
            }
            (false, true) => {
                if h >= r || bits[h] {
                    return inadmissible(format!("level {h} is not free at rise {k}"));
                }
                match (in_ml, in_nl) {
                    (true, true) => bits[h] = true,
                    (false, false) => {}
                    _ => {
                        return inadmissible(format!("a rise at {k} has a head in one strip only"))
                    }
                }
                h += 1;
            }
            _ => {
                if in_nl {
                    i_km.push(k);
                }
                if in_ml {
                    i_kn.push(k);
                }
            }
        }
    }
    if h != 0 || bits.iter().any(|&b| b) {
        return inadmissible("the pass does not end at level 0 with a = 0".into());
    }
    let mut kappa = nu.clone();
    for &k in &i_kn {
        kappa = apply_ribbon(&kappa, k, r, Direction::Add)
            .map_err(|_| Error::Inadmissible(format!("no ribbon can be added at {k}")))?;
    }
    finish_asym(
        lambda.clone(),
        mu,
        nu,
        kappa,
        a.clone(),
        r,
        Some((i_km, i_kn)),
    )
}

/// Asymmetric datum, extraction: `(a, λ)` from `µ ≤ᵛ κ ≥ʰ ν`, by the
/// mirror descending pass.
pub fn spin_asym_extract(
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
) -> Result<AsymOutcome> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    let skm = require_rstrip(mu, kappa, r, Orientation::Vertical, "kappa over mu")
        .map_err(|e| Error::Inadmissible(e.to_string()))?;
    let skn = require_rstrip(nu, kappa, r, Orientation::Horizontal, "kappa over nu")
        .map_err(|e| Error::Inadmissible(e.to_string()))?;
    let i_km = sorted_heads(&skm);
    let i_kn = sorted_heads(&skn);
    let all: Vec<i64> = i_km.iter().chain(&i_kn).copied().collect();
    let (lo, hi) = asym_window(mu, nu, r, &all);
    let ri = r as i64;
    let (em, en) = (mu.edge(), nu.edge());
    let mut h = 0usize;
    let mut bits = vec![false; r];
    let mut i_ml = Vec::new();
    let mut i_nl = Vec::new();
    for k in (lo..=hi).rev() {
        let (in_km, in_kn) = (i_km.contains(&k), i_kn.contains(&k));
        match (em.get(k - ri), en.get(k)) {
            (true, false) => {
                if h >= r || bits[h] {
                    return inadmissible(format!("level {h} is not free at fall {k}"));
                }
                match (in_km, in_kn) {
                    (true, true) => bits[h] = true,
                    (false, false) => {}
                    _ => {
                        return inadmissible(format!("a fall at {k} has a head in one strip only"))
                    }
                }
                h += 1;
            }
            (false, true) => {
                if h == 0 {
                    return inadmissible(format!("level would drop below 0 at {k}"));
                }
                if in_km || in_kn {
                    return inadmissible(format!("a head at {k} sits on a rise of the profile"));
                }
                h -= 1;
                if bits[h] {
                    i_ml.push(k);
                    i_nl.push(k);
                }
                bits[h] = false;
            }
            _ => {
                if in_km {
                    i_nl.push(k);
                }
                if in_kn {
                    i_ml.push(k);
                }
            }
        }
    }
    if h != r {
        return inadmissible("the pass does not end at level r".into());
    }
    let a = ColorVector(bits.iter().map(|&b| b as u64).collect());
    let mut lambda = mu.clone();
    i_ml.sort_unstable();
    for &k in i_ml.iter().rev() {
        lambda = apply_ribbon(&lambda, k, r, Direction::Remove)
            .map_err(|_| Error::Inadmissible(format!("no ribbon can be removed at {k}")))?;
    }
    let out = finish_asym(lambda, mu, nu, kappa.clone(), a, r, None)?;
    i_nl.sort_unstable();
    if out.heads.mu_lambda != i_ml || out.heads.nu_lambda != i_nl {
        return inadmissible("recovered strips disagree with the pass".into());
    }
    Ok(out)
}

fn finish_asym(
    lambda: Partition,
    mu: &Partition,
    nu: &Partition,
    kappa: Partition,
    a: ColorVector,
    r: usize,
    expected: Option<(Vec<i64>, Vec<i64>)>,
) -> Result<AsymOutcome> {
    let strip = |lo: &Partition, hi: &Partition, o: Orientation, what: &str| {
        require_rstrip(lo, hi, r, o, what).map_err(|e| Error::Inadmissible(e.to_string()))
    };
    let sml = strip(&lambda, mu, Orientation::Horizontal, "mu over lambda")?;
    let snl = strip(&lambda, nu, Orientation::Vertical, "nu over lambda")?;
    let skm = strip(mu, &kappa, Orientation::Vertical, "kappa over mu")?;
    let skn = strip(nu, &kappa, Orientation::Horizontal, "kappa over nu")?;
    let heads = AsymHeads {
        mu_lambda: sorted_heads(&sml),
        nu_lambda: sorted_heads(&snl),
        kappa_mu: sorted_heads(&skm),
        kappa_nu: sorted_heads(&skn),
    };
    if let Some((i_km, i_kn)) = expected {
        if heads.kappa_mu != i_km || heads.kappa_nu != i_kn {
            return inadmissible("constructed strips disagree with the pass".into());
        }
    }
    Ok(AsymOutcome {
        delta: delta_profile(mu, nu, r),
        dspin_kappa_mu: skm.dspin(),
        dspin_kappa_nu: skn.dspin(),
        dspin_mu_lambda: sml.dspin(),
        dspin_nu_lambda: snl.dspin(),
        lambda,
        kappa,
        a,
        heads,
    })
}

/// Both sides of the spin imbalance identity for an asymmetric quadruple,
/// in doubled units: `dspinᵥ(κ/µ) + dspin(κ/ν) − dspin(µ/λ) − dspinᵥ(ν/λ)`
/// and `2(Σ_{k∈T} Δʳ_{k+1} − Σ_{k∈S} Δʳ_k)` where `S` (resp. `T`) holds the
/// heads shared by `µ/λ` and `ν/λ` (resp. `κ/µ` and `κ/ν`).
pub fn spin_unbalance(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
) -> Option<(i64, i64)> {
    let sml = strip_check(lambda, mu, r, Orientation::Horizontal)?;
    let snl = strip_check(lambda, nu, r, Orientation::Vertical)?;
    let skm = strip_check(mu, kappa, r, Orientation::Vertical)?;
    let skn = strip_check(nu, kappa, r, Orientation::Horizontal)?;
    let lhs = skm.dspin() as i64 + skn.dspin() as i64 - sml.dspin() as i64 - snl.dspin() as i64;
    let delta = delta_profile(mu, nu, r);
    let (hml, hnl, hkm, hkn) = (sml.heads(), snl.heads(), skm.heads(), skn.heads());
    let s: i64 = hml
        .iter()
        .filter(|k| hnl.contains(k))
        .map(|&k| delta.at(k))
        .sum();
    let t: i64 = hkm
        .iter()
        .filter(|k| hkn.contains(k))
        .map(|&k| delta.at(k + 1))
        .sum();
    Some((lhs, 2 * (t - s)))
}

// ---------------------------------------------------------------------------
// Uniform interface
// ---------------------------------------------------------------------------

/// A shape datum usable as the local rule of a growth diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Datum {
    Rsk,
    Burge,
    BurgeEdge,
    Factored { base: Base, r: usize },
    SpinSym { r: usize },
    SpinAsym { r: usize },
}

impl Datum {
    /// Parses the names `rsk`, `burge`, `burge-edge`, `factored-rsk`,
    /// `factored-burge`, `spin-sym`, `spin-asym`.
    pub fn from_name(name: &str, r: usize) -> Result<Datum> {
        Ok(match name {
            "rsk" => Datum::Rsk,
            "burge" => Datum::Burge,
            "burge-edge" => Datum::BurgeEdge,
            "factored-rsk" => Datum::Factored { base: Base::Rsk, r },
            "factored-burge" => Datum::Factored {
                base: Base::Burge,
                r,
            },
            "spin-sym" => Datum::SpinSym { r },
            "spin-asym" => Datum::SpinAsym { r },
            _ => return Err(Error::InvalidInput(format!("unknown datum {name:?}"))),
        })
    }

    /// The name accepted by [`Datum::from_name`].
    pub fn name(&self) -> &'static str {
        match self {
            Datum::Rsk => "rsk",
            Datum::Burge => "burge",
            Datum::BurgeEdge => "burge-edge",
            Datum::Factored {
                base: Base::Rsk, ..
            } => "factored-rsk",
            Datum::Factored {
                base: Base::Burge, ..
            } => "factored-burge",
            Datum::SpinSym { .. } => "spin-sym",
            Datum::SpinAsym { .. } => "spin-asym",
        }
    }

    /// The ribbon length.
    pub fn r(&self) -> usize {
        match *self {
            Datum::Rsk | Datum::Burge | Datum::BurgeEdge => 1,
            Datum::Factored { r, .. } | Datum::SpinSym { r } | Datum::SpinAsym { r } => r,
        }
    }

    /// Orientation of the strips along the columns of a growth diagram
    /// (the `Q` side).
    pub fn q_orientation(&self) -> Orientation {
        match self {
            Datum::SpinAsym { .. } => Orientation::Vertical,
            _ => Orientation::Horizontal,
        }
    }

    /// Largest admissible value of a single component of `a`.
    pub fn max_component(&self) -> Option<u64> {
        match self {
            Datum::SpinAsym { .. } => Some(1),
            _ => None,
        }
    }

    /// Computes `κ` from `(λ, µ, ν, a)`.
    pub fn insert(
        &self,
        lambda: &Partition,
        mu: &Partition,
        nu: &Partition,
        a: &ColorVector,
    ) -> Result<Partition> {
        require_r(a, self.r())?;
        match *self {
            Datum::Rsk => rsk_insert(lambda, mu, nu, a.get(0)),
            Datum::Burge => burge_insert(lambda, mu, nu, a.get(0)),
            Datum::BurgeEdge => burge_edge_insert_untraced(lambda, mu, nu, a, 1),
            Datum::Factored { base, r } => factored_insert(base, r, lambda, mu, nu, a),
            Datum::SpinSym { r } => Ok(spin_sym_insert_shapes(lambda, mu, nu, a, r)?.0),
            Datum::SpinAsym { r } => Ok(spin_asym_insert(lambda, mu, nu, a, r)?.kappa),
        }
    }

    /// Computes `(a, λ)` from `(µ, ν, κ)`.
    pub fn extract(
        &self,
        mu: &Partition,
        nu: &Partition,
        kappa: &Partition,
    ) -> Result<(ColorVector, Partition)> {
        let one = |(a, l): (u64, Partition)| (ColorVector(vec![a]), l);
        match *self {
            Datum::Rsk => rsk_extract(mu, nu, kappa).map(one),
            Datum::Burge => burge_extract(mu, nu, kappa).map(one),
            Datum::BurgeEdge => burge_edge_extract_untraced(mu, nu, kappa, 1),
            Datum::Factored { base, r } => factored_extract(base, r, mu, nu, kappa),
            Datum::SpinSym { r } => {
                spin_sym_extract_shapes(mu, nu, kappa, r).map(|(a, l, _)| (a, l))
            }
            Datum::SpinAsym { r } => spin_asym_extract(mu, nu, kappa, r).map(|o| (o.a, o.lambda)),
        }
    }
}

/// Doubled spins of the four strips around a datum square, for the
/// symmetric data: `κ/µ`, `κ/ν`, `µ/λ`, `ν/λ`, all horizontal.
pub fn square_dspins(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    r: usize,
) -> Option<[usize; 4]> {
    let d = |lo: &Partition, hi: &Partition| {
        strip_check(lo, hi, r, Orientation::Horizontal).map(|s| s.dspin())
    };
    Some([d(mu, kappa)?, d(nu, kappa)?, d(lambda, mu)?, d(lambda, nu)?])
}

/// Groups shapes by their `r`-core; used when enumerating data over boxes.
pub fn group_by_core(shapes: &[Partition], r: usize) -> BTreeMap<Partition, Vec<Partition>> {
    let mut map: BTreeMap<Partition, Vec<Partition>> = BTreeMap::new();
    for s in shapes {
        map.entry(r_quotient(s, r).core)
            .or_default()
            .push(s.clone());
    }
    map
}
