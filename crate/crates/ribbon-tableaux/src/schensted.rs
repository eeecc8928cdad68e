//! `r`-correspondences on the poset of shapes ordered by adding one
//! `r`-ribbon, and Schensted growth diagrams for `r`-coloured permutations.
//!
//! An `r`-correspondence `b_µ` maps each shape `κ` covering `µ` either to a
//! shape `λ` covered by `µ` or to a colour `e_h`, bijectively. All the
//! correspondences here locate a partner by scanning heads from the ribbon
//! `κ/µ` in one direction:
//!
//! * `RowY` and `ColY` (`r = 1`): the removable square in the next row up,
//!   respectively the next column left.
//! * `Factored` (any `r`): the same search restricted to the position class
//!   of the head, falling back on the colour of that class.
//! * `SW`: the nearest removable ribbon of the same height to the top
//!   right, falling back on `e_h`. `WS` searches to the bottom left.
//! * `BVG` (`r = 2`): `SW` for horizontal dominoes and `WS` for vertical ones.
//!
//! ```
//! use ribbon_tableaux::partition::Partition;
//! use ribbon_tableaux::schensted::{grow_schensted, ColoredPermutation, CorrTag};
//!
//! let a = ColoredPermutation::from_permutation(&[4, 1, 6, 0, 2, 7, 5, 3], 1).unwrap();
//! let g = grow_schensted(&a, CorrTag::RowY, &Partition::empty()).unwrap();
//! assert_eq!(g.p_rows().unwrap(), vec![vec![0, 2, 3], vec![1, 5, 7], vec![4, 6]]);
//! assert_eq!(g.q_rows().unwrap(), vec![vec![0, 2, 5], vec![1, 4, 6], vec![3, 7]]);
//! ```

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ribbon::{apply_ribbon, is_core, list_ribbons, ribbon_between, Direction, Mode, Ribbon};

/// Names of the available `r`-correspondences.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CorrTag {
    #[serde(rename = "row")]
    RowY,
    #[serde(rename = "col")]
    ColY,
    #[serde(rename = "factored-row")]
    FactoredRow,
    #[serde(rename = "factored-col")]
    FactoredCol,
    #[serde(rename = "sw")]
    SW,
    #[serde(rename = "ws")]
    WS,
    #[serde(rename = "bvg")]
    BVG,
}

impl CorrTag {
    /// Every tag.
    pub const ALL: [CorrTag; 7] = [
        CorrTag::RowY,
        CorrTag::ColY,
        CorrTag::FactoredRow,
        CorrTag::FactoredCol,
        CorrTag::SW,
        CorrTag::WS,
        CorrTag::BVG,
    ];

    /// Parses the serialized name of a tag.
    pub fn from_name(name: &str) -> Result<CorrTag> {
        Ok(match name {
            "row" => CorrTag::RowY,
            "col" => CorrTag::ColY,
            "factored-row" => CorrTag::FactoredRow,
            "factored-col" => CorrTag::FactoredCol,
            "sw" => CorrTag::SW,
            "ws" => CorrTag::WS,
            "bvg" => CorrTag::BVG,
            _ => {
                return Err(Error::InvalidInput(format!(
                    "unknown correspondence {name:?}"
                )))
            }
        })
    }

    /// Whether the tag is defined for ribbons of length `r`.
    pub fn supports(self, r: usize) -> bool {
        match self {
            CorrTag::RowY | CorrTag::ColY => r == 1,
            CorrTag::BVG => r == 2,
            _ => r >= 1,
        }
    }

    fn check(self, r: usize) -> Result<()> {
        if self.supports(r) {
            Ok(())
        } else {
            Err(Error::InvalidInput(format!(
                "correspondence {self:?} is not defined for r = {r}"
            )))
        }
    }
}

/// The value `b_µ(κ)`: a shape covered by `µ`, or a colour `e_h`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorrValue {
    Shape(Partition),
    Colour(usize),
}

/// Searches the removable ribbons of `mu` from head `t` upwards
/// (`up = true`) or downwards, returning the first one accepted by `keep`.
fn nearest(
    mu: &Partition,
    r: usize,
    t: i64,
    up: bool,
    keep: impl Fn(&Ribbon) -> bool,
) -> Option<Ribbon> {
    let removable = list_ribbons(mu, r, Mode::Removable);
    if up {
        removable.into_iter().find(|x| x.head > t && keep(x))
    } else {
        removable.into_iter().rev().find(|x| x.head < t && keep(x))
    }
}

/// Evaluates the `r`-correspondence `b_µ` at a shape `κ` covering `µ`.
pub fn r_corr(tag: CorrTag, mu: &Partition, kappa: &Partition, r: usize) -> Result<CorrValue> {
    tag.check(r)?;
    let rib = ribbon_between(mu, kappa, r).ok_or(Error::NotCovering(r))?;
    let (t, h) = (rib.head, rib.height());
    let class = t.rem_euclid(r as i64);
    let (found, fallback) = match tag {
        CorrTag::RowY => (nearest(mu, r, t, true, |_| true), 0),
        CorrTag::ColY => (nearest(mu, r, t, false, |_| true), 0),
        CorrTag::FactoredRow => (
            nearest(mu, r, t, true, |x| x.head.rem_euclid(r as i64) == class),
            class as usize,
        ),
        CorrTag::FactoredCol => (
            nearest(mu, r, t, false, |x| x.head.rem_euclid(r as i64) == class),
            class as usize,
        ),
        CorrTag::SW => (nearest(mu, r, t, true, |x| x.height() == h), h),
        CorrTag::WS => (nearest(mu, r, t, false, |x| x.height() == h), h),
        CorrTag::BVG => (nearest(mu, r, t, h == 0, |x| x.height() == h), h),
    };
    Ok(match found {
        Some(x) => CorrValue::Shape(apply_ribbon(mu, x.head, r, Direction::Remove)?),
        None => CorrValue::Colour(fallback),
    })
}

/// The inverse of [`r_corr`]: the shape `κ` covering `µ` with
/// `b_µ(κ) = value`.
pub fn r_corr_inverse(
    tag: CorrTag,
    mu: &Partition,
    value: &CorrValue,
    r: usize,
) -> Result<Partition> {
    tag.check(r)?;
    match value {
        CorrValue::Colour(h) if *h >= r => {
            return Err(Error::InvalidInput(format!(
                "colour {h} is out of range for r = {r}"
            )))
        }
        CorrValue::Shape(l) if ribbon_between(l, mu, r).is_none() => {
            return Err(Error::NotCovering(r))
        }
        _ => {}
    }
    for rib in list_ribbons(mu, r, Mode::Addable) {
        let kappa = apply_ribbon(mu, rib.head, r, Direction::Add)?;
        if &r_corr(tag, mu, &kappa, r)? == value {
            return Ok(kappa);
        }
    }
    Err(Error::Internal(format!(
        "no shape covering {mu} is sent to {value:?} by {tag:?}"
    )))
}

/// One nonzero entry `A_{row,col} = e_colour` of a coloured permutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Point {
    pub row: usize,
    pub col: usize,
    pub colour: usize,
}

/// An `r`-coloured permutation of `n`, stored as its `n` nonzero entries
/// sorted by row.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ColoredPermutation {
    n: usize,
    r: usize,
    points: Vec<Point>,
}

impl ColoredPermutation {
    /// Validates that the points form a permutation matrix with colours
    /// below `r`.
    pub fn new(n: usize, r: usize, mut points: Vec<Point>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidInput("r must be positive".into()));
        }
        points.sort();
        let mut cols = vec![false; n];
        let ok = points.len() == n
            && points.iter().enumerate().all(|(i, p)| {
                let fresh = p.col < n && !std::mem::replace(&mut cols[p.col], true);
                p.row == i && fresh && p.colour < r
            });
        if !ok {
            return Err(Error::InvalidInput(format!(
                "points do not form an {r}-coloured permutation of {n}"
            )));
        }
        Ok(ColoredPermutation { n, r, points })
    }

    /// The permutation `σ` (with `σ(i)` given at index `i`), all colours 0.
    pub fn from_permutation(sigma: &[usize], r: usize) -> Result<Self> {
        Self::with_colours(sigma, &vec![0; sigma.len()], r)
    }

    /// The permutation `σ` with colour `colours[i]` in row `i`.
    pub fn with_colours(sigma: &[usize], colours: &[usize], r: usize) -> Result<Self> {
        if sigma.len() != colours.len() {
            return Err(Error::InvalidInput(
                "sigma and colours differ in length".into(),
            ));
        }
        let points = sigma
            .iter()
            .zip(colours)
            .enumerate()
            .map(|(row, (&col, &colour))| Point { row, col, colour })
            .collect();
        Self::new(sigma.len(), r, points)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    /// The colour at `(row, col)`, if that entry is nonzero.
    pub fn colour_at(&self, row: usize, col: usize) -> Option<usize> {
        self.points
            .get(row)
            .filter(|p| p.col == col)
            .map(|p| p.colour)
    }

    /// Sum of all colours.
    pub fn colour_sum(&self) -> usize {
        self.points.iter().map(|p| p.colour).sum()
    }

    /// Every `r`-coloured permutation of `n`, in lexicographic order of
    /// `(σ, colours)`.
    pub fn all(n: usize, r: usize) -> Vec<ColoredPermutation> {
        let mut perms: Vec<Vec<usize>> = vec![vec![]];
        for _ in 0..n {
            perms = perms
                .into_iter()
                .flat_map(|p| {
                    (0..n)
                        .filter(|c| !p.contains(c))
                        .map(|c| {
                            let mut q = p.clone();
                            q.push(c);
                            q
                        })
                        .collect::<Vec<_>>()
                })
                .collect();
        }
        let total = r.pow(n as u32);
        let mut out = Vec::with_capacity(perms.len() * total);
        for sigma in &perms {
            for code in 0..total {
                let colours: Vec<usize> = (0..n).map(|i| code / r.pow(i as u32) % r).collect();
                out.push(Self::with_colours(sigma, &colours, r).expect("valid by construction"));
            }
        }
        out
    }
}

impl fmt::Debug for ColoredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ColoredPermutation[")?;
        for (i, p) in self.points.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}^{}", p.col, p.colour)?;
        }
        write!(f, "]")
    }
}

impl<'de> Deserialize<'de> for ColoredPermutation {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            r: usize,
            points: Vec<Point>,
        }
        let raw = Raw::deserialize(d)?;
        ColoredPermutation::new(raw.n, raw.r, raw.points).map_err(serde::de::Error::custom)
    }
}

/// A Schensted growth diagram: shapes on an `(n+1) × (n+1)` grid with the
/// coloured permutation in its squares.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchenstedGrowth {
    pub shapes: Vec<Vec<Partition>>,
    pub matrix: ColoredPermutation,
    pub tag: CorrTag,
    pub core: Partition,
}

impl SchenstedGrowth {
    /// The `P` chain: the bottom row of the grid.
    pub fn p_chain(&self) -> Vec<Partition> {
        self.shapes.last().cloned().unwrap_or_default()
    }

    /// The `Q` chain: the right column of the grid.
    pub fn q_chain(&self) -> Vec<Partition> {
        self.shapes
            .iter()
            .map(|row| row.last().cloned().unwrap_or_default())
            .collect()
    }

    /// For `r = 1`, the standard Young tableau of `P` as rows of entries.
    pub fn p_rows(&self) -> Result<Vec<Vec<usize>>> {
        chain_rows(&self.p_chain())
    }

    /// For `r = 1`, the standard Young tableau of `Q` as rows of entries.
    pub fn q_rows(&self) -> Result<Vec<Vec<usize>>> {
        chain_rows(&self.q_chain())
    }
}

/// Rows of the standard Young tableau recorded by a chain of shapes growing
/// one square at a time: entry `i` sits in the square added at step `i`.
pub fn chain_rows(chain: &[Partition]) -> Result<Vec<Vec<usize>>> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for (i, w) in chain.windows(2).enumerate() {
        if w[1].size() != w[0].size() + 1 || !w[1].contains(&w[0]) {
            return Err(Error::NotCovering(1));
        }
        let row = (0..w[1].len())
            .find(|&j| w[1].part(j) != w[0].part(j))
            .expect("the shapes differ");
        if rows.len() <= row {
            rows.resize(row + 1, Vec::new());
        }
        rows[row].push(i);
    }
    Ok(rows)
}

/// Doubled spin of a standard `r`-ribbon chain: the sum of its ribbon
/// heights.
pub fn chain_dspin(chain: &[Partition], r: usize) -> Result<usize> {
    chain
        .windows(2)
        .map(|w| {
            ribbon_between(&w[0], &w[1], r)
                .map(|x| x.height())
                .ok_or(Error::NotCovering(r))
        })
        .sum()
}

/// Checks that `chain` starts at an `r`-core and grows by one `r`-ribbon
/// per step.
pub fn check_standard_chain(chain: &[Partition], r: usize) -> Result<()> {
    let first = chain
        .first()
        .ok_or_else(|| Error::InvalidInput("a chain needs at least one shape".into()))?;
    if !is_core(first, r) {
        return Err(Error::NotACore(first.to_string()));
    }
    chain_dspin(chain, r).map(|_| ())
}

/// Builds the growth diagram of a coloured permutation by increasing
/// `(k, l)`.
pub fn grow_schensted(
    a: &ColoredPermutation,
    tag: CorrTag,
    core: &Partition,
) -> Result<SchenstedGrowth> {
    let (n, r) = (a.n(), a.r());
    tag.check(r)?;
    if !is_core(core, r) {
        return Err(Error::NotACore(core.to_string()));
    }
    let mut g = vec![vec![core.clone(); n + 1]; n + 1];
    for k in 0..n {
        for l in 0..n {
            let (lam, mu, nu) = (&g[k][l], &g[k][l + 1], &g[k + 1][l]);
            let kappa = if let Some(h) = a.colour_at(k, l) {
                r_corr_inverse(tag, mu, &CorrValue::Colour(h), r)?
            } else if lam == mu {
                nu.clone()
            } else if lam == nu {
                mu.clone()
            } else if mu != nu {
                let rib = ribbon_between(lam, nu, r).ok_or(Error::NotCovering(r))?;
                apply_ribbon(mu, rib.head, r, Direction::Add)?
            } else {
                r_corr_inverse(tag, mu, &CorrValue::Shape(lam.clone()), r)?
            };
            g[k + 1][l + 1] = kappa;
        }
    }
    Ok(SchenstedGrowth {
        shapes: g,
        matrix: a.clone(),
        tag,
        core: core.clone(),
    })
}

/// Rebuilds the growth diagram from its `P` and `Q` chains by decreasing
/// `(k, l)`.
pub fn shrink_schensted(
    p: &[Partition],
    q: &[Partition],
    tag: CorrTag,
    r: usize,
) -> Result<SchenstedGrowth> {
    tag.check(r)?;
    check_standard_chain(p, r)?;
    check_standard_chain(q, r)?;
    if p.len() != q.len() || p.last() != q.last() || p[0] != q[0] {
        return Err(Error::InvalidInput(
            "P and Q must have equal length, final shape and core".into(),
        ));
    }
    let n = p.len() - 1;
    let core = p[0].clone();
    let mut g = vec![vec![core.clone(); n + 1]; n + 1];
    g[n] = p.to_vec();
    for k in 0..=n {
        g[k][n] = q[k].clone();
    }
    let mut points = Vec::with_capacity(n);
    for k in (0..n).rev() {
        for l in (0..n).rev() {
            let (mu, nu, kappa) = (&g[k][l + 1], &g[k + 1][l], &g[k + 1][l + 1]);
            let lam = if kappa == mu {
                nu.clone()
            } else if kappa == nu {
                mu.clone()
            } else if mu != nu {
                let rib = ribbon_between(mu, kappa, r).ok_or(Error::NotCovering(r))?;
                apply_ribbon(nu, rib.head, r, Direction::Remove)?
            } else {
                match r_corr(tag, mu, kappa, r)? {
                    CorrValue::Shape(l) => l,
                    CorrValue::Colour(colour) => {
                        points.push(Point {
                            row: k,
                            col: l,
                            colour,
                        });
                        mu.clone()
                    }
                }
            };
            g[k][l] = lam;
        }
    }
    if g.iter().any(|row| row[0] != core) || g[0].iter().any(|s| s != &core) {
        return Err(Error::Internal(
            "shrinking did not reach the core on the border".into(),
        ));
    }
    Ok(SchenstedGrowth {
        shapes: g,
        matrix: ColoredPermutation::new(n, r, points)?,
        tag,
        core,
    })
}

/// Every standard `r`-ribbon chain of length `n` from `core`.
pub fn standard_chains(core: &Partition, r: usize, n: usize) -> Vec<Vec<Partition>> {
    let mut out = vec![vec![core.clone()]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|c| {
                let last = c.last().expect("chains are nonempty").clone();
                list_ribbons(&last, r, Mode::Addable)
                    .into_iter()
                    .map(move |x| {
                        let mut d = c.clone();
                        d.push(apply_ribbon(&last, x.head, r, Direction::Add).expect("addable"));
                        d
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn empty_shape_sends_every_ribbon_to_its_height() {
        for rib in list_ribbons(&Partition::empty(), 3, Mode::Addable) {
            let k = apply_ribbon(&Partition::empty(), rib.head, 3, Direction::Add).unwrap();
            for tag in [CorrTag::SW, CorrTag::WS] {
                assert_eq!(
                    r_corr(tag, &Partition::empty(), &k, 3).unwrap(),
                    CorrValue::Colour(rib.height())
                );
            }
        }
    }

    #[test]
    fn row_correspondence_bumps_to_the_row_above() {
        let v = r_corr(CorrTag::RowY, &p(&[2, 1]), &p(&[2, 1, 1]), 1).unwrap();
        assert_eq!(v, CorrValue::Shape(p(&[2])));
        let v = r_corr(CorrTag::RowY, &p(&[2, 1]), &p(&[3, 1]), 1).unwrap();
        assert_eq!(v, CorrValue::Colour(0));
    }

    #[test]
    fn rejects_non_cover() {
        assert_eq!(
            r_corr(CorrTag::SW, &p(&[1]), &p(&[3]), 1),
            Err(Error::NotCovering(1))
        );
    }

    #[test]
    fn empty_permutation_gives_single_shape() {
        let a = ColoredPermutation::new(0, 2, vec![]).unwrap();
        let g = grow_schensted(&a, CorrTag::SW, &p(&[1])).unwrap();
        assert_eq!(g.shapes, vec![vec![p(&[1])]]);
    }

    #[test]
    fn rejects_repeated_column() {
        let pts = vec![
            Point {
                row: 0,
                col: 0,
                colour: 0,
            },
            Point {
                row: 1,
                col: 0,
                colour: 0,
            },
        ];
        assert!(ColoredPermutation::new(2, 1, pts).is_err());
    }
}
