//! Generating polynomials of ribbon placements below a lattice path, and
//! exact truncated checks of the enumerative identities behind the
//! correspondences.
//!
//! A placement problem is a finite bit word `w` extended to the left by a
//! constant fill and to the right by another. A ribbon may be placed at
//! index `i` when the current path has `w_i = 1` and `w_{i+r} = 0`. Placing
//! it turns this pair into `(0, 1)` and contributes `X·Yʰ` with `h` the sum
//! of the current bits strictly between. Successive ribbons must be placed
//! at strictly increasing `i`.
//!
//! ```
//! use ribbon_tableaux::enumeration::{placement_poly, Fills};
//!
//! let w = [0, 1, 0, 0].map(|b| b == 1);
//! let p = placement_poly(&w, 1, Fills::ALPINE, None).unwrap();
//! assert_eq!(p.x_row(1), vec![2]);
//! assert_eq!(p.y_at_one(), vec![1, 2, 2, 1]);
//! ```

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ribbon::{strip_check, strips_above, strips_above_upto, strips_below_upto, Orientation};
use crate::schensted::{chain_dspin, standard_chains};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// One named check of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub info: String,
}

/// The outcome of a verification suite.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub ok: bool,
    pub details: Vec<Check>,
}

impl Report {
    /// An empty, passing report.
    pub fn new() -> Self {
        Report {
            ok: true,
            details: Vec::new(),
        }
    }

    /// Records a check.
    pub fn push(&mut self, name: impl Into<String>, ok: bool, info: impl Into<String>) {
        self.ok &= ok;
        self.details.push(Check {
            name: name.into(),
            ok,
            info: info.into(),
        });
    }

    /// Appends all checks of another report.
    pub fn extend(&mut self, other: Report) {
        self.ok &= other.ok;
        self.details.extend(other.details);
    }
}

// ---------------------------------------------------------------------------
// Two-variable polynomials
// ---------------------------------------------------------------------------

/// A polynomial in `X` and `Y` with integer coefficients, optionally
/// truncated above some degree in `X`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GenPoly {
    terms: BTreeMap<(u32, u32), i64>,
    x_bound: Option<u32>,
}

impl GenPoly {
    /// The zero polynomial.
    pub fn zero(x_bound: Option<u32>) -> Self {
        GenPoly {
            terms: BTreeMap::new(),
            x_bound,
        }
    }

    /// The constant 1.
    pub fn one(x_bound: Option<u32>) -> Self {
        Self::monomial(0, 0, 1, x_bound)
    }

    /// `c·XˣYʸ`, or zero if beyond the bound.
    pub fn monomial(x: u32, y: u32, c: i64, x_bound: Option<u32>) -> Self {
        let mut p = Self::zero(x_bound);
        p.add_term(x, y, c);
        p
    }

    /// Builds a polynomial from its rows: `rows[n]` lists the coefficients
    /// of `XⁿY⁰, XⁿY¹, …`.
    pub fn from_rows(rows: &[Vec<i64>], x_bound: Option<u32>) -> Self {
        let mut p = Self::zero(x_bound);
        for (x, row) in rows.iter().enumerate() {
            for (y, &c) in row.iter().enumerate() {
                p.add_term(x as u32, y as u32, c);
            }
        }
        p
    }

    pub fn x_bound(&self) -> Option<u32> {
        self.x_bound
    }

    /// Adds `c·XˣYʸ`, dropping it beyond the bound and keeping no zero
    /// coefficients.
    pub fn add_term(&mut self, x: u32, y: u32, c: i64) {
        if c == 0 || self.x_bound.is_some_and(|b| x > b) {
            return;
        }
        let e = self.terms.entry((x, y)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(x, y));
        }
    }

    /// The coefficient of `XˣYʸ`.
    pub fn coeff(&self, x: u32, y: u32) -> i64 {
        self.terms.get(&(x, y)).copied().unwrap_or(0)
    }

    /// Nonzero terms `(x, y, c)` sorted by `(x, y)`.
    pub fn terms(&self) -> impl Iterator<Item = (u32, u32, i64)> + '_ {
        self.terms.iter().map(|(&(x, y), &c)| (x, y, c))
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// True when the polynomial is zero.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest power of `X` present.
    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|k| k.0).max()
    }

    /// Coefficients of `XⁿY⁰, XⁿY¹, …` up to the last nonzero one.
    pub fn x_row(&self, n: u32) -> Vec<i64> {
        let top = self
            .terms
            .range((n, 0)..=(n, u32::MAX))
            .map(|(k, _)| k.1)
            .max();
        match top {
            None => Vec::new(),
            Some(t) => (0..=t).map(|y| self.coeff(n, y)).collect(),
        }
    }

    /// The specialisation `Y = 1`, as coefficients of powers of `X`.
    pub fn y_at_one(&self) -> Vec<i64> {
        let mut out = vec![0; self.x_degree().map_or(0, |d| d as usize + 1)];
        for (x, _, c) in self.terms() {
            out[x as usize] += c;
        }
        out
    }

    /// Sum of two polynomials, truncated at the smaller bound.
    pub fn add(&self, other: &GenPoly) -> GenPoly {
        let mut p = Self::zero(min_bound(self.x_bound, other.x_bound));
        for (x, y, c) in self.terms().chain(other.terms()) {
            p.add_term(x, y, c);
        }
        p
    }

    /// Product of two polynomials, truncated at the smaller bound.
    pub fn mul(&self, other: &GenPoly) -> GenPoly {
        let mut p = Self::zero(min_bound(self.x_bound, other.x_bound));
        for (x1, y1, c1) in self.terms() {
            for (x2, y2, c2) in other.terms() {
                p.add_term(x1 + x2, y1 + y2, c1 * c2);
            }
        }
        p
    }

    /// The same polynomial truncated above `X^bound`.
    pub fn truncate(&self, bound: u32) -> GenPoly {
        let mut p = Self::zero(min_bound(self.x_bound, Some(bound)));
        for (x, y, c) in self.terms() {
            p.add_term(x, y, c);
        }
        p
    }

    /// Multiplies by `Yᵏ`.
    pub fn shift_y(&self, k: u32) -> GenPoly {
        let mut p = Self::zero(self.x_bound);
        for (x, y, c) in self.terms() {
            p.add_term(x, y + k, c);
        }
        p
    }

    /// `Π_{h<r} 1/(1 − X·Yʰ)` truncated above `X^bound`: the generating
    /// series of multisets of heights.
    pub fn multiset_series(r: usize, bound: u32) -> GenPoly {
        let mut p = Self::one(Some(bound));
        for h in 0..r as u32 {
            let mut geo = Self::zero(Some(bound));
            for n in 0..=bound {
                geo.add_term(n, n * h, 1);
            }
            p = p.mul(&geo);
        }
        p
    }

    /// Equality of the parts of degree at most `bound` in `X`.
    pub fn agrees_to(&self, other: &GenPoly, bound: u32) -> bool {
        self.truncate(bound).terms == other.truncate(bound).terms
    }
}

fn min_bound(a: Option<u32>, b: Option<u32>) -> Option<u32> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    x: u32,
    y: u32,
    c: i64,
}

#[derive(Serialize, Deserialize)]
struct GenPolyJson {
    terms: Vec<TermJson>,
    x_bound: Option<u32>,
}

impl Serialize for GenPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GenPolyJson {
            terms: self.terms().map(|(x, y, c)| TermJson { x, y, c }).collect(),
            x_bound: self.x_bound,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GenPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = GenPolyJson::deserialize(d)?;
        let mut p = GenPoly::zero(raw.x_bound);
        for t in raw.terms {
            p.add_term(t.x, t.y, t.c);
        }
        Ok(p)
    }
}

// ---------------------------------------------------------------------------
// Placement polynomials
// ---------------------------------------------------------------------------

/// The constant bits extending a word to the left and to the right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fills {
    pub left: bool,
    pub right: bool,
}

impl Fills {
    /// Both ends vertical: a polynomial.
    pub const ALPINE: Fills = Fills {
        left: true,
        right: true,
    };
    /// Both ends horizontal: a power series.
    pub const POLDER: Fills = Fills {
        left: false,
        right: false,
    };
    /// Vertical on the left, horizontal on the right: a power series.
    pub const LEFT_ONE: Fills = Fills {
        left: true,
        right: false,
    };
    /// Horizontal on the left, vertical on the right: a polynomial.
    pub const RIGHT_ONE: Fills = Fills {
        left: false,
        right: true,
    };

    /// True when arbitrarily many ribbons may be placed.
    pub fn is_series(self) -> bool {
        !self.right
    }
}

/// The finite word equivalent to `w` with the given fills for placements
/// of at most `bound` ribbons.
fn extend(w: &[bool], r: usize, fills: Fills, bound: Option<u32>) -> Result<Vec<bool>> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    let mut v = Vec::with_capacity(w.len() + 2 * r);
    if fills.left {
        v.extend(std::iter::repeat(true).take(r));
    }
    v.extend_from_slice(w);
    if !fills.right {
        let b = bound.ok_or(Error::MissingBound)?;
        v.extend(std::iter::repeat(false).take(r * (b as usize + 1)));
    }
    Ok(v)
}

/// The generating polynomial `Σ XⁿYᵗ` over placements of ribbons below the
/// path of `w` extended by `fills`, truncated above `X^x_bound` when a bound
/// is given. A bound is required when the right fill is 0.
pub fn placement_poly(w: &[bool], r: usize, fills: Fills, x_bound: Option<u32>) -> Result<GenPoly> {
    let word = extend(w, r, fills, x_bound)?;
    let limit = x_bound.unwrap_or(u32::MAX);
    let mut memo: HashMap<(Vec<bool>, u32), GenPoly> = HashMap::new();
    let raw = recurse(&word, r, limit, &mut memo);
    let mut p = GenPoly::zero(x_bound);
    for (x, y, c) in raw.terms() {
        p.add_term(x, y, c);
    }
    Ok(p)
}

fn recurse(
    w: &[bool],
    r: usize,
    limit: u32,
    memo: &mut HashMap<(Vec<bool>, u32), GenPoly>,
) -> GenPoly {
    if let Some(p) = memo.get(&(w.to_vec(), limit)) {
        return p.clone();
    }
    let mut result = GenPoly::one(None);
    if limit > 0 {
        for i in 0..w.len().saturating_sub(r) {
            if w[i] && !w[i + r] {
                let mut rest = w[i + 1..].to_vec();
                rest[r - 1] = true;
                let h = rest[..r - 1].iter().filter(|&&b| b).count() as u32;
                let sub = recurse(&rest, r, limit - 1, memo);
                for (x, y, c) in sub.terms() {
                    result.add_term(x + 1, y + h, c);
                }
            }
        }
    }
    memo.insert((w.to_vec(), limit), result.clone());
    result
}

/// Independent enumeration of placements: explores every order of
/// placements on an explicit path, enforcing that the final segment of each
/// ribbon lies on the original path beyond every segment of earlier
/// ribbons, and counts each resulting collection of ribbons once.
pub fn placement_poly_brute(
    w: &[bool],
    r: usize,
    fills: Fills,
    x_bound: Option<u32>,
) -> Result<GenPoly> {
    let word = extend(w, r, fills, x_bound)?;
    let limit = x_bound.unwrap_or(u32::MAX) as usize;
    let mut seen: BTreeSet<Vec<(usize, Vec<bool>)>> = BTreeSet::new();
    let mut stack = vec![(
        word.clone(),
        Vec::<(usize, Vec<bool>)>::new(),
        None::<usize>,
    )];
    while let Some((path, placed, last_seg)) = stack.pop() {
        let mut key = placed.clone();
        key.sort();
        if !seen.insert(key) {
            continue;
        }
        if placed.len() >= limit {
            continue;
        }
        for i in 0..path.len().saturating_sub(r) {
            let head = i + r;
            let on_original = path[head] == word[head] && !word[head];
            let beyond = last_seg.map_or(true, |s| head > s);
            if path[i] && !path[head] && on_original && beyond {
                let form = path[i + 1..head].to_vec();
                let mut next = path.clone();
                next[i] = false;
                next[head] = true;
                let mut p2 = placed.clone();
                p2.push((head, form));
                stack.push((next, p2, Some(head)));
            }
        }
    }
    let mut p = GenPoly::zero(x_bound);
    for coll in seen {
        let t: usize = coll
            .iter()
            .map(|(_, f)| f.iter().filter(|&&b| b).count())
            .sum();
        p.add_term(coll.len() as u32, t as u32, 1);
    }
    Ok(p)
}

/// Parses a word of `0`/`1` characters.
pub fn parse_word(s: &str) -> Result<Vec<bool>> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(Error::InvalidInput(format!(
                "word {s:?} must consist of 0 and 1"
            ))),
        })
        .collect()
}

/// Renders a word as `0`/`1` characters.
pub fn word_string(w: &[bool]) -> String {
    w.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// The reversed word.
pub fn reverse_word(w: &[bool]) -> Vec<bool> {
    w.iter().rev().copied().collect()
}

/// The subword of bits at indices congruent to `i` modulo `r`.
pub fn class_word(w: &[bool], r: usize, i: usize) -> Vec<bool> {
    w.iter().skip(i).step_by(r).copied().collect()
}

fn poly_mul_1d(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Checks the placement claims for a word.
///
/// Each claim becomes one named check in the report. They cover reversal
/// invariance for equal fills, the product formula relating the mixed fills,
/// the factorisation at `Y = 1` and the symmetry of the coefficients.
pub fn check_claims(w: &[bool], r: usize, x_bound: u32) -> Result<Report> {
    let wr = reverse_word(w);
    let mut rep = Report::new();
    let ws = word_string(w);

    let a = placement_poly(w, r, Fills::ALPINE, None)?;
    let b = placement_poly(&wr, r, Fills::ALPINE, None)?;
    rep.push(
        "alpine reversal",
        a == b,
        format!("w={ws} r={r}: {} terms", a.len()),
    );

    let c = placement_poly(w, r, Fills::POLDER, Some(x_bound))?;
    let d = placement_poly(&wr, r, Fills::POLDER, Some(x_bound))?;
    rep.push(
        "polder reversal",
        c == d,
        format!("w={ws} r={r} to X^{x_bound}"),
    );

    let e = placement_poly(w, r, Fills::LEFT_ONE, Some(x_bound))?;
    let f =
        placement_poly(&wr, r, Fills::RIGHT_ONE, None)?.mul(&GenPoly::multiset_series(r, x_bound));
    rep.push(
        "partition product",
        e.agrees_to(&f, x_bound),
        format!("w={ws} r={r} to X^{x_bound}"),
    );

    let mut prod = vec![1i64];
    for i in 0..r {
        let cw = class_word(w, r, i);
        prod = poly_mul_1d(
            &prod,
            &placement_poly(&cw, 1, Fills::ALPINE, None)?.y_at_one(),
        );
    }
    rep.push(
        "class factorisation at Y=1",
        a.y_at_one() == prod,
        format!("{:?}", a.y_at_one()),
    );

    let k = w.iter().filter(|&&x| !x).count() as u32;
    let sym = (0..=k).all(|i| {
        // coef(X^{k-i}) = coef(X^i)·Y^{(r-1)(k-2i)}, both sides times Y^{(r-1)i}
        let pad = |n: u32, row: Vec<i64>| {
            let mut v = vec![0; ((r as u32 - 1) * n) as usize];
            v.extend(row);
            trim(v)
        };
        pad(i, a.x_row(k - i)) == pad(k - i, a.x_row(i))
    });
    rep.push("coefficient symmetry", sym, format!("k={k}"));
    Ok(rep)
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

// ---------------------------------------------------------------------------
// Truncated multivariate series
// ---------------------------------------------------------------------------

/// A polynomial in `q^{1/2}`, `X_0..X_{nx}` and `Y_0..Y_{ny}` with integer
/// coefficients, truncated above a total degree in the `X` variables.
///
/// Exponent vectors are `[q-half-units, x_0, …, y_0, …]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub nx: usize,
    pub ny: usize,
    pub x_degree_bound: u32,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl TruncatedSeries {
    pub fn zero(nx: usize, ny: usize, x_degree_bound: u32) -> Self {
        TruncatedSeries {
            nx,
            ny,
            x_degree_bound,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nx: usize, ny: usize, x_degree_bound: u32) -> Self {
        let mut s = Self::zero(nx, ny, x_degree_bound);
        s.add_term(vec![0; 1 + nx + ny], 1);
        s
    }

    fn x_degree(&self, e: &[u32]) -> u32 {
        e[1..1 + self.nx].iter().sum()
    }

    /// Adds `c` times the monomial with exponent vector `e`.
    pub fn add_term(&mut self, e: Vec<u32>, c: i64) {
        assert_eq!(e.len(), 1 + self.nx + self.ny, "exponent vector length");
        if c == 0 || self.x_degree(&e) > self.x_degree_bound {
            return;
        }
        let v = self.terms.entry(e.clone()).or_insert(0);
        *v += c;
        if *v == 0 {
            self.terms.remove(&e);
        }
    }

    /// Nonzero terms sorted by exponent vector.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, i64)> + '_ {
        self.terms.iter().map(|(e, &c)| (e, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Truncated product.
    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let mut out = Self::zero(
            self.nx,
            self.ny,
            self.x_degree_bound.min(other.x_degree_bound),
        );
        for (e1, c1) in self.terms() {
            for (e2, c2) in other.terms() {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }

    /// Sum.
    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let mut out = Self::zero(
            self.nx,
            self.ny,
            self.x_degree_bound.min(other.x_degree_bound),
        );
        for (e, c) in self.terms().chain(other.terms()) {
            out.add_term(e.clone(), c);
        }
        out
    }

    /// Sets `q = 1`.
    pub fn at_q_one(&self) -> TruncatedSeries {
        let mut out = Self::zero(self.nx, self.ny, self.x_degree_bound);
        for (e, c) in self.terms() {
            let mut f = e.clone();
            f[0] = 0;
            out.add_term(f, c);
        }
        out
    }

    /// The first exponent vector where two series differ, with both
    /// coefficients.
    pub fn first_difference(&self, other: &TruncatedSeries) -> Option<(Vec<u32>, i64, i64)> {
        let keys: BTreeSet<&Vec<u32>> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.into_iter().find_map(|k| {
            let (a, b) = (
                self.terms.get(k).copied().unwrap_or(0),
                other.terms.get(k).copied().unwrap_or(0),
            );
            (a != b).then(|| (k.clone(), a, b))
        })
    }
}

// ---------------------------------------------------------------------------
// Cauchy identities
// ---------------------------------------------------------------------------

/// Which identity [`check_cauchy`] verifies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CauchyKind {
    /// Pairs of horizontal tableaux against `Π 1/(1 − X_iY_j)ʳ`.
    Plain,
    /// Pairs of horizontal tableaux weighted by `q^{spin P + spin Q}`
    /// against `Π_{i,j} Π_{h<r} 1/(1 − qʰX_iY_j)`.
    Spin,
    /// Horizontal `P` and vertical `Q` weighted by `q^{spin P + spin′ Q}`
    /// against `Π_{i,j} Π_{h<r} (1 + qʰX_iY_j)`.
    Asymmetric,
}

/// For each final shape, the series `Σ q^{dspin/2}·Z^{wt}` over tableaux
/// from `core` with `steps` entries of the given orientation, where `Z` is
/// the variable block starting at exponent slot `offset`.
fn tableau_series(
    core: &Partition,
    r: usize,
    steps: usize,
    orientation: Orientation,
    max_ribbons: usize,
    offset: usize,
    proto: &TruncatedSeries,
) -> BTreeMap<Partition, TruncatedSeries> {
    let dims = 1 + proto.nx + proto.ny;
    let mut layer: BTreeMap<Partition, BTreeMap<Vec<u32>, i64>> = BTreeMap::new();
    layer.insert(core.clone(), BTreeMap::from([(vec![0; dims], 1)]));
    for step in 0..steps {
        let mut next: BTreeMap<Partition, BTreeMap<Vec<u32>, i64>> = BTreeMap::new();
        for (shape, terms) in &layer {
            let used = (shape.size() - core.size()) / r;
            for count in 0..=(max_ribbons - used) {
                for bigger in strips_above(shape, r, orientation, count) {
                    let ds = strip_check(shape, &bigger, r, orientation)
                        .expect("enumerated strips are valid")
                        .dspin();
                    let slot = next.entry(bigger).or_default();
                    for (e, &c) in terms {
                        let mut f = e.clone();
                        f[0] += ds as u32;
                        f[offset + step] += count as u32;
                        *slot.entry(f).or_insert(0) += c;
                    }
                }
            }
        }
        layer = next;
    }
    layer
        .into_iter()
        .map(|(shape, terms)| {
            let mut s = TruncatedSeries::zero(proto.nx, proto.ny, proto.x_degree_bound);
            for (e, c) in terms {
                s.add_term(e, c);
            }
            (shape, s)
        })
        .collect()
}

/// Both sides of a Cauchy identity for tableaux from `core`, with `nx`
/// variables `X` on the `P` side and `ny` variables `Y` on the `Q` side,
/// exact up to total degree `degree` in the `X` variables.
pub fn cauchy_sides(
    kind: CauchyKind,
    r: usize,
    core: &Partition,
    nx: usize,
    ny: usize,
    degree: u32,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    if !crate::ribbon::is_core(core, r) {
        return Err(Error::NotACore(core.to_string()));
    }
    let proto = TruncatedSeries::zero(nx, ny, degree);
    let q_orient = match kind {
        CauchyKind::Asymmetric => Orientation::Vertical,
        _ => Orientation::Horizontal,
    };
    let ps = tableau_series(
        core,
        r,
        nx,
        Orientation::Horizontal,
        degree as usize,
        1,
        &proto,
    );
    let qs = tableau_series(core, r, ny, q_orient, degree as usize, 1 + nx, &proto);
    let mut lhs = TruncatedSeries::zero(nx, ny, degree);
    for (shape, p) in &ps {
        if let Some(q) = qs.get(shape) {
            lhs = lhs.add(&p.mul(q));
        }
    }
    // each factor is built in q-half-units: q^h contributes 2h
    let mut rhs = TruncatedSeries::one(nx, ny, degree);
    for i in 0..nx {
        for j in 0..ny {
            for h in 0..r as u32 {
                let mut f = TruncatedSeries::zero(nx, ny, degree);
                let top = match kind {
                    CauchyKind::Asymmetric => 1,
                    _ => degree,
                };
                for n in 0..=top {
                    let mut e = vec![0; 1 + nx + ny];
                    e[0] = 2 * h * n;
                    e[1 + i] = n;
                    e[1 + nx + j] = n;
                    f.add_term(e, 1);
                }
                rhs = rhs.mul(&f);
            }
        }
    }
    if kind == CauchyKind::Plain {
        lhs = lhs.at_q_one();
        rhs = rhs.at_q_one();
    }
    Ok((lhs, rhs))
}

/// Compares both sides of a Cauchy identity coefficientwise.
pub fn check_cauchy(
    kind: CauchyKind,
    r: usize,
    core: &Partition,
    nx: usize,
    ny: usize,
    degree: u32,
) -> Result<Report> {
    let (lhs, rhs) = cauchy_sides(kind, r, core, nx, ny, degree)?;
    let mut rep = Report::new();
    let name = format!("{kind:?} identity r={r} core={core} {nx}x{ny} to degree {degree}");
    match lhs.first_difference(&rhs) {
        None => rep.push(name, true, format!("{} terms agree", lhs.len())),
        Some((e, a, b)) => rep.push(name, false, format!("exponent {e:?}: lhs {a}, rhs {b}")),
    }
    Ok(rep)
}

/// Both sides of the commutation relation between adding a horizontal
/// strip weighted by `X` and removing one weighted by `Y`, started at
/// `lambda` and read at `mu`, exact up to degree `degree` in `X`:
/// `Σ_κ q^{spin κ/λ + spin κ/µ} X^{|κ/λ|} Y^{|κ/µ|}` against
/// `Π_{h<r} 1/(1 − qʰXY) · Σ_ν q^{spin λ/ν + spin µ/ν} Y^{|λ/ν|} X^{|µ/ν|}`,
/// with sizes counted in ribbons.
pub fn commutation_sides(
    r: usize,
    lambda: &Partition,
    mu: &Partition,
    degree: u32,
) -> Result<(TruncatedSeries, TruncatedSeries)> {
    if r == 0 {
        return Err(Error::InvalidInput("r must be positive".into()));
    }
    let h = Orientation::Horizontal;
    let strip = |lo: &Partition, hi: &Partition| {
        strip_check(lo, hi, r, h).map(|s| (s.count() as u32, s.dspin() as u32))
    };
    let mut lhs = TruncatedSeries::zero(1, 1, degree);
    for kappa in strips_above_upto(lambda, r, h, degree as usize) {
        if let (Some((nx, dx)), Some((ny, dy))) = (strip(lambda, &kappa), strip(mu, &kappa)) {
            lhs.add_term(vec![dx + dy, nx, ny], 1);
        }
    }
    let mut below = TruncatedSeries::zero(1, 1, degree);
    for nu in strips_below_upto(lambda, r, h, usize::MAX) {
        if let (Some((ny, dy)), Some((nx, dx))) = (strip(&nu, lambda), strip(&nu, mu)) {
            below.add_term(vec![dx + dy, nx, ny], 1);
        }
    }
    let mut rhs = below;
    for hh in 0..r as u32 {
        let mut f = TruncatedSeries::zero(1, 1, degree);
        for n in 0..=degree {
            f.add_term(vec![2 * hh * n, n, n], 1);
        }
        rhs = rhs.mul(&f);
    }
    Ok((lhs, rhs))
}

/// Checks the commutation relation for every pair of shapes of size at
/// most `max_size`.
pub fn check_commutation(r: usize, max_size: usize, degree: u32) -> Result<Report> {
    let shapes: Vec<Partition> = (0..=max_size).flat_map(Partition::all_of_size).collect();
    let mut rep = Report::new();
    let name = format!("commutation r={r} shapes to size {max_size} to degree {degree}");
    let mut count = 0;
    for lambda in &shapes {
        for mu in &shapes {
            let (lhs, rhs) = commutation_sides(r, lambda, mu, degree)?;
            if let Some((e, a, b)) = lhs.first_difference(&rhs) {
                rep.push(
                    name,
                    false,
                    format!("λ={lambda} µ={mu} exponent {e:?}: lhs {a}, rhs {b}"),
                );
                return Ok(rep);
            }
            count += 1;
        }
    }
    rep.push(name, true, format!("{count} pairs agree"));
    Ok(rep)
}

// ---------------------------------------------------------------------------
// Schensted counts
// ---------------------------------------------------------------------------

/// `Σ q^{dspin P + dspin Q}` over pairs of standard `r`-ribbon chains of
/// equal shape and length `n` from `core`, as coefficients of powers of `q`.
pub fn schensted_q_count(r: usize, core: &Partition, n: usize) -> Result<Vec<i64>> {
    if !crate::ribbon::is_core(core, r) {
        return Err(Error::NotACore(core.to_string()));
    }
    let mut by_shape: BTreeMap<Partition, Vec<i64>> = BTreeMap::new();
    for chain in standard_chains(core, r, n) {
        let d = chain_dspin(&chain, r)?;
        let v = by_shape
            .entry(chain.last().expect("nonempty").clone())
            .or_default();
        if v.len() <= d {
            v.resize(d + 1, 0);
        }
        v[d] += 1;
    }
    let mut total = vec![0];
    for v in by_shape.values() {
        let sq = poly_mul_1d(v, v);
        if total.len() < sq.len() {
            total.resize(sq.len(), 0);
        }
        for (i, c) in sq.into_iter().enumerate() {
            total[i] += c;
        }
    }
    Ok(trim(total))
}

/// `n!·(Σ_{i<r} q^{2i})ⁿ` as coefficients of powers of `q`.
pub fn schensted_q_expected(r: usize, n: usize) -> Vec<i64> {
    let mut base = vec![0; 2 * r - 1];
    for i in 0..r {
        base[2 * i] = 1;
    }
    let fact: i64 = (1..=n as i64).product();
    let mut out = vec![fact];
    for _ in 0..n {
        out = poly_mul_1d(&out, &base);
    }
    out
}

/// Checks the plain and `q`-refined counts of pairs of standard chains.
pub fn schensted_count(r: usize, core: &Partition, n: usize) -> Result<Report> {
    let got = schensted_q_count(r, core, n)?;
    let want = schensted_q_expected(r, n);
    let mut rep = Report::new();
    let plain: i64 = got.iter().sum();
    let expected: i64 = (1..=n as i64).product::<i64>() * (r as i64).pow(n as u32);
    rep.push(
        format!("pairs r={r} n={n}"),
        plain == expected,
        format!("{plain} pairs, n!r^n = {expected}"),
    );
    rep.push(
        format!("q-refined pairs r={r} n={n}"),
        got == want,
        format!("{got:?} against {want:?}"),
    );
    Ok(rep)
}
