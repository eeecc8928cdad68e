//! Partitions, their edge sequences, cumulative edge profiles, transposition
//! and the ordinary (`r = 1`) strip relations.
//!
//! The edge sequence of a partition `λ` has a bit 1 exactly at the indices
//! `λ_j - j - 1` for `j ≥ 0`. Index `i` is the content (column minus row) of
//! the diagonal crossed between bits `i - 1` and `i`, so adding a square of
//! content `k` turns the pair `(w_{k-1}, w_k)` from `(1, 0)` into `(0, 1)`.
//!
//! ```
//! use ribbon_tableaux::partition::Partition;
//!
//! let la = Partition::new(vec![6, 4, 3, 3, 1]).unwrap();
//! assert_eq!(la.edge().bit_string(-7, 8), "110100110100100");
//! assert_eq!(Partition::from_edge(&la.edge()).unwrap(), la);
//! ```

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing finite sequence of positive integers.
///
/// Trailing zeros are trimmed on construction, so structural equality is
/// equality of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting sequences that increase anywhere.
    /// Zero parts are allowed only at the end and are removed.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Part `i`, reading absent parts as 0.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    /// True for the empty partition.
    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of squares in the diagram.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The conjugate partition, whose parts are the column lengths.
    pub fn transpose(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// True when the diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }

    /// The edge sequence: left fill 1, right fill 0, bit 1 at `λ_j - j - 1`.
    pub fn edge(&self) -> EdgeSeq {
        let len = self.len() as i64;
        let hi = self.part(0) as i64;
        let mut bits = vec![false; (hi + len) as usize];
        for (j, &p) in self.parts.iter().enumerate() {
            let i = p as i64 - j as i64 - 1;
            bits[(i + len) as usize] = true;
        }
        EdgeSeq::new(-len, bits, true, false)
    }

    /// Inverse of [`Partition::edge`].
    ///
    /// Fails with [`Error::FillMismatch`] unless the fills are `(1, 0)` and
    /// with [`Error::ChargeMismatch`] if the sequence is a shifted edge
    /// sequence (see [`EdgeSeq::charge`]).
    pub fn from_edge(e: &EdgeSeq) -> Result<Partition> {
        let charge = e.charge()?;
        if charge != 0 {
            return Err(Error::ChargeMismatch(charge));
        }
        let (lo, hi) = e.span();
        let mut parts = Vec::new();
        for i in (lo..hi).rev() {
            if e.get(i) {
                let j = parts.len() as i64;
                parts.push((i + j + 1) as usize);
            }
        }
        Partition::new(parts)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(n)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions whose diagram fits in `rows` rows and `cols` columns.
    pub fn all_in_box(rows: usize, cols: usize) -> Vec<Partition> {
        fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition { parts: cur.clone() });
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                rec(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(rows, cols, &mut Vec::new(), &mut out);
        out.sort();
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// True iff `mu / lambda` is a horizontal strip: `µ_{i+1} ≤ λ_i ≤ µ_i`.
pub fn is_horizontal_strip(lambda: &Partition, mu: &Partition) -> bool {
    let n = lambda.len().max(mu.len());
    (0..n).all(|i| mu.part(i + 1) <= lambda.part(i) && lambda.part(i) <= mu.part(i))
}

/// True iff `mu / lambda` is a vertical strip, tested on transposes.
pub fn is_vertical_strip(lambda: &Partition, mu: &Partition) -> bool {
    is_horizontal_strip(&lambda.transpose(), &mu.transpose())
}

/// An eventually constant doubly infinite bit sequence.
///
/// The value at index `i` is `bits[i - offset]` inside the stored window,
/// `left_fill` below it and `right_fill` above it. Values are kept in
/// canonical form: the window never starts with a bit equal to the left
/// fill nor ends with a bit equal to the right fill, and when it is empty
/// and both fills agree the offset is 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdgeSeq {
    offset: i64,
    bits: Vec<bool>,
    left_fill: bool,
    right_fill: bool,
}

impl EdgeSeq {
    /// Builds a sequence from a window and its fills, in canonical form.
    pub fn new(offset: i64, bits: Vec<bool>, left_fill: bool, right_fill: bool) -> Self {
        let mut e = EdgeSeq {
            offset,
            bits,
            left_fill,
            right_fill,
        };
        e.canonicalise();
        e
    }

    /// The sequence that is `fill` everywhere.
    pub fn constant(fill: bool) -> Self {
        EdgeSeq::new(0, Vec::new(), fill, fill)
    }

    /// Builds the sequence equal to `f` on `[lo, hi)` and to the fills outside.
    pub fn from_fn(
        lo: i64,
        hi: i64,
        left_fill: bool,
        right_fill: bool,
        f: impl Fn(i64) -> bool,
    ) -> Self {
        let bits = (lo..hi.max(lo)).map(f).collect();
        EdgeSeq::new(lo, bits, left_fill, right_fill)
    }

    fn canonicalise(&mut self) {
        let lead = self
            .bits
            .iter()
            .take_while(|&&b| b == self.left_fill)
            .count();
        self.bits.drain(..lead);
        self.offset += lead as i64;
        while self.bits.last() == Some(&self.right_fill) {
            self.bits.pop();
        }
        if self.bits.is_empty() && self.left_fill == self.right_fill {
            self.offset = 0;
        }
    }

    /// The bit at index `i`.
    pub fn get(&self, i: i64) -> bool {
        if i < self.offset {
            self.left_fill
        } else {
            let j = (i - self.offset) as usize;
            self.bits.get(j).copied().unwrap_or(self.right_fill)
        }
    }

    /// Index of the first stored bit.
    pub fn offset(&self) -> i64 {
        self.offset
    }

    /// The stored window.
    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// Value below the window.
    pub fn left_fill(&self) -> bool {
        self.left_fill
    }

    /// Value above the window.
    pub fn right_fill(&self) -> bool {
        self.right_fill
    }

    /// The half-open window `[lo, hi)` outside of which the sequence equals
    /// its fills.
    pub fn span(&self) -> (i64, i64) {
        (self.offset, self.offset + self.bits.len() as i64)
    }

    /// The bits on `[lo, hi)` as a string of `0` and `1`.
    pub fn bit_string(&self, lo: i64, hi: i64) -> String {
        (lo..hi)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    /// The reversal `i ↦ s_{-1-i}`; the fills trade places.
    pub fn reversed(&self) -> Self {
        let (lo, hi) = self.span();
        let bits = self.bits.iter().rev().copied().collect();
        EdgeSeq::new(-hi, bits, self.right_fill, self.left_fill).with_offset_hint(-lo)
    }

    // Reversal of a window with unequal fills and no bits keeps the switch
    // point: all bits below `-lo` come from above `lo - 1`.
    fn with_offset_hint(mut self, switch: i64) -> Self {
        if self.bits.is_empty() && self.left_fill != self.right_fill {
            self.offset = switch;
        }
        self
    }

    /// Bitwise complement, fills included.
    pub fn complemented(&self) -> Self {
        EdgeSeq::new(
            self.offset,
            self.bits.iter().map(|b| !b).collect(),
            !self.left_fill,
            !self.right_fill,
        )
    }

    /// Complement of the reversal. For partitions this is the edge sequence
    /// of the transposed shape.
    pub fn transposed(&self) -> Self {
        self.reversed().complemented()
    }

    /// The shifted sequence `i ↦ s_{i+by}`.
    pub fn shifted(&self, by: i64) -> Self {
        let mut e = self.clone();
        e.offset -= by;
        if e.bits.is_empty() && e.left_fill == e.right_fill {
            e.offset = 0;
        }
        e
    }

    /// A copy with the bit at `i` set to `value`.
    pub fn with_bit(&self, i: i64, value: bool) -> Self {
        self.with_bits(&[(i, value)])
    }

    /// A copy with each listed bit set to its value.
    pub fn with_bits(&self, changes: &[(i64, bool)]) -> Self {
        let (mut lo, mut hi) = self.span();
        for &(i, _) in changes {
            lo = lo.min(i);
            hi = hi.max(i + 1);
        }
        let mut bits = Vec::with_capacity((hi - lo) as usize);
        bits.extend((lo..hi).map(|j| self.get(j)));
        for &(i, v) in changes {
            bits[(i - lo) as usize] = v;
        }
        EdgeSeq::new(lo, bits, self.left_fill, self.right_fill)
    }

    /// The cumulative profile `Edge_k = Σ_{i ≥ k} s_i`.
    pub fn big_edge(&self, k: i64) -> Result<u64> {
        if self.right_fill {
            return Err(Error::Divergent);
        }
        let (lo, hi) = self.span();
        let mut total = 0u64;
        if self.left_fill && k < lo {
            total += (lo - k) as u64;
        }
        for i in k.max(lo)..hi {
            if self.get(i) {
                total += 1;
            }
        }
        Ok(total)
    }

    /// For fills `(1, 0)`: the number of ones at nonnegative indices minus
    /// the number of zeros at negative indices. Edge sequences of
    /// partitions are exactly the sequences of charge 0.
    pub fn charge(&self) -> Result<i64> {
        if !(self.left_fill && !self.right_fill) {
            return Err(Error::FillMismatch {
                left: self.left_fill as u8,
                right: self.right_fill as u8,
            });
        }
        let (lo, hi) = self.span();
        let mut c = 0i64;
        for i in lo.min(0)..hi.max(0) {
            match (i >= 0, self.get(i)) {
                (true, true) => c += 1,
                (false, false) => c -= 1,
                _ => {}
            }
        }
        Ok(c)
    }
}

impl fmt::Debug for EdgeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bits: String = self
            .bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect();
        write!(
            f,
            "EdgeSeq({}…|{}:{}|…{})",
            self.left_fill as u8, self.offset, bits, self.right_fill as u8
        )
    }
}

#[derive(Serialize, Deserialize)]
struct EdgeSeqJson {
    offset: i64,
    bits: String,
    left_fill: u8,
    right_fill: u8,
}

impl Serialize for EdgeSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeSeqJson {
            offset: self.offset,
            bits: self
                .bits
                .iter()
                .map(|&b| if b { '1' } else { '0' })
                .collect(),
            left_fill: self.left_fill as u8,
            right_fill: self.right_fill as u8,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeSeq {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let j = EdgeSeqJson::deserialize(d)?;
        let fill = |v: u8| match v {
            0 => Ok(false),
            1 => Ok(true),
            _ => Err(D::Error::custom("fills must be 0 or 1")),
        };
        let bits = j
            .bits
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(D::Error::custom("bits must be a string of 0 and 1")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(EdgeSeq::new(
            j.offset,
            bits,
            fill(j.left_fill)?,
            fill(j.right_fill)?,
        ))
    }
}

/// A mutable dense bit window used by the scanning algorithms. Reads below
/// the window return `below`, reads above return `above`; writes must land
/// inside the window.
#[derive(Clone)]
pub(crate) struct BitBuf {
    lo: i64,
    data: Vec<bool>,
    below: bool,
    above: bool,
}

impl BitBuf {
    pub(crate) fn from_seq(e: &EdgeSeq, lo: i64, hi: i64) -> Self {
        BitBuf {
            lo,
            data: (lo..hi).map(|i| e.get(i)).collect(),
            below: e.left_fill(),
            above: e.right_fill(),
        }
    }

    pub(crate) fn get(&self, i: i64) -> bool {
        if i < self.lo {
            self.below
        } else {
            self.data
                .get((i - self.lo) as usize)
                .copied()
                .unwrap_or(self.above)
        }
    }

    pub(crate) fn set(&mut self, i: i64, v: bool) {
        let j = i - self.lo;
        assert!(
            j >= 0 && (j as usize) < self.data.len(),
            "bit buffer write at {i} outside its window"
        );
        self.data[j as usize] = v;
    }

    pub(crate) fn to_seq(&self) -> EdgeSeq {
        EdgeSeq::new(self.lo, self.data.clone(), self.below, self.above)
    }
}
