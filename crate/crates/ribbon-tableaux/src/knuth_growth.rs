//! Knuth growth diagrams: matrices with entries in `ℕʳ` correspond to pairs
//! of `r`-ribbon tableaux of equal shape, through any shape datum used as
//! the local rule of every square.
//!
//! The grid has the core along its top row and left column. In the square
//! with top-left corner `(k, l)` the datum links `λ = s[k][l]`,
//! `µ = s[k][l+1]`, `ν = s[k+1][l]`, `κ = s[k+1][l+1]` and the entry
//! `A[k][l]`. The `P` tableau is the bottom row and the `Q` tableau the
//! right column.
//!
//! ```
//! use ribbon_tableaux::knuth_growth::grow;
//! use ribbon_tableaux::partition::Partition;
//! use ribbon_tableaux::shape_data::{ColorVector, Datum};
//!
//! let a = vec![
//!     vec![ColorVector::new(vec![1]), ColorVector::new(vec![0])],
//!     vec![ColorVector::new(vec![1]), ColorVector::new(vec![1])],
//! ];
//! let g = grow(&a, Datum::Rsk, &Partition::empty()).unwrap();
//! assert_eq!(g.p().shape(), &Partition::new(vec![3]).unwrap());
//! assert_eq!(g.p().weight(), vec![2, 1]);
//! assert_eq!(g.q().weight(), vec![1, 2]);
//! ```

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::ribbon::{is_core, strip_check, Orientation};
use crate::shape_data::{ColorVector, Datum};

/// A chain of shapes from an `r`-core, each step an `r`-ribbon strip
/// (possibly empty) of the given orientation.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RibbonTableau {
    pub core: Partition,
    pub r: usize,
    /// `chain[0]` is the core; `chain[i+1] / chain[i]` holds the ribbons
    /// with entry `i`.
    pub chain: Vec<Partition>,
    pub orientation: Orientation,
}

impl RibbonTableau {
    /// Validates and builds a tableau.
    pub fn new(r: usize, chain: Vec<Partition>, orientation: Orientation) -> Result<Self> {
        let core = chain.first().cloned().ok_or_else(|| {
            Error::InvalidInput("a tableau chain needs at least one shape".into())
        })?;
        let t = RibbonTableau {
            core,
            r,
            chain,
            orientation,
        };
        t.validate()?;
        Ok(t)
    }

    /// Checks that the chain starts at the core, that the core is an
    /// `r`-core, and that every step is a strip of the declared orientation.
    pub fn validate(&self) -> Result<()> {
        if self.r == 0 {
            return Err(Error::InvalidInput("r must be positive".into()));
        }
        if self.chain.first() != Some(&self.core) {
            return Err(Error::InvalidInput(
                "the chain must start at the core".into(),
            ));
        }
        if !is_core(&self.core, self.r) {
            return Err(Error::NotACore(self.core.to_string()));
        }
        for w in self.chain.windows(2) {
            if strip_check(&w[0], &w[1], self.r, self.orientation).is_none() {
                return Err(Error::PreconditionViolated(format!(
                    "{}/{} is not an {}-ribbon strip of orientation {:?}",
                    w[1], w[0], self.r, self.orientation
                )));
            }
        }
        Ok(())
    }

    /// The final shape.
    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chains are nonempty")
    }

    /// Number of ribbons added at each step.
    pub fn weight(&self) -> Vec<usize> {
        self.chain
            .windows(2)
            .map(|w| (w[1].size() - w[0].size()) / self.r)
            .collect()
    }

    /// Doubled spin: the sum over steps of the doubled spin of each strip,
    /// measured in the declared orientation.
    pub fn dspin(&self) -> usize {
        self.chain
            .windows(2)
            .map(|w| {
                strip_check(&w[0], &w[1], self.r, self.orientation)
                    .expect("validated tableau")
                    .dspin()
            })
            .sum()
    }

    /// Weight and doubled spin.
    pub fn stats(&self) -> (Vec<usize>, usize) {
        (self.weight(), self.dspin())
    }

    /// The chain with trailing stationary steps removed.
    pub fn trimmed_chain(&self) -> &[Partition] {
        let mut n = self.chain.len();
        while n > 1 && self.chain[n - 1] == self.chain[n - 2] {
            n -= 1;
        }
        &self.chain[..n]
    }
}

impl PartialEq for RibbonTableau {
    fn eq(&self, other: &Self) -> bool {
        self.core == other.core
            && self.r == other.r
            && self.orientation == other.orientation
            && self.trimmed_chain() == other.trimmed_chain()
    }
}

impl Eq for RibbonTableau {}

/// A filled Knuth growth diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnuthGrowth {
    /// `(m+1) × (n+1)` grid of shapes.
    pub shapes: Vec<Vec<Partition>>,
    /// `m × n` matrix of entries.
    pub entries: Vec<Vec<ColorVector>>,
    #[serde(skip)]
    pub datum: Option<Datum>,
}

impl KnuthGrowth {
    fn datum(&self) -> Datum {
        self.datum
            .expect("diagrams built by grow or shrink record their datum")
    }

    /// Number of matrix rows `m`.
    pub fn rows(&self) -> usize {
        self.shapes.len() - 1
    }

    /// Number of matrix columns `n`.
    pub fn cols(&self) -> usize {
        self.shapes[0].len() - 1
    }

    /// The `P` tableau: the bottom row, with horizontal strips.
    pub fn p(&self) -> RibbonTableau {
        let d = self.datum();
        RibbonTableau {
            core: self.shapes[0][0].clone(),
            r: d.r(),
            chain: self.shapes.last().expect("grid is nonempty").clone(),
            orientation: Orientation::Horizontal,
        }
    }

    /// The `Q` tableau: the right column, with strips oriented as the
    /// datum requires.
    pub fn q(&self) -> RibbonTableau {
        let d = self.datum();
        RibbonTableau {
            core: self.shapes[0][0].clone(),
            r: d.r(),
            chain: self
                .shapes
                .iter()
                .map(|row| row.last().expect("rows are nonempty").clone())
                .collect(),
            orientation: d.q_orientation(),
        }
    }

    /// Sum of the colour weights `n(a)` of all entries.
    pub fn colour_weight(&self) -> u64 {
        self.entries.iter().flatten().map(ColorVector::weight).sum()
    }
}

fn check_matrix(a: &[Vec<ColorVector>], datum: Datum) -> Result<(usize, usize)> {
    let m = a.len();
    let n = a.first().map_or(0, Vec::len);
    for row in a {
        if row.len() != n {
            return Err(Error::InvalidInput("matrix rows differ in length".into()));
        }
        for x in row {
            if x.len() != datum.r() {
                return Err(Error::InvalidInput(format!(
                    "entry {x:?} must have r = {} components",
                    datum.r()
                )));
            }
            if let Some(max) = datum.max_component() {
                if x.0.iter().any(|&c| c > max) {
                    return Err(Error::InvalidInput(format!(
                        "entry {x:?} exceeds {max} for datum {}",
                        datum.name()
                    )));
                }
            }
        }
    }
    Ok((m, n))
}

/// Fills the growth diagram of `a` by increasing `(k, l)`.
pub fn grow(a: &[Vec<ColorVector>], datum: Datum, core: &Partition) -> Result<KnuthGrowth> {
    let (m, n) = check_matrix(a, datum)?;
    if !is_core(core, datum.r()) {
        return Err(Error::NotACore(core.to_string()));
    }
    let mut s = vec![vec![core.clone(); n + 1]; m + 1];
    for k in 0..m {
        for l in 0..n {
            s[k + 1][l + 1] = datum.insert(&s[k][l], &s[k][l + 1], &s[k + 1][l], &a[k][l])?;
        }
    }
    Ok(KnuthGrowth {
        shapes: s,
        entries: a.to_vec(),
        datum: Some(datum),
    })
}

/// Rebuilds the growth diagram from `P` (bottom row) and `Q` (right
/// column) by decreasing `(k, l)`.
pub fn shrink(p: &RibbonTableau, q: &RibbonTableau, datum: Datum) -> Result<KnuthGrowth> {
    p.validate()?;
    q.validate()?;
    if p.r != datum.r() || q.r != datum.r() {
        return Err(Error::InvalidInput(
            "tableaux and datum disagree on r".into(),
        ));
    }
    if p.orientation != Orientation::Horizontal || q.orientation != datum.q_orientation() {
        return Err(Error::InvalidInput(format!(
            "datum {} needs P horizontal and Q {:?}",
            datum.name(),
            datum.q_orientation()
        )));
    }
    if p.core != q.core || p.shape() != q.shape() {
        return Err(Error::InvalidInput(
            "P and Q must share their core and final shape".into(),
        ));
    }
    let (m, n) = (q.chain.len() - 1, p.chain.len() - 1);
    let mut s = vec![vec![p.core.clone(); n + 1]; m + 1];
    s[m] = p.chain.clone();
    for (row, shape) in s.iter_mut().zip(&q.chain) {
        row[n] = shape.clone();
    }
    let mut entries = vec![vec![ColorVector::zeros(datum.r()); n]; m];
    for k in (0..m).rev() {
        for l in (0..n).rev() {
            let (a, lambda) = datum.extract(&s[k][l + 1], &s[k + 1][l], &s[k + 1][l + 1])?;
            entries[k][l] = a;
            s[k][l] = lambda;
        }
    }
    if s[0].iter().any(|x| x != &p.core) || s.iter().any(|row| row[0] != p.core) {
        return Err(Error::Internal(
            "shrinking did not reach the core along the border".into(),
        ));
    }
    Ok(KnuthGrowth {
        shapes: s,
        entries,
        datum: Some(datum),
    })
}

/// The transpose of a matrix of colour vectors.
pub fn transpose(a: &[Vec<ColorVector>]) -> Vec<Vec<ColorVector>> {
    let n = a.first().map_or(0, Vec::len);
    (0..n)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Column sums of ranks of a matrix.
pub fn column_ranks(a: &[Vec<ColorVector>]) -> Vec<usize> {
    let n = a.first().map_or(0, Vec::len);
    (0..n)
        .map(|j| a.iter().map(|row| row[j].rank() as usize).sum())
        .collect()
}

/// Row sums of ranks of a matrix.
pub fn row_ranks(a: &[Vec<ColorVector>]) -> Vec<usize> {
    a.iter()
        .map(|row| row.iter().map(|x| x.rank() as usize).sum())
        .collect()
}
