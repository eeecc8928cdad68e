//! Exhaustive property suites over all shapes in a box.
//!
//! They check that every shape datum round-trips and satisfies its rank and
//! spin equations. They also compare data that coincide in special cases.
//!
//! Each suite returns a [`Report`] whose failing checks carry the first
//! counterexample found.

use rayon::prelude::*;

use crate::enumeration::Report;
use crate::partition::Partition;
use crate::ribbon::{
    apply_ribbon, list_ribbons, strip_check, strips_above_upto, strips_below_upto, Direction, Mode,
    Orientation,
};
use crate::schensted::{r_corr, CorrTag, CorrValue};
use crate::shape_data::{
    burge_edge_extract_untraced, burge_extract, factored_extract, spin_sym_extract_shapes,
    spin_sym_insert_shapes, Base, ColorVector, Datum,
};

/// Bounds of an exhaustive run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoxBounds {
    pub rows: usize,
    pub cols: usize,
    /// Largest rank of `a` tried in the insertion direction.
    pub max_rank: u64,
}

fn all_strips(
    shape: &Partition,
    r: usize,
    o: Orientation,
    above: bool,
    limit: usize,
) -> Vec<Partition> {
    if above {
        strips_above_upto(shape, r, o, limit)
    } else {
        strips_below_upto(shape, r, o, limit)
    }
}

fn orientations(datum: Datum) -> (Orientation, Orientation) {
    (Orientation::Horizontal, datum.q_orientation())
}

fn colour_vectors(datum: Datum, max_rank: u64) -> Vec<ColorVector> {
    let r = datum.r();
    match datum.max_component() {
        Some(1) => (0..1u64 << r)
            .map(|m| ColorVector::new((0..r).map(|i| (m >> i) & 1).collect()))
            .collect(),
        _ => (0..=max_rank)
            .flat_map(|n| ColorVector::all_of_rank(r, n))
            .collect(),
    }
}

/// Signed spin balance of a square: `dspin(κ/µ) + dspin(κ/ν) − dspin(µ/λ)
/// − dspin(ν/λ)`, each strip measured in the orientation it has in the
/// datum.
pub fn square_balance(
    datum: Datum,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
) -> Option<i64> {
    let r = datum.r();
    let (ph, qo) = orientations(datum);
    let d = |lo: &Partition, hi: &Partition, o: Orientation| {
        strip_check(lo, hi, r, o).map(|s| s.dspin() as i64)
    };
    Some(d(mu, kappa, qo)? + d(nu, kappa, ph)? - d(lambda, mu, ph)? - d(lambda, nu, qo)?)
}

/// Checks one square: the rank equation, and for the spin-preserving data
/// the spin equation `balance = 2·n(a)`.
fn square_equations(
    datum: Datum,
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    kappa: &Partition,
    a: &ColorVector,
) -> Result<(), String> {
    let r = datum.r() as u64;
    let lhs = (kappa.size() + lambda.size()) as u64;
    let rhs = (mu.size() + nu.size()) as u64 + r * a.rank();
    if lhs != rhs {
        return Err(format!(
            "rank equation fails for λ={lambda} µ={mu} ν={nu} κ={kappa} a={a:?}"
        ));
    }
    if matches!(datum, Datum::SpinSym { .. } | Datum::SpinAsym { .. }) {
        let bal = square_balance(datum, lambda, mu, nu, kappa)
            .ok_or_else(|| format!("strips missing around λ={lambda} µ={mu} ν={nu} κ={kappa}"))?;
        if bal != 2 * a.weight() as i64 {
            return Err(format!(
                "spin equation fails for λ={lambda} µ={mu} ν={nu} κ={kappa} a={a:?}: balance {bal}"
            ));
        }
    }
    Ok(())
}

fn first_error(results: Vec<Result<usize, String>>) -> (usize, Option<String>) {
    let mut total = 0;
    for res in results {
        match res {
            Ok(n) => total += n,
            Err(e) => return (total, Some(e)),
        }
    }
    (total, None)
}

fn record(rep: &mut Report, name: String, (count, err): (usize, Option<String>)) {
    match err {
        None => rep.push(name, true, format!("{count} cases")),
        Some(e) => rep.push(name, false, e),
    }
}

/// The shapes of a box with their strips of each orientation, for one
/// ribbon length.
pub struct Neighbourhoods {
    pub r: usize,
    pub bounds: BoxBounds,
    pub shapes: Vec<Partition>,
    /// For each shape, the shapes below it by a horizontal and by a
    /// vertical strip.
    pub below: Vec<[Vec<Partition>; 2]>,
    /// For each shape, the shapes inside the box above it by a horizontal
    /// and by a vertical strip.
    pub above: Vec<[Vec<Partition>; 2]>,
}

fn slot(o: Orientation) -> usize {
    match o {
        Orientation::Horizontal => 0,
        Orientation::Vertical => 1,
    }
}

impl Neighbourhoods {
    pub fn new(r: usize, b: BoxBounds) -> Self {
        let shapes = Partition::all_in_box(b.rows, b.cols);
        let limit = b.rows * b.cols / r;
        let inside = |s: &Partition| s.len() <= b.rows && s.part(0) <= b.cols;
        let both = |p: &Partition, above: bool| {
            [Orientation::Horizontal, Orientation::Vertical].map(|o| {
                all_strips(p, r, o, above, limit)
                    .into_iter()
                    .filter(|s| inside(s))
                    .collect::<Vec<_>>()
            })
        };
        let below = shapes.par_iter().map(|p| both(p, false)).collect();
        let above = shapes.par_iter().map(|p| both(p, true)).collect();
        Neighbourhoods {
            r,
            bounds: b,
            shapes,
            below,
            above,
        }
    }
}

/// Round trips and equations of one datum: every `κ` in the box with every
/// `µ, ν` below it is extracted and reinserted, and every `λ` in the box
/// with every `µ, ν` above it inside the box and every admissible `a` up
/// to the rank bound is inserted and re-extracted.
pub fn datum_suite(datum: Datum, b: BoxBounds) -> Report {
    datum_suite_in(datum, &Neighbourhoods::new(datum.r(), b))
}

/// [`datum_suite`] over precomputed neighbourhoods.
pub fn datum_suite_in(datum: Datum, hood: &Neighbourhoods) -> Report {
    let r = datum.r();
    assert_eq!(r, hood.r, "neighbourhoods built for another ribbon length");
    let (ph, qo) = orientations(datum);
    let mut rep = Report::new();

    let extract: Vec<Result<usize, String>> = (0..hood.shapes.len())
        .into_par_iter()
        .map(|i| {
            let kappa = &hood.shapes[i];
            let mus = &hood.below[i][slot(qo)];
            let nus = &hood.below[i][slot(ph)];
            let mut n = 0;
            for mu in mus {
                for nu in nus {
                    let (a, lambda) = datum
                        .extract(mu, nu, kappa)
                        .map_err(|e| format!("extract µ={mu} ν={nu} κ={kappa}: {e}"))?;
                    let back = datum
                        .insert(&lambda, mu, nu, &a)
                        .map_err(|e| format!("reinsert λ={lambda} µ={mu} ν={nu} a={a:?}: {e}"))?;
                    if &back != kappa {
                        return Err(format!(
                            "µ={mu} ν={nu} κ={kappa} extracts to a={a:?} λ={lambda} which inserts to {back}"
                        ));
                    }
                    square_equations(datum, &lambda, mu, nu, kappa, &a)?;
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    record(
        &mut rep,
        format!("{} extract round trip r={r}", datum.name()),
        first_error(extract),
    );

    let vectors = colour_vectors(datum, hood.bounds.max_rank);
    let insert: Vec<Result<usize, String>> = (0..hood.shapes.len())
        .into_par_iter()
        .map(|i| {
            let lambda = &hood.shapes[i];
            let mus = &hood.above[i][slot(ph)];
            let nus = &hood.above[i][slot(qo)];
            let mut n = 0;
            for mu in mus {
                for nu in nus {
                    for a in &vectors {
                        let kappa = datum
                            .insert(lambda, mu, nu, a)
                            .map_err(|e| format!("insert λ={lambda} µ={mu} ν={nu} a={a:?}: {e}"))?;
                        let (a2, l2) = datum
                            .extract(mu, nu, &kappa)
                            .map_err(|e| format!("re-extract µ={mu} ν={nu} κ={kappa}: {e}"))?;
                        if (&a2, &l2) != (a, lambda) {
                            return Err(format!(
                                "λ={lambda} µ={mu} ν={nu} a={a:?} inserts to κ={kappa} which extracts to a={a2:?} λ={l2}"
                            ));
                        }
                        square_equations(datum, lambda, mu, nu, &kappa, a)?;
                        n += 1;
                    }
                }
            }
            Ok(n)
        })
        .collect();
    record(
        &mut rep,
        format!("{} insert round trip r={r}", datum.name()),
        first_error(insert),
    );
    rep
}

/// The symmetric spin-preserving datum for `r = 1` equals the Burge datum,
/// and for every `r` the edge-sequence Burge pass equals the componentwise
/// Burge datum.
pub fn burge_agreement_suite(r: usize, b: BoxBounds) -> Report {
    burge_agreement_suite_in(&Neighbourhoods::new(r, b))
}

/// [`burge_agreement_suite`] over precomputed neighbourhoods.
pub fn burge_agreement_suite_in(hood: &Neighbourhoods) -> Report {
    let r = hood.r;
    let mut rep = Report::new();
    let res: Vec<Result<usize, String>> = (0..hood.shapes.len())
        .into_par_iter()
        .map(|i| {
            let kappa = &hood.shapes[i];
            let below = &hood.below[i][0];
            let mut n = 0;
            for mu in below {
                for nu in below {
                    let merged = burge_edge_extract_untraced(mu, nu, kappa, r);
                    let factored = factored_extract(Base::Burge, r, mu, nu, kappa);
                    if merged.as_ref().ok() != factored.as_ref().ok() {
                        return Err(format!(
                            "µ={mu} ν={nu} κ={kappa}: edge pass {merged:?}, componentwise {factored:?}"
                        ));
                    }
                    if r == 1 {
                        let sym = spin_sym_extract_shapes(mu, nu, kappa, 1).map(|(a, l, _)| (a.get(0), l));
                        let burge = burge_extract(mu, nu, kappa);
                        if sym.as_ref().ok() != burge.as_ref().ok() {
                            return Err(format!(
                                "µ={mu} ν={nu} κ={kappa}: symmetric datum {sym:?}, Burge {burge:?}"
                            ));
                        }
                    }
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    let name = if r == 1 {
        "symmetric datum equals Burge, edge pass equals columns r=1".to_string()
    } else {
        format!("edge Burge pass equals componentwise Burge r={r}")
    };
    record(&mut rep, name, first_error(res));
    rep
}

/// On squares of single ribbons the symmetric datum acts as the transposed
/// Shimozono-White correspondence: for `µ = ν ≺ κ` it extracts `b_µ(κ)`,
/// and for distinct covers `µ ≠ ν` of `λ` it inserts their common cover.
pub fn covers_suite(r: usize, b: BoxBounds) -> Report {
    let shapes = Partition::all_in_box(b.rows, b.cols);
    let mut rep = Report::new();
    let zero = ColorVector::zeros(r);
    let res: Vec<Result<usize, String>> = shapes
        .par_iter()
        .map(|mu| {
            let mut n = 0;
            for rib in list_ribbons(mu, r, Mode::Addable) {
                let kappa =
                    apply_ribbon(mu, rib.head, r, Direction::Add).map_err(|e| e.to_string())?;
                let (a, lambda, _) = spin_sym_extract_shapes(mu, mu, &kappa, r)
                    .map_err(|e| format!("extract µ=ν={mu} κ={kappa}: {e}"))?;
                let want = r_corr(CorrTag::WS, mu, &kappa, r).map_err(|e| e.to_string())?;
                let got = if a.is_zero() {
                    CorrValue::Shape(lambda.clone())
                } else if a.rank() == 1 && &lambda == mu {
                    CorrValue::Colour(a.0.iter().position(|&x| x == 1).expect("rank one"))
                } else {
                    return Err(format!(
                        "µ=ν={mu} κ={kappa} extracts to rank {} a",
                        a.rank()
                    ));
                };
                if got != want {
                    return Err(format!(
                        "µ=ν={mu} κ={kappa}: datum gives {got:?}, WS gives {want:?}"
                    ));
                }
                n += 1;
            }
            let covers: Vec<Partition> = list_ribbons(mu, r, Mode::Addable)
                .iter()
                .map(|x| apply_ribbon(mu, x.head, r, Direction::Add).expect("addable"))
                .collect();
            for (i, m) in covers.iter().enumerate() {
                for nu in &covers[i + 1..] {
                    let (kappa, _) = spin_sym_insert_shapes(mu, m, nu, &zero, r)
                        .map_err(|e| format!("insert λ={mu} µ={m} ν={nu}: {e}"))?;
                    let ok = kappa.size() == m.size() + r
                        && crate::ribbon::ribbon_between(m, &kappa, r).is_some()
                        && crate::ribbon::ribbon_between(nu, &kappa, r).is_some();
                    if !ok {
                        return Err(format!(
                            "λ={mu} µ={m} ν={nu} inserts to {kappa}, not a common cover"
                        ));
                    }
                    n += 1;
                }
            }
            Ok(n)
        })
        .collect();
    record(
        &mut rep,
        format!("symmetric datum on single ribbons equals WS r={r}"),
        first_error(res),
    );
    rep
}

/// Every data suite for ribbon lengths up to `max_r`.
pub fn full_suite(max_r: usize, b: BoxBounds) -> Report {
    let mut rep = Report::new();
    for r in 1..=max_r {
        let hood = Neighbourhoods::new(r, b);
        if r == 1 {
            for d in [Datum::Rsk, Datum::Burge, Datum::BurgeEdge] {
                rep.extend(datum_suite_in(d, &hood));
            }
        }
        for d in [
            Datum::Factored { base: Base::Rsk, r },
            Datum::Factored {
                base: Base::Burge,
                r,
            },
            Datum::SpinSym { r },
            Datum::SpinAsym { r },
        ] {
            rep.extend(datum_suite_in(d, &hood));
        }
        rep.extend(burge_agreement_suite_in(&hood));
        rep.extend(covers_suite(r, b));
    }
    rep
}
