//! Placement polynomials against a direct simulation of placements.
//!
//! The truncated identities and Schensted counts are checked here too.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use ribbon_tableaux::enumeration::{
    cauchy_sides, check_cauchy, check_claims, check_commutation, commutation_sides, parse_word,
    placement_poly, placement_poly_brute, reverse_word, schensted_count, schensted_q_count,
    word_string, CauchyKind, Fills, GenPoly, TruncatedSeries,
};
use ribbon_tableaux::partition::Partition;
use ribbon_tableaux::ribbon::is_core;
use ribbon_tableaux::Error;

/// Every run of placements at strictly increasing positions, simulated on
/// the extended word.
fn simulate(w: &[bool], r: usize, fills: Fills, bound: Option<u32>) -> GenPoly {
    let mut word = Vec::new();
    if fills.left {
        word.extend(vec![true; r]);
    }
    word.extend_from_slice(w);
    if !fills.right {
        word.extend(vec![false; r * (bound.unwrap() as usize + 1)]);
    }
    let mut out = GenPoly::zero(bound);
    fn go(
        path: &mut Vec<bool>,
        from: usize,
        r: usize,
        n: u32,
        y: u32,
        bound: Option<u32>,
        out: &mut GenPoly,
    ) {
        out.add_term(n, y, 1);
        if bound == Some(n) {
            return;
        }
        for i in from..path.len().saturating_sub(r) {
            if path[i] && !path[i + r] {
                let h = path[i + 1..i + r].iter().filter(|&&b| b).count() as u32;
                path[i] = false;
                path[i + r] = true;
                go(path, i + 1, r, n + 1, y + h, bound, out);
                path[i] = true;
                path[i + r] = false;
            }
        }
    }
    go(&mut word, 0, r, 0, 0, bound, &mut out);
    out
}

fn random_word(rng: &mut StdRng, len: usize) -> Vec<bool> {
    (0..len).map(|_| rng.gen_bool(0.4)).collect()
}

const ALL_FILLS: [Fills; 4] = [
    Fills::ALPINE,
    Fills::POLDER,
    Fills::LEFT_ONE,
    Fills::RIGHT_ONE,
];

#[test]
fn recursion_matches_simulation_and_brute_force() {
    let mut rng = StdRng::seed_from_u64(41);
    for _ in 0..150 {
        let r = rng.gen_range(1..=3);
        let len = rng.gen_range(0..=9);
        let w = random_word(&mut rng, len);
        for fills in ALL_FILLS {
            let bound = if fills.is_series() {
                Some(rng.gen_range(0..=3))
            } else {
                None
            };
            let got = placement_poly(&w, r, fills, bound).unwrap();
            assert_eq!(
                got,
                simulate(&w, r, fills, bound),
                "w={} r={r} {fills:?}",
                word_string(&w)
            );
            assert_eq!(got, placement_poly_brute(&w, r, fills, bound).unwrap());
        }
    }
}

#[test]
fn single_cells_below_a_short_path() {
    let w = parse_word("0100").unwrap();
    let p = placement_poly(&w, 1, Fills::ALPINE, None).unwrap();
    assert_eq!(p.y_at_one(), vec![1, 2, 2, 1]);
    assert_eq!(p.x_degree(), Some(3));
    assert!(p.terms().all(|(_, y, _)| y == 0));
}

#[test]
fn claims_hold_on_random_words() {
    let mut rng = StdRng::seed_from_u64(43);
    for _ in 0..60 {
        let r = rng.gen_range(1..=4);
        let len = rng.gen_range(0..=12);
        let w = random_word(&mut rng, len);
        let rep = check_claims(&w, r, 3).unwrap();
        assert!(rep.ok, "w={} r={r}: {:?}", word_string(&w), rep.details);
    }
}

#[test]
fn reversal_is_not_a_symmetry_of_mixed_fills() {
    let w = parse_word("0011").unwrap();
    let a = placement_poly(&w, 1, Fills::RIGHT_ONE, None).unwrap();
    let b = placement_poly(&reverse_word(&w), 1, Fills::RIGHT_ONE, None).unwrap();
    assert_ne!(a, b);
}

/// Number of multisets of `n` heights below `r` with sum `t`.
fn multisets(n: u32, t: u32, r: u32) -> i64 {
    fn go(n: u32, t: u32, max: u32) -> i64 {
        if n == 0 {
            return (t == 0) as i64;
        }
        (0..=max.min(t)).map(|h| go(n - 1, t - h, h)).sum()
    }
    go(n, t, r - 1)
}

#[test]
fn multiset_series_counts_multisets_of_heights() {
    for r in 1..=4u32 {
        let s = GenPoly::multiset_series(r as usize, 5);
        for n in 0..=5 {
            for t in 0..=5 * r {
                assert_eq!(s.coeff(n, t), multisets(n, t, r), "r={r} n={n} t={t}");
            }
        }
    }
}

#[test]
fn missing_bounds_and_bad_words_are_errors() {
    assert!(matches!(
        placement_poly(&[true], 1, Fills::POLDER, None),
        Err(Error::MissingBound)
    ));
    assert!(placement_poly(&[true], 0, Fills::ALPINE, None).is_err());
    assert!(parse_word("0120").is_err());
}

#[test]
fn truncated_series_arithmetic() {
    // (1 + x)(1 + y) with x of degree one and a degree bound of 1
    let mut a = TruncatedSeries::one(1, 1, 1);
    a.add_term(vec![0, 1, 0], 1);
    let mut b = TruncatedSeries::one(1, 1, 1);
    b.add_term(vec![0, 0, 1], 1);
    let c = a.mul(&b);
    assert_eq!(c.len(), 4);
    let mut sq = c.mul(&c);
    assert_eq!(
        sq.terms()
            .find(|(e, _)| **e == vec![0, 1, 2])
            .map(|(_, c)| c),
        Some(2)
    );
    assert!(sq.terms().all(|(e, _)| e[1] <= 1));
    sq.add_term(vec![3, 0, 0], 5);
    assert_eq!(
        sq.at_q_one()
            .terms()
            .find(|(e, _)| **e == vec![0, 0, 0])
            .map(|(_, c)| c),
        Some(6)
    );
    assert_eq!(sq.first_difference(&sq), None);
}

fn small_cores(r: usize) -> Vec<Partition> {
    (0..=3)
        .flat_map(Partition::all_of_size)
        .filter(|c| is_core(c, r))
        .collect()
}

#[test]
fn cauchy_identity_for_single_cells() {
    for core in small_cores(1) {
        let rep = check_cauchy(CauchyKind::Plain, 1, &core, 2, 2, 3).unwrap();
        assert!(rep.ok, "{:?}", rep.details);
    }
}

#[test]
fn plain_cauchy_identity_for_ribbons() {
    for r in 2..=3 {
        let rep = check_cauchy(CauchyKind::Plain, r, &Partition::empty(), 2, 2, 3).unwrap();
        assert!(rep.ok, "{:?}", rep.details);
    }
}

#[test]
fn spin_cauchy_identity() {
    for r in 2..=3 {
        for core in small_cores(r).into_iter().take(2) {
            let rep = check_cauchy(CauchyKind::Spin, r, &core, 2, 2, 3).unwrap();
            assert!(rep.ok, "{:?}", rep.details);
        }
    }
}

#[test]
fn asymmetric_cauchy_identity() {
    for core in small_cores(2).into_iter().take(2) {
        let rep = check_cauchy(CauchyKind::Asymmetric, 2, &core, 2, 2, 3).unwrap();
        assert!(rep.ok, "{:?}", rep.details);
    }
    let rep = check_cauchy(CauchyKind::Asymmetric, 3, &Partition::empty(), 1, 2, 3).unwrap();
    assert!(rep.ok, "{:?}", rep.details);
}

/// The sides are not trivially equal: at degree one with a single pair of
/// variables both equal `1 + (Σ_{h<r} q^h) X Y`.
#[test]
fn spin_sides_at_degree_one() {
    let (lhs, rhs) = cauchy_sides(CauchyKind::Spin, 3, &Partition::empty(), 1, 1, 1).unwrap();
    assert_eq!(lhs, rhs);
    let got: Vec<(Vec<u32>, i64)> = lhs.terms().map(|(e, c)| (e.clone(), c)).collect();
    assert_eq!(
        got,
        vec![
            (vec![0, 0, 0], 1),
            (vec![0, 1, 1], 1),
            (vec![2, 1, 1], 1),
            (vec![4, 1, 1], 1)
        ]
    );
}

#[test]
fn commutation_relation_for_ribbons() {
    for r in 1..=3 {
        let rep = check_commutation(r, 7, 3).unwrap();
        assert!(rep.ok, "{:?}", rep.details);
    }
}

#[test]
fn commutation_from_the_empty_shape() {
    let e = Partition::empty();
    let (lhs, rhs) = commutation_sides(2, &e, &e, 2).unwrap();
    assert_eq!(lhs, rhs);
    // from the empty shape both sides count pairs of equal strips
    let on_diagonal: i64 = lhs.terms().filter(|(e, _)| e[1] == 1).map(|(_, c)| c).sum();
    assert_eq!(on_diagonal, 2);
    assert!(lhs.terms().all(|(e, _)| e[1] == e[2]));
    assert!(lhs.len() > 1);
}

#[test]
fn cauchy_rejects_non_cores() {
    assert!(check_cauchy(
        CauchyKind::Spin,
        2,
        &Partition::new(vec![2]).unwrap(),
        1,
        1,
        1
    )
    .is_err());
}

#[test]
fn schensted_counts() {
    for r in 1..=3 {
        for n in 0..=3 {
            let rep = schensted_count(r, &Partition::empty(), n).unwrap();
            assert!(rep.ok, "{:?}", rep.details);
        }
    }
    assert_eq!(
        schensted_q_count(2, &Partition::empty(), 2).unwrap(),
        vec![2, 0, 4, 0, 2]
    );
    let rep = schensted_count(2, &Partition::new(vec![1]).unwrap(), 3).unwrap();
    assert!(rep.ok, "{:?}", rep.details);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn alpine_polynomials_are_reversal_invariant(w in prop::collection::vec(any::<bool>(), 0..12), r in 1usize..4) {
        prop_assert_eq!(
            placement_poly(&w, r, Fills::ALPINE, None).unwrap(),
            placement_poly(&reverse_word(&w), r, Fills::ALPINE, None).unwrap()
        );
    }

    #[test]
    fn generating_polynomials_survive_json(w in prop::collection::vec(any::<bool>(), 0..8), r in 1usize..3) {
        let p = placement_poly(&w, r, Fills::POLDER, Some(2)).unwrap();
        let back: GenPoly = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        prop_assert_eq!(back, p);
    }
}
