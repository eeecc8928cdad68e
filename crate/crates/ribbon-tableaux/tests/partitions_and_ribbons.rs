//! Edge sequences and ribbon strips checked against oracles that work
//! directly on Young diagrams.

mod common;

use std::collections::BTreeSet;

use common::p;
use proptest::prelude::*;
use ribbon_tableaux::partition::{is_horizontal_strip, is_vertical_strip, EdgeSeq, Partition};
use ribbon_tableaux::ribbon::{
    apply_ribbon, from_core_quotient, is_core, list_ribbons, r_quotient, strip_check, strips_above,
    Direction, Mode, Orientation,
};

/// Cells `(row, col)` of a diagram.
fn cells(l: &Partition) -> BTreeSet<(i64, i64)> {
    let mut out = BTreeSet::new();
    for (i, &x) in l.parts().iter().enumerate() {
        for j in 0..x {
            out.insert((i as i64, j as i64));
        }
    }
    out
}

/// Oracle: `kappa / mu` is an `r`-ribbon iff it has `r` cells, is edge
/// connected and holds no 2×2 block. Returns the head content (largest
/// content `col - row`) and the height (rows occupied minus one).
fn diagram_ribbon(mu: &Partition, kappa: &Partition, r: usize) -> Option<(i64, usize)> {
    if !kappa.contains(mu) || kappa.size() != mu.size() + r {
        return None;
    }
    let skew: BTreeSet<(i64, i64)> = cells(kappa).difference(&cells(mu)).copied().collect();
    for &(i, j) in &skew {
        if [(i + 1, j), (i, j + 1), (i + 1, j + 1)]
            .iter()
            .all(|c| skew.contains(c))
        {
            return None;
        }
    }
    let start = *skew.iter().next()?;
    let mut seen = BTreeSet::from([start]);
    let mut stack = vec![start];
    while let Some((i, j)) = stack.pop() {
        for c in [(i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)] {
            if skew.contains(&c) && seen.insert(c) {
                stack.push(c);
            }
        }
    }
    if seen.len() != skew.len() {
        return None;
    }
    let head = skew.iter().map(|&(i, j)| j - i).max()?;
    let rows: BTreeSet<i64> = skew.iter().map(|c| c.0).collect();
    Some((head, rows.len() - 1))
}

/// Oracle: every `kappa` obtained from `mu` by adding one `r`-ribbon, with
/// head and height.
fn diagram_covers(mu: &Partition, r: usize) -> Vec<(Partition, i64, usize)> {
    Partition::all_of_size(mu.size() + r)
        .into_iter()
        .filter_map(|k| diagram_ribbon(mu, &k, r).map(|(h, ht)| (k, h, ht)))
        .collect()
}

fn shapes_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(Partition::all_of_size).collect()
}

fn partition_strategy(max_len: usize, max_part: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, 0..=max_len).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

// Partitions and edge sequences.

#[test]
fn edge_round_trip_is_exhaustive_to_size_twelve() {
    for l in shapes_up_to(12) {
        assert_eq!(Partition::from_edge(&l.edge()).unwrap(), l);
    }
}

#[test]
fn printed_edge_string_of_six_four_three_three_one() {
    let e = p(&[6, 4, 3, 3, 1]).edge();
    assert_eq!(e.bit_string(-7, 8), "110100110100100");
}

#[test]
fn transpose_counts_columns() {
    let l = p(&[6, 4, 3, 3, 1]);
    let cols: Vec<usize> = (0..l.part(0))
        .map(|j| l.parts().iter().filter(|&&x| x > j).count())
        .collect();
    assert_eq!(l.transpose(), p(&cols));
    assert_eq!(l.transpose(), p(&[5, 4, 4, 2, 1, 1]));
    assert_eq!(p(&[3]).transpose(), p(&[1, 1, 1]));
}

#[test]
fn horizontal_strip_examples() {
    assert!(is_horizontal_strip(&p(&[1]), &p(&[3, 1])));
    assert!(!is_horizontal_strip(&p(&[1]), &p(&[2, 2])));
    assert!(is_horizontal_strip(&p(&[4, 1]), &p(&[5, 3])));
    assert!(is_vertical_strip(&p(&[1]), &p(&[2, 1, 1])));
    assert!(!is_vertical_strip(&p(&[1]), &p(&[3])));
}

#[test]
fn horizontal_strips_have_at_most_one_cell_per_column() {
    for mu in shapes_up_to(8) {
        for l in shapes_up_to(mu.size()) {
            if !mu.contains(&l) {
                continue;
            }
            let skew: BTreeSet<(i64, i64)> = cells(&mu).difference(&cells(&l)).copied().collect();
            let cols: BTreeSet<i64> = skew.iter().map(|c| c.1).collect();
            assert_eq!(
                is_horizontal_strip(&l, &mu),
                cols.len() == skew.len(),
                "{mu}/{l}"
            );
        }
    }
}

#[test]
fn addable_corners_exceed_removable_by_one() {
    for l in shapes_up_to(10) {
        let add = list_ribbons(&l, 1, Mode::Addable).len();
        let rem = list_ribbons(&l, 1, Mode::Removable).len();
        assert_eq!(add, rem + 1, "{l}");
    }
}

proptest! {
    #[test]
    fn edge_round_trip_random(l in partition_strategy(12, 20)) {
        prop_assert_eq!(Partition::from_edge(&l.edge()).unwrap(), l);
    }

    #[test]
    fn transpose_is_an_involution(l in partition_strategy(10, 10)) {
        prop_assert_eq!(l.transpose().transpose(), l.clone());
        prop_assert_eq!(l.transpose().size(), l.size());
        prop_assert_eq!(l.transpose().edge(), l.edge().transposed());
    }

    #[test]
    fn big_edge_differences_are_bits(l in partition_strategy(8, 8)) {
        let e = l.edge();
        let (lo, hi) = e.span();
        for k in lo - 2..hi + 2 {
            let d = e.big_edge(k).unwrap() - e.big_edge(k + 1).unwrap();
            prop_assert_eq!(d, e.get(k) as u64);
        }
    }

    #[test]
    fn edge_json_round_trip(l in partition_strategy(6, 6), shift in -3i64..3) {
        let e = l.edge().shifted(shift);
        let s = serde_json::to_string(&e).unwrap();
        let back: EdgeSeq = serde_json::from_str(&s).unwrap();
        prop_assert_eq!(back, e);
    }
}

// Ribbons.

#[test]
fn listed_ribbons_match_diagram_ribbons() {
    for r in 1..=4 {
        for mu in shapes_up_to(8) {
            let mut listed: Vec<(Partition, i64, usize)> = list_ribbons(&mu, r, Mode::Addable)
                .into_iter()
                .map(|rib| {
                    let k = apply_ribbon(&mu, rib.head, r, Direction::Add).unwrap();
                    (k, rib.head, rib.height())
                })
                .collect();
            let mut oracle = diagram_covers(&mu, r);
            listed.sort();
            oracle.sort();
            assert_eq!(listed, oracle, "addable {r}-ribbons of {mu}");
        }
    }
}

#[test]
fn removable_ribbons_match_diagram_ribbons() {
    for r in 1..=4 {
        for kappa in shapes_up_to(10) {
            let mut listed: Vec<(Partition, i64)> = list_ribbons(&kappa, r, Mode::Removable)
                .into_iter()
                .map(|rib| {
                    (
                        apply_ribbon(&kappa, rib.head, r, Direction::Remove).unwrap(),
                        rib.head,
                    )
                })
                .collect();
            let mut oracle: Vec<(Partition, i64)> = if kappa.size() < r {
                Vec::new()
            } else {
                Partition::all_of_size(kappa.size() - r)
                    .into_iter()
                    .filter_map(|mu| diagram_ribbon(&mu, &kappa, r).map(|(h, _)| (mu, h)))
                    .collect()
            };
            listed.sort();
            oracle.sort();
            assert_eq!(listed, oracle, "removable {r}-ribbons of {kappa}");
        }
    }
}

#[test]
fn add_then_remove_is_identity() {
    for r in 1..=4 {
        for mu in shapes_up_to(9) {
            for rib in list_ribbons(&mu, r, Mode::Addable) {
                let k = apply_ribbon(&mu, rib.head, r, Direction::Add).unwrap();
                assert_eq!(k.size(), mu.size() + r);
                assert_eq!(
                    apply_ribbon(&k, rib.head, r, Direction::Remove).unwrap(),
                    mu
                );
            }
        }
    }
}

#[test]
fn ribbons_of_fixed_height_interleave() {
    for r in 1..=4 {
        for mu in shapes_up_to(12) {
            for h in 0..r {
                let mut seq: Vec<(i64, bool)> = list_ribbons(&mu, r, Mode::Addable)
                    .into_iter()
                    .filter(|x| x.height() == h)
                    .map(|x| (x.head, true))
                    .chain(
                        list_ribbons(&mu, r, Mode::Removable)
                            .into_iter()
                            .filter(|x| x.height() == h)
                            .map(|x| (x.head, false)),
                    )
                    .collect();
                seq.sort();
                let kinds: Vec<bool> = seq.iter().map(|x| x.1).collect();
                let alternating = kinds
                    .iter()
                    .enumerate()
                    .all(|(i, &add)| add == (i % 2 == 0));
                assert!(
                    alternating && kinds.len() % 2 == 1,
                    "height {h} {r}-ribbons of {mu}: {seq:?}"
                );
            }
        }
    }
}

#[test]
fn extreme_ribbons_are_addable_with_full_and_zero_height() {
    for r in 1..=4 {
        for mu in shapes_up_to(12) {
            let mut all: Vec<(i64, bool, usize)> = list_ribbons(&mu, r, Mode::Addable)
                .into_iter()
                .map(|x| (x.head, true, x.height()))
                .chain(
                    list_ribbons(&mu, r, Mode::Removable)
                        .into_iter()
                        .map(|x| (x.head, false, x.height())),
                )
                .collect();
            all.sort();
            let first = all.first().unwrap();
            let last = all.last().unwrap();
            assert!(first.1 && first.2 == r - 1, "{mu} r={r}");
            assert!(last.1 && last.2 == 0, "{mu} r={r}");
        }
    }
}

// Cores and quotients.

#[test]
fn quotient_sizes_add_up() {
    for r in 1..=4 {
        for l in shapes_up_to(10) {
            let cq = r_quotient(&l, r);
            assert!(is_core(&cq.core, r));
            let q: usize = cq.quotient.iter().map(Partition::size).sum();
            assert_eq!(l.size(), cq.core.size() + r * q, "{l} r={r}");
            assert_eq!(from_core_quotient(&cq).unwrap(), l);
        }
    }
}

#[test]
fn cores_are_the_shapes_without_diagram_ribbons() {
    for r in 1..=4 {
        for l in shapes_up_to(10) {
            let oracle = l.size() < r
                || Partition::all_of_size(l.size() - r)
                    .iter()
                    .all(|mu| diagram_ribbon(mu, &l, r).is_none());
            assert_eq!(is_core(&l, r), oracle, "{l} r={r}");
            if oracle {
                let cq = r_quotient(&l, r);
                assert_eq!(cq.core, l);
                assert!(cq.quotient.iter().all(Partition::is_empty));
            }
        }
    }
}

#[test]
fn removing_a_ribbon_removes_one_quotient_square() {
    for r in 2..=4 {
        for kappa in shapes_up_to(12) {
            let qk = r_quotient(&kappa, r);
            for rib in list_ribbons(&kappa, r, Mode::Removable) {
                let mu = apply_ribbon(&kappa, rib.head, r, Direction::Remove).unwrap();
                let qm = r_quotient(&mu, r);
                assert_eq!(qm.core, qk.core);
                let changed: Vec<usize> = (0..r)
                    .filter(|&i| qm.quotient[i] != qk.quotient[i])
                    .collect();
                assert_eq!(changed.len(), 1, "{kappa} minus head {}", rib.head);
                let i = changed[0];
                assert_eq!(i, rib.head.rem_euclid(r as i64) as usize);
                assert!(diagram_ribbon(&qm.quotient[i], &qk.quotient[i], 1).is_some());
            }
        }
    }
}

// Ribbon strips.

/// Oracle: all shapes reachable from `s` by adding diagram ribbons with
/// strictly increasing heads.
fn diagram_strips_above(s: &Partition, r: usize, max: usize) -> BTreeSet<Partition> {
    fn rec(cur: &Partition, r: usize, last: i64, left: usize, out: &mut BTreeSet<Partition>) {
        out.insert(cur.clone());
        if left == 0 {
            return;
        }
        for (k, head, _) in diagram_covers(cur, r) {
            if head > last {
                rec(&k, r, head, left - 1, out);
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(s, r, i64::MIN, max, &mut out);
    out
}

/// Oracle: the largest total height over all chains of single diagram
/// ribbons from `s` to `t`.
fn max_chain_height(s: &Partition, t: &Partition, r: usize) -> Option<usize> {
    if s == t {
        return Some(0);
    }
    diagram_covers(s, r)
        .into_iter()
        .filter(|(k, _, _)| t.contains(k))
        .filter_map(|(k, _, h)| max_chain_height(&k, t, r).map(|rest| rest + h))
        .max()
}

#[test]
fn strip_check_agrees_with_increasing_head_additions() {
    for r in 1..=3 {
        for s in shapes_up_to(4) {
            let reach = diagram_strips_above(&s, r, 3);
            let limit = s.size() + 3 * r;
            for t in shapes_up_to(limit) {
                if !t.contains(&s) || (t.size() - s.size()) % r != 0 {
                    continue;
                }
                let found = strip_check(&s, &t, r, Orientation::Horizontal);
                assert_eq!(found.is_some(), reach.contains(&t), "{t}/{s} r={r}");
                if let Some(strip) = found {
                    assert_eq!(strip.count() * r, t.size() - s.size());
                }
            }
        }
    }
}

#[test]
fn standardisation_attains_the_maximal_spin() {
    for r in 1..=3 {
        for s in shapes_up_to(4) {
            for t in diagram_strips_above(&s, r, 3) {
                let strip = strip_check(&s, &t, r, Orientation::Horizontal).unwrap();
                assert_eq!(
                    Some(strip.dspin()),
                    max_chain_height(&s, &t, r),
                    "{t}/{s} r={r}"
                );
                let chain = strip.standardise().unwrap();
                assert_eq!(chain.first(), Some(&s));
                assert_eq!(chain.last(), Some(&t));
                let heads = strip.heads();
                assert!(heads.windows(2).all(|w| w[0] < w[1]));
                let heights: Vec<usize> = chain
                    .windows(2)
                    .map(|w| diagram_ribbon(&w[0], &w[1], r).unwrap().1)
                    .collect();
                assert_eq!(heights, strip.original_heights());
            }
        }
    }
}

#[test]
fn vertical_strips_are_transposed_horizontal_strips() {
    for r in 1..=3 {
        for s in shapes_up_to(4) {
            for t in diagram_strips_above(&s.transpose(), r, 2) {
                let t = t.transpose();
                let strip = strip_check(&s, &t, r, Orientation::Vertical).unwrap();
                let heads = strip.heads();
                assert!(heads.windows(2).all(|w| w[0] > w[1]), "{t}/{s}");
                let chain = strip.standardise().unwrap();
                let heights: Vec<usize> = chain
                    .windows(2)
                    .map(|w| diagram_ribbon(&w[0], &w[1], r).unwrap().1)
                    .collect();
                assert_eq!(heights, strip.original_heights());
                assert_eq!(strip.dspin(), heights.iter().sum::<usize>());
            }
        }
    }
}

#[test]
fn one_ribbon_strips_are_horizontal_strips() {
    for s in shapes_up_to(6) {
        for t in shapes_up_to(9) {
            if t.contains(&s) {
                assert_eq!(
                    strip_check(&s, &t, 1, Orientation::Horizontal).is_some(),
                    is_horizontal_strip(&s, &t),
                    "{t}/{s}"
                );
                assert_eq!(
                    strip_check(&s, &t, 1, Orientation::Vertical).is_some(),
                    is_vertical_strip(&s, &t),
                    "{t}/{s}"
                );
            }
        }
    }
}

#[test]
fn strips_factor_through_quotients() {
    for r in 2..=3 {
        for s in shapes_up_to(6) {
            for t in shapes_up_to(s.size() + 2 * r) {
                if !t.contains(&s) {
                    continue;
                }
                let (qs, qt) = (r_quotient(&s, r), r_quotient(&t, r));
                let oracle = qs.core == qt.core
                    && (0..r).all(|i| is_horizontal_strip(&qs.quotient[i], &qt.quotient[i]));
                assert_eq!(
                    strip_check(&s, &t, r, Orientation::Horizontal).is_some(),
                    oracle,
                    "{t}/{s} r={r}"
                );
            }
        }
    }
}

#[test]
fn strip_positions_merge() {
    for r in 1..=3 {
        for s in shapes_up_to(3) {
            for t in strips_above(&s, r, Orientation::Horizontal, 1)
                .into_iter()
                .chain(strips_above(&s, r, Orientation::Horizontal, 2))
            {
                for u in strips_above(&t, r, Orientation::Horizontal, 1) {
                    let Some(su) = strip_check(&s, &u, r, Orientation::Horizontal) else {
                        continue;
                    };
                    let st = strip_check(&s, &t, r, Orientation::Horizontal).unwrap();
                    let tu = strip_check(&t, &u, r, Orientation::Horizontal).unwrap();
                    let mut merged: Vec<i64> =
                        st.positions.iter().chain(&tu.positions).copied().collect();
                    merged.sort();
                    assert_eq!(merged, su.positions, "{u}/{t}/{s}");
                    assert!(st.dspin() + tu.dspin() <= su.dspin());
                }
            }
        }
    }
}

#[test]
fn paper_instance_strips() {
    let mu = p(&[16, 15, 15, 5, 4]);
    let kappa = p(&[17, 17, 16, 13, 9, 5, 1, 1]);
    let s = strip_check(&mu, &kappa, 4, Orientation::Horizontal).unwrap();
    assert_eq!((s.count(), s.dspin()), (6, 7));
    let lambda = p(&[14, 13, 11, 5]);
    let nu = p(&[14, 14, 14, 9, 4]);
    let s = strip_check(&lambda, &nu, 4, Orientation::Horizontal).unwrap();
    assert_eq!((s.count(), s.dspin()), (3, 1));
}
