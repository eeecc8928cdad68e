mod common;

use common::{p, scalar_matrix};
use ribbon_tableaux::knuth_growth::{grow, shrink};
use ribbon_tableaux::partition::Partition;
use ribbon_tableaux::shape_data::Datum;

fn rsk_matrix() -> Vec<Vec<ribbon_tableaux::shape_data::ColorVector>> {
    scalar_matrix(&[
        &[0, 0, 1, 0, 0, 0, 0],
        &[0, 0, 0, 0, 0, 2, 0],
        &[1, 1, 1, 1, 0, 1, 0],
        &[0, 0, 1, 0, 1, 0, 0],
        &[2, 1, 0, 1, 0, 0, 0],
        &[0, 0, 0, 0, 0, 0, 1],
    ])
}

fn rsk_grid() -> Vec<Vec<Partition>> {
    let e = Partition::empty();
    vec![
        vec![e.clone(); 8],
        vec![
            e.clone(),
            e.clone(),
            e.clone(),
            p(&[1]),
            p(&[1]),
            p(&[1]),
            p(&[1]),
            p(&[1]),
        ],
        vec![
            e.clone(),
            e.clone(),
            e.clone(),
            p(&[1]),
            p(&[1]),
            p(&[1]),
            p(&[3]),
            p(&[3]),
        ],
        vec![
            e.clone(),
            p(&[1]),
            p(&[2]),
            p(&[3, 1]),
            p(&[4, 1]),
            p(&[4, 1]),
            p(&[5, 3]),
            p(&[5, 3]),
        ],
        vec![
            e.clone(),
            p(&[1]),
            p(&[2]),
            p(&[4, 1]),
            p(&[4, 2]),
            p(&[5, 2]),
            p(&[5, 4, 1]),
            p(&[5, 4, 1]),
        ],
        vec![
            e.clone(),
            p(&[3]),
            p(&[4, 1]),
            p(&[4, 3, 1]),
            p(&[5, 3, 2]),
            p(&[5, 4, 2]),
            p(&[5, 4, 4, 1]),
            p(&[5, 4, 4, 1]),
        ],
        vec![
            e.clone(),
            p(&[3]),
            p(&[4, 1]),
            p(&[4, 3, 1]),
            p(&[5, 3, 2]),
            p(&[5, 4, 2]),
            p(&[5, 4, 4, 1]),
            p(&[6, 4, 4, 1]),
        ],
    ]
}

#[test]
fn rsk_growth_grid() {
    let g = grow(&rsk_matrix(), Datum::Rsk, &Partition::empty()).unwrap();
    assert_eq!(g.shapes, rsk_grid());
}

#[test]
fn rsk_growth_shrinks_back_to_its_matrix() {
    let g = grow(&rsk_matrix(), Datum::Rsk, &Partition::empty()).unwrap();
    let back = shrink(&g.p(), &g.q(), Datum::Rsk).unwrap();
    assert_eq!(back.entries, rsk_matrix());
    assert_eq!(back.shapes, rsk_grid());
}

#[test]
fn burge_growth_grid() {
    let mut m = rsk_matrix();
    m.reverse();
    let e = Partition::empty();
    let want = vec![
        vec![e.clone(); 8],
        vec![
            e.clone(),
            e.clone(),
            e.clone(),
            e.clone(),
            e.clone(),
            e.clone(),
            e.clone(),
            p(&[1]),
        ],
        vec![
            e.clone(),
            p(&[2]),
            p(&[3]),
            p(&[3]),
            p(&[4]),
            p(&[4]),
            p(&[4]),
            p(&[5]),
        ],
        vec![
            e.clone(),
            p(&[2]),
            p(&[3]),
            p(&[3, 1]),
            p(&[4, 1]),
            p(&[4, 2]),
            p(&[4, 2]),
            p(&[5, 2]),
        ],
        vec![
            e.clone(),
            p(&[3]),
            p(&[4, 1]),
            p(&[4, 3]),
            p(&[5, 3, 1]),
            p(&[5, 4, 1]),
            p(&[5, 4, 2]),
            p(&[6, 4, 2]),
        ],
        vec![
            e.clone(),
            p(&[3]),
            p(&[4, 1]),
            p(&[4, 3]),
            p(&[5, 3, 1]),
            p(&[5, 4, 1]),
            p(&[5, 4, 3, 1]),
            p(&[6, 4, 3, 1]),
        ],
        rsk_grid()[6].clone(),
    ];
    for d in [Datum::Burge, Datum::BurgeEdge] {
        let g = grow(&m, d, &Partition::empty()).unwrap();
        assert_eq!(g.shapes, want, "{d:?}");
        let back = shrink(&g.p(), &g.q(), d).unwrap();
        assert_eq!(back.entries, m);
    }
}
