#![allow(dead_code)]

use ribbon_tableaux::partition::Partition;
use ribbon_tableaux::shape_data::ColorVector;

pub fn p(v: &[usize]) -> Partition {
    Partition::new(v.to_vec()).unwrap()
}

/// Integer matrix to a matrix of one-component colour vectors.
pub fn scalar_matrix(rows: &[&[u64]]) -> Vec<Vec<ColorVector>> {
    rows.iter()
        .map(|row| row.iter().map(|&x| ColorVector::new(vec![x])).collect())
        .collect()
}

/// Shape of the tableau obtained by Schensted row insertion of `word`.
pub fn row_insertion_shape(word: &[usize]) -> Partition {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &x in word {
        let mut x = x;
        let mut placed = false;
        for row in rows.iter_mut() {
            match row.iter().position(|&y| y > x) {
                Some(i) => x = std::mem::replace(&mut row[i], x),
                None => {
                    row.push(x);
                    placed = true;
                    break;
                }
            }
        }
        if !placed {
            rows.push(vec![x]);
        }
    }
    p(&rows.iter().map(Vec::len).collect::<Vec<_>>())
}

/// The biword of an integer matrix read row by row, as the sequence of
/// column indices.
pub fn biword_columns(a: &[Vec<u64>], rows: usize, cols: usize) -> Vec<usize> {
    let mut w = Vec::new();
    for row in a.iter().take(rows) {
        for (j, &x) in row.iter().take(cols).enumerate() {
            for _ in 0..x {
                w.push(j);
            }
        }
    }
    w
}

/// A random partition with at most `max_len` parts, each at most `max_part`.
pub fn random_partition(rng: &mut impl rand::Rng, max_len: usize, max_part: usize) -> Partition {
    let len = rng.gen_range(0..=max_len);
    let mut v: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=max_part)).collect();
    v.sort_unstable_by(|a, b| b.cmp(a));
    Partition::new(v).unwrap()
}

/// A uniformly chosen element of a nonempty slice.
pub fn pick<'a, T>(rng: &mut impl rand::Rng, items: &'a [T]) -> &'a T {
    &items[rng.gen_range(0..items.len())]
}
