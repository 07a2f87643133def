//! Group algebras from multiplication tables.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, Mat};

use super::idempotent::primitive_idempotents;
use super::{Algebra, AlgebraData, Provenance};

/// `table[g][h]` is the index of the product `gh`.
pub fn group_algebra(table: &[Vec<usize>], field: FieldSpec) -> Result<Arc<Algebra>> {
    let n = table.len();
    if n == 0 {
        return Err(Error::NotAGroup("empty table".into()));
    }
    if table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
        return Err(Error::NotAGroup(
            "table is not square or has entries out of range".into(),
        ));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
        .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
    for g in 0..n {
        if !(0..n).any(|h| table[g][h] == identity && table[h][g] == identity) {
            return Err(Error::NotAGroup(format!("element {g} has no inverse")));
        }
        for h in 0..n {
            for k in 0..n {
                if table[table[g][h]][k] != table[g][table[h][k]] {
                    return Err(Error::NotAGroup(format!("associativity fails at ({g}, {h}, {k})")));
                }
            }
        }
    }

    let labels: Vec<String> = (0..n)
        .map(|g| if g == identity { "1".into() } else { format!("g{g}") })
        .collect();
    let left: Vec<Mat> = (0..n)
        .map(|g| {
            let mut m = Mat::zeros(field, n, n);
            for (h, &gh) in table[g].iter().enumerate() {
                m.set(gh, h, &field.one());
            }
            m
        })
        .collect();
    let unit = Mat::unit_vector(field, n, identity);

    let p = field.characteristic() as usize;
    let is_p_group = p != 0 && {
        let mut m = n;
        while m.is_multiple_of(p) {
            m /= p;
        }
        m == 1
    };
    let closed_radical = if p == 0 || !n.is_multiple_of(p) {
        Some(Mat::zeros(field, n, 0))
    } else if is_p_group {
        // Augmentation ideal, spanned by g - 1.
        let cols: Vec<Mat> = (0..n)
            .filter(|&g| g != identity)
            .map(|g| &Mat::unit_vector(field, n, g) - &unit)
            .collect();
        Some(Mat::hstack(field, n, &cols.iter().collect::<Vec<_>>()))
    } else {
        None
    };

    let data = AlgebraData {
        field,
        labels,
        left,
        unit: unit.clone(),
        idempotents: None,
        blocks: Vec::new(),
        closed_radical,
        provenance: Provenance::new("group", Some(format!("order {n}"))),
    };
    let alg = Algebra::new_trusted(data);
    let idempotents = if n == 1 || is_p_group {
        Some(vec![unit])
    } else if p == 0 {
        None
    } else {
        Some(primitive_idempotents(&alg, 0)?)
    };
    match idempotents {
        None => Ok(alg),
        Some(ids) => Ok(Algebra::new_trusted(Algebra::with_idempotents(alg.data(), ids))),
    }
}

/// Multiplication table of the cyclic group of order `n`.
pub fn cyclic_group_table(n: usize) -> Vec<Vec<usize>> {
    (0..n).map(|g| (0..n).map(|h| (g + h) % n).collect()).collect()
}

/// Multiplication table of the symmetric group on `k` letters, elements in
/// lexicographic order of their one-line notation; `(gh)(i) = g(h(i))`.
pub fn symmetric_group_table(k: usize) -> Vec<Vec<usize>> {
    let all = permutations(k);
    let index = |p: &Vec<usize>| all.iter().position(|q| q == p).unwrap();
    all.iter()
        .map(|g| {
            all.iter()
                .map(|h| {
                    let gh: Vec<usize> = (0..k).map(|i| g[h[i]]).collect();
                    index(&gh)
                })
                .collect()
        })
        .collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, k - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}
