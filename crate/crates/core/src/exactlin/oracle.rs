//! Fraction-free elimination used as an independent rank oracle.
//!
//! Works on integer lifts: over Q the rows are cleared of denominators, over
//! F_p the residues are lifted to integers and every step is reduced mod p.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{Mat, Scalar};

fn integer_rows(m: &Mat) -> Vec<Vec<BigInt>> {
    (0..m.rows())
        .map(|i| {
            let row = m.row_scalars(i);
            match m.field().characteristic() {
                0 => {
                    let lcm = row.iter().fold(BigInt::one(), |acc, s| match s {
                        Scalar::Rat(q) => acc.lcm(q.denom()),
                        _ => unreachable!(),
                    });
                    row.iter()
                        .map(|s| match s {
                            Scalar::Rat(q) => q.numer() * (&lcm / q.denom()),
                            _ => unreachable!(),
                        })
                        .collect()
                }
                _ => row.iter().map(|s| BigInt::from(s.residue().unwrap())).collect(),
            }
        })
        .collect()
}

/// Rank by Bareiss elimination, sharing no code with [`Mat::rref`].
pub fn bareiss_rank(m: &Mat) -> usize {
    let p = m.field().characteristic();
    let modulus = (p != 0).then(|| BigInt::from(p));
    let reduce = |x: BigInt| -> BigInt {
        match &modulus {
            Some(q) => x.mod_floor(q),
            None => x,
        }
    };
    let mut a = integer_rows(m);
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(piv) = (rank..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, piv);
        for i in rank + 1..rows {
            for j in c + 1..cols {
                let v = &a[rank][c] * &a[i][j] - &a[i][c] * &a[rank][j];
                a[i][j] = match &modulus {
                    // over F_p the division is replaced by dropping the common factor
                    Some(_) => reduce(v),
                    None => {
                        debug_assert!((&v % &prev).is_zero());
                        v / &prev
                    }
                };
            }
            a[i][c] = BigInt::zero();
        }
        if modulus.is_none() {
            prev = a[rank][c].clone();
        }
        rank += 1;
    }
    rank
}
