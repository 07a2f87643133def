//! Jacobson radical from structure constants.
//!
//! Over Q the radical is the kernel of the trace form. Over F_p we use the
//! p-power trace refinement: starting from I = A, for i = 0..=floor(log_p n)
//! keep the a in I with g_i(ab) = 0 for all b, where g_i(a) is
//! Tr(lift(a)^(p^i)) / p^i reduced mod p.

use crate::exactlin::{FieldSpec, Mat};

use super::Algebra;

pub fn generic_radical(a: &Algebra) -> Mat {
    let field = a.field();
    let n = a.dim();
    match field.characteristic() {
        0 => {
            let mut form = Mat::zeros(field, n, n);
            for i in 0..n {
                for j in 0..n {
                    let prod = a.product_of_basis(i, j);
                    form.set(i, j, &trace(&a.left_mult(&prod), field));
                }
            }
            form.kernel()
        }
        p => modular_radical(a, p),
    }
}

fn trace(m: &Mat, field: FieldSpec) -> crate::exactlin::Scalar {
    let mut t = field.zero();
    for i in 0..m.rows() {
        t = &t + &m.get(i, i);
    }
    t
}

fn lift(m: &Mat) -> Vec<Vec<u128>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.get(i, j).residue().unwrap() as u128).collect())
        .collect()
}

fn mat_mul_mod(a: &[Vec<u128>], b: &[Vec<u128>], q: u128) -> Vec<Vec<u128>> {
    let n = a.len();
    let mut out = vec![vec![0u128; n]; n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i][k];
            if x == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] = (out[i][j] + x * b[k][j]) % q;
            }
        }
    }
    out
}

/// Tr(m^e) mod q for an integer matrix.
fn trace_of_power(m: &[Vec<u128>], mut e: u128, q: u128) -> u128 {
    let n = m.len();
    let mut result: Vec<Vec<u128>> = (0..n).map(|i| (0..n).map(|j| u128::from(i == j)).collect()).collect();
    let mut base: Vec<Vec<u128>> = m.iter().map(|r| r.iter().map(|x| x % q).collect()).collect();
    while e > 0 {
        if e & 1 == 1 {
            result = mat_mul_mod(&result, &base, q);
        }
        base = mat_mul_mod(&base, &base, q);
        e >>= 1;
    }
    (0..n).fold(0, |acc, i| (acc + result[i][i]) % q)
}

fn modular_radical(a: &Algebra, p: u32) -> Mat {
    let field = a.field();
    let n = a.dim();
    let p128 = p as u128;
    let mut levels = 0u32;
    while p128.pow(levels + 1) <= n as u128 {
        levels += 1;
    }
    let mut ideal = Mat::identity(field, n);
    for i in 0..=levels {
        let pi = p128.pow(i);
        let q = pi * p128;
        let k = ideal.cols();
        if k == 0 {
            break;
        }
        let mut cond = Mat::zeros(field, n, k);
        for t in 0..k {
            let at = ideal.column(t);
            let la = a.left_mult(&at);
            for s in 0..n {
                let prod = la.column(s);
                let m = lift(&a.left_mult(&prod));
                let tr = trace_of_power(&m, pi, q);
                debug_assert_eq!(tr % pi, 0, "trace of a p-power not divisible");
                cond.set(s, t, &field.from_i64(((tr / pi) % p128) as i64));
            }
        }
        let ker = cond.kernel();
        ideal = (&ideal * &ker).column_space();
    }
    ideal
}
