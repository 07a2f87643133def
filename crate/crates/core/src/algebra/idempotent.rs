//! Primitive idempotents over F_p by splitting corner algebras.
//!
//! A corner eAe is local exactly when eAe / e rad(A) e is one-dimensional.
//! Otherwise a random element x of eAe usually has a minimal polynomial with
//! two coprime factors u, v; the CRT polynomial q with q = 1 mod u and
//! q = 0 mod v gives an idempotent q(x) of eAe strictly between 0 and e.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactlin::{random_scalar, Mat};

use super::poly::{coprime_split, Poly};
use super::Algebra;

const TRIALS: usize = 200;

pub(crate) fn primitive_idempotents(a: &Algebra, seed: u64) -> Result<Vec<Mat>> {
    if a.field().is_rational() {
        return Err(Error::UnsupportedAlgebra(
            "idempotent splitting is only available over prime fields".into(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rad = a.radical().clone();
    let mut out = Vec::new();
    let mut stack = vec![a.unit().clone()];
    while let Some(e) = stack.pop() {
        match split_once(a, &rad, &e, &mut rng)? {
            None => out.push(e),
            Some(f) => {
                let g = &e - &f;
                stack.push(g);
                stack.push(f);
            }
        }
    }
    Ok(out)
}

fn corner(a: &Algebra, e: &Mat, space: &Mat) -> Mat {
    let le = a.left_mult(e);
    let re = a.right_mult(e);
    (&(&le * &re) * space).column_space()
}

fn split_once<R: Rng + ?Sized>(a: &Algebra, rad: &Mat, e: &Mat, rng: &mut R) -> Result<Option<Mat>> {
    let n = a.dim();
    let field = a.field();
    let whole = corner(a, e, &Mat::identity(field, n));
    let small = corner(a, e, rad);
    if whole.cols() - small.cols() <= 1 {
        return Ok(None);
    }
    let p = field.characteristic() as u64;
    for _ in 0..TRIALS {
        let coeffs: Vec<_> = (0..whole.cols()).map(|_| random_scalar(field, rng)).collect();
        let x = &whole * &Mat::column_vector(field, &coeffs)?;
        let powers = minimal_polynomial_powers(a, e, &x);
        let k = powers.len() - 1;
        let basis = Mat::hstack(field, n, &powers[..k].iter().collect::<Vec<_>>());
        let sol = basis.solve(&powers[k])?.particular.expect("dependent by construction");
        let mut c: Vec<u64> = (0..k)
            .map(|j| {
                let v = sol.get(j, 0).residue().unwrap() as u64;
                (p - v) % p
            })
            .collect();
        c.push(1);
        let m = Poly::new(c, p);
        let Some((u, v)) = coprime_split(&m, rng, 8) else {
            continue;
        };
        let (g, s, _) = v.ext_gcd(&u);
        debug_assert_eq!(g.degree(), Some(0));
        let q = s.mul(&v).rem(&m);
        let mut f = Mat::zeros(field, n, 1);
        for (j, coef) in q.c.iter().enumerate() {
            f.add_scaled_assign(&field.from_i64(*coef as i64), &powers[j]);
        }
        debug_assert_eq!(a.mul(&f, &f), f);
        if !f.is_zero() && &f != e {
            return Ok(Some(f));
        }
    }
    Err(Error::UnsupportedAlgebra(
        "could not split a non-local corner; simple modules may not be split over this field".into(),
    ))
}

/// e, x, x^2, ... up to the first linearly dependent power (inclusive).
fn minimal_polynomial_powers(a: &Algebra, e: &Mat, x: &Mat) -> Vec<Mat> {
    let n = a.dim();
    let lx = a.left_mult(x);
    let mut powers = vec![e.clone()];
    loop {
        let next = &lx * powers.last().unwrap();
        let span = Mat::hstack(a.field(), n, &powers.iter().collect::<Vec<_>>());
        powers.push(next);
        if span.spans(powers.last().unwrap()) {
            return powers;
        }
    }
}
