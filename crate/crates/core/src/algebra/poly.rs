//! Dense univariate polynomials over F_p, coefficients from low to high degree.

use num_bigint::BigUint;
use rand::Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Poly {
    pub c: Vec<u64>,
    pub p: u64,
}

fn inv_mod(a: u64, p: u64) -> u64 {
    crate::exactlin::mod_inv(a as u32, p as u32).expect("invertible") as u64
}

impl Poly {
    pub fn new(mut c: Vec<u64>, p: u64) -> Self {
        for x in c.iter_mut() {
            *x %= p;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Poly { c, p }
    }

    pub fn zero(p: u64) -> Self {
        Poly { c: Vec::new(), p }
    }

    pub fn one(p: u64) -> Self {
        Poly::new(vec![1], p)
    }

    pub fn x(p: u64) -> Self {
        Poly::new(vec![0, 1], p)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Poly::new(c, self.p)
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n)
            .map(|i| (self.c.get(i).copied().unwrap_or(0) + self.p - o.c.get(i).copied().unwrap_or(0)) % self.p)
            .collect();
        Poly::new(c, self.p)
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero(self.p);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = (c[i + j] + a * b % self.p) % self.p;
            }
        }
        Poly::new(c, self.p)
    }

    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let p = self.p;
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = inv_mod(*d.c.last().unwrap(), p);
        let mut r = self.c.clone();
        let mut q = vec![0u64; self.c.len().saturating_sub(dd).max(1)];
        while r.len() > dd && !r.is_empty() {
            let shift = r.len() - 1 - dd;
            let f = r.last().unwrap() * lead_inv % p;
            q[shift] = f;
            for (i, dc) in d.c.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - f * dc % p) % p;
            }
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        (Poly::new(q, p), Poly::new(r, p))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    pub fn monic(&self) -> Poly {
        match self.c.last() {
            None => self.clone(),
            Some(&l) => {
                let inv = inv_mod(l, self.p);
                Poly::new(self.c.iter().map(|x| x * inv % self.p).collect(), self.p)
            }
        }
    }

    pub fn gcd(&self, o: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s*self + t*o = g = gcd.
    pub fn ext_gcd(&self, o: &Poly) -> (Poly, Poly, Poly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (Poly::one(p), Poly::zero(p));
        let (mut t0, mut t1) = (Poly::zero(p), Poly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = r1;
            r1 = r;
            let s2 = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = s2;
            let t2 = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = t2;
        }
        let lead = *r0.c.last().expect("gcd of zero polynomials");
        let inv = Poly::new(vec![inv_mod(lead, p)], p);
        (r0.mul(&inv), s0.mul(&inv), t0.mul(&inv))
    }

    pub fn pow_mod(&self, e: &BigUint, m: &Poly) -> Poly {
        let mut result = Poly::one(self.p).rem(m);
        let base = self.rem(m);
        for i in (0..e.bits()).rev() {
            result = result.mul(&result).rem(m);
            if e.bit(i) {
                result = result.mul(&base).rem(m);
            }
        }
        result
    }

    pub fn random<R: Rng + ?Sized>(deg_below: usize, p: u64, rng: &mut R) -> Poly {
        Poly::new((0..deg_below).map(|_| rng.random_range(0..p)).collect(), p)
    }
}

/// Splits `m` into coprime non-constant factors `u * v = m`, when possible.
pub(crate) fn coprime_split<R: Rng + ?Sized>(m: &Poly, rng: &mut R, attempts: usize) -> Option<(Poly, Poly)> {
    let n = m.degree()?;
    if n < 1 {
        return None;
    }
    let p = m.p;
    let try_factor = |u0: &Poly| -> Option<(Poly, Poly)> {
        let du = u0.degree()?;
        if du == 0 {
            return None;
        }
        // Absorb full multiplicities of the primes dividing u0.
        let big = u0.pow_mod(&BigUint::from(n as u64), m);
        let u = if big.is_zero() { m.monic() } else { m.gcd(&big) };
        let (v, r) = m.div_rem(&u);
        debug_assert!(r.is_zero());
        (v.degree()? > 0).then(|| (u, v.monic()))
    };
    // Distinct-degree candidates: gcd(m, x^(p^d) - x).
    let mut frob = Poly::x(p);
    for _ in 1..=n {
        frob = frob.pow_mod(&BigUint::from(p), m);
        let g = m.gcd(&frob.sub(&Poly::x(p)));
        if let Some(s) = try_factor(&g) {
            return Some(s);
        }
    }
    // Equal-degree candidates.
    let pb = BigUint::from(p);
    for _ in 0..attempts {
        let r = Poly::random(n, p, rng);
        if let Some(s) = try_factor(&m.gcd(&r)) {
            return Some(s);
        }
        for d in 1..=n {
            let g = if p == 2 {
                let mut acc = Poly::zero(p);
                let mut t = r.clone();
                for _ in 0..d {
                    acc = acc.add(&t);
                    t = t.mul(&t).rem(m);
                }
                acc
            } else {
                let e = (pb.pow(d as u32) - 1u32) / 2u32;
                r.pow_mod(&e, m).sub(&Poly::one(p))
            };
            if let Some(s) = try_factor(&m.gcd(&g)) {
                return Some(s);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;

    #[test]
    fn splits_product_of_linear_factors() {
        // (x - 1)(x - 2) over F_7
        let m = Poly::new(vec![2, 4, 1], 7);
        let (u, v) = coprime_split(&m, &mut ChaCha8Rng::seed_from_u64(0), 8).unwrap();
        assert_eq!(u.mul(&v).monic(), m);
        assert!(u.gcd(&v).degree() == Some(0));
    }

    #[test]
    fn prime_power_does_not_split() {
        // (x - 1)^3 over F_2
        let m = Poly::new(vec![1, 1, 1, 1], 2);
        assert!(coprime_split(&m, &mut ChaCha8Rng::seed_from_u64(0), 8).is_none());
    }

    #[test]
    fn splits_equal_degree_factors() {
        // (x^2 + 1)(x^2 + x + 2) over F_3, both irreducible of degree 2
        let a = Poly::new(vec![1, 0, 1], 3);
        let b = Poly::new(vec![2, 1, 1], 3);
        let m = a.mul(&b);
        let (u, v) = coprime_split(&m, &mut ChaCha8Rng::seed_from_u64(1), 16).unwrap();
        assert_eq!(u.mul(&v).monic(), m.monic());
    }
}
