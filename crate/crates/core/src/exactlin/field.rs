use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The ground field: the rationals (characteristic 0) or a prime field F_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "FieldRepr", into = "FieldRepr")]
pub struct FieldSpec {
    characteristic: u32,
}

#[derive(Serialize, Deserialize)]
struct FieldRepr {
    #[serde(rename = "char")]
    characteristic: u32,
}

impl TryFrom<FieldRepr> for FieldSpec {
    type Error = Error;
    fn try_from(r: FieldRepr) -> Result<Self> {
        FieldSpec::new(r.characteristic)
    }
}

impl From<FieldSpec> for FieldRepr {
    fn from(f: FieldSpec) -> Self {
        FieldRepr {
            characteristic: f.characteristic,
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let n = n as u64;
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldSpec {
    /// `characteristic` must be 0 or a prime below 2^31.
    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || (characteristic < (1 << 31) && is_prime(characteristic)) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::InvalidField(format!(
                "characteristic {characteristic} is neither 0 nor a prime below 2^31"
            )))
        }
    }

    pub fn rationals() -> Self {
        FieldSpec { characteristic: 0 }
    }

    /// Panics when `p` is not an admissible prime; use [`FieldSpec::new`] for untrusted input.
    pub fn prime(p: u32) -> Self {
        FieldSpec::new(p).expect("admissible prime")
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn is_rational(&self) -> bool {
        self.characteristic == 0
    }

    /// Number of elements, `None` for the rationals.
    pub fn order(&self) -> Option<u64> {
        (self.characteristic != 0).then_some(self.characteristic as u64)
    }

    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, v: i64) -> Scalar {
        match self.characteristic {
            0 => Scalar::Rat(BigRational::from_integer(BigInt::from(v))),
            p => Scalar::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            },
        }
    }

    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar> {
        let n = self.from_i64(num);
        let d = self.from_i64(den);
        let inv = d
            .inv()
            .ok_or_else(|| Error::InvalidField(format!("denominator {den} vanishes")))?;
        Ok(&n * &inv)
    }

    /// Parses "num", "num/den" (rationals) or a decimal residue (F_p).
    pub fn parse(&self, text: &str) -> Result<Scalar> {
        let text = text.trim();
        let bad = || Error::InvalidField(format!("cannot parse scalar `{text}`"));
        let (num, den) = match text.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (text, None),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = match den {
            Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(bad());
        }
        match self.characteristic {
            0 => Ok(Scalar::Rat(BigRational::new(num, den))),
            p => {
                let reduce = |x: &BigInt| -> u32 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    r.to_u32().expect("residue fits")
                };
                let n = Scalar::Mod {
                    value: reduce(&num),
                    modulus: p,
                };
                let d = Scalar::Mod {
                    value: reduce(&den),
                    modulus: p,
                };
                let inv = d.inv().ok_or_else(bad)?;
                Ok(&n * &inv)
            }
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => write!(f, "Q"),
            p => write!(f, "F_{p}"),
        }
    }
}

/// A field element tagged with its field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Mod { value: u32, modulus: u32 },
    Rat(BigRational),
}

pub(crate) fn mod_inv(a: u32, p: u32) -> Option<u32> {
    if a == 0 {
        return None;
    }
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, a as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    Some(t.rem_euclid(p as i64) as u32)
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 0,
            Scalar::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Mod { value, .. } => *value == 1,
            Scalar::Rat(q) => q.is_one(),
        }
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Mod { modulus, .. } => FieldSpec {
                characteristic: *modulus,
            },
            Scalar::Rat(_) => FieldSpec::rationals(),
        }
    }

    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Mod { value, modulus } => mod_inv(*value, *modulus).map(|v| Scalar::Mod {
                value: v,
                modulus: *modulus,
            }),
            Scalar::Rat(q) => (!q.is_zero()).then(|| Scalar::Rat(q.recip())),
        }
    }

    /// Residue in [0, p) for F_p elements.
    pub fn residue(&self) -> Option<u32> {
        match self {
            Scalar::Mod { value, .. } => Some(*value),
            Scalar::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Mod { .. } => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Mod { value, .. } => write!(f, "{value}"),
            Scalar::Rat(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
        }
    }
}

fn same_modulus(a: u32, b: u32) -> u32 {
    assert_eq!(a, b, "scalars from different fields");
    a
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod {
                    value: ((*a as u64 + *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Mod { value: a, modulus: p }, Scalar::Mod { value: b, modulus: q }) => {
                let p = same_modulus(*p, *q);
                Scalar::Mod {
                    value: ((*a as u64 * *b as u64) % p as u64) as u32,
                    modulus: p,
                }
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            _ => panic!("scalars from different fields"),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
            Scalar::Rat(q) => Scalar::Rat(-q),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Checks the canonical-form invariant: residues in range, rationals in lowest terms.
pub fn is_canonical(s: &Scalar) -> bool {
    match s {
        Scalar::Mod { value, modulus } => value < modulus,
        Scalar::Rat(q) => {
            use num_integer::Integer;
            q.denom().is_positive() && q.numer().gcd(q.denom()).is_one()
        }
    }
}
