//! Exact scalar fields for the linear-algebra layer.
//!
//! Everything downstream is generic over [`Scalar`]: the rationals for
//! characteristic 0 and a runtime prime field for characteristic p.  No
//! floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

/// An exact field of scalars.
///
/// `from_int` and `try_inv` are the only operations beyond the usual
/// num-traits ring bounds; `try_inv` returns `None` exactly on zero.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_int(n: i64) -> Self;
    fn try_inv(&self) -> Option<Self>;

    fn field_name() -> &'static str;
}

/// Exact rational scalars.
pub type Rat = BigRational;

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }

    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn field_name() -> &'static str {
        "Q"
    }
}

/// An element of the prime field F_p with the modulus carried at runtime.
///
/// `modulus == 0` marks an unbound constant (the image of an integer, e.g.
/// `Zero::zero()`); arithmetic binds it to the other operand's modulus.
/// Mixing two distinct nonzero moduli is a programming error and panics.
#[derive(Clone, Copy, Debug)]
pub struct Fp {
    modulus: u64,
    value: i64,
}

impl Fp {
    pub fn new(modulus: u64, value: i64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        Fp {
            modulus,
            value: value.rem_euclid(modulus as i64),
        }
    }

    fn unbound(value: i64) -> Self {
        Fp { modulus: 0, value }
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn value(&self) -> i64 {
        self.value
    }

    fn join(a: u64, b: u64) -> u64 {
        match (a, b) {
            (0, m) | (m, 0) => m,
            (m, n) => {
                assert_eq!(m, n, "mixed prime-field moduli {m} and {n}");
                m
            }
        }
    }

    fn reduce(value: i128, modulus: u64) -> i64 {
        if modulus == 0 {
            i64::try_from(value).expect("unbound F_p constant overflow")
        } else {
            (value.rem_euclid(modulus as i128)) as i64
        }
    }

    fn bind(&self, modulus: u64) -> i64 {
        Self::reduce(self.value as i128, modulus)
    }
}

impl PartialEq for Fp {
    fn eq(&self, other: &Self) -> bool {
        let m = Self::join(self.modulus, other.modulus);
        self.bind(m) == other.bind(m)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        let m = Self::join(self.modulus, rhs.modulus);
        Fp {
            modulus: m,
            value: Self::reduce(self.bind(m) as i128 + rhs.bind(m) as i128, m),
        }
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        let m = Self::join(self.modulus, rhs.modulus);
        Fp {
            modulus: m,
            value: Self::reduce(self.bind(m) as i128 - rhs.bind(m) as i128, m),
        }
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        let m = Self::join(self.modulus, rhs.modulus);
        Fp {
            modulus: m,
            value: Self::reduce(self.bind(m) as i128 * rhs.bind(m) as i128, m),
        }
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp {
            modulus: self.modulus,
            value: Self::reduce(-(self.value as i128), self.modulus),
        }
    }
}

impl Zero for Fp {
    fn zero() -> Self {
        Fp::unbound(0)
    }
    fn is_zero(&self) -> bool {
        if self.modulus == 0 {
            self.value == 0
        } else {
            self.value.rem_euclid(self.modulus as i64) == 0
        }
    }
}

impl One for Fp {
    fn one() -> Self {
        Fp::unbound(1)
    }
}

impl Scalar for Fp {
    fn from_int(n: i64) -> Self {
        Fp::unbound(n)
    }

    fn try_inv(&self) -> Option<Self> {
        let p = self.modulus;
        assert!(p != 0, "cannot invert an unbound F_p constant");
        let a = self.value.rem_euclid(p as i64);
        if a == 0 {
            return None;
        }
        // extended Euclid
        let (mut r0, mut r1) = (p as i64, a);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        assert_eq!(r0, 1, "modulus {p} is not prime");
        Some(Fp::new(p, t0))
    }

    fn field_name() -> &'static str {
        "F_p"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_inverse_round_trip() {
        for p in [2u64, 3, 5, 7, 13] {
            for a in 1..p as i64 {
                let x = Fp::new(p, a);
                let inv = x.try_inv().unwrap();
                assert!((x * inv).eq(&Fp::one()), "p={p} a={a}");
            }
        }
    }

    #[test]
    fn fp_unbound_constants_bind() {
        let x = Fp::new(5, 3);
        let y = x + Fp::from_int(7); // 3 + 7 = 10 = 0 mod 5
        assert!(y.is_zero());
    }

    #[test]
    fn rational_inverse() {
        let x = Rat::from_int(-6);
        assert_eq!(x.clone() * x.try_inv().unwrap(), Rat::one());
        assert!(Rat::zero().try_inv().is_none());
    }
}
