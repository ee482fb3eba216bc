use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact coefficient. Over a prime field the value is always an integer in `[0, p)`.
pub type Coeff = BigRational;

/// Largest characteristic accepted for prime fields.
pub const MAX_CHARACTERISTIC: u64 = (1 << 31) - 1;

/// Coefficient field of a ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    /// Builds the field of the given characteristic; `0` means the rationals.
    pub fn from_characteristic(characteristic: u64) -> Option<Field> {
        match characteristic {
            0 => Some(Field::Rational),
            p if p <= MAX_CHARACTERISTIC && is_prime(p) => Some(Field::Prime(p)),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    /// Maps an exact rational into the field. `None` when the denominator
    /// vanishes modulo the characteristic.
    pub fn convert(&self, value: &BigRational) -> Option<Coeff> {
        match self {
            Field::Rational => Some(value.clone()),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                let num = value.numer().mod_floor(&p);
                let den = value.denom().mod_floor(&p);
                if den.is_zero() {
                    return None;
                }
                let inv = den.modpow(&(&p - 2u32), &p);
                Some(BigRational::from_integer((num * inv).mod_floor(&p)))
            }
        }
    }

    fn reduce(&self, value: BigRational) -> Coeff {
        match self {
            Field::Rational => value,
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                BigRational::from_integer(value.to_integer().mod_floor(&p))
            }
        }
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a + b)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a - b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.reduce(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.reduce(-a)
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, a: &Coeff) -> Coeff {
        assert!(!a.is_zero(), "inverse of zero");
        match self {
            Field::Rational => a.recip(),
            Field::Prime(p) => {
                let p = BigInt::from(*p);
                BigRational::from_integer(a.to_integer().modpow(&(&p - 2u32), &p))
            }
        }
    }

    pub fn div(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.mul(a, &self.inv(b))
    }

    /// Whether `value` renders with a leading minus sign.
    pub fn is_negative(&self, value: &Coeff) -> bool {
        value.is_negative()
    }

    pub fn is_one(&self, value: &Coeff) -> bool {
        value.is_one()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "QQ"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Integer value of a coefficient when it has denominator one and fits in `i64`.
pub fn small_integer(value: &Coeff) -> Option<i64> {
    if value.is_integer() {
        value.to_integer().to_i64()
    } else {
        None
    }
}
