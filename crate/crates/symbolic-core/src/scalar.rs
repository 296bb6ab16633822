use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Reduced fraction with positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Coefficient field for polynomials. Implemented by `Rational` and `Cyclotomic`.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn inv(&self) -> Option<Self>;
    fn from_rational(q: Rational) -> Self;
    /// The primitive cube root of unity, when the field contains it.
    fn omega() -> Option<Self>;
    /// Galois conjugation ω ↦ ω²; identity on ℚ.
    fn conj(&self) -> Self;
    /// Rational part when the value lies in ℚ.
    fn as_rational(&self) -> Option<Rational>;

    fn from_int(n: i64) -> Self {
        Self::from_rational(int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|i| self.clone() * i)
    }

    fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self;
        }
        acc
    }
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn from_rational(q: Rational) -> Self {
        q
    }
    fn omega() -> Option<Self> {
        None
    }
    fn conj(&self) -> Self {
        self.clone()
    }
    fn as_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Element a + bω of ℚ(ω), where ω² + ω + 1 = 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Cyclotomic {
    pub a: Rational,
    pub b: Rational,
}

impl Cyclotomic {
    pub fn new(a: Rational, b: Rational) -> Self {
        Cyclotomic { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Cyclotomic::new(int(a), int(b))
    }

    pub fn w() -> Self {
        Cyclotomic::from_ints(0, 1)
    }

    pub fn w2() -> Self {
        Cyclotomic::from_ints(-1, -1)
    }

    /// a² − ab + b², the field norm down to ℚ.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let az = Zero::is_zero(&self.a);
        let bz = Zero::is_zero(&self.b);
        match (az, bz) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => {
                if One::is_one(&self.b) {
                    write!(f, "w")
                } else if One::is_one(&(-self.b.clone())) {
                    write!(f, "-w")
                } else {
                    write!(f, "{}*w", self.b)
                }
            }
            (false, false) => {
                let sign = if self.b.is_negative() { "-" } else { "+" };
                let mag = self.b.abs();
                if One::is_one(&mag) {
                    write!(f, "({} {} w)", self.a, sign)
                } else {
                    write!(f, "({} {} {}*w)", self.a, sign, mag)
                }
            }
        }
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(self.a + o.a, self.b + o.b)
    }
}

impl<'a> Add<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, o: &'a Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(self.a + &o.a, self.b + &o.b)
    }
}

impl Sub for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(self.a - o.a, self.b - o.b)
    }
}

impl<'a> Sub<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, o: &'a Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(self.a - &o.a, self.b - &o.b)
    }
}

impl<'a> Mul<&'a Cyclotomic> for Cyclotomic {
    type Output = Cyclotomic;
    // (a + bω)(c + dω) = ac − bd + (ad + bc − bd)ω
    fn mul(self, o: &'a Cyclotomic) -> Cyclotomic {
        let bd = &self.b * &o.b;
        Cyclotomic::new(
            &self.a * &o.a - &bd,
            &self.a * &o.b + &self.b * &o.a - bd,
        )
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, o: Cyclotomic) -> Cyclotomic {
        self * &o
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new(-self.a, -self.b)
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::default()
    }
    fn one() -> Self {
        Cyclotomic::from_ints(1, 0)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(&self.a) && Zero::is_zero(&self.b)
    }
    fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if Zero::is_zero(&n) {
            return None;
        }
        let c = self.conj();
        Some(Cyclotomic::new(c.a / &n, c.b / n))
    }
    fn from_rational(q: Rational) -> Self {
        Cyclotomic::new(q, Zero::zero())
    }
    fn omega() -> Option<Self> {
        Some(Cyclotomic::w())
    }
    // ω ↦ ω² = −1 − ω sends a + bω to (a − b) − bω
    fn conj(&self) -> Self {
        Cyclotomic::new(&self.a - &self.b, -self.b.clone())
    }
    fn as_rational(&self) -> Option<Rational> {
        if Zero::is_zero(&self.b) {
            Some(self.a.clone())
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = Cyclotomic::w();
        let w3 = w.pow(3);
        assert_eq!(w3, Cyclotomic::one());
        let s = Cyclotomic::one() + &w + &(w.clone() * &w);
        assert!(Scalar::is_zero(&s));
        assert_eq!(w.clone() * &w, Cyclotomic::w2());
    }

    #[test]
    fn conjugation_swaps_w_and_w2() {
        assert_eq!(Cyclotomic::w().conj(), Cyclotomic::w2());
        assert_eq!(Cyclotomic::w2().conj(), Cyclotomic::w());
    }

    #[test]
    fn inverse_round_trip() {
        let x = Cyclotomic::new(rat(3, 2), rat(-5, 7));
        let y = x.inv().unwrap();
        assert_eq!(x * &y, Cyclotomic::one());
        assert!(Cyclotomic::zero().inv().is_none());
    }

    #[test]
    fn w_times_value_rule() {
        // ω·(a+bω) = −b + (a−b)ω
        let x = Cyclotomic::new(int(4), int(9));
        assert_eq!(Cyclotomic::w() * &x, Cyclotomic::new(int(-9), int(-5)));
    }
}
