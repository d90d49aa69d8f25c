//! Exact arithmetic in the golden integer ring Z[φ], φ² = φ + 1.
//!
//! Values are `a + bφ` with machine-integer parts. Every operation is
//! overflow-checked: the `checked_*` methods return `None`, the operator
//! impls panic. Nothing ever wraps.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, One, PrimInt, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element `a + bφ` of Z[φ].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Golden<T> {
    a: T,
    b: T,
}

/// Sign of a real number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of<T: Zero + PartialOrd>(x: T) -> Sign {
        let zero = T::zero();
        if x > zero {
            Sign::Positive
        } else if x < zero {
            Sign::Negative
        } else {
            Sign::Zero
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }

    pub fn product(self, other: Sign) -> Sign {
        match (self, other) {
            (Sign::Zero, _) | (_, Sign::Zero) => Sign::Zero,
            (x, y) if x == y => Sign::Positive,
            _ => Sign::Negative,
        }
    }
}

impl<T: PrimInt + Signed> Golden<T> {
    pub fn new(a: T, b: T) -> Self {
        Golden { a, b }
    }

    /// The golden ratio φ itself.
    pub fn phi() -> Self {
        Golden::new(T::zero(), T::one())
    }

    pub fn from_int(a: T) -> Self {
        Golden::new(a, T::zero())
    }

    /// Rational part.
    pub fn a(&self) -> T {
        self.a
    }

    /// Coefficient of φ.
    pub fn b(&self) -> T {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn checked_add(&self, rhs: &Self) -> Option<Self> {
        Some(Golden::new(self.a.checked_add(&rhs.a)?, self.b.checked_add(&rhs.b)?))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Option<Self> {
        Some(Golden::new(self.a.checked_sub(&rhs.a)?, self.b.checked_sub(&rhs.b)?))
    }

    pub fn checked_neg(&self) -> Option<Self> {
        Some(Golden::new(T::zero().checked_sub(&self.a)?, T::zero().checked_sub(&self.b)?))
    }

    /// (a+bφ)(c+dφ) = (ac+bd) + (ad+bc+bd)φ.
    pub fn checked_mul(&self, rhs: &Self) -> Option<Self> {
        let ac = self.a.checked_mul(&rhs.a)?;
        let bd = self.b.checked_mul(&rhs.b)?;
        let ad = self.a.checked_mul(&rhs.b)?;
        let bc = self.b.checked_mul(&rhs.a)?;
        Some(Golden::new(ac.checked_add(&bd)?, ad.checked_add(&bc)?.checked_add(&bd)?))
    }

    /// Image under φ ↦ 1 − φ, the nontrivial automorphism of Z[φ].
    pub fn checked_conjugate(&self) -> Option<Self> {
        Some(Golden::new(self.a.checked_add(&self.b)?, T::zero().checked_sub(&self.b)?))
    }

    pub fn try_add(&self, rhs: &Self) -> Result<Self> {
        self.checked_add(rhs).ok_or(Error::Overflow)
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        self.checked_mul(rhs).ok_or(Error::Overflow)
    }

    pub fn galois_conjugate(&self) -> Result<Self> {
        self.checked_conjugate().ok_or(Error::Overflow)
    }

    /// Exact sign under the real embedding φ = (1+√5)/2.
    ///
    /// 2(a + bφ) = (2a+b) + b√5, so compare (2a+b)² against 5b².
    pub fn checked_sign(&self) -> Option<Sign> {
        let two = T::one() + T::one();
        let p = two.checked_mul(&self.a)?.checked_add(&self.b)?;
        let q = self.b;
        let sp = Sign::of(p);
        let sq = Sign::of(q);
        if sp == sq || sq == Sign::Zero {
            return Some(sp);
        }
        if sp == Sign::Zero {
            return Some(sq);
        }
        let p2 = p.checked_mul(&p)?;
        let q2 = q.checked_mul(&q)?.checked_mul(&T::from(5)?)?;
        // Opposite signs: the term with the larger square wins.
        Some(match p2.cmp(&q2) {
            Ordering::Greater => sp,
            Ordering::Less => sq,
            Ordering::Equal => Sign::Zero,
        })
    }

    pub fn sign(&self) -> Result<Sign> {
        self.checked_sign().ok_or(Error::Overflow)
    }

    /// Floating-point approximation, for display only.
    pub fn approx(&self) -> f64 {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * phi
    }
}

pub type GoldenNumber = Golden<i64>;

impl<T: PrimInt + Signed> Add for Golden<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("Z[φ] addition overflow")
    }
}

impl<T: PrimInt + Signed> Sub for Golden<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Golden::checked_sub(&self, &rhs).expect("Z[φ] subtraction overflow")
    }
}

impl<T: PrimInt + Signed> Mul for Golden<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Golden::checked_mul(&self, &rhs).expect("Z[φ] multiplication overflow")
    }
}

impl<T: PrimInt + Signed> Neg for Golden<T> {
    type Output = Self;
    fn neg(self) -> Self {
        Golden::checked_neg(&self).expect("Z[φ] negation overflow")
    }
}

impl<T: PrimInt + Signed> CheckedAdd for Golden<T> {
    fn checked_add(&self, v: &Self) -> Option<Self> {
        Golden::checked_add(self, v)
    }
}

impl<T: PrimInt + Signed> CheckedSub for Golden<T> {
    fn checked_sub(&self, v: &Self) -> Option<Self> {
        Golden::checked_sub(self, v)
    }
}

impl<T: PrimInt + Signed> CheckedMul for Golden<T> {
    fn checked_mul(&self, v: &Self) -> Option<Self> {
        Golden::checked_mul(self, v)
    }
}

impl<T: PrimInt + Signed> CheckedNeg for Golden<T> {
    fn checked_neg(&self) -> Option<Self> {
        Golden::checked_neg(self)
    }
}

impl<T: PrimInt + Signed> Zero for Golden<T> {
    fn zero() -> Self {
        Golden::new(T::zero(), T::zero())
    }
    fn is_zero(&self) -> bool {
        Golden::is_zero(self)
    }
}

impl<T: PrimInt + Signed> One for Golden<T> {
    fn one() -> Self {
        Golden::from_int(T::one())
    }
}

impl<T: PrimInt + Signed> PartialOrd for Golden<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order of the real embedding.
impl<T: PrimInt + Signed> Ord for Golden<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = Golden::checked_sub(self, other).expect("Z[φ] comparison overflow");
        match diff.checked_sign().expect("Z[φ] comparison overflow") {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl<T: PrimInt + Signed + fmt::Display> fmt::Display for Golden<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}φ", self.b),
            (false, false) if self.b < T::zero() => write!(f, "{}{}φ", self.a, self.b),
            (false, false) => write!(f, "{}+{}φ", self.a, self.b),
        }
    }
}

impl<T: PrimInt + Signed + fmt::Display> fmt::Debug for Golden<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Serialized as the pair `[a, b]`.
impl<T: PrimInt + Signed + Serialize> Serialize for Golden<T> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a, self.b].serialize(s)
    }
}

impl<'de, T: PrimInt + Signed + Deserialize<'de>> Deserialize<'de> for Golden<T> {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[T; 2]>::deserialize(d)?;
        Ok(Golden::new(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g(a: i64, b: i64) -> GoldenNumber {
        Golden::new(a, b)
    }

    #[test]
    fn addition_examples() {
        assert_eq!(g(1, 0) + g(0, 1), g(1, 1));
        assert_eq!(g(2, -1) + g(-2, 1), g(0, 0));
        assert_eq!(g(0, 2) + g(1, 3), g(1, 5));
    }

    #[test]
    fn multiplication_examples() {
        let phi = GoldenNumber::phi();
        assert_eq!(phi * phi, g(1, 1));
        assert_eq!(g(1, 1) * GoldenNumber::one(), g(1, 1));
        // φ(1−φ) = φ − φ² = −1
        assert_eq!(g(0, 1) * g(1, -1), g(-1, 0));
    }

    #[test]
    fn sign_examples() {
        assert_eq!(g(1, -1).sign().unwrap(), Sign::Negative);
        assert_eq!(g(0, 0).sign().unwrap(), Sign::Zero);
        assert_eq!(g(-1, 1).sign().unwrap(), Sign::Positive);
        // 1/φ² = 2 − φ > 0 and close to zero
        assert_eq!(g(2, -1).sign().unwrap(), Sign::Positive);
        assert_eq!(g(-2, 1).sign().unwrap(), Sign::Negative);
        // Fibonacci approximants straddle zero: F(n+1) − F(n)φ alternates
        assert_eq!(g(89, -55).sign().unwrap(), Sign::Positive);
        assert_eq!(g(144, -89).sign().unwrap(), Sign::Negative);
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(GoldenNumber::phi().galois_conjugate().unwrap(), g(1, -1));
        assert_eq!(g(5, 0).galois_conjugate().unwrap(), g(5, 0));
        let x = g(2, 3);
        assert_eq!(x.galois_conjugate().unwrap().galois_conjugate().unwrap(), x);
    }

    #[test]
    fn overflow_is_signaled() {
        let big = g(i64::MAX, 0);
        assert!(big.checked_add(&g(1, 0)).is_none());
        assert!(matches!(big.try_mul(&g(2, 0)), Err(Error::Overflow)));
        assert!(g(0, i64::MAX).checked_mul(&g(0, 2)).is_none());
        assert!(g(i64::MAX, i64::MAX).sign().is_err());
    }

    #[test]
    #[should_panic(expected = "overflow")]
    fn operator_overflow_panics() {
        let _ = g(i64::MAX, 0) + g(1, 0);
    }

    #[test]
    fn ordering_follows_real_value() {
        let mut xs = [g(1, 0), g(0, 1), g(2, -1), g(-1, 1), g(0, 0), g(1, 1)];
        xs.sort();
        let approx: Vec<f64> = xs.iter().map(|x| x.approx()).collect();
        assert!(approx.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn generic_over_width() {
        let x: Golden<i32> = Golden::new(3, 4);
        assert_eq!(x * x, Golden::new(9 + 16, 24 + 16));
        assert!(Golden::<i8>::new(100, 0).checked_add(&Golden::new(100, 0)).is_none());
    }

    #[test]
    fn serializes_as_pair() {
        assert_eq!(serde_json::to_string(&g(-2, 3)).unwrap(), "[-2,3]");
        let back: GoldenNumber = serde_json::from_str("[4,-1]").unwrap();
        assert_eq!(back, g(4, -1));
    }

    fn small() -> impl Strategy<Value = GoldenNumber> {
        (-1000i64..1000, -1000i64..1000).prop_map(|(a, b)| g(a, b))
    }

    proptest! {
        #[test]
        fn ring_axioms(x in small(), y in small(), z in small()) {
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!((x + y) + z, x + (y + z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!(x + y, y + x);
        }

        #[test]
        fn sign_is_multiplicative(x in small(), y in small()) {
            let sx = x.sign().unwrap();
            let sy = y.sign().unwrap();
            prop_assert_eq!((x * y).sign().unwrap(), sx.product(sy));
            prop_assert_eq!(sx == Sign::Zero, x.is_zero());
        }

        #[test]
        fn sign_matches_float(x in small()) {
            let f = x.approx();
            if f.abs() > 1e-6 {
                prop_assert_eq!(x.sign().unwrap(), if f > 0.0 { Sign::Positive } else { Sign::Negative });
            }
        }

        #[test]
        fn conjugation_is_ring_involution(x in small(), y in small()) {
            let c = |v: GoldenNumber| v.galois_conjugate().unwrap();
            prop_assert_eq!(c(x * y), c(x) * c(y));
            prop_assert_eq!(c(x + y), c(x) + c(y));
            prop_assert_eq!(c(c(x)), x);
        }
    }
}
