//! Coefficient rings for root data.

use std::fmt::Debug;
use std::hash::Hash;

use num_traits::{CheckedAdd, CheckedMul, CheckedNeg, CheckedSub, One, Zero};

use crate::ring::{Golden, GoldenNumber, Sign};

/// A totally ordered exact ring that can carry the Gram matrix of a
/// Coxeter diagram.
pub trait Coefficient:
    Copy + Eq + Ord + Hash + Debug + Send + Sync + Zero + One + CheckedAdd + CheckedSub + CheckedMul + CheckedNeg + 'static
{
    /// The off-diagonal Gram entry −2cos(π/m) for bond label `m`, when the
    /// ring contains it.
    fn bond(m: u32) -> Option<Self>;

    /// `[rational, φ]` parts, for serialization.
    fn to_pair(self) -> [i64; 2];

    fn sign(self) -> Sign {
        match self.cmp(&Self::zero()) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }
}

macro_rules! integer_coefficient {
    ($($t:ty),*) => {$(
        impl Coefficient for $t {
            fn bond(m: u32) -> Option<Self> {
                match m {
                    2 => Some(0),
                    3 => Some(-1),
                    _ => None,
                }
            }

            fn to_pair(self) -> [i64; 2] {
                [self as i64, 0]
            }
        }
    )*};
}

integer_coefficient!(i32, i64);

impl Coefficient for GoldenNumber {
    fn bond(m: u32) -> Option<Self> {
        match m {
            2 => Some(Golden::new(0, 0)),
            3 => Some(Golden::new(-1, 0)),
            5 => Some(Golden::new(0, -1)),
            _ => None,
        }
    }

    fn to_pair(self) -> [i64; 2] {
        [self.a(), self.b()]
    }
}
