//! Coefficient scalar abstraction for the polynomial containers.
//!
//! The polynomial types in [`crate::poly`] are generic over any field-like
//! scalar satisfying [`Scalar`]. All verification code instantiates them at
//! [`crate::Rat`], the arbitrary-precision rational, because every identity
//! checked by this crate is an exact equality.

use num_traits::{FromPrimitive, Num, NumAssign, Signed};
use std::fmt;
use std::ops::Neg;

/// Field-like coefficient scalar.
///
/// Satisfied by `f32`/`f64` and by exact rationals; the crate-level aliases
/// pin everything to [`crate::Rat`].
pub trait Scalar:
    Num
    + NumAssign
    + Neg<Output = Self>
    + Signed
    + FromPrimitive
    + Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
{
}

impl<T> Scalar for T where
    T: Num
        + NumAssign
        + Neg<Output = Self>
        + Signed
        + FromPrimitive
        + Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
{
}

/// Embed a machine integer into the scalar.
pub fn int<T: Scalar>(n: i64) -> T {
    T::from_i64(n).expect("integer embeds into scalar")
}

/// The scalar n/d.
pub fn ratio<T: Scalar>(n: i64, d: i64) -> T {
    int::<T>(n) / int::<T>(d)
}

/// base^exp by binary exponentiation.
pub fn pow_u<T: Scalar>(base: &T, mut exp: u32) -> T {
    let mut acc = T::one();
    let mut sq = base.clone();
    while exp > 0 {
        if exp & 1 == 1 {
            acc *= sq.clone();
        }
        exp >>= 1;
        if exp > 0 {
            sq = sq.clone() * sq;
        }
    }
    acc
}

/// Rising factorial start·(start+1)···(start+m−1); 1 when m = 0.
pub fn rising<T: Scalar>(start: &T, m: u32) -> T {
    let mut acc = T::one();
    let mut factor = start.clone();
    for _ in 0..m {
        acc *= factor.clone();
        factor += T::one();
    }
    acc
}

/// m! in the scalar.
pub fn factorial_t<T: Scalar>(m: u32) -> T {
    rising(&T::one(), m)
}
