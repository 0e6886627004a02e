//! Exact rational primitives: Pochhammer symbols, factorials, and binomial
//! coefficients with arbitrary (possibly half-integer) top argument.

use crate::scalar;
use crate::Rat;
use num_traits::{One, Zero};

/// The Pochhammer symbol (α)_m = α(α+1)···(α+m−1), with (α)_0 = 1.
pub fn pochhammer(alpha: &Rat, m: u32) -> Rat {
    scalar::rising(alpha, m)
}

/// Generalized binomial coefficient α(α−1)···(α−k+1)/k!.
///
/// Agrees with the integer binomial coefficient whenever α is a nonnegative
/// integer, and stays exact for rational α such as q/2.
pub fn gen_binomial(alpha: &Rat, k: u32) -> Rat {
    let mut num = Rat::one();
    let mut factor = alpha.clone();
    for _ in 0..k {
        num *= factor.clone();
        factor -= Rat::one();
    }
    num / factorial(k)
}

/// n! as an exact rational.
pub fn factorial(n: u32) -> Rat {
    scalar::factorial_t(n)
}

/// Integer binomial coefficient as an exact rational; zero when k > n.
pub fn binomial(n: u32, k: u32) -> Rat {
    if k > n {
        Rat::zero()
    } else {
        gen_binomial(&scalar::int(n as i64), k)
    }
}

/// The recursion constant 2^{n−1}·n!·(n−1)! for n ≥ 1.
pub fn c_n(n: u32) -> Rat {
    assert!(n >= 1, "c_n is defined for n >= 1");
    scalar::pow_u(&scalar::int::<Rat>(2), n - 1) * factorial(n) * factorial(n - 1)
}
