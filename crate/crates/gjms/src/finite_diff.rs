//! Finite-difference identities for exact univariate polynomials.
//!
//! Both identities here live over the binomial-coefficient basis
//! p(x) = Σ_k c_k·binom(x, k). The first states that the alternating
//! binomial sum Σ_a (−1)^a binom(M,a) p(a) picks out (−1)^M c_M. The second
//! is the partial-fraction evaluation of Σ_b (−1)^b binom(M,b) p(b)/(X−b),
//! verified symbolically after clearing the denominator (X−M)_{M+1} =
//! Π_{b=0}^{M}(X−b), so no pole bookkeeping at X ∈ {0,…,M} is needed.

use crate::exact::{binomial, factorial};
use crate::poly::UniPoly;
use crate::report::{CheckRecord, Timer};
use crate::scalar::int;
use crate::Rat;
use num_traits::{One, Zero};

/// binom(x, k) = x(x−1)···(x−k+1)/k! as a polynomial in x.
pub fn binomial_poly(k: u32) -> UniPoly<Rat> {
    let mut p = UniPoly::one();
    for i in 0..k {
        p = &p * &UniPoly::from_coeffs(vec![int::<Rat>(-(i as i64)), Rat::one()]);
    }
    p.scaled(&(Rat::one() / factorial(k)))
}

/// The unique coefficients c_k with p(x) = Σ c_k·binom(x, k), computed as
/// forward differences of p at 0; length is degree + 1.
pub fn binomial_basis_coeffs(p: &UniPoly<Rat>) -> Vec<Rat> {
    let deg = match p.degree() {
        Some(d) => d,
        None => return Vec::new(),
    };
    let mut values: Vec<Rat> = (0..=deg).map(|j| p.eval(&int(j as i64))).collect();
    let mut coeffs = Vec::with_capacity(deg + 1);
    for _ in 0..=deg {
        coeffs.push(values[0].clone());
        for j in 0..values.len() - 1 {
            values[j] = values[j + 1].clone() - values[j].clone();
        }
        values.pop();
    }
    coeffs
}

/// Verifies Σ_{a=0}^{M} (−1)^a binom(M,a) p(a) = (−1)^M c_M exactly
/// (c_M = 0 when deg p < M).
pub fn check_finite_difference(p: &UniPoly<Rat>, m: u32) -> CheckRecord {
    let timer = Timer::start();
    let mut lhs = Rat::zero();
    for a in 0..=m {
        let mut term = binomial(m, a) * p.eval(&int(a as i64));
        if a % 2 == 1 {
            term = -term;
        }
        lhs += term;
    }
    let coeffs = binomial_basis_coeffs(p);
    let mut rhs = coeffs.get(m as usize).cloned().unwrap_or_else(Rat::zero);
    if m % 2 == 1 {
        rhs = -rhs;
    }
    CheckRecord::comparison(
        "finite_difference",
        vec![("M", m.to_string()), ("p", p.to_string())],
        &lhs,
        &rhs,
        timer,
    )
}

// Both sides of the partial-fraction identity, multiplied through by
// Π_{b=0}^{M}(X−b). `correction_sign` scales the extra c_{M+1}/(M+1) term
// that appears when deg p = M+1.
fn partial_fraction_sides(
    p: &UniPoly<Rat>,
    m: u32,
    correction_sign: i64,
) -> (UniPoly<Rat>, UniPoly<Rat>) {
    let linear = |b: i64| UniPoly::from_coeffs(vec![int::<Rat>(-b), Rat::one()]);
    let mut lhs = UniPoly::zero();
    for b in 0..=m {
        let mut weight = binomial(m, b) * p.eval(&int(b as i64));
        if b % 2 == 1 {
            weight = -weight;
        }
        if weight.is_zero() {
            continue;
        }
        let mut cofactor = UniPoly::one();
        for j in 0..=m {
            if j != b {
                cofactor = &cofactor * &linear(j as i64);
            }
        }
        lhs = &lhs + &cofactor.scaled(&weight);
    }
    let mut main = factorial(m);
    if m % 2 == 1 {
        main = -main;
    }
    let mut rhs = p.scaled(&main);
    let coeffs = binomial_basis_coeffs(p);
    if let Some(top) = coeffs.get(m as usize + 1) {
        if !top.is_zero() {
            let mut denominator = UniPoly::one();
            for b in 0..=m {
                denominator = &denominator * &linear(b as i64);
            }
            let scale = int::<Rat>(correction_sign) * top.clone() / int::<Rat>((m + 1) as i64);
            rhs = &rhs + &denominator.scaled(&scale);
        }
    }
    (lhs, rhs)
}

/// Verifies, as an identity of polynomials in X after clearing the
/// denominator (X−M)_{M+1}:
///
/// Σ_{b=0}^{M} (−1)^b binom(M,b) p(b)/(X−b)
///   = (−1)^M M!/(X−M)_{M+1} · p(X) + (−1)^{M+1} c_{M+1}/(M+1)
///
/// for deg p ≤ M+1, where the correction term only appears for
/// deg p = M+1. The sign (−1)^{M+1} on the correction term is fixed by
/// brute-force oracle (see the tests); a constant "+" sign fails already at
/// M = 0, p(x) = x.
pub fn check_partial_fractions(p: &UniPoly<Rat>, m: u32) -> CheckRecord {
    let timer = Timer::start();
    assert!(
        p.degree().is_none_or(|d| d <= m as usize + 1),
        "degree of p must be at most M+1"
    );
    let sign = if m % 2 == 0 { -1 } else { 1 };
    let (lhs, rhs) = partial_fraction_sides(p, m, sign);
    CheckRecord::comparison(
        "partial_fractions",
        vec![("M", m.to_string()), ("p", p.to_string())],
        &lhs,
        &rhs,
        timer,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::CheckStatus;
    use crate::scalar::ratio;

    #[test]
    fn binomial_basis_examples() {
        assert_eq!(binomial_basis_coeffs(&UniPoly::one()), vec![int::<Rat>(1)]);
        // x^2 = binom(x,1) + 2·binom(x,2).
        let x2 = UniPoly::<Rat>::monomial(Rat::one(), 2);
        assert_eq!(
            binomial_basis_coeffs(&x2),
            vec![int::<Rat>(0), int(1), int(2)]
        );
        let b3 = binomial_poly(3);
        assert_eq!(
            binomial_basis_coeffs(&b3),
            vec![int::<Rat>(0), int(0), int(0), int(1)]
        );
        assert!(binomial_basis_coeffs(&UniPoly::zero()).is_empty());
    }

    #[test]
    fn binomial_basis_round_trip() {
        let p = UniPoly::<Rat>::from_coeffs(vec![ratio(1, 3), int(-2), int(0), ratio(7, 2)]);
        let coeffs = binomial_basis_coeffs(&p);
        let mut rebuilt = UniPoly::zero();
        for (k, c) in coeffs.iter().enumerate() {
            rebuilt = &rebuilt + &binomial_poly(k as u32).scaled(c);
        }
        assert_eq!(rebuilt, p);
    }

    #[test]
    fn alternating_sum_examples() {
        let x2 = UniPoly::<Rat>::monomial(Rat::one(), 2);
        assert!(check_finite_difference(&x2, 2).is_pass());
        assert!(check_finite_difference(&UniPoly::one(), 0).is_pass());
        // deg p < M: both sides vanish.
        assert!(check_finite_difference(&x2, 5).is_pass());
    }

    #[test]
    fn partial_fraction_examples() {
        // M = 1, p = 1: 1/X − 1/(X−1) = −1/((X−1)X).
        assert!(check_partial_fractions(&UniPoly::one(), 1).is_pass());
        // M = 1, p = binom(x,2): both sides vanish.
        assert!(check_partial_fractions(&binomial_poly(2), 1).is_pass());
        // M = 0, p = x: passes only with the alternating correction sign.
        let x = UniPoly::<Rat>::x();
        assert!(check_partial_fractions(&x, 0).is_pass());
    }

    // The oracle that fixes the correction sign: with the constant "+" the
    // identity fails for every even M at p = binom(x, M+1), while the
    // alternating sign (−1)^{M+1} passes for all M and all basis elements.
    #[test]
    fn correction_sign_oracle() {
        for m in 0..=8u32 {
            for k in 0..=m + 1 {
                let p = binomial_poly(k);
                let (lhs, rhs) = partial_fraction_sides(&p, m, if m % 2 == 0 { -1 } else { 1 });
                assert_eq!(lhs, rhs, "alternating sign, M={} k={}", m, k);
            }
            let top = binomial_poly(m + 1);
            let (lhs, rhs) = partial_fraction_sides(&top, m, 1);
            if m % 2 == 0 {
                assert_ne!(lhs, rhs, "constant + sign must fail at even M={}", m);
            } else {
                assert_eq!(lhs, rhs, "signs agree at odd M={}", m);
            }
        }
    }

    #[test]
    #[should_panic(expected = "degree of p must be at most M+1")]
    fn degree_precondition_enforced() {
        let p = UniPoly::<Rat>::monomial(Rat::one(), 4);
        check_partial_fractions(&p, 1);
    }

    #[test]
    fn record_contents() {
        let rec = check_finite_difference(&UniPoly::one(), 0);
        assert_eq!(rec.status, CheckStatus::Pass);
        assert_eq!(rec.lhs, "1");
        assert_eq!(rec.params["M"], "0");
    }
}
