//! Univariate polynomials over the centered Pochhammer basis.

use super::uni::UniPoly;
use super::Var;
use crate::scalar::{self, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial expressed over the basis C_d(t) = ((t+1−d)/2)_d, d ≥ 0.
///
/// C_d has degree exactly d with leading coefficient 2^{−d}, so the family
/// is triangular over the monomial basis, and C_d(−t) = (−1)^d C_d(t).
/// The basis is closed under multiplication:
///
/// C_A·C_B = Σ_j (−1)^j (−A/2)_j (−B/2)_j (−(A+B)/2)_j / j! · C_{A+B−2j},
///
/// where j runs to ⌊(A+B)/2⌋ and the summand dies earlier, at j = A/2 or
/// j = B/2, when A or B is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PochPoly<T> {
    var: Var,
    coeffs: BTreeMap<u32, T>,
}

impl<T: Scalar> PochPoly<T> {
    pub fn zero(var: Var) -> Self {
        PochPoly {
            var,
            coeffs: BTreeMap::new(),
        }
    }

    /// The basis element C_d.
    pub fn basis(var: Var, d: u32) -> Self {
        let mut coeffs = BTreeMap::new();
        coeffs.insert(d, T::one());
        PochPoly { var, coeffs }
    }

    pub fn from_coeffs(var: Var, coeffs: impl IntoIterator<Item = (u32, T)>) -> Self {
        let mut p = PochPoly::zero(var);
        for (d, c) in coeffs {
            p.add_coeff(d, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, d: u32) -> T {
        self.coeffs.get(&d).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &T)> {
        self.coeffs.iter().map(|(&d, c)| (d, c))
    }

    fn add_coeff(&mut self, d: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(d).or_insert_with(T::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&d);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = self.clone();
        for (d, c) in rhs.terms() {
            out.add_coeff(d, c.clone());
        }
        out
    }

    pub fn scaled(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        PochPoly {
            var: self.var,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&d, a)| (d, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Product expanded through the structure constants of the basis.
    /// Panics on mismatched variables.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.var, rhs.var, "variable mismatch");
        let mut out = Self::zero(self.var);
        for (a, ca) in self.terms() {
            for (b, cb) in rhs.terms() {
                let w = ca.clone() * cb.clone();
                for j in 0..=((a + b) / 2) {
                    let mut s = scalar::rising(&scalar::ratio::<T>(-(a as i64), 2), j)
                        * scalar::rising(&scalar::ratio::<T>(-(b as i64), 2), j)
                        * scalar::rising(&scalar::ratio::<T>(-((a + b) as i64), 2), j)
                        / scalar::factorial_t::<T>(j);
                    if s.is_zero() {
                        continue;
                    }
                    if j % 2 == 1 {
                        s = -s;
                    }
                    out.add_coeff(a + b - 2 * j, w.clone() * s);
                }
            }
        }
        out
    }

    /// C_d expanded over the monomial basis:
    /// C_d(t) = 2^{−d} · Π_{i=0}^{d−1} (t − (d−1) + 2i).
    pub fn basis_monomial(d: u32) -> UniPoly<T> {
        let mut p = UniPoly::one();
        for i in 0..d {
            let root = scalar::int::<T>(d as i64 - 1 - 2 * i as i64);
            p = &p * &UniPoly::from_coeffs(vec![-root, T::one()]);
        }
        p.scaled(&(T::one() / scalar::pow_u(&scalar::int::<T>(2), d)))
    }

    /// Exact change of basis to monomials.
    pub fn to_monomial(&self) -> UniPoly<T> {
        let mut out = UniPoly::zero();
        for (d, c) in self.terms() {
            out = &out + &Self::basis_monomial(d).scaled(c);
        }
        out
    }

    /// Inverse change of basis; exact because the basis is triangular with
    /// leading coefficients 2^{−d}.
    pub fn from_monomial(var: Var, p: &UniPoly<T>) -> Self {
        let mut rem = p.clone();
        let mut out = Self::zero(var);
        while let Some(d) = rem.degree() {
            let c = rem.leading().unwrap().clone() * scalar::pow_u(&scalar::int::<T>(2), d as u32);
            rem = &rem - &Self::basis_monomial(d as u32).scaled(&c);
            debug_assert!(rem.degree().is_none_or(|e| e < d));
            out.add_coeff(d as u32, c);
        }
        out
    }
}

// Rendering in terms of the basis elements, highest degree first.
impl<T: Scalar> fmt::Display for PochPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().rev() {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "C{}({})", d, self.var.name())?;
            } else {
                write!(f, "{}*C{}({})", mag, d, self.var.name())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::Rat;

    #[test]
    fn basis_monomial_images() {
        // C_0 = 1, C_1 = t/2, C_2 = (t^2 - 1)/4.
        assert_eq!(PochPoly::<Rat>::basis_monomial(0), UniPoly::one());
        assert_eq!(
            PochPoly::<Rat>::basis_monomial(1),
            UniPoly::monomial(ratio(1, 2), 1)
        );
        let c2 = PochPoly::<Rat>::basis_monomial(2);
        assert_eq!(c2.coeff(0), ratio(-1, 4));
        assert_eq!(c2.coeff(1), int(0));
        assert_eq!(c2.coeff(2), ratio(1, 4));
    }

    #[test]
    fn basis_is_triangular_with_parity() {
        for d in 0..=12u32 {
            let m = PochPoly::<Rat>::basis_monomial(d);
            assert_eq!(m.degree(), Some(d as usize));
            assert_eq!(
                m.leading().unwrap().clone(),
                ratio::<Rat>(1, 1) / crate::scalar::pow_u(&int::<Rat>(2), d)
            );
            // C_d(−t) = (−1)^d C_d(t): odd-offset coefficients vanish.
            for k in 0..=d as usize {
                if (d as usize - k) % 2 == 1 {
                    assert_eq!(m.coeff(k), int(0));
                }
            }
        }
    }

    #[test]
    fn product_examples() {
        let c = |d| PochPoly::<Rat>::basis(Var::X, d);
        assert_eq!(c(0).mul(&c(5)), c(5));
        // C_1·C_1 = C_2 + (1/4)C_0.
        let p = c(1).mul(&c(1));
        assert_eq!(p.coeff(2), int(1));
        assert_eq!(p.coeff(0), ratio(1, 4));
        assert_eq!(p.terms().count(), 2);
        // C_1·C_2 = C_3 + (3/4)C_1.
        let q = c(1).mul(&c(2));
        assert_eq!(q.coeff(3), int(1));
        assert_eq!(q.coeff(1), ratio(3, 4));
        assert_eq!(q.terms().count(), 2);
    }

    #[test]
    fn product_agrees_with_monomial_multiplication() {
        for a in 0..=8u32 {
            for b in 0..=8u32 {
                let ca = PochPoly::<Rat>::basis(Var::X, a);
                let cb = PochPoly::<Rat>::basis(Var::X, b);
                let lhs = ca.mul(&cb).to_monomial();
                let rhs = &ca.to_monomial() * &cb.to_monomial();
                assert_eq!(lhs, rhs, "A={} B={}", a, b);
            }
        }
    }

    #[test]
    fn basis_change_round_trip() {
        let p = PochPoly::<Rat>::from_coeffs(
            Var::Y,
            vec![(0, ratio(2, 3)), (3, int(-5)), (7, ratio(1, 2))],
        );
        assert_eq!(PochPoly::from_monomial(Var::Y, &p.to_monomial()), p);
        // x^2 = 4·C_2 + C_0.
        let x2 = UniPoly::<Rat>::monomial(int(1), 2);
        let q = PochPoly::from_monomial(Var::X, &x2);
        assert_eq!(q.coeff(2), int(4));
        assert_eq!(q.coeff(0), int(1));
        assert_eq!(q.terms().count(), 2);
    }

    #[test]
    #[should_panic(expected = "variable mismatch")]
    fn mixed_variables_rejected() {
        let a = PochPoly::<Rat>::basis(Var::X, 1);
        let b = PochPoly::<Rat>::basis(Var::Y, 1);
        let _ = a.mul(&b);
    }
}
