//! Sparse bivariate polynomials in the commuting formal variables X and Y.

use super::uni::UniPoly;
use super::Var;
use crate::scalar::{self, Scalar};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Bivariate polynomial as a sparse map (i, j) → coefficient of X^i·Y^j.
/// Zero coefficients are never stored, so equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly<T> {
    terms: BTreeMap<(u32, u32), T>,
}

/// Division by (X + 1 − a) left a nonzero remainder: the dividend does not
/// vanish on the line X = a − 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearDivisionError<T> {
    pub shift: i64,
    pub remainder: BiPoly<T>,
}

impl<T: Scalar> fmt::Display for LinearDivisionError<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "division by (X + 1 - {}) leaves remainder {}",
            self.shift, self.remainder
        )
    }
}

impl<T: Scalar> std::error::Error for LinearDivisionError<T> {}

impl<T: Scalar> BiPoly<T> {
    pub fn zero() -> Self {
        BiPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(0, 0, c)
    }

    /// c·X^i·Y^j.
    pub fn monomial(i: u32, j: u32, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn var(v: Var) -> Self {
        match v {
            Var::X => Self::monomial(1, 0, T::one()),
            Var::Y => Self::monomial(0, 1, T::one()),
        }
    }

    /// x_part(X)·y_part(Y).
    pub fn from_separable(x_part: &UniPoly<T>, y_part: &UniPoly<T>) -> Self {
        let mut p = Self::zero();
        for (i, a) in x_part.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y_part.coeffs().iter().enumerate() {
                p.add_term(i as u32, j as u32, a.clone() * b.clone());
            }
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, i: u32, j: u32) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), &T)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn y_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    fn add_term(&mut self, i: u32, j: u32, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn scaled(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, a)| (k, a.clone() * c.clone()))
                .collect(),
        }
    }

    /// Exact substitution X = x0, Y = y0.
    pub fn eval(&self, x0: &T, y0: &T) -> T {
        let xd = self.x_degree().unwrap_or(0) as usize;
        let yd = self.y_degree().unwrap_or(0) as usize;
        let xp = power_table(x0, xd);
        let yp = power_table(y0, yd);
        let mut acc = T::zero();
        for (&(i, j), c) in &self.terms {
            acc += c.clone() * xp[i as usize].clone() * yp[j as usize].clone();
        }
        acc
    }

    /// X ↔ Y.
    pub fn swap_vars(&self) -> Self {
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// (X, Y) → (−X, −Y).
    pub fn negate_vars(&self) -> Self {
        BiPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    let c = if (i + j) % 2 == 1 { -c.clone() } else { c.clone() };
                    ((i, j), c)
                })
                .collect(),
        }
    }

    /// Exact quotient by the linear factor (X + 1 − a), i.e. synthetic
    /// division in X at the root X = a − 1 with coefficients that are
    /// polynomials in Y. Errors with the remainder when the factor does not
    /// divide.
    pub fn exact_div_linear(&self, a: i64) -> Result<Self, LinearDivisionError<T>> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let root = scalar::int::<T>(a - 1);
        let dx = self.x_degree().unwrap() as usize;
        // rows[i] = coefficient of X^i as a map j → coeff.
        let mut rows: Vec<BTreeMap<u32, T>> = vec![BTreeMap::new(); dx + 1];
        for (&(i, j), c) in &self.terms {
            rows[i as usize].insert(j, c.clone());
        }
        let mut quotient: Vec<BTreeMap<u32, T>> = vec![BTreeMap::new(); dx.max(1)];
        let mut carry: BTreeMap<u32, T> = BTreeMap::new();
        for i in (0..=dx).rev() {
            // carry = coefficient of X^i in p + root·(previous carry)
            let mut next: BTreeMap<u32, T> = BTreeMap::new();
            for (j, c) in &carry {
                let v = c.clone() * root.clone();
                if !v.is_zero() {
                    merge_term(&mut next, *j, v);
                }
            }
            for (j, c) in &rows[i] {
                merge_term(&mut next, *j, c.clone());
            }
            if i > 0 {
                quotient[i - 1] = next.clone();
            } else if next.values().any(|c| !c.is_zero()) {
                let mut remainder = Self::zero();
                for (j, c) in next {
                    remainder.add_term(0, j, c);
                }
                return Err(LinearDivisionError {
                    shift: a,
                    remainder,
                });
            }
            carry = next;
        }
        let mut out = Self::zero();
        for (i, row) in quotient.into_iter().enumerate() {
            for (j, c) in row {
                out.add_term(i as u32, j, c);
            }
        }
        Ok(out)
    }
}

fn merge_term<T: Scalar>(map: &mut BTreeMap<u32, T>, j: u32, c: T) {
    if c.is_zero() {
        return;
    }
    let entry = map.entry(j).or_insert_with(T::zero);
    *entry += c;
    if entry.is_zero() {
        map.remove(&j);
    }
}

fn power_table<T: Scalar>(base: &T, max: usize) -> Vec<T> {
    let mut table = Vec::with_capacity(max + 1);
    table.push(T::one());
    for k in 1..=max {
        let next = table[k - 1].clone() * base.clone();
        table.push(next);
    }
    table
}

/// ℓ(ℓ−1)···(ℓ−k+1)/k! for a polynomial ℓ; the binomial coefficient with a
/// polynomial top argument.
pub fn binom_poly<T: Scalar>(l: &BiPoly<T>, k: u32) -> BiPoly<T> {
    let mut p = BiPoly::one();
    for i in 0..k {
        p = &p * &(l - &BiPoly::constant(scalar::int(i as i64)));
    }
    p.scaled(&(T::one() / scalar::factorial_t::<T>(k)))
}

impl<T: Scalar> Add for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn add(self, rhs: Self) -> BiPoly<T> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, c.clone());
        }
        out
    }
}

impl<T: Scalar> Sub for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn sub(self, rhs: Self) -> BiPoly<T> {
        let mut out = self.clone();
        for ((i, j), c) in rhs.terms() {
            out.add_term(i, j, -c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn neg(self) -> BiPoly<T> {
        BiPoly {
            terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect(),
        }
    }
}

impl<T: Scalar> Mul for &BiPoly<T> {
    type Output = BiPoly<T>;
    fn mul(self, rhs: Self) -> BiPoly<T> {
        let mut out = BiPoly::zero();
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &rhs.terms {
                out.add_term(i1 + i2, j1 + j2, a.clone() * b.clone());
            }
        }
        out
    }
}

// Canonical rendering: terms sorted by (total degree, X-degree) descending,
// exact coefficients. Used verbatim in check records.
impl<T: Scalar> fmt::Display for BiPoly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
        let mut first = true;
        for (i, j) in keys {
            let c = &self.terms[&(i, j)];
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
            let mono = monomial_string(i, j);
            if mono.is_empty() {
                write!(f, "{}", mag)?;
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

fn monomial_string(i: u32, j: u32) -> String {
    let mut parts = Vec::new();
    match i {
        0 => {}
        1 => parts.push("X".to_string()),
        _ => parts.push(format!("X^{}", i)),
    }
    match j {
        0 => {}
        1 => parts.push("Y".to_string()),
        _ => parts.push(format!("Y^{}", j)),
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};
    use crate::Rat;

    fn x() -> BiPoly<Rat> {
        BiPoly::var(Var::X)
    }

    fn y() -> BiPoly<Rat> {
        BiPoly::var(Var::Y)
    }

    #[test]
    fn arithmetic_and_degrees() {
        let p = &(&x() * &x()) - &BiPoly::one(); // X^2 - 1
        let q = &(&y() * &y()) - &BiPoly::one();
        let prod = &p * &q;
        assert_eq!(prod.coeff(2, 2), int(1));
        assert_eq!(prod.coeff(0, 0), int(1));
        assert_eq!(prod.coeff(2, 0), int(-1));
        assert_eq!(prod.total_degree(), Some(4));
        assert_eq!(prod.x_degree(), Some(2));
        assert_eq!((&prod - &prod).total_degree(), None);
    }

    #[test]
    fn symmetry_maps() {
        let p = &(&x() * &y()).scaled(&int(3)) + &(&x() * &x());
        let s = p.swap_vars();
        assert_eq!(s.coeff(0, 2), int(1));
        assert_eq!(s.coeff(1, 1), int(3));
        let n = p.negate_vars();
        assert_eq!(n.coeff(1, 1), int(3));
        assert_eq!(n.coeff(2, 0), int(1));
        let odd = &x() * &(&y() * &y());
        assert_eq!(odd.negate_vars().coeff(1, 2), int(-1));
    }

    #[test]
    fn evaluation() {
        let p = &(&x() * &y()) + &BiPoly::constant(ratio(1, 2));
        assert_eq!(p.eval(&int(3), &int(-2)), ratio(-11, 2));
        // q = p forces Y = 0 at the Q-curvature evaluation point.
        let xy = &x() * &y();
        assert_eq!(xy.eval(&ratio(5, 2), &int(0)), int(0));
    }

    #[test]
    fn linear_division() {
        // XY / (X + 1 - 1) = Y.
        let xy = &x() * &y();
        assert_eq!(xy.exact_div_linear(1).unwrap(), y());
        // (X^2-1)(Y^2-1) / (X - 1) = (X+1)(Y^2-1).
        let p = &(&(&x() * &x()) - &BiPoly::one()) * &(&(&y() * &y()) - &BiPoly::one());
        let q = p.exact_div_linear(2).unwrap();
        let expected = &(&x() + &BiPoly::one()) * &(&(&y() * &y()) - &BiPoly::one());
        assert_eq!(q, expected);
        // Quotient is a two-sided inverse of multiplication by the factor.
        let factor = &x() - &BiPoly::one();
        assert_eq!(&q * &factor, p);
        // X - 1 does not divide XY.
        let err = xy.exact_div_linear(2).unwrap_err();
        assert_eq!(err.remainder, y());
    }

    #[test]
    fn binomial_polynomial() {
        // ℓ = (X - Y + 1)/2.
        let l = (&(&x() - &y()) + &BiPoly::one()).scaled(&ratio(1, 2));
        assert_eq!(binom_poly(&l, 0), BiPoly::one());
        // ℓ(ℓ-1)/2 = ((X-Y)^2 - 1)/8.
        let b2 = binom_poly(&l, 2);
        let d = &x() - &y();
        let expected = (&(&d * &d) - &BiPoly::one()).scaled(&ratio(1, 8));
        assert_eq!(b2, expected);
    }

    #[test]
    fn canonical_rendering() {
        let p = &(&BiPoly::one() - &(&x() * &x())) - &(&y() * &y());
        assert_eq!(p.to_string(), "-X^2 - Y^2 + 1");
        let q = (&x() * &y()).scaled(&int(12));
        assert_eq!(q.to_string(), "12*X*Y");
        assert_eq!(BiPoly::<Rat>::zero().to_string(), "0");
        let r = (&x() * &(&y() * &y())).scaled(&ratio(-3, 4));
        assert_eq!(r.to_string(), "-3/4*X*Y^2");
    }
}
