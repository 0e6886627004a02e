//! Exact evaluation of terminating hypergeometric series at rational
//! arguments, the Chu–Vandermonde and Pfaff–Saalschütz summations, and the
//! reduction of the balanced-type ₃F₂[…; 1] to a ₂F₁[…; −1].

use crate::exact::pochhammer;
use crate::report::{CheckRecord, Timer};
use crate::scalar::{int, pow_u, ratio};
use crate::Rat;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::fmt;

/// Parameters of ₚFq[a_1,…,a_p; b_1,…,b_q; z] = Σ_m Π(a_i)_m / (m! Π(b_j)_m) · z^m.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypSpec {
    pub numer: Vec<Rat>,
    pub denom: Vec<Rat>,
    pub z: Rat,
}

impl HypSpec {
    pub fn new(numer: Vec<Rat>, denom: Vec<Rat>, z: Rat) -> Self {
        HypSpec { numer, denom, z }
    }

    /// Least n* with some numerator parameter equal to −n*; the series then
    /// terminates after the m = n* term. `None` when no numerator parameter
    /// is a nonpositive integer.
    pub fn termination_index(&self) -> Option<u32> {
        self.numer
            .iter()
            .filter(|a| a.is_integer() && !a.is_positive())
            .map(|a| (-a).to_integer().to_u32().expect("termination index fits u32"))
            .min()
    }
}

impl fmt::Display for HypSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Rat]| {
            v.iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(
            f,
            "{}F{}[{}; {}; {}]",
            self.numer.len(),
            self.denom.len(),
            join(&self.numer),
            join(&self.denom),
            self.z
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HypError {
    /// No numerator parameter is a nonpositive integer.
    NotTerminating,
    /// A denominator Pochhammer (b)_m vanishes at some m within the summed
    /// range, with no earlier numerator truncation to protect it.
    DenominatorPole { parameter: Rat, index: u32 },
    /// A closed form divides by a vanishing Pochhammer symbol.
    ZeroPochhammer { parameter: Rat, length: u32 },
}

impl fmt::Display for HypError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HypError::NotTerminating => {
                write!(f, "series does not terminate: no nonpositive integer numerator parameter")
            }
            HypError::DenominatorPole { parameter, index } => {
                write!(f, "denominator Pochhammer ({})_{} vanishes", parameter, index)
            }
            HypError::ZeroPochhammer { parameter, length } => {
                write!(f, "closed form divides by ({})_{} = 0", parameter, length)
            }
        }
    }
}

impl std::error::Error for HypError {}

/// Exact termwise sum of a terminating series, with incremental term
/// updates: t_{m+1} = t_m · Π(a_i+m) · z / ((m+1) · Π(b_j+m)).
///
/// A denominator factor hitting zero inside the summed range is an error;
/// it cannot be rescued here because for m ≤ n* no numerator Pochhammer has
/// vanished yet (the earliest numerator zero is at index n* + 1).
pub fn eval_terminating(spec: &HypSpec) -> Result<Rat, HypError> {
    let n_star = spec.termination_index().ok_or(HypError::NotTerminating)?;
    let mut sum = Rat::zero();
    let mut term = Rat::one();
    for m in 0..=n_star {
        sum += term.clone();
        if m == n_star {
            break;
        }
        let m_rat = int::<Rat>(m as i64);
        for a in &spec.numer {
            term *= a.clone() + m_rat.clone();
        }
        for b in &spec.denom {
            let factor = b.clone() + m_rat.clone();
            if factor.is_zero() {
                return Err(HypError::DenominatorPole {
                    parameter: b.clone(),
                    index: m + 1,
                });
            }
            term /= factor;
        }
        term = term * spec.z.clone() / int::<Rat>((m + 1) as i64);
    }
    Ok(sum)
}

/// Chu–Vandermonde: ₂F₁(−n, b; c; 1) = (c−b)_n / (c)_n.
pub fn chu_vandermonde(b: &Rat, c: &Rat, n: u32) -> Result<Rat, HypError> {
    let c_n = pochhammer(c, n);
    if c_n.is_zero() {
        return Err(HypError::ZeroPochhammer {
            parameter: c.clone(),
            length: n,
        });
    }
    Ok(pochhammer(&(c.clone() - b.clone()), n) / c_n)
}

/// Pfaff–Saalschütz: the balanced ₃F₂(a, b, −n; c, 1+a+b−c−n; 1) equals
/// (c−a)_n (c−b)_n / ((c)_n (c−a−b)_n).
pub fn pfaff_saalschuetz(a: &Rat, b: &Rat, c: &Rat, n: u32) -> Result<Rat, HypError> {
    let c_n = pochhammer(c, n);
    if c_n.is_zero() {
        return Err(HypError::ZeroPochhammer {
            parameter: c.clone(),
            length: n,
        });
    }
    let cab = c.clone() - a.clone() - b.clone();
    let cab_n = pochhammer(&cab, n);
    if cab_n.is_zero() {
        return Err(HypError::ZeroPochhammer {
            parameter: cab,
            length: n,
        });
    }
    let num = pochhammer(&(c.clone() - a.clone()), n) * pochhammer(&(c.clone() - b.clone()), n);
    Ok(num / (c_n * cab_n))
}

/// Checks the reduction
/// ₃F₂[a, (1−N)/2, −N/2; e, 1−N−e; 1]
///   = 2^{−N} (e−a)_N/(e)_N · ₂F₁[1−a−e−N, −N; 1+a−e−N; −1]
/// by evaluating both sides termwise. Pole configurations yield a skipped
/// record with the offending parameter in the reason.
pub fn check_series_reduction(a: &Rat, e: &Rat, n: u32) -> CheckRecord {
    let timer = Timer::start();
    let params = vec![
        ("a", a.to_string()),
        ("e", e.to_string()),
        ("N", n.to_string()),
    ];
    let n_i = n as i64;
    let lhs_spec = HypSpec::new(
        vec![a.clone(), ratio::<Rat>(1 - n_i, 2), ratio::<Rat>(-n_i, 2)],
        vec![e.clone(), int::<Rat>(1 - n_i) - e.clone()],
        Rat::one(),
    );
    let e_n = pochhammer(e, n);
    if e_n.is_zero() {
        return CheckRecord::skipped(
            "series_reduction",
            params,
            format!("prefactor divides by ({})_{} = 0", e, n),
            timer,
        );
    }
    let rhs_spec = HypSpec::new(
        vec![int::<Rat>(1 - n_i) - a.clone() - e.clone(), int::<Rat>(-n_i)],
        vec![int::<Rat>(1 - n_i) + a.clone() - e.clone()],
        -Rat::one(),
    );
    let lhs = match eval_terminating(&lhs_spec) {
        Ok(v) => v,
        Err(err) => {
            return CheckRecord::skipped("series_reduction", params, err.to_string(), timer)
        }
    };
    let rhs = match eval_terminating(&rhs_spec) {
        Ok(v) => {
            let prefactor = pochhammer(&(e.clone() - a.clone()), n)
                / (e_n * pow_u(&int::<Rat>(2), n));
            prefactor * v
        }
        Err(err) => {
            return CheckRecord::skipped("series_reduction", params, err.to_string(), timer)
        }
    };
    CheckRecord::comparison("series_reduction", params, &lhs, &rhs, timer)
}
