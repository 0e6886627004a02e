//! Seeded randomized check families. Every function draws its parameters
//! from the caller's [`SplitMix64`], so a run is fully determined by the
//! seed; draws that hit a pole or an ill-posed configuration are discarded
//! and redrawn, which is deterministic too.

use crate::finite_diff;
use crate::hypergeom::{self, eval_terminating, HypSpec};
use crate::poly::{PochPoly, UniPoly, Var};
use crate::report::{CheckRecord, CheckStatus, Timer};
use crate::rng::SplitMix64;
use crate::scalar::{int, pow_u};
use crate::verifier::Verifier;
use crate::Rat;
use num_traits::{One, Zero};

const MAX_REDRAWS: u32 = 10_000;

/// ₂F₁(−n, b; c; 1) summed termwise against the closed form (c−b)_n/(c)_n,
/// n ≤ 20.
pub fn check_chu_vandermonde_random(rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let timer = Timer::start();
    for _ in 0..MAX_REDRAWS {
        let b = rng.rat(12, 6);
        let c = rng.rat(12, 6);
        let n = rng.int_in(0, 20) as u32;
        let closed = match hypergeom::chu_vandermonde(&b, &c, n) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let spec = HypSpec::new(
            vec![int(-(n as i64)), b.clone()],
            vec![c.clone()],
            Rat::one(),
        );
        let series = match eval_terminating(&spec) {
            Ok(v) => v,
            Err(_) => continue,
        };
        return CheckRecord::comparison(
            "chu_vandermonde",
            vec![
                ("trial", trial.to_string()),
                ("b", b.to_string()),
                ("c", c.to_string()),
                ("n", n.to_string()),
            ],
            &series,
            &closed,
            timer,
        );
    }
    unreachable!("pole-free Chu-Vandermonde parameters exist in the draw range");
}

/// Balanced ₃F₂(a, b, −n; c, 1+a+b−c−n; 1) against
/// (c−a)_n(c−b)_n/((c)_n(c−a−b)_n), n ≤ 15.
pub fn check_pfaff_saalschuetz_random(rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let timer = Timer::start();
    for _ in 0..MAX_REDRAWS {
        let a = rng.rat(9, 5);
        let b = rng.rat(9, 5);
        let c = rng.rat(9, 5);
        let n = rng.int_in(0, 15) as u32;
        let closed = match hypergeom::pfaff_saalschuetz(&a, &b, &c, n) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let balance = Rat::one() + a.clone() + b.clone() - c.clone() - int::<Rat>(n as i64);
        let spec = HypSpec::new(
            vec![a.clone(), b.clone(), int(-(n as i64))],
            vec![c.clone(), balance],
            Rat::one(),
        );
        let series = match eval_terminating(&spec) {
            Ok(v) => v,
            Err(_) => continue,
        };
        return CheckRecord::comparison(
            "pfaff_saalschuetz",
            vec![
                ("trial", trial.to_string()),
                ("a", a.to_string()),
                ("b", b.to_string()),
                ("c", c.to_string()),
                ("n", n.to_string()),
            ],
            &series,
            &closed,
            timer,
        );
    }
    unreachable!("pole-free Pfaff-Saalschuetz parameters exist in the draw range");
}

/// The Pfaff argument transformation on terminating series:
/// ₂F₁(A, −n; C; z) = (1−z)^n · ₂F₁(C−A, −n; C; z/(z−1)), z ≠ 1.
pub fn check_pfaff_transform_random(rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let timer = Timer::start();
    for _ in 0..MAX_REDRAWS {
        let a = rng.rat(9, 5);
        let c = rng.rat(9, 5);
        let n = rng.int_in(0, 12) as u32;
        let z = rng.rat(6, 4);
        if z == Rat::one() {
            continue;
        }
        // The transformation needs C outside {0, −1, …, −(n−1)}; an early
        // truncation of one side by another numerator parameter is fine,
        // a vanishing (C)_n is not.
        if crate::exact::pochhammer(&c, n).is_zero() {
            continue;
        }
        let lhs_spec = HypSpec::new(
            vec![a.clone(), int(-(n as i64))],
            vec![c.clone()],
            z.clone(),
        );
        let lhs = match eval_terminating(&lhs_spec) {
            Ok(v) => v,
            Err(_) => continue,
        };
        let z_over = z.clone() / (z.clone() - Rat::one());
        let rhs_spec = HypSpec::new(
            vec![c.clone() - a.clone(), int(-(n as i64))],
            vec![c.clone()],
            z_over,
        );
        let rhs = match eval_terminating(&rhs_spec) {
            Ok(v) => pow_u(&(Rat::one() - z.clone()), n) * v,
            Err(_) => continue,
        };
        return CheckRecord::comparison(
            "pfaff_transform",
            vec![
                ("trial", trial.to_string()),
                ("A", a.to_string()),
                ("C", c.to_string()),
                ("n", n.to_string()),
                ("z", z.to_string()),
            ],
            &lhs,
            &rhs,
            timer,
        );
    }
    unreachable!("pole-free Pfaff transformation parameters exist in the draw range");
}

/// The ₃F₂ → ₂F₁ reduction for every N ≤ n_max at one pole-free random
/// (a, e). Draws are discarded until no N in range skips.
pub fn check_series_reduction_random(
    rng: &mut SplitMix64,
    trial: u32,
    n_max: u32,
) -> Vec<CheckRecord> {
    'draws: for _ in 0..MAX_REDRAWS {
        let a = rng.rat(8, 4);
        let e = rng.rat(8, 4);
        let mut records = Vec::with_capacity(n_max as usize + 1);
        for n in 0..=n_max {
            let mut rec = hypergeom::check_series_reduction(&a, &e, n);
            if matches!(rec.status, CheckStatus::Skipped(_)) {
                continue 'draws;
            }
            rec.params.insert("trial".to_string(), trial.to_string());
            records.push(rec);
        }
        return records;
    }
    unreachable!("pole-free reduction parameters exist in the draw range");
}

/// Random sparse products in the centered Pochhammer basis against
/// monomial multiplication.
pub fn check_basis_product_random(rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let timer = Timer::start();
    let p = random_poch_poly(rng);
    let q = random_poch_poly(rng);
    let lhs = p.mul(&q).to_monomial();
    let rhs = &p.to_monomial() * &q.to_monomial();
    CheckRecord::comparison(
        "basis_product_random",
        vec![
            ("trial", trial.to_string()),
            ("p", p.to_string()),
            ("q", q.to_string()),
        ],
        &lhs,
        &rhs,
        timer,
    )
}

/// Random (p, M) instance of the alternating-binomial-sum identity,
/// deg p ≤ 12, M ≤ 12.
pub fn check_finite_difference_random(rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let degree = rng.int_in(0, 12) as usize;
    let p = random_unipoly(rng, degree);
    let m = rng.int_in(0, 12) as u32;
    let mut rec = finite_diff::check_finite_difference(&p, m);
    rec.params.insert("trial".to_string(), trial.to_string());
    rec
}

/// Random instance of the partial-fraction identity, split between the
/// deg p ≤ M case and the deg p = M+1 case with its correction term.
pub fn check_partial_fractions_random(rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let m = rng.int_in(0, 10) as u32;
    let degree = if rng.next_u64() % 2 == 0 {
        rng.int_in(0, m as i64) as usize
    } else {
        m as usize + 1
    };
    let p = random_unipoly_exact_degree(rng, degree);
    let mut rec = finite_diff::check_partial_fractions(&p, m);
    rec.params.insert("trial".to_string(), trial.to_string());
    rec
}

/// Random spectral-point re-evaluation of the composition sum.
pub fn check_spectral_random(v: &Verifier, rng: &mut SplitMix64, trial: u32) -> CheckRecord {
    let n = rng.int_in(1, 6) as u32;
    let q = rng.int_in(1, 8) as u32;
    let p = rng.int_in(1, 8) as u32;
    let k = rng.int_in(0, 6) as u32;
    let l = rng.int_in(0, 6) as u32;
    let mut rec = v.check_spectral(n, q, p, k, l);
    rec.params.insert("trial".to_string(), trial.to_string());
    rec
}

fn random_unipoly(rng: &mut SplitMix64, max_degree: usize) -> UniPoly<Rat> {
    let coeffs = (0..=max_degree).map(|_| rng.rat(9, 4)).collect();
    UniPoly::from_coeffs(coeffs)
}

fn random_unipoly_exact_degree(rng: &mut SplitMix64, degree: usize) -> UniPoly<Rat> {
    let mut coeffs: Vec<Rat> = (0..=degree).map(|_| rng.rat(9, 4)).collect();
    while coeffs[degree].is_zero() {
        coeffs[degree] = rng.rat(9, 4);
    }
    UniPoly::from_coeffs(coeffs)
}

fn random_poch_poly(rng: &mut SplitMix64) -> PochPoly<Rat> {
    let terms = rng.int_in(1, 5);
    let mut p = PochPoly::zero(Var::X);
    for _ in 0..terms {
        let d = rng.int_in(0, 12) as u32;
        let mut c = rng.rat(9, 4);
        if c.is_zero() {
            c = Rat::one();
        }
        p = p.add(&PochPoly::basis(Var::X, d).scaled(&c));
    }
    if p.is_zero() {
        p = PochPoly::basis(Var::X, 0);
    }
    p
}
