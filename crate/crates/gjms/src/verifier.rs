//! The identity checks: weighted composition sums and their factorial
//! closed form, partial sums against the hypergeometric closed form, the
//! divided composition sum behind the Q-curvature recursion, volume-series
//! coefficients, and spectral-point evaluations.

use crate::composition::{self, Composition};
use crate::exact::{binomial, factorial, gen_binomial, pochhammer};
use crate::hypergeom::{eval_terminating, HypError, HypSpec};
use crate::operators::{self, ProductCache};
use crate::poly::{binom_poly, BiPoly, PochPoly, Var};
use crate::report::{CheckRecord, Timer};
use crate::scalar::{int, pow_u, ratio};
use crate::{Rat, RatBiPoly};
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex};

/// Shared state for a verification run: the product memo and the divided
/// sums already computed. Checks for distinct parameters are independent
/// and may run from multiple threads.
pub struct Verifier {
    cache: ProductCache,
    q_sums: Mutex<HashMap<u32, Arc<RatBiPoly>>>,
}

impl Default for Verifier {
    fn default() -> Self {
        Self::new()
    }
}

impl Verifier {
    pub fn new() -> Self {
        Verifier {
            cache: ProductCache::new(),
            q_sums: Mutex::new(HashMap::new()),
        }
    }

    pub fn cache(&self) -> &ProductCache {
        &self.cache
    }

    /// Σ_{|I|=N} m_I·P(I_1)···P(I_r), grouped by part multiset: the 2^{N−1}
    /// multiplicities are accumulated per partition by a scalar depth-first
    /// walk, and only then are the (few) distinct products taken from the
    /// memo and combined.
    pub fn composition_sum(&self, n: u32) -> RatBiPoly {
        let mut out = BiPoly::zero();
        for (key, w) in composition_weights(n) {
            out = &out + &self.cache.product_of_sorted(&key).scaled(&w);
        }
        out
    }

    /// Same sum, one composition at a time with fresh products and no
    /// grouping. Baseline for the memoization benchmark.
    pub fn composition_sum_naive(&self, n: u32, mults: &mut u64) -> RatBiPoly {
        let mut out = BiPoly::zero();
        composition::for_each(n, |parts| {
            let c = Composition::new(parts.to_vec());
            let p = operators::product_naive(&c, mults);
            out = &out + &p.scaled(&composition::multiplicity(&c));
        });
        out
    }

    /// The factorial closed form the sum collapses to:
    /// N!(N−1)!·XY for odd N, ½N!(N−1)!·(1−X²−Y²) for even N.
    pub fn composition_sum_closed_form(n: u32) -> RatBiPoly {
        let f = factorial(n) * factorial(n - 1);
        let x = BiPoly::var(Var::X);
        let y = BiPoly::var(Var::Y);
        if n % 2 == 1 {
            (&x * &y).scaled(&f)
        } else {
            let sum_sq = &(&x * &x) + &(&y * &y);
            (&BiPoly::one() - &sum_sq).scaled(&(f / int::<Rat>(2)))
        }
    }

    pub fn check_composition_sum(&self, n: u32) -> CheckRecord {
        let timer = Timer::start();
        let lhs = self.composition_sum(n);
        let rhs = Self::composition_sum_closed_form(n);
        CheckRecord::comparison(
            "composition_sum",
            vec![("N", n.to_string())],
            &lhs,
            &rhs,
            timer,
        )
        .with_note_on_fail(|| format!("difference: {}", &lhs - &rhs))
    }

    /// S(N,a) = Σ_{J: |J|+a=N} m_{(J,a)}·P(J_1)···P(J_r), by direct
    /// enumeration of the compositions J.
    pub fn partial_sum_direct(&self, n: u32, a: u32) -> RatBiPoly {
        let mut out = BiPoly::zero();
        for (key, w) in partial_weights(n, a) {
            out = &out + &self.cache.product_of_sorted(&key).scaled(&w);
        }
        out
    }

    /// The closed form of S(N,a): a double sum over k, l of centered
    /// Pochhammer basis elements in X and Y weighted by an exactly
    /// evaluated terminating ₄F₃ at 1,
    ///
    /// binom(N−1,a−1) Σ_{k,l} (−1)^{N+k+l+a} 2^{2N−2k−2l−2a}
    ///   · C_{N−a−2k}(X)·C_{N−a−2l}(Y)
    ///   · (a−N)_{2k}(a−N)_{2l}(−N/2)_k(−N/2)_l / (k! l!)
    ///   · ₄F₃[−1/2, −k, −l, (1−N)/2; −N/2, (a−N)/2, (1+a−N)/2; 1].
    ///
    /// The ₄F₃ carries nonpositive denominator parameters; a vanishing
    /// denominator Pochhammer inside the summed range would be reported as
    /// an error, and the check surfaces it as a failure. Over the verified
    /// ranges the termination index min(k, l, …) always stays below the
    /// first denominator zero.
    pub fn partial_sum_closed(n: u32, a: u32) -> Result<RatBiPoly, HypError> {
        assert!(a >= 1 && a < n, "partial sums need 1 <= a < N");
        let kl_max = (n - a) / 2;
        let n_i = n as i64;
        let a_i = a as i64;
        let prefactor = binomial(n - 1, a - 1);
        let mut out = BiPoly::zero();
        for k in 0..=kl_max {
            for l in 0..=kl_max {
                let series = eval_terminating(&HypSpec::new(
                    vec![
                        ratio(-1, 2),
                        int(-(k as i64)),
                        int(-(l as i64)),
                        ratio(1 - n_i, 2),
                    ],
                    vec![
                        ratio(-n_i, 2),
                        ratio(a_i - n_i, 2),
                        ratio(1 + a_i - n_i, 2),
                    ],
                    Rat::one(),
                ))?;
                let mut weight = prefactor.clone()
                    * pow_u(&int::<Rat>(2), 2 * (n - a - k - l))
                    * pochhammer(&int(a_i - n_i), 2 * k)
                    * pochhammer(&int(a_i - n_i), 2 * l)
                    * pochhammer(&ratio(-n_i, 2), k)
                    * pochhammer(&ratio(-n_i, 2), l)
                    / (factorial(k) * factorial(l))
                    * series;
                if (n + k + l + a) % 2 == 1 {
                    weight = -weight;
                }
                if weight.is_zero() {
                    continue;
                }
                let cx = PochPoly::<Rat>::basis_monomial(n - a - 2 * k);
                let cy = PochPoly::<Rat>::basis_monomial(n - a - 2 * l);
                out = &out + &BiPoly::from_separable(&cx, &cy).scaled(&weight);
            }
        }
        Ok(out)
    }

    pub fn check_partial_sum(&self, n: u32, a: u32) -> CheckRecord {
        let timer = Timer::start();
        let params = vec![("N", n.to_string()), ("a", a.to_string())];
        let direct = self.partial_sum_direct(n, a);
        match Self::partial_sum_closed(n, a) {
            Ok(closed) => CheckRecord::comparison(
                "partial_sum_closed_form",
                params,
                &direct,
                &closed,
                timer,
            )
            .with_note_on_fail(|| format!("difference: {}", &direct - &closed)),
            Err(err) => CheckRecord::failure(
                "partial_sum_closed_form",
                params,
                direct.to_string(),
                format!("error: {}", err),
                timer,
            ),
        }
    }

    /// Σ_{a=1}^{N} S(N,a)·P(a)/(X+1−a), with S(N,N) = 1. Every P(a) is
    /// divisible by (X+1−a); the division is exact polynomial division, so
    /// the sum is a polynomial and can later be evaluated anywhere —
    /// including points where X+1−a vanishes.
    pub fn q_sum_poly(&self, n: u32) -> Arc<RatBiPoly> {
        if let Some(p) = self.q_sums.lock().unwrap().get(&n) {
            return Arc::clone(p);
        }
        let mut out = BiPoly::zero();
        for a in 1..=n {
            let quotient = self
                .cache
                .gjms(a)
                .exact_div_linear(a as i64)
                .unwrap_or_else(|e| panic!("operator polynomial not divisible: {}", e));
            if a == n {
                out = &out + &quotient;
            } else {
                out = &out + &(&self.partial_sum_direct(n, a) * &quotient);
            }
        }
        let arc = Arc::new(out);
        let mut guard = self.q_sums.lock().unwrap();
        Arc::clone(guard.entry(n).or_insert(arc))
    }

    /// The binomial closed form of the divided sum:
    /// N!(N−1)!·Σ_{k=0}^{N} (−1)^k binom((X−Y+1)/2, k)·binom((X+Y+1)/2, N−k).
    pub fn q_sum_closed_form(n: u32) -> RatBiPoly {
        let half = ratio::<Rat>(1, 2);
        let x = BiPoly::var(Var::X);
        let y = BiPoly::var(Var::Y);
        let l_minus = (&(&x - &y) + &BiPoly::one()).scaled(&half);
        let l_plus = (&(&x + &y) + &BiPoly::one()).scaled(&half);
        let mut sum = BiPoly::zero();
        for k in 0..=n {
            let term = &binom_poly(&l_minus, k) * &binom_poly(&l_plus, n - k);
            if k % 2 == 1 {
                sum = &sum - &term;
            } else {
                sum = &sum + &term;
            }
        }
        sum.scaled(&(factorial(n) * factorial(n - 1)))
    }

    pub fn check_q_sum(&self, n: u32) -> CheckRecord {
        let timer = Timer::start();
        let lhs = self.q_sum_poly(n);
        let rhs = Self::q_sum_closed_form(n);
        CheckRecord::comparison("q_sum_poly", vec![("N", n.to_string())], &*lhs, &rhs, timer)
            .with_note_on_fail(|| format!("difference: {}", &*lhs - &rhs))
    }

    /// Both sides of the Q-curvature sum on S^q × S^p: the divided
    /// composition sum evaluated at X = (q+p)/2 − 1, Y = (p−q)/2 against
    /// N!(N−1)!·Σ_M (−1)^M binom(q/2, M)·binom(p/2, N−M).
    pub fn q_curvature_sides(&self, n: u32, q: u32, p: u32) -> (Rat, Rat) {
        let x0 = ratio::<Rat>((q + p) as i64 - 2, 2);
        let y0 = ratio::<Rat>(p as i64 - q as i64, 2);
        let lhs = self.q_sum_poly(n).eval(&x0, &y0);
        let rhs = q_curvature_closed_form(n, q, p);
        (lhs, rhs)
    }

    pub fn check_q_curvature(&self, n: u32, q: u32, p: u32) -> CheckRecord {
        let timer = Timer::start();
        let (lhs, rhs) = self.q_curvature_sides(n, q, p);
        CheckRecord::comparison(
            "q_curvature",
            vec![
                ("N", n.to_string()),
                ("q", q.to_string()),
                ("p", p.to_string()),
            ],
            &lhs,
            &rhs,
            timer,
        )
    }

    /// The composition sum re-verified by pure scalar arithmetic at a
    /// spectral point: X = c+b, Y = c−b with b = k+(q−1)/2, c = l+(p−1)/2,
    /// the square roots of the shifted Laplacian eigenvalues on the two
    /// factor spheres. Independent of all polynomial machinery.
    pub fn check_spectral(&self, n: u32, q: u32, p: u32, k: u32, l: u32) -> CheckRecord {
        let timer = Timer::start();
        let b = ratio::<Rat>((2 * k + q) as i64 - 1, 2);
        let c = ratio::<Rat>((2 * l + p) as i64 - 1, 2);
        let x0 = c.clone() + b.clone();
        let y0 = c - b;
        let value = |m: u32| -> Rat {
            let shift = |t: &Rat| (t.clone() + int::<Rat>(1 - m as i64)) / int::<Rat>(2);
            pow_u(&int::<Rat>(2), 2 * m) * pochhammer(&shift(&x0), m) * pochhammer(&shift(&y0), m)
        };
        let table: Vec<Rat> = (0..=n).map(value).collect();
        let mut lhs = Rat::zero();
        composition::for_each(n, |parts| {
            let comp = Composition::new(parts.to_vec());
            let mut term = composition::multiplicity(&comp);
            for &part in parts {
                term *= table[part as usize].clone();
            }
            lhs += term;
        });
        let f = factorial(n) * factorial(n - 1);
        let rhs = if n % 2 == 1 {
            f * x0.clone() * y0.clone()
        } else {
            f / int::<Rat>(2) * (Rat::one() - x0.clone() * x0.clone() - y0.clone() * y0.clone())
        };
        CheckRecord::comparison(
            "spectral_point",
            vec![
                ("N", n.to_string()),
                ("q", q.to_string()),
                ("p", p.to_string()),
                ("k", k.to_string()),
                ("l", l.to_string()),
            ],
            &lhs,
            &rhs,
            timer,
        )
    }

    /// Decomposition of the composition sum by last block:
    /// Σ_{|I|=N} m_I P(I) = P(N) + Σ_{a=1}^{N−1} S(N,a)·P(a).
    pub fn check_decomposition(&self, n: u32) -> CheckRecord {
        let timer = Timer::start();
        let lhs = self.composition_sum(n);
        let mut rhs = (*self.cache.gjms(n)).clone();
        for a in 1..=n.saturating_sub(1) {
            rhs = &rhs + &(&self.partial_sum_direct(n, a) * &*self.cache.gjms(a));
        }
        CheckRecord::comparison(
            "composition_sum_decomposition",
            vec![("N", n.to_string())],
            &lhs,
            &rhs,
            timer,
        )
        .with_note_on_fail(|| format!("difference: {}", &lhs - &rhs))
    }

    /// Product form versus Pochhammer form of the operator polynomial.
    pub fn check_factored_form(n: u32) -> CheckRecord {
        let timer = Timer::start();
        let lhs = operators::gjms_poly(n);
        let rhs = operators::gjms_factored(n);
        CheckRecord::comparison("factored_form", vec![("N", n.to_string())], &lhs, &rhs, timer)
            .with_note_on_fail(|| format!("difference: {}", &lhs - &rhs))
    }

    /// Centered-Pochhammer-basis product C_A·C_B expanded through the
    /// structure constants versus plain monomial multiplication.
    pub fn check_basis_product(a: u32, b: u32) -> CheckRecord {
        let timer = Timer::start();
        let ca = PochPoly::<Rat>::basis(Var::X, a);
        let cb = PochPoly::<Rat>::basis(Var::X, b);
        let lhs = ca.mul(&cb).to_monomial();
        let rhs = &ca.to_monomial() * &cb.to_monomial();
        CheckRecord::comparison(
            "basis_product",
            vec![("A", a.to_string()), ("B", b.to_string())],
            &lhs,
            &rhs,
            timer,
        )
        .with_note_on_fail(|| format!("difference: {}", &lhs - &rhs))
    }

    /// The binomial double sum against N!(N−1)!·2^{2N}·w_{2N}, where w_{2N}
    /// is the r^{2N} coefficient of w(r) = (1−r²/4)^{q/2}(1+r²/4)^{p/2}.
    pub fn check_w_relation(n: u32, q: u32, p: u32) -> CheckRecord {
        let timer = Timer::start();
        let lhs = q_curvature_closed_form(n, q, p);
        let (_, w) = vw_coeffs(q, p, n as usize);
        let rhs = factorial(n)
            * factorial(n - 1)
            * pow_u(&int::<Rat>(2), 2 * n)
            * w[n as usize].clone();
        CheckRecord::comparison(
            "w_coefficient_relation",
            vec![
                ("N", n.to_string()),
                ("q", q.to_string()),
                ("p", p.to_string()),
            ],
            &lhs,
            &rhs,
            timer,
        )
    }
}

/// N!(N−1)!·Σ_{M=0}^{N} (−1)^M binom(q/2, M)·binom(p/2, N−M).
pub fn q_curvature_closed_form(n: u32, q: u32, p: u32) -> Rat {
    let qh = ratio::<Rat>(q as i64, 2);
    let ph = ratio::<Rat>(p as i64, 2);
    let mut sum = Rat::zero();
    for m in 0..=n {
        let mut term = gen_binomial(&qh, m) * gen_binomial(&ph, n - m);
        if m % 2 == 1 {
            term = -term;
        }
        sum += term;
    }
    factorial(n) * factorial(n - 1) * sum
}

/// Taylor coefficients of v(r) = (1−r²/4)^q (1+r²/4)^p and of its square
/// root w(r) = (1−r²/4)^{q/2} (1+r²/4)^{p/2}, both in powers of r²,
/// indices 0..=order.
pub fn vw_coeffs(q: u32, p: u32, order: usize) -> (Vec<Rat>, Vec<Rat>) {
    let v = truncated_product(
        &binom_expansion(&int(q as i64), -1, order),
        &binom_expansion(&int(p as i64), 1, order),
        order,
    );
    let w = truncated_product(
        &binom_expansion(&ratio(q as i64, 2), -1, order),
        &binom_expansion(&ratio(p as i64, 2), 1, order),
        order,
    );
    (v, w)
}

// Coefficients of (1 + sign·u/4)^alpha in u, up to `order`.
fn binom_expansion(alpha: &Rat, sign: i64, order: usize) -> Vec<Rat> {
    (0..=order)
        .map(|k| {
            gen_binomial(alpha, k as u32) * pow_u(&ratio::<Rat>(sign, 4), k as u32)
        })
        .collect()
}

fn truncated_product(a: &[Rat], b: &[Rat], order: usize) -> Vec<Rat> {
    (0..=order)
        .map(|k| {
            let mut acc = Rat::zero();
            for i in 0..=k {
                acc += a[i].clone() * b[k - i].clone();
            }
            acc
        })
        .collect()
}

// Multiplicities of all compositions of n, summed per part multiset.
// Returned as (descending-sorted parts, total weight), sorted by key.
fn composition_weights(n: u32) -> Vec<(Vec<u32>, Rat)> {
    let inv = inverse_part_factors(n);
    let total = factorial(n) * factorial(n - 1);
    let mut acc: HashMap<Vec<u32>, Rat> = HashMap::new();
    let mut parts = Vec::with_capacity(n as usize);
    weights_descend(n, &mut parts, Rat::one(), &inv, &mut |parts, w| {
        let mut m = total.clone() * w.clone();
        if parts.len() % 2 == 0 {
            m = -m;
        }
        let mut key = parts.to_vec();
        key.sort_unstable_by(|a, b| b.cmp(a));
        *acc.entry(key).or_insert_with(Rat::zero) += m;
    });
    finish_weights(acc)
}

// Multiplicities m_{(J,a)} over compositions J of n−a, summed per part
// multiset of J.
fn partial_weights(n: u32, a: u32) -> Vec<(Vec<u32>, Rat)> {
    assert!(a >= 1 && a < n, "partial sums need 1 <= a < N");
    let inv = inverse_part_factors(n);
    let total = factorial(n) * factorial(n - 1) * inv[a as usize].clone();
    let mut acc: HashMap<Vec<u32>, Rat> = HashMap::new();
    let mut parts = Vec::with_capacity((n - a) as usize);
    weights_descend(n - a, &mut parts, Rat::one(), &inv, &mut |parts, w| {
        let last = *parts.last().expect("nonempty");
        let mut m = total.clone() * w.clone() / int::<Rat>((last + a) as i64);
        // The appended block makes the composition one part longer.
        if (parts.len() + 1) % 2 == 0 {
            m = -m;
        }
        let mut key = parts.to_vec();
        key.sort_unstable_by(|x, y| y.cmp(x));
        *acc.entry(key).or_insert_with(Rat::zero) += m;
    });
    finish_weights(acc)
}

// inv[k] = 1/(k!(k−1)!) for k ≥ 1.
fn inverse_part_factors(n: u32) -> Vec<Rat> {
    (0..=n)
        .map(|k| {
            if k == 0 {
                Rat::one()
            } else {
                Rat::one() / (factorial(k) * factorial(k - 1))
            }
        })
        .collect()
}

// Depth-first walk over compositions of `remaining`, carrying the running
// product of part factors 1/(p!·(p−1)!) and adjacency factors 1/(p+p').
fn weights_descend(
    remaining: u32,
    parts: &mut Vec<u32>,
    w: Rat,
    inv: &[Rat],
    leaf: &mut impl FnMut(&[u32], &Rat),
) {
    if remaining == 0 {
        leaf(parts, &w);
        return;
    }
    for part in 1..=remaining {
        let mut w_next = w.clone() * inv[part as usize].clone();
        if let Some(&last) = parts.last() {
            w_next /= int::<Rat>((last + part) as i64);
        }
        parts.push(part);
        weights_descend(remaining - part, parts, w_next, inv, leaf);
        parts.pop();
    }
}

fn finish_weights(acc: HashMap<Vec<u32>, Rat>) -> Vec<(Vec<u32>, Rat)> {
    let mut out: Vec<(Vec<u32>, Rat)> = acc.into_iter().filter(|(_, w)| !w.is_zero()).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}
