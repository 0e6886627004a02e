//! GJMS-operator polynomials on S^q × S^p and memoized products over
//! compositions.
//!
//! On the product sphere the order-2n operator acts on joint eigenspaces as
//! the bivariate polynomial
//!
//! P(n) = 2^{2n} · ((X+1−n)/2)_n · ((Y+1−n)/2)_n = 4^n · C_n(X) · C_n(Y)
//!
//! in X = C + B, Y = C − B. Compositions index products of these operators,
//! and since X and Y commute a product only depends on the multiset of
//! parts; the cache below therefore keys products on descending-sorted part
//! lists, which keeps the memo table at one entry per partition instead of
//! one per composition suffix.

use crate::composition::Composition;
use crate::poly::{BiPoly, PochPoly, Var};
use crate::scalar::{int, pow_u};
use crate::{Rat, RatBiPoly};
use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

/// The spectral polynomial P(n) = 4^n·C_n(X)·C_n(Y) of the order-2n
/// operator. Total degree 2n, degree n in each variable.
pub fn gjms_poly(n: u32) -> RatBiPoly {
    assert!(n >= 1, "operator order parameter must be >= 1");
    let c_n = PochPoly::<Rat>::basis_monomial(n);
    BiPoly::from_separable(&c_n, &c_n).scaled(&pow_u(&int::<Rat>(2), 2 * n))
}

/// The same polynomial assembled from the factored product form:
/// for n = 2M the product Π_{j=1}^{M} ((XY)² − (2j−1)²(X²+Y²) + (2j−1)⁴),
/// for n = 2M+1 the product XY·Π_{j=1}^{M} ((XY)² − (2j)²(X²+Y²) + (2j)⁴).
pub fn gjms_factored(n: u32) -> RatBiPoly {
    assert!(n >= 1, "operator order parameter must be >= 1");
    let xy = &BiPoly::var(Var::X) * &BiPoly::var(Var::Y);
    let xy_sq = &xy * &xy;
    let x2py2 = &(&BiPoly::var(Var::X) * &BiPoly::var(Var::X))
        + &(&BiPoly::var(Var::Y) * &BiPoly::var(Var::Y));
    let factor = |s: u32| -> RatBiPoly {
        let s2 = int::<Rat>((s as i64) * (s as i64));
        let s4 = s2.clone() * s2.clone();
        &(&xy_sq - &x2py2.scaled(&s2)) + &BiPoly::constant(s4)
    };
    let (m, mut acc) = if n % 2 == 0 {
        (n / 2, BiPoly::one())
    } else {
        (n / 2, xy.clone())
    };
    for j in 1..=m {
        let s = if n % 2 == 0 { 2 * j - 1 } else { 2 * j };
        acc = &acc * &factor(s);
    }
    acc
}

/// Concurrent memo store for operator polynomials and their products over
/// part multisets, with an instrumentation counter for polynomial
/// multiplications performed on cache misses.
pub struct ProductCache {
    base: Mutex<HashMap<u32, Arc<RatBiPoly>>>,
    products: Mutex<HashMap<Vec<u32>, Arc<RatBiPoly>>>,
    multiplications: AtomicU64,
}

impl ProductCache {
    pub fn new() -> Self {
        ProductCache {
            base: Mutex::new(HashMap::new()),
            products: Mutex::new(HashMap::new()),
            multiplications: AtomicU64::new(0),
        }
    }

    /// P(n), memoized.
    pub fn gjms(&self, n: u32) -> Arc<RatBiPoly> {
        if let Some(p) = self.base.lock().unwrap().get(&n) {
            return Arc::clone(p);
        }
        let p = Arc::new(gjms_poly(n));
        let mut guard = self.base.lock().unwrap();
        Arc::clone(guard.entry(n).or_insert(p))
    }

    /// Product of P over a descending-sorted part list.
    pub fn product_of_sorted(&self, key: &[u32]) -> Arc<RatBiPoly> {
        debug_assert!(key.windows(2).all(|w| w[0] >= w[1]), "key must be sorted");
        match key.len() {
            0 => Arc::new(BiPoly::one()),
            1 => self.gjms(key[0]),
            _ => {
                if let Some(p) = self.products.lock().unwrap().get(key) {
                    return Arc::clone(p);
                }
                let head = self.gjms(key[0]);
                let tail = self.product_of_sorted(&key[1..]);
                let prod = Arc::new(&*head * &*tail);
                self.multiplications.fetch_add(1, Ordering::Relaxed);
                let mut guard = self.products.lock().unwrap();
                Arc::clone(guard.entry(key.to_vec()).or_insert(prod))
            }
        }
    }

    /// P(I_1)·P(I_2)···P(I_r) for a composition I, through the memo.
    pub fn product(&self, i: &Composition) -> Arc<RatBiPoly> {
        self.product_of_sorted(&i.sorted_parts())
    }

    /// Number of polynomial multiplications performed so far.
    pub fn multiplications(&self) -> u64 {
        self.multiplications.load(Ordering::Relaxed)
    }

    /// Largest bit length over numerators and denominators of all cached
    /// coefficients.
    pub fn peak_coeff_bits(&self) -> u64 {
        let mut peak = 0;
        let base = self.base.lock().unwrap();
        let products = self.products.lock().unwrap();
        for poly in base.values().chain(products.values()) {
            for (_, c) in poly.terms() {
                peak = peak
                    .max(c.numer().magnitude().bits())
                    .max(c.denom().magnitude().bits());
            }
        }
        peak
    }
}

impl Default for ProductCache {
    fn default() -> Self {
        Self::new()
    }
}

/// Left-to-right product without any sharing; `mults` counts the polynomial
/// multiplications. The baseline for the memoization benchmark.
pub fn product_naive(i: &Composition, mults: &mut u64) -> RatBiPoly {
    let mut parts = i.parts().iter();
    let mut acc = gjms_poly(*parts.next().expect("nonempty"));
    for &p in parts {
        acc = &acc * &gjms_poly(p);
        *mults += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::composition;
    use crate::scalar::ratio;

    fn x() -> RatBiPoly {
        BiPoly::var(Var::X)
    }

    fn y() -> RatBiPoly {
        BiPoly::var(Var::Y)
    }

    #[test]
    fn base_polynomials() {
        assert_eq!(gjms_poly(1), &x() * &y());
        let p2 = &(&(&x() * &x()) - &BiPoly::one()) * &(&(&y() * &y()) - &BiPoly::one());
        assert_eq!(gjms_poly(2), p2);
        let x2m4 = &(&x() * &x()) - &BiPoly::constant(int(4));
        let y2m4 = &(&y() * &y()) - &BiPoly::constant(int(4));
        let p3 = &(&x() * &y()) * &(&x2m4 * &y2m4);
        assert_eq!(gjms_poly(3), p3);
    }

    #[test]
    fn degree_bounds() {
        for n in 1..=8u32 {
            let p = gjms_poly(n);
            assert_eq!(p.total_degree(), Some(2 * n));
            assert_eq!(p.x_degree(), Some(n));
            assert_eq!(p.y_degree(), Some(n));
        }
    }

    #[test]
    fn factored_form_matches() {
        assert_eq!(gjms_factored(1), &x() * &y());
        for n in 1..=8u32 {
            assert_eq!(gjms_factored(n), gjms_poly(n), "n = {}", n);
        }
    }

    #[test]
    fn symmetries() {
        for n in 1..=8u32 {
            let p = gjms_poly(n);
            assert_eq!(p.swap_vars(), p);
            assert_eq!(p.negate_vars(), p);
        }
    }

    #[test]
    fn composition_products() {
        let cache = ProductCache::new();
        let xy = &x() * &y();
        assert_eq!(
            *cache.product(&Composition::new(vec![1, 1])),
            &xy * &xy
        );
        assert_eq!(*cache.product(&Composition::new(vec![2])), gjms_poly(2));
        assert_eq!(
            *cache.product(&Composition::new(vec![1, 1, 1])),
            &(&xy * &xy) * &xy
        );
    }

    #[test]
    fn cached_products_match_naive() {
        let cache = ProductCache::new();
        for n in 1..=7u32 {
            for c in composition::enumerate(n) {
                let mut mults = 0;
                assert_eq!(*cache.product(&c), product_naive(&c, &mut mults));
            }
        }
    }

    #[test]
    fn memoization_shares_work() {
        let cache = ProductCache::new();
        for c in composition::enumerate(9) {
            cache.product(&c);
        }
        let memoized = cache.multiplications();
        let mut naive = 0;
        for c in composition::enumerate(9) {
            product_naive(&c, &mut naive);
        }
        assert!(memoized < naive, "memoized {} vs naive {}", memoized, naive);
    }

    #[test]
    fn evaluation_at_spectral_point() {
        // X = 5/2, Y = -3/2 comes from (q,p,k,l) = (3,2,1,0).
        assert_eq!(
            gjms_poly(1).eval(&ratio(5, 2), &ratio(-3, 2)),
            ratio(-15, 4)
        );
    }
}
