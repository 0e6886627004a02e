//! Property tests for the algebraic core.

use gjms::composition::{self, Composition};
use gjms::poly::{binom_poly, BiPoly, PochPoly, UniPoly, Var};
use gjms::scalar::ratio;
use gjms::Rat;
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-9i64..=9, 1i64..=4).prop_map(|(n, d)| ratio(n, d))
}

fn arb_unipoly() -> impl Strategy<Value = UniPoly<Rat>> {
    prop::collection::vec(arb_rat(), 0..8).prop_map(UniPoly::from_coeffs)
}

fn arb_pochpoly() -> impl Strategy<Value = PochPoly<Rat>> {
    prop::collection::btree_map(0u32..10, arb_rat(), 0..5)
        .prop_map(|m| PochPoly::from_coeffs(Var::X, m))
}

fn arb_bipoly() -> impl Strategy<Value = BiPoly<Rat>> {
    prop::collection::vec(((0u32..5, 0u32..5), arb_rat()), 0..8).prop_map(|terms| {
        let mut p = BiPoly::zero();
        for ((i, j), c) in terms {
            p = &p + &BiPoly::monomial(i, j, c);
        }
        p
    })
}

fn arb_composition() -> impl Strategy<Value = Composition> {
    prop::collection::vec(1u32..6, 1..6).prop_map(Composition::new)
}

proptest! {
    #[test]
    fn basis_change_round_trips(p in arb_pochpoly()) {
        prop_assert_eq!(PochPoly::from_monomial(Var::X, &p.to_monomial()), p);
    }

    #[test]
    fn poch_product_matches_monomial_product(p in arb_pochpoly(), q in arb_pochpoly()) {
        let lhs = p.mul(&q).to_monomial();
        let rhs = &p.to_monomial() * &q.to_monomial();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn unipoly_product_evaluates_pointwise(p in arb_unipoly(), q in arb_unipoly(), x in arb_rat()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.eval(&x), p.eval(&x) * q.eval(&x));
    }

    #[test]
    fn bipoly_product_evaluates_pointwise(p in arb_bipoly(), q in arb_bipoly(), x in arb_rat(), y in arb_rat()) {
        let prod = &p * &q;
        prop_assert_eq!(prod.eval(&x, &y), p.eval(&x, &y) * q.eval(&x, &y));
    }

    #[test]
    fn linear_division_inverts_multiplication(p in arb_bipoly(), a in -6i64..=6) {
        let factor = &BiPoly::var(Var::X) - &BiPoly::constant(ratio(a - 1, 1));
        let multiplied = &p * &factor;
        prop_assert_eq!(multiplied.exact_div_linear(a).unwrap(), p);
    }

    #[test]
    fn multiplicity_is_reversal_invariant(c in arb_composition()) {
        prop_assert_eq!(composition::multiplicity(&c), composition::multiplicity(&c.reversed()));
    }

    #[test]
    fn binom_poly_matches_scalar_binomial(x in arb_rat(), y in arb_rat(), k in 0u32..6) {
        // binom_poly(ℓ, k) evaluated equals the generalized binomial of the
        // evaluated linear form.
        let l = (&(&BiPoly::var(Var::X) - &BiPoly::var(Var::Y)) + &BiPoly::one())
            .scaled(&ratio(1, 2));
        let lhs = binom_poly(&l, k).eval(&x, &y);
        let l_val = (x.clone() - y.clone() + ratio::<Rat>(1, 1)) / ratio::<Rat>(2, 1);
        prop_assert_eq!(lhs, gjms::exact::gen_binomial(&l_val, k));
    }
}

#[test]
fn composition_counts() {
    for n in 1..=12u32 {
        assert_eq!(composition::enumerate(n).len() as u64, composition::count(n));
    }
}
