mod common;

use common::sylvester_sr;
use curvetop::upoly::{principal_subresultants, resultant};
use curvetop::{IntPoly, IntPoly2};
use proptest::prelude::*;

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-20i64..=20, 1..=max_deg + 1)
        .prop_map(|c| IntPoly::from_i64s(&c))
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn bi_poly() -> impl Strategy<Value = IntPoly2> {
    prop::collection::vec((0usize..=2, 0usize..=3, -9i64..=9), 1..7)
        .prop_map(IntPoly2::from_terms)
        .prop_filter("nonconstant in y", |p| p.deg_y() >= 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn prs_matches_determinants(f in int_poly(5), g in int_poly(5)) {
        let sr = principal_subresultants(&f, &g);
        let top = f.deg().min(g.deg());
        prop_assert_eq!(sr.len(), top + 1);
        for k in 0..top {
            prop_assert_eq!(&sr[k], &sylvester_sr(&f, &g, k), "k = {}", k);
        }
    }

    #[test]
    fn prs_over_polynomial_ring(f in bi_poly(), g in bi_poly()) {
        let sr = principal_subresultants(&f, &g);
        for k in 0..f.deg().min(g.deg()) {
            prop_assert_eq!(&sr[k], &sylvester_sr(&f, &g, k), "k = {}", k);
        }
    }

    #[test]
    fn specialization_commutes(f in bi_poly(), g in bi_poly(), x0 in -5i64..=5) {
        // Without degree drop, Res_Y(F, G)(x0) = Res(F(x0, Y), G(x0, Y)).
        let x = num_rational::BigRational::from_integer(x0.into());
        let fx = f.specialize_x(&x);
        let gx = g.specialize_x(&x);
        prop_assume!(fx.deg() == f.deg_y() && gx.deg() == g.deg_y());
        // specialize_x clears denominators, which is a no-op at integers.
        let r = f.resultant_y(&g).unwrap();
        prop_assert_eq!(r.eval_rational(&x).to_integer(), resultant(&fx, &gx));
    }
}
