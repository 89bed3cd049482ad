mod common;

use proptest::prelude::*;

use inose_core::algebra::rational::{format_rational, rat};
use inose_core::algebra::{parse_poly, parse_rational, RatFunc, UniPoly, Var, ZPoly};
use inose_core::curves::{chord_third_point, ProjPoint};
use inose_core::elliptic::{verify_isogeny, ECPoint, WeierstrassModel};
use inose_core::inose::{build_cubic, expected_split_degree, origin, split_divisor};
use inose_core::job::{ratfunc_from_json, ratfunc_json};
use inose_core::linsolve::FFMatrix;

fn coeffs(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-20i64..=20, 1..=max_len)
}

fn upoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    coeffs(max_len).prop_map(|c| UniPoly::from_ints(Var::U, &c))
}

fn nonzero_upoly(max_len: usize) -> impl Strategy<Value = UniPoly> {
    upoly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (upoly(4), nonzero_upoly(4)).prop_map(|(n, d)| RatFunc::new(&n, &d).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_strings_round_trip(n in -10_000i64..10_000, d in 1i64..500) {
        let r = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn polynomial_division(a in upoly(7), b in nonzero_upoly(4)) {
        let (q, r) = a.divrem(&b).unwrap();
        prop_assert_eq!(&(&q * &b) + &r, a);
        prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
    }

    #[test]
    fn gcd_divides_and_captures_common_factors(a in nonzero_upoly(4), b in nonzero_upoly(4), c in nonzero_upoly(3)) {
        let g = (&a * &c).gcd(&(&b * &c)).unwrap();
        prop_assert!((&a * &c).divrem(&g).unwrap().1.is_zero());
        prop_assert!((&b * &c).divrem(&g).unwrap().1.is_zero());
        prop_assert!(g.divrem(&c.monic()).unwrap().1.is_zero() || c.degree() == Some(0));
    }

    #[test]
    fn integer_gcd_matches_rational_gcd(a in coeffs(5), b in coeffs(5)) {
        let (za, zb) = (ZPoly::from_i64s(&a), ZPoly::from_i64s(&b));
        prop_assume!(!za.is_zero() && !zb.is_zero());
        let g = za.gcd(&zb);
        let q = UniPoly::from_ints(Var::U, &a).gcd(&UniPoly::from_ints(Var::U, &b)).unwrap();
        prop_assert_eq!(g.degree(), q.degree());
    }

    #[test]
    fn pretty_printing_parses_back(p in upoly(8)) {
        prop_assert_eq!(parse_poly(&p.to_pretty(), Var::U).unwrap(), p);
    }

    #[test]
    fn field_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&(&a - &b) + &b, a.clone());
        if !b.is_zero() {
            prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
        }
    }

    #[test]
    fn canonical_form_is_unique(n in upoly(4), d in nonzero_upoly(3), k in nonzero_upoly(2)) {
        let f = RatFunc::new(&n, &d).unwrap();
        let g = RatFunc::new(&(&n * &k), &(&d * &k)).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(RatFunc::new(&f.num(), &f.den()).unwrap(), f.clone());
        prop_assert_eq!(ratfunc_from_json(&ratfunc_json(&f), Var::U).unwrap(), f);
    }

    #[test]
    fn sigma_and_inflation(f in ratfunc()) {
        prop_assert_eq!(f.negate_var().negate_var(), f.clone());
        prop_assert_eq!(f.inflate(6, Var::U).deflate(6, Var::S).unwrap(), f.with_var(Var::S));
    }

    #[test]
    fn nullspace_is_annihilated(rows in prop::collection::vec(prop::collection::vec(upoly(2), 4), 1..4)) {
        let entries: Vec<Vec<RatFunc>> = rows
            .iter()
            .map(|r| r.iter().map(RatFunc::from_poly).collect())
            .collect();
        let m = FFMatrix::new(4, Var::U, entries).unwrap();
        let null = m.nullspace();
        prop_assert_eq!(m.rank() + null.len(), 4);
        for v in &null {
            prop_assert!(m.apply(v).iter().all(RatFunc::is_zero));
        }
    }

    #[test]
    fn multiples_add_up(m in -6i64..=6, n in -6i64..=6) {
        // y^2 = x^3 + 17 over Q has the point (-2, 3) of infinite order
        let e = WeierstrassModel::new(RatFunc::zero(Var::U), RatFunc::from_int(Var::U, 17)).unwrap();
        let p = ECPoint::affine(RatFunc::from_int(Var::U, -2), RatFunc::from_int(Var::U, 3));
        let lhs = e.add(&e.mul(m, &p).unwrap(), &e.mul(n, &p).unwrap()).unwrap();
        prop_assert_eq!(lhs, e.mul(m + n, &p).unwrap());
    }

    #[test]
    fn two_isogenies_verify_and_split(a in -6i64..=6, b in -6i64..=6) {
        prop_assume!(b != 0 && a * a != 4 * b);
        let (e1, e2, phi) = common::two_isogeny(a, b);
        prop_assert!(verify_isogeny(&e1, &e2, &phi).passed());
        if e1.j_invariant() != e2.j_invariant() {
            let pair = split_divisor(&e1, &e2, &phi).unwrap();
            prop_assert_eq!(pair.r, expected_split_degree(2));
            prop_assert_eq!(pair.p_plus.degree(), Some(pair.r));
            prop_assert_eq!(pair.p_minus.clone(), pair.p_plus.map_coeffs(RatFunc::negate_var));
        }
    }

    #[test]
    fn chords_stay_on_the_cubic(t in -5i64..=5) {
        // C_u for y^2 = x^3 + x^2 - x and y^2 = x^3 - 2x^2 + 5x; (0 : 0 : 1) lies on it
        let (e1, e2, _) = common::two_isogeny(1, -1);
        let cu = build_cubic(&e1, &e2);
        let base = ProjPoint::from_ints(Var::U, &[0], &[0], &[1]);
        prop_assume!(t != 0);
        let third = chord_third_point(&cu, &origin(), &base).unwrap();
        prop_assert!(cu.evaluate(&third).is_zero());
        let again = chord_third_point(&cu, &third, &base).unwrap();
        prop_assert!(cu.evaluate(&again).is_zero());
        let at = again.specialize(&rat(t, 1));
        prop_assert!(at.is_none_or(|p| cu.specialize(&rat(t, 1)).unwrap().evaluate(&p).is_zero()));
    }
}
