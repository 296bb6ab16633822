use proptest::prelude::*;
use symbolic_core::{
    buchberger, colength, int, normal_form, parse_poly, Colength, Cyclotomic, Env, ExponentVector, MonomialOrder,
    Poly, QPoly, Ring, RingRef, Scalar,
};

fn ring3() -> RingRef {
    Ring::new(&["x", "y", "z"])
}

fn small_poly(ring: RingRef) -> impl Strategy<Value = QPoly> {
    prop::collection::vec(((0i32..3, 0i32..3, 0i32..3), -4i64..5), 1..5).prop_map(move |ts| {
        Poly::from_terms(
            &ring,
            ts.into_iter()
                .map(|((a, b, c), k)| (ExponentVector(vec![a, b, c]), int(k))),
        )
    })
}

fn cyclo() -> impl Strategy<Value = Cyclotomic> {
    (-20i64..20, 1i64..6, -20i64..20, 1i64..6)
        .prop_map(|(a, da, b, db)| Cyclotomic::new(symbolic_core::rat(a, da), symbolic_core::rat(b, db)))
}

fn basis() -> Vec<QPoly> {
    let r = ring3();
    ["x^2 - y z", "y^2 - x z + 1", "z^2 - x y - 2"]
        .iter()
        .map(|s| parse_poly(s, &r, &Env::new()).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn normal_form_is_idempotent(p in small_poly(ring3())) {
        let o = MonomialOrder::grlex(3);
        let b = basis();
        let once = normal_form(&p, &b, &o).unwrap();
        let twice = normal_form(&once, &b, &o).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn difference_lies_in_the_ideal(p in small_poly(ring3())) {
        let o = MonomialOrder::grlex(3);
        let b = basis();
        let gb = buchberger(&b, &o).unwrap();
        let d = &p - &normal_form(&p, &b, &o).unwrap();
        prop_assert!(normal_form(&d, &gb, &o).unwrap().is_zero());
    }

    #[test]
    fn cube_roots_of_unity_survive_products(xs in prop::collection::vec(cyclo(), 1..8)) {
        let w = Cyclotomic::w();
        let one = Cyclotomic::one();
        let prod = xs.iter().fold(one.clone(), |acc, x| acc * x);
        let wp = w.clone() * &prod;
        prop_assert_eq!(w.clone() * &(w.clone() * &wp), prod.clone());
        let s = prod.clone() + &(w.clone() * &prod) + &(w.clone() * &(w.clone() * &prod));
        prop_assert!(s.is_zero());
        prop_assert_eq!(prod.conj().conj(), prod);
    }

    #[test]
    fn derivative_linear_and_leibniz(p in small_poly(ring3()), q in small_poly(ring3()), k in -5i64..6, v in 0usize..3) {
        let kp = p.scale(&int(k));
        prop_assert_eq!((&kp + &q).derivative(v), &p.derivative(v).scale(&int(k)) + &q.derivative(v));
        let lhs = (&p * &q).derivative(v);
        let rhs = &(&p.derivative(v) * &q) + &(&p * &q.derivative(v));
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn thousand_random_cyclotomic_products() {
    let mut rng = symbolic_core::SampleRng::new(11);
    let w = Cyclotomic::w();
    for _ in 0..1000 {
        let a = Cyclotomic::from_ints(rng.int_in(-50, 50), rng.int_in(-50, 50));
        let b = Cyclotomic::from_ints(rng.int_in(-50, 50), rng.int_in(-50, 50));
        let p = a.clone() * &b;
        assert_eq!(w.pow(3) * &p, p);
        assert!((p.clone() + &(w.clone() * &p) + &(w.pow(2) * &p)).is_zero());
        assert_eq!(p.norm(), a.norm() * b.norm());
    }
}

#[test]
fn colength_agrees_across_orders() {
    let r = Ring::new(&["Z1", "Z2", "Z3", "Z4"]);
    let e = Env::new();
    // the corner chart ideal at v = (1,1,1,1)
    let gens: Vec<QPoly> = ["Z1 - Z2 Z3 Z4", "Z2^2 - 1", "Z3^2 - 1", "Z4^2 - 1"]
        .iter()
        .map(|s| parse_poly(s, &r, &e).unwrap())
        .collect();
    for o in [MonomialOrder::grlex(4), MonomialOrder::lex(4)] {
        let gb = buchberger(&gens, &o).unwrap();
        assert_eq!(colength(&gb, &o), Colength::Finite(8));
    }
    let rev = MonomialOrder {
        kind: symbolic_core::OrderKind::GradedLex,
        priority: vec![3, 2, 1, 0],
        param_start: None,
    };
    let gb = buchberger(&gens, &rev).unwrap();
    assert_eq!(colength(&gb, &rev), Colength::Finite(8));
}

#[test]
fn standard_monomial_count_matches_brute_force() {
    // independent count: monomials in a box not divisible by any leading term
    let r = Ring::new(&["x", "y"]);
    let e = Env::new();
    let gens: Vec<QPoly> = ["x^3 - y", "y^2 - x y"]
        .iter()
        .map(|s| parse_poly(s, &r, &e).unwrap())
        .collect();
    let o = MonomialOrder::grlex(2);
    let gb = buchberger(&gens, &o).unwrap();
    let leads: Vec<ExponentVector> = gb
        .iter()
        .map(|g| symbolic_core::leading_exponent(g, &o).unwrap())
        .collect();
    let mut count = 0;
    for a in 0..20 {
        for b in 0..20 {
            let m = ExponentVector(vec![a, b]);
            if !leads.iter().any(|l| l.divides(&m)) {
                count += 1;
            }
        }
    }
    assert_eq!(colength(&gb, &o), Colength::Finite(count));
    assert_eq!(count, 6);
}
