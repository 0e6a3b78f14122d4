//! Property-based invariants for the algebra layers.

use proptest::prelude::*;

use octowitt::clifford::{blade_product, Blade, Multivector};
use octowitt::involutions::{project_coefficient, Involution};
use octowitt::octonion::Octonion;
use octowitt::rational::Rational;
use octowitt::tensor::TensorElement;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=30).prop_map(|(n, d)| Rational::from_ratio(n, d).unwrap())
}

fn octonion() -> impl Strategy<Value = Octonion> {
    proptest::array::uniform8(rational()).prop_map(Octonion::from_coeffs)
}

fn multivector(dim: usize) -> impl Strategy<Value = Multivector> {
    let blade = 0u64..(1u64 << dim);
    proptest::collection::vec((blade, rational()), 1..5).prop_map(move |terms| {
        let mut m = Multivector::zero(dim);
        for (mask, c) in terms {
            m.add_term(Blade(mask), c);
        }
        m
    })
}

fn tensor(dim: usize) -> impl Strategy<Value = TensorElement> {
    let blade = 0u64..(1u64 << dim);
    proptest::collection::vec((blade, octonion()), 1..4).prop_map(move |terms| {
        let mut t = TensorElement::zero(dim);
        for (mask, c) in terms {
            t.add_term(Blade(mask), c);
        }
        t
    })
}

proptest! {
    #[test]
    fn rational_display_round_trip(r in rational()) {
        let back: Rational = r.to_string().parse().unwrap();
        prop_assert_eq!(back, r);
    }

    #[test]
    fn octonion_alternativity(a in octonion(), b in octonion()) {
        let aa_b = &(&a * &a) * &b;
        let a_ab = &a * &(&a * &b);
        prop_assert_eq!(aa_b, a_ab);
        let ab_b = &(&a * &b) * &b;
        let a_bb = &a * &(&b * &b);
        prop_assert_eq!(ab_b, a_bb);
    }

    #[test]
    fn octonion_composition_norm(a in octonion(), b in octonion()) {
        prop_assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
    }

    #[test]
    fn octonion_conj_reverses_products(a in octonion(), b in octonion()) {
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn octonion_norm_positive_definite(a in octonion()) {
        if a.is_zero() {
            prop_assert!(a.norm_sq().is_zero());
        } else {
            prop_assert!(!a.norm_sq().is_negative());
            prop_assert!(!a.norm_sq().is_zero());
        }
    }

    #[test]
    fn octonion_inner_is_symmetric_bilinear(a in octonion(), b in octonion(), c in octonion(), k in rational()) {
        prop_assert_eq!(a.inner(&b), b.inner(&a));
        let lhs = (&a + &b).inner(&c);
        prop_assert_eq!(lhs, a.inner(&c) + b.inner(&c));
        prop_assert_eq!(a.scale(&k).inner(&c), k * a.inner(&c));
    }

    #[test]
    fn involutions_are_automorphisms_on_random_elements(a in octonion(), b in octonion(), j in 0usize..8) {
        let inv = Involution::new(j);
        prop_assert_eq!(inv.apply(&(&a * &b)), &inv.apply(&a) * &inv.apply(&b));
        prop_assert_eq!(inv.apply(&inv.apply(&a)), a);
    }

    #[test]
    fn projection_recovers_every_coefficient(a in octonion(), i in 0usize..8) {
        prop_assert_eq!(project_coefficient(i, &a), a.coeff(i).clone());
    }

    #[test]
    fn blade_sign_matches_square_free_exhaustion(a in 0u64..(1 << 16), b in 0u64..(1 << 16)) {
        // independent oracle: bubble sort + square cancellation
        let mut list: Vec<usize> = Blade(a).indices();
        list.extend(Blade(b).indices());
        let mut sign = 1i8;
        let mut swapped = true;
        while swapped {
            swapped = false;
            for i in 1..list.len() {
                if list[i - 1] > list[i] {
                    list.swap(i - 1, i);
                    sign = -sign;
                    swapped = true;
                }
            }
        }
        let mut reduced: Vec<usize> = Vec::new();
        for x in list {
            if reduced.last() == Some(&x) {
                reduced.pop();
                sign = -sign;
            } else {
                reduced.push(x);
            }
        }
        prop_assert_eq!(blade_product(Blade(a), Blade(b)), (sign, Blade::from_indices(&reduced)));
    }

    #[test]
    fn clifford_product_is_associative(u in multivector(8), v in multivector(8), w in multivector(8)) {
        prop_assert_eq!(u.product(&v).product(&w), u.product(&v.product(&w)));
    }

    #[test]
    fn clifford_product_distributes(u in multivector(8), v in multivector(8), w in multivector(8)) {
        let lhs = u.product(&v.add(&w));
        prop_assert_eq!(lhs, u.product(&v).add(&u.product(&w)));
    }

    #[test]
    fn tensor_product_is_bilinear(s in tensor(8), t in tensor(8), u in tensor(8), k in rational()) {
        let lhs = s.product(&t.add(&u));
        prop_assert_eq!(lhs, s.product(&t).add(&s.product(&u)));
        let rhs = s.add(&t).product(&u);
        prop_assert_eq!(rhs, s.product(&u).add(&t.product(&u)));
        prop_assert_eq!(s.scale(&k).product(&t), s.product(&t).scale(&k));
    }

    #[test]
    fn real_coefficient_tensors_associate(u in multivector(8), v in multivector(8), w in multivector(8)) {
        // the e0⊗Cl subalgebra is associative
        let s = TensorElement::from_multivector(&u);
        let t = TensorElement::from_multivector(&v);
        let r = TensorElement::from_multivector(&w);
        prop_assert_eq!(s.product(&t).product(&r), s.product(&t.product(&r)));
    }

    #[test]
    fn multivector_json_round_trip(u in multivector(8)) {
        let js = serde_json::to_string(&u).unwrap();
        let back: Multivector = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, u);
    }

    #[test]
    fn tensor_json_round_trip(t in tensor(8)) {
        let js = serde_json::to_string(&t).unwrap();
        let back: TensorElement = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn octonion_json_round_trip(a in octonion()) {
        let js = serde_json::to_string(&a).unwrap();
        let back: Octonion = serde_json::from_str(&js).unwrap();
        prop_assert_eq!(back, a);
    }
}
