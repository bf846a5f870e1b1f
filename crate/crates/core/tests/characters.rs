mod common;

use common::{dimension_of, reference_character, reference_decompose, Char};
use multfree_core::classifier::labels_up_to;
use multfree_core::irrep::weyl_dimension;
use multfree_core::oracle::recompose;
use multfree_core::{decompose_product, weight_system, weyl_character, Family, FormalSum, IrrepLabel, LaurentPoly};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

fn groups() -> Vec<(Family, u32)> {
    vec![
        (Family::Circle, 1),
        (Family::SU, 2),
        (Family::SU, 3),
        (Family::U, 1),
        (Family::U, 2),
        (Family::U, 3),
        (Family::Sp, 1),
        (Family::Sp, 2),
        (Family::Sp, 3),
        (Family::SO, 4),
    ]
}

fn as_char(poly: &LaurentPoly) -> Char {
    poly.terms().map(|(e, c)| (e.clone(), c.to_i64().unwrap())).collect()
}

#[test]
fn characters_match_tableau_formulas() {
    for (family, rank) in groups() {
        for label in labels_up_to(family, rank, 4) {
            let ch = weyl_character(&label).unwrap();
            assert_eq!(as_char(&ch), reference_character(&label), "{label:?}");
            assert!(ch.terms().all(|(_, c)| c >= &BigInt::from(1)), "{label:?}");
            assert_eq!(ch.eval_at_one(), weyl_dimension(&label), "{label:?}");
            assert_eq!(label.dimension(), weyl_dimension(&label));
        }
    }
}

#[test]
fn documented_characters() {
    let ch = as_char(&weyl_character(&IrrepLabel::sp(1, &[1]).unwrap()).unwrap());
    assert_eq!(ch, [(vec![1], 1), (vec![-1], 1)].into_iter().collect());
    for k in 0..6u32 {
        let ch = as_char(&weyl_character(&IrrepLabel::su2(k)).unwrap());
        let want: Char = (0..=k as i32).map(|i| (vec![k as i32 - 2 * i], 1)).collect();
        assert_eq!(ch, want);
    }
    let ch = weyl_character(&IrrepLabel::sp(2, &[1, 1]).unwrap()).unwrap();
    assert_eq!(ch.eval_at_one(), BigInt::from(5));
}

#[test]
fn weight_systems_are_weyl_invariant() {
    for (family, rank) in groups() {
        for label in labels_up_to(family, rank, 4) {
            let ws = weight_system(&label).unwrap();
            assert_eq!(BigInt::from(ws.total()), label.dimension(), "{label:?}");
            for (w, &m) in ws.iter() {
                for image in weyl_images(family, w) {
                    assert_eq!(ws.mult(&image), m, "{label:?}: {w:?} vs {image:?}");
                }
            }
        }
    }
}

/// Images of a weight under the Weyl group generators.
fn weyl_images(family: Family, w: &[i32]) -> Vec<Vec<i32>> {
    let mut out = Vec::new();
    match family {
        Family::Circle => {}
        Family::U | Family::Sp | Family::SO => {
            for i in 0..w.len().saturating_sub(1) {
                let mut v = w.to_vec();
                v.swap(i, i + 1);
                out.push(v);
            }
            if family == Family::Sp {
                let mut v = w.to_vec();
                v[0] = -v[0];
                out.push(v);
            }
            if family == Family::SO && w.len() >= 2 {
                let mut v = w.to_vec();
                v[0] = -v[0];
                v[1] = -v[1];
                out.push(v);
            }
        }
        Family::SU => {
            // coordinates e_i - e_m: permuting the m letters
            let mut full = w.to_vec();
            full.push(0);
            for i in 0..full.len() - 1 {
                let mut v = full.clone();
                v.swap(i, i + 1);
                let last = v[v.len() - 1];
                out.push(v[..v.len() - 1].iter().map(|x| x - last).collect());
            }
        }
    }
    out
}

#[test]
fn documented_weight_systems() {
    let ws = weight_system(&IrrepLabel::su2(2)).unwrap();
    assert_eq!(ws, [(vec![2], 1), (vec![0], 1), (vec![-2], 1)].into_iter().collect());
    let ws = weight_system(&IrrepLabel::circle(-3)).unwrap();
    assert_eq!(ws, FormalSum::singleton(vec![-3]));
    let ws = weight_system(&IrrepLabel::sp(2, &[1]).unwrap()).unwrap();
    let want: FormalSum<Vec<i32>> = [vec![1, 0], vec![-1, 0], vec![0, 1], vec![0, -1]].into_iter().map(|w| (w, 1)).collect();
    assert_eq!(ws, want);
}

/// Reconstruction, dimension conservation and agreement with the reference
/// decomposer for all pairs at rank ≤ 3 and weight size ≤ 4.
#[test]
fn products_reconstruct_and_match_reference() {
    for (family, rank) in groups() {
        let labels = labels_up_to(family, rank, 4);
        let nvars = labels[0].torus_dim();
        for (i, a) in labels.iter().enumerate() {
            for b in &labels[i..] {
                let got = decompose_product(&[a.clone(), b.clone()]).unwrap();
                let product = &weyl_character(a).unwrap() * &weyl_character(b).unwrap();
                assert_eq!(recompose(&got, nvars).unwrap(), product, "{a:?} ⊗ {b:?}");
                let dims: BigInt = got.iter().map(|(l, &m)| l.dimension() * m).sum();
                assert_eq!(dims, a.dimension() * b.dimension());
                assert_eq!(got, reference_decompose(a, b), "{a:?} ⊗ {b:?}");
                assert_eq!(got, decompose_product(&[b.clone(), a.clone()]).unwrap());
            }
        }
    }
}

#[test]
fn documented_products() {
    let sp = |w: &[i32]| IrrepLabel::sp(2, w).unwrap();
    let got = decompose_product(&[sp(&[1]), sp(&[1])]).unwrap();
    assert_eq!(got, [(sp(&[2]), 1), (sp(&[1, 1]), 1), (sp(&[]), 1)].into_iter().collect());
    let u = |w: &[i32]| IrrepLabel::u(2, w).unwrap();
    let got = decompose_product(&[u(&[1, 0]), u(&[1, 0])]).unwrap();
    assert_eq!(got, [(u(&[2, 0]), 1), (u(&[1, 1]), 1)].into_iter().collect());
    assert!(FormalSum::<IrrepLabel>::singleton(sp(&[2])).is_multiplicity_free());
    let mut twice = FormalSum::new();
    twice.add(sp(&[1]), 2);
    assert!(!twice.is_multiplicity_free());
    assert!(!decompose_product(&[sp(&[2, 1]), sp(&[2])]).unwrap().is_multiplicity_free());
}

#[test]
fn triple_products_are_associative() {
    let labels = labels_up_to(Family::Sp, 2, 2);
    for a in &labels {
        for b in &labels {
            for c in &labels {
                let abc = decompose_product(&[a.clone(), b.clone(), c.clone()]).unwrap();
                let cba = decompose_product(&[c.clone(), b.clone(), a.clone()]).unwrap();
                assert_eq!(abc, cba);
                let prod = &(&weyl_character(a).unwrap() * &weyl_character(b).unwrap()) * &weyl_character(c).unwrap();
                assert_eq!(recompose(&abc, 2).unwrap(), prod);
            }
        }
    }
}

#[test]
fn formal_sum_json_round_trip() {
    let got = decompose_product(&[IrrepLabel::sp(2, &[2, 1]).unwrap(), IrrepLabel::sp(2, &[2]).unwrap()]).unwrap();
    let text = serde_json::to_string(&got).unwrap();
    assert_eq!(serde_json::from_str::<FormalSum<IrrepLabel>>(&text).unwrap(), got);
    let mut t = got.clone();
    t.set_truncation(Some(3));
    let text = serde_json::to_string(&t).unwrap();
    assert_eq!(serde_json::from_str::<FormalSum<IrrepLabel>>(&text).unwrap(), t);
}

fn arb_group_pair() -> impl Strategy<Value = (IrrepLabel, IrrepLabel)> {
    prop::sample::select(groups()).prop_flat_map(|(family, rank)| {
        let labels = labels_up_to(family, rank, 3);
        (prop::sample::select(labels.clone()), prop::sample::select(labels))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn decomposition_is_symmetric((a, b) in arb_group_pair()) {
        let ab = decompose_product(&[a.clone(), b.clone()]).unwrap();
        let ba = decompose_product(&[b.clone(), a.clone()]).unwrap();
        prop_assert_eq!(&ab, &ba);
        prop_assert!(ab.iter().all(|(_, &m)| m >= 1));
        let product = &weyl_character(&a).unwrap() * &weyl_character(&b).unwrap();
        prop_assert_eq!(recompose(&ab, a.torus_dim()).unwrap(), product);
    }

    #[test]
    fn character_degree_is_dimension((a, _b) in arb_group_pair()) {
        prop_assert_eq!(dimension_of(&reference_character(&a)), a.dimension().to_i64().unwrap());
    }
}
