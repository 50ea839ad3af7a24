mod common;

use common::random_twist;
use homsuper::algebra::{catalog, direct_sum, quotient, CATALOG_NAMES};
use homsuper::invariants::{
    center, centralizer, derived_subalgebra, is_characteristic_ideal, is_hom_ideal, killing_form,
};
use homsuper::{HomSuperalgebra, Scalar, Subspace};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn algebra() -> impl Strategy<Value = HomSuperalgebra> {
    prop_oneof![
        prop::sample::select(CATALOG_NAMES.to_vec()).prop_map(|n| catalog(n).unwrap()),
        any::<u64>().prop_map(|seed| random_twist(&mut ChaCha8Rng::seed_from_u64(seed))),
    ]
}

/// Hom-ideals reachable from the standard constructions.
fn known_ideals(g: &HomSuperalgebra) -> Vec<Subspace> {
    let n = g.dim();
    let d = derived_subalgebra(g);
    let mut out = vec![Subspace::zero(n), Subspace::full(n), center(g), d.clone()];
    if let Ok(c) = centralizer(g, &d) {
        out.push(c);
    }
    out.retain(|i| is_hom_ideal(g, i));
    out.dedup();
    out
}

fn sign(a: bool, b: bool) -> Scalar {
    Scalar::from_integer(if a && b { (-1).into() } else { 1.into() })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn centralizers_of_ideals(g in algebra()) {
        let z = center(&g);
        prop_assert_eq!(&centralizer(&g, &Subspace::full(g.dim())).unwrap(), &z);
        for i in known_ideals(&g) {
            let c = centralizer(&g, &i).unwrap();
            prop_assert!(c.contains(&z).unwrap());
            prop_assert!(is_hom_ideal(&g, &c));
            for x in c.vectors() {
                for y in i.vectors() {
                    prop_assert!(g.bracket(x, y).iter().all(Zero::is_zero));
                }
            }
        }
    }

    #[test]
    fn invariant_subspaces_are_graded(g in algebra()) {
        let split = g.dim_even();
        prop_assert!(center(&g).is_graded(split));
        prop_assert!(derived_subalgebra(&g).is_graded(split));
    }

    #[test]
    fn derived_is_smallest_abelian_quotient(g in algebra()) {
        let d = derived_subalgebra(&g);
        for i in known_ideals(&g) {
            if quotient(&g, &i).unwrap().is_abelian_bracket() {
                prop_assert!(i.contains(&d).unwrap());
            }
        }
    }

    #[test]
    fn killing_gram_is_even_and_supersymmetric(g in algebra(), s in 0u32..=2) {
        let k = killing_form(&g, s);
        let de = g.dim_even();
        for i in 0..g.dim() {
            for j in 0..g.dim() {
                let (pi, pj) = (i >= de, j >= de);
                let v = k.gram.get(i, j);
                if pi != pj {
                    prop_assert!(v.is_zero());
                }
                prop_assert_eq!(v, &(sign(pi, pj) * k.gram.get(j, i)));
            }
        }
        prop_assert_eq!(k.nondegenerate, !k.determinant.is_zero());
    }

    #[test]
    fn characteristic_ideals_are_hom_ideals(g in algebra(), s in 0u32..=1) {
        prop_assert!(is_characteristic_ideal(&g, &derived_subalgebra(&g), s).unwrap());
        for i in known_ideals(&g) {
            if is_characteristic_ideal(&g, &i, s).unwrap() {
                prop_assert!(is_hom_ideal(&g, &i));
            }
        }
    }
}

#[test]
fn classical_killing_is_invariant() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap();
        if !g.alpha().is_identity() {
            continue;
        }
        let k = killing_form(&g, 0);
        let n = g.dim();
        let form = |x: &[Scalar], y: &[Scalar]| -> Scalar {
            (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| &x[a] * k.gram.get(a, b) * &y[b])
                .sum()
        };
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (ex, ey, ez) = (g.basis_vector(x), g.basis_vector(y), g.basis_vector(z));
                    assert_eq!(
                        form(&g.bracket(&ex, &ey), &ez),
                        form(&ex, &g.bracket(&ey, &ez)),
                        "{name} {x} {y} {z}"
                    );
                }
            }
        }
    }
}

#[test]
fn frozen_killing_values() {
    let k = killing_form(&catalog("sl2").unwrap(), 0);
    assert_eq!(k.determinant, Scalar::from_integer((-128).into()));
    let h = killing_form(&catalog("heisenberg3").unwrap(), 0);
    assert!(h.gram.is_zero());
    assert!(killing_form(&catalog("osp12").unwrap(), 0).nondegenerate);
    assert!(!killing_form(&catalog("gl11").unwrap(), 0).nondegenerate);
}

#[test]
fn center_of_a_direct_sum_splits() {
    let h = catalog("heisenberg3").unwrap();
    let gl = catalog("gl11").unwrap();
    let (g, _, _) = direct_sum(&h, &gl).unwrap();
    assert_eq!(center(&g).dim(), center(&h).dim() + center(&gl).dim());
}
