mod common;

use common::{random_twist, Raw};
use homsuper::algebra::{catalog, direct_sum, quotient, restrict, twist, validate, CATALOG_NAMES};
use homsuper::invariants::{derived_subalgebra, is_hom_ideal};
use homsuper::io::{parse_algebra, serialize};
use homsuper::{HomSuperalgebra, Mat, Subspace};
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn twisted() -> impl Strategy<Value = HomSuperalgebra> {
    any::<u64>().prop_map(|seed| random_twist(&mut ChaCha8Rng::seed_from_u64(seed)))
}

fn catalog_entry() -> impl Strategy<Value = HomSuperalgebra> {
    prop::sample::select(CATALOG_NAMES.to_vec()).prop_map(|n| catalog(n).unwrap())
}

fn algebra() -> impl Strategy<Value = HomSuperalgebra> {
    prop_oneof![catalog_entry(), twisted()]
}

/// One tensor or α entry shifted by a small nonzero amount.
fn mutated() -> impl Strategy<Value = HomSuperalgebra> {
    (
        algebra(),
        any::<prop::sample::Index>(),
        any::<bool>(),
        prop_oneof![Just(-1i64), Just(1), Just(2)],
    )
        .prop_map(|(g, at, in_alpha, delta)| {
            let n = g.dim();
            let delta = homsuper::Scalar::from_integer(delta.into());
            let mut tensor = g.tensor().to_vec();
            let mut alpha = g.alpha().clone();
            if in_alpha || tensor.is_empty() {
                let k = at.index(n * n);
                alpha.set(k / n, k % n, alpha.get(k / n, k % n) + delta);
            } else {
                let k = at.index(tensor.len());
                tensor[k] += delta;
            }
            HomSuperalgebra::new("mutant", g.dim_even(), g.dim_odd(), tensor, alpha).unwrap()
        })
}

fn hom_lie(g: &HomSuperalgebra) -> bool {
    validate(g).is_hom_lie()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn twists_are_multiplicative_hom_lie(g in twisted()) {
        let r = validate(&g);
        prop_assert!(r.is_multiplicative_hom_lie(), "{:?}", r.violations);
        prop_assert!(r.violations.iter().all(|v| v.property == homsuper::algebra::Property::Regularity));
    }

    #[test]
    fn validator_agrees_with_oracle(g in prop_oneof![algebra(), mutated()]) {
        let raw = Raw::of(&g);
        let r = validate(&g);
        prop_assert_eq!(r.grading_ok, raw.grading_ok());
        prop_assert_eq!(r.supersymmetry_ok, raw.supersymmetric());
        prop_assert_eq!(r.hom_jacobi_ok, raw.hom_jacobi());
        prop_assert_eq!(r.multiplicative, raw.multiplicative());
        prop_assert_eq!(r.violations.is_empty(), r.is_multiplicative_hom_lie() && r.regular);
    }

    #[test]
    fn quotient_by_derived_is_abelian(g in algebra()) {
        let d = derived_subalgebra(&g);
        prop_assert!(is_hom_ideal(&g, &d));
        let q = quotient(&g, &d).unwrap();
        prop_assert!(q.is_abelian_bracket());
        prop_assert_eq!(q.dim(), g.dim() - d.dim());
        prop_assert!(hom_lie(&q));
    }

    #[test]
    fn direct_sum_embeddings_commute(a in algebra(), b in catalog_entry()) {
        prop_assume!(a.dim() + b.dim() <= 8);
        let (g, ea, eb) = direct_sum(&a, &b).unwrap();
        prop_assert!(hom_lie(&g));
        prop_assert!(is_hom_ideal(&g, &ea) && is_hom_ideal(&g, &eb));
        for x in ea.vectors() {
            for y in eb.vectors() {
                prop_assert!(g.bracket(x, y).iter().all(Zero::is_zero));
            }
        }
        let ra = restrict(&g, &ea).unwrap();
        prop_assert_eq!(ra.tensor(), a.tensor());
        prop_assert_eq!(ra.alpha(), a.alpha());
    }

    #[test]
    fn bracket_parity_is_additive(g in algebra()) {
        let n = g.dim();
        for i in 0..n {
            for j in 0..n {
                let p = g.parity(i) + g.parity(j);
                for (k, c) in g.bracket_basis(i, j).iter().enumerate() {
                    prop_assert!(c.is_zero() || g.parity(k) == p);
                }
            }
        }
    }

    #[test]
    fn round_trip(g in algebra()) {
        let text = serialize(&g);
        let back = parse_algebra(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(serialize(&back), text);
    }
}

#[test]
fn every_catalog_entry_validates() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap();
        let r = validate(&g);
        assert!(r.is_multiplicative_hom_lie(), "{name}: {:?}", r.violations);
        assert!(Raw::of(&g).all_axioms(), "{name}");
    }
}

#[test]
fn restrict_to_even_part_of_gl11() {
    let g = catalog("gl11").unwrap();
    let even = g.even_subspace();
    // g_0 is a subalgebra but not an ideal
    assert!(!is_hom_ideal(&g, &even));
    let r = restrict(&g, &even).unwrap();
    assert!(r.is_abelian_bracket());
    assert!(quotient(&g, &even).is_err());
}

#[test]
fn twist_by_non_endomorphism_is_rejected() {
    let g = catalog("sl2").unwrap();
    let phi = Mat::diagonal(&[2.into(), 2.into(), 2.into()].map(|n: i64| homsuper::Scalar::from_integer(n.into())));
    assert!(twist(&g, &phi).is_err());
    let z = Subspace::zero(3);
    assert!(restrict(&g, &z).unwrap().dim() == 0);
}
