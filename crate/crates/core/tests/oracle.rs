mod common;

use common::{q, Raw};
use homsuper::algebra::{catalog, validate, CATALOG_NAMES};
use homsuper::completeness::is_complete;
use homsuper::derivations::{der_space, inner_space};
use homsuper::invariants::center;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn sl2_by_hand() {
    let raw = Raw::of(&catalog("sl2").unwrap());
    assert!(raw.all_axioms());
    assert_eq!(raw.center_dim(), 0);
    assert_eq!(raw.der_dims(0), (3, 0));
    assert_eq!(raw.der_dims(1), (3, 0));
    assert_eq!(raw.inner_dim(0), 3);
    assert!(raw.complete(0));
}

#[test]
fn heisenberg_by_hand() {
    let raw = Raw::of(&catalog("heisenberg3").unwrap());
    assert_eq!(raw.center_dim(), 1);
    assert_eq!(raw.der_dims(0), (6, 0));
    assert_eq!(raw.inner_dim(0), 2);
    assert!(!raw.complete(0));
}

#[test]
fn oracle_sees_broken_axioms() {
    let g = catalog("sl2").unwrap();
    let mut raw = Raw::of(&g);
    // c[0][1][2]
    raw.c[5] += q(1);
    assert!(!raw.supersymmetric());
    let mut raw = Raw::of(&g);
    raw.alpha[0][0] = q(2);
    assert!(!raw.multiplicative());
}

fn agree(g: &homsuper::HomSuperalgebra, s: u32) {
    let raw = Raw::of(g);
    let report = validate(g);
    assert_eq!(report.grading_ok, raw.grading_ok(), "{}", g.name());
    assert_eq!(report.supersymmetry_ok, raw.supersymmetric(), "{}", g.name());
    assert_eq!(report.hom_jacobi_ok, raw.hom_jacobi(), "{}", g.name());
    assert_eq!(report.multiplicative, raw.multiplicative(), "{}", g.name());
    assert_eq!(center(g).dim(), raw.center_dim(), "{}", g.name());
    if !report.is_multiplicative_hom_lie() {
        return;
    }
    for t in [s, s + 1] {
        assert_eq!(der_space(g, t).unwrap().dims(), raw.der_dims(t), "{} s={t}", g.name());
    }
    assert_eq!(inner_space(g, s).dim(), raw.inner_dim(s), "{} s={s}", g.name());
    assert_eq!(
        is_complete(g, s).unwrap().complete,
        raw.complete(s),
        "{} s={s}",
        g.name()
    );
}

#[test]
fn catalog_matches_oracle() {
    for name in CATALOG_NAMES {
        let g = catalog(name).unwrap();
        for s in 0..=2 {
            agree(&g, s);
        }
    }
}

#[test]
fn twists_match_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..40 {
        let g = common::random_twist(&mut rng);
        assert!(common::Raw::of(&g).all_axioms(), "{g:?}");
        agree(&g, rand::Rng::gen_range(&mut rng, 0..=2));
    }
}
