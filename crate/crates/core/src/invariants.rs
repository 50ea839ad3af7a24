//! Centers, centralizers, the derived subalgebra, ideal predicates and the
//! Killing form.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{alpha_power, HomSuperalgebra};
use crate::derivations::der_space;
use crate::error::{Error, Result};
use crate::io::{ser_mat, ser_scalar};
use crate::linalg::{solve_homogeneous, supertrace, Mat, Scalar, Subspace};

fn check_ambient(g: &HomSuperalgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != g.dim() {
        return Err(Error::DimensionMismatch {
            context: "subspace of the algebra",
            expected: g.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

/// Solutions `x` of `[x, b] = 0` for every `b` in `targets`.
fn annihilator<'a>(g: &HomSuperalgebra, targets: impl Iterator<Item = &'a [Scalar]>) -> Subspace {
    let n = g.dim();
    let mut rows = Vec::new();
    for b in targets {
        // column i of this block is [e_i, b]
        let cols: Vec<Vec<Scalar>> = (0..n).map(|i| g.bracket(&g.basis_vector(i), b)).collect();
        rows.extend((0..n).map(|k| cols.iter().map(|c| c[k].clone()).collect::<Vec<_>>()));
    }
    solve_homogeneous(n, rows)
}

/// `C(g)`: all `x` with `[x, g] = 0`.
pub fn center(g: &HomSuperalgebra) -> Subspace {
    centralizer(g, &Subspace::full(g.dim())).expect("same ambient dimension")
}

/// `C_g(I)`: all `x` with `[x, I] = 0`.
pub fn centralizer(g: &HomSuperalgebra, ideal: &Subspace) -> Result<Subspace> {
    check_ambient(g, ideal)?;
    let c = annihilator(g, ideal.vectors());
    Ok(if ideal.is_graded(g.dim_even()) {
        c.expect_graded(g.dim_even())
    } else {
        c
    })
}

/// `[g, g]`: the span of all basis brackets.
pub fn derived_subalgebra(g: &HomSuperalgebra) -> Subspace {
    let n = g.dim();
    let gens: Vec<&[Scalar]> = (0..n)
        .flat_map(|i| (i..n).map(move |j| (i, j)))
        .map(|(i, j)| g.bracket_basis(i, j))
        .collect();
    Subspace::span(n, gens).expect_graded(g.dim_even())
}

pub fn is_alpha_invariant(g: &HomSuperalgebra, s: &Subspace) -> bool {
    s.vectors().all(|v| s.contains_vector(&g.alpha().apply(v)))
}

pub fn is_bracket_closed(g: &HomSuperalgebra, s: &Subspace) -> bool {
    let vs: Vec<&[Scalar]> = s.vectors().collect();
    vs.iter()
        .enumerate()
        .all(|(a, x)| vs[a..].iter().all(|y| s.contains_vector(&g.bracket(x, y))))
}

/// `α(S) ⊆ S` and `[S, S] ⊆ S`.
pub fn is_hom_subalgebra(g: &HomSuperalgebra, s: &Subspace) -> bool {
    s.ambient_dim() == g.dim() && is_alpha_invariant(g, s) && is_bracket_closed(g, s)
}

/// A hom-subalgebra with `[S, g] ⊆ S`.
pub fn is_hom_ideal(g: &HomSuperalgebra, s: &Subspace) -> bool {
    is_hom_subalgebra(g, s)
        && s.vectors()
            .all(|x| (0..g.dim()).all(|j| s.contains_vector(&g.bracket(x, &g.basis_vector(j)))))
}

/// `[S, S] = 0`.
pub fn is_abelian(g: &HomSuperalgebra, s: &Subspace) -> bool {
    let vs: Vec<&[Scalar]> = s.vectors().collect();
    vs.iter()
        .enumerate()
        .all(|(a, x)| vs[a..].iter().all(|y| g.bracket(x, y).iter().all(Zero::is_zero)))
}

/// `D(S) ⊆ S` for every `D` in `Der_{α^{s+1}}(g)`.
pub fn is_characteristic_ideal(g: &HomSuperalgebra, sub: &Subspace, s: u32) -> Result<bool> {
    check_ambient(g, sub)?;
    let der = der_space(g, s + 1)?;
    let stable = der
        .even_basis
        .iter()
        .chain(&der.odd_basis)
        .all(|d| sub.vectors().all(|b| sub.contains_vector(&d.apply(b))));
    if stable && sub.is_graded(g.dim_even()) && is_alpha_invariant(g, sub) {
        debug_assert!(is_hom_ideal(g, sub));
    }
    Ok(stable)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KillingForm {
    pub s: u32,
    #[serde(serialize_with = "ser_mat")]
    pub gram: Mat,
    pub nondegenerate: bool,
    #[serde(serialize_with = "ser_scalar")]
    pub determinant: Scalar,
}

impl KillingForm {
    /// The Gram block on the even basis vectors.
    pub fn even_block(&self, dim_even: usize) -> Mat {
        Mat::from_fn(dim_even, dim_even, |i, j| self.gram.get(i, j).clone())
    }
}

/// `κ_s(e_i, e_j) = str(ad_s(e_i) ∘ ad_s(e_j))` with `ad_s(x) = [x, α^s(·)]`.
pub fn killing_form(g: &HomSuperalgebra, s: u32) -> KillingForm {
    let n = g.dim();
    let a = alpha_power(g, i64::from(s)).expect("non-negative power");
    let ads: Vec<Mat> = (0..n).map(|i| &g.ad_basis(i) * &a).collect();
    let mut gram = Mat::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            let st = supertrace(&(&ads[i] * &ads[j]), g.dim_even()).expect("square");
            gram.set(i, j, st);
        }
    }
    let determinant = gram.det().expect("square");
    KillingForm {
        s,
        nondegenerate: !determinant.is_zero(),
        gram,
        determinant,
    }
}
