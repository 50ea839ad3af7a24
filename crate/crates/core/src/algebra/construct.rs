//! Constructors that build new algebras from old ones.

use num_traits::Zero;

use super::{validate, HomSuperalgebra};
use crate::error::{Error, Result};
use crate::invariants::{is_alpha_invariant, is_bracket_closed, is_hom_ideal};
use crate::linalg::{Mat, Scalar, Subspace};

/// `α^s`; negative `s` requires an invertible α.
pub fn alpha_power(g: &HomSuperalgebra, s: i64) -> Result<Mat> {
    if s >= 0 {
        return g.alpha().pow(s as u32);
    }
    let inv = g.alpha().inverse().ok_or(Error::NotRegular(s))?;
    inv.pow(s.unsigned_abs() as u32)
}

fn require_valid(g: &HomSuperalgebra) -> Result<()> {
    let r = validate(g);
    if !r.is_hom_lie() {
        return Err(Error::InvalidAlgebra {
            name: g.name().to_string(),
            reason: format!("{} axiom violations", r.violations.len()),
        });
    }
    Ok(())
}

/// Block-diagonal sum with basis order (a even, b even, a odd, b odd).
/// Returns the embeddings of `a` and `b` as subspaces of the sum.
pub fn direct_sum(a: &HomSuperalgebra, b: &HomSuperalgebra) -> Result<(HomSuperalgebra, Subspace, Subspace)> {
    require_valid(a)?;
    require_valid(b)?;
    let (a0, a1, b0, b1) = (a.dim_even(), a.dim_odd(), b.dim_even(), b.dim_odd());
    let de = a0 + b0;
    let n = de + a1 + b1;
    let map_a = |i: usize| if i < a0 { i } else { de + (i - a0) };
    let map_b = |i: usize| if i < b0 { a0 + i } else { de + a1 + (i - b0) };

    let mut tensor = vec![Scalar::zero(); n * n * n];
    let mut alpha = Mat::zeros(n, n);
    for (src, map) in [(a, &map_a as &dyn Fn(usize) -> usize), (b, &map_b)] {
        let m = src.dim();
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    let c = src.c(i, j, k);
                    if !c.is_zero() {
                        tensor[(map(i) * n + map(j)) * n + map(k)] = c.clone();
                    }
                }
                alpha.set(map(i), map(j), src.alpha().get(i, j).clone());
            }
        }
    }
    let name = format!("{}+{}", a.name(), b.name());
    let g = HomSuperalgebra::new(name, de, a1 + b1, tensor, alpha)?;
    let ea = Subspace::coordinate(n, (0..a.dim()).map(map_a));
    let eb = Subspace::coordinate(n, (0..b.dim()).map(map_b));
    Ok((g, ea, eb))
}

/// Expresses the algebra in a new basis. Row `a` of `basis` is the new basis
/// vector `f_a` in old coordinates; rows must be homogeneous, even rows first.
pub fn change_basis(g: &HomSuperalgebra, basis: &Mat) -> Result<HomSuperalgebra> {
    let n = g.dim();
    if basis.rows() != n || basis.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "change of basis",
            expected: n,
            found: basis.rows(),
        });
    }
    let pt = basis.transpose();
    let to_new = pt
        .inverse()
        .ok_or_else(|| Error::NotEndomorphism("change of basis is singular".into()))?;
    let span = Subspace::row_space(basis);
    let dim_even = span.even_dim(g.dim_even());
    if dim_even != g.dim_even() || !span.is_graded(g.dim_even()) {
        return Err(Error::NotGraded);
    }
    for a in 0..n {
        let v = basis.row(a);
        let homogeneous = if a < dim_even {
            v[g.dim_even()..].iter().all(Zero::is_zero)
        } else {
            v[..g.dim_even()].iter().all(Zero::is_zero)
        };
        if !homogeneous {
            return Err(Error::NotGraded);
        }
    }
    let mut tensor = vec![Scalar::zero(); n * n * n];
    for a in 0..n {
        for b in 0..n {
            let w = to_new.apply(&g.bracket(basis.row(a), basis.row(b)));
            tensor[(a * n + b) * n..(a * n + b + 1) * n].clone_from_slice(&w);
        }
    }
    let alpha = &(&to_new * g.alpha()) * &pt;
    HomSuperalgebra::new(g.name(), g.dim_even(), g.dim_odd(), tensor, alpha)
}

/// `g / I` on the complement spanned by the non-pivot coordinates of `I`.
pub fn quotient(g: &HomSuperalgebra, ideal: &Subspace) -> Result<HomSuperalgebra> {
    check_ambient(g, ideal)?;
    if !ideal.is_graded(g.dim_even()) {
        return Err(Error::NotGraded);
    }
    if !is_alpha_invariant(g, ideal) {
        return Err(Error::NotAlphaInvariant);
    }
    if !is_hom_ideal(g, ideal) {
        return Err(Error::NotHomIdeal);
    }
    let n = g.dim();
    let mut is_pivot = vec![false; n];
    for &p in ideal.pivots() {
        is_pivot[p] = true;
    }
    let keep: Vec<usize> = (0..n).filter(|&c| !is_pivot[c]).collect();
    let m = keep.len();
    let dim_even = keep.iter().filter(|&&c| c < g.dim_even()).count();
    let project = |v: &[Scalar]| -> Vec<Scalar> {
        let r = ideal.reduce(v);
        keep.iter().map(|&c| r[c].clone()).collect()
    };
    let mut tensor = vec![Scalar::zero(); m * m * m];
    for (a, &ia) in keep.iter().enumerate() {
        for (b, &ib) in keep.iter().enumerate() {
            let w = project(g.bracket_basis(ia, ib));
            tensor[(a * m + b) * m..(a * m + b + 1) * m].clone_from_slice(&w);
        }
    }
    let alpha_cols: Vec<Vec<Scalar>> = keep.iter().map(|&c| project(&g.alpha().column(c))).collect();
    let alpha = Mat::from_fn(m, m, |r, c| alpha_cols[c][r].clone());
    HomSuperalgebra::new(format!("{}/I", g.name()), dim_even, m - dim_even, tensor, alpha)
}

/// The induced structure on a hom-subalgebra, in the RREF basis of `sub`.
pub fn restrict(g: &HomSuperalgebra, sub: &Subspace) -> Result<HomSuperalgebra> {
    check_ambient(g, sub)?;
    if !sub.is_graded(g.dim_even()) {
        return Err(Error::NotGraded);
    }
    if !is_alpha_invariant(g, sub) {
        return Err(Error::NotAlphaInvariant);
    }
    if !is_bracket_closed(g, sub) {
        return Err(Error::NotBracketClosed);
    }
    let m = sub.dim();
    let dim_even = sub.even_dim(g.dim_even());
    let basis: Vec<&[Scalar]> = sub.vectors().collect();
    let coords = |v: &[Scalar]| sub.coordinates(v).expect("closed subspace");
    let mut tensor = vec![Scalar::zero(); m * m * m];
    for a in 0..m {
        for b in 0..m {
            let w = coords(&g.bracket(basis[a], basis[b]));
            tensor[(a * m + b) * m..(a * m + b + 1) * m].clone_from_slice(&w);
        }
    }
    let alpha_cols: Vec<Vec<Scalar>> = basis.iter().map(|v| coords(&g.alpha().apply(v))).collect();
    let alpha = Mat::from_fn(m, m, |r, c| alpha_cols[c][r].clone());
    HomSuperalgebra::new(format!("{}|I", g.name()), dim_even, m - dim_even, tensor, alpha)
}

/// Twists a hom-Lie superalgebra with α = id by an even endomorphism `phi`:
/// the new bracket is `phi([x, y])` and the new α is `phi`.
pub fn twist(g: &HomSuperalgebra, phi: &Mat) -> Result<HomSuperalgebra> {
    if !g.alpha().is_identity() {
        return Err(Error::AlphaNotIdentity);
    }
    let n = g.dim();
    if phi.rows() != n || phi.cols() != n {
        return Err(Error::DimensionMismatch {
            context: "twisting map",
            expected: n,
            found: phi.rows(),
        });
    }
    for r in 0..n {
        for c in 0..n {
            if g.parity(r) != g.parity(c) && !phi.get(r, c).is_zero() {
                return Err(Error::NotEndomorphism(format!("entry ({r}, {c}) is not even")));
            }
        }
    }
    let images: Vec<Vec<Scalar>> = (0..n).map(|i| phi.column(i)).collect();
    let mut tensor = vec![Scalar::zero(); n * n * n];
    for i in 0..n {
        for j in 0..n {
            let lhs = phi.apply(g.bracket_basis(i, j));
            if lhs != g.bracket(&images[i], &images[j]) {
                return Err(Error::NotEndomorphism(format!(
                    "phi[e_{i}, e_{j}] != [phi e_{i}, phi e_{j}]"
                )));
            }
            tensor[(i * n + j) * n..(i * n + j + 1) * n].clone_from_slice(&lhs);
        }
    }
    HomSuperalgebra::new(format!("{}~", g.name()), g.dim_even(), g.dim_odd(), tensor, phi.clone())
}

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
