//! The holomorph `g ⊕ Der_{α^s}(g)` and the derivation algebra on its own.

use num_traits::Zero;

use crate::algebra::{validate, HomSuperalgebra, Parity, ValidationReport};
use crate::derivations::{der_space, supercommutator, DerivationSpace};
use crate::error::{Error, Result};
use crate::linalg::{Mat, Scalar, Subspace};

#[derive(Clone, Debug)]
pub struct Holomorph {
    pub base: HomSuperalgebra,
    pub s: u32,
    /// Basis order: even part of `g`, even derivations, odd part of `g`, odd derivations.
    pub algebra: HomSuperalgebra,
    pub embedding_g: Subspace,
    pub embedding_der: Subspace,
    pub der: DerivationSpace,
    /// The axioms are checked, not assumed; see [`Holomorph::is_hom_lie`].
    pub validation: ValidationReport,
}

impl Holomorph {
    pub fn is_hom_lie(&self) -> bool {
        self.validation.is_hom_lie()
    }

    /// Index of `e_i` of the base algebra inside the holomorph.
    pub fn g_index(&self, i: usize) -> usize {
        layout(&self.base, &self.der).g(i)
    }

    /// Index of the `a`-th derivation basis element inside the holomorph.
    pub fn der_index(&self, a: usize) -> usize {
        layout(&self.base, &self.der).d(a)
    }
}

#[derive(Clone, Copy)]
struct Layout {
    n0: usize,
    m0: usize,
    n1: usize,
}

impl Layout {
    fn g(self, i: usize) -> usize {
        if i < self.n0 {
            i
        } else {
            self.m0 + i
        }
    }

    fn d(self, a: usize) -> usize {
        if a < self.m0 {
            self.n0 + a
        } else {
            self.n0 + self.n1 + a
        }
    }
}

fn layout(g: &HomSuperalgebra, der: &DerivationSpace) -> Layout {
    Layout {
        n0: g.dim_even(),
        m0: der.dims().0,
        n1: g.dim_odd(),
    }
}

/// Which step of materializing the derivation algebra broke.
pub(crate) enum DerFailure {
    Closure(usize),
    Expansion(usize, usize),
}

/// Brackets of derivation basis elements and α on them, in derivation coordinates.
pub(crate) struct DerTable {
    /// `table[a][b]` = coordinates of `[D_a, D_b]`.
    pub bracket: Vec<Vec<Vec<Scalar>>>,
    /// `alpha[a]` = coordinates of `α∘D_a`.
    pub alpha: Vec<Vec<Scalar>>,
}

pub(crate) fn der_table(g: &HomSuperalgebra, der: &DerivationSpace) -> Result<DerTable, DerFailure> {
    let basis: Vec<(&Mat, Parity)> = der.basis().collect();
    let alpha = basis
        .iter()
        .enumerate()
        .map(|(a, (d, _))| der.coordinates(&(g.alpha() * *d)).ok_or(DerFailure::Closure(a)))
        .collect::<Result<Vec<_>, _>>()?;
    let mut bracket = Vec::with_capacity(basis.len());
    for (a, &(d, pa)) in basis.iter().enumerate() {
        let mut row = Vec::with_capacity(basis.len());
        for (b, &(e, pb)) in basis.iter().enumerate() {
            let (c, _) = supercommutator(d, pa, e, pb).expect("same size");
            row.push(der.coordinates(&c).ok_or(DerFailure::Expansion(a, b))?);
        }
        bracket.push(row);
    }
    Ok(DerTable { bracket, alpha })
}

/// `Der_{α^{s}}(g)` as an algebra under the supercommutator with `α_Der(D) = α∘D`.
pub fn derivation_algebra(g: &HomSuperalgebra, s: u32) -> Result<(HomSuperalgebra, DerivationSpace)> {
    let der = der_space(g, s)?;
    let table = der_table(g, &der).map_err(|f| match f {
        DerFailure::Closure(a) => Error::DerivationAlgebra(format!("α∘D_{a} is not an α^{s}-derivation")),
        DerFailure::Expansion(a, b) => Error::DerivationAlgebra(format!("[D_{a}, D_{b}] is not an α^{s}-derivation")),
    })?;
    let m = der.dim();
    let mut tensor = vec![Scalar::zero(); m * m * m];
    for a in 0..m {
        for b in 0..m {
            tensor[(a * m + b) * m..(a * m + b + 1) * m].clone_from_slice(&table.bracket[a][b]);
        }
    }
    let alpha = Mat::from_fn(m, m, |r, c| table.alpha[c][r].clone());
    let (m0, m1) = der.dims();
    let alg = HomSuperalgebra::new(format!("Der({})", g.name()), m0, m1, tensor, alpha)?;
    Ok((alg, der))
}

/// The holomorph over `Der_{α^s}(g)`.
pub fn holomorph(g: &HomSuperalgebra, s: u32) -> Result<Holomorph> {
    let der = der_space(g, s)?;
    let table = der_table(g, &der).map_err(|f| match f {
        DerFailure::Closure(a) => Error::HolomorphClosure(a),
        DerFailure::Expansion(a, b) => Error::HolomorphExpansion(a, b),
    })?;
    let n = g.dim();
    let m = der.dim();
    let lay = layout(g, &der);
    let size = n + m;
    let mut tensor = vec![Scalar::zero(); size * size * size];
    let mut put = |x: usize, y: usize, z: usize, v: &Scalar| {
        if !v.is_zero() {
            tensor[(x * size + y) * size + z] = v.clone();
        }
    };
    for i in 0..n {
        for j in 0..n {
            for (k, v) in g.bracket_basis(i, j).iter().enumerate() {
                put(lay.g(i), lay.g(j), lay.g(k), v);
            }
        }
    }
    for (a, (d, pd)) in der.basis().enumerate() {
        for j in 0..n {
            let image = d.column(j);
            let sg = -g.parity(j).sign_with(pd);
            for (k, v) in image.iter().enumerate() {
                put(lay.d(a), lay.g(j), lay.g(k), v);
                put(lay.g(j), lay.d(a), lay.g(k), &(&sg * v));
            }
        }
        for b in 0..m {
            for (c, v) in table.bracket[a][b].iter().enumerate() {
                put(lay.d(a), lay.d(b), lay.d(c), v);
            }
        }
    }
    let mut alpha = Mat::zeros(size, size);
    for r in 0..n {
        for c in 0..n {
            alpha.set(lay.g(r), lay.g(c), g.alpha().get(r, c).clone());
        }
    }
    for (a, coords) in table.alpha.iter().enumerate() {
        for (b, v) in coords.iter().enumerate() {
            alpha.set(lay.d(b), lay.d(a), v.clone());
        }
    }
    let (m0, m1) = der.dims();
    let algebra = HomSuperalgebra::new(format!("h({})", g.name()), lay.n0 + m0, lay.n1 + m1, tensor, alpha)?;
    let validation = validate(&algebra);
    Ok(Holomorph {
        base: g.clone(),
        s,
        embedding_g: Subspace::coordinate(size, (0..n).map(|i| lay.g(i))),
        embedding_der: Subspace::coordinate(size, (0..m).map(|a| lay.d(a))),
        algebra,
        der,
        validation,
    })
}
