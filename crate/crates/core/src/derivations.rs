//! α^s-derivations, the fixed space of α, inner derivations and the
//! supercommutator.
//!
//! A linear map `D` of degree `d` is an α^s-derivation when `D∘α = α∘D` and
//! `D[x, y] = [Dx, α^s y] + (−1)^{d|x|} [α^s x, Dy]` for homogeneous `x`.
//! Matrices act on column vectors and are flattened row-major when viewed as
//! points of the `n²`-dimensional matrix space.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{alpha_power, first_multiplicativity_failure, HomSuperalgebra, Parity};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::linalg::{kernel, sign, solve_homogeneous, Mat, Scalar, Subspace};

/// `Der_{α^s}(g)` split by degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivationSpace {
    pub s: u32,
    pub even_basis: Vec<Mat>,
    pub odd_basis: Vec<Mat>,
    pub as_subspace: Subspace,
    even: Subspace,
    odd: Subspace,
    dim_even: usize,
}

impl DerivationSpace {
    pub fn dims(&self) -> (usize, usize) {
        (self.even_basis.len(), self.odd_basis.len())
    }

    pub fn dim(&self) -> usize {
        self.even_basis.len() + self.odd_basis.len()
    }

    /// Basis matrices paired with their degree, even ones first.
    pub fn basis(&self) -> impl Iterator<Item = (&Mat, Parity)> + '_ {
        self.even_basis
            .iter()
            .map(|m| (m, Parity::Even))
            .chain(self.odd_basis.iter().map(|m| (m, Parity::Odd)))
    }

    pub fn contains(&self, m: &Mat) -> bool {
        self.as_subspace.contains_vector(m.as_flat())
    }

    /// Coordinates of `m` in [`basis`](Self::basis) order.
    pub fn coordinates(&self, m: &Mat) -> Option<Vec<Scalar>> {
        let n = m.rows();
        let (even_part, odd_part) = split_by_degree(m.as_flat(), n, self.dim_even);
        let mut c = self.even.coordinates(&even_part)?;
        c.extend(self.odd.coordinates(&odd_part)?);
        Some(c)
    }

    /// The matrix with the given coordinates in [`basis`](Self::basis) order.
    pub fn combine(&self, coords: &[Scalar]) -> Mat {
        let (ce, co) = coords.split_at(self.even_basis.len());
        let mut flat = self.even.combine(ce);
        for (x, y) in flat.iter_mut().zip(self.odd.combine(co)) {
            *x += y;
        }
        let n = self.as_subspace.ambient_dim().isqrt();
        Mat::from_flat(n, n, flat).expect("square matrix space")
    }
}

/// Splits a flattened matrix into its parity-preserving and parity-swapping parts.
fn split_by_degree(flat: &[Scalar], n: usize, dim_even: usize) -> (Vec<Scalar>, Vec<Scalar>) {
    let mut even = flat.to_vec();
    let mut odd = flat.to_vec();
    for r in 0..n {
        for c in 0..n {
            let same = (r < dim_even) == (c < dim_even);
            let slot = if same { &mut odd } else { &mut even };
            slot[r * n + c] = Scalar::zero();
        }
    }
    (even, odd)
}

fn matrix_of(n: usize, flat: &[Scalar]) -> Mat {
    Mat::from_flat(n, n, flat.to_vec()).expect("square matrix space")
}

fn require_multiplicative(g: &HomSuperalgebra, exec: Exec) -> Result<()> {
    match first_multiplicativity_failure(g, exec) {
        Some((i, j)) => Err(Error::NotMultiplicative { i, j }),
        None => Ok(()),
    }
}

/// Degree-`d` solutions over the allowed matrix positions.
fn solve_degree(g: &HomSuperalgebra, a: &Mat, d: Parity, exec: Exec) -> Subspace {
    let n = g.dim();
    let mut slot = vec![None; n * n];
    let mut positions = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if g.parity(r) == g.parity(c) + d {
                slot[r * n + c] = Some(positions.len());
                positions.push((r, c));
            }
        }
    }
    let m = positions.len();
    let alpha = g.alpha();

    // [e_r, α^s e_j] and [α^s e_i, e_r]
    let twisted: Vec<Vec<Scalar>> = (0..n).map(|j| a.column(j)).collect();
    let right: Vec<Vec<Vec<Scalar>>> = exec.map(n, |r| {
        (0..n).map(|j| g.bracket(&g.basis_vector(r), &twisted[j])).collect()
    });
    let left: Vec<Vec<Vec<Scalar>>> = exec.map(n, |i| {
        (0..n).map(|r| g.bracket(&twisted[i], &g.basis_vector(r))).collect()
    });

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    // D α − α D = 0
    for r in 0..n {
        for c in 0..n {
            let mut row = vec![Scalar::zero(); m];
            for k in 0..n {
                if let Some(u) = slot[r * n + k] {
                    row[u] += alpha.get(k, c);
                }
                if let Some(u) = slot[k * n + c] {
                    row[u] -= alpha.get(r, k);
                }
            }
            rows.push(row);
        }
    }
    let leibniz: Vec<Vec<Vec<Scalar>>> = exec.map(n * n, |ij| {
        let (i, j) = (ij / n, ij % n);
        let sg = sign(d.bit() * g.parity(i).bit());
        (0..n)
            .map(|t| {
                let mut row = vec![Scalar::zero(); m];
                for k in 0..n {
                    let c = g.c(i, j, k);
                    if let (false, Some(u)) = (c.is_zero(), slot[t * n + k]) {
                        row[u] += c;
                    }
                }
                for r in 0..n {
                    if let Some(u) = slot[r * n + i] {
                        row[u] -= &right[r][j][t];
                    }
                    if let Some(u) = slot[r * n + j] {
                        row[u] -= &sg * &left[i][r][t];
                    }
                }
                row
            })
            .collect()
    });
    rows.extend(leibniz.into_iter().flatten());

    let sol = solve_homogeneous(m, rows);
    let flats: Vec<Vec<Scalar>> = sol
        .vectors()
        .map(|v| {
            let mut flat = vec![Scalar::zero(); n * n];
            for (u, &(r, c)) in positions.iter().enumerate() {
                flat[r * n + c] = v[u].clone();
            }
            flat
        })
        .collect();
    Subspace::span(n * n, flats)
}

/// `Der_{α^s}(g)`.
pub fn der_space(g: &HomSuperalgebra, s: u32) -> Result<DerivationSpace> {
    der_space_with(g, s, Exec::default())
}

pub fn der_space_with(g: &HomSuperalgebra, s: u32, exec: Exec) -> Result<DerivationSpace> {
    require_multiplicative(g, exec)?;
    let n = g.dim();
    let a = alpha_power(g, i64::from(s))?;
    let even = solve_degree(g, &a, Parity::Even, exec);
    let odd = solve_degree(g, &a, Parity::Odd, exec);
    let as_subspace = even.sum(&odd)?;
    Ok(DerivationSpace {
        s,
        even_basis: even.vectors().map(|v| matrix_of(n, v)).collect(),
        odd_basis: odd.vectors().map(|v| matrix_of(n, v)).collect(),
        as_subspace,
        even,
        odd,
        dim_even: g.dim_even(),
    })
}

/// `Fix(α) = ker(α − id)`.
pub fn fix_alpha(g: &HomSuperalgebra) -> Subspace {
    kernel(&(g.alpha() - &Mat::identity(g.dim()))).expect_graded(g.dim_even())
}

/// `ad_s(x) = [x, α^s(·)]`.
pub fn ad_s(g: &HomSuperalgebra, x: &[Scalar], s: u32) -> Mat {
    let a = alpha_power(g, i64::from(s)).expect("non-negative power");
    &g.ad(x) * &a
}

/// The span of `ad_s(x)` over a basis of `Fix(α)`; these are α^{s+1}-derivations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InnerSpace {
    pub s: u32,
    pub generators: Vec<Mat>,
    pub as_subspace: Subspace,
}

impl InnerSpace {
    pub fn dim(&self) -> usize {
        self.as_subspace.dim()
    }

    /// Dimensions of the even and odd parts.
    pub fn dims(&self, dim_even: usize) -> (usize, usize) {
        let n = self.as_subspace.ambient_dim().isqrt();
        // rows of a span of homogeneous maps are homogeneous; the pivot decides
        let even = self
            .as_subspace
            .pivots()
            .iter()
            .filter(|&&p| (p / n < dim_even) == (p % n < dim_even))
            .count();
        (even, self.dim() - even)
    }
}

pub fn inner_space(g: &HomSuperalgebra, s: u32) -> InnerSpace {
    let fix = fix_alpha(g);
    let generators: Vec<Mat> = fix.vectors().map(|x| ad_s(g, x, s)).collect();
    let n = g.dim();
    let as_subspace = Subspace::span(n * n, generators.iter().map(Mat::as_flat));
    InnerSpace {
        s,
        generators,
        as_subspace,
    }
}

/// `D∘E − (−1)^{d1 d2} E∘D`, of degree `d1 + d2`.
pub fn supercommutator(d: &Mat, d1: Parity, e: &Mat, d2: Parity) -> Result<(Mat, Parity)> {
    let de = d.try_mul(e)?;
    let ed = e.try_mul(d)?;
    Ok((&de - &ed.scale(&d1.sign_with(d2)), d1 + d2))
}

/// The first defining condition a candidate derivation breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DerivationWitness {
    /// Entry `(r, c)` maps between the wrong parity blocks for the declared degree.
    Degree { r: usize, c: usize },
    /// `(Dα − αD)[r][c] ≠ 0`.
    Commutation { r: usize, c: usize },
    /// The Leibniz rule fails on the basis pair `(e_i, e_j)`.
    Leibniz { i: usize, j: usize },
}

/// Checks whether `m` is an α^s-derivation of degree `d`.
pub fn is_derivation(g: &HomSuperalgebra, m: &Mat, d: Parity, s: u32) -> Result<(), DerivationWitness> {
    let n = g.dim();
    assert!(
        m.rows() == n && m.cols() == n,
        "derivation candidate has the wrong size"
    );
    for r in 0..n {
        for c in 0..n {
            if g.parity(r) != g.parity(c) + d && !m.get(r, c).is_zero() {
                return Err(DerivationWitness::Degree { r, c });
            }
        }
    }
    let comm = &(m * g.alpha()) - &(g.alpha() * m);
    for r in 0..n {
        for c in 0..n {
            if !comm.get(r, c).is_zero() {
                return Err(DerivationWitness::Commutation { r, c });
            }
        }
    }
    let a = alpha_power(g, i64::from(s)).expect("non-negative power");
    let imgs: Vec<Vec<Scalar>> = (0..n).map(|i| m.column(i)).collect();
    let twisted: Vec<Vec<Scalar>> = (0..n).map(|i| a.column(i)).collect();
    for i in 0..n {
        let sg = sign(d.bit() * g.parity(i).bit());
        for j in 0..n {
            let lhs = m.apply(g.bracket_basis(i, j));
            let first = g.bracket(&imgs[i], &twisted[j]);
            let second = g.bracket(&twisted[i], &imgs[j]);
            let holds = lhs
                .iter()
                .zip(first.iter().zip(&second))
                .all(|(l, (x, y))| *l == x + &sg * y);
            if !holds {
                return Err(DerivationWitness::Leibniz { i, j });
            }
        }
    }
    Ok(())
}

/// Basis vectors `e_i` whose map `[e_i, α^s(·)]` is not an α^{s+1}-derivation.
///
/// Inner derivations are only formed from `Fix(α)`; this lists what goes wrong
/// when arbitrary elements are allowed.
pub fn non_fixed_inner_failures(g: &HomSuperalgebra, s: u32) -> Vec<(usize, DerivationWitness)> {
    (0..g.dim())
        .filter_map(|i| {
            let m = ad_s(g, &g.basis_vector(i), s);
            is_derivation(g, &m, g.parity(i), s + 1).err().map(|w| (i, w))
        })
        .collect()
}
