use num_traits::{One, Zero};

use super::mat::{rref, Echelon, Mat};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A subspace of `Q^ambient_dim`, stored by its canonical RREF basis.
///
/// Equality is structural: two values are equal iff they describe the same
/// subspace.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Mat,
    pivots: Vec<usize>,
}

/// The result of comparing two subspaces of a common ambient space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubspaceRelation {
    pub sum: Subspace,
    pub intersection: Subspace,
    pub equal: bool,
    /// `b ⊆ a`.
    pub contains: bool,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Mat::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Mat::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the given coordinate vectors.
    pub fn span<V: AsRef<[Scalar]>>(ambient_dim: usize, vectors: impl IntoIterator<Item = V>) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            if e.is_full() {
                break;
            }
            e.insert(v.as_ref().to_vec());
        }
        Self::from_echelon(e)
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        Self::span(
            ambient_dim,
            indices.into_iter().map(|i| {
                let mut v = vec![Scalar::zero(); ambient_dim];
                v[i] = Scalar::one();
                v
            }),
        )
    }

    pub fn row_space(m: &Mat) -> Self {
        let (basis, pivots) = rref(m);
        Self {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub(crate) fn from_echelon(e: Echelon) -> Self {
        let (basis, pivots) = e.into_mat();
        Self {
            ambient_dim: basis.cols(),
            basis,
            pivots,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[Scalar]> + '_ {
        self.basis.row_vecs()
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for v in self.vectors() {
            e.insert(v.to_vec());
        }
        e
    }

    /// `v` minus its component along the basis, read off at the pivots.
    /// The result is zero iff `v` lies in the subspace.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        for (row, &p) in self.vectors().zip(&self.pivots) {
            if out[p].is_zero() {
                continue;
            }
            let f = out[p].clone();
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Coordinates of `v` in the RREF basis, or `None` when `v` is outside.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains_vector(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Linear combination of the basis vectors.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        let mut out = vec![Scalar::zero(); self.ambient_dim];
        for (row, k) in self.vectors().zip(coords) {
            if k.is_zero() {
                continue;
            }
            for (x, y) in out.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x += k * y;
                }
            }
        }
        out
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(other.vectors().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let mut e = self.echelon();
        for v in other.vectors() {
            e.insert(v.to_vec());
        }
        Ok(Self::from_echelon(e))
    }

    /// Intersection via the kernel of the relation system `Σ u_i a_i = Σ w_j b_j`.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other)?;
        let (ka, kb) = (self.dim(), other.dim());
        if ka == 0 || kb == 0 {
            return Ok(Subspace::zero(self.ambient_dim));
        }
        // Column t of the system is coordinate t of the ambient space.
        let rows = (0..self.ambient_dim).map(|t| {
            let mut row = Vec::with_capacity(ka + kb);
            row.extend(self.vectors().map(|a| a[t].clone()));
            row.extend(other.vectors().map(|b| -b[t].clone()));
            row
        });
        let rel = solve_homogeneous(ka + kb, rows);
        Ok(Subspace::span(
            self.ambient_dim,
            rel.vectors().map(|sol| self.combine(&sol[..ka])).collect::<Vec<_>>(),
        ))
    }

    pub fn relation(&self, other: &Subspace) -> Result<SubspaceRelation> {
        Ok(SubspaceRelation {
            sum: self.sum(other)?,
            intersection: self.intersection(other)?,
            equal: self == other,
            contains: self.contains(other)?,
        })
    }

    /// Image of the subspace under `m` (acting on column vectors).
    pub fn image(&self, m: &Mat) -> Subspace {
        Subspace::span(m.rows(), self.vectors().map(|v| m.apply(v)).collect::<Vec<_>>())
    }

    /// True when the projections of every basis vector onto the first
    /// `split` coordinates and onto the rest both lie in the subspace.
    pub fn is_graded(&self, split: usize) -> bool {
        self.vectors().all(|v| {
            let mut even = v.to_vec();
            for x in even[split..].iter_mut() {
                *x = Scalar::zero();
            }
            self.contains_vector(&even)
        })
    }

    /// Returns the subspace unchanged after checking it is graded.
    ///
    /// Panics otherwise: every invariant subspace computed by this crate is
    /// the kernel or span of even data and must be graded.
    pub(crate) fn expect_graded(self, split: usize) -> Self {
        assert!(self.is_graded(split), "internal error: computed subspace is not graded");
        self
    }

    /// Number of basis vectors supported on the first `split` coordinates.
    /// For a graded subspace this is the dimension of its even part.
    pub fn even_dim(&self, split: usize) -> usize {
        self.pivots.iter().filter(|&&p| p < split).count()
    }
}

/// Kernel of `m`: all `v` with `m v = 0`.
pub fn kernel(m: &Mat) -> Subspace {
    solve_homogeneous(m.cols(), m.row_vecs().map(|r| r.to_vec()))
}

/// Solution space of a homogeneous system given row by row.
pub fn solve_homogeneous<I, V>(unknowns: usize, constraints: I) -> Subspace
where
    I: IntoIterator<Item = V>,
    V: AsRef<[Scalar]>,
{
    let mut e = Echelon::new(unknowns);
    for row in constraints {
        if e.is_full() {
            break;
        }
        let row = row.as_ref();
        assert_eq!(row.len(), unknowns, "constraint row length mismatch");
        if row.iter().all(Zero::is_zero) {
            continue;
        }
        e.insert(row.to_vec());
    }
    let (red, pivots) = e.into_mat();
    let mut is_pivot = vec![false; unknowns];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let free: Vec<usize> = (0..unknowns).filter(|&c| !is_pivot[c]).collect();
    let vectors = free.iter().map(|&f| {
        let mut v = vec![Scalar::zero(); unknowns];
        v[f] = Scalar::one();
        for (r, &p) in pivots.iter().enumerate() {
            v[p] = -red.get(r, f).clone();
        }
        v
    });
    Subspace::span(unknowns, vectors.collect::<Vec<_>>())
}
