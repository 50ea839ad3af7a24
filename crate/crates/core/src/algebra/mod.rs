//! The hom-Lie superalgebra data model.
//!
//! An algebra of dimension `n = dim_even + dim_odd` is stored by its full
//! structure-constant tensor `c[i][j][k]`, with `[e_i, e_j] = Σ_k c[i][j][k] e_k`,
//! and the matrix of the twisting map α acting on column vectors. Basis
//! indices below `dim_even` are even, the rest odd.

mod catalog;
mod construct;
mod validate;

pub use catalog::{catalog, CATALOG_NAMES};
pub use construct::{alpha_power, change_basis, direct_sum, quotient, restrict, twist};
pub(crate) use validate::first_multiplicativity_failure;
pub use validate::{
    is_multiplicative, is_multiplicative_with, validate, validate_with, Property, ValidationReport, Violation,
};

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{sign, Mat, Scalar, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn from_bit(b: u8) -> Self {
        if b.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^{|a||b|}`.
    pub fn sign_with(self, other: Parity) -> Scalar {
        sign(self.bit() * other.bit())
    }
}

impl std::ops::Add for Parity {
    type Output = Parity;

    fn add(self, other: Parity) -> Parity {
        Parity::from_bit(self.bit() + other.bit())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

/// Parity of a possibly inhomogeneous element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementParity {
    Even,
    Odd,
    Mixed,
}

/// A coordinate vector together with its parity. The zero vector counts as even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Element {
    coords: Vec<Scalar>,
    parity: ElementParity,
}

impl Element {
    pub fn new(coords: Vec<Scalar>, dim_even: usize) -> Self {
        let even_zero = coords[..dim_even.min(coords.len())].iter().all(Zero::is_zero);
        let odd_zero = coords.iter().skip(dim_even).all(Zero::is_zero);
        let parity = match (even_zero, odd_zero) {
            (_, true) => ElementParity::Even,
            (true, false) => ElementParity::Odd,
            (false, false) => ElementParity::Mixed,
        };
        Self { coords, parity }
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn parity(&self) -> ElementParity {
        self.parity
    }

    pub fn homogeneous_parity(&self) -> Option<Parity> {
        match self.parity {
            ElementParity::Even => Some(Parity::Even),
            ElementParity::Odd => Some(Parity::Odd),
            ElementParity::Mixed => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomSuperalgebra {
    name: String,
    dim_even: usize,
    dim_odd: usize,
    /// `c[i][j][k]` at `(i * n + j) * n + k`.
    bracket: Vec<Scalar>,
    alpha: Mat,
}

impl HomSuperalgebra {
    /// Builds an algebra from the full tensor. Only shapes are checked here;
    /// the axioms are checked by [`validate`].
    pub fn new(
        name: impl Into<String>,
        dim_even: usize,
        dim_odd: usize,
        bracket: Vec<Scalar>,
        alpha: Mat,
    ) -> Result<Self> {
        let n = dim_even + dim_odd;
        if bracket.len() != n * n * n {
            return Err(Error::DimensionMismatch {
                context: "structure-constant tensor",
                expected: n * n * n,
                found: bracket.len(),
            });
        }
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "α matrix",
                expected: n,
                found: if alpha.rows() != n { alpha.rows() } else { alpha.cols() },
            });
        }
        Ok(Self {
            name: name.into(),
            dim_even,
            dim_odd,
            bracket,
            alpha,
        })
    }

    /// Builds an algebra from brackets `[e_i, e_j]` supplied for `i <= j`,
    /// completing `i > j` by supersymmetry.
    pub fn from_upper<I>(name: impl Into<String>, dim_even: usize, dim_odd: usize, upper: I, alpha: Mat) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, Vec<(usize, Scalar)>)>,
    {
        let n = dim_even + dim_odd;
        let mut bracket = vec![Scalar::zero(); n * n * n];
        for (i, j, coeffs) in upper {
            for idx in [i, j] {
                if idx >= n {
                    return Err(Error::IndexOutOfRange {
                        context: "bracket record",
                        index: idx,
                        n,
                    });
                }
            }
            if i > j {
                return Err(Error::LowerTriangleRecord(i, j));
            }
            let s = -parity_of(i, dim_even).sign_with(parity_of(j, dim_even));
            for (k, v) in coeffs {
                if k >= n {
                    return Err(Error::IndexOutOfRange {
                        context: "bracket coefficient",
                        index: k,
                        n,
                    });
                }
                if i != j {
                    bracket[(j * n + i) * n + k] = &s * &v;
                }
                bracket[(i * n + j) * n + k] = v;
            }
        }
        Self::new(name, dim_even, dim_odd, bracket, alpha)
    }

    /// The abelian algebra of the given graded dimensions with α = identity.
    pub fn abelian(dim_even: usize, dim_odd: usize) -> Self {
        let n = dim_even + dim_odd;
        Self {
            name: format!("abelian({dim_even},{dim_odd})"),
            dim_even,
            dim_odd,
            bracket: vec![Scalar::zero(); n * n * n],
            alpha: Mat::identity(n),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn with_alpha(mut self, alpha: Mat) -> Result<Self> {
        let n = self.dim();
        if alpha.rows() != n || alpha.cols() != n {
            return Err(Error::DimensionMismatch {
                context: "α matrix",
                expected: n,
                found: alpha.rows(),
            });
        }
        self.alpha = alpha;
        Ok(self)
    }

    pub fn dim_even(&self) -> usize {
        self.dim_even
    }

    pub fn dim_odd(&self) -> usize {
        self.dim_odd
    }

    pub fn dim(&self) -> usize {
        self.dim_even + self.dim_odd
    }

    pub fn parity(&self, i: usize) -> Parity {
        parity_of(i, self.dim_even)
    }

    pub fn alpha(&self) -> &Mat {
        &self.alpha
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Scalar {
        let n = self.dim();
        &self.bracket[(i * n + j) * n + k]
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket_basis(&self, i: usize, j: usize) -> &[Scalar] {
        let n = self.dim();
        &self.bracket[(i * n + j) * n..(i * n + j + 1) * n]
    }

    pub fn tensor(&self) -> &[Scalar] {
        &self.bracket
    }

    #[cfg(test)]
    pub(crate) fn tensor_mut(&mut self) -> &mut [Scalar] {
        &mut self.bracket
    }

    /// Bilinear bracket of coordinate vectors.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::zero(); n];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let coeff = xa * yb;
                for (o, c) in out.iter_mut().zip(self.bracket_basis(a, b)) {
                    if !c.is_zero() {
                        *o += &coeff * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `y ↦ [x, y]`; column `j` holds `[x, e_j]`.
    pub fn ad(&self, x: &[Scalar]) -> Mat {
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for j in 0..n {
                for (k, c) in self.bracket_basis(a, j).iter().enumerate() {
                    if !c.is_zero() {
                        let v = m.get(k, j) + xa * c;
                        m.set(k, j, v);
                    }
                }
            }
        }
        m
    }

    pub fn ad_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |k, j| self.c(i, j, k).clone())
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit(self.dim(), i)
    }

    pub fn is_abelian_bracket(&self) -> bool {
        self.bracket.iter().all(Zero::is_zero)
    }

    /// The even part `g_0` as a coordinate subspace.
    pub fn even_subspace(&self) -> Subspace {
        Subspace::coordinate(self.dim(), 0..self.dim_even)
    }

    pub fn odd_subspace(&self) -> Subspace {
        Subspace::coordinate(self.dim(), self.dim_even..self.dim())
    }

    pub fn element(&self, coords: Vec<Scalar>) -> Element {
        Element::new(coords, self.dim_even)
    }
}

pub(crate) fn parity_of(i: usize, dim_even: usize) -> Parity {
    if i < dim_even {
        Parity::Even
    } else {
        Parity::Odd
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = crate::linalg::one();
    v
}

/// Bracket of two elements; the result is flagged mixed when applicable.
pub fn bracket_eval(g: &HomSuperalgebra, x: &Element, y: &Element) -> Result<Element> {
    for e in [x, y] {
        if e.coords().len() != g.dim() {
            return Err(Error::DimensionMismatch {
                context: "element coordinates",
                expected: g.dim(),
                found: e.coords().len(),
            });
        }
    }
    Ok(g.element(g.bracket(x.coords(), y.coords())))
}
