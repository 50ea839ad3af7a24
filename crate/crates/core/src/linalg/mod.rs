//! Exact rational linear algebra.

mod mat;
mod poly;
mod scalar;
mod subspace;

pub use mat::{rref, Echelon, Mat};
pub use poly::{coprime_split, expand_factors, minimal_polynomial, Factor, Poly};
pub use scalar::{format_scalar, frac, int, one, parse_scalar, sign, zero, Scalar};
pub use subspace::{kernel, solve_homogeneous, Subspace, SubspaceRelation};

use crate::error::{Error, Result};

/// Trace of the even-even block minus trace of the odd-odd block.
pub fn supertrace(m: &Mat, even_dim: usize) -> Result<Scalar> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if even_dim > m.rows() {
        return Err(Error::DimensionMismatch {
            context: "supertrace even block",
            expected: m.rows(),
            found: even_dim,
        });
    }
    let mut acc = zero();
    for i in 0..m.rows() {
        if i < even_dim {
            acc += m.get(i, i);
        } else {
            acc -= m.get(i, i);
        }
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn supertrace_examples() {
        assert_eq!(supertrace(&Mat::identity(3), 2).unwrap(), int(1));
        let off = Mat::from_i64(&[&[0, 0, 5], &[0, 0, 1], &[2, 3, 0]]);
        assert_eq!(supertrace(&off, 2).unwrap(), int(0));
        let d = Mat::from_i64(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert_eq!(supertrace(&d, 1).unwrap(), int(-4));
        assert!(supertrace(&Mat::zeros(2, 3), 1).is_err());
        assert!(supertrace(&Mat::identity(2), 3).is_err());
    }
}
