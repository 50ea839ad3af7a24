//! Direct-sum decomposition through rational idempotents of the centroid.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::is_complete_plain;
use crate::algebra::{restrict, HomSuperalgebra};
use crate::error::{Error, Result};
use crate::linalg::{coprime_split, minimal_polynomial, solve_homogeneous, Mat, Poly, Scalar, Subspace};

/// Even maps `φ` with `φ[x, y] = [φx, y]` and `φα = αφ`, flattened row-major.
pub fn centroid(g: &HomSuperalgebra) -> Subspace {
    let n = g.dim();
    let mut slot = vec![None; n * n];
    let mut positions = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if g.parity(r) == g.parity(c) {
                slot[r * n + c] = Some(positions.len());
                positions.push((r, c));
            }
        }
    }
    let m = positions.len();
    let alpha = g.alpha();
    let mut rows = Vec::new();
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
    for i in 0..n {
        for j in 0..n {
            for t in 0..n {
                let mut row = vec![Scalar::zero(); m];
                for k in 0..n {
                    if let Some(u) = slot[t * n + k] {
                        row[u] += g.c(i, j, k);
                    }
                    if let Some(u) = slot[k * n + i] {
                        row[u] -= g.c(k, j, t);
                    }
                }
                rows.push(row);
            }
        }
    }
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

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DecompositionKind {
    IndecomposableFactors,
    SimplyCompleteFactors,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Seed for the perturbed generic centroid elements.
    pub seed: u64,
    /// Perturbed retries after the deterministic candidates.
    pub retries: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { seed: 0, retries: 8 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub subspace: Subspace,
    /// The induced structure in the RREF basis of `subspace`.
    pub algebra: HomSuperalgebra,
    /// Set for [`DecompositionKind::SimplyCompleteFactors`].
    pub complete: Option<bool>,
}

/// An idempotent used to split, acting on `ambient` in its own basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub ambient: HomSuperalgebra,
    pub idempotent: Mat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub kind: DecompositionKind,
    /// Sorted by first pivot.
    pub summands: Vec<Summand>,
    /// A factor could not be split further because its centroid has an
    /// irreducible minimal polynomial of degree > 1 over the rationals.
    pub over_rationals_only_flag: bool,
    pub certificates: Vec<Certificate>,
}

struct Search {
    rng: ChaCha8Rng,
    retries: usize,
    residual_seen: bool,
    certificates: Vec<Certificate>,
}

/// The idempotent `(vB)(φ)` for the coprime split `p = A·B`, `uA + vB = 1`.
fn idempotent_from(phi: &Mat, p: &Poly) -> Result<Mat, bool> {
    let factors = coprime_split(p);
    if factors.len() < 2 {
        // a lone residual factor of degree > 1 is irreducibly stuck over Q
        return Err(factors.iter().any(|f| f.is_residual() && f.poly.degree() > Some(1)));
    }
    let f = &factors[0];
    let a = f.poly.pow(f.multiplicity);
    let b = p.div_rem(&a).0;
    let (gcd, _, v) = a.xgcd(&b);
    debug_assert_eq!(gcd, Poly::one());
    let e = v.mul(&b).eval_mat(phi).expect("square");
    Ok(e)
}

impl Search {
    fn candidates(&mut self, basis: &[Mat]) -> Vec<Mat> {
        let n = basis[0].rows();
        let combo = |coeffs: &[i64]| {
            basis.iter().zip(coeffs).fold(Mat::zeros(n, n), |acc, (b, &k)| {
                &acc + &b.scale(&Scalar::from_integer(k.into()))
            })
        };
        let mut out: Vec<Mat> = basis.to_vec();
        let seq: Vec<i64> = (1..=basis.len() as i64).collect();
        out.push(combo(&seq));
        for _ in 0..self.retries {
            let coeffs: Vec<i64> = seq.iter().map(|&k| k + self.rng.gen_range(-9..=9)).collect();
            out.push(combo(&coeffs));
        }
        out
    }

    /// Splits `sub` (a hom-ideal with a complementary hom-ideal) as far as the
    /// centroid allows, appending the leaves.
    fn split(&mut self, g: &HomSuperalgebra, sub: Subspace, leaves: &mut Vec<Subspace>) -> Result<()> {
        if sub.dim() <= 1 {
            leaves.push(sub);
            return Ok(());
        }
        let h = restrict(g, &sub)?;
        let m = h.dim();
        let cent = centroid(&h);
        if cent.dim() <= 1 {
            leaves.push(sub);
            return Ok(());
        }
        let basis: Vec<Mat> = cent
            .vectors()
            .map(|v| Mat::from_flat(m, m, v.to_vec()).expect("square"))
            .collect();
        let mut stuck = false;
        for phi in self.candidates(&basis) {
            let p = minimal_polynomial(&phi)?;
            let e = match idempotent_from(&phi, &p) {
                Ok(e) => e,
                Err(residual) => {
                    stuck |= residual;
                    continue;
                }
            };
            let comp = &Mat::identity(m) - &e;
            let lift = |x: &Mat| -> Subspace {
                Subspace::span(g.dim(), (0..m).map(|c| sub.combine(&x.column(c))).collect::<Vec<_>>())
            };
            let (img, ker) = (lift(&e), lift(&comp));
            if img.is_zero() || ker.is_zero() {
                continue;
            }
            self.certificates.push(Certificate {
                ambient: h.clone(),
                idempotent: e,
            });
            self.split(g, img, leaves)?;
            return self.split(g, ker, leaves);
        }
        self.residual_seen |= stuck;
        leaves.push(sub);
        Ok(())
    }
}

/// Decomposes `g` into hom-ideals reachable through rational centroid idempotents.
///
/// For [`DecompositionKind::SimplyCompleteFactors`] the algebra must be
/// complete for `s`; each summand's own completeness is then recorded.
pub fn decompose(
    g: &HomSuperalgebra,
    s: u32,
    kind: DecompositionKind,
    opts: &DecomposeOptions,
) -> Result<Decomposition> {
    if kind == DecompositionKind::SimplyCompleteFactors && !is_complete_plain(g, s)? {
        return Err(Error::NotComplete(s as usize));
    }
    let mut search = Search {
        rng: ChaCha8Rng::seed_from_u64(opts.seed),
        retries: opts.retries,
        residual_seen: false,
        certificates: Vec::new(),
    };
    let mut leaves = Vec::new();
    if g.dim() > 0 {
        search.split(g, Subspace::full(g.dim()), &mut leaves)?;
    }
    leaves.sort_by_key(|l| l.pivots().first().copied());
    let summands = leaves
        .into_iter()
        .map(|subspace| {
            let algebra = restrict(g, &subspace)?;
            let complete = match kind {
                DecompositionKind::SimplyCompleteFactors => Some(is_complete_plain(&algebra, s)?),
                DecompositionKind::IndecomposableFactors => None,
            };
            Ok(Summand {
                subspace,
                algebra,
                complete,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition {
        kind,
        summands,
        over_rationals_only_flag: search.residual_seen,
        certificates: search.certificates,
    })
}
