//! Brute-force reference computations used to cross-check the library.
//!
//! Everything here works on the raw tensor and α entries with its own
//! elimination routine. Nothing from `homsuper::linalg` is used apart from
//! the `Scalar` type and the `Mat` constructors needed to build inputs.

#![allow(dead_code, clippy::needless_range_loop)]

use homsuper::algebra::{catalog, direct_sum, twist};
use homsuper::{HomSuperalgebra, Mat, Scalar};
use num_traits::{One, Zero};
use rand::Rng;

pub fn q(n: i64) -> Scalar {
    Scalar::from_integer(n.into())
}

/// Row-reduces in place and returns the pivot columns.
pub fn eliminate(rows: &mut Vec<Vec<Scalar>>, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Scalar::one() / &rows[r][c];
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..cols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(mut rows: Vec<Vec<Scalar>>, cols: usize) -> usize {
    eliminate(&mut rows, cols).len()
}

/// Basis of `{x : row · x = 0 for every row}`.
pub fn nullspace(mut rows: Vec<Vec<Scalar>>, cols: usize) -> Vec<Vec<Scalar>> {
    let pivots = eliminate(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); cols];
            v[f] = Scalar::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Plain copy of an algebra: tensor `c[i][j][k]` and `alpha[r][c]` acting on
/// column vectors.
#[derive(Clone, Debug)]
pub struct Raw {
    pub de: usize,
    pub n: usize,
    pub c: Vec<Scalar>,
    pub alpha: Vec<Vec<Scalar>>,
}

impl Raw {
    pub fn of(g: &HomSuperalgebra) -> Self {
        let n = g.dim();
        Raw {
            de: g.dim_even(),
            n,
            c: g.tensor().to_vec(),
            alpha: (0..n)
                .map(|r| (0..n).map(|c| g.alpha().get(r, c).clone()).collect())
                .collect(),
        }
    }

    pub fn par(&self, i: usize) -> usize {
        usize::from(i >= self.de)
    }

    fn sign(a: usize, b: usize) -> Scalar {
        if a * b % 2 == 1 {
            q(-1)
        } else {
            q(1)
        }
    }

    pub fn br(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.n;
        let mut out = vec![Scalar::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let w = &x[i] * &y[j];
                for k in 0..n {
                    let e = &self.c[(i * n + j) * n + k];
                    if !e.is_zero() {
                        out[k] += &w * e;
                    }
                }
            }
        }
        out
    }

    pub fn apply(m: &[Vec<Scalar>], v: &[Scalar]) -> Vec<Scalar> {
        m.iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn unit(&self, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.n];
        v[i] = Scalar::one();
        v
    }

    pub fn alpha_pow(&self, s: u32) -> Vec<Vec<Scalar>> {
        let n = self.n;
        let mut m: Vec<Vec<Scalar>> = (0..n).map(|i| self.unit(i)).collect();
        for _ in 0..s {
            m = (0..n)
                .map(|r| {
                    (0..n)
                        .map(|c| (0..n).map(|k| &self.alpha[r][k] * &m[k][c]).sum())
                        .collect()
                })
                .collect();
        }
        m
    }

    fn col(m: &[Vec<Scalar>], c: usize) -> Vec<Scalar> {
        m.iter().map(|row| row[c].clone()).collect()
    }

    pub fn grading_ok(&self) -> bool {
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if !self.c[(i * n + j) * n + k].is_zero() && (self.par(i) + self.par(j)) % 2 != self.par(k) {
                        return false;
                    }
                }
            }
            for r in 0..n {
                if !self.alpha[r][i].is_zero() && self.par(r) != self.par(i) {
                    return false;
                }
            }
        }
        true
    }

    pub fn supersymmetric(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| {
            (0..n).all(|j| {
                let s = Self::sign(self.par(i), self.par(j));
                (0..n).all(|k| self.c[(i * n + j) * n + k] == -&s * &self.c[(j * n + i) * n + k])
            })
        })
    }

    /// Signed hom-Jacobi on basis triples.
    pub fn hom_jacobi(&self) -> bool {
        let n = self.n;
        let a: Vec<Vec<Scalar>> = (0..n).map(|i| Self::col(&self.alpha, i)).collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (px, py, pz) = (self.par(x), self.par(y), self.par(z));
                    let t1 = self.br(&a[x], &self.br(&self.unit(y), &self.unit(z)));
                    let t2 = self.br(&a[y], &self.br(&self.unit(z), &self.unit(x)));
                    let t3 = self.br(&a[z], &self.br(&self.unit(x), &self.unit(y)));
                    let (s1, s2, s3) = (Self::sign(px, pz), Self::sign(py, px), Self::sign(pz, py));
                    if (0..n).any(|k| !(&s1 * &t1[k] + &s2 * &t2[k] + &s3 * &t3[k]).is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn multiplicative(&self) -> bool {
        let n = self.n;
        let a: Vec<Vec<Scalar>> = (0..n).map(|i| Self::col(&self.alpha, i)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| Self::apply(&self.alpha, &self.br(&self.unit(i), &self.unit(j))) == self.br(&a[i], &a[j]))
        })
    }

    pub fn all_axioms(&self) -> bool {
        self.grading_ok() && self.supersymmetric() && self.hom_jacobi() && self.multiplicative()
    }

    /// Linear constraints on the n² entries `D[r][c]` (flattened row-major)
    /// cutting out the α^s-derivations of parity `d`.
    fn derivation_rows(&self, s: u32, d: usize) -> Vec<Vec<Scalar>> {
        let n = self.n;
        let idx = |r: usize, c: usize| r * n + c;
        let mut rows = Vec::new();
        for r in 0..n {
            for c in 0..n {
                if self.par(r) != (self.par(c) + d) % 2 {
                    let mut row = vec![Scalar::zero(); n * n];
                    row[idx(r, c)] = Scalar::one();
                    rows.push(row);
                }
            }
        }
        // D α - α D = 0
        for r in 0..n {
            for c in 0..n {
                let mut row = vec![Scalar::zero(); n * n];
                for k in 0..n {
                    row[idx(r, k)] += &self.alpha[k][c];
                    row[idx(k, c)] -= &self.alpha[r][k];
                }
                rows.push(row);
            }
        }
        // D[e_i, e_j] - [D e_i, α^s e_j] - (-1)^{d|i|} [α^s e_i, D e_j] = 0
        let asp = self.alpha_pow(s);
        let acol: Vec<Vec<Scalar>> = (0..n).map(|i| Self::col(&asp, i)).collect();
        for i in 0..n {
            for j in 0..n {
                let bij = self.br(&self.unit(i), &self.unit(j));
                let sg = Self::sign(d, self.par(i));
                for k in 0..n {
                    let mut row = vec![Scalar::zero(); n * n];
                    for m in 0..n {
                        row[idx(k, m)] += &bij[m];
                    }
                    // [D e_i, α^s e_j]_k = Σ_m D[m][i] [e_m, α^s e_j]_k
                    for m in 0..n {
                        let b = self.br(&self.unit(m), &acol[j]);
                        row[idx(m, i)] -= &b[k];
                        let b2 = self.br(&acol[i], &self.unit(m));
                        row[idx(m, j)] -= &sg * &b2[k];
                    }
                    rows.push(row);
                }
            }
        }
        rows
    }

    /// Bases of the even and odd α^s-derivations, each as a flattened `n × n`.
    pub fn derivations(&self, s: u32) -> (Vec<Vec<Scalar>>, Vec<Vec<Scalar>>) {
        let nn = self.n * self.n;
        (
            nullspace(self.derivation_rows(s, 0), nn),
            nullspace(self.derivation_rows(s, 1), nn),
        )
    }

    pub fn der_dims(&self, s: u32) -> (usize, usize) {
        let (e, o) = self.derivations(s);
        (e.len(), o.len())
    }

    pub fn center_dim(&self) -> usize {
        let n = self.n;
        // x ↦ ([x, e_j])_j, one row per output coordinate
        let mut rows = Vec::new();
        for j in 0..n {
            for k in 0..n {
                rows.push((0..n).map(|i| self.c[(i * n + j) * n + k].clone()).collect());
            }
        }
        n - rank(rows, n)
    }

    pub fn fixed_points(&self) -> Vec<Vec<Scalar>> {
        let n = self.n;
        let rows = (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| &self.alpha[r][c] - if r == c { q(1) } else { q(0) })
                    .collect()
            })
            .collect();
        nullspace(rows, n)
    }

    /// Flattened `ad_s(x) = ad(x) α^s` for each fixed point in a basis of Fix(α).
    pub fn inner(&self, s: u32) -> Vec<Vec<Scalar>> {
        let n = self.n;
        let asp = self.alpha_pow(s);
        self.fixed_points()
            .iter()
            .map(|x| {
                let mut m = vec![Scalar::zero(); n * n];
                for c in 0..n {
                    let y = self.br(x, &Self::col(&asp, c));
                    for r in 0..n {
                        m[r * n + c] = y[r].clone();
                    }
                }
                m
            })
            .collect()
    }

    pub fn inner_dim(&self, s: u32) -> usize {
        rank(self.inner(s), self.n * self.n)
    }

    /// Trivial center and `Der_{α^{s+1}} = ad_s(Fix α)` as subspaces of gl(n).
    pub fn complete(&self, s: u32) -> bool {
        if self.center_dim() != 0 {
            return false;
        }
        let (e, o) = self.derivations(s + 1);
        let inner = self.inner(s);
        let ri = rank(inner.clone(), self.n * self.n);
        let der: Vec<_> = e.into_iter().chain(o).collect();
        let rd = der.len();
        let both = rank(der.into_iter().chain(inner).collect(), self.n * self.n);
        ri == rd && both == rd
    }
}

/// `exp(t · M)` for nilpotent `M`.
pub fn nilpotent_exp(m: &Mat, t: &Scalar) -> Mat {
    let n = m.rows();
    let tm = m.scale(t);
    let mut out = Mat::identity(n);
    let mut term = Mat::identity(n);
    for k in 1..=n {
        term = term.try_mul(&tm).unwrap().scale(&(Scalar::one() / q(k as i64)));
        if term.is_zero() {
            break;
        }
        out = add(&out, &term);
    }
    out
}

pub fn add(a: &Mat, b: &Mat) -> Mat {
    Mat::from_fn(a.rows(), a.cols(), |r, c| a.get(r, c) + b.get(r, c))
}

fn ad_nilpotent(g: &HomSuperalgebra, i: usize) -> Option<Mat> {
    let a = g.ad_basis(i);
    a.pow(g.dim() as u32).unwrap().is_zero().then_some(a)
}

fn small(rng: &mut impl Rng) -> Scalar {
    let num = rng.gen_range(-3i64..=3);
    let den = rng.gen_range(1i64..=2);
    q(num) / q(den)
}

/// A random automorphism of a Lie superalgebra with α = id: a product of
/// exponentials of nilpotent even inner derivations, or the identity for
/// algebras without any.
pub fn random_inner_automorphism(g: &HomSuperalgebra, rng: &mut impl Rng) -> Mat {
    let nil: Vec<Mat> = (0..g.dim_even()).filter_map(|i| ad_nilpotent(g, i)).collect();
    let mut m = Mat::identity(g.dim());
    if nil.is_empty() {
        return m;
    }
    for _ in 0..rng.gen_range(1..=3) {
        let a = &nil[rng.gen_range(0..nil.len())];
        m = m.try_mul(&nilpotent_exp(a, &small(rng))).unwrap();
    }
    m
}

/// Heisenberg endomorphism with `x, y` sent anywhere in span(x, y) plus a
/// multiple of `z`, and `z ↦ det · z`.
pub fn heisenberg_endomorphism(rng: &mut impl Rng) -> Mat {
    let e: Vec<Scalar> = (0..6).map(|_| small(rng)).collect();
    let det = &e[0] * &e[3] - &e[1] * &e[2];
    // columns are images of x, y, z
    Mat::from_rows(
        3,
        vec![
            vec![e[0].clone(), e[2].clone(), q(0)],
            vec![e[1].clone(), e[3].clone(), q(0)],
            vec![e[4].clone(), e[5].clone(), det],
        ],
    )
    .unwrap()
}

/// Cases for the twist generator, each an α = id base and an endomorphism.
pub fn random_twist(rng: &mut impl Rng) -> HomSuperalgebra {
    let pick = rng.gen_range(0..7);
    let (base, phi) = match pick {
        0 | 1 => {
            let g = catalog("sl2").unwrap();
            let phi = random_inner_automorphism(&g, rng);
            // occasionally compose with the Chevalley involution
            let phi = if rng.gen_bool(0.3) {
                let chev = Mat::from_i64(&[&[0, -1, 0], &[-1, 0, 0], &[0, 0, -1]]);
                phi.try_mul(&chev).unwrap()
            } else {
                phi
            };
            (g, phi)
        }
        2 => (catalog("heisenberg3").unwrap(), heisenberg_endomorphism(rng)),
        3 => {
            let g = catalog("osp12").unwrap();
            let phi = random_inner_automorphism(&g, rng);
            (g, phi)
        }
        4 => {
            let g = catalog("gl11").unwrap();
            // conjugation by diag(a, b) scales the odd pair by t and 1/t
            let t = loop {
                let t = small(rng);
                if !t.is_zero() {
                    break t;
                }
            };
            let phi = Mat::diagonal(&[q(1), q(1), t.clone(), Scalar::one() / t]);
            (g, phi)
        }
        5 => {
            let sl2 = catalog("sl2").unwrap();
            let (g, _, _) = direct_sum(&sl2, &sl2).unwrap();
            let a = random_inner_automorphism(&sl2, rng);
            let b = random_inner_automorphism(&sl2, rng);
            let mut m = Mat::zeros(6, 6);
            for r in 0..3 {
                for c in 0..3 {
                    m.set(r, c, a.get(r, c).clone());
                    m.set(r + 3, c + 3, b.get(r, c).clone());
                }
            }
            match rng.gen_range(0..3) {
                0 => (g, m),
                1 => {
                    // swap the two factors
                    let swap = Mat::from_fn(6, 6, |r, c| q(i64::from((r + 3) % 6 == c)));
                    (g, m.try_mul(&swap).unwrap())
                }
                _ => {
                    // kill the second factor
                    let p = Mat::from_fn(6, 6, |r, c| q(i64::from(r == c && r < 3)));
                    (g, m.try_mul(&p).unwrap())
                }
            }
        }
        _ => {
            let de = rng.gen_range(0..=3);
            let dodd = rng.gen_range(0..=(3 - de).min(2));
            let de = de.max(usize::from(de + dodd == 0));
            let g = HomSuperalgebra::abelian(de, dodd);
            let n = de + dodd;
            let phi = Mat::from_fn(n, n, |r, c| if (r < de) == (c < de) { small(rng) } else { q(0) });
            (g, phi)
        }
    };
    twist(&base, &phi).unwrap()
}
