//! Univariate polynomials over the rationals, and the splitting used to
//! build idempotents from a single linear map.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::mat::{Echelon, Mat};
use super::scalar::{denominator_lcm, Scalar};
use crate::error::{Error, Result};

/// Coefficients lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::new(vec![c])
    }

    /// `x - root`.
    pub fn linear(root: &Scalar) -> Self {
        Self::new(vec![-root.clone(), Scalar::one()])
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = Scalar::one() / l;
                Self::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Scalar::zero);
                    a + b
                })
                .collect(),
        )
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&-Scalar::one()))
    }

    pub fn scale(&self, k: &Scalar) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Scalar::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }

    pub fn pow(&self, e: usize) -> Poly {
        (0..e).fold(Poly::one(), |acc, _| acc.mul(self))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = Scalar::one() / divisor.leading().unwrap();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Poly::zero(), Poly::zero());
        };
        if nd < dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Scalar::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = &rem[k + dd] * &lead_inv;
            if q.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &q * d;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns `(g, u, v)` with `u·self + v·other = g`, `g` monic.
    pub fn xgcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(), Poly::zero());
        let (mut t0, mut t1) = (Poly::zero(), Poly::one());
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.leading().cloned() {
            None => (Poly::zero(), Poly::zero(), Poly::zero()),
            Some(l) => {
                let inv = Scalar::one() / l;
                (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
            }
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        self.coeffs.iter().rev().fold(Scalar::zero(), |acc, c| acc * x + c)
    }

    /// `p(m)` by Horner's rule.
    pub fn eval_mat(&self, m: &Mat) -> Result<Mat> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let n = m.rows();
        let id = Mat::identity(n);
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * m) + &id.scale(c);
        }
        Ok(acc)
    }

    /// All distinct rational roots, ascending.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let mut p = self.clone();
        let mut roots = Vec::new();
        if p.degree().unwrap_or(0) == 0 {
            return roots;
        }
        if p.coeffs[0].is_zero() {
            roots.push(Scalar::zero());
            while p.coeffs.first().is_some_and(Zero::is_zero) {
                p.coeffs.remove(0);
            }
        }
        if p.degree().unwrap_or(0) > 0 {
            let l = denominator_lcm(&p.coeffs);
            let ints: Vec<BigInt> = p.coeffs.iter().map(|c| c.numer() * (&l / c.denom())).collect();
            let lead = divisors(ints.last().unwrap());
            let tail = divisors(&ints[0]);
            for q in &lead {
                for num in &tail {
                    for cand in [num.clone(), -num.clone()] {
                        let r = BigRational::new(cand, q.clone());
                        if !roots.contains(&r) && p.eval(&r).is_zero() {
                            roots.push(r);
                        }
                    }
                }
            }
        }
        roots.sort();
        roots
    }

    /// Square-free decomposition `p = c · Π a_i^i` (Yun). Entry `i − 1` holds
    /// the monic `a_i`; trailing constant factors are dropped.
    pub fn square_free_parts(&self) -> Vec<Poly> {
        let f = self.monic();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.div_rem(&a).0;
        let mut c = df.div_rem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut parts = Vec::new();
        loop {
            a = b.gcd(&d);
            parts.push(a.clone());
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
        }
        while parts.last().is_some_and(|p| p.degree() == Some(0)) {
            parts.pop();
        }
        parts
    }
}

/// Positive divisors of `n` (of `1` when `n` is zero). Trial division; the
/// inputs here are clearing-denominator coefficients of desk-scale maps.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    if n.is_zero() {
        return vec![BigInt::one()];
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            let q = &n / &d;
            if q != d {
                large.push(q);
            }
            small.push(d.clone());
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            };
            let term = if i > 0 && c.is_one() {
                mono
            } else if i > 0 && (-c).is_one() {
                format!("-{mono}")
            } else {
                format!("{c}{mono}")
            };
            terms.push(term);
        }
        let joined = terms.join(" + ").replace("+ -", "- ");
        write!(f, "{joined}")
    }
}

/// One factor of a [`coprime_split`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    /// Monic factor.
    pub poly: Poly,
    pub multiplicity: usize,
    /// Set when `poly = x − root`.
    pub root: Option<Scalar>,
}

impl Factor {
    /// A factor of degree > 1 with no rational root, left unsplit.
    pub fn is_residual(&self) -> bool {
        self.root.is_none()
    }
}

/// Splits a monic polynomial into pairwise coprime monic factors: square-free
/// decomposition, then extraction of rational roots from each square-free
/// part. Whatever has no rational root is returned whole and flagged as
/// residual. The product of `poly^multiplicity` over the factors is `p`.
pub fn coprime_split(p: &Poly) -> Vec<Factor> {
    let mut rooted = Vec::new();
    let mut residual = Vec::new();
    for (i, part) in p.square_free_parts().into_iter().enumerate() {
        if part.degree().unwrap_or(0) == 0 {
            continue;
        }
        let mut rest = part;
        for r in rest.rational_roots() {
            let lin = Poly::linear(&r);
            rest = rest.div_rem(&lin).0;
            rooted.push(Factor {
                poly: lin,
                multiplicity: i + 1,
                root: Some(r),
            });
        }
        if rest.degree().unwrap_or(0) > 0 {
            residual.push(Factor {
                poly: rest.monic(),
                multiplicity: i + 1,
                root: None,
            });
        }
    }
    rooted.sort_by(|a, b| a.root.cmp(&b.root));
    residual.sort_by_key(|f| f.poly.degree());
    rooted.extend(residual);
    rooted
}

/// Monic polynomial of least degree annihilating `m`.
pub fn minimal_polynomial(m: &Mat) -> Result<Poly> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let n = m.rows();
    if n == 0 {
        return Ok(Poly::one());
    }
    // Echelon over augmented rows [vec(m^k) | e_k]: the first power whose
    // matrix part reduces to zero yields the dependency in the tag part.
    let width = n * n;
    let max_deg = n;
    let mut e = Echelon::new(width + max_deg + 1);
    let mut power = Mat::identity(n);
    for k in 0..=max_deg {
        let mut row: Vec<Scalar> = power.as_flat().to_vec();
        row.resize(width + max_deg + 1, Scalar::zero());
        row[width + k] = Scalar::one();
        e.reduce(&mut row);
        if row[..width].iter().all(Zero::is_zero) {
            let coeffs: Vec<Scalar> = row[width..width + k + 1].to_vec();
            return Ok(Poly::new(coeffs).monic());
        }
        e.insert(row);
        power = &power * m;
    }
    unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
}

/// Reconstructs `Π poly^multiplicity`.
pub fn expand_factors(factors: &[Factor]) -> Poly {
    factors
        .iter()
        .fold(Poly::one(), |acc, f| acc.mul(&f.poly.pow(f.multiplicity)))
}
