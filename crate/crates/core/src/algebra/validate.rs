use num_traits::Zero;
use serde::Serialize;

use super::HomSuperalgebra;
use crate::exec::Exec;
use crate::linalg::{kernel, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    /// A structure constant lands on a basis vector of the wrong parity.
    Grading,
    /// α maps a basis vector into the wrong parity.
    AlphaGrading,
    Supersymmetry,
    HomJacobi,
    Multiplicativity,
    Regularity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub property: Property,
    /// Basis indices: `(i, j, k)` for tensor entries and triples, `(i, j)`
    /// for pairs, `(row, col)` for α entries, the support of a kernel vector
    /// for regularity.
    pub witness: Vec<usize>,
    /// Coordinate of the residual vector that is reported, when there is one.
    pub component: Option<usize>,
    #[serde(serialize_with = "crate::io::ser_scalar")]
    pub residual: Scalar,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub grading_ok: bool,
    pub supersymmetry_ok: bool,
    pub hom_jacobi_ok: bool,
    pub multiplicative: bool,
    pub regular: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// Grading, supersymmetry and hom-Jacobi all hold.
    pub fn is_hom_lie(&self) -> bool {
        self.grading_ok && self.supersymmetry_ok && self.hom_jacobi_ok
    }

    pub fn is_multiplicative_hom_lie(&self) -> bool {
        self.is_hom_lie() && self.multiplicative
    }

    pub fn first(&self, property: Property) -> Option<&Violation> {
        self.violations.iter().find(|v| v.property == property)
    }
}

pub fn validate(g: &HomSuperalgebra) -> ValidationReport {
    validate_with(g, Exec::default())
}

/// Checks every axiom on basis elements and records a witness per failure.
pub fn validate_with(g: &HomSuperalgebra, exec: Exec) -> ValidationReport {
    let n = g.dim();
    let mut violations = Vec::new();

    for i in 0..n {
        for j in 0..n {
            let target = g.parity(i) + g.parity(j);
            for k in 0..n {
                if g.parity(k) != target && !g.c(i, j, k).is_zero() {
                    violations.push(Violation {
                        property: Property::Grading,
                        witness: vec![i, j, k],
                        component: None,
                        residual: g.c(i, j, k).clone(),
                    });
                }
            }
        }
    }
    for r in 0..n {
        for c in 0..n {
            if g.parity(r) != g.parity(c) && !g.alpha().get(r, c).is_zero() {
                violations.push(Violation {
                    property: Property::AlphaGrading,
                    witness: vec![r, c],
                    component: None,
                    residual: g.alpha().get(r, c).clone(),
                });
            }
        }
    }
    let grading_ok = violations.is_empty();

    for i in 0..n {
        for j in 0..n {
            let s = g.parity(i).sign_with(g.parity(j));
            for k in 0..n {
                let residual = g.c(i, j, k) + &s * g.c(j, i, k);
                if !residual.is_zero() {
                    violations.push(Violation {
                        property: Property::Supersymmetry,
                        witness: vec![i, j, k],
                        component: None,
                        residual,
                    });
                }
            }
        }
    }
    let supersymmetry_ok = !violations.iter().any(|v| v.property == Property::Supersymmetry);

    let twisted = twisted_brackets(g, exec);
    let alpha_on = |i: usize, w: &[Scalar]| -> Vec<Scalar> {
        // [α(e_i), w] = Σ_m w_m [α(e_i), e_m]
        let mut out = vec![Scalar::zero(); n];
        for (m, wm) in w.iter().enumerate() {
            if wm.is_zero() {
                continue;
            }
            for (o, t) in out.iter_mut().zip(&twisted[i * n + m]) {
                if !t.is_zero() {
                    *o += wm * t;
                }
            }
        }
        out
    };

    let jacobi: Vec<Vec<Violation>> = exec.map(n, |i| {
        let mut found = Vec::new();
        for j in 0..n {
            for k in 0..n {
                let (pi, pj, pk) = (g.parity(i), g.parity(j), g.parity(k));
                let t1 = alpha_on(i, g.bracket_basis(j, k));
                let t2 = alpha_on(j, g.bracket_basis(k, i));
                let t3 = alpha_on(k, g.bracket_basis(i, j));
                let (s1, s2, s3) = (pi.sign_with(pk), pj.sign_with(pi), pk.sign_with(pj));
                for t in 0..n {
                    let r = &s1 * &t1[t] + &s2 * &t2[t] + &s3 * &t3[t];
                    if !r.is_zero() {
                        found.push(Violation {
                            property: Property::HomJacobi,
                            witness: vec![i, j, k],
                            component: Some(t),
                            residual: r,
                        });
                        break;
                    }
                }
            }
        }
        found
    });
    let jacobi: Vec<Violation> = jacobi.into_iter().flatten().collect();
    let hom_jacobi_ok = jacobi.is_empty();
    violations.extend(jacobi);

    let mult = multiplicativity_violations(g, &twisted, exec);
    let multiplicative = mult.is_empty();
    violations.extend(mult);

    let ker = kernel(g.alpha());
    let regular = ker.is_zero();
    if let Some(v) = ker.vectors().next() {
        violations.push(Violation {
            property: Property::Regularity,
            witness: (0..n).filter(|&i| !v[i].is_zero()).collect(),
            component: None,
            residual: Scalar::zero(),
        });
    }

    ValidationReport {
        grading_ok,
        supersymmetry_ok,
        hom_jacobi_ok,
        multiplicative,
        regular,
        violations,
    }
}

/// `[α(e_i), e_m]` for all `i, m`, at index `i * n + m`.
fn twisted_brackets(g: &HomSuperalgebra, exec: Exec) -> Vec<Vec<Scalar>> {
    let n = g.dim();
    exec.map(n * n, |idx| {
        let (i, m) = (idx / n, idx % n);
        let mut out = vec![Scalar::zero(); n];
        for r in 0..n {
            let a = g.alpha().get(r, i);
            if a.is_zero() {
                continue;
            }
            for (o, c) in out.iter_mut().zip(g.bracket_basis(r, m)) {
                if !c.is_zero() {
                    *o += a * c;
                }
            }
        }
        out
    })
}

fn multiplicativity_violations(g: &HomSuperalgebra, twisted: &[Vec<Scalar>], exec: Exec) -> Vec<Violation> {
    let n = g.dim();
    let found: Vec<Option<Violation>> = exec.map(n * n, |idx| {
        let (i, j) = (idx / n, idx % n);
        let lhs = g.alpha().apply(g.bracket_basis(i, j));
        // [α e_i, α e_j] = Σ_m α[m][j] [α e_i, e_m]
        let mut rhs = vec![Scalar::zero(); n];
        for m in 0..n {
            let a = g.alpha().get(m, j);
            if a.is_zero() {
                continue;
            }
            for (o, t) in rhs.iter_mut().zip(&twisted[i * n + m]) {
                if !t.is_zero() {
                    *o += a * t;
                }
            }
        }
        (0..n).find(|&t| lhs[t] != rhs[t]).map(|t| Violation {
            property: Property::Multiplicativity,
            witness: vec![i, j],
            component: Some(t),
            residual: &lhs[t] - &rhs[t],
        })
    });
    found.into_iter().flatten().collect()
}

pub fn is_multiplicative(g: &HomSuperalgebra) -> bool {
    is_multiplicative_with(g, Exec::default())
}

pub fn is_multiplicative_with(g: &HomSuperalgebra, exec: Exec) -> bool {
    first_multiplicativity_failure(g, exec).is_none()
}

pub(crate) fn first_multiplicativity_failure(g: &HomSuperalgebra, exec: Exec) -> Option<(usize, usize)> {
    let twisted = twisted_brackets(g, exec);
    multiplicativity_violations(g, &twisted, exec)
        .first()
        .map(|v| (v.witness[0], v.witness[1]))
}
