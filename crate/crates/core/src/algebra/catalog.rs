//! Named example algebras.

use super::{construct, HomSuperalgebra};
use crate::error::{Error, Result};
use crate::linalg::{int, Mat, Scalar};

/// Fixed names accepted by [`catalog`]; `abelian(n0,n1)` is accepted too.
pub const CATALOG_NAMES: &[&str] = &[
    "sl2",
    "heisenberg3",
    "gl11",
    "remark_2_2",
    "sl2_twisted",
    "sl2_plus_sl2",
    "osp12",
];

type Record = (usize, usize, Vec<(usize, Scalar)>);

fn rec(i: usize, j: usize, coeffs: &[(usize, i64)]) -> Record {
    (i, j, coeffs.iter().map(|&(k, v)| (k, int(v))).collect())
}

fn build(name: &str, dim_even: usize, dim_odd: usize, records: Vec<Record>) -> HomSuperalgebra {
    let n = dim_even + dim_odd;
    HomSuperalgebra::from_upper(name, dim_even, dim_odd, records, Mat::identity(n))
        .expect("catalog constants are in range")
}

/// sl2 in the basis (e, f, h).
fn sl2() -> HomSuperalgebra {
    build(
        "sl2",
        3,
        0,
        vec![rec(0, 1, &[(2, 1)]), rec(0, 2, &[(0, -2)]), rec(1, 2, &[(1, 2)])],
    )
}

/// Basis (x, y, z) with [x, y] = z.
fn heisenberg3() -> HomSuperalgebra {
    build("heisenberg3", 3, 0, vec![rec(0, 1, &[(2, 1)])])
}

/// gl(1|1) in the basis (E11, E22 | E12, E21).
fn gl11() -> HomSuperalgebra {
    build(
        "gl11",
        2,
        2,
        vec![
            rec(0, 2, &[(2, 1)]),
            rec(0, 3, &[(3, -1)]),
            rec(1, 2, &[(2, -1)]),
            rec(1, 3, &[(3, 1)]),
            rec(2, 3, &[(0, 1), (1, 1)]),
        ],
    )
}

/// sl2 as the even part plus one odd direction that brackets trivially.
fn remark_2_2() -> HomSuperalgebra {
    build(
        "remark_2_2",
        3,
        1,
        vec![rec(0, 1, &[(2, 1)]), rec(0, 2, &[(0, -2)]), rec(1, 2, &[(1, 2)])],
    )
}

/// sl2 twisted by the automorphism e ↔ f, h ↦ −h.
fn sl2_twisted() -> HomSuperalgebra {
    let phi = Mat::from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, -1]]);
    construct::twist(&sl2(), &phi)
        .expect("the swap is an automorphism of sl2")
        .with_name("sl2_twisted")
}

fn sl2_plus_sl2() -> HomSuperalgebra {
    let (g, _, _) = construct::direct_sum(&sl2(), &sl2()).expect("sl2 is valid");
    g.with_name("sl2_plus_sl2")
}

/// osp(1|2) in the basis (e, f, h | x, y).
fn osp12() -> HomSuperalgebra {
    build(
        "osp12",
        3,
        2,
        vec![
            rec(0, 1, &[(2, 1)]),
            rec(0, 2, &[(0, -2)]),
            rec(1, 2, &[(1, 2)]),
            rec(2, 3, &[(3, 1)]),
            rec(2, 4, &[(4, -1)]),
            rec(0, 4, &[(3, -1)]),
            rec(1, 3, &[(4, -1)]),
            rec(3, 3, &[(0, 2)]),
            rec(4, 4, &[(1, -2)]),
            rec(3, 4, &[(2, 1)]),
        ],
    )
}

fn parse_abelian(name: &str) -> Option<(usize, usize)> {
    let inner = name.strip_prefix("abelian(")?.strip_suffix(')')?;
    let (a, b) = inner.split_once(',')?;
    Some((a.trim().parse().ok()?, b.trim().parse().ok()?))
}

/// Looks up a catalog algebra by name.
pub fn catalog(name: &str) -> Result<HomSuperalgebra> {
    Ok(match name {
        "sl2" => sl2(),
        "heisenberg3" => heisenberg3(),
        "gl11" => gl11(),
        "remark_2_2" => remark_2_2(),
        "sl2_twisted" => sl2_twisted(),
        "sl2_plus_sl2" => sl2_plus_sl2(),
        "osp12" => osp12(),
        _ => match parse_abelian(name) {
            Some((n0, n1)) => HomSuperalgebra::abelian(n0, n1),
            None => return Err(Error::UnknownCatalog(name.to_string())),
        },
    })
}
