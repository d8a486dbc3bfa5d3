//! Exact integer predicates: determinants, hyperplane normals, nullspaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `None` signals overflow.
fn bareiss_i128(mut m: Vec<Vec<i128>>) -> Option<i128> {
    let n = m.len();
    if n == 0 {
        return Some(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(swap) = (k + 1..n).find(|&i| m[i][k] != 0) else {
                return Some(0);
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[i][j].checked_mul(m[k][k])?;
                let b = m[i][k].checked_mul(m[k][j])?;
                m[i][j] = a.checked_sub(b)? / prev;
            }
        }
        prev = m[k][k];
    }
    m[n - 1][n - 1].checked_mul(sign)
}

fn bareiss_big(rows: &[Vec<i128>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m: Vec<Vec<BigInt>> =
        rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(s) => {
                    m.swap(k, s);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Determinant of a square integer matrix.
pub(crate) fn det(rows: &[Vec<i128>]) -> BigInt {
    debug_assert!(rows.iter().all(|r| r.len() == rows.len()));
    match bareiss_i128(rows.to_vec()) {
        Some(v) => BigInt::from(v),
        None => bareiss_big(rows),
    }
}

/// Primitive normal of the hyperplane through `d` points of `Z^d`.
///
/// Returns the zero vector if the points are affinely dependent.
pub(crate) fn hyperplane_normal(points: &[&[i64]]) -> Result<Vec<i128>> {
    let d = points[0].len();
    debug_assert_eq!(points.len(), d);
    if d == 1 {
        return Ok(vec![1]);
    }
    let p0 = points[0];
    let diffs: Vec<Vec<i128>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(p0).map(|(&a, &b)| a as i128 - b as i128).collect())
        .collect();
    let mut normal = Vec::with_capacity(d);
    for j in 0..d {
        let minor: Vec<Vec<i128>> = diffs
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, &x)| x).collect())
            .collect();
        let m = det(&minor);
        normal.push(if j % 2 == 0 { m } else { -m });
    }
    let g = normal.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return Ok(vec![0; d]);
    }
    normal
        .into_iter()
        .map(|x| i128::try_from(x / &g).map_err(|_| Error::Overflow("hyperplane normal")))
        .collect()
}

pub(crate) fn dot(normal: &[i128], p: &[i64]) -> Result<i128> {
    let mut acc: i128 = 0;
    for (&a, &b) in normal.iter().zip(p) {
        acc = a
            .checked_mul(b as i128)
            .and_then(|t| acc.checked_add(t))
            .ok_or(Error::Overflow("dot product"))?;
    }
    Ok(acc)
}

/// Integer basis of `{ x : M x = 0 }` for an integer matrix with `ncols` columns,
/// each vector primitive with first nonzero entry positive.
pub(crate) fn integer_nullspace(rows: &[Vec<i128>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let t = &f * &m[r][j];
                    m[i][j] -= t;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![BigRational::zero(); ncols];
        v[free] = BigRational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -m[row][free].clone();
        }
        let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let mut ints: Vec<BigInt> = v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect();
        let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        for x in ints.iter_mut() {
            *x = &*x / &g;
        }
        if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
            for x in ints.iter_mut() {
                *x = -&*x;
            }
        }
        basis.push(ints);
    }
    basis
}
