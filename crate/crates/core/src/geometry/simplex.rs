//! Dyadic families of translates `2^{-i} T + t` inside a simplex `T`, and a
//! search for subfamilies covering `T`.
//!
//! Offsets are stored in barycentric coordinates: the member with offset
//! `c` (a vector with `Σ c_r = 1 - 2^{-i}`, `c >= 0`) is
//! `{ x = Σ λ_r x_r : λ >= c, Σ λ_r = 1 }`. Coverage questions are therefore
//! independent of the particular simplex.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::polytope::Polytope;
use crate::error::{Error, Result};
use crate::rational::{self, int};

pub const DEFAULT_FAMILY_CAP: usize = 4096;

#[derive(Clone, Debug)]
pub struct SimplexFamily {
    simplex: Polytope,
    level: u32,
    offsets: Vec<Vec<BigRational>>,
}

fn dyadic(level: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << level)
}

fn check_simplex(t: &Polytope) -> Result<()> {
    if t.affine_dim() == 0 {
        return Err(Error::DegenerateSimplex);
    }
    if !t.is_simplex() {
        return Err(Error::NotSimplex);
    }
    Ok(())
}

/// Barycentric offsets of `S_{i,j}` for a simplex with `m` vertices: the
/// midpoint closure of the corners after `j` rounds is the set of
/// `(1 - 2^{-i}) μ` with `μ` ranging over points of the standard simplex
/// with denominator `2^j`.
fn family_offsets(m: usize, i: u32, j: u32, cap: usize) -> Result<Vec<Vec<BigRational>>> {
    if i == 0 {
        return Ok(vec![vec![BigRational::zero(); m]]);
    }
    let parts = 1u64.checked_shl(j).filter(|&p| p <= 1 << 20).ok_or(Error::CapExceeded { cap })?;
    // C(parts + m - 1, m - 1)
    let mut count: u128 = 1;
    for t in 1..m as u128 {
        count = count * (parts as u128 + t) / t;
        if count > cap as u128 {
            return Err(Error::CapExceeded { cap });
        }
    }
    let unit = (BigRational::one() - dyadic(i)) * dyadic(j);
    let mut out = Vec::with_capacity(count as usize);
    let mut comp = vec![0u64; m];
    compositions(&mut comp, 0, parts, &mut |c| {
        out.push(c.iter().map(|&x| &unit * BigRational::from_integer(x.into())).collect());
    });
    out.sort();
    Ok(out)
}

fn compositions(comp: &mut [u64], pos: usize, left: u64, emit: &mut impl FnMut(&[u64])) {
    if pos + 1 == comp.len() {
        comp[pos] = left;
        emit(comp);
        return;
    }
    for x in 0..=left {
        comp[pos] = x;
        compositions(comp, pos + 1, left - x, emit);
    }
}

/// `S_{i,j}`: vertexward copies of `2^{-i} T`, closed `j` times under
/// pairwise midpoints.
pub fn simplex_family(t: &Polytope, i: u32, j: u32, cap: usize) -> Result<SimplexFamily> {
    check_simplex(t)?;
    let offsets = family_offsets(t.vertices().len(), i, j, cap)?;
    Ok(SimplexFamily { simplex: t.clone(), level: i, offsets })
}

impl SimplexFamily {
    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }

    pub fn barycentric_offsets(&self) -> &[Vec<BigRational>] {
        &self.offsets
    }

    /// Translation vectors `t` with member `= 2^{-i} T + t`.
    pub fn translations(&self) -> Vec<Vec<BigRational>> {
        self.offsets.iter().map(|c| self.to_point(c)).collect()
    }

    fn to_point(&self, lambda: &[BigRational]) -> Vec<BigRational> {
        let verts = self.simplex.vertices();
        (0..self.simplex.dim())
            .map(|d| lambda.iter().zip(verts).map(|(l, v)| l * &v[d]).sum())
            .collect()
    }

    pub fn members(&self) -> Result<Vec<Polytope>> {
        let s = dyadic(self.level);
        let scaled: Vec<Vec<BigRational>> =
            self.simplex.vertices().iter().map(|v| v.iter().map(|x| x * &s).collect()).collect();
        self.translations()
            .iter()
            .map(|t| {
                let pts: Vec<Vec<BigRational>> = scaled
                    .iter()
                    .map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect())
                    .collect();
                Polytope::from_vertices(self.simplex.dim(), &pts)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Covering {
    pub mu1: u32,
    pub mu2: u32,
    pub members: usize,
    /// Total volume divided by `|T|`.
    #[serde(with = "rational::serde_str")]
    pub total_volume: BigRational,
    /// `2^{μ_1 - 1}`.
    #[serde(with = "rational::serde_str")]
    pub bound: BigRational,
    #[serde(skip)]
    pub offsets: Vec<Vec<BigRational>>,
}

type Poly = Vec<Vec<BigRational>>;

/// `a · u <= b` in the first `d` barycentric coordinates.
struct Half {
    a: Vec<BigRational>,
    b: BigRational,
}

impl Half {
    fn eval(&self, u: &[BigRational]) -> BigRational {
        self.a.iter().zip(u).map(|(x, y)| x * y).sum::<BigRational>() - &self.b
    }

    fn flipped(&self) -> Half {
        Half { a: self.a.iter().map(|x| -x).collect(), b: -&self.b }
    }
}

fn member_halves(c: &[BigRational]) -> Vec<Half> {
    let d = c.len() - 1;
    let mut hs: Vec<Half> = (0..d)
        .map(|r| Half {
            a: (0..d).map(|s| if s == r { -BigRational::one() } else { BigRational::zero() }).collect(),
            b: -c[r].clone(),
        })
        .collect();
    hs.push(Half { a: vec![BigRational::one(); d], b: BigRational::one() - &c[d] });
    hs
}

/// Clips a convex polygon (or interval) to a half-space.
fn clip(poly: &Poly, h: &Half) -> Poly {
    if poly.is_empty() {
        return Vec::new();
    }
    if poly[0].len() == 1 {
        // interval [lo, hi] with a single coordinate
        let a = &h.a[0];
        let bound = &h.b / a;
        let (lo, hi) = (&poly[0][0], &poly[1][0]);
        let (lo, hi) = if a.is_positive() {
            (lo.clone(), hi.clone().min(bound))
        } else {
            (lo.clone().max(bound), hi.clone())
        };
        return if lo < hi { vec![vec![lo], vec![hi]] } else { Vec::new() };
    }
    let n = poly.len();
    let mut out = Vec::with_capacity(n + 1);
    for idx in 0..n {
        let p = &poly[idx];
        let q = &poly[(idx + 1) % n];
        let (fp, fq) = (h.eval(p), h.eval(q));
        if !fp.is_positive() {
            out.push(p.clone());
        }
        if (fp.is_positive() && fq.is_negative()) || (fp.is_negative() && fq.is_positive()) {
            let t = &fp / (&fp - &fq);
            out.push(p.iter().zip(q).map(|(a, b)| a + (b - a) * &t).collect());
        }
    }
    out.dedup();
    if out.len() > 1 && out.first() == out.last() {
        out.pop();
    }
    out
}

fn measure(poly: &Poly) -> BigRational {
    if poly.is_empty() {
        return BigRational::zero();
    }
    if poly[0].len() == 1 {
        return &poly[1][0] - &poly[0][0];
    }
    let n = poly.len();
    let twice: BigRational = (0..n)
        .map(|i| {
            let (p, q) = (&poly[i], &poly[(i + 1) % n]);
            &p[0] * &q[1] - &q[0] * &p[1]
        })
        .sum();
    rational::abs(&twice) / int(2)
}

fn intersect(poly: &Poly, halves: &[Half]) -> Poly {
    halves.iter().fold(poly.clone(), |p, h| clip(&p, h))
}

fn subtract(poly: &Poly, halves: &[Half]) -> Vec<Poly> {
    let mut pieces = Vec::new();
    let mut rest = poly.clone();
    for h in halves {
        let outside = clip(&rest, &h.flipped());
        if measure(&outside).is_positive() {
            pieces.push(outside);
        }
        rest = clip(&rest, h);
        if !measure(&rest).is_positive() {
            break;
        }
    }
    pieces
}

fn standard_region(d: usize) -> Poly {
    let mut poly = vec![vec![BigRational::zero(); d]];
    for r in 0..d {
        poly.push((0..d).map(|s| if s == r { BigRational::one() } else { BigRational::zero() }).collect());
    }
    poly
}

/// Greedy cover of the simplex by members of `S_{μ_1, μ_2}`; `None` when
/// the greedy choice stalls or exceeds `Σ |S| <= 2^{μ_1 - 1} |T|`.
///
/// Simplices of dimension 1 and 2 are supported.
pub fn covering_family_search(t: &Polytope, mu1: u32, mu2: u32, cap: usize) -> Result<Option<Covering>> {
    check_simplex(t)?;
    let d = t.affine_dim();
    if d > 2 {
        return Err(Error::Unsupported(format!("covering search in simplex dimension {d}")));
    }
    Ok(covering_in_dimension(d, mu1, mu2, cap)?)
}

pub(crate) fn covering_in_dimension(d: usize, mu1: u32, mu2: u32, cap: usize) -> Result<Option<Covering>> {
    let offsets = family_offsets(d + 1, mu1, mu2, cap)?;
    let halves: Vec<Vec<Half>> = offsets.iter().map(|c| member_halves(c)).collect();
    // members allowed by Σ|S| <= 2^{μ_1 - 1}|T|, each of relative volume 2^{-μ_1 d}
    let budget = 1usize << (mu1 as usize * (d + 1) - 1);
    let mut uncovered = vec![standard_region(d)];
    let gain = |uncovered: &[Poly], idx: usize| -> BigRational {
        uncovered.iter().map(|p| measure(&intersect(p, &halves[idx]))).sum()
    };
    // gains only shrink as the uncovered region does, so stale heap entries
    // are upper bounds
    let mut heap: BinaryHeap<(BigRational, Reverse<usize>)> =
        (0..offsets.len()).map(|i| (gain(&uncovered, i), Reverse(i))).collect();
    let mut chosen: Vec<usize> = Vec::new();
    while !uncovered.is_empty() {
        let idx = loop {
            let Some((_, Reverse(idx))) = heap.pop() else { return Ok(None) };
            let g = gain(&uncovered, idx);
            if !g.is_positive() {
                continue;
            }
            if heap.peek().map_or(true, |(top, Reverse(other))| (&g, Reverse(idx)) >= (top, Reverse(*other))) {
                break idx;
            }
            heap.push((g, Reverse(idx)));
        };
        if chosen.len() == budget {
            return Ok(None);
        }
        chosen.push(idx);
        uncovered = uncovered.iter().flat_map(|p| subtract(p, &halves[idx])).collect();
    }
    let member_volume = dyadic(mu1 * d as u32);
    let total_volume = int(chosen.len() as i64) * member_volume;
    let bound = int(2).pow(mu1 as i32 - 1);
    if total_volume > bound {
        return Ok(None);
    }
    chosen.sort_unstable();
    Ok(Some(Covering {
        mu1,
        mu2,
        members: chosen.len(),
        total_volume,
        bound,
        offsets: chosen.into_iter().map(|i| offsets[i].clone()).collect(),
    }))
}

/// The first `(μ_1, μ_2)` in lexicographic order for which the search
/// succeeds in simplex dimension `d`.
pub fn minimal_covering_levels(d: usize, max_mu1: u32, max_mu2: u32, cap: usize) -> Result<Option<Covering>> {
    if d == 0 || d > 2 {
        return Err(Error::Unsupported(format!("covering search in simplex dimension {d}")));
    }
    for mu1 in 1..=max_mu1 {
        for mu2 in 0..=max_mu2 {
            match covering_in_dimension(d, mu1, mu2, cap) {
                Ok(Some(c)) => return Ok(Some(c)),
                Ok(None) => {}
                Err(Error::CapExceeded { .. }) => break,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}
