//! Exact polytopes given as convex hulls of rational points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use super::exact::{det, integer_nullspace};
use super::hull::{affine_basis, fiber_extremes, simplicial_hull, Facet};
use crate::error::{Error, Result};
use crate::lattice::sublattice::Echelon;
use crate::lattice::{LatticeSet, Point};
use crate::rational::{ceil_i64, floor_i64};

/// `normal · x <= offset`, or `<` when `strict`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfSpace {
    pub normal: Vec<i64>,
    pub offset: BigRational,
    pub strict: bool,
}

impl HalfSpace {
    pub fn contains(&self, x: &[BigRational]) -> bool {
        let lhs: BigRational =
            self.normal.iter().zip(x).map(|(&a, b)| b * BigRational::from_integer(a.into())).sum();
        if self.strict {
            lhs < self.offset
        } else {
            lhs <= self.offset
        }
    }

    fn contains_int(&self, p: &[i64]) -> bool {
        let lhs: BigInt = self.normal.iter().zip(p).map(|(&a, &b)| BigInt::from(a) * b).sum();
        let lhs = &lhs * self.offset.denom();
        if self.strict {
            lhs < *self.offset.numer()
        } else {
            lhs <= *self.offset.numer()
        }
    }
}

/// A merged facet: primitive outward normal and the polytope vertices on it.
#[derive(Clone, Debug)]
pub(crate) struct MergedFacet {
    pub normal: Vec<i128>,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Polytope {
    dim: usize,
    affine_dim: usize,
    vertices: Vec<Vec<BigRational>>,
    halfspaces: Vec<HalfSpace>,
    /// `normal · x = value` constraints cutting out the affine hull.
    equalities: Vec<(Vec<i64>, BigRational)>,
    facets: Vec<MergedFacet>,
    volume: BigRational,
}

fn to_i64(x: i128, what: &'static str) -> Result<i64> {
    i64::try_from(x).map_err(|_| Error::Overflow(what))
}

fn big_to_i64(x: &BigInt, what: &'static str) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow(what))
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Columns on which the difference vectors have full rank.
pub(crate) fn injective_coordinates(diffs: &[Vec<i128>], d: usize) -> Result<Vec<usize>> {
    let r = diffs.len();
    let mut ech = Echelon::new(r);
    let mut cols = Vec::with_capacity(r);
    for c in 0..d {
        if ech.insert(diffs.iter().map(|row| row[c]).collect())? {
            cols.push(c);
            if cols.len() == r {
                break;
            }
        }
    }
    Ok(cols)
}

struct FullHull {
    vertices: Vec<usize>,
    facets: Vec<(Vec<i128>, i128, Vec<usize>)>,
    scaled_volume: BigInt,
}

/// Hull of full-dimensional integer points; vertex and facet indices refer to `points`.
fn full_hull(points: &[Vec<i64>]) -> Result<FullHull> {
    let d = points[0].len();
    let simplicial = simplicial_hull(points)?;
    let apex = &points[affine_basis(points)?[0]];
    let mut scaled_volume = BigInt::zero();
    for f in &simplicial {
        let rows: Vec<Vec<i128>> = f
            .vertices
            .iter()
            .map(|&v| points[v].iter().zip(apex).map(|(&a, &b)| a as i128 - b as i128).collect())
            .collect();
        scaled_volume += det(&rows).abs();
    }
    let mut keyed: Vec<(Vec<i128>, i128)> =
        simplicial.iter().map(|f| (f.normal.clone(), f.offset)).collect();
    keyed.sort();
    keyed.dedup();
    let merged: Vec<Facet> = keyed
        .into_iter()
        .map(|(normal, offset)| Facet { vertices: Vec::new(), normal, offset })
        .collect();
    let mut on: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for (i, p) in points.iter().enumerate() {
        for (j, f) in merged.iter().enumerate() {
            if f.on(p)? {
                on[i].push(j);
            }
        }
    }
    let mut vertices = Vec::new();
    for (i, facets) in on.iter().enumerate() {
        let mut ech = Echelon::new(d);
        for &j in facets {
            ech.insert(merged[j].normal.clone())?;
        }
        if ech.rank() == d {
            vertices.push(i);
        }
    }
    let facets = merged
        .into_iter()
        .enumerate()
        .map(|(j, f)| {
            let vs = vertices.iter().copied().filter(|&i| on[i].contains(&j)).collect();
            (f.normal, f.offset, vs)
        })
        .collect();
    Ok(FullHull { vertices, facets, scaled_volume })
}

impl Polytope {
    /// Convex hull of a lattice set.
    pub fn convex_hull(set: &LatticeSet) -> Result<Polytope> {
        set.require_nonempty()?;
        let pts: Vec<Vec<i64>> = set.iter().map(|p| p.coords().to_vec()).collect();
        Self::hull_of_scaled(set.dim(), pts, BigInt::one())
    }

    /// Convex hull of rational points.
    pub fn from_vertices(dim: usize, points: &[Vec<BigRational>]) -> Result<Polytope> {
        if points.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(p) = points.iter().find(|p| p.len() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: p.len() });
        }
        let scale = points
            .iter()
            .flatten()
            .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let mut pts = Vec::with_capacity(points.len());
        for p in points {
            let row: Result<Vec<i64>> = p
                .iter()
                .map(|x| big_to_i64(&(x * BigRational::from_integer(scale.clone())).to_integer(), "scaled vertex"))
                .collect();
            pts.push(row?);
        }
        pts.sort();
        pts.dedup();
        Self::hull_of_scaled(dim, pts, scale)
    }

    fn hull_of_scaled(dim: usize, pts: Vec<Vec<i64>>, scale: BigInt) -> Result<Polytope> {
        if dim == 0 {
            return Err(Error::InvalidDimension(0, "polytope"));
        }
        let keep = fiber_extremes(&pts);
        let pts: Vec<Vec<i64>> = keep.into_iter().map(|i| pts[i].clone()).collect();
        let basis = affine_basis(&pts)?;
        let r = basis.len() - 1;
        let s = BigRational::from_integer(scale.clone());
        let unscale = |v: &[i64]| -> Vec<BigRational> {
            v.iter().map(|&x| BigRational::from_integer(x.into()) / &s).collect()
        };
        let p0 = pts[basis[0]].clone();
        let diffs: Vec<Vec<i128>> = basis[1..]
            .iter()
            .map(|&i| pts[i].iter().zip(&p0).map(|(&a, &b)| a as i128 - b as i128).collect())
            .collect();
        let equalities: Vec<(Vec<i64>, BigRational)> = if r == dim {
            Vec::new()
        } else {
            let mut eqs = Vec::new();
            for n in integer_nullspace(&diffs, dim) {
                let normal: Vec<i64> =
                    n.iter().map(|x| big_to_i64(x, "equality normal")).collect::<Result<_>>()?;
                let value: BigInt = normal.iter().zip(&p0).map(|(&a, &b)| BigInt::from(a) * b).sum();
                eqs.push((normal, BigRational::new(value, scale.clone())));
            }
            eqs
        };
        if r == 0 {
            return Ok(Polytope {
                dim,
                affine_dim: 0,
                vertices: vec![unscale(&p0)],
                halfspaces: Vec::new(),
                equalities,
                facets: Vec::new(),
                volume: BigRational::zero(),
            });
        }
        let cols = if r == dim { (0..dim).collect() } else { injective_coordinates(&diffs, dim)? };
        let projected: Vec<Vec<i64>> =
            pts.iter().map(|p| cols.iter().map(|&c| p[c]).collect()).collect();
        let hull = full_hull(&projected)?;
        let lift = |n: &[i128]| -> Result<Vec<i64>> {
            let mut full = vec![0i64; dim];
            for (&c, &x) in cols.iter().zip(n) {
                full[c] = to_i64(x, "facet normal")?;
            }
            Ok(full)
        };
        let mut halfspaces = Vec::with_capacity(hull.facets.len());
        let mut facets = Vec::with_capacity(hull.facets.len());
        let mut order: Vec<usize> = hull.vertices.clone();
        order.sort_by(|&a, &b| pts[a].cmp(&pts[b]));
        let position = |i: usize| order.iter().position(|&v| v == i).unwrap();
        for (normal, offset, vs) in &hull.facets {
            halfspaces.push(HalfSpace {
                normal: lift(normal)?,
                offset: BigRational::new((*offset).into(), scale.clone()),
                strict: false,
            });
            let mut idx: Vec<usize> = vs.iter().map(|&v| position(v)).collect();
            idx.sort_unstable();
            facets.push(MergedFacet {
                normal: lift(normal)?.into_iter().map(i128::from).collect(),
                vertices: idx,
            });
        }
        let volume = if r == dim {
            BigRational::new(hull.scaled_volume, factorial(dim) * scale.pow(dim as u32))
        } else {
            BigRational::zero()
        };
        Ok(Polytope {
            dim,
            affine_dim: r,
            vertices: order.iter().map(|&i| unscale(&pts[i])).collect(),
            halfspaces,
            equalities,
            facets,
            volume,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Dimension of the affine hull; less than `dim` for flat polytopes.
    pub fn affine_dim(&self) -> usize {
        self.affine_dim
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.affine_dim == self.dim
    }

    pub fn vertices(&self) -> &[Vec<BigRational>] {
        &self.vertices
    }

    pub fn halfspaces(&self) -> &[HalfSpace] {
        &self.halfspaces
    }

    pub fn equalities(&self) -> &[(Vec<i64>, BigRational)] {
        &self.equalities
    }

    pub(crate) fn facets(&self) -> &[MergedFacet] {
        &self.facets
    }

    /// Lebesgue volume in the ambient dimension (zero for flat polytopes).
    pub fn volume(&self) -> &BigRational {
        &self.volume
    }

    pub fn is_simplex(&self) -> bool {
        self.vertices.len() == self.affine_dim + 1
    }

    /// Integer vertex coordinates, if all vertices are lattice points.
    pub fn integer_vertices(&self) -> Option<Vec<Point>> {
        self.vertices
            .iter()
            .map(|v| {
                v.iter()
                    .map(|x| if x.is_integer() { x.to_integer().to_i64() } else { None })
                    .collect::<Option<Vec<i64>>>()
                    .map(Point::from)
            })
            .collect()
    }

    /// The relative interior: all facet inequalities made strict.
    pub fn interior(&self) -> Polytope {
        self.with_strict(true)
    }

    pub fn with_strict(&self, strict: bool) -> Polytope {
        let mut p = self.clone();
        p.halfspaces.iter_mut().for_each(|h| h.strict = strict);
        p
    }

    pub fn scaled(&self, factor: &BigRational) -> Result<Polytope> {
        if !factor.is_positive() {
            return Err(Error::InvalidParameter("scale factor must be positive".into()));
        }
        let pts: Vec<Vec<BigRational>> =
            self.vertices.iter().map(|v| v.iter().map(|x| x * factor).collect()).collect();
        let mut p = Polytope::from_vertices(self.dim, &pts)?;
        for (h, old) in p.halfspaces.iter_mut().zip(&self.halfspaces) {
            h.strict = old.strict;
        }
        Ok(p)
    }

    pub fn translated(&self, t: &[BigRational]) -> Result<Polytope> {
        let pts: Vec<Vec<BigRational>> =
            self.vertices.iter().map(|v| v.iter().zip(t).map(|(a, b)| a + b).collect()).collect();
        Polytope::from_vertices(self.dim, &pts)
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        self.equalities.iter().all(|(n, v)| {
            let lhs: BigRational =
                n.iter().zip(x).map(|(&a, b)| b * BigRational::from_integer(a.into())).sum();
            lhs == *v
        }) && self.halfspaces.iter().all(|h| h.contains(x))
    }

    pub fn contains_lattice_point(&self, p: &[i64]) -> bool {
        self.equalities.iter().all(|(n, v)| {
            let lhs: BigInt = n.iter().zip(p).map(|(&a, &b)| BigInt::from(a) * b).sum();
            lhs * v.denom() == *v.numer()
        }) && self.halfspaces.iter().all(|h| h.contains_int(p))
    }

    pub fn contains_polytope(&self, other: &Polytope) -> bool {
        other.vertices.iter().all(|v| self.contains_point(v))
    }

    /// Integer bounding box `[lo, hi]` of the vertices.
    pub fn integer_bounds(&self) -> Result<(Vec<i64>, Vec<i64>)> {
        let mut lo = Vec::with_capacity(self.dim);
        let mut hi = Vec::with_capacity(self.dim);
        for c in 0..self.dim {
            let min = self.vertices.iter().map(|v| &v[c]).min().unwrap();
            let max = self.vertices.iter().map(|v| &v[c]).max().unwrap();
            lo.push(ceil_i64(min)?);
            hi.push(floor_i64(max)?);
        }
        Ok((lo, hi))
    }

    /// All lattice points of the polytope, respecting strict inequalities.
    pub fn lattice_points(&self) -> Result<LatticeSet> {
        let (lo, hi) = self.integer_bounds()?;
        if lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Ok(LatticeSet::empty(self.dim));
        }
        // i128 copies of the constraints, scaled to a common denominator
        let fast: Option<Vec<(Vec<i128>, i128, bool)>> = self
            .halfspaces
            .iter()
            .map(|h| {
                let den = h.offset.denom().to_i128()?;
                let num = h.offset.numer().to_i128()?;
                let normal = h.normal.iter().map(|&a| (a as i128).checked_mul(den)).collect::<Option<Vec<_>>>()?;
                Some((normal, num, h.strict))
            })
            .chain(self.equalities.iter().flat_map(|(n, v)| {
                let eq = (|| {
                    let den = v.denom().to_i128()?;
                    let num = v.numer().to_i128()?;
                    let normal = n.iter().map(|&a| (a as i128).checked_mul(den)).collect::<Option<Vec<_>>>()?;
                    Some((normal, num))
                })();
                match eq {
                    Some((normal, num)) => {
                        let neg: Vec<i128> = normal.iter().map(|x| -x).collect();
                        vec![Some((normal, num, false)), Some((neg, -num, false))]
                    }
                    None => vec![None],
                }
            }))
            .collect();
        let member = |p: &[i64]| -> bool {
            if let Some(fast) = &fast {
                let mut verdict = Some(true);
                for (normal, num, strict) in fast {
                    let mut acc: Option<i128> = Some(0);
                    for (&a, &x) in normal.iter().zip(p) {
                        acc = acc.and_then(|s| a.checked_mul(x as i128).and_then(|t| s.checked_add(t)));
                    }
                    match acc {
                        None => {
                            verdict = None;
                            break;
                        }
                        Some(v) if (*strict && v >= *num) || (!*strict && v > *num) => {
                            verdict = Some(false);
                            break;
                        }
                        Some(_) => {}
                    }
                }
                if let Some(v) = verdict {
                    return v;
                }
            }
            self.contains_lattice_point(p)
        };
        let mut out = Vec::new();
        let mut cur = lo.clone();
        // the last coordinate varies fastest, so the output is sorted
        loop {
            if member(&cur) {
                out.push(Point::from(cur.clone()));
            }
            let mut c = self.dim;
            loop {
                if c == 0 {
                    return Ok(LatticeSet::from_sorted(self.dim, out));
                }
                c -= 1;
                if cur[c] < hi[c] {
                    cur[c] += 1;
                    break;
                }
                cur[c] = lo[c];
            }
        }
    }

    pub fn to_json(&self) -> Result<Value> {
        let enc = |x: &BigRational| -> Result<Value> {
            Ok(json!([big_to_i64(x.numer(), "json numerator")?, big_to_i64(x.denom(), "json denominator")?]))
        };
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|v| v.iter().map(enc).collect::<Result<Vec<_>>>().map(Value::from))
            .collect::<Result<_>>()?;
        Ok(json!({ "dim": self.dim, "vertices": vertices }))
    }

    pub fn from_json(value: &Value) -> Result<Polytope> {
        let bad = |msg: &str| Error::Parse { line: 0, msg: msg.to_string() };
        let dim = value.get("dim").and_then(Value::as_u64).ok_or_else(|| bad("missing dim"))? as usize;
        let verts = value.get("vertices").and_then(Value::as_array).ok_or_else(|| bad("missing vertices"))?;
        let mut pts = Vec::with_capacity(verts.len());
        for v in verts {
            let coords = v.as_array().ok_or_else(|| bad("vertex must be an array"))?;
            let mut row = Vec::with_capacity(coords.len());
            for c in coords {
                let x = match c {
                    Value::Number(n) => n.as_i64().map(|n| BigRational::from_integer(n.into())),
                    Value::Array(pair) if pair.len() == 2 => {
                        match (pair[0].as_i64(), pair[1].as_i64()) {
                            (Some(p), Some(q)) if q != 0 => Some(BigRational::new(p.into(), q.into())),
                            _ => None,
                        }
                    }
                    _ => None,
                };
                row.push(x.ok_or_else(|| bad("coordinate must be an integer or [num, den]"))?);
            }
            pts.push(row);
        }
        Polytope::from_vertices(dim, &pts)
    }
}
