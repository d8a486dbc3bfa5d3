//! Incremental (beneath-beyond) convex hull with exact integer predicates.
//!
//! The output is a simplicial boundary complex: every facet is a list of `d`
//! input indices with an outward primitive normal. Coplanar facets are not
//! merged here; see [`super::polytope`].

use std::collections::HashMap;

use super::exact::{dot, hyperplane_normal};
use crate::error::{Error, Result};
use crate::lattice::sublattice::Echelon;

#[derive(Clone, Debug)]
pub(crate) struct Facet {
    pub vertices: Vec<usize>,
    pub normal: Vec<i128>,
    pub offset: i128,
}

impl Facet {
    pub fn above(&self, p: &[i64]) -> Result<bool> {
        Ok(dot(&self.normal, p)? > self.offset)
    }

    pub fn on(&self, p: &[i64]) -> Result<bool> {
        Ok(dot(&self.normal, p)? == self.offset)
    }
}

/// Indices of a maximal affinely independent subset, starting with index 0.
pub(crate) fn affine_basis(points: &[Vec<i64>]) -> Result<Vec<usize>> {
    let Some(p0) = points.first() else {
        return Ok(Vec::new());
    };
    let d = p0.len();
    let mut ech = Echelon::new(d);
    let mut basis = vec![0];
    for (i, p) in points.iter().enumerate().skip(1) {
        let diff: Vec<i128> = p.iter().zip(p0).map(|(&a, &b)| a as i128 - b as i128).collect();
        if ech.insert(diff)? {
            basis.push(i);
            if basis.len() == d + 1 {
                break;
            }
        }
    }
    Ok(basis)
}

/// Keeps only points that are extreme in their fiber along every axis;
/// every vertex of the hull survives.
pub(crate) fn fiber_extremes(points: &[Vec<i64>]) -> Vec<usize> {
    let n = points.len();
    let d = points.first().map_or(0, Vec::len);
    let mut keep = vec![true; n];
    for axis in 0..d {
        let mut ext: HashMap<Vec<i64>, (i64, i64)> = HashMap::new();
        for p in points {
            let mut key = p.clone();
            key[axis] = 0;
            let e = ext.entry(key).or_insert((p[axis], p[axis]));
            e.0 = e.0.min(p[axis]);
            e.1 = e.1.max(p[axis]);
        }
        for (i, p) in points.iter().enumerate() {
            let mut key = p.clone();
            key[axis] = 0;
            let (lo, hi) = ext[&key];
            if p[axis] != lo && p[axis] != hi {
                keep[i] = false;
            }
        }
    }
    (0..n).filter(|&i| keep[i]).collect()
}

fn make_facet(points: &[Vec<i64>], vertices: Vec<usize>, interior: &[i128], weight: i128) -> Result<Facet> {
    let refs: Vec<&[i64]> = vertices.iter().map(|&i| points[i].as_slice()).collect();
    let mut normal = hyperplane_normal(&refs)?;
    let mut offset = dot(&normal, &points[vertices[0]])?;
    // interior = weight * (a point strictly inside)
    let mut side: i128 = 0;
    for (a, b) in normal.iter().zip(interior) {
        side = a
            .checked_mul(*b)
            .and_then(|t| side.checked_add(t))
            .ok_or(Error::Overflow("hull orientation"))?;
    }
    let rhs = offset.checked_mul(weight).ok_or(Error::Overflow("hull orientation"))?;
    if side == rhs {
        return Err(Error::InvalidParameter("degenerate hull facet".into()));
    }
    if side > rhs {
        normal.iter_mut().for_each(|x| *x = -*x);
        offset = -offset;
    }
    Ok(Facet { vertices, normal, offset })
}

/// Simplicial boundary of the hull of full-dimensional points in `Z^d`.
pub(crate) fn simplicial_hull(points: &[Vec<i64>]) -> Result<Vec<Facet>> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptySet);
    }
    let d = points[0].len();
    let basis = affine_basis(points)?;
    if basis.len() != d + 1 {
        return Err(Error::LowerDimensional(basis.len() - 1));
    }
    if d == 1 {
        let lo = (0..n).min_by_key(|&i| points[i][0]).unwrap();
        let hi = (0..n).max_by_key(|&i| points[i][0]).unwrap();
        return Ok(vec![
            Facet { vertices: vec![lo], normal: vec![-1], offset: -(points[lo][0] as i128) },
            Facet { vertices: vec![hi], normal: vec![1], offset: points[hi][0] as i128 },
        ]);
    }
    let weight = (d + 1) as i128;
    let interior: Vec<i128> =
        (0..d).map(|c| basis.iter().map(|&i| points[i][c] as i128).sum()).collect();
    let mut facets = Vec::with_capacity(2 * n);
    for skip in 0..=d {
        let verts: Vec<usize> =
            basis.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &i)| i).collect();
        facets.push(make_facet(points, verts, &interior, weight)?);
    }
    let mut in_basis = vec![false; n];
    basis.iter().for_each(|&i| in_basis[i] = true);
    for idx in (0..n).filter(|&i| !in_basis[i]) {
        let p = &points[idx];
        let mut visible = Vec::new();
        for (f, facet) in facets.iter().enumerate() {
            if facet.above(p)? {
                visible.push(f);
            }
        }
        if visible.is_empty() {
            continue;
        }
        let mut ridges: HashMap<Vec<usize>, usize> = HashMap::new();
        for &f in &visible {
            let vs = &facets[f].vertices;
            for skip in 0..vs.len() {
                let mut ridge: Vec<usize> =
                    vs.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                ridge.sort_unstable();
                *ridges.entry(ridge).or_default() += 1;
            }
        }
        let mut horizon: Vec<Vec<usize>> =
            ridges.into_iter().filter(|(_, c)| *c == 1).map(|(r, _)| r).collect();
        horizon.sort_unstable();
        let mut is_visible = vec![false; facets.len()];
        visible.iter().for_each(|&f| is_visible[f] = true);
        let mut next: Vec<Facet> = facets
            .into_iter()
            .zip(is_visible)
            .filter(|(_, v)| !v)
            .map(|(f, _)| f)
            .collect();
        for mut ridge in horizon {
            ridge.push(idx);
            next.push(make_facet(points, ridge, &interior, weight)?);
        }
        facets = next;
    }
    Ok(facets)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn contains_all(facets: &[Facet], points: &[Vec<i64>]) -> bool {
        points.iter().all(|p| facets.iter().all(|f| !f.above(p).unwrap()))
    }

    #[test]
    fn square_with_interior_point() {
        let pts = vec![vec![0, 0], vec![2, 0], vec![0, 2], vec![2, 2], vec![1, 1], vec![1, 0]];
        let facets = simplicial_hull(&pts).unwrap();
        assert!(contains_all(&facets, &pts));
        let mut normals: Vec<Vec<i128>> = facets.iter().map(|f| f.normal.clone()).collect();
        normals.sort();
        normals.dedup();
        assert_eq!(normals, vec![vec![-1, 0], vec![0, -1], vec![0, 1], vec![1, 0]]);
    }

    #[test]
    fn cube() {
        let mut pts = Vec::new();
        for x in 0..3 {
            for y in 0..3 {
                for z in 0..3 {
                    pts.push(vec![x, y, z]);
                }
            }
        }
        let facets = simplicial_hull(&pts).unwrap();
        assert!(contains_all(&facets, &pts));
        let mut normals: Vec<Vec<i128>> = facets.iter().map(|f| f.normal.clone()).collect();
        normals.sort();
        normals.dedup();
        assert_eq!(normals.len(), 6);
    }

    #[test]
    fn lower_dimensional_is_reported() {
        let pts = vec![vec![0, 0, 0], vec![1, 1, 0], vec![2, 0, 0]];
        assert!(matches!(simplicial_hull(&pts), Err(Error::LowerDimensional(2))));
    }

    #[test]
    fn fiber_filter_keeps_corners() {
        let mut pts = Vec::new();
        for x in 0..4 {
            for y in 0..4 {
                pts.push(vec![x, y]);
            }
        }
        let keep = fiber_extremes(&pts);
        assert!(keep.contains(&0));
        assert!(!keep.iter().any(|&i| pts[i] == vec![1, 1]));
    }
}
