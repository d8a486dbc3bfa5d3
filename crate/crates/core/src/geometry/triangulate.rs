//! Triangulation of the boundary of a full-dimensional lattice hull.

use super::hull::simplicial_hull;
use super::polytope::Polytope;
use crate::error::{Error, Result};
use crate::lattice::{LatticeSet, Point};

/// Boundary simplices, each given by its `k` vertices. Every facet is
/// triangulated by pulling from its smallest vertex.
pub fn triangulate_boundary(a: &LatticeSet) -> Result<Vec<Vec<Point>>> {
    let hull = Polytope::convex_hull(a)?;
    if !hull.is_full_dimensional() {
        return Err(Error::LowerDimensional(hull.affine_dim()));
    }
    let verts = hull.integer_vertices().expect("lattice hull has integer vertices");
    let k = hull.dim();
    let mut out = Vec::new();
    for facet in hull.facets() {
        let fv: Vec<&Point> = facet.vertices.iter().map(|&i| &verts[i]).collect();
        if k == 1 {
            out.push(vec![fv[0].clone()]);
            continue;
        }
        let drop = facet.normal.iter().position(|&c| c != 0).expect("nonzero normal");
        let projected: Vec<Vec<i64>> = fv
            .iter()
            .map(|p| p.coords().iter().enumerate().filter(|&(c, _)| c != drop).map(|(_, &x)| x).collect())
            .collect();
        for sub in simplicial_hull(&projected)? {
            if sub.vertices.contains(&0) {
                continue;
            }
            let mut simplex: Vec<Point> = std::iter::once(0)
                .chain(sub.vertices.iter().copied())
                .map(|i| fv[i].clone())
                .collect();
            simplex.sort();
            out.push(simplex);
        }
    }
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_edge_counts() {
        let square = LatticeSet::from_arrays(&[[0, 0], [2, 0], [0, 2], [2, 2], [1, 1], [1, 0]]);
        assert_eq!(triangulate_boundary(&square).unwrap().len(), 4);
        let tri = LatticeSet::from_arrays(&[[0, 0], [3, 0], [0, 3]]);
        assert_eq!(triangulate_boundary(&tri).unwrap().len(), 3);
        let oct = LatticeSet::from_arrays(&[[1, 0], [2, 0], [3, 1], [3, 2], [2, 3], [1, 3], [0, 2], [0, 1]]);
        assert_eq!(triangulate_boundary(&oct).unwrap().len(), 8);
    }

    #[test]
    fn cube_has_twelve_triangles() {
        let mut pts = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..2 {
                    pts.push(Point::from(vec![x, y, z]));
                }
            }
        }
        let t = triangulate_boundary(&LatticeSet::new(3, pts).unwrap()).unwrap();
        assert_eq!(t.len(), 12);
        assert!(t.iter().all(|s| s.len() == 3));
    }

    #[test]
    fn flat_hull_is_rejected() {
        let seg = LatticeSet::from_arrays(&[[0, 0], [1, 1]]);
        assert!(matches!(triangulate_boundary(&seg), Err(Error::LowerDimensional(1))));
    }
}
