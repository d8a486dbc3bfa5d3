//! Affine sublattices `Λ_A = <A - a> + a` in Hermite normal form.

use super::{LatticeSet, Point};
use crate::error::{Error, Result};

fn mul_sub(row: &mut [i128], q: i128, pivot_row: &[i128]) -> Result<()> {
    for (x, &p) in row.iter_mut().zip(pivot_row) {
        *x = q
            .checked_mul(p)
            .and_then(|t| x.checked_sub(t))
            .ok_or(Error::Overflow("hermite normal form"))?;
    }
    Ok(())
}

/// Row-style Hermite normal form of the lattice spanned by `rows`.
///
/// Returns the nonzero rows (upper echelon, positive pivots, entries above
/// each pivot reduced into `[0, pivot)`) and the pivot columns.
pub(crate) fn hermite_normal_form(
    mut rows: Vec<Vec<i128>>,
    ncols: usize,
) -> Result<(Vec<Vec<i128>>, Vec<usize>)> {
    let m = rows.len();
    let mut r = 0;
    let mut pivots = Vec::new();
    for c in 0..ncols {
        if r == m {
            break;
        }
        let mut found = false;
        loop {
            let Some(p) = (r..m).filter(|&i| rows[i][c] != 0).min_by_key(|&i| rows[i][c].unsigned_abs())
            else {
                break;
            };
            found = true;
            rows.swap(r, p);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let mut cleared = true;
            for row in tail.iter_mut() {
                if row[c] != 0 {
                    let q = row[c] / pivot_row[c];
                    mul_sub(row, q, pivot_row)?;
                    cleared &= row[c] == 0;
                }
            }
            if cleared {
                break;
            }
        }
        if !found {
            continue;
        }
        if rows[r][c] < 0 {
            for x in rows[r].iter_mut() {
                *x = x.checked_neg().ok_or(Error::Overflow("hermite normal form"))?;
            }
        }
        let (head, tail) = rows.split_at_mut(r);
        let pivot_row = &tail[0];
        for row in head.iter_mut() {
            let q = row[c].div_euclid(pivot_row[c]);
            if q != 0 {
                mul_sub(row, q, pivot_row)?;
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    Ok((rows, pivots))
}

/// Incrementally maintained echelon basis of an integer row span.
#[derive(Clone, Debug, Default)]
pub(crate) struct Echelon {
    ncols: usize,
    rows: Vec<Vec<i128>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub(crate) fn new(ncols: usize) -> Self {
        Echelon { ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub(crate) fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the span; returns whether the rank grew.
    pub(crate) fn insert(&mut self, v: Vec<i128>) -> Result<bool> {
        if v.iter().all(|&x| x == 0) {
            return Ok(false);
        }
        let before = self.rank();
        let mut rows = std::mem::take(&mut self.rows);
        rows.push(v);
        let (rows, pivots) = hermite_normal_form(rows, self.ncols)?;
        self.rows = rows;
        self.pivots = pivots;
        Ok(self.rank() > before)
    }
}

/// An affine sublattice `base + span_Z(basis)` of `Z^k`, with the basis in
/// Hermite normal form and the base point reduced to the canonical
/// representative of its coset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSublattice {
    dim: usize,
    base: Point,
    basis: Vec<Vec<i64>>,
    pivots: Vec<usize>,
}

impl AffineSublattice {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn base(&self) -> &Point {
        &self.base
    }

    pub fn basis(&self) -> &[Vec<i64>] {
        &self.basis
    }

    /// Index of the lattice in `Z^k` when it has full rank.
    pub fn index(&self) -> Option<u128> {
        (self.rank() == self.dim)
            .then(|| self.pivots.iter().enumerate().map(|(i, &c)| self.basis[i][c] as u128).product())
    }

    /// Integer coefficients `c` with `p - base = Σ c_i basis_i`, if `p` lies on the lattice.
    pub fn coordinates_of(&self, p: &Point) -> Result<Option<Vec<i64>>> {
        let v = p.checked_sub(&self.base)?;
        let mut v: Vec<i128> = v.coords().iter().map(|&x| x as i128).collect();
        let mut coeffs = Vec::with_capacity(self.rank());
        let mut col = 0;
        for (row, &c) in self.basis.iter().zip(&self.pivots) {
            if v[col..c].iter().any(|&x| x != 0) {
                return Ok(None);
            }
            let piv = row[c] as i128;
            if v[c] % piv != 0 {
                return Ok(None);
            }
            let q = v[c] / piv;
            for (x, &b) in v.iter_mut().zip(row) {
                *x = q
                    .checked_mul(b as i128)
                    .and_then(|t| x.checked_sub(t))
                    .ok_or(Error::Overflow("lattice coordinates"))?;
            }
            coeffs.push(i64::try_from(q).map_err(|_| Error::Overflow("lattice coordinates"))?);
            col = c + 1;
        }
        Ok(v.iter().all(|&x| x == 0).then_some(coeffs))
    }

    pub fn contains(&self, p: &Point) -> bool {
        p.dim() == self.dim && matches!(self.coordinates_of(p), Ok(Some(_)))
    }

    fn canonical_base(p: &Point, basis: &[Vec<i64>], pivots: &[usize]) -> Result<Point> {
        let mut v: Vec<i64> = p.coords().to_vec();
        for (row, &c) in basis.iter().zip(pivots) {
            let q = v[c].div_euclid(row[c]);
            if q != 0 {
                for (x, &b) in v.iter_mut().zip(row) {
                    *x = q
                        .checked_mul(b)
                        .and_then(|t| x.checked_sub(t))
                        .ok_or(Error::Overflow("base reduction"))?;
                }
            }
        }
        Ok(Point::from(v))
    }

    /// Translate of this lattice by `t`.
    pub fn translate(&self, t: &Point) -> Result<AffineSublattice> {
        let moved = self.base.checked_add(t)?;
        Ok(AffineSublattice {
            base: Self::canonical_base(&moved, &self.basis, &self.pivots)?,
            ..self.clone()
        })
    }
}

/// The smallest affine sublattice containing `set`.
pub fn affine_sublattice(set: &LatticeSet) -> Result<AffineSublattice> {
    set.require_nonempty()?;
    let k = set.dim();
    let a0 = &set.points()[0];
    let mut ech = Echelon::new(k);
    for p in &set.points()[1..] {
        let d = p.checked_sub(a0)?;
        ech.insert(d.coords().iter().map(|&x| x as i128).collect())?;
    }
    let basis = ech
        .rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| i64::try_from(x).map_err(|_| Error::Overflow("lattice basis")))
                .collect::<Result<Vec<i64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let base = AffineSublattice::canonical_base(a0, &basis, &ech.pivots)?;
    Ok(AffineSublattice { dim: k, base, basis, pivots: ech.pivots })
}

/// Whether `Λ_A = Z^k`.
pub fn is_reduced(set: &LatticeSet) -> Result<bool> {
    Ok(affine_sublattice(set)?.index() == Some(1))
}

/// The affine map `y ↦ base + Σ (y_i + offset_i) basis_i` that sends the
/// output of [`reduce_coordinates`] back onto the input set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub lattice: AffineSublattice,
    pub offset: Vec<i64>,
}

impl AffineMap {
    pub fn apply(&self, y: &Point) -> Result<Point> {
        let l = &self.lattice;
        let mut out: Vec<i64> = l.base.coords().to_vec();
        for (i, row) in l.basis.iter().enumerate() {
            let c = y[i].checked_add(self.offset[i]).ok_or(Error::Overflow("affine map"))?;
            for (x, &b) in out.iter_mut().zip(row) {
                *x = c
                    .checked_mul(b)
                    .and_then(|t| x.checked_add(t))
                    .ok_or(Error::Overflow("affine map"))?;
            }
        }
        Ok(Point::from(out))
    }

    pub fn is_identity(&self) -> bool {
        let l = &self.lattice;
        l.rank() == l.dim()
            && l.index() == Some(1)
            && self.offset.iter().zip(l.base.coords()).all(|(o, b)| *o == -*b)
    }
}

/// Rewrites `set` in the coordinates of its own lattice `Λ_A`, translated so
/// that every coordinate has minimum zero.
///
/// The output lives in `Z^r` with `r` the affine rank of `set` (`Z^1` for a
/// singleton) and is reduced there. The map is an affine bijection, so the
/// cardinality, `|A+A|` and `|ĉo(A) \ A|` are preserved.
pub fn reduce_coordinates(set: &LatticeSet) -> Result<(LatticeSet, AffineMap)> {
    let lattice = affine_sublattice(set)?;
    let r = lattice.rank();
    if r == 0 {
        let offset = Vec::new();
        return Ok((LatticeSet::from_ints(&[0]), AffineMap { lattice, offset }));
    }
    let coords = set
        .iter()
        .map(|p| Ok(lattice.coordinates_of(p)?.expect("set lies on its own lattice")))
        .collect::<Result<Vec<Vec<i64>>>>()?;
    let offset: Vec<i64> = (0..r).map(|i| coords.iter().map(|c| c[i]).min().unwrap()).collect();
    let pts = coords
        .into_iter()
        .map(|c| Point::new(c.iter().zip(&offset).map(|(x, o)| x - o)))
        .collect::<Vec<_>>();
    Ok((LatticeSet::new(r, pts)?, AffineMap { lattice, offset }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn odd_residues_on_the_line() {
        let l = affine_sublattice(&LatticeSet::from_ints(&[1, 3, 7, 9])).unwrap();
        assert_eq!(l.base(), &Point::from([1]));
        assert_eq!(l.basis(), &[vec![2]]);
        assert!(!is_reduced(&LatticeSet::from_ints(&[1, 3, 7, 9])).unwrap());
    }

    #[test]
    fn index_four_sublattice() {
        let a = LatticeSet::from_arrays(&[[0, 0], [2, 0], [0, 2]]);
        let l = affine_sublattice(&a).unwrap();
        assert_eq!(l.base(), &Point::from([0, 0]));
        assert_eq!(l.basis(), &[vec![2, 0], vec![0, 2]]);
        assert_eq!(l.index(), Some(4));
        assert!(!is_reduced(&a).unwrap());
        assert!(is_reduced(&LatticeSet::from_arrays(&[[0, 0], [1, 0], [0, 1]])).unwrap());
    }

    #[test]
    fn singleton_has_rank_zero() {
        let l = affine_sublattice(&LatticeSet::from_arrays(&[[4, -7]])).unwrap();
        assert_eq!(l.rank(), 0);
        assert_eq!(l.base(), &Point::from([4, -7]));
    }

    #[test]
    fn empty_is_rejected() {
        assert_eq!(affine_sublattice(&LatticeSet::empty(2)), Err(Error::EmptySet));
        assert_eq!(is_reduced(&LatticeSet::empty(1)), Err(Error::EmptySet));
    }

    #[test]
    fn hnf_reduces_entries_above_pivots() {
        let (rows, pivots) =
            hermite_normal_form(vec![vec![2, 3], vec![0, 5], vec![4, 1]], 2).unwrap();
        assert_eq!(pivots, vec![0, 1]);
        // index 10 = gcd of the 2x2 minors; first column gcd 2
        assert_eq!(rows, vec![vec![2, 3], vec![0, 5]]);
    }

    #[test]
    fn reduce_coordinates_examples() {
        let (r, map) = reduce_coordinates(&LatticeSet::from_ints(&[1, 3, 7, 9])).unwrap();
        assert_eq!(r, LatticeSet::from_ints(&[0, 1, 3, 4]));
        assert_eq!(map.apply(&Point::from([4])).unwrap(), Point::from([9]));

        let (r, _) =
            reduce_coordinates(&LatticeSet::from_arrays(&[[0, 0], [2, 0], [0, 2]])).unwrap();
        assert_eq!(r, LatticeSet::from_arrays(&[[0, 0], [1, 0], [0, 1]]));

        let a = LatticeSet::from_arrays(&[[0, 0], [1, 0], [0, 1], [2, 3]]);
        let (r, map) = reduce_coordinates(&a).unwrap();
        assert_eq!(r, a);
        assert!(map.is_identity());
    }

    #[test]
    fn reduce_coordinates_of_collinear_set_drops_dimension() {
        let a = LatticeSet::from_arrays(&[[0, 0], [3, 3], [9, 9]]);
        let (r, map) = reduce_coordinates(&a).unwrap();
        assert_eq!(r, LatticeSet::from_ints(&[0, 1, 3]));
        for (p, q) in r.iter().zip(a.iter()) {
            assert_eq!(&map.apply(p).unwrap(), q);
        }
    }

    fn small_set(k: usize) -> impl Strategy<Value = LatticeSet> {
        proptest::collection::vec(proptest::collection::vec(-6i64..6, k), 1..12)
            .prop_map(move |pts| LatticeSet::new(k, pts.into_iter().map(Point::from)).unwrap())
    }

    proptest! {
        #[test]
        fn lattice_contains_its_set(a in small_set(3)) {
            let l = affine_sublattice(&a).unwrap();
            prop_assert!(a.iter().all(|p| l.contains(p)));
        }

        #[test]
        fn translation_equivariance(a in small_set(2), t in proptest::collection::vec(-20i64..20, 2)) {
            let t = Point::from(t);
            let l = affine_sublattice(&a).unwrap();
            let lt = affine_sublattice(&a.translate(&t).unwrap()).unwrap();
            prop_assert_eq!(lt.basis(), l.basis());
            prop_assert_eq!(&lt, &l.translate(&t).unwrap());
        }

        #[test]
        fn reduce_round_trips(a in small_set(3)) {
            let (r, map) = reduce_coordinates(&a).unwrap();
            prop_assert_eq!(r.len(), a.len());
            prop_assert!(is_reduced(&r).unwrap() || r.len() == 1);
            let back = r.map(3, |p| map.apply(p)).unwrap();
            prop_assert_eq!(back, a);
        }
    }
}
