//! Seeded samplers for subsets of boxes.

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::lattice::gap::AxisBox;
use crate::lattice::{LatticeSet, Point};

pub fn random_box(rng: &mut ChaCha8Rng, k: usize, max_side: u64) -> AxisBox {
    let lens = (0..k).map(|_| rng.gen_range(1..=max_side)).collect();
    AxisBox::new(Point::from(vec![0; k]), lens).expect("positive sides")
}

/// Each point kept independently with probability `density`.
pub fn uniform_subset(rng: &mut ChaCha8Rng, boxed: &AxisBox, density: f64) -> LatticeSet {
    boxed.elements().filter(|_| rng.gen_bool(density))
}

/// A union of up to `count` random sub-boxes.
pub fn union_of_boxes(rng: &mut ChaCha8Rng, boxed: &AxisBox, count: usize) -> LatticeSet {
    let k = boxed.dim();
    let mut pts = Vec::new();
    for _ in 0..count.max(1) {
        let mut lo = Vec::with_capacity(k);
        let mut lens = Vec::with_capacity(k);
        for i in 0..k {
            let n = boxed.lengths()[i];
            let a = rng.gen_range(0..n);
            let b = rng.gen_range(a..n);
            lo.push(boxed.lo()[i] + a as i64);
            lens.push(b - a + 1);
        }
        pts.extend(AxisBox::new(Point::from(lo), lens).expect("inside").elements().into_points());
    }
    LatticeSet::new(k, pts).expect("same dimension")
}

/// The box with `deletions` random points removed.
pub fn near_convex(rng: &mut ChaCha8Rng, boxed: &AxisBox, deletions: usize) -> LatticeSet {
    let mut pts = boxed.elements().into_points();
    pts.shuffle(rng);
    let keep = pts.len().saturating_sub(deletions).max(1);
    pts.truncate(keep);
    LatticeSet::new(boxed.dim(), pts).expect("same dimension")
}

/// One of the three samplers, chosen at random; never empty.
pub fn mixed_subset(rng: &mut ChaCha8Rng, boxed: &AxisBox, density: (f64, f64)) -> LatticeSet {
    let set = match rng.gen_range(0..3) {
        0 => {
            let d = rng.gen_range(density.0..=density.1);
            uniform_subset(rng, boxed, d)
        }
        1 => {
            let count = rng.gen_range(1..=3);
            union_of_boxes(rng, boxed, count)
        }
        _ => {
            let size = boxed.size() as usize;
            let deletions = rng.gen_range(0..=size / 4);
            near_convex(rng, boxed, deletions)
        }
    };
    if set.is_empty() {
        let p = Point::from((0..boxed.dim()).map(|i| rng.gen_range(boxed.lo()[i]..=boxed.hi(i))).collect::<Vec<_>>());
        LatticeSet::new(boxed.dim(), [p]).expect("same dimension")
    } else {
        set
    }
}
