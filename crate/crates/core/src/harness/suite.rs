//! The seeded experiment suite: randomized property checks and the family
//! experiments, assembled into a deterministic report.

use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::families::{check_degenerate_family, gen_functional_example, gen_lowerbound_family};
use super::freiman::{check_freiman, enumerate_freiman, row_bound_holds};
use super::oracles::{brute_inf_convolution, brute_restricted, brute_restricted_partial};
use super::sample::{mixed_subset, random_box};
use super::stability::{check_converse, check_stability};
use super::discretize::discretize;
use crate::error::{Error, Result};
use crate::geometry::simplex::{minimal_covering_levels, DEFAULT_FAMILY_CAP};
use crate::geometry::{
    boundary_straddle_count, convex_progression, hyperplane_box_check, volume_count_check, Polytope,
};
use crate::infconv::{functional_deficit, inf_convolution, lower_convex_hull, restricted_inf_convolution, LatticeFunction};
use crate::lattice::compress::compress_all;
use crate::lattice::gap::AxisBox;
use crate::lattice::io::set_to_json;
use crate::lattice::sublattice::{is_reduced, reduce_coordinates};
use crate::lattice::{LatticeSet, Point};
use crate::rational::{self, int, ratio};
use crate::sumset::bounds::{box_lower_bound_check, projected_lower_bound_check, subset_deficit_check};
use crate::sumset::plus::{plus_structured, plus_structured_lower_bound};
use crate::sumset::thickness::DEFAULT_NORMAL_BOUND;
use crate::sumset::{minkowski_sum, minkowski_sum_with, SumBackend};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExperimentConfig {
    pub seed: u64,
    /// Instances per randomized set-valued suite.
    pub instances: usize,
    pub infconv_instances: usize,
    pub functional_instances: usize,
    pub box_max: u64,
    pub density_min: f64,
    pub density_max: f64,
    pub dims: Vec<usize>,
    /// Largest `N` in the exhaustive `3|A| - 4` enumeration.
    pub freiman_n: u32,
    pub normal_bound: u32,
    pub covering_max_mu1: u32,
    pub covering_max_mu2: u32,
    #[serde(skip)]
    pub jobs: usize,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        ExperimentConfig {
            seed: 42,
            instances: 1000,
            infconv_instances: 500,
            functional_instances: 200,
            box_max: 12,
            density_min: 0.1,
            density_max: 0.9,
            dims: vec![1, 2, 3],
            freiman_n: 13,
            normal_bound: DEFAULT_NORMAL_BOUND,
            covering_max_mu1: 3,
            covering_max_mu2: 4,
            jobs: 1,
        }
    }
}

impl ExperimentConfig {
    /// Sets every instance count at once.
    pub fn with_count(mut self, count: usize) -> Self {
        self.instances = count;
        self.infconv_instances = count;
        self.functional_instances = count;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.dims.is_empty() || self.dims.iter().any(|&k| k == 0 || k > 4) {
            return Err(Error::InvalidParameter("dims must be nonempty and within 1..=4".into()));
        }
        if self.box_max == 0 {
            return Err(Error::InvalidParameter("box_max must be positive".into()));
        }
        if !(0.0..=1.0).contains(&self.density_min)
            || !(0.0..=1.0).contains(&self.density_max)
            || self.density_min > self.density_max
        {
            return Err(Error::InvalidParameter("density range must satisfy 0 <= min <= max <= 1".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidParameter("jobs must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub name: String,
    pub instances: u64,
    pub violations: u64,
    pub examples: Vec<Value>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Experiment {
    pub family: String,
    pub params: Value,
    pub deficit: Option<String>,
    pub gap: Option<String>,
    pub ratio: Option<String>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: ExperimentConfig,
    pub suites: Vec<SuiteSummary>,
    pub experiments: Vec<Experiment>,
}

impl Report {
    pub fn violations(&self) -> u64 {
        self.suites.iter().map(|s| s.violations).sum::<u64>()
            + self.experiments.iter().filter(|e| e.holds == Some(false)).count() as u64
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteSummary> {
        self.suites.iter().find(|s| s.name == name)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn experiments_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let io = |e: csv::Error| Error::InvalidParameter(format!("csv: {e}"));
        w.write_record(["family", "params", "deficit", "gap", "ratio"]).map_err(io)?;
        for e in &self.experiments {
            let opt = |v: &Option<String>| v.clone().unwrap_or_default();
            w.write_record([e.family.clone(), e.params.to_string(), opt(&e.deficit), opt(&e.gap), opt(&e.ratio)])
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::InvalidParameter(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv is utf-8"))
    }
}

/// Result of one randomized instance.
struct Outcome {
    violation: bool,
    detail: Value,
    metric: Option<BigRational>,
}

impl Outcome {
    fn check(holds: bool, detail: impl FnOnce() -> Value) -> Self {
        Outcome { violation: !holds, detail: if holds { Value::Null } else { detail() }, metric: None }
    }
}

struct Ctx<'a> {
    cfg: &'a ExperimentConfig,
    rng: ChaCha8Rng,
}

impl Ctx<'_> {
    fn dim(&mut self, min: usize) -> usize {
        let eligible: Vec<usize> = self.cfg.dims.iter().copied().filter(|&k| k >= min).collect();
        if eligible.is_empty() {
            return min;
        }
        eligible[self.rng.gen_range(0..eligible.len())]
    }

    fn boxed(&mut self, k: usize, max_side: u64) -> AxisBox {
        random_box(&mut self.rng, k, max_side.min(self.cfg.box_max).max(1))
    }

    fn subset(&mut self, boxed: &AxisBox) -> LatticeSet {
        mixed_subset(&mut self.rng, boxed, (self.cfg.density_min, self.cfg.density_max))
    }

    fn value(&mut self) -> BigRational {
        ratio(self.rng.gen_range(0..=8i64), self.rng.gen_range(1..=4i64))
    }

    fn function_on(&mut self, domain: LatticeSet) -> LatticeFunction {
        let values = (0..domain.len()).map(|_| self.value()).collect();
        LatticeFunction::new(domain, values).expect("nonnegative values")
    }
}

type InstanceFn = fn(&mut Ctx) -> Result<Outcome>;

fn set_json(s: &LatticeSet) -> Value {
    set_to_json(s)
}

fn negdk(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 12);
    let (x1, x2) = (cx.subset(&b), cx.subset(&b));
    let mut checks = vec![box_lower_bound_check(&x1, &x2, &b)?];
    if k >= 2 {
        let pb = b.projected()?;
        let (y1, y2) = (cx.subset(&pb), cx.subset(&pb));
        checks.push(projected_lower_bound_check(&y1, &y2, &b)?);
    }
    Ok(Outcome::check(checks.iter().all(|c| c.holds), || json!({ "checks": checks, "x1": set_json(&x1), "x2": set_json(&x2) })))
}

fn dkobs(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 12);
    let y = cx.subset(&b);
    let keep = cx.rng.gen_range(0.2..=1.0);
    let first = y.points()[0].clone();
    let x = y.filter(|p| *p == first || cx.rng.gen_bool(keep));
    let c = subset_deficit_check(&x, &y)?;
    Ok(Outcome::check(c.holds, || json!({ "check": c, "x": set_json(&x), "y": set_json(&y) })))
}

fn contdisc(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 12);
    let a = cx.subset(&b);
    let p = Polytope::convex_hull(&a)?;
    let closed = volume_count_check(&p, &b)?;
    let open = volume_count_check(&p.interior(), &b)?;
    Ok(Outcome::check(closed.holds && open.holds, || json!({ "closed": closed, "open": open, "a": set_json(&a) })))
}

fn cvxsd(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 12);
    let a = cx.subset(&b);
    let c = check_converse(&a, &b)?;
    Ok(Outcome::check(c.holds, || json!({ "check": c, "a": set_json(&a) })))
}

fn hypboxsmall(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 12);
    let mut normal: Vec<i64> = (0..k).map(|_| cx.rng.gen_range(-3..=3)).collect();
    if normal.iter().all(|&c| c == 0) {
        let i = cx.rng.gen_range(0..k);
        normal[i] = 1;
    }
    let p: Vec<i64> = (0..k).map(|i| cx.rng.gen_range(b.lo()[i]..=b.hi(i))).collect();
    let offset = normal.iter().zip(&p).map(|(a, x)| a * x).sum();
    let c = hyperplane_box_check(&normal, offset, &b)?;
    Ok(Outcome::check(c.holds, || json!({ "check": c, "normal": normal, "offset": offset })))
}

fn surfobs(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(2);
    let b = cx.boxed(k, 12);
    let y = cx.subset(&b.projected()?);
    let mut v: Vec<i64> = (0..k - 1).map(|_| cx.rng.gen_range(0..=1)).collect();
    if v.iter().all(|&c| c == 0) {
        let i = cx.rng.gen_range(0..k - 1);
        v[i] = 1;
    }
    let c = boundary_straddle_count(&y, &Point::from(v.clone()), &b)?;
    Ok(Outcome::check(c.holds, || json!({ "check": c, "v": v, "y": set_json(&y) })))
}

fn nonreduced(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 8);
    let a = cx.subset(&b);
    let scale: Vec<i64> = (0..k).map(|_| cx.rng.gen_range(1..=3)).collect();
    let shift: Vec<i64> = (0..k).map(|_| cx.rng.gen_range(-5..=5)).collect();
    let stretched = a.map(k, |p| Ok(Point::from((0..k).map(|i| p[i] * scale[i] + shift[i]).collect::<Vec<_>>())))?;
    let (reduced, _) = reduce_coordinates(&stretched)?;
    let holds = reduced.len() == stretched.len()
        && (reduced.len() == 1 || is_reduced(&reduced)?)
        && minkowski_sum(&reduced, &reduced)?.len() == minkowski_sum(&stretched, &stretched)?.len()
        && convex_progression(&reduced)?.gap == convex_progression(&stretched)?.gap
        && convex_progression(&a)?.gap == convex_progression(&stretched)?.gap;
    Ok(Outcome::check(holds, || json!({ "a": set_json(&a), "scale": scale, "shift": shift })))
}

fn sumset_backends(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 12);
    let (x, y) = (cx.subset(&b), cx.subset(&b));
    let hash = minkowski_sum_with(&x, &y, SumBackend::Hash)?;
    let holds = minkowski_sum_with(&x, &y, SumBackend::SortedMerge)? == hash
        && minkowski_sum_with(&x, &y, SumBackend::Bitset)? == hash;
    Ok(Outcome::check(holds, || json!({ "x": set_json(&x), "y": set_json(&y) })))
}

fn plus_structured_suite(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(2);
    let b = cx.boxed(k, 12);
    let a = cx.subset(&b);
    let p = plus_structured(&a)?;
    let holds = p.is_subset(&minkowski_sum(&a, &a)?) && p.len() == plus_structured_lower_bound(&a)?;
    Ok(Outcome::check(holds, || json!({ "a": set_json(&a) })))
}

fn compression(cx: &mut Ctx) -> Result<Outcome> {
    let b = cx.boxed(2, 12);
    let (x, y) = (cx.subset(&b), cx.subset(&b));
    let lhs = minkowski_sum(&compress_all(&x)?, &compress_all(&y)?)?.len();
    let rhs = minkowski_sum(&x, &y)?.len();
    Ok(Outcome::check(lhs <= rhs, || json!({ "lhs": lhs, "rhs": rhs, "x": set_json(&x), "y": set_json(&y) })))
}

fn small_function(cx: &mut Ctx) -> LatticeFunction {
    let k = cx.dim(1);
    let b = cx.boxed(k, 6);
    let d = cx.subset(&b);
    cx.function_on(d)
}

fn infconv_oracle(cx: &mut Ctx) -> Result<Outcome> {
    let f = small_function(cx);
    let holds = inf_convolution(&f)? == brute_inf_convolution(&f)?;
    Ok(Outcome::check(holds, || crate::infconv::function_to_json(&f)))
}

fn lower_hull(cx: &mut Ctx) -> Result<Outcome> {
    let f = small_function(cx);
    let h = lower_convex_hull(&f)?;
    let mut holds = h.values().iter().zip(f.values()).all(|(a, b)| a <= b) && lower_convex_hull(&h)? == h;
    for (x, hx) in h.iter() {
        for (y, hy) in h.iter() {
            let s = x.checked_add(y)?;
            if s.coords().iter().all(|c| c % 2 == 0) {
                let mid = Point::from(s.coords().iter().map(|c| c / 2).collect::<Vec<_>>());
                if let Some(hm) = h.value(&mid) {
                    holds &= hm * int(2) <= hx + hy;
                }
            }
        }
    }
    Ok(Outcome::check(holds, || crate::infconv::function_to_json(&f)))
}

fn functional(cx: &mut Ctx) -> Result<Outcome> {
    let k = cx.dim(1);
    let b = cx.boxed(k, 5);
    let a = cx.subset(&b);
    let domain = convex_progression(&a)?.co_hat;
    let values = (0..domain.len()).map(|_| ratio(cx.rng.gen_range(0..=4i64), 4)).collect();
    let f = LatticeFunction::new(domain, values)?;
    let r = functional_deficit(&f)?;
    let holds = !r.hull_deficit.is_negative();
    let unwitnessed = !r.conv_deficit.is_positive() && r.hull_deficit.is_positive();
    Ok(Outcome {
        violation: !holds,
        detail: if holds { json!({ "unwitnessed": unwitnessed }) } else { json!({ "report": r }) },
        metric: r.ratio,
    })
}

fn lattice_triangle(cx: &mut Ctx) -> Result<LatticeSet> {
    if cx.rng.gen_bool(0.5) {
        let n = cx.rng.gen_range(2..=8);
        return Ok(LatticeSet::interval(0, n));
    }
    loop {
        let pts: Vec<[i64; 2]> = (0..3).map(|_| [cx.rng.gen_range(0..=6), cx.rng.gen_range(0..=6)]).collect();
        let (a, b, c) = (pts[0], pts[1], pts[2]);
        let area2 = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
        if area2 != 0 {
            return Polytope::convex_hull(&LatticeSet::from_arrays(&[a, b, c]))?.lattice_points();
        }
    }
}

fn restricted_infconv(cx: &mut Ctx) -> Result<Outcome> {
    let t = lattice_triangle(cx)?;
    let hull = Polytope::convex_hull(&t)?;
    let vertices = hull.integer_vertices().expect("lattice simplex");
    let values = t.iter().map(|p| if vertices.contains(p) { BigRational::zero() } else { cx.value() }).collect();
    let g = LatticeFunction::new(t.clone(), values)?;
    let diffs = minkowski_sum(&t, &t.map(t.dim(), |p| p.neg())?)?;
    let density = cx.rng.gen_range(0.05..=0.5);
    let w = diffs.filter(|_| cx.rng.gen_bool(density));
    let restricted = restricted_inf_convolution(&g, &w)?;
    let full = inf_convolution(&g)?;
    let (_, partial) = brute_restricted_partial(&g, &w)?;
    let mut holds = restricted == brute_restricted(&g, &w)?;
    for ((z, v), admissible) in restricted.iter().zip(&partial) {
        if admissible.is_some() {
            holds &= v >= full.value(z).expect("same domain");
        }
    }
    let cap = int(2) * g.max() * int(restricted.domain().len() as i64);
    holds &= restricted.sum() <= cap;
    let metric = g.sum().is_positive().then(|| restricted.sum() / g.sum());
    Ok(Outcome {
        violation: !holds,
        detail: if holds { Value::Null } else { json!({ "g": crate::infconv::function_to_json(&g), "w": set_json(&w) }) },
        metric,
    })
}

fn freiman_row_bound(cx: &mut Ctx) -> Result<Outcome> {
    let len = cx.rng.gen_range(1..=40i64);
    let density = cx.rng.gen_range(cx.cfg.density_min..=cx.cfg.density_max);
    let mut vals: Vec<i64> = (0..=len).filter(|_| cx.rng.gen_bool(density)).collect();
    vals.push(0);
    let a = LatticeSet::from_ints(&vals);
    let c = check_freiman(&a)?;
    Ok(Outcome::check(row_bound_holds(&c) && !c.violation(), || json!({ "check": c, "a": vals })))
}

const MAX_EXAMPLES: usize = 3;

fn run_instances(cfg: &ExperimentConfig, id: u64, name: &str, count: usize, f: InstanceFn) -> SuiteSummary {
    let outcomes: Vec<Outcome> = (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(id << 32 | i as u64);
            let mut cx = Ctx { cfg, rng };
            f(&mut cx).unwrap_or_else(|e| Outcome {
                violation: true,
                detail: json!({ "error": e.to_string() }),
                metric: None,
            })
        })
        .collect();
    let violations = outcomes.iter().filter(|o| o.violation).count() as u64;
    let mut examples: Vec<Value> = outcomes
        .iter()
        .enumerate()
        .filter(|(_, o)| o.violation)
        .take(MAX_EXAMPLES)
        .map(|(i, o)| json!({ "instance": i, "detail": o.detail }))
        .collect();
    let metrics: Vec<&BigRational> = outcomes.iter().filter_map(|o| o.metric.as_ref()).collect();
    if !metrics.is_empty() {
        let max = metrics.iter().max().expect("nonempty");
        examples.push(json!({ "measured": metrics.len(), "max_ratio": rational::format(max) }));
    }
    if name == "functional_deficit" {
        let unwitnessed = outcomes.iter().filter(|o| o.detail.get("unwitnessed") == Some(&Value::Bool(true))).count();
        examples.push(json!({ "unwitnessed": unwitnessed }));
    }
    SuiteSummary { name: name.to_string(), instances: count as u64, violations, examples }
}

fn freiman_suite(cfg: &ExperimentConfig, enabled: bool) -> Result<SuiteSummary> {
    let mut summary = SuiteSummary {
        name: "freiman_enumeration".into(),
        instances: 0,
        violations: 0,
        examples: Vec::new(),
    };
    if !enabled {
        return Ok(summary);
    }
    let per_n: Vec<_> = (0..=cfg.freiman_n)
        .into_par_iter()
        .map(|n| enumerate_freiman(n, cfg.freiman_n.max(super::DEFAULT_FREIMAN_CAP)))
        .collect::<Result<_>>()?;
    for e in per_n {
        summary.instances += e.sets;
        summary.violations += e.violations;
        if e.violations > 0 && summary.examples.len() < MAX_EXAMPLES {
            summary.examples.push(json!({ "n": e.n, "first_violation": e.first_violation }));
        }
        if e.n == cfg.freiman_n {
            summary.examples.push(serde_json::to_value(&e).expect("plain data"));
        }
    }
    Ok(summary)
}

fn fmt(r: &BigRational) -> String {
    rational::format(r)
}

fn experiments(cfg: &ExperimentConfig) -> Result<Vec<Experiment>> {
    let mut out = Vec::new();
    for (k, n0, n) in [(2usize, 1u64, 3u64), (2, 2, 4), (2, 1, 10), (3, 1, 2)] {
        let c = check_degenerate_family(k, n0, n)?;
        out.push(Experiment {
            family: "degenerate".into(),
            params: json!({ "k": k, "n0": n0, "n": n }),
            deficit: Some(c.deficit.to_string()),
            gap: Some(c.co_gap.to_string()),
            ratio: None,
            details: json!({ "card": c.card, "predicted_gap": fmt(&c.predicted_gap) }),
            holds: Some(c.holds),
        });
    }
    for n in [1u64, 2, 4, 8, 16, 32] {
        let a = gen_lowerbound_family(2, n)?;
        let r = check_stability(&a, cfg.normal_bound)?;
        out.push(Experiment {
            family: "lowerbound".into(),
            params: json!({ "k": 2, "n": n }),
            deficit: Some(r.deficit.to_string()),
            gap: Some(r.gap.to_string()),
            ratio: r.ratio.as_ref().map(fmt),
            details: json!({ "card": r.card_a, "thickness": r.thickness.count }),
            holds: None,
        });
    }
    for (k, n) in [(2usize, 1u64), (2, 2), (2, 4), (3, 2), (3, 3)] {
        let r = functional_deficit(&gen_functional_example(k, n)?)?;
        out.push(Experiment {
            family: "functional".into(),
            params: json!({ "k": k, "n": n }),
            deficit: Some(fmt(&r.conv_deficit)),
            gap: Some(fmt(&r.hull_deficit)),
            ratio: r.ratio.as_ref().map(fmt),
            details: Value::Null,
            holds: None,
        });
    }
    let unit = |x: i64, y: i64| vec![int(x), int(y)];
    let square = Polytope::from_vertices(2, &[unit(0, 0), unit(1, 0), unit(0, 1), unit(1, 1)])?;
    for n in [1u64, 2, 4, 8, 16, 64] {
        let count = discretize(std::slice::from_ref(&square), n)?.len() as i64;
        let density = ratio(count, (n * n) as i64);
        let bound = ratio(3, n as i64);
        out.push(Experiment {
            family: "discretize_unit_square".into(),
            params: json!({ "n": n }),
            deficit: None,
            gap: None,
            ratio: Some(fmt(&density)),
            details: json!({ "count": count, "excess": fmt(&(&density - int(1))), "bound": fmt(&bound) }),
            holds: Some(&density - int(1) <= bound),
        });
    }
    for d in [1usize, 2] {
        let found = minimal_covering_levels(d, cfg.covering_max_mu1, cfg.covering_max_mu2, DEFAULT_FAMILY_CAP)?;
        let details = match &found {
            Some(c) => json!({
                "mu1": c.mu1,
                "mu2": c.mu2,
                "members": c.members,
                "total_volume": fmt(&c.total_volume),
                "bound": fmt(&c.bound),
            }),
            None => json!({ "found": false }),
        };
        out.push(Experiment {
            family: "covering_levels".into(),
            params: json!({ "simplex_dim": d, "max_mu1": cfg.covering_max_mu1, "max_mu2": cfg.covering_max_mu2 }),
            deficit: None,
            gap: None,
            ratio: found.as_ref().map(|c| fmt(&(&c.total_volume / &c.bound))),
            details,
            holds: None,
        });
    }
    Ok(out)
}

pub fn run_suite(cfg: &ExperimentConfig) -> Result<Report> {
    cfg.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| {
        let n = cfg.instances;
        let table: [(&str, usize, InstanceFn); 15] = [
            ("negdk", n, negdk),
            ("dkobs", n, dkobs),
            ("contdisc", n, contdisc),
            ("cvxsd", n, cvxsd),
            ("hypboxsmall", n, hypboxsmall),
            ("surfobs", n, surfobs),
            ("nonreduced", n, nonreduced),
            ("sumset_backends", n, sumset_backends),
            ("plus_structured", n, plus_structured_suite),
            ("compression", n, compression),
            ("infconv_oracle", cfg.infconv_instances, infconv_oracle),
            ("lower_hull", cfg.infconv_instances, lower_hull),
            ("functional_deficit", cfg.functional_instances, functional),
            ("restricted_infconv", cfg.infconv_instances, restricted_infconv),
            ("freiman_row_bound", n, freiman_row_bound),
        ];
        let mut suites: Vec<SuiteSummary> = table
            .iter()
            .enumerate()
            .map(|(id, (name, count, f))| run_instances(cfg, id as u64, name, *count, *f))
            .collect();
        let active = n > 0;
        suites.push(freiman_suite(cfg, active)?);
        let experiments = if active { experiments(cfg)? } else { Vec::new() };
        Ok(Report { config: cfg.clone(), suites, experiments })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> ExperimentConfig {
        ExperimentConfig {
            box_max: 5,
            freiman_n: 6,
            covering_max_mu1: 1,
            covering_max_mu2: 0,
            jobs: 2,
            ..ExperimentConfig::default()
        }
        .with_count(12)
    }

    #[test]
    fn small_run_is_clean_and_deterministic() {
        let a = run_suite(&small()).unwrap();
        assert_eq!(a.violations(), 0, "{}", a.to_json());
        let b = run_suite(&ExperimentConfig { jobs: 1, ..small() }).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.suite("negdk").unwrap().instances, 12);
        assert!(a.experiments_csv().unwrap().starts_with("family,params,deficit,gap,ratio\n"));
    }

    #[test]
    fn zero_count_gives_empty_report() {
        let r = run_suite(&ExperimentConfig::default().with_count(0)).unwrap();
        assert!(r.suites.iter().all(|s| s.instances == 0 && s.violations == 0));
        assert!(r.experiments.is_empty());
        let v: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert!(v["config"].is_object() && v["suites"].is_array() && v["experiments"].is_array());
    }

    #[test]
    fn seeds_matter() {
        let a = run_suite(&small()).unwrap();
        let b = run_suite(&ExperimentConfig { seed: 7, ..small() }).unwrap();
        assert_ne!(a.config, b.config);
        assert_eq!(b.violations(), 0);
    }

    #[test]
    fn bad_configs() {
        assert!(run_suite(&ExperimentConfig { dims: vec![], ..small() }).is_err());
        assert!(run_suite(&ExperimentConfig { density_min: 0.9, density_max: 0.1, ..small() }).is_err());
    }
}
