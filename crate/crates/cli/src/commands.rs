use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};

use serde_json::{json, Value};
use sumstab::geometry::{convex_progression, Polytope};
use sumstab::harness::suite::{run_suite, ExperimentConfig};
use sumstab::harness::{
    check_converse, check_freiman, check_stability, discretize, enumerate_freiman, gen_degenerate_family,
    gen_functional_example, gen_lowerbound_family,
};
use sumstab::infconv::{
    epigraph_lift, function_from_json, function_to_json, inf_convolution, lower_convex_hull, parse_function,
    restricted_inf_convolution, write_function, LatticeFunction,
};
use sumstab::lattice::compress::{compress, compress_all};
use sumstab::lattice::fibers::rows;
use sumstab::lattice::gap::AxisBox;
use sumstab::lattice::io::{parse_set, set_from_json, set_to_json, write_set};
use sumstab::sumset::plus::{plus_1d, plus_structured, plus_structured_lower_bound};
use sumstab::sumset::thickness::thickness_upper;
use sumstab::sumset::{doubling_deficit, minkowski_sum, minkowski_sum_with, SumBackend};
use sumstab::{rational, LatticeSet, Point};

use crate::{Backend, Cli, Command, FamilyKind, Global};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Data(#[from] sumstab::Error),
}

impl CliError {
    /// Usage errors are reported by the argument parser before this point.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

type Result<T> = std::result::Result<T, CliError>;

const OK: u8 = 0;
const VIOLATION: u8 = 3;

fn read(path: &Path) -> Result<String> {
    let io_err = |source| CliError::Io { path: path.to_path_buf(), source };
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(io_err)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(io_err)
    }
}

fn looks_like_json(text: &str) -> bool {
    text.trim_start().starts_with('{')
}

fn read_set(g: &Global, path: &Path) -> Result<LatticeSet> {
    let text = read(path)?;
    let set = if looks_like_json(&text) { set_from_json(&text)? } else { parse_set(&text, g.dim)? };
    if let Some(d) = g.dim {
        if set.dim() != d {
            return Err(sumstab::Error::DimensionMismatch { expected: d, found: set.dim() }.into());
        }
    }
    Ok(set)
}

fn read_function(path: &Path) -> Result<LatticeFunction> {
    let text = read(path)?;
    Ok(if looks_like_json(&text) { function_from_json(&text)? } else { parse_function(&text)? })
}

/// Writes to `--out` when given, otherwise to stdout.
fn emit(g: &Global, body: &str) -> Result<()> {
    match &g.out {
        Some(path) => fs::write(path, body).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn emit_json(g: &Global, v: &Value) -> Result<()> {
    emit(g, &format!("{}\n", serde_json::to_string_pretty(v).expect("json serializes")))
}

fn emit_set(g: &Global, set: &LatticeSet) -> Result<()> {
    if g.json {
        emit_json(g, &set_to_json(set))
    } else {
        emit(g, &write_set(set))
    }
}

fn emit_function(g: &Global, f: &LatticeFunction) -> Result<()> {
    if g.json {
        emit_json(g, &function_to_json(f))
    } else {
        emit(g, &write_function(f))
    }
}

fn fmt(r: &rational::BigRational) -> String {
    rational::format(r)
}

pub fn execute(cli: &Cli) -> Result<u8> {
    let g = &cli.global;
    match &cli.command {
        Command::Sum { a, b, backend } => {
            let (a, b) = (read_set(g, a)?, read_set(g, b)?);
            let s = match backend {
                Backend::Auto => minkowski_sum(&a, &b)?,
                Backend::Hash => minkowski_sum_with(&a, &b, SumBackend::Hash)?,
                Backend::Merge => minkowski_sum_with(&a, &b, SumBackend::SortedMerge)?,
                Backend::Bitset => minkowski_sum_with(&a, &b, SumBackend::Bitset)?,
            };
            emit_set(g, &s)?;
        }
        Command::Doubling { a, boxed } => {
            let a = read_set(g, a)?;
            let r = doubling_deficit(&a)?;
            let converse = match boxed {
                Some(lens) => {
                    let b = AxisBox::new(Point::from(vec![1; lens.len()]), lens.clone())?;
                    Some(check_converse(&a, &b)?)
                }
                None => None,
            };
            if g.json {
                emit_json(g, &json!({ "doubling": r, "converse": converse }))?;
            } else {
                let mut s = format!("card={} sum={} deficit={}\n", r.card_a, r.card_sum, r.deficit);
                if let Some(c) = &converse {
                    s.push_str(&format!("converse lhs={} rhs={} holds={}\n", fmt(&c.lhs), fmt(&c.rhs), c.holds));
                }
                emit(g, &s)?;
            }
            if converse.is_some_and(|c| !c.holds) {
                return Ok(VIOLATION);
            }
        }
        Command::Chull { a } => {
            let p = Polytope::convex_hull(&read_set(g, a)?)?;
            if g.json {
                let mut v = p.to_json()?;
                v["affine_dim"] = json!(p.affine_dim());
                v["volume"] = json!(fmt(p.volume()));
                emit_json(g, &v)?;
            } else {
                let mut s = format!("affine_dim={} volume={}\n", p.affine_dim(), fmt(p.volume()));
                for v in p.vertices() {
                    let coords: Vec<String> = v.iter().map(fmt).collect();
                    s.push_str(&format!("vertex {}\n", coords.join(" ")));
                }
                for h in p.halfspaces() {
                    let n: Vec<String> = h.normal.iter().map(i64::to_string).collect();
                    s.push_str(&format!("halfspace {} <= {}\n", n.join(" "), fmt(&h.offset)));
                }
                emit(g, &s)?;
            }
        }
        Command::Covprog { a } => {
            let a = read_set(g, a)?;
            let r = convex_progression(&a)?;
            if g.json {
                emit_json(g, &r.to_json())?;
            } else if g.out.is_some() {
                emit(g, &write_set(&r.co_hat))?;
                println!("gap={}", r.gap);
            } else {
                print!("{}", write_set(&r.co_hat));
                println!("gap={}", r.gap);
            }
        }
        Command::Rows { a } => {
            let d = rows(&read_set(g, a)?)?;
            if g.json {
                let v: Vec<Value> = d.iter().map(|(x, r)| json!({ "x": x.coords(), "row": r })).collect();
                emit_json(g, &Value::from(v))?;
            } else {
                let mut s = String::new();
                for (x, r) in d.iter() {
                    let vals: Vec<String> = r.iter().map(i64::to_string).collect();
                    s.push_str(&format!("{x}: {}\n", vals.join(" ")));
                }
                emit(g, &s)?;
            }
        }
        Command::Plusop { a } => {
            let a = read_set(g, a)?;
            let p = if a.dim() == 1 { plus_1d(&a, &a)? } else { plus_structured(&a)? };
            if g.json {
                let bound = if a.dim() == 1 { None } else { Some(plus_structured_lower_bound(&a)?) };
                emit_json(g, &json!({ "set": set_to_json(&p), "size": p.len(), "row_count": bound }))?;
            } else {
                emit_set(g, &p)?;
            }
        }
        Command::Compress { a, axis } => {
            let a = read_set(g, a)?;
            let c = match axis {
                Some(i) => compress(&a, *i)?,
                None => compress_all(&a)?,
            };
            emit_set(g, &c)?;
        }
        Command::Thickness { a, normal_bound } => {
            let t = thickness_upper(&read_set(g, a)?, *normal_bound)?;
            if g.json {
                emit_json(g, &json!(t))?;
            } else {
                let n: Vec<String> = t.normal.iter().map(i64::to_string).collect();
                emit(g, &format!("count={} normal={} exhaustive_up_to={}\n", t.count, n.join(","), t.exhaustive_up_to))?;
            }
        }
        Command::Infconv { f, restricted } => {
            let f = read_function(f)?;
            let out = match restricted {
                Some(w) => restricted_inf_convolution(&f, &read_set(g, w)?)?,
                None => inf_convolution(&f)?,
            };
            emit_function(g, &out)?;
        }
        Command::Lowerhull { f } => emit_function(g, &lower_convex_hull(&read_function(f)?)?)?,
        Command::Epigraph { f, n, m } => emit_set(g, &epigraph_lift(&read_function(f)?, *n, *m)?)?,
        Command::Freiman { a } => {
            let c = check_freiman(&read_set(g, a)?)?;
            if g.json {
                emit_json(g, &json!(c))?;
            } else {
                emit(
                    g,
                    &format!(
                        "hypothesis={} d1={} gap={} conclusion_holds={}\n",
                        c.hypothesis, c.d1, c.gap, c.conclusion_holds
                    ),
                )?;
            }
            if c.violation() {
                return Ok(VIOLATION);
            }
        }
        Command::Enumerate { n, cap } => {
            let e = enumerate_freiman(*n, *cap)?;
            if g.json {
                emit_json(g, &json!(e))?;
            } else {
                emit(
                    g,
                    &format!(
                        "n={} sets={} hypothesis_sets={} distinct_reduced={} violations={}\n",
                        e.n, e.sets, e.hypothesis_sets, e.distinct_reduced, e.violations
                    ),
                )?;
            }
            if e.violations > 0 {
                return Ok(VIOLATION);
            }
        }
        Command::Family { kind, k, n0, n, normal_bound } => match kind {
            FamilyKind::Functional => {
                let f = gen_functional_example(*k, *n)?;
                let r = sumstab::infconv::functional_deficit(&f)?;
                if g.json {
                    emit_json(g, &json!({ "function": function_to_json(&f), "deficit": r }))?;
                } else {
                    let ratio = r.ratio.as_ref().map(fmt).unwrap_or_else(|| "absent".into());
                    let head = format!(
                        "# hull_deficit={} conv_deficit={} ratio={}\n",
                        fmt(&r.hull_deficit),
                        fmt(&r.conv_deficit),
                        ratio
                    );
                    emit(g, &(head + &write_function(&f)))?;
                }
            }
            FamilyKind::Degenerate | FamilyKind::Lowerbound => {
                let a = match kind {
                    FamilyKind::Degenerate => gen_degenerate_family(*k, *n0, *n)?,
                    _ => gen_lowerbound_family(*k, *n)?,
                };
                let r = check_stability(&a, *normal_bound)?;
                let co_gap = convex_progression(&a)?.co_gap(&a);
                if g.json {
                    emit_json(g, &json!({ "set": set_to_json(&a), "report": r, "co_gap": co_gap }))?;
                } else {
                    let ratio = r.ratio.as_ref().map(fmt).unwrap_or_else(|| "absent".into());
                    let head = format!(
                        "# card={} deficit={} gap={} co_gap={} ratio={} thickness={}\n",
                        r.card_a, r.deficit, r.gap, co_gap, ratio, r.thickness.count
                    );
                    emit(g, &(head + &write_set(&a)))?;
                }
            }
        },
        Command::Discretize { regions, n, open } => {
            let text = read(regions)?;
            let v: Value = serde_json::from_str(&text)
                .map_err(|e| sumstab::Error::Parse { line: e.line(), msg: e.to_string() })?;
            let items = match &v {
                Value::Array(items) => items.clone(),
                other => vec![other.clone()],
            };
            let mut polys = items.iter().map(Polytope::from_json).collect::<sumstab::Result<Vec<_>>>()?;
            if *open {
                polys = polys.iter().map(Polytope::interior).collect();
            }
            emit_set(g, &discretize(&polys, *n)?)?;
        }
        Command::Suite { seed, jobs, count, box_max, dims, freiman_n, normal_bound, csv } => {
            let mut cfg = ExperimentConfig {
                seed: *seed,
                jobs: *jobs,
                box_max: *box_max,
                dims: dims.clone(),
                freiman_n: *freiman_n,
                normal_bound: *normal_bound,
                ..ExperimentConfig::default()
            };
            if let Some(c) = count {
                cfg = cfg.with_count(*c);
            }
            let report = run_suite(&cfg)?;
            emit(g, &report.to_json())?;
            if let Some(path) = csv {
                fs::write(path, report.experiments_csv()?).map_err(|source| CliError::Io { path: path.clone(), source })?;
            }
            if report.violations() > 0 {
                return Ok(VIOLATION);
            }
        }
    }
    Ok(OK)
}
