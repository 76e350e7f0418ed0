use std::fs::File;
use std::io::{BufReader, BufWriter};
use std::path::PathBuf;

use basesize::basecount::{
    base_size_partitions_action, base_size_subsets, base_size_wreath_subsets, check_subsets_args, large_base_bounds,
    subsets_character, Caveat, PartitionsOptions,
};
use basesize::characters::{PowerWalk, SetPartitions, DEFAULT_UNIFORM_CEILING};
use basesize::oracle::{
    base_size_bruteforce, distinguishing_number, is_base_controlling, orbit_counts_bruteforce,
    regular_orbits_on_tuples, symmetric_group, Controlling, GroupSpec, InducedAction, LabelChoice,
    DEFAULT_MAX_CONTROLLING_DEGREE,
};
use basesize::{Error, ExactInt, Result};
use clap::{Args, ValueEnum};
use num_bigint::BigInt;
use rand::SeedableRng;
use serde_json::{json, Value};

use crate::document::{int, trace, ResultDocument};

/// Exact integer type used by the formula side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Scalar {
    /// Arbitrary precision.
    #[default]
    Big,
    /// 128-bit, failing with exit code 3 on overflow.
    I128,
}

macro_rules! with_scalar {
    ($scalar:expr, $f:ident ( $($arg:expr),* )) => {
        match $scalar {
            Scalar::Big => $f::<BigInt>($($arg),*),
            Scalar::I128 => $f::<i128>($($arg),*),
        }
    };
}

/// Base sizes of groups whose sign character is known not to control bases, keyed by
/// `(n, r, s)` for `S_n` on partitions into `r` blocks of size `s`.
const PUBLISHED_PARTITION_BASE_SIZES: &[((usize, usize, usize), usize)] = &[((15, 3, 5), 3)];

#[derive(Debug, Clone, Args)]
pub struct SubsetsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Safety cap on l (default: the domain size).
    #[arg(long)]
    pub max_l: Option<usize>,
    /// Include the per-l regular-orbit counts.
    #[arg(long)]
    pub trace: bool,
    #[arg(long, value_enum, default_value_t)]
    pub scalar: Scalar,
}

pub fn cmd_basesize_subsets(args: &SubsetsArgs) -> Result<ResultDocument> {
    with_scalar!(args.scalar, basesize_subsets_impl(args))
}

fn basesize_subsets_impl<T: ExactInt>(args: &SubsetsArgs) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new("basesize-subsets");
    doc.input("n", int(args.n)).input("k", int(args.k));
    if let Some(m) = args.max_l {
        doc.input("max_l", int(m));
    }
    let report = base_size_subsets::<T>(args.n, args.k, args.max_l)?;
    doc.method("formula");
    doc.output("domain_size", int(subsets_character::<T>(args.n, args.k)?.degree()?));
    doc.output("base_size", int(report.base_size.expect("subset actions are faithful")));
    if args.trace {
        doc.output("trace", trace(&report.witness));
    }
    Ok(doc.finish())
}

#[derive(Debug, Clone, Args)]
pub struct OrbitsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub l: usize,
    #[arg(long, value_enum, default_value_t)]
    pub scalar: Scalar,
}

pub fn cmd_orbits(args: &OrbitsArgs) -> Result<ResultDocument> {
    with_scalar!(args.scalar, orbits_impl(args))
}

fn orbits_impl<T: ExactInt>(args: &OrbitsArgs) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new("orbits");
    doc.input("n", int(args.n)).input("k", int(args.k)).input("l", int(args.l));
    let chi = subsets_character::<T>(args.n, args.k)?;
    let mut walk = PowerWalk::new(&chi);
    let sums = walk.level_sums_at(args.l)?;
    let regular = sums.sign_inner(chi.table())?;
    let oc = sums.orbit_counts(chi.table())?;
    if oc.difference()? != regular {
        return Err(Error::Consistency(format!(
            "o_K - o = {} but <sgn, chi^l> = {regular}",
            oc.difference()?
        )));
    }
    doc.method("formula")
        .output("regular", int(&regular))
        .output("o", int(&oc.o))
        .output("o_K", int(&oc.o_k));
    Ok(doc.finish())
}

#[derive(Debug, Clone, Args)]
pub struct WreathArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub k: usize,
    /// Top group S_r; its distinguishing number is r.
    #[arg(long, conflicts_with = "dist", required_unless_present = "dist")]
    pub r: Option<usize>,
    /// Distinguishing number of an arbitrary top group.
    #[arg(long)]
    pub dist: Option<usize>,
    #[arg(long)]
    pub max_l: Option<usize>,
    /// Also compute the base size of S_{n,k} wr S_r by brute force.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    pub scalar: Scalar,
}

pub fn cmd_wreath(args: &WreathArgs) -> Result<ResultDocument> {
    with_scalar!(args.scalar, wreath_impl(args))
}

fn wreath_impl<T: ExactInt>(args: &WreathArgs) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new("wreath");
    doc.input("n", int(args.n)).input("k", int(args.k));
    let d = match (args.r, args.dist) {
        (Some(r), None) => {
            doc.input("r", int(r));
            if r == 0 {
                return Err(Error::Input("r must be at least 1".into()));
            }
            r
        }
        (None, Some(d)) => {
            doc.input("dist", int(d));
            d
        }
        _ => return Err(Error::Input("give exactly one of --r and --dist".into())),
    };
    let report = base_size_wreath_subsets::<T>(args.n, args.k, d, args.max_l)?;
    doc.method("formula")
        .output("distinguishing_number", int(d))
        .output("base_size", int(report.base_size))
        .output("trace", trace(&report.trace));
    if args.oracle {
        let Some(r) = args.r else {
            return Err(Error::Input("--oracle needs --r".into()));
        };
        let spec: GroupSpec = format!("sn:{}/subsets:{}/wreath:{r}", args.n, args.k).parse()?;
        let action = spec.build(LabelChoice::Auto)?;
        let top_d = distinguishing_number(&symmetric_group(r)?)?;
        let b = base_size_bruteforce(&action)?;
        doc.method("oracle")
            .output("oracle_distinguishing_number", int(top_d))
            .output("oracle_base_size", int(b))
            .output("agree", json!(b == report.base_size && top_d == d));
    }
    Ok(doc.finish())
}

#[derive(Debug, Clone, Args)]
pub struct BoundsArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub max_l: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub scalar: Scalar,
}

pub fn cmd_bounds(args: &BoundsArgs) -> Result<ResultDocument> {
    with_scalar!(args.scalar, bounds_impl(args))
}

fn bounds_impl<T: ExactInt>(args: &BoundsArgs) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new("bounds");
    doc.input("m", int(args.m)).input("k", int(args.k)).input("r", int(args.r));
    let b = large_base_bounds::<T>(args.m, args.k, args.r, args.max_l)?;
    doc.method("formula")
        .output("lower", int(b.lower))
        .output("upper", int(b.upper))
        .output("lower_trace", trace(&b.lower_trace))
        .output("upper_trace", trace(&b.upper_trace));
    Ok(doc.finish())
}

#[derive(Debug, Clone, Args)]
pub struct PartitionsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub s: usize,
    /// Safety cap on l (default: the domain size).
    #[arg(long)]
    pub l_max: Option<usize>,
    /// Ceiling on n for the set-partition sweep.
    #[arg(long, default_value_t = DEFAULT_UNIFORM_CEILING)]
    pub ceiling: usize,
    /// Directory for memoized set-partition lists.
    #[arg(long)]
    pub cache_dir: Option<PathBuf>,
    /// Also compute the true base size by brute force (small n only).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    pub scalar: Scalar,
}

pub fn cmd_partitions_action(args: &PartitionsArgs) -> Result<ResultDocument> {
    with_scalar!(args.scalar, partitions_impl(args))
}

fn load_partitions(args: &PartitionsArgs) -> Result<SetPartitions> {
    let (n, r, s) = (args.n, args.r, args.s);
    let Some(dir) = &args.cache_dir else {
        return SetPartitions::enumerate(n, r, s, args.ceiling);
    };
    let path = dir.join(format!("setpartitions-{n}-{r}x{s}.bin"));
    if let Ok(f) = File::open(&path) {
        return SetPartitions::read_from(BufReader::new(f), n, r, s);
    }
    let parts = SetPartitions::enumerate(n, r, s, args.ceiling)?;
    let io = |e: std::io::Error| Error::Input(format!("cache {}: {e}", path.display()));
    std::fs::create_dir_all(dir).map_err(io)?;
    parts.write_to(BufWriter::new(File::create(&path).map_err(io)?)).map_err(io)?;
    Ok(parts)
}

fn partitions_impl<T: ExactInt>(args: &PartitionsArgs) -> Result<ResultDocument> {
    let (n, r, s) = (args.n, args.r, args.s);
    let mut doc = ResultDocument::new("partitions-action");
    doc.input("n", int(n)).input("r", int(r)).input("s", int(s));
    if r == 0 || s == 0 || r * s != n {
        return Err(Error::Input(format!("n = {n} is not r*s with r = {r}, s = {s}")));
    }
    if n > args.ceiling {
        return Err(Error::Capacity(format!("n = {n} exceeds the ceiling {}", args.ceiling)));
    }
    let parts = load_partitions(args)?;
    let opts = PartitionsOptions {
        ceiling: args.ceiling,
        max_l: args.l_max,
        partitions: Some(&parts),
    };
    let (chi, report) = base_size_partitions_action::<T>(n, r, s, &opts)?;
    doc.method("formula");
    let classes: Vec<Value> = chi
        .table()
        .classes()
        .iter()
        .zip(chi.values())
        .map(|(c, v)| json!({ "cycle_type": c.cycle_type.to_string(), "chi": int(v) }))
        .collect();
    doc.output("domain_size", int(chi.degree()?)).output("character", Value::Array(classes));

    // <sgn, chi^l> for l = 1, 2 regardless of where the search stops
    let mut walk = PowerWalk::new(&chi);
    let mut first = Vec::new();
    for _ in 0..2 {
        let sums = walk.advance()?;
        first.push((sums.l, sums.sign_inner(chi.table())?));
    }
    doc.output("sign_inner_l1", int(&first[0].1))
        .output("sign_inner_l2", int(&first[1].1));

    match report.base_size {
        Some(b) => {
            doc.output("min_l", int(b)).output("trace", trace(&report.witness));
        }
        None => {
            doc.output("min_l", Value::Null);
        }
    }
    for c in &report.caveats {
        doc.warn(c.message());
    }
    doc.output(
        "sign_base_controlling",
        if report.caveats.contains(&Caveat::NotBaseControlling) {
            json!("not established")
        } else {
            json!(true)
        },
    );

    if let Some(&(_, published)) = PUBLISHED_PARTITION_BASE_SIZES.iter().find(|(key, _)| *key == (n, r, s)) {
        doc.output("published_base_size", int(published));
        if report.base_size != Some(published) {
            doc.warn(format!(
                "min-l = {} differs from the published base size {published}; sgn does not control bases for this action",
                report.base_size.map_or("none".to_string(), |b| b.to_string())
            ));
        }
    }
    if args.oracle {
        let spec: GroupSpec = format!("sn:{n}/partitions:{r}x{s}").parse()?;
        let action = spec.build(LabelChoice::Sgn)?;
        doc.method("oracle");
        match base_size_bruteforce(&action) {
            Ok(b) => {
                doc.output("oracle_base_size", int(b))
                    .output("formula_equals_oracle", json!(report.base_size == Some(b)));
            }
            Err(Error::Input(msg)) => {
                doc.warn(format!("oracle: {msg}"));
            }
            Err(e) => return Err(e),
        }
        if action.degree() <= DEFAULT_MAX_CONTROLLING_DEGREE && action.is_faithful() {
            doc.output("oracle_base_controlling", controlling_json(&action, &is_base_controlling(&action)?));
        }
    }
    Ok(doc.finish())
}

fn controlling_json(action: &InducedAction, c: &Controlling) -> Value {
    match c {
        Controlling::Yes => json!(true),
        Controlling::Counterexample {
            subset,
            stabilizer_order,
            label_image,
        } => json!({
            "counterexample": subset.iter().map(|&p| action.points()[p].clone()).collect::<Vec<_>>(),
            "stabilizer_order": int(stabilizer_order),
            "label_image": label_image.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
        }),
    }
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Group spec, e.g. `sn:6/subsets:2`, `pgl2:7`, `gens:(1,2);!(1,2,3,4)`.
    #[arg(long)]
    pub group: String,
    /// `sgn` labels by parity; `auto` uses the family's own homomorphism.
    #[arg(long, default_value = "auto")]
    pub labels: String,
    /// Largest l for the orbit counts (default: base size + 1).
    #[arg(long)]
    pub l_max: Option<usize>,
    /// Seed for the random homomorphism spot-check.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<ResultDocument> {
    let mut doc = ResultDocument::new("verify");
    doc.input("group", json!(args.group)).input("labels", json!(args.labels));
    let spec: GroupSpec = args.group.parse()?;
    let labels: LabelChoice = args.labels.parse()?;
    let base = spec.base_group(labels)?;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(args.seed);
    base.spot_check_labels(256, &mut rng)?;
    let action = spec.build(labels)?;
    doc.method("oracle")
        .output("degree", int(action.degree()))
        .output("order", int(action.group_order()))
        .output("faithful", json!(action.is_faithful()));

    let controlling = match is_base_controlling(&action) {
        Ok(c) => {
            doc.output("base_controlling", controlling_json(&action, &c));
            Some(c.holds())
        }
        Err(Error::Input(msg)) | Err(Error::Capacity(msg)) => {
            doc.output("base_controlling", Value::Null);
            doc.warn(format!("base-controlling check skipped: {msg}"));
            None
        }
        Err(e) => return Err(e),
    };

    let oracle_b = if action.is_faithful() {
        let b = base_size_bruteforce(&action)?;
        doc.output("base_size", int(b));
        Some(b)
    } else {
        doc.output("base_size", Value::Null);
        doc.warn("action is not faithful; no base exists");
        None
    };

    let l_max = args.l_max.or(oracle_b.map(|b| b + 1)).unwrap_or(2);
    let mut rows = Vec::new();
    for l in 1..=l_max {
        let regular = regular_orbits_on_tuples(&action, l)?;
        let mut row = json!({ "l": int(l), "regular": int(&regular) });
        if action.labels().is_some() {
            let (o, o_k) = orbit_counts_bruteforce(&action, l)?;
            row["o"] = int(&o);
            row["o_K"] = int(&o_k);
            row["o_K_minus_o"] = int(&(&o_k - &o));
        }
        rows.push((l, regular, row));
    }
    doc.output("orbits", Value::Array(rows.iter().map(|r| r.2.clone()).collect()));

    let sign_labels = labels == LabelChoice::Sgn || matches!(spec.base, basesize::oracle::BaseGroup::Symmetric(_));
    if spec.wreath.is_none() && sign_labels {
        if let Some((n, k)) = spec.symmetric_subsets() {
            if check_subsets_args(n, k).is_ok() {
                compare_subsets(&mut doc, n, k, oracle_b, &rows)?;
            }
        } else if let Some((n, r, s)) = spec.symmetric_partitions() {
            compare_partitions(&mut doc, n, r, s, oracle_b, controlling, &rows)?;
        }
    } else if let (Some(r), Some((n, k))) = (spec.wreath, spec.symmetric_subsets()) {
        if check_subsets_args(n, k).is_ok() && r >= 1 {
            let w = base_size_wreath_subsets::<BigInt>(n, k, r, None)?;
            doc.method("formula")
                .output("formula_base_size", int(w.base_size))
                .output("formula_equals_oracle", json!(oracle_b == Some(w.base_size)));
        }
    }
    Ok(doc.finish())
}

fn compare_subsets(
    doc: &mut ResultDocument,
    n: usize,
    k: usize,
    oracle_b: Option<usize>,
    rows: &[(usize, BigInt, Value)],
) -> Result<()> {
    let report = base_size_subsets::<BigInt>(n, k, None)?;
    let chi = subsets_character::<BigInt>(n, k)?;
    let mut walk = PowerWalk::new(&chi);
    let mut agree = report.base_size == oracle_b;
    let mut formula_counts = Vec::new();
    for (l, regular, _) in rows {
        let v = walk.level_sums_at(*l)?.sign_inner(chi.table())?;
        agree &= &v == regular;
        formula_counts.push((*l, v));
    }
    doc.method("formula")
        .output("formula_base_size", int(report.base_size.expect("faithful")))
        .output("formula_regular", trace(&formula_counts))
        .output("formula_equals_oracle", json!(agree));
    if !agree {
        doc.warn("formula and oracle disagree");
    }
    Ok(())
}

fn compare_partitions(
    doc: &mut ResultDocument,
    n: usize,
    r: usize,
    s: usize,
    oracle_b: Option<usize>,
    controlling: Option<bool>,
    rows: &[(usize, BigInt, Value)],
) -> Result<()> {
    let (chi, report) = base_size_partitions_action::<BigInt>(n, r, s, &PartitionsOptions::default())?;
    let mut walk = PowerWalk::new(&chi);
    let mut formula_counts = Vec::new();
    for (l, _, _) in rows {
        formula_counts.push((*l, walk.level_sums_at(*l)?.sign_inner(chi.table())?));
    }
    let equal = report.base_size.is_some() && report.base_size == oracle_b;
    doc.method("formula")
        .output("formula_min_l", report.base_size.map_or(Value::Null, int))
        .output("formula_sign_inner", trace(&formula_counts))
        .output("formula_equals_oracle", json!(equal));
    let verdict = match (controlling, equal) {
        (Some(true), true) => "sgn is base-controlling and the formula equals the oracle base size",
        (Some(true), false) => "INCONSISTENT: sgn is base-controlling but the formula differs from the oracle",
        (Some(false), true) => "sgn is not base-controlling; the formula happens to match the oracle",
        (Some(false), false) => "sgn is not base-controlling; the formula differs from the oracle",
        (None, _) => "base-controlling status unknown",
    };
    doc.output("verdict", json!(verdict));
    if controlling == Some(true) && !equal {
        return Err(Error::Consistency(verdict.into()));
    }
    Ok(())
}
