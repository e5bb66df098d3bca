use std::fmt;
use std::io::{self, Write};

use awspec_core::{
    basic_lower_bound, build_spectrum, constant_volume_point, convert_r_to_t, convert_sasaki_to_t,
    convert_t_to_r, convert_t_to_sasaki, curvature_regime, f1, f2, first_eigenvalue_entry, int,
    sp2_multiplicity, spherical_triples_lex, volume_factor, BranchingOracle, MetricParams,
    NormalParams, Rational, SasakiFamily, SasakiParams, SpectrumQuery, SphericalTriple,
};
use serde_json::json;

use crate::checks;
use crate::output::{render, schema_tag, Cell, Format, Style, Table};
use crate::{
    CheckArgs, Command, ConvertArgs, CurveMode, CurvesArgs, FirstArgs, ParamKind, SpectrumArgs,
    TableArgs, DEPTH_ENV, EXIT_INVARIANT,
};

#[derive(Debug)]
pub enum CliError {
    Core(awspec_core::Error),
    Usage(String),
    Io(io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Usage(m) => f.write_str(m),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl From<awspec_core::Error> for CliError {
    fn from(e: awspec_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

type CliResult<T> = Result<T, CliError>;

fn error_kind(e: &CliError) -> &'static str {
    use awspec_core::Error as E;
    match e {
        CliError::Usage(_) => "usage",
        CliError::Io(_) => "io",
        CliError::Core(core) => match core {
            E::BasisMismatch { .. } => "basis_mismatch",
            E::RankMismatch { .. } => "rank_mismatch",
            E::Domain(_) => "domain",
            E::NotSpherical { .. } => "not_spherical",
            E::NonPositiveMetric { .. } => "non_positive_metric",
            E::ParallelPoint(_) => "parallel_point",
            E::InvalidNormalParams { .. } => "invalid_normal_params",
            E::InvalidSasakiParams { .. } => "invalid_sasaki_params",
            E::NotARationalSquare(_) => "not_a_rational_square",
            E::NegativeBound(_) => "negative_bound",
            E::UnknownFamily(_) => "unknown_family",
            E::OracleBoundExceeded { .. } => "oracle_bound_exceeded",
        },
    }
}

pub fn report_error(e: &CliError, style: Style) {
    let kind = error_kind(e);
    if style.format == Format::Json {
        let doc = json!({
            "schema": schema_tag("error"),
            "error": { "kind": kind, "message": e.to_string() },
        });
        eprintln!("{doc}");
    } else {
        eprintln!("error[{kind}]: {e}");
    }
}

pub fn dispatch(cmd: Command, style: Style, out: &mut impl Write) -> CliResult<u8> {
    let (table, code) = match cmd {
        Command::Table(a) => (table(a), 0),
        Command::Spectrum(a) => (spectrum(a)?, 0),
        Command::First(a) => (first(a)?, 0),
        Command::Curves(a) => (curves(a)?, 0),
        Command::Check(a) => check(a)?,
        Command::Convert(a) => (convert(a)?, 0),
        Command::Sp2(a) => (sp2(a.max, a.spherical_only), 0),
        Command::Bound(a) => {
            let family: SasakiFamily = a.family.parse()?;
            let s = SasakiParams::new(a.alpha, a.delta)?;
            let bound = basic_lower_bound(family, a.n, &s)?;
            let mut t = Table::new("bound", ["family", "n", "alpha", "delta", "bound"]);
            t.push(vec![
                family.as_str().into(),
                a.n.into(),
                s.alpha().into(),
                s.delta().into(),
                bound.into(),
            ]);
            (t, 0)
        }
    };
    render(&table, style, out)?;
    Ok(code)
}

fn triple_row(t: &SphericalTriple) -> Vec<Cell> {
    let e = t.eigen_pair();
    vec![
        t.z1.into(),
        t.z2.into(),
        t.z3.into(),
        e.h.into(),
        e.v.into(),
        t.total_mult.into(),
    ]
}

fn table(a: TableArgs) -> Table {
    let mut t = Table::new("table", ["z1", "z2", "z3", "h", "v", "mult"]);
    let rows: Box<dyn Iterator<Item = SphericalTriple>> = match (a.size.first, a.size.zmax) {
        (Some(n), _) => Box::new(spherical_triples_lex().take(n as usize)),
        (None, Some(z)) => Box::new(spherical_triples_lex().take_while(move |t| t.z1 <= z)),
        (None, None) => unreachable!("clap enforces one of --first/--zmax"),
    };
    for triple in rows {
        t.push(triple_row(&triple));
    }
    t
}

fn format_triples(triples: &[SphericalTriple]) -> String {
    triples
        .iter()
        .map(|t| format!("{}:{}:{}", t.z1, t.z2, t.z3))
        .collect::<Vec<_>>()
        .join(";")
}

fn spectrum(a: SpectrumArgs) -> CliResult<Table> {
    let params = MetricParams::new(a.t0, a.t1)?;
    let query = match (a.range.bound, a.range.first) {
        (Some(b), _) => SpectrumQuery::UpTo(b),
        (None, Some(n)) => SpectrumQuery::FirstN(n as usize),
        (None, None) => unreachable!("clap enforces one of --bound/--first"),
    };
    let spec = build_spectrum(&params, query)?;
    let mut t = Table::new("spectrum", ["eigenvalue", "mult", "triples"]);
    for e in &spec.entries {
        t.push(vec![
            e.eigenvalue.clone().into(),
            e.multiplicity.into(),
            format_triples(&e.triples).into(),
        ]);
    }
    Ok(t)
}

fn first(a: FirstArgs) -> CliResult<Table> {
    let params = match a {
        FirstArgs {
            t0: Some(t0),
            t1: Some(t1),
            ..
        } => MetricParams::new(t0, t1)?,
        FirstArgs {
            alpha: Some(al),
            delta: Some(de),
            ..
        } => convert_sasaki_to_t(&SasakiParams::new(al, de)?),
        FirstArgs {
            r0: Some(r0),
            r1: Some(r1),
            ..
        } => convert_r_to_t(&NormalParams::new(r0, r1)?),
        _ => {
            return Err(CliError::Usage(
                "give exactly one of --t0/--t1, --alpha/--delta or --r0/--r1".into(),
            ))
        }
    };
    let entry = first_eigenvalue_entry(&params);
    let mut t = Table::new("first", ["eigenvalue", "triples", "regime", "t0", "t1"]);
    t.push(vec![
        entry.eigenvalue.into(),
        format_triples(&entry.triples).into(),
        curvature_regime(&params).as_str().into(),
        params.t0().into(),
        params.t1().into(),
    ]);
    Ok(t)
}

/// `samples` equally spaced exact points of [lo, hi].
fn sample_range(range: &[Rational], samples: u64, what: &str) -> CliResult<Vec<Rational>> {
    let (lo, hi) = (&range[0], &range[1]);
    if *lo <= int(0) || lo >= hi {
        return Err(CliError::Usage(format!(
            "{what} must satisfy 0 < A < B, got [{lo}, {hi}]"
        )));
    }
    let steps = int(samples as i64 - 1);
    Ok((0..samples as i64)
        .map(|i| lo + (hi - lo) * int(i) / &steps)
        .collect())
}

fn curves(a: CurvesArgs) -> CliResult<Table> {
    let branches: Vec<SphericalTriple> = spherical_triples_lex().skip(1).take(a.branches).collect();
    let branch_cols = branches
        .iter()
        .map(|t| format!("b_{}_{}_{}", t.z1, t.z2, t.z3));
    let branch_cells = |p: &MetricParams| -> Vec<Cell> {
        branches
            .iter()
            .map(|t| t.eigen_pair().at(p).into())
            .collect()
    };

    match a.mode {
        CurveMode::Raw | CurveMode::Estimates => {
            let range = a
                .t1_range
                .ok_or_else(|| CliError::Usage("--t1-range A B is required in this mode".into()))?;
            let t1s = sample_range(&range, a.samples, "--t1-range")?;
            let estimates = a.mode == CurveMode::Estimates;
            let mut cols: Vec<String> = vec!["t0".into(), "t1".into()];
            cols.extend(branch_cols);
            if estimates {
                cols.extend(["eta1", "f1", "f2", "f2_valid"].map(String::from));
            }
            let mut t = Table::new(
                if estimates {
                    "curves.estimates"
                } else {
                    "curves.raw"
                },
                cols,
            );
            for t1 in t1s {
                let p = MetricParams::new(a.t0.clone(), t1.clone())?;
                let mut row: Vec<Cell> = vec![p.t0().into(), p.t1().into()];
                row.extend(branch_cells(&p));
                if estimates {
                    let b2 = f2(&t1, a.n)?;
                    row.push(first_eigenvalue_entry(&p).eigenvalue.into());
                    row.push(f1(&t1, a.n)?.into());
                    row.push(b2.value.into());
                    row.push(b2.valid.into());
                }
                t.push(row);
            }
            Ok(t)
        }
        CurveMode::ConstantVolume => {
            let range = a.s_range.ok_or_else(|| {
                CliError::Usage("--s-range A B is required in constant_volume mode".into())
            })?;
            let ss = sample_range(&range, a.samples, "--s-range")?;
            if a.t0 <= int(0) {
                return Err(awspec_core::Error::NonPositiveMetric {
                    t0: a.t0,
                    t1: int(1),
                }
                .into());
            }
            let mut cols: Vec<String> = vec!["s".into(), "t0".into(), "t1".into()];
            cols.extend(branch_cols);
            // the normalised value is reported up to a universal constant
            cols.extend(["eta1", "volume_factor", "eta1_normalized"].map(String::from));
            let mut t = Table::new("curves.constant_volume", cols);
            for s in ss {
                let unit = constant_volume_point(&s)?;
                let p = MetricParams::new(&a.t0 * unit.t0(), unit.t1().clone())?;
                let eta = first_eigenvalue_entry(&p).eigenvalue;
                let vol = volume_factor(&p);
                let normalized = awspec_core::rational::to_f64(&eta)
                    * awspec_core::rational::to_f64(&vol).powf(1.0 / 7.0);
                let mut row: Vec<Cell> = vec![s.into(), p.t0().into(), p.t1().into()];
                row.extend(branch_cells(&p));
                row.push(eta.into());
                row.push(vol.into());
                row.push(normalized.into());
                t.push(row);
            }
            Ok(t)
        }
    }
}

fn depth_cap() -> CliResult<u32> {
    match std::env::var(DEPTH_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{DEPTH_ENV} must be a nonnegative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(awspec_core::oracle::DEFAULT_LIMIT),
    }
}

fn check(a: CheckArgs) -> CliResult<(Table, u8)> {
    let cap = depth_cap()?;
    if let Some(d) = a.depth {
        if d > cap {
            return Err(CliError::Usage(format!(
                "--depth {d} exceeds the oracle cap {cap} (set {DEPTH_ENV} to raise it)"
            )));
        }
    }
    let oracle = BranchingOracle::new(cap);
    let outcomes = checks::run(a.suite, a.depth, &oracle);
    let mut t = Table::new("check", ["suite", "status", "counterexample"]);
    let mut code = 0;
    for o in &outcomes {
        for note in &o.notes {
            eprintln!("note[{}]: {note}", o.suite);
        }
        if !o.passed() {
            code = EXIT_INVARIANT;
        }
        t.push(vec![
            o.suite.into(),
            if o.passed() { "pass" } else { "fail" }.into(),
            o.counterexample
                .clone()
                .map(Cell::Text)
                .unwrap_or(Cell::Empty),
        ]);
    }
    Ok((t, code))
}

fn to_metric(kind: ParamKind, x: Rational, y: Rational) -> CliResult<MetricParams> {
    Ok(match kind {
        ParamKind::T => MetricParams::new(x, y)?,
        ParamKind::R => convert_r_to_t(&NormalParams::new(x, y)?),
        ParamKind::Sasaki => convert_sasaki_to_t(&SasakiParams::new(x, y)?),
    })
}

fn convert(a: ConvertArgs) -> CliResult<Table> {
    let t = to_metric(a.from, a.first.clone(), a.second.clone())?;
    let (cols, values): ([&str; 2], [Rational; 2]) = match (a.from, a.to) {
        // identity conversions echo validated input exactly
        (ParamKind::R, ParamKind::R) | (ParamKind::Sasaki, ParamKind::Sasaki) => {
            let cols = if a.to == ParamKind::R {
                ["r0", "r1"]
            } else {
                ["alpha", "delta"]
            };
            (cols, [a.first, a.second])
        }
        (_, ParamKind::T) => (["t0", "t1"], [t.t0().clone(), t.t1().clone()]),
        (_, ParamKind::R) => {
            let r = convert_t_to_r(&t)?;
            (["r0", "r1"], [r.r0().clone(), r.r1().clone()])
        }
        (_, ParamKind::Sasaki) => {
            let s = convert_t_to_sasaki(&t)?;
            (["alpha", "delta"], [s.alpha().clone(), s.delta().clone()])
        }
    };
    let mut table = Table::new("convert", cols);
    let [x, y] = values;
    table.push(vec![x.into(), y.into()]);
    Ok(table)
}

fn sp2(max: u32, spherical_only: bool) -> Table {
    let mut t = Table::new("sp2", ["n1", "n2", "n3", "mult", "spherical"]);
    for n1 in 0..=max {
        for n2 in 0..=max {
            for n3 in 0..=max {
                let m = sp2_multiplicity(n1, n2, n3);
                if spherical_only && m == 0 {
                    continue;
                }
                t.push(vec![
                    n1.into(),
                    n2.into(),
                    n3.into(),
                    m.into(),
                    (m > 0).into(),
                ]);
            }
        }
    }
    t
}
