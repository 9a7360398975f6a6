//! Command implementations behind the `homquiver` binary.
//!
//! Every command renders into a [`Rendered`] value so that the binary only
//! has to pick a destination and an exit status.

pub mod schema;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use homquiver::poly::{compositions, Poly};
use homquiver::quiver::scalar_entries;
use homquiver::schubert::SchubertCalculus;
use homquiver::stability::{cube_grid, TangentStability};
use homquiver::{
    boundary_2d, cone_membership, simplicity_report, tangent_rep, ArrowMode, ConeVerdict, ParabolicData,
    QuiverRep, RootSystemData, Verdict, Weight, DEFAULT_BUDGET,
};
use thiserror::Error;

use schema::*;

/// Largest rank for which `--parabolic all` is accepted.
pub const ALL_RANK_CAP: usize = 6;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] homquiver::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use homquiver::Error as E;
        match self {
            CliError::Core(E::BudgetExceeded { .. }) => EXIT_BUDGET,
            CliError::Core(E::Overflow | E::ComponentVerificationFailed(_)) => 1,
            CliError::Core(_) | CliError::Usage(_) => EXIT_INVALID,
            CliError::Io(_) | CliError::Json(_) | CliError::Csv(_) => 1,
        }
    }
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_REGRESSION: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Dot,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Full,
    Reduced,
}

impl From<ModeArg> for ArrowMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Full => ArrowMode::Full,
            ModeArg::Reduced => ArrowMode::Reduced,
        }
    }
}

/// Comma-separated simple root indices, `borel`, or `all`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParabolicSpec {
    Borel,
    All,
    Sigma(Vec<usize>),
}

impl FromStr for ParabolicSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "borel" => Ok(ParabolicSpec::Borel),
            "all" => Ok(ParabolicSpec::All),
            list => list
                .split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| format!("bad simple root index '{t}'")))
                .collect::<Result<Vec<_>, _>>()
                .map(ParabolicSpec::Sigma),
        }
    }
}

/// Comma-separated integers such as `1,10`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntList(pub Vec<i64>);

impl FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        s.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad integer '{t}'")))
            .collect::<Result<Vec<_>, _>>()
            .map(IntList)
    }
}

#[derive(Parser, Debug)]
#[command(name = "homquiver", version, about = "Tangent bundles of flag varieties as quiver representations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Args, Clone, Debug)]
pub struct CliConfig {
    /// Root system series (A, D or E).
    #[arg(long)]
    pub series: String,
    #[arg(long)]
    pub rank: usize,
    /// Simple roots removed from the Levi: `1,3`, `borel` or `all`.
    #[arg(long, default_value = "borel")]
    pub parabolic: ParabolicSpec,
    #[arg(long, value_enum, default_value = "full")]
    pub mode: ModeArg,
    #[arg(long, value_enum)]
    pub output: Option<OutputFormat>,
    /// Cap on the number of Weyl coset representatives.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Write to this file instead of standard output.
    #[arg(long = "out")]
    pub out_path: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Simple and positive roots with the Cartan matrix.
    Roots(CliConfig),
    /// Simplicity verdict for the tangent representation.
    Simplicity(CliConfig),
    /// Stability inequalities on the ample cone.
    Cone {
        #[command(flatten)]
        config: CliConfig,
        /// Closed-form slope boundary (two-parameter cones only).
        #[arg(long)]
        boundary: bool,
        /// CSV of verdicts on the cube `1..=N` in every coordinate.
        #[arg(long, conflicts_with = "section")]
        grid: Option<i64>,
        /// CSV of verdicts on the positive lattice points with coordinate sum `S`.
        #[arg(long)]
        section: Option<i64>,
    },
    /// The tangent quiver with its scalar maps.
    Quiver {
        #[command(flatten)]
        config: CliConfig,
        /// Use the Levi-level quiver (one vertex per irreducible summand).
        #[arg(long)]
        levi: bool,
    },
    /// Nonzero top intersection numbers of the Schubert divisors.
    Intersections(CliConfig),
    /// King's semistability criterion at a polarization.
    King {
        #[command(flatten)]
        config: CliConfig,
        /// Comma-separated positive coefficients of the polarization.
        #[arg(long)]
        polarization: IntList,
    },
}

/// Rendered output together with the exit status it implies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rendered {
    pub body: String,
    pub status: i32,
}

impl Rendered {
    fn ok(body: String) -> Self {
        Rendered { body, status: EXIT_OK }
    }
}

impl Command {
    pub fn config(&self) -> &CliConfig {
        match self {
            Command::Roots(c) | Command::Simplicity(c) | Command::Intersections(c) => c,
            Command::Cone { config, .. } | Command::Quiver { config, .. } | Command::King { config, .. } => config,
        }
    }
}

pub fn run(cli: &Cli) -> Result<Rendered, CliError> {
    let config = cli.command.config();
    let system = Arc::new(RootSystemData::from_name(&config.series, config.rank)?);
    match &cli.command {
        Command::Roots(c) => cmd_roots(&system, c),
        Command::Simplicity(c) => cmd_simplicity(&system, c),
        Command::Cone {
            config,
            boundary,
            grid,
            section,
        } => cmd_cone(&single(&system, config)?, config, *boundary, *grid, *section),
        Command::Quiver { config, levi } => cmd_quiver(&single(&system, config)?, config, *levi),
        Command::Intersections(c) => cmd_intersections(&single(&system, c)?, c),
        Command::King { config, polarization } => cmd_king(&single(&system, config)?, config, &polarization.0),
    }
}

fn parabolics(system: &Arc<RootSystemData>, spec: &ParabolicSpec) -> Result<Vec<ParabolicData>, CliError> {
    let r = system.rank();
    match spec {
        ParabolicSpec::Borel => Ok(vec![ParabolicData::borel(system.clone())]),
        ParabolicSpec::Sigma(s) => Ok(vec![ParabolicData::new(system.clone(), s)?]),
        ParabolicSpec::All if r > ALL_RANK_CAP => Err(CliError::Usage(format!(
            "--parabolic all is limited to rank <= {ALL_RANK_CAP}"
        ))),
        ParabolicSpec::All => (1u32..(1 << r))
            .map(|mask| {
                let sigma: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
                Ok(ParabolicData::new(system.clone(), &sigma)?)
            })
            .collect(),
    }
}

fn single(system: &Arc<RootSystemData>, c: &CliConfig) -> Result<ParabolicData, CliError> {
    if c.parabolic == ParabolicSpec::All {
        return Err(CliError::Usage("--parabolic all is only supported by `simplicity`".into()));
    }
    Ok(parabolics(system, &c.parabolic)?.remove(0))
}

fn format_of(c: &CliConfig, default: OutputFormat, allowed: &[OutputFormat]) -> Result<OutputFormat, CliError> {
    let f = c.output.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(CliError::Usage(format!("output format {f:?} is not available for this command")))
    }
}

fn json<T: serde::Serialize>(v: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn finish_csv(w: csv::Writer<Vec<u8>>) -> Result<String, CliError> {
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is ascii"))
}

fn weight_out(s: &RootSystemData, w: &Weight) -> WeightOut {
    WeightOut {
        weight2: w.coords2().to_vec(),
        fundamental: s.fundamental_coords(w),
    }
}

fn braces(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(|i| i.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub fn cmd_roots(system: &RootSystemData, c: &CliConfig) -> Result<Rendered, CliError> {
    let out = RootsOut {
        series: system.series().to_string(),
        rank: system.rank(),
        simple_roots: system.simple_roots().iter().map(|w| weight_out(system, w)).collect(),
        positive_roots: system.positive_roots().iter().map(|w| weight_out(system, w)).collect(),
        cartan: system.cartan_matrix().to_vec(),
    };
    match format_of(c, OutputFormat::Text, &[OutputFormat::Json, OutputFormat::Text])? {
        OutputFormat::Json => Ok(Rendered::ok(json(&out)?)),
        _ => {
            let mut t = String::new();
            let _ = writeln!(t, "{}{}: {} positive roots", out.series, out.rank, out.positive_roots.len());
            let _ = writeln!(t, "simple roots:");
            for (i, w) in system.simple_roots().iter().enumerate() {
                let _ = writeln!(t, "  alpha{} = {w}", i + 1);
            }
            let _ = writeln!(t, "cartan matrix:");
            for row in &out.cartan {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
                let _ = writeln!(t, "  {}", cells.join(" "));
            }
            let _ = writeln!(t, "positive roots:");
            for (i, w) in system.positive_roots().iter().enumerate() {
                let _ = writeln!(t, "  {w}  height {}", system.height(i));
            }
            Ok(Rendered::ok(t))
        }
    }
}

pub fn cmd_simplicity(system: &Arc<RootSystemData>, c: &CliConfig) -> Result<Rendered, CliError> {
    let format = format_of(c, OutputFormat::Text, &[OutputFormat::Json, OutputFormat::Text])?;
    let mut results = Vec::new();
    for p in parabolics(system, &c.parabolic)? {
        let r = simplicity_report(&p)?;
        results.push(SimplicityOut {
            sigma: p.sigma().to_vec(),
            dimension: p.dimension(),
            multiplicity_free: r.multiplicity_free,
            connected_components: r.connected_components,
            hom_dimension: r.hom_dimension,
            dominant_sums: r.dominant_sums.iter().map(|w| w.coords2().to_vec()).collect(),
            verdict: r.verdict,
        });
    }
    let regressions = results.iter().filter(|r| r.verdict != Verdict::Simple).count();
    let out = SimplicityList {
        series: system.series().to_string(),
        rank: system.rank(),
        results,
    };
    let body = match format {
        OutputFormat::Json => json(&out)?,
        _ => {
            let mut t = String::new();
            for r in &out.results {
                let _ = writeln!(
                    t,
                    "{}{} sigma={} dim={} hom={} components={} {}",
                    out.series,
                    out.rank,
                    braces(&r.sigma),
                    r.dimension,
                    r.hom_dimension,
                    r.connected_components,
                    r.verdict
                );
            }
            let _ = writeln!(t, "{} parabolics, {} not SIMPLE", out.results.len(), regressions);
            t
        }
    };
    Ok(Rendered {
        body,
        status: if regressions == 0 { EXIT_OK } else { EXIT_REGRESSION },
    })
}

/// Terms in the same order as the printed polynomial.
fn monomials(p: &Poly) -> Vec<MonomialOut> {
    let mut v: Vec<MonomialOut> = p
        .terms()
        .map(|(e, c)| MonomialOut { exps: e.to_vec(), coeff: c })
        .collect();
    v.reverse();
    v
}

fn check_points(points: &[Vec<i64>], k: usize) -> Result<(), CliError> {
    if points.is_empty() {
        return Err(CliError::Usage(format!("no sample points with {k} positive coordinates")));
    }
    Ok(())
}

pub fn cmd_cone(
    p: &ParabolicData,
    c: &CliConfig,
    boundary: bool,
    grid: Option<i64>,
    section: Option<i64>,
) -> Result<Rendered, CliError> {
    let st = TangentStability::new(p, c.budget)?;
    let ineqs = st.inequalities()?;
    let k = p.picard_rank();
    let points = match (grid, section) {
        (Some(n), _) => Some(cube_grid(k, n)),
        (None, Some(s)) if s >= k as i64 => Some(
            compositions((s - k as i64) as u32, k)
                .into_iter()
                .map(|e| e.iter().map(|&x| x as i64 + 1).collect())
                .collect(),
        ),
        (None, Some(_)) => Some(Vec::new()),
        (None, None) => None,
    };
    if let Some(points) = points {
        check_points(&points, k)?;
        format_of(c, OutputFormat::Csv, &[OutputFormat::Csv])?;
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header: Vec<String> = (0..k).map(|i| Poly::variable_name(i, k)).collect();
        header.push("verdict".into());
        w.write_record(&header)?;
        for h in &points {
            let mut row: Vec<String> = h.iter().map(|x| x.to_string()).collect();
            row.push(cone_membership(&ineqs, h)?.to_string());
            w.write_record(&row)?;
        }
        return Ok(Rendered::ok(finish_csv(w)?));
    }
    let bound = if boundary {
        let b = boundary_2d(&ineqs)?;
        Some(BoundaryOut {
            lower: b.lower.map(SurdOut::from),
            upper: b.upper.map(SurdOut::from),
            rational_endpoint: b.rational_endpoint,
        })
    } else {
        None
    };
    let out = ConeOut {
        series: p.system().series().to_string(),
        rank: p.system().rank(),
        sigma: p.sigma().to_vec(),
        canonical: st.c1.clone(),
        inequalities: ineqs
            .iter()
            .map(|i| InequalityOut {
                subbundle: i.subbundle.clone(),
                polynomial: i.polynomial.to_string(),
                monomials: monomials(&i.polynomial),
                strict: i.strict,
            })
            .collect(),
        boundary: bound,
    };
    match format_of(c, OutputFormat::Json, &[OutputFormat::Json, OutputFormat::Text])? {
        OutputFormat::Json => Ok(Rendered::ok(json(&out)?)),
        _ => {
            let mut t = String::new();
            let _ = writeln!(t, "{} inequalities (stable iff all > 0)", out.inequalities.len());
            for i in &out.inequalities {
                let _ = writeln!(t, "  {}: {} > 0", braces(&i.subbundle), i.polynomial);
            }
            if let Some(b) = &out.boundary {
                let show = |s: &Option<SurdOut>, none: &str| s.as_ref().map_or(none.to_string(), |s| s.exact.clone());
                let _ = writeln!(
                    t,
                    "stable slopes b/a in ({}, {})",
                    show(&b.lower, "0"),
                    show(&b.upper, "inf")
                );
            }
            Ok(Rendered::ok(t))
        }
    }
}

fn quiver_out(rep: &QuiverRep) -> QuiverOut {
    let q = rep.quiver();
    let s = q.parabolic().system();
    let scalars = scalar_entries(rep);
    QuiverOut {
        vertices: q
            .vertices()
            .iter()
            .zip(rep.dims())
            .map(|(w, &dim)| VertexOut {
                weight2: w.coords2().to_vec(),
                fundamental: s.fundamental_coords(w),
                dim,
            })
            .collect(),
        arrows: q
            .arrows()
            .iter()
            .zip(scalars)
            .map(|(a, scalar)| ArrowOut {
                src: a.source,
                dst: a.target,
                label2: a.label.coords2().to_vec(),
                scalar,
            })
            .collect(),
    }
}

pub fn cmd_quiver(p: &ParabolicData, c: &CliConfig, levi: bool) -> Result<Rendered, CliError> {
    let format = format_of(
        c,
        OutputFormat::Dot,
        &[OutputFormat::Dot, OutputFormat::Json, OutputFormat::Text],
    )?;
    let t = tangent_rep(p)?;
    let base = if levi { t.levi_rep } else { t.rep };
    let rep = match ArrowMode::from(c.mode) {
        ArrowMode::Full => base,
        ArrowMode::Reduced => base.reduced_view()?,
    };
    match format {
        OutputFormat::Dot => Ok(Rendered::ok(rep.to_dot())),
        OutputFormat::Json => Ok(Rendered::ok(json(&quiver_out(&rep))?)),
        _ => {
            let q = rep.quiver();
            let scalars = scalar_entries(&rep);
            let mut s = String::new();
            let _ = writeln!(s, "{} vertices, {} arrows", q.vertices().len(), q.arrows().len());
            for (i, (w, d)) in q.vertices().iter().zip(rep.dims()).enumerate() {
                let _ = writeln!(s, "  v{i} {w} dim {d}");
            }
            for (a, sc) in q.arrows().iter().zip(scalars) {
                let label = sc.map_or("matrix".to_string(), |x| x.to_string());
                let _ = writeln!(s, "  v{} -> v{} by {} : {label}", a.source, a.target, a.label);
            }
            Ok(Rendered::ok(s))
        }
    }
}

pub fn cmd_intersections(p: &ParabolicData, c: &CliConfig) -> Result<Rendered, CliError> {
    let format = format_of(
        c,
        OutputFormat::Csv,
        &[OutputFormat::Csv, OutputFormat::Json, OutputFormat::Text],
    )?;
    let calc = SchubertCalculus::new(p, c.budget)?;
    let k = p.picard_rank();
    let rows: Vec<IntersectionRow> = calc
        .intersection_table()?
        .into_iter()
        .filter(|(_, v)| *v != 0)
        .map(|(exps, value)| IntersectionRow { exps, value })
        .collect();
    match format {
        OutputFormat::Json => Ok(Rendered::ok(json(&IntersectionsOut {
            series: p.system().series().to_string(),
            rank: p.system().rank(),
            sigma: p.sigma().to_vec(),
            rows,
        })?)),
        OutputFormat::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let mut header: Vec<String> = (0..k).map(|i| Poly::variable_name(i, k)).collect();
            header.push("value".into());
            w.write_record(&header)?;
            for r in &rows {
                let mut rec: Vec<String> = r.exps.iter().map(|x| x.to_string()).collect();
                rec.push(r.value.to_string());
                w.write_record(&rec)?;
            }
            Ok(Rendered::ok(finish_csv(w)?))
        }
        _ => {
            let mut t = String::new();
            for r in &rows {
                let m = Poly::monomial(r.exps.clone(), 1);
                let _ = writeln!(t, "{m} = {}", r.value);
            }
            Ok(Rendered::ok(t))
        }
    }
}

pub fn cmd_king(p: &ParabolicData, c: &CliConfig, h: &[i64]) -> Result<Rendered, CliError> {
    let format = format_of(c, OutputFormat::Text, &[OutputFormat::Json, OutputFormat::Text])?;
    let st = TangentStability::new(p, c.budget)?;
    let king = st.king(h)?;
    let cone = cone_membership(&st.inequalities()?, h)?;
    let sigma = st.sigma(h)?;
    let verdict = if king.stable {
        ConeVerdict::Stable
    } else if king.semistable {
        ConeVerdict::StrictlySemistableBoundary
    } else {
        ConeVerdict::Unstable
    };
    let vertices = st.tangent.levi_rep.quiver().vertices();
    let out = KingOut {
        polarization: h.to_vec(),
        sigma: sigma.values.clone(),
        semistable: king.semistable,
        stable: king.stable,
        verdict,
        cone,
        witness: king.witness.clone(),
        witness_weights: king
            .witness
            .as_ref()
            .map(|w| w.iter().map(|&v| vertices[v].coords2().to_vec()).collect()),
    };
    match format {
        OutputFormat::Json => Ok(Rendered::ok(json(&out)?)),
        _ => {
            let mut t = format!("{}\n", out.verdict);
            if let Some(w) = &out.witness {
                let ws: Vec<String> = w.iter().map(|&v| vertices[v].to_string()).collect();
                let _ = writeln!(t, "witness {} = [{}]", braces(w), ws.join(", "));
            }
            let _ = writeln!(t, "cone verdict {}", out.cone);
            Ok(Rendered::ok(t))
        }
    }
}
