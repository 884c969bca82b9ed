//! Command-line front end.
//!
//! Exit codes: `0` every check passed, `1` a checked identity failed, `2` the
//! input or parameters were rejected.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::bipoly::{BiPoly, PolyJson, TermJson};
use crate::engines::{tutte_activities, tutte_deletion_contraction, tutte_subset_expansion};
use crate::error::{Error, Result};
use crate::identities::{
    classical_identities, first_coefficient_failure, verify_brylawski, verify_hyperbola,
};
use crate::structures::{self, Multigraph, RankedSet};

pub const EXIT_OK: u8 = 0;
pub const EXIT_IDENTITY_FAILED: u8 = 1;
pub const EXIT_BAD_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tutte",
    version,
    about = "Exact Tutte polynomials and Brylawski identity checks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Tutte polynomial of a graph file or rank table
    Tutte {
        file: PathBuf,
        #[arg(long, value_enum)]
        engine: Option<Engine>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check the Brylawski, hyperbola and coefficient identities
    Verify {
        file: PathBuf,
        /// Largest h checked (default m + 6)
        #[arg(long)]
        hmax: Option<u32>,
        #[arg(long, value_enum)]
        engine: Option<Engine>,
    },
    /// Generate a graph file or rank table from a test family
    Gen {
        #[arg(value_enum)]
        family: Family,
        /// Vertex count
        #[arg(long)]
        n: Option<usize>,
        /// Edge count or ground-set size
        #[arg(long)]
        m: Option<usize>,
        /// Rank of the ground set
        #[arg(long)]
        r: Option<u32>,
        /// Theta path lengths, comma separated
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Subset,
    Delcon,
    Activities,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Uniform,
    RandomRanked,
    CompleteGraph,
    Cycle,
    Theta,
    RandomMultigraph,
}

/// Output of `tutte --format json`: the polynomial JSON form plus `m` and `r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteJson {
    pub m: u32,
    pub r: u32,
    pub terms: Vec<TermJson>,
}

/// A parsed input file.
#[derive(Clone, Debug)]
pub enum Input {
    Graph(Multigraph),
    Ranks(RankedSet),
    /// A previously computed polynomial with its `(m, r)`.
    Poly {
        t: BiPoly,
        m: u32,
        r: u32,
    },
}

impl Input {
    pub fn parse(text: &str) -> Result<Input> {
        if !text.trim_start().starts_with('{') {
            return Ok(Input::Graph(Multigraph::parse(text)?));
        }
        let value: serde_json::Value = serde_json::from_str(text)?;
        if value.get("terms").is_some() {
            let poly: TutteJson = serde_json::from_value(value)?;
            let t = BiPoly::from_json(&PolyJson { terms: poly.terms })?;
            return Ok(Input::Poly {
                t,
                m: poly.m,
                r: poly.r,
            });
        }
        let rs = RankedSet::from_json_str(text)?;
        rs.validate()?;
        Ok(Input::Ranks(rs))
    }

    pub fn read(path: &Path) -> Result<Input> {
        Input::parse(&std::fs::read_to_string(path)?)
    }

    /// Ground-set size and total rank.
    pub fn size_and_rank(&self) -> (u32, u32) {
        match self {
            Input::Graph(g) => (g.edge_count() as u32, g.rank()),
            Input::Ranks(rs) => (rs.ground_size() as u32, rs.total_rank()),
            Input::Poly { m, r, .. } => (*m, *r),
        }
    }

    pub fn tutte(&self, engine: Option<Engine>) -> Result<BiPoly> {
        match (self, engine) {
            (Input::Poly { t, .. }, None) => Ok(t.clone()),
            (Input::Poly { .. }, Some(_)) => Err(Error::InvalidParameters(
                "--engine needs a graph or rank-table input".into(),
            )),
            (Input::Graph(g), None | Some(Engine::Delcon)) => Ok(tutte_deletion_contraction(g)),
            (Input::Graph(g), Some(Engine::Subset)) => {
                tutte_subset_expansion(&RankedSet::of_graph(g)?)
            }
            (Input::Graph(g), Some(Engine::Activities)) => Ok(tutte_activities(g)?.to_bipoly()),
            (Input::Ranks(rs), None | Some(Engine::Subset)) => tutte_subset_expansion(rs),
            (Input::Ranks(_), Some(engine)) => Err(Error::InvalidParameters(format!(
                "engine {engine:?} needs a graph input"
            ))),
        }
    }
}

pub fn render_tutte(t: &BiPoly, m: u32, r: u32, format: Format) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let json = TutteJson {
                m,
                r,
                terms: t.to_json().terms,
            };
            serde_json::to_string(&json)? + "\n"
        }
        Format::Text => {
            let terms: Vec<String> = t
                .terms()
                .map(|(i, j, c)| format!("t[{i}][{j}]={c}"))
                .collect();
            terms.join(", ") + "\n"
        }
        Format::Latex => t.to_latex() + "\n",
    })
}

fn cmd_tutte(
    path: &Path,
    engine: Option<Engine>,
    format: Format,
    out: &mut dyn Write,
) -> Result<u8> {
    let input = Input::read(path)?;
    let t = input.tutte(engine)?;
    let (m, r) = input.size_and_rank();
    out.write_all(render_tutte(&t, m, r, format)?.as_bytes())?;
    Ok(EXIT_OK)
}

fn cmd_verify(
    path: &Path,
    hmax: Option<u32>,
    engine: Option<Engine>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<u8> {
    let input = Input::read(path)?;
    let t = input.tutte(engine)?;
    let (m, r) = input.size_and_rank();
    if r > m {
        return Err(Error::InvalidParameters(format!(
            "rank {r} exceeds ground set size {m}"
        )));
    }
    let report = verify_brylawski(&t, m, r, hmax.unwrap_or(m + 6))?;
    serde_json::to_writer(&mut *out, &report.to_json())?;
    writeln!(out)?;

    let mut ok = report.overall;
    match report.first_failure() {
        Some(e) => writeln!(
            err,
            "brylawski: FAIL at h={} (lhs {} != rhs {})",
            e.h, e.lhs, e.rhs
        )?,
        None => writeln!(
            err,
            "brylawski: ok for h in 0..={}",
            report.entries.len() - 1
        )?,
    }
    match verify_hyperbola(&t, m, r) {
        Ok(true) => writeln!(err, "hyperbola: ok")?,
        Ok(false) => {
            ok = false;
            writeln!(err, "hyperbola: FAIL (expansion is not z^{m})")?;
        }
        Err(e) => {
            ok = false;
            writeln!(err, "hyperbola: FAIL ({e})")?;
        }
    }
    match first_coefficient_failure(&t, m, r, m + 3) {
        None => writeln!(err, "coefficient identity: ok for k in 0..={}", m + 3)?,
        Some((k, lhs)) => {
            ok = false;
            writeln!(err, "coefficient identity: FAIL at k={k} (lhs {lhs})")?;
        }
    }
    for (name, holds) in classical_identities(&t, m) {
        if !holds {
            ok = false;
            writeln!(err, "classical identity {name}: FAIL")?;
        }
    }
    Ok(if ok { EXIT_OK } else { EXIT_IDENTITY_FAILED })
}

fn need<T>(value: Option<T>, flag: &str, family: Family) -> Result<T> {
    value.ok_or_else(|| Error::InvalidParameters(format!("{family:?} needs --{flag}")))
}

pub fn generate(
    family: Family,
    n: Option<usize>,
    m: Option<usize>,
    r: Option<u32>,
    lengths: &[usize],
    seed: u64,
) -> Result<String> {
    let ranks =
        |rs: RankedSet| -> Result<String> { Ok(serde_json::to_string(&rs.to_json())? + "\n") };
    match family {
        Family::Uniform => ranks(RankedSet::uniform(
            need(r, "r", family)?,
            need(m, "m", family)?,
        )?),
        Family::RandomRanked => ranks(RankedSet::random(
            need(m, "m", family)?,
            need(r, "r", family)?,
            seed,
        )?),
        Family::CompleteGraph => Ok(structures::complete_graph(need(n, "n", family)?).to_text()),
        Family::Cycle => Ok(structures::cycle(need(n, "n", family)?)?.to_text()),
        Family::Theta => Ok(structures::theta(lengths)?.to_text()),
        Family::RandomMultigraph => {
            Ok(
                structures::random_multigraph(need(n, "n", family)?, need(m, "m", family)?, seed)?
                    .to_text(),
            )
        }
    }
}

fn execute(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Tutte {
            file,
            engine,
            format,
        } => cmd_tutte(&file, engine, format, out),
        Command::Verify { file, hmax, engine } => cmd_verify(&file, hmax, engine, out, err),
        Command::Gen {
            family,
            n,
            m,
            r,
            lengths,
            seed,
            output,
        } => {
            let text = generate(family, n, m, r, &lengths, seed)?;
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(EXIT_OK)
        }
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() {
                EXIT_BAD_INPUT
            } else {
                EXIT_OK
            };
        }
    };
    match execute(cli, out, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_BAD_INPUT
        }
    }
}
