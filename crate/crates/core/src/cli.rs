//! Command-line front end with machine-readable JSON output.
//!
//! Every command prints a single JSON envelope on stdout; diagnostics go to
//! stderr. Multiplicities are serialized as decimal strings so arbitrary
//! precision survives every JSON parser.
//!
//! Exit codes: 0 pass, 1 verification mismatch, 2 I/O failure,
//! 3 invalid input or budget.

use std::io::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cayley::{build_phi_map, cayley_graph, connection_set_eh, verify_isomorphism};
use crate::error::Error;
use crate::families::{GraphFamily, GraphSpec};
use crate::graph::Graph;
use crate::metrics::{
    diameter, distance_regularity_check, distance_regularity_check_sampled, DRReport,
    DR_VERTEX_BUDGET,
};
use crate::oracle::{closed_form_spectrum, verify_spectrum_claim, VerifyOptions};
use crate::spectra::{spectrum_extended_hamming_fine, Spectrum};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FamilyArg {
    Q,
    Fq,
    H,
    Eh,
}

impl From<FamilyArg> for GraphFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Q => GraphFamily::Hypercube,
            FamilyArg::Fq => GraphFamily::FoldedHypercube,
            FamilyArg::H => GraphFamily::Hamming,
            FamilyArg::Eh => GraphFamily::ExtendedHamming,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Dimacs,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "exthamming", version, about = "Hamming-family graph toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family instance and write it to a file.
    Generate {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        /// Alphabet size (Hamming only; defaults to 2^n).
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        /// Output path; defaults to <family>_n<n>.<ext> in the working directory.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the closed-form spectrum.
    Spectrum {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u64>,
        /// Also emit the fine (i,t) eigenvalue table (extended Hamming only).
        #[arg(long)]
        fine: bool,
    },
    /// Run oracle checks of the closed-form spectrum against the graph.
    Verify {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u64>,
        /// Comma-separated engines: character, moments, rank.
        #[arg(long, default_value = "character,moments,rank")]
        oracle: String,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Test hook: corrupt one multiplicity before checking.
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Exact diameter.
    Diameter {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u64>,
    },
    /// Distance-regularity check with witness extraction.
    Drcheck {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Verify the Cayley presentation of EH(n,2^n) edge by edge.
    CayleyCheck {
        #[arg(long)]
        n: u32,
    },
}

fn spectrum_json(s: &Spectrum) -> Value {
    json!({
        "eigenvalues": s.entries().iter().map(|(ev, m)| {
            json!({"value": ev, "multiplicity": m.to_string()})
        }).collect::<Vec<_>>()
    })
}

fn dr_report_json(r: &DRReport) -> Value {
    serde_json::to_value(r).expect("report serializes")
}

fn envelope(command: &str, spec: Option<&GraphSpec>, status: &str, payload: Value) -> Value {
    json!({
        "tool_version": TOOL_VERSION,
        "command": command,
        "spec": spec.map(|s| json!({"family": s.family.tag(), "n": s.n, "m": s.m})),
        "status": status,
        "payload": payload,
    })
}

fn error_exit_code(e: &Error) -> u8 {
    match e {
        Error::Io(_) => 2,
        _ => 3,
    }
}

fn write_edgelist(g: &Graph, out: &mut dyn std::io::Write) -> std::io::Result<()> {
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

fn write_dimacs(g: &Graph, out: &mut dyn std::io::Write) -> std::io::Result<()> {
    writeln!(out, "p edge {} {}", g.vertex_count(), g.edge_count())?;
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1)?;
    }
    Ok(())
}

fn write_json_adjacency(g: &Graph, out: &mut dyn std::io::Write) -> std::io::Result<()> {
    let mut adjacency = serde_json::Map::new();
    for v in 0..g.vertex_count() {
        adjacency.insert(v.to_string(), json!(g.neighbors(v)));
    }
    let doc = json!({"vertices": g.vertex_count(), "adjacency": adjacency});
    writeln!(out, "{}", serde_json::to_string(&doc)?)
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Generate { .. } => "generate",
        Command::Spectrum { .. } => "spectrum",
        Command::Verify { .. } => "verify",
        Command::Diameter { .. } => "diameter",
        Command::Drcheck { .. } => "drcheck",
        Command::CayleyCheck { .. } => "cayley-check",
    }
}

/// Run a parsed command; prints the JSON envelope and returns the exit code.
pub fn run(cli: Cli) -> u8 {
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok((spec, status, payload, code)) => {
            println!("{}", envelope(name, spec.as_ref(), status, payload));
            code
        }
        Err(e) => {
            eprintln!("error: {e}");
            println!(
                "{}",
                envelope(name, None, "error", json!({"message": e.to_string()}))
            );
            error_exit_code(&e)
        }
    }
}

type CommandOutcome = (Option<GraphSpec>, &'static str, Value, u8);

fn dispatch(command: Command) -> crate::Result<CommandOutcome> {
    match command {
        Command::Generate { family, n, m, format, out } => {
            let spec = GraphSpec::new(family.into(), n, m)?;
            let graph = spec.build()?;
            let ext = match format {
                FormatArg::Edgelist => "edgelist",
                FormatArg::Dimacs => "dimacs",
                FormatArg::Json => "json",
            };
            let path = out.unwrap_or_else(|| {
                PathBuf::from(format!("{}_n{}.{ext}", spec.family.tag(), spec.n))
            });
            let file = std::fs::File::create(&path)?;
            let mut writer = std::io::BufWriter::new(file);
            match format {
                FormatArg::Edgelist => write_edgelist(&graph, &mut writer)?,
                FormatArg::Dimacs => write_dimacs(&graph, &mut writer)?,
                FormatArg::Json => write_json_adjacency(&graph, &mut writer)?,
            }
            writer.flush()?;
            let payload = json!({
                "path": path.display().to_string(),
                "format": ext,
                "vertices": graph.vertex_count(),
                "edges": graph.edge_count(),
            });
            Ok((Some(spec), "ok", payload, 0))
        }
        Command::Spectrum { family, n, m, fine } => {
            let spec = GraphSpec::new(family.into(), n, m)?;
            let spectrum = closed_form_spectrum(&spec)?;
            let mut payload = spectrum_json(&spectrum);
            if fine {
                if spec.family != GraphFamily::ExtendedHamming {
                    return Err(Error::InvalidParameter(
                        "--fine applies only to the extended Hamming family".into(),
                    ));
                }
                let table = spectrum_extended_hamming_fine(spec.n)?;
                payload["rows"] = table
                    .rows
                    .iter()
                    .map(|r| {
                        json!({
                            "i": r.i, "t": r.t, "theta": r.theta,
                            "multiplicity": r.multiplicity.to_string(),
                        })
                    })
                    .collect();
            }
            Ok((Some(spec), "ok", payload, 0))
        }
        Command::Verify { family, n, m, oracle, kmax, seed, perturb } => {
            let spec = GraphSpec::new(family.into(), n, m)?;
            let mut opts = VerifyOptions {
                character: false,
                moments: false,
                rank: false,
                kmax,
                seed,
                ..VerifyOptions::default()
            };
            for engine in oracle.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                match engine {
                    "character" => opts.character = true,
                    "moments" => opts.moments = true,
                    "rank" => opts.rank = true,
                    other => {
                        return Err(Error::InvalidParameter(format!(
                            "unknown oracle engine: {other}"
                        )))
                    }
                }
            }
            let mut claimed = closed_form_spectrum(&spec)?;
            if perturb {
                claimed = Spectrum::from_pairs(claimed.entries().iter().enumerate().map(
                    |(idx, (ev, mult))| {
                        let mult = if idx == 0 {
                            mult + 1u32
                        } else {
                            mult.clone()
                        };
                        (*ev, mult)
                    },
                ));
            }
            let report = verify_spectrum_claim(&spec, &claimed, &opts)?;
            let status = if report.overall { "ok" } else { "fail" };
            let code = if report.overall { 0 } else { 1 };
            let payload = serde_json::to_value(&report).expect("report serializes");
            Ok((Some(spec), status, payload, code))
        }
        Command::Diameter { family, n, m } => {
            let spec = GraphSpec::new(family.into(), n, m)?;
            let graph = spec.build()?;
            let d = diameter(&graph)?;
            Ok((Some(spec), "ok", json!({"diameter": d}), 0))
        }
        Command::Drcheck { family, n, m, seed } => {
            let spec = GraphSpec::new(family.into(), n, m)?;
            let graph = spec.build()?;
            let report = if graph.vertex_count() <= DR_VERTEX_BUDGET {
                distance_regularity_check(&graph)?
            } else {
                distance_regularity_check_sampled(&graph, 16, seed)?
            };
            // Expected classification: Q, FQ, H are distance regular; EH is not.
            let expect_dr = spec.family != GraphFamily::ExtendedHamming;
            let as_expected = report.is_dr == expect_dr;
            let status = if as_expected { "ok" } else { "fail" };
            let code = if as_expected { 0 } else { 1 };
            Ok((Some(spec), status, dr_report_json(&report), code))
        }
        Command::CayleyCheck { n } => {
            let spec = GraphSpec::new(GraphFamily::ExtendedHamming, n, None)?;
            let eh = spec.build()?;
            let s = connection_set_eh(n)?;
            let cay = cayley_graph(n * n, &s)?;
            let map = build_phi_map(n)?;
            let report = verify_isomorphism(&eh, &cay, &map)?;
            let status = if report.ok { "ok" } else { "fail" };
            let code = if report.ok { 0 } else { 1 };
            let payload = serde_json::to_value(&report).expect("report serializes");
            Ok((Some(spec), status, payload, code))
        }
    }
}
