use clap::{ArgGroup, Args, Subcommand};
use qset_core::fock::{
    annihilate, anticommutator, basis_states, commutator, create, inner, is_null, kronecker,
    norm_squared, parse_vector, particle_number, similar,
};
use qset_core::oracle::compare_all;
use qset_core::{FockVector, ModeIndex, Statistics};
use serde_json::{json, Value};

use crate::report::{complex, object, vector, CliError, Report};

#[derive(Subcommand)]
pub enum FockCommand {
    /// Scalar product <left|right>, conjugate-linear on the left.
    Inner(Pair),
    /// Squared norm <v|v>.
    Norm(Single),
    /// Whether the vector is orthogonal to every vector.
    Null(Single),
    /// Whether two vectors differ by a null vector.
    Similar(Pair),
    /// Total occupation, if every term shares it.
    Number(Single),
    /// Apply one creation or annihilation operator.
    Ladder(Ladder),
    /// Check the (anti)commutation relations on every basis state.
    Commutators {
        #[arg(long)]
        modes: u32,
        #[arg(long)]
        max_particles: usize,
    },
    /// Compare the occupation-number products with the labeled construction.
    OracleCompare {
        #[arg(long)]
        max_particles: usize,
        #[arg(long)]
        max_modes: u32,
        /// boson or fermion; both when omitted.
        #[arg(long)]
        stats: Option<Statistics>,
    },
}

#[derive(Args)]
pub struct Single {
    #[arg(long)]
    stats: Statistics,
    #[arg(long)]
    state: String,
}

#[derive(Args)]
pub struct Pair {
    #[arg(long)]
    stats: Statistics,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
}

#[derive(Args)]
#[command(group(ArgGroup::new("op").required(true).args(["create", "annihilate"])))]
pub struct Ladder {
    #[arg(long)]
    stats: Statistics,
    #[arg(long)]
    state: String,
    #[arg(long)]
    create: Option<u32>,
    #[arg(long)]
    annihilate: Option<u32>,
}

fn parse(flag: &str, text: &str, stats: Statistics) -> Result<FockVector, CliError> {
    parse_vector(text, stats).map_err(|e| CliError::new(e.kind(), format!("--{flag}: {e}")))
}

fn both(stats: Option<Statistics>) -> Vec<Statistics> {
    match stats {
        Some(s) => vec![s],
        None => vec![Statistics::Boson, Statistics::Fermion],
    }
}

pub fn run(cmd: &FockCommand) -> Result<Report, CliError> {
    match cmd {
        FockCommand::Inner(p) => {
            let (u, v) = (
                parse("left", &p.left, p.stats)?,
                parse("right", &p.right, p.stats)?,
            );
            let z = inner(&u, &v, p.stats)?;
            let inputs =
                json!({"stats": p.stats.to_string(), "left": vector(&u), "right": vector(&v)});
            Ok(Report::new(
                "fock inner",
                inputs,
                json!({"inner": complex(&z)}),
                true,
            ))
        }
        FockCommand::Norm(s) => {
            let v = parse("state", &s.state, s.stats)?;
            let results = json!({"norm_squared": complex(&norm_squared(&v))});
            Ok(Report::new(
                "fock norm",
                single_inputs(s, &v),
                results,
                true,
            ))
        }
        FockCommand::Null(s) => {
            let v = parse("state", &s.state, s.stats)?;
            let is_null = is_null(&v);
            Ok(Report::new(
                "fock null",
                single_inputs(s, &v),
                json!({"null": is_null}),
                is_null,
            ))
        }
        FockCommand::Similar(p) => {
            let (u, v) = (
                parse("left", &p.left, p.stats)?,
                parse("right", &p.right, p.stats)?,
            );
            let sim = similar(&u, &v)?;
            let inputs =
                json!({"stats": p.stats.to_string(), "left": vector(&u), "right": vector(&v)});
            Ok(Report::new(
                "fock similar",
                inputs,
                json!({"similar": sim}),
                sim,
            ))
        }
        FockCommand::Number(s) => {
            let v = parse("state", &s.state, s.stats)?;
            let n = particle_number(&v)?;
            Ok(Report::new(
                "fock number",
                single_inputs(s, &v),
                json!({"particle_number": n, "defined": n.is_some()}),
                true,
            ))
        }
        FockCommand::Ladder(l) => {
            let v = parse("state", &l.state, l.stats)?;
            let (op, mode, out) = match (l.create, l.annihilate) {
                (Some(m), _) => ("create", m, create(ModeIndex(m), &v)),
                (None, Some(m)) => ("annihilate", m, annihilate(ModeIndex(m), &v)),
                (None, None) => unreachable!("clap requires one operator"),
            };
            let inputs = json!({"stats": l.stats.to_string(), "state": vector(&v), "operator": op, "mode": mode});
            Ok(Report::new(
                "fock ladder",
                inputs,
                json!({"result": vector(&out)}),
                true,
            ))
        }
        FockCommand::Commutators {
            modes,
            max_particles,
        } => {
            let mut ok = true;
            let mut entries = Vec::new();
            for stats in both(None) {
                let (checked, failures) = relations(stats, *modes, *max_particles);
                ok &= failures.is_empty();
                entries.push((
                    stats_key(stats),
                    json!({"checked": checked, "failures": failures}),
                ));
            }
            let inputs = json!({"modes": modes, "max_particles": max_particles});
            Ok(Report::new("fock commutators", inputs, object(entries), ok))
        }
        FockCommand::OracleCompare {
            max_particles,
            max_modes,
            stats,
        } => {
            let mut ok = true;
            let mut entries = Vec::new();
            for s in both(*stats) {
                let summary = compare_all(*max_particles, *max_modes, s);
                ok &= summary.ok();
                let failures: Vec<Value> = summary
                    .failures
                    .iter()
                    .map(|(a, b)| json!([a.to_string(), b.to_string()]))
                    .collect();
                entries.push((
                    stats_key(s),
                    json!({"pairs_checked": summary.pairs_checked, "failures": failures}),
                ));
            }
            let inputs = json!({
                "max_particles": max_particles,
                "max_modes": max_modes,
                "stats": stats.map(|s| s.to_string()),
            });
            Ok(Report::new(
                "fock oracle-compare",
                inputs,
                object(entries),
                ok,
            ))
        }
    }
}

fn stats_key(s: Statistics) -> &'static str {
    match s {
        Statistics::Boson => "boson",
        Statistics::Fermion => "fermion",
    }
}

fn single_inputs(s: &Single, v: &FockVector) -> Value {
    json!({"stats": s.stats.to_string(), "state": vector(v)})
}

/// Commutators for bosons (exact) or anticommutators for fermions (up to
/// null vectors) on every basis state and every pair of modes.
fn relations(stats: Statistics, modes: u32, max_particles: usize) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for n in 0..=max_particles {
        for state in basis_states(n, modes, stats, true) {
            let v = FockVector::from_state(&state);
            for i in 0..modes {
                for j in 0..modes {
                    let (i, j) = (ModeIndex(i), ModeIndex(j));
                    checked += 1;
                    let delta = kronecker(i, j, &v);
                    let holds = match stats {
                        Statistics::Boson => commutator(i, j, &v) == delta,
                        Statistics::Fermion => {
                            similar(&anticommutator(i, j, &v), &delta).unwrap_or(false)
                        }
                    };
                    if !holds {
                        failures.push(format!("({i},{j}) on {state}"));
                    }
                }
            }
        }
    }
    (checked, failures)
}
