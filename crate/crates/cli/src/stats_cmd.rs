use clap::{Args, Subcommand};
use qset_core::stats::{
    count_arrangements, enumerate_arrangements, CountingProblem, CountingStatistics, DEFAULT_CAP,
};
use serde_json::{json, Value};

use crate::report::{object, CliError, Report};

#[derive(Subcommand)]
pub enum StatsCommand {
    /// Number of arrangements of N particles over K cells.
    Count(Problem),
    /// List every arrangement.
    Enumerate {
        #[command(flatten)]
        problem: Problem,
        /// Refuse to list more than this many arrangements.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u64,
    },
}

#[derive(Args)]
pub struct Problem {
    #[arg(long)]
    particles: usize,
    #[arg(long)]
    cells: usize,
    /// mb, be or fd; all three when omitted.
    #[arg(long)]
    statistics: Option<CountingStatistics>,
}

impl Problem {
    fn selected(&self) -> Vec<CountingStatistics> {
        match self.statistics {
            Some(s) => vec![s],
            None => CountingStatistics::ALL.to_vec(),
        }
    }

    fn inputs(&self) -> Value {
        json!({
            "particles": self.particles,
            "cells": self.cells,
            "statistics": self.statistics.map(|s| s.to_string()),
        })
    }
}

pub fn run(cmd: &StatsCommand) -> Result<Report, CliError> {
    match cmd {
        StatsCommand::Count(p) => {
            let counts = p
                .selected()
                .into_iter()
                .map(|s| {
                    let c = count_arrangements(&CountingProblem::new(p.particles, p.cells, s));
                    (s.short_name(), Value::String(c.to_string()))
                })
                .collect();
            Ok(Report::new("stats count", p.inputs(), object(counts), true))
        }
        StatsCommand::Enumerate { problem: p, cap } => {
            let mut entries = Vec::new();
            for s in p.selected() {
                let list =
                    enumerate_arrangements(&CountingProblem::new(p.particles, p.cells, s), *cap)?;
                let value = json!({
                    "count": list.len().to_string(),
                    "arrangements": serde_json::to_value(&list).expect("serializable"),
                });
                entries.push((s.short_name(), value));
            }
            let mut inputs = p.inputs();
            inputs["cap"] = json!(cap);
            Ok(Report::new(
                "stats enumerate",
                inputs,
                object(entries),
                true,
            ))
        }
    }
}
