use clap::{Args, Subcommand};
use qset_core::lattice::{
    blocks, center, d_triple, dstar_triple, exists_global_valuation, greechie_valuation_fast,
    is_boolean_subalgebra, is_distributive, is_modular, parity_obstruction, t_triple, verify_oml,
    Element, Lattice,
};
use qset_core::modal::{diamond, homomorphisms, identity_extension, mks_verify, possibility_space};
use serde_json::{json, Map, Value};

use crate::input::Source;
use crate::report::{names, CliError, Report};

#[derive(Subcommand)]
pub enum LatticeCommand {
    /// Verify the orthomodular lattice laws.
    Check(Input),
    /// Central elements.
    Center(Input),
    /// Maximal Boolean subalgebras.
    Blocks(Input),
    /// Distributive triples: one named triple, or counts over all triples.
    Triples {
        #[command(flatten)]
        input: Input,
        /// Three comma-separated element names.
        #[arg(long, value_delimiter = ',')]
        triple: Option<Vec<String>>,
    },
    /// Search for a global valuation.
    Valuation {
        #[command(flatten)]
        input: Input,
        /// Search the diagram directly instead of the pasted lattice.
        #[arg(long)]
        fast: bool,
    },
    /// Least central element above an element.
    Diamond {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        element: String,
    },
    /// Subalgebra generated by the possibility images.
    PossibilitySpace(Input),
    /// Compare global valuations with compatible actualizations.
    Mks(Input),
}

#[derive(Args)]
pub struct Input {
    /// Greechie diagram file (JSON with `atoms` and `blocks`) or `builtin:NAME`.
    #[arg(long = "in", value_name = "FILE")]
    input: String,
}

impl Input {
    fn inputs(&self) -> Value {
        json!({"in": self.input})
    }
}

fn summary(l: &Lattice) -> Value {
    json!({"elements": l.len(), "atoms": names(l, &l.atoms())})
}

pub fn run(cmd: &LatticeCommand) -> Result<Report, CliError> {
    match cmd {
        LatticeCommand::Check(input) => check(input),
        LatticeCommand::Center(input) => {
            let l = Source::load(&input.input)?.lattice()?;
            let z = center(&l);
            let results = json!({
                "lattice": summary(&l),
                "center": names(&l, &z),
                "boolean": is_boolean_subalgebra(&l, &z),
            });
            Ok(Report::new("lattice center", input.inputs(), results, true))
        }
        LatticeCommand::Blocks(input) => {
            let l = Source::load(&input.input)?.lattice()?;
            let bs: Vec<Value> = blocks(&l)
                .iter()
                .map(|b| json!({"atoms": names(&l, &b.atoms), "elements": names(&l, &b.elements)}))
                .collect();
            let results = json!({"lattice": summary(&l), "blocks": bs});
            Ok(Report::new("lattice blocks", input.inputs(), results, true))
        }
        LatticeCommand::Triples { input, triple } => triples(input, triple.as_deref()),
        LatticeCommand::Valuation { input, fast } => valuation(input, *fast),
        LatticeCommand::Diamond { input, element } => {
            let l = Source::load(&input.input)?.lattice()?;
            let ext = identity_extension(&l)?;
            let p = l.element(element)?;
            let d = diamond(&ext, p)?;
            let mut inputs = input.inputs();
            inputs["element"] = json!(element);
            let results = json!({"element": l.name(p), "diamond": l.name(d)});
            Ok(Report::new("lattice diamond", inputs, results, true))
        }
        LatticeCommand::PossibilitySpace(input) => {
            let l = Source::load(&input.input)?.lattice()?;
            let ext = identity_extension(&l)?;
            let space = possibility_space(&ext);
            let results = json!({
                "elements": names(&l, &space.elements),
                "atoms": names(&l, &space.atoms),
                "boolean": space.is_boolean,
                "homomorphisms": homomorphisms(&ext, &space).len(),
            });
            Ok(Report::new(
                "lattice possibility-space",
                input.inputs(),
                results,
                space.is_boolean,
            ))
        }
        LatticeCommand::Mks(input) => {
            let l = Source::load(&input.input)?.lattice()?;
            let ext = identity_extension(&l)?;
            let r = mks_verify(&ext);
            let results = json!({
                "extension": "identity",
                "has_global_valuation": r.has_global_valuation,
                "has_f_with_actualization": r.has_f_with_actualization,
                "theorem_holds": r.theorem_holds,
                "homomorphisms_checked": r.homomorphisms_checked,
                "witness_atom": r.witness_atom.map(|a| l.name(a).to_string()),
            });
            Ok(Report::new(
                "lattice mks",
                input.inputs(),
                results,
                r.theorem_holds,
            ))
        }
    }
}

fn check(input: &Input) -> Result<Report, CliError> {
    let source = Source::load(&input.input)?;
    let l = match source.lattice() {
        Ok(l) => l,
        Err(e) if e.kind == "NotOrthomodular" => {
            let results = json!({"orthomodular": false, "reason": e.message});
            return Ok(Report::new("lattice check", input.inputs(), results, false));
        }
        Err(e) => return Err(e),
    };
    let report = verify_oml(&l);
    let results = json!({
        "lattice": summary(&l),
        "orthomodular": report.ok,
        "violations": serde_json::to_value(&report.violations).expect("serializable"),
        "total_violations": report.total_violations,
        "distributive": is_distributive(&l),
        "modular": is_modular(&l),
    });
    Ok(Report::new(
        "lattice check",
        input.inputs(),
        results,
        report.ok,
    ))
}

fn triples(input: &Input, triple: Option<&[String]>) -> Result<Report, CliError> {
    let l = Source::load(&input.input)?.lattice()?;
    let mut inputs = input.inputs();
    let results = match triple {
        Some(t) if t.len() != 3 => {
            return Err(CliError::new(
                "Usage",
                "--triple takes exactly three element names",
            ));
        }
        Some(t) => {
            inputs["triple"] = json!(t);
            let (a, b, c) = (l.element(&t[0])?, l.element(&t[1])?, l.element(&t[2])?);
            json!({
                "d": d_triple(&l, a, b, c)?,
                "dstar": dstar_triple(&l, a, b, c)?,
                "t": t_triple(&l, a, b, c)?,
            })
        }
        None => {
            let (mut d, mut ds, mut t) = (0u64, 0u64, 0u64);
            for a in l.elements() {
                for b in l.elements() {
                    for c in l.elements() {
                        d += d_triple(&l, a, b, c)? as u64;
                        ds += dstar_triple(&l, a, b, c)? as u64;
                        t += t_triple(&l, a, b, c)? as u64;
                    }
                }
            }
            let total = (l.len() as u64).pow(3);
            json!({"d": d, "dstar": ds, "t": t, "total": total})
        }
    };
    Ok(Report::new("lattice triples", inputs, results, true))
}

fn assignment(pairs: impl IntoIterator<Item = (String, bool)>) -> Value {
    let mut m = Map::new();
    for (k, v) in pairs {
        m.insert(k, json!(v as u8));
    }
    Value::Object(m)
}

fn valuation(input: &Input, fast: bool) -> Result<Report, CliError> {
    let source = Source::load(&input.input)?;
    let mut inputs = input.inputs();
    inputs["fast"] = json!(fast);
    let diagram_search = |reason: Option<String>| -> Result<Report, CliError> {
        let g = source
            .diagram()
            .expect("only diagrams reach the diagram search");
        let found = greechie_valuation_fast(g)?;
        let results = json!({
            "method": "diagram",
            "pasting": reason.map_or(Value::Null, Value::String),
            "parity_obstruction": parity_obstruction(g),
            "valuation": found.clone().map_or(Value::String("none".into()), assignment),
        });
        Ok(Report::new(
            "lattice valuation",
            inputs.clone(),
            results,
            found.is_some(),
        ))
    };
    if fast && source.diagram().is_some() {
        return diagram_search(None);
    }
    let l = match source.lattice() {
        Ok(l) => l,
        Err(e) if e.kind == "NotOrthomodular" => return diagram_search(Some(e.message)),
        Err(e) => return Err(e),
    };
    let found = exists_global_valuation(&l);
    let atoms: Vec<Element> = l.atoms();
    let valuation = match &found {
        None => Value::String("none".into()),
        Some(v) => assignment(
            atoms
                .iter()
                .map(|&a| (l.name(a).to_string(), v.value(&l, a).unwrap_or(false))),
        ),
    };
    let results = json!({
        "method": "lattice",
        "valuation": valuation,
        "true_atoms": found.as_ref().map(|v| names(&l, &v.true_atoms())),
        "blocks": found.as_ref().map(|v| v.blocks.len()),
    });
    Ok(Report::new(
        "lattice valuation",
        inputs,
        results,
        found.is_some(),
    ))
}
