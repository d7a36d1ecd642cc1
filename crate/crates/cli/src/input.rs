use std::fs;

use qset_core::lattice::fixtures::{builtin, Fixture};
use qset_core::lattice::{from_greechie, GreechieDiagram, Lattice};

use crate::report::CliError;

/// Where a lattice came from: a table-built lattice or a diagram to paste.
pub enum Source {
    Lattice(Lattice),
    Diagram(GreechieDiagram),
}

impl Source {
    pub fn load(location: &str) -> Result<Source, CliError> {
        if let Some(name) = location.strip_prefix("builtin:") {
            return match builtin(name) {
                Ok(Fixture::Lattice(l)) => Ok(Source::Lattice(l)),
                Ok(Fixture::Diagram(g)) => Ok(Source::Diagram(g)),
                Err(qset_core::Error::UnknownElement(_)) => Err(CliError::new(
                    "UnknownBuiltin",
                    format!("no built-in named `{name}`"),
                )),
                Err(e) => Err(e.into()),
            };
        }
        let text = fs::read_to_string(location)
            .map_err(|e| CliError::new("Io", format!("cannot read `{location}`: {e}")))?;
        let g: GreechieDiagram = serde_json::from_str(&text).map_err(|e| {
            CliError::new(
                "Parse",
                format!("line {}, column {}: {e}", e.line(), e.column()),
            )
        })?;
        g.validate()?;
        Ok(Source::Diagram(g))
    }

    pub fn lattice(&self) -> Result<Lattice, CliError> {
        match self {
            Source::Lattice(l) => Ok(l.clone()),
            Source::Diagram(g) => Ok(from_greechie(g)?),
        }
    }

    pub fn diagram(&self) -> Option<&GreechieDiagram> {
        match self {
            Source::Diagram(g) => Some(g),
            Source::Lattice(_) => None,
        }
    }
}
