//! Loading complexes from files or the built-in catalog.

use std::fs;
use std::path::Path;

use artin_core::catalog;
use artin_core::format::{parse_input, Input};
use artin_core::{clique_complex, SimplicialComplex};

/// Where a complex came from, echoed in every report.
pub struct Loaded {
    pub source: String,
    pub complex: SimplicialComplex,
}

pub fn load(path: Option<&Path>, catalog_name: Option<&str>, flag_of_graph: bool) -> Result<Loaded, String> {
    match (path, catalog_name) {
        (Some(_), Some(_)) => Err("give either an input file or --catalog, not both".into()),
        (None, None) => Err("no input: give a complex file or --catalog <name>".into()),
        (None, Some(name)) => {
            let complex = catalog::get(name).ok_or_else(|| {
                format!("unknown catalog entry `{name}`; known: {}, delta<n>", catalog::names().join(", "))
            })?;
            Ok(Loaded { source: format!("catalog:{name}"), complex })
        }
        (Some(path), None) => {
            let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let complex = match parse_input(&text).map_err(|e| format!("{}: {e}", path.display()))? {
                Input::Complex(k) => k,
                Input::Graph(g) if flag_of_graph => clique_complex(&g),
                Input::Graph(_) => {
                    return Err(format!(
                        "{}: input is a graph; pass --flag-of-graph to use its clique complex",
                        path.display()
                    ))
                }
            };
            Ok(Loaded { source: path.display().to_string(), complex })
        }
    }
}
