//! Graph sources: single-graph flags and corpus specs.

use std::fs;
use std::path::Path;

use edgesym_core::graph::{
    connected_graphs, labeled_connected_graphs, make_family, parse_edge_list, parse_graph6,
    two_component_graphs, Family, Graph,
};

use crate::error::CliError;

#[derive(Debug, Clone, Copy)]
pub struct Guard {
    pub max_n: usize,
    pub force: bool,
}

impl Guard {
    pub fn check(&self, n: usize, what: &str) -> Result<(), CliError> {
        if n > self.max_n && !self.force {
            return Err(CliError::Guard(format!(
                "{what} has {n} vertices, above --max-n {}",
                self.max_n
            )));
        }
        Ok(())
    }
}

pub fn family(spec: &str) -> Result<Graph, CliError> {
    let f: Family = spec.parse()?;
    Ok(make_family(&f)?)
}

pub fn graph6_file(path: &Path) -> Result<Vec<Graph>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_graph6)
        .collect::<Result<Vec<_>, _>>()?;
    if graphs.is_empty() {
        return Err(CliError::Input(format!("{}: no graphs", path.display())));
    }
    Ok(graphs)
}

pub fn edges_file(path: &Path) -> Result<Graph, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_edge_list(&text)?)
}

fn bound(text: &str, spec: &str, limit: usize) -> Result<usize, CliError> {
    let n: usize = text
        .parse()
        .map_err(|_| CliError::Input(format!("corpus `{spec}`: bad vertex count `{text}`")))?;
    if !(1..=limit).contains(&n) {
        return Err(CliError::Input(format!(
            "corpus `{spec}`: vertex count must be in 1..={limit}"
        )));
    }
    Ok(n)
}

/// Resolves a corpus spec. The guard is applied before any enumeration.
pub fn load(spec: &str, guard: Guard) -> Result<Vec<Graph>, CliError> {
    let spec = spec.trim();
    if let Some(rest) = spec.strip_prefix("all-connected:") {
        let n = bound(rest, spec, 10)?;
        guard.check(n, "corpus")?;
        return Ok((2..=n).flat_map(connected_graphs).collect());
    }
    if let Some(rest) = spec.strip_prefix("labeled-connected:") {
        let n = bound(rest, spec, 7)?;
        guard.check(n, "corpus")?;
        return Ok((2..=n).flat_map(labeled_connected_graphs).collect());
    }
    if let Some(rest) = spec.strip_prefix("two-component:") {
        let n = bound(rest, spec, 10)?;
        guard.check(n, "corpus")?;
        return Ok(two_component_graphs(n));
    }
    let graphs = if let Some(rest) = spec.strip_prefix("family:") {
        family_range(rest)?
    } else {
        let path = Path::new(spec);
        if !path.is_file() {
            return Err(CliError::Input(format!(
                "unknown corpus spec or missing file `{spec}`"
            )));
        }
        graph6_file(path)?
    };
    for g in &graphs {
        guard.check(g.n(), "corpus graph")?;
    }
    Ok(graphs)
}

/// `NAME:A..B` expands to `NAME:A`, ..., `NAME:B`; anything else is one
/// family spec.
fn family_range(spec: &str) -> Result<Vec<Graph>, CliError> {
    if let Some((name, range)) = spec.rsplit_once(':') {
        if let Some((a, b)) = range.split_once("..") {
            let parse = |s: &str| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Input(format!("bad range `{range}`")))
            };
            let (a, b) = (parse(a)?, parse(b)?);
            if a > b {
                return Err(CliError::Input(format!("empty range `{range}`")));
            }
            return (a..=b).map(|k| family(&format!("{name}:{k}"))).collect();
        }
    }
    Ok(vec![family(spec)?])
}
