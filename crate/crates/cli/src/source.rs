//! Graph input resolution: one generated family member, a graph6 literal,
//! or a stream of graph6 lines from a file or standard input.

use std::io::BufRead;

use secdom::families::{make_complete, make_complete_bipartite, make_cycle, make_path, make_star};
use secdom::graph::Graph;
use secdom::graph6::from_graph6;

use crate::error::CliError;
use crate::{Family, GraphSource};

/// A named input instance.
pub struct Instance {
    pub name: String,
    pub graph: Graph,
}

pub fn resolve(source: &GraphSource) -> Result<Vec<Instance>, CliError> {
    if let Some(family) = source.family {
        let n = source
            .n
            .ok_or_else(|| CliError::usage("--family requires --n".to_string()))?;
        let (name, graph) = match family {
            Family::Path => (format!("P_{n}"), make_path(n)),
            Family::Cycle => (format!("C_{n}"), make_cycle(n)),
            Family::Complete => (format!("K_{n}"), make_complete(n)),
            Family::Star => (format!("K_{{1,{n}}}"), make_star(n)),
            Family::CompleteBipartite => {
                let m = source.m.ok_or_else(|| {
                    CliError::usage("--family complete-bipartite requires --m".to_string())
                })?;
                (format!("K_{{{m},{n}}}"), make_complete_bipartite(m, n))
            }
        };
        let graph = graph.map_err(|e| CliError::usage(format!("cannot build {name}: {e}")))?;
        return Ok(vec![Instance { name, graph }]);
    }
    if let Some(line) = &source.graph6 {
        let graph = from_graph6(line)
            .map_err(|e| CliError::usage(format!("invalid graph6 argument {line:?}: {e}")))?;
        return Ok(vec![Instance {
            name: format!("g6:{line}"),
            graph,
        }]);
    }
    if let Some(path) = &source.file {
        let file = std::fs::File::open(path)
            .map_err(|e| CliError::usage(format!("cannot open {}: {e}", path.display())))?;
        return read_stream(std::io::BufReader::new(file), &path.display().to_string());
    }
    if source.stdin {
        let stdin = std::io::stdin();
        return read_stream(stdin.lock(), "stdin");
    }
    Err(CliError::usage(
        "no graph source: pass --family/--n, --graph6, --file, or --stdin",
    ))
}

fn read_stream<R: BufRead>(reader: R, origin: &str) -> Result<Vec<Instance>, CliError> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let graph = from_graph6(trimmed).map_err(|e| {
            CliError::usage(format!(
                "{origin} line {}: invalid graph6 {trimmed:?}: {e}",
                idx + 1
            ))
        })?;
        out.push(Instance {
            name: format!("g6:{trimmed}"),
            graph,
        });
    }
    if out.is_empty() {
        return Err(CliError::usage(format!("{origin} contained no graphs")));
    }
    Ok(out)
}
