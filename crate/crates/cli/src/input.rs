//! Graph input resolution: builtins, files, stdin.

use graph_core::{parse_edge_list, parse_graph6, Graph, GraphError, StandardKind};

use crate::InputFormat;

/// Resolves an input argument to a graph. `kind:n` builtins are checked
/// first, then `-` (stdin) and file paths, parsed per `format`.
pub fn load_graph(input: &str, format: InputFormat) -> Result<Graph, String> {
    if let Some((kind, n)) = input.split_once(':') {
        if let Some(kind) = StandardKind::parse(kind) {
            let n: usize = n
                .parse()
                .map_err(|_| format!("invalid vertex count in builtin {input:?}"))?;
            return Graph::standard(kind, n).map_err(|e| e.to_string());
        }
    }
    let text = if input == "-" {
        use std::io::Read;
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| format!("reading stdin: {e}"))?;
        buf
    } else {
        std::fs::read_to_string(input).map_err(|e| format!("reading {input}: {e}"))?
    };
    let parsed = match format {
        InputFormat::Edgelist => parse_edge_list(&text),
        InputFormat::Graph6 => parse_graph6(text.trim()),
    };
    parsed.map_err(|e| match e {
        GraphError::Parse {
            line,
            column,
            message,
        } => format!("{input}:{line}:{column}: {message}"),
        other => other.to_string(),
    })
}
