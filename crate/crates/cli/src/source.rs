//! Graph sources: graph6 files, standard input, and builtin corpora.

use std::fs;
use std::io::{self, Read};

use packcrit::corpus::{all_graphs_up_to, connected_graphs_up_to, CORPUS_LIMIT};
use packcrit::exec::Execution;
use packcrit::families::{
    enumerate_block_graphs_diam2, enumerate_block_graphs_diam3, enumerate_caterpillars, enumerate_class_c,
    enumerate_trees, BLOCK_DIAM3_LIMIT, TREE_LIMIT,
};
use packcrit::metric::diameter;
use packcrit::{emit_graph6, parse_graph6, Graph, Graph6Error};

use crate::Failure;

pub const BUILTIN_PREFIX: &str = "builtin:";

pub struct Loaded {
    pub graphs: Vec<Graph>,
    /// The bytes the graphs came from; for builtin corpora, their graph6 text.
    pub raw: Vec<u8>,
}

pub fn load(input: &str) -> Result<Loaded, Failure> {
    if let Some(name) = input.strip_prefix(BUILTIN_PREFIX) {
        let graphs = builtin(name)?;
        let mut raw = Vec::new();
        for g in &graphs {
            raw.extend_from_slice(emit_graph6(g).as_bytes());
            raw.push(b'\n');
        }
        return Ok(Loaded { graphs, raw });
    }
    let raw = if input == "-" {
        let mut buf = Vec::new();
        io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        buf
    } else {
        fs::read(input).map_err(|e| Failure::Usage(format!("reading {input}: {e}")))?
    };
    let text = String::from_utf8(raw.clone()).map_err(|_| Failure::Parse("input is not valid UTF-8".into()))?;
    let graphs = parse_lines(&text).map_err(|(line, e)| Failure::Parse(format!("line {line}: {e}")))?;
    Ok(Loaded { graphs, raw })
}

/// Parses one graph per non-blank line. Errors carry the 1-based line.
pub fn parse_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}

fn bound(name: &str, prefix: &str) -> Option<usize> {
    name.strip_prefix(prefix)?.parse().ok()
}

fn check_limit(name: &str, n: usize, limit: usize) -> Result<usize, Failure> {
    if n > limit {
        Err(Failure::Usage(format!("builtin:{name}: order limit is {limit}")))
    } else {
        Ok(n)
    }
}

/// Builtin corpora, generated on demand.
pub fn builtin(name: &str) -> Result<Vec<Graph>, Failure> {
    let exec = Execution::Parallel;
    if let Some(rest) = name.strip_prefix("connected-le") {
        if let Some(n) = rest.strip_suffix("-diam2").and_then(|r| r.parse().ok()) {
            let n = check_limit(name, n, CORPUS_LIMIT)?;
            let all = connected_graphs_up_to(n, exec);
            return Ok(all.into_iter().filter(|g| diameter(g) == 2).collect());
        }
    }
    if let Some(n) = bound(name, "connected-le") {
        return Ok(connected_graphs_up_to(check_limit(name, n, CORPUS_LIMIT)?, exec));
    }
    if let Some(n) = bound(name, "graphs-le") {
        return Ok(all_graphs_up_to(check_limit(name, n, CORPUS_LIMIT)?, exec));
    }
    if let Some(n) = bound(name, "trees-le") {
        let n = check_limit(name, n, TREE_LIMIT)?;
        return Ok((1..=n)
            .flat_map(|m| enumerate_trees(m).expect("within limit"))
            .collect());
    }
    if let Some(n) = bound(name, "caterpillars-le") {
        let n = check_limit(name, n, 20)?;
        return Ok((1..=n)
            .flat_map(|m| enumerate_caterpillars(m).expect("n >= 1"))
            .collect());
    }
    if let Some(n) = bound(name, "block-diam2-le") {
        let n = check_limit(name, n, 16)?;
        return Ok(enumerate_block_graphs_diam2(n).into_iter().map(|lg| lg.graph).collect());
    }
    if let Some(n) = bound(name, "block-diam3-le") {
        let n = check_limit(name, n, BLOCK_DIAM3_LIMIT)?;
        let all = enumerate_block_graphs_diam3(n).map_err(|e| Failure::Usage(e.to_string()))?;
        return Ok(all.into_iter().map(|lg| lg.graph).collect());
    }
    if let Some(rest) = name.strip_prefix("class-c-cycle-le") {
        if let Some((c, l)) = rest.split_once("-leaves-le") {
            if let (Ok(c), Ok(l)) = (c.parse(), l.parse()) {
                let c = check_limit(name, c, 12)?;
                let l = check_limit(name, l, 4)?;
                return Ok(enumerate_class_c(c, l).into_iter().map(|lg| lg.graph).collect());
            }
        }
    }
    Err(Failure::Usage(format!(
        "unknown builtin corpus {name:?}; known: connected-leN, connected-leN-diam2, graphs-leN, trees-leN, \
         caterpillars-leN, block-diam2-leN, block-diam3-leN, class-c-cycle-leL-leaves-leM"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_names() {
        assert_eq!(builtin("connected-le4").unwrap().len(), 1 + 1 + 2 + 6);
        assert!(builtin("connected-le5-diam2").unwrap().iter().all(|g| diameter(g) == 2));
        assert_eq!(builtin("trees-le6").unwrap().len(), 1 + 1 + 1 + 2 + 3 + 6);
        assert_eq!(builtin("class-c-cycle-le4-leaves-le1").unwrap().len(), 10);
        assert!(matches!(builtin("connected-le9"), Err(Failure::Usage(_))));
        assert!(matches!(builtin("cubic-le8"), Err(Failure::Usage(_))));
    }

    #[test]
    fn parse_reports_line_numbers() {
        assert_eq!(parse_lines("A_\n\nBw\n").unwrap().len(), 2);
        let (line, _) = parse_lines("A_\nB\u{1}\n").unwrap_err();
        assert_eq!(line, 2);
    }
}
