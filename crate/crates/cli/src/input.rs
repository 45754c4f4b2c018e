//! Graph sources: a family spec, or graph6 lines from a file or stdin.

use anyhow::{Context, Result};
use mobpos_core::graph::{family, graph6_decode, FamilySpec};
use mobpos_core::Graph;
use std::io::{self, BufRead, BufReader, Read};

/// One input line: the decoded graph or why it failed.
pub type Item = std::result::Result<Graph, String>;

pub fn read_text(path: &str) -> Result<String> {
    let mut text = String::new();
    if path == "-" {
        io::stdin().read_to_string(&mut text).context("reading stdin")?;
    } else {
        text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
    }
    Ok(text)
}

fn decode_line(line: &str) -> Option<Item> {
    let line = line.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    if line.is_empty() || line.starts_with('#') {
        return None;
    }
    Some(graph6_decode(line).map_err(|e| format!("{e}")))
}

/// Streams graph6 lines; undecodable lines become error items.
pub fn graph6_lines(path: &str) -> Result<Box<dyn Iterator<Item = Item>>> {
    let reader: Box<dyn BufRead> = if path == "-" {
        Box::new(BufReader::new(io::stdin()))
    } else {
        let f = std::fs::File::open(path).with_context(|| format!("opening {path}"))?;
        Box::new(BufReader::new(f))
    };
    Ok(Box::new(reader.lines().filter_map(|l| match l {
        Ok(l) => decode_line(&l),
        Err(e) => Some(Err(e.to_string())),
    })))
}

pub fn family_graph(spec: &str) -> Result<Graph> {
    let spec: FamilySpec = spec.parse()?;
    Ok(family(&spec)?)
}

/// Graphs from exactly one of `--family` / `--graph6`.
pub fn source(family: Option<&str>, graph6: Option<&str>) -> Result<Box<dyn Iterator<Item = Item>>> {
    match (family, graph6) {
        (Some(spec), None) => Ok(Box::new(std::iter::once(Ok(family_graph(spec)?)))),
        (None, Some(path)) => graph6_lines(path),
        _ => anyhow::bail!("give exactly one of --family or --graph6"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_headers_and_blanks() {
        assert!(decode_line("").is_none());
        assert!(decode_line("# comment").is_none());
        let g = decode_line(">>graph6<<Bw").unwrap().unwrap();
        assert_eq!(g.order(), 3);
        assert!(decode_line("???").unwrap().is_err());
    }
}
