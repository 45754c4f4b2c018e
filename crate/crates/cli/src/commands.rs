use crate::input::{self, Item};
use crate::{Format, GraphFormat, Source, Workers};
use anyhow::{bail, Context, Result};
use mobpos_core::graph::{analyze, catalogue, graph6_encode, to_dot};
use mobpos_core::mobility::{verify_certificate, Certificate, SearchOptions};
use mobpos_core::numbers::{compute as compute_number, Computed, Number};
use mobpos_core::position::Geometry;
use mobpos_core::reproduce::{by_criterion, checks, set_expected, Row};
use mobpos_core::strategies::{ScheduleSpec, Strategy};
use mobpos_core::theory::{classify as classify_graph, Classification};
use mobpos_core::{scan as scanning, Graph, VertexSet};
use rayon::prelude::*;
use serde::Serialize;
use std::io::Write;
use std::process::ExitCode;

const CHUNK: usize = 256;

macro_rules! out {
    ($($t:tt)*) => {
        write!(std::io::stdout().lock(), $($t)*)?
    };
}

macro_rules! outln {
    ($($t:tt)*) => {
        writeln!(std::io::stdout().lock(), $($t)*)?
    };
}

fn pool(w: &Workers) -> Result<rayon::ThreadPool> {
    if w.workers == Some(0) {
        bail!("--workers must be at least 1");
    }
    Ok(rayon::ThreadPoolBuilder::new().num_threads(w.workers.unwrap_or(0)).build()?)
}

/// Maps `f` over `items` on the pool in chunks, handing results to `emit`
/// in input order.
fn ordered<T, R, F, E>(pool: &rayon::ThreadPool, items: impl Iterator<Item = T>, f: F, mut emit: E) -> Result<()>
where
    T: Send,
    R: Send,
    F: Fn(usize, T) -> R + Sync,
    E: FnMut(R) -> Result<()>,
{
    let mut items = items.enumerate();
    loop {
        let chunk: Vec<(usize, T)> = items.by_ref().take(CHUNK).collect();
        if chunk.is_empty() {
            return Ok(());
        }
        let out: Vec<R> = pool.install(|| chunk.into_par_iter().map(|(i, t)| f(i, t)).collect());
        for r in out {
            emit(r)?;
        }
    }
}

fn json_line(value: &impl Serialize) -> Result<()> {
    let line = serde_json::to_string(value)?;
    writeln!(std::io::stdout().lock(), "{line}")?;
    Ok(())
}

fn set_text(v: &[usize]) -> String {
    let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

#[derive(Serialize)]
struct GraphRecord {
    index: usize,
    graph6: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<String>,
    order: usize,
    size: usize,
    numbers: Vec<Computed>,
}

#[derive(Serialize)]
struct ErrorRecord {
    index: usize,
    error: String,
}

enum Outcome {
    Done(Graph, GraphRecord),
    Failed(ErrorRecord),
}

fn compute_one(index: usize, item: Item, numbers: &[Number], radius: Option<usize>, opts: SearchOptions) -> Outcome {
    let fail = |error: String| Outcome::Failed(ErrorRecord { index, error });
    let g = match item {
        Ok(g) => g,
        Err(e) => return fail(e),
    };
    let geo = match Geometry::new(&g) {
        Ok(geo) => geo,
        Err(e) => return fail(e.to_string()),
    };
    let mut values = Vec::with_capacity(numbers.len());
    for &n in numbers {
        match compute_number(&geo, n, radius, opts) {
            Ok(c) => values.push(c),
            Err(e) => return fail(format!("{n}: {e}")),
        }
    }
    let record = GraphRecord {
        index,
        graph6: graph6_encode(&g),
        name: g.name().map(str::to_string),
        order: g.order(),
        size: g.edge_count(),
        numbers: values,
    };
    Outcome::Done(g, record)
}

fn human_record(r: &GraphRecord) -> String {
    let mut line = format!("#{} {} n={} m={}", r.index, r.name.as_deref().unwrap_or(&r.graph6), r.order, r.size);
    for c in &r.numbers {
        line.push_str(&format!("  {}={}", c.number, c.value));
        if !c.exact {
            line.push_str(" (lower bound, budget exhausted)");
        }
        if let Some(w) = &c.witness {
            if c.number != Number::Diam {
                line.push(' ');
                line.push_str(&set_text(w));
            }
        }
    }
    line
}

fn highlight(r: &GraphRecord) -> VertexSet {
    r.numbers
        .iter()
        .find_map(|c| {
            c.witness
                .clone()
                .filter(|w| !w.is_empty())
                .or_else(|| c.certificate.as_ref().map(|cert| cert.start.clone()))
        })
        .map(|w| w.into_iter().collect())
        .unwrap_or(VertexSet::EMPTY)
}

pub fn compute(
    source: &Source,
    numbers: &[String],
    radius: Option<usize>,
    budget: u64,
    workers: &Workers,
    format: Format,
    certificates: bool,
) -> Result<ExitCode> {
    let numbers: Vec<Number> = numbers.iter().map(|s| s.trim().parse()).collect::<Result<_, _>>()?;
    if numbers.contains(&Number::MuR) && radius.is_none() {
        bail!("mu_r needs --radius");
    }
    let pool = pool(workers)?;
    let items = input::source(source.family.as_deref(), source.graph6.as_deref())?;
    let opts = SearchOptions { budget };
    ordered(
        &pool,
        items,
        |i, item| compute_one(i, item, &numbers, radius, opts),
        |outcome| {
            match outcome {
                Outcome::Failed(e) => match format {
                    Format::Json => json_line(&e)?,
                    _ => eprintln!("#{} error: {}", e.index, e.error),
                },
                Outcome::Done(g, mut r) => match format {
                    Format::Json => {
                        if !certificates {
                            r.numbers.iter_mut().for_each(|c| c.certificate = None);
                        }
                        json_line(&r)?
                    }
                    Format::Human => outln!("{}", human_record(&r)),
                    Format::Dot => out!("{}", to_dot(&g, highlight(&r))),
                },
            }
            Ok(())
        },
    )?;
    Ok(ExitCode::SUCCESS)
}

pub fn schedule(name: &str, args: &[String], out: Option<&str>) -> Result<ExitCode> {
    let spec = ScheduleSpec::parse(name, args)?;
    let cert = match spec.generate() {
        Ok(c) => c,
        Err(e) => {
            eprintln!("{spec}: {e}");
            return Ok(ExitCode::from(1));
        }
    };
    let text = cert.to_json() + "\n";
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {path}"))?,
        None => out!("{text}"),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn strategies() -> Result<ExitCode> {
    for s in Strategy::all() {
        outln!("{:<26} {}", s.name(), s.usage());
    }
    Ok(ExitCode::SUCCESS)
}

pub fn verify(file: &str, format: Format) -> Result<ExitCode> {
    let text = input::read_text(file)?;
    let cert = Certificate::from_json(&text).context("parsing certificate JSON")?;
    let v = verify_certificate(&cert);
    match format {
        Format::Json => json_line(&v)?,
        _ => {
            outln!("{v}");
            if !v.unvisited.is_empty() {
                outln!("unvisited: {}", set_text(&v.unvisited));
            }
            for note in &cert.notes {
                outln!("note: {note}");
            }
        }
    }
    Ok(if v.accepted { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn reproduce(only: Option<&str>, expect: &[String], workers: &Workers, format: Format) -> Result<ExitCode> {
    let mut all = checks();
    for e in expect {
        let (name, value) = e.split_once('=').with_context(|| format!("--expect takes NAME=VALUE, got {e:?}"))?;
        if !set_expected(&mut all, name.trim(), value.trim()) {
            bail!("no reproduce row named {:?}", name.trim());
        }
    }
    let selected: Vec<_> = all.into_iter().filter(|c| only.is_none_or(|f| c.selected_by(f))).collect();
    if selected.is_empty() {
        bail!("--only {:?} selects no rows", only.unwrap_or_default());
    }
    let pool = pool(workers)?;
    let rows: Vec<Row> = pool.install(|| selected.par_iter().map(|c| c.run()).collect());
    let summary = by_criterion(&rows);
    match format {
        Format::Json => {
            for r in &rows {
                json_line(r)?;
            }
            json_line(&summary)?;
        }
        _ => {
            for r in &rows {
                outln!("{r}");
            }
            outln!();
            for c in &summary {
                let mark = if c.pass() { "PASS" } else { "FAIL" };
                outln!("criterion {:>2}: {mark} ({} rows)", c.criterion, c.rows);
            }
        }
    }
    let failed = rows.iter().filter(|r| !r.pass).count();
    if failed > 0 {
        eprintln!("{failed} of {} rows failed", rows.len());
        return Ok(ExitCode::from(1));
    }
    Ok(ExitCode::SUCCESS)
}

pub fn scan(path: &str, budget: u64, workers: &Workers, format: Format) -> Result<ExitCode> {
    let graphs: Vec<Graph> = input::graph6_lines(path)?
        .enumerate()
        .map(|(i, g)| g.map_err(|e| anyhow::anyhow!("line {i}: {e}")))
        .collect::<Result<_>>()?;
    scanning::check_orders(&graphs)?;
    let pool = pool(workers)?;
    let opts = SearchOptions { budget };
    let records = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(i, g)| scanning::scan_record(i, g, opts))
            .collect::<Result<Vec<_>, _>>()
    })?;
    let s = scanning::summarise(&graphs, &records)?;
    match format {
        Format::Json => json_line(&s)?,
        _ => {
            outln!("order {}: {} graphs, {} with mob = 2", s.order, s.graphs, s.mob2_graphs);
            match s.max_mob2_edges {
                Some(m) => outln!("largest mob = 2 graph: {m} edges; t({},3) = {}", s.order, s.turan_edges),
                None => outln!("no graph with mob = 2"),
            }
            let who: Vec<String> = s.maximisers.iter().map(|&i| format!("#{i} {}", graph6_encode(&graphs[i]))).collect();
            outln!("maximisers: {}", who.join(", "));
            outln!("T({},3) is the unique maximiser: {}", s.order, s.turan_unique);
            for r in &s.mob2_with_k4 {
                outln!("mob = 2 with omega = {}: #{} {}", r.omega, r.index, r.graph6);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct GraphJson {
    graph6: String,
    name: Option<String>,
    order: usize,
    edges: Vec<(usize, usize)>,
    analysis: mobpos_core::graph::Analysis,
}

pub fn family(spec: &str, format: GraphFormat) -> Result<ExitCode> {
    let g = input::family_graph(spec)?;
    match format {
        GraphFormat::Graph6 => outln!("{}", graph6_encode(&g)),
        GraphFormat::Dot => out!("{}", to_dot(&g, VertexSet::EMPTY)),
        GraphFormat::Edges => {
            for (u, v) in g.edges() {
                outln!("{u} {v}");
            }
        }
        GraphFormat::Json => json_line(&GraphJson {
            graph6: graph6_encode(&g),
            name: g.name().map(str::to_string),
            order: g.order(),
            edges: g.edges().collect(),
            analysis: analyze(&g),
        })?,
    }
    Ok(ExitCode::SUCCESS)
}

pub fn families() -> Result<ExitCode> {
    for line in catalogue() {
        outln!("{line}");
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct ClassifyRecord {
    index: usize,
    graph6: String,
    #[serde(flatten)]
    verdicts: Classification,
}

pub fn classify(source: &Source, format: Format) -> Result<ExitCode> {
    let items = input::source(source.family.as_deref(), source.graph6.as_deref())?;
    for (index, item) in items.enumerate() {
        let g = match item {
            Ok(g) => g,
            Err(e) => {
                eprintln!("#{index} error: {e}");
                continue;
            }
        };
        let rec = ClassifyRecord { index, graph6: graph6_encode(&g), verdicts: classify_graph(&g) };
        match format {
            Format::Json => json_line(&rec)?,
            _ => {
                outln!("#{index} {}", g.name().unwrap_or(&rec.graph6));
                let value = serde_json::to_value(&rec.verdicts)?;
                if let Some(map) = value.as_object() {
                    for (k, v) in map {
                        outln!("  {k}: {}", verdict_text(v));
                    }
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verdict_text(v: &serde_json::Value) -> String {
    use serde_json::Value;
    match v {
        Value::Null => "none".into(),
        Value::Object(m) if m.len() == 1 => match m.iter().next() {
            Some((k, inner)) if k == "value" => verdict_text(inner),
            Some((k, inner)) => format!("{} ({})", k.replace('_', " "), verdict_text(inner)),
            None => unreachable!(),
        },
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
