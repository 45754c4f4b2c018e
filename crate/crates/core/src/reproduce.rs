//! The reproduction matrix. Each row pairs an expected string with a
//! computation; rows are grouped into fifteen numbered criteria. Exhaustive
//! rows expect `0 counterexamples` and report what they covered in `detail`.

use crate::corpus;
use crate::graph::{analyze, combine, complete, family, Combine, FamilyKind, FamilySpec, Graph};
use crate::mobility::{labeled_reach, legal_moves, verify_certificate, Certificate, Claim, Engine, LabeledConfig, SearchOptions};
use crate::numbers::{compute, Number};
use crate::position::{is_hub, Geometry, PiKind, PiVariant};
use crate::scan;
use crate::strategies::ScheduleSpec;
use crate::theory::{
    bound_mob_clique, classify, fixtures, grid_formulas, lkn_mobmv, turan_size, GridProduct, Verdict,
};
use crate::vertex_set::VertexSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::fmt;
use std::sync::OnceLock;
use std::time::Instant;

const BUDGET: u64 = 500_000_000;
const BLOCK_SEED: u64 = 0x6d6f_6270_6f73;

/// A computed value and a free-form note on what was covered.
pub struct Outcome {
    pub value: String,
    pub detail: String,
}

impl From<String> for Outcome {
    fn from(value: String) -> Self {
        Outcome { value, detail: String::new() }
    }
}

type Computation = Box<dyn Fn() -> Result<Outcome, String> + Send + Sync>;

pub struct Check {
    pub criterion: u8,
    pub group: &'static str,
    pub name: String,
    pub expected: String,
    compute: Computation,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub criterion: u8,
    pub group: &'static str,
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
    pub seconds: f64,
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "[{mark}] {:>2} {:<17} {:<58} expected {:<24} computed {:<24} {:>8.2}s",
            self.criterion, self.group, self.name, self.expected, self.computed, self.seconds
        )?;
        if !self.detail.is_empty() {
            write!(f, "  {}", self.detail)?;
        }
        Ok(())
    }
}

impl Check {
    fn new<F>(criterion: u8, group: &'static str, name: impl Into<String>, expected: impl ToString, f: F) -> Self
    where
        F: Fn() -> Result<Outcome, String> + Send + Sync + 'static,
    {
        Check { criterion, group, name: name.into(), expected: expected.to_string(), compute: Box::new(f) }
    }

    /// Whether `filter`, a comma-separated list of criterion numbers, group
    /// names or name fragments, selects this check.
    pub fn selected_by(&self, filter: &str) -> bool {
        filter.split(',').map(str::trim).filter(|t| !t.is_empty()).any(|t| match t.parse::<u8>() {
            Ok(c) => c == self.criterion,
            Err(_) => t == self.group || self.name.contains(t),
        })
    }

    pub fn run(&self) -> Row {
        let started = Instant::now();
        let (computed, detail) = match (self.compute)() {
            Ok(o) => (o.value, o.detail),
            Err(e) => (format!("error: {e}"), String::new()),
        };
        Row {
            criterion: self.criterion,
            group: self.group,
            name: self.name.clone(),
            pass: computed == self.expected,
            expected: self.expected.clone(),
            computed,
            detail,
            seconds: started.elapsed().as_secs_f64(),
        }
    }
}

/// Replaces the expected value of the check named `name`.
pub fn set_expected(checks: &mut [Check], name: &str, value: &str) -> bool {
    match checks.iter_mut().find(|c| c.name == name) {
        Some(c) => {
            c.expected = value.to_string();
            true
        }
        None => false,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub criterion: u8,
    pub rows: usize,
    pub failed: Vec<String>,
}

impl CriterionResult {
    pub fn pass(&self) -> bool {
        self.failed.is_empty()
    }
}

pub fn by_criterion(rows: &[Row]) -> Vec<CriterionResult> {
    let mut out: Vec<CriterionResult> = Vec::new();
    for r in rows {
        if out.last().map(|c| c.criterion) != Some(r.criterion) {
            out.push(CriterionResult { criterion: r.criterion, rows: 0, failed: Vec::new() });
        }
        let c = out.last_mut().unwrap();
        c.rows += 1;
        if !r.pass {
            c.failed.push(r.name.clone());
        }
    }
    out
}

fn opts() -> SearchOptions {
    SearchOptions { budget: BUDGET }
}

fn graph(spec: &str) -> Result<Graph, String> {
    let spec: FamilySpec = spec.parse().map_err(|e| format!("{e}"))?;
    family(&spec).map_err(|e| e.to_string())
}

/// An exact value of `number` on `g`.
fn exact(g: &Graph, number: Number) -> Result<usize, String> {
    let geo = Geometry::new(g).map_err(|e| e.to_string())?;
    let c = compute(&geo, number, None, opts()).map_err(|e| e.to_string())?;
    if !c.exact {
        return Err(format!("{number} search ran out of budget"));
    }
    Ok(c.value)
}

fn exact_on(spec: &str, number: Number) -> Result<Outcome, String> {
    Ok(exact(&graph(spec)?, number)?.to_string().into())
}

fn pair(a: usize, b: usize) -> String {
    format!("({a}, {b})")
}

/// `0 counterexamples` or the count and the first few.
fn counterexamples(bad: Vec<String>, covered: String) -> Outcome {
    let value = format!("{} counterexamples", bad.len());
    let mut detail = covered;
    if !bad.is_empty() {
        let shown: Vec<&str> = bad.iter().take(3).map(String::as_str).collect();
        detail = format!("{detail}; first: {}", shown.join(" | "));
    }
    Outcome { value, detail }
}

const NONE: &str = "0 counterexamples";

/// Solver values for every connected graph of order at most seven.
pub struct CorpusEntry {
    pub graph: Graph,
    pub gp: usize,
    pub mu: usize,
    pub mob: usize,
    pub mobmv: usize,
    pub cmob: usize,
    pub cmobmv: usize,
    /// Every solver witness certificate replays.
    pub witnesses_verified: bool,
}

fn corpus_entry(g: Graph) -> Result<CorpusEntry, String> {
    let geo = Geometry::new(&g).map_err(|e| e.to_string())?;
    let mut values = [0usize; 6];
    let mut verified = true;
    let numbers = [Number::Gp, Number::Mu, Number::Mob, Number::Mobmv, Number::Cmob, Number::Cmobmv];
    for (slot, &n) in values.iter_mut().zip(&numbers) {
        let c = compute(&geo, n, None, opts()).map_err(|e| e.to_string())?;
        if !c.exact {
            return Err(format!("{n} inexact on {}", crate::graph::graph6_encode(&g)));
        }
        if let Some(cert) = &c.certificate {
            verified &= verify_certificate(cert).accepted && cert.robots() == c.value;
        }
        *slot = c.value;
    }
    let [gp, mu, mob, mobmv, cmob, cmobmv] = values;
    Ok(CorpusEntry { graph: g, gp, mu, mob, mobmv, cmob, cmobmv, witnesses_verified: verified })
}

pub fn corpus_numbers() -> Result<&'static [CorpusEntry], String> {
    static CACHE: OnceLock<Result<Vec<CorpusEntry>, String>> = OnceLock::new();
    CACHE
        .get_or_init(|| corpus::all_connected().map(corpus_entry).collect())
        .as_ref()
        .map(Vec::as_slice)
        .map_err(Clone::clone)
}

fn corpus_check(test: impl Fn(&CorpusEntry) -> Option<bool>) -> Result<Outcome, String> {
    let entries = corpus_numbers()?;
    let mut bad = Vec::new();
    let mut covered = 0;
    for e in entries {
        if let Some(ok) = test(e) {
            covered += 1;
            if !ok {
                bad.push(crate::graph::graph6_encode(&e.graph));
            }
        }
    }
    Ok(counterexamples(bad, format!("{covered} graphs of order <= 7")))
}

fn verdict(v: &Verdict<bool>) -> Option<bool> {
    v.value()
}

pub fn checks() -> Vec<Check> {
    let mut out = Vec::new();
    hypercube_rows(&mut out);
    grid_rows(&mut out);
    schedule_rows(&mut out);
    lkn_rows(&mut out);
    family_rows(&mut out);
    characterization_rows(&mut out);
    bound_rows(&mut out);
    clique_rows(&mut out);
    join_rows(&mut out);
    block_rows(&mut out);
    scan_rows(&mut out);
    property_rows(&mut out);
    out
}

fn hypercube_rows(out: &mut Vec<Check>) {
    out.push(Check::new(1, "hypercube", "hypercube:4 mobmv", 8, || exact_on("hypercube:4", Number::Mobmv)));
    out.push(Check::new(1, "hypercube", "hypercube:4 mu", 9, || exact_on("hypercube:4", Number::Mu)));
}

fn grid_rows(out: &mut Vec<Check>) {
    for (r, s) in [(3, 3), (4, 3), (4, 4)] {
        let spec = format!("strong_grid:{r},{s}");
        let (a, b) = (spec.clone(), spec.clone());
        out.push(Check::new(2, "grids", format!("{spec} gp"), 4, move || exact_on(&a, Number::Gp)));
        out.push(Check::new(2, "grids", format!("{spec} mob"), 4, move || exact_on(&b, Number::Mob)));
    }
    for (r, s, v) in [(3, 3, 5), (4, 3, 8), (4, 4, 10)] {
        let spec = format!("strong_grid:{r},{s}");
        out.push(Check::new(3, "grids", format!("{spec} mobmv"), v, {
            let spec = spec.clone();
            move || exact_on(&spec, Number::Mobmv)
        }));
    }
    let cart = [
        (3, 3, 4),
        (4, 3, 5),
        (4, 4, 7),
        (5, 4, 7),
        (5, 3, 6),
        (5, 5, 9),
        (6, 4, 8),
        (2, 2, 3),
        (2, 3, 3),
        (2, 4, 4),
        (2, 5, 4),
    ];
    for (n, m, v) in cart {
        let spec = format!("cartesian_grid:{n},{m}");
        out.push(Check::new(4, "grids", format!("{spec} mobmv"), v, {
            let spec = spec.clone();
            move || exact_on(&spec, Number::Mobmv)
        }));
    }
    for f in fixtures() {
        let number: Number = match f.number.parse() {
            Ok(n) => n,
            Err(_) => continue,
        };
        let family = f.family.clone();
        out.push(Check::new(4, "grids", format!("fixture {} {}", f.family, f.number), f.value, move || {
            exact_on(&family, number)
        }));
    }
    out.push(Check::new(4, "grids", "closed-form grid values against the solver", NONE, || {
        let mut grids: Vec<(usize, usize, GridProduct)> = Vec::new();
        for n in 2..=5 {
            for m in 2..=n {
                grids.push((n, m, GridProduct::Cartesian));
                if m >= 3 {
                    grids.push((n, m, GridProduct::Strong));
                }
            }
        }
        grids.extend([(6, 3, GridProduct::Cartesian), (6, 4, GridProduct::Cartesian)]);
        let mut bad = Vec::new();
        for &(n, m, p) in &grids {
            let closed = grid_formulas(n, m, p).map_err(|e| e.to_string())?;
            let spec = match p {
                GridProduct::Cartesian => format!("cartesian_grid:{n},{m}"),
                GridProduct::Strong => format!("strong_grid:{n},{m}"),
            };
            let solved = exact(&graph(&spec)?, Number::Mobmv)?;
            if solved != closed.value {
                bad.push(format!("{spec}: closed form {} vs solver {solved}", closed.value));
            }
        }
        Ok(counterexamples(bad, format!("{} grids", grids.len())))
    }));
}

fn certificate_outcome(cert: &Certificate) -> Outcome {
    let v = verify_certificate(cert);
    let value = if v.accepted { format!("accepted, {} robots", v.robots) } else { v.to_string() };
    Outcome { value, detail: format!("{} moves", v.moves) }
}

fn schedule(name: &str, args: &[&str]) -> Result<Certificate, String> {
    let args: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    let spec = ScheduleSpec::parse(name, &args).map_err(|e| e.to_string())?;
    spec.generate().map_err(|e| e.to_string())
}

fn schedule_rows(out: &mut Vec<Check>) {
    let rows: &[(&str, &[&str], usize)] = &[
        ("strong_grid_gp", &["4", "3"], 4),
        ("cart_grid_mv", &["6", "5"], 10),
        ("cart_grid_mv", &["7", "6"], 12),
        ("cart_grid_mv", &["5", "5"], 9),
        ("cart_grid_mv", &["6", "6"], 11),
        ("lkn", &["6"], 11),
        ("lkn", &["7"], 15),
        ("lkn", &["8"], 20),
        ("lkn", &["9"], 25),
        ("half_graph", &["5"], 5),
        ("half_graph_ext_complete", &["5", "3"], 3),
        ("hub_shuttle", &["cycle:4"], 3),
    ];
    for &(name, args, robots) in rows {
        out.push(Check::new(
            5,
            "schedules",
            format!("{name} {}", args.join(" ")),
            format!("accepted, {robots} robots"),
            move || Ok(certificate_outcome(&schedule(name, args)?)),
        ));
    }
}

fn lkn_rows(out: &mut Vec<Check>) {
    let expected = lkn_mobmv(6).map(|v| v.to_string()).unwrap_or_default();
    out.push(Check::new(6, "lkn", "lkn_mobmv(6) closed form", 11, || {
        Ok(lkn_mobmv(6).map_err(|e| e.to_string())?.to_string().into())
    }));
    out.push(Check::new(6, "lkn", "line_complete:6 mobmv", &expected, || exact_on("line_complete:6", Number::Mobmv)));
    out.push(Check::new(6, "lkn", "line_complete:6 cmobmv", &expected, || {
        exact_on("line_complete:6", Number::Cmobmv)
    }));
}

fn two_numbers(spec: String, a: Number, b: Number) -> impl Fn() -> Result<Outcome, String> {
    move || {
        let g = graph(&spec)?;
        Ok(pair(exact(&g, a)?, exact(&g, b)?).into())
    }
}

fn family_rows(out: &mut Vec<Check>) {
    for a in 2..=5 {
        for b in a + 1..=5 {
            let spec = format!("join_realisation:{a},{b}");
            out.push(Check::new(
                7,
                "families",
                format!("{spec} (mob, mobmv)"),
                pair(a, b),
                two_numbers(spec, Number::Mob, Number::Mobmv),
            ));
        }
    }
    for r in 3..=5 {
        let spec = format!("half_graph:{r}");
        out.push(Check::new(7, "families", format!("{spec} (mob, cmob)"), pair(r, 2), two_numbers(spec, Number::Mob, Number::Cmob)));
    }
    out.push(Check::new(
        7,
        "families",
        "half_graph_ext:5,3 (mob, cmob)",
        pair(5, 3),
        two_numbers("half_graph_ext:5,3".into(), Number::Mob, Number::Cmob),
    ));
    for (a, mobmv) in [(2, 5), (3, 6)] {
        let spec = format!("strong_clique:{a},3");
        out.push(Check::new(
            7,
            "families",
            format!("{spec} (mobmv, cmobmv)"),
            pair(mobmv, 3),
            two_numbers(spec, Number::Mobmv, Number::Cmobmv),
        ));
    }
}

fn characterization_rows(out: &mut Vec<Check>) {
    let c = 8;
    let g = "characterizations";
    out.push(Check::new(c, g, "mobmv = n-1 iff two adjacent hubs (non-complete)", NONE, || {
        corpus_check(|e| verdict(&classify(&e.graph).mobmv_equals_n_minus_1).map(|v| v == (e.mobmv + 1 == e.graph.order())))
    }));
    out.push(Check::new(c, g, "cmobmv = 2 iff block graph, omega <= 3, not a path", NONE, || {
        corpus_check(|e| verdict(&classify(&e.graph).cmobmv_equals_2).map(|v| v == (e.cmobmv == 2)))
    }));
    out.push(Check::new(c, g, "cmob = 1 iff path", NONE, || {
        corpus_check(|e| verdict(&classify(&e.graph).cmob_equals_1).map(|v| v == (e.cmob == 1)))
    }));
    out.push(Check::new(c, g, "cmob = n-1 iff complete (n >= 2)", NONE, || {
        corpus_check(|e| {
            verdict(&classify(&e.graph).cmob_equals_n_minus_1).map(|v| v == (e.cmob + 1 == e.graph.order()))
        })
    }));
    out.push(Check::new(c, g, "mob = n iff complete", NONE, || {
        corpus_check(|e| verdict(&classify(&e.graph).mob_equals_n).map(|v| v == (e.mob == e.graph.order())))
    }));
    out.push(Check::new(c, g, "mob = n-1 iff K_(n-1) plus a leaf (n >= 3)", NONE, || {
        corpus_check(|e| {
            verdict(&classify(&e.graph).mob_equals_n_minus_1).map(|v| v == (e.mob + 1 == e.graph.order()))
        })
    }));
    out.push(Check::new(c, g, "n-1 vertices are mutually visible iff the free vertex is a hub", NONE, || {
        let mut bad = Vec::new();
        let mut sets = 0;
        for e in corpus_numbers()? {
            let geo = Geometry::new(&e.graph).map_err(|e| e.to_string())?;
            let all = e.graph.vertices();
            for v in 0..e.graph.order() {
                sets += 1;
                if geo.is_pi(PiKind::MV, all.without(v)) != is_hub(&e.graph, v) {
                    bad.push(format!("{} without {v}", crate::graph::graph6_encode(&e.graph)));
                }
            }
        }
        Ok(counterexamples(bad, format!("{sets} vertex deletions")))
    }));
}

fn bound_rows(out: &mut Vec<Check>) {
    let c = 9;
    let g = "bounds";
    out.push(Check::new(c, g, "cmob >= 1 + ceil(omega/D) - theta(s), non-complete, omega >= 3", NONE, || {
        corpus_check(|e| {
            let a = analyze(&e.graph);
            if e.graph.is_complete() || a.clique_number < 3 {
                return None;
            }
            let b = bound_mob_clique(a.clique_number, a.diameter?).ok()?;
            Some(e.cmob >= b.value)
        })
    }));
    out.push(Check::new(c, g, "cmob >= 3 when omega >= 5", NONE, || {
        corpus_check(|e| (crate::graph::clique_number(&e.graph) >= 5).then_some(e.cmob >= 3))
    }));
    out.push(Check::new(c, g, "mobmv >= omega", NONE, || {
        corpus_check(|e| Some(e.mobmv >= crate::graph::clique_number(&e.graph)))
    }));
    out.push(Check::new(c, g, "cmobmv >= omega - 1", NONE, || {
        corpus_check(|e| Some(e.cmobmv + 1 >= crate::graph::clique_number(&e.graph)))
    }));
    out.push(Check::new(c, g, "mob(G + K1) >= 3 when omega(G) >= 4, order(G) <= 6", NONE, || {
        let k1 = complete(1).map_err(|e| e.to_string())?;
        let mut bad = Vec::new();
        let mut covered = 0;
        for order in 4..=6 {
            for h in corpus::connected_graphs(order) {
                if crate::graph::clique_number(&h) < 4 {
                    continue;
                }
                covered += 1;
                let j = combine(Combine::Join, &h, &k1).map_err(|e| e.to_string())?;
                if exact(&j, Number::Mob)? < 3 {
                    bad.push(crate::graph::graph6_encode(&h));
                }
            }
        }
        Ok(counterexamples(bad, format!("{covered} joins")))
    }));
}

fn clique_rows(out: &mut Vec<Check>) {
    out.push(Check::new(10, "clique", "fig2_k5minus (omega, mob)", pair(4, 2), || {
        let g = graph("fig2_k5minus")?;
        Ok(pair(crate::graph::clique_number(&g), exact(&g, Number::Mob)?).into())
    }));
    out.push(Check::new(11, "clique", "diam2_tight:7 (mob, cmob, bound)", "(4, 4, 4)", || {
        let g = graph("diam2_tight:7")?;
        let a = analyze(&g);
        let b = bound_mob_clique(a.clique_number, a.diameter.unwrap_or(0)).map_err(|e| e.to_string())?;
        Ok(format!("({}, {}, {})", exact(&g, Number::Mob)?, exact(&g, Number::Cmob)?, b.value).into())
    }));
    for w in 4..=7 {
        let bound = bound_mob_clique(w, 3).map(|b| b.value).unwrap_or(0);
        out.push(Check::new(11, "clique", format!("diam3_tight:{w} mob"), bound, move || {
            exact_on(&format!("diam3_tight:{w}"), Number::Mob)
        }));
    }
}

fn join_rows(out: &mut Vec<Check>) {
    out.push(Check::new(12, "joins", "mobmv(G + K1) = mu_2(G) + 1, connected G of order <= 6", NONE, || {
        let k1 = complete(1).map_err(|e| e.to_string())?;
        let mut bad = Vec::new();
        let mut covered = 0;
        for order in 1..=6 {
            for h in corpus::connected_graphs(order) {
                covered += 1;
                let predicted = classify(&h).join_k1_mobmv.value().ok_or("outside hypothesis")?;
                let j = combine(Combine::Join, &h, &k1).map_err(|e| e.to_string())?;
                let solved = exact(&j, Number::Mobmv)?;
                if solved != predicted {
                    bad.push(format!("{}: {solved} vs {predicted}", crate::graph::graph6_encode(&h)));
                }
            }
        }
        Ok(counterexamples(bad, format!("{covered} graphs")))
    }));
}

/// A tree of cliques: a first clique of order `omega`, then `extra` cliques
/// of random order in `2..=omega`, each glued at a random existing vertex.
pub fn random_block_spec(omega: usize, extra: usize, rng: &mut impl Rng) -> FamilySpec {
    let mut params = vec![omega];
    let mut order = omega;
    for _ in 0..extra {
        let k = rng.gen_range(2..=omega);
        params.extend([k, rng.gen_range(0..order)]);
        order += k - 1;
    }
    FamilySpec::new(FamilyKind::BlockGraph, params)
}

fn block_rows(out: &mut Vec<Check>) {
    let mut rng = ChaCha8Rng::seed_from_u64(BLOCK_SEED);
    for omega in 3..=5 {
        let spec = random_block_spec(omega, 3, &mut rng).to_string();
        out.push(Check::new(
            13,
            "blocks",
            format!("{spec} (cmob, cmobmv)"),
            pair(omega - 1, omega - 1),
            two_numbers(spec, Number::Cmob, Number::Cmobmv),
        ));
    }
}

fn scan_rows(out: &mut Vec<Check>) {
    for n in [5, 6] {
        let t = turan_size(n, 3).unwrap_or(0);
        out.push(Check::new(
            14,
            "scan",
            format!("order {n} corpus, largest mob = 2 graph"),
            format!("{t} edges, only T({n},3)"),
            move || {
                let gs = corpus::connected_graphs(n);
                let s = scan::scan(&gs, opts()).map_err(|e| e.to_string())?;
                let who = if s.turan_unique {
                    format!("only T({n},3)")
                } else {
                    let g6: Vec<String> = s.maximisers.iter().map(|&i| crate::graph::graph6_encode(&gs[i])).collect();
                    format!("maximisers {}", g6.join(" "))
                };
                let value = format!("{} edges, {who}", s.max_mob2_edges.unwrap_or(0));
                Ok(Outcome { value, detail: format!("{} graphs, {} with mob = 2", s.graphs, s.mob2_graphs) })
            },
        ));
    }
}

fn all_subsets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0u32..1 << n).map(move |bits| (0..n).filter(|&i| bits >> i & 1 == 1).collect())
}

fn small_corpus(max_order: usize) -> impl Iterator<Item = Graph> {
    corpus::all_connected().filter(move |g| g.order() <= max_order)
}

/// The solver value a certificate's claim speaks to.
fn claimed_number(cert: &Certificate) -> Option<Number> {
    let gp = cert.kind == PiVariant::GeneralPosition;
    match cert.claim {
        Claim::Mobile => Some(if gp { Number::Mob } else { Number::Mobmv }),
        Claim::CompletelyMobile => Some(if gp { Number::Cmob } else { Number::Cmobmv }),
        _ => None,
    }
}

fn property_rows(out: &mut Vec<Check>) {
    let c = 15;
    let g = "properties";
    out.push(Check::new(c, g, "legal moves are reversible (order <= 6)", NONE, || {
        let mut bad = Vec::new();
        let mut moves = 0;
        for graph in small_corpus(6) {
            let geo = Geometry::new(&graph).map_err(|e| e.to_string())?;
            for kind in [PiKind::GP, PiKind::MV] {
                for s in all_subsets(graph.order()).filter(|&s| !s.is_empty() && geo.is_pi(kind, s)) {
                    for m in legal_moves(&geo, kind, s).map_err(|e| e.to_string())? {
                        moves += 1;
                        let t = s.without(m.from).with(m.to);
                        let back = legal_moves(&geo, kind, t).map_err(|e| e.to_string())?;
                        if !back.contains(&m.reversed()) {
                            bad.push(format!("{} {kind} {m}", crate::graph::graph6_encode(&graph)));
                        }
                    }
                }
            }
        }
        Ok(counterexamples(bad, format!("{moves} moves")))
    }));
    out.push(Check::new(c, g, "general position sets are mutual-visibility sets (order <= 7)", NONE, || {
        let mut bad = Vec::new();
        let mut sets = 0;
        for graph in small_corpus(7) {
            let geo = Geometry::new(&graph).map_err(|e| e.to_string())?;
            for s in all_subsets(graph.order()).filter(|&s| geo.is_pi(PiKind::GP, s)) {
                sets += 1;
                if !geo.is_pi(PiKind::MV, s) {
                    bad.push(format!("{} {:?}", crate::graph::graph6_encode(&graph), s.to_vec()));
                }
            }
        }
        Ok(counterexamples(bad, format!("{sets} general position sets")))
    }));
    out.push(Check::new(c, g, "mob <= gp, mobmv <= mu, cmob <= mob, cmobmv <= mobmv, mob <= mobmv", NONE, || {
        corpus_check(|e| {
            Some(e.mob <= e.gp && e.mobmv <= e.mu && e.cmob <= e.mob && e.cmobmv <= e.mobmv && e.mob <= e.mobmv)
        })
    }));
    out.push(Check::new(c, g, "labeled oracle equals holonomy engine (order <= 6, t <= 4)", NONE, || {
        let mut bad = Vec::new();
        let mut configs = 0;
        for graph in small_corpus(6) {
            let geo = Geometry::new(&graph).map_err(|e| e.to_string())?;
            for kind in [PiKind::GP, PiKind::MV] {
                for t in 1..=4 {
                    for s in geo.enumerate_pi_sets(kind, t) {
                        configs += 1;
                        let cfg = LabeledConfig::new(s.to_vec(), graph.order()).map_err(|e| e.to_string())?;
                        let a = labeled_reach(&geo, kind, &cfg, BUDGET, Engine::Oracle).map_err(|e| e.to_string())?;
                        let b = labeled_reach(&geo, kind, &cfg, BUDGET, Engine::Holonomy).map_err(|e| e.to_string())?;
                        if a != b {
                            bad.push(format!("{} {kind} {:?}", crate::graph::graph6_encode(&graph), s.to_vec()));
                        }
                    }
                }
            }
        }
        Ok(counterexamples(bad, format!("{configs} labeled configurations")))
    }));
    out.push(Check::new(c, g, "solver witness certificates replay (order <= 7)", NONE, || {
        corpus_check(|e| Some(e.witnesses_verified))
    }));
    out.push(Check::new(c, g, "schedule certificates replay within solver values", NONE, || {
        let specs: &[(&str, &[&str])] = &[
            ("strong_grid_gp", &["4", "3"]),
            ("strong_grid_gp", &["5", "4"]),
            ("cart_grid_small", &["3", "3"]),
            ("cart_grid_small", &["4", "3"]),
            ("cart_grid_small", &["4", "4"]),
            ("cart_grid_small", &["5", "3"]),
            ("cart_grid_small", &["5", "4"]),
            ("cart_grid_small", &["6", "3"]),
            ("cart_grid_small", &["6", "4"]),
            ("cart_grid_mv", &["5", "5"]),
            ("half_graph", &["5"]),
            ("half_graph_ext", &["5", "3"]),
            ("half_graph_ext_complete", &["5", "3"]),
            ("half_graph_ext_complete", &["6", "4"]),
            ("hub_shuttle", &["cycle:4"]),
            ("hub_shuttle", &["join_realisation:2,4"]),
            ("escort_clique_gp", &["diam2_tight:7"]),
            ("escort_clique_gp", &["diam3_tight:7"]),
            ("escort_clique_gp", &["clique_with_leaf:6"]),
            ("escort_omega5", &["strong_clique:2,6"]),
            ("clique_mv", &["clique_with_leaf:5"]),
            ("clique_mv_complete", &["clique_with_leaf:5"]),
            ("lkn", &["6"]),
        ];
        let mut bad = Vec::new();
        for &(name, args) in specs {
            let label = format!("{name} {}", args.join(" "));
            let cert = schedule(name, args).map_err(|e| format!("{label}: {e}"))?;
            let v = verify_certificate(&cert);
            if !v.accepted {
                bad.push(format!("{label}: {v}"));
                continue;
            }
            let host = crate::graph::graph6_decode(&cert.graph6).map_err(|e| e.to_string())?;
            if let Some(n) = claimed_number(&cert) {
                let solved = exact(&host, n)?;
                if cert.robots() > solved {
                    bad.push(format!("{label}: {} robots but {n} = {solved}", cert.robots()));
                }
            }
        }
        Ok(counterexamples(bad, format!("{} schedules", specs.len())))
    }));
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filters_select_rows() {
        let all = checks();
        let grids: Vec<&Check> = all.iter().filter(|c| c.selected_by("grids")).collect();
        assert!(!grids.is_empty());
        assert!(grids.iter().all(|c| (2..=4).contains(&c.criterion)));
        assert!(all.iter().filter(|c| c.selected_by("1")).all(|c| c.criterion == 1));
        assert!(all.iter().filter(|c| c.selected_by("5,6")).any(|c| c.criterion == 6));
        let mut crits: Vec<u8> = all.iter().map(|c| c.criterion).collect();
        crits.dedup();
        assert_eq!(crits, (1..=15).collect::<Vec<u8>>());
    }

    #[test]
    fn seeded_wrong_value_fails_one_row() {
        let mut all: Vec<Check> = checks().into_iter().filter(|c| c.criterion == 1).collect();
        assert!(set_expected(&mut all, "hypercube:4 mu", "10"));
        let rows: Vec<Row> = all.iter().map(Check::run).collect();
        let failed: Vec<&str> = rows.iter().filter(|r| !r.pass).map(|r| r.name.as_str()).collect();
        assert_eq!(failed, ["hypercube:4 mu"]);
        let summary = by_criterion(&rows);
        assert_eq!(summary.len(), 1);
        assert!(!summary[0].pass());
    }

    #[test]
    fn block_specs_are_deterministic() {
        let a = random_block_spec(4, 3, &mut ChaCha8Rng::seed_from_u64(7));
        let b = random_block_spec(4, 3, &mut ChaCha8Rng::seed_from_u64(7));
        assert_eq!(a, b);
        let g = family(&a).unwrap();
        assert!(analyze(&g).is_block_graph);
        assert_eq!(crate::graph::clique_number(&g), 4);
    }
}
