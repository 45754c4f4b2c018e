//! The completely mobile schedule on `L(K_n)`.
//!
//! Vertices of `K_n` are split into parts `A = {0..q}`, `B`, `C` of the
//! Turán graph `T(n, 3)` with `q = ⌊n/3⌋` and `|B| ≥ |C|`. Robots sit on
//! the edges of `T(n, 3)` except `b_1 a_i` for `2 ≤ i ≤ q`; those missing
//! edges are the holes. Moves between edges of `T(n, 3)` keep the edge set
//! 3-partite, hence `K_4`-free, hence mutually visible.

use super::{Builder, StrategyError};
use crate::graph::{complete, line_graph, turan_parts, Graph, LineGraph};
use crate::mobility::{Certificate, Claim, Move};
use crate::position::{Geometry, PiKind};
use crate::vertex_set::VertexSet;

const FILL_CAP: u64 = 5_000_000;

struct Parts {
    a: Vec<usize>,
    b: Vec<usize>,
    c: Vec<usize>,
}

impl Parts {
    fn new(n: usize) -> Self {
        let mut sizes = turan_parts(n, 3);
        sizes.sort_unstable();
        let q = sizes[0];
        let (nb, nc) = (sizes[2], sizes[1]);
        Parts { a: (0..q).collect(), b: (q..q + nb).collect(), c: (q + nb..q + nb + nc).collect() }
    }

    fn part_of(&self, v: usize) -> usize {
        if v < self.b[0] {
            0
        } else if v < self.c[0] {
            1
        } else {
            2
        }
    }
}

struct Lkn {
    line: LineGraph,
    parts: Parts,
}

impl Lkn {
    fn e(&self, u: usize, v: usize) -> usize {
        self.line.vertex_of(u, v).expect("an edge of K_n")
    }

    fn turan_edges(&self) -> VertexSet {
        self.line
            .edges
            .iter()
            .enumerate()
            .filter(|(_, &(u, v))| self.parts.part_of(u) != self.parts.part_of(v))
            .map(|(i, _)| i)
            .collect()
    }

    fn holes(&self) -> Vec<usize> {
        let p = &self.parts;
        p.a[1..].iter().map(|&a| self.e(p.b[0], a)).collect()
    }
}

/// Moves from `F` to `F_{x,j}`, in which `x` keeps only `a_j` among its
/// `A`-neighbours. For `x = b_1` this is the move `b_1 a_1 -> b_1 a_j`; for
/// other `x` (with `j = 1`) each edge `x a_i` slides onto the hole `b_1 a_i`.
fn to_f_xj(k: &Lkn, x: usize, j: usize) -> Vec<Move> {
    let p = &k.parts;
    let b1 = p.b[0];
    if x == b1 {
        return if j == 0 { Vec::new() } else { vec![Move::new(k.e(b1, p.a[0]), k.e(b1, p.a[j]))] };
    }
    debug_assert_eq!(j, 0);
    p.a[1..].iter().map(|&ai| Move::new(k.e(x, ai), k.e(b1, ai))).collect()
}

fn visit_segments(b: &mut Builder<'_>, k: &Lkn) {
    let p = &k.parts;
    let b1 = p.b[0];
    for &ai in &p.a[1..] {
        b.segment(&format!("visit hole b1-a{ai}"), |b| {
            let base = b.len();
            b.step(k.e(b1, p.a[0]), k.e(b1, ai))?;
            b.undo_since(base)
        });
    }
    for part in [&p.b, &p.c] {
        for (i, &x) in part.iter().enumerate() {
            for &y in &part[i + 1..] {
                b.segment(&format!("visit {x}-{y}"), |b| {
                    let base = b.len();
                    b.apply(&to_f_xj(k, x, 0))?;
                    b.step(k.e(p.a[0], x), k.e(x, y))?;
                    b.undo_since(base)
                });
            }
        }
    }
    for (j, &aj) in p.a.iter().enumerate() {
        for &ai in &p.a {
            if ai == aj || b.covered().contains(k.e(ai, aj)) {
                continue;
            }
            b.segment(&format!("visit {aj}-{ai}"), |b| {
                let base = b.len();
                b.apply(&to_f_xj(k, b1, j))?;
                let nb = p.b.len();
                for &bk in &p.b[1..nb - 1] {
                    b.step(k.e(aj, bk), k.e(b1, bk))?;
                }
                b.step(k.e(aj, p.b[nb - 1]), k.e(aj, ai))?;
                b.undo_since(base)
            });
        }
    }
}

/// A Hamiltonian cycle of the subgraph of `g` induced by `allowed`, starting
/// at `start`; depth-first with fewest-onward-neighbours ordering.
fn hamiltonian_cycle(g: &Graph, allowed: VertexSet, start: usize) -> Option<Vec<usize>> {
    fn go(g: &Graph, allowed: VertexSet, start: usize, path: &mut Vec<usize>, used: VertexSet, budget: &mut u64) -> bool {
        if *budget == 0 {
            return false;
        }
        *budget -= 1;
        let cur = *path.last().unwrap();
        if used == allowed {
            return g.adjacent(cur, start);
        }
        let free = allowed.difference(used);
        let mut next: Vec<usize> = g.neighbors(cur).intersection(free).iter().collect();
        next.sort_by_key(|&w| (g.neighbors(w).intersection(free).len(), w));
        for w in next {
            path.push(w);
            if go(g, allowed, start, path, used.with(w), budget) {
                return true;
            }
            path.pop();
        }
        false
    }
    let mut path = vec![start];
    let mut budget = 10_000_000u64;
    go(g, allowed, start, &mut path, VertexSet::singleton(start), &mut budget).then_some(path)
}

/// The `t`-robot completely mobile schedule on `L(K_n)`, `n ≥ 6`, with
/// `t = ⌊n²/3⌋ - ⌊n/3⌋ + 1`: the visiting pass from `F` followed by a tour
/// that carries the first hole once around a Hamiltonian cycle of the
/// Turán edges, cycling all robots one place; repeated `t` times.
pub fn lkn_schedule(n: usize) -> Result<Certificate, StrategyError> {
    if !(6..=16).contains(&n) {
        return Err(StrategyError::Range(format!("lkn needs 6 <= n <= 16, got {n}")));
    }
    let kn = complete(n)?;
    let mut line = line_graph(&kn)?;
    line.graph = line.graph.with_name(format!("line_complete:{n}"));
    let k = Lkn { line, parts: Parts::new(n) };
    let geo = Geometry::new(&k.line.graph)?;
    let holes = k.holes();
    let turan = k.turan_edges();
    let f = holes.iter().fold(turan, |s, &h| s.without(h));
    let t = f.len();

    let mut pass = Builder::new(&geo, PiKind::MV, f.to_vec())?;
    visit_segments(&mut pass, &k);
    pass.fill(FILL_CAP)?;
    let (_, visits, mut notes) = pass.into_parts();

    let others = holes[1..].iter().fold(turan, |s, &h| s.without(h));
    let cyc = hamiltonian_cycle(&k.line.graph, others, holes[0])
        .ok_or_else(|| StrategyError::NotApplicable("no Hamiltonian cycle through the Turán edges".into()))?;
    let mut tour: Vec<Move> = cyc.windows(2).map(|w| Move::new(w[1], w[0])).collect();
    tour.push(Move::new(cyc[0], *cyc.last().unwrap()));

    let mut b = Builder::new(&geo, PiKind::MV, f.to_vec())?;
    for _ in 0..t {
        b.apply(&visits).map_err(StrategyError::Rejected)?;
        b.apply(&tour).map_err(StrategyError::Rejected)?;
    }
    for note in notes.drain(..) {
        b.note(note);
    }
    b.finish(Claim::CompletelyMobile)
}
