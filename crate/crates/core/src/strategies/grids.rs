//! Grid schedules. Cartesian grids `P_n □ P_m` use coordinates `(x, y)`
//! with `x ∈ [n]`, `y ∈ [m]`; "left" decreases `x` and "down" decreases `y`.
//! Robots are labelled clockwise around the grid centre starting from the
//! robot in column 1, so `R_i` is robot `i` of the certificate.

use super::{Builder, StrategyError};
use crate::graph::{family, FamilyKind, FamilySpec, Graph};
use crate::mobility::{Certificate, Claim, Move};
use crate::position::{Geometry, PiKind};
use crate::vertex_set::VertexSet;
use std::f64::consts::PI;

const FILL_CAP: u64 = 20_000_000;
const TOUR_CAP: u64 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Grid {
    n: usize,
    m: usize,
}

impl Grid {
    fn id(self, x: usize, y: usize) -> usize {
        (x - 1) * self.m + (y - 1)
    }

    fn xy(self, v: usize) -> (usize, usize) {
        (v / self.m + 1, v % self.m + 1)
    }

    fn offset(self, v: usize, dx: isize, dy: isize) -> Option<usize> {
        let (x, y) = self.xy(v);
        let (x, y) = (x as isize + dx, y as isize + dy);
        let inside = (1..=self.n as isize).contains(&x) && (1..=self.m as isize).contains(&y);
        inside.then(|| self.id(x as usize, y as usize))
    }

    /// Non-identity symmetries as vertex permutations; the diagonal swaps
    /// only when the grid is square.
    fn symmetries(self) -> Vec<Vec<usize>> {
        let (n, m) = (self.n, self.m);
        let swaps: &[bool] = if n == m { &[false, true] } else { &[false] };
        let mut out = Vec::new();
        for &sw in swaps {
            for fx in [false, true] {
                for fy in [false, true] {
                    if !(sw || fx || fy) {
                        continue;
                    }
                    let perm = (0..n * m)
                        .map(|v| {
                            let (mut x, mut y) = self.xy(v);
                            if sw {
                                (x, y) = (y, x);
                            }
                            if fx {
                                x = n + 1 - x;
                            }
                            if fy {
                                y = m + 1 - y;
                            }
                            self.id(x, y)
                        })
                        .collect();
                    out.push(perm);
                }
            }
        }
        out
    }

    fn graph(self, kind: FamilyKind) -> Result<Graph, StrategyError> {
        Ok(family(&FamilySpec::new(kind, [self.n, self.m]))?)
    }
}

/// Orders points clockwise around the grid centre, starting from the left
/// and rotated so that the first point lies in column 1.
fn clockwise(pts: &[(usize, usize)], grid: Grid) -> Vec<(usize, usize)> {
    let cx = (grid.n as f64 + 1.0) / 2.0;
    let cy = (grid.m as f64 + 1.0) / 2.0;
    let key = |&(x, y): &(usize, usize)| (PI - (y as f64 - cy).atan2(x as f64 - cx)).rem_euclid(2.0 * PI);
    let mut sorted = pts.to_vec();
    sorted.sort_by(|a, b| key(a).total_cmp(&key(b)));
    let first = sorted.iter().position(|p| p.0 == 1).unwrap_or(0);
    sorted.rotate_left(first);
    sorted
}

/// Stationing for `P_{m+1} □ P_m`: `2m` robots two per row.
fn stations_next(m: usize) -> Vec<(usize, usize)> {
    let mut pts = Vec::new();
    if m % 2 == 1 {
        let f = |t: usize| 1 + (m.div_ceil(2)).abs_diff(t);
        pts.extend((1..=m).map(|i| (f(i), i)));
        pts.extend((1..=m).map(|i| (m + 2 - f(i), i)));
    } else {
        let f = |t: usize| 1 + (m / 2).abs_diff(t);
        pts.extend((1..=m).map(|i| (f(i), i)));
        pts.extend((1..=m / 2).map(|i| (m + 1 - f(i), i)));
        pts.extend((m / 2 + 1..=m).map(|i| (m + 3 - f(i), i)));
    }
    pts
}

/// Stationing for the square `P_n □ P_n`: `2n - 1` robots.
fn stations_square(n: usize) -> Vec<(usize, usize)> {
    let f = |t: usize| 1 + (n / 2 + 1).abs_diff(t);
    let mut pts: Vec<_> = (1..=n).map(|i| (f(i), i)).collect();
    if n.is_multiple_of(2) {
        pts.extend((2..=n / 2).map(|i| (n + 2 - f(i), i)));
        pts.extend((n / 2 + 1..=n).map(|i| (n + 1 - f(i), i)));
    } else {
        let c = n.div_ceil(2);
        pts.extend((2..=c).map(|i| (n + 1 - f(i), i)));
        pts.extend((c + 1..=n).map(|i| (n + 2 - f(i), i)));
    }
    pts
}

struct Run<'a> {
    b: Builder<'a>,
    grid: Grid,
}

impl<'a> Run<'a> {
    fn new(geo: &'a Geometry, grid: Grid, kind: PiKind, pts: &[(usize, usize)]) -> Result<Self, StrategyError> {
        let start = pts.iter().map(|&(x, y)| grid.id(x, y)).collect();
        Ok(Run { b: Builder::new(geo, kind, start)?, grid })
    }

    /// Moves robot `r` by one step.
    fn go(&mut self, r: usize, dx: isize, dy: isize) -> Result<(), String> {
        let from = self.b.pos(r);
        let to = self.grid.offset(from, dx, dy).ok_or_else(|| format!("R{r} would leave the grid"))?;
        self.b.step(from, to).map_err(|e| format!("R{r}: {e}"))
    }

    fn left(&mut self, r: usize) -> Result<(), String> {
        self.go(r, -1, 0)
    }

    fn right(&mut self, r: usize) -> Result<(), String> {
        self.go(r, 1, 0)
    }

    /// Moves the robot on `(x, y)` by one step.
    fn go_at(&mut self, (x, y): (usize, usize), dx: isize, dy: isize) -> Result<(), String> {
        let r = self.b.robot_at(self.grid.id(x, y)).ok_or_else(|| format!("no robot on ({x},{y})"))?;
        self.go(r, dx, dy)
    }

    /// The literal move `(x1, y1) -> (x2, y2)`; a walk when not adjacent.
    fn literal(&mut self, a: (usize, usize), c: (usize, usize)) -> Result<(), String> {
        let (u, v) = (self.grid.id(a.0, a.1), self.grid.id(c.0, c.1));
        if self.b.geometry().graph().adjacent(u, v) {
            self.b.step(u, v)
        } else {
            self.b.note(format!("move {a:?}->{c:?} is not an edge; replaced by a geodesic walk"));
            self.b.walk(u, v)
        }
    }

    /// Runs `f` from the current configuration, then undoes it; returns the
    /// moves `f` made, or `None` when `f` failed (and was noted).
    fn excursion(&mut self, label: &str, f: impl FnOnce(&mut Self) -> Result<(), String>) -> Option<Vec<Move>> {
        let mark = self.b.mark();
        let base = self.b.len();
        match f(self) {
            Ok(()) => {
                let seg = self.b.moves()[base..].to_vec();
                self.b.undo_since(base).expect("undoing legal moves is legal");
                Some(seg)
            }
            Err(e) => {
                self.b.rewind(mark);
                self.b.note(format!("{label}: skipped, {e}"));
                None
            }
        }
    }

    /// For each grid symmetry `g` whose image of the current configuration
    /// occurs along `seg`, replays `seg` up to that point and then the image
    /// of `seg`, undoing both. Must be called at the configuration `seg`
    /// started from.
    fn close_under_symmetry(&mut self, seg: &[Move]) -> Result<(), StrategyError> {
        let s0 = self.b.occupied();
        let mut traj = vec![s0];
        let mut cur = s0;
        for m in seg {
            cur = cur.without(m.from).with(m.to);
            traj.push(cur);
        }
        let reach = traj.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s));
        for perm in self.grid.symmetries() {
            let img: VertexSet = s0.iter().map(|v| perm[v]).collect();
            let Some(k) = traj.iter().position(|&s| s == img) else { continue };
            let img_reach: VertexSet = reach.iter().map(|v| perm[v]).collect();
            if img_reach.is_subset(self.b.covered()) {
                continue;
            }
            let mapped: Vec<Move> = seg.iter().map(|m| Move::new(perm[m.from], perm[m.to])).collect();
            let base = self.b.len();
            self.b.apply(&seg[..k]).map_err(StrategyError::Rejected)?;
            self.b.apply(&mapped).map_err(StrategyError::Rejected)?;
            self.b.undo_since(base).map_err(StrategyError::Rejected)?;
        }
        Ok(())
    }

    fn finish(self, claim: Claim) -> Result<Certificate, StrategyError> {
        self.b.finish(claim)
    }
}

/// A schedule on a small grid, to be replayed in a larger one.
struct Window {
    grid: Grid,
    start: Vec<usize>,
    moves: Vec<Move>,
    notes: Vec<String>,
}

impl Window {
    fn from_run(run: Run<'_>) -> Self {
        let grid = run.grid;
        let (start, moves, notes) = run.b.into_parts();
        Window { grid, start, moves, notes }
    }
}

/// Replays `w` in `P_n □ P_m` at column offsets `0, 1, ..`, shifting every
/// robot one column right (largest `x` first) between copies.
fn shifted_windows(w: &Window, n: usize, kind: FamilyKind) -> Result<Certificate, StrategyError> {
    let grid = Grid { n, m: w.grid.m };
    let g = grid.graph(kind)?;
    let geo = Geometry::new(&g)?;
    let map = |v: usize, c: usize| {
        let (x, y) = w.grid.xy(v);
        grid.id(x + c, y)
    };
    let pts: Vec<_> = w.start.iter().map(|&v| grid.xy(map(v, 0))).collect();
    let mut run = Run::new(&geo, grid, PiKind::MV, &pts)?;
    for note in &w.notes {
        run.b.note(format!("window: {note}"));
    }
    let last = n - w.grid.n;
    for c in 0..=last {
        let moves: Vec<Move> = w.moves.iter().map(|m| Move::new(map(m.from, c), map(m.to, c))).collect();
        run.b.apply(&moves).map_err(StrategyError::Rejected)?;
        if c == last {
            break;
        }
        let shifted = run.b.segment(&format!("shift to offset {}", c + 1), |b| {
            let mut robots: Vec<usize> = (0..b.robots()).collect();
            robots.sort_by_key(|&r| std::cmp::Reverse(grid.xy(b.pos(r)).0));
            for r in robots {
                let v = b.pos(r);
                let to = grid.offset(v, 1, 0).ok_or("robot at the right edge")?;
                b.step(v, to)?;
            }
            Ok(())
        });
        if !shifted {
            break;
        }
    }
    run.b.fill(FILL_CAP)?;
    run.finish(Claim::Mobile)
}

/// The sweep schedule on `P_{m+1} □ P_m`, `m ≥ 3`. With `complete` set the
/// remaining vertices are filled in by configuration search.
fn next_window(m: usize, complete: bool) -> Result<Window, StrategyError> {
    let grid = Grid { n: m + 1, m };
    let g = grid.graph(FamilyKind::CartesianGrid)?;
    let geo = Geometry::new(&g)?;
    let pts = clockwise(&stations_next(m), grid);
    let mut run = Run::new(&geo, grid, PiKind::MV, &pts)?;
    let t = 2 * m;
    let seg = run.excursion("sweep rounds", |run| {
        for k in 1..m / 2 {
            for i in k..m + k {
                run.left(i % t)?;
            }
            for i in m + k..2 * m + k {
                run.right(i % t)?;
            }
        }
        let occ = |run: &Run, x, y| run.b.robot_at(grid.id(x, y)).is_some();
        if occ(run, 2, m) && !occ(run, 1, m) {
            run.go_at((2, m), -1, 0)?;
        }
        if occ(run, m, 1) {
            run.go_at((m, 1), 1, 0)?;
        }
        Ok(())
    });
    if let Some(seg) = seg {
        run.close_under_symmetry(&seg)?;
    }
    if m % 2 == 1 && m >= 5 {
        run.excursion("centre sequence", |run| {
            run.right(m - 1)?;
            run.left(m)?;
            for i in 1..m - 1 {
                run.left(i)?;
            }
            run.left(m)?;
            if m > 5 {
                for i in (m + 1..2 * m).chain([0]) {
                    run.right(i % t)?;
                }
                for k in 1..(m / 2).saturating_sub(2) {
                    for i in k + 1..m + k {
                        run.left(i % t)?;
                    }
                    for i in m + k + 1..2 * m + k {
                        run.right(i % t)?;
                    }
                }
                let k = m / 2 - 2;
                for i in k + 1..m + k {
                    run.left(i % t)?;
                    if i == m {
                        break;
                    }
                }
            }
            Ok(())
        });
    }
    if complete {
        run.b.fill(FILL_CAP)?;
    }
    Ok(Window::from_run(run))
}

/// The square schedule on `P_n □ P_n`, `n ≥ 5`, with `2n - 1` robots.
fn square(n: usize) -> Result<Certificate, StrategyError> {
    let grid = Grid { n, m: n };
    let g = grid.graph(FamilyKind::CartesianGrid)?;
    let geo = Geometry::new(&g)?;
    let pts = clockwise(&stations_square(n), grid);
    let mut run = Run::new(&geo, grid, PiKind::MV, &pts)?;
    let t = 2 * n - 1;
    let seg = run.excursion("sweep rounds", |run| {
        for k in 1..=n.div_ceil(2) - 2 {
            for i in k..n - 1 + k {
                run.left(i % t)?;
            }
            for i in n + k..2 * n - 1 + k {
                run.right(i % t)?;
            }
        }
        if run.b.robot_at(grid.id(2, n)).is_some() {
            run.go_at((2, n), -1, 0)?;
        }
        Ok(())
    });
    if let Some(seg) = seg {
        run.close_under_symmetry(&seg)?;
    }
    if n == 5 {
        run.excursion("centre sequence", |run| {
            run.left(1)?;
            run.right(0)?;
            run.left(8)?;
            run.go(8, 0, -1)?;
            run.left(7)?;
            run.go(7, 0, 1)?;
            run.go(6, 0, -1)?;
            run.right(0)
        });
    } else if n % 2 == 1 {
        square_centre(&mut run, n);
    }
    run.b.fill(FILL_CAP)?;
    run.finish(Claim::Mobile)
}

/// The odd-square centre sequence. Its third move names a robot index that
/// is not well defined; every index is tried, `2n - 2` first, and the first
/// one under which the whole sequence replays legally is used.
fn square_centre(run: &mut Run<'_>, n: usize) {
    let t = 2 * n - 1;
    let h = n / 2;
    let seq = |run: &mut Run, x: usize| -> Result<(), String> {
        run.left(1)?;
        run.right(0)?;
        run.left(x)?;
        for i in 0..=h - 2 {
            run.go((2 * n - h + i) % t, 0, -1)?;
        }
        for i in 2..=h {
            run.left((2 * n - 1 - i) % t)?;
            run.right(0)?;
            run.left(i)?;
        }
        Ok(())
    };
    let candidates = std::iter::once(2 * n - 2).chain((0..t).filter(|&x| x != 2 * n - 2));
    let mut legal = Vec::new();
    for x in candidates {
        let mark = run.b.mark();
        let ok = seq(run, x).is_ok();
        run.b.rewind(mark);
        if ok {
            legal.push(x);
        }
    }
    match legal.first() {
        Some(&x) => {
            run.b.note(format!(
                "centre sequence: undefined robot index read as R{x} ({} of {t} indices replay legally)",
                legal.len()
            ));
            run.excursion("centre sequence", |run| seq(run, x));
        }
        None => run.b.note("centre sequence: no robot index makes the sequence legal; skipped"),
    }
}

/// Mobile mutual-visibility schedule on `P_n □ P_m` for `n ≥ m ≥ 5`: `2m`
/// robots when `n > m`, `2m - 1` when `n = m`.
pub fn cart_grid_mv(n: usize, m: usize) -> Result<Certificate, StrategyError> {
    if m < 5 || n < m {
        return Err(StrategyError::Range(format!("cart_grid_mv needs n >= m >= 5, got ({n}, {m})")));
    }
    if n == m {
        return square(n);
    }
    let w = next_window(m, true)?;
    if n == m + 1 {
        let grid = w.grid;
        let g = grid.graph(FamilyKind::CartesianGrid)?;
        let geo = Geometry::new(&g)?;
        let pts: Vec<_> = w.start.iter().map(|&v| grid.xy(v)).collect();
        let mut run = Run::new(&geo, grid, PiKind::MV, &pts)?;
        for note in &w.notes {
            run.b.note(note.clone());
        }
        run.b.apply(&w.moves).map_err(StrategyError::Rejected)?;
        return run.finish(Claim::Mobile);
    }
    shifted_windows(&w, n, FamilyKind::CartesianGrid)
}

type Literal = &'static [((usize, usize), (usize, usize))];

/// Runs literal move lists, each from the stationing and undone afterwards,
/// closing each under the grid symmetries.
fn literal_runs(run: &mut Run<'_>, lists: &[Literal]) -> Result<(), StrategyError> {
    for (i, list) in lists.iter().enumerate() {
        let base = run.b.len();
        for (k, &(a, c)) in list.iter().enumerate() {
            let mark = run.b.mark();
            if let Err(e) = run.literal(a, c) {
                run.b.rewind(mark);
                run.b.note(format!("move list {}: stopped before move {} ({e}); legal prefix kept", i + 1, k + 1));
                break;
            }
        }
        let seg = run.b.moves()[base..].to_vec();
        run.b.undo_since(base).map_err(StrategyError::Rejected)?;
        run.close_under_symmetry(&seg)?;
    }
    Ok(())
}

fn small_run(n: usize, m: usize, pts: &[(usize, usize)], lists: &[Literal], claim: Claim) -> Result<Certificate, StrategyError> {
    let grid = Grid { n, m };
    let g = grid.graph(FamilyKind::CartesianGrid)?;
    let geo = Geometry::new(&g)?;
    let mut run = Run::new(&geo, grid, PiKind::MV, pts)?;
    literal_runs(&mut run, lists)?;
    run.b.fill(FILL_CAP)?;
    if claim == Claim::CompletelyMobile {
        run.b.fill_labeled(TOUR_CAP)?;
    }
    run.finish(claim)
}

const P33: &[(usize, usize)] = &[(1, 2), (2, 1), (2, 3), (3, 2)];
const P33_MOVES: Literal = &[((2, 1), (3, 1)), ((2, 3), (1, 1)), ((1, 2), (2, 2))];
const P43: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 1), (4, 2), (4, 3)];
const P43_MOVES: Literal = &[((1, 2), (2, 2)), ((2, 1), (1, 1)), ((1, 3), (2, 3))];
const P44: &[(usize, usize)] = &[(1, 2), (1, 3), (2, 4), (3, 1), (3, 4), (4, 2), (4, 3)];
const P44_MOVES: &[Literal] = &[
    &[((1, 2), (2, 2)), ((2, 4), (1, 4))],
    &[((3, 1), (2, 1))],
    &[((1, 2), (1, 1)), ((1, 1), (2, 1))],
];
const P53_MOVES: Literal = &[
    ((3, 1), (4, 1)),
    ((4, 1), (5, 1)),
    ((3, 3), (4, 3)),
    ((4, 3), (5, 3)),
    ((2, 1), (1, 1)),
    ((1, 2), (2, 2)),
    ((2, 3), (1, 3)),
    ((2, 2), (3, 2)),
];

fn window_of(n: usize, m: usize, pts: &[(usize, usize)], lists: &[Literal]) -> Result<Window, StrategyError> {
    let grid = Grid { n, m };
    let g = grid.graph(FamilyKind::CartesianGrid)?;
    let geo = Geometry::new(&g)?;
    let mut run = Run::new(&geo, grid, PiKind::MV, pts)?;
    literal_runs(&mut run, lists)?;
    run.b.fill(FILL_CAP)?;
    Ok(Window::from_run(run))
}

/// Schedules for the small Cartesian grids `P_n □ P_3` and `P_n □ P_4`,
/// `n ≥ m`. `P_3 □ P_3` and `P_4 □ P_4` get completely mobile certificates.
pub fn cart_grid_small(n: usize, m: usize) -> Result<Certificate, StrategyError> {
    match (n, m) {
        (3, 3) => small_run(3, 3, P33, &[P33_MOVES], Claim::CompletelyMobile),
        (4, 3) => small_run(4, 3, P43, &[P43_MOVES], Claim::Mobile),
        (4, 4) => small_run(4, 4, P44, P44_MOVES, Claim::CompletelyMobile),
        (5, 3) => small_run(5, 3, &stations_next(3), &[P53_MOVES], Claim::Mobile),
        (5, 4) => shifted_windows(&window_of(4, 4, P44, P44_MOVES)?, 5, FamilyKind::CartesianGrid),
        (n, 3) if n >= 6 => shifted_windows(&window_of(5, 3, &stations_next(3), &[P53_MOVES])?, n, FamilyKind::CartesianGrid),
        (n, 4) if n >= 6 => shifted_windows(&next_window(4, false)?, n, FamilyKind::CartesianGrid),
        _ => Err(StrategyError::Range(format!("cart_grid_small needs m in {{3, 4}} and n >= m, got ({n}, {m})"))),
    }
}

/// Four robots in general position on `P_r ⊠ P_s`, `r ≥ s ≥ 3`, stationed
/// at the corners of an `s × s` window that sweeps its triangles and
/// diagonal and then shifts right.
pub fn strong_grid_gp(r: usize, s: usize) -> Result<Certificate, StrategyError> {
    if s < 3 || r < s {
        return Err(StrategyError::Range(format!("strong_grid_gp needs r >= s >= 3, got ({r}, {s})")));
    }
    let grid = Grid { n: r, m: s };
    let g = grid.graph(FamilyKind::StrongGrid)?;
    let geo = Geometry::new(&g)?;
    let id = |x, y| grid.id(x, y);
    let mut b = Builder::new(&geo, PiKind::GP, vec![id(1, 1), id(1, s), id(s, s), id(s, 1)])?;
    for t in 0..=r - s {
        let x = |i: usize| t + i;
        // upper triangle from (1, s), lower triangle from (s, 1)
        for (corner, upper) in [((1, s), true), ((s, 1), false)] {
            for i in 1..=s {
                for j in 1..=s {
                    if (upper && i < j || !upper && i > j) && (i, j) != corner {
                        let from = id(x(corner.0), corner.1);
                        let to = id(x(i), j);
                        b.segment(&format!("window {t}: reach ({},{j})", x(i)), |b| {
                            let base = b.len();
                            b.walk(from, to)?;
                            b.undo_since(base)
                        });
                    }
                }
            }
        }
        b.segment(&format!("window {t}: diagonal sweep"), |b| {
            let base = b.len();
            for j in (2..s).rev() {
                b.step(id(x(1), j + 1), id(x(1), j))?;
            }
            for i in (2..s).rev() {
                b.step(id(x(i + 1), 1), id(x(i), 1))?;
            }
            for i in (2..s).rev() {
                b.step(id(x(i + 1), i + 1), id(x(i), i))?;
            }
            b.undo_since(base)
        });
        if t < r - s {
            let ok = b.segment(&format!("shift to window {}", t + 1), |b| {
                b.step(id(x(s), 1), id(x(s) + 1, 1))?;
                b.step(id(x(s), s), id(x(s) + 1, s))?;
                b.step(id(x(1), 1), id(x(1) + 1, 1))?;
                b.step(id(x(1), s), id(x(1) + 1, s))
            });
            if !ok {
                break;
            }
        }
    }
    b.fill(FILL_CAP)?;
    b.finish(Claim::Mobile)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mobility::verify_certificate;

    fn check(cert: &Certificate, robots: usize) {
        let v = verify_certificate(cert);
        assert!(v.accepted, "{v}");
        assert_eq!(cert.robots(), robots);
    }

    #[test]
    fn labelling_starts_in_column_one() {
        let grid = Grid { n: 6, m: 5 };
        let pts = clockwise(&stations_next(5), grid);
        assert_eq!(pts.len(), 10);
        assert_eq!(pts[0], (1, 3));
        assert_eq!(pts[1].0, 2);
        assert!(pts[1].1 > 3);
    }

    #[test]
    fn stationings_are_mutually_visible() {
        for m in 3..=8 {
            let grid = Grid { n: m + 1, m };
            let g = grid.graph(FamilyKind::CartesianGrid).unwrap();
            let geo = Geometry::new(&g).unwrap();
            let s: VertexSet = stations_next(m).iter().map(|&(x, y)| grid.id(x, y)).collect();
            assert_eq!(s.len(), 2 * m);
            assert!(geo.is_pi(PiKind::MV, s), "m = {m}");
        }
        for n in 5..=8 {
            let grid = Grid { n, m: n };
            let g = grid.graph(FamilyKind::CartesianGrid).unwrap();
            let geo = Geometry::new(&g).unwrap();
            let s: VertexSet = stations_square(n).iter().map(|&(x, y)| grid.id(x, y)).collect();
            assert_eq!(s.len(), 2 * n - 1);
            assert!(geo.is_pi(PiKind::MV, s), "n = {n}");
        }
    }

    #[test]
    fn large_grids() {
        check(&cart_grid_mv(6, 5).unwrap(), 10);
        check(&cart_grid_mv(5, 5).unwrap(), 9);
        check(&cart_grid_mv(7, 5).unwrap(), 10);
        assert!(cart_grid_mv(5, 4).is_err());
        assert!(cart_grid_mv(5, 6).is_err());
    }

    #[test]
    fn small_grids() {
        let c = cart_grid_small(3, 3).unwrap();
        check(&c, 4);
        assert_eq!(c.claim, Claim::CompletelyMobile);
        assert!(c.notes.iter().any(|x| x.contains("not an edge")));
        check(&cart_grid_small(4, 3).unwrap(), 5);
        let c = cart_grid_small(4, 4).unwrap();
        check(&c, 7);
        assert_eq!(c.claim, Claim::CompletelyMobile);
        check(&cart_grid_small(5, 3).unwrap(), 6);
        check(&cart_grid_small(5, 4).unwrap(), 7);
        check(&cart_grid_small(6, 3).unwrap(), 6);
        check(&cart_grid_small(6, 4).unwrap(), 8);
        assert!(cart_grid_small(3, 4).is_err());
        assert!(cart_grid_small(6, 5).is_err());
    }

    #[test]
    fn strong_grids() {
        for (r, s) in [(3, 3), (4, 3), (4, 4), (5, 3), (6, 4)] {
            let c = strong_grid_gp(r, s).unwrap();
            check(&c, 4);
        }
        assert!(strong_grid_gp(3, 4).is_err());
    }
}
