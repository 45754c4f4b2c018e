//! Brute-force reference implementations, written independently of the
//! library's interval machinery, and the values they pin down.

use mobpos_core::corpus;
use mobpos_core::graph::*;
use mobpos_core::mobility::*;
use mobpos_core::position::*;
use mobpos_core::{Graph, VertexSet};
use proptest::prelude::*;
use std::collections::{HashSet, VecDeque};

const INF: usize = usize::MAX / 4;

fn floyd(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.adjacent(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                d[i][j] = d[i][j].min(d[i][k] + d[k][j]);
            }
        }
    }
    d
}

/// Every shortest `u,v`-path as a vertex list.
fn geodesics(g: &Graph, d: &[Vec<usize>], u: usize, v: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, d: &[Vec<usize>], v: usize, path: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let x = *path.last().unwrap();
        if x == v {
            out.push(path.clone());
            return;
        }
        for y in 0..g.order() {
            if g.adjacent(x, y) && d[y][v] + 1 == d[x][v] {
                path.push(y);
                go(g, d, v, path, out);
                path.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(g, d, v, &mut vec![u], &mut out);
    out
}

fn oracle_gp(g: &Graph, d: &[Vec<usize>], s: &[usize]) -> bool {
    s.iter().all(|&u| {
        s.iter().all(|&v| {
            u >= v || geodesics(g, d, u, v).iter().all(|p| p.iter().filter(|x| s.contains(x)).count() <= 2)
        })
    })
}

fn oracle_mv(g: &Graph, d: &[Vec<usize>], s: &[usize]) -> bool {
    s.iter().all(|&u| {
        s.iter().all(|&v| {
            u >= v || geodesics(g, d, u, v).iter().any(|p| p[1..p.len() - 1].iter().all(|x| !s.contains(x)))
        })
    })
}

fn oracle_pi(g: &Graph, d: &[Vec<usize>], kind: PiKind, s: &[usize]) -> bool {
    let base = match kind.variant {
        PiVariant::GeneralPosition => oracle_gp(g, d, s),
        PiVariant::MutualVisibility => oracle_mv(g, d, s),
    };
    base && kind.radius.is_none_or(|r| s.iter().all(|&u| s.iter().all(|&v| d[u][v] <= r)))
}

fn members(bits: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&i| bits >> i & 1 == 1).collect()
}

fn to_set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

/// All oracle π-sets of `g`, as bit masks.
fn oracle_table(g: &Graph, kind: PiKind) -> Vec<bool> {
    let d = floyd(g);
    let n = g.order();
    (0..1u32 << n).map(|b| oracle_pi(g, &d, kind, &members(b, n))).collect()
}

/// Reference mob/mobmv: explicit search over every configuration of each size.
fn oracle_mobile_number(g: &Graph, table: &[bool]) -> usize {
    let n = g.order();
    let full = (1u32 << n) - 1;
    for t in (1..=n).rev() {
        let mut seen = HashSet::new();
        for start in 0..=full {
            if start.count_ones() as usize != t || !table[start as usize] || seen.contains(&start) {
                continue;
            }
            let mut union = 0;
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(s) = queue.pop_front() {
                union |= s;
                for u in members(s, n) {
                    for w in 0..n {
                        let next = s & !(1 << u) | 1 << w;
                        if s >> w & 1 == 0 && g.adjacent(u, w) && table[next as usize] && seen.insert(next) {
                            queue.push_back(next);
                        }
                    }
                }
            }
            if union == full {
                return t;
            }
        }
    }
    0
}

/// Reference cmob/cmobmv: explicit search over labeled tuples.
fn oracle_cmob(g: &Graph, table: &[bool]) -> usize {
    let n = g.order();
    let full = (1u32 << n) - 1;
    for t in (1..=n).rev() {
        for start in 0..=full {
            if start.count_ones() as usize != t || !table[start as usize] {
                continue;
            }
            let tuple = members(start, n);
            let mut visits = vec![0u32; t];
            let mut seen = HashSet::from([tuple.clone()]);
            let mut queue = VecDeque::from([tuple]);
            while let Some(p) = queue.pop_front() {
                for (r, &v) in p.iter().enumerate() {
                    visits[r] |= 1 << v;
                }
                let occ: u32 = p.iter().map(|&v| 1u32 << v).sum();
                for r in 0..t {
                    for w in 0..n {
                        let next_occ = occ & !(1 << p[r]) | 1 << w;
                        if occ >> w & 1 == 0 && g.adjacent(p[r], w) && table[next_occ as usize] {
                            let mut q = p.clone();
                            q[r] = w;
                            if seen.insert(q.clone()) {
                                queue.push_back(q);
                            }
                        }
                    }
                }
            }
            if visits.iter().all(|&v| v == full) {
                return t;
            }
        }
    }
    0
}

fn small_corpus(max_order: usize) -> Vec<Graph> {
    corpus::all_connected().filter(|g| g.order() <= max_order).collect()
}

const KINDS: [PiKind; 3] = [PiKind::GP, PiKind::MV, PiKind { variant: PiVariant::MutualVisibility, radius: Some(2) }];

#[test]
fn predicates_match_path_enumeration() {
    for g in small_corpus(6) {
        let geo = Geometry::new(&g).unwrap();
        let d = g.distances();
        let n = g.order();
        for kind in KINDS {
            let table = oracle_table(&g, kind);
            for b in 0..1u32 << n {
                let s = to_set(&members(b, n));
                let expect = table[b as usize];
                assert_eq!(geo.is_pi(kind, s), expect, "{g:?} {kind} {s:?}");
                assert_eq!(is_pi_set(&g, &d, kind, s).unwrap(), expect, "{g:?} {kind} {s:?}");
                if expect {
                    for w in g.vertices().difference(s).iter() {
                        assert_eq!(geo.can_add(kind, s, w), table[(b | 1 << w) as usize], "{g:?} {kind} {s:?} + {w}");
                    }
                }
            }
        }
    }
}

#[test]
fn max_sets_match_subset_search() {
    for g in small_corpus(7) {
        let geo = Geometry::new(&g).unwrap();
        for kind in KINDS {
            let table = oracle_table(&g, kind);
            let best = (0..table.len()).filter(|&b| table[b]).map(|b| b.count_ones() as usize).max().unwrap();
            let (size, witness) = geo.max_pi_set(kind);
            assert_eq!(size, best, "{g:?} {kind}");
            assert!(table[witness.bits() as usize]);
            let count = (0..table.len()).filter(|&b| table[b] && b.count_ones() as usize == best).count();
            assert_eq!(geo.enumerate_pi_sets(kind, best).len(), count);
        }
    }
}

#[test]
fn mobile_numbers_match_reference_search() {
    for g in small_corpus(6) {
        let geo = Geometry::new(&g).unwrap();
        for kind in [PiKind::GP, PiKind::MV] {
            let table = oracle_table(&g, kind);
            let mob = mobile_number(&geo, kind, SearchOptions::default()).unwrap();
            assert_eq!(mob.value, oracle_mobile_number(&g, &table), "{g:?} {kind}");
            assert!(verify_certificate(&mob.lower_witness).accepted);
            let cmob = completely_mobile_number(&geo, kind, SearchOptions::default()).unwrap();
            assert_eq!(cmob.value, oracle_cmob(&g, &table), "{g:?} {kind}");
            assert!(verify_certificate(&cmob.lower_witness).accepted);
        }
    }
}

#[test]
fn clique_numbers_match_subset_search() {
    for g in small_corpus(7) {
        let n = g.order();
        let best = (0..1u32 << n)
            .filter(|&b| {
                let m = members(b, n);
                m.iter().all(|&u| m.iter().all(|&v| u == v || g.adjacent(u, v)))
            })
            .map(|b| b.count_ones() as usize)
            .max()
            .unwrap();
        assert_eq!(clique_number(&g), best);
    }
    let fig2 = family(&"fig2_k5minus".parse().unwrap()).unwrap();
    assert_eq!(clique_number(&fig2), 4);
}

#[test]
fn line_graph_of_k6() {
    let l = line_graph(&complete(6).unwrap()).unwrap();
    assert_eq!(l.graph.order(), 15);
    assert!((0..15).all(|v| l.graph.degree(v) == 8));
    let table = oracle_table(&l.graph, PiKind::MV);
    let mu = (0..table.len()).filter(|&b| table[b]).map(|b| b.count_ones()).max().unwrap();
    assert_eq!(mu, 12);
    assert_eq!(Geometry::new(&l.graph).unwrap().max_pi_set(PiKind::MV).0, 12);
}

fn k4_free(lg: &LineGraph, n: usize, s: VertexSet) -> bool {
    let adj = |a: usize, b: usize| lg.vertex_of(a, b).is_some_and(|v| s.contains(v));
    (0..n).all(|a| {
        (a + 1..n).all(|b| {
            (b + 1..n).all(|c| (c + 1..n).all(|d| !(adj(a, b) && adj(a, c) && adj(a, d) && adj(b, c) && adj(b, d) && adj(c, d))))
        })
    })
}

#[test]
fn visibility_in_line_graphs_is_k4_freeness() {
    let lg = line_graph(&complete(6).unwrap()).unwrap();
    let geo = Geometry::new(&lg.graph).unwrap();
    for b in 0..1u128 << 15 {
        let s = VertexSet::from_bits(b);
        assert_eq!(geo.is_pi(PiKind::MV, s), k4_free(&lg, 6, s), "{s:?}");
    }
}

#[test]
fn c4_moves() {
    let c4 = cycle(4).unwrap();
    let geo = Geometry::new(&c4).unwrap();
    let d = floyd(&c4);
    for b in 0..16u32 {
        let s = members(b, 4);
        if s.len() != 3 || !oracle_mv(&c4, &d, &s) {
            continue;
        }
        let mut expect = Vec::new();
        for &u in &s {
            for w in 0..4 {
                let next: Vec<usize> = s.iter().map(|&x| if x == u { w } else { x }).collect();
                let mut sorted = next.clone();
                sorted.sort();
                if !s.contains(&w) && c4.adjacent(u, w) && oracle_mv(&c4, &d, &sorted) {
                    expect.push(Move::new(u, w));
                }
            }
        }
        assert_eq!(legal_moves(&geo, PiKind::MV, to_set(&s)).unwrap(), expect);
    }
    let moves = legal_moves(&geo, PiKind::MV, to_set(&[0, 1, 2])).unwrap();
    assert!(moves.contains(&Move::new(2, 3)));
}

#[test]
fn mu2_of_claw() {
    let claw = star(3).unwrap();
    let table = oracle_table(&claw, PiKind::mv_radius(2));
    let best = (0..table.len()).filter(|&b| table[b]).map(|b| b.count_ones()).max().unwrap();
    assert_eq!(best, 3);
}

#[test]
fn engines_agree_on_small_graphs() {
    for g in small_corpus(6) {
        let geo = Geometry::new(&g).unwrap();
        for kind in [PiKind::GP, PiKind::MV] {
            for t in 1..=4.min(g.order()) {
                for s in geo.enumerate_pi_sets(kind, t) {
                    let c = LabeledConfig::new(s.to_vec(), g.order()).unwrap();
                    let a = labeled_reach(&geo, kind, &c, 1 << 24, Engine::Oracle).unwrap();
                    let b = labeled_reach(&geo, kind, &c, 1 << 24, Engine::Holonomy).unwrap();
                    assert_eq!(a, b, "{g:?} {kind} {s:?}");
                }
            }
        }
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for j in 1..n {
                for i in 0..j {
                    if bits[k] {
                        edges.push((i, j));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn arb_connected(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_map(|g| {
        // join a spanning path onto the components to force connectivity
        let n = g.order();
        let extra = (1..n).filter(|&v| !g.component_of(0).contains(v)).map(|v| (v - 1, v));
        let edges: Vec<_> = g.edges().chain(extra).filter(|(a, b)| a != b).collect();
        Graph::from_edges(n, edges).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph6_round_trip(g in arb_graph(20)) {
        let text = graph6_encode(&g);
        prop_assert_eq!(graph6_decode(&text).unwrap(), g);
    }

    #[test]
    fn distances_are_a_metric(g in arb_connected(12)) {
        let d = g.distances();
        let n = g.order();
        for u in 0..n {
            prop_assert_eq!(d.get(u, u), Some(0));
            for v in 0..n {
                prop_assert_eq!(d.get(u, v), d.get(v, u));
                prop_assert_eq!(d.get(u, v) == Some(1), g.adjacent(u, v));
                for w in 0..n {
                    prop_assert!(d.get(u, v).unwrap() <= d.get(u, w).unwrap() + d.get(w, v).unwrap());
                }
            }
        }
    }

    #[test]
    fn product_distance_laws(g in arb_connected(5), h in arb_connected(5)) {
        let (dg, dh) = (g.distances(), h.distances());
        let strong = combine(Combine::Strong, &g, &h).unwrap().distances();
        let cart = combine(Combine::Cartesian, &g, &h).unwrap().distances();
        let m = h.order();
        let k = g.order();
        let quads = (0..k).flat_map(|u| (0..m).flat_map(move |v| (0..k).flat_map(move |u2| (0..m).map(move |v2| (u, v, u2, v2)))));
        for (u, v, u2, v2) in quads {
            let (a, b) = (dg.get(u, u2).unwrap(), dh.get(v, v2).unwrap());
            prop_assert_eq!(strong.get(u * m + v, u2 * m + v2), Some(a.max(b)));
            prop_assert_eq!(cart.get(u * m + v, u2 * m + v2), Some(a + b));
        }
    }

    #[test]
    fn gp_sets_are_mv_and_hereditary(g in arb_connected(10), bits in any::<u16>()) {
        let geo = Geometry::new(&g).unwrap();
        let s = VertexSet::from_bits(bits as u128).intersection(g.vertices());
        if geo.is_pi(PiKind::GP, s) {
            prop_assert!(geo.is_pi(PiKind::MV, s));
        }
        for kind in [PiKind::GP, PiKind::MV] {
            if geo.is_pi(kind, s) {
                for v in s.iter() {
                    prop_assert!(geo.is_pi(kind, s.without(v)));
                }
            }
        }
    }

    #[test]
    fn moves_are_reversible(g in arb_connected(9), bits in any::<u16>()) {
        let geo = Geometry::new(&g).unwrap();
        let s = VertexSet::from_bits(bits as u128).intersection(g.vertices());
        for kind in [PiKind::GP, PiKind::MV] {
            if !geo.is_pi(kind, s) {
                continue;
            }
            for m in legal_moves(&geo, kind, s).unwrap() {
                let next = s.without(m.from).with(m.to);
                prop_assert!(legal_moves(&geo, kind, next).unwrap().contains(&m.reversed()));
            }
        }
    }

    #[test]
    fn radius_at_least_diameter_is_mu(g in arb_connected(8)) {
        let geo = Geometry::new(&g).unwrap();
        let diam = g.distances().diameter().unwrap().max(1);
        prop_assert_eq!(geo.max_pi_set(PiKind::mv_radius(diam)).0, geo.max_pi_set(PiKind::MV).0);
        prop_assert!(geo.max_pi_set(PiKind::GP).0 <= geo.max_pi_set(PiKind::MV).0);
    }
}
