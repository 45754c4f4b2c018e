use super::Graph;
use crate::vertex_set::VertexSet;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Analysis {
    pub order: usize,
    pub size: usize,
    pub clique_number: usize,
    /// `None` for disconnected graphs.
    pub diameter: Option<usize>,
    pub is_connected: bool,
    pub blocks: Vec<Vec<usize>>,
    pub is_block_graph: bool,
    pub is_path: bool,
    /// Circumference at most three, i.e. a block graph with clique number at most three.
    pub circumference_le_3: bool,
}

pub fn analyze(g: &Graph) -> Analysis {
    let clique_number = clique_number(g);
    let is_connected = g.is_connected();
    let blocks = block_decomposition(g);
    let is_block_graph = is_connected
        && blocks
            .iter()
            .all(|&b| b.iter().all(|v| g.neighbors(v).intersection(b).len() == b.len() - 1));
    Analysis {
        order: g.order(),
        size: g.edge_count(),
        clique_number,
        diameter: g.distances().diameter(),
        is_connected,
        blocks: blocks.into_iter().map(|b| b.to_vec()).collect(),
        is_block_graph,
        is_path: g.is_path(),
        circumference_le_3: is_block_graph && clique_number <= 3,
    }
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

/// A maximum clique, found by branch and bound with a greedy colouring bound.
/// Among maximum cliques the first one found in a fixed vertex order is returned.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    if g.order() == 0 {
        return best;
    }
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

fn expand(g: &Graph, current: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    let (order, colours) = colour_sort(g, cand);
    for i in (0..order.len()).rev() {
        if current.len() + colours[i] <= best.len() {
            return;
        }
        let v = order[i];
        let next = current.with(v);
        let sub = cand.intersection(g.neighbors(v));
        if sub.is_empty() {
            if next.len() > best.len() {
                *best = next;
            }
        } else {
            expand(g, next, sub, best);
        }
        cand.remove(v);
    }
}

/// Greedy sequential colouring; returns vertices ordered by colour with the
/// running colour count, so `colours[i]` bounds the clique within `order[..=i]`.
fn colour_sort(g: &Graph, cand: VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut colours = Vec::with_capacity(cand.len());
    let mut uncoloured = cand;
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut avail = uncoloured;
        while let Some(v) = avail.first() {
            avail = avail.difference(g.neighbors(v)).without(v);
            uncoloured.remove(v);
            order.push(v);
            colours.push(colour);
        }
    }
    (order, colours)
}

/// Biconnected components (blocks), each as a vertex set, ordered by their
/// least vertex. Isolated vertices form singleton blocks.
pub fn block_decomposition(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        if g.degree(root) == 0 {
            disc[root] = time;
            time += 1;
            blocks.push(VertexSet::singleton(root));
            continue;
        }
        // Iterative DFS: frames of (vertex, parent, remaining neighbours).
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut stack = vec![(root, usize::MAX, g.neighbors(root))];
        while let Some(frame) = stack.last_mut() {
            let (u, parent) = (frame.0, frame.1);
            if let Some(v) = frame.2.first() {
                frame.2.remove(v);
                if disc[v] == usize::MAX {
                    edge_stack.push((u, v));
                    disc[v] = time;
                    low[v] = time;
                    time += 1;
                    stack.push((v, u, g.neighbors(v)));
                } else if v != parent && disc[v] < disc[u] {
                    edge_stack.push((u, v));
                    low[u] = low[u].min(disc[v]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[u]);
                    if low[u] >= disc[p] {
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = edge_stack.pop() {
                            block.insert(a);
                            block.insert(b);
                            if (a, b) == (p, u) {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
    }
    blocks.sort_by_key(|b| (b.first(), b.bits()));
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn clique_examples() {
        let k5 = complete(5).unwrap();
        let k5_minus = Graph::from_edges(5, k5.edges().filter(|&e| e != (0, 1))).unwrap();
        assert_eq!(clique_number(&k5_minus), 4);
        assert_eq!(clique_number(&cycle(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::empty(3).unwrap()), 1);
    }

    #[test]
    fn bowtie_is_block_graph() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let a = analyze(&g);
        assert!(a.is_block_graph);
        assert_eq!(a.blocks, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(a.circumference_le_3);
        assert!(!analyze(&cycle(4).unwrap()).is_block_graph);
    }

    #[test]
    fn path_blocks() {
        let a = analyze(&path(4).unwrap());
        assert_eq!(a.blocks.len(), 3);
        assert!(a.is_block_graph && a.is_path);
    }
}
