//! Every connected graph on 1 to 7 vertices, one graph6 line each, grouped
//! by order. Generated from the networkx graph atlas; see the README.

use crate::graph::{graph6_decode, Graph};

const CONNECTED_1_TO_7: &str = include_str!("../data/connected_n1_7.g6");

/// Number of connected graphs of each order 1..=7.
pub const COUNTS: [usize; 7] = [1, 1, 2, 6, 21, 112, 853];

pub fn lines() -> impl Iterator<Item = &'static str> {
    CONNECTED_1_TO_7.lines().filter(|l| !l.is_empty())
}

/// All connected graphs of the given order (1..=7), in corpus order.
pub fn connected_graphs(order: usize) -> Vec<Graph> {
    all_connected().filter(|g| g.order() == order).collect()
}

/// All connected graphs of order at most 7.
pub fn all_connected() -> impl Iterator<Item = Graph> {
    lines().map(|l| graph6_decode(l).expect("corpus lines are valid graph6"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_counts() {
        for (i, &c) in COUNTS.iter().enumerate() {
            let gs = connected_graphs(i + 1);
            assert_eq!(gs.len(), c);
            assert!(gs.iter().all(|g| g.is_connected()));
        }
    }
}
