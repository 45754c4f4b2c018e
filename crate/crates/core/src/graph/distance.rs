use super::Graph;
use crate::vertex_set::VertexSet;

/// Marker stored for pairs in different components.
pub const UNREACHABLE: u8 = u8::MAX;

/// All-pairs shortest-path distances, with the distance spheres
/// `{w : d(u, w) = k}` kept alongside for interval computations.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u8>,
    /// `spheres[u * n + k]`, for `k < n`.
    spheres: Vec<VertexSet>,
}

impl DistanceMatrix {
    pub fn new(g: &Graph) -> Self {
        let n = g.order();
        let mut d = vec![UNREACHABLE; n * n];
        let mut spheres = vec![VertexSet::EMPTY; n * n];
        for u in 0..n {
            let mut seen = VertexSet::singleton(u);
            let mut layer = seen;
            let mut k = 0;
            while !layer.is_empty() {
                spheres[u * n + k] = layer;
                for v in layer.iter() {
                    d[u * n + v] = k as u8;
                }
                layer = g.neighborhood(layer).difference(seen);
                seen = seen.union(layer);
                k += 1;
            }
        }
        DistanceMatrix { n, d, spheres }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// `None` when `u` and `v` lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let x = self.d[u * self.n + v];
        (x != UNREACHABLE).then_some(x as usize)
    }

    /// Raw distance; [`UNREACHABLE`] for disconnected pairs.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> u8 {
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn sphere(&self, u: usize, k: usize) -> VertexSet {
        if k < self.n {
            self.spheres[u * self.n + k]
        } else {
            VertexSet::EMPTY
        }
    }

    /// Largest finite distance, or `None` if the graph is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.d.contains(&UNREACHABLE) {
            return None;
        }
        Some(self.d.iter().copied().max().unwrap_or(0) as usize)
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }

    /// Vertices on some shortest `u,v`-path, endpoints included.
    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let Some(d) = self.get(u, v) else {
            return VertexSet::EMPTY;
        };
        (0..=d).fold(VertexSet::EMPTY, |acc, k| {
            acc.union(self.sphere(u, k).intersection(self.sphere(v, d - k)))
        })
    }

    /// A shortest `u,v`-path, lexicographically least by vertex ids.
    pub fn shortest_path(&self, g: &Graph, u: usize, v: usize) -> Option<Vec<usize>> {
        let d = self.get(u, v)?;
        let mut path = vec![u];
        let mut cur = u;
        for k in 1..=d {
            cur = g
                .neighbors(cur)
                .intersection(self.sphere(v, d - k))
                .first()
                .expect("distance layers are consistent");
            path.push(cur);
        }
        Some(path)
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{combine, cycle, path, Combine, Graph};

    #[test]
    fn small_examples() {
        let c5 = cycle(5).unwrap().distances();
        assert_eq!(c5.get(0, 2), Some(2));
        assert_eq!(c5.diameter(), Some(2));
        let p3 = path(3).unwrap();
        let s = combine(Combine::Strong, &p3, &p3).unwrap();
        assert_eq!(s.distances().diameter(), Some(2));
        let p5 = path(5).unwrap();
        let d = p5.distances();
        assert_eq!(d.interval(0, 3).to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(d.shortest_path(&p5, 4, 1), Some(vec![4, 3, 2, 1]));
    }

    #[test]
    fn disconnected_pairs() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let d = g.distances();
        assert_eq!(d.get(0, 2), None);
        assert_eq!(d.diameter(), None);
        assert!(!d.is_connected());
    }
}
