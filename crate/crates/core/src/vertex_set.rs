use std::fmt;

/// Largest vertex count any graph in this crate may have.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices of a graph with at most [`MAX_VERTICES`] vertices,
/// stored as a fixed-width bit vector.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    #[inline]
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u128 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Vertices strictly greater than `v`.
    #[inline]
    pub fn above(self, v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & (u128::MAX << (v + 1)))
        }
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Iter(u128);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let s: VertexSet = [0, 5, 127].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(127));
        assert_eq!(s.to_vec(), vec![0, 5, 127]);
        assert_eq!(s.above(5).to_vec(), vec![127]);
        assert_eq!(s.above(127), VertexSet::EMPTY);
        assert_eq!(VertexSet::full(128).len(), 128);
        assert_eq!(VertexSet::full(3).to_vec(), vec![0, 1, 2]);
        assert_eq!(s.without(5).with(6).to_vec(), vec![0, 6, 127]);
    }
}
