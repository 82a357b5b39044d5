//! Undirected simple graphs on at most 64 vertices, stored as adjacency bit vectors.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest vertex count supported by the bit-vector representation.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, bit `v` set iff vertex `v` is a member.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
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

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Undirected simple graph over vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1u64 << v);
        }
        Ok(g)
    }

    /// Cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSpec(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n)))
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidSpec(format!("self-loop at vertex {u}")));
        }
        self.adj[u] |= 1u64 << v;
        self.adj[v] |= 1u64 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| {
                let higher = self.adj[u] & !((2u64 << u).wrapping_sub(1));
                VertexSet(higher).iter().map(move |v| (u, v))
            })
            .collect()
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| (self.adj[v] & s.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    pub fn check_invariants(&self) -> bool {
        let all = VertexSet::full(self.n).0;
        (0..self.n).all(|v| {
            self.adj[v] & !all == 0
                && self.adj[v] >> v & 1 == 0
                && VertexSet(self.adj[v]).iter().all(|u| self.adj[u] >> v & 1 == 1)
        })
    }

    pub fn complement(&self) -> Graph {
        let all = VertexSet::full(self.n).0;
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1u64 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// Subgraph induced on `s`, relabeled `0..|s|` in increasing order of original label.
    /// The returned map sends each new label to its original vertex.
    pub fn induced(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::EmptyInducedSubgraph);
        }
        if let Some(v) = s.max().filter(|&v| v >= self.n) {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        let map = s.to_vec();
        let mut g = Graph::empty(map.len())?;
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1u64 << j;
                    g.adj[j] |= 1u64 << i;
                }
            }
        }
        Ok((g, map))
    }

    /// `other` is shifted by `self.n()`; no edges between the two parts.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::TooLarge(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|a| a << self.n));
        Ok(Graph { n, adj })
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.0 & !self.adj[v] & !(1u64 << v) == 0)
    }

    /// Connected components ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut unseen = self.vertices();
        let mut out = Vec::new();
        while let Some(start) = unseen.min() {
            let mut comp = VertexSet::singleton(start);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = 0u64;
                for v in frontier.iter() {
                    next |= self.adj[v];
                }
                frontier = VertexSet(next & !comp.0);
                comp = comp.union(frontier);
            }
            unseen = unseen.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Smallest `d` such that every subgraph has a vertex of degree at most `d`.
    pub fn degeneracy(&self) -> usize {
        let mut left = self.vertices();
        let mut best = 0;
        while !left.is_empty() {
            let (v, d) = left
                .iter()
                .map(|v| (v, (self.adj[v] & left.0).count_ones() as usize))
                .min_by_key(|&(_, d)| d)
                .expect("nonempty");
            best = best.max(d);
            left.remove(v);
        }
        best
    }

    /// Image of the graph under the vertex relabeling `v -> perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        Graph::from_edges(self.n, self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;

    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::from_edges(j.n, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        GraphJson {
            n: g.n,
            edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{circulant_from, unitary, unitary_complement};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn complement_is_involution_and_fills_triangle() {
        let e3 = Graph::empty(3).unwrap();
        assert_eq!(e3.complement(), Graph::complete(3).unwrap());
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(c7.complement().complement(), c7);
    }

    #[test]
    fn complement_of_unitary_nine() {
        let expected = circulant_from(9, &[3, 6]).unwrap();
        assert_eq!(unitary(9).unwrap().complement().edges(), expected.edges());
        assert_eq!(unitary_complement(9).unwrap(), expected);
    }

    #[test]
    fn induced_subgraphs() {
        let k3 = Graph::complete(3).unwrap();
        let (g, map) = k3.induced(set(&[0, 2])).unwrap();
        assert_eq!(map, vec![0, 2]);
        assert_eq!(g, Graph::complete(2).unwrap());

        let c = circulant_from(9, &[3, 6]).unwrap();
        let (g, map) = c.induced(c.vertices()).unwrap();
        assert_eq!(g, c);
        assert_eq!(map, (0..9).collect::<Vec<_>>());
        let (tri, _) = c.induced(set(&[0, 3, 6])).unwrap();
        assert_eq!(tri, k3);

        assert!(matches!(k3.induced(VertexSet::EMPTY), Err(Error::EmptyInducedSubgraph)));
        assert!(k3.induced(set(&[5])).is_err());
    }

    #[test]
    fn disjoint_unions() {
        let k3 = Graph::complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!(two.n(), 6);
        assert_eq!(two.components(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);

        let u9 = unitary(9).unwrap();
        let uu = u9.disjoint_union(&u9).unwrap();
        assert_eq!(uu.n(), 18);
        assert!((0..18).all(|v| uu.degree(v) == 6));

        let big = Graph::empty(40).unwrap();
        assert!(matches!(big.disjoint_union(&big), Err(Error::TooLarge(80))));
    }

    #[test]
    fn independence() {
        let k3 = Graph::complete(3).unwrap();
        assert!(!k3.is_independent(set(&[0, 1])));
        assert!(k3.is_independent(set(&[1])));
        let c = circulant_from(9, &[3, 6]).unwrap();
        assert!(c.is_independent(set(&[0, 1, 2])));
        assert!(!c.is_independent(set(&[0, 3])));
    }

    #[test]
    fn component_lists() {
        assert_eq!(Graph::complete(3).unwrap().components(), vec![set(&[0, 1, 2])]);
        assert_eq!(Graph::empty(2).unwrap().components(), vec![set(&[0]), set(&[1])]);
        let c = circulant_from(9, &[3, 6]).unwrap();
        assert_eq!(c.components(), vec![set(&[0, 3, 6]), set(&[1, 4, 7]), set(&[2, 5, 8])]);
    }

    #[test]
    fn constructor_limits() {
        assert!(matches!(Graph::empty(65), Err(Error::TooLarge(65))));
        assert!(matches!(Graph::empty(0), Err(Error::EmptyGraph)));
        assert!(Graph::from_edges(3, [(1, 1)]).is_err());
        let g = Graph::complete(64).unwrap();
        assert!(g.check_invariants());
        assert_eq!(g.edge_count(), 64 * 63 / 2);
    }

    #[test]
    fn json_shape() {
        let g = Graph::cycle(4).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":4,"edges":[[0,1],[0,3],[1,2],[2,3]]}"#);
        let back: Graph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<Graph>(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_graph() -> impl Strategy<Value = Graph> {
            (1usize..=12).prop_flat_map(|n| {
                proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                    let mut g = Graph::empty(n).unwrap();
                    let mut k = 0;
                    for u in 0..n {
                        for v in u + 1..n {
                            if bits[k] {
                                g.add_edge(u, v).unwrap();
                            }
                            k += 1;
                        }
                    }
                    g
                })
            })
        }

        proptest! {
            #[test]
            fn invariants_hold(g in arb_graph(), mask in any::<u64>()) {
                prop_assert!(g.check_invariants());
                prop_assert!(g.complement().check_invariants());
                prop_assert_eq!(g.complement().complement(), g.clone());
                let s = VertexSet(mask & g.vertices().0);
                if !s.is_empty() {
                    let (h, map) = g.induced(s).unwrap();
                    prop_assert!(h.check_invariants());
                    prop_assert_eq!(h.edge_count(), g.edges_within(s));
                    prop_assert_eq!(map.len(), s.len());
                }
                let comps = g.components();
                let mut seen = VertexSet::EMPTY;
                for c in &comps {
                    prop_assert!(c.intersection(seen).is_empty());
                    seen = seen.union(*c);
                }
                prop_assert_eq!(seen, g.vertices());
            }

            #[test]
            fn union_component_count(a in arb_graph(), b in arb_graph()) {
                let u = a.disjoint_union(&b).unwrap();
                prop_assert!(u.check_invariants());
                prop_assert_eq!(u.components().len(), a.components().len() + b.components().len());
            }
        }
    }
}
