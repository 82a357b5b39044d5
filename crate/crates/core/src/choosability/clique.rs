use crate::graph::{Graph, VertexSet};

/// Maximum clique by branch and bound. Among maximum cliques the witness is the first in
/// lexicographic order of sorted member lists.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    (best.len(), best)
}

fn expand(g: &Graph, current: VertexSet, mut candidates: VertexSet, best: &mut VertexSet) {
    if current.len() > best.len() {
        *best = current;
    }
    while let Some(v) = candidates.min() {
        if current.len() + color_bound(g, candidates) <= best.len() {
            return;
        }
        candidates.remove(v);
        let mut next = current;
        next.insert(v);
        expand(g, next, candidates.intersection(g.neighbors(v)), best);
    }
}

/// Greedy coloring of `candidates`; no clique inside uses more vertices than colors.
fn color_bound(g: &Graph, candidates: VertexSet) -> usize {
    let mut left = candidates;
    let mut colors = 0;
    while !left.is_empty() {
        let mut class = left;
        let mut picked = VertexSet::EMPTY;
        while let Some(v) = class.min() {
            picked.insert(v);
            class = class.difference(g.neighbors(v));
            class.remove(v);
        }
        left = left.difference(picked);
        colors += 1;
    }
    colors
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{unitary, unitary_complement};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().copied().collect()
    }

    #[test]
    fn examples() {
        for p in [2, 3, 5, 7] {
            assert_eq!(clique_number(&Graph::complete(p).unwrap()).0, p);
        }
        assert_eq!(clique_number(&unitary(9).unwrap()), (3, set(&[0, 1, 2])));
        assert_eq!(clique_number(&unitary_complement(9).unwrap()), (3, set(&[0, 3, 6])));
        assert_eq!(clique_number(&unitary_complement(15).unwrap()).0, 5);
        assert_eq!(clique_number(&Graph::cycle(5).unwrap()).0, 2);
        assert_eq!(clique_number(&Graph::empty(4).unwrap()), (1, set(&[0])));
    }

    #[test]
    fn matches_brute_force() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let n = rng.random_range(1..=11);
            let mut g = Graph::empty(n).unwrap();
            for u in 0..n {
                for v in u + 1..n {
                    if rng.random_bool(0.5) {
                        g.add_edge(u, v).unwrap();
                    }
                }
            }
            let brute = (1u64..1 << n)
                .filter(|&s| g.is_clique(VertexSet(s)))
                .map(|s| s.count_ones())
                .max();
            let (w, wit) = clique_number(&g);
            assert_eq!(Some(w as u32), brute);
            assert!(g.is_clique(wit));
        }
    }
}
