//! Digraphs over an underlying graph, and the generator-driven orientations of circulant and
//! dihedral Cayley graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::cayley::{circulant_from, BaseFamily, CayleySpec, DihedralSpec, TheoremInstance};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Arc set over the vertices of an underlying graph. Arcs only run along edges; an edge may
/// carry one arc, both arcs (bidirected), or none (uncovered).
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "DigraphJson", into = "DigraphJson")]
pub struct Digraph {
    out: Vec<u64>,
    underlying: Graph,
}

impl Digraph {
    /// No arcs yet.
    pub fn new(underlying: Graph) -> Self {
        Digraph {
            out: vec![0; underlying.n()],
            underlying,
        }
    }

    pub fn from_arcs<I: IntoIterator<Item = (usize, usize)>>(underlying: Graph, arcs: I) -> Result<Self> {
        let mut d = Digraph::new(underlying);
        for (v, u) in arcs {
            d.add_arc(v, u)?;
        }
        Ok(d)
    }

    /// Orients every edge `{u, v}` with `u < v` as `u -> v`.
    pub fn acyclic_by_label(underlying: Graph) -> Self {
        let mut d = Digraph::new(underlying);
        for (u, v) in d.underlying.edges() {
            d.out[u] |= 1u64 << v;
        }
        d
    }

    /// Orients each edge along a total order: `u -> v` iff `rank[u] < rank[v]`.
    pub fn acyclic_by_rank(underlying: Graph, rank: &[usize]) -> Self {
        let mut d = Digraph::new(underlying);
        for (u, v) in d.underlying.edges() {
            if rank[u] < rank[v] {
                d.out[u] |= 1u64 << v;
            } else {
                d.out[v] |= 1u64 << u;
            }
        }
        d
    }

    /// Both directions on every edge.
    pub fn full_bidirect(underlying: Graph) -> Self {
        let out = (0..underlying.n()).map(|v| underlying.neighbors(v).0).collect();
        Digraph { out, underlying }
    }

    pub fn add_arc(&mut self, v: usize, u: usize) -> Result<()> {
        if !self.underlying.has_edge(v, u) {
            return Err(Error::InvalidOrientation(format!("arc {v}->{u} is not along an edge")));
        }
        self.out[v] |= 1u64 << u;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.underlying.n()
    }

    pub fn underlying(&self) -> &Graph {
        &self.underlying
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.out[v])
    }

    pub fn has_arc(&self, v: usize, u: usize) -> bool {
        v < self.n() && self.out[v] >> u & 1 == 1
    }

    pub fn outdegree(&self, v: usize) -> usize {
        self.out[v].count_ones() as usize
    }

    /// Outdegree of `v` counting only arcs into `within`.
    pub fn outdegree_within(&self, v: usize, within: VertexSet) -> usize {
        (self.out[v] & within.0).count_ones() as usize
    }

    pub fn max_outdegree(&self) -> usize {
        (0..self.n()).map(|v| self.outdegree(v)).max().unwrap_or(0)
    }

    /// Outdegree value -> number of vertices with that outdegree.
    pub fn outdegree_profile(&self) -> BTreeMap<usize, usize> {
        let mut hist = BTreeMap::new();
        for v in 0..self.n() {
            *hist.entry(self.outdegree(v)).or_insert(0) += 1;
        }
        hist
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(|o| o.count_ones() as usize).sum()
    }

    /// Arcs `(v, u)` sorted lexicographically.
    pub fn arcs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|v| VertexSet(self.out[v]).iter().map(move |u| (v, u)))
            .collect()
    }

    pub fn check_invariants(&self) -> bool {
        (0..self.n()).all(|v| self.out[v] & !self.underlying.neighbors(v).0 == 0)
    }

    pub fn validate(&self) -> Coverage {
        let mut cov = Coverage::default();
        for (u, v) in self.underlying.edges() {
            match (self.has_arc(u, v), self.has_arc(v, u)) {
                (false, false) => cov.uncovered.push([u, v]),
                (true, true) => {
                    cov.covered += 1;
                    cov.bidirected += 1;
                }
                _ => cov.covered += 1,
            }
        }
        cov
    }

    /// Subdigraph induced on `s`, relabeled as in [`Graph::induced`].
    pub fn induced(&self, s: VertexSet) -> Result<(Digraph, Vec<usize>)> {
        let (g, map) = self.underlying.induced(s)?;
        let arcs: Vec<_> = map
            .iter()
            .enumerate()
            .flat_map(|(i, &v)| {
                map.iter()
                    .enumerate()
                    .filter(move |&(_, &u)| self.has_arc(v, u))
                    .map(move |(j, _)| (i, j))
            })
            .collect();
        Digraph::from_arcs(g, arcs).map(|d| (d, map))
    }
}

impl fmt::Debug for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Digraph")
            .field("n", &self.n())
            .field("arcs", &self.arcs())
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct DigraphJson {
    n: usize,
    arcs: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    underlying: Option<Graph>,
}

impl TryFrom<DigraphJson> for Digraph {
    type Error = Error;

    fn try_from(j: DigraphJson) -> Result<Digraph> {
        let underlying = match j.underlying {
            Some(g) => g,
            None => Graph::from_edges(j.n, j.arcs.iter().map(|&[v, u]| (v, u)))?,
        };
        if underlying.n() != j.n {
            return Err(Error::InvalidOrientation(format!(
                "digraph has n = {} but underlying graph has {}",
                j.n,
                underlying.n()
            )));
        }
        Digraph::from_arcs(underlying, j.arcs.into_iter().map(|[v, u]| (v, u)))
    }
}

impl From<Digraph> for DigraphJson {
    fn from(d: Digraph) -> DigraphJson {
        DigraphJson {
            n: d.n(),
            arcs: d.arcs().into_iter().map(|(v, u)| [v, u]).collect(),
            underlying: Some(d.underlying),
        }
    }
}

/// Edge accounting of a digraph against its underlying graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coverage {
    pub covered: usize,
    pub uncovered: Vec<[usize; 2]>,
    pub bidirected: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrientationStrategy {
    /// Exactly the generator lists written in the theorems.
    PaperLiteral,
    /// Paper-literal plus one canonical representative `j < n/2` per uncovered pair `{j, n-j}`.
    Completed,
    /// Both directions for every connection element.
    FullBidirect,
    /// Explicit directive set.
    Reps(Vec<usize>),
}

impl fmt::Display for OrientationStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrientationStrategy::PaperLiteral => f.write_str("paper_literal"),
            OrientationStrategy::Completed => f.write_str("completed"),
            OrientationStrategy::FullBidirect => f.write_str("full_bidirect"),
            OrientationStrategy::Reps(j) => {
                let parts: Vec<String> = j.iter().map(|x| x.to_string()).collect();
                write!(f, "reps={}", parts.join(","))
            }
        }
    }
}

impl FromStr for OrientationStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "paper_literal" => Ok(OrientationStrategy::PaperLiteral),
            "completed" => Ok(OrientationStrategy::Completed),
            "full_bidirect" => Ok(OrientationStrategy::FullBidirect),
            _ => {
                let list = s
                    .strip_prefix("reps=")
                    .ok_or_else(|| Error::InvalidOrientation(format!("unknown strategy {s:?}")))?;
                let reps = list
                    .split(',')
                    .filter(|x| !x.is_empty())
                    .map(|x| {
                        x.trim()
                            .parse::<usize>()
                            .map_err(|_| Error::InvalidOrientation(format!("bad residue {x:?} in {s:?}")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(OrientationStrategy::Reps(reps))
            }
        }
    }
}

/// Connection set of a circulant graph on `n` vertices, or an error if `target` is not one.
fn circulant_connection(n: usize, target: &Graph) -> Result<Vec<usize>> {
    if target.n() != n {
        return Err(Error::InvalidOrientation(format!(
            "target has {} vertices, expected {n}",
            target.n()
        )));
    }
    let conn = target.neighbors(0).to_vec();
    if circulant_from(n, &conn).ok().as_ref() != Some(target) {
        return Err(Error::InvalidOrientation("target is not a circulant graph".into()));
    }
    Ok(conn)
}

/// Arcs `v -> v + j (mod n)` for every directive `j` in the connection set of `target`.
///
/// Directives outside the connection set are dropped with a warning, or rejected outright
/// when `strict` is set. Returns the digraph and the dropped directives.
pub fn orient_by_generators(
    n: usize,
    directives: &[usize],
    target: &Graph,
    strict: bool,
) -> Result<(Digraph, Vec<usize>)> {
    let conn = circulant_connection(n, target)?;
    let (accepted, rejected): (Vec<usize>, Vec<usize>) = directives.iter().partition(|j| conn.contains(j));
    if !rejected.is_empty() {
        if strict {
            return Err(Error::InvalidOrientation(format!(
                "directives {rejected:?} are not in the connection set {conn:?}"
            )));
        }
        warn!("dropping directives {rejected:?}: not in the connection set of the n = {n} circulant");
    }
    let mut d = Digraph::new(target.clone());
    for v in 0..n {
        for &j in &accepted {
            d.out[v] |= 1u64 << ((v + j) % n);
        }
    }
    Ok((d, rejected))
}

/// Split of the reflection generators into those whose cross edges point rotation -> reflection
/// (`out`) and reflection -> rotation (`into`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossSplit {
    pub out: Vec<usize>,
    pub into: Vec<usize>,
}

impl CrossSplit {
    /// Alternate over the sorted reflections: first out, second in, and so on.
    pub fn alternating(reflections: &[usize]) -> Self {
        let mut sorted = reflections.to_vec();
        sorted.sort_unstable();
        let (mut out, mut into) = (Vec::new(), Vec::new());
        for (i, b) in sorted.into_iter().enumerate() {
            if i % 2 == 0 {
                out.push(b);
            } else {
                into.push(b);
            }
        }
        CrossSplit { out, into }
    }
}

/// Orient a dihedral Cayley graph: each side by the rotation `directives` (as a circulant), and
/// cross edges by the reflection generator that produces them.
pub fn orient_dihedral(spec: &DihedralSpec, directives: &[usize], split: &CrossSplit) -> Result<Digraph> {
    let g = crate::cayley::dihedral_cayley(spec)?;
    let n = spec.n;
    let mut refl: Vec<usize> = split.out.iter().chain(&split.into).copied().collect();
    refl.sort_unstable();
    if refl != spec.reflections {
        return Err(Error::InvalidOrientation(format!(
            "cross split {split:?} is not a partition of the reflections {:?}",
            spec.reflections
        )));
    }
    if let Some(j) = directives.iter().find(|j| !spec.rotations.contains(j)) {
        return Err(Error::InvalidOrientation(format!(
            "directive {j} is not a rotation generator"
        )));
    }
    let mut d = Digraph::new(g);
    for a in 0..n {
        for &j in directives {
            d.out[a] |= 1u64 << ((a + j) % n);
            d.out[n + a] |= 1u64 << (n + (a + j) % n);
        }
        for &b in &split.out {
            d.out[a] |= 1u64 << (n + (b + n - a) % n);
        }
        for &b in &split.into {
            d.out[n + (b + n - a) % n] |= 1u64 << a;
        }
    }
    debug_assert!(d.check_invariants());
    Ok(d)
}

/// Result of applying a strategy to a theorem instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverageReport {
    pub strategy: String,
    pub directives: Vec<usize>,
    pub rejected: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cross_split: Option<CrossSplit>,
    pub covered_edges: usize,
    pub uncovered: Vec<[usize; 2]>,
    pub bidirected: usize,
    pub outdegree_profile: BTreeMap<usize, usize>,
    pub max_outdegree: usize,
}

impl CoverageReport {
    fn new(
        strategy: &OrientationStrategy,
        d: &Digraph,
        directives: Vec<usize>,
        rejected: Vec<usize>,
        cross_split: Option<CrossSplit>,
    ) -> Self {
        let cov = d.validate();
        CoverageReport {
            strategy: strategy.to_string(),
            directives,
            rejected,
            cross_split,
            covered_edges: cov.covered,
            uncovered: cov.uncovered,
            bidirected: cov.bidirected,
            outdegree_profile: d.outdegree_profile(),
            max_outdegree: d.max_outdegree(),
        }
    }
}

/// The generator list a theorem writes down for its base circulant: `1, ..., p` for the unitary
/// family, `p, 2p, ..., n - p` for its complement.
pub fn literal_generators(base: BaseFamily, n: usize, p: usize) -> Vec<usize> {
    match base {
        BaseFamily::Units => (1..=p).collect(),
        BaseFamily::Nonunits => (1..n / p).map(|i| i * p).collect(),
    }
}

/// Directive set for a circulant side with connection `base ∪ s2`, plus the directives dropped
/// because they are not connection elements.
pub fn strategy_directives(
    strategy: &OrientationStrategy,
    n: usize,
    p: usize,
    base: BaseFamily,
    connection: &[usize],
    s2: &[usize],
) -> Result<(Vec<usize>, Vec<usize>)> {
    let canonical = |j: usize| j.min(n - j);
    let literal = || {
        let mut want = literal_generators(base, n, p);
        // the extra generators are oriented one way per inverse pair
        want.extend(s2.iter().copied().filter(|&j| 2 * j < n));
        let (mut acc, rej): (Vec<usize>, Vec<usize>) = want.into_iter().partition(|j| connection.contains(j));
        acc.sort_unstable();
        acc.dedup();
        (acc, rej)
    };
    let (mut acc, rej) = match strategy {
        OrientationStrategy::PaperLiteral => literal(),
        OrientationStrategy::Completed => {
            let (mut acc, rej) = literal();
            for &j in connection {
                if !acc.contains(&j) && !acc.contains(&(n - j)) {
                    acc.push(canonical(j));
                }
            }
            (acc, rej)
        }
        OrientationStrategy::FullBidirect => (connection.to_vec(), Vec::new()),
        OrientationStrategy::Reps(reps) => {
            if let Some(j) = reps.iter().find(|j| !connection.contains(j)) {
                return Err(Error::InvalidOrientation(format!(
                    "reps element {j} is not in the connection set"
                )));
            }
            if let Some(j) = reps.iter().find(|&&j| reps.contains(&(n - j))) {
                return Err(Error::InvalidOrientation(format!(
                    "reps contains both {j} and its inverse {}",
                    n - j
                )));
            }
            (reps.clone(), Vec::new())
        }
    };
    acc.sort_unstable();
    acc.dedup();
    if !rej.is_empty() {
        warn!("{strategy}: generators {rej:?} are not edge differences for n = {n}; dropped");
    }
    Ok((acc, rej))
}

/// Apply `strategy` to the instance's graph: circulant theorems orient directly; dihedral ones
/// orient both sides with the side directives and split the reflections alternately.
pub fn build_strategy_orientation(
    inst: &TheoremInstance,
    strategy: &OrientationStrategy,
) -> Result<(Digraph, CoverageReport)> {
    match &inst.spec {
        CayleySpec::Circulant(c) => {
            let (dirs, rej) = strategy_directives(strategy, inst.n, inst.p, inst.base, &c.connection, &inst.s2)?;
            let (d, _) = orient_by_generators(inst.n, &dirs, &inst.graph, false)?;
            let report = CoverageReport::new(strategy, &d, dirs, rej, None);
            Ok((d, report))
        }
        CayleySpec::Dihedral(spec) => {
            let (dirs, rej) = strategy_directives(strategy, inst.n, inst.p, inst.base, &spec.rotations, &inst.s2)?;
            let split = CrossSplit::alternating(&spec.reflections);
            let d = orient_dihedral(spec, &dirs, &split)?;
            let report = CoverageReport::new(strategy, &d, dirs, rej, Some(split));
            Ok((d, report))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::{theorem_graph, unitary, unitary_complement, units, TheoremId, TheoremOptions};

    fn inst(id: TheoremId, n: usize) -> TheoremInstance {
        theorem_graph(id, n, &TheoremOptions::default()).unwrap()
    }

    #[test]
    fn directed_five_cycle() {
        let (d, rej) = orient_by_generators(5, &[1], &Graph::cycle(5).unwrap(), true).unwrap();
        assert!(rej.is_empty());
        assert_eq!(d.arcs(), vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(d.max_outdegree(), 1);
    }

    #[test]
    fn unitary_nine_with_one_two() {
        let g = unitary(9).unwrap();
        let (d, _) = orient_by_generators(9, &[1, 2], &g, true).unwrap();
        assert_eq!(d.outdegree_profile(), BTreeMap::from([(2, 9)]));
        let cov = d.validate();
        assert_eq!(cov.covered, 18);
        assert_eq!(cov.uncovered.len(), 9);
        assert!(cov.uncovered.iter().all(|&[u, v]| (v - u) % 9 == 4 || (v - u) % 9 == 5));
    }

    #[test]
    fn strict_mode_rejects_non_generators() {
        let g = unitary(9).unwrap();
        assert!(orient_by_generators(9, &[1, 2, 3], &g, true).is_err());
        let (d, rej) = orient_by_generators(9, &[1, 2, 3], &g, false).unwrap();
        assert_eq!(rej, vec![3]);
        assert_eq!(d.max_outdegree(), 2);
        let path = Graph::from_edges(9, (0..8).map(|v| (v, v + 1))).unwrap();
        assert!(orient_by_generators(9, &[1], &path, false).is_err());
    }

    #[test]
    fn complement_nine_bidirected() {
        let g = unitary_complement(9).unwrap();
        let (d, _) = orient_by_generators(9, &[3, 6], &g, true).unwrap();
        let cov = d.validate();
        assert!(cov.uncovered.is_empty());
        assert_eq!(cov.bidirected, g.edge_count());
        assert_eq!(d.max_outdegree(), 2);
    }

    #[test]
    fn strategies_on_t2_t3() {
        let t3 = inst(TheoremId::T3, 9);
        let (d, r) = build_strategy_orientation(&t3, &OrientationStrategy::PaperLiteral).unwrap();
        assert_eq!(r.directives, vec![3, 6]);
        assert!(r.uncovered.is_empty());
        assert_eq!(d.max_outdegree(), 2);

        let t2 = inst(TheoremId::T2, 9);
        let (_, r) = build_strategy_orientation(&t2, &OrientationStrategy::PaperLiteral).unwrap();
        assert_eq!(r.directives, vec![1, 2]);
        assert_eq!(r.rejected, vec![3]);
        assert_eq!(r.covered_edges, 18);
        assert_eq!(r.uncovered.len(), 9);

        let (d, r) = build_strategy_orientation(&t2, &OrientationStrategy::Completed).unwrap();
        assert_eq!(r.directives, vec![1, 2, 4]);
        assert!(r.uncovered.is_empty());
        assert_eq!(d.max_outdegree(), 3);

        let (d, r) = build_strategy_orientation(&t2, &OrientationStrategy::FullBidirect).unwrap();
        assert_eq!(r.bidirected, 27);
        assert_eq!(d.max_outdegree(), 6);
    }

    #[test]
    fn t3_fifteen_leaves_gap() {
        let t3 = inst(TheoremId::T3, 15);
        let (d, r) = build_strategy_orientation(&t3, &OrientationStrategy::PaperLiteral).unwrap();
        assert_eq!(r.directives, vec![3, 6, 9, 12]);
        assert_eq!(d.max_outdegree(), 4);
        // differences 5 and 10 stay unoriented
        assert_eq!(r.uncovered.len(), 15);
        let (_, r) = build_strategy_orientation(&t3, &OrientationStrategy::Completed).unwrap();
        assert_eq!(r.directives, vec![3, 5, 6, 9, 12]);
        assert!(r.uncovered.is_empty());
    }

    #[test]
    fn reps_validation() {
        let t2 = inst(TheoremId::T2, 9);
        let s: OrientationStrategy = "reps=1,2,4".parse().unwrap();
        let (d, r) = build_strategy_orientation(&t2, &s).unwrap();
        assert!(r.uncovered.is_empty());
        assert_eq!(d.max_outdegree(), 3);
        assert!(build_strategy_orientation(&t2, &"reps=1,8".parse().unwrap()).is_err());
        assert!(build_strategy_orientation(&t2, &"reps=3".parse().unwrap()).is_err());
        assert!("sideways".parse::<OrientationStrategy>().is_err());
    }

    #[test]
    fn dihedral_default_split() {
        let spec = DihedralSpec::new(9, units(9).unwrap(), [0, 1]).unwrap();
        let split = CrossSplit::alternating(&spec.reflections);
        assert_eq!(
            split,
            CrossSplit {
                out: vec![0],
                into: vec![1]
            }
        );
        let d = orient_dihedral(&spec, &[], &split).unwrap();
        assert!((0..18).all(|v| d.outdegree(v) == 1));
        assert_eq!(d.arc_count(), 18);

        let d = orient_dihedral(&spec, &[1, 2, 4], &split).unwrap();
        assert!(d.validate().uncovered.is_empty());
        assert_eq!(d.max_outdegree(), 4);
        assert_eq!(d.arc_count(), 2 * 27 + 9 * 2);
    }

    #[test]
    fn dihedral_all_out() {
        let spec = DihedralSpec::new(7, [], [0]).unwrap();
        let d = orient_dihedral(
            &spec,
            &[],
            &CrossSplit {
                out: vec![0],
                into: vec![],
            },
        )
        .unwrap();
        assert!((0..7).all(|a| d.outdegree(a) == 1));
        assert!((7..14).all(|x| d.outdegree(x) == 0));
        let bad = CrossSplit {
            out: vec![0],
            into: vec![0],
        };
        assert!(orient_dihedral(&spec, &[], &bad).is_err());
        let spec2 = DihedralSpec::new(9, units(9).unwrap(), [0, 1]).unwrap();
        assert!(orient_dihedral(&spec2, &[3], &CrossSplit::alternating(&[0, 1])).is_err());
    }

    #[test]
    fn t4_completed_profile() {
        let t4 = inst(TheoremId::T4, 9);
        let (d, r) = build_strategy_orientation(&t4, &OrientationStrategy::Completed).unwrap();
        assert!(r.uncovered.is_empty());
        assert_eq!(r.outdegree_profile, BTreeMap::from([(4, 18)]));
        assert_eq!(d.max_outdegree(), 4);
    }

    #[test]
    fn corollary_literal_uses_half_of_s2() {
        let c5 = theorem_graph(
            TheoremId::C5,
            9,
            &TheoremOptions {
                s2: vec![3, 6],
                ..Default::default()
            },
        )
        .unwrap();
        let (d, r) = build_strategy_orientation(&c5, &OrientationStrategy::PaperLiteral).unwrap();
        assert_eq!(r.directives, vec![1, 2, 3]);
        assert_eq!(d.max_outdegree(), 3);
        assert_eq!(r.uncovered.len(), 18);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let d = Digraph::from_arcs(Graph::cycle(3).unwrap(), [(0, 1), (1, 2), (2, 0)]).unwrap();
        let s = serde_json::to_string(&d).unwrap();
        assert!(
            s.starts_with(r#"{"n":3,"arcs":[[0,1],[1,2],[2,0]],"underlying":"#),
            "{s}"
        );
        assert_eq!(serde_json::from_str::<Digraph>(&s).unwrap(), d);
        let bare: Digraph = serde_json::from_str(r#"{"n":3,"arcs":[[0,1],[1,2]]}"#).unwrap();
        assert_eq!(bare.underlying().edge_count(), 2);
        assert!(
            serde_json::from_str::<Digraph>(r#"{"n":3,"arcs":[[0,2]],"underlying":{"n":3,"edges":[[0,1]]}}"#).is_err()
        );
    }

    #[test]
    fn generator_orientations_are_regular() {
        for n in [9usize, 15, 21, 25] {
            for strategy in [OrientationStrategy::PaperLiteral, OrientationStrategy::Completed] {
                for id in [TheoremId::T2, TheoremId::T3] {
                    let (d, r) = build_strategy_orientation(&inst(id, n), &strategy).unwrap();
                    assert_eq!(r.outdegree_profile.len(), 1, "{id} {n} {strategy}");
                    assert_eq!(d.max_outdegree(), r.directives.len());
                    if strategy == OrientationStrategy::Completed {
                        assert!(r.uncovered.is_empty());
                    }
                }
            }
        }
    }
}
