//! Kernel-driven list coloring: with a kernel-perfect orientation and lists longer than the
//! outdegrees, color classes are peeled off one kernel at a time.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::kernels::{find_kernel, kernel_perfect, KernelCheckOptions, KernelStatus, KernelVerdict};
use crate::orientation::Digraph;

pub type Color = u32;

/// Per-vertex color lists, each sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ListsJson")]
pub struct ListAssignment {
    lists: Vec<Vec<Color>>,
}

#[derive(Deserialize)]
struct ListsJson {
    lists: Vec<Vec<Color>>,
}

impl TryFrom<ListsJson> for ListAssignment {
    type Error = Error;

    fn try_from(j: ListsJson) -> Result<Self> {
        ListAssignment::new(j.lists)
    }
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<Color>>) -> Result<Self> {
        let mut lists = lists;
        for (v, l) in lists.iter_mut().enumerate() {
            l.sort_unstable();
            l.dedup();
            if l.is_empty() {
                return Err(Error::InvalidLists(format!("list of vertex {v} is empty")));
            }
        }
        Ok(ListAssignment { lists })
    }

    /// The same list at every vertex.
    pub fn uniform(n: usize, list: &[Color]) -> Result<Self> {
        ListAssignment::new(vec![list.to_vec(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.lists.iter().map(Vec::len).collect()
    }

    fn check_order(&self, n: usize) -> Result<()> {
        if self.lists.len() != n {
            return Err(Error::InvalidLists(format!(
                "{} lists for a graph on {n} vertices",
                self.lists.len()
            )));
        }
        Ok(())
    }
}

/// Vertex colors; `None` marks an uncolored vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<Option<Color>>,
}

impl Coloring {
    pub fn uncolored(n: usize) -> Self {
        Coloring { colors: vec![None; n] }
    }

    pub fn from_complete(colors: Vec<Color>) -> Self {
        Coloring {
            colors: colors.into_iter().map(Some).collect(),
        }
    }

    pub fn is_complete(&self) -> bool {
        self.colors.iter().all(Option::is_some)
    }

    pub fn color(&self, v: usize) -> Option<Color> {
        self.colors[v]
    }
}

/// `true` iff every vertex is colored from its own list and no edge is monochromatic.
pub fn verify_list_coloring(g: &Graph, lists: &ListAssignment, col: &Coloring) -> Result<bool> {
    lists.check_order(g.n())?;
    if col.colors.len() != g.n() {
        return Err(Error::InvalidLists(format!(
            "coloring has {} entries for {} vertices",
            col.colors.len(),
            g.n()
        )));
    }
    if let Some(v) = col.colors.iter().position(Option::is_none) {
        return Err(Error::IncompleteColoring(v));
    }
    let c = |v: usize| col.colors[v].expect("complete");
    let from_lists = (0..g.n()).all(|v| lists.list(v).binary_search(&c(v)).is_ok());
    let proper = g.edges().into_iter().all(|(u, v)| c(u) != c(v));
    Ok(from_lists && proper)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum GalvinOutcome {
    Colored {
        coloring: Coloring,
        rounds: usize,
    },
    /// The vertices still holding `color` induce a subdigraph with no kernel.
    NoKernel {
        color: Color,
        support: VertexSet,
        partial: Coloring,
    },
}

/// Color `d.underlying()` from `lists`, one color class per round: take the smallest color `c`
/// left in any uncolored list, let `U` be the uncolored vertices listing `c`, color the least
/// kernel of `U` with `c` and drop `c` from the rest of `U`.
///
/// Requires `|L(v)| >= outdeg(v) + 1` everywhere.
pub fn galvin_color(d: &Digraph, lists: &ListAssignment) -> Result<GalvinOutcome> {
    let n = d.n();
    lists.check_order(n)?;
    let short: Vec<usize> = (0..n).filter(|&v| lists.list(v).len() < d.outdegree(v) + 1).collect();
    if !short.is_empty() {
        return Err(Error::ListTooShort(short));
    }

    let mut remaining: Vec<Vec<Color>> = lists.lists().to_vec();
    let mut coloring = Coloring::uncolored(n);
    let mut uncolored = d.underlying().vertices();
    let mut rounds = 0;
    while !uncolored.is_empty() {
        for v in uncolored.iter() {
            if remaining[v].len() < d.outdegree_within(v, uncolored) + 1 {
                return Err(Error::RoundInvariant {
                    vertex: v,
                    color: remaining[v].first().copied().unwrap_or(0),
                });
            }
        }
        let color = uncolored
            .iter()
            .filter_map(|v| remaining[v].first().copied())
            .min()
            .expect("lists nonempty");
        let holders: VertexSet = uncolored
            .iter()
            .filter(|&v| remaining[v].binary_search(&color).is_ok())
            .collect();
        let Some(kernel) = find_kernel(d, holders) else {
            return Ok(GalvinOutcome::NoKernel {
                color,
                support: holders,
                partial: coloring,
            });
        };
        for v in kernel.iter() {
            coloring.colors[v] = Some(color);
        }
        for v in holders.difference(kernel).iter() {
            remaining[v].retain(|&c| c != color);
        }
        uncolored = uncolored.difference(kernel);
        rounds += 1;
    }
    Ok(GalvinOutcome::Colored { coloring, rounds })
}

/// Choosability bound `max outdegree + 1`, valid only when the orientation is kernel-perfect.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lemma1Bound {
    pub bound: usize,
    pub valid: bool,
}

pub fn lemma1_bound_from(d: &Digraph, verdict: &KernelVerdict) -> Lemma1Bound {
    Lemma1Bound {
        bound: d.max_outdegree() + 1,
        valid: verdict.status == KernelStatus::KernelPerfect,
    }
}

pub fn lemma1_bound(d: &Digraph) -> Result<Lemma1Bound> {
    let verdict = kernel_perfect(d, &KernelCheckOptions::default())?;
    Ok(lemma1_bound_from(d, &verdict))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cayley::unitary;

    fn arc() -> Digraph {
        Digraph::from_arcs(Graph::complete(2).unwrap(), [(0, 1)]).unwrap()
    }

    #[test]
    fn single_arc() {
        let lists = ListAssignment::new(vec![vec![1, 2], vec![1]]).unwrap();
        let GalvinOutcome::Colored { coloring, .. } = galvin_color(&arc(), &lists).unwrap() else {
            panic!("expected a coloring");
        };
        assert_eq!(coloring, Coloring::from_complete(vec![2, 1]));
    }

    #[test]
    fn transitive_tournament() {
        let d = Digraph::from_arcs(Graph::complete(3).unwrap(), [(0, 1), (0, 2), (1, 2)]).unwrap();
        let lists = ListAssignment::uniform(3, &[1, 2, 3]).unwrap();
        let GalvinOutcome::Colored { coloring, rounds } = galvin_color(&d, &lists).unwrap() else {
            panic!("expected a coloring");
        };
        assert_eq!(coloring, Coloring::from_complete(vec![3, 2, 1]));
        assert_eq!(rounds, 3);
        assert!(verify_list_coloring(d.underlying(), &lists, &coloring).unwrap());
    }

    #[test]
    fn cyclic_five_cycle_fails_with_certificate() {
        let d = Digraph::from_arcs(Graph::cycle(5).unwrap(), (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        let lists = ListAssignment::uniform(5, &[1, 2]).unwrap();
        match galvin_color(&d, &lists).unwrap() {
            GalvinOutcome::NoKernel { color, support, .. } => {
                assert_eq!(color, 1);
                assert_eq!(support, d.underlying().vertices());
                assert_eq!(find_kernel(&d, support), None);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn short_lists_are_an_error() {
        let lists = ListAssignment::new(vec![vec![1], vec![1]]).unwrap();
        assert!(matches!(galvin_color(&arc(), &lists), Err(Error::ListTooShort(v)) if v == vec![0]));
        let wrong_len = ListAssignment::new(vec![vec![1]]).unwrap();
        assert!(galvin_color(&arc(), &wrong_len).is_err());
        assert!(ListAssignment::new(vec![vec![]]).is_err());
    }

    #[test]
    fn verification() {
        let k2 = Graph::complete(2).unwrap();
        let lists = ListAssignment::uniform(2, &[1]).unwrap();
        assert!(!verify_list_coloring(&k2, &lists, &Coloring::from_complete(vec![1, 1])).unwrap());
        let partial = Coloring {
            colors: vec![Some(1), None],
        };
        assert!(matches!(
            verify_list_coloring(&k2, &lists, &partial),
            Err(Error::IncompleteColoring(1))
        ));

        let g = unitary(9).unwrap();
        let lists = ListAssignment::uniform(9, &[0, 1, 2]).unwrap();
        let by_residue = Coloring::from_complete((0..9).map(|v| (v % 3) as Color).collect());
        assert!(verify_list_coloring(&g, &lists, &by_residue).unwrap());
        let off_list = Coloring::from_complete((0..9).map(|v| (v % 3) as Color + 1).collect());
        assert!(!verify_list_coloring(&g, &lists, &off_list).unwrap());
    }

    #[test]
    fn lemma1_examples() {
        let c4 = Digraph::from_arcs(Graph::cycle(4).unwrap(), (0..4).map(|v| (v, (v + 1) % 4))).unwrap();
        assert_eq!(lemma1_bound(&c4).unwrap(), Lemma1Bound { bound: 2, valid: true });
        let k5 = Digraph::full_bidirect(Graph::complete(5).unwrap());
        assert_eq!(lemma1_bound(&k5).unwrap(), Lemma1Bound { bound: 5, valid: true });
        let c5 = Digraph::from_arcs(Graph::cycle(5).unwrap(), (0..5).map(|v| (v, (v + 1) % 5))).unwrap();
        assert_eq!(lemma1_bound(&c5).unwrap(), Lemma1Bound { bound: 2, valid: false });
    }

    #[test]
    fn json_formats() {
        let lists: ListAssignment = serde_json::from_str(r#"{"lists":[[2,1,2],[0]]}"#).unwrap();
        assert_eq!(lists.list(0), &[1, 2]);
        assert_eq!(serde_json::to_string(&lists).unwrap(), r#"{"lists":[[1,2],[0]]}"#);
        let col = Coloring {
            colors: vec![Some(3), None],
        };
        assert_eq!(serde_json::to_string(&col).unwrap(), r#"{"colors":[3,null]}"#);
    }
}
