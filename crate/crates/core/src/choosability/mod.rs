//! Exact oracles: clique number, chromatic number, list colorability, `f`-choosability and the
//! choice number, plus an odd hole / antihole search.

mod chromatic;
mod clique;
mod enumerate;
mod holes;

pub use chromatic::{chromatic_number, is_k_colorable};
pub use clique::clique_number;
pub use enumerate::{
    choice_number, choice_number_upto, is_f_choosable, ChoiceNumber, ChoosabilityOptions, ChoosabilityStatus,
    ChoosabilityVerdict, DEFAULT_BUDGET_NODES,
};
pub use holes::{perfect_spot_check, HoleCheck, HoleWitness, HOLE_SEARCH_CAP};

use crate::graph::Graph;
use crate::list_coloring::{Color, Coloring, ListAssignment};

/// Exact list-colorability by backtracking; the next vertex is always the one with the fewest
/// colors still available (ties to the smaller label), colors tried in increasing order.
pub fn list_colorable(g: &Graph, lists: &ListAssignment) -> Option<Coloring> {
    let n = g.n();
    assert_eq!(lists.len(), n, "one list per vertex");
    let mut colors: Vec<Option<Color>> = vec![None; n];
    if assign(g, lists, &mut colors) {
        Some(Coloring { colors })
    } else {
        None
    }
}

fn available<'a>(
    g: &'a Graph,
    lists: &'a ListAssignment,
    colors: &'a [Option<Color>],
    v: usize,
) -> impl Iterator<Item = Color> + 'a {
    lists
        .list(v)
        .iter()
        .copied()
        .filter(move |&c| g.neighbors(v).iter().all(|u| colors[u] != Some(c)))
}

fn assign(g: &Graph, lists: &ListAssignment, colors: &mut [Option<Color>]) -> bool {
    let mut best: Option<(usize, usize)> = None;
    for v in (0..g.n()).filter(|&v| colors[v].is_none()) {
        let avail = available(g, lists, colors, v).count();
        if avail == 0 {
            return false;
        }
        if best.is_none_or(|(_, a)| avail < a) {
            best = Some((v, avail));
        }
    }
    let Some((v, _)) = best else {
        return true;
    };
    let choices: Vec<Color> = available(g, lists, colors, v).collect();
    for c in choices {
        colors[v] = Some(c);
        if assign(g, lists, colors) {
            return true;
        }
    }
    colors[v] = None;
    false
}
