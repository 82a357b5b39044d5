use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph order the hole search accepts.
pub const HOLE_SEARCH_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleWitness {
    /// The cycle is an antihole: found as a hole of the complement.
    pub antihole: bool,
    /// Cycle vertices in cyclic order, starting at the smallest.
    pub cycle: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HoleCheck {
    pub max_hole: usize,
    pub witness: Option<HoleWitness>,
}

impl HoleCheck {
    pub fn clean(&self) -> bool {
        self.witness.is_none()
    }
}

/// Exhaustive search for an induced odd cycle of length `5..=max_hole` in `g` and then in its
/// complement.
pub fn perfect_spot_check(g: &Graph, max_hole: usize) -> Result<HoleCheck> {
    if g.n() > HOLE_SEARCH_CAP {
        return Err(Error::ExhaustiveCap {
            n: g.n(),
            cap: HOLE_SEARCH_CAP,
        });
    }
    let witness = odd_hole(g, max_hole)
        .map(|cycle| HoleWitness { antihole: false, cycle })
        .or_else(|| odd_hole(&g.complement(), max_hole).map(|cycle| HoleWitness { antihole: true, cycle }));
    Ok(HoleCheck { max_hole, witness })
}

fn odd_hole(g: &Graph, max_len: usize) -> Option<Vec<usize>> {
    if max_len < 5 {
        return None;
    }
    for s in 0..g.n() {
        let higher = VertexSet(g.vertices().0 & !((2u64 << s).wrapping_sub(1)));
        let mut path = vec![s];
        if let Some(c) = extend(g, higher, &mut path, max_len) {
            return Some(c);
        }
    }
    None
}

// `path` is an induced path starting at its minimum vertex; try to extend or close it.
fn extend(g: &Graph, allowed: VertexSet, path: &mut Vec<usize>, max_len: usize) -> Option<Vec<usize>> {
    let s = path[0];
    let last = *path.last().expect("nonempty");
    let len = path.len();
    // vertices adjacent to interior path vertices (everything but s and last) are excluded
    let mut blocked = 0u64;
    for &p in path.iter().take(len - 1).skip(1) {
        blocked |= g.neighbors(p).0;
    }
    let on_path: VertexSet = path.iter().copied().collect();
    let cand = g
        .neighbors(last)
        .intersection(allowed)
        .difference(on_path)
        .difference(VertexSet(blocked));
    for w in cand.iter() {
        let touches_start = len >= 2 && g.has_edge(w, s);
        if touches_start {
            let cycle_len = len + 1;
            if cycle_len >= 5 && cycle_len % 2 == 1 && path[1] < w {
                let mut c = path.clone();
                c.push(w);
                return Some(c);
            }
            continue;
        }
        if len + 2 <= max_len {
            path.push(w);
            let found = extend(g, allowed, path, max_len);
            path.pop();
            if found.is_some() {
                return found;
            }
        }
    }
    None
}
