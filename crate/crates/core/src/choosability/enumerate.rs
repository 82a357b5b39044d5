//! Exhaustive `f`-choosability over canonical list assignments.
//!
//! Lists are fixed vertex by vertex in label order. Colors come from `0..Σf`; a list at a vertex
//! may reuse any of the `u` colors already seen and otherwise takes fresh colors `u, u+1, ...` in
//! order, so assignments differing only by a renaming of colors are enumerated once. At each
//! vertex the candidate lists are visited in colexicographic order.
//!
//! Alongside the enumeration we carry the set of partial colorings of the fixed prefix, projected
//! onto what the rest of the graph can see: for every later vertex adjacent to the prefix, the
//! set of colors its colored neighbours use. That projection decides colorability of every
//! extension, so an empty projection means the fixed lists already admit no coloring, and two
//! prefixes with the same projection (up to renaming colors) have identical subtrees. Subtrees
//! found to contain no failure are memoized and skipped on repeat.

use std::collections::HashSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{chromatic_number, list_colorable};
use crate::graph::{Graph, VertexSet};
use crate::list_coloring::{Color, ListAssignment};

/// Default cap on enumeration nodes (list choices tried).
pub const DEFAULT_BUDGET_NODES: u64 = 100_000_000;

/// Memo entries kept before the table is flushed.
const MEMO_LIMIT: usize = 4_000_000;

/// Largest color universe the bit-set representation supports.
const MAX_UNIVERSE: usize = 128;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChoosabilityStatus {
    Choosable,
    NotChoosable,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoosabilityVerdict {
    pub status: ChoosabilityStatus,
    /// List sizes that were tested.
    pub f: Vec<usize>,
    /// Assignment admitting no proper list coloring; present iff `NotChoosable`.
    pub bad_lists: Option<ListAssignment>,
    /// Complete assignments whose colorability was decided without a memo hit.
    pub assignments_checked: u64,
    pub nodes_expanded: u64,
    pub memo_hits: u64,
    pub budget_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug)]
pub struct ChoosabilityOptions {
    pub budget_nodes: u64,
}

impl Default for ChoosabilityOptions {
    fn default() -> Self {
        ChoosabilityOptions {
            budget_nodes: DEFAULT_BUDGET_NODES,
        }
    }
}

type ColorSet = u128;

/// Projection of the prefix colorings: `rows` tuples of `width` forbidden-color sets, one per
/// interface vertex, sorted and free of dominated tuples.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Frontier {
    width: usize,
    rows: Vec<ColorSet>,
}

impl Frontier {
    /// Zero-width frontiers hold a single placeholder row when some coloring exists.
    fn count(&self) -> usize {
        self.rows.len().checked_div(self.width).unwrap_or(self.rows.len())
    }

    fn row(&self, i: usize) -> &[ColorSet] {
        &self.rows[i * self.width..(i + 1) * self.width]
    }

    fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

struct Enumerator<'a> {
    g: &'a Graph,
    f: &'a [usize],
    n: usize,
    /// interface[i]: later vertices (> i) adjacent to some vertex <= i, increasing.
    interface: Vec<Vec<usize>>,
    lists: Vec<ColorSet>,
    memo: HashSet<(usize, Vec<ColorSet>)>,
    budget: u64,
    nodes: u64,
    leaves: u64,
    memo_hits: u64,
}

enum Outcome {
    Clean,
    /// The lists fixed at vertices `0..=i` already admit no coloring.
    Failed(usize),
    OutOfBudget,
}

impl<'a> Enumerator<'a> {
    fn new(g: &'a Graph, f: &'a [usize], budget: u64) -> Self {
        let n = g.n();
        let mut interface = Vec::with_capacity(n);
        let mut seen = 0u64;
        for i in 0..n {
            seen |= g.neighbors(i).0;
            let later = seen & !((2u64 << i).wrapping_sub(1));
            interface.push(VertexSet(later).to_vec());
        }
        Enumerator {
            g,
            f,
            n,
            interface,
            lists: vec![0; n],
            memo: HashSet::new(),
            budget,
            nodes: 0,
            leaves: 0,
            memo_hits: 0,
        }
    }

    /// Extend the frontier after vertex `i - 1` by fixing `lists[i]`.
    fn step(&self, prev: &Frontier, i: usize) -> Frontier {
        let prev_iface: &[usize] = if i == 0 { &[] } else { &self.interface[i - 1] };
        debug_assert_eq!(prev.width, prev_iface.len());
        let iface = &self.interface[i];
        let width = iface.len();
        let nbrs = self.g.neighbors(i);
        let own = prev_iface.iter().position(|&v| v == i);
        // index of each new interface vertex in the previous tuple
        let carried: Vec<Option<usize>> = iface.iter().map(|v| prev_iface.iter().position(|w| w == v)).collect();
        let touched: Vec<bool> = iface.iter().map(|&v| nbrs.contains(v)).collect();

        let mut rows: Vec<ColorSet> = Vec::new();
        let mut any = false;
        for r in 0..prev.count() {
            let tuple = prev.row(r);
            let forbidden = own.map_or(0, |k| tuple[k]);
            let mut free = self.lists[i] & !forbidden;
            while free != 0 {
                let c = free.trailing_zeros();
                free &= free - 1;
                any = true;
                let bit: ColorSet = 1 << c;
                for (k, _) in iface.iter().enumerate() {
                    let base = carried[k].map_or(0, |j| tuple[j]);
                    rows.push(if touched[k] { base | bit } else { base });
                }
            }
        }
        if width == 0 {
            return Frontier {
                width,
                rows: if any { vec![0] } else { Vec::new() },
            };
        }
        Frontier {
            width,
            rows: minimize(width, rows),
        }
    }

    /// Depth-first over canonical lists for vertex `i`, with `used` colors seen so far.
    ///
    /// Colors below `used` that no frontier tuple mentions are interchangeable with fresh ones,
    /// so only the colexicographically first list of each class (same frontier colors, same
    /// number of others) is expanded. Every other member comes later in colex order than its
    /// representative and has the same subtree, so the first failure found is still the first
    /// failure in enumeration order.
    fn search(&mut self, i: usize, used: usize, frontier: &Frontier) -> Outcome {
        let size = self.f[i];
        if i + 1 == self.n {
            return self.last_vertex(i, frontier);
        }
        let present: ColorSet = frontier.rows.iter().fold(0, |acc, &s| acc | s);
        for list in class_representatives(size, used, present) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Outcome::OutOfBudget;
            }
            self.lists[i] = list;
            let next = self.step(frontier, i);
            if next.is_empty() {
                return Outcome::Failed(i);
            }
            let key = (i, canonical_key(&next));
            if self.memo.contains(&key) {
                self.memo_hits += 1;
                continue;
            }
            let fresh = (list >> used).count_ones() as usize;
            match self.search(i + 1, used + fresh, &next) {
                Outcome::Clean => {
                    if self.memo.len() >= MEMO_LIMIT {
                        self.memo.clear();
                    }
                    self.memo.insert(key);
                }
                other => return other,
            }
        }
        Outcome::Clean
    }

    /// The last vertex fails exactly for lists inside every tuple's forbidden set; the first such
    /// list in colex order is made of the smallest common forbidden colors.
    fn last_vertex(&mut self, i: usize, frontier: &Frontier) -> Outcome {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Outcome::OutOfBudget;
        }
        self.leaves += 1;
        if frontier.width == 0 {
            return Outcome::Clean;
        }
        debug_assert_eq!(frontier.width, 1);
        let common = frontier.rows.iter().fold(ColorSet::MAX, |acc, &s| acc & s);
        if (common.count_ones() as usize) < self.f[i] {
            return Outcome::Clean;
        }
        self.lists[i] = bits_to_colors(common)
            .into_iter()
            .take(self.f[i])
            .fold(0, |acc, c| acc | 1u128 << c);
        debug_assert!(self.step(frontier, i).is_empty());
        Outcome::Failed(i)
    }

    /// The failing prefix, completed with the colexicographically first list at every later vertex.
    fn certificate(&self, failed_at: usize) -> ListAssignment {
        let lists = (0..self.n)
            .map(|v| {
                if v <= failed_at {
                    bits_to_colors(self.lists[v])
                } else {
                    (0..self.f[v] as Color).collect()
                }
            })
            .collect();
        ListAssignment::new(lists).expect("lists nonempty")
    }
}

fn bits_to_colors(mut bits: ColorSet) -> Vec<Color> {
    let mut out = Vec::new();
    while bits != 0 {
        out.push(bits.trailing_zeros());
        bits &= bits - 1;
    }
    out
}

/// One list per class for a vertex with list size `size`, `used` colors seen and `present` of them
/// visible in the frontier, sorted in colex order. A class fixes the frontier colors of the list;
/// its representative fills the remaining slots with the smallest other colors, old before fresh.
fn class_representatives(size: usize, used: usize, present: ColorSet) -> Vec<ColorSet> {
    let present_colors = bits_to_colors(present);
    let others = (0..).filter(|&c| c >= used || present >> c & 1 == 0).take(size);
    let others: Vec<ColorSet> = others.map(|c: usize| 1u128 << c).collect();
    let mut reps = Vec::new();
    for inside in 0..=size.min(present_colors.len()) {
        let filler: ColorSet = others[..size - inside].iter().fold(0, |a, &b| a | b);
        let mut idx: ColorSet = if inside == 0 { 0 } else { (1u128 << inside) - 1 };
        loop {
            let chosen = bits_to_colors(idx)
                .into_iter()
                .fold(0, |a, k| a | 1u128 << present_colors[k as usize]);
            reps.push(chosen | filler);
            match next_subset(idx, present_colors.len()) {
                Some(nx) if inside > 0 => idx = nx,
                _ => break,
            }
        }
    }
    reps.sort_unstable();
    reps
}

/// Next subset of `0..universe` with the same size in colexicographic order.
fn next_subset(s: ColorSet, universe: usize) -> Option<ColorSet> {
    if s == 0 {
        return None;
    }
    let c = s & s.wrapping_neg();
    let (r, overflow) = s.overflowing_add(c);
    if overflow {
        return None;
    }
    let next = (((r ^ s) >> 2) / c) | r;
    (universe >= 128 || next >> universe == 0).then_some(next)
}

/// Sort, deduplicate and drop tuples dominated componentwise by another tuple.
fn minimize(width: usize, rows: Vec<ColorSet>) -> Vec<ColorSet> {
    let mut tuples: Vec<&[ColorSet]> = rows.chunks(width).collect();
    tuples.sort_unstable();
    tuples.dedup();
    // tuples with fewer forbidden colors first, so dominators are seen before what they dominate
    tuples.sort_by_key(|t| t.iter().map(|s| s.count_ones()).sum::<u32>());
    let mut kept: Vec<&[ColorSet]> = Vec::with_capacity(tuples.len());
    for t in tuples {
        let dominated = kept.iter().any(|k| k.iter().zip(t).all(|(a, b)| a & !b == 0));
        if !dominated {
            kept.push(t);
        }
    }
    kept.sort_unstable();
    kept.concat()
}

/// Relabel the colors of a frontier into a canonical-ish order (by per-position occurrence
/// counts, ties by label) and compact them to `0..k`. Any relabeling is sound as a memo key:
/// subtree outcomes are invariant under color renaming, and colors absent from the frontier are
/// interchangeable with fresh ones.
fn canonical_key(fr: &Frontier) -> Vec<ColorSet> {
    if fr.width == 0 {
        return Vec::new();
    }
    let mut present: ColorSet = 0;
    for &s in &fr.rows {
        present |= s;
    }
    let colors = bits_to_colors(present);
    let mut sig: Vec<(Vec<u32>, Color)> = colors
        .iter()
        .map(|&c| {
            let mut counts = vec![0u32; fr.width];
            for r in 0..fr.count() {
                for (k, &s) in fr.row(r).iter().enumerate() {
                    counts[k] += (s >> c & 1) as u32;
                }
            }
            (counts, c)
        })
        .collect();
    sig.sort();
    let mut map = [0u8; 128];
    for (new, (_, c)) in sig.iter().enumerate() {
        map[*c as usize] = new as u8;
    }
    let relabeled: Vec<ColorSet> = fr
        .rows
        .iter()
        .map(|&s| {
            bits_to_colors(s)
                .into_iter()
                .fold(0, |acc, c| acc | 1u128 << map[c as usize])
        })
        .collect();
    let mut tuples: Vec<&[ColorSet]> = relabeled.chunks(fr.width).collect();
    tuples.sort_unstable();
    tuples.concat()
}

/// Decide whether every assignment of lists with `|L(v)| = f[v]` admits a proper list coloring.
pub fn is_f_choosable(g: &Graph, f: &[usize], opts: &ChoosabilityOptions) -> ChoosabilityVerdict {
    assert_eq!(f.len(), g.n(), "one list size per vertex");
    assert!(f.iter().all(|&s| s >= 1), "list sizes must be positive");
    let universe: usize = f.iter().sum();
    let mut verdict = ChoosabilityVerdict {
        status: ChoosabilityStatus::BudgetExceeded,
        f: f.to_vec(),
        bad_lists: None,
        assignments_checked: 0,
        nodes_expanded: 0,
        memo_hits: 0,
        budget_nodes: opts.budget_nodes,
        note: None,
    };
    if universe > MAX_UNIVERSE {
        verdict.note = Some(format!("color universe {universe} exceeds {MAX_UNIVERSE}"));
        return verdict;
    }

    // a graph is f-choosable iff each component is; components are searched in order of their
    // smallest vertex and a failing one is padded with `0..f` lists elsewhere
    let mut status = ChoosabilityStatus::Choosable;
    for comp in g.components() {
        let (sub, map) = g.induced(comp).expect("components are nonempty");
        let sub_f: Vec<usize> = map.iter().map(|&v| f[v]).collect();
        let remaining = opts.budget_nodes - verdict.nodes_expanded;
        let mut e = Enumerator::new(&sub, &sub_f, remaining);
        let start = Frontier {
            width: 0,
            rows: vec![0],
        };
        let outcome = e.search(0, 0, &start);
        verdict.assignments_checked += e.leaves;
        verdict.nodes_expanded += e.nodes.min(remaining);
        verdict.memo_hits += e.memo_hits;
        match outcome {
            Outcome::Clean => {}
            Outcome::OutOfBudget => {
                status = ChoosabilityStatus::BudgetExceeded;
                break;
            }
            Outcome::Failed(failed_at) => {
                let part = e.certificate(failed_at);
                let mut lists: Vec<Vec<Color>> = f.iter().map(|&s| (0..s as Color).collect()).collect();
                for (i, &v) in map.iter().enumerate() {
                    lists[v] = part.list(i).to_vec();
                }
                let bad = ListAssignment::new(lists).expect("lists nonempty");
                assert!(
                    list_colorable(g, &bad).is_none(),
                    "certificate re-check failed: {bad:?}"
                );
                status = ChoosabilityStatus::NotChoosable;
                verdict.assignments_checked += 1;
                verdict.bad_lists = Some(bad);
                break;
            }
        }
    }
    verdict.status = status;
    verdict
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChoiceNumber {
    /// `ch` is known to be at least this.
    pub lower: usize,
    /// `ch` is known to be at most this.
    pub upper: usize,
    pub exact: Option<usize>,
    pub chromatic: usize,
    /// One verdict per level tried, from `chromatic` upward.
    pub levels: Vec<ChoosabilityVerdict>,
    pub wall_ms: u128,
}

/// Smallest `k` with `g` `k`-choosable, searched upward from the chromatic number. Level
/// `degeneracy + 1` is never enumerated since greedy coloring settles it. When a level runs out of
/// budget the result is the interval `[lower, degeneracy + 1]`.
pub fn choice_number(g: &Graph, opts: &ChoosabilityOptions) -> ChoiceNumber {
    choice_number_upto(g, opts, usize::MAX)
}

/// As [`choice_number`], but no level above `max_level` is enumerated; stopping there leaves the
/// interval `[lower, degeneracy + 1]` with `lower > max_level`.
pub fn choice_number_upto(g: &Graph, opts: &ChoosabilityOptions, max_level: usize) -> ChoiceNumber {
    let t0 = Instant::now();
    let (chi, _) = chromatic_number(g);
    let upper_bound = g.degeneracy() + 1;
    let mut levels = Vec::new();
    let mut lower = chi;
    let mut exact = None;
    for k in chi..upper_bound.min(max_level.saturating_add(1)) {
        let v = is_f_choosable(g, &vec![k; g.n()], opts);
        let status = v.status;
        levels.push(v);
        match status {
            ChoosabilityStatus::Choosable => {
                exact = Some(k);
                break;
            }
            ChoosabilityStatus::NotChoosable => lower = k + 1,
            ChoosabilityStatus::BudgetExceeded => break,
        }
    }
    if exact.is_none() && lower == upper_bound {
        // greedy coloring along a degeneracy order always succeeds with lists this long
        exact = Some(lower);
    }
    let upper = exact.unwrap_or(upper_bound);
    ChoiceNumber {
        lower,
        upper,
        exact,
        chromatic: chi,
        levels,
        wall_ms: t0.elapsed().as_millis(),
    }
}
