use super::clique_number;
use crate::graph::Graph;

/// Exact chromatic number with a witness coloring (colors `0..chi`).
pub fn chromatic_number(g: &Graph) -> (usize, Vec<u32>) {
    let (omega, _) = clique_number(g);
    (omega..=g.n())
        .find_map(|k| is_k_colorable(g, k).map(|c| (k, c)))
        .expect("n colors always suffice")
}

/// A proper coloring with colors `0..k`, if one exists. Saturation-ordered backtracking; a new
/// color is only opened as the next unused index.
pub fn is_k_colorable(g: &Graph, k: usize) -> Option<Vec<u32>> {
    let n = g.n();
    if k == 0 {
        return None;
    }
    let mut color: Vec<Option<u32>> = vec![None; n];
    // per vertex: bitmask of colors used by neighbours
    let mut blocked = vec![0u64; n];
    if search(g, k, 0, &mut color, &mut blocked) {
        Some(color.into_iter().map(|c| c.expect("complete")).collect())
    } else {
        None
    }
}

fn search(g: &Graph, k: usize, used: usize, color: &mut [Option<u32>], blocked: &mut [u64]) -> bool {
    let full = if k >= 64 { u64::MAX } else { (1u64 << k) - 1 };
    // most saturated uncolored vertex, then highest degree, then smallest label
    let mut pick: Option<(usize, u32, usize)> = None;
    for v in 0..g.n() {
        if color[v].is_some() {
            continue;
        }
        let sat = (blocked[v] & full).count_ones();
        if sat as usize >= k {
            return false;
        }
        let deg = g.degree(v);
        if pick.is_none_or(|(_, s, d)| (sat, deg) > (s, d)) {
            pick = Some((v, sat, deg));
        }
    }
    let Some((v, _, _)) = pick else {
        return true;
    };
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if blocked[v] >> c & 1 == 1 {
            continue;
        }
        color[v] = Some(c as u32);
        let saved: Vec<(usize, u64)> = g.neighbors(v).iter().map(|u| (u, blocked[u])).collect();
        for &(u, _) in &saved {
            blocked[u] |= 1u64 << c;
        }
        if search(g, k, used.max(c + 1), color, blocked) {
            return true;
        }
        for (u, b) in saved {
            blocked[u] = b;
        }
    }
    color[v] = None;
    false
}
