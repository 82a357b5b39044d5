//! Kernels of digraphs and exhaustive kernel-perfectness checking.
//!
//! A kernel of the subdigraph induced on a support `S` is a set `K ⊆ S`, independent in the
//! underlying graph, such that every vertex of `S \ K` has an arc into `K`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::orientation::Digraph;

/// Largest order swept exhaustively unless sampling is requested.
pub const DEFAULT_EXHAUSTIVE_CAP: usize = 22;

/// Largest support `all_kernels` will enumerate.
pub const ALL_KERNELS_CAP: usize = 20;

pub fn is_kernel(d: &Digraph, support: VertexSet, k: VertexSet) -> Result<bool> {
    if !k.is_subset(support) {
        return Err(Error::KernelOutsideSupport);
    }
    let g = d.underlying();
    let independent = k.iter().all(|v| g.neighbors(v).intersection(k).is_empty());
    let absorbing = support
        .difference(k)
        .iter()
        .all(|v| !d.out_neighbors(v).intersection(k).is_empty());
    Ok(independent && absorbing)
}

/// The least kernel of the subdigraph induced on `support`, ordering vertex sets by their bit
/// value (vertex 0 least significant). `None` if there is no kernel.
pub fn find_kernel(d: &Digraph, support: VertexSet) -> Option<VertexSet> {
    let support = support.intersection(d.underlying().vertices());
    let mut search = KernelSearch { d, support };
    search.run(VertexSet::EMPTY, VertexSet::EMPTY, support)
}

struct KernelSearch<'a> {
    d: &'a Digraph,
    support: VertexSet,
}

impl KernelSearch<'_> {
    // Every excluded vertex still needs an out-neighbour that is in K or could still join it.
    fn feasible(&self, kernel: VertexSet, excluded: VertexSet, open: VertexSet) -> bool {
        let reach = kernel.union(open).0;
        excluded.iter().all(|x| self.d.out_neighbors(x).0 & reach != 0)
    }

    /// Decides vertices of `open` from the highest label down, trying exclusion first, so the
    /// first complete kernel reached has the least bit value.
    fn run(&mut self, kernel: VertexSet, excluded: VertexSet, open: VertexSet) -> Option<VertexSet> {
        let Some(v) = open.max() else {
            return Some(kernel);
        };
        let rest = VertexSet(open.0 & !(1u64 << v));

        let ex = excluded.union(VertexSet::singleton(v));
        if self.feasible(kernel, ex, rest) {
            if let Some(k) = self.run(kernel, ex, rest) {
                return Some(k);
            }
        }

        let nbrs = self.d.underlying().neighbors(v).intersection(self.support);
        let inc = kernel.union(VertexSet::singleton(v));
        let forced = rest.intersection(nbrs);
        let ex = excluded.union(forced);
        let open = rest.difference(forced);
        if self.feasible(inc, ex, open) {
            return self.run(inc, ex, open);
        }
        None
    }
}

/// Every kernel of the subdigraph induced on `support`, sorted by bit value. Brute force over
/// all subsets; used as an oracle.
pub fn all_kernels(d: &Digraph, support: VertexSet) -> Result<Vec<VertexSet>> {
    if support.len() > ALL_KERNELS_CAP {
        return Err(Error::ExhaustiveCap {
            n: support.len(),
            cap: ALL_KERNELS_CAP,
        });
    }
    let mut out = Vec::new();
    let mut sub = 0u64;
    loop {
        let k = VertexSet(sub);
        if is_kernel(d, support, k)? {
            out.push(k);
        }
        if sub == support.0 {
            break;
        }
        sub = (sub.wrapping_sub(support.0)) & support.0;
    }
    out.sort();
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum KernelStatus {
    KernelPerfect,
    Counterexample,
    BudgetExceeded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelVerdict {
    pub status: KernelStatus,
    /// Support with no kernel, present iff `status` is `Counterexample`.
    pub witness: Option<VertexSet>,
    pub subsets_checked: u64,
    /// Seed used when supports were sampled instead of swept.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sample_seed: Option<u64>,
}

#[derive(Clone, Debug)]
pub struct KernelCheckOptions {
    /// Maximum number of supports examined.
    pub budget: Option<u64>,
    pub exhaustive_cap: usize,
    /// Draw random supports from this seed instead of sweeping; never certifies perfection.
    pub sample_seed: Option<u64>,
}

impl Default for KernelCheckOptions {
    fn default() -> Self {
        KernelCheckOptions {
            budget: None,
            exhaustive_cap: DEFAULT_EXHAUSTIVE_CAP,
            sample_seed: None,
        }
    }
}

/// Number of random supports drawn in sampling mode when no budget is given.
pub const DEFAULT_SAMPLES: u64 = 1 << 20;

/// Subsets of `0..n` of size `k` in increasing bit value.
fn subsets_of_size(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let first = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let mut next = (k <= n).then_some(first);
    std::iter::from_fn(move || {
        let cur = next?;
        // Gosper's hack
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let (r, overflow) = cur.overflowing_add(c);
            if overflow || r == 0 {
                None
            } else {
                let nxt = (((r ^ cur) >> 2) / c) | r;
                (nxt <= limit && nxt.count_ones() as usize == k).then_some(nxt)
            }
        };
        Some(cur)
    })
}

/// Check every nonempty induced subdigraph for a kernel, by increasing support size and then
/// increasing bit value; the first kernel-free support is the witness.
pub fn kernel_perfect(d: &Digraph, opts: &KernelCheckOptions) -> Result<KernelVerdict> {
    let n = d.n();
    if let Some(seed) = opts.sample_seed {
        return Ok(sample_supports(d, seed, opts.budget.unwrap_or(DEFAULT_SAMPLES)));
    }
    if n > opts.exhaustive_cap {
        return Err(Error::ExhaustiveCap {
            n,
            cap: opts.exhaustive_cap,
        });
    }
    let budget = opts.budget.unwrap_or(u64::MAX);
    let mut checked = 0u64;
    for size in 1..=n {
        let mut level: Vec<u64> = subsets_of_size(n, size).collect();
        let left = budget - checked;
        let truncated = (level.len() as u64) > left;
        if truncated {
            level.truncate(left as usize);
        }
        let hit = level
            .par_iter()
            .position_first(|&s| find_kernel(d, VertexSet(s)).is_none());
        if let Some(i) = hit {
            let witness = VertexSet(level[i]);
            checked += i as u64 + 1;
            assert!(find_kernel(d, witness).is_none(), "witness re-check failed");
            return Ok(KernelVerdict {
                status: KernelStatus::Counterexample,
                witness: Some(witness),
                subsets_checked: checked,
                sample_seed: None,
            });
        }
        checked += level.len() as u64;
        if truncated {
            return Ok(KernelVerdict {
                status: KernelStatus::BudgetExceeded,
                witness: None,
                subsets_checked: checked,
                sample_seed: None,
            });
        }
    }
    Ok(KernelVerdict {
        status: KernelStatus::KernelPerfect,
        witness: None,
        subsets_checked: checked,
        sample_seed: None,
    })
}

fn sample_supports(d: &Digraph, seed: u64, samples: u64) -> KernelVerdict {
    let all = d.underlying().vertices().0;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<u64> = (0..samples)
        .map(|_| loop {
            let s = rng.random::<u64>() & all;
            if s != 0 {
                break s;
            }
        })
        .collect();
    match draws
        .par_iter()
        .position_first(|&s| find_kernel(d, VertexSet(s)).is_none())
    {
        Some(i) => KernelVerdict {
            status: KernelStatus::Counterexample,
            witness: Some(VertexSet(draws[i])),
            subsets_checked: i as u64 + 1,
            sample_seed: Some(seed),
        },
        None => KernelVerdict {
            status: KernelStatus::BudgetExceeded,
            witness: None,
            subsets_checked: samples,
            sample_seed: Some(seed),
        },
    }
}
