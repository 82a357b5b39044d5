//! The verification pipeline: build a theorem instance, orient it under each strategy, check
//! kernel-perfectness, compute the exact invariants and compare everything with the claimed bound.

use std::fmt::Write as _;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::cayley::{theorem_graph, CayleySpec, Claim, ClaimKind, TheoremId, TheoremOptions};
use crate::choosability::{
    choice_number_upto, chromatic_number, clique_number, list_colorable, perfect_spot_check, ChoiceNumber,
    ChoosabilityOptions, ChoosabilityStatus, HoleCheck,
};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::kernels::{find_kernel, kernel_perfect, KernelCheckOptions, KernelStatus, KernelVerdict};
use crate::list_coloring::{lemma1_bound_from, Color, Lemma1Bound, ListAssignment};
use crate::orientation::{build_strategy_orientation, CoverageReport, OrientationStrategy};

/// Graphs up to this order get the odd hole / antihole search.
const HOLE_CHECK_MAX_N: usize = 16;

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub strategies: Vec<OrientationStrategy>,
    pub theorem: TheoremOptions,
    pub kernel: KernelCheckOptions,
    pub choosability: ChoosabilityOptions,
    pub skip_ch: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            strategies: vec![OrientationStrategy::PaperLiteral, OrientationStrategy::Completed],
            theorem: TheoremOptions::default(),
            kernel: KernelCheckOptions::default(),
            choosability: ChoosabilityOptions::default(),
            skip_ch: false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Agreement {
    Confirmed,
    Refuted,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphSummary {
    pub vertices: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub degeneracy: usize,
    pub components: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrategyResult {
    pub coverage: CoverageReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel: Option<KernelVerdict>,
    /// Why the kernel check did not run.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub kernel_error: Option<String>,
    pub lemma1: Lemma1Bound,
    pub wall_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueResult {
    pub omega: usize,
    pub witness: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChromaticResult {
    pub chi: usize,
    pub coloring: Vec<u32>,
}

/// Lists of size `size` admitting no proper coloring; refutes `ch <= size`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub size: usize,
    pub lists: ListAssignment,
}

/// Inputs that, with the spec, reproduce the report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSettings {
    pub strategies: Vec<String>,
    pub budget_nodes: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget_subsets: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_seed: Option<u64>,
    pub exhaustive_cap: usize,
    pub skip_ch: bool,
    pub force: bool,
    pub with_reflections: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub version: String,
    pub theorem: TheoremId,
    pub n: usize,
    pub p: usize,
    pub s2: Vec<usize>,
    pub spec: CayleySpec,
    pub claim: Claim,
    pub graph: GraphSummary,
    pub strategies: Vec<StrategyResult>,
    pub clique: CliqueResult,
    pub chromatic: ChromaticResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub choice: Option<ChoiceNumber>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub perfect: Option<HoleCheck>,
    pub agreement: Agreement,
    pub evidence: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    /// A choosability level or kernel sweep stopped on its budget.
    pub budget_exhausted: bool,
    pub settings: RunSettings,
    pub wall_ms: u128,
}

pub fn verify(id: TheoremId, n: usize, opts: &VerifyOptions) -> Result<Report> {
    let t0 = Instant::now();
    let inst = theorem_graph(id, n, &opts.theorem)?;
    let g = &inst.graph;

    let mut strategies = Vec::new();
    for strategy in &opts.strategies {
        strategies.push(run_strategy(&inst, strategy, &opts.kernel)?);
    }

    let (omega, witness) = clique_number(g);
    let (chi, coloring) = chromatic_number(g);
    let perfect = match &inst.spec {
        CayleySpec::Circulant(_) if g.n() <= HOLE_CHECK_MAX_N => {
            let longest_odd = if g.n() % 2 == 1 { g.n() } else { g.n() - 1 };
            Some(perfect_spot_check(g, longest_odd)?)
        }
        _ => None,
    };
    // levels above the claimed value cannot change the verdict
    let choice = (!opts.skip_ch).then(|| choice_number_upto(g, &opts.choosability, inst.claim.value));

    let budget_exhausted = choice
        .as_ref()
        .is_some_and(|c| c.levels.iter().any(|l| l.status == ChoosabilityStatus::BudgetExceeded))
        || strategies.iter().any(|s| {
            s.kernel
                .as_ref()
                .is_some_and(|k| k.status == KernelStatus::BudgetExceeded)
        });

    let mut report = Report {
        version: env!("CARGO_PKG_VERSION").to_string(),
        theorem: id,
        n,
        p: inst.p,
        s2: inst.s2.clone(),
        spec: inst.spec.clone(),
        claim: inst.claim,
        graph: GraphSummary {
            vertices: g.n(),
            edges: g.edge_count(),
            max_degree: g.max_degree(),
            degeneracy: g.degeneracy(),
            components: g.components().len(),
        },
        strategies,
        clique: CliqueResult { omega, witness },
        chromatic: ChromaticResult { chi, coloring },
        choice,
        perfect,
        agreement: Agreement::Undetermined,
        evidence: Vec::new(),
        certificate: None,
        budget_exhausted,
        settings: RunSettings {
            strategies: opts.strategies.iter().map(|s| s.to_string()).collect(),
            budget_nodes: opts.choosability.budget_nodes,
            budget_subsets: opts.kernel.budget,
            sample_seed: opts.kernel.sample_seed,
            exhaustive_cap: opts.kernel.exhaustive_cap,
            skip_ch: opts.skip_ch,
            force: opts.theorem.force,
            with_reflections: opts.theorem.with_reflections,
        },
        wall_ms: 0,
    };
    check_invariants(&report, g);
    decide(&mut report, g, &opts.choosability);
    report.wall_ms = t0.elapsed().as_millis();
    Ok(report)
}

fn run_strategy(
    inst: &crate::cayley::TheoremInstance,
    strategy: &OrientationStrategy,
    kopts: &KernelCheckOptions,
) -> Result<StrategyResult> {
    let t0 = Instant::now();
    let (d, coverage) = build_strategy_orientation(inst, strategy)?;
    let (kernel, kernel_error) = match kernel_perfect(&d, kopts) {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e.to_string())),
    };
    if let Some(w) = kernel.as_ref().and_then(|k| k.witness) {
        assert!(find_kernel(&d, w).is_none(), "counterexample {w:?} has a kernel");
    }
    let lemma1 = match &kernel {
        Some(k) => lemma1_bound_from(&d, k),
        None => Lemma1Bound {
            bound: d.max_outdegree() + 1,
            valid: false,
        },
    };
    Ok(StrategyResult {
        coverage,
        kernel,
        kernel_error,
        lemma1,
        wall_ms: t0.elapsed().as_millis(),
    })
}

/// Orderings that must hold between the computed quantities; a failure is a bug, not a finding.
fn check_invariants(r: &Report, g: &Graph) {
    assert!(r.clique.omega <= r.chromatic.chi, "omega > chi");
    assert!(g.is_clique(r.clique.witness), "clique witness is not a clique");
    assert!(
        g.edges()
            .iter()
            .all(|&(u, v)| r.chromatic.coloring[u] != r.chromatic.coloring[v]),
        "improper coloring"
    );
    if let Some(c) = &r.choice {
        assert!(r.chromatic.chi <= c.lower, "chi above the choosability lower bound");
        assert!(c.upper <= g.max_degree() + 1, "choice number above max degree + 1");
        for s in r.strategies.iter().filter(|s| s.lemma1.valid) {
            assert!(
                c.lower <= s.lemma1.bound,
                "{}: kernel-perfect orientation gives ch <= {} but ch >= {}",
                s.coverage.strategy,
                s.lemma1.bound,
                c.lower
            );
        }
        for level in &c.levels {
            if let Some(bad) = &level.bad_lists {
                assert!(list_colorable(g, bad).is_none(), "bad lists admit a coloring");
            }
        }
    }
}

/// Lists of size `size` with no coloring, cut down from a failing assignment with longer lists.
fn certificate_at(g: &Graph, c: &ChoiceNumber, size: usize, opts: &ChoosabilityOptions) -> Option<Certificate> {
    let from_levels = c
        .levels
        .iter()
        .filter(|l| l.f.iter().all(|&s| s >= size))
        .find_map(|l| l.bad_lists.as_ref())
        .map(|bad| {
            let lists: Vec<Vec<Color>> = bad.lists().iter().map(|l| l[..size].to_vec()).collect();
            ListAssignment::new(lists).expect("size >= 1")
        });
    let lists = from_levels.or_else(|| {
        // the claimed size lies below chi: the enumeration fails at once
        crate::choosability::is_f_choosable(g, &vec![size; g.n()], opts).bad_lists
    })?;
    assert!(list_colorable(g, &lists).is_none(), "certificate admits a coloring");
    Some(Certificate { size, lists })
}

fn decide(r: &mut Report, g: &Graph, opts: &ChoosabilityOptions) {
    let c = r.claim.value;
    let mut ev = Vec::new();
    let mut agreement = Agreement::Undetermined;

    for s in &r.strategies {
        let name = &s.coverage.strategy;
        match s.kernel.as_ref().map(|k| k.status) {
            Some(KernelStatus::KernelPerfect) => {
                ev.push(format!("{name}: kernel-perfect orientation, ch <= {}", s.lemma1.bound));
            }
            Some(KernelStatus::Counterexample) => {
                ev.push(format!("{name}: orientation is not kernel-perfect, no bound"));
            }
            Some(KernelStatus::BudgetExceeded) => ev.push(format!("{name}: kernel sweep out of budget")),
            None => ev.push(format!(
                "{name}: kernel check skipped ({})",
                s.kernel_error.as_deref().unwrap_or("?")
            )),
        }
    }
    let kernel_bound = r
        .strategies
        .iter()
        .filter(|s| s.lemma1.valid)
        .map(|s| s.lemma1.bound)
        .min();

    if let Some(ch) = r.choice.clone() {
        if let Some(k) = ch.exact {
            ev.push(format!("exact ch = {k}"));
        } else {
            ev.push(format!("ch in [{}, {}]", ch.lower, ch.upper));
        }
        if ch.lower > c {
            if let Some(cert) = certificate_at(g, &ch, c, opts) {
                ev.push(format!("lists of size {c} with no proper coloring"));
                r.certificate = Some(cert);
                agreement = Agreement::Refuted;
            }
        } else {
            let upper = kernel_bound.map_or(ch.upper, |b| b.min(ch.upper));
            agreement = match r.claim.kind {
                ClaimKind::AtMost if upper <= c => Agreement::Confirmed,
                ClaimKind::Equal if ch.exact == Some(c) => Agreement::Confirmed,
                ClaimKind::Equal if upper < c => {
                    ev.push(format!("ch <= {upper} < {c}"));
                    Agreement::Refuted
                }
                _ => Agreement::Undetermined,
            };
        }
    } else if r.claim.kind == ClaimKind::AtMost && kernel_bound.is_some_and(|b| b <= c) {
        agreement = Agreement::Confirmed;
    } else if r.chromatic.chi > c {
        // chi > c already refutes; attach lists that witness it
        if let Some(lists) = crate::choosability::is_f_choosable(g, &vec![c; g.n()], opts).bad_lists {
            ev.push(format!("chi = {} > {c}", r.chromatic.chi));
            assert!(list_colorable(g, &lists).is_none(), "certificate admits a coloring");
            r.certificate = Some(Certificate { size: c, lists });
            agreement = Agreement::Refuted;
        }
    }
    r.agreement = agreement;
    r.evidence = ev;
}

impl Report {
    /// Process exit status: 2 refuted, 3 undetermined because a budget ran out, else 0.
    pub fn exit_code(&self) -> i32 {
        match self.agreement {
            Agreement::Refuted => 2,
            Agreement::Undetermined if self.budget_exhausted => 3,
            _ => 0,
        }
    }

    pub fn summary(&self) -> String {
        let mut s = String::new();
        let w = &mut s;
        let _ = writeln!(w, "{} n={} p={} claim: {}", self.theorem, self.n, self.p, self.claim);
        let g = &self.graph;
        let _ = writeln!(
            w,
            "graph: {} vertices, {} edges, max degree {}, degeneracy {}, {} component(s)",
            g.vertices, g.edges, g.max_degree, g.degeneracy, g.components
        );
        for st in &self.strategies {
            let c = &st.coverage;
            let kernel = match &st.kernel {
                Some(k) => match k.witness {
                    Some(wit) => format!("{:?} {:?}", k.status, wit.to_vec()),
                    None => format!("{:?}", k.status),
                },
                None => format!("not run: {}", st.kernel_error.as_deref().unwrap_or("?")),
            };
            let _ = writeln!(
                w,
                "strategy {}: directives {:?}, {} uncovered, {} bidirected, max outdegree {}, kernel {}, bound {}{}",
                c.strategy,
                c.directives,
                c.uncovered.len(),
                c.bidirected,
                c.max_outdegree,
                kernel,
                st.lemma1.bound,
                if st.lemma1.valid { "" } else { " (not valid)" }
            );
        }
        let _ = writeln!(
            w,
            "omega = {} {:?}, chi = {}",
            self.clique.omega,
            self.clique.witness.to_vec(),
            self.chromatic.chi
        );
        match &self.choice {
            Some(c) => match c.exact {
                Some(k) => {
                    let _ = writeln!(w, "ch = {k}");
                }
                None => {
                    let _ = writeln!(w, "ch in [{}, {}]", c.lower, c.upper);
                }
            },
            None => {
                let _ = writeln!(w, "ch skipped");
            }
        }
        if let Some(h) = &self.perfect {
            match &h.witness {
                None => {
                    let _ = writeln!(w, "no odd hole or antihole up to length {}", h.max_hole);
                }
                Some(hw) => {
                    let kind = if hw.antihole { "antihole" } else { "hole" };
                    let _ = writeln!(w, "odd {kind} {:?}", hw.cycle);
                }
            }
        }
        if let Some(cert) = &self.certificate {
            let _ = writeln!(w, "certificate ({}-lists): {:?}", cert.size, cert.lists.lists());
        }
        let _ = writeln!(w, "agreement: {:?} ({})", self.agreement, self.evidence.join("; "));
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t3_nine_confirmed() {
        let opts = VerifyOptions {
            strategies: vec![OrientationStrategy::PaperLiteral],
            ..Default::default()
        };
        let r = verify(TheoremId::T3, 9, &opts).unwrap();
        assert_eq!(r.agreement, Agreement::Confirmed);
        assert_eq!((r.clique.omega, r.chromatic.chi), (3, 3));
        assert_eq!(r.choice.as_ref().unwrap().exact, Some(3));
        let s = &r.strategies[0];
        assert_eq!(s.coverage.directives, vec![3, 6]);
        assert!(s.coverage.uncovered.is_empty());
        assert_eq!(s.coverage.max_outdegree, 2);
        assert_eq!(s.kernel.as_ref().unwrap().status, KernelStatus::KernelPerfect);
        assert_eq!(s.kernel.as_ref().unwrap().subsets_checked, 511);
        assert_eq!(s.lemma1, Lemma1Bound { bound: 3, valid: true });
        assert_eq!(r.exit_code(), 0);
    }

    #[test]
    fn t2_nine_refuted_with_certificate() {
        let r = verify(TheoremId::T2, 9, &VerifyOptions::default()).unwrap();
        assert_eq!(r.strategies[0].coverage.uncovered.len(), 9);
        assert_eq!(r.strategies[1].coverage.max_outdegree, 3);
        assert_eq!(r.strategies[1].lemma1.bound, 4);
        assert_eq!(r.agreement, Agreement::Refuted);
        let cert = r.certificate.as_ref().unwrap();
        assert_eq!(cert.size, 3);
        assert!(list_colorable(&r.spec.build().unwrap(), &cert.lists).is_none());
        assert_eq!(r.exit_code(), 2);
        let json = serde_json::to_string(&r).unwrap();
        let back: Report = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn skip_ch_leaves_equality_open() {
        let opts = VerifyOptions {
            skip_ch: true,
            ..Default::default()
        };
        let r = verify(TheoremId::T3, 9, &opts).unwrap();
        assert!(r.choice.is_none());
        assert_eq!(r.agreement, Agreement::Undetermined);
        assert!(r.summary().contains("ch skipped"));
    }

    #[test]
    fn budget_exhaustion_exit_code() {
        let opts = VerifyOptions {
            choosability: ChoosabilityOptions { budget_nodes: 10 },
            ..Default::default()
        };
        let r = verify(TheoremId::T2, 9, &opts).unwrap();
        assert_eq!(r.agreement, Agreement::Undetermined);
        assert!(r.budget_exhausted);
        assert_eq!(r.exit_code(), 3);
    }
}
