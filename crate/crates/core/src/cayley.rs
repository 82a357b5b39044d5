//! Circulant and dihedral Cayley graph constructors, plus the theorem instances built from them.
//!
//! Dihedral vertex layout: rotation `s^a` is vertex `a`, reflection `r s^a` is vertex `n + a`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Distinct prime divisors in increasing order.
pub fn prime_divisors(mut n: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub fn least_prime_divisor(n: usize) -> Option<usize> {
    prime_divisors(n).first().copied()
}

/// Residues in `1..n` coprime to `n`.
pub fn units(n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("units need n >= 2, got {n}")));
    }
    Ok((1..n).filter(|&j| gcd(j, n) == 1).collect())
}

/// Residues in `1..n` sharing a factor with `n`.
pub fn nonunits(n: usize) -> Result<Vec<usize>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("nonunits need n >= 2, got {n}")));
    }
    Ok((1..n).filter(|&j| gcd(j, n) != 1).collect())
}

fn check_residue_set(n: usize, set: &[usize], what: &str, allow_zero: bool) -> Result<()> {
    let mut seen = BTreeSet::new();
    for &j in set {
        if j >= n {
            return Err(Error::InvalidSpec(format!("{what} residue {j} not below n = {n}")));
        }
        if j == 0 && !allow_zero {
            return Err(Error::InvalidSpec(format!("{what} contains the identity residue 0")));
        }
        if !seen.insert(j) {
            return Err(Error::InvalidSpec(format!("{what} residue {j} listed twice")));
        }
    }
    Ok(())
}

fn check_inverse_closed(n: usize, set: &[usize], what: &str) -> Result<()> {
    let members: BTreeSet<_> = set.iter().copied().collect();
    match set.iter().find(|&&j| !members.contains(&((n - j) % n))) {
        Some(j) => Err(Error::InvalidSpec(format!(
            "{what} is not inverse-closed: residue {j} present but {} missing",
            (n - j) % n
        ))),
        None => Ok(()),
    }
}

/// Circulant graph on `Z_n` with an inverse-closed connection set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirculantSpec {
    pub n: usize,
    pub connection: Vec<usize>,
}

impl CirculantSpec {
    pub fn new(n: usize, connection: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut connection: Vec<usize> = connection.into_iter().collect();
        connection.sort_unstable();
        let spec = CirculantSpec { n, connection };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > MAX_VERTICES {
            return Err(Error::InvalidSpec(format!("circulant order {} outside 1..=64", self.n)));
        }
        check_residue_set(self.n, &self.connection, "connection", false)?;
        check_inverse_closed(self.n, &self.connection, "connection")
    }
}

/// Cayley graph on the dihedral group of order `2n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DihedralSpec {
    pub n: usize,
    pub rotations: Vec<usize>,
    pub reflections: Vec<usize>,
}

impl DihedralSpec {
    pub fn new(
        n: usize,
        rotations: impl IntoIterator<Item = usize>,
        reflections: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let mut rotations: Vec<usize> = rotations.into_iter().collect();
        let mut reflections: Vec<usize> = reflections.into_iter().collect();
        rotations.sort_unstable();
        reflections.sort_unstable();
        let spec = DihedralSpec {
            n,
            rotations,
            reflections,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || 2 * self.n > MAX_VERTICES {
            return Err(Error::InvalidSpec(format!(
                "dihedral rotation order {} outside 1..=32",
                self.n
            )));
        }
        check_residue_set(self.n, &self.rotations, "rotations", false)?;
        check_inverse_closed(self.n, &self.rotations, "rotations")?;
        check_residue_set(self.n, &self.reflections, "reflections", true)
    }
}

/// Declarative description of a graph instance; serialized with a `family` tag.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum CayleySpec {
    Circulant(CirculantSpec),
    Dihedral(DihedralSpec),
}

impl CayleySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            CayleySpec::Circulant(c) => circulant(c),
            CayleySpec::Dihedral(d) => dihedral_cayley(d),
        }
    }
}

pub fn circulant(spec: &CirculantSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut g = Graph::empty(n)?;
    for v in 0..n {
        for &j in &spec.connection {
            g.add_edge(v, (v + j) % n)?;
        }
    }
    debug_assert!(g.check_invariants());
    Ok(g)
}

pub fn circulant_from(n: usize, connection: &[usize]) -> Result<Graph> {
    circulant(&CirculantSpec::new(n, connection.iter().copied())?)
}

pub fn unitary(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!(
            "unitary Cayley graph needs n >= 3, got {n}"
        )));
    }
    circulant_from(n, &units(n)?)
}

/// Complement of the unitary Cayley graph, i.e. the circulant on the nonzero nonunits.
pub fn unitary_complement(n: usize) -> Result<Graph> {
    circulant_from(n, &nonunits(n)?)
}

/// `k`-th power of the `n`-cycle.
pub fn power_of_cycle(n: usize, k: usize) -> Result<Graph> {
    if k == 0 || 2 * k >= n {
        return Err(Error::InvalidSpec(format!(
            "power k = {k} outside 1 <= k < n/2 for n = {n}"
        )));
    }
    let conn: Vec<usize> = (1..=k).chain(n - k..n).collect();
    circulant_from(n, &conn)
}

pub fn dihedral_cayley(spec: &DihedralSpec) -> Result<Graph> {
    spec.validate()?;
    let n = spec.n;
    let mut g = Graph::empty(2 * n)?;
    for a in 0..n {
        for &j in &spec.rotations {
            g.add_edge(a, (a + j) % n)?;
            g.add_edge(n + a, n + (a + j) % n)?;
        }
        // s^a * r s^b = r s^(b - a)
        for &b in &spec.reflections {
            g.add_edge(a, n + (b + n - a) % n)?;
        }
    }
    debug_assert!(g.check_invariants());
    Ok(g)
}

/// The theorem or corollary whose graph family and claim an instance reproduces.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    T2,
    T3,
    T4,
    C5,
    T6,
    C7,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::C5,
        TheoremId::T6,
        TheoremId::C7,
    ];

    /// Rotation set of the base circulant: units or nonzero nonunits.
    pub fn base(self) -> BaseFamily {
        match self {
            TheoremId::T2 | TheoremId::T4 | TheoremId::C5 => BaseFamily::Units,
            TheoremId::T3 | TheoremId::T6 | TheoremId::C7 => BaseFamily::Nonunits,
        }
    }

    pub fn is_dihedral(self) -> bool {
        !matches!(self, TheoremId::T2 | TheoremId::T3)
    }

    pub fn is_corollary(self) -> bool {
        matches!(self, TheoremId::C5 | TheoremId::C7)
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .into_iter()
            .find(|t| t.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::InvalidSpec(format!("unknown theorem id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseFamily {
    Units,
    Nonunits,
}

impl BaseFamily {
    pub fn residues(self, n: usize) -> Result<Vec<usize>> {
        match self {
            BaseFamily::Units => units(n),
            BaseFamily::Nonunits => nonunits(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    /// `ch = value`
    Equal,
    /// `ch <= value`
    AtMost,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Claim {
    pub kind: ClaimKind,
    pub value: usize,
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ClaimKind::Equal => write!(f, "ch = {}", self.value),
            ClaimKind::AtMost => write!(f, "ch <= {}", self.value),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct TheoremOptions {
    /// Extra rotation generators for the corollaries.
    pub s2: Vec<usize>,
    /// Skip the odd-order / two-prime-divisor checks.
    pub force: bool,
    /// Add the reflections `{r, r1}` to corollary graphs.
    pub with_reflections: bool,
}

#[derive(Clone, Debug)]
pub struct TheoremInstance {
    pub id: TheoremId,
    pub n: usize,
    /// Least prime dividing `n`.
    pub p: usize,
    pub base: BaseFamily,
    pub base_rotations: Vec<usize>,
    pub s2: Vec<usize>,
    pub spec: CayleySpec,
    pub graph: Graph,
    pub claim: Claim,
}

pub fn theorem_graph(id: TheoremId, n: usize, opts: &TheoremOptions) -> Result<TheoremInstance> {
    if n < 3 {
        return Err(Error::InvalidSpec(format!("theorem instances need n >= 3, got {n}")));
    }
    let primes = prime_divisors(n);
    if !opts.force {
        if n.is_multiple_of(2) {
            return Err(Error::Precondition(format!("n = {n} is even")));
        }
        if primes.len() > 2 {
            return Err(Error::Precondition(format!(
                "n = {n} has {} distinct prime divisors {primes:?}",
                primes.len()
            )));
        }
    }
    let p = primes[0];
    let base = id.base();
    let base_rotations = base.residues(n)?;

    let mut s2: Vec<usize> = opts.s2.clone();
    s2.sort_unstable();
    if id.is_corollary() {
        check_residue_set(n, &s2, "S2", false)?;
        check_inverse_closed(n, &s2, "S2")?;
        if let Some(j) = s2.iter().find(|j| base_rotations.contains(j)) {
            return Err(Error::InvalidSpec(format!(
                "S2 residue {j} already in the base generating set"
            )));
        }
    } else if !s2.is_empty() {
        return Err(Error::InvalidSpec(format!("{id} takes no S2 generators")));
    }
    let k = s2.len() / 2;

    let spec = match id {
        TheoremId::T2 | TheoremId::T3 => CayleySpec::Circulant(CirculantSpec::new(n, base_rotations.iter().copied())?),
        TheoremId::T4 | TheoremId::T6 => {
            CayleySpec::Dihedral(DihedralSpec::new(n, base_rotations.iter().copied(), [0, 1])?)
        }
        TheoremId::C5 | TheoremId::C7 => {
            let refl: &[usize] = if opts.with_reflections { &[0, 1] } else { &[] };
            CayleySpec::Dihedral(DihedralSpec::new(
                n,
                base_rotations.iter().chain(&s2).copied(),
                refl.iter().copied(),
            )?)
        }
    };
    let claim = match id {
        TheoremId::T2 => Claim {
            kind: ClaimKind::Equal,
            value: p,
        },
        TheoremId::T3 => Claim {
            kind: ClaimKind::Equal,
            value: n / p,
        },
        TheoremId::T4 => Claim {
            kind: ClaimKind::AtMost,
            value: p + 1,
        },
        TheoremId::C5 => Claim {
            kind: ClaimKind::AtMost,
            value: p + k,
        },
        TheoremId::T6 => Claim {
            kind: ClaimKind::AtMost,
            value: n / p + 1,
        },
        TheoremId::C7 => Claim {
            kind: ClaimKind::AtMost,
            value: n / p + k,
        },
    };
    let graph = spec.build()?;
    Ok(TheoremInstance {
        id,
        n,
        p,
        base,
        base_rotations,
        s2,
        spec,
        graph,
        claim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexSet;

    #[test]
    fn unit_sets() {
        assert_eq!(units(9).unwrap(), vec![1, 2, 4, 5, 7, 8]);
        assert_eq!(units(7).unwrap(), (1..7).collect::<Vec<_>>());
        assert_eq!(units(15).unwrap().len(), 8);
        assert!(units(1).is_err());
        assert_eq!(nonunits(9).unwrap(), vec![3, 6]);
        assert_eq!(prime_divisors(45), vec![3, 5]);
        assert_eq!(least_prime_divisor(49), Some(7));
    }

    #[test]
    fn circulant_examples() {
        assert_eq!(circulant_from(5, &[1, 4]).unwrap(), Graph::cycle(5).unwrap());
        let tri = circulant_from(9, &[3, 6]).unwrap();
        assert_eq!(tri.components().len(), 3);
        for n in [9, 15, 21] {
            let g = unitary(n).unwrap();
            let phi = units(n).unwrap().len();
            assert!((0..n).all(|v| g.degree(v) == phi));
        }
    }

    #[test]
    fn circulant_spec_errors_name_residue() {
        let err = CirculantSpec::new(9, [1, 2]).unwrap_err().to_string();
        assert!(err.contains("residue 1") || err.contains("residue 2"), "{err}");
        let err = CirculantSpec::new(9, [0]).unwrap_err().to_string();
        assert!(err.contains("identity"), "{err}");
        assert!(CirculantSpec::new(9, [9]).is_err());
    }

    #[test]
    fn rotation_is_automorphism() {
        for (n, conn) in [(9, units(9).unwrap()), (15, nonunits(15).unwrap()), (10, vec![2, 5, 8])] {
            let g = circulant_from(n, &conn).unwrap();
            let shift: Vec<usize> = (0..n).map(|v| (v + 1) % n).collect();
            assert_eq!(g.relabel(&shift).unwrap(), g);
        }
    }

    #[test]
    fn unitary_examples() {
        assert_eq!(unitary(7).unwrap(), Graph::complete(7).unwrap());
        let g = unitary(9).unwrap();
        assert_eq!(g.edge_count(), 27);
        assert!(g.is_clique([0, 1, 2].into_iter().collect()));
        assert!(unitary(2).is_err());
    }

    #[test]
    fn unitary_complement_examples() {
        for n in [9, 15, 21, 25] {
            assert_eq!(unitary_complement(n).unwrap(), unitary(n).unwrap().complement());
        }
        let g = unitary_complement(15).unwrap();
        assert!(g.is_clique([0, 3, 6, 9, 12].into_iter().collect()));
        let g9 = unitary_complement(9).unwrap();
        for a in 0..3 {
            assert!(g9.is_clique([a, a + 3, a + 6].into_iter().collect()));
        }
    }

    #[test]
    fn cycle_powers() {
        assert_eq!(power_of_cycle(7, 1).unwrap(), Graph::cycle(7).unwrap());
        assert_eq!(power_of_cycle(5, 2).unwrap(), Graph::complete(5).unwrap());
        assert_eq!(power_of_cycle(9, 2).unwrap(), circulant_from(9, &[1, 2, 7, 8]).unwrap());
        assert!(power_of_cycle(8, 4).is_err());
        assert!(power_of_cycle(8, 0).is_err());
    }

    #[test]
    fn dihedral_examples() {
        let m = dihedral_cayley(&DihedralSpec::new(7, [], [0]).unwrap()).unwrap();
        for a in 0..7 {
            assert_eq!(m.neighbors(a), VertexSet::singleton(7 + (7 - a) % 7));
        }
        let spec = DihedralSpec::new(9, units(9).unwrap(), [0, 1]).unwrap();
        let g = dihedral_cayley(&spec).unwrap();
        assert_eq!(g.n(), 18);
        assert!((0..18).all(|v| g.degree(v) == 8));
        assert_eq!(g.edge_count(), 72);

        // cross edges: 2-regular and bipartite between the sides
        let rot = VertexSet::full(9);
        let cross: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| rot.contains(u) != rot.contains(v))
            .collect();
        assert_eq!(cross.len(), 9 * 2);
        for v in 0..18 {
            assert_eq!(cross.iter().filter(|&&(a, b)| a == v || b == v).count(), 2);
        }

        // each side is the circulant on the rotation set
        let side = circulant_from(9, &units(9).unwrap()).unwrap();
        let (low, _) = g.induced(rot).unwrap();
        let (high, _) = g.induced(VertexSet(rot.0 << 9)).unwrap();
        assert_eq!(low, side);
        assert_eq!(high, side);
    }

    #[test]
    fn dihedral_spec_checks() {
        assert!(DihedralSpec::new(9, [1], []).is_err());
        assert!(DihedralSpec::new(9, [], [9]).is_err());
        assert!(DihedralSpec::new(33, [], []).is_err());
        assert!(DihedralSpec::new(9, [3, 6], [0, 4, 5]).is_ok());
    }

    #[test]
    fn spec_json() {
        let c = CayleySpec::Circulant(CirculantSpec::new(5, [1, 4]).unwrap());
        assert_eq!(
            serde_json::to_string(&c).unwrap(),
            r#"{"family":"circulant","n":5,"connection":[1,4]}"#
        );
        let d: CayleySpec =
            serde_json::from_str(r#"{"family":"dihedral","n":9,"rotations":[3,6],"reflections":[0,1]}"#).unwrap();
        assert_eq!(d.build().unwrap().n(), 18);
    }

    #[test]
    fn theorem_instances() {
        let opts = TheoremOptions::default();
        let t2 = theorem_graph(TheoremId::T2, 9, &opts).unwrap();
        assert_eq!(t2.graph, unitary(9).unwrap());
        assert_eq!(
            t2.claim,
            Claim {
                kind: ClaimKind::Equal,
                value: 3
            }
        );

        let t3 = theorem_graph(TheoremId::T3, 9, &opts).unwrap();
        assert_eq!(t3.graph, unitary_complement(9).unwrap());
        assert_eq!(
            t3.claim,
            Claim {
                kind: ClaimKind::Equal,
                value: 3
            }
        );

        let t4 = theorem_graph(TheoremId::T4, 9, &opts).unwrap();
        assert_eq!(t4.graph.n(), 18);
        assert_eq!(t4.graph.edge_count(), 72);
        assert_eq!(
            t4.claim,
            Claim {
                kind: ClaimKind::AtMost,
                value: 4
            }
        );

        let t6 = theorem_graph(TheoremId::T6, 15, &opts).unwrap();
        assert_eq!(t6.claim.value, 6);

        let c5 = theorem_graph(
            TheoremId::C5,
            9,
            &TheoremOptions {
                s2: vec![3, 6],
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(
            c5.claim,
            Claim {
                kind: ClaimKind::AtMost,
                value: 4
            }
        );
        assert_eq!(c5.graph.components().len(), 2);
        let c5r = theorem_graph(
            TheoremId::C5,
            9,
            &TheoremOptions {
                s2: vec![3, 6],
                with_reflections: true,
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(c5r.graph.components().len(), 1);

        let c7 = theorem_graph(
            TheoremId::C7,
            9,
            &TheoremOptions {
                s2: vec![1, 8, 2, 7],
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(
            c7.claim,
            Claim {
                kind: ClaimKind::AtMost,
                value: 5
            }
        );
    }

    #[test]
    fn theorem_preconditions() {
        let opts = TheoremOptions::default();
        assert!(matches!(
            theorem_graph(TheoremId::T2, 10, &opts),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            theorem_graph(TheoremId::T2, 105, &opts),
            Err(Error::Precondition(_))
        ));
        let forced = TheoremOptions {
            force: true,
            ..Default::default()
        };
        assert!(theorem_graph(TheoremId::T2, 10, &forced).is_ok());
        let bad_s2 = TheoremOptions {
            s2: vec![1, 8],
            ..Default::default()
        };
        assert!(theorem_graph(TheoremId::C5, 9, &bad_s2).is_err());
        let asym = TheoremOptions {
            s2: vec![3],
            ..Default::default()
        };
        assert!(theorem_graph(TheoremId::C5, 9, &asym).is_err());
        assert!(theorem_graph(
            TheoremId::T2,
            9,
            &TheoremOptions {
                s2: vec![3, 6],
                ..Default::default()
            }
        )
        .is_err());
        assert_eq!("t4".parse::<TheoremId>().unwrap(), TheoremId::T4);
    }
}
