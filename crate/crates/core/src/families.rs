//! Generators for the graph families used throughout the crate.
//!
//! Vertex orderings are canonical so that spectra and reports reproduce
//! byte-for-byte:
//! - cycle/path/complete: vertices `0..n` in the obvious order;
//! - complete-bipartite(p,q): left part `0..p`, right part `p..p+q`;
//! - kneser(p,k): k-subsets of `{0..p-1}` in colex order (equivalently,
//!   ascending order of the subset's characteristic bitmask);
//! - andrasfai(k): circulant on `Z_{3k-1}`, `i ~ j` iff `(j-i) mod (3k-1)`
//!   is congruent to 1 mod 3;
//! - folded-cube(d): binary strings of length `d-1` in counting order,
//!   adjacent iff Hamming distance 1 or d-1;
//! - orthogonality(n): +/-1 vectors of length n, vertex `i` maps bit `j`
//!   of `i` to sign `(-1)^bit`, adjacent iff the dot product is zero.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hard cap on generated vertex counts; dense spectral work does not scale
/// past a few hundred vertices anyway.
const MAX_GENERATED_N: usize = 10_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Cycle,
    Complete,
    CompleteBipartite,
    Kneser,
    Andrasfai,
    FoldedCube,
    Orthogonality,
    Path,
}

impl Family {
    pub fn name(&self) -> &'static str {
        match self {
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete-bipartite",
            Family::Kneser => "kneser",
            Family::Andrasfai => "andrasfai",
            Family::FoldedCube => "folded-cube",
            Family::Orthogonality => "orthogonality",
            Family::Path => "path",
        }
    }

    fn arity(&self) -> usize {
        match self {
            Family::CompleteBipartite | Family::Kneser => 2,
            _ => 1,
        }
    }
}

/// A family name plus its integer parameters, e.g. `kneser:5,2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilySpec {
    family: Family,
    params: Vec<u32>,
}

impl FamilySpec {
    pub fn new(family: Family, params: Vec<u32>) -> Result<Self> {
        if params.len() != family.arity() {
            return Err(Error::InvalidFamily(format!(
                "{} takes {} parameter(s), got {}",
                family.name(),
                family.arity(),
                params.len()
            )));
        }
        if params.iter().any(|&p| p == 0) {
            return Err(Error::InvalidFamily(format!(
                "{} parameters must be positive",
                family.name()
            )));
        }
        let spec = FamilySpec { family, params };
        spec.validate()?;
        Ok(spec)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn params(&self) -> &[u32] {
        &self.params
    }

    fn validate(&self) -> Result<()> {
        let p = &self.params;
        let fail = |msg: String| Err(Error::InvalidFamily(msg));
        match self.family {
            Family::Cycle if p[0] < 3 => fail(format!("cycle needs n >= 3, got {}", p[0])),
            Family::Kneser if p[0] < 2 * p[1] => {
                fail(format!("kneser({},{}) needs p >= 2k", p[0], p[1]))
            }
            Family::FoldedCube if p[0] < 2 => fail(format!("folded-cube needs d >= 2, got {}", p[0])),
            _ => Ok(()),
        }
    }

    /// Conventional mathematical name of the generated graph.
    pub fn graph_name(&self) -> String {
        let p = &self.params;
        match self.family {
            Family::Cycle => format!("C{}", p[0]),
            Family::Complete => format!("K{}", p[0]),
            Family::CompleteBipartite => format!("K{},{}", p[0], p[1]),
            Family::Kneser => format!("Kneser({},{})", p[0], p[1]),
            Family::Andrasfai => format!("Andrasfai({})", p[0]),
            Family::FoldedCube => format!("FoldedCube({})", p[0]),
            Family::Orthogonality => format!("Omega({})", p[0]),
            Family::Path => format!("P{}", p[0]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        write!(f, "{}:{}", self.family.name(), params.join(","))
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Parses the `name:p1,p2` mini-grammar, e.g. `"kneser:5,2"`.
    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| Error::InvalidFamily(format!("expected name:params, got {s:?}")))?;
        let family = match name.trim() {
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "complete-bipartite" => Family::CompleteBipartite,
            "kneser" => Family::Kneser,
            "andrasfai" => Family::Andrasfai,
            "folded-cube" => Family::FoldedCube,
            "orthogonality" => Family::Orthogonality,
            "path" => Family::Path,
            other => return Err(Error::InvalidFamily(format!("unknown family {other:?}"))),
        };
        let params: Vec<u32> = rest
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidFamily(format!("bad parameter {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        FamilySpec::new(family, params)
    }
}

/// Generates the graph described by `spec`, labelled with its conventional
/// name.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    let p = spec.params();
    let g = match spec.family() {
        Family::Cycle => cycle(p[0] as usize)?,
        Family::Complete => Graph::complete(p[0] as usize)?,
        Family::CompleteBipartite => complete_bipartite(p[0] as usize, p[1] as usize)?,
        Family::Kneser => kneser(p[0], p[1])?,
        Family::Andrasfai => andrasfai(p[0] as usize)?,
        Family::FoldedCube => folded_cube(p[0] as usize)?,
        Family::Orthogonality => orthogonality(p[0] as usize)?,
        Family::Path => path(p[0] as usize)?,
    };
    Ok(g.with_name(spec.graph_name()))
}

fn check_size(n: usize) -> Result<usize> {
    if n > MAX_GENERATED_N {
        return Err(Error::SizeLimit(format!(
            "generated graph would have {n} vertices (limit {MAX_GENERATED_N})"
        )));
    }
    Ok(n)
}

fn cycle(n: usize) -> Result<Graph> {
    Graph::new(n, (0..n as u32).map(|v| (v, (v + 1) % n as u32)))
}

fn path(n: usize) -> Result<Graph> {
    Graph::new(n, (1..n as u32).map(|v| (v - 1, v)))
}

fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    check_size(p + q)?;
    let mut edges = Vec::with_capacity(p * q);
    for v in 0..p as u32 {
        for w in 0..q as u32 {
            edges.push((v, p as u32 + w));
        }
    }
    Graph::new(p + q, edges)
}

fn kneser(p: u32, k: u32) -> Result<Graph> {
    if p > 24 {
        return Err(Error::SizeLimit(format!("kneser ground set {p} too large")));
    }
    // Colex order of k-subsets == ascending numeric order of their bitmasks.
    let masks: Vec<u32> = (0u32..1 << p).filter(|m| m.count_ones() == k).collect();
    check_size(masks.len())?;
    let mut edges = Vec::new();
    for (i, &a) in masks.iter().enumerate() {
        for (j, &b) in masks.iter().enumerate().skip(i + 1) {
            if a & b == 0 {
                edges.push((i as u32, j as u32));
            }
        }
    }
    Graph::new(masks.len(), edges)
}

fn andrasfai(k: usize) -> Result<Graph> {
    let n = check_size(3 * k - 1)?;
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            if (j - i) % 3 == 1 || (n as u32 - (j - i)) % 3 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

fn folded_cube(d: usize) -> Result<Graph> {
    if d > 14 {
        return Err(Error::SizeLimit(format!("folded-cube dimension {d} too large")));
    }
    let bits = d - 1;
    let n = check_size(1usize << bits)?;
    let full: u32 = if bits == 32 { u32::MAX } else { (1 << bits) - 1 };
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            let dist = (i ^ j).count_ones() as usize;
            if dist == 1 || i ^ j == full {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

fn orthogonality(nbits: usize) -> Result<Graph> {
    if nbits > 13 {
        return Err(Error::SizeLimit(format!("orthogonality length {nbits} too large")));
    }
    let n = check_size(1usize << nbits)?;
    let mut edges = Vec::new();
    for i in 0..n as u32 {
        for j in (i + 1)..n as u32 {
            // dot = nbits - 2 * hamming(i ^ j)
            if 2 * (i ^ j).count_ones() as usize == nbits {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn andrasfai_2_is_the_pentagon() {
        // Circulant on Z5 with connection set {1,4} is exactly C5.
        assert_eq!(gen("andrasfai:2"), gen("cycle:5"));
    }

    #[test]
    fn andrasfai_is_k_regular_on_3k_minus_1() {
        for k in 1..=6usize {
            let g = gen(&format!("andrasfai:{k}"));
            assert_eq!(g.n(), 3 * k - 1);
            assert_eq!(g.regularity(), Some(k), "And({k}) must be {k}-regular");
        }
    }

    #[test]
    fn orthogonality_4_counts() {
        let g = gen("orthogonality:4");
        assert_eq!(g.n(), 16);
        assert_eq!(g.regularity(), Some(6));
        assert_eq!(g.m(), 48);
    }

    #[test]
    fn folded_cube_5_is_clebsch_sized() {
        let g = gen("folded-cube:5");
        assert_eq!(g.n(), 16);
        assert_eq!(g.regularity(), Some(5));
    }

    #[test]
    fn kneser_5_2_looks_like_petersen() {
        let g = gen("kneser:5,2");
        assert_eq!(g.n(), 10);
        assert_eq!(g.regularity(), Some(3));
    }

    #[test]
    fn kneser_vertex_order_is_colex() {
        // First three 2-subsets of [5] in colex: {0,1}, {0,2}, {1,2}.
        // {0,1} and {2,3} are disjoint; {0,1} is vertex 0, {2,3} is vertex 5.
        let g = gen("kneser:5,2");
        assert!(g.has_edge(0, 5));
        assert!(!g.has_edge(0, 1));
    }

    #[test]
    fn spec_grammar_round_trips() {
        for s in ["cycle:5", "kneser:5,2", "complete-bipartite:3,3", "folded-cube:7"] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
    }

    #[test]
    fn invalid_specs_are_rejected() {
        assert!("kneser:3,2".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert!("cycle:5,3".parse::<FamilySpec>().is_err());
        assert!("folded-cube:1".parse::<FamilySpec>().is_err());
        assert!("frobnicate:3".parse::<FamilySpec>().is_err());
        assert!("cycle".parse::<FamilySpec>().is_err());
    }
}
