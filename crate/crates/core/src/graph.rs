//! Undirected simple graphs on vertex set `0..n`.

use crate::error::{Error, Result};

/// An undirected simple graph. Immutable after construction.
///
/// Edges are stored canonically as `(v, w)` with `v < w`, sorted and
/// deduplicated, so two graphs compare equal iff they have the same vertex
/// count and edge set. The optional label does not participate in equality.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    name: Option<String>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph on `n >= 1` vertices. Loops and out-of-range endpoints
    /// are rejected; duplicate edges (in either orientation) collapse to one.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGraph("vertex count must be positive".into()));
        }
        let mut canon: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidGraph(format!("loop at vertex {a}")));
            }
            let (v, w) = if a < b { (a, b) } else { (b, a) };
            if w as usize >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge ({a},{b}) out of range for n={n}"
                )));
            }
            canon.push((v, w));
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Graph {
            n,
            edges: canon,
            name: None,
        })
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, std::iter::empty())
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Result<Self> {
        let mut edges = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for v in 0..n as u32 {
            for w in (v + 1)..n as u32 {
                edges.push((v, w));
            }
        }
        Self::new(n, edges)
    }

    /// Attaches a display label.
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        if a == b {
            return false;
        }
        let key = if a < b { (a, b) } else { (b, a) };
        self.edges.binary_search(&key).is_ok()
    }

    pub fn degree(&self, v: u32) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0usize; self.n];
        for &(a, b) in &self.edges {
            deg[a as usize] += 1;
            deg[b as usize] += 1;
        }
        deg
    }

    pub fn neighbors(&self, v: u32) -> Vec<u32> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out.sort_unstable();
        out
    }

    /// `Some(k)` if every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let deg = self.degrees();
        let k = deg.first().copied()?;
        deg.iter().all(|&d| d == k).then_some(k)
    }

    /// Neighbor bitsets, one `u64` mask per vertex. Only for `n <= 64`.
    pub fn adjacency_bitsets(&self) -> Result<Vec<u64>> {
        if self.n > 64 {
            return Err(Error::SizeLimit(format!(
                "bitset adjacency needs n <= 64, got n={}",
                self.n
            )));
        }
        let mut adj = vec![0u64; self.n];
        for &(a, b) in &self.edges {
            adj[a as usize] |= 1 << b;
            adj[b as usize] |= 1 << a;
        }
        Ok(adj)
    }

    /// The complement graph: edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for v in 0..self.n as u32 {
            for w in (v + 1)..self.n as u32 {
                if !self.has_edge(v, w) {
                    edges.push((v, w));
                }
            }
        }
        let g = Graph::new(self.n, edges).expect("complement of a valid graph is valid");
        match &self.name {
            Some(name) => g.with_name(format!("complement({name})")),
            None => g,
        }
    }

    /// Disjunctive product: vertex set `V(self) x V(other)`, with `(a,b)`
    /// adjacent to `(a',b')` iff `a ~ a'` in `self` or `b ~ b'` in `other`.
    /// Vertex `(a, b)` gets index `a * other.n() + b`.
    pub fn disjunctive_product(&self, other: &Graph) -> Graph {
        let nh = other.n as u32;
        let n = self.n * other.n;
        let mut edges = Vec::new();
        for a in 0..self.n as u32 {
            for b in 0..nh {
                for a2 in a..self.n as u32 {
                    let b2_start = if a2 == a { b + 1 } else { 0 };
                    for b2 in b2_start..nh {
                        if self.has_edge(a, a2) || other.has_edge(b, b2) {
                            edges.push((a * nh + b, a2 * nh + b2));
                        }
                    }
                }
            }
        }
        let g = Graph::new(n, edges).expect("product of valid graphs is valid");
        match (&self.name, &other.name) {
            (Some(x), Some(y)) => g.with_name(format!("{x} * {y}")),
            _ => g,
        }
    }

    /// `true` if the graph is connected (single-vertex graphs count).
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0u32];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w as usize] {
                    seen[w as usize] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert!(Graph::new(3, [(0, 0)]).is_err());
        assert!(Graph::new(3, [(0, 3)]).is_err());
        assert!(Graph::new(0, []).is_err());
    }

    #[test]
    fn dedups_and_canonicalizes() {
        let g = Graph::new(3, [(1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
        assert_eq!(g.m(), 2);
    }

    #[test]
    fn complement_of_complete_is_empty() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(k5.complement(), Graph::empty(5).unwrap());
        assert_eq!(Graph::empty(3).unwrap().complement(), Graph::complete(3).unwrap());
    }

    #[test]
    fn complement_is_involutive() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn pentagon_is_self_complementary() {
        // C5 has 5 vertices of degree 2; its complement is again a 5-cycle.
        let c5 = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap();
        let cc = c5.complement();
        assert_eq!(cc.m(), 5);
        assert_eq!(cc.regularity(), Some(2));
        assert!(cc.is_connected());
    }

    #[test]
    fn disjunctive_product_k2_k2_is_k4() {
        let k2 = Graph::complete(2).unwrap();
        let p = k2.disjunctive_product(&k2);
        assert_eq!(p, Graph::complete(4).unwrap());
    }

    #[test]
    fn disjunctive_product_identity_element() {
        let g = Graph::new(4, [(0, 1), (2, 3), (1, 2)]).unwrap();
        let k1 = Graph::complete(1).unwrap();
        let p = g.disjunctive_product(&k1);
        assert_eq!(p, g);
    }
}
