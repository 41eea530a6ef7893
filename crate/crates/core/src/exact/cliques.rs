//! Bitset clique machinery for graphs on at most 64 vertices: exact maximum
//! clique via branch-and-bound with a greedy coloring bound, and maximal
//! clique enumeration via Bron-Kerbosch with pivoting.

/// Result of a budgeted exact search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Budgeted<T> {
    Exact(T),
    /// Budget ran out; the true answer lies in `[lower, upper]`.
    Inconclusive { lower: T, upper: T, nodes: u64 },
}

impl<T: Copy> Budgeted<T> {
    pub fn exact(&self) -> Option<T> {
        match self {
            Budgeted::Exact(v) => Some(*v),
            Budgeted::Inconclusive { .. } => None,
        }
    }

    pub fn lower(&self) -> T {
        match self {
            Budgeted::Exact(v) => *v,
            Budgeted::Inconclusive { lower, .. } => *lower,
        }
    }

    pub fn upper(&self) -> T {
        match self {
            Budgeted::Exact(v) => *v,
            Budgeted::Inconclusive { upper, .. } => *upper,
        }
    }
}

struct CliqueSearch<'a> {
    adj: &'a [u64],
    best: u32,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl CliqueSearch<'_> {
    /// Greedy coloring of the candidate set; returns vertices ordered by
    /// color class together with their color numbers (1-based). A vertex
    /// with color c cannot extend the current clique past `size + c`.
    fn color_sort(&self, candidates: u64) -> Vec<(u32, u32)> {
        let mut ordered = Vec::with_capacity(candidates.count_ones() as usize);
        let mut uncolored = candidates;
        let mut color = 0u32;
        while uncolored != 0 {
            color += 1;
            let mut available = uncolored;
            while available != 0 {
                let v = available.trailing_zeros();
                ordered.push((v, color));
                uncolored &= !(1 << v);
                available &= !(1 << v);
                available &= !self.adj[v as usize];
            }
        }
        ordered
    }

    fn expand(&mut self, size: u32, candidates: u64) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if candidates == 0 {
            self.best = self.best.max(size);
            return;
        }
        let ordered = self.color_sort(candidates);
        let mut remaining = candidates;
        for &(v, color) in ordered.iter().rev() {
            if self.exhausted {
                return;
            }
            if size + color <= self.best {
                return;
            }
            remaining &= !(1 << v);
            self.expand(size + 1, remaining & self.adj[v as usize]);
        }
    }
}

/// Exact maximum clique size of the bitset graph, within a node budget.
pub fn max_clique(adj: &[u64], budget: u64) -> Budgeted<u32> {
    let n = adj.len();
    if n == 0 {
        return Budgeted::Exact(0);
    }
    let mut search = CliqueSearch {
        adj,
        best: greedy_clique(adj),
        nodes: 0,
        budget,
        exhausted: false,
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.expand(0, all);
    if search.exhausted {
        // Greedy coloring of the whole graph upper-bounds the clique number.
        let upper = search.color_sort(all).iter().map(|&(_, c)| c).max().unwrap_or(0);
        Budgeted::Inconclusive {
            lower: search.best,
            upper,
            nodes: search.nodes,
        }
    } else {
        Budgeted::Exact(search.best)
    }
}

fn greedy_clique(adj: &[u64]) -> u32 {
    let n = adj.len();
    let mut best = 0u32;
    for start in 0..n {
        let mut clique = 1u32;
        let mut candidates = adj[start];
        while candidates != 0 {
            // Take the candidate with most neighbors among the candidates.
            let mut best_v = candidates.trailing_zeros();
            let mut best_deg = 0;
            let mut scan = candidates;
            while scan != 0 {
                let v = scan.trailing_zeros();
                let d = (adj[v as usize] & candidates).count_ones();
                if d > best_deg {
                    best_deg = d;
                    best_v = v;
                }
                scan &= scan - 1;
            }
            clique += 1;
            candidates &= adj[best_v as usize];
        }
        best = best.max(clique);
    }
    best
}

/// All maximal cliques, as bitmasks, via Bron-Kerbosch with a Tomita pivot.
/// Output is sorted so downstream consumers see a canonical order.
pub fn maximal_cliques(adj: &[u64]) -> Vec<u64> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut out = Vec::new();
    bron_kerbosch(adj, 0, all, 0, &mut out);
    out.sort_unstable();
    out
}

fn bron_kerbosch(adj: &[u64], r: u64, p: u64, x: u64, out: &mut Vec<u64>) {
    if p == 0 && x == 0 {
        out.push(r);
        return;
    }
    // Pivot on the vertex of P | X covering the most of P.
    let mut pivot = 0u32;
    let mut best_cover = u32::MAX;
    let mut scan = p | x;
    while scan != 0 {
        let u = scan.trailing_zeros();
        let uncovered = (p & !adj[u as usize]).count_ones();
        if best_cover == u32::MAX || uncovered < best_cover {
            best_cover = uncovered;
            pivot = u;
        }
        scan &= scan - 1;
    }
    let mut candidates = p & !adj[pivot as usize];
    let mut p = p;
    let mut x = x;
    while candidates != 0 {
        let v = candidates.trailing_zeros();
        let bit = 1u64 << v;
        bron_kerbosch(adj, r | bit, p & adj[v as usize], x & adj[v as usize], out);
        p &= !bit;
        x |= bit;
        candidates &= !bit;
    }
}
