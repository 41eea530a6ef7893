//! Exact combinatorial ground truth for small graphs: chromatic number,
//! clique and independence numbers, and the fractional chromatic number as
//! an exact rational via the independent-set covering LP.

pub mod cliques;
pub mod coloring;
pub mod simplex;

use num_rational::BigRational;
use num_traits::One;

pub use cliques::Budgeted;

use crate::error::{Error, Result};
use crate::graph::Graph;
use simplex::solve_set_packing;

/// Default node budget for the branch-and-bound oracles.
pub const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Vertex-count ceiling for the exact LP (maximal-independent-set
/// enumeration stays feasible up to here).
pub const LP_VERTEX_LIMIT: usize = 20;

/// Exact chromatic number within a node budget. Never guesses: budget
/// exhaustion yields `Inconclusive` with valid bounds.
pub fn chromatic_number(g: &Graph, budget: u64) -> Result<Budgeted<u32>> {
    let adj = g.adjacency_bitsets()?;
    Ok(coloring::chromatic_number(&adj, budget))
}

/// Exact clique number and independence number (the latter as the clique
/// number of the complement), each within the node budget.
pub fn clique_and_independence(g: &Graph, budget: u64) -> Result<(Budgeted<u32>, Budgeted<u32>)> {
    let adj = g.adjacency_bitsets()?;
    let co_adj = g.complement().adjacency_bitsets()?;
    Ok((
        cliques::max_clique(&adj, budget),
        cliques::max_clique(&co_adj, budget),
    ))
}

/// All maximal independent sets of `g`, as vertex bitmasks in canonical
/// (sorted) order. These are the maximal cliques of the complement.
pub fn maximal_independent_sets(g: &Graph) -> Result<Vec<u64>> {
    let co_adj = g.complement().adjacency_bitsets()?;
    Ok(cliques::maximal_cliques(&co_adj))
}

/// The exact fractional chromatic number together with both LP
/// certificates.
#[derive(Clone, Debug)]
pub struct FractionalChromatic {
    /// Optimal value of the covering LP, equal to the packing optimum.
    pub value: BigRational,
    /// The maximal independent sets indexing the cover.
    pub sets: Vec<u64>,
    /// Optimal fractional cover: weight per maximal independent set
    /// (nonzero entries only), summing to `value`.
    pub cover: Vec<(usize, BigRational)>,
    /// Optimal fractional clique: weight per vertex, also summing to
    /// `value`.
    pub clique: Vec<BigRational>,
}

/// Exact rational optimum of the LP covering every vertex by maximal
/// independent sets. Internally solves the dual packing LP (the slack basis
/// is feasible there), reads the cover off the dual values, and verifies
/// both certificates exactly before returning.
///
/// Restricting columns to maximal independent sets is valid: enlarging a
/// set in a cover never hurts.
pub fn fractional_chromatic_number(g: &Graph) -> Result<FractionalChromatic> {
    if g.n() > LP_VERTEX_LIMIT {
        return Err(Error::SizeLimit(format!(
            "fractional chromatic number is limited to n <= {LP_VERTEX_LIMIT}, got n={}",
            g.n()
        )));
    }
    let sets = maximal_independent_sets(g)?;
    let sol = solve_set_packing(&sets, g.n());

    // Exact certification. The packing solution is feasible by
    // construction of the simplex; check the covering side and equality of
    // objectives, which together certify optimality of both.
    let clique_total: BigRational = sol.primal.iter().cloned().sum();
    let cover_total: BigRational = sol.duals.iter().cloned().sum();
    if clique_total != sol.objective || cover_total != sol.objective {
        return Err(Error::Inconsistency(format!(
            "LP certificates disagree: primal {clique_total}, dual {cover_total}, objective {}",
            sol.objective
        )));
    }
    for v in 0..g.n() {
        let covered: BigRational = sets
            .iter()
            .zip(&sol.duals)
            .filter(|(&mask, _)| mask >> v & 1 == 1)
            .map(|(_, y)| y.clone())
            .sum();
        if covered < BigRational::one() {
            return Err(Error::Inconsistency(format!(
                "vertex {v} covered with total weight {covered} < 1"
            )));
        }
    }

    let cover = sol
        .duals
        .iter()
        .enumerate()
        .filter(|(_, y)| !num_traits::Zero::is_zero(*y))
        .map(|(i, y)| (i, y.clone()))
        .collect();
    Ok(FractionalChromatic {
        value: sol.objective,
        sets,
        cover,
        clique: sol.primal,
    })
}

/// Budgets actually applied when assembling [`ExactParams`].
#[derive(Clone, Copy, Debug)]
pub struct OracleLimits {
    pub node_budget: u64,
    pub lp_vertex_limit: usize,
}

/// Exact parameters of one graph, as far as the budgets allow.
#[derive(Clone, Debug)]
pub struct ExactParams {
    pub chi: Budgeted<u32>,
    pub omega: Budgeted<u32>,
    pub alpha: Budgeted<u32>,
    /// `None` when the graph exceeds the LP vertex limit.
    pub chi_f: Option<FractionalChromatic>,
    pub limits: OracleLimits,
}

impl ExactParams {
    pub fn all_exact(&self) -> bool {
        self.chi.exact().is_some() && self.omega.exact().is_some() && self.alpha.exact().is_some()
    }
}

/// Runs every oracle that fits the graph.
pub fn exact_params(g: &Graph, budget: u64) -> Result<ExactParams> {
    let chi = chromatic_number(g, budget)?;
    let (omega, alpha) = clique_and_independence(g, budget)?;
    let chi_f = if g.n() <= LP_VERTEX_LIMIT {
        Some(fractional_chromatic_number(g)?)
    } else {
        None
    };
    Ok(ExactParams {
        chi,
        omega,
        alpha,
        chi_f,
        limits: OracleLimits {
            node_budget: budget,
            lp_vertex_limit: LP_VERTEX_LIMIT,
        },
    })
}

/// Formats a rational as `p/q`, dropping the `/q` for integers.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom() == &num_bigint::BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Precondition(format!("cannot parse rational {s:?}"));
    match s.split_once('/') {
        None => {
            let p: i128 = s.trim().parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p.into()))
        }
        Some((p, q)) => {
            let p: i128 = p.trim().parse().map_err(|_| bad())?;
            let q: i128 = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(BigRational::new(p.into(), q.into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use simplex::big_ratio;

    fn gen(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn pentagon_parameters() {
        let c5 = gen("cycle:5");
        assert_eq!(chromatic_number(&c5, 1 << 22).unwrap(), Budgeted::Exact(3));
        let (omega, alpha) = clique_and_independence(&c5, 1 << 22).unwrap();
        assert_eq!(omega, Budgeted::Exact(2));
        assert_eq!(alpha, Budgeted::Exact(2));
        let chi_f = fractional_chromatic_number(&c5).unwrap();
        assert_eq!(chi_f.value, big_ratio(5, 2));
    }

    #[test]
    fn complete_graph_parameters() {
        let k5 = Graph::complete(5).unwrap();
        let (omega, alpha) = clique_and_independence(&k5, 1 << 22).unwrap();
        assert_eq!(omega, Budgeted::Exact(5));
        assert_eq!(alpha, Budgeted::Exact(1));
        assert_eq!(fractional_chromatic_number(&k5).unwrap().value, big_ratio(5, 1));
    }

    #[test]
    fn kneser_5_2_parameters() {
        let petersen = gen("kneser:5,2");
        assert_eq!(chromatic_number(&petersen, 1 << 22).unwrap(), Budgeted::Exact(3));
        assert_eq!(
            fractional_chromatic_number(&petersen).unwrap().value,
            big_ratio(5, 2)
        );
    }

    #[test]
    fn omega4_chromatic_number_is_four() {
        let g = gen("orthogonality:4");
        assert_eq!(chromatic_number(&g, 1 << 24).unwrap(), Budgeted::Exact(4));
    }

    #[test]
    fn clebsch_alpha_and_chi_f() {
        let clebsch = gen("folded-cube:5");
        let (_, alpha) = clique_and_independence(&clebsch, 1 << 24).unwrap();
        assert_eq!(alpha, Budgeted::Exact(5));
        assert_eq!(
            fractional_chromatic_number(&clebsch).unwrap().value,
            big_ratio(16, 5)
        );
    }

    #[test]
    fn andrasfai_3_chi_f() {
        assert_eq!(
            fractional_chromatic_number(&gen("andrasfai:3")).unwrap().value,
            big_ratio(8, 3)
        );
    }

    #[test]
    fn disjunctive_product_chi_f_is_multiplicative() {
        let c5 = gen("cycle:5");
        let k3 = Graph::complete(3).unwrap();
        let product = c5.disjunctive_product(&k3);
        assert_eq!(product.n(), 15);
        assert_eq!(
            fractional_chromatic_number(&product).unwrap().value,
            big_ratio(15, 2)
        );
    }

    #[test]
    fn lp_refuses_oversized_graphs() {
        let g = gen("folded-cube:6"); // 32 vertices
        assert!(matches!(
            fractional_chromatic_number(&g),
            Err(Error::SizeLimit(_))
        ));
    }

    #[test]
    fn vertex_transitive_chi_f_equals_n_over_alpha() {
        for spec in ["cycle:5", "cycle:7", "kneser:5,2", "andrasfai:4", "folded-cube:5", "orthogonality:4"] {
            let g = gen(spec);
            let chi_f = fractional_chromatic_number(&g).unwrap().value;
            let (_, alpha) = clique_and_independence(&g, 1 << 24).unwrap();
            let expected = big_ratio(g.n() as i64, alpha.exact().unwrap() as i64);
            assert_eq!(chi_f, expected, "{spec}");
        }
    }

    #[test]
    fn sandwich_omega_le_chi_f_le_chi() {
        for spec in ["cycle:5", "cycle:9", "kneser:5,2", "andrasfai:3", "path:6", "complete:4"] {
            let g = gen(spec);
            let p = exact_params(&g, 1 << 24).unwrap();
            let chi_f = p.chi_f.as_ref().unwrap().value.clone();
            let omega = big_ratio(p.omega.exact().unwrap() as i64, 1);
            let chi = big_ratio(p.chi.exact().unwrap() as i64, 1);
            assert!(omega <= chi_f, "{spec}");
            assert!(chi_f <= chi, "{spec}");
        }
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&big_ratio(16, 5)), "16/5");
        assert_eq!(rational_string(&big_ratio(4, 1)), "4");
        assert_eq!(parse_rational("16/5").unwrap(), big_ratio(16, 5));
        assert_eq!(parse_rational("4").unwrap(), big_ratio(4, 1));
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1/0").is_err());
    }
}
