//! Dense tableau simplex in exact rational arithmetic with Bland's
//! anticycling rule, specialized to the set-packing LP
//!
//!   maximize sum x_v  subject to  sum_{v in S} x_v <= 1 for each set S,
//!   x >= 0.
//!
//! The slack basis is feasible (right-hand sides are 1), so no phase-1 is
//! needed. At optimality the objective-row coefficients of the slack
//! columns are the exact dual values of the constraints.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Clone, Debug)]
pub struct PackingSolution {
    /// Optimal objective value.
    pub objective: BigRational,
    /// Optimal primal values, one per variable.
    pub primal: Vec<BigRational>,
    /// Optimal dual values, one per constraint row.
    pub duals: Vec<BigRational>,
}

/// Solves the packing LP over constraint rows given as vertex bitmasks.
/// Deterministic; entries stay exact throughout.
pub fn solve_set_packing(constraints: &[u64], nvars: usize) -> PackingSolution {
    let m = constraints.len();
    let width = nvars + m + 1; // variables, slacks, rhs
    let rhs = width - 1;

    // Row 0 is the objective row holding z_j - c_j; rows 1..=m are
    // constraints with their slack identity columns.
    let mut tableau: Vec<Vec<BigRational>> = Vec::with_capacity(m + 1);
    let mut row0 = vec![BigRational::zero(); width];
    for entry in row0.iter_mut().take(nvars) {
        *entry = -BigRational::one();
    }
    tableau.push(row0);
    for (i, &mask) in constraints.iter().enumerate() {
        let mut row = vec![BigRational::zero(); width];
        for v in 0..nvars {
            if mask >> v & 1 == 1 {
                row[v] = BigRational::one();
            }
        }
        row[nvars + i] = BigRational::one();
        row[rhs] = BigRational::one();
        tableau.push(row);
    }
    let mut basis: Vec<usize> = (nvars..nvars + m).collect();

    loop {
        // Bland: entering column is the lowest-index negative reduced cost.
        let Some(entering) = (0..nvars + m).find(|&j| tableau[0][j].is_negative()) else {
            break;
        };
        // Ratio test; ties broken by the smallest basis variable index.
        let mut leaving: Option<(usize, BigRational)> = None;
        for i in 1..=m {
            if !tableau[i][entering].is_positive() {
                continue;
            }
            let ratio = &tableau[i][rhs] / &tableau[i][entering];
            let better = match &leaving {
                None => true,
                Some((row, best)) => {
                    ratio < *best || (ratio == *best && basis[i - 1] < basis[row - 1])
                }
            };
            if better {
                leaving = Some((i, ratio));
            }
        }
        let (pivot_row, _) = leaving.expect("packing LP is bounded: x <= 1 componentwise");

        // Pivot.
        let pivot = tableau[pivot_row][entering].clone();
        for entry in tableau[pivot_row].iter_mut() {
            *entry /= &pivot;
        }
        for i in 0..=m {
            if i == pivot_row || tableau[i][entering].is_zero() {
                continue;
            }
            let factor = tableau[i][entering].clone();
            for j in 0..width {
                let delta = &factor * &tableau[pivot_row][j];
                tableau[i][j] -= delta;
            }
        }
        basis[pivot_row - 1] = entering;
    }

    let objective = tableau[0][rhs].clone();
    let mut primal = vec![BigRational::zero(); nvars];
    for (i, &var) in basis.iter().enumerate() {
        if var < nvars {
            primal[var] = tableau[i + 1][rhs].clone();
        }
    }
    let duals: Vec<BigRational> = (0..m).map(|i| tableau[0][nvars + i].clone()).collect();

    PackingSolution {
        objective,
        primal,
        duals,
    }
}

/// Convenience for tests and callers: an exact rational from integers.
pub fn big_ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_constraint_packs_one_unit() {
        // max x0 + x1 st x0 + x1 <= 1.
        let sol = solve_set_packing(&[0b11], 2);
        assert_eq!(sol.objective, big_ratio(1, 1));
        assert_eq!(sol.duals, vec![big_ratio(1, 1)]);
    }

    #[test]
    fn pentagon_packing_value_is_five_halves() {
        // Constraints are the five maximal independent sets of C5; the
        // optimum puts 1/2 on every vertex.
        let sets = [0b00101u64, 0b01010, 0b10100, 0b01001, 0b10010];
        let sol = solve_set_packing(&sets, 5);
        assert_eq!(sol.objective, big_ratio(5, 2));
        let dual_total: BigRational = sol.duals.iter().sum();
        assert_eq!(dual_total, big_ratio(5, 2));
    }

    #[test]
    fn disjoint_sets_pack_independently() {
        // Two disjoint constraints: optimum 2.
        let sol = solve_set_packing(&[0b0011, 0b1100], 4);
        assert_eq!(sol.objective, big_ratio(2, 1));
    }

    #[test]
    fn duals_certify_the_objective_exactly() {
        let sets = [0b0111u64, 0b1011, 0b1101, 0b1110];
        let sol = solve_set_packing(&sets, 4);
        let dual_total: BigRational = sol.duals.iter().sum();
        assert_eq!(dual_total, sol.objective);
        // Dual feasibility for the covering problem: every vertex covered
        // with total weight >= 1.
        for v in 0..4 {
            let cover: BigRational = sets
                .iter()
                .zip(&sol.duals)
                .filter(|(&mask, _)| mask >> v & 1 == 1)
                .map(|(_, y)| y.clone())
                .sum();
            assert!(cover >= BigRational::one());
        }
    }
}
