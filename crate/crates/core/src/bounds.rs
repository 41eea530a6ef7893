//! Closed-form spectral lower bounds for chromatic-type parameters, the
//! diagonal-shift bound family that interpolates between them, and local
//! maximization of the weighted Hoffman bound.
//!
//! Targets differ by bound and the distinction is preserved everywhere:
//! the Hoffman / Lima / Kolotilina values lower-bound the vectorial
//! chromatic number (hence the orthogonal rank), the inertial bound
//! lower-bounds the orthogonal rank, and the weaker inertial bound
//! lower-bounds the projective rank.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{
    build_matrix, eigendecompose, spectrum, EdgeWeights, HermitianMatrix, MatrixKind, Spectrum,
};

/// A bound value plus a flag marking the degenerate edgeless convention
/// (value 1, no spectral content).
#[derive(Clone, Debug, PartialEq)]
pub struct Bound<T> {
    pub value: T,
    pub degenerate: bool,
}

impl<T> Bound<T> {
    fn exact(value: T) -> Self {
        Bound {
            value,
            degenerate: false,
        }
    }

    fn degenerate(value: T) -> Self {
        Bound {
            value,
            degenerate: true,
        }
    }
}

/// What parameter a bound certifies a lower bound for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundTarget {
    /// Vectorial chromatic number; implies a bound on the orthogonal rank.
    ChiVect,
    /// Orthogonal rank.
    Xi,
    /// Projective rank.
    XiF,
}

impl BoundTarget {
    pub fn label(&self) -> &'static str {
        match self {
            BoundTarget::ChiVect => "chi_vect<=xi",
            BoundTarget::Xi => "xi",
            BoundTarget::XiF => "xi_f",
        }
    }
}

fn require_kind(s: &Spectrum, want: &str, op: &str) -> Result<()> {
    if s.kind.label() != want {
        return Err(Error::Precondition(format!(
            "{op} needs a {want} spectrum, got {}",
            s.kind.label()
        )));
    }
    Ok(())
}

/// Hoffman: `1 + mu_1 / |mu_n|` on the adjacency spectrum.
pub fn hoffman_bound(s: &Spectrum) -> Result<Bound<f64>> {
    require_kind(s, "adjacency", "hoffman_bound")?;
    let mu_n = s.min();
    if mu_n >= 0.0 {
        // Edgeless: all eigenvalues are zero.
        return Ok(Bound::degenerate(1.0));
    }
    Ok(Bound::exact(1.0 + s.max() / mu_n.abs()))
}

/// Lima: `1 + 2m / (2m - n * delta_n)` with `delta_n` the least
/// signless-Laplacian eigenvalue.
pub fn lima_bound(g: &Graph, s_signless: &Spectrum) -> Result<Bound<f64>> {
    require_kind(s_signless, "signless-laplacian", "lima_bound")?;
    let m2 = 2.0 * g.m() as f64;
    if g.m() == 0 {
        return Ok(Bound::degenerate(1.0));
    }
    let denom = m2 - g.n() as f64 * s_signless.min();
    if denom <= 0.0 {
        return Err(Error::BoundUndefined(format!(
            "lima denominator 2m - n*delta_n = {denom:.6e} is nonpositive"
        )));
    }
    Ok(Bound::exact(1.0 + m2 / denom))
}

/// Kolotilina: `1 + mu_1 / (mu_1 - delta_1 + theta_1)` with `delta_1` the
/// largest signless-Laplacian and `theta_1` the largest Laplacian
/// eigenvalue.
pub fn kolotilina_bound(
    s_adj: &Spectrum,
    s_laplacian: &Spectrum,
    s_signless: &Spectrum,
) -> Result<Bound<f64>> {
    require_kind(s_adj, "adjacency", "kolotilina_bound")?;
    require_kind(s_laplacian, "laplacian", "kolotilina_bound")?;
    require_kind(s_signless, "signless-laplacian", "kolotilina_bound")?;
    let mu1 = s_adj.max();
    if mu1 <= 0.0 {
        return Ok(Bound::degenerate(1.0));
    }
    let denom = mu1 - s_signless.max() + s_laplacian.max();
    if denom <= 0.0 {
        return Err(Error::BoundUndefined(format!(
            "kolotilina denominator mu_1 - delta_1 + theta_1 = {denom:.6e} is nonpositive"
        )));
    }
    Ok(Bound::exact(1.0 + mu1 / denom))
}

/// The diagonal-shift bound family:
/// `1 + max_eig(A) / (max_eig(A) - max_eig(E+A) + max_eig(E-A))` for a real
/// diagonal `E`. `E = 0` reproduces Hoffman; `E = D` reproduces Kolotilina.
pub fn generalized_bound(g: &Graph, e_diagonal: &[f64]) -> Result<f64> {
    if e_diagonal.len() != g.n() {
        return Err(Error::Precondition(format!(
            "diagonal has {} entries for n={}",
            e_diagonal.len(),
            g.n()
        )));
    }
    let a = match build_matrix(g, &MatrixKind::Adjacency)? {
        HermitianMatrix::Real(a) => a,
        HermitianMatrix::Complex(_) => unreachable!("adjacency is real"),
    };
    let lambda = |m: DMatrix<f64>| -> Result<f64> {
        let eig = eigendecompose(&HermitianMatrix::Real(m))?;
        Ok(eig.eigenvalues[0])
    };
    let mut e_plus = a.clone();
    let mut e_minus = -a.clone();
    for (i, &e) in e_diagonal.iter().enumerate() {
        e_plus[(i, i)] += e;
        e_minus[(i, i)] += e;
    }
    let mu1 = lambda(a)?;
    if mu1 <= 0.0 {
        return Ok(1.0);
    }
    let denom = mu1 - lambda(e_plus)? + lambda(e_minus)?;
    if denom <= 0.0 {
        return Err(Error::BoundUndefined(format!(
            "generalized bound denominator {denom:.6e} is nonpositive for this E"
        )));
    }
    Ok(1.0 + mu1 / denom)
}

fn ratio(num: usize, den: usize) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Inertial lower bound for the orthogonal rank:
/// `1 + max(n+/n-, n-/n+)`, exact because inertia counts are integers.
pub fn inertial_bound(s: &Spectrum) -> Result<Bound<BigRational>> {
    require_kind(s, "adjacency", "inertial_bound")?;
    let i = s.inertia;
    if i.positive == 0 || i.negative == 0 {
        return Ok(Bound::degenerate(BigRational::one()));
    }
    let r = std::cmp::max(ratio(i.positive, i.negative), ratio(i.negative, i.positive));
    Ok(Bound::exact(r + BigRational::one()))
}

/// Inertial lower bound for the projective rank:
/// `1 + max(n+/(n- + n0), n-/(n+ + n0))`. Coincides with `inertial_bound`
/// on non-singular graphs.
pub fn weaker_inertial_bound(s: &Spectrum) -> Result<Bound<BigRational>> {
    require_kind(s, "adjacency", "weaker_inertial_bound")?;
    let i = s.inertia;
    if i.positive == 0 || i.negative == 0 {
        // Only edgeless graphs lack an eigenvalue of each sign; both
        // denominators below are then guaranteed positive.
        return Ok(Bound::degenerate(BigRational::one()));
    }
    let r = std::cmp::max(
        ratio(i.positive, i.negative + i.zero),
        ratio(i.negative, i.positive + i.zero),
    );
    Ok(Bound::exact(r + BigRational::one()))
}

/// Evaluates the weighted Hoffman objective `1 + mu_1(WoA) / |mu_n(WoA)|`
/// for a concrete Hermitian weighting.
pub fn evaluate_weighted_hoffman(g: &Graph, weights: &EdgeWeights) -> Result<Bound<f64>> {
    let m = build_matrix(g, &MatrixKind::WeightedAdjacency(weights.clone()))?;
    let eig = eigendecompose(&m)?;
    let mu1 = eig.eigenvalues[0];
    let mun = *eig.eigenvalues.last().expect("nonempty spectrum");
    if mun >= 0.0 {
        // Only possible when W o A is the zero matrix.
        return Ok(Bound::degenerate(1.0));
    }
    Ok(Bound::exact(1.0 + mu1 / mun.abs()))
}

/// Whether the weighted-Hoffman search explores real weights only or also
/// complex phases.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Real,
    Complex,
}

/// Result of the weighted-Hoffman local search.
#[derive(Clone, Debug)]
pub struct WeightedHoffman {
    pub value: f64,
    pub weights: EdgeWeights,
    pub restarts: usize,
    pub iters: usize,
}

/// Local search for a Hermitian weighting maximizing the Hoffman bound.
/// Coordinate-wise multiplicative perturbations with greedy acceptance,
/// restarted from the all-ones weighting (restart 0) and from seeded random
/// positive weightings. Every intermediate weighting yields a valid lower
/// bound, so the best-found value is always sound; it is also never below
/// the unweighted Hoffman bound because restart 0 starts there.
pub fn optimize_weighted_hoffman(
    g: &Graph,
    seed: u64,
    iters: usize,
    restarts: usize,
    mode: WeightMode,
) -> Result<WeightedHoffman> {
    if g.m() == 0 {
        return Ok(WeightedHoffman {
            value: 1.0,
            weights: EdgeWeights::ones(g),
            restarts: 0,
            iters: 0,
        });
    }
    let edges: Vec<(u32, u32)> = g.edges().to_vec();
    let ones = EdgeWeights::ones(g);
    let mut best_value = evaluate_weighted_hoffman(g, &ones)?.value;
    let mut best_weights = ones.clone();

    for restart in 0..=restarts {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed ^ (restart as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15),
        );
        let mut current: Vec<num_complex::Complex64> = if restart == 0 {
            vec![num_complex::Complex64::ONE; edges.len()]
        } else {
            edges
                .iter()
                .map(|_| {
                    let magnitude = (rng.random::<f64>() * 2.0 - 1.0).exp();
                    let phase = match mode {
                        WeightMode::Real => 0.0,
                        WeightMode::Complex => rng.random::<f64>() * std::f64::consts::TAU,
                    };
                    num_complex::Complex64::from_polar(magnitude, phase)
                })
                .collect()
        };
        let weights_of = |w: &[num_complex::Complex64]| {
            EdgeWeights::new(edges.iter().copied().zip(w.iter().copied()))
        };
        let mut value = evaluate_weighted_hoffman(g, &weights_of(&current))?.value;
        for _ in 0..iters {
            let idx = rng.random_range(0..edges.len());
            let factor = ((rng.random::<f64>() * 2.0 - 1.0) * 0.5).exp();
            let rotate = matches!(mode, WeightMode::Complex) && rng.random::<f64>() < 0.5;
            let old = current[idx];
            current[idx] = if rotate {
                let angle = (rng.random::<f64>() * 2.0 - 1.0) * 0.8;
                old * num_complex::Complex64::from_polar(1.0, angle)
            } else {
                old * factor
            };
            let candidate = evaluate_weighted_hoffman(g, &weights_of(&current))?;
            if !candidate.degenerate && candidate.value > value {
                value = candidate.value;
            } else {
                current[idx] = old;
            }
        }
        if value > best_value {
            best_value = value;
            best_weights = weights_of(&current);
        }
    }

    Ok(WeightedHoffman {
        value: best_value,
        weights: best_weights,
        restarts,
        iters,
    })
}

/// The full battery of closed-form bounds for one graph.
#[derive(Clone, Debug)]
pub struct BoundSet {
    pub hoffman: Bound<f64>,
    pub lima: Bound<f64>,
    pub kolotilina: Bound<f64>,
    pub inertial: Bound<BigRational>,
    pub weaker_inertial: Bound<BigRational>,
    /// Labelled values of the diagonal-shift family, when evaluated.
    pub generalized: Option<Vec<(String, f64)>>,
    pub weighted_hoffman: Option<WeightedHoffman>,
}

impl BoundSet {
    /// What each bound lower-bounds; reports must not claim more.
    pub fn targets() -> &'static [(&'static str, BoundTarget)] {
        &[
            ("hoffman", BoundTarget::ChiVect),
            ("lima", BoundTarget::ChiVect),
            ("kolotilina", BoundTarget::ChiVect),
            ("generalized", BoundTarget::ChiVect),
            ("weighted_hoffman", BoundTarget::ChiVect),
            ("inertial", BoundTarget::Xi),
            ("weaker_inertial", BoundTarget::XiF),
        ]
    }
}

/// Evaluates every closed-form bound. The diagonal-shift family is reported
/// at its two collapse points `E = 0` and `E = D` as a built-in
/// cross-check.
pub fn bound_set(g: &Graph, tol: Option<f64>) -> Result<BoundSet> {
    let s_adj = spectrum(g, &MatrixKind::Adjacency, tol)?;
    let s_lap = spectrum(g, &MatrixKind::Laplacian, tol)?;
    let s_q = spectrum(g, &MatrixKind::SignlessLaplacian, tol)?;
    let generalized = if g.m() > 0 {
        let zeros = vec![0.0; g.n()];
        let degrees: Vec<f64> = g.degrees().into_iter().map(|d| d as f64).collect();
        Some(vec![
            ("E=0".to_string(), generalized_bound(g, &zeros)?),
            ("E=D".to_string(), generalized_bound(g, &degrees)?),
        ])
    } else {
        None
    };
    Ok(BoundSet {
        hoffman: hoffman_bound(&s_adj)?,
        lima: lima_bound(g, &s_q)?,
        kolotilina: kolotilina_bound(&s_adj, &s_lap, &s_q)?,
        inertial: inertial_bound(&s_adj)?,
        weaker_inertial: weaker_inertial_bound(&s_adj)?,
        generalized,
        weighted_hoffman: None,
    })
}
