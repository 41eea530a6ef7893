//! Orthogonal representations: heuristic search for upper bounds on the
//! orthogonal rank, verification of vector and projector certificates, the
//! first-entry normal form and its diagonal-matrix identity, and the
//! lower/upper interval for the orthogonal rank.

pub mod certificates;
pub mod search;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::bounds::{hoffman_bound, inertial_bound, kolotilina_bound, lima_bound, weaker_inertial_bound};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{
    build_matrix, hermitian_rank, spectrum, HermitianMatrix, Inertia, MatrixKind, Spectrum,
};

pub use search::{search_normalized_rep, search_ortho_rep};

/// Per-vertex complex vectors of a common dimension, orthogonal across
/// edges up to `residual`. Searchers emit unit-norm vectors; the
/// first-entry normal form deliberately does not.
#[derive(Clone, Debug)]
pub struct OrthoRepresentation {
    pub dimension: usize,
    /// One vector per vertex, each of length `dimension`.
    pub vectors: Vec<Vec<Complex64>>,
    /// Max over edges of `|x_v^dagger x_w|` as recorded by the producer.
    pub residual: f64,
    /// True when every entry of every vector has modulus `d^{-1/2}`.
    pub normalized: bool,
}

/// Rank-r orthogonal projectors in dimension d, one per vertex, with
/// adjacent products vanishing: a d/r-representation.
#[derive(Clone, Debug)]
pub struct ProjectorRepresentation {
    pub dimension: usize,
    pub rank: usize,
    pub projectors: Vec<DMatrix<Complex64>>,
}

/// Knobs for the representation searchers.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub restarts: usize,
    pub max_iters: usize,
    pub seed: u64,
    /// Max edge residual accepted as a certificate.
    pub success_tolerance: f64,
    /// Inclusive dimension interval scanned by [`xi_interval`].
    pub dimension_range: (usize, usize),
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            restarts: 32,
            max_iters: 2000,
            seed: 1,
            success_tolerance: 1e-9,
            dimension_range: (1, 8),
        }
    }
}

impl SearchConfig {
    fn validate(&self) -> Result<()> {
        if self.success_tolerance <= 0.0 {
            return Err(Error::Precondition("success tolerance must be positive".into()));
        }
        if self.dimension_range.0 < 1 || self.dimension_range.0 > self.dimension_range.1 {
            return Err(Error::Precondition(format!(
                "bad dimension range {:?}",
                self.dimension_range
            )));
        }
        Ok(())
    }
}

/// Independent verification of an orthogonal representation: recomputes the
/// max edge residual with its own inner-product accumulation (reverse
/// coordinate order), separate from the searcher's path.
#[derive(Clone, Copy, Debug)]
pub struct OrthoVerification {
    /// Max over edges of `|x_v^dagger x_w|`.
    pub residual: f64,
    /// Max deviation of any vector norm from 1.
    pub norm_deviation: f64,
    /// Smallest vector norm; zero vectors invalidate a certificate.
    pub min_norm: f64,
}

pub fn verify_ortho_rep(g: &Graph, rep: &OrthoRepresentation) -> Result<OrthoVerification> {
    if rep.vectors.len() != g.n() {
        return Err(Error::Certificate(format!(
            "certificate has {} vectors for n={}",
            rep.vectors.len(),
            g.n()
        )));
    }
    if rep.vectors.iter().any(|x| x.len() != rep.dimension) {
        return Err(Error::Certificate("vector length differs from dimension".into()));
    }
    let mut residual = 0.0f64;
    for &(v, w) in g.edges() {
        let xv = &rep.vectors[v as usize];
        let xw = &rep.vectors[w as usize];
        let mut dot = Complex64::ZERO;
        for k in (0..rep.dimension).rev() {
            dot += xv[k].conj() * xw[k];
        }
        residual = residual.max(dot.norm());
    }
    let mut norm_deviation = 0.0f64;
    let mut min_norm = f64::INFINITY;
    for x in &rep.vectors {
        let norm = x.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        norm_deviation = norm_deviation.max((norm - 1.0).abs());
        min_norm = min_norm.min(norm);
    }
    Ok(OrthoVerification {
        residual,
        norm_deviation,
        min_norm,
    })
}

/// Applies a unitary to every vector; orthogonality residuals are
/// invariant under this.
pub fn apply_unitary(rep: &OrthoRepresentation, u: &DMatrix<Complex64>) -> OrthoRepresentation {
    let d = rep.dimension;
    let vectors = rep
        .vectors
        .iter()
        .map(|x| {
            let col = nalgebra::DVector::from_column_slice(x);
            let y = u * col;
            (0..d).map(|k| y[k]).collect()
        })
        .collect();
    OrthoRepresentation {
        dimension: d,
        vectors,
        residual: rep.residual,
        normalized: rep.normalized,
    }
}

/// A Haar-like random unitary: modified Gram-Schmidt on a complex Gaussian
/// matrix.
fn random_unitary(d: usize, rng: &mut ChaCha8Rng) -> DMatrix<Complex64> {
    use rand_distr::StandardNormal;
    let mut m = DMatrix::<Complex64>::zeros(d, d);
    for i in 0..d {
        for j in 0..d {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            m[(i, j)] = Complex64::new(re, im);
        }
    }
    for j in 0..d {
        for k in 0..j {
            let mut proj = Complex64::ZERO;
            for i in 0..d {
                proj += m[(i, k)].conj() * m[(i, j)];
            }
            for i in 0..d {
                let delta = proj * m[(i, k)];
                m[(i, j)] -= delta;
            }
        }
        let norm = (0..d).map(|i| m[(i, j)].norm_sqr()).sum::<f64>().sqrt();
        for i in 0..d {
            m[(i, j)] /= norm;
        }
    }
    m
}

const FIRST_ENTRY_RETRIES: usize = 64;
const FIRST_ENTRY_FLOOR: f64 = 1e-6;

/// Rotates a representation by seeded random unitaries until every first
/// entry has modulus above 1e-6, then rescales each vector so its first
/// entry is exactly 1. Attempt 0 skips the rotation when the input already
/// qualifies. Orthogonality is preserved by both steps; output vectors are
/// not unit norm.
pub fn normalize_first_entries(
    g: &Graph,
    rep: &OrthoRepresentation,
    seed: u64,
) -> Result<OrthoRepresentation> {
    let check = verify_ortho_rep(g, rep)?;
    if check.residual >= 1e-9 {
        return Err(Error::Precondition(format!(
            "representation residual {:.3e} is not below 1e-9",
            check.residual
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..FIRST_ENTRY_RETRIES {
        let candidate = if attempt == 0 {
            rep.clone()
        } else {
            apply_unitary(rep, &random_unitary(rep.dimension, &mut rng))
        };
        let min_first = candidate
            .vectors
            .iter()
            .map(|x| x[0].norm())
            .fold(f64::INFINITY, f64::min);
        if min_first <= FIRST_ENTRY_FLOOR {
            continue;
        }
        let vectors: Vec<Vec<Complex64>> = candidate
            .vectors
            .iter()
            .map(|x| {
                let first = x[0];
                let mut y: Vec<Complex64> = x.iter().map(|z| z / first).collect();
                y[0] = Complex64::ONE;
                y
            })
            .collect();
        let mut out = OrthoRepresentation {
            dimension: rep.dimension,
            vectors,
            residual: 0.0,
            normalized: false,
        };
        out.residual = verify_ortho_rep(g, &out)?.residual;
        return Ok(out);
    }
    Err(Error::Certificate(format!(
        "no unitary with all first entries above {FIRST_ENTRY_FLOOR} found in {FIRST_ENTRY_RETRIES} attempts"
    )))
}

/// For a representation in first-entry normal form (`x_v[0] = 1`), builds
/// the diagonal matrices `D_i = diag(x_v[i])` and returns the max-norm of
/// `sum_{i=2..d} D_i^dagger A D_i + A`, which is zero for an exact
/// representation. Passing threshold: 1e-8.
pub fn verify_conversion_identity(g: &Graph, rep: &OrthoRepresentation) -> Result<f64> {
    if rep.vectors.len() != g.n() {
        return Err(Error::Certificate(format!(
            "certificate has {} vectors for n={}",
            rep.vectors.len(),
            g.n()
        )));
    }
    for (v, x) in rep.vectors.iter().enumerate() {
        if (x[0] - Complex64::ONE).norm() > 1e-12 {
            return Err(Error::Precondition(format!(
                "vertex {v} first entry {} is not 1",
                x[0]
            )));
        }
    }
    let n = g.n();
    let a = build_matrix(g, &MatrixKind::Adjacency)?.to_complex();
    let mut total = a.clone();
    for i in 1..rep.dimension {
        let d = DMatrix::<Complex64>::from_diagonal(&nalgebra::DVector::from_iterator(
            n,
            rep.vectors.iter().map(|x| x[i]),
        ));
        total += d.adjoint() * &a * d;
    }
    Ok(total.iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Outcome of checking a d/r certificate.
#[derive(Clone, Debug)]
pub struct DrVerification {
    pub valid: bool,
    pub diagnostics: Vec<String>,
    /// Max deviation from Hermitian symmetry across projectors.
    pub hermiticity: f64,
    /// Max entrywise norm of `P^2 - P` across projectors.
    pub idempotency: f64,
    /// Max entrywise norm of `P_v P_w` over edges.
    pub edge_product: f64,
    /// Max entrywise norm of `P (A (x) I_d) P` for the block-diagonal P.
    pub block_product: f64,
    /// Numerical rank of the block-diagonal projector (expected n*r).
    pub block_rank: usize,
    /// What a valid certificate establishes, e.g. `xi^[2](G) <= 5`.
    pub certifies: Option<String>,
}

/// Verifies a d/r-representation: per-projector invariants, vanishing edge
/// products, and the block-diagonal identity `P (A (x) I_d) P = 0` with
/// `rank(P) = n*r`.
pub fn verify_dr_representation(g: &Graph, rep: &ProjectorRepresentation) -> Result<DrVerification> {
    let n = g.n();
    let d = rep.dimension;
    let r = rep.rank;
    if rep.projectors.len() != n {
        return Err(Error::Certificate(format!(
            "certificate has {} projectors for n={n}",
            rep.projectors.len()
        )));
    }
    if rep.projectors.iter().any(|p| p.nrows() != d || p.ncols() != d) {
        return Err(Error::Certificate("projector dimensions differ from d".into()));
    }
    if r == 0 || r > d {
        return Err(Error::Certificate(format!("rank {r} out of range for dimension {d}")));
    }
    if n * d > 600 {
        return Err(Error::SizeLimit(format!(
            "block verification needs n*d <= 600, got {}",
            n * d
        )));
    }

    let mut diagnostics = Vec::new();
    let mut hermiticity = 0.0f64;
    let mut idempotency = 0.0f64;
    for (v, p) in rep.projectors.iter().enumerate() {
        let herm = (p - p.adjoint())
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        hermiticity = hermiticity.max(herm);
        if herm > 1e-10 {
            diagnostics.push(format!("projector {v}: hermiticity residual {herm:.3e} > 1e-10"));
        }
        let idem = (p * p - p).iter().map(|z| z.norm()).fold(0.0, f64::max);
        idempotency = idempotency.max(idem);
        if idem > 1e-8 {
            diagnostics.push(format!("projector {v}: idempotency residual {idem:.3e} > 1e-8"));
        }
        let rank = hermitian_rank(&HermitianMatrix::Complex(p.clone()))?;
        if rank != r {
            diagnostics.push(format!("projector {v}: rank {rank} != claimed r={r}"));
        }
    }

    let mut edge_product = 0.0f64;
    for &(v, w) in g.edges() {
        let prod = &rep.projectors[v as usize] * &rep.projectors[w as usize];
        let worst = prod.iter().map(|z| z.norm()).fold(0.0, f64::max);
        edge_product = edge_product.max(worst);
        if worst > 1e-8 {
            diagnostics.push(format!("edge ({v},{w}): |P_v P_w| = {worst:.3e} > 1e-8"));
        }
    }

    // Block-diagonal projector P = sum_v e_v e_v^dagger (x) P_v.
    let nd = n * d;
    let mut block = DMatrix::<Complex64>::zeros(nd, nd);
    for (v, p) in rep.projectors.iter().enumerate() {
        for i in 0..d {
            for j in 0..d {
                block[(v * d + i, v * d + j)] = p[(i, j)];
            }
        }
    }
    let a = build_matrix(g, &MatrixKind::Adjacency)?.to_complex();
    let mut a_kron = DMatrix::<Complex64>::zeros(nd, nd);
    for v in 0..n {
        for w in 0..n {
            if a[(v, w)] != Complex64::ZERO {
                for i in 0..d {
                    a_kron[(v * d + i, w * d + i)] = a[(v, w)];
                }
            }
        }
    }
    let sandwich = &block * a_kron * &block;
    let block_product = sandwich.iter().map(|z| z.norm()).fold(0.0, f64::max);
    if block_product > 1e-8 {
        diagnostics.push(format!(
            "block identity: |P (A x I) P| = {block_product:.3e} > 1e-8"
        ));
    }
    let block_rank = hermitian_rank(&HermitianMatrix::Complex(block))?;
    if block_rank != n * r {
        diagnostics.push(format!("block projector rank {block_rank} != n*r = {}", n * r));
    }

    let valid = diagnostics.is_empty();
    Ok(DrVerification {
        valid,
        diagnostics,
        hermiticity,
        idempotency,
        edge_product,
        block_product,
        block_rank,
        certifies: valid.then(|| format!("xi^[{r}](G) <= {d}")),
    })
}

/// Exact rational comparison of a d/r certificate against the inertial
/// bounds. A valid certificate must satisfy the projective-rank bound; the
/// stronger bound is only conjectured to hold and is reported, never
/// asserted.
#[derive(Clone, Debug)]
pub struct InertialConsistency {
    pub ratio: BigRational,
    pub weaker_bound: BigRational,
    pub conjectured_bound: BigRational,
    /// `d/r >= weaker_bound`; certified by the certificate.
    pub weaker_satisfied: bool,
    /// `d/r >= conjectured_bound`; evidence for or against the conjecture.
    pub conjectured_satisfied: bool,
}

pub fn dr_inertial_consistency(
    d: usize,
    r: usize,
    adjacency: &Spectrum,
) -> Result<InertialConsistency> {
    let ratio = BigRational::new(BigInt::from(d), BigInt::from(r));
    let weaker = weaker_inertial_bound(adjacency)?.value;
    let conjectured = inertial_bound(adjacency)?.value;
    Ok(InertialConsistency {
        weaker_satisfied: ratio >= weaker,
        conjectured_satisfied: ratio >= conjectured,
        ratio,
        weaker_bound: weaker,
        conjectured_bound: conjectured,
    })
}

/// The fixture 5/2-representation of the pentagon: vertex `v` projects
/// onto `span{e_{2v mod 5}, e_{2v+1 mod 5}}`. Consecutive index pairs are
/// disjoint exactly on the edges of C5.
pub fn c5_five_halves_fixture() -> ProjectorRepresentation {
    let projectors = (0..5)
        .map(|v| {
            let mut p = DMatrix::<Complex64>::zeros(5, 5);
            p[((2 * v) % 5, (2 * v) % 5)] = Complex64::ONE;
            p[((2 * v + 1) % 5, (2 * v + 1) % 5)] = Complex64::ONE;
            p
        })
        .collect();
    ProjectorRepresentation {
        dimension: 5,
        rank: 2,
        projectors,
    }
}

/// Certified interval for the orthogonal rank: the best closed-form lower
/// bound (exact rational when the inertial bound dominates) and the
/// smallest dimension in range for which the searcher found a certificate.
#[derive(Clone, Debug)]
pub struct XiInterval {
    pub lower_value: f64,
    /// Present when the maximum is attained by the exact inertial bound.
    pub lower_exact: Option<BigRational>,
    pub lower_source: &'static str,
    pub lower_ceiling: u32,
    pub upper: Option<u32>,
    pub certificate: Option<OrthoRepresentation>,
}

fn tolerant_ceiling(v: f64) -> u32 {
    let rounded = v.round();
    let ceiled = if (v - rounded).abs() <= 1e-6 { rounded } else { v.ceil() };
    (ceiled.max(1.0)) as u32
}

/// The best closed-form lower bound on the orthogonal rank, kept exact when
/// the inertial bound dominates.
#[derive(Clone, Debug)]
pub struct XiLower {
    pub value: f64,
    pub exact: Option<BigRational>,
    pub source: &'static str,
    pub ceiling: u32,
}

/// Max over the inertial, Hoffman, Lima and Kolotilina bounds; near-ties
/// resolve to the exact inertial value.
pub fn xi_lower_bound(
    g: &Graph,
    s_adj: &Spectrum,
    s_laplacian: &Spectrum,
    s_signless: &Spectrum,
) -> Result<XiLower> {
    let inertial = inertial_bound(s_adj)?.value;
    let inertial_float = inertial.to_f64().unwrap_or(1.0);
    let candidates = [
        ("hoffman", hoffman_bound(s_adj)?.value),
        ("lima", lima_bound(g, s_signless)?.value),
        ("kolotilina", kolotilina_bound(s_adj, s_laplacian, s_signless)?.value),
    ];
    let mut source = "inertial";
    let mut value = inertial_float;
    for &(name, v) in &candidates {
        if v > value + 1e-9 {
            source = name;
            value = v;
        }
    }
    let exact = (source == "inertial").then(|| inertial.clone());
    let ceiling = match &exact {
        Some(r) => r.ceil().to_integer().to_u32().unwrap_or(u32::MAX),
        None => tolerant_ceiling(value),
    };
    Ok(XiLower {
        value,
        exact,
        source,
        ceiling,
    })
}

/// Computes the bound-side maximum and scans `cfg.dimension_range` for the
/// smallest certificate dimension. A certificate below the certified lower
/// bound indicates a bug and aborts loudly.
pub fn xi_interval(g: &Graph, cfg: &SearchConfig) -> Result<XiInterval> {
    cfg.validate()?;
    let s_adj = spectrum(g, &MatrixKind::Adjacency, None)?;
    let s_lap = spectrum(g, &MatrixKind::Laplacian, None)?;
    let s_q = spectrum(g, &MatrixKind::SignlessLaplacian, None)?;
    let lower = xi_lower_bound(g, &s_adj, &s_lap, &s_q)?;

    let mut upper = None;
    let mut certificate = None;
    for d in cfg.dimension_range.0..=cfg.dimension_range.1 {
        if let Some(rep) = search_ortho_rep(g, d, cfg)? {
            check_certificate_consistency(d, &lower.exact, lower.value, &s_adj.inertia)?;
            upper = Some(d as u32);
            certificate = Some(rep);
            break;
        }
    }

    Ok(XiInterval {
        lower_value: lower.value,
        lower_exact: lower.exact,
        lower_source: lower.source,
        lower_ceiling: lower.ceiling,
        upper,
        certificate,
    })
}

fn check_certificate_consistency(
    d: usize,
    lower_exact: &Option<BigRational>,
    lower_value: f64,
    inertia: &Inertia,
) -> Result<()> {
    let d_rational = BigRational::from_integer(BigInt::from(d));
    if let Some(exact) = lower_exact {
        if d_rational < *exact {
            return Err(Error::Inconsistency(format!(
                "certificate in dimension {d} contradicts exact lower bound {exact}"
            )));
        }
    } else if (d as f64) < lower_value - 1e-9 {
        return Err(Error::Inconsistency(format!(
            "certificate in dimension {d} contradicts lower bound {lower_value}"
        )));
    }
    // Certified certificate + inertial theorem: exact integer arithmetic.
    let (np, nm) = (inertia.positive as u64, inertia.negative as u64);
    if np > 0 && nm > 0 {
        let dm1 = (d as u64) - 1;
        if dm1 * np < nm || dm1 * nm < np {
            return Err(Error::Inconsistency(format!(
                "certificate dimension {d} violates the inertial inequality for inertia ({np},{},{nm})",
                inertia.zero
            )));
        }
    }
    Ok(())
}

/// `true` iff every entry of every vector has modulus `d^{-1/2}` within
/// `1e-8`.
pub fn has_flat_modulus(rep: &OrthoRepresentation) -> bool {
    let target = (rep.dimension as f64).sqrt().recip();
    rep.vectors
        .iter()
        .all(|x| x.iter().all(|z| (z.norm() - target).abs() <= 1e-8))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};
    use crate::spectral::inertia;

    fn gen(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn k2_rep() -> OrthoRepresentation {
        OrthoRepresentation {
            dimension: 2,
            vectors: vec![
                vec![Complex64::ONE, Complex64::ZERO],
                vec![Complex64::ZERO, Complex64::ONE],
            ],
            residual: 0.0,
            normalized: false,
        }
    }

    #[test]
    fn verify_detects_residuals() {
        let k2 = Graph::complete(2).unwrap();
        let rep = k2_rep();
        let check = verify_ortho_rep(&k2, &rep).unwrap();
        assert_eq!(check.residual, 0.0);
        assert!(check.norm_deviation < 1e-15);

        let mut bad = rep.clone();
        bad.vectors[1][0] = Complex64::new(0.01, 0.0);
        let check = verify_ortho_rep(&k2, &bad).unwrap();
        assert!(check.residual > 1e-4);
    }

    #[test]
    fn unitary_invariance() {
        let k2 = Graph::complete(2).unwrap();
        let rep = k2_rep();
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let u = random_unitary(2, &mut rng);
        let rotated = apply_unitary(&rep, &u);
        let check = verify_ortho_rep(&k2, &rotated).unwrap();
        assert!(check.residual < 1e-10);
        assert!(check.norm_deviation < 1e-10);
    }

    #[test]
    fn first_entry_normal_form_on_k2() {
        let k2 = Graph::complete(2).unwrap();
        // The identity attempt fails here (x_2 starts with 0), so a random
        // unitary is required.
        let rep = k2_rep();
        let normalized = normalize_first_entries(&k2, &rep, 5).unwrap();
        for x in &normalized.vectors {
            assert_eq!(x[0], Complex64::ONE);
        }
        assert!(normalized.residual < 1e-8);
        let residual = verify_conversion_identity(&k2, &normalized).unwrap();
        assert!(residual < 1e-12, "conversion identity residual {residual}");
    }

    #[test]
    fn rescale_only_path_when_first_entries_are_nonzero() {
        let k2 = Graph::complete(2).unwrap();
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let rep = OrthoRepresentation {
            dimension: 2,
            vectors: vec![
                vec![Complex64::new(s, 0.0), Complex64::new(s, 0.0)],
                vec![Complex64::new(s, 0.0), Complex64::new(-s, 0.0)],
            ],
            residual: 0.0,
            normalized: true,
        };
        let normalized = normalize_first_entries(&k2, &rep, 3).unwrap();
        // Attempt 0 applies no rotation, so the second entries stay real.
        assert_eq!(normalized.vectors[0][1].im, 0.0);
        assert!((normalized.vectors[0][1].re - 1.0).abs() < 1e-12);
        assert!((normalized.vectors[1][1].re + 1.0).abs() < 1e-12);
    }

    #[test]
    fn conversion_identity_rejects_unnormalized_first_entries() {
        let k2 = Graph::complete(2).unwrap();
        let rep = k2_rep();
        assert!(matches!(
            verify_conversion_identity(&k2, &rep),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn conversion_identity_detects_corruption() {
        let c5 = gen("cycle:5");
        let cfg = SearchConfig::default();
        let rep = search_ortho_rep(&c5, 3, &cfg).unwrap().expect("xi(C5)=3");
        let normalized = normalize_first_entries(&c5, &rep, 11).unwrap();
        assert!(verify_conversion_identity(&c5, &normalized).unwrap() < 1e-8);

        let mut corrupted = normalized.clone();
        corrupted.vectors[2][1] += Complex64::new(1e-2, 0.0);
        let residual = verify_conversion_identity(&c5, &corrupted).unwrap();
        assert!(residual > 1e-4, "corruption must be detected, residual {residual}");
    }

    #[test]
    fn c5_fixture_is_a_valid_5_2_representation() {
        let c5 = gen("cycle:5");
        let fixture = c5_five_halves_fixture();
        let report = verify_dr_representation(&c5, &fixture).unwrap();
        assert!(report.valid, "diagnostics: {:?}", report.diagnostics);
        assert_eq!(report.block_rank, 10);
        assert_eq!(report.certifies.as_deref(), Some("xi^[2](G) <= 5"));
        // Theorem-level consistency, exactly.
        let s = inertia(&c5, None).unwrap();
        let consistency = dr_inertial_consistency(5, 2, &s).unwrap();
        assert!(consistency.weaker_satisfied);
        assert!(consistency.conjectured_satisfied);
        assert_eq!(consistency.ratio, BigRational::new(5.into(), 2.into()));
    }

    #[test]
    fn dr_verification_rejects_rank_mismatch() {
        let k3 = Graph::complete(3).unwrap();
        // Claim r=2 while shipping rank-1 projectors.
        let projectors = (0..3)
            .map(|v| {
                let mut p = DMatrix::<Complex64>::zeros(3, 3);
                p[(v, v)] = Complex64::ONE;
                p
            })
            .collect();
        let rep = ProjectorRepresentation {
            dimension: 3,
            rank: 2,
            projectors,
        };
        let report = verify_dr_representation(&k3, &rep).unwrap();
        assert!(!report.valid);
        assert!(report.diagnostics.iter().any(|d| d.contains("rank")));
    }

    #[test]
    fn dr_verification_accepts_standard_basis_on_k3() {
        let k3 = Graph::complete(3).unwrap();
        let projectors = (0..3)
            .map(|v| {
                let mut p = DMatrix::<Complex64>::zeros(3, 3);
                p[(v, v)] = Complex64::ONE;
                p
            })
            .collect();
        let rep = ProjectorRepresentation {
            dimension: 3,
            rank: 1,
            projectors,
        };
        let report = verify_dr_representation(&k3, &rep).unwrap();
        assert!(report.valid, "diagnostics: {:?}", report.diagnostics);
        assert_eq!(report.block_rank, 3);
    }

    #[test]
    fn dr_verification_rejects_dimension_mismatches() {
        let k3 = Graph::complete(3).unwrap();
        // Wrong projector count.
        let two = ProjectorRepresentation {
            dimension: 3,
            rank: 1,
            projectors: vec![DMatrix::identity(3, 3); 2],
        };
        assert!(matches!(
            verify_dr_representation(&k3, &two),
            Err(Error::Certificate(_))
        ));
        // Projector size differs from the claimed dimension.
        let wrong_size = ProjectorRepresentation {
            dimension: 3,
            rank: 1,
            projectors: vec![DMatrix::identity(2, 2); 3],
        };
        assert!(matches!(
            verify_dr_representation(&k3, &wrong_size),
            Err(Error::Certificate(_))
        ));
        // Rank outside 1..=d.
        let zero_rank = ProjectorRepresentation {
            dimension: 3,
            rank: 0,
            projectors: vec![DMatrix::identity(3, 3); 3],
        };
        assert!(verify_dr_representation(&k3, &zero_rank).is_err());
    }

    #[test]
    fn dr_verification_flags_edge_products() {
        // P_v = identity for all v fails the edge condition.
        let k2 = Graph::complete(2).unwrap();
        let rep = ProjectorRepresentation {
            dimension: 2,
            rank: 2,
            projectors: vec![DMatrix::identity(2, 2), DMatrix::identity(2, 2)],
        };
        let report = verify_dr_representation(&k2, &rep).unwrap();
        assert!(!report.valid);
        assert!(report.edge_product > 0.5);
    }

    #[test]
    fn xi_interval_on_k4_collapses_to_four() {
        let k4 = Graph::complete(4).unwrap();
        let cfg = SearchConfig {
            dimension_range: (1, 5),
            ..SearchConfig::default()
        };
        let interval = xi_interval(&k4, &cfg).unwrap();
        assert_eq!(interval.lower_ceiling, 4);
        assert_eq!(interval.upper, Some(4));
    }

    #[test]
    fn xi_interval_on_c5() {
        let c5 = gen("cycle:5");
        let interval = xi_interval(&c5, &SearchConfig::default()).unwrap();
        assert_eq!(
            interval.lower_exact,
            Some(BigRational::new(5.into(), 2.into()))
        );
        assert_eq!(interval.lower_ceiling, 3);
        assert_eq!(interval.upper, Some(3));
        let rep = interval.certificate.unwrap();
        let check = verify_ortho_rep(&c5, &rep).unwrap();
        assert!(check.residual < 1e-8);
    }

    #[test]
    fn tolerant_ceiling_handles_float_noise() {
        assert_eq!(tolerant_ceiling(4.0 + 1e-9), 4);
        assert_eq!(tolerant_ceiling(4.0 - 1e-9), 4);
        assert_eq!(tolerant_ceiling(2.5), 3);
        assert_eq!(tolerant_ceiling(1.0), 1);
    }
}
