//! The named symmetric matrices of a graph (A, L = D - A, Q = D + A, and
//! Hermitian edge-weighted W o A), full eigendecompositions, inertia
//! classification with an explicit tolerance policy, and the positive /
//! negative spectral split A = B - C.

pub mod jacobi;

use std::collections::BTreeMap;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Hermitian edge weights: one complex value per existing edge, stored on
/// the canonical orientation `v < w`; the transposed entry is the conjugate.
#[derive(Clone, Debug, PartialEq)]
pub struct EdgeWeights {
    entries: BTreeMap<(u32, u32), Complex64>,
}

impl EdgeWeights {
    pub fn new(entries: impl IntoIterator<Item = ((u32, u32), Complex64)>) -> Self {
        let entries = entries
            .into_iter()
            .map(|((a, b), z)| {
                if a < b {
                    ((a, b), z)
                } else {
                    ((b, a), z.conj())
                }
            })
            .collect();
        EdgeWeights { entries }
    }

    /// All-ones weights on the edges of `g`.
    pub fn ones(g: &Graph) -> Self {
        Self::new(g.edges().iter().map(|&e| (e, Complex64::ONE)))
    }

    pub fn real(entries: impl IntoIterator<Item = ((u32, u32), f64)>) -> Self {
        Self::new(
            entries
                .into_iter()
                .map(|(e, x)| (e, Complex64::new(x, 0.0))),
        )
    }

    pub fn is_real(&self) -> bool {
        self.entries.values().all(|z| z.im == 0.0)
    }

    pub fn get(&self, v: u32, w: u32) -> Option<Complex64> {
        if v < w {
            self.entries.get(&(v, w)).copied()
        } else {
            self.entries.get(&(w, v)).map(|z| z.conj())
        }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        EdgeWeights {
            entries: self
                .entries
                .iter()
                .map(|(&e, &z)| (e, z * factor))
                .collect(),
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(u32, u32), &Complex64)> {
        self.entries.iter()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Which named matrix of the graph to build.
#[derive(Clone, Debug, PartialEq)]
pub enum MatrixKind {
    Adjacency,
    Laplacian,
    SignlessLaplacian,
    WeightedAdjacency(EdgeWeights),
}

impl MatrixKind {
    pub fn label(&self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adjacency",
            MatrixKind::Laplacian => "laplacian",
            MatrixKind::SignlessLaplacian => "signless-laplacian",
            MatrixKind::WeightedAdjacency(_) => "weighted-adjacency",
        }
    }
}

/// A dense Hermitian matrix, kept real whenever the data allows it.
#[derive(Clone, Debug)]
pub enum HermitianMatrix {
    Real(DMatrix<f64>),
    Complex(DMatrix<Complex64>),
}

impl HermitianMatrix {
    pub fn dim(&self) -> usize {
        match self {
            HermitianMatrix::Real(m) => m.nrows(),
            HermitianMatrix::Complex(m) => m.nrows(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        match self {
            HermitianMatrix::Real(m) => m.iter().fold(0.0f64, |acc, x| acc.max(x.abs())),
            HermitianMatrix::Complex(m) => m.iter().fold(0.0f64, |acc, z| acc.max(z.norm())),
        }
    }

    /// Max entrywise deviation from `M = M^dagger`.
    pub fn hermiticity_residual(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                let d = match self {
                    HermitianMatrix::Real(m) => (m[(i, j)] - m[(j, i)]).abs(),
                    HermitianMatrix::Complex(m) => (m[(i, j)] - m[(j, i)].conj()).norm(),
                };
                worst = worst.max(d);
            }
        }
        worst
    }

    pub fn to_complex(&self) -> DMatrix<Complex64> {
        match self {
            HermitianMatrix::Real(m) => m.map(|x| Complex64::new(x, 0.0)),
            HermitianMatrix::Complex(m) => m.clone(),
        }
    }
}

/// Eigenvalues sorted descending plus matching orthonormal eigenvector
/// columns.
#[derive(Clone, Debug)]
pub struct Eigendecomposition {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: HermitianMatrix,
}

/// Counts of positive, zero and negative eigenvalues at a tolerance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Inertia {
    pub positive: usize,
    pub zero: usize,
    pub negative: usize,
}

impl Inertia {
    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }

    pub fn nullity(&self) -> usize {
        self.zero
    }
}

/// Sorted spectrum of one named matrix together with its inertia
/// classification.
#[derive(Clone, Debug)]
pub struct Spectrum {
    /// Eigenvalues sorted descending.
    pub eigenvalues: Vec<f64>,
    pub inertia: Inertia,
    /// Threshold used to classify eigenvalues as zero.
    pub zero_tolerance: f64,
    /// True when any eigenvalue magnitude falls in (tol/10, 10*tol), i.e.
    /// the classification is sensitive to the tolerance choice.
    pub borderline: bool,
    pub kind: MatrixKind,
}

impl Spectrum {
    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    /// Largest eigenvalue.
    pub fn max(&self) -> f64 {
        self.eigenvalues[0]
    }

    /// Smallest eigenvalue.
    pub fn min(&self) -> f64 {
        *self.eigenvalues.last().expect("nonempty spectrum")
    }
}

/// Default zero-classification tolerance: `1e-7 * max(1, |mu|_max)`.
/// Adjacency-type matrices are integral, so genuine eigenvalues are either
/// exactly zero or well separated from it at this scale.
pub fn default_zero_tolerance(max_abs_eigenvalue: f64) -> f64 {
    1e-7 * max_abs_eigenvalue.max(1.0)
}

/// Builds the requested matrix of `g` as a dense Hermitian matrix. Weighted
/// adjacency with all-real weights comes back as a real matrix, entrywise
/// identical to what the weights dictate.
pub fn build_matrix(g: &Graph, kind: &MatrixKind) -> Result<HermitianMatrix> {
    let n = g.n();
    match kind {
        MatrixKind::Adjacency => {
            let mut m = DMatrix::<f64>::zeros(n, n);
            for &(v, w) in g.edges() {
                m[(v as usize, w as usize)] = 1.0;
                m[(w as usize, v as usize)] = 1.0;
            }
            Ok(HermitianMatrix::Real(m))
        }
        MatrixKind::Laplacian | MatrixKind::SignlessLaplacian => {
            let sign = if matches!(kind, MatrixKind::Laplacian) {
                -1.0
            } else {
                1.0
            };
            let mut m = DMatrix::<f64>::zeros(n, n);
            for (v, d) in g.degrees().into_iter().enumerate() {
                m[(v, v)] = d as f64;
            }
            for &(v, w) in g.edges() {
                m[(v as usize, w as usize)] = sign;
                m[(w as usize, v as usize)] = sign;
            }
            Ok(HermitianMatrix::Real(m))
        }
        MatrixKind::WeightedAdjacency(weights) => {
            for (&(v, w), _) in weights.iter() {
                if !g.has_edge(v, w) {
                    return Err(Error::WeightOnNonEdge { v, w });
                }
            }
            if weights.is_real() {
                let mut m = DMatrix::<f64>::zeros(n, n);
                for (&(v, w), z) in weights.iter() {
                    m[(v as usize, w as usize)] = z.re;
                    m[(w as usize, v as usize)] = z.re;
                }
                Ok(HermitianMatrix::Real(m))
            } else {
                let mut m = DMatrix::<Complex64>::zeros(n, n);
                for (&(v, w), &z) in weights.iter() {
                    m[(v as usize, w as usize)] = z;
                    m[(w as usize, v as usize)] = z.conj();
                }
                Ok(HermitianMatrix::Complex(m))
            }
        }
    }
}

/// Full eigendecomposition of a Hermitian matrix. Rejects inputs whose
/// entrywise symmetry residual exceeds 1e-12 or that contain non-finite
/// entries.
pub fn eigendecompose(m: &HermitianMatrix) -> Result<Eigendecomposition> {
    let finite = match m {
        HermitianMatrix::Real(a) => a.iter().all(|x| x.is_finite()),
        HermitianMatrix::Complex(a) => a.iter().all(|z| z.re.is_finite() && z.im.is_finite()),
    };
    if !finite {
        return Err(Error::NotHermitian("matrix contains non-finite entries".into()));
    }
    let residual = m.hermiticity_residual();
    if residual > 1e-12 {
        return Err(Error::NotHermitian(format!(
            "symmetry residual {residual:.3e} exceeds 1e-12"
        )));
    }
    match m {
        HermitianMatrix::Real(a) => {
            let (eigenvalues, vectors) = jacobi::eigh_real(a)?;
            Ok(Eigendecomposition {
                eigenvalues,
                eigenvectors: HermitianMatrix::Real(vectors),
            })
        }
        HermitianMatrix::Complex(a) => {
            let (eigenvalues, vectors) = jacobi::eigh_hermitian(a)?;
            Ok(Eigendecomposition {
                eigenvalues,
                eigenvectors: HermitianMatrix::Complex(vectors),
            })
        }
    }
}

fn classify(eigenvalues: &[f64], tol: f64) -> (Inertia, bool) {
    let mut inertia = Inertia {
        positive: 0,
        zero: 0,
        negative: 0,
    };
    let mut borderline = false;
    for &x in eigenvalues {
        if x > tol {
            inertia.positive += 1;
        } else if x < -tol {
            inertia.negative += 1;
        } else {
            inertia.zero += 1;
        }
        if x.abs() > tol / 10.0 && x.abs() < 10.0 * tol {
            borderline = true;
        }
    }
    (inertia, borderline)
}

/// Eigenvalues and inertia of the chosen matrix of `g`. `tol = None`
/// selects the default tolerance policy.
pub fn spectrum(g: &Graph, kind: &MatrixKind, tol: Option<f64>) -> Result<Spectrum> {
    let m = build_matrix(g, kind)?;
    let eig = eigendecompose(&m)?;
    let max_abs = eig
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    let tol = match tol {
        Some(t) if t > 0.0 => t,
        Some(t) => {
            return Err(Error::Precondition(format!(
                "zero tolerance must be positive, got {t}"
            )))
        }
        None => default_zero_tolerance(max_abs),
    };
    let (inertia, borderline) = classify(&eig.eigenvalues, tol);
    Ok(Spectrum {
        eigenvalues: eig.eigenvalues,
        inertia,
        zero_tolerance: tol,
        borderline,
        kind: kind.clone(),
    })
}

/// Adjacency spectrum with inertia; the paper's `(n+, n0, n-)`.
pub fn inertia(g: &Graph, tol: Option<f64>) -> Result<Spectrum> {
    spectrum(g, &MatrixKind::Adjacency, tol)
}

/// The split A = B - C with B, C positive semidefinite, plus the orthogonal
/// projectors onto the positive and negative eigenspaces. `B = P+ A P+`,
/// `C = -P- A P-`, `rank(B) = n+`, `rank(C) = n-`.
#[derive(Clone, Debug)]
pub struct PsdSplit {
    pub b: DMatrix<f64>,
    pub c: DMatrix<f64>,
    pub p_plus: DMatrix<f64>,
    pub p_minus: DMatrix<f64>,
    pub inertia: Inertia,
}

pub fn psd_split(g: &Graph) -> Result<PsdSplit> {
    let m = build_matrix(g, &MatrixKind::Adjacency)?;
    let eig = eigendecompose(&m)?;
    let vectors = match &eig.eigenvectors {
        HermitianMatrix::Real(v) => v,
        HermitianMatrix::Complex(_) => unreachable!("adjacency is real"),
    };
    let max_abs = eig
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    let tol = default_zero_tolerance(max_abs);
    let (inertia, _) = classify(&eig.eigenvalues, tol);

    let n = g.n();
    let mut b = DMatrix::<f64>::zeros(n, n);
    let mut c = DMatrix::<f64>::zeros(n, n);
    let mut p_plus = DMatrix::<f64>::zeros(n, n);
    let mut p_minus = DMatrix::<f64>::zeros(n, n);
    for (i, &lambda) in eig.eigenvalues.iter().enumerate() {
        let f = vectors.column(i);
        let outer = &f * f.transpose();
        if lambda > tol {
            b += lambda * &outer;
            p_plus += &outer;
        } else if lambda < -tol {
            c += -lambda * &outer;
            p_minus += &outer;
        }
    }
    Ok(PsdSplit {
        b,
        c,
        p_plus,
        p_minus,
        inertia,
    })
}

/// Numerical rank of a Hermitian matrix: eigenvalue magnitudes above
/// `1e-8 * max magnitude` (consistent with the inertia policy).
pub fn hermitian_rank(m: &HermitianMatrix) -> Result<usize> {
    let eig = eigendecompose(m)?;
    let max_abs = eig
        .eigenvalues
        .iter()
        .fold(0.0f64, |acc, x| acc.max(x.abs()));
    if max_abs == 0.0 {
        return Ok(0);
    }
    let cut = 1e-8 * max_abs;
    Ok(eig.eigenvalues.iter().filter(|x| x.abs() > cut).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec};

    fn gen(s: &str) -> Graph {
        generate(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    fn assert_close(actual: &[f64], expected: &[f64], tol: f64) {
        assert_eq!(actual.len(), expected.len());
        for (a, e) in actual.iter().zip(expected) {
            assert!((a - e).abs() < tol, "{a} vs {e}");
        }
    }

    #[test]
    fn k3_laplacian_spectrum() {
        let g = Graph::complete(3).unwrap();
        let m = build_matrix(&g, &MatrixKind::Laplacian).unwrap();
        if let HermitianMatrix::Real(l) = &m {
            for i in 0..3 {
                assert_eq!(l.row(i).sum(), 0.0);
            }
        } else {
            panic!("laplacian should be real");
        }
        let s = spectrum(&g, &MatrixKind::Laplacian, None).unwrap();
        assert_close(&s.eigenvalues, &[3.0, 3.0, 0.0], 1e-12);
    }

    #[test]
    fn c4_signless_laplacian_is_singular() {
        // Bipartite graphs have a zero eigenvalue of Q = D + A.
        let g = gen("cycle:4");
        let s = spectrum(&g, &MatrixKind::SignlessLaplacian, None).unwrap();
        assert!(s.min().abs() < 1e-10);
        assert_eq!(s.inertia.zero, 1);
    }

    #[test]
    fn unit_weights_reproduce_adjacency() {
        let g = gen("cycle:5");
        let adj = build_matrix(&g, &MatrixKind::Adjacency).unwrap();
        let weighted =
            build_matrix(&g, &MatrixKind::WeightedAdjacency(EdgeWeights::ones(&g))).unwrap();
        match (adj, weighted) {
            (HermitianMatrix::Real(a), HermitianMatrix::Real(b)) => assert_eq!(a, b),
            _ => panic!("expected real matrices"),
        }
    }

    #[test]
    fn weight_on_non_edge_is_rejected() {
        let g = gen("path:3");
        let w = EdgeWeights::real([((0, 2), 1.0)]);
        assert!(matches!(
            build_matrix(&g, &MatrixKind::WeightedAdjacency(w)),
            Err(Error::WeightOnNonEdge { v: 0, w: 2 })
        ));
    }

    #[test]
    fn c5_adjacency_closed_form() {
        // Eigenvalues are 2cos(2 pi j / 5): 2, (sqrt(5)-1)/2 twice,
        // -(sqrt(5)+1)/2 twice.
        let g = gen("cycle:5");
        let s = inertia(&g, None).unwrap();
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert_close(
            &s.eigenvalues,
            &[2.0, phi - 1.0, phi - 1.0, -phi, -phi],
            1e-9,
        );
        assert_eq!(
            s.inertia,
            Inertia { positive: 3, zero: 0, negative: 2 }
        );
        assert!(!s.borderline);
    }

    #[test]
    fn omega4_spectrum_and_inertia() {
        let g = gen("orthogonality:4");
        let s = inertia(&g, None).unwrap();
        let mut expected = vec![6.0, 6.0];
        expected.extend(std::iter::repeat_n(0.0, 8));
        expected.extend(std::iter::repeat_n(-2.0, 6));
        assert_close(&s.eigenvalues, &expected, 1e-8);
        assert_eq!(
            s.inertia,
            Inertia { positive: 2, zero: 8, negative: 6 }
        );
    }

    #[test]
    fn clebsch_spectrum_and_inertia() {
        let g = gen("folded-cube:5");
        let s = inertia(&g, None).unwrap();
        let mut expected = vec![5.0];
        expected.extend(std::iter::repeat_n(1.0, 10));
        expected.extend(std::iter::repeat_n(-3.0, 5));
        assert_close(&s.eigenvalues, &expected, 1e-8);
        assert_eq!(
            s.inertia,
            Inertia { positive: 11, zero: 0, negative: 5 }
        );
    }

    #[test]
    fn folded_7_cube_spectrum() {
        let g = gen("folded-cube:7");
        let s = inertia(&g, None).unwrap();
        let mut expected = vec![7.0];
        expected.extend(std::iter::repeat_n(3.0, 21));
        expected.extend(std::iter::repeat_n(-1.0, 35));
        expected.extend(std::iter::repeat_n(-5.0, 7));
        assert_close(&s.eigenvalues, &expected, 1e-8);
        assert_eq!(
            s.inertia,
            Inertia { positive: 22, zero: 0, negative: 42 }
        );
    }

    #[test]
    fn psd_split_k2_closed_form() {
        let g = Graph::complete(2).unwrap();
        let split = psd_split(&g).unwrap();
        for (i, j, b, c) in [
            (0, 0, 0.5, 0.5),
            (0, 1, 0.5, -0.5),
            (1, 0, 0.5, -0.5),
            (1, 1, 0.5, 0.5),
        ] {
            assert!((split.b[(i, j)] - b).abs() < 1e-12);
            assert!((split.c[(i, j)] - c).abs() < 1e-12);
        }
    }

    #[test]
    fn psd_split_reconstructs_adjacency() {
        for spec in ["cycle:5", "kneser:5,2", "complete:4", "path:6"] {
            let g = gen(spec);
            let split = psd_split(&g).unwrap();
            let a = match build_matrix(&g, &MatrixKind::Adjacency).unwrap() {
                HermitianMatrix::Real(a) => a,
                _ => unreachable!(),
            };
            let diff = &split.b - &split.c - &a;
            assert!(diff.amax() < 1e-9, "{spec}");
            // Projector laws.
            let pp = &split.p_plus;
            assert!((pp * pp - pp).amax() < 1e-10, "{spec}");
            assert!((pp - &pp.transpose()).amax() < 1e-10, "{spec}");
            let pm = &split.p_minus;
            assert!((pm * pm - pm).amax() < 1e-10, "{spec}");
            // B = P+ A P+ and C = -P- A P-.
            assert!((pp * &a * pp - &split.b).amax() < 1e-9, "{spec}");
            assert!((-(pm * &a * pm) - &split.c).amax() < 1e-9, "{spec}");
            // Ranks match the inertia.
            assert_eq!(
                hermitian_rank(&HermitianMatrix::Real(split.b.clone())).unwrap(),
                split.inertia.positive,
                "{spec}"
            );
            assert_eq!(
                hermitian_rank(&HermitianMatrix::Real(split.c.clone())).unwrap(),
                split.inertia.negative,
                "{spec}"
            );
        }
    }

    #[test]
    fn psd_split_of_empty_graph_is_zero() {
        let g = Graph::empty(3).unwrap();
        let split = psd_split(&g).unwrap();
        assert_eq!(split.b.amax(), 0.0);
        assert_eq!(split.c.amax(), 0.0);
    }

    #[test]
    fn borderline_flag_fires_near_tolerance() {
        // K2 with edge weight 1e-7 has eigenvalues +-1e-7; the default
        // tolerance is 1e-7, so classification is flagged as borderline.
        let g = Graph::complete(2).unwrap();
        let w = EdgeWeights::real([((0, 1), 1e-7)]);
        let s = spectrum(&g, &MatrixKind::WeightedAdjacency(w), None).unwrap();
        assert!(s.borderline);
    }

    #[test]
    fn explicit_tolerance_reclassifies() {
        // With tol = 1.0 the C5 eigenvalues 0.618... count as zero.
        let g = gen("cycle:5");
        let s = spectrum(&g, &MatrixKind::Adjacency, Some(1.0)).unwrap();
        assert_eq!(
            s.inertia,
            Inertia { positive: 1, zero: 2, negative: 2 }
        );
        assert!(s.borderline);
        assert!(spectrum(&g, &MatrixKind::Adjacency, Some(-2.0)).is_err());
    }

    #[test]
    fn non_hermitian_input_is_rejected() {
        let mut m = DMatrix::<f64>::zeros(2, 2);
        m[(0, 1)] = 1.0;
        m[(1, 0)] = 0.5;
        assert!(matches!(
            eigendecompose(&HermitianMatrix::Real(m)),
            Err(Error::NotHermitian(_))
        ));
    }

    #[test]
    fn regular_graph_spectral_correspondences() {
        // For k-regular graphs, L = kI - A and Q = kI + A, so
        // theta_i = k - mu_{n+1-i} and delta_i = k + mu_i.
        for spec in ["cycle:5", "kneser:5,2", "folded-cube:5"] {
            let g = gen(spec);
            let k = g.regularity().expect("regular family") as f64;
            let a = inertia(&g, None).unwrap();
            let l = spectrum(&g, &MatrixKind::Laplacian, None).unwrap();
            let q = spectrum(&g, &MatrixKind::SignlessLaplacian, None).unwrap();
            let n = g.n();
            for i in 0..n {
                assert!((l.eigenvalues[i] - (k - a.eigenvalues[n - 1 - i])).abs() < 1e-8);
                assert!((q.eigenvalues[i] - (k + a.eigenvalues[i])).abs() < 1e-8);
            }
        }
    }
}
