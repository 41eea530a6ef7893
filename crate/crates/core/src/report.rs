//! Report documents: one graph in, spectra + bounds + oracles + search out,
//! with named consistency checks and deterministic JSON emission.

use num_rational::BigRational;
use num_traits::FromPrimitive;
use serde::{Deserialize, Serialize};

use crate::bounds::{bound_set, optimize_weighted_hoffman, BoundSet, WeightMode};
use crate::error::Result;
use crate::exact::{exact_params, rational_string, Budgeted, ExactParams, LP_VERTEX_LIMIT};
use crate::families::FamilySpec;
use crate::graph::Graph;
use crate::graph6::serialize_graph6;
use crate::reps::certificates::CertificateFile;
use crate::reps::{xi_interval, xi_lower_bound, SearchConfig};
use crate::spectral::{spectrum, MatrixKind, Spectrum};

/// Options echoed into `meta` so reports are reproducible from their own
/// header.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub seed: u64,
    pub tol_zero: Option<f64>,
    pub restarts: usize,
    pub max_iters: usize,
    /// Oracles run only when `n` is at most this.
    pub max_n_exact: usize,
    pub node_budget: u64,
    /// Representation search runs only when `n` is at most this.
    pub search_max_n: usize,
    pub dimension_max: usize,
    pub weighted: bool,
    pub weighted_iters: usize,
    pub run_exact: bool,
    pub run_xi: bool,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            seed: 1,
            tol_zero: None,
            restarts: 32,
            max_iters: 2000,
            max_n_exact: 20,
            node_budget: crate::exact::DEFAULT_NODE_BUDGET,
            search_max_n: 20,
            dimension_max: 8,
            weighted: false,
            weighted_iters: 120,
            run_exact: true,
            run_xi: true,
        }
    }
}

/// Rounds to 9 significant digits; all floats in a document pass through
/// this so repeated runs emit byte-identical JSON.
fn sig9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().expect("formatted float parses")
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GraphSection {
    pub name: Option<String>,
    pub n: usize,
    pub m: usize,
    pub family: Option<String>,
    pub graph6: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SpectrumSection {
    pub matrix: String,
    pub eigenvalues: Vec<f64>,
    /// `[n+, n0, n-]`.
    pub inertia: [usize; 3],
    pub zero_tolerance: f64,
    pub borderline: bool,
}

impl SpectrumSection {
    fn from_spectrum(s: &Spectrum) -> Self {
        SpectrumSection {
            matrix: s.kind.label().to_string(),
            eigenvalues: s.eigenvalues.iter().map(|&x| sig9(x)).collect(),
            inertia: [s.inertia.positive, s.inertia.zero, s.inertia.negative],
            zero_tolerance: sig9(s.zero_tolerance),
            borderline: s.borderline,
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct GeneralizedEntrySection {
    pub shift: String,
    pub value: f64,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WeightEntrySection {
    pub v: u32,
    pub w: u32,
    pub weight: [f64; 2],
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct WeightedHoffmanSection {
    pub value: f64,
    pub restarts: usize,
    pub iters: usize,
    pub weights: Vec<WeightEntrySection>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundsSection {
    pub hoffman: f64,
    pub lima: f64,
    pub kolotilina: f64,
    /// Exact rationals as `p/q` strings.
    pub inertial: String,
    pub weaker_inertial: String,
    /// True for edgeless graphs, where every bound is 1 by convention.
    pub degenerate: bool,
    /// What each bound lower-bounds; reports never compare a value against
    /// a parameter outside its tag.
    pub targets: std::collections::BTreeMap<String, String>,
    /// Lower bound on the fractional chromatic number via the chain
    /// `weaker_inertial <= xi_f <= chi_f`; absent for edgeless graphs.
    pub chi_f_lower: Option<String>,
    pub generalized: Option<Vec<GeneralizedEntrySection>>,
    pub weighted_hoffman: Option<WeightedHoffmanSection>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct OracleSection {
    pub status: String,
    pub value: Option<u32>,
    pub lower: Option<u32>,
    pub upper: Option<u32>,
    pub nodes: Option<u64>,
}

impl OracleSection {
    fn from_budgeted(b: &Budgeted<u32>) -> Self {
        match b {
            Budgeted::Exact(v) => OracleSection {
                status: "exact".into(),
                value: Some(*v),
                lower: None,
                upper: None,
                nodes: None,
            },
            Budgeted::Inconclusive { lower, upper, nodes } => OracleSection {
                status: "inconclusive".into(),
                value: None,
                lower: Some(*lower),
                upper: Some(*upper),
                nodes: Some(*nodes),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ExactSection {
    pub chi: OracleSection,
    pub omega: OracleSection,
    pub alpha: OracleSection,
    pub chi_f: Option<String>,
    pub chi_f_skipped: Option<String>,
    pub node_budget: u64,
    pub lp_vertex_limit: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct XiSection {
    pub lower: f64,
    pub lower_exact: Option<String>,
    pub lower_source: String,
    pub lower_ceiling: u32,
    pub upper: Option<u32>,
    pub searched: bool,
    pub skip_reason: Option<String>,
    pub certificate: Option<CertificateFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct CheckSection {
    pub name: String,
    /// "pass", "fail" or "skipped"; skipped checks say why in `detail`.
    pub status: String,
    pub detail: String,
}

impl CheckSection {
    fn pass(name: &str, detail: String) -> Self {
        CheckSection {
            name: name.into(),
            status: "pass".into(),
            detail,
        }
    }

    fn fail(name: &str, detail: String) -> Self {
        CheckSection {
            name: name.into(),
            status: "fail".into(),
            detail,
        }
    }

    fn skipped(name: &str, reason: &str) -> Self {
        CheckSection {
            name: name.into(),
            status: "skipped".into(),
            detail: reason.into(),
        }
    }

    fn verdict(name: &str, ok: bool, detail: String) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MetaSection {
    pub version: String,
    pub seed: u64,
    pub tol_zero: Option<f64>,
    pub restarts: usize,
    pub max_iters: usize,
    pub max_n_exact: usize,
    pub dimension_max: usize,
    pub weighted: bool,
}

/// Parameters the tool deliberately does not compute; reports state this
/// rather than leaving the absence ambiguous.
pub const SCOPE_NOTES: &[&str] = &[
    "theta, theta+, chi_vect, chi_v and quantum chromatic numbers require semidefinite programming and are not computed; chi_vect is only lower-bounded",
    "chromatic parameters of Omega(n) grow exponentially in n and are computed only within the oracle size limits",
];

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ReportDocument {
    pub graph: GraphSection,
    pub spectra: Vec<SpectrumSection>,
    pub bounds: BoundsSection,
    pub exact: Option<ExactSection>,
    pub xi: XiSection,
    pub checks: Vec<CheckSection>,
    pub out_of_scope: Vec<String>,
    pub meta: MetaSection,
}

impl ReportDocument {
    pub fn has_soundness_failure(&self) -> bool {
        self.checks.iter().any(|c| c.status == "fail")
    }

    pub fn budget_exhausted(&self) -> bool {
        self.exact.as_ref().is_some_and(|e| {
            [&e.chi, &e.omega, &e.alpha]
                .iter()
                .any(|o| o.status == "inconclusive")
        })
    }
}

fn bounds_section(set: &BoundSet, weighted: Option<WeightedHoffmanSection>) -> BoundsSection {
    let targets = BoundSet::targets()
        .iter()
        .map(|(name, t)| (name.to_string(), t.label().to_string()))
        .collect();
    BoundsSection {
        hoffman: sig9(set.hoffman.value),
        lima: sig9(set.lima.value),
        kolotilina: sig9(set.kolotilina.value),
        inertial: rational_string(&set.inertial.value),
        weaker_inertial: rational_string(&set.weaker_inertial.value),
        degenerate: set.hoffman.degenerate,
        targets,
        chi_f_lower: (!set.weaker_inertial.degenerate)
            .then(|| rational_string(&set.weaker_inertial.value)),
        generalized: set.generalized.as_ref().map(|entries| {
            entries
                .iter()
                .map(|(shift, value)| GeneralizedEntrySection {
                    shift: shift.clone(),
                    value: sig9(*value),
                })
                .collect()
        }),
        weighted_hoffman: weighted,
    }
}

fn build_checks(
    g: &Graph,
    set: &BoundSet,
    exact: Option<&ExactParams>,
    xi: &XiSection,
) -> Vec<CheckSection> {
    let mut checks = Vec::new();
    if g.m() == 0 {
        for name in [
            "hoffman<=chi",
            "lima<=chi",
            "kolotilina<=chi",
            "inertial<=chi",
            "inertial<=xi_upper",
            "weaker_inertial<=chi_f",
            "weaker<=inertial",
            "regular_collapse",
            "interval_consistency",
        ] {
            checks.push(CheckSection::skipped(name, "degenerate: edgeless graph"));
        }
        return checks;
    }

    let chi = exact.and_then(|e| e.chi.exact());
    let float_bounds = [
        ("hoffman<=chi", set.hoffman.value),
        ("lima<=chi", set.lima.value),
        ("kolotilina<=chi", set.kolotilina.value),
    ];
    for (name, value) in float_bounds {
        match chi {
            Some(chi) => checks.push(CheckSection::verdict(
                name,
                value <= chi as f64 + 1e-9,
                format!("{} <= {chi}", sig9(value)),
            )),
            None => checks.push(CheckSection::skipped(name, "chi not computed")),
        }
    }
    match chi {
        Some(chi) => {
            let chi_r = BigRational::from_u32(chi).expect("u32 fits");
            checks.push(CheckSection::verdict(
                "inertial<=chi",
                set.inertial.value <= chi_r,
                format!("{} <= {chi}", rational_string(&set.inertial.value)),
            ));
        }
        None => checks.push(CheckSection::skipped("inertial<=chi", "chi not computed")),
    }

    match xi.upper {
        Some(upper) => {
            let upper_r = BigRational::from_u32(upper).expect("u32 fits");
            checks.push(CheckSection::verdict(
                "inertial<=xi_upper",
                set.inertial.value <= upper_r,
                format!("{} <= {upper}", rational_string(&set.inertial.value)),
            ));
        }
        None => checks.push(CheckSection::skipped(
            "inertial<=xi_upper",
            "no certificate found or search skipped",
        )),
    }

    match exact.and_then(|e| e.chi_f.as_ref()) {
        Some(chi_f) => {
            checks.push(CheckSection::verdict(
                "weaker_inertial<=chi_f",
                set.weaker_inertial.value <= chi_f.value,
                format!(
                    "{} <= {}",
                    rational_string(&set.weaker_inertial.value),
                    rational_string(&chi_f.value)
                ),
            ));
        }
        None => checks.push(CheckSection::skipped(
            "weaker_inertial<=chi_f",
            "chi_f not computed",
        )),
    }

    checks.push(CheckSection::verdict(
        "weaker<=inertial",
        set.weaker_inertial.value <= set.inertial.value,
        format!(
            "{} <= {}",
            rational_string(&set.weaker_inertial.value),
            rational_string(&set.inertial.value)
        ),
    ));

    if g.regularity().is_some() {
        let h = set.hoffman.value;
        let ok = (h - set.lima.value).abs() < 1e-8 && (h - set.kolotilina.value).abs() < 1e-8;
        checks.push(CheckSection::verdict(
            "regular_collapse",
            ok,
            format!(
                "hoffman {} lima {} kolotilina {}",
                sig9(h),
                sig9(set.lima.value),
                sig9(set.kolotilina.value)
            ),
        ));
    } else {
        checks.push(CheckSection::skipped("regular_collapse", "graph is not regular"));
    }

    match xi.upper {
        Some(upper) => checks.push(CheckSection::verdict(
            "interval_consistency",
            xi.lower_ceiling <= upper,
            format!("ceil(lower) {} <= upper {upper}", xi.lower_ceiling),
        )),
        None => checks.push(CheckSection::skipped(
            "interval_consistency",
            "no upper bound available",
        )),
    }

    if let Some(exact) = exact {
        let omega = exact.omega.exact();
        let chi_f = exact.chi_f.as_ref();
        match (omega, chi_f) {
            (Some(omega), Some(chi_f)) => {
                let omega_r = BigRational::from_u32(omega).expect("u32 fits");
                checks.push(CheckSection::verdict(
                    "omega<=chi_f",
                    omega_r <= chi_f.value,
                    format!("{omega} <= {}", rational_string(&chi_f.value)),
                ));
            }
            _ => checks.push(CheckSection::skipped("omega<=chi_f", "oracle values missing")),
        }
        match (chi, chi_f) {
            (Some(chi), Some(chi_f)) => {
                let chi_r = BigRational::from_u32(chi).expect("u32 fits");
                checks.push(CheckSection::verdict(
                    "chi_f<=chi",
                    chi_f.value <= chi_r,
                    format!("{} <= {chi}", rational_string(&chi_f.value)),
                ));
            }
            _ => checks.push(CheckSection::skipped("chi_f<=chi", "oracle values missing")),
        }
        match (exact.alpha.exact(), chi_f) {
            (Some(alpha), Some(chi_f)) if alpha > 0 => {
                let n_over_alpha =
                    BigRational::new((g.n() as i64).into(), (alpha as i64).into());
                checks.push(CheckSection::verdict(
                    "chi_f>=n/alpha",
                    chi_f.value >= n_over_alpha,
                    format!(
                        "{} >= {}",
                        rational_string(&chi_f.value),
                        rational_string(&n_over_alpha)
                    ),
                ));
            }
            _ => checks.push(CheckSection::skipped("chi_f>=n/alpha", "oracle values missing")),
        }
    }

    checks
}

/// Runs the configured battery on one graph.
pub fn run_report(
    g: &Graph,
    family: Option<&FamilySpec>,
    opts: &ReportOptions,
) -> Result<ReportDocument> {
    let s_adj = spectrum(g, &MatrixKind::Adjacency, opts.tol_zero)?;
    let s_lap = spectrum(g, &MatrixKind::Laplacian, opts.tol_zero)?;
    let s_q = spectrum(g, &MatrixKind::SignlessLaplacian, opts.tol_zero)?;

    let set = bound_set(g, opts.tol_zero)?;
    let weighted = if opts.weighted && g.m() > 0 {
        let found = optimize_weighted_hoffman(
            g,
            opts.seed,
            opts.weighted_iters,
            opts.restarts.min(8),
            WeightMode::Real,
        )?;
        Some(WeightedHoffmanSection {
            value: sig9(found.value),
            restarts: found.restarts,
            iters: found.iters,
            weights: found
                .weights
                .iter()
                .map(|(&(v, w), z)| WeightEntrySection {
                    v,
                    w,
                    weight: [z.re, z.im],
                })
                .collect(),
        })
    } else {
        None
    };

    let exact = if opts.run_exact && g.n() <= opts.max_n_exact && g.n() <= 64 {
        Some(exact_params(g, opts.node_budget)?)
    } else {
        None
    };
    let exact_section = exact.as_ref().map(|e| ExactSection {
        chi: OracleSection::from_budgeted(&e.chi),
        omega: OracleSection::from_budgeted(&e.omega),
        alpha: OracleSection::from_budgeted(&e.alpha),
        chi_f: e.chi_f.as_ref().map(|f| rational_string(&f.value)),
        chi_f_skipped: e.chi_f.is_none().then(|| {
            format!("n={} exceeds the LP limit {LP_VERTEX_LIMIT}", g.n())
        }),
        node_budget: e.limits.node_budget,
        lp_vertex_limit: e.limits.lp_vertex_limit,
    });

    let xi_section = if opts.run_xi && g.n() <= opts.search_max_n {
        let cfg = SearchConfig {
            restarts: opts.restarts,
            max_iters: opts.max_iters,
            seed: opts.seed,
            success_tolerance: 1e-9,
            dimension_range: (1, opts.dimension_max.clamp(1, g.n().max(1))),
        };
        let interval = xi_interval(g, &cfg)?;
        XiSection {
            lower: sig9(interval.lower_value),
            lower_exact: interval.lower_exact.as_ref().map(rational_string),
            lower_source: interval.lower_source.to_string(),
            lower_ceiling: interval.lower_ceiling,
            upper: interval.upper,
            searched: true,
            skip_reason: None,
            certificate: interval
                .certificate
                .as_ref()
                .map(|rep| CertificateFile::from_ortho(rep, Some(g))),
        }
    } else {
        let lower = xi_lower_bound(g, &s_adj, &s_lap, &s_q)?;
        XiSection {
            lower: sig9(lower.value),
            lower_exact: lower.exact.as_ref().map(rational_string),
            lower_source: lower.source.to_string(),
            lower_ceiling: lower.ceiling,
            upper: None,
            searched: false,
            skip_reason: Some(if opts.run_xi {
                format!("n={} exceeds the search limit {}", g.n(), opts.search_max_n)
            } else {
                "search disabled".to_string()
            }),
            certificate: None,
        }
    };

    let checks = build_checks(g, &set, exact.as_ref(), &xi_section);

    Ok(ReportDocument {
        graph: GraphSection {
            name: g.name().map(str::to_string),
            n: g.n(),
            m: g.m(),
            family: family.map(|f| f.to_string()),
            graph6: serialize_graph6(g),
        },
        spectra: vec![
            SpectrumSection::from_spectrum(&s_adj),
            SpectrumSection::from_spectrum(&s_lap),
            SpectrumSection::from_spectrum(&s_q),
        ],
        bounds: bounds_section(&set, weighted),
        exact: exact_section,
        xi: xi_section,
        checks,
        out_of_scope: SCOPE_NOTES.iter().map(|s| s.to_string()).collect(),
        meta: MetaSection {
            version: env!("CARGO_PKG_VERSION").to_string(),
            seed: opts.seed,
            tol_zero: opts.tol_zero,
            restarts: opts.restarts,
            max_iters: opts.max_iters,
            max_n_exact: opts.max_n_exact,
            dimension_max: opts.dimension_max,
            weighted: opts.weighted,
        },
    })
}

/// Output format for [`emit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EmitFormat {
    Json,
    Table,
}

/// Renders a document in the requested format.
pub fn emit(doc: &ReportDocument, format: EmitFormat) -> Result<String> {
    match format {
        EmitFormat::Json => emit_json(doc),
        EmitFormat::Table => Ok(emit_table(doc)),
    }
}

/// Deterministic JSON: struct field order, floats pre-rounded to 9
/// significant digits.
pub fn emit_json(doc: &ReportDocument) -> Result<String> {
    Ok(serde_json::to_string_pretty(doc)?)
}

/// Groups eigenvalues into `value x multiplicity` runs at display
/// precision.
fn group_eigenvalues(values: &[f64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < values.len() {
        let mut j = i + 1;
        while j < values.len() && (values[j] - values[i]).abs() < 1e-6 {
            j += 1;
        }
        // Snap values that display as zero, so -1e-16 prints as 0.000000.
        let shown = if values[i].abs() < 5e-7 { 0.0 } else { values[i] };
        if j - i > 1 {
            parts.push(format!("{shown:.6}x{}", j - i));
        } else {
            parts.push(format!("{shown:.6}"));
        }
        i = j;
    }
    parts.join(", ")
}

/// Aligned human-readable summary.
pub fn emit_table(doc: &ReportDocument) -> String {
    let mut out = String::new();
    let g = &doc.graph;
    let name = g.name.as_deref().unwrap_or("(unnamed)");
    let family = g
        .family
        .as_deref()
        .map(|f| format!("  [{f}]"))
        .unwrap_or_default();
    out.push_str(&format!(
        "graph     : {name} (n={}, m={}){family}  graph6 {}\n",
        g.n, g.m, g.graph6
    ));
    for s in &doc.spectra {
        out.push_str(&format!(
            "{:<10}: {}  inertia ({}, {}, {}){}\n",
            s.matrix,
            group_eigenvalues(&s.eigenvalues),
            s.inertia[0],
            s.inertia[1],
            s.inertia[2],
            if s.borderline { "  [borderline]" } else { "" }
        ));
    }
    let b = &doc.bounds;
    out.push_str(&format!(
        "bounds    : hoffman {:.6}  lima {:.6}  kolotilina {:.6}  (-> {})\n",
        b.hoffman,
        b.lima,
        b.kolotilina,
        b.targets.get("hoffman").map(String::as_str).unwrap_or("?")
    ));
    out.push_str(&format!(
        "            inertial {} (-> {})  weaker {} (-> {})\n",
        b.inertial,
        b.targets.get("inertial").map(String::as_str).unwrap_or("?"),
        b.weaker_inertial,
        b.targets.get("weaker_inertial").map(String::as_str).unwrap_or("?")
    ));
    if let Some(chi_f_lower) = &b.chi_f_lower {
        out.push_str(&format!("            chi_f >= {chi_f_lower} (via xi_f <= chi_f)\n"));
    }
    if let Some(wh) = &b.weighted_hoffman {
        out.push_str(&format!(
            "            weighted hoffman {:.6} ({} restarts x {} iters)\n",
            wh.value, wh.restarts, wh.iters
        ));
    }
    if let Some(e) = &doc.exact {
        let show = |o: &OracleSection| match o.status.as_str() {
            "exact" => o.value.map(|v| v.to_string()).unwrap_or_default(),
            _ => format!("[{}..{}]", o.lower.unwrap_or(0), o.upper.unwrap_or(0)),
        };
        out.push_str(&format!(
            "exact     : chi {}  omega {}  alpha {}  chi_f {}\n",
            show(&e.chi),
            show(&e.omega),
            show(&e.alpha),
            e.chi_f.as_deref().unwrap_or("(skipped)")
        ));
    }
    let xi = &doc.xi;
    let lower = xi
        .lower_exact
        .clone()
        .unwrap_or_else(|| format!("{:.6}", xi.lower));
    let upper = xi
        .upper
        .map(|u| u.to_string())
        .unwrap_or_else(|| "?".to_string());
    out.push_str(&format!(
        "xi        : lower {lower} ({}) -> ceil {}  upper {upper}{}\n",
        xi.lower_source,
        xi.lower_ceiling,
        xi.skip_reason
            .as_deref()
            .map(|r| format!("  [{r}]"))
            .unwrap_or_default()
    ));
    let pass = doc.checks.iter().filter(|c| c.status == "pass").count();
    let fail = doc.checks.iter().filter(|c| c.status == "fail").count();
    let skipped = doc.checks.iter().filter(|c| c.status == "skipped").count();
    out.push_str(&format!("checks    : {pass} pass, {fail} fail, {skipped} skipped\n"));
    for c in &doc.checks {
        if c.status == "fail" {
            out.push_str(&format!("  FAIL {}: {}\n", c.name, c.detail));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::generate;

    fn quick_opts() -> ReportOptions {
        ReportOptions {
            restarts: 16,
            max_iters: 800,
            ..ReportOptions::default()
        }
    }

    fn family(s: &str) -> (Graph, FamilySpec) {
        let spec: FamilySpec = s.parse().unwrap();
        (generate(&spec).unwrap(), spec)
    }

    #[test]
    fn c5_report_matches_the_catalogue_row() {
        let (g, spec) = family("cycle:5");
        let doc = run_report(&g, Some(&spec), &quick_opts()).unwrap();
        assert_eq!(doc.spectra[0].inertia, [3, 0, 2]);
        assert!((doc.bounds.hoffman - 2.23606798).abs() < 1e-6);
        assert_eq!(doc.bounds.inertial, "5/2");
        let exact = doc.exact.as_ref().unwrap();
        assert_eq!(exact.chi.value, Some(3));
        assert_eq!(exact.chi_f.as_deref(), Some("5/2"));
        assert_eq!(doc.xi.lower_exact.as_deref(), Some("5/2"));
        assert_eq!(doc.xi.upper, Some(3));
        assert!(!doc.has_soundness_failure());
        assert!(doc.checks.iter().all(|c| c.status != "fail"));
    }

    #[test]
    fn folded_7_cube_report() {
        let (g, spec) = family("folded-cube:7");
        let doc = run_report(&g, Some(&spec), &quick_opts()).unwrap();
        assert_eq!(doc.spectra[0].inertia, [22, 0, 42]);
        assert_eq!(doc.bounds.inertial, "32/11");
        assert_eq!(doc.bounds.chi_f_lower.as_deref(), Some("32/11"));
        // Oracles and search are out of range at n=64.
        assert!(doc.exact.is_none());
        assert!(!doc.xi.searched);
        assert!(!doc.has_soundness_failure());
    }

    #[test]
    fn empty_graph_report_is_degenerate_and_skipped() {
        let g = Graph::empty(3).unwrap();
        let doc = run_report(&g, None, &quick_opts()).unwrap();
        assert_eq!(doc.bounds.hoffman, 1.0);
        assert_eq!(doc.bounds.inertial, "1");
        assert!(doc.bounds.degenerate);
        assert!(doc.checks.iter().all(|c| c.status == "skipped"));
        assert!(!doc.has_soundness_failure());
    }

    #[test]
    fn json_emission_is_deterministic_and_round_trips() {
        let (g, spec) = family("cycle:5");
        let opts = quick_opts();
        let a = emit_json(&run_report(&g, Some(&spec), &opts).unwrap()).unwrap();
        let b = emit_json(&run_report(&g, Some(&spec), &opts).unwrap()).unwrap();
        assert_eq!(a, b, "reports must be byte-identical across runs");
        let parsed: ReportDocument = serde_json::from_str(&a).unwrap();
        assert_eq!(emit_json(&parsed).unwrap(), a);
    }

    #[test]
    fn clebsch_json_contains_the_shared_value() {
        let (g, spec) = family("folded-cube:5");
        let opts = ReportOptions {
            run_xi: false,
            ..quick_opts()
        };
        let doc = run_report(&g, Some(&spec), &opts).unwrap();
        let json = emit_json(&doc).unwrap();
        assert!(json.contains("\"inertial\": \"16/5\""));
        assert_eq!(doc.exact.as_ref().unwrap().chi_f.as_deref(), Some("16/5"));
        assert_eq!(doc.exact.as_ref().unwrap().alpha.value, Some(5));
    }

    #[test]
    fn table_output_mentions_the_inertial_bound() {
        let (g, spec) = family("cycle:5");
        let doc = run_report(&g, Some(&spec), &quick_opts()).unwrap();
        let table = emit_table(&doc);
        assert!(table.contains("inertial 5/2"));
        assert!(table.contains("C5"));
    }
}
