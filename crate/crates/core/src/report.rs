//! The analysis pipeline and its report record.
//!
//! parse → shifts → principal part → ellipticity → resolution →
//! characteristic variety → dual-complex homology → Ω → verdict.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::charvar::{char_variety, classify, removability_query, Removability, Verdict};
use crate::flagcover::{radius_chain, RadiusReport};
use crate::omega::{build_omega, omega_positivity, PositivityReport};
use crate::poly::{rat, GaussPoly};
use crate::resolution::{build_resolution, dualize, ext_vanishing, Homology};
use crate::sampling::{small_box_points, DEFAULT_SEED};
use crate::symbol::{ellipticity_check, EllipticityReport, ShiftedMatrix, Tier};
use crate::sysparse::{emit, parse, ParseError, SystemSpec};

/// Bumped whenever a field of [`AnalysisReport`] changes meaning or name.
pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{stage}: {msg}")]
    Stage { stage: &'static str, msg: String },
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("unknown catalog system `{0}`")]
    UnknownSystem(String),
}

fn stage<E: std::fmt::Display>(stage: &'static str) -> impl FnOnce(E) -> AnalysisError {
    move |e| AnalysisError::Stage { stage, msg: e.to_string() }
}

#[derive(Clone, Debug)]
pub struct AnalysisOptions {
    pub seed: u64,
    pub samples: usize,
    /// Defaults to the number of variables.
    pub max_res_len: Option<usize>,
    pub query_dims: Vec<i64>,
    pub omega: bool,
    pub flagcover: bool,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions {
            seed: DEFAULT_SEED,
            samples: 1000,
            max_res_len: None,
            query_dims: Vec::new(),
            omega: true,
            flagcover: true,
        }
    }
}

pub const CATALOG: &[(&str, &str, &str)] = &[
    ("cr1", "Cauchy-Riemann operator in R^2", "name cr1;\nvars 2;\nunknowns 1;\neq d1 + i*d2;\n"),
    ("cr2", "Cauchy-Riemann system in R^4", "name cr2;\nvars 4;\nunknowns 1;\neq d1 + i*d2;\neq d3 + i*d4;\n"),
    (
        "cr3",
        "Cauchy-Riemann system in R^6",
        "name cr3;\nvars 6;\nunknowns 1;\neq d1 + i*d2;\neq d3 + i*d4;\neq d5 + i*d6;\n",
    ),
    ("grad2", "gradient in R^2 (Koszul)", "name grad2;\nvars 2;\nunknowns 1;\neq d1;\neq d2;\n"),
    ("grad3", "gradient in R^3 (Koszul)", "name grad3;\nvars 3;\nunknowns 1;\neq d1;\neq d2;\neq d3;\n"),
    ("laplace2", "Laplacian in R^2", "name laplace2;\nvars 2;\nunknowns 1;\neq d1^2 + d2^2;\n"),
    ("wave2", "wave operator in R^2 (not elliptic)", "name wave2;\nvars 2;\nunknowns 1;\neq d1^2 - d2^2;\n"),
    (
        "example2_n3d1",
        "elliptic operator in (x2,x3) plus d/dx1",
        "name example2_n3d1;\nvars 3;\nunknowns 1;\neq d2^2 + d3^2;\neq d1;\n",
    ),
    (
        "example2_n4d1",
        "elliptic operator in (x2,x3,x4) plus d/dx1",
        "name example2_n4d1;\nvars 4;\nunknowns 1;\neq d2^2 + d3^2 + d4^2;\neq d1;\n",
    ),
    (
        "example2_n4d2",
        "elliptic operator in (x3,x4) plus d/dx1, d/dx2",
        "name example2_n4d2;\nvars 4;\nunknowns 1;\neq d3^2 + d4^2;\neq d1;\neq d2;\n",
    ),
];

pub fn catalog_source(name: &str) -> Option<&'static str> {
    CATALOG.iter().find(|(n, _, _)| *n == name).map(|(_, _, src)| *src)
}

pub fn catalog_spec(name: &str) -> Result<SystemSpec, AnalysisError> {
    let src = catalog_source(name).ok_or_else(|| AnalysisError::UnknownSystem(name.to_string()))?;
    Ok(parse(src)?)
}

#[derive(Clone, Debug, Serialize)]
pub struct SystemEcho {
    pub name: Option<String>,
    pub nvars: usize,
    pub nunknowns: usize,
    pub neqs: usize,
    pub source: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ShiftsUsed {
    pub sigma: Vec<i64>,
    pub rho: Vec<i64>,
    pub declared: bool,
    /// Lower-order terms were dropped to get the principal part.
    pub lower_order_dropped: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResolutionSummary {
    pub ranks: Vec<usize>,
    pub shifts: Vec<Vec<i64>>,
    pub length: usize,
    pub syzygy_steps: usize,
    pub truncated: bool,
    pub max_len: usize,
    pub matrices: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharVarietySummary {
    pub minors: Vec<String>,
    pub groebner: Vec<String>,
    pub dim: i64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExtEntry {
    pub k: usize,
    #[serde(flatten)]
    pub homology: Homology,
}

#[derive(Clone, Debug, Serialize)]
pub struct OmegaSummary {
    pub matrix: Vec<Vec<String>>,
    pub shift: Vec<i64>,
    #[serde(flatten)]
    pub positivity: PositivityReport,
}

#[derive(Clone, Debug, Serialize)]
pub struct QueryAnswer {
    pub dim: i64,
    pub answer: Removability,
}

/// `holds` is `None` when the check could not be decided (for instance on a
/// truncated resolution).
#[derive(Clone, Debug, Serialize)]
pub struct InvariantCheck {
    pub name: &'static str,
    pub holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct AnalysisReport {
    pub schema_version: u32,
    pub tool_version: &'static str,
    pub seed: u64,
    pub samples: usize,
    pub system: SystemEcho,
    pub shifts: ShiftsUsed,
    pub ellipticity: EllipticityReport,
    pub resolution: ResolutionSummary,
    pub char_variety: CharVarietySummary,
    pub m: i64,
    pub ext: Vec<ExtEntry>,
    pub omega: Option<OmegaSummary>,
    pub verdict: Verdict,
    pub removability: Vec<QueryAnswer>,
    pub radius_chain: Option<RadiusReport>,
    pub invariants: Vec<InvariantCheck>,
}

fn strings(rows: &[Vec<GaussPoly>]) -> Vec<Vec<String>> {
    rows.iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

pub fn analyze_source(text: &str, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    analyze(&parse(text)?, opts)
}

pub fn analyze_catalog(name: &str, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    analyze(&catalog_spec(name)?, opts)
}

pub fn analyze(spec: &SystemSpec, opts: &AnalysisOptions) -> Result<AnalysisReport, AnalysisError> {
    spec.validate()?;
    let n = spec.nvars;
    let full = ShiftedMatrix::from_spec(spec).map_err(stage("shifts"))?;
    let p0 = full.principal_part();
    let shifts = ShiftsUsed {
        sigma: p0.row_shifts().0.clone(),
        rho: p0.col_shifts().0.clone(),
        declared: spec.sigma.is_some(),
        lower_order_dropped: p0.rows() != full.rows(),
    };

    let ellipticity = ellipticity_check(std::slice::from_ref(&p0), opts.samples, opts.seed, Tier::Exact)
        .map_err(stage("ellipticity"))?;

    let max_len = opts.max_res_len.unwrap_or(n).max(1);
    let res = build_resolution(&p0, max_len).map_err(stage("resolution"))?;
    let dual = dualize(&res).map_err(stage("dual complex"))?;

    let cv = char_variety(&p0).map_err(stage("characteristic variety"))?;
    let verdict = classify(&cv, &ellipticity);
    let m = verdict.m;
    let upto = usize::try_from(m).unwrap_or(0).min(res.length() + 1);
    let homology = ext_vanishing(&dual, upto).map_err(stage("ext"))?;

    let mut invariants = Vec::new();
    let below_m: Vec<&Homology> = homology.entries.iter().take(usize::try_from(m).unwrap_or(0)).collect();
    let ext_ok = if below_m.iter().any(|h| matches!(h, Homology::Nontrivial { .. })) {
        Some(false)
    } else if below_m.iter().any(|h| matches!(h, Homology::Unknown)) {
        None
    } else {
        Some(true)
    };
    invariants.push(InvariantCheck { name: "dual complex exact below m", holds: ext_ok });
    invariants.push(InvariantCheck {
        name: "resolution length within n",
        holds: if res.truncated { None } else { Some(res.length() <= n.max(1)) },
    });
    invariants.push(InvariantCheck { name: "m = n - dim V", holds: Some(m == n as i64 - cv.dim) });
    let consistent =
        verdict.compact_removable <= (verdict.classification == crate::charvar::Classification::Overdetermined);
    invariants.push(InvariantCheck { name: "compact_removable implies overdetermined", holds: Some(consistent) });
    if ellipticity.is_elliptic() && !cv.minors.is_empty() {
        // a real zero of every minor would be a real characteristic covector
        let bound = if 5usize.pow(n as u32) <= 4000 { 2 } else { 1 };
        let clean = small_box_points(n, bound)
            .iter()
            .all(|pt| cv.minors.iter().any(|mi| !mi.eval_real(pt).expect("point length").is_zero()));
        invariants.push(InvariantCheck { name: "no real characteristic point in the box", holds: Some(clean) });
    }

    let omega = if opts.omega {
        let o = build_omega(&p0, res.steps.get(1)).map_err(stage("omega"))?;
        let positivity = omega_positivity(&o, opts.samples, opts.seed);
        invariants
            .push(InvariantCheck { name: "omega identity exact", holds: Some(positivity.identity_failures == 0) });
        if ellipticity.is_elliptic() {
            invariants.push(InvariantCheck {
                name: "elliptic implies omega definite",
                holds: Some(positivity.degenerate.is_none() && positivity.det_nonzero),
            });
        }
        Some(OmegaSummary { matrix: strings(&o.matrix), shift: o.shift.0.clone(), positivity })
    } else {
        None
    };

    let removability =
        opts.query_dims.iter().map(|&d| QueryAnswer { dim: d, answer: removability_query(&verdict, d) }).collect();

    let radius = (opts.flagcover && m >= 1).then(|| {
        let d = verdict.max_removable_submanifold_dim.max(1) as u32;
        radius_chain(m as u32, d.min(m as u32), &rat(1, 8))
    });

    let report = AnalysisReport {
        schema_version: SCHEMA_VERSION,
        tool_version: env!("CARGO_PKG_VERSION"),
        seed: opts.seed,
        samples: opts.samples,
        system: SystemEcho {
            name: spec.name.clone(),
            nvars: n,
            nunknowns: spec.nunknowns,
            neqs: spec.neqs(),
            source: emit(spec),
        },
        shifts,
        ellipticity,
        resolution: ResolutionSummary {
            ranks: res.ranks(),
            shifts: res.shifts().into_iter().map(|s| s.0).collect(),
            length: res.length(),
            syzygy_steps: res.syzygy_steps(),
            truncated: res.truncated,
            max_len,
            matrices: res.steps.iter().map(|s| strings(s.rows())).collect(),
        },
        char_variety: CharVarietySummary {
            minors: cv.minors.iter().map(ToString::to_string).collect(),
            groebner: cv.groebner.iter().map(ToString::to_string).collect(),
            dim: cv.dim,
        },
        m,
        ext: homology.entries.into_iter().enumerate().map(|(k, homology)| ExtEntry { k, homology }).collect(),
        omega,
        verdict,
        removability,
        radius_chain: radius,
        invariants,
    };
    if let Some(bad) = report.invariants.iter().find(|c| c.holds == Some(false)) {
        return Err(AnalysisError::Invariant(bad.name.to_string()));
    }
    Ok(report)
}

impl AnalysisReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn ext_status(&self, k: usize) -> Option<&Homology> {
        self.ext.get(k).map(|e| &e.homology)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let name = self.system.name.as_deref().unwrap_or("(unnamed)");
        let _ = writeln!(
            s,
            "system {name}: n = {}, unknowns = {}, equations = {}",
            self.system.nvars, self.system.nunknowns, self.system.neqs
        );
        let _ = writeln!(
            s,
            "shifts: sigma = {:?}, rho = {:?}{}",
            self.shifts.sigma,
            self.shifts.rho,
            if self.shifts.declared { "" } else { " (inferred)" }
        );
        let _ = writeln!(s, "ellipticity: {}", self.ellipticity.tier_name());
        match &self.ellipticity {
            EllipticityReport::NotElliptic { witness, rank, required } => {
                let w: Vec<String> = witness.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "  witness xi = ({}), rank {rank} < {required}", w.join(", "));
            }
            EllipticityReport::EllipticCertified { certificate } => {
                let t: Vec<String> = certificate.terms.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "  certificate: |minor|^2 terms {}", t.join(", "));
            }
            EllipticityReport::EllipticSampled { samples, min_defect, .. } => {
                let _ = writeln!(s, "  {samples} samples, minimum defect {min_defect:.3e}");
            }
            EllipticityReport::Inconclusive { defect, .. } => {
                let _ = writeln!(s, "  a sample reached defect {defect:.3e} without an exact witness");
            }
        }
        let r = &self.resolution;
        let _ = writeln!(
            s,
            "resolution: ranks {:?}, {} matrices{}",
            r.ranks,
            r.length,
            if r.truncated { " (truncated)" } else { "" }
        );
        let _ = writeln!(
            s,
            "characteristic variety: dim {} (ideal {})",
            self.char_variety.dim,
            self.char_variety.groebner.join(", ")
        );
        let _ = writeln!(s, "m = n - dim V = {}", self.m);
        let ext: Vec<String> = self.ext.iter().map(|e| format!("{}:{}", e.k, e.homology.label())).collect();
        let _ = writeln!(s, "dual complex homology: {}", ext.join(" "));
        if let Some(o) = &self.omega {
            let p = &o.positivity;
            let _ = writeln!(
                s,
                "omega: {}x{}, t = {}, identity failures {}/{}, {}",
                p.size,
                p.size,
                p.t,
                p.identity_failures,
                p.identity_pairs,
                match &p.degenerate {
                    Some(d) => {
                        let xi: Vec<String> = d.xi.iter().map(ToString::to_string).collect();
                        format!("degenerate at xi = ({})", xi.join(", "))
                    }
                    None => format!("definite at {} points", p.points_checked),
                }
            );
        }
        let v = &self.verdict;
        let _ = writeln!(
            s,
            "verdict: {}, compact singularities removable: {}",
            v.classification,
            if v.compact_removable { "yes" } else { "no" }
        );
        if v.max_removable_submanifold_dim >= 0 {
            let _ = writeln!(s, "  removable submanifolds up to dimension {}", v.max_removable_submanifold_dim);
        } else {
            let _ = writeln!(s, "  no removable submanifold dimension");
        }
        for note in &v.notes {
            let _ = writeln!(s, "  note: {note}");
        }
        for q in &self.removability {
            let _ = writeln!(s, "query dim {}: {}", q.dim, q.answer);
            if q.answer == Removability::SharpCounterexample {
                let _ = writeln!(s, "  {}", crate::charvar::SHARPNESS_NOTE);
            }
        }
        if let Some(rc) = &self.radius_chain {
            let _ = writeln!(
                s,
                "radius chain (c = {}, b = {}): {}",
                rc.c,
                rc.b,
                rc.first_failure.as_deref().unwrap_or("holds")
            );
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> AnalysisOptions {
        AnalysisOptions { samples: 50, ..AnalysisOptions::default() }
    }

    #[test]
    fn every_catalog_entry_parses() {
        for (name, _, _) in CATALOG {
            let spec = catalog_spec(name).unwrap();
            assert_eq!(spec.name.as_deref(), Some(*name));
        }
        assert!(matches!(catalog_spec("nope"), Err(AnalysisError::UnknownSystem(_))));
    }

    #[test]
    fn laplace_pipeline() {
        let r = analyze_catalog("laplace2", &quick()).unwrap();
        assert_eq!(r.verdict.classification, crate::charvar::Classification::Determined);
        assert!(!r.verdict.compact_removable);
        assert!(r.to_text().contains("determined"));
    }

    #[test]
    fn sharpness_query() {
        let opts = AnalysisOptions { query_dims: vec![1], ..quick() };
        let r = analyze_catalog("example2_n3d1", &opts).unwrap();
        assert_eq!(r.char_variety.dim, 1);
        assert_eq!(r.removability[0].answer, Removability::SharpCounterexample);
    }

    #[test]
    fn lower_order_terms_are_dropped() {
        let r = analyze_source("vars 2; unknowns 1; eq d1^2 + d2^2 + 3*d1 + 1;", &quick()).unwrap();
        assert!(r.shifts.lower_order_dropped);
        assert_eq!(r.ellipticity.tier_name(), "EllipticCertified");
    }
}
