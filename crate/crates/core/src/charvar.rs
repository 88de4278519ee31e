//! Characteristic variety, the determinacy trichotomy and removability
//! thresholds.

use std::fmt;

use serde::Serialize;

use crate::groebner::{krull_dim, Ideal, MonomialOrder};
use crate::poly::GaussPoly;
use crate::symbol::{maximal_minors, EllipticityReport, ShiftedMatrix, SymbolError};

#[derive(Clone, Debug, Serialize)]
pub struct CharVariety {
    pub n: usize,
    /// Maximal minors of the presentation matrix; empty when `s < r`.
    pub minors: Vec<GaussPoly>,
    /// Reduced Gröbner basis of the minors ideal (grevlex).
    pub groebner: Vec<GaussPoly>,
    /// `−1` for the empty variety.
    pub dim: i64,
}

impl CharVariety {
    pub fn minors_ideal(&self) -> Ideal {
        Ideal::new(self.n, self.minors.clone())
    }

    /// The whole space: too few equations for any minor to exist.
    pub fn is_full_space(&self) -> bool {
        self.dim == self.n as i64
    }
}

pub fn char_variety(p0: &ShiftedMatrix) -> Result<CharVariety, SymbolError> {
    p0.require_homogeneous()?;
    let n = p0.nvars();
    let minors: Vec<GaussPoly> = maximal_minors(p0).into_iter().filter(|m| !m.is_zero()).collect();
    let ideal = Ideal::new(n, minors.clone());
    assert!(ideal.is_homogeneous(), "minors of a homogeneous matrix are forms");
    let groebner = ideal.groebner(MonomialOrder::Grevlex);
    let dim = krull_dim(&ideal, MonomialOrder::Grevlex);
    Ok(CharVariety { n, minors, groebner, dim })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Classification {
    Underdetermined,
    Determined,
    Overdetermined,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::Underdetermined => "underdetermined",
            Classification::Determined => "determined",
            Classification::Overdetermined => "overdetermined",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub tier: String,
    pub elliptic: bool,
    pub n: usize,
    pub dim_v: i64,
    pub m: i64,
    pub classification: Classification,
    pub compact_removable: bool,
    /// `n − dim V − 2`, or `−1` when no submanifold qualifies.
    pub max_removable_submanifold_dim: i64,
    pub notes: Vec<String>,
}

pub const SHARPNESS_NOTE: &str = "a submanifold of dimension n - dim V - 1 can carry solutions with no extension; \
the example2_* catalog systems realize this bound";

pub fn classify(v: &CharVariety, ell: &EllipticityReport) -> Verdict {
    let n = v.n as i64;
    let classification = if v.dim >= n {
        Classification::Underdetermined
    } else if v.dim == n - 1 {
        Classification::Determined
    } else {
        Classification::Overdetermined
    };
    let elliptic = ell.is_elliptic();
    let mut notes = Vec::new();
    if v.dim < 0 {
        notes.push("empty characteristic variety: the system is of finite type (invertible symbol)".to_string());
    }
    if v.is_full_space() {
        notes.push("characteristic variety is all of C^n (underdetermined reading: dim V = n)".to_string());
    }
    if !elliptic {
        notes.push(format!("ellipticity tier {}: no removability guarantee", ell.tier_name()));
    }
    let compact_removable = classification == Classification::Overdetermined && elliptic && v.dim >= 0;
    let max_dim = if elliptic { (n - v.dim - 2).max(-1) } else { -1 };
    if elliptic && v.dim >= 0 && v.dim < n {
        notes.push(SHARPNESS_NOTE.to_string());
    }
    Verdict {
        tier: ell.tier_name().to_string(),
        elliptic,
        n: v.n,
        dim_v: v.dim,
        m: n - v.dim,
        classification,
        compact_removable,
        max_removable_submanifold_dim: max_dim,
        notes,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Removability {
    Removable,
    NotGuaranteed,
    SharpCounterexample,
}

impl fmt::Display for Removability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Removability::Removable => "removable",
            Removability::NotGuaranteed => "not-guaranteed",
            Removability::SharpCounterexample => "sharp-counterexample",
        })
    }
}

/// Is a closed submanifold of dimension `s_dim` removable for every solution?
pub fn removability_query(v: &Verdict, s_dim: i64) -> Removability {
    if !v.elliptic || v.dim_v < 0 {
        return Removability::NotGuaranteed;
    }
    let n = v.n as i64;
    if s_dim <= n - v.dim_v - 2 {
        Removability::Removable
    } else if s_dim == n - v.dim_v - 1 {
        Removability::SharpCounterexample
    } else {
        Removability::NotGuaranteed
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbol::{ellipticity_check, Tier};
    use crate::sysparse::parse;

    fn verdict(src: &str) -> (CharVariety, Verdict) {
        let m = ShiftedMatrix::from_spec(&parse(src).unwrap()).unwrap();
        let v = char_variety(&m).unwrap();
        let e = ellipticity_check(&[m], 200, 1, Tier::Exact).unwrap();
        let verdict = classify(&v, &e);
        (v, verdict)
    }

    #[test]
    fn gradient_in_three_variables() {
        let (v, d) = verdict("vars 3; unknowns 1; eq d1; eq d2; eq d3;");
        assert_eq!(v.dim, 0);
        assert_eq!(v.groebner.len(), 3);
        assert_eq!(d.classification, Classification::Overdetermined);
        assert_eq!(removability_query(&d, 1), Removability::Removable);
    }

    #[test]
    fn cauchy_riemann_in_four_variables() {
        let (v, d) = verdict("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;");
        assert_eq!(v.dim, 2);
        assert_eq!((d.m, d.compact_removable, d.max_removable_submanifold_dim), (2, true, 0));
        assert_eq!(removability_query(&d, 0), Removability::Removable);
        assert_eq!(removability_query(&d, 1), Removability::SharpCounterexample);
        assert_eq!(removability_query(&d, 2), Removability::NotGuaranteed);
    }

    #[test]
    fn laplace_and_wave_are_determined() {
        let (_, l) = verdict("vars 2; unknowns 1; eq d1^2 + d2^2;");
        assert_eq!(
            (l.classification, l.m, l.compact_removable, l.max_removable_submanifold_dim),
            (Classification::Determined, 1, false, -1)
        );
        let (_, w) = verdict("vars 2; unknowns 1; eq d1^2 - d2^2;");
        assert_eq!(w.classification, Classification::Determined);
        assert!(!w.compact_removable);
        assert_eq!(removability_query(&w, 0), Removability::NotGuaranteed);
    }

    #[test]
    fn sharpness_family() {
        let (v, d) = verdict("vars 3; unknowns 1; eq d2^2 + d3^2; eq d1;");
        assert_eq!(v.dim, 1);
        assert_eq!(removability_query(&d, 1), Removability::SharpCounterexample);
        assert_eq!(removability_query(&d, 0), Removability::Removable);
    }

    #[test]
    fn fewer_equations_than_unknowns() {
        let (v, d) = verdict("vars 2; unknowns 2; eq d1, d2;");
        assert!(v.minors.is_empty());
        assert_eq!(v.dim, 2);
        assert_eq!(d.classification, Classification::Underdetermined);
    }
}
