//! Graded free resolutions by iterated syzygies, their dual complexes, and
//! the homology test behind Ext vanishing.
//!
//! A resolution is a chain of row maps
//! `… → A^{ρ₂} --P₁--> A^{ρ₁} --P₀--> A^{ρ₀}` with `P_{k+1}·P_k = 0`.
//! The dual complex `A^{−ρ₀} → A^{−ρ₁} → …` sends a column `w` to `P_k w`;
//! we store it in row form as the transposes `P_kᵗ`.

use serde::Serialize;
use thiserror::Error;

use crate::groebner::{buchberger, ord_shifted, syzygies, ModuleOrder, MonomialOrder};
use crate::poly::GaussPoly;
use crate::symbol::{check_chain, ShiftVector, ShiftedMatrix, SymbolError};

#[derive(Debug, Error)]
pub enum ResolutionError {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("max_len must be at least 1")]
    MaxLen,
    #[error("steps {0} and its successor do not compose to zero")]
    NotAComplex(usize),
}

#[derive(Clone, Debug, Serialize)]
pub struct Resolution {
    pub steps: Vec<ShiftedMatrix>,
    /// The kernel of the last step is nonzero but `max_len` was reached.
    pub truncated: bool,
}

impl Resolution {
    /// Number of matrices, the presentation matrix included.
    pub fn length(&self) -> usize {
        self.steps.len()
    }

    /// Number of syzygy steps beyond the presentation matrix.
    pub fn syzygy_steps(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }

    /// `ρ₀, ρ₁, …, ρ_L`.
    pub fn shifts(&self) -> Vec<ShiftVector> {
        let mut out = vec![self.steps[0].col_shifts().clone()];
        out.extend(self.steps.iter().map(|p| p.row_shifts().clone()));
        out
    }

    /// Ranks of the free modules, `rank A^{ρ₀}` first.
    pub fn ranks(&self) -> Vec<usize> {
        self.shifts().iter().map(ShiftVector::len).collect()
    }

    /// Re-checks that consecutive products vanish.
    pub fn verify(&self) -> Result<(), ResolutionError> {
        check_chain(&self.steps)?;
        for (k, w) in self.steps.windows(2).enumerate() {
            if !w[1].mul(&w[0])?.is_zero() {
                return Err(ResolutionError::NotAComplex(k));
            }
        }
        Ok(())
    }
}

/// Resolves the cokernel of `v ↦ v·M`, stopping when a kernel vanishes or
/// after `max_len` matrices.
pub fn build_resolution(m: &ShiftedMatrix, max_len: usize) -> Result<Resolution, ResolutionError> {
    if max_len == 0 {
        return Err(ResolutionError::MaxLen);
    }
    m.require_homogeneous()?;
    let mut steps = vec![m.clone()];
    let mut truncated = false;
    loop {
        let last = steps.last().unwrap();
        let q = syzygies(last)?;
        if q.nrows() == 0 {
            break;
        }
        if steps.len() == max_len {
            truncated = true;
            break;
        }
        steps.push(q);
    }
    let r = Resolution { steps, truncated };
    r.verify()?;
    Ok(r)
}

#[derive(Clone, Debug, Serialize)]
pub struct DualComplex {
    pub nvars: usize,
    /// `P_kᵗ`, mapping `A^{−ρ_k}` to `A^{−ρ_{k+1}}` in row form.
    pub steps: Vec<ShiftedMatrix>,
    /// `−ρ_k` for `k = 0..=L`.
    pub shifts: Vec<ShiftVector>,
    pub truncated: bool,
}

impl DualComplex {
    /// Highest position of the complex (`L`).
    pub fn top(&self) -> usize {
        self.steps.len()
    }
}

pub fn dualize(r: &Resolution) -> Result<DualComplex, ResolutionError> {
    let steps: Vec<ShiftedMatrix> = r.steps.iter().map(ShiftedMatrix::transposed).collect();
    for (k, w) in steps.windows(2).enumerate() {
        if !w[0].mul(&w[1])?.is_zero() {
            return Err(ResolutionError::NotAComplex(k));
        }
    }
    let shifts = r.shifts().iter().map(ShiftVector::negated).collect();
    Ok(DualComplex { nvars: r.steps[0].nvars(), steps, shifts, truncated: r.truncated })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Homology {
    Trivial,
    /// A cycle that is not a boundary, with its degree.
    Nontrivial {
        witness: Vec<String>,
        degree: i64,
    },
    Unknown,
}

impl Homology {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Homology::Trivial)
    }

    pub fn label(&self) -> &'static str {
        match self {
            Homology::Trivial => "trivial",
            Homology::Nontrivial { .. } => "nontrivial",
            Homology::Unknown => "unknown",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct HomologyReport {
    /// Entry `k` describes the homology at `A^{−ρ_k}`.
    pub entries: Vec<Homology>,
}

impl HomologyReport {
    pub fn at(&self, k: usize) -> Option<&Homology> {
        self.entries.get(k)
    }

    /// Trivial at every position below `m`.
    pub fn trivial_below(&self, m: usize) -> bool {
        (0..m).all(|k| self.entries.get(k).is_some_and(Homology::is_trivial))
    }
}

/// Cycle generators at position `k`, or `None` when the outgoing map was
/// never computed.
pub fn cycle_generators(d: &DualComplex, k: usize) -> Result<Option<ShiftedMatrix>, ResolutionError> {
    if k < d.top() {
        return Ok(Some(syzygies(&d.steps[k])?));
    }
    if d.truncated {
        return Ok(None);
    }
    // nothing leaves the last term, so every element is a cycle
    let shifts = &d.shifts[k];
    let r = shifts.len();
    let rows = (0..r)
        .map(|i| (0..r).map(|j| if i == j { GaussPoly::one(d.nvars) } else { GaussPoly::zero(d.nvars) }).collect())
        .collect();
    Ok(Some(ShiftedMatrix::new(d.nvars, r, rows, shifts.clone(), shifts.clone())?))
}

/// Homology of the dual complex at positions `0..=upto`.
pub fn ext_vanishing(d: &DualComplex, upto: usize) -> Result<HomologyReport, ResolutionError> {
    let mut entries = Vec::new();
    for k in 0..=upto {
        if k > d.top() {
            // past the end the complex is zero, unless we stopped early
            entries.push(if d.truncated { Homology::Unknown } else { Homology::Trivial });
            continue;
        }
        let Some(cycles) = cycle_generators(d, k)? else {
            entries.push(Homology::Unknown);
            continue;
        };
        let image = if k == 0 {
            None
        } else {
            let prev = &d.steps[k - 1];
            let order = ModuleOrder::new(MonomialOrder::Grevlex, prev.col_shifts().0.clone());
            Some(buchberger(prev.rows(), &order))
        };
        let mut status = Homology::Trivial;
        for (z, deg) in cycles.rows().iter().zip(&cycles.row_shifts().0) {
            let reduces = match &image {
                None => z.iter().all(GaussPoly::is_zero),
                Some(gb) => gb.contains(z),
            };
            if !reduces {
                verify_witness(d, k, z, image.as_ref());
                status = Homology::Nontrivial { witness: z.iter().map(ToString::to_string).collect(), degree: *deg };
                break;
            }
        }
        entries.push(status);
    }
    Ok(HomologyReport { entries })
}

fn verify_witness(d: &DualComplex, k: usize, z: &[GaussPoly], image: Option<&crate::groebner::GBasis>) {
    if let Some(next) = d.steps.get(k) {
        let zm = ShiftedMatrix::new(
            d.nvars,
            z.len(),
            vec![z.to_vec()],
            ShiftVector(vec![ord_shifted(z, &d.shifts[k])]),
            d.shifts[k].clone(),
        )
        .expect("cycle respects the shifts");
        assert!(zm.mul(next).expect("shapes agree").is_zero(), "witness is not a cycle");
    }
    if let Some(gb) = image {
        assert!(!gb.normal_form(z).is_zero(), "witness reduces to zero");
    } else {
        assert!(z.iter().any(|p| !p.is_zero()));
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sysparse::parse;

    fn resolve(src: &str) -> Resolution {
        let m = ShiftedMatrix::from_spec(&parse(src).unwrap()).unwrap();
        build_resolution(&m, m.nvars()).unwrap()
    }

    #[test]
    fn koszul_in_three_variables() {
        let r = resolve("vars 3; unknowns 1; eq d1; eq d2; eq d3;");
        assert_eq!(r.ranks(), vec![1, 3, 3, 1]);
        assert_eq!(r.length(), 3);
        assert!(!r.truncated);
        let d = dualize(&r).unwrap();
        let h = ext_vanishing(&d, 3).unwrap();
        assert!(h.trivial_below(3));
        assert!(matches!(h.at(3), Some(Homology::Nontrivial { .. })));
    }

    #[test]
    fn cauchy_riemann_in_four_variables() {
        let r = resolve("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;");
        assert_eq!(r.syzygy_steps(), 1);
        let h = ext_vanishing(&dualize(&r).unwrap(), 2).unwrap();
        assert_eq!(h.entries.iter().map(Homology::label).collect::<Vec<_>>(), ["trivial", "trivial", "nontrivial"]);
    }

    #[test]
    fn laplacian_obstruction_at_one() {
        let r = resolve("vars 2; unknowns 1; eq d1^2 + d2^2;");
        let h = ext_vanishing(&dualize(&r).unwrap(), 1).unwrap();
        assert!(h.entries[0].is_trivial());
        assert!(!h.entries[1].is_trivial());
    }

    #[test]
    fn unit_matrix_has_no_syzygies() {
        let r = resolve("vars 2; unknowns 1; eq 1;");
        assert_eq!(r.syzygy_steps(), 0);
        let d = dualize(&r).unwrap();
        assert_eq!(d.shifts.len(), 2);
    }

    #[test]
    fn truncation_is_reported_as_unknown() {
        let m = ShiftedMatrix::from_spec(&parse("vars 3; unknowns 1; eq d1; eq d2; eq d3;").unwrap()).unwrap();
        let r = build_resolution(&m, 1).unwrap();
        assert!(r.truncated);
        let h = ext_vanishing(&dualize(&r).unwrap(), 3).unwrap();
        assert!(h.entries[0].is_trivial());
        assert_eq!(h.entries[1..], [Homology::Unknown, Homology::Unknown, Homology::Unknown]);
    }
}
