//! Shift vectors, Douglis–Nirenberg principal parts, symbol evaluation and
//! the tiered ellipticity check.
//!
//! Matrices follow the module convention: an `s × r` matrix `P` maps row
//! vectors `v ↦ v·P` from `A^σ` (length `s`) to `A^ρ` (length `r`), and the
//! entry orders obey `ord p_ij ≤ σ_i − ρ_j`. A chain `[P₀, P₁, …]` satisfies
//! `P_{k+1}·P_k = 0`, so `P_{k+1}` has column shifts equal to the row shifts
//! of `P_k`.
//!
//! Symbols are taken with `∂_k ↔ ξ_k` (no factor of `i`). Ellipticity means
//! the evaluated complex is exact at every real `ξ ≠ 0`; for a presentation
//! of a module this is `rank P₀(ξ) = r`, because the resolution of the
//! symbol module splits away from its support.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::{rational_to_f64, GaussPoly, GaussRational, Monomial, Rational};
use crate::sampling::{self, Stream};
use crate::sysparse::SystemSpec;

/// Relative tolerance on the normalized exactness defect for sampled checks.
pub const SAMPLED_DEFECT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("row {0} is identically zero; cannot infer its shift")]
    DegenerateRow(usize),
    #[error("entry ({row}, {col}) has degree {degree} > {bound} allowed by the shifts")]
    ShiftDisagreement { row: usize, col: usize, degree: u32, bound: i64 },
    #[error("entry ({row}, {col}) is not homogeneous of degree sigma - rho")]
    NotHomogeneous { row: usize, col: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("chain mismatch after step {0}")]
    ChainMismatch(usize),
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
#[serde(transparent)]
pub struct ShiftVector(pub Vec<i64>);

impl ShiftVector {
    pub fn zeros(n: usize) -> Self {
        ShiftVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn negated(&self) -> Self {
        ShiftVector(self.0.iter().map(|v| -v).collect())
    }

    pub fn translated(&self, c: i64) -> Self {
        ShiftVector(self.0.iter().map(|v| v + c).collect())
    }

    pub fn max(&self) -> Option<i64> {
        self.0.iter().copied().max()
    }
}

impl std::ops::Index<usize> for ShiftVector {
    type Output = i64;
    fn index(&self, k: usize) -> &i64 {
        &self.0[k]
    }
}

impl fmt::Display for ShiftVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// A polynomial matrix together with the filtrations it agrees with.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftedMatrix {
    nvars: usize,
    nrows: usize,
    ncols: usize,
    entries: Vec<Vec<GaussPoly>>,
    row_shifts: ShiftVector,
    col_shifts: ShiftVector,
}

impl ShiftedMatrix {
    pub fn new(
        nvars: usize,
        ncols: usize,
        entries: Vec<Vec<GaussPoly>>,
        row_shifts: ShiftVector,
        col_shifts: ShiftVector,
    ) -> Result<Self, SymbolError> {
        let nrows = entries.len();
        if row_shifts.len() != nrows || col_shifts.len() != ncols {
            return Err(SymbolError::Shape(format!(
                "{}x{} matrix with {} row shifts and {} column shifts",
                nrows,
                ncols,
                row_shifts.len(),
                col_shifts.len()
            )));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != ncols {
                return Err(SymbolError::Shape(format!("row {i} has {} entries, expected {ncols}", row.len())));
            }
            for (j, p) in row.iter().enumerate() {
                if p.nvars() != nvars {
                    return Err(SymbolError::Shape(format!("entry ({i}, {j}) has {} variables", p.nvars())));
                }
                let bound = row_shifts[i] - col_shifts[j];
                if !p.total_degree().at_most(bound) {
                    let degree = p.total_degree().finite().unwrap_or(0);
                    return Err(SymbolError::ShiftDisagreement { row: i, col: j, degree, bound });
                }
            }
        }
        Ok(ShiftedMatrix { nvars, nrows, ncols, entries, row_shifts, col_shifts })
    }

    /// The presentation matrix of a system, with its declared or inferred shifts.
    pub fn from_spec(spec: &SystemSpec) -> Result<Self, SymbolError> {
        let (sigma, rho) = shifts_for(spec)?;
        ShiftedMatrix::new(spec.nvars, spec.nunknowns, spec.entries.clone(), sigma, rho)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn entry(&self, i: usize, j: usize) -> &GaussPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<GaussPoly>] {
        &self.entries
    }

    pub fn row_shifts(&self) -> &ShiftVector {
        &self.row_shifts
    }

    pub fn col_shifts(&self) -> &ShiftVector {
        &self.col_shifts
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(GaussPoly::is_zero)
    }

    /// Required degree `σ_i − ρ_j` of entry `(i, j)`.
    pub fn order(&self, i: usize, j: usize) -> i64 {
        self.row_shifts[i] - self.col_shifts[j]
    }

    /// Every nonzero entry is homogeneous of degree exactly `σ_i − ρ_j`.
    pub fn is_homogeneous(&self) -> bool {
        self.first_inhomogeneous().is_none()
    }

    fn first_inhomogeneous(&self) -> Option<(usize, usize)> {
        for i in 0..self.nrows {
            for j in 0..self.ncols {
                let p = &self.entries[i][j];
                if p.is_zero() {
                    continue;
                }
                let ok = p.homogeneous_degree().map(i64::from) == Some(self.order(i, j));
                if !ok {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn require_homogeneous(&self) -> Result<(), SymbolError> {
        match self.first_inhomogeneous() {
            None => Ok(()),
            Some((row, col)) => Err(SymbolError::NotHomogeneous { row, col }),
        }
    }

    /// Keeps only the degree-`(σ_i − ρ_j)` part of each entry.
    pub fn principal_part(&self) -> ShiftedMatrix {
        let entries = (0..self.nrows)
            .map(|i| {
                (0..self.ncols)
                    .map(|j| match u32::try_from(self.order(i, j)) {
                        Ok(d) => self.entries[i][j].homogeneous_component(d),
                        Err(_) => GaussPoly::zero(self.nvars),
                    })
                    .collect()
            })
            .collect();
        ShiftedMatrix { entries, ..self.clone() }
    }

    /// Formal adjoint at symbol level: entry `(j, i)` becomes
    /// `(−1)^{σ_i − ρ_j} · conj(p_ij)`, with shifts swapped and negated.
    pub fn adjoint_symbol(&self) -> Result<ShiftedMatrix, SymbolError> {
        self.require_homogeneous()?;
        let entries = (0..self.ncols)
            .map(|j| {
                (0..self.nrows)
                    .map(|i| {
                        let c = self.entries[i][j].conj();
                        if self.order(i, j).rem_euclid(2) == 1 {
                            -&c
                        } else {
                            c
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(ShiftedMatrix {
            nvars: self.nvars,
            nrows: self.ncols,
            ncols: self.nrows,
            entries,
            row_shifts: self.col_shifts.negated(),
            col_shifts: self.row_shifts.negated(),
        })
    }

    /// The same polynomial matrix read with `∂_k ↔ iξ_k`: entry `(i, j)` is
    /// multiplied by `i^{σ_i − ρ_j}`. Conjugate transposes of this form are
    /// genuine adjoints at real `ξ`.
    pub fn full_symbol(&self) -> Vec<Vec<GaussPoly>> {
        (0..self.nrows)
            .map(|i| {
                (0..self.ncols).map(|j| self.entries[i][j].scale(&GaussRational::i_pow(self.order(i, j)))).collect()
            })
            .collect()
    }

    /// Transpose with negated shifts: the column-side reading of the same map.
    pub fn transposed(&self) -> ShiftedMatrix {
        let entries = (0..self.ncols).map(|j| (0..self.nrows).map(|i| self.entries[i][j].clone()).collect()).collect();
        ShiftedMatrix {
            nvars: self.nvars,
            nrows: self.ncols,
            ncols: self.nrows,
            entries,
            row_shifts: self.col_shifts.negated(),
            col_shifts: self.row_shifts.negated(),
        }
    }

    /// `self · rhs`, requiring `self`'s column shifts to equal `rhs`'s row shifts.
    pub fn mul(&self, rhs: &ShiftedMatrix) -> Result<ShiftedMatrix, SymbolError> {
        if self.ncols != rhs.nrows || self.col_shifts != rhs.row_shifts || self.nvars != rhs.nvars {
            return Err(SymbolError::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, rhs.nrows, rhs.ncols
            )));
        }
        let entries = (0..self.nrows)
            .map(|i| {
                (0..rhs.ncols)
                    .map(|j| {
                        (0..self.ncols).fold(GaussPoly::zero(self.nvars), |acc, k| {
                            &acc + &(&self.entries[i][k] * &rhs.entries[k][j])
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(ShiftedMatrix {
            nvars: self.nvars,
            nrows: self.nrows,
            ncols: rhs.ncols,
            entries,
            row_shifts: self.row_shifts.clone(),
            col_shifts: rhs.col_shifts.clone(),
        })
    }

    pub fn eval(&self, point: &[GaussRational]) -> Matrix {
        let rows =
            self.entries.iter().map(|row| row.iter().map(|p| p.eval(point).expect("point length")).collect()).collect();
        Matrix::from_rows(rows, self.ncols)
    }

    pub fn eval_real(&self, point: &[Rational]) -> Matrix {
        let pt: Vec<GaussRational> = point.iter().cloned().map(GaussRational::real).collect();
        self.eval(&pt)
    }
}

impl fmt::Display for ShiftedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} rows{} cols{} [", self.nrows, self.ncols, self.row_shifts, self.col_shifts)?;
        for (i, row) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(GaussPoly::to_string).collect();
            write!(f, "{}", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Serialize for ShiftedMatrix {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("ShiftedMatrix", 5)?;
        st.serialize_field("rows", &self.nrows)?;
        st.serialize_field("cols", &self.ncols)?;
        st.serialize_field("row_shifts", &self.row_shifts)?;
        st.serialize_field("col_shifts", &self.col_shifts)?;
        st.serialize_field("entries", &self.entries)?;
        st.end()
    }
}

/// Default shifts: `ρ = 0`, `σ_i = max_j deg p_ij`.
pub fn infer_shifts(spec: &SystemSpec) -> Result<(ShiftVector, ShiftVector), SymbolError> {
    let rho = ShiftVector::zeros(spec.nunknowns);
    let sigma = row_maxima(spec, &rho)?;
    Ok((sigma, rho))
}

fn row_maxima(spec: &SystemSpec, rho: &ShiftVector) -> Result<ShiftVector, SymbolError> {
    spec.entries
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .zip(&rho.0)
                .filter_map(|(p, r)| p.total_degree().finite().map(|d| i64::from(d) + r))
                .max()
                .ok_or(SymbolError::DegenerateRow(i))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(ShiftVector)
}

/// Declared shifts where present; a missing `ρ` defaults to zero and a
/// missing `σ` is the smallest one compatible with `ρ`.
pub fn shifts_for(spec: &SystemSpec) -> Result<(ShiftVector, ShiftVector), SymbolError> {
    match (&spec.sigma, &spec.rho) {
        (None, None) => infer_shifts(spec),
        (Some(s), r) => Ok((
            ShiftVector(s.clone()),
            r.clone().map(ShiftVector).unwrap_or_else(|| ShiftVector::zeros(spec.nunknowns)),
        )),
        (None, Some(r)) => {
            let rho = ShiftVector(r.clone());
            Ok((row_maxima(spec, &rho)?, rho))
        }
    }
}

/// Checks `P_{k+1}·P_k` is well-formed for consecutive steps.
pub fn check_chain(mats: &[ShiftedMatrix]) -> Result<(), SymbolError> {
    for (k, w) in mats.windows(2).enumerate() {
        if w[1].ncols != w[0].nrows || w[1].col_shifts != w[0].row_shifts || w[1].nvars != w[0].nvars {
            return Err(SymbolError::ChainMismatch(k));
        }
    }
    Ok(())
}

/// Evaluates every step of a chain at `ξ`.
pub fn eval_complex(mats: &[ShiftedMatrix], xi: &[GaussRational]) -> Result<Vec<Matrix>, SymbolError> {
    check_chain(mats)?;
    if let Some(m) = mats.first() {
        if xi.len() != m.nvars {
            return Err(SymbolError::Shape(format!("point has {} coordinates, expected {}", xi.len(), m.nvars)));
        }
    }
    Ok(mats.iter().map(|m| m.eval(xi)).collect())
}

/// Determinant of a square polynomial matrix by cofactor expansion.
pub fn poly_det(rows: &[Vec<GaussPoly>], nvars: usize) -> GaussPoly {
    let n = rows.len();
    match n {
        0 => GaussPoly::one(nvars),
        1 => rows[0][0].clone(),
        _ => {
            let mut acc = GaussPoly::zero(nvars);
            for j in 0..n {
                if rows[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<GaussPoly>> = rows[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &rows[0][j] * &poly_det(&minor, nvars);
                acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// The `r × r` minors of an `s × r` matrix (empty when `s < r`).
pub fn maximal_minors(m: &ShiftedMatrix) -> Vec<GaussPoly> {
    subsets(m.nrows, m.ncols)
        .into_iter()
        .map(|rows| {
            let sub: Vec<Vec<GaussPoly>> = rows.iter().map(|&i| m.entries[i].clone()).collect();
            poly_det(&sub, m.nvars)
        })
        .collect()
}

/// `Σ |minor|²` as a polynomial that is real and non-negative at real points;
/// it vanishes exactly where `rank P(ξ) < r`.
pub fn exactness_defect(p0: &ShiftedMatrix) -> GaussPoly {
    maximal_minors(p0).iter().fold(GaussPoly::zero(p0.nvars), |acc, m| &acc + &(m * &m.conj()))
}

/// One summand `scale · (Σ_k w_k ξ_k²)^power` of a positivity certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SosTerm {
    pub scale: Rational,
    pub power: u32,
    /// `(variable index, positive weight)`.
    pub weights: Vec<(usize, Rational)>,
}

impl SosTerm {
    pub fn to_poly(&self, nvars: usize) -> GaussPoly {
        let mut q = GaussPoly::zero(nvars);
        for (k, w) in &self.weights {
            let mut e = vec![0; nvars];
            e[*k] = 2;
            q.add_term(Monomial(e), GaussRational::real(w.clone()));
        }
        if self.weights.is_empty() {
            q = GaussPoly::one(nvars);
        }
        q.pow(self.power).scale(&GaussRational::real(self.scale.clone()))
    }
}

impl fmt::Display for SosTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.weights.is_empty() {
            return write!(f, "{}", self.scale);
        }
        let inner: Vec<String> = self.weights.iter().map(|(k, w)| format!("{w}*d{}^2", k + 1)).collect();
        if !self.scale.is_one() {
            write!(f, "{}*", self.scale)?;
        }
        if self.power == 1 {
            write!(f, "({})", inner.join(" + "))
        } else {
            write!(f, "({})^{}", inner.join(" + "), self.power)
        }
    }
}

impl Serialize for SosTerm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A certificate that the exactness defect is positive on real `ξ ≠ 0`:
/// each listed minor has `|m|² = term`, and the terms' variables cover all
/// coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SosCertificate {
    pub defect: GaussPoly,
    pub terms: Vec<SosTerm>,
    pub minor_indices: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "tier")]
pub enum EllipticityReport {
    NotElliptic {
        #[serde(serialize_with = "ser_point")]
        witness: Vec<Rational>,
        rank: usize,
        required: usize,
    },
    EllipticSampled {
        samples: usize,
        seed: u64,
        min_defect: f64,
    },
    EllipticCertified {
        certificate: SosCertificate,
    },
    /// A sample came within tolerance of the real characteristic set without
    /// an exact rational witness.
    Inconclusive {
        #[serde(serialize_with = "ser_point")]
        point: Vec<Rational>,
        defect: f64,
        samples: usize,
        seed: u64,
    },
}

pub(crate) fn ser_point<S: Serializer>(p: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(p.len()))?;
    for q in p {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

impl EllipticityReport {
    pub fn tier_name(&self) -> &'static str {
        match self {
            EllipticityReport::NotElliptic { .. } => "NotElliptic",
            EllipticityReport::EllipticSampled { .. } => "EllipticSampled",
            EllipticityReport::EllipticCertified { .. } => "EllipticCertified",
            EllipticityReport::Inconclusive { .. } => "Inconclusive",
        }
    }

    /// Certified or sampled elliptic.
    pub fn is_elliptic(&self) -> bool {
        matches!(self, EllipticityReport::EllipticSampled { .. } | EllipticityReport::EllipticCertified { .. })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    /// Certificates and a small exact witness search first, then sampling.
    Exact,
    /// Sampling only.
    Sampled,
}

/// Decides whether the chain is elliptic: exact at every real `ξ ≠ 0`.
pub fn ellipticity_check(
    mats: &[ShiftedMatrix],
    samples: usize,
    seed: u64,
    tier: Tier,
) -> Result<EllipticityReport, SymbolError> {
    check_chain(mats)?;
    let p0 = mats.first().ok_or_else(|| SymbolError::Shape("empty chain".into()))?;
    for m in mats {
        m.require_homogeneous()?;
    }
    let n = p0.nvars;
    let r = p0.ncols;
    if p0.nrows < r {
        let mut e1 = vec![Rational::zero(); n];
        e1[0] = Rational::one();
        let rank = p0.eval_real(&e1).rank();
        return Ok(EllipticityReport::NotElliptic { witness: e1, rank, required: r });
    }

    let minors = maximal_minors(p0);
    let defect = minors.iter().fold(GaussPoly::zero(n), |acc, m| &acc + &(m * &m.conj()));

    if tier == Tier::Exact {
        if let Some(cert) = certify(&minors, &defect, n) {
            return Ok(EllipticityReport::EllipticCertified { certificate: cert });
        }
        let bound = if 5usize.pow(n as u32) <= 4000 { 2 } else { 1 };
        for pt in sampling::small_box_points(n, bound) {
            if let Some(rep) = witness_at(p0, &defect, &pt) {
                return Ok(rep);
            }
        }
    }

    let mut rng = sampling::rng_for(seed, Stream::Ellipticity);
    let mut min_defect = f64::INFINITY;
    let mut min_point = Vec::new();
    for _ in 0..samples {
        let pt = sampling::sphere_proxy_point(&mut rng, n);
        if let Some(rep) = witness_at(p0, &defect, &pt) {
            return Ok(rep);
        }
        let v = rational_to_f64(&defect.eval_real(&pt).expect("point length").re);
        if v < min_defect {
            min_defect = v;
            min_point = pt;
        }
    }
    if min_defect < SAMPLED_DEFECT_TOLERANCE {
        return Ok(EllipticityReport::Inconclusive { point: min_point, defect: min_defect, samples, seed });
    }
    Ok(EllipticityReport::EllipticSampled { samples, seed, min_defect })
}

fn witness_at(p0: &ShiftedMatrix, defect: &GaussPoly, pt: &[Rational]) -> Option<EllipticityReport> {
    if !defect.eval_real(pt).expect("point length").is_zero() {
        return None;
    }
    let rank = p0.eval_real(pt).rank();
    debug_assert!(rank < p0.ncols);
    Some(EllipticityReport::NotElliptic { witness: pt.to_vec(), rank, required: p0.ncols })
}

fn certify(minors: &[GaussPoly], defect: &GaussPoly, n: usize) -> Option<SosCertificate> {
    let mut covered = vec![false; n];
    let mut terms = Vec::new();
    let mut idx = Vec::new();
    for (k, m) in minors.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let norm = m * &m.conj();
        if let Some(term) = recognize_power_of_diagonal_form(&norm) {
            if term.weights.is_empty() {
                covered.iter_mut().for_each(|c| *c = true);
            }
            for (v, _) in &term.weights {
                covered[*v] = true;
            }
            terms.push(term);
            idx.push(k);
        }
    }
    (covered.iter().all(|&c| c) && !terms.is_empty()).then(|| SosCertificate {
        defect: defect.clone(),
        terms,
        minor_indices: idx,
    })
}

/// Matches `p = c · (Σ w_k ξ_k²)^e` with `c, w_k > 0` rational, exactly.
pub fn recognize_power_of_diagonal_form(p: &GaussPoly) -> Option<SosTerm> {
    let n = p.nvars();
    let deg = p.homogeneous_degree()?;
    if p.terms().any(|(_, c)| !c.is_real()) {
        return None;
    }
    if deg == 0 {
        let c = p.constant_term().re;
        return c.is_positive().then(|| SosTerm { scale: c, power: 0, weights: vec![] });
    }
    if deg % 2 != 0 {
        return None;
    }
    let e = deg / 2;
    let support: Vec<usize> = (0..n).filter(|&k| p.terms().any(|(m, _)| m.0[k] > 0)).collect();
    let pure = |k: usize| {
        let mut ex = vec![0; n];
        ex[k] = deg;
        p.coeff(&Monomial(ex)).re
    };
    let first = *support.first()?;
    let scale = pure(first);
    if !scale.is_positive() {
        return None;
    }
    let mut weights = Vec::with_capacity(support.len());
    for &k in &support {
        let ratio = pure(k) / &scale;
        weights.push((k, rational_root(&ratio, e)?));
    }
    let term = SosTerm { scale, power: e, weights };
    (term.to_poly(n) == *p).then_some(term)
}

/// Positive rational `e`-th root, if it exists.
fn rational_root(q: &Rational, e: u32) -> Option<Rational> {
    if !q.is_positive() {
        return None;
    }
    let root = |z: &BigInt| {
        let r = z.nth_root(e);
        (num_traits::pow(r.clone(), e as usize) == *z).then_some(r)
    };
    Some(Rational::new(root(q.numer())?, root(q.denom())?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use crate::sysparse::parse;

    fn spec_matrix(text: &str) -> ShiftedMatrix {
        ShiftedMatrix::from_spec(&parse(text).unwrap()).unwrap()
    }

    fn cr2() -> ShiftedMatrix {
        spec_matrix("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;")
    }

    #[test]
    fn inferred_shifts() {
        let s = parse("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;").unwrap();
        assert_eq!(infer_shifts(&s).unwrap(), (ShiftVector(vec![1, 1]), ShiftVector(vec![0])));
        let s = parse("vars 3; unknowns 1; eq d2^2 + d3^2; eq d1;").unwrap();
        assert_eq!(infer_shifts(&s).unwrap(), (ShiftVector(vec![2, 1]), ShiftVector(vec![0])));
        let s = parse("vars 2; unknowns 1; eq d1^2 + d2^2;").unwrap();
        assert_eq!(infer_shifts(&s).unwrap().0, ShiftVector(vec![2]));
        let s = parse("vars 2; unknowns 1; eq d1; eq 0;").unwrap();
        assert_eq!(infer_shifts(&s).unwrap_err(), SymbolError::DegenerateRow(1));
    }

    #[test]
    fn principal_part_strips_lower_order_terms() {
        let m = spec_matrix("vars 1; unknowns 1; eq d1^2 + d1;");
        assert_eq!(m.principal_part().entry(0, 0), &GaussPoly::var(1, 0).pow(2));
        assert_eq!(cr2().principal_part(), cr2());
        let m = spec_matrix("vars 2; unknowns 2; shifts sigma = [2]; rho = [0,1]; eq d1^2 + d2, d2;");
        let pp = m.principal_part();
        assert_eq!(pp.entry(0, 0), &GaussPoly::var(2, 0).pow(2));
        assert_eq!(pp.entry(0, 1), &GaussPoly::var(2, 1));
        assert!(pp.is_homogeneous());
    }

    #[test]
    fn adjoint_of_cauchy_riemann() {
        let adj = cr2().adjoint_symbol().unwrap();
        assert_eq!((adj.nrows(), adj.ncols()), (1, 2));
        let want0 = &(-&GaussPoly::var(4, 0)) + &GaussPoly::var(4, 1).scale(&GaussRational::i());
        let want1 = &(-&GaussPoly::var(4, 2)) + &GaussPoly::var(4, 3).scale(&GaussRational::i());
        assert_eq!(adj.entry(0, 0), &want0);
        assert_eq!(adj.entry(0, 1), &want1);
        assert_eq!(adj.adjoint_symbol().unwrap(), cr2());
        let lap = spec_matrix("vars 1; unknowns 1; eq d1^2;");
        assert_eq!(lap.adjoint_symbol().unwrap().entry(0, 0), lap.entry(0, 0));
        let bad = spec_matrix("vars 1; unknowns 1; eq d1^2 + d1;");
        assert!(matches!(bad.adjoint_symbol(), Err(SymbolError::NotHomogeneous { .. })));
    }

    #[test]
    fn evaluation_of_the_cauchy_riemann_pair() {
        let p = cr2();
        let p1 = p.entry(0, 0).clone();
        let p2 = p.entry(1, 0).clone();
        let q = ShiftedMatrix::new(4, 2, vec![vec![p2, -&p1]], ShiftVector(vec![2]), ShiftVector(vec![1, 1])).unwrap();
        let xi = [1, 0, 0, 0].map(GaussRational::from_int);
        let ev = eval_complex(&[p.clone(), q.clone()], &xi).unwrap();
        assert_eq!(ev[0], Matrix::from_rows(vec![vec![GaussRational::one()], vec![GaussRational::zero()]], 1));
        assert_eq!(ev[1], Matrix::from_rows(vec![vec![GaussRational::zero(), GaussRational::from_int(-1)]], 2));
        let zero = vec![GaussRational::zero(); 4];
        assert!(eval_complex(&[p.clone(), q.clone()], &zero).unwrap().iter().all(Matrix::is_zero));
        assert_eq!(eval_complex(&[q, p], &xi).unwrap_err(), SymbolError::ChainMismatch(0));

        let lap = spec_matrix("vars 2; unknowns 1; eq d1^2 + d2^2;");
        let ev = eval_complex(&[lap], &[GaussRational::one(), GaussRational::i()]).unwrap();
        assert!(ev[0].is_zero());
    }

    #[test]
    fn ellipticity_tiers() {
        let wave = spec_matrix("vars 2; unknowns 1; eq d1^2 - d2^2;");
        match ellipticity_check(&[wave], 100, 1, Tier::Exact).unwrap() {
            EllipticityReport::NotElliptic { witness, rank, required } => {
                assert_eq!(witness, vec![rat(1, 1), rat(1, 1)]);
                assert_eq!((rank, required), (0, 1));
            }
            other => panic!("{other:?}"),
        }

        let lap = spec_matrix("vars 2; unknowns 1; eq d1^2 + d2^2;");
        match ellipticity_check(&[lap], 100, 1, Tier::Exact).unwrap() {
            EllipticityReport::EllipticCertified { certificate } => {
                assert_eq!(certificate.terms.len(), 1);
                let t = &certificate.terms[0];
                assert_eq!(t.weights, vec![(0, rat(1, 1)), (1, rat(1, 1))]);
                assert_eq!(t.power, 2);
            }
            other => panic!("{other:?}"),
        }

        match ellipticity_check(&[cr2()], 100, 1, Tier::Exact).unwrap() {
            EllipticityReport::EllipticCertified { certificate } => {
                assert_eq!(certificate.defect, GaussPoly::sum_of_squares(4));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn sampled_tier_for_uncertifiable_elliptic_symbol() {
        // elliptic but not a power of a diagonal form
        let m = spec_matrix("vars 2; unknowns 1; eq d1^2 + d1*d2 + d2^2;");
        let rep = ellipticity_check(&[m], 200, 3, Tier::Exact).unwrap();
        assert!(matches!(rep, EllipticityReport::EllipticSampled { samples: 200, seed: 3, .. }), "{rep:?}");
        assert!(rep.is_elliptic());
    }

    #[test]
    fn underdetermined_shape_is_not_elliptic() {
        let m = spec_matrix("vars 2; unknowns 2; eq d1, d2;");
        let rep = ellipticity_check(&[m], 10, 1, Tier::Exact).unwrap();
        assert!(matches!(rep, EllipticityReport::NotElliptic { required: 2, .. }));
    }

    #[test]
    fn rational_roots() {
        assert_eq!(rational_root(&rat(9, 4), 2), Some(rat(3, 2)));
        assert_eq!(rational_root(&rat(2, 1), 2), None);
        assert_eq!(rational_root(&rat(-1, 1), 1), None);
    }

    #[test]
    fn subsets_enumeration() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(2, 3).len(), 0);
        assert_eq!(subsets(4, 0), vec![Vec::<usize>::new()]);
    }
}
