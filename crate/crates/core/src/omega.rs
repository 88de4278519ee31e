//! The Laplace-like square `Ω = P R^{t+ρ} P* + R^σ Q* R^{t−τ} Q R^σ` at
//! symbol level, where `R = ξ₁² + … + ξₙ²` and `t = max τ`.
//!
//! `P` and `Q` enter through their full symbols (`∂ ↔ iξ`), so `P*` is the
//! conjugate transpose at real `ξ` and `Ω(ξ)` is Hermitian positive
//! semidefinite by construction. Its quadratic form splits as
//!
//! `v*Ωv = Σ_k R^{t+ρ_k} |(P*v)_k|² + Σ_l R^{t−τ_l} |(Q R^σ v)_l|²`,
//!
//! which is checked exactly at random rational points.

use num_traits::Zero;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::{inner, Matrix};
use crate::poly::{GaussPoly, GaussRational, Rational};
use crate::sampling::{random_complex_vector, rng_for, small_box_points, sphere_proxy_point, Stream};
use crate::symbol::{ser_point, ShiftVector, ShiftedMatrix, SymbolError};

#[derive(Debug, Error)]
pub enum OmegaError {
    #[error(transparent)]
    Symbol(#[from] SymbolError),
    #[error("negative exponent {value} for {what}[{index}]")]
    NegativeExponent { what: &'static str, index: usize, value: i64 },
    #[error("Q does not compose with P")]
    NotChained,
}

#[derive(Clone, Debug, Serialize)]
pub struct OmegaSymbol {
    pub nvars: usize,
    /// `s × s` matrix of forms.
    pub matrix: Vec<Vec<GaussPoly>>,
    pub t: i64,
    pub sigma: ShiftVector,
    pub rho: ShiftVector,
    pub tau: Option<ShiftVector>,
    /// `2t + 2σ`.
    pub shift: ShiftVector,
    #[serde(skip)]
    p_hat: Vec<Vec<GaussPoly>>,
    #[serde(skip)]
    q_hat: Option<Vec<Vec<GaussPoly>>>,
}

fn exponent(what: &'static str, index: usize, value: i64) -> Result<u32, OmegaError> {
    u32::try_from(value).map_err(|_| OmegaError::NegativeExponent { what, index, value })
}

fn mat_eval(m: &[Vec<GaussPoly>], xi: &[Rational], cols: usize) -> Matrix {
    let rows = m.iter().map(|r| r.iter().map(|p| p.eval_real(xi).expect("point length")).collect()).collect();
    Matrix::from_rows(rows, cols)
}

pub fn build_omega(p: &ShiftedMatrix, q: Option<&ShiftedMatrix>) -> Result<OmegaSymbol, OmegaError> {
    p.require_homogeneous()?;
    let n = p.nvars();
    let s = p.nrows();
    let sigma = p.row_shifts().clone();
    let rho = p.col_shifts().clone();
    if let Some(q) = q {
        q.require_homogeneous()?;
        if q.col_shifts() != &sigma || !q.mul(p)?.is_zero() {
            return Err(OmegaError::NotChained);
        }
    }
    let tau = q.map(|q| q.row_shifts().clone());
    let t = tau.as_ref().and_then(ShiftVector::max).unwrap_or(0);
    let r = GaussPoly::sum_of_squares(n);

    let p_hat = p.full_symbol();
    let rp: Vec<GaussPoly> = rho
        .0
        .iter()
        .enumerate()
        .map(|(k, &x)| exponent("t+rho", k, t + x).map(|e| r.pow(e)))
        .collect::<Result<_, _>>()?;
    let rs: Vec<GaussPoly> = sigma
        .0
        .iter()
        .enumerate()
        .map(|(k, &x)| exponent("sigma", k, x).map(|e| r.pow(e)))
        .collect::<Result<_, _>>()?;

    let mut omega = vec![vec![GaussPoly::zero(n); s]; s];
    for i in 0..s {
        for j in i..s {
            let mut acc = GaussPoly::zero(n);
            for (k, rk) in rp.iter().enumerate() {
                acc = &acc + &(&(&p_hat[i][k] * rk) * &p_hat[j][k].conj());
            }
            omega[i][j] = acc;
        }
    }

    let q_hat = q.map(ShiftedMatrix::full_symbol);
    if let (Some(qh), Some(tau)) = (&q_hat, &tau) {
        let rt: Vec<GaussPoly> = tau
            .0
            .iter()
            .enumerate()
            .map(|(l, &x)| exponent("t-tau", l, t - x).map(|e| r.pow(e)))
            .collect::<Result<_, _>>()?;
        for i in 0..s {
            for j in i..s {
                let mut acc = GaussPoly::zero(n);
                for (l, rl) in rt.iter().enumerate() {
                    acc = &acc + &(&(&qh[l][i].conj() * rl) * &qh[l][j]);
                }
                let term = &(&rs[i] * &acc) * &rs[j];
                omega[i][j] = &omega[i][j] + &term;
            }
        }
    }
    for i in 0..s {
        for j in 0..i {
            omega[i][j] = omega[j][i].conj();
        }
    }
    let shift = ShiftVector(sigma.0.iter().map(|x| 2 * t + 2 * x).collect());
    Ok(OmegaSymbol { nvars: n, matrix: omega, t, sigma, rho, tau, shift, p_hat, q_hat })
}

impl OmegaSymbol {
    pub fn size(&self) -> usize {
        self.matrix.len()
    }

    pub fn eval(&self, xi: &[Rational]) -> Matrix {
        mat_eval(&self.matrix, xi, self.size())
    }

    /// `Ω_ji = conj(Ω_ij)` coefficientwise.
    pub fn is_hermitian(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| (0..s).all(|j| self.matrix[j][i] == self.matrix[i][j].conj()))
    }

    /// Every entry has degree at most `σ_i + σ_j + 2t`.
    pub fn degree_bound_holds(&self) -> bool {
        let s = self.size();
        (0..s).all(|i| {
            (0..s).all(|j| self.matrix[i][j].total_degree().at_most(self.sigma[i] + self.sigma[j] + 2 * self.t))
        })
    }

    pub fn quadratic_form(&self, xi: &[Rational], v: &[GaussRational]) -> GaussRational {
        inner(v, &self.eval(xi).mul_vec(v))
    }

    /// The right-hand side of the splitting identity.
    pub fn split_form(&self, xi: &[Rational], v: &[GaussRational]) -> GaussRational {
        let r = GaussPoly::sum_of_squares(self.nvars).eval_real(xi).expect("point length").re;
        let rpow = |e: i64| -> Rational { num_traits::pow(r.clone(), e as usize) };
        let p = mat_eval(&self.p_hat, xi, self.rho.len());
        let pv = p.conj_transpose().mul_vec(v);
        let mut total = Rational::zero();
        for (k, x) in pv.iter().enumerate() {
            total += rpow(self.t + self.rho[k]) * x.norm_sqr();
        }
        if let (Some(qh), Some(tau)) = (&self.q_hat, &self.tau) {
            let q = mat_eval(qh, xi, self.sigma.len());
            let scaled: Vec<GaussRational> =
                v.iter().enumerate().map(|(i, x)| x * &GaussRational::real(rpow(self.sigma[i]))).collect();
            for (l, x) in q.mul_vec(&scaled).iter().enumerate() {
                total += rpow(self.t - tau[l]) * x.norm_sqr();
            }
        }
        GaussRational::real(total)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DegeneratePair {
    #[serde(serialize_with = "ser_point")]
    pub xi: Vec<Rational>,
    pub v: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PositivityReport {
    pub size: usize,
    pub t: i64,
    pub hermitian: bool,
    pub degree_bound: bool,
    pub identity_pairs: usize,
    pub identity_failures: usize,
    pub points_checked: usize,
    /// Minimum of `v*Ωv / |v|²` over the random pairs, as an exact rational.
    pub min_rayleigh: String,
    pub det_nonzero: bool,
    pub degenerate: Option<DegeneratePair>,
}

impl PositivityReport {
    pub fn positive(&self) -> bool {
        self.degenerate.is_none() && self.identity_failures == 0 && self.hermitian && self.degree_bound
    }
}

pub const IDENTITY_PAIRS: usize = 500;

/// Exact identity check on `pairs` random `(ξ, v)`, returning the failures
/// and the smallest Rayleigh quotient seen.
pub fn identity_check(omega: &OmegaSymbol, pairs: usize, seed: u64) -> (usize, Option<Rational>) {
    let mut rng = rng_for(seed, Stream::OmegaIdentity);
    let mut failures = 0;
    let mut min: Option<Rational> = None;
    for _ in 0..pairs {
        let xi = sphere_proxy_point(&mut rng, omega.nvars);
        let v = random_complex_vector(&mut rng, omega.size());
        let lhs = omega.quadratic_form(&xi, &v);
        if lhs != omega.split_form(&xi, &v) {
            failures += 1;
        }
        let q = &lhs.re / &inner(&v, &v).re;
        if min.as_ref().is_none_or(|m| q < *m) {
            min = Some(q);
        }
    }
    (failures, min)
}

fn degenerate_at(omega: &OmegaSymbol, xi: &[Rational]) -> Option<DegeneratePair> {
    let m = omega.eval(xi);
    if m.is_positive_definite() {
        return None;
    }
    let v = m.nullspace().into_iter().next().unwrap_or_else(|| {
        // indefinite but nonsingular cannot happen for a sum of Gram forms
        panic!("Omega({xi:?}) is indefinite")
    });
    Some(DegeneratePair { xi: xi.to_vec(), v: v.iter().map(ToString::to_string).collect() })
}

/// Identity check, small-box witness search, then `samples` random points.
pub fn omega_positivity(omega: &OmegaSymbol, samples: usize, seed: u64) -> PositivityReport {
    let n = omega.nvars;
    let (identity_failures, min) = identity_check(omega, IDENTITY_PAIRS, seed);
    let bound = if 5usize.checked_pow(n as u32).is_some_and(|c| c <= 4000) { 2 } else { 1 };
    let mut points_checked = 0;
    let mut degenerate = None;
    for xi in small_box_points(n, bound) {
        points_checked += 1;
        if let Some(d) = degenerate_at(omega, &xi) {
            degenerate = Some(d);
            break;
        }
    }
    if degenerate.is_none() {
        let mut rng = rng_for(seed, Stream::Omega);
        for _ in 0..samples {
            let xi = sphere_proxy_point(&mut rng, n);
            points_checked += 1;
            if let Some(d) = degenerate_at(omega, &xi) {
                degenerate = Some(d);
                break;
            }
        }
    }
    let probe: Vec<Rational> = (0..n).map(|k| Rational::from_integer((k as i64 + 1).into())).collect();
    let mut rng = rng_for(seed, Stream::Omega);
    let det_nonzero = omega.size() == 0
        || std::iter::once(probe)
            .chain((0..8).map(|_| sphere_proxy_point(&mut rng, n)))
            .any(|xi| !omega.eval(&xi).det().is_zero());
    PositivityReport {
        size: omega.size(),
        t: omega.t,
        hermitian: omega.is_hermitian(),
        degree_bound: omega.degree_bound_holds(),
        identity_pairs: IDENTITY_PAIRS,
        identity_failures,
        points_checked,
        min_rayleigh: min.map_or_else(|| "n/a".to_string(), |m| m.to_string()),
        det_nonzero,
        degenerate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::syzygies;
    use crate::poly::rat;
    use crate::sysparse::parse;
    use num_traits::{One, Signed};

    fn matrix(src: &str) -> ShiftedMatrix {
        ShiftedMatrix::from_spec(&parse(src).unwrap()).unwrap()
    }

    #[test]
    fn single_cauchy_riemann_operator() {
        let p = matrix("vars 2; unknowns 1; eq d1 + i*d2;");
        let o = build_omega(&p, None).unwrap();
        assert_eq!(o.matrix, vec![vec![GaussPoly::sum_of_squares(2)]]);
        assert_eq!(o.t, 0);
    }

    #[test]
    fn cauchy_riemann_in_four_variables() {
        let p = matrix("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;");
        let q = syzygies(&p).unwrap();
        let o = build_omega(&p, Some(&q)).unwrap();
        assert_eq!(o.t, 2);
        assert!(o.is_hermitian());
        assert!(o.degree_bound_holds());
        let xi = vec![rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1)];
        let v = vec![GaussRational::one(), GaussRational::zero()];
        let val = o.quadratic_form(&xi, &v);
        assert!(val.re.is_positive());
        assert_eq!(val, o.split_form(&xi, &v));
        assert!(o.quadratic_form(&xi, &[GaussRational::zero(), GaussRational::zero()]).is_zero());
        let rep = omega_positivity(&o, 50, 3);
        assert!(rep.positive(), "{rep:?}");
        assert!(rep.det_nonzero);
    }

    #[test]
    fn wave_degenerates_on_the_light_cone() {
        let p = matrix("vars 2; unknowns 1; eq d1^2 - d2^2;");
        let o = build_omega(&p, None).unwrap();
        let rep = omega_positivity(&o, 10, 3);
        assert_eq!(rep.degenerate.unwrap().xi, vec![rat(1, 1), rat(1, 1)]);
        assert_eq!(rep.identity_failures, 0);
    }

    #[test]
    fn negative_exponent_is_rejected() {
        let p =
            ShiftedMatrix::new(1, 1, vec![vec![GaussPoly::var(1, 0)]], ShiftVector(vec![-1]), ShiftVector(vec![-2]))
                .unwrap();
        assert!(matches!(build_omega(&p, None), Err(OmegaError::NegativeExponent { .. })));
    }
}
