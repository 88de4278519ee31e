//! Face lattices of simplicial polytopes, flags, discrete cutoff functions
//! and the telescoping identities of the flag recursion, all in exact
//! rational arithmetic on a grid.
//!
//! Cutoffs are `φ_F = max(0, b² − dist²(x, F))`, normalized over a skeleton,
//! so every `f_F` is supported in the open `b`-neighborhood of `F` and the
//! family sums to one wherever any neighborhood reaches. The operators of
//! the recursion are replaced by the identity: only supports and partition
//! sums are checked.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde::Serialize;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::{rat, GaussRational, Rational};
use crate::sampling::{rng_for, Stream};

pub type Point = Vec<Rational>;

#[derive(Debug, Error, PartialEq)]
pub enum FlagError {
    #[error("polytope needs dimension at least 1 and {0} vertices")]
    Dimension(usize),
    #[error("facet {0} is not a simplex")]
    NotSimplex(usize),
    #[error("vertex index {0} out of range")]
    BadVertex(usize),
    #[error("edge {edge:?} has squared length {len_sq}, outside [{lower}, {upper}]")]
    EdgeLength { edge: Vec<usize>, len_sq: String, lower: String, upper: String },
    #[error("grid spacing {h} does not divide b/4 = {quarter}")]
    GridSpacing { h: String, quarter: String },
    #[error("partition does not sum to one at grid point {0:?}")]
    Uncovered(Vec<String>),
    #[error("level {0} is out of range")]
    Level(usize),
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).fold(Rational::zero(), |acc, t| acc + t)
}

fn sub(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Solves a square rational system; `None` when singular.
fn solve(mut a: Vec<Vec<Rational>>, mut rhs: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = rhs.len();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        rhs.swap(c, p);
        let inv = Rational::one() / &a[c][c];
        for r in 0..n {
            if r == c || a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] * &inv;
            for k in c..n {
                let v = &a[c][k] * &f;
                a[r][k] -= v;
            }
            let v = &rhs[c] * &f;
            rhs[r] -= v;
        }
    }
    Some((0..n).map(|i| &rhs[i] / &a[i][i]).collect())
}

/// Squared Euclidean distance from `x` to the simplex spanned by `verts`.
pub fn dist2_simplex(x: &[Rational], verts: &[&Point]) -> Rational {
    let v0 = verts[0];
    if verts.len() == 1 {
        let d = sub(x, v0);
        return dot(&d, &d);
    }
    let dirs: Vec<Point> = verts[1..].iter().map(|v| sub(v, v0)).collect();
    let rel = sub(x, v0);
    let gram: Vec<Vec<Rational>> = dirs.iter().map(|a| dirs.iter().map(|b| dot(a, b)).collect()).collect();
    let rhs: Vec<Rational> = dirs.iter().map(|a| dot(&rel, a)).collect();
    if let Some(lambda) = solve(gram, rhs) {
        let sum = lambda.iter().fold(Rational::zero(), |acc, l| acc + l);
        if lambda.iter().all(|l| !l.is_negative()) && sum <= Rational::one() {
            let mut proj = v0.clone();
            for (l, d) in lambda.iter().zip(&dirs) {
                for (p, di) in proj.iter_mut().zip(d) {
                    *p += l * di;
                }
            }
            let diff = sub(x, &proj);
            return dot(&diff, &diff);
        }
    }
    (0..verts.len())
        .map(|skip| {
            let face: Vec<&Point> = verts.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, v)| *v).collect();
            dist2_simplex(x, &face)
        })
        .min()
        .expect("nonempty")
}

/// A full-dimensional convex polytope in `Q^d` given by its vertices and
/// its facets (vertex index lists). Facets must be simplices.
#[derive(Clone, Debug, Serialize)]
pub struct SimplicialPolytope {
    pub name: String,
    pub dim: usize,
    #[serde(serialize_with = "ser_points")]
    pub vertices: Vec<Point>,
    pub facets: Vec<Vec<usize>>,
    #[serde(skip)]
    normals: Vec<(Point, Rational)>,
}

fn ser_points<S: serde::Serializer>(pts: &[Point], s: S) -> Result<S::Ok, S::Error> {
    let v: Vec<Vec<String>> = pts.iter().map(|p| p.iter().map(ToString::to_string).collect()).collect();
    serde::Serialize::serialize(&v, s)
}

impl SimplicialPolytope {
    pub fn new(name: &str, vertices: Vec<Point>, facets: Vec<Vec<usize>>) -> Result<Self, FlagError> {
        let dim = vertices.first().map_or(0, Vec::len);
        if dim == 0 || vertices.len() <= dim {
            return Err(FlagError::Dimension(vertices.len()));
        }
        let centroid: Point = (0..dim)
            .map(|k| {
                vertices.iter().map(|v| v[k].clone()).fold(Rational::zero(), |a, b| a + b)
                    / rat(vertices.len() as i64, 1)
            })
            .collect();
        let mut normals = Vec::new();
        for (fi, f) in facets.iter().enumerate() {
            if let Some(&bad) = f.iter().find(|&&i| i >= vertices.len()) {
                return Err(FlagError::BadVertex(bad));
            }
            if f.len() != dim {
                return Err(FlagError::NotSimplex(fi));
            }
            let rows: Vec<Vec<GaussRational>> = f[1..]
                .iter()
                .map(|&i| sub(&vertices[i], &vertices[f[0]]).into_iter().map(GaussRational::real).collect())
                .collect();
            let diffs = Matrix::from_rows(rows, dim);
            if diffs.rank() != dim - 1 {
                return Err(FlagError::NotSimplex(fi));
            }
            let mut normal: Point = diffs.nullspace()[0].iter().map(|c| c.re.clone()).collect();
            let mut offset = dot(&normal, &vertices[f[0]]);
            // orient outward
            if dot(&normal, &centroid) > offset {
                normal = normal.iter().map(|x| -x).collect();
                offset = -offset;
            }
            normals.push((normal, offset));
        }
        Ok(SimplicialPolytope { name: name.to_string(), dim, vertices, facets, normals })
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.normals.iter().all(|(n, off)| dot(n, x) <= *off)
    }

    /// Squared distance to the polytope (zero inside).
    pub fn dist2(&self, x: &[Rational]) -> Rational {
        if self.contains(x) {
            return Rational::zero();
        }
        self.facets
            .iter()
            .map(|f| {
                let verts: Vec<&Point> = f.iter().map(|&i| &self.vertices[i]).collect();
                dist2_simplex(x, &verts)
            })
            .min()
            .expect("at least one facet")
    }

    /// `2b ≤ |e| ≤ 3b` for every edge that is a proper face. A segment has
    /// no proper edges, so it is unconstrained.
    pub fn check_edge_lengths(&self, b: &Rational) -> Result<(), FlagError> {
        if self.dim < 2 {
            return Ok(());
        }
        let lower = rat(4, 1) * b * b;
        let upper = rat(9, 1) * b * b;
        for e in proper_faces(self, 1) {
            let d = sub(&self.vertices[e[0]], &self.vertices[e[1]]);
            let len_sq = dot(&d, &d);
            if len_sq < lower || len_sq > upper {
                return Err(FlagError::EdgeLength {
                    edge: e,
                    len_sq: len_sq.to_string(),
                    lower: lower.to_string(),
                    upper: upper.to_string(),
                });
            }
        }
        Ok(())
    }
}

fn proper_faces(poly: &SimplicialPolytope, k: usize) -> Vec<Vec<usize>> {
    let mut out = BTreeSet::new();
    for f in &poly.facets {
        for s in crate::symbol::subsets(f.len(), k + 1) {
            let mut face: Vec<usize> = s.iter().map(|&i| f[i]).collect();
            face.sort_unstable();
            out.insert(face);
        }
    }
    out.into_iter().collect()
}

/// Faces graded by dimension; `faces[d]` is the single top cell.
#[derive(Clone, Debug, Serialize)]
pub struct FaceLattice {
    pub dim: usize,
    pub faces: Vec<Vec<Vec<usize>>>,
}

impl FaceLattice {
    pub fn count(&self, k: usize) -> usize {
        self.faces.get(k).map_or(0, Vec::len)
    }

    /// `F_{(k, i)} ⊂ F_{(k+1, j)}`.
    pub fn incident(&self, k: usize, i: usize, j: usize) -> bool {
        let big = &self.faces[k + 1][j];
        self.faces[k][i].iter().all(|v| big.contains(v))
    }

    pub fn face(&self, k: usize, i: usize) -> &[usize] {
        &self.faces[k][i]
    }
}

pub fn face_lattice(poly: &SimplicialPolytope) -> FaceLattice {
    let d = poly.dim;
    let mut faces: Vec<Vec<Vec<usize>>> = (0..d).map(|k| proper_faces(poly, k)).collect();
    faces.push(vec![(0..poly.vertices.len()).collect()]);
    FaceLattice { dim: d, faces }
}

/// `(α_k, …, α_{d−1})`; entry `j` indexes `N_{k+j}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Flag {
    pub k: usize,
    pub alphas: Vec<usize>,
}

impl Flag {
    /// The flag with its first face dropped.
    pub fn tail(&self) -> Flag {
        Flag { k: self.k + 1, alphas: self.alphas[1..].to_vec() }
    }
}

/// All `k`-flags. The empty `d`-flag is returned for `k = d`.
pub fn enumerate_flags(lat: &FaceLattice, k: usize) -> Vec<Flag> {
    if k >= lat.dim {
        return vec![Flag { k: lat.dim, alphas: vec![] }];
    }
    let mut out = Vec::new();
    for upper in enumerate_flags(lat, k + 1) {
        for i in 0..lat.count(k) {
            let fits = match upper.alphas.first() {
                Some(&j) => lat.incident(k, i, j),
                None => true,
            };
            if fits {
                let mut alphas = vec![i];
                alphas.extend(&upper.alphas);
                out.push(Flag { k, alphas });
            }
        }
    }
    out.sort();
    out
}

/// An axis-aligned box of grid points `h·idx`.
#[derive(Clone, Debug, Serialize)]
pub struct Grid {
    #[serde(serialize_with = "ser_rational")]
    pub h: Rational,
    pub lo: Vec<i64>,
    pub hi: Vec<i64>,
}

fn ser_rational<S: serde::Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

fn floor_div(q: &Rational) -> i64 {
    i64::try_from(q.floor().to_integer()).expect("grid index fits")
}

impl Grid {
    /// Covers the `b`-neighborhood of the polytope's bounding box.
    pub fn around(poly: &SimplicialPolytope, b: &Rational, h: &Rational) -> Grid {
        let mut lo = Vec::new();
        let mut hi = Vec::new();
        for k in 0..poly.dim {
            let min = poly.vertices.iter().map(|v| v[k].clone()).min().unwrap();
            let max = poly.vertices.iter().map(|v| v[k].clone()).max().unwrap();
            lo.push(floor_div(&((min - b) / h)) - 1);
            hi.push(-floor_div(&(-(max + b) / h)) + 1);
        }
        Grid { h: h.clone(), lo, hi }
    }

    pub fn indices(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![]];
        for (l, h) in self.lo.iter().zip(&self.hi) {
            out = out
                .into_iter()
                .flat_map(|p: Vec<i64>| {
                    (*l..=*h).map(move |i| {
                        let mut q = p.clone();
                        q.push(i);
                        q
                    })
                })
                .collect();
        }
        out
    }

    pub fn point(&self, idx: &[i64]) -> Point {
        idx.iter().map(|&i| &self.h * Rational::from_integer(BigInt::from(i))).collect()
    }
}

/// Exact values on the grid; absent points are zero.
pub type Cutoff = BTreeMap<Vec<i64>, Rational>;
pub type GridFunction = BTreeMap<Vec<i64>, GaussRational>;

/// The cutoff family `f_{α_k}`, `α_k ∈ N_k`.
#[derive(Clone, Debug)]
pub struct Partition {
    pub k: usize,
    pub functions: Vec<Cutoff>,
}

impl Partition {
    /// Multiplies one member by `factor` (used for negative controls).
    pub fn scaled(&self, alpha: usize, factor: &Rational) -> Partition {
        let mut p = self.clone();
        for v in p.functions[alpha].values_mut() {
            *v = &*v * factor;
        }
        p
    }
}

fn face_points<'a>(poly: &'a SimplicialPolytope, face: &[usize]) -> Vec<&'a Point> {
    face.iter().map(|&i| &poly.vertices[i]).collect()
}

#[derive(Clone, Debug)]
pub struct FlagSetup {
    pub poly: SimplicialPolytope,
    pub lattice: FaceLattice,
    pub b: Rational,
    pub grid: Grid,
    /// `dist²(x, F)` for each level `k < d`, face, and grid point.
    dist2: Vec<Vec<BTreeMap<Vec<i64>, Rational>>>,
    top: Cutoff,
}

impl FlagSetup {
    pub fn new(poly: SimplicialPolytope, b: Rational, h: Rational) -> Result<FlagSetup, FlagError> {
        let quarter = &b / rat(4, 1);
        if !(&quarter / &h).is_integer() || !h.is_positive() {
            return Err(FlagError::GridSpacing { h: h.to_string(), quarter: quarter.to_string() });
        }
        poly.check_edge_lengths(&b)?;
        let lattice = face_lattice(&poly);
        let grid = Grid::around(&poly, &b, &h);
        let idx = grid.indices();
        let b2 = &b * &b;
        let dist2 = (0..poly.dim)
            .map(|k| {
                lattice.faces[k]
                    .iter()
                    .map(|face| {
                        let verts = face_points(&poly, face);
                        idx.iter().map(|i| (i.clone(), dist2_simplex(&grid.point(i), &verts))).collect()
                    })
                    .collect()
            })
            .collect();
        let mut top = Cutoff::new();
        for i in &idx {
            let d2 = poly.dist2(&grid.point(i));
            if d2 < b2 {
                top.insert(i.clone(), (&b2 - d2) / &b2);
            }
        }
        Ok(FlagSetup { poly, lattice, b, grid, dist2, top })
    }

    pub fn dim(&self) -> usize {
        self.poly.dim
    }

    /// `f_0`: one on the polytope, decaying to zero at distance `b`.
    pub fn top_cutoff(&self) -> &Cutoff {
        &self.top
    }

    pub fn build_partition(&self, k: usize) -> Result<Partition, FlagError> {
        if k >= self.dim() {
            return Err(FlagError::Level(k));
        }
        let b2 = &self.b * &self.b;
        let bumps: Vec<Cutoff> = self.dist2[k]
            .iter()
            .map(|d| d.iter().filter(|(_, d2)| **d2 < b2).map(|(i, d2)| (i.clone(), &b2 - d2)).collect())
            .collect();
        let mut total: Cutoff = Cutoff::new();
        for bump in &bumps {
            for (i, v) in bump {
                *total.entry(i.clone()).or_insert_with(Rational::zero) += v;
            }
        }
        let functions = bumps
            .into_iter()
            .map(|bump| {
                bump.into_iter()
                    .map(|(i, v)| {
                        let t = &total[&i];
                        (i, v / t)
                    })
                    .collect()
            })
            .collect();
        Ok(Partition { k, functions })
    }

    /// Properties I and II: supports inside the `b`-neighborhoods and the
    /// sum equal to one on the union of the neighborhoods.
    pub fn check_partition(&self, p: &Partition) -> Result<PartitionCheck, FlagError> {
        let b2 = &self.b * &self.b;
        let mut support_failures = 0;
        for (alpha, f) in p.functions.iter().enumerate() {
            support_failures += f.iter().filter(|(i, v)| !v.is_zero() && self.dist2[p.k][alpha][*i] >= b2).count();
        }
        let mut covered = 0;
        for i in self.grid.indices() {
            let near = self.dist2[p.k].iter().any(|d| d[&i] < b2);
            if !near {
                continue;
            }
            covered += 1;
            let sum = p.functions.iter().filter_map(|f| f.get(&i)).fold(Rational::zero(), |a, b| a + b);
            if !sum.is_one() {
                return Err(FlagError::Uncovered(self.grid.point(&i).iter().map(ToString::to_string).collect()));
            }
        }
        Ok(PartitionCheck { k: p.k, covered_points: covered, support_failures })
    }

    pub fn partitions(&self) -> Result<Vec<Partition>, FlagError> {
        (0..self.dim()).map(|k| self.build_partition(k)).collect()
    }

    /// `v₀ = 1` on the whole grid.
    pub fn constant_v0(&self) -> GridFunction {
        self.grid.indices().into_iter().map(|i| (i, GaussRational::one())).collect()
    }

    /// Small random Gaussian rationals, never zero.
    pub fn random_v0(&self, seed: u64) -> GridFunction {
        let mut rng = rng_for(seed, Stream::Flagcover);
        self.grid
            .indices()
            .into_iter()
            .map(|i| {
                let re = rng.gen_range(1..=9);
                let im = rng.gen_range(-9..=9);
                (i, GaussRational::new(rat(re, rng.gen_range(1..=5)), rat(im, 7)))
            })
            .collect()
    }

    /// `f_{α_k} ⋯ f_{α_{d−1}} f_0 v₀` at one grid point.
    fn flag_value(&self, parts: &[Partition], flag: &Flag, i: &[i64], v0: &GridFunction) -> GaussRational {
        let Some(f0) = self.top.get(i) else {
            return GaussRational::zero();
        };
        let mut acc = GaussRational::real(f0.clone());
        for (j, &alpha) in flag.alphas.iter().enumerate() {
            match parts[flag.k + j].functions[alpha].get(i) {
                Some(v) => acc = &acc * &GaussRational::real(v.clone()),
                None => return GaussRational::zero(),
            }
        }
        match v0.get(i) {
            Some(v) => &acc * v,
            None => GaussRational::zero(),
        }
    }

    /// Properties III and IV at every level.
    pub fn telescope_check(&self, parts: &[Partition], v0: &GridFunction) -> TelescopeReport {
        let b2 = &self.b * &self.b;
        let idx = self.grid.indices();
        let mut levels = Vec::new();
        for k in 0..self.dim() {
            let flags = enumerate_flags(&self.lattice, k);
            let mut support_violations = 0;
            for a in &flags {
                let alpha = a.alphas[0];
                for i in &idx {
                    if !self.flag_value(parts, a, i, v0).is_zero() && self.dist2[k][alpha][i] >= b2 {
                        support_violations += 1;
                    }
                }
            }
            let uppers = enumerate_flags(&self.lattice, k + 1);
            let mut residual_points = 0;
            let mut residual_flags = 0;
            let mut first = None;
            for bflag in &uppers {
                let members: Vec<usize> = (0..self.lattice.count(k))
                    .filter(|&a| bflag.alphas.first().is_none_or(|&j| self.lattice.incident(k, a, j)))
                    .collect();
                let mut bad = 0;
                for i in &idx {
                    let vb = self.flag_value(parts, bflag, i, v0);
                    if vb.is_zero() {
                        continue;
                    }
                    let sum = members
                        .iter()
                        .filter_map(|&a| parts[k].functions[a].get(i))
                        .fold(Rational::zero(), |acc, v| acc + v);
                    let residual = &(&vb * &GaussRational::real(sum)) - &vb;
                    if !residual.is_zero() {
                        bad += 1;
                        if first.is_none() {
                            first = Some(ResidualPoint {
                                point: self.grid.point(i).iter().map(ToString::to_string).collect(),
                                flag: bflag.alphas.clone(),
                                residual: residual.to_string(),
                            });
                        }
                    }
                }
                if bad > 0 {
                    residual_flags += 1;
                    residual_points += bad;
                }
            }
            levels.push(LevelCheck {
                k,
                flags: flags.len(),
                support_violations,
                upper_flags: uppers.len(),
                residual_flags,
                residual_points,
                first_residual: first,
            });
        }
        TelescopeReport { levels }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionCheck {
    pub k: usize,
    pub covered_points: usize,
    pub support_failures: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ResidualPoint {
    pub point: Vec<String>,
    pub flag: Vec<usize>,
    pub residual: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct LevelCheck {
    pub k: usize,
    pub flags: usize,
    pub support_violations: usize,
    pub upper_flags: usize,
    pub residual_flags: usize,
    pub residual_points: usize,
    pub first_residual: Option<ResidualPoint>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TelescopeReport {
    pub levels: Vec<LevelCheck>,
}

impl TelescopeReport {
    pub fn supports_ok(&self) -> bool {
        self.levels.iter().all(|l| l.support_violations == 0)
    }

    pub fn residuals_zero(&self) -> bool {
        self.levels.iter().all(|l| l.residual_points == 0)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RadiusReport {
    pub m: u32,
    pub d: u32,
    pub c: String,
    pub b: String,
    /// `3b + b/(2c)` against `b/c`.
    pub lhs: String,
    pub rhs: String,
    pub inequality_holds: bool,
    /// `b/(2c), b/c, b/(2c²), b/c², …, b/c^{d−1}`.
    pub chain: Vec<String>,
    pub chain_increasing: bool,
    /// The last scale must stay below `c/2`.
    pub below_scale: bool,
    pub first_failure: Option<String>,
}

impl RadiusReport {
    pub fn holds(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// Radius bookkeeping for `b = c^{m+1}`.
pub fn radius_chain(m: u32, d: u32, c: &Rational) -> RadiusReport {
    let b = num_traits::pow(c.clone(), m as usize + 1);
    let two = rat(2, 1);
    let lhs = rat(3, 1) * &b + &b / (&two * c);
    let rhs = &b / c;
    let inequality_holds = lhs <= rhs;
    let mut chain = Vec::new();
    let mut scale = b.clone();
    for _ in 0..d.saturating_sub(1).max(1) {
        scale = &scale / c;
        chain.push(&scale / &two);
        chain.push(scale.clone());
    }
    let chain_increasing = chain.windows(2).all(|w| w[0] < w[1]);
    let cap = c / &two;
    let last = chain.last().cloned().unwrap_or_else(|| b.clone());
    let below_scale = last < cap;
    let first_failure = if !inequality_holds {
        Some(format!("3b + b/2c = {lhs} > b/c = {rhs}"))
    } else if !chain_increasing {
        Some("support chain is not increasing".to_string())
    } else if !below_scale {
        Some(format!("support radius {last} is not below c/2 = {cap}"))
    } else {
        None
    };
    RadiusReport {
        m,
        d,
        c: c.to_string(),
        b: b.to_string(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
        inequality_holds,
        chain: chain.iter().map(ToString::to_string).collect(),
        chain_increasing,
        below_scale,
        first_failure,
    }
}

/// Built-in polytopes: `(polytope, b)`.
pub fn catalog_polytope(name: &str) -> Option<(SimplicialPolytope, Rational)> {
    let p = |x: i64, y: i64| rat(x, y);
    match name {
        "segment" => Some((
            SimplicialPolytope::new("segment", vec![vec![p(0, 1)], vec![p(3, 8)]], vec![vec![0], vec![1]]).ok()?,
            p(1, 4),
        )),
        "triangle" => Some((
            SimplicialPolytope::new(
                "triangle",
                vec![vec![p(0, 1), p(0, 1)], vec![p(1, 2), p(0, 1)], vec![p(0, 1), p(1, 2)]],
                vec![vec![0, 1], vec![1, 2], vec![0, 2]],
            )
            .ok()?,
            p(1, 4),
        )),
        _ => None,
    }
}

pub const POLYTOPE_CATALOG: &[&str] = &["segment", "triangle"];

/// Everything checked on one catalog polytope.
#[derive(Clone, Debug, Serialize)]
pub struct FlagcoverReport {
    pub polytope: String,
    pub dim: usize,
    pub b: String,
    pub h: String,
    pub face_counts: Vec<usize>,
    pub flag_counts: Vec<usize>,
    pub partitions: Vec<PartitionCheck>,
    pub constant_v0: TelescopeReport,
    pub random_v0: TelescopeReport,
}

impl FlagcoverReport {
    pub fn partition_ok(&self) -> bool {
        self.partitions.iter().all(|p| p.support_failures == 0)
    }

    pub fn all_zero(&self) -> bool {
        self.partition_ok()
            && self.constant_v0.supports_ok()
            && self.random_v0.supports_ok()
            && self.constant_v0.residuals_zero()
            && self.random_v0.residuals_zero()
    }
}

pub fn run_polytope(name: &str, seed: u64) -> Result<FlagcoverReport, FlagError> {
    let (poly, b) = catalog_polytope(name).ok_or(FlagError::Dimension(0))?;
    let h = &b / rat(8, 1);
    let setup = FlagSetup::new(poly, b.clone(), h.clone())?;
    let parts = setup.partitions()?;
    let partitions = parts.iter().map(|p| setup.check_partition(p)).collect::<Result<_, _>>()?;
    let d = setup.dim();
    Ok(FlagcoverReport {
        polytope: name.to_string(),
        dim: d,
        b: b.to_string(),
        h: h.to_string(),
        face_counts: (0..=d).map(|k| setup.lattice.count(k)).collect(),
        flag_counts: (0..d).map(|k| enumerate_flags(&setup.lattice, k).len()).collect(),
        partitions,
        constant_v0: setup.telescope_check(&parts, &setup.constant_v0()),
        random_v0: setup.telescope_check(&parts, &setup.random_v0(seed)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(c: &[(i64, i64)]) -> Point {
        c.iter().map(|&(a, b)| rat(a, b)).collect()
    }

    #[test]
    fn distances_to_simplices() {
        let a = pt(&[(0, 1), (0, 1)]);
        let b = pt(&[(2, 1), (0, 1)]);
        assert_eq!(dist2_simplex(&pt(&[(1, 1), (1, 1)]), &[&a, &b]), rat(1, 1));
        assert_eq!(dist2_simplex(&pt(&[(3, 1), (1, 1)]), &[&a, &b]), rat(2, 1));
        assert_eq!(dist2_simplex(&pt(&[(-1, 1), (0, 1)]), &[&a, &b]), rat(1, 1));
    }

    #[test]
    fn triangle_lattice_and_flags() {
        let (t, _) = catalog_polytope("triangle").unwrap();
        let lat = face_lattice(&t);
        assert_eq!((lat.count(0), lat.count(1), lat.count(2)), (3, 3, 1));
        assert_eq!(enumerate_flags(&lat, 1).len(), 3);
        assert_eq!(enumerate_flags(&lat, 0).len(), 6);
        let (s, _) = catalog_polytope("segment").unwrap();
        let lat = face_lattice(&s);
        assert_eq!((lat.count(0), lat.count(1)), (2, 1));
        assert_eq!(enumerate_flags(&lat, 0).len(), 2);
    }

    #[test]
    fn square_with_edge_facets_is_accepted() {
        let sq = SimplicialPolytope::new(
            "square",
            vec![pt(&[(0, 1), (0, 1)]), pt(&[(1, 1), (0, 1)]), pt(&[(1, 1), (1, 1)]), pt(&[(0, 1), (1, 1)])],
            vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
        )
        .unwrap();
        assert_eq!(face_lattice(&sq).count(1), 4);
        let bad = SimplicialPolytope::new("bad", sq.vertices.clone(), vec![vec![0, 1, 2]]);
        assert_eq!(bad.unwrap_err(), FlagError::NotSimplex(0));
    }

    #[test]
    fn segment_telescopes() {
        let r = run_polytope("segment", 5).unwrap();
        assert!(r.all_zero(), "{r:?}");
    }

    #[test]
    fn broken_partition_leaves_a_residual() {
        let (poly, b) = catalog_polytope("segment").unwrap();
        let setup = FlagSetup::new(poly, b.clone(), &b / rat(8, 1)).unwrap();
        let mut parts = setup.partitions().unwrap();
        parts[0] = parts[0].scaled(0, &rat(1, 2));
        let rep = setup.telescope_check(&parts, &setup.constant_v0());
        assert!(rep.levels[0].first_residual.is_some());
    }

    #[test]
    fn oversized_radius_is_rejected() {
        let (poly, _) = catalog_polytope("triangle").unwrap();
        let err = FlagSetup::new(poly, rat(1, 2), rat(1, 16)).unwrap_err();
        assert!(matches!(err, FlagError::EdgeLength { .. }));
    }

    #[test]
    fn radius_inequality() {
        assert!(radius_chain(2, 2, &rat(1, 8)).holds());
        assert_eq!(radius_chain(2, 2, &rat(1, 8)).b, "1/512");
        assert!(!radius_chain(1, 1, &rat(1, 2)).inequality_holds);
        assert!(radius_chain(1, 1, &rat(1, 6)).inequality_holds);
    }
}
