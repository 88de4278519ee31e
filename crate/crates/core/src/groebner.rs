//! Gröbner bases of submodules of `A^N`, `A = Q(i)[ξ₁..ξₙ]`, with membership
//! certificates and syzygies.
//!
//! Every input generator `g_i` is carried as the augmented vector
//! `(g_i | e_i)`. The order ranks every head position above every tail
//! position, so each element of the augmented module satisfies
//! `head = Σ tail_i · g_i`; elements whose head vanishes are syzygies, and
//! those in the final basis generate the whole syzygy module.
//!
//! Terms `(monomial, position)` are compared by block, then shifted degree
//! `deg + shift[pos]`, then position (lower index first), then the base
//! monomial order.

use std::cmp::{Ordering, Reverse};
use std::collections::{BinaryHeap, HashSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::poly::{GaussPoly, GaussRational, Monomial};
use crate::symbol::{ShiftVector, ShiftedMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialOrder {
    Grevlex,
    /// Lexicographic with `ξ₁ > ξ₂ > …`, refined by degree first; on
    /// homogeneous input this agrees with pure lex.
    Lex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.degree().cmp(&b.degree()).then_with(|| a.0.cmp(&b.0)),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

/// Position-aware order on free-module terms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModuleOrder {
    pub base: MonomialOrder,
    /// One shift per position; the shifted degree of `m·e_k` is `deg m + shifts[k]`.
    pub shifts: Vec<i64>,
}

impl ModuleOrder {
    pub fn new(base: MonomialOrder, shifts: Vec<i64>) -> Self {
        ModuleOrder { base, shifts }
    }

    /// Unshifted order for ideals.
    pub fn ideal(base: MonomialOrder) -> Self {
        ModuleOrder { base, shifts: vec![0] }
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }
}

#[derive(Clone, Debug)]
struct Term {
    mon: Monomial,
    pos: usize,
    c: GaussRational,
}

#[derive(Clone, Debug)]
struct TermOrder {
    base: MonomialOrder,
    shifts: Vec<i64>,
    head: usize,
}

impl TermOrder {
    fn shifted_degree(&self, m: &Monomial, pos: usize) -> i64 {
        i64::from(m.degree()) + self.shifts[pos]
    }

    fn cmp(&self, am: &Monomial, ap: usize, bm: &Monomial, bp: usize) -> Ordering {
        let (ah, bh) = (ap < self.head, bp < self.head);
        if ah != bh {
            return if ah { Ordering::Greater } else { Ordering::Less };
        }
        self.shifted_degree(am, ap)
            .cmp(&self.shifted_degree(bm, bp))
            .then_with(|| bp.cmp(&ap))
            .then_with(|| self.base.cmp(am, bm))
    }
}

/// Sparse module element; terms strictly descending in the term order.
#[derive(Clone, Debug, Default)]
struct Vector {
    terms: Vec<Term>,
}

impl Vector {
    fn from_dense(parts: &[GaussPoly], offset: usize, ord: &TermOrder) -> Vector {
        let mut terms: Vec<Term> = parts
            .iter()
            .enumerate()
            .flat_map(|(k, p)| p.terms().map(move |(m, c)| Term { mon: m.clone(), pos: k + offset, c: c.clone() }))
            .collect();
        terms.sort_by(|a, b| ord.cmp(&b.mon, b.pos, &a.mon, a.pos));
        Vector { terms }
    }

    fn unit(pos: usize, nvars: usize) -> Vector {
        Vector { terms: vec![Term { mon: Monomial::one(nvars), pos, c: GaussRational::one() }] }
    }

    fn concat(mut self, other: Vector) -> Vector {
        // head terms always precede tail terms
        self.terms.extend(other.terms);
        self
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> Option<&Term> {
        self.terms.first()
    }

    fn head_is_zero(&self, head: usize) -> bool {
        self.terms.first().is_none_or(|t| t.pos >= head)
    }

    fn normalized(mut self) -> Vector {
        if let Some(inv) = self.terms.first().and_then(|t| t.c.inv()) {
            for t in &mut self.terms {
                t.c = &t.c * &inv;
            }
        }
        self
    }

    /// `self + c · m · other`.
    fn axpy(&self, c: &GaussRational, m: &Monomial, other: &Vector, ord: &TermOrder) -> Vector {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().map(|t| Term { mon: t.mon.mul(m), pos: t.pos, c: &t.c * c }).peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => out.push(a.next().unwrap().clone()),
                (None, Some(_)) => out.push(b.next().unwrap()),
                (Some(x), Some(y)) => match ord.cmp(&x.mon, x.pos, &y.mon, y.pos) {
                    Ordering::Greater => out.push(a.next().unwrap().clone()),
                    Ordering::Less => out.push(b.next().unwrap()),
                    Ordering::Equal => {
                        let x = a.next().unwrap();
                        let y = b.next().unwrap();
                        let s = &x.c + &y.c;
                        if !s.is_zero() {
                            out.push(Term { mon: x.mon.clone(), pos: x.pos, c: s });
                        }
                    }
                },
            }
        }
        Vector { terms: out }
    }

    fn to_dense(&self, from: usize, to: usize, nvars: usize) -> Vec<GaussPoly> {
        let mut out = vec![GaussPoly::zero(nvars); to - from];
        for t in &self.terms {
            if t.pos >= from && t.pos < to {
                out[t.pos - from].add_term(t.mon.clone(), t.c.clone());
            }
        }
        out
    }
}

/// Reduces `v` by `basis`. With `head_only`, reduction stops as soon as the
/// leading term falls in the tail block and the remaining tail is kept.
fn reduce(v: Vector, basis: &[Vector], ord: &TermOrder, head_only: bool) -> Vector {
    let mut done: Vec<Term> = Vec::new();
    let mut p = v;
    while let Some(lt) = p.lead() {
        if head_only && lt.pos >= ord.head {
            break;
        }
        let reducer = basis.iter().find(|g| {
            let gl = g.lead().expect("basis elements are nonzero");
            gl.pos == lt.pos && gl.mon.divides(&lt.mon)
        });
        match reducer {
            Some(g) => {
                let gl = g.lead().unwrap();
                let c = -(&lt.c / &gl.c);
                let m = gl.mon.quotient_of(&lt.mon);
                p = p.axpy(&c, &m, g, ord);
            }
            None => {
                done.push(p.terms.remove(0));
            }
        }
    }
    done.extend(p.terms);
    Vector { terms: done }
}

/// A Gröbner basis with, for every element, its expression in the input
/// generators.
#[derive(Clone, Debug)]
pub struct GBasis {
    nvars: usize,
    rank: usize,
    ngens: usize,
    order: ModuleOrder,
    tord: TermOrder,
    /// Elements with nonzero head.
    elements: Vec<Vector>,
    /// Elements with zero head: a basis of the syzygy module of the inputs.
    syzygies: Vec<Vector>,
    pub reduced: bool,
}

/// Remainder of a reduction together with `v − remainder = Σ cofactors_i · g_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub remainder: Vec<GaussPoly>,
    pub cofactors: Vec<GaussPoly>,
}

impl NormalForm {
    pub fn is_zero(&self) -> bool {
        self.remainder.iter().all(GaussPoly::is_zero)
    }
}

impl GBasis {
    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Basis elements as dense vectors of length `rank`.
    pub fn generators(&self) -> Vec<Vec<GaussPoly>> {
        self.elements.iter().map(|e| e.to_dense(0, self.rank, self.nvars)).collect()
    }

    /// Coefficients expressing basis element `k` in the input generators.
    pub fn certificate(&self, k: usize) -> Vec<GaussPoly> {
        self.elements[k].to_dense(self.rank, self.rank + self.ngens, self.nvars)
    }

    /// Leading `(monomial, position)` of each basis element.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elements
            .iter()
            .map(|e| {
                let t = e.lead().expect("nonzero");
                (t.mon.clone(), t.pos)
            })
            .collect()
    }

    /// Generators of the syzygy module of the inputs (as vectors of length
    /// `ngens`); empty when the inputs are independent or untracked.
    pub fn input_syzygies(&self) -> Vec<Vec<GaussPoly>> {
        self.syzygies.iter().map(|e| e.to_dense(self.rank, self.rank + self.ngens, self.nvars)).collect()
    }

    pub fn normal_form(&self, v: &[GaussPoly]) -> NormalForm {
        assert_eq!(v.len(), self.rank, "normal_form: rank mismatch");
        let head = Vector::from_dense(v, 0, &self.tord);
        let r = reduce(head, &self.elements, &self.tord, true);
        let remainder = r.to_dense(0, self.rank, self.nvars);
        let tail = r.to_dense(self.rank, self.rank + self.ngens, self.nvars);
        NormalForm { remainder, cofactors: tail.iter().map(|p| -p).collect() }
    }

    pub fn contains(&self, v: &[GaussPoly]) -> bool {
        self.normal_form(v).is_zero()
    }
}

struct Pair {
    i: usize,
    j: usize,
}

/// Buchberger's algorithm with the normal selection strategy.
///
/// `gen_shifts` gives the shifted degree assigned to each input generator's
/// certificate position; pass the row shifts when the inputs are rows of a
/// homogeneous matrix so that syzygies come out homogeneous.
fn run(gens: &[Vec<GaussPoly>], order: &ModuleOrder, nvars: usize, gen_shifts: Option<&[i64]>, track: bool) -> GBasis {
    let rank = order.rank();
    let ngens = if track { gens.len() } else { 0 };
    let mut shifts = order.shifts.clone();
    let head_ord = TermOrder { base: order.base, shifts: order.shifts.clone(), head: rank };
    if track {
        for (k, g) in gens.iter().enumerate() {
            let s = match gen_shifts {
                Some(s) => s[k],
                None => {
                    let v = Vector::from_dense(g, 0, &head_ord);
                    v.lead().map(|t| head_ord.shifted_degree(&t.mon, t.pos)).unwrap_or(0)
                }
            };
            shifts.push(s);
        }
    }
    let ord = TermOrder { base: order.base, shifts, head: rank };
    let product_criterion = !track && rank == 1;

    let mut basis: Vec<Vector> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(i64, usize, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let mut counter = 0usize;

    let mut insert = |v: Vector,
                      basis: &mut Vec<Vector>,
                      heap: &mut BinaryHeap<Reverse<(i64, usize, usize, usize)>>,
                      pending: &mut HashSet<(usize, usize)>| {
        let v = v.normalized();
        let j = basis.len();
        let lj = v.lead().expect("nonzero").clone();
        for (i, b) in basis.iter().enumerate() {
            let li = b.lead().unwrap();
            if li.pos != lj.pos {
                continue;
            }
            let l = li.mon.lcm(&lj.mon);
            let deg = ord.shifted_degree(&l, lj.pos);
            heap.push(Reverse((deg, counter, i, j)));
            counter += 1;
            pending.insert((i, j));
        }
        basis.push(v);
    };

    for (k, g) in gens.iter().enumerate() {
        let mut v = Vector::from_dense(g, 0, &ord);
        if track {
            v = v.concat(Vector::unit(rank + k, nvars));
        }
        let v = reduce(v, &basis, &ord, false);
        if !v.is_zero() {
            insert(v, &mut basis, &mut heap, &mut pending);
        }
    }

    while let Some(Reverse((_, _, i, j))) = heap.pop() {
        let pair = Pair { i, j };
        pending.remove(&(pair.i, pair.j));
        let li = basis[pair.i].lead().unwrap().clone();
        let lj = basis[pair.j].lead().unwrap().clone();
        if product_criterion && li.mon.is_coprime(&lj.mon) {
            continue;
        }
        let l = li.mon.lcm(&lj.mon);
        let chain = (0..basis.len()).any(|k| {
            if k == pair.i || k == pair.j {
                return false;
            }
            let lk = basis[k].lead().unwrap();
            lk.pos == li.pos
                && lk.mon.divides(&l)
                && !pending.contains(&(pair.i.min(k), pair.i.max(k)))
                && !pending.contains(&(pair.j.min(k), pair.j.max(k)))
        });
        if chain {
            continue;
        }
        let zero = Vector::default();
        let s = zero.axpy(&(&GaussRational::one() / &li.c), &li.mon.quotient_of(&l), &basis[pair.i], &ord).axpy(
            &(-(&GaussRational::one() / &lj.c)),
            &lj.mon.quotient_of(&l),
            &basis[pair.j],
            &ord,
        );
        let r = reduce(s, &basis, &ord, false);
        if !r.is_zero() {
            insert(r, &mut basis, &mut heap, &mut pending);
        }
    }

    // minimal, then fully interreduced
    let mut keep: Vec<Vector> = Vec::new();
    for (k, v) in basis.iter().enumerate() {
        let lv = v.lead().unwrap();
        let redundant = basis.iter().enumerate().any(|(o, w)| {
            if o == k {
                return false;
            }
            let lw = w.lead().unwrap();
            lw.pos == lv.pos && lw.mon.divides(&lv.mon) && (lw.mon != lv.mon || o < k)
        });
        if !redundant {
            keep.push(v.clone());
        }
    }
    let mut reduced = Vec::with_capacity(keep.len());
    for k in 0..keep.len() {
        let others: Vec<Vector> = keep.iter().enumerate().filter(|(o, _)| *o != k).map(|(_, v)| v.clone()).collect();
        let lead = Vector { terms: vec![keep[k].terms[0].clone()] };
        let rest = Vector { terms: keep[k].terms[1..].to_vec() };
        let rest = reduce(rest, &others, &ord, false);
        reduced.push(lead.axpy(&GaussRational::one(), &Monomial::one(nvars), &rest, &ord).normalized());
    }
    let (elements, syzygies): (Vec<Vector>, Vec<Vector>) = reduced.into_iter().partition(|v| !v.head_is_zero(rank));

    GBasis { nvars, rank, ngens, order: order.clone(), tord: ord, elements, syzygies, reduced: true }
}

fn nvars_of(gens: &[Vec<GaussPoly>]) -> Option<usize> {
    gens.iter().flatten().next().map(GaussPoly::nvars)
}

/// Gröbner basis of the submodule generated by `gens`, with certificates.
/// Empty input gives an empty basis.
pub fn buchberger(gens: &[Vec<GaussPoly>], order: &ModuleOrder) -> GBasis {
    let nvars = nvars_of(gens).unwrap_or(0);
    run(gens, order, nvars, None, true)
}

/// Same basis without certificate tracking (faster; enables the coprime
/// criterion for ideals).
pub fn buchberger_untracked(gens: &[Vec<GaussPoly>], order: &ModuleOrder) -> GBasis {
    let nvars = nvars_of(gens).unwrap_or(0);
    run(gens, order, nvars, None, false)
}

/// Free-module normal form of `v` against `basis`.
pub fn normal_form(v: &[GaussPoly], basis: &GBasis) -> NormalForm {
    basis.normal_form(v)
}

/// Rows generating the kernel of `v ↦ v·M`, with row shifts `τ_j = ord_σ q_j`.
///
/// The result is a minimal generating set: candidates are taken in order of
/// increasing degree and kept only if not already in the span of those kept.
pub fn syzygies(m: &ShiftedMatrix) -> Result<ShiftedMatrix, crate::symbol::SymbolError> {
    m.require_homogeneous()?;
    let nvars = m.nvars();
    let s = m.nrows();
    let sigma = m.row_shifts().clone();
    let order = ModuleOrder::new(MonomialOrder::Grevlex, m.col_shifts().0.clone());
    let gb = run(m.rows(), &order, nvars, Some(&sigma.0), true);
    let mut cands: Vec<(i64, Vec<GaussPoly>)> =
        gb.input_syzygies().into_iter().map(|q| (ord_shifted(&q, &sigma), q)).collect();
    cands.sort_by_key(|(d, _)| *d);

    let syz_order = ModuleOrder::new(MonomialOrder::Grevlex, sigma.0.clone());
    let mut kept: Vec<Vec<GaussPoly>> = Vec::new();
    let mut kept_deg: Vec<i64> = Vec::new();
    for (d, q) in cands {
        if !kept.is_empty() && buchberger_untracked(&kept, &syz_order).contains(&q) {
            continue;
        }
        kept.push(q);
        kept_deg.push(d);
    }
    let q = ShiftedMatrix::new(nvars, s, kept, ShiftVector(kept_deg), sigma)?;
    debug_assert!(q.is_homogeneous());
    Ok(q)
}

/// `max_i (deg q_i + shift_i)` over nonzero components.
pub fn ord_shifted(q: &[GaussPoly], shifts: &ShiftVector) -> i64 {
    q.iter()
        .zip(&shifts.0)
        .filter_map(|(p, s)| p.total_degree().finite().map(|d| i64::from(d) + s))
        .max()
        .unwrap_or(i64::MIN)
}

/// An ideal of `A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Ideal {
    pub nvars: usize,
    pub generators: Vec<GaussPoly>,
}

impl Ideal {
    pub fn new(nvars: usize, generators: Vec<GaussPoly>) -> Self {
        Ideal { nvars, generators }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(GaussPoly::is_homogeneous)
    }

    pub fn groebner(&self, base: MonomialOrder) -> Vec<GaussPoly> {
        let gens: Vec<Vec<GaussPoly>> =
            self.generators.iter().filter(|g| !g.is_zero()).map(|g| vec![g.clone()]).collect();
        if gens.is_empty() {
            return Vec::new();
        }
        buchberger_untracked(&gens, &ModuleOrder::ideal(base))
            .generators()
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    /// Leading monomials of a Gröbner basis.
    pub fn initial_monomials(&self, base: MonomialOrder) -> Vec<Monomial> {
        let gens: Vec<Vec<GaussPoly>> =
            self.generators.iter().filter(|g| !g.is_zero()).map(|g| vec![g.clone()]).collect();
        if gens.is_empty() {
            return Vec::new();
        }
        buchberger_untracked(&gens, &ModuleOrder::ideal(base)).leading_terms().into_iter().map(|(m, _)| m).collect()
    }
}

/// Krull dimension of `A/I`: `n` for the zero ideal, `-1` for the unit ideal.
pub fn krull_dim(ideal: &Ideal, base: MonomialOrder) -> i64 {
    let lead = ideal.initial_monomials(base);
    dim_of_monomial_ideal(ideal.nvars, &lead)
}

/// Largest `|S|` such that no generator is supported inside `S`.
pub fn dim_of_monomial_ideal(nvars: usize, gens: &[Monomial]) -> i64 {
    if gens.iter().any(Monomial::is_one) {
        return -1;
    }
    let masks: Vec<u32> = gens.iter().map(|m| m.support().fold(0u32, |acc, k| acc | (1 << k))).collect();
    let mut best = 0i64;
    for s in 0u32..(1u32 << nvars) {
        let size = i64::from(s.count_ones());
        if size > best && masks.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sysparse::parse;

    fn x(n: usize, k: usize) -> GaussPoly {
        GaussPoly::var(n, k)
    }

    fn i_times(p: &GaussPoly) -> GaussPoly {
        p.scale(&GaussRational::i())
    }

    fn cr_linear_forms() -> (GaussPoly, GaussPoly) {
        (&x(4, 0) + &i_times(&x(4, 1)), &x(4, 2) + &i_times(&x(4, 3)))
    }

    #[test]
    fn monomial_generators_are_their_own_basis() {
        let gb = buchberger(&[vec![x(2, 0)], vec![x(2, 1)]], &ModuleOrder::ideal(MonomialOrder::Grevlex));
        let mut g = gb.generators();
        g.sort_by_key(|v| v[0].to_string());
        assert_eq!(g, vec![vec![x(2, 0)], vec![x(2, 1)]]);
    }

    #[test]
    fn cauchy_riemann_initial_ideal_under_lex() {
        let (p1, p2) = cr_linear_forms();
        let gb = buchberger(&[vec![p1.clone()], vec![p2.clone()]], &ModuleOrder::ideal(MonomialOrder::Lex));
        let mut lead: Vec<Monomial> = gb.leading_terms().into_iter().map(|(m, _)| m).collect();
        lead.sort();
        assert_eq!(lead, vec![Monomial(vec![0, 0, 1, 0]), Monomial(vec![1, 0, 0, 0])]);
        let nf = gb.normal_form(&[x(4, 1).pow(4)]);
        assert_eq!(nf.remainder, vec![x(4, 1).pow(4)]);
        assert!(gb.normal_form(&[GaussPoly::zero(4)]).is_zero());
        for g in [&p1, &p2] {
            assert!(gb.contains(&[g.clone()]));
        }
    }

    #[test]
    fn principal_ideal_is_its_own_basis() {
        let w = &x(2, 0).pow(2) - &x(2, 1).pow(2);
        let gb = buchberger(&[vec![w.clone()]], &ModuleOrder::ideal(MonomialOrder::Grevlex));
        assert_eq!(gb.generators(), vec![vec![w]]);
    }

    #[test]
    fn certificates_reconstruct_basis_elements() {
        let gens = vec![
            vec![&x(3, 0).pow(2) + &x(3, 1), x(3, 2)],
            vec![&x(3, 0) * &x(3, 1), &x(3, 0) - &x(3, 2)],
            vec![x(3, 1).pow(2), GaussPoly::zero(3)],
        ];
        let gb = buchberger(&gens, &ModuleOrder::new(MonomialOrder::Grevlex, vec![0, 1]));
        for (k, b) in gb.generators().iter().enumerate() {
            let cert = gb.certificate(k);
            let mut sum = vec![GaussPoly::zero(3); 2];
            for (c, g) in cert.iter().zip(&gens) {
                for (s, gi) in sum.iter_mut().zip(g) {
                    *s = &*s + &(c * gi);
                }
            }
            assert_eq!(&sum, b);
        }
        for g in &gens {
            let nf = gb.normal_form(g);
            assert!(nf.is_zero());
            // cofactors express g in the inputs
            let mut sum = vec![GaussPoly::zero(3); 2];
            for (c, h) in nf.cofactors.iter().zip(&gens) {
                for (s, hi) in sum.iter_mut().zip(h) {
                    *s = &*s + &(c * hi);
                }
            }
            assert_eq!(&sum, g);
        }
    }

    #[test]
    fn koszul_syzygy_in_two_variables() {
        let m = ShiftedMatrix::from_spec(&parse("vars 2; unknowns 1; eq d1; eq d2;").unwrap()).unwrap();
        let q = syzygies(&m).unwrap();
        assert_eq!(q.nrows(), 1);
        assert_eq!(q.rows()[0], vec![x(2, 1), -&x(2, 0)]);
        assert_eq!(q.row_shifts(), &ShiftVector(vec![2]));
        assert!(q.mul(&m).unwrap().is_zero());
    }

    #[test]
    fn cauchy_riemann_syzygy() {
        let m = ShiftedMatrix::from_spec(&parse("vars 4; unknowns 1; eq d1 + i*d2; eq d3 + i*d4;").unwrap()).unwrap();
        let (p1, p2) = cr_linear_forms();
        let q = syzygies(&m).unwrap();
        assert_eq!(q.rows(), &[vec![p2, -&p1]]);
        assert_eq!(q.row_shifts(), &ShiftVector(vec![2]));
    }

    #[test]
    fn unit_matrix_has_zero_kernel() {
        let m = ShiftedMatrix::from_spec(&parse("vars 2; unknowns 1; eq 1;").unwrap()).unwrap();
        let q = syzygies(&m).unwrap();
        assert_eq!((q.nrows(), q.ncols()), (0, 1));
    }

    #[test]
    fn zero_row_contributes_a_unit_syzygy() {
        let m = ShiftedMatrix::new(
            2,
            1,
            vec![vec![x(2, 0)], vec![GaussPoly::zero(2)]],
            ShiftVector(vec![1, 0]),
            ShiftVector(vec![0]),
        )
        .unwrap();
        let q = syzygies(&m).unwrap();
        assert_eq!(q.rows(), &[vec![GaussPoly::zero(2), GaussPoly::one(2)]]);
    }

    #[test]
    fn krull_dimensions() {
        let n3 = Ideal::new(3, (0..3).map(|k| x(3, k)).collect());
        assert_eq!(krull_dim(&n3, MonomialOrder::Grevlex), 0);
        let (p1, p2) = cr_linear_forms();
        assert_eq!(krull_dim(&Ideal::new(4, vec![p1, p2]), MonomialOrder::Lex), 2);
        assert_eq!(krull_dim(&Ideal::new(2, vec![GaussPoly::sum_of_squares(2)]), MonomialOrder::Grevlex), 1);
        assert_eq!(krull_dim(&Ideal::new(2, vec![]), MonomialOrder::Grevlex), 2);
        assert_eq!(krull_dim(&Ideal::new(2, vec![GaussPoly::zero(2)]), MonomialOrder::Grevlex), 2);
        assert_eq!(krull_dim(&Ideal::new(2, vec![&x(2, 0) + &GaussPoly::one(2), x(2, 0)]), MonomialOrder::Grevlex), -1);
    }

    #[test]
    fn grevlex_breaks_ties_from_the_last_variable() {
        let o = MonomialOrder::Grevlex;
        assert_eq!(o.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])), Ordering::Less);
        assert_eq!(o.cmp(&Monomial(vec![2, 0, 0]), &Monomial(vec![1, 1, 0])), Ordering::Greater);
        let l = MonomialOrder::Lex;
        assert_eq!(l.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])), Ordering::Greater);
    }
}
