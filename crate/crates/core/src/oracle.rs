//! Brute-force linear algebra on graded slices, used to cross-check the
//! Gröbner-based kernels and homology.
//!
//! A row vector `v` over a free module with shifts `σ` is homogeneous of
//! degree `δ` when `v_i` is a form of degree `δ − σ_i`; `v ↦ v·M` maps that
//! slice into the degree-`δ` slice of the target. Slices are finite
//! dimensional, so kernels and images reduce to matrix rank.

use num_traits::Zero;

use crate::linalg::Matrix;
use crate::poly::{GaussPoly, GaussRational, Monomial};
use crate::symbol::{ShiftVector, ShiftedMatrix};

/// All monomials of total degree `d` in `n` variables.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    fn go(n: usize, k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == n {
            cur[k] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in (0..=left).rev() {
            cur[k] = e;
            go(n, k + 1, left - e, cur, out);
        }
    }
    if n == 0 {
        return if d == 0 { vec![Monomial(vec![])] } else { vec![] };
    }
    let mut out = Vec::new();
    go(n, 0, d, &mut vec![0; n], &mut out);
    out
}

/// Basis `(position, monomial)` of the degree-`delta` slice.
pub fn slice_basis(nvars: usize, shifts: &ShiftVector, delta: i64) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    for (pos, s) in shifts.0.iter().enumerate() {
        let d = delta - s;
        if d >= 0 {
            out.extend(monomials_of_degree(nvars, d as u32).into_iter().map(|m| (pos, m)));
        }
    }
    out
}

fn coordinates(v: &[GaussPoly], basis: &[(usize, Monomial)]) -> Vec<GaussRational> {
    basis.iter().map(|(pos, m)| v[*pos].coeff(m)).collect()
}

fn from_coordinates(c: &[GaussRational], basis: &[(usize, Monomial)], len: usize, nvars: usize) -> Vec<GaussPoly> {
    let mut v = vec![GaussPoly::zero(nvars); len];
    for (x, (pos, m)) in c.iter().zip(basis) {
        if !x.is_zero() {
            v[*pos].add_term(m.clone(), x.clone());
        }
    }
    v
}

/// `(position, monomial)` coordinates of one graded piece.
pub type SliceBasis = Vec<(usize, Monomial)>;

/// Matrix of `v ↦ v·M` restricted to degree `delta`, acting on coordinate
/// columns (so its nullspace is the kernel slice).
pub fn slice_map(m: &ShiftedMatrix, delta: i64) -> (Matrix, SliceBasis, SliceBasis) {
    let n = m.nvars();
    let dom = slice_basis(n, m.row_shifts(), delta);
    let cod = slice_basis(n, m.col_shifts(), delta);
    let mut mat = Matrix::zeros(cod.len(), dom.len());
    for (c, (pos, mono)) in dom.iter().enumerate() {
        let img: Vec<GaussPoly> =
            m.rows()[*pos].iter().map(|p| p.mul_monomial(mono, &GaussRational::from_int(1))).collect();
        for (r, x) in coordinates(&img, &cod).into_iter().enumerate() {
            if !x.is_zero() {
                mat.set(r, c, x);
            }
        }
    }
    (mat, dom, cod)
}

/// Kernel of `v ↦ v·M` in degree `delta`, as module elements.
pub fn kernel_slice(m: &ShiftedMatrix, delta: i64) -> Vec<Vec<GaussPoly>> {
    let (mat, dom, _) = slice_map(m, delta);
    if dom.is_empty() {
        return Vec::new();
    }
    mat.nullspace().iter().map(|c| from_coordinates(c, &dom, m.nrows(), m.nvars())).collect()
}

/// Dimension of the degree-`delta` slice of the module generated by the rows.
pub fn span_rank(gens: &ShiftedMatrix, delta: i64) -> usize {
    slice_map(gens, delta).0.rank()
}

/// `dim ker_δ(next) − dim im_δ(prev)` at a position of a complex of row
/// maps `prev: A^a → A^b`, `next: A^b → A^c`. Either map may be absent
/// (zero incoming map / everything is a cycle).
pub fn homology_dim(
    nvars: usize,
    shifts: &ShiftVector,
    prev: Option<&ShiftedMatrix>,
    next: Option<&ShiftedMatrix>,
    delta: i64,
) -> usize {
    let cycles = match next {
        Some(m) => {
            let (mat, dom, _) = slice_map(m, delta);
            dom.len() - mat.rank()
        }
        None => slice_basis(nvars, shifts, delta).len(),
    };
    let boundaries = prev.map_or(0, |m| span_rank(m, delta));
    cycles - boundaries
}

/// Does `v` lie in the row span of `gens` (degreewise, `v` homogeneous of
/// degree `delta`)?
pub fn in_span(gens: &ShiftedMatrix, v: &[GaussPoly], delta: i64) -> bool {
    let (mat, _, cod) = slice_map(gens, delta);
    let target = coordinates(v, &cod);
    let before = mat.rank();
    let mut rows: Vec<Vec<GaussRational>> = (0..mat.rows()).map(|r| mat.row(r).to_vec()).collect();
    for (row, x) in rows.iter_mut().zip(target) {
        row.push(x);
    }
    let augmented = Matrix::from_rows(rows, mat.cols() + 1);
    augmented.rank() == before
}

/// Degree range to scan so that every slice component has degree ≤ `max_deg`.
pub fn degree_window(shifts: &ShiftVector, max_deg: i64) -> std::ops::RangeInclusive<i64> {
    let lo = shifts.0.iter().copied().min().unwrap_or(0);
    lo..=lo + max_deg
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sysparse::parse;

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 5).len(), 56);
        assert_eq!(monomials_of_degree(1, 4), vec![Monomial(vec![4])]);
    }

    #[test]
    fn koszul_slices_in_two_variables() {
        let m = ShiftedMatrix::from_spec(&parse("vars 2; unknowns 1; eq d1; eq d2;").unwrap()).unwrap();
        // kernel of (a, b) ↦ a ξ₁ + b ξ₂ in degree 2 is spanned by (ξ₂, −ξ₁)
        let k = kernel_slice(&m, 2);
        assert_eq!(k.len(), 1);
        assert_eq!(kernel_slice(&m, 3).len(), 2);
        assert_eq!(span_rank(&m, 1), 2);
        assert_eq!(span_rank(&m, 3), 4);
    }
}
