//! Seeded rational sampling shared by the symbol, omega and charvar checks.
//!
//! A single seed drives everything; each consumer takes its own ChaCha
//! stream so adding samples in one stage never perturbs another.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::poly::{GaussRational, Rational};

/// Default seed when neither `--seed` nor `OVERDET_SEED` is given.
pub const DEFAULT_SEED: u64 = 0x0dde_7e11;

#[derive(Clone, Copy, Debug)]
pub enum Stream {
    Ellipticity = 1,
    Omega = 2,
    OmegaIdentity = 3,
    CharVariety = 4,
    Flagcover = 5,
    SelfTest = 6,
}

pub fn rng_for(seed: u64, stream: Stream) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

/// A uniform draw from `{-1000..1000}ⁿ \ {0}` scaled to max-norm 1.
pub fn sphere_proxy_point<R: Rng>(rng: &mut R, n: usize) -> Vec<Rational> {
    loop {
        let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(-1000..=1000)).collect();
        let norm = raw.iter().map(|v| v.abs()).max().unwrap_or(0);
        if norm == 0 {
            continue;
        }
        return raw.into_iter().map(|v| Rational::new(BigInt::from(v), BigInt::from(norm))).collect();
    }
}

/// A random complex vector with small rational entries, not all zero.
pub fn random_complex_vector<R: Rng>(rng: &mut R, len: usize) -> Vec<GaussRational> {
    loop {
        let v: Vec<GaussRational> = (0..len)
            .map(|_| {
                GaussRational::new(
                    Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()),
                    Rational::new(rng.gen_range(-9..=9).into(), rng.gen_range(1..=4).into()),
                )
            })
            .collect();
        if v.iter().any(|x| !x.is_zero()) {
            return v;
        }
    }
}

/// Nonzero integer points with entries in `-bound..=bound`, ordered by
/// max-norm and then lexicographically in the value order `0, 1, -1, 2, -2, …`.
pub fn small_box_points(n: usize, bound: i64) -> Vec<Vec<Rational>> {
    let order: Vec<i64> = std::iter::once(0).chain((1..=bound).flat_map(|k| [k, -k])).collect();
    let base = order.len();
    let total = base.pow(n as u32);
    let mut out = Vec::new();
    for norm in 1..=bound {
        for code in 0..total {
            // last coordinate varies fastest
            let mut c = code;
            let mut pt = vec![0i64; n];
            for slot in pt.iter_mut().rev() {
                *slot = order[c % base];
                c /= base;
            }
            if pt.iter().map(|v| v.abs()).max() == Some(norm) {
                out.push(pt.into_iter().map(|v| Rational::from_integer(v.into())).collect());
            }
        }
    }
    out
}

pub fn is_zero_point(p: &[Rational]) -> bool {
    p.iter().all(|x| x.is_zero())
}

pub fn max_norm(p: &[Rational]) -> Rational {
    p.iter().map(Signed::abs).max().unwrap_or_else(Rational::zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn box_points_start_with_unit_directions() {
        let pts = small_box_points(2, 1);
        assert_eq!(pts.len(), 8);
        let ints: Vec<Vec<i64>> =
            pts.iter().map(|p| p.iter().map(|q| q.to_integer().try_into().unwrap()).collect()).collect();
        assert_eq!(ints[0], vec![0, 1]);
        assert_eq!(ints[3], vec![1, 1]);
        assert_eq!(small_box_points(3, 2).len(), 5usize.pow(3) - 1);
    }

    #[test]
    fn proxy_points_have_unit_max_norm() {
        let mut rng = rng_for(7, Stream::Ellipticity);
        for _ in 0..50 {
            let p = sphere_proxy_point(&mut rng, 4);
            assert_eq!(max_norm(&p), Rational::from_integer(1.into()));
        }
    }

    #[test]
    fn streams_are_independent() {
        let a: u64 = rng_for(1, Stream::Omega).gen();
        let b: u64 = rng_for(1, Stream::Ellipticity).gen();
        let c: u64 = rng_for(1, Stream::Omega).gen();
        assert_ne!(a, b);
        assert_eq!(a, c);
    }
}
