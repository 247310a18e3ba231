//! Seeded random inputs for property tests and table cross-checks.
//!
//! Every generator takes an explicit [`Rng`]; build one with [`rng`]. The
//! underlying generator is SplitMix64 (64-bit state), so a seed fixes the
//! whole sequence on every platform.

use std::f64::consts::{FRAC_PI_4, PI};

use rand::{Rng as _, SeedableRng};
use rand_distr::StandardNormal;
use rand_xoshiro::SplitMix64;

use crate::fano::FanoParams;
use crate::linalg::{tensor, BipartiteState, ComplexMatrix, C64};
use crate::rindler::RindlerParam;

pub type Rng = SplitMix64;

pub fn rng(seed: u64) -> Rng {
    SplitMix64::seed_from_u64(seed)
}

fn gaussian(rng: &mut Rng) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// `G G† / tr(G G†)` for a Ginibre matrix `G` (full rank with probability 1).
pub fn random_density(rng: &mut Rng, n: usize) -> ComplexMatrix {
    let g = ComplexMatrix::from_fn(n, n, |_, _| gaussian(rng));
    let m = &g * &g.adjoint();
    let tr = m.trace().re;
    m.scale_real(1.0 / tr).hermitian_part()
}

/// Random physical `(2, dim_b)` state.
pub fn random_state(rng: &mut Rng, dim_b: usize) -> BipartiteState {
    BipartiteState::new(random_density(rng, 2 * dim_b), 2, dim_b)
        .expect("Ginibre states are Hermitian")
}

/// `rho_A ⊗ rho_B` with independent random marginals.
pub fn random_product_state(rng: &mut Rng, dim_b: usize) -> BipartiteState {
    let a = random_density(rng, 2);
    let b = random_density(rng, dim_b);
    BipartiteState::new(tensor(&a, &b).hermitian_part(), 2, dim_b)
        .expect("product of Hermitian factors")
}

/// Random Hermitian matrix with standard normal entries (not normalized).
pub fn random_hermitian(rng: &mut Rng, n: usize) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, n, |_, _| gaussian(rng)).hermitian_part()
}

/// Fano parameters drawn uniformly from `[-1, 1]`; generally not physical.
pub fn random_fano(rng: &mut Rng) -> FanoParams {
    let mut p = FanoParams::zero();
    let mut draw = || rng.random_range(-1.0..=1.0);
    p.s.iter_mut().for_each(|x| *x = draw());
    p.t.iter_mut().for_each(|x| *x = draw());
    p.c.iter_mut().flatten().for_each(|x| *x = draw());
    p
}

/// Unitary built as a diagonal phase layer followed by `n(n-1)/2` Givens
/// rotations with random angle and phase, one per index pair.
pub fn random_unitary(rng: &mut Rng, n: usize) -> ComplexMatrix {
    let mut u = ComplexMatrix::zeros(n, n);
    for i in 0..n {
        u[(i, i)] = C64::from_polar(1.0, rng.random_range(0.0..2.0 * PI));
    }
    for p in 0..n {
        for q in p + 1..n {
            let theta = rng.random_range(0.0..PI);
            let phi = rng.random_range(0.0..2.0 * PI);
            let (c, s) = (theta.cos(), theta.sin());
            let mut g = ComplexMatrix::identity(n);
            g[(p, p)] = C64::new(c, 0.0);
            g[(q, q)] = C64::new(c, 0.0);
            g[(p, q)] = -C64::from_polar(s, phi);
            g[(q, p)] = C64::from_polar(s, -phi);
            u = &g * &u;
        }
    }
    u
}

/// Rindler parameter uniform on `[0, pi/4]`.
pub fn random_r(rng: &mut Rng) -> RindlerParam {
    RindlerParam::new(rng.random_range(0.0..=FRAC_PI_4)).expect("sampled inside the range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fano::validate_state;

    #[test]
    fn same_seed_same_sequence() {
        let a = random_density(&mut rng(7), 6);
        let b = random_density(&mut rng(7), 6);
        assert_eq!(a.as_slice(), b.as_slice());
        let c = random_density(&mut rng(8), 6);
        assert_ne!(a.as_slice(), c.as_slice());
    }

    #[test]
    fn random_states_are_physical() {
        let mut r = rng(1);
        for _ in 0..20 {
            let s = random_state(&mut r, 3);
            assert!(validate_state(s.rho(), 1e-12, 0.0).is_physical);
        }
    }

    #[test]
    fn random_unitary_is_unitary() {
        let mut r = rng(2);
        for n in [2, 3, 4] {
            let u = random_unitary(&mut r, n);
            let id = &u.adjoint() * &u;
            assert!(id.max_abs_diff(&ComplexMatrix::identity(n)) < 1e-14);
        }
    }

    #[test]
    fn random_r_in_range() {
        let mut r = rng(3);
        for _ in 0..100 {
            let x = random_r(&mut r).value();
            assert!((0.0..=FRAC_PI_4).contains(&x));
        }
    }
}
