//! Seeded random generation of exact values for the verification suites.
//!
//! Numerators and denominators are bounded by 100 so products stay small and
//! every draw is reproducible from the seed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::clifford::{Blade, Multivector};
use crate::octonion::Octonion;
use crate::rational::Rational;
use crate::tensor::TensorElement;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut ChaCha8Rng) -> Rational {
    let num = rng.gen_range(-100i64..=100);
    let den = rng.gen_range(1i64..=100);
    Rational::from_ratio(num, den).expect("positive denominator")
}

pub fn octonion(rng: &mut ChaCha8Rng) -> Octonion {
    let coeffs: [Rational; 8] = std::array::from_fn(|_| rational(rng));
    Octonion::from_coeffs(coeffs)
}

pub fn coords(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    (0..len).map(|_| rational(rng)).collect()
}

/// A sparse multivector with up to `max_terms` random blades.
pub fn multivector(rng: &mut ChaCha8Rng, dim: usize, max_terms: usize) -> Multivector {
    let mut out = Multivector::zero(dim);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let mask = rng.gen_range(0u64..(1u64 << dim.min(63)));
        out.add_term(Blade(mask), rational(rng));
    }
    out
}

/// A sparse tensor element with up to `max_terms` random blades carrying
/// random octonion coefficients.
pub fn tensor(rng: &mut ChaCha8Rng, dim: usize, max_terms: usize) -> TensorElement {
    let mut out = TensorElement::zero(dim);
    let terms = rng.gen_range(1..=max_terms);
    for _ in 0..terms {
        let mask = rng.gen_range(0u64..(1u64 << dim.min(63)));
        out.add_term(Blade(mask), octonion(rng));
    }
    out
}
