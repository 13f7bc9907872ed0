//! Seeded random octonions and words.
//!
//! Coefficients are `p/q` with `p` uniform in `-9..=9` and `q` uniform in
//! `1..=9`. Each case index gets its own ChaCha stream, so case `k` is the
//! same whether cases run sequentially or in parallel.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::brackets::{Letter, Word};
use crate::octonion::Octonion;
use crate::scalar::Scalar;

pub const DEFAULT_SEED: u64 = 0;

/// The random stream for case `case` under `seed`.
pub fn case_rng(seed: u64, case: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(case);
    rng
}

pub fn coefficient<S: Scalar, R: Rng>(rng: &mut R) -> S {
    let numer = rng.random_range(-9..=9);
    let denom = rng.random_range(1..=9);
    S::from_ratio(numer, denom)
}

pub fn octonion<S: Scalar, R: Rng>(rng: &mut R) -> Octonion<S> {
    Octonion::new(std::array::from_fn(|_| coefficient(rng)))
}

/// Draws until the result is nonzero.
pub fn nonzero_octonion<S: Scalar, R: Rng>(rng: &mut R) -> Octonion<S> {
    loop {
        let x = octonion(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// A word of length `1..=max_len` over two generators. Scalar letters are
/// nonzero.
pub fn word<S: Scalar, R: Rng>(rng: &mut R, max_len: usize) -> Word<S> {
    let len = rng.random_range(1..=max_len);
    let letters = (0..len)
        .map(|_| match rng.random_range(0..7) {
            0 => Letter::X,
            1 => Letter::Y,
            2 => Letter::ConjX,
            3 => Letter::ConjY,
            4 => Letter::InvX,
            5 => Letter::InvY,
            _ => {
                let numer = [-9, -5, -2, -1, 1, 2, 3, 7][rng.random_range(0..8)];
                Letter::Scalar(S::from_ratio(numer, rng.random_range(1..=9)))
            }
        })
        .collect();
    Word::new(letters).expect("length is at least one")
}
