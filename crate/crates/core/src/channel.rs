//! Operator-channel simulator.
//!
//! Transmitting a subspace through a random linear network subject to
//! erasures and insertions yields a received word `R = U' ⊕ E` where `U'` is
//! a subspace of the sent word (its dimension dropped by the erasure count)
//! and `E` is an error space independent of `U'` (its dimension is the
//! insertion count). Both parts are sampled uniformly with the crate's
//! pinned generator, so a seed fully determines the outcome. `E` is drawn
//! from the whole ambient space, so it may meet the sent word outside the
//! retained part; the model is not silently strengthened.

use std::fmt;

use crate::grassmann::Subspace;
use crate::matrix::MatrixGF;
use crate::rng::SplitMix64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChannelError {
    TooManyErasures { erasures: usize, dim: usize },
    Overfull { resulting: usize, ambient: usize },
}

impl fmt::Display for ChannelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChannelError::TooManyErasures { erasures, dim } => {
                write!(f, "{erasures} erasures exceed the sent dimension {dim}")
            }
            ChannelError::Overfull { resulting, ambient } => write!(
                f,
                "received dimension {resulting} would exceed the ambient dimension {ambient}"
            ),
        }
    }
}

impl std::error::Error for ChannelError {}

/// Channel parameters: `erasures` is the dimension decrease, `insertions`
/// the dimension increase, `seed` drives the sampler.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelConfig {
    pub erasures: usize,
    pub insertions: usize,
    pub seed: u64,
}

/// Everything a single transmission produced; `received` is the direct sum
/// of `retained` and `error_space`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmitTrace {
    pub received: Subspace,
    pub retained: Subspace,
    pub error_space: Subspace,
}

/// Uniformly random d-dimensional subspace of `v`: draw random d x dim(v)
/// coefficient matrices over the field until one has full rank, then take
/// the row space of coefficients * generator. Every subspace is hit by the
/// same number of full-rank coefficient matrices, hence uniformity.
pub fn random_subspace_of(v: &Subspace, d: usize, rng: &mut SplitMix64) -> Subspace {
    assert!(d <= v.dim(), "requested dimension exceeds dim(v)");
    let field = v.field().clone();
    if d == 0 {
        return Subspace::zero_space(field, v.ambient());
    }
    let q = field.order();
    loop {
        let codes: Vec<u64> = (0..d * v.dim()).map(|_| rng.next_below(q)).collect();
        let coeffs = MatrixGF::from_codes(field.clone(), d, v.dim(), &codes).expect("codes < q");
        if coeffs.rank() < d {
            continue;
        }
        let gen = coeffs.mul(v.generator()).expect("compatible shapes");
        return Subspace::canonicalize(&gen).expect("full rank by construction");
    }
}

/// Uniformly random d-dimensional subspace of the whole ambient space that
/// intersects `avoid` trivially (rejection sampling).
fn random_complementary_subspace(
    field: &crate::gf::Field,
    n: usize,
    d: usize,
    avoid: &Subspace,
    rng: &mut SplitMix64,
) -> Subspace {
    if d == 0 {
        return Subspace::zero_space(field.clone(), n);
    }
    let q = field.order();
    loop {
        let codes: Vec<u64> = (0..d * n).map(|_| rng.next_below(q)).collect();
        let m = MatrixGF::from_codes(field.clone(), d, n, &codes).expect("codes < q");
        if m.rank() < d {
            continue;
        }
        let candidate = Subspace::canonicalize(&m).expect("full rank checked");
        let stacked = avoid.generator().vstack(candidate.generator()).expect("same ambient");
        if stacked.rank() == avoid.dim() + d {
            return candidate;
        }
    }
}

/// Sends `u` through the operator channel and returns the received word
/// together with the retained and error spaces. Deterministic per seed: the
/// call owns a generator seeded from `cfg.seed`.
pub fn transmit_detailed(u: &Subspace, cfg: &ChannelConfig) -> Result<TransmitTrace, ChannelError> {
    let k = u.dim();
    let n = u.ambient();
    if cfg.erasures > k {
        return Err(ChannelError::TooManyErasures { erasures: cfg.erasures, dim: k });
    }
    let resulting = k - cfg.erasures + cfg.insertions;
    if resulting > n {
        return Err(ChannelError::Overfull { resulting, ambient: n });
    }
    let mut rng = SplitMix64::new(cfg.seed);
    let retained = random_subspace_of(u, k - cfg.erasures, &mut rng);
    let error_space =
        random_complementary_subspace(u.field(), n, cfg.insertions, &retained, &mut rng);
    let stacked = retained.generator().vstack(error_space.generator()).expect("same ambient");
    let received = Subspace::canonicalize(&stacked).expect("direct sum has full rank");
    Ok(TransmitTrace { received, retained, error_space })
}

/// Sends `u` through the operator channel and returns the received word.
pub fn transmit(u: &Subspace, cfg: &ChannelConfig) -> Result<Subspace, ChannelError> {
    Ok(transmit_detailed(u, cfg)?.received)
}
