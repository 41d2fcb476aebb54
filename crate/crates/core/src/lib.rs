//! Exact arithmetic for constant-dimension subspace codes over finite fields.
//!
//! The library represents points of the Grassmannian `Grass_q(k,n)` by their
//! canonical reduced-row-echelon generator matrices, embeds them into
//! projective space via Pluecker coordinates, and expresses decoding balls of
//! the injection metric as Schubert varieties cut out by explicit linear
//! equations. On top of that sit subspace/injection distances, minimum-distance
//! and list decoders (with an independent brute-force route for every
//! Pluecker-coordinate computation), an operator-channel simulator, and small
//! Schubert-problem solvers, all in exact field arithmetic.

pub mod channel;
pub mod codes;
pub mod format;
pub mod gf;
pub mod grassmann;
pub mod matrix;
pub mod rng;
pub mod schubert;

pub use channel::{transmit, transmit_detailed, ChannelConfig, ChannelError};
pub use codes::{
    code_min_distance, list_decode, min_distance_decode, random_constant_dim_code, CodeError,
    DecodeMethod, DecodeResult, SubspaceCode,
};
pub use gf::{Field, FieldElement, FieldError};
pub use grassmann::{
    ball_members_by_distance, enumerate_grassmannian, gaussian_binomial, injection_distance,
    pluecker_embed, pluecker_relations_check, subspace_distance, BallScope, GrassmannError,
    IndexTuple, Metric, PlueckerVector, Subspace, DEFAULT_ENUM_BUDGET,
};
pub use matrix::{MatrixError, MatrixGF};
pub use schubert::{
    ball_bound_tuple, ball_contains_pluecker, ball_linear_system, compound_matrix,
    intersection_number, pivot_permutation_inverse, schubert_cell_contains,
    schubert_variety_contains, transition_matrix, transversal_solve, tuple_dominance_leq,
    tuple_lex_leq, CompoundMatrix, Flag, LinearForm, SchubertCondition, SchubertError,
};
