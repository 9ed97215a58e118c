//! Exact calculus of linear relations (multivalued linear operators) on
//! finite-dimensional complex coordinate spaces.
//!
//! Everything is computed over the Gaussian rationals Q(i) with
//! arbitrary-precision arithmetic, so subspace dimensions, adjoints,
//! deficiency indices and all derived quantities are exact. The crate
//! provides:
//!
//! - [`scalar`], [`linalg`], [`subspace`]: exact field arithmetic and
//!   canonical subspace algebra (spans, sums, intersections, orthogonal
//!   complements, Gram-weighted complements, quotient dimensions).
//! - [`relation`]: linear relations as subspaces of X ⊕ X — parts, algebra,
//!   products, adjoints, Arens decomposition, M_λ spaces and deficiency
//!   indices.
//! - [`dualpair`]: dual pairs {A,B} with A ⊆ B*, the four standing
//!   hypotheses, graph inner products, kernel spaces with the Q isomorphism,
//!   the block relation S and its adjoint, and deficiency identities.
//! - [`extension`]: proper extensions A ⊆ Ã ⊆ B*, quasi-selfadjointness,
//!   quotient-dimension bookkeeping and the extension criteria.
//! - [`harness`]: seeded deterministic instance generation and verification
//!   campaigns that check every identity at desk scale and probe hypothesis
//!   necessity.
//! - [`io`], [`cli`]: exact text formats and the command-line front end.
//!
//! The `examples/` directory contains one runnable example per capability;
//! start with `relation_basics`.

pub mod scalar;
pub mod linalg;
pub mod subspace;
pub mod relation;
pub mod dualpair;
pub mod extension;
pub mod harness;
pub mod io;
pub mod cli;

pub use dualpair::{
    block_relation, AnalyzeReport, BlockS, CheckValue, Decomposition, DualPair, DualPairError,
    HypothesisReport, KernelIsomorphism, PlusGram,
};
pub use extension::{
    correctness_probe, sample_extensions, ExtensionError, ExtensionReport, ProperExtension,
    QuotientProfile,
};
pub use harness::{
    generate, lemma32_probe, run_campaign, GenConfig, GenOutcome, Lemma32Probe, Strategy, Suite,
    VerificationReport,
};
pub use linalg::{Matrix, Vector};
pub use relation::{ArensParts, DeficiencyPair, LinearRelation, RelationError};
pub use scalar::{GaussianRational, Rational, ScalarError};
pub use subspace::{Subspace, SubspaceError};
