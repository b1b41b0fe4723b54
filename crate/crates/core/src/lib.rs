//! Numerical semigroups, their relative ideals, almost canonical ideals and
//! the GAS (generalized almost symmetric) classification.

pub mod classify;
pub mod constructions;
pub mod enumerate;
pub mod error;
pub mod ideal;
pub mod intset;
pub mod semigroup;
pub mod verify;

pub use classify::{classify, ClassificationReport, GasFailure, GasWitness};
pub use constructions::{
    dilatation, duplication, duplication_decompose, gluing, DilatationSpec, DuplicationSpec,
    GluingSpec, IdealChoice,
};
pub use enumerate::{almost_canonical_ideals, genus_tree, Corpus, IdealFamily};
pub use error::{Error, Result};
pub use ideal::{
    canonical_ideal, power_gaps, semigroup_generated_by_k, IdealInvariants, PowerGap, RelativeIdeal,
};
pub use intset::CofiniteSet;
pub use semigroup::{parse_generators, NumericalSemigroup};
pub use verify::{verify_corpus, Suite, VerifyReport};
