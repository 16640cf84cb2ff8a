//! Exact counting, enumeration and asymptotics for alignments of `N`
//! sequences whose columns are constrained to an arbitrary step set.
//!
//! An alignment of sequences with lengths `(l1, ..., lN)` is an `N x k`
//! matrix of non-negative integers: row `i` sums to `l_i`, and every column
//! belongs to a chosen set `S` of allowed columns ("steps"). Columns with an
//! entry of 2 or more match whole subsequences at once, so this subsumes the
//! classical alignment model (`S = {0,1}^N` minus the zero column) as well
//! as lattice-path step sets, restricted integer compositions, Delannoy and
//! Whitney counting, and friends.
//!
//! What's here:
//!
//! * [`step`]: the data model — step sets (explicit or intensional families
//!   like `{1,2}^N` or all non-zero vectors), length tuples, alignment
//!   matrices, validation and membership.
//! * [`engine`]: exact counting over a memoized box table, enumeration in
//!   lexicographic order, exactly uniform sampling, counting by column
//!   multiplicities, restricted compositions, and step-sum probabilities.
//!   All counts are arbitrary-precision integers.
//! * [`genfunc`]: truncated multivariate power series for the same counts,
//!   an independent cross-check of the table.
//! * [`formulas`]: closed forms and asymptotic approximations for the
//!   catalogued step-set families.
//! * [`verify`]: machinery that checks every catalogued formula against the
//!   table over a box, optionally fanning out across threads.
//!
//! ```
//! use aligncount::dsl::parse_step_set;
//! use aligncount::engine::count;
//! use aligncount::step::LengthTuple;
//! use num_bigint::BigUint;
//!
//! let steps = parse_step_set("{(1,1),(1,2),(2,1)}").unwrap().validate().unwrap();
//! let n = count(&steps, &LengthTuple::new(vec![4, 5])).unwrap();
//! assert_eq!(n, BigUint::from(7u32));
//! ```

pub mod dsl;
pub mod engine;
pub mod error;
pub mod formulas;
pub mod genfunc;
mod grid;
pub mod numutil;
pub mod par;
pub mod step;
pub mod verify;

pub use error::{Error, Result};
pub use step::{
    is_alignment, AlignmentMatrix, BaseSet, LengthTuple, StepSet, StepVector, ValidatedStepSet,
};

/// Exact alignment counts are arbitrary-precision non-negative integers.
pub type CountValue = num_bigint::BigUint;

/// Exact probabilities are reduced big rationals.
pub type Rational = num_rational::BigRational;
