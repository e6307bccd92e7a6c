//! Non-crossing loops in the punctured disk and a Garside-style normal
//! form for the free group.
//!
//! The library has five layers:
//!
//! - [`words`]: reduced words in the free group `F_n`, squarefree
//!   normal forms in the universal Coxeter group `W_n`, reflections.
//! - [`curves`]: taut realizations of based loops in the `n`-punctured
//!   disk, embeddedness testing, containment of interiors, and the
//!   lattice meet/join of divisors of the boundary circle.
//! - [`hurwitz`]: the braid-group action on reflection tuples, orbit
//!   enumeration, constructive descent to the base tuple, and lifting
//!   along the projection `F_n -> W_n`.
//! - [`monoid`]: the quasi-Garside monoid whose simples are the
//!   non-crossing divisors, with greedy normal forms and a word-problem
//!   solution.
//! - [`oracle`]: brute-force reference implementations used by the test
//!   suites (bounded divisor enumeration, order-theoretic bound checks,
//!   exhaustive intersection minimization).
//!
//! Input grammars for words, braids, tuples, and monoid elements live
//! in [`parse`].

pub mod curves;
pub mod error;
pub mod hurwitz;
pub mod monoid;
pub mod oracle;
pub mod parse;
pub mod words;

pub use curves::{DiskModel, PairDiagram, TautCurve};
pub use error::Error;
pub use hurwitz::BraidWord;
pub use monoid::{NormalForm, Simple};
pub use words::{CoxWord, FreeWord, Rank, ReflectionForm};
