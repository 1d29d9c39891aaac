//! Combinatorial Hopf algebras on words, permutations and substitutions,
//! over the integers, with exact arithmetic throughout.
//!
//! The crate provides:
//!
//! * sparse Z-linear combinations over arbitrary bases ([`elem`]);
//! * word combinatorics: shuffles, cuts, subwords, standardizations
//!   ([`words`]);
//! * a generic connected-graded Hopf interface with an antipode recursion
//!   and exhaustive axiom/duality/morphism checkers ([`hopf`]);
//! * the concrete algebras: Shuffle and its graded dual ([`shuffle`]),
//!   the double word Hopf algebra of substitutions ([`subst`]), the word
//!   Hopf algebra ([`wha`]), the permutation Hopf algebra with both of its
//!   structures ([`mpr`]), noncommutative and quasisymmetric functions
//!   ([`nsq`]), and the incisive cut coalgebra ([`icc`]);
//! * descent-class combinatorics of the left weak order: lsd/lld
//!   permutations, retractions and coalgebra sections ([`descent`]).
//!
//! Everything is a pure function on immutable values; all structural
//! theorems are verified exhaustively at bounded degree by the checkers in
//! [`hopf`], which the `hopfwords` binary exposes as `check` subcommands.

pub mod descent;
pub mod elem;
pub mod hopf;
pub mod icc;
pub mod mpr;
pub mod nsq;
pub mod parse;
pub mod shuffle;
pub mod subst;
pub mod wha;
pub mod words;
