//! Finite localisable semigroups, transcription categories, and the
//! constructions translating between them.
//!
//! The crate works with small structures given by explicit tables: a
//! [`FiniteUnarySemigroup`] is a multiplication table plus optional unary maps
//! `+`, `-` and `*`; a [`TranscriptionCategory`] is a partial composition
//! table together with two object-indexed transcription tables. Everything is
//! checked exhaustively — the intended scale is a handful of elements, where
//! brute force is both exact and fast.
//!
//! Highlights:
//! - [`axioms`]: equational axiom checkers with minimal witnesses,
//! - [`functor`]: the pseudoproduct and trace constructions and their
//!   round-trip identity,
//! - [`relations`], [`reps`]: generalised Green relations, natural orders,
//!   congruences and transformation representations,
//! - [`enumerate`]: exhaustive generation of all structures of a given order
//!   up to isomorphism,
//! - [`format`]: the `uas`/`ucat` text formats used by the CLI.

pub mod axioms;
pub mod category;
pub mod classify;
pub mod enumerate;
pub mod format;
pub mod functor;
pub mod instances;
pub mod relations;
pub mod reps;
pub mod semigroup;
pub mod starloc;

pub use axioms::{AxiomId, AxiomReport};
pub use category::{CategoryTables, TranscriptionCategory};
pub use classify::{classify, ClassPredicate, ClassificationReport, PredicateStatus};
pub use enumerate::{canonical_form, enumerate, SearchSpec, TargetClass};
pub use functor::{pseudoproduct_semigroup, trace_category, AlgebraMorphism};
pub use relations::BinaryRelation;
pub use semigroup::FiniteUnarySemigroup;

use std::fmt;

/// One of the optional unary maps carried by a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UnaryOp {
    Plus,
    Minus,
    Star,
}

impl fmt::Display for UnaryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            UnaryOp::Plus => "+",
            UnaryOp::Minus => "-",
            UnaryOp::Star => "*",
        })
    }
}

/// Errors shared by the table validators and the operations built on them.
///
/// Witnesses are element indices; callers that know the element names (the
/// CLI, mostly) render them as name tuples.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("multiplication is not associative; witness ({x},{y},{z})")]
    NonAssociative { x: usize, y: usize, z: usize },
    #[error("{table}[{index}] = {value} out of range for order {order}")]
    IndexOutOfRange {
        table: &'static str,
        index: usize,
        value: usize,
        order: usize,
    },
    #[error("{table} has {got} entries, expected {expected}")]
    SizeMismatch {
        table: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("duplicate element name `{0}`")]
    DuplicateName(String),
    #[error("a structure needs at least one element")]
    EmptyCarrier,
    #[error("missing unary map `{0}`")]
    MissingUnary(UnaryOp),
    #[error("unknown axiom id `{0}`")]
    UnknownAxiomId(String),
    #[error("element {0} is not a projection")]
    NotAProjection(usize),
    #[error("axiom {axiom} fails at {witness:?}")]
    AxiomViolation { axiom: AxiomId, witness: Vec<usize> },
    #[error("composition table at ({x},{y}) contradicts x- = y+ (defined: {defined})")]
    DomainMismatch { x: usize, y: usize, defined: bool },
    #[error("not localisable: axiom {axiom} fails at {witness:?}")]
    NotLocalisable { axiom: AxiomId, witness: Vec<usize> },
    #[error("star axioms fail: {axiom} at {witness:?}")]
    StarAxiomsFail { axiom: AxiomId, witness: Vec<usize> },
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("not a cross-section: {0}")]
    NotACrossSection(String),
    #[error("order {order} exceeds the configured bound {max}")]
    OrderTooLarge { order: usize, max: usize },
}
