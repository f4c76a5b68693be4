//! Error type shared by all modules.
//!
//! Every structural failure carries a witness: the pair or triple of
//! elements on which the violated axiom can be re-checked by hand.

use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Relation is missing `(x, x)`.
    NotReflexive { x: usize },
    /// Both `(a, b)` and `(b, a)` hold for distinct `a`, `b`.
    NotAntisymmetric { a: usize, b: usize },
    /// `(a, b)` and `(b, c)` hold but `(a, c)` does not.
    NotTransitive { a: usize, b: usize, c: usize },
    /// Element index out of range.
    IndexOutOfRange { index: usize, n: usize },
    /// Two structures that must share a universe do not.
    DimensionMismatch { left: usize, right: usize },
    /// A size guard was exceeded (enumeration, search, brute force).
    GuardExceeded { what: &'static str, limit: usize, got: usize },
    /// A map is not order-preserving at the witness pair.
    NotOrderPreserving { x: usize, y: usize },
    /// A table entry escapes the universe.
    EntryOutOfRange { x: usize, y: usize, value: usize },
    /// An operation required to be a band fails idempotence at `x`.
    NotIdempotent { x: usize },
    /// An operation fails associativity at the witness triple.
    NotAssociative { x: usize, y: usize, z: usize },
    /// An operation fails the right-regular identity `x·y·x = y·x`.
    NotRightRegular { x: usize, y: usize },
    /// An operation fails the right-normal identity `x·y·z = y·x·z`.
    NotRightNormal { x: usize, y: usize, z: usize },
    /// An operation is not admissible for the poset at the witness pair.
    NotAdmissible { x: usize, y: usize },
    /// A relation is not a congruence: `x θ x'` and `y θ y'` but the
    /// products land in different classes.
    NotCongruence { x: usize, x2: usize, y: usize, y2: usize },
    /// A subset expected to be decreasing contains `a` but not `b ≤ a`.
    NotDecreasing { a: usize, b: usize },
    /// A subset expected to be closed under the operation is not.
    NotClosed { x: usize, y: usize, product: usize },
    /// Poset has no top element but one is required.
    NoTopElement,
    /// Poset is not a tree (some up-set is not a chain, or no top).
    NotATree,
    /// Poset is not a forest (some up-set is not a chain).
    NotAForest,
    /// The given sequence is not a permutation of the poset's minimals.
    BadMinimalOrder,
    /// A map required to be surjective misses the witness element.
    NotSurjective { missed: usize },
    /// `f(x) < f(y)` but `x < y` fails (strict reflection condition).
    NotStrictlyReflecting { x: usize, y: usize },
    /// The fiber over a minimal element has no minimum.
    FiberWithoutMinimum { over: usize },
    /// Fiber op missing or not admissible for the induced fiber poset.
    BadFiberOp { over: usize },
    /// The codomain is not a meet-semilattice at the witness pair.
    NotMeetSemilattice { x: usize, y: usize },
    /// Restriction `f_m : m↓ → f(m)↓` is not an order isomorphism.
    RestrictionNotIso { m: usize },
    /// Unknown fixture name.
    UnknownName,
    /// Brute-force domain product exceeds the budget.
    BudgetExceeded { budget: u64 },
    /// A constructed operation failed its post-hoc validation. This
    /// signals a bug (the backing theorems guarantee success), so it is
    /// surfaced loudly instead of being repaired.
    PostValidationFailed { reason: &'static str },
}

impl core::error::Error for Error {}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use Error::*;
        match self {
            NotReflexive { x } => write!(f, "relation not reflexive at ({x}, {x})"),
            NotAntisymmetric { a, b } => {
                write!(f, "relation not antisymmetric: both ({a}, {b}) and ({b}, {a}) hold")
            }
            NotTransitive { a, b, c } => {
                write!(f, "relation not transitive: ({a}, {b}) and ({b}, {c}) but not ({a}, {c})")
            }
            IndexOutOfRange { index, n } => write!(f, "element {index} out of range (n = {n})"),
            DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right}")
            }
            GuardExceeded { what, limit, got } => {
                write!(f, "{what} guard exceeded: limit {limit}, got {got}")
            }
            NotOrderPreserving { x, y } => {
                write!(f, "map not order-preserving at pair ({x}, {y})")
            }
            EntryOutOfRange { x, y, value } => {
                write!(f, "table entry ({x}, {y}) = {value} out of range")
            }
            NotIdempotent { x } => write!(f, "not idempotent at {x}"),
            NotAssociative { x, y, z } => write!(f, "not associative at ({x}, {y}, {z})"),
            NotRightRegular { x, y } => {
                write!(f, "right-regular identity x·y·x = y·x fails at ({x}, {y})")
            }
            NotRightNormal { x, y, z } => {
                write!(f, "right-normal identity x·y·z = y·x·z fails at ({x}, {y}, {z})")
            }
            NotAdmissible { x, y } => write!(f, "not admissible at pair ({x}, {y})"),
            NotCongruence { x, x2, y, y2 } => {
                write!(f, "not a congruence: witness ({x} ~ {x2}, {y} ~ {y2})")
            }
            NotDecreasing { a, b } => {
                write!(f, "subset not decreasing: contains {a} but not {b} ≤ {a}")
            }
            NotClosed { x, y, product } => {
                write!(f, "subset not closed: {x}·{y} = {product} escapes")
            }
            NoTopElement => write!(f, "poset has no top element"),
            NotATree => write!(f, "poset is not a tree"),
            NotAForest => write!(f, "poset is not a forest"),
            BadMinimalOrder => write!(f, "sequence is not a permutation of the minimals"),
            NotSurjective { missed } => write!(f, "map not surjective: {missed} has no preimage"),
            NotStrictlyReflecting { x, y } => {
                write!(f, "f({x}) < f({y}) but {x} < {y} fails")
            }
            FiberWithoutMinimum { over } => {
                write!(f, "fiber over minimal element {over} has no minimum")
            }
            BadFiberOp { over } => write!(f, "fiber op over {over} missing or not admissible"),
            NotMeetSemilattice { x, y } => {
                write!(f, "not a meet-semilattice: pair ({x}, {y}) has no greatest lower bound")
            }
            RestrictionNotIso { m } => {
                write!(f, "restriction to {m}↓ is not an order isomorphism onto f({m})↓")
            }
            UnknownName => write!(f, "unknown fixture name"),
            BudgetExceeded { budget } => write!(f, "domain product exceeds budget {budget}"),
            PostValidationFailed { reason } => {
                write!(f, "constructed operation failed validation: {reason}")
            }
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
