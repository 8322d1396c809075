use alloc::vec::Vec;
use core::fmt;

use crate::subset::SubsetMask;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Order outside `1..=MAX_ORDER`, or entry count not `n*n`.
    BadShape {
        order: usize,
        entries: usize,
    },
    /// An entry is not a valid element index.
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
    },
    /// A permutation image is not a bijection.
    NotPermutation,
    /// Two structures of different order were combined.
    OrderMismatch {
        left: usize,
        right: usize,
    },
    NoIdentity,
    /// Row or column `index` repeats a value.
    NotLatin {
        row: bool,
        index: usize,
    },
    /// Doubling is not a bijection.
    NotTwoDivisible,
    /// Left and right accumulation of a power disagree.
    PowerAmbiguous {
        element: usize,
        exponent: i64,
    },
    /// A search or closure produced more than `cap` results.
    CapExceeded {
        cap: usize,
    },
    /// A symétron axiom fails; `witness` lists the offending arguments.
    NotSymetron {
        axiom: &'static str,
        witness: Vec<usize>,
    },
    /// `s(x, z) = y` has zero or several solutions `z`.
    NoUniqueMidpoint {
        x: usize,
        y: usize,
    },
    /// Operation called outside its precondition.
    Precondition(&'static str),
    /// Cosets do not partition the carrier or the induced operation is ill-defined.
    NotNormal,
    StepBudgetExceeded {
        partial: SubsetMask,
        steps: usize,
    },
    EvenOrder(usize),
    NotAGroup(&'static str),
    NotTwoDivisibleGroup,
    NotAutomorphism,
    NotInvolutive,
    NotClosed {
        x: usize,
        y: usize,
    },
    NotTwoDivisibleSet,
    OrderTooLarge {
        order: usize,
        bound: usize,
    },
    ElementOutOfRange {
        element: usize,
        order: usize,
    },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::BadShape { order, entries } => {
                write!(f, "bad table shape: order {order} with {entries} entries")
            }
            Error::EntryOutOfRange { row, col, value } => {
                write!(f, "entry {value} at ({row}, {col}) is out of range")
            }
            Error::NotPermutation => f.write_str("image is not a permutation"),
            Error::OrderMismatch { left, right } => {
                write!(f, "order mismatch: {left} vs {right}")
            }
            Error::NoIdentity => f.write_str("NoIdentity: no two-sided identity element"),
            Error::NotLatin { row: true, index } => {
                write!(f, "NotLatin: row {index} repeats a value")
            }
            Error::NotLatin { row: false, index } => {
                write!(f, "NotLatin: column {index} repeats a value")
            }
            Error::NotTwoDivisible => f.write_str("NotTwoDivisible: doubling is not a bijection"),
            Error::PowerAmbiguous { element, exponent } => {
                write!(f, "PowerAmbiguous: {element}*{exponent} depends on bracketing")
            }
            Error::CapExceeded { cap } => write!(f, "CapExceeded: more than {cap} results"),
            Error::NotSymetron { axiom, witness } => {
                write!(f, "NotSymetron: axiom {axiom} fails at {witness:?}")
            }
            Error::NoUniqueMidpoint { x, y } => {
                write!(f, "NoUniqueMidpoint: s({x}, z) = {y} has no unique solution")
            }
            Error::Precondition(what) => write!(f, "precondition violated: {what}"),
            Error::NotNormal => f.write_str("NotNormal: cosets do not induce a quotient loop"),
            Error::StepBudgetExceeded { steps, .. } => {
                write!(f, "StepBudgetExceeded after {steps} rounds")
            }
            Error::EvenOrder(n) => write!(f, "EvenOrder: {n} is even"),
            Error::NotAGroup(why) => write!(f, "not a group: {why}"),
            Error::NotTwoDivisibleGroup => f.write_str("NotTwoDivisibleGroup: squaring is not a bijection"),
            Error::NotAutomorphism => f.write_str("NotAutomorphism"),
            Error::NotInvolutive => f.write_str("NotInvolutive"),
            Error::NotClosed { x, y } => {
                write!(f, "NotClosed: half-sandwich of {x} and {y} leaves the set")
            }
            Error::NotTwoDivisibleSet => {
                f.write_str("NotTwoDivisibleSet: squaring is not a bijection of the set")
            }
            Error::OrderTooLarge { order, bound } => {
                write!(f, "OrderTooLarge: {order} exceeds bound {bound}")
            }
            Error::ElementOutOfRange { element, order } => {
                write!(f, "element {element} out of range for order {order}")
            }
        }
    }
}

impl core::error::Error for Error {}
