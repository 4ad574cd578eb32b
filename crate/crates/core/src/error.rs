use core::fmt;

/// Library-wide error type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Error {
    /// Occurrence counting needs a nonempty pattern.
    EmptyPattern,
    /// Base must be at least 2.
    BadBase { base: u32 },
    /// A letter is not a valid digit for the requested base.
    DigitOutOfRange { letter: u32, base: u32 },
    /// Letter-wise decrement would take a letter below zero.
    NegativeLetter { index: usize },
    /// Checked integer arithmetic overflowed.
    Overflow,
    /// A scan or materialization would exceed the configured budget.
    BudgetExceeded { needed: u64, budget: u64 },
    /// phi(n) is undefined for n <= 1; callers must branch on n = 1 first.
    PhiUndefined { n: u64 },
    /// The morphism-power structure lemma requires an even start letter.
    OddStartLetter { letter: u32 },
    /// A digital block must be nonempty with all digits below the base.
    InvalidBlock,
    /// Factor length must be at least 1.
    ZeroLength,
    /// Cap is below the threshold required by the requested operation.
    ThresholdViolation { cap: u32, threshold: u32 },
    /// The operation only applies to digital sequence specs.
    UnsupportedSpec,
    /// The block class does not satisfy the operation's precondition.
    BlockClassError { expected: &'static str },
    /// A closed-form rational failed to reduce to a nonnegative integer.
    NonIntegerResult,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyPattern => write!(f, "occurrence pattern must be nonempty"),
            Error::BadBase { base } => write!(f, "base {base} is invalid (need k >= 2)"),
            Error::DigitOutOfRange { letter, base } => {
                write!(f, "letter {letter} is not a base-{base} digit")
            }
            Error::NegativeLetter { index } => {
                write!(f, "letter at position {index} cannot be decremented below 0")
            }
            Error::Overflow => write!(f, "integer overflow"),
            Error::BudgetExceeded { needed, budget } => {
                write!(f, "budget exceeded (needed {needed}, budget {budget})")
            }
            Error::PhiUndefined { n } => write!(f, "phi({n}) is undefined (need n >= 2)"),
            Error::OddStartLetter { letter } => {
                write!(f, "morphism power requires an even start letter, got {letter}")
            }
            Error::InvalidBlock => write!(f, "digital block must be nonempty with digits < base"),
            Error::ZeroLength => write!(f, "factor length must be at least 1"),
            Error::ThresholdViolation { cap, threshold } => {
                write!(f, "cap {cap} is below the required threshold {threshold}")
            }
            Error::UnsupportedSpec => write!(f, "operation is not defined for this sequence"),
            Error::BlockClassError { expected } => {
                write!(f, "block class precondition violated (expected {expected} block)")
            }
            Error::NonIntegerResult => {
                write!(f, "closed form did not evaluate to a nonnegative integer")
            }
        }
    }
}

impl core::error::Error for Error {}
