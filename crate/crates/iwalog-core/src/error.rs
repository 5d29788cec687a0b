use core::fmt;

/// Errors raised by the arithmetic layer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    InvalidContext(&'static str),
    NonUnit,
    NoRoot,
    PrecisionLoss,
    InsufficientDegree { needed: usize, have: usize },
    NotInImage,
    NotDivisible,
    NoUnitWitness,
    ExtensionTooLarge { degree: usize },
    DegenerateEigenvalues,
    WrongMode,
    NoBoundedSolution { sign: char },
    BudgetExceeded { budget: usize },
    NotFound,
    InconsistentCharacter,
    UnitInconsistent,
    BadPrime(u64),
    Overflow,
    DimensionMismatch,
    Unsupported(&'static str),
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidContext(s) => write!(f, "invalid context: {s}"),
            Error::NonUnit => write!(f, "element is not a unit"),
            Error::NoRoot => write!(f, "no square root in the declared ring"),
            Error::PrecisionLoss => write!(f, "precision loss"),
            Error::InsufficientDegree { needed, have } => {
                write!(f, "insufficient degree: need {needed}, have {have}")
            }
            Error::NotInImage => write!(f, "element is not in the image of the Mellin transform"),
            Error::NotDivisible => write!(f, "not divisible"),
            Error::NoUnitWitness => write!(f, "no unit witness"),
            Error::ExtensionTooLarge { degree } => write!(f, "extension of degree {degree} too large"),
            Error::DegenerateEigenvalues => write!(f, "eigenvalues coincide at working precision"),
            Error::WrongMode => write!(f, "wrong crystalline mode"),
            Error::NoBoundedSolution { sign } => write!(f, "no bounded solution ({sign} component)"),
            Error::BudgetExceeded { budget } => write!(f, "enumeration budget {budget} exceeded"),
            Error::NotFound => write!(f, "not found"),
            Error::InconsistentCharacter => write!(f, "inconsistent character data"),
            Error::UnitInconsistent => write!(f, "character is not trivial on units"),
            Error::BadPrime(l) => write!(f, "bad prime {l}"),
            Error::Overflow => write!(f, "integer overflow"),
            Error::DimensionMismatch => write!(f, "dimension mismatch"),
            Error::Unsupported(s) => write!(f, "unsupported: {s}"),
        }
    }
}

impl core::error::Error for Error {}
