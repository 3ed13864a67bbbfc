use alloc::string::String;
use core::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Not a prime, or a prime the construction does not cover (`p <= 3`).
    InvalidPrime(u64),
    /// Two operands were built over different primes.
    PrimeMismatch {
        left: u32,
        right: u32,
    },
    /// A residue outside `[0, p)` was supplied.
    ResidueOutOfRange {
        value: i64,
        p: u32,
    },
    /// A 2x2 matrix with zero determinant.
    SingularMatrix,
    /// An automorphism outside the Sylow subgroup generated by the three
    /// standard unipotent automorphisms.
    NotSylowForm,
    /// Subgroup closure grew past the configured cap.
    ClosureCap {
        cap: usize,
    },
    /// A computation was refused because `p` exceeds its budget.
    BudgetExceeded {
        what: &'static str,
        p: u32,
        limit: u32,
    },
    /// The operation needs a regular subgroup.
    NotRegular,
    /// The operation needs a subgroup of order `p^3`.
    WrongOrder {
        expected: usize,
        found: usize,
    },
    UnknownRepresentative(String),
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidPrime(p) => write!(f, "{p} is not a prime greater than 3"),
            Error::PrimeMismatch { left, right } => {
                write!(f, "operands live over different primes ({left} vs {right})")
            }
            Error::ResidueOutOfRange { value, p } => {
                write!(f, "residue {value} is not in [0, {p})")
            }
            Error::SingularMatrix => write!(f, "matrix is singular"),
            Error::NotSylowForm => {
                write!(f, "automorphism is not in the standard Sylow p-subgroup")
            }
            Error::ClosureCap { cap } => {
                write!(f, "subgroup closure exceeded {cap} elements")
            }
            Error::BudgetExceeded { what, p, limit } => {
                write!(f, "{what} refused for p = {p} (budget allows p <= {limit})")
            }
            Error::NotRegular => write!(f, "subgroup is not regular"),
            Error::WrongOrder { expected, found } => {
                write!(f, "expected a subgroup of order {expected}, found {found}")
            }
            Error::UnknownRepresentative(id) => write!(f, "unknown representative id {id:?}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
