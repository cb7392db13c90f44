//! Error type shared across the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong in exact arithmetic, geometry or dynamics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands belong to different cyclotomic fields.
    ModulusMismatch { left: u32, right: u32 },
    /// Multiplicative inverse of zero requested.
    DivisionByZero,
    /// `tan(k*pi/N)` has a pole (`2k = N mod 2N`).
    TangentPole { n: u32, k: i64 },
    /// Index outside its documented range.
    IndexRange(String),
    /// The target element does not lie in the field generated by the generator.
    NotInGeneratedField,
    /// An exact linear system that theory says is solvable came back inconsistent.
    InconsistentSystem,
    /// Unsupported polygon parameter (e.g. `N < 3`, star index `q >= p/2`).
    BadPolygon(String),
    /// Outer-billiards point inside or on the polygon.
    InsidePolygon,
    /// Point on the singular set (an extended edge); the map is undefined.
    SingularPoint,
    /// Orbit hit the singular set at the given iterate.
    SingularOrbit { at_step: usize },
    /// Piecewise-isometry point on an atom boundary or outside all atoms.
    OutsideAtoms,
    /// Wrong congruence class for a case-specific construction.
    WrongCase(String),
    /// Malformed textual input.
    Parse(String),
    /// Domain violation in a numeric formula.
    Domain(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ModulusMismatch { left, right } => {
                write!(f, "cyclotomic modulus mismatch: Q(zeta_{left}) vs Q(zeta_{right})")
            }
            Error::DivisionByZero => write!(f, "division by zero field element"),
            Error::TangentPole { n, k } => write!(f, "tan({k}*pi/{n}) is undefined (pole)"),
            Error::IndexRange(msg) => write!(f, "index out of range: {msg}"),
            Error::NotInGeneratedField => {
                write!(f, "target does not lie in the field generated by the generator")
            }
            Error::InconsistentSystem => write!(f, "exact linear system inconsistent"),
            Error::BadPolygon(msg) => write!(f, "bad polygon parameter: {msg}"),
            Error::InsidePolygon => write!(f, "point inside or on the polygon"),
            Error::SingularPoint => write!(f, "point lies on the singular set"),
            Error::SingularOrbit { at_step } => {
                write!(f, "orbit hit the singular set at iterate {at_step}")
            }
            Error::OutsideAtoms => write!(f, "point is on an atom boundary or outside all atoms"),
            Error::WrongCase(msg) => write!(f, "wrong congruence class: {msg}"),
            Error::Parse(s) => write!(f, "cannot parse {s:?}"),
            Error::Domain(msg) => write!(f, "domain violation: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
