use thiserror::Error;

use crate::curve::LevelSetClass;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),
    #[error("cannot parse point from {0:?}")]
    ParsePoint(String),

    #[error("orbit hits the forbidden set (x = 0) at step {step}")]
    ForbiddenSet { step: usize },
    #[error("point is not on the affine chart (x·y = 0)")]
    NotOnAffineChart,
    #[error("coordinate growth guard tripped at step {step}: {bits} bits exceeds {limit}")]
    GrowthLimit { step: usize, bits: u64, limit: u64 },

    #[error("the projective map is undefined at a base point")]
    BasePoint,
    #[error("point is not on the curve")]
    NotOnCurve,
    #[error("level set is not elliptic ({0:?})")]
    SingularCurve(LevelSetClass),
    #[error("gradient of the cubic vanishes at a point of a smooth curve")]
    ZeroGradient,
    #[error("line is contained in the curve")]
    LineInCurve,
    #[error("closed form for {0} has a vanishing denominator")]
    FormulaPole(&'static str),

    #[error("degenerate normal-form parameters: {0}")]
    DegenerateParameters(&'static str),
    #[error("point map has a pole (c = -1)")]
    PoleOfMap,
    #[error("image cubic is singular (4p^3 + 27q^2 = 0)")]
    SingularImage,
    #[error("point is not on the quartic")]
    NotOnQuartic,
    #[error("cubic point maps to a point at infinity of the quartic")]
    AtInfinityBranch,

    #[error("excluded parameter: {0}")]
    ExcludedParameter(String),
    #[error("level set is elliptic; expected a degenerate level set")]
    WrongClass,
    #[error("Möbius matrix has zero determinant")]
    ZeroDeterminant,
    #[error("pole of {0}")]
    Pole(&'static str),
    #[error("value is not a rational square")]
    NotASquare,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}
