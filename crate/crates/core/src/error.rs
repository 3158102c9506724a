use thiserror::Error;

use crate::lattice::SuperType;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{ty} weights have {expected} coordinates, got {got}")]
    Arity {
        ty: SuperType,
        expected: usize,
        got: usize,
    },
    #[error("vectors of dimension {left} and {right} cannot be paired")]
    DimensionMismatch { left: usize, right: usize },
    #[error("vector is not in the image of the weight lattice")]
    NotInLattice,
    #[error("odd root index {index} out of range for {ty} ({count} odd roots)")]
    OddRootIndex {
        ty: SuperType,
        index: usize,
        count: usize,
    },
    #[error("weight is for {weight} but the context is for {context}")]
    TypeMismatch {
        weight: SuperType,
        context: SuperType,
    },
    #[error("weight {0} is not dominant")]
    NotDominant(alloc::string::String),

    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic {p} is too small for {ty}")]
    CharacteristicTooSmall { ty: SuperType, p: u64 },
    #[error("F(3|1) in characteristic 3 is not classified")]
    F31CharacteristicThree,
    #[error("D(2|1;zeta) needs a zeta parameter")]
    ZetaRequired,
    #[error("{0} takes no zeta parameter")]
    ZetaNotApplicable(SuperType),
    #[error("zeta mode does not match the characteristic")]
    ZetaModeMismatch,
    #[error("zeta must avoid 0 and -1")]
    DegenerateZeta,
    #[error("form value has a zeta component but the context has no zeta")]
    ZetaMissing,
    #[error("operation needs a finite characteristic")]
    NeedsPrimeCharacteristic,
    #[error("operation needs characteristic zero")]
    NeedsCharacteristicZero,

    #[error("Laurent division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("character is zero")]
    EmptyCharacter,
    #[error("character has {} incomparable maximal terms", .0.len())]
    AmbiguousTop(alloc::vec::Vec<crate::lattice::MetricVector>),
}
