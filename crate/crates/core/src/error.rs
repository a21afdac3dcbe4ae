use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table is not square")]
    NotSquare,
    #[error("entry out of range at row {row}, column {col}")]
    EntryOutOfRange { row: usize, col: usize },
    #[error("row {0} is not a permutation")]
    RowNotPermutation(usize),
    #[error("element set is not closed under the operations")]
    NotClosed,
    #[error("partition is not a congruence")]
    NotACongruence,
    #[error("generators have mixed degrees")]
    MixedDegrees,
    #[error("point {0} out of range")]
    PointOutOfRange(usize),
    #[error("order cap exceeded: {0}")]
    OrderCapExceeded(u128),
    #[error("permutation is not an element of LMlt")]
    NotInLMlt,
    #[error("structure is not connected")]
    NotConnected,
    #[error("structure is not a quandle")]
    NotQuandle,
    #[error("structure is not a rack")]
    NotARack,
    #[error("one-generated subalgebras do not tile the universe")]
    NotAPartition,
    #[error("structure is not an involutory quandle")]
    NotInvolutory,
    #[error("group is not abelian")]
    NotAbelian,
    #[error("map is not an automorphism")]
    NotAutomorphism,
    #[error("set is not closed under conjugation")]
    NotClosedUnderConjugation,
    #[error("subgroup is not fixed pointwise by the automorphism")]
    SubgroupNotFixed,
    #[error("conjugacy class does not generate the group")]
    ClassDoesNotGenerate,
    #[error("class contains non-involutions")]
    NotInvolutions,
    #[error("not a valid group: {0}")]
    NotAGroup(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
