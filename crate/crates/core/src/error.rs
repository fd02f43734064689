use thiserror::Error;

use crate::lattice::LatticeParity;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("lattice parity mismatch: {left} vs {right}")]
    ParityMismatch {
        left: LatticeParity,
        right: LatticeParity,
    },

    #[error("point {0:?} does not lie on the {1} lattice")]
    OffLattice(Vec<i32>, LatticeParity),

    #[error("point {0:?} is not a vertex of the graph")]
    NotAVertex(Vec<i32>),

    #[error("edge {0:?} -- {1:?} does not join mesh neighbours")]
    InvalidEdge(Vec<i32>, Vec<i32>),

    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(Vec<i32>),

    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(Vec<i32>, Vec<i32>),

    #[error("vertex index {index} out of range for {len} vertices")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("invalid centers: {0}")]
    InvalidCenters(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("no free pair of adjacent vertices with degree below 3 remains")]
    NoFreePair,

    #[error("max degree {delta} exceeds the host degree 2k = {host}")]
    DegreeExceedsHost { delta: u32, host: u32 },

    #[error("enumeration exceeded the cap of {cap} points")]
    EnumerationCap { cap: u64 },

    #[error("search region has {size} candidate vertices, above the cap of {cap}")]
    RegionTooLarge { size: usize, cap: usize },

    #[error("empty range {0}")]
    EmptyRange(String),

    #[error("malformed graph file: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
