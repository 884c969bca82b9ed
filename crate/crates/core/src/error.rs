use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rank-exceeding term: t[{i}][{j}] is nonzero but rank is {r}")]
    RankExceedingTerm { i: u32, j: u32, r: u32 },

    #[error("ground set too large for explicit table: {size} elements (limit {limit})")]
    GroundSetTooLarge { size: usize, limit: usize },

    #[error("rank bound violated: r({subset:#b}) = {rank} but {bound}")]
    RankBound {
        subset: u64,
        rank: u32,
        bound: String,
    },

    #[error("invalid edge index {index} (graph has {len} edges)")]
    EdgeIndex { index: usize, len: usize },

    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    VertexRange { u: usize, v: usize, n: usize },

    #[error("cannot contract loop edge {0}")]
    ContractLoop(usize),

    #[error("graph is disconnected; activities need a connected graph")]
    Disconnected,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("parse error at line {line}: {msg}")]
    ParseLine { line: usize, msg: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
