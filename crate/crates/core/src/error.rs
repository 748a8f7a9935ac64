use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {0}: rank must be at least 1")]
    InvalidRank(usize),

    #[error("rank {n} exceeds the configured cap {cap}")]
    RankCapExceeded { n: usize, cap: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("not a permutation of 1..={n}: {images:?}")]
    NotAPermutation { n: usize, images: Vec<usize> },

    #[error("generator index {index} out of range for rank {n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("invalid partition {0:?}: parts must be weakly decreasing")]
    InvalidPartition(Vec<usize>),

    #[error("{mu:?} is not contained in {lambda:?}")]
    NotContained { lambda: Vec<usize>, mu: Vec<usize> },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau is not standard")]
    NotStandard,

    #[error("entry {k} out of range [{lo}, {hi}]")]
    EntryOutOfRange { k: usize, lo: usize, hi: usize },

    #[error("column {j} out of range [1, {max}]")]
    ColumnOutOfRange { j: usize, max: usize },

    #[error("tableau has {0} boxes, exceeding the enumeration cap")]
    SizeCapExceeded(usize),

    #[error("empty tableau has no associated permutation")]
    EmptyTableau,

    #[error("offset {0} tableau where offset 0 is required")]
    NonzeroOffset(usize),

    #[error("{w} is not a minimal left coset representative for J = {{{j}}}")]
    NotInDJ { w: String, j: String },

    #[error("cannot parse {what} from token {token:?}")]
    Parse { what: &'static str, token: String },

    #[error("cell oracle mismatch at rank {n}: {detail}")]
    OracleMismatch { n: usize, detail: String },
}

pub type Result<T> = std::result::Result<T, Error>;
