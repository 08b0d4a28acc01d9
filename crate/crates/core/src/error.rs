use thiserror::Error;

/// Errors produced by graph construction, parsing, and the numeric pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },

    #[error("graph has {n} vertices, more than the supported maximum {cap}")]
    TooManyVertices { n: usize, cap: usize },

    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),

    #[error("family `{family}` needs at least {min} vertices, got {n}")]
    FamilyTooSmall {
        family: &'static str,
        min: usize,
        n: usize,
    },

    #[error("family `{family}` has a fixed order of {expected} vertices, got {n}")]
    FamilyFixedOrder {
        family: &'static str,
        expected: usize,
        n: usize,
    },

    #[error("{op} requires a connected graph")]
    Disconnected { op: &'static str },

    #[error("{op} requires at least one edge (the spectral radius is zero)")]
    NoEdges { op: &'static str },

    #[error("eigensolver did not converge within its iteration budget")]
    EigenNonConvergence,

    #[error("eigenpair residual {residual:.3e} exceeds the allowed {bound:.3e}")]
    EigenResidual { residual: f64, bound: f64 },

    #[error("power iteration did not reach residual {tol:.3e} within {iters} iterations")]
    PowerIterationStalled { tol: f64, iters: usize },

    #[error("trace power {p} exceeds the supported cap {cap}")]
    TracePowerCap { p: u32, cap: u32 },

    #[error("an entry of A^{p} does not fit in 128 bits")]
    TraceOverflow { p: u32 },

    #[error("subgraph census needs at most {cap} vertices, got {n}")]
    CensusTooLarge { n: usize, cap: usize },

    #[error("census internal inconsistency: {0}")]
    CensusInconsistent(String),

    #[error("supplied spectral radius {supplied} is not within {tol:.1e} of the computed {computed}")]
    SpectralRadiusMismatch {
        supplied: f64,
        computed: f64,
        tol: f64,
    },

    #[error("not fullerene-like: {0}")]
    NotFullereneLike(String),

    #[error("fragment order k must be at least 1")]
    FragmentOrderZero,

    #[error("non-finite value encountered in {0}")]
    NonFinite(&'static str),
}

pub type Result<T> = std::result::Result<T, Error>;
