use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    #[error("edge {0} {1} not in graph")]
    MissingEdge(usize, usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("not a cactus: {0}")]
    NotCactus(String),

    #[error("alpha {0} outside [0, 1]")]
    AlphaRange(f64),

    #[error("alpha = 1 is excluded here ({0})")]
    AlphaNotStrict(&'static str),

    #[error("non-finite matrix entry at ({0}, {1})")]
    NonFinite(usize, usize),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    #[error("power iteration did not converge after {iters} iterations (residual {residual:.3e})")]
    PowerIterationStalled {
        iters: usize,
        residual: f64,
        estimate: f64,
        last_iterate: Vec<f64>,
    },

    #[error("cubic has a conjugate complex pair (discriminant {0:.3e} < 0)")]
    ComplexRoots(f64),

    #[error("leading cubic coefficient must be nonzero and finite")]
    NotCubic,

    #[error("rewrite precondition violated: {0}")]
    RewritePrecondition(String),

    #[error("rewrite postcondition violated: {0}")]
    RewritePostcondition(String),

    #[error("step budget {0} exceeded during ascent")]
    StepBudget(usize),

    #[error("infeasible parameters n = {n}, k = {k}: need 2k + 1 <= n and n >= 1")]
    Infeasible { n: usize, k: usize },

    #[error("order {n} exceeds cap {cap}")]
    AboveCap { n: usize, cap: usize },

    #[error("expected cancellation root {expected} missing from cubic roots {roots:?}")]
    MissingCancellation { expected: f64, roots: Vec<f64> },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
