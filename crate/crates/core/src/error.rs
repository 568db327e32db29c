use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{family}: parameter out of domain: {reason}")]
    Domain { family: String, reason: String },

    #[error("no edge matches selector {0}")]
    NoSuchEdge(String),

    #[error("graph is not simple: {0}")]
    NotSimple(String),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph must have at least 3 vertices, got {0}")]
    TooSmall(usize),

    #[error("labels are not a bijection onto 1..={q}: {detail}")]
    NotBijective { q: usize, detail: String },

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("graph is not regular")]
    NotRegular,

    #[error("labeling is not local antimagic: {0}")]
    NotLocalAntimagic(String),

    #[error("condition ({condition}) violated at {x}, {y}: {detail}")]
    ConditionViolated {
        condition: String,
        x: String,
        y: String,
        detail: String,
    },

    #[error("edge {0}{1} is already present")]
    EdgeExists(String, String),

    #[error("edge {edge} carries label {label}, expected 1")]
    NotUnitLabel { edge: usize, label: u32 },

    #[error("no magic ({m},{n})-rectangle exists")]
    NoMagicRectangle { m: usize, n: usize },

    #[error("witness unavailable: {0}")]
    WitnessUnavailable(String),

    #[error("search budget exhausted after {nodes} nodes (lower bound {lower_bound})")]
    BudgetExhausted { nodes: u64, lower_bound: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("certificate mismatch: {0}")]
    Mismatch(String),
}

impl Error {
    pub(crate) fn domain(family: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Domain {
            family: family.into(),
            reason: reason.into(),
        }
    }

    /// Stable machine-readable tag, used in CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Domain { .. } => "domain",
            Error::NoSuchEdge(_) => "no-such-edge",
            Error::NotSimple(_) => "not-simple",
            Error::Disconnected => "disconnected",
            Error::TooSmall(_) => "too-small",
            Error::NotBijective { .. } => "not-bijective",
            Error::SizeGuard(_) => "size-guard",
            Error::NotRegular => "not-regular",
            Error::NotLocalAntimagic(_) => "not-local-antimagic",
            Error::ConditionViolated { .. } => "condition-violated",
            Error::EdgeExists(..) => "edge-exists",
            Error::NotUnitLabel { .. } => "not-unit-label",
            Error::NoMagicRectangle { .. } => "no-magic-rectangle",
            Error::WitnessUnavailable(_) => "witness-unavailable",
            Error::BudgetExhausted { .. } => "budget-exhausted",
            Error::Parse(_) => "parse",
            Error::Mismatch(_) => "mismatch",
        }
    }
}
