use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid labels: {0}")]
    InvalidLabels(String),

    #[error("series does not terminate: no upper parameter is a nonpositive integer")]
    NonTerminating,

    #[error("lower parameter pole at term {term} before termination at term {last}")]
    PoleBeforeTermination { term: u64, last: u64 },

    #[error("triangle condition violated for ({a}, {b}, {c})")]
    TriangleViolation { a: String, b: String, c: String },

    #[error("lowering steps {steps} out of range 0..={max}")]
    StepsOutOfRange { steps: u64, max: u64 },

    #[error("phase exponent a-b+gamma is not an integer")]
    PhaseUndefined,

    #[error("sum of incommensurable square roots cannot be represented exactly")]
    IncommensurableSum,

    #[error("invalid distribution parameters: {0}")]
    InvalidParams(String),

    #[error("pgf lower parameter n3-n1-n2+1 = {0} is not positive")]
    UnsupportedParameterRegime(i64),

    #[error("needs n3 >= {min}, got n3 = {n3}")]
    DegenerateDistribution { n3: u64, min: u64 },

    #[error("binomial parameters have different p ({0} vs {1})")]
    MismatchedP(String, String),

    #[error("conditioning on p = {0} is degenerate; need 0 < p < 1")]
    DegenerateConditioning(String),

    #[error("n3 = {n3} is not a multiple of the denominator of p = {p}")]
    IndivisibleN3 { n3: u64, p: String },

    #[error("n2 = {n2} exceeds min(n1, n3-n1) for n3 = {n3}")]
    SupportTooSmall { n2: u64, n3: u64 },

    #[error("parse error: {0}")]
    Parse(String),
}
