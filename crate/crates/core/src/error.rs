use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("the zero polynomial has no coefficient sequence to diagnose")]
    ZeroPolynomial,
    #[error("denominator factor 1 - q^{0} t^{1} is not invertible as a power series")]
    MalformedFactor(usize, usize),
    #[error("series truncation bounds differ")]
    TruncationMismatch,
    #[error("parts must be strictly decreasing, but part {index} ({value}) is not below the previous one")]
    NotStrict { index: usize, value: usize },
    #[error("parts must be weakly decreasing, but part {index} ({value}) exceeds the previous one")]
    NotWeak { index: usize, value: usize },
    #[error("invalid {family} parameters: {reason}")]
    FamilyParams { family: &'static str, reason: String },
    #[error("arithmetic family: part {index} would be {value}, which is not positive")]
    NonPositivePart { index: usize, value: i64 },
    #[error("cannot parse {what} from {input:?}: {reason}")]
    Parse {
        what: &'static str,
        input: String,
        reason: String,
    },
    #[error("shape size {size} exceeds the enumeration budget {budget}")]
    BudgetExceeded { size: usize, budget: usize },
    #[error("q-binomial C({n},{k}) needs k <= n")]
    BinomBounds { n: usize, k: usize },
    #[error("q-analog C({a},{b}) needs 1 <= b <= a/2")]
    QAnalogBounds { a: usize, b: usize },
    #[error("part {part} does not fit in a word of length {len}")]
    PartTooLarge { part: usize, len: usize },
    #[error("word {word} violates the ballot condition at position {position}")]
    BallotViolation { word: String, position: usize },
    #[error("checkpoint: {0}")]
    Checkpoint(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
