use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("elliptic modulus m² = {m_sq} out of domain: {reason}")]
    EllipticDomain { m_sq: f64, reason: &'static str },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("degenerate polygon: {0}")]
    Degenerate(String),

    #[error("triangle is not acute (cosines {0:?})")]
    NotAcute([f64; 3]),

    #[error("tangent lines at consecutive vertices {0} and {1} are parallel")]
    ParallelTangents(usize, usize),

    #[error("universal-measure parametrization breaks down: cn(Δu/2) = {cn} <= 0 for n = {n}, τ = {tau}")]
    ParametrizationBreakdown { cn: f64, n: usize, tau: usize },

    #[error("caustic semi-axes must satisfy a_c >= b_c (got {a_c}, {b_c}); swap x and y before calling")]
    CanonicalizeAxes { a_c: f64, b_c: f64 },

    #[error("circumcircle parametrization radicand is negative ({0:e})")]
    NegativeRadicand(f64),

    #[error("no confocal caustic yields a closed ({n}, {tau}) orbit in ellipse ({alpha}, {beta})")]
    NoCaustic {
        alpha: f64,
        beta: f64,
        n: usize,
        tau: usize,
    },

    #[error("point lies off the table (residual {0:e})")]
    OffTable(f64),

    #[error("ray is tangent to the table or leaves it")]
    TangentRay,

    #[error("log-cosine requires positive cosines, got {0:?}")]
    NonPositiveCosine([f64; 3]),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
