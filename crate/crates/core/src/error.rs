use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("genericity failure in {stage} after {retries} attempts: {detail}")]
    Genericity {
        stage: String,
        retries: usize,
        detail: String,
    },
    #[error("image empty: the map is undefined on every component")]
    ImageEmpty,
    #[error("map not generically finite")]
    NotGenericallyFinite,
    #[error("map is not birational (degree {0})")]
    NotBirational(i64),
    #[error("point does not lie on the variety")]
    PointNotOnVariety,
    #[error("point lies on the surface")]
    PointOnSurface,
    #[error("form is not in the ideal")]
    NotInIdeal,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn genericity(stage: &str, retries: usize, detail: impl Into<String>) -> Self {
        Error::Genericity {
            stage: stage.to_string(),
            retries,
            detail: detail.into(),
        }
    }
}
