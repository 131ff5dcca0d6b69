use thiserror::Error;

use crate::automorphisms::WellDefinedFailure;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("self-loop at vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(String, String),
    #[error("order {0} of vertex `{1}` is not a prime power")]
    NotPrimePower(u64, String),
    #[error("graphs with more than 64 vertices are not supported (got {0})")]
    TooManyVertices(usize),
    #[error("vertex sets of a join must be disjoint (`{0}` occurs in both)")]
    JoinNotDisjoint(String),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("zero exponent in token `{0}`")]
    ZeroExponent(String),
    #[error("the identity has no root")]
    IdentityRoot,
    #[error("element is not cyclically reduced")]
    NotCyclicallyReduced,
    #[error("the identity has no basic form")]
    IdentityBasicForm,
    #[error("map is not a well-defined endomorphism: {0}")]
    NotWellDefined(WellDefinedFailure),
    #[error("forward and inverse maps do not compose to the identity")]
    NotInverse,
    #[error("vertex map is not total: missing image for `{0}`")]
    MissingImage(String),
    #[error("a transvection needs two distinct vertices")]
    SameVertex,
    #[error("the group is infinite; a complete graph with finite labels is required")]
    InfiniteGroup,
    #[error("malformed Whitehead data: {0}")]
    MalformedWhitehead(String),
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
