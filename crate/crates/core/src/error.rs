use thiserror::Error;

/// Failures of the graph constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop on `{0}`")]
    SelfLoop(String),
    #[error("graph has a cycle through `{0}`")]
    Cycle(String),
    #[error("label collision on `{0}`")]
    LabelCollision(String),
    #[error("graphs to be disjointly united share the label `{0}`")]
    OverlappingLabels(String),
    #[error("kept vertex `{0}` is not a member of the merged cluster")]
    KeptNotInCluster(String),
    #[error("the right factor of a partial product must be nonempty")]
    EmptyFactor,
    #[error("malformed bipointed graph: {0}")]
    MalformedBipointing(String),
    #[error("a bipointed graph needs at least 2 vertices, got {0}")]
    TooSmall(usize),
}

/// Position in a source text, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Span {
    pub line: usize,
    pub column: usize,
}

impl std::fmt::Display for Span {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Rejections of the class-declaration language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeclError {
    #[error("{at}: syntax error: {message}")]
    Syntax { at: Span, message: String },
    #[error("{at}: `{name}` is reserved and cannot be declared")]
    Reserved { at: Span, name: String },
    #[error("{at}: class `{name}` is declared twice")]
    Duplicate { at: Span, name: String },
    #[error("{at}: class `{class}` extends undeclared class `{superclass}`")]
    UndeclaredSuperclass {
        at: Span,
        class: String,
        superclass: String,
    },
    #[error("{at}: generic class `{class}` must extend generic `{superclass}` as `{superclass}<{param}>`")]
    BadPassThrough {
        at: Span,
        class: String,
        superclass: String,
        param: String,
    },
    #[error("{at}: non-generic class `{class}` cannot extend generic class `{superclass}`")]
    NonGenericExtendsGeneric {
        at: Span,
        class: String,
        superclass: String,
    },
    #[error("{at}: `{superclass}` is not generic and takes no type argument")]
    ArgumentToNonGeneric { at: Span, superclass: String },
    #[error("inheritance cycle through `{0}`")]
    Cycle(String),
}

/// Rejections of the ground-type expression language.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TypeError {
    #[error("{at}: syntax error: {message}")]
    Syntax { at: Span, message: String },
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("class `{0}` is not generic and takes no type argument")]
    ArgumentToNonGeneric(String),
    #[error("generic class `{0}` needs a type argument")]
    MissingArgument(String),
}

/// Umbrella error for the public pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decl(#[from] DeclError),
    #[error(transparent)]
    Type(#[from] TypeError),
    #[error("iteration count must be at least 1")]
    ZeroIterations,
    #[error("type of rank {rank} needs a trace of depth {rank}, but only {depth} iterations were run")]
    RankExceedsTrace { rank: usize, depth: usize },
}
