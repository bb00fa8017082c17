use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({}, {}) has an endpoint outside 0..{vertex_count}", edge.0, edge.1)]
    EndpointOutOfRange {
        edge: (usize, usize),
        vertex_count: usize,
    },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("{labels} labels for {vertex_count} vertices")]
    LabelCount { labels: usize, vertex_count: usize },
    #[error("coloring has {assignment} entries but the graph has {vertex_count} vertices")]
    ColoringLength {
        assignment: usize,
        vertex_count: usize,
    },
    #[error("color {color} at vertex {vertex} is not below colors_used = {colors_used}")]
    ColorOutOfRange {
        vertex: usize,
        color: usize,
        colors_used: usize,
    },
    #[error("composite node needs at least two children, got {0}")]
    TooFewChildren(usize),
    #[error("no chromatic number supplied for leaf {0}")]
    MissingLeafChi(usize),
}

/// Failure while reading a DIMACS document. `line` is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("duplicate problem line")]
    DuplicateHeader,
    #[error("missing problem line")]
    MissingHeader,
    #[error("malformed line: {0}")]
    MalformedLine(String),
    #[error("endpoint out of range: {0} is not in 1..={1}")]
    EndpointOutOfRange(u64, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(u64, u64),
    #[error("variable out of range: {0} is not in 1..={1}")]
    VariableOutOfRange(u64, usize),
    #[error("clause has {0} literals; only 1 to 3 are supported")]
    ClauseWidth(usize),
    #[error("clause is not terminated by 0")]
    UnterminatedClause,
    #[error("header declares {declared} {what} but {found} were read")]
    CountMismatch {
        what: &'static str,
        declared: usize,
        found: usize,
    },
}

impl ParseError {
    pub(crate) fn new(line: usize, kind: ParseErrorKind) -> Self {
        ParseError { line, kind }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CnfError {
    #[error(
        "literal refers to variable {variable} but the formula has {variable_count} variables"
    )]
    VariableOutOfRange {
        variable: usize,
        variable_count: usize,
    },
    #[error("clause {clause} has {width} literals; only 1 to 3 are supported")]
    ClauseWidth { clause: usize, width: usize },
    #[error(
        "formula has {variables} variables, above the brute-force cap of {cap}; \
         exhaustive search is meant for desk-scale instances"
    )]
    VariableCapExceeded { variables: usize, cap: usize },
    #[error("a chain needs an even number of at least two formulas, got {0}")]
    ChainLength(usize),
    #[error("chain is not monotone: formula {index} is satisfiable but formula {} is not", index - 1)]
    NotMonotone { index: usize },
    #[error("t = {t} is outside 0..={}", 2 * k)]
    PrefixOutOfRange { k: usize, t: usize },
    #[error("k must be positive")]
    ZeroK,
}

/// The exact search ran out of its decision budget. The bracketing bounds
/// on the chromatic number known at that point are attached.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("undecided: node budget of {budget} exhausted while testing {k}-colorability (chi in [{lower}, {upper}])")]
    Undecided {
        budget: u64,
        k: usize,
        lower: usize,
        upper: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReductionError {
    #[error(transparent)]
    Cnf(#[from] CnfError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}
