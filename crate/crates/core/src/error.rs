use std::fmt;

use crate::graph::VertexId;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A vertex id was used that is not present in the graph.
    UnknownVertex(VertexId),
    /// Undirected graphs reject self-loops.
    SelfLoopForbidden(VertexId),
    /// The operation requires the other directedness kind.
    WrongDirectedness { expected: &'static str },
    /// The operation is undefined on an empty graph.
    EmptyGraph,
    /// Both endpoints of a separator query were the same vertex.
    SameVertex(VertexId),
    /// A parameter was outside its documented range.
    InvalidParameter(String),
    /// A file could not be parsed.
    Parse { line: usize, msg: String },
    /// Bitset-backed solvers handle at most 128 vertices.
    TooLarge(usize),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "unknown vertex id {}", v.0),
            Error::SelfLoopForbidden(v) => {
                write!(f, "self-loop on vertex {} not allowed in an undirected graph", v.0)
            }
            Error::WrongDirectedness { expected } => {
                let article = if expected.starts_with('u') { "an" } else { "a" };
                write!(f, "operation requires {article} {expected} graph")
            }
            Error::EmptyGraph => write!(f, "operation undefined on an empty graph"),
            Error::SameVertex(v) => write!(f, "endpoints must differ (both are {})", v.0),
            Error::InvalidParameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            Error::TooLarge(n) => {
                write!(f, "graph has {n} vertices, exact solver supports at most 128")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
