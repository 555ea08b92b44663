use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("tetrahedron {tet} does not exist (triangulation has {size})")]
    TetOutOfRange { tet: usize, size: usize },
    #[error("face {face} of tetrahedron {tet} is glued to itself")]
    FaceGluedToSelf { tet: usize, face: usize },
    #[error("gluing of face {face} of tetrahedron {tet} is not matched by its partner")]
    NonInvolutiveGluing { tet: usize, face: usize },
    #[error("an edge of tetrahedron {tet} is identified with itself in reverse")]
    InvalidEdge { tet: usize },
    #[error("vertex {vertex} has a link that is neither a sphere, a disc nor a closed surface")]
    InvalidVertexLink { vertex: usize },
    #[error("{0} is not a boundary edge")]
    NotBoundaryEdge(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("vector is not an admissible normal surface: {0}")]
    Inadmissible(String),
    #[error("resource limit exceeded: {0}")]
    ResourceExceeded(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
