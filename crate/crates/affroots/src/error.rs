use crate::lattice::RootVec;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient mismatch: expected (k,l)=({0},{1}), got ({2},{3})")]
    AmbientMismatch(usize, usize, usize, usize),
    #[error("{0} is not a root")]
    NotARoot(RootVec),
    #[error("{0} is not real")]
    NotReal(RootVec),
    #[error("cannot reflect through isotropic {0}")]
    IsotropicReflection(RootVec),
    #[error("reflection of {0} through {1} leaves the lattice")]
    NonIntegralReflection(RootVec, RootVec),
    #[error("{0} is not a direction of the quotient")]
    NotADirection(RootVec),
    #[error("invalid algebra type: {0}")]
    InvalidType(String),
    #[error("level set is not an arithmetic progression")]
    NotAProgression,
    #[error("subsystem {0} is tight")]
    Tight(usize),
    #[error("subsystems have incompatible orientations")]
    Incompatible,
    #[error("subsystem {0} mixes both hybrid orientations")]
    MixedOrientation(usize),
    #[error("no affine base: {0}")]
    NoBase(String),
    #[error("invalid support model: {0}")]
    InvalidModel(String),
    #[error("matrix size mismatch: {0}x{0} vs {1}x{1}")]
    SizeMismatch(usize, usize),
    #[error("shape violation: {0}")]
    Shape(String),
    #[error("matrix is not in the model algebra")]
    NotInModel,
    #[error("inhomogeneous input")]
    Inhomogeneous,
    #[error("no root {0} at this level")]
    NoSuchRoot(RootVec),
    #[error("size cap exceeded: k+l = {0} > {1}")]
    SizeCap(usize, usize),
}
