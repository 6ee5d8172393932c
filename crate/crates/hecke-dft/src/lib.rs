//! A deformed discrete Fourier transform on the finite lattice {0, ..., M},
//! built from two explicit representations of the type-A1 double affine
//! Hecke algebra at q = 1 on functions over the integers.
//!
//! The crate has three layers:
//!
//! * exact combinatorics and algebra: the extended affine Weyl group
//!   ([`weyl`]), rational-function coefficients ([`ratfun`]) and the Hecke
//!   algebra itself in its T_w X^k basis ([`daha`]);
//! * lattice analysis: the difference-reflection and integral-reflection
//!   operator families, the triangular intertwiner between them, and the
//!   deformed Laplacian ([`lattice`]);
//! * the finite transform: Bethe-type spectral nodes with their weights
//!   ([`spectral`]), the orthogonal kernel, forward/inverse transforms and
//!   the cosine-transform degeneration ([`transform`]).
//!
//! Every identity used along the way is checked by the named suites in
//! [`verify`], which also back the `verify` subcommand of the CLI.

pub mod daha;
pub mod error;
pub mod lattice;
pub mod ratfun;
pub mod spectral;
pub mod transform;
pub mod verify;
pub mod weyl;

pub use error::{ConfigError, LatticeError, SpectralError, TransformError};
pub use lattice::LatticeFunction;
pub use spectral::{SpectralPoint, SpectrumTable};
pub use transform::{KernelMatrix, Signal};
pub use weyl::{LatticeConfig, WeylElement};
