//! Iterated barycentric refinement of finite simple graphs and the spectra of
//! the operators living on them.
//!
//! The pipeline is
//!
//! ```text
//! SimpleGraph --build--> CliqueComplex --refine--> SimpleGraph (G_1) --> ...
//!                              |
//!                              +--> exterior derivatives d_k, Hodge L_k, Dirac D
//!                                        |
//!                                        +--> eigenvalues --> SpectrumProfile F(x)
//! ```
//!
//! Exact quantities (f-vectors, curvatures, Euler characteristics, inductive
//! dimension, matrix assembly) are computed in integer or rational arithmetic.
//! Floating point enters only in the eigensolver and the distribution
//! functions built from its output.
//!
//! ```
//! use baryspec::{generate, Family, refine_iter, Limits};
//!
//! let triangle = generate(Family::Complete(3)).unwrap();
//! let g2 = refine_iter(&triangle, 2, &Limits::default()).unwrap();
//! assert_eq!(g2.graph.vertex_count(), 25);
//! ```

pub mod barycentric;
pub mod checks;
pub mod complex;
pub mod counting;
pub mod eigen;
mod error;
pub mod graph;
pub mod operators;
pub mod plot;
pub mod spectral;

pub use barycentric::{dimension_coloring, refine, refine_iter, refine_iter_with_f_vectors, RefinedGraph};
pub use complex::{CliqueComplex, Simplex};
pub use counting::{evolve, stirling2, transfer_matrix, FVector, TransferMatrix};
pub use eigen::{symmetric_eigenvalues, DenseMatrix, Spectrum};
pub use error::{Error, Result};
pub use graph::{generate, make_graph, Family, SimpleGraph};
pub use operators::OperatorMatrix;
pub use spectral::SpectrumProfile;

/// Resource caps shared by every size-sensitive operation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of simplices a clique complex may hold.
    pub max_simplices: usize,
    /// Maximum matrix order handed to the dense eigensolver.
    pub max_eig: usize,
}

impl Limits {
    pub const DEFAULT_MAX_SIMPLICES: usize = 5_000_000;
    pub const DEFAULT_MAX_EIG: usize = 6000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_simplices: Self::DEFAULT_MAX_SIMPLICES,
            max_eig: Self::DEFAULT_MAX_EIG,
        }
    }
}
