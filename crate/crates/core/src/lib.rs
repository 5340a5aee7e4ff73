//! Exact computations behind the tensor-product decomposition of complex
//! Azumaya algebras with orthogonal involution: homotopy groups of the
//! orthogonal family in low degrees, the maps induced by direct sums and
//! tensor products, and a degree-by-degree connectivity certificate.

pub mod bezout;
pub mod checker;
pub mod error;
pub mod fgab;
pub mod homotopy;
pub mod induced;
pub mod oracle;
pub mod snf;
pub mod zmatrix;

pub use error::{Error, Result};
pub use fgab::{compose, FgAbGroup, GroupHom};
pub use snf::{smith_normal_form, SnfResult};
pub use zmatrix::ZMatrix;
