//! Exact rational scalars, dense rational linear algebra, univariate
//! polynomials over `Q` and factorization over `Q`.

pub mod factor;
pub mod linalg;
pub mod modp;
pub mod rat;
pub mod unipoly;

pub use factor::factor_rational;
pub use linalg::{kernel_basis, RatMatrix};
pub use rat::{is_square_rational, rat_sqrt, Rat};
pub use unipoly::{discriminant, resultant, UniPoly};
