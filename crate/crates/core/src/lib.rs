//! Vanishing polynomials and polynomial functions over `Z_n` and finite
//! products `Z_m1 x ... x Z_mj`.

pub mod arith;
pub mod cli;
pub mod construct;
pub mod error;
pub mod ideal;
pub mod oracle;
pub mod polyring;
pub mod product;

pub use arith::{Factorization, Natural};
pub use construct::{FactoredPolynomial, LinearFactor};
pub use error::{Error, Result};
pub use ideal::{BasisVariant, Decomposition, GeneratorEntry, GeneratorSet};
pub use oracle::Budget;
pub use polyring::{Polynomial, RingDescriptor, RingElement};
pub use product::CrtSplit;
