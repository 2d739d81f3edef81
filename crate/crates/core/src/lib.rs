//! Exact detection of linear relations among four conjugates of an algebraic
//! number, together with the supporting machinery: rational polynomial
//! arithmetic and factoring, number fields and splitting fields, Galois
//! groups of small degree, parametric families and a certified numeric
//! cross-check.

pub mod cli;
pub mod corpus;
pub mod factor;
pub mod families;
pub mod galois;
pub mod linalg;
pub mod numberfield;
pub mod numeric;
pub mod poly;
pub mod relations;
