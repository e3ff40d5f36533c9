//! Number walls of integer and modular sequences, computed exactly.
//!
//! A number wall is the table `S[m][n]` of Toeplitz determinants of a
//! sequence: row `m` holds the order-(m+1) determinants, rows `-2` and `-1`
//! are the conventional all-zero and all-one boundary. Zero entries occur
//! only in square windows, and the frame identities around a window let the
//! row recursion cross it; [`wall::wall_frame`] implements that algorithm
//! over arbitrary-precision integers and prime fields.
//!
//! The companion modules generate the substitution (D0L/D0LEC) sequences the
//! walls are most interesting for ([`seqgen`]), measure window statistics,
//! deficiency and zero density ([`analysis`]), verify the ternary Pagoda
//! wall against its 13-tile plane substitution ([`tiling`]), and render
//! walls as PPM images ([`render`]).

pub mod algebra;
pub mod analysis;
pub mod render;
pub mod seqgen;
pub mod tiling;
pub mod wall;

pub use algebra::{Domain, DomainValue};
pub use wall::{Wall, WallInput, WallMode, Window};
