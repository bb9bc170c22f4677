//! Constructive countability: explicit bijections between countable sets,
//! enumerations with forward and backward evaluation, exhaustive comparison
//! of finite sets, an always-full infinite hotel, and the diagonal
//! construction on digit streams.

pub mod bijections;
pub mod cli;
pub mod diagonal;
pub mod enumerations;
pub mod error;
pub mod finite_compare;
pub mod hotel;
pub mod numbers;

pub use error::{Error, Result};
pub use numbers::{Digit, Integer, Natural, Rational, Whole};
