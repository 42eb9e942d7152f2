//! Exact computation of Külshammer ideals and related invariants of
//! finite-dimensional symmetric algebras over finite fields.

pub mod algebra;
pub mod blocks;
pub mod brauer;
pub mod builders;
pub mod error;
pub mod exactla;
pub mod fingerprint;
pub mod form;
pub mod gfield;
pub mod kulshammer;
pub mod oracle;
pub mod report;
pub mod speclang;

pub use error::{Error, Result};
