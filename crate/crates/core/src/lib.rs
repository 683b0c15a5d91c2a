//! q-analogues of Catalan-type numbers through their combinatorial models.

pub mod bijections;
pub mod cli;
pub mod error;
pub mod identities;
pub mod objects;
pub mod qpoly;
pub mod statistics;
pub mod tilings;

pub use error::{Error, Result};
