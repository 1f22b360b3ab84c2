//! Skew Schur Q-functions of shifted shapes: tableaux, amenability, the
//! shifted Littlewood-Richardson expansion, and the classification of
//! Q-homogeneous skew shapes.

pub mod amenability;
pub mod canonical;
pub mod classification;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod expansion;
pub mod shapes;
pub mod tableaux;
pub mod verify;

pub use error::{Error, Result};
