//! Exact computations for special biserial path algebra quotients over `F_p`:
//! presentations, string combinatorics, explicit representations, the
//! right n-Nakayama index and almost split sequences.

pub mod arquiver;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod linalg;
pub mod nakayama;
pub mod presentation;
pub mod repmod;
pub mod stringcomb;

pub use error::{Error, Result};
pub use presentation::{Path, Presentation, Quiver, Relation};
pub use repmod::Rep;
pub use stringcomb::{Letter, StringWord, Walk};
