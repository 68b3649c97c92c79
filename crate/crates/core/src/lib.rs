//! A discrete-mathematics toolkit: logic, sets, relations, graphs, trees,
//! number theory, linear algebra and combinatorics, fronted by a small
//! expression language with a REPL and a source translator.

pub mod apps;
pub mod combinatorics;
pub mod error;
pub mod frontend;
pub mod graph;
pub mod linalg;
pub mod logic;
pub mod numtheory;
pub mod relation;
pub mod set;
pub mod tree;
pub mod value;

pub use error::{Error, Result};
