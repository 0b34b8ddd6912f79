//! Tableau combinatorics of the Lie superalgebra sl(m,n): hook shapes, semistandard and
//! quasistandard tableaux, push/pull, super jeu de taquin, and an exact tensor oracle.

pub mod classical;
pub mod error;
pub mod extraction;
pub mod hookshapes;
pub mod rational;
pub mod superspace;
pub mod tableaux;
pub mod taquin;
pub mod verify;

pub use error::{Error, Result};
pub use extraction::TrivialPair;
pub use hookshapes::{HookShape, Signature, SuperWeight};
pub use rational::Q;
pub use tableaux::{Cell, FormalCombination, HookTableau};
