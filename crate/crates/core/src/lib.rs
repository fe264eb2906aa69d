//! Phase estimation of Hamiltonian ground energies through a block-encoded,
//! amplitude-amplified shifted operator, simulated on a statevector.

pub mod amplify;
pub mod dense;
pub mod error;
pub mod lcu;
pub mod pauli;
pub mod pea;
pub mod state;

pub use error::{Error, Result};
