//! Exact combinatorics of partitions and abacus displays, together with
//! Specht and spin characters of the symmetric group restricted to classes
//! of odd-order elements.

pub mod abacus;
pub mod cache;
pub mod charspace;
pub mod charvalues;
pub mod classify;
pub mod error;
pub mod hooks;
pub mod nodes;
pub mod par;
pub mod partition;
pub mod scalar;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
pub use partition::{Node, Partition, StrictPartition};
pub use scalar::Scalar;
