//! File formats, DOT export and stage dumps around [`forall_core`].

pub mod aut;
pub mod dot;
pub mod stages;

pub use aut::{read_aut, write_aut, AutError};
pub use dot::to_dot;
pub use stages::dump_stages;
