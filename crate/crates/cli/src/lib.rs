//! Library side of the `homtwist` command: the JSON algebra document and the
//! command implementations.

pub mod app;
pub mod document;
