//! Text formats, DOT emission, and the census runner behind the
//! `posemigroup` command-line tool.

pub mod census;
pub mod dot;
pub mod format;
