//! Command-line front end for the lattice polygon kernel: polygon files, the
//! random polygon generator, SVG rendering and the user commands.

pub mod commands;
pub mod gen;
pub mod polyfile;
pub mod svg;
