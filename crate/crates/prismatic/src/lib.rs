//! File formats, reports and the `prismatic` command-line tool.

pub mod cli;
pub mod edgelist;
pub mod report;
pub mod selftest;
pub mod specfile;
