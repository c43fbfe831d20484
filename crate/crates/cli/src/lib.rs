//! JSON codecs and job execution behind the `ringinv` command.

pub mod codec;
pub mod job;

pub use job::{parse_job, render, run, Command, JobOutput, JobSpec};
