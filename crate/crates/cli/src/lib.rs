//! Front-end pieces for the `riordan` binary: the source-string grammar,
//! the expression evaluator behind it, continued-fraction spec files, the
//! golden-file corpus runner, and the exact text renderers.

pub mod cf;
pub mod corpus;
pub mod expr;
pub mod render;
pub mod source;
