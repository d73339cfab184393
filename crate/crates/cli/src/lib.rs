pub mod app;
pub mod basis;
pub mod error;
pub mod eval;
pub mod expr;
pub mod output;
pub mod parse;
