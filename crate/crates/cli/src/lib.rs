//! Library surface of the command-line front end: the definition-document
//! schema, the polynomial expression parser, and the command
//! implementations with their exit-code contract.

pub mod commands;
pub mod doc;
pub mod expr;
