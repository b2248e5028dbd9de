pub mod bench;
pub mod canon;
pub mod encode;
pub mod fixtures;
pub mod interchange;
pub mod lexicon;
pub mod model;
pub mod realize;
pub mod stats;
pub mod syntax;
pub mod validate;

pub use model::*;
pub use syntax::{parse, tokenize, ErrorCode, ParseError, SourceLocation};
