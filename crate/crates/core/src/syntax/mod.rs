//! Concrete STON text syntax.
//!
//! ```text
//! document   = "@ston" roles actions sentences "@end" ;
//! roles      = "@roles"    { role } ;
//! actions    = "@actions"  { action } ;
//! sentences  = "@sentences" { sentence } ;
//! role       = "r" ":" "{" { roleAttr } "}" ;
//! action     = "a" ":" "{" { actAttr } "}" ;
//! sentence   = "s" ":" "{" { simpleAttr } "}" ;
//! block      = blockKey ":" "{" { simpleAttr } "}" ;
//! simpleAttr = key ":" value ";" ;
//! value      = scalar | list ;
//! list       = "[" group { "|" group } "]" ;
//! group      = scalar { "," scalar } ;
//! scalar     = IDENT | NUMBER ;
//! ```
//!
//! `#` starts a comment that runs to the end of the line.

use std::fmt;

use crate::model::Document;

mod build;
mod lexer;
mod parser;

pub use lexer::{tokenize, Section, Token, TokenKind};

/// Position of a character in the source text.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SourceLocation {
    /// 1-based.
    pub line: usize,
    /// 1-based, counted in characters.
    pub column: usize,
    /// 0-based byte offset.
    pub offset: usize,
}

impl SourceLocation {
    pub const START: SourceLocation = SourceLocation {
        line: 1,
        column: 1,
        offset: 0,
    };
}

impl fmt::Display for SourceLocation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.column)
    }
}

/// Closed registry of parse error codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorCode {
    UnexpectedChar,
    UnexpectedToken,
    UnknownKey,
    UnknownCode,
    DuplicateKey,
    MissingSection,
    MissingKey,
    InvalidValue,
}

impl ErrorCode {
    pub const ALL: [ErrorCode; 8] = [
        ErrorCode::UnexpectedChar,
        ErrorCode::UnexpectedToken,
        ErrorCode::UnknownKey,
        ErrorCode::UnknownCode,
        ErrorCode::DuplicateKey,
        ErrorCode::MissingSection,
        ErrorCode::MissingKey,
        ErrorCode::InvalidValue,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ErrorCode::UnexpectedChar => "UNEXPECTED_CHAR",
            ErrorCode::UnexpectedToken => "UNEXPECTED_TOKEN",
            ErrorCode::UnknownKey => "UNKNOWN_KEY",
            ErrorCode::UnknownCode => "UNKNOWN_CODE",
            ErrorCode::DuplicateKey => "DUPLICATE_KEY",
            ErrorCode::MissingSection => "MISSING_SECTION",
            ErrorCode::MissingKey => "MISSING_KEY",
            ErrorCode::InvalidValue => "INVALID_VALUE",
        }
    }
}

impl fmt::Display for ErrorCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub location: SourceLocation,
    pub code: ErrorCode,
    pub message: String,
    /// Token classes that would have been accepted, when known.
    pub expected: Vec<TokenKind>,
}

impl ParseError {
    pub(crate) fn new(location: SourceLocation, code: ErrorCode, message: impl Into<String>) -> Self {
        ParseError {
            location,
            code,
            message: message.into(),
            expected: Vec::new(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}: {}", self.location, self.code, self.message)?;
        if !self.expected.is_empty() {
            let expected: Vec<String> = self.expected.iter().map(ToString::to_string).collect();
            write!(f, " (expected {})", expected.join(", "))?;
        }
        Ok(())
    }
}

impl std::error::Error for ParseError {}

/// Parses STON text into a [`Document`].
///
/// On failure every error found is returned; the parser resynchronizes on the
/// next `;` or `}` after each one.
pub fn parse(text: &str) -> Result<Document, Vec<ParseError>> {
    let tokens = tokenize(text)?;
    let (raw, mut errors) = parser::parse_raw(&tokens, text);
    let (doc, build_errors) = build::build(raw);
    errors.extend(build_errors);
    if errors.is_empty() {
        Ok(doc)
    } else {
        errors.sort_by_key(|e| e.location);
        Err(errors)
    }
}
