//! Block-structure parser. Produces untyped blocks; keys and values are
//! interpreted by the builder.

use super::lexer::{Section, Token, TokenKind};
use super::{ErrorCode, ParseError, SourceLocation};

#[derive(Debug, Default)]
pub(super) struct RawDocument<'a> {
    pub roles: Vec<RawBlock<'a>>,
    pub actions: Vec<RawBlock<'a>>,
    pub sentences: Vec<RawBlock<'a>>,
}

#[derive(Debug)]
pub(super) struct RawBlock<'a> {
    pub head: Token<'a>,
    pub attrs: Vec<RawAttr<'a>>,
    /// Some attribute was dropped while recovering from a syntax error.
    pub damaged: bool,
}

#[derive(Debug)]
pub(super) struct RawAttr<'a> {
    pub key: Token<'a>,
    pub value: RawValue<'a>,
}

#[derive(Debug)]
pub(super) enum RawValue<'a> {
    Scalar(Token<'a>),
    List {
        open: Token<'a>,
        groups: Vec<Vec<Token<'a>>>,
    },
    Block(RawBlock<'a>),
}

/// The error has been recorded; the caller decides how to resynchronize.
struct Failed;

type PResult<T> = Result<T, Failed>;

struct Parser<'t, 'a> {
    tokens: &'t [Token<'a>],
    pos: usize,
    end: SourceLocation,
    errors: Vec<ParseError>,
}

pub(super) fn parse_raw<'a>(tokens: &[Token<'a>], text: &str) -> (RawDocument<'a>, Vec<ParseError>) {
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: end_location(text),
        errors: Vec::new(),
    };
    let doc = parser.document();
    (doc, parser.errors)
}

fn end_location(text: &str) -> SourceLocation {
    let line = text.matches('\n').count() + 1;
    let last_line = text.rfind('\n').map_or(text, |i| &text[i + 1..]);
    SourceLocation {
        line,
        column: last_line.chars().count() + 1,
        offset: text.len(),
    }
}

impl<'a> Parser<'_, 'a> {
    fn peek(&self) -> Option<Token<'a>> {
        self.tokens.get(self.pos).copied()
    }

    fn peek_kind(&self) -> Option<TokenKind> {
        self.peek().map(|t| t.kind)
    }

    fn bump(&mut self) -> Option<Token<'a>> {
        let tok = self.peek();
        if tok.is_some() {
            self.pos += 1;
        }
        tok
    }

    fn here(&self) -> SourceLocation {
        self.peek().map_or(self.end, |t| t.location)
    }

    fn unexpected(&mut self, expected: &[TokenKind]) -> Failed {
        let (location, found) = match self.peek() {
            Some(t) => (t.location, format!("unexpected `{}`", t.text)),
            None => (self.end, "unexpected end of input".to_string()),
        };
        let mut err = ParseError::new(location, ErrorCode::UnexpectedToken, found);
        err.expected = expected.to_vec();
        self.errors.push(err);
        Failed
    }

    fn expect(&mut self, kind: TokenKind) -> PResult<Token<'a>> {
        match self.peek() {
            Some(t) if t.kind == kind => {
                self.pos += 1;
                Ok(t)
            }
            _ => Err(self.unexpected(&[kind])),
        }
    }

    fn document(&mut self) -> RawDocument<'a> {
        let mut doc = RawDocument::default();
        self.section(Section::Ston);
        self.section(Section::Roles);
        doc.roles = self.blocks("r");
        self.section(Section::Actions);
        doc.actions = self.blocks("a");
        self.section(Section::Sentences);
        doc.sentences = self.blocks("s");
        if self.section(Section::End) && self.peek().is_some() {
            let tok = self.peek().unwrap();
            self.errors.push(ParseError::new(
                tok.location,
                ErrorCode::UnexpectedToken,
                format!("unexpected `{}` after `@end`", tok.text),
            ));
        }
        doc
    }

    fn section(&mut self, section: Section) -> bool {
        if self.peek_kind() == Some(TokenKind::Section(section)) {
            self.pos += 1;
            return true;
        }
        let mut err = ParseError::new(
            self.here(),
            ErrorCode::MissingSection,
            format!("missing `{}` section", section.keyword()),
        );
        err.expected = vec![TokenKind::Section(section)];
        self.errors.push(err);
        false
    }

    fn blocks(&mut self, kind: &str) -> Vec<RawBlock<'a>> {
        let mut blocks = Vec::new();
        while let Some(tok) = self.peek() {
            if matches!(tok.kind, TokenKind::Section(_)) {
                break;
            }
            match self.top_block(kind) {
                Ok(block) => blocks.push(block),
                Err(Failed) => self.skip_block(),
            }
        }
        blocks
    }

    fn top_block(&mut self, kind: &str) -> PResult<RawBlock<'a>> {
        let head = match self.peek() {
            Some(t) if t.kind == TokenKind::Ident && t.text == kind => {
                self.pos += 1;
                t
            }
            Some(t) => {
                let mut err = ParseError::new(
                    t.location,
                    ErrorCode::UnexpectedToken,
                    format!("expected a `{kind}:{{` block, found `{}`", t.text),
                );
                err.expected = vec![TokenKind::Ident];
                self.errors.push(err);
                return Err(Failed);
            }
            None => return Err(self.unexpected(&[TokenKind::Ident])),
        };
        self.expect(TokenKind::Colon)?;
        self.expect(TokenKind::LBrace)?;
        self.block_body(head, false)
    }

    /// Attributes up to and including the closing brace.
    fn block_body(&mut self, head: Token<'a>, nested: bool) -> PResult<RawBlock<'a>> {
        let mut block = RawBlock {
            head,
            attrs: Vec::new(),
            damaged: false,
        };
        loop {
            match self.peek_kind() {
                None | Some(TokenKind::Section(_)) => {
                    return Err(self.unexpected(&[TokenKind::RBrace]));
                }
                Some(TokenKind::RBrace) => {
                    self.pos += 1;
                    return Ok(block);
                }
                Some(_) => match self.attr(nested) {
                    Ok(attr) => block.attrs.push(attr),
                    Err(Failed) => {
                        block.damaged = true;
                        self.skip_attr();
                    }
                },
            }
        }
    }

    fn attr(&mut self, nested: bool) -> PResult<RawAttr<'a>> {
        let key = match self.peek() {
            Some(t) if t.kind == TokenKind::Ident => {
                self.pos += 1;
                t
            }
            _ => return Err(self.unexpected(&[TokenKind::Ident, TokenKind::RBrace])),
        };
        self.expect(TokenKind::Colon)?;
        let value = match self.peek_kind() {
            Some(TokenKind::LBrace) if !nested => {
                self.pos += 1;
                RawValue::Block(self.block_body(key, true)?)
            }
            Some(TokenKind::LBrace) => {
                let loc = self.here();
                self.errors.push(ParseError::new(
                    loc,
                    ErrorCode::UnexpectedToken,
                    format!("block `{}` cannot be nested here", key.text),
                ));
                return Err(Failed);
            }
            Some(TokenKind::LBracket) => {
                let list = self.list()?;
                self.expect(TokenKind::Semi)?;
                list
            }
            Some(TokenKind::Ident | TokenKind::Number) => {
                let tok = self.bump().unwrap();
                self.expect(TokenKind::Semi)?;
                RawValue::Scalar(tok)
            }
            _ => {
                return Err(self.unexpected(&[
                    TokenKind::Ident,
                    TokenKind::Number,
                    TokenKind::LBracket,
                    TokenKind::LBrace,
                ]))
            }
        };
        Ok(RawAttr { key, value })
    }

    fn list(&mut self) -> PResult<RawValue<'a>> {
        let open = self.expect(TokenKind::LBracket)?;
        let mut groups = vec![Vec::new()];
        loop {
            match self.peek() {
                Some(t) if matches!(t.kind, TokenKind::Ident | TokenKind::Number) => {
                    self.pos += 1;
                    groups.last_mut().unwrap().push(t);
                }
                _ => return Err(self.unexpected(&[TokenKind::Ident, TokenKind::Number])),
            }
            match self.peek_kind() {
                Some(TokenKind::Comma) => self.pos += 1,
                Some(TokenKind::Pipe) => {
                    self.pos += 1;
                    groups.push(Vec::new());
                }
                Some(TokenKind::RBracket) => {
                    self.pos += 1;
                    return Ok(RawValue::List { open, groups });
                }
                _ => {
                    return Err(self.unexpected(&[
                        TokenKind::Comma,
                        TokenKind::Pipe,
                        TokenKind::RBracket,
                    ]))
                }
            }
        }
    }

    /// Skips to just past the next `;` at this nesting level, or up to (not
    /// past) the `}` closing the current block.
    fn skip_attr(&mut self) {
        let mut depth = 0usize;
        while let Some(kind) = self.peek_kind() {
            match kind {
                TokenKind::Section(_) => return,
                TokenKind::LBrace => depth += 1,
                TokenKind::RBrace if depth == 0 => return,
                TokenKind::RBrace => depth -= 1,
                TokenKind::Semi if depth == 0 => {
                    self.pos += 1;
                    return;
                }
                _ => {}
            }
            self.pos += 1;
        }
    }

    /// Skips the remainder of a malformed top-level block.
    fn skip_block(&mut self) {
        let mut depth = 0usize;
        while let Some(kind) = self.peek_kind() {
            match kind {
                TokenKind::Section(_) => return,
                TokenKind::LBrace => depth += 1,
                TokenKind::RBrace => {
                    self.pos += 1;
                    if depth <= 1 {
                        return;
                    }
                    depth -= 1;
                    continue;
                }
                _ => {}
            }
            self.pos += 1;
        }
    }
}
