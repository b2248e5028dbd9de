use std::fmt;

use super::{ErrorCode, ParseError, SourceLocation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Section {
    Ston,
    Roles,
    Actions,
    Sentences,
    End,
}

impl Section {
    pub fn keyword(self) -> &'static str {
        match self {
            Section::Ston => "@ston",
            Section::Roles => "@roles",
            Section::Actions => "@actions",
            Section::Sentences => "@sentences",
            Section::End => "@end",
        }
    }

    fn from_keyword(word: &str) -> Option<Self> {
        match word {
            "@ston" => Some(Section::Ston),
            "@roles" => Some(Section::Roles),
            "@actions" => Some(Section::Actions),
            "@sentences" => Some(Section::Sentences),
            "@end" => Some(Section::End),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Section(Section),
    Ident,
    Number,
    LBrace,
    RBrace,
    LBracket,
    RBracket,
    Colon,
    Semi,
    Comma,
    Pipe,
}

impl TokenKind {
    /// Identifiers, numbers and section keywords need a separator between them.
    pub fn is_word(self) -> bool {
        matches!(self, TokenKind::Section(_) | TokenKind::Ident | TokenKind::Number)
    }
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Section(s) => write!(f, "`{}`", s.keyword()),
            TokenKind::Ident => f.write_str("identifier"),
            TokenKind::Number => f.write_str("number"),
            TokenKind::LBrace => f.write_str("`{`"),
            TokenKind::RBrace => f.write_str("`}`"),
            TokenKind::LBracket => f.write_str("`[`"),
            TokenKind::RBracket => f.write_str("`]`"),
            TokenKind::Colon => f.write_str("`:`"),
            TokenKind::Semi => f.write_str("`;`"),
            TokenKind::Comma => f.write_str("`,`"),
            TokenKind::Pipe => f.write_str("`|`"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    pub location: SourceLocation,
}

struct Cursor<'a> {
    text: &'a str,
    offset: usize,
    line: usize,
    column: usize,
}

impl<'a> Cursor<'a> {
    fn location(&self) -> SourceLocation {
        SourceLocation {
            line: self.line,
            column: self.column,
            offset: self.offset,
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.offset..].chars().next()
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek()?;
        self.offset += c.len_utf8();
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn eat_while(&mut self, pred: impl Fn(char) -> bool) {
        while self.peek().is_some_and(&pred) {
            self.bump();
        }
    }
}

fn is_word_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_'
}

/// Splits STON text into tokens. Whitespace and comments are dropped.
///
/// Lexing continues past bad characters so that every one of them is
/// reported.
pub fn tokenize(text: &str) -> Result<Vec<Token<'_>>, Vec<ParseError>> {
    let mut cursor = Cursor {
        text,
        offset: 0,
        line: 1,
        column: 1,
    };
    let mut tokens = Vec::new();
    let mut errors = Vec::new();

    while let Some(c) = cursor.peek() {
        let start = cursor.location();
        let kind = match c {
            c if c.is_whitespace() => {
                cursor.bump();
                continue;
            }
            '#' => {
                cursor.eat_while(|c| c != '\n');
                continue;
            }
            '{' => single(&mut cursor, TokenKind::LBrace),
            '}' => single(&mut cursor, TokenKind::RBrace),
            '[' => single(&mut cursor, TokenKind::LBracket),
            ']' => single(&mut cursor, TokenKind::RBracket),
            ':' => single(&mut cursor, TokenKind::Colon),
            ';' => single(&mut cursor, TokenKind::Semi),
            ',' => single(&mut cursor, TokenKind::Comma),
            '|' => single(&mut cursor, TokenKind::Pipe),
            '@' => {
                cursor.bump();
                cursor.eat_while(is_word_char);
                let word = &text[start.offset..cursor.offset];
                match Section::from_keyword(word) {
                    Some(section) => TokenKind::Section(section),
                    None => {
                        errors.push(ParseError::new(
                            start,
                            ErrorCode::UnexpectedChar,
                            format!("unknown section keyword `{word}`"),
                        ));
                        continue;
                    }
                }
            }
            c if c.is_ascii_digit() => {
                cursor.eat_while(|c| c.is_ascii_digit());
                TokenKind::Number
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                cursor.eat_while(is_word_char);
                TokenKind::Ident
            }
            other => {
                cursor.bump();
                errors.push(ParseError::new(
                    start,
                    ErrorCode::UnexpectedChar,
                    format!("unexpected character {other:?}"),
                ));
                continue;
            }
        };
        tokens.push(Token {
            kind,
            text: &text[start.offset..cursor.offset],
            location: start,
        });
    }

    if errors.is_empty() {
        Ok(tokens)
    } else {
        Err(errors)
    }
}

fn single(cursor: &mut Cursor<'_>, kind: TokenKind) -> TokenKind {
    cursor.bump();
    kind
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinds(text: &str) -> Vec<TokenKind> {
        tokenize(text).unwrap().iter().map(|t| t.kind).collect()
    }

    #[test]
    fn boolean_attribute() {
        let tokens = tokenize("prf: Y;").unwrap();
        let pairs: Vec<_> = tokens.iter().map(|t| (t.kind, t.text)).collect();
        assert_eq!(
            pairs,
            [
                (TokenKind::Ident, "prf"),
                (TokenKind::Colon, ":"),
                (TokenKind::Ident, "Y"),
                (TokenKind::Semi, ";"),
            ]
        );
    }

    #[test]
    fn empty_input() {
        assert!(tokenize("").unwrap().is_empty());
        assert!(tokenize("  # only a comment\n\t").unwrap().is_empty());
    }

    #[test]
    fn grouped_list() {
        use TokenKind::*;
        assert_eq!(
            kinds("agt: [a | b];"),
            [Ident, Colon, LBracket, Ident, Pipe, Ident, RBracket, Semi]
        );
    }

    #[test]
    fn sections_and_numbers() {
        use TokenKind::*;
        assert_eq!(
            kinds("@ston@roles 00301234 O2"),
            [Section(super::Section::Ston), Section(super::Section::Roles), Number, Ident]
        );
    }

    #[test]
    fn locations_track_lines_and_columns() {
        let tokens = tokenize("@ston\n  r:{ # c\n}").unwrap();
        let locs: Vec<_> = tokens.iter().map(|t| (t.location.line, t.location.column)).collect();
        assert_eq!(locs, [(1, 1), (2, 3), (2, 4), (2, 5), (3, 1)]);
        assert_eq!(tokens[4].location.offset, 16);
    }

    #[test]
    fn reports_every_bad_character() {
        let errors = tokenize("id: a-b; @bogus é").unwrap_err();
        let cols: Vec<_> = errors.iter().map(|e| (e.code, e.location.column)).collect();
        assert_eq!(
            cols,
            [
                (ErrorCode::UnexpectedChar, 6),
                (ErrorCode::UnexpectedChar, 10),
                (ErrorCode::UnexpectedChar, 17),
            ]
        );
    }
}
