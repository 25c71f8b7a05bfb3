//! Token stream for expressions and system files, with positions for error
//! reporting.

use num_bigint::BigInt;

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Token {
    Int(BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Arrow,
    Colon,
    Less,
    Equals,
}

#[derive(Clone, Debug)]
pub struct Spanned {
    pub token: Token,
    pub line: usize,
    pub col: usize,
}

/// Tokenize one logical line. `line` is the 1-based line number used in
/// errors.
pub fn tokenize(input: &str, line: usize) -> Result<Vec<Spanned>, CliError> {
    let mut tokens = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let col = i + 1;
        let c = chars[i];
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
            }
            '#' => break,
            '+' => {
                tokens.push(Spanned { token: Token::Plus, line, col });
                i += 1;
            }
            '-' => {
                if chars.get(i + 1) == Some(&'>') {
                    tokens.push(Spanned { token: Token::Arrow, line, col });
                    i += 2;
                } else {
                    tokens.push(Spanned { token: Token::Minus, line, col });
                    i += 1;
                }
            }
            '*' => {
                tokens.push(Spanned { token: Token::Star, line, col });
                i += 1;
            }
            '/' => {
                tokens.push(Spanned { token: Token::Slash, line, col });
                i += 1;
            }
            '^' => {
                tokens.push(Spanned { token: Token::Caret, line, col });
                i += 1;
            }
            '(' => {
                tokens.push(Spanned { token: Token::LParen, line, col });
                i += 1;
            }
            ')' => {
                tokens.push(Spanned { token: Token::RParen, line, col });
                i += 1;
            }
            ':' => {
                tokens.push(Spanned { token: Token::Colon, line, col });
                i += 1;
            }
            '<' => {
                tokens.push(Spanned { token: Token::Less, line, col });
                i += 1;
            }
            '=' => {
                tokens.push(Spanned { token: Token::Equals, line, col });
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                tokens.push(Spanned {
                    token: Token::Int(digits.parse().expect("digits parse")),
                    line,
                    col,
                });
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < chars.len()
                    && (chars[i].is_ascii_alphanumeric() || chars[i] == '_' || chars[i] == '\'')
                {
                    i += 1;
                }
                tokens.push(Spanned {
                    token: Token::Ident(chars[start..i].iter().collect()),
                    line,
                    col,
                });
            }
            other => {
                return Err(CliError::parse(line, col, format!("unexpected character '{other}'")));
            }
        }
    }
    Ok(tokens)
}
