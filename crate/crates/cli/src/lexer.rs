use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    /// `3`, `2.48`, `7.`
    Number,
    /// `7/9`: two integers joined by a slash with no space.
    Rational,
    /// `0.(7)`, `1.2(34)`
    Repeating,
    Plus,
    Minus,
    Star,
    Slash,
    LParen,
    RParen,
    Sqrt,
    End,
}

impl TokenKind {
    pub fn describe(self) -> &'static str {
        match self {
            TokenKind::Number => "number",
            TokenKind::Rational => "rational",
            TokenKind::Repeating => "repeating decimal",
            TokenKind::Plus => "'+'",
            TokenKind::Minus => "'-'",
            TokenKind::Star => "'*'",
            TokenKind::Slash => "'/'",
            TokenKind::LParen => "'('",
            TokenKind::RParen => "')'",
            TokenKind::Sqrt => "'sqrt'",
            TokenKind::End => "end of input",
        }
    }

    pub fn is_literal(self) -> bool {
        matches!(self, TokenKind::Number | TokenKind::Rational | TokenKind::Repeating)
    }
}

/// A lexeme and the character offset where it starts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    pub lexeme: String,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexError {
    pub offset: usize,
    pub found: String,
}

impl fmt::Display for LexError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unexpected {:?} at offset {}", self.found, self.offset)
    }
}

impl std::error::Error for LexError {}

/// Split `input` into tokens, ending with a single [`TokenKind::End`].
///
/// Offsets count characters, not bytes. `-` and the minus sign `−` are the
/// same token.
pub fn tokenize(input: &str) -> Result<Vec<Token>, LexError> {
    let chars: Vec<char> = input.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        let single = match c {
            '+' => Some(TokenKind::Plus),
            '-' | '\u{2212}' => Some(TokenKind::Minus),
            '*' => Some(TokenKind::Star),
            '/' => Some(TokenKind::Slash),
            '(' => Some(TokenKind::LParen),
            ')' => Some(TokenKind::RParen),
            _ => None,
        };
        if let Some(kind) = single {
            tokens.push(Token {
                kind,
                lexeme: c.to_string(),
                position: start,
            });
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let (kind, end) = number(&chars, i);
            tokens.push(Token {
                kind,
                lexeme: chars[start..end].iter().collect(),
                position: start,
            });
            i = end;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let end = run(&chars, i, |c| c.is_ascii_alphanumeric());
            let word: String = chars[start..end].iter().collect();
            if word != "sqrt" {
                return Err(LexError {
                    offset: start,
                    found: word,
                });
            }
            tokens.push(Token {
                kind: TokenKind::Sqrt,
                lexeme: word,
                position: start,
            });
            i = end;
            continue;
        }
        return Err(LexError {
            offset: start,
            found: c.to_string(),
        });
    }
    tokens.push(Token {
        kind: TokenKind::End,
        lexeme: String::new(),
        position: chars.len(),
    });
    Ok(tokens)
}

fn run(chars: &[char], from: usize, pred: impl Fn(char) -> bool) -> usize {
    let mut i = from;
    while i < chars.len() && pred(chars[i]) {
        i += 1;
    }
    i
}

fn digits_at(chars: &[char], from: usize) -> usize {
    run(chars, from, |c| c.is_ascii_digit())
}

/// Longest literal starting at `from`, which holds a digit.
fn number(chars: &[char], from: usize) -> (TokenKind, usize) {
    let int_end = digits_at(chars, from);
    let at = |i: usize| chars.get(i).copied();

    if at(int_end) == Some('/') && at(int_end + 1).is_some_and(|c| c.is_ascii_digit()) {
        return (TokenKind::Rational, digits_at(chars, int_end + 1));
    }
    if at(int_end) != Some('.') {
        return (TokenKind::Number, int_end);
    }
    let frac_end = digits_at(chars, int_end + 1);
    if at(frac_end) == Some('(') {
        let period_end = digits_at(chars, frac_end + 1);
        if period_end > frac_end + 1 && at(period_end) == Some(')') {
            return (TokenKind::Repeating, period_end + 1);
        }
    }
    (TokenKind::Number, frac_end)
}
