use crate::error::Span;

#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Lt,
    Gt,
    LBrace,
    RBrace,
    Question,
    /// `<:`
    SubOp,
    /// `:>`
    SuperOp,
    Eof,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("`{s}`"),
            Tok::Lt => "`<`".into(),
            Tok::Gt => "`>`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Question => "`?`".into(),
            Tok::SubOp => "`<:`".into(),
            Tok::SuperOp => "`:>`".into(),
            Tok::Eof => "end of input".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Token {
    pub tok: Tok,
    pub at: Span,
}

/// Splits `src` into tokens, always ending with [`Tok::Eof`]. `//` starts a
/// comment running to the end of the line.
pub(crate) fn lex(src: &str) -> Result<Vec<Token>, (Span, String)> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let (mut i, mut line, mut col) = (0, 1, 1);
    while i < chars.len() {
        let at = Span { line, column: col };
        let c = chars[i];
        let next = chars.get(i + 1).copied();
        let (tok, width) = match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
                continue;
            }
            c if c.is_whitespace() => {
                i += 1;
                col += 1;
                continue;
            }
            '/' if next == Some('/') => {
                while i < chars.len() && chars[i] != '\n' {
                    i += 1;
                }
                continue;
            }
            '<' if next == Some(':') => (Tok::SubOp, 2),
            ':' if next == Some('>') => (Tok::SuperOp, 2),
            '<' => (Tok::Lt, 1),
            '>' => (Tok::Gt, 1),
            '{' => (Tok::LBrace, 1),
            '}' => (Tok::RBrace, 1),
            '?' => (Tok::Question, 1),
            c if c.is_ascii_alphabetic() => {
                let start = i;
                let mut end = i;
                while end < chars.len() && (chars[end].is_ascii_alphanumeric() || chars[end] == '_')
                {
                    end += 1;
                }
                let word: String = chars[start..end].iter().collect();
                (Tok::Ident(word), end - start)
            }
            other => return Err((at, format!("unexpected character `{other}`"))),
        };
        out.push(Token { tok, at });
        i += width;
        col += width;
    }
    out.push(Token {
        tok: Tok::Eof,
        at: Span { line, column: col },
    });
    Ok(out)
}
