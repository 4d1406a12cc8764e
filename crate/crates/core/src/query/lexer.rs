use crate::error::SyntaxError;

pub(crate) const KEYWORDS: &[&str] = &[
    "NOT", "PROJECT", "SELECT", "SPLIT", "COMBINE", "UNION", "INTERSECT", "MINUS", "JOIN", "AND",
    "OR",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Tok {
    Ident(String),
    Keyword(&'static str),
    Literal(String),
    Sym(char),
    End,
}

impl Tok {
    pub(crate) fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Keyword(k) => k.to_string(),
            Tok::Literal(s) => format!("literal '{s}'"),
            Tok::Sym(c) => format!("`{c}`"),
            Tok::End => "end of input".to_string(),
        }
    }
}

#[derive(Debug, Clone)]
pub(crate) struct Spanned {
    pub tok: Tok,
    pub line: usize,
    pub column: usize,
}

pub(crate) fn is_ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

pub(crate) fn is_ident_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '-'
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Spanned>, SyntaxError> {
    let mut out = Vec::new();
    let mut chars = text.chars().peekable();
    let (mut line, mut column) = (1usize, 1usize);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                column = 1;
            } else if c.is_some() {
                column += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let (l, col) = (line, column);
        let tok = if c.is_whitespace() {
            bump!();
            continue;
        } else if is_ident_start(c) {
            let mut word = String::new();
            while let Some(&c) = chars.peek() {
                if !is_ident_char(c) {
                    break;
                }
                word.push(c);
                bump!();
            }
            match KEYWORDS.iter().find(|k| **k == word) {
                Some(k) => Tok::Keyword(k),
                None => Tok::Ident(word),
            }
        } else if c == '\'' {
            bump!();
            let mut lit = String::new();
            loop {
                match bump!() {
                    Some('\'') if chars.peek() == Some(&'\'') => {
                        bump!();
                        lit.push('\'');
                    }
                    Some('\'') => break,
                    Some(c) => lit.push(c),
                    None => {
                        return Err(SyntaxError {
                            line: l,
                            column: col,
                            found: "unterminated literal".into(),
                            expected: vec!["`'`".into()],
                        })
                    }
                }
            }
            Tok::Literal(lit)
        } else if "()[],=".contains(c) {
            bump!();
            Tok::Sym(c)
        } else {
            return Err(SyntaxError {
                line: l,
                column: col,
                found: format!("`{c}`"),
                expected: vec!["identifier".into(), "keyword".into(), "`(`".into()],
            });
        };
        out.push(Spanned {
            tok,
            line: l,
            column: col,
        });
    }
    out.push(Spanned {
        tok: Tok::End,
        line,
        column,
    });
    Ok(out)
}
