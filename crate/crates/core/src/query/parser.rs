use super::ast::QueryExpr;
use super::lexer::{tokenize, Spanned, Tok};
use crate::algebra::SelectionFormula;
use crate::error::{Result, SyntaxError};

const UNARY_START: &[&str] = &[
    "NOT", "PROJECT", "SELECT", "SPLIT", "COMBINE", "identifier", "`(`",
];
const BINARY_OPS: &[&str] = &["UNION", "INTERSECT", "MINUS", "JOIN"];

struct Parser {
    toks: Vec<Spanned>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn advance(&mut self) -> Tok {
        let t = self.toks[self.pos].tok.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error<S: AsRef<str>>(&self, expected: &[S]) -> SyntaxError {
        let at = &self.toks[self.pos];
        SyntaxError {
            line: at.line,
            column: at.column,
            found: at.tok.describe(),
            expected: expected.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    fn eat_keyword(&mut self, kw: &str) -> bool {
        if matches!(self.peek(), Tok::Keyword(k) if *k == kw) {
            self.advance();
            true
        } else {
            false
        }
    }

    fn expect_sym(&mut self, c: char) -> Result<(), SyntaxError> {
        if *self.peek() == Tok::Sym(c) {
            self.advance();
            Ok(())
        } else {
            Err(self.error(&[format!("`{c}`")]))
        }
    }

    fn expect_ident(&mut self) -> Result<String, SyntaxError> {
        match self.peek() {
            Tok::Ident(_) => match self.advance() {
                Tok::Ident(s) => Ok(s),
                _ => unreachable!(),
            },
            _ => Err(self.error(&["identifier"])),
        }
    }

    fn expr(&mut self) -> Result<QueryExpr, SyntaxError> {
        let mut left = self.inter()?;
        while self.eat_keyword("UNION") {
            left = QueryExpr::union(left, self.inter()?);
        }
        Ok(left)
    }

    fn inter(&mut self) -> Result<QueryExpr, SyntaxError> {
        let mut left = self.join()?;
        loop {
            if self.eat_keyword("INTERSECT") {
                left = QueryExpr::intersect(left, self.join()?);
            } else if self.eat_keyword("MINUS") {
                left = QueryExpr::minus(left, self.join()?);
            } else {
                return Ok(left);
            }
        }
    }

    fn join(&mut self) -> Result<QueryExpr, SyntaxError> {
        let mut left = self.unary()?;
        while self.eat_keyword("JOIN") {
            left = QueryExpr::join(left, self.unary()?);
        }
        Ok(left)
    }

    fn parenthesized(&mut self) -> Result<QueryExpr, SyntaxError> {
        self.expect_sym('(')?;
        let e = self.expr()?;
        if *self.peek() != Tok::Sym(')') {
            let mut expected: Vec<&str> = BINARY_OPS.to_vec();
            expected.push("`)`");
            return Err(self.error(&expected));
        }
        self.advance();
        Ok(e)
    }

    fn unary(&mut self) -> Result<QueryExpr, SyntaxError> {
        match self.peek().clone() {
            Tok::Keyword("NOT") => {
                self.advance();
                Ok(QueryExpr::complement(self.unary()?))
            }
            Tok::Keyword("PROJECT") => {
                self.advance();
                self.expect_sym('[')?;
                let mut attrs = vec![self.expect_ident()?];
                loop {
                    match self.peek() {
                        Tok::Sym(',') => {
                            self.advance();
                            let at = self.pos;
                            let a = self.expect_ident()?;
                            if attrs.contains(&a) {
                                self.pos = at;
                                return Err(self.error(&["distinct attribute name"]));
                            }
                            attrs.push(a);
                        }
                        Tok::Sym(']') => break,
                        _ => return Err(self.error(&["`,`", "`]`"])),
                    }
                }
                self.advance();
                Ok(QueryExpr::project(attrs, self.parenthesized()?))
            }
            Tok::Keyword("SELECT") => {
                self.advance();
                self.expect_sym('[')?;
                let f = self.formula()?;
                if *self.peek() != Tok::Sym(']') {
                    return Err(self.error(&["AND", "OR", "`]`"]));
                }
                self.advance();
                Ok(QueryExpr::select(f, self.parenthesized()?))
            }
            Tok::Keyword("SPLIT") => {
                self.advance();
                Ok(QueryExpr::split(self.parenthesized()?))
            }
            Tok::Keyword("COMBINE") => {
                self.advance();
                Ok(QueryExpr::combine(self.parenthesized()?))
            }
            Tok::Ident(name) => {
                self.advance();
                Ok(QueryExpr::Relation(name))
            }
            Tok::Sym('(') => self.parenthesized(),
            _ => Err(self.error(UNARY_START)),
        }
    }

    fn formula(&mut self) -> Result<SelectionFormula, SyntaxError> {
        let mut left = self.conj()?;
        while self.eat_keyword("OR") {
            left = SelectionFormula::or(left, self.conj()?);
        }
        Ok(left)
    }

    fn conj(&mut self) -> Result<SelectionFormula, SyntaxError> {
        let mut left = self.atom()?;
        while self.eat_keyword("AND") {
            left = SelectionFormula::and(left, self.atom()?);
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<SelectionFormula, SyntaxError> {
        match self.peek().clone() {
            Tok::Keyword("NOT") => {
                self.advance();
                Ok(SelectionFormula::not(self.atom()?))
            }
            Tok::Sym('(') => {
                self.advance();
                let f = self.formula()?;
                if *self.peek() != Tok::Sym(')') {
                    return Err(self.error(&["AND", "OR", "`)`"]));
                }
                self.advance();
                Ok(f)
            }
            Tok::Ident(attr) => {
                self.advance();
                self.expect_sym('=')?;
                match self.advance() {
                    Tok::Ident(other) => Ok(SelectionFormula::eq_attr(attr, other)),
                    Tok::Literal(lit) => Ok(SelectionFormula::eq_const(attr, lit)),
                    _ => {
                        self.pos -= 1;
                        Err(self.error(&["identifier", "literal"]))
                    }
                }
            }
            _ => Err(self.error(&["NOT", "identifier", "`(`"])),
        }
    }
}

/// Parses a query expression.
pub fn parse(text: &str) -> Result<QueryExpr> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let e = p.expr()?;
    if *p.peek() != Tok::End {
        let mut expected: Vec<&str> = BINARY_OPS.to_vec();
        expected.push("end of input");
        return Err(p.error(&expected).into());
    }
    Ok(e)
}

/// Parses a standalone selection formula.
pub fn parse_formula(text: &str) -> Result<SelectionFormula> {
    let mut p = Parser {
        toks: tokenize(text)?,
        pos: 0,
    };
    let f = p.formula()?;
    if *p.peek() != Tok::End {
        return Err(p.error(&["AND", "OR", "end of input"]).into());
    }
    Ok(f)
}
