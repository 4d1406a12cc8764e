//! Textual query language: parsing, formatting, scheme inference and
//! evaluation against a catalog of named relations.
//!
//! ```text
//! expr    := union
//! union   := inter ("UNION" inter)*
//! inter   := joinE (("INTERSECT" | "MINUS") joinE)*
//! joinE   := unary ("JOIN" unary)*
//! unary   := "NOT" unary
//!          | "PROJECT" "[" ident ("," ident)* "]" "(" expr ")"
//!          | "SELECT" "[" formula "]" "(" expr ")"
//!          | "SPLIT" "(" expr ")" | "COMBINE" "(" expr ")"
//!          | ident | "(" expr ")"
//! formula := conj ("OR" conj)*
//! conj    := atomF ("AND" atomF)*
//! atomF   := "NOT" atomF | ident "=" (ident | "'" literal "'") | "(" formula ")"
//! ```

mod ast;
mod eval;
mod format;
mod lexer;
mod parser;

pub use ast::QueryExpr;
pub use eval::{evaluate, infer_scheme, Catalog, Mode};
pub use format::{format, format_formula};
pub use parser::{parse, parse_formula};

/// Reserved words; they cannot name relations or attributes in query text.
pub const KEYWORDS: &[&str] = lexer::KEYWORDS;

/// Whether `name` can appear as a relation or attribute name in query text.
pub fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    chars.next().is_some_and(lexer::is_ident_start)
        && chars.all(lexer::is_ident_char)
        && !KEYWORDS.contains(&name)
}
