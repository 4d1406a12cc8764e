use std::fmt::Write;

use super::ast::QueryExpr;
use crate::algebra::SelectionFormula;

fn level(e: &QueryExpr) -> u8 {
    match e {
        QueryExpr::Union(..) => 1,
        QueryExpr::Intersect(..) | QueryExpr::Minus(..) => 2,
        QueryExpr::Join(..) => 3,
        _ => 4,
    }
}

fn write_expr(out: &mut String, e: &QueryExpr, min_level: u8) {
    let wrap = level(e) < min_level;
    if wrap {
        out.push('(');
    }
    let binary = |out: &mut String, l: &QueryExpr, op: &str, r: &QueryExpr| {
        let lv = level(e);
        write_expr(out, l, lv);
        let _ = write!(out, " {op} ");
        write_expr(out, r, lv + 1);
    };
    match e {
        QueryExpr::Relation(n) => out.push_str(n),
        QueryExpr::Union(l, r) => binary(out, l, "UNION", r),
        QueryExpr::Intersect(l, r) => binary(out, l, "INTERSECT", r),
        QueryExpr::Minus(l, r) => binary(out, l, "MINUS", r),
        QueryExpr::Join(l, r) => binary(out, l, "JOIN", r),
        QueryExpr::Complement(inner) => {
            out.push_str("NOT ");
            write_expr(out, inner, 4);
        }
        QueryExpr::Project(attrs, inner) => {
            let _ = write!(out, "PROJECT[{}](", attrs.join(","));
            write_expr(out, inner, 0);
            out.push(')');
        }
        QueryExpr::Select(f, inner) => {
            out.push_str("SELECT[");
            write_formula(out, f, 0);
            out.push_str("](");
            write_expr(out, inner, 0);
            out.push(')');
        }
        QueryExpr::Split(inner) => {
            out.push_str("SPLIT(");
            write_expr(out, inner, 0);
            out.push(')');
        }
        QueryExpr::Combine(inner) => {
            out.push_str("COMBINE(");
            write_expr(out, inner, 0);
            out.push(')');
        }
    }
    if wrap {
        out.push(')');
    }
}

fn formula_level(f: &SelectionFormula) -> u8 {
    match f {
        SelectionFormula::Or(..) => 1,
        SelectionFormula::And(..) => 2,
        _ => 3,
    }
}

fn write_formula(out: &mut String, f: &SelectionFormula, min_level: u8) {
    let wrap = formula_level(f) < min_level;
    if wrap {
        out.push('(');
    }
    match f {
        SelectionFormula::AttrEqConst { attr, literal } => {
            let _ = write!(out, "{attr} = '{}'", literal.replace('\'', "''"));
        }
        SelectionFormula::AttrEqAttr(a, b) => {
            let _ = write!(out, "{a} = {b}");
        }
        SelectionFormula::Not(inner) => {
            out.push_str("NOT ");
            write_formula(out, inner, 3);
        }
        SelectionFormula::And(l, r) => {
            write_formula(out, l, 2);
            out.push_str(" AND ");
            write_formula(out, r, 3);
        }
        SelectionFormula::Or(l, r) => {
            write_formula(out, l, 1);
            out.push_str(" OR ");
            write_formula(out, r, 2);
        }
    }
    if wrap {
        out.push(')');
    }
}

/// Canonical query text with the fewest parentheses that parse back to `e`.
pub fn format(e: &QueryExpr) -> String {
    let mut out = String::new();
    write_expr(&mut out, e, 0);
    out
}

/// Canonical selection formula text.
pub fn format_formula(f: &SelectionFormula) -> String {
    let mut out = String::new();
    write_formula(&mut out, f, 0);
    out
}
