use std::fmt::Write;

use num_traits::Signed;

use super::{DefinitionFile, Expr, Line, SectionKind, Term};

fn prec(e: &Expr) -> u8 {
    match e {
        Expr::Add(..) | Expr::Sub(..) => 1,
        Expr::Mul(..) | Expr::Div(..) => 2,
        Expr::Neg(_) => 3,
        Expr::Num(q) if q.is_negative() => 3,
        Expr::Num(_) | Expr::Param(_) => 4,
    }
}

fn expr_at(e: &Expr, min: u8) -> String {
    let s = expr(e);
    if prec(e) < min {
        format!("({s})")
    } else {
        s
    }
}

/// Prints with the fewest parentheses that parse back to the same tree.
pub(super) fn expr(e: &Expr) -> String {
    match e {
        Expr::Num(q) => q.to_string(),
        Expr::Param(p) => p.clone(),
        Expr::Neg(a) => match a.as_ref() {
            // `--3` would fold into the literal
            Expr::Num(q) if !q.is_negative() => format!("-({q})"),
            _ => format!("-{}", expr_at(a, 3)),
        },
        Expr::Add(a, b) => format!("{} + {}", expr_at(a, 1), expr_at(b, 2)),
        Expr::Sub(a, b) => format!("{} - {}", expr_at(a, 1), expr_at(b, 2)),
        Expr::Mul(a, b) => format!("{} * {}", expr_at(a, 2), expr_at(b, 3)),
        Expr::Div(a, b) => format!("{}/{}", expr_at(a, 2), div_rhs(b)),
    }
}

fn div_rhs(b: &Expr) -> String {
    match b {
        // `2/3` would fold into one literal
        Expr::Num(q) => format!("({q})"),
        _ => expr_at(b, 3),
    }
}

/// The coefficient segments: a left-nested product is written factor by
/// factor, anything else as a single segment.
fn segments(e: &Expr, out: &mut Vec<String>) {
    match e {
        Expr::Mul(a, b) => {
            segments(a, out);
            out.push(expr_at(b, 3));
        }
        // a `*` left of a `/` would be read as a segment break
        _ if has_top_star(e) => out.push(format!("({})", expr(e))),
        _ => out.push(expr_at(e, 2)),
    }
}

fn has_top_star(e: &Expr) -> bool {
    match e {
        Expr::Mul(..) => true,
        Expr::Div(a, _) => has_top_star(a),
        _ => false,
    }
}

fn term(t: &Term, first: bool) -> String {
    let (neg, coef) = match &t.coef {
        Expr::Neg(inner) => (true, inner.as_ref()),
        c => (false, c),
    };
    let tuple: Vec<String> = t.outputs.iter().map(ToString::to_string).collect();
    let mut body = String::new();
    if !coef.is_one() {
        let mut segs = Vec::new();
        segments(coef, &mut segs);
        // a leading `-` in the first term would be read as the term's sign
        if let Some(first_seg) = segs.first_mut() {
            if (neg || first) && first_seg.starts_with('-') {
                *first_seg = format!("({first_seg})");
            }
        }
        body.push_str(&segs.join(" * "));
        body.push_str(" * ");
    }
    body.push_str(&tuple.join(" "));
    match (first, neg) {
        (true, false) => body,
        (true, true) => format!("-{body}"),
        (false, false) => format!(" + {body}"),
        (false, true) => format!(" - {body}"),
    }
}

/// Canonical text: one space around operators, a blank line between
/// sections, comments kept in place.
pub fn serialize(file: &DefinitionFile) -> String {
    let mut out = String::new();
    for c in &file.preamble {
        writeln!(out, "# {c}").unwrap();
    }
    for (i, s) in file.sections.iter().enumerate() {
        if i > 0 || !file.preamble.is_empty() {
            out.push('\n');
        }
        if s.kind == SectionKind::Params {
            writeln!(out, "[params]").unwrap();
        } else {
            writeln!(out, "[{} {}]", s.kind.keyword(), s.name).unwrap();
        }
        for l in &s.lines {
            match l {
                Line::Comment(c) => writeln!(out, "# {c}").unwrap(),
                Line::Property { key, values, .. } => {
                    let v = values.join(" ");
                    if v.is_empty() {
                        writeln!(out, "{key}:").unwrap();
                    } else {
                        writeln!(out, "{key}: {v}").unwrap();
                    }
                }
                Line::Param { name, value, .. } => writeln!(out, "{name} = {}", expr(value)).unwrap(),
                Line::Entry(e) => {
                    let inputs: Vec<String> = e.inputs.iter().map(ToString::to_string).collect();
                    let lhs = if inputs.is_empty() {
                        format!("{}: ->", e.key)
                    } else {
                        format!("{}: {} ->", e.key, inputs.join(" "))
                    };
                    let rhs = if e.terms.is_empty() {
                        "0".to_string()
                    } else if e.key == "counit" {
                        e.terms.iter().map(|t| expr(&t.coef)).collect::<Vec<_>>().join(" + ")
                    } else {
                        e.terms.iter().enumerate().map(|(k, t)| term(t, k == 0)).collect()
                    };
                    writeln!(out, "{lhs} {rhs}").unwrap();
                }
            }
        }
    }
    out
}
