//! System files.
//!
//! ```text
//! # comment to end of line
//! vars y > x > b > a;
//! eq: x^3-3*x*y^2+a*x+b, 3*x^2-y^2+a;
//! gt: 1-x*y;
//! ne: y;
//! ```
//!
//! The `vars` statement comes first and lists every variable, greatest
//! first. The blocks `eq:` (`= 0`), `ge:` (`>= 0`), `gt:` (`> 0`) and `ne:`
//! (`!= 0`) hold comma separated polynomials, may repeat and may be empty.

use std::fmt;

use realtri::{Polynomial, SemiAlgebraicSystem, VarOrder};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.msg)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_system(text: &str) -> Result<SemiAlgebraicSystem, ParseError> {
    // drop comments, remembering where each character came from
    let mut clean = String::with_capacity(text.len());
    let mut lines = Vec::with_capacity(text.len());
    for (n, line) in text.lines().enumerate() {
        let code = line.split('#').next().unwrap_or("");
        clean.push_str(code);
        clean.push('\n');
        lines.extend(std::iter::repeat_n(n + 1, code.len() + 1));
    }
    let mut order: Option<VarOrder> = None;
    let mut blocks: [Vec<Polynomial>; 4] = Default::default();
    let mut offset = 0;
    let statements: Vec<&str> = clean.split(';').collect();
    let last = statements.len() - 1;
    for (i, stmt) in statements.into_iter().enumerate() {
        let lead = stmt.len() - stmt.trim_start().len();
        let line = lines.get(offset + lead).copied().unwrap_or_else(|| lines.last().copied().unwrap_or(1));
        offset += stmt.len() + 1;
        let body = stmt.trim();
        if body.is_empty() {
            continue;
        }
        if i == last {
            return Err(ParseError { line, msg: "missing ';' after the last statement".into() });
        }
        let err = |msg: String| ParseError { line, msg };
        if let Some(rest) = keyword(body, "vars") {
            if order.is_some() {
                return Err(err("variables declared twice".into()));
            }
            let names: Vec<&str> = rest.split('>').map(str::trim).collect();
            if let Some(bad) = names.iter().find(|n| !is_ident(n)) {
                return Err(err(format!("bad variable name '{bad}'")));
            }
            order = Some(VarOrder::from_greatest_first(names.iter().copied()).map_err(|e| err(e.to_string()))?);
            continue;
        }
        let Some((label, rest)) = body.split_once(':') else {
            return Err(err(format!("expected 'vars' or a block label, found '{body}'")));
        };
        let k = match label.trim() {
            "eq" => 0,
            "ge" => 1,
            "gt" => 2,
            "ne" => 3,
            other => return Err(err(format!("unknown block '{other}'"))),
        };
        let Some(o) = &order else {
            return Err(err("blocks must follow the 'vars' declaration".into()));
        };
        let rest = rest.trim();
        if rest.is_empty() {
            continue;
        }
        for item in rest.split(',') {
            let item = item.trim();
            if item.is_empty() {
                return Err(err("empty polynomial in block".into()));
            }
            let p = o.parse(item).map_err(|e| err(format!("'{item}': {e}")))?;
            blocks[k].push(p);
        }
    }
    let Some(order) = order else {
        return Err(ParseError { line: 1, msg: "missing 'vars' declaration".into() });
    };
    let [f, n, p, h] = blocks;
    SemiAlgebraicSystem::new(order, f, n, p, h).map_err(|e| ParseError { line: 1, msg: e.to_string() })
}

fn keyword<'a>(s: &'a str, kw: &str) -> Option<&'a str> {
    let rest = s.strip_prefix(kw)?;
    rest.starts_with(|c: char| c.is_whitespace()).then_some(rest)
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Writes `s` in the system file syntax; [`parse_system`] reads it back.
pub fn format_system(s: &SemiAlgebraicSystem) -> String {
    let mut out = format!("vars {};\n", s.order.names().iter().rev().cloned().collect::<Vec<_>>().join(" > "));
    for (label, list) in [("eq", &s.f), ("ge", &s.n), ("gt", &s.p), ("ne", &s.h)] {
        if list.is_empty() {
            continue;
        }
        let items: Vec<String> = list.iter().map(|q| q.to_string_with(&s.order)).collect();
        out.push_str(&format!("{label}: {};\n", items.join(", ")));
    }
    out
}
