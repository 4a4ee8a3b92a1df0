//! Parameter declarations and conditions attached to isotropy entries.
//!
//! Declarations are `;`-separated, each either a range `k in 1..=n/2` or a
//! definition `l = n-k`. Conditions are `;`-separated comparisons
//! (`p == q`, `kp+kq >= 1`) or parity tests (`n even`, `p odd`). Expressions
//! are integer arithmetic over `+ - * / %` and parentheses; `/` is floor division.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("constraint {text:?}: {message}")]
pub struct ConstraintError {
    pub text: String,
    pub message: String,
}

fn err<T>(text: &str, message: impl Into<String>) -> Result<T, ConstraintError> {
    Err(ConstraintError {
        text: text.to_string(),
        message: message.into(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Int(i64),
    Var(String),
    Bin(Box<Expr>, char, Box<Expr>),
    Neg(Box<Expr>),
}

/// Variable bindings, in declaration order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Env {
    vars: Vec<(String, i64)>,
}

impl Env {
    pub fn new(vars: Vec<(String, i64)>) -> Self {
        Self { vars }
    }

    pub fn get(&self, name: &str) -> Option<i64> {
        self.vars.iter().rev().find(|(n, _)| n == name).map(|(_, v)| *v)
    }

    /// Value of a declared variable; entry builders only ask for names
    /// their declarations bind.
    pub fn v(&self, name: &str) -> i64 {
        self.get(name).unwrap_or_else(|| panic!("unbound variable {name}"))
    }

    pub fn bindings(&self) -> &[(String, i64)] {
        &self.vars
    }

    fn push(&mut self, name: &str, v: i64) {
        self.vars.push((name.to_string(), v));
    }

    fn pop(&mut self) {
        self.vars.pop();
    }
}

impl Expr {
    pub fn eval(&self, env: &Env) -> Option<i64> {
        Some(match self {
            Expr::Int(v) => *v,
            Expr::Var(n) => env.get(n)?,
            Expr::Neg(e) => -e.eval(env)?,
            Expr::Bin(a, op, b) => {
                let (a, b) = (a.eval(env)?, b.eval(env)?);
                match op {
                    '+' => a.checked_add(b)?,
                    '-' => a.checked_sub(b)?,
                    '*' => a.checked_mul(b)?,
                    '/' => a.checked_div_euclid(b)?,
                    _ => a.checked_rem_euclid(b)?,
                }
            }
        })
    }

    fn vars<'a>(&'a self, out: &mut Vec<&'a str>) {
        match self {
            Expr::Int(_) => {}
            Expr::Var(n) => out.push(n),
            Expr::Neg(e) => e.vars(out),
            Expr::Bin(a, _, b) => {
                a.vars(out);
                b.vars(out);
            }
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Int(v) => write!(f, "{v}"),
            Expr::Var(n) => f.write_str(n),
            Expr::Neg(e) => write!(f, "-({e})"),
            Expr::Bin(a, op, b) => write!(f, "({a}{op}{b})"),
        }
    }
}

struct Lexer<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(text: &'a str) -> Self {
        Self {
            text,
            chars: text.chars().collect(),
            pos: 0,
        }
    }

    fn peek(&mut self) -> Option<char> {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
        self.chars.get(self.pos).copied()
    }

    fn word(&mut self) -> String {
        self.peek();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn eat(&mut self, t: &str) -> bool {
        self.peek();
        let t: Vec<char> = t.chars().collect();
        if self.chars[self.pos..].starts_with(&t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn expr(&mut self) -> Result<Expr, ConstraintError> {
        let mut lhs = self.term()?;
        while let Some(op @ ('+' | '-')) = self.peek() {
            self.pos += 1;
            lhs = Expr::Bin(Box::new(lhs), op, Box::new(self.term()?));
        }
        Ok(lhs)
    }

    fn term(&mut self) -> Result<Expr, ConstraintError> {
        let mut lhs = self.atom()?;
        while let Some(op @ ('*' | '/' | '%')) = self.peek() {
            self.pos += 1;
            lhs = Expr::Bin(Box::new(lhs), op, Box::new(self.atom()?));
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Expr, ConstraintError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(")") {
                    return err(self.text, "missing ')'");
                }
                Ok(e)
            }
            Some('-') => {
                self.pos += 1;
                Ok(Expr::Neg(Box::new(self.atom()?)))
            }
            Some(c) if c.is_ascii_digit() => {
                let w = self.word();
                match w.parse() {
                    Ok(v) => Ok(Expr::Int(v)),
                    Err(_) => err(self.text, format!("bad integer {w:?}")),
                }
            }
            Some(c) if c.is_alphabetic() => Ok(Expr::Var(self.word())),
            _ => err(self.text, "expected an expression"),
        }
    }
}

/// One parameter declaration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Decl {
    Range { name: String, lo: Expr, hi: Expr },
    Define { name: String, value: Expr },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cmp {
    Le,
    Lt,
    Ge,
    Gt,
    Eq,
    Ne,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cond {
    Compare(Expr, Cmp, Expr),
    Parity(Expr, bool),
}

impl Cond {
    pub fn holds(&self, env: &Env) -> Option<bool> {
        Some(match self {
            Cond::Parity(e, even) => (e.eval(env)?.rem_euclid(2) == 0) == *even,
            Cond::Compare(a, c, b) => {
                let (a, b) = (a.eval(env)?, b.eval(env)?);
                match c {
                    Cmp::Le => a <= b,
                    Cmp::Lt => a < b,
                    Cmp::Ge => a >= b,
                    Cmp::Gt => a > b,
                    Cmp::Eq => a == b,
                    Cmp::Ne => a != b,
                }
            }
        })
    }
}

fn pieces(text: &str) -> impl Iterator<Item = &str> {
    text.split(';').map(str::trim).filter(|s| !s.is_empty())
}

pub fn parse_decls(text: &str) -> Result<Vec<Decl>, ConstraintError> {
    pieces(text)
        .map(|piece| {
            let mut lx = Lexer::new(piece);
            let name = lx.word();
            if name.is_empty() {
                return err(piece, "expected a variable name");
            }
            let decl = if lx.eat("=") {
                Decl::Define {
                    name,
                    value: lx.expr()?,
                }
            } else if lx.word() == "in" {
                let lo = lx.expr()?;
                if !lx.eat("..=") {
                    return err(piece, "expected '..='");
                }
                Decl::Range {
                    name,
                    lo,
                    hi: lx.expr()?,
                }
            } else {
                return err(piece, "expected '=' or 'in'");
            };
            if !lx.at_end() {
                return err(piece, "trailing input");
            }
            Ok(decl)
        })
        .collect()
}

pub fn parse_conds(text: &str) -> Result<Vec<Cond>, ConstraintError> {
    pieces(text)
        .map(|piece| {
            let mut lx = Lexer::new(piece);
            let lhs = lx.expr()?;
            let ops = [
                ("<=", Cmp::Le),
                (">=", Cmp::Ge),
                ("==", Cmp::Eq),
                ("!=", Cmp::Ne),
                ("<", Cmp::Lt),
                (">", Cmp::Gt),
            ];
            let cond = if let Some(&(_, c)) = ops.iter().find(|(t, _)| lx.eat(t)) {
                Cond::Compare(lhs, c, lx.expr()?)
            } else {
                match lx.word().as_str() {
                    "even" => Cond::Parity(lhs, true),
                    "odd" => Cond::Parity(lhs, false),
                    _ => return err(piece, "expected a comparison or 'even'/'odd'"),
                }
            };
            if !lx.at_end() {
                return err(piece, "trailing input");
            }
            Ok(cond)
        })
        .collect()
}

/// Checks that every variable is bound before use, given the names the
/// ambient family provides.
pub fn check_scope(decls: &[Decl], conds: &[Cond], ambient: &[&str]) -> Result<(), String> {
    let mut bound: Vec<&str> = ambient.to_vec();
    let mut used = Vec::new();
    for d in decls {
        let name = match d {
            Decl::Range { name, lo, hi } => {
                lo.vars(&mut used);
                hi.vars(&mut used);
                name
            }
            Decl::Define { name, value } => {
                value.vars(&mut used);
                name
            }
        };
        if let Some(u) = used.iter().find(|u| !bound.contains(u)) {
            return Err(format!("{u} used before it is declared"));
        }
        used.clear();
        bound.push(name);
    }
    for c in conds {
        match c {
            Cond::Compare(a, _, b) => {
                a.vars(&mut used);
                b.vars(&mut used);
            }
            Cond::Parity(e, _) => e.vars(&mut used),
        }
    }
    match used.iter().find(|u| !bound.contains(u)) {
        Some(u) => Err(format!("condition uses undeclared {u}")),
        None => Ok(()),
    }
}

/// Calls `f` on every binding of the declarations that satisfies the conditions.
pub fn enumerate(decls: &[Decl], conds: &[Cond], env: &mut Env, f: &mut dyn FnMut(&Env)) {
    let Some((first, rest)) = decls.split_first() else {
        if conds.iter().all(|c| c.holds(env) == Some(true)) {
            f(env);
        }
        return;
    };
    match first {
        Decl::Define { name, value } => {
            if let Some(v) = value.eval(env) {
                env.push(name, v);
                enumerate(rest, conds, env, f);
                env.pop();
            }
        }
        Decl::Range { name, lo, hi } => {
            let (Some(lo), Some(hi)) = (lo.eval(env), hi.eval(env)) else {
                return;
            };
            for v in lo..=hi {
                env.push(name, v);
                enumerate(rest, conds, env, f);
                env.pop();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_of_n() {
        let decls = parse_decls("k in 1..=n/2; l = n-k").unwrap();
        let conds = parse_conds("k < l; n odd").unwrap();
        let mut seen = Vec::new();
        let mut env = Env::new(vec![("n".into(), 7)]);
        enumerate(&decls, &conds, &mut env, &mut |e| seen.push((e.v("k"), e.v("l"))));
        assert_eq!(seen, vec![(1, 6), (2, 5), (3, 4)]);
        let mut env = Env::new(vec![("n".into(), 6)]);
        enumerate(&decls, &conds, &mut env, &mut |_| panic!("n even must be rejected"));
    }

    #[test]
    fn grammar_errors() {
        assert!(parse_decls("k in 1..n").is_err());
        assert!(parse_conds("n").is_err());
        assert!(parse_conds("(n+1").is_err());
        let decls = parse_decls("l = n-k").unwrap();
        assert!(check_scope(&decls, &[], &["n"]).is_err());
        assert!(check_scope(&decls, &[], &["n", "k"]).is_ok());
    }

    #[test]
    fn arithmetic() {
        let env = Env::new(vec![("n".into(), 9)]);
        let c = parse_conds("n/2*2 + n%2 == n; -n < 0; (n-1)/4 == 2").unwrap();
        assert!(c.iter().all(|c| c.holds(&env) == Some(true)));
    }
}
