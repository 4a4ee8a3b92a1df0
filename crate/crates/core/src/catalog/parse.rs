//! ASCII algebra names.
//!
//! Simple algebras: `sl(n,R)`, `sl(n,C)`, `sl(n,H)`, `so(n,C)`, `so(p,q)`,
//! `su(p,q)`, `sp(p,q)`, `sp(2n,R)`, `sp(2n,C)`, `so*(2n)`, the compact forms
//! `su(n)`, `so(n)`, `sp(n)`, and the exceptional forms `g2`, `g2(C)`,
//! `e6(-14)`, ... Symplectic and so* names carry the matrix size, as rendered.
//!
//! Reductive algebras join summands with `+`. Besides simple algebras a
//! summand may be `R`, `C`, `u(1)`, `u(p,q)`, or a small orthogonal or
//! unitary algebra that is not simple (`so(1,1)`, `so(2)`, `so(2,2)`, `su(1,1)`, ...).

use super::{CatalogError, Exceptional as Exc, ExceptionalType, Family, ReductiveAlgebra, SimpleAlgebra};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("parse error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error(transparent)]
    Domain(#[from] CatalogError),
}

fn syntax<T>(position: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError::Syntax {
        position,
        message: message.into(),
    })
}

/// A parsed simple-algebra token before domain validation.
#[derive(Debug, Clone, Copy)]
enum Raw {
    Family(Family),
    U(i64, i64),
    RealLine,
    ComplexLine,
}

struct Cursor<'a> {
    s: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.s[self.pos..]
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().unwrap().len_utf8();
        }
    }

    fn eat(&mut self, t: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(t) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, t: &str) -> Result<(), ParseError> {
        if self.eat(t) {
            Ok(())
        } else {
            syntax(self.pos, format!("expected {t:?}"))
        }
    }

    fn int(&mut self) -> Result<i64, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let r = self.rest();
        let len = r
            .char_indices()
            .take_while(|&(i, c)| c.is_ascii_digit() || (i == 0 && c == '-'))
            .count();
        match r[..len].parse::<i64>() {
            Ok(v) => {
                self.pos += len;
                Ok(v)
            }
            Err(_) => syntax(start, "expected an integer"),
        }
    }

    fn ident(&mut self) -> &'a str {
        self.skip_ws();
        let r = self.rest();
        let len = r
            .char_indices()
            .take_while(|&(_, c)| c.is_ascii_alphanumeric() || c == '*')
            .count();
        self.pos += len;
        &r[..len]
    }
}

fn even_half(v: i64, pos: usize, what: &str) -> Result<i64, ParseError> {
    if v % 2 != 0 {
        return syntax(pos, format!("{what} takes an even matrix size"));
    }
    Ok(v / 2)
}

fn parse_raw(c: &mut Cursor) -> Result<Raw, ParseError> {
    let start = {
        c.skip_ws();
        c.pos
    };
    let name = c.ident();
    let t = match name {
        "g2" => Some(ExceptionalType::G2),
        "f4" => Some(ExceptionalType::F4),
        "e6" => Some(ExceptionalType::E6),
        "e7" => Some(ExceptionalType::E7),
        "e8" => Some(ExceptionalType::E8),
        _ => None,
    };
    if let Some(t) = t {
        if !c.eat("(") {
            return Ok(Raw::Family(Family::Exceptional(Exc::Compact(t))));
        }
        if c.eat("C") {
            c.expect(")")?;
            return Ok(Raw::Family(Family::Exceptional(Exc::Complex(t))));
        }
        let at = c.pos;
        let i = c.int()?;
        c.expect(")")?;
        return match Exc::from_index(t, i) {
            Some(e) => Ok(Raw::Family(Family::Exceptional(e))),
            None => syntax(at, format!("no real form of {name} with index {i}")),
        };
    }
    match name {
        "R" => return Ok(Raw::RealLine),
        "C" => return Ok(Raw::ComplexLine),
        "sl" | "so" | "su" | "sp" | "so*" | "u" => {}
        "" => return syntax(start, "expected an algebra name"),
        _ => return syntax(start, format!("unknown algebra family {name:?}")),
    }
    c.expect("(")?;
    let at = c.pos;
    let a = c.int()?;
    let second = if c.eat(",") {
        c.skip_ws();
        let at2 = c.pos;
        if c.eat("R") {
            Some(Err('R'))
        } else if c.eat("C") {
            Some(Err('C'))
        } else if c.eat("H") {
            Some(Err('H'))
        } else {
            match c.int() {
                Ok(b) => Some(Ok(b)),
                Err(_) => return syntax(at2, "expected R, C, H or an integer"),
            }
        }
    } else {
        None
    };
    c.expect(")")?;
    use Family::*;
    let f = match (name, second) {
        ("sl", Some(Err('R'))) => SlR(a),
        ("sl", Some(Err('C'))) => SlC(a),
        ("sl", Some(Err('H'))) => SlH(a),
        ("so", Some(Err('C'))) => SoC(a),
        ("sp", Some(Err('C'))) => SpC(even_half(a, at, "sp(2n,C)")?),
        ("sp", Some(Err('R'))) => SpR(even_half(a, at, "sp(2n,R)")?),
        ("so", Some(Ok(b))) => So(a, b),
        ("su", Some(Ok(b))) => Su(a, b),
        ("sp", Some(Ok(b))) => Sp(a, b),
        ("u", Some(Ok(b))) => return Ok(Raw::U(a, b)),
        ("so", None) => SoCompact(a),
        ("su", None) => SuCompact(a),
        ("sp", None) => SpCompact(a),
        ("u", None) => return Ok(Raw::U(0, a)),
        ("so*", None) => SoStar(even_half(a, at, "so*(2n)")?),
        _ => return syntax(start, format!("bad parameters for {name}")),
    };
    Ok(Raw::Family(f))
}

/// Non-simple fallbacks for reductive summands.
fn loose(f: Family) -> Option<ReductiveAlgebra> {
    type R = ReductiveAlgebra;
    match f {
        Family::So(p, q) if p >= 0 && q >= 0 => Some(R::so(p, q)),
        Family::SoCompact(n) if n >= 0 => Some(R::so(0, n)),
        Family::SoC(n) if n >= 0 => Some(R::so_c(n)),
        Family::SoStar(n) if n >= 0 => Some(R::so_star(n)),
        Family::Su(p, q) if p >= 0 && q >= 0 => Some(R::su(p, q)),
        Family::SuCompact(n) if n >= 0 => Some(R::su(0, n)),
        Family::Sp(p, q) if p >= 0 && q >= 0 => Some(R::sp(p, q)),
        _ => None,
    }
}

fn finish<T>(c: &mut Cursor, v: T) -> Result<T, ParseError> {
    c.skip_ws();
    if c.pos != c.s.len() {
        return syntax(c.pos, "unexpected trailing input");
    }
    Ok(v)
}

/// Parses a simple algebra and returns its canonical form.
pub fn parse_simple(s: &str) -> Result<SimpleAlgebra, ParseError> {
    let mut c = Cursor { s, pos: 0 };
    let raw = parse_raw(&mut c)?;
    let a = match raw {
        Raw::Family(f) => SimpleAlgebra::new(f)?,
        _ => return syntax(0, "not a simple algebra"),
    };
    finish(&mut c, a)
}

/// Parses a `+`-joined reductive algebra.
pub fn parse_reductive(s: &str) -> Result<ReductiveAlgebra, ParseError> {
    let mut c = Cursor { s, pos: 0 };
    let mut acc = ReductiveAlgebra::trivial();
    loop {
        c.skip_ws();
        if c.eat("0") {
            // The zero algebra, as rendered for an empty sum.
        } else {
            let part = match parse_raw(&mut c)? {
                Raw::RealLine => ReductiveAlgebra::split_abelian(1),
                Raw::ComplexLine => ReductiveAlgebra::complex_abelian(1),
                Raw::U(p, q) if p >= 0 && q >= 0 => ReductiveAlgebra::u(p, q),
                Raw::U(..) => return syntax(c.pos, "u(p,q) needs non-negative parameters"),
                Raw::Family(f) => match SimpleAlgebra::new(f) {
                    Ok(a) => a.into(),
                    Err(e) => loose(f).ok_or(ParseError::Domain(e))?,
                },
            };
            acc = acc.plus(&part);
        }
        if c.eat("+") || c.eat("⊕") {
            continue;
        }
        return finish(&mut c, acc);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names() {
        assert_eq!(parse_simple("sl(3,R)").unwrap().render(), "sl(3,R)");
        assert_eq!(parse_simple("e6(-14)").unwrap().render(), "e6(-14)");
        assert_eq!(parse_simple("so*(10)").unwrap().family(), Family::SoStar(5));
        assert_eq!(parse_simple("so(3,3)").unwrap().render(), "sl(4,R)");
        assert!(matches!(parse_simple("so(4,C)"), Err(ParseError::Domain(_))));
        assert!(matches!(
            parse_simple("sp(3,R)"),
            Err(ParseError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_simple("xx(3)"),
            Err(ParseError::Syntax { position: 0, .. })
        ));
        assert!(matches!(
            parse_simple("sl(3,R) x"),
            Err(ParseError::Syntax { position: 8, .. })
        ));
    }

    #[test]
    fn reductive_names() {
        let h = parse_reductive("so(5,5)+so(1,1)").unwrap();
        assert_eq!(h.render(), "so(5,5)+R");
        assert_eq!(parse_reductive("sl(5,R)+R").unwrap().dims().dim_s, 15);
        assert_eq!(parse_reductive("so(2)").unwrap(), ReductiveAlgebra::compact_abelian(1));
        assert_eq!(parse_reductive("0").unwrap(), ReductiveAlgebra::trivial());
        assert_eq!(parse_reductive("C").unwrap().dims().dim_g, 2);
    }
}
