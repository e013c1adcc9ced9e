//! Recursive-descent parser for algebra expressions.
//!
//! ```text
//! ring := "Z" INT | ring "x" ring | ring "[X]/(X^" INT ")" | "(" ring ")"
//! alg  := "Id(" ring ")" | "L" INT | "ord(" alg "," alg ")"
//!       | "prod(" alg {"," alg} ")" | "load(" QUOTED ")" | "(" alg ")"
//! ```
//!
//! Whitespace is ignored between tokens. The polynomial suffix binds to the
//! ring just before it; `Z2 x Z3[X]/(X^2)` is `Z2 x (Z3[X]/(X^2))`.

use std::fmt;

use thiserror::Error;

use crate::ring::RingExpr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AlgebraExpr {
    IdOf(RingExpr),
    Luk(usize),
    Ord(Box<AlgebraExpr>, Box<AlgebraExpr>),
    ProductAlg(Vec<AlgebraExpr>),
    Load(String),
}

impl fmt::Display for AlgebraExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlgebraExpr::IdOf(r) => write!(f, "Id({r})"),
            AlgebraExpr::Luk(k) => write!(f, "L{k}"),
            AlgebraExpr::Ord(a, b) => write!(f, "ord({a}, {b})"),
            AlgebraExpr::ProductAlg(parts) => {
                f.write_str("prod(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            AlgebraExpr::Load(path) => write!(f, "load({path:?})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at offset {position}: expected {}, found {found}", expected.join(" or "))]
pub struct ParseError {
    pub position: usize,
    pub expected: Vec<String>,
    pub found: String,
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn skip_ws(&mut self) {
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn error<T>(&mut self, expected: &[&str]) -> Result<T, ParseError> {
        self.skip_ws();
        let found = match self.src[self.pos..].chars().next() {
            Some(c) => format!("{c:?}"),
            None => "end of input".to_string(),
        };
        Err(ParseError {
            position: self.pos,
            expected: expected.iter().map(|s| s.to_string()).collect(),
            found,
        })
    }

    /// Consumes `word` if the input continues with it.
    fn eat(&mut self, word: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(word) {
            self.pos += word.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, word: &str) -> Result<(), ParseError> {
        if self.eat(word) {
            Ok(())
        } else {
            self.error(&[&format!("{word:?}")])
        }
    }

    /// An integer `>= 2`, allowed to follow its prefix without a space.
    fn int(&mut self) -> Result<usize, ParseError> {
        self.skip_ws();
        let start = self.pos;
        let digits = self.src[start..]
            .chars()
            .take_while(char::is_ascii_digit)
            .count();
        if digits == 0 {
            return self.error(&["integer"]);
        }
        let text = &self.src[start..start + digits];
        match text.parse::<usize>() {
            Ok(v) if v >= 2 => {
                self.pos += digits;
                Ok(v)
            }
            _ => Err(ParseError {
                position: start,
                expected: vec!["integer >= 2".into()],
                found: text.to_string(),
            }),
        }
    }

    fn ring(&mut self) -> Result<RingExpr, ParseError> {
        let first = self.ring_factor()?;
        let mut factors = vec![first];
        while self.peek() == Some('x') {
            self.pos += 1;
            factors.push(self.ring_factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            RingExpr::Product(factors)
        })
    }

    fn ring_factor(&mut self) -> Result<RingExpr, ParseError> {
        let mut base = match self.peek() {
            Some('Z') => {
                self.pos += 1;
                RingExpr::Zn(self.int()?)
            }
            Some('(') => {
                self.pos += 1;
                let r = self.ring()?;
                self.expect(")")?;
                r
            }
            _ => return self.error(&["\"Z\"", "\"(\""]),
        };
        while self.peek() == Some('[') {
            for tok in ["[", "X", "]", "/", "(", "X", "^"] {
                self.expect(tok)?;
            }
            let k = self.int()?;
            self.expect(")")?;
            base = RingExpr::poly_quot(base, k);
        }
        Ok(base)
    }

    fn alg(&mut self) -> Result<AlgebraExpr, ParseError> {
        const STARTS: [&str; 6] = ["\"Id(\"", "\"L\"", "\"ord(\"", "\"prod(\"", "\"load(\"", "\"(\""];
        if self.eat("Id") {
            self.expect("(")?;
            let r = self.ring()?;
            self.expect(")")?;
            return Ok(AlgebraExpr::IdOf(r));
        }
        if self.eat("ord") {
            self.expect("(")?;
            let a = self.alg()?;
            self.expect(",")?;
            let b = self.alg()?;
            self.expect(")")?;
            return Ok(AlgebraExpr::Ord(Box::new(a), Box::new(b)));
        }
        if self.eat("prod") {
            self.expect("(")?;
            let mut parts = vec![self.alg()?];
            while self.eat(",") {
                parts.push(self.alg()?);
            }
            self.expect(")")?;
            return Ok(AlgebraExpr::ProductAlg(parts));
        }
        if self.eat("load") {
            self.expect("(")?;
            let path = self.quoted()?;
            self.expect(")")?;
            return Ok(AlgebraExpr::Load(path));
        }
        if self.eat("L") {
            return Ok(AlgebraExpr::Luk(self.int()?));
        }
        if self.eat("(") {
            let a = self.alg()?;
            self.expect(")")?;
            return Ok(a);
        }
        self.error(&STARTS)
    }

    fn quoted(&mut self) -> Result<String, ParseError> {
        self.expect("\"")?;
        let rest = &self.src[self.pos..];
        match rest.find('"') {
            Some(end) => {
                let s = rest[..end].to_string();
                self.pos += end + 1;
                Ok(s)
            }
            None => {
                self.pos = self.src.len();
                self.error(&["closing '\"'"])
            }
        }
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.peek().is_some() {
            self.error(&["end of input"])
        } else {
            Ok(())
        }
    }
}

pub fn parse_expr(text: &str) -> Result<AlgebraExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let e = p.alg()?;
    p.finish()?;
    Ok(e)
}

pub fn parse_ring(text: &str) -> Result<RingExpr, ParseError> {
    let mut p = Parser { src: text, pos: 0 };
    let r = p.ring()?;
    p.finish()?;
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zn(n: usize) -> RingExpr {
        RingExpr::Zn(n)
    }

    #[test]
    fn parses_ring_forms() {
        assert_eq!(
            parse_expr("Id(Z6[X]/(X^2))").unwrap(),
            AlgebraExpr::IdOf(RingExpr::poly_quot(zn(6), 2))
        );
        assert_eq!(
            parse_expr("ord(Id(Z2), Id(Z2 x Z2))").unwrap(),
            AlgebraExpr::Ord(
                Box::new(AlgebraExpr::IdOf(zn(2))),
                Box::new(AlgebraExpr::IdOf(RingExpr::product(vec![zn(2), zn(2)])))
            )
        );
        assert_eq!(
            parse_ring("Z2xZ3x Z5").unwrap(),
            RingExpr::product(vec![zn(2), zn(3), zn(5)])
        );
        assert_eq!(
            parse_ring("(Z2 x Z3)[X]/(X^3)").unwrap(),
            RingExpr::poly_quot(RingExpr::product(vec![zn(2), zn(3)]), 3)
        );
        assert_eq!(
            parse_ring("Z2 x Z3 [X] / (X ^ 2)").unwrap(),
            RingExpr::product(vec![zn(2), RingExpr::poly_quot(zn(3), 2)])
        );
    }

    #[test]
    fn parses_algebra_forms() {
        assert_eq!(
            parse_expr(" prod( L2 ,(L3) ) ").unwrap(),
            AlgebraExpr::ProductAlg(vec![AlgebraExpr::Luk(2), AlgebraExpr::Luk(3)])
        );
        assert_eq!(
            parse_expr("load(\"fixtures/a b.reslat\")").unwrap(),
            AlgebraExpr::Load("fixtures/a b.reslat".into())
        );
    }

    #[test]
    fn reports_errors() {
        let e = parse_expr("Id(Z)").unwrap_err();
        assert_eq!(e.position, 4);
        assert_eq!(e.expected, ["integer"]);
        assert_eq!(e.found, "')'");

        let e = parse_expr("L1").unwrap_err();
        assert_eq!(e.expected, ["integer >= 2"]);

        let e = parse_expr("ord(L2)").unwrap_err();
        assert_eq!(e.expected, ["\",\""]);

        let e = parse_expr("L2 L3").unwrap_err();
        assert_eq!(e.position, 3);
        assert!(parse_expr("").is_err());
        assert!(parse_expr("load(\"x)").is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in [
            "Id(Z2)",
            "ord(Id(Z2), ord(Id(Z2), Id(Z4)))",
            "prod(L2, L3, Id(Z2 x Z2))",
            "Id((Z2 x Z3)[X]/(X^2))",
            "Id(Z2 x (Z3 x Z5))",
            "load(\"fixtures/bl3_chain.reslat\")",
        ] {
            assert_eq!(parse_expr(text).unwrap().to_string(), text);
        }
    }
}
