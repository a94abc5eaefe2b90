//! Text syntax for ring descriptors and element expressions.
//!
//! ```text
//! descriptor := Z | Quad(d) | Poly(R, var) | Destroy(R, q, var)
//!             | Staged(primes=[i, ...], vars=[v, ...])
//!             | IrredDestroy(R, p, var)
//!             | StagedIrred(primes=[i, ...], vars=[v, ...])
//!             | Fringe(R, var)
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | power
//! power  := atom ('^' '-'? INT)?
//! atom   := INT | IDENT | '(' expr ')'
//! ```
//!
//! Expressions are evaluated as unreduced fractions over the ring's core and
//! then passed through the ring's membership test.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::ambient::core_symbol;
use crate::error::{Error, Result};
use crate::ring::{EnumerationSchedule, Kind, Ring};
use crate::value::Value;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Lexer> {
        let mut toks = Vec::new();
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < chars.len() {
            let (at, c) = chars[i];
            if c.is_whitespace() {
                i += 1;
            } else if c.is_ascii_digit() {
                let mut j = i;
                while j < chars.len() && chars[j].1.is_ascii_digit() {
                    j += 1;
                }
                let s: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                toks.push((Tok::Int(s.parse().expect("digits")), at));
                i = j;
            } else if c.is_ascii_alphabetic() || c == '_' {
                let mut j = i;
                while j < chars.len() && (chars[j].1.is_ascii_alphanumeric() || chars[j].1 == '_') {
                    j += 1;
                }
                let s: String = chars[i..j].iter().map(|&(_, c)| c).collect();
                toks.push((Tok::Ident(s), at));
                i = j;
            } else if "+-*/^()[],=".contains(c) {
                toks.push((Tok::Sym(c), at));
                i += 1;
            } else {
                return Err(Error::Syntax {
                    pos: at,
                    msg: format!("unexpected character `{c}`"),
                });
            }
        }
        toks.push((Tok::End, text.len()));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn at(&self) -> usize {
        self.toks[self.pos].1
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            pos: self.at(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn ident(&mut self) -> Result<String> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                Ok(s)
            }
            _ => self.err("expected an identifier"),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek().clone() {
            Tok::Int(n) => {
                self.next();
                Ok(n)
            }
            _ => self.err("expected an integer"),
        }
    }

    fn finish(&self) -> Result<()> {
        if *self.peek() == Tok::End {
            Ok(())
        } else {
            self.err("unexpected trailing input")
        }
    }
}

/// Expression tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Int(BigInt),
    Sym(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64, usize),
}

const MAX_EXPONENT: i64 = 1000;

fn expr(lx: &mut Lexer) -> Result<Expr> {
    let mut e = term(lx)?;
    loop {
        if lx.eat('+') {
            e = Expr::Add(Box::new(e), Box::new(term(lx)?));
        } else if lx.eat('-') {
            e = Expr::Sub(Box::new(e), Box::new(term(lx)?));
        } else {
            return Ok(e);
        }
    }
}

fn term(lx: &mut Lexer) -> Result<Expr> {
    let mut e = unary(lx)?;
    loop {
        if lx.eat('*') {
            e = Expr::Mul(Box::new(e), Box::new(unary(lx)?));
        } else if lx.eat('/') {
            e = Expr::Div(Box::new(e), Box::new(unary(lx)?));
        } else {
            return Ok(e);
        }
    }
}

fn unary(lx: &mut Lexer) -> Result<Expr> {
    if lx.eat('-') {
        return Ok(Expr::Neg(Box::new(unary(lx)?)));
    }
    power(lx)
}

fn power(lx: &mut Lexer) -> Result<Expr> {
    let a = atom(lx)?;
    if lx.eat('^') {
        let at = lx.at();
        let neg = lx.eat('-');
        let n = lx.int()?;
        let n = n
            .to_i64()
            .filter(|&n| n <= MAX_EXPONENT)
            .ok_or(Error::Syntax {
                pos: at,
                msg: format!("exponent larger than {MAX_EXPONENT}"),
            })?;
        return Ok(Expr::Pow(Box::new(a), if neg { -n } else { n }, at));
    }
    Ok(a)
}

fn atom(lx: &mut Lexer) -> Result<Expr> {
    let at = lx.at();
    match lx.next() {
        Tok::Int(n) => Ok(Expr::Int(n)),
        Tok::Ident(s) => Ok(Expr::Sym(s, at)),
        Tok::Sym('(') => {
            let e = expr(lx)?;
            lx.expect(')')?;
            Ok(e)
        }
        Tok::End => Err(Error::Syntax {
            pos: at,
            msg: "unexpected end of input".into(),
        }),
        t => Err(Error::Syntax {
            pos: at,
            msg: format!("unexpected {}", describe(&t)),
        }),
    }
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(n) => format!("number {n}"),
        Tok::Ident(s) => format!("identifier `{s}`"),
        Tok::Sym(c) => format!("`{c}`"),
        Tok::End => "end of input".into(),
    }
}

pub fn parse_expr(text: &str) -> Result<Expr> {
    let mut lx = Lexer::new(text)?;
    let e = expr(&mut lx)?;
    lx.finish()?;
    Ok(e)
}

/// Stage variables that may carry negative exponents.
fn laurent_vars(r: &Ring) -> Vec<String> {
    let stages = match r.kind() {
        Kind::Fringe { base, .. } => base.laurent_stages(),
        _ => r.laurent_stages(),
    };
    stages.unwrap_or_default().into_iter().map(|s| s.var).collect()
}

struct Eval<'a> {
    core: &'a Ring,
    laurent: Vec<String>,
}

impl Eval<'_> {
    fn eval(&self, e: &Expr) -> Result<(Value, Value)> {
        let c = self.core;
        Ok(match e {
            Expr::Int(n) => (c.from_int(n), c.one()),
            Expr::Sym(s, at) => match core_symbol(c, s) {
                Some(v) => (v, c.one()),
                None => {
                    return Err(Error::Syntax {
                        pos: *at,
                        msg: format!("unknown symbol `{s}`"),
                    })
                }
            },
            Expr::Neg(a) => {
                let (n, d) = self.eval(a)?;
                (c.neg(&n)?, d)
            }
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let (n1, d1) = self.eval(a)?;
                let (n2, d2) = self.eval(b)?;
                let n2 = if matches!(e, Expr::Sub(..)) { c.neg(&n2)? } else { n2 };
                if d1 == d2 {
                    (c.add(&n1, &n2)?, d1)
                } else {
                    (
                        c.add(&c.mul(&n1, &d2)?, &c.mul(&n2, &d1)?)?,
                        c.mul(&d1, &d2)?,
                    )
                }
            }
            Expr::Mul(a, b) => {
                let (n1, d1) = self.eval(a)?;
                let (n2, d2) = self.eval(b)?;
                (c.mul(&n1, &n2)?, c.mul(&d1, &d2)?)
            }
            Expr::Div(a, b) => {
                let (n1, d1) = self.eval(a)?;
                let (n2, d2) = self.eval(b)?;
                if c.is_zero(&n2) {
                    return Err(Error::DivisionByZero);
                }
                (c.mul(&n1, &d2)?, c.mul(&d1, &n2)?)
            }
            Expr::Pow(a, k, at) => {
                let (n, d) = self.eval(a)?;
                if *k >= 0 {
                    (c.pow(&n, *k as u32)?, c.pow(&d, *k as u32)?)
                } else {
                    let ok = matches!(&**a, Expr::Sym(s, _) if self.laurent.contains(s));
                    if !ok {
                        return Err(Error::Syntax {
                            pos: *at,
                            msg: "negative exponents are allowed only on stage variables".into(),
                        });
                    }
                    let m = k.unsigned_abs() as u32;
                    (c.pow(&d, m)?, c.pow(&n, m)?)
                }
            }
        })
    }
}

/// Parses and evaluates `text`, then applies the ring's membership test.
pub fn parse_element(r: &Ring, text: &str) -> Result<Value> {
    let e = parse_expr(text)?;
    eval_element(r, &e)
}

pub fn eval_element(r: &Ring, e: &Expr) -> Result<Value> {
    let core = r.core();
    let ev = Eval {
        core: &core,
        laurent: laurent_vars(r),
    };
    let (n, d) = ev.eval(e)?;
    r.from_ambient(&n, &d)
}

fn descriptor(lx: &mut Lexer) -> Result<Ring> {
    let at = lx.at();
    let name = lx.ident()?;
    let r = match name.as_str() {
        "Z" => return Ok(Ring::int()),
        "Quad" => {
            lx.expect('(')?;
            let neg = lx.eat('-');
            let d = lx.int()?;
            lx.expect(')')?;
            Ring::quad(if neg { -d } else { d })?
        }
        "Poly" | "Fringe" => {
            lx.expect('(')?;
            let base = descriptor(lx)?;
            lx.expect(',')?;
            let var = lx.ident()?;
            lx.expect(')')?;
            if name == "Poly" {
                Ring::poly(&base, &var)?
            } else {
                Ring::fringe(&base, &var)?
            }
        }
        "Destroy" | "IrredDestroy" => {
            lx.expect('(')?;
            let base = descriptor(lx)?;
            lx.expect(',')?;
            let e = expr(lx)?;
            lx.expect(',')?;
            let var = lx.ident()?;
            lx.expect(')')?;
            if name == "Destroy" {
                let q = eval_element(&base, &e).map_err(|err| match err {
                    Error::NotInRing(m) => Error::Validation(format!("q is not in the base: {m}")),
                    other => other,
                })?;
                Ring::destroy(&base, &q, &var)?
            } else {
                let p = match e {
                    Expr::Int(n) => n,
                    _ => {
                        return Err(Error::Validation(
                            "IrredDestroy needs a positive integer prime".into(),
                        ))
                    }
                };
                Ring::irred_destroy(&base, &p, &var)?
            }
        }
        "Staged" | "StagedIrred" => {
            lx.expect('(')?;
            let key = lx.ident()?;
            if key != "primes" {
                return lx.err("expected `primes=`");
            }
            lx.expect('=')?;
            let primes = int_list(lx)?;
            let vars = if lx.eat(',') {
                let key = lx.ident()?;
                if key != "vars" {
                    return lx.err("expected `vars=`");
                }
                lx.expect('=')?;
                ident_list(lx)?
            } else {
                (0..primes.len()).map(|j| format!("x{j}")).collect()
            };
            lx.expect(')')?;
            let schedule = EnumerationSchedule::new(primes)?;
            if name == "Staged" {
                Ring::staged(schedule, vars)?
            } else {
                Ring::staged_irred(schedule, vars)?
            }
        }
        _ => {
            return Err(Error::Syntax {
                pos: at,
                msg: format!("unknown ring constructor `{name}`"),
            })
        }
    };
    Ok(r)
}

fn int_list(lx: &mut Lexer) -> Result<Vec<u64>> {
    lx.expect('[')?;
    let mut out = Vec::new();
    if lx.eat(']') {
        return Ok(out);
    }
    loop {
        let at = lx.at();
        let n = lx.int()?;
        out.push(n.to_u64().ok_or(Error::Syntax {
            pos: at,
            msg: "index out of range".into(),
        })?);
        if lx.eat(']') {
            return Ok(out);
        }
        lx.expect(',')?;
    }
}

fn ident_list(lx: &mut Lexer) -> Result<Vec<String>> {
    lx.expect('[')?;
    let mut out = Vec::new();
    if lx.eat(']') {
        return Ok(out);
    }
    loop {
        out.push(lx.ident()?);
        if lx.eat(']') {
            return Ok(out);
        }
        lx.expect(',')?;
    }
}

pub fn parse_descriptor(text: &str) -> Result<Ring> {
    let mut lx = Lexer::new(text)?;
    let r = descriptor(&mut lx)?;
    lx.finish()?;
    Ok(r)
}

/// Stage number given on the command line.
pub fn parse_stage(text: &str) -> Option<usize> {
    text.trim().parse().ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::QuadInt;

    #[test]
    fn descriptors_round_trip() {
        for text in [
            "Z",
            "Quad(5)",
            "Poly(Z, x)",
            "Poly(Poly(Z, x), y)",
            "Destroy(Z, 3, x)",
            "Destroy(Quad(5), s, x)",
            "Staged(primes=[0, 2], vars=[x0, x1])",
            "IrredDestroy(Z, 2, x0)",
            "StagedIrred(primes=[0, 2], vars=[x0, x1])",
            "Fringe(StagedIrred(primes=[0], vars=[x0]), y)",
            "Fringe(Z, y)",
        ] {
            let r = parse_descriptor(text).unwrap();
            assert_eq!(r.to_string(), text);
            assert_eq!(parse_descriptor(&r.to_string()).unwrap(), r);
        }
    }

    #[test]
    fn descriptor_errors() {
        assert!(matches!(parse_descriptor("Destroy(Z, 4, x)"), Err(Error::Validation(_))));
        assert!(matches!(parse_descriptor("Quad(4)"), Err(Error::Validation(_))));
        assert!(matches!(parse_descriptor("Poly(Z x)"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_descriptor("Poly(Poly(Z, x), x)"), Err(Error::Validation(_))));
        assert_eq!(
            parse_descriptor("Staged(primes=[0, 0], vars=[a, b])"),
            Err(Error::RepeatedIndex(0))
        );
        assert!(matches!(parse_descriptor("Fringe(Quad(5), y)"), Err(Error::Validation(_))));
    }

    #[test]
    fn elements() {
        let q = parse_descriptor("Quad(5)").unwrap();
        assert_eq!(parse_element(&q, "1 + s").unwrap(), Value::Quad(QuadInt::new(1, 1)));
        let b = parse_descriptor("Destroy(Z, 2, x)").unwrap();
        let v = parse_element(&b, "(x^2)/2").unwrap();
        assert_eq!(v, Value::Dest(vec![Value::int(0), Value::int(0), Value::int(2)]));
        assert!(matches!(parse_element(&b, "x/2"), Err(Error::NotInRing(_))));
        assert!(matches!(parse_element(&b, "x +"), Err(Error::Syntax { .. })));
        let z = Ring::int();
        assert!(matches!(parse_element(&z, "y"), Err(Error::Syntax { .. })));
        assert!(matches!(parse_element(&z, "2^-1"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn laurent_elements() {
        let r = parse_descriptor("StagedIrred(primes=[0], vars=[x0])").unwrap();
        let a = parse_element(&r, "2*x0^-1").unwrap();
        assert_eq!(parse_element(&r, "2/x0").unwrap(), a);
        assert!(matches!(parse_element(&r, "x0^-1"), Err(Error::NotInRing(_))));
        let f = parse_descriptor("Fringe(StagedIrred(primes=[0], vars=[x0]), y)").unwrap();
        assert!(parse_element(&f, "2*x0^-1 + y").is_ok());
        assert!(parse_element(&f, "y^2/x0").is_ok());
        assert!(matches!(parse_element(&f, "y/x0"), Err(Error::NotInRing(_))));
    }
}
