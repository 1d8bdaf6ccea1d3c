//! Expressions and presentation files.
//!
//! ```text
//! expr   := term (("+"|"-") term)*
//! term   := factor (("*"|"/") factor)*
//! factor := atom ("^" sint)? | "-" factor
//! atom   := rational | ident | "(" expr ")"
//! tensor := expr ("|" expr)+
//! ```
//!
//! `/` divides by a scalar; `p` and `q` are the parameters, every other
//! identifier must be a generator.

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

use crate::braided::TensorPoly;
use crate::ncalg::{GeneratorInfo, NcError, NcPoly, Presentation, RewriteRule};
use crate::scalar::{Params, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("syntax error at line {line}, column {col}: {msg}")]
    SyntaxError { line: usize, col: usize, msg: String },
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Rewrite(#[from] NcError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Rational(BigRational),
    Param(char),
    Gen(String),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Neg(Box<Expr>),
    Pow(Box<Expr>, i64),
}

/// Parse tree of a command-line expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedExpr {
    Single(Expr),
    Tensor(Vec<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

struct Lexer {
    toks: Vec<(Tok, usize, usize)>,
    pos: usize,
}

impl Lexer {
    fn new(text: &str) -> Result<Self, ParseError> {
        let mut toks = Vec::new();
        let (mut line, mut col) = (1, 1);
        let chars: Vec<char> = text.chars().collect();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let (l0, c0) = (line, col);
            if c == '\n' {
                line += 1;
                col = 1;
                i += 1;
                continue;
            }
            if c.is_whitespace() {
                i += 1;
                col += 1;
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                col += i - start;
                toks.push((Tok::Num(s.parse().expect("digits")), l0, c0));
                continue;
            }
            if c.is_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                col += i - start;
                toks.push((Tok::Ident(chars[start..i].iter().collect()), l0, c0));
                continue;
            }
            if "+-*/^()|".contains(c) {
                toks.push((Tok::Sym(c), l0, c0));
                i += 1;
                col += 1;
                continue;
            }
            return Err(ParseError::SyntaxError {
                line,
                col,
                msg: format!("unexpected character {c:?}"),
            });
        }
        toks.push((Tok::End, line, col));
        Ok(Lexer { toks, pos: 0 })
    }

    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn next(&mut self) -> Tok {
        let t = self.toks[self.pos].0.clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, msg: impl Into<String>) -> ParseError {
        let (_, line, col) = self.toks[self.pos];
        ParseError::SyntaxError { line, col, msg: msg.into() }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.next();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let atom = self.atom()?;
        if self.eat('^') {
            let neg = self.eat('-');
            match self.next() {
                Tok::Num(n) => {
                    let e: i64 = n.try_into().map_err(|_| self.error("exponent too large"))?;
                    return Ok(Expr::Pow(Box::new(atom), if neg { -e } else { e }));
                }
                _ => return Err(self.error("expected an integer exponent")),
            }
        }
        Ok(atom)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        match self.peek().clone() {
            Tok::Num(n) => {
                self.next();
                Ok(Expr::Rational(BigRational::from_integer(n)))
            }
            Tok::Ident(s) => {
                self.next();
                Ok(match s.as_str() {
                    "p" => Expr::Param('p'),
                    "q" => Expr::Param('q'),
                    _ => Expr::Gen(s),
                })
            }
            Tok::Sym('(') => {
                self.next();
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(self.error("expected ')'"));
                }
                Ok(e)
            }
            Tok::End => Err(self.error("unexpected end of input")),
            Tok::Sym(c) => Err(self.error(format!("unexpected {c:?}"))),
        }
    }
}

/// Parses an expression or a `|`-separated tensor, checking generator names.
pub fn parse_expression(text: &str, pres: &Presentation) -> Result<ParsedExpr, ParseError> {
    let mut lx = Lexer::new(text)?;
    let mut slots = vec![lx.expr()?];
    while lx.eat('|') {
        slots.push(lx.expr()?);
    }
    if *lx.peek() != Tok::End {
        return Err(lx.error("trailing input"));
    }
    for e in &slots {
        check_names(e, pres)?;
    }
    Ok(if slots.len() == 1 {
        ParsedExpr::Single(slots.pop().unwrap())
    } else {
        ParsedExpr::Tensor(slots)
    })
}

fn check_names(e: &Expr, pres: &Presentation) -> Result<(), ParseError> {
    match e {
        Expr::Gen(n) if pres.gen_index(n).is_none() => Err(ParseError::UnknownGenerator(n.clone())),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            check_names(a, pres)?;
            check_names(b, pres)
        }
        Expr::Neg(a) | Expr::Pow(a, _) => check_names(a, pres),
        _ => Ok(()),
    }
}

/// Lowers without rewriting: a linear combination of free words.
fn lower_free(e: &Expr, pres: &Presentation, params: &Params) -> Result<NcPoly, ParseError> {
    Ok(match e {
        Expr::Rational(r) => NcPoly::constant(params.constant(r.clone())),
        Expr::Param(c) => NcPoly::constant(if *c == 'p' { params.p() } else { params.q() }),
        Expr::Gen(n) => pres.g(n),
        Expr::Add(a, b) => lower_free(a, pres, params)?.add(&lower_free(b, pres, params)?),
        Expr::Sub(a, b) => lower_free(a, pres, params)?.sub(&lower_free(b, pres, params)?),
        Expr::Mul(a, b) => lower_free(a, pres, params)?.free_mul(&lower_free(b, pres, params)?),
        Expr::Neg(a) => lower_free(a, pres, params)?.neg(),
        Expr::Div(a, b) => {
            let d = as_scalar(&lower_free(b, pres, params)?)
                .ok_or_else(|| ParseError::Invalid("division by a non-scalar".into()))?;
            let inv = d
                .inv()
                .map_err(|_| ParseError::Invalid("division by zero".into()))?;
            lower_free(a, pres, params)?.scale(&inv)
        }
        Expr::Pow(a, n) => {
            let base = lower_free(a, pres, params)?;
            if *n >= 0 {
                let mut acc = NcPoly::constant(params.one());
                for _ in 0..*n {
                    acc = acc.free_mul(&base);
                }
                acc
            } else {
                let s = as_scalar(&base)
                    .ok_or_else(|| ParseError::Invalid("negative power of a non-scalar".into()))?;
                let v = s
                    .pow(*n)
                    .map_err(|_| ParseError::Invalid("negative power of zero".into()))?;
                NcPoly::constant(v)
            }
        }
    })
}

fn as_scalar(x: &NcPoly) -> Option<Scalar> {
    if x.words().all(|w| w.is_empty()) {
        Some(x.constant_term())
    } else {
        None
    }
}

impl ParsedExpr {
    /// Normal form of a single expression.
    pub fn lower(&self, pres: &Presentation) -> Result<NcPoly, ParseError> {
        match self {
            ParsedExpr::Single(e) => Ok(pres.normal_form(&lower_free(e, pres, pres.params())?)?),
            ParsedExpr::Tensor(_) => Err(ParseError::Invalid("expected an element, found a tensor".into())),
        }
    }

    /// Tensor with every slot in normal form; a single expression is arity 1.
    pub fn lower_tensor(&self, pres: &Presentation) -> Result<TensorPoly, ParseError> {
        let slots: Vec<&Expr> = match self {
            ParsedExpr::Single(e) => vec![e],
            ParsedExpr::Tensor(v) => v.iter().collect(),
        };
        let polys = slots
            .into_iter()
            .map(|e| Ok(pres.normal_form(&lower_free(e, pres, pres.params())?)?))
            .collect::<Result<Vec<_>, ParseError>>()?;
        Ok(TensorPoly::pure(&polys))
    }
}

/// Parses and lowers in one step.
pub fn parse_poly(text: &str, pres: &Presentation) -> Result<NcPoly, ParseError> {
    parse_expression(text, pres)?.lower(pres)
}

/// Splits a `*`-separated tensor product expression `(x|y) * (z|w) * …` at top level.
pub fn split_top_products(text: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0i32;
    for c in text.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if c == '*' && depth == 0 {
            out.push(String::new());
        } else {
            out.last_mut().unwrap().push(c);
        }
    }
    out.into_iter().map(|s| s.trim().to_string()).collect()
}

/// Strips one pair of enclosing parentheses if they match each other.
pub fn strip_outer_parens(s: &str) -> &str {
    let t = s.trim();
    if !(t.starts_with('(') && t.ends_with(')')) {
        return t;
    }
    let mut depth = 0;
    for (i, c) in t.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth == 0 && i != t.len() - 1 {
                    return t;
                }
            }
            _ => {}
        }
    }
    &t[1..t.len() - 1]
}

/// Parses a presentation file:
///
/// ```text
/// # comment
/// gen a deg=0 wt=2
/// rule b*a -> q*a*b
/// ```
pub fn parse_presentation(name: &str, text: &str, params: &Params) -> Result<Presentation, ParseError> {
    let mut gens: Vec<GeneratorInfo> = Vec::new();
    let mut rules: Vec<(usize, usize, String, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |col: usize, msg: &str| ParseError::SyntaxError {
            line: ln + 1,
            col,
            msg: msg.to_string(),
        };
        let indent = raw.len() - raw.trim_start().len();
        if let Some(rest) = line.strip_prefix("gen ") {
            let mut parts = rest.split_whitespace();
            let gname = parts.next().ok_or_else(|| err(indent + 5, "missing generator name"))?;
            if gname == "p" || gname == "q" || !gname.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(err(indent + 5, "invalid generator name"));
            }
            let (mut deg, mut wt) = (None, None);
            for kv in parts {
                let col = indent + line.find(kv).unwrap_or(0) + 1;
                match kv.split_once('=') {
                    Some(("deg", v)) => deg = Some(v.parse::<i64>().map_err(|_| err(col, "bad deg"))?),
                    Some(("wt", v)) => wt = Some(v.parse::<u32>().map_err(|_| err(col, "bad wt"))?),
                    _ => return Err(err(col, "expected deg=<int> or wt=<int>")),
                }
            }
            let deg = deg.ok_or_else(|| err(indent + 1, "missing deg="))?;
            let wt = wt.ok_or_else(|| err(indent + 1, "missing wt="))?;
            gens.push(GeneratorInfo::new(gname, deg, wt));
        } else if let Some(rest) = line.strip_prefix("rule ") {
            let (lhs, rhs) = rest
                .split_once("->")
                .ok_or_else(|| err(indent + 6, "expected '<word> -> <expr>'"))?;
            // column of the first rhs character, for error positions
            let rhs_col = raw.len() - raw.trim_start().len() + line.len() - rhs.trim_start().len();
            rules.push((ln + 1, rhs_col, lhs.trim().to_string(), rhs.trim().to_string()));
        } else {
            return Err(err(indent + 1, "expected 'gen' or 'rule'"));
        }
    }
    // rules are lowered against the free algebra on the declared generators
    let free = Presentation::new(name, params.clone(), gens.clone(), Vec::new())?;
    let mut out = Vec::new();
    for (ln, rhs_col, lhs, rhs) in rules {
        let names: Vec<&str> = lhs.split('*').map(str::trim).collect();
        let word = free.word_of(&names).map_err(|e| match e {
            NcError::UnknownGenerator(g) => ParseError::UnknownGenerator(g),
            other => ParseError::Rewrite(other),
        })?;
        let rhs = parse_expression(&rhs, &free)
            .map_err(|e| relocate(e, ln, rhs_col))?
            .lower(&free)?;
        out.push(RewriteRule { lhs: word, rhs });
    }
    Ok(Presentation::new(name, params.clone(), gens, out)?)
}

fn relocate(e: ParseError, line: usize, shift: usize) -> ParseError {
    match e {
        ParseError::SyntaxError { col, msg, .. } => ParseError::SyntaxError { line, col: col + shift, msg },
        other => other,
    }
}

/// Serializes a presentation in the file format accepted by [`parse_presentation`].
pub fn emit_presentation(pres: &Presentation) -> String {
    let mut out = String::new();
    for g in pres.generators() {
        out.push_str(&format!("gen {} deg={} wt={}\n", g.name, g.degree, g.weight));
    }
    for r in pres.rules() {
        let lhs: Vec<&str> = r
            .lhs
            .letters()
            .iter()
            .map(|&g| pres.generators()[g as usize].name.as_str())
            .collect();
        out.push_str(&format!("rule {} -> {}\n", lhs.join("*"), pres.format(&r.rhs)));
    }
    out
}

/// Parses a rational `n`, `-n` or `n/d`.
pub fn parse_rational_arg(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    let r = BigRational::new(num, den);
    Some(if r.denom().is_negative() { -r } else { r })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sl2::sl2_presentation;

    #[test]
    fn lowering() {
        let g = Params::Generic;
        let pres = sl2_presentation(&g);
        assert_eq!(parse_poly("b*a", &pres).unwrap(), pres.mul(&pres.g("a"), &pres.g("b")).scale(&g.q()));
        assert!(parse_poly("(a*d - p^-1*b*c) - 1", &pres).unwrap().is_zero());
        assert_eq!(pres.format(&parse_poly("d*a", &pres).unwrap()), "1 + q*b*c");
        assert_eq!(parse_poly("(a+b)^2", &pres).unwrap(), pres.pow(&pres.g("a").add(&pres.g("b")), 2));
        assert_eq!(parse_poly("a/2 + a/2", &pres).unwrap(), pres.g("a"));
    }

    #[test]
    fn errors() {
        let pres = sl2_presentation(&Params::Generic);
        match parse_expression("a + ", &pres) {
            Err(ParseError::SyntaxError { line: 1, col: 5, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert_eq!(parse_expression("a*x", &pres), Err(ParseError::UnknownGenerator("x".into())));
        assert!(matches!(parse_poly("a^-1", &pres), Err(ParseError::Invalid(_))));
        assert!(matches!(parse_poly("a/b", &pres), Err(ParseError::Invalid(_))));
        assert!(matches!(parse_expression("a $ b", &pres), Err(ParseError::SyntaxError { col: 3, .. })));
    }

    #[test]
    fn tensors() {
        let pres = sl2_presentation(&Params::Generic);
        let t = parse_expression("a|b*c", &pres).unwrap().lower_tensor(&pres).unwrap();
        assert_eq!(t.format(&pres), "(a|b*c)");
        assert_eq!(split_top_products("(a|b) * (c|1)"), vec!["(a|b)", "(c|1)"]);
        assert_eq!(strip_outer_parens("(a|b)"), "a|b");
        assert_eq!(strip_outer_parens("(a)*(b)"), "(a)*(b)");
    }

    #[test]
    fn presentation_file_round_trip() {
        let g = Params::Generic;
        let pres = sl2_presentation(&g);
        let text = emit_presentation(&pres);
        let back = parse_presentation("sl2", &text, &g).unwrap();
        assert_eq!(back.rules(), pres.rules());
        assert!(back.check_confluence().is_confluent());
        let bad = parse_presentation("x", "gen a deg=0 wt=1\nrule a*z -> 1\n", &g);
        assert_eq!(bad.err(), Some(ParseError::UnknownGenerator("z".into())));
        let bad = parse_presentation("x", "gen a deg=0 wt=1\nrule a -> a +\n", &g);
        assert!(matches!(bad, Err(ParseError::SyntaxError { line: 2, .. })));
    }
}
