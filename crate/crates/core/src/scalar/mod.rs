//! Exact coefficient arithmetic.
//!
//! Two backends share one [`Scalar`] type: numeric (plain rationals, used when
//! `p` and `q` are fixed rational numbers) and generic (reduced rational
//! functions in `p`, `q`). Rational constants promote to the generic backend
//! when mixed with generic values under the arithmetic operators;
//! [`field_arith`] is the strict entry point that rejects mixed backends.

mod poly;
mod ratfunc;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

pub use poly::{BiPoly, UniPoly};
pub use ratfunc::RatFunc;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands use different backends ({0} vs {1})")]
    BackendMismatch(&'static str, &'static str),
    #[error("denominator vanishes at p={p}, q={q}")]
    PoleAtPoint { p: String, q: String },
    #[error("parameter {0} must be nonzero")]
    ZeroParameter(&'static str),
    #[error("cannot parse rational {0:?}")]
    BadRational(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Backend {
    Numeric,
    Generic,
}

impl Backend {
    fn name(self) -> &'static str {
        match self {
            Backend::Numeric => "numeric",
            Backend::Generic => "generic",
        }
    }
}

#[derive(Clone, Debug)]
pub enum Scalar {
    Numeric(BigRational),
    Generic(RatFunc),
}

pub fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"n"` or `"n/d"`.
pub fn parse_rational(text: &str) -> Result<BigRational, ScalarError> {
    let bad = || ScalarError::BadRational(text.to_string());
    let text = text.trim();
    let (n, d) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Numeric(_) => Backend::Numeric,
            Scalar::Generic(_) => Backend::Generic,
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Numeric(rational(n, 1))
    }

    pub fn zero() -> Self {
        Scalar::from_int(0)
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Numeric(r) => r.is_zero(),
            Scalar::Generic(f) => f.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Numeric(r) => r.is_one(),
            Scalar::Generic(f) => f.is_one(),
        }
    }

    /// The value as a rational, if it is a constant in either backend.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self {
            Scalar::Numeric(r) => Some(r.clone()),
            Scalar::Generic(f) => f.as_constant(),
        }
    }

    fn to_generic(&self) -> RatFunc {
        match self {
            Scalar::Numeric(r) => RatFunc::constant(r.clone()),
            Scalar::Generic(f) => f.clone(),
        }
    }

    /// Structural size (number of polynomial terms), used to pick pivots.
    pub fn complexity(&self) -> usize {
        match self {
            Scalar::Numeric(r) => r.numer().bits() as usize + r.denom().bits() as usize,
            Scalar::Generic(f) => f.complexity(),
        }
    }

    pub fn inv(&self) -> Result<Self, ScalarError> {
        match self {
            Scalar::Numeric(r) if r.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Numeric(r) => Ok(Scalar::Numeric(r.recip())),
            Scalar::Generic(f) => f.inv().map(Scalar::Generic).ok_or(ScalarError::DivisionByZero),
        }
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> Result<Self, ScalarError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut acc = match self {
            Scalar::Numeric(_) => Scalar::one(),
            Scalar::Generic(_) => Scalar::Generic(RatFunc::one()),
        };
        let mut sq = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &sq;
            }
            n >>= 1;
            if n > 0 {
                sq = &sq * &sq;
            }
        }
        Ok(acc)
    }

    /// Evaluates a generic value at a parameter point; numeric values pass through.
    pub fn evaluate(&self, at: &ParamPoint) -> Result<Self, ScalarError> {
        match self {
            Scalar::Numeric(r) => Ok(Scalar::Numeric(r.clone())),
            Scalar::Generic(f) => f
                .eval(&at.p, &at.q)
                .map(Scalar::Numeric)
                .ok_or_else(|| ScalarError::PoleAtPoint {
                    p: format_rational(&at.p),
                    q: format_rational(&at.q),
                }),
        }
    }

    /// True when the textual form needs parentheses as a product factor.
    pub fn is_compound(&self) -> bool {
        match self {
            Scalar::Numeric(_) => false,
            Scalar::Generic(f) => {
                f.as_constant().is_none() && (f.numer().term_count() > 1 || !f.denom().as_monomial().is_some())
            }
        }
    }

    /// Whether the printed form starts with a minus sign (single-term values only).
    pub fn is_negative_monomial(&self) -> bool {
        match self {
            Scalar::Numeric(r) => r.is_negative(),
            Scalar::Generic(f) => {
                f.numer().term_count() == 1
                    && f.denom().as_monomial().is_some()
                    && f.numer().leading_rational().is_some_and(|c| c.is_negative())
            }
        }
    }
}

/// Strict field operation: both operands must use the same backend.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(x: &Scalar, y: &Scalar, op: FieldOp) -> Result<Scalar, ScalarError> {
    if x.backend() != y.backend() {
        return Err(ScalarError::BackendMismatch(x.backend().name(), y.backend().name()));
    }
    match op {
        FieldOp::Add => Ok(x + y),
        FieldOp::Sub => Ok(x - y),
        FieldOp::Mul => Ok(x * y),
        FieldOp::Div => x.div(y),
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Numeric(a), Scalar::Numeric(b)) => a == b,
            (Scalar::Generic(a), Scalar::Generic(b)) => a == b,
            (Scalar::Numeric(a), Scalar::Generic(b)) | (Scalar::Generic(b), Scalar::Numeric(a)) => {
                b.as_constant().as_ref() == Some(a)
            }
        }
    }
}

impl Eq for Scalar {}

macro_rules! binop {
    ($trait:ident, $method:ident, $num:expr, $gen:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Numeric(a), Scalar::Numeric(b)) => Scalar::Numeric($num(a, b)),
                    _ => Scalar::Generic($gen(&self.to_generic(), &rhs.to_generic())),
                }
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, |a: &BigRational, b: &BigRational| a + b, RatFunc::add);
binop!(Sub, sub, |a: &BigRational, b: &BigRational| a - b, RatFunc::sub);
binop!(Mul, mul, |a: &BigRational, b: &BigRational| a * b, RatFunc::mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Numeric(a) => Scalar::Numeric(-a),
            Scalar::Generic(f) => Scalar::Generic(f.neg()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Numeric(r) => write!(f, "{}", format_rational(r)),
            Scalar::Generic(g) => write!(f, "{g}"),
        }
    }
}

/// A fixed parameter point with nonzero rational `p`, `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamPoint {
    p: BigRational,
    q: BigRational,
}

impl ParamPoint {
    pub fn new(p: BigRational, q: BigRational) -> Result<Self, ScalarError> {
        if p.is_zero() {
            return Err(ScalarError::ZeroParameter("p"));
        }
        if q.is_zero() {
            return Err(ScalarError::ZeroParameter("q"));
        }
        Ok(ParamPoint { p, q })
    }

    /// Convenience constructor from integer fractions `pn/pd`, `qn/qd`.
    pub fn from_fracs(pn: i64, pd: i64, qn: i64, qd: i64) -> Result<Self, ScalarError> {
        ParamPoint::new(rational(pn, pd), rational(qn, qd))
    }

    pub fn p(&self) -> &BigRational {
        &self.p
    }

    pub fn q(&self) -> &BigRational {
        &self.q
    }
}

impl fmt::Display for ParamPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}, q={}", format_rational(&self.p), format_rational(&self.q))
    }
}

/// The parameter regime every scalar of a computation lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Params {
    Point(ParamPoint),
    Generic,
}

impl Params {
    pub fn point(p: i64, q: i64) -> Self {
        Params::Point(ParamPoint::from_fracs(p, 1, q, 1).expect("nonzero parameters"))
    }

    pub fn backend(&self) -> Backend {
        match self {
            Params::Point(_) => Backend::Numeric,
            Params::Generic => Backend::Generic,
        }
    }

    pub fn as_point(&self) -> Option<&ParamPoint> {
        match self {
            Params::Point(pt) => Some(pt),
            Params::Generic => None,
        }
    }

    pub fn p(&self) -> Scalar {
        match self {
            Params::Point(pt) => Scalar::Numeric(pt.p.clone()),
            Params::Generic => Scalar::Generic(RatFunc::p()),
        }
    }

    pub fn q(&self) -> Scalar {
        match self {
            Params::Point(pt) => Scalar::Numeric(pt.q.clone()),
            Params::Generic => Scalar::Generic(RatFunc::q()),
        }
    }

    /// A rational constant in this regime's backend.
    pub fn constant(&self, c: BigRational) -> Scalar {
        match self {
            Params::Point(_) => Scalar::Numeric(c),
            Params::Generic => Scalar::Generic(RatFunc::constant(c)),
        }
    }

    pub fn int(&self, n: i64) -> Scalar {
        self.constant(rational(n, 1))
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// `p^i q^j` for arbitrary integer exponents.
    pub fn laurent(&self, i: i64, j: i64) -> Scalar {
        let pi = self.p().pow(i).expect("p is nonzero");
        let qj = self.q().pow(j).expect("q is nonzero");
        &pi * &qj
    }

    /// Brings a scalar into this regime: generic values are evaluated at the
    /// point, constants are retagged.
    pub fn coerce(&self, x: &Scalar) -> Result<Scalar, ScalarError> {
        match self {
            Params::Point(pt) => x.evaluate(pt),
            Params::Generic => Ok(Scalar::Generic(x.to_generic())),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Params::Point(pt) => write!(f, "{pt}"),
            Params::Generic => write!(f, "generic"),
        }
    }
}

/// A bicharacter on Z, determined by its value `xi` on the generator pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bicharacter {
    xi: Scalar,
}

impl Bicharacter {
    pub fn new(xi: Scalar) -> Result<Self, ScalarError> {
        if xi.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Bicharacter { xi })
    }

    /// `xi = p^-1 q`, the braiding used for O_{p,q}(SL2).
    pub fn sl2(params: &Params) -> Self {
        Bicharacter {
            xi: params.laurent(-1, 1),
        }
    }

    pub fn xi(&self) -> &Scalar {
        &self.xi
    }

    /// `xi^(m*n)`, the value on degrees `m` and `n`.
    pub fn pow(&self, m: i64, n: i64) -> Scalar {
        self.xi.pow(m * n).expect("xi is nonzero")
    }
}

/// Free-function form of [`Bicharacter::pow`].
pub fn bichar_pow(b: &Bicharacter, m: i64, n: i64) -> Scalar {
    b.pow(m, n)
}

/// Evaluates a generic scalar at a point (identity on numeric values).
pub fn evaluate(x: &Scalar, at: &ParamPoint) -> Result<Scalar, ScalarError> {
    x.evaluate(at)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen() -> Params {
        Params::Generic
    }

    #[test]
    fn inverse_pair_multiplies_to_one() {
        let g = gen();
        let x = g.laurent(-1, 1);
        let y = g.laurent(1, -1);
        assert!((&x * &y).is_one());
        assert!((&x + &(-&x)).is_zero());
    }

    #[test]
    fn canonical_fraction() {
        let g = gen();
        let one_minus_q = &g.one() - &g.q();
        let v = field_arith(&g.one(), &one_minus_q, FieldOp::Div).unwrap();
        let Scalar::Generic(f) = &v else { panic!() };
        // 1/(1-q) is stored as -1/(q-1): monic denominator.
        assert_eq!(f.numer(), &BiPoly::constant(rational(-1, 1)));
        assert_eq!(f.denom(), &BiPoly::monomial(rational(1, 1), 0, 1).sub(&BiPoly::one()));
        assert_eq!(&v * &one_minus_q, g.one());
    }

    #[test]
    fn evaluation_and_poles() {
        let g = gen();
        let pt = ParamPoint::from_fracs(2, 1, 3, 1).unwrap();
        assert_eq!(g.laurent(-1, 1).evaluate(&pt).unwrap(), Scalar::Numeric(rational(3, 2)));
        assert_eq!(g.one().evaluate(&pt).unwrap(), Scalar::one());
        let pole = g.one().div(&(&(&g.p() * &g.q()) - &g.one())).unwrap();
        let pq1 = ParamPoint::from_fracs(2, 1, 1, 2).unwrap();
        assert!(matches!(pole.evaluate(&pq1), Err(ScalarError::PoleAtPoint { .. })));
    }

    #[test]
    fn bicharacter_powers() {
        let g = gen();
        let b = Bicharacter::sl2(&g);
        assert!(b.pow(0, 5).is_one());
        assert_eq!(b.pow(-1, 1), g.laurent(1, -1));
        assert_eq!(b.pow(-1, -1), g.laurent(-1, 1));
    }

    #[test]
    fn strict_arith_rejects_mixed_backends() {
        let g = gen();
        assert_eq!(
            field_arith(&Scalar::one(), &g.p(), FieldOp::Add),
            Err(ScalarError::BackendMismatch("numeric", "generic"))
        );
        assert_eq!(field_arith(&Scalar::one(), &Scalar::zero(), FieldOp::Div), Err(ScalarError::DivisionByZero));
        assert_eq!(ParamPoint::from_fracs(0, 1, 1, 1), Err(ScalarError::ZeroParameter("p")));
    }

    #[test]
    fn display_forms() {
        let g = gen();
        assert_eq!(g.laurent(-1, 1).to_string(), "p^-1*q");
        assert_eq!((&g.q() - &g.laurent(-1, 0)).to_string(), "q - p^-1");
        assert_eq!(Scalar::Numeric(rational(-3, 2)).to_string(), "-3/2");
    }
}
