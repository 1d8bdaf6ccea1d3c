use std::fmt;

use num::{BigRational, One, Zero};

use super::poly::{write_laurent, BiPoly};

/// A reduced fraction of polynomials in `p`, `q` over the rationals.
///
/// Canonical form: numerator and denominator coprime, the denominator's
/// leading rational coefficient equal to one, and zero stored as `0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc {
    num: BiPoly,
    den: BiPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: BiPoly::zero(),
            den: BiPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        RatFunc {
            num: BiPoly::constant(c),
            den: BiPoly::one(),
        }
    }

    pub fn p() -> Self {
        RatFunc::from_poly(BiPoly::monomial(BigRational::one(), 1, 0))
    }

    pub fn q() -> Self {
        RatFunc::from_poly(BiPoly::monomial(BigRational::one(), 0, 1))
    }

    pub fn from_poly(num: BiPoly) -> Self {
        RatFunc {
            num,
            den: BiPoly::one(),
        }
    }

    /// Builds and canonicalizes `num / den`. Panics if `den` is zero.
    pub fn new(num: BiPoly, den: BiPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc::zero();
        }
        let (num, den) = if den.is_one() {
            (num, den)
        } else if let Some((di, dj, _)) = den.as_monomial() {
            // Monomial denominators only share monomial factors.
            let (ni, nj) = num.monomial_content();
            let (i, j) = (ni.min(di), nj.min(dj));
            (num.unshift(i, j), den.unshift(i, j))
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let lead = den.leading_rational().unwrap().clone();
        if lead.is_one() {
            RatFunc { num, den }
        } else {
            let inv = lead.recip();
            RatFunc {
                num: num.scale(&inv),
                den: den.scale(&inv),
            }
        }
    }

    pub fn numer(&self) -> &BiPoly {
        &self.num
    }

    pub fn denom(&self) -> &BiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn as_constant(&self) -> Option<BigRational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Structural size used for pivot selection.
    pub fn complexity(&self) -> usize {
        self.num.term_count() + self.den.term_count()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return RatFunc::new(self.num.add(&other.num), self.den.clone());
        }
        RatFunc::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFunc::from_poly(self.num.mul(&other.num));
        }
        RatFunc::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(RatFunc::new(self.den.clone(), self.num.clone()))
    }

    pub fn eval(&self, p: &BigRational, q: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(p, q);
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(p, q) / d)
    }
}

impl fmt::Display for RatFunc {
    /// Laurent polynomials print as signed sums with negative exponents;
    /// anything else prints as `(num)/(den)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((i, j, c)) = self.den.as_monomial() {
            debug_assert!(c.is_one());
            return write_laurent(f, &self.num, i as i64, j as i64);
        }
        write!(f, "({})/({})", self.num, self.den)
    }
}
