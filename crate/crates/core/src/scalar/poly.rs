//! Dense polynomials over the rationals in the two parameters `p` and `q`.
//!
//! `UniPoly` is a univariate polynomial in `p`; `BiPoly` is a polynomial in
//! `q` whose coefficients are `UniPoly`s. Both are kept trimmed (no trailing
//! zero coefficients), so the zero polynomial is the empty vector.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

/// `k` with `k·c` integral for every `c`, the results coprime, and the last
/// nonzero one positive; `None` if all are zero.
fn integer_normalizer<'a>(coeffs: impl Iterator<Item = &'a BigRational> + Clone) -> Option<BigRational> {
    let mut den = BigInt::one();
    let mut num = BigInt::zero();
    let mut last_sign = None;
    for c in coeffs {
        if c.is_zero() {
            continue;
        }
        den = den.lcm(c.denom());
        num = num.gcd(c.numer());
        last_sign = Some(c.is_negative());
    }
    let neg = last_sign?;
    let k = BigRational::new(den, num);
    Some(if neg { -k } else { k })
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        UniPoly::from_coeffs(vec![c])
    }

    pub fn one() -> Self {
        UniPoly::constant(BigRational::one())
    }

    /// `c * p^k`
    pub fn monomial(c: BigRational, k: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); k + 1];
        coeffs[k] = c;
        UniPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn constant_term(&self) -> BigRational {
        self.coeffs.first().cloned().unwrap_or_else(BigRational::zero)
    }

    /// Number of nonzero terms.
    pub fn term_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.coeffs.get(i);
            let b = other.coeffs.get(i);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        UniPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return UniPoly::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Multiply by `p^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        UniPoly { coeffs }
    }

    /// Divide by `p^k`; the caller guarantees divisibility.
    pub fn unshift(&self, k: usize) -> Self {
        UniPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }

    /// Euclidean division over Q. Panics on division by zero.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let d = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + d] / &lead;
            if !c.is_zero() {
                for (j, b) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            quot[k] = c;
        }
        rem.truncate(d);
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact division; `None` when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => UniPoly::zero(),
        }
    }

    /// Integer coefficients with trivial content and positive leading coefficient.
    pub fn integer_primitive(&self) -> Self {
        match integer_normalizer(self.coeffs.iter()) {
            Some(k) => self.scale(&k),
            None => UniPoly::zero(),
        }
    }

    /// `lc(d)^e · self mod d` over the integers.
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree().expect("pseudo-division by zero");
        let lead = divisor.leading().unwrap();
        let mut r = self.clone();
        while let Some(k) = r.degree() {
            if k < d {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale(lead).sub(&divisor.shift(k - d).scale(&lr));
        }
        r
    }

    /// Monic gcd (zero only when both inputs are zero), by a primitive
    /// remainder sequence over the integers.
    pub fn gcd(&self, other: &Self) -> Self {
        let a = self.integer_primitive();
        let b = other.integer_primitive();
        if a.is_zero() || b.is_zero() {
            return a.add(&b).monic();
        }
        if let Some(g) = heuristic::uni_gcd(&a, &b) {
            return g.monic();
        }
        Self::gcd_prs(a, b)
    }

    /// Primitive PRS on integer-primitive inputs.
    fn gcd_prs(mut a: Self, mut b: Self) -> Self {
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.degree() == Some(0) {
                return UniPoly::one();
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.integer_primitive();
        }
        a.monic()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct BiPoly {
    coeffs: Vec<UniPoly>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::from_uni(UniPoly::one())
    }

    pub fn from_uni(c: UniPoly) -> Self {
        BiPoly::from_coeffs(vec![c])
    }

    pub fn constant(c: BigRational) -> Self {
        BiPoly::from_uni(UniPoly::constant(c))
    }

    /// `c * p^i * q^j`
    pub fn monomial(c: BigRational, i: usize, j: usize) -> Self {
        let mut coeffs = vec![UniPoly::zero(); j + 1];
        coeffs[j] = UniPoly::monomial(c, i);
        BiPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BiPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree_q(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&UniPoly> {
        self.coeffs.last()
    }

    /// Leading rational coefficient: leading in `p` of the leading in `q`.
    pub fn leading_rational(&self) -> Option<&BigRational> {
        self.leading().and_then(UniPoly::leading)
    }

    /// Iterate `(i, j, c)` for nonzero terms `c p^i q^j`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &BigRational)> {
        self.coeffs.iter().enumerate().flat_map(|(j, u)| {
            u.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(i, c)| (i, j, c))
        })
    }

    pub fn term_count(&self) -> usize {
        self.coeffs.iter().map(UniPoly::term_count).sum()
    }

    /// Constant value if this polynomial has no `p` or `q` dependence.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 if self.coeffs[0].coeffs().len() == 1 => Some(self.coeffs[0].coeffs()[0].clone()),
            _ => None,
        }
    }

    /// Single-term polynomial `c p^i q^j`, if it is one.
    pub fn as_monomial(&self) -> Option<(usize, usize, BigRational)> {
        let mut it = self.terms();
        let (i, j, c) = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some((i, j, c.clone()))
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(match (self.coeffs.get(i), other.coeffs.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        BiPoly::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        BiPoly {
            coeffs: self.coeffs.iter().map(UniPoly::neg).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![UniPoly::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        BiPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self.coeffs.iter().map(|u| u.scale(c)).collect(),
        }
    }

    pub fn scale_uni(&self, u: &UniPoly) -> Self {
        BiPoly::from_coeffs(self.coeffs.iter().map(|c| c.mul(u)).collect())
    }

    /// Multiply by `q^k`.
    fn shift_q(&self, k: usize) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![UniPoly::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BiPoly { coeffs }
    }

    /// Divide by `p^i q^j`; the caller guarantees divisibility.
    pub fn unshift(&self, i: usize, j: usize) -> Self {
        BiPoly::from_coeffs(self.coeffs.iter().skip(j).map(|u| u.unshift(i)).collect())
    }

    /// Largest `(i, j)` with `p^i q^j` dividing every term.
    pub fn monomial_content(&self) -> (usize, usize) {
        let mut i = usize::MAX;
        let mut j = usize::MAX;
        for (ti, tj, _) in self.terms() {
            i = i.min(ti);
            j = j.min(tj);
        }
        if i == usize::MAX {
            (0, 0)
        } else {
            (i, j)
        }
    }

    /// Content in Q[p]: monic gcd of all coefficients.
    pub fn content(&self) -> UniPoly {
        let mut g = UniPoly::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_uni_exact(&self, u: &UniPoly) -> Self {
        BiPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.div_exact(u).expect("content divides every coefficient"))
                .collect(),
        )
    }

    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let c = self.content();
        let pp = self.div_uni_exact(&c);
        match integer_normalizer(pp.coeffs.iter().flat_map(|u| u.coeffs.iter())) {
            Some(k) => pp.scale(&k),
            None => pp,
        }
    }

    /// Pseudo-remainder of `self` by `divisor` in Q[p][q].
    fn pseudo_rem(&self, divisor: &Self) -> Self {
        let d = divisor.degree_q().expect("pseudo-division by zero");
        let lead = divisor.leading().unwrap();
        let mut r = self.clone();
        while let Some(k) = r.degree_q() {
            if k < d {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = r.scale_uni(lead).sub(&divisor.shift_q(k - d).scale_uni(&lr));
        }
        r
    }

    /// Exact division in Q[p][q]; `None` if not divisible.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let d = divisor.degree_q().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap();
        let mut r = self.clone();
        let mut quot = vec![UniPoly::zero(); self.coeffs.len().saturating_sub(d)];
        while let Some(k) = r.degree_q() {
            if k < d {
                return None;
            }
            let t = r.leading().unwrap().div_exact(lead)?;
            r = r.sub(&divisor.shift_q(k - d).scale_uni(&t));
            quot[k - d] = t;
        }
        Some(BiPoly::from_coeffs(quot))
    }

    /// Normalize so the leading rational coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_rational() {
            Some(l) => self.scale(&l.recip()),
            None => BiPoly::zero(),
        }
    }

    /// Monic gcd via content splitting and a primitive pseudo-remainder sequence.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.monic();
        }
        if other.is_zero() {
            return self.monic();
        }
        let content = self.content().gcd(&other.content());
        let a = self.primitive_part();
        let b = other.primitive_part();
        if a.degree_q() == Some(0) || b.degree_q() == Some(0) {
            return BiPoly::from_uni(content).monic();
        }
        if let Some(g) = heuristic::bi_gcd(&a, &b) {
            return g.scale_uni(&content).monic();
        }
        Self::gcd_prs(a, b).scale_uni(&content).monic()
    }

    fn gcd_prs(mut a: Self, mut b: Self) -> Self {
        if a.degree_q() < b.degree_q() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if b.degree_q() == Some(0) {
                return BiPoly::one();
            }
            let r = a.pseudo_rem(&b);
            if r.is_zero() {
                return b;
            }
            a = b;
            b = r.primitive_part();
        }
    }

    pub fn eval(&self, p: &BigRational, q: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q + c.eval(p);
        }
        acc
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

/// Writes `c * p^i * q^j` (with exponents possibly negative), sign excluded.
pub(crate) fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    c: &BigRational,
    i: i64,
    j: i64,
) -> fmt::Result {
    let mut parts: Vec<String> = Vec::new();
    let abs = c.abs();
    let unit = abs.is_one();
    for (name, e) in [("p", i), ("q", j)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            e => parts.push(format!("{name}^{e}")),
        }
    }
    if !unit || parts.is_empty() {
        struct R<'a>(&'a BigRational);
        impl fmt::Display for R<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_rational(f, self.0)
            }
        }
        parts.insert(0, R(&abs).to_string());
    }
    write!(f, "{}", parts.join("*"))
}

/// Writes a Laurent polynomial `p^{-si} q^{-sj} * poly` as a signed sum.
pub(crate) fn write_laurent(
    f: &mut fmt::Formatter<'_>,
    poly: &BiPoly,
    shift_p: i64,
    shift_q: i64,
) -> fmt::Result {
    if poly.is_zero() {
        return write!(f, "0");
    }
    let mut terms: Vec<(usize, usize, &BigRational)> = poly.terms().collect();
    // Highest total degree first, then by p exponent.
    terms.sort_by_key(|&(i, j, _)| std::cmp::Reverse((i + j, i)));
    for (k, (i, j, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        match (k, neg) {
            (0, true) => write!(f, "-")?,
            (0, false) => {}
            (_, true) => write!(f, " - ")?,
            (_, false) => write!(f, " + ")?,
        }
        write_monomial(f, c, i as i64 - shift_p, j as i64 - shift_q)?;
    }
    Ok(())
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_laurent(f, self, 0, 0)
    }
}

#[cfg(test)]
mod tests {
    use crate::scalar::rational as rat;
    use super::*;

    fn p() -> BiPoly {
        BiPoly::monomial(rat(1, 1), 1, 0)
    }
    fn q() -> BiPoly {
        BiPoly::monomial(rat(1, 1), 0, 1)
    }
    fn c(n: i64) -> BiPoly {
        BiPoly::constant(rat(n, 1))
    }

    #[test]
    fn uni_gcd_is_monic() {
        // (p - 1)(p + 2) and (p - 1)(p - 3)
        let a = UniPoly::from_coeffs(vec![rat(-2, 1), rat(1, 1), rat(1, 1)]);
        let b = UniPoly::from_coeffs(vec![rat(3, 1), rat(-4, 1), rat(1, 1)]);
        assert_eq!(a.gcd(&b), UniPoly::from_coeffs(vec![rat(-1, 1), rat(1, 1)]));
    }

    fn small_bi(seed: &mut u64) -> BiPoly {
        let mut acc = BiPoly::zero();
        for i in 0..3 {
            for j in 0..3 {
                *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let k = ((*seed >> 33) % 7) as i64 - 3;
                if k != 0 {
                    acc = acc.add(&BiPoly::monomial(rat(k, 1), i, j));
                }
            }
        }
        acc
    }

    #[test]
    fn heuristic_gcd_agrees_with_prs() {
        let mut seed = 11u64;
        for _ in 0..40 {
            let (f, g, h) = (small_bi(&mut seed), small_bi(&mut seed), small_bi(&mut seed));
            if f.is_zero() || g.is_zero() || h.is_zero() {
                continue;
            }
            let (a, b) = (f.mul(&h), g.mul(&h));
            let fast = a.gcd(&b);
            let content = a.content().gcd(&b.content());
            let (pa, pb) = (a.primitive_part(), b.primitive_part());
            let slow = if pa.degree_q() == Some(0) || pb.degree_q() == Some(0) {
                BiPoly::from_uni(content).monic()
            } else {
                BiPoly::gcd_prs(pa, pb).scale_uni(&content).monic()
            };
            assert_eq!(fast, slow);
        }
        for _ in 0..40 {
            let ua = small_bi(&mut seed).mul(&small_bi(&mut seed)).content();
            let ub = small_bi(&mut seed).content();
            if ua.is_zero() || ub.is_zero() {
                continue;
            }
            let slow = UniPoly::gcd_prs(ua.integer_primitive(), ub.integer_primitive()).monic();
            assert_eq!(ua.gcd(&ub), slow);
        }
    }

    #[test]
    fn bi_gcd_recovers_common_factor() {
        let f = p().mul(&q()).sub(&c(1)); // pq - 1
        let g1 = q().add(&c(2)).mul(&f);
        let g2 = p().sub(&q()).mul(&f).mul(&f);
        assert_eq!(g1.gcd(&g2), f.monic());
        assert!(p().gcd(&q()).is_one());
    }

    #[test]
    fn exact_division_round_trip() {
        let f = p().mul(&q()).sub(&c(1));
        let g = p().add(&q().mul(&q()));
        let prod = f.mul(&g);
        assert_eq!(prod.div_exact(&g), Some(f.clone()));
        assert_eq!(p().div_exact(&q()), None);
    }

    #[test]
    fn evaluation() {
        let f = p().mul(&q()).sub(&c(1));
        assert_eq!(f.eval(&rat(2, 1), &rat(1, 2)), rat(0, 1));
        assert_eq!(f.eval(&rat(2, 1), &rat(3, 1)), rat(5, 1));
    }
}

/// Heuristic gcd by evaluation at a large integer and balanced base-ξ
/// reconstruction. A candidate is returned only after it divides both inputs;
/// with ξ above twice the smaller coefficient bound that makes it the gcd.
mod heuristic {
    use num::{BigInt, BigRational, Integer, Signed, Zero};

    use super::{BiPoly, UniPoly};

    const ATTEMPTS: usize = 6;

    fn int(c: &BigRational) -> &BigInt {
        debug_assert!(c.is_integer());
        c.numer()
    }

    fn norm(u: &UniPoly) -> BigInt {
        u.coeffs().iter().map(|c| int(c).abs()).max().unwrap_or_default()
    }

    fn eval_int(u: &UniPoly, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in u.coeffs().iter().rev() {
            acc = acc * x + int(c);
        }
        acc
    }

    /// Balanced base-`xi` digits of `n`, least significant first.
    fn digits(mut n: BigInt, xi: &BigInt) -> Vec<BigInt> {
        let half = xi / 2;
        let mut out = Vec::new();
        while !n.is_zero() {
            let mut d = n.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            n = (n - &d) / xi;
            out.push(d);
        }
        out
    }

    fn from_ints(v: Vec<BigInt>) -> UniPoly {
        UniPoly::from_coeffs(v.into_iter().map(BigRational::from_integer).collect())
    }

    fn next_xi(xi: &BigInt) -> BigInt {
        xi * BigInt::from(73794) / BigInt::from(27011) + 1
    }

    fn start(bound: BigInt) -> BigInt {
        bound * 2 + 29
    }

    /// Both inputs integral and primitive; result primitive with positive lead.
    pub(super) fn uni_gcd(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
        let mut xi = start(norm(a).min(norm(b)));
        for _ in 0..ATTEMPTS {
            let gamma = eval_int(a, &xi).gcd(&eval_int(b, &xi));
            if !gamma.is_zero() {
                let g = from_ints(digits(gamma, &xi)).integer_primitive();
                if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                    return Some(g);
                }
            }
            xi = next_xi(&xi);
        }
        None
    }

    /// gcd in Z[q] including the integer content.
    fn uni_gcd_with_content(a: &UniPoly, b: &UniPoly) -> Option<UniPoly> {
        let content = |u: &UniPoly| u.coeffs().iter().fold(BigInt::zero(), |g, c| g.gcd(int(c)));
        let (ca, cb) = (content(a), content(b));
        if ca.is_zero() || cb.is_zero() {
            return None;
        }
        let (pa, pb) = (a.integer_primitive(), b.integer_primitive());
        let g = if pa.degree() == Some(0) || pb.degree() == Some(0) {
            UniPoly::one()
        } else {
            uni_gcd(&pa, &pb)?
        };
        Some(g.scale(&BigRational::from_integer(ca.gcd(&cb))))
    }

    fn bi_norm(x: &BiPoly) -> BigInt {
        x.coeffs().iter().map(norm).max().unwrap_or_default()
    }

    /// Inputs integral, primitive over Z[p], of positive degree in q.
    pub(super) fn bi_gcd(a: &BiPoly, b: &BiPoly) -> Option<BiPoly> {
        let mut xi = start(bi_norm(a).min(bi_norm(b)));
        for _ in 0..ATTEMPTS {
            let ea = from_ints(a.coeffs().iter().map(|u| eval_int(u, &xi)).collect());
            let eb = from_ints(b.coeffs().iter().map(|u| eval_int(u, &xi)).collect());
            if ea.degree() == a.degree_q() && eb.degree() == b.degree_q() {
                if let Some(gamma) = uni_gcd_with_content(&ea, &eb) {
                    let g = BiPoly::from_coeffs(
                        gamma.coeffs().iter().map(|c| from_ints(digits(int(c).clone(), &xi))).collect(),
                    );
                    if !g.is_zero() {
                        let g = g.primitive_part();
                        if a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                            return Some(g);
                        }
                    }
                }
            }
            xi = next_xi(&xi);
        }
        None
    }
}
