//! The coefficient field ℚ(q)(s_a, s_b) with s_a² = [2(α,α)] and
//! s_b² = [2(α,α)] − [(α,α)].
//!
//! A `Scalar` holds four coordinates over the rational-function field, one per
//! basis element {1, s_a, s_b, s_a·s_b}. Multiplication reduces s_a² and s_b²
//! via their defining values, so no coordinate outside the basis ever appears.
//! Internally the variable is v = q^(1/r) where r is the denominator of (α,α),
//! which keeps every occurring exponent integral.

mod poly;
mod ratfn;
mod surd;

pub use poly::LaurentPoly;
pub use ratfn::{DivisionByZero, PoleAtOne, RatFn};
pub use surd::{SurdError, SurdRat};

use crate::Ctx;
use num::{BigInt, BigRational, One, Zero};

/// Basis labels, used in error messages and rendering.
const BASIS: [&str; 4] = ["1", "s_a", "s_b", "s_a*s_b"];

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Scalar {
    /// Coordinates over {1, s_a, s_b, s_a·s_b}.
    c: [RatFn; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("division by zero scalar")]
    DivisionByZero,
    #[error("the {coordinate} coordinate has a pole at q = 1")]
    PoleAtOne { coordinate: &'static str },
    #[error(transparent)]
    Surd(#[from] SurdError),
    #[error("cannot parse scalar: {0}")]
    Parse(String),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { c: [RatFn::zero(), RatFn::zero(), RatFn::zero(), RatFn::zero()] }
    }

    pub fn one() -> Self {
        Scalar { c: [RatFn::one(), RatFn::zero(), RatFn::zero(), RatFn::zero()] }
    }

    pub fn from_ratfn(f: RatFn) -> Self {
        Scalar { c: [f, RatFn::zero(), RatFn::zero(), RatFn::zero()] }
    }

    pub fn from_rational(x: BigRational) -> Self {
        Self::from_ratfn(RatFn::constant(x))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn s_a() -> Self {
        let mut s = Self::zero();
        s.c[1] = RatFn::one();
        s
    }

    pub fn s_b() -> Self {
        let mut s = Self::zero();
        s.c[2] = RatFn::one();
        s
    }

    pub fn coord(&self, i: usize) -> &RatFn {
        &self.c[i]
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(RatFn::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1].is_zero() && self.c[2].is_zero() && self.c[3].is_zero()
    }

    pub fn neg(&self) -> Self {
        Scalar { c: [self.c[0].neg(), self.c[1].neg(), self.c[2].neg(), self.c[3].neg()] }
    }

    pub fn add(&self, other: &Self) -> Self {
        Scalar {
            c: [
                self.c[0].add(&other.c[0]),
                self.c[1].add(&other.c[1]),
                self.c[2].add(&other.c[2]),
                self.c[3].add(&other.c[3]),
            ],
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self, ctx: &Ctx) -> Self {
        let x = &self.c;
        let y = &other.c;
        let a = ctx.a_ratfn();
        let b = ctx.b_ratfn();
        let ab = a.mul(b);
        // (x0 + x1 s_a + x2 s_b + x3 s_a s_b)(y0 + ...) with s_a² = a, s_b² = b.
        let z0 = x[0]
            .mul(&y[0])
            .add(&a.mul(&x[1].mul(&y[1])))
            .add(&b.mul(&x[2].mul(&y[2])))
            .add(&ab.mul(&x[3].mul(&y[3])));
        let z1 = x[0]
            .mul(&y[1])
            .add(&x[1].mul(&y[0]))
            .add(&b.mul(&x[2].mul(&y[3]).add(&x[3].mul(&y[2]))));
        let z2 = x[0]
            .mul(&y[2])
            .add(&x[2].mul(&y[0]))
            .add(&a.mul(&x[1].mul(&y[3]).add(&x[3].mul(&y[1]))));
        let z3 = x[0].mul(&y[3]).add(&x[3].mul(&y[0])).add(&x[1].mul(&y[2])).add(&x[2].mul(&y[1]));
        Scalar { c: [z0, z1, z2, z3] }
    }

    pub fn scale(&self, f: &RatFn) -> Self {
        Scalar {
            c: [self.c[0].mul(f), self.c[1].mul(f), self.c[2].mul(f), self.c[3].mul(f)],
        }
    }

    /// Conjugate flipping the sign of s_a.
    fn conj_a(&self) -> Self {
        Scalar { c: [self.c[0].clone(), self.c[1].neg(), self.c[2].clone(), self.c[3].neg()] }
    }

    /// Conjugate flipping the sign of s_b.
    fn conj_b(&self) -> Self {
        Scalar { c: [self.c[0].clone(), self.c[1].clone(), self.c[2].neg(), self.c[3].neg()] }
    }

    /// Exact field inverse via the product of the three nontrivial conjugates.
    pub fn inv(&self, ctx: &Ctx) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let ca = self.conj_a();
        let cb = self.conj_b();
        let cab = ca.conj_b();
        let p = ca.mul(&cb, ctx).mul(&cab, ctx);
        let n = self.mul(&p, ctx);
        debug_assert!(
            n.c[1].is_zero() && n.c[2].is_zero() && n.c[3].is_zero(),
            "norm must land in the base field"
        );
        let n0_inv = n.c[0].inv().map_err(|_| ScalarError::DivisionByZero)?;
        Ok(p.scale(&n0_inv))
    }

    /// q^x for a rational exponent x; x must be a multiple of 1/r.
    pub fn q_pow(ctx: &Ctx, x: &BigRational) -> Self {
        Self::from_ratfn(RatFn::v_pow(ctx.v_exp(x)))
    }

    /// The symmetric q-integer [n] = (qⁿ − q⁻ⁿ)/(q − q⁻¹), expanded.
    pub fn qint(ctx: &Ctx, n: i64) -> Self {
        Self::from_ratfn(qint_ratfn(ctx.exponent_denominator(), &BigRational::from_integer(BigInt::from(n))))
    }

    /// [x] for rational x (multiples of 1/r); a rational function when x is not integral.
    pub fn qint_rat(ctx: &Ctx, x: &BigRational) -> Self {
        Self::from_ratfn(qint_ratfn(ctx.exponent_denominator(), x))
    }

    /// Substitutes q -> 1/q in every coordinate (s_a and s_b are fixed: their
    /// defining values are symmetric under the substitution).
    pub fn subst_q_inv(&self) -> Self {
        Scalar {
            c: [
                self.c[0].subst_inv(),
                self.c[1].subst_inv(),
                self.c[2].subst_inv(),
                self.c[3].subst_inv(),
            ],
        }
    }

    /// Evaluates at q = 1, sending s_a to √(2(α,α)) and s_b to √(α,α)
    /// (the positive roots of the q = 1 values of their squares).
    pub fn limit_q1(&self, ctx: &Ctx) -> Result<SurdRat, ScalarError> {
        let mut vals = Vec::with_capacity(4);
        for (i, f) in self.c.iter().enumerate() {
            vals.push(f.eval_one().map_err(|PoleAtOne| ScalarError::PoleAtOne { coordinate: BASIS[i] })?);
        }
        let two = BigRational::from_integer(BigInt::from(2));
        let sa = SurdRat::sqrt_of(&(ctx.alpha_sq() * &two))?;
        let sb = SurdRat::sqrt_of(ctx.alpha_sq())?;
        let mut out = SurdRat::from_rational(vals[0].clone());
        out = out.add(&sa.scale(&vals[1]));
        out = out.add(&sb.scale(&vals[2]));
        out = out.add(&sa.mul(&sb).scale(&vals[3]));
        Ok(out)
    }

    /// Canonical text form, e.g. `(q + q^-1 - 1)*s_a`. Round-trips through [`Scalar::parse`].
    pub fn render(&self, ctx: &Ctx) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let r = ctx.exponent_denominator();
        let mut parts = Vec::new();
        for (i, f) in self.c.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let core = format!("({})", f.render(r));
            if i == 0 {
                parts.push(core);
            } else {
                parts.push(format!("{}*{}", core, BASIS[i]));
            }
        }
        parts.join(" + ")
    }

    /// Parses the canonical text form produced by [`Scalar::render`].
    pub fn parse(ctx: &Ctx, input: &str) -> Result<Self, ScalarError> {
        parse_scalar(ctx, input)
    }
}

/// [x] = (q^x − q^−x)/(q − q^−1) as a reduced rational function in v = q^(1/r).
pub(crate) fn qint_ratfn(r: i64, x: &BigRational) -> RatFn {
    if x.is_zero() {
        return RatFn::zero();
    }
    let e = x * BigRational::from_integer(BigInt::from(r));
    assert!(e.is_integer(), "q-exponent is not a multiple of 1/r");
    let e: i64 = e.to_integer().try_into().expect("q-exponent overflow");
    if e % r == 0 {
        // Integer n = e/r: expand directly as q^(n-1) + q^(n-3) + ... + q^(1-n).
        let n = e / r;
        let (sign, n) = if n < 0 { (-BigRational::one(), -n) } else { (BigRational::one(), n) };
        let mut p = LaurentPoly::zero();
        for i in 0..n {
            p = p.add(&LaurentPoly::monomial(r * (n - 1 - 2 * i), sign.clone()));
        }
        RatFn::from_poly(p)
    } else {
        let num = LaurentPoly::monomial(e, BigRational::one())
            .sub(&LaurentPoly::monomial(-e, BigRational::one()));
        let den = LaurentPoly::monomial(r, BigRational::one())
            .sub(&LaurentPoly::monomial(-r, BigRational::one()));
        RatFn::new(num, den)
    }
}

// ---------------------------------------------------------------------------
// Text parsing
// ---------------------------------------------------------------------------

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Parser { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, ch: u8) -> bool {
        if self.peek() == Some(ch) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn eat_str(&mut self, t: &str) -> bool {
        self.skip_ws();
        if self.s[self.pos..].starts_with(t.as_bytes()) {
            self.pos += t.len();
            true
        } else {
            false
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.s.len()
    }

    fn parse_uint(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.s[start..self.pos]).ok()?.parse().ok()
    }

    fn parse_int(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let neg = self.eat(b'-');
        let n = self.parse_uint()?;
        Some(if neg { -n } else { n })
    }

    /// A rational literal `a` or `a/b` (no sign).
    fn parse_rational(&mut self) -> Option<BigRational> {
        let n = self.parse_uint()?;
        let save = self.pos;
        if self.eat(b'/') {
            if let Some(d) = self.parse_uint() {
                return Some(BigRational::new(n, d));
            }
            self.pos = save;
        }
        Some(BigRational::from_integer(n))
    }

    /// Exponent after `^`: integer, or `(a/b)`/`(-a/b)` as a rational of v-units times r.
    fn parse_exponent(&mut self, r: i64) -> Result<i64, String> {
        if self.eat(b'(') {
            let neg = self.eat(b'-');
            let num = self.parse_uint().ok_or("expected exponent numerator")?;
            let mut x = BigRational::from_integer(num);
            if self.eat(b'/') {
                let den = self.parse_uint().ok_or("expected exponent denominator")?;
                x /= BigRational::from_integer(den);
            }
            if !self.eat(b')') {
                return Err("expected ')' after exponent".into());
            }
            if neg {
                x = -x;
            }
            let e = x * BigRational::from_integer(BigInt::from(r));
            if !e.is_integer() {
                return Err(format!("exponent is not a multiple of 1/{r}"));
            }
            e.to_integer().try_into().map_err(|_| "exponent overflow".to_string())
        } else {
            let n = self.parse_int().ok_or("expected integer exponent")?;
            let e = n * BigInt::from(r);
            e.try_into().map_err(|_| "exponent overflow".to_string())
        }
    }

    /// One monomial of a Laurent polynomial: [rational] ['*'] ['q' ['^' exp]].
    fn parse_poly_term(&mut self, r: i64) -> Result<LaurentPoly, String> {
        let coeff = self.parse_rational();
        let mut saw_star = false;
        if coeff.is_some() {
            saw_star = self.eat(b'*');
        }
        self.skip_ws();
        if self.peek() == Some(b'q') {
            self.pos += 1;
            let exp = if self.eat(b'^') { self.parse_exponent(r)? } else { r };
            Ok(LaurentPoly::monomial(exp, coeff.unwrap_or_else(BigRational::one)))
        } else if saw_star {
            Err("dangling '*'".into())
        } else {
            let c = coeff.ok_or("expected coefficient or q")?;
            Ok(LaurentPoly::constant(c))
        }
    }

    /// A sign-separated Laurent polynomial, stopping at a top-level `)` or end.
    fn parse_poly(&mut self, r: i64) -> Result<LaurentPoly, String> {
        let mut acc = LaurentPoly::zero();
        let mut first = true;
        loop {
            self.skip_ws();
            let sign = if self.eat(b'-') {
                -BigRational::one()
            } else if self.eat(b'+') {
                BigRational::one()
            } else if first {
                BigRational::one()
            } else {
                break;
            };
            let term = self.parse_poly_term(r)?;
            acc = acc.add(&term.scale(&sign));
            first = false;
            match self.peek() {
                None | Some(b')') => break,
                _ => {}
            }
        }
        Ok(acc)
    }

    /// `poly` or `(poly) / (poly)`.
    fn parse_ratfn(&mut self, r: i64) -> Result<RatFn, String> {
        if self.peek() == Some(b'(') {
            // Could be "(num) / (den)".
            let save = self.pos;
            self.pos += 1;
            let num = self.parse_poly(r)?;
            if !self.eat(b')') {
                return Err("expected ')'".into());
            }
            if self.eat(b'/') {
                if !self.eat(b'(') {
                    return Err("expected '(' after '/'".into());
                }
                let den = self.parse_poly(r)?;
                if !self.eat(b')') {
                    return Err("expected ')'".into());
                }
                if den.is_zero() {
                    return Err("zero denominator".into());
                }
                return Ok(RatFn::new(num, den));
            }
            self.pos = save;
        }
        Ok(RatFn::from_poly(self.parse_poly(r)?))
    }
}

fn parse_scalar(ctx: &Ctx, input: &str) -> Result<Scalar, ScalarError> {
    let r = ctx.exponent_denominator();
    let mut p = Parser::new(input);
    let mut out = Scalar::zero();
    let err = |m: String| ScalarError::Parse(m);
    if p.at_end() {
        return Err(err("empty input".into()));
    }
    let mut first = true;
    while !p.at_end() {
        let negated = if p.eat(b'-') {
            true
        } else if p.eat(b'+') {
            false
        } else if first {
            false
        } else {
            return Err(err("expected '+' or '-' between terms".into()));
        };
        first = false;
        // Each term is (ratfn) optionally followed by *s_a / *s_b / *s_a*s_b,
        // or a bare ratfn (coordinate 0), or a bare basis symbol.
        let coord;
        let mut f;
        if p.peek() == Some(b'(') {
            p.pos += 1;
            f = p.parse_ratfn(r).map_err(err)?;
            if !p.eat(b')') {
                return Err(err("expected ')'".into()));
            }
            coord = parse_basis_suffix(&mut p);
        } else if p.eat_str("s_a") {
            f = RatFn::one();
            coord = if p.eat(b'*') && p.eat_str("s_b") { 3 } else { 1 };
        } else if p.eat_str("s_b") {
            f = RatFn::one();
            coord = 2;
        } else {
            f = p.parse_ratfn(r).map_err(err)?;
            coord = 0;
        }
        if negated {
            f = f.neg();
        }
        out.c[coord] = out.c[coord].add(&f);
    }
    Ok(out)
}

fn parse_basis_suffix(p: &mut Parser<'_>) -> usize {
    let save = p.pos;
    if p.eat(b'*') {
        if p.eat_str("s_a") {
            let save2 = p.pos;
            if p.eat(b'*') {
                if p.eat_str("s_b") {
                    return 3;
                }
                p.pos = save2;
            }
            return 1;
        }
        if p.eat_str("s_b") {
            return 2;
        }
        p.pos = save;
    }
    0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Ctx;

    #[test]
    fn qint_expansion() {
        let ctx = Ctx::default_unit();
        assert!(Scalar::qint(&ctx, 0).is_zero());
        assert!(Scalar::qint(&ctx, 1).is_one());
        // [2] = q + q^-1
        let q2 = Scalar::qint(&ctx, 2);
        assert_eq!(q2.render(&ctx), "(q + q^-1)");
        // [-n] = -[n]
        assert_eq!(Scalar::qint(&ctx, -3), Scalar::qint(&ctx, 3).neg());
    }

    #[test]
    fn defining_squares() {
        let ctx = Ctx::default_unit();
        let sa2 = Scalar::s_a().mul(&Scalar::s_a(), &ctx);
        assert_eq!(sa2, Scalar::qint(&ctx, 2));
        let sb2 = Scalar::s_b().mul(&Scalar::s_b(), &ctx);
        assert_eq!(sb2, Scalar::qint(&ctx, 2).sub(&Scalar::qint(&ctx, 1)));
    }

    #[test]
    fn inverse_of_mixed_element() {
        let ctx = Ctx::default_unit();
        let x = Scalar::s_a().add(&Scalar::s_b()).add(&Scalar::from_int(1));
        let inv = x.inv(&ctx).unwrap();
        assert!(x.mul(&inv, &ctx).is_one());
        assert_eq!(Scalar::zero().inv(&ctx), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn fractional_alpha_sq_exponents() {
        // (α,α) = 1/2: s_a² = [1] = 1, and q^(1/2) is representable.
        let ctx = Ctx::new(BigRational::new(BigInt::from(1), BigInt::from(2))).unwrap();
        let sa2 = Scalar::s_a().mul(&Scalar::s_a(), &ctx);
        assert!(sa2.is_one());
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let qh = Scalar::q_pow(&ctx, &half);
        assert_eq!(qh.render(&ctx), "(q^(1/2))");
        assert_eq!(Scalar::parse(&ctx, &qh.render(&ctx)).unwrap(), qh);
    }

    #[test]
    fn render_parse_roundtrip() {
        let ctx = Ctx::default_unit();
        let lam = ctx.lambda_scalar();
        let x = Scalar::s_a()
            .scale(&lam.coord(0).inv().unwrap())
            .add(&Scalar::qint(&ctx, 3))
            .sub(&Scalar::s_b().mul(&Scalar::s_a(), &ctx));
        let text = x.render(&ctx);
        let back = Scalar::parse(&ctx, &text).unwrap();
        assert_eq!(back, x);
        assert_eq!(Scalar::parse(&ctx, "0").unwrap(), Scalar::zero());
    }

    #[test]
    fn limit_values() {
        let ctx = Ctx::default_unit();
        // [2] -> 2
        let v = Scalar::qint(&ctx, 2).limit_q1(&ctx).unwrap();
        assert_eq!(v, SurdRat::from_int(2));
        // s_b -> 1, s_a -> sqrt 2
        assert_eq!(Scalar::s_b().limit_q1(&ctx).unwrap(), SurdRat::one());
        let s2 = SurdRat::sqrt_of(&BigRational::from_integer(BigInt::from(2))).unwrap();
        assert_eq!(Scalar::s_a().limit_q1(&ctx).unwrap(), s2);
        // 1/(q - q^-1) has a pole
        let lam_inv = ctx.lambda_scalar().inv(&ctx).unwrap();
        assert_eq!(
            lam_inv.limit_q1(&ctx),
            Err(ScalarError::PoleAtOne { coordinate: "1" })
        );
    }
}
