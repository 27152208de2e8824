//! Reduced fractions of Laurent polynomials.
//!
//! Canonical form: the denominator is an ordinary polynomial (lowest exponent 0)
//! with constant coefficient 1, coprime to the numerator's polynomial part; all
//! v-power units live in the numerator. Zero is 0/1.

use super::poly::{exact_div, gcd_monic, LaurentPoly};
use num::{BigRational, One, Zero};

#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct RatFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// A pole at q = 1 found while evaluating the classical limit.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("pole at q = 1")]
pub struct PoleAtOne;

impl RatFn {
    pub fn zero() -> Self {
        RatFn { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFn { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn constant(c: BigRational) -> Self {
        RatFn { num: LaurentPoly::constant(c), den: LaurentPoly::one() }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFn { num: p, den: LaurentPoly::one() }
    }

    /// v^k (exponent in internal v units).
    pub fn v_pow(k: i64) -> Self {
        RatFn { num: LaurentPoly::monomial(k, BigRational::one()), den: LaurentPoly::one() }
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Self::reduce(num, den)
    }

    fn reduce(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // Move the denominator's v-power content into the numerator.
        let num = num.shifted(-den.low());
        let den = den.shifted(-den.low());
        let (num, den) = if den.is_one() {
            (num, den)
        } else {
            let g = gcd_monic(num.poly_coeffs(), den.poly_coeffs());
            if g.len() <= 1 {
                (num, den)
            } else {
                let qn = exact_div(num.poly_coeffs(), &g).expect("gcd divides numerator");
                let qd = exact_div(den.poly_coeffs(), &g).expect("gcd divides denominator");
                (
                    LaurentPoly::from_coeffs(num.low(), qn),
                    LaurentPoly::from_coeffs(0, qd),
                )
            }
        };
        // Make the denominator's lowest-degree coefficient 1.
        let c = den.coeff(den.low());
        debug_assert!(!c.is_zero());
        if c.is_one() {
            RatFn { num, den }
        } else {
            let inv = BigRational::one() / c;
            RatFn { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    /// Constructor for inputs already known to be coprime; skips the gcd but
    /// still normalizes shift and scale.
    fn new_coprime(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let num = num.shifted(-den.low());
        let den = den.shifted(-den.low());
        let c = den.coeff(0);
        if c.is_one() {
            RatFn { num, den }
        } else {
            let inv = BigRational::one() / c;
            RatFn { num: num.scale(&inv), den: den.scale(&inv) }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFn { num: self.num.add(&other.num), den: LaurentPoly::one() };
        }
        if self.den == other.den {
            return Self::reduce(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        let den = self.den.mul(&other.den);
        Self::reduce(num, den)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RatFn { num: self.num.mul(&other.num), den: LaurentPoly::one() };
        }
        Self::reduce(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFn { num: self.num.scale(c), den: self.den.clone() }
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inv(&self) -> Result<Self, DivisionByZero> {
        if self.is_zero() {
            return Err(DivisionByZero);
        }
        Ok(Self::new_coprime(self.den.shifted(-self.num.low()), {
            let mut p = self.num.clone();
            p = p.shifted(-p.low());
            p
        }))
    }

    pub fn pow(&self, k: i64) -> Result<Self, DivisionByZero> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = acc.mul(&base);
        }
        Ok(acc)
    }

    /// Evaluates at q = 1. The fraction is reduced, so a vanishing denominator
    /// is a genuine pole.
    pub fn eval_one(&self) -> Result<BigRational, PoleAtOne> {
        let d = self.den.eval_one();
        if d.is_zero() {
            return Err(PoleAtOne);
        }
        Ok(self.num.eval_one() / d)
    }

    /// Substitutes q -> 1/q (an automorphism of the field).
    pub fn subst_inv(&self) -> Self {
        Self::new_coprime(self.num.subst_inv(), self.den.subst_inv())
    }

    pub fn render(&self, r: i64) -> String {
        if self.den.is_one() {
            self.num.render(r)
        } else {
            format!("({}) / ({})", self.num.render(r), self.den.render(r))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("division by zero")]
pub struct DivisionByZero;

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn rat(n: i64) -> BigRational {
        BigRational::from_i64(n).unwrap()
    }

    fn lp(low: i64, cs: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(low, cs.iter().map(|&n| rat(n)).collect())
    }

    #[test]
    fn reduction_cancels_common_factor() {
        // (v^2 - 1)/(v - 1) = v + 1
        let f = RatFn::new(lp(0, &[-1, 0, 1]), lp(0, &[-1, 1]));
        assert_eq!(f, RatFn::from_poly(lp(0, &[1, 1])));
    }

    #[test]
    fn denominator_normalization() {
        // 1/(v^2 - 1): the denominator's constant coefficient is scaled to 1,
        // so the fraction is (-1)/(1 - v^2).
        let f = RatFn::new(lp(0, &[1]), lp(0, &[-1, 0, 1]));
        assert_eq!(f.den().coeff(0), rat(1));
        assert_eq!(f.num().coeff(0), rat(-1));
        assert!(f.mul(&RatFn::from_poly(lp(0, &[-1, 0, 1]))).is_one());
    }

    #[test]
    fn inv_roundtrip_with_units() {
        // f = v^-3 (v+2) / (1 + v^2)
        let f = RatFn::new(lp(-3, &[2, 1]), lp(0, &[1, 0, 1]));
        let g = f.inv().unwrap();
        assert!(f.mul(&g).is_one());
    }

    #[test]
    fn pole_detection() {
        let lam = RatFn::from_poly(lp(-1, &[-1, 0, 1])); // v - v^-1
        assert_eq!(lam.eval_one(), Ok(rat(0)));
        assert_eq!(lam.inv().unwrap().eval_one(), Err(PoleAtOne));
    }

    #[test]
    fn subst_inv_is_involution() {
        let f = RatFn::new(lp(-1, &[3, 1, 2]), lp(0, &[1, 5, 1]));
        assert_eq!(f.subst_inv().subst_inv(), f);
        // q + q^-1 is symmetric
        let sym = RatFn::from_poly(lp(-1, &[1, 0, 1]));
        assert_eq!(sym.subst_inv(), sym);
    }
}
