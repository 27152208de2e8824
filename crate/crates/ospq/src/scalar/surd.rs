//! Exact elements of ℚ adjoined square roots of positive integers:
//! finite sums Σ cᵢ·√fᵢ with squarefree radicands fᵢ.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SurdRat {
    /// squarefree radicand -> coefficient; key 1 is the rational part. No zero values.
    terms: BTreeMap<u64, BigRational>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurdError {
    #[error("cannot take the square root of a negative rational")]
    NegativeRadicand,
    #[error("radicand too large for exact surd arithmetic")]
    RadicandOverflow,
    #[error("inverse of a multi-term surd expression is not supported")]
    InvUnsupported,
    #[error("division by zero")]
    DivisionByZero,
}

/// Splits n = m^2 * f with f squarefree; returns (m, f).
fn squarefree_split(mut n: u64) -> (u64, u64) {
    debug_assert!(n > 0);
    let mut square = 1u64;
    let mut free = 1u64;
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0u32;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            square *= d.pow(e / 2);
            if e % 2 == 1 {
                free *= d;
            }
        }
        d += 1;
    }
    free *= n; // remaining prime factor (exponent 1)
    (square, free)
}

impl SurdRat {
    pub fn zero() -> Self {
        SurdRat::default()
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(c: BigRational) -> Self {
        let mut s = SurdRat::default();
        if !c.is_zero() {
            s.terms.insert(1, c);
        }
        s
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// √x for a non-negative rational x, as an exact surd (positive root).
    pub fn sqrt_of(x: &BigRational) -> Result<Self, SurdError> {
        if x.is_negative() {
            return Err(SurdError::NegativeRadicand);
        }
        if x.is_zero() {
            return Ok(Self::zero());
        }
        // √(p/q) = √(pq) / q
        let pq = x.numer() * x.denom();
        let n: u64 = pq.try_into().map_err(|_| SurdError::RadicandOverflow)?;
        let (m, f) = squarefree_split(n);
        let coeff = BigRational::new(BigInt::from(m), x.denom().clone());
        let mut s = SurdRat::default();
        s.terms.insert(f, coeff);
        Ok(s)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&1).is_some_and(|c| c.is_one())
    }

    /// The rational part if the element is purely rational (including zero).
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => self.terms.get(&1).cloned(),
            _ => None,
        }
    }

    pub fn neg(&self) -> Self {
        SurdRat { terms: self.terms.iter().map(|(&f, c)| (f, -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&f, c) in &other.terms {
            let e = terms.entry(f).or_insert_with(BigRational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(&f);
            }
        }
        SurdRat { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SurdRat::default();
        for (&f1, c1) in &self.terms {
            for (&f2, c2) in &other.terms {
                let g = num::integer::gcd(f1, f2);
                let f = (f1 / g) * (f2 / g); // squarefree product radicand
                let coeff = c1 * c2 * BigRational::from_integer(BigInt::from(g));
                let e = out.terms.entry(f).or_insert_with(BigRational::zero);
                *e += coeff;
                if e.is_zero() {
                    out.terms.remove(&f);
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SurdRat { terms: self.terms.iter().map(|(&f, x)| (f, x * c)).collect() }
    }

    /// Inverse of a single-term surd c·√f: equals √f/(c·f).
    pub fn inv(&self) -> Result<Self, SurdError> {
        match self.terms.len() {
            0 => Err(SurdError::DivisionByZero),
            1 => {
                let (&f, c) = self.terms.iter().next().unwrap();
                let coeff = BigRational::one() / (c * BigRational::from_integer(BigInt::from(f)));
                let mut s = SurdRat::default();
                s.terms.insert(f, coeff);
                Ok(s)
            }
            _ => Err(SurdError::InvUnsupported),
        }
    }
}

impl fmt::Display for SurdRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&rad, c) in &self.terms {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let show = !abs.is_one() || rad == 1;
            if show {
                if abs.is_integer() {
                    write!(f, "{}", abs.numer())?;
                } else {
                    write!(f, "{}/{}", abs.numer(), abs.denom())?;
                }
            }
            if rad != 1 {
                if show {
                    write!(f, "*")?;
                }
                write!(f, "sqrt({rad})")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn sqrt_reduces_radicand() {
        // √8 = 2√2, √(9/4) = 3/2, √(1/2) = (1/2)√2
        let s8 = SurdRat::sqrt_of(&BigRational::from_i64(8).unwrap()).unwrap();
        assert_eq!(s8, SurdRat::sqrt_of(&BigRational::from_i64(2).unwrap()).unwrap().scale(&rat(2, 1)));
        let s94 = SurdRat::sqrt_of(&rat(9, 4)).unwrap();
        assert_eq!(s94.as_rational(), Some(rat(3, 2)));
        let shalf = SurdRat::sqrt_of(&rat(1, 2)).unwrap();
        assert_eq!(shalf.mul(&shalf).as_rational(), Some(rat(1, 2)));
    }

    #[test]
    fn products_close() {
        let s2 = SurdRat::sqrt_of(&rat(2, 1)).unwrap();
        let s6 = SurdRat::sqrt_of(&rat(6, 1)).unwrap();
        // √2·√6 = 2√3
        let p = s2.mul(&s6);
        assert_eq!(p, SurdRat::sqrt_of(&rat(3, 1)).unwrap().scale(&rat(2, 1)));
    }

    #[test]
    fn inverse_of_single_term() {
        let x = SurdRat::sqrt_of(&rat(2, 1)).unwrap().scale(&rat(3, 1)); // 3√2
        let inv = x.inv().unwrap();
        assert!(x.mul(&inv).is_one());
        let two = SurdRat::from_int(2);
        assert!(two.mul(&two.inv().unwrap()).is_one());
        let multi = x.add(&SurdRat::one());
        assert_eq!(multi.inv(), Err(SurdError::InvUnsupported));
    }

    #[test]
    fn display_formats() {
        let x = SurdRat::from_rational(rat(3, 2)).add(&SurdRat::sqrt_of(&rat(2, 1)).unwrap().scale(&rat(-1, 2)));
        assert_eq!(x.to_string(), "3/2 - 1/2*sqrt(2)");
    }
}
