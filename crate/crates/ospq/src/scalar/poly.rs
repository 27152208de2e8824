//! Dense Laurent polynomials in one variable over arbitrary-precision rationals.
//!
//! `LaurentPoly` stores coefficients in ascending exponent order starting at `low`.
//! Invariant: `coeffs` is empty (the zero polynomial) or both its first and last
//! entries are nonzero.

use num::{BigRational, One, Signed, Zero};
use std::fmt::Write as _;

#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { low: 0, coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(0, vec![c])
    }

    /// v^exp with coefficient `c`.
    pub fn monomial(exp: i64, c: BigRational) -> Self {
        Self::from_coeffs(exp, vec![c])
    }

    /// Builds from raw parts, trimming zero coefficients at both ends.
    pub fn from_coeffs(low: i64, coeffs: Vec<BigRational>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead_zeros = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead_zeros > 0 {
            self.coeffs.drain(..lead_zeros);
            self.low += lead_zeros as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Lowest exponent with nonzero coefficient. Zero polynomial reports 0.
    pub fn low(&self) -> i64 {
        self.low
    }

    /// Highest exponent with nonzero coefficient. Zero polynomial reports 0.
    pub fn high(&self) -> i64 {
        if self.coeffs.is_empty() { 0 } else { self.low + self.coeffs.len() as i64 - 1 }
    }

    pub fn coeff(&self, exp: i64) -> BigRational {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn shifted(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    pub fn neg(&self) -> Self {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high().max(other.high());
        let mut coeffs = vec![BigRational::zero(); (high - low + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - low) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.low - low) as usize + i] += c;
        }
        Self::from_coeffs(low, coeffs)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Self::from_coeffs(self.low + other.low, coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn eval_one(&self) -> BigRational {
        self.coeffs.iter().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Substitutes v -> 1/v (reverses the coefficient sequence).
    pub fn subst_inv(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        LaurentPoly { low: -self.high(), coeffs }
    }

    /// The ordinary-polynomial coefficient vector, i.e. this Laurent polynomial with its
    /// v-power content stripped.
    pub fn poly_coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Renders with exponents divided by `r` (the variable is q^(1/r) internally).
    pub fn render(&self, r: i64) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let exp = self.low + i as i64;
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    out.push('-');
                }
                first = false;
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = !abs.is_one() || exp == 0;
            if show_coeff {
                if abs.is_integer() {
                    let _ = write!(out, "{}", abs.numer());
                } else {
                    let _ = write!(out, "{}/{}", abs.numer(), abs.denom());
                }
            }
            if exp != 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push('q');
                if exp != r {
                    if exp % r == 0 {
                        let _ = write!(out, "^{}", exp / r);
                    } else {
                        let _ = write!(out, "^({}/{})", exp, r);
                    }
                }
            }
            if exp == r && !show_coeff {
                // plain "q"
            }
        }
        out
    }
}

/// Quotient and remainder of ordinary polynomials given as coefficient slices
/// (ascending degree, leading entry nonzero). Panics if `den` is empty.
fn div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!den.is_empty(), "division by zero polynomial");
    if num.len() < den.len() {
        return (Vec::new(), num.to_vec());
    }
    let mut rem = num.to_vec();
    let mut quot = vec![BigRational::zero(); num.len() - den.len() + 1];
    let dlead = den.last().unwrap();
    for k in (0..quot.len()).rev() {
        let top = rem[k + den.len() - 1].clone();
        if top.is_zero() {
            continue;
        }
        let f = top / dlead;
        for (j, d) in den.iter().enumerate() {
            let v = &f * d;
            rem[k + j] -= v;
        }
        quot[k] = f;
    }
    while rem.last().is_some_and(|c| c.is_zero()) {
        rem.pop();
    }
    (quot, rem)
}

/// Monic gcd of two ordinary polynomials (coefficient slices in ascending degree).
/// Returns the empty slice only when both inputs are zero.
pub fn gcd_monic(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut r0: Vec<BigRational> = a.to_vec();
    let mut r1: Vec<BigRational> = b.to_vec();
    while r1.last().is_some_and(|c| c.is_zero()) {
        r1.pop();
    }
    while r0.last().is_some_and(|c| c.is_zero()) {
        r0.pop();
    }
    while !r1.is_empty() {
        let (_, rem) = div_rem(&r0, &r1);
        r0 = r1;
        r1 = rem;
        // Keep the remainder monic to contain coefficient growth.
        if let Some(lead) = r1.last().cloned() {
            if !lead.is_one() {
                for c in &mut r1 {
                    *c /= &lead;
                }
            }
        }
    }
    if let Some(lead) = r0.last().cloned() {
        if !lead.is_one() {
            for c in &mut r0 {
                *c /= &lead;
            }
        }
    }
    r0
}

/// Exact division of ordinary polynomials; `None` if the remainder is nonzero.
pub fn exact_div(num: &[BigRational], den: &[BigRational]) -> Option<Vec<BigRational>> {
    if num.is_empty() {
        return Some(Vec::new());
    }
    let (q, r) = div_rem(num, den);
    if r.is_empty() { Some(q) } else { None }
}
