//! Exact construction of the Cartan-Weyl basis of the quantum affine
//! superalgebra U_q(osp(1|2)^(1)) from its Chevalley presentation, together
//! with machinery to verify the defining relations, the Hopf structure, the
//! root-vector recursions and their commutation relations, and the classical
//! q -> 1 loop-superalgebra limit.
//!
//! All arithmetic is exact: coefficients live in ℚ(q) extended by the two
//! square roots s_a = √[2(α,α)] and s_b = √([2(α,α)] − [(α,α)]) that the
//! root-vector normalisations require. Nothing is evaluated numerically.

pub mod algebra;
pub mod cartanweyl;
pub mod classical;
pub mod hopf;
pub mod rewrite;
pub mod roots;
pub mod scalar;

use num::{BigInt, BigRational, Signed};
use scalar::{qint_ratfn, RatFn, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CtxError {
    #[error("(α,α) must be positive, got {0}")]
    NonPositiveAlphaSq(BigRational),
    #[error("(α,α) denominator too large")]
    DenominatorOverflow,
}

/// Shared context: the value of (α,α) and derived constants.
///
/// Exponents of q are rationals with denominator dividing r, the reduced
/// denominator of (α,α); internally everything is a Laurent polynomial in
/// v = q^(1/r) so that exponents stay integral.
#[derive(Debug, Clone)]
pub struct Ctx {
    alpha_sq: BigRational,
    r: i64,
    a: RatFn,
    b: RatFn,
    lambda: RatFn,
}

impl Ctx {
    pub fn new(alpha_sq: BigRational) -> Result<Self, CtxError> {
        if !alpha_sq.is_positive() {
            return Err(CtxError::NonPositiveAlphaSq(alpha_sq));
        }
        let r: i64 = alpha_sq
            .denom()
            .try_into()
            .map_err(|_| CtxError::DenominatorOverflow)?;
        let two = BigRational::from_integer(BigInt::from(2));
        let a = qint_ratfn(r, &(&alpha_sq * &two));
        let b = a.sub(&qint_ratfn(r, &alpha_sq));
        let lambda = RatFn::v_pow(r).sub(&RatFn::v_pow(-r));
        Ok(Ctx { alpha_sq, r, a, b, lambda })
    }

    /// The standard normalisation (α,α) = 1.
    pub fn default_unit() -> Self {
        Self::new(BigRational::from_integer(BigInt::from(1))).expect("1 is positive")
    }

    pub fn alpha_sq(&self) -> &BigRational {
        &self.alpha_sq
    }

    /// r with v = q^(1/r): every occurring q-exponent is a multiple of 1/r.
    pub fn exponent_denominator(&self) -> i64 {
        self.r
    }

    /// s_a² = [2(α,α)].
    pub fn a_ratfn(&self) -> &RatFn {
        &self.a
    }

    /// s_b² = [2(α,α)] − [(α,α)].
    pub fn b_ratfn(&self) -> &RatFn {
        &self.b
    }

    /// q − q⁻¹.
    pub fn lambda_ratfn(&self) -> &RatFn {
        &self.lambda
    }

    pub fn lambda_scalar(&self) -> Scalar {
        Scalar::from_ratfn(self.lambda.clone())
    }

    /// Converts a rational q-exponent to integral v-units; panics if the
    /// exponent is not a multiple of 1/r (impossible for pairing-derived
    /// exponents, which is the only way exponents arise).
    pub fn v_exp(&self, x: &BigRational) -> i64 {
        let e = x * BigRational::from_integer(BigInt::from(self.r));
        assert!(e.is_integer(), "q-exponent {x} is not a multiple of 1/{}", self.r);
        e.to_integer().try_into().expect("q-exponent overflow")
    }

    /// True for exponents expressible in v-units, i.e. multiples of 1/r.
    pub fn representable(&self, x: &BigRational) -> bool {
        (x * BigRational::from_integer(BigInt::from(self.r))).is_integer()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ctx_constants_at_unit_norm() {
        let ctx = Ctx::default_unit();
        assert_eq!(ctx.exponent_denominator(), 1);
        // a = [2] = q + q^-1, b = [2] - [1] = q - 1 + q^-1
        assert_eq!(ctx.a_ratfn().render(1), "q + q^-1");
        assert_eq!(ctx.b_ratfn().render(1), "q - 1 + q^-1");
        assert_eq!(ctx.lambda_ratfn().render(1), "q - q^-1");
    }

    #[test]
    fn ctx_rejects_nonpositive() {
        assert!(Ctx::new(BigRational::from_integer(BigInt::from(0))).is_err());
        assert!(Ctx::new(BigRational::from_integer(BigInt::from(-2))).is_err());
    }

    #[test]
    fn fractional_norm_uses_v_units() {
        let ctx = Ctx::new(BigRational::new(BigInt::from(3), BigInt::from(2))).unwrap();
        assert_eq!(ctx.exponent_denominator(), 2);
        // a = [3] = q^2 + 1 + q^-2 in q-units = v^4 + 1 + v^-4
        assert_eq!(ctx.a_ratfn().render(2), "q^2 + 1 + q^-2");
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(ctx.v_exp(&half), 1);
        assert!(ctx.representable(&half));
        assert!(!ctx.representable(&BigRational::new(BigInt::from(1), BigInt::from(3))));
    }
}
