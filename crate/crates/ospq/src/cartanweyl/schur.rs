//! Partition-sum transforms between the two families of imaginary root
//! vectors, and the equivalent exp/log identity of their generating
//! functions.

use crate::scalar::Scalar;
use crate::Ctx;
use num::{BigRational, One};
use std::collections::BTreeMap;

/// Minimal ring interface the transforms need. Implemented by [`Element`]
/// (noncommutative, the real use) and by [`FormalPoly`] (commuting
/// indeterminates, used to state the roundtrip and exp/log identities).
///
/// [`Element`]: crate::algebra::Element
pub trait SchurElem: Clone {
    fn zero() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self, ctx: &Ctx) -> Self;
    fn scale(&self, ctx: &Ctx, c: &Scalar) -> Self;
}

impl SchurElem for crate::algebra::Element {
    fn zero() -> Self {
        crate::algebra::Element::zero()
    }

    fn add(&self, other: &Self) -> Self {
        crate::algebra::Element::add(self, other)
    }

    fn mul(&self, other: &Self, ctx: &Ctx) -> Self {
        crate::algebra::Element::mul(self, other, ctx)
    }

    fn scale(&self, ctx: &Ctx, c: &Scalar) -> Self {
        crate::algebra::Element::scale(self, ctx, c)
    }
}

/// All multiplicity vectors (p_1, ..., p_n) with p_1 + 2 p_2 + ... + n p_n = n.
pub(crate) fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if remaining == 0 {
            out.push(current.clone());
            return;
        }
        if max_part == 0 {
            return;
        }
        for count in (0..=remaining / max_part).rev() {
            current[max_part - 1] = count;
            rec(remaining - count * max_part, max_part - 1, current, out);
            current[max_part - 1] = 0;
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut vec![0; n], &mut out);
    out
}

fn factorial(k: usize) -> BigRational {
    let mut f = BigRational::one();
    for i in 2..=k {
        f *= BigRational::from_integer(i.into());
    }
    f
}

/// family[0]^{parts[0]} * family[1]^{parts[1]} * ... left to right.
fn partition_product<T: SchurElem>(ctx: &Ctx, family: &[T], parts: &[usize]) -> T {
    let mut acc: Option<T> = None;
    for (i, &p) in parts.iter().enumerate() {
        for _ in 0..p {
            acc = Some(match acc {
                Some(prev) => prev.mul(&family[i], ctx),
                None => family[i].clone(),
            });
        }
    }
    acc.expect("a partition of n >= 1 has at least one part")
}

/// Primed imaginary vector as a partition sum over the unprimed family:
/// sum over p_1 + 2p_2 + ... + np_n = n of
/// (q - q^-1)^{sum p_i - 1} / (p_1! ... p_n!) * e_d^{p_1} ... e_{nd}^{p_n}.
/// `family[k-1]` is the degree-k input.
pub fn schur_forward<T: SchurElem>(ctx: &Ctx, n: usize, family: &[T]) -> T {
    transform(ctx, n, family, false)
}

/// Inverse transform: same partition sum over the primed family with
/// coefficient (q^-1 - q)^{sum p_i - 1} (sum p_i - 1)! / (p_1! ... p_n!).
pub fn schur_inverse<T: SchurElem>(ctx: &Ctx, n: usize, family: &[T]) -> T {
    transform(ctx, n, family, true)
}

fn transform<T: SchurElem>(ctx: &Ctx, n: usize, family: &[T], inverse: bool) -> T {
    assert!(n >= 1, "transform degree must be positive");
    assert!(family.len() >= n, "need inputs of degree 1..={n}");
    let lambda = if inverse {
        ctx.lambda_ratfn().neg()
    } else {
        ctx.lambda_ratfn().clone()
    };
    let mut out = T::zero();
    for parts in partitions(n) {
        let total: usize = parts.iter().sum();
        let mut rat = if inverse { factorial(total - 1) } else { BigRational::one() };
        for &p in &parts {
            rat /= factorial(p);
        }
        let coeff = Scalar::from_ratfn(
            lambda
                .pow((total - 1) as i64)
                .expect("nonnegative power of a nonzero function")
                .scale(&rat),
        );
        out = out.add(&partition_product(ctx, family, &parts).scale(ctx, &coeff));
    }
    out
}

/// Polynomial in commuting indeterminates x_1, x_2, ... with [`Scalar`]
/// coefficients. Keys are exponent vectors trimmed of trailing zeros, so
/// arity never needs declaring.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalPoly {
    terms: BTreeMap<Vec<u32>, Scalar>,
}

impl FormalPoly {
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), Scalar::one());
        FormalPoly { terms }
    }

    /// x_{i+1} (zero-based index).
    pub fn indeterminate(i: usize) -> Self {
        let mut key = vec![0; i + 1];
        key[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(key, Scalar::one());
        FormalPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert(&mut self, mut key: Vec<u32>, c: Scalar) {
        while key.last() == Some(&0) {
            key.pop();
        }
        let entry = match self.terms.remove(&key) {
            Some(prev) => prev.add(&c),
            None => c,
        };
        if !entry.is_zero() {
            self.terms.insert(key, entry);
        }
    }

    /// Renders with `names[i]` for x_{i+1}, coefficients in braces as in
    /// [`Element::render`](crate::algebra::Element::render).
    pub fn render(&self, ctx: &Ctx, names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (key, c) in &self.terms {
            let mut factors = Vec::new();
            if !c.is_one() || key.is_empty() {
                factors.push(format!("{{{}}}", c.render(ctx)));
            }
            for (i, &e) in key.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].clone()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            parts.push(factors.join(" * "));
        }
        parts.join(" + ")
    }
}

impl SchurElem for FormalPoly {
    fn zero() -> Self {
        FormalPoly::default()
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (key, c) in &other.terms {
            out.insert(key.clone(), c.clone());
        }
        out
    }

    fn mul(&self, other: &Self, ctx: &Ctx) -> Self {
        let mut out = FormalPoly::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut key = vec![0u32; k1.len().max(k2.len())];
                for (i, slot) in key.iter_mut().enumerate() {
                    *slot = k1.get(i).copied().unwrap_or(0) + k2.get(i).copied().unwrap_or(0);
                }
                out.insert(key, c1.mul(c2, ctx));
            }
        }
        out
    }

    fn scale(&self, ctx: &Ctx, c: &Scalar) -> Self {
        let mut out = FormalPoly::default();
        for (key, c0) in &self.terms {
            out.insert(key.clone(), c0.mul(c, ctx));
        }
        out
    }
}

/// Checks 1 + E'(u) = exp E(u) coefficient-by-coefficient through u^-order,
/// where E(u) = (q - q^-1) sum_k x_k u^-k over commuting indeterminates and
/// E'(u) is built from the forward transform of the same family.
pub fn verify_generating_identity(ctx: &Ctx, order: usize) -> bool {
    let lambda = Scalar::from_ratfn(ctx.lambda_ratfn().clone());
    let family: Vec<FormalPoly> = (0..order).map(FormalPoly::indeterminate).collect();

    // truncated series in u^-1: index k holds the u^-k coefficient
    let mut e_series = vec![FormalPoly::zero(); order + 1];
    for k in 1..=order {
        e_series[k] = family[k - 1].scale(ctx, &lambda);
    }

    let series_mul = |x: &[FormalPoly], y: &[FormalPoly]| {
        let mut out = vec![FormalPoly::zero(); order + 1];
        for i in 0..=order {
            for j in 0..=order - i {
                if !x[i].is_zero() && !y[j].is_zero() {
                    out[i + j] = out[i + j].add(&x[i].mul(&y[j], ctx));
                }
            }
        }
        out
    };

    // exp(E) - 1 = sum_{j>=1} E^j / j!, exact at this truncation since E has
    // no constant term
    let mut expm1 = vec![FormalPoly::zero(); order + 1];
    let mut power = vec![FormalPoly::zero(); order + 1];
    power[0] = FormalPoly::one();
    for j in 1..=order {
        power = series_mul(&power, &e_series);
        let inv_fact = Scalar::from_rational(factorial(j).recip());
        for k in 0..=order {
            expm1[k] = expm1[k].add(&power[k].scale(ctx, &inv_fact));
        }
    }

    (1..=order).all(|n| expm1[n] == schur_forward(ctx, n, &family).scale(ctx, &lambda))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (1..=n)
            .map(|k| if k == 1 { "x(d)".to_string() } else { format!("x({k}d)") })
            .collect()
    }

    #[test]
    fn partition_counts_match_the_partition_function() {
        let counts: Vec<usize> = (1..=6).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11]);
        // every multiplicity vector really partitions n
        for parts in partitions(5) {
            let n: usize = parts.iter().enumerate().map(|(i, p)| (i + 1) * p).sum();
            assert_eq!(n, 5);
        }
    }

    #[test]
    fn degree_one_transform_is_the_identity() {
        let ctx = Ctx::default_unit();
        let family = vec![FormalPoly::indeterminate(0)];
        assert_eq!(schur_forward(&ctx, 1, &family), family[0]);
        assert_eq!(schur_inverse(&ctx, 1, &family), family[0]);
    }

    #[test]
    fn degree_two_expansions() {
        let ctx = Ctx::default_unit();
        let family: Vec<FormalPoly> = (0..2).map(FormalPoly::indeterminate).collect();
        let half_lambda = Scalar::from_ratfn(
            ctx.lambda_ratfn().scale(&BigRational::new(1.into(), 2.into())),
        );
        let square = family[0].mul(&family[0], &ctx);

        let fwd = schur_forward(&ctx, 2, &family);
        assert_eq!(fwd, family[1].add(&square.scale(&ctx, &half_lambda)));
        assert_eq!(fwd.render(&ctx, &names(2)), "x(2d) + {(1/2*q - 1/2*q^-1)} * x(d)^2");

        let inv = schur_inverse(&ctx, 2, &family);
        assert_eq!(inv, family[1].add(&square.scale(&ctx, &half_lambda.neg())));
    }

    #[test]
    fn forward_then_inverse_is_the_identity() {
        let ctx = Ctx::default_unit();
        let unprimed: Vec<FormalPoly> = (0..4).map(FormalPoly::indeterminate).collect();
        let primed: Vec<FormalPoly> =
            (1..=4).map(|k| schur_forward(&ctx, k, &unprimed)).collect();
        for n in 1..=4 {
            assert_eq!(schur_inverse(&ctx, n, &primed), unprimed[n - 1]);
        }
    }

    #[test]
    fn generating_functions_exponentiate() {
        let ctx = Ctx::default_unit();
        assert!(verify_generating_identity(&ctx, 3));
    }
}
