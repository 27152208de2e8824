//! The affine root lattice of osp(1|2)^(1): weights, the bilinear form,
//! Cartan matrices, root enumeration, and the two normal orderings of the
//! reduced positive system.

use num::{BigInt, BigRational, One, Signed, Zero};
use std::fmt;

/// Integer weight c_delta·δ + c_alpha·α + c_d·d.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Weight {
    pub c_delta: i64,
    pub c_alpha: i64,
    pub c_d: i64,
}

impl Weight {
    pub const ZERO: Weight = Weight { c_delta: 0, c_alpha: 0, c_d: 0 };
    pub const ALPHA: Weight = Weight { c_delta: 0, c_alpha: 1, c_d: 0 };
    pub const DELTA: Weight = Weight { c_delta: 1, c_alpha: 0, c_d: 0 };
    pub const D: Weight = Weight { c_delta: 0, c_alpha: 0, c_d: 1 };

    pub fn new(c_delta: i64, c_alpha: i64, c_d: i64) -> Self {
        Weight { c_delta, c_alpha, c_d }
    }

    pub fn is_zero(&self) -> bool {
        *self == Weight::ZERO
    }
}

impl std::ops::Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        Weight::new(self.c_delta + o.c_delta, self.c_alpha + o.c_alpha, self.c_d + o.c_d)
    }
}

impl std::ops::Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        Weight::new(self.c_delta - o.c_delta, self.c_alpha - o.c_alpha, self.c_d - o.c_d)
    }
}

impl std::ops::Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight::new(-self.c_delta, -self.c_alpha, -self.c_d)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (c, sym) in [(self.c_delta, "d"), (self.c_alpha, "a"), (self.c_d, "D")] {
            if c == 0 {
                continue;
            }
            if !first && c > 0 {
                write!(f, "+")?;
            }
            match c {
                1 => write!(f, "{sym}")?,
                -1 => write!(f, "-{sym}")?,
                _ => write!(f, "{c}{sym}")?,
            }
            first = false;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormError {
    #[error("(α,α) must be positive, got {0}")]
    NonPositive(BigRational),
    #[error("(d,d) is undefined; the pairing was consulted on two weights both containing d")]
    DdUndefined,
}

/// The symmetric bilinear form: (α,α) configurable, (δ,δ)=(δ,α)=(d,α)=0,
/// (δ,d)=1, and (d,d) deliberately undefined.
#[derive(Clone, Debug)]
pub struct BilinearForm {
    alpha_sq: BigRational,
}

impl BilinearForm {
    pub fn new(alpha_sq: BigRational) -> Result<Self, FormError> {
        if !alpha_sq.is_positive() {
            return Err(FormError::NonPositive(alpha_sq));
        }
        Ok(BilinearForm { alpha_sq })
    }

    pub fn alpha_sq(&self) -> &BigRational {
        &self.alpha_sq
    }

    pub fn pairing(&self, w1: &Weight, w2: &Weight) -> Result<BigRational, FormError> {
        if w1.c_d != 0 && w2.c_d != 0 {
            return Err(FormError::DdUndefined);
        }
        let alpha_part = &self.alpha_sq * BigRational::from_integer(BigInt::from(w1.c_alpha * w2.c_alpha));
        let d_part = BigRational::from_integer(BigInt::from(w1.c_delta * w2.c_d + w1.c_d * w2.c_delta));
        Ok(alpha_part + d_part)
    }
}

impl From<&crate::Ctx> for BilinearForm {
    fn from(ctx: &crate::Ctx) -> Self {
        BilinearForm { alpha_sq: ctx.alpha_sq().clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("({c_delta}, {c_alpha}) is not a root: roots are nδ+mα with |m| ≤ 2, excluding 0")]
pub struct NotARoot {
    pub c_delta: i64,
    pub c_alpha: i64,
}

/// A root nδ + mα of the affine system: |m| ≤ 2, (n,m) ≠ (0,0).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RootLabel {
    c_delta: i64,
    c_alpha: i64,
}

impl RootLabel {
    pub const ALPHA: RootLabel = RootLabel { c_delta: 0, c_alpha: 1 };
    pub const DELTA: RootLabel = RootLabel { c_delta: 1, c_alpha: 0 };
    pub const ALPHA0: RootLabel = RootLabel { c_delta: 1, c_alpha: -2 };

    pub fn new(c_delta: i64, c_alpha: i64) -> Result<Self, NotARoot> {
        if c_alpha.abs() > 2 || (c_delta == 0 && c_alpha == 0) {
            return Err(NotARoot { c_delta, c_alpha });
        }
        Ok(RootLabel { c_delta, c_alpha })
    }

    pub fn c_delta(&self) -> i64 {
        self.c_delta
    }

    pub fn c_alpha(&self) -> i64 {
        self.c_alpha
    }

    pub fn weight(&self) -> Weight {
        Weight::new(self.c_delta, self.c_alpha, 0)
    }

    pub fn is_imaginary(&self) -> bool {
        self.c_alpha == 0
    }

    pub fn is_real(&self) -> bool {
        !self.is_imaginary()
    }

    /// ℤ₂ degree of the attached root vector: 1 exactly for nδ ± α.
    pub fn parity(&self) -> u8 {
        (self.c_alpha.abs() == 1) as u8
    }

    pub fn is_positive(&self) -> bool {
        self.c_delta > 0 || (self.c_delta == 0 && self.c_alpha > 0)
    }

    /// True for roots dropped when passing to the reduced system: the doubles
    /// 2(nδ ± α), i.e. c_alpha = ±2 with even c_delta.
    pub fn is_double(&self) -> bool {
        self.c_alpha.abs() == 2 && self.c_delta % 2 == 0
    }

    pub fn negated(&self) -> RootLabel {
        RootLabel { c_delta: -self.c_delta, c_alpha: -self.c_alpha }
    }

    fn checked_add(&self, o: &RootLabel) -> Option<RootLabel> {
        RootLabel::new(self.c_delta + o.c_delta, self.c_alpha + o.c_alpha).ok()
    }
}

impl fmt::Display for RootLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.c_delta, self.c_alpha) {
            (0, m) => match m {
                1 => write!(f, "a"),
                -1 => write!(f, "-a"),
                _ => write!(f, "{m}a"),
            },
            (n, 0) => {
                if n == 1 {
                    write!(f, "d")
                } else if n == -1 {
                    write!(f, "-d")
                } else {
                    write!(f, "{n}d")
                }
            }
            (n, m) => {
                match n {
                    1 => write!(f, "d")?,
                    -1 => write!(f, "-d")?,
                    _ => write!(f, "{n}d")?,
                }
                match m {
                    1 => write!(f, "+a"),
                    -1 => write!(f, "-a"),
                    m if m > 0 => write!(f, "+{m}a"),
                    m => write!(f, "{m}a"),
                }
            }
        }
    }
}

/// The four Cartan matrices: the standard 2×2 matrix, its symmetrization,
/// the extended 3×3 symmetric matrix (rows/columns d, α₀, α), and the
/// inverse of the extended matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanData {
    pub standard: [[i64; 2]; 2],
    pub symmetric: [[BigRational; 2]; 2],
    pub extended: [[BigRational; 3]; 3],
    pub extended_inverse: [[BigRational; 3]; 3],
}

pub fn cartan_data(form: &BilinearForm) -> CartanData {
    let s = form.alpha_sq().clone();
    let rat = |n: i64| BigRational::from_integer(BigInt::from(n));
    let symmetric = [
        [rat(4) * &s, rat(-2) * &s],
        [rat(-2) * &s, s.clone()],
    ];
    // Extended rows/cols ordered (d, α₀, α); the (d,d) slot is 0 by the
    // standard convention that makes the matrix invertible.
    let extended = [
        [rat(0), rat(1), rat(0)],
        [rat(1), rat(4) * &s, rat(-2) * &s],
        [rat(0), rat(-2) * &s, s.clone()],
    ];
    let extended_inverse = invert3(&extended).expect("extended Cartan matrix is nonsingular");
    CartanData {
        standard: [[2, -1], [-4, 2]],
        symmetric,
        extended,
        extended_inverse,
    }
}

/// Exact 3×3 inversion by Gauss-Jordan elimination.
fn invert3(m: &[[BigRational; 3]; 3]) -> Option<[[BigRational; 3]; 3]> {
    let mut a: Vec<Vec<BigRational>> = (0..3)
        .map(|i| {
            let mut row: Vec<BigRational> = m[i].to_vec();
            row.extend((0..3).map(|j| {
                if i == j { BigRational::one() } else { BigRational::zero() }
            }));
            row
        })
        .collect();
    for col in 0..3 {
        let pivot = (col..3).find(|&i| !a[i][col].is_zero())?;
        a.swap(col, pivot);
        let p = a[col][col].clone();
        for x in &mut a[col] {
            *x /= &p;
        }
        for i in 0..3 {
            if i != col && !a[i][col].is_zero() {
                let f = a[i][col].clone();
                for j in 0..6 {
                    let sub = &f * &a[col][j];
                    a[i][j] -= sub;
                }
            }
        }
    }
    let mut out: [[BigRational; 3]; 3] = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][j + 3].clone();
        }
    }
    Some(out)
}

/// All positive roots with c_delta ≤ cutoff, sorted by (c_delta, c_alpha).
/// With `reduced`, the doubles 2α and 2kδ±2α are omitted.
pub fn enumerate_positive(cutoff: i64, reduced: bool) -> Vec<RootLabel> {
    assert!(cutoff >= 0, "cutoff must be nonnegative");
    let mut out = Vec::new();
    for n in 0..=cutoff {
        for m in -2..=2i64 {
            let Ok(r) = RootLabel::new(n, m) else { continue };
            if !r.is_positive() {
                continue;
            }
            if reduced && r.is_double() {
                continue;
            }
            out.push(r);
        }
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Direction {
    Clockwise,
    Anticlockwise,
}

impl Direction {
    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::Clockwise => "clockwise",
            Direction::Anticlockwise => "anticlockwise",
        }
    }
}

/// One of the two normal orderings of the reduced positive system, truncated
/// to roots with c_delta ≤ cutoff.
///
/// Clockwise runs the c_alpha > 0 fan by increasing slope c_delta/c_alpha,
/// then δ, 2δ, …, then the c_alpha < 0 fan by decreasing slope, ending at
/// δ−α, δ−2α. Anticlockwise is the exact reverse except that the imaginary
/// block stays in increasing order.
pub fn normal_order(cutoff: i64, direction: Direction) -> Vec<RootLabel> {
    assert!(cutoff >= 1, "cutoff must be at least 1");
    let all = enumerate_positive(cutoff, true);
    let mut pos: Vec<RootLabel> = all.iter().copied().filter(|r| r.c_alpha() > 0).collect();
    let mut neg: Vec<RootLabel> = all.iter().copied().filter(|r| r.c_alpha() < 0).collect();
    let imag: Vec<RootLabel> = all.iter().copied().filter(|r| r.is_imaginary()).collect();
    // Slope comparison c_delta/|c_alpha| by cross-multiplication; no two
    // distinct reduced real roots on the same side share a slope.
    let slope_cmp = |x: &RootLabel, y: &RootLabel| {
        (x.c_delta() * y.c_alpha().abs()).cmp(&(y.c_delta() * x.c_alpha().abs()))
    };
    pos.sort_by(slope_cmp);
    neg.sort_by(slope_cmp);
    let mut out = Vec::with_capacity(all.len());
    match direction {
        Direction::Clockwise => {
            out.extend(pos);
            out.extend(imag);
            neg.reverse();
            out.extend(neg);
        }
        Direction::Anticlockwise => {
            out.extend(neg);
            out.extend(imag);
            pos.reverse();
            out.extend(pos);
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OrderInputError {
    #[error("duplicate root {0} in sequence")]
    Duplicate(RootLabel),
    #[error("root {0} is not positive")]
    NotPositive(RootLabel),
}

/// A betweenness failure: `sum` = `beta1` + `beta2` does not lie between them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub beta1: RootLabel,
    pub beta2: RootLabel,
    pub sum: RootLabel,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {} = {} is not between its summands", self.beta1, self.beta2, self.sum)
    }
}

/// Checks the normal-ordering property: whenever γ = β₁ + β₂ with all three
/// in the sequence (and β₁, β₂ not both imaginary, β₁ ≠ β₂), γ must sit
/// between β₁ and β₂. Returns the first violation in scan order, if any.
pub fn validate_normal_order(seq: &[RootLabel]) -> Result<Option<Violation>, OrderInputError> {
    let mut pos_of = std::collections::BTreeMap::new();
    for (i, r) in seq.iter().enumerate() {
        if !r.is_positive() {
            return Err(OrderInputError::NotPositive(*r));
        }
        if pos_of.insert(*r, i).is_some() {
            return Err(OrderInputError::Duplicate(*r));
        }
    }
    for i in 0..seq.len() {
        for j in (i + 1)..seq.len() {
            let (b1, b2) = (seq[i], seq[j]);
            if b1.is_imaginary() && b2.is_imaginary() {
                continue;
            }
            let Some(sum) = b1.checked_add(&b2) else { continue };
            let Some(&p) = pos_of.get(&sum) else { continue };
            if !(i < p && p < j) {
                return Ok(Some(Violation { beta1: b1, beta2: b2, sum }));
            }
        }
    }
    Ok(None)
}
