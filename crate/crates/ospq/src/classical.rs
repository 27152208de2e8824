//! The q = 1 side of the construction: osp(1|2) in its 3×3 fundamental
//! representation, the loop superalgebra with 2-cocycle, central extension
//! and derivation, the Chevalley embedding of the affine superalgebra, and
//! the current realization of the root vectors with exact bracket checks.

use crate::roots::RootLabel;
use crate::scalar::{Scalar, SurdError, SurdRat};
use crate::Ctx;
use num::{BigInt, BigRational, Signed, Zero};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassicalError {
    #[error("the finite bilinear form needs u-independent arguments")]
    UDependent,
    #[error("surd arithmetic: {0}")]
    Surd(#[from] SurdError),
    #[error("(α,α) must be positive, got {0}")]
    NonPositiveAlphaSq(BigRational),
}

/// Laurent polynomial in the loop variable u over exact surd rationals.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    /// degree -> coefficient; no zero values
    terms: BTreeMap<i64, SurdRat>,
}

impl UPoly {
    pub fn zero() -> Self {
        UPoly::default()
    }

    pub fn monomial(deg: i64, c: SurdRat) -> Self {
        let mut p = UPoly::default();
        if !c.is_zero() {
            p.terms.insert(deg, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg: i64) -> SurdRat {
        self.terms.get(&deg).cloned().unwrap_or_default()
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.terms.keys().copied()
    }

    pub fn neg(&self) -> Self {
        UPoly { terms: self.terms.iter().map(|(&d, c)| (d, c.neg())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (&d, c) in &other.terms {
            let e = terms.entry(d).or_insert_with(SurdRat::zero);
            *e = e.add(c);
            if e.is_zero() {
                terms.remove(&d);
            }
        }
        UPoly { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = UPoly::default();
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &other.terms {
                let e = out.terms.entry(d1 + d2).or_insert_with(SurdRat::zero);
                *e = e.add(&c1.mul(c2));
                if e.is_zero() {
                    out.terms.remove(&(d1 + d2));
                }
            }
        }
        out
    }

    pub fn scale(&self, c: &SurdRat) -> Self {
        if c.is_zero() {
            return UPoly::zero();
        }
        UPoly { terms: self.terms.iter().map(|(&d, x)| (d, x.mul(c))).collect() }
    }

    /// Multiplication by u^k.
    pub fn shift(&self, k: i64) -> Self {
        UPoly { terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect() }
    }

    /// The Euler operator u·d/du: deg n terms pick up a factor n.
    pub fn euler(&self) -> Self {
        UPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&d, _)| d != 0)
                .map(|(&d, c)| (d, c.scale(&BigRational::from_integer(BigInt::from(d)))))
                .collect(),
        }
    }

    /// d/du: deg n goes to n·(coefficient) at deg n-1.
    pub fn derivative(&self) -> Self {
        UPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&d, _)| d != 0)
                .map(|(&d, c)| (d - 1, c.scale(&BigRational::from_integer(BigInt::from(d)))))
                .collect(),
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&d, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = c.to_string();
            let wrapped = if cs.contains(' ') { format!("({cs})") } else { cs };
            match d {
                0 => write!(f, "{wrapped}")?,
                1 => write!(f, "{wrapped}*u")?,
                _ => write!(f, "{wrapped}*u^{d}")?,
            }
        }
        Ok(())
    }
}

fn parity(i: usize) -> u8 {
    (i != 0) as u8
}

/// 3×3 supermatrix in grading (1|2): row/column 0 even, rows/columns 1, 2
/// odd; an entry at (i, j) has parity parity(i) + parity(j) mod 2.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SuperMatrix {
    entries: [UPoly; 9],
}

impl SuperMatrix {
    pub fn zero() -> Self {
        SuperMatrix { entries: std::array::from_fn(|_| UPoly::zero()) }
    }

    /// c·E_{ij}·u^deg.
    pub fn unit(i: usize, j: usize, deg: i64, c: SurdRat) -> Self {
        let mut m = SuperMatrix::zero();
        m.entries[3 * i + j] = UPoly::monomial(deg, c);
        m
    }

    pub fn entry(&self, i: usize, j: usize) -> &UPoly {
        &self.entries[3 * i + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(UPoly::is_zero)
    }

    pub fn neg(&self) -> Self {
        SuperMatrix { entries: std::array::from_fn(|k| self.entries[k].neg()) }
    }

    pub fn add(&self, other: &Self) -> Self {
        SuperMatrix { entries: std::array::from_fn(|k| self.entries[k].add(&other.entries[k])) }
    }

    pub fn sub(&self, other: &Self) -> Self {
        SuperMatrix { entries: std::array::from_fn(|k| self.entries[k].sub(&other.entries[k])) }
    }

    pub fn scale(&self, c: &SurdRat) -> Self {
        SuperMatrix { entries: std::array::from_fn(|k| self.entries[k].scale(c)) }
    }

    /// Multiplication by u^k.
    pub fn shift(&self, k: i64) -> Self {
        SuperMatrix { entries: std::array::from_fn(|i| self.entries[i].shift(k)) }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SuperMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = UPoly::zero();
                for k in 0..3 {
                    acc = acc.add(&self.entry(i, k).mul(other.entry(k, j)));
                }
                out.entries[3 * i + j] = acc;
            }
        }
        out
    }

    /// str = m00 − m11 − m22.
    pub fn supertrace(&self) -> UPoly {
        self.entry(0, 0).sub(self.entry(1, 1)).sub(self.entry(2, 2))
    }

    /// Splits into the (even, odd) entry-parity parts.
    pub fn parity_parts(&self) -> (SuperMatrix, SuperMatrix) {
        let mut even = SuperMatrix::zero();
        let mut odd = SuperMatrix::zero();
        for i in 0..3 {
            for j in 0..3 {
                let target = if (parity(i) + parity(j)) % 2 == 0 { &mut even } else { &mut odd };
                target.entries[3 * i + j] = self.entries[3 * i + j].clone();
            }
        }
        (even, odd)
    }

    pub fn is_u_independent(&self) -> bool {
        self.entries.iter().all(|p| p.degrees().all(|d| d == 0))
    }

    /// Constant matrices per u-degree.
    pub fn u_components(&self) -> BTreeMap<i64, SuperMatrix> {
        let mut out: BTreeMap<i64, SuperMatrix> = BTreeMap::new();
        for i in 0..3 {
            for j in 0..3 {
                for d in self.entry(i, j).degrees().collect::<Vec<_>>() {
                    let c = self.entry(i, j).coeff(d);
                    let m = out.entry(d).or_insert_with(SuperMatrix::zero);
                    m.entries[3 * i + j] = m.entries[3 * i + j].add(&UPoly::monomial(0, c));
                }
            }
        }
        out
    }

    /// The Euler operator u·d/du applied entrywise.
    pub fn euler(&self) -> Self {
        SuperMatrix { entries: std::array::from_fn(|k| self.entries[k].euler()) }
    }

    /// d/du applied entrywise.
    pub fn derivative(&self) -> Self {
        SuperMatrix { entries: std::array::from_fn(|k| self.entries[k].derivative()) }
    }
}

impl fmt::Display for SuperMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..3 {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..3 {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Supercommutator xy − (−1)^{|x||y|}yx, extended bilinearly over the
/// parity decomposition (odd·odd anticommutes, everything else commutes).
pub fn super_commutator(x: &SuperMatrix, y: &SuperMatrix) -> SuperMatrix {
    let (x0, x1) = x.parity_parts();
    let (y0, y1) = y.parity_parts();
    let mut out = x1.mul(&y1).add(&y1.mul(&x1));
    for (a, b) in [(&x0, &y0), (&x0, &y1), (&x1, &y0)] {
        out = out.add(&a.mul(b)).sub(&b.mul(a));
    }
    out
}

/// Element of the extended loop superalgebra: a Laurent-matrix part plus
/// exact coefficients of the central element c and the derivation d.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LoopElement {
    pub matrix: SuperMatrix,
    pub central: SurdRat,
    pub derivation: SurdRat,
}

impl LoopElement {
    pub fn zero() -> Self {
        LoopElement {
            matrix: SuperMatrix::zero(),
            central: SurdRat::zero(),
            derivation: SurdRat::zero(),
        }
    }

    pub fn from_matrix(matrix: SuperMatrix) -> Self {
        LoopElement { matrix, ..LoopElement::zero() }
    }

    pub fn central(c: SurdRat) -> Self {
        LoopElement { central: c, ..LoopElement::zero() }
    }

    pub fn derivation(c: SurdRat) -> Self {
        LoopElement { derivation: c, ..LoopElement::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero() && self.central.is_zero() && self.derivation.is_zero()
    }

    pub fn neg(&self) -> Self {
        LoopElement {
            matrix: self.matrix.neg(),
            central: self.central.neg(),
            derivation: self.derivation.neg(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        LoopElement {
            matrix: self.matrix.add(&other.matrix),
            central: self.central.add(&other.central),
            derivation: self.derivation.add(&other.derivation),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &SurdRat) -> Self {
        LoopElement {
            matrix: self.matrix.scale(c),
            central: self.central.mul(c),
            derivation: self.derivation.mul(c),
        }
    }
}

impl fmt::Display for LoopElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.matrix.is_zero() {
            parts.push(self.matrix.to_string());
        }
        if !self.central.is_zero() {
            parts.push(format!("({})*c", self.central));
        }
        if !self.derivation.is_zero() {
            parts.push(format!("({})*d", self.derivation));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// The affine Chevalley generators on the classical side.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ChevalleyGen {
    Hd,
    HAlpha,
    HAlpha0,
    EAlpha,
    EMinusAlpha,
    EAlpha0,
    EMinusAlpha0,
}

pub const CHEVALLEY_GENS: [ChevalleyGen; 7] = [
    ChevalleyGen::Hd,
    ChevalleyGen::HAlpha,
    ChevalleyGen::HAlpha0,
    ChevalleyGen::EAlpha,
    ChevalleyGen::EMinusAlpha,
    ChevalleyGen::EAlpha0,
    ChevalleyGen::EMinusAlpha0,
];

#[derive(Serialize, Debug, Clone)]
pub struct ClassicalCheck {
    pub name: String,
    pub pass: bool,
    pub residual: String,
}

#[derive(Serialize, Debug, Clone)]
pub struct ClassicalReport {
    pub checks: Vec<ClassicalCheck>,
    pub pass: bool,
}

/// The classical context: (α,α), the solved osp(1|2) matrices, and the
/// calibrated normalization of the invariant form.
///
/// The matrices solve the weight and pairing constraints of the finite
/// subalgebra: h_α = diag(0, s, −s) with s = (α,α), e_α and e_{−α} odd with
/// [h_α, e_{±α}] = ±s·e_{±α} and [e_α, e_{−α}] = h_α, e_{2α} = e_α², and
/// e_{−2α} scaled so the degree-1 affine pairing closes on the coroot.
pub struct ClassicalCtx {
    alpha_sq: BigRational,
    h_a: SuperMatrix,
    e_a: SuperMatrix,
    e_ma: SuperMatrix,
    e_2a: SuperMatrix,
    e_m2a: SuperMatrix,
    kappa: SurdRat,
    sqrt_2_over_s: SurdRat,
    inv_sqrt_s: SurdRat,
}

impl ClassicalCtx {
    pub fn new(alpha_sq: BigRational) -> Result<Self, ClassicalError> {
        if !alpha_sq.is_positive() {
            return Err(ClassicalError::NonPositiveAlphaSq(alpha_sq));
        }
        let s = SurdRat::from_rational(alpha_sq.clone());
        let h_a = SuperMatrix::unit(1, 1, 0, s.clone())
            .add(&SuperMatrix::unit(2, 2, 0, s.neg()));
        let e_a = SuperMatrix::unit(0, 2, 0, SurdRat::one())
            .add(&SuperMatrix::unit(1, 0, 0, SurdRat::one()));
        let e_ma = SuperMatrix::unit(0, 1, 0, s.clone())
            .add(&SuperMatrix::unit(2, 0, 0, s.neg()));
        let e_2a = SuperMatrix::unit(1, 2, 0, SurdRat::one());
        let e_m2a = SuperMatrix::unit(2, 1, 0, s.mul(&s).neg());

        // Calibration: the affine pairing [e_{d-2a}, e_{-d+2a}] must close on
        // the coroot with central coefficient 1, which pins the form value
        // (e_{-2a}|e_{2a}) = -s/2 and hence the normalization of str.
        let t = e_m2a
            .mul(&e_2a)
            .supertrace()
            .coeff(0)
            .as_rational()
            .expect("supertrace of constant rational matrices is rational");
        assert!(!t.is_zero(), "degenerate double-root pairing");
        let kappa = SurdRat::from_rational(-&alpha_sq / (BigRational::from_integer(BigInt::from(2)) * t));

        let two = BigRational::from_integer(BigInt::from(2));
        let sqrt_2_over_s = SurdRat::sqrt_of(&(&two / &alpha_sq))?;
        let inv_sqrt_s = SurdRat::sqrt_of(&alpha_sq.recip())?;
        Ok(ClassicalCtx {
            alpha_sq,
            h_a,
            e_a,
            e_ma,
            e_2a,
            e_m2a,
            kappa,
            sqrt_2_over_s,
            inv_sqrt_s,
        })
    }

    pub fn default_unit() -> Self {
        Self::new(BigRational::from_integer(BigInt::from(1))).expect("1 is positive")
    }

    pub fn alpha_sq(&self) -> &BigRational {
        &self.alpha_sq
    }

    pub fn h_alpha(&self) -> &SuperMatrix {
        &self.h_a
    }

    /// Normalized invariant form κ·str(ab) on u-independent matrices.
    pub fn killing_form(&self, a: &SuperMatrix, b: &SuperMatrix) -> Result<SurdRat, ClassicalError> {
        if !a.is_u_independent() || !b.is_u_independent() {
            return Err(ClassicalError::UDependent);
        }
        Ok(a.mul(b).supertrace().coeff(0).mul(&self.kappa))
    }

    /// The u-valued extension κ·str(ab) of the form to the loop algebra.
    fn form_loop(&self, a: &SuperMatrix, b: &SuperMatrix) -> UPoly {
        a.mul(b).supertrace().scale(&self.kappa)
    }

    /// 2-cocycle: ψ(a·uⁿ, b·u^m) = n·δ_{n,−m}·(a|b), extended bilinearly.
    pub fn cocycle(&self, x: &LoopElement, y: &LoopElement) -> SurdRat {
        let xs = x.matrix.u_components();
        let ys = y.matrix.u_components();
        let mut out = SurdRat::zero();
        for (&n, xm) in &xs {
            if let Some(ym) = ys.get(&(-n)) {
                let v = self
                    .killing_form(xm, ym)
                    .expect("u-components are constant matrices")
                    .scale(&BigRational::from_integer(BigInt::from(n)));
                out = out.add(&v);
            }
        }
        out
    }

    /// The residue form Res((d/du x)|y): same cocycle by a different route,
    /// kept as a cross-check property.
    pub fn cocycle_residue(&self, x: &LoopElement, y: &LoopElement) -> SurdRat {
        self.form_loop(&x.matrix.derivative(), &y.matrix).coeff(-1)
    }

    /// Bracket of the extended loop superalgebra: matrix supercommutator,
    /// cocycle into the center, and the derivation acting as u·d/du.
    pub fn loop_bracket(&self, x: &LoopElement, y: &LoopElement) -> LoopElement {
        let mut matrix = super_commutator(&x.matrix, &y.matrix);
        if !x.derivation.is_zero() {
            matrix = matrix.add(&y.matrix.euler().scale(&x.derivation));
        }
        if !y.derivation.is_zero() {
            matrix = matrix.sub(&x.matrix.euler().scale(&y.derivation));
        }
        LoopElement {
            matrix,
            central: self.cocycle(x, y),
            derivation: SurdRat::zero(),
        }
    }

    /// The generator embedding: h_d ↦ d, h_δ ↦ c (so h_{δ−2α} ↦ c − 2h_α),
    /// e_{±α} ↦ e_{±α}, and e_{±(δ−2α)} ↦ ∓√(2/(α,α))·e_{∓2α}·u^{±1}.
    pub fn chevalley(&self, g: ChevalleyGen) -> LoopElement {
        match g {
            ChevalleyGen::Hd => LoopElement::derivation(SurdRat::one()),
            ChevalleyGen::HAlpha => LoopElement::from_matrix(self.h_a.clone()),
            ChevalleyGen::HAlpha0 => LoopElement::central(SurdRat::one())
                .sub(&LoopElement::from_matrix(self.h_a.scale(&SurdRat::from_int(2)))),
            ChevalleyGen::EAlpha => LoopElement::from_matrix(self.e_a.clone()),
            ChevalleyGen::EMinusAlpha => LoopElement::from_matrix(self.e_ma.clone()),
            ChevalleyGen::EAlpha0 => {
                LoopElement::from_matrix(self.e_m2a.shift(1).scale(&self.sqrt_2_over_s.neg()))
            }
            ChevalleyGen::EMinusAlpha0 => {
                LoopElement::from_matrix(self.e_2a.shift(-1).scale(&self.sqrt_2_over_s))
            }
        }
    }

    /// Current realization of the root vector for a root nδ + mα.
    ///
    /// For n > 0: e_{nδ±2α} = (−1)ⁿ√(2/s)·e_{±2α}uⁿ, e_{nδ±α} = ±(−1)ⁿ·
    /// e_{±α}uⁿ, e_{nδ} = ((−1)^{n+1}/√s)·h_α·uⁿ. For n < 0 the companion
    /// forms carry no (−1)ⁿ: e_{−nδ∓2α} = √(2/s)·e_{∓2α}u^{−n}, e_{−nδ∓α} =
    /// ±e_{∓α}u^{−n}, e_{−nδ} = (−1/√s)·h_α·u^{−n}. At n = 0 the finite odd
    /// vectors map to themselves and e_{±2α} ↦ √(2/s)·e_{±2α} (the common
    /// value of both sign continuations).
    pub fn realize(&self, label: RootLabel) -> LoopElement {
        let n = label.c_delta();
        let m = label.c_alpha();
        let sign = |c: i64| if c % 2 == 0 { SurdRat::one() } else { SurdRat::from_int(-1) };
        let base = match m {
            2 => self.e_2a.scale(&self.sqrt_2_over_s),
            -2 => self.e_m2a.scale(&self.sqrt_2_over_s),
            1 => self.e_a.clone(),
            -1 => self.e_ma.clone(),
            0 => self.h_a.scale(&self.inv_sqrt_s),
            _ => unreachable!("labels are roots"),
        };
        let c = match (n.signum(), m) {
            (1, 2) | (1, -2) => sign(n),
            (1, 1) => sign(n),
            (1, -1) => sign(n).neg(),
            (1, 0) => sign(n + 1),
            (-1, 2) | (-1, -2) | (-1, -1) => SurdRat::one(),
            (-1, 1) | (-1, 0) => SurdRat::from_int(-1),
            (0, 2) | (0, -2) | (0, 1) | (0, -1) => SurdRat::one(),
            _ => unreachable!("labels are roots"),
        };
        LoopElement::from_matrix(base.scale(&c).shift(n))
    }

    /// The coroot attached to nδ + mα under the additive convention:
    /// n·c + m·h_α.
    pub fn coroot(&self, label: RootLabel) -> LoopElement {
        LoopElement::central(SurdRat::from_int(label.c_delta()))
            .add(&LoopElement::from_matrix(self.h_a.scale(&SurdRat::from_int(label.c_alpha()))))
    }

    /// The (matrix, parity, name) basis of the finite superalgebra; the loop
    /// algebra's homogeneous basis consists of their shifts by powers of u.
    pub fn finite_basis(&self) -> Vec<(SuperMatrix, u8, &'static str)> {
        vec![
            (self.h_a.clone(), 0, "h_a"),
            (self.e_2a.clone(), 0, "e_2a"),
            (self.e_m2a.clone(), 0, "e_-2a"),
            (self.e_a.clone(), 1, "e_a"),
            (self.e_ma.clone(), 1, "e_-a"),
        ]
    }
}

fn push_check(checks: &mut Vec<ClassicalCheck>, name: String, lhs: &LoopElement, rhs: &LoopElement) {
    let diff = lhs.sub(rhs);
    checks.push(ClassicalCheck {
        name,
        pass: diff.is_zero(),
        residual: diff.to_string(),
    });
}

/// Verifies the Chevalley images satisfy the defining relations (Cartan
/// commutativity, the generator pairings, the weight actions, and both
/// Serre relations), that the center maps to c, and the five pairing
/// families of realized root vectors for degrees up to n_max.
pub fn check_classical(cl: &ClassicalCtx, n_max: i64) -> ClassicalReport {
    assert!(n_max >= 1, "degree cutoff must be at least 1");
    let g = |x: ChevalleyGen| cl.chevalley(x);
    let br = |x: &LoopElement, y: &LoopElement| cl.loop_bracket(x, y);
    let mut checks = Vec::new();

    use ChevalleyGen::*;
    let cartan = [(Hd, "h_d"), (HAlpha0, "h_(d-2a)"), (HAlpha, "h_a")];
    for (i, &(x, xn)) in cartan.iter().enumerate() {
        for &(y, yn) in &cartan[i + 1..] {
            push_check(
                &mut checks,
                format!("[{xn}, {yn}] = 0"),
                &br(&g(x), &g(y)),
                &LoopElement::zero(),
            );
        }
    }

    push_check(&mut checks, "[e_a, e_-a] = h_a".into(), &br(&g(EAlpha), &g(EMinusAlpha)), &g(HAlpha));
    push_check(
        &mut checks,
        "[e_(d-2a), e_-(d-2a)] = h_(d-2a)".into(),
        &br(&g(EAlpha0), &g(EMinusAlpha0)),
        &g(HAlpha0),
    );
    push_check(
        &mut checks,
        "[e_a, e_-(d-2a)] = 0".into(),
        &br(&g(EAlpha), &g(EMinusAlpha0)),
        &LoopElement::zero(),
    );
    push_check(
        &mut checks,
        "[e_(d-2a), e_-a] = 0".into(),
        &br(&g(EAlpha0), &g(EMinusAlpha)),
        &LoopElement::zero(),
    );

    // weight actions; s = (α,α)
    let s = SurdRat::from_rational(cl.alpha_sq.clone());
    let weights: [(ChevalleyGen, ChevalleyGen, SurdRat, &str); 12] = [
        (Hd, EAlpha0, SurdRat::one(), "[h_d, e_(d-2a)] = e_(d-2a)"),
        (Hd, EMinusAlpha0, SurdRat::from_int(-1), "[h_d, e_-(d-2a)] = -e_-(d-2a)"),
        (Hd, EAlpha, SurdRat::zero(), "[h_d, e_a] = 0"),
        (Hd, EMinusAlpha, SurdRat::zero(), "[h_d, e_-a] = 0"),
        (HAlpha0, EAlpha0, s.scale(&BigRational::from_integer(4.into())), "[h_(d-2a), e_(d-2a)] = 4(a,a)e_(d-2a)"),
        (HAlpha0, EMinusAlpha0, s.scale(&BigRational::from_integer((-4).into())), "[h_(d-2a), e_-(d-2a)] = -4(a,a)e_-(d-2a)"),
        (HAlpha0, EAlpha, s.scale(&BigRational::from_integer((-2).into())), "[h_(d-2a), e_a] = -2(a,a)e_a"),
        (HAlpha0, EMinusAlpha, s.scale(&BigRational::from_integer(2.into())), "[h_(d-2a), e_-a] = 2(a,a)e_-a"),
        (HAlpha, EAlpha0, s.scale(&BigRational::from_integer((-2).into())), "[h_a, e_(d-2a)] = -2(a,a)e_(d-2a)"),
        (HAlpha, EMinusAlpha0, s.scale(&BigRational::from_integer(2.into())), "[h_a, e_-(d-2a)] = 2(a,a)e_-(d-2a)"),
        (HAlpha, EAlpha, s.clone(), "[h_a, e_a] = (a,a)e_a"),
        (HAlpha, EMinusAlpha, s.neg(), "[h_a, e_-a] = -(a,a)e_-a"),
    ];
    for (h, e, coeff, name) in weights {
        push_check(&mut checks, name.into(), &br(&g(h), &g(e)), &g(e).scale(&coeff));
    }

    // Serre relations, both signs: ad(e_{±α})⁵ e_{±(δ−2α)} = 0 and
    // [[e_{±α}, e_{±(δ−2α)}], e_{±(δ−2α)}] = 0
    for (ea, e0, tag) in [(EAlpha, EAlpha0, "+"), (EMinusAlpha, EMinusAlpha0, "-")] {
        let mut acc = g(e0);
        for _ in 0..5 {
            acc = br(&g(ea), &acc);
        }
        push_check(&mut checks, format!("ad(e_{tag}a)^5 e_{tag}(d-2a) = 0"), &acc, &LoopElement::zero());
        let triple = br(&br(&g(ea), &g(e0)), &g(e0));
        push_check(&mut checks, format!("[[e_{tag}a, e_{tag}(d-2a)], e_{tag}(d-2a)] = 0"), &triple, &LoopElement::zero());
    }

    push_check(
        &mut checks,
        "h_(d-2a) + 2h_a = c".into(),
        &g(HAlpha0).add(&g(HAlpha).scale(&SurdRat::from_int(2))),
        &LoopElement::central(SurdRat::one()),
    );

    // pairing families of realized vectors; sign (−1)^{n+1} except for the
    // (nd+a) and (nd) families, which carry (−1)ⁿ
    for n in 1..=n_max {
        for (m, flip) in [(-2i64, false), (2, false), (-1, false), (1, true), (0, true)] {
            let pos = RootLabel::new(n, m).expect("roots");
            let neg = RootLabel::new(-n, -m).expect("roots");
            let lhs = br(&cl.realize(pos), &cl.realize(neg));
            let parity_sign = (n + i64::from(!flip)) % 2 == 0;
            let rhs = if parity_sign { cl.coroot(pos) } else { cl.coroot(pos).neg() };
            let sign_str = if parity_sign { "" } else { "-" };
            push_check(
                &mut checks,
                format!("[e_({pos}), e_({neg})] = {sign_str}h_({pos})"),
                &lhs,
                &rhs,
            );
        }
    }

    let pass = checks.iter().all(|c| c.pass);
    ClassicalReport { checks, pass }
}

/// Verifies that the root-vector recursions, with their structure constants
/// evaluated at q = 1, hold verbatim among the realized vectors: each
/// recursion e_t = (1/√x)·[e_p, e_r] is checked in the loop algebra with
/// √x the q = 1 limit of the corresponding quantum normalizer.
pub fn check_limit_coherence(ctx: &Ctx, cl: &ClassicalCtx, n_max: i64) -> ClassicalReport {
    assert!(n_max >= 1, "degree cutoff must be at least 1");
    let inv_sa = Scalar::s_a()
        .limit_q1(ctx)
        .expect("s_a is constant in q")
        .inv()
        .expect("2(α,α) is nonzero");
    let inv_sb = Scalar::s_b()
        .limit_q1(ctx)
        .expect("s_b is constant in q")
        .inv()
        .expect("(α,α) is nonzero");
    let lab = |d: i64, a: i64| RootLabel::new(d, a).expect("roots");

    let mut instances: Vec<(RootLabel, RootLabel, RootLabel, &SurdRat)> = vec![
        (lab(1, -1), lab(0, 1), lab(1, -2), &inv_sa),
        (lab(-1, 1), lab(-1, 2), lab(0, -1), &inv_sa),
        (lab(1, 0), lab(0, 1), lab(1, -1), &inv_sb),
        (lab(-1, 0), lab(-1, 1), lab(0, -1), &inv_sb),
    ];
    for k in 1..=n_max {
        instances.push((lab(k, 1), lab(k - 1, 1), lab(1, 0), &inv_sb));
        instances.push((lab(-k, -1), lab(-1, 0), lab(-(k - 1), -1), &inv_sb));
        if k >= 2 {
            instances.push((lab(k, -1), lab(1, 0), lab(k - 1, -1), &inv_sb));
            instances.push((lab(-k, 1), lab(-(k - 1), 1), lab(-1, 0), &inv_sb));
        }
    }

    let mut checks = Vec::new();
    for (target, p, r, nrm) in instances {
        let rhs = cl
            .loop_bracket(&cl.realize(p), &cl.realize(r))
            .scale(nrm);
        push_check(
            &mut checks,
            format!("e_({target}) = (recursion at q=1)[e_({p}), e_({r})]"),
            &cl.realize(target),
            &rhs,
        );
    }
    let pass = checks.iter().all(|c| c.pass);
    ClassicalReport { checks, pass }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn cl() -> ClassicalCtx {
        ClassicalCtx::default_unit()
    }

    fn basis(cl: &ClassicalCtx) -> Vec<(SuperMatrix, u8, &'static str)> {
        cl.finite_basis()
    }

    #[test]
    fn finite_matrices_close_on_the_five_dimensional_superalgebra() {
        let cl = cl();
        let s = SurdRat::one();
        // weights
        assert_eq!(super_commutator(&cl.h_a, &cl.e_a), cl.e_a.scale(&s));
        assert_eq!(super_commutator(&cl.h_a, &cl.e_ma), cl.e_ma.scale(&s.neg()));
        assert_eq!(super_commutator(&cl.h_a, &cl.e_2a), cl.e_2a.scale(&SurdRat::from_int(2)));
        assert_eq!(super_commutator(&cl.h_a, &cl.e_m2a), cl.e_m2a.scale(&SurdRat::from_int(-2)));
        // pairings
        assert_eq!(super_commutator(&cl.e_a, &cl.e_ma), cl.h_a);
        // the odd vector squares to the double-root vector
        assert_eq!(cl.e_a.mul(&cl.e_a), cl.e_2a);
        assert_eq!(super_commutator(&cl.e_a, &cl.e_a), cl.e_2a.scale(&SurdRat::from_int(2)));
        // ladder steps
        assert_eq!(super_commutator(&cl.e_a, &cl.e_2a), SuperMatrix::zero());
        assert_eq!(super_commutator(&cl.e_ma, &cl.e_m2a), SuperMatrix::zero());
    }

    #[test]
    fn the_form_normalization_is_derived_from_the_double_root_pairing() {
        let cl = ClassicalCtx::new(rat(3, 2)).unwrap();
        // kappa = -1/(2s)
        assert_eq!(cl.kappa, SurdRat::from_rational(rat(-1, 3)));
        let s = rat(3, 2);
        assert_eq!(cl.killing_form(&cl.e_a, &cl.e_ma).unwrap(), SurdRat::one());
        assert_eq!(cl.killing_form(&cl.e_ma, &cl.e_a).unwrap(), SurdRat::from_int(-1));
        assert_eq!(
            cl.killing_form(&cl.h_a, &cl.h_a).unwrap(),
            SurdRat::from_rational(s.clone())
        );
        assert_eq!(
            cl.killing_form(&cl.e_2a, &cl.e_m2a).unwrap(),
            SurdRat::from_rational(-&s / rat(2, 1))
        );
        assert_eq!(
            cl.killing_form(&cl.e_m2a, &cl.e_2a).unwrap(),
            SurdRat::from_rational(-&s / rat(2, 1))
        );
    }

    #[test]
    fn the_form_rejects_u_dependent_arguments() {
        let cl = cl();
        let x = cl.e_a.shift(1);
        assert_eq!(cl.killing_form(&x, &cl.e_ma), Err(ClassicalError::UDependent));
    }

    #[test]
    fn the_form_is_invariant_for_the_supercommutator() {
        let cl = cl();
        let basis = basis(&cl);
        for (x, _, _) in &basis {
            for (y, _, _) in &basis {
                for (z, _, _) in &basis {
                    let lhs = cl.killing_form(&super_commutator(x, y), z).unwrap();
                    let rhs = cl.killing_form(x, &super_commutator(y, z)).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn the_cocycle_is_super_antisymmetric() {
        let cl = cl();
        let basis = basis(&cl);
        for (a, pa, _) in &basis {
            for (b, pb, _) in &basis {
                for n in -3..=3i64 {
                    for m in -3..=3i64 {
                        let x = LoopElement::from_matrix(a.shift(n));
                        let y = LoopElement::from_matrix(b.shift(m));
                        let lhs = cl.cocycle(&x, &y);
                        let mut rhs = cl.cocycle(&y, &x);
                        if (pa * pb) % 2 == 0 {
                            rhs = rhs.neg();
                        }
                        assert_eq!(lhs, rhs, "({a}, {pa}) u^{n} vs ({b}, {pb}) u^{m}");
                    }
                }
            }
        }
    }

    // (-1)^{|x||z|} psi([x,y],z) + (-1)^{|y||x|} psi([y,z],x)
    //   + (-1)^{|z||y|} psi([z,x],y) = 0; for all-even triples this is the
    // classical cyclic condition psi([x,y],z) + psi([y,z],x) + psi([z,x],y) = 0
    #[test]
    fn the_cocycle_identity_holds_on_degree_bounded_triples() {
        let cl = cl();
        let basis = basis(&cl);
        let sign = |p: u8| if p % 2 == 0 { SurdRat::one() } else { SurdRat::from_int(-1) };
        for (a, pa, _) in &basis {
            for (b, pb, _) in &basis {
                for (c, pc, _) in &basis {
                    for n in -2..=2i64 {
                        for m in -2..=2i64 {
                            for k in -2..=2i64 {
                                let x = a.shift(n);
                                let y = b.shift(m);
                                let z = c.shift(k);
                                let le = |w: SuperMatrix| LoopElement::from_matrix(w);
                                let t1 = cl
                                    .cocycle(&le(super_commutator(&x, &y)), &le(z.clone()))
                                    .mul(&sign(pa * pc));
                                let t2 = cl
                                    .cocycle(&le(super_commutator(&y, &z)), &le(x.clone()))
                                    .mul(&sign(pb * pa));
                                let t3 = cl
                                    .cocycle(&le(super_commutator(&z, &x)), &le(y.clone()))
                                    .mul(&sign(pc * pb));
                                assert!(t1.add(&t2).add(&t3).is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn the_residue_form_reproduces_the_cocycle() {
        let cl = cl();
        let basis = basis(&cl);
        for (a, _, _) in &basis {
            for (b, _, _) in &basis {
                for n in -3..=3i64 {
                    for m in -3..=3i64 {
                        let x = LoopElement::from_matrix(a.shift(n));
                        let y = LoopElement::from_matrix(b.shift(m));
                        assert_eq!(cl.cocycle(&x, &y), cl.cocycle_residue(&x, &y));
                    }
                }
            }
        }
    }

    #[test]
    fn the_derivation_grades_by_u_degree_and_kills_the_center() {
        let cl = cl();
        let d = cl.chevalley(ChevalleyGen::Hd);
        for n in -3..=3i64 {
            let x = LoopElement::from_matrix(cl.e_a.shift(n));
            assert_eq!(cl.loop_bracket(&d, &x), x.scale(&SurdRat::from_int(n)));
            assert_eq!(cl.loop_bracket(&x, &d), x.scale(&SurdRat::from_int(-n)));
        }
        assert!(cl.loop_bracket(&d, &LoopElement::central(SurdRat::one())).is_zero());
        assert!(cl.loop_bracket(&d, &d).is_zero());
    }

    #[test]
    fn the_center_commutes_with_everything() {
        let cl = cl();
        let c = LoopElement::central(SurdRat::one());
        for (a, _, _) in &basis(&cl) {
            for n in -2..=2i64 {
                let x = LoopElement::from_matrix(a.shift(n));
                assert!(cl.loop_bracket(&c, &x).is_zero());
                assert!(cl.loop_bracket(&x, &c).is_zero());
            }
        }
    }

    #[test]
    fn chevalley_images_satisfy_the_defining_relations() {
        for s in [rat(1, 1), rat(3, 2), rat(2, 1)] {
            let cl = ClassicalCtx::new(s.clone()).unwrap();
            let report = check_classical(&cl, 3);
            for c in &report.checks {
                assert!(c.pass, "s = {s}: {} left residual {}", c.name, c.residual);
            }
            assert!(report.pass);
        }
    }

    #[test]
    fn realize_extends_the_chevalley_embedding() {
        let cl = cl();
        assert_eq!(cl.realize(RootLabel::ALPHA), cl.chevalley(ChevalleyGen::EAlpha));
        assert_eq!(
            cl.realize(RootLabel::ALPHA.negated()),
            cl.chevalley(ChevalleyGen::EMinusAlpha)
        );
        assert_eq!(cl.realize(RootLabel::ALPHA0), cl.chevalley(ChevalleyGen::EAlpha0));
        assert_eq!(
            cl.realize(RootLabel::ALPHA0.negated()),
            cl.chevalley(ChevalleyGen::EMinusAlpha0)
        );
    }

    #[test]
    fn recursions_hold_verbatim_at_q_equal_one() {
        for s in [rat(1, 1), rat(3, 2)] {
            let ctx = Ctx::new(s.clone()).unwrap();
            let cl = ClassicalCtx::new(s.clone()).unwrap();
            let report = check_limit_coherence(&ctx, &cl, 3);
            for c in &report.checks {
                assert!(c.pass, "s = {s}: {} left residual {}", c.name, c.residual);
            }
            assert!(report.pass);
        }
    }

    #[test]
    fn upoly_calculus_operators_match_by_hand_values() {
        let p = UPoly::monomial(3, SurdRat::from_int(2)).add(&UPoly::monomial(-1, SurdRat::one()));
        assert_eq!(
            p.euler(),
            UPoly::monomial(3, SurdRat::from_int(6)).add(&UPoly::monomial(-1, SurdRat::from_int(-1)))
        );
        assert_eq!(
            p.derivative(),
            UPoly::monomial(2, SurdRat::from_int(6)).add(&UPoly::monomial(-2, SurdRat::from_int(-1)))
        );
        assert_eq!(p.shift(2).coeff(5), SurdRat::from_int(2));
        assert!(UPoly::monomial(0, SurdRat::zero()).is_zero());
    }

    #[test]
    fn negative_alpha_sq_is_rejected() {
        assert!(matches!(
            ClassicalCtx::new(rat(-1, 1)),
            Err(ClassicalError::NonPositiveAlphaSq(_))
        ));
    }
}
