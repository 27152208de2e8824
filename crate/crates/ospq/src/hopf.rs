//! Hopf-superalgebra structure on the Chevalley generators: coproduct,
//! counit, antipode, and exact checks of the Hopf axioms.
//!
//! Tensor products carry the super sign rule
//! (a⊗b)(c⊗d) = (−1)^{|b||c|} (ac⊗bd), and the antipode extends as a
//! super-anti-homomorphism S(xy) = (−1)^{|x||y|} S(y)S(x). Neither rule is
//! an assumption the axioms could silently absorb: the antipode axiom check
//! below fails under any other sign choice.

use crate::algebra::{Element, Gen, Monomial};
use crate::scalar::{RatFn, Scalar};
use crate::Ctx;
use std::collections::BTreeMap;

/// Product of two monomials: the right k-part commutes left past the left
/// word, costing an exact power of q.
pub(crate) fn mul_monomials(ctx: &Ctx, m1: &Monomial, m2: &Monomial) -> (Monomial, RatFn) {
    let twist = if m2.kexp == [0; 3] || m1.word.is_empty() {
        RatFn::one()
    } else {
        let kw = crate::roots::Weight::new(m2.kexp[2], m2.kexp[1] - 2 * m2.kexp[2], m2.kexp[0]);
        let e = -ctx.pairing(&kw, &m1.weight());
        RatFn::v_pow(ctx.v_exp(&e))
    };
    let kexp = [
        m1.kexp[0] + m2.kexp[0],
        m1.kexp[1] + m2.kexp[1],
        m1.kexp[2] + m2.kexp[2],
    ];
    let mut word = Vec::with_capacity(m1.word.len() + m2.word.len());
    word.extend_from_slice(&m1.word);
    word.extend_from_slice(&m2.word);
    (Monomial { kexp, word }, twist)
}

/// Sums of x⊗y with Scalar coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor2 {
    terms: BTreeMap<(Monomial, Monomial), Scalar>,
}

fn add_t2(map: &mut BTreeMap<(Monomial, Monomial), Scalar>, k: (Monomial, Monomial), c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(k) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl Tensor2 {
    pub fn zero() -> Self {
        Tensor2::default()
    }

    pub fn one() -> Self {
        let mut t = Tensor2::default();
        add_t2(&mut t.terms, (Monomial::one(), Monomial::one()), Scalar::one());
        t
    }

    /// x ⊗ y (plain juxtaposition; signs appear only when multiplying).
    pub fn of(ctx: &Ctx, x: &Element, y: &Element) -> Self {
        let mut t = Tensor2::default();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                add_t2(&mut t.terms, (m1.clone(), m2.clone()), c1.mul(c2, ctx));
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Monomial, Monomial), &Scalar)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_t2(&mut terms, k.clone(), c.clone());
        }
        Tensor2 { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Tensor2 { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    /// (a⊗b)(c⊗d) = (−1)^{|b||c|} (ac ⊗ bd).
    pub fn mul(&self, other: &Self, ctx: &Ctx) -> Self {
        let mut terms = BTreeMap::new();
        for ((a, b), c1) in &self.terms {
            for ((c, d), c2) in &other.terms {
                let (left, t1) = mul_monomials(ctx, a, c);
                let (right, t2) = mul_monomials(ctx, b, d);
                let mut coeff = c1.mul(c2, ctx).scale(&t1).scale(&t2);
                if b.parity() * c.parity() == 1 {
                    coeff = coeff.neg();
                }
                add_t2(&mut terms, (left, right), coeff);
            }
        }
        Tensor2 { terms }
    }

    /// Multiplies the two legs together: μ(a⊗b) = ab.
    pub fn fold_multiply(&self, ctx: &Ctx) -> Element {
        let mut out = Element::zero();
        for ((a, b), c) in &self.terms {
            let (m, t) = mul_monomials(ctx, a, b);
            out = out.add(&Element::monomial(m, c.scale(&t)));
        }
        out
    }

    /// Total weight of every term must match for a weight-homogeneous input;
    /// exposed for the weight-additivity check.
    pub fn term_weights(&self) -> Vec<crate::roots::Weight> {
        self.terms.keys().map(|(a, b)| a.weight() + b.weight()).collect()
    }
}

/// Sums of x⊗y⊗z, used for the coassociativity check.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Tensor3 {
    terms: BTreeMap<(Monomial, Monomial, Monomial), Scalar>,
}

impl Tensor3 {
    fn add_term(&mut self, k: (Monomial, Monomial, Monomial), c: Scalar) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.neg());
        }
        out
    }
}

/// Coproduct on the generators:
/// Δ(k^{±1}) = k^{±1}⊗k^{±1}, Δ(e_β) = e_β⊗1 + k_β⁻¹⊗e_β,
/// Δ(e_{−β}) = e_{−β}⊗k_β + 1⊗e_{−β}, extended multiplicatively with the
/// super sign rule.
pub fn coproduct(ctx: &Ctx, x: &Element) -> Tensor2 {
    let mut out = Tensor2::zero();
    for (m, c) in x.terms() {
        let mut t = Tensor2::of(
            ctx,
            &Element::monomial(Monomial::k(m.kexp), Scalar::one()),
            &Element::monomial(Monomial::k(m.kexp), Scalar::one()),
        );
        for g in &m.word {
            t = t.mul(&coproduct_gen(ctx, *g), ctx);
        }
        for (k, tc) in t.terms {
            add_t2(&mut out.terms, k, tc.mul(c, ctx));
        }
    }
    out
}

fn coproduct_gen(ctx: &Ctx, g: Gen) -> Tensor2 {
    let e = Element::gen(g);
    let beta = match g {
        Gen::RaiseAlpha | Gen::LowerAlpha => crate::roots::RootLabel::ALPHA,
        Gen::RaiseA0 | Gen::LowerA0 => crate::roots::RootLabel::ALPHA0,
    };
    match g {
        Gen::RaiseAlpha | Gen::RaiseA0 => Tensor2::of(ctx, &e, &Element::one())
            .add(&Tensor2::of(ctx, &Element::k_root(&beta, -1), &e)),
        Gen::LowerAlpha | Gen::LowerA0 => Tensor2::of(ctx, &e, &Element::k_root(&beta, 1))
            .add(&Tensor2::of(ctx, &Element::one(), &e)),
    }
}

/// Antipode: S(k^{±1}) = k^{∓1}, S(e_β) = −k_β e_β, S(e_{−β}) = −e_{−β}k_β⁻¹,
/// extended as a super-anti-homomorphism.
pub fn antipode(ctx: &Ctx, x: &Element) -> Element {
    let mut out = Element::zero();
    for (m, c) in x.terms() {
        let odd = m.word.iter().filter(|g| g.parity() == 1).count();
        // reversing the word swaps each odd pair once
        let sign = if (odd * odd.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
        let mut acc = Element::one();
        for g in m.word.iter().rev() {
            acc = acc.mul(&antipode_gen(ctx, *g), ctx);
        }
        let k_inv = Element::monomial(Monomial::k([-m.kexp[0], -m.kexp[1], -m.kexp[2]]), Scalar::one());
        acc = acc.mul(&k_inv, ctx);
        out = out.add(&acc.scale(ctx, &c.mul(&Scalar::from_int(sign), ctx)));
    }
    out
}

fn antipode_gen(ctx: &Ctx, g: Gen) -> Element {
    let e = Element::gen(g);
    let beta = match g {
        Gen::RaiseAlpha | Gen::LowerAlpha => crate::roots::RootLabel::ALPHA,
        Gen::RaiseA0 | Gen::LowerA0 => crate::roots::RootLabel::ALPHA0,
    };
    match g {
        Gen::RaiseAlpha | Gen::RaiseA0 => Element::k_root(&beta, 1).mul(&e, ctx).neg(),
        Gen::LowerAlpha | Gen::LowerA0 => e.mul(&Element::k_root(&beta, -1), ctx).neg(),
    }
}

/// Counit: ε(k^{±1}) = 1, ε(e_{±β}) = 0, extended multiplicatively.
pub fn counit(x: &Element) -> Scalar {
    let mut out = Scalar::zero();
    for (m, c) in x.terms() {
        if m.word.is_empty() {
            out = out.add(c);
        }
    }
    out
}

/// Maps each tensor leg to its normal form and recollects. A zero result is
/// a sound certificate that the tensor lies in I⊗U + U⊗I for the defining
/// ideal I, at any completion bound.
pub fn reduce_tensor(ctx: &Ctx, sys: &crate::rewrite::RewriteSystem, t: &Tensor2) -> Tensor2 {
    let mut out = Tensor2::zero();
    for ((m1, m2), c) in t.terms() {
        let left = sys
            .normal_form(ctx, &Element::monomial(m1.clone(), c.clone()))
            .element;
        let right = sys
            .normal_form(ctx, &Element::monomial(m2.clone(), Scalar::one()))
            .element;
        out = out.add(&Tensor2::of(ctx, &left, &right));
    }
    out
}

/// Applies the coproduct to every defining relation and reduces both tensor
/// legs; returns the names of relations whose image fails to vanish. An
/// empty result means the coproduct descends to the quotient algebra.
pub fn coproduct_ideal_failures(ctx: &Ctx, sys: &crate::rewrite::RewriteSystem) -> Vec<&'static str> {
    crate::rewrite::defining_relations(ctx)
        .into_iter()
        .filter(|(_, rel)| !reduce_tensor(ctx, sys, &coproduct(ctx, rel)).is_zero())
        .map(|(name, _)| name)
        .collect()
}

/// (Δ⊗id)t and (id⊗Δ)t for a tensor square t.
fn delta_left(ctx: &Ctx, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::default();
    for ((a, b), c) in t.terms() {
        let da = coproduct(ctx, &Element::monomial(a.clone(), Scalar::one()));
        for ((a1, a2), c2) in da.terms() {
            out.add_term((a1.clone(), a2.clone(), b.clone()), c.mul(c2, ctx));
        }
    }
    out
}

fn delta_right(ctx: &Ctx, t: &Tensor2) -> Tensor3 {
    let mut out = Tensor3::default();
    for ((a, b), c) in t.terms() {
        let db = coproduct(ctx, &Element::monomial(b.clone(), Scalar::one()));
        for ((b1, b2), c2) in db.terms() {
            out.add_term((a.clone(), b1.clone(), b2.clone()), c.mul(c2, ctx));
        }
    }
    out
}

/// The ten Chevalley generators with display names.
pub fn generators() -> Vec<(String, Element)> {
    let mut out = Vec::new();
    for (name, kexp) in [("k_D", [1, 0, 0]), ("k_a", [0, 1, 0]), ("k_(d-2a)", [0, 0, 1])] {
        out.push((name.to_string(), Element::monomial(Monomial::k(kexp), Scalar::one())));
        out.push((
            format!("{name}^-1"),
            Element::monomial(Monomial::k(kexp.map(|e: i64| -e)), Scalar::one()),
        ));
    }
    for g in Gen::ALL {
        out.push((g.to_string(), Element::gen(g)));
    }
    out
}

/// One named Hopf-axiom failure, if any.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HopfFailure {
    pub generator: String,
    pub axiom: &'static str,
}

/// Checks coassociativity, the counit axiom, and both antipode axioms on
/// every generator; returns all failures (empty = all axioms hold).
pub fn check_hopf_axioms(ctx: &Ctx) -> Vec<HopfFailure> {
    let mut failures = Vec::new();
    for (name, g) in generators() {
        let d = coproduct(ctx, &g);
        if !delta_left(ctx, &d).sub(&delta_right(ctx, &d)).is_zero() {
            failures.push(HopfFailure { generator: name.clone(), axiom: "coassociativity" });
        }
        // (ε⊗id)Δ(g) and (id⊗ε)Δ(g), both as Elements
        let mut left = Element::zero();
        let mut right = Element::zero();
        for ((a, b), c) in d.terms() {
            let ea = counit(&Element::monomial(a.clone(), Scalar::one()));
            left = left.add(&Element::monomial(b.clone(), c.mul(&ea, ctx)));
            let eb = counit(&Element::monomial(b.clone(), Scalar::one()));
            right = right.add(&Element::monomial(a.clone(), c.mul(&eb, ctx)));
        }
        if left != g || right != g {
            failures.push(HopfFailure { generator: name.clone(), axiom: "counit" });
        }
        // μ(S⊗id)Δ(g) = ε(g)·1 = μ(id⊗S)Δ(g)
        let target = Element::scalar(counit(&g));
        let mut s_left = Element::zero();
        let mut s_right = Element::zero();
        for ((a, b), c) in d.terms() {
            let sa = antipode(ctx, &Element::monomial(a.clone(), Scalar::one()));
            s_left = s_left.add(&sa.mul(&Element::monomial(b.clone(), Scalar::one()), ctx).scale(ctx, c));
            let sb = antipode(ctx, &Element::monomial(b.clone(), Scalar::one()));
            s_right = s_right.add(&Element::monomial(a.clone(), Scalar::one()).mul(&sb, ctx).scale(ctx, c));
        }
        if s_left != target {
            failures.push(HopfFailure { generator: name.clone(), axiom: "antipode-left" });
        }
        if s_right != target {
            failures.push(HopfFailure { generator: name.clone(), axiom: "antipode-right" });
        }
    }
    failures
}
