//! Noncommutative polynomials in the Chevalley generators of
//! U_q(osp(1|2)^(1)), graded by weight and ℤ₂-parity.
//!
//! Monomials keep the Cartan part normalized to the left: a monomial is
//! k_d^{i} k_α^{j} k_{δ−2α}^{l} times a word in the four e-generators, and
//! multiplication commutes k's leftward, absorbing the exact q-power each
//! swap produces. No e-word reduction happens here — that is the rewrite
//! engine's job.

use crate::roots::{RootLabel, Weight};
use crate::scalar::{RatFn, Scalar};
use crate::Ctx;
use num::BigRational;
use std::collections::BTreeMap;
use std::fmt;

/// The four Chevalley e-generators. Discriminants fix the monomial order:
/// negative (lowering) generators sort before positive ones, and within each
/// sign the δ−2α generator sorts before the α one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
#[repr(u8)]
pub enum Gen {
    LowerA0 = 0,
    LowerAlpha = 1,
    RaiseA0 = 2,
    RaiseAlpha = 3,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::LowerA0, Gen::LowerAlpha, Gen::RaiseA0, Gen::RaiseAlpha];

    pub fn from_index(i: u8) -> Gen {
        Gen::ALL[i as usize]
    }

    pub fn index(self) -> u8 {
        self as u8
    }

    pub fn root(self) -> RootLabel {
        match self {
            Gen::RaiseAlpha => RootLabel::ALPHA,
            Gen::RaiseA0 => RootLabel::ALPHA0,
            Gen::LowerAlpha => RootLabel::ALPHA.negated(),
            Gen::LowerA0 => RootLabel::ALPHA0.negated(),
        }
    }

    pub fn weight(self) -> Weight {
        self.root().weight()
    }

    pub fn parity(self) -> u8 {
        self.root().parity()
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({})", self.root())
    }
}

/// Exponents of k_β as a vector over the basis (k_d, k_α, k_{δ−2α}):
/// for β = nδ + mα, k_β = k_α^{2n+m} k_{δ−2α}^{n}.
pub fn k_of_root(beta: &RootLabel) -> [i64; 3] {
    [0, 2 * beta.c_delta() + beta.c_alpha(), beta.c_delta()]
}

/// Weight paired against by k^{kexp} when commuting past e-generators.
fn kexp_weight(kexp: &[i64; 3]) -> Weight {
    Weight::new(kexp[2], kexp[1] - 2 * kexp[2], kexp[0])
}

/// k_d^{kexp[0]} k_α^{kexp[1]} k_{δ−2α}^{kexp[2]} · word.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    pub kexp: [i64; 3],
    pub word: Vec<Gen>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial { kexp: [0; 3], word: Vec::new() }
    }

    pub fn k(kexp: [i64; 3]) -> Self {
        Monomial { kexp, word: Vec::new() }
    }

    pub fn gen(g: Gen) -> Self {
        Monomial { kexp: [0; 3], word: vec![g] }
    }

    pub fn word_only(word: Vec<Gen>) -> Self {
        Monomial { kexp: [0; 3], word }
    }

    /// Weight of the word part; the k-part contributes zero.
    pub fn weight(&self) -> Weight {
        self.word.iter().fold(Weight::ZERO, |w, g| w + g.weight())
    }

    pub fn parity(&self) -> u8 {
        self.word.iter().map(|g| g.parity()).sum::<u8>() % 2
    }

    pub fn is_one(&self) -> bool {
        self.kexp == [0; 3] && self.word.is_empty()
    }
}

/// Length-first, then lexicographic on the word, then the k-exponents.
/// The word comparison is what the rewrite engine's termination argument
/// rests on; the k-part is only a tie-break for canonical storage.
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
            .then_with(|| self.kexp.cmp(&other.kexp))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        for (e, name) in self.kexp.iter().zip(["k_D", "k_a", "k_(d-2a)"]) {
            match e {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        for g in &self.word {
            parts.push(g.to_string());
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("inhomogeneous input: monomials {first} and {second} differ in weight or parity")]
    Inhomogeneous { first: String, second: String },
    #[error("cannot parse element: {0}")]
    Parse(String),
}

impl From<crate::scalar::ScalarError> for AlgebraError {
    fn from(e: crate::scalar::ScalarError) -> Self {
        AlgebraError::Parse(e.to_string())
    }
}

/// A finite Scalar-linear combination of monomials.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element {
    terms: BTreeMap<Monomial, Scalar>,
}

pub(crate) fn add_term(map: &mut BTreeMap<Monomial, Scalar>, m: Monomial, c: Scalar) {
    use std::collections::btree_map::Entry;
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
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

impl Element {
    pub fn zero() -> Self {
        Element::default()
    }

    pub fn one() -> Self {
        Element::monomial(Monomial::one(), Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Element::monomial(Monomial::one(), c)
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, c);
        Element { terms }
    }

    pub fn gen(g: Gen) -> Self {
        Element::monomial(Monomial::gen(g), Scalar::one())
    }

    /// k_β^n for a root β.
    pub fn k_root(beta: &RootLabel, n: i64) -> Self {
        let k = k_of_root(beta);
        Element::monomial(Monomial::k([k[0] * n, k[1] * n, k[2] * n]), Scalar::one())
    }

    pub fn k_d(n: i64) -> Self {
        Element::monomial(Monomial::k([n, 0, 0]), Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> BTreeMap<Monomial, Scalar> {
        self.terms
    }

    pub fn from_terms(terms: BTreeMap<Monomial, Scalar>) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            add_term(&mut out, m, c);
        }
        Element { terms: out }
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The largest monomial in the term order, if any.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn neg(&self) -> Self {
        Element { terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, m.clone(), c.clone());
        }
        Element { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, ctx: &Ctx, c: &Scalar) -> Self {
        if c.is_zero() {
            return Element::zero();
        }
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            add_term(&mut terms, m.clone(), x.mul(c, ctx));
        }
        Element { terms }
    }

    pub fn scale_ratfn(&self, f: &RatFn) -> Self {
        if f.is_zero() {
            return Element::zero();
        }
        let mut terms = BTreeMap::new();
        for (m, x) in &self.terms {
            add_term(&mut terms, m.clone(), x.scale(f));
        }
        Element { terms }
    }

    /// Product with the Cartan part commuted left: moving k^{κ} of the right
    /// factor past the word w of the left one costs q^{−(κ-weight, wt w)}.
    pub fn mul(&self, other: &Self, ctx: &Ctx) -> Self {
        let mut terms = BTreeMap::new();
        for (m1, c1) in &self.terms {
            let w1 = m1.weight();
            for (m2, c2) in &other.terms {
                let twist = if m2.kexp == [0; 3] || m1.word.is_empty() {
                    None
                } else {
                    let e = -ctx.pairing(&kexp_weight(&m2.kexp), &w1);
                    Some(RatFn::v_pow(ctx.v_exp(&e)))
                };
                let kexp = [
                    m1.kexp[0] + m2.kexp[0],
                    m1.kexp[1] + m2.kexp[1],
                    m1.kexp[2] + m2.kexp[2],
                ];
                let mut word = Vec::with_capacity(m1.word.len() + m2.word.len());
                word.extend_from_slice(&m1.word);
                word.extend_from_slice(&m2.word);
                let mut c = c1.mul(c2, ctx);
                if let Some(t) = twist {
                    c = c.scale(&t);
                }
                add_term(&mut terms, Monomial { kexp, word }, c);
            }
        }
        Element { terms }
    }

    /// Common (weight, parity) of all monomials, or the first differing pair.
    pub fn weight_parity(&self) -> Result<(Weight, u8), AlgebraError> {
        let mut it = self.terms.keys();
        let Some(first) = it.next() else {
            // Zero is homogeneous of any weight; report the trivial one.
            return Ok((Weight::ZERO, 0));
        };
        let (w, p) = (first.weight(), first.parity());
        for m in it {
            if m.weight() != w || m.parity() != p {
                return Err(AlgebraError::Inhomogeneous {
                    first: first.to_string(),
                    second: m.to_string(),
                });
            }
        }
        Ok((w, p))
    }

    /// Splits into weight-and-parity-homogeneous components.
    pub fn homogeneous_components(&self) -> Vec<Element> {
        let mut by_grade: BTreeMap<(Weight, u8), BTreeMap<Monomial, Scalar>> = BTreeMap::new();
        for (m, c) in &self.terms {
            by_grade
                .entry((m.weight(), m.parity()))
                .or_default()
                .insert(m.clone(), c.clone());
        }
        by_grade.into_values().map(|terms| Element { terms }).collect()
    }

    pub fn render(&self, ctx: &Ctx) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (m, c) in &self.terms {
            let coeff = if c.is_one() && !m.is_one() {
                None
            } else {
                Some(format!("{{{}}}", c.render(ctx)))
            };
            let mono = if m.is_one() { None } else { Some(m.to_string()) };
            parts.push(match (coeff, mono) {
                (Some(c), Some(m)) => format!("{c} * {m}"),
                (Some(c), None) => c,
                (None, Some(m)) => m,
                (None, None) => unreachable!("coeff or monomial must render"),
            });
        }
        parts.join(" + ")
    }

    /// Parses the syntax produced by [`Element::render`]: `+`/`-`-separated
    /// terms of `*`-separated factors `{scalar}`, `k_D^n`, `k_a^n`,
    /// `k_(d-2a)^n`, `E(root)`. Factors multiply left to right, so the k-part
    /// need not be pre-normalized.
    pub fn parse(ctx: &Ctx, input: &str) -> Result<Self, AlgebraError> {
        parse_element(ctx, input)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BracketMode {
    /// [x,y]_q = xy − (−1)^{θθ'} q^{(wt x, wt y)} yx
    Q,
    /// the same with q^{−(wt x, wt y)}
    QInv,
    /// plain supercommutator, q⁰
    Plain,
}

/// The (q-)supercommutator of weight/parity-homogeneous elements.
pub fn qbracket(ctx: &Ctx, x: &Element, y: &Element, mode: BracketMode) -> Result<Element, AlgebraError> {
    let (wx, px) = x.weight_parity()?;
    let (wy, py) = y.weight_parity()?;
    let mut factor = match mode {
        BracketMode::Plain => RatFn::one(),
        BracketMode::Q => RatFn::v_pow(ctx.v_exp(&ctx.pairing(&wx, &wy))),
        BracketMode::QInv => RatFn::v_pow(ctx.v_exp(&-ctx.pairing(&wx, &wy))),
    };
    if px * py == 1 {
        factor = factor.neg();
    }
    Ok(x.mul(y, ctx).sub(&y.mul(x, ctx).scale_ratfn(&factor)))
}

impl Ctx {
    /// Bilinear form value; panics if (d,d) is consulted, which cannot happen
    /// for the weights arising from monomials (words never carry d).
    pub fn pairing(&self, w1: &Weight, w2: &Weight) -> BigRational {
        crate::roots::BilinearForm::from(self)
            .pairing(w1, w2)
            .expect("(d,d) pairing consulted")
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

fn parse_element(ctx: &Ctx, input: &str) -> Result<Element, AlgebraError> {
    let err = |m: &str| AlgebraError::Parse(m.to_string());
    let s = input.trim();
    if s.is_empty() {
        return Err(err("empty input"));
    }
    if s == "0" {
        return Ok(Element::zero());
    }
    let mut out = Element::zero();
    for (sign, term) in split_terms(s).map_err(AlgebraError::Parse)? {
        let mut acc = Element::one();
        for factor in split_factors(&term).map_err(AlgebraError::Parse)? {
            let f = parse_factor(ctx, &factor)?;
            acc = acc.mul(&f, ctx);
        }
        if sign < 0 {
            acc = acc.neg();
        }
        out = out.add(&acc);
    }
    Ok(out)
}

/// Splits on top-level '+'/'-' (outside braces and parentheses).
fn split_terms(s: &str) -> Result<Vec<(i32, String)>, String> {
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    let mut sign = 1;
    let mut seen_any = false;
    let mut last_nonspace = None;
    for ch in s.chars() {
        // '+'/'-' directly after '^' belongs to an exponent, not a term split
        let after_caret = last_nonspace == Some('^');
        if !ch.is_whitespace() {
            last_nonspace = Some(ch);
        }
        match ch {
            '{' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            '}' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err("unbalanced brackets".into());
                }
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && after_caret => {
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && (seen_any || !cur.trim().is_empty()) => {
                if cur.trim().is_empty() {
                    return Err("empty term".into());
                }
                terms.push((sign, std::mem::take(&mut cur)));
                sign = if ch == '-' { -1 } else { 1 };
                seen_any = true;
            }
            '-' if depth == 0 => {
                sign = -sign;
            }
            _ => cur.push(ch),
        }
    }
    if depth != 0 {
        return Err("unbalanced brackets".into());
    }
    if cur.trim().is_empty() {
        return Err("trailing operator".into());
    }
    terms.push((sign, cur));
    Ok(terms)
}

/// Splits a term on top-level '*'.
fn split_factors(s: &str) -> Result<Vec<String>, String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '{' | '(' => {
                depth += 1;
                cur.push(ch);
            }
            '}' | ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '*' if depth == 0 => {
                if cur.trim().is_empty() {
                    return Err("empty factor".into());
                }
                out.push(std::mem::take(&mut cur));
            }
            _ => cur.push(ch),
        }
    }
    if cur.trim().is_empty() {
        return Err("empty factor".into());
    }
    out.push(cur);
    Ok(out)
}

fn parse_root_text(s: &str) -> Option<RootLabel> {
    // forms: "a", "-a", "2a", "d", "3d", "d+2a", "2d-a", "-d+2a", ...
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let parse_coeff = |t: &str, unit: char| -> Option<i64> {
        let t = t.strip_suffix(unit)?;
        match t {
            "" => Some(1),
            "-" => Some(-1),
            _ => t.parse().ok(),
        }
    };
    // split at the sign separating the d-part from the a-part, if both present
    if let Some(ia) = s.find('a') {
        if let Some(id) = s.find('d') {
            if id < ia {
                // both parts
                let split = s[id + 1..]
                    .find(['+', '-'])
                    .map(|k| id + 1 + k)
                    .unwrap_or(s.len());
                let n = parse_coeff(&s[..split], 'd')?;
                let rest = &s[split..];
                let rest = rest.strip_prefix('+').unwrap_or(rest);
                let m = parse_coeff(rest, 'a')?;
                return RootLabel::new(n, m).ok();
            }
            return None;
        }
        let m = parse_coeff(&s, 'a')?;
        return RootLabel::new(0, m).ok();
    }
    let n = parse_coeff(&s, 'd')?;
    RootLabel::new(n, 0).ok()
}

fn parse_factor(ctx: &Ctx, s: &str) -> Result<Element, AlgebraError> {
    let err = |m: String| AlgebraError::Parse(m);
    let s = s.trim();
    if let Some(inner) = s.strip_prefix('{').and_then(|t| t.strip_suffix('}')) {
        let sc = Scalar::parse(ctx, inner)?;
        return Ok(Element::scalar(sc));
    }
    if let Some(inner) = s.strip_prefix("E(").and_then(|t| t.strip_suffix(')')) {
        let root = parse_root_text(inner).ok_or_else(|| err(format!("bad root '{inner}'")))?;
        let gen = Gen::ALL
            .iter()
            .find(|g| g.root() == root)
            .ok_or_else(|| err(format!("E({root}) is not a Chevalley generator")))?;
        return Ok(Element::gen(*gen));
    }
    if let Some(rest) = s.strip_prefix("k_") {
        let (base, exp) = match rest.split_once('^') {
            Some((b, e)) => (b, e.trim().parse::<i64>().map_err(|_| err(format!("bad exponent '{e}'")))?),
            None => (rest, 1),
        };
        let kexp = match base.trim() {
            "D" => [exp, 0, 0],
            "a" => [0, exp, 0],
            "(d-2a)" => [0, 0, exp],
            other => return Err(err(format!("unknown Cartan generator 'k_{other}'"))),
        };
        return Ok(Element::monomial(Monomial::k(kexp), Scalar::one()));
    }
    // bare scalar like "1" (used for the identity term)
    let sc = Scalar::parse(ctx, s)?;
    Ok(Element::scalar(sc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn ctx() -> Ctx {
        Ctx::default_unit()
    }

    fn e(g: Gen) -> Element {
        Element::gen(g)
    }

    #[test]
    fn k_commutation_twist() {
        let ctx = ctx();
        // e_α · k_α = q^{-(α,α)} k_α e_α = q^{-1} k_α e_α at (α,α)=1
        let lhs = e(Gen::RaiseAlpha).mul(&Element::k_root(&RootLabel::ALPHA, 1), &ctx);
        let k_e = Element::k_root(&RootLabel::ALPHA, 1).mul(&e(Gen::RaiseAlpha), &ctx);
        let rhs = k_e.scale_ratfn(&RatFn::v_pow(-1));
        assert_eq!(lhs, rhs);
        // k_γ k_γ⁻¹ = 1
        let kk = Element::k_root(&RootLabel::ALPHA0, 1).mul(&Element::k_root(&RootLabel::ALPHA0, -1), &ctx);
        assert_eq!(kk, Element::one());
        // free product keeps the word
        let ee = e(Gen::RaiseAlpha).mul(&e(Gen::RaiseAlpha), &ctx);
        assert_eq!(
            ee,
            Element::monomial(Monomial::word_only(vec![Gen::RaiseAlpha, Gen::RaiseAlpha]), Scalar::one())
        );
    }

    #[test]
    fn multiplication_is_associative() {
        let ctx = ctx();
        let x = e(Gen::RaiseAlpha).add(&Element::k_d(1));
        let y = Element::k_root(&RootLabel::ALPHA, -2).add(&e(Gen::LowerA0));
        let z = e(Gen::LowerAlpha).sub(&Element::one());
        let xy_z = x.mul(&y, &ctx).mul(&z, &ctx);
        let x_yz = x.mul(&y.mul(&z, &ctx), &ctx);
        assert_eq!(xy_z, x_yz);
    }

    #[test]
    fn k_d_scales_only_the_a0_generators() {
        let ctx = ctx();
        // k_D e_{δ−2α} k_D⁻¹ = q e_{δ−2α}; k_D e_α k_D⁻¹ = e_α
        let conj = |g: Gen| {
            Element::k_d(1).mul(&e(g), &ctx).mul(&Element::k_d(-1), &ctx)
        };
        assert_eq!(conj(Gen::RaiseA0), e(Gen::RaiseA0).scale_ratfn(&RatFn::v_pow(1)));
        assert_eq!(conj(Gen::LowerA0), e(Gen::LowerA0).scale_ratfn(&RatFn::v_pow(-1)));
        assert_eq!(conj(Gen::RaiseAlpha), e(Gen::RaiseAlpha));
        assert_eq!(conj(Gen::LowerAlpha), e(Gen::LowerAlpha));
    }

    #[test]
    fn weight_and_parity() {
        let ctx = ctx();
        let x = e(Gen::RaiseAlpha).mul(&e(Gen::RaiseA0), &ctx);
        assert_eq!(x.weight_parity().unwrap(), (Weight::new(1, -1, 0), 1));
        assert_eq!(Element::k_root(&RootLabel::ALPHA, 1).weight_parity().unwrap(), (Weight::ZERO, 0));
        let sq = e(Gen::RaiseAlpha).mul(&e(Gen::RaiseAlpha), &ctx);
        assert_eq!(sq.weight_parity().unwrap(), (Weight::new(0, 2, 0), 0));
        let mixed = e(Gen::RaiseAlpha).add(&Element::one());
        assert!(matches!(mixed.weight_parity(), Err(AlgebraError::Inhomogeneous { .. })));
    }

    #[test]
    fn qbracket_examples() {
        let ctx = ctx();
        // [e_α, e_{δ−2α}]_q = e_α e_{δ−2α} − q⁻² e_{δ−2α} e_α (pairing −2, even·odd sign +1)
        let br = qbracket(&ctx, &e(Gen::RaiseAlpha), &e(Gen::RaiseA0), BracketMode::Q).unwrap();
        let expect = e(Gen::RaiseAlpha)
            .mul(&e(Gen::RaiseA0), &ctx)
            .sub(&e(Gen::RaiseA0).mul(&e(Gen::RaiseAlpha), &ctx).scale_ratfn(&RatFn::v_pow(-2)));
        assert_eq!(br, expect);
        // [e_α, e_{−α}]_plain is an anticommutator (both odd)
        let br = qbracket(&ctx, &e(Gen::RaiseAlpha), &e(Gen::LowerAlpha), BracketMode::Plain).unwrap();
        let expect = e(Gen::RaiseAlpha)
            .mul(&e(Gen::LowerAlpha), &ctx)
            .add(&e(Gen::LowerAlpha).mul(&e(Gen::RaiseAlpha), &ctx));
        assert_eq!(br, expect);
        // [x, 1]_q = 0
        let br = qbracket(&ctx, &e(Gen::LowerA0), &Element::one(), BracketMode::Q).unwrap();
        assert!(br.is_zero());
    }

    #[test]
    fn qbracket_super_skew() {
        let ctx = ctx();
        for gx in Gen::ALL {
            for gy in Gen::ALL {
                let b1 = qbracket(&ctx, &e(gx), &e(gy), BracketMode::Plain).unwrap();
                let mut b2 = qbracket(&ctx, &e(gy), &e(gx), BracketMode::Plain).unwrap();
                if gx.parity() * gy.parity() == 0 {
                    b2 = b2.neg();
                }
                assert_eq!(b1, b2.neg().neg(), "skew failed for {gx} {gy}");
                // [x,y] = −(−1)^{θθ'}[y,x]
                let sign = if gx.parity() * gy.parity() == 1 { 1 } else { -1 };
                let rhs = qbracket(&ctx, &e(gy), &e(gx), BracketMode::Plain)
                    .unwrap()
                    .scale(&ctx, &Scalar::from_int(sign));
                assert_eq!(b1, rhs);
            }
        }
    }

    #[test]
    fn render_parse_roundtrip() {
        let ctx = ctx();
        let lam = Scalar::from_ratfn(ctx.lambda_ratfn().clone());
        let x = e(Gen::RaiseAlpha)
            .mul(&e(Gen::LowerA0), &ctx)
            .scale(&ctx, &lam)
            .add(&Element::k_root(&RootLabel::ALPHA, -2))
            .sub(&Element::scalar(Scalar::s_a()));
        let text = x.render(&ctx);
        let back = Element::parse(&ctx, &text).unwrap();
        assert_eq!(back, x);
        assert_eq!(Element::parse(&ctx, "0").unwrap(), Element::zero());
        // unnormalized input normalizes: E(a) * k_a = {q^-1} k_a E(a)
        let y = Element::parse(&ctx, "E(a) * k_a").unwrap();
        assert_eq!(y, e(Gen::RaiseAlpha).mul(&Element::k_root(&RootLabel::ALPHA, 1), &ctx));
    }

    #[test]
    fn monomial_order_is_length_first() {
        let long = Monomial::word_only(vec![Gen::LowerA0, Gen::RaiseAlpha]);
        let short = Monomial::word_only(vec![Gen::RaiseAlpha]);
        assert!(short < long);
        let neg_first = Monomial::word_only(vec![Gen::LowerAlpha, Gen::RaiseAlpha]);
        let pos_first = Monomial::word_only(vec![Gen::RaiseAlpha, Gen::LowerAlpha]);
        assert!(neg_first < pos_first);
    }
}
