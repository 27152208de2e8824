//! Degree-truncated noncommutative rewriting over the defining relations:
//! canonical normal forms and equality-modulo-ideal decisions.
//!
//! Rules rewrite a leading word into strictly smaller elements under the
//! length-first lexicographic order, so reduction terminates and word
//! lengths never grow. Every rule lies in the two-sided ideal generated by
//! the defining relations, which makes a zero normal form a sound ideal-
//! membership certificate at ANY completion bound. Nonzero verdicts are
//! certified only when every input word fits inside the bound D at which
//! all critical pairs were resolved: below D the system is confluent
//! (overlapping peaks fit in a resolved superposition; disjoint peaks
//! commute; lengths never grow, so reduction stays below D).

use crate::algebra::{add_term, qbracket, BracketMode, Element, Gen, Monomial};
use crate::scalar::Scalar;
use crate::Ctx;
use std::collections::{BTreeMap, BTreeSet, VecDeque};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("cannot orient relation into a word rule (leading word occurs with several Cartan parts): {relation}")]
    Unorientable { relation: String },
    #[error("completion exceeded the rule ceiling of {ceiling} rules at bound {bound}")]
    RuleCeiling { ceiling: usize, bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("nonzero normal form is uncertified: input words of length {required} exceed the completion bound {bound}")]
pub struct BoundExceeded {
    pub required: usize,
    pub bound: usize,
}

/// A rewrite rule: the leading word maps to a strictly smaller element.
#[derive(Clone, Debug)]
pub struct Rule {
    pub lhs: Vec<Gen>,
    pub rhs: Element,
}

/// normal_form output: `certified` means the result is the unique normal
/// form of the input's ideal coset (true when every input word length is
/// within the completion bound). A zero `element` is a sound ideal-membership
/// certificate regardless of `certified`.
#[derive(Clone, Debug)]
pub struct NormalForm {
    pub element: Element,
    pub certified: bool,
    pub max_input_len: usize,
}

/// 4-ary trie over the active rule left-hand sides. Active left-hand sides
/// form an antichain under the subword relation, so the first rule node on
/// a path is the only possible match at that start position.
#[derive(Clone, Debug, Default)]
struct Trie {
    // node 0 is the root; next[g] = 0 means absent
    next: Vec<[u32; 4]>,
    rule: Vec<i32>,
}

impl Trie {
    fn build(rules: &[Rule], active: &[bool]) -> Self {
        let mut t = Trie { next: vec![[0; 4]], rule: vec![-1] };
        for (ri, r) in rules.iter().enumerate() {
            if !active[ri] {
                continue;
            }
            let mut node = 0usize;
            for g in &r.lhs {
                let gi = g.index() as usize;
                if t.next[node][gi] == 0 {
                    t.next.push([0; 4]);
                    t.rule.push(-1);
                    let new = (t.next.len() - 1) as u32;
                    t.next[node][gi] = new;
                }
                node = t.next[node][gi] as usize;
            }
            t.rule[node] = ri as i32;
        }
        t
    }

    /// Shortest rule match starting exactly at `pos`.
    fn match_at(&self, word: &[Gen], pos: usize) -> Option<(usize, usize)> {
        let mut node = 0usize;
        for (len, g) in word[pos..].iter().enumerate() {
            let nxt = self.next[node][g.index() as usize];
            if nxt == 0 {
                return None;
            }
            node = nxt as usize;
            if self.rule[node] >= 0 {
                return Some((self.rule[node] as usize, len + 1));
            }
        }
        None
    }
}

pub struct RewriteSystem {
    rules: Vec<Rule>,
    active: Vec<bool>,
    bound: usize,
    trie: Trie,
}

/// The eight defining relations seeding completion, in a fixed order:
/// the four Cartan-corrected swap relations, the two cubic Serre relations,
/// and the two quintic Serre relations.
pub fn defining_relations(ctx: &Ctx) -> Vec<(&'static str, Element)> {
    let e = Element::gen;
    let lam_inv = Scalar::from_ratfn(ctx.lambda_ratfn().inv().expect("q - q^-1 is nonzero"));
    let cartan = |beta: &crate::roots::RootLabel| {
        Element::k_root(beta, 1)
            .sub(&Element::k_root(beta, -1))
            .scale(ctx, &lam_inv)
    };
    let alpha = crate::roots::RootLabel::ALPHA;
    let alpha0 = crate::roots::RootLabel::ALPHA0;
    let pair = |x: Gen, y: Gen, corr: Option<&crate::roots::RootLabel>| {
        let b = qbracket(ctx, &e(x), &e(y), BracketMode::Plain).expect("generators are homogeneous");
        match corr {
            Some(beta) => b.sub(&cartan(beta)),
            None => b,
        }
    };
    let serre_cubic = |a: Gen, b: Gen| {
        let inner = qbracket(ctx, &e(a), &e(b), BracketMode::Q).unwrap();
        qbracket(ctx, &inner, &e(b), BracketMode::Q).unwrap()
    };
    let serre_quintic = |a: Gen, b: Gen| {
        let mut x = e(b);
        for _ in 0..5 {
            x = qbracket(ctx, &e(a), &x, BracketMode::Q).unwrap();
        }
        x
    };
    vec![
        ("pair-alpha", pair(Gen::RaiseAlpha, Gen::LowerAlpha, Some(&alpha))),
        ("pair-a0", pair(Gen::RaiseA0, Gen::LowerA0, Some(&alpha0))),
        ("mixed-alpha-lower-a0", pair(Gen::RaiseAlpha, Gen::LowerA0, None)),
        ("mixed-a0-lower-alpha", pair(Gen::RaiseA0, Gen::LowerAlpha, None)),
        ("serre-cubic-raise", serre_cubic(Gen::RaiseAlpha, Gen::RaiseA0)),
        ("serre-cubic-lower", serre_cubic(Gen::LowerAlpha, Gen::LowerA0)),
        ("serre-quintic-raise", serre_quintic(Gen::RaiseAlpha, Gen::RaiseA0)),
        ("serre-quintic-lower", serre_quintic(Gen::LowerAlpha, Gen::LowerA0)),
    ]
}

/// Turns an ideal element into a rule: strip the leading monomial's Cartan
/// part by left-multiplying with its inverse, then solve for the leading
/// word. Fails if the leading word also occurs with a different Cartan part
/// (no single word rule covers both occurrences).
fn orient(ctx: &Ctx, rel: &Element) -> Result<Option<Rule>, RewriteError> {
    if rel.is_zero() {
        return Ok(None);
    }
    let (lead, _) = rel.leading().expect("nonzero element has a leading term");
    let rel = if lead.kexp == [0; 3] {
        rel.clone()
    } else {
        let kinv = Element::monomial(Monomial::k(lead.kexp.map(|e| -e)), Scalar::one());
        kinv.mul(rel, ctx)
    };
    let (lead_m, lead_c) = rel.leading().expect("leading term survives unit scaling");
    let (lead_m, lead_c) = (lead_m.clone(), lead_c.clone());
    debug_assert_eq!(lead_m.kexp, [0; 3]);
    for (m, _) in rel.terms() {
        if *m != lead_m && m.word == lead_m.word {
            return Err(RewriteError::Unorientable { relation: rel.render(ctx) });
        }
    }
    let inv = lead_c.inv(ctx).expect("leading coefficient is nonzero");
    let rest = rel.sub(&Element::monomial(lead_m.clone(), lead_c));
    let rhs = rest.neg().scale(ctx, &inv);
    debug_assert!(rhs.leading().map_or(true, |(m, _)| *m < lead_m), "rhs must be smaller than lhs");
    Ok(Some(Rule { lhs: lead_m.word, rhs }))
}

fn contains_subword(haystack: &[Gen], needle: &[Gen]) -> bool {
    haystack.windows(needle.len()).any(|w| w == needle)
}

impl RewriteSystem {
    /// Runs Knuth-Bendix style completion on the defining relations,
    /// resolving every critical pair whose superposition word has length
    /// ≤ `bound`. `ceiling` caps the number of rules ever created.
    pub fn complete(ctx: &Ctx, bound: usize, ceiling: usize) -> Result<Self, RewriteError> {
        assert!(bound >= 2, "bound must cover at least the swap rules");
        let mut sys =
            RewriteSystem { rules: Vec::new(), active: Vec::new(), bound, trie: Trie::build(&[], &[]) };
        let mut worklist: VecDeque<Element> =
            defining_relations(ctx).into_iter().map(|(_, rel)| rel).collect();
        // (superposition length, left rule, right rule, overlap length)
        let mut cps: BTreeSet<(usize, usize, usize, usize)> = BTreeSet::new();
        loop {
            if let Some(rel) = worklist.pop_front() {
                let nf = sys.nf_element(ctx, &rel);
                let Some(rule) = orient(ctx, &nf)? else { continue };
                debug_assert!(
                    Element::monomial(Monomial::word_only(rule.lhs.clone()), Scalar::one())
                        .sub(&rule.rhs)
                        .weight_parity()
                        .is_ok(),
                    "rules must be weight-homogeneous"
                );
                let ri = sys.rules.len();
                if ri + 1 > ceiling {
                    return Err(RewriteError::RuleCeiling { ceiling, bound });
                }
                sys.rules.push(rule);
                sys.active.push(true);
                // retire any rule whose lhs the new lhs reduces; requeue it
                for s in 0..ri {
                    if sys.active[s] && contains_subword(&sys.rules[s].lhs, &sys.rules[ri].lhs) {
                        sys.active[s] = false;
                        let rel = Element::monomial(
                            Monomial::word_only(sys.rules[s].lhs.clone()),
                            Scalar::one(),
                        )
                        .sub(&sys.rules[s].rhs);
                        worklist.push_back(rel);
                    }
                }
                sys.trie = Trie::build(&sys.rules, &sys.active);
                for j in 0..sys.rules.len() {
                    if sys.active[j] {
                        enqueue_overlaps(&mut cps, &sys, ri, j);
                        if j != ri {
                            enqueue_overlaps(&mut cps, &sys, j, ri);
                        }
                    }
                }
            } else if let Some(cp) = cps.pop_first() {
                let (_, i, j, olen) = cp;
                if !sys.active[i] || !sys.active[j] {
                    continue;
                }
                let diff = sys.critical_pair_diff(ctx, i, j, olen);
                if !diff.is_zero() {
                    worklist.push_back(diff);
                }
            } else {
                break;
            }
        }
        Ok(sys)
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn active_rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.iter().zip(&self.active).filter(|(_, a)| **a).map(|(r, _)| r)
    }

    pub fn num_active_rules(&self) -> usize {
        self.active.iter().filter(|a| **a).count()
    }

    /// Difference of the two one-step reducts of the superposition of
    /// rules i and j overlapping in `olen` letters, fully reduced.
    fn critical_pair_diff(&self, ctx: &Ctx, i: usize, j: usize, olen: usize) -> Element {
        let (ui, uj) = (&self.rules[i].lhs, &self.rules[j].lhs);
        let x = &ui[..ui.len() - olen];
        let y = &uj[olen..];
        let left = self.rules[i]
            .rhs
            .mul(&Element::monomial(Monomial::word_only(y.to_vec()), Scalar::one()), ctx);
        let right = Element::monomial(Monomial::word_only(x.to_vec()), Scalar::one())
            .mul(&self.rules[j].rhs, ctx);
        self.nf_element(ctx, &left.sub(&right))
    }

    fn find_redex(&self, word: &[Gen]) -> Option<(usize, usize, usize)> {
        for pos in 0..word.len() {
            if let Some((ri, len)) = self.trie.match_at(word, pos) {
                return Some((ri, pos, len));
            }
        }
        None
    }

    /// Every redex of `word` as (rule, start, length). Active left-hand
    /// sides are an antichain, so there is at most one per start position.
    fn find_all_redexes(&self, word: &[Gen]) -> Vec<(usize, usize, usize)> {
        (0..word.len())
            .filter_map(|pos| self.trie.match_at(word, pos).map(|(ri, len)| (ri, pos, len)))
            .collect()
    }

    /// Contracts the redex (ri, pos, len) of the term c·m, folding the
    /// replacement terms back into `pending`.
    fn contract(
        &self,
        ctx: &Ctx,
        m: &Monomial,
        c: Scalar,
        (ri, pos, len): (usize, usize, usize),
        pending: &mut BTreeMap<Monomial, Scalar>,
    ) {
        let prefix =
            Element::monomial(Monomial { kexp: m.kexp, word: m.word[..pos].to_vec() }, c);
        let suffix =
            Element::monomial(Monomial::word_only(m.word[pos + len..].to_vec()), Scalar::one());
        let replaced = prefix.mul(&self.rules[ri].rhs, ctx).mul(&suffix, ctx);
        for (m2, c2) in replaced.into_terms() {
            debug_assert!(m2 < *m, "reduction must strictly decrease");
            add_term(pending, m2, c2);
        }
    }

    /// Unbounded reduction to an irreducible element (always terminates:
    /// every step replaces a monomial by strictly smaller ones).
    fn nf_element(&self, ctx: &Ctx, x: &Element) -> Element {
        let mut pending: BTreeMap<Monomial, Scalar> = x.clone().into_terms();
        let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        while let Some((m, c)) = pending.pop_last() {
            match self.find_redex(&m.word) {
                None => add_term(&mut out, m, c),
                Some(redex) => self.contract(ctx, &m, c, redex, &mut pending),
            }
        }
        Element::from_terms(out)
    }

    /// Like `normal_form`, but the redex contracted at each step is chosen
    /// by `pick` (called with the number of available redexes, must return a
    /// smaller index) instead of always the leftmost one. Below the
    /// completion bound the system is confluent, so every choice sequence
    /// must land on the same normal form — the path-independence checks
    /// drive this with randomized picks and compare against `normal_form`.
    pub fn normal_form_with_choices(
        &self,
        ctx: &Ctx,
        x: &Element,
        pick: &mut dyn FnMut(usize) -> usize,
    ) -> NormalForm {
        let max_input_len = x.terms().map(|(m, _)| m.word.len()).max().unwrap_or(0);
        let mut pending: BTreeMap<Monomial, Scalar> = x.clone().into_terms();
        let mut out: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        while let Some((m, c)) = pending.pop_last() {
            let redexes = self.find_all_redexes(&m.word);
            if redexes.is_empty() {
                add_term(&mut out, m, c);
                continue;
            }
            let i = pick(redexes.len());
            assert!(i < redexes.len(), "pick returned {i} for {} redexes", redexes.len());
            self.contract(ctx, &m, c, redexes[i], &mut pending);
        }
        NormalForm {
            element: Element::from_terms(out),
            certified: max_input_len <= self.bound,
            max_input_len,
        }
    }

    /// Reduces to normal form, reporting whether the result is certified
    /// canonical (all input words within the completion bound).
    pub fn normal_form(&self, ctx: &Ctx, x: &Element) -> NormalForm {
        let max_input_len = x.terms().map(|(m, _)| m.word.len()).max().unwrap_or(0);
        NormalForm {
            element: self.nf_element(ctx, x),
            certified: max_input_len <= self.bound,
            max_input_len,
        }
    }

    /// True when x reduces to zero — a sound certificate that x lies in the
    /// defining ideal, at any bound.
    pub fn reduces_to_zero(&self, ctx: &Ctx, x: &Element) -> bool {
        self.nf_element(ctx, x).is_zero()
    }

    /// Decides x ≡ y modulo the defining ideal. `Ok(true)` is always sound;
    /// `Ok(false)` is returned only when the verdict is certified, otherwise
    /// the uncertified nonzero difference surfaces as `BoundExceeded`.
    pub fn equal_mod_relations(&self, ctx: &Ctx, x: &Element, y: &Element) -> Result<bool, BoundExceeded> {
        let nf = self.normal_form(ctx, &x.sub(y));
        if nf.element.is_zero() {
            Ok(true)
        } else if nf.certified {
            Ok(false)
        } else {
            Err(BoundExceeded { required: nf.max_input_len, bound: self.bound })
        }
    }

    /// Re-checks local confluence: every critical pair with superposition
    /// length ≤ bound must reduce to zero difference.
    pub fn check_local_confluence(&self, ctx: &Ctx) -> Result<(), String> {
        for i in 0..self.rules.len() {
            for j in 0..self.rules.len() {
                if !self.active[i] || !self.active[j] {
                    continue;
                }
                let (li, lj) = (self.rules[i].lhs.len(), self.rules[j].lhs.len());
                for olen in 1..=li.min(lj) {
                    if olen == li && olen == lj && i == j {
                        continue;
                    }
                    if li + lj - olen > self.bound {
                        continue;
                    }
                    if self.rules[i].lhs[li - olen..] != self.rules[j].lhs[..olen] {
                        continue;
                    }
                    let diff = self.critical_pair_diff(ctx, i, j, olen);
                    if !diff.is_zero() {
                        return Err(format!(
                            "unresolved critical pair between rules {i} and {j} (overlap {olen}): {}",
                            diff.render(ctx)
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    /// One rule per line: `LHS -> RHS`.
    pub fn dump(&self, ctx: &Ctx) -> String {
        let mut lines: Vec<String> = Vec::new();
        for r in self.active_rules() {
            let lhs = Monomial::word_only(r.lhs.clone());
            lines.push(format!("{} -> {}", lhs, r.rhs.render(ctx)));
        }
        lines.join("\n")
    }
}

fn enqueue_overlaps(
    cps: &mut BTreeSet<(usize, usize, usize, usize)>,
    sys: &RewriteSystem,
    i: usize,
    j: usize,
) {
    let (li, lj) = (sys.rules[i].lhs.len(), sys.rules[j].lhs.len());
    for olen in 1..=li.min(lj) {
        if olen == li && olen == lj {
            // full overlap of identical words cannot occur between distinct
            // active rules, and for i == j it is the trivial peak
            continue;
        }
        let superpos = li + lj - olen;
        if superpos > sys.bound {
            continue;
        }
        if sys.rules[i].lhs[li - olen..] == sys.rules[j].lhs[..olen] {
            cps.insert((superpos, i, j, olen));
        }
    }
}

/// Checks that the quantum Serre relations (and the swap relations) vanish
/// under the completed system; returns the names of any that fail.
pub fn verify_defining_relations(ctx: &Ctx, sys: &RewriteSystem) -> Vec<&'static str> {
    defining_relations(ctx)
        .into_iter()
        .filter(|(_, rel)| !sys.reduces_to_zero(ctx, rel))
        .map(|(name, _)| name)
        .collect()
}

/// Convenience: monomial sandwich products used by callers assembling words.
pub fn word_element(word: &[Gen]) -> Element {
    Element::monomial(Monomial::word_only(word.to_vec()), Scalar::one())
}
