//! Substitutions and the double word Hopf algebra.
//!
//! A substitution is a pair of words (top, bottom) with equal support,
//! considered only up to relabelling of the letters. The canonical
//! representative relabels the distinct letters, in order of first
//! occurrence in the top word, to 1..k. Substitutions act on words by
//! matching the top pattern and emitting the bottom pattern, and they form
//! a connected graded Hopf algebra in two isomorphic ways.

use crate::elem::{Elem, Tensor};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::words::{for_each_interleaving, good_cuts, interleavings, Letter, ParseError, Perm, Word};
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

/// A canonical substitution: supp(top) = supp(bottom) = {1..k}, with the
/// distinct letters numbered by first occurrence in the top word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Subst {
    top: Word,
    bottom: Word,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SubstError {
    SupportMismatch { top: Word, bottom: Word },
}

impl fmt::Display for SubstError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SubstError::SupportMismatch { top, bottom } => {
                write!(f, "support mismatch between top {} and bottom {}", top, bottom)
            }
        }
    }
}

impl std::error::Error for SubstError {}

impl Subst {
    /// Canonicalizes an arbitrary equal-support pair. Two inputs map to the
    /// same value exactly when they differ by a bijective relabelling.
    pub fn new(top: Word, bottom: Word) -> Result<Subst, SubstError> {
        if top.supp() != bottom.supp() {
            return Err(SubstError::SupportMismatch { top, bottom });
        }
        let mut relabel: BTreeMap<Letter, Letter> = BTreeMap::new();
        for &a in top.letters() {
            let next = relabel.len() as Letter + 1;
            relabel.entry(a).or_insert(next);
        }
        let map = |w: &Word| Word::new(w.letters().iter().map(|a| relabel[a]).collect());
        Ok(Subst { top: map(&top), bottom: map(&bottom) })
    }

    /// The empty substitution, the unit of both algebra structures.
    pub fn empty() -> Subst {
        Subst { top: Word::empty(), bottom: Word::empty() }
    }

    pub(crate) fn from_canonical(top: Word, bottom: Word) -> Subst {
        debug_assert!(is_canonical(&top, &bottom), "non-canonical pair {} {}", top, bottom);
        Subst { top, bottom }
    }

    pub fn top(&self) -> &Word {
        &self.top
    }

    pub fn bottom(&self) -> &Word {
        &self.bottom
    }

    /// The number of distinct letters.
    pub fn degree(&self) -> usize {
        self.top.ct()
    }

    /// Exchanges top and bottom (and re-canonicalizes).
    pub fn swap(&self) -> Subst {
        Subst::new(self.bottom.clone(), self.top.clone()).expect("supports agree")
    }

    /// Applies the substitution to a word: `w` must have the length of the
    /// top and satisfy its equalities (positions carrying the same top
    /// letter must carry the same letter of `w`; further collisions are
    /// allowed). Emits the bottom pattern under the induced assignment.
    pub fn apply(&self, w: &Word) -> Option<Word> {
        if w.lg() != self.top.lg() {
            return None;
        }
        let mut value: BTreeMap<Letter, Letter> = BTreeMap::new();
        for (&t, &x) in self.top.letters().iter().zip(w.letters()) {
            match value.entry(t) {
                std::collections::btree_map::Entry::Vacant(v) => {
                    v.insert(x);
                }
                std::collections::btree_map::Entry::Occupied(o) => {
                    if *o.get() != x {
                        return None;
                    }
                }
            }
        }
        Some(Word::new(self.bottom.letters().iter().map(|b| value[b]).collect()))
    }

    /// Bottom word repeat-free.
    pub fn is_injective(&self) -> bool {
        self.bottom.is_injective()
    }

    /// Top word repeat-free.
    pub fn is_surjective(&self) -> bool {
        self.top.is_injective()
    }

    pub fn is_msupp_equal(&self) -> bool {
        self.top.msupp() == self.bottom.msupp()
    }

    /// Every letter multiplicity in both words is at most `b`.
    pub fn is_bounded(&self, b: usize) -> bool {
        self.top.msupp().iter().all(|(_, r)| r <= b)
            && self.bottom.msupp().iter().all(|(_, r)| r <= b)
    }

    /// Some letter repeats in the top or the bottom; these span the Hopf
    /// ideal whose quotient is the permutation Hopf algebra.
    pub fn has_repeats(&self) -> bool {
        !self.is_injective() || !self.is_surjective()
    }

    /// Equal letters in the top are contiguous; in canonical form that is
    /// the same as the top being weakly increasing. These substitutions are
    /// exactly the images of words under the staircase encoding.
    pub fn is_staircase(&self) -> bool {
        self.top.letters().windows(2).all(|p| p[0] <= p[1])
    }

    /// Both words repeat-free: decodes as a permutation word.
    pub fn to_perm(&self) -> Option<Perm> {
        if self.has_repeats() {
            None
        } else {
            Some(Perm::new(self.bottom.clone()).expect("injective surjective bottom"))
        }
    }

    /// Shifts every letter by `by`, leaving the pattern intact.
    fn shift(&self, by: Letter) -> (Word, Word) {
        (self.top.shift(by), self.bottom.shift(by))
    }
}

fn is_canonical(top: &Word, bottom: &Word) -> bool {
    if top.supp() != bottom.supp() {
        return false;
    }
    let mut seen: Letter = 0;
    for &a in top.letters() {
        if a > seen {
            if a != seen + 1 {
                return false;
            }
            seen = a;
        }
    }
    true
}

impl fmt::Display for Subst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.top, self.bottom)
    }
}

impl FromStr for Subst {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if !(t.starts_with('(') && t.ends_with(')')) {
            return Err(ParseError { pos: 0, msg: "expected '(top | bottom)'".into() });
        }
        let inner = &t[1..t.len() - 1];
        let mut halves = inner.splitn(2, '|');
        let top: Word = halves
            .next()
            .ok_or(ParseError { pos: 1, msg: "missing top word".into() })?
            .parse()?;
        let bottom: Word = halves
            .next()
            .ok_or(ParseError { pos: 1, msg: "missing '|' separator".into() })?
            .parse()?;
        Subst::new(top, bottom).map_err(|e| ParseError { pos: 0, msg: e.to_string() })
    }
}

/// First product: concatenate tops after a disjoint relabel, shuffle the
/// bottoms. The empty substitution is the unit.
pub fn dwha_mul(p: &Subst, q: &Subst) -> Elem<Subst> {
    let mut buf = Vec::new();
    dwha_mul_for_each(p, q, &mut |t| buf.push((t, 1)));
    Elem::from_term_vec(buf)
}

/// Streams the product terms; interleavings of disjointly supported words
/// are pairwise distinct, so every term carries coefficient one.
pub fn dwha_mul_for_each(p: &Subst, q: &Subst, f: &mut dyn FnMut(Subst)) {
    let (qtop, qbot) = q.shift(p.degree() as Letter);
    let top = p.top().concat(&qtop);
    for_each_interleaving(p.bottom().letters(), qbot.letters(), |gamma| {
        f(Subst::from_canonical(top.clone(), Word::from_slice(gamma)));
    });
}

/// First coproduct: sum over good cuts of the bottom; each factor pairs a
/// cut half with the maximal subword of the top having the same support.
pub fn dwha_comul(p: &Subst) -> Tensor<Subst> {
    let mut out = Elem::zero();
    for (b1, b2) in good_cuts(p.bottom()) {
        let t1 = p.top().restrict_letters(&b1.supp());
        let t2 = p.top().restrict_letters(&b2.supp());
        let f1 = Subst::new(t1, b1).expect("restriction matches support");
        let f2 = Subst::new(t2, b2).expect("restriction matches support");
        out.add_term((f1, f2), 1);
    }
    out
}

/// Second product: shuffle the tops, concatenate the bottoms.
pub fn dwha_mul2(p: &Subst, q: &Subst) -> Elem<Subst> {
    let (qtop, qbot) = q.shift(p.degree() as Letter);
    let bottom = p.bottom().concat(&qbot);
    let mut out = Elem::zero();
    for gamma in interleavings(p.top().letters(), qtop.letters()) {
        let term = Subst::new(Word::new(gamma), bottom.clone()).expect("supports agree");
        out.add_term(term, 1);
    }
    out
}

/// Second coproduct: good cuts of the top, paired with the maximal
/// subwords of the bottom of matching support.
pub fn dwha_comul2(p: &Subst) -> Tensor<Subst> {
    let mut out = Elem::zero();
    for (t1, t2) in good_cuts(p.top()) {
        let b1 = p.bottom().restrict_letters(&t1.supp());
        let b2 = p.bottom().restrict_letters(&t2.supp());
        let f1 = Subst::new(t1, b1).expect("restriction matches support");
        let f2 = Subst::new(t2, b2).expect("restriction matches support");
        out.add_term((f1, f2), 1);
    }
    out
}

/// Transport of the first product through `swap`; equal to `dwha_mul2` and
/// kept as an independent route for cross-checking.
pub fn dwha_mul2_via_swap(p: &Subst, q: &Subst) -> Elem<Subst> {
    dwha_mul(&p.swap(), &q.swap()).map_key(|t| t.swap())
}

/// Transport of the first coproduct through `swap`.
pub fn dwha_comul2_via_swap(p: &Subst) -> Tensor<Subst> {
    dwha_comul(&p.swap()).map_key(|(a, b)| (a.swap(), b.swap()))
}

/// The nondefinite inner product: 1 when some relabelling exchanges the two
/// substitutions (top of one = bottom of the other), else 0. In canonical
/// form that is `swap(q) == p`.
pub fn inner_product(p: &Subst, q: &Subst) -> i64 {
    (q.swap() == *p) as i64
}

/// The pairing that declares the substitutions an orthonormal basis.
pub fn orthonormal(p: &Subst, q: &Subst) -> i64 {
    (p == q) as i64
}

/// Quotient by the span of substitutions with a repeated letter: the
/// identity on permutation substitutions, zero on the rest.
pub fn project_mpr(p: &Subst) -> Elem<Perm> {
    match p.to_perm() {
        Some(perm) => Elem::basis(perm),
        None => Elem::zero(),
    }
}

/// All canonical substitutions with lg(top) <= top_cap and
/// lg(bottom) <= bot_cap, in (top, bottom) order. The homogeneous pieces of
/// the algebra are of infinite rank, so these caps are mandatory everywhere.
pub fn substitutions(top_cap: usize, bot_cap: usize) -> Vec<Subst> {
    let mut out = vec![Subst::empty()];
    for k in 1..=top_cap.min(bot_cap) {
        let tops: Vec<Word> = surjective_words(k, top_cap)
            .into_iter()
            .filter(first_occurrences_in_order)
            .collect();
        let bottoms = surjective_words(k, bot_cap);
        for t in &tops {
            for b in &bottoms {
                out.push(Subst::from_canonical(t.clone(), b.clone()));
            }
        }
    }
    out.sort();
    out
}

/// Words over {1..k} of length <= cap using every letter.
fn surjective_words(k: usize, cap: usize) -> Vec<Word> {
    crate::words::words_up_to_length(cap, k as Letter)
        .into_iter()
        .filter(|w| w.ct() == k)
        .collect()
}

fn first_occurrences_in_order(w: &Word) -> bool {
    let mut seen: Letter = 0;
    for &a in w.letters() {
        if a > seen {
            if a != seen + 1 {
                return false;
            }
            seen = a;
        }
    }
    true
}

/// The double word Hopf algebra with its first structure, enumerated under
/// explicit length caps.
#[derive(Clone, Copy, Debug)]
pub struct DwhaAlg {
    pub top_cap: usize,
    pub bot_cap: usize,
}

impl Coalgebra for DwhaAlg {
    type Key = Subst;

    fn name(&self) -> &'static str {
        "dWHA"
    }

    fn degree(&self, k: &Subst) -> usize {
        k.degree()
    }

    fn unit(&self) -> Subst {
        Subst::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Subst> {
        substitutions(self.top_cap, self.bot_cap)
            .into_iter()
            .filter(|p| p.degree() <= bound)
            .collect()
    }

    fn coproduct(&self, k: &Subst) -> Tensor<Subst> {
        dwha_comul(k)
    }
}

impl HopfAlgebra for DwhaAlg {
    fn product(&self, a: &Subst, b: &Subst) -> Elem<Subst> {
        dwha_mul(a, b)
    }

    fn product_for_each(&self, a: &Subst, b: &Subst, f: &mut dyn FnMut(Subst, i64)) {
        dwha_mul_for_each(a, b, &mut |t| f(t, 1));
    }
}

/// The same underlying group with the second structure.
#[derive(Clone, Copy, Debug)]
pub struct DwhaAlg2 {
    pub top_cap: usize,
    pub bot_cap: usize,
}

impl Coalgebra for DwhaAlg2 {
    type Key = Subst;

    fn name(&self) -> &'static str {
        "dWHA'"
    }

    fn degree(&self, k: &Subst) -> usize {
        k.degree()
    }

    fn unit(&self) -> Subst {
        Subst::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Subst> {
        DwhaAlg { top_cap: self.top_cap, bot_cap: self.bot_cap }.basis(bound)
    }

    fn coproduct(&self, k: &Subst) -> Tensor<Subst> {
        dwha_comul2(k)
    }
}

impl HopfAlgebra for DwhaAlg2 {
    fn product(&self, a: &Subst, b: &Subst) -> Elem<Subst> {
        dwha_mul2(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec())
    }

    fn s(top: &[u32], bottom: &[u32]) -> Subst {
        Subst::new(w(top), w(bottom)).unwrap()
    }

    #[test]
    fn canonicalization_identifies_relabellings() {
        let a = s(&[7, 6, 7, 2, 2, 7, 5], &[6, 2, 6, 5, 7]);
        assert_eq!(a.top(), &w(&[1, 2, 1, 3, 3, 1, 4]));
        assert_eq!(a.bottom(), &w(&[2, 3, 2, 4, 1]));

        // same element written with other symbols
        let b = s(&[13, 24, 13, 2, 2, 13, 1], &[24, 2, 24, 1, 13]);
        assert_eq!(a, b);

        assert_eq!(Subst::new(Word::empty(), Word::empty()).unwrap(), Subst::empty());
        assert!(Subst::new(w(&[1]), w(&[2])).is_err());
    }

    #[test]
    fn degree_counts_distinct_letters() {
        assert_eq!(s(&[1, 2, 1, 3, 3, 1, 4], &[2, 3, 2, 4, 1]).degree(), 4);
        assert_eq!(Subst::empty().degree(), 0);
        assert_eq!(s(&[1, 2, 3], &[3, 1, 2]).degree(), 3);
    }

    #[test]
    fn mul_unit_and_basic_product() {
        let p = s(&[1], &[1]);
        assert_eq!(dwha_mul(&Subst::empty(), &p), Elem::basis(p.clone()));
        assert_eq!(dwha_mul(&p, &Subst::empty()), Elem::basis(p.clone()));

        let got = dwha_mul(&p, &p);
        let expect = Elem::from_terms([(s(&[1, 2], &[1, 2]), 1), (s(&[1, 2], &[2, 1]), 1)]);
        assert_eq!(got, expect);
    }

    #[test]
    fn mul_degree_additive() {
        for p in substitutions(2, 2) {
            for q in substitutions(2, 2) {
                for (t, _) in dwha_mul(&p, &q).terms() {
                    assert_eq!(t.degree(), p.degree() + q.degree());
                }
            }
        }
    }

    #[test]
    fn comul_worked_example() {
        let p = s(&[1, 2, 1, 3, 3, 1, 4, 1, 4], &[2, 3, 2, 4, 1]);
        let got = dwha_comul(&p);
        let expect = Elem::from_terms([
            ((Subst::empty(), p.clone()), 1),
            ((s(&[2, 3, 3], &[2, 3, 2]), s(&[1, 1, 1, 4, 1, 4], &[4, 1])), 1),
            ((s(&[2, 3, 3, 4, 4], &[2, 3, 2, 4]), s(&[1, 1, 1, 1], &[1])), 1),
            ((p.clone(), Subst::empty()), 1),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn comul_trivial_cases() {
        assert_eq!(
            dwha_comul(&Subst::empty()),
            Elem::basis((Subst::empty(), Subst::empty()))
        );
        for p in substitutions(3, 3) {
            let c = dwha_comul(&p);
            assert_eq!(c.coeff(&(Subst::empty(), p.clone())), 1);
            assert_eq!(c.coeff(&(p.clone(), Subst::empty())), 1);
        }
    }

    #[test]
    fn swap_involution_and_inverse_on_permutations() {
        for p in substitutions(3, 3) {
            assert_eq!(p.swap().swap(), p);
        }
        // embedded permutation words swap to their inverses
        let tau = s(&[1, 2, 3], &[2, 3, 1]);
        let expected_inverse = s(&[1, 2, 3], &[3, 1, 2]);
        assert_eq!(tau.swap(), expected_inverse);
        assert_eq!(Subst::empty().swap(), Subst::empty());
    }

    #[test]
    fn second_structure_agrees_with_swap_transport() {
        let p = s(&[1], &[1]);
        let got = dwha_mul2(&p, &p);
        let expect = Elem::from_terms([(s(&[1, 2], &[1, 2]), 1), (s(&[1, 2], &[2, 1]), 1)]);
        assert_eq!(got, expect);

        let all = substitutions(2, 2);
        for p in &all {
            assert_eq!(dwha_comul2(p), dwha_comul2_via_swap(p), "comul2 mismatch at {}", p);
            for q in &all {
                assert_eq!(
                    dwha_mul2(p, q),
                    dwha_mul2_via_swap(p, q),
                    "mul2 mismatch at {} {}",
                    p,
                    q
                );
            }
        }
    }

    #[test]
    fn inner_product_examples() {
        for p in substitutions(2, 2) {
            assert_eq!(inner_product(&p, &p.swap()), 1);
        }
        assert_eq!(inner_product(&s(&[1], &[1]), &s(&[1, 1], &[1, 1])), 0);
        // embedded permutations pair to 1 exactly on mutual inverses
        let sigma = s(&[1, 2, 3], &[2, 3, 1]);
        let tau = s(&[1, 2, 3], &[3, 1, 2]);
        assert_eq!(inner_product(&sigma, &tau), 1);
        assert_eq!(inner_product(&sigma, &sigma), 0);
    }

    #[test]
    fn family_predicates() {
        let perm = s(&[1, 2], &[2, 1]);
        assert!(perm.is_injective() && perm.is_surjective());
        assert!(perm.is_msupp_equal() && perm.is_bounded(1));

        let p = s(&[1, 2, 1, 3, 3, 1, 4], &[2, 3, 2, 4, 1]);
        assert!(!p.is_injective()); // bottom repeats the letter 2
        assert!(!p.is_surjective()); // top repeats

        let q = s(&[1, 1], &[1, 1]);
        assert!(q.is_msupp_equal());
        assert!(q.is_bounded(2));
        assert!(!q.is_bounded(1));
    }

    #[test]
    fn projection_to_permutations() {
        let perm = s(&[1, 2], &[2, 1]);
        assert_eq!(project_mpr(&perm), Elem::basis(Perm::new(w(&[2, 1])).unwrap()));
        assert!(project_mpr(&s(&[1, 1], &[1, 1])).is_zero());
    }

    #[test]
    fn substitution_application() {
        let p = s(&[1, 2, 1, 3, 3, 1, 4], &[2, 3, 2, 4, 1]);
        // pattern requires positions {1,3,6} equal and {4,5} equal
        let okay = w(&[9, 4, 9, 6, 6, 9, 2]);
        assert_eq!(p.apply(&okay), Some(w(&[4, 6, 4, 2, 9])));
        assert_eq!(p.apply(&w(&[9, 4, 8, 6, 6, 9, 2])), None);
        assert_eq!(p.apply(&w(&[1, 2, 3])), None);
        // collapsing assignments are allowed
        let collapsed = w(&[5, 5, 5, 5, 5, 5, 5]);
        assert_eq!(p.apply(&collapsed), Some(w(&[5, 5, 5, 5, 5])));
    }

    #[test]
    fn enumeration_is_closed_under_coproduct_factors() {
        let all = substitutions(2, 2);
        assert!(all.contains(&Subst::empty()));
        for p in &all {
            for ((f1, f2), _) in dwha_comul(p).terms() {
                assert!(all.contains(f1), "{} missing factor {}", p, f1);
                assert!(all.contains(f2), "{} missing factor {}", p, f2);
            }
        }
    }

    #[test]
    fn parse_and_display_round_trip() {
        let p: Subst = "([1,2,1,3,3,1,4] | [2,3,2,4,1])".parse().unwrap();
        assert_eq!(p, s(&[1, 2, 1, 3, 3, 1, 4], &[2, 3, 2, 4, 1]));
        assert_eq!(p.to_string().parse::<Subst>().unwrap(), p);
        assert!("([1] | [2])".parse::<Subst>().is_err());
    }
}
