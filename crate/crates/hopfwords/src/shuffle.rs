//! The shuffle Hopf algebra, its graded dual of noncommutative monomials,
//! and the endomorphism picture: permutations and words acting on the word
//! basis, convolution, and the coconvolution component extraction that
//! recovers the permutation coproduct.

use crate::elem::{bilinear, Elem, Tensor};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::wha::encode;
use crate::words::{
    cuts, interleavings, shuffle, standardize, subwords_with_complement, words_of_weight_up_to,
    Letter, Perm, Word,
};
use std::rc::Rc;

/// Hopf algebra of words under the shuffle product and the cut coproduct,
/// graded by weight.
#[derive(Clone, Copy, Debug, Default)]
pub struct ShuffleAlg;

impl Coalgebra for ShuffleAlg {
    type Key = Word;

    fn name(&self) -> &'static str {
        "Shuffle"
    }

    fn degree(&self, k: &Word) -> usize {
        k.wt()
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Word> {
        words_of_weight_up_to(bound)
    }

    fn coproduct(&self, k: &Word) -> Tensor<Word> {
        let mut out = Elem::zero();
        for (u, v) in cuts(k) {
            out.add_term((u, v), 1);
        }
        out
    }
}

impl HopfAlgebra for ShuffleAlg {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        shuffle(a, b)
    }
}

/// The free associative algebra on one generator per positive integer,
/// graded by weight; the coproduct makes the generators primitive, so on a
/// monomial it is the sum over all subword/complement pairs. Graded dual
/// of `ShuffleAlg` under the Kronecker pairing on words.
#[derive(Clone, Copy, Debug, Default)]
pub struct LieHopfAlg;

impl Coalgebra for LieHopfAlg {
    type Key = Word;

    fn name(&self) -> &'static str {
        "LieHopf"
    }

    fn degree(&self, k: &Word) -> usize {
        k.wt()
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Word> {
        words_of_weight_up_to(bound)
    }

    fn coproduct(&self, k: &Word) -> Tensor<Word> {
        let mut out = Elem::zero();
        for (sub, comp) in subwords_with_complement(k) {
            out.add_term((sub, comp), 1);
        }
        out
    }
}

impl HopfAlgebra for LieHopfAlg {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        Elem::basis(a.concat(b))
    }
}

/// A permutation acting on the word basis: zero unless the lengths match,
/// otherwise position-wise selection.
pub fn perm_action(s: &Perm, alpha: &Word) -> Elem<Word> {
    if alpha.lg() != s.len() {
        return Elem::zero();
    }
    let letters: Vec<Letter> = (1..=s.len()).map(|i| alpha.letters()[s.image(i) - 1]).collect();
    Elem::basis(Word::new(letters))
}

/// A word acting on the word basis through its staircase substitution:
/// zero unless the argument has length ht(alpha) and carries the block
/// equalities of the staircase top; otherwise letter selection at the
/// positions named by alpha.
pub fn wha_action(alpha: &Word, w: &Word) -> Elem<Word> {
    match encode(alpha).apply(w) {
        Some(out) => Elem::basis(out),
        None => Elem::zero(),
    }
}

type EndoFn = Rc<dyn Fn(&Word) -> Elem<Word>>;

/// An endomorphism of the span of words, represented extensionally: it can
/// only be evaluated, which is all the convolution checks need.
#[derive(Clone)]
pub struct GradedEndo {
    f: EndoFn,
}

impl GradedEndo {
    pub fn new(f: impl Fn(&Word) -> Elem<Word> + 'static) -> Self {
        GradedEndo { f: Rc::new(f) }
    }

    /// The action of a single permutation.
    pub fn of_perm(p: &Perm) -> Self {
        let p = p.clone();
        GradedEndo::new(move |w| perm_action(&p, w))
    }

    /// The action of a linear combination of permutations.
    pub fn of_perm_elem(e: &Elem<Perm>) -> Self {
        let e = e.clone();
        GradedEndo::new(move |w| {
            let mut out = Elem::zero();
            for (p, c) in e.terms() {
                out = out.add(&perm_action(p, w).scale(c));
            }
            out
        })
    }

    /// The action of a word through its staircase substitution.
    pub fn of_word(alpha: &Word) -> Self {
        let alpha = alpha.clone();
        GradedEndo::new(move |w| wha_action(&alpha, w))
    }

    /// The convolution unit: the composite of counit and unit.
    pub fn convolution_unit() -> Self {
        GradedEndo::new(|w| {
            if w.is_empty() {
                Elem::basis(Word::empty())
            } else {
                Elem::zero()
            }
        })
    }

    pub fn eval(&self, w: &Word) -> Elem<Word> {
        (self.f)(w)
    }

    /// Convolution: cut the argument, apply the two endomorphisms to the
    /// halves, shuffle the results back together.
    pub fn convolve(&self, other: &GradedEndo) -> GradedEndo {
        let f = self.f.clone();
        let g = other.f.clone();
        GradedEndo::new(move |w| {
            let mut out = Elem::zero();
            for (u, v) in cuts(w) {
                out = out.add(&bilinear(shuffle, &f(&u), &g(&v)));
            }
            out
        })
    }
}

/// Letters tagged by which tensor factor they came from, used to trace the
/// coconvolution of a permutation on a generic product word.
type Tagged = (bool, usize);

/// Extracts the (m, n) component of the coconvolution of a permutation:
/// feeds a generic tensor of formally distinct letters through shuffle,
/// the permutation action and cut, and keeps exactly the cuts with all
/// first-factor letters on the left and all second-factor letters on the
/// right, standardizing the index patterns of the two halves.
pub fn coconv_component(s: &Perm, m: usize, n: usize) -> Tensor<Perm> {
    assert_eq!(m + n, s.len(), "component sizes must sum to the length");
    let left: Vec<Tagged> = (1..=m).map(|i| (false, i)).collect();
    let right: Vec<Tagged> = (m + 1..=m + n).map(|i| (true, i)).collect();
    let mut out = Elem::zero();
    for u in interleavings(&left, &right) {
        let permuted: Vec<Tagged> = (1..=s.len()).map(|i| u[s.image(i) - 1]).collect();
        for t in 0..=permuted.len() {
            let (l, r) = permuted.split_at(t);
            if l.iter().any(|&(b, _)| b) || r.iter().any(|&(b, _)| !b) {
                continue;
            }
            let lword = Word::new(l.iter().map(|&(_, i)| i as Letter).collect());
            let rword = Word::new(r.iter().map(|&(_, i)| i as Letter).collect());
            out.add_term((standardize(&lword), standardize(&rword)), 1);
        }
    }
    out
}

/// The words-as-height-actions structure: the product is the word Hopf
/// algebra product, but the coproduct comes from applying the component
/// extraction to the height action, which picks letters by position from
/// any word of length ht. This does yield a comultiplication, but not a
/// Hopf algebra; it is kept as a negative control for the checkers.
#[derive(Clone, Copy, Debug, Default)]
pub struct HeightActionAlg;

/// The plain height action: a word of height m picks letters by
/// position out of any length-m word.
pub fn height_action(alpha: &Word, w: &Word) -> Elem<Word> {
    if w.lg() != alpha.ht() {
        return Elem::zero();
    }
    let letters: Vec<Letter> =
        alpha.letters().iter().map(|&a| w.letters()[a as usize - 1]).collect();
    Elem::basis(Word::new(letters))
}

impl Coalgebra for HeightActionAlg {
    type Key = Word;

    fn name(&self) -> &'static str {
        "height-action words"
    }

    fn degree(&self, k: &Word) -> usize {
        k.ht()
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Word> {
        words_of_weight_up_to(bound)
    }

    fn coproduct(&self, k: &Word) -> Tensor<Word> {
        if k.is_empty() {
            return Elem::basis((Word::empty(), Word::empty()));
        }
        let h = k.ht();
        let mut out = Elem::zero();
        for m in 0..=h {
            let left: Vec<Tagged> = (1..=m).map(|i| (false, i)).collect();
            let right: Vec<Tagged> = (m + 1..=h).map(|i| (true, i)).collect();
            for u in interleavings(&left, &right) {
                let picked: Vec<Tagged> =
                    k.letters().iter().map(|&a| u[a as usize - 1]).collect();
                for t in 0..=picked.len() {
                    let (l, r) = picked.split_at(t);
                    if l.iter().any(|&(b, _)| b) || r.iter().any(|&(b, _)| !b) {
                        continue;
                    }
                    let lword = Word::new(l.iter().map(|&(_, i)| i as Letter).collect());
                    let rword =
                        Word::new(r.iter().map(|&(_, i)| (i - m) as Letter).collect());
                    out.add_term((lword, rword), 1);
                }
            }
        }
        out
    }

    fn bound_weight(&self, k: &Word) -> usize {
        k.wt()
    }
}

impl HopfAlgebra for HeightActionAlg {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        crate::wha::wha_mul(a, b)
    }
}

/// The convolution identity: for permutations, convolution of the actions
/// equals the action of the permutation product, on every word over a
/// small alphabet of the matching length.
pub fn check_convolution_identity(len_bound: usize, alphabet: Letter) -> crate::hopf::CheckReport {
    let mut report = crate::hopf::CheckReport {
        suite: "convolution of actions vs permutation product".into(),
        bound: format!("lg + lg <= {}, alphabet {{1..{}}}", len_bound, alphabet),
        cases: 0,
        failure: None,
    };
    for m in 0..=len_bound {
        for n in 0..=len_bound.saturating_sub(m) {
            for s in Perm::all(m) {
                for t in Perm::all(n) {
                    let conv = GradedEndo::of_perm(&s).convolve(&GradedEndo::of_perm(&t));
                    let prod = GradedEndo::of_perm_elem(&crate::mpr::mpr_mul(&s, &t));
                    for w in all_words_of_length(m + n, alphabet) {
                        report.cases += 1;
                        let lhs = conv.eval(&w);
                        let rhs = prod.eval(&w);
                        if lhs != rhs {
                            report.failure = Some(crate::hopf::CheckFailure {
                                case: format!("conv({}, {}) on {}", s, t, w),
                                lhs: lhs.to_string(),
                                rhs: rhs.to_string(),
                            });
                            return report;
                        }
                    }
                }
            }
        }
    }
    report
}

/// Componentwise agreement of the coconvolution extraction with the
/// permutation coproduct, for all permutations up to the bound.
pub fn check_coconv_components(n_bound: usize) -> crate::hopf::CheckReport {
    let mut report = crate::hopf::CheckReport {
        suite: "coconvolution components vs permutation coproduct".into(),
        bound: format!("n <= {}", n_bound),
        cases: 0,
        failure: None,
    };
    for n in 0..=n_bound {
        for s in Perm::all(n) {
            let coproduct = crate::mpr::mpr_comul(&s);
            let mut total: Tensor<Perm> = Elem::zero();
            for m in 0..=n {
                let component = coconv_component(&s, m, n - m);
                total = total.add(&component);
                // the component must equal the matching-degree part
                let expected_part = Elem::from_terms(
                    coproduct
                        .terms()
                        .filter(|((l, r), _)| l.len() == m && r.len() == n - m)
                        .map(|(k, c)| (k.clone(), c)),
                );
                report.cases += 1;
                if component != expected_part {
                    report.failure = Some(crate::hopf::CheckFailure {
                        case: format!("({}, {}) component of {}", m, n - m, s),
                        lhs: crate::parse::display_tensor(&component),
                        rhs: crate::parse::display_tensor(&expected_part),
                    });
                    return report;
                }
            }
            report.cases += 1;
            if total != coproduct {
                report.failure = Some(crate::hopf::CheckFailure {
                    case: format!("component sum of {}", s),
                    lhs: crate::parse::display_tensor(&total),
                    rhs: crate::parse::display_tensor(&coproduct),
                });
                return report;
            }
        }
    }
    report
}

fn all_words_of_length(len: usize, alphabet: Letter) -> Vec<Word> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &out {
            for a in 1..=alphabet {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out = next;
    }
    out.into_iter().map(Word::new).collect()
}
