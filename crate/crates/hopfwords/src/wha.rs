//! The word Hopf algebra: all words over the positive integers, with the
//! height-shifted shuffle as product.
//!
//! Words correspond bijectively to "staircase" substitutions (top word of
//! the shape [1^r1, 2^r2, ..., k^rk]); the product can be written directly
//! at word level, while the coproduct is transported through the encoding.
//! Guessing a closed word-level coproduct formula is surprisingly hard, so
//! the transported definition is the definition here, anchored by worked
//! examples in the tests.

use crate::elem::{Elem, Tensor};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::subst::{dwha_comul, Subst};
use crate::words::{shuffle, standardize, surjective_standardize, Letter, Perm, Word};
use std::fmt;

/// Encodes a word as its staircase substitution: for support
/// a'_1 < ... < a'_k the top is [1^r1, ..., k^rk] with r_1 = a'_1 and
/// r_i = a'_i - a'_{i-1}; the bottom is the index pattern of the word.
pub fn encode(alpha: &Word) -> Subst {
    let supp: Vec<Letter> = alpha.supp().into_iter().collect();
    let mut top = Vec::new();
    let mut prev = 0;
    for (i, &a) in supp.iter().enumerate() {
        let run = (a - prev) as usize;
        top.extend(std::iter::repeat_n((i + 1) as Letter, run));
        prev = a;
    }
    let index_of = |x: Letter| (supp.binary_search(&x).expect("letter in support") + 1) as Letter;
    let bottom = Word::new(alpha.letters().iter().map(|&x| index_of(x)).collect());
    Subst::from_canonical(Word::new(top), bottom)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotStaircase(pub Subst);

impl fmt::Display for NotStaircase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "substitution {} does not have a staircase top", self.0)
    }
}

impl std::error::Error for NotStaircase {}

/// Inverse of `encode`: reads the block sizes r_i off the staircase top and
/// maps each bottom index i to r_1 + ... + r_i.
pub fn decode(p: &Subst) -> Result<Word, NotStaircase> {
    if !p.is_staircase() {
        return Err(NotStaircase(p.clone()));
    }
    let mut partial: Vec<usize> = Vec::new(); // partial[i] = r_1 + ... + r_{i+1}
    for &t in p.top().letters() {
        let i = t as usize - 1;
        if i == partial.len() {
            let base = if i == 0 { 0 } else { partial[i - 1] };
            partial.push(base + 1);
        } else {
            partial[i] += 1;
        }
    }
    Ok(Word::new(p.bottom().letters().iter().map(|&i| partial[i as usize - 1] as Letter).collect()))
}

/// Whether a substitution lies in the image of `encode`.
pub fn is_wha(p: &Subst) -> bool {
    p.is_staircase()
}

/// The word-level product: shuffle the first word with the second shifted
/// up by the height of the first. Agrees with the permutation product when
/// the first word is a permutation word.
pub fn wha_mul(alpha: &Word, beta: &Word) -> Elem<Word> {
    shuffle(alpha, &beta.shift(alpha.ht() as Letter))
}

/// The word-level coproduct, transported through the staircase encoding.
pub fn wha_comul(alpha: &Word) -> Tensor<Word> {
    dwha_comul(&encode(alpha)).map_key(|(p, q)| {
        (decode(p).expect("coproduct factor is staircase"), decode(q).expect("coproduct factor is staircase"))
    })
}

/// Hopf retraction onto the surjective words: relabel the support
/// monotonically onto {1..content}. Fixes surjective words.
pub fn std_surj_retract(alpha: &Word) -> Word {
    surjective_standardize(alpha)
}

/// Schensted standardization as a map into permutation words. An algebra
/// morphism but not a coalgebra morphism.
pub fn schensted_to_mpr(alpha: &Word) -> Perm {
    standardize(alpha)
}

/// The word Hopf algebra. The Hopf grading is by content (the number of
/// distinct letters), which the staircase encoding identifies with the
/// substitution grading; weight is NOT additive for this product. `basis`
/// enumerates by weight, which is the natural finite truncation of the
/// word basis, so `bound_weight` is the weight.
#[derive(Clone, Copy, Debug, Default)]
pub struct WhaAlg;

impl Coalgebra for WhaAlg {
    type Key = Word;

    fn name(&self) -> &'static str {
        "WHA"
    }

    fn degree(&self, k: &Word) -> usize {
        k.ct()
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Word> {
        crate::words::words_of_weight_up_to(bound)
    }

    fn coproduct(&self, k: &Word) -> Tensor<Word> {
        wha_comul(k)
    }

    fn bound_weight(&self, k: &Word) -> usize {
        k.wt()
    }
}

impl HopfAlgebra for WhaAlg {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        wha_mul(a, b)
    }
}

/// The word Hopf algebra under the alternate length grading, enumerated
/// over a capped alphabet so each working set is finite.
#[derive(Clone, Copy, Debug)]
pub struct WhaLengthAlg {
    pub max_letter: Letter,
}

impl Coalgebra for WhaLengthAlg {
    type Key = Word;

    fn name(&self) -> &'static str {
        "WHA (length graded)"
    }

    fn degree(&self, k: &Word) -> usize {
        k.lg()
    }

    fn unit(&self) -> Word {
        Word::empty()
    }

    fn basis(&self, bound: usize) -> Vec<Word> {
        crate::words::words_up_to_length(bound, self.max_letter)
    }

    fn coproduct(&self, k: &Word) -> Tensor<Word> {
        wha_comul(k)
    }
}

impl HopfAlgebra for WhaLengthAlg {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        wha_mul(a, b)
    }
}
