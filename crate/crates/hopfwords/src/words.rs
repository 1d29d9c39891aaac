//! Words over the positive integers and their combinatorics.
//!
//! A word is a finite sequence of letters from {1, 2, 3, ...}; the empty
//! word is allowed and serves as the unit of every algebra built here.
//! This module collects the word statistics, the two shuffle products,
//! cuts and good cuts, subword/complement pairs and both standardization
//! maps. Permutation words get their own validated type.

use crate::elem::Elem;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

pub type Letter = u32;

/// A finite sequence of positive integers. The letters sit behind a shared
/// allocation, so cloning a word (which the sparse-element machinery does
/// constantly) is a reference-count bump.
#[derive(Clone, Eq, Debug)]
pub struct Word(Arc<[Letter]>);

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

// contents-based, matching PartialEq (the pointer check is only a fast path)
impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.hash(state);
    }
}

impl Word {
    /// Panics on a zero letter; untrusted input goes through `FromStr`.
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(letters.iter().all(|&a| a >= 1), "word letters must be >= 1");
        Word(letters.into())
    }

    pub(crate) fn from_slice(letters: &[Letter]) -> Self {
        debug_assert!(letters.iter().all(|&a| a >= 1));
        Word(letters.into())
    }

    pub fn empty() -> Self {
        Word(Vec::new().into())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length lg.
    pub fn lg(&self) -> usize {
        self.0.len()
    }

    /// Weight: the sum of the letters.
    pub fn wt(&self) -> usize {
        self.0.iter().map(|&a| a as usize).sum()
    }

    /// Height: the largest letter, 0 for the empty word.
    pub fn ht(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0) as usize
    }

    /// The set of distinct letters.
    pub fn supp(&self) -> BTreeSet<Letter> {
        self.0.iter().copied().collect()
    }

    /// Content: the number of distinct letters.
    pub fn ct(&self) -> usize {
        self.supp().len()
    }

    /// The distinct letters together with their multiplicities.
    pub fn msupp(&self) -> Multiset {
        let mut m = BTreeMap::new();
        for &a in self.0.iter() {
            *m.entry(a).or_insert(0) += 1;
        }
        Multiset(m)
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.lg() + other.lg());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v.into())
    }

    /// Adds `by` to every letter.
    pub fn shift(&self, by: Letter) -> Word {
        Word(self.0.iter().map(|&a| a.checked_add(by).expect("letter overflow")).collect::<Vec<_>>().into())
    }

    /// No letter repeats.
    pub fn is_injective(&self) -> bool {
        self.ct() == self.lg()
    }

    /// No gaps: the content equals the height.
    pub fn is_surjective(&self) -> bool {
        self.ct() == self.ht()
    }

    /// Injective and surjective: a permutation word of {1..n}.
    pub fn is_permutation(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    /// The maximal subword whose letters lie in `set`.
    pub fn restrict_letters(&self, set: &BTreeSet<Letter>) -> Word {
        Word(self.0.iter().copied().filter(|a| set.contains(a)).collect::<Vec<_>>().into())
    }
}

/// Words are ordered by length, then lexicographically. All term iteration
/// in `Elem<Word>` follows this order.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return std::cmp::Ordering::Equal;
        }
        self.lg().cmp(&other.lg()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", a)?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.pos, self.msg)
    }
}

impl std::error::Error for ParseError {}

impl FromStr for Word {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let off = s.len() - s.trim_start().len();
        if !t.starts_with('[') {
            return Err(ParseError { pos: off, msg: "expected '['".into() });
        }
        if !t.ends_with(']') {
            return Err(ParseError { pos: off + t.len(), msg: "expected ']'".into() });
        }
        let inner = &t[1..t.len() - 1];
        if inner.trim().is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        let mut cursor = off + 1;
        for piece in inner.split(',') {
            let p = piece.trim();
            match p.parse::<i64>() {
                Ok(n) if n >= 1 && n <= u32::MAX as i64 => letters.push(n as u32),
                Ok(_) => {
                    return Err(ParseError { pos: cursor, msg: format!("letter '{}' out of range (must be >= 1)", p) })
                }
                Err(_) => {
                    return Err(ParseError { pos: cursor, msg: format!("invalid letter '{}'", p) })
                }
            }
            cursor += piece.len() + 1;
        }
        Ok(Word(letters.into()))
    }
}

/// A multiset of positive integers with positive multiplicities.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multiset(BTreeMap<Letter, usize>);

impl Multiset {
    pub fn from_pairs<I: IntoIterator<Item = (Letter, usize)>>(it: I) -> Self {
        let m: BTreeMap<_, _> = it.into_iter().collect();
        assert!(m.values().all(|&r| r >= 1), "multiplicities must be >= 1");
        Multiset(m)
    }

    pub fn multiplicity(&self, a: Letter) -> usize {
        self.0.get(&a).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (Letter, usize)> + '_ {
        self.0.iter().map(|(&a, &r)| (a, r))
    }
}

impl fmt::Display for Multiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (a, r)) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            if *r == 1 {
                write!(f, "{}", a)?;
            } else {
                write!(f, "{}^{}", a, r)?;
            }
        }
        write!(f, "}}")
    }
}

/// All interleavings of `a` and `b` preserving each factor's internal
/// order, with multiplicities. Generic so tagged alphabets can reuse it.
pub(crate) fn interleavings<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    fn go<T: Clone>(a: &[T], b: &[T], buf: &mut Vec<T>, out: &mut Vec<Vec<T>>) {
        if a.is_empty() && b.is_empty() {
            out.push(buf.clone());
            return;
        }
        if let Some((x, rest)) = a.split_first() {
            buf.push(x.clone());
            go(rest, b, buf, out);
            buf.pop();
        }
        if let Some((y, rest)) = b.split_first() {
            buf.push(y.clone());
            go(a, rest, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(a, b, &mut Vec::new(), &mut out);
    out
}

/// Walks every interleaving of `a` and `b`, invoking the callback on the
/// filled buffer. The raw engine behind the shuffle products.
pub(crate) fn for_each_interleaving<F: FnMut(&[Letter])>(a: &[Letter], b: &[Letter], mut f: F) {
    fn go<F: FnMut(&[Letter])>(a: &[Letter], b: &[Letter], buf: &mut Vec<Letter>, f: &mut F) {
        if a.is_empty() && b.is_empty() {
            f(buf);
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            buf.push(x);
            go(rest, b, buf, f);
            buf.pop();
        }
        if let Some((&y, rest)) = b.split_first() {
            buf.push(y);
            go(a, rest, buf, f);
            buf.pop();
        }
    }
    go(a, b, &mut Vec::with_capacity(a.len() + b.len()), &mut f);
}

/// The shuffle product: the sum over all interleavings, with multiplicities.
pub fn shuffle(a: &Word, b: &Word) -> Elem<Word> {
    let mut buf = Vec::new();
    for_each_interleaving(a.letters(), b.letters(), |w| buf.push((Word::from_slice(w), 1)));
    Elem::from_term_vec(buf)
}

/// The overlapping shuffle product: interleavings may additionally collide
/// one letter of each factor into a single slot, adding the two entries.
pub fn overlapping_shuffle(a: &Word, b: &Word) -> Elem<Word> {
    fn go(a: &[Letter], b: &[Letter], buf: &mut Vec<Letter>, out: &mut Elem<Word>) {
        if a.is_empty() && b.is_empty() {
            out.add_term(Word::from_slice(buf), 1);
            return;
        }
        if let Some((&x, rest)) = a.split_first() {
            buf.push(x);
            go(rest, b, buf, out);
            buf.pop();
        }
        if let Some((&y, rest)) = b.split_first() {
            buf.push(y);
            go(a, rest, buf, out);
            buf.pop();
        }
        if let (Some((&x, ra)), Some((&y, rb))) = (a.split_first(), b.split_first()) {
            buf.push(x.checked_add(y).expect("letter overflow"));
            go(ra, rb, buf, out);
            buf.pop();
        }
    }
    let mut out = Elem::zero();
    go(a.letters(), b.letters(), &mut Vec::new(), &mut out);
    out
}

/// The lg+1 prefix/suffix splittings, by increasing prefix length.
pub fn cuts(a: &Word) -> Vec<(Word, Word)> {
    (0..=a.lg())
        .map(|i| (Word::from_slice(&a.0[..i]), Word::from_slice(&a.0[i..])))
        .collect()
}

/// Cuts whose two halves have disjoint supports. The trivial cuts always
/// qualify.
pub fn good_cuts(a: &Word) -> Vec<(Word, Word)> {
    cuts(a)
        .into_iter()
        .filter(|(p, s)| p.supp().is_disjoint(&s.supp()))
        .collect()
}

/// All 2^lg subword/complement pairs, in binary-counter order over index
/// subsets (bit i of the counter selects position i into the subword).
pub fn subwords_with_complement(a: &Word) -> Vec<(Word, Word)> {
    let m = a.lg();
    assert!(m < usize::BITS as usize, "word too long for subword enumeration");
    let mut out = Vec::with_capacity(1 << m);
    for mask in 0usize..(1 << m) {
        let mut sub = Vec::new();
        let mut comp = Vec::new();
        for (i, &x) in a.0.iter().enumerate() {
            if mask >> i & 1 == 1 {
                sub.push(x);
            } else {
                comp.push(x);
            }
        }
        out.push((Word(sub.into()), Word(comp.into())));
    }
    out
}

/// Schensted standardization: equal letters receive consecutive integers
/// left to right, smaller letters first. Restricted to repeat-free words
/// this is the unique order-preserving relabelling onto {1..lg}.
pub fn standardize(a: &Word) -> Perm {
    let m = a.lg();
    let mut idx: Vec<usize> = (0..m).collect();
    idx.sort_by_key(|&i| (a.0[i], i));
    let mut letters = vec![0u32; m];
    for (rank, &i) in idx.iter().enumerate() {
        letters[i] = (rank + 1) as u32;
    }
    Perm::new(Word(letters.into())).expect("standardization yields a permutation")
}

/// Relabels the letters by the unique strictly monotone bijection from the
/// support onto {1..ct}, removing the gaps.
pub fn surjective_standardize(a: &Word) -> Word {
    let relabel: BTreeMap<Letter, Letter> = a
        .supp()
        .into_iter()
        .enumerate()
        .map(|(i, x)| (x, (i + 1) as u32))
        .collect();
    Word(a.0.iter().map(|x| relabel[x]).collect::<Vec<_>>().into())
}

/// All compositions of `n` (words of weight exactly `n`), in word order.
pub fn compositions_of(n: usize) -> Vec<Word> {
    fn go(rem: usize, buf: &mut Vec<Letter>, out: &mut Vec<Word>) {
        if rem == 0 {
            out.push(Word::from_slice(buf));
            return;
        }
        for first in 1..=rem {
            buf.push(first as u32);
            go(rem - first, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All words of weight at most `bound`, in word order.
pub fn words_of_weight_up_to(bound: usize) -> Vec<Word> {
    let mut out: Vec<Word> = (0..=bound).flat_map(compositions_of).collect();
    out.sort();
    out
}

/// All words of length at most `len` over the alphabet {1..max_letter}.
pub fn words_up_to_length(len: usize, max_letter: Letter) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Vec::<Letter>::new()];
    for _ in 0..len {
        let mut next = Vec::new();
        for w in &layer {
            for a in 1..=max_letter {
                let mut v = w.clone();
                v.push(a);
                next.push(v);
            }
        }
        out.extend(next.iter().map(|v| Word::from_slice(v)));
        layer = next;
    }
    out.sort();
    out
}

/// A word that is a bijection onto {1..n}.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Perm(Word);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotAPermutation(pub Word);

impl fmt::Display for NotAPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is not a permutation word", self.0)
    }
}

impl std::error::Error for NotAPermutation {}

impl Perm {
    pub fn new(w: Word) -> Result<Perm, NotAPermutation> {
        if w.is_permutation() {
            Ok(Perm(w))
        } else {
            Err(NotAPermutation(w))
        }
    }

    pub fn identity(n: usize) -> Perm {
        Perm(Word((1..=n as u32).collect::<Vec<_>>().into()))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub fn letters(&self) -> &[Letter] {
        self.0.letters()
    }

    pub fn len(&self) -> usize {
        self.0.lg()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of position `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.0 .0[i - 1] as usize
    }

    pub fn inverse(&self) -> Perm {
        let n = self.len();
        let mut v = vec![0u32; n];
        for (i, &t) in self.letters().iter().enumerate() {
            v[(t - 1) as usize] = (i + 1) as u32;
        }
        Perm(Word(v.into()))
    }

    /// The subword of letters whose values lie in `set`.
    pub fn restrict_values(&self, set: &BTreeSet<Letter>) -> Word {
        self.0.restrict_letters(set)
    }

    /// All permutations of {1..n} in lexicographic order.
    pub fn all(n: usize) -> Vec<Perm> {
        fn go(remaining: &mut Vec<u32>, buf: &mut Vec<u32>, out: &mut Vec<Perm>) {
            if remaining.is_empty() {
                out.push(Perm(Word::from_slice(buf)));
                return;
            }
            for i in 0..remaining.len() {
                let x = remaining.remove(i);
                buf.push(x);
                go(remaining, buf, out);
                buf.pop();
                remaining.insert(i, x);
            }
        }
        let mut out = Vec::new();
        go(&mut (1..=n as u32).collect(), &mut Vec::new(), &mut out);
        out
    }

    /// All permutations of length 0 through `n`.
    pub fn all_up_to(n: usize) -> Vec<Perm> {
        (0..=n).flat_map(Perm::all).collect()
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for Perm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let w: Word = s.parse()?;
        Perm::new(w).map_err(|e| ParseError { pos: 0, msg: e.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::elem::Elem;
    use proptest::prelude::*;

    fn w(v: &[u32]) -> Word {
        Word::new(v.to_vec())
    }

    #[test]
    fn stats_of_sample_word() {
        let a = w(&[3, 2, 7, 2, 4]);
        assert_eq!(a.lg(), 5);
        assert_eq!(a.wt(), 18);
        assert_eq!(a.ht(), 7);
        assert_eq!(a.supp(), [2u32, 3, 4, 7].into_iter().collect());
    }

    #[test]
    fn msupp_example() {
        let a = w(&[6, 5, 7, 2, 5, 6, 1, 1, 5]);
        let expect = Multiset::from_pairs([(1, 2), (2, 1), (5, 3), (6, 2), (7, 1)]);
        assert_eq!(a.msupp(), expect);
    }

    #[test]
    fn stats_of_empty_word() {
        let e = Word::empty();
        assert_eq!((e.lg(), e.wt(), e.ht()), (0, 0, 0));
        assert!(e.supp().is_empty());
    }

    #[test]
    fn shuffle_singleton_into_three() {
        let got = shuffle(&w(&[3]), &w(&[1, 2, 4]));
        let expect = Elem::from_terms([
            (w(&[3, 1, 2, 4]), 1),
            (w(&[1, 3, 2, 4]), 1),
            (w(&[1, 2, 3, 4]), 1),
            (w(&[1, 2, 4, 3]), 1),
        ]);
        assert_eq!(got, expect);
    }

    #[test]
    fn shuffle_with_multiplicity() {
        let got = shuffle(&w(&[1]), &w(&[1, 2]));
        let expect = Elem::from_terms([(w(&[1, 1, 2]), 2), (w(&[1, 2, 1]), 1)]);
        assert_eq!(got, expect);
    }

    #[test]
    fn shuffle_unit() {
        let a = w(&[4, 1, 4]);
        assert_eq!(shuffle(&Word::empty(), &a), Elem::basis(a.clone()));
        assert_eq!(shuffle(&a, &Word::empty()), Elem::basis(a));
    }

    #[test]
    fn overlapping_shuffle_examples() {
        let got = overlapping_shuffle(&w(&[2]), &w(&[1, 5, 3]));
        let expect = Elem::from_terms([
            (w(&[2, 1, 5, 3]), 1),
            (w(&[1, 2, 5, 3]), 1),
            (w(&[1, 5, 2, 3]), 1),
            (w(&[1, 5, 3, 2]), 1),
            (w(&[3, 5, 3]), 1),
            (w(&[1, 7, 3]), 1),
            (w(&[1, 5, 5]), 1),
        ]);
        assert_eq!(got, expect);

        let got = overlapping_shuffle(&w(&[1, 1]), &w(&[1, 1]));
        let expect = Elem::from_terms([
            (w(&[1, 1, 1, 1]), 6),
            (w(&[1, 1, 2]), 2),
            (w(&[1, 2, 1]), 2),
            (w(&[2, 1, 1]), 2),
            (w(&[2, 2]), 1),
        ]);
        assert_eq!(got, expect);

        assert_eq!(overlapping_shuffle(&Word::empty(), &w(&[9])), Elem::basis(w(&[9])));
    }

    #[test]
    fn cuts_enumeration() {
        assert_eq!(
            cuts(&w(&[1, 2])),
            vec![
                (Word::empty(), w(&[1, 2])),
                (w(&[1]), w(&[2])),
                (w(&[1, 2]), Word::empty()),
            ]
        );
        assert_eq!(cuts(&Word::empty()), vec![(Word::empty(), Word::empty())]);
        assert_eq!(cuts(&w(&[5])).len(), 2);
    }

    #[test]
    fn good_cuts_examples() {
        let gc = good_cuts(&w(&[2, 3, 2, 4, 1]));
        assert_eq!(
            gc,
            vec![
                (Word::empty(), w(&[2, 3, 2, 4, 1])),
                (w(&[2, 3, 2]), w(&[4, 1])),
                (w(&[2, 3, 2, 4]), w(&[1])),
                (w(&[2, 3, 2, 4, 1]), Word::empty()),
            ]
        );

        // injective words: every cut is good
        let inj = w(&[3, 1, 4, 2]);
        assert_eq!(good_cuts(&inj), cuts(&inj));

        // a shared letter blocks the middle cut
        assert_eq!(good_cuts(&w(&[1, 1])).len(), 2);
    }

    #[test]
    fn subword_complement_count_and_grouping() {
        let pairs = subwords_with_complement(&w(&[1, 1, 3]));
        assert_eq!(pairs.len(), 8);
        let mut grouped: Elem<(Word, Word)> = Elem::zero();
        for (s, c) in pairs {
            grouped.add_term((s, c), 1);
        }
        assert_eq!(grouped.coeff(&(w(&[1]), w(&[1, 3]))), 2);
        assert_eq!(grouped.coeff(&(w(&[1, 3]), w(&[1]))), 2);
        assert_eq!(grouped.coeff(&(w(&[3]), w(&[1, 1]))), 1);

        assert_eq!(subwords_with_complement(&Word::empty()).len(), 1);
        assert_eq!(subwords_with_complement(&w(&[2, 5])).len(), 4);
    }

    #[test]
    fn standardize_examples() {
        assert_eq!(standardize(&w(&[5, 2, 1, 8])).word(), &w(&[3, 2, 1, 4]));
        assert_eq!(
            standardize(&w(&[4, 3, 3, 7, 4, 8, 4])).word(),
            &w(&[3, 1, 2, 6, 4, 7, 5])
        );
        let id = w(&[2, 3, 1]);
        assert_eq!(standardize(&id).word(), &id);
    }

    #[test]
    fn surjective_standardize_examples() {
        assert_eq!(surjective_standardize(&w(&[3, 2, 7, 2, 4])), w(&[2, 1, 4, 1, 3]));
        let s = w(&[2, 1, 2, 3]);
        assert_eq!(surjective_standardize(&s), s);
        assert_eq!(surjective_standardize(&Word::empty()), Word::empty());
    }

    #[test]
    fn composition_counts() {
        assert_eq!(compositions_of(0).len(), 1);
        for n in 1..=6 {
            assert_eq!(compositions_of(n).len(), 1 << (n - 1));
        }
    }

    #[test]
    fn perm_enumeration_and_inverse() {
        assert_eq!(Perm::all(3).len(), 6);
        assert_eq!(Perm::all(0), vec![Perm::identity(0)]);
        let p: Perm = "[2,3,1]".parse().unwrap();
        assert_eq!(p.inverse().word(), &w(&[3, 1, 2]));
        assert_eq!(p.inverse().inverse(), p);
        assert!("[1,3]".parse::<Perm>().is_err());
    }

    #[test]
    fn word_parsing() {
        assert_eq!("[3,2,7,2,4]".parse::<Word>().unwrap(), w(&[3, 2, 7, 2, 4]));
        assert_eq!("[]".parse::<Word>().unwrap(), Word::empty());
        assert_eq!(" [ 1 , 2 ] ".parse::<Word>().unwrap(), w(&[1, 2]));
        assert!("[0]".parse::<Word>().is_err());
        assert!("[-3]".parse::<Word>().is_err());
        assert!("[1,]".parse::<Word>().is_err());
        assert!("1,2".parse::<Word>().is_err());
    }

    fn binomial(n: usize, k: usize) -> i64 {
        let mut acc: i64 = 1;
        for i in 0..k {
            acc = acc * (n - i) as i64 / (i + 1) as i64;
        }
        acc
    }

    fn arb_word(max_len: usize, max_letter: u32) -> impl Strategy<Value = Word> {
        proptest::collection::vec(1..=max_letter, 0..=max_len).prop_map(Word::new)
    }

    proptest! {
        #[test]
        fn shuffle_mass_is_binomial(a in arb_word(5, 4), b in arb_word(5, 4)) {
            let total = shuffle(&a, &b).total();
            prop_assert_eq!(total, binomial(a.lg() + b.lg(), a.lg()));
        }

        #[test]
        fn standardize_idempotent(a in arb_word(7, 5)) {
            let st = standardize(&a);
            prop_assert_eq!(standardize(st.word()), st);
        }

        #[test]
        fn surjective_standardize_preserves_standardization(a in arb_word(7, 9)) {
            prop_assert_eq!(standardize(&surjective_standardize(&a)), standardize(&a));
        }

        #[test]
        fn good_cuts_subset_of_cuts(a in arb_word(6, 4)) {
            let all = cuts(&a);
            for gc in good_cuts(&a) {
                prop_assert!(all.contains(&gc));
            }
        }
    }

    /// Commutativity and associativity of both shuffles, exhaustively for
    /// weight <= 5.
    #[test]
    fn shuffles_commutative_associative_to_weight_5() {
        let words = words_of_weight_up_to(5);
        for a in &words {
            for b in &words {
                if a.wt() + b.wt() > 5 {
                    continue;
                }
                assert_eq!(shuffle(a, b), shuffle(b, a), "shuffle comm {} {}", a, b);
                assert_eq!(
                    overlapping_shuffle(a, b),
                    overlapping_shuffle(b, a),
                    "osh comm {} {}",
                    a,
                    b
                );
                for c in &words {
                    if a.wt() + b.wt() + c.wt() > 5 {
                        continue;
                    }
                    let left = shuffle(a, b).map(|ab| shuffle(ab, c));
                    let right = shuffle(b, c).map(|bc| shuffle(a, bc));
                    assert_eq!(left, right, "shuffle assoc {} {} {}", a, b, c);
                    let left = overlapping_shuffle(a, b).map(|ab| overlapping_shuffle(ab, c));
                    let right = overlapping_shuffle(b, c).map(|bc| overlapping_shuffle(a, bc));
                    assert_eq!(left, right, "osh assoc {} {} {}", a, b, c);
                }
            }
        }
    }
}
