//! The permutation Hopf algebra and its second structure.
//!
//! Basis: the empty permutation and all permutation words. The first
//! product shuffles after shifting the second factor; the first coproduct
//! standardizes the two halves of every cut. The second structure is the
//! transport of the first through inversion. Composition of permutations
//! gives a second, degree-preserving multiplication with cocomposition as
//! its dual.

use crate::elem::{bilinear, Elem, Tensor};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::subst::Subst;
use crate::words::{cuts, shuffle, standardize, Letter, Perm, Word};
use std::collections::BTreeSet;

/// First product: shuffle of the first word with the shifted second. Every
/// term is a distinct permutation word with coefficient one.
pub fn mpr_mul(s: &Perm, t: &Perm) -> Elem<Perm> {
    let shifted = t.word().shift(s.len() as Letter);
    shuffle(s.word(), &shifted).map_key(|w| Perm::new(w.clone()).expect("shifted shuffle of permutations"))
}

/// First coproduct: standardize both halves of each of the lg+1 cuts.
pub fn mpr_comul(s: &Perm) -> Tensor<Perm> {
    let mut out = Elem::zero();
    for (u, v) in cuts(s.word()) {
        out.add_term((standardize(&u), standardize(&v)), 1);
    }
    out
}

/// Second product: the sum of all concatenations u * v where u runs over
/// the words on an m-subset of {1..m+n} standardizing to the first factor
/// and v over the complement standardizing to the second.
pub fn mpr_mul2(s: &Perm, t: &Perm) -> Elem<Perm> {
    let m = s.len();
    let n = t.len();
    let mut out = Elem::zero();
    for subset in k_subsets(m + n, m) {
        let complement: Vec<usize> = (1..=m + n).filter(|i| !subset.contains(i)).collect();
        let mut letters: Vec<Letter> = Vec::with_capacity(m + n);
        for i in 0..m {
            letters.push(subset[s.image(i + 1) - 1] as Letter);
        }
        for j in 0..n {
            letters.push(complement[t.image(j + 1) - 1] as Letter);
        }
        out.add_term(Perm::new(Word::new(letters)).expect("subset pattern"), 1);
    }
    out
}

/// Second coproduct: restriction to the value ranges {1..i} and {i+1..n},
/// the second factor standardized.
pub fn mpr_comul2(t: &Perm) -> Tensor<Perm> {
    let n = t.len();
    let mut out = Elem::zero();
    for i in 0..=n {
        let low: BTreeSet<Letter> = (1..=i as Letter).collect();
        let high: BTreeSet<Letter> = (i as Letter + 1..=n as Letter).collect();
        let left = Perm::new(t.restrict_values(&low)).expect("initial value range");
        let right = standardize(&t.restrict_values(&high));
        out.add_term((left, right), 1);
    }
    out
}

/// The increasing lists of k values from {1..n}.
pub(crate) fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, buf: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(buf.clone());
            return;
        }
        for v in start..=n.saturating_sub(k - 1) {
            buf.push(v);
            go(v + 1, n, k - 1, buf, out);
            buf.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Embeds a permutation word as the substitution with identity top.
pub fn embed_dwha(t: &Perm) -> Subst {
    let n = t.len();
    Subst::new(Word::new((1..=n as Letter).collect()), t.word().clone()).expect("equal supports")
}

fn compose_perm(s: &Perm, t: &Perm) -> Perm {
    let letters: Vec<Letter> = (1..=s.len()).map(|i| t.image(s.image(i)) as Letter).collect();
    Perm::new(Word::new(letters)).expect("composite of permutations")
}

/// Composition as endomorphisms: `compose(s, t)` is "first t, then s",
/// which on words is position-wise lookup t[s[i]]. Zero unless the lengths
/// agree.
pub fn compose(s: &Perm, t: &Perm) -> Elem<Perm> {
    if s.len() != t.len() {
        return Elem::zero();
    }
    Elem::basis(compose_perm(s, t))
}

/// Bilinear extension of composition to elements.
pub fn compose_elem(a: &Elem<Perm>, b: &Elem<Perm>) -> Elem<Perm> {
    bilinear(compose, a, b)
}

/// Cocomposition, the dual of composition under the orthonormal pairing:
/// the sum over all permutations u of the same length of
/// (u^-1 after s) (x) u.
pub fn cocompose(s: &Perm) -> Tensor<Perm> {
    let mut out = Elem::zero();
    for u in Perm::all(s.len()) {
        out.add_term((compose_perm(s, &u.inverse()), u), 1);
    }
    out
}

/// The nondefinite inner product: 1 exactly when t is the inverse of s.
pub fn kronecker_inverse(s: &Perm, t: &Perm) -> i64 {
    (*t == s.inverse()) as i64
}

/// The pairing making the permutation words an orthonormal basis.
pub fn orthonormal(s: &Perm, t: &Perm) -> i64 {
    (s == t) as i64
}

/// The permutation Hopf algebra with its first structure.
#[derive(Clone, Copy, Debug, Default)]
pub struct MprHopf;

impl Coalgebra for MprHopf {
    type Key = Perm;

    fn name(&self) -> &'static str {
        "MPR"
    }

    fn degree(&self, k: &Perm) -> usize {
        k.len()
    }

    fn unit(&self) -> Perm {
        Perm::identity(0)
    }

    fn basis(&self, bound: usize) -> Vec<Perm> {
        Perm::all_up_to(bound)
    }

    fn coproduct(&self, k: &Perm) -> Tensor<Perm> {
        mpr_comul(k)
    }
}

impl HopfAlgebra for MprHopf {
    fn product(&self, a: &Perm, b: &Perm) -> Elem<Perm> {
        mpr_mul(a, b)
    }
}

/// The permutation Hopf algebra with its second structure.
#[derive(Clone, Copy, Debug, Default)]
pub struct MprHopf2;

impl Coalgebra for MprHopf2 {
    type Key = Perm;

    fn name(&self) -> &'static str {
        "MPR'"
    }

    fn degree(&self, k: &Perm) -> usize {
        k.len()
    }

    fn unit(&self) -> Perm {
        Perm::identity(0)
    }

    fn basis(&self, bound: usize) -> Vec<Perm> {
        Perm::all_up_to(bound)
    }

    fn coproduct(&self, k: &Perm) -> Tensor<Perm> {
        mpr_comul2(k)
    }
}

impl HopfAlgebra for MprHopf2 {
    fn product(&self, a: &Perm, b: &Perm) -> Elem<Perm> {
        mpr_mul2(a, b)
    }
}
