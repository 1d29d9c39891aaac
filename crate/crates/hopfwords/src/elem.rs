//! Sparse integer linear combinations over ordered basis keys.
//!
//! Every algebra in this crate is a free abelian group on some countable
//! basis. `Elem` is the one representation they all share: a finite map from
//! basis keys to nonzero `i64` coefficients. Coefficient arithmetic is
//! checked; an overflow aborts with a dedicated message instead of wrapping.

use std::collections::BTreeMap;
use std::fmt;

pub(crate) const OVERFLOW_MSG: &str = "integer coefficient overflow";

fn cadd(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect(OVERFLOW_MSG)
}

fn cmul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect(OVERFLOW_MSG)
}

/// A finitely supported Z-linear combination of basis keys.
///
/// Invariants: no stored coefficient is zero, every key appears at most
/// once, and term iteration follows the `Ord` on keys, so equality is
/// structural and printing is deterministic.
#[derive(Clone, PartialEq, Eq)]
pub struct Elem<K: Ord + Clone> {
    terms: BTreeMap<K, i64>,
}

/// An element of a twofold tensor product, indexed by ordered pairs of keys.
pub type Tensor<K> = Elem<(K, K)>;

/// Threefold tensors, used by the coassociativity checks.
pub type Tensor3<K> = Elem<(K, K, K)>;

impl<K: Ord + Clone> Default for Elem<K> {
    fn default() -> Self {
        Elem::zero()
    }
}

impl<K: Ord + Clone> Elem<K> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    /// The basis element `k` with coefficient one.
    pub fn basis(k: K) -> Self {
        Elem::term(k, 1)
    }

    pub fn term(k: K, c: i64) -> Self {
        let mut e = Elem::zero();
        e.add_term(k, c);
        e
    }

    /// Builds an element from raw terms, combining duplicates and dropping
    /// zeros. Normalization is idempotent by construction.
    pub fn from_terms<I: IntoIterator<Item = (K, i64)>>(it: I) -> Self {
        Elem::from_term_vec(it.into_iter().collect())
    }

    /// Bulk constructor: sorts the raw terms once, merges equal keys and
    /// drops zeros. Cheaper than repeated insertion for the large interim
    /// term lists the products generate.
    pub fn from_term_vec(mut raw: Vec<(K, i64)>) -> Self {
        raw.sort_unstable_by(|x, y| x.0.cmp(&y.0));
        let mut merged: Vec<(K, i64)> = Vec::with_capacity(raw.len());
        for (k, c) in raw {
            match merged.last_mut() {
                Some((prev, acc)) if *prev == k => {
                    *acc = cadd(*acc, c);
                }
                _ => merged.push((k, c)),
            }
        }
        Elem { terms: merged.into_iter().filter(|&(_, c)| c != 0).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct basis keys with nonzero coefficient.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: &K) -> i64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, i64)> + '_ {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    pub fn into_terms(self) -> impl Iterator<Item = (K, i64)> {
        self.terms.into_iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> + '_ {
        self.terms.keys()
    }

    /// Adds `c * k` in place, keeping the element normalized.
    pub fn add_term(&mut self, k: K, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(k);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = cadd(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in other.terms() {
            out.add_term(k.clone(), c.checked_neg().expect(OVERFLOW_MSG));
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    /// Multiplies every coefficient by `n`.
    pub fn scale(&self, n: i64) -> Self {
        if n == 0 {
            return Elem::zero();
        }
        Elem {
            terms: self.terms.iter().map(|(k, &c)| (k.clone(), cmul(c, n))).collect(),
        }
    }

    /// Sum of all coefficients (the counting measure of the element).
    pub fn total(&self) -> i64 {
        self.terms.values().fold(0, |acc, &c| cadd(acc, c))
    }

    /// Linear extension of a basis-level map `K -> Elem<L>`.
    pub fn map<L: Ord + Clone, F: Fn(&K) -> Elem<L>>(&self, f: F) -> Elem<L> {
        let mut buf = Vec::new();
        for (k, c) in self.terms() {
            for (l, d) in f(k).into_terms() {
                buf.push((l, cmul(c, d)));
            }
        }
        Elem::from_term_vec(buf)
    }

    /// Relabels basis keys through `f` (no linearization, but terms that
    /// collide under `f` are combined).
    pub fn map_key<L: Ord + Clone, F: Fn(&K) -> L>(&self, f: F) -> Elem<L> {
        let mut out = Elem::zero();
        for (k, c) in self.terms() {
            out.add_term(f(k), c);
        }
        out
    }
}

/// Bilinear extension of a basis-level map `A x B -> Elem<C>`.
pub fn bilinear<A, B, C, F>(f: F, a: &Elem<A>, b: &Elem<B>) -> Elem<C>
where
    A: Ord + Clone,
    B: Ord + Clone,
    C: Ord + Clone,
    F: Fn(&A, &B) -> Elem<C>,
{
    let mut buf = Vec::new();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            let c = cmul(ca, cb);
            for (kc, cc) in f(ka, kb).into_terms() {
                buf.push((kc, cmul(c, cc)));
            }
        }
    }
    Elem::from_term_vec(buf)
}

/// Tensor product of two elements: `(a (x) b)(k, l) = a(k) * b(l)`.
pub fn tensor<A: Ord + Clone, B: Ord + Clone>(a: &Elem<A>, b: &Elem<B>) -> Elem<(A, B)> {
    let mut out = Elem::zero();
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            out.add_term((ka.clone(), kb.clone()), cmul(ca, cb));
        }
    }
    out
}

/// Applies `f (x) g` to a tensor element. The two factors may land in
/// different types, which is what the coassociativity checks need.
pub fn tensor_map<A, L, M, F, G>(t: &Elem<(A, A)>, f: F, g: G) -> Elem<(L, M)>
where
    A: Ord + Clone,
    L: Ord + Clone,
    M: Ord + Clone,
    F: Fn(&A) -> Elem<L>,
    G: Fn(&A) -> Elem<M>,
{
    let mut out = Elem::zero();
    for ((k1, k2), c) in t.terms() {
        for (l1, c1) in f(k1).terms() {
            for (l2, c2) in g(k2).terms() {
                out.add_term((l1.clone(), l2.clone()), cmul(c, cmul(c1, c2)));
            }
        }
    }
    out
}

/// Bilinear extension of a basis-level pairing `A x B -> Z`.
pub fn pair<A, B, F>(p: F, a: &Elem<A>, b: &Elem<B>) -> i64
where
    A: Ord + Clone,
    B: Ord + Clone,
    F: Fn(&A, &B) -> i64,
{
    let mut acc: i64 = 0;
    for (ka, ca) in a.terms() {
        for (kb, cb) in b.terms() {
            acc = cadd(acc, cmul(cmul(ca, cb), p(ka, kb)));
        }
    }
    acc
}

/// Pairing of two tensor elements, factorwise.
pub fn pair_tensor<A, B, F>(p: F, a: &Elem<(A, A)>, b: &Elem<(B, B)>) -> i64
where
    A: Ord + Clone,
    B: Ord + Clone,
    F: Fn(&A, &B) -> i64,
{
    let mut acc: i64 = 0;
    for ((a1, a2), ca) in a.terms() {
        for ((b1, b2), cb) in b.terms() {
            acc = cadd(acc, cmul(cmul(ca, cb), cmul(p(a1, b1), p(a2, b2))));
        }
    }
    acc
}

impl<K: Ord + Clone> std::ops::Add for &Elem<K> {
    type Output = Elem<K>;
    fn add(self, rhs: Self) -> Elem<K> {
        Elem::add(self, rhs)
    }
}

impl<K: Ord + Clone> std::ops::Sub for &Elem<K> {
    type Output = Elem<K>;
    fn sub(self, rhs: Self) -> Elem<K> {
        Elem::sub(self, rhs)
    }
}

impl<K: Ord + Clone> std::ops::Neg for &Elem<K> {
    type Output = Elem<K>;
    fn neg(self) -> Elem<K> {
        Elem::neg(self)
    }
}

/// Formats a linear combination with a custom key renderer, in the
/// element's canonical term order.
pub fn format_linear<K, F>(e: &Elem<K>, key: F) -> String
where
    K: Ord + Clone,
    F: Fn(&K) -> String,
{
    if e.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (k, c)) in e.terms().enumerate() {
        if i == 0 {
            if c < 0 {
                out.push('-');
            }
        } else if c < 0 {
            out.push_str(" - ");
        } else {
            out.push_str(" + ");
        }
        let a = c.unsigned_abs();
        if a != 1 {
            out.push_str(&a.to_string());
        }
        out.push_str(&key(k));
    }
    out
}

impl<K: Ord + Clone + fmt::Display> fmt::Display for Elem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_linear(self, |k| k.to_string()))
    }
}

impl<K: Ord + Clone + fmt::Debug> fmt::Debug for Elem<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}
