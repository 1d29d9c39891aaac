//! Noncommutative symmetric functions, quasisymmetric functions, descent
//! sets, and the maps tying them to the permutation Hopf algebra.
//!
//! NSymm is free associative on generators Z_1, Z_2, ...; monomials are
//! indexed by compositions. Besides the Z basis there are the S basis
//! (through the Wronski relations) and the ribbon basis R. QSymm, its
//! graded dual, carries the monomial basis and the F basis. Basis tags are
//! explicit so elements in different bases never mix silently.

use crate::elem::{Elem, Tensor};
use crate::hopf::{Coalgebra, HopfAlgebra};
use crate::mpr::{compose_elem, mpr_mul2};
use crate::words::{cuts, overlapping_shuffle, words_of_weight_up_to, Letter, Perm, Word};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

/// A subset of {1..m-1} remembered together with its ambient m. The same
/// set inside a different ambient is a different descent set.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct DescentSet {
    pub set: BTreeSet<usize>,
    pub m: usize,
}

impl DescentSet {
    pub fn new(set: BTreeSet<usize>, m: usize) -> Self {
        assert!(
            set.iter().all(|&d| d >= 1 && d < m),
            "descent positions must lie in 1..m-1"
        );
        DescentSet { set, m }
    }

    pub fn empty(m: usize) -> Self {
        DescentSet { set: BTreeSet::new(), m }
    }

    /// All 2^(m-1) descent sets inside {1..m-1}.
    pub fn all(m: usize) -> Vec<DescentSet> {
        let positions: Vec<usize> = (1..m).collect();
        let mut out = Vec::new();
        for mask in 0usize..(1 << positions.len()) {
            let set = positions
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &d)| d)
                .collect();
            out.push(DescentSet { set, m });
        }
        out
    }

    /// The complementary subset of {1..m-1} in the same ambient.
    pub fn complement(&self) -> DescentSet {
        DescentSet { set: (1..self.m).filter(|d| !self.set.contains(d)).collect(), m: self.m }
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, d) in self.set.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", d)?;
        }
        write!(f, "}} in {{1..{}}}", self.m.saturating_sub(1))
    }
}

/// Descent set of a permutation: the positions where it strictly drops.
pub fn desc_of_perm(s: &Perm) -> DescentSet {
    let letters = s.letters();
    let set = (1..s.len()).filter(|&i| letters[i - 1] > letters[i]).collect();
    DescentSet { set, m: s.len() }
}

/// The composition of m determined by a descent set.
pub fn comp_of_desc(d: &DescentSet) -> Word {
    let mut parts = Vec::new();
    let mut prev = 0usize;
    for &di in &d.set {
        parts.push((di - prev) as Letter);
        prev = di;
    }
    if d.m > prev {
        parts.push((d.m - prev) as Letter);
    }
    Word::new(parts)
}

/// The descent set determined by a composition (partial sums except the
/// last), inverse to `comp_of_desc`.
pub fn desc_of_comp(alpha: &Word) -> DescentSet {
    let mut set = BTreeSet::new();
    let mut acc = 0usize;
    let letters = alpha.letters();
    for &a in &letters[..letters.len().saturating_sub(1)] {
        acc += a as usize;
        set.insert(acc);
    }
    DescentSet { set, m: alpha.wt() }
}

/// Compositions coarser than or equal to `alpha` (merge adjacent parts).
pub fn coarsenings(alpha: &Word) -> Vec<Word> {
    let d = desc_of_comp(alpha);
    subsets_of(&d.set)
        .into_iter()
        .map(|s| comp_of_desc(&DescentSet { set: s, m: d.m }))
        .collect()
}

/// Compositions finer than or equal to `alpha` (split parts).
pub fn refinements(alpha: &Word) -> Vec<Word> {
    let d = desc_of_comp(alpha);
    let free: Vec<usize> = (1..d.m).filter(|i| !d.set.contains(i)).collect();
    let mut out = Vec::new();
    for mask in 0usize..(1 << free.len()) {
        let mut set = d.set.clone();
        for (i, &pos) in free.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.insert(pos);
            }
        }
        out.push(comp_of_desc(&DescentSet { set, m: d.m }));
    }
    out.sort();
    out
}

fn subsets_of(set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
    let items: Vec<usize> = set.iter().copied().collect();
    let mut out = Vec::new();
    for mask in 0usize..(1 << items.len()) {
        out.push(
            items
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &d)| d)
                .collect(),
        );
    }
    out
}

/// The three bases of NSymm used here.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum NsymmBasis {
    Z,
    S,
    R,
}

/// An NSymm element tagged with the basis its terms are written in.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NsymmElem {
    pub basis: NsymmBasis,
    pub elem: Elem<Word>,
}

impl NsymmElem {
    pub fn basis_elem(basis: NsymmBasis, alpha: Word) -> Self {
        NsymmElem { basis, elem: Elem::basis(alpha) }
    }

    pub fn zero(basis: NsymmBasis) -> Self {
        NsymmElem { basis, elem: Elem::zero() }
    }

    pub fn to_basis(&self, target: NsymmBasis) -> NsymmElem {
        if self.basis == target {
            return self.clone();
        }
        let converted = self.elem.map(|alpha| convert_key(self.basis, target, alpha));
        NsymmElem { basis: target, elem: converted }
    }

    /// Product of two tagged elements, computed in the Z basis and
    /// converted back to the basis of the first operand.
    pub fn mul(&self, other: &NsymmElem) -> NsymmElem {
        let a = self.to_basis(NsymmBasis::Z);
        let b = other.to_basis(NsymmBasis::Z);
        let prod = crate::elem::bilinear(|x: &Word, y: &Word| Elem::basis(x.concat(y)), &a.elem, &b.elem);
        NsymmElem { basis: NsymmBasis::Z, elem: prod }.to_basis(self.basis)
    }
}

impl fmt::Display for NsymmElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        let tag = match self.basis {
            NsymmBasis::Z => "Z",
            NsymmBasis::S => "S",
            NsymmBasis::R => "R",
        };
        f.write_str(&crate::elem::format_linear(&self.elem, |w| format!("{}{}", tag, w)))
    }
}

fn convert_key(from: NsymmBasis, to: NsymmBasis, alpha: &Word) -> Elem<Word> {
    use NsymmBasis::*;
    match (from, to) {
        (Z, Z) | (S, S) | (R, R) => Elem::basis(alpha.clone()),
        (S, Z) => s_to_z(alpha),
        (Z, S) => z_to_s(alpha),
        (R, S) => r_to_s(alpha),
        (S, R) => s_to_r(alpha),
        (R, Z) => r_to_s(alpha).map(s_to_z),
        (Z, R) => z_to_s(alpha).map(s_to_r),
    }
}

/// S_n written in the Z basis, by the Wronski recursion
/// S_n = sum_{k=1..n} (-1)^(k-1) S_{n-k} Z_k.
fn s_in_z(n: usize) -> Elem<Word> {
    let mut table: Vec<Elem<Word>> = vec![Elem::basis(Word::empty())];
    for m in 1..=n {
        let mut acc = Elem::zero();
        for k in 1..=m {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let appended = table[m - k].map(|w| {
                let mut v = w.letters().to_vec();
                v.push(k as Letter);
                Elem::basis(Word::new(v))
            });
            acc = acc.add(&appended.scale(sign));
        }
        table.push(acc);
    }
    table.pop().expect("table nonempty")
}

/// Z_n written in the S basis: the same recursion with the roles reversed.
fn z_in_s(n: usize) -> Elem<Word> {
    let mut table: Vec<Elem<Word>> = vec![Elem::basis(Word::empty())];
    for m in 1..=n {
        let mut acc = Elem::zero();
        for k in 1..=m {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let appended = table[m - k].map(|w| {
                let mut v = w.letters().to_vec();
                v.push(k as Letter);
                Elem::basis(Word::new(v))
            });
            acc = acc.add(&appended.scale(sign));
        }
        table.push(acc);
    }
    table.pop().expect("table nonempty")
}

/// S_alpha expanded in the Z basis (multiplicative extension).
pub fn s_to_z(alpha: &Word) -> Elem<Word> {
    let mut acc = Elem::basis(Word::empty());
    for &a in alpha.letters() {
        acc = crate::elem::bilinear(
            |x: &Word, y: &Word| Elem::basis(x.concat(y)),
            &acc,
            &s_in_z(a as usize),
        );
    }
    acc
}

/// Z_alpha expanded in the S basis.
pub fn z_to_s(alpha: &Word) -> Elem<Word> {
    let mut acc = Elem::basis(Word::empty());
    for &a in alpha.letters() {
        acc = crate::elem::bilinear(
            |x: &Word, y: &Word| Elem::basis(x.concat(y)),
            &acc,
            &z_in_s(a as usize),
        );
    }
    acc
}

/// Ribbon basis in terms of the S basis: alternating sum over coarsenings.
pub fn r_to_s(alpha: &Word) -> Elem<Word> {
    if alpha.is_empty() {
        return Elem::basis(Word::empty());
    }
    let mut out = Elem::zero();
    for beta in coarsenings(alpha) {
        let sign = if (alpha.lg() - beta.lg()).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(beta, sign);
    }
    out
}

/// Inverse of `r_to_s`: a plain sum over coarsenings.
pub fn s_to_r(alpha: &Word) -> Elem<Word> {
    if alpha.is_empty() {
        return Elem::basis(Word::empty());
    }
    Elem::from_terms(coarsenings(alpha).into_iter().map(|b| (b, 1)))
}

/// NSymm in the Z basis: product is concatenation, the coproduct is the
/// multiplicative extension of Z_n -> sum Z_i (x) Z_j over i + j = n.
#[derive(Clone, Copy, Debug, Default)]
pub struct NsymmZ;

impl Coalgebra for NsymmZ {
    type Key = Word;

    fn name(&self) -> &'static str {
        "NSymm (Z basis)"
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
        // choose a split of every letter; zero parts vanish from their side
        let mut out = Elem::from_terms([((Word::empty(), Word::empty()), 1)]);
        for &a in k.letters() {
            let mut next = Elem::zero();
            for ((l, r), c) in out.terms() {
                for i in 0..=a {
                    let j = a - i;
                    let mut lv = l.letters().to_vec();
                    if i > 0 {
                        lv.push(i);
                    }
                    let mut rv = r.letters().to_vec();
                    if j > 0 {
                        rv.push(j);
                    }
                    next.add_term((Word::new(lv), Word::new(rv)), c);
                }
            }
            out = next;
        }
        out
    }
}

impl HopfAlgebra for NsymmZ {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        Elem::basis(a.concat(b))
    }
}

/// QSymm in the monomial basis: overlapping shuffle product, cut coproduct.
#[derive(Clone, Copy, Debug, Default)]
pub struct QsymmM;

impl Coalgebra for QsymmM {
    type Key = Word;

    fn name(&self) -> &'static str {
        "QSymm (monomial basis)"
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

impl HopfAlgebra for QsymmM {
    fn product(&self, a: &Word, b: &Word) -> Elem<Word> {
        overlapping_shuffle(a, b)
    }
}

/// The two bases of QSymm used here.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QsymmBasis {
    M,
    F,
}

/// A QSymm element tagged with its basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QsymmElem {
    pub basis: QsymmBasis,
    pub elem: Elem<Word>,
}

impl QsymmElem {
    pub fn basis_elem(basis: QsymmBasis, alpha: Word) -> Self {
        QsymmElem { basis, elem: Elem::basis(alpha) }
    }

    pub fn to_basis(&self, target: QsymmBasis) -> QsymmElem {
        if self.basis == target {
            return self.clone();
        }
        let converted = match (self.basis, target) {
            (QsymmBasis::F, QsymmBasis::M) => self.elem.map(f_to_m),
            (QsymmBasis::M, QsymmBasis::F) => self.elem.map(m_to_f),
            _ => unreachable!("same basis handled above"),
        };
        QsymmElem { basis: target, elem: converted }
    }

    pub fn mul(&self, other: &QsymmElem) -> QsymmElem {
        let a = self.to_basis(QsymmBasis::M);
        let b = other.to_basis(QsymmBasis::M);
        let prod = crate::elem::bilinear(overlapping_shuffle, &a.elem, &b.elem);
        QsymmElem { basis: QsymmBasis::M, elem: prod }.to_basis(self.basis)
    }
}

impl fmt::Display for QsymmElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.elem.is_zero() {
            return write!(f, "0");
        }
        match self.basis {
            QsymmBasis::M => self.elem.fmt(f),
            QsymmBasis::F => {
                f.write_str(&crate::elem::format_linear(&self.elem, |w| format!("F{}", w)))
            }
        }
    }
}

/// F_alpha in the monomial basis: the sum of all refinements.
pub fn f_to_m(alpha: &Word) -> Elem<Word> {
    Elem::from_terms(refinements(alpha).into_iter().map(|b| (b, 1)))
}

/// A monomial in the F basis, by inclusion-exclusion over refinements.
pub fn m_to_f(alpha: &Word) -> Elem<Word> {
    let mut out = Elem::zero();
    for beta in refinements(alpha) {
        let sign = if (beta.lg() - alpha.lg()).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(beta, sign);
    }
    out
}

/// QSymm carried by the F basis, as a coalgebra (what the lsd/lld section
/// checks need). The coproduct is transported from the monomial basis.
#[derive(Clone, Copy, Debug, Default)]
pub struct QsymmF;

impl Coalgebra for QsymmF {
    type Key = Word;

    fn name(&self) -> &'static str {
        "QSymm (F basis)"
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
        let m = QsymmM;
        let in_monomial = crate::hopf::coproduct_elem(&m, &f_to_m(k));
        crate::elem::tensor_map(&in_monomial, m_to_f, m_to_f)
    }
}

/// The duality pairing between NSymm in the Z basis and QSymm in the
/// monomial basis: Kronecker delta on compositions.
pub fn z_monomial_pairing(beta: &Word, alpha: &Word) -> i64 {
    (beta == alpha) as i64
}

/// Kronecker pairing of the S basis against the monomial basis. Any free
/// divided-power generating family of NSymm pairs this way with the
/// monomials, so this is a Hopf duality just like the Z-based one; it is
/// the one under which ribbons and F's are biorthogonal, and the one
/// compatible with the embedding into permutations and the projection back
/// out (S maps to identity permutations on one side, F comes from descent
/// compositions on the other).
pub fn s_monomial_pairing(beta: &Word, alpha: &Word) -> i64 {
    (beta == alpha) as i64
}

/// Biorthogonality pairing of a ribbon against an F basis element: expands
/// the ribbon over S, the F over monomials, and pairs Kronecker-wise.
pub fn pair_r_f(alpha: &Word, beta: &Word) -> i64 {
    let r = NsymmElem::basis_elem(NsymmBasis::R, alpha.clone()).to_basis(NsymmBasis::S);
    let f = QsymmElem::basis_elem(QsymmBasis::F, beta.clone()).to_basis(QsymmBasis::M);
    crate::elem::pair(s_monomial_pairing, &r.elem, &f.elem)
}

/// The sum of all permutations of {1..m} with the given descent set.
pub fn descent_class_sum(d: &DescentSet) -> Elem<Perm> {
    Elem::from_terms(
        Perm::all(d.m).into_iter().filter(|s| desc_of_perm(s) == *d).map(|s| (s, 1)),
    )
}

/// The embedding of NSymm into the second structure on permutations:
/// ribbon elements map to descent class sums. Multiplicativity for the
/// second product and agreement with the S_n -> identity description are
/// theorems checked in the test suites.
pub fn embed_i(x: &NsymmElem) -> Elem<Perm> {
    let r = x.to_basis(NsymmBasis::R);
    let mut out = Elem::zero();
    for (alpha, c) in r.elem.terms() {
        for (s, k) in descent_class_sum(&desc_of_comp(alpha)).into_terms() {
            out.add_term(s, c * k);
        }
    }
    out
}

/// `embed_i` on a single S-basis generator: the identity permutation.
pub fn embed_i_on_s(n: usize) -> Elem<Perm> {
    embed_i(&NsymmElem::basis_elem(NsymmBasis::S, Word::new(vec![n as Letter])))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotInDescentSpan(pub String);

impl fmt::Display for NotInDescentSpan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "element is not a combination of descent class sums: {}", self.0)
    }
}

impl std::error::Error for NotInDescentSpan {}

/// Inverts `embed_i` on its image: groups the terms by descent class,
/// demands a constant coefficient on every full class, and reads off the
/// ribbon coordinates.
pub fn i_preimage(y: &Elem<Perm>) -> Result<NsymmElem, NotInDescentSpan> {
    let mut classes: BTreeMap<DescentSet, i64> = BTreeMap::new();
    for (s, c) in y.terms() {
        let d = desc_of_perm(s);
        match classes.get(&d) {
            None => {
                classes.insert(d, c);
            }
            Some(&existing) if existing == c => {}
            Some(&existing) => {
                return Err(NotInDescentSpan(format!(
                    "coefficients {} and {} inside class {}",
                    existing, c, d
                )))
            }
        }
    }
    let mut elem = Elem::zero();
    let mut reconstructed: Elem<Perm> = Elem::zero();
    for (d, c) in &classes {
        elem.add_term(comp_of_desc(d), *c);
        reconstructed = reconstructed.add(&descent_class_sum(d).scale(*c));
    }
    if &reconstructed != y {
        return Err(NotInDescentSpan("incomplete descent class".into()));
    }
    Ok(NsymmElem { basis: NsymmBasis::R, elem })
}

/// The Hopf projection from permutations onto QSymm: F of the descent
/// composition, expanded in the monomial basis.
pub fn project_pi(s: &Perm) -> QsymmElem {
    let alpha = comp_of_desc(&desc_of_perm(s));
    QsymmElem { basis: QsymmBasis::M, elem: f_to_m(&alpha) }
}

/// `project_pi` as a basis-level map into the monomial basis.
pub fn project_pi_elem(x: &Elem<Perm>) -> Elem<Word> {
    x.map(|s| project_pi(s).elem)
}

/// The second multiplication on NSymm: transport of composition of
/// permutations through the embedding. Fails with an error if the
/// composition falls outside the image of the embedding (it never does at
/// the weights checked here, which is Solomon's closure theorem).
pub fn nsymm_second_mul(x: &NsymmElem, y: &NsymmElem) -> Result<NsymmElem, NotInDescentSpan> {
    let composed = compose_elem(&embed_i(x), &embed_i(y));
    let pre = i_preimage(&composed)?;
    Ok(pre.to_basis(x.basis))
}

/// The descent-class product rule: the second-structure product of two
/// descent class sums is the sum of the two classes obtained by gluing the
/// descent sets with and without a descent at the seam.
pub fn theta_product_rule(d: &DescentSet, d2: &DescentSet) -> (Elem<Perm>, Elem<Perm>, Elem<Perm>) {
    let product = crate::elem::bilinear(
        |a: &Perm, b: &Perm| mpr_mul2(a, b),
        &descent_class_sum(d),
        &descent_class_sum(d2),
    );
    let m = d.m;
    let mut glued = d.set.clone();
    glued.extend(d2.set.iter().map(|x| x + m));
    let d1 = DescentSet::new(glued.clone(), m + d2.m);
    let mut with_seam = glued;
    with_seam.insert(m);
    let d2full = DescentSet::new(with_seam, m + d2.m);
    (product, descent_class_sum(&d1), descent_class_sum(&d2full))
}

/// Exhaustive biorthogonality of ribbons against the F basis.
pub fn check_rf_biorthogonality(bound: usize) -> crate::hopf::CheckReport {
    let mut report = crate::hopf::CheckReport {
        suite: "ribbon / F biorthogonality".into(),
        bound: format!("wt <= {}", bound),
        cases: 0,
        failure: None,
    };
    let all = words_of_weight_up_to(bound);
    for alpha in &all {
        for beta in &all {
            report.cases += 1;
            let got = pair_r_f(alpha, beta);
            let expect = (alpha == beta) as i64;
            if got != expect {
                report.failure = Some(crate::hopf::CheckFailure {
                    case: format!("<R{}, F{}>", alpha, beta),
                    lhs: got.to_string(),
                    rhs: expect.to_string(),
                });
                return report;
            }
        }
    }
    report
}

/// Solomon's closure: the composition of two descent class sums is again
/// an integer combination of descent class sums, plus the diagonal rule
/// for the second multiplication (S_n * S_n = S_n, zero across weights).
pub fn check_solomon_closure(bound: usize) -> crate::hopf::CheckReport {
    let mut report = crate::hopf::CheckReport {
        suite: "Solomon closure and the diagonal rule".into(),
        bound: format!("wt <= {}", bound),
        cases: 0,
        failure: None,
    };
    for n in 0..=bound {
        for d in DescentSet::all(n) {
            for d2 in DescentSet::all(n) {
                report.cases += 1;
                let composed =
                    compose_elem(&descent_class_sum(&d), &descent_class_sum(&d2));
                if let Err(e) = i_preimage(&composed) {
                    report.failure = Some(crate::hopf::CheckFailure {
                        case: format!("theta{} o theta{}", d, d2),
                        lhs: e.to_string(),
                        rhs: "combination of descent class sums".into(),
                    });
                    return report;
                }
            }
        }
    }
    for n in 1..=bound {
        report.cases += 1;
        let sn = NsymmElem::basis_elem(NsymmBasis::S, Word::new(vec![n as Letter]));
        match nsymm_second_mul(&sn, &sn) {
            Ok(r) if r == sn => {}
            other => {
                report.failure = Some(crate::hopf::CheckFailure {
                    case: format!("S_{} composed with itself", n),
                    lhs: format!("{:?}", other.map(|e| e.to_string())),
                    rhs: format!("S_[{}]", n),
                });
                return report;
            }
        }
    }
    let all = words_of_weight_up_to(bound);
    for alpha in &all {
        for beta in &all {
            if alpha.wt() == beta.wt() {
                continue;
            }
            report.cases += 1;
            let product = nsymm_second_mul(
                &NsymmElem::basis_elem(NsymmBasis::S, alpha.clone()),
                &NsymmElem::basis_elem(NsymmBasis::S, beta.clone()),
            );
            match product {
                Ok(r) if r.elem.is_zero() => {}
                other => {
                    report.failure = Some(crate::hopf::CheckFailure {
                        case: format!("S{} composed with S{}", alpha, beta),
                        lhs: format!("{:?}", other.map(|e| e.to_string())),
                        rhs: "0".into(),
                    });
                    return report;
                }
            }
        }
    }
    report
}

fn second_structure_coproduct(x: &Elem<Perm>) -> crate::elem::Tensor<Perm> {
    crate::hopf::coproduct_elem(&crate::mpr::MprHopf2, x)
}

fn second_structure_product(x: &Elem<Perm>, y: &Elem<Perm>) -> Elem<Perm> {
    crate::elem::bilinear(|a: &Perm, b: &Perm| mpr_mul2(a, b), x, y)
}

fn left_distributivity_sides(
    a: &Elem<Perm>,
    b: &Elem<Perm>,
    c: &Elem<Perm>,
) -> (Elem<Perm>, Elem<Perm>) {
    let lhs = compose_elem(a, &second_structure_product(b, c));
    let mut rhs = Elem::zero();
    for ((a1, a2), k) in second_structure_coproduct(a).terms() {
        let left = compose_elem(&Elem::basis(a1.clone()), b);
        let right = compose_elem(&Elem::basis(a2.clone()), c);
        rhs = rhs.add(&second_structure_product(&left, &right).scale(k));
    }
    (lhs, rhs)
}

fn right_distributivity_sides(
    a: &Elem<Perm>,
    b: &Elem<Perm>,
    c: &Elem<Perm>,
) -> (Elem<Perm>, Elem<Perm>) {
    let lhs = compose_elem(&second_structure_product(b, c), a);
    let mut rhs = Elem::zero();
    for ((a1, a2), k) in second_structure_coproduct(a).terms() {
        let left = compose_elem(b, &Elem::basis(a1.clone()));
        let right = compose_elem(c, &Elem::basis(a2.clone()));
        rhs = rhs.add(&second_structure_product(&left, &right).scale(k));
    }
    (lhs, rhs)
}

/// Distributivity of composition over the second-structure product on the
/// descent algebra, in the orientation that holds: composing a product
/// from the right distributes through the coproduct of the composing
/// element (the Mackey-style splitting formula),
///
///   compose(b *' c, a) = sum  compose(b, a') *' compose(c, a'')
///
/// over the second-structure coproduct of a. Under the fixed composition
/// order this is the one-sided distributivity of the descent algebra.
pub fn check_distributivity(bound: usize) -> crate::hopf::CheckReport {
    let mut report = crate::hopf::CheckReport {
        suite: "distributivity of composition over the descent algebra".into(),
        bound: format!("wt <= {}", bound),
        cases: 0,
        failure: None,
    };
    let all = words_of_weight_up_to(bound);
    for x in &all {
        let a = embed_i(&NsymmElem::basis_elem(NsymmBasis::S, x.clone()));
        for y in &all {
            for z in &all {
                if y.wt() + z.wt() != x.wt() {
                    continue;
                }
                report.cases += 1;
                let b = embed_i(&NsymmElem::basis_elem(NsymmBasis::S, y.clone()));
                let c = embed_i(&NsymmElem::basis_elem(NsymmBasis::S, z.clone()));
                let (lhs, rhs) = right_distributivity_sides(&a, &b, &c);
                if lhs != rhs {
                    report.failure = Some(crate::hopf::CheckFailure {
                        case: format!("a = i(S{}), b = i(S{}), c = i(S{})", x, y, z),
                        lhs: lhs.to_string(),
                        rhs: rhs.to_string(),
                    });
                    return report;
                }
            }
        }
    }
    report
}

/// Searches for the first counterexample to the mirrored orientation
/// (composing from the left, splitting the left element); the descent
/// algebra is one-sided, so one exists at small weight.
pub fn distributivity_mirror_counterexample(bound: usize) -> Option<(Word, Word, Word)> {
    let all = words_of_weight_up_to(bound);
    for x in &all {
        let a = embed_i(&NsymmElem::basis_elem(NsymmBasis::S, x.clone()));
        for y in &all {
            for z in &all {
                if y.wt() + z.wt() != x.wt() {
                    continue;
                }
                let b = embed_i(&NsymmElem::basis_elem(NsymmBasis::S, y.clone()));
                let c = embed_i(&NsymmElem::basis_elem(NsymmBasis::S, z.clone()));
                let (lhs, rhs) = left_distributivity_sides(&a, &b, &c);
                if lhs != rhs {
                    return Some((x.clone(), y.clone(), z.clone()));
                }
            }
        }
    }
    None
}
