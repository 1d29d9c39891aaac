//! Descent classes under the left weak order: lsd and lld permutations,
//! global ascents and descents, the Hasse diagram, the ribbon retraction
//! and the two coalgebra sections of the projection onto QSymm.

use crate::elem::Elem;
use crate::hopf::{CheckReport, Coalgebra};
use crate::nsq::{comp_of_desc, desc_of_comp, desc_of_perm, DescentSet, NsymmBasis, NsymmElem};
use crate::words::{Letter, Perm, Word};
use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

/// Ascent positions: where the word strictly rises.
pub fn asc(s: &Perm) -> BTreeSet<usize> {
    let l = s.letters();
    (1..s.len()).filter(|&i| l[i - 1] < l[i]).collect()
}

/// Descent positions, as a plain set (see `nsq::desc_of_perm` for the
/// ambient-tagged version).
pub fn desc(s: &Perm) -> BTreeSet<usize> {
    let l = s.letters();
    (1..s.len()).filter(|&i| l[i - 1] > l[i]).collect()
}

/// Global ascents: positions p where every letter before p is smaller than
/// every letter after p. Always a subset of the ascents.
pub fn gasc(s: &Perm) -> BTreeSet<usize> {
    let l = s.letters();
    let n = s.len();
    let mut out = BTreeSet::new();
    for p in 1..n {
        let left_max = l[..p].iter().max().unwrap();
        let right_min = l[p..].iter().min().unwrap();
        if left_max < right_min {
            out.insert(p);
        }
    }
    out
}

/// Global descents: every letter before the position exceeds every letter
/// after it.
pub fn gdesc(s: &Perm) -> BTreeSet<usize> {
    let l = s.letters();
    let n = s.len();
    let mut out = BTreeSet::new();
    for p in 1..n {
        let left_min = l[..p].iter().min().unwrap();
        let right_max = l[p..].iter().max().unwrap();
        if left_min > right_max {
            out.insert(p);
        }
    }
    out
}

/// The lexicographically smallest permutation with the given descent set,
/// built greedily: the positions split into maximal descending runs at the
/// ascent positions, and each run takes the next unused integers, written
/// downward. Agreement with the brute-force lexicographic minimum over the
/// whole descent class is checked in the tests.
pub fn lsd(d: &DescentSet) -> Perm {
    let m = d.m;
    let mut letters: Vec<Letter> = vec![0; m];
    let mut next: Letter = 1;
    let mut block_start = 0usize;
    for pos in 1..=m {
        let run_continues = pos < m && d.set.contains(&pos);
        if !run_continues {
            // block covers positions block_start..pos (0-based), values
            // next .. next+len-1 written descending
            let len = pos - block_start;
            for (offset, slot) in (block_start..pos).enumerate() {
                letters[slot] = next + (len - 1 - offset) as Letter;
            }
            next += len as Letter;
            block_start = pos;
        }
    }
    Perm::new(Word::new(letters)).expect("greedy construction is a permutation")
}

/// The lexicographically largest permutation with the given descent set:
/// the complement image of the lsd permutation of the complementary set.
pub fn lld(d: &DescentSet) -> Perm {
    complement(&lsd(&d.complement()))
}

/// Whether the permutation is the lexicographically smallest in its
/// descent class.
pub fn is_lsd(s: &Perm) -> bool {
    *s == lsd(&desc_of_perm(s))
}

/// Whether the permutation is the lexicographically largest in its class.
pub fn is_lld(s: &Perm) -> bool {
    *s == lld(&desc_of_perm(s))
}

/// The set of inversions: position pairs (i, j), i < j, with s_i > s_j.
pub fn inversions(s: &Perm) -> BTreeSet<(usize, usize)> {
    let l = s.letters();
    let mut out = BTreeSet::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if l[i] > l[j] {
                out.insert((i + 1, j + 1));
            }
        }
    }
    out
}

/// Left weak order: containment of inversion sets. Requires equal lengths.
pub fn lwo_leq(s: &Perm, t: &Perm) -> bool {
    assert_eq!(s.len(), t.len(), "weak order compares equal lengths");
    inversions(s).is_subset(&inversions(t))
}

/// The permutations covering `s`: switch values v and v+1 when v+1 sits at
/// an earlier position than v... that is, when switching them adds exactly
/// the one inversion.
pub fn covers_up(s: &Perm) -> Vec<Perm> {
    switch_adjacent_values(s, true)
}

/// The permutations covered by `s` (one inversion removed).
pub fn covers_down(s: &Perm) -> Vec<Perm> {
    switch_adjacent_values(s, false)
}

fn switch_adjacent_values(s: &Perm, up: bool) -> Vec<Perm> {
    let l = s.letters();
    let mut out = Vec::new();
    for v in 1..s.len() as Letter {
        let i = l.iter().position(|&x| x == v).expect("value present");
        let j = l.iter().position(|&x| x == v + 1).expect("value present");
        // moving v+1 before v creates the inversion; the other way removes it
        let creates = i < j;
        if creates == up {
            let mut nl = l.to_vec();
            nl.swap(i, j);
            out.push(Perm::new(Word::new(nl)).expect("value switch"));
        }
    }
    out
}

/// The Hasse diagram of the left weak order on the permutations of n,
/// directed from lower to higher covers, with vertices layered by
/// inversion count for renderers. An optional descent class can be
/// highlighted.
#[derive(Clone, Debug)]
pub struct HasseGraph {
    pub n: usize,
    pub vertices: Vec<Perm>,
    /// Pairs of vertex indices (lower, upper) forming cover relations.
    pub edges: Vec<(usize, usize)>,
    /// layer\[k\] lists the vertices with k inversions.
    pub layers: Vec<Vec<usize>>,
    /// Vertices in the highlighted descent class, if one was requested.
    pub highlighted: Option<Vec<bool>>,
}

pub fn hasse(n: usize, highlight: Option<&DescentSet>) -> HasseGraph {
    if let Some(d) = highlight {
        assert_eq!(d.m, n, "highlight ambient must match n");
    }
    let vertices = Perm::all(n);
    let index = |p: &Perm| vertices.binary_search(p).expect("vertex present");
    let mut edges = Vec::new();
    for (i, s) in vertices.iter().enumerate() {
        for up in covers_up(s) {
            edges.push((i, index(&up)));
        }
    }
    edges.sort_unstable();
    let max_inv = n * n.saturating_sub(1) / 2;
    let mut layers = vec![Vec::new(); max_inv + 1];
    for (i, s) in vertices.iter().enumerate() {
        layers[inversions(s).len()].push(i);
    }
    let highlighted = highlight
        .map(|d| vertices.iter().map(|s| desc_of_perm(s) == *d).collect());
    HasseGraph { n, vertices, edges, layers, highlighted }
}

impl HasseGraph {
    /// Graphviz dot rendering: one node per permutation word, directed
    /// cover edges, rank layering by inversion count, highlighted class
    /// filled.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph weak_order_{} {{", self.n);
        let _ = writeln!(out, "  rankdir=BT;");
        for (i, s) in self.vertices.iter().enumerate() {
            let fill = match &self.highlighted {
                Some(h) if h[i] => " style=filled fillcolor=lightblue",
                _ => "",
            };
            let _ = writeln!(out, "  v{} [label=\"{}\"{}];", i, s, fill);
        }
        for (k, layer) in self.layers.iter().enumerate() {
            if layer.is_empty() {
                continue;
            }
            let names: Vec<String> = layer.iter().map(|i| format!("v{}", i)).collect();
            let _ = writeln!(out, "  {{ rank=same; /* {} inversions */ {}; }}", k, names.join("; "));
        }
        for (lo, hi) in &self.edges {
            let _ = writeln!(out, "  v{} -> v{};", lo, hi);
        }
        out.push_str("}\n");
        out
    }
}

/// Exhaustive check of the descent class structure theorem for S_n: every
/// descent class induces a connected subgraph of the Hasse diagram, its
/// unique weak-order minimum is the greedy lsd permutation (which is also
/// the lexicographic minimum of the class), and its unique maximum is the
/// lld permutation (the lexicographic maximum).
pub fn check_descent_class_theorem(n: usize) -> CheckReport {
    let mut report = CheckReport {
        suite: "descent class theorem".into(),
        bound: format!("S_{}", n),
        cases: 0,
        failure: None,
    };
    let all = Perm::all(n);
    for d in DescentSet::all(n) {
        let class: Vec<Perm> =
            all.iter().filter(|s| desc_of_perm(s) == d).cloned().collect();
        report.cases += 1;
        if class.is_empty() {
            report.failure = Some(crate::hopf::CheckFailure {
                case: format!("class of {}", d),
                lhs: "empty class".into(),
                rhs: "nonempty class".into(),
            });
            return report;
        }

        // connectivity of the induced subgraph
        let in_class = |p: &Perm| class.contains(p);
        let mut seen: BTreeSet<Perm> = BTreeSet::new();
        let mut queue = VecDeque::from([class[0].clone()]);
        seen.insert(class[0].clone());
        while let Some(s) = queue.pop_front() {
            for nb in covers_up(&s).into_iter().chain(covers_down(&s)) {
                if in_class(&nb) && seen.insert(nb.clone()) {
                    queue.push_back(nb);
                }
            }
        }
        if seen.len() != class.len() {
            report.failure = Some(crate::hopf::CheckFailure {
                case: format!("connectivity of class {}", d),
                lhs: format!("{} reachable", seen.len()),
                rhs: format!("{} members", class.len()),
            });
            return report;
        }

        // unique minimum: the greedy lsd, also the lexicographic minimum
        let greedy = lsd(&d);
        let lex_min = class.iter().min_by(|a, b| a.letters().cmp(b.letters())).unwrap();
        let min_ok = greedy == *lex_min
            && in_class(&greedy)
            && class.iter().all(|s| lwo_leq(&greedy, s));
        if !min_ok {
            report.failure = Some(crate::hopf::CheckFailure {
                case: format!("minimum of class {}", d),
                lhs: format!("greedy {} / lex-min {}", greedy, lex_min),
                rhs: "unique weak-order minimum".into(),
            });
            return report;
        }

        // unique maximum: lld, also the lexicographic maximum
        let largest = lld(&d);
        let lex_max = class.iter().max_by(|a, b| a.letters().cmp(b.letters())).unwrap();
        let max_ok = largest == *lex_max
            && in_class(&largest)
            && class.iter().all(|s| lwo_leq(s, &largest));
        if !max_ok {
            report.failure = Some(crate::hopf::CheckFailure {
                case: format!("maximum of class {}", d),
                lhs: format!("lld {} / lex-max {}", largest, lex_max),
                rhs: "unique weak-order maximum".into(),
            });
            return report;
        }
    }
    report
}

/// The ribbon retraction of the embedding of NSymm: kills permutations
/// that are not lsd, sends an lsd permutation to the ribbon of its descent
/// composition.
pub fn psi_retract(s: &Perm) -> NsymmElem {
    if is_lsd(s) {
        NsymmElem::basis_elem(NsymmBasis::R, comp_of_desc(&desc_of_perm(s)))
    } else {
        NsymmElem::zero(NsymmBasis::R)
    }
}

/// `psi_retract` extended linearly, in the ribbon basis.
pub fn psi_retract_elem(x: &Elem<Perm>) -> NsymmElem {
    let mut elem = Elem::zero();
    for (s, c) in x.terms() {
        if is_lsd(s) {
            elem.add_term(comp_of_desc(&desc_of_perm(s)), c);
        }
    }
    NsymmElem { basis: NsymmBasis::R, elem }
}

/// The coalgebra section of the QSymm projection that picks the smallest
/// member of each descent class: F_alpha maps to the lsd permutation whose
/// descent composition is alpha.
pub fn section_lsd(alpha: &Word) -> Perm {
    lsd(&desc_of_comp(alpha))
}

/// The section picking the largest member of each class instead.
pub fn section_lld(alpha: &Word) -> Perm {
    lld(&desc_of_comp(alpha))
}

/// The complement automorphism: letter a maps to m+1-a. Reverses the weak
/// order and complements descent sets.
pub fn complement(s: &Perm) -> Perm {
    let m = s.len() as Letter;
    let letters: Vec<Letter> = s.letters().iter().map(|&a| m + 1 - a).collect();
    Perm::new(Word::new(letters)).expect("complement of a permutation")
}

/// The span of non-lsd permutations is an ideal for the second product;
/// witness formulas for the two lsd summands of a product of lsd
/// permutations, straight out of the structure of lsd words: the first
/// glues the blocks end to end, the second merges the last block of the
/// first factor with the first block of the second.
pub fn lsd_product_witnesses(s: &Perm, t: &Perm) -> (Perm, Perm) {
    assert!(is_lsd(s) && is_lsd(t), "witnesses need lsd inputs");
    let m = s.len();
    let n = t.len();
    let r = *s.letters().last().expect("nonempty first factor") as usize;
    let sfx = *t.letters().first().expect("nonempty second factor") as usize;

    // rho1 = s followed by t shifted by m
    let mut first: Vec<Letter> = s.letters().to_vec();
    first.extend(t.letters().iter().map(|&b| b + m as Letter));

    // rho2 keeps the prefix of s before its final run, merges the final
    // run of s (values r..m) with the initial run of t (values 1..sfx)
    // into one descending run on r..m+sfx, then continues with the tail
    // of t shifted by m
    let mut second: Vec<Letter> = Vec::with_capacity(m + n);
    second.extend(s.letters().iter().take_while(|&&a| (a as usize) < r).copied());
    debug_assert_eq!(second.len(), r - 1);
    for v in (r..=m + sfx).rev() {
        second.push(v as Letter);
    }
    second.extend(t.letters().iter().skip(sfx).map(|&b| b + m as Letter));

    let rho1 = Perm::new(Word::new(first)).expect("glued witness");
    let rho2 = Perm::new(Word::new(second)).expect("merged witness");
    (rho1, rho2)
}

/// A thin wrapper exposing the lsd span as a coalgebra (the permutation
/// coproduct restricted to lsd basis elements; closure is a theorem tested
/// downstream, not an assumption).
#[derive(Clone, Copy, Debug, Default)]
pub struct MprLsdCoalg;

impl Coalgebra for MprLsdCoalg {
    type Key = Perm;

    fn name(&self) -> &'static str {
        "MPR (lsd span)"
    }

    fn degree(&self, k: &Perm) -> usize {
        k.len()
    }

    fn unit(&self) -> Perm {
        Perm::identity(0)
    }

    fn basis(&self, bound: usize) -> Vec<Perm> {
        Perm::all_up_to(bound).into_iter().filter(is_lsd).collect()
    }

    fn coproduct(&self, k: &Perm) -> crate::elem::Tensor<Perm> {
        crate::mpr::mpr_comul(k)
    }
}
