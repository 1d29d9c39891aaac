//! The incisive cut coalgebra: compositions with a coproduct that, besides
//! the ordinary cuts, splits single letters in two. A coalgebra only; its
//! graded dual multiplies like the ribbon basis, which identifies it with
//! QSymm as a coalgebra.

use crate::elem::{Elem, Tensor};
use crate::hopf::Coalgebra;
use crate::nsq::{comp_of_desc, desc_of_perm, QsymmBasis, QsymmElem};
use crate::words::{cuts, words_of_weight_up_to, Letter, Perm, Word};

/// All ordinary cuts plus, for every letter a > 1 and every split
/// a = b + c with b, c > 0, the term cutting through that letter.
pub fn icc_comul(alpha: &Word) -> Tensor<Word> {
    let mut out = Elem::zero();
    for (u, v) in cuts(alpha) {
        out.add_term((u, v), 1);
    }
    let letters = alpha.letters();
    for (j, &a) in letters.iter().enumerate() {
        for b in 1..a {
            let c = a - b;
            let mut left = letters[..j].to_vec();
            left.push(b);
            let mut right = vec![c];
            right.extend_from_slice(&letters[j + 1..]);
            out.add_term((Word::new(left), Word::new(right)), 1);
        }
    }
    out
}

/// The coalgebra morphism from permutations: descent composition.
pub fn mpr_to_icc(s: &Perm) -> Elem<Word> {
    Elem::basis(comp_of_desc(&desc_of_perm(s)))
}

/// The product of the graded dual, on the dual basis: concatenation plus
/// joining the boundary parts. The ribbon multiplication rule.
pub fn icc_dual_mul(alpha: &Word, beta: &Word) -> Elem<Word> {
    if alpha.is_empty() {
        return Elem::basis(beta.clone());
    }
    if beta.is_empty() {
        return Elem::basis(alpha.clone());
    }
    let concat = alpha.concat(beta);
    let mut joined: Vec<Letter> = alpha.letters().to_vec();
    let last = joined.pop().expect("nonempty");
    joined.push(last + beta.letters()[0]);
    joined.extend_from_slice(&beta.letters()[1..]);
    Elem::from_terms([(concat, 1), (Word::new(joined), 1)])
}

/// The coalgebra isomorphism onto QSymm: a composition maps to its F basis
/// element.
pub fn icc_to_qsymm(alpha: &Word) -> QsymmElem {
    QsymmElem::basis_elem(QsymmBasis::F, alpha.clone()).to_basis(QsymmBasis::M)
}

/// The incisive cut coalgebra over the composition basis, graded by
/// weight.
#[derive(Clone, Copy, Debug, Default)]
pub struct IccCoalg;

impl Coalgebra for IccCoalg {
    type Key = Word;

    fn name(&self) -> &'static str {
        "ICC"
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
        icc_comul(k)
    }
}
