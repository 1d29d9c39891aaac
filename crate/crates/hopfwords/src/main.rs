//! Command-line front end: evaluate operations in any registered algebra,
//! run the verification suites, export weak-order Hasse diagrams.
//!
//! Exit codes: 0 success / all checks passed, 1 a verification suite
//! failed, 2 usage or parse error.

use clap::{Parser, Subcommand};
use hopfwords::descent::{
    check_descent_class_theorem, complement, hasse, psi_retract, section_lld, section_lsd,
};
use hopfwords::elem::{Elem, Tensor};
use hopfwords::hopf::{
    antipode, check_antipode, check_bialgebra, check_coalgebra, check_algebra_morphism,
    check_coalgebra_morphism, check_dual_pair, check_hopf_morphism, kronecker, CheckReport,
    Coalgebra, HopfAlgebra, MorphismHalf,
};
use hopfwords::icc::{icc_comul, icc_dual_mul, mpr_to_icc, IccCoalg};
use hopfwords::mpr::{
    compose, embed_dwha, kronecker_inverse, mpr_comul, mpr_comul2, mpr_mul, mpr_mul2, MprHopf,
    MprHopf2,
};
use hopfwords::nsq::{
    check_distributivity, check_rf_biorthogonality, check_solomon_closure,
    distributivity_mirror_counterexample, embed_i, f_to_m, pair_r_f, project_pi,
    s_monomial_pairing, z_monomial_pairing, DescentSet, NsymmBasis, NsymmElem, QsymmBasis,
    QsymmElem, QsymmF, NsymmZ, QsymmM,
};
use hopfwords::parse::display_tensor;
use hopfwords::shuffle::{
    check_coconv_components, check_convolution_identity, HeightActionAlg, LieHopfAlg, ShuffleAlg,
};
use hopfwords::subst::{
    dwha_comul, dwha_comul2, dwha_mul, dwha_mul2, inner_product, orthonormal as subst_orthonormal,
    project_mpr, DwhaAlg, DwhaAlg2, Subst,
};
use hopfwords::wha::{schensted_to_mpr, std_surj_retract, wha_comul, wha_mul, WhaAlg, WhaLengthAlg};
use hopfwords::words::{standardize, surjective_standardize, Perm, Word};
use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "hopfwords",
    version,
    about = "Combinatorial Hopf algebras on words, permutations and substitutions",
    after_help = "Algebras: shuffle, liehopf, mpr, mpr2, wha, dwha, dwha2, nsymm, qsymm, icc.\n\
                  Word literals look like \"[3,2,7,2,4]\"; substitution literals like\n\
                  \"([1,2,1] | [2,1,1])\"."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an operation on basis-element literals
    #[command(after_help = "Operations: mul, mul2, comul, comul2, antipode, compose, pair,\n\
        convert, embed, project, section. Which ones an algebra supports follows its\n\
        structure; for icc, `mul` is the product of the graded dual on the dual basis.")]
    Eval {
        /// Algebra id (shuffle|liehopf|mpr|mpr2|wha|dwha|dwha2|nsymm|qsymm|icc)
        algebra: String,
        /// Operation id
        op: String,
        /// Operand literals
        operands: Vec<String>,
        /// Basis tag for nsymm (Z|S|R) and qsymm (M|F) operations
        #[arg(long)]
        basis: Option<String>,
        /// Source basis for convert
        #[arg(long)]
        from: Option<String>,
        /// Target basis for convert
        #[arg(long)]
        to: Option<String>,
        /// Pairing selector (mpr: inverse|orthonormal; dwha: natural|orthonormal;
        /// nsymm: monomial|rf)
        #[arg(long)]
        pairing: Option<String>,
        /// Variant selector (mpr project: pi|psi; wha project: surj|st;
        /// qsymm section: lsd|lld)
        #[arg(long)]
        variant: Option<String>,
        /// Emit terms as JSON
        #[arg(long)]
        json: bool,
    },
    /// Run a verification suite; exits 1 with the first counterexample on failure
    #[command(after_help = "Suites: bialgebra, antipode, dual-pair, morphism,\n\
        descent-theorem, self-duality, convolution, solomon, distributivity.\n\
        Default bounds are conservative: weight or degree 5 for the axiom and\n\
        duality suites (4 for the permutation pairings, 3 for the embeddings\n\
        into substitutions), substitution caps 3/3, alphabet cap 3, weight 4\n\
        for solomon and distributivity; override with --bound / --wt / --n.\n\
        `bialgebra --algebra height-action` is a negative control and fails by design.")]
    Check {
        /// Suite name
        suite: String,
        /// Algebra id for bialgebra/antipode (adds wha-length and height-action)
        #[arg(long)]
        algebra: Option<String>,
        /// Degree / weight bound override
        #[arg(long)]
        bound: Option<usize>,
        /// Cap on the top word length for dwha suites
        #[arg(long, default_value_t = 3)]
        cap_top: usize,
        /// Cap on the bottom word length for dwha suites
        #[arg(long, default_value_t = 3)]
        cap_bot: usize,
        /// Alphabet cap for the length-graded word algebra
        #[arg(long, default_value_t = 3)]
        max_letter: u32,
        /// Symmetric group size for descent-theorem
        #[arg(long)]
        n: Option<usize>,
        /// Pair name for dual-pair (liehopf-shuffle|nsymm-qsymm|rf|mpr-self|
        /// mpr-cross|dwha-self|dwha-orthonormal)
        #[arg(long)]
        pair: Option<String>,
        /// Map name for morphism (embed-dwha|embed-dwha2|inverse|psi-mult|
        /// std-surj|st|pi|embed-i|psi-lsd|section-lsd|section-lld|complement|
        /// mpr-to-icc|icc-to-qsymm)
        #[arg(long)]
        map: Option<String>,
        /// Which halves of a morphism to check (algebra|coalgebra|both)
        #[arg(long, default_value = "both")]
        halves: String,
        /// Weight bound for solomon / distributivity
        #[arg(long)]
        wt: Option<usize>,
        /// Emit the report as JSON
        #[arg(long)]
        json: bool,
    },
    /// Export the weak-order Hasse diagram of S_n in graphviz dot format
    Hasse {
        /// Symmetric group size, at most 8
        n: usize,
        /// Highlight one descent class, e.g. --highlight "2,3"
        #[arg(long)]
        highlight: Option<String>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
struct CliError(String);

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<E: std::error::Error> From<E> for CliError {
    fn from(e: E) -> Self {
        CliError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Eval { algebra, op, operands, basis, from, to, pairing, variant, json } => {
            let out = eval(&algebra, &op, &operands, EvalFlags {
                basis,
                from,
                to,
                pairing,
                variant,
            })?;
            println!("{}", if json { out.to_json() } else { out.to_text() });
            Ok(ExitCode::SUCCESS)
        }
        Command::Check {
            suite,
            algebra,
            bound,
            cap_top,
            cap_bot,
            max_letter,
            n,
            pair,
            map,
            halves,
            wt,
            json,
        } => {
            let reports = check(CheckArgs {
                suite,
                algebra,
                bound,
                cap_top,
                cap_bot,
                max_letter,
                n,
                pair,
                map,
                halves,
                wt,
            })?;
            let mut all_ok = true;
            for report in &reports {
                if json {
                    println!("{}", serde_json::to_string(report).expect("serializable report"));
                } else {
                    println!("{}", report);
                }
                all_ok &= report.passed();
            }
            Ok(if all_ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Hasse { n, highlight, out } => {
            if n > 8 {
                return Err(CliError(format!("n = {} exceeds the cap of 8", n)));
            }
            let d = highlight
                .map(|h| parse_descent_positions(&h, n))
                .transpose()?;
            let graph = hasse(n, d.as_ref());
            let dot = graph.to_dot();
            match out {
                Some(path) => std::fs::write(path, dot)?,
                None => print!("{}", dot),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_descent_positions(text: &str, n: usize) -> Result<DescentSet, CliError> {
    let mut set = std::collections::BTreeSet::new();
    for piece in text.split(',').filter(|p| !p.trim().is_empty()) {
        let d: usize = piece
            .trim()
            .parse()
            .map_err(|_| CliError(format!("invalid descent position '{}'", piece)))?;
        if d == 0 || d >= n {
            return Err(CliError(format!(
                "descent position {} outside {{1..{}}}",
                d,
                n.saturating_sub(1)
            )));
        }
        set.insert(d);
    }
    Ok(DescentSet::new(set, n))
}

struct EvalFlags {
    basis: Option<String>,
    from: Option<String>,
    to: Option<String>,
    pairing: Option<String>,
    variant: Option<String>,
}

enum Output {
    Words(Elem<Word>),
    Perms(Elem<Perm>),
    Substs(Elem<Subst>),
    WordTensor(Tensor<Word>),
    PermTensor(Tensor<Perm>),
    SubstTensor(Tensor<Subst>),
    Nsymm(NsymmElem),
    Qsymm(QsymmElem),
    Integer(i64),
}

impl Output {
    fn to_text(&self) -> String {
        match self {
            Output::Words(e) => e.to_string(),
            Output::Perms(e) => e.to_string(),
            Output::Substs(e) => e.to_string(),
            Output::WordTensor(t) => display_tensor(t),
            Output::PermTensor(t) => display_tensor(&t.map_key(|(a, b)| (a.word().clone(), b.word().clone()))),
            Output::SubstTensor(t) => display_tensor(t),
            Output::Nsymm(e) => e.to_string(),
            Output::Qsymm(e) => e.to_string(),
            Output::Integer(n) => n.to_string(),
        }
    }

    fn to_json(&self) -> String {
        fn terms<K: Ord + Clone, F: Fn(&K) -> String>(e: &Elem<K>, key: F) -> serde_json::Value {
            serde_json::json!({
                "terms": e
                    .terms()
                    .map(|(k, c)| serde_json::json!({"coeff": c, "key": key(k)}))
                    .collect::<Vec<_>>()
            })
        }
        fn plain<K: fmt::Display + Ord + Clone>(e: &Elem<K>) -> serde_json::Value {
            terms(e, |k| k.to_string())
        }
        fn tensor<K: fmt::Display + Ord + Clone>(t: &Tensor<K>) -> serde_json::Value {
            terms(t, |(a, b)| format!("{}⊗{}", a, b))
        }
        let value = match self {
            Output::Words(e) => plain(e),
            Output::Perms(e) => plain(e),
            Output::Substs(e) => plain(e),
            Output::WordTensor(t) => tensor(t),
            Output::PermTensor(t) => tensor(t),
            Output::SubstTensor(t) => tensor(t),
            Output::Nsymm(e) => terms(&e.elem, |w| format!("{:?}{}", e.basis, w)),
            Output::Qsymm(e) => match e.basis {
                QsymmBasis::M => plain(&e.elem),
                QsymmBasis::F => terms(&e.elem, |w| format!("F{}", w)),
            },
            Output::Integer(n) => serde_json::json!({ "value": n }),
        };
        value.to_string()
    }
}

fn need(operands: &[String], count: usize, op: &str) -> Result<(), CliError> {
    if operands.len() != count {
        return Err(CliError(format!(
            "operation '{}' takes {} operand(s), got {}",
            op,
            count,
            operands.len()
        )));
    }
    Ok(())
}

fn word_arg(operands: &[String], i: usize) -> Result<Word, CliError> {
    Ok(operands[i].parse::<Word>()?)
}

fn perm_arg(operands: &[String], i: usize) -> Result<Perm, CliError> {
    Ok(operands[i].parse::<Perm>()?)
}

fn subst_arg(operands: &[String], i: usize) -> Result<Subst, CliError> {
    Ok(operands[i].parse::<Subst>()?)
}

fn nsymm_basis(tag: Option<&str>) -> Result<NsymmBasis, CliError> {
    match tag.unwrap_or("Z") {
        "Z" | "z" => Ok(NsymmBasis::Z),
        "S" | "s" => Ok(NsymmBasis::S),
        "R" | "r" => Ok(NsymmBasis::R),
        other => Err(CliError(format!("unknown nsymm basis '{}'", other))),
    }
}

fn qsymm_basis(tag: Option<&str>) -> Result<QsymmBasis, CliError> {
    match tag.unwrap_or("M") {
        "M" | "m" => Ok(QsymmBasis::M),
        "F" | "f" => Ok(QsymmBasis::F),
        other => Err(CliError(format!("unknown qsymm basis '{}'", other))),
    }
}

fn eval(algebra: &str, op: &str, operands: &[String], flags: EvalFlags) -> Result<Output, CliError> {
    let unsupported = || CliError(format!("algebra '{}' has no operation '{}'", algebra, op));
    match (algebra, op) {
        ("shuffle", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Words(hopfwords::words::shuffle(&word_arg(operands, 0)?, &word_arg(operands, 1)?)))
        }
        ("shuffle", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::WordTensor(ShuffleAlg.coproduct(&word_arg(operands, 0)?)))
        }
        ("shuffle", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Words(antipode(&ShuffleAlg, &Elem::basis(word_arg(operands, 0)?))))
        }
        ("liehopf", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Words(Elem::basis(word_arg(operands, 0)?.concat(&word_arg(operands, 1)?))))
        }
        ("liehopf", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::WordTensor(LieHopfAlg.coproduct(&word_arg(operands, 0)?)))
        }
        ("liehopf", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Words(antipode(&LieHopfAlg, &Elem::basis(word_arg(operands, 0)?))))
        }
        ("liehopf", "pair") => {
            need(operands, 2, op)?;
            Ok(Output::Integer(kronecker(&word_arg(operands, 0)?, &word_arg(operands, 1)?)))
        }
        ("mpr", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Perms(mpr_mul(&perm_arg(operands, 0)?, &perm_arg(operands, 1)?)))
        }
        ("mpr", "mul2") | ("mpr2", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Perms(mpr_mul2(&perm_arg(operands, 0)?, &perm_arg(operands, 1)?)))
        }
        ("mpr", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::PermTensor(mpr_comul(&perm_arg(operands, 0)?)))
        }
        ("mpr", "comul2") | ("mpr2", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::PermTensor(mpr_comul2(&perm_arg(operands, 0)?)))
        }
        ("mpr", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Perms(antipode(&MprHopf, &Elem::basis(perm_arg(operands, 0)?))))
        }
        ("mpr2", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Perms(antipode(&MprHopf2, &Elem::basis(perm_arg(operands, 0)?))))
        }
        ("mpr", "compose") => {
            need(operands, 2, op)?;
            Ok(Output::Perms(compose(&perm_arg(operands, 0)?, &perm_arg(operands, 1)?)))
        }
        ("mpr", "pair") => {
            need(operands, 2, op)?;
            let s = perm_arg(operands, 0)?;
            let t = perm_arg(operands, 1)?;
            let value = match flags.pairing.as_deref().unwrap_or("inverse") {
                "inverse" => kronecker_inverse(&s, &t),
                "orthonormal" => hopfwords::mpr::orthonormal(&s, &t),
                other => return Err(CliError(format!("unknown mpr pairing '{}'", other))),
            };
            Ok(Output::Integer(value))
        }
        ("mpr", "embed") => {
            need(operands, 1, op)?;
            Ok(Output::Substs(Elem::basis(embed_dwha(&perm_arg(operands, 0)?))))
        }
        ("mpr", "project") => {
            need(operands, 1, op)?;
            let s = perm_arg(operands, 0)?;
            match flags.variant.as_deref().unwrap_or("pi") {
                "pi" => Ok(Output::Qsymm(project_pi(&s))),
                "psi" => Ok(Output::Nsymm(psi_retract(&s))),
                "icc" => Ok(Output::Words(mpr_to_icc(&s))),
                other => Err(CliError(format!("unknown mpr projection '{}'", other))),
            }
        }
        ("wha", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Words(wha_mul(&word_arg(operands, 0)?, &word_arg(operands, 1)?)))
        }
        ("wha", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::WordTensor(wha_comul(&word_arg(operands, 0)?)))
        }
        ("wha", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Words(antipode(&WhaAlg, &Elem::basis(word_arg(operands, 0)?))))
        }
        ("wha", "embed") => {
            need(operands, 1, op)?;
            Ok(Output::Substs(Elem::basis(hopfwords::wha::encode(&word_arg(operands, 0)?))))
        }
        ("wha", "project") => {
            need(operands, 1, op)?;
            let alpha = word_arg(operands, 0)?;
            match flags.variant.as_deref().unwrap_or("surj") {
                "surj" => Ok(Output::Words(Elem::basis(std_surj_retract(&alpha)))),
                "st" => Ok(Output::Perms(Elem::basis(schensted_to_mpr(&alpha)))),
                other => Err(CliError(format!("unknown wha projection '{}'", other))),
            }
        }
        ("dwha", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Substs(dwha_mul(&subst_arg(operands, 0)?, &subst_arg(operands, 1)?)))
        }
        ("dwha", "mul2") | ("dwha2", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Substs(dwha_mul2(&subst_arg(operands, 0)?, &subst_arg(operands, 1)?)))
        }
        ("dwha", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::SubstTensor(dwha_comul(&subst_arg(operands, 0)?)))
        }
        ("dwha", "comul2") | ("dwha2", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::SubstTensor(dwha_comul2(&subst_arg(operands, 0)?)))
        }
        ("dwha", "antipode") => {
            need(operands, 1, op)?;
            let alg = DwhaAlg { top_cap: 3, bot_cap: 3 };
            Ok(Output::Substs(antipode(&alg, &Elem::basis(subst_arg(operands, 0)?))))
        }
        ("dwha2", "antipode") => {
            need(operands, 1, op)?;
            let alg = DwhaAlg2 { top_cap: 3, bot_cap: 3 };
            Ok(Output::Substs(antipode(&alg, &Elem::basis(subst_arg(operands, 0)?))))
        }
        ("dwha", "pair") => {
            need(operands, 2, op)?;
            let p = subst_arg(operands, 0)?;
            let q = subst_arg(operands, 1)?;
            let value = match flags.pairing.as_deref().unwrap_or("natural") {
                "natural" => inner_product(&p, &q),
                "orthonormal" => subst_orthonormal(&p, &q),
                other => return Err(CliError(format!("unknown dwha pairing '{}'", other))),
            };
            Ok(Output::Integer(value))
        }
        ("dwha", "project") => {
            need(operands, 1, op)?;
            Ok(Output::Perms(project_mpr(&subst_arg(operands, 0)?)))
        }
        ("nsymm", "mul") => {
            need(operands, 2, op)?;
            let basis = nsymm_basis(flags.basis.as_deref())?;
            let a = NsymmElem::basis_elem(basis, word_arg(operands, 0)?);
            let b = NsymmElem::basis_elem(basis, word_arg(operands, 1)?);
            Ok(Output::Nsymm(a.mul(&b)))
        }
        ("nsymm", "comul") => {
            need(operands, 1, op)?;
            if nsymm_basis(flags.basis.as_deref())? != NsymmBasis::Z {
                return Err(CliError("nsymm comul prints in the Z basis only".into()));
            }
            Ok(Output::WordTensor(NsymmZ.coproduct(&word_arg(operands, 0)?)))
        }
        ("nsymm", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Words(antipode(&NsymmZ, &Elem::basis(word_arg(operands, 0)?))))
        }
        ("nsymm", "convert") => {
            need(operands, 1, op)?;
            let from = nsymm_basis(flags.from.as_deref())?;
            let to = nsymm_basis(flags.to.as_deref())?;
            let x = NsymmElem::basis_elem(from, word_arg(operands, 0)?);
            Ok(Output::Nsymm(x.to_basis(to)))
        }
        ("nsymm", "embed") => {
            need(operands, 1, op)?;
            let basis = nsymm_basis(flags.basis.as_deref().or(Some("S")))?;
            let x = NsymmElem::basis_elem(basis, word_arg(operands, 0)?);
            Ok(Output::Perms(embed_i(&x)))
        }
        ("nsymm", "pair") => {
            need(operands, 2, op)?;
            let a = word_arg(operands, 0)?;
            let b = word_arg(operands, 1)?;
            let value = match flags.pairing.as_deref().unwrap_or("monomial") {
                "monomial" => z_monomial_pairing(&a, &b),
                "smonomial" => s_monomial_pairing(&a, &b),
                "rf" => pair_r_f(&a, &b),
                other => return Err(CliError(format!("unknown nsymm pairing '{}'", other))),
            };
            Ok(Output::Integer(value))
        }
        ("qsymm", "mul") => {
            need(operands, 2, op)?;
            let basis = qsymm_basis(flags.basis.as_deref())?;
            let a = QsymmElem::basis_elem(basis, word_arg(operands, 0)?);
            let b = QsymmElem::basis_elem(basis, word_arg(operands, 1)?);
            Ok(Output::Qsymm(a.mul(&b)))
        }
        ("qsymm", "comul") => {
            need(operands, 1, op)?;
            match qsymm_basis(flags.basis.as_deref())? {
                QsymmBasis::M => Ok(Output::WordTensor(QsymmM.coproduct(&word_arg(operands, 0)?))),
                QsymmBasis::F => Ok(Output::WordTensor(QsymmF.coproduct(&word_arg(operands, 0)?))),
            }
        }
        ("qsymm", "antipode") => {
            need(operands, 1, op)?;
            Ok(Output::Words(antipode(&QsymmM, &Elem::basis(word_arg(operands, 0)?))))
        }
        ("qsymm", "convert") => {
            need(operands, 1, op)?;
            let from = qsymm_basis(flags.from.as_deref())?;
            let to = qsymm_basis(flags.to.as_deref())?;
            let x = QsymmElem::basis_elem(from, word_arg(operands, 0)?);
            Ok(Output::Qsymm(x.to_basis(to)))
        }
        ("qsymm", "section") => {
            need(operands, 1, op)?;
            let alpha = word_arg(operands, 0)?;
            let perm = match flags.variant.as_deref().unwrap_or("lsd") {
                "lsd" => section_lsd(&alpha),
                "lld" => section_lld(&alpha),
                other => return Err(CliError(format!("unknown section variant '{}'", other))),
            };
            Ok(Output::Perms(Elem::basis(perm)))
        }
        ("icc", "comul") => {
            need(operands, 1, op)?;
            Ok(Output::WordTensor(icc_comul(&word_arg(operands, 0)?)))
        }
        ("icc", "mul") => {
            need(operands, 2, op)?;
            Ok(Output::Words(icc_dual_mul(&word_arg(operands, 0)?, &word_arg(operands, 1)?)))
        }
        ("icc", "project") => {
            need(operands, 1, op)?;
            Ok(Output::Qsymm(hopfwords::icc::icc_to_qsymm(&word_arg(operands, 0)?)))
        }
        _ => Err(unsupported()),
    }
}

struct CheckArgs {
    suite: String,
    algebra: Option<String>,
    bound: Option<usize>,
    cap_top: usize,
    cap_bot: usize,
    max_letter: u32,
    n: Option<usize>,
    pair: Option<String>,
    map: Option<String>,
    halves: String,
    wt: Option<usize>,
}

fn morphism_half(text: &str) -> Result<MorphismHalf, CliError> {
    match text {
        "algebra" => Ok(MorphismHalf::Algebra),
        "coalgebra" => Ok(MorphismHalf::Coalgebra),
        "both" => Ok(MorphismHalf::Both),
        other => Err(CliError(format!("unknown halves '{}'", other))),
    }
}

fn check(args: CheckArgs) -> Result<Vec<CheckReport>, CliError> {
    let dwha = DwhaAlg { top_cap: args.cap_top, bot_cap: args.cap_bot };
    let dwha2 = DwhaAlg2 { top_cap: args.cap_top, bot_cap: args.cap_bot };
    // unbounded in degree: the enumeration caps carry the truncation
    let dwha_bound = args.bound.unwrap_or(100);
    match args.suite.as_str() {
        "bialgebra" | "antipode" => {
            let algebra = args
                .algebra
                .as_deref()
                .ok_or(CliError("suite needs --algebra".into()))?;
            let antipode_suite = args.suite == "antipode";
            let b = args.bound;
            let report = match algebra {
                "shuffle" => run_axioms(&ShuffleAlg, b.unwrap_or(5), antipode_suite),
                "liehopf" => run_axioms(&LieHopfAlg, b.unwrap_or(5), antipode_suite),
                "mpr" => run_axioms(&MprHopf, b.unwrap_or(5), antipode_suite),
                "mpr2" => run_axioms(&MprHopf2, b.unwrap_or(5), antipode_suite),
                "wha" => run_axioms(&WhaAlg, b.unwrap_or(5), antipode_suite),
                "wha-length" => run_axioms(
                    &WhaLengthAlg { max_letter: args.max_letter },
                    b.unwrap_or(3),
                    antipode_suite,
                ),
                "dwha" => run_axioms(&dwha, dwha_bound, antipode_suite),
                "dwha2" => run_axioms(&dwha2, dwha_bound, antipode_suite),
                "nsymm" => run_axioms(&NsymmZ, b.unwrap_or(5), antipode_suite),
                "qsymm" => run_axioms(&QsymmM, b.unwrap_or(5), antipode_suite),
                "height-action" => run_axioms(&HeightActionAlg, b.unwrap_or(4), antipode_suite),
                "icc" => {
                    if antipode_suite {
                        return Err(CliError("icc carries no product, so no antipode".into()));
                    }
                    check_coalgebra(&IccCoalg, b.unwrap_or(5))
                }
                other => return Err(CliError(format!("unknown algebra '{}'", other))),
            };
            Ok(vec![report])
        }
        "dual-pair" => {
            let name = args.pair.as_deref().ok_or(CliError("suite needs --pair".into()))?;
            let b = args.bound;
            let report = match name {
                "liehopf-shuffle" => {
                    check_dual_pair(&LieHopfAlg, &ShuffleAlg, kronecker, b.unwrap_or(5))
                }
                "nsymm-qsymm" => {
                    check_dual_pair(&NsymmZ, &QsymmM, z_monomial_pairing, b.unwrap_or(5))
                }
                "rf" => check_rf_biorthogonality(b.unwrap_or(5)),
                "mpr-self" => {
                    check_dual_pair(&MprHopf, &MprHopf, kronecker_inverse, b.unwrap_or(4))
                }
                "mpr-cross" => check_dual_pair(
                    &MprHopf,
                    &MprHopf2,
                    hopfwords::mpr::orthonormal,
                    b.unwrap_or(4),
                ),
                "dwha-self" => check_dual_pair(&dwha, &dwha, inner_product, dwha_bound),
                "dwha-orthonormal" => {
                    check_dual_pair(&dwha, &dwha2, subst_orthonormal, dwha_bound)
                }
                other => return Err(CliError(format!("unknown pair '{}'", other))),
            };
            Ok(vec![report])
        }
        "morphism" => {
            let name = args.map.as_deref().ok_or(CliError("suite needs --map".into()))?;
            let half = morphism_half(&args.halves)?;
            let b = args.bound;
            let report = match name {
                "embed-dwha" => check_hopf_morphism(
                    "permutations into substitutions",
                    |p: &Perm| Elem::basis(embed_dwha(p)),
                    &MprHopf,
                    &dwha,
                    b.unwrap_or(3),
                    half,
                ),
                "embed-dwha2" => check_hopf_morphism(
                    "permutations into substitutions (second structures)",
                    |p: &Perm| Elem::basis(embed_dwha(p)),
                    &MprHopf2,
                    &dwha2,
                    b.unwrap_or(3),
                    half,
                ),
                "inverse" => check_hopf_morphism(
                    "inversion",
                    |p: &Perm| Elem::basis(p.inverse()),
                    &MprHopf,
                    &MprHopf2,
                    b.unwrap_or(4),
                    half,
                ),
                "psi-mult" => check_hopf_morphism(
                    "multiplicity projection",
                    project_mpr,
                    &dwha,
                    &MprHopf,
                    dwha_bound,
                    half,
                ),
                "std-surj" => check_hopf_morphism(
                    "surjective standardization",
                    |w: &Word| Elem::basis(surjective_standardize(w)),
                    &WhaAlg,
                    &WhaAlg,
                    b.unwrap_or(5),
                    half,
                ),
                "st" => check_hopf_morphism(
                    "Schensted standardization",
                    |w: &Word| Elem::basis(standardize(w)),
                    &WhaAlg,
                    &MprHopf,
                    b.unwrap_or(4),
                    half,
                ),
                "pi" => check_hopf_morphism(
                    "descent composition projection",
                    |s: &Perm| project_pi(s).elem,
                    &MprHopf,
                    &QsymmM,
                    b.unwrap_or(5),
                    half,
                ),
                "embed-i" => check_hopf_morphism(
                    "nsymm into permutations",
                    |alpha: &Word| embed_i(&NsymmElem::basis_elem(NsymmBasis::Z, alpha.clone())),
                    &NsymmZ,
                    &MprHopf2,
                    b.unwrap_or(4),
                    half,
                ),
                "psi-lsd" => check_algebra_morphism(
                    "lsd ribbon retraction",
                    |s: &Perm| psi_retract(s).to_basis(NsymmBasis::Z).elem,
                    &MprHopf2,
                    &NsymmZ,
                    b.unwrap_or(4),
                ),
                "section-lsd" => check_coalgebra_morphism(
                    "lsd section",
                    |alpha: &Word| Elem::basis(section_lsd(alpha)),
                    &QsymmF,
                    &MprHopf,
                    b.unwrap_or(5),
                ),
                "section-lld" => check_coalgebra_morphism(
                    "lld section",
                    |alpha: &Word| Elem::basis(section_lld(alpha)),
                    &QsymmF,
                    &MprHopf,
                    b.unwrap_or(5),
                ),
                "complement" => check_coalgebra_morphism(
                    "complement automorphism",
                    |s: &Perm| Elem::basis(complement(s)),
                    &MprHopf,
                    &MprHopf,
                    b.unwrap_or(5),
                ),
                "mpr-to-icc" => check_coalgebra_morphism(
                    "descent composition",
                    mpr_to_icc,
                    &MprHopf,
                    &IccCoalg,
                    b.unwrap_or(5),
                ),
                "icc-to-qsymm" => check_coalgebra_morphism(
                    "F basis identification",
                    f_to_m,
                    &IccCoalg,
                    &QsymmM,
                    b.unwrap_or(5),
                ),
                other => return Err(CliError(format!("unknown map '{}'", other))),
            };
            Ok(vec![report])
        }
        "descent-theorem" => {
            let n = args.n.ok_or(CliError("suite needs --n".into()))?;
            if n > 8 {
                return Err(CliError(format!("n = {} exceeds the cap of 8", n)));
            }
            Ok((0..=n).map(check_descent_class_theorem).collect())
        }
        "self-duality" => {
            let algebra = args.algebra.as_deref().unwrap_or("mpr");
            let report = match algebra {
                "mpr" => check_dual_pair(&MprHopf, &MprHopf, kronecker_inverse, args.bound.unwrap_or(4)),
                "dwha" => check_dual_pair(&dwha, &dwha, inner_product, dwha_bound),
                other => return Err(CliError(format!("no self-duality suite for '{}'", other))),
            };
            Ok(vec![report])
        }
        "convolution" => {
            let mut reports =
                vec![check_convolution_identity(args.bound.unwrap_or(5), args.max_letter)];
            reports.push(check_coconv_components(args.n.unwrap_or(5)));
            Ok(reports)
        }
        "solomon" => Ok(vec![check_solomon_closure(args.wt.unwrap_or(4))]),
        "distributivity" => {
            let bound = args.wt.unwrap_or(4);
            let mut reports = vec![check_distributivity(bound)];
            // the mirrored orientation must fail; surface that as a report
            let mut mirror = CheckReport {
                suite: "mirrored distributivity has a counterexample".into(),
                bound: format!("wt <= {}", bound),
                cases: 1,
                failure: None,
            };
            if distributivity_mirror_counterexample(bound).is_none() {
                mirror.failure = Some(hopfwords::hopf::CheckFailure {
                    case: "mirror orientation".into(),
                    lhs: "no counterexample found".into(),
                    rhs: "a counterexample (one-sidedness)".into(),
                });
            }
            reports.push(mirror);
            Ok(reports)
        }
        other => Err(CliError(format!("unknown suite '{}'", other))),
    }
}

fn run_axioms<H>(h: &H, bound: usize, antipode_suite: bool) -> CheckReport
where
    H: HopfAlgebra + Sync,
    H::Key: Send + Sync,
{
    if antipode_suite {
        check_antipode(h, bound)
    } else {
        check_bialgebra(h, bound)
    }
}
