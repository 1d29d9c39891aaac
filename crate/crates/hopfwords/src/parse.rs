//! Parsing of printed elements back into values, so every element the CLI
//! prints can be fed back in. Terms are split at top-level '+'/'-' signs;
//! each term is an optional positive integer followed by a key literal
//! (word, substitution, or a tensor of two of them).

use crate::elem::{Elem, Tensor};
use crate::subst::Subst;
use crate::words::{ParseError, Word};

/// Splits an element string into signed term strings at top-level signs.
fn split_terms(s: &str) -> Result<Vec<(i64, String)>, ParseError> {
    let t = s.trim();
    if t.is_empty() {
        return Err(ParseError { pos: 0, msg: "empty element".into() });
    }
    if t == "0" {
        return Ok(Vec::new());
    }
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut current = String::new();
    let mut sign: i64 = 1;
    let mut pending_sign: i64 = 1;
    for (pos, ch) in t.char_indices() {
        match ch {
            '[' | '(' => {
                depth += 1;
                current.push(ch);
            }
            ']' | ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError { pos, msg: "unbalanced bracket".into() });
                }
                current.push(ch);
            }
            '+' | '-' if depth == 0 => {
                if current.trim().is_empty() {
                    // sign attached to the first term
                    pending_sign = if ch == '-' { -pending_sign } else { pending_sign };
                } else {
                    terms.push((sign, std::mem::take(&mut current)));
                    pending_sign = if ch == '-' { -1 } else { 1 };
                }
                sign = pending_sign;
            }
            _ => current.push(ch),
        }
    }
    if depth != 0 {
        return Err(ParseError { pos: t.len(), msg: "unbalanced bracket".into() });
    }
    if current.trim().is_empty() {
        return Err(ParseError { pos: t.len(), msg: "trailing sign".into() });
    }
    terms.push((sign, current));
    Ok(terms)
}

/// Splits one term into its coefficient and the key text.
fn split_coeff(term: &str) -> Result<(i64, &str), ParseError> {
    let t = term.trim();
    let digits: String = t.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rest = t[digits.len()..].trim_start();
    if rest.is_empty() {
        return Err(ParseError { pos: 0, msg: format!("term '{}' has no key", t) });
    }
    let coeff = if digits.is_empty() {
        1
    } else {
        digits.parse::<i64>().map_err(|_| ParseError {
            pos: 0,
            msg: format!("coefficient '{}' out of range", digits),
        })?
    };
    Ok((coeff, rest))
}

fn parse_elem_with<K, F>(s: &str, key: F) -> Result<Elem<K>, ParseError>
where
    K: Ord + Clone,
    F: Fn(&str) -> Result<K, ParseError>,
{
    let mut out = Elem::zero();
    for (sign, term) in split_terms(s)? {
        let (coeff, key_text) = split_coeff(&term)?;
        out.add_term(key(key_text)?, sign * coeff);
    }
    Ok(out)
}

fn split_tensor(s: &str) -> Result<(&str, &str), ParseError> {
    let mut depth = 0i32;
    for (pos, ch) in s.char_indices() {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            '⊗' if depth == 0 => {
                return Ok((&s[..pos], &s[pos + '⊗'.len_utf8()..]));
            }
            _ => {}
        }
    }
    Err(ParseError { pos: 0, msg: format!("no tensor separator in '{}'", s) })
}

pub fn parse_word_elem(s: &str) -> Result<Elem<Word>, ParseError> {
    parse_elem_with(s, |t| t.parse())
}

pub fn parse_subst_elem(s: &str) -> Result<Elem<Subst>, ParseError> {
    parse_elem_with(s, |t| t.parse())
}

pub fn parse_word_tensor(s: &str) -> Result<Tensor<Word>, ParseError> {
    parse_elem_with(s, |t| {
        let (a, b) = split_tensor(t)?;
        Ok((a.trim().parse()?, b.trim().parse()?))
    })
}

pub fn parse_subst_tensor(s: &str) -> Result<Tensor<Subst>, ParseError> {
    parse_elem_with(s, |t| {
        let (a, b) = split_tensor(t)?;
        Ok((a.trim().parse()?, b.trim().parse()?))
    })
}

/// Renders a tensor element in the same syntax `parse_word_tensor` and
/// friends accept, in the canonical key order.
pub fn display_tensor<K: std::fmt::Display + Ord + Clone>(t: &Tensor<K>) -> String {
    crate::elem::format_linear(t, |(a, b)| format!("{}⊗{}", a, b))
}
