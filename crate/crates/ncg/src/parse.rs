//! Published input grammars.
//!
//! Words are `.`- or whitespace-separated tokens `f<k>`, `f<k>^-1`,
//! `s<k>`, `b<k>`, `b<k>^-1`; the single token `e` denotes the empty
//! word. Tuples are `(w1, w2, ..., wn)` with homogeneous entries.
//! Monoid elements are bracket sequences `[w1][w2]...[wk]`, or `e` for
//! the empty product. Every parser is total: malformed input yields
//! [`Error::Parse`], never a panic.

use crate::error::Error;
use crate::hurwitz::BraidWord;
use crate::words::{CoxWord, FreeWord};

/// A parsed word of either kind.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyWord {
    Free(FreeWord),
    Cox(CoxWord),
}

/// A parsed tuple; entries are homogeneous. A tuple of `e` entries
/// parses as free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyTuple {
    Free(Vec<FreeWord>),
    Cox(Vec<CoxWord>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Free,
    Cox,
    Braid,
}

impl Kind {
    fn prefix(self) -> char {
        match self {
            Kind::Free => 'f',
            Kind::Cox => 's',
            Kind::Braid => 'b',
        }
    }
}

/// One parsed token: generator index and sign.
fn parse_token(tok: &str, kind: Kind) -> Result<i32, Error> {
    let bad = |msg: &str| Error::Parse(format!("token `{tok}`: {msg}"));
    let mut rest = tok
        .strip_prefix(kind.prefix())
        .ok_or_else(|| bad(&format!("expected `{}<k>`", kind.prefix())))?;
    let mut sign = 1i32;
    if let Some(head) = rest.strip_suffix("^-1") {
        if kind == Kind::Cox {
            return Err(bad("generators of the Coxeter group are involutions; no `^-1` form"));
        }
        sign = -1;
        rest = head;
    }
    if rest.is_empty() || !rest.bytes().all(|b| b.is_ascii_digit()) {
        return Err(bad("index must be a decimal number"));
    }
    let index: u32 = rest
        .parse()
        .map_err(|_| bad("index out of range"))?;
    if index == 0 {
        return Err(bad("indices are 1-based"));
    }
    if index > i32::MAX as u32 {
        return Err(bad("index out of range"));
    }
    Ok(sign * index as i32)
}

fn word_tokens(s: &str) -> Vec<&str> {
    s.split(|c: char| c == '.' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .collect()
}

fn parse_letters(s: &str, kind: Kind) -> Result<Vec<i32>, Error> {
    let tokens = word_tokens(s);
    if tokens.is_empty() {
        return Err(Error::Parse("empty input; the empty word is written `e`".into()));
    }
    if tokens == ["e"] {
        return Ok(Vec::new());
    }
    tokens.iter().map(|t| parse_token(t, kind)).collect()
}

pub fn parse_free_word(s: &str) -> Result<FreeWord, Error> {
    Ok(FreeWord::new(parse_letters(s, Kind::Free)?))
}

pub fn parse_cox_word(s: &str) -> Result<CoxWord, Error> {
    Ok(CoxWord::new(parse_letters(s, Kind::Cox)?.into_iter().map(|x| x as u32)))
}

pub fn parse_braid_word(s: &str) -> Result<BraidWord, Error> {
    Ok(BraidWord::new(parse_letters(s, Kind::Braid)?))
}

/// Parses a word whose kind is inferred from its tokens.
pub fn parse_any_word(s: &str) -> Result<AnyWord, Error> {
    let tokens = word_tokens(s);
    if tokens.iter().any(|t| t.starts_with('s')) {
        Ok(AnyWord::Cox(parse_cox_word(s)?))
    } else {
        Ok(AnyWord::Free(parse_free_word(s)?))
    }
}

/// Parses `(w1, w2, ..., wn)`; entry kinds must agree.
pub fn parse_tuple(s: &str) -> Result<AnyTuple, Error> {
    let t = s.trim();
    let inner = t
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| Error::Parse("tuple must be parenthesized: `(w1, w2, ...)`".into()))?;
    let entries: Vec<&str> = inner.split(',').collect();
    let parsed: Vec<AnyWord> =
        entries.iter().map(|e| parse_any_word(e)).collect::<Result<_, _>>()?;
    let any_cox = parsed.iter().any(|w| matches!(w, AnyWord::Cox(_)));
    let any_free = parsed
        .iter()
        .any(|w| matches!(w, AnyWord::Free(fw) if !fw.is_empty()));
    if any_cox && any_free {
        return Err(Error::Parse("tuple mixes free-group and Coxeter entries".into()));
    }
    if any_cox {
        let words = parsed
            .into_iter()
            .map(|w| match w {
                AnyWord::Cox(c) => c,
                AnyWord::Free(f) => {
                    debug_assert!(f.is_empty());
                    CoxWord::identity()
                }
            })
            .collect();
        Ok(AnyTuple::Cox(words))
    } else {
        let words = parsed
            .into_iter()
            .map(|w| match w {
                AnyWord::Free(f) => f,
                AnyWord::Cox(_) => unreachable!("no Coxeter entries"),
            })
            .collect();
        Ok(AnyTuple::Free(words))
    }
}

/// Parses `[w1][w2]...[wk]` into factor words; `e` is the empty
/// product. Certification of the factors is up to the caller.
pub fn parse_monoid_element(s: &str) -> Result<Vec<FreeWord>, Error> {
    let t = s.trim();
    if t == "e" {
        return Ok(Vec::new());
    }
    if t.is_empty() {
        return Err(Error::Parse("empty input; the identity is written `e`".into()));
    }
    let mut factors = Vec::new();
    let mut rest = t;
    while !rest.is_empty() {
        rest = rest.trim_start();
        if rest.is_empty() {
            break;
        }
        let body = rest
            .strip_prefix('[')
            .ok_or_else(|| Error::Parse(format!("expected `[` at `{rest}`")))?;
        let close = body
            .find(']')
            .ok_or_else(|| Error::Parse("unclosed `[`".into()))?;
        factors.push(parse_free_word(&body[..close])?);
        rest = &body[close + 1..];
    }
    Ok(factors)
}

pub fn format_free_tuple(t: &[FreeWord]) -> String {
    let entries: Vec<String> = t.iter().map(|w| w.to_string()).collect();
    format!("({})", entries.join(", "))
}

pub fn format_cox_tuple(t: &[CoxWord]) -> String {
    let entries: Vec<String> = t.iter().map(|w| w.to_string()).collect();
    format!("({})", entries.join(", "))
}

pub fn format_monoid_element(factors: &[FreeWord]) -> String {
    if factors.is_empty() {
        return "e".into();
    }
    factors.iter().map(|w| format!("[{w}]")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_grammar() {
        assert_eq!(parse_free_word("f1.f2^-1.f3").unwrap(), FreeWord::new([1, -2, 3]));
        assert_eq!(parse_free_word("f1 f2^-1  f3").unwrap(), FreeWord::new([1, -2, 3]));
        assert_eq!(parse_free_word("e").unwrap(), FreeWord::identity());
        assert_eq!(parse_cox_word("s2.s1.s2").unwrap(), CoxWord::new([2, 1, 2]));
        assert_eq!(parse_braid_word("b1^-1.b2").unwrap(), BraidWord::new([-1, 2]));
        // Non-reduced input is normalized at construction.
        assert_eq!(parse_free_word("f1.f1^-1").unwrap(), FreeWord::identity());
        assert_eq!(parse_cox_word("s1.s1").unwrap(), CoxWord::identity());
    }

    #[test]
    fn word_grammar_rejections() {
        for bad in ["", "f0", "fx", "f1^-2", "s1^-1", "g3", "f", "f1.s2", "f-1"] {
            assert!(parse_free_word(bad).is_err(), "free accepted `{bad}`");
        }
        assert!(parse_cox_word("s1^-1").is_err());
        assert!(parse_braid_word("f1").is_err());
    }

    #[test]
    fn tuple_grammar() {
        assert_eq!(
            parse_tuple("(f1, f2)").unwrap(),
            AnyTuple::Free(vec![FreeWord::new([1]), FreeWord::new([2])])
        );
        assert_eq!(
            parse_tuple("(s2, s2.s1.s2)").unwrap(),
            AnyTuple::Cox(vec![CoxWord::new([2]), CoxWord::new([2, 1, 2])])
        );
        assert_eq!(
            parse_tuple("(e, s1)").unwrap(),
            AnyTuple::Cox(vec![CoxWord::identity(), CoxWord::new([1])])
        );
        assert_eq!(parse_tuple("(e, e)").unwrap(), AnyTuple::Free(vec![
            FreeWord::identity(),
            FreeWord::identity()
        ]));
        assert!(parse_tuple("(f1, s2)").is_err());
        assert!(parse_tuple("f1, f2").is_err());
        assert!(parse_tuple("(f1, )").is_err());
    }

    #[test]
    fn monoid_grammar() {
        assert_eq!(
            parse_monoid_element("[f1][f2^-1.f1.f2]").unwrap(),
            vec![FreeWord::new([1]), FreeWord::new([-2, 1, 2])]
        );
        assert_eq!(parse_monoid_element("e").unwrap(), Vec::<FreeWord>::new());
        assert_eq!(parse_monoid_element("[e]").unwrap(), vec![FreeWord::identity()]);
        assert!(parse_monoid_element("").is_err());
        assert!(parse_monoid_element("[f1").is_err());
        assert!(parse_monoid_element("f1]").is_err());
    }

    #[test]
    fn formatting_round_trips() {
        let t = vec![FreeWord::new([1, 2, -1]), FreeWord::new([1])];
        let s = format_free_tuple(&t);
        assert_eq!(s, "(f1.f2.f1^-1, f1)");
        assert_eq!(parse_tuple(&s).unwrap(), AnyTuple::Free(t));

        let m = vec![FreeWord::new([1]), FreeWord::identity()];
        assert_eq!(format_monoid_element(&m), "[f1][e]");
        assert_eq!(parse_monoid_element("[f1][e]").unwrap(), m);
        assert_eq!(format_monoid_element(&[]), "e");
    }
}
