//! Reduced words in the free group and normal forms in the universal
//! Coxeter group.
//!
//! A [`FreeWord`] is the unique reduced word of an element of the free
//! group on generators `f1..fn` (letters are signed indices, `-j`
//! meaning the inverse of `fj`). A [`CoxWord`] is the unique squarefree
//! word of an element of the free product of `n` copies of the order-2
//! group, with generators `s1..sn`. Both are normalized eagerly at
//! construction, so equality of values is equality of group elements.

use std::fmt;
use std::ops::Mul;

use crate::curves::DiskModel;
use crate::error::Error;

/// Number of punctures, equivalently of generators. Always at least 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rank(u32);

impl Rank {
    pub fn new(n: u32) -> Result<Self, Error> {
        if n == 0 {
            return Err(Error::Parse("rank must be at least 1".into()));
        }
        Ok(Rank(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Rank {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Common interface of word types acted on by Hurwitz moves.
pub trait GroupWord: Clone + Eq + Ord + std::hash::Hash {
    fn identity() -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn inverse(&self) -> Self;
}

fn reduce_free<I: IntoIterator<Item = i32>>(letters: I) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for x in letters {
        assert!(x != 0, "free group letters are nonzero signed indices");
        if out.last() == Some(&-x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Reduced word over `f1..fn` and their inverses.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<i32>,
}

impl FreeWord {
    /// Builds a word from signed indices, freely reducing on the fly.
    pub fn new<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        FreeWord { letters: reduce_free(letters) }
    }

    pub fn identity() -> Self {
        FreeWord { letters: Vec::new() }
    }

    /// The generator `fj`.
    pub fn generator(j: u32) -> Self {
        assert!(j >= 1, "generator indices are 1-based");
        FreeWord { letters: vec![j as i32] }
    }

    /// The standard maximal element `f1 f2 ... fn`.
    pub fn garside(n: Rank) -> Self {
        FreeWord { letters: (1..=n.get() as i32).collect() }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Self {
        // Reversal with flipped signs preserves reducedness.
        FreeWord { letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    /// Exponent sum. Equals the number of enclosed punctures for
    /// non-crossing words, since winding numbers factor through
    /// abelianization.
    pub fn winding_length(&self) -> i64 {
        self.letters.iter().map(|x| x.signum() as i64).sum()
    }

    /// Largest generator index occurring in the word (0 for the identity).
    pub fn max_index(&self) -> u32 {
        self.letters.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
    }

    /// Image under the sign-forgetting epimorphism onto the universal
    /// Coxeter group.
    pub fn project(&self) -> CoxWord {
        CoxWord::new(self.letters.iter().map(|x| x.unsigned_abs()))
    }

    /// Splits `w = p u p^-1` with `u` cyclically reduced; returns
    /// `(p, u)`.
    pub fn cyclic_reduction(&self) -> (FreeWord, FreeWord) {
        let mut lo = 0;
        let mut hi = self.letters.len();
        while lo + 1 < hi && self.letters[lo] == -self.letters[hi - 1] {
            lo += 1;
            hi -= 1;
        }
        (
            FreeWord { letters: self.letters[..lo].to_vec() },
            FreeWord { letters: self.letters[lo..hi].to_vec() },
        )
    }

    /// True if the reduced word contains `fj fj` or `fj^-1 fj^-1`.
    pub fn has_square(&self) -> bool {
        self.letters.windows(2).any(|w| w[0] == w[1])
    }
}

impl GroupWord for FreeWord {
    fn identity() -> Self {
        FreeWord::identity()
    }

    fn mul(&self, rhs: &Self) -> Self {
        FreeWord::new(self.letters.iter().chain(rhs.letters.iter()).copied())
    }

    fn inverse(&self) -> Self {
        self.inverse()
    }
}

impl Mul<&FreeWord> for &FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: &FreeWord) -> FreeWord {
        GroupWord::mul(self, rhs)
    }
}

impl Mul<FreeWord> for FreeWord {
    type Output = FreeWord;

    fn mul(self, rhs: FreeWord) -> FreeWord {
        GroupWord::mul(&self, &rhs)
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let mut first = true;
        for &x in &self.letters {
            if !first {
                write!(f, ".")?;
            }
            first = false;
            if x > 0 {
                write!(f, "f{x}")?;
            } else {
                write!(f, "f{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

fn squarefree<I: IntoIterator<Item = u32>>(letters: I) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::new();
    for x in letters {
        assert!(x != 0, "Coxeter letters are 1-based indices");
        if out.last() == Some(&x) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    out
}

/// Squarefree word over `s1..sn`; the normal form of an element of the
/// universal Coxeter group. The stored length is the group-theoretic
/// length of the element.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoxWord {
    letters: Vec<u32>,
}

impl CoxWord {
    /// Normalizes an arbitrary index sequence by deleting adjacent equal
    /// pairs until none remain. The result does not depend on the order
    /// of deletions; this implementation cancels eagerly left to right.
    pub fn new<I: IntoIterator<Item = u32>>(letters: I) -> Self {
        CoxWord { letters: squarefree(letters) }
    }

    pub fn identity() -> Self {
        CoxWord { letters: Vec::new() }
    }

    pub fn generator(j: u32) -> Self {
        assert!(j >= 1, "generator indices are 1-based");
        CoxWord { letters: vec![j] }
    }

    /// The image `s1 s2 ... sn` of the standard maximal element.
    pub fn coxeter_element(n: Rank) -> Self {
        CoxWord { letters: (1..=n.get()).collect() }
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_index(&self) -> u32 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        // Generators are involutions, so the inverse is the reversal.
        CoxWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// Palindromic decomposition `u1..uk s uk..u1` of a reflection.
    pub fn as_reflection(&self) -> Result<ReflectionForm, Error> {
        let m = self.letters.len();
        if m % 2 == 0 {
            return Err(Error::NotReflection(self.to_string()));
        }
        let k = m / 2;
        let palindrome = (0..k).all(|i| self.letters[i] == self.letters[m - 1 - i]);
        if !palindrome {
            return Err(Error::NotReflection(self.to_string()));
        }
        Ok(ReflectionForm {
            conjugator: CoxWord { letters: self.letters[..k].to_vec() },
            content: self.letters[k],
        })
    }

    pub fn is_reflection(&self) -> bool {
        self.as_reflection().is_ok()
    }
}

impl GroupWord for CoxWord {
    fn identity() -> Self {
        CoxWord::identity()
    }

    fn mul(&self, rhs: &Self) -> Self {
        CoxWord::new(self.letters.iter().chain(rhs.letters.iter()).copied())
    }

    fn inverse(&self) -> Self {
        self.inverse()
    }
}

impl Mul<&CoxWord> for &CoxWord {
    type Output = CoxWord;

    fn mul(self, rhs: &CoxWord) -> CoxWord {
        GroupWord::mul(self, rhs)
    }
}

impl Mul<CoxWord> for CoxWord {
    type Output = CoxWord;

    fn mul(self, rhs: CoxWord) -> CoxWord {
        GroupWord::mul(&self, &rhs)
    }
}

impl fmt::Display for CoxWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "e");
        }
        let parts: Vec<String> = self.letters.iter().map(|x| format!("s{x}")).collect();
        write!(f, "{}", parts.join("."))
    }
}

/// A reflection written as `u1..uk s uk..u1` with squarefree total word.
/// The middle letter is the content term; the decomposition is unique.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ReflectionForm {
    pub conjugator: CoxWord,
    pub content: u32,
}

impl ReflectionForm {
    /// Reassembles the squarefree palindrome.
    pub fn expand(&self) -> CoxWord {
        let u = self.conjugator.letters();
        let letters: Vec<u32> = u
            .iter()
            .copied()
            .chain(std::iter::once(self.content))
            .chain(u.iter().rev().copied())
            .collect();
        let w = CoxWord::new(letters.iter().copied());
        debug_assert_eq!(w.len(), letters.len(), "reflection form must be squarefree");
        w
    }

    /// Group-theoretic length `2k + 1`.
    pub fn length(&self) -> usize {
        2 * self.conjugator.len() + 1
    }
}

/// Membership in the set of braid reflections: non-crossing of height 1.
pub fn is_braid_reflection(n: Rank, w: &FreeWord) -> bool {
    w.winding_length() == 1 && DiskModel::new(n).is_noncrossing(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(letters: &[i32]) -> FreeWord {
        FreeWord::new(letters.iter().copied())
    }

    fn cw(letters: &[u32]) -> CoxWord {
        CoxWord::new(letters.iter().copied())
    }

    #[test]
    fn multiplication_cancels_adjacent_inverses() {
        assert_eq!(&fw(&[1, 2]) * &fw(&[-2, 3]), fw(&[1, 3]));
        assert_eq!(&FreeWord::identity() * &fw(&[2, 1]), fw(&[2, 1]));
        assert_eq!(&fw(&[1, 2]) * &fw(&[-2, -1]), FreeWord::identity());
    }

    #[test]
    fn inverse_reverses_and_flips() {
        assert_eq!(fw(&[1, 2]).inverse(), fw(&[-2, -1]));
        assert_eq!(FreeWord::identity().inverse(), FreeWord::identity());
        assert_eq!(fw(&[-3]).inverse(), fw(&[3]));
        let w = fw(&[1, 2, -3, 2]);
        assert_eq!(&w * &w.inverse(), FreeWord::identity());
    }

    #[test]
    fn winding_length_is_exponent_sum() {
        assert_eq!(fw(&[1, 2]).winding_length(), 2);
        assert_eq!(fw(&[1, 2, -3, -2]).winding_length(), 0);
        assert_eq!(fw(&[-2, 1, 2]).winding_length(), 1);
    }

    #[test]
    fn projection_drops_signs_and_normalizes() {
        assert_eq!(fw(&[-2, 1, 2]).project(), cw(&[2, 1, 2]));
        assert_eq!(fw(&[1, 1]).project(), CoxWord::identity());
        assert_eq!(fw(&[1, 2, -3, -2]).project(), cw(&[1, 2, 3, 2]));
    }

    #[test]
    fn squarefree_normalization() {
        assert_eq!(cw(&[1, 2, 2, 1, 1]), cw(&[1]));
        assert_eq!(cw(&[1, 2, 3]).letters(), &[1, 2, 3]);
        assert_eq!(cw(&[2, 2]), CoxWord::identity());
    }

    #[test]
    fn normalization_is_deletion_order_independent() {
        // Randomized executions of the deletion procedure must all agree
        // with the eager left-to-right normal form.
        fn random_execution(mut v: Vec<u32>, seed: &mut u64) -> Vec<u32> {
            loop {
                let pairs: Vec<usize> =
                    (0..v.len().saturating_sub(1)).filter(|&i| v[i] == v[i + 1]).collect();
                if pairs.is_empty() {
                    return v;
                }
                *seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                let pick = pairs[(*seed >> 33) as usize % pairs.len()];
                v.drain(pick..pick + 2);
            }
        }

        let inputs: Vec<Vec<u32>> = vec![
            vec![1, 2, 2, 1, 1],
            vec![1, 1, 1, 1, 1],
            vec![3, 2, 2, 3, 1, 1, 3],
            vec![1, 2, 1, 1, 2, 1, 2],
        ];
        let mut seed = 0xfeed_beefu64;
        for input in inputs {
            let normal = CoxWord::new(input.iter().copied());
            for _ in 0..32 {
                let run = random_execution(input.clone(), &mut seed);
                assert_eq!(run, normal.letters());
            }
        }
    }

    #[test]
    fn projection_is_multiplicative() {
        let a = fw(&[1, -2, 3, 3]);
        let b = fw(&[-3, 2, 2, 1]);
        assert_eq!((&a * &b).project(), GroupWord::mul(&a.project(), &b.project()));
    }

    #[test]
    fn reflection_form_roundtrip() {
        let r = cw(&[1, 2, 1]).as_reflection().unwrap();
        assert_eq!(r.conjugator, cw(&[1]));
        assert_eq!(r.content, 2);
        assert_eq!(r.expand(), cw(&[1, 2, 1]));

        assert!(cw(&[1, 2]).as_reflection().is_err());

        let single = cw(&[1]).as_reflection().unwrap();
        assert_eq!(single.conjugator, CoxWord::identity());
        assert_eq!(single.content, 1);
    }

    #[test]
    fn odd_palindromes_are_exactly_the_reflections() {
        // Exhaustive over squarefree words of odd length <= 7 for n = 3.
        fn extend(prefix: &mut Vec<u32>, len: usize, out: &mut Vec<Vec<u32>>) {
            if prefix.len() == len {
                out.push(prefix.clone());
                return;
            }
            for j in 1..=3u32 {
                if prefix.last() != Some(&j) {
                    prefix.push(j);
                    extend(prefix, len, out);
                    prefix.pop();
                }
            }
        }
        for len in [1usize, 3, 5, 7] {
            let mut words = Vec::new();
            extend(&mut Vec::new(), len, &mut words);
            for letters in words {
                let w = CoxWord::new(letters.iter().copied());
                let palindrome = letters.iter().eq(letters.iter().rev());
                assert_eq!(w.as_reflection().is_ok(), palindrome, "word {w}");
                if let Ok(form) = w.as_reflection() {
                    assert_eq!(form.expand(), w);
                    assert_eq!(form.length(), len);
                }
            }
        }
    }

    #[test]
    fn display_uses_published_grammar() {
        assert_eq!(fw(&[1, -2]).to_string(), "f1.f2^-1");
        assert_eq!(FreeWord::identity().to_string(), "e");
        assert_eq!(cw(&[2, 1, 2]).to_string(), "s2.s1.s2");
        assert_eq!(CoxWord::identity().to_string(), "e");
    }

    #[test]
    fn garside_word_and_rank() {
        assert!(Rank::new(0).is_err());
        let n = Rank::new(4).unwrap();
        assert_eq!(FreeWord::garside(n), fw(&[1, 2, 3, 4]));
        assert_eq!(CoxWord::coxeter_element(n), cw(&[1, 2, 3, 4]));
    }
}
