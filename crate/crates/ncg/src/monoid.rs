//! The quasi-Garside monoid of positive words in braid reflections,
//! with the non-crossing divisors of `f1..fn` as simples.
//!
//! Divisibility of simples coincides with containment of interiors, so
//! the lattice operations of the curve engine drive the greedy normal
//! form: a factor sequence is left-weighted when no head of a factor
//! can be slid into its predecessor, certified locally by the meet with
//! the predecessor's complement being trivial.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::curves::DiskModel;
use crate::error::Error;
use crate::words::{FreeWord, GroupWord};

/// A certified divisor of the maximal element: non-crossing and
/// contained in the boundary circle. Carries its enclosed punctures.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simple {
    word: FreeWord,
    interior: BTreeSet<u32>,
}

impl Simple {
    /// Certifies a word as a simple.
    pub fn from_word(model: &DiskModel, w: &FreeWord) -> Result<Self, Error> {
        let curve = model.realize(w);
        if !curve.is_embedded() || curve.windings().iter().any(|&x| x != 0 && x != 1) {
            return Err(Error::NotNonCrossing(w.to_string()));
        }
        if !curve.fits_in_disk() {
            return Err(Error::NotDivisor {
                word: w.to_string(),
                garside: model.garside().to_string(),
            });
        }
        Ok(Simple { word: w.clone(), interior: curve.interior().expect("embedded") })
    }

    pub fn identity() -> Self {
        Simple { word: FreeWord::identity(), interior: BTreeSet::new() }
    }

    pub fn garside(model: &DiskModel) -> Self {
        let g = model.garside();
        Simple { word: g, interior: (1..=model.n()).collect() }
    }

    pub fn word(&self) -> &FreeWord {
        &self.word
    }

    pub fn interior(&self) -> &BTreeSet<u32> {
        &self.interior
    }

    /// Number of enclosed punctures, equal to the winding length.
    pub fn height(&self) -> usize {
        self.interior.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

fn certify_internal(model: &DiskModel, w: &FreeWord, what: &str) -> Simple {
    Simple::from_word(model, w).unwrap_or_else(|e| {
        panic!("engine error: {what} `{w}` failed simple certification: {e}")
    })
}

/// The right complement `a^-1 g`, again a simple; its height is `n`
/// minus the height of `a`. Closure is an engine invariant, so failure
/// panics rather than returning an error.
pub fn complement(model: &DiskModel, a: &Simple) -> Simple {
    let w = GroupWord::mul(&a.word.inverse(), &model.garside());
    certify_internal(model, &w, "complement")
}

/// Conjugation by the maximal element; equals the squared complement.
pub fn phi(model: &DiskModel, a: &Simple) -> Simple {
    let g = model.garside();
    let w = GroupWord::mul(&GroupWord::mul(&g.inverse(), &a.word), &g);
    certify_internal(model, &w, "conjugate")
}

/// Divisibility of simples: containment of interiors.
pub fn simple_divides(model: &DiskModel, a: &Simple, b: &Simple) -> bool {
    model
        .contains(b.word(), a.word())
        .expect("certified simples are non-crossing")
}

/// Greedy (left-weighted) factorization into simples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    factors: Vec<Simple>,
}

/// Serializable view of a normal form.
#[derive(Debug, Clone, Serialize)]
pub struct NormalFormJson {
    pub factors: Vec<FactorJson>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorJson {
    pub word: String,
    pub interior: Vec<u32>,
}

impl NormalForm {
    pub fn factors(&self) -> &[Simple] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.factors.is_empty()
    }

    /// The represented element, multiplied out in the free group.
    pub fn product_word(&self) -> FreeWord {
        self.factors
            .iter()
            .fold(FreeWord::identity(), |acc, s| GroupWord::mul(&acc, s.word()))
    }

    pub fn to_json(&self) -> NormalFormJson {
        NormalFormJson {
            factors: self
                .factors
                .iter()
                .map(|s| FactorJson {
                    word: s.word().to_string(),
                    interior: s.interior().iter().copied().collect(),
                })
                .collect(),
        }
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "e");
        }
        for s in &self.factors {
            write!(f, "[{}]", s.word())?;
        }
        Ok(())
    }
}

/// Left-weights a factor sequence by repeated local sliding: for each
/// adjacent pair the head `c = meet(complement(a), b)` moves across,
/// `(a, b) -> (a c, c^-1 b)`, until a full pass changes nothing.
/// Identity factors are stripped. Termination follows from the
/// winding-length grading.
pub fn normalize(model: &DiskModel, factors: &[Simple]) -> Result<NormalForm, Error> {
    let mut f: Vec<Simple> = factors.iter().filter(|s| !s.is_identity()).cloned().collect();
    loop {
        let mut changed = false;
        let mut i = 0;
        while i + 1 < f.len() {
            let head = complement(model, &f[i]);
            let c = model
                .nc_meet(head.word(), f[i + 1].word())
                .expect("certified simples are divisors");
            if !c.is_empty() {
                let left = GroupWord::mul(f[i].word(), &c);
                let right = GroupWord::mul(&c.inverse(), f[i + 1].word());
                f[i] = Simple::from_word(model, &left)
                    .map_err(|e| Error::NotSimple(format!("slid product `{left}`: {e}")))?;
                f[i + 1] = Simple::from_word(model, &right)
                    .map_err(|e| Error::NotSimple(format!("slid remainder `{right}`: {e}")))?;
                changed = true;
            }
            i += 1;
        }
        f.retain(|s| !s.is_identity());
        if !changed {
            return Ok(NormalForm { factors: f });
        }
    }
}

/// Word problem: two factor sequences represent the same monoid element
/// iff their normal forms agree. The free-group comparison is kept as a
/// cross-check in test builds.
pub fn monoid_equal(model: &DiskModel, x: &[Simple], y: &[Simple]) -> bool {
    let nx = normalize(model, x).expect("certified factors normalize");
    let ny = normalize(model, y).expect("certified factors normalize");
    let equal = nx.factors() == ny.factors();
    debug_assert_eq!(
        equal,
        product_of(x) == product_of(y),
        "normal-form equality must match free-group equality"
    );
    equal
}

fn product_of(factors: &[Simple]) -> FreeWord {
    factors
        .iter()
        .fold(FreeWord::identity(), |acc, s| GroupWord::mul(&acc, s.word()))
}

/// The greedy certificate for an adjacent pair.
pub fn is_left_weighted_pair(model: &DiskModel, a: &Simple, b: &Simple) -> bool {
    let head = complement(model, a);
    model
        .nc_meet(head.word(), b.word())
        .expect("certified simples are divisors")
        .is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Rank;

    fn fw(letters: &[i32]) -> FreeWord {
        FreeWord::new(letters.iter().copied())
    }

    fn model(n: u32) -> DiskModel {
        DiskModel::new(Rank::new(n).unwrap())
    }

    fn simple(model: &DiskModel, letters: &[i32]) -> Simple {
        Simple::from_word(model, &fw(letters)).unwrap()
    }

    #[test]
    fn certification_examples() {
        let d = model(2);
        assert_eq!(simple(&d, &[1]).interior(), &BTreeSet::from([1]));
        assert!(matches!(
            Simple::from_word(&d, &fw(&[1, 1])),
            Err(Error::NotNonCrossing(_))
        ));
        assert_eq!(simple(&d, &[-2, 1, 2]).interior(), &BTreeSet::from([1]));
        assert!(matches!(
            Simple::from_word(&d, &fw(&[2, 1])),
            Err(Error::NotDivisor { .. })
        ));
    }

    #[test]
    fn complement_examples() {
        let d = model(2);
        assert_eq!(complement(&d, &simple(&d, &[1])).word(), &fw(&[2]));
        assert_eq!(complement(&d, &Simple::identity()).word(), &d.garside());
        let c = complement(&d, &simple(&d, &[-2, 1, 2]));
        assert_eq!(c.word(), &fw(&[-2, -1, 2, 1, 2]));
        assert_eq!(c.word().winding_length(), 1);
    }

    #[test]
    fn phi_is_squared_complement() {
        let d = model(2);
        for letters in [vec![1], vec![2], vec![-2, 1, 2], vec![1, 2]] {
            let s = Simple::from_word(&d, &FreeWord::new(letters)).unwrap();
            assert_eq!(phi(&d, &s), complement(&d, &complement(&d, &s)));
        }
        assert_eq!(phi(&d, &simple(&d, &[1])).word(), &fw(&[-2, 1, 2]));
        assert_eq!(phi(&d, &Simple::identity()), Simple::identity());
        let g = Simple::garside(&d);
        assert_eq!(phi(&d, &g), g);
    }

    #[test]
    fn normalize_examples() {
        let d = model(2);
        let f1 = simple(&d, &[1]);
        let f2 = simple(&d, &[2]);

        let nf = normalize(&d, &[f1.clone(), f2.clone()]).unwrap();
        assert_eq!(nf.factors().len(), 1);
        assert_eq!(nf.factors()[0].word(), &d.garside());

        let nf = normalize(&d, &[f2.clone(), f1.clone()]).unwrap();
        assert_eq!(
            nf.factors().iter().map(|s| s.word().clone()).collect::<Vec<_>>(),
            vec![fw(&[2]), fw(&[1])]
        );

        let nf = normalize(&d, &[f1.clone(), f1.clone()]).unwrap();
        assert_eq!(
            nf.factors().iter().map(|s| s.word().clone()).collect::<Vec<_>>(),
            vec![fw(&[1]), fw(&[1])]
        );

        assert!(normalize(&d, &[]).unwrap().is_identity());
        assert_eq!(normalize(&d, &[]).unwrap().to_string(), "e");
    }

    #[test]
    fn normal_form_is_sound_and_idempotent() {
        let d = model(2);
        let seqs: Vec<Vec<Simple>> = vec![
            vec![simple(&d, &[1, 2, -1]), simple(&d, &[1])],
            vec![simple(&d, &[2]), simple(&d, &[-2, 1, 2]), simple(&d, &[2])],
            vec![simple(&d, &[1]), simple(&d, &[2]), simple(&d, &[1])],
        ];
        for seq in seqs {
            let nf = normalize(&d, &seq).unwrap();
            assert_eq!(nf.product_word(), product_of(&seq));
            let again = normalize(&d, nf.factors()).unwrap();
            assert_eq!(again, nf);
            for pair in nf.factors().windows(2) {
                assert!(is_left_weighted_pair(&d, &pair[0], &pair[1]));
            }
        }
    }

    #[test]
    fn word_problem_examples() {
        let d = model(2);
        let x = vec![simple(&d, &[1, 2, -1]), simple(&d, &[1])];
        let y = vec![simple(&d, &[1]), simple(&d, &[2])];
        assert!(monoid_equal(&d, &x, &y));
        let z = vec![simple(&d, &[2]), simple(&d, &[1])];
        assert!(!monoid_equal(&d, &y, &z));
        assert!(monoid_equal(&d, &[], &[]));
    }

    #[test]
    fn divisibility_examples() {
        let d = model(2);
        assert!(simple_divides(&d, &simple(&d, &[1]), &Simple::garside(&d)));
        assert!(simple_divides(&d, &Simple::identity(), &simple(&d, &[2])));
        assert!(!simple_divides(&d, &simple(&d, &[1]), &simple(&d, &[2])));
    }
}
