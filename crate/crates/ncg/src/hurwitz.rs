//! Braid-group action on tuples of group elements.
//!
//! The generator move conjugates one entry past its neighbor and swaps
//! them, preserving the tuple product. Braids are handled purely as
//! words acting on tuples; braid-element equality is never decided
//! directly, tests compare braids through their action.

use std::collections::BTreeSet;
use std::fmt;

use crate::curves::DiskModel;
use crate::error::Error;
use crate::words::{is_braid_reflection, CoxWord, FreeWord, GroupWord, Rank};

/// Freely reduced word over the braid generators and their inverses.
/// Braid relations are not applied.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BraidWord {
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new<I: IntoIterator<Item = i32>>(letters: I) -> Self {
        let mut out: Vec<i32> = Vec::new();
        for x in letters {
            assert!(x != 0, "braid letters are nonzero signed indices");
            if out.last() == Some(&-x) {
                out.pop();
            } else {
                out.push(x);
            }
        }
        BraidWord { letters: out }
    }

    pub fn identity() -> Self {
        BraidWord { letters: Vec::new() }
    }

    pub fn generator(i: u32) -> Self {
        assert!(i >= 1);
        BraidWord { letters: vec![i as i32] }
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
        BraidWord { letters: self.letters.iter().rev().map(|x| -x).collect() }
    }

    pub fn concat(&self, rhs: &BraidWord) -> Self {
        BraidWord::new(self.letters.iter().chain(rhs.letters.iter()).copied())
    }
}

impl fmt::Display for BraidWord {
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
                write!(f, "b{x}")?;
            } else {
                write!(f, "b{}^-1", -x)?;
            }
        }
        Ok(())
    }
}

pub type FreeTuple = Vec<FreeWord>;
pub type CoxTuple = Vec<CoxWord>;

/// The tuple `(f1, ..., fn)`.
pub fn base_free_tuple(n: Rank) -> FreeTuple {
    (1..=n.get()).map(FreeWord::generator).collect()
}

/// The tuple `(s1, ..., sn)`.
pub fn base_cox_tuple(n: Rank) -> CoxTuple {
    (1..=n.get()).map(CoxWord::generator).collect()
}

/// One generator move: positive `i` conjugates entry `i+1` by entry `i`
/// and swaps; negative is the inverse move.
fn apply_generator<W: GroupWord>(letter: i32, t: &mut [W]) -> Result<(), Error> {
    let i = letter.unsigned_abs() as usize;
    if i == 0 || i >= t.len() {
        return Err(Error::IndexOutOfRange { index: letter, size: t.len() });
    }
    let (a, b) = (t[i - 1].clone(), t[i].clone());
    if letter > 0 {
        t[i - 1] = a.mul(&b).mul(&a.inverse());
        t[i] = a;
    } else {
        t[i - 1] = b.clone();
        t[i] = b.inverse().mul(&a).mul(&b);
    }
    Ok(())
}

/// Left action of a braid word: the last letter acts first.
pub fn hurwitz_apply<W: GroupWord>(beta: &BraidWord, tuple: &[W]) -> Result<Vec<W>, Error> {
    let mut t = tuple.to_vec();
    for &letter in beta.letters().iter().rev() {
        apply_generator(letter, &mut t)?;
    }
    Ok(t)
}

/// Membership in the reduced reflection decompositions of the Coxeter
/// element: all entries are reflections and the product is `s1..sn`.
pub fn is_red_t(model: &DiskModel, t: &[CoxWord]) -> bool {
    t.len() == model.n() as usize
        && t.iter().all(|w| w.is_reflection())
        && product(t) == CoxWord::coxeter_element(model.rank())
}

/// Membership in the reduced braid-reflection decompositions of the
/// maximal element: all entries are braid reflections and the product
/// is `f1..fn`.
pub fn is_red_r(model: &DiskModel, t: &[FreeWord]) -> bool {
    t.len() == model.n() as usize
        && t.iter().all(|w| is_braid_reflection(model.rank(), w))
        && product(t) == model.garside()
}

fn product<W: GroupWord>(t: &[W]) -> W {
    t.iter().fold(W::identity(), |acc, w| acc.mul(w))
}

fn total_length(t: &[CoxWord]) -> usize {
    t.iter().map(|w| w.len()).sum()
}

/// Constructive descent: a braid word whose action takes the base tuple
/// `(s1..sn)` to `t`. Scans the moves `b1, b1^-1, b2, b2^-1, ...` in a
/// fixed order and applies the first strictly length-reducing one, so
/// the output is deterministic; a strictly reducing move exists for any
/// reduced decomposition longer than the base.
pub fn descend(model: &DiskModel, t: &[CoxWord]) -> Result<BraidWord, Error> {
    let n = model.n() as usize;
    if t.len() != n {
        return Err(Error::NotReduced(format!(
            "expected a {n}-tuple, got {} entries",
            t.len()
        )));
    }
    let base = base_cox_tuple(model.rank());
    let mut cur = t.to_vec();
    let mut applied: Vec<i32> = Vec::new();
    loop {
        if cur == base {
            // The applied moves send t to the base, so their inverses in
            // application order send the base back to t.
            return Ok(BraidWord::new(applied.iter().map(|&x| -x)));
        }
        let len = total_length(&cur);
        let mut progressed = false;
        'scan: for i in 1..n as i32 {
            for letter in [i, -i] {
                let mut next = cur.clone();
                apply_generator(letter, &mut next).expect("index in range");
                if total_length(&next) < len {
                    cur = next;
                    applied.push(letter);
                    progressed = true;
                    break 'scan;
                }
            }
        }
        if !progressed {
            return Err(Error::NotReduced(format!(
                "no length-reducing move from ({})",
                cur.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
            )));
        }
    }
}

/// The unique preimage of `t` under entrywise projection, computed by
/// transporting the base free tuple along the descent braid.
pub fn lift_tuple(model: &DiskModel, t: &[CoxWord]) -> Result<FreeTuple, Error> {
    let beta = descend(model, t)?;
    hurwitz_apply(&beta, &base_free_tuple(model.rank()))
}

/// Default search radius for reflection lifting.
pub const DEFAULT_LIFT_RADIUS: usize = 8;

/// Lifts a reflection through the projection by completing it to a
/// reduced decomposition of the Coxeter element: breadth-first search
/// of the orbit of the base tuple until some entry equals `t`, then
/// transport to the first slot and lift the whole tuple. Failure within
/// the radius signals either non-membership or an insufficient radius.
pub fn lift_reflection(
    model: &DiskModel,
    t: &CoxWord,
    max_radius: usize,
) -> Result<FreeWord, Error> {
    let n = model.n() as usize;
    let base = base_cox_tuple(model.rank());
    let mut seen: BTreeSet<CoxTuple> = BTreeSet::new();
    seen.insert(base.clone());
    let mut frontier = vec![base];
    for _radius in 0..=max_radius {
        for tuple in &frontier {
            if let Some(pos) = tuple.iter().position(|w| w == t) {
                let mut moved = tuple.clone();
                // b_j^-1 transports entry j+1 unchanged to slot j.
                for j in (1..=pos).rev() {
                    apply_generator(-(j as i32), &mut moved).expect("index in range");
                }
                debug_assert_eq!(&moved[0], t);
                let lifted = lift_tuple(model, &moved)?;
                return Ok(lifted.into_iter().next().expect("rank is positive"));
            }
        }
        let mut next = Vec::new();
        for tuple in &frontier {
            for i in 1..n as i32 {
                for letter in [i, -i] {
                    let mut image = tuple.clone();
                    apply_generator(letter, &mut image).expect("index in range");
                    if seen.insert(image.clone()) {
                        next.push(image);
                    }
                }
            }
        }
        frontier = next;
    }
    Err(Error::NotInTc { word: t.to_string(), radius: max_radius })
}

/// Deduplicated closure of a tuple under the generator moves, up to the
/// given braid-word length.
pub fn orbit_ball<W: GroupWord>(tuple: &[W], radius: usize) -> BTreeSet<Vec<W>> {
    let mut seen: BTreeSet<Vec<W>> = BTreeSet::new();
    seen.insert(tuple.to_vec());
    let mut frontier = vec![tuple.to_vec()];
    let moves: Vec<i32> = (1..tuple.len() as i32).flat_map(|i| [i, -i]).collect();
    for _ in 0..radius {
        let mut next = Vec::new();
        for t in &frontier {
            for &letter in &moves {
                let mut image = t.clone();
                apply_generator(letter, &mut image).expect("index in range");
                if seen.insert(image.clone()) {
                    next.push(image);
                }
            }
        }
        frontier = next;
    }
    seen
}

/// Prefix products `(e, t1, t1 t2, ..., t1..tn)` of a reduced
/// decomposition: the maximal chain of divisors it spans.
pub fn tuple_to_chain(model: &DiskModel, t: &[FreeWord]) -> Result<Vec<FreeWord>, Error> {
    if !is_red_r(model, t) {
        return Err(Error::NotReduced(format!(
            "({}) is not a reduced braid-reflection decomposition",
            t.iter().map(|w| w.to_string()).collect::<Vec<_>>().join(", ")
        )));
    }
    let mut chain = vec![FreeWord::identity()];
    let mut acc = FreeWord::identity();
    for w in t {
        acc = GroupWord::mul(&acc, w);
        chain.push(acc.clone());
    }
    Ok(chain)
}

/// Consecutive quotients of a chain; inverse of [`tuple_to_chain`].
pub fn chain_to_tuple(chain: &[FreeWord]) -> FreeTuple {
    chain
        .windows(2)
        .map(|w| GroupWord::mul(&w[0].inverse(), &w[1]))
        .collect()
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

    fn model(n: u32) -> DiskModel {
        DiskModel::new(Rank::new(n).unwrap())
    }

    #[test]
    fn generator_rule() {
        let t = vec![fw(&[1]), fw(&[2])];
        let up = hurwitz_apply(&BraidWord::new([1]), &t).unwrap();
        assert_eq!(up, vec![fw(&[1, 2, -1]), fw(&[1])]);
        let down = hurwitz_apply(&BraidWord::new([-1]), &t).unwrap();
        assert_eq!(down, vec![fw(&[2]), fw(&[-2, 1, 2])]);
        // Inverse moves cancel.
        assert_eq!(hurwitz_apply(&BraidWord::new([-1]), &up).unwrap(), t);
    }

    #[test]
    fn braid_relation_is_respected() {
        let t = vec![fw(&[1]), fw(&[2]), fw(&[3])];
        let lhs = hurwitz_apply(&BraidWord::new([1, 2, 1]), &t).unwrap();
        let rhs = hurwitz_apply(&BraidWord::new([2, 1, 2]), &t).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn action_is_a_left_action() {
        let t = vec![fw(&[1, 2]), fw(&[-1]), fw(&[3, 3])];
        let b1 = BraidWord::new([2, -1]);
        let b2 = BraidWord::new([1, 1, -2]);
        let composed = hurwitz_apply(&b1.concat(&b2), &t).unwrap();
        let stepwise = hurwitz_apply(&b1, &hurwitz_apply(&b2, &t).unwrap()).unwrap();
        assert_eq!(composed, stepwise);
    }

    #[test]
    fn index_out_of_range_is_reported() {
        let t = vec![fw(&[1]), fw(&[2])];
        assert!(matches!(
            hurwitz_apply(&BraidWord::new([2]), &t),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn red_t_examples() {
        let d = model(2);
        assert!(is_red_t(&d, &[cw(&[1]), cw(&[2])]));
        assert!(is_red_t(&d, &[cw(&[1, 2, 1]), cw(&[1])]));
        assert!(!is_red_t(&d, &[cw(&[1]), cw(&[1])]));
    }

    #[test]
    fn red_r_examples() {
        let d = model(2);
        assert!(is_red_r(&d, &[fw(&[1]), fw(&[2])]));
        assert!(is_red_r(&d, &[fw(&[1, 2, -1]), fw(&[1])]));
        assert!(!is_red_r(&d, &[fw(&[1]), fw(&[-2])]));
    }

    #[test]
    fn descend_examples() {
        let d = model(2);
        assert_eq!(descend(&d, &base_cox_tuple(d.rank())).unwrap(), BraidWord::identity());

        let t = vec![cw(&[1, 2, 1]), cw(&[1])];
        let beta = descend(&d, &t).unwrap();
        assert_eq!(hurwitz_apply(&beta, &base_cox_tuple(d.rank())).unwrap(), t);

        let t = vec![cw(&[2]), cw(&[2, 1, 2])];
        let beta = descend(&d, &t).unwrap();
        assert_eq!(beta, BraidWord::new([-1]));
        assert_eq!(hurwitz_apply(&beta, &base_cox_tuple(d.rank())).unwrap(), t);
    }

    #[test]
    fn descend_rejects_non_reduced() {
        let d = model(2);
        assert!(matches!(
            descend(&d, &[cw(&[1]), cw(&[1])]),
            Err(Error::NotReduced(_))
        ));
    }

    #[test]
    fn lift_examples() {
        let d = model(2);
        assert_eq!(
            lift_tuple(&d, &[cw(&[1]), cw(&[2])]).unwrap(),
            vec![fw(&[1]), fw(&[2])]
        );
        assert_eq!(
            lift_tuple(&d, &[cw(&[2]), cw(&[2, 1, 2])]).unwrap(),
            vec![fw(&[2]), fw(&[-2, 1, 2])]
        );
        assert_eq!(
            lift_tuple(&d, &[cw(&[1, 2, 1]), cw(&[1])]).unwrap(),
            vec![fw(&[1, 2, -1]), fw(&[1])]
        );
    }

    #[test]
    fn lift_reflection_examples() {
        let d = model(2);
        assert_eq!(lift_reflection(&d, &cw(&[1]), 4).unwrap(), fw(&[1]));
        // The naive letterwise lift f2.f1.f2^-1 projects to the same
        // reflection but is not the non-crossing one.
        assert_eq!(lift_reflection(&d, &cw(&[2, 1, 2]), 4).unwrap(), fw(&[-2, 1, 2]));
        assert_eq!(lift_reflection(&d, &cw(&[1, 2, 1]), 4).unwrap(), fw(&[1, 2, -1]));
        assert!(matches!(
            lift_reflection(&d, &cw(&[1, 2]), 3),
            Err(Error::NotInTc { .. })
        ));
    }

    #[test]
    fn orbit_ball_examples() {
        let t = vec![fw(&[1]), fw(&[2])];
        let b0 = orbit_ball(&t, 0);
        assert_eq!(b0.len(), 1);
        let b1 = orbit_ball(&t, 1);
        let expected: BTreeSet<FreeTuple> = [
            vec![fw(&[1]), fw(&[2])],
            vec![fw(&[1, 2, -1]), fw(&[1])],
            vec![fw(&[2]), fw(&[-2, 1, 2])],
        ]
        .into_iter()
        .collect();
        assert_eq!(b1, expected);

        let s = vec![cw(&[1]), cw(&[2])];
        let sb1 = orbit_ball(&s, 1);
        let expected: BTreeSet<CoxTuple> = [
            vec![cw(&[1]), cw(&[2])],
            vec![cw(&[1, 2, 1]), cw(&[1])],
            vec![cw(&[2]), cw(&[2, 1, 2])],
        ]
        .into_iter()
        .collect();
        assert_eq!(sb1, expected);
    }

    #[test]
    fn chain_examples() {
        let d = model(2);
        let chain = tuple_to_chain(&d, &[fw(&[1]), fw(&[2])]).unwrap();
        assert_eq!(chain, vec![FreeWord::identity(), fw(&[1]), fw(&[1, 2])]);
        assert_eq!(chain_to_tuple(&chain), vec![fw(&[1]), fw(&[2])]);

        let chain = tuple_to_chain(&d, &[fw(&[1, 2, -1]), fw(&[1])]).unwrap();
        assert_eq!(chain, vec![FreeWord::identity(), fw(&[1, 2, -1]), fw(&[1, 2])]);
    }
}
