//! Combinatorial loops in the punctured disk.
//!
//! The model plane has the basepoint to the left of the punctures,
//! the punctures `1..n` bottom to top on a vertical line, and one gate
//! per puncture running rightward. Following a based loop and writing
//! a letter for every gate crossing (positive upward, negative
//! downward) identifies based loops up to homotopy with reduced words;
//! this module realizes a reduced word as a taut curve (minimal
//! self-intersections), tests embeddedness, tightens pairs, decides
//! containment of interiors, and computes the lattice meet and join of
//! divisors of the standard maximal element `f1..fn`.
//!
//! Non-crossing-ness is invariant under conjugation (an embedded
//! representative can be dragged to any base attachment), so
//! embeddability is decided on the cyclic reduction of a word. Whether
//! a non-crossing word divides `f1..fn` is equivalent to having an
//! embedded representative inside a round disk enclosing the
//! punctures, which the cut-disk realization decides directly.

pub(crate) mod diagram;
mod svg;
mod trace;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::Error;
use crate::words::{FreeWord, Rank};

use diagram::{
    based_layout, basepoint_alternates, cyclic_diagram, events_of, mutual_crossings,
    self_crossings, Based, Crossing, Cycle, Event, Germ, Layout, TAIL,
};
use trace::{PairTrace, TraceKind};

/// Longest word accepted by the decorated pair search; pairs of
/// divisors have no such limit.
const MAX_DECORATED_LEN: usize = 16;

/// The canonical punctured-disk geometry for a fixed rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DiskModel {
    rank: Rank,
}

/// Taut realization of a reduced word.
///
/// The minimal self-intersection data lives on the cyclic core of the
/// word (the curve retracts its conjugator tail); the per-gate strand
/// orders describe the canonical realization drawn inside the round
/// disk, which is taut exactly for the divisors of `f1..fn`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TautCurve {
    word: FreeWord,
    rank: Rank,
    /// Per gate: signed crossing count (the winding number around the
    /// puncture).
    windings: Vec<i64>,
    /// Length of the conjugator: the core is `word[tail..len-tail]`.
    conjugator_len: usize,
    /// Crossing arc pairs of the taut core, as positions within the
    /// core; arc `i` runs from core letter `i` to core letter `i+1`
    /// (cyclically).
    self_intersections: Vec<(usize, usize)>,
    /// Per gate: letter positions of the crossings in the disk
    /// realization, from the puncture toward the boundary.
    gate_orders: Vec<Vec<usize>>,
    /// Self-intersection count of the disk realization; zero exactly
    /// when the word divides the maximal element.
    disk_intersections: usize,
}

/// Two taut curves tightened in one diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairDiagram {
    first: TautCurve,
    second: TautCurve,
    /// Per gate: (curve, letter position) from the puncture outward.
    gate_orders: Vec<Vec<(usize, usize)>>,
    /// Transverse crossings as (arc of first, arc of second) pairs,
    /// indexed by the letter arcs of the original words.
    mutual_intersections: Vec<(usize, usize)>,
    /// Whether the two loops cross transversally at the basepoint.
    crossed_at_basepoint: bool,
}

/// Serializable view of a taut curve.
#[derive(Debug, Clone, Serialize)]
pub struct CurveJson {
    pub word: String,
    pub intersections: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub interior: Option<Vec<u32>>,
    pub gate_orders: Vec<Vec<usize>>,
}

struct Merged {
    events: Vec<Vec<Event>>,
    germ_order: Vec<Germ>,
    orders: Vec<Vec<Crossing>>,
    layout: Layout,
}

impl Merged {
    fn build(n: u32, events: Vec<Vec<Event>>) -> Merged {
        let based = Based { cycle: Cycle { n }, curves: &events };
        let orders = based.taut_orders();
        let germ_order = based.taut_germ_order();
        let layout = based_layout(&Cycle { n }, &events, &germ_order, &orders);
        Merged { events, germ_order, orders, layout }
    }

    /// Gate orders with tail crossings dropped and event indices
    /// mapped back to letter positions of the undecorated words.
    fn letter_orders(&self, maps: &[Vec<usize>]) -> Vec<Vec<(usize, usize)>> {
        self.orders[1..]
            .iter()
            .map(|list| list.iter().map(|&(ci, i)| (ci, maps[ci][i])).collect())
            .collect()
    }
}

impl DiskModel {
    pub fn new(rank: Rank) -> Self {
        DiskModel { rank }
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    pub fn n(&self) -> u32 {
        self.rank.get()
    }

    /// The standard maximal non-crossing element, represented by the
    /// boundary circle of the model disk.
    pub fn garside(&self) -> FreeWord {
        FreeWord::garside(self.rank)
    }

    fn assert_alphabet(&self, w: &FreeWord) {
        assert!(
            w.max_index() <= self.n(),
            "word `{w}` uses generators beyond rank {}",
            self.rank
        );
    }

    /// Taut realization of a reduced word. Every reduced word is
    /// realizable; the loop class embeds iff the count comes out zero.
    pub fn realize(&self, w: &FreeWord) -> TautCurve {
        self.assert_alphabet(w);
        let (conjugator, core) = w.cyclic_reduction();
        let cd = cyclic_diagram(self.n(), &events_of(&core));
        let disk = Merged::build(self.n(), vec![events_of(w)]);
        TautCurve {
            word: w.clone(),
            rank: self.rank,
            windings: windings_of(self.n(), &events_of(w)),
            conjugator_len: conjugator.len(),
            self_intersections: cd.crossings,
            gate_orders: disk.orders[1..]
                .iter()
                .map(|list| list.iter().map(|&(_, i)| i).collect())
                .collect(),
            disk_intersections: self_crossings(&disk.layout, 0).len(),
        }
    }

    /// Membership in the non-crossing elements: an embedded positively
    /// oriented representative exists iff the taut core has no
    /// self-intersections and every winding number is 0 or 1.
    pub fn is_noncrossing(&self, w: &FreeWord) -> bool {
        let curve = self.realize(w);
        curve.is_embedded() && curve.windings.iter().all(|&x| x == 0 || x == 1)
    }

    fn require_noncrossing(&self, w: &FreeWord) -> Result<(), Error> {
        if self.is_noncrossing(w) {
            Ok(())
        } else {
            Err(Error::NotNonCrossing(w.to_string()))
        }
    }

    /// True iff `w` divides the standard maximal element, equivalently
    /// iff it has an embedded positively oriented representative
    /// inside the model disk.
    pub fn divides_garside(&self, w: &FreeWord) -> bool {
        self.realize(w).fits_in_disk()
    }

    fn require_divisor(&self, w: &FreeWord) -> Result<(), Error> {
        self.require_noncrossing(w)?;
        if self.divides_garside(w) {
            Ok(())
        } else {
            Err(Error::NotDivisor { word: w.to_string(), garside: self.garside().to_string() })
        }
    }

    /// Tightens two non-crossing loops in one diagram with minimal
    /// mutual intersections. Pairs of divisors tighten inside the
    /// disk; general pairs search over small tail decorations (strands
    /// passing behind the basepoint) and are limited to short words.
    pub fn mutual_tighten(&self, a: &FreeWord, b: &FreeWord) -> Result<PairDiagram, Error> {
        self.require_noncrossing(a)?;
        self.require_noncrossing(b)?;
        let ea = events_of(a);
        let eb = events_of(b);
        let identity = |len: usize| (0..len).collect::<Vec<usize>>();

        if self.divides_garside(a) && self.divides_garside(b) {
            let m = Merged::build(self.n(), vec![ea.clone(), eb.clone()]);
            return Ok(self.pair_from(&m, a, b, &[identity(ea.len()), identity(eb.len())]));
        }

        assert!(
            a.len() <= MAX_DECORATED_LEN && b.len() <= MAX_DECORATED_LEN,
            "mutual tightening of loops that leave the disk is limited to words of at most \
             {MAX_DECORATED_LEN} letters"
        );
        let mut best: Option<(usize, Merged, [Vec<usize>; 2])> = None;
        for (da, map_a) in decorated(&ea, 2) {
            for (db, map_b) in decorated(&eb, 2) {
                let m = Merged::build(self.n(), vec![da.clone(), db.clone()]);
                if !self_crossings(&m.layout, 0).is_empty()
                    || !self_crossings(&m.layout, 1).is_empty()
                {
                    continue;
                }
                let count =
                    mutual_crossings(&m.layout).len() + usize::from(basepoint_alternates(&m.germ_order));
                if best.as_ref().map_or(true, |(c, _, _)| count < *c) {
                    best = Some((count, m, [map_a.clone(), map_b.clone()]));
                }
            }
        }
        let (_, m, maps) =
            best.expect("every non-crossing pair admits an embedded decorated diagram");
        Ok(self.pair_from(&m, a, b, &maps))
    }

    fn pair_from(&self, m: &Merged, a: &FreeWord, b: &FreeWord, maps: &[Vec<usize>]) -> PairDiagram {
        // Map decorated chord indices back to the letter arcs of the
        // original words: chord `i` belongs to the arc following the
        // last real letter before it.
        let arc_map = |events: &[Event], chord: usize| -> usize {
            events[..chord].iter().filter(|ev| ev.gate != TAIL).count()
        };
        let witnesses: Vec<(usize, usize)> = mutual_crossings(&m.layout)
            .into_iter()
            .map(|(i, j)| (arc_map(&m.events[0], i), arc_map(&m.events[1], j)))
            .collect();
        PairDiagram {
            first: self.realize(a),
            second: self.realize(b),
            gate_orders: m.letter_orders(maps),
            mutual_intersections: witnesses,
            crossed_at_basepoint: basepoint_alternates(&m.germ_order),
        }
    }

    /// Containment of interiors in the partial order on non-crossing
    /// elements: checked on the tight pair as absence of mutual
    /// intersections plus inclusion of the enclosed puncture sets.
    pub fn contains(&self, big: &FreeWord, small: &FreeWord) -> Result<bool, Error> {
        self.require_noncrossing(big)?;
        self.require_noncrossing(small)?;
        if small.is_empty() {
            return Ok(true);
        }
        let (hb, hs) = (big.winding_length(), small.winding_length());
        if hs > hb {
            return Ok(false);
        }
        if hs == hb {
            // Nested loops of equal height bound an empty annulus and
            // are isotopic.
            return Ok(big == small);
        }
        let pair = self.mutual_tighten(big, small)?;
        if pair.mutual_intersection_count() > 0 {
            return Ok(false);
        }
        let big_int = pair.first.interior().expect("non-crossing curve is embedded");
        let small_int = pair.second.interior().expect("non-crossing curve is embedded");
        Ok(small_int.is_subset(&big_int))
    }

    /// Least upper bound in the divisor lattice, traced as the outer
    /// boundary of the union of the interiors.
    pub fn nc_join(&self, a: &FreeWord, b: &FreeWord) -> Result<FreeWord, Error> {
        self.require_divisor(a)?;
        self.require_divisor(b)?;
        if a.is_empty() {
            return Ok(b.clone());
        }
        if b.is_empty() || a == b {
            return Ok(a.clone());
        }
        let m = Merged::build(self.n(), vec![events_of(a), events_of(b)]);
        let tracer = PairTrace::new(&m.layout, &m.events, &m.germ_order, &mutual_crossings(&m.layout));
        let word = FreeWord::new(tracer.run(TraceKind::Join));
        self.certify_traced("join", a, b, &word);
        Ok(word)
    }

    /// Greatest lower bound in the divisor lattice, traced as the
    /// boundary of the basepoint component of the intersection of the
    /// interiors.
    pub fn nc_meet(&self, a: &FreeWord, b: &FreeWord) -> Result<FreeWord, Error> {
        self.require_divisor(a)?;
        self.require_divisor(b)?;
        if a.is_empty() || b.is_empty() {
            return Ok(FreeWord::identity());
        }
        if a == b {
            return Ok(a.clone());
        }
        let m = Merged::build(self.n(), vec![events_of(a), events_of(b)]);
        let tracer = PairTrace::new(&m.layout, &m.events, &m.germ_order, &mutual_crossings(&m.layout));
        if !tracer.meet_wedge_nonempty() {
            return Ok(FreeWord::identity());
        }
        let word = FreeWord::new(tracer.run(TraceKind::Meet));
        self.certify_traced("meet", a, b, &word);
        Ok(word)
    }

    fn certify_traced(&self, what: &str, a: &FreeWord, b: &FreeWord, out: &FreeWord) {
        assert!(
            self.is_noncrossing(out),
            "engine error: traced {what} of `{a}` and `{b}` gave the crossing word `{out}`"
        );
        debug_assert!(
            self.divides_garside(out),
            "engine error: traced {what} of `{a}` and `{b}` left the divisor set: `{out}`"
        );
    }

    /// SVG rendering of the disk realization of one curve or of a
    /// non-crossing pair.
    pub fn render_svg(&self, words: &[&FreeWord]) -> Result<String, Error> {
        assert!(!words.is_empty() && words.len() <= 2, "render expects one or two words");
        for w in words {
            self.assert_alphabet(w);
        }
        if words.len() == 2 {
            self.require_noncrossing(words[0])?;
            self.require_noncrossing(words[1])?;
        }
        let m = Merged::build(self.n(), words.iter().map(|w| events_of(w)).collect());
        Ok(svg::render(self, &m.events, &m.germ_order, &m.orders))
    }
}

fn windings_of(n: u32, events: &[Event]) -> Vec<i64> {
    let mut w = vec![0i64; n as usize];
    for ev in events {
        if ev.gate != TAIL {
            w[ev.gate as usize - 1] += if ev.up { 1 } else { -1 };
        }
    }
    w
}

/// All ways to insert at most `cap` tail crossings into the arcs of an
/// event list, each arc taking at most one. Returns the decorated
/// events with a map from decorated indices to original positions
/// (tail events map to the following letter's position).
fn decorated(events: &[Event], cap: usize) -> Vec<(Vec<Event>, Vec<usize>)> {
    let slots = events.len() + 1;
    let mut picks: Vec<Vec<(usize, bool)>> = vec![Vec::new()];
    for a in 0..slots {
        for dir in [true, false] {
            picks.push(vec![(a, dir)]);
            if cap >= 2 {
                for b in a + 1..slots {
                    for dir2 in [true, false] {
                        picks.push(vec![(a, dir), (b, dir2)]);
                    }
                }
            }
        }
    }
    picks
        .into_iter()
        .map(|deco| {
            let mut out = Vec::with_capacity(events.len() + deco.len());
            let mut map = Vec::with_capacity(events.len() + deco.len());
            for (i, &ev) in events.iter().enumerate() {
                if let Some(&(_, dir)) = deco.iter().find(|&&(slot, _)| slot == i) {
                    out.push(Event { gate: TAIL, up: dir });
                    map.push(i);
                }
                out.push(ev);
                map.push(i);
            }
            if let Some(&(_, dir)) = deco.iter().find(|&&(slot, _)| slot == events.len()) {
                out.push(Event { gate: TAIL, up: dir });
                map.push(events.len().saturating_sub(1));
            }
            (out, map)
        })
        .collect()
}

impl TautCurve {
    pub fn word(&self) -> &FreeWord {
        &self.word
    }

    pub fn rank(&self) -> Rank {
        self.rank
    }

    /// Per gate: letter positions of the crossings in the disk
    /// realization, from the puncture toward the boundary.
    pub fn gate_orders(&self) -> &[Vec<usize>] {
        &self.gate_orders
    }

    pub fn windings(&self) -> &[i64] {
        &self.windings
    }

    /// Minimal self-intersection count of the loop class.
    pub fn self_intersection_count(&self) -> usize {
        self.self_intersections.len()
    }

    /// Crossing arc pairs on the cyclic core of the word; core letter
    /// `i` is word letter `i + core_offset()`.
    pub fn self_intersection_witnesses(&self) -> &[(usize, usize)] {
        &self.self_intersections
    }

    /// Length of the conjugator tail retracted by the taut
    /// realization.
    pub fn core_offset(&self) -> usize {
        self.conjugator_len
    }

    pub fn is_embedded(&self) -> bool {
        self.self_intersections.is_empty()
    }

    /// Whether the canonical disk realization is embedded; for words
    /// with winding numbers in {0,1} this says the word divides the
    /// maximal element.
    pub fn fits_in_disk(&self) -> bool {
        self.disk_intersections == 0 && self.windings.iter().all(|&x| x == 0 || x == 1)
    }

    /// Punctures enclosed by an embedded curve: those with winding
    /// number one.
    pub fn interior(&self) -> Result<BTreeSet<u32>, Error> {
        if !self.is_embedded() {
            return Err(Error::NotEmbedded {
                word: self.word.to_string(),
                intersections: self.self_intersections.len(),
            });
        }
        Ok(self
            .windings
            .iter()
            .enumerate()
            .filter(|&(_, &w)| w == 1)
            .map(|(i, _)| i as u32 + 1)
            .collect())
    }

    pub fn to_json(&self) -> CurveJson {
        CurveJson {
            word: self.word.to_string(),
            intersections: self.self_intersections.len(),
            interior: self.interior().ok().map(|s| s.into_iter().collect()),
            gate_orders: self.gate_orders.clone(),
        }
    }
}

impl PairDiagram {
    pub fn first(&self) -> &TautCurve {
        &self.first
    }

    pub fn second(&self) -> &TautCurve {
        &self.second
    }

    pub fn gate_orders(&self) -> &[Vec<(usize, usize)>] {
        &self.gate_orders
    }

    /// Minimal number of transverse intersections of the pair, the
    /// basepoint included.
    pub fn mutual_intersection_count(&self) -> usize {
        self.mutual_intersections.len() + usize::from(self.crossed_at_basepoint)
    }

    pub fn mutual_witnesses(&self) -> &[(usize, usize)] {
        &self.mutual_intersections
    }

    pub fn crossed_at_basepoint(&self) -> bool {
        self.crossed_at_basepoint
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fw(letters: &[i32]) -> FreeWord {
        FreeWord::new(letters.iter().copied())
    }

    fn model(n: u32) -> DiskModel {
        DiskModel::new(Rank::new(n).unwrap())
    }

    #[test]
    fn generators_are_embedded_loops() {
        let d = model(4);
        let c = d.realize(&fw(&[1]));
        assert!(c.is_embedded());
        assert!(c.fits_in_disk());
        assert_eq!(c.interior().unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn full_circle_encloses_everything() {
        let d = model(4);
        let c = d.realize(&d.garside());
        assert!(c.is_embedded());
        assert!(c.fits_in_disk());
        assert_eq!(c.interior().unwrap(), BTreeSet::from([1, 2, 3, 4]));
    }

    #[test]
    fn figure_word_self_intersects() {
        // The loop f1.f2.f3^-1.f2^-1 cannot be drawn embedded.
        let d = model(4);
        let c = d.realize(&fw(&[1, 2, -3, -2]));
        assert!(c.self_intersection_count() >= 1);
        assert!(!d.is_noncrossing(&fw(&[1, 2, -3, -2])));
    }

    #[test]
    fn conjugate_of_generator_is_noncrossing() {
        let d = model(2);
        let w = fw(&[-2, 1, 2]);
        assert!(d.is_noncrossing(&w));
        assert!(d.divides_garside(&w));
        let c = d.realize(&w);
        assert_eq!(c.interior().unwrap(), BTreeSet::from([1]));
    }

    #[test]
    fn both_maximal_elements_are_noncrossing() {
        // The reversed product is non-crossing but does not fit inside
        // the disk bounded by f1.f2.
        let d = model(2);
        assert!(d.is_noncrossing(&fw(&[2, 1])));
        assert!(!d.divides_garside(&fw(&[2, 1])));
        assert!(d.divides_garside(&fw(&[1, 2])));
        // Same for the other conjugate of a generator.
        assert!(d.is_noncrossing(&fw(&[2, 1, -2])));
        assert!(!d.divides_garside(&fw(&[2, 1, -2])));
        assert!(d.divides_garside(&fw(&[-2, 1, 2])));
    }

    #[test]
    fn squares_and_commutators_are_crossing() {
        let d = model(2);
        assert!(!d.is_noncrossing(&fw(&[1, 1])));
        assert!(!d.is_noncrossing(&fw(&[1, 2, -1, -2])));
        assert!(!d.is_noncrossing(&fw(&[-1])));
        assert!(!d.is_noncrossing(&fw(&[2, 1, 2, 1])));
    }

    #[test]
    fn empty_word_is_the_bottom() {
        let d = model(3);
        let e = FreeWord::identity();
        assert!(d.is_noncrossing(&e));
        assert_eq!(d.realize(&e).interior().unwrap(), BTreeSet::new());
        assert!(d.contains(&fw(&[1]), &e).unwrap());
        assert!(d.contains(&e, &e).unwrap());
        assert!(!d.contains(&e, &fw(&[1])).unwrap());
    }

    #[test]
    fn interior_requires_embeddedness() {
        let d = model(2);
        let c = d.realize(&fw(&[1, 1]));
        assert!(matches!(c.interior(), Err(Error::NotEmbedded { .. })));
    }

    #[test]
    fn disjoint_generators_do_not_intersect() {
        let d = model(2);
        let pair = d.mutual_tighten(&fw(&[1]), &fw(&[2])).unwrap();
        assert_eq!(pair.mutual_intersection_count(), 0);
    }

    #[test]
    fn identical_curves_do_not_intersect() {
        let d = model(2);
        let w = fw(&[-2, 1, 2]);
        let pair = d.mutual_tighten(&w, &w).unwrap();
        assert_eq!(pair.mutual_intersection_count(), 0);
    }

    #[test]
    fn the_two_maximal_loops_cross() {
        let d = model(2);
        let pair = d.mutual_tighten(&fw(&[1, 2]), &fw(&[2, 1])).unwrap();
        assert!(pair.mutual_intersection_count() >= 2);
        assert!(!d.contains(&fw(&[1, 2]), &fw(&[2, 1])).unwrap());
        assert!(!d.contains(&fw(&[2, 1]), &fw(&[1, 2])).unwrap());
    }

    #[test]
    fn containment_examples() {
        let d = model(2);
        assert!(d.contains(&fw(&[1, 2]), &fw(&[2])).unwrap());
        assert!(d.contains(&fw(&[1, 2]), &fw(&[1])).unwrap());
        assert!(d.contains(&fw(&[1, 2]), &fw(&[1, 2])).unwrap());
        assert!(!d.contains(&fw(&[1]), &fw(&[2])).unwrap());
        assert!(!d.contains(&fw(&[1]), &fw(&[1, 2, 1, -2, -1])).unwrap());
        assert!(d.contains(&fw(&[1, 2]), &fw(&[1, 2, -1])).unwrap());
    }

    #[test]
    fn meet_and_join_small_cases() {
        let d = model(2);
        let (f1, f2, g) = (fw(&[1]), fw(&[2]), fw(&[1, 2]));
        assert_eq!(d.nc_join(&f1, &f2).unwrap(), g);
        assert_eq!(d.nc_meet(&f1, &f2).unwrap(), FreeWord::identity());
        let conj = fw(&[1, 2, -1]);
        assert_eq!(d.nc_join(&f1, &conj).unwrap(), g);
        assert_eq!(d.nc_meet(&f1, &conj).unwrap(), FreeWord::identity());
        assert_eq!(d.nc_join(&f1, &f1).unwrap(), f1);
        assert_eq!(d.nc_meet(&f1, &f1).unwrap(), f1);
        assert_eq!(d.nc_join(&f1, &FreeWord::identity()).unwrap(), f1);
        assert_eq!(d.nc_meet(&g, &conj).unwrap(), conj);
    }

    #[test]
    fn meet_join_reject_bad_inputs() {
        let d = model(2);
        assert!(matches!(
            d.nc_join(&fw(&[2, 1]), &fw(&[1])),
            Err(Error::NotDivisor { .. })
        ));
        assert!(matches!(
            d.nc_meet(&fw(&[1, 1]), &fw(&[1])),
            Err(Error::NotNonCrossing(_))
        ));
    }

    #[test]
    fn rank_one_divisors() {
        let d = model(1);
        let f1 = fw(&[1]);
        let e = FreeWord::identity();
        assert!(d.is_noncrossing(&f1));
        assert!(d.contains(&f1, &e).unwrap());
        assert_eq!(d.nc_meet(&f1, &f1).unwrap(), f1);
        assert_eq!(d.nc_join(&e, &f1).unwrap(), f1);
        assert!(!d.is_noncrossing(&fw(&[1, 1])));
    }

    #[test]
    fn gate_orders_report_letter_positions() {
        let d = model(2);
        let c = d.realize(&fw(&[-2, 1, 2]));
        // Gate 2 is crossed by letters 0 and 2; the downward first
        // letter hugs the puncture.
        assert_eq!(c.gate_orders()[1], vec![0, 2]);
        assert_eq!(c.gate_orders()[0], vec![1]);
    }
}
