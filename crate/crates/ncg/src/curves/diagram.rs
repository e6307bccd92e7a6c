//! Chord-diagram engine behind taut curves.
//!
//! The ambient is the punctured plane. Two cut systems are used:
//!
//! * The **cyclic model** cuts along the `n` gates only (disjoint arcs
//!   running from each puncture rightward out of the picture). Its cut
//!   surface is a disk, free loops become cyclic sequences of chords,
//!   and minimal self-intersection counts of free homotopy classes are
//!   computed here. Since non-crossing-ness is invariant under
//!   conjugation, embeddability of a based class is decided on its
//!   cyclic reduction in this model.
//!
//! * The **based model** additionally cuts along a silent *tail*
//!   running from the basepoint leftward out of the picture. The cut
//!   surface is again a disk with the basepoint as a slit tip; based
//!   loops become chord sequences between the tip and the gate sides.
//!   Tail crossings carry no letter: a strand crossing the tail passes
//!   behind the basepoint. Words whose loops fit inside a round disk
//!   around the punctures (exactly the divisors of `f1..fn`) need no
//!   tail crossings; general pairs are tightened by searching over
//!   small tail decorations.
//!
//! In both models the only isotopy freedom is the order of crossings
//! along each cut (and of the loop ends around the basepoint tip). The
//! taut order compares, for each pair of strands through a cut, their
//! continuation sequences: at the first event where the continuations
//! diverge, the nesting of the two target items in the boundary cycle
//! of the cut surface decides which strand runs closer to the inner
//! end. A continuation walked against the curve direction flips every
//! crossing it meets. With orders fixed, two chords intersect exactly
//! when their endpoints interleave in the boundary cycle, so counting
//! intersections is counting interleaved pairs.

use crate::words::FreeWord;

/// Marker index for the silent basepoint tail.
pub(crate) const TAIL: u32 = 0;

/// One cut crossing of an oriented loop. `gate >= 1` is a real gate
/// (the letter `f_gate^{±1}`); `gate == TAIL` is a silent tail
/// crossing. For gates `up` is the positive letter; for the tail it
/// means crossing from the south side to the north side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Event {
    pub gate: u32,
    pub up: bool,
}

pub(crate) fn events_of(word: &FreeWord) -> Vec<Event> {
    word.letters()
        .iter()
        .map(|&x| Event { gate: x.unsigned_abs(), up: x > 0 })
        .collect()
}

/// Boundary items of the based cut surface, in counterclockwise order:
///
/// ```text
/// [tip germs] [tail south] [g1 low] [g1 high] ... [gn low] [gn high] [tail north]
/// ```
///
/// The low side of gate `j` is walked from its outer end to the
/// puncture, the high side back out; the tail south side is walked
/// from the tip outward, the north side back in. Items of the cyclic
/// model are the same with the tip and tail unused.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Cycle {
    pub n: u32,
}

pub(crate) const X0: u32 = 0;

impl Cycle {
    pub fn tail_south(&self) -> u32 {
        1
    }

    pub fn tail_north(&self) -> u32 {
        2 * self.n + 2
    }

    pub fn low(&self, gate: u32) -> u32 {
        2 * gate
    }

    pub fn high(&self, gate: u32) -> u32 {
        2 * gate + 1
    }

    pub fn len(&self) -> u32 {
        2 * self.n + 3
    }

    pub fn opposite(&self, item: u32) -> u32 {
        debug_assert_ne!(item, X0);
        if item == self.tail_south() {
            self.tail_north()
        } else if item == self.tail_north() {
            self.tail_south()
        } else if item % 2 == 0 {
            item + 1
        } else {
            item - 1
        }
    }

    /// The boundary point hit first when traversing the event in its
    /// own direction: an upward gate crossing comes from below and
    /// hits the low side; a northward tail crossing hits the south
    /// side.
    pub fn hit(&self, ev: Event) -> u32 {
        if ev.gate == TAIL {
            if ev.up {
                self.tail_south()
            } else {
                self.tail_north()
            }
        } else if ev.up {
            self.low(ev.gate)
        } else {
            self.high(ev.gate)
        }
    }

    pub fn exit(&self, ev: Event) -> u32 {
        self.opposite(self.hit(ev))
    }

    /// Side of the cut whose counterclockwise order runs inner-end
    /// first: the high side of a gate, the south side of the tail.
    pub fn inner_first_side(&self, gate: u32) -> u32 {
        if gate == TAIL {
            self.tail_south()
        } else {
            self.high(gate)
        }
    }

    pub fn inner_last_side(&self, gate: u32) -> u32 {
        self.opposite(self.inner_first_side(gate))
    }

    /// Position of `item` in the cycle cut just after `din`; larger is
    /// later counterclockwise.
    pub fn pos_from(&self, item: u32, din: u32) -> u32 {
        (item + self.len() - din - 1) % self.len()
    }
}

/// Items through which the walk leaves its current sheet, following
/// the curve forward from event `from` (inclusive) to the end, then
/// the basepoint. A forward walk leaves through the side the event
/// hits.
fn based_walk_fwd(cycle: &Cycle, events: &[Event], from: usize) -> Vec<u32> {
    let mut items: Vec<u32> = events[from..].iter().map(|&ev| cycle.hit(ev)).collect();
    items.push(X0);
    items
}

/// Same, running against the curve from event `upto` (exclusive) back
/// to the start; walking against the curve flips every crossing, so
/// the walk leaves through the event's exit side.
fn based_walk_bwd(cycle: &Cycle, events: &[Event], upto: usize) -> Vec<u32> {
    let mut items: Vec<u32> = events[..upto].iter().rev().map(|&ev| cycle.exit(ev)).collect();
    items.push(X0);
    items
}

/// Decides which of two parallel walks entering through `start_door`
/// sits counterclockwise-first within that door interval, or `None`
/// when the walks agree throughout.
///
/// Two disjoint chords leaving a common boundary interval connect to
/// targets in reversed cyclic order, so at the first divergence the
/// walk with the later target (in the cycle cut after the current
/// door) is the counterclockwise-first one. While the walks share an
/// exit the comparison moves to the next sheet unchanged: crossing a
/// cut flips the side and traversing the sheet flips the nesting,
/// which cancel.
fn ccw_first(cycle: &Cycle, a: &[u32], b: &[u32], start_door: u32) -> Option<bool> {
    for p in 0..a.len().min(b.len()) {
        let (x, y) = (a[p], b[p]);
        if x != y {
            let din = if p == 0 { start_door } else { cycle.opposite(a[p - 1]) };
            debug_assert!(x != din && y != din, "reduced words bounce off no door");
            return Some(cycle.pos_from(x, din) > cycle.pos_from(y, din));
        }
        if x == X0 {
            return None;
        }
    }
    None
}

/// A crossing is addressed by (curve index, event position).
pub(crate) type Crossing = (usize, usize);

/// A loop end at the basepoint tip: (curve index, is-outgoing).
pub(crate) type Germ = (usize, bool);

/// Comparator context for based (decorated) diagrams.
pub(crate) struct Based<'a> {
    pub cycle: Cycle,
    pub curves: &'a [Vec<Event>],
}

impl<'a> Based<'a> {
    fn event(&self, c: Crossing) -> Event {
        self.curves[c.0][c.1]
    }

    /// Continuation items on the given side of the crossing's cut.
    fn side_items(&self, c: Crossing, side: u32) -> Vec<u32> {
        let ev = self.event(c);
        if self.cycle.exit(ev) == side {
            based_walk_fwd(&self.cycle, &self.curves[c.0], c.1 + 1)
        } else {
            based_walk_bwd(&self.cycle, &self.curves[c.0], c.1)
        }
    }

    /// Total order of the crossings along one cut, from the inner end
    /// (puncture or basepoint tip) outward.
    ///
    /// On the inner-first side the counterclockwise boundary runs away
    /// from the inner end, so the ccw-first strand is the closer one;
    /// on the other side it is the farther one. Ties on both sides
    /// only occur between parallel copies of one loop, which are
    /// pushed off to the left of the travel direction, lower curve
    /// index innermost.
    pub fn closer_to_inner(&self, c1: Crossing, c2: Crossing) -> bool {
        let gate = self.event(c1).gate;
        debug_assert_eq!(gate, self.event(c2).gate);
        let first = self.cycle.inner_first_side(gate);
        if let Some(a_first) =
            ccw_first(&self.cycle, &self.side_items(c1, first), &self.side_items(c2, first), first)
        {
            return a_first;
        }
        let last = self.cycle.inner_last_side(gate);
        if let Some(a_first) =
            ccw_first(&self.cycle, &self.side_items(c1, last), &self.side_items(c2, last), last)
        {
            return !a_first;
        }
        assert_ne!(c1.0, c2.0, "a reduced loop has no two identical crossings");
        let (e1, e2) = (self.event(c1), self.event(c2));
        debug_assert_eq!(e1.up, e2.up);
        if self.cycle.exit(e1) == first {
            c1.0 < c2.0
        } else {
            c1.0 > c2.0
        }
    }

    fn germ_items(&self, g: Germ) -> Vec<u32> {
        let events = &self.curves[g.0];
        if g.1 {
            based_walk_fwd(&self.cycle, events, 0)
        } else {
            based_walk_bwd(&self.cycle, events, events.len())
        }
    }

    /// Counterclockwise order of the loop ends around the basepoint
    /// tip (the end nearest the tail's north side first).
    pub fn germ_ccw_before(&self, g1: Germ, g2: Germ) -> bool {
        if let Some(first) = ccw_first(&self.cycle, &self.germ_items(g1), &self.germ_items(g2), X0) {
            return first;
        }
        assert_ne!(g1.0, g2.0, "a nonempty reduced loop is never its own inverse");
        debug_assert_eq!(g1.1, g2.1);
        if g1.1 {
            g1.0 < g2.0
        } else {
            g1.0 > g2.0
        }
    }

    /// Taut cut orders: index 0 is the tail, index `j` is gate `j`;
    /// each lists crossings from the inner end outward.
    pub fn taut_orders(&self) -> Vec<Vec<Crossing>> {
        let mut orders: Vec<Vec<Crossing>> = vec![Vec::new(); self.cycle.n as usize + 1];
        for (ci, events) in self.curves.iter().enumerate() {
            for (i, ev) in events.iter().enumerate() {
                orders[ev.gate as usize].push((ci, i));
            }
        }
        for list in &mut orders {
            list.sort_by(|&a, &b| {
                if a == b {
                    std::cmp::Ordering::Equal
                } else if self.closer_to_inner(a, b) {
                    std::cmp::Ordering::Less
                } else {
                    std::cmp::Ordering::Greater
                }
            });
        }
        orders
    }

    pub fn taut_germ_order(&self) -> Vec<Germ> {
        let mut germs: Vec<Germ> = Vec::new();
        for (ci, events) in self.curves.iter().enumerate() {
            if !events.is_empty() {
                germs.push((ci, true));
                germs.push((ci, false));
            }
        }
        germs.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if self.germ_ccw_before(a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        germs
    }
}

/// Boundary positions and chords of a based diagram for fixed orders.
pub(crate) struct Layout {
    pub total: u32,
    /// Per curve: directed chords `(from, to)`; chord `i` joins the
    /// exit of event `i-1` to the hit point of event `i`, with the
    /// first and last chords attached to the basepoint germs.
    pub chords: Vec<Vec<(u32, u32)>>,
}

pub(crate) fn based_layout(
    cycle: &Cycle,
    curves: &[Vec<Event>],
    germ_order: &[Germ],
    orders: &[Vec<Crossing>],
) -> Layout {
    let mut hit_pos: Vec<Vec<u32>> = curves.iter().map(|evs| vec![0; evs.len()]).collect();
    let mut exit_pos: Vec<Vec<u32>> = curves.iter().map(|evs| vec![0; evs.len()]).collect();
    let mut germ_pos: Vec<(u32, u32)> = vec![(0, 0); curves.len()];

    let mut p: u32 = 0;
    for &(ci, is_out) in germ_order {
        if is_out {
            germ_pos[ci].0 = p;
        } else {
            germ_pos[ci].1 = p;
        }
        p += 1;
    }
    // One block per boundary item, walked counterclockwise: tail south
    // (inner first), per gate low (inner last) then high (inner
    // first), tail north (inner last).
    let mut place_side = |p: &mut u32, gate: u32, item: u32, order: &[Crossing]| {
        let inner_first = item == cycle.inner_first_side(gate);
        let run: Vec<Crossing> = if inner_first {
            order.to_vec()
        } else {
            order.iter().rev().copied().collect()
        };
        for (ci, i) in run {
            let ev = curves[ci][i];
            let dst = if cycle.hit(ev) == item { &mut hit_pos[ci][i] } else { &mut exit_pos[ci][i] };
            *dst = *p;
            *p += 1;
        }
    };
    place_side(&mut p, TAIL, cycle.tail_south(), &orders[TAIL as usize]);
    for j in 1..=cycle.n {
        place_side(&mut p, j, cycle.low(j), &orders[j as usize]);
        place_side(&mut p, j, cycle.high(j), &orders[j as usize]);
    }
    place_side(&mut p, TAIL, cycle.tail_north(), &orders[TAIL as usize]);

    let mut chords: Vec<Vec<(u32, u32)>> = Vec::with_capacity(curves.len());
    for (ci, events) in curves.iter().enumerate() {
        let mut list = Vec::with_capacity(events.len() + 1);
        if !events.is_empty() {
            let mut from = germ_pos[ci].0;
            for i in 0..events.len() {
                list.push((from, hit_pos[ci][i]));
                from = exit_pos[ci][i];
            }
            list.push((from, germ_pos[ci].1));
        }
        chords.push(list);
    }
    Layout { total: p, chords }
}

/// True if `x` lies in the open counterclockwise arc from `a` to `b`.
pub(crate) fn in_arc(x: u32, a: u32, b: u32, total: u32) -> bool {
    let rel = |v: u32| (v + total - a) % total;
    let (x, b) = (rel(x), rel(b));
    0 < x && x < b
}

/// Two chords cross exactly when their endpoints interleave.
pub(crate) fn interleaved(a: (u32, u32), b: (u32, u32), total: u32) -> bool {
    in_arc(b.0, a.0, a.1, total) != in_arc(b.1, a.0, a.1, total)
}

/// Crossing chord pairs within one curve, as (arc, arc) index pairs.
pub(crate) fn self_crossings(layout: &Layout, curve: usize) -> Vec<(usize, usize)> {
    let chords = &layout.chords[curve];
    let mut out = Vec::new();
    for i in 0..chords.len() {
        for j in i + 1..chords.len() {
            if interleaved(chords[i], chords[j], layout.total) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Crossing chord pairs between the two curves of a pair layout.
pub(crate) fn mutual_crossings(layout: &Layout) -> Vec<(usize, usize)> {
    debug_assert_eq!(layout.chords.len(), 2);
    let mut out = Vec::new();
    for (i, &a) in layout.chords[0].iter().enumerate() {
        for (j, &b) in layout.chords[1].iter().enumerate() {
            if interleaved(a, b, layout.total) {
                out.push((i, j));
            }
        }
    }
    out
}

/// Whether the two loops of a pair cross transversally at the
/// basepoint: their four ends alternate around it.
pub(crate) fn basepoint_alternates(germ_order: &[Germ]) -> bool {
    if germ_order.len() != 4 {
        return false;
    }
    let c: Vec<usize> = germ_order.iter().map(|g| g.0).collect();
    c[0] == c[2] && c[1] == c[3] && c[0] != c[1]
}

/// Taut realization of a single free (cyclic) loop: per-gate orders
/// from the puncture outward, and the crossing arc pairs. Arc `i` runs
/// from event `i` to event `i+1 mod m`.
pub(crate) struct CyclicDiagram {
    pub orders: Vec<Vec<usize>>,
    pub crossings: Vec<(usize, usize)>,
}

/// Comparator for one cyclic curve. Continuation walks are periodic;
/// walks agreeing for a full combined period are parallel sheets of a
/// proper power and are tied, broken by the push-off rule on event
/// indices.
fn cyclic_closer_to_inner(cycle: &Cycle, events: &[Event], i1: usize, i2: usize) -> bool {
    let ev1 = events[i1];
    let ev2 = events[i2];
    debug_assert_eq!(ev1.gate, ev2.gate);
    let steps = 2 * events.len() + 1;
    let walk = |i: usize, side: u32| -> Vec<u32> {
        let ev = events[i];
        if cycle.exit(ev) == side {
            cyclic_fwd_items(cycle, events, i + 1, steps)
        } else {
            cyclic_bwd_items(cycle, events, i, steps)
        }
    };
    let first = cycle.inner_first_side(ev1.gate);
    if let Some(a_first) = ccw_first(cycle, &walk(i1, first), &walk(i2, first), first) {
        return a_first;
    }
    let last = cycle.inner_last_side(ev1.gate);
    if let Some(a_first) = ccw_first(cycle, &walk(i1, last), &walk(i2, last), last) {
        return !a_first;
    }
    // Parallel sheets of a power: push lower indices to the left of
    // the travel direction. Opposite-direction full ties can only
    // arise for mirror-symmetric cyclic words; order them by
    // direction, which is deterministic and antisymmetric.
    if ev1.up != ev2.up {
        return ev1.up;
    }
    if cycle.exit(ev1) == first {
        i1 < i2
    } else {
        i1 > i2
    }
}

fn cyclic_fwd_items(cycle: &Cycle, events: &[Event], start: usize, steps: usize) -> Vec<u32> {
    let m = events.len();
    (0..steps).map(|k| cycle.hit(events[(start + k) % m])).collect()
}

fn cyclic_bwd_items(cycle: &Cycle, events: &[Event], upto: usize, steps: usize) -> Vec<u32> {
    let m = events.len();
    // Item k is the k-th event strictly before `upto`, left through
    // its exit side since the walk runs against the curve.
    (0..steps).map(|k| cycle.exit(events[(upto + m - 1 - (k % m)) % m])).collect()
}

/// Taut realization of the free homotopy class of a cyclically reduced
/// word.
pub(crate) fn cyclic_diagram(n: u32, events: &[Event]) -> CyclicDiagram {
    let cycle = Cycle { n };
    let mut orders: Vec<Vec<usize>> = vec![Vec::new(); n as usize + 1];
    for (i, ev) in events.iter().enumerate() {
        debug_assert_ne!(ev.gate, TAIL);
        orders[ev.gate as usize].push(i);
    }
    for list in orders.iter_mut() {
        list.sort_by(|&a, &b| {
            if a == b {
                std::cmp::Ordering::Equal
            } else if cyclic_closer_to_inner(&cycle, events, a, b) {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
    }
    let crossings = cyclic_count(&cycle, events, &orders);
    CyclicDiagram { orders: orders.split_off(1), crossings }
}

/// Interleaving count of a cyclic layout with the given orders; orders
/// are indexed with the tail slot 0 kept empty for uniformity.
pub(crate) fn cyclic_count(
    cycle: &Cycle,
    events: &[Event],
    orders: &[Vec<usize>],
) -> Vec<(usize, usize)> {
    let m = events.len();
    if m == 0 {
        return Vec::new();
    }
    let mut hit_pos = vec![0u32; m];
    let mut exit_pos = vec![0u32; m];
    let mut p: u32 = 0;
    for j in 1..=cycle.n {
        let order = &orders[j as usize];
        for &i in order.iter().rev() {
            let dst = if cycle.hit(events[i]) == cycle.low(j) { &mut hit_pos[i] } else { &mut exit_pos[i] };
            *dst = p;
            p += 1;
        }
        for &i in order.iter() {
            let dst = if cycle.hit(events[i]) == cycle.high(j) { &mut hit_pos[i] } else { &mut exit_pos[i] };
            *dst = p;
            p += 1;
        }
    }
    let chords: Vec<(u32, u32)> = (0..m).map(|i| (exit_pos[i], hit_pos[(i + 1) % m])).collect();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if interleaved(chords[i], chords[j], p) {
                out.push((i, j));
            }
        }
    }
    out
}
