//! Boundary tracing of meet and join regions on a tight pair diagram.
//!
//! Both loops are embedded and positively oriented, so their interiors
//! lie to the left of the walking direction. The meet is the boundary
//! of the basepoint component of the intersection of the interiors; the
//! join is the outer boundary of their union. Both are traced by
//! walking arcs forward and deciding at every transverse crossing
//! whether to switch onto the other loop: the intersection boundary
//! switches when the other loop crosses from right to left, the union
//! boundary when it crosses from left to right. At the basepoint the
//! union boundary may pass through several angular wedges, hopping from
//! an incoming end to the next outgoing end below it.

use super::diagram::{in_arc, Event, Germ, Layout};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum TraceKind {
    Meet,
    Join,
}

struct Xing {
    /// Chord index on each curve.
    chord: [usize; 2],
    /// Rank of this crossing along each chord, from the chord start.
    pos: [usize; 2],
}

pub(crate) struct PairTrace<'a> {
    layout: &'a Layout,
    events: &'a [Vec<Event>],
    germ_order: &'a [Germ],
    xings: Vec<Xing>,
    /// Per curve, per chord: crossing ids ordered from the chord start.
    along: [Vec<Vec<usize>>; 2],
}

/// True if chord `di` lies strictly between the start of `c` and chord
/// `dj`: the start of `c` and both endpoints of `dj` are on opposite
/// sides of `di`. For two non-crossing chords both meeting `c` exactly
/// one of them separates the start from the other, which orders the
/// crossings along `c`.
fn separates_start(c: (u32, u32), di: (u32, u32), dj: (u32, u32), total: u32) -> bool {
    let start_side = in_arc(c.0, di.0, di.1, total);
    in_arc(dj.0, di.0, di.1, total) != start_side && in_arc(dj.1, di.0, di.1, total) != start_side
}

impl<'a> PairTrace<'a> {
    pub fn new(
        layout: &'a Layout,
        events: &'a [Vec<Event>],
        germ_order: &'a [Germ],
        mutual: &[(usize, usize)],
    ) -> Self {
        let mut xings: Vec<Xing> = mutual
            .iter()
            .map(|&(i, j)| Xing { chord: [i, j], pos: [0, 0] })
            .collect();
        let mut along = [
            vec![Vec::new(); layout.chords[0].len()],
            vec![Vec::new(); layout.chords[1].len()],
        ];
        for (id, x) in xings.iter().enumerate() {
            along[0][x.chord[0]].push(id);
            along[1][x.chord[1]].push(id);
        }
        for side in 0..2 {
            let other = 1 - side;
            for (k, list) in along[side].iter_mut().enumerate() {
                let c = layout.chords[side][k];
                list.sort_by(|&a, &b| {
                    let da = layout.chords[other][xings[a].chord[other]];
                    let db = layout.chords[other][xings[b].chord[other]];
                    debug_assert_ne!(da, db, "two chords cross at most once");
                    if separates_start(c, da, db, layout.total) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                });
                for (pos, &id) in list.iter().enumerate() {
                    xings[id].pos[side] = pos;
                }
            }
        }
        PairTrace { layout, events, germ_order, xings, along }
    }

    fn germ_index(&self, g: Germ) -> usize {
        self.germ_order.iter().position(|&h| h == g).expect("germ present")
    }

    /// Outgoing ends in counterclockwise order, with their indices.
    fn outs(&self) -> Vec<(usize, usize)> {
        self.germ_order
            .iter()
            .enumerate()
            .filter(|(_, g)| g.1)
            .map(|(i, g)| (i, g.0))
            .collect()
    }

    fn ins(&self) -> Vec<(usize, usize)> {
        self.germ_order
            .iter()
            .enumerate()
            .filter(|(_, g)| !g.1)
            .map(|(i, g)| (i, g.0))
            .collect()
    }

    /// Whether the basepoint component of the intersection of interiors
    /// is nonempty: every incoming end precedes every outgoing end in
    /// the counterclockwise basepoint block.
    pub fn meet_wedge_nonempty(&self) -> bool {
        let min_out = self.outs().iter().map(|&(i, _)| i).min().expect("two loops");
        let max_in = self.ins().iter().map(|&(i, _)| i).max().expect("two loops");
        min_out >= max_in
    }

    /// Walks the region boundary and returns the letters crossed, in
    /// order. The caller freely reduces and certifies the word.
    pub fn run(&self, kind: TraceKind) -> Vec<i32> {
        let outs = self.outs();
        let ins = self.ins();
        let (start_curve, end_germ_idx) = match kind {
            // Angularly highest outgoing end = ccw-first; the matching
            // arrival is the angularly lowest incoming end = ccw-last.
            TraceKind::Meet => {
                debug_assert!(self.meet_wedge_nonempty());
                let &(_, c) = outs.iter().min_by_key(|&&(i, _)| i).unwrap();
                let &(i, _) = ins.iter().max_by_key(|&&(i, _)| i).unwrap();
                (c, i)
            }
            TraceKind::Join => {
                let &(_, c) = outs.iter().max_by_key(|&&(i, _)| i).unwrap();
                let &(i, _) = ins.iter().min_by_key(|&&(i, _)| i).unwrap();
                (c, i)
            }
        };

        let mut letters: Vec<i32> = Vec::new();
        let mut cur = start_curve;
        let mut chord = 0usize;
        let mut after = 0usize;
        let budget = 4 * (self.xings.len() + self.layout.chords[0].len() + self.layout.chords[1].len() + 4);
        let mut steps = 0usize;

        loop {
            steps += 1;
            assert!(steps <= budget, "engine error: region trace did not close up");

            if let Some(&xid) = self.along[cur][chord].get(after) {
                let x = &self.xings[xid];
                let my = self.layout.chords[cur][chord];
                let other_curve = 1 - cur;
                let oc = x.chord[other_curve];
                let other = self.layout.chords[other_curve][oc];
                // The other loop starts on our right iff its chord start
                // lies in the ccw arc from our start to our end.
                let starts_right = in_arc(other.0, my.0, my.1, self.layout.total);
                let switch = match kind {
                    TraceKind::Meet => starts_right,
                    TraceKind::Join => !starts_right,
                };
                if switch {
                    cur = other_curve;
                    chord = oc;
                    after = x.pos[other_curve] + 1;
                } else {
                    after += 1;
                }
                continue;
            }

            if chord + 1 < self.layout.chords[cur].len() {
                // Passing through a gate: record the letter.
                let ev = self.events[cur][chord];
                debug_assert_ne!(ev.gate, super::diagram::TAIL, "traces run on divisor pairs");
                letters.push(if ev.up { ev.gate as i32 } else { -(ev.gate as i32) });
                chord += 1;
                after = 0;
                continue;
            }

            // Arrived at the basepoint on the incoming end of `cur`.
            let arrived = self.germ_index((cur, false));
            if arrived == end_germ_idx {
                return letters;
            }
            match kind {
                TraceKind::Meet => {
                    panic!("engine error: meet trace closed on the wrong end");
                }
                TraceKind::Join => {
                    // Hop to the next outgoing end below the arrival.
                    let next = outs
                        .iter()
                        .filter(|&&(i, _)| i < arrived)
                        .max_by_key(|&&(i, _)| i)
                        .unwrap_or_else(|| {
                            panic!("engine error: join trace stranded at the basepoint")
                        });
                    cur = next.1;
                    chord = 0;
                    after = 0;
                }
            }
        }
    }
}
