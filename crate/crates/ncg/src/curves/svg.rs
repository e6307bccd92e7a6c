//! SVG rendering of taut diagrams. Layout only; no semantic weight.
//!
//! Punctures are filled circles on the vertical diameter, the basepoint
//! is marked on the left boundary, gates are dotted segments, the first
//! curve is drawn solid and the second dashed. Arcs are routed as cubic
//! splines through the taut gate-order slots.

use super::diagram::{Crossing, Event, Germ};
use super::DiskModel;

const CX: f64 = 250.0;
const CY: f64 = 250.0;
const R: f64 = 200.0;

fn puncture_xy(n: u32, j: u32) -> (f64, f64) {
    if n == 1 {
        return (CX, CY);
    }
    let span = 300.0;
    let y = CY + span / 2.0 - span * (j as f64 - 1.0) / (n as f64 - 1.0);
    (CX, y)
}

fn gate_end() -> (f64, f64) {
    (CX + R, CY)
}

fn basepoint() -> (f64, f64) {
    (CX - R, CY)
}

/// Crossing coordinates: slot `k` of `count` along gate `j`, counted
/// from the puncture.
fn slot_xy(n: u32, gate: u32, k: usize, count: usize) -> (f64, f64) {
    let (px, py) = puncture_xy(n, gate);
    let (ex, ey) = gate_end();
    let u = (k as f64 + 1.0) / (count as f64 + 1.0);
    (px + u * (ex - px), py + u * (ey - py))
}

/// Anchor for a loop end: fanned around the basepoint, the ccw-first
/// end on the upper side.
fn germ_xy(idx: usize, count: usize) -> (f64, f64) {
    let (bx, by) = basepoint();
    let t = (idx as f64 + 1.0) / (count as f64 + 1.0);
    let phi = (0.5 - t) * 100.0_f64.to_radians();
    (bx + 26.0 * phi.cos(), by - 26.0 * phi.sin())
}

fn catmull_path(pts: &[(f64, f64)]) -> String {
    if pts.is_empty() {
        return String::new();
    }
    let mut d = format!("M {:.1},{:.1}", pts[0].0, pts[0].1);
    for i in 0..pts.len() - 1 {
        let p0 = if i == 0 { pts[0] } else { pts[i - 1] };
        let p1 = pts[i];
        let p2 = pts[i + 1];
        let p3 = if i + 2 < pts.len() { pts[i + 2] } else { pts[i + 1] };
        let c1 = (p1.0 + (p2.0 - p0.0) / 6.0, p1.1 + (p2.1 - p0.1) / 6.0);
        let c2 = (p2.0 - (p3.0 - p1.0) / 6.0, p2.1 - (p3.1 - p1.1) / 6.0);
        d.push_str(&format!(
            " C {:.1},{:.1} {:.1},{:.1} {:.1},{:.1}",
            c1.0, c1.1, c2.0, c2.1, p2.0, p2.1
        ));
    }
    d
}

pub(super) fn render(
    model: &DiskModel,
    curves: &[Vec<Event>],
    germ_order: &[Germ],
    gate_orders: &[Vec<Crossing>],
) -> String {
    let n = model.n();
    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    out.push_str(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"500\" height=\"500\" viewBox=\"0 0 500 500\">\n",
    );
    out.push_str(&format!(
        "  <circle cx=\"{CX}\" cy=\"{CY}\" r=\"{R}\" fill=\"none\" stroke=\"#999\" stroke-width=\"1\"/>\n"
    ));

    // Gates, dotted.
    for j in 1..=n {
        let (px, py) = puncture_xy(n, j);
        let (ex, ey) = gate_end();
        out.push_str(&format!(
            "  <line x1=\"{px:.1}\" y1=\"{py:.1}\" x2=\"{ex:.1}\" y2=\"{ey:.1}\" stroke=\"#bbb\" stroke-width=\"1\" stroke-dasharray=\"2,4\"/>\n"
        ));
    }

    // Crossing slots per event; index 0 of the orders is the unused
    // basepoint tail.
    let mut slot: Vec<Vec<(f64, f64)>> = curves.iter().map(|evs| vec![(0.0, 0.0); evs.len()]).collect();
    for j in 1..=n {
        let order = &gate_orders[j as usize];
        for (k, &(ci, i)) in order.iter().enumerate() {
            slot[ci][i] = slot_xy(n, j, k, order.len());
        }
    }

    let styles = ["stroke=\"#111\" stroke-width=\"2\"", "stroke=\"#c22\" stroke-width=\"2\" stroke-dasharray=\"7,5\""];
    for (ci, events) in curves.iter().enumerate() {
        let mut pts = vec![basepoint()];
        if events.is_empty() {
            // The identity loop: a small circle hugging the basepoint.
            let (bx, by) = basepoint();
            out.push_str(&format!(
                "  <circle cx=\"{:.1}\" cy=\"{by:.1}\" r=\"10\" fill=\"none\" {}/>\n",
                bx + 10.0,
                styles[ci.min(1)]
            ));
            continue;
        }
        let out_idx = germ_order.iter().position(|&g| g == (ci, true)).unwrap();
        let in_idx = germ_order.iter().position(|&g| g == (ci, false)).unwrap();
        pts.push(germ_xy(out_idx, germ_order.len()));
        for (i, _) in events.iter().enumerate() {
            pts.push(slot[ci][i]);
        }
        pts.push(germ_xy(in_idx, germ_order.len()));
        pts.push(basepoint());
        out.push_str(&format!(
            "  <path d=\"{}\" fill=\"none\" {}/>\n",
            catmull_path(&pts),
            styles[ci.min(1)]
        ));
    }

    // Punctures and labels.
    for j in 1..=n {
        let (px, py) = puncture_xy(n, j);
        out.push_str(&format!(
            "  <circle cx=\"{px:.1}\" cy=\"{py:.1}\" r=\"4\" fill=\"#111\"/>\n"
        ));
        out.push_str(&format!(
            "  <text x=\"{:.1}\" y=\"{:.1}\" font-size=\"12\" fill=\"#555\">{j}</text>\n",
            px + 7.0,
            py + 4.0
        ));
    }
    let (bx, by) = basepoint();
    out.push_str(&format!(
        "  <rect x=\"{:.1}\" y=\"{:.1}\" width=\"8\" height=\"8\" fill=\"#111\"/>\n",
        bx - 4.0,
        by - 4.0
    ));
    out.push_str("</svg>\n");
    out
}
