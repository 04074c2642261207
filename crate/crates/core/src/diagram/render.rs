// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.


//! Static SVG and DOT drawings of a diagram.

use std::collections::BTreeMap;
use std::fmt::Write;

use super::Diagram;
use crate::error::Result;
use crate::graph::Edge;

const R: f64 = 100.0;
const PAD: f64 = 40.0;
const CELL: f64 = 2.0 * R + 2.0 * PAD;

type Point = (f64, f64);

fn place(d: &Diagram, b: usize) -> BTreeMap<usize, Point> {
    let order = &d.blocks[b].order;
    let (cx, cy) = (CELL * b as f64 + CELL / 2.0, CELL / 2.0);
    let k = order.len() as f64;
    order
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            let a = std::f64::consts::TAU * i as f64 / k - std::f64::consts::FRAC_PI_2;
            (v, (cx + R * a.cos(), cy + R * a.sin()))
        })
        .collect()
}

fn meet(p: Point, q: Point, r: Point, s: Point) -> Point {
    let (d1, d2) = ((q.0 - p.0, q.1 - p.1), (s.0 - r.0, s.1 - r.1));
    let t = ((r.0 - p.0) * d2.1 - (r.1 - p.1) * d2.0) / (d1.0 * d2.1 - d1.1 * d2.0);
    (p.0 + t * d1.0, p.1 + t * d1.1)
}

/// One circle per block, boundary edges on the circle, chords straight.
/// Crossed chords are drawn in red and every crossing point carries a
/// `class="crossing"` marker.
pub fn to_svg(d: &Diagram) -> Result<String> {
    let pairs = d.crossing_pairs()?;
    let crossed = d.crossed_chords();
    let width = CELL * d.blocks.len().max(1) as f64;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{CELL:.0}" viewBox="0 0 {width:.0} {CELL:.0}">"#
    );
    for b in 0..d.blocks.len() {
        let pos = place(d, b);
        let (cx, cy) = (CELL * b as f64 + CELL / 2.0, CELL / 2.0);
        let _ = writeln!(
            s,
            r##"<circle class="disk" cx="{cx:.2}" cy="{cy:.2}" r="{R:.2}" fill="none" stroke="#ccc" stroke-dasharray="4 4"/>"##
        );
        for e in d.block_edges(b) {
            let (p, q) = (pos[&e.0], pos[&e.1]);
            let (class, color) = if crossed.contains(&e) { ("crossed", "#d62728") } else { ("edge", "#333") };
            let _ = writeln!(
                s,
                r#"<line class="{class}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{color}" stroke-width="2"/>"#,
                p.0, p.1, q.0, q.1
            );
        }
        for &(e, f) in &pairs {
            if d.block_of_edge(e) == Some(b) {
                let m = meet(pos[&e.0], pos[&e.1], pos[&f.0], pos[&f.1]);
                let _ = writeln!(
                    s,
                    r##"<circle class="crossing" cx="{:.2}" cy="{:.2}" r="5" fill="none" stroke="#d62728" stroke-width="2"/>"##,
                    m.0, m.1
                );
            }
        }
        for (v, p) in &pos {
            let _ = writeln!(
                s,
                r#"<circle class="vertex" cx="{:.2}" cy="{:.2}" r="12" fill="white" stroke="black"/><text x="{:.2}" y="{:.2}" text-anchor="middle" dominant-baseline="central" font-size="12">{v}</text>"#,
                p.0, p.1, p.0, p.1
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}

/// Neato-ready DOT with pinned positions; each crossed chord names its
/// partner in a `crosses` attribute.
pub fn to_dot(d: &Diagram) -> Result<String> {
    let pairs = d.crossing_pairs()?;
    let mut partner: BTreeMap<Edge, Edge> = BTreeMap::new();
    for &(e, f) in &pairs {
        partner.insert(e, f);
        partner.insert(f, e);
    }
    let mut s = String::from("graph diagram {\n  node [shape=circle];\n");
    let mut placed = BTreeMap::new();
    for b in 0..d.blocks.len() {
        for (v, p) in place(d, b) {
            placed.entry(v).or_insert(p);
        }
    }
    for v in 0..d.graph.n() {
        match placed.get(&v) {
            Some(p) => {
                let _ = writeln!(s, "  {v} [pos=\"{:.2},{:.2}!\"];", p.0 / 72.0, -p.1 / 72.0);
            }
            None => {
                let _ = writeln!(s, "  {v};");
            }
        }
    }
    for b in 0..d.blocks.len() {
        for e in d.block_edges(b) {
            match partner.get(&e) {
                Some(f) => {
                    let _ = writeln!(s, "  {} -- {} [block={b}, crosses=\"{}-{}\", color=red];", e.0, e.1, f.0, f.1);
                }
                None => {
                    let _ = writeln!(s, "  {} -- {} [block={b}];", e.0, e.1);
                }
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn k4_has_one_marked_crossing() {
        let d = Diagram::from_orders(Graph::complete(4), vec![vec![0, 1, 2, 3]]);
        let svg = to_svg(&d).unwrap();
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 1);
        assert_eq!(svg.matches(r#"class="crossed""#).count(), 2);
        let dot = to_dot(&d).unwrap();
        assert_eq!(dot.matches("crosses=").count(), 2);
    }

    #[test]
    fn c5_unmarked_and_stable() {
        let d = Diagram::from_orders(Graph::cycle(5), vec![vec![0, 1, 2, 3, 4]]);
        let svg = to_svg(&d).unwrap();
        assert_eq!(svg.matches(r#"class="crossing""#).count(), 0);
        assert_eq!(svg, to_svg(&d.clone()).unwrap());
        assert_eq!(to_dot(&d).unwrap(), to_dot(&d).unwrap());
    }

    #[test]
    fn crossing_point_of_diagonals() {
        let m = meet((0.0, 0.0), (2.0, 2.0), (0.0, 2.0), (2.0, 0.0));
        assert!((m.0 - 1.0).abs() < 1e-12 && (m.1 - 1.0).abs() < 1e-12);
    }

    #[test]
    fn invalid_diagram_rejected() {
        let d = Diagram::from_orders(Graph::complete(5), vec![vec![0, 1, 2, 3, 4]]);
        assert!(to_svg(&d).is_err());
    }
}
