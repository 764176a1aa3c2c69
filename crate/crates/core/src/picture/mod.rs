//! Drawings of words as strand diagrams.
//!
//! Strand `i` runs from `(i, 0)` to `(i, 1)`. Each letter takes two height
//! bands: in the first the letter's strands are gathered next to each other
//! (straight segments, so any crossings here are routing artifacts), in the
//! second the gathered block is reversed with all its strands passing
//! through one point, the solid dot. A last band brings every strand back
//! to its own column. The first letter is drawn at the bottom.

use std::fmt::Write as _;

use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::Result;
use crate::group::{canonical_form, GroupSignature, Word};

pub type Coord = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MarkKind {
    /// Where the strands of a letter meet.
    Generator,
    /// A crossing introduced by routing only.
    Artifact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mark {
    pub x: Coord,
    pub y: Coord,
    pub kind: MarkKind,
    /// The letter's strands for a generator, the crossing pair otherwise.
    pub strands: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    signature: GroupSignature,
    strands: Vec<Vec<(Coord, Coord)>>,
    marks: Vec<Mark>,
}

impl Diagram {
    pub fn signature(&self) -> GroupSignature {
        self.signature
    }

    /// Polyline of each strand, bottom to top.
    pub fn strands(&self) -> &[Vec<(Coord, Coord)>] {
        &self.strands
    }

    pub fn marks(&self) -> &[Mark] {
        &self.marks
    }

    pub fn count(&self, kind: MarkKind) -> usize {
        self.marks.iter().filter(|m| m.kind == kind).count()
    }
}

/// Moves every strand from its column in `order` to its column in `next`
/// over height band `[y0, y1]`, recording crossings as artifacts if asked.
fn band(
    order: &[usize],
    next: &[usize],
    (y0, y1): (Coord, Coord),
    artifacts: bool,
    strands: &mut [Vec<(Coord, Coord)>],
    marks: &mut Vec<Mark>,
) {
    let n = order.len();
    let col = |v: &[usize], s: usize| Coord::from(v.iter().position(|&t| t == s).unwrap() as i64 + 1);
    if artifacts {
        for a in 1..=n {
            for b in a + 1..=n {
                let (a0, a1, b0, b1) = (col(order, a), col(next, a), col(order, b), col(next, b));
                if (a0 < b0) != (a1 < b1) {
                    let s = (b0 - a0) / ((a1 - a0) - (b1 - b0));
                    marks.push(Mark {
                        x: a0 + s * (a1 - a0),
                        y: y0 + s * (y1 - y0),
                        kind: MarkKind::Artifact,
                        strands: vec![a, b],
                    });
                }
            }
        }
    }
    for s in 1..=n {
        strands[s - 1].push((col(next, s), y1));
    }
}

pub fn layout(word: &Word) -> Diagram {
    let sig = word.signature();
    let (n, k) = (sig.n(), sig.k());
    let bands = 2 * word.len() + 1;
    let height = |b: usize| Coord::new(b as i64, bands as i64);
    // order[c] is the strand in column c + 1.
    let mut order: Vec<usize> = (1..=n).collect();
    let mut strands: Vec<Vec<(Coord, Coord)>> =
        (1..=n).map(|s| vec![(Coord::from(s as i64), Coord::zero())]).collect();
    let mut marks = Vec::new();

    for (i, m) in word.letters().iter().enumerate() {
        let first = order.iter().position(|&s| m.contains(s)).expect("letter has strands");
        let mut gathered: Vec<usize> = order[..first].to_vec();
        gathered.extend(order[first..].iter().copied().filter(|&s| m.contains(s)));
        gathered.extend(order[first..].iter().copied().filter(|&s| !m.contains(s)));
        let b = 2 * i;
        band(&order, &gathered, (height(b), height(b + 1)), true, &mut strands, &mut marks);

        let mut crossed = gathered.clone();
        crossed[first..first + k].reverse();
        marks.push(Mark {
            x: Coord::new(2 * first as i64 + k as i64 + 1, 2),
            y: (height(b + 1) + height(b + 2)) / 2,
            kind: MarkKind::Generator,
            strands: m.indices().collect(),
        });
        band(&gathered, &crossed, (height(b + 1), height(b + 2)), false, &mut strands, &mut marks);
        order = crossed;
    }
    let home: Vec<usize> = (1..=n).collect();
    band(&order, &home, (height(bands - 1), height(bands)), true, &mut strands, &mut marks);

    marks.sort_by(|a, b| (a.kind, &a.y, &a.x, &a.strands).cmp(&(b.kind, &b.y, &b.x, &b.strands)));
    Diagram {
        signature: sig,
        strands,
        marks,
    }
}

const UNIT: f64 = 60.0;
const MARGIN: f64 = 40.0;

fn fmt_num(v: f64) -> String {
    let s = format!("{v:.2}");
    let s = s.trim_end_matches('0').trim_end_matches('.');
    if s == "-0" {
        "0".to_string()
    } else {
        s.to_string()
    }
}

/// SVG 1.1 text. Element order: strand paths, then generator dots, then
/// artifact circles, each sorted bottom to top.
pub fn render_svg(diagram: &Diagram) -> String {
    let n = diagram.signature.n();
    let bands = diagram.strands[0].len() - 1;
    let width = 2.0 * MARGIN + UNIT * (n as f64 - 1.0);
    let height = 2.0 * MARGIN + UNIT * bands as f64;
    let px = |x: &Coord| MARGIN + UNIT * (x.to_f64().unwrap() - 1.0);
    let py = |y: &Coord| height - MARGIN - UNIT * bands as f64 * y.to_f64().unwrap();

    let mut out = String::new();
    out.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{w}\" height=\"{h}\" viewBox=\"0 0 {w} {h}\">",
        w = fmt_num(width),
        h = fmt_num(height)
    );
    out.push_str("<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n");
    for (i, line) in diagram.strands.iter().enumerate() {
        let pts: Vec<String> = line
            .iter()
            .map(|(x, y)| format!("{},{}", fmt_num(px(x)), fmt_num(py(y))))
            .collect();
        let _ = writeln!(
            out,
            "<path class=\"strand-{}\" d=\"M {}\"/>",
            i + 1,
            pts.join(" L ")
        );
    }
    out.push_str("</g>\n");
    for m in &diagram.marks {
        let (cx, cy) = (fmt_num(px(&m.x)), fmt_num(py(&m.y)));
        let label: Vec<String> = m.strands.iter().map(|s| s.to_string()).collect();
        match m.kind {
            MarkKind::Generator => {
                let _ = writeln!(
                    out,
                    "<circle class=\"generator\" cx=\"{cx}\" cy=\"{cy}\" r=\"6\" fill=\"black\"><title>a({})</title></circle>",
                    label.join(" ")
                );
            }
            MarkKind::Artifact => {
                let _ = writeln!(
                    out,
                    "<circle class=\"artifact\" cx=\"{cx}\" cy=\"{cy}\" r=\"8\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>"
                );
            }
        }
    }
    for s in 1..=n {
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"14\" text-anchor=\"middle\">{s}</text>",
            fmt_num(px(&Coord::from(s as i64))),
            fmt_num(height - MARGIN / 4.0)
        );
    }
    out.push_str("</svg>\n");
    out
}

/// Graphviz graph of the minimal word (k = 2): one vertex per letter, and
/// an edge labeled `s` between consecutive letters containing strand `s`.
pub fn render_minimal_graph(word: &Word) -> Result<String> {
    let cf = canonical_form(word)?;
    let mut out = String::from("graph minimal {\n");
    for (i, m) in cf.letters().iter().enumerate() {
        let _ = writeln!(out, "  v{i} [label=\"{m}\"];");
    }
    for s in 1..=cf.signature().n() {
        let hits: Vec<usize> = cf
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, m)| m.contains(s))
            .map(|(i, _)| i)
            .collect();
        for w in hits.windows(2) {
            let _ = writeln!(out, "  v{} -- v{} [label=\"{s}\"];", w[0], w[1]);
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn w(n: usize, k: usize, t: &[&[usize]]) -> Word {
        Word::from_tuples(GroupSignature::new(n, k).unwrap(), t).unwrap()
    }

    #[test]
    fn figure_word() {
        let d = layout(&w(4, 3, &[&[2, 3, 4], &[1, 2, 3]]));
        assert_eq!(d.count(MarkKind::Generator), 2);
        assert_eq!(d.count(MarkKind::Artifact), 4);
        for (i, line) in d.strands().iter().enumerate() {
            let x = Coord::from(i as i64 + 1);
            assert_eq!(line.first().unwrap(), &(x, Coord::zero()));
            assert_eq!(line.last().unwrap(), &(x, Coord::from(1)));
            assert!(line.windows(2).all(|p| p[0].1 < p[1].1));
        }
    }

    #[test]
    fn dots_lie_on_their_strands() {
        let d = layout(&w(5, 3, &[&[1, 3, 5], &[2, 4, 5], &[1, 2, 3]]));
        for m in d.marks().iter().filter(|m| m.kind == MarkKind::Generator) {
            for &s in &m.strands {
                let line = &d.strands()[s - 1];
                let seg = line.windows(2).find(|p| p[0].1 <= m.y && m.y <= p[1].1).unwrap();
                let t = (m.y - seg[0].1) / (seg[1].1 - seg[0].1);
                assert_eq!(seg[0].0 + t * (seg[1].0 - seg[0].0), m.x);
            }
        }
    }

    #[test]
    fn trivial_pictures() {
        let svg = render_svg(&layout(&Word::identity(GroupSignature::new(3, 2).unwrap())));
        assert_eq!(svg.matches("<path").count(), 3);
        assert_eq!(svg.matches("<circle").count(), 0);
        // Fixed endpoints force a second crossing of the two strands.
        let d = layout(&w(2, 2, &[&[1, 2]]));
        assert_eq!(d.count(MarkKind::Generator), 1);
        assert_eq!(d.count(MarkKind::Artifact), 1);
        assert_eq!(render_svg(&d).matches("fill=\"black\"").count(), 1);
    }

    #[test]
    fn minimal_graphs() {
        let abc = w(3, 2, &[&[1, 2], &[1, 3], &[2, 3], &[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(render_minimal_graph(&abc).unwrap(), "graph minimal {\n}\n");
        assert_eq!(
            render_minimal_graph(&w(3, 2, &[&[1, 2]])).unwrap(),
            "graph minimal {\n  v0 [label=\"(1 2)\"];\n}\n"
        );
        assert_eq!(
            render_minimal_graph(&w(3, 2, &[&[1, 2], &[1, 3]])).unwrap(),
            "graph minimal {\n  v0 [label=\"(1 2)\"];\n  v1 [label=\"(1 3)\"];\n  v0 -- v1 [label=\"1\"];\n}\n"
        );
        assert!(matches!(
            render_minimal_graph(&w(4, 3, &[&[1, 2, 3]])),
            Err(Error::UnsupportedSignature(_))
        ));
    }
}
