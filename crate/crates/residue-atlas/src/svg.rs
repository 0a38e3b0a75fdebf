//! SVG drawing of a net: pieces side by side, rays cut at a fixed length,
//! glued edges labelled by the index of their identification.

use std::fmt::Write;

use residue_atlas_core::surface::{Corner, FlatSurface};

const RAY: f64 = 2.5;
const GAP: f64 = 1.5;
const UNIT: f64 = 40.0;

struct Drawn {
    /// Boundary polyline, with `true` marking the cut ends of rays.
    outline: Vec<((f64, f64), bool)>,
    /// Edge midpoints.
    mids: Vec<(f64, f64)>,
}

fn draw_piece(corners: &[Corner]) -> Drawn {
    let n = corners.len();
    let at = |i: usize| -> Option<(f64, f64)> {
        corners[i % n].point().map(|p| {
            let z = p.to_c64();
            (z.re, z.im)
        })
    };
    let mut outline = Vec::new();
    let mut mids = Vec::new();
    for j in 0..n {
        match &corners[j] {
            Corner::Finite(_) => outline.push((at(j).unwrap(), false)),
            Corner::Infinite { out, into, .. } => {
                let (o, i) = (out.to_c64() / out.to_c64().norm(), into.to_c64() / into.to_c64().norm());
                let prev = at(j + n - 1).unwrap_or((0.0, 0.0));
                let next = at(j + 1).unwrap_or((0.0, 0.0));
                outline.push(((prev.0 + RAY * o.re, prev.1 + RAY * o.im), true));
                outline.push(((next.0 - RAY * i.re, next.1 - RAY * i.im), true));
            }
        }
    }
    for j in 0..n {
        let mid = match (&corners[j], &corners[(j + 1) % n]) {
            (Corner::Finite(_), Corner::Finite(_)) => {
                let (a, b) = (at(j).unwrap(), at(j + 1).unwrap());
                ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0)
            }
            (Corner::Finite(_), Corner::Infinite { out, .. }) => {
                let a = at(j).unwrap();
                let o = out.to_c64() / out.to_c64().norm();
                (a.0 + RAY * 0.5 * o.re, a.1 + RAY * 0.5 * o.im)
            }
            (Corner::Infinite { into, .. }, Corner::Finite(_)) => {
                let b = at(j + 1).unwrap();
                let i = into.to_c64() / into.to_c64().norm();
                (b.0 - RAY * 0.5 * i.re, b.1 - RAY * 0.5 * i.im)
            }
            _ => (0.0, 0.0),
        };
        mids.push(mid);
    }
    Drawn { outline, mids }
}

pub fn surface_svg(surface: &FlatSurface) -> String {
    let drawn: Vec<Drawn> = surface.pieces.iter().map(|p| draw_piece(&p.corners)).collect();
    let mut labels = vec![Vec::new(); surface.pieces.len()];
    for (n, id) in surface.identifications.iter().enumerate() {
        for e in [id.a, id.b] {
            if e.piece < labels.len() {
                labels[e.piece].push((e.edge, n, id.t));
            }
        }
    }
    let mut body = String::new();
    let mut x_offset = 0.0;
    let mut height: f64 = 0.0;
    for (p, d) in drawn.iter().enumerate() {
        let xs = d.outline.iter().map(|(q, _)| q.0);
        let ys = d.outline.iter().map(|(q, _)| q.1);
        let (min_x, max_x) = xs.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), x| (a.min(x), b.max(x)));
        let (min_y, max_y) = ys.fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), y| (a.min(y), b.max(y)));
        height = height.max(max_y - min_y);
        let map = |q: (f64, f64)| ((q.0 - min_x + x_offset + GAP) * UNIT, (max_y - q.1 + GAP) * UNIT);
        let pts: Vec<String> = d.outline.iter().map(|(q, _)| {
            let (x, y) = map(*q);
            format!("{:.3},{:.3}", x, y)
        }).collect();
        let _ = writeln!(body, "<g id=\"piece-{}\">", p);
        let _ = writeln!(body, "<polygon points=\"{}\" fill=\"#eef3fb\" stroke=\"#234\" stroke-width=\"1.5\"/>", pts.join(" "));
        for w in d.outline.windows(2) {
            if w[0].1 && w[1].1 {
                let (a, b) = (map(w[0].0), map(w[1].0));
                let _ = writeln!(body, "<line x1=\"{:.3}\" y1=\"{:.3}\" x2=\"{:.3}\" y2=\"{:.3}\" stroke=\"#eef3fb\" stroke-width=\"3\"/>", a.0, a.1, b.0, b.1);
            }
        }
        for &(edge, n, t) in &labels[p] {
            if let Some(&m) = d.mids.get(edge) {
                let (x, y) = map(m);
                let text = if t == 0 { format!("{}", n) } else { format!("{}/{}", n, t) };
                let _ = writeln!(body, "<text x=\"{:.3}\" y=\"{:.3}\" font-size=\"12\" text-anchor=\"middle\">{}</text>", x, y, text);
            }
        }
        let _ = writeln!(body, "</g>");
        x_offset += max_x - min_x + GAP;
    }
    let w = (x_offset + 2.0 * GAP) * UNIT;
    let h = (height + 2.0 * GAP) * UNIT;
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0}\" height=\"{:.0}\" viewBox=\"0 0 {:.3} {:.3}\">\n{}</svg>\n",
        w, h, w, h, body
    )
}
