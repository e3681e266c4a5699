//! Deterministic drawings of interval representations.
//!
//! Two emitters share one layout: [`render_svg`] produces a standalone SVG
//! document, [`render_tikz`] a `tikzpicture` body that compiles under any
//! LaTeX setup with TikZ loaded (only predefined grayscale colors are used).
//! Every interval is drawn as a horizontal segment with endpoint dots and a
//! vertex label, on its own row by default; `compact_rows` packs disjoint
//! intervals onto shared rows instead (greedy track assignment).
//!
//! The SVG is machine-recoverable: [`parse_svg_geometry`] reads the emitted
//! geometry back into an [`IntervalRepresentation`] whose overlap graph is
//! exactly the rendered one, so a render → re-parse round trip can be checked
//! against the source graph. Pixel coordinates are a positive affine image of
//! the input endpoints, which preserves both overlap and strict nesting.
//!
//! Output is byte-deterministic: same inputs, same bytes, regardless of
//! thread count or environment.

use crate::engine::IntervalRepresentation;
use crate::error::Error;
use crate::graph::Graph;

// --- style -----------------------------------------------------------------

/// Highlighting choices for a drawing.
///
/// Role precedence when a vertex has several: basepoint, then designated,
/// then relocating-clique member, then the default tone.
#[derive(Debug, Clone, Default)]
pub struct RenderStyle {
    /// Drawn black with a heavier stroke.
    pub basepoint: Option<usize>,
    /// Drawn dark grey (the vertex singled out for removal).
    pub designated: Option<usize>,
    /// Drawn light grey (the clique that changes sides).
    pub relocating: Vec<usize>,
    /// Pack disjoint intervals onto shared rows (fewer tracks, same order);
    /// off by default, which gives one row per vertex.
    pub compact_rows: bool,
}

/// Grayscale tones, one per role, shared by both emitters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Tone {
    Basepoint,
    Designated,
    Relocating,
    Plain,
}

impl Tone {
    fn of(v: usize, style: &RenderStyle) -> Tone {
        if style.basepoint == Some(v) {
            Tone::Basepoint
        } else if style.designated == Some(v) {
            Tone::Designated
        } else if style.relocating.contains(&v) {
            Tone::Relocating
        } else {
            Tone::Plain
        }
    }

    fn hex(self) -> &'static str {
        match self {
            Tone::Basepoint => "#000000",
            Tone::Designated => "#505050",
            Tone::Relocating => "#c0c0c0",
            Tone::Plain => "#858585",
        }
    }

    /// A color name predefined by TikZ, so the body needs no preamble.
    fn tikz(self) -> &'static str {
        match self {
            Tone::Basepoint => "black",
            Tone::Designated => "darkgray",
            Tone::Relocating => "lightgray",
            Tone::Plain => "gray",
        }
    }
}

// --- layout ----------------------------------------------------------------

const X_SCALE: i64 = 10;
const ROW_HEIGHT: i64 = 26;
const MARGIN: i64 = 24;
const LABEL_GAP: i64 = 8;

/// Row index per vertex plus the number of rows used.
fn assign_rows(rep: &IntervalRepresentation, compact: bool) -> (Vec<usize>, usize) {
    let n = rep.n;
    if !compact {
        return ((0..n).collect(), n);
    }
    // Greedy track assignment in left-endpoint order: a track is free for an
    // interval when the last interval placed there ends before it starts.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (rep.intervals[v].0, rep.intervals[v].1, v));
    let mut track_last_right: Vec<i64> = Vec::new();
    let mut row = vec![0usize; n];
    for &v in &order {
        let (l, r) = rep.intervals[v];
        match track_last_right.iter().position(|&end| end < l) {
            Some(t) => {
                track_last_right[t] = r;
                row[v] = t;
            }
            None => {
                track_last_right.push(r);
                row[v] = track_last_right.len() - 1;
            }
        }
    }
    let rows = track_last_right.len().max(1);
    debug_assert!(row.iter().all(|&t| t < rows));
    (row, if n == 0 { 0 } else { rows })
}

/// Shift so the leftmost endpoint sits at zero.
fn left_shift(rep: &IntervalRepresentation) -> i64 {
    rep.intervals.iter().map(|&(l, _)| l).min().unwrap_or(0)
}

// --- svg -------------------------------------------------------------------

/// Renders a validated representation of `g` as a standalone SVG document.
///
/// Each vertex becomes a `<g data-v="id">` group holding its segment,
/// endpoint dots, and label; [`parse_svg_geometry`] recovers the intervals
/// from those groups. Fails with [`Error::InvalidRepresentation`] when `rep`
/// does not represent exactly `g`.
pub fn render_svg(g: &Graph, rep: &IntervalRepresentation, style: &RenderStyle) -> Result<String, Error> {
    rep.validate(g)?;
    check_style(g, style)?;
    let (row, rows) = assign_rows(rep, style.compact_rows);
    let shift = left_shift(rep);
    let x = |e: i64| MARGIN + (e - shift) * X_SCALE;
    let y = |t: usize| MARGIN + (t as i64) * ROW_HEIGHT + ROW_HEIGHT / 2;

    let max_right = rep.intervals.iter().map(|&(_, r)| r).max().unwrap_or(0);
    let width = x(max_right) + LABEL_GAP + 3 * MARGIN;
    let height = 2 * MARGIN + (rows as i64) * ROW_HEIGHT;

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!(
        "  <rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
    ));
    for v in 0..rep.n {
        let (l, r) = rep.intervals[v];
        let (x1, x2, cy) = (x(l), x(r), y(row[v]));
        let tone = Tone::of(v, style);
        let color = tone.hex();
        let stroke = if tone == Tone::Basepoint { 3 } else { 2 };
        out.push_str(&format!("  <g data-v=\"{v}\">\n"));
        out.push_str(&format!(
            "    <line x1=\"{x1}\" y1=\"{cy}\" x2=\"{x2}\" y2=\"{cy}\" stroke=\"{color}\" stroke-width=\"{stroke}\"/>\n"
        ));
        for cx in [x1, x2] {
            out.push_str(&format!(
                "    <circle cx=\"{cx}\" cy=\"{cy}\" r=\"4\" fill=\"{color}\"/>\n"
            ));
        }
        out.push_str(&format!(
            "    <text x=\"{}\" y=\"{}\" font-family=\"monospace\" font-size=\"12\" fill=\"{color}\">{v}</text>\n",
            x2 + LABEL_GAP,
            cy + 4
        ));
        out.push_str("  </g>\n");
    }
    out.push_str("</svg>\n");
    Ok(out)
}

/// Reads the geometry of an SVG produced by [`render_svg`] back into an
/// interval representation.
///
/// The recovered endpoints are the pixel coordinates — a positive affine
/// image of the original endpoints — so the overlap graph (see
/// [`IntervalRepresentation::to_graph`]) and all strict nestings are exactly
/// those of the rendered representation. Vertex ids must cover `0..n` once
/// each; anything else is an [`Error::Parse`] naming the offending line.
pub fn parse_svg_geometry(svg: &str) -> Result<IntervalRepresentation, Error> {
    let parse_err = |pos: usize, message: String| Error::Parse {
        line: svg[..pos].matches('\n').count() + 1,
        message,
    };
    let mut found: Vec<(usize, (i64, i64))> = Vec::new();
    let mut cursor = 0usize;
    while let Some(at) = svg[cursor..].find("<g data-v=\"") {
        let start = cursor + at;
        let id_from = start + "<g data-v=\"".len();
        let id_len = svg[id_from..]
            .find('"')
            .ok_or_else(|| parse_err(start, "unterminated data-v attribute".into()))?;
        let v: usize = svg[id_from..id_from + id_len]
            .parse()
            .map_err(|_| parse_err(start, "data-v is not a vertex id".into()))?;
        let group_len = svg[start..]
            .find("</g>")
            .ok_or_else(|| parse_err(start, format!("vertex {v}: unterminated group")))?;
        let group = &svg[start..start + group_len];
        let coord = |attr: &str| -> Result<i64, Error> {
            let at = group
                .find(attr)
                .ok_or_else(|| parse_err(start, format!("vertex {v}: no {attr}\" in group")))?;
            let from = at + attr.len();
            let len = group[from..]
                .find('"')
                .ok_or_else(|| parse_err(start, format!("vertex {v}: unterminated {attr}\"")))?;
            group[from..from + len]
                .parse()
                .map_err(|_| parse_err(start, format!("vertex {v}: {attr}\" is not an integer")))
        };
        let (x1, x2) = (coord("x1=\"")?, coord("x2=\"")?);
        if x1 > x2 {
            return Err(parse_err(start, format!("vertex {v}: segment runs right to left")));
        }
        found.push((v, (x1, x2)));
        cursor = start + group_len;
    }
    let n = found.len();
    let mut intervals = vec![None; n];
    for (v, interval) in found {
        if v >= n {
            return Err(parse_err(0, format!("vertex id {v} out of range for {n} groups")));
        }
        if intervals[v].replace(interval).is_some() {
            return Err(parse_err(0, format!("vertex {v} drawn twice")));
        }
    }
    Ok(IntervalRepresentation {
        n,
        intervals: intervals.into_iter().map(Option::unwrap).collect(),
    })
}

// --- tikz ------------------------------------------------------------------

/// Renders a validated representation of `g` as a `tikzpicture` body.
///
/// Coordinates are plain integers (endpoints shifted to start at zero, one
/// row per unit of depth) with physical size set by `x=`/`y=` options, and
/// all colors are TikZ-predefined, so the emitted block compiles standalone.
pub fn render_tikz(g: &Graph, rep: &IntervalRepresentation, style: &RenderStyle) -> Result<String, Error> {
    rep.validate(g)?;
    check_style(g, style)?;
    let (row, _) = assign_rows(rep, style.compact_rows);
    let shift = left_shift(rep);

    let mut out = String::new();
    out.push_str("\\begin{tikzpicture}[x=0.24cm, y=-0.55cm, line cap=round]\n");
    for v in 0..rep.n {
        let (l, r) = rep.intervals[v];
        let (x1, x2, t) = (l - shift, r - shift, row[v]);
        let tone = Tone::of(v, style);
        let color = tone.tikz();
        let width = if tone == Tone::Basepoint { "1.6pt" } else { "1.1pt" };
        out.push_str(&format!(
            "  \\draw[{color}, line width={width}] ({x1}, {t}) -- ({x2}, {t});\n"
        ));
        for cx in [x1, x2] {
            out.push_str(&format!("  \\fill[{color}] ({cx}, {t}) circle[radius=0.075];\n"));
        }
        out.push_str(&format!(
            "  \\node[right, {color}] at ({x2}, {t}) {{\\scriptsize {v}}};\n"
        ));
    }
    out.push_str("\\end{tikzpicture}\n");
    Ok(out)
}

// --- shared checks ----------------------------------------------------------

fn check_style(g: &Graph, style: &RenderStyle) -> Result<(), Error> {
    let n = g.vertex_count();
    let oob: Vec<usize> = style
        .basepoint
        .iter()
        .chain(style.designated.iter())
        .chain(style.relocating.iter())
        .copied()
        .filter(|&v| v >= n)
        .collect();
    if oob.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameters(format!(
            "style names vertices {oob:?}, but the graph has only {n}"
        )))
    }
}

// --- tests -------------------------------------------------------------------

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::impropriety;
    use crate::families::{gen_drop_pair, gen_star};

    fn claw() -> Graph {
        gen_star(3)
    }

    #[test]
    fn claw_draws_one_row_per_vertex_with_center_spanning() {
        let g = claw();
        let cert = impropriety(&g).unwrap();
        let svg = render_svg(&g, &cert.representation, &RenderStyle::default()).unwrap();
        assert_eq!(svg.matches("<g data-v=").count(), 4);
        // Four distinct y coordinates: one row per vertex.
        let mut ys: Vec<&str> = svg
            .split("y1=\"")
            .skip(1)
            .map(|rest| &rest[..rest.find('"').unwrap()])
            .collect();
        ys.sort_unstable();
        ys.dedup();
        assert_eq!(ys.len(), 4);
        // The center's segment meets every leaf's (adjacency survives) and is
        // the widest drawn; in an optimal drawing the leaves are not all
        // swallowed — exactly one ends up strictly inside the center.
        let back = parse_svg_geometry(&svg).unwrap();
        assert_eq!(back.to_graph().unwrap(), g);
        let width = |v: usize| {
            let (l, r) = back.interval(v);
            r - l
        };
        assert!((1..4).all(|leaf| width(leaf) < width(0)));
        let nested = back.nested_inside_profile();
        assert_eq!(nested.per_vertex[0], 1);
    }

    #[test]
    fn compact_rows_share_tracks_between_disjoint_leaves() {
        let g = claw();
        let cert = impropriety(&g).unwrap();
        let style = RenderStyle {
            compact_rows: true,
            ..RenderStyle::default()
        };
        let svg = render_svg(&g, &cert.representation, &style).unwrap();
        let mut ys: Vec<&str> = svg
            .split("y1=\"")
            .skip(1)
            .map(|rest| &rest[..rest.find('"').unwrap()])
            .collect();
        ys.sort_unstable();
        ys.dedup();
        // The three pairwise-disjoint leaves pack into rows the center cannot
        // share, so strictly fewer than four rows are used.
        assert!(ys.len() < 4, "expected packing, got {} rows", ys.len());
    }

    #[test]
    fn roundtrip_recovers_adjacency_exactly() {
        for (p, n) in [(2, 0), (3, 1), (4, 2)] {
            let inst = gen_drop_pair(p, n).unwrap();
            let cert = impropriety(&inst.graph).unwrap();
            let style = RenderStyle {
                basepoint: Some(inst.constructed_basepoint),
                designated: Some(inst.designated_vertex),
                relocating: inst.relocating_clique.clone(),
                compact_rows: false,
            };
            let svg = render_svg(&inst.graph, &cert.representation, &style).unwrap();
            let back = parse_svg_geometry(&svg).unwrap();
            assert_eq!(back.to_graph().unwrap(), inst.graph);
            // Affine pixel placement preserves strict nesting too.
            assert_eq!(
                back.nested_inside_profile().per_vertex,
                cert.representation.nested_inside_profile().per_vertex
            );
        }
    }

    #[test]
    fn roles_pick_their_tones() {
        let inst = gen_drop_pair(3, 1).unwrap();
        let cert = impropriety(&inst.graph).unwrap();
        let style = RenderStyle {
            basepoint: Some(inst.constructed_basepoint),
            designated: Some(inst.designated_vertex),
            relocating: inst.relocating_clique.clone(),
            compact_rows: false,
        };
        let svg = render_svg(&inst.graph, &cert.representation, &style).unwrap();
        for hex in ["#000000", "#505050", "#c0c0c0", "#858585"] {
            assert!(svg.contains(hex), "missing tone {hex}");
        }
        // Exactly one basepoint line gets the heavier stroke.
        assert_eq!(svg.matches("stroke-width=\"3\"").count(), 1);
    }

    #[test]
    fn tikz_body_uses_only_predefined_colors() {
        let g = claw();
        let cert = impropriety(&g).unwrap();
        let style = RenderStyle {
            basepoint: Some(0),
            ..RenderStyle::default()
        };
        let tikz = render_tikz(&g, &cert.representation, &style).unwrap();
        assert!(tikz.starts_with("\\begin{tikzpicture}"));
        assert!(tikz.trim_end().ends_with("\\end{tikzpicture}"));
        assert!(tikz.contains("\\draw[black, line width=1.6pt]"));
        assert!(tikz.contains("\\draw[gray, line width=1.1pt]"));
        assert!(!tikz.contains("definecolor"));
    }

    #[test]
    fn output_is_deterministic() {
        let inst = gen_drop_pair(4, 1).unwrap();
        let cert = impropriety(&inst.graph).unwrap();
        let style = RenderStyle {
            basepoint: Some(inst.constructed_basepoint),
            designated: Some(inst.designated_vertex),
            relocating: inst.relocating_clique.clone(),
            compact_rows: true,
        };
        let svg1 = render_svg(&inst.graph, &cert.representation, &style).unwrap();
        let svg2 = render_svg(&inst.graph, &cert.representation, &style).unwrap();
        assert_eq!(svg1, svg2);
        let t1 = render_tikz(&inst.graph, &cert.representation, &style).unwrap();
        let t2 = render_tikz(&inst.graph, &cert.representation, &style).unwrap();
        assert_eq!(t1, t2);
    }

    #[test]
    fn mismatched_representation_is_rejected() {
        let g = claw();
        let other = impropriety(&gen_star(4)).unwrap().representation;
        let err = render_svg(&g, &other, &RenderStyle::default()).unwrap_err();
        assert!(matches!(err, Error::InvalidRepresentation(_)));
        let style = RenderStyle {
            basepoint: Some(9),
            ..RenderStyle::default()
        };
        let cert = impropriety(&g).unwrap();
        let err = render_svg(&g, &cert.representation, &style).unwrap_err();
        assert!(matches!(err, Error::InvalidParameters(_)));
    }

    #[test]
    fn negative_endpoints_are_shifted_into_view() {
        let g = Graph::from_edges(2, &[(0, 1)]);
        let rep = IntervalRepresentation {
            n: 2,
            intervals: vec![(-10, -2), (-5, 3)],
        };
        let svg = render_svg(&g, &rep, &RenderStyle::default()).unwrap();
        let back = parse_svg_geometry(&svg).unwrap();
        assert!(back.intervals.iter().all(|&(l, r)| l >= 0 && l < r));
        assert_eq!(back.to_graph().unwrap(), g);
    }

    #[test]
    fn empty_graph_renders_and_parses() {
        let g = Graph::new(0);
        let rep = IntervalRepresentation {
            n: 0,
            intervals: vec![],
        };
        let svg = render_svg(&g, &rep, &RenderStyle::default()).unwrap();
        let back = parse_svg_geometry(&svg).unwrap();
        assert_eq!(back.n, 0);
    }

    #[test]
    fn corrupted_geometry_reports_the_line() {
        let g = claw();
        let cert = impropriety(&g).unwrap();
        let svg = render_svg(&g, &cert.representation, &RenderStyle::default()).unwrap();
        let broken = svg.replace("data-v=\"2\"", "data-v=\"9\"");
        match parse_svg_geometry(&broken).unwrap_err() {
            Error::Parse { message, .. } => assert!(message.contains("out of range")),
            other => panic!("unexpected error {other:?}"),
        }
        let twice = svg.replace("data-v=\"3\"", "data-v=\"1\"");
        assert!(matches!(
            parse_svg_geometry(&twice).unwrap_err(),
            Error::Parse { .. }
        ));
    }
}
