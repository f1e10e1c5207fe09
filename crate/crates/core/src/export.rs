//! Grid diagrams (SVG) and intersection graphs (DOT) for certificates.
//!
//! Output depends only on the certificate, so identical input gives
//! byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use crate::certificate::{CycleCertificate, CycleKind};
use crate::hypergraph::GridVertex;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Svg,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(ExportFormat::Dot),
            "svg" => Ok(ExportFormat::Svg),
            other => Err(format!(
                "unknown export format {other:?} (expected dot or svg)"
            )),
        }
    }
}

pub fn export(cert: &CycleCertificate, format: ExportFormat) -> String {
    match format {
        ExportFormat::Dot => to_dot(cert),
        ExportFormat::Svg => to_svg(cert),
    }
}

/// Undirected graph with one node per cycle edge and an arc, labelled with
/// the intersection size, for every pair of edges that meet.
pub fn to_dot(cert: &CycleCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph cycle {{");
    let _ = writeln!(out, "  label=\"{} {} cycle\";", cert.hypergraph, cert.kind);
    let _ = writeln!(out, "  node [shape=box];");
    for i in 0..cert.edges.len() {
        let _ = writeln!(out, "  e{i} [label=\"{i}\"];");
    }
    for (i, a) in cert.edges.iter().enumerate() {
        for (j, b) in cert.edges.iter().enumerate().skip(i + 1) {
            let size = a.intersection_size(b);
            if size > 0 {
                let _ = writeln!(out, "  e{i} -- e{j} [label=\"{size}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

const CELL: usize = 20;
const MARGIN: usize = 16;
const CAPTION: usize = 18;
const PANELS_PER_ROW: usize = 6;

/// One panel per cycle edge, each showing the q × n grid with classes as
/// columns and row 0 at the top. The edge's vertices are outlined; those it
/// shares with the next edge of the cycle are shaded. Berge certificates get
/// an extra leading panel with the 1-based cyclic vertex order.
pub fn to_svg(cert: &CycleCertificate) -> String {
    let graph = &cert.hypergraph;
    let (n, q) = (graph.n(), graph.q());
    let panel_w = n * CELL + MARGIN;
    let panel_h = q * CELL + MARGIN + CAPTION;
    let with_overview = cert.kind == CycleKind::Berge && !cert.vertex_sequence.is_empty();
    let panels = cert.edges.len() + usize::from(with_overview);
    let columns = panels.clamp(1, PANELS_PER_ROW);
    let rows = panels.div_ceil(columns).max(1);
    let width = columns * panel_w + MARGIN;
    let height = rows * panel_h + MARGIN + CAPTION;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\" font-family=\"sans-serif\" font-size=\"10\">"
    );
    let _ = writeln!(
        out,
        "<text x=\"{MARGIN}\" y=\"{}\" font-size=\"12\">{} {} cycle, {} edges</text>",
        MARGIN,
        graph,
        cert.kind,
        cert.edges.len()
    );

    let origin = |panel: usize| {
        let x = MARGIN + (panel % columns) * panel_w;
        let y = MARGIN + CAPTION + (panel / columns) * panel_h;
        (x, y)
    };

    let mut panel = 0;
    if with_overview {
        let (x0, y0) = origin(panel);
        let _ = writeln!(
            out,
            "<g class=\"vertex-order\" transform=\"translate({x0},{y0})\">"
        );
        let _ = writeln!(out, "<text x=\"0\" y=\"10\">order</text>");
        for (index, v) in cert.vertex_sequence.iter().enumerate() {
            let (cx, cy) = cell_center(v.class, v.row);
            let _ = writeln!(
                out,
                "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"7\" fill=\"white\" stroke=\"#999\"/><text x=\"{cx}\" y=\"{}\" text-anchor=\"middle\">{}</text>",
                cy + 3,
                index + 1
            );
        }
        out.push_str("</g>\n");
        panel += 1;
    }

    let p = cert.edges.len();
    for (i, edge) in cert.edges.iter().enumerate() {
        let next = &cert.edges[(i + 1) % p];
        let (x0, y0) = origin(panel);
        let _ = writeln!(
            out,
            "<g class=\"edge-frame\" id=\"e{i}\" transform=\"translate({x0},{y0})\">"
        );
        let _ = writeln!(out, "<text x=\"0\" y=\"10\">e{}</text>", i + 1);
        for class in 0..n {
            for row in 0..q {
                let v = GridVertex::new(class, row);
                let (cx, cy) = cell_center(class, row);
                let (fill, stroke, stroke_width) = if !edge.contains(&v) {
                    ("white", "#bbb", 1)
                } else if p > 1 && next.contains(&v) {
                    ("#555", "black", 2)
                } else {
                    ("#ddd", "black", 2)
                };
                let _ = writeln!(
                    out,
                    "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"6\" fill=\"{fill}\" stroke=\"{stroke}\" stroke-width=\"{stroke_width}\"/>"
                );
            }
        }
        out.push_str("</g>\n");
        panel += 1;
    }
    out.push_str("</svg>\n");
    out
}

fn cell_center(class: usize, row: usize) -> (usize, usize) {
    (class * CELL + CELL / 2, CAPTION + row * CELL + CELL / 2 - 4)
}
