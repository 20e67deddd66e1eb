//! Deterministic SVG rendering of residue designs.
//!
//! Nail k sits on the rim at angle 2*pi*k/n, with nail 0 at the 3 o'clock
//! position and numbering running counterclockwise; the y axis is flipped
//! for screen coordinates. Coordinates are rounded to three decimals and
//! elements are emitted in a fixed order, so identical inputs produce
//! byte-identical documents.

use std::f64::consts::TAU;
use std::fmt::Write;

use crate::designgraph::{DesignGraph, EdgeKind};
use crate::error::Error;

/// Visual knobs for [`to_svg`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderStyle {
    /// Width and height of the square canvas, in pixels.
    pub canvas_size: f64,
    /// Gap between the rim circle and the canvas edge, in pixels.
    pub margin: f64,
    /// Stroke width for chords and the rim, in pixels.
    pub stroke_width: f64,
    /// Draw doubled chords heavier/red and mark degenerate nails.
    pub highlight_doubled: bool,
    /// Draw nail numbers outside the rim.
    pub show_labels: bool,
    /// Label every k-th nail (1 = all nails). Ignored unless `show_labels`.
    pub label_every: u64,
}

impl Default for RenderStyle {
    fn default() -> Self {
        RenderStyle {
            canvas_size: 800.0,
            margin: 40.0,
            stroke_width: 1.0,
            highlight_doubled: false,
            show_labels: false,
            label_every: 1,
        }
    }
}

impl RenderStyle {
    /// Checks the style invariants: a positive drawing area, a positive
    /// stroke, and a positive label step.
    pub fn validate(&self) -> Result<(), Error> {
        if !self.canvas_size.is_finite()
            || !self.margin.is_finite()
            || !self.stroke_width.is_finite()
        {
            return Err(Error::BadStyle("all dimensions must be finite".into()));
        }
        if self.margin < 0.0 {
            return Err(Error::BadStyle("margin must be nonnegative".into()));
        }
        if self.canvas_size <= 2.0 * self.margin {
            return Err(Error::BadStyle(format!(
                "canvas size {} leaves no room inside margin {}",
                self.canvas_size, self.margin
            )));
        }
        if self.stroke_width <= 0.0 {
            return Err(Error::BadStyle("stroke width must be positive".into()));
        }
        if self.label_every == 0 {
            return Err(Error::BadStyle("label step must be at least 1".into()));
        }
        Ok(())
    }
}

/// Position of nail k on the rim, in canvas coordinates.
fn nail_position(k: u64, n: u64, center: f64, radius: f64) -> (f64, f64) {
    let theta = TAU * k as f64 / n as f64;
    (center + radius * theta.cos(), center - radius * theta.sin())
}

/// Renders a design to a standalone SVG document.
///
/// The document contains exactly one rim circle, one circle per nail, and
/// one line per (deduplicated) chord, in that drawing order. When
/// `highlight_doubled` is set, doubled chords carry `class="chord doubled"`
/// with a heavier red stroke and degenerate nails carry
/// `class="nail degenerate"`.
pub fn to_svg(graph: &DesignGraph, style: &RenderStyle) -> Result<String, Error> {
    style.validate()?;
    let size = style.canvas_size;
    let center = size / 2.0;
    let radius = size / 2.0 - style.margin;
    let nail_radius = 2.0 * style.stroke_width;
    let sw = style.stroke_width;

    let mut out = String::new();
    let w = &mut out;
    // Writing to a String cannot fail; unwrap via expect keeps fmt::Write happy.
    let fmt3 = |v: f64| format!("{v:.3}");
    writeln!(w, r#"<?xml version="1.0" encoding="UTF-8"?>"#).expect("string write");
    writeln!(
        w,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" viewBox="0 0 {size} {size}">"#
    )
    .expect("string write");
    writeln!(w, "<desc>residue design n={} a={}</desc>", graph.n, graph.a).expect("string write");
    writeln!(
        w,
        r##"<circle class="rim" cx="{c}" cy="{c}" r="{r}" fill="none" stroke="#222222" stroke-width="{sw}"/>"##,
        c = fmt3(center),
        r = fmt3(radius),
    )
    .expect("string write");

    let mut edges = graph.edges.clone();
    edges.sort_by_key(|e| (e.s, e.t));
    for edge in &edges {
        let (x1, y1) = nail_position(edge.s, graph.n, center, radius);
        let (x2, y2) = nail_position(edge.t, graph.n, center, radius);
        let doubled = style.highlight_doubled && edge.kind == EdgeKind::Doubled;
        let class = if doubled { "chord doubled" } else { "chord" };
        let stroke = if doubled { "#cc2222" } else { "#4466aa" };
        let width = if doubled { 2.0 * sw } else { sw };
        writeln!(
            w,
            r#"<line class="{class}" x1="{}" y1="{}" x2="{}" y2="{}" stroke="{stroke}" stroke-width="{width}"/>"#,
            fmt3(x1),
            fmt3(y1),
            fmt3(x2),
            fmt3(y2),
        )
        .expect("string write");
    }

    for k in 0..graph.n {
        let (x, y) = nail_position(k, graph.n, center, radius);
        let degenerate =
            style.highlight_doubled && graph.degenerate_nails.binary_search(&k).is_ok();
        let (class, fill) = if degenerate {
            ("nail degenerate", "#cc2222")
        } else {
            ("nail", "#222222")
        };
        writeln!(
            w,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" fill="{fill}"/>"#,
            fmt3(x),
            fmt3(y),
            fmt3(nail_radius),
        )
        .expect("string write");
    }

    if style.show_labels {
        let label_radius = radius + style.margin * 0.5;
        let font_size = (style.margin * 0.3).max(10.0);
        for k in (0..graph.n).step_by(style.label_every.max(1) as usize) {
            let (x, y) = nail_position(k, graph.n, center, label_radius);
            writeln!(
                w,
                r#"<text x="{}" y="{}" font-size="{}" font-family="sans-serif" text-anchor="middle" dominant-baseline="middle">{k}</text>"#,
                fmt3(x),
                fmt3(y),
                fmt3(font_size),
            )
            .expect("string write");
        }
    }

    writeln!(w, "</svg>").expect("string write");
    Ok(out)
}
