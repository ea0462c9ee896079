//! Text and SVG pictures of Young diagrams. Output is byte-stable for a given
//! diagram and options.

use std::fmt::Write as _;

use crate::young::YoungDiagram;

/// Side of one box in SVG output, in pixels.
pub const SVG_CELL: u32 = 20;
/// Fill for the rotated complement region.
pub const OVERLAY_FILL: &str = "#FFC0CB";

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RenderOptions {
    /// Write the hook length in every box.
    pub hooks: bool,
    /// Mark the rest of the bounding rectangle, which is the complement
    /// diagram rotated by 180°.
    pub complement_overlay: bool,
}

/// One character per box (`#`, overlay `.`), or right-aligned hook lengths
/// separated by spaces when `hooks` is set.
pub fn ascii(diagram: &YoungDiagram, options: RenderOptions) -> String {
    let hooks = diagram.hooks();
    let cell = if options.hooks {
        hooks.max().map_or(1, |h| h.to_string().len())
    } else {
        1
    };
    let width = diagram.width() as usize;
    let mut out = String::new();
    for (i, &len) in diagram.rows().iter().enumerate() {
        let cols = if options.complement_overlay {
            width
        } else {
            len as usize
        };
        let cells: Vec<String> = (0..cols)
            .map(|j| match (hooks.get(i, j), options.hooks) {
                (Some(h), true) => format!("{h:>cell$}"),
                (Some(_), false) => "#".to_string(),
                (None, _) => format!("{:>cell$}", "."),
            })
            .collect();
        out.push_str(&cells.join(if options.hooks { " " } else { "" }));
        out.push('\n');
    }
    out
}

/// Unit squares of [`SVG_CELL`] pixels; overlay boxes filled [`OVERLAY_FILL`].
pub fn svg(diagram: &YoungDiagram, options: RenderOptions) -> String {
    let width = diagram.width() * SVG_CELL;
    let height = diagram.height() as u32 * SVG_CELL;
    let hooks = diagram.hooks();
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    for (i, &len) in diagram.rows().iter().enumerate() {
        let cols = if options.complement_overlay {
            diagram.width()
        } else {
            len
        };
        for j in 0..cols {
            let (x, y) = (j * SVG_CELL, i as u32 * SVG_CELL);
            let fill = if j < len { "#FFFFFF" } else { OVERLAY_FILL };
            writeln!(
                out,
                r##"  <rect x="{x}" y="{y}" width="{SVG_CELL}" height="{SVG_CELL}" fill="{fill}" stroke="#000000" stroke-width="1"/>"##
            )
            .unwrap();
            if let (true, Some(h)) = (options.hooks, hooks.get(i, j as usize)) {
                writeln!(
                    out,
                    r#"  <text x="{}" y="{}" font-family="monospace" font-size="10" text-anchor="middle" dominant-baseline="central">{h}</text>"#,
                    x + SVG_CELL / 2,
                    y + SVG_CELL / 2
                )
                .unwrap();
            }
        }
    }
    out.push_str("</svg>\n");
    out
}
