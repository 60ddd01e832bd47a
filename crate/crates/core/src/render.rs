//! Assembly visualization: terminal text grids and standalone SVG.

use std::fmt::Write as _;

use crate::engine::{Assembly, Category, Position, TileSet};

/// Fill color for each tile category, matching the convention used across
/// the crate: warm colors for the computing rows, muted ones for scaffold.
pub fn category_color(category: Category) -> &'static str {
    match category {
        Category::Compare => "#e0524e",
        Category::Shift => "#e8953d",
        Category::SubShift => "#4a7fd4",
        Category::Insert => "#53a957",
        Category::Dot => "#e8d44d",
        Category::Input => "#9a9a9a",
        Category::Boundary => "#d8d8d8",
        Category::Adder => "#9065c9",
    }
}

/// Render the assembly as a text grid, top row first.
///
/// Every occupied cell shows the tile's category letter and its north glue
/// label (the face results are read from), e.g. `C:t101`; empty cells are
/// dots. Rows are prefixed with their y coordinate.
pub fn render_ascii(assembly: &Assembly, tileset: &TileSet) -> String {
    if assembly.len() == 0 {
        return String::from("(empty assembly)\n");
    }
    let (min, max) = assembly.bounds();
    let label_width = assembly
        .placed()
        .values()
        .map(|&id| tileset.glue_label(tileset.tile(id).north).len())
        .max()
        .unwrap_or(1);
    let cell = 2 + label_width;
    let margin = max.y.to_string().len().max(min.y.to_string().len());
    let mut out = String::new();
    for y in (min.y..=max.y).rev() {
        let _ = write!(out, "{y:>margin$} |");
        for x in min.x..=max.x {
            match assembly.tile_at(Position::new(x, y)) {
                Some(id) => {
                    let tile = tileset.tile(id);
                    let north = tileset.glue_label(tile.north);
                    let _ = write!(
                        out,
                        " {}:{north}{}",
                        tile.category.letter(),
                        " ".repeat(label_width - north.len())
                    );
                }
                None => {
                    let _ = write!(out, " {}", ".".repeat(cell));
                }
            }
        }
        out.push('\n');
    }
    let _ = write!(out, "{:>margin$} +", "");
    let _ = writeln!(out, "{}", format!("-{}", "-".repeat(cell)).repeat((max.x - min.x + 1) as usize));
    let _ = writeln!(out, "{:>margin$}   x = {}..{}", "", min.x, max.x);
    out
}

fn xml_escape(s: &str) -> String {
    let mut out = String::with_capacity(s.len());
    for c in s.chars() {
        match c {
            '&' => out.push_str("&amp;"),
            '<' => out.push_str("&lt;"),
            '>' => out.push_str("&gt;"),
            '"' => out.push_str("&quot;"),
            _ => out.push(c),
        }
    }
    out
}

/// Render the assembly as a standalone SVG document.
///
/// One square per tile, filled by category, labeled with the tile name;
/// hovering shows the four glue labels. The lattice is drawn y-up.
pub fn render_svg(assembly: &Assembly, tileset: &TileSet) -> String {
    const CELL: i64 = 34;
    const PAD: i64 = 8;
    let (min, max) = assembly.bounds();
    let (min, max) = if assembly.len() == 0 {
        (Position::new(0, 0), Position::new(0, 0))
    } else {
        (min, max)
    };
    let cols = (max.x - min.x + 1) as i64;
    let rows = (max.y - min.y + 1) as i64;
    let width = cols * CELL + 2 * PAD;
    let height = rows * CELL + 2 * PAD;
    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" \
         viewBox=\"0 0 {width} {height}\" font-family=\"monospace\">"
    );
    let _ = writeln!(
        out,
        "<rect width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>"
    );
    let mut cells: Vec<(Position, usize)> = assembly.placed().iter().map(|(&p, &t)| (p, t)).collect();
    cells.sort();
    for (pos, id) in cells {
        let tile = tileset.tile(id);
        let x = PAD + (pos.x - min.x) as i64 * CELL;
        let y = PAD + (max.y - pos.y) as i64 * CELL;
        let name = xml_escape(&tile.name);
        let _ = writeln!(
            out,
            "<g><rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"{}\" \
             stroke=\"#333333\" stroke-width=\"1\"/>",
            category_color(tile.category)
        );
        let _ = writeln!(
            out,
            "<title>{name} @ ({}, {})  N={} E={} S={} W={}</title>",
            pos.x,
            pos.y,
            xml_escape(tileset.glue_label(tile.north)),
            xml_escape(tileset.glue_label(tile.east)),
            xml_escape(tileset.glue_label(tile.south)),
            xml_escape(tileset.glue_label(tile.west)),
        );
        let _ = writeln!(
            out,
            "<text x=\"{}\" y=\"{}\" font-size=\"9\" text-anchor=\"middle\" fill=\"#111111\">{name}</text></g>",
            x + CELL / 2,
            y + CELL / 2 + 3,
        );
    }
    let _ = writeln!(out, "</svg>");
    out
}
