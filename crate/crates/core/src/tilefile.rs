//! Plain-text tile-set documents.
//!
//! The canonical format is line-oriented and diff-friendly:
//!
//! ```text
//! tilecalc tileset v1
//! tau 2
//!
//! glue Lc0 1
//! glue r= 1
//!
//! tile C00e compare east-input N=t000 E=r= S=p00 W=r=
//!
//! seed 0 0 S0
//! ```
//!
//! Records:
//!
//! * `tau <n>` — the attachment threshold; must precede all other records.
//! * `glue <label> <strength>` — declares one glue. The null glue is spelled
//!   `0` on tile sides and is never declared.
//! * `tile <name> <category> <mode> N=<g> E=<g> S=<g> W=<g>` — one tile; the
//!   four sides appear in exactly that order and every non-null glue must be
//!   declared earlier in the file.
//! * `seed <x> <y> <name>` — one pre-placed tile of the starting
//!   configuration (optional section).
//! * `step <x> <y> <name>` — one recorded attachment, in growth order
//!   (optional section; what makes a document a *trace* document).
//!
//! `#` starts a comment; blank lines are ignored. [`serialize`] followed by
//! [`parse`] reproduces the tile set exactly (semantic equality), and
//! serializing the parsed copy reproduces the document byte for byte; the
//! same holds for [`serialize_trace`].

use std::fmt::Write as _;

use crate::engine::{
    validate_determinism, AttachMode, AttachmentEvent, Category, Position, SeedConfiguration, Tile,
    TileSet, NULL_GLUE, NULL_GLUE_LABEL,
};
use crate::error::{ParseError, TileFileError};

const HEADER: &str = "tilecalc tileset v1";

/// A parsed document: the tile set, its optional seed section, and any
/// recorded attachment steps (empty unless the document is a trace).
#[derive(Debug, Clone)]
pub struct TileFile {
    pub tileset: TileSet,
    pub seed: Option<SeedConfiguration>,
    pub trace: Vec<AttachmentEvent>,
}

fn writable(token: &str) -> Result<&str, TileFileError> {
    if token.is_empty() || token.chars().any(char::is_whitespace) {
        return Err(TileFileError::UnwritableToken(token.to_string()));
    }
    Ok(token)
}

/// Render a tile set (and optionally a seed configuration) as a document.
pub fn serialize(
    tileset: &TileSet,
    seed: Option<&SeedConfiguration>,
) -> Result<String, TileFileError> {
    let mut out = String::new();
    let _ = writeln!(out, "{HEADER}");
    let _ = writeln!(out, "tau {}", tileset.tau());
    let _ = writeln!(out);
    for (label, strength) in tileset.vocab().entries() {
        let _ = writeln!(out, "glue {} {}", writable(label)?, strength);
    }
    let _ = writeln!(out);
    for id in 0..tileset.len() {
        let tile = tileset.tile(id);
        let _ = writeln!(
            out,
            "tile {} {} {} N={} E={} S={} W={}",
            writable(&tile.name)?,
            tile.category.as_str(),
            tile.attach.as_str(),
            tileset.glue_label(tile.north),
            tileset.glue_label(tile.east),
            tileset.glue_label(tile.south),
            tileset.glue_label(tile.west),
        );
    }
    if let Some(seed) = seed {
        if !seed.is_empty() {
            let _ = writeln!(out);
            for &(pos, id) in seed.placements() {
                let _ = writeln!(out, "seed {} {} {}", pos.x, pos.y, tileset.tile(id).name);
            }
        }
    }
    Ok(out)
}

/// Render a full growth record: the tile set, the seed, and every recorded
/// attachment in order. [`parse`] restores all three; replaying the trace
/// over the seed reconstructs the final assembly.
pub fn serialize_trace(
    tileset: &TileSet,
    seed: &SeedConfiguration,
    trace: &[AttachmentEvent],
) -> Result<String, TileFileError> {
    let mut out = serialize(tileset, Some(seed))?;
    if !trace.is_empty() {
        let _ = writeln!(out);
        for event in trace {
            let _ = writeln!(
                out,
                "step {} {} {}",
                event.position.x,
                event.position.y,
                tileset.tile(event.tile).name
            );
        }
    }
    Ok(out)
}

fn bad(line: usize, message: impl Into<String>) -> TileFileError {
    TileFileError::Parse(ParseError::Document {
        line,
        message: message.into(),
    })
}

/// Parse a document produced by [`serialize`] (or written by hand).
pub fn parse(input: &str) -> Result<TileFile, TileFileError> {
    let mut saw_header = false;
    let mut tileset: Option<TileSet> = None;
    let mut seed: Option<SeedConfiguration> = None;
    let mut trace: Vec<AttachmentEvent> = Vec::new();

    for (idx, raw) in input.lines().enumerate() {
        let line = idx + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if !saw_header {
            if text == HEADER {
                saw_header = true;
                continue;
            }
            if let Some(version) = text.strip_prefix("tilecalc tileset ") {
                return Err(bad(line, format!("unsupported format version `{version}`")));
            }
            return Err(bad(line, format!("expected `{HEADER}` header")));
        }
        let mut tokens = text.split_whitespace();
        let record = tokens.next().expect("non-empty line has a first token");
        match record {
            "tau" => {
                if tileset.is_some() {
                    return Err(bad(line, "`tau` declared twice"));
                }
                let value = tokens
                    .next()
                    .ok_or_else(|| bad(line, "`tau` needs a value"))?;
                let tau: u32 = value
                    .parse()
                    .map_err(|_| bad(line, format!("`{value}` is not a threshold value")))?;
                if tokens.next().is_some() {
                    return Err(bad(line, "trailing tokens after `tau`"));
                }
                tileset = Some(TileSet::new(tau));
            }
            "glue" => {
                let ts = tileset
                    .as_mut()
                    .ok_or_else(|| bad(line, "`tau` must come before `glue` records"))?;
                let label = tokens
                    .next()
                    .ok_or_else(|| bad(line, "`glue` needs a label and a strength"))?;
                let value = tokens
                    .next()
                    .ok_or_else(|| bad(line, "`glue` needs a strength"))?;
                if tokens.next().is_some() {
                    return Err(bad(line, "trailing tokens after `glue`"));
                }
                if label == NULL_GLUE_LABEL {
                    return Err(bad(line, "the null glue `0` is implicit and never declared"));
                }
                let strength: u8 = value
                    .parse()
                    .map_err(|_| bad(line, format!("`{value}` is not a glue strength")))?;
                if ts.vocab().lookup(label).is_some() {
                    return Err(bad(line, format!("glue `{label}` declared twice")));
                }
                ts.intern_glue(label, strength);
            }
            "tile" => {
                let ts = tileset
                    .as_mut()
                    .ok_or_else(|| bad(line, "`tau` must come before `tile` records"))?;
                let name = tokens
                    .next()
                    .ok_or_else(|| bad(line, "`tile` needs a name"))?;
                if ts.tile_by_name(name).is_some() {
                    return Err(bad(line, format!("tile `{name}` declared twice")));
                }
                let category = tokens
                    .next()
                    .and_then(Category::parse)
                    .ok_or_else(|| bad(line, "`tile` needs a known category"))?;
                let attach = tokens
                    .next()
                    .and_then(AttachMode::parse)
                    .ok_or_else(|| bad(line, "`tile` needs a known attach mode"))?;
                let mut sides = [NULL_GLUE; 4];
                for (slot, prefix) in sides.iter_mut().zip(["N=", "E=", "S=", "W="]) {
                    let token = tokens
                        .next()
                        .ok_or_else(|| bad(line, "`tile` needs N= E= S= W= sides"))?;
                    let label = token.strip_prefix(prefix).ok_or_else(|| {
                        bad(line, format!("expected `{prefix}...`, found `{token}`"))
                    })?;
                    *slot = if label == NULL_GLUE_LABEL {
                        NULL_GLUE
                    } else {
                        ts.vocab()
                            .lookup(label)
                            .ok_or_else(|| bad(line, format!("unknown glue `{label}`")))?
                    };
                }
                if tokens.next().is_some() {
                    return Err(bad(line, "trailing tokens after `tile`"));
                }
                let [north, east, south, west] = sides;
                ts.add_tile(Tile {
                    name: name.to_string(),
                    north,
                    east,
                    south,
                    west,
                    category,
                    attach,
                });
            }
            "seed" | "step" => {
                let ts = tileset
                    .as_ref()
                    .ok_or_else(|| bad(line, format!("`tau` must come before `{record}` records")))?;
                let coord = |t: Option<&str>| -> Result<i32, TileFileError> {
                    let t = t
                        .ok_or_else(|| bad(line, format!("`{record}` needs x, y, and a tile name")))?;
                    t.parse()
                        .map_err(|_| bad(line, format!("`{t}` is not a coordinate")))
                };
                let x = coord(tokens.next())?;
                let y = coord(tokens.next())?;
                let name = tokens
                    .next()
                    .ok_or_else(|| bad(line, format!("`{record}` needs a tile name")))?;
                if tokens.next().is_some() {
                    return Err(bad(line, format!("trailing tokens after `{record}`")));
                }
                let id = ts
                    .tile_by_name(name)
                    .ok_or_else(|| bad(line, format!("unknown tile `{name}`")))?;
                if record == "seed" {
                    seed.get_or_insert_with(SeedConfiguration::new)
                        .place(Position::new(x, y), id)
                        .map_err(|_| bad(line, format!("seed places two tiles at ({x}, {y})")))?;
                } else {
                    trace.push(AttachmentEvent {
                        position: Position::new(x, y),
                        tile: id,
                        step_index: trace.len(),
                    });
                }
            }
            other => {
                return Err(bad(line, format!("unknown record `{other}`")));
            }
        }
    }
    if !saw_header {
        return Err(bad(1, format!("expected `{HEADER}` header")));
    }
    let tileset = tileset.ok_or_else(|| bad(1, "document has no `tau` record"))?;
    Ok(TileFile {
        tileset,
        seed,
        trace,
    })
}

/// Export in the classic grid-simulator layout: indexed edges in N/E/S/W
/// order plus a binding-strength table, one commented line per tile.
///
/// Only validated-deterministic sets are exported; anything else would
/// simulate differently from this engine.
pub fn export_xgrow(tileset: &TileSet) -> Result<String, TileFileError> {
    let report = validate_determinism(tileset);
    if !report.is_empty() {
        return Err(TileFileError::NonDeterministic(report.to_string()));
    }
    let bindings: Vec<(&str, u8)> = tileset.vocab().entries().collect();
    let mut out = String::new();
    let _ = writeln!(out, "num tile types={}", tileset.len());
    let _ = writeln!(out, "num binding types={}", bindings.len());
    let _ = writeln!(out, "tile edges={{");
    for id in 0..tileset.len() {
        let tile = tileset.tile(id);
        let _ = writeln!(
            out,
            "{{{} {} {} {}}}   ; {} ({}, {})",
            tile.north,
            tile.east,
            tile.south,
            tile.west,
            tile.name,
            tile.category.as_str(),
            tile.attach.as_str(),
        );
    }
    let _ = writeln!(out, "}}");
    let strengths: Vec<String> = bindings.iter().map(|&(_, s)| s.to_string()).collect();
    let _ = writeln!(out, "binding strengths={{{}}}", strengths.join(" "));
    for (i, &(label, _)) in bindings.iter().enumerate() {
        let _ = writeln!(out, "; binding {} = {}", i + 1, label);
    }
    Ok(out)
}
