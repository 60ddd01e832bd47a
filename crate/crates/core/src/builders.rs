//! Construction of every tile set and seed configuration in the crate.
//!
//! Geometry conventions used throughout:
//!
//! * Numbers are written most-significant-bit **west**. The input row sits at
//!   y = 0 with a west corner `S0` at x = 0, data pair tiles at x = 1..=W,
//!   and an east corner at x = W + 1. Growth is strictly upward.
//! * Rows alternate direction: compare rows grow east-to-west (the running
//!   relation and the exact borrow both depend on the less significant
//!   suffix, which lies east), register and insert rows grow west-to-east
//!   (the right-shift carry moves toward the least significant bit).
//! * The frame columns at x = 0 and x = W + 1 sequence the alternation with
//!   a small number of strength-2 glues; everywhere else glue strength is 1,
//!   so every interior attachment is cooperative.

use num_bigint::BigUint;

use crate::engine::{
    AttachMode, Category, GlueId, Position, SeedConfiguration, Tile, TileId, TileSet, NULL_GLUE,
};
use crate::error::TaskError;
use crate::fixed::biguint_bits;

/// Relation symbols, in the tile-name order `l`, `e`, `g`.
const RELATIONS: [(char, &str); 3] = [('l', "r<"), ('e', "r="), ('g', "r>")];

/// Thin wrapper so tile definitions read as glue-label tables.
struct Build {
    ts: TileSet,
}

impl Build {
    fn new() -> Self {
        Build {
            ts: TileSet::new(2),
        }
    }

    fn g1(&mut self, label: &str) -> GlueId {
        self.ts.intern_glue(label, 1)
    }

    fn g2(&mut self, label: &str) -> GlueId {
        self.ts.intern_glue(label, 2)
    }

    #[allow(clippy::too_many_arguments)]
    fn tile(
        &mut self,
        name: String,
        category: Category,
        attach: AttachMode,
        north: GlueId,
        east: GlueId,
        south: GlueId,
        west: GlueId,
    ) -> TileId {
        self.ts.add_tile(Tile {
            name,
            north,
            east,
            south,
            west,
            category,
            attach,
        })
    }
}

fn pair(a: char, b: char) -> String {
    format!("p{a}{b}")
}

fn triple(a: char, b: char, d: u8) -> String {
    format!("t{a}{b}{d}")
}

fn bit_char(b: u8) -> char {
    if b == 0 {
        '0'
    } else {
        '1'
    }
}

fn marker(j: usize, c: u8) -> String {
    format!("m{j}.{c}")
}

/// The comparison tiles: 12 variants over (south pair, east relation).
///
/// Scanning east to west, the relation out the west side is the comparison
/// of the suffix starting at this column: a differing column overrides
/// whatever came from the east. The north face re-emits the pair together
/// with the exact borrow `d` into this column, which equals "the suffix east
/// of here is smaller" — i.e. the east-in relation being `<`.
fn add_compare_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            for (rel, rel_glue) in RELATIONS {
                let out = if a == q {
                    rel_glue
                } else if a < q {
                    "r<"
                } else {
                    "r>"
                };
                let d = u8::from(rel == 'l');
                let north = triple(bit_char(a), bit_char(q), d);
                let north = b.g1(&north);
                let east = b.g1(rel_glue);
                let south = pair(bit_char(a), bit_char(q));
                let south = b.g1(&south);
                let west = b.g1(out);
                ids.push(b.tile(
                    format!("C{a}{q}{rel}"),
                    Category::Compare,
                    AttachMode::EastInput,
                    north,
                    east,
                    south,
                    west,
                ));
            }
        }
    }
    ids
}

/// The 8 right-shift tiles: the west neighbor's right bit `c` lands here,
/// our own right bit `b` moves on east; the left component passes through.
fn add_shift_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            for c in 0u8..2 {
                let north = pair(bit_char(a), bit_char(c));
                let north = b.g1(&north);
                let east = b.g1(&format!("h{q}"));
                let south = pair(bit_char(a), bit_char(q));
                let south = b.g1(&south);
                let west = b.g1(&format!("h{c}"));
                ids.push(b.tile(
                    format!("H{a}{q}{c}"),
                    Category::Shift,
                    AttachMode::WestInput,
                    north,
                    east,
                    south,
                    west,
                ));
            }
        }
    }
    ids
}

/// The 16 subtract-and-shift tiles. South carries (minuend bit `a`,
/// subtrahend bit `q`, exact borrow `d` precomputed by the compare row
/// below); the north left component is the difference bit, the right
/// component is the west neighbor's `q` — the subtrahend is halved in the
/// same pass.
fn add_subshift_tiles(b: &mut Build, carry: &str, name: &str) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            for d in 0u8..2 {
                for c in 0u8..2 {
                    let diff = a ^ q ^ d;
                    let north = pair(bit_char(diff), bit_char(c));
                    let north = b.g1(&north);
                    let east = b.g1(&format!("{carry}{q}"));
                    let south = triple(bit_char(a), bit_char(q), d);
                    let south = b.g1(&south);
                    let west = b.g1(&format!("{carry}{c}"));
                    ids.push(b.tile(
                        format!("{name}{a}{q}{d}{c}"),
                        Category::SubShift,
                        AttachMode::WestInput,
                        north,
                        east,
                        south,
                        west,
                    ));
                }
            }
        }
    }
    ids
}

/// The 16 copy-and-shift tiles: same souths as the subtract row, but the
/// left component passes through unchanged (taken when the comparison said
/// the minuend is smaller).
fn add_copyshift_tiles(b: &mut Build, carry: &str, name: &str) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            for d in 0u8..2 {
                for c in 0u8..2 {
                    let north = pair(bit_char(a), bit_char(c));
                    let north = b.g1(&north);
                    let east = b.g1(&format!("{carry}{q}"));
                    let south = triple(bit_char(a), bit_char(q), d);
                    let south = b.g1(&south);
                    let west = b.g1(&format!("{carry}{c}"));
                    ids.push(b.tile(
                        format!("{name}{a}{q}{d}{c}"),
                        Category::SubShift,
                        AttachMode::WestInput,
                        north,
                        east,
                        south,
                        west,
                    ));
                }
            }
        }
    }
    ids
}

/// Marker-decrement tiles for the insert system: the pair passes through
/// while the marker index counts down one per column.
fn add_insert_counters(b: &mut Build, n: usize, marker_bits: &[u8]) -> Vec<TileId> {
    let mut ids = Vec::new();
    for j in 1..=n.saturating_sub(2) {
        for &c in marker_bits {
            for a in 0u8..2 {
                for q in 0u8..2 {
                    let p = pair(bit_char(a), bit_char(q));
                    let north = b.g1(&p);
                    let east = b.g1(&marker(j - 1, c));
                    let south = b.g1(&p);
                    let west = b.g1(&marker(j, c));
                    ids.push(b.tile(
                        format!("M{j}.{c}.{a}{q}"),
                        Category::Insert,
                        AttachMode::WestInput,
                        north,
                        east,
                        south,
                        west,
                    ));
                }
            }
        }
    }
    ids
}

/// The 8 place tiles: a marker that has counted down to 0 deposits its bit
/// `x` as the new right component and sends the displaced bit east — which
/// makes the same tile shift the whole suffix one column east.
fn add_place_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for x in 0u8..2 {
        for a in 0u8..2 {
            for q in 0u8..2 {
                let north = pair(bit_char(a), bit_char(x));
                let north = b.g1(&north);
                let east = b.g1(&marker(0, q));
                let south = pair(bit_char(a), bit_char(q));
                let south = b.g1(&south);
                let west = b.g1(&marker(0, x));
                ids.push(b.tile(
                    format!("P{x}.{a}{q}"),
                    Category::Insert,
                    AttachMode::WestInput,
                    north,
                    east,
                    south,
                    west,
                ));
            }
        }
    }
    ids
}

/// Top-frame tiles: close any register row, propagating only the inert `tp`
/// glue so growth above is impossible.
fn add_top_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            let tp = b.g1("tp");
            let south = pair(bit_char(a), bit_char(q));
            let south = b.g1(&south);
            ids.push(b.tile(
                format!("T{a}{q}"),
                Category::Boundary,
                AttachMode::WestInput,
                NULL_GLUE,
                tp,
                south,
                tp,
            ));
        }
    }
    ids
}

/// The four corner tiles: seed corners `S0`/`E0` and the top corners used
/// when a closed assembly finishes.
fn add_corner_tiles(b: &mut Build) -> Vec<TileId> {
    let lc0 = b.g1("Lc0");
    let s0 = b.tile(
        "S0".into(),
        Category::Boundary,
        AttachMode::SeedOnly,
        lc0,
        NULL_GLUE,
        NULL_GLUE,
        NULL_GLUE,
    );
    let rs2 = b.g2("Rs2");
    let e0 = b.tile(
        "E0".into(),
        Category::Boundary,
        AttachMode::SeedOnly,
        rs2,
        NULL_GLUE,
        NULL_GLUE,
        NULL_GLUE,
    );
    let lt = b.g2("Lt");
    let tp = b.g1("tp");
    let tl = b.tile(
        "TL".into(),
        Category::Boundary,
        AttachMode::Solo,
        NULL_GLUE,
        tp,
        lt,
        NULL_GLUE,
    );
    // TR binds cooperatively (south seam + west rail) rather than solo on a
    // strength-2 south: a solo TR could attach before the top row reaches it,
    // and the inert rail glue on both sides of the `T*` tiles would then let
    // any of them bridge the gap regardless of the bits below. Keeping TR
    // west-keyed forces the whole top row to close strictly west to east.
    let rt = b.g1("Rt");
    let tr = b.tile(
        "TR".into(),
        Category::Boundary,
        AttachMode::WestInput,
        NULL_GLUE,
        NULL_GLUE,
        rt,
        tp,
    );
    vec![s0, e0, tl, tr]
}

/// The four data pair tiles that carry the two input numbers in the seed row.
fn add_input_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            let north = pair(bit_char(a), bit_char(q));
            let north = b.g1(&north);
            ids.push(b.tile(
                format!("D{a}{q}"),
                Category::Input,
                AttachMode::SeedOnly,
                north,
                NULL_GLUE,
                NULL_GLUE,
                NULL_GLUE,
            ));
        }
    }
    ids
}

/// The eleven frame tiles that start, end, and relay rows on the frame side.
///
/// `CR` opens each compare row (solo on the strength-2 seam, emitting the
/// initial `=` relation). `SR.*` end register rows and open the insert seam;
/// `IR*` end insert rows and re-arm the compare seam; `TRQ` ends the top row
/// of an assembly whose last register row ended in `SR.*`. The relation trio
/// `CL0.*` absorbs the compare row's west output at the base level; deeper
/// levels use internal copies indexed by level so the frame can sequence the
/// zigzag.
fn add_frame_relay_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    let rs2 = b.g2("Rs2");
    let rs1 = b.g1("Rs1");
    let req = b.g1("r=");
    ids.push(b.tile(
        "CR".into(),
        Category::Boundary,
        AttachMode::Solo,
        rs1,
        NULL_GLUE,
        rs2,
        req,
    ));
    let rs3 = b.g1("Rs3");
    for carry in ["s", "k"] {
        for c in 0u8..2 {
            let west = b.g1(&format!("{carry}{c}"));
            ids.push(b.tile(
                format!("SR.{carry}{c}"),
                Category::Boundary,
                AttachMode::WestInput,
                rs3,
                NULL_GLUE,
                rs1,
                west,
            ));
        }
    }
    for q in 0u8..2 {
        let west = b.g1(&marker(0, q));
        ids.push(b.tile(
            format!("IR{q}"),
            Category::Boundary,
            AttachMode::WestInput,
            rs2,
            NULL_GLUE,
            rs3,
            west,
        ));
    }
    let tp = b.g1("tp");
    ids.push(b.tile(
        "TRQ".into(),
        Category::Boundary,
        AttachMode::WestInput,
        NULL_GLUE,
        NULL_GLUE,
        rs3,
        tp,
    ));
    ids.extend(add_relation_trio(b, 0));
    ids
}

/// The relation-absorbing trio at level `j`: consumes the compare row's west
/// output and converts it into the strength-2 seam that starts the matching
/// register row (`Lge` for subtract, `Llt` for copy).
fn add_relation_trio(b: &mut Build, j: usize) -> Vec<TileId> {
    let mut ids = Vec::new();
    let south = b.g1(&format!("Lc{j}"));
    for (rel, rel_glue) in RELATIONS {
        let east = b.g1(rel_glue);
        let north = if rel == 'l' {
            b.g2(&format!("Llt{j}"))
        } else {
            b.g2(&format!("Lge{j}"))
        };
        ids.push(b.tile(
            format!("CL{j}.{rel}"),
            Category::Boundary,
            AttachMode::EastInput,
            north,
            east,
            south,
            NULL_GLUE,
        ));
    }
    ids
}

/// Square-root left frame for one level `m` of `levels`: the register
/// starters `SSL`/`SL` record the root digit and open the insert seam; the
/// insert starters `IL*` launch the marker for splicing that digit at
/// position 2(m+1) — except at the last level, where they open the top row
/// instead (no further comparison needs the spliced value).
fn add_sqrt_left_level(b: &mut Build, m: usize, levels: usize) -> Vec<TileId> {
    let mut ids = Vec::new();
    let lge = b.g2(&format!("Lge{m}"));
    let llt = b.g2(&format!("Llt{m}"));
    let li1 = b.g2(&format!("Li1.{m}"));
    let li0 = b.g2(&format!("Li0.{m}"));
    let s0 = b.g1("s0");
    let k0 = b.g1("k0");
    ids.push(b.tile(
        format!("SSL{m}"),
        Category::Boundary,
        AttachMode::Solo,
        li1,
        s0,
        lge,
        NULL_GLUE,
    ));
    ids.push(b.tile(
        format!("SL{m}"),
        Category::Boundary,
        AttachMode::Solo,
        li0,
        k0,
        llt,
        NULL_GLUE,
    ));
    for (digit, seam) in [(1u8, li1), (0u8, li0)] {
        let (north, east) = if m + 1 < levels {
            (b.g1(&format!("Lc{}", m + 1)), b.g1(&marker(2 * m + 1, digit)))
        } else {
            (NULL_GLUE, b.g1("tp"))
        };
        ids.push(b.tile(
            format!("IL{digit}.{m}"),
            Category::Boundary,
            AttachMode::Solo,
            north,
            east,
            seam,
            NULL_GLUE,
        ));
    }
    ids
}

/// Which tile system a boundary set is being built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryContext {
    Compare,
    Shift,
    Insert,
    SubShift,
    Division,
    Sqrt,
}

/// Which core computational system to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreKind {
    Compare,
    Shift,
    SubShift,
}

/// A boundary tile set together with its group membership, so counts per
/// group can be checked exactly.
#[derive(Debug, Clone)]
pub struct BoundaryTileSet {
    pub tiles: TileSet,
    pub left: Vec<TileId>,
    pub right: Vec<TileId>,
    pub corner: Vec<TileId>,
    pub top: Vec<TileId>,
    pub input: Vec<TileId>,
}

/// Core computational tiles: 12 compare, 8 shift, or 16 subtract-and-shift.
pub fn build_core_tileset(kind: CoreKind) -> TileSet {
    let mut b = Build::new();
    match kind {
        CoreKind::Compare => {
            add_compare_tiles(&mut b);
        }
        CoreKind::Shift => {
            add_shift_tiles(&mut b);
        }
        CoreKind::SubShift => {
            add_subshift_tiles(&mut b, "s", "S");
        }
    }
    b.ts
}

/// The insert system for n-bit numbers: 4(n−2) marker counters plus the 8
/// place tiles — 4n tiles total. (Counters for the complementary marker bit
/// exist as internal companions where a task needs them.)
pub fn build_insert_tileset(n: usize) -> Result<TileSet, TaskError> {
    if n < 2 {
        return Err(TaskError::Unsupported(format!(
            "insert system needs n >= 2, got {n}"
        )));
    }
    let mut b = Build::new();
    add_insert_counters(&mut b, n, &[1]);
    add_place_tiles(&mut b);
    Ok(b.ts)
}

/// Boundary tiles for a context. For the square-root context over n bits
/// (n even) the groups count exactly: left 2n, right 11, corner 4, top 4,
/// input 4.
pub fn build_boundary_tileset(
    context: BoundaryContext,
    n: usize,
) -> Result<BoundaryTileSet, TaskError> {
    let mut b = Build::new();
    let mut left = Vec::new();
    let mut right = Vec::new();
    let corner;
    let mut top = Vec::new();
    let input;
    match context {
        BoundaryContext::Sqrt => {
            if n < 2 || n % 2 != 0 {
                return Err(TaskError::Unsupported(format!(
                    "square-root boundary needs even n >= 2, got {n}"
                )));
            }
            let levels = n / 2;
            for m in 0..levels {
                left.extend(add_sqrt_left_level(&mut b, m, levels));
            }
            right = add_frame_relay_tiles(&mut b);
            corner = add_corner_tiles(&mut b);
            top = add_top_tiles(&mut b);
            input = add_input_tiles(&mut b);
        }
        BoundaryContext::Compare => {
            let rs2 = b.g2("Rs2");
            let rs1 = b.g1("Rs1");
            let req = b.g1("r=");
            right.push(b.tile(
                "CR".into(),
                Category::Boundary,
                AttachMode::Solo,
                rs1,
                NULL_GLUE,
                rs2,
                req,
            ));
            left.extend(add_relation_trio(&mut b, 0));
            corner = add_corner_tiles(&mut b);
            input = add_input_tiles(&mut b);
        }
        BoundaryContext::Shift => {
            left.push(add_shift_start(&mut b));
            right.extend(add_shift_end(&mut b));
            corner = add_corner_tiles(&mut b);
            corner_extra_east(&mut b, "E1", "Rs1", 1);
            input = add_input_tiles(&mut b);
        }
        BoundaryContext::SubShift => {
            left.push(add_subshift_start(&mut b));
            for carry in ["s", "k"] {
                for c in 0u8..2 {
                    let rs1 = b.g1("Rs1");
                    let rs3 = b.g1("Rs3");
                    let west = b.g1(&format!("{carry}{c}"));
                    right.push(b.tile(
                        format!("SR.{carry}{c}"),
                        Category::Boundary,
                        AttachMode::WestInput,
                        rs3,
                        NULL_GLUE,
                        rs1,
                        west,
                    ));
                }
            }
            corner = add_corner_tiles(&mut b);
            corner_extra_east(&mut b, "E1", "Rs1", 1);
            input = add_input_tiles(&mut b);
        }
        BoundaryContext::Insert => {
            if n < 2 {
                return Err(TaskError::Unsupported(format!(
                    "insert boundary needs n >= 2, got {n}"
                )));
            }
            for j in 0..n - 1 {
                for c in 0u8..2 {
                    left.push(add_insert_start(&mut b, j, c));
                }
            }
            let rs3 = b.g1("Rs3");
            let rs2 = b.g2("Rs2");
            for q in 0u8..2 {
                let west = b.g1(&marker(0, q));
                right.push(b.tile(
                    format!("IR{q}"),
                    Category::Boundary,
                    AttachMode::WestInput,
                    rs2,
                    NULL_GLUE,
                    rs3,
                    west,
                ));
            }
            corner = add_corner_tiles(&mut b);
            corner_extra_east(&mut b, "E2", "Rs3", 1);
            input = add_input_tiles(&mut b);
        }
        BoundaryContext::Division => {
            if n == 0 {
                return Err(TaskError::Unsupported(
                    "division boundary needs at least one level".into(),
                ));
            }
            let levels = n;
            left.extend(add_division_left(&mut b, levels, true));
            right.extend(add_division_right(&mut b, true));
            corner = add_corner_tiles(&mut b);
            top = add_top_tiles(&mut b);
            input = add_input_tiles(&mut b);
        }
    }
    Ok(BoundaryTileSet {
        tiles: b.ts,
        left,
        right,
        corner,
        top,
        input,
    })
}

/// Division left column: relation trios for every level, subtract/copy
/// register starters, and (when `closed`) the final-level starters that open
/// the top seam instead of another compare seam.
fn add_division_left(b: &mut Build, levels: usize, closed: bool) -> Vec<TileId> {
    let mut ids = Vec::new();
    for j in 0..levels {
        ids.extend(add_relation_trio(b, j));
        let last = j + 1 == levels;
        if closed && last {
            let lge = b.g2(&format!("Lge{j}"));
            let llt = b.g2(&format!("Llt{j}"));
            let lt = b.g2("Lt");
            let sf0 = b.g1("sf0");
            let kf0 = b.g1("kf0");
            ids.push(b.tile(
                "SSLF".into(),
                Category::Boundary,
                AttachMode::Solo,
                lt,
                sf0,
                lge,
                NULL_GLUE,
            ));
            ids.push(b.tile(
                "SLF".into(),
                Category::Boundary,
                AttachMode::Solo,
                lt,
                kf0,
                llt,
                NULL_GLUE,
            ));
        } else {
            let lge = b.g2(&format!("Lge{j}"));
            let llt = b.g2(&format!("Llt{j}"));
            let next = b.g1(&format!("Lc{}", j + 1));
            let s0 = b.g1("s0");
            let k0 = b.g1("k0");
            ids.push(b.tile(
                format!("DSSL{j}"),
                Category::Boundary,
                AttachMode::Solo,
                next,
                s0,
                lge,
                NULL_GLUE,
            ));
            ids.push(b.tile(
                format!("DSL{j}"),
                Category::Boundary,
                AttachMode::Solo,
                next,
                k0,
                llt,
                NULL_GLUE,
            ));
        }
    }
    ids
}

/// Division right column: compare starter, register terminators that re-arm
/// the compare seam, and (when `closed`) final-row terminators that open the
/// top-right seam.
fn add_division_right(b: &mut Build, closed: bool) -> Vec<TileId> {
    let mut ids = Vec::new();
    let rs2 = b.g2("Rs2");
    let rs1 = b.g1("Rs1");
    let req = b.g1("r=");
    ids.push(b.tile(
        "CR".into(),
        Category::Boundary,
        AttachMode::Solo,
        rs1,
        NULL_GLUE,
        rs2,
        req,
    ));
    for carry in ["s", "k"] {
        for c in 0u8..2 {
            let west = b.g1(&format!("{carry}{c}"));
            ids.push(b.tile(
                format!("SRD.{carry}{c}"),
                Category::Boundary,
                AttachMode::WestInput,
                rs2,
                NULL_GLUE,
                rs1,
                west,
            ));
        }
    }
    if closed {
        let rt = b.g1("Rt");
        for carry in ["sf", "kf"] {
            for c in 0u8..2 {
                let west = b.g1(&format!("{carry}{c}"));
                ids.push(b.tile(
                    format!("SRT.{carry}{c}"),
                    Category::Boundary,
                    AttachMode::WestInput,
                    rt,
                    NULL_GLUE,
                    rs1,
                    west,
                ));
            }
        }
    }
    ids
}

fn corner_extra_east(b: &mut Build, name: &str, north: &str, strength: u8) -> TileId {
    let n = if strength == 2 { b.g2(north) } else { b.g1(north) };
    b.tile(
        name.into(),
        Category::Boundary,
        AttachMode::SeedOnly,
        n,
        NULL_GLUE,
        NULL_GLUE,
        NULL_GLUE,
    )
}

/// Pre-placed west starter for a standalone shift row: feeds 0 in at the
/// most significant end.
fn add_shift_start(b: &mut Build) -> TileId {
    let h0 = b.g1("h0");
    b.tile(
        "HL".into(),
        Category::Boundary,
        AttachMode::SeedOnly,
        NULL_GLUE,
        h0,
        NULL_GLUE,
        NULL_GLUE,
    )
}

/// East terminators for a standalone shift row: swallow the bit shifted off
/// the least significant end.
fn add_shift_end(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    let rs1 = b.g1("Rs1");
    for q in 0u8..2 {
        let west = b.g1(&format!("h{q}"));
        ids.push(b.tile(
            format!("HR{q}"),
            Category::Boundary,
            AttachMode::WestInput,
            NULL_GLUE,
            NULL_GLUE,
            rs1,
            west,
        ));
    }
    ids
}

/// Pre-placed west starter for a standalone subtract-and-shift row.
fn add_subshift_start(b: &mut Build) -> TileId {
    let s0 = b.g1("s0");
    b.tile(
        "SSH".into(),
        Category::Boundary,
        AttachMode::SeedOnly,
        NULL_GLUE,
        s0,
        NULL_GLUE,
        NULL_GLUE,
    )
}

/// Pre-placed west starter for a standalone insert row: launches the marker
/// `#j` carrying the bit to insert.
fn add_insert_start(b: &mut Build, j: usize, c: u8) -> TileId {
    let east = b.g1(&marker(j, c));
    b.tile(
        format!("ILS{j}.{c}"),
        Category::Boundary,
        AttachMode::SeedOnly,
        NULL_GLUE,
        east,
        NULL_GLUE,
        NULL_GLUE,
    )
}

/// Triple input tiles for standalone subtract-and-shift rows, whose borrow
/// column is part of the input.
fn add_triple_input_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for a in 0u8..2 {
        for q in 0u8..2 {
            for d in 0u8..2 {
                let north = triple(bit_char(a), bit_char(q), d);
                let north = b.g1(&north);
                ids.push(b.tile(
                    format!("DT{a}{q}{d}"),
                    Category::Input,
                    AttachMode::SeedOnly,
                    north,
                    NULL_GLUE,
                    NULL_GLUE,
                    NULL_GLUE,
                ));
            }
        }
    }
    ids
}

/// The rational-expansion extension: the additional computational tiles that
/// keep rows growing over the all-zero region east of the written operands,
/// plus the level-free relation trio for the unbounded left boundary.
#[derive(Debug, Clone)]
pub struct RationalExtension {
    pub tiles: TileSet,
    pub compare_ext: Vec<TileId>,
    pub shift_ext: Vec<TileId>,
    pub subshift_ext: Vec<TileId>,
    pub left_boundary: Vec<TileId>,
}

/// Build the 9 + 2 + 2 extension tiles and the 3 left-boundary tiles of the
/// unbounded rational system. The `-` component stands for "zero forever":
/// east of the written window both operands are zero, so the relation passes
/// through unchanged (or flips to `<` when a shifted-in 1 sits over the
/// zero), the borrow is always 0, and shifts just relay the region mark.
pub fn build_rational_extension_tileset() -> RationalExtension {
    let mut b = Build::new();
    let mut compare_ext = Vec::new();
    for bt in ['0', '1', '-'] {
        for (rel, rel_glue) in RELATIONS {
            let out = match bt {
                '1' => "r<",
                _ => rel_glue,
            };
            let d = u8::from(rel == 'l');
            let north = triple('-', bt, d);
            let north = b.g1(&north);
            let east = b.g1(rel_glue);
            let south = pair('-', bt);
            let south = b.g1(&south);
            let west = b.g1(out);
            compare_ext.push(b.tile(
                format!("C-{bt}{rel}"),
                Category::Compare,
                AttachMode::EastInput,
                north,
                east,
                south,
                west,
            ));
        }
    }
    let mut shift_ext = Vec::new();
    for c in ['0', '-'] {
        let south = pair('-', '-');
        let south = b.g1(&south);
        let north = b.g1(&pair('-', '-'));
        let east = b.g1("h-");
        let west = b.g1(&format!("h{c}"));
        shift_ext.push(b.tile(
            format!("H-{c}"),
            Category::Shift,
            AttachMode::WestInput,
            north,
            east,
            south,
            west,
        ));
    }
    let mut subshift_ext = Vec::new();
    for c in ['0', '-'] {
        let south = triple('-', '-', 0);
        let south = b.g1(&south);
        let north = b.g1(&pair('-', '-'));
        let east = b.g1("s-");
        let west = b.g1(&format!("s{c}"));
        subshift_ext.push(b.tile(
            format!("S-{c}"),
            Category::SubShift,
            AttachMode::WestInput,
            north,
            east,
            south,
            west,
        ));
    }
    let mut left_boundary = Vec::new();
    let south = b.g1("Lc~");
    for (rel, rel_glue) in RELATIONS {
        let east = b.g1(rel_glue);
        let north = if rel == 'l' {
            b.g2("Llt~")
        } else {
            b.g2("Lge~")
        };
        left_boundary.push(b.tile(
            format!("CLR.{rel}"),
            Category::Boundary,
            AttachMode::EastInput,
            north,
            east,
            south,
            NULL_GLUE,
        ));
    }
    RationalExtension {
        tiles: b.ts,
        compare_ext,
        shift_ext,
        subshift_ext,
        left_boundary,
    }
}

/// Ripple adder/subtractor tiles for the partial-sum rows of the pi
/// pipeline: grow east-to-west with the carry/borrow, sum bit north.
pub fn build_adder_tileset() -> TileSet {
    let mut b = Build::new();
    add_adder_tiles(&mut b);
    add_corner_tiles(&mut b);
    add_input_tiles(&mut b);
    b.ts
}

fn add_adder_tiles(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    for s in 0u8..2 {
        for t in 0u8..2 {
            for c in 0u8..2 {
                let sum = s + t + c;
                let north = b.g1(&format!("o{}", sum & 1));
                let east = b.g1(&format!("a{c}"));
                let south = pair(bit_char(s), bit_char(t));
                let south = b.g1(&south);
                let west = b.g1(&format!("a{}", sum >> 1));
                ids.push(b.tile(
                    format!("A{s}{t}{c}"),
                    Category::Adder,
                    AttachMode::EastInput,
                    north,
                    east,
                    south,
                    west,
                ));
                let diff = s ^ t ^ c;
                let borrow = u8::from(s < t + c);
                let north = b.g1(&format!("o{diff}"));
                let east = b.g1(&format!("b{c}"));
                let south = pair(bit_char(s), bit_char(t));
                let south = b.g1(&south);
                let west = b.g1(&format!("b{borrow}"));
                ids.push(b.tile(
                    format!("B{s}{t}{c}"),
                    Category::Adder,
                    AttachMode::EastInput,
                    north,
                    east,
                    south,
                    west,
                ));
            }
        }
    }
    let lc0 = b.g1("Lc0");
    for (name, carry) in [("AL", "a0"), ("BL", "b0")] {
        let east = b.g1(carry);
        ids.push(b.tile(
            name.into(),
            Category::Adder,
            AttachMode::EastInput,
            NULL_GLUE,
            east,
            lc0,
            NULL_GLUE,
        ));
    }
    for (name, carry) in [("AE", "a0"), ("BE", "b0")] {
        let west = b.g1(carry);
        ids.push(b.tile(
            name.into(),
            Category::Adder,
            AttachMode::SeedOnly,
            NULL_GLUE,
            NULL_GLUE,
            NULL_GLUE,
            west,
        ));
    }
    ids
}

/// Optional decimal-point marker tile (inert on all faces).
fn add_dot_tile(b: &mut Build) -> TileId {
    b.tile(
        "DOT".into(),
        Category::Dot,
        AttachMode::SeedOnly,
        NULL_GLUE,
        NULL_GLUE,
        NULL_GLUE,
        NULL_GLUE,
    )
}

/// What a task wants grown, as input to [`seed_row`].
#[derive(Debug, Clone)]
pub enum TaskSeed {
    /// Compare two equal-width bit strings (MSB first).
    Compare { a: Vec<u8>, b: Vec<u8> },
    /// Right-shift one bit string.
    Shift { a: Vec<u8> },
    /// Subtract two equal-width strings (minuend >= subtrahend) and halve
    /// the subtrahend; borrows are part of the seed triples.
    SubShift { a: Vec<u8>, b: Vec<u8> },
    /// Insert bit `c` at position `i` (1-based from the most significant
    /// end, 1 <= i <= len-1).
    Insert { q: Vec<u8>, i: usize, c: u8 },
    /// Closed long division of `a / b`, already scaled to a common
    /// denominator, producing `frac` fraction bits.
    Division {
        a: BigUint,
        b: BigUint,
        frac: usize,
        dot: bool,
    },
    /// Square root of `m / 4^frac` (m already scaled by 4^frac).
    Sqrt { m: BigUint, frac: usize, dot: bool },
    /// Unbounded-style expansion of p/q (p < q), windowed to `max_bits`
    /// fraction digits and deliberately left running.
    Rational {
        p: BigUint,
        q: BigUint,
        max_bits: usize,
    },
}

/// A ready-to-grow system: tile set, seed, and the geometry needed to read
/// the result back out of the finished assembly.
#[derive(Debug, Clone)]
pub struct TaskSetup {
    pub tileset: TileSet,
    pub seed: SeedConfiguration,
    /// Number of data columns (x = 1..=width).
    pub width: usize,
    /// Number of compare/register levels (0 for single-row tasks).
    pub levels: usize,
    /// Integer digits of the result, for tasks that produce digits.
    pub int_bits: usize,
}

fn bitlen(v: &BigUint) -> usize {
    (v.bits() as usize).max(1)
}

/// Build the tile set and seed row for a task.
pub fn seed_row(task: &TaskSeed) -> Result<TaskSetup, TaskError> {
    match task {
        TaskSeed::Compare { a, b } => seed_compare(a, b),
        TaskSeed::Shift { a } => seed_shift(a),
        TaskSeed::SubShift { a, b } => seed_subshift(a, b),
        TaskSeed::Insert { q, i, c } => seed_insert(q, *i, *c),
        TaskSeed::Division { a, b, frac, dot } => seed_division(a, b, *frac, *dot),
        TaskSeed::Sqrt { m, frac, dot } => seed_sqrt(m, *frac, *dot),
        TaskSeed::Rational { p, q, max_bits } => seed_rational(p, q, *max_bits),
    }
}

fn place_input_row(
    b: &Build,
    seed: &mut SeedConfiguration,
    pairs: &[(u8, u8)],
) -> Result<(), TaskError> {
    let s0 = b.ts.tile_by_name("S0").expect("S0 present");
    seed.place(Position::new(0, 0), s0)?;
    for (x, &(p, q)) in pairs.iter().enumerate() {
        let d = b
            .ts
            .tile_by_name(&format!("D{p}{q}"))
            .expect("input tile present");
        seed.place(Position::new(x as i32 + 1, 0), d)?;
    }
    Ok(())
}

fn seed_compare(a: &[u8], b_bits: &[u8]) -> Result<TaskSetup, TaskError> {
    if a.len() != b_bits.len() {
        return Err(TaskError::WidthMismatch {
            left: a.len(),
            right: b_bits.len(),
        });
    }
    if a.is_empty() {
        return Err(TaskError::Unsupported("empty comparison".into()));
    }
    let k = a.len();
    let mut b = Build::new();
    add_compare_tiles(&mut b);
    add_corner_tiles(&mut b);
    add_input_tiles(&mut b);
    let rs2 = b.g2("Rs2");
    let rs1 = b.g1("Rs1");
    let req = b.g1("r=");
    let cr = b.tile(
        "CR".into(),
        Category::Boundary,
        AttachMode::Solo,
        rs1,
        NULL_GLUE,
        rs2,
        req,
    );
    add_relation_trio(&mut b, 0);
    let mut seed = SeedConfiguration::new();
    let pairs: Vec<(u8, u8)> = a.iter().zip(b_bits).map(|(&x, &y)| (x, y)).collect();
    place_input_row(&b, &mut seed, &pairs)?;
    let e0 = b.ts.tile_by_name("E0").unwrap();
    seed.place(Position::new(k as i32 + 1, 0), e0)?;
    seed.place(Position::new(k as i32 + 1, 1), cr)?;
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width: k,
        levels: 0,
        int_bits: 0,
    })
}

fn seed_shift(a: &[u8]) -> Result<TaskSetup, TaskError> {
    if a.is_empty() {
        return Err(TaskError::Unsupported("empty shift".into()));
    }
    let k = a.len();
    let mut b = Build::new();
    add_shift_tiles(&mut b);
    add_corner_tiles(&mut b);
    add_input_tiles(&mut b);
    let hl = add_shift_start(&mut b);
    add_shift_end(&mut b);
    corner_extra_east(&mut b, "E1", "Rs1", 1);
    let mut seed = SeedConfiguration::new();
    let pairs: Vec<(u8, u8)> = a.iter().map(|&x| (0, x)).collect();
    place_input_row(&b, &mut seed, &pairs)?;
    let e1 = b.ts.tile_by_name("E1").unwrap();
    seed.place(Position::new(k as i32 + 1, 0), e1)?;
    seed.place(Position::new(0, 1), hl)?;
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width: k,
        levels: 0,
        int_bits: 0,
    })
}

/// Exact borrows for a - b: d[i] is 1 iff the suffix of `a` strictly east of
/// column i is smaller than the same suffix of `b`.
pub fn suffix_borrows(a: &[u8], b: &[u8]) -> Vec<u8> {
    let k = a.len();
    let mut d = vec![0u8; k];
    let mut rel_less = false;
    // Walk from the least significant end; the relation over the suffix east
    // of column i is what column i sees as its borrow-in.
    for i in (0..k).rev() {
        d[i] = u8::from(rel_less);
        match a[i].cmp(&b[i]) {
            std::cmp::Ordering::Less => rel_less = true,
            std::cmp::Ordering::Greater => rel_less = false,
            std::cmp::Ordering::Equal => {}
        }
    }
    d
}

fn seed_subshift(a: &[u8], b_bits: &[u8]) -> Result<TaskSetup, TaskError> {
    if a.len() != b_bits.len() {
        return Err(TaskError::WidthMismatch {
            left: a.len(),
            right: b_bits.len(),
        });
    }
    if a.is_empty() {
        return Err(TaskError::Unsupported("empty subtraction".into()));
    }
    let k = a.len();
    let mut b = Build::new();
    add_subshift_tiles(&mut b, "s", "S");
    add_corner_tiles(&mut b);
    add_triple_input_tiles(&mut b);
    add_input_tiles(&mut b);
    let ssh = add_subshift_start(&mut b);
    for carry in ["s", "k"] {
        for c in 0u8..2 {
            let rs1 = b.g1("Rs1");
            let rs3 = b.g1("Rs3");
            let west = b.g1(&format!("{carry}{c}"));
            b.tile(
                format!("SR.{carry}{c}"),
                Category::Boundary,
                AttachMode::WestInput,
                rs3,
                NULL_GLUE,
                rs1,
                west,
            );
        }
    }
    corner_extra_east(&mut b, "E1", "Rs1", 1);
    let borrows = suffix_borrows(a, b_bits);
    let mut seed = SeedConfiguration::new();
    let s0 = b.ts.tile_by_name("S0").unwrap();
    seed.place(Position::new(0, 0), s0)?;
    for x in 0..k {
        let dt = b
            .ts
            .tile_by_name(&format!("DT{}{}{}", a[x], b_bits[x], borrows[x]))
            .unwrap();
        seed.place(Position::new(x as i32 + 1, 0), dt)?;
    }
    let e1 = b.ts.tile_by_name("E1").unwrap();
    seed.place(Position::new(k as i32 + 1, 0), e1)?;
    seed.place(Position::new(0, 1), ssh)?;
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width: k,
        levels: 0,
        int_bits: 0,
    })
}

fn seed_insert(q: &[u8], i: usize, c: u8) -> Result<TaskSetup, TaskError> {
    let k = q.len();
    if k < 2 {
        return Err(TaskError::Unsupported(
            "insertion needs at least 2 bits".into(),
        ));
    }
    if i < 1 || i > k - 1 {
        return Err(TaskError::Oracle(crate::error::OracleError::InsertOutOfRange {
            i,
            max: k - 1,
        }));
    }
    let mut b = Build::new();
    add_insert_counters(&mut b, k, &[0, 1]);
    add_place_tiles(&mut b);
    add_corner_tiles(&mut b);
    add_input_tiles(&mut b);
    let ils = add_insert_start(&mut b, i - 1, c);
    let rs3 = b.g1("Rs3");
    let rs2 = b.g2("Rs2");
    for m0 in 0u8..2 {
        let west = b.g1(&marker(0, m0));
        b.tile(
            format!("IR{m0}"),
            Category::Boundary,
            AttachMode::WestInput,
            rs2,
            NULL_GLUE,
            rs3,
            west,
        );
    }
    corner_extra_east(&mut b, "E2", "Rs3", 1);
    let mut seed = SeedConfiguration::new();
    let pairs: Vec<(u8, u8)> = q.iter().map(|&x| (0, x)).collect();
    place_input_row(&b, &mut seed, &pairs)?;
    let e2 = b.ts.tile_by_name("E2").unwrap();
    seed.place(Position::new(k as i32 + 1, 0), e2)?;
    seed.place(Position::new(0, 1), ils)?;
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width: k,
        levels: 0,
        int_bits: 0,
    })
}

/// All tiles of the closed (or open) division pipeline with the given
/// number of levels, in one namespace.
fn add_division_system(b: &mut Build, levels: usize, closed: bool) {
    add_compare_tiles(b);
    add_subshift_tiles(b, "s", "S");
    add_copyshift_tiles(b, "k", "K");
    if closed {
        add_subshift_tiles(b, "sf", "Sf");
        add_copyshift_tiles(b, "kf", "Kf");
    }
    add_division_left(b, levels, closed);
    add_division_right(b, closed);
    add_corner_tiles(b);
    add_top_tiles(b);
    add_input_tiles(b);
}

/// Shared construction of the division-style zigzag pipeline. When `closed`
/// the final level uses the top-seam variants and the assembly finishes with
/// a top row; otherwise all levels are uniform and growth dies out (or gets
/// capped) past the built levels.
fn seed_division_like(
    a: &BigUint,
    b_val: &BigUint,
    frac: usize,
    levels: usize,
    int_bits: usize,
    width: usize,
    closed: bool,
    dot: bool,
) -> Result<TaskSetup, TaskError> {
    use num_traits::Zero;
    if b_val.is_zero() {
        return Err(TaskError::Oracle(crate::error::OracleError::DivisionByZero));
    }
    let p0 = a << frac;
    let q0 = b_val << (frac + int_bits - 1);
    debug_assert!(bitlen(&q0) == width, "divisor must fill the window");
    debug_assert!(bitlen(&p0) <= width, "dividend must fit the window");
    let p_bits = biguint_bits(&p0, width);
    let q_bits = biguint_bits(&q0, width);

    let mut b = Build::new();
    add_division_system(&mut b, levels, closed);
    if dot {
        add_dot_tile(&mut b);
    }

    let mut seed = SeedConfiguration::new();
    let pairs: Vec<(u8, u8)> = p_bits.iter().zip(&q_bits).map(|(&p, &q)| (p, q)).collect();
    place_input_row(&b, &mut seed, &pairs)?;
    let e0 = b.ts.tile_by_name("E0").unwrap();
    seed.place(Position::new(width as i32 + 1, 0), e0)?;
    if dot && frac > 0 && int_bits < levels {
        let dot_tile = b.ts.tile_by_name("DOT").unwrap();
        seed.place(Position::new(-1, 2 * int_bits as i32 + 2), dot_tile)?;
    }
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width,
        levels,
        int_bits,
    })
}

fn seed_division(a: &BigUint, b_val: &BigUint, frac: usize, dot: bool) -> Result<TaskSetup, TaskError> {
    use num_traits::Zero;
    if b_val.is_zero() {
        return Err(TaskError::Oracle(crate::error::OracleError::DivisionByZero));
    }
    let la = bitlen(a);
    let lb = bitlen(b_val);
    // One quotient digit per level: enough integer digits that the first
    // divisor window covers the dividend, then `frac` fraction digits.
    let int_bits = (la + 1).saturating_sub(lb).max(1);
    let levels = int_bits + frac;
    let width = la.max(lb) + frac;
    seed_division_like(a, b_val, frac, levels, int_bits, width, true, dot)
}

fn seed_sqrt(m: &BigUint, frac: usize, dot: bool) -> Result<TaskSetup, TaskError> {
    let int_part = m >> (2 * frac);
    let int_len = bitlen(&int_part);
    let int_cols = int_len + (int_len % 2);
    let n = int_cols.max(2) + 2 * frac;
    let levels = n / 2;
    let p_bits = biguint_bits(m, n);
    let mut b = Build::new();
    add_compare_tiles(&mut b);
    add_subshift_tiles(&mut b, "s", "S");
    add_copyshift_tiles(&mut b, "k", "K");
    add_insert_counters(&mut b, n, &[0, 1]);
    add_place_tiles(&mut b);
    for mlevel in 0..levels {
        add_relation_trio(&mut b, mlevel);
        add_sqrt_left_level(&mut b, mlevel, levels);
    }
    add_frame_relay_tiles_for_run(&mut b);
    add_corner_tiles(&mut b);
    add_top_tiles(&mut b);
    add_input_tiles(&mut b);
    if dot {
        add_dot_tile(&mut b);
    }
    let mut seed = SeedConfiguration::new();
    let mut pairs: Vec<(u8, u8)> = Vec::with_capacity(n);
    for (x, &p) in p_bits.iter().enumerate() {
        let q = u8::from(x == 1);
        pairs.push((p, q));
    }
    place_input_row(&b, &mut seed, &pairs)?;
    let e0 = b.ts.tile_by_name("E0").unwrap();
    seed.place(Position::new(n as i32 + 1, 0), e0)?;
    let root_int = levels - frac;
    if dot && frac > 0 && root_int < levels {
        let dot_tile = b.ts.tile_by_name("DOT").unwrap();
        seed.place(Position::new(-1, 3 * root_int as i32 + 2), dot_tile)?;
    }
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width: n,
        levels,
        int_bits: root_int,
    })
}

/// The frame relay tiles without the level-0 relation trio (which
/// level-indexed construction adds separately).
fn add_frame_relay_tiles_for_run(b: &mut Build) -> Vec<TileId> {
    let mut ids = Vec::new();
    let rs2 = b.g2("Rs2");
    let rs1 = b.g1("Rs1");
    let req = b.g1("r=");
    ids.push(b.tile(
        "CR".into(),
        Category::Boundary,
        AttachMode::Solo,
        rs1,
        NULL_GLUE,
        rs2,
        req,
    ));
    let rs3 = b.g1("Rs3");
    for carry in ["s", "k"] {
        for c in 0u8..2 {
            let west = b.g1(&format!("{carry}{c}"));
            ids.push(b.tile(
                format!("SR.{carry}{c}"),
                Category::Boundary,
                AttachMode::WestInput,
                rs3,
                NULL_GLUE,
                rs1,
                west,
            ));
        }
    }
    for q in 0u8..2 {
        let west = b.g1(&marker(0, q));
        ids.push(b.tile(
            format!("IR{q}"),
            Category::Boundary,
            AttachMode::WestInput,
            rs2,
            NULL_GLUE,
            rs3,
            west,
        ));
    }
    let tp = b.g1("tp");
    ids.push(b.tile(
        "TRQ".into(),
        Category::Boundary,
        AttachMode::WestInput,
        NULL_GLUE,
        NULL_GLUE,
        rs3,
        tp,
    ));
    ids
}

fn seed_rational(p: &BigUint, q: &BigUint, max_bits: usize) -> Result<TaskSetup, TaskError> {
    use num_traits::Zero;
    if q.is_zero() {
        return Err(TaskError::Oracle(crate::error::OracleError::DivisionByZero));
    }
    if p >= q {
        return Err(TaskError::Oracle(crate::error::OracleError::ImproperFraction {
            p: p.to_string(),
            q: q.to_string(),
        }));
    }
    if max_bits == 0 {
        return Err(TaskError::Unsupported("need at least one digit".into()));
    }
    let lb = bitlen(q);
    let width = lb + max_bits;
    let levels = max_bits + 3;
    seed_division_like(p, q, max_bits, levels, 1, width, false, false)
}

/// One tile set covering every stage of the pi pipeline: the quotient
/// divisions (which all have 1 + frac levels regardless of the divisor) and
/// the ripple add/subtract rows for the partial sums.
pub fn build_pi_tileset(frac: usize) -> TileSet {
    let mut b = Build::new();
    add_division_system(&mut b, 1 + frac, true);
    add_adder_tiles(&mut b);
    b.ts
}

/// Setup for one partial-sum row: seed pairs (accumulator bit, term bit),
/// an east starter feeding in carry/borrow 0, growth east-to-west, result
/// on the north faces.
pub fn adder_row(s_bits: &[u8], t_bits: &[u8], subtract: bool) -> Result<TaskSetup, TaskError> {
    if s_bits.len() != t_bits.len() {
        return Err(TaskError::WidthMismatch {
            left: s_bits.len(),
            right: t_bits.len(),
        });
    }
    if s_bits.is_empty() {
        return Err(TaskError::Unsupported("empty sum row".into()));
    }
    let w = s_bits.len();
    let mut b = Build::new();
    add_adder_tiles(&mut b);
    add_corner_tiles(&mut b);
    add_input_tiles(&mut b);
    let mut seed = SeedConfiguration::new();
    let pairs: Vec<(u8, u8)> = s_bits.iter().zip(t_bits).map(|(&s, &t)| (s, t)).collect();
    place_input_row(&b, &mut seed, &pairs)?;
    let starter = if subtract { "BE" } else { "AE" };
    let starter = b.ts.tile_by_name(starter).unwrap();
    seed.place(Position::new(w as i32 + 1, 1), starter)?;
    Ok(TaskSetup {
        tileset: b.ts,
        seed,
        width: w,
        levels: 0,
        int_bits: 0,
    })
}

/// Per-group tile counts of the square-root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TileCountReport {
    pub compare: usize,
    pub shift: usize,
    pub subshift: usize,
    pub insert: usize,
    pub left_frame: usize,
    pub right_frame: usize,
    pub corner: usize,
    pub top_frame: usize,
    pub input: usize,
}

/// Count the generated groups for an n-bit square-root system.
pub fn sqrt_tile_counts(n: usize) -> Result<TileCountReport, TaskError> {
    let compare = build_core_tileset(CoreKind::Compare).len();
    let shift = build_core_tileset(CoreKind::Shift).len();
    let subshift = build_core_tileset(CoreKind::SubShift).len();
    let insert = build_insert_tileset(n)?.len();
    let frame = build_boundary_tileset(BoundaryContext::Sqrt, n)?;
    Ok(TileCountReport {
        compare,
        shift,
        subshift,
        insert,
        left_frame: frame.left.len(),
        right_frame: frame.right.len(),
        corner: frame.corner.len(),
        top_frame: frame.top.len(),
        input: frame.input.len(),
    })
}

/// Per-group tile counts of the unbounded rational system: core counts plus
/// the region extensions, and the level-free left boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalTileCountReport {
    pub compare: usize,
    pub shift: usize,
    pub subshift: usize,
    pub left_boundary: usize,
}

pub fn rational_tile_counts() -> RationalTileCountReport {
    let ext = build_rational_extension_tileset();
    RationalTileCountReport {
        compare: build_core_tileset(CoreKind::Compare).len() + ext.compare_ext.len(),
        shift: build_core_tileset(CoreKind::Shift).len() + ext.shift_ext.len(),
        subshift: build_core_tileset(CoreKind::SubShift).len() + ext.subshift_ext.len(),
        left_boundary: ext.left_boundary.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::validate_determinism;

    #[test]
    fn core_tile_counts() {
        assert_eq!(build_core_tileset(CoreKind::Compare).len(), 12);
        assert_eq!(build_core_tileset(CoreKind::Shift).len(), 8);
        assert_eq!(build_core_tileset(CoreKind::SubShift).len(), 16);
    }

    #[test]
    fn insert_tile_count_is_4n() {
        for n in [2usize, 4, 6, 8, 12] {
            assert_eq!(build_insert_tileset(n).unwrap().len(), 4 * n, "n={n}");
        }
        assert!(build_insert_tileset(1).is_err());
    }

    #[test]
    fn sqrt_boundary_group_counts() {
        for n in [2usize, 4, 8, 16] {
            let b = build_boundary_tileset(BoundaryContext::Sqrt, n).unwrap();
            assert_eq!(b.left.len(), 2 * n, "left frame for n={n}");
            assert_eq!(b.right.len(), 11);
            assert_eq!(b.corner.len(), 4);
            assert_eq!(b.top.len(), 4);
            assert_eq!(b.input.len(), 4);
        }
        assert!(build_boundary_tileset(BoundaryContext::Sqrt, 3).is_err());
    }

    #[test]
    fn rational_extension_counts() {
        let ext = build_rational_extension_tileset();
        assert_eq!(ext.compare_ext.len(), 9);
        assert_eq!(ext.shift_ext.len(), 2);
        assert_eq!(ext.subshift_ext.len(), 2);
        assert_eq!(ext.left_boundary.len(), 3);
        let counts = rational_tile_counts();
        assert_eq!(counts.compare, 21);
        assert_eq!(counts.shift, 10);
        assert_eq!(counts.subshift, 18);
        assert_eq!(counts.left_boundary, 3);
    }

    #[test]
    fn canonical_sets_are_deterministic() {
        for kind in [CoreKind::Compare, CoreKind::Shift, CoreKind::SubShift] {
            let ts = build_core_tileset(kind);
            assert!(validate_determinism(&ts).is_empty(), "{kind:?}");
        }
        let ts = build_insert_tileset(8).unwrap();
        assert!(validate_determinism(&ts).is_empty());
        let b = build_boundary_tileset(BoundaryContext::Sqrt, 8).unwrap();
        assert!(validate_determinism(&b.tiles).is_empty());
        let ext = build_rational_extension_tileset();
        assert!(validate_determinism(&ext.tiles).is_empty());
        let adder = build_adder_tileset();
        assert!(validate_determinism(&adder).is_empty());
    }

    #[test]
    fn task_tilesets_are_deterministic() {
        let setups = [
            seed_row(&TaskSeed::Compare {
                a: vec![1, 0, 1, 1, 1],
                b: vec![1, 1, 0, 0, 0],
            })
            .unwrap(),
            seed_row(&TaskSeed::Shift {
                a: vec![1, 0, 1, 1, 1],
            })
            .unwrap(),
            seed_row(&TaskSeed::SubShift {
                a: vec![1, 0, 1, 1, 1],
                b: vec![0, 1, 1, 0, 0],
            })
            .unwrap(),
            seed_row(&TaskSeed::Insert {
                q: vec![1, 0, 0, 1, 0, 0],
                i: 5,
                c: 1,
            })
            .unwrap(),
            seed_row(&TaskSeed::Division {
                a: BigUint::from(47u32),
                b: BigUint::from(12u32),
                frac: 4,
                dot: false,
            })
            .unwrap(),
            seed_row(&TaskSeed::Sqrt {
                m: BigUint::from(169u32),
                frac: 1,
                dot: false,
            })
            .unwrap(),
            seed_row(&TaskSeed::Rational {
                p: BigUint::from(1u32),
                q: BigUint::from(3u32),
                max_bits: 8,
            })
            .unwrap(),
        ];
        for setup in &setups {
            let report = validate_determinism(&setup.tileset);
            assert!(report.is_empty(), "conflicts: {report}");
        }
    }

    #[test]
    fn suffix_borrows_match_definition() {
        // a = 10111, b = 01100: borrow into each column is "suffix east of it
        // of a is smaller than that of b".
        // Only column 0 borrows: 0111 < 1100, while 111 > 100, 11 > 00,
        // 1 > 0, and the empty suffixes tie.
        let d = suffix_borrows(&[1, 0, 1, 1, 1], &[0, 1, 1, 0, 0]);
        assert_eq!(d, vec![1, 0, 0, 0, 0]);
    }
}
