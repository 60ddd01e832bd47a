//! The tile-assembly engine: tiles, glues, the temperature-τ attachment rule,
//! deterministic growth with an incremental frontier, and static determinism
//! validation of tile sets.
//!
//! A tile attaches at an empty cell iff the summed strengths of its matching
//! edges against already-placed neighbors reach the temperature τ. With τ = 2
//! and (almost) all glues of strength 1, attachment is cooperative: a tile
//! needs two matching neighbors. Strength-2 glues are used only on the frame
//! seams where a row must restart from a single bond.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};
use std::fmt;

use crate::error::EngineError;

/// Interned glue identifier. Id 0 is the null glue: empty label, strength 0.
pub type GlueId = u32;

/// The null (strength-0) glue present in every vocabulary.
pub const NULL_GLUE: GlueId = 0;

/// Label written for the null glue in serialized documents.
pub const NULL_GLUE_LABEL: &str = "0";

/// Tile identifier: index into its [`TileSet`].
pub type TileId = usize;

/// Glue vocabulary of one tile set: interned labels with strengths.
#[derive(Debug, Clone, Default)]
pub struct Vocab {
    labels: Vec<String>,
    strengths: Vec<u8>,
    index: HashMap<String, GlueId>,
}

impl Vocab {
    pub fn new() -> Self {
        let mut v = Vocab {
            labels: Vec::new(),
            strengths: Vec::new(),
            index: HashMap::new(),
        };
        v.labels.push(NULL_GLUE_LABEL.to_string());
        v.strengths.push(0);
        v.index.insert(NULL_GLUE_LABEL.to_string(), NULL_GLUE);
        v
    }

    /// Intern `label` at `strength`, returning its id. Re-interning the same
    /// label must use the same strength (anything else is a builder bug).
    pub fn intern(&mut self, label: &str, strength: u8) -> GlueId {
        if let Some(&id) = self.index.get(label) {
            assert_eq!(
                self.strengths[id as usize], strength,
                "glue `{label}` interned at two strengths"
            );
            return id;
        }
        let id = self.labels.len() as GlueId;
        self.labels.push(label.to_string());
        self.strengths.push(strength);
        self.index.insert(label.to_string(), id);
        id
    }

    pub fn lookup(&self, label: &str) -> Option<GlueId> {
        self.index.get(label).copied()
    }

    pub fn label(&self, id: GlueId) -> &str {
        &self.labels[id as usize]
    }

    pub fn strength(&self, id: GlueId) -> u8 {
        self.strengths[id as usize]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.len() <= 1
    }

    /// Non-null glues as (label, strength), in id order.
    pub fn entries(&self) -> impl Iterator<Item = (&str, u8)> {
        self.labels
            .iter()
            .zip(self.strengths.iter())
            .skip(1)
            .map(|(l, &s)| (l.as_str(), s))
    }
}

/// Display grouping of a tile, mirroring the color scheme of the figures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Category {
    Compare,
    Shift,
    SubShift,
    Insert,
    Boundary,
    Input,
    Dot,
    Adder,
}

impl Category {
    pub fn letter(self) -> char {
        match self {
            Category::Compare => 'C',
            Category::Shift => 'H',
            Category::SubShift => 'S',
            Category::Insert => 'I',
            Category::Boundary => 'B',
            Category::Input => 'D',
            Category::Dot => '.',
            Category::Adder => 'A',
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Category::Compare => "compare",
            Category::Shift => "shift",
            Category::SubShift => "subshift",
            Category::Insert => "insert",
            Category::Boundary => "boundary",
            Category::Input => "input",
            Category::Dot => "dot",
            Category::Adder => "adder",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "compare" => Category::Compare,
            "shift" => Category::Shift,
            "subshift" => Category::SubShift,
            "insert" => Category::Insert,
            "boundary" => Category::Boundary,
            "input" => Category::Input,
            "dot" => Category::Dot,
            "adder" => Category::Adder,
            _ => return None,
        })
    }
}

/// Which side(s) a tile binds through when it attaches cooperatively.
///
/// The growth in every system here is two-sided: a tile extends a row either
/// west-to-east (binding south + west), east-to-west (binding south + east),
/// attaches alone through one strength-2 south glue (`Solo`), or is only ever
/// pre-placed as part of a seed and never attaches at all (`SeedOnly`).
/// The engine itself ignores this field — attachment is the pure strength
/// rule — but [`validate_determinism`] scans the uniqueness key each mode
/// implies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum AttachMode {
    WestInput,
    EastInput,
    Solo,
    SeedOnly,
}

impl AttachMode {
    pub fn as_str(self) -> &'static str {
        match self {
            AttachMode::WestInput => "west-input",
            AttachMode::EastInput => "east-input",
            AttachMode::Solo => "solo",
            AttachMode::SeedOnly => "seed-only",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "west-input" => AttachMode::WestInput,
            "east-input" => AttachMode::EastInput,
            "solo" => AttachMode::Solo,
            "seed-only" => AttachMode::SeedOnly,
            _ => return None,
        })
    }
}

/// Edge direction on a tile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dir {
    North,
    East,
    South,
    West,
}

pub const DIRS: [Dir; 4] = [Dir::North, Dir::East, Dir::South, Dir::West];

impl Dir {
    pub fn opposite(self) -> Dir {
        match self {
            Dir::North => Dir::South,
            Dir::East => Dir::West,
            Dir::South => Dir::North,
            Dir::West => Dir::East,
        }
    }

    pub fn offset(self) -> (i32, i32) {
        match self {
            Dir::North => (0, 1),
            Dir::East => (1, 0),
            Dir::South => (0, -1),
            Dir::West => (-1, 0),
        }
    }

    fn index(self) -> usize {
        match self {
            Dir::North => 0,
            Dir::East => 1,
            Dir::South => 2,
            Dir::West => 3,
        }
    }
}

/// A unit square tile: four directed glues plus identity and display data.
/// Tiles are never rotated or reflected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    pub name: String,
    pub north: GlueId,
    pub east: GlueId,
    pub south: GlueId,
    pub west: GlueId,
    pub category: Category,
    pub attach: AttachMode,
}

impl Tile {
    pub fn glue(&self, dir: Dir) -> GlueId {
        match dir {
            Dir::North => self.north,
            Dir::East => self.east,
            Dir::South => self.south,
            Dir::West => self.west,
        }
    }
}

/// An immutable-after-construction tile system: vocabulary, tiles, τ.
#[derive(Debug, Clone)]
pub struct TileSet {
    vocab: Vocab,
    tiles: Vec<Tile>,
    tau: u32,
    by_name: HashMap<String, TileId>,
}

impl TileSet {
    pub fn new(tau: u32) -> Self {
        TileSet {
            vocab: Vocab::new(),
            tiles: Vec::new(),
            tau,
            by_name: HashMap::new(),
        }
    }

    pub fn tau(&self) -> u32 {
        self.tau
    }

    pub fn vocab(&self) -> &Vocab {
        &self.vocab
    }

    pub fn intern_glue(&mut self, label: &str, strength: u8) -> GlueId {
        self.vocab.intern(label, strength)
    }

    /// Add a tile; names must be unique within the set.
    pub fn add_tile(&mut self, tile: Tile) -> TileId {
        assert!(
            !self.by_name.contains_key(&tile.name),
            "duplicate tile name `{}`",
            tile.name
        );
        let id = self.tiles.len();
        self.by_name.insert(tile.name.clone(), id);
        self.tiles.push(tile);
        id
    }

    pub fn tile(&self, id: TileId) -> &Tile {
        &self.tiles[id]
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn len(&self) -> usize {
        self.tiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tiles.is_empty()
    }

    pub fn tile_by_name(&self, name: &str) -> Option<TileId> {
        self.by_name.get(name).copied()
    }

    pub fn glue_strength(&self, id: GlueId) -> u8 {
        self.vocab.strength(id)
    }

    pub fn glue_label(&self, id: GlueId) -> &str {
        self.vocab.label(id)
    }

    /// Count tiles per category.
    pub fn category_counts(&self) -> BTreeMap<Category, usize> {
        let mut out = BTreeMap::new();
        for t in &self.tiles {
            *out.entry(t.category).or_insert(0) += 1;
        }
        out
    }
}

/// Semantic equality: same τ and the same tiles (by name, glue labels,
/// strengths, category, attach mode), independent of interning order.
impl PartialEq for TileSet {
    fn eq(&self, other: &Self) -> bool {
        if self.tau != other.tau || self.tiles.len() != other.tiles.len() {
            return false;
        }
        self.tiles.iter().zip(other.tiles.iter()).all(|(a, b)| {
            a.name == b.name
                && a.category == b.category
                && a.attach == b.attach
                && DIRS.iter().all(|&d| {
                    self.vocab.label(a.glue(d)) == other.vocab.label(b.glue(d))
                        && self.vocab.strength(a.glue(d)) == other.vocab.strength(b.glue(d))
                })
        })
    }
}

impl Eq for TileSet {}

/// Lattice position. Ordering is lexicographic (x, then y), which fixes the
/// engine's deterministic tie-break.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub x: i32,
    pub y: i32,
}

impl Position {
    pub fn new(x: i32, y: i32) -> Self {
        Position { x, y }
    }

    pub fn neighbor(self, dir: Dir) -> Position {
        let (dx, dy) = dir.offset();
        Position {
            x: self.x + dx,
            y: self.y + dy,
        }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// One growth step: which tile attached where, and when.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AttachmentEvent {
    pub position: Position,
    pub tile: TileId,
    pub step_index: usize,
}

/// Growth state of an assembly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Growing,
    Halted,
    StepLimitExceeded,
    ExtentLimitExceeded,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Growing => "growing",
            Status::Halted => "halted",
            Status::StepLimitExceeded => "step-limit-exceeded",
            Status::ExtentLimitExceeded => "extent-limit-exceeded",
        }
    }
}

/// The initial placed tiles (input row plus corner/starter tiles) from which
/// growth proceeds.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SeedConfiguration {
    placements: Vec<(Position, TileId)>,
    occupied: HashSet<Position>,
}

impl SeedConfiguration {
    pub fn new() -> Self {
        SeedConfiguration {
            placements: Vec::new(),
            occupied: HashSet::new(),
        }
    }

    pub fn place(&mut self, pos: Position, tile: TileId) -> Result<(), EngineError> {
        if !self.occupied.insert(pos) {
            return Err(EngineError::OverlappingSeed { x: pos.x, y: pos.y });
        }
        self.placements.push((pos, tile));
        Ok(())
    }

    pub fn placements(&self) -> &[(Position, TileId)] {
        &self.placements
    }

    pub fn len(&self) -> usize {
        self.placements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placements.is_empty()
    }
}

/// Growth limits for [`run_to_completion`].
#[derive(Debug, Clone, Copy)]
pub struct GrowthLimits {
    /// Maximum number of attachment steps (beyond the seed).
    pub max_steps: usize,
    /// Maximum absolute coordinate any placed tile may reach.
    pub max_extent: i32,
}

impl GrowthLimits {
    pub fn unbounded() -> Self {
        GrowthLimits {
            max_steps: usize::MAX,
            max_extent: i32::MAX - 1,
        }
    }

    pub fn steps(max_steps: usize) -> Self {
        GrowthLimits {
            max_steps,
            ..Self::unbounded()
        }
    }
}

impl Default for GrowthLimits {
    fn default() -> Self {
        Self::unbounded()
    }
}

/// Per-side lookup from glue id to the tiles carrying that glue on that side.
#[derive(Debug, Clone, Default)]
struct TileIndex {
    by_side: [HashMap<GlueId, Vec<TileId>>; 4],
}

impl TileIndex {
    fn build(tileset: &TileSet) -> Self {
        let mut idx = TileIndex::default();
        for (id, tile) in tileset.tiles().iter().enumerate() {
            for &dir in &DIRS {
                let g = tile.glue(dir);
                if tileset.glue_strength(g) > 0 {
                    idx.by_side[dir.index()].entry(g).or_default().push(id);
                }
            }
        }
        idx
    }
}

/// A sparse, growing assembly: placed tiles, frontier bookkeeping, and the
/// attachment trace.
#[derive(Debug, Clone)]
pub struct Assembly {
    placed: HashMap<Position, TileId>,
    trace: Vec<AttachmentEvent>,
    status: Status,
    /// Empty cells adjacent to at least one placed tile.
    frontier: BTreeSet<Position>,
    /// Frontier cells that currently have exactly one attachable tile.
    unique: BTreeMap<Position, TileId>,
    /// First ambiguity discovered, if any. Candidate sets only grow as
    /// neighbors are placed, so ambiguity is permanent once seen.
    ambiguity: Option<(Position, TileId, TileId)>,
    index: TileIndex,
    seed: SeedConfiguration,
    min: Position,
    max: Position,
}

impl Assembly {
    /// Start an assembly from a seed. The seed tiles are placed verbatim
    /// (they do not need to satisfy the attachment rule) and the frontier is
    /// computed.
    pub fn new_from_seed(
        seed: &SeedConfiguration,
        tileset: &TileSet,
    ) -> Result<Assembly, EngineError> {
        let mut asm = Assembly {
            placed: HashMap::new(),
            trace: Vec::new(),
            status: Status::Growing,
            frontier: BTreeSet::new(),
            unique: BTreeMap::new(),
            ambiguity: None,
            index: TileIndex::build(tileset),
            seed: seed.clone(),
            min: Position::new(i32::MAX, i32::MAX),
            max: Position::new(i32::MIN, i32::MIN),
        };
        for &(pos, tile) in seed.placements() {
            if tile >= tileset.len() {
                return Err(EngineError::UnknownTile(tile));
            }
            if asm.placed.insert(pos, tile).is_some() {
                return Err(EngineError::OverlappingSeed { x: pos.x, y: pos.y });
            }
            asm.bump_extent(pos);
        }
        let seeded: Vec<Position> = asm.placed.keys().copied().collect();
        for pos in seeded {
            asm.frontier.remove(&pos);
            for &dir in &DIRS {
                let n = pos.neighbor(dir);
                if !asm.placed.contains_key(&n) {
                    asm.frontier.insert(n);
                }
            }
        }
        let cells: Vec<Position> = asm.frontier.iter().copied().collect();
        for cell in cells {
            asm.reevaluate(cell, tileset);
        }
        Ok(asm)
    }

    fn bump_extent(&mut self, pos: Position) {
        self.min.x = self.min.x.min(pos.x);
        self.min.y = self.min.y.min(pos.y);
        self.max.x = self.max.x.max(pos.x);
        self.max.y = self.max.y.max(pos.y);
    }

    pub fn placed(&self) -> &HashMap<Position, TileId> {
        &self.placed
    }

    pub fn tile_at(&self, pos: Position) -> Option<TileId> {
        self.placed.get(&pos).copied()
    }

    pub fn trace(&self) -> &[AttachmentEvent] {
        &self.trace
    }

    pub fn status(&self) -> Status {
        self.status
    }

    pub fn seed(&self) -> &SeedConfiguration {
        &self.seed
    }

    pub fn len(&self) -> usize {
        self.placed.len()
    }

    pub fn is_empty(&self) -> bool {
        self.placed.is_empty()
    }

    /// Bounding box (min, max) of all placed tiles.
    pub fn bounds(&self) -> (Position, Position) {
        (self.min, self.max)
    }

    /// Positions on the frontier that currently accept exactly one tile.
    pub fn unique_frontier(&self) -> Vec<(Position, TileId)> {
        self.unique.iter().map(|(&p, &t)| (p, t)).collect()
    }

    /// Total bond strength tile `tile` would have at `pos`.
    fn bond_strength(&self, pos: Position, tile: &Tile, tileset: &TileSet) -> u32 {
        let mut total = 0u32;
        for &dir in &DIRS {
            if let Some(&nid) = self.placed.get(&pos.neighbor(dir)) {
                let own = tile.glue(dir);
                let theirs = tileset.tile(nid).glue(dir.opposite());
                if own == theirs {
                    total += u32::from(tileset.glue_strength(own));
                }
            }
        }
        total
    }

    /// All tiles attachable at `cell` under the strength rule.
    fn candidates_at(&self, cell: Position, tileset: &TileSet) -> Vec<TileId> {
        let mut seen: Vec<TileId> = Vec::new();
        for &dir in &DIRS {
            if let Some(&nid) = self.placed.get(&cell.neighbor(dir)) {
                let theirs = tileset.tile(nid).glue(dir.opposite());
                if tileset.glue_strength(theirs) == 0 {
                    continue;
                }
                if let Some(list) = self.index.by_side[dir.index()].get(&theirs) {
                    for &cand in list {
                        if !seen.contains(&cand) {
                            seen.push(cand);
                        }
                    }
                }
            }
        }
        seen.retain(|&cand| {
            self.bond_strength(cell, tileset.tile(cand), tileset) >= tileset.tau()
        });
        seen.sort_unstable();
        seen
    }

    /// Recompute the candidate status of one frontier cell.
    fn reevaluate(&mut self, cell: Position, tileset: &TileSet) {
        let cands = self.candidates_at(cell, tileset);
        match cands.len() {
            0 => {
                self.unique.remove(&cell);
            }
            1 => {
                self.unique.insert(cell, cands[0]);
            }
            _ => {
                self.unique.remove(&cell);
                if self.ambiguity.is_none() {
                    self.ambiguity = Some((cell, cands[0], cands[1]));
                }
            }
        }
    }

    /// Place `tile` at `pos` as a growth step and update the frontier.
    fn commit(&mut self, pos: Position, tile: TileId, tileset: &TileSet) {
        let step_index = self.trace.len();
        self.placed.insert(pos, tile);
        self.bump_extent(pos);
        self.trace.push(AttachmentEvent {
            position: pos,
            tile,
            step_index,
        });
        self.frontier.remove(&pos);
        self.unique.remove(&pos);
        for &dir in &DIRS {
            let n = pos.neighbor(dir);
            if !self.placed.contains_key(&n) {
                self.frontier.insert(n);
                self.reevaluate(n, tileset);
            }
        }
    }

    /// Perform one deterministic growth step: attach the unique candidate at
    /// the smallest frontier position. Returns `Ok(None)` and flips status to
    /// `Halted` when nothing can attach.
    pub fn step(&mut self, tileset: &TileSet) -> Result<Option<AttachmentEvent>, EngineError> {
        if let Some((pos, a, b)) = self.ambiguity {
            return Err(EngineError::AmbiguousAttachment {
                x: pos.x,
                y: pos.y,
                first: tileset.tile(a).name.clone(),
                second: tileset.tile(b).name.clone(),
            });
        }
        let Some((&pos, &tile)) = self.unique.iter().next() else {
            self.status = Status::Halted;
            return Ok(None);
        };
        self.commit(pos, tile, tileset);
        if self.ambiguity.is_some() {
            // Surface the ambiguity created by this very placement.
            return self.step_error(tileset);
        }
        Ok(Some(self.trace[self.trace.len() - 1]))
    }

    fn step_error(&self, tileset: &TileSet) -> Result<Option<AttachmentEvent>, EngineError> {
        let (pos, a, b) = self.ambiguity.expect("ambiguity recorded");
        Err(EngineError::AmbiguousAttachment {
            x: pos.x,
            y: pos.y,
            first: tileset.tile(a).name.clone(),
            second: tileset.tile(b).name.clone(),
        })
    }

    /// Attach the unique candidate at a chosen frontier cell (for randomized
    /// growth-order experiments). The cell must currently hold exactly one
    /// candidate.
    pub fn step_at(
        &mut self,
        pos: Position,
        tileset: &TileSet,
    ) -> Result<AttachmentEvent, EngineError> {
        if let Some((apos, a, b)) = self.ambiguity {
            return Err(EngineError::AmbiguousAttachment {
                x: apos.x,
                y: apos.y,
                first: tileset.tile(a).name.clone(),
                second: tileset.tile(b).name.clone(),
            });
        }
        let Some(&tile) = self.unique.get(&pos) else {
            return Err(EngineError::OccupiedPosition { x: pos.x, y: pos.y });
        };
        self.commit(pos, tile, tileset);
        Ok(self.trace[self.trace.len() - 1])
    }

    /// Run until halted or a limit trips; the final status records which.
    pub fn run(
        &mut self,
        tileset: &TileSet,
        limits: GrowthLimits,
    ) -> Result<Status, EngineError> {
        let mut steps = 0usize;
        loop {
            if steps >= limits.max_steps {
                self.status = Status::StepLimitExceeded;
                return Ok(self.status);
            }
            if let Some((&pos, _)) = self.unique.iter().next() {
                if pos.x.abs() > limits.max_extent || pos.y.abs() > limits.max_extent {
                    self.status = Status::ExtentLimitExceeded;
                    return Ok(self.status);
                }
            }
            match self.step(tileset)? {
                Some(_) => steps += 1,
                None => return Ok(self.status),
            }
        }
    }
}

/// Eq. (1)-style attachment test for one tile at one position.
///
/// Errors (rather than returning `false`) if `pos` is occupied, so callers
/// cannot confuse "cannot attach" with "already full".
pub fn attachable(
    assembly: &Assembly,
    pos: Position,
    tile: TileId,
    tileset: &TileSet,
) -> Result<bool, EngineError> {
    if assembly.placed.contains_key(&pos) {
        return Err(EngineError::OccupiedPosition { x: pos.x, y: pos.y });
    }
    if tile >= tileset.len() {
        return Err(EngineError::UnknownTile(tile));
    }
    Ok(assembly.bond_strength(pos, tileset.tile(tile), tileset) >= tileset.tau())
}

/// Every (position, tile) pair currently attachable, in lexicographic order
/// (position, then tile id). Lists *all* candidates, including multiple tiles
/// at one cell, so it also exposes ambiguities.
pub fn frontier_attachments(assembly: &Assembly, tileset: &TileSet) -> Vec<(Position, TileId)> {
    let mut out = Vec::new();
    for &cell in &assembly.frontier {
        for cand in assembly.candidates_at(cell, tileset) {
            out.push((cell, cand));
        }
    }
    out
}

/// Run a seed to completion under `limits`.
pub fn run_to_completion(
    seed: &SeedConfiguration,
    tileset: &TileSet,
    limits: GrowthLimits,
) -> Result<Assembly, EngineError> {
    let mut asm = Assembly::new_from_seed(seed, tileset)?;
    asm.run(tileset, limits)?;
    Ok(asm)
}

/// Rebuild an assembly from a seed plus a recorded trace, without consulting
/// the attachment rule. Verifies positions stay disjoint.
pub fn replay(
    seed: &SeedConfiguration,
    trace: &[AttachmentEvent],
    tileset: &TileSet,
) -> Result<Assembly, EngineError> {
    let mut asm = Assembly::new_from_seed(seed, tileset)?;
    for (i, ev) in trace.iter().enumerate() {
        if asm.placed.contains_key(&ev.position) || ev.tile >= tileset.len() {
            return Err(EngineError::ReplayDiverged { step: i });
        }
        asm.commit(ev.position, ev.tile, tileset);
    }
    Ok(asm)
}

/// One conflict found by [`validate_determinism`]: two tiles that share the
/// uniqueness key their attachment mode implies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeterminismConflict {
    pub first: String,
    pub second: String,
    pub key: String,
}

/// Findings of the static determinism scan.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DeterminismReport {
    /// West-input tiles sharing (south, west).
    pub south_west: Vec<DeterminismConflict>,
    /// East-input tiles sharing (south, east).
    pub south_east: Vec<DeterminismConflict>,
    /// Solo tiles sharing a south glue, solo tiles whose south glue is not
    /// strength 2, or solo souths reachable by cooperative tiles as well.
    pub solo: Vec<DeterminismConflict>,
}

impl DeterminismReport {
    pub fn is_empty(&self) -> bool {
        self.south_west.is_empty() && self.south_east.is_empty() && self.solo.is_empty()
    }
}

impl fmt::Display for DeterminismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "no determinism conflicts");
        }
        for c in &self.south_west {
            writeln!(f, "south+west conflict {}: `{}` vs `{}`", c.key, c.first, c.second)?;
        }
        for c in &self.south_east {
            writeln!(f, "south+east conflict {}: `{}` vs `{}`", c.key, c.first, c.second)?;
        }
        for c in &self.solo {
            writeln!(f, "solo-south conflict {}: `{}` vs `{}`", c.key, c.first, c.second)?;
        }
        Ok(())
    }
}

/// Statically validate that a tile set grows deterministically.
///
/// Each tile declares through which sides it binds when it attaches
/// (`AttachMode`); the scan checks that the implied input key is unique:
/// (south, west) for west-input tiles, (south, east) for east-input tiles,
/// and the bare strength-2 south glue for solo tiles — which additionally
/// must not appear as the south glue of any other non-seed tile, since a
/// strength-2 south makes every tile carrying it a candidate on its own.
/// Runtime ambiguity detection in the engine is the second, dynamic layer.
pub fn validate_determinism(tileset: &TileSet) -> DeterminismReport {
    let mut report = DeterminismReport::default();
    let mut west_keys: HashMap<(GlueId, GlueId), TileId> = HashMap::new();
    let mut east_keys: HashMap<(GlueId, GlueId), TileId> = HashMap::new();
    let mut solo_souths: HashMap<GlueId, TileId> = HashMap::new();

    let key_label = |a: GlueId, b: GlueId| {
        format!(
            "(south `{}`, `{}`)",
            tileset.glue_label(a),
            tileset.glue_label(b)
        )
    };

    for (id, tile) in tileset.tiles().iter().enumerate() {
        match tile.attach {
            AttachMode::WestInput => {
                if let Some(&other) = west_keys.get(&(tile.south, tile.west)) {
                    report.south_west.push(DeterminismConflict {
                        first: tileset.tile(other).name.clone(),
                        second: tile.name.clone(),
                        key: key_label(tile.south, tile.west),
                    });
                } else {
                    west_keys.insert((tile.south, tile.west), id);
                }
            }
            AttachMode::EastInput => {
                if let Some(&other) = east_keys.get(&(tile.south, tile.east)) {
                    report.south_east.push(DeterminismConflict {
                        first: tileset.tile(other).name.clone(),
                        second: tile.name.clone(),
                        key: key_label(tile.south, tile.east),
                    });
                } else {
                    east_keys.insert((tile.south, tile.east), id);
                }
            }
            AttachMode::Solo => {
                if tileset.glue_strength(tile.south) != 2 {
                    report.solo.push(DeterminismConflict {
                        first: tile.name.clone(),
                        second: tile.name.clone(),
                        key: format!(
                            "solo tile with south `{}` of strength {}",
                            tileset.glue_label(tile.south),
                            tileset.glue_strength(tile.south)
                        ),
                    });
                } else if let Some(&other) = solo_souths.get(&tile.south) {
                    report.solo.push(DeterminismConflict {
                        first: tileset.tile(other).name.clone(),
                        second: tile.name.clone(),
                        key: format!("south `{}`", tileset.glue_label(tile.south)),
                    });
                } else {
                    solo_souths.insert(tile.south, id);
                }
            }
            AttachMode::SeedOnly => {}
        }
    }

    // A solo (strength-2) south glue must belong to solo tiles exclusively:
    // any other tile with the same south would co-attach at the same cell.
    for (id, tile) in tileset.tiles().iter().enumerate() {
        if matches!(tile.attach, AttachMode::Solo | AttachMode::SeedOnly) {
            continue;
        }
        if let Some(&solo) = solo_souths.get(&tile.south) {
            if solo != id {
                report.solo.push(DeterminismConflict {
                    first: tileset.tile(solo).name.clone(),
                    second: tile.name.clone(),
                    key: format!("shared solo south `{}`", tileset.glue_label(tile.south)),
                });
            }
        }
    }

    report
}

#[cfg(test)]
mod tests {
    use super::*;

    /// A toy west-to-east row system: seed corner emits east `go`, tiles
    /// consume (south `base`, west `go`) and re-emit `go` east, `n` north.
    fn toy_row_set() -> (TileSet, SeedConfiguration) {
        let mut ts = TileSet::new(2);
        let base = ts.intern_glue("base", 1);
        let go = ts.intern_glue("go", 1);
        let n = ts.intern_glue("n", 1);
        let corner = ts.add_tile(Tile {
            name: "corner".into(),
            north: NULL_GLUE,
            east: go,
            south: NULL_GLUE,
            west: NULL_GLUE,
            category: Category::Boundary,
            attach: AttachMode::SeedOnly,
        });
        let floor = ts.add_tile(Tile {
            name: "floor".into(),
            north: base,
            east: NULL_GLUE,
            south: NULL_GLUE,
            west: NULL_GLUE,
            category: Category::Input,
            attach: AttachMode::SeedOnly,
        });
        ts.add_tile(Tile {
            name: "runner".into(),
            north: n,
            east: go,
            south: base,
            west: go,
            category: Category::Shift,
            attach: AttachMode::WestInput,
        });
        let mut seed = SeedConfiguration::new();
        seed.place(Position::new(0, 1), corner).unwrap();
        for x in 1..=4 {
            seed.place(Position::new(x, 0), floor).unwrap();
        }
        (ts, seed)
    }

    #[test]
    fn toy_row_grows_left_to_right_and_halts() {
        let (ts, seed) = toy_row_set();
        let asm = run_to_completion(&seed, &ts, GrowthLimits::unbounded()).unwrap();
        assert_eq!(asm.status(), Status::Halted);
        assert_eq!(asm.trace().len(), 4);
        for (i, ev) in asm.trace().iter().enumerate() {
            assert_eq!(ev.position, Position::new(i as i32 + 1, 1));
            assert_eq!(ev.step_index, i);
        }
        assert_eq!(asm.len(), 9);
    }

    #[test]
    fn cooperative_attachment_needs_two_bonds() {
        let (ts, seed) = toy_row_set();
        let asm = Assembly::new_from_seed(&seed, &ts).unwrap();
        let runner = ts.tile_by_name("runner").unwrap();
        // (1,1) has both south and west neighbors: attachable.
        assert!(attachable(&asm, Position::new(1, 1), runner, &ts).unwrap());
        // (2,1) has only the south neighbor so far: one strength-1 bond.
        assert!(!attachable(&asm, Position::new(2, 1), runner, &ts).unwrap());
        // Occupied position is an error, not `false`.
        assert_eq!(
            attachable(&asm, Position::new(1, 0), runner, &ts),
            Err(EngineError::OccupiedPosition { x: 1, y: 0 })
        );
    }

    #[test]
    fn zero_strength_edges_bond_nothing() {
        let mut ts = TileSet::new(2);
        let z = ts.intern_glue("z", 0);
        let seed_tile = ts.add_tile(Tile {
            name: "seed".into(),
            north: z,
            east: NULL_GLUE,
            south: NULL_GLUE,
            west: NULL_GLUE,
            category: Category::Boundary,
            attach: AttachMode::SeedOnly,
        });
        ts.add_tile(Tile {
            name: "upper".into(),
            north: NULL_GLUE,
            east: NULL_GLUE,
            south: z,
            west: NULL_GLUE,
            category: Category::Boundary,
            attach: AttachMode::SeedOnly,
        });
        let mut seed = SeedConfiguration::new();
        seed.place(Position::new(0, 0), seed_tile).unwrap();
        let asm = run_to_completion(&seed, &ts, GrowthLimits::unbounded()).unwrap();
        assert_eq!(asm.status(), Status::Halted);
        assert_eq!(asm.len(), 1);
    }

    #[test]
    fn frontier_enumeration_is_sorted_and_exact() {
        let (ts, seed) = toy_row_set();
        let asm = Assembly::new_from_seed(&seed, &ts).unwrap();
        let fa = frontier_attachments(&asm, &ts);
        let runner = ts.tile_by_name("runner").unwrap();
        assert_eq!(fa, vec![(Position::new(1, 1), runner)]);
    }

    #[test]
    fn step_limit_is_reported() {
        let (ts, seed) = toy_row_set();
        let mut asm = Assembly::new_from_seed(&seed, &ts).unwrap();
        let status = asm.run(&ts, GrowthLimits::steps(2)).unwrap();
        assert_eq!(status, Status::StepLimitExceeded);
        assert_eq!(asm.trace().len(), 2);
    }

    #[test]
    fn ambiguity_is_a_hard_error() {
        let (mut ts, seed) = toy_row_set();
        // A second tile with the same (south, west) key.
        let base = ts.vocab().lookup("base").unwrap();
        let go = ts.vocab().lookup("go").unwrap();
        ts.add_tile(Tile {
            name: "impostor".into(),
            north: NULL_GLUE,
            east: go,
            south: base,
            west: go,
            category: Category::Shift,
            attach: AttachMode::WestInput,
        });
        let report = validate_determinism(&ts);
        assert_eq!(report.south_west.len(), 1);
        let mut asm = Assembly::new_from_seed(&seed, &ts).unwrap();
        let err = asm.run(&ts, GrowthLimits::unbounded()).unwrap_err();
        assert!(matches!(err, EngineError::AmbiguousAttachment { .. }));
    }

    #[test]
    fn replay_reconstructs_the_final_assembly() {
        let (ts, seed) = toy_row_set();
        let asm = run_to_completion(&seed, &ts, GrowthLimits::unbounded()).unwrap();
        let replayed = replay(&seed, asm.trace(), &ts).unwrap();
        assert_eq!(replayed.placed(), asm.placed());
    }

    #[test]
    fn monotone_growth_one_tile_per_step() {
        let (ts, seed) = toy_row_set();
        let mut asm = Assembly::new_from_seed(&seed, &ts).unwrap();
        let mut prev = asm.len();
        while let Some(_) = asm.step(&ts).unwrap() {
            assert_eq!(asm.len(), prev + 1);
            prev = asm.len();
        }
    }

    #[test]
    fn empty_tileset_halts_immediately() {
        let mut ts = TileSet::new(2);
        let t = ts.add_tile(Tile {
            name: "lone".into(),
            north: NULL_GLUE,
            east: NULL_GLUE,
            south: NULL_GLUE,
            west: NULL_GLUE,
            category: Category::Boundary,
            attach: AttachMode::SeedOnly,
        });
        let mut seed = SeedConfiguration::new();
        seed.place(Position::new(0, 0), t).unwrap();
        let asm = run_to_completion(&seed, &ts, GrowthLimits::unbounded()).unwrap();
        assert_eq!(asm.status(), Status::Halted);
        assert!(asm.trace().is_empty());
    }

    #[test]
    fn duplicated_tile_under_new_name_is_reported() {
        let (mut ts, _) = toy_row_set();
        let orig = ts.tile(ts.tile_by_name("runner").unwrap()).clone();
        ts.add_tile(Tile {
            name: "runner-copy".into(),
            ..orig
        });
        let report = validate_determinism(&ts);
        assert!(!report.is_empty());
        assert_eq!(report.south_west.len(), 1);
    }
}
