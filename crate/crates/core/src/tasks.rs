//! The arithmetic operations, each carried out by growing an assembly and
//! reading the answer back off the tiles. Every task validates its tile set
//! statically, grows the assembly under explicit limits, verifies the
//! geometry it expects, and returns the decoded value together with the run.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigUint;
use num_traits::Zero;

use crate::builders::{adder_row, build_pi_tileset, seed_row, TaskSeed, TaskSetup};
use crate::engine::{
    validate_determinism, Assembly, GrowthLimits, Position, SeedConfiguration, Status, TileId,
    TileSet,
};
use crate::error::{OracleError, TaskError};
use crate::fixed::{biguint_bits, FixedPointBinary};
use crate::oracles::bits_to_biguint;

/// Outcome of a comparison row.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Less,
    Equal,
    Greater,
}

impl Relation {
    pub fn as_str(self) -> &'static str {
        match self {
            Relation::Less => "<",
            Relation::Equal => "=",
            Relation::Greater => ">",
        }
    }
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A finished run: the tile set that grew it plus the assembly itself.
#[derive(Debug, Clone)]
pub struct TaskRun {
    pub tileset: TileSet,
    pub assembly: Assembly,
}

impl TaskRun {
    /// Number of attachment steps performed after the seed.
    pub fn steps(&self) -> usize {
        self.assembly.trace().len()
    }
}

/// Digits of a binary expansion together with its eventual behavior.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpansionResult {
    /// Fraction digits, most significant first.
    pub digits: Vec<u8>,
    /// `(start, length)` of the repeating cycle in `digits`, when one was
    /// detected within the window.
    pub period: Option<(usize, usize)>,
    /// The expansion reached remainder zero (all later digits are 0).
    pub terminated: bool,
}

fn validated(setup: TaskSetup) -> Result<TaskSetup, TaskError> {
    let report = validate_determinism(&setup.tileset);
    if !report.is_empty() {
        return Err(TaskError::NonDeterministicTileSet(report.to_string()));
    }
    Ok(setup)
}

fn grow(setup: &TaskSetup, limits: GrowthLimits) -> Result<Assembly, TaskError> {
    let mut asm = Assembly::new_from_seed(&setup.seed, &setup.tileset)?;
    asm.run(&setup.tileset, limits)?;
    Ok(asm)
}

/// Process-wide attachment-step ceiling; 0 means uncapped.
static STEP_CAP: AtomicUsize = AtomicUsize::new(0);

/// Cap the attachment-step budget of every subsequent task run in this
/// process, or lift the cap with `None`. The cap only ever lowers a task's
/// own computed budget; a run that hits it fails with
/// [`TaskError::IncompleteGrowth`]. Embedding surfaces expose this as their
/// step-limit override.
pub fn set_step_cap(cap: Option<usize>) {
    STEP_CAP.store(cap.unwrap_or(0), Ordering::Relaxed);
}

fn capped(mut limits: GrowthLimits) -> GrowthLimits {
    let cap = STEP_CAP.load(Ordering::Relaxed);
    if cap != 0 {
        limits.max_steps = limits.max_steps.min(cap);
    }
    limits
}

/// Step budget with headroom for a task whose rows have known lengths.
fn limits_for(rows: usize, width: usize, levels: usize) -> GrowthLimits {
    let max_y = 3 * levels.max(1) as i32 + 2;
    capped(GrowthLimits {
        max_steps: rows * (width + 2) + 16,
        max_extent: (width as i32 + 2).max(max_y) + 2,
    })
}

fn tile_name<'a>(run_ts: &'a TileSet, asm: &Assembly, x: i32, y: i32) -> Result<&'a str, TaskError> {
    let id = asm
        .tile_at(Position::new(x, y))
        .ok_or(TaskError::IncompleteGrowth)?;
    Ok(run_ts.tile(id).name.as_str())
}

/// Read one component of the north pair glue along a row.
fn north_components(
    ts: &TileSet,
    asm: &Assembly,
    width: usize,
    y: i32,
    index: usize,
) -> Result<Vec<u8>, TaskError> {
    let mut out = Vec::with_capacity(width);
    for x in 1..=width as i32 {
        let id = asm
            .tile_at(Position::new(x, y))
            .ok_or(TaskError::IncompleteGrowth)?;
        let label = ts.glue_label(ts.tile(id).north);
        let byte = label
            .as_bytes()
            .get(index)
            .copied()
            .ok_or(TaskError::IncompleteGrowth)?;
        out.push(byte - b'0');
    }
    Ok(out)
}

fn ensure_bits(bits: &[u8]) -> Result<(), TaskError> {
    if bits.iter().any(|&b| b > 1) {
        return Err(TaskError::Unsupported("bits must be 0 or 1".into()));
    }
    Ok(())
}

fn pad_to_common(a: &[u8], b: &[u8]) -> (Vec<u8>, Vec<u8>) {
    let w = a.len().max(b.len());
    let mut pa = vec![0u8; w - a.len()];
    pa.extend_from_slice(a);
    let mut pb = vec![0u8; w - b.len()];
    pb.extend_from_slice(b);
    (pa, pb)
}

/// Compare two bit strings (most significant bit first) by growing one
/// compare row; the relation is read from the terminal frame tile.
/// Operands of different lengths are zero-padded on the left to a
/// common width first.
pub fn compare_numbers(a: &[u8], b: &[u8]) -> Result<(Relation, TaskRun), TaskError> {
    ensure_bits(a)?;
    ensure_bits(b)?;
    let (pa, pb) = pad_to_common(a, b);
    let setup = validated(seed_row(&TaskSeed::Compare { a: pa, b: pb })?)?;
    let asm = grow(&setup, limits_for(1, setup.width, 0))?;
    if asm.status() != Status::Halted {
        return Err(TaskError::IncompleteGrowth);
    }
    let name = tile_name(&setup.tileset, &asm, 0, 1)?;
    let relation = match name.as_bytes().last() {
        Some(b'l') => Relation::Less,
        Some(b'e') => Relation::Equal,
        Some(b'g') => Relation::Greater,
        _ => return Err(TaskError::IncompleteGrowth),
    };
    Ok((
        relation,
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

/// Shift a bit string one place right (0 enters at the most significant
/// end, the last bit drops off).
pub fn shift_right(a: &[u8]) -> Result<(Vec<u8>, TaskRun), TaskError> {
    ensure_bits(a)?;
    let setup = validated(seed_row(&TaskSeed::Shift { a: a.to_vec() })?)?;
    let asm = grow(&setup, limits_for(1, setup.width, 0))?;
    if asm.status() != Status::Halted || asm.tile_at(Position::new(setup.width as i32 + 1, 1)).is_none()
    {
        return Err(TaskError::IncompleteGrowth);
    }
    let result = north_components(&setup.tileset, &asm, setup.width, 1, 2)?;
    Ok((
        result,
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

/// Subtract `b` from `a` (both most significant bit first, `a >= b`) and
/// simultaneously halve `b`: one grown row yields both results.
pub fn subtract_and_shift(a: &[u8], b: &[u8]) -> Result<((Vec<u8>, Vec<u8>), TaskRun), TaskError> {
    ensure_bits(a)?;
    ensure_bits(b)?;
    let (pa, pb) = pad_to_common(a, b);
    if bits_to_biguint(&pa) < bits_to_biguint(&pb) {
        return Err(TaskError::Oracle(OracleError::Underflow));
    }
    let setup = validated(seed_row(&TaskSeed::SubShift { a: pa, b: pb })?)?;
    let asm = grow(&setup, limits_for(1, setup.width, 0))?;
    if asm.status() != Status::Halted || asm.tile_at(Position::new(setup.width as i32 + 1, 1)).is_none()
    {
        return Err(TaskError::IncompleteGrowth);
    }
    let difference = north_components(&setup.tileset, &asm, setup.width, 1, 1)?;
    let halved = north_components(&setup.tileset, &asm, setup.width, 1, 2)?;
    Ok((
        (difference, halved),
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

/// Insert bit `c` at position `i` (1-based from the most significant end);
/// the suffix shifts one place right and the last bit drops off, so the
/// width is preserved. Takes exactly len+1 attachment steps.
pub fn insert_bit(q: &[u8], i: usize, c: u8) -> Result<(Vec<u8>, TaskRun), TaskError> {
    ensure_bits(q)?;
    if c > 1 {
        return Err(TaskError::Unsupported("inserted bit must be 0 or 1".into()));
    }
    let setup = validated(seed_row(&TaskSeed::Insert {
        q: q.to_vec(),
        i,
        c,
    })?)?;
    let asm = grow(&setup, limits_for(1, setup.width, 0))?;
    if asm.status() != Status::Halted || asm.tile_at(Position::new(setup.width as i32 + 1, 1)).is_none()
    {
        return Err(TaskError::IncompleteGrowth);
    }
    let result = north_components(&setup.tileset, &asm, setup.width, 1, 2)?;
    Ok((
        result,
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

fn division_digit(name: &str) -> Result<u8, TaskError> {
    if name.starts_with("DSSL") || name == "SSLF" {
        Ok(1)
    } else if name.starts_with("DSL") || name == "SLF" {
        Ok(0)
    } else {
        Err(TaskError::IncompleteGrowth)
    }
}

fn run_division(
    a: &BigUint,
    b: &BigUint,
    frac: usize,
    dot: bool,
) -> Result<(Vec<u8>, TaskSetup, Assembly), TaskError> {
    let setup = validated(seed_row(&TaskSeed::Division {
        a: a.clone(),
        b: b.clone(),
        frac,
        dot,
    })?)?;
    let rows = 2 * setup.levels + 1;
    let asm = grow(&setup, limits_for(rows, setup.width, setup.levels))?;
    let top_y = 2 * setup.levels as i32 + 1;
    if asm.status() != Status::Halted
        || asm
            .tile_at(Position::new(setup.width as i32 + 1, top_y))
            .is_none()
    {
        return Err(TaskError::IncompleteGrowth);
    }
    let mut digits = Vec::with_capacity(setup.levels);
    for j in 0..setup.levels {
        let name = tile_name(&setup.tileset, &asm, 0, 2 * j as i32 + 2)?;
        digits.push(division_digit(name)?);
    }
    Ok((digits, setup, asm))
}

/// Divide `a / b` to `frac` binary fraction digits by long division in
/// assembly form: each zigzag level compares the remainder window against
/// the halving divisor and either subtracts or copies. Quotient digits
/// appear on the west frame, bottom-up, most significant first.
pub fn divide_decimal(
    a: &FixedPointBinary,
    b: &FixedPointBinary,
    frac: usize,
) -> Result<(FixedPointBinary, TaskRun), TaskError> {
    divide_decimal_marked(a, b, frac, false)
}

/// [`divide_decimal`] with an optional point-marker tile in the layout.
pub fn divide_decimal_marked(
    a: &FixedPointBinary,
    b: &FixedPointBinary,
    frac: usize,
    dot: bool,
) -> Result<(FixedPointBinary, TaskRun), TaskError> {
    let (na, fa) = a.scaled();
    let (nb, fb) = b.scaled();
    let common = fa.max(fb);
    let sa = &na << (common - fa);
    let sb = &nb << (common - fb);
    if sb.is_zero() {
        return Err(TaskError::Oracle(OracleError::DivisionByZero));
    }
    let (digits, setup, asm) = run_division(&sa, &sb, frac, dot)?;
    let value = FixedPointBinary::from_scaled(&bits_to_biguint(&digits), frac);
    Ok((
        value,
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

/// Square root to `frac` binary fraction digits. The radicand may carry at
/// most `2 * frac` fraction bits (the digit recurrence consumes bit pairs).
pub fn sqrt_assembly(
    v: &FixedPointBinary,
    frac: usize,
) -> Result<(FixedPointBinary, TaskRun), TaskError> {
    sqrt_assembly_marked(v, frac, false)
}

/// [`sqrt_assembly`] with an optional point-marker tile in the layout.
pub fn sqrt_assembly_marked(
    v: &FixedPointBinary,
    frac: usize,
    dot: bool,
) -> Result<(FixedPointBinary, TaskRun), TaskError> {
    let (nv, fv) = v.scaled();
    if fv > 2 * frac {
        return Err(TaskError::Unsupported(format!(
            "radicand has {fv} fraction bits; needs frac >= {}",
            fv.div_ceil(2)
        )));
    }
    let m = &nv << (2 * frac - fv);
    let setup = validated(seed_row(&TaskSeed::Sqrt { m, frac, dot })?)?;
    let rows = 3 * setup.levels;
    let asm = grow(&setup, limits_for(rows, setup.width, setup.levels))?;
    let top_y = 3 * setup.levels as i32;
    if asm.status() != Status::Halted
        || asm
            .tile_at(Position::new(setup.width as i32 + 1, top_y))
            .is_none()
    {
        return Err(TaskError::IncompleteGrowth);
    }
    let mut digits = Vec::with_capacity(setup.levels);
    for m_level in 0..setup.levels {
        let name = tile_name(&setup.tileset, &asm, 0, 3 * m_level as i32 + 2)?;
        let digit = if name.starts_with("SSL") {
            1
        } else if name.starts_with("SL") {
            0
        } else {
            return Err(TaskError::IncompleteGrowth);
        };
        digits.push(digit);
    }
    let value = FixedPointBinary::from_scaled(&bits_to_biguint(&digits), frac);
    Ok((
        value,
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

/// Expand `p / q` (with `p < q`) to `max_bits` binary fraction digits. The
/// system is the unbounded expansion deliberately stopped mid-growth: the
/// run always ends in the step-limit status, mirroring an expansion that
/// never halts on its own. The repeating cycle is detected from the
/// remainder sequence the digits induce.
pub fn rational_expand(
    p: &BigUint,
    q: &BigUint,
    max_bits: usize,
) -> Result<(ExpansionResult, TaskRun), TaskError> {
    let setup = validated(seed_row(&TaskSeed::Rational {
        p: p.clone(),
        q: q.clone(),
        max_bits,
    })?)?;
    // Stop mid-register-row of the last level whose digit we need: every
    // full row takes width + 2 attachments.
    let cap = (2 * max_bits + 1) * (setup.width + 2) + 4;
    let limits = capped(GrowthLimits {
        max_steps: cap,
        max_extent: (setup.width as i32 + 2).max(2 * setup.levels as i32 + 2) + 2,
    });
    let asm = grow(&setup, limits)?;
    if asm.status() != Status::StepLimitExceeded {
        return Err(TaskError::IncompleteGrowth);
    }
    let mut digits = Vec::with_capacity(max_bits + 1);
    for j in 0..=max_bits {
        let name = tile_name(&setup.tileset, &asm, 0, 2 * j as i32 + 2)?;
        digits.push(division_digit(name)?);
    }
    if digits[0] != 0 {
        return Err(TaskError::IncompleteGrowth);
    }
    let digits = digits.split_off(1);
    // Remainder recurrence: r_0 = p, r_{k+1} = 2 r_k - d_k q. A repeated
    // remainder closes the cycle; remainder zero means termination.
    let mut remainder = p.clone();
    let mut seen: HashMap<BigUint, usize> = HashMap::new();
    seen.insert(remainder.clone(), 0);
    let mut period = None;
    let mut terminated = remainder.is_zero();
    for (k, &d) in digits.iter().enumerate() {
        if terminated || period.is_some() {
            break;
        }
        let doubled = &remainder << 1;
        let expected = u8::from(doubled >= *q);
        if d != expected {
            return Err(TaskError::IncompleteGrowth);
        }
        remainder = if d == 1 { doubled - q } else { doubled };
        if remainder.is_zero() {
            terminated = true;
        } else if let Some(&start) = seen.get(&remainder) {
            period = Some((start, k + 1 - start));
        } else {
            seen.insert(remainder.clone(), k + 1);
        }
    }
    Ok((
        ExpansionResult {
            digits,
            period,
            terminated,
        },
        TaskRun {
            tileset: setup.tileset,
            assembly: asm,
        },
    ))
}

/// Sum-row step: grow one ripple add/subtract row and read the new
/// accumulator off the north faces.
fn run_sum_row(s_bits: &[u8], t_bits: &[u8], subtract: bool) -> Result<(Vec<u8>, TaskSetup, Assembly), TaskError> {
    let setup = validated(adder_row(s_bits, t_bits, subtract)?)?;
    let asm = grow(&setup, limits_for(1, setup.width, 0))?;
    if asm.status() != Status::Halted || asm.tile_at(Position::new(0, 1)).is_none() {
        return Err(TaskError::IncompleteGrowth);
    }
    let mut out = Vec::with_capacity(setup.width);
    for x in 1..=setup.width as i32 {
        let id = asm
            .tile_at(Position::new(x, 1))
            .ok_or(TaskError::IncompleteGrowth)?;
        let label = setup.tileset.glue_label(setup.tileset.tile(id).north);
        out.push(label.as_bytes()[1] - b'0');
    }
    Ok((out, setup, asm))
}

/// Approximate pi by the alternating odd-reciprocal series: every term
/// 1/(2n+1) is a division assembly at `frac` fraction bits, partial sums
/// are ripple add/subtract rows, and the final multiply-by-four is a
/// binary-point relabel (two fewer fraction bits), which needs no tiles.
/// All stages run from one shared tile set. Each stage is first grown on
/// its own to sequence the data flow (a sum row's inputs are the previous
/// stage's outputs), then every stage's *seed* is stitched into one layout
/// and the composite assembly re-grows all of them in a single run; the
/// returned run carries that composite with its full attachment trace.
pub fn compute_pi(terms: usize, frac: usize) -> Result<(FixedPointBinary, TaskRun), TaskError> {
    if terms == 0 {
        return Err(TaskError::Unsupported("need at least one term".into()));
    }
    if frac < 2 {
        return Err(TaskError::Unsupported(
            "need at least two fraction bits for the final factor of four".into(),
        ));
    }
    let union_ts = build_pi_tileset(frac);
    let report = validate_determinism(&union_ts);
    if !report.is_empty() {
        return Err(TaskError::NonDeterministicTileSet(report.to_string()));
    }
    let sum_width = frac + 3;
    let mut composite = SeedConfiguration::new();
    let mut x_cursor: i32 = 0;
    let mut expected_tiles = 0usize;

    let stitch = |seed: &SeedConfiguration, ts: &TileSet, dx: i32, dy: i32, composite: &mut SeedConfiguration|
     -> Result<(), TaskError> {
        let mut ids: HashMap<TileId, TileId> = HashMap::new();
        for &(pos, tid) in seed.placements() {
            let union_id = match ids.get(&tid) {
                Some(&u) => u,
                None => {
                    let u = union_ts
                        .tile_by_name(&ts.tile(tid).name)
                        .ok_or(TaskError::IncompleteGrowth)?;
                    ids.insert(tid, u);
                    u
                }
            };
            composite.place(Position::new(pos.x + dx, pos.y + dy), union_id)?;
        }
        Ok(())
    };

    // All terms sit side by side on the baseline; the partial-sum rows
    // stack in their own column band east of the last term.
    let sum_x: i32 = (0..terms)
        .map(|n| {
            let lb = (64 - (2 * n as u64 + 1).leading_zeros()) as i32;
            lb.max(1) + frac as i32 + 4
        })
        .sum();

    let one = BigUint::from(1u32);
    let mut sum_bits: Vec<u8> = Vec::new();
    for n in 0..terms {
        let divisor = BigUint::from(2 * n as u64 + 1);
        let (digits, setup, asm) = run_division(&one, &divisor, frac, false)?;
        let t_n = bits_to_biguint(&digits);
        stitch(&setup.seed, &setup.tileset, x_cursor, 0, &mut composite)?;
        expected_tiles += asm.len();
        x_cursor += setup.width as i32 + 4;
        let t_bits = biguint_bits(&t_n, sum_width);
        if n == 0 {
            sum_bits = t_bits;
        } else {
            let (next, sum_setup, sum_asm) = run_sum_row(&sum_bits, &t_bits, n % 2 == 1)?;
            stitch(
                &sum_setup.seed,
                &sum_setup.tileset,
                sum_x,
                3 * (n as i32 - 1),
                &mut composite,
            )?;
            expected_tiles += sum_asm.len();
            sum_bits = next;
        }
    }
    debug_assert_eq!(x_cursor, sum_x);

    let total = bits_to_biguint(&sum_bits);
    let value = FixedPointBinary::from_scaled(&total, frac - 2);
    let mut assembly = Assembly::new_from_seed(&composite, &union_ts)?;
    let status = assembly.run(&union_ts, capped(GrowthLimits::unbounded()))?;
    if status != Status::Halted || assembly.len() != expected_tiles {
        return Err(TaskError::IncompleteGrowth);
    }
    #[cfg(debug_assertions)]
    if terms >= 2 {
        // The composite must reproduce the staged accumulator bit for bit
        // on the north faces of its topmost sum row.
        let y = 3 * (terms as i32 - 2) + 1;
        for (i, &bit) in sum_bits.iter().enumerate() {
            let pos = Position::new(sum_x + 1 + i as i32, y);
            let id = assembly.tile_at(pos).expect("composite sum row complete");
            let label = union_ts.glue_label(union_ts.tile(id).north);
            debug_assert_eq!(label.as_bytes()[1] - b'0', bit);
        }
    }
    Ok((
        value,
        TaskRun {
            tileset: union_ts,
            assembly,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{
        oracle_binary_digits, oracle_binary_period, oracle_compare_bits, oracle_divide_fixed,
        oracle_insert_splice, oracle_isqrt_fixed, oracle_pi_partial, oracle_shift_right,
        oracle_sub_shift,
    };

    #[test]
    fn compare_matches_oracle() {
        let (rel, run) = compare_numbers(&[1, 0, 1, 1, 1], &[1, 1, 0, 0, 0]).unwrap();
        assert_eq!(rel, Relation::Less);
        assert_eq!(run.steps(), 6);
        let (rel, _) = compare_numbers(&[1, 0, 1], &[1, 0, 1]).unwrap();
        assert_eq!(rel, Relation::Equal);
        let (rel, _) = compare_numbers(&[1, 1, 0], &[0, 1, 1]).unwrap();
        assert_eq!(rel, Relation::Greater);
        for a in 0u8..16 {
            for b in 0u8..16 {
                let ab: Vec<u8> = (0..4).rev().map(|i| (a >> i) & 1).collect();
                let bb: Vec<u8> = (0..4).rev().map(|i| (b >> i) & 1).collect();
                let (rel, _) = compare_numbers(&ab, &bb).unwrap();
                let expected = match oracle_compare_bits(&ab, &bb) {
                    std::cmp::Ordering::Less => Relation::Less,
                    std::cmp::Ordering::Equal => Relation::Equal,
                    std::cmp::Ordering::Greater => Relation::Greater,
                };
                assert_eq!(rel, expected, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn shift_matches_oracle() {
        let (out, run) = shift_right(&[1, 0, 1, 1, 1]).unwrap();
        assert_eq!(out, vec![0, 1, 0, 1, 1]);
        assert_eq!(run.steps(), 6);
        for v in 0u8..64 {
            let bits: Vec<u8> = (0..6).rev().map(|i| (v >> i) & 1).collect();
            let (out, _) = shift_right(&bits).unwrap();
            assert_eq!(out, oracle_shift_right(&bits));
        }
    }

    #[test]
    fn subshift_matches_oracle() {
        let ((diff, halved), run) =
            subtract_and_shift(&[1, 0, 1, 1, 1], &[0, 1, 1, 0, 0]).unwrap();
        assert_eq!(diff, vec![0, 1, 0, 1, 1]);
        assert_eq!(halved, vec![0, 0, 1, 1, 0]);
        assert_eq!(run.steps(), 6);
        for a in 0u8..32 {
            for b in 0u8..=a {
                let ab: Vec<u8> = (0..5).rev().map(|i| (a >> i) & 1).collect();
                let bb: Vec<u8> = (0..5).rev().map(|i| (b >> i) & 1).collect();
                let ((diff, halved), _) = subtract_and_shift(&ab, &bb).unwrap();
                let (ediff, ehalf) = oracle_sub_shift(&ab, &bb).unwrap();
                assert_eq!((diff, halved), (ediff, ehalf), "{a} - {b}");
            }
        }
        assert!(matches!(
            subtract_and_shift(&[0, 1], &[1, 0]),
            Err(TaskError::Oracle(OracleError::Underflow))
        ));
    }

    #[test]
    fn insert_matches_oracle() {
        let (out, run) = insert_bit(&[1, 0, 0, 1, 0, 0], 5, 1).unwrap();
        assert_eq!(out, oracle_insert_splice(&[1, 0, 0, 1, 0, 0], 5, 1).unwrap());
        assert_eq!(out, vec![1, 0, 0, 1, 1, 0]);
        assert_eq!(run.steps(), 7);
        for v in 0u8..16 {
            let bits: Vec<u8> = (0..4).rev().map(|i| (v >> i) & 1).collect();
            for i in 1..=3usize {
                for c in 0u8..2 {
                    let (out, _) = insert_bit(&bits, i, c).unwrap();
                    assert_eq!(out, oracle_insert_splice(&bits, i, c).unwrap());
                }
            }
        }
    }

    #[test]
    fn division_matches_oracle() {
        let a = FixedPointBinary::parse("23.5").unwrap();
        let b = FixedPointBinary::parse("6").unwrap();
        let (q, run) = divide_decimal(&a, &b, 4).unwrap();
        assert_eq!(q.to_binary_string(), "11.1110");
        assert_eq!(q.to_decimal_string(), "3.875");
        assert!(run.steps() > 0);
        for p in 1u32..40 {
            for d in 1u32..14 {
                let (q, _) = divide_decimal(
                    &FixedPointBinary::from_uint(&BigUint::from(p)),
                    &FixedPointBinary::from_uint(&BigUint::from(d)),
                    3,
                )
                .unwrap();
                let expected = oracle_divide_fixed(&BigUint::from(p), &BigUint::from(d), 3).unwrap();
                assert_eq!(q.scaled().0, expected, "{p}/{d}");
            }
        }
    }

    #[test]
    fn sqrt_matches_oracle() {
        let v = FixedPointBinary::parse("42.25").unwrap();
        let (r, _) = sqrt_assembly(&v, 1).unwrap();
        assert_eq!(r.to_binary_string(), "110.1");
        assert_eq!(r.to_decimal_string(), "6.5");
        for n in 0u32..200 {
            for f in 0usize..3 {
                let (r, _) =
                    sqrt_assembly(&FixedPointBinary::from_uint(&BigUint::from(n)), f).unwrap();
                let m = BigUint::from(n) << (2 * f);
                assert_eq!(r.scaled().0, oracle_isqrt_fixed(&m, f as u32), "sqrt({n}) f={f}");
            }
        }
    }

    #[test]
    fn rational_matches_oracle() {
        let (res, run) = rational_expand(&BigUint::from(1u32), &BigUint::from(3u32), 8).unwrap();
        assert_eq!(res.digits, vec![0, 1, 0, 1, 0, 1, 0, 1]);
        assert_eq!(res.period, Some((0, 2)));
        assert!(!res.terminated);
        assert_eq!(run.assembly.status(), Status::StepLimitExceeded);
        for (p, q) in [(1u32, 7u32), (2, 7), (1, 6), (3, 5), (1, 2), (5, 8)] {
            let (res, _) = rational_expand(&BigUint::from(p), &BigUint::from(q), 10).unwrap();
            assert_eq!(
                res.digits,
                oracle_binary_digits(&BigUint::from(p), &BigUint::from(q), 10).unwrap(),
                "{p}/{q} digits"
            );
            let expected = oracle_binary_period(&BigUint::from(p), &BigUint::from(q)).unwrap();
            assert_eq!(res.terminated, expected.terminated, "{p}/{q} terminated");
            if expected.terminated {
                assert_eq!(res.period, None);
            } else {
                let start = expected.period_start.unwrap();
                let length = expected.period_length.unwrap();
                assert_eq!(res.period, Some((start, length)), "{p}/{q} period");
            }
        }
    }

    #[test]
    fn pi_small_matches_oracle() {
        for (terms, frac) in [(1usize, 8usize), (2, 8), (3, 8), (5, 10)] {
            let (v, _) = compute_pi(terms, frac).unwrap();
            let (scaled, f) = v.scaled();
            assert_eq!(f, frac - 2);
            assert_eq!(
                scaled << 2,
                oracle_pi_partial(terms as u32, frac as u32),
                "terms={terms} frac={frac}"
            );
        }
    }
}
