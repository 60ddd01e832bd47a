//! Property-based checks: structural invariants that must hold for arbitrary
//! inputs, not just the worked examples. Each property states something the
//! assemblies guarantee by construction — defining inequalities of the
//! computed values, growth-order independence, trace faithfulness.

use std::collections::HashMap;

use num_bigint::BigUint;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use tilecalc_core::builders::{seed_row, TaskSeed, TaskSetup};
use tilecalc_core::engine::{replay, run_to_completion, Position, TileSet};
use tilecalc_core::oracles::{oracle_binary_digits, oracle_compare_bits};
use tilecalc_core::{
    compare_numbers, divide_decimal, insert_bit, rational_expand, shift_right, sqrt_assembly,
    subtract_and_shift, Assembly, FixedPointBinary, GrowthLimits, Relation,
};

fn bits_of(v: u64, width: usize) -> Vec<u8> {
    (0..width).rev().map(|i| ((v >> i) & 1) as u8).collect()
}

fn name_map(assembly: &Assembly, tileset: &TileSet) -> HashMap<Position, String> {
    assembly
        .placed()
        .iter()
        .map(|(&pos, &id)| (pos, tileset.tile(id).name.clone()))
        .collect()
}

fn grow_canonical(setup: &TaskSetup) -> Assembly {
    run_to_completion(&setup.seed, &setup.tileset, GrowthLimits::unbounded()).unwrap()
}

fn grow_randomized(setup: &TaskSetup, rng_seed: u64) -> Assembly {
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let mut asm = Assembly::new_from_seed(&setup.seed, &setup.tileset).unwrap();
    loop {
        let frontier = asm.unique_frontier();
        if frontier.is_empty() {
            break;
        }
        let (pos, _) = frontier[rng.gen_range(0..frontier.len())];
        asm.step_at(pos, &setup.tileset).unwrap();
    }
    asm
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// The comparison row agrees with big-integer ordering on arbitrary
    /// equal-width operands.
    #[test]
    fn compare_agrees_with_integer_ordering(width in 1usize..=10, a in 0u64..1024, b in 0u64..1024) {
        let a = a & ((1 << width) - 1);
        let b = b & ((1 << width) - 1);
        let (rel, _) = compare_numbers(&bits_of(a, width), &bits_of(b, width)).unwrap();
        let expected = match oracle_compare_bits(&bits_of(a, width), &bits_of(b, width)) {
            std::cmp::Ordering::Less => Relation::Less,
            std::cmp::Ordering::Equal => Relation::Equal,
            std::cmp::Ordering::Greater => Relation::Greater,
        };
        prop_assert_eq!(rel, expected);
    }

    /// A single processing row over `k` columns attaches exactly `k + 1`
    /// tiles: one per column plus the west terminator.
    #[test]
    fn single_rows_take_width_plus_one_steps(width in 1usize..=12, a in 0u64..4096, b in 0u64..4096) {
        let a = a & ((1 << width) - 1);
        let b = b & ((1 << width) - 1);
        let (_, run) = compare_numbers(&bits_of(a, width), &bits_of(b, width)).unwrap();
        prop_assert_eq!(run.steps(), width + 1);
        let (_, run) = shift_right(&bits_of(a, width)).unwrap();
        prop_assert_eq!(run.steps(), width + 1);
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let (_, run) = subtract_and_shift(&bits_of(hi, width), &bits_of(lo, width)).unwrap();
        prop_assert_eq!(run.steps(), width + 1);
        if width >= 2 {
            let i = 1 + (a as usize % (width - 1));
            let (_, run) = insert_bit(&bits_of(a, width), i, (b & 1) as u8).unwrap();
            prop_assert_eq!(run.steps(), width + 1);
        }
    }

    /// Replaying a recorded trace from the same seed rebuilds the assembly
    /// tile for tile, and the trace length equals the number of attachments.
    #[test]
    fn traces_replay_and_count_attachments(width in 1usize..=8, a in 0u64..256, b in 0u64..256) {
        let a = a & ((1 << width) - 1);
        let b = b & ((1 << width) - 1);
        let setup = seed_row(&TaskSeed::Compare {
            a: bits_of(a, width),
            b: bits_of(b, width),
        })
        .unwrap();
        let grown = grow_canonical(&setup);
        prop_assert_eq!(grown.trace().len(), grown.len() - setup.seed.len());
        let rebuilt = replay(&setup.seed, grown.trace(), &setup.tileset).unwrap();
        prop_assert_eq!(name_map(&rebuilt, &setup.tileset), name_map(&grown, &setup.tileset));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    /// The order in which frontier cells are filled never changes the final
    /// division assembly.
    #[test]
    fn division_growth_order_is_irrelevant(p in 0u64..64, q in 1u64..32, frac in 0usize..=3, order in 0u64..1 << 32) {
        let setup = seed_row(&TaskSeed::Division {
            a: BigUint::from(p),
            b: BigUint::from(q),
            frac,
            dot: false,
        })
        .unwrap();
        let canonical = grow_canonical(&setup);
        let randomized = grow_randomized(&setup, order);
        prop_assert_eq!(
            name_map(&randomized, &setup.tileset),
            name_map(&canonical, &setup.tileset)
        );
    }

    /// Same for square-root assemblies.
    #[test]
    fn sqrt_growth_order_is_irrelevant(n in 0u64..256, frac in 0usize..=2, order in 0u64..1 << 32) {
        let setup = seed_row(&TaskSeed::Sqrt {
            m: BigUint::from(n) << (2 * frac),
            frac,
            dot: false,
        })
        .unwrap();
        let canonical = grow_canonical(&setup);
        let randomized = grow_randomized(&setup, order);
        prop_assert_eq!(
            name_map(&randomized, &setup.tileset),
            name_map(&canonical, &setup.tileset)
        );
    }

    /// The scaled quotient `s` of `p / q` at `frac` fraction bits satisfies
    /// the defining floor inequality `s·q <= p·2^frac < (s+1)·q`.
    #[test]
    fn division_satisfies_the_floor_inequality(p in 0u64..512, q in 1u64..64, frac in 0usize..=4) {
        let (value, _) = divide_decimal(
            &FixedPointBinary::from_uint(&BigUint::from(p)),
            &FixedPointBinary::from_uint(&BigUint::from(q)),
            frac,
        )
        .unwrap();
        let (s, f) = value.scaled();
        prop_assert_eq!(f, frac);
        let scaled_p = BigUint::from(p) << frac;
        let q = BigUint::from(q);
        prop_assert!(&s * &q <= scaled_p);
        prop_assert!((&s + 1u8) * &q > scaled_p);
    }

    /// The scaled root `s` of `n` at `frac` fraction bits satisfies
    /// `s^2 <= n·2^(2·frac) < (s+1)^2`.
    #[test]
    fn sqrt_satisfies_the_bracketing_inequality(n in 0u64..1024, frac in 0usize..=2) {
        let (value, _) =
            sqrt_assembly(&FixedPointBinary::from_uint(&BigUint::from(n)), frac).unwrap();
        let (s, f) = value.scaled();
        prop_assert_eq!(f, frac);
        let m = BigUint::from(n) << (2 * frac);
        prop_assert!(&s * &s <= m);
        prop_assert!((&s + 1u8) * (&s + 1u8) > m);
    }

    /// The expansion rows emit exactly the binary fraction digits of `p/q`.
    #[test]
    fn rational_digits_match_long_division(p in 1u64..64, q in 2u64..64, max_bits in 1usize..=10) {
        prop_assume!(p < q);
        let (res, _) =
            rational_expand(&BigUint::from(p), &BigUint::from(q), max_bits).unwrap();
        prop_assert_eq!(
            res.digits,
            oracle_binary_digits(&BigUint::from(p), &BigUint::from(q), max_bits).unwrap()
        );
    }
}
