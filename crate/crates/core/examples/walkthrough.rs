//! End-to-end tour of the public API: every arithmetic task from row
//! primitives to the composite pi layout, printed with step counts.

use num_bigint::BigUint;
use tilecalc_core::{
    compare_numbers, compute_pi, divide_decimal, insert_bit, rational_expand, shift_right,
    sqrt_assembly, subtract_and_shift, FixedPointBinary,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let (rel, run) = compare_numbers(&[1, 0, 1, 1, 1], &[1, 1, 0, 0, 0])?;
    println!("compare 10111 vs 11000     -> {rel:?} in {} steps", run.steps());

    let (shifted, run) = shift_right(&[1, 0, 1, 1, 1])?;
    println!("shift 10111 right          -> {shifted:?} in {} steps", run.steps());

    let ((diff, halved), run) = subtract_and_shift(&[1, 0, 1, 1, 1], &[0, 1, 1, 0, 0])?;
    println!(
        "10111 - 01100, halve east  -> diff {diff:?} halved {halved:?} in {} steps",
        run.steps()
    );

    let (spliced, run) = insert_bit(&[1, 0, 0, 1, 0, 0], 5, 1)?;
    println!("insert 1 at 5 into 100100  -> {spliced:?} in {} steps", run.steps());

    let a = FixedPointBinary::parse("23.5")?;
    let b = FixedPointBinary::parse("6")?;
    let (quotient, run) = divide_decimal(&a, &b, 4)?;
    println!(
        "23.5 / 6 @4 frac bits      -> {} ({}) in {} steps",
        quotient.to_binary_string(),
        quotient.to_decimal_string(),
        run.steps()
    );

    let v = FixedPointBinary::parse("42.25")?;
    let (root, run) = sqrt_assembly(&v, 1)?;
    println!(
        "sqrt 42.25 @1 frac bit     -> {} ({}) in {} steps",
        root.to_binary_string(),
        root.to_decimal_string(),
        run.steps()
    );

    let (expansion, run) = rational_expand(&BigUint::from(1u32), &BigUint::from(3u32), 8)?;
    println!(
        "1/3 @8 bits                -> digits {:?} period {:?} terminated {} in {} steps",
        expansion.digits,
        expansion.period,
        expansion.terminated,
        run.steps()
    );

    let (pi, run) = compute_pi(20, 16)?;
    println!(
        "pi, 20 terms @16 frac bits -> {} ({}) in {} steps",
        pi.to_binary_string(),
        pi.to_decimal_string(),
        run.steps()
    );
    Ok(())
}
