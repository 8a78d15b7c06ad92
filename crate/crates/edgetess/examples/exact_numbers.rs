//! A tour of the exact coordinate field Q(√2, √3).
//!
//! ```text
//! cargo run --example exact_numbers
//! ```

use edgetess::ExtScalar;

fn main() {
    let one = ExtScalar::one();
    let sqrt2 = ExtScalar::sqrt2();
    let sqrt3 = ExtScalar::sqrt3();
    let sqrt6 = ExtScalar::sqrt6();

    println!("Products stay in the field:");
    println!("  sqrt2 * sqrt3          = {}", &sqrt2 * &sqrt3);
    println!("  sqrt6 * sqrt6          = {}", &sqrt6 * &sqrt6);
    println!(
        "  (1+sqrt2)(sqrt2-1)     = {}",
        (&one + &sqrt2) * (&sqrt2 - &one)
    );

    println!("\nInverses are closed-form (Galois conjugates):");
    let x = &one + &sqrt2;
    println!("  inv(1+sqrt2)           = {}", x.inv().unwrap());
    println!("  inv(sqrt6)             = {}", sqrt6.inv().unwrap());

    println!("\nSigns are exact, even for near-zero combinations:");
    let tight = &sqrt2 + &sqrt3 - &sqrt6 - &one;
    println!("  sign(sqrt2+sqrt3-sqrt6-1) = {}", tight.sign());
    println!("  value to 20 digits        = {}", tight.approx(20));
    let zero = &sqrt2 * &sqrt3 - &sqrt6;
    println!(
        "  sign(sqrt2*sqrt3 - sqrt6) = {} (structural zero)",
        zero.sign()
    );

    println!("\nCertified decimal output at any precision:");
    println!("  sqrt3  ~ {}", sqrt3.approx(30));
    println!(
        "  1/sqrt3 (= sqrt3/3) ~ {}",
        sqrt3.inv().unwrap().approx(30)
    );

    println!("\nThe polygon-file token form (1 sqrt2 sqrt3 sqrt6 coefficients):");
    let y =
        ExtScalar::one() + ExtScalar::sqrt3().scale(&edgetess::Rational::new(1.into(), 3.into()));
    println!("  1 + (1/3)sqrt3  ->  `{}`", y.to_tokens());
}
