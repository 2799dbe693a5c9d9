//! Scalars as roots of unity times Laurent monomials, and exact cyclotomic arithmetic.
//!
//! Run with `cargo run --example scalars`.

use chroma::scalars::{Cyclotomic, Rational01, Scalar};

fn main() {
    let a: Scalar = "zeta(6,1)*q^2".parse().unwrap();
    let b = a.pow(3);
    println!("a = {a}  (pretty {})", a.pretty());
    println!("a^3 = {b}");
    println!("least n with a^n = a^3: {}", a.solve_power(&b).unwrap());
    println!("order of zeta(12,5): {:?}", "zeta(12,5)".parse::<Scalar>().unwrap().order_of());

    // 1 + ζ₃ + ζ₃² = 0 in Q(ζ₃)
    let z = Cyclotomic::embed(Rational01::new(1, 3), 3).unwrap();
    let sum = &(&Cyclotomic::one(3) + &z) + &z.pow(2);
    println!("1 + ζ3 + ζ3^2 = {sum}");

    // (1 + ζ₈) is invertible in Q(ζ₈)
    let x = &Cyclotomic::one(8) + &Cyclotomic::embed(Rational01::new(1, 8), 8).unwrap();
    let inv = x.inv().unwrap();
    println!("(1 + ζ8)^-1 = {inv}");
    println!("check: {}", &x * &inv);
}
