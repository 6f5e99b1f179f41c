//! Velocity of a pin joined to three moving points, and its limit as the
//! pin goes to infinity.

use rigidlab::admissibility::{limit_velocity, pin_velocity, PinContext};
use rigidlab::linalg::{Matrix, Rational, Scalar};

fn main() -> rigidlab::Result<()> {
    let q = Matrix::<Rational>::from_i64_rows(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
    let v = Matrix::<Rational>::from_i64_rows(&[&[0, 2, -1], &[1, 0, 3], &[-2, 1, 0]]);
    let ctx = PinContext::new(q, v)?;
    let x = [Rational::from_i64(2), Rational::from_i64(3), Rational::from_i64(-1)];
    let p = pin_velocity(&ctx, &x)?;
    let l = limit_velocity(&ctx, &x)?;
    println!("pin velocity at x = (2, 3, -1): {}", fmt(&p));
    println!("limit direction:                {}", fmt(&l));

    let ctx_f = PinContext::new(ctx.q().to_f64(), ctx.v().to_f64())?;
    for t in [1e2, 1e4, 1e6] {
        let far: Vec<f64> = x.iter().map(|c| c.to_f64() * t).collect();
        let scaled: Vec<f64> = pin_velocity(&ctx_f, &far)?.iter().map(|c| c / t).collect();
        println!("t = {t:.0e}: P(tx)/t = {scaled:.6?}");
    }
    Ok(())
}

fn fmt(v: &[Rational]) -> String {
    v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", ")
}
