//! Deciding when two pairs (affine, quadratic) of polynomials are
//! dependent at almost every point.

use rigidlab::admissibility::{affine_poly_dependence, Polynomial};
use rigidlab::linalg::{Rational, Scalar};

fn r(v: i64) -> Rational {
    Rational::from_i64(v)
}

fn main() -> rigidlab::Result<()> {
    let z = |i| Polynomial::variable(3, i);
    let l1 = Polynomial::affine(r(1), &[r(1), r(0), r(-2)]);
    let l2 = Polynomial::affine(r(0), &[r(3), r(1), r(0)]);
    let m = Polynomial::affine(r(2), &[r(0), r(1), r(1)]);
    let q = z(0).mul(&z(1)).add(&z(2));
    let cases = [
        ("scaled copy", [l1.clone(), q.clone(), l1.scale(&r(4)), q.scale(&r(4))]),
        ("no linear part", [Polynomial::zero(3), q.clone(), Polynomial::zero(3), z(1).mul(&z(1))]),
        ("common factor", [l1.clone(), m.mul(&l1), l2.clone(), m.mul(&l2)]),
        ("generic", [l1.clone(), q.clone(), l2.clone(), z(2).mul(&z(2))]),
    ];
    for (name, [a, b, c, d]) in cases {
        let dep = affine_poly_dependence(&a, &b, &c, &d)?;
        println!("{name:>15}: h1 = ({a}, {b}), h2 = ({c}, {d}) -> {}", dep.name());
    }
    Ok(())
}
