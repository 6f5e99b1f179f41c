//! Sparse polynomials with rational coefficients, just enough to decide
//! when two pairs `(l, q)` (affine linear, affine quadratic) are
//! proportional at almost every point.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rank_of_vectors, Matrix, Rational};

/// Exponent vector of a monomial.
pub type Monomial = Vec<u32>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(vars: usize) -> Self {
        Polynomial { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: usize, c: Rational) -> Self {
        Self::from_terms(vars, [(vec![0; vars], c)]).expect("constant monomial has the right length")
    }

    /// The variable `z_i` (0-based).
    pub fn variable(vars: usize, i: usize) -> Self {
        let mut mono = vec![0; vars];
        mono[i] = 1;
        Self::from_terms(vars, [(mono, Rational::one())]).expect("length matches")
    }

    /// `c₀ + Σ cᵢ zᵢ`.
    pub fn affine(constant: Rational, linear: &[Rational]) -> Self {
        let vars = linear.len();
        let mut p = Self::constant(vars, constant);
        for (i, c) in linear.iter().enumerate() {
            p = p.add(&Self::variable(vars, i).scale(c));
        }
        p
    }

    pub fn from_terms(vars: usize, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Result<Self> {
        let mut p = Polynomial::zero(vars);
        for (mono, c) in terms {
            if mono.len() != vars {
                return Err(Error::ShapeMismatch(format!("monomial has {} exponents, expected {vars}", mono.len())));
            }
            p.add_term(mono, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, mono: Monomial, c: Rational) {
        let entry = self.terms.entry(mono).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `0` for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|m| m.iter().sum()).max().unwrap_or(0)
    }

    pub fn coefficient(&self, mono: &[u32]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Polynomial::zero(self.vars);
        }
        Polynomial { vars: self.vars, terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "variable count mismatch");
        let mut out = Polynomial::zero(self.vars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let mono = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(mono, c1 * c2);
            }
        }
        out
    }

    pub fn eval(&self, z: &[Rational]) -> Rational {
        assert_eq!(z.len(), self.vars, "point has wrong dimension");
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter().zip(z).fold(c.clone(), |acc, (&e, zi)| acc * num::pow(zi.clone(), e as usize))
            })
            .sum()
    }

    /// Coefficients on all monomials of degree `≤ max_degree` in a fixed order.
    fn coefficient_vector(&self, max_degree: u32) -> Vec<Rational> {
        monomials(self.vars, max_degree).iter().map(|m| self.coefficient(m)).collect()
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (m.iter().sum::<u32>(), std::cmp::Reverse(*m)));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let vars: Vec<String> = m
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("z{}", i + 1) } else { format!("z{}^{e}", i + 1) })
                .collect();
            let mag = c.abs();
            let sign = match (k, c.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            let body = match (vars.is_empty(), mag.is_one()) {
                (true, _) => mag.to_string(),
                (false, true) => vars.join("*"),
                (false, false) => format!("{mag}*{}", vars.join("*")),
            };
            write!(f, "{sign}{body}")?;
        }
        Ok(())
    }
}

/// All exponent vectors in `vars` variables with total degree `≤ max_degree`.
fn monomials(vars: usize, max_degree: u32) -> Vec<Monomial> {
    fn rec(vars: usize, left: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if prefix.len() == vars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(vars, left - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(vars, max_degree, &mut Vec::new(), &mut out);
    out
}

/// Which way `h₁ = (l₁, q₁)` and `h₂ = (l₂, q₂)` are dependent at almost
/// every point. Cases are tried in declaration order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyDependence {
    /// `h₁`, `h₂` are linearly dependent as polynomial pairs.
    DependentPair,
    /// `l₁ ≡ l₂ ≡ 0`.
    BothLinearZero,
    /// `qᵢ = m·lᵢ` for a common affine linear `m`.
    CommonLinearFactor(Polynomial),
    /// `l₁q₂ ≢ l₂q₁`: the pairs are independent at almost every point.
    Independent,
}

impl PolyDependence {
    pub fn name(&self) -> &'static str {
        match self {
            PolyDependence::DependentPair => "DependentPair",
            PolyDependence::BothLinearZero => "BothLinearZero",
            PolyDependence::CommonLinearFactor(_) => "CommonLinearFactor",
            PolyDependence::Independent => "None",
        }
    }
}

fn check_degree(p: &Polynomial, vars: usize, max: u32, name: &str) -> Result<()> {
    if p.vars() != vars {
        return Err(Error::ShapeMismatch(format!("{name} has {} variables, expected {vars}", p.vars())));
    }
    if p.degree() > max {
        return Err(Error::BadDegree(format!("{name} has degree {}, at most {max} allowed", p.degree())));
    }
    Ok(())
}

/// Decide which dependence `{h₁(z), h₂(z)}` has for almost all `z`, with
/// `lᵢ` affine linear and `qᵢ` of degree at most two.
pub fn affine_poly_dependence(
    l1: &Polynomial,
    q1: &Polynomial,
    l2: &Polynomial,
    q2: &Polynomial,
) -> Result<PolyDependence> {
    let vars = l1.vars();
    check_degree(l1, vars, 1, "l1")?;
    check_degree(l2, vars, 1, "l2")?;
    check_degree(q1, vars, 2, "q1")?;
    check_degree(q2, vars, 2, "q2")?;

    if !l1.mul(q2).sub(&l2.mul(q1)).is_zero() {
        return Ok(PolyDependence::Independent);
    }
    let pair = |l: &Polynomial, q: &Polynomial| [l.coefficient_vector(1), q.coefficient_vector(2)].concat();
    let h1 = pair(l1, q1);
    let h2 = pair(l2, q2);
    if rank_of_vectors(h1.len(), &[h1, h2]) <= 1 {
        return Ok(PolyDependence::DependentPair);
    }
    if l1.is_zero() && l2.is_zero() {
        return Ok(PolyDependence::BothLinearZero);
    }
    // unknown m = m₀ + Σ mⱼ zⱼ with qᵢ = m lᵢ
    let basis: Vec<Polynomial> = std::iter::once(Polynomial::constant(vars, Rational::one()))
        .chain((0..vars).map(|j| Polynomial::variable(vars, j)))
        .collect();
    let columns: Vec<Vec<Rational>> = basis
        .iter()
        .map(|b| [l1.mul(b).coefficient_vector(2), l2.mul(b).coefficient_vector(2)].concat())
        .collect();
    let rhs = [q1.coefficient_vector(2), q2.coefficient_vector(2)].concat();
    let a = Matrix::from_columns(rhs.len(), &columns);
    if let Some(sol) = a.solve(&Matrix::column_vector(&rhs)) {
        let coeffs = sol.column(0);
        return Ok(PolyDependence::CommonLinearFactor(Polynomial::affine(coeffs[0].clone(), &coeffs[1..])));
    }
    // unreachable for valid input: the three cases exhaust l₁q₂ ≡ l₂q₁
    Ok(PolyDependence::Independent)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Scalar;

    fn r(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    fn z(vars: usize, i: usize) -> Polynomial {
        Polynomial::variable(vars, i)
    }

    #[test]
    fn arithmetic_and_eval() {
        let p = z(2, 0).mul(&z(2, 1)).add(&Polynomial::constant(2, r(3)));
        assert_eq!(p.degree(), 2);
        assert_eq!(p.eval(&[r(2), r(5)]), r(13));
        assert!(p.sub(&p).is_zero());
        assert_eq!(monomials(2, 2).len(), 6);
        assert_eq!(monomials(3, 1).len(), 4);
    }

    #[test]
    fn reference_cases() {
        let common = affine_poly_dependence(&z(2, 0), &z(2, 0).mul(&z(2, 1)), &z(2, 1), &z(2, 1).mul(&z(2, 1)))
            .unwrap();
        assert_eq!(common, PolyDependence::CommonLinearFactor(z(2, 1)));

        let zero = Polynomial::zero(2);
        let both = affine_poly_dependence(&zero, &z(2, 0).mul(&z(2, 0)), &zero, &z(2, 1).mul(&z(2, 1))).unwrap();
        assert_eq!(both, PolyDependence::BothLinearZero);

        let l = Polynomial::affine(r(1), &[r(2), r(-1)]);
        let q = z(2, 0).mul(&z(2, 0)).add(&z(2, 1));
        let dep = affine_poly_dependence(&l, &q, &l.scale(&r(3)), &q.scale(&r(3))).unwrap();
        assert_eq!(dep, PolyDependence::DependentPair);

        let none = affine_poly_dependence(&z(2, 0), &z(2, 1), &z(2, 1), &z(2, 1)).unwrap();
        assert_eq!(none, PolyDependence::Independent);
    }

    #[test]
    fn degree_violations() {
        let sq = z(2, 0).mul(&z(2, 0));
        assert!(matches!(affine_poly_dependence(&sq, &sq, &z(2, 0), &sq), Err(Error::BadDegree(_))));
        let cube = sq.mul(&z(2, 1));
        assert!(matches!(affine_poly_dependence(&z(2, 0), &cube, &z(2, 0), &sq), Err(Error::BadDegree(_))));
    }
}
