//! Property battery behind `rigidlab verify`.
//!
//! Twelve suites, each a randomized check of one result. Instance counts
//! scale with `samples / 20`, so `--samples 5` runs a quarter of the
//! default workload. Every random draw comes from the seed tree, so a
//! given `(seed, samples)` always produces the same report.

use itertools::Itertools;
use rand::Rng;

use crate::admissibility::{
    affine_poly_dependence, classify_admissible, conic_check, construct_admissible_family, example_one_space,
    example_two_space, limit_velocity, one_dim_check, pin_velocity, rank_one_space, six_edge_graphs,
    skew_symmetric_matrices, sufficient_check, test_admissible, verify_extension_theorems, ClassificationKind,
    PinContext, PolyDependence, Polynomial,
};
use crate::error::Result;
use crate::linalg::{sherman_morrison_inverse, vector, Matrix, Rational, Scalar};
use crate::motions::{p_equivalent, restricts_to_isometry, trivial_motion_space, Motion, MotionSpace, PointConfiguration};
use crate::rigidity::{analyze, Framework, Graph, ImpliedEdges};
use crate::sampling::{random_integer_matrix, random_integer_vector, random_rational_vector, SeedTree};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteResult {
    pub index: usize,
    pub tag: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BatteryOptions {
    pub seed: u64,
    pub samples: usize,
    /// Corrupt one comparison so the battery must fail.
    pub inject_fault: bool,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions { seed: 0, samples: 20, inject_fault: false }
    }
}

pub const SUITE_TAGS: [&str; 12] = [
    "sherman-morrison",
    "pin-flex",
    "limit-closed-form",
    "trivial-dimension",
    "rigidity-oracle",
    "example-spaces",
    "five-point-construction",
    "one-dimensional",
    "conic-at-infinity",
    "classification",
    "two-extensions",
    "poly-dependence",
];

struct Ctx {
    tree: SeedTree,
    samples: usize,
    fault: bool,
}

impl Ctx {
    fn count(&self, base: usize) -> usize {
        (base * self.samples).div_ceil(20).max(1)
    }

    fn rng(&self, tag: &str, i: u64) -> rand_chacha::ChaCha8Rng {
        self.tree.rng(tag, i)
    }
}

fn generic(ctx: &Ctx, tag: &str, i: u64) -> PointConfiguration<Rational> {
    PointConfiguration::random_generic(3, 5, &mut ctx.rng(tag, i))
}

type Outcome = Result<std::result::Result<String, String>>;

fn ok(detail: String) -> Outcome {
    Ok(Ok(detail))
}

fn fail(detail: String) -> Outcome {
    Ok(Err(detail))
}

fn sherman_morrison(ctx: &Ctx) -> Outcome {
    let n = ctx.count(100);
    let mut checked = 0;
    let mut i = 0;
    while checked < n {
        let mut rng = ctx.rng("sm", i);
        i += 1;
        let q: Matrix<Rational> = random_integer_matrix(3, 3, 1000, &mut rng);
        let x: Vec<Rational> = random_rational_vector(3, 1000, 97, &mut rng);
        let Ok(fast) = sherman_morrison_inverse(&q, &x) else { continue };
        let mut direct = Matrix::outer(&vector::ones(3), &x).sub(&q.transpose()).invert()?;
        if ctx.fault && checked == 0 {
            direct[(0, 0)] = direct[(0, 0)].clone() + Rational::from_i64(1);
        }
        if fast != direct {
            return fail(format!("instance {checked} differs from direct inversion"));
        }
        checked += 1;
    }
    ok(format!("{checked} instances exact"))
}

fn random_pin(ctx: &Ctx, tag: &str, i: u64) -> Option<(PinContext<Rational>, Vec<Rational>)> {
    let mut rng = ctx.rng(tag, i);
    let q = random_integer_matrix(3, 3, 1000, &mut rng);
    let v = random_integer_matrix(3, 3, 1000, &mut rng);
    let x = random_rational_vector(3, 1000, 97, &mut rng);
    PinContext::new(q, v).ok().map(|c| (c, x))
}

fn pin_flex(ctx: &Ctx) -> Outcome {
    let n = ctx.count(100);
    let (mut checked, mut i) = (0, 0);
    while checked < n {
        i += 1;
        let Some((pin, x)) = random_pin(ctx, "flex", i) else { continue };
        let Ok(p) = pin_velocity(&pin, &x) else { continue };
        for c in 0..3 {
            let dv = vector::sub(&p, &pin.v().column(c));
            let dx = vector::sub(&x, &pin.q().column(c));
            if !vector::dot(&dv, &dx).is_zero_exact() {
                return fail(format!("flex condition fails at instance {checked}, point {c}"));
            }
        }
        checked += 1;
    }
    ok(format!("{checked} instances exact"))
}

trait ExactZero {
    fn is_zero_exact(&self) -> bool;
}

impl ExactZero for Rational {
    fn is_zero_exact(&self) -> bool {
        num::Zero::is_zero(self)
    }
}

fn limit_closed_form(ctx: &Ctx) -> Outcome {
    let n = ctx.count(50);
    let (mut checked, mut i, mut worst) = (0, 0, 0.0f64);
    while checked < n {
        i += 1;
        let mut rng = ctx.rng("limit-float", i);
        let q: Matrix<f64> = random_integer_matrix(3, 3, 10, &mut rng);
        let v: Matrix<f64> = random_integer_matrix(3, 3, 10, &mut rng);
        let x: Vec<f64> = (0..3).map(|_| rng.gen_range(-10.0..10.0)).collect();
        let Ok(pin) = PinContext::new(q, v) else { continue };
        let Ok(l) = limit_velocity(&pin, &x) else { continue };
        let t = 1e6;
        let Ok(p) = pin_velocity(&pin, &vector::scale(&x, &t)) else { continue };
        let approx = vector::scale(&p, &(1.0 / t));
        let err = vector::norm_f64(&vector::sub(&approx, &l)) / vector::norm_f64(&l).max(1e-12);
        worst = worst.max(err);
        if err > 1e-4 {
            return fail(format!("relative error {err:.3e} at instance {checked}"));
        }
        checked += 1;
    }
    for j in 0..n as u64 {
        let Some((pin, x)) = random_pin(ctx, "limit-exact", j) else { continue };
        let Ok(l) = limit_velocity(&pin, &x) else { continue };
        if !vector::dot(&l, &x).is_zero_exact() {
            return fail(format!("limit not orthogonal to x at exact instance {j}"));
        }
    }
    ok(format!("{checked} float instances, worst relative error {worst:.2e}"))
}

fn trivial_dimension(ctx: &Ctx) -> Outcome {
    let n = ctx.count(10);
    for i in 0..n as u64 {
        let d = trivial_motion_space(&generic(ctx, "trivial", i)).dim();
        if d != 6 {
            return fail(format!("configuration {i} has {d} trivial motions"));
        }
    }
    ok(format!("{n} configurations with dim 6"))
}

fn rigidity_oracle(ctx: &Ctx) -> Outcome {
    let frame = |g: Graph, i: u64| {
        let p = PointConfiguration::<Rational>::random_generic(3, g.vertex_count(), &mut ctx.rng("rig", i));
        Framework::new(g, p)
    };
    let k4 = analyze(&frame(Graph::complete(4), 0)?);
    let k5 = analyze(&frame(Graph::complete(5), 1)?);
    let db = analyze(&frame(Graph::double_banana(), 2)?);
    let hinge = ImpliedEdges::new(&Graph::double_banana(), 3, &mut ctx.rng("rig", 3)).is_implied(0, 1)?;
    let checks = [
        ("K4 rigid and isostatic", k4.is_rigid && k4.is_isostatic),
        ("K5 rigid, not isostatic", k5.is_rigid && !k5.is_isostatic),
        ("double banana flex_dim 7", !db.is_rigid && db.flex_dim == 7),
        ("hinge implied", hinge),
    ];
    match checks.iter().find(|(_, good)| !good) {
        Some((name, _)) => fail(format!("{name} failed")),
        None => ok("K4, K5, double banana, hinge".into()),
    }
}

fn admissible_examples(ctx: &Ctx) -> Result<Vec<MotionSpace<Rational>>> {
    let mut out = Vec::new();
    for i in 0..ctx.count(5) as u64 {
        let p = generic(ctx, "examples", i);
        let k = Rational::from_i64(ctx.rng("examples-k", i).gen_range(-9..=9));
        out.push(example_one_space(&p));
        out.push(example_two_space(&p, &k)?);
    }
    Ok(out)
}

fn example_spaces(ctx: &Ctx) -> Outcome {
    let spaces = admissible_examples(ctx)?;
    for (i, s) in spaces.iter().enumerate() {
        let rep = test_admissible(s.config(), s, ctx.samples, &mut ctx.rng("examples-test", i as u64))?;
        if !rep.admissible {
            return fail(format!("example space {i} not admissible (max h rank {})", rep.max_h_rank));
        }
    }
    ok(format!("{} spaces admissible", spaces.len()))
}

fn constructed_spaces(ctx: &Ctx) -> Result<(PointConfiguration<Rational>, crate::admissibility::AdmissibleFamily<Rational>)> {
    let p = generic(ctx, "construct", 0);
    let fam = construct_admissible_family(&p, ctx.count(20), &mut ctx.rng("construct", 1))?;
    Ok((p, fam))
}

fn five_point_construction(ctx: &Ctx) -> Outcome {
    let (p, fam) = constructed_spaces(ctx)?;
    if fam.constrained.dim() < 7 || fam.constrained_trivial_dim != 3 {
        return fail(format!("dim R = {}, dim R∩I = {}", fam.constrained.dim(), fam.constrained_trivial_dim));
    }
    let mut nowhere_isometric = 0;
    for (i, s) in fam.spaces.iter().enumerate() {
        if !sufficient_check(&p, s)? {
            return fail(format!("space {i} fails the sufficient condition"));
        }
        if !test_admissible(&p, s, ctx.samples, &mut ctx.rng("construct-test", i as u64))?.admissible {
            return fail(format!("space {i} not admissible"));
        }
        let mut any_triple = false;
        for t in (0..5).combinations(3) {
            any_triple |= restricts_to_isometry(&p, s, &t)?;
        }
        if !any_triple {
            nowhere_isometric += 1;
        }
    }
    if nowhere_isometric == 0 {
        return fail("every space is isometric on some three points".into());
    }
    ok(format!(
        "dim R = {}, {} spaces, {nowhere_isometric} not isometric on any triple",
        fam.constrained.dim(),
        fam.spaces.len()
    ))
}

fn one_dimensional(ctx: &Ctx) -> Outcome {
    let n = ctx.count(50);
    let mut checked = 0;
    for i in 0..n as u64 {
        let mut rng = ctx.rng("one-dim", i);
        let p = PointConfiguration::<Rational>::random_generic(3, 4, &mut rng);
        let u = Motion::new(random_integer_matrix(3, 4, 1000, &mut rng));
        if !one_dim_check(&p, &u, &mut rng)? {
            return fail(format!("instance {i}: pin velocities agree somewhere"));
        }
        checked += 1;
    }
    ok(format!("{checked} one-dimensional spaces rejected"))
}

fn conic(ctx: &Ctx) -> Outcome {
    let n = ctx.count(10);
    let skew = skew_symmetric_matrices::<Rational>(3);
    for i in 0..n as u64 {
        let p = generic(ctx, "conic", i);
        for (g, edges) in six_edge_graphs().iter().enumerate() {
            if !conic_check(&p, edges)?.same_as(&skew) {
                return fail(format!("graph {} on configuration {i} has extra solutions", g + 1));
            }
        }
    }
    ok(format!("{n} configurations x 3 graphs"))
}

fn classification(ctx: &Ctx) -> Outcome {
    let mut spaces = admissible_examples(ctx)?;
    spaces.extend(constructed_spaces(ctx)?.1.spaces);
    let (mut affine, mut rank_one) = (0, 0);
    for (i, s) in spaces.iter().enumerate() {
        let c = classify_admissible(s.config(), s)?;
        match c.kind {
            ClassificationKind::AllAffine => affine += 1,
            ClassificationKind::RankOneForm => {
                let (plane, z) = (c.plane.expect("plane"), c.z.expect("z"));
                if !p_equivalent(s, &rank_one_space(s.config(), &plane, &z)?)? {
                    return fail(format!("space {i}: reconstruction not p-equivalent"));
                }
                rank_one += 1;
            }
            ClassificationKind::Anomaly => return fail(format!("space {i}: anomaly ({})", c.details)),
        }
    }
    ok(format!("{affine} all-affine, {rank_one} rank-one"))
}

fn two_extensions(ctx: &Ctx) -> Outcome {
    let g = Graph::complete(5).without_edge(3, 4);
    let x = [0, 1, 2, 3, 4];
    let mut predictions = 0;
    for (idx, (e, f)) in g.edge_list().into_iter().tuple_combinations().enumerate() {
        let rep = verify_extension_theorems(&g, &x, e, f, &mut ctx.rng("ext", idx as u64))?;
        if !rep.consistent {
            return fail(format!("prediction wrong for e={e:?}, f={f:?}"));
        }
        predictions += rep.predicted_rigid.is_some() as usize;
    }
    let bad = verify_extension_theorems(&g, &x, (0, 3), (1, 3), &mut ctx.rng("ext", 100))?;
    if bad.implied_k4.is_none() || bad.actual_rigid {
        return fail("non-rigid extension at a degree-3 vertex not reproduced".into());
    }
    ok(format!("36 choices consistent, {predictions} predictions made"))
}

pub(crate) fn random_affine<R: Rng + ?Sized>(vars: usize, rng: &mut R) -> Polynomial {
    let c: Vec<Rational> = random_integer_vector(vars + 1, 9, rng);
    Polynomial::affine(c[0].clone(), &c[1..])
}

pub(crate) fn random_quadratic<R: Rng + ?Sized>(vars: usize, rng: &mut R) -> Polynomial {
    let mut terms = Vec::new();
    for i in 0..vars {
        for j in i..vars {
            let mut m = vec![0; vars];
            m[i] += 1;
            m[j] += 1;
            terms.push((m, Rational::from_i64(rng.gen_range(-9..=9))));
        }
    }
    Polynomial::from_terms(vars, terms).expect("shape").add(&random_affine(vars, rng))
}

fn brute_force_dependent<R: Rng + ?Sized>(h: &[Polynomial; 4], vars: usize, points: usize, rng: &mut R) -> bool {
    (0..points).all(|_| {
        let z: Vec<Rational> = random_integer_vector(vars, 1000, rng);
        let det = h[0].eval(&z) * h[3].eval(&z) - h[2].eval(&z) * h[1].eval(&z);
        det.is_zero_exact()
    })
}

fn poly_dependence(ctx: &Ctx) -> Outcome {
    let n = ctx.count(100);
    let vars = 3;
    for case in 0..4 {
        for i in 0..n as u64 {
            let mut rng = ctx.rng("poly", (case * 100_000 + i as usize) as u64);
            let h: [Polynomial; 4] = match case {
                0 => {
                    let (l, q) = (random_affine(vars, &mut rng), random_quadratic(vars, &mut rng));
                    let c = Rational::from_i64(rng.gen_range(1..=9));
                    [l.clone(), q.clone(), l.scale(&c), q.scale(&c)]
                }
                1 => {
                    let z = Polynomial::zero(vars);
                    [z.clone(), random_quadratic(vars, &mut rng), z, random_quadratic(vars, &mut rng)]
                }
                2 => {
                    let m = random_affine(vars, &mut rng);
                    let (l1, l2) = (random_affine(vars, &mut rng), random_affine(vars, &mut rng));
                    [l1.clone(), m.mul(&l1), l2.clone(), m.mul(&l2)]
                }
                _ => std::array::from_fn(|k| {
                    if k % 2 == 0 {
                        random_affine(vars, &mut rng)
                    } else {
                        random_quadratic(vars, &mut rng)
                    }
                }),
            };
            let decided = affine_poly_dependence(&h[0], &h[1], &h[2], &h[3])?;
            let brute = brute_force_dependent(&h, vars, 200 * ctx.samples / 20 + 1, &mut rng);
            let expected_case = match case {
                0 => matches!(decided, PolyDependence::DependentPair),
                1 => matches!(decided, PolyDependence::BothLinearZero | PolyDependence::DependentPair),
                2 => matches!(decided, PolyDependence::CommonLinearFactor(_) | PolyDependence::DependentPair),
                _ => matches!(decided, PolyDependence::Independent),
            };
            let agrees = brute == !matches!(decided, PolyDependence::Independent);
            if !agrees || !expected_case {
                return fail(format!("case {case} instance {i}: decided {}, brute force {brute}", decided.name()));
            }
        }
    }
    ok(format!("{n} pairs per case agree with brute force"))
}

/// Runs all suites in index order.
pub fn run_battery(opts: BatteryOptions) -> Vec<SuiteResult> {
    let ctx = Ctx { tree: SeedTree::new(opts.seed), samples: opts.samples.max(1), fault: opts.inject_fault };
    let suites: [fn(&Ctx) -> Outcome; 12] = [
        sherman_morrison,
        pin_flex,
        limit_closed_form,
        trivial_dimension,
        rigidity_oracle,
        example_spaces,
        five_point_construction,
        one_dimensional,
        conic,
        classification,
        two_extensions,
        poly_dependence,
    ];
    suites
        .iter()
        .zip(SUITE_TAGS)
        .enumerate()
        .map(|(i, (suite, tag))| {
            let (passed, detail) = match suite(&ctx) {
                Ok(Ok(d)) => (true, d),
                Ok(Err(d)) => (false, d),
                Err(e) => (false, format!("error: {e}")),
            };
            SuiteResult { index: i + 1, tag, passed, detail }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_battery_passes_and_fault_is_caught() {
        let quick = BatteryOptions { seed: 9, samples: 2, inject_fault: false };
        let results = run_battery(quick);
        assert_eq!(results.len(), 12);
        for r in &results {
            assert!(r.passed, "{} failed: {}", r.tag, r.detail);
        }
        let faulty = run_battery(BatteryOptions { inject_fault: true, ..quick });
        assert!(!faulty[0].passed);
    }
}
