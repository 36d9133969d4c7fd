//! The cross-check suite: each criterion re-derives a quantity through an
//! independent route and compares it against the library's answer. The
//! suite is what `cargo test` and the `verify` subcommand run; it is kept in
//! the library so both share one implementation.

use std::sync::Arc;
use std::time::Instant;

use num::{BigInt, BigRational, BigUint, One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bundles::{
    regular_adjoint_blocks, sl_class_from_mu, sl_classify, sp_class_from_mu, BundleExpr,
    AtiyahSummand, BundleDecomp, GroupTag,
};
use crate::elltorus::{ELambdaPoint, EPoint};
use crate::moduli::{n_p, stratum_dim, wp_space};
use crate::rootsys::{Kind, RootSystem};
use crate::spectral::{cover_index, sl_spectral_fiber, sp_spectral_fiber};

/// Outcome of one acceptance criterion.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CriterionReport {
    pub index: usize,
    pub name: String,
    pub passed: bool,
    pub details: String,
    pub elapsed_ms: u128,
}

/// Runs every criterion with the given random seed and orbit bound and
/// returns one report per criterion, in order.
pub fn run_all(seed: u64, orbit_bound: usize) -> Vec<CriterionReport> {
    let checks: [(usize, &str, fn(u64, usize) -> std::result::Result<String, String>); 11] = [
        (1, "weight-tables", weight_tables),
        (2, "weyl-identity", weyl_identity),
        (3, "casimir-consistency", casimir_consistency),
        (4, "principal-blocks", principal_blocks),
        (5, "regularity-law", regularity_law),
        (6, "canonicalization", canonicalization),
        (7, "classifier-oracle", classifier_oracle),
        (8, "dimension-counts", dimension_counts),
        (9, "descent-orders", descent_orders),
        (10, "spectral-covers", spectral_covers),
        (11, "strata", strata),
    ];
    checks
        .into_iter()
        .map(|(index, name, f)| {
            let start = Instant::now();
            let outcome = f(seed, orbit_bound);
            let elapsed_ms = start.elapsed().as_millis();
            let (passed, details) = match outcome {
                Ok(d) => (true, d),
                Err(d) => (false, d),
            };
            CriterionReport {
                index,
                name: name.to_string(),
                passed,
                details,
                elapsed_ms,
            }
        })
        .collect()
}

/// Every simple system of rank at most 8: 33 in total.
pub fn all_systems() -> Vec<Arc<RootSystem>> {
    let mut out = Vec::new();
    for rank in 1..=8 {
        out.push(RootSystem::get(Kind::A, rank).unwrap());
    }
    for rank in 2..=8 {
        out.push(RootSystem::get(Kind::B, rank).unwrap());
        out.push(RootSystem::get(Kind::C, rank).unwrap());
    }
    for rank in 3..=8 {
        out.push(RootSystem::get(Kind::D, rank).unwrap());
    }
    for rank in 6..=8 {
        out.push(RootSystem::get(Kind::E, rank).unwrap());
    }
    out.push(RootSystem::get(Kind::F, 4).unwrap());
    out.push(RootSystem::get(Kind::G, 2).unwrap());
    out
}

fn systems_up_to_rank(max: usize) -> Vec<Arc<RootSystem>> {
    all_systems().into_iter().filter(|s| s.rank() <= max).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Squared lengths of the simple roots recovered from the Cartan matrix
/// alone: adjacent ratios are the ratio of off-diagonal entries, and the
/// shortest root is normalized to squared length 2. Independent of the
/// per-type tables the library is built from.
fn lengths_from_cartan(cartan: &[Vec<i64>]) -> Vec<BigRational> {
    let rank = cartan.len();
    let mut lengths: Vec<Option<BigRational>> = vec![None; rank];
    lengths[0] = Some(BigRational::one());
    let mut queue = vec![0usize];
    while let Some(i) = queue.pop() {
        let li = lengths[i].clone().unwrap();
        for j in 0..rank {
            if i == j || cartan[i][j] == 0 || lengths[j].is_some() {
                continue;
            }
            // l_j / l_i = cartan[i][j] / cartan[j][i].
            lengths[j] = Some(&li * ratio(cartan[i][j]) / ratio(cartan[j][i]));
            queue.push(j);
        }
    }
    let lengths: Vec<BigRational> = lengths.into_iter().map(|l| l.unwrap()).collect();
    let shortest = lengths.iter().min().unwrap().clone();
    lengths.into_iter().map(|l| l / &shortest * ratio(2)).collect()
}

/// Comarks recomputed from scratch: find the dominant long root by scanning
/// the root list, then expand its coroot over the simple coroots with exact
/// rational arithmetic.
fn oracle_comarks(sys: &RootSystem) -> std::result::Result<Vec<i64>, String> {
    let cartan = sys.cartan();
    let rank = sys.rank();
    let lengths = lengths_from_cartan(cartan);
    let root_length = |coeffs: &[i64]| -> BigRational {
        let mut total = BigRational::zero();
        for i in 0..rank {
            for j in 0..rank {
                // (alpha_i, alpha_j) = cartan[i][j] * l_i / 2.
                total += ratio(coeffs[i] * coeffs[j]) * ratio(cartan[i][j]) * &lengths[i]
                    / ratio(2);
            }
        }
        total
    };
    let dominant: Vec<&Vec<i64>> = sys
        .roots()
        .iter()
        .filter(|coeffs| {
            (0..rank).all(|i| (0..rank).map(|j| cartan[i][j] * coeffs[j]).sum::<i64>() >= 0)
        })
        .collect();
    let max_len = dominant.iter().map(|c| root_length(c)).max().unwrap();
    let long_dominant: Vec<&&Vec<i64>> =
        dominant.iter().filter(|c| root_length(c) == max_len).collect();
    if long_dominant.len() != 1 {
        return Err(format!(
            "{}: expected a unique dominant long root, found {}",
            sys,
            long_dominant.len()
        ));
    }
    let theta = long_dominant[0].as_slice();
    let mut comarks = Vec::with_capacity(rank);
    for i in 0..rank {
        let g = ratio(theta[i]) * &lengths[i] / &max_len;
        if !g.is_integer() {
            return Err(format!("{}: comark {i} is not integral", sys));
        }
        let g = g.to_integer();
        comarks.push(i64::try_from(&g).map_err(|_| "comark overflow".to_string())?);
    }
    Ok(comarks)
}

fn weight_tables(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    let systems = all_systems();
    ensure!(systems.len() == 33, "expected 33 systems, got {}", systems.len());
    for sys in &systems {
        let oracle = oracle_comarks(sys)?;
        let mut expected = vec![1i64];
        expected.extend(oracle);
        let wp = wp_space(sys);
        ensure!(
            wp.weights == expected && wp.dim == sys.rank(),
            "{}: weights {:?} differ from oracle {:?}",
            sys,
            wp.weights,
            expected
        );
        if matches!(sys.kind(), Kind::A | Kind::C) {
            ensure!(
                wp.weights.iter().all(|&g| g == 1),
                "{}: A/C weights must all be one, got {:?}",
                sys,
                wp.weights
            );
        }
    }
    Ok(format!("{} weight tables match the length/dominance oracle", systems.len()))
}

fn weyl_identity(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    let mut checked = 0;
    for sys in all_systems() {
        if !sys.kind().is_simply_laced() {
            ensure!(
                sys.verify_weyl_identity().is_err(),
                "{}: identity should be refused off the simply-laced list",
                sys
            );
            continue;
        }
        ensure!(
            matches!(sys.verify_weyl_identity(), Ok(true)),
            "{}: r! * (g_1...g_r) * det != |W|",
            sys
        );
        checked += 1;
    }
    let e8 = RootSystem::get(Kind::E, 8).unwrap();
    ensure!(
        *e8.weyl_order() == BigUint::from(696_729_600u64),
        "E8 Weyl order is {}",
        e8.weyl_order()
    );
    Ok(format!("identity holds for {checked} simply-laced systems; E8 order 696729600"))
}

fn casimir_consistency(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    for sys in all_systems() {
        let weights = sys.casimir_weights();
        let product: BigUint = weights
            .iter()
            .map(|&d| BigUint::from(d as u64))
            .product();
        ensure!(
            product == *sys.weyl_order(),
            "{}: product of invariant degrees {} != |W| {}",
            sys,
            product,
            sys.weyl_order()
        );
        let block_sum: i64 = weights.iter().map(|&d| 2 * d - 1).sum();
        ensure!(
            block_sum as usize == sys.dim_g(),
            "{}: sum of (2d-1) is {}, dim g is {}",
            sys,
            block_sum,
            sys.dim_g()
        );
    }
    let e8 = RootSystem::get(Kind::E, 8).unwrap();
    ensure!(e8.dim_g() == 248, "E8 dimension is {}", e8.dim_g());
    Ok("invariant degrees multiply to |W| and fill dim g for all 33 systems".into())
}

fn principal_blocks(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    for sys in all_systems() {
        let zero = ELambdaPoint::zero(sys.clone());
        let shape = regular_adjoint_blocks(&zero);
        let mut expected: Vec<u64> =
            sys.casimir_weights().iter().map(|&d| 2 * d as u64 - 1).collect();
        expected.sort_unstable_by(|a, b| b.cmp(a));
        ensure!(
            shape.unipotent_blocks == expected,
            "{}: blocks at zero are {:?}, expected {:?}",
            sys,
            shape.unipotent_blocks,
            expected
        );
        ensure!(
            shape.dimension() as usize == sys.dim_g(),
            "{}: blocks sum to {}, dim g is {}",
            sys,
            shape.dimension(),
            sys.dim_g()
        );
    }
    let a1 = ELambdaPoint::zero(RootSystem::get(Kind::A, 1).unwrap());
    ensure!(
        regular_adjoint_blocks(&a1).unipotent_blocks == vec![3],
        "A1 at zero must give a single 3-block"
    );
    Ok("regular shape at zero is the principal block profile for all 33 systems".into())
}

fn rand_epoint(rng: &mut ChaCha8Rng) -> EPoint {
    let coord = |rng: &mut ChaCha8Rng| {
        let q = rng.gen_range(1..=12i64);
        let p = rng.gen_range(0..q);
        BigRational::new(BigInt::from(p), BigInt::from(q))
    };
    let a = coord(rng);
    let b = coord(rng);
    EPoint::new(a, b)
}

fn rand_point(rng: &mut ChaCha8Rng, sys: &Arc<RootSystem>) -> ELambdaPoint {
    let coords = (0..sys.rank()).map(|_| rand_epoint(rng)).collect();
    ELambdaPoint::new(sys.clone(), coords).unwrap()
}

fn regularity_law(seed: u64, _bound: usize) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x05);
    let mut tested = 0usize;
    for sys in systems_up_to_rank(6) {
        let r = sys.rank();
        for _ in 0..1000 {
            let mu = rand_point(&mut rng, &sys);
            let vanishing = mu.vanishing_roots().len();
            let split = mu.split_aut_dim();
            ensure!(
                split == r + vanishing,
                "{}: split automorphism dimension {split} != {r} + {vanishing}",
                sys
            );
            ensure!(
                mu.is_torus_regular() == (split == r),
                "{}: regularity disagrees with the dimension criterion at {mu}",
                sys
            );
            let shape = regular_adjoint_blocks(&mu);
            ensure!(
                shape.unipotent_blocks.len() == r,
                "{}: {} blocks instead of {r} at {mu}",
                sys,
                shape.unipotent_blocks.len()
            );
            ensure!(
                shape.dimension() as usize == split,
                "{}: blocks sum to {} but the split bundle has h0 = {split} at {mu}",
                sys,
                shape.dimension()
            );
            tested += 1;
        }
    }
    Ok(format!("{tested} random torsion points obey the regularity law"))
}

fn canonicalization(seed: u64, _bound: usize) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x06);
    let mut pairs = 0usize;
    for sys in systems_up_to_rank(6) {
        let r = sys.rank();
        for _ in 0..1000 {
            let mu = rand_point(&mut rng, &sys);
            let len = rng.gen_range(0..=2 * r + 2);
            let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..r)).collect();
            let w = sys.weyl_element(&word).unwrap();
            let nu = mu.weyl_apply(&w).unwrap();
            let a = mu.canonicalize();
            let b = nu.canonicalize();
            ensure!(
                a.representative == b.representative && a.stabilizer_order == b.stabilizer_order,
                "{}: canonical forms of {mu} and its image {nu} differ",
                sys
            );
            pairs += 1;
        }
    }

    let mut brute = 0usize;
    for sys in all_systems() {
        if *sys.weyl_order() > BigUint::from(10_000u32) {
            continue;
        }
        let mu = rand_point(&mut rng, &sys);
        let orbit = mu.enumerate_orbit(20_000).map_err(|e| e.to_string())?;
        let canon = mu.canonicalize();
        let least = orbit
            .iter()
            .min_by(|x, y| x.coords().cmp(y.coords()))
            .unwrap();
        ensure!(
            &canon.representative == least,
            "{}: representative is not the orbit minimum at {mu}",
            sys
        );
        ensure!(
            canon.orbit_size() == BigUint::from(orbit.len()),
            "{}: stabilizer order inconsistent with orbit length at {mu}",
            sys
        );
        for x in &orbit {
            let c = x.canonicalize();
            ensure!(
                c.representative == canon.representative,
                "{}: orbit member {x} canonicalizes elsewhere",
                sys
            );
            brute += 1;
        }
    }
    Ok(format!("{pairs} random Weyl translates and {brute} brute-forced orbit members agree"))
}

/// Automorphism dimension recomputed through the tensor decomposition of
/// pairs of indecomposables: `I_a(l) tensor I_b(t)` splits into `min(a, b)`
/// indecomposable summands twisted by `t - l`, and a degree-zero
/// indecomposable has a section exactly when its twist vanishes.
fn oracle_aut_dim(v: &BundleDecomp) -> u64 {
    let mut sections = 0u64;
    for s in &v.summands {
        for t in &v.summands {
            let twist = t.lambda.sub(&s.lambda);
            for _ in 0..s.d.min(t.d) {
                if twist.is_zero() {
                    sections += 1;
                }
            }
        }
    }
    sections - 1
}

fn rand_sl_decomp(rng: &mut ChaCha8Rng, n: usize) -> BundleDecomp {
    let mut parts = Vec::new();
    let mut left = n as u64;
    while left > 0 {
        let d = rng.gen_range(1..=left);
        parts.push(d);
        left -= d;
    }
    let mut summands: Vec<AtiyahSummand> = Vec::new();
    let mut running = EPoint::zero();
    for (i, &d) in parts.iter().enumerate() {
        if i + 1 == parts.len() {
            let (a, b) = running.coords();
            let down = ratio(d as i64);
            summands.push(AtiyahSummand::new(d, EPoint::new(-a / &down, -b / &down)));
        } else {
            let lambda = rand_epoint(rng);
            for _ in 0..d {
                running = running.add(&lambda);
            }
            summands.push(AtiyahSummand::new(d, lambda));
        }
    }
    BundleDecomp::new(GroupTag::SL, n, summands)
}

fn classifier_oracle(seed: u64, _bound: usize) -> std::result::Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x07);
    let mut classified = 0usize;
    for n in 2..=8usize {
        for _ in 0..200 {
            let v = rand_sl_decomp(&mut rng, n);
            let class = sl_classify(&v).map_err(|e| e.to_string())?;
            let oracle = oracle_aut_dim(&v);
            ensure!(
                class.aut_dim == oracle,
                "SL({n}): classifier dimension {} != section count {oracle}",
                class.aut_dim
            );
            ensure!(
                class.is_regular == (class.aut_dim == n as u64 - 1),
                "SL({n}): regularity flag disagrees with the minimal dimension"
            );
            classified += 1;
        }
        let sys = RootSystem::get(Kind::A, n - 1).unwrap();
        for _ in 0..200 {
            let mu = rand_point(&mut rng, &sys);
            let v = sl_class_from_mu(&mu).map_err(|e| e.to_string())?;
            let class = sl_classify(&v).map_err(|e| e.to_string())?;
            ensure!(
                class.is_regular && class.aut_dim == n as u64 - 1,
                "SL({n}): class of {mu} is not regular"
            );
        }
    }
    Ok(format!("{classified} random decompositions match the section-count oracle"))
}

fn dimension_counts(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    for n in 3u64..=12 {
        for d in 1..n {
            let e = BundleExpr::w(n - d).tensor(BundleExpr::w(d)).dual();
            let got = e.h0_h1().map_err(|e| e.to_string())?;
            ensure!(got == (0, n), "h1 of (W_{} x W_{d})* is {:?}, want {n}", n - d, got);
        }
        let got = BundleExpr::w(n).sym2().dual().h0_h1().map_err(|e| e.to_string())?;
        ensure!(got == (0, n + 1), "h1 of Sym2(W_{n})* is {:?}, want {}", got, n + 1);
        let got = BundleExpr::q4()
            .tensor(BundleExpr::w(n - 2).dual())
            .h0_h1()
            .map_err(|e| e.to_string())?;
        ensure!(got == (0, 4), "h1 of Q4 x W_{}* is {:?}, want 4", n - 2, got);
        let got = BundleExpr::w(n - 2).wedge2().dual().h0_h1().map_err(|e| e.to_string())?;
        ensure!(got == (0, n - 3), "h1 of Wedge2(W_{})* is {:?}, want {}", n - 2, got, n - 3);
    }
    Ok("all four deformation families give the expected h1 for 3 <= n <= 12".into())
}

fn descent_orders(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    // Golden values, frozen by hand from the three clauses of the descent
    // theorem rather than recomputed through the library formula.
    let golden_a: &[(usize, usize, u64)] = &[
        (1, 1, 2),
        (2, 1, 3),
        (2, 2, 3),
        (3, 1, 4),
        (3, 2, 2),
        (3, 3, 4),
        (4, 1, 5),
        (4, 2, 5),
        (4, 3, 5),
        (4, 4, 5),
        (5, 1, 6),
        (5, 2, 3),
        (5, 3, 2),
        (5, 4, 3),
        (5, 5, 6),
        (6, 1, 7),
        (6, 2, 7),
        (6, 3, 7),
        (6, 4, 7),
        (6, 5, 7),
        (6, 6, 7),
        (7, 1, 8),
        (7, 2, 4),
        (7, 3, 8),
        (7, 4, 2),
        (7, 5, 8),
        (7, 6, 4),
        (7, 7, 8),
        (8, 1, 9),
        (8, 2, 9),
        (8, 3, 3),
        (8, 4, 9),
        (8, 5, 9),
        (8, 6, 3),
        (8, 7, 9),
        (8, 8, 9),
    ];
    for &(rank, d, expected) in golden_a {
        let sys = RootSystem::get(Kind::A, rank).unwrap();
        let got = n_p(&sys, Some(d)).map_err(|e| e.to_string())?;
        ensure!(got == expected, "A{rank} d={d}: n_P is {got}, want {expected}");
    }
    let golden_rest: &[(Kind, usize, u64)] = &[
        (Kind::B, 2, 2),
        (Kind::B, 3, 1),
        (Kind::B, 4, 2),
        (Kind::B, 5, 1),
        (Kind::B, 6, 2),
        (Kind::B, 7, 1),
        (Kind::B, 8, 2),
        (Kind::C, 2, 2),
        (Kind::C, 3, 2),
        (Kind::C, 4, 2),
        (Kind::C, 5, 2),
        (Kind::C, 6, 2),
        (Kind::C, 7, 2),
        (Kind::C, 8, 2),
        (Kind::D, 3, 2),
        (Kind::D, 4, 1),
        (Kind::D, 5, 2),
        (Kind::D, 6, 1),
        (Kind::D, 7, 2),
        (Kind::D, 8, 1),
        (Kind::E, 6, 1),
        (Kind::E, 7, 1),
        (Kind::E, 8, 1),
        (Kind::F, 4, 1),
        (Kind::G, 2, 1),
    ];
    for &(kind, rank, expected) in golden_rest {
        let sys = RootSystem::get(kind, rank).unwrap();
        let got = n_p(&sys, None).map_err(|e| e.to_string())?;
        ensure!(got == expected, "{kind:?}{rank}: n_P is {got}, want {expected}");
    }
    Ok(format!(
        "{} golden descent orders reproduced",
        golden_a.len() + golden_rest.len()
    ))
}

fn spectral_covers(seed: u64, bound: usize) -> std::result::Result<String, String> {
    for n in 2..=8usize {
        let sys = RootSystem::get(Kind::A, n - 1).unwrap();
        let mut e_n = vec![0i64; n - 1];
        e_n[n - 2] = -1;
        let got = cover_index(&sys, &e_n, bound).map_err(|e| e.to_string())?;
        ensure!(got == n as u64, "SL({n}) cover degree is {got}");

        let sys = RootSystem::get(Kind::C, n).unwrap();
        let mut e_1 = vec![0i64; n];
        e_1[0] = 1;
        let got = cover_index(&sys, &e_1, bound).map_err(|e| e.to_string())?;
        ensure!(got == 2 * n as u64, "Sp(2*{n}) cover degree is {got}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x0a);
    let mut fibers = 0usize;
    for rank in 2..=6usize {
        let a = RootSystem::get(Kind::A, rank).unwrap();
        let c = RootSystem::get(Kind::C, rank).unwrap();
        for _ in 0..100 {
            let mu = rand_point(&mut rng, &a);
            let v = sl_class_from_mu(&mu).map_err(|e| e.to_string())?;
            let fiber = sl_spectral_fiber(&v).map_err(|e| e.to_string())?;
            ensure!(
                fiber.degree == rank as u64 + 1
                    && fiber.points.iter().map(|p| p.mult).sum::<u64>() == fiber.degree,
                "SL fiber degree mismatch over {mu}"
            );
            let mut total = EPoint::zero();
            for p in &fiber.points {
                total = total.add(&p.e.scalar_mul(p.mult as i64));
            }
            ensure!(total.is_zero(), "SL fiber of {mu} does not sum to zero");

            let mu = rand_point(&mut rng, &c);
            let v = sp_class_from_mu(&mu).map_err(|e| e.to_string())?;
            let fiber = sp_spectral_fiber(&v).map_err(|e| e.to_string())?;
            ensure!(
                fiber.degree == 2 * rank as u64
                    && fiber.points.iter().map(|p| p.mult).sum::<u64>() == fiber.degree,
                "Sp fiber degree mismatch over {mu}"
            );
            let mut negated: Vec<(EPoint, u64)> =
                fiber.points.iter().map(|p| (p.e.neg(), p.mult)).collect();
            negated.sort();
            let original: Vec<(EPoint, u64)> =
                fiber.points.iter().map(|p| (p.e.clone(), p.mult)).collect();
            ensure!(negated == original, "Sp fiber of {mu} is not closed under negation");
            let fixed = fiber.involution_fixed.as_ref().unwrap();
            let expected: Vec<EPoint> = fiber
                .points
                .iter()
                .filter(|p| p.e.is_two_torsion())
                .map(|p| p.e.clone())
                .collect();
            ensure!(
                *fixed == expected,
                "Sp fiber of {mu}: fixed points are not exactly the two-torsion ones"
            );
            fibers += 2;
        }
    }
    Ok(format!("cover degrees n and 2n for n <= 8; {fibers} random fibers validated"))
}

fn strata(_seed: u64, _bound: usize) -> std::result::Result<String, String> {
    let e8 = RootSystem::get(Kind::E, 8).unwrap();
    let mut weights = vec![1i64];
    weights.extend(oracle_comarks(&e8)?);
    let expected = [5usize, 3, 2, 1, 1];
    for (d, want) in (2..=6i64).zip(expected) {
        let scan = weights.iter().filter(|&&g| g % d == 0).count();
        ensure!(scan == want, "E8 d={d}: independent scan counts {scan}, want {want}");
        let got = stratum_dim(&e8, d).map_err(|e| e.to_string())?;
        ensure!(got == want, "E8 d={d}: stratum_dim is {got}, want {want}");
    }
    Ok("E8 strata for d = 2..6 are (5, 3, 2, 1, 1) by both routes".into())
}
