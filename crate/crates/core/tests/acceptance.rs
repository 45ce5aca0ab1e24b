//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use heron_pairs::constructor::{
    chord_third_point, cubic_rp, cubic_rp_base_point, cubic_rr, cubic_rr_base_point,
    descend_further, fermat_quartic_step, pair_from_rr_point, quartic_ra, solve_ra, solve_rp,
    solve_rr, tangent_third_point, CurvePoint, PlaneCubic,
};
use heron_pairs::families::{family_ra, family_rp, family_rp_right, family_rr, family_rr_right};
use heron_pairs::geometry::{certify_heron, is_right, Triangle};
use heron_pairs::rational::{int, parse_rational, rat, Rational};
use heron_pairs::search::{cross_check_family, find_pairs, SearchConfig};
use heron_pairs::{verify_pair, PairKind, TrianglePair};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn sides_of(pair: &TrianglePair) -> [[Rational; 3]; 2] {
    let grab = |t: &Triangle| t.sides().map(Clone::clone);
    [grab(&pair.first.triangle), grab(&pair.second.triangle)]
}

fn ints(v: [i64; 3]) -> [Rational; 3] {
    v.map(int)
}

fn check_pair(
    label: &str,
    pair: &TrianglePair,
    first: [i64; 3],
    second: [i64; 3],
    r: &str,
    other: &str,
) -> Result<(), String> {
    ensure!(
        sides_of(pair) == [ints(first), ints(second)],
        "{label}: sides {} / {}",
        pair.first.triangle,
        pair.second.triangle
    );
    ensure!(pair.shared_circumradius == q(r), "{label}: R = {}", pair.shared_circumradius);
    ensure!(pair.shared_other == q(other), "{label}: other = {}", pair.shared_other);
    let report = verify_pair(pair);
    ensure!(report.all_passed(), "{label}: verification failed {:?}", report.failures().collect::<Vec<_>>());
    Ok(())
}

fn random_rational(rng: &mut ChaCha8Rng, bound: i64) -> Rational {
    loop {
        let n = rng.gen_range(-bound..=bound);
        if n != 0 {
            return rat(n, rng.gen_range(1..=bound));
        }
    }
}

/// Closed form of the first Fermat step from `u = 1`, evaluated directly.
fn fermat_closed_form(t: &Rational) -> Option<Rational> {
    let poly = |cs: [i64; 9]| {
        cs.iter().fold(Rational::zero(), |acc, &c| acc * t + int(c))
    };
    let num = poly([1, 8, 20, -56, -26, 56, 20, -8, 1]);
    let den = poly([1, -8, 20, 56, -26, -56, 20, 8, 1]);
    (!den.is_zero()).then(|| num / den)
}

fn criterion_1() -> Outcome {
    let expected = ([1321940, 1166616, 1636180], [991455, 1548096, 1585185]);
    check_pair("family_rp(2,3)", &family_rp(&int(2), &int(3)).map_err(|e| e.to_string())?,
        expected.0, expected.1, "1652425/2", "4124736")?;
    for m in [int(1), rat(7, 3), int(-5)] {
        let pair = solve_rp(&int(2), &int(3), &m).map_err(|e| e.to_string())?;
        check_pair(&format!("solve_rp(2,3,{m})"), &pair, expected.0, expected.1, "1652425/2", "4124736")?;
    }
    Ok("family_rp(2,3) and solve_rp(2,3,m) agree with the published pair".into())
}

fn criterion_2() -> Outcome {
    let pair = family_rp_right(&int(2)).map_err(|e| e.to_string())?;
    check_pair("family_rp_right(2)", &pair, [500516, 609400, 252324], [625645, 123200, 613395],
        "625645/2", "1362240")?;
    ensure!(is_right(&pair.second.triangle), "second triangle is not right-angled");
    Ok("family_rp_right(2) matches; second triangle is right".into())
}

fn criterion_3() -> Outcome {
    let (t1, t2) = (q("9/2"), q("7/6"));
    let expected = ([2055, 1105, 3002], [4795, 4845, 482]);
    check_pair("family_rr", &family_rr(&t1, &t2).map_err(|e| e.to_string())?,
        expected.0, expected.1, "58225/24", "228")?;
    check_pair("solve_rr", &solve_rr(&t1, &t2, &int(1)).map_err(|e| e.to_string())?,
        expected.0, expected.1, "58225/24", "228")?;
    Ok("family_rr(9/2,7/6) and solve_rr(9/2,7/6,1) match".into())
}

fn criterion_4() -> Outcome {
    let expected = ([40, 68, 84], [85, 77, 36]);
    check_pair("family_rr_right(4)", &family_rr_right(&int(4)).map_err(|e| e.to_string())?,
        expected.0, expected.1, "85/2", "14")?;
    check_pair("solve_rr(4,1,1)", &solve_rr(&int(4), &int(1), &int(1)).map_err(|e| e.to_string())?,
        expected.0, expected.1, "85/2", "14")?;
    Ok("family_rr_right(4) and solve_rr(4,1,1) match".into())
}

fn criterion_5() -> Outcome {
    let expected = ([3283540, 7603539, 7776485], [4279155, 5834452, 7776485]);
    let (r, a) = ("10402718520025/2639802", "12317028393582");
    check_pair("family_ra(2)", &family_ra(&int(2)).map_err(|e| e.to_string())?, expected.0, expected.1, r, a)?;
    check_pair("solve_ra(2)", &solve_ra(&int(2)).map_err(|e| e.to_string())?, expected.0, expected.1, r, a)?;
    Ok("family_ra(2) and solve_ra(2) match".into())
}

fn criterion_6() -> Outcome {
    let at_two = fermat_quartic_step(&quartic_ra(&int(2)).map_err(|e| e.to_string())?, &int(1))
        .map_err(|e| e.to_string())?;
    ensure!(at_two == rat(865, 1537), "t = 2 gave u = {at_two}");
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < 20 {
        attempts += 1;
        ensure!(attempts < 1000, "too few non-degenerate samples");
        let t = random_rational(&mut rng, 9);
        if t == int(1) || t == int(-1) {
            continue;
        }
        let (Some(expected), Ok(quartic)) = (fermat_closed_form(&t), quartic_ra(&t)) else {
            continue;
        };
        let Ok(u) = fermat_quartic_step(&quartic, &int(1)) else {
            continue;
        };
        ensure!(u == expected, "t = {t}: step gave {u}, closed form {expected}");
        ensure!(quartic.is_square_at(&u), "t = {t}: quartic not square at {u}");
        checked += 1;
    }
    Ok(format!("{checked} random t match the closed form; t = 2 gives 865/1537"))
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut verified = [0usize; 3];
    for _ in 0..100 {
        let t1 = random_rational(&mut rng, 9);
        let t2 = random_rational(&mut rng, 9);
        let outputs = [family_rp(&t1, &t2), family_rr(&t1, &t2), family_ra(&t1)];
        for (slot, out) in outputs.into_iter().enumerate() {
            if let Ok(pair) = out {
                let report = verify_pair(&pair);
                ensure!(
                    report.all_passed(),
                    "{} at ({t1}, {t2}): {:?}",
                    pair.kind,
                    report.failures().collect::<Vec<_>>()
                );
                verified[slot] += 1;
            }
        }
    }
    ensure!(verified.iter().all(|&n| n > 0), "a family produced no valid pair: {verified:?}");
    Ok(format!("verified rp/rr/ra = {}/{}/{} non-degenerate pairs", verified[0], verified[1], verified[2]))
}

fn criterion_8() -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .map_err(|e| e.to_string())?;
    pool.install(|| {
        let cfg = SearchConfig::new(85, [PairKind::CommonRr]);
        let records = find_pairs(&cfg).map_err(|e| e.to_string())?;
        let a = Triangle::from_ints(40, 68, 84).unwrap();
        let b = Triangle::from_ints(85, 77, 36).unwrap();
        let found = records.iter().any(|r| {
            let (x, y) = (&r.pair.first.triangle, &r.pair.second.triangle);
            r.key == (rat(85, 2), int(14))
                && ((x.is_congruent_to(&a) && y.is_congruent_to(&b))
                    || (x.is_congruent_to(&b) && y.is_congruent_to(&a)))
        });
        ensure!(found, "pair not among {} records", records.len());
        let pair = family_rr_right(&int(4)).map_err(|e| e.to_string())?;
        ensure!(cross_check_family(&pair, &cfg).map_err(|e| e.to_string())?, "cross-check failed");
        Ok(format!("{} records at max_side 85, published pair present, cross-check true", records.len()))
    })
}

/// Checks the point is on the curve and the line through `base` with
/// direction `dir` has a double root at the base parameter.
fn tangent_certificate(curve: &PlaneCubic, base: &CurvePoint, third: &CurvePoint) -> Result<(), String> {
    ensure!(curve.eval(third).is_zero(), "residual {} at {third:?}", curve.eval(third));
    let (g1, g2) = curve.gradient(base);
    let [c0, c1, _, _] = curve.restrict_to_line(base, (&g2, &-g1));
    ensure!(c0.is_zero() && c1.is_zero(), "no double root at base: c0 = {c0}, c1 = {c1}");
    Ok(())
}

fn chord_certificate(curve: &PlaneCubic, p: &CurvePoint, r: &CurvePoint, third: &CurvePoint) -> Result<(), String> {
    ensure!(curve.eval(third).is_zero(), "residual {} at {third:?}", curve.eval(third));
    let dir = (&r.y1 - &p.y1, &r.y2 - &p.y2);
    let c = curve.restrict_to_line(p, (&dir.0, &dir.1));
    let at_one: Rational = c.iter().sum();
    ensure!(c[0].is_zero() && at_one.is_zero(), "chord does not pass through both points");
    Ok(())
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let (mut tangents, mut chords, mut attempts) = (0usize, 0usize, 0usize);
    while tangents + chords < 100 {
        attempts += 1;
        ensure!(attempts < 2000, "too few non-degenerate extractions");
        let (t1, t2, m) = (
            random_rational(&mut rng, 9),
            random_rational(&mut rng, 9),
            random_rational(&mut rng, 9),
        );
        let (curve, base) = if attempts % 2 == 0 {
            (cubic_rp(&t1, &t2, &m), cubic_rp_base_point(&t1, &t2, &m))
        } else {
            (cubic_rr(&t1, &t2, &m), cubic_rr_base_point(&t1, &t2, &m))
        };
        let curve = curve.map_err(|e| e.to_string())?;
        ensure!(curve.contains(&base), "base point off the curve");
        let Ok(p1) = tangent_third_point(&curve, &base) else { continue };
        tangent_certificate(&curve, &base, &p1)?;
        tangents += 1;
        let Ok(p2) = tangent_third_point(&curve, &p1) else { continue };
        tangent_certificate(&curve, &p1, &p2)?;
        tangents += 1;
        if let Ok(p3) = chord_third_point(&curve, &base, &p2) {
            chord_certificate(&curve, &base, &p2, &p3)?;
            chords += 1;
        }
    }

    let (t1, t2, m) = (int(4), int(1), int(1));
    let curve = cubic_rr(&t1, &t2, &m).map_err(|e| e.to_string())?;
    let fresh = descend_further(&curve, &[cubic_rr_base_point(&t1, &t2, &m)], 2).map_err(|e| e.to_string())?;
    ensure!(fresh.len() == 2, "descent produced {} points", fresh.len());
    for p in &fresh {
        ensure!(curve.contains(p), "descended point off the curve");
        let pair = pair_from_rr_point(&t1, &t2, &m, p).map_err(|e| e.to_string())?;
        ensure!(pair.kind == PairKind::CommonRr && verify_pair(&pair).all_passed(), "unverified pair from {p:?}");
    }
    Ok(format!("{tangents} tangent + {chords} chord extractions certified; descent gave 2 verified pairs"))
}

fn criterion_10() -> Outcome {
    const CHECKS: [&str; 2] = ["a1*b1*c1 = a2*b2*c2", "equal Heron products"];
    let mut pairs = vec![
        family_ra(&int(2)).map_err(|e| e.to_string())?,
        solve_ra(&int(2)).map_err(|e| e.to_string())?,
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..30 {
        if let Ok(p) = family_ra(&random_rational(&mut rng, 9)) {
            pairs.push(p);
        }
    }
    let searched = find_pairs(&SearchConfig::new(60, [PairKind::CommonRa])).map_err(|e| e.to_string())?;
    pairs.extend(searched.into_iter().map(|r| r.pair));
    for pair in &pairs {
        let report = verify_pair(pair);
        for name in CHECKS {
            ensure!(report.get(name) == Some(true), "{name} missing or false for {}", pair.first.triangle);
        }
    }

    // a pair sharing R and A but breaking the product identity must be caught
    let mut forged = family_ra(&int(2)).map_err(|e| e.to_string())?;
    forged.second = certify_heron(&Triangle::from_ints(3, 4, 5).unwrap()).unwrap();
    let report = verify_pair(&forged);
    ensure!(report.get(CHECKS[0]) == Some(false), "forged pair passed the product check");
    ensure!(!report.all_passed(), "forged pair verified");
    Ok(format!("both identities asserted on {} emitted pairs; forged pair rejected", pairs.len()))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("common R+P regression", criterion_1, Duration::from_secs(1)),
        ("right R+P specialization", criterion_2, Duration::from_secs(1)),
        ("common R+r regression", criterion_3, Duration::from_secs(1)),
        ("right R+r specialization", criterion_4, Duration::from_secs(1)),
        ("common R+A regression", criterion_5, Duration::from_secs(5)),
        ("Fermat step closed form", criterion_6, Duration::from_secs(5)),
        ("family property suite", criterion_7, Duration::from_secs(60)),
        ("oracle equivalence", criterion_8, Duration::from_secs(60)),
        ("tangent/chord machinery", criterion_9, Duration::from_secs(30)),
        ("area-pair identities", criterion_10, Duration::from_secs(60)),
    ];

    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(run))
            .unwrap_or_else(|e| {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "panic".into());
                Err(format!("panicked: {msg}"))
            });
        let elapsed = start.elapsed();
        let result = match result {
            Ok(_) if elapsed > limit => Err(format!("took {elapsed:.2?}, limit {limit:?}")),
            other => other,
        };
        match result {
            Ok(detail) => println!("PASS  {:>2}. {name} ({elapsed:.2?}): {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL  {:>2}. {name} ({elapsed:.2?}): {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
