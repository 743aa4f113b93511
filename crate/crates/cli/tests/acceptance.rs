//! Acceptance run: one PASS/FAIL line per criterion; exits nonzero if any fails.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serredual::algebra::Representation;
use serredual::artriangle::{ar_triangle_ending_at, verify_ar};
use serredual::complexes::{cone, decompose_complex, iso_in_d, khom, BoundedComplex, Dimension};
use serredual::fixtures::{a2, dual_numbers, radical_square_zero_two_loops};
use serredual::gorenstein::{gorenstein_check, serre_duality_status, GorensteinVerdict};
use serredual::random::{
    random_chain_map, random_complex, random_nullhomotopic, random_projective_complex, Limits,
};
use serredual::serre::{
    check_identities, check_triangle_functor, condition_c_witness, in_domain, serre_of,
    ProjComplex, SerrePairing,
};
use serredual_cli::{run, select_tasks, Settings, Workspace};

const DIMENSION_LAW_PAIRS: usize = 20;
const DIMENSION_LAW_BUDGET: Duration = Duration::from_secs(30);
const NULLHOMOTOPIC_MAPS: usize = 50;
const IDENTITY_TRIALS: usize = 100;
const TRIANGLES: usize = 10;
const THICKNESS_TRIANGLES: usize = 20;
const MEMBERSHIP_CAP: usize = 12;
const GORENSTEIN_CAP: usize = 8;
const CONDITION_C_DEPTH: i64 = 5;
const CONDITION_C_WINDOW: (i64, i64) = (-2, 2);
/// Iso checks in D^b resolve this far.
const ISO_CAP: usize = 6;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(err: serredual::Error) -> String {
    err.to_string()
}

fn p(alg: &std::sync::Arc<serredual::algebra::PathAlgebra>, v: usize) -> Representation {
    Representation::projective(alg, v).unwrap()
}

fn stalk(m: &Representation, d: i64) -> BoundedComplex {
    BoundedComplex::stalk(m, d)
}

fn a2_s1_model() -> BoundedComplex {
    let alg = a2();
    let (p1, p2) = (p(&alg, 0), p(&alg, 1));
    let f = p2.hom(&p1).unwrap().basis()[0].clone();
    BoundedComplex::two_term(&f, &p2, &p1, -1).unwrap()
}

fn dimension_law() -> Outcome {
    let alg = a2();
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let limits = Limits {
        max_terms: 3,
        max_term_dim: 4,
        degree_spread: 1,
    };
    for k in 0..DIMENSION_LAW_PAIRS {
        let x = random_projective_complex(&alg, limits, &mut rng).map_err(e)?;
        let y = random_complex(&alg, limits, &mut rng).map_err(e)?;
        let sx = serre_of(&x).map_err(e)?;
        let (l, r) = (
            khom(&x, &y).map_err(e)?.dim(),
            khom(&y, &sx).map_err(e)?.dim(),
        );
        ensure(l == r, || {
            format!("pair {k}: dim Hom(X,Y) = {l} but dim Hom(Y,SX) = {r}")
        })?;
        let sp = SerrePairing::new(&x, &y).map_err(e)?;
        ensure(
            sp.matrix.rows() == l && sp.matrix.cols() == r && sp.is_perfect(),
            || format!("pair {k}: pairing matrix is not square invertible"),
        )?;
    }
    // Hom(P_v, M) = M e_v for stalks in degree 0
    for v in 0..2 {
        for m in serredual::random::module_pool(&alg) {
            let d = khom(&stalk(&p(&alg, v), 0), &stalk(&m, 0))
                .map_err(e)?
                .dim();
            ensure(d == m.dims()[v], || {
                format!("Hom(P_{}, M) has dim {d}, expected {}", v + 1, m.dims()[v])
            })?;
        }
    }
    let took = start.elapsed();
    ensure(took < DIMENSION_LAW_BUDGET, || {
        format!("took {took:?}, budget {DIMENSION_LAW_BUDGET:?}")
    })?;
    Ok(format!(
        "{DIMENSION_LAW_PAIRS} pairs in {:.1}s",
        took.as_secs_f64()
    ))
}

fn homotopy_invariance() -> Outcome {
    let alg = a2();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let (mut done, mut nonzero, mut attempts) = (0, 0, 0);
    while done < NULLHOMOTOPIC_MAPS {
        attempts += 1;
        ensure(attempts < 20 * NULLHOMOTOPIC_MAPS, || {
            "could not generate enough maps".into()
        })?;
        let x = random_projective_complex(&alg, Limits::default(), &mut rng).map_err(e)?;
        let y = random_complex(&alg, Limits::default(), &mut rng).map_err(e)?;
        let f = random_nullhomotopic(&x, &y, &mut rng).map_err(e)?;
        if f.is_zero() {
            continue;
        }
        let px = ProjComplex::new(&x).map_err(e)?;
        for g in khom(&y, px.serre()).map_err(e)?.chainmap_basis() {
            let v = px.pairing(&f, &g).map_err(e)?;
            ensure(v == alg.field().zero(), || {
                format!("map {done}: pairing is {v}")
            })?;
        }
        done += 1;
        nonzero += 1;
    }
    Ok(format!("{nonzero} nonzero null-homotopic maps pair to 0"))
}

fn identity_suite() -> Outcome {
    let mut parts = Vec::new();
    for (name, alg) in [("A2", a2()), ("k[x]/(x^2)", dual_numbers())] {
        let r = check_identities(&alg, 3, IDENTITY_TRIALS).map_err(e)?;
        ensure(r.counts.len() == 6, || {
            format!("{name}: {} identities checked", r.counts.len())
        })?;
        for c in &r.counts {
            ensure(c.trials == IDENTITY_TRIALS && c.violations == 0, || {
                format!(
                    "{name}: {} had {} violations in {} trials",
                    c.name, c.violations, c.trials
                )
            })?;
            ensure(c.nontrivial > 0, || {
                format!("{name}: {} was only checked on zero maps", c.name)
            })?;
        }
        parts.push(format!("{name} ok"));
    }
    Ok(format!(
        "6 identities x {IDENTITY_TRIALS} trials: {}",
        parts.join(", ")
    ))
}

fn triangle_functor() -> Outcome {
    let alg = a2();
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let limits = Limits {
        max_terms: 2,
        max_term_dim: 3,
        degree_spread: 1,
    };
    let mut done = 0;
    while done < TRIANGLES {
        let x = random_projective_complex(&alg, limits, &mut rng).map_err(e)?;
        let y = random_projective_complex(&alg, limits, &mut rng).map_err(e)?;
        let u = random_chain_map(&x, &y, &mut rng).map_err(e)?;
        if u.is_zero() {
            continue;
        }
        let r = check_triangle_functor(&u).map_err(e)?;
        ensure(r.passed(), || {
            format!("triangle {done}: {}", r.failure().unwrap_or("failed"))
        })?;
        done += 1;
    }
    Ok(format!(
        "{TRIANGLES} triangles map to distinguished triangles"
    ))
}

fn ar_oracles() -> Outcome {
    let alg = a2();
    let (p1, p2) = (p(&alg, 0), p(&alg, 1));
    let i2 = Representation::injective(&alg, 1).unwrap();
    let s1 = Representation::simple(&alg, 0).unwrap();

    let t = ar_triangle_ending_at(&stalk(&p2, 0)).map_err(e)?;
    ensure(t.certificate.passed(), || "certificate at P2 failed".into())?;
    ensure(
        iso_in_d(&t.first, &stalk(&i2, 1), ISO_CAP).map_err(e)?,
        || "first term at P2 is not I2[-1]".into(),
    )?;
    let summands = decompose_complex(&t.middle, 0).map_err(e)?;
    ensure(summands.len() == 1, || {
        format!("middle term at P2 has {} summands", summands.len())
    })?;
    ensure(
        iso_in_d(&summands[0].complex, &stalk(&s1, 1), ISO_CAP).map_err(e)?,
        || "middle term at P2 is not S1[-1]".into(),
    )?;

    let model = a2_s1_model();
    let t2 = ar_triangle_ending_at(&model).map_err(e)?;
    ensure(t2.certificate.passed(), || {
        "certificate at the S1 model failed".into()
    })?;
    ensure(
        iso_in_d(&t2.first, &stalk(&p2, 0), ISO_CAP).map_err(e)?,
        || "first term at S1 is not P2".into(),
    )?;
    ensure(
        iso_in_d(&t2.middle, &stalk(&p1, 0), ISO_CAP).map_err(e)?,
        || "middle term at S1 is not P1".into(),
    )?;

    let family: Vec<BoundedComplex> = [stalk(&p1, 0), stalk(&p2, 0), model.clone()]
        .iter()
        .flat_map(|x| (-1..=1).map(move |k| x.shift(k)))
        .collect();
    for (name, tri) in [("P2", &t), ("S1 model", &t2)] {
        let v = verify_ar(tri, &family).map_err(e)?;
        ensure(v.passed(), || format!("verify_ar ending at {name} failed"))?;
    }
    Ok(format!(
        "oracles match; verify_ar passes on {} objects",
        family.len()
    ))
}

fn gorenstein_trichotomy() -> Outcome {
    let r = gorenstein_check(&dual_numbers(), GORENSTEIN_CAP);
    ensure(
        r.verdict == GorensteinVerdict::Gorenstein
            && (r.left_injdim, r.right_injdim) == (Dimension::Finite(0), Dimension::Finite(0)),
        || {
            format!(
                "k[x]/(x^2): {:?} ({}, {})",
                r.verdict, r.left_injdim, r.right_injdim
            )
        },
    )?;
    let r = gorenstein_check(&a2(), GORENSTEIN_CAP);
    let small = |d: Dimension| matches!(d, Dimension::Finite(n) if n <= 1);
    ensure(
        r.verdict == GorensteinVerdict::Gorenstein && small(r.left_injdim) && small(r.right_injdim),
        || {
            format!(
                "A2: {:?} ({}, {})",
                r.verdict, r.left_injdim, r.right_injdim
            )
        },
    )?;
    let loops = radical_square_zero_two_loops();
    let r = gorenstein_check(&loops, GORENSTEIN_CAP);
    ensure(r.verdict == GorensteinVerdict::NotGorensteinAtCap, || {
        format!("two loops: {:?}", r.verdict)
    })?;
    let (w, v) = (
        r.witness.clone().ok_or("no witness")?,
        r.witness_vertex.ok_or("no witness vertex")?,
    );
    ensure(w == serre_of(&stalk(&p(&loops, v), 0)).map_err(e)?, || {
        "witness is not S(P_v)".into()
    })?;
    ensure(!in_domain(&w, GORENSTEIN_CAP).is_member(), || {
        "witness has a finite projective resolution".into()
    })?;

    let s = serre_duality_status(&dual_numbers(), GORENSTEIN_CAP);
    ensure(s.bounded_projectives.holds() && !s.derived.holds(), || {
        "k[x]/(x^2) status is wrong".into()
    })?;
    let s = serre_duality_status(&a2(), GORENSTEIN_CAP);
    ensure(
        s.bounded_projectives.holds() && s.bounded_injectives.holds() && s.derived.holds(),
        || "A2 status is wrong".into(),
    )?;
    Ok("Gorenstein(0,0), Gorenstein(1,1), NotGorensteinAtCap with witness".into())
}

fn thickness() -> Outcome {
    let alg = dual_numbers();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let limits = Limits {
        max_terms: 3,
        max_term_dim: 3,
        degree_spread: 1,
    };
    let member = |x: &BoundedComplex| in_domain(x, MEMBERSHIP_CAP).is_member();
    let (mut members, mut rejected) = (Vec::new(), 0);
    while members.len() < 8 {
        let x = random_complex(&alg, limits, &mut rng).map_err(e)?;
        if member(&x) {
            members.push(x);
        } else {
            rejected += 1;
            ensure(rejected < 500, || "too few random members".into())?;
        }
    }
    let mut done = 0;
    let mut tries = 0;
    while done < THICKNESS_TRIANGLES {
        tries += 1;
        let (x, y) = (
            &members[tries % members.len()],
            &members[(3 * tries + 1) % members.len()],
        );
        let f = random_chain_map(x, y, &mut rng).map_err(e)?;
        let c = cone(&f).cone;
        ensure(member(&c), || {
            format!("triangle {done}: cone of a map between members is not a member")
        })?;
        done += 1;
    }
    let mut summands = 0;
    for pair in members.windows(2) {
        let sum = BoundedComplex::direct_sum(&[&pair[0], &pair[1]]).map_err(e)?;
        for s in decompose_complex(&sum, 0).map_err(e)? {
            ensure(member(&s.complex), || {
                "a summand of a member is not a member".into()
            })?;
            summands += 1;
        }
    }
    ensure(rejected > 0, || "no random non-members were seen".into())?;
    Ok(format!("{THICKNESS_TRIANGLES} cones and {summands} summands are members ({rejected} non-members skipped)"))
}

fn condition_c() -> Outcome {
    let alg = dual_numbers();
    let z = stalk(&Representation::simple(&alg, 0).unwrap(), 0);
    let pa = p(&alg, 0);
    let x_map = pa
        .hom(&pa)
        .unwrap()
        .basis()
        .iter()
        .find(|m| m.mats[0].rank() < 2)
        .cloned()
        .ok_or("no radical map")?;
    let mut family: Vec<BoundedComplex> = (CONDITION_C_WINDOW.0..=CONDITION_C_WINDOW.1)
        .map(|k| stalk(&pa, k))
        .collect();
    for lo in CONDITION_C_WINDOW.0..CONDITION_C_WINDOW.1 {
        family.push(BoundedComplex::two_term(&x_map, &pa, &pa, lo).map_err(e)?);
    }
    for x in &family {
        for xp in &family {
            let w =
                condition_c_witness(x, xp, &z, CONDITION_C_WINDOW, CONDITION_C_DEPTH).map_err(e)?;
            ensure(w.both_isos_verified(), || {
                format!("left {} right {}", w.left_iso, w.right_iso)
            })?;
        }
    }
    Ok(format!(
        "{} pairs, both maps invertible",
        family.len() * family.len()
    ))
}

fn determinism() -> Outcome {
    let mut out = Vec::new();
    for name in ["a2.json", "dual_numbers.json"] {
        let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
            .join("workspaces")
            .join(name);
        let ws = Workspace::load(&path).map_err(|err| err.to_string())?;
        let tasks = select_tasks(&ws, None).map_err(|err| err.to_string())?;
        let settings = Settings {
            cap: MEMBERSHIP_CAP,
            trials: 10,
            seed: 9,
        };
        let a = serde_json::to_string_pretty(&run(&ws, &tasks, settings).to_json()).unwrap();
        let b = serde_json::to_string_pretty(&run(&ws, &tasks, settings).to_json()).unwrap();
        ensure(a == b, || format!("{name}: reports differ"))?;
        out.push(format!("{name} {} bytes", a.len()));
    }
    Ok(format!("identical reports: {}", out.join(", ")))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("dimension law and perfect pairing", dimension_law),
        ("homotopy invariance of the pairing", homotopy_invariance),
        ("identity suite", identity_suite),
        ("triangle functor", triangle_functor),
        ("Auslander-Reiten oracles", ar_oracles),
        ("Gorenstein trichotomy", gorenstein_trichotomy),
        ("thickness", thickness),
        ("condition (C)", condition_c),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let r = check();
        let secs = start.elapsed().as_secs_f64();
        match r {
            Ok(detail) => println!("criterion {}: PASS {name} ({detail}) [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why} [{secs:.1}s]", k + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
