use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};
use serredual::algebra::Representation;
use serredual::artriangle::{ar_triangle_ending_at, verify_ar};
use serredual::complexes::{iso_in_d, khom, BoundedComplex, Dimension};
use serredual::exactla::Scalar;
use serredual::gorenstein::{
    gorenstein_check, serre_duality_status, DualityStatus, GorensteinVerdict,
};
use serredual::random::{random_chain_map, random_projective_complex, Limits};
use serredual::serre::{
    check_identities, check_triangle_functor, condition_c_witness, eta, in_domain, in_range,
    MembershipVerdict, ProjComplex, SerrePairing, Verdict,
};

use crate::workspace::Workspace;
use crate::InputError;

/// Names accepted in the `task` field.
pub const TASK_NAMES: [&str; 14] = [
    "hom",
    "khom",
    "serre",
    "pairing",
    "trace",
    "eta-check",
    "identities",
    "triangle-functor-check",
    "membership",
    "ar-triangle",
    "verify-ar",
    "gorenstein",
    "serre-status",
    "condition-c",
];

/// Run-wide parameters; task records may override `trials` and `seed`, flags override both.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub cap: usize,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub enum Side {
    Domain,
    Range,
}

/// A task with every reference resolved.
#[derive(Clone, Debug)]
pub enum Task {
    Hom {
        source: Representation,
        target: Representation,
        expect: Option<usize>,
    },
    KHom {
        source: BoundedComplex,
        target: BoundedComplex,
        expect: Option<usize>,
    },
    Serre {
        x: BoundedComplex,
    },
    Pairing {
        x: BoundedComplex,
        y: BoundedComplex,
    },
    Trace {
        x: BoundedComplex,
    },
    EtaCheck {
        x: BoundedComplex,
    },
    Identities {
        trials: Option<usize>,
        seed: Option<u64>,
    },
    TriangleFunctor {
        pair: Option<(BoundedComplex, BoundedComplex)>,
        trials: Option<usize>,
        seed: Option<u64>,
    },
    Membership {
        x: BoundedComplex,
        side: Side,
        expect: Option<bool>,
    },
    ArTriangle {
        at: BoundedComplex,
        expect_first: Option<BoundedComplex>,
        expect_middle: Option<BoundedComplex>,
    },
    VerifyAr {
        at: BoundedComplex,
        family: Option<Vec<(String, BoundedComplex)>>,
    },
    Gorenstein {
        expect: Option<GorensteinVerdict>,
    },
    SerreStatus {
        expect: Option<[bool; 3]>,
    },
    ConditionC {
        x: BoundedComplex,
        xp: BoundedComplex,
        z: BoundedComplex,
        window: (i64, i64),
        depth: i64,
    },
}

/// A resolved task with its display label.
#[derive(Clone, Debug)]
pub struct ResolvedTask {
    pub name: String,
    pub label: String,
    pub task: Task,
}

struct Args<'a> {
    task: &'a str,
    map: &'a Map<String, Value>,
    ws: &'a Workspace,
}

impl Args<'_> {
    fn err(&self, msg: impl std::fmt::Display) -> InputError {
        InputError::Validation(format!("task {}: {msg}", self.task))
    }

    fn opt_str(&self, key: &str) -> Result<Option<&str>, InputError> {
        match self.map.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s)),
            Some(_) => Err(self.err(format!("field {key:?} must be a string"))),
        }
    }

    fn str(&self, key: &str) -> Result<&str, InputError> {
        self.opt_str(key)?
            .ok_or_else(|| self.err(format!("missing field {key:?}")))
    }

    fn opt_u64(&self, key: &str) -> Result<Option<u64>, InputError> {
        match self.map.get(key) {
            None => Ok(None),
            Some(v) => v
                .as_u64()
                .map(Some)
                .ok_or_else(|| self.err(format!("field {key:?} must be a nonnegative integer"))),
        }
    }

    fn i64(&self, key: &str) -> Result<i64, InputError> {
        self.map
            .get(key)
            .and_then(Value::as_i64)
            .ok_or_else(|| self.err(format!("field {key:?} must be an integer")))
    }

    fn complex(&self, key: &str) -> Result<BoundedComplex, InputError> {
        self.ws.complex(self.str(key)?).map_err(|e| self.err(e))
    }

    fn opt_complex(&self, key: &str) -> Result<Option<BoundedComplex>, InputError> {
        self.opt_str(key)?
            .map(|r| self.ws.complex(r).map_err(|e| self.err(e)))
            .transpose()
    }

    fn projective_complex(&self, key: &str) -> Result<BoundedComplex, InputError> {
        let x = self.complex(key)?;
        if !x.is_projective_complex() {
            return Err(self.err(format!("{key:?} must be a complex of projectives")));
        }
        Ok(x)
    }

    fn module(&self, key: &str) -> Result<Representation, InputError> {
        self.ws.module(self.str(key)?).map_err(|e| self.err(e))
    }
}

impl ResolvedTask {
    pub fn resolve(ws: &Workspace, record: &Map<String, Value>) -> Result<Self, InputError> {
        let name = match record.get("task") {
            Some(Value::String(s)) => s.clone(),
            _ => {
                return Err(InputError::Validation(
                    "task record without a \"task\" name".into(),
                ))
            }
        };
        if !TASK_NAMES.contains(&name.as_str()) {
            return Err(InputError::Validation(format!("unknown task {name:?}")));
        }
        let a = Args {
            task: &name,
            map: record,
            ws,
        };
        let task = match name.as_str() {
            "hom" => Task::Hom {
                source: a.module("source")?,
                target: a.module("target")?,
                expect: a.opt_u64("expect")?.map(|n| n as usize),
            },
            "khom" => Task::KHom {
                source: a.complex("source")?,
                target: a.complex("target")?,
                expect: a.opt_u64("expect")?.map(|n| n as usize),
            },
            "serre" => Task::Serre {
                x: a.projective_complex("complex")?,
            },
            "pairing" => Task::Pairing {
                x: a.projective_complex("source")?,
                y: a.complex("target")?,
            },
            "trace" => Task::Trace {
                x: a.projective_complex("complex")?,
            },
            "eta-check" => Task::EtaCheck {
                x: a.projective_complex("complex")?,
            },
            "identities" => Task::Identities {
                trials: a.opt_u64("trials")?.map(|n| n as usize),
                seed: a.opt_u64("seed")?,
            },
            "triangle-functor-check" => {
                let pair = match (a.opt_str("source")?, a.opt_str("target")?) {
                    (None, None) => None,
                    (Some(_), Some(_)) => Some((
                        a.projective_complex("source")?,
                        a.projective_complex("target")?,
                    )),
                    _ => return Err(a.err("give both \"source\" and \"target\" or neither")),
                };
                Task::TriangleFunctor {
                    pair,
                    trials: a.opt_u64("trials")?.map(|n| n as usize),
                    seed: a.opt_u64("seed")?,
                }
            }
            "membership" => Task::Membership {
                x: a.complex("complex")?,
                side: match a.opt_str("side")?.unwrap_or("domain") {
                    "domain" => Side::Domain,
                    "range" => Side::Range,
                    other => {
                        return Err(a.err(format!(
                            "side must be \"domain\" or \"range\", not {other:?}"
                        )))
                    }
                },
                expect: match a.opt_str("expect")? {
                    None => None,
                    Some("member") => Some(true),
                    Some("non-member") => Some(false),
                    Some(other) => {
                        return Err(a.err(format!(
                            "expect must be \"member\" or \"non-member\", not {other:?}"
                        )))
                    }
                },
            },
            "ar-triangle" => Task::ArTriangle {
                at: a.projective_complex("at")?,
                expect_first: a.opt_complex("expect_first")?,
                expect_middle: a.opt_complex("expect_middle")?,
            },
            "verify-ar" => {
                let family = match record.get("family") {
                    None => None,
                    Some(Value::Array(items)) => Some(
                        items
                            .iter()
                            .map(|v| {
                                let r = v
                                    .as_str()
                                    .ok_or_else(|| a.err("family entries must be strings"))?;
                                Ok((r.to_string(), ws.complex(r).map_err(|e| a.err(e))?))
                            })
                            .collect::<Result<Vec<_>, InputError>>()?,
                    ),
                    Some(_) => return Err(a.err("family must be an array of references")),
                };
                Task::VerifyAr {
                    at: a.projective_complex("at")?,
                    family,
                }
            }
            "gorenstein" => Task::Gorenstein {
                expect: match a.opt_str("expect")? {
                    None => None,
                    Some("Gorenstein") => Some(GorensteinVerdict::Gorenstein),
                    Some("NotGorensteinAtCap") => Some(GorensteinVerdict::NotGorensteinAtCap),
                    Some("UnknownAtCap") => Some(GorensteinVerdict::UnknownAtCap),
                    Some(other) => return Err(a.err(format!("unknown verdict {other:?}"))),
                },
            },
            "serre-status" => Task::SerreStatus {
                expect: match record.get("expect") {
                    None => None,
                    Some(v) => {
                        let get = |k: &str| {
                            v.get(k)
                                .and_then(Value::as_bool)
                                .ok_or_else(|| a.err(format!("expect.{k} must be a boolean")))
                        };
                        Some([
                            get("bounded_projectives")?,
                            get("bounded_injectives")?,
                            get("derived")?,
                        ])
                    }
                },
            },
            "condition-c" => {
                let window = match record.get("window") {
                    Some(Value::Array(w)) if w.len() == 2 && w.iter().all(Value::is_i64) => (
                        w[0].as_i64().expect("checked"),
                        w[1].as_i64().expect("checked"),
                    ),
                    _ => return Err(a.err("window must be [lo, hi]")),
                };
                Task::ConditionC {
                    x: a.projective_complex("x")?,
                    xp: a.projective_complex("x_prime")?,
                    z: a.complex("z")?,
                    window,
                    depth: a.i64("depth")?,
                }
            }
            _ => unreachable!("checked against TASK_NAMES"),
        };
        let label = match record.get("label").and_then(Value::as_str) {
            Some(l) => l.to_string(),
            None => {
                let refs: Vec<String> = ["source", "target", "complex", "at", "x", "x_prime", "z"]
                    .iter()
                    .filter_map(|k| record.get(*k).and_then(Value::as_str).map(str::to_string))
                    .collect();
                if refs.is_empty() {
                    name.clone()
                } else {
                    format!("{name}({})", refs.join(", "))
                }
            }
        };
        Ok(ResolvedTask { name, label, task })
    }
}

/// Outcome of one task.
#[derive(Clone, Debug)]
pub struct TaskReport {
    pub name: String,
    pub label: String,
    pub passed: bool,
    pub result: Value,
    pub failures: Vec<String>,
    /// One-line human summary.
    pub summary: String,
}

impl TaskReport {
    pub fn to_json(&self) -> Value {
        json!({
            "task": self.name,
            "label": self.label,
            "passed": self.passed,
            "result": self.result,
            "failures": self.failures,
        })
    }
}

pub fn complex_json(x: &BoundedComplex) -> Value {
    match x.range() {
        None => json!({ "range": null, "terms": [] }),
        Some((lo, hi)) => json!({
            "range": [lo, hi],
            "terms": (lo..=hi).map(|i| json!({ "degree": i, "dims": x.term(i).dims() })).collect::<Vec<_>>(),
        }),
    }
}

fn dimension_json(d: Dimension) -> Value {
    match d {
        Dimension::Finite(n) => json!(n),
        Dimension::ExceedsCap(_) => json!(d.to_string()),
    }
}

fn scalar_json(field: serredual::exactla::Field, s: &Scalar) -> Value {
    json!(field.format(s))
}

fn membership_json(m: &MembershipVerdict) -> Value {
    match &m.verdict {
        Verdict::Member(r) => json!({ "verdict": "Member", "representative": complex_json(r) }),
        Verdict::NonMemberAtCap(c) => json!({ "verdict": "NonMemberAtCap", "cap": c }),
    }
}

fn status_json(s: &DualityStatus) -> Value {
    match s {
        DualityStatus::HasSerreDuality => json!({ "status": "HasSerreDuality" }),
        DualityStatus::FailsAtCap { witness } => {
            json!({ "status": "FailsAtCap", "witness": witness.as_ref().map(complex_json) })
        }
    }
}

struct Outcome {
    result: Value,
    failures: Vec<String>,
    summary: String,
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(
    failures: &mut Vec<String>,
    what: &str,
    got: T,
    expected: Option<T>,
) {
    if let Some(e) = expected {
        if got != e {
            failures.push(format!("{what}: expected {e:?}, got {got:?}"));
        }
    }
}

fn run_inner(ws: &Workspace, task: &Task, s: Settings) -> serredual::Result<Outcome> {
    let alg = &ws.algebra;
    let field = alg.field();
    let mut failures = Vec::new();
    let (result, summary) = match task {
        Task::Hom {
            source,
            target,
            expect,
        } => {
            let d = source.hom(target)?.dim();
            expect_eq(&mut failures, "hom dimension", d, *expect);
            (json!({ "dim": d }), format!("dim {d}"))
        }
        Task::KHom {
            source,
            target,
            expect,
        } => {
            let h = khom(source, target)?;
            expect_eq(&mut failures, "khom dimension", h.dim(), *expect);
            (
                json!({ "dim": h.dim(), "chain_maps": h.chain_dim(), "nullhomotopic": h.nullhomotopic_dim() }),
                format!(
                    "dim {} ({} chain maps, {} null-homotopic)",
                    h.dim(),
                    h.chain_dim(),
                    h.nullhomotopic_dim()
                ),
            )
        }
        Task::Serre { x } => {
            let sx = ProjComplex::new(x)?.serre().clone();
            if !sx.is_injective_complex() {
                failures.push("serre: S(X) has a non-injective term".into());
            }
            let summary = format!("S(X) has total dimension {}", sx.total_dim());
            (json!({ "serre": complex_json(&sx) }), summary)
        }
        Task::Pairing { x, y } => {
            let p = SerrePairing::new(x, y)?;
            let rank = p.matrix.rank();
            if !p.is_perfect() {
                failures.push(format!(
                    "pairing-nondegeneracy: {}x{} pairing matrix has rank {rank}",
                    p.matrix.rows(),
                    p.matrix.cols()
                ));
            }
            (
                json!({ "hom_dim": p.matrix.rows(), "dual_dim": p.matrix.cols(), "rank": rank, "perfect": p.is_perfect() }),
                format!(
                    "{}x{} pairing, rank {rank}",
                    p.matrix.rows(),
                    p.matrix.cols()
                ),
            )
        }
        Task::Trace { x } => {
            let px = ProjComplex::new(x)?;
            let h = khom(x, px.serre())?;
            let values: Vec<Scalar> = h
                .basis()
                .iter()
                .map(|u| px.trace(u))
                .collect::<serredual::Result<_>>()?;
            let nonzero = values.iter().any(|v| *v != field.zero());
            let end_dim = khom(x, x)?.dim();
            if nonzero != (end_dim > 0) {
                failures.push(format!(
                    "pairing-nondegeneracy: trace is {} but End_K(X) has dimension {end_dim}",
                    if nonzero { "nonzero" } else { "zero" }
                ));
            }
            (
                json!({ "values": values.iter().map(|v| scalar_json(field, v)).collect::<Vec<_>>() }),
                format!("trace on {} basis classes", values.len()),
            )
        }
        Task::EtaCheck { x } => match eta(x) {
            Ok(e) => {
                let signs: Vec<Value> = e
                    .signs
                    .iter()
                    .map(|(d, s)| json!({ "degree": d, "sign": s }))
                    .collect();
                let all_plus = e.signs.iter().all(|(_, s)| *s == 1);
                (
                    json!({ "signs": signs }),
                    format!("{} signs, all +1: {all_plus}", e.signs.len()),
                )
            }
            Err(serredual::Error::NoConsistentSign(m)) => {
                failures.push(format!("shift-compatibility: NoConsistentSign: {m}"));
                (json!({ "signs": null }), "no consistent sign".to_string())
            }
            Err(e) => return Err(e),
        },
        Task::Identities { trials, seed } => {
            let r = check_identities(alg, seed.unwrap_or(s.seed), trials.unwrap_or(s.trials))?;
            failures.extend(r.counterexamples.iter().cloned());
            let counts: Vec<Value> = r
                .counts
                .iter()
                .map(|c| json!({ "identity": c.name, "trials": c.trials, "nontrivial": c.nontrivial, "violations": c.violations }))
                .collect();
            let v: usize = r.counts.iter().map(|c| c.violations).sum();
            (
                json!({ "counts": counts }),
                format!("{} identities, {v} violations", r.counts.len()),
            )
        }
        Task::TriangleFunctor { pair, trials, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(s.seed));
            let n = trials.unwrap_or(s.trials);
            let limits = Limits {
                max_terms: 2,
                max_term_dim: 3,
                degree_spread: 1,
            };
            let mut passed = 0;
            for t in 0..n {
                let (x, y) = match pair {
                    Some((x, y)) => (x.clone(), y.clone()),
                    None => (
                        random_projective_complex(alg, limits, &mut rng)?,
                        random_projective_complex(alg, limits, &mut rng)?,
                    ),
                };
                let u = random_chain_map(&x, &y, &mut rng)?;
                let r = check_triangle_functor(&u)?;
                match r.failure() {
                    None => passed += 1,
                    Some(f) => failures.push(format!("triangle-functor trial {t}: {f}")),
                }
            }
            (
                json!({ "trials": n, "passed": passed }),
                format!("{passed}/{n} triangles preserved"),
            )
        }
        Task::Membership { x, side, expect } => {
            let m = match side {
                Side::Domain => in_domain(x, s.cap),
                Side::Range => in_range(x, s.cap),
            };
            expect_eq(&mut failures, "membership", m.is_member(), *expect);
            let summary = if m.is_member() {
                "member".to_string()
            } else {
                format!("non-member at cap {}", s.cap)
            };
            (membership_json(&m), summary)
        }
        Task::ArTriangle {
            at,
            expect_first,
            expect_middle,
        } => {
            let t = ar_triangle_ending_at(at)?;
            let c = &t.certificate;
            if !c.w_nonzero {
                failures.push("ar-triangle: connecting map is zero in K^b".into());
            }
            if !c.rad_annihilated {
                failures.push("ar-triangle: connecting map does not annihilate rad End(X)".into());
            }
            for sc in c.spot_checks.iter().filter(|sc| !sc.passed) {
                failures.push(format!("ar-triangle: spot check {} failed", sc.name));
            }
            for (what, got, want) in [
                ("first", &t.first, expect_first),
                ("middle", &t.middle, expect_middle),
            ] {
                if let Some(w) = want {
                    if !iso_in_d(got, w, s.cap)? {
                        failures.push(format!(
                            "ar-triangle: {what} term is not isomorphic to the expected object"
                        ));
                    }
                }
            }
            let checks: Vec<Value> = c
                .spot_checks
                .iter()
                .map(|sc| json!({ "name": sc.name, "passed": sc.passed }))
                .collect();
            (
                json!({
                    "first": complex_json(&t.first),
                    "middle": complex_json(&t.middle),
                    "third": complex_json(&t.third),
                    "certificate": { "w_nonzero": c.w_nonzero, "rad_annihilated": c.rad_annihilated, "spot_checks": checks },
                }),
                format!(
                    "first dim {}, middle dim {}",
                    t.first.total_dim(),
                    t.middle.total_dim()
                ),
            )
        }
        Task::VerifyAr { at, family } => {
            let t = ar_triangle_ending_at(at)?;
            let family = match family {
                Some(f) => f.clone(),
                None => default_family(ws, at),
            };
            let objects: Vec<BoundedComplex> = family.iter().map(|(_, x)| x.clone()).collect();
            let r = verify_ar(&t, &objects)?;
            let mut rows = Vec::new();
            for (o, (name, _)) in r.objects.iter().zip(&family) {
                if o.violations > 0 {
                    failures.push(format!(
                        "verify-ar: {} non-retractions from {name} do not annihilate w",
                        o.violations
                    ));
                }
                rows.push(json!({ "object": name, "hom_dim": o.hom_dim, "nonretractions": o.nonretraction_dim, "violations": o.violations }));
            }
            (
                json!({ "objects": rows }),
                format!("{} test objects", rows.len()),
            )
        }
        Task::Gorenstein { expect } => {
            let r = gorenstein_check(alg, s.cap);
            expect_eq(&mut failures, "gorenstein verdict", r.verdict, *expect);
            let witness_vertex = r.witness_vertex.map(|v| alg.quiver().vertices[v].clone());
            (
                json!({
                    "left_injdim": dimension_json(r.left_injdim),
                    "right_injdim": dimension_json(r.right_injdim),
                    "verdict": format!("{:?}", r.verdict),
                    "witness_vertex": witness_vertex,
                    "witness": r.witness.as_ref().map(complex_json),
                }),
                format!(
                    "{:?} (injdim left {}, right {})",
                    r.verdict, r.left_injdim, r.right_injdim
                ),
            )
        }
        Task::SerreStatus { expect } => {
            let st = serre_duality_status(alg, s.cap);
            let got = [
                st.bounded_projectives.holds(),
                st.bounded_injectives.holds(),
                st.derived.holds(),
            ];
            if got[0] != got[1] {
                failures.push("serre-status: K^b(proj) and K^b(inj) verdicts disagree".into());
            }
            expect_eq(&mut failures, "serre-status", got, *expect);
            (
                json!({
                    "bounded_projectives": status_json(&st.bounded_projectives),
                    "bounded_injectives": status_json(&st.bounded_injectives),
                    "derived": status_json(&st.derived),
                    "global_dimension": dimension_json(st.global_dimension),
                }),
                format!("K^b(proj) {}, K^b(inj) {}, D^b {}", got[0], got[1], got[2]),
            )
        }
        Task::ConditionC {
            x,
            xp,
            z,
            window,
            depth,
        } => {
            let w = condition_c_witness(x, xp, z, *window, *depth)?;
            if !w.left_iso {
                failures.push("condition-c: Hom(X, Z') -> Hom(X, Z) is not bijective".into());
            }
            if !w.right_iso {
                failures.push("condition-c: Hom(Z, X') -> Hom(Z', X') is not bijective".into());
            }
            (
                json!({ "truncated": complex_json(&w.truncated), "left_iso": w.left_iso, "right_iso": w.right_iso }),
                format!("left {}, right {}", w.left_iso, w.right_iso),
            )
        }
    };
    Ok(Outcome {
        result,
        failures,
        summary,
    })
}

/// Stalk projectives and simples of every vertex plus the object itself, shifted by -1, 0, 1.
fn default_family(ws: &Workspace, at: &BoundedComplex) -> Vec<(String, BoundedComplex)> {
    let alg = &ws.algebra;
    let mut base: Vec<(String, BoundedComplex)> = Vec::new();
    for (v, label) in alg.quiver().vertices.iter().enumerate() {
        let p = Representation::projective(alg, v).expect("vertex in range");
        let sm = Representation::simple(alg, v).expect("vertex in range");
        base.push((format!("P_{label}"), BoundedComplex::stalk(&p, 0)));
        base.push((format!("S_{label}"), BoundedComplex::stalk(&sm, 0)));
    }
    base.push(("at".to_string(), at.clone()));
    base.iter()
        .flat_map(|(n, x)| (-1..=1).map(move |k| (format!("{n}[{k}]"), x.shift(k))))
        .collect()
}

pub fn run_task(ws: &Workspace, t: &ResolvedTask, s: Settings) -> TaskReport {
    match run_inner(ws, &t.task, s) {
        Ok(o) => TaskReport {
            name: t.name.clone(),
            label: t.label.clone(),
            passed: o.failures.is_empty(),
            result: o.result,
            failures: o.failures,
            summary: o.summary,
        },
        Err(e) => TaskReport {
            name: t.name.clone(),
            label: t.label.clone(),
            passed: false,
            result: json!({ "error": format!("{e:?}") }),
            failures: vec![format!("{}: {e}", error_name(&e))],
            summary: format!("error {}", error_name(&e)),
        },
    }
}

fn error_name(e: &serredual::Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(['(', ' ']).next().unwrap_or(&dbg).to_string()
}
