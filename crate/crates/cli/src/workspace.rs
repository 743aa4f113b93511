//! JSON workspace files: an algebra, named modules and complexes, and a task list.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use serde::Deserialize;
use serde_json::{Map, Value};
use serredual::algebra::{parse_relation, PathAlgebra, Quiver, RepMap, Representation};
use serredual::complexes::BoundedComplex;
use serredual::exactla::{ExactMatrix, Field, Scalar};

use crate::InputError;

/// Matrices are arrays of rows of exact scalars written as strings ("3/2", "-1").
type RawMatrix = Vec<Vec<String>>;

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawField {
    Named(String),
    Prime { prime: u64 },
}

#[derive(Debug, Deserialize)]
struct RawArrow {
    name: String,
    source: String,
    target: String,
}

#[derive(Debug, Deserialize)]
struct RawQuiver {
    vertices: Vec<String>,
    #[serde(default)]
    arrows: Vec<RawArrow>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawModule {
    Keyword(String),
    Explicit {
        dims: BTreeMap<String, usize>,
        #[serde(default)]
        action: BTreeMap<String, RawMatrix>,
    },
}

#[derive(Debug, Deserialize)]
struct RawTerm {
    degree: i64,
    module: String,
}

#[derive(Debug, Deserialize)]
struct RawDifferential {
    degree: i64,
    /// One matrix per vertex label; omitted vertices get zero matrices.
    #[serde(default)]
    matrices: BTreeMap<String, RawMatrix>,
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum RawComplex {
    Stalk {
        stalk: String,
        #[serde(default)]
        degree: i64,
    },
    Explicit {
        terms: Vec<RawTerm>,
        #[serde(default)]
        differentials: Vec<RawDifferential>,
    },
}

#[derive(Debug, Deserialize)]
struct RawWorkspace {
    schema: u32,
    field: RawField,
    quiver: RawQuiver,
    #[serde(default)]
    relations: Vec<Vec<(String, String)>>,
    #[serde(default = "default_length_cap")]
    length_cap: usize,
    #[serde(default)]
    modules: BTreeMap<String, RawModule>,
    #[serde(default)]
    complexes: BTreeMap<String, RawComplex>,
    #[serde(default)]
    tasks: Vec<Map<String, Value>>,
}

fn default_length_cap() -> usize {
    8
}

/// A loaded and validated workspace.
#[derive(Debug)]
pub struct Workspace {
    pub algebra: Arc<PathAlgebra>,
    pub modules: BTreeMap<String, Representation>,
    pub complexes: BTreeMap<String, BoundedComplex>,
    /// Task records as written; resolved against the workspace by [`crate::tasks::Task::resolve`].
    pub tasks: Vec<Map<String, Value>>,
}

fn invalid(msg: impl Into<String>) -> InputError {
    InputError::Validation(msg.into())
}

fn parse_matrix(
    field: Field,
    raw: &RawMatrix,
    rows: usize,
    cols: usize,
    what: &str,
) -> Result<ExactMatrix, InputError> {
    if raw.is_empty() && (rows == 0 || cols == 0) {
        return Ok(ExactMatrix::zeros(field, rows, cols));
    }
    if raw.len() != rows || raw.iter().any(|r| r.len() != cols) {
        return Err(invalid(format!("{what}: expected a {rows}x{cols} matrix")));
    }
    let rows: Vec<Vec<Scalar>> = raw
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| field.parse(s))
                .collect::<serredual::Result<_>>()
        })
        .collect::<serredual::Result<_>>()
        .map_err(|e| invalid(format!("{what}: {e}")))?;
    Ok(ExactMatrix::from_rows(field, &rows))
}

impl Workspace {
    pub fn load(path: &Path) -> Result<Self, InputError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| InputError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, InputError> {
        let raw: RawWorkspace = serde_json::from_str(text).map_err(|e| InputError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        if raw.schema != 1 {
            return Err(invalid(format!(
                "unsupported schema version {}",
                raw.schema
            )));
        }
        let field = match &raw.field {
            RawField::Named(s) if s == "Q" => Field::Rationals,
            RawField::Named(s) => {
                return Err(invalid(format!(
                    "unknown field {s:?}; use \"Q\" or {{\"prime\": p}}"
                )))
            }
            RawField::Prime { prime } => {
                Field::prime(*prime).map_err(|e| invalid(format!("field: {e}")))?
            }
        };
        let vertices: Vec<&str> = raw.quiver.vertices.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> = raw
            .quiver
            .arrows
            .iter()
            .map(|a| (a.name.as_str(), a.source.as_str(), a.target.as_str()))
            .collect();
        let quiver =
            Quiver::new(&vertices, &arrows).map_err(|e| invalid(format!("quiver: {e}")))?;
        let relations = raw
            .relations
            .iter()
            .enumerate()
            .map(|(k, r)| {
                let terms: Vec<(&str, &str)> =
                    r.iter().map(|(c, p)| (c.as_str(), p.as_str())).collect();
                parse_relation(&quiver, field, &terms)
                    .map_err(|e| invalid(format!("relation {k}: {e}")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let algebra = PathAlgebra::new(quiver, relations, field, raw.length_cap)
            .map_err(|e| invalid(format!("algebra: {e}")))?;

        let mut modules = BTreeMap::new();
        for (name, m) in &raw.modules {
            let rep =
                build_module(&algebra, m).map_err(|e| invalid(format!("module {name}: {e}")))?;
            modules.insert(name.clone(), rep);
        }
        let mut ws = Workspace {
            algebra,
            modules,
            complexes: BTreeMap::new(),
            tasks: raw.tasks,
        };
        for (name, c) in &raw.complexes {
            let x = ws
                .build_complex(c)
                .map_err(|e| invalid(format!("complex {name}: {e}")))?;
            ws.complexes.insert(name.clone(), x);
        }
        Ok(ws)
    }

    /// A module by workspace name or keyword (`A`, `P_v`, `I_v`, `S_v`, also without `_`).
    pub fn module(&self, name: &str) -> Result<Representation, String> {
        if let Some(m) = self.modules.get(name) {
            return Ok(m.clone());
        }
        keyword_module(&self.algebra, name)
    }

    /// A complex by reference: a complex or module name (modules become stalks in degree 0),
    /// optionally followed by a shift such as `X[-1]`.
    pub fn complex(&self, reference: &str) -> Result<BoundedComplex, String> {
        let reference = reference.trim();
        let (name, shift) = match reference.strip_suffix(']').and_then(|s| s.rsplit_once('[')) {
            Some((n, k)) => (
                n,
                k.trim()
                    .parse::<i64>()
                    .map_err(|_| format!("bad shift in {reference:?}"))?,
            ),
            None => (reference, 0),
        };
        let base = match self.complexes.get(name) {
            Some(x) => x.clone(),
            None => BoundedComplex::stalk(
                &self
                    .module(name)
                    .map_err(|_| format!("undefined complex or module {name:?}"))?,
                0,
            ),
        };
        Ok(base.shift(shift))
    }

    fn build_complex(&self, raw: &RawComplex) -> Result<BoundedComplex, String> {
        match raw {
            RawComplex::Stalk { stalk, degree } => {
                Ok(BoundedComplex::stalk(&self.module(stalk)?, *degree))
            }
            RawComplex::Explicit {
                terms,
                differentials,
            } => {
                if terms.is_empty() {
                    return Ok(BoundedComplex::zero(&self.algebra));
                }
                let mut by_degree = BTreeMap::new();
                for t in terms {
                    if by_degree
                        .insert(t.degree, self.module(&t.module)?)
                        .is_some()
                    {
                        return Err(format!("two terms in degree {}", t.degree));
                    }
                }
                let lo = *by_degree.keys().next().expect("nonempty");
                let hi = *by_degree.keys().last().expect("nonempty");
                let zero = Representation::zero(&self.algebra);
                let term = |i: i64| by_degree.get(&i).cloned().unwrap_or_else(|| zero.clone());
                let mut diffs: BTreeMap<i64, RepMap> = BTreeMap::new();
                for d in differentials {
                    if d.degree < lo || d.degree >= hi {
                        return Err(format!(
                            "differential in degree {} leaves the support",
                            d.degree
                        ));
                    }
                    let (src, tgt) = (term(d.degree), term(d.degree + 1));
                    let field = self.algebra.field();
                    let mut mats = Vec::new();
                    for (v, label) in self.algebra.quiver().vertices.iter().enumerate() {
                        let (r, c) = (tgt.dims()[v], src.dims()[v]);
                        let m = match d.matrices.get(label) {
                            Some(raw) => parse_matrix(
                                field,
                                raw,
                                r,
                                c,
                                &format!("differential {} at vertex {label}", d.degree),
                            )
                            .map_err(|e| e.to_string())?,
                            None => ExactMatrix::zeros(field, r, c),
                        };
                        mats.push(m);
                    }
                    for label in d.matrices.keys() {
                        self.algebra
                            .quiver()
                            .vertex(label)
                            .map_err(|e| e.to_string())?;
                    }
                    diffs.insert(d.degree, RepMap { mats });
                }
                let terms: Vec<Representation> = (lo..=hi).map(term).collect();
                let diffs: Vec<RepMap> = (lo..hi)
                    .map(|i| {
                        diffs
                            .remove(&i)
                            .unwrap_or_else(|| RepMap::zero(&term(i), &term(i + 1)))
                    })
                    .collect();
                BoundedComplex::new(&self.algebra, lo, terms, diffs).map_err(|e| e.to_string())
            }
        }
    }
}

fn keyword_module(alg: &Arc<PathAlgebra>, name: &str) -> Result<Representation, String> {
    if name == "A" {
        return Ok(Representation::regular(alg));
    }
    let mut chars = name.chars();
    let kind = chars
        .next()
        .ok_or_else(|| "empty module name".to_string())?;
    let rest = chars.as_str();
    let label = rest.strip_prefix('_').unwrap_or(rest);
    let undefined = || format!("undefined module {name:?}");
    if label.is_empty() || !matches!(kind, 'P' | 'I' | 'S') {
        return Err(undefined());
    }
    let v = alg.quiver().vertex(label).map_err(|_| undefined())?;
    let m = match kind {
        'P' => Representation::projective(alg, v),
        'I' => Representation::injective(alg, v),
        _ => Representation::simple(alg, v),
    };
    m.map_err(|e| e.to_string())
}

fn build_module(alg: &Arc<PathAlgebra>, raw: &RawModule) -> Result<Representation, String> {
    match raw {
        RawModule::Keyword(k) => keyword_module(alg, k),
        RawModule::Explicit { dims, action } => {
            let q = alg.quiver();
            let mut d = vec![0; q.num_vertices()];
            for (label, &n) in dims {
                d[q.vertex(label).map_err(|e| e.to_string())?] = n;
            }
            for name in action.keys() {
                q.arrow(name).map_err(|e| e.to_string())?;
            }
            let mats = q
                .arrows
                .iter()
                .map(|a| {
                    let (r, c) = (d[a.target], d[a.source]);
                    match action.get(&a.name) {
                        Some(m) => parse_matrix(alg.field(), m, r, c, &format!("arrow {}", a.name))
                            .map_err(|e| e.to_string()),
                        None => Ok(ExactMatrix::zeros(alg.field(), r, c)),
                    }
                })
                .collect::<Result<Vec<_>, _>>()?;
            Representation::new(alg.clone(), d, mats).map_err(|e| e.to_string())
        }
    }
}
