use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::{ExactMatrix, Field, Scalar};

use super::endo::EndAlgebraPresentation;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        for (name, s, t) in arrows {
            let source = q.vertex(s)?;
            let target = q.vertex(t)?;
            q.arrows.push(Arrow {
                name: name.to_string(),
                source,
                target,
            });
        }
        q.validate()?;
        Ok(q)
    }

    pub fn validate(&self) -> Result<()> {
        let mut seen = std::collections::HashSet::new();
        for l in self
            .vertices
            .iter()
            .chain(self.arrows.iter().map(|a| &a.name))
        {
            if !seen.insert(l.as_str()) {
                return Err(Error::Parse(format!("duplicate label {l}")));
            }
        }
        for a in &self.arrows {
            if a.source >= self.vertices.len() || a.target >= self.vertices.len() {
                return Err(Error::UnknownVertex(a.name.clone()));
            }
        }
        Ok(())
    }

    pub fn vertex(&self, label: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == label)
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn arrow(&self, label: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == label)
            .ok_or_else(|| Error::UnknownArrow(label.to_string()))
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Parses a path written right-to-left as arrow names joined by `*`, e.g. `b*a` means
    /// "first a, then b". A bare vertex label denotes the trivial path there.
    pub fn parse_path(&self, s: &str) -> Result<Path> {
        let s = s.trim();
        if let Ok(v) = self.vertex(s) {
            return Ok(Path::trivial(v));
        }
        let mut arrows = Vec::new();
        for name in s.split('*').rev() {
            arrows.push(self.arrow(name.trim())?);
        }
        Path::from_arrows(self, arrows)
    }
}

/// A path in the quiver; `arrows[0]` is traversed first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let first = *arrows
            .first()
            .ok_or_else(|| Error::Parse("empty path".into()))?;
        let mut cur = q.arrows[first].source;
        for &a in &arrows {
            if q.arrows[a].source != cur {
                return Err(Error::Parse("arrows do not compose".into()));
            }
            cur = q.arrows[a].target;
        }
        Ok(Path {
            source: q.arrows[first].source,
            target: cur,
            arrows,
        })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`: first `other`, then `self`.
    pub fn after(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> Path {
        Path {
            source: self.target,
            target: self.source,
            arrows: self.arrows.iter().rev().copied().collect(),
        }
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .rev()
                .map(|&a| q.arrows[a].name.as_str())
                .collect::<Vec<_>>()
                .join("*")
        }
    }
}

/// A k-linear combination of parallel paths.
pub type Relation = Vec<(Scalar, Path)>;

/// Finite-dimensional quotient of a path algebra by an admissible ideal.
#[derive(Debug)]
pub struct PathAlgebra {
    quiver: Quiver,
    field: Field,
    relations: Vec<Relation>,
    length_cap: usize,
    basis: Vec<Path>,
    /// mult[i][j] = coordinates of basis[i] ∘ basis[j]
    mult: Vec<Vec<Vec<Scalar>>>,
    idempotents: Vec<usize>,
    normal_forms: HashMap<Path, Vec<Scalar>>,
    max_len: usize,
    opposite: std::sync::OnceLock<Arc<PathAlgebra>>,
}

impl PartialEq for PathAlgebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.quiver == other.quiver
                && self.field == other.field
                && self.relations == other.relations)
    }
}

impl fmt::Display for PathAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}Q/I with {} vertices, {} arrows, dim {}",
            self.field,
            self.quiver.vertices.len(),
            self.quiver.arrows.len(),
            self.dim()
        )
    }
}

fn check_admissible(q: &Quiver, rels: &[Relation]) -> Result<()> {
    for (n, r) in rels.iter().enumerate() {
        let Some((_, p0)) = r.iter().find(|(c, _)| !c.is_zero()) else {
            continue;
        };
        for (c, p) in r {
            if c.is_zero() {
                continue;
            }
            if p.len() < 2 {
                return Err(Error::NonAdmissibleRelations(format!(
                    "relation {n} contains the path {} of length {}",
                    p.display(q),
                    p.len()
                )));
            }
            if p.source != p0.source || p.target != p0.target {
                return Err(Error::NonAdmissibleRelations(format!(
                    "relation {n} mixes non-parallel paths"
                )));
            }
        }
    }
    Ok(())
}

fn paths_up_to(q: &Quiver, max_len: usize) -> Vec<Path> {
    let mut all: Vec<Path> = (0..q.num_vertices()).map(Path::trivial).collect();
    let mut frontier = all.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for p in &frontier {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

impl PathAlgebra {
    /// Builds `kQ/(relations)`; fails with `InfiniteDimensional` when paths longer than
    /// `length_cap` survive modulo the ideal.
    pub fn new(
        quiver: Quiver,
        relations: Vec<Relation>,
        field: Field,
        length_cap: usize,
    ) -> Result<Arc<Self>> {
        quiver.validate()?;
        if length_cap < 1 {
            return Err(Error::Parse("length cap must be at least 1".into()));
        }
        check_admissible(&quiver, &relations)?;
        for t in 1..=length_cap + 1 {
            if let Some(alg) = Self::attempt(&quiver, &relations, field, t, length_cap)? {
                return Ok(Arc::new(alg));
            }
        }
        Err(Error::InfiniteDimensional(length_cap + 1))
    }

    /// Works modulo paths of length > `t`; succeeds when every path of length `t` lies in
    /// the ideal there, which certifies that the arrow ideal to the power `t` is contained
    /// in the ideal.
    fn attempt(
        quiver: &Quiver,
        relations: &[Relation],
        field: Field,
        t: usize,
        cap: usize,
    ) -> Result<Option<Self>> {
        let paths = paths_up_to(quiver, t);
        // columns ordered longest first so that short paths survive as normal words
        let mut order: Vec<usize> = (0..paths.len()).collect();
        order.sort_by(|&a, &b| paths[b].len().cmp(&paths[a].len()).then(a.cmp(&b)));
        let col_of: HashMap<&Path, usize> = order
            .iter()
            .enumerate()
            .map(|(c, &i)| (&paths[i], c))
            .collect();
        let n = paths.len();

        let mut gens: Vec<Vec<Scalar>> = Vec::new();
        for r in relations {
            let Some((_, p0)) = r.iter().find(|(c, _)| !c.is_zero()) else {
                continue;
            };
            let min_len = r
                .iter()
                .filter(|(c, _)| !c.is_zero())
                .map(|(_, p)| p.len())
                .min()
                .unwrap_or(0);
            for left in paths.iter().filter(|p| p.source == p0.target) {
                for right in paths.iter().filter(|p| p.target == p0.source) {
                    if left.len() + right.len() + min_len > t {
                        continue;
                    }
                    let mut v = vec![Scalar::zero(); n];
                    let mut any = false;
                    for (c, p) in r {
                        let full = left.after(&p.after(right).unwrap()).unwrap();
                        if full.len() <= t {
                            let col = col_of[&full];
                            v[col] = field.add(&v[col], c);
                            any = true;
                        }
                    }
                    if any {
                        gens.push(v);
                    }
                }
            }
        }
        let ideal = ExactMatrix::from_rows(field, &gens);
        let ideal = if gens.is_empty() {
            ExactMatrix::zeros(field, 0, n)
        } else {
            ideal
        };
        let (rref, pivots) = ideal.rref();
        let rank = pivots.len();
        // every length-t path must lie in the ideal
        let longest: Vec<Vec<Scalar>> = paths
            .iter()
            .filter(|p| p.len() == t)
            .map(|p| {
                let mut v = vec![Scalar::zero(); n];
                v[col_of[p]] = field.one();
                v
            })
            .collect();
        if !longest.is_empty() {
            let ext = rref.vstack(&ExactMatrix::from_rows(field, &longest));
            if ext.rank() != rank {
                return Ok(None);
            }
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let mut free_pos: Vec<(usize, usize)> = free
            .iter()
            .enumerate()
            .map(|(k, &c)| (order[c], k))
            .collect();
        // basis listed in path enumeration order (vertices, then arrows, ...)
        free_pos.sort();
        let basis: Vec<Path> = free_pos.iter().map(|&(i, _)| paths[i].clone()).collect();
        let col_to_basis: HashMap<usize, usize> = free_pos
            .iter()
            .enumerate()
            .map(|(b, &(i, _))| (col_of[&paths[i]], b))
            .collect();
        let dim = basis.len();

        let mut normal_forms: HashMap<Path, Vec<Scalar>> = HashMap::new();
        for p in &paths {
            let col = col_of[p];
            let mut v = vec![Scalar::zero(); dim];
            if let Some(&b) = col_to_basis.get(&col) {
                v[b] = field.one();
            } else {
                let row = pivots.iter().position(|&pc| pc == col).unwrap();
                for (&fc, &b) in &col_to_basis {
                    let x = rref.get(row, fc);
                    if !x.is_zero() {
                        v[b] = field.neg(x);
                    }
                }
            }
            normal_forms.insert(p.clone(), v);
        }
        let idempotents: Vec<usize> = (0..quiver.num_vertices())
            .map(|v| basis.iter().position(|p| *p == Path::trivial(v)).unwrap())
            .collect();
        let mut alg = PathAlgebra {
            quiver: quiver.clone(),
            field,
            relations: relations.to_vec(),
            length_cap: cap,
            basis,
            mult: Vec::new(),
            idempotents,
            normal_forms,
            max_len: t,
            opposite: std::sync::OnceLock::new(),
        };
        alg.mult = (0..dim)
            .map(|i| {
                (0..dim)
                    .map(|j| alg.normal_form_opt(alg.basis[i].after(&alg.basis[j])))
                    .collect()
            })
            .collect();
        Ok(Some(alg))
    }

    fn normal_form_opt(&self, p: Option<Path>) -> Vec<Scalar> {
        match p {
            Some(p) => self.normal_form(&p),
            None => vec![Scalar::zero(); self.dim()],
        }
    }

    /// Coordinates of the residue class of a path in the path basis.
    pub fn normal_form(&self, p: &Path) -> Vec<Scalar> {
        if p.len() > self.max_len {
            return vec![Scalar::zero(); self.dim()];
        }
        self.normal_forms[p].clone()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn length_cap(&self) -> usize {
        self.length_cap
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    /// Basis index of the vertex idempotent `e_v`.
    pub fn idempotent(&self, v: usize) -> usize {
        self.idempotents[v]
    }

    /// Coordinates of `basis[i] ∘ basis[j]`.
    pub fn mult(&self, i: usize, j: usize) -> &[Scalar] {
        &self.mult[i][j]
    }

    /// Indices of basis paths from `s` to `t`.
    pub fn paths_between(&self, s: usize, t: usize) -> Vec<usize> {
        (0..self.dim())
            .filter(|&i| self.basis[i].source == s && self.basis[i].target == t)
            .collect()
    }

    /// The algebra as a structure-constant presentation (for associativity and radical checks).
    pub fn presentation(&self) -> EndAlgebraPresentation {
        let mut unit = vec![Scalar::zero(); self.dim()];
        for &e in &self.idempotents {
            unit[e] = self.field.one();
        }
        EndAlgebraPresentation::new(self.field, self.mult.clone(), unit)
    }

    /// Opposite algebra: all arrows reversed, relations read backwards.
    pub fn opposite(&self) -> Arc<PathAlgebra> {
        self.opposite
            .get_or_init(|| {
                let rels: Vec<Relation> = self
                    .relations
                    .iter()
                    .map(|r| r.iter().map(|(c, p)| (c.clone(), p.reversed())).collect())
                    .collect();
                PathAlgebra::new(self.quiver.opposite(), rels, self.field, self.length_cap)
                    .expect("opposite of a finite-dimensional algebra is finite-dimensional")
            })
            .clone()
    }
}

/// Reads relations written as `[(coefficient, "b*a"), ...]`.
pub fn parse_relation(q: &Quiver, field: Field, terms: &[(&str, &str)]) -> Result<Relation> {
    terms
        .iter()
        .map(|(c, p)| Ok((field.parse(c)?, q.parse_path(p)?)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    #[test]
    fn a2_has_dimension_three() {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = PathAlgebra::new(quiver, vec![], q(), 4).unwrap();
        assert_eq!(a.dim(), 3);
        let names: Vec<String> = a.basis().iter().map(|p| p.display(a.quiver())).collect();
        assert_eq!(names, vec!["e_1", "e_2", "a"]);
        assert!(a.presentation().is_associative());
    }

    #[test]
    fn truncated_loop() {
        let quiver = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        let rel = parse_relation(&quiver, q(), &[("1", "x*x")]).unwrap();
        let a = PathAlgebra::new(quiver, vec![rel], q(), 6).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn two_loops_radical_square_zero() {
        let quiver = Quiver::new(&["1"], &[("x", "1", "1"), ("y", "1", "1")]).unwrap();
        let rels = ["x*x", "x*y", "y*x", "y*y"]
            .iter()
            .map(|p| parse_relation(&quiver, q(), &[("1", p)]).unwrap())
            .collect();
        let a = PathAlgebra::new(quiver, rels, q(), 6).unwrap();
        assert_eq!(a.dim(), 3);
    }

    #[test]
    fn free_loop_is_infinite() {
        let quiver = Quiver::new(&["1"], &[("x", "1", "1")]).unwrap();
        assert_eq!(
            PathAlgebra::new(quiver, vec![], q(), 10).unwrap_err(),
            Error::InfiniteDimensional(11)
        );
    }

    #[test]
    fn commutative_square_relation() {
        // 1 -a-> 2 -b-> 4, 1 -c-> 3 -d-> 4 with b*a = d*c
        let quiver = Quiver::new(
            &["1", "2", "3", "4"],
            &[
                ("a", "1", "2"),
                ("b", "2", "4"),
                ("c", "1", "3"),
                ("d", "3", "4"),
            ],
        )
        .unwrap();
        let rel = parse_relation(&quiver, q(), &[("1", "b*a"), ("-1", "d*c")]).unwrap();
        let a = PathAlgebra::new(quiver, vec![rel], q(), 4).unwrap();
        assert_eq!(a.dim(), 4 + 4 + 1);
        assert!(a.presentation().is_associative());
    }

    #[test]
    fn rejects_short_or_mixed_relations() {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2"), ("x", "1", "1")]).unwrap();
        let short = parse_relation(&quiver, q(), &[("1", "a")]).unwrap();
        assert!(matches!(
            PathAlgebra::new(quiver.clone(), vec![short], q(), 3),
            Err(Error::NonAdmissibleRelations(_))
        ));
        let mixed = parse_relation(&quiver, q(), &[("1", "a*x"), ("1", "x*x")]).unwrap();
        assert!(matches!(
            PathAlgebra::new(quiver, vec![mixed], q(), 3),
            Err(Error::NonAdmissibleRelations(_))
        ));
    }

    #[test]
    fn opposite_reverses_arrows() {
        let quiver = Quiver::new(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = PathAlgebra::new(quiver, vec![], q(), 4).unwrap();
        let op = a.opposite();
        assert_eq!(op.quiver().arrows[0].source, 1);
        assert_eq!(*op.opposite(), *a);
    }
}
