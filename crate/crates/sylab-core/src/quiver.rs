//! Quivers, paths, relations, and algebra presentations.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use thiserror::Error;

use crate::field::PrimeField;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("quiver needs at least one vertex")]
    NoVertices,
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("arrow `{arrow}` references unknown vertex `{vertex}`")]
    UnknownVertex { arrow: String, vertex: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver with labeled vertices and named arrows. Vertices and
/// arrows are indexed in declaration order; the indices are what the rest of
/// the crate works with.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>, // (name, from, to)
    ) -> Result<Self, QuiverError> {
        if vertices.is_empty() {
            return Err(QuiverError::NoVertices);
        }
        let mut vertex_index = BTreeMap::new();
        for (i, v) in vertices.iter().enumerate() {
            if vertex_index.insert(v.clone(), i).is_some() {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let mut seen = BTreeMap::new();
        let mut out = Vec::with_capacity(arrows.len());
        for (i, (name, from, to)) in arrows.into_iter().enumerate() {
            if seen.insert(name.clone(), i).is_some() {
                return Err(QuiverError::DuplicateArrow(name));
            }
            let source = *vertex_index
                .get(&from)
                .ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: name.clone(),
                    vertex: from.clone(),
                })?;
            let target = *vertex_index
                .get(&to)
                .ok_or_else(|| QuiverError::UnknownVertex {
                    arrow: name.clone(),
                    vertex: to.clone(),
                })?;
            out.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(Quiver {
            vertices,
            arrows: out,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_label(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
    }

    /// Same vertices, every arrow reversed (names and order preserved).
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
}

/// A path in a quiver: a source vertex plus a sequence of composable arrow
/// indices. Composition reads left to right; `[a, b]` means "first a, then
/// b" and requires `target(a) = source(b)`. The trivial path at a vertex has
/// an empty arrow list.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn target(&self, quiver: &Quiver) -> usize {
        self.arrows
            .last()
            .map_or(self.source, |&a| quiver.arrow(a).target)
    }

    /// Concatenation `self * rhs`; the caller must ensure composability.
    pub fn compose(&self, rhs: &Path, quiver: &Quiver) -> Path {
        debug_assert_eq!(self.target(quiver), rhs.source);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&rhs.arrows);
        Path {
            source: self.source,
            arrows,
        }
    }

    /// The sort key used everywhere a path order matters: length, then
    /// source vertex, then the arrow index sequence lexicographically.
    pub fn order_key(&self) -> (usize, usize, &[usize]) {
        (self.len(), self.source, &self.arrows)
    }

    pub fn reversed(&self, quiver: &Quiver) -> Path {
        let source = self.target(quiver);
        let arrows = self.arrows.iter().rev().copied().collect();
        Path { source, arrows }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RelationError {
    #[error("relation has no terms with nonzero coefficient")]
    Empty,
    #[error("relation path uses unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("relation path `{0:?}` is not composable")]
    NotComposable(Vec<String>),
    #[error("relation paths are not parallel")]
    NotParallel,
    #[error("relation path of length {0} violates admissibility (need length >= 2)")]
    TooShort(usize),
}

/// One generator of the relation ideal: a linear combination of parallel
/// paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(u32, Path)>,
    source: usize,
    target: usize,
}

impl Relation {
    /// Builds a relation from `(coefficient, arrow-name path)` terms.
    /// Coefficients are reduced mod p; zero terms are dropped.
    pub fn new(
        field: PrimeField,
        quiver: &Quiver,
        terms: &[(i64, &[&str])],
    ) -> Result<Self, RelationError> {
        let mut resolved = Vec::new();
        for (coef, names) in terms {
            let c = field.reduce_i64(*coef);
            let path = resolve_path(quiver, names)?;
            if c != 0 {
                resolved.push((c, path));
            }
        }
        Self::from_paths(quiver, resolved)
    }

    pub fn from_paths(quiver: &Quiver, terms: Vec<(u32, Path)>) -> Result<Self, RelationError> {
        if terms.is_empty() {
            return Err(RelationError::Empty);
        }
        let source = terms[0].1.source;
        let target = terms[0].1.target(quiver);
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(RelationError::TooShort(p.len()));
            }
            if p.source != source || p.target(quiver) != target {
                return Err(RelationError::NotParallel);
            }
        }
        Ok(Relation {
            terms,
            source,
            target,
        })
    }

    pub fn terms(&self) -> &[(u32, Path)] {
        &self.terms
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    /// The relation with every path reversed, for the opposite algebra.
    pub fn reversed(&self, quiver: &Quiver) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (*c, p.reversed(quiver)))
                .collect(),
            source: self.target,
            target: self.source,
        }
    }
}

fn resolve_path(quiver: &Quiver, names: &[&str]) -> Result<Path, RelationError> {
    let mut arrows = Vec::with_capacity(names.len());
    for name in names {
        let idx = quiver
            .arrow_index(name)
            .ok_or_else(|| RelationError::UnknownArrow(String::from(*name)))?;
        arrows.push(idx);
    }
    for w in arrows.windows(2) {
        if quiver.arrow(w[0]).target != quiver.arrow(w[1]).source {
            return Err(RelationError::NotComposable(
                names.iter().map(|s| String::from(*s)).collect(),
            ));
        }
    }
    let source = arrows
        .first()
        .map(|&a| quiver.arrow(a).source)
        .unwrap_or(0);
    Ok(Path { source, arrows })
}

/// Input presentation of a bound quiver algebra `kQ/(I + J^m)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub field: PrimeField,
    pub quiver: Quiver,
    pub relations: Vec<Relation>,
    /// Nilpotency bound m >= 2: all paths of length >= m vanish.
    pub nilpotency_bound: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    fn labels(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn a2_quiver() -> Quiver {
        Quiver::new(
            labels(&["1", "2"]),
            vec![("a".to_string(), "1".to_string(), "2".to_string())],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_quivers() {
        assert_eq!(Quiver::new(vec![], vec![]), Err(QuiverError::NoVertices));
        assert!(matches!(
            Quiver::new(labels(&["1", "1"]), vec![]),
            Err(QuiverError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Quiver::new(
                labels(&["1"]),
                vec![("a".to_string(), "1".to_string(), "2".to_string())]
            ),
            Err(QuiverError::UnknownVertex { .. })
        ));
    }

    #[test]
    fn path_composition_and_target() {
        let q = Quiver::new(
            labels(&["1", "2", "3"]),
            vec![
                ("a".to_string(), "1".to_string(), "2".to_string()),
                ("b".to_string(), "2".to_string(), "3".to_string()),
            ],
        )
        .unwrap();
        let a = Path {
            source: 0,
            arrows: vec![0],
        };
        let b = Path {
            source: 1,
            arrows: vec![1],
        };
        let ab = a.compose(&b, &q);
        assert_eq!(ab.target(&q), 2);
        assert_eq!(ab.reversed(&q).source, 2);
        assert_eq!(ab.reversed(&q).arrows, vec![1, 0]);
    }

    #[test]
    fn relation_validation() {
        let q = a2_quiver();
        let f2 = PrimeField::new(2).unwrap();
        // length-1 path is inadmissible
        assert_eq!(
            Relation::new(f2, &q, &[(1, &["a"])]),
            Err(RelationError::TooShort(1))
        );
        // unknown arrow
        assert!(matches!(
            Relation::new(f2, &q, &[(1, &["z", "z"])]),
            Err(RelationError::UnknownArrow(_))
        ));
        // non-composable path
        assert!(matches!(
            Relation::new(f2, &q, &[(1, &["a", "a"])]),
            Err(RelationError::NotComposable(_))
        ));
        // all-zero coefficients collapse to empty
        let loop_q = Quiver::new(
            labels(&["1"]),
            vec![("a".to_string(), "1".to_string(), "1".to_string())],
        )
        .unwrap();
        assert_eq!(
            Relation::new(f2, &loop_q, &[(2, &["a", "a"])]),
            Err(RelationError::Empty)
        );
    }

    #[test]
    fn opposite_is_involution_on_quivers() {
        let q = a2_quiver();
        assert_eq!(q.opposite().opposite(), q);
        assert_eq!(q.opposite().arrow(0).source, 1);
    }
}
