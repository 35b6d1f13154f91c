//! Finite-dimensional bound quiver algebras `kQ/(I + J^m)`.
//!
//! The constructor enumerates all paths of length below the nilpotency
//! bound, row-reduces the relation ideal's image in that span, and keeps the
//! non-pivot paths as a normal-form basis. Paths of length at least `m`
//! vanish by fiat, which makes ideal membership a finite linear-algebra
//! problem rather than a Groebner computation: every admissible ideal
//! contains some power of the arrow ideal, so every algebra of this shape is
//! reachable.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::field::PrimeField;
use crate::matrix::FMatrix;
use crate::quiver::{AlgebraSpec, Path, Quiver};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("nilpotency bound must be at least 2, got {0}")]
    BoundTooSmall(usize),
}

/// A bound quiver algebra with a chosen normal-form path basis and a
/// tabulated multiplication.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FDAlgebra {
    spec: AlgebraSpec,
    /// Normal-form paths in (length, source, arrows) order. The trivial
    /// paths come first and are always present.
    basis: Vec<Path>,
    basis_source: Vec<usize>,
    basis_target: Vec<usize>,
    /// `table[i * dim + j]`: the product `basis[i] * basis[j]` as a sparse
    /// combination of basis elements.
    table: Vec<Vec<(usize, u32)>>,
}

impl FDAlgebra {
    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.spec.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.spec.quiver
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    pub fn basis_path(&self, i: usize) -> &Path {
        &self.basis[i]
    }

    pub fn basis_source(&self, i: usize) -> usize {
        self.basis_source[i]
    }

    pub fn basis_target(&self, i: usize) -> usize {
        self.basis_target[i]
    }

    /// Index of the trivial path at a vertex within the basis.
    pub fn trivial_index(&self, v: usize) -> usize {
        // Trivial paths sort first, ordered by vertex.
        debug_assert!(self.basis[v].is_trivial() && self.basis[v].source == v);
        v
    }

    /// The product `basis[i] * basis[j]` as a sparse combination.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, u32)] {
        &self.table[i * self.basis.len() + j]
    }

    /// Bilinear product of two coefficient vectors indexed by the basis.
    pub fn multiply(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        assert_eq!(x.len(), self.dimension(), "coefficient vector length");
        assert_eq!(y.len(), self.dimension(), "coefficient vector length");
        let f = self.field();
        let mut out = vec![0u32; self.dimension()];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let c = f.mul(xi, yj);
                for &(k, v) in self.basis_product(i, j) {
                    out[k] = f.add(out[k], f.mul(c, v));
                }
            }
        }
        out
    }

    /// The multiplicative unit: the sum of all trivial paths.
    pub fn unit_vector(&self) -> Vec<u32> {
        let mut v = vec![0u32; self.dimension()];
        for i in 0..self.quiver().vertex_count() {
            v[self.trivial_index(i)] = 1;
        }
        v
    }

    /// Basis indices of the paths starting at `v`, in basis order.
    pub fn basis_from(&self, v: usize) -> Vec<usize> {
        (0..self.dimension())
            .filter(|&i| self.basis_source[i] == v)
            .collect()
    }

    pub fn describe(&self) -> String {
        format!(
            "dim {} algebra over F_{} on {} vertices / {} arrows (bound {})",
            self.dimension(),
            self.field().modulus(),
            self.quiver().vertex_count(),
            self.quiver().arrow_count(),
            self.spec.nilpotency_bound,
        )
    }
}

/// Enumerates every path of length `< bound`, sorted by the canonical
/// (length, source, arrows) order.
fn enumerate_paths(quiver: &Quiver, bound: usize) -> Vec<Path> {
    let mut all = Vec::new();
    let mut frontier: Vec<Path> = (0..quiver.vertex_count()).map(Path::trivial).collect();
    let mut len = 0;
    while !frontier.is_empty() && len < bound {
        all.extend(frontier.iter().cloned());
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.target(quiver);
            for (ai, _) in quiver.arrows_from(end) {
                let mut arrows = p.arrows.clone();
                arrows.push(ai);
                next.push(Path {
                    source: p.source,
                    arrows,
                });
            }
        }
        frontier = next;
        len += 1;
    }
    all.sort_by(|a, b| {
        (a.len(), a.source, &a.arrows).cmp(&(b.len(), b.source, &b.arrows))
    });
    all
}

/// Builds the quotient algebra from a presentation.
pub fn build_algebra(spec: AlgebraSpec) -> Result<FDAlgebra, AlgebraError> {
    let m = spec.nilpotency_bound;
    if m < 2 {
        return Err(AlgebraError::BoundTooSmall(m));
    }
    let quiver = &spec.quiver;
    let field = spec.field;
    let paths = enumerate_paths(quiver, m);
    let npaths = paths.len();
    let path_index: BTreeMap<&Path, usize> = paths.iter().zip(0..).collect();

    // The ideal's image in the span of short paths: every product
    // u * relation * v, with terms of length >= m dropped. Coordinates are
    // reversed so that standard row reduction pivots on the largest path.
    let rev = |i: usize| npaths - 1 - i;
    let mut rows: Vec<Vec<u32>> = Vec::new();
    for rel in &spec.relations {
        for left in &paths {
            if left.target(quiver) != rel.source() {
                continue;
            }
            for right in &paths {
                if right.source != rel.target() {
                    continue;
                }
                let mut row = vec![0u32; npaths];
                let mut nonzero = false;
                for (c, p) in rel.terms() {
                    let total = left.len() + p.len() + right.len();
                    if total >= m {
                        continue; // truncated: the path is already zero
                    }
                    let full = left.compose(p, quiver).compose(right, quiver);
                    let idx = *path_index.get(&full).expect("path within bound");
                    row[rev(idx)] = field.add(row[rev(idx)], *c);
                    nonzero = true;
                }
                if nonzero && row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }

    let (pivot_rows, pivot_cols) = if rows.is_empty() {
        (FMatrix::zeros(field, 0, npaths), Vec::new())
    } else {
        let flat: Vec<&[u32]> = rows.iter().map(|r| r.as_slice()).collect();
        let mut mat = FMatrix::from_fn(field, flat.len(), npaths, |i, j| flat[i][j]);
        let pivots = mat.rref_in_place();
        (mat, pivots)
    };

    // Non-pivot paths form the basis; each pivot path rewrites into strictly
    // smaller basis paths via its reduced row.
    let pivot_set: BTreeMap<usize, usize> = pivot_cols
        .iter()
        .enumerate()
        .map(|(r, &c)| (rev(c), r))
        .collect();
    let basis: Vec<Path> = (0..npaths)
        .filter(|i| !pivot_set.contains_key(i))
        .map(|i| paths[i].clone())
        .collect();
    let basis_lookup: BTreeMap<&Path, usize> = basis.iter().zip(0..).collect();
    let basis_source: Vec<usize> = basis.iter().map(|p| p.source).collect();
    let basis_target: Vec<usize> = basis.iter().map(|p| p.target(quiver)).collect();

    // Normal form of an arbitrary short path.
    let normal_form = |p: &Path| -> Vec<(usize, u32)> {
        let idx = *path_index.get(p).expect("path within bound");
        if let Some(&row) = pivot_set.get(&idx) {
            let mut combo = Vec::new();
            for j in 0..npaths {
                let c = pivot_rows.get(row, rev(j));
                if c != 0 && j != idx {
                    // pivot path = -sum of the other entries
                    let b = *basis_lookup.get(&paths[j]).expect("non-pivot entry");
                    combo.push((b, field.neg(c)));
                }
            }
            combo.sort_unstable_by_key(|&(b, _)| b);
            combo
        } else {
            vec![(*basis_lookup.get(p).expect("basis path"), 1)]
        }
    };

    let dim = basis.len();
    let mut table = vec![Vec::new(); dim * dim];
    for i in 0..dim {
        for j in 0..dim {
            if basis_target[i] != basis_source[j] {
                continue;
            }
            if basis[i].len() + basis[j].len() >= m {
                continue;
            }
            let prod = basis[i].compose(&basis[j], quiver);
            table[i * dim + j] = normal_form(&prod);
        }
    }

    Ok(FDAlgebra {
        spec,
        basis,
        basis_source,
        basis_target,
        table,
    })
}

/// The same algebra with all arrows reversed: vertices, arrow names, field
/// and bound preserved; relation paths reversed.
pub fn opposite_algebra(a: &FDAlgebra) -> FDAlgebra {
    let quiver = a.spec.quiver.opposite();
    let relations = a
        .spec
        .relations
        .iter()
        .map(|r| r.reversed(&a.spec.quiver))
        .collect();
    build_algebra(AlgebraSpec {
        field: a.spec.field,
        quiver,
        relations,
        nilpotency_bound: a.spec.nilpotency_bound,
    })
    .expect("opposite of a valid presentation is valid")
}

/// The running example: a linear quiver `1 -> 2 -> ... -> n` with a loop at
/// the last vertex, all length-two paths killed.
pub fn paper_example_algebra(n: usize, field: PrimeField) -> FDAlgebra {
    assert!(n >= 2, "the example quiver needs at least two vertices");
    let vertices: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
    let mut arrows = Vec::new();
    for i in 1..n {
        arrows.push((format!("a{i}"), format!("{i}"), format!("{}", i + 1)));
    }
    arrows.push((String::from("b"), format!("{n}"), format!("{n}")));
    let quiver = Quiver::new(vertices, arrows).expect("valid fixture quiver");
    build_algebra(AlgebraSpec {
        field,
        quiver,
        relations: vec![],
        nilpotency_bound: 2,
    })
    .expect("valid fixture presentation")
}

/// Cyclic Nakayama algebra: cyclic quiver on `n` vertices with `J^m = 0`.
/// Self-injective for every `n >= 1`, `m >= 2`.
pub fn nakayama_cyclic_algebra(n: usize, m: usize, field: PrimeField) -> FDAlgebra {
    assert!(n >= 1 && m >= 2);
    let vertices: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
    let arrows = (1..=n)
        .map(|i| {
            let j = if i == n { 1 } else { i + 1 };
            (format!("a{i}"), format!("{i}"), format!("{j}"))
        })
        .collect();
    let quiver = Quiver::new(vertices, arrows).expect("valid fixture quiver");
    build_algebra(AlgebraSpec {
        field,
        quiver,
        relations: vec![],
        nilpotency_bound: m,
    })
    .expect("valid fixture presentation")
}

/// `k[x]/(x^m)` presented as a one-vertex quiver with a loop.
pub fn loop_algebra(m: usize, field: PrimeField) -> FDAlgebra {
    nakayama_cyclic_algebra(1, m, field)
}

/// The path algebra of the linear `A_n` quiver `1 -> 2 -> ... -> n`
/// (hereditary: no relations, and the bound `m = n` is vacuous).
pub fn linear_path_algebra(n: usize, field: PrimeField) -> FDAlgebra {
    assert!(n >= 2);
    let vertices: Vec<String> = (1..=n).map(|i| format!("{i}")).collect();
    let arrows = (1..n)
        .map(|i| (format!("a{i}"), format!("{i}"), format!("{}", i + 1)))
        .collect();
    let quiver = Quiver::new(vertices, arrows).expect("valid fixture quiver");
    build_algebra(AlgebraSpec {
        field,
        quiver,
        relations: vec![],
        nilpotency_bound: n.max(2),
    })
    .expect("valid fixture presentation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Relation;
    use alloc::string::ToString;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Oracle: count paths of length < bound by brute-force walk
    /// enumeration, independently of `enumerate_paths`.
    fn brute_force_path_count(quiver: &Quiver, bound: usize) -> usize {
        fn extend(quiver: &Quiver, at: usize, remaining: usize) -> usize {
            if remaining == 0 {
                return 1;
            }
            let mut total = 1; // stopping here
            for (_, arrow) in quiver.arrows_from(at) {
                total += extend(quiver, arrow.target, remaining - 1);
            }
            total
        }
        (0..quiver.vertex_count())
            .map(|v| extend(quiver, v, bound - 1))
            .sum()
    }

    #[test]
    fn loop_algebra_is_dual_numbers() {
        let a = loop_algebra(2, f(2));
        assert_eq!(a.dimension(), 2);
        // basis {e, x} with x * x = 0
        let e = a.trivial_index(0);
        assert_eq!(a.basis_product(1, 1), &[]);
        assert_eq!(a.basis_product(e, 1), &[(1, 1)]);
    }

    #[test]
    fn paper_example_dimensions() {
        // n trivial paths + (n-1) arrows + the loop
        for n in 2..=6 {
            let a = paper_example_algebra(n, f(2));
            assert_eq!(a.dimension(), 2 * n);
            let oracle = brute_force_path_count(a.quiver(), 2);
            assert_eq!(a.dimension(), oracle);
        }
        let a3 = paper_example_algebra(3, f(2));
        assert_eq!(a3.dimension(), 6);
    }

    #[test]
    fn paper_example_kills_length_two_paths() {
        let a = paper_example_algebra(2, f(2));
        assert_eq!(a.dimension(), 4); // e1, e2, a1, b
        let b_idx = a
            .basis()
            .iter()
            .position(|p| p.len() == 1 && p.source == 1)
            .unwrap();
        assert_eq!(a.basis_product(b_idx, b_idx), &[]); // b * b = 0

        let a3 = paper_example_algebra(3, f(2));
        let a1 = a3.basis().iter().position(|p| p.len() == 1 && p.source == 0).unwrap();
        let a2 = a3.basis().iter().position(|p| p.len() == 1 && p.source == 1).unwrap();
        assert_eq!(a3.basis_product(a1, a2), &[]); // a1 * a2 = 0 in kQ/J^2
    }

    #[test]
    fn a2_path_algebra() {
        let a = linear_path_algebra(2, f(3));
        assert_eq!(a.dimension(), 3); // e1, e2, a
    }

    #[test]
    fn nakayama_dimensions() {
        assert_eq!(nakayama_cyclic_algebra(1, 2, f(2)).dimension(), 2);
        assert_eq!(nakayama_cyclic_algebra(2, 2, f(2)).dimension(), 4);
        assert_eq!(nakayama_cyclic_algebra(3, 4, f(2)).dimension(), 12);
        let a = nakayama_cyclic_algebra(3, 4, f(2));
        assert_eq!(a.dimension(), brute_force_path_count(a.quiver(), 4));
    }

    #[test]
    fn single_relation_quotient() {
        // Commutative square: 1->2->4 equals 1->3->4, bound 3.
        let quiver = Quiver::new(
            ["1", "2", "3", "4"].iter().map(|s| s.to_string()).collect(),
            vec![
                ("a".to_string(), "1".to_string(), "2".to_string()),
                ("b".to_string(), "1".to_string(), "3".to_string()),
                ("c".to_string(), "2".to_string(), "4".to_string()),
                ("d".to_string(), "3".to_string(), "4".to_string()),
            ],
        )
        .unwrap();
        let field = f(2);
        let rel = Relation::new(field, &quiver, &[(1, &["a", "c"]), (-1, &["b", "d"])]).unwrap();
        let a = build_algebra(AlgebraSpec {
            field,
            quiver,
            relations: vec![rel],
            nilpotency_bound: 3,
        })
        .unwrap();
        // 4 trivial + 4 arrows + 2 length-two paths, minus one ideal dimension
        assert_eq!(a.dimension(), 9);
    }

    #[test]
    fn inhomogeneous_relation_collapses() {
        // k<x>/(x^2 - x^3) with x^4 = 0 forced: the ideal then contains x^2,
        // so the quotient is k[x]/(x^2).
        let quiver = Quiver::new(
            vec!["1".to_string()],
            vec![("x".to_string(), "1".to_string(), "1".to_string())],
        )
        .unwrap();
        let field = f(5);
        let rel =
            Relation::new(field, &quiver, &[(1, &["x", "x"]), (-1, &["x", "x", "x"])]).unwrap();
        let a = build_algebra(AlgebraSpec {
            field,
            quiver,
            relations: vec![rel],
            nilpotency_bound: 4,
        })
        .unwrap();
        assert_eq!(a.dimension(), 2);
    }

    #[test]
    fn associativity_and_unit_on_fixtures() {
        for a in [
            paper_example_algebra(3, f(2)),
            nakayama_cyclic_algebra(2, 3, f(3)),
            linear_path_algebra(3, f(2)),
            loop_algebra(4, f(5)),
        ] {
            let dim = a.dimension();
            assert!(dim <= 12);
            let unit = a.unit_vector();
            for i in 0..dim {
                let mut x = vec![0u32; dim];
                x[i] = 1;
                assert_eq!(a.multiply(&unit, &x), x, "left unit");
                assert_eq!(a.multiply(&x, &unit), x, "right unit");
                for j in 0..dim {
                    let mut y = vec![0u32; dim];
                    y[j] = 1;
                    for k in 0..dim {
                        let mut z = vec![0u32; dim];
                        z[k] = 1;
                        let left = a.multiply(&a.multiply(&x, &y), &z);
                        let right = a.multiply(&x, &a.multiply(&y, &z));
                        assert_eq!(left, right, "associativity at ({i},{j},{k})");
                    }
                }
            }
        }
    }

    #[test]
    fn orthogonal_idempotents() {
        let a = paper_example_algebra(3, f(2));
        let dim = a.dimension();
        for i in 0..3 {
            for j in 0..3 {
                let mut ei = vec![0u32; dim];
                ei[a.trivial_index(i)] = 1;
                let mut ej = vec![0u32; dim];
                ej[a.trivial_index(j)] = 1;
                let prod = a.multiply(&ei, &ej);
                if i == j {
                    assert_eq!(prod, ei);
                } else {
                    assert!(prod.iter().all(|&c| c == 0));
                }
            }
        }
    }

    #[test]
    fn opposite_preserves_dimension_and_involutes() {
        let a = paper_example_algebra(3, f(2));
        let op = opposite_algebra(&a);
        assert_eq!(op.dimension(), a.dimension());
        let opop = opposite_algebra(&op);
        assert_eq!(opop.basis(), a.basis());
        assert_eq!(opop, a);
    }

    #[test]
    fn rejects_small_bound() {
        let quiver = Quiver::new(vec!["1".to_string()], vec![]).unwrap();
        let spec = AlgebraSpec {
            field: f(2),
            quiver,
            relations: vec![],
            nilpotency_bound: 1,
        };
        assert_eq!(build_algebra(spec), Err(AlgebraError::BoundTooSmall(1)));
    }
}
