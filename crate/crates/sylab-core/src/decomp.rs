//! Krull-Schmidt decomposition, isomorphism testing, and the registry of
//! isomorphism classes.
//!
//! Splitting strategy: take endomorphisms (the Hom basis first, then seeded
//! random combinations), compute the minimal polynomial of each, and split
//! the module along any nontrivial coprime factorization via the primary
//! decomposition `M = ker g(u) + ker h(u)`. A piece is declared
//! indecomposable by a deterministic local-ring certificate: every basis
//! endomorphism is scalar plus nilpotent, and the nilpotent parts span a
//! multiplicatively closed nilpotent subspace of codimension one. When the
//! certificate does not apply and the trial budget runs out, the piece is
//! reported indecomposable with an explicit probabilistic flag.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::FDAlgebra;
use crate::matrix::FMatrix;
use crate::poly::{coprime_split, minimal_polynomial, Poly};
use crate::rep::{
    direct_sum_with, hom_basis, image, is_projective, kernel, same_algebra, Morphism,
    Representation,
};

/// How hard `decompose` tries before conceding a probabilistic certificate.
#[derive(Clone, Copy, Debug)]
pub struct DecomposeConfig {
    pub random_trials: usize,
    /// Internal Las Vegas seed. Fixed by default so that every run of the
    /// library is reproducible regardless of call order.
    pub seed: u64,
}

impl Default for DecomposeConfig {
    fn default() -> Self {
        DecomposeConfig {
            random_trials: 48,
            seed: 0x5eed_0051,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certificate {
    Deterministic,
    Probabilistic,
}

/// A full direct-sum decomposition with an isomorphism witness.
pub struct Decomposition {
    /// Pairwise non-isomorphic indecomposable summands with multiplicities,
    /// in discovery order.
    pub summands: Vec<(Representation, usize)>,
    /// Isomorphism from the direct sum of the summands (each repeated by
    /// its multiplicity, in summand order) onto the decomposed module.
    pub witness: Morphism,
    pub certificate: Certificate,
}

impl Decomposition {
    pub fn summand_count(&self) -> usize {
        self.summands.iter().map(|(_, k)| k).sum()
    }
}

/// Fitting's lemma split along an endomorphism: `M = ker(u^d) + im(u^d)`
/// with `d` the total dimension. Returns `NoSplit` when either part is zero.
pub enum FittingSplit {
    Split {
        kernel_part: (Representation, Morphism),
        image_part: (Representation, Morphism),
    },
    NoSplit,
}

pub fn fitting_split(m: &Representation, u: &Morphism) -> FittingSplit {
    assert_eq!(u.source(), m, "fitting_split needs an endomorphism of m");
    assert_eq!(u.target(), m, "fitting_split needs an endomorphism of m");
    let d = m.total_dim();
    let w = u.endo_power(d.max(1));
    let kernel_part = kernel(&w);
    let image_part = image(&w);
    if kernel_part.0.is_zero() || image_part.0.is_zero() {
        return FittingSplit::NoSplit;
    }
    debug_assert_eq!(
        kernel_part.0.total_dim() + image_part.0.total_dim(),
        m.total_dim()
    );
    FittingSplit::Split {
        kernel_part,
        image_part,
    }
}

/// Flattens an endomorphism into one coefficient vector (vertex blocks in
/// order, each row-major).
fn flatten_endo(u: &Morphism) -> Vec<u32> {
    let mut out = Vec::new();
    for m in u.maps() {
        out.extend(m.flatten());
    }
    out
}

/// The block-diagonal total matrix of an endomorphism.
fn total_matrix(u: &Morphism) -> FMatrix {
    let field = u.source().algebra().field();
    let blocks: Vec<&FMatrix> = u.maps().iter().collect();
    FMatrix::block_diag(field, &blocks)
}

fn endo_minpoly(u: &Morphism) -> Poly {
    minimal_polynomial(&total_matrix(u))
}

/// Evaluates a polynomial at an endomorphism, vertexwise.
fn poly_at_endo(p: &Poly, u: &Morphism) -> Morphism {
    let maps = u.maps().iter().map(|m| p.eval_matrix(m)).collect();
    Morphism::new(u.source().clone(), u.target().clone(), maps)
}

/// Deterministic local-endomorphism-ring certificate. Sound: a `true`
/// answer proves End(M) is local with residue field F_p, hence M is
/// indecomposable. A `false` answer proves nothing by itself.
fn local_certificate(endos: &[Morphism]) -> bool {
    if endos.is_empty() {
        return false;
    }
    let field = endos[0].source().algebra().field();
    let rep = endos[0].source();
    let total_dim = rep.total_dim();
    let e = endos.len();
    if e == 1 {
        // End(M) = F_p . id
        return true;
    }
    // Each basis element must be scalar + nilpotent: minpoly = (x - c)^k.
    let mut nilpotent_parts: Vec<Morphism> = Vec::new();
    for u in endos {
        let f = endo_minpoly(u);
        let Some(c) = unique_linear_root(&f) else {
            return false;
        };
        if Poly::x_minus(field, c).pow(f.degree()) != f {
            return false;
        }
        let shifted = u.add(&Morphism::identity(rep).scale(field.neg(c)));
        nilpotent_parts.push(shifted);
    }
    // Their span must have codimension one...
    let span = EndoSpan::from_morphisms(field, &nilpotent_parts);
    if span.dim() != e - 1 {
        return false;
    }
    // ... be closed under composition ...
    let basis = span.basis_morphisms(rep);
    for a in &basis {
        for b in &basis {
            if !span.contains(&flatten_endo(&a.then(b))) {
                return false;
            }
        }
    }
    // ... and be nilpotent as a subspace: the power chain must hit zero.
    let mut current = basis.clone();
    let mut current_dim = span.dim();
    for _ in 0..=total_dim {
        if current.is_empty() {
            return true;
        }
        let mut products = Vec::new();
        for a in &current {
            for b in &basis {
                products.push(a.then(b));
            }
        }
        let next_span = EndoSpan::from_morphisms(field, &products);
        if next_span.dim() >= current_dim && next_span.dim() > 0 {
            // Not shrinking: cannot prove nilpotency.
            return false;
        }
        current_dim = next_span.dim();
        current = next_span.basis_morphisms(rep);
    }
    current.is_empty()
}

/// `Some(c)` when the linear-root part of `f` is exactly `x - c`.
fn unique_linear_root(f: &Poly) -> Option<u32> {
    let field = f.field();
    let p = num_bigint::BigUint::from(field.modulus());
    let xp = Poly::x(field).powmod(&p, f);
    let lin = xp.sub(&Poly::x(field)).gcd(f);
    if lin.degree() == 1 {
        Some(field.neg(lin.coeffs()[0]))
    } else {
        None
    }
}

/// A row-reduced span of flattened endomorphisms.
struct EndoSpan {
    field: crate::field::PrimeField,
    rows: Vec<(Vec<u32>, usize)>, // (reduced vector, pivot)
}

impl EndoSpan {
    fn from_morphisms(field: crate::field::PrimeField, endos: &[Morphism]) -> Self {
        let mut span = EndoSpan {
            field,
            rows: Vec::new(),
        };
        for u in endos {
            span.insert(flatten_endo(u));
        }
        span
    }

    fn reduce(&self, mut v: Vec<u32>) -> Vec<u32> {
        let f = self.field;
        for (row, pivot) in &self.rows {
            let c = v[*pivot];
            if c != 0 {
                for (a, b) in v.iter_mut().zip(row.iter()) {
                    *a = f.sub(*a, f.mul(c, *b));
                }
            }
        }
        v
    }

    fn insert(&mut self, v: Vec<u32>) -> bool {
        let f = self.field;
        let mut v = self.reduce(v);
        if let Some(pivot) = v.iter().position(|&x| x != 0) {
            let inv = f.inv(v[pivot]);
            for a in v.iter_mut() {
                *a = f.mul(*a, inv);
            }
            self.rows.push((v, pivot));
            true
        } else {
            false
        }
    }

    fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reassembles the reduced representatives as morphisms on `rep`.
    fn basis_morphisms(&self, rep: &Representation) -> Vec<Morphism> {
        self.rows
            .iter()
            .map(|(flat, _)| unflatten_endo(rep, flat))
            .collect()
    }
}

fn unflatten_endo(rep: &Representation, flat: &[u32]) -> Morphism {
    let field = rep.algebra().field();
    let mut maps = Vec::new();
    let mut offset = 0;
    for &d in rep.dims() {
        let m = FMatrix::from_fn(field, d, d, |i, j| flat[offset + i * d + j]);
        offset += d * d;
        maps.push(m);
    }
    Morphism::new(rep.clone(), rep.clone(), maps)
}

/// Tries to split `m` along one endomorphism by a coprime factorization of
/// its minimal polynomial.
fn try_split<R: Rng>(
    m: &Representation,
    u: &Morphism,
    rng: &mut R,
) -> Option<((Representation, Morphism), (Representation, Morphism))> {
    let f = endo_minpoly(u);
    let split = coprime_split(&f, rng)?;
    let left = kernel(&poly_at_endo(&split.left, u));
    let right = kernel(&poly_at_endo(&split.right, u));
    debug_assert_eq!(left.0.total_dim() + right.0.total_dim(), m.total_dim());
    debug_assert!(!left.0.is_zero() && !right.0.is_zero());
    Some((left, right))
}

struct Leaf {
    rep: Representation,
    inclusion: Morphism, // into the decomposition root
    probabilistic: bool,
}

fn decompose_into<R: Rng>(
    rep: Representation,
    inclusion: Morphism,
    cfg: &DecomposeConfig,
    rng: &mut R,
    out: &mut Vec<Leaf>,
) {
    if rep.is_zero() {
        return;
    }
    let endos = hom_basis(&rep, &rep);
    // Deterministic phase: try every Hom-basis element.
    for u in &endos {
        if let Some(((lrep, linc), (rrep, rinc))) = try_split(&rep, u, rng) {
            let linc_root = linc.then(&inclusion);
            let rinc_root = rinc.then(&inclusion);
            decompose_into(lrep, linc_root, cfg, rng, out);
            decompose_into(rrep, rinc_root, cfg, rng, out);
            return;
        }
    }
    if local_certificate(&endos) {
        out.push(Leaf {
            rep,
            inclusion,
            probabilistic: false,
        });
        return;
    }
    // Randomized phase: seeded combinations of the Hom basis.
    let p = rep.algebra().field().modulus();
    for _ in 0..cfg.random_trials {
        let mut u = Morphism::zero(rep.clone(), rep.clone());
        for h in &endos {
            let c = rng.gen_range(0..p);
            if c != 0 {
                u = u.add(&h.scale(c));
            }
        }
        if let Some(((lrep, linc), (rrep, rinc))) = try_split(&rep, &u, rng) {
            let linc_root = linc.then(&inclusion);
            let rinc_root = rinc.then(&inclusion);
            decompose_into(lrep, linc_root, cfg, rng, out);
            decompose_into(rrep, rinc_root, cfg, rng, out);
            return;
        }
    }
    out.push(Leaf {
        rep,
        inclusion,
        probabilistic: true,
    });
}

pub fn decompose(m: &Representation) -> Decomposition {
    decompose_with(m, &DecomposeConfig::default())
}

pub fn decompose_with(m: &Representation, cfg: &DecomposeConfig) -> Decomposition {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut leaves = Vec::new();
    decompose_into(m.clone(), Morphism::identity(m), cfg, &mut rng, &mut leaves);

    // Group leaves into isomorphism classes, preserving discovery order.
    let mut groups: Vec<(Representation, Vec<Morphism>)> = Vec::new();
    let mut probabilistic = false;
    for leaf in leaves {
        probabilistic |= leaf.probabilistic;
        let mut placed = false;
        for (rep, copies) in groups.iter_mut() {
            if let Some(iso) = indec_iso(rep, &leaf.rep) {
                copies.push(iso.then(&leaf.inclusion));
                placed = true;
                break;
            }
        }
        if !placed {
            groups.push((leaf.rep, vec![leaf.inclusion]));
        }
    }

    // Stitch the witness: direct sum of representatives with multiplicity,
    // mapped into m by the per-copy inclusions.
    let algebra = m.algebra().clone();
    let field = algebra.field();
    let nv = algebra.quiver().vertex_count();
    let mut sum_parts = Vec::new();
    let mut copy_maps: Vec<&Morphism> = Vec::new();
    for (rep, copies) in &groups {
        for c in copies {
            sum_parts.push(rep.clone());
            copy_maps.push(c);
        }
    }
    let sum = direct_sum_with(algebra, &sum_parts);
    let witness_maps: Vec<FMatrix> = (0..nv)
        .map(|v| {
            let mut acc = FMatrix::zeros(field, m.dim_at(v), 0);
            for c in &copy_maps {
                acc = acc.hstack(c.map(v));
            }
            acc
        })
        .collect();
    let witness = Morphism::new(sum.rep.clone(), m.clone(), witness_maps);
    debug_assert!(witness.is_isomorphism(), "decomposition witness must be iso");

    Decomposition {
        summands: groups
            .into_iter()
            .map(|(rep, copies)| (rep, copies.len()))
            .collect(),
        witness,
        certificate: if probabilistic {
            Certificate::Probabilistic
        } else {
            Certificate::Deterministic
        },
    }
}

/// Isomorphism test for certified indecomposables: some composite
/// `g . f` with `f` in a `Hom(x, y)` basis and `g` in a `Hom(y, x)` basis
/// must be invertible. Sound because End of an indecomposable is local:
/// non-invertible endomorphisms lie in the radical, so if every composite
/// is non-invertible no combination can be the identity.
///
/// Returns the isomorphism when one exists.
pub fn indec_iso(x: &Representation, y: &Representation) -> Option<Morphism> {
    assert!(same_algebra(x, y), "iso test across different algebras");
    if x.dims() != y.dims() {
        return None;
    }
    if x.is_zero() {
        return Some(Morphism::zero(x.clone(), y.clone()));
    }
    let forward = hom_basis(x, y);
    let backward = hom_basis(y, x);
    for f in &forward {
        for g in &backward {
            if f.then(g).is_isomorphism() {
                return Some(f.clone());
            }
        }
    }
    None
}

/// General isomorphism test: decomposes both sides and matches the summand
/// multisets.
pub fn is_isomorphic(x: &Representation, y: &Representation) -> bool {
    assert!(same_algebra(x, y), "iso test across different algebras");
    if x.dims() != y.dims() {
        return false;
    }
    let dx = decompose(x);
    let dy = decompose(y);
    multiset_match(&dx.summands, &dy.summands)
}

pub fn multiset_match(
    xs: &[(Representation, usize)],
    ys: &[(Representation, usize)],
) -> bool {
    if xs.iter().map(|(_, k)| k).sum::<usize>() != ys.iter().map(|(_, k)| k).sum::<usize>() {
        return false;
    }
    let mut remaining: Vec<(usize, &Representation)> = ys.iter().map(|(r, k)| (*k, r)).collect();
    for (rep, mult) in xs {
        let Some(slot) = remaining
            .iter_mut()
            .find(|(k, r)| *k > 0 && indec_iso(r, rep).is_some())
        else {
            return false;
        };
        if slot.0 != *mult {
            return false;
        }
        slot.0 = 0;
    }
    remaining.iter().all(|(k, _)| *k == 0)
}

/// Stable identifier of an interned isomorphism class.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ClassId(pub usize);

pub enum Interned {
    Class(ClassId),
    Projective,
}

/// Interned isomorphism classes of indecomposable non-projective modules:
/// the basis of the group K. Projectives are never stored; they are the
/// relations of K.
pub struct Registry {
    algebra: Arc<FDAlgebra>,
    reps: Vec<Representation>,
}

impl Registry {
    pub fn new(algebra: Arc<FDAlgebra>) -> Self {
        Registry {
            algebra,
            reps: Vec::new(),
        }
    }

    pub fn algebra(&self) -> &Arc<FDAlgebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representative(&self, id: ClassId) -> &Representation {
        &self.reps[id.0]
    }

    /// Interns a certified indecomposable. Projectives are reported, not
    /// stored; repeated interning of isomorphic modules returns the same id.
    pub fn intern(&mut self, m: &Representation) -> Interned {
        debug_assert!(!m.is_zero(), "cannot intern the zero module");
        if is_projective(m) {
            return Interned::Projective;
        }
        for (i, rep) in self.reps.iter().enumerate() {
            if indec_iso(rep, m).is_some() {
                return Interned::Class(ClassId(i));
            }
        }
        self.reps.push(m.clone());
        Interned::Class(ClassId(self.reps.len() - 1))
    }
}
