//! Seeded random generation of modules and short exact sequences.
//!
//! Random modules are cokernels of random maps between random sums of
//! indecomposable projectives, so every output is a valid module and every
//! finitely generated module is reachable. All randomness flows through the
//! caller's generator; identical seeds give identical outputs.

use alloc::sync::Arc;
use alloc::vec::Vec;

use rand::Rng;

use crate::algebra::FDAlgebra;
use crate::rep::{
    cokernel, direct_sum_with, hom_basis, image, projective, Morphism, Representation,
    ShortExactSequence,
};

/// A random direct sum of at most `count` indecomposable projectives.
pub fn random_projective_sum<R: Rng>(
    algebra: &Arc<FDAlgebra>,
    count: usize,
    rng: &mut R,
) -> Representation {
    let nv = algebra.quiver().vertex_count();
    let n = rng.gen_range(0..=count);
    let summands: Vec<Representation> = (0..n)
        .map(|_| projective(algebra, rng.gen_range(0..nv)))
        .collect();
    direct_sum_with(algebra.clone(), &summands).rep
}

/// A random morphism: a uniform field combination of a Hom-space basis.
pub fn random_hom<R: Rng>(from: &Representation, to: &Representation, rng: &mut R) -> Morphism {
    let p = from.algebra().field().modulus();
    let basis = hom_basis(from, to);
    let mut acc = Morphism::zero(from.clone(), to.clone());
    for h in &basis {
        let c = rng.gen_range(0..p);
        if c != 0 {
            acc = acc.add(&h.scale(c));
        }
    }
    acc
}

/// A random finitely generated module: the cokernel of a random morphism
/// between random projective sums. `budget` bounds the summand counts;
/// budget zero gives the zero module.
pub fn random_presentation_module<R: Rng>(
    algebra: &Arc<FDAlgebra>,
    budget: usize,
    rng: &mut R,
) -> Representation {
    if budget == 0 {
        return Representation::zero(algebra.clone());
    }
    let p0 = random_projective_sum(algebra, budget, rng);
    let p1 = random_projective_sum(algebra, budget, rng);
    let f = random_hom(&p1, &p0, rng);
    let m = cokernel(&f).0;
    debug_assert_eq!(m.validate(), Ok(()));
    m
}

/// A random short exact sequence `0 -> A -> B -> C -> 0`: B is a random
/// module, A the image of a random map from a projective sum into B, and
/// C the quotient.
pub fn random_ses<R: Rng>(
    algebra: &Arc<FDAlgebra>,
    budget: usize,
    rng: &mut R,
) -> ShortExactSequence {
    let b = random_presentation_module(algebra, budget, rng);
    let q = random_projective_sum(algebra, budget, rng);
    let g = random_hom(&q, &b, rng);
    let (_, inclusion) = image(&g);
    let (_, quotient) = cokernel(&inclusion);
    let ses = ShortExactSequence {
        sub: inclusion,
        quo: quotient,
    };
    debug_assert!(ses.validate());
    ses
}

/// A deterministic catalog of small interesting modules: the simples, the
/// radicals and socles of the indecomposable projectives, and all pairwise
/// sums of distinct simples. Sampling suites seed themselves with these
/// before drawing random modules, because extremal behavior (a sum of two
/// specific simples can be the unique maximizer) is easy for uniform
/// sampling to miss.
pub fn curated_seed_modules(algebra: &Arc<FDAlgebra>) -> Vec<Representation> {
    let nv = algebra.quiver().vertex_count();
    let mut out = Vec::new();
    for v in 0..nv {
        out.push(Representation::simple(algebra.clone(), v));
    }
    for v in 0..nv {
        let p = projective(algebra, v);
        let (rad, _) = crate::rep::radical(&p);
        if !rad.is_zero() {
            out.push(rad);
        }
        let (soc, _) = crate::rep::socle(&p);
        if !soc.is_zero() {
            out.push(soc);
        }
    }
    for v in 0..nv {
        for w in v + 1..nv {
            let s = direct_sum_with(
                algebra.clone(),
                &[
                    Representation::simple(algebra.clone(), v),
                    Representation::simple(algebra.clone(), w),
                ],
            );
            out.push(s.rep);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{loop_algebra, paper_example_algebra};
    use crate::field::PrimeField;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn pe3() -> Arc<FDAlgebra> {
        Arc::new(paper_example_algebra(3, PrimeField::new(2).unwrap()))
    }

    #[test]
    fn zero_budget_gives_zero_module() {
        let a = pe3();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(random_presentation_module(&a, 0, &mut rng).is_zero());
    }

    #[test]
    fn outputs_validate_and_are_deterministic() {
        let a = pe3();
        let mut rng1 = ChaCha8Rng::seed_from_u64(42);
        let mut rng2 = ChaCha8Rng::seed_from_u64(42);
        for _ in 0..20 {
            let m1 = random_presentation_module(&a, 3, &mut rng1);
            let m2 = random_presentation_module(&a, 3, &mut rng2);
            assert_eq!(m1, m2);
            assert_eq!(m1.validate(), Ok(()));
        }
    }

    #[test]
    fn ses_outputs_are_exact() {
        let a = Arc::new(loop_algebra(3, PrimeField::new(2).unwrap()));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let ses = random_ses(&a, 2, &mut rng);
            assert!(ses.validate());
            assert_eq!(
                ses.a().total_dim() + ses.c().total_dim(),
                ses.b().total_dim()
            );
        }
    }

    #[test]
    fn curated_seeds_include_simple_pairs() {
        let a = pe3();
        let seeds = curated_seed_modules(&a);
        // 3 simples + radicals/socles of 3 projectives + 3 pairs
        assert!(seeds.len() >= 9);
        assert!(seeds
            .iter()
            .any(|m| m.dims() == [1, 0, 1] && m.total_dim() == 2));
        for m in &seeds {
            assert_eq!(m.validate(), Ok(()));
        }
    }
}
