//! Dense univariate polynomials over `F_p`.
//!
//! Provides the minimal polynomial of a matrix and a coprime-splitting
//! routine (distinct-degree plus equal-degree stages) that the module
//! decomposition uses to manufacture direct-sum splittings from
//! endomorphisms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero as _;
use rand::Rng;

use crate::field::PrimeField;
use crate::matrix::FMatrix;

/// Coefficients in ascending degree order, no trailing zeros.
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: vec![1],
        }
    }

    pub fn x(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: vec![0, 1],
        }
    }

    /// The monic linear polynomial `x - c`.
    pub fn x_minus(field: PrimeField, c: u32) -> Self {
        Poly::new(field, vec![field.neg(c), 1])
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Degree; the zero polynomial reports degree 0 for our purposes only
    /// through `is_zero`, so callers must check that first.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u32 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn make_monic(&self) -> Poly {
        if self.is_zero() || self.leading() == 1 {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        Poly::new(
            self.field,
            self.coeffs.iter().map(|&c| self.field.mul(c, inv)).collect(),
        )
    }

    pub fn add(&self, rhs: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *o = f.add(a, b);
        }
        Poly::new(f, out)
    }

    pub fn sub(&self, rhs: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = vec![0; n];
        for (i, o) in out.iter_mut().enumerate() {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = rhs.coeffs.get(i).copied().unwrap_or(0);
            *o = f.sub(a, b);
        }
        Poly::new(f, out)
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let f = self.field;
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Poly::zero(f), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let ddeg = divisor.degree();
        let dlead_inv = f.inv(divisor.leading());
        let mut quot = vec![0u32; rem.len() - ddeg];
        for k in (ddeg..rem.len()).rev() {
            let c = f.mul(rem[k], dlead_inv);
            if c == 0 {
                continue;
            }
            quot[k - ddeg] = c;
            for (j, &dc) in divisor.coeffs.iter().enumerate() {
                rem[k - ddeg + j] = f.sub(rem[k - ddeg + j], f.mul(c, dc));
            }
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.div_rem(divisor).1
    }

    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.div_rem(divisor);
        debug_assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| f.mul(f.reduce_u64(i as u64), c))
            .collect();
        Poly::new(f, out)
    }

    pub fn eval(&self, x: u32) -> u32 {
        let f = self.field;
        let mut acc = 0u32;
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    /// Evaluates the polynomial at a square matrix.
    pub fn eval_matrix(&self, m: &FMatrix) -> FMatrix {
        assert_eq!(m.rows(), m.cols());
        let n = m.rows();
        let mut acc = FMatrix::zeros(m.field(), n, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            if c != 0 {
                let scaled_id = FMatrix::identity(m.field(), n).scale(c);
                acc = acc.add(&scaled_id);
            }
        }
        acc
    }

    /// `self^exp mod modulus` with a big-integer exponent.
    pub fn powmod(&self, exp: &BigUint, modulus: &Poly) -> Poly {
        let f = self.field;
        if exp.is_zero() {
            return Poly::one(f).rem(modulus);
        }
        let base = self.rem(modulus);
        let mut acc = Poly::one(f).rem(modulus);
        for i in (0..exp.bits()).rev() {
            acc = acc.mul(&acc).rem(modulus);
            if exp.bit(i) {
                acc = acc.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn pow(&self, mut k: usize) -> Poly {
        let mut acc = Poly::one(self.field);
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}

/// Minimal polynomial of a square matrix, monic, found as the first linear
/// dependence among the flattened powers `I, m, m^2, ...`.
pub fn minimal_polynomial(m: &FMatrix) -> Poly {
    assert_eq!(m.rows(), m.cols(), "minimal polynomial of a non-square matrix");
    let f = m.field();
    let n = m.rows();
    if n == 0 {
        // End(0) = 0; every polynomial annihilates. Convention: minpoly = 1.
        return Poly::one(f);
    }
    // Reduced rows of flattened powers, with the combination that produced
    // each row in terms of the original powers.
    let mut reduced: Vec<(Vec<u32>, Vec<u32>, usize)> = Vec::new(); // (row, combo, pivot)
    let mut power = FMatrix::identity(f, n);
    for k in 0..=n {
        let mut row = power.flatten();
        let mut combo = vec![0u32; k + 1];
        combo[k] = 1;
        for (rrow, rcombo, pivot) in &reduced {
            let factor = row[*pivot];
            if factor != 0 {
                for (a, b) in row.iter_mut().zip(rrow.iter()) {
                    *a = f.sub(*a, f.mul(factor, *b));
                }
                for (i, &c) in rcombo.iter().enumerate() {
                    combo[i] = f.sub(combo[i], f.mul(factor, c));
                }
            }
        }
        if let Some(pivot) = row.iter().position(|&x| x != 0) {
            let inv = f.inv(row[pivot]);
            for a in row.iter_mut() {
                *a = f.mul(*a, inv);
            }
            for c in combo.iter_mut() {
                *c = f.mul(*c, inv);
            }
            reduced.push((row, combo, pivot));
            power = power.mul(m);
        } else {
            // m^k = combination of lower powers; combo is monic at k.
            debug_assert_eq!(combo[k], 1);
            let p = Poly::new(f, combo);
            debug_assert!(p.eval_matrix(m).is_zero());
            return p;
        }
    }
    unreachable!("minimal polynomial has degree at most the dimension");
}

/// A factorization `f = g * h` into nontrivial coprime monic parts.
pub struct CoprimeSplit {
    pub left: Poly,
    pub right: Poly,
}

/// Finds a nontrivial coprime factorization of a monic polynomial, if one
/// exists. Returns `None` exactly when `f` is primary (a power of a single
/// irreducible), up to the vanishing failure probability of the equal-degree
/// stage, which retries `EDF_TRIES` times.
pub fn coprime_split<R: Rng>(f: &Poly, rng: &mut R) -> Option<CoprimeSplit> {
    let field = f.field();
    debug_assert!(!f.is_zero() && f.leading() == 1);
    if f.degree() < 2 {
        return None;
    }
    let deriv = f.derivative();
    if deriv.is_zero() {
        // f = g(x^p) = g~(x)^p over F_p; split the p-th root and lift.
        let g = pth_root(f);
        let split = coprime_split(&g, rng)?;
        let p = field.modulus() as usize;
        return Some(CoprimeSplit {
            left: split.left.pow(p),
            right: split.right.pow(p),
        });
    }
    let u = f.gcd(&deriv);
    let radical_candidate = f.div_exact(&u); // distinct factors with multiplicity not divisible by p
    if radical_candidate.degree() >= 1 && radical_candidate.degree() < f.degree() {
        if let Some(split) = saturate_split(f, &radical_candidate) {
            return Some(split);
        }
    }
    // Either f is squarefree, or every irreducible factor divides the
    // candidate; in both cases it carries all distinct factors.
    let w = if radical_candidate.degree() == f.degree() {
        f.clone()
    } else {
        radical_candidate
    };
    let d = squarefree_split(&w, rng)?;
    saturate_split(f, &d)
}

/// Given a divisor candidate `d` sharing at least one but (hopefully) not
/// all irreducible factors with `f`, saturates `d` inside `f` and returns
/// the resulting coprime pair.
fn saturate_split(f: &Poly, d: &Poly) -> Option<CoprimeSplit> {
    let sat = f.gcd(&d.powmod(&BigUint::from(f.degree()), f));
    if sat.degree() == 0 || sat.degree() == f.degree() {
        return None;
    }
    let rest = f.div_exact(&sat);
    debug_assert!(sat.gcd(&rest).is_one());
    Some(CoprimeSplit {
        left: sat,
        right: rest,
    })
}

/// For a squarefree monic `w` with at least two distinct irreducible
/// factors, returns a proper monic divisor. Distinct-degree stages are
/// deterministic; same-degree splitting uses Cantor-Zassenhaus style
/// randomization.
fn squarefree_split<R: Rng>(w: &Poly, rng: &mut R) -> Option<Poly> {
    let field = w.field();
    if w.degree() < 2 {
        return None;
    }
    let p = BigUint::from(field.modulus());
    let mut frob = Poly::x(field); // x^(p^k) mod w
    let mut k = 0usize;
    loop {
        k += 1;
        if w.degree() < 2 * k {
            // Stages 1..k ruled out factors of degree below k, and two
            // factors of degree >= k no longer fit: w is irreducible.
            return None;
        }
        frob = frob.powmod(&p, w);
        let d = frob.sub(&Poly::x(field)).gcd(w);
        if d.degree() >= 1 {
            if d.degree() < w.degree() {
                // Proper divisor straight from the distinct-degree stage.
                return Some(d);
            }
            // All factors have degree exactly k.
            if w.degree() == k {
                return None; // irreducible
            }
            return equal_degree_divisor(w, k, rng);
        }
    }
}

const EDF_TRIES: usize = 64;

/// Splits a squarefree product of `t >= 2` irreducibles of equal degree `k`.
fn equal_degree_divisor<R: Rng>(g: &Poly, k: usize, rng: &mut R) -> Option<Poly> {
    let field = g.field();
    let p = field.modulus();
    for _ in 0..EDF_TRIES {
        let r = random_poly(field, g.degree(), rng);
        if r.is_zero() {
            continue;
        }
        let s = if p == 2 {
            // Trace map r + r^2 + r^4 + ... + r^(2^(k-1)) mod g.
            let two = BigUint::from(2u32);
            let mut acc = r.clone();
            let mut sum = r.clone();
            for _ in 1..k {
                acc = acc.powmod(&two, g);
                sum = sum.add(&acc).rem(g);
            }
            sum
        } else {
            let e = (BigUint::from(p).pow(k as u32) - BigUint::from(1u32)) / BigUint::from(2u32);
            let pw = r.powmod(&e, g);
            pw.sub(&Poly::one(field))
        };
        let d = s.gcd(g);
        if d.degree() >= 1 && d.degree() < g.degree() {
            return Some(d);
        }
    }
    None
}

fn random_poly<R: Rng>(field: PrimeField, max_deg: usize, rng: &mut R) -> Poly {
    let p = field.modulus();
    let deg = rng.gen_range(1..=max_deg.max(1));
    let coeffs = (0..=deg).map(|_| rng.gen_range(0..p)).collect();
    Poly::new(field, coeffs)
}

/// For `f` with zero derivative, the polynomial `g` with `g^p = f`
/// (coefficients of `f` live at exponents divisible by `p`, and `a^(1/p) = a`
/// in `F_p`).
fn pth_root(f: &Poly) -> Poly {
    let p = f.field().modulus() as usize;
    let coeffs = f
        .coeffs()
        .iter()
        .step_by(p)
        .copied()
        .collect();
    Poly::new(f.field(), coeffs)
}

/// All roots of the linear-factor part of `f`, found via `gcd(f, x^p - x)`
/// followed by root extraction. Deterministic for p = 2, randomized
/// otherwise; the returned list is sorted.
pub fn linear_roots<R: Rng>(f: &Poly, rng: &mut R) -> Vec<u32> {
    let field = f.field();
    let p = field.modulus();
    let xp = Poly::x(field).powmod(&BigUint::from(p), f);
    let lin = xp.sub(&Poly::x(field)).gcd(f);
    let mut roots = Vec::new();
    let mut stack = vec![lin];
    while let Some(g) = stack.pop() {
        if g.degree() == 0 {
            continue;
        }
        if g.degree() == 1 {
            // monic x + c0 => root -c0
            roots.push(field.neg(g.coeffs()[0]));
            continue;
        }
        if p == 2 {
            for c in 0..2u32 {
                if g.eval(c) == 0 {
                    roots.push(c);
                }
            }
            continue;
        }
        // Randomized splitting of a squarefree product of linears.
        let mut split_found = false;
        for _ in 0..EDF_TRIES {
            let shift = rng.gen_range(0..p);
            let base = Poly::new(field, alloc::vec![shift, 1]);
            let e = BigUint::from((p - 1) / 2);
            let s = base.powmod(&e, &g).sub(&Poly::one(field));
            let d = s.gcd(&g);
            if d.degree() >= 1 && d.degree() < g.degree() {
                stack.push(g.div_exact(&d));
                stack.push(d);
                split_found = true;
                break;
            }
        }
        if !split_found {
            // Astronomically unlikely; report no roots from this part.
            continue;
        }
    }
    roots.sort_unstable();
    roots
}
