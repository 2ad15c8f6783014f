//! Seeded random generators for exact test data.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::clifford::CliffordElement;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::operator::{dirac, laplace, multi_indices, MultiIndex, PolyState};
use crate::repr::{coordinates, pk0_basis};
use crate::scalar::{GaussianRational as Q, Scalar};
use crate::spin::{rotor, Family, RVector, SpinElement};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut impl Rng, bound: i64) -> Q {
    Q::ratio(rng.gen_range(-bound..=bound), rng.gen_range(1..=bound.max(1)))
}

pub fn gaussian(rng: &mut impl Rng, bound: i64) -> Q {
    let re = rational(rng, bound);
    let im = rational(rng, bound);
    &re + &(&im * &Q::i())
}

/// A short random sum of trig monomials over angles `1..=angles`.
pub fn scalar(rng: &mut impl Rng, angles: usize, with_eps: bool) -> Scalar {
    let n = rng.gen_range(0..=3);
    let mut out = Scalar::zero();
    for _ in 0..n {
        let mut c = vec![0u8; angles];
        let mut s = vec![0u8; angles];
        for p in 0..angles {
            c[p] = rng.gen_range(0..=2);
            s[p] = rng.gen_range(0..=1);
        }
        let eps = with_eps && rng.gen_bool(0.3);
        let mono = crate::scalar::TrigMonomial::new(&c, &s, eps).expect("within bounds");
        out += &Scalar::monomial(mono, gaussian(rng, 5));
    }
    out
}

/// Random Clifford element with constant coefficients on a few blades.
pub fn clifford(rng: &mut impl Rng, m: usize, terms: usize) -> CliffordElement {
    let full = 1u32 << (2 * m);
    CliffordElement::from_terms(
        m,
        (0..terms).map(|_| (rng.gen_range(0..full), Scalar::constant(rational(rng, 4)))),
    )
}

/// Random exact unit vector by inverse stereographic projection of a
/// rational point: `(2u, |u|^2 - 1) / (|u|^2 + 1)`.
pub fn unit_coords(rng: &mut impl Rng, m: usize) -> Vec<Q> {
    if m == 1 {
        return vec![if rng.gen_bool(0.5) { Q::one() } else { -Q::one() }];
    }
    let u: Vec<Q> = (0..m - 1).map(|_| rational(rng, 5)).collect();
    let sq = u.iter().fold(Q::zero(), |acc, x| &acc + &(x * x));
    let inv = (&sq + &Q::one()).inv().expect("positive");
    let mut out: Vec<Q> = u.iter().map(|x| &(x * &Q::from_int(2)) * &inv).collect();
    out.push(&(&sq - &Q::one()) * &inv);
    out
}

pub fn unit_vector(rng: &mut impl Rng, family: Family, m: usize) -> RVector {
    RVector::new(family, unit_coords(rng, m).into_iter().map(Scalar::constant).collect())
}

/// Product of `factors` (even) random unit vectors.
pub fn spin(rng: &mut impl Rng, family: Family, m: usize, factors: usize) -> Result<SpinElement> {
    let vs = (0..factors).map(|_| unit_vector(rng, family, m)).collect();
    SpinElement::from_factors(family, m, vs)
}

/// Plane rotor with a random rational point on the circle as half-angle.
pub fn rational_rotor(rng: &mut impl Rng, family: Family, m: usize, a: usize, b: usize) -> SpinElement {
    let cs = unit_coords(rng, 2);
    rotor(family, m, Scalar::constant(cs[0].clone()), Scalar::constant(cs[1].clone()), a, b)
}

/// Commuting torus rotors over the pairs `(1,2), (3,4), ...` with random
/// rational half-angles.
pub fn rational_torus(rng: &mut impl Rng, family: Family, m: usize) -> Result<SpinElement> {
    let mut s = SpinElement::identity(family, m);
    for p in 1..=m / 2 {
        s = s.mul(&rational_rotor(rng, family, m, 2 * p - 1, 2 * p))?;
    }
    Ok(s)
}

/// Random element of the kernel of a scalar-character operator on degree-`k`
/// scalar monomials, tensored with random Clifford constants.
fn kernel_state(
    rng: &mut impl Rng,
    m: usize,
    k: usize,
    target_degree: Option<usize>,
    op: impl Fn(&PolyState) -> PolyState,
) -> Result<PolyState> {
    let src: Vec<MultiIndex> = multi_indices(m, k);
    let states: Vec<PolyState> = src.iter().map(|a| PolyState::scalar_monomial(m, *a)).collect();
    let Some(dk) = target_degree else {
        return Ok(random_combination(rng, m, &states));
    };
    let dst: Vec<PolyState> = multi_indices(m, dk).iter().map(|a| PolyState::scalar_monomial(m, *a)).collect();
    let cols: Vec<Vec<Q>> = states.iter().map(|s| coordinates(&dst, &op(s))).collect::<Result<_>>()?;
    let kernel = Matrix::from_columns(dst.len(), &cols).kernel();
    let basis: Vec<PolyState> = kernel
        .iter()
        .map(|v| {
            states.iter().zip(v).fold(PolyState::zero(m), |acc, (s, q)| &acc + &s.scale(&Scalar::constant(q.clone())))
        })
        .collect();
    Ok(random_combination(rng, m, &basis))
}

fn random_combination(rng: &mut impl Rng, m: usize, basis: &[PolyState]) -> PolyState {
    let mut out = PolyState::zero(m);
    for b in basis {
        let c = clifford(rng, m, 2);
        out = &out + &b.right_mul(&c);
    }
    out
}

/// Random harmonic homogeneous state of degree `k`.
pub fn harmonic(rng: &mut impl Rng, m: usize, k: usize) -> Result<PolyState> {
    let target = (k >= 2).then(|| k - 2);
    kernel_state(rng, m, k, target, laplace)
}

/// Random monogenic homogeneous state of degree `k`.
pub fn monogenic(rng: &mut impl Rng, m: usize, k: usize) -> Result<PolyState> {
    let target = (k >= 1).then(|| k - 1);
    kernel_state(rng, m, k, target, dirac)
}

/// Random homogeneous state of degree `k` with Clifford coefficients.
pub fn homogeneous(rng: &mut impl Rng, m: usize, k: usize) -> PolyState {
    let states: Vec<PolyState> = multi_indices(m, k).iter().map(|a| PolyState::scalar_monomial(m, *a)).collect();
    random_combination(rng, m, &states)
}

/// Random element of the span of `(xi_j R_j)^a [1]` products.
pub fn pk0_element(rng: &mut impl Rng, m: usize, k: usize) -> PolyState {
    let basis = pk0_basis(m, k);
    crate::repr::combine(&basis, &basis.iter().map(|_| rational(rng, 4)).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_vectors_are_exact() {
        let mut r = rng(7);
        for m in 1..=4 {
            for _ in 0..10 {
                assert!(unit_vector(&mut r, Family::R, m).norm2().is_one());
            }
        }
    }

    #[test]
    fn kernels() {
        let mut r = rng(3);
        for k in 0..=3 {
            assert!(laplace(&harmonic(&mut r, 3, k).unwrap()).is_zero());
            assert!(dirac(&monogenic(&mut r, 2, k).unwrap()).is_zero());
        }
        assert!(!harmonic(&mut r, 2, 3).unwrap().is_zero());
    }
}
