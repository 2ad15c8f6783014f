//! Representation-theoretic layer: the spaces `[P_k]_0` spanned by products
//! of `xi_j R_j`, their harmonic parts, isotropic frames, the primitive
//! idempotent and highest weight vectors.

use std::collections::BTreeMap;

use crate::action::{act, ActionKind};
use crate::clifford::{Blade, CliffordElement};
use crate::dist::{plane_eigen_operator, Branch};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::operator::{laplace, multi_indices, op_apply, vec_xi, MultiIndex, OperatorElement, OperatorWord, PolyState};
use crate::scalar::{GaussianRational as Q, Scalar, TrigMonomial};
use crate::spin::{exp_bivector, Family, SpinElement};

type Coord = (MultiIndex, Blade, TrigMonomial);

/// Coordinates of a state over `Q(i)`, one per (monomial, blade, trig
/// monomial) triple.
pub fn flatten(f: &PolyState) -> BTreeMap<Coord, Q> {
    let mut out = BTreeMap::new();
    for (alpha, c) in f.terms() {
        for (blade, s) in c.terms() {
            for (mono, q) in s.terms() {
                out.insert((*alpha, *blade, *mono), q.clone());
            }
        }
    }
    out
}

/// Matrix whose columns are the flattened states, over a shared row index.
fn column_matrix(states: &[PolyState], extra: &[&PolyState]) -> (Matrix, Vec<Coord>) {
    let mut rows: Vec<Coord> = Vec::new();
    let flats: Vec<BTreeMap<Coord, Q>> = states.iter().chain(extra.iter().copied()).map(flatten).collect();
    for f in &flats {
        rows.extend(f.keys().copied());
    }
    rows.sort();
    rows.dedup();
    let index: BTreeMap<Coord, usize> = rows.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let cols: Vec<Vec<Q>> = flats
        .iter()
        .map(|f| {
            let mut col = vec![Q::zero(); rows.len()];
            for (c, q) in f {
                col[index[c]] = q.clone();
            }
            col
        })
        .collect();
    (Matrix::from_columns(rows.len(), &cols), rows)
}

/// Rank of a family of states over `Q(i)`.
pub fn rank_of(states: &[PolyState]) -> usize {
    if states.is_empty() {
        return 0;
    }
    column_matrix(states, &[]).0.rank()
}

/// Coefficients of `f` in the given basis; errors if `f` is outside the span.
pub fn coordinates(basis: &[PolyState], f: &PolyState) -> Result<Vec<Q>> {
    if f.is_zero() {
        return Ok(vec![Q::zero(); basis.len()]);
    }
    if basis.is_empty() {
        return Err(Error::NotInSpan("empty basis".into()));
    }
    let (mat, _) = column_matrix(basis, &[f]);
    let n = basis.len();
    let a = Matrix::from_columns(mat.rows(), &(0..n).map(|j| mat.column(j)).collect::<Vec<_>>());
    a.solve(&mat.column(n)).ok_or_else(|| Error::NotInSpan(f.to_string()))
}

pub fn combine(basis: &[PolyState], coeffs: &[Q]) -> PolyState {
    let dim = basis.first().map_or(1, PolyState::dim);
    basis.iter().zip(coeffs).fold(PolyState::zero(dim), |acc, (b, q)| {
        if q.is_zero() {
            acc
        } else {
            &acc + &b.scale(&Scalar::constant(q.clone()))
        }
    })
}

/// `(xi_1 R_1)^{a_1} ... (xi_m R_m)^{a_m} [1]` for every `|a| = k`.
pub fn pk0_basis(m: usize, k: usize) -> Vec<PolyState> {
    let xr: Vec<OperatorElement> = (1..=m).map(|j| OperatorElement::xi(m, j).mul(&OperatorElement::r(m, j))).collect();
    multi_indices(m, k)
        .into_iter()
        .map(|alpha| {
            let mut state = PolyState::one(m);
            for j in (0..m).rev() {
                for _ in 0..alpha[j] {
                    state = op_apply(&xr[j], &state).expect("dimensions agree");
                }
            }
            state
        })
        .collect()
}

pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let mut r: i64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Laplacian on `[P_k]_0` written in the `[P_{k-2}]_0` basis (columns are
/// images of basis vectors).
pub fn laplace_matrix(m: usize, k: usize) -> Result<Matrix> {
    let src = pk0_basis(m, k);
    let dst = if k >= 2 { pk0_basis(m, k - 2) } else { Vec::new() };
    let cols: Vec<Vec<Q>> = src.iter().map(|b| coordinates(&dst, &laplace(b))).collect::<Result<_>>()?;
    Ok(Matrix::from_columns(dst.len(), &cols))
}

/// Dimension data for the harmonic part of `[P_k]_0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarmonicDims {
    pub m: usize,
    pub k: usize,
    /// `C(k+m-1, k) - C(k+m-3, k)`.
    pub formula: i64,
    /// `dim [P_k]_0 - dim [P_{k-2}]_0`.
    pub difference: i64,
    /// Exact kernel dimension of the Laplacian on `[P_k]_0`.
    pub rank: i64,
}

impl HarmonicDims {
    pub fn formula_matches(&self) -> bool {
        self.formula == self.rank
    }
}

/// Dimension of `[H_k]_0` by formula and by exact kernel computation.
/// Errors when the kernel disagrees with the Fischer count
/// `dim [P_k]_0 - dim [P_{k-2}]_0`, which would indicate an engine fault.
pub fn dim_hk0(m: usize, k: usize) -> Result<HarmonicDims> {
    let (mi, ki) = (m as i64, k as i64);
    let formula = binomial(ki + mi - 1, ki) - binomial(ki + mi - 3, ki);
    let difference = binomial(ki + mi - 1, ki) - if k >= 2 { binomial(ki + mi - 3, ki - 2) } else { 0 };
    let n = binomial(ki + mi - 1, ki);
    let rank = if k < 2 { n } else { n - laplace_matrix(m, k)?.rank() as i64 };
    if rank != difference {
        return Err(Error::Invariant(format!("harmonic dimension {rank} vs Fischer count {difference} at m={m}, k={k}")));
    }
    Ok(HarmonicDims { m, k, formula, difference, rank })
}

/// `p = h + xi^2 q` with `h` harmonic and `q` in `[P_{k-2}]_0`.
pub fn fischer_decompose(p: &PolyState, k: usize) -> Result<(PolyState, PolyState)> {
    let m = p.dim();
    let basis = pk0_basis(m, k);
    coordinates(&basis, p)?;
    if k < 2 {
        return Ok((p.clone(), PolyState::zero(m)));
    }
    let lower = pk0_basis(m, k - 2);
    // Delta xi^2 on [P_{k-2}]_0 is invertible; solve Delta xi^2 q = Delta p.
    let cols: Vec<Vec<Q>> =
        lower.iter().map(|b| coordinates(&lower, &laplace(&vec_xi(&vec_xi(b))))).collect::<Result<_>>()?;
    let mat = Matrix::from_columns(lower.len(), &cols);
    let rhs = coordinates(&lower, &laplace(p))?;
    let y = mat.solve(&rhs).ok_or_else(|| Error::Invariant("radial system is singular".into()))?;
    let q = combine(&lower, &y);
    let h = p - &vec_xi(&vec_xi(&q));
    Ok((h, q))
}

/// Isotropic frame `f_j = (R_{2j-1} - i R_{2j})/2`, `f_j^+ = (R_{2j-1} + i R_{2j})/2`,
/// `g_j = (T_{2j-1} - i T_{2j})/2`, `g_j^+ = -(T_{2j-1} + i T_{2j})/2`.
#[derive(Clone, Debug)]
pub struct IsotropicFrame {
    pub m: usize,
    pub f: Vec<OperatorElement>,
    pub f_dag: Vec<OperatorElement>,
    pub g: Vec<OperatorElement>,
    pub g_dag: Vec<OperatorElement>,
}

pub fn frame(m: usize) -> IsotropicFrame {
    let half = Scalar::ratio(1, 2);
    let ih = &Scalar::i() * &half;
    let n = m / 2;
    let mut fr = IsotropicFrame { m, f: Vec::new(), f_dag: Vec::new(), g: Vec::new(), g_dag: Vec::new() };
    for j in 1..=n {
        let (a, b) = (2 * j - 1, 2 * j);
        let (ra, rb) = (OperatorElement::r(m, a), OperatorElement::r(m, b));
        let (ta, tb) = (OperatorElement::t(m, a), OperatorElement::t(m, b));
        fr.f.push(&ra.scale(&half) - &rb.scale(&ih));
        fr.f_dag.push(&ra.scale(&half) + &rb.scale(&ih));
        fr.g.push(&ta.scale(&half) - &tb.scale(&ih));
        fr.g_dag.push((&ta.scale(&half) + &tb.scale(&ih)).neg());
    }
    fr
}

/// `I = prod_j f_j f_j^+ g_j g_j^+`; for odd `m` multiplied on the right by
/// `(1 + R_m T_m)/2`.
pub fn idempotent_i(m: usize) -> OperatorElement {
    let fr = frame(m);
    let mut out = OperatorElement::identity(m);
    for j in 0..fr.f.len() {
        out = out.mul(&fr.f[j]).mul(&fr.f_dag[j]).mul(&fr.g[j]).mul(&fr.g_dag[j]);
    }
    if m % 2 == 1 {
        out = out.mul(&odd_tail(m));
    }
    out
}

/// `(1 + R_m T_m) / 2`.
pub fn odd_tail(m: usize) -> OperatorElement {
    let rt = OperatorElement::r(m, m).mul(&OperatorElement::t(m, m));
    (&OperatorElement::identity(m) + &rt).scale(&Scalar::ratio(1, 2))
}

/// The literal odd-dimension variant `I R_m T_m`.
pub fn idempotent_i_literal_odd(m: usize) -> OperatorElement {
    let fr = frame(m);
    let mut out = OperatorElement::identity(m);
    for j in 0..fr.f.len() {
        out = out.mul(&fr.f[j]).mul(&fr.f_dag[j]).mul(&fr.g[j]).mul(&fr.g_dag[j]);
    }
    out.mul(&OperatorElement::r(m, m)).mul(&OperatorElement::t(m, m))
}

/// Every word in the R and T letters (`4^m` of them).
pub fn rt_words(m: usize) -> Vec<OperatorElement> {
    let n = 1u16 << m;
    let mut out = Vec::with_capacity((n * n) as usize);
    for r in 0..n {
        for t in 0..n {
            out.push(OperatorElement::word(m, OperatorWord { r: r as u8, t: t as u8, ..Default::default() }, Scalar::one()));
        }
    }
    out
}

/// Dimension of the left ideal `{a I}` over the R, T subalgebra.
pub fn left_ideal_rank(m: usize, idem: &OperatorElement) -> usize {
    let elems: Vec<OperatorElement> = rt_words(m).iter().map(|w| w.mul(idem)).collect();
    let mut rows: Vec<OperatorWord> = elems.iter().flat_map(|e| e.terms().keys().copied()).collect();
    rows.sort();
    rows.dedup();
    let cols: Vec<Vec<Q>> = elems
        .iter()
        .map(|e| {
            rows.iter()
                .map(|w| {
                    let s = e.terms().get(w).cloned().unwrap_or_default();
                    s.as_constant().expect("frame products have constant coefficients")
                })
                .collect()
        })
        .collect();
    Matrix::from_columns(rows.len(), &cols).rank()
}

/// `<xi, X> = (xi X + X xi) / 2`.
pub fn pairing_with_xi(x: &OperatorElement) -> OperatorElement {
    OperatorElement::vec_xi(x.dim()).inner(x)
}

fn factorial(k: usize) -> i64 {
    (1..=k as i64).product()
}

/// `(1/k!) <xi, f_1>^k [1]`.
pub fn hw_integer(m: usize, k: usize) -> Result<PolyState> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m, 2));
    }
    let x = pairing_with_xi(&frame(m).f[0]);
    let state = op_apply(&x.pow(k as u32), &PolyState::one(m))?;
    Ok(state.scale(&Scalar::ratio(1, factorial(k))))
}

/// `<xi, f_1>^k I [1]`.
pub fn hw_half(m: usize, k: usize) -> Result<PolyState> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m, 2));
    }
    let x = pairing_with_xi(&frame(m).f[0]);
    op_apply(&x.pow(k as u32).mul(&idempotent_i(m)), &PolyState::one(m))
}

/// `(1/k!) <xi, g_1>^k [1]`.
pub fn hw_perp(m: usize, k: usize) -> Result<PolyState> {
    if m < 2 {
        return Err(Error::UnsupportedDimension(m, 2));
    }
    let x = pairing_with_xi(&frame(m).g[0]);
    let state = op_apply(&x.pow(k as u32), &PolyState::one(m))?;
    Ok(state.scale(&Scalar::ratio(1, factorial(k))))
}

/// Maximal torus element `prod_p exp(t_p X_{2p} X_{2p-1} / 2)`.
pub fn torus(family: Family, m: usize) -> Result<SpinElement> {
    let pairs: Vec<(usize, (usize, usize))> = (1..=m / 2).map(|p| (p, (2 * p - 1, 2 * p))).collect();
    exp_bivector(family, m, &pairs)
}

/// Solves `act(kind, torus, F) = lambda F` for the scalar `lambda`.
pub fn torus_weight(kind: ActionKind, f: &PolyState) -> Result<Scalar> {
    let s = torus(kind.family(), f.dim())?;
    eigen_scalar(f, &act(kind, &s, f)?)
}

/// The scalar `lambda` with `image = lambda f`, if it exists.
pub fn eigen_scalar(f: &PolyState, image: &PolyState) -> Result<Scalar> {
    for (alpha, c) in f.terms() {
        for (blade, s) in c.terms() {
            let Some(q) = s.as_constant() else { continue };
            let inv = q.inv().expect("stored coefficients are nonzero");
            let lambda = image.coeff(alpha).coeff(*blade).scale(&inv);
            if f.scale(&lambda) == *image {
                return Ok(lambda);
            }
            return Err(Error::NotEigenvector);
        }
    }
    Err(Error::NotEigenvector)
}

/// The expected weight `exp(i k t_1)` as a scalar.
pub fn integer_weight(k: usize) -> Scalar {
    Scalar::exp_i_kt(k as i64, 1)
}

/// `exp(i (k + 1/2) t_1 + (i/2) sum_{j >= 2} t_j)` for `n = m/2` angles.
pub fn half_weight(m: usize, k: usize) -> Scalar {
    let mut w = Scalar::cis_half(2 * k as i64 + 1, 1);
    for p in 2..=m / 2 {
        w = &w * &Scalar::cis_half(1, p);
    }
    w
}

/// Plane eigenfunction of `xi_1 del_2 + xi_2 del_1` built from `xi` in the
/// same pattern as the plane eigendistributions.
pub fn eigen_poly(k: usize, i: usize, branch: Branch) -> Result<PolyState> {
    let op = plane_eigen_operator(&OperatorElement::xi(2, 1), &OperatorElement::xi(2, 2), k, i, branch)?;
    op_apply(&op, &PolyState::one(2))
}

/// Ground constant of an operator combination of R/T letters.
pub fn ground_of(op: &OperatorElement) -> Result<CliffordElement> {
    let st = op_apply(op, &PolyState::one(op.dim()))?;
    Ok(st.coeff(&[0; crate::operator::MAX_DIM]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dist::{plane_eigenvalue, plane_generator, plane_indices};
    use crate::operator::dirac;

    #[test]
    fn basis_sizes() {
        assert_eq!(pk0_basis(2, 2).len(), 3);
        assert_eq!(pk0_basis(3, 3).len(), 10);
        assert_eq!(rank_of(&pk0_basis(3, 3)), 10);
    }

    #[test]
    fn dimension_counts() {
        let d = dim_hk0(3, 2).unwrap();
        assert_eq!((d.formula, d.rank), (5, 5));
        assert_eq!(dim_hk0(4, 0).unwrap().rank, 1);
        let d = dim_hk0(2, 2).unwrap();
        assert_eq!(d.rank, 2);
        assert_eq!(d.formula, 3);
    }

    #[test]
    fn fischer_split() {
        for p in pk0_basis(2, 2).iter().chain(pk0_basis(3, 3).iter()) {
            let k = p.degrees()[0];
            let (h, q) = fischer_decompose(p, k).unwrap();
            assert!(laplace(&h).is_zero());
            assert_eq!(&h + &vec_xi(&vec_xi(&q)), *p);
        }
        let lin = &pk0_basis(2, 1)[0];
        assert_eq!(fischer_decompose(lin, 1).unwrap(), (lin.clone(), PolyState::zero(2)));
    }

    #[test]
    fn frame_relations() {
        let fr = frame(4);
        let one = OperatorElement::identity(4);
        for j in 0..2 {
            for k in 0..2 {
                let expect = if j == k { one.clone() } else { OperatorElement::zero(4) };
                assert_eq!(fr.f[j].anticommutator(&fr.f_dag[k]), expect);
                assert_eq!(fr.g[j].anticommutator(&fr.g_dag[k]), expect);
                assert!(fr.f[j].anticommutator(&fr.f[k]).is_zero());
                assert!(fr.f[j].anticommutator(&fr.g[k]).is_zero());
            }
        }
    }

    #[test]
    fn idempotents() {
        for m in [2, 4] {
            let i = idempotent_i(m);
            assert_eq!(i.mul(&i), i);
            let fr = frame(m);
            assert!(fr.f[0].mul(&i).is_zero());
            assert!(fr.g[0].mul(&i).is_zero());
        }
        let i3 = idempotent_i(3);
        assert_eq!(i3.mul(&i3), i3);
        let lit = idempotent_i_literal_odd(3);
        assert_ne!(lit.mul(&lit), lit);
        assert_eq!(left_ideal_rank(2, &idempotent_i(2)), 4);
    }

    #[test]
    fn highest_weights() {
        assert_eq!(hw_integer(2, 0).unwrap(), PolyState::one(2));
        for k in 0..=3 {
            let h = hw_integer(2, k).unwrap();
            assert!(laplace(&h).is_zero());
            assert_eq!(torus_weight(ActionKind::H0, &h).unwrap(), integer_weight(k));
            let g = hw_half(2, k).unwrap();
            assert!(dirac(&g).is_zero());
            assert_eq!(torus_weight(ActionKind::L, &g).unwrap(), half_weight(2, k));
        }
    }

    #[test]
    fn plane_polynomials_are_eigen() {
        for k in 0..=4 {
            for (i, br) in plane_indices(k) {
                let f = eigen_poly(k, i, br).unwrap();
                let lam = Scalar::from_int(plane_eigenvalue(k, i, br));
                assert_eq!(op_apply(&plane_generator(2), &f).unwrap(), f.scale(&lam));
            }
        }
    }
}
