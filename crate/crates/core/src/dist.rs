//! Discrete distributions `sum del^beta delta_0 c_beta` as a module over the
//! operator algebra.
//!
//! Operators act by normal ordering against the `del` word and evaluating at
//! `delta_0`, where `xi_j delta_0 = 0` and `R_j delta_0 = delta_0 e_j`.

use std::collections::BTreeMap;
use std::fmt;

use crate::action::{eigen_split, eta_of};
use crate::clifford::{check_dim, CliffordElement};
use crate::error::{Error, Result};
use crate::operator::{
    cross_parity, falling, ground_constant, rt_pass_parity, MultiIndex, OperatorElement, OperatorWord,
    PolyState, MAX_DIM,
};
use crate::scalar::{GaussianRational, Scalar};
use crate::spin::SpinElement;

/// `sum_beta del^beta delta_0 c_beta`; stored like a polynomial state with
/// the multi-index read as `del` exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistState(PolyState);

impl DistState {
    pub fn zero(dim: usize) -> Self {
        DistState(PolyState::zero(dim))
    }

    /// `delta_0 c`.
    pub fn delta(c: CliffordElement) -> Self {
        DistState(PolyState::ground(c))
    }

    pub fn monomial(beta: MultiIndex, c: CliffordElement) -> Self {
        DistState(PolyState::monomial(beta, c))
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, CliffordElement)>>(dim: usize, it: I) -> Self {
        DistState(PolyState::from_terms(dim, it))
    }

    pub fn dim(&self) -> usize {
        self.0.dim()
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, CliffordElement> {
        self.0.terms()
    }

    pub fn coeff(&self, beta: &MultiIndex) -> CliffordElement {
        self.0.coeff(beta)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        Ok(DistState(self.0.try_add(&other.0)?))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        DistState(self.0.scale(s))
    }

    pub fn neg(&self) -> Self {
        DistState(self.0.neg())
    }

    pub fn right_mul(&self, c: &CliffordElement) -> Self {
        DistState(self.0.right_mul(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        DistState(self.0.map_coeffs(f))
    }

    pub fn slice(&self, k: usize) -> Self {
        DistState(self.0.slice(k))
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.0.degrees()
    }
}

impl std::ops::Add for &DistState {
    type Output = DistState;
    fn add(self, rhs: &DistState) -> DistState {
        self.try_add(rhs).expect("distribution dimension mismatch")
    }
}

impl std::ops::Sub for &DistState {
    type Output = DistState;
    fn sub(self, rhs: &DistState) -> DistState {
        self + &rhs.neg()
    }
}

impl fmt::Display for DistState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .iter()
            .map(|(b, c)| {
                let mut mono = String::new();
                for (j, &p) in b.iter().enumerate() {
                    match p {
                        0 => {}
                        1 => mono.push_str(&format!("d{} ", j + 1)),
                        _ => mono.push_str(&format!("d{}^{p} ", j + 1)),
                    }
                }
                format!("{mono}delta0{{{c}}}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Applies a word to `del^beta delta_0`.
fn word_on_delta(w: &OperatorWord, beta: &MultiIndex) -> Result<Option<(MultiIndex, i128)>> {
    if w.t != 0 {
        return Err(Error::TOnDelta);
    }
    let zero = [0u8; MAX_DIM];
    let mut negate = rt_pass_parity(w, &zero, beta);
    // del^b del^beta
    negate ^= cross_parity(&w.del, beta);
    let mut gamma = [0u8; MAX_DIM];
    for j in 0..MAX_DIM {
        gamma[j] = w.del[j] + beta[j];
        if w.xi[j] > gamma[j] {
            return Ok(None);
        }
    }
    // xi^a del^gamma delta_0: per index xi^p del^q delta_0 = (-1)^p q!/(q-p)! del^{q-p} delta_0
    negate ^= cross_parity(&w.xi, &gamma);
    let mut out = [0u8; MAX_DIM];
    let mut k: i128 = 1;
    let mut xi_total = 0usize;
    for j in 0..MAX_DIM {
        out[j] = gamma[j] - w.xi[j];
        k *= falling(gamma[j] as u64, w.xi[j] as u64);
        xi_total += w.xi[j] as usize;
    }
    negate ^= xi_total % 2 == 1;
    Ok(Some((out, if negate { -k } else { k })))
}

/// Applies an operator to a distribution.
pub fn dist_apply(a: &OperatorElement, d: &DistState) -> Result<DistState> {
    check_dim(a.dim(), d.dim())?;
    let dim = d.dim();
    let mut acc: BTreeMap<MultiIndex, CliffordElement> = BTreeMap::new();
    for (w, s) in a.terms() {
        let ground = ground_constant(dim, w.r, 0);
        for (beta, c) in d.terms() {
            let Some((out, k)) = word_on_delta(w, beta)? else { continue };
            let constant = ground.mul(c).scale(&s.scale_int(k));
            let slot = acc.entry(out).or_insert_with(|| CliffordElement::zero(dim));
            *slot = &*slot + &constant;
        }
    }
    Ok(DistState::from_terms(dim, acc))
}

/// `F(s~ del s)`: substitutes `del_j -> del_{eta_j}` in written order.
pub fn rotate_dist(s: &SpinElement, d: &DistState) -> Result<DistState> {
    check_dim(s.dim(), d.dim())?;
    let sys = eta_of(s)?;
    let m = d.dim();
    let mut out = DistState::zero(m);
    for (beta, c) in d.terms() {
        let mut state = DistState::delta(c.clone());
        for j in (0..m).rev() {
            for _ in 0..beta[j] {
                state = dist_apply(&sys.del_eta_j[j], &state)?;
            }
        }
        out = out.try_add(&state)?;
    }
    Ok(out)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    pub fn sign(self) -> i64 {
        match self {
            Branch::Plus => 1,
            Branch::Minus => -1,
        }
    }
}

/// The plane eigen-operator `d^{k-2i} ((d2 +- d1)(d2 -+ d1))^i` (even `k`)
/// or `d^{k-2i+1} ((d2 +- d1)(d2 -+ d1))^{i-1} (d2 +- d1)` (odd `k`), built
/// from a pair of first-order operators `(x1, x2)` and their sum `x`.
pub(crate) fn plane_eigen_operator(
    x1: &OperatorElement,
    x2: &OperatorElement,
    k: usize,
    i: usize,
    branch: Branch,
) -> Result<OperatorElement> {
    let sg = Scalar::from_int(branch.sign());
    let plus = x2 + &x1.scale(&sg);
    let minus = x2 - &x1.scale(&sg);
    let x = x1 + x2;
    if k.is_multiple_of(2) {
        if i > k / 2 {
            return Err(Error::OutOfRange(format!("i = {i} for even degree {k}")));
        }
        Ok(x.pow((k - 2 * i) as u32).mul(&plus.mul(&minus).pow(i as u32)))
    } else {
        if i == 0 || i > k.div_ceil(2) {
            return Err(Error::OutOfRange(format!("i = {i} for odd degree {k}")));
        }
        Ok(x.pow((k + 1 - 2 * i) as u32).mul(&plus.mul(&minus).pow(i as u32 - 1)).mul(&plus))
    }
}

/// Eigenvalue of the plane eigenfunction with parameters `(k, i, branch)`.
pub fn plane_eigenvalue(k: usize, i: usize, branch: Branch) -> i64 {
    let base = if k.is_multiple_of(2) { 2 * i as i64 } else { 2 * i as i64 - 1 };
    base * branch.sign()
}

/// All admissible `(i, branch)` for degree `k`; for `i = 0` only one branch.
pub fn plane_indices(k: usize) -> Vec<(usize, Branch)> {
    let mut out = Vec::new();
    if k.is_multiple_of(2) {
        out.push((0, Branch::Plus));
        for i in 1..=k / 2 {
            out.push((i, Branch::Plus));
            out.push((i, Branch::Minus));
        }
    } else {
        for i in 1..=k.div_ceil(2) {
            out.push((i, Branch::Plus));
            out.push((i, Branch::Minus));
        }
    }
    out
}

/// Plane eigendistribution of `xi_1 del_2 + xi_2 del_1` (dimension 2).
pub fn eigen_b(k: usize, i: usize, branch: Branch) -> Result<DistState> {
    let op = plane_eigen_operator(&OperatorElement::del(2, 1), &OperatorElement::del(2, 2), k, i, branch)?;
    dist_apply(&op, &DistState::delta(CliffordElement::one(2)))
}

/// `xi_1 del_2 + xi_2 del_1`.
pub fn plane_generator(m: usize) -> OperatorElement {
    &OperatorElement::xi(m, 1).mul(&OperatorElement::del(m, 2)) + &OperatorElement::xi(m, 2).mul(&OperatorElement::del(m, 1))
}

/// `delta_0 - del_1 delta_0 e_1 + 1/2 del_1^2 delta_0 (1 + e_1^perp e_1)`.
pub fn delta_shift_1_0() -> DistState {
    let m = 2;
    let mut d1 = [0u8; MAX_DIM];
    d1[0] = 1;
    let mut d11 = [0u8; MAX_DIM];
    d11[0] = 2;
    let e1 = CliffordElement::e(m, 1);
    let quad = (&CliffordElement::one(m) + &CliffordElement::e_perp(m, 1).mul(&e1)).scale(&Scalar::ratio(1, 2));
    DistState::from_terms(m, [([0u8; MAX_DIM], CliffordElement::one(m)), (d1, e1.neg()), (d11, quad)])
}

/// `exp(theta L_12)` on distributions via the eigenbasis of
/// `xi_1 del_2 + xi_2 del_1` on each homogeneous slice.
pub fn exp_l12_dist(p: usize, d: &DistState) -> Result<DistState> {
    let m = d.dim();
    if m < 2 {
        return Err(Error::UnsupportedDimension(m, 2));
    }
    let a = plane_generator(m);
    let r21 = OperatorElement::r(m, 2).mul(&OperatorElement::r(m, 1));
    let apply_a = |beta: MultiIndex| -> Result<PolyState> {
        Ok(dist_apply(&a, &DistState::monomial(beta, CliffordElement::one(m)))?.0)
    };
    let mut out = DistState::zero(m);
    for k in d.degrees() {
        for (v, lambda, c) in eigen_split(&apply_a, m, k, &d.slice(k).0)? {
            let piece = DistState::from_terms(
                m,
                v.iter().map(|(beta, q): &(MultiIndex, GaussianRational)| (*beta, c.scale(&Scalar::constant(q.clone())))),
            );
            out = &out + &piece.scale(&Scalar::cos_kt(lambda, p));
            out = &out + &dist_apply(&r21, &piece)?.scale(&Scalar::sin_kt(lambda, p));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spin::{exp_bivector, Family};

    fn beta(a: u8, b: u8) -> MultiIndex {
        let mut x = [0u8; MAX_DIM];
        x[0] = a;
        x[1] = b;
        x
    }

    fn unit(a: u8, b: u8) -> DistState {
        DistState::monomial(beta(a, b), CliffordElement::one(2))
    }

    #[test]
    fn plane_generator_on_first_order() {
        let d = &unit(0, 1) + &unit(1, 0);
        assert_eq!(dist_apply(&plane_generator(2), &d).unwrap(), d);
        assert_eq!(eigen_b(1, 1, Branch::Plus).unwrap(), d);
        assert_eq!(eigen_b(0, 0, Branch::Plus).unwrap(), DistState::delta(CliffordElement::one(2)));
    }

    #[test]
    fn reflections_fold_into_constants() {
        let r21 = OperatorElement::r(2, 2).mul(&OperatorElement::r(2, 1));
        let e21 = CliffordElement::e(2, 2).mul(&CliffordElement::e(2, 1));
        assert_eq!(dist_apply(&r21, &unit(1, 1)).unwrap(), unit(1, 1).right_mul(&e21));
        assert_eq!(dist_apply(&OperatorElement::del(2, 1), &unit(0, 0)).unwrap(), unit(1, 0));
        assert!(dist_apply(&OperatorElement::xi(2, 1), &unit(0, 0)).unwrap().is_zero());
        assert_eq!(dist_apply(&OperatorElement::t(2, 1), &unit(0, 0)), Err(Error::TOnDelta));
    }

    #[test]
    fn eigen_relations() {
        for k in 0..=4 {
            for (i, br) in plane_indices(k) {
                let b = eigen_b(k, i, br).unwrap();
                assert!(!b.is_zero());
                let lam = Scalar::from_int(plane_eigenvalue(k, i, br));
                assert_eq!(dist_apply(&plane_generator(2), &b).unwrap(), b.scale(&lam), "k={k} i={i}");
            }
        }
    }

    #[test]
    fn rotation_of_a_derivative() {
        let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
        let got = rotate_dist(&s, &unit(1, 0)).unwrap();
        let e12 = CliffordElement::e(2, 1).mul(&CliffordElement::e(2, 2));
        let expect = &unit(1, 0).scale(&Scalar::cos_kt(1, 1)) + &unit(0, 1).right_mul(&e12).scale(&Scalar::sin_kt(1, 1));
        assert_eq!(got, expect);
    }

    #[test]
    fn rotation_agrees_with_eigen_route() {
        let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
        let d = delta_shift_1_0();
        assert_eq!(rotate_dist(&s, &d).unwrap(), exp_l12_dist(1, &d).unwrap());
    }
}
