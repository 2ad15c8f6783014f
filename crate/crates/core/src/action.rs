//! Spin group actions on polynomial states.
//!
//! For a spin element `s` the rotated variables are `eta = s~ xi s` (with
//! `s~` the conjugate) split into components `eta_j = <eta, X_j> X_j^{-1}`.
//! A state `f = sum xi^alpha [1] c_alpha` is moved by substituting
//! `xi_j -> eta_j` in the written order. Three actions are built on this:
//!
//! * `H0(s) f = f(eta)`
//! * `H1(s) f = s f(eta) s~`, where the trailing `s~` lands on `[1]` first
//! * `L(s) f  = s f(eta)`
//!
//! and each has a twin over the `T` generators.

use crate::clifford::CliffordElement;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::operator::{ground_constant, multi_indices, op_apply, MultiIndex, OperatorElement, PolyState};
use crate::scalar::{GaussianRational, Scalar};
use crate::spin::{infinitesimal_rotor, Family, RAlgebraElement, SpinElement};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    H0,
    H1,
    L,
    H0Perp,
    H1Perp,
    LPerp,
}

impl ActionKind {
    pub const ALL: [ActionKind; 6] =
        [ActionKind::H0, ActionKind::H1, ActionKind::L, ActionKind::H0Perp, ActionKind::H1Perp, ActionKind::LPerp];

    pub fn name(self) -> &'static str {
        match self {
            ActionKind::H0 => "H0",
            ActionKind::H1 => "H1",
            ActionKind::L => "L",
            ActionKind::H0Perp => "H0perp",
            ActionKind::H1Perp => "H1perp",
            ActionKind::LPerp => "Lperp",
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.name() == name)
    }

    pub fn family(self) -> Family {
        match self {
            ActionKind::H0 | ActionKind::H1 | ActionKind::L => Family::R,
            _ => Family::T,
        }
    }

    fn base(self) -> ActionKind {
        match self {
            ActionKind::H0Perp => ActionKind::H0,
            ActionKind::H1Perp => ActionKind::H1,
            ActionKind::LPerp => ActionKind::L,
            k => k,
        }
    }
}

/// The rotated variables and derivatives of a spin element.
#[derive(Clone, Debug)]
pub struct EtaSystem {
    pub s: SpinElement,
    /// `s~ xi s`.
    pub eta: OperatorElement,
    /// `eta_1 .. eta_m`.
    pub eta_j: Vec<OperatorElement>,
    /// `s~ del s`.
    pub del_eta: OperatorElement,
    pub del_eta_j: Vec<OperatorElement>,
}

fn component(v: &OperatorElement, gen: &OperatorElement, gen_inv: &OperatorElement) -> OperatorElement {
    v.inner(gen).mul(gen_inv)
}

/// Builds the rotated variables of `s` and checks their exchange relations.
pub fn eta_of(s: &SpinElement) -> Result<EtaSystem> {
    let sys = eta_unchecked(s);
    sys.verify()?;
    Ok(sys)
}

pub(crate) fn eta_unchecked(s: &SpinElement) -> EtaSystem {
    let m = s.dim();
    let fam = s.family();
    let sop = s.value().to_operator();
    let sbar = s.value().conjugation().to_operator();
    let eta = sbar.mul(&OperatorElement::vec_xi(m)).mul(&sop);
    let del_eta = sbar.mul(&OperatorElement::dirac(m)).mul(&sop);
    let gens: Vec<(OperatorElement, OperatorElement)> = (1..=m)
        .map(|j| {
            let g = RAlgebraElement::gen(fam, m, j);
            let inv = g.inverse().expect("generators are invertible");
            (g.to_operator(), inv.to_operator())
        })
        .collect();
    let eta_j = gens.iter().map(|(g, gi)| component(&eta, g, gi)).collect();
    let del_eta_j = gens.iter().map(|(g, gi)| component(&del_eta, g, gi)).collect();
    EtaSystem { s: s.clone(), eta, eta_j, del_eta, del_eta_j }
}

impl EtaSystem {
    pub fn dim(&self) -> usize {
        self.s.dim()
    }

    /// Checks that the components sum back, anticommute with the generators
    /// as the plain variables do, and satisfy the skew-Weyl relations.
    pub fn verify(&self) -> Result<()> {
        let m = self.dim();
        let fam = self.s.family();
        let sum = self.eta_j.iter().fold(OperatorElement::zero(m), |acc, e| &acc + e);
        if sum != self.eta {
            return Err(Error::Invariant("eta components do not sum to eta".into()));
        }
        let dsum = self.del_eta_j.iter().fold(OperatorElement::zero(m), |acc, e| &acc + e);
        if dsum != self.del_eta {
            return Err(Error::Invariant("del_eta components do not sum to del_eta".into()));
        }
        let one = OperatorElement::identity(m);
        for j in 0..m {
            let g = RAlgebraElement::gen(fam, m, j + 1).to_operator();
            for k in 0..m {
                let anti = g.anticommutator(&self.eta_j[k]);
                let expect = if j == k { g.mul(&self.eta_j[j]).scale(&Scalar::from_int(2)) } else { OperatorElement::zero(m) };
                if anti != expect {
                    return Err(Error::Invariant(format!("generator {} vs eta_{}", j + 1, k + 1)));
                }
                let weyl = if j == k {
                    self.del_eta_j[j].commutator(&self.eta_j[j])
                } else {
                    self.del_eta_j[j].anticommutator(&self.eta_j[k])
                };
                let expect = if j == k { one.clone() } else { OperatorElement::zero(m) };
                if weyl != expect {
                    return Err(Error::Invariant(format!("del_eta_{} vs eta_{}", j + 1, k + 1)));
                }
            }
        }
        Ok(())
    }

    /// `f(eta) = sum eta_1^{a_1} ... eta_m^{a_m} [1] c_alpha`.
    pub fn substitute(&self, f: &PolyState) -> Result<PolyState> {
        substitute_with(&self.eta_j, f)
    }
}

/// Replaces each `xi_j` by `vars[j]` in written order and evaluates at `[1]`.
pub fn substitute_with(vars: &[OperatorElement], f: &PolyState) -> Result<PolyState> {
    let m = f.dim();
    if vars.len() != m {
        return Err(Error::DimensionMismatch(vars.len(), m));
    }
    let mut out = PolyState::zero(m);
    for (alpha, c) in f.terms() {
        let mut state = PolyState::ground(c.clone());
        for j in (0..m).rev() {
            for _ in 0..alpha[j] {
                state = op_apply(&vars[j], &state)?;
            }
        }
        out = out.try_add(&state)?;
    }
    Ok(out)
}

fn check_family(kind: ActionKind, s: &SpinElement) -> Result<()> {
    if s.family() != kind.family() {
        return Err(Error::WrongFamily(kind.name().into()));
    }
    Ok(())
}

/// Applies one of the six actions.
pub fn act(kind: ActionKind, s: &SpinElement, f: &PolyState) -> Result<PolyState> {
    check_family(kind, s)?;
    if s.dim() != f.dim() {
        return Err(Error::DimensionMismatch(s.dim(), f.dim()));
    }
    let sys = eta_unchecked(s);
    act_with(kind, &sys, f)
}

/// As [`act`], reusing precomputed rotated variables.
pub fn act_with(kind: ActionKind, sys: &EtaSystem, f: &PolyState) -> Result<PolyState> {
    check_family(kind, &sys.s)?;
    let sop = sys.s.value().to_operator();
    match kind.base() {
        ActionKind::H0 => sys.substitute(f),
        ActionKind::L => op_apply(&sop, &sys.substitute(f)?),
        ActionKind::H1 => {
            let tail = spin_ground(&sys.s.value().conjugation());
            let g = f.insert_ground_constant(&tail);
            op_apply(&sop, &sys.substitute(&g)?)
        }
        _ => unreachable!(),
    }
}

/// The ground constant `a[1]` of an algebra element.
pub fn spin_ground(a: &RAlgebraElement) -> CliffordElement {
    let m = a.dim();
    let mut out = CliffordElement::zero(m);
    for (mask, s) in a.terms() {
        let g = match a.family() {
            Family::R => ground_constant(m, *mask, 0),
            Family::T => ground_constant(m, 0, *mask),
        };
        out = &out + &g.scale(s);
    }
    out
}

/// `L_{a,b} = R_b R_a (xi_a del_b + xi_b del_a)`; zero when `a = b`.
pub fn gen_l(m: usize, a: usize, b: usize) -> OperatorElement {
    if a == b {
        return OperatorElement::zero(m);
    }
    let rr = OperatorElement::r(m, b).mul(&OperatorElement::r(m, a));
    let x = &OperatorElement::xi(m, a).mul(&OperatorElement::del(m, b))
        + &OperatorElement::xi(m, b).mul(&OperatorElement::del(m, a));
    rr.mul(&x)
}

/// `dR(e_{a,b}) = L_{a,b} - R_b R_a / 2`; zero when `a = b`.
pub fn gen_dr(m: usize, a: usize, b: usize) -> OperatorElement {
    if a == b {
        return OperatorElement::zero(m);
    }
    let rr = OperatorElement::r(m, b).mul(&OperatorElement::r(m, a));
    &gen_l(m, a, b) - &rr.scale(&Scalar::ratio(1, 2))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Infinitesimal {
    DH0,
    DH1,
    DL,
}

/// Derived actions of the bivector `R_j R_i`:
/// `dH0 = -2 L_{ij}`, `dH1 = -2 L_{ij} + R_j R_i`, and
/// `dL = -2 L_{ij} + [R_j R_i, .]` with the right factor landing on `[1]`.
pub fn infinitesimal(kind: Infinitesimal, j: usize, i: usize, f: &PolyState) -> Result<PolyState> {
    let m = f.dim();
    let l = gen_l(m, i, j).scale(&Scalar::from_int(-2));
    let rji = OperatorElement::r(m, j).mul(&OperatorElement::r(m, i));
    match kind {
        Infinitesimal::DH0 => op_apply(&l, f),
        Infinitesimal::DH1 => op_apply(&(&l + &rji), f),
        Infinitesimal::DL => {
            let base = op_apply(&(&l + &rji), f)?;
            let ejei = CliffordElement::e(m, j).mul(&CliffordElement::e(m, i));
            Ok(&base - &f.insert_ground_constant(&ejei))
        }
    }
}

/// First-order part of `act(kind, 1 + eps R_j R_i, f)`.
pub fn first_order(kind: ActionKind, j: usize, i: usize, f: &PolyState) -> Result<PolyState> {
    let s = infinitesimal_rotor(kind.family(), f.dim(), j, i);
    let moved = act(kind, &s, f)?;
    let (zeroth, first) = moved.eps_split();
    if zeroth != *f {
        return Err(Error::Invariant("zeroth-order part differs from the input".into()));
    }
    Ok(first)
}

/// `exp(theta L_{12}) f` via the integer spectrum of `A = xi_1 del_2 + xi_2 del_1`:
/// on an eigenvector `v` with eigenvalue `lambda` the result is
/// `cos(lambda t) v + sin(lambda t) R_2 R_1 v`, `t` the angle with index `p`.
pub fn exp_l12(p: usize, f: &PolyState) -> Result<PolyState> {
    let m = f.dim();
    if m < 2 {
        return Err(Error::UnsupportedDimension(m, 2));
    }
    let a = &OperatorElement::xi(m, 1).mul(&OperatorElement::del(m, 2))
        + &OperatorElement::xi(m, 2).mul(&OperatorElement::del(m, 1));
    let r21 = OperatorElement::r(m, 2).mul(&OperatorElement::r(m, 1));
    let mut out = PolyState::zero(m);
    for k in f.degrees() {
        let slice = f.slice(k);
        let apply_a = |alpha: MultiIndex| op_apply(&a, &PolyState::scalar_monomial(m, alpha));
        for (v, lambda, d) in eigen_split(&apply_a, m, k, &slice)? {
            let state = PolyState::from_terms(m, v.iter().map(|(alpha, q)| (*alpha, d.scale(&Scalar::constant(q.clone())))));
            let cos = Scalar::cos_kt(lambda, p);
            let sin = Scalar::sin_kt(lambda, p);
            out = &out + &state.scale(&cos);
            out = &out + &op_apply(&r21, &state)?.scale(&sin);
        }
    }
    Ok(out)
}

pub(crate) type EigenPiece = (Vec<(MultiIndex, GaussianRational)>, i64, CliffordElement);

/// Writes a homogeneous slice as `sum_v v d_v` over an exact eigenbasis of a
/// scalar operator given by its action on unit monomials (integer eigenvalues
/// in `-k..=k`).
pub(crate) fn eigen_split(
    apply_a: &dyn Fn(MultiIndex) -> Result<PolyState>,
    m: usize,
    k: usize,
    slice: &PolyState,
) -> Result<Vec<EigenPiece>> {
    let basis = multi_indices(m, k);
    let n = basis.len();
    let pos = |alpha: &MultiIndex| basis.iter().position(|b| b == alpha);
    let mut columns = Vec::with_capacity(n);
    for alpha in &basis {
        let img = apply_a(*alpha)?;
        let mut col = vec![GaussianRational::zero(); n];
        for (beta, c) in img.terms() {
            let q = c.scalar_part().as_constant().filter(|_| c.terms().len() == 1);
            let (Some(i), Some(q)) = (pos(beta), q) else {
                return Err(Error::Invariant("operator leaves the scalar slice".into()));
            };
            col[i] = q;
        }
        columns.push(col);
    }
    let mat = Matrix::from_columns(n, &columns);
    let mut vecs = Vec::new();
    let mut vals = Vec::new();
    for lambda in -(k as i64)..=(k as i64) {
        for v in mat.shifted(&GaussianRational::from_int(lambda)).kernel() {
            vecs.push(v);
            vals.push(lambda);
        }
    }
    if vecs.len() != n {
        return Err(Error::NotDiagonalizable(k));
    }
    let p = Matrix::from_columns(n, &vecs);
    let pinv = p.inverse().ok_or(Error::NotDiagonalizable(k))?;
    let mut out = Vec::with_capacity(n);
    for (idx, v) in vecs.iter().enumerate() {
        let mut d = CliffordElement::zero(m);
        for (alpha, c) in slice.terms() {
            let i = pos(alpha).ok_or_else(|| Error::Invariant("slice degree".into()))?;
            let q = pinv.get(idx, i);
            if !q.is_zero() {
                d = &d + &c.scale(&Scalar::constant(q.clone()));
            }
        }
        if d.is_zero() {
            continue;
        }
        let entries = basis.iter().zip(v).filter(|(_, q)| !q.is_zero()).map(|(a, q)| (*a, q.clone())).collect();
        out.push((entries, vals[idx], d));
    }
    Ok(out)
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::random;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn actions_compose(seed in any::<u64>(), kind in prop::sample::select(ActionKind::ALL.to_vec()), k in 0usize..=2) {
            let mut rng = random::rng(seed);
            let m = 2;
            let s = random::rational_torus(&mut rng, kind.family(), m).unwrap();
            let t = random::spin(&mut rng, kind.family(), m, 2).unwrap();
            let f = random::homogeneous(&mut rng, m, k);
            let lhs = act(kind, &s.mul(&t).unwrap(), &f).unwrap();
            prop_assert_eq!(lhs, act(kind, &s, &act(kind, &t, &f).unwrap()).unwrap());
        }
    }
}
