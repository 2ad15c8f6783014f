//! Operator algebra generated by `xi_j`, `del_j`, `R_j`, `T_j`, and the
//! polynomial module of states `sum xi^alpha [1] c_alpha`.
//!
//! Words are stored in the normal order `xi^a del^b R^r T^t`. Generators of
//! one index form a Weyl algebra (`del_j xi_j - xi_j del_j = 1`), generators
//! with different indices anticommute. `R_j` and `T_j` commute with `xi_j`,
//! `del_j` and anticommute with every other-index `xi`, `del`; `R_j^2 = 1`,
//! `T_j^2 = -1`, `R_j T_k = -T_k R_j` for all `j, k`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::clifford::{check_dim, CliffordElement};
use crate::error::{Error, Result};
use crate::fault::{self, Fault};
use crate::scalar::Scalar;

/// Largest number of variables an operator word can carry.
pub const MAX_DIM: usize = 8;

/// Exponent vector; entries past the dimension are zero.
pub type MultiIndex = [u8; MAX_DIM];

pub fn degree(a: &MultiIndex) -> usize {
    a.iter().map(|&x| x as usize).sum()
}

/// All multi-indices of total degree `k` in `m` variables, in descending
/// lexicographic order (`xi_1^k` first).
pub fn multi_indices(m: usize, k: usize) -> Vec<MultiIndex> {
    fn rec(m: usize, pos: usize, left: usize, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
        if pos + 1 == m {
            cur[pos] = left as u8;
            out.push(*cur);
            cur[pos] = 0;
            return;
        }
        for v in (0..=left).rev() {
            cur[pos] = v as u8;
            rec(m, pos + 1, left - v, cur, out);
        }
        cur[pos] = 0;
    }
    let mut out = Vec::new();
    if m == 0 {
        if k == 0 {
            out.push([0; MAX_DIM]);
        }
        return out;
    }
    rec(m, 0, k, &mut [0; MAX_DIM], &mut out);
    out
}

pub fn unit_index(j: usize) -> MultiIndex {
    let mut a = [0; MAX_DIM];
    a[j - 1] = 1;
    a
}

/// A normal-ordered word `xi^xi del^del R^r T^t`; bit `j-1` of `r` / `t`
/// marks `R_j` / `T_j`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OperatorWord {
    pub xi: MultiIndex,
    pub del: MultiIndex,
    pub r: u8,
    pub t: u8,
}

fn odd(n: usize) -> bool {
    n % 2 == 1
}

/// Parity of `sum_j b_j * sum_{k>j} a_k`.
pub(crate) fn cross_parity(a: &MultiIndex, b: &MultiIndex) -> bool {
    let mut suffix = 0usize;
    let mut total = 0usize;
    for j in (0..MAX_DIM).rev() {
        total += b[j] as usize * suffix;
        suffix += a[j] as usize;
    }
    odd(total)
}

/// Sign parity of reordering the product of two ascending index masks.
fn mask_reorder_parity(left: u8, right: u8) -> bool {
    let mut count = 0u32;
    let mut rest = right;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        count += (left >> (j + 1)).count_ones();
    }
    count % 2 == 1
}

fn binom(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    let mut r: i128 = 1;
    for i in 0..k {
        r = r * (n - i) as i128 / (i + 1) as i128;
    }
    r
}

pub(crate) fn falling(n: u64, k: u64) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128)
}

/// Parity picked up when the R and T letters of `w` move right past the
/// xi/del part of `rhs`.
pub(crate) fn rt_pass_parity(w: &OperatorWord, rhs_xi: &MultiIndex, rhs_del: &MultiIndex) -> bool {
    let xs: usize = degree(rhs_xi);
    let ds: usize = degree(rhs_del);
    let flip = fault::active(Fault::RXiSign);
    let mut parity = 0usize;
    for j in 0..MAX_DIM {
        let own = rhs_xi[j] as usize + rhs_del[j] as usize;
        if w.r >> j & 1 == 1 {
            parity += if flip { ds - rhs_del[j] as usize } else { xs + ds - own };
        }
        if w.t >> j & 1 == 1 {
            parity += xs + ds - own;
        }
    }
    odd(parity)
}

/// Product of two words as an integer combination of words.
pub fn word_mul(a: &OperatorWord, b: &OperatorWord) -> Vec<(OperatorWord, i128)> {
    let mut negate = rt_pass_parity(a, &b.xi, &b.del);

    // letters R^ar T^at R^br T^bt
    negate ^= odd((a.t.count_ones() * b.r.count_ones()) as usize);
    negate ^= mask_reorder_parity(a.r, b.r);
    negate ^= mask_reorder_parity(a.t, b.t);
    negate ^= odd((a.t & b.t).count_ones() as usize);
    let r = a.r ^ b.r;
    let t = a.t ^ b.t;

    // xi/del part: regroup into per-index blocks, multiply, regroup back
    let mut na = [0u8; MAX_DIM];
    let mut nb = [0u8; MAX_DIM];
    for j in 0..MAX_DIM {
        na[j] = a.xi[j] + a.del[j];
        nb[j] = b.xi[j] + b.del[j];
    }
    negate ^= cross_parity(&a.xi, &a.del);
    negate ^= cross_parity(&b.xi, &b.del);
    negate ^= cross_parity(&na, &nb);

    // per index: (xi^p del^q)(xi^u del^v) = sum_i C(q,i) C(u,i) i! xi^{p+u-i} del^{q+v-i}
    let mut partial: Vec<(MultiIndex, MultiIndex, i128)> = vec![([0; MAX_DIM], [0; MAX_DIM], 1)];
    for j in 0..MAX_DIM {
        let (p, q, u, v) = (a.xi[j], a.del[j], b.xi[j], b.del[j]);
        if q == 0 || u == 0 {
            for (x, d, _) in partial.iter_mut() {
                x[j] = p + u;
                d[j] = q + v;
            }
            continue;
        }
        let mut next = Vec::with_capacity(partial.len() * (q.min(u) as usize + 1));
        for (x, d, k) in &partial {
            for i in 0..=q.min(u) {
                let c = binom(q as u64, i as u64) * binom(u as u64, i as u64) * falling(i as u64, i as u64);
                let mut x2 = *x;
                let mut d2 = *d;
                x2[j] = p + u - i;
                d2[j] = q + v - i;
                next.push((x2, d2, k * c));
            }
        }
        partial = next;
    }
    partial
        .into_iter()
        .map(|(xi, del, k)| {
            let s = negate ^ cross_parity(&xi, &del);
            (OperatorWord { xi, del, r, t }, if s { -k } else { k })
        })
        .collect()
}

/// Applies a word to `xi^alpha [1]`, returning `(beta, coefficient)`; the
/// word's R/T letters are still to be folded into a ground constant.
fn word_on_monomial(w: &OperatorWord, alpha: &MultiIndex) -> Option<(MultiIndex, i128)> {
    for j in 0..MAX_DIM {
        if w.del[j] > alpha[j] {
            return None;
        }
    }
    let zero = [0u8; MAX_DIM];
    let mut negate = rt_pass_parity(w, alpha, &zero);
    // del^b xi^alpha [1]: only the fully contracted term survives
    negate ^= cross_parity(&w.del, alpha);
    let mut gamma = [0u8; MAX_DIM];
    let mut k: i128 = 1;
    for j in 0..MAX_DIM {
        gamma[j] = alpha[j] - w.del[j];
        k *= falling(alpha[j] as u64, w.del[j] as u64);
    }
    // xi^a xi^gamma
    negate ^= cross_parity(&w.xi, &gamma);
    let mut beta = [0u8; MAX_DIM];
    for j in 0..MAX_DIM {
        beta[j] = w.xi[j] + gamma[j];
    }
    Some((beta, if negate { -k } else { k }))
}

fn mask_indices(mask: u8) -> Vec<usize> {
    (0..8).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect()
}

/// Ground value of `R^r T^t [1]`, i.e. the right constant `e_r e^perp_t`.
pub fn ground_constant(dim: usize, r: u8, t: u8) -> CliffordElement {
    CliffordElement::e_word(dim, &mask_indices(r)).mul(&CliffordElement::e_perp_word(dim, &mask_indices(t)))
}

/// Combination of normal-ordered words with [`Scalar`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorElement {
    dim: usize,
    terms: BTreeMap<OperatorWord, Scalar>,
}

impl OperatorElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "operator dimension {dim} too large");
        OperatorElement { dim, terms: BTreeMap::new() }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Scalar::one())
    }

    pub fn scalar(dim: usize, s: Scalar) -> Self {
        Self::word(dim, OperatorWord::default(), s)
    }

    pub fn word(dim: usize, w: OperatorWord, s: Scalar) -> Self {
        let mut out = Self::zero(dim);
        out.add_term(w, &s);
        out
    }

    fn check_index(&self, j: usize) {
        assert!((1..=self.dim).contains(&j), "index {j} outside 1..={}", self.dim);
    }

    pub fn xi(dim: usize, j: usize) -> Self {
        let out = Self::zero(dim);
        out.check_index(j);
        Self::word(dim, OperatorWord { xi: unit_index(j), ..Default::default() }, Scalar::one())
    }

    pub fn del(dim: usize, j: usize) -> Self {
        let out = Self::zero(dim);
        out.check_index(j);
        Self::word(dim, OperatorWord { del: unit_index(j), ..Default::default() }, Scalar::one())
    }

    pub fn r(dim: usize, j: usize) -> Self {
        let out = Self::zero(dim);
        out.check_index(j);
        Self::word(dim, OperatorWord { r: 1 << (j - 1), ..Default::default() }, Scalar::one())
    }

    pub fn t(dim: usize, j: usize) -> Self {
        let out = Self::zero(dim);
        out.check_index(j);
        Self::word(dim, OperatorWord { t: 1 << (j - 1), ..Default::default() }, Scalar::one())
    }

    /// `sum_j del_j`.
    pub fn dirac(dim: usize) -> Self {
        (1..=dim).fold(Self::zero(dim), |acc, j| &acc + &Self::del(dim, j))
    }

    /// `sum_j xi_j`.
    pub fn vec_xi(dim: usize) -> Self {
        (1..=dim).fold(Self::zero(dim), |acc, j| &acc + &Self::xi(dim, j))
    }

    pub fn from_terms<I: IntoIterator<Item = (OperatorWord, Scalar)>>(dim: usize, it: I) -> Self {
        let mut out = Self::zero(dim);
        for (w, s) in it {
            out.add_term(w, &s);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<OperatorWord, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True when no term carries an R or T letter.
    pub fn is_scalar_character(&self) -> bool {
        self.terms.keys().all(|w| w.r == 0 && w.t == 0)
    }

    pub fn add_term(&mut self, w: OperatorWord, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let sum = match self.terms.get(&w) {
            Some(v) => v + s,
            None => s.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&w);
        } else {
            self.terms.insert(w, sum);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (w, s) in &other.terms {
            out.add_term(*w, s);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut acc: HashMap<OperatorWord, Scalar> = HashMap::new();
        for (wa, sa) in &self.terms {
            for (wb, sb) in &other.terms {
                let prod = sa * sb;
                for (w, k) in word_mul(wa, wb) {
                    if k == 0 {
                        continue;
                    }
                    *acc.entry(w).or_default() += &prod.scale_int(k);
                }
            }
        }
        Ok(OperatorElement {
            dim: self.dim,
            terms: acc.into_iter().filter(|(_, s)| !s.is_zero()).collect(),
        })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("operator dimension mismatch")
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::identity(self.dim), |acc, _| acc.mul(self))
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(w, c)| (*w, c * s)))
    }

    pub fn neg(&self) -> Self {
        OperatorElement { dim: self.dim, terms: self.terms.iter().map(|(w, c)| (*w, -c)).collect() }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &self.mul(other) - &other.mul(self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &self.mul(other) + &other.mul(self)
    }

    /// `<X, Y> = (XY + YX) / 2`.
    pub fn inner(&self, other: &Self) -> Self {
        self.anticommutator(other).scale(&Scalar::ratio(1, 2))
    }

    /// Acts on a polynomial state.
    pub fn apply(&self, f: &PolyState) -> Result<PolyState> {
        op_apply(self, f)
    }
}

impl std::ops::Add for &OperatorElement {
    type Output = OperatorElement;
    fn add(self, rhs: &OperatorElement) -> OperatorElement {
        self.try_add(rhs).expect("operator dimension mismatch")
    }
}

impl std::ops::Sub for &OperatorElement {
    type Output = OperatorElement;
    fn sub(self, rhs: &OperatorElement) -> OperatorElement {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &OperatorElement {
    type Output = OperatorElement;
    fn mul(self, rhs: &OperatorElement) -> OperatorElement {
        OperatorElement::mul(self, rhs)
    }
}

/// State `sum_alpha xi^alpha [1] c_alpha` with right Clifford constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyState {
    dim: usize,
    terms: BTreeMap<MultiIndex, CliffordElement>,
}

impl PolyState {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "state dimension {dim} too large");
        PolyState { dim, terms: BTreeMap::new() }
    }

    /// `[1] c`.
    pub fn ground(c: CliffordElement) -> Self {
        Self::monomial([0; MAX_DIM], c)
    }

    pub fn one(dim: usize) -> Self {
        Self::ground(CliffordElement::one(dim))
    }

    pub fn monomial(alpha: MultiIndex, c: CliffordElement) -> Self {
        let mut out = Self::zero(c.dim());
        out.add_term(alpha, &c);
        out
    }

    /// `xi^alpha [1]` with unit constant.
    pub fn scalar_monomial(dim: usize, alpha: MultiIndex) -> Self {
        Self::monomial(alpha, CliffordElement::one(dim))
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, CliffordElement)>>(dim: usize, it: I) -> Self {
        let mut out = Self::zero(dim);
        for (a, c) in it {
            out.add_term(a, &c);
        }
        out
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<MultiIndex, CliffordElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> CliffordElement {
        self.terms.get(alpha).cloned().unwrap_or_else(|| CliffordElement::zero(self.dim))
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: &CliffordElement) {
        assert_eq!(c.dim(), self.dim, "constant dimension mismatch");
        if c.is_zero() {
            return;
        }
        let sum = match self.terms.get(&alpha) {
            Some(v) => v + c,
            None => c.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&alpha);
        } else {
            self.terms.insert(alpha, sum);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(*a, c);
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(a, c)| (*a, c.scale(s))))
    }

    pub fn neg(&self) -> Self {
        PolyState { dim: self.dim, terms: self.terms.iter().map(|(a, c)| (*a, c.neg())).collect() }
    }

    /// Right multiplication of every constant: `c_alpha -> c_alpha c`.
    pub fn right_mul(&self, c: &CliffordElement) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(a, x)| (*a, x.mul(c))))
    }

    /// Left multiplication of every constant: `c_alpha -> c c_alpha`.
    pub fn insert_ground_constant(&self, c: &CliffordElement) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(a, x)| (*a, c.mul(x))))
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(a, c)| (*a, c.map_coeffs(&f))))
    }

    /// Homogeneous component of degree `k`.
    pub fn slice(&self, k: usize) -> Self {
        PolyState {
            dim: self.dim,
            terms: self.terms.iter().filter(|(a, _)| degree(a) == k).map(|(a, c)| (*a, c.clone())).collect(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(degree).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn has_eps(&self) -> bool {
        self.terms.values().any(CliffordElement::has_eps)
    }

    /// Splits `a + eps b` coefficient-wise into `(a, b)`.
    pub fn eps_split(&self) -> (Self, Self) {
        (
            self.map_coeffs(|s| s.eps_split().0),
            self.map_coeffs(|s| s.eps_split().1),
        )
    }
}

impl std::ops::Add for &PolyState {
    type Output = PolyState;
    fn add(self, rhs: &PolyState) -> PolyState {
        self.try_add(rhs).expect("state dimension mismatch")
    }
}

impl std::ops::Sub for &PolyState {
    type Output = PolyState;
    fn sub(self, rhs: &PolyState) -> PolyState {
        self + &rhs.neg()
    }
}

/// Applies an operator to a state and evaluates at the ground state.
pub fn op_apply(a: &OperatorElement, f: &PolyState) -> Result<PolyState> {
    check_dim(a.dim, f.dim)?;
    let dim = f.dim;
    let mut grounds: HashMap<(u8, u8), CliffordElement> = HashMap::new();
    let mut acc: BTreeMap<MultiIndex, CliffordElement> = BTreeMap::new();
    for (w, s) in &a.terms {
        let ground = grounds
            .entry((w.r, w.t))
            .or_insert_with(|| ground_constant(dim, w.r, w.t))
            .clone();
        for (alpha, c) in &f.terms {
            let Some((beta, k)) = word_on_monomial(w, alpha) else { continue };
            let coeff = s.scale_int(k);
            let constant = ground.mul(c).scale(&coeff);
            let slot = acc.entry(beta).or_insert_with(|| CliffordElement::zero(dim));
            *slot = &*slot + &constant;
        }
    }
    Ok(PolyState { dim, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() })
}

pub fn dirac(f: &PolyState) -> PolyState {
    op_apply(&OperatorElement::dirac(f.dim), f).expect("dimensions agree by construction")
}

pub fn vec_xi(f: &PolyState) -> PolyState {
    op_apply(&OperatorElement::vec_xi(f.dim), f).expect("dimensions agree by construction")
}

pub fn laplace(f: &PolyState) -> PolyState {
    dirac(&dirac(f))
}

/// Grading operator: multiplies each monomial by its degree.
pub fn euler(f: &PolyState) -> PolyState {
    PolyState::from_terms(
        f.dim,
        f.terms.iter().map(|(a, c)| (*a, c.scale(&Scalar::from_int(degree(a) as i64)))),
    )
}

pub fn insert_ground_constant(f: &PolyState, c: &CliffordElement) -> Result<PolyState> {
    check_dim(f.dim, c.dim())?;
    Ok(f.insert_ground_constant(c))
}

fn fmt_word(w: &OperatorWord) -> String {
    let mut parts = Vec::new();
    for (name, e) in [("xi", &w.xi), ("d", &w.del)] {
        for (j, &p) in e.iter().enumerate() {
            match p {
                0 => {}
                1 => parts.push(format!("{name}{}", j + 1)),
                _ => parts.push(format!("{name}{}^{p}", j + 1)),
            }
        }
    }
    for j in mask_indices(w.r) {
        parts.push(format!("R{j}"));
    }
    for j in mask_indices(w.t) {
        parts.push(format!("T{j}"));
    }
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join(" ")
    }
}

impl fmt::Display for OperatorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, s)| format!("({s}) {}", fmt_word(w))).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for PolyState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(a, c)| {
                let w = OperatorWord { xi: *a, ..Default::default() };
                let mono = if degree(a) == 0 { String::new() } else { fmt_word(&w) + " " };
                format!("{mono}[1]{{{c}}}")
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Ensures a dimension is usable by the operator engine.
pub fn check_supported(m: usize) -> Result<()> {
    if (1..=MAX_DIM).contains(&m) {
        Ok(())
    } else {
        Err(Error::UnsupportedDimension(m, MAX_DIM))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op_xi(m: usize, j: usize) -> OperatorElement {
        OperatorElement::xi(m, j)
    }
    fn op_del(m: usize, j: usize) -> OperatorElement {
        OperatorElement::del(m, j)
    }

    #[test]
    fn skew_weyl_relations() {
        let m = 3;
        let one = OperatorElement::identity(m);
        for j in 1..=m {
            assert_eq!(op_del(m, j).commutator(&op_xi(m, j)), one);
            for k in 1..=m {
                if j != k {
                    assert!(op_del(m, j).anticommutator(&op_xi(m, k)).is_zero());
                    assert!(op_xi(m, j).anticommutator(&op_xi(m, k)).is_zero());
                    assert!(op_del(m, j).anticommutator(&op_del(m, k)).is_zero());
                }
            }
        }
    }

    #[test]
    fn reflection_generator_relations() {
        let m = 3;
        let r1 = OperatorElement::r(m, 1);
        assert_eq!(r1.mul(&r1), OperatorElement::identity(m));
        let t1 = OperatorElement::t(m, 1);
        assert_eq!(t1.mul(&t1), OperatorElement::identity(m).neg());
        assert_eq!(r1.mul(&op_xi(m, 2)), op_xi(m, 2).mul(&r1).neg());
        assert_eq!(r1.mul(&op_xi(m, 1)), op_xi(m, 1).mul(&r1));
        assert!(r1.anticommutator(&t1).is_zero());
    }

    #[test]
    fn apply_examples() {
        let m = 2;
        let x1 = PolyState::scalar_monomial(m, unit_index(1));
        assert_eq!(op_del(m, 1).apply(&x1).unwrap(), PolyState::one(m));
        let mut a3 = [0; MAX_DIM];
        a3[0] = 3;
        assert!(op_del(m, 2).apply(&PolyState::scalar_monomial(m, a3)).unwrap().is_zero());
        let x2 = PolyState::scalar_monomial(m, unit_index(2));
        let got = OperatorElement::r(m, 1).apply(&x2).unwrap();
        assert_eq!(got, x2.right_mul(&CliffordElement::e(m, 1)).neg());
    }

    #[test]
    fn apply_agrees_with_word_product() {
        // op_apply must equal multiplying by the state's word and folding
        let m = 3;
        let ops = [
            op_del(m, 2).mul(&op_xi(m, 1)).mul(&OperatorElement::r(m, 3)),
            op_del(m, 1).mul(&op_del(m, 3)).mul(&OperatorElement::t(m, 2)),
            op_xi(m, 3).mul(&op_del(m, 1)).mul(&op_del(m, 1)),
        ];
        for op in &ops {
            for k in 0..=3 {
                for alpha in multi_indices(m, k) {
                    let f = PolyState::scalar_monomial(m, alpha);
                    let direct = op.apply(&f).unwrap();
                    let word = OperatorElement::word(m, OperatorWord { xi: alpha, ..Default::default() }, Scalar::one());
                    let prod = op.mul(&word);
                    let mut folded = PolyState::zero(m);
                    for (w, s) in prod.terms() {
                        if w.del.iter().all(|&d| d == 0) {
                            let c = ground_constant(m, w.r, w.t).scale(s);
                            folded.add_term(w.xi, &c);
                        }
                    }
                    assert_eq!(direct, folded);
                }
            }
        }
    }

    #[test]
    fn euler_and_osp() {
        let m = 2;
        let mut a = [0; MAX_DIM];
        a[0] = 1;
        a[1] = 1;
        let f = PolyState::scalar_monomial(m, a);
        assert_eq!(euler(&f), f.scale(&Scalar::from_int(2)));
        let mut b = [0; MAX_DIM];
        b[0] = 2;
        let g = PolyState::scalar_monomial(m, b);
        let anti = &dirac(&vec_xi(&g)) + &vec_xi(&dirac(&g));
        assert_eq!(anti, g.scale(&Scalar::from_int(6)));
        assert!(laplace(&PolyState::scalar_monomial(m, unit_index(1))).is_zero());
    }

    #[test]
    fn laplacian_has_scalar_character() {
        for m in 1..=4 {
            let d = OperatorElement::dirac(m);
            assert!(d.mul(&d).is_scalar_character());
        }
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(multi_indices(2, 2).len(), 3);
        assert_eq!(multi_indices(3, 4).len(), 15);
        assert_eq!(multi_indices(2, 2)[0][0], 2);
    }
}
