//! The algebra generated by the `R_j` (or the `T_j`), vectors, the Clifford
//! group acting by twisted conjugation, spin elements and their rotation
//! matrices, and exponentials of commuting bivectors.

use std::collections::BTreeMap;
use std::fmt;

use crate::clifford::check_dim;
use crate::error::{Error, Result};
use crate::operator::{OperatorElement, OperatorWord, MAX_DIM};
use crate::scalar::Scalar;

/// Which generators span the algebra: `R_j^2 = 1` or `T_j^2 = -1`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    R,
    T,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::R => "R",
            Family::T => "T",
        }
    }

    fn square_sign(self) -> i128 {
        match self {
            Family::R => 1,
            Family::T => -1,
        }
    }
}

fn mask_product(family: Family, a: u8, b: u8) -> (u8, i128) {
    let mut count = 0u32;
    let mut rest = b;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        count += (a >> (j + 1)).count_ones();
    }
    let mut sign = if count % 2 == 1 { -1 } else { 1 };
    if family == Family::T && (a & b).count_ones() % 2 == 1 {
        sign = -sign;
    }
    (a ^ b, sign)
}

fn mask_indices(mask: u8) -> Vec<usize> {
    (0..8).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect()
}

pub fn mask_of(indices: &[usize]) -> u8 {
    indices.iter().fold(0u8, |m, &j| m | 1 << (j - 1))
}

/// `sum_A a_A X_A` over subsets `A` of `{1..m}`, `X` the generator family.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RAlgebraElement {
    family: Family,
    dim: usize,
    terms: BTreeMap<u8, Scalar>,
}

impl RAlgebraElement {
    pub fn zero(family: Family, dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} too large");
        RAlgebraElement { family, dim, terms: BTreeMap::new() }
    }

    pub fn scalar(family: Family, dim: usize, s: Scalar) -> Self {
        Self::basis(family, dim, 0, s)
    }

    pub fn one(family: Family, dim: usize) -> Self {
        Self::scalar(family, dim, Scalar::one())
    }

    pub fn basis(family: Family, dim: usize, mask: u8, s: Scalar) -> Self {
        let mut out = Self::zero(family, dim);
        out.add_term(mask, &s);
        out
    }

    /// The generator `R_j` or `T_j`.
    pub fn gen(family: Family, dim: usize, j: usize) -> Self {
        assert!((1..=dim).contains(&j), "index {j} outside 1..={dim}");
        Self::basis(family, dim, 1 << (j - 1), Scalar::one())
    }

    /// Ordered product of generators, e.g. `[2, 1]` gives `R_2 R_1`.
    pub fn word(family: Family, dim: usize, idx: &[usize]) -> Self {
        idx.iter().fold(Self::one(family, dim), |acc, &j| acc.mul(&Self::gen(family, dim, j)))
    }

    pub fn from_terms<I: IntoIterator<Item = (u8, Scalar)>>(family: Family, dim: usize, it: I) -> Self {
        let mut out = Self::zero(family, dim);
        for (m, s) in it {
            out.add_term(m, &s);
        }
        out
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<u8, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u8) -> Scalar {
        self.terms.get(&mask).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, mask: u8, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let sum = match self.terms.get(&mask) {
            Some(v) => v + s,
            None => s.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&mask);
        } else {
            self.terms.insert(mask, sum);
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        check_dim(self.dim, other.dim)?;
        if self.family != other.family {
            return Err(Error::WrongFamily(format!("{} vs {}", self.family.name(), other.family.name())));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, s) in &other.terms {
            out.add_term(*m, s);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.family, self.dim);
        for (ma, sa) in &self.terms {
            for (mb, sb) in &other.terms {
                let (m, k) = mask_product(self.family, *ma, *mb);
                out.add_term(m, &(sa * sb).scale_int(k));
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("incompatible algebra elements")
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.family, self.dim, self.terms.iter().map(|(m, c)| (*m, c * s)))
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn grade_part(&self, k: usize) -> Self {
        Self::from_terms(
            self.family,
            self.dim,
            self.terms.iter().filter(|(m, _)| m.count_ones() as usize == k).map(|(m, s)| (*m, s.clone())),
        )
    }

    pub fn scalar_part(&self) -> Scalar {
        self.coeff(0)
    }

    /// Reversion `(ab)* = b* a*`, generators fixed.
    pub fn reversion(&self) -> Self {
        Self::from_terms(
            self.family,
            self.dim,
            self.terms.iter().map(|(m, s)| {
                let k = m.count_ones();
                let neg = (k * k.saturating_sub(1) / 2) % 2 == 1;
                (*m, if neg { -s } else { s.clone() })
            }),
        )
    }

    /// Conjugation: generators negated, order reversed, coefficients
    /// complex-conjugated.
    pub fn conjugation(&self) -> Self {
        Self::from_terms(
            self.family,
            self.dim,
            self.terms.iter().map(|(m, s)| {
                let k = m.count_ones();
                let neg = (k * (k + 1) / 2) % 2 == 1;
                let c = s.conj();
                (*m, if neg { -c } else { c })
            }),
        )
    }

    /// Main involution, the composite of conjugation and reversion.
    pub fn main_involution(&self) -> Self {
        Self::from_terms(
            self.family,
            self.dim,
            self.terms.iter().map(|(m, s)| {
                let c = s.conj();
                (*m, if m.count_ones() % 2 == 1 { -c } else { c })
            }),
        )
    }

    /// Sum of squared coefficients; equals the scalar part of `a a*` for the
    /// R family.
    pub fn norm2(&self) -> Scalar {
        self.terms.values().fold(Scalar::zero(), |acc, s| &acc + &(s * s))
    }

    /// `a^{-1} = a* (a a*)^{-1}` when `a a*` is a nonzero constant.
    pub fn inverse(&self) -> Result<Self> {
        let rev = self.reversion();
        let n = self.mul(&rev);
        if n.terms.keys().any(|&m| m != 0) {
            return Err(Error::NotInvertible);
        }
        let q = n.scalar_part().as_constant().ok_or(Error::NotInvertible)?;
        let inv = q.inv().ok_or(Error::NotInvertible)?;
        Ok(rev.scale(&Scalar::constant(inv)))
    }

    /// Even elements have only even-size subsets.
    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    /// The same element read as an operator word combination.
    pub fn to_operator(&self) -> OperatorElement {
        OperatorElement::from_terms(
            self.dim,
            self.terms.iter().map(|(m, s)| {
                let w = match self.family {
                    Family::R => OperatorWord { r: *m, ..Default::default() },
                    Family::T => OperatorWord { t: *m, ..Default::default() },
                };
                (w, s.clone())
            }),
        )
    }

    pub fn as_vector(&self) -> Result<RVector> {
        if self.terms.keys().any(|m| m.count_ones() != 1) {
            return Err(Error::NotAVector(self.to_string()));
        }
        Ok(RVector {
            family: self.family,
            coords: (1..=self.dim).map(|j| self.coeff(1 << (j - 1))).collect(),
        })
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.family, self.dim, self.terms.iter().map(|(m, s)| (*m, f(s))))
    }
}

impl std::ops::Add for &RAlgebraElement {
    type Output = RAlgebraElement;
    fn add(self, rhs: &RAlgebraElement) -> RAlgebraElement {
        self.try_add(rhs).expect("incompatible algebra elements")
    }
}

impl std::ops::Sub for &RAlgebraElement {
    type Output = RAlgebraElement;
    fn sub(self, rhs: &RAlgebraElement) -> RAlgebraElement {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &RAlgebraElement {
    type Output = RAlgebraElement;
    fn mul(self, rhs: &RAlgebraElement) -> RAlgebraElement {
        RAlgebraElement::mul(self, rhs)
    }
}

impl fmt::Display for RAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, s)| {
                if *m == 0 {
                    format!("({s})")
                } else {
                    let w: Vec<String> = mask_indices(*m).iter().map(|j| format!("{}{j}", self.family.name())).collect();
                    format!("({s}) {}", w.join(""))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// `omega = sum omega_j X_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RVector {
    pub family: Family,
    pub coords: Vec<Scalar>,
}

impl RVector {
    pub fn new(family: Family, coords: Vec<Scalar>) -> Self {
        RVector { family, coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn to_ralg(&self) -> RAlgebraElement {
        RAlgebraElement::from_terms(
            self.family,
            self.dim(),
            self.coords.iter().enumerate().map(|(j, s)| (1u8 << j, s.clone())),
        )
    }

    pub fn norm2(&self) -> Scalar {
        self.coords.iter().fold(Scalar::zero(), |acc, s| &acc + &(s * s))
    }

    /// Euclidean `<x, y> = sum x_j y_j`.
    pub fn dot(&self, other: &RVector) -> Scalar {
        self.coords.iter().zip(&other.coords).fold(Scalar::zero(), |acc, (a, b)| &acc + &(a * b))
    }
}

/// Twisted conjugation `chi(a)(x) = a x (a~)^{-1}`.
pub fn chi(a: &RAlgebraElement, x: &RVector) -> Result<RVector> {
    let xv = x.to_ralg();
    a.check(&xv)?;
    let inv = a.main_involution().inverse()?;
    a.mul(&xv).mul(&inv).as_vector()
}

/// An element of the spin group with the unit vectors that built it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinElement {
    value: RAlgebraElement,
    factors: Vec<RVector>,
}

impl SpinElement {
    pub fn identity(family: Family, dim: usize) -> Self {
        SpinElement { value: RAlgebraElement::one(family, dim), factors: Vec::new() }
    }

    /// Product of an even number of unit vectors, checked exactly.
    pub fn from_factors(family: Family, dim: usize, factors: Vec<RVector>) -> Result<Self> {
        if !factors.len().is_multiple_of(2) {
            return Err(Error::InvalidSpin("odd number of factors".into()));
        }
        let mut value = RAlgebraElement::one(family, dim);
        for f in &factors {
            if f.family != family || f.dim() != dim {
                return Err(Error::InvalidSpin("factor family or dimension differs".into()));
            }
            if !f.norm2().is_one() {
                return Err(Error::InvalidSpin(format!("factor norm {} is not 1", f.norm2())));
            }
            value = value.mul(&f.to_ralg());
        }
        Ok(SpinElement { value, factors })
    }

    /// Reassembles a stored element, verifying the witness.
    pub fn from_parts(value: RAlgebraElement, factors: Vec<RVector>) -> Result<Self> {
        let rebuilt = Self::from_factors(value.family(), value.dim(), factors)?;
        if rebuilt.value != value && rebuilt.value.neg() != value {
            return Err(Error::InvalidSpin("value does not match its factors".into()));
        }
        Ok(SpinElement { value, factors: rebuilt.factors })
    }

    pub fn value(&self) -> &RAlgebraElement {
        &self.value
    }

    pub fn factors(&self) -> &[RVector] {
        &self.factors
    }

    pub fn family(&self) -> Family {
        self.value.family
    }

    pub fn dim(&self) -> usize {
        self.value.dim
    }

    /// `-s`; the witness keeps its factors with the first one negated.
    pub fn neg(&self) -> Self {
        let mut factors = self.factors.clone();
        if let Some(f) = factors.first_mut() {
            f.coords.iter_mut().for_each(|c| *c = -&*c);
        } else {
            // -1 = X_1 (-X_1) up to the square sign of the family
            let dim = self.dim();
            let mut e = vec![Scalar::zero(); dim];
            e[0] = Scalar::one();
            let mut ne = e.clone();
            ne[0] = Scalar::from_int(-self.family().square_sign() as i64);
            factors = vec![RVector::new(self.family(), e), RVector::new(self.family(), ne)];
        }
        SpinElement { value: self.value.neg(), factors }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        let value = self.value.try_mul(&other.value)?;
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Ok(SpinElement { value, factors })
    }

    /// `s s* = 1`.
    pub fn is_unit(&self) -> bool {
        self.value.mul(&self.value.reversion()) == RAlgebraElement::one(self.family(), self.dim())
    }
}

/// Square matrix over the scalar ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RotationMatrix {
    pub entries: Vec<Vec<Scalar>>,
}

impl RotationMatrix {
    pub fn identity(n: usize) -> Self {
        RotationMatrix {
            entries: (0..n)
                .map(|i| (0..n).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
                .collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.size();
        RotationMatrix {
            entries: (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| (0..n).fold(Scalar::zero(), |acc, k| &acc + &(&self.entries[i][k] * &other.entries[k][j])))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let n = self.size();
        RotationMatrix { entries: (0..n).map(|i| (0..n).map(|j| self.entries[j][i].clone()).collect()).collect() }
    }

    /// Cofactor expansion; exact and division-free.
    pub fn det(&self) -> Scalar {
        fn rec(m: &[Vec<Scalar>], rows: &[usize], cols: &[usize]) -> Scalar {
            if rows.is_empty() {
                return Scalar::one();
            }
            let r = rows[0];
            let mut acc = Scalar::zero();
            for (ci, &c) in cols.iter().enumerate() {
                if m[r][c].is_zero() {
                    continue;
                }
                let sub_cols: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let minor = rec(m, &rows[1..], &sub_cols);
                let term = &m[r][c] * &minor;
                acc = if ci % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            acc
        }
        let n = self.size();
        let idx: Vec<usize> = (0..n).collect();
        rec(&self.entries, &idx, &idx)
    }

    pub fn is_orthogonal(&self) -> bool {
        self.transpose().mul(self) == Self::identity(self.size())
    }
}

/// Matrix of `chi(s)`: column `j` holds the coordinates of `chi(s)(X_j)`.
pub fn so_matrix(s: &SpinElement) -> Result<RotationMatrix> {
    let m = s.dim();
    let mut entries = vec![vec![Scalar::zero(); m]; m];
    for j in 0..m {
        let mut e = vec![Scalar::zero(); m];
        e[j] = Scalar::one();
        let col = chi(&s.value, &RVector::new(s.family(), e))?;
        for (i, c) in col.coords.into_iter().enumerate() {
            entries[i][j] = c;
        }
    }
    Ok(RotationMatrix { entries })
}

/// `prod_p (c_p + s_p X_b X_a)` for pairwise disjoint pairs `(a, b)`; this is
/// the exponential of `sum_p (t_p / 2) X_b X_a`.
pub fn exp_bivector(family: Family, dim: usize, pairs: &[(usize, (usize, usize))]) -> Result<SpinElement> {
    let mut used = 0u8;
    let mut out = SpinElement::identity(family, dim);
    for &(p, (a, b)) in pairs {
        if a == b || a == 0 || b == 0 || a > dim || b > dim {
            return Err(Error::OutOfRange(format!("bivector pair ({a},{b})")));
        }
        let mask = (1u8 << (a - 1)) | (1u8 << (b - 1));
        if used & mask != 0 {
            return Err(Error::OverlappingPairs);
        }
        used |= mask;
        out = out.mul(&rotor(family, dim, Scalar::c(p), Scalar::s(p), a, b))?;
    }
    Ok(out)
}

/// `c + s X_b X_a` written as a product of two unit vectors, given
/// `c^2 + s^2 = 1` in the scalar ring.
pub fn rotor(family: Family, dim: usize, c: Scalar, s: Scalar, a: usize, b: usize) -> SpinElement {
    let mut u = vec![Scalar::zero(); dim];
    let mut v = vec![Scalar::zero(); dim];
    match family {
        // (c X_a + s X_b) X_a
        Family::R => {
            u[a - 1] = c;
            u[b - 1] = s;
            v[a - 1] = Scalar::one();
        }
        // (c X_a - s X_b)(-X_a)
        Family::T => {
            u[a - 1] = c;
            u[b - 1] = -s;
            v[a - 1] = Scalar::from_int(-1);
        }
    }
    SpinElement::from_factors(family, dim, vec![RVector::new(family, u), RVector::new(family, v)])
        .expect("rotor factors are unit vectors")
}

/// `1 + eps X_j X_i`, the first-order element along the bivector.
pub fn infinitesimal_rotor(family: Family, dim: usize, j: usize, i: usize) -> SpinElement {
    rotor(family, dim, Scalar::one(), Scalar::eps(), i, j)
}

/// Floating-point exponential of an arbitrary bivector
/// `sum_k w_k X_{b_k} X_{a_k}` by its truncated power series (20 terms).
/// Returns coefficients indexed by subset mask.
pub fn exp_bivector_numeric(family: Family, dim: usize, bivector: &[(usize, usize, f64)]) -> Vec<f64> {
    let size = 1usize << dim;
    let mul = |x: &[f64], y: &[f64]| -> Vec<f64> {
        let mut out = vec![0.0; size];
        for (ma, &va) in x.iter().enumerate() {
            if va == 0.0 {
                continue;
            }
            for (mb, &vb) in y.iter().enumerate() {
                if vb == 0.0 {
                    continue;
                }
                let (m, k) = mask_product(family, ma as u8, mb as u8);
                out[m as usize] += k as f64 * va * vb;
            }
        }
        out
    };
    let mut b = vec![0.0; size];
    for &(a, bb, w) in bivector {
        let (m, k) = mask_product(family, 1 << (bb - 1), 1 << (a - 1));
        b[m as usize] += k as f64 * w;
    }
    let mut term = vec![0.0; size];
    term[0] = 1.0;
    let mut sum = term.clone();
    for n in 1..20 {
        term = mul(&term, &b).into_iter().map(|v| v / n as f64).collect();
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gen(j: usize) -> RAlgebraElement {
        RAlgebraElement::gen(Family::R, 3, j)
    }

    #[test]
    fn products() {
        assert_eq!(gen(1).mul(&gen(1)), RAlgebraElement::one(Family::R, 3));
        let b = gen(1).mul(&gen(2));
        assert_eq!(b.mul(&b), RAlgebraElement::one(Family::R, 3).neg());
        let t = RAlgebraElement::gen(Family::T, 2, 1);
        assert_eq!(t.mul(&t), RAlgebraElement::one(Family::T, 2).neg());
        let v = RVector::new(Family::R, vec![Scalar::ratio(3, 5), Scalar::ratio(4, 5)]);
        assert!(v.norm2().is_one());
    }

    #[test]
    fn reflections() {
        let e1 = RVector::new(Family::R, vec![Scalar::one(), Scalar::zero()]);
        let e2 = RVector::new(Family::R, vec![Scalar::zero(), Scalar::one()]);
        let r1 = e1.to_ralg();
        let neg = RVector::new(Family::R, vec![Scalar::from_int(-1), Scalar::zero()]);
        assert_eq!(chi(&r1, &e1).unwrap(), neg);
        assert_eq!(chi(&r1, &e2).unwrap(), e2);
        let t1 = RVector::new(Family::T, vec![Scalar::one(), Scalar::zero()]);
        let tn = RVector::new(Family::T, vec![Scalar::from_int(-1), Scalar::zero()]);
        assert_eq!(chi(&t1.to_ralg(), &t1).unwrap(), tn);
        assert_eq!(t1.to_ralg().inverse().unwrap(), tn.to_ralg());
    }

    #[test]
    fn plane_rotation_matrix() {
        // s = c + s R1R2 as exp of the pair (2, 1)
        let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
        assert_eq!(s.value().coeff(0b11), Scalar::s(1));
        let m = so_matrix(&s).unwrap();
        let cos = Scalar::cos_kt(1, 1);
        let sin = Scalar::sin_kt(1, 1);
        assert_eq!(m.entries[0][0], cos);
        assert_eq!(m.entries[1][0], -&sin);
        assert_eq!(m.entries[0][1], sin);
        assert!(m.is_orthogonal());
        assert!(m.det().is_one());
        assert_eq!(so_matrix(&s.neg()).unwrap(), m);
        assert!(s.is_unit());
    }

    #[test]
    fn torus_element_form() {
        let s = exp_bivector(Family::R, 2, &[(1, (1, 2))]).unwrap();
        let expect = &RAlgebraElement::scalar(Family::R, 2, Scalar::c(1))
            + &RAlgebraElement::word(Family::R, 2, &[2, 1]).scale(&Scalar::s(1));
        assert_eq!(s.value(), &expect);
        assert_eq!(exp_bivector(Family::R, 2, &[]).unwrap().value(), &RAlgebraElement::one(Family::R, 2));
        assert_eq!(
            exp_bivector(Family::R, 3, &[(1, (1, 2)), (2, (2, 3))]),
            Err(Error::OverlappingPairs)
        );
        let t = exp_bivector(Family::T, 2, &[(1, (1, 2))]).unwrap();
        assert!(t.is_unit());
    }

    #[test]
    fn numeric_series_matches_closed_form() {
        let theta: f64 = 0.7;
        let v = exp_bivector_numeric(Family::R, 2, &[(1, 2, theta / 2.0)]);
        assert!((v[0] - (theta / 2.0).cos()).abs() < 1e-12);
        // R2R1 = -R1R2, stored on mask 0b11
        assert!((v[3] + (theta / 2.0).sin()).abs() < 1e-12);
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use crate::random;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn so_matrix_is_a_double_cover(seed in any::<u64>(), m in 2usize..=4, family in prop_oneof![Just(Family::R), Just(Family::T)]) {
            let mut rng = random::rng(seed);
            let s = random::spin(&mut rng, family, m, 2).unwrap();
            let t = random::spin(&mut rng, family, m, 4).unwrap();
            let (ms, mt) = (so_matrix(&s).unwrap(), so_matrix(&t).unwrap());
            prop_assert!(ms.is_orthogonal());
            prop_assert!(ms.det().is_one());
            prop_assert_eq!(so_matrix(&s.neg()).unwrap(), ms.clone());
            prop_assert_eq!(so_matrix(&s.mul(&t).unwrap()).unwrap(), ms.mul(&mt));
        }

        #[test]
        fn unit_vectors_reflect(seed in any::<u64>(), m in 1usize..=4) {
            let mut rng = random::rng(seed);
            let w = random::unit_vector(&mut rng, Family::R, m);
            let x = random::unit_vector(&mut rng, Family::R, m);
            let y = chi(&w.to_ralg(), &x).unwrap();
            let two_dot = x.dot(&w).scale_int(2);
            let expect: Vec<Scalar> = x.coords.iter().zip(&w.coords).map(|(a, b)| a - &(&two_dot * b)).collect();
            prop_assert_eq!(y.coords, expect);
        }
    }
}
