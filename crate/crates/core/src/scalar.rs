//! Exact coefficient ring.
//!
//! A [`Scalar`] is a polynomial in the half-angle indeterminates
//! `c_p = cos(t_p/2)`, `s_p = sin(t_p/2)` and a single square-zero
//! infinitesimal `eps`, with Gaussian rational coefficients. Two reductions
//! keep every value canonical: `s_p^2 -> 1 - c_p^2` and `eps^2 -> 0`, so
//! equality of scalars is term-wise equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Number of independent torus angles a scalar can carry.
pub const MAX_ANGLES: usize = 6;

/// Element of the field `Q(i)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(n.into()), BigRational::zero())
    }

    pub fn from_big(n: BigInt) -> Self {
        GaussianRational::new(BigRational::from_integer(n), BigRational::zero())
    }

    /// `num/den` as a real value. Panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(BigRational::new(num.into(), den.into()), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sqr();
        Some(GaussianRational::new(&self.re / &n, -&self.im / &n))
    }

    pub fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn scale_int(&self, k: &BigInt) -> Self {
        GaussianRational::new(&self.re * k, &self.im * k)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && rhs.im.is_zero() {
            return GaussianRational::new(&self.re * &rhs.re, BigRational::zero());
        }
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => {
                if self.im.is_one() {
                    write!(f, "i")
                } else if (-&self.im).is_one() {
                    write!(f, "-i")
                } else {
                    write!(f, "{}i", fmt_rational(&self.im))
                }
            }
            (false, false) => {
                let sign = if self.im.is_negative() { "-" } else { "+" };
                write!(f, "({}{}{}i)", fmt_rational(&self.re), sign, fmt_rational(&self.im.abs()))
            }
        }
    }
}

/// Monomial `eps^e * prod_p c_p^{a_p} s_p^{b_p}` with `b_p <= 1` and `e <= 1`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TrigMonomial {
    eps: bool,
    c: [u8; MAX_ANGLES],
    s: u8,
}

impl TrigMonomial {
    pub const ONE: TrigMonomial = TrigMonomial { eps: false, c: [0; MAX_ANGLES], s: 0 };

    /// Builds a monomial from per-angle exponents (index 0 is angle `t_1`).
    pub fn new(c_exp: &[u8], s_exp: &[u8], eps: bool) -> Result<Self> {
        if c_exp.len() > MAX_ANGLES || s_exp.len() > MAX_ANGLES {
            return Err(Error::OutOfRange(format!("at most {MAX_ANGLES} angles")));
        }
        let mut c = [0u8; MAX_ANGLES];
        c[..c_exp.len()].copy_from_slice(c_exp);
        let mut s = 0u8;
        for (p, &b) in s_exp.iter().enumerate() {
            match b {
                0 => {}
                1 => s |= 1 << p,
                _ => return Err(Error::Parse("sine exponent must be 0 or 1".into())),
            }
        }
        Ok(TrigMonomial { eps, c, s })
    }

    pub fn c_exp(&self, p: usize) -> u8 {
        self.c[p]
    }

    pub fn s_exp(&self, p: usize) -> u8 {
        (self.s >> p) & 1
    }

    pub fn has_eps(&self) -> bool {
        self.eps
    }

    /// Number of angle slots in use (highest used angle index).
    pub fn angles_used(&self) -> usize {
        (0..MAX_ANGLES)
            .rev()
            .find(|&p| self.c[p] != 0 || self.s_exp(p) != 0)
            .map_or(0, |p| p + 1)
    }

    /// Product of two monomials, reduced. Returns signed integer multiples.
    fn mul(&self, other: &TrigMonomial) -> Vec<(TrigMonomial, i64)> {
        if self.eps && other.eps {
            return Vec::new();
        }
        let mut base = TrigMonomial { eps: self.eps || other.eps, c: self.c, s: self.s ^ other.s };
        for p in 0..MAX_ANGLES {
            base.c[p] = base.c[p]
                .checked_add(other.c[p])
                .expect("trig exponent overflow");
        }
        let overlap = self.s & other.s;
        let mut out = vec![(base, 1i64)];
        for p in 0..MAX_ANGLES {
            if overlap & (1 << p) == 0 {
                continue;
            }
            // s_p^2 = 1 - c_p^2
            let mut next = Vec::with_capacity(out.len() * 2);
            for (m, k) in out {
                let mut squared = m;
                squared.c[p] += 2;
                next.push((m, k));
                next.push((squared, -k));
            }
            out = next;
        }
        out
    }

    fn eval(&self, angles: &[f64]) -> Result<f64> {
        if self.eps {
            return Err(Error::InfinitesimalNotEvaluable);
        }
        let mut v = 1.0;
        for p in 0..MAX_ANGLES {
            let (a, b) = (self.c[p], self.s_exp(p));
            if a == 0 && b == 0 {
                continue;
            }
            let t = *angles.get(p).ok_or(Error::MissingAngle(p + 1))?;
            v *= (t / 2.0).cos().powi(a as i32) * (t / 2.0).sin().powi(b as i32);
        }
        Ok(v)
    }
}

impl fmt::Display for TrigMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for p in 0..MAX_ANGLES {
            match self.c[p] {
                0 => {}
                1 => parts.push(format!("c{}", p + 1)),
                e => parts.push(format!("c{}^{}", p + 1, e)),
            }
            if self.s_exp(p) == 1 {
                parts.push(format!("s{}", p + 1));
            }
        }
        if self.eps {
            parts.push("eps".to_string());
        }
        write!(f, "{}", parts.join("*"))
    }
}

/// Sparse combination of reduced trig monomials with Gaussian rational
/// coefficients. Terms are kept sorted and zero-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    terms: Vec<(TrigMonomial, GaussianRational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn i() -> Self {
        Self::constant(GaussianRational::i())
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(GaussianRational::from_int(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        Self::constant(GaussianRational::ratio(num, den))
    }

    pub fn constant(q: GaussianRational) -> Self {
        Self::monomial(TrigMonomial::ONE, q)
    }

    pub fn monomial(m: TrigMonomial, q: GaussianRational) -> Self {
        if q.is_zero() {
            Scalar::zero()
        } else {
            Scalar { terms: vec![(m, q)] }
        }
    }

    /// `c_p = cos(t_p / 2)`, angle index `p` starting at 1.
    pub fn c(p: usize) -> Self {
        assert!((1..=MAX_ANGLES).contains(&p), "angle index {p} out of range");
        let mut m = TrigMonomial::ONE;
        m.c[p - 1] = 1;
        Self::monomial(m, GaussianRational::one())
    }

    /// `s_p = sin(t_p / 2)`, angle index `p` starting at 1.
    pub fn s(p: usize) -> Self {
        assert!((1..=MAX_ANGLES).contains(&p), "angle index {p} out of range");
        let mut m = TrigMonomial::ONE;
        m.s = 1 << (p - 1);
        Self::monomial(m, GaussianRational::one())
    }

    /// The square-zero infinitesimal.
    pub fn eps() -> Self {
        let mut m = TrigMonomial::ONE;
        m.eps = true;
        Self::monomial(m, GaussianRational::one())
    }

    pub fn from_terms<I: IntoIterator<Item = (TrigMonomial, GaussianRational)>>(it: I) -> Self {
        let mut acc: BTreeMap<TrigMonomial, GaussianRational> = BTreeMap::new();
        for (m, q) in it {
            accumulate(&mut acc, m, q);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: BTreeMap<TrigMonomial, GaussianRational>) -> Self {
        Scalar { terms: acc.into_iter().filter(|(_, q)| !q.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(TrigMonomial, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|q| q.is_one())
    }

    /// The value if this scalar is a plain Gaussian rational.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(m, q)] if *m == TrigMonomial::ONE => Some(q.clone()),
            _ => None,
        }
    }

    pub fn has_eps(&self) -> bool {
        self.terms.iter().any(|(m, _)| m.eps)
    }

    pub fn angles_used(&self) -> usize {
        self.terms.iter().map(|(m, _)| m.angles_used()).max().unwrap_or(0)
    }

    /// Complex conjugation; the trig indeterminates and `eps` are real.
    pub fn conj(&self) -> Self {
        Scalar { terms: self.terms.iter().map(|(m, q)| (*m, q.conj())).collect() }
    }

    /// Coefficient-wise real part.
    pub fn re_part(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, q)| (*m, GaussianRational::new(q.re.clone(), BigRational::zero()))),
        )
    }

    /// Coefficient-wise imaginary part (as a real scalar).
    pub fn im_part(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(m, q)| (*m, GaussianRational::new(q.im.clone(), BigRational::zero()))),
        )
    }

    /// Splits `a + eps*b` into `(a, b)`.
    pub fn eps_split(&self) -> (Scalar, Scalar) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (m, q) in &self.terms {
            if m.eps {
                let mut m0 = *m;
                m0.eps = false;
                b.push((m0, q.clone()));
            } else {
                a.push((*m, q.clone()));
            }
        }
        (Scalar { terms: a }, Self::from_terms(b))
    }

    pub fn scale(&self, q: &GaussianRational) -> Self {
        if q.is_zero() {
            return Scalar::zero();
        }
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect() }
    }

    pub fn scale_int(&self, k: i128) -> Self {
        if k == 0 {
            return Scalar::zero();
        }
        if k == 1 {
            return self.clone();
        }
        let k = BigInt::from(k);
        Scalar { terms: self.terms.iter().map(|(m, c)| (*m, c.scale_int(&k))).collect() }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Scalar::one();
        for _ in 0..n {
            out = &out * self;
        }
        out
    }

    /// Numeric value with `c_p = cos(t_p/2)`, `s_p = sin(t_p/2)`.
    pub fn eval(&self, angles: &[f64]) -> Result<Complex64> {
        let mut v = Complex64::new(0.0, 0.0);
        for (m, q) in &self.terms {
            v += q.to_complex() * m.eval(angles)?;
        }
        Ok(v)
    }

    /// `(c_p + i s_p)^n = exp(i n t_p / 2)`, any integer `n`.
    pub fn cis_half(n: i64, p: usize) -> Self {
        let base = &Scalar::c(p) + &(&Scalar::i() * &Scalar::s(p));
        let v = base.pow(n.unsigned_abs() as u32);
        if n < 0 {
            v.conj()
        } else {
            v
        }
    }

    /// `exp(i k t_p)` expanded in the half-angle ring.
    pub fn exp_i_kt(k: i64, p: usize) -> Self {
        Self::cis_half(2 * k, p)
    }

    /// `cos(k t_p)`.
    pub fn cos_kt(k: i64, p: usize) -> Self {
        Self::exp_i_kt(k, p).re_part()
    }

    /// `sin(k t_p)`.
    pub fn sin_kt(k: i64, p: usize) -> Self {
        Self::exp_i_kt(k, p).im_part()
    }
}

fn accumulate(acc: &mut BTreeMap<TrigMonomial, GaussianRational>, m: TrigMonomial, q: GaussianRational) {
    use std::collections::btree_map::Entry;
    match acc.entry(m) {
        Entry::Vacant(e) => {
            e.insert(q);
        }
        Entry::Occupied(mut e) => {
            let v = e.get() + &q;
            if v.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = v;
            }
        }
    }
}

impl From<GaussianRational> for Scalar {
    fn from(q: GaussianRational) -> Self {
        Scalar::constant(q)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < rhs.terms.len() {
            let (ma, qa) = &self.terms[i];
            let (mb, qb) = &rhs.terms[j];
            match ma.cmp(mb) {
                std::cmp::Ordering::Less => {
                    out.push((*ma, qa.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*mb, qb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let q = qa + qb;
                    if !q.is_zero() {
                        out.push((*ma, q));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&rhs.terms[j..]);
        Scalar { terms: out }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { terms: self.terms.iter().map(|(m, q)| (*m, -q)).collect() }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let Some(q) = self.as_constant() {
            return rhs.scale(&q);
        }
        if let Some(q) = rhs.as_constant() {
            return self.scale(&q);
        }
        let mut acc = BTreeMap::new();
        for (ma, qa) in &self.terms {
            for (mb, qb) in &rhs.terms {
                let q = qa * qb;
                for (m, k) in ma.mul(mb) {
                    let qk = if k == 1 { q.clone() } else { q.scale_int(&BigInt::from(k)) };
                    accumulate(&mut acc, m, qk);
                }
            }
        }
        Scalar::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, q)) in self.terms.iter().enumerate() {
            let mono = m.to_string();
            let coeff = q.to_string();
            let (neg, body) = match coeff.strip_prefix('-') {
                Some(rest) if !coeff.starts_with("(") => (true, rest.to_string()),
                _ => (false, coeff),
            };
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            match (mono.is_empty(), body.as_str()) {
                (true, b) => write!(f, "{b}")?,
                (false, "1") => write!(f, "{mono}")?,
                (false, b) => write!(f, "{b}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_identity_and_cancellation() {
        let x = &Scalar::c(1) + &Scalar::ratio(1, 3);
        assert_eq!(&Scalar::zero() + &x, x);
        assert_eq!(&Scalar::ratio(1, 2) + &Scalar::ratio(1, 2), Scalar::one());
        assert!((&Scalar::c(1) + &(-&Scalar::c(1))).is_zero());
    }

    #[test]
    fn reduction_rules() {
        let s = Scalar::s(1);
        assert_eq!(&s * &s, &Scalar::one() - &(&Scalar::c(1) * &Scalar::c(1)));
        assert!((&Scalar::eps() * &Scalar::eps()).is_zero());
        assert_eq!(&Scalar::i() * &Scalar::i(), Scalar::from_int(-1));
    }

    #[test]
    fn evaluation() {
        let c = Scalar::c(1);
        let s = Scalar::s(1);
        assert!((c.eval(&[0.0]).unwrap().re - 1.0).abs() < 1e-15);
        let cos_t = &(&c * &c) - &(&s * &s);
        assert!(cos_t.eval(&[std::f64::consts::FRAC_PI_2]).unwrap().norm() < 1e-12);
        let sin_t = (&c * &s).scale_int(2);
        let v = sin_t.eval(&[std::f64::consts::FRAC_PI_3]).unwrap();
        assert!((v.re - (std::f64::consts::FRAC_PI_3).sin()).abs() < 1e-12);
        assert_eq!(Scalar::eps().eval(&[]), Err(Error::InfinitesimalNotEvaluable));
        assert_eq!(Scalar::c(2).eval(&[0.1]), Err(Error::MissingAngle(2)));
    }

    #[test]
    fn exp_i_kt_examples() {
        assert_eq!(Scalar::exp_i_kt(0, 1), Scalar::one());
        let c = Scalar::c(1);
        let s = Scalar::s(1);
        let re = &(&c * &c).scale_int(2) - &Scalar::one();
        let im = (&c * &s).scale_int(2);
        assert_eq!(Scalar::exp_i_kt(1, 1), &re + &(&Scalar::i() * &im));
        assert_eq!(Scalar::exp_i_kt(-1, 1), &re - &(&Scalar::i() * &im));
    }

    #[test]
    fn eps_split_round_trip() {
        let x = &Scalar::c(2) + &(&Scalar::eps() * &Scalar::s(1));
        let (a, b) = x.eps_split();
        assert_eq!(a, Scalar::c(2));
        assert_eq!(b, Scalar::s(1));
    }

    #[test]
    fn display() {
        let x = &(&Scalar::c(1) * &Scalar::s(1)).scale_int(-2) + &Scalar::ratio(1, 2);
        assert_eq!(x.to_string(), "1/2 - 2*c1*s1");
        assert_eq!(Scalar::i().to_string(), "i");
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn term() -> impl Strategy<Value = Scalar> {
        (prop::collection::vec(0u8..3, 2), prop::collection::vec(0u8..2, 2), any::<bool>(), -9i64..9, -9i64..9, 1i64..6)
            .prop_map(|(c, s, eps, re, im, den)| {
                let q = GaussianRational::new(BigRational::new(re.into(), den.into()), BigRational::from_integer(im.into()));
                Scalar::monomial(TrigMonomial::new(&c, &s, eps).unwrap(), q)
            })
    }

    fn scalar() -> impl Strategy<Value = Scalar> {
        prop::collection::vec(term(), 0..4).prop_map(|ts| ts.iter().fold(Scalar::zero(), |acc, t| &acc + t))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a * &Scalar::one(), a);
        }

        #[test]
        fn exp_is_additive(a in -12i64..12, b in -12i64..12, p in 1usize..4) {
            prop_assert_eq!(&Scalar::exp_i_kt(a, p) * &Scalar::exp_i_kt(b, p), Scalar::exp_i_kt(a + b, p));
        }

        #[test]
        fn conj_is_a_ring_map(a in scalar(), b in scalar()) {
            prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
            prop_assert_eq!(&a.re_part() + &(&Scalar::i() * &a.im_part()), a);
        }

        #[test]
        fn eval_is_multiplicative(a in scalar(), b in scalar(), t1 in -7.0f64..7.0, t2 in -7.0f64..7.0) {
            let (a, b) = (a.eps_split().0, b.eps_split().0);
            let lhs = (&a * &b).eval(&[t1, t2]).unwrap();
            let rhs = a.eval(&[t1, t2]).unwrap() * b.eval(&[t1, t2]).unwrap();
            prop_assert!((lhs - rhs).norm() <= 1e-9 * (1.0 + rhs.norm()));
        }
    }
}
