//! The split Clifford algebra generated by `e_j^+`, `e_j^-`.
//!
//! Blades are bitmasks over the interleaved generator order
//! `e_1^+ < e_1^- < e_2^+ < ...`: bit `2(j-1)` is `e_j^+`, bit `2(j-1)+1` is
//! `e_j^-`. Same-sign generators square to zero, `{e_j^+, e_j^-} = 1`, and
//! generators with different indices anticommute.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Largest supported `m`; the algebra then has `2^16` blades.
pub const MAX_CLIFFORD_DIM: usize = 8;

pub type Blade = u32;

/// Which of the two generators at an index.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

pub fn generator_bit(j: usize, sign: Sign) -> Blade {
    let base = 2 * (j as u32 - 1);
    match sign {
        Sign::Plus => 1 << base,
        Sign::Minus => 1 << (base + 1),
    }
}

/// Right-multiplies the blade `w` by a single generator; returns signed
/// blades (at most two).
fn blade_times_generator(w: Blade, g: u32) -> ([(Blade, i32); 2], usize) {
    let j = g / 2;
    let above = w >> (2 * j + 2);
    let sign = if above.count_ones() % 2 == 1 { -1 } else { 1 };
    let block = (w >> (2 * j)) & 0b11;
    let plus = g.is_multiple_of(2);
    let rest = w & !(0b11 << (2 * j));
    let put = |b: u32| rest | (b << (2 * j));
    let none = [(0, 0); 2];
    match (block, plus) {
        (0b00, true) => ([(put(0b01), sign), (0, 0)], 1),
        (0b00, false) => ([(put(0b10), sign), (0, 0)], 1),
        (0b01, true) | (0b10, false) | (0b11, false) => (none, 0),
        // e+ e- in sorted order already
        (0b01, false) => ([(put(0b11), sign), (0, 0)], 1),
        // e- e+ = 1 - e+ e-
        (0b10, true) => ([(put(0b00), sign), (put(0b11), -sign)], 2),
        // e+ e- e+ = e+
        (0b11, true) => ([(put(0b01), sign), (0, 0)], 1),
        _ => unreachable!(),
    }
}

/// Product of two blades as a signed combination of blades.
pub fn blade_mul(a: Blade, b: Blade) -> Vec<(Blade, i32)> {
    let mut cur: Vec<(Blade, i32)> = vec![(a, 1)];
    let mut rest = b;
    while rest != 0 {
        let g = rest.trailing_zeros();
        rest &= rest - 1;
        let mut next: Vec<(Blade, i32)> = Vec::with_capacity(cur.len() * 2);
        for (w, k) in cur {
            let (out, n) = blade_times_generator(w, g);
            for &(bw, s) in &out[..n] {
                match next.iter_mut().find(|(x, _)| *x == bw) {
                    Some(e) => e.1 += s * k,
                    None => next.push((bw, s * k)),
                }
            }
        }
        next.retain(|(_, k)| *k != 0);
        cur = next;
    }
    cur
}

/// Words in the split Clifford algebra with [`Scalar`] coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliffordElement {
    dim: usize,
    terms: BTreeMap<Blade, Scalar>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Involution {
    Reversion,
    Conjugation,
    Main,
}

impl CliffordElement {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_CLIFFORD_DIM, "Clifford dimension {dim} too large");
        CliffordElement { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, s: Scalar) -> Self {
        Self::blade(dim, 0, s)
    }

    pub fn one(dim: usize) -> Self {
        Self::scalar(dim, Scalar::one())
    }

    pub fn blade(dim: usize, blade: Blade, s: Scalar) -> Self {
        let mut out = Self::zero(dim);
        if !s.is_zero() {
            out.terms.insert(blade, s);
        }
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Blade, Scalar)>>(dim: usize, it: I) -> Self {
        let mut out = Self::zero(dim);
        for (b, s) in it {
            out.add_term(b, &s);
        }
        out
    }

    pub fn generator(dim: usize, j: usize, sign: Sign) -> Self {
        assert!((1..=dim).contains(&j), "generator index {j} outside 1..={dim}");
        Self::blade(dim, generator_bit(j, sign), Scalar::one())
    }

    /// `e_j = e_j^+ + e_j^-`.
    pub fn e(dim: usize, j: usize) -> Self {
        &Self::generator(dim, j, Sign::Plus) + &Self::generator(dim, j, Sign::Minus)
    }

    /// `e_j^perp = e_j^+ - e_j^-`.
    pub fn e_perp(dim: usize, j: usize) -> Self {
        &Self::generator(dim, j, Sign::Plus) - &Self::generator(dim, j, Sign::Minus)
    }

    /// Ordered product `e_{a_1} ... e_{a_k}`.
    pub fn e_word(dim: usize, idx: &[usize]) -> Self {
        idx.iter().fold(Self::one(dim), |acc, &j| acc.mul(&Self::e(dim, j)))
    }

    /// Ordered product `e_{a_1}^perp ... e_{a_k}^perp`.
    pub fn e_perp_word(dim: usize, idx: &[usize]) -> Self {
        idx.iter().fold(Self::one(dim), |acc, &j| acc.mul(&Self::e_perp(dim, j)))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn terms(&self) -> &BTreeMap<Blade, Scalar> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, blade: Blade) -> Scalar {
        self.terms.get(&blade).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, blade: Blade, s: &Scalar) {
        if s.is_zero() {
            return;
        }
        let sum = match self.terms.get(&blade) {
            Some(v) => v + s,
            None => s.clone(),
        };
        if sum.is_zero() {
            self.terms.remove(&blade);
        } else {
            self.terms.insert(blade, sum);
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (b, s) in &other.terms {
            out.add_term(*b, s);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        check_dim(self.dim, other.dim)?;
        let mut acc: BTreeMap<Blade, Scalar> = BTreeMap::new();
        for (ba, sa) in &self.terms {
            for (bb, sb) in &other.terms {
                let prod = sa * sb;
                if prod.is_zero() {
                    continue;
                }
                for (b, k) in blade_mul(*ba, *bb) {
                    let v = prod.scale_int(k as i128);
                    let e = acc.entry(b).or_default();
                    *e += &v;
                }
            }
        }
        acc.retain(|_, s| !s.is_zero());
        Ok(CliffordElement { dim: self.dim, terms: acc })
    }

    /// Product; panics on mismatched dimensions.
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("Clifford dimension mismatch")
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(b, c)| (*b, c * s)))
    }

    pub fn neg(&self) -> Self {
        CliffordElement {
            dim: self.dim,
            terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect(),
        }
    }

    /// Applies a function to every coefficient, dropping zeros.
    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.dim, self.terms.iter().map(|(b, c)| (*b, f(c))))
    }

    /// Projection onto blades of word length `k`.
    pub fn grade_part(&self, k: usize) -> Self {
        CliffordElement {
            dim: self.dim,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| b.count_ones() as usize == k)
                .map(|(b, s)| (*b, s.clone()))
                .collect(),
        }
    }

    /// The grade-0 coefficient.
    pub fn scalar_part(&self) -> Scalar {
        self.coeff(0)
    }

    fn reversed_blade(&self, b: Blade) -> Self {
        let mut gens = Vec::new();
        let mut rest = b;
        while rest != 0 {
            gens.push(rest.trailing_zeros());
            rest &= rest - 1;
        }
        let mut out = Self::one(self.dim);
        for g in gens.into_iter().rev() {
            out = out.mul(&Self::blade(self.dim, 1 << g, Scalar::one()));
        }
        out
    }

    pub fn involution(&self, kind: Involution) -> Self {
        let mut out = Self::zero(self.dim);
        for (b, s) in &self.terms {
            let odd = b.count_ones() % 2 == 1;
            let (image, coeff) = match kind {
                Involution::Reversion => (self.reversed_blade(*b), s.clone()),
                Involution::Conjugation => {
                    let c = s.conj();
                    (self.reversed_blade(*b), if odd { -c } else { c })
                }
                Involution::Main => {
                    let c = s.conj();
                    (Self::blade(self.dim, *b, Scalar::one()), if odd { -c } else { c })
                }
            };
            for (ib, is) in &image.terms {
                out.add_term(*ib, &(is * &coeff));
            }
        }
        out
    }

    pub fn reversion(&self) -> Self {
        self.involution(Involution::Reversion)
    }

    pub fn conjugation(&self) -> Self {
        self.involution(Involution::Conjugation)
    }

    pub fn main_involution(&self) -> Self {
        self.involution(Involution::Main)
    }

    pub fn has_eps(&self) -> bool {
        self.terms.values().any(Scalar::has_eps)
    }
}

pub(crate) fn check_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(a, b))
    }
}

impl std::ops::Add for &CliffordElement {
    type Output = CliffordElement;
    fn add(self, rhs: &CliffordElement) -> CliffordElement {
        self.try_add(rhs).expect("Clifford dimension mismatch")
    }
}

impl std::ops::Sub for &CliffordElement {
    type Output = CliffordElement;
    fn sub(self, rhs: &CliffordElement) -> CliffordElement {
        self + &rhs.neg()
    }
}

impl std::ops::Mul for &CliffordElement {
    type Output = CliffordElement;
    fn mul(self, rhs: &CliffordElement) -> CliffordElement {
        CliffordElement::mul(self, rhs)
    }
}

/// Text tokens of a blade, e.g. `["1+", "2-"]`.
pub fn blade_tokens(b: Blade) -> Vec<String> {
    let mut out = Vec::new();
    let mut rest = b;
    while rest != 0 {
        let g = rest.trailing_zeros();
        rest &= rest - 1;
        out.push(format!("{}{}", g / 2 + 1, if g.is_multiple_of(2) { '+' } else { '-' }));
    }
    out
}

/// Parses blade tokens; they must be strictly increasing in generator order.
pub fn parse_blade(dim: usize, tokens: &[String]) -> Result<Blade> {
    let mut blade: Blade = 0;
    let mut last: Option<u32> = None;
    for t in tokens {
        let (num, sign) = t.split_at(t.len().saturating_sub(1));
        let j: usize = num.parse().map_err(|_| Error::Parse(format!("bad generator {t:?}")))?;
        if j == 0 || j > dim {
            return Err(Error::Parse(format!("generator {t:?} outside 1..={dim}")));
        }
        let bit = match sign {
            "+" => generator_bit(j, Sign::Plus),
            "-" => generator_bit(j, Sign::Minus),
            _ => return Err(Error::Parse(format!("bad generator {t:?}"))),
        };
        let pos = bit.trailing_zeros();
        if last.is_some_and(|l| l >= pos) {
            return Err(Error::Parse("blade word must be strictly increasing".into()));
        }
        last = Some(pos);
        blade |= bit;
    }
    Ok(blade)
}

impl fmt::Display for CliffordElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(b, s)| {
                if *b == 0 {
                    format!("({s})")
                } else {
                    format!("({s})*{}", blade_tokens(*b).join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(dim: usize, j: usize, s: Sign) -> CliffordElement {
        CliffordElement::generator(dim, j, s)
    }

    #[test]
    fn generator_products() {
        let p = g(1, 1, Sign::Plus);
        let n = g(1, 1, Sign::Minus);
        assert!(p.mul(&p).is_zero());
        assert!(n.mul(&n).is_zero());
        let pn = p.mul(&n);
        assert_eq!(n.mul(&p), &CliffordElement::one(1) - &pn);
        let e = CliffordElement::e(1, 1);
        assert_eq!(e.mul(&e), CliffordElement::one(1));
        let ep = CliffordElement::e_perp(1, 1);
        assert_eq!(ep.mul(&ep), CliffordElement::one(1).neg());
    }

    #[test]
    fn anticommutators_up_to_four() {
        for m in 1..=4 {
            for j in 1..=m {
                for k in 1..=m {
                    for (a, b) in [(Sign::Plus, Sign::Plus), (Sign::Minus, Sign::Minus), (Sign::Plus, Sign::Minus)] {
                        let x = g(m, j, a);
                        let y = g(m, k, b);
                        let anti = &x.mul(&y) + &y.mul(&x);
                        let expect = if a != b && j == k {
                            CliffordElement::one(m)
                        } else {
                            CliffordElement::zero(m)
                        };
                        assert_eq!(anti, expect, "m={m} j={j} k={k}");
                    }
                }
            }
        }
    }

    #[test]
    fn involution_examples() {
        let m = 2;
        let a = g(m, 1, Sign::Plus).mul(&g(m, 2, Sign::Minus));
        assert_eq!(a.reversion(), a.neg());
        assert_eq!(CliffordElement::e(m, 1).conjugation(), CliffordElement::e(m, 1).neg());
        assert_eq!(g(m, 1, Sign::Plus).main_involution(), g(m, 1, Sign::Plus).neg());
        // reversal of a same-index pair splits into two terms
        let pn = g(1, 1, Sign::Plus).mul(&g(1, 1, Sign::Minus));
        assert_eq!(pn.reversion(), g(1, 1, Sign::Minus).mul(&g(1, 1, Sign::Plus)));
    }

    #[test]
    fn grade_projection() {
        let p = g(1, 1, Sign::Plus);
        let n = g(1, 1, Sign::Minus);
        let x = &CliffordElement::one(1) + &p.mul(&n);
        assert_eq!(x.grade_part(0), CliffordElement::one(1));
        assert!(p.grade_part(0).is_zero());
        assert_eq!(n.mul(&p).grade_part(2), p.mul(&n).neg());
    }

    #[test]
    fn blade_tokens_round_trip() {
        let b = generator_bit(1, Sign::Plus) | generator_bit(2, Sign::Minus);
        let toks = blade_tokens(b);
        assert_eq!(toks, vec!["1+", "2-"]);
        assert_eq!(parse_blade(2, &toks).unwrap(), b);
        assert!(parse_blade(2, &["2-".into(), "1+".into()]).is_err());
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = CliffordElement::one(1);
        let b = CliffordElement::one(2);
        assert_eq!(a.try_mul(&b), Err(Error::DimensionMismatch(1, 2)));
    }
}

#[cfg(test)]
mod props {
    use super::*;
    use proptest::prelude::*;

    fn element(m: usize) -> impl Strategy<Value = CliffordElement> {
        prop::collection::vec((0u32..1 << (2 * m), -5i64..5), 0..5)
            .prop_map(move |ts| CliffordElement::from_terms(m, ts.into_iter().map(|(b, k)| (b, Scalar::from_int(k)))))
    }

    fn triple() -> impl Strategy<Value = (CliffordElement, CliffordElement, CliffordElement)> {
        (1usize..=4).prop_flat_map(|m| (element(m), element(m), element(m)))
    }

    proptest! {
        #[test]
        fn associative_and_distributive((a, b, c) in triple()) {
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&(&b + &c)), &a.mul(&b) + &a.mul(&c));
        }

        #[test]
        fn involutions((a, b, _) in triple()) {
            prop_assert_eq!(a.mul(&b).reversion(), b.reversion().mul(&a.reversion()));
            prop_assert_eq!(a.mul(&b).conjugation(), b.conjugation().mul(&a.conjugation()));
            prop_assert_eq!(a.mul(&b).main_involution(), a.main_involution().mul(&b.main_involution()));
            prop_assert_eq!(a.reversion().reversion(), a);
        }
    }
}
