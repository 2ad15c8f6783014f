//! JSON wire formats for scalars, Clifford elements, operators, states and
//! spin elements. Serialization is canonical, so parse followed by
//! serialize reproduces the input bytes of any serialized value.

use std::str::FromStr;

use num::{BigInt, BigRational, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::clifford::{blade_tokens, parse_blade, CliffordElement};
use crate::dist::DistState;
use crate::error::{Error, Result};
use crate::operator::{MultiIndex, OperatorElement, OperatorWord, PolyState, MAX_DIM};
use crate::repr::HarmonicDims;
use crate::scalar::{GaussianRational, Scalar, TrigMonomial};
use crate::spin::{Family, RAlgebraElement, RVector, SpinElement};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    re: (Number, Number),
    im: (Number, Number),
    c: Vec<u8>,
    s: Vec<u8>,
    eps: u8,
}

type ScalarJson = Vec<TermJson>;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BladeJson {
    word: Vec<String>,
    coeff: ScalarJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CliffordJson {
    blades: Vec<BladeJson>,
    m: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyTermJson {
    alpha: Vec<u8>,
    coeff: CliffordJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    m: usize,
    terms: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DistTermJson {
    beta: Vec<u8>,
    coeff: CliffordJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DistJson {
    m: usize,
    terms: Vec<DistTermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpTermJson {
    xi: Vec<u8>,
    del: Vec<u8>,
    r: Vec<u8>,
    t: Vec<u8>,
    coeff: ScalarJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct OpJson {
    m: usize,
    terms: Vec<OpTermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RAlgTermJson {
    word: Vec<usize>,
    coeff: ScalarJson,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RAlgJson {
    family: String,
    m: usize,
    terms: Vec<RAlgTermJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpinJson {
    factors: Vec<Vec<ScalarJson>>,
    value: RAlgJson,
}

#[derive(Serialize, Deserialize)]
struct DimsRowJson {
    k: usize,
    formula: i64,
    rank: i64,
}

#[derive(Serialize, Deserialize)]
struct DimsJson {
    m: usize,
    rows: Vec<DimsRowJson>,
}

fn parse_err(e: impl std::fmt::Display) -> Error {
    Error::Parse(e.to_string())
}

fn big_number(n: &BigInt) -> Number {
    Number::from_str(&n.to_string()).expect("integers are valid JSON numbers")
}

fn rational_out(q: &BigRational) -> (Number, Number) {
    (big_number(q.numer()), big_number(q.denom()))
}

fn rational_in((n, d): &(Number, Number)) -> Result<BigRational> {
    let num = BigInt::from_str(&n.to_string()).map_err(parse_err)?;
    let den = BigInt::from_str(&d.to_string()).map_err(parse_err)?;
    if den.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRational::new(num, den))
}

fn scalar_out(s: &Scalar) -> ScalarJson {
    s.terms()
        .iter()
        .map(|(mono, q)| {
            let n = mono.angles_used();
            TermJson {
                re: rational_out(&q.re),
                im: rational_out(&q.im),
                c: (0..n).map(|p| mono.c_exp(p)).collect(),
                s: (0..n).map(|p| mono.s_exp(p)).collect(),
                eps: mono.has_eps() as u8,
            }
        })
        .collect()
}

fn scalar_in(js: &ScalarJson) -> Result<Scalar> {
    let mut out = Scalar::zero();
    for t in js {
        if t.eps > 1 {
            return Err(Error::Parse("eps must be 0 or 1".into()));
        }
        let q = GaussianRational::new(rational_in(&t.re)?, rational_in(&t.im)?);
        // Sine powers above one are reduced by the ring itself.
        let mono = TrigMonomial::new(&t.c, &vec![0; t.s.len()], t.eps == 1)?;
        let mut term = Scalar::monomial(mono, q);
        for (p, &e) in t.s.iter().enumerate() {
            term = &term * &Scalar::s(p + 1).pow(e as u32);
        }
        out += &term;
    }
    Ok(out)
}

fn clifford_out(c: &CliffordElement) -> CliffordJson {
    CliffordJson {
        blades: c.terms().iter().map(|(b, s)| BladeJson { word: blade_tokens(*b), coeff: scalar_out(s) }).collect(),
        m: c.dim(),
    }
}

fn clifford_in(js: &CliffordJson) -> Result<CliffordElement> {
    check_m(js.m)?;
    let mut out = CliffordElement::zero(js.m);
    for b in &js.blades {
        // Words need not be canonical on input: multiply generators out.
        let blade = match parse_blade(js.m, &b.word) {
            Ok(blade) => CliffordElement::blade(js.m, blade, Scalar::one()),
            Err(_) => word_product(js.m, &b.word)?,
        };
        out = &out + &blade.scale(&scalar_in(&b.coeff)?);
    }
    Ok(out)
}

fn word_product(m: usize, tokens: &[String]) -> Result<CliffordElement> {
    let mut out = CliffordElement::one(m);
    for t in tokens {
        let g = parse_blade(m, std::slice::from_ref(t))?;
        out = out.mul(&CliffordElement::blade(m, g, Scalar::one()));
    }
    Ok(out)
}

fn check_m(m: usize) -> Result<()> {
    if m == 0 || m > MAX_DIM {
        return Err(Error::Parse(format!("dimension {m} outside 1..={MAX_DIM}")));
    }
    Ok(())
}

fn index_out(m: usize, a: &MultiIndex) -> Vec<u8> {
    a[..m].to_vec()
}

fn index_in(m: usize, v: &[u8]) -> Result<MultiIndex> {
    if v.len() != m {
        return Err(Error::Parse(format!("multi-index of length {} in dimension {m}", v.len())));
    }
    let mut a = [0u8; MAX_DIM];
    a[..m].copy_from_slice(v);
    Ok(a)
}

fn mask_out(m: usize, mask: u8) -> Vec<u8> {
    (0..m).map(|j| (mask >> j) & 1).collect()
}

fn mask_in(m: usize, v: &[u8]) -> Result<u8> {
    if v.len() != m || v.iter().any(|&b| b > 1) {
        return Err(Error::Parse("flag arrays must have length m and entries 0 or 1".into()));
    }
    Ok(v.iter().enumerate().fold(0u8, |acc, (j, &b)| acc | (b << j)))
}

fn to_string<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serialization cannot fail")
}

fn from_str<'a, T: Deserialize<'a>>(s: &'a str) -> Result<T> {
    serde_json::from_str(s).map_err(parse_err)
}

pub fn scalar_to_json(s: &Scalar) -> String {
    to_string(&scalar_out(s))
}

pub fn scalar_from_json(s: &str) -> Result<Scalar> {
    scalar_in(&from_str(s)?)
}

pub fn clifford_to_json(c: &CliffordElement) -> String {
    to_string(&clifford_out(c))
}

pub fn clifford_from_json(s: &str) -> Result<CliffordElement> {
    clifford_in(&from_str(s)?)
}

fn poly_out(f: &PolyState) -> PolyJson {
    let m = f.dim();
    PolyJson {
        m,
        terms: f.terms().iter().map(|(a, c)| PolyTermJson { alpha: index_out(m, a), coeff: clifford_out(c) }).collect(),
    }
}

fn poly_in(js: &PolyJson) -> Result<PolyState> {
    check_m(js.m)?;
    let mut out = PolyState::zero(js.m);
    for t in &js.terms {
        let c = clifford_in(&t.coeff)?;
        if c.dim() != js.m {
            return Err(Error::DimensionMismatch(js.m, c.dim()));
        }
        out = &out + &PolyState::monomial(index_in(js.m, &t.alpha)?, c);
    }
    Ok(out)
}

pub fn poly_to_json(f: &PolyState) -> String {
    to_string(&poly_out(f))
}

pub fn poly_from_json(s: &str) -> Result<PolyState> {
    poly_in(&from_str(s)?)
}

pub fn dist_to_json(d: &DistState) -> String {
    let m = d.dim();
    to_string(&DistJson {
        m,
        terms: d.terms().iter().map(|(b, c)| DistTermJson { beta: index_out(m, b), coeff: clifford_out(c) }).collect(),
    })
}

pub fn dist_from_json(s: &str) -> Result<DistState> {
    let js: DistJson = from_str(s)?;
    check_m(js.m)?;
    let mut out = DistState::zero(js.m);
    for t in &js.terms {
        let c = clifford_in(&t.coeff)?;
        if c.dim() != js.m {
            return Err(Error::DimensionMismatch(js.m, c.dim()));
        }
        out = &out + &DistState::monomial(index_in(js.m, &t.beta)?, c);
    }
    Ok(out)
}

pub fn operator_to_json(a: &OperatorElement) -> String {
    let m = a.dim();
    to_string(&OpJson {
        m,
        terms: a
            .terms()
            .iter()
            .map(|(w, s)| OpTermJson {
                xi: index_out(m, &w.xi),
                del: index_out(m, &w.del),
                r: mask_out(m, w.r),
                t: mask_out(m, w.t),
                coeff: scalar_out(s),
            })
            .collect(),
    })
}

pub fn operator_from_json(s: &str) -> Result<OperatorElement> {
    let js: OpJson = from_str(s)?;
    check_m(js.m)?;
    let mut out = OperatorElement::zero(js.m);
    for t in &js.terms {
        let w = OperatorWord {
            xi: index_in(js.m, &t.xi)?,
            del: index_in(js.m, &t.del)?,
            r: mask_in(js.m, &t.r)?,
            t: mask_in(js.m, &t.t)?,
        };
        out = &out + &OperatorElement::word(js.m, w, scalar_in(&t.coeff)?);
    }
    Ok(out)
}

fn ralg_out(a: &RAlgebraElement) -> RAlgJson {
    RAlgJson {
        family: a.family().name().to_string(),
        m: a.dim(),
        terms: a
            .terms()
            .iter()
            .map(|(mask, s)| RAlgTermJson {
                word: (0..a.dim()).filter(|j| mask >> j & 1 == 1).map(|j| j + 1).collect(),
                coeff: scalar_out(s),
            })
            .collect(),
    }
}

fn family_in(name: &str) -> Result<Family> {
    match name {
        "R" => Ok(Family::R),
        "T" => Ok(Family::T),
        other => Err(Error::Parse(format!("unknown family {other:?}"))),
    }
}

fn ralg_in(js: &RAlgJson) -> Result<RAlgebraElement> {
    check_m(js.m)?;
    let family = family_in(&js.family)?;
    let mut out = RAlgebraElement::zero(family, js.m);
    for t in &js.terms {
        if t.word.iter().any(|&j| j == 0 || j > js.m) {
            return Err(Error::Parse(format!("word {:?} outside 1..={}", t.word, js.m)));
        }
        let w = RAlgebraElement::word(family, js.m, &t.word);
        out = &out + &w.scale(&scalar_in(&t.coeff)?);
    }
    Ok(out)
}

pub fn ralg_to_json(a: &RAlgebraElement) -> String {
    to_string(&ralg_out(a))
}

pub fn ralg_from_json(s: &str) -> Result<RAlgebraElement> {
    ralg_in(&from_str(s)?)
}

pub fn spin_to_json(s: &SpinElement) -> String {
    to_string(&SpinJson {
        factors: s.factors().iter().map(|v| v.coords.iter().map(scalar_out).collect()).collect(),
        value: ralg_out(s.value()),
    })
}

/// Parses a spin element; the value must equal the product of the factors.
pub fn spin_from_json(s: &str) -> Result<SpinElement> {
    let js: SpinJson = from_str(s)?;
    let value = ralg_in(&js.value)?;
    let factors = js
        .factors
        .iter()
        .map(|v| Ok(RVector::new(value.family(), v.iter().map(scalar_in).collect::<Result<_>>()?)))
        .collect::<Result<Vec<_>>>()?;
    SpinElement::from_parts(value, factors)
}

pub fn dims_to_json(m: usize, rows: &[HarmonicDims]) -> String {
    to_string(&DimsJson {
        m,
        rows: rows.iter().map(|d| DimsRowJson { k: d.k, formula: d.formula, rank: d.rank }).collect(),
    })
}

/// Either kind of state file.
#[derive(Clone, Debug, PartialEq)]
pub enum StateFile {
    Poly(PolyState),
    Dist(DistState),
}

/// Parses a state file, telling polynomials (`alpha`) from distributions
/// (`beta`) by the term keys. An empty term list reads as a polynomial.
pub fn state_from_json(s: &str) -> Result<StateFile> {
    let v: serde_json::Value = serde_json::from_str(s).map_err(parse_err)?;
    let is_dist = v
        .get("terms")
        .and_then(|t| t.as_array())
        .and_then(|t| t.first())
        .is_some_and(|t| t.get("beta").is_some());
    if is_dist {
        Ok(StateFile::Dist(dist_from_json(s)?))
    } else {
        Ok(StateFile::Poly(poly_from_json(s)?))
    }
}

pub fn state_to_json(st: &StateFile) -> String {
    match st {
        StateFile::Poly(f) => poly_to_json(f),
        StateFile::Dist(d) => dist_to_json(d),
    }
}

#[derive(Serialize)]
struct NumericBladeJson {
    word: Vec<String>,
    re: f64,
    im: f64,
}

#[derive(Serialize)]
struct NumericTermJson {
    index: Vec<u8>,
    blades: Vec<NumericBladeJson>,
}

#[derive(Serialize)]
struct NumericStateJson {
    kind: &'static str,
    m: usize,
    angles: Vec<f64>,
    terms: Vec<NumericTermJson>,
}

/// Evaluated coefficients below this magnitude are dropped.
pub const NUMERIC_ZERO: f64 = 1e-12;

/// A state with every coefficient evaluated at the given angles. `index` is
/// the `alpha` of a polynomial or the `beta` of a distribution. Blades that
/// evaluate to zero, and terms left without blades, are omitted.
pub fn state_to_numeric_json(st: &StateFile, angles: &[f64]) -> Result<String> {
    let (kind, m, terms) = match st {
        StateFile::Poly(f) => ("poly", f.dim(), f.terms()),
        StateFile::Dist(d) => ("dist", d.dim(), d.terms()),
    };
    let terms = terms
        .iter()
        .map(|(a, c)| {
            let mut blades = Vec::new();
            for (b, s) in c.terms() {
                let v = s.eval(angles)?;
                if v.norm() >= NUMERIC_ZERO {
                    blades.push(NumericBladeJson { word: blade_tokens(*b), re: v.re, im: v.im });
                }
            }
            Ok(NumericTermJson { index: index_out(m, a), blades })
        })
        .filter(|t: &Result<NumericTermJson>| t.as_ref().map_or(true, |t| !t.blades.is_empty()))
        .collect::<Result<_>>()?;
    Ok(to_string(&NumericStateJson { kind, m, angles: angles.to_vec(), terms }))
}


#[cfg(test)]
mod props {
    use super::*;
    use crate::random;
    use crate::spin::exp_bivector;
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn states_round_trip(seed in any::<u64>(), m in 1usize..=3, k in 0usize..=3) {
            let mut rng = random::rng(seed);
            let f = random::homogeneous(&mut rng, m, k);
            let js = poly_to_json(&f);
            prop_assert_eq!(&poly_from_json(&js).unwrap(), &f);
            prop_assert_eq!(poly_to_json(&poly_from_json(&js).unwrap()), js);

            let d = DistState::from_terms(m, f.terms().iter().map(|(a, c)| (*a, c.clone())));
            let js = dist_to_json(&d);
            prop_assert_eq!(dist_to_json(&dist_from_json(&js).unwrap()), js);
        }

        #[test]
        fn symbolic_values_round_trip(seed in any::<u64>()) {
            let mut rng = random::rng(seed);
            let s = random::scalar(&mut rng, 3, true);
            let js = scalar_to_json(&s);
            prop_assert_eq!(scalar_to_json(&scalar_from_json(&js).unwrap()), js);
            let sp = random::spin(&mut rng, Family::R, 3, 2).unwrap();
            let js = spin_to_json(&sp);
            prop_assert_eq!(spin_to_json(&spin_from_json(&js).unwrap()), js);
            let rot = exp_bivector(Family::T, 2, &[(1, (2, 1))]).unwrap();
            let js = ralg_to_json(rot.value());
            prop_assert_eq!(ralg_to_json(&ralg_from_json(&js).unwrap()), js);
        }
    }
}
