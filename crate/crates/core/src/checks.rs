//! Identity checks over the whole engine. Each check returns `Ok(())` or a
//! message naming the first failing instance; the self-test suites and the
//! acceptance run share them with different sizes.

use std::ops::Neg;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::action::{act, eta_of, exp_l12, first_order, gen_dr, gen_l, infinitesimal, ActionKind, Infinitesimal};
use crate::clifford::{CliffordElement, Sign};
use crate::dist::{
    delta_shift_1_0, dist_apply, eigen_b, exp_l12_dist, plane_eigenvalue, plane_generator, plane_indices, rotate_dist,
    DistState,
};
use crate::operator::{
    dirac, euler, laplace, multi_indices, op_apply, unit_index, vec_xi, MultiIndex, OperatorElement, OperatorWord,
    PolyState, MAX_DIM,
};
use crate::random;
use crate::repr::{
    coordinates, dim_hk0, eigen_poly, fischer_decompose, frame, half_weight, hw_half, hw_integer, hw_perp,
    idempotent_i, idempotent_i_literal_odd, integer_weight, left_ideal_rank, odd_tail, pairing_with_xi, pk0_basis,
    torus, torus_weight,
};
use crate::scalar::{GaussianRational as Q, Scalar};
use crate::spin::{chi, exp_bivector, so_matrix, Family, RAlgebraElement, RVector, RotationMatrix, SpinElement};

pub type Outcome = std::result::Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($arg:tt)*) => {
        if !$cond {
            return Err(format!($($arg)*));
        }
    };
}

fn ok<T>(r: crate::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn int(n: i64) -> Scalar {
    Scalar::from_int(n)
}

fn op_zero(m: usize) -> OperatorElement {
    OperatorElement::zero(m)
}

fn delta_op(m: usize, j: usize, k: usize, v: &OperatorElement) -> OperatorElement {
    if j == k {
        v.clone()
    } else {
        op_zero(m)
    }
}

fn monomials_up_to(m: usize, max_deg: usize) -> Vec<MultiIndex> {
    (0..=max_deg).flat_map(|k| multi_indices(m, k)).collect()
}

fn cos_t(k: i64) -> Scalar {
    Scalar::cos_kt(k, 1)
}

fn sin_t(k: i64) -> Scalar {
    Scalar::sin_kt(k, 1)
}

fn xi_mono(m: usize, exps: &[u8]) -> MultiIndex {
    let mut a = [0u8; MAX_DIM];
    a[..exps.len()].copy_from_slice(exps);
    debug_assert!(exps.len() <= m);
    a
}

// ---------------------------------------------------------------- scalars

pub fn scalar_reductions() -> Outcome {
    for p in 1..=3 {
        let s2 = Scalar::s(p).pow(2);
        ensure!(s2 == &Scalar::one() - &Scalar::c(p).pow(2), "s_{p}^2 != 1 - c_{p}^2");
    }
    ensure!((&Scalar::eps() * &Scalar::eps()).is_zero(), "eps^2 != 0");
    ensure!(&Scalar::i() * &Scalar::i() == int(-1), "i^2 != -1");
    Ok(())
}

pub fn scalar_ring_axioms(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let a = random::scalar(rng, 2, true);
        let b = random::scalar(rng, 2, true);
        let c = random::scalar(rng, 2, true);
        ensure!(&(&a * &b) * &c == &a * &(&b * &c), "associativity fails for {a}, {b}, {c}");
        ensure!(&a * &(&b + &c) == &(&a * &b) + &(&a * &c), "distributivity fails for {a}, {b}, {c}");
        ensure!(&a * &b == &b * &a, "commutativity fails for {a}, {b}");
        ensure!(&a + &b == &b + &a, "additive commutativity fails");
        ensure!((&a + &a.scale_int(-1)).is_zero(), "a + (-1)a != 0");
    }
    Ok(())
}

pub fn exp_additivity(range: i64) -> Outcome {
    for a in -range..=range {
        for b in -range..=range {
            let lhs = &Scalar::exp_i_kt(a, 1) * &Scalar::exp_i_kt(b, 1);
            ensure!(lhs == Scalar::exp_i_kt(a + b, 1), "exp(i{a}t) exp(i{b}t) != exp(i{}t)", a + b);
        }
    }
    Ok(())
}

pub fn eval_multiplicative(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let a = random::scalar(rng, 3, false);
        let b = random::scalar(rng, 3, false);
        let angles: Vec<f64> = (0..3).map(|_| rng.gen_range(-6.0..6.0)).collect();
        let lhs = ok((&a * &b).eval(&angles))?;
        let rhs = ok(a.eval(&angles))? * ok(b.eval(&angles))?;
        ensure!((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()), "evaluation not multiplicative at {angles:?}");
    }
    ensure!(Scalar::eps().eval(&[]).is_err(), "eps evaluated without error");
    Ok(())
}

// ---------------------------------------------------------------- clifford

pub fn clifford_generators(max_m: usize) -> Outcome {
    for m in 1..=max_m {
        let one = CliffordElement::one(m);
        let zero = CliffordElement::zero(m);
        let anti = |a: &CliffordElement, b: &CliffordElement| &a.mul(b) + &b.mul(a);
        for j in 1..=m {
            for k in 1..=m {
                let (pj, nj) = (CliffordElement::generator(m, j, Sign::Plus), CliffordElement::generator(m, j, Sign::Minus));
                let (pk, nk) = (CliffordElement::generator(m, k, Sign::Plus), CliffordElement::generator(m, k, Sign::Minus));
                let delta = if j == k { one.clone() } else { zero.clone() };
                ensure!(anti(&pj, &pk) == zero, "{{e_{j}^+, e_{k}^+}} != 0 (m={m})");
                ensure!(anti(&nj, &nk) == zero, "{{e_{j}^-, e_{k}^-}} != 0 (m={m})");
                ensure!(anti(&pj, &nk) == delta, "{{e_{j}^+, e_{k}^-}} != delta (m={m})");
                let two = delta.scale(&int(2));
                let (ej, ek) = (CliffordElement::e(m, j), CliffordElement::e(m, k));
                ensure!(anti(&ej, &ek) == two, "{{e_{j}, e_{k}}} != 2 delta (m={m})");
                let (fj, fk) = (CliffordElement::e_perp(m, j), CliffordElement::e_perp(m, k));
                ensure!(anti(&fj, &fk) == two.neg(), "{{e_{j}^perp, e_{k}^perp}} != -2 delta (m={m})");
            }
        }
        ensure!(CliffordElement::generator(m, 1, Sign::Plus).mul(&CliffordElement::generator(m, 1, Sign::Plus)).is_zero(), "e_1^+ squared is nonzero");
    }
    Ok(())
}

fn random_trig_clifford(rng: &mut ChaCha8Rng, m: usize) -> CliffordElement {
    let full = 1u32 << (2 * m);
    CliffordElement::from_terms(m, (0..3).map(|_| (rng.gen_range(0..full), random::scalar(rng, 1, false))))
}

pub fn clifford_involutions(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for n in 0..count {
        let m = 1 + n % 4;
        let a = random_trig_clifford(rng, m);
        let b = random_trig_clifford(rng, m);
        let ab = a.mul(&b);
        ensure!(ab.reversion() == b.reversion().mul(&a.reversion()), "(ab)* != b* a* for {a} and {b}");
        ensure!(ab.conjugation() == b.conjugation().mul(&a.conjugation()), "conj(ab) != conj(b) conj(a)");
        ensure!(ab.main_involution() == a.main_involution().mul(&b.main_involution()), "main(ab) != main(a) main(b)");
        ensure!(a.reversion().reversion() == a, "reversion is not involutive on {a}");
        ensure!(a.conjugation().conjugation() == a, "conjugation is not involutive on {a}");
        ensure!(a.main_involution() == a.conjugation().reversion(), "main != reversion of conjugation on {a}");
    }
    Ok(())
}

pub fn clifford_associativity(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for n in 0..count {
        let m = 1 + n % 3;
        let (a, b, c) = (random_trig_clifford(rng, m), random_trig_clifford(rng, m), random_trig_clifford(rng, m));
        ensure!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), "associativity fails for {a}, {b}, {c}");
    }
    Ok(())
}

// ---------------------------------------------------------------- operators

pub fn skew_weyl(max_m: usize) -> Outcome {
    for m in 1..=max_m {
        let one = OperatorElement::identity(m);
        for j in 1..=m {
            let (xj, dj) = (OperatorElement::xi(m, j), OperatorElement::del(m, j));
            ensure!(dj.commutator(&xj) == one, "del_{j} xi_{j} - xi_{j} del_{j} != 1 (m={m})");
            for k in (1..=m).filter(|&k| k != j) {
                let (xk, dk) = (OperatorElement::xi(m, k), OperatorElement::del(m, k));
                ensure!(dj.anticommutator(&xk).is_zero(), "{{del_{j}, xi_{k}}} != 0 (m={m})");
                ensure!(xj.anticommutator(&xk).is_zero(), "{{xi_{j}, xi_{k}}} != 0 (m={m})");
                ensure!(dj.anticommutator(&dk).is_zero(), "{{del_{j}, del_{k}}} != 0 (m={m})");
            }
        }
    }
    Ok(())
}

/// `{X_j, xi_k} = 2 X_j xi_j delta_jk` and the same against `del_k`, for
/// `X` either generator family.
fn generator_vs_variables(max_m: usize, family: Family) -> Outcome {
    let name = family.name();
    for m in 1..=max_m {
        for j in 1..=m {
            let g = match family {
                Family::R => OperatorElement::r(m, j),
                Family::T => OperatorElement::t(m, j),
            };
            for k in 1..=m {
                for (var, label) in [(OperatorElement::xi(m, k), "xi"), (OperatorElement::del(m, k), "del")] {
                    let own = if label == "xi" { OperatorElement::xi(m, j) } else { OperatorElement::del(m, j) };
                    let expect = delta_op(m, j, k, &g.mul(&own).scale(&int(2)));
                    ensure!(g.anticommutator(&var) == expect, "{{{name}_{j}, {label}_{k}}} != 2 {name}_{j} {label}_{j} delta (m={m})");
                }
            }
        }
    }
    Ok(())
}

pub fn r_vs_variables(max_m: usize) -> Outcome {
    generator_vs_variables(max_m, Family::R)
}

pub fn t_vs_variables(max_m: usize) -> Outcome {
    generator_vs_variables(max_m, Family::T)
}

pub fn rt_relations(max_m: usize) -> Outcome {
    for m in 1..=max_m {
        let two = OperatorElement::identity(m).scale(&int(2));
        for j in 1..=m {
            for k in 1..=m {
                let (rj, rk) = (OperatorElement::r(m, j), OperatorElement::r(m, k));
                let (tj, tk) = (OperatorElement::t(m, j), OperatorElement::t(m, k));
                ensure!(rj.anticommutator(&rk) == delta_op(m, j, k, &two), "{{R_{j}, R_{k}}} != 2 delta (m={m})");
                ensure!(tj.anticommutator(&tk) == delta_op(m, j, k, &two.neg()), "{{T_{j}, T_{k}}} != -2 delta (m={m})");
                ensure!(rj.anticommutator(&tk).is_zero(), "{{R_{j}, T_{k}}} != 0 (m={m})");
            }
        }
    }
    Ok(())
}

pub fn ground_rules(max_m: usize) -> Outcome {
    for m in 1..=max_m {
        let one = PolyState::one(m);
        for j in 1..=m {
            let rj = ok(op_apply(&OperatorElement::r(m, j), &one))?;
            ensure!(rj == PolyState::ground(CliffordElement::e(m, j)), "R_{j}[1] != [1] e_{j}");
            let tj = ok(op_apply(&OperatorElement::t(m, j), &one))?;
            ensure!(tj == PolyState::ground(CliffordElement::e_perp(m, j)), "T_{j}[1] != [1] e_{j}^perp");
            ensure!(ok(op_apply(&OperatorElement::del(m, j), &one))?.is_zero(), "del_{j}[1] != 0");
            for l in 1..=m {
                for k in 0..=3u8 {
                    let mut a = [0u8; MAX_DIM];
                    a[j - 1] = k;
                    let got = ok(op_apply(&OperatorElement::del(m, l), &PolyState::scalar_monomial(m, a)))?;
                    let expect = if l == j && k > 0 {
                        a[j - 1] = k - 1;
                        PolyState::scalar_monomial(m, a).scale(&int(k as i64))
                    } else {
                        PolyState::zero(m)
                    };
                    ensure!(got == expect, "del_{l} xi_{j}^{k}[1] wrong (m={m})");
                }
            }
        }
    }
    Ok(())
}

/// All relation tables of the generators.
pub fn algebra_relations(max_m: usize) -> Outcome {
    clifford_generators(max_m)?;
    skew_weyl(max_m)?;
    r_vs_variables(max_m)?;
    t_vs_variables(max_m)?;
    rt_relations(max_m)?;
    ground_rules(max_m)
}

pub fn osp_triple(ms: &[usize], max_deg: usize) -> Outcome {
    for &m in ms {
        let d = OperatorElement::dirac(m);
        let x = OperatorElement::vec_xi(m);
        let dx = d.anticommutator(&x);
        for alpha in monomials_up_to(m, max_deg) {
            let f = PolyState::scalar_monomial(m, alpha);
            let ef = euler(&f);
            let lhs = ok(op_apply(&dx, &f))?;
            let rhs = &ef.scale(&int(2)) + &f.scale(&int(m as i64));
            ensure!(lhs == rhs, "{{del, xi}} != 2E + m on {f}");
            let df = dirac(&f);
            ensure!(&dirac(&ef) - &euler(&df) == df, "[del, E] != del on {f}");
            let xf = vec_xi(&f);
            ensure!(&vec_xi(&ef) - &euler(&xf) == xf.neg(), "[xi, E] != -xi on {f}");
        }
    }
    Ok(())
}

pub fn commuting_composites(max_m: usize) -> Outcome {
    for m in 2..=max_m {
        let xr = |j| OperatorElement::xi(m, j).mul(&OperatorElement::r(m, j));
        let dr = |j| OperatorElement::del(m, j).mul(&OperatorElement::r(m, j));
        let one = OperatorElement::identity(m);
        for j in 1..=m {
            for k in 1..=m {
                if j != k {
                    ensure!(xr(j).commutator(&xr(k)).is_zero(), "[xi_{j}R_{j}, xi_{k}R_{k}] != 0");
                    ensure!(xr(j).commutator(&dr(k)).is_zero(), "[xi_{j}R_{j}, del_{k}R_{k}] != 0");
                }
                ensure!(dr(j).commutator(&xr(k)) == delta_op(m, j, k, &one), "[del_{j}R_{j}, xi_{k}R_{k}] != delta");
            }
        }
    }
    Ok(())
}

pub fn vector_decompositions(max_m: usize) -> Outcome {
    for m in 1..=max_m {
        for (v, name) in [(OperatorElement::dirac(m), "del"), (OperatorElement::vec_xi(m), "xi")] {
            let sum = (1..=m).fold(op_zero(m), |acc, j| {
                let r = OperatorElement::r(m, j);
                &acc + &v.inner(&r).mul(&r)
            });
            ensure!(sum == v, "{name} != sum <{name}, R_j> R_j (m={m})");
        }
        let lap = OperatorElement::dirac(m).pow(2);
        ensure!(lap.is_scalar_character(), "del^2 carries R or T letters (m={m})");
    }
    Ok(())
}

fn random_operator(rng: &mut ChaCha8Rng, m: usize) -> OperatorElement {
    let mut out = op_zero(m);
    for _ in 0..2 {
        let mut w = OperatorWord::default();
        for j in 0..m {
            w.xi[j] = rng.gen_range(0..=1);
            w.del[j] = rng.gen_range(0..=1);
        }
        w.r = rng.gen_range(0..1u8 << m);
        w.t = rng.gen_range(0..1u8 << m);
        out = &out + &OperatorElement::word(m, w, Scalar::constant(random::rational(rng, 3)));
    }
    out
}

pub fn operator_associativity(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for n in 0..count {
        let m = 1 + n % 3;
        let (a, b, c) = (random_operator(rng, m), random_operator(rng, m), random_operator(rng, m));
        ensure!(a.mul(&b).mul(&c) == a.mul(&b.mul(&c)), "operator product not associative for {a}, {b}, {c}");
        let f = random::homogeneous(rng, m, 1);
        ensure!(ok(op_apply(&a.mul(&b), &f))? == ok(op_apply(&a, &ok(op_apply(&b, &f))?))?, "application is not an action");
    }
    Ok(())
}

pub fn insert_composition(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for _ in 0..count {
        let m = 2;
        let f = random::homogeneous(rng, m, 2);
        let (a, b) = (random::clifford(rng, m, 2), random::clifford(rng, m, 2));
        ensure!(f.insert_ground_constant(&a).insert_ground_constant(&b) == f.insert_ground_constant(&b.mul(&a)), "insert(insert(f, a), b) != insert(f, b a)");
        ensure!(f.insert_ground_constant(&CliffordElement::one(m)) == f, "insert(f, 1) != f");
    }
    Ok(())
}

// ---------------------------------------------------------------- spin group

fn random_vector(rng: &mut ChaCha8Rng, family: Family, m: usize) -> RVector {
    loop {
        let v = RVector::new(family, (0..m).map(|_| Scalar::constant(random::rational(rng, 3))).collect());
        if !v.norm2().is_zero() {
            return v;
        }
    }
}

pub fn clifford_group_norms(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    for n in 0..count {
        let m = 1 + n % 4;
        let build = |rng: &mut ChaCha8Rng| {
            let k = rng.gen_range(1..=4);
            (0..k).fold(RAlgebraElement::one(Family::R, m), |acc, _| acc.mul(&random_vector(rng, Family::R, m).to_ralg()))
        };
        let a = build(rng);
        let b = build(rng);
        let aa = a.mul(&a.reversion());
        ensure!(aa.scalar_part() == a.norm2(), "grade 0 of a a* != |a|^2 for {a}");
        ensure!(aa.grade_part(0) == aa, "a a* has higher grades for {a}");
        ensure!(a.reversion().mul(&a) == aa, "a* a != a a* for {a}");
        ensure!(a.mul(&b).norm2() == &a.norm2() * &b.norm2(), "|ab|^2 != |a|^2 |b|^2");
        let x = random_vector(rng, Family::R, m);
        let y = ok(chi(&a, &x))?;
        ensure!(y.norm2() == x.norm2(), "chi(a) does not preserve the norm");
        let cols: Vec<Vec<Scalar>> =
            (1..=m).map(|j| Ok(ok(chi(&a, &unit_vector(Family::R, m, j)))?.coords)).collect::<std::result::Result<_, String>>()?;
        let mat = RotationMatrix { entries: transpose(&cols) };
        let det = mat.det();
        ensure!(det == int(1) || det == int(-1), "chi(a) matrix has determinant {det}");
    }
    Ok(())
}

fn unit_vector(family: Family, m: usize, j: usize) -> RVector {
    RVector::new(family, (1..=m).map(|k| if k == j { Scalar::one() } else { Scalar::zero() }).collect())
}

fn transpose(cols: &[Vec<Scalar>]) -> Vec<Vec<Scalar>> {
    let n = cols.len();
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

pub fn reflections(rng: &mut ChaCha8Rng, count: usize, ms: &[usize]) -> Outcome {
    for &m in ms {
        for _ in 0..count {
            let w = random::unit_vector(rng, Family::R, m);
            ensure!(w.norm2().is_one(), "random vector is not a unit");
            let x = random_vector(rng, Family::R, m);
            let got = ok(chi(&w.to_ralg(), &x))?;
            let dot = x.dot(&w).scale_int(2);
            let expect: Vec<Scalar> = x.coords.iter().zip(&w.coords).map(|(xi, wi)| xi - &(&dot * wi)).collect();
            ensure!(got.coords == expect, "chi(w, x) != x - 2<x,w>w for w = {:?}", w.coords.iter().map(|c| c.to_string()).collect::<Vec<_>>());
        }
    }
    Ok(())
}

pub fn double_cover(rng: &mut ChaCha8Rng, count: usize, ms: &[usize]) -> Outcome {
    for &m in ms {
        let id = RotationMatrix::identity(m);
        for n in 0..count {
            let factors = if n % 2 == 0 { 2 } else { 4 };
            let s = ok(random::spin(rng, Family::R, m, factors))?;
            let t = ok(random::spin(rng, Family::R, m, 2))?;
            let ms_ = ok(so_matrix(&s))?;
            ensure!(ms_.transpose().mul(&ms_) == id, "M^T M != I (m={m})");
            ensure!(ms_.det().is_one(), "det != 1 (m={m})");
            ensure!(ok(so_matrix(&s.neg()))? == ms_, "so(-s) != so(s) (m={m})");
            let st = ok(s.mul(&t))?;
            ensure!(ok(so_matrix(&st))? == ms_.mul(&ok(so_matrix(&t))?), "so(st) != so(s) so(t) (m={m})");
        }
    }
    Ok(())
}

pub fn plane_rotation() -> Outcome {
    let s = ok(exp_bivector(Family::R, 2, &[(1, (2, 1))]))?;
    let got = ok(chi(s.value(), &unit_vector(Family::R, 2, 1)))?;
    ensure!(got.coords == vec![cos_t(1), sin_t(1).neg()], "chi(s, R_1) != cos R_1 - sin R_2");
    let mat = ok(so_matrix(&s))?;
    ensure!(mat.entries == vec![vec![cos_t(1), sin_t(1)], vec![sin_t(1).neg(), cos_t(1)]], "plane rotation matrix wrong");
    ensure!(mat.is_orthogonal() && mat.det().is_one(), "symbolic plane rotation not special orthogonal");
    Ok(())
}

pub fn torus_abelian() -> Outcome {
    let m = 4;
    let a = ok(exp_bivector(Family::R, m, &[(1, (1, 2))]))?;
    let b = ok(exp_bivector(Family::R, m, &[(2, (3, 4))]))?;
    ensure!(a.value().mul(b.value()) == b.value().mul(a.value()), "torus factors do not commute");
    let both = ok(exp_bivector(Family::R, m, &[(1, (1, 2)), (2, (3, 4))]))?;
    ensure!(both.value() == &a.value().mul(b.value()), "joint exponential != product of factors");
    ensure!(exp_bivector(Family::R, m, &[(1, (1, 2)), (2, (2, 3))]).is_err(), "overlapping pairs accepted");
    Ok(())
}

pub fn orthogonal_family(rng: &mut ChaCha8Rng, count: usize) -> Outcome {
    let m = 3;
    let t1 = RAlgebraElement::gen(Family::T, m, 1);
    ensure!(t1.mul(&t1) == RAlgebraElement::scalar(Family::T, m, int(-1)), "T_1^2 != -1");
    let r = ok(chi(&t1, &unit_vector(Family::T, m, 1)))?;
    ensure!(r.coords == unit_vector(Family::T, m, 1).coords.iter().map(|c| c.neg()).collect::<Vec<_>>(), "chi(T_1, T_1) != -T_1");
    let id = RotationMatrix::identity(m);
    for _ in 0..count {
        let w = random::unit_vector(rng, Family::T, m);
        let inv = ok(w.to_ralg().inverse())?;
        ensure!(inv == w.to_ralg().neg(), "inverse of a unit T-vector is not its negative");
        let s = ok(random::spin(rng, Family::T, m, 4))?;
        let mat = ok(so_matrix(&s))?;
        ensure!(mat.transpose().mul(&mat) == id && mat.det().is_one(), "T-family rotation not special orthogonal");
    }
    Ok(())
}

// ---------------------------------------------------------------- actions

pub fn plane_components() -> Outcome {
    let s = ok(exp_bivector(Family::R, 2, &[(1, (2, 1))]))?;
    let sys = ok(eta_of(&s))?;
    let r21 = OperatorElement::r(2, 2).mul(&OperatorElement::r(2, 1));
    let (x1, x2) = (OperatorElement::xi(2, 1), OperatorElement::xi(2, 2));
    let e1 = &x1.scale(&cos_t(1)) - &x2.mul(&r21).scale(&sin_t(1));
    let e2 = &x2.scale(&cos_t(1)) - &x1.mul(&r21).scale(&sin_t(1));
    ensure!(sys.eta_j[0] == e1, "eta_1 != cos xi_1 - sin xi_2 R_2 R_1, got {}", sys.eta_j[0]);
    ensure!(sys.eta_j[1] == e2, "eta_2 != cos xi_2 - sin xi_1 R_2 R_1, got {}", sys.eta_j[1]);
    let id = ok(eta_of(&SpinElement::identity(Family::R, 2)))?;
    ensure!(id.eta_j == vec![x1, x2], "identity does not fix the variables");
    Ok(())
}

pub fn generator_forms() -> Outcome {
    let m = 2;
    let f = PolyState::monomial(unit_index(1), CliffordElement::one(m));
    let got = ok(op_apply(&gen_l(m, 1, 2), &f))?;
    let e21 = CliffordElement::e_word(m, &[2, 1]);
    ensure!(got == PolyState::monomial(unit_index(2), e21.neg()), "L_12 xi_1[1] != -xi_2[1] e_2 e_1");
    ensure!(gen_l(m, 1, 1).is_zero() && gen_dr(m, 2, 2).is_zero(), "diagonal generators are nonzero");
    let r21 = OperatorElement::r(m, 2).mul(&OperatorElement::r(m, 1));
    ensure!(&gen_dr(m, 1, 2) - &gen_l(m, 1, 2) == r21.scale(&Scalar::ratio(-1, 2)), "dR - L != -R_2 R_1 / 2");
    Ok(())
}

/// Symbolic torus and random products of four unit vectors.
fn sample_spins(rng: &mut ChaCha8Rng, m: usize, family: Family, random_count: usize) -> crate::Result<Vec<SpinElement>> {
    let mut out = vec![exp_bivector(family, m, &[(1, (1, 2))])?];
    for _ in 0..random_count {
        out.push(random::spin(rng, family, m, 4)?);
    }
    Ok(out)
}

pub fn laplace_invariance(rng: &mut ChaCha8Rng, ms: &[usize], max_deg: usize, random_count: usize) -> Outcome {
    for &m in ms {
        for s in ok(sample_spins(rng, m, Family::R, random_count))? {
            let sys = ok(eta_of(&s))?;
            for alpha in monomials_up_to(m, max_deg) {
                let f = PolyState::scalar_monomial(m, alpha);
                let lhs = laplace(&ok(sys.substitute(&f))?);
                let rhs = ok(sys.substitute(&laplace(&f)))?;
                ensure!(lhs == rhs, "Laplacian does not commute with substitution on {f} (m={m})");
            }
            for k in 0..=max_deg {
                let h = ok(random::harmonic(rng, m, k))?;
                for kind in [ActionKind::H0, ActionKind::H1] {
                    ensure!(laplace(&ok(act(kind, &s, &h))?).is_zero(), "{} does not preserve harmonicity (m={m}, k={k})", kind.name());
                }
            }
        }
    }
    Ok(())
}

pub fn monogenic_invariance(rng: &mut ChaCha8Rng, ms: &[usize], max_deg: usize, random_count: usize) -> Outcome {
    for &m in ms {
        for s in ok(sample_spins(rng, m, Family::R, random_count))? {
            for k in 0..=max_deg {
                let f = ok(random::monogenic(rng, m, k))?;
                ensure!(dirac(&ok(act(ActionKind::L, &s, &f))?).is_zero(), "L does not preserve monogenicity (m={m}, k={k})");
                ensure!(dirac(&ok(act(ActionKind::H1, &s, &f))?).is_zero(), "H1 does not preserve monogenicity (m={m}, k={k})");
            }
        }
    }
    Ok(())
}

pub fn perp_invariance(rng: &mut ChaCha8Rng, ms: &[usize], max_deg: usize) -> Outcome {
    for &m in ms {
        for s in ok(sample_spins(rng, m, Family::T, 1))? {
            for k in 0..=max_deg {
                let h = ok(random::harmonic(rng, m, k))?;
                for kind in [ActionKind::H0Perp, ActionKind::H1Perp] {
                    ensure!(laplace(&ok(act(kind, &s, &h))?).is_zero(), "{} does not preserve harmonicity (m={m}, k={k})", kind.name());
                }
                let f = ok(random::monogenic(rng, m, k))?;
                ensure!(dirac(&ok(act(ActionKind::LPerp, &s, &f))?).is_zero(), "Lperp does not preserve monogenicity (m={m}, k={k})");
            }
        }
        let s = ok(random::spin(rng, Family::T, m, 2))?;
        ensure!(act(ActionKind::H0, &s, &PolyState::one(m)).is_err(), "R action accepted a T-family element");
    }
    Ok(())
}

pub fn ground_annihilation(rng: &mut ChaCha8Rng, ms: &[usize]) -> Outcome {
    for &m in ms {
        for s in ok(sample_spins(rng, m, Family::R, 2))? {
            let sys = ok(eta_of(&s))?;
            for (j, d) in sys.del_eta_j.iter().enumerate() {
                ensure!(ok(op_apply(d, &PolyState::one(m)))?.is_zero(), "del_eta_{}[1] != 0 (m={m})", j + 1);
            }
        }
    }
    Ok(())
}

pub fn group_law(rng: &mut ChaCha8Rng, ms: &[usize], count: usize) -> Outcome {
    for &m in ms {
        for _ in 0..count {
            let s = ok(random::rational_torus(rng, Family::R, m))?;
            let t = ok(random::rational_torus(rng, Family::R, m))?;
            let st = ok(s.mul(&t))?;
            let k = rng.gen_range(0..=2);
            let f = random::homogeneous(rng, m, k);
            for kind in [ActionKind::H0, ActionKind::H1, ActionKind::L] {
                let lhs = ok(act(kind, &st, &f))?;
                let rhs = ok(act(kind, &s, &ok(act(kind, &t, &f))?))?;
                ensure!(lhs == rhs, "{}(st) != {}(s) {}(t) (m={m})", kind.name(), kind.name(), kind.name());
            }
        }
        // Symbolic angles compose too.
        let a = ok(exp_bivector(Family::R, m, &[(1, (1, 2))]))?;
        let b = ok(exp_bivector(Family::R, m, &[(2, (1, 2))]))?;
        let f = random::homogeneous(rng, m, 2);
        let lhs = ok(act(ActionKind::H0, &ok(a.mul(&b))?, &f))?;
        ensure!(lhs == ok(act(ActionKind::H0, &a, &ok(act(ActionKind::H0, &b, &f))?))?, "H0 law fails for symbolic rotors");
    }
    Ok(())
}

/// First-order coefficients compared with the derived actions under the
/// given assignment of action kinds to formulas.
fn first_order_against(ms: &[usize], max_deg: usize, table: &[(ActionKind, Infinitesimal)]) -> Outcome {
    let mut failures = Vec::new();
    for &m in ms {
        for j in 1..=m {
            for i in 1..j {
                for alpha in monomials_up_to(m, max_deg) {
                    let f = PolyState::scalar_monomial(m, alpha);
                    for &(kind, formula) in table {
                        let got = ok(first_order(kind, j, i, &f))?;
                        let want = ok(infinitesimal(formula, j, i, &f))?;
                        if got != want {
                            failures.push(format!("{} vs {formula:?} at (j,i)=({j},{i}) on {f} (m={m})", kind.name()));
                        }
                    }
                }
            }
        }
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(format!("{} mismatches, first: {}", failures.len(), failures[0]))
    }
}

/// `H0 -> dH0`, `H1 -> dH1`, `L -> dL` as the formulas are labelled.
pub fn first_order_labelled(ms: &[usize], max_deg: usize) -> Outcome {
    first_order_against(
        ms,
        max_deg,
        &[(ActionKind::H0, Infinitesimal::DH0), (ActionKind::H1, Infinitesimal::DH1), (ActionKind::L, Infinitesimal::DL)],
    )
}

/// The assignment the derivation produces: the two-sided action picks up the
/// commutator, the one-sided action only the left factor.
pub fn first_order_derived(ms: &[usize], max_deg: usize) -> Outcome {
    first_order_against(
        ms,
        max_deg,
        &[(ActionKind::H0, Infinitesimal::DH0), (ActionKind::H1, Infinitesimal::DL), (ActionKind::L, Infinitesimal::DH1)],
    )
}

/// Both sides are right-linear in the Clifford constant, so monomials times
/// basis blades cover every state of degree at most `max_deg`.
pub fn exp_l12_agreement(max_deg: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let m = 2;
    let s = ok(exp_bivector(Family::R, m, &[(1, (2, 1))]))?;
    let sys = ok(eta_of(&s))?;
    for alpha in monomials_up_to(m, max_deg) {
        for blade in 0..1u32 << (2 * m) {
            let f = PolyState::monomial(alpha, CliffordElement::blade(m, blade, Scalar::one()));
            let lhs = ok(exp_l12(1, &f))?;
            let rhs = ok(sys.substitute(&f))?;
            ensure!(lhs == rhs, "exp(theta L_12) differs from H0 on {f}");
        }
    }
    let f = random::homogeneous(rng, m, 3);
    let zero_angle = |x: &Scalar| -> Scalar {
        // t = 0: c -> 1, s -> 0 on a polynomial in c_1, s_1.
        Scalar::from_terms(x.terms().iter().filter(|(mo, _)| mo.s_exp(0) == 0).map(|(_, q)| (crate::scalar::TrigMonomial::ONE, q.clone())))
    };
    ensure!(ok(exp_l12(1, &f))?.map_coeffs(zero_angle) == f, "exp(0 L_12) is not the identity");
    Ok(())
}

pub fn worked_examples() -> Outcome {
    let m = 2;
    let s = ok(exp_bivector(Family::R, m, &[(1, (2, 1))]))?;
    let sys = ok(eta_of(&s))?;
    let one = CliffordElement::one(m);
    let e21 = CliffordElement::e_word(m, &[2, 1]);
    let r21 = OperatorElement::r(m, 2).mul(&OperatorElement::r(m, 1));
    let poly = |terms: &[(&[u8], i64)]| {
        PolyState::from_terms(m, terms.iter().map(|(e, k)| (xi_mono(m, e), one.scale(&int(*k)))))
    };

    // Linear monomial with a generic constant.
    let c = &CliffordElement::e(m, 1) + &CliffordElement::e_perp(m, 2).scale(&int(3));
    let f = PolyState::monomial(unit_index(1), c.clone());
    let want = &PolyState::monomial(unit_index(1), c.scale(&cos_t(1)))
        - &PolyState::monomial(unit_index(2), e21.mul(&c).scale(&sin_t(1)));
    ensure!(ok(sys.substitute(&f))? == want, "H0 on xi_1[1]c differs from cos xi_1[1]c - sin xi_2[1]e_2e_1c");
    ensure!(ok(exp_l12(1, &f))? == want, "exp(theta L_12) on xi_1[1]c differs from the closed form");

    // The three degree-two eigenfunctions.
    let a = plane_generator(m);
    let f0 = poly(&[(&[0, 2], 1), (&[2, 0], 1)]);
    let fm = poly(&[(&[0, 2], 1), (&[1, 1], -2), (&[2, 0], -1)]);
    let fp = poly(&[(&[0, 2], 1), (&[1, 1], 2), (&[2, 0], -1)]);
    for (g, lambda) in [(&f0, 0), (&fm, -2), (&fp, 2)] {
        ensure!(ok(op_apply(&a, g))? == g.scale(&int(lambda)), "{g} is not an eigenfunction with eigenvalue {lambda}");
        let rotated = ok(act(ActionKind::H0, &s, g))?;
        let want = &g.scale(&cos_t(2)) + &ok(op_apply(&r21, g))?.scale(&sin_t(2).scale_int(lambda.signum() as i128));
        let want = if lambda == 0 { g.clone() } else { want };
        ensure!(rotated == want, "H0 on {g} differs from cos 2t f + sign sin 2t R_2R_1 f");
    }

    // One-sided action on a linear eigenfunction.
    let f = &PolyState::monomial(unit_index(2), c.clone()) - &PolyState::monomial(unit_index(1), c.clone());
    let c3 = Scalar::cis_half(3, 1);
    let want = &f.scale(&c3.re_part()) + &f.insert_ground_constant(&e21).scale(&c3.im_part());
    ensure!(ok(act(ActionKind::L, &s, &f))? == want, "L on (xi_2 - xi_1)[1]c differs from the 3t/2 closed form");
    Ok(())
}

// ---------------------------------------------------------------- distributions

pub fn plane_eigenfamilies(kmax: usize) -> Outcome {
    let a = plane_generator(2);
    for k in 0..=kmax {
        for (i, br) in plane_indices(k) {
            let lambda = int(plane_eigenvalue(k, i, br));
            let f = ok(eigen_poly(k, i, br))?;
            ensure!(!f.is_zero(), "polynomial eigenfunction ({k},{i},{br:?}) vanishes");
            ensure!(ok(op_apply(&a, &f))? == f.scale(&lambda), "polynomial ({k},{i},{br:?}) is not an eigenvector");
            let b = ok(eigen_b(k, i, br))?;
            ensure!(!b.is_zero(), "distribution ({k},{i},{br:?}) vanishes");
            ensure!(ok(dist_apply(&a, &b))? == b.scale(&lambda), "distribution ({k},{i},{br:?}) is not an eigenvector");
        }
    }
    Ok(())
}

pub fn delta_parity(max_deg: usize) -> Outcome {
    let m = 2;
    let r21 = OperatorElement::r(m, 2).mul(&OperatorElement::r(m, 1));
    for beta in monomials_up_to(m, max_deg) {
        let w = OperatorElement::word(m, OperatorWord { del: beta, ..Default::default() }, Scalar::one());
        let sign = if crate::operator::degree(&beta).is_multiple_of(2) { 1 } else { -1 };
        ensure!(r21.mul(&w) == w.mul(&r21).scale(&int(sign)), "R_2R_1 parity wrong against del^{:?}", &beta[..2]);
    }
    let d = DistState::monomial(xi_mono(m, &[1, 1]), CliffordElement::one(m));
    let want = DistState::monomial(xi_mono(m, &[1, 1]), CliffordElement::e_word(m, &[2, 1]));
    ensure!(ok(dist_apply(&r21, &d))? == want, "R_2R_1 on del_1 del_2 delta differs");
    ensure!(dist_apply(&OperatorElement::t(m, 1), &d).is_err(), "T reached delta without error");
    Ok(())
}

/// The rotated shifted delta in closed form.
pub fn shifted_delta_rotation() -> Outcome {
    let m = 2;
    let s = ok(exp_bivector(Family::R, m, &[(1, (2, 1))]))?;
    let got = ok(rotate_dist(&s, &delta_shift_1_0()))?;
    let e1 = CliffordElement::e(m, 1);
    let quad = &CliffordElement::one(m) + &CliffordElement::e_perp(m, 1).mul(&e1);
    let half = Scalar::ratio(1, 2);
    let want = DistState::from_terms(
        m,
        [
            (xi_mono(m, &[0, 0]), CliffordElement::one(m)),
            (xi_mono(m, &[1, 0]), e1.scale(&cos_t(1)).neg()),
            (xi_mono(m, &[0, 1]), CliffordElement::e(m, 2).scale(&sin_t(1))),
            (xi_mono(m, &[2, 0]), quad.scale(&(&cos_t(1).pow(2) * &half))),
            (xi_mono(m, &[0, 2]), quad.scale(&(&sin_t(1).pow(2) * &half))),
            (xi_mono(m, &[1, 1]), CliffordElement::e_word(m, &[1, 2]).mul(&quad).scale(&(&sin_t(2) * &half))),
        ],
    );
    ensure!(got == want, "rotated shifted delta differs: got {got}");
    ensure!(ok(exp_l12_dist(1, &delta_shift_1_0()))? == want, "eigen-route rotation differs from the closed form");
    Ok(())
}

pub fn dist_exp_closed_forms(kmax_half: usize) -> Outcome {
    let r21 = OperatorElement::r(2, 2).mul(&OperatorElement::r(2, 1));
    for k in (0..=2 * kmax_half).step_by(2) {
        for (i, br) in plane_indices(k) {
            let b = ok(eigen_b(k, i, br))?;
            let lambda = plane_eigenvalue(k, i, br);
            let want = &b.scale(&cos_t(lambda)) + &ok(dist_apply(&r21, &b))?.scale(&sin_t(lambda));
            ensure!(ok(exp_l12_dist(1, &b))? == want, "exp(theta L_12) on B({k},{i},{br:?}) differs");
        }
    }
    Ok(())
}

// ---------------------------------------------------------------- representations

pub fn fischer(ms: &[usize], kmax: usize) -> Outcome {
    for &m in ms {
        for k in 0..=kmax {
            for p in pk0_basis(m, k) {
                let (h, q) = ok(fischer_decompose(&p, k))?;
                ensure!(laplace(&h).is_zero(), "harmonic part of {p} is not harmonic");
                ensure!(&h + &vec_xi(&vec_xi(&q)) == p, "Fischer parts do not reconstruct {p}");
                ensure!(ok(fischer_decompose(&p, k))? == (h.clone(), q), "Fischer decomposition not deterministic");
                ensure!(ok(fischer_decompose(&h, k))?.1.is_zero(), "harmonic input has a radial part");
            }
        }
    }
    Ok(())
}

/// Kernel dimension of the Laplacian against `dim [P_k]_0 - dim [P_{k-2}]_0`.
pub fn harmonic_dims_fischer(ms: &[usize], kmax: usize) -> Outcome {
    for &m in ms {
        for k in 0..=kmax {
            ok(dim_hk0(m, k))?;
        }
    }
    Ok(())
}

/// Kernel dimension against the closed binomial expression
/// `C(k+m-1, k) - C(k+m-3, k)`.
pub fn harmonic_dims_binomial(ms: &[usize], kmax: usize) -> Outcome {
    let mut bad = Vec::new();
    for &m in ms {
        for k in 0..=kmax {
            let d = ok(dim_hk0(m, k))?;
            if !d.formula_matches() {
                bad.push(format!("(m={m}, k={k}): formula {} vs rank {}", d.formula, d.rank));
            }
        }
    }
    ensure!(bad.is_empty(), "{} mismatches: {}", bad.len(), bad.join("; "));
    Ok(())
}

pub fn frame_table(ms: &[usize]) -> Outcome {
    for &m in ms {
        let fr = frame(m);
        let one = OperatorElement::identity(m);
        let n = fr.f.len();
        for j in 0..n {
            for k in 0..n {
                let d = delta_op(m, j, k, &one);
                ensure!(fr.f[j].anticommutator(&fr.f_dag[k]) == d, "{{f_{}, f_{}^+}} != delta", j + 1, k + 1);
                ensure!(fr.g[j].anticommutator(&fr.g_dag[k]) == d, "{{g_{}, g_{}^+}} != delta", j + 1, k + 1);
                for (x, y, name) in [
                    (&fr.f[j], &fr.f[k], "f, f"),
                    (&fr.f_dag[j], &fr.f_dag[k], "f^+, f^+"),
                    (&fr.g[j], &fr.g[k], "g, g"),
                    (&fr.g_dag[j], &fr.g_dag[k], "g^+, g^+"),
                    (&fr.f[j], &fr.g[k], "f, g"),
                    (&fr.f[j], &fr.g_dag[k], "f, g^+"),
                    (&fr.f_dag[j], &fr.g[k], "f^+, g"),
                    (&fr.f_dag[j], &fr.g_dag[k], "f^+, g^+"),
                ] {
                    ensure!(x.anticommutator(y).is_zero(), "{{{name}}} != 0 at ({}, {})", j + 1, k + 1);
                }
            }
        }
    }
    Ok(())
}

pub fn frame_exchange() -> Outcome {
    let m = 2;
    let fr = frame(m);
    let (x1, x2) = (OperatorElement::xi(m, 1), OperatorElement::xi(m, 2));
    for sg in [1, -1] {
        let plus = &x1 + &x2.scale(&int(sg));
        let minus = &x1 - &x2.scale(&int(sg));
        ensure!(plus.mul(&fr.f[0]) == fr.f_dag[0].mul(&minus), "(xi_1 +- xi_2) f_1 != f_1^+ (xi_1 -+ xi_2)");
        ensure!(plus.mul(&fr.f_dag[0]) == fr.f[0].mul(&minus), "(xi_1 +- xi_2) f_1^+ != f_1 (xi_1 -+ xi_2)");
    }
    Ok(())
}

/// `eta_i R_i = <(xi_1 + xi_2) exp(t_1 R_2 R_1), R_i>` on the torus, hence
/// the same for `f_1`.
pub fn torus_pairing(ms: &[usize]) -> Outcome {
    for &m in ms {
        let s = ok(torus(Family::R, m))?;
        let sys = ok(eta_of(&s))?;
        let r21 = OperatorElement::r(m, 2).mul(&OperatorElement::r(m, 1));
        let rot = &OperatorElement::identity(m).scale(&cos_t(1)) + &r21.scale(&sin_t(1));
        let x = (&OperatorElement::xi(m, 1) + &OperatorElement::xi(m, 2)).mul(&rot);
        for i in 1..=2 {
            let r = OperatorElement::r(m, i);
            ensure!(sys.eta_j[i - 1].mul(&r) == x.inner(&r), "eta_{i} R_{i} != <(xi_1 + xi_2) exp(t R_2R_1), R_{i}> (m={m})");
        }
        let half_i = Scalar::i().scale(&Q::ratio(1, 2));
        let lhs = &sys.eta_j[0].mul(&OperatorElement::r(m, 1)).scale(&Scalar::ratio(1, 2))
            - &sys.eta_j[1].mul(&OperatorElement::r(m, 2)).scale(&half_i);
        ensure!(lhs == x.inner(&frame(m).f[0]), "(eta_1 R_1 - i eta_2 R_2)/2 != <(xi_1 + xi_2) exp(t R_2R_1), f_1> (m={m})");
    }
    Ok(())
}

pub fn idempotents() -> Outcome {
    for m in [2, 4] {
        let i = idempotent_i(m);
        ensure!(i.mul(&i) == i, "I^2 != I (m={m})");
        let fr = frame(m);
        for j in 0..fr.f.len() {
            ensure!(fr.f[j].mul(&i).is_zero(), "f_{} I != 0 (m={m})", j + 1);
            ensure!(fr.g[j].mul(&i).is_zero(), "g_{} I != 0 (m={m})", j + 1);
        }
    }
    let i3 = idempotent_i(3);
    ensure!(i3.mul(&i3) == i3, "averaged odd idempotent is not idempotent (m=3)");
    let tail = odd_tail(3);
    ensure!(tail.mul(&tail) == tail, "(1 + R_3T_3)/2 is not idempotent");
    let lit = idempotent_i_literal_odd(3);
    ensure!(lit.mul(&lit) != lit, "literal odd variant unexpectedly idempotent");
    let rank = left_ideal_rank(2, &idempotent_i(2));
    ensure!(rank == 4, "left ideal rank at m=2 is {rank}, expected 4");
    Ok(())
}

pub fn highest_weights(ms: &[usize], kmax: usize) -> Outcome {
    for &m in ms {
        for k in 0..=kmax {
            let h = ok(hw_integer(m, k))?;
            ensure!(laplace(&h).is_zero(), "integer highest weight vector not harmonic (m={m}, k={k})");
            ok(coordinates(&pk0_basis(m, k), &h))?;
            let w = ok(torus_weight(ActionKind::H0, &h))?;
            ensure!(w == integer_weight(k), "H0 weight (m={m}, k={k}) is {w}");
            let g = ok(hw_half(m, k))?;
            ensure!(!g.is_zero(), "half-integer vector vanishes (m={m}, k={k})");
            ensure!(dirac(&g).is_zero(), "half-integer vector not monogenic (m={m}, k={k})");
            let w = ok(torus_weight(ActionKind::L, &g))?;
            ensure!(w == half_weight(m, k), "L weight (m={m}, k={k}) is {w}");
            // Same scalar written as exp(i k t_1) exp(i/2 sum_j t_j).
            let mut alt = integer_weight(k);
            for p in 1..=m / 2 {
                alt = &alt * &Scalar::cis_half(1, p);
            }
            ensure!(alt == w, "weight forms disagree (m={m}, k={k})");
        }
        let one = PolyState::one(m);
        ensure!(ok(torus_weight(ActionKind::H0, &one))?.is_one(), "[1] has a nontrivial weight");
    }
    Ok(())
}

pub fn first_pairing_form() -> Outcome {
    let m = 2;
    let two = pairing_with_xi(&frame(m).f[0]).scale(&int(2));
    let want = &OperatorElement::xi(m, 1).mul(&OperatorElement::r(m, 1))
        - &OperatorElement::xi(m, 2).mul(&OperatorElement::r(m, 2)).scale(&Scalar::i());
    ensure!(two == want, "2 <xi, f_1> != xi_1 R_1 - i xi_2 R_2");
    Ok(())
}

pub fn perp_highest_weights(ms: &[usize], kmax: usize) -> Outcome {
    for &m in ms {
        for k in 0..=kmax {
            let g = ok(hw_perp(m, k))?;
            // T_2T_1 turns the opposite way to R_2R_1 against the frame, so
            // the torus written with the same index order sees exp(-ikt_1).
            let w = ok(torus_weight(ActionKind::H0Perp, &g))?;
            ensure!(w == integer_weight(k).conj(), "H0perp weight (m={m}, k={k}) is {w}");
        }
    }
    Ok(())
}
