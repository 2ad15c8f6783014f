//! Engine results against values computed from first principles: a
//! fermionic matrix model of the Clifford algebra, floating-point trig,
//! classical harmonic counts and explicit rotation matrices.

use dspin::action::{act, ActionKind};
use dspin::clifford::{Blade, CliffordElement};
use dspin::operator::{unit_index, PolyState};
use dspin::random;
use dspin::repr::dim_hk0;
use dspin::scalar::Scalar;
use dspin::spin::{exp_bivector, so_matrix, Family};
use rand::Rng;

type Mat = Vec<Vec<i64>>;

fn identity(n: usize) -> Mat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

fn matmul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum()).collect()).collect()
}

fn add_scaled(acc: &mut Mat, b: &Mat, k: i64) {
    for (ra, rb) in acc.iter_mut().zip(b) {
        for (x, y) in ra.iter_mut().zip(rb) {
            *x += k * y;
        }
    }
}

/// Jordan-Wigner annihilation (`plus`) or creation operator for mode `j`
/// on `m` fermionic modes, acting on occupation bitstrings.
fn fermion(m: usize, j: usize, plus: bool) -> Mat {
    let n = 1 << m;
    let mut out = vec![vec![0; n]; n];
    for state in 0..n {
        let occupied = state >> j & 1 == 1;
        if occupied != plus {
            continue;
        }
        let sign = if (state & ((1 << j) - 1)).count_ones().is_multiple_of(2) { 1 } else { -1 };
        out[state ^ (1 << j)][state] = sign;
    }
    out
}

/// Product of generators in increasing bit order.
fn blade_matrix(m: usize, b: Blade) -> Mat {
    let mut out = identity(1 << m);
    for bit in 0..2 * m {
        if b >> bit & 1 == 1 {
            out = matmul(&out, &fermion(m, bit / 2, bit % 2 == 0));
        }
    }
    out
}

fn element_matrix(c: &CliffordElement) -> Mat {
    let m = c.dim();
    let mut out = vec![vec![0; 1 << m]; 1 << m];
    for (b, s) in c.terms() {
        let q = s.as_constant().expect("constant coefficients");
        assert!(q.is_real() && q.re.is_integer());
        let k: i64 = q.re.to_integer().try_into().unwrap();
        add_scaled(&mut out, &blade_matrix(m, *b), k);
    }
    out
}

fn random_integer_element(rng: &mut impl Rng, m: usize) -> CliffordElement {
    CliffordElement::from_terms(
        m,
        (0..4).map(|_| (rng.gen_range(0..1u32 << (2 * m)), Scalar::from_int(rng.gen_range(-3..=3)))),
    )
}

#[test]
fn clifford_product_matches_fermion_matrices() {
    let mut rng = random::rng(99);
    for m in 1..=3 {
        for b in 0..1u32 << (2 * m) {
            for g in 0..2 * m {
                let blade = CliffordElement::blade(m, b, Scalar::one());
                let gen = CliffordElement::blade(m, 1 << g, Scalar::one());
                assert_eq!(element_matrix(&blade.mul(&gen)), matmul(&blade_matrix(m, b), &blade_matrix(m, 1 << g)));
            }
        }
        for _ in 0..30 {
            let a = random_integer_element(&mut rng, m);
            let b = random_integer_element(&mut rng, m);
            assert_eq!(element_matrix(&a.mul(&b)), matmul(&element_matrix(&a), &element_matrix(&b)), "m={m}");
        }
    }
}

#[test]
fn fermion_matrices_are_faithful() {
    // 2^(2m) blades map to linearly independent matrices, so the check above
    // compares elements and not just images.
    for m in 1..=2 {
        let n = 1 << m;
        let vecs: Vec<Vec<f64>> = (0..1u32 << (2 * m))
            .map(|b| blade_matrix(m, b).into_iter().flatten().map(|x| x as f64).collect())
            .collect();
        assert_eq!(float_rank(vecs), n * n);
    }
}

fn float_rank(mut rows: Vec<Vec<f64>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs())) else { break };
        if rows[p][c].abs() < 1e-9 {
            continue;
        }
        rows.swap(rank, p);
        for r in 0..rows.len() {
            if r != rank {
                let f = rows[r][c] / rows[rank][c];
                let pivot = rows[rank].clone();
                for (x, y) in rows[r].iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Kernel dimension of the classical Laplacian on homogeneous polynomials
/// of degree `k` in `m` commuting variables.
fn classical_harmonic_dim(m: usize, k: usize) -> usize {
    fn monomials(m: usize, k: usize) -> Vec<Vec<usize>> {
        if m == 1 {
            return vec![vec![k]];
        }
        (0..=k)
            .rev()
            .flat_map(|a| monomials(m - 1, k - a).into_iter().map(move |mut rest| {
                rest.insert(0, a);
                rest
            }))
            .collect()
    }
    let src = monomials(m, k);
    if k < 2 {
        return src.len();
    }
    let dst = monomials(m, k - 2);
    let mut rows = vec![vec![0.0; src.len()]; dst.len()];
    for (c, a) in src.iter().enumerate() {
        for j in 0..m {
            if a[j] >= 2 {
                let mut b = a.clone();
                b[j] -= 2;
                let r = dst.iter().position(|d| *d == b).unwrap();
                rows[r][c] += (a[j] * (a[j] - 1)) as f64;
            }
        }
    }
    src.len() - float_rank(rows)
}

#[test]
fn harmonic_rank_matches_classical_count() {
    for m in 2..=4 {
        for k in 0..=5 {
            let d = dim_hk0(m, k).unwrap();
            assert_eq!(d.rank, classical_harmonic_dim(m, k) as i64, "m={m} k={k}");
            assert_eq!(d.rank, d.difference, "m={m} k={k}");
        }
    }
}

#[test]
fn half_angle_trig_matches_floats() {
    for k in -5..=5 {
        for &t in &[0.0, 0.3, 1.0, -2.2, 3.1] {
            let c = Scalar::cos_kt(k, 1).eval(&[t]).unwrap();
            let s = Scalar::sin_kt(k, 1).eval(&[t]).unwrap();
            assert!((c.re - (k as f64 * t).cos()).abs() < 1e-12 && c.im.abs() < 1e-12);
            assert!((s.re - (k as f64 * t).sin()).abs() < 1e-12 && s.im.abs() < 1e-12);
            let h = Scalar::cis_half(2 * k + 1, 1).eval(&[t]).unwrap();
            let arg = (k as f64 + 0.5) * t;
            assert!((h.re - arg.cos()).abs() < 1e-12 && (h.im - arg.sin()).abs() < 1e-12);
        }
    }
}

#[test]
fn plane_rotor_matrix_matches_rotation() {
    let s = exp_bivector(Family::R, 2, &[(1, (2, 1))]).unwrap();
    let mat = so_matrix(&s).unwrap();
    for &t in &[0.0f64, 0.7, 2.0, -1.3] {
        let expect = [[t.cos(), t.sin()], [-t.sin(), t.cos()]];
        for i in 0..2 {
            for j in 0..2 {
                let v = mat.entries[i][j].eval(&[t]).unwrap();
                assert!((v.re - expect[i][j]).abs() < 1e-12, "entry ({i},{j}) at t={t}");
            }
        }
    }
}

#[test]
fn numeric_rotation_of_a_linear_state() {
    let m = 2;
    let s = exp_bivector(Family::R, m, &[(1, (2, 1))]).unwrap();
    let f = PolyState::monomial(unit_index(1), CliffordElement::one(m));
    let g = act(ActionKind::H0, &s, &f).unwrap();
    let e21 = CliffordElement::e_word(m, &[2, 1]);
    let (blade, sign) = e21.terms().iter().next().map(|(b, c)| (*b, c.eval(&[0.0]).unwrap().re)).unwrap();
    for p in 0..12 {
        let t = p as f64 * std::f64::consts::PI / 6.0;
        let a = g.coeff(&unit_index(1)).coeff(0).eval(&[t]).unwrap();
        let b = g.coeff(&unit_index(2)).coeff(blade).eval(&[t]).unwrap();
        assert!((a.re - t.cos()).abs() < 1e-10);
        assert!((b.re + sign * t.sin()).abs() < 1e-10);
    }
}
