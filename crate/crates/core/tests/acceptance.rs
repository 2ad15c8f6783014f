//! Acceptance run: one line per criterion with its time budget. Exits
//! nonzero if any criterion fails or runs over budget.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dspin::checks::{self as c, Outcome};
use dspin::random::rng;

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Outcome,
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "generator anticommutator tables, m = 1..4",
            limit: secs(5),
            run: || c::algebra_relations(4),
        },
        Criterion {
            id: 2,
            name: "osp(1|2) relations on monomials of degree <= 5, m = 2, 3",
            limit: secs(30),
            run: || c::osp_triple(&[2, 3], 5),
        },
        Criterion {
            id: 3,
            name: "so_matrix double cover, 50 elements per m = 2, 3, 4",
            limit: secs(30),
            run: || c::double_cover(&mut rng(1003), 50, &[2, 3, 4]),
        },
        Criterion {
            id: 4,
            name: "chi(w, x) = x - 2<x, w>w for 50 unit vectors per m = 2, 3, 4",
            limit: None,
            run: || c::reflections(&mut rng(1004), 50, &[2, 3, 4]),
        },
        Criterion {
            id: 5,
            name: "Laplacian commutes with H0, L preserves monogenics, m = 2, 3, degree <= 4",
            limit: secs(120),
            run: || {
                c::laplace_invariance(&mut rng(1005), &[2, 3], 4, 2)?;
                c::monogenic_invariance(&mut rng(1015), &[2, 3], 4, 2)
            },
        },
        Criterion {
            id: 6,
            name: "plane rotations of the linear and quadratic worked states",
            limit: None,
            run: c::worked_examples,
        },
        Criterion {
            id: 7,
            name: "first-order terms H0 -> -2L, H1 -> -2(L - R_ji/2), L -> -2L + [R_ji, .]",
            limit: None,
            run: || c::first_order_labelled(&[2, 3], 3),
        },
        Criterion {
            id: 8,
            name: "plane eigenfunctions and eigendistributions, k <= 4",
            limit: None,
            run: || c::plane_eigenfamilies(4),
        },
        Criterion {
            id: 9,
            name: "rotated shifted delta term by term",
            limit: None,
            run: c::shifted_delta_rotation,
        },
        Criterion {
            id: 10,
            name: "C(k+m-1, k) - C(k+m-3, k) = Laplace kernel rank, m = 2..4, k = 0..5",
            limit: secs(60),
            run: || c::harmonic_dims_binomial(&[2, 3, 4], 5),
        },
        Criterion {
            id: 11,
            name: "highest weight vectors and torus weights, m = 2, 4, k <= 4",
            limit: None,
            run: || c::highest_weights(&[2, 4], 4),
        },
        Criterion {
            id: 12,
            name: "idempotents, frame annihilation and left ideal rank",
            limit: None,
            run: c::idempotents,
        },
        Criterion {
            id: 13,
            name: "exp(theta L_12) closed form = H0 action on degree <= 4 states",
            limit: None,
            run: || c::exp_l12_agreement(4, &mut rng(1013)),
        },
    ]
}

fn main() -> ExitCode {
    let filter: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = Vec::new();
    for cr in criteria().into_iter().filter(|cr| filter.is_none_or(|f| f == cr.id)) {
        let start = Instant::now();
        let result = (cr.run)();
        let elapsed = start.elapsed();
        let over = cr.limit.is_some_and(|l| elapsed > l);
        let budget = cr.limit.map(|l| format!(" / {}s", l.as_secs())).unwrap_or_default();
        let status = match (&result, over) {
            (Ok(()), false) => "PASS".to_string(),
            (Ok(()), true) => "FAIL: over time budget".to_string(),
            (Err(msg), _) => format!("FAIL: {msg}"),
        };
        println!("criterion {:>2}: {} ... {status} ({:.2}s{budget})", cr.id, cr.name, elapsed.as_secs_f64());
        if result.is_err() || over {
            failed.push(cr.id);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed criteria {failed:?}");
        ExitCode::FAILURE
    }
}
