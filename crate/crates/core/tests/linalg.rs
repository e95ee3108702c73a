mod common;

use common::{bareiss_rank, q};
use hlysa_core::linalg::{solve_particular, unit_vector};
use hlysa_core::representation::seeded_rng;
use hlysa_core::{nullspace, LinearSystem, Matrix, Scalar, SubspaceBasis};
use num::Zero;
use proptest::prelude::*;
use rand::Rng;

fn system(rows: &[Vec<Scalar>], unknowns: usize) -> LinearSystem {
    let mut s = LinearSystem::new(unknowns);
    for r in rows {
        s.push(r.clone());
    }
    s
}

fn satisfies(rows: &[Vec<Scalar>], v: &[Scalar]) -> bool {
    rows.iter()
        .all(|r| r.iter().zip(v).map(|(a, b)| a * b).sum::<Scalar>().is_zero())
}

/// Sparse integer systems with occasional fractions and duplicated rows so
/// that rank deficiency actually occurs.
fn seeded_system(seed: u64) -> (Vec<Vec<Scalar>>, usize) {
    let mut rng = seeded_rng(seed);
    let rows = rng.gen_range(1..=7);
    let cols = rng.gen_range(1..=9);
    let mut m: Vec<Vec<Scalar>> = (0..rows)
        .map(|_| {
            (0..cols)
                .map(|_| {
                    if rng.gen_ratio(1, 2) {
                        Scalar::zero()
                    } else {
                        Scalar::new(rng.gen_range(-4..=4).into(), rng.gen_range(1..=3).into())
                    }
                })
                .collect()
        })
        .collect();
    if rows > 2 && rng.gen_ratio(1, 2) {
        let c = q(rng.gen_range(-3..=3));
        let combo: Vec<Scalar> = m[0].iter().zip(&m[1]).map(|(a, b)| a + &c * b).collect();
        m.push(combo);
    }
    (m, cols)
}

#[test]
fn empty_system_is_full_space() {
    let ns = nullspace(&LinearSystem::new(3));
    assert_eq!(ns.dim(), 3);
}

#[test]
fn two_equations_kill_two_unknowns() {
    let rows = vec![vec![q(1), q(0)], vec![q(1), q(1)]];
    assert_eq!(nullspace(&system(&rows, 2)).dim(), 0);
}

#[test]
fn solver_agrees_with_fraction_free_elimination() {
    for seed in 0..64 {
        let (rows, cols) = seeded_system(seed);
        let ns = nullspace(&system(&rows, cols));
        assert_eq!(ns.dim(), cols - bareiss_rank(&rows, cols), "seed {seed}");
        for v in ns.vectors() {
            assert!(satisfies(&rows, v), "seed {seed}");
        }
    }
}

#[test]
fn random_five_by_eight() {
    let mut rng = seeded_rng(58);
    let rows: Vec<Vec<Scalar>> = (0..5).map(|_| (0..8).map(|_| q(rng.gen_range(-5..=5))).collect()).collect();
    let ns = nullspace(&system(&rows, 8));
    assert_eq!(ns.dim(), 8 - bareiss_rank(&rows, 8));
}

#[test]
fn output_is_deterministic() {
    let (rows, cols) = seeded_system(7);
    assert_eq!(nullspace(&system(&rows, cols)), nullspace(&system(&rows, cols)));
}

#[test]
fn particular_solutions() {
    let a = Matrix::from_rows(2, vec![vec![q(1), q(1)], vec![q(2), q(2)]]);
    let x = solve_particular(&a, &[q(3), q(6)]).unwrap();
    assert_eq!(a.apply(&x), vec![q(3), q(6)]);
    assert!(solve_particular(&a, &[q(3), q(7)]).is_none());
}

#[test]
fn subspace_examples() {
    let full = SubspaceBasis::full(3);
    assert!(full.contains(&[q(5), q(-1), q(2)]));
    assert_eq!(full.quotient_dim(&full).unwrap(), 0);

    let plane = SubspaceBasis::span(2, [unit_vector(2, 0), unit_vector(2, 1)]);
    let diag = SubspaceBasis::span(2, [vec![q(1), q(1)]]);
    assert_eq!(plane.quotient_dim(&diag).unwrap(), 1);
    assert!(diag.quotient_dim(&plane).is_err());

    let x = SubspaceBasis::span(2, [unit_vector(2, 0)]);
    assert_eq!(x.sum(&diag).unwrap().dim(), 2);
    assert_eq!(x.intersect(&diag).unwrap().dim(), 0);
    assert_eq!(plane.intersect(&diag).unwrap(), diag);
    assert_eq!(x.first_outside(&diag), Some(&vec![q(1), q(1)]));
    assert!(SubspaceBasis::zero(2).is_zero());
}

fn small_matrix() -> impl Strategy<Value = (Vec<Vec<i64>>, usize)> {
    (1usize..6, 1usize..8).prop_flat_map(|(r, c)| {
        (proptest::collection::vec(proptest::collection::vec(-3i64..=3, c), r), Just(c))
    })
}

proptest! {
    #[test]
    fn nullspace_vectors_solve_every_equation((m, cols) in small_matrix()) {
        let rows: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let ns = nullspace(&system(&rows, cols));
        for v in ns.vectors() {
            prop_assert!(satisfies(&rows, v));
        }
        let rank = Matrix::from_rows(cols, rows.clone()).rank();
        prop_assert_eq!(ns.dim(), cols - rank);
        prop_assert_eq!(rank, bareiss_rank(&rows, cols));
    }

    #[test]
    fn sum_and_intersection_dimensions((m, cols) in small_matrix(), split in 0usize..6) {
        let vs: Vec<Vec<Scalar>> = m.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let k = split.min(vs.len());
        let a = SubspaceBasis::span(cols, vs[..k].to_vec());
        let b = SubspaceBasis::span(cols, vs[k..].to_vec());
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
        prop_assert!(s.contains_subspace(&a) && s.contains_subspace(&b));
        prop_assert!(a.contains_subspace(&i) && b.contains_subspace(&i));
    }
}
