//! Small named algebras used throughout the tests, benches and CLI examples.
//!
//! * `A0`: abelian `(1|1)`, α = id.
//! * `A1`: `(1|1)` with `[e0,e1] = e1 = -[e1,e0]`, ternary bracket zero, α = id.
//! * `A2`: `A1`'s binary bracket with `{x,y,z} = [[x,y],z]`.
//! * `A3`: `A1`'s brackets twisted by α = diag(1, 2).
//! * `sl2_triple`: a rigid `(2|0)` Lie triple system.

use crate::algebra::{Axiom, HomLYSA};
use crate::graded::{GradedMap, MultiTensor, Parity, SuperSpace};
use crate::linalg::Matrix;
use crate::representation::{extract_rep, random_rep, seeded_rng, RepTriple, Split, Summand};
use rand::Rng;
use crate::scalar::{int, ratio, Scalar};

fn space11() -> SuperSpace {
    SuperSpace::new(1, 1)
}

fn diag(space: SuperSpace, entries: &[i64]) -> GradedMap {
    let mut m = Matrix::zeros(space.dim(), space.dim());
    for (i, &d) in entries.iter().enumerate() {
        m[(i, i)] = int(d);
    }
    GradedMap::endo(space, Parity::Even, m).expect("diagonal maps are even")
}

fn tensor(space: SuperSpace, arity: usize, entries: &[(&[usize], usize, i64)]) -> MultiTensor {
    MultiTensor::from_entries(space, arity, entries.iter().map(|&(i, m, v)| (i, m, int(v))))
        .expect("fixture tensors respect parity")
}

fn a1_bracket() -> MultiTensor {
    tensor(space11(), 2, &[(&[0, 1], 1, 1), (&[1, 0], 1, -1)])
}

/// `{x,y,z} = [[x,y],z]` for `A1`'s bracket, written out.
fn a2_ternary() -> MultiTensor {
    tensor(space11(), 3, &[(&[0, 1, 0], 1, -1), (&[1, 0, 0], 1, 1)])
}

pub fn a0() -> HomLYSA {
    let s = space11();
    HomLYSA::new(s, MultiTensor::zero(s, 2), MultiTensor::zero(s, 3), GradedMap::identity(s)).unwrap()
}

pub fn a1() -> HomLYSA {
    let s = space11();
    HomLYSA::new(s, a1_bracket(), MultiTensor::zero(s, 3), GradedMap::identity(s)).unwrap()
}

pub fn a2() -> HomLYSA {
    let s = space11();
    HomLYSA::new(s, a1_bracket(), a2_ternary(), GradedMap::identity(s)).unwrap()
}

pub fn a3() -> HomLYSA {
    let s = space11();
    HomLYSA::new(s, a1_bracket(), MultiTensor::zero(s, 3), diag(s, &[1, 2])).unwrap()
}

/// `A2` twisted by α = diag(1, 2); still satisfies all eight identities.
pub fn a2_twisted() -> HomLYSA {
    let s = space11();
    HomLYSA::new(s, a1_bracket(), a2_ternary(), diag(s, &[1, 2])).unwrap()
}

/// The Lie triple system on `span(E, F) ⊂ sl₂`: zero binary bracket,
/// `{x,y,z} = [[x,y],z]`, α = id. Its degree-(2,3) cohomology vanishes.
pub fn sl2_triple() -> HomLYSA {
    let s = SuperSpace::new(2, 0);
    let b3 = tensor(
        s,
        3,
        &[(&[0, 1, 0], 0, 2), (&[0, 1, 1], 1, -2), (&[1, 0, 0], 0, -2), (&[1, 0, 1], 1, 2)],
    );
    HomLYSA::new(s, MultiTensor::zero(s, 2), b3, GradedMap::identity(s)).unwrap()
}

/// The four corpus algebras with their names.
pub fn corpus() -> Vec<(&'static str, HomLYSA)> {
    vec![("A0", a0()), ("A1", a1()), ("A2", a2()), ("A3", a3())]
}

/// `A1` with `[e1,e0] = +e1`.
pub fn a1_broken_skew() -> HomLYSA {
    let s = space11();
    let b = tensor(s, 2, &[(&[0, 1], 1, 1), (&[1, 0], 1, 1)]);
    HomLYSA::new(s, b, MultiTensor::zero(s, 3), GradedMap::identity(s)).unwrap()
}

/// A super-skew bracket on `(3|0)` that is not a Lie bracket:
/// `[e0,e1] = e2`, `[e1,e2] = e1`.
pub fn non_jacobi() -> HomLYSA {
    let s = SuperSpace::new(3, 0);
    let b = tensor(
        s,
        2,
        &[(&[0, 1], 2, 1), (&[1, 0], 2, -1), (&[1, 2], 1, 1), (&[2, 1], 1, -1)],
    );
    HomLYSA::new(s, b, MultiTensor::zero(s, 3), GradedMap::identity(s)).unwrap()
}

/// Structures engineered to violate one identity each, tagged with the
/// identity they target.
pub fn mutants() -> Vec<(Axiom, &'static str, HomLYSA)> {
    let s = space11();
    let id = GradedMap::identity(s);
    let zero3 = MultiTensor::zero(s, 3);
    let mut out = Vec::new();

    // α = diag(2, 1) does not preserve [e0,e1] = e1.
    out.push((
        Axiom::Shly1,
        "A1 twisted by diag(2,1)",
        HomLYSA::new(s, a1_bracket(), zero3.clone(), diag(s, &[2, 1])).unwrap(),
    ));
    // Zero binary bracket keeps SHLY1 intact; α = diag(2, 1) scales
    // {e0,e1,e0} = -e1 by 4 on the right-hand side only.
    out.push((
        Axiom::Shly2,
        "A2's ternary bracket alone, twisted by diag(2,1)",
        HomLYSA::new(s, MultiTensor::zero(s, 2), a2_ternary(), diag(s, &[2, 1])).unwrap(),
    ));
    out.push((Axiom::Shly3, "A1 with [e1,e0] = +e1", a1_broken_skew()));
    out.push((
        Axiom::Shly4,
        "A2 with {e1,e0,e0} = 0",
        HomLYSA::new(s, a1_bracket(), tensor(s, 3, &[(&[0, 1, 0], 1, -1)]), id.clone()).unwrap(),
    ));
    out.push((Axiom::Shly5, "non-Jacobi bracket on (3|0)", non_jacobi()));
    // Satisfies SHLY1-5 but not the identities coupling the two brackets.
    out.push((
        Axiom::Shly6,
        "A2 with {e1,e1,e0} = e0 and {e0,e1,e1} = -e0/2",
        HomLYSA::new(
            s,
            a1_bracket(),
            MultiTensor::from_entries(
                s,
                3,
                [
                    (&[0usize, 1, 0][..], 1, int(-1)),
                    (&[1, 0, 0][..], 1, int(1)),
                    (&[0, 1, 1][..], 0, ratio(-1, 2)),
                    (&[1, 0, 1][..], 0, ratio(1, 2)),
                    (&[1, 1, 0][..], 0, int(1)),
                ],
            )
            .unwrap(),
            id.clone(),
        )
        .unwrap(),
    ));
    out.push((
        Axiom::Shly7,
        "A1 with {e0,e1,e1} = e0 = -{e1,e0,e1}",
        HomLYSA::new(
            s,
            a1_bracket(),
            tensor(s, 3, &[(&[0, 1, 1], 0, 1), (&[1, 0, 1], 0, -1)]),
            id,
        )
        .unwrap(),
    ));
    // Skew and cyclic on (2|0), but not a derivation of itself.
    let even2 = SuperSpace::new(2, 0);
    out.push((
        Axiom::Shly8,
        "(2|0) with {e0,e1,e0} = -e0 = -{e1,e0,e0}",
        HomLYSA::new(
            even2,
            MultiTensor::zero(even2, 2),
            tensor(even2, 3, &[(&[0, 1, 0], 0, -1), (&[1, 0, 0], 0, 1)]),
            GradedMap::identity(even2),
        )
        .unwrap(),
    ));
    out
}

/// `diag(entries)` as an even map on the given space.
pub fn diagonal(space: SuperSpace, entries: &[Scalar]) -> GradedMap {
    let mut m = Matrix::zeros(space.dim(), space.dim());
    for (i, d) in entries.iter().enumerate() {
        m[(i, i)] = d.clone();
    }
    GradedMap::endo(space, Parity::Even, m).expect("diagonal maps are even")
}

/// `L ⊗ 𝕂[ε]/(ε²)` laid out as `L ⊕ εL` in the semidirect basis order.
///
/// It is a Hom-LY superalgebra whenever `A` is, so reading it back with
/// `extract_rep` yields a representation of `A` on itself.
pub fn dual_number_extension(a: &HomLYSA) -> HomLYSA {
    let base = a.space();
    let split = Split::new(base, base);
    let total = split.total();
    let n = total.dim();
    let lift = |w: &[Scalar], eps: bool| {
        let mut out = vec![int(0); n];
        for (i, c) in w.iter().enumerate() {
            out[if eps { split.v(i) } else { split.l(i) }] = c.clone();
        }
        out
    };
    let b2 = MultiTensor::from_fn(total, 2, |t| {
        match (split.locate(t[0]), split.locate(t[1])) {
            (Summand::L(x), Summand::L(y)) => lift(a.bracket2().basis_image(&[x, y]), false),
            (Summand::L(x), Summand::V(y)) | (Summand::V(x), Summand::L(y)) => {
                lift(a.bracket2().basis_image(&[x, y]), true)
            }
            _ => lift(&[], false),
        }
    })
    .expect("dual-number bracket is even");
    let b3 = MultiTensor::from_fn(total, 3, |t| {
        let locs: Vec<Summand> = t.iter().map(|&g| split.locate(g)).collect();
        let idx: Vec<usize> = locs.iter().map(|s| match *s {
            Summand::L(i) | Summand::V(i) => i,
        }).collect();
        let eps = locs.iter().filter(|s| matches!(s, Summand::V(_))).count();
        match eps {
            0 => lift(a.bracket3().basis_image(&idx), false),
            1 => lift(a.bracket3().basis_image(&idx), true),
            _ => lift(&[], false),
        }
    })
    .expect("dual-number bracket is even");
    let mut alpha = Matrix::zeros(n, n);
    for i in 0..base.dim() {
        for j in 0..base.dim() {
            let c = a.alpha().matrix()[(i, j)].clone();
            alpha[(split.l(i), split.l(j))] = c.clone();
            alpha[(split.v(i), split.v(j))] = c;
        }
    }
    HomLYSA::new(total, b2, b3, GradedMap::endo(total, Parity::Even, alpha).unwrap()).unwrap()
}

/// Module data for the round-trip tests: a deterministic mix of valid and
/// invalid candidates on modules up to `(2|2)`.
///
/// Purely random data is almost never a representation, so the mix also
/// includes zero data with a random β, the adjoint representation read off
/// [`dual_number_extension`], and rescalings of it (which are valid only for
/// some factors).
pub fn rep_candidates(a: &HomLYSA, count: usize, seed: u64) -> Vec<RepTriple> {
    let base = a.space();
    let mut rng = seeded_rng(seed);
    let modules = [
        SuperSpace::new(1, 0),
        SuperSpace::new(0, 1),
        SuperSpace::new(1, 1),
        SuperSpace::new(2, 1),
        SuperSpace::new(2, 2),
    ];
    let adjoint = extract_rep(&dual_number_extension(a), Split::new(base, base))
        .expect("dual-number extension splits")
        .1;
    let n = base.dim();
    (0..count)
        .map(|i| {
            let module = modules[rng.gen_range(0..modules.len())];
            match i % 4 {
                0 | 1 => random_rep(base, module, &mut rng),
                2 => {
                    let beta = random_rep(base, module, &mut rng).beta().clone();
                    RepTriple::zero(base, beta)
                }
                _ => {
                    let c = int(rng.gen_range(-1..=2));
                    let e = int(rng.gen_range(0..=1));
                    let scale = |m: &GradedMap, k: &Scalar| m.scaled(k);
                    RepTriple::new(
                        base,
                        base,
                        adjoint.beta().clone(),
                        (0..n).map(|x| scale(adjoint.rho(x), &c)).collect(),
                        (0..n * n).map(|k| scale(adjoint.d(k / n, k % n), &e)).collect(),
                        (0..n * n).map(|k| scale(adjoint.theta(k / n, k % n), &e)).collect(),
                    )
                    .expect("rescaling keeps parities")
                }
            }
        })
        .collect()
}
