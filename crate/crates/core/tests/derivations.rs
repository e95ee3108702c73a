mod common;

use common::{bareiss_rank, q, sub, tuples, Raw, Q, V};
use hlysa_core::derivations::{
    center, center_with, family_dims, family_residual, super_commutator, CenterReading,
};
use hlysa_core::fixtures::{self, diagonal, dual_number_extension};
use hlysa_core::{check_tower, family_basis, Family, GradedMap, HomLYSA, Matrix, Parity};
use num::Zero;

fn structures() -> Vec<(&'static str, HomLYSA)> {
    let mut v = fixtures::corpus();
    v.push(("A2 twisted", fixtures::a2_twisted()));
    v.push(("sl2 triple", fixtures::sl2_triple()));
    v
}

/// Row-major `n × n` coordinates applied to a vector.
fn apply(m: &[Q], v: &V) -> V {
    let n = v.len();
    (0..n).map(|r| (0..n).map(|c| &m[r * n + c] * &v[c]).sum()).collect()
}

fn add(a: &V, b: &V) -> V {
    common::add(a, b)
}

fn sg(bits: u8, v: &V) -> V {
    if bits % 2 == 0 {
        v.clone()
    } else {
        v.iter().map(|x| -x).collect()
    }
}

fn alpha_k(raw: &Raw, k: u32) -> Vec<Q> {
    let n = raw.n;
    let mut m: Vec<Q> = (0..n * n).map(|i| if i / n == i % n { q(1) } else { q(0) }).collect();
    for _ in 0..k {
        m = (0..n * n)
            .map(|i| (0..n).map(|t| &raw.al[i / n][t] * &m[t * n + i % n]).sum())
            .collect();
    }
    m
}

fn witness_count(f: Family) -> usize {
    match f {
        Family::GDer => 3,
        Family::QDer => 2,
        _ => 0,
    }
}

/// The defining identities of each family on every basis tuple, read
/// directly off the definitions. `maps[0]` is D, the rest are witnesses.
fn identities(raw: &Raw, family: Family, k: u32, s: u8, maps: &[Vec<Q>]) -> V {
    let n = raw.n;
    let ak = alpha_k(raw, k);
    let a = |v: &V| apply(&ak, v);
    let e: Vec<V> = (0..n).map(|i| raw.e(i)).collect();
    let d = |i: usize, v: &V| apply(&maps[i], v);
    let p = &raw.p;
    let mut out = Vec::new();
    for t in tuples(n, 2) {
        let (x, y) = (&e[t[0]], &e[t[1]]);
        let sx = s * p[t[0]];
        let first = raw.b2(&d(0, x), &a(y));
        let second = sg(sx, &raw.b2(&a(x), &d(0, y)));
        let image = d(0, &raw.b2(x, y));
        match family {
            Family::Der => out.extend(sub(&sub(&image, &second), &first)),
            Family::GDer => {
                let second = sg(sx, &raw.b2(&a(x), &d(1, y)));
                out.extend(sub(&add(&first, &second), &d(2, &raw.b2(x, y))));
            }
            Family::QDer => out.extend(sub(&add(&first, &second), &d(1, &raw.b2(x, y)))),
            Family::Centroid => {
                out.extend(sub(&first, &second));
                out.extend(sub(&first, &image));
            }
            Family::QCentroid => out.extend(sub(&first, &second)),
            Family::ZDer => {
                out.extend(first);
                out.extend(image);
            }
        }
    }
    for t in tuples(n, 3) {
        let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
        let s1 = s * p[t[0]];
        let s2 = s * (p[t[0]] + p[t[1]]);
        let t1 = raw.b3(&d(0, x), &a(y), &a(z));
        let t2 = sg(s1, &raw.b3(&a(x), &d(0, y), &a(z)));
        let t3 = sg(s2, &raw.b3(&a(x), &a(y), &d(0, z)));
        let image = d(0, &raw.b3(x, y, z));
        match family {
            Family::Der => out.extend(sub(&sub(&sub(&image, &t1), &t2), &t3)),
            Family::GDer => {
                let t2 = sg(s1, &raw.b3(&a(x), &d(1, y), &a(z)));
                let t3 = sg(s2, &raw.b3(&a(x), &a(y), &d(2, z)));
                out.extend(sub(&add(&add(&t1, &t2), &t3), &d(3, &raw.b3(x, y, z))));
            }
            Family::QDer => out.extend(sub(&add(&add(&t1, &t2), &t3), &d(2, &raw.b3(x, y, z)))),
            Family::Centroid => {
                out.extend(sub(&t1, &t2));
                out.extend(sub(&t1, &t3));
                out.extend(sub(&t1, &image));
            }
            Family::QCentroid => {
                out.extend(sub(&t1, &t2));
                out.extend(sub(&t1, &t3));
            }
            Family::ZDer => {
                out.extend(t1);
                out.extend(image);
            }
        }
    }
    out
}

/// Dimension of the projection onto D of the joint solution space, from
/// ranks alone.
fn oracle_dim(a: &HomLYSA, family: Family, k: u32, s: u8) -> usize {
    let raw = Raw::of(a);
    let n = raw.n;
    let m = n * n;
    let count = 1 + witness_count(family);
    let total = count * m;
    let mut rows: Vec<V> = Vec::new();
    let unit = |pos: usize| {
        let mut r = vec![q(0); total];
        r[pos] = q(1);
        r
    };
    for b in 0..count {
        for i in 0..n {
            for j in 0..n {
                if raw.p[i] != (raw.p[j] + s) % 2 {
                    rows.push(unit(b * m + i * n + j));
                }
                let mut r = vec![q(0); total];
                for t in 0..n {
                    r[b * m + i * n + t] += &raw.al[t][j];
                    r[b * m + t * n + j] -= &raw.al[i][t];
                }
                rows.push(r);
            }
        }
    }
    let columns: Vec<V> = (0..total)
        .map(|c| {
            let u = unit(c);
            let maps: Vec<Vec<Q>> = u.chunks(m).map(<[Q]>::to_vec).collect();
            identities(&raw, family, k, s, &maps)
        })
        .collect();
    for r in 0..columns[0].len() {
        rows.push(columns.iter().map(|c| c[r].clone()).collect());
    }
    let joint = bareiss_rank(&rows, total);
    for i in 0..m {
        rows.push(unit(i));
    }
    bareiss_rank(&rows, total) - joint
}

#[test]
fn dimensions_match_second_assembler() {
    for (name, a) in structures() {
        for family in Family::ALL {
            for k in 0..3 {
                let (even, odd) = family_dims(&a, family, k);
                assert_eq!(even, oracle_dim(&a, family, k, 0), "{name} {family} k={k} even");
                assert_eq!(odd, oracle_dim(&a, family, k, 1), "{name} {family} k={k} odd");
            }
        }
    }
}

#[test]
fn hand_computed_dimensions() {
    let a0 = fixtures::a0();
    for family in Family::ALL {
        assert_eq!(family_dims(&a0, family, 0), (2, 2), "{family}");
    }
    let a1 = fixtures::a1();
    assert_eq!(family_dims(&a1, Family::Der, 0), (1, 1));
    assert_eq!(family_dims(&a1, Family::Centroid, 0), (1, 0));
    assert_eq!(family_dims(&a1, Family::QCentroid, 0), (1, 1));
    assert_eq!(family_dims(&a1, Family::ZDer, 0), (0, 0));
    assert_eq!(center(&a1).dim(), 0);
    assert_eq!(center(&a0).dim(), 2);
    assert_eq!(center(&fixtures::a2()).dim(), 0);
}

#[test]
fn a1_bases_have_the_recorded_shape() {
    let a1 = fixtures::a1();
    // Even derivation: e1 ↦ e1. Odd derivation: e0 ↦ e1.
    let even = family_basis(&a1, Family::Der, 0, Parity::Even);
    assert_eq!(even.basis[0].matrix(), &Matrix::from_rows(2, vec![vec![q(0), q(0)], vec![q(0), q(1)]]));
    let odd = family_basis(&a1, Family::Der, 0, Parity::Odd);
    assert_eq!(odd.basis[0].matrix(), &Matrix::from_rows(2, vec![vec![q(0), q(0)], vec![q(1), q(0)]]));
    // Centroid: scalars.
    let c = family_basis(&a1, Family::Centroid, 0, Parity::Even);
    assert!(c.span().contains(&[q(1), q(0), q(0), q(1)]));
    // Odd quasicentroid: e1 ↦ e0.
    let qc = family_basis(&a1, Family::QCentroid, 0, Parity::Odd);
    assert!(qc.span().contains(&[q(0), q(1), q(0), q(0)]));
}

#[test]
fn basis_elements_satisfy_their_definitions() {
    for (name, a) in structures() {
        let raw = Raw::of(&a);
        for family in Family::ALL {
            for k in 0..3 {
                for parity in [Parity::Even, Parity::Odd] {
                    let fb = family_basis(&a, family, k, parity);
                    for (d, w) in fb.basis.iter().zip(&fb.witnesses) {
                        let mut maps = vec![d.clone()];
                        maps.extend(w.iter().cloned());
                        assert!(family_residual(&a, family, k, &maps).iter().all(Zero::is_zero), "{name} {family}");
                        let coords: Vec<Vec<Q>> = maps.iter().map(|m| m.coords()).collect();
                        assert!(
                            identities(&raw, family, k, parity.bit(), &coords).iter().all(Zero::is_zero),
                            "{name} {family} k={k}"
                        );
                        assert!(d.commutes_with(a.alpha()));
                    }
                }
            }
        }
    }
}

#[test]
fn identity_is_a_generalized_derivation() {
    let a1 = fixtures::a1();
    let s = a1.space();
    let id = GradedMap::identity(s);
    let maps = [id.clone(), id.clone(), id.scaled(&q(2)), GradedMap::zero(s, s, Parity::Even)];
    assert!(family_residual(&a1, Family::GDer, 0, &maps).iter().all(Zero::is_zero));
    assert!(family_basis(&a1, Family::GDer, 0, Parity::Even).span().contains(&id.coords()));
}

#[test]
fn everything_is_a_quasiderivation_of_the_abelian_algebra() {
    let a0 = fixtures::a0();
    assert_eq!(family_dims(&a0, Family::QDer, 0), (2, 2));
}

#[test]
fn commutator_examples() {
    let a1 = fixtures::a1();
    let s = a1.space();
    let d = diagonal(s, &[q(3), q(-1)]);
    assert!(super_commutator(&d, &d).is_zero());
    let odd = GradedMap::endo(s, Parity::Odd, Matrix::from_rows(2, vec![vec![q(0), q(0)], vec![q(1), q(0)]])).unwrap();
    assert!(super_commutator(&GradedMap::identity(s), &odd).is_zero());
    let de = diagonal(s, &[q(0), q(1)]);
    let c = super_commutator(&de, &odd);
    assert_eq!(c.parity(), Parity::Odd);
    assert_eq!(c.column(0), vec![q(0), q(1)]);
    // Odd with itself: 2·D², which vanishes here since D² = 0.
    assert!(super_commutator(&odd, &odd).is_zero());
}

#[test]
fn center_readings() {
    for (name, a) in structures() {
        assert_eq!(center_with(&a, CenterReading::Full), center_with(&a, CenterReading::FirstSlot), "{name}");
    }
}

#[test]
fn tower_holds_on_corpus() {
    for (name, a) in structures() {
        let kmax = if a.alpha().is_identity() { 1 } else { 2 };
        let report = check_tower(&a, kmax);
        let failures: Vec<String> = report.failures().map(|c| c.to_string()).collect();
        assert!(failures.is_empty(), "{name}: {failures:?}");
        assert!(report.checks.len() >= 13, "{name}");
    }
}

#[test]
fn tower_holds_on_dual_number_extension() {
    let report = check_tower(&dual_number_extension(&fixtures::a1()), 1);
    assert!(report.all_hold());
}
