mod common;

use common::{bareiss_rank, ev2, ev3, q, sub, t2_from, t3_from, tuples, Raw, Q, T2, T3, V};
use hlysa_core::cohomology::{
    cochain_space, h23_dims, is_cochain, literal_alternation, one_cochain_basis, CochainCondition,
};
use hlysa_core::fixtures::{self, diagonal};
use hlysa_core::representation::seeded_rng;
use hlysa_core::{cocycle_residual, delta1, h23, CochainPair, GradedMap, HomLYSA, Matrix, MultiTensor, Parity, SuperSpace};
use num::Zero;
use proptest::prelude::*;
use rand::Rng;

fn structures() -> Vec<(&'static str, HomLYSA)> {
    let mut v = fixtures::corpus();
    v.push(("A2 twisted", fixtures::a2_twisted()));
    v.push(("sl2 triple", fixtures::sl2_triple()));
    v
}

fn add(a: &V, b: &V) -> V {
    common::add(a, b)
}

fn signed(raw: &Raw, bits: u8, v: &V) -> V {
    common::scale(&raw.sign(bits), v)
}

/// E1-E4 written out from their definitions, for arbitrary tensors `f`, `g`
/// (cochain or not), as one long vector.
fn raw_residual(raw: &Raw, f: &T2, g: &T3) -> V {
    let n = raw.n;
    let e: Vec<V> = (0..n).map(|i| raw.e(i)).collect();
    let p = &raw.p;
    let mut out = Vec::new();
    for t in tuples(n, 3) {
        let mut acc = vec![q(0); n];
        for (x, y, z) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            let term = add(
                &add(&raw.b2(&ev2(f, &e[x], &e[y]), &raw.a(&e[z])), &ev2(f, &raw.b2(&e[x], &e[y]), &raw.a(&e[z]))),
                &ev3(g, &e[x], &e[y], &e[z]),
            );
            acc = add(&acc, &signed(raw, p[x] * p[z], &term));
        }
        out.extend(acc);
    }
    for t in tuples(n, 4) {
        let u = t[3];
        let mut acc = vec![q(0); n];
        for (x, y, z) in [(t[0], t[1], t[2]), (t[1], t[2], t[0]), (t[2], t[0], t[1])] {
            let term = add(
                &raw.b3(&ev2(f, &e[x], &e[y]), &raw.a(&e[z]), &raw.a(&e[u])),
                &ev3(g, &raw.b2(&e[x], &e[y]), &raw.a(&e[z]), &raw.a(&e[u])),
            );
            acc = add(&acc, &signed(raw, p[x] * p[z], &term));
        }
        out.extend(acc);
    }
    for t in tuples(n, 4) {
        let (x, y, u, v) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]]);
        let s = p[t[2]] * (p[t[0]] + p[t[1]]);
        let lhs = add(&raw.b3(&raw.a(x), &raw.a(y), &ev2(f, u, v)), &ev3(g, &raw.a(x), &raw.a(y), &raw.b2(u, v)));
        let r1 = add(&raw.b2(&ev3(g, x, y, u), &raw.a2(v)), &ev2(f, &raw.b3(x, y, u), &raw.a2(v)));
        let r2 = add(&raw.b2(&raw.a2(u), &ev3(g, x, y, v)), &ev2(f, &raw.a2(u), &raw.b3(x, y, v)));
        out.extend(sub(&sub(&lhs, &r1), &signed(raw, s, &r2)));
    }
    for t in tuples(n, 5) {
        let (x, y, u, v, w) = (&e[t[0]], &e[t[1]], &e[t[2]], &e[t[3]], &e[t[4]]);
        let xy = p[t[0]] + p[t[1]];
        let lhs = add(
            &raw.b3(&raw.a2(x), &raw.a2(y), &ev3(g, u, v, w)),
            &ev3(g, &raw.a2(x), &raw.a2(y), &raw.b3(u, v, w)),
        );
        let r1 = add(
            &raw.b3(&ev3(g, x, y, u), &raw.a2(v), &raw.a2(w)),
            &ev3(g, &raw.b3(x, y, u), &raw.a2(v), &raw.a2(w)),
        );
        let r2 = add(
            &raw.b3(&raw.a2(u), &ev3(g, x, y, v), &raw.a2(w)),
            &ev3(g, &raw.a2(u), &raw.b3(x, y, v), &raw.a2(w)),
        );
        let r3 = add(
            &raw.b3(&raw.a2(u), &raw.a2(v), &ev3(g, x, y, w)),
            &ev3(g, &raw.a2(u), &raw.a2(v), &raw.b3(x, y, w)),
        );
        let o = sub(&lhs, &r1);
        let o = sub(&o, &signed(raw, p[t[2]] * xy, &r2));
        out.extend(sub(&o, &signed(raw, (p[t[2]] + p[t[3]]) * xy, &r3)));
    }
    out
}

/// Linear constraints cutting the cochain space out of all `(f, g)`
/// coordinates: parity, super-skewness and α-equivariance.
fn cochain_constraints(raw: &Raw) -> Vec<V> {
    let n = raw.n;
    let (n2, n3) = (n * n * n, n * n * n * n);
    let total = n2 + n3;
    let p = &raw.p;
    let mut rows = Vec::new();
    let unit = |pos: usize| {
        let mut r = vec![q(0); total];
        r[pos] = q(1);
        r
    };
    for t in tuples(n, 2) {
        for m in 0..n {
            let pos = (t[0] * n + t[1]) * n + m;
            if p[m] != (p[t[0]] + p[t[1]]) % 2 {
                rows.push(unit(pos));
            }
            let mut r = unit(pos);
            r[(t[1] * n + t[0]) * n + m] += raw.sign(p[t[0]] * p[t[1]]);
            rows.push(r);
        }
    }
    for t in tuples(n, 3) {
        for m in 0..n {
            let pos = n2 + ((t[0] * n + t[1]) * n + t[2]) * n + m;
            if p[m] != (p[t[0]] + p[t[1]] + p[t[2]]) % 2 {
                rows.push(unit(pos));
            }
            let mut r = unit(pos);
            r[n2 + ((t[1] * n + t[0]) * n + t[2]) * n + m] += raw.sign(p[t[0]] * p[t[1]]);
            rows.push(r);
        }
    }
    // Equivariance, as a linear map of the coordinates evaluated on units.
    let columns: Vec<V> = (0..total)
        .map(|k| {
            let mut u = vec![q(0); total];
            u[k] = q(1);
            let (f, g) = (t2_from(n, &u[..n2]), t3_from(n, &u[n2..]));
            let e: Vec<V> = (0..n).map(|i| raw.e(i)).collect();
            let mut out = Vec::new();
            for t in tuples(n, 2) {
                out.extend(sub(&raw.a(&ev2(&f, &e[t[0]], &e[t[1]])), &ev2(&f, &raw.a(&e[t[0]]), &raw.a(&e[t[1]]))));
            }
            for t in tuples(n, 3) {
                out.extend(sub(
                    &raw.a(&ev3(&g, &e[t[0]], &e[t[1]], &e[t[2]])),
                    &ev3(&g, &raw.a(&e[t[0]]), &raw.a(&e[t[1]]), &raw.a(&e[t[2]])),
                ));
            }
            out
        })
        .collect();
    rows.extend(transpose(&columns));
    rows
}

fn transpose(columns: &[V]) -> Vec<V> {
    if columns.is_empty() {
        return vec![];
    }
    (0..columns[0].len()).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect()
}

/// `(dim cochains, dim Z, dim B)` computed from ranks alone.
fn oracle_dims(a: &HomLYSA) -> (usize, usize, usize) {
    let raw = Raw::of(a);
    let n = raw.n;
    let n2 = n * n * n;
    let total = n2 + n * n * n * n;
    let cons = cochain_constraints(&raw);
    let rc = bareiss_rank(&cons, total);
    let e_cols: Vec<V> = (0..total)
        .map(|k| {
            let mut u = vec![q(0); total];
            u[k] = q(1);
            raw_residual(&raw, &t2_from(n, &u[..n2]), &t3_from(n, &u[n2..]))
        })
        .collect();
    let mut with_e = cons.clone();
    with_e.extend(transpose(&e_cols));
    let z = total - bareiss_rank(&with_e, total);

    // One-cochains: even maps commuting with α, as n² coordinates.
    let m = n * n;
    let mut phi_cons: Vec<V> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if raw.p[i] != raw.p[j] {
                let mut r = vec![q(0); m];
                r[i * n + j] = q(1);
                phi_cons.push(r);
            }
            // (φα − αφ)[i][j]
            let mut r = vec![q(0); m];
            for k in 0..n {
                r[i * n + k] += &raw.al[k][j];
                r[k * n + j] -= &raw.al[i][k];
            }
            phi_cons.push(r);
        }
    }
    let delta_cols: Vec<V> = (0..m)
        .map(|k| {
            let phi = |v: &V| -> V { (0..n).map(|r| if r == k / n { v[k % n].clone() } else { q(0) }).collect() };
            let e: Vec<V> = (0..n).map(|i| raw.e(i)).collect();
            let mut out = Vec::new();
            for t in tuples(n, 2) {
                let (x, y) = (&e[t[0]], &e[t[1]]);
                let v = add(&raw.b2(&phi(x), y), &raw.b2(x, &phi(y)));
                out.extend(sub(&v, &phi(&raw.b2(x, y))));
            }
            for t in tuples(n, 3) {
                let (x, y, z) = (&e[t[0]], &e[t[1]], &e[t[2]]);
                let v = add(&add(&raw.b3(&phi(x), y, z), &raw.b3(x, &phi(y), z)), &raw.b3(x, y, &phi(z)));
                out.extend(sub(&v, &phi(&raw.b3(x, y, z))));
            }
            out
        })
        .collect();
    let r_phi = bareiss_rank(&phi_cons, m);
    let mut with_delta = phi_cons.clone();
    with_delta.extend(transpose(&delta_cols));
    let b = bareiss_rank(&with_delta, m) - r_phi;
    (total - rc, z, b)
}

#[test]
fn dimensions_match_independent_rank_count() {
    for (name, a) in structures() {
        let (c, z, b) = oracle_dims(&a);
        assert_eq!(cochain_space(&a).1.dim(), c, "{name}");
        assert_eq!(h23_dims(&a).unwrap(), (z, b, z - b), "{name}");
    }
}

#[test]
fn abelian_dimensions() {
    // On (1|1) with zero brackets: f has 2 free entries, g has 4; the only
    // cocycle condition is the cyclic sum of g, which removes 2.
    let a0 = fixtures::a0();
    assert_eq!(cochain_space(&a0).1.dim(), 6);
    assert_eq!(h23_dims(&a0).unwrap(), (4, 0, 4));
    assert_eq!(oracle_dims(&a0), (6, 4, 0));
}

#[test]
fn rigid_triple() {
    assert_eq!(h23_dims(&fixtures::sl2_triple()).unwrap(), (3, 3, 0));
}

#[test]
fn delta_squared_vanishes() {
    for (name, a) in structures() {
        let basis = one_cochain_basis(&a);
        assert!(!basis.is_empty(), "{name}");
        for phi in basis {
            let p = delta1(&a, &phi).unwrap();
            assert!(cocycle_residual(&a, &p).unwrap().is_zero(), "{name}");
            assert!(is_cochain(&a, &p).unwrap().holds, "{name}");
            // The engine's δ¹ agrees with the raw expansion.
            let raw = Raw::of(&a);
            let n = a.dim();
            let flat: V = p.f.data().iter().chain(p.g.data()).cloned().collect();
            assert!(raw_residual(&raw, &t2_from(n, &flat[..n * n * n]), &t3_from(n, &flat[n * n * n..]))
                .iter()
                .all(Zero::is_zero));
        }
    }
}

#[test]
fn coboundaries_lie_in_cocycles() {
    for (name, a) in structures() {
        let h = h23(&a).unwrap();
        assert!(h.z.contains_subspace(&h.b), "{name}");
    }
}

#[test]
fn delta_examples() {
    let a1 = fixtures::a1();
    let s = a1.space();
    assert!(delta1(&a1, &GradedMap::zero(s, s, Parity::Even)).unwrap().is_zero());

    let a2 = fixtures::a2();
    let p = delta1(&a2, &GradedMap::identity(s)).unwrap();
    assert_eq!(p.f, a2.bracket2().clone());
    assert_eq!(p.g, a2.bracket3().scaled(&q(2)));

    let p = delta1(&a1, &diagonal(s, &[q(1), q(0)])).unwrap();
    assert_eq!(p.f.basis_image(&[0, 1]), &[q(0), q(1)]);
    assert!(p.g.is_zero());
    assert!(!h23(&a1).unwrap().b.is_zero());

    // Odd maps are not one-cochains.
    let odd = GradedMap::endo(s, Parity::Odd, Matrix::from_rows(2, vec![vec![q(0), q(0)], vec![q(1), q(0)]])).unwrap();
    assert!(delta1(&a1, &odd).is_err());
}

#[test]
fn cochain_examples() {
    let a1 = fixtures::a1();
    assert!(is_cochain(&a1, &CochainPair::zero(a1.space())).unwrap().holds);
    let own = CochainPair { f: a1.bracket2().clone(), g: MultiTensor::zero(a1.space(), 3) };
    assert!(is_cochain(&a1, &own).unwrap().holds);
    assert!(cocycle_residual(&a1, &own).unwrap().is_zero());

    let s = SuperSpace::new(2, 0);
    let ab = HomLYSA::new(s, MultiTensor::zero(s, 2), MultiTensor::zero(s, 3), GradedMap::identity(s)).unwrap();
    let sym = MultiTensor::from_entries(s, 2, [(&[0usize, 1][..], 0, q(1)), (&[1, 0][..], 0, q(1))]).unwrap();
    let p = CochainPair { f: sym, g: MultiTensor::zero(s, 3) };
    let check = is_cochain(&ab, &p).unwrap();
    assert_eq!(check.witness, Some((CochainCondition::SkewF, vec![0, 1])));
    // Literal alternation looks at repeated even arguments only, so it
    // does not see this one.
    assert!(literal_alternation(&p).holds);
}

fn random_pair(a: &HomLYSA, seed: u64) -> CochainPair {
    let mut rng = seeded_rng(seed);
    let s = a.space();
    let mut draw = |arity| {
        MultiTensor::from_fn(s, arity, |t: &[usize]| {
            let p = t.iter().fold(Parity::Even, |acc, &i| acc + s.parity(i));
            (0..s.dim())
                .map(|m| if s.parity(m) == p { q(rng.gen_range(-2..=2)) } else { q(0) })
                .collect()
        })
        .unwrap()
    };
    CochainPair { f: draw(2), g: draw(3) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn residual_is_linear(idx in 0usize..6, s1 in 0u64..1000, s2 in 0u64..1000, c in -3i64..=3) {
        let a = structures()[idx].1.clone();
        let (p1, p2) = (random_pair(&a, s1), random_pair(&a, s2));
        let c: Q = q(c);
        let lhs = cocycle_residual(&a, &p1.scaled(&c).add(&p2)).unwrap().flatten();
        let r1 = cocycle_residual(&a, &p1).unwrap().flatten();
        let r2 = cocycle_residual(&a, &p2).unwrap().flatten();
        let rhs: V = r1.iter().zip(&r2).map(|(x, y)| &c * x + y).collect();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn residual_vanishes_exactly_on_cocycles(idx in 0usize..6, seed in 0u64..1000) {
        let a = structures()[idx].1.clone();
        let (coords, z) = hlysa_core::cohomology::z23_basis(&a);
        let mut rng = seeded_rng(seed);
        let w: Vec<Q> = (0..z.dim()).map(|_| q(rng.gen_range(-3..=3))).collect();
        let p = coords.to_pair(&z.combine(&w));
        prop_assert!(cocycle_residual(&a, &p).unwrap().is_zero());
    }
}
