//! Oracles shared by the integration tests. Nothing here calls into the
//! engine's evaluation code: structure constants are copied out into plain
//! arrays and the identities are expanded directly from their definitions.

#![allow(dead_code)]

use hlysa_core::{HomLYSA, Scalar};
use num::{BigInt, BigRational, Integer, One, Signed, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    BigRational::from_integer(n.into())
}

/// Rank by fraction-free (Bareiss) elimination over the integers. Rows are
/// first cleared of denominators.
pub fn bareiss_rank(rows: &[Vec<Scalar>], cols: usize) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            r.iter().map(|x| x.numer() * (&l / x.denom())).collect()
        })
        .collect();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for i in rank + 1..m.len() {
            for j in c + 1..cols {
                let v = &m[rank][c] * &m[i][j] - &m[i][c] * &m[rank][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[rank][c].clone();
        rank += 1;
    }
    rank
}

/// Dense copy of an algebra's constants.
pub struct Raw {
    pub n: usize,
    pub p: Vec<u8>,
    pub c2: T2,
    pub c3: T3,
    pub al: Vec<Vec<Q>>,
}

pub type V = Vec<Q>;
pub type T2 = Vec<Vec<V>>;
pub type T3 = Vec<Vec<Vec<V>>>;

/// Bilinear extension of `c[i][j]`.
pub fn ev2(c: &T2, x: &V, y: &V) -> V {
    let n = x.len();
    let mut out = vec![q(0); n];
    for i in 0..n {
        for j in 0..n {
            let k = &x[i] * &y[j];
            if k.is_zero() {
                continue;
            }
            for m in 0..n {
                out[m] += &k * &c[i][j][m];
            }
        }
    }
    out
}

/// Trilinear extension of `c[i][j][k]`.
pub fn ev3(c: &T3, x: &V, y: &V, z: &V) -> V {
    let n = x.len();
    let mut out = vec![q(0); n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let w = &x[i] * &y[j] * &z[k];
                if w.is_zero() {
                    continue;
                }
                for m in 0..n {
                    out[m] += &w * &c[i][j][k][m];
                }
            }
        }
    }
    out
}

/// Reshapes `n³` (resp. `n⁴`) flat coordinates, output index last.
pub fn t2_from(n: usize, flat: &[Q]) -> T2 {
    (0..n).map(|i| (0..n).map(|j| flat[(i * n + j) * n..(i * n + j + 1) * n].to_vec()).collect()).collect()
}

pub fn t3_from(n: usize, flat: &[Q]) -> T3 {
    (0..n).map(|i| t2_from(n, &flat[i * n * n * n..(i + 1) * n * n * n])).collect()
}

impl Raw {
    pub fn of(a: &HomLYSA) -> Self {
        let n = a.dim();
        let s = a.space();
        let p = (0..n).map(|i| s.parity(i).bit()).collect();
        let c2 = (0..n)
            .map(|i| (0..n).map(|j| (0..n).map(|m| a.bracket2().get(&[i, j], m).clone()).collect()).collect())
            .collect();
        let c3 = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| (0..n).map(|m| a.bracket3().get(&[i, j, k], m).clone()).collect()).collect())
                    .collect()
            })
            .collect();
        let al = (0..n).map(|r| a.alpha().matrix().row(r).to_vec()).collect();
        Raw { n, p, c2, c3, al }
    }

    pub fn e(&self, i: usize) -> V {
        let mut v = vec![q(0); self.n];
        v[i] = q(1);
        v
    }

    pub fn b2(&self, x: &V, y: &V) -> V {
        ev2(&self.c2, x, y)
    }

    pub fn b3(&self, x: &V, y: &V, z: &V) -> V {
        ev3(&self.c3, x, y, z)
    }

    pub fn a(&self, x: &V) -> V {
        (0..self.n).map(|r| (0..self.n).map(|c| &self.al[r][c] * &x[c]).sum()).collect()
    }

    pub fn a2(&self, x: &V) -> V {
        self.a(&self.a(x))
    }

    pub fn sign(&self, bits: u8) -> Q {
        if bits % 2 == 0 {
            q(1)
        } else {
            q(-1)
        }
    }

    /// Residual of identity `k` (1..=8) on a basis tuple, written as
    /// left-hand side minus right-hand side.
    pub fn residual(&self, k: usize, t: &[usize]) -> V {
        let e: Vec<V> = t.iter().map(|&i| self.e(i)).collect();
        let pp: Vec<u8> = t.iter().map(|&i| self.p[i]).collect();
        match k {
            1 => sub(&self.a(&self.b2(&e[0], &e[1])), &self.b2(&self.a(&e[0]), &self.a(&e[1]))),
            2 => sub(
                &self.a(&self.b3(&e[0], &e[1], &e[2])),
                &self.b3(&self.a(&e[0]), &self.a(&e[1]), &self.a(&e[2])),
            ),
            3 => add(&self.b2(&e[0], &e[1]), &scale(&self.sign(pp[0] * pp[1]), &self.b2(&e[1], &e[0]))),
            4 => add(
                &self.b3(&e[0], &e[1], &e[2]),
                &scale(&self.sign(pp[0] * pp[1]), &self.b3(&e[1], &e[0], &e[2])),
            ),
            5 => {
                let mut out = vec![q(0); self.n];
                for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let term = add(&self.b2(&self.b2(&e[x], &e[y]), &self.a(&e[z])), &self.b3(&e[x], &e[y], &e[z]));
                    out = add(&out, &scale(&self.sign(pp[x] * pp[z]), &term));
                }
                out
            }
            6 => {
                let mut out = vec![q(0); self.n];
                for (x, y, z) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
                    let term = self.b3(&self.b2(&e[x], &e[y]), &self.a(&e[z]), &self.a(&e[3]));
                    out = add(&out, &scale(&self.sign(pp[x] * pp[z]), &term));
                }
                out
            }
            7 => {
                let (x, y, u, v) = (&e[0], &e[1], &e[2], &e[3]);
                let lhs = self.b3(&self.a(x), &self.a(y), &self.b2(u, v));
                let r1 = self.b2(&self.b3(x, y, u), &self.a2(v));
                let r2 = self.b2(&self.a2(u), &self.b3(x, y, v));
                let s = self.sign(pp[2] * (pp[0] + pp[1]));
                sub(&sub(&lhs, &r1), &scale(&s, &r2))
            }
            8 => {
                let (x, y, u, v, w) = (&e[0], &e[1], &e[2], &e[3], &e[4]);
                let lhs = self.b3(&self.a2(x), &self.a2(y), &self.b3(u, v, w));
                let r1 = self.b3(&self.b3(x, y, u), &self.a2(v), &self.a2(w));
                let r2 = self.b3(&self.a2(u), &self.b3(x, y, v), &self.a2(w));
                let r3 = self.b3(&self.a2(u), &self.a2(v), &self.b3(x, y, w));
                let xy = pp[0] + pp[1];
                let out = sub(&lhs, &r1);
                let out = sub(&out, &scale(&self.sign(pp[2] * xy), &r2));
                sub(&out, &scale(&self.sign((pp[2] + pp[3]) * xy), &r3))
            }
            _ => unreachable!(),
        }
    }

    /// `(violations, first failing tuple)` for identity `k`, scanning tuples
    /// in lexicographic order.
    pub fn scan(&self, k: usize) -> (usize, Option<(Vec<usize>, V)>) {
        let arity = [0, 2, 3, 2, 3, 3, 4, 4, 5][k];
        let mut count = 0;
        let mut first = None;
        for t in tuples(self.n, arity) {
            let r = self.residual(k, &t);
            if r.iter().any(|c| !c.is_zero()) {
                count += 1;
                if first.is_none() {
                    first = Some((t, r));
                }
            }
        }
        (count, first)
    }
}

pub fn tuples(n: usize, arity: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..arity {
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..n).map(move |i| {
                    let mut t = t.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

pub fn add(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &V, b: &V) -> V {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(c: &Q, a: &V) -> V {
    a.iter().map(|x| c * x).collect()
}

pub fn is_zero(v: &[Q]) -> bool {
    v.iter().all(|x| x.is_zero())
}

/// Small random integer in `[-r, r]`.
pub fn small(rng: &mut impl rand::Rng, r: i64) -> Q {
    q(rng.gen_range(-r..=r))
}

pub fn abs_sum(v: &[Q]) -> Q {
    v.iter().map(|x| x.abs()).sum()
}
