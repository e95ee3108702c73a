//! Representations `(β, ρ, D, θ)` and the semidirect sum `L ⊕ V`.

use std::fmt;

use num::Zero;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::HomLYSA;
use crate::graded::{index_tuples, GradedError, GradedMap, MultiTensor, Parity, SuperSpace};
use crate::linalg::{Matrix, Vector};
use crate::scalar::{int, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("{what} has {got} entries, expected {expected}")]
    Count {
        what: &'static str,
        got: usize,
        expected: usize,
    },
    #[error("{what} at {index:?} has parity {got}, expected {expected}")]
    Parity {
        what: &'static str,
        index: Vec<usize>,
        got: Parity,
        expected: Parity,
    },
    #[error("{what} at {index:?} does not act on {module}")]
    Space {
        what: &'static str,
        index: Vec<usize>,
        module: SuperSpace,
    },
}

/// Module data over an algebra with underlying space `base`.
///
/// `d` and `theta` are indexed by `i * n + j` for the basis pair `(e_i, e_j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepTriple {
    base: SuperSpace,
    module: SuperSpace,
    beta: GradedMap,
    rho: Vec<GradedMap>,
    d: Vec<GradedMap>,
    theta: Vec<GradedMap>,
}

impl RepTriple {
    pub fn new(
        base: SuperSpace,
        module: SuperSpace,
        beta: GradedMap,
        rho: Vec<GradedMap>,
        d: Vec<GradedMap>,
        theta: Vec<GradedMap>,
    ) -> Result<Self, RepError> {
        let n = base.dim();
        check_map("β", &[], &beta, module, Parity::Even)?;
        if rho.len() != n {
            return Err(RepError::Count {
                what: "ρ",
                got: rho.len(),
                expected: n,
            });
        }
        for (i, r) in rho.iter().enumerate() {
            check_map("ρ", &[i], r, module, base.parity(i))?;
        }
        for (what, maps) in [("D", &d), ("θ", &theta)] {
            if maps.len() != n * n {
                return Err(RepError::Count {
                    what,
                    got: maps.len(),
                    expected: n * n,
                });
            }
            for (k, m) in maps.iter().enumerate() {
                let (i, j) = (k / n, k % n);
                check_map(what, &[i, j], m, module, base.parity(i) + base.parity(j))?;
            }
        }
        Ok(Self {
            base,
            module,
            beta,
            rho,
            d,
            theta,
        })
    }

    /// `ρ = D = θ = 0` with the given `β`.
    pub fn zero(base: SuperSpace, beta: GradedMap) -> Self {
        let module = beta.domain();
        let n = base.dim();
        let z = |p| GradedMap::zero(module, module, p);
        Self {
            base,
            module,
            beta,
            rho: (0..n).map(|i| z(base.parity(i))).collect(),
            d: (0..n * n).map(|k| z(base.parity(k / n) + base.parity(k % n))).collect(),
            theta: (0..n * n).map(|k| z(base.parity(k / n) + base.parity(k % n))).collect(),
        }
    }

    pub fn base(&self) -> SuperSpace {
        self.base
    }

    pub fn module(&self) -> SuperSpace {
        self.module
    }

    pub fn beta(&self) -> &GradedMap {
        &self.beta
    }

    pub fn rho(&self, i: usize) -> &GradedMap {
        &self.rho[i]
    }

    pub fn d(&self, i: usize, j: usize) -> &GradedMap {
        &self.d[i * self.base.dim() + j]
    }

    pub fn theta(&self, i: usize, j: usize) -> &GradedMap {
        &self.theta[i * self.base.dim() + j]
    }

    /// `ρ(x)` for an arbitrary vector `x` of the base.
    fn rho_at(&self, x: &[Scalar]) -> Matrix {
        let m = self.module.dim();
        let mut out = Matrix::zeros(m, m);
        for (i, c) in x.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.rho[i].matrix().scaled(c));
            }
        }
        out
    }

    fn pair_at(maps: &[GradedMap], n: usize, m: usize, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let mut out = Matrix::zeros(m, m);
        for (i, a) in x.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in y.iter().enumerate() {
                if !b.is_zero() {
                    out = out.add(&maps[i * n + j].matrix().scaled(&(a * b)));
                }
            }
        }
        out
    }

    fn d_at(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        Self::pair_at(&self.d, self.base.dim(), self.module.dim(), x, y)
    }

    fn theta_at(&self, x: &[Scalar], y: &[Scalar]) -> Matrix {
        Self::pair_at(&self.theta, self.base.dim(), self.module.dim(), x, y)
    }
}

fn check_map(
    what: &'static str,
    index: &[usize],
    map: &GradedMap,
    module: SuperSpace,
    parity: Parity,
) -> Result<(), RepError> {
    if map.domain() != module || map.codomain() != module {
        return Err(RepError::Space {
            what,
            index: index.to_vec(),
            module,
        });
    }
    if map.parity() != parity && !map.is_zero() {
        return Err(RepError::Parity {
            what,
            index: index.to_vec(),
            got: map.parity(),
            expected: parity,
        });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RepCondition {
    Shr1,
    Shr2,
    Shr3,
    Shr4,
    Shr5,
    Shr6,
    Shr7,
    Shr8,
    Shr9,
    Shr10,
}

impl RepCondition {
    pub const ALL: [RepCondition; 10] = [
        RepCondition::Shr1,
        RepCondition::Shr2,
        RepCondition::Shr3,
        RepCondition::Shr4,
        RepCondition::Shr5,
        RepCondition::Shr6,
        RepCondition::Shr7,
        RepCondition::Shr8,
        RepCondition::Shr9,
        RepCondition::Shr10,
    ];

    /// Number of base elements the condition quantifies over.
    pub fn arity(self) -> usize {
        use RepCondition::*;
        match self {
            Shr1 => 1,
            Shr2 | Shr3 | Shr4 => 2,
            Shr5 | Shr6 | Shr7 | Shr8 => 3,
            Shr9 | Shr10 => 4,
        }
    }

    pub fn name(self) -> &'static str {
        use RepCondition::*;
        match self {
            Shr1 => "SHR1",
            Shr2 => "SHR2",
            Shr3 => "SHR3",
            Shr4 => "SHR4",
            Shr5 => "SHR5",
            Shr6 => "SHR6",
            Shr7 => "SHR7",
            Shr8 => "SHR8",
            Shr9 => "SHR9",
            Shr10 => "SHR10",
        }
    }
}

impl fmt::Display for RepCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Scan result for one condition; the residual is an endomorphism of `V`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepStatus {
    pub violations: usize,
    pub first: Option<(Vec<usize>, Matrix)>,
}

impl RepStatus {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// How SHR1 and SHR5 are read; the other eight conditions have one form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RepReading {
    /// SHR1 as `ρ(α(x))∘β = β∘ρ(α(x))` and SHR5 without a trailing `β`,
    /// exactly as printed.
    Printed,
    /// SHR1 as `β∘ρ(x) = ρ(α(x))∘β` and SHR5 composed with `β` on the
    /// right. These are the conditions the twist and the ternary cyclic
    /// identity on `L ⊕ V` actually impose.
    Induced,
}

impl RepReading {
    pub fn other(self) -> Self {
        match self {
            RepReading::Printed => RepReading::Induced,
            RepReading::Induced => RepReading::Printed,
        }
    }

    /// Conditions whose form depends on the reading.
    pub const AFFECTED: [RepCondition; 2] = [RepCondition::Shr1, RepCondition::Shr5];
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepReport {
    pub reading: RepReading,
    /// SHR1 through SHR10 under `reading`.
    pub statuses: Vec<(RepCondition, RepStatus)>,
    /// SHR1 and SHR5 under the other reading, for comparison only.
    pub alternative: Vec<(RepCondition, RepStatus)>,
}

impl RepReport {
    pub fn all_pass(&self) -> bool {
        self.statuses.iter().all(|(_, s)| s.passed())
    }

    pub fn status(&self, c: RepCondition) -> &RepStatus {
        &self.statuses.iter().find(|(k, _)| *k == c).expect("all conditions present").1
    }

    pub fn first_failure(&self) -> Option<(RepCondition, &RepStatus)> {
        self.statuses.iter().find(|(_, s)| !s.passed()).map(|(c, s)| (*c, s))
    }
}

struct Ctx<'a> {
    a: &'a HomLYSA,
    r: &'a RepTriple,
    alpha: Vec<Vector>,
    alpha2: Vec<Vector>,
    beta: Matrix,
    beta2: Matrix,
}

impl<'a> Ctx<'a> {
    fn new(a: &'a HomLYSA, r: &'a RepTriple) -> Self {
        let n = a.dim();
        let al = a.alpha().matrix();
        let al2 = al.mul(al);
        let beta = r.beta.matrix().clone();
        Self {
            a,
            r,
            alpha: (0..n).map(|i| al.column(i)).collect(),
            alpha2: (0..n).map(|i| al2.column(i)).collect(),
            beta2: beta.mul(&beta),
            beta,
        }
    }

    fn p(&self, i: usize) -> Parity {
        self.a.space().parity(i)
    }

    fn sign(&self, terms: &[(Parity, Parity)]) -> bool {
        crate::graded::koszul_parity(terms).negates()
    }

    fn b2(&self, x: usize, y: usize) -> Vector {
        self.a.bracket2().basis_image(&[x, y]).to_vec()
    }

    fn b3(&self, x: usize, y: usize, z: usize) -> Vector {
        self.a.bracket3().basis_image(&[x, y, z]).to_vec()
    }

    fn residual(&self, c: RepCondition, reading: RepReading, t: &[usize]) -> Matrix {
        use RepCondition::*;
        let r = self.r;
        let (al, al2) = (&self.alpha, &self.alpha2);
        let beta = &self.beta;
        let beta2 = &self.beta2;
        let mut acc = Acc::new(r.module.dim());
        match c {
            Shr1 => {
                let x = t[0];
                if reading == RepReading::Printed {
                    let ra = r.rho_at(&al[x]);
                    acc.add(false, &ra.mul(beta));
                    acc.add(true, &beta.mul(&ra));
                } else {
                    acc.add(false, &beta.mul(r.rho(x).matrix()));
                    acc.add(true, &r.rho_at(&al[x]).mul(beta));
                }
            }
            Shr2 => {
                let (x, y) = (t[0], t[1]);
                acc.add(false, &r.d_at(&al[x], &al[y]).mul(beta));
                acc.add(true, &beta.mul(r.d(x, y).matrix()));
            }
            Shr3 => {
                let (x, y) = (t[0], t[1]);
                acc.add(false, &r.theta_at(&al[x], &al[y]).mul(beta));
                acc.add(true, &beta.mul(r.theta(x, y).matrix()));
            }
            Shr4 => {
                let (x, y) = (t[0], t[1]);
                let sxy = self.sign(&[(self.p(x), self.p(y))]);
                acc.add(false, r.d(x, y).matrix());
                acc.add(!sxy, r.theta(y, x).matrix());
                acc.add(false, r.theta(x, y).matrix());
                acc.add(false, &r.rho_at(&self.b2(x, y)).mul(beta));
                acc.add(true, &r.rho_at(&al[x]).mul(r.rho(y).matrix()));
                acc.add(sxy, &r.rho_at(&al[y]).mul(r.rho(x).matrix()));
            }
            Shr5 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let (px, py, pz) = (self.p(x), self.p(y), self.p(z));
                acc.add(false, &r.d_at(&self.b2(x, y), &al[z]));
                acc.add(self.sign(&[(px, py + pz)]), &r.d_at(&self.b2(y, z), &al[x]));
                acc.add(self.sign(&[(pz, px + py)]), &r.d_at(&self.b2(z, x), &al[y]));
                if reading == RepReading::Induced {
                    acc.0 = acc.0.mul(beta);
                }
            }
            Shr6 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let (px, py, pz) = (self.p(x), self.p(y), self.p(z));
                acc.add(false, &r.theta_at(&self.b2(x, y), &al[z]).mul(beta));
                acc.add(
                    !self.sign(&[(py, pz)]),
                    &r.theta_at(&al[x], &al[z]).mul(r.rho(y).matrix()),
                );
                acc.add(
                    self.sign(&[(px, py + pz)]),
                    &r.theta_at(&al[y], &al[z]).mul(r.rho(x).matrix()),
                );
            }
            Shr7 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let (px, py, pz) = (self.p(x), self.p(y), self.p(z));
                acc.add(false, &r.d_at(&al[x], &al[y]).mul(r.rho(z).matrix()));
                acc.add(
                    !self.sign(&[(pz, px + py)]),
                    &r.rho_at(&al2[z]).mul(r.d(x, y).matrix()),
                );
                acc.add(true, &r.rho_at(&self.b3(x, y, z)).mul(beta2));
            }
            Shr8 => {
                let (x, y, z) = (t[0], t[1], t[2]);
                let (px, py, pz) = (self.p(x), self.p(y), self.p(z));
                acc.add(false, &r.theta_at(&al[x], &self.b2(y, z)).mul(beta));
                acc.add(
                    !self.sign(&[(px, py)]),
                    &r.rho_at(&al2[y]).mul(r.theta(x, z).matrix()),
                );
                acc.add(
                    self.sign(&[(pz, px + py)]),
                    &r.rho_at(&al2[z]).mul(r.theta(x, y).matrix()),
                );
            }
            Shr9 => {
                let (x, y, a, b) = (t[0], t[1], t[2], t[3]);
                let (px, py, pa, pb) = (self.p(x), self.p(y), self.p(a), self.p(b));
                acc.add(false, &r.d_at(&al2[x], &al2[y]).mul(r.theta(a, b).matrix()));
                acc.add(
                    !self.sign(&[(pa + pb, px + py)]),
                    &r.theta_at(&al2[a], &al2[b]).mul(r.d(x, y).matrix()),
                );
                acc.add(true, &r.theta_at(&self.b3(x, y, a), &al2[b]).mul(beta2));
                acc.add(
                    !self.sign(&[(pa, px + py)]),
                    &r.theta_at(&al2[a], &self.b3(x, y, b)).mul(beta2),
                );
            }
            Shr10 => {
                let (x, y, z, w) = (t[0], t[1], t[2], t[3]);
                let (px, py, pz, pw) = (self.p(x), self.p(y), self.p(z), self.p(w));
                acc.add(false, &r.theta_at(&al2[x], &self.b3(y, z, w)).mul(beta2));
                acc.add(
                    !self.sign(&[(pz + pw, px + py)]),
                    &r.theta_at(&al2[z], &al2[w]).mul(r.theta(x, y).matrix()),
                );
                acc.add(
                    self.sign(&[(py, pz)]),
                    &r.theta_at(&al2[y], &al2[w]).mul(r.theta(x, z).matrix()),
                );
                acc.add(
                    !self.sign(&[(px, py + pz)]),
                    &r.d_at(&al2[y], &al2[z]).mul(r.theta(x, w).matrix()),
                );
            }
        }
        acc.0
    }
}

/// Signed accumulator for endomorphism residuals.
struct Acc(Matrix);

impl Acc {
    fn new(m: usize) -> Self {
        Acc(Matrix::zeros(m, m))
    }

    fn add(&mut self, negate: bool, m: &Matrix) {
        self.0 = if negate { self.0.sub(m) } else { self.0.add(m) };
    }
}

fn scan_matrix(n: usize, arity: usize, mut f: impl FnMut(&[usize]) -> Matrix) -> RepStatus {
    let mut status = RepStatus {
        violations: 0,
        first: None,
    };
    for t in index_tuples(n, arity) {
        let m = f(&t);
        if !m.is_zero() {
            status.violations += 1;
            if status.first.is_none() {
                status.first = Some((t, m));
            }
        }
    }
    status
}

/// Checks SHR1–SHR10 on all basis tuples under the given reading.
pub fn verify_representation_with(a: &HomLYSA, r: &RepTriple, reading: RepReading) -> RepReport {
    assert_eq!(a.space(), r.base, "representation built over a different space");
    let ctx = Ctx::new(a, r);
    let n = a.dim();
    let run = |c: RepCondition, reading| scan_matrix(n, c.arity(), |t| ctx.residual(c, reading, t));
    RepReport {
        reading,
        statuses: RepCondition::ALL.iter().map(|&c| (c, run(c, reading))).collect(),
        alternative: RepReading::AFFECTED
            .iter()
            .map(|&c| (c, run(c, reading.other())))
            .collect(),
    }
}

/// [`verify_representation_with`] under the induced reading, the one for
/// which `R` passes exactly when the semidirect sum is a Hom-LY superalgebra.
pub fn verify_representation(a: &HomLYSA, r: &RepTriple) -> RepReport {
    verify_representation_with(a, r, RepReading::Induced)
}

/// Index bookkeeping for `L ⊕ V`: even part of `L`, even part of `V`, odd
/// part of `L`, odd part of `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Split {
    pub base: SuperSpace,
    pub module: SuperSpace,
}

impl Split {
    pub fn new(base: SuperSpace, module: SuperSpace) -> Self {
        Self { base, module }
    }

    pub fn total(&self) -> SuperSpace {
        SuperSpace::new(
            self.base.even_dim + self.module.even_dim,
            self.base.odd_dim + self.module.odd_dim,
        )
    }

    pub fn l(&self, i: usize) -> usize {
        if i < self.base.even_dim {
            i
        } else {
            i + self.module.even_dim
        }
    }

    pub fn v(&self, a: usize) -> usize {
        if a < self.module.even_dim {
            self.base.even_dim + a
        } else {
            self.base.dim() + a
        }
    }

    /// Which summand a global index belongs to, with its local index.
    pub fn locate(&self, g: usize) -> Summand {
        let (pl, pv) = (self.base.even_dim, self.module.even_dim);
        if g < pl {
            Summand::L(g)
        } else if g < pl + pv {
            Summand::V(g - pl)
        } else if g < pl + pv + self.base.odd_dim {
            Summand::L(g - pv)
        } else {
            Summand::V(g - self.base.dim())
        }
    }

    fn embed_l(&self, x: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.total().dim()];
        for (i, c) in x.iter().enumerate() {
            out[self.l(i)] = c.clone();
        }
        out
    }

    fn embed_v(&self, x: &[Scalar]) -> Vector {
        let mut out = vec![Scalar::zero(); self.total().dim()];
        for (a, c) in x.iter().enumerate() {
            out[self.v(a)] = c.clone();
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Summand {
    L(usize),
    V(usize),
}

fn sgn(negate: bool) -> Scalar {
    if negate {
        int(-1)
    } else {
        int(1)
    }
}

/// The Hom-LY structure on `L ⊕ V` built from `(A, R)`, whether or not `R`
/// is a representation.
pub fn semidirect_sum(a: &HomLYSA, r: &RepTriple) -> HomLYSA {
    assert_eq!(a.space(), r.base, "representation built over a different space");
    let split = Split::new(r.base, r.module);
    let total = split.total();
    let (nl, nv) = (r.base.dim(), r.module.dim());
    let pl = |i: usize| r.base.parity(i);
    let pv = |b: usize| r.module.parity(b);

    let mut alpha = Matrix::zeros(total.dim(), total.dim());
    for j in 0..nl {
        for i in 0..nl {
            alpha[(split.l(i), split.l(j))] = a.alpha().matrix()[(i, j)].clone();
        }
    }
    for j in 0..nv {
        for i in 0..nv {
            alpha[(split.v(i), split.v(j))] = r.beta.matrix()[(i, j)].clone();
        }
    }

    let b2 = MultiTensor::from_fn(total, 2, |t| match (split.locate(t[0]), split.locate(t[1])) {
        (Summand::L(x), Summand::L(y)) => split.embed_l(a.bracket2().basis_image(&[x, y])),
        (Summand::L(x), Summand::V(v)) => split.embed_v(&r.rho(x).column(v)),
        (Summand::V(u), Summand::L(y)) => {
            let col = r.rho(y).column(u);
            let s = sgn(!(pl(y) * pv(u)).negates());
            split.embed_v(&col.iter().map(|c| c * &s).collect::<Vec<_>>())
        }
        (Summand::V(_), Summand::V(_)) => vec![Scalar::zero(); total.dim()],
    })
    .expect("semidirect binary bracket is even");

    let b3 = MultiTensor::from_fn(total, 3, |t| {
        match (split.locate(t[0]), split.locate(t[1]), split.locate(t[2])) {
            (Summand::L(x), Summand::L(y), Summand::L(z)) => split.embed_l(a.bracket3().basis_image(&[x, y, z])),
            (Summand::L(x), Summand::L(y), Summand::V(w)) => split.embed_v(&r.d(x, y).column(w)),
            (Summand::L(x), Summand::V(v), Summand::L(z)) => {
                let s = sgn(!(pv(v) * pl(z)).negates());
                split.embed_v(&r.theta(x, z).column(v).iter().map(|c| c * &s).collect::<Vec<_>>())
            }
            (Summand::V(u), Summand::L(y), Summand::L(z)) => {
                let s = sgn((pv(u) * (pl(y) + pl(z))).negates());
                split.embed_v(&r.theta(y, z).column(u).iter().map(|c| c * &s).collect::<Vec<_>>())
            }
            _ => vec![Scalar::zero(); total.dim()],
        }
    })
    .expect("semidirect ternary bracket is even");

    let alpha = GradedMap::endo(total, Parity::Even, alpha).expect("α ⊕ β is even");
    HomLYSA::new(total, b2, b3, alpha).expect("semidirect sum is well formed")
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("space {total} does not split as {base} ⊕ {module}")]
    Dimension {
        total: SuperSpace,
        base: SuperSpace,
        module: SuperSpace,
    },
    #[error("{what} at {index:?} has a nonzero component {output} outside the semidirect shape")]
    Incompatible {
        what: &'static str,
        index: Vec<usize>,
        output: usize,
    },
}

/// Reads `(A, R)` back off a structure on `L ⊕ V`.
///
/// Fails with the first structure constant (in lexicographic order of
/// global indices) that the semidirect-sum formulas cannot produce.
pub fn extract_rep(s: &HomLYSA, split: Split) -> Result<(HomLYSA, RepTriple), SplitError> {
    if s.space() != split.total() {
        return Err(SplitError::Dimension {
            total: s.space(),
            base: split.base,
            module: split.module,
        });
    }
    let (base, module) = (split.base, split.module);
    let (nl, nv) = (base.dim(), module.dim());
    let sub = |rows: &dyn Fn(usize) -> usize, cols: &dyn Fn(usize) -> usize, nr: usize, nc: usize, m: &Matrix| {
        Matrix::from_fn(nr, nc, |i, j| m[(rows(i), cols(j))].clone())
    };
    let l = |i| split.l(i);
    let v = |a| split.v(a);
    let alpha = sub(&l, &l, nl, nl, s.alpha().matrix());
    let beta = sub(&v, &v, nv, nv, s.alpha().matrix());
    let alpha = GradedMap::endo(base, Parity::Even, alpha).expect("restriction of an even map");
    let beta = GradedMap::endo(module, Parity::Even, beta).expect("restriction of an even map");

    let restrict_l = |w: &[Scalar]| (0..nl).map(|i| w[l(i)].clone()).collect::<Vector>();
    let restrict_v = |w: &[Scalar]| (0..nv).map(|a| w[v(a)].clone()).collect::<Vector>();
    let b2 = MultiTensor::from_fn(base, 2, |t| restrict_l(s.bracket2().basis_image(&[l(t[0]), l(t[1])])))
        .expect("restriction of an even tensor");
    let b3 = MultiTensor::from_fn(base, 3, |t| {
        restrict_l(s.bracket3().basis_image(&[l(t[0]), l(t[1]), l(t[2])]))
    })
    .expect("restriction of an even tensor");
    let a = HomLYSA::new(base, b2, b3, alpha).expect("restriction is well formed");

    let endo = |p: Parity, f: &dyn Fn(usize) -> Vector| {
        let cols: Vec<Vector> = (0..nv).map(f).collect();
        GradedMap::endo(module, p, Matrix::from_columns(nv, &cols)).expect("restriction of an even tensor")
    };
    let rho = (0..nl)
        .map(|x| endo(base.parity(x), &|b| restrict_v(s.bracket2().basis_image(&[l(x), v(b)]))))
        .collect();
    let d = (0..nl * nl)
        .map(|k| {
            let (x, y) = (k / nl, k % nl);
            endo(base.parity(x) + base.parity(y), &|w| {
                restrict_v(s.bracket3().basis_image(&[l(x), l(y), v(w)]))
            })
        })
        .collect();
    let theta = (0..nl * nl)
        .map(|k| {
            let (y, z) = (k / nl, k % nl);
            endo(base.parity(y) + base.parity(z), &|u| {
                let sign = sgn((module.parity(u) * (base.parity(y) + base.parity(z))).negates());
                restrict_v(s.bracket3().basis_image(&[v(u), l(y), l(z)]))
                    .into_iter()
                    .map(|c| c * &sign)
                    .collect()
            })
        })
        .collect();
    let r = RepTriple::new(base, module, beta, rho, d, theta).expect("restrictions respect parity");

    let rebuilt = semidirect_sum(&a, &r);
    let n = split.total().dim();
    for (what, lhs, rhs) in [
        ("twist map", s.alpha().matrix().entries(), rebuilt.alpha().matrix().entries()),
        ("binary bracket", s.bracket2().data(), rebuilt.bracket2().data()),
        ("ternary bracket", s.bracket3().data(), rebuilt.bracket3().data()),
    ] {
        if let Some(pos) = lhs.iter().zip(rhs).position(|(p, q)| p != q) {
            let index = if what == "twist map" {
                vec![pos % n]
            } else {
                let arity = if what == "binary bracket" { 2 } else { 3 };
                let mut idx = vec![0; arity];
                let mut rest = pos / n;
                for slot in idx.iter_mut().rev() {
                    *slot = rest % n;
                    rest /= n;
                }
                idx
            };
            let output = if what == "twist map" { pos / n } else { pos % n };
            return Err(SplitError::Incompatible { what, index, output });
        }
    }
    Ok((a, r))
}

/// Sparse random module data with entries in `[-2, 2]`.
///
/// Each parity-allowed coefficient is nonzero with probability 1/3.
pub fn random_rep(base: SuperSpace, module: SuperSpace, rng: &mut ChaCha8Rng) -> RepTriple {
    let nl = base.dim();
    let map = |p: Parity, rng: &mut ChaCha8Rng| {
        let m = Matrix::from_fn(module.dim(), module.dim(), |i, j| {
            if module.parity(i) != module.parity(j) + p || !rng.gen_ratio(1, 3) {
                return Scalar::zero();
            }
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-2..=2);
            }
            int(c)
        });
        GradedMap::endo(module, p, m).expect("entries placed by parity")
    };
    let beta = map(Parity::Even, rng);
    let rho = (0..nl).map(|i| map(base.parity(i), rng)).collect();
    let d = (0..nl * nl).map(|k| map(base.parity(k / nl) + base.parity(k % nl), rng)).collect();
    let theta = (0..nl * nl).map(|k| map(base.parity(k / nl) + base.parity(k % nl), rng)).collect();
    RepTriple::new(base, module, beta, rho, d, theta).expect("random data respects parity")
}

/// Convenience seeded generator.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
