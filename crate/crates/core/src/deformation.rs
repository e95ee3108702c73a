//! Truncated one-parameter formal deformations.
//!
//! A deformation of order `N` is `f_t = Σ f_i tⁱ`, `g_t = Σ g_i tⁱ` with
//! `f_0, g_0` the base brackets, all computed modulo `t^{N+1}`.

use std::fmt;

use thiserror::Error;

use crate::algebra::HomLYSA;
use crate::cohomology::{cocycle_residual, delta1, h23, CochainPair, CohomologyError};
use crate::graded::{index_tuples, GradedMap, MultiTensor, Parity, SuperSpace};
use crate::identities::{self as id, convolution, scan, IdentityStatus, Quadratic, Twist};
use crate::linalg::{add_signed, solve_particular, zero_vector, Matrix, Vector};
use crate::scalar::{format_scalar, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformationError {
    #[error("order must be at least 1")]
    EmptyOrder,
    #[error("expected {expected} coefficients, got {got}")]
    Length { expected: usize, got: usize },
    #[error("coefficient {which}_{order} has wrong shape or parity")]
    Shape { which: char, order: usize },
    #[error("φ_{0} must be even, commute with α and live on the base space")]
    IsoCoefficient(usize),
    #[error("orders differ: {0} vs {1}")]
    OrderMismatch(usize, usize),
    #[error("deformations over different bases")]
    BaseMismatch,
    #[error("deformation equations fail at order {order}: {equation} on {tuple:?}")]
    NotVerified {
        order: usize,
        equation: DeformationEquation,
        tuple: Vec<usize>,
    },
    #[error("order-one coefficients verified but not a cocycle at {0}")]
    NotCocycle(String),
    #[error(transparent)]
    Cohomology(#[from] CohomologyError),
}

/// Truncated coefficient lists; `f[i - 1]` is `f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deformation {
    base: HomLYSA,
    f: Vec<MultiTensor>,
    g: Vec<MultiTensor>,
}

impl Deformation {
    pub fn new(base: HomLYSA, f: Vec<MultiTensor>, g: Vec<MultiTensor>) -> Result<Self, DeformationError> {
        if f.is_empty() {
            return Err(DeformationError::EmptyOrder);
        }
        if g.len() != f.len() {
            return Err(DeformationError::Length {
                expected: f.len(),
                got: g.len(),
            });
        }
        let space = base.space();
        for (i, t) in f.iter().enumerate() {
            if t.space() != space || t.arity() != 2 || t.parity() != Parity::Even {
                return Err(DeformationError::Shape { which: 'f', order: i + 1 });
            }
        }
        for (i, t) in g.iter().enumerate() {
            if t.space() != space || t.arity() != 3 || t.parity() != Parity::Even {
                return Err(DeformationError::Shape { which: 'g', order: i + 1 });
            }
        }
        Ok(Self { base, f, g })
    }

    pub fn null(base: HomLYSA, order: usize) -> Result<Self, DeformationError> {
        let space = base.space();
        Self::new(
            base,
            vec![MultiTensor::zero(space, 2); order],
            vec![MultiTensor::zero(space, 3); order],
        )
    }

    /// Deformation with the given order-one pair and all higher orders zero.
    pub fn linear(base: HomLYSA, order: usize, first: CochainPair) -> Result<Self, DeformationError> {
        let space = base.space();
        let mut f = vec![MultiTensor::zero(space, 2); order];
        let mut g = vec![MultiTensor::zero(space, 3); order];
        if order > 0 {
            f[0] = first.f;
            g[0] = first.g;
        }
        Self::new(base, f, g)
    }

    pub fn base(&self) -> &HomLYSA {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.f.len()
    }

    /// `f_i` for `1 ≤ i ≤ N`.
    pub fn f(&self, i: usize) -> &MultiTensor {
        &self.f[i - 1]
    }

    pub fn g(&self, i: usize) -> &MultiTensor {
        &self.g[i - 1]
    }

    pub fn pair(&self, i: usize) -> CochainPair {
        CochainPair {
            f: self.f(i).clone(),
            g: self.g(i).clone(),
        }
    }

    pub fn is_null(&self) -> bool {
        self.f.iter().chain(&self.g).all(MultiTensor::is_zero)
    }

    /// `[f_0, …, f_N]` with `f_0` the base binary bracket.
    pub fn f_series(&self) -> Vec<MultiTensor> {
        std::iter::once(self.base.bracket2().clone()).chain(self.f.iter().cloned()).collect()
    }

    pub fn g_series(&self) -> Vec<MultiTensor> {
        std::iter::once(self.base.bracket3().clone()).chain(self.g.iter().cloned()).collect()
    }
}

/// The eight equations checked at each order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DeformationEquation {
    EquivariantF,
    EquivariantG,
    SkewF,
    SkewG,
    CyclicBinary,
    CyclicMixed,
    BinaryLeibniz,
    TernaryLeibniz,
}

impl DeformationEquation {
    pub const ALL: [DeformationEquation; 8] = [
        DeformationEquation::EquivariantF,
        DeformationEquation::EquivariantG,
        DeformationEquation::SkewF,
        DeformationEquation::SkewG,
        DeformationEquation::CyclicBinary,
        DeformationEquation::CyclicMixed,
        DeformationEquation::BinaryLeibniz,
        DeformationEquation::TernaryLeibniz,
    ];

    pub fn arity(self) -> usize {
        match self {
            DeformationEquation::EquivariantF | DeformationEquation::SkewF => 2,
            DeformationEquation::EquivariantG | DeformationEquation::SkewG => 3,
            DeformationEquation::CyclicBinary => 3,
            DeformationEquation::CyclicMixed | DeformationEquation::BinaryLeibniz => 4,
            DeformationEquation::TernaryLeibniz => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DeformationEquation::EquivariantF => "f-equivariance",
            DeformationEquation::EquivariantG => "g-equivariance",
            DeformationEquation::SkewF => "f-skew",
            DeformationEquation::SkewG => "g-skew",
            DeformationEquation::CyclicBinary => "cyclic-binary",
            DeformationEquation::CyclicMixed => "cyclic-mixed",
            DeformationEquation::BinaryLeibniz => "binary-leibniz",
            DeformationEquation::TernaryLeibniz => "ternary-leibniz",
        }
    }

    fn quadratic(self) -> Option<Quadratic> {
        match self {
            DeformationEquation::CyclicBinary => Some(Quadratic::CyclicBinary),
            DeformationEquation::CyclicMixed => Some(Quadratic::CyclicMixed),
            DeformationEquation::BinaryLeibniz => Some(Quadratic::BinaryLeibniz),
            DeformationEquation::TernaryLeibniz => Some(Quadratic::TernaryLeibniz),
            _ => None,
        }
    }
}

impl fmt::Display for DeformationEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderReport {
    pub order: usize,
    pub statuses: Vec<(DeformationEquation, IdentityStatus)>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.statuses.iter().all(|(_, s)| s.passed())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationReport {
    pub orders: Vec<OrderReport>,
}

impl DeformationReport {
    pub fn passed(&self) -> bool {
        self.orders.iter().all(OrderReport::passed)
    }

    /// Lowest failing `(order, equation, tuple)`.
    pub fn first_failure(&self) -> Option<(usize, DeformationEquation, &IdentityStatus)> {
        self.orders.iter().find_map(|o| {
            o.statuses
                .iter()
                .find(|(_, s)| !s.passed())
                .map(|(e, s)| (o.order, *e, s))
        })
    }

    /// Passes through order `n` inclusive.
    pub fn passed_through(&self, n: usize) -> bool {
        self.orders.iter().filter(|o| o.order <= n).all(OrderReport::passed)
    }

    fn require(&self, n: usize) -> Result<(), DeformationError> {
        match self.first_failure() {
            Some((order, equation, s)) if order <= n => Err(DeformationError::NotVerified {
                order,
                equation,
                tuple: s.first.clone().map(|w| w.0).unwrap_or_default(),
            }),
            _ => Ok(()),
        }
    }
}

fn order_residual(
    tw: &Twist,
    fs: &[MultiTensor],
    gs: &[MultiTensor],
    n: usize,
    eq: DeformationEquation,
    t: &[usize],
) -> Vector {
    if let Some(q) = eq.quadratic() {
        return convolution(tw, fs, gs, n, q, t);
    }
    match eq {
        DeformationEquation::EquivariantF => id::equivariance2(tw, &fs[n], t[0], t[1]),
        DeformationEquation::EquivariantG => id::equivariance3(tw, &gs[n], t[0], t[1], t[2]),
        DeformationEquation::SkewF => id::skew2(tw, &fs[n], t[0], t[1]),
        _ => id::skew3(tw, &gs[n], t[0], t[1], t[2]),
    }
}

/// Evaluates the eight equations at every order `0..=N` on all basis tuples.
/// Order zero is the axiom check of the base.
pub fn verify_deformation(d: &Deformation) -> DeformationReport {
    let tw = d.base.twist();
    let fs = d.f_series();
    let gs = d.g_series();
    let n = d.base.dim();
    DeformationReport {
        orders: (0..=d.order())
            .map(|order| OrderReport {
                order,
                statuses: DeformationEquation::ALL
                    .iter()
                    .map(|&eq| {
                        (
                            eq,
                            scan(n, eq.arity(), |t| order_residual(&tw, &fs, &gs, order, eq, t)),
                        )
                    })
                    .collect(),
            })
            .collect(),
    }
}

/// The order-one pair, certified to be a cocycle.
pub fn infinitesimal(d: &Deformation) -> Result<CochainPair, DeformationError> {
    verify_deformation(d).require(1)?;
    let p = d.pair(1);
    let r = cocycle_residual(&d.base, &p)?;
    if let Some((name, t, _)) = r.first_nonzero() {
        return Err(DeformationError::NotCocycle(format!("{name} {t:?}")));
    }
    Ok(p)
}

/// `φ_t = Σ φ_i tⁱ` truncated at order `N`, with `φ_0 = id`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalIso {
    space: SuperSpace,
    phi: Vec<GradedMap>,
}

impl FormalIso {
    /// `coeffs` are `φ_1..φ_N`.
    pub fn new(base: &HomLYSA, coeffs: Vec<GradedMap>) -> Result<Self, DeformationError> {
        if coeffs.is_empty() {
            return Err(DeformationError::EmptyOrder);
        }
        let space = base.space();
        for (i, m) in coeffs.iter().enumerate() {
            let even = m.parity() == Parity::Even || m.is_zero();
            if m.domain() != space || m.codomain() != space || !even || !m.commutes_with(base.alpha()) {
                return Err(DeformationError::IsoCoefficient(i + 1));
            }
        }
        let mut phi = vec![GradedMap::identity(space)];
        phi.extend(coeffs);
        Ok(Self { space, phi })
    }

    pub fn identity(space: SuperSpace, order: usize) -> Self {
        let mut phi = vec![GradedMap::identity(space)];
        phi.extend((0..order).map(|_| GradedMap::zero(space, space, Parity::Even)));
        Self { space, phi }
    }

    /// `(id − h tʳ)⁻¹ = id + h tʳ + h² t²ʳ + …`.
    pub fn geometric(space: SuperSpace, h: &GradedMap, r: usize, order: usize) -> Self {
        let mut out = Self::identity(space, order);
        let mut power = GradedMap::identity(space);
        let mut k = r;
        while r > 0 && k <= order {
            power = power.compose(h);
            out.phi[k] = power.clone();
            k += r;
        }
        out
    }

    pub fn order(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    /// `φ_i` for `0 ≤ i ≤ N`.
    pub fn coeff(&self, i: usize) -> &GradedMap {
        &self.phi[i]
    }

    pub fn is_identity(&self) -> bool {
        self.phi[1..].iter().all(GradedMap::is_zero)
    }

    /// `self ∘ other`, truncated.
    pub fn compose(&self, other: &FormalIso) -> Result<FormalIso, DeformationError> {
        if self.order() != other.order() {
            return Err(DeformationError::OrderMismatch(self.order(), other.order()));
        }
        let n = self.order();
        let mut phi = Vec::with_capacity(n + 1);
        for k in 0..=n {
            let mut acc = GradedMap::zero(self.space, self.space, Parity::Even);
            for i in 0..=k {
                acc = acc.add(&self.phi[i].compose(&other.phi[k - i]));
            }
            phi.push(acc);
        }
        Ok(FormalIso { space: self.space, phi })
    }

    /// Truncated series inverse: `ψ_0 = id`, `ψ_n = −Σ_{i=1..n} φ_i ψ_{n−i}`.
    pub fn inverse(&self) -> FormalIso {
        let n = self.order();
        let mut psi = vec![GradedMap::identity(self.space)];
        for k in 1..=n {
            let mut acc = GradedMap::zero(self.space, self.space, Parity::Even);
            for i in 1..=k {
                acc = acc.sub(&self.phi[i].compose(&psi[k - i]));
            }
            psi.push(acc);
        }
        FormalIso { space: self.space, phi: psi }
    }
}

/// `Σ_{c_1+…+c_m = k} t(ψ_{c_1}·, …, ψ_{c_m}·)` for every `k ≤ N`.
fn precompose(t: &MultiTensor, psi: &[GradedMap], order: usize) -> Vec<MultiTensor> {
    let space = t.space();
    let n = space.dim();
    let m = t.arity();
    let cols: Vec<Vec<Vector>> = psi.iter().map(|p| (0..n).map(|j| p.column(j)).collect()).collect();
    (0..=order)
        .map(|k| {
            MultiTensor::from_fn(space, m, |idx| {
                let mut out = zero_vector(n);
                for split in index_tuples(k + 1, m) {
                    if split.iter().sum::<usize>() != k {
                        continue;
                    }
                    let args: Vec<&[Scalar]> = split.iter().zip(idx).map(|(&c, &j)| cols[c][j].as_slice()).collect();
                    add_signed(&mut out, false, &t.eval(&args));
                }
                out
            })
            .expect("even maps preserve parity")
        })
        .collect()
}

fn postcompose(phi: &GradedMap, t: &MultiTensor) -> MultiTensor {
    MultiTensor::from_fn(t.space(), t.arity(), |idx| phi.apply(t.basis_image(idx)))
        .expect("even maps preserve parity")
}

/// Coefficients of `φ_t ∘ s_t ∘ (φ_t⁻¹ × … × φ_t⁻¹)` up to order `N`.
fn transport_series(series: &[MultiTensor], iso: &FormalIso, inv: &FormalIso) -> Vec<MultiTensor> {
    let order = iso.order();
    let pre: Vec<Vec<MultiTensor>> = series.iter().map(|s| precompose(s, &inv.phi, order)).collect();
    let space = iso.space;
    let arity = series[0].arity();
    (0..=order)
        .map(|k| {
            let mut acc = MultiTensor::zero(space, arity);
            // φ_a ∘ s_b ∘ (ψ…) with a + b + c = k
            for a in 0..=k {
                for b in 0..=(k - a) {
                    if b >= series.len() {
                        continue;
                    }
                    acc = acc.add(&postcompose(&iso.phi[a], &pre[b][k - a - b]));
                }
            }
            acc
        })
        .collect()
}

/// The deformation `φ_t ∘ f_t ∘ (φ_t⁻¹ × φ_t⁻¹)` and its ternary analogue.
pub fn transport(d: &Deformation, iso: &FormalIso) -> Result<Deformation, DeformationError> {
    if iso.order() != d.order() {
        return Err(DeformationError::OrderMismatch(d.order(), iso.order()));
    }
    if iso.space != d.base.space() {
        return Err(DeformationError::BaseMismatch);
    }
    let inv = iso.inverse();
    let mut f = transport_series(&d.f_series(), iso, &inv);
    let mut g = transport_series(&d.g_series(), iso, &inv);
    f.remove(0);
    g.remove(0);
    Deformation::new(d.base.clone(), f, g)
}

/// Whether the two infinitesimals differ by a coboundary.
pub fn equivalent_infinitesimals(d1: &Deformation, d2: &Deformation) -> Result<bool, DeformationError> {
    if d1.base != d2.base {
        return Err(DeformationError::BaseMismatch);
    }
    verify_deformation(d1).require(1)?;
    verify_deformation(d2).require(1)?;
    let diff = d1.pair(1).sub(&d2.pair(1));
    Ok(h23(&d1.base)?.is_coboundary(&diff))
}

/// One step of the trivialization: at order `r`, `h` with `δ¹h = (f_r, g_r)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivializationStep {
    pub order: usize,
    pub h: GradedMap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ObstructionReport {
    /// `iso` transports the deformation to the null one through order `N`.
    Trivializable {
        iso: FormalIso,
        steps: Vec<TrivializationStep>,
    },
    /// `(f_r, g_r)` after the earlier steps is a cocycle outside `B`.
    Obstructed {
        order: usize,
        cocycle: CochainPair,
        is_cocycle: bool,
        /// `(dim Z, dim B, dim H)` at degree (2,3).
        dims: (usize, usize, usize),
        steps: Vec<TrivializationStep>,
    },
}

impl ObstructionReport {
    pub fn is_trivializable(&self) -> bool {
        matches!(self, ObstructionReport::Trivializable { .. })
    }

    pub fn obstruction_order(&self) -> Option<usize> {
        match self {
            ObstructionReport::Obstructed { order, .. } => Some(*order),
            _ => None,
        }
    }
}

fn pair_data(p: &CochainPair) -> Vector {
    p.f.data().iter().chain(p.g.data()).cloned().collect()
}

/// Solves `δ¹h = p` over even maps commuting with α; free variables are set
/// to zero, so the preimage is deterministic.
pub fn coboundary_preimage(a: &HomLYSA, p: &CochainPair) -> Result<Option<GradedMap>, DeformationError> {
    let basis = crate::cohomology::one_cochain_basis(a);
    let space = a.space();
    if basis.is_empty() {
        return Ok(p.is_zero().then(|| GradedMap::zero(space, space, Parity::Even)));
    }
    let cols: Vec<Vector> = basis
        .iter()
        .map(|h| delta1(a, h).map(|q| pair_data(&q)))
        .collect::<Result<_, _>>()?;
    let m = Matrix::from_columns(cols[0].len(), &cols);
    Ok(solve_particular(&m, &pair_data(p)).map(|c| {
        basis
            .iter()
            .zip(&c)
            .fold(GradedMap::zero(space, space, Parity::Even), |acc, (h, ci)| acc.add(&h.scaled(ci)))
    }))
}

/// Kills the lowest nonzero order repeatedly by transporting along
/// `(id − h tʳ)⁻¹` with `δ¹h = (f_r, g_r)`.
pub fn trivialize(d: &Deformation) -> Result<ObstructionReport, DeformationError> {
    verify_deformation(d).require(d.order())?;
    let space = d.base.space();
    let mut cur = d.clone();
    let mut total = FormalIso::identity(space, d.order());
    let mut steps = Vec::new();
    for r in 1..=d.order() {
        let p = cur.pair(r);
        if p.is_zero() {
            continue;
        }
        match coboundary_preimage(&d.base, &p)? {
            Some(h) => {
                let step = FormalIso::geometric(space, &h, r, d.order());
                cur = transport(&cur, &step)?;
                total = step.compose(&total)?;
                debug_assert!(cur.pair(r).is_zero(), "order {r} not cleared");
                steps.push(TrivializationStep { order: r, h });
            }
            None => {
                let is_cocycle = cocycle_residual(&d.base, &p)?.is_zero();
                return Ok(ObstructionReport::Obstructed {
                    order: r,
                    cocycle: p,
                    is_cocycle,
                    dims: h23(&d.base)?.dims(),
                    steps,
                });
            }
        }
    }
    Ok(ObstructionReport::Trivializable { iso: total, steps })
}

/// Human-readable rendering of a tensor's nonzero entries.
pub fn format_tensor(t: &MultiTensor) -> Vec<String> {
    t.entries()
        .into_iter()
        .map(|(idx, m, v)| format!("{idx:?} -> e{m}: {}", format_scalar(&v)))
        .collect()
}
