//! Hom-Lie-Yamaguti superalgebras given by structure constants, and the
//! checker for their eight defining identities.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graded::{GradedError, GradedMap, MultiTensor, Parity, SuperSpace};
use crate::identities::{self as id, scan, IdentityStatus, Twist};
use crate::linalg::{add_signed, sub, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error("{what} lives on {got}, expected {expected}")]
    SpaceMismatch {
        what: &'static str,
        got: SuperSpace,
        expected: SuperSpace,
    },
    #[error("{what} must have arity {expected}, got {got}")]
    Arity {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("{0} must be an even map")]
    NotEven(&'static str),
    #[error("vector has dimension {got}, expected {expected}")]
    Dimension { got: usize, expected: usize },
}

/// `(L, [·,·], {·,·,·}, α)` on a fixed homogeneous basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomLYSA {
    space: SuperSpace,
    bracket2: MultiTensor,
    bracket3: MultiTensor,
    alpha: GradedMap,
}

impl HomLYSA {
    /// Checks shapes and parities only; the identities are certified
    /// separately by [`verify_axioms`].
    pub fn new(
        space: SuperSpace,
        bracket2: MultiTensor,
        bracket3: MultiTensor,
        alpha: GradedMap,
    ) -> Result<Self, AlgebraError> {
        for (what, t, arity) in [("binary bracket", &bracket2, 2), ("ternary bracket", &bracket3, 3)] {
            if t.space() != space {
                return Err(AlgebraError::SpaceMismatch {
                    what,
                    got: t.space(),
                    expected: space,
                });
            }
            if t.arity() != arity {
                return Err(AlgebraError::Arity {
                    what,
                    expected: arity,
                    got: t.arity(),
                });
            }
            if t.parity() != Parity::Even {
                return Err(AlgebraError::NotEven(what));
            }
        }
        if alpha.domain() != space || alpha.codomain() != space {
            return Err(AlgebraError::SpaceMismatch {
                what: "twist map",
                got: alpha.domain(),
                expected: space,
            });
        }
        if alpha.parity() != Parity::Even {
            return Err(AlgebraError::NotEven("twist map"));
        }
        Ok(Self {
            space,
            bracket2,
            bracket3,
            alpha,
        })
    }

    pub fn space(&self) -> SuperSpace {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn bracket2(&self) -> &MultiTensor {
        &self.bracket2
    }

    pub fn bracket3(&self) -> &MultiTensor {
        &self.bracket3
    }

    pub fn alpha(&self) -> &GradedMap {
        &self.alpha
    }

    pub fn alpha_pow(&self, k: u32) -> GradedMap {
        self.alpha.pow(k)
    }

    pub fn eval_bracket2(&self, x: &[Scalar], y: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.check_dims(&[x, y])?;
        Ok(self.bracket2.eval(&[x, y]))
    }

    pub fn eval_bracket3(&self, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Result<Vector, AlgebraError> {
        self.check_dims(&[x, y, z])?;
        Ok(self.bracket3.eval(&[x, y, z]))
    }

    fn check_dims(&self, args: &[&[Scalar]]) -> Result<(), AlgebraError> {
        for a in args {
            if a.len() != self.dim() {
                return Err(AlgebraError::Dimension {
                    got: a.len(),
                    expected: self.dim(),
                });
            }
        }
        Ok(())
    }

    pub(crate) fn twist(&self) -> Twist {
        Twist::new(&self.alpha)
    }

    /// Same space and twist, brackets replaced.
    pub fn with_brackets(&self, bracket2: MultiTensor, bracket3: MultiTensor) -> Result<Self, AlgebraError> {
        Self::new(self.space, bracket2, bracket3, self.alpha.clone())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Shly1,
    Shly2,
    Shly3,
    Shly4,
    Shly5,
    Shly6,
    Shly7,
    Shly8,
}

impl Axiom {
    pub const ALL: [Axiom; 8] = [
        Axiom::Shly1,
        Axiom::Shly2,
        Axiom::Shly3,
        Axiom::Shly4,
        Axiom::Shly5,
        Axiom::Shly6,
        Axiom::Shly7,
        Axiom::Shly8,
    ];

    /// Number of basis elements the identity quantifies over.
    pub fn arity(self) -> usize {
        match self {
            Axiom::Shly1 | Axiom::Shly3 => 2,
            Axiom::Shly2 | Axiom::Shly4 | Axiom::Shly5 => 3,
            Axiom::Shly6 | Axiom::Shly7 => 4,
            Axiom::Shly8 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Axiom::Shly1 => "SHLY1",
            Axiom::Shly2 => "SHLY2",
            Axiom::Shly3 => "SHLY3",
            Axiom::Shly4 => "SHLY4",
            Axiom::Shly5 => "SHLY5",
            Axiom::Shly6 => "SHLY6",
            Axiom::Shly7 => "SHLY7",
            Axiom::Shly8 => "SHLY8",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Per-axiom scan results.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub statuses: Vec<(Axiom, IdentityStatus)>,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.statuses.iter().all(|(_, s)| s.passed())
    }

    pub fn status(&self, axiom: Axiom) -> &IdentityStatus {
        &self.statuses.iter().find(|(a, _)| *a == axiom).expect("all axioms present").1
    }

    pub fn first_failure(&self) -> Option<(Axiom, &IdentityStatus)> {
        self.statuses.iter().find(|(_, s)| !s.passed()).map(|(a, s)| (*a, s))
    }
}

/// Residual of one axiom on a basis tuple, for an arbitrary pair of
/// operations sharing a twist.
pub(crate) fn axiom_residual(
    tw: &Twist,
    b2: &MultiTensor,
    b3: &MultiTensor,
    axiom: Axiom,
    t: &[usize],
) -> Vector {
    match axiom {
        Axiom::Shly1 => id::equivariance2(tw, b2, t[0], t[1]),
        Axiom::Shly2 => id::equivariance3(tw, b3, t[0], t[1], t[2]),
        Axiom::Shly3 => id::skew2(tw, b2, t[0], t[1]),
        Axiom::Shly4 => id::skew3(tw, b3, t[0], t[1], t[2]),
        Axiom::Shly5 => {
            let triple = (t[0], t[1], t[2]);
            let mut r = id::cyclic_nested2(tw, b2, b2, triple);
            add_signed(&mut r, false, &id::cyclic_ternary(tw, b3, triple));
            r
        }
        Axiom::Shly6 => id::cyclic_ternary_of_binary(tw, b3, b2, (t[0], t[1], t[2], t[3])),
        Axiom::Shly7 => {
            let q = (t[0], t[1], t[2], t[3]);
            sub(&id::ternary_over_binary(tw, b3, b2, q), &id::binary_leibniz(tw, b2, b3, q))
        }
        Axiom::Shly8 => {
            let q = (t[0], t[1], t[2], t[3], t[4]);
            sub(&id::ternary_over_ternary(tw, b3, b3, q), &id::ternary_leibniz(tw, b3, b3, q))
        }
    }
}

pub(crate) fn check_axioms_for(
    tw: &Twist,
    b2: &MultiTensor,
    b3: &MultiTensor,
    axioms: &[Axiom],
) -> AxiomReport {
    let n = tw.n();
    AxiomReport {
        statuses: axioms
            .iter()
            .map(|&a| (a, scan(n, a.arity(), |t| axiom_residual(tw, b2, b3, a, t))))
            .collect(),
    }
}

/// Evaluates all eight identities on every homogeneous basis tuple.
pub fn verify_axioms(a: &HomLYSA) -> AxiomReport {
    check_axioms_for(&a.twist(), &a.bracket2, &a.bracket3, &Axiom::ALL)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Degenerate {
    /// α is the identity.
    Untwisted,
    /// The binary bracket vanishes.
    Supertriple,
    /// The ternary bracket vanishes.
    HomLie,
}

pub fn classify_degenerate(a: &HomLYSA) -> BTreeSet<Degenerate> {
    let mut tags = BTreeSet::new();
    if a.alpha.is_identity() {
        tags.insert(Degenerate::Untwisted);
    }
    if a.bracket2.is_zero() {
        tags.insert(Degenerate::Supertriple);
    }
    if a.bracket3.is_zero() {
        tags.insert(Degenerate::HomLie);
    }
    tags
}

/// A Hom-Lie superalgebra viewed as a structure with zero ternary bracket.
/// Callers still need [`verify_axioms`].
pub fn embed_hom_lie_super(
    space: SuperSpace,
    bracket2: MultiTensor,
    alpha: GradedMap,
) -> Result<HomLYSA, AlgebraError> {
    HomLYSA::new(space, bracket2, MultiTensor::zero(space, 3), alpha)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CandidateError {
    #[error(transparent)]
    Invalid(#[from] AlgebraError),
    #[error("candidate fails {}", .0.first_failure().map_or("?", |(a, _)| a.name()))]
    Axioms(AxiomReport),
}

/// Sets `{x,y,z} := [[x,y], α(z)]` and keeps the result only if all eight
/// identities hold.
pub fn candidate_from_binary(
    space: SuperSpace,
    bracket2: MultiTensor,
    alpha: GradedMap,
) -> Result<HomLYSA, CandidateError> {
    let tw = Twist::new(&alpha);
    let bracket3 = MultiTensor::from_fn(space, 3, |t| {
        bracket2.eval(&[bracket2.basis_image(&[t[0], t[1]]), &tw.alpha[t[2]]])
    })
    .map_err(AlgebraError::from)?;
    let a = HomLYSA::new(space, bracket2, bracket3, alpha)?;
    let report = verify_axioms(&a);
    if report.all_pass() {
        Ok(a)
    } else {
        Err(CandidateError::Axioms(report))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorphismCondition {
    TwistIntertwining,
    Binary,
    Ternary,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismCheck {
    pub holds: bool,
    /// First failing condition, tuple and residual.
    pub witness: Option<(MorphismCondition, Vec<usize>, Vector)>,
}

/// `φα = α'φ`, `φ[x,y] = [φx,φy]'` and `φ{x,y,z} = {φx,φy,φz}'` on basis
/// tuples.
pub fn is_morphism(phi: &GradedMap, a: &HomLYSA, b: &HomLYSA) -> Result<MorphismCheck, AlgebraError> {
    if phi.domain() != a.space() || phi.codomain() != b.space() {
        return Err(AlgebraError::SpaceMismatch {
            what: "morphism",
            got: phi.domain(),
            expected: a.space(),
        });
    }
    if phi.parity() != Parity::Even {
        return Err(AlgebraError::NotEven("morphism"));
    }
    let fail = |c, t: Vec<usize>, r: Vector| MorphismCheck {
        holds: false,
        witness: Some((c, t, r)),
    };
    let n = a.dim();
    let lhs = phi.matrix().mul(a.alpha().matrix());
    let rhs = b.alpha().matrix().mul(phi.matrix());
    for j in 0..n {
        let r = sub(&lhs.column(j), &rhs.column(j));
        if !crate::linalg::is_zero_vector(&r) {
            return Ok(fail(MorphismCondition::TwistIntertwining, vec![j], r));
        }
    }
    let images: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    let s2 = scan(n, 2, |t| {
        sub(
            &phi.apply(a.bracket2().basis_image(t)),
            &b.bracket2().eval(&[&images[t[0]], &images[t[1]]]),
        )
    });
    if let Some((t, r)) = s2.first {
        return Ok(fail(MorphismCondition::Binary, t, r));
    }
    let s3 = scan(n, 3, |t| {
        sub(
            &phi.apply(a.bracket3().basis_image(t)),
            &b.bracket3().eval(&[&images[t[0]], &images[t[1]], &images[t[2]]]),
        )
    });
    if let Some((t, r)) = s3.first {
        return Ok(fail(MorphismCondition::Ternary, t, r));
    }
    Ok(MorphismCheck {
        holds: true,
        witness: None,
    })
}
