//! Degree-(2,3) cohomology with adjoint coefficients.
//!
//! Cochains are pairs `(f, g)` of even, α-equivariant maps, super-skew in
//! the leading pair. The cocycle condition is the order-one part of the
//! quadratic deformation equations; coboundaries are images of even maps
//! commuting with α.

use thiserror::Error;

use crate::algebra::HomLYSA;
use crate::graded::{index_tuples, GradedMap, MultiTensor, Parity, SuperSpace};
use crate::identities::{self as id, convolution, Quadratic, Twist};
use crate::linalg::{add_signed, is_zero_vector, nullspace, kernel_on, LinearSystem, SubspaceBasis, Vector};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CohomologyError {
    #[error("cochain lives on {got}, algebra on {expected}")]
    Space { got: SuperSpace, expected: SuperSpace },
    #[error("degree-one cochain must be even and commute with α")]
    NotOneCochain,
    #[error("coboundary {0:?} is not a cocycle")]
    BoundaryNotClosed(Vec<String>),
}

/// `(f, g)` with `f` binary and `g` ternary, both even and `L`-valued.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainPair {
    pub f: MultiTensor,
    pub g: MultiTensor,
}

impl CochainPair {
    pub fn zero(space: SuperSpace) -> Self {
        Self {
            f: MultiTensor::zero(space, 2),
            g: MultiTensor::zero(space, 3),
        }
    }

    pub fn space(&self) -> SuperSpace {
        self.f.space()
    }

    pub fn is_zero(&self) -> bool {
        self.f.is_zero() && self.g.is_zero()
    }

    pub fn add(&self, other: &CochainPair) -> CochainPair {
        CochainPair {
            f: self.f.add(&other.f),
            g: self.g.add(&other.g),
        }
    }

    pub fn sub(&self, other: &CochainPair) -> CochainPair {
        CochainPair {
            f: self.f.sub(&other.f),
            g: self.g.sub(&other.g),
        }
    }

    pub fn scaled(&self, c: &Scalar) -> CochainPair {
        CochainPair {
            f: self.f.scaled(c),
            g: self.g.scaled(c),
        }
    }

    pub fn neg(&self) -> CochainPair {
        self.scaled(&-Scalar::from_integer(1.into()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CochainCondition {
    /// `α f(x,y) = f(αx, αy)`
    EquivariantF,
    /// `α g(x,y,z) = g(αx, αy, αz)`
    EquivariantG,
    /// `f(x,y) = -(-1)^{|x||y|} f(y,x)`
    SkewF,
    /// `g(x,y,z) = -(-1)^{|x||y|} g(y,x,z)`
    SkewG,
    /// `f(x,x) = 0` and `g(x,x,z) = 0` for even `x`; diagnostic only.
    LiteralAlternation,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainCheck {
    pub holds: bool,
    pub witness: Option<(CochainCondition, Vec<usize>)>,
}

fn check_space(a: &HomLYSA, p: &CochainPair) -> Result<(), CohomologyError> {
    if p.f.space() != a.space() || p.g.space() != a.space() {
        return Err(CohomologyError::Space {
            got: p.f.space(),
            expected: a.space(),
        });
    }
    Ok(())
}

/// Checks equivariance and super-skewness on all basis tuples.
pub fn is_cochain(a: &HomLYSA, p: &CochainPair) -> Result<CochainCheck, CohomologyError> {
    check_space(a, p)?;
    let tw = a.twist();
    let n = a.dim();
    let conds: [(CochainCondition, usize); 4] = [
        (CochainCondition::EquivariantF, 2),
        (CochainCondition::EquivariantG, 3),
        (CochainCondition::SkewF, 2),
        (CochainCondition::SkewG, 3),
    ];
    for (c, arity) in conds {
        for t in index_tuples(n, arity) {
            let r = cochain_residual(&tw, p, c, &t);
            if !is_zero_vector(&r) {
                return Ok(CochainCheck {
                    holds: false,
                    witness: Some((c, t)),
                });
            }
        }
    }
    Ok(CochainCheck {
        holds: true,
        witness: None,
    })
}

/// The printed vanishing-on-repeats condition, checked where it agrees
/// with super-skewness: repeated even arguments.
pub fn literal_alternation(p: &CochainPair) -> CochainCheck {
    let space = p.space();
    let n = space.dim();
    for x in (0..n).filter(|&x| space.parity(x) == Parity::Even) {
        if !is_zero_vector(p.f.basis_image(&[x, x])) {
            return CochainCheck {
                holds: false,
                witness: Some((CochainCondition::LiteralAlternation, vec![x, x])),
            };
        }
        for z in 0..n {
            if !is_zero_vector(p.g.basis_image(&[x, x, z])) {
                return CochainCheck {
                    holds: false,
                    witness: Some((CochainCondition::LiteralAlternation, vec![x, x, z])),
                };
            }
        }
    }
    CochainCheck {
        holds: true,
        witness: None,
    }
}

fn cochain_residual(tw: &Twist, p: &CochainPair, c: CochainCondition, t: &[usize]) -> Vector {
    match c {
        CochainCondition::EquivariantF => id::equivariance2(tw, &p.f, t[0], t[1]),
        CochainCondition::EquivariantG => id::equivariance3(tw, &p.g, t[0], t[1], t[2]),
        CochainCondition::SkewF => id::skew2(tw, &p.f, t[0], t[1]),
        CochainCondition::SkewG => id::skew3(tw, &p.g, t[0], t[1], t[2]),
        CochainCondition::LiteralAlternation => unreachable!("not a linear residual"),
    }
}

/// Checks that `φ` is an even map commuting with α.
pub fn is_one_cochain(a: &HomLYSA, phi: &GradedMap) -> bool {
    phi.domain() == a.space()
        && phi.codomain() == a.space()
        && (phi.parity() == Parity::Even || phi.is_zero())
        && phi.commutes_with(a.alpha())
}

/// `(δ_I φ)(x,y) = [φx,y] + [x,φy] − φ[x,y]` and
/// `(δ_II φ)(x,y,z) = {φx,y,z} + {x,φy,z} + {x,y,φz} − φ{x,y,z}`.
pub fn delta1(a: &HomLYSA, phi: &GradedMap) -> Result<CochainPair, CohomologyError> {
    if !is_one_cochain(a, phi) {
        return Err(CohomologyError::NotOneCochain);
    }
    let space = a.space();
    let n = space.dim();
    let cols: Vec<Vector> = (0..n).map(|i| phi.column(i)).collect();
    let unit = |i: usize| crate::linalg::unit_vector(n, i);
    let b2 = a.bracket2();
    let b3 = a.bracket3();
    let f = MultiTensor::from_fn(space, 2, |t| {
        let (x, y) = (t[0], t[1]);
        let mut out = b2.eval(&[&cols[x], &unit(y)]);
        add_signed(&mut out, false, &b2.eval(&[&unit(x), &cols[y]]));
        add_signed(&mut out, true, &phi.apply(b2.basis_image(&[x, y])));
        out
    })
    .expect("δ of an even map is even");
    let g = MultiTensor::from_fn(space, 3, |t| {
        let (x, y, z) = (t[0], t[1], t[2]);
        let mut out = b3.eval(&[&cols[x], &unit(y), &unit(z)]);
        add_signed(&mut out, false, &b3.eval(&[&unit(x), &cols[y], &unit(z)]));
        add_signed(&mut out, false, &b3.eval(&[&unit(x), &unit(y), &cols[z]]));
        add_signed(&mut out, true, &phi.apply(b3.basis_image(&[x, y, z])));
        out
    })
    .expect("δ of an even map is even");
    Ok(CochainPair { f, g })
}

/// The four residual tensors of the cocycle condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CocycleResidual {
    pub e1: MultiTensor,
    pub e2: MultiTensor,
    pub e3: MultiTensor,
    pub e4: MultiTensor,
}

impl CocycleResidual {
    pub fn is_zero(&self) -> bool {
        self.parts().iter().all(|(_, t)| t.is_zero())
    }

    pub fn parts(&self) -> [(&'static str, &MultiTensor); 4] {
        [("E1", &self.e1), ("E2", &self.e2), ("E3", &self.e3), ("E4", &self.e4)]
    }

    /// First nonzero component, with the basis tuple and residual vector.
    pub fn first_nonzero(&self) -> Option<(&'static str, Vec<usize>, Vector)> {
        for (name, t) in self.parts() {
            let n = t.space().dim();
            for idx in index_tuples(n, t.arity()) {
                let v = t.basis_image(&idx);
                if !is_zero_vector(v) {
                    return Some((name, idx, v.to_vec()));
                }
            }
        }
        None
    }

    /// All four tensors' data concatenated.
    pub fn flatten(&self) -> Vector {
        self.parts().iter().flat_map(|(_, t)| t.data().iter().cloned()).collect()
    }
}

/// `E1..E4` for `(f, g)` over `A`.
pub fn cocycle_residual(a: &HomLYSA, p: &CochainPair) -> Result<CocycleResidual, CohomologyError> {
    check_space(a, p)?;
    let tw = a.twist();
    let fs = [a.bracket2().clone(), p.f.clone()];
    let gs = [a.bracket3().clone(), p.g.clone()];
    let mk = |eq: Quadratic| {
        MultiTensor::from_fn(a.space(), eq.arity(), |t| convolution(&tw, &fs, &gs, 1, eq, t))
            .expect("residual of even maps is even")
    };
    Ok(CocycleResidual {
        e1: mk(Quadratic::CyclicBinary),
        e2: mk(Quadratic::CyclicMixed),
        e3: mk(Quadratic::BinaryLeibniz),
        e4: mk(Quadratic::TernaryLeibniz),
    })
}

/// Coordinates on pairs of even tensors: the parity-allowed entries of
/// `f`, then those of `g`, in storage order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CochainCoords {
    space: SuperSpace,
    f_pos: Vec<usize>,
    g_pos: Vec<usize>,
}

fn allowed_positions(space: SuperSpace, arity: usize) -> Vec<usize> {
    let n = space.dim();
    let mut out = Vec::new();
    for (k, idx) in index_tuples(n, arity).enumerate() {
        let p = idx.iter().fold(Parity::Even, |acc, &i| acc + space.parity(i));
        for m in 0..n {
            if space.parity(m) == p {
                out.push(k * n + m);
            }
        }
    }
    out
}

impl CochainCoords {
    pub fn new(space: SuperSpace) -> Self {
        Self {
            space,
            f_pos: allowed_positions(space, 2),
            g_pos: allowed_positions(space, 3),
        }
    }

    pub fn len(&self) -> usize {
        self.f_pos.len() + self.g_pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn to_pair(&self, u: &[Scalar]) -> CochainPair {
        assert_eq!(u.len(), self.len(), "coordinate vector length");
        let n = self.space.dim();
        let mut fd = vec![Scalar::from_integer(0.into()); n * n * n];
        let mut gd = vec![Scalar::from_integer(0.into()); n * n * n * n];
        for (c, &p) in u.iter().zip(&self.f_pos) {
            fd[p] = c.clone();
        }
        for (c, &p) in u[self.f_pos.len()..].iter().zip(&self.g_pos) {
            gd[p] = c.clone();
        }
        CochainPair {
            f: MultiTensor::from_data(self.space, 2, Parity::Even, fd).expect("allowed positions"),
            g: MultiTensor::from_data(self.space, 3, Parity::Even, gd).expect("allowed positions"),
        }
    }

    pub fn from_pair(&self, p: &CochainPair) -> Vector {
        self.f_pos
            .iter()
            .map(|&k| p.f.data()[k].clone())
            .chain(self.g_pos.iter().map(|&k| p.g.data()[k].clone()))
            .collect()
    }
}

/// Coordinates of all cochains (equivariant, super-skew) inside the even
/// pairs.
pub fn cochain_space(a: &HomLYSA) -> (CochainCoords, SubspaceBasis) {
    let coords = CochainCoords::new(a.space());
    let tw = a.twist();
    let n = a.dim();
    let system = LinearSystem::from_linear_map(coords.len(), |u| {
        let p = coords.to_pair(u);
        let mut out = Vec::new();
        for (c, arity) in [
            (CochainCondition::EquivariantF, 2),
            (CochainCondition::EquivariantG, 3),
            (CochainCondition::SkewF, 2),
            (CochainCondition::SkewG, 3),
        ] {
            for t in index_tuples(n, arity) {
                out.extend(cochain_residual(&tw, &p, c, &t));
            }
        }
        out
    });
    (coords, nullspace(&system))
}

/// Basis of even maps commuting with α, as row-major matrix coordinates.
pub fn one_cochain_basis(a: &HomLYSA) -> Vec<GradedMap> {
    let space = a.space();
    let n = space.dim();
    let system = LinearSystem::from_linear_map(n * n, |u| {
        let m = GradedMap::projected(space, Parity::Even, &crate::linalg::Matrix::from_rows(n, u.chunks(n.max(1)).map(<[Scalar]>::to_vec).collect()));
        let mut eqs = m.matrix().mul(a.alpha().matrix()).sub(&a.alpha().matrix().mul(m.matrix())).entries().to_vec();
        // Forbidden entries must vanish.
        for i in 0..n {
            for j in 0..n {
                if space.parity(i) != space.parity(j) {
                    eqs.push(u[i * n + j].clone());
                }
            }
        }
        eqs
    });
    nullspace(&system)
        .into_vectors()
        .into_iter()
        .map(|v| GradedMap::from_coords(space, Parity::Even, &v).expect("even by construction"))
        .collect()
}

/// `Z`: cochains annihilated by `E1..E4`, in [`CochainCoords`].
pub fn z23_basis(a: &HomLYSA) -> (CochainCoords, SubspaceBasis) {
    let (coords, c) = cochain_space(a);
    let z = kernel_on(&c, |u| {
        cocycle_residual(a, &coords.to_pair(u)).expect("same space").flatten()
    });
    (coords, z)
}

/// `B`: the span of `δ¹φ` over a basis of degree-one cochains.
pub fn b23_basis(a: &HomLYSA) -> (CochainCoords, SubspaceBasis) {
    let coords = CochainCoords::new(a.space());
    let images = one_cochain_basis(a)
        .iter()
        .map(|phi| coords.from_pair(&delta1(a, phi).expect("basis maps are one-cochains")))
        .collect::<Vec<_>>();
    let b = SubspaceBasis::span(coords.len(), images);
    (coords, b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct H23 {
    pub coords: CochainCoords,
    pub cochains: SubspaceBasis,
    pub z: SubspaceBasis,
    pub b: SubspaceBasis,
}

impl H23 {
    pub fn dims(&self) -> (usize, usize, usize) {
        (self.z.dim(), self.b.dim(), self.z.dim() - self.b.dim())
    }

    /// Whether `p` is a coboundary.
    pub fn is_coboundary(&self, p: &CochainPair) -> bool {
        self.b.contains(&self.coords.from_pair(p))
    }
}

/// `Z`, `B` and their quotient dimension; fails if some coboundary is not
/// a cocycle.
pub fn h23(a: &HomLYSA) -> Result<H23, CohomologyError> {
    let (coords, cochains) = cochain_space(a);
    let z = kernel_on(&cochains, |u| {
        cocycle_residual(a, &coords.to_pair(u)).expect("same space").flatten()
    });
    let (_, b) = b23_basis(a);
    if let Some(w) = z.first_outside(&b) {
        return Err(CohomologyError::BoundaryNotClosed(
            w.iter().map(crate::scalar::format_scalar).collect(),
        ));
    }
    Ok(H23 { coords, cochains, z, b })
}

/// `(dim Z, dim B, dim Z − dim B)`.
pub fn h23_dims(a: &HomLYSA) -> Result<(usize, usize, usize), CohomologyError> {
    Ok(h23(a)?.dims())
}
