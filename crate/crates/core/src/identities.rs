//! Bilinear building blocks of the defining identities.
//!
//! Each function evaluates one "shape" of term on a homogeneous basis tuple
//! with the operations passed in explicitly. The axiom checker, the
//! cocycle residuals and the order-by-order deformation equations are all
//! sums of these blocks with different operations plugged in, so the Koszul
//! signs live in exactly one place.

use crate::graded::{cyclic_signed_sum, index_tuples, MultiTensor, Parity, SuperSpace};
use crate::linalg::{add_signed, is_zero_vector, sub, zero_vector, Vector};
use crate::scalar::Scalar;

/// Basis vectors and their images under α and α².
#[derive(Debug, Clone)]
pub(crate) struct Twist {
    pub space: SuperSpace,
    pub alpha: Vec<Vector>,
    pub alpha2: Vec<Vector>,
    alpha_matrix: crate::linalg::Matrix,
}

impl Twist {
    pub fn new(alpha: &crate::graded::GradedMap) -> Self {
        let space = alpha.domain();
        let n = space.dim();
        let a2 = alpha.matrix().mul(alpha.matrix());
        Self {
            space,
            alpha: (0..n).map(|i| alpha.column(i)).collect(),
            alpha2: (0..n).map(|i| a2.column(i)).collect(),
            alpha_matrix: alpha.matrix().clone(),
        }
    }

    pub fn p(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    pub fn apply_alpha(&self, v: &[Scalar]) -> Vector {
        self.alpha_matrix.apply(v)
    }

    pub fn n(&self) -> usize {
        self.space.dim()
    }
}

fn e2(t: &MultiTensor, a: &[Scalar], b: &[Scalar]) -> Vector {
    t.eval(&[a, b])
}

fn e3(t: &MultiTensor, a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Vector {
    t.eval(&[a, b, c])
}

/// `α F(x,y) − F(αx, αy)`
pub(crate) fn equivariance2(tw: &Twist, f: &MultiTensor, x: usize, y: usize) -> Vector {
    let lhs = tw.apply_alpha(f.basis_image(&[x, y]));
    sub(&lhs, &e2(f, &tw.alpha[x], &tw.alpha[y]))
}

/// `α G(x,y,z) − G(αx, αy, αz)`
pub(crate) fn equivariance3(tw: &Twist, g: &MultiTensor, x: usize, y: usize, z: usize) -> Vector {
    let lhs = tw.apply_alpha(g.basis_image(&[x, y, z]));
    sub(&lhs, &e3(g, &tw.alpha[x], &tw.alpha[y], &tw.alpha[z]))
}

/// `F(x,y) + (-1)^{|x||y|} F(y,x)`
pub(crate) fn skew2(tw: &Twist, f: &MultiTensor, x: usize, y: usize) -> Vector {
    let mut out = f.basis_image(&[x, y]).to_vec();
    add_signed(&mut out, (tw.p(x) * tw.p(y)).negates(), f.basis_image(&[y, x]));
    out
}

/// `G(x,y,z) + (-1)^{|x||y|} G(y,x,z)`
pub(crate) fn skew3(tw: &Twist, g: &MultiTensor, x: usize, y: usize, z: usize) -> Vector {
    let mut out = g.basis_image(&[x, y, z]).to_vec();
    add_signed(&mut out, (tw.p(x) * tw.p(y)).negates(), g.basis_image(&[y, x, z]));
    out
}

/// `↺ (-1)^{|x||z|} P(Q(x,y), αz)`
pub(crate) fn cyclic_nested2(tw: &Twist, p: &MultiTensor, q: &MultiTensor, t: (usize, usize, usize)) -> Vector {
    cyclic_signed_sum(&tw.space, t, |a, b, c| {
        e2(p, q.basis_image(&[a, b]), &tw.alpha[c])
    })
}

/// `↺ (-1)^{|x||z|} G(x,y,z)`
pub(crate) fn cyclic_ternary(tw: &Twist, g: &MultiTensor, t: (usize, usize, usize)) -> Vector {
    cyclic_signed_sum(&tw.space, t, |a, b, c| g.basis_image(&[a, b, c]).to_vec())
}

/// `↺_{(x,y,z)} (-1)^{|x||z|} G(F(x,y), αz, αu)` with `u` held fixed.
pub(crate) fn cyclic_ternary_of_binary(
    tw: &Twist,
    g: &MultiTensor,
    f: &MultiTensor,
    (x, y, z, u): (usize, usize, usize, usize),
) -> Vector {
    cyclic_signed_sum(&tw.space, (x, y, z), |a, b, c| {
        e3(g, f.basis_image(&[a, b]), &tw.alpha[c], &tw.alpha[u])
    })
}

/// `G(αx, αy, F(u,v))`
pub(crate) fn ternary_over_binary(
    tw: &Twist,
    g: &MultiTensor,
    f: &MultiTensor,
    (x, y, u, v): (usize, usize, usize, usize),
) -> Vector {
    e3(g, &tw.alpha[x], &tw.alpha[y], f.basis_image(&[u, v]))
}

/// `F(G(x,y,u), α²v) + (-1)^{|u|(|x|+|y|)} F(α²u, G(x,y,v))`
pub(crate) fn binary_leibniz(
    tw: &Twist,
    f: &MultiTensor,
    g: &MultiTensor,
    (x, y, u, v): (usize, usize, usize, usize),
) -> Vector {
    let mut out = e2(f, g.basis_image(&[x, y, u]), &tw.alpha2[v]);
    let sign = tw.p(u) * (tw.p(x) + tw.p(y));
    let second = e2(f, &tw.alpha2[u], g.basis_image(&[x, y, v]));
    add_signed(&mut out, sign.negates(), &second);
    out
}

/// `G(α²x, α²y, H(u,v,w))`
pub(crate) fn ternary_over_ternary(
    tw: &Twist,
    g: &MultiTensor,
    h: &MultiTensor,
    (x, y, u, v, w): (usize, usize, usize, usize, usize),
) -> Vector {
    e3(g, &tw.alpha2[x], &tw.alpha2[y], h.basis_image(&[u, v, w]))
}

/// `G(H(x,y,u),α²v,α²w) + (-1)^{|u|(|x|+|y|)} G(α²u,H(x,y,v),α²w)
///   + (-1)^{(|u|+|v|)(|x|+|y|)} G(α²u,α²v,H(x,y,w))`
pub(crate) fn ternary_leibniz(
    tw: &Twist,
    g: &MultiTensor,
    h: &MultiTensor,
    (x, y, u, v, w): (usize, usize, usize, usize, usize),
) -> Vector {
    let xy = tw.p(x) + tw.p(y);
    let mut out = e3(g, h.basis_image(&[x, y, u]), &tw.alpha2[v], &tw.alpha2[w]);
    let second = e3(g, &tw.alpha2[u], h.basis_image(&[x, y, v]), &tw.alpha2[w]);
    add_signed(&mut out, (tw.p(u) * xy).negates(), &second);
    let third = e3(g, &tw.alpha2[u], &tw.alpha2[v], h.basis_image(&[x, y, w]));
    add_signed(&mut out, ((tw.p(u) + tw.p(v)) * xy).negates(), &third);
    out
}

/// Outcome of scanning one identity over all basis tuples of its arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityStatus {
    /// Number of basis tuples with a nonzero residual.
    pub violations: usize,
    /// First violating tuple in lexicographic order, with its residual.
    pub first: Option<(Vec<usize>, Vector)>,
}

impl IdentityStatus {
    pub fn passed(&self) -> bool {
        self.violations == 0
    }
}

/// Evaluates `residual` on every index tuple of the given arity.
pub(crate) fn scan(n: usize, arity: usize, mut residual: impl FnMut(&[usize]) -> Vector) -> IdentityStatus {
    let mut status = IdentityStatus {
        violations: 0,
        first: None,
    };
    for t in index_tuples(n, arity) {
        let r = residual(&t);
        if !is_zero_vector(&r) {
            status.violations += 1;
            if status.first.is_none() {
                status.first = Some((t, r));
            }
        }
    }
    status
}

/// The four quadratic deformation equations, indexed by their position
/// among the eight: cyclic binary, cyclic mixed, binary Leibniz, ternary
/// Leibniz.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Quadratic {
    CyclicBinary,
    CyclicMixed,
    BinaryLeibniz,
    TernaryLeibniz,
}

impl Quadratic {
    pub fn arity(self) -> usize {
        match self {
            Quadratic::CyclicBinary => 3,
            Quadratic::CyclicMixed | Quadratic::BinaryLeibniz => 4,
            Quadratic::TernaryLeibniz => 5,
        }
    }
}

/// Order-`n` coefficient of a quadratic identity for the series
/// `f_t = Σ fs[i] tⁱ`, `g_t = Σ gs[i] tⁱ`. Coefficients past the end of the
/// lists count as zero.
pub(crate) fn convolution(
    tw: &Twist,
    fs: &[MultiTensor],
    gs: &[MultiTensor],
    n: usize,
    eq: Quadratic,
    t: &[usize],
) -> Vector {
    let mut out = zero_vector(tw.n());
    for i in 0..=n {
        let j = n - i;
        let term = match eq {
            Quadratic::CyclicBinary => match (fs.get(i), fs.get(j)) {
                (Some(fi), Some(fj)) => Some(cyclic_nested2(tw, fi, fj, (t[0], t[1], t[2]))),
                _ => None,
            },
            Quadratic::CyclicMixed => match (gs.get(i), fs.get(j)) {
                (Some(gi), Some(fj)) => Some(cyclic_ternary_of_binary(tw, gi, fj, (t[0], t[1], t[2], t[3]))),
                _ => None,
            },
            Quadratic::BinaryLeibniz => {
                let t4 = (t[0], t[1], t[2], t[3]);
                let mut acc = zero_vector(tw.n());
                if let (Some(gi), Some(fj)) = (gs.get(i), fs.get(j)) {
                    add_signed(&mut acc, false, &ternary_over_binary(tw, gi, fj, t4));
                }
                if let (Some(fi), Some(gj)) = (fs.get(i), gs.get(j)) {
                    add_signed(&mut acc, true, &binary_leibniz(tw, fi, gj, t4));
                }
                Some(acc)
            }
            Quadratic::TernaryLeibniz => match (gs.get(i), gs.get(j)) {
                (Some(gi), Some(gj)) => {
                    let t5 = (t[0], t[1], t[2], t[3], t[4]);
                    Some(sub(&ternary_over_ternary(tw, gi, gj, t5), &ternary_leibniz(tw, gi, gj, t5)))
                }
                _ => None,
            },
        };
        if let Some(v) = term {
            add_signed(&mut out, false, &v);
        }
    }
    if eq == Quadratic::CyclicBinary {
        if let Some(gn) = gs.get(n) {
            add_signed(&mut out, false, &cyclic_ternary(tw, gn, (t[0], t[1], t[2])));
        }
    }
    out
}
