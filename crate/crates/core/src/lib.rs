//! Exact computations for finite-dimensional Hom-Lie-Yamaguti superalgebras.

pub mod algebra;
pub mod cohomology;
pub mod deformation;
pub mod derivations;
pub mod fixtures;
pub mod graded;
mod identities;
pub mod linalg;
pub mod representation;
pub mod scalar;

pub use algebra::{verify_axioms, Axiom, AxiomReport, HomLYSA};
pub use graded::{koszul_sign, GradedMap, MultiTensor, Parity, SuperSpace};
pub use identities::IdentityStatus;
pub use linalg::{nullspace, LinearSystem, Matrix, SubspaceBasis, Vector};
pub use scalar::Scalar;
pub use cohomology::{cocycle_residual, delta1, h23, CochainPair, H23};
pub use deformation::{trivialize, verify_deformation, Deformation, FormalIso, ObstructionReport};
pub use derivations::{check_tower, family_basis, Family, OperatorFamilyBasis};
pub use representation::{semidirect_sum, verify_representation, RepTriple};
