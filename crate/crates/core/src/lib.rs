//! Exact construction and verification of the Schrijver and Wilson
//! pseudoadjacency matrices of G(n,k,t), the graph on k-subsets of `[n]`
//! joining pairs that share fewer than `t` points.
//!
//! * [`exact`]: big rationals and memoised binomials.
//! * [`scheme`]: the Johnson scheme, its two matrix bases and inner
//!   distributions.
//! * [`pseudoadjacency`]: both constructions and their exact comparison.
//! * [`spectral`]: PSD certificates, exact rank and the Hoffman bound.
//! * [`families`]: stars, Steiner systems and brute-force α.
//! * [`format`]: text formats for matrices and set families.

pub mod error;
pub mod exact;
pub mod families;
pub mod format;
pub mod matrix;
pub mod pseudoadjacency;
pub mod scheme;
pub mod spectral;

pub use error::{Error, Result};
pub use exact::{binomial, rational, BinomialTable, Rational};
pub use families::{
    brute_alpha, design_consistency_check, design_registry, star_family, AlphaResult,
    ConsistencyReport, DesignRecord, SetFamily, DEFAULT_BRUTE_CAP,
};
pub use matrix::DenseRationalMatrix;
pub use pseudoadjacency::{
    a_vector, schrijver_descriptor, support_and_rowsum_check, verify_coefficient_identity,
    verify_equality, wilson_descriptor, AVector, CoefficientIdentity, Construction, EqualityMode,
    EqualityReport, PseudoadjacencyCheck, PseudoadjacencyDescriptor,
};
pub use scheme::{
    a_basis_to_d, d_basis_to_a, Basis, BasisVector, InnerDistribution, JohnsonScheme,
    SchemeParams, Subset, DEFAULT_MATERIALIZE_CAP,
};
pub use spectral::{
    certify_extremes, exact_rank, hoffman_bound, psd_certify, row_sum_eigenvalue, PivotRule,
    PsdCertificate, SpectralCertificate, DEFAULT_SPECTRAL_CAP,
};
