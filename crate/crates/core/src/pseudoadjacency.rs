//! Schrijver's and Wilson's pseudoadjacency matrices for G(n,k,t).
//!
//! Schrijver's matrix is written in the distance basis,
//!
//! ```text
//! S = Σ_{i<t} a_{k-i} / (C(k,k-i) C(n-k,k-i)) · A_{k-i},
//! a_{k-i} = C(k,k-i)/C(n-t,k-t) · Σ_{j=0}^{k-i} (-1)^{k-i-j} C(k-i,j) C(n-min(k-j,t), n-k),
//! ```
//!
//! and Wilson's in the inclusion basis,
//!
//! ```text
//! Ω = Σ_{i<t} (-1)^{t-1-i} C(k-1-i,k-t) / C(n-k-t+i,k-t) · D_{k-i}.
//! ```
//!
//! The two agree for every valid triple; [`verify_equality`] checks this
//! exactly, either on coefficients or on the materialized matrices.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, Rational};
use crate::matrix::DenseRationalMatrix;
use crate::scheme::{Basis, BasisVector, SchemeParams, DEFAULT_MATERIALIZE_CAP};

/// `a_{k-i}` for `i = 0..t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AVector {
    pub params: SchemeParams,
    entries: Vec<Rational>,
}

impl AVector {
    /// `a_{k-i}`; panics for `i >= t`, where the vector is not defined.
    pub fn get(&self, i: u32) -> &Rational {
        &self.entries[i as usize]
    }

    /// `(k - i, a_{k-i})` pairs in order of increasing `i`.
    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rational)> {
        let k = self.params.k;
        self.entries
            .iter()
            .enumerate()
            .map(move |(i, a)| (k - i as u32, a))
    }
}

fn c(m: u32, r: u32) -> Result<Rational> {
    binomial(m as i64, r as i64)
}

fn ci(m: i64, r: i64) -> Result<Rational> {
    binomial(m, r)
}

pub fn a_vector(params: SchemeParams) -> Result<AVector> {
    let SchemeParams { n, k, t } = params;
    let scale = c(n - t, k - t)?.recip()?;
    let entries = (0..t)
        .map(|i| {
            let top = k - i;
            let mut sum = Rational::zero();
            for j in 0..=top {
                let term = c(top, j)? * c(n - (k - j).min(t), n - k)?;
                sum += Rational::sign_power((top - j) as i64) * term;
            }
            Ok(&scale * c(k, top)? * sum)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AVector { params, entries })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Construction {
    Schrijver,
    Wilson,
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Construction::Schrijver => "schrijver",
            Construction::Wilson => "wilson",
        })
    }
}

/// A named pseudoadjacency matrix given by its basis coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoadjacencyDescriptor {
    pub params: SchemeParams,
    pub label: Construction,
    pub coefficients: BasisVector,
}

impl PseudoadjacencyDescriptor {
    pub fn build(params: SchemeParams, label: Construction) -> Result<Self> {
        match label {
            Construction::Schrijver => schrijver_descriptor(params),
            Construction::Wilson => wilson_descriptor(params),
        }
    }

    pub fn in_basis(&self, basis: Basis) -> BasisVector {
        self.coefficients.convert(basis)
    }

    pub fn materialize(&self, cap: u64) -> Result<DenseRationalMatrix> {
        self.params
            .scheme()?
            .materialize_capped(&self.coefficients, cap)
    }
}

/// A-basis coefficients `a_{k-i} / (C(k,k-i) C(n-k,k-i))`, zeros kept.
pub fn schrijver_descriptor(params: SchemeParams) -> Result<PseudoadjacencyDescriptor> {
    let SchemeParams { n, k, .. } = params;
    let a = a_vector(params)?;
    let mut coefficients = BasisVector::zero(Basis::A, k);
    for (index, value) in a.iter() {
        let denom = c(k, index)? * c(n - k, index)?;
        coefficients.set(index, value.checked_div(&denom)?)?;
    }
    Ok(PseudoadjacencyDescriptor {
        params,
        label: Construction::Schrijver,
        coefficients,
    })
}

/// D-basis coefficients `(-1)^{t-1-i} C(k-1-i,k-t) / C(n-k-t+i,k-t)`.
pub fn wilson_descriptor(params: SchemeParams) -> Result<PseudoadjacencyDescriptor> {
    let SchemeParams { n, k, t } = params;
    let mut coefficients = BasisVector::zero(Basis::D, k);
    for i in 0..t {
        let denom = c(n - k - t + i, k - t)?;
        if denom.is_zero() {
            return Err(Error::Invariant(format!(
                "C({}, {}) vanished for {params}",
                n - k - t + i,
                k - t
            )));
        }
        let value = Rational::sign_power((t - 1 - i) as i64) * c(k - 1 - i, k - t)?;
        coefficients.set(k - i, value.checked_div(&denom)?)?;
    }
    Ok(PseudoadjacencyDescriptor {
        params,
        label: Construction::Wilson,
        coefficients,
    })
}

/// Both sides of the per-index coefficient identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientIdentity {
    pub i: u32,
    pub lhs: Rational,
    pub rhs: Rational,
    pub holds: bool,
}

/// Checks, for one `i` in `[0, t)`,
///
/// ```text
/// Σ_{j=i}^{t-1} a_{k-j}/(C(k,k-j) C(n-k,k-j)) (-1)^{j-i} C(k-i,k-j)
///     = (-1)^{t-1-i} C(k-1-i,k-t) / C(n-k-t+i,k-t).
/// ```
pub fn verify_coefficient_identity(params: SchemeParams, i: u32) -> Result<CoefficientIdentity> {
    let SchemeParams { n, k, t } = params;
    if i >= t {
        return domain(format!("identity index {i} outside [0, {t})"));
    }
    let a = a_vector(params)?;
    let mut lhs = Rational::zero();
    for j in i..t {
        let scaled = a.get(j).checked_div(&(c(k, k - j)? * c(n - k, k - j)?))?;
        lhs += scaled * Rational::sign_power((j - i) as i64) * c(k - i, k - j)?;
    }
    let rhs = (Rational::sign_power((t - 1 - i) as i64) * ci((k - 1 - i) as i64, (k - t) as i64)?)
        .checked_div(&c(n - k - t + i, k - t)?)?;
    Ok(CoefficientIdentity {
        i,
        holds: lhs == rhs,
        lhs,
        rhs,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum EqualityMode {
    #[default]
    Coefficients,
    Materialized,
}

impl fmt::Display for EqualityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EqualityMode::Coefficients => "coefficients",
            EqualityMode::Materialized => "materialized",
        })
    }
}

/// A position where the two constructions differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Mismatch {
    /// Coefficient of `D_index`.
    Coefficient {
        index: u32,
        schrijver: Rational,
        wilson: Rational,
    },
    /// Matrix entry at ranks `(row, col)`.
    Entry {
        row: usize,
        col: usize,
        schrijver: Rational,
        wilson: Rational,
    },
}

/// Materialized mismatches beyond this many are counted but not listed.
pub const MAX_LISTED_ENTRY_MISMATCHES: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualityReport {
    pub params: SchemeParams,
    pub mode: EqualityMode,
    pub equal: bool,
    pub mismatch_count: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Exact comparison of Schrijver's and Wilson's matrices.
///
/// In coefficient mode the Schrijver vector is rewritten in the inclusion
/// basis and compared with Wilson's; in materialized mode both dense
/// matrices are built and compared entry by entry.
pub fn verify_equality(params: SchemeParams, mode: EqualityMode, cap: u64) -> Result<EqualityReport> {
    let schrijver = schrijver_descriptor(params)?;
    let wilson = wilson_descriptor(params)?;
    let mut mismatches = Vec::new();
    let mut mismatch_count = 0;
    match mode {
        EqualityMode::Coefficients => {
            let s = schrijver.in_basis(Basis::D);
            let w = &wilson.coefficients;
            for index in 0..=params.k {
                let (sv, wv) = (s.get(index), w.get(index));
                if sv != wv {
                    mismatch_count += 1;
                    mismatches.push(Mismatch::Coefficient {
                        index,
                        schrijver: sv,
                        wilson: wv,
                    });
                }
            }
        }
        EqualityMode::Materialized => {
            let s = schrijver.materialize(cap)?;
            let w = wilson.materialize(cap)?;
            for row in 0..s.dim() {
                for col in 0..s.dim() {
                    if s.get(row, col) != w.get(row, col) {
                        mismatch_count += 1;
                        if mismatches.len() < MAX_LISTED_ENTRY_MISMATCHES {
                            mismatches.push(Mismatch::Entry {
                                row,
                                col,
                                schrijver: s.get(row, col).clone(),
                                wilson: w.get(row, col).clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(EqualityReport {
        params,
        mode,
        equal: mismatch_count == 0,
        mismatch_count,
        mismatches,
    })
}

pub fn verify_equality_default(params: SchemeParams, mode: EqualityMode) -> Result<EqualityReport> {
    verify_equality(params, mode, DEFAULT_MATERIALIZE_CAP)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PseudoadjacencyCheck {
    /// Common row sum, absent when rows differ.
    pub constant_row_sum: Option<Rational>,
    /// Entries vanish on every non-edge `|F ∩ F'| >= t`.
    pub support_ok: bool,
    pub diagonal_zero: bool,
}

impl PseudoadjacencyCheck {
    pub fn passed(&self) -> bool {
        self.constant_row_sum.is_some() && self.support_ok && self.diagonal_zero
    }
}

/// Checks the pseudoadjacency conditions on the materialized matrix.
pub fn support_and_rowsum_check(
    descriptor: &PseudoadjacencyDescriptor,
    cap: u64,
) -> Result<PseudoadjacencyCheck> {
    let params = descriptor.params;
    let scheme = params.scheme()?;
    let m = descriptor.materialize(cap)?;
    let verts = scheme.vertices();
    let diagonal_zero = (0..m.dim()).all(|u| m.get(u, u).is_zero());
    let support_ok = (0..m.dim()).all(|u| {
        (0..m.dim()).all(|v| {
            u == v || verts[u].intersection_size(verts[v]) < params.t || m.get(u, v).is_zero()
        })
    });
    let first = if m.dim() == 0 { Rational::zero() } else { m.row_sum(0) };
    let constant = (1..m.dim()).all(|u| m.row_sum(u) == first);
    Ok(PseudoadjacencyCheck {
        constant_row_sum: constant.then_some(first),
        support_ok,
        diagonal_zero,
    })
}

/// `C(n,k)/C(n-t,k-t) - 1`, the claimed largest eigenvalue.
pub fn expected_lambda_max(params: SchemeParams) -> Result<Rational> {
    let ratio = Rational::from(params.vertex_count()).checked_div(&Rational::from(params.ekr_bound()))?;
    Ok(ratio - Rational::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::families::{design_registry, SetFamily};

    fn p(n: u32, k: u32, t: u32) -> SchemeParams {
        SchemeParams::new(n, k, t).unwrap()
    }

    fn q(a: i64, b: i64) -> Rational {
        rational(a, b).unwrap()
    }

    /// Inner distribution by direct pair count, independent of
    /// `JohnsonScheme::inner_distribution`.
    fn pair_count(family: &SetFamily, k: u32) -> Vec<Rational> {
        let mut counts = vec![0i64; k as usize + 1];
        for f in family.blocks() {
            for g in family.blocks() {
                counts[(k - f.intersection_size(*g)) as usize] += 1;
            }
        }
        counts.into_iter().map(|c| q(c, family.len() as i64)).collect()
    }

    #[test]
    fn a_vector_examples() {
        let a = a_vector(p(7, 3, 2)).unwrap();
        assert_eq!(*a.get(0), 0);
        assert_eq!(*a.get(1), 6);
        let fano = pair_count(&design_registry("fano").unwrap().family, 3);
        assert_eq!((&fano[3], &fano[2]), (a.get(0), a.get(1)));

        let a = a_vector(p(9, 3, 2)).unwrap();
        assert_eq!(*a.get(0), 2);
        assert_eq!(*a.get(1), 9);
        let sts9 = pair_count(&design_registry("sts9").unwrap().family, 3);
        assert_eq!((&sts9[3], &sts9[2]), (a.get(0), a.get(1)));

        assert_eq!(*a_vector(p(5, 2, 1)).unwrap().get(0), q(3, 2));
    }

    #[test]
    fn a_vector_t1_closed_form() {
        // With t = 1 the sum telescopes to a_k = (n-k)/k.
        for params in SchemeParams::grid(20, 9).into_iter().filter(|p| p.t == 1) {
            let a = a_vector(params).unwrap();
            assert_eq!(*a.get(0), q((params.n - params.k) as i64, params.k as i64), "{params}");
        }
    }

    #[test]
    fn schrijver_examples() {
        let s = schrijver_descriptor(p(7, 3, 2)).unwrap();
        assert_eq!(s.coefficients.basis(), Basis::A);
        assert_eq!(s.coefficients.get(3), 0);
        assert_eq!(s.coefficients.get(2), q(1, 3));
        assert_eq!(s.coefficients.to_string(), "{A_3: 0, A_2: 1/3}");
        let s = schrijver_descriptor(p(5, 2, 1)).unwrap();
        assert_eq!(s.coefficients.to_string(), "{A_2: 1/2}");
    }

    #[test]
    fn wilson_examples() {
        let w = wilson_descriptor(p(7, 3, 2)).unwrap();
        assert_eq!(w.coefficients.to_string(), "{D_3: -1, D_2: 1/3}");
        let w = wilson_descriptor(p(5, 2, 1)).unwrap();
        assert_eq!(w.coefficients.to_string(), "{D_2: 1/2}");
        for params in SchemeParams::grid(16, 7) {
            let w = wilson_descriptor(params).unwrap();
            let low = params.k - params.t + 1;
            let want = c(params.n - params.k - 1, params.k - params.t).unwrap().recip().unwrap();
            assert_eq!(w.coefficients.get(low), want, "{params}");
            assert!(w.coefficients.get(low).is_positive());
            assert!(w.coefficients.nonzero().all(|(i, _)| i >= low));
        }
    }

    #[test]
    fn identity_examples() {
        let r = verify_coefficient_identity(p(7, 3, 2), 0).unwrap();
        assert!(r.holds);
        assert_eq!(r.lhs, -1);
        let r = verify_coefficient_identity(p(7, 3, 2), 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.rhs, q(1, 3));
        let r = verify_coefficient_identity(p(5, 2, 1), 0).unwrap();
        assert_eq!((r.lhs.clone(), r.holds), (q(1, 2), true));
        assert!(verify_coefficient_identity(p(7, 3, 2), 2).is_err());
    }

    #[test]
    fn equality_examples() {
        let r = verify_equality_default(p(7, 3, 2), EqualityMode::Coefficients).unwrap();
        assert!(r.equal);
        assert_eq!(
            schrijver_descriptor(p(7, 3, 2)).unwrap().in_basis(Basis::D).to_string(),
            "{D_3: -1, D_2: 1/3}"
        );
        assert!(verify_equality_default(p(5, 2, 1), EqualityMode::Materialized).unwrap().equal);
        for params in SchemeParams::grid(12, 5) {
            assert!(verify_equality_default(params, EqualityMode::Coefficients).unwrap().equal);
        }
    }

    #[test]
    fn materialized_cap() {
        let err = verify_equality(p(20, 10, 2), EqualityMode::Materialized, DEFAULT_MATERIALIZE_CAP);
        assert!(matches!(err, Err(Error::Resource { .. })));
    }

    #[test]
    fn identity_iff_equality() {
        for params in SchemeParams::grid(14, 6) {
            let all = (0..params.t).all(|i| verify_coefficient_identity(params, i).unwrap().holds);
            let eq = verify_equality_default(params, EqualityMode::Coefficients).unwrap().equal;
            assert_eq!(all, eq);
        }
    }

    #[test]
    fn rowsum_examples() {
        let w = wilson_descriptor(p(7, 3, 2)).unwrap();
        let chk = support_and_rowsum_check(&w, 1000).unwrap();
        assert_eq!(chk.constant_row_sum, Some(q(6, 1)));
        assert!(chk.support_ok && chk.diagonal_zero);

        let s = schrijver_descriptor(p(5, 2, 1)).unwrap();
        let chk = support_and_rowsum_check(&s, 1000).unwrap();
        assert_eq!(chk.constant_row_sum, Some(q(3, 2)));
        assert_eq!(expected_lambda_max(p(5, 2, 1)).unwrap(), q(3, 2));

        let zero = PseudoadjacencyDescriptor {
            params: p(6, 3, 2),
            label: Construction::Wilson,
            coefficients: BasisVector::zero(Basis::D, 3),
        };
        let chk = support_and_rowsum_check(&zero, 1000).unwrap();
        assert_eq!(chk.constant_row_sum, Some(Rational::zero()));
        assert!(chk.passed());
    }

    #[test]
    fn support_violation_reported() {
        // D_1 is nonzero on pairs meeting in k-1 points, which are non-edges for t <= k-1.
        let bad = PseudoadjacencyDescriptor {
            params: p(6, 3, 2),
            label: Construction::Wilson,
            coefficients: BasisVector::unit(Basis::D, 3, 1).unwrap(),
        };
        let chk = support_and_rowsum_check(&bad, 1000).unwrap();
        assert!(!chk.support_ok);
        assert!(chk.diagonal_zero);
        assert!(!chk.passed());
    }
}
