//! Exact spectral certificates.
//!
//! No eigenvalue is ever computed. For a symmetric `M` with constant row sum
//! `λ₁`:
//!
//! * `λ_min = -1` iff `M + I` is positive semidefinite and singular;
//! * `λ_max = λ₁` iff `λ₁·I - M` is positive semidefinite (the all-ones
//!   vector already shows `λ₁` is an eigenvalue).
//!
//! Positive semidefiniteness is decided by symmetric Gaussian elimination.
//! The rational matrix is first scaled to integers by its common denominator
//! and then eliminated fraction-free, so every intermediate entry is an
//! integer multiple of the corresponding Schur-complement entry by a positive
//! factor. Signs and pivot order are therefore those of plain rational
//! elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exact::Rational;
use crate::matrix::DenseRationalMatrix;
use crate::pseudoadjacency::{Construction, PseudoadjacencyDescriptor};
use crate::scheme::SchemeParams;

/// Default vertex cap for elimination-based operations; covers C(10,5) = 252.
pub const DEFAULT_SPECTRAL_CAP: u64 = 300;

fn check_cap(what: &str, dim: usize, cap: u64) -> Result<()> {
    if dim as u64 > cap {
        return Err(Error::Resource {
            what: what.to_string(),
            required: dim as u64,
            cap,
        });
    }
    Ok(())
}

/// `c·M` with `c` the lcm of all denominators, as a flat row-major vector.
fn integer_scaled(m: &DenseRationalMatrix) -> (Vec<BigInt>, BigInt) {
    let n = m.dim();
    let mut scale = BigInt::one();
    for u in 0..n {
        for x in m.row(u) {
            if !x.denom().is_one() {
                scale = scale.lcm(x.denom());
            }
        }
    }
    let mut out = Vec::with_capacity(n * n);
    for u in 0..n {
        for x in m.row(u) {
            out.push(x.numer() * (&scale / x.denom()));
        }
    }
    (out, scale)
}

/// How the next positive pivot is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum PivotRule {
    /// Largest remaining diagonal entry, lowest index on ties.
    #[default]
    LargestDiagonal,
    /// Lowest-index positive diagonal entry.
    FirstIndex,
}

impl PivotRule {
    pub fn other(self) -> Self {
        match self {
            PivotRule::LargestDiagonal => PivotRule::FirstIndex,
            PivotRule::FirstIndex => PivotRule::LargestDiagonal,
        }
    }
}

/// One elimination step: the LDLᵀ pivot eliminated at `index`. A zero value
/// means the whole remaining row was zero and the index was dropped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PivotStep {
    pub index: usize,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Obstruction {
    /// Negative diagonal entry of the Schur complement.
    NegativePivot { index: usize, value: Rational },
    /// Zero diagonal entry with a nonzero entry elsewhere in its row.
    ZeroPivotNonzeroRow { index: usize, partner: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum PsdCertificate {
    Psd {
        rule: PivotRule,
        pivots: Vec<PivotStep>,
        rank: usize,
    },
    NotPsd {
        rule: PivotRule,
        obstruction: Obstruction,
        /// `v` with `vᵀ M v = value < 0`.
        witness: Vec<Rational>,
        value: Rational,
    },
}

impl PsdCertificate {
    pub fn is_psd(&self) -> bool {
        matches!(self, PsdCertificate::Psd { .. })
    }

    /// Rank from the positive pivot count, for a PSD verdict.
    pub fn rank(&self) -> Option<usize> {
        match self {
            PsdCertificate::Psd { rank, .. } => Some(*rank),
            PsdCertificate::NotPsd { .. } => None,
        }
    }

    /// Re-checks the certificate against `m`: a witness must give a
    /// negative quadratic form exactly, a PSD verdict must survive
    /// re-elimination under the other pivot rule.
    pub fn recheck(&self, m: &DenseRationalMatrix) -> Result<bool> {
        match self {
            PsdCertificate::NotPsd { witness, value, .. } => {
                let q = m.quadratic_form(witness)?;
                Ok(q.is_negative() && &q == value)
            }
            PsdCertificate::Psd { rule, rank, .. } => {
                let again = psd_certify_with(m, u64::MAX, rule.other())?;
                Ok(again.is_psd() && again.rank() == Some(*rank))
            }
        }
    }
}

pub fn psd_certify(m: &DenseRationalMatrix) -> Result<PsdCertificate> {
    psd_certify_with(m, DEFAULT_SPECTRAL_CAP, PivotRule::LargestDiagonal)
}

/// Decides positive semidefiniteness of a symmetric matrix exactly.
pub fn psd_certify_with(m: &DenseRationalMatrix, cap: u64, rule: PivotRule) -> Result<PsdCertificate> {
    let n = m.dim();
    check_cap("psd_certify", n, cap)?;
    if let Some((u, v)) = m.asymmetry() {
        return domain(format!("psd_certify needs a symmetric matrix; ({u},{v}) differs"));
    }
    let (mut a, scale) = integer_scaled(m);
    let at = |i: usize, j: usize| if i <= j { i * n + j } else { j * n + i };

    let mut active: Vec<usize> = (0..n).collect();
    let mut eliminated: Vec<usize> = Vec::new();
    let mut pivots = Vec::with_capacity(n);
    let mut prev = BigInt::one();

    loop {
        // Negative diagonal: immediate refutation.
        if let Some(&j) = active.iter().find(|&&j| a[at(j, j)].is_negative()) {
            let value = Rational::new(a[at(j, j)].clone(), &prev * &scale)?;
            let mut y = vec![Rational::zero(); n];
            y[j] = Rational::one();
            return refute(m, rule, &eliminated, y, Obstruction::NegativePivot { index: j, value });
        }
        // Zero diagonal: the row must vanish, then the index drops out.
        let mut kept = Vec::with_capacity(active.len());
        for &j in &active {
            if !a[at(j, j)].is_zero() {
                kept.push(j);
                continue;
            }
            if let Some(&k) = active.iter().find(|&&k| k != j && !a[at(j, k)].is_zero()) {
                // Quadratic form of x·e_j + e_k in the Schur complement is
                // 2x·s_jk + s_kk; x = -(s_kk + 1)/(2 s_jk) makes it -1.
                let s_jk = Rational::new(a[at(j, k)].clone(), &prev * &scale)?;
                let s_kk = Rational::new(a[at(k, k)].clone(), &prev * &scale)?;
                let x = -(s_kk + Rational::one()).checked_div(&(Rational::from(2) * s_jk))?;
                let mut y = vec![Rational::zero(); n];
                y[j] = x;
                y[k] = Rational::one();
                return refute(
                    m,
                    rule,
                    &eliminated,
                    y,
                    Obstruction::ZeroPivotNonzeroRow { index: j, partner: k },
                );
            }
            pivots.push(PivotStep {
                index: j,
                value: Rational::zero(),
            });
        }
        active = kept;
        if active.is_empty() {
            break;
        }

        let pos = match rule {
            PivotRule::FirstIndex => 0,
            PivotRule::LargestDiagonal => {
                let mut best = 0;
                for (idx, &j) in active.iter().enumerate().skip(1) {
                    if a[at(j, j)] > a[at(active[best], active[best])] {
                        best = idx;
                    }
                }
                best
            }
        };
        let p = active.remove(pos);
        let app = a[at(p, p)].clone();
        pivots.push(PivotStep {
            index: p,
            value: Rational::new(app.clone(), &prev * &scale)?,
        });
        for (x, &i) in active.iter().enumerate() {
            let api = a[at(p, i)].clone();
            for &j in &active[x..] {
                let idx = at(i, j);
                let num = &app * &a[idx] - &api * &a[at(p, j)];
                a[idx] = num / &prev;
            }
        }
        prev = app;
        eliminated.push(p);
    }
    let rank = pivots.iter().filter(|s| !s.value.is_zero()).count();
    Ok(PsdCertificate::Psd { rule, pivots, rank })
}

/// Lifts a Schur-complement vector `y` (supported off `eliminated`) to a
/// full vector `v` with `vᵀ M v = yᵀ S y`, by solving
/// `M[P,P] x_P = -M[P,·] y` on the positive-pivot set `P`.
fn refute(
    m: &DenseRationalMatrix,
    rule: PivotRule,
    eliminated: &[usize],
    mut y: Vec<Rational>,
    obstruction: Obstruction,
) -> Result<PsdCertificate> {
    if !eliminated.is_empty() {
        let rows: Vec<Vec<Rational>> = eliminated
            .iter()
            .map(|&p| eliminated.iter().map(|&q| m.get(p, q).clone()).collect())
            .collect();
        let rhs: Vec<Rational> = eliminated
            .iter()
            .map(|&p| {
                -m.row(p)
                    .iter()
                    .zip(&y)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum::<Rational>()
            })
            .collect();
        let x = solve(&rows, &rhs)?.ok_or_else(|| {
            Error::Invariant("eliminated principal block is singular".into())
        })?;
        for (&p, v) in eliminated.iter().zip(x) {
            y[p] = v;
        }
    }
    let value = m.quadratic_form(&y)?;
    if !value.is_negative() {
        return Err(Error::Invariant(format!(
            "refutation vector has nonnegative quadratic form {value}"
        )));
    }
    Ok(PsdCertificate::NotPsd {
        rule,
        obstruction,
        witness: y,
        value,
    })
}

fn lcm_of_denoms<'a>(xs: impl Iterator<Item = &'a Rational>) -> BigInt {
    xs.fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// Solves a square rational system; `None` when singular.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational]) -> Result<Option<Vec<Rational>>> {
    let n = rows.len();
    if rhs.len() != n || rows.iter().any(|r| r.len() != n) {
        return domain("solve needs a square system with matching right-hand side");
    }
    // Integer augmented matrix, each row scaled by its own lcm.
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let l = lcm_of_denoms(r.iter().chain(std::iter::once(b)));
            r.iter()
                .chain(std::iter::once(b))
                .map(|x| x.numer() * (&l / x.denom()))
                .collect()
        })
        .collect();
    let mut prev = BigInt::one();
    for s in 0..n {
        let Some(p) = (s..n).find(|&i| !a[i][s].is_zero()) else {
            return Ok(None);
        };
        a.swap(s, p);
        for i in s + 1..n {
            for j in s + 1..=n {
                let v = (&a[s][s] * &a[i][j] - &a[i][s] * &a[s][j]) / &prev;
                a[i][j] = v;
            }
            a[i][s] = BigInt::zero();
        }
        prev = a[s][s].clone();
    }
    let mut x = vec![Rational::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rational::from_integer(a[i][n].clone());
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                acc -= Rational::from_integer(a[i][j].clone()) * &x[j];
            }
        }
        x[i] = acc.checked_div(&Rational::from_integer(a[i][i].clone()))?;
    }
    Ok(Some(x))
}

/// Rank over the rationals (any square matrix).
pub fn exact_rank(m: &DenseRationalMatrix) -> Result<usize> {
    exact_rank_capped(m, DEFAULT_SPECTRAL_CAP)
}

pub fn exact_rank_capped(m: &DenseRationalMatrix, cap: u64) -> Result<usize> {
    let n = m.dim();
    check_cap("exact_rank", n, cap)?;
    let (flat, _) = integer_scaled(m);
    let mut a: Vec<Vec<BigInt>> = flat.chunks(n.max(1)).map(|r| r.to_vec()).collect();
    a.truncate(n);
    let mut cols: Vec<usize> = (0..n).collect();
    let mut prev = BigInt::one();
    let mut rank = 0;
    for s in 0..n {
        let found = (s..n).find_map(|i| {
            cols[s..]
                .iter()
                .position(|&c| !a[i][c].is_zero())
                .map(|off| (i, s + off))
        });
        let Some((pr, pc)) = found else { break };
        a.swap(s, pr);
        cols.swap(s, pc);
        let cs = cols[s];
        for i in s + 1..n {
            let ais = a[i][cs].clone();
            for &c in &cols[s + 1..] {
                let v = (&a[s][cs] * &a[i][c] - &ais * &a[s][c]) / &prev;
                a[i][c] = v;
            }
            a[i][cs] = BigInt::zero();
        }
        prev = a[s][cs].clone();
        rank += 1;
    }
    Ok(rank)
}

/// A basis of the right kernel, one vector per free column of the reduced
/// row echelon form.
pub fn kernel_basis(m: &DenseRationalMatrix, cap: u64) -> Result<Vec<Vec<Rational>>> {
    let n = m.dim();
    check_cap("kernel_basis", n, cap)?;
    let mut a: Vec<Vec<Rational>> = (0..n).map(|u| m.row(u).to_vec()).collect();
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip()?;
        for x in a[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let (pivot_row, row) = if i < r {
                    let (lo, hi) = a.split_at_mut(r);
                    (&hi[0], &mut lo[i])
                } else {
                    let (lo, hi) = a.split_at_mut(i);
                    (&lo[r], &mut hi[0])
                };
                for (x, y) in row.iter_mut().zip(pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivot_cols.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivot_cols.contains(c)).collect();
    Ok(free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -a[row][f].clone();
            }
            v
        })
        .collect())
}

/// The common row sum; the all-ones vector is then an eigenvector.
pub fn row_sum_eigenvalue(m: &DenseRationalMatrix) -> Result<Rational> {
    if m.dim() == 0 {
        return Ok(Rational::zero());
    }
    let first = m.row_sum(0);
    for u in 1..m.dim() {
        let s = m.row_sum(u);
        if s != first {
            return domain(format!("row sums differ: row 0 sums to {first}, row {u} to {s}"));
        }
    }
    Ok(first)
}

/// `(-λ_n / (λ₁ - λ_n))·N`.
pub fn hoffman_bound(lambda1: &Rational, lambdan: &Rational, vertices: u64) -> Result<Rational> {
    if !lambdan.is_negative() {
        return domain(format!("Hoffman bound needs λ_n < 0, got {lambdan}"));
    }
    if lambda1 <= lambdan {
        return domain(format!("Hoffman bound needs λ₁ > λ_n, got {lambda1} <= {lambdan}"));
    }
    let ratio = (-lambdan).checked_div(&(lambda1 - lambdan))?;
    Ok(ratio * Rational::from(vertices))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectralCertificate {
    pub params: SchemeParams,
    pub matrix: Construction,
    pub dimension: usize,
    pub row_sum_eigenvalue: Rational,
    /// Certificate for `M + I`.
    pub shifted_psd: PsdCertificate,
    pub shifted_rank: usize,
    pub lambda_min_certified: Option<Rational>,
    /// Certificate for `λ₁·I - M`.
    pub upper_psd: PsdCertificate,
    pub lambda_max_certified: Option<Rational>,
    pub hoffman_bound: Option<Rational>,
}

impl SpectralCertificate {
    pub fn both_certified(&self) -> bool {
        self.lambda_min_certified.is_some() && self.lambda_max_certified.is_some()
    }
}

/// Certifies `λ_min = -1` and `λ_max = row sum` for a pseudoadjacency
/// matrix and, when both hold, the Hoffman bound.
pub fn certify_extremes(descriptor: &PseudoadjacencyDescriptor, cap: u64) -> Result<SpectralCertificate> {
    let scheme = descriptor.params.scheme()?;
    scheme.check_cap("certify_extremes", cap)?;
    let m = descriptor.materialize(cap)?;
    let n = m.dim();
    let lambda1 = row_sum_eigenvalue(&m)?;
    let minus_one = -Rational::one();

    let shifted = m.shifted(&Rational::one());
    let shifted_psd = psd_certify_with(&shifted, cap, PivotRule::LargestDiagonal)?;
    let shifted_rank = exact_rank_capped(&shifted, cap)?;
    let lambda_min_certified = (shifted_psd.is_psd() && shifted_rank < n).then(|| minus_one.clone());

    let upper = m.reflected(&lambda1);
    let upper_psd = psd_certify_with(&upper, cap, PivotRule::LargestDiagonal)?;
    let lambda_max_certified = upper_psd.is_psd().then(|| lambda1.clone());

    let hoffman_bound = match (&lambda_max_certified, &lambda_min_certified) {
        (Some(l1), Some(ln)) => Some(hoffman_bound(l1, ln, n as u64)?),
        _ => None,
    };
    Ok(SpectralCertificate {
        params: descriptor.params,
        matrix: descriptor.label,
        dimension: n,
        row_sum_eigenvalue: lambda1,
        shifted_psd,
        shifted_rank,
        lambda_min_certified,
        upper_psd,
        lambda_max_certified,
        hoffman_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational;
    use crate::pseudoadjacency::wilson_descriptor;

    fn q(a: i64, b: i64) -> Rational {
        rational(a, b).unwrap()
    }

    fn mat(rows: &[&[i64]]) -> DenseRationalMatrix {
        DenseRationalMatrix::from_i64_rows(rows).unwrap()
    }

    fn wilson(n: u32, k: u32, t: u32) -> DenseRationalMatrix {
        wilson_descriptor(SchemeParams::new(n, k, t).unwrap())
            .unwrap()
            .materialize(1000)
            .unwrap()
    }

    #[test]
    fn psd_examples() {
        let c = psd_certify(&DenseRationalMatrix::identity(5)).unwrap();
        assert!(c.is_psd());
        assert_eq!(c.rank(), Some(5));

        let c = psd_certify(&DenseRationalMatrix::ones(6)).unwrap();
        assert_eq!(c.rank(), Some(1));
        if let PsdCertificate::Psd { pivots, .. } = &c {
            assert_eq!(pivots.len(), 6);
            assert_eq!(pivots.iter().filter(|p| p.value.is_zero()).count(), 5);
        }

        let m = mat(&[&[1, 0], &[0, -1]]);
        match psd_certify(&m).unwrap() {
            PsdCertificate::NotPsd { witness, value, .. } => {
                assert_eq!(witness, vec![q(0, 1), q(1, 1)]);
                assert_eq!(value, -1);
            }
            other => panic!("expected refutation, got {other:?}"),
        }
    }

    #[test]
    fn zero_pivot_with_nonzero_row() {
        let m = mat(&[&[0, 1], &[1, 0]]);
        let c = psd_certify(&m).unwrap();
        assert!(matches!(
            c,
            PsdCertificate::NotPsd { obstruction: Obstruction::ZeroPivotNonzeroRow { .. }, .. }
        ));
        assert!(c.recheck(&m).unwrap());

        // Hidden behind an eliminated pivot: [[1,1,1],[1,1,2],[1,2,1]].
        let m = mat(&[&[1, 1, 1], &[1, 1, 2], &[1, 2, 1]]);
        let c = psd_certify_with(&m, 10, PivotRule::FirstIndex).unwrap();
        assert!(!c.is_psd());
        assert!(c.recheck(&m).unwrap());
    }

    #[test]
    fn asymmetric_rejected() {
        let m = mat(&[&[1, 2], &[0, 1]]);
        assert!(matches!(psd_certify(&m), Err(Error::Domain(_))));
    }

    #[test]
    fn pivot_values_are_ldl_pivots() {
        // [[4,2],[2,3]] = L D Lᵀ with D = (4, 2).
        let m = mat(&[&[4, 2], &[2, 3]]);
        match psd_certify(&m).unwrap() {
            PsdCertificate::Psd { pivots, rank, .. } => {
                assert_eq!(rank, 2);
                assert_eq!(pivots[0], PivotStep { index: 0, value: q(4, 1) });
                assert_eq!(pivots[1], PivotStep { index: 1, value: q(2, 1) });
            }
            other => panic!("{other:?}"),
        }
        // Same with rational entries: scale by 1/6.
        let m6 = m.scaled(&q(1, 6));
        match psd_certify(&m6).unwrap() {
            PsdCertificate::Psd { pivots, .. } => {
                assert_eq!(pivots[0].value, q(2, 3));
                assert_eq!(pivots[1].value, q(1, 3));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rank_examples() {
        assert_eq!(exact_rank(&DenseRationalMatrix::identity(7)).unwrap(), 7);
        assert_eq!(exact_rank(&DenseRationalMatrix::ones(7)).unwrap(), 1);
        assert_eq!(exact_rank(&DenseRationalMatrix::zeros(3)).unwrap(), 0);
        assert_eq!(exact_rank(&mat(&[&[0, 1], &[0, 0]])).unwrap(), 1);
        let shifted = wilson(7, 3, 2).shifted(&Rational::one());
        assert_eq!(exact_rank(&shifted).unwrap(), 15);
    }

    #[test]
    fn kernel_dimension_matches_rank() {
        let shifted = wilson(7, 3, 2).shifted(&Rational::one());
        let kernel = kernel_basis(&shifted, 100).unwrap();
        assert_eq!(kernel.len(), 20);
        for v in &kernel {
            assert!(shifted.mul_vec(v).unwrap().iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn solve_small_system() {
        let rows = vec![vec![q(2, 1), q(1, 1)], vec![q(1, 1), q(3, 1)]];
        let x = solve(&rows, &[q(3, 1), q(5, 2)]).unwrap().unwrap();
        assert_eq!(x, vec![q(13, 10), q(2, 5)]);
        let singular = vec![vec![q(1, 1), q(2, 1)], vec![q(2, 1), q(4, 1)]];
        assert!(solve(&singular, &[q(1, 1), q(1, 1)]).unwrap().is_none());
    }

    #[test]
    fn row_sum_examples() {
        assert_eq!(row_sum_eigenvalue(&wilson(7, 3, 2)).unwrap(), 6);
        assert_eq!(row_sum_eigenvalue(&wilson(9, 4, 2)).unwrap(), 5);
        assert_eq!(row_sum_eigenvalue(&DenseRationalMatrix::zeros(4)).unwrap(), 0);
        let err = row_sum_eigenvalue(&mat(&[&[1, 0], &[0, 2]])).unwrap_err();
        assert!(err.to_string().contains("row 1"));
    }

    #[test]
    fn hoffman_examples() {
        assert_eq!(hoffman_bound(&q(6, 1), &q(-1, 1), 35).unwrap(), 5);
        assert_eq!(hoffman_bound(&q(5, 1), &q(-1, 1), 126).unwrap(), 21);
        assert_eq!(hoffman_bound(&q(1, 1), &q(-1, 1), 10).unwrap(), 5);
        assert!(hoffman_bound(&q(1, 1), &q(0, 1), 10).is_err());
        assert!(hoffman_bound(&q(-2, 1), &q(-1, 1), 10).is_err());
    }

    #[test]
    fn certify_7_3_2() {
        let d = wilson_descriptor(SchemeParams::new(7, 3, 2).unwrap()).unwrap();
        let c = certify_extremes(&d, DEFAULT_SPECTRAL_CAP).unwrap();
        assert_eq!(c.lambda_max_certified, Some(q(6, 1)));
        assert_eq!(c.lambda_min_certified, Some(q(-1, 1)));
        assert_eq!(c.hoffman_bound, Some(q(5, 1)));
        assert_eq!(c.shifted_rank, 15);
    }

    #[test]
    fn certify_cap() {
        let d = wilson_descriptor(SchemeParams::new(20, 10, 2).unwrap()).unwrap();
        assert!(matches!(
            certify_extremes(&d, DEFAULT_SPECTRAL_CAP),
            Err(Error::Resource { .. })
        ));
    }
}
