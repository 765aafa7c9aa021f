//! The Johnson scheme J(n,k).
//!
//! Vertices are the k-subsets of [n], ranked in colexicographic order (which
//! coincides with numeric order of the characteristic bitmask). Two bases of
//! the Bose–Mesner algebra are supported:
//!
//! * the distance basis, `(A_i)_{F,F'} = 1` iff `|F ∩ F'| = k - i`;
//! * the inclusion basis, `(D_r)_{F,F'} = C(k - |F ∩ F'|, r)`.
//!
//! Every matrix in the algebra has an entry that depends only on the distance
//! `m = k - |F ∩ F'|`, so a [`BasisVector`] is materialized by evaluating its
//! distance profile once and filling pairs from a lookup table.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::exact::{binomial, binomial_int, Rational};
use crate::families::SetFamily;
use crate::matrix::DenseRationalMatrix;

/// Default cap on the vertex count of a materialized matrix.
pub const DEFAULT_MATERIALIZE_CAP: u64 = 1000;

/// Subsets are bitmasks, so the ground set is limited to 64 points.
pub const MAX_GROUND_SIZE: u32 = 64;

/// A validated triple `(n, k, t)` fixing J(n,k) and the graph G(n,k,t).
///
/// Requires `0 < t < k < n` and `n >= 2k`; below `2k` the denominators
/// `C(n-k-t+i, k-t)` of Wilson's matrix vanish.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SchemeParams {
    pub n: u32,
    pub k: u32,
    pub t: u32,
}

impl SchemeParams {
    pub fn new(n: u32, k: u32, t: u32) -> Result<Self> {
        if !(0 < t && t < k && k < n) {
            return domain(format!("need 0 < t < k < n, got (n,k,t) = ({n},{k},{t})"));
        }
        if (n as u64) < 2 * k as u64 {
            return domain(format!("need n >= 2k, got n = {n}, k = {k}"));
        }
        Ok(SchemeParams { n, k, t })
    }

    /// `C(n, k)`, the number of vertices of G(n,k,t).
    pub fn vertex_count(&self) -> BigInt {
        binomial_int(self.n as i64, self.k as i64).expect("n is nonnegative")
    }

    /// `(t+1)(k-t+1)`, the smallest `n` covered by the EKR theorem.
    pub fn ekr_threshold(&self) -> u64 {
        (self.t as u64 + 1) * (self.k as u64 - self.t as u64 + 1)
    }

    pub fn in_ekr_range(&self) -> bool {
        self.n as u64 >= self.ekr_threshold()
    }

    /// `C(n-t, k-t)`, the size of the star and the EKR bound.
    pub fn ekr_bound(&self) -> BigInt {
        binomial_int((self.n - self.t) as i64, (self.k - self.t) as i64).expect("n > t")
    }

    pub fn scheme(&self) -> Result<JohnsonScheme> {
        JohnsonScheme::new(self.n, self.k)
    }

    /// All valid triples with `k <= k_max` and `n <= n_max`, ordered by `(n, k, t)`.
    pub fn grid(n_max: u32, k_max: u32) -> Vec<SchemeParams> {
        let mut out = Vec::new();
        for n in 1..=n_max {
            for k in 2..=k_max.min(n / 2) {
                for t in 1..k {
                    out.push(SchemeParams { n, k, t });
                }
            }
        }
        out
    }
}

impl fmt::Display for SchemeParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.n, self.k, self.t)
    }
}

/// A subset of `[n]` as a bitmask; bit `j` stands for the point `j + 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Subset(u64);

impl Subset {
    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    /// From 1-based points. Duplicates and points outside `1..=64` are rejected.
    pub fn from_points(points: &[u32]) -> Result<Self> {
        let mut bits = 0u64;
        for &p in points {
            if p == 0 || p > MAX_GROUND_SIZE {
                return domain(format!("point {p} outside 1..={MAX_GROUND_SIZE}"));
            }
            let b = 1u64 << (p - 1);
            if bits & b != 0 {
                return domain(format!("point {p} repeated"));
            }
            bits |= b;
        }
        Ok(Subset(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, point: u32) -> bool {
        (1..=MAX_GROUND_SIZE).contains(&point) && self.0 & (1 << (point - 1)) != 0
    }

    pub fn is_superset_of(self, other: Subset) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn intersection_size(self, other: Subset) -> u32 {
        (self.0 & other.0).count_ones()
    }

    /// Largest point, or 0 for the empty set.
    pub fn max_point(self) -> u32 {
        64 - self.0.leading_zeros()
    }

    /// 1-based points in increasing order.
    pub fn points(self) -> impl Iterator<Item = u32> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let p = bits.trailing_zeros();
                bits &= bits - 1;
                Some(p + 1)
            }
        })
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.points()).finish()
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pts: Vec<String> = self.points().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", pts.join(","))
    }
}

fn binom_u64(m: u32, r: u32) -> u64 {
    if r > m {
        return 0;
    }
    let r = r.min(m - r);
    let mut acc: u128 = 1;
    for j in 0..r {
        acc = acc * (m - j) as u128 / (j + 1) as u128;
    }
    acc as u64
}

/// J(n,k) with `1 <= k <= n <= 64`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JohnsonScheme {
    n: u32,
    k: u32,
}

impl From<SchemeParams> for JohnsonScheme {
    fn from(p: SchemeParams) -> Self {
        JohnsonScheme { n: p.n, k: p.k }
    }
}

impl JohnsonScheme {
    pub fn new(n: u32, k: u32) -> Result<Self> {
        if k == 0 || k > n {
            return domain(format!("J(n,k) needs 1 <= k <= n, got n = {n}, k = {k}"));
        }
        if n > MAX_GROUND_SIZE {
            return domain(format!("ground set size {n} exceeds {MAX_GROUND_SIZE}"));
        }
        Ok(JohnsonScheme { n, k })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn vertex_count(&self) -> u64 {
        binom_u64(self.n, self.k)
    }

    pub fn check_cap(&self, what: &str, cap: u64) -> Result<()> {
        let required = self.vertex_count();
        if required > cap {
            return Err(Error::Resource {
                what: format!("{what} on J({},{})", self.n, self.k),
                required,
                cap,
            });
        }
        Ok(())
    }

    fn check_member(&self, f: Subset) -> Result<()> {
        if f.len() != self.k || f.max_point() > self.n {
            return domain(format!("{f} is not a {}-subset of [{}]", self.k, self.n));
        }
        Ok(())
    }

    /// Colex rank: `Σ_j C(c_j, j)` over the 0-based points `c_1 < … < c_k`.
    pub fn rank(&self, f: Subset) -> Result<u64> {
        self.check_member(f)?;
        Ok(f
            .points()
            .enumerate()
            .map(|(j, p)| binom_u64(p - 1, j as u32 + 1))
            .sum())
    }

    pub fn unrank(&self, rank: u64) -> Result<Subset> {
        if rank >= self.vertex_count() {
            return domain(format!(
                "rank {rank} outside [0, {}) for J({},{})",
                self.vertex_count(),
                self.n,
                self.k
            ));
        }
        let mut rest = rank;
        let mut bits = 0u64;
        let mut c = self.n;
        for j in (1..=self.k).rev() {
            // largest c with C(c, j) <= rest
            c -= 1;
            while binom_u64(c, j) > rest {
                c -= 1;
            }
            rest -= binom_u64(c, j);
            bits |= 1 << c;
        }
        Ok(Subset(bits))
    }

    /// All vertices in rank order.
    pub fn vertices(&self) -> Vec<Subset> {
        let k = self.k;
        let limit = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        let mut out = Vec::with_capacity(self.vertex_count() as usize);
        let mut x: u64 = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
        loop {
            out.push(Subset(x));
            // Gosper's hack: next larger integer with the same popcount.
            let c = x & x.wrapping_neg();
            let r = x.wrapping_add(c);
            if r == 0 || r > limit {
                break;
            }
            let next = (((r ^ x) >> 2) / c) | r;
            if next > limit {
                break;
            }
            x = next;
        }
        out
    }

    /// Distance `k - |F ∩ F'|`.
    pub fn distance(&self, f: Subset, g: Subset) -> u32 {
        self.k - f.intersection_size(g)
    }

    /// Dense matrix whose `(F, F')` entry is `profile[distance(F, F')]`.
    pub fn matrix_from_profile(&self, profile: &[Rational], cap: u64) -> Result<DenseRationalMatrix> {
        self.check_cap("materialize", cap)?;
        if profile.len() != self.k as usize + 1 {
            return Err(Error::Invariant(format!(
                "distance profile has {} entries, expected {}",
                profile.len(),
                self.k + 1
            )));
        }
        let verts = self.vertices();
        Ok(DenseRationalMatrix::from_fn(verts.len(), |u, v| {
            profile[self.distance(verts[u], verts[v]) as usize].clone()
        }))
    }

    fn check_index(&self, what: &str, i: u32) -> Result<()> {
        if i > self.k {
            return domain(format!("{what} index {i} outside [0, {}]", self.k));
        }
        Ok(())
    }

    /// `A_i`: 1 where `|F ∩ F'| = k - i`.
    pub fn build_a(&self, i: u32, cap: u64) -> Result<DenseRationalMatrix> {
        self.check_index("A", i)?;
        self.check_cap("build_A", cap)?;
        let verts = self.vertices();
        Ok(DenseRationalMatrix::from_fn(verts.len(), |u, v| {
            if verts[u].intersection_size(verts[v]) + i == self.k {
                Rational::one()
            } else {
                Rational::zero()
            }
        }))
    }

    /// `D_r`: entry `C(|α \ β|, r)`.
    pub fn build_d(&self, r: u32, cap: u64) -> Result<DenseRationalMatrix> {
        self.check_index("D", r)?;
        self.check_cap("build_D", cap)?;
        let verts = self.vertices();
        Ok(DenseRationalMatrix::from_fn(verts.len(), |u, v| {
            let diff = (verts[u].bits() & !verts[v].bits()).count_ones();
            binomial(diff as i64, r as i64).expect("nonnegative top")
        }))
    }

    /// `Σ_m vec[m] · (basis matrix m)`.
    pub fn materialize(&self, vec: &BasisVector) -> Result<DenseRationalMatrix> {
        self.materialize_capped(vec, DEFAULT_MATERIALIZE_CAP)
    }

    pub fn materialize_capped(&self, vec: &BasisVector, cap: u64) -> Result<DenseRationalMatrix> {
        if vec.k() != self.k {
            return domain(format!("basis vector for k = {} used on J({},{})", vec.k(), self.n, self.k));
        }
        self.matrix_from_profile(&vec.distance_profile(), cap)
    }

    /// Inner distribution of a nonempty family: `e_i` is the number of
    /// ordered pairs at distance `i`, divided by `|Y|`.
    pub fn inner_distribution(&self, family: &SetFamily) -> Result<InnerDistribution> {
        if family.n() != self.n || family.k() != self.k {
            return domain(format!(
                "family over ({}, {}) used on J({},{})",
                family.n(),
                family.k(),
                self.n,
                self.k
            ));
        }
        if family.is_empty() {
            return domain("inner distribution of an empty family");
        }
        let blocks = family.blocks();
        for &b in blocks {
            self.check_member(b)?;
        }
        let mut counts = vec![0u64; self.k as usize + 1];
        for &f in blocks {
            for &g in blocks {
                counts[self.distance(f, g) as usize] += 1;
            }
        }
        let size = Rational::from(blocks.len());
        let e = counts
            .into_iter()
            .map(|c| Rational::from(c).checked_div(&size))
            .collect::<Result<Vec<_>>>()?;
        Ok(InnerDistribution { e })
    }
}

/// Which basis of the Bose–Mesner algebra a coefficient vector refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Basis {
    /// Distance matrices `A_i`.
    A,
    /// Inclusion matrices `D_r`.
    D,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Basis::A => "A",
            Basis::D => "D",
        })
    }
}

/// Sparse coefficients over `A_0..A_k` or `D_0..D_k`; missing indices are
/// zero. Equality ignores explicitly stored zeros.
#[derive(Clone, Debug)]
pub struct BasisVector {
    basis: Basis,
    k: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl PartialEq for BasisVector {
    fn eq(&self, other: &Self) -> bool {
        self.basis == other.basis
            && self.k == other.k
            && self.nonzero().eq(other.nonzero())
    }
}

impl Eq for BasisVector {}

impl BasisVector {
    pub fn zero(basis: Basis, k: u32) -> Self {
        BasisVector {
            basis,
            k,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn unit(basis: Basis, k: u32, index: u32) -> Result<Self> {
        let mut v = Self::zero(basis, k);
        v.set(index, Rational::one())?;
        Ok(v)
    }

    pub fn from_pairs(basis: Basis, k: u32, pairs: impl IntoIterator<Item = (u32, Rational)>) -> Result<Self> {
        let mut v = Self::zero(basis, k);
        for (i, c) in pairs {
            v.add_to(i, &c)?;
        }
        Ok(v)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    fn check(&self, index: u32) -> Result<()> {
        if index > self.k {
            return domain(format!("{} index {index} outside [0, {}]", self.basis, self.k));
        }
        Ok(())
    }

    /// Stores `value` at `index`, zeros included.
    pub fn set(&mut self, index: u32, value: Rational) -> Result<()> {
        self.check(index)?;
        self.coeffs.insert(index, value);
        Ok(())
    }

    pub fn add_to(&mut self, index: u32, value: &Rational) -> Result<()> {
        self.check(index)?;
        *self.coeffs.entry(index).or_default() += value;
        Ok(())
    }

    pub fn get(&self, index: u32) -> Rational {
        self.coeffs.get(&index).cloned().unwrap_or_else(Rational::zero)
    }

    /// Stored entries (including explicit zeros) in increasing index order.
    pub fn entries(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn nonzero(&self) -> impl DoubleEndedIterator<Item = (u32, &Rational)> {
        self.entries().filter(|(_, c)| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.nonzero().next().is_none()
    }

    /// Entry of the represented matrix at each distance `m = 0..=k`.
    pub fn distance_profile(&self) -> Vec<Rational> {
        (0..=self.k)
            .map(|m| match self.basis {
                Basis::A => self.get(m),
                Basis::D => self
                    .nonzero()
                    .map(|(r, c)| c * binomial(m as i64, r as i64).expect("nonnegative top"))
                    .sum(),
            })
            .collect()
    }

    /// The same matrix expressed in `target`.
    pub fn convert(&self, target: Basis) -> BasisVector {
        if target == self.basis {
            return self.clone();
        }
        let mut out = BasisVector::zero(target, self.k);
        for (i, c) in self.nonzero() {
            let image = match self.basis {
                Basis::A => a_basis_to_d(i, self.k),
                Basis::D => d_basis_to_a(i, self.k),
            }
            .expect("index already validated");
            for (j, w) in image.entries() {
                out.add_to(j, &(c * w)).expect("index within range");
            }
        }
        out
    }
}

impl fmt::Display for BasisVector {
    /// Highest index first, e.g. `D_3: -1, D_2: 1/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .entries()
            .rev()
            .map(|(i, c)| format!("{}_{}: {}", self.basis, i, c))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `A_i = Σ_{r=i}^{k} (-1)^{r-i} C(r, i) D_r`.
pub fn a_basis_to_d(i: u32, k: u32) -> Result<BasisVector> {
    if i > k {
        return domain(format!("A index {i} outside [0, {k}]"));
    }
    let mut v = BasisVector::zero(Basis::D, k);
    for r in i..=k {
        let c = Rational::sign_power((r - i) as i64) * binomial(r as i64, i as i64)?;
        v.set(r, c)?;
    }
    Ok(v)
}

/// `D_r = Σ_{i=r}^{k} C(i, r) A_i`.
pub fn d_basis_to_a(r: u32, k: u32) -> Result<BasisVector> {
    if r > k {
        return domain(format!("D index {r} outside [0, {k}]"));
    }
    let mut v = BasisVector::zero(Basis::A, k);
    for i in r..=k {
        v.set(i, binomial(i as i64, r as i64)?)?;
    }
    Ok(v)
}

/// Average number of partners at each distance, `e_0 … e_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InnerDistribution {
    pub e: Vec<Rational>,
}

impl InnerDistribution {
    pub fn get(&self, i: u32) -> Option<&Rational> {
        self.e.get(i as usize)
    }

    pub fn total(&self) -> Rational {
        self.e.iter().sum()
    }
}
