//! t-intersecting families of k-subsets, the two registered Steiner systems,
//! and an exact branch-and-bound oracle for α(G(n,k,t)).

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::exact::Rational;
use crate::pseudoadjacency::a_vector;
use crate::scheme::{JohnsonScheme, SchemeParams, Subset, MAX_GROUND_SIZE};

/// Default vertex cap for [`brute_alpha`].
pub const DEFAULT_BRUTE_CAP: u64 = 40;

/// An ordered, duplicate-free list of k-subsets of `[n]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetFamily {
    n: u32,
    k: u32,
    blocks: Vec<Subset>,
}

impl SetFamily {
    pub fn new(n: u32, k: u32, blocks: Vec<Subset>) -> Result<Self> {
        if n > MAX_GROUND_SIZE {
            return domain(format!("ground set size {n} exceeds {MAX_GROUND_SIZE}"));
        }
        let mut seen = HashSet::with_capacity(blocks.len());
        for &b in &blocks {
            if b.len() != k || b.max_point() > n {
                return domain(format!("block {b} is not a {k}-subset of [{n}]"));
            }
            if !seen.insert(b) {
                return domain(format!("block {b} repeated"));
            }
        }
        Ok(SetFamily { n, k, blocks })
    }

    /// From 1-based point lists.
    pub fn from_points(n: u32, k: u32, blocks: &[&[u32]]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| Subset::from_points(b))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, k, blocks)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn blocks(&self) -> &[Subset] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Every two distinct blocks share at least `t` points.
    pub fn is_t_intersecting(&self, t: u32) -> bool {
        self.blocks.iter().enumerate().all(|(i, &f)| {
            self.blocks[i + 1..]
                .iter()
                .all(|&g| f.intersection_size(g) >= t)
        })
    }
}

/// All k-subsets containing `{1, …, t}`, in colex order.
pub fn star_family(params: SchemeParams) -> Result<SetFamily> {
    let scheme = params.scheme()?;
    let core = Subset::from_bits((1u64 << params.t) - 1);
    let blocks = scheme
        .vertices()
        .into_iter()
        .filter(|f| f.is_superset_of(core))
        .collect();
    SetFamily::new(params.n, params.k, blocks)
}

/// Fixed-width bitset over vertex indices.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn empty(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }

    fn full(len: usize) -> Self {
        let mut b = Self::empty(len);
        for v in 0..len {
            b.insert(v);
        }
        b
    }

    fn insert(&mut self, v: usize) {
        self.0[v / 64] |= 1 << (v % 64);
    }

    fn remove(&mut self, v: usize) {
        self.0[v / 64] &= !(1 << (v % 64));
    }

    fn contains(&self, v: usize) -> bool {
        self.0[v / 64] & (1 << (v % 64)) != 0
    }

    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn first(&self) -> Option<usize> {
        self.0
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn and_not(&mut self, other: &Bits) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a &= !b;
        }
    }

    /// Keeps only indices strictly above `v`.
    fn above(&self, v: usize) -> Bits {
        let mut out = self.clone();
        for (w, word) in out.0.iter_mut().enumerate() {
            let lo = w * 64;
            if lo + 64 <= v + 1 {
                *word = 0;
            } else if lo <= v {
                let keep = (v - lo) + 1;
                *word &= !((1u64 << keep) - 1);
            }
        }
        out
    }
}

/// Maximum clique search with a greedy-colouring bound.
struct CliqueSearch<'a> {
    adj: &'a [Bits],
    best: Vec<usize>,
    current: Vec<usize>,
}

impl<'a> CliqueSearch<'a> {
    /// A largest clique inside `cand`, if one is larger than `floor`.
    fn run(adj: &'a [Bits], cand: &Bits, floor: usize) -> Option<Vec<usize>> {
        let mut s = CliqueSearch {
            adj,
            best: Vec::new(),
            current: Vec::new(),
        };
        s.expand(cand.clone(), floor);
        if s.best.len() > floor {
            Some(s.best)
        } else {
            None
        }
    }

    fn colour_bounds(&self, cand: &Bits) -> Vec<(usize, usize)> {
        // Sequential greedy colouring; returns (vertex, colour) ordered by colour.
        let mut uncoloured = cand.clone();
        let mut order = Vec::with_capacity(cand.count());
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut q = uncoloured.clone();
            while let Some(v) = q.first() {
                q.remove(v);
                q.and_not(&self.adj[v]);
                uncoloured.remove(v);
                order.push((v, colour));
            }
        }
        order
    }

    fn expand(&mut self, mut cand: Bits, floor: usize) {
        let order = self.colour_bounds(&cand);
        for &(v, colour) in order.iter().rev() {
            let best = self.best.len().max(floor);
            if self.current.len() + colour <= best {
                return;
            }
            self.current.push(v);
            let next = cand.and(&self.adj[v]);
            if next.is_empty() {
                if self.current.len() > best {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next, floor);
            }
            self.current.pop();
            cand.remove(v);
        }
    }
}

/// Outcome of the exhaustive independence-number search.
#[derive(Clone, Debug)]
pub struct AlphaResult {
    pub params: SchemeParams,
    pub alpha: usize,
    /// Lexicographically smallest maximum family by rank sequence.
    pub witness: SetFamily,
}

/// α(G(n,k,t)): the largest t-intersecting family of k-subsets of `[n]`.
///
/// Works on the complement graph (pairs meeting in at least `t` points) as a
/// maximum clique problem. The witness is the smallest maximum family in
/// lexicographic order of sorted colex ranks, independent of search order.
pub fn brute_alpha(params: SchemeParams, cap: u64) -> Result<AlphaResult> {
    let scheme = params.scheme()?;
    if scheme.vertex_count() > cap {
        return Err(Error::Resource {
            what: format!(
                "brute-force alpha on G{params} (use the spectral Hoffman bound instead)"
            ),
            required: scheme.vertex_count(),
            cap,
        });
    }
    let verts = scheme.vertices();
    let nv = verts.len();
    let adj: Vec<Bits> = (0..nv)
        .map(|u| {
            let mut b = Bits::empty(nv);
            for v in 0..nv {
                if u != v && verts[u].intersection_size(verts[v]) >= params.t {
                    b.insert(v);
                }
            }
            b
        })
        .collect();
    let all = Bits::full(nv);
    let alpha = CliqueSearch::run(&adj, &all, 0).map_or(0, |c| c.len());

    let mut chosen = Vec::with_capacity(alpha);
    let mut cand = all;
    for v in 0..nv {
        if chosen.len() == alpha {
            break;
        }
        if !cand.contains(v) {
            continue;
        }
        let need = alpha - chosen.len() - 1;
        let rest = cand.and(&adj[v]).above(v);
        let feasible = need == 0 || CliqueSearch::run(&adj, &rest, need - 1).is_some();
        if feasible {
            chosen.push(v);
            cand = rest;
        } else {
            cand.remove(v);
        }
    }
    debug_assert_eq!(chosen.len(), alpha);
    let witness = SetFamily::new(params.n, params.k, chosen.iter().map(|&v| verts[v]).collect())?;
    Ok(AlphaResult {
        params,
        alpha,
        witness,
    })
}

/// A registered `t-(n,k,1)` Steiner system.
#[derive(Clone, Debug)]
pub struct DesignRecord {
    pub name: String,
    pub t: u32,
    pub n: u32,
    pub k: u32,
    pub family: SetFamily,
}

impl DesignRecord {
    /// Checks that every t-subset of `[n]` lies in exactly one block.
    pub fn new(name: &str, t: u32, family: SetFamily) -> Result<Self> {
        let (n, k) = (family.n(), family.k());
        if t == 0 || t > k {
            return domain(format!("design strength t = {t} must lie in 1..={k}"));
        }
        let tsets = JohnsonScheme::new(n, t)?.vertices();
        for s in tsets {
            let hits = family
                .blocks()
                .iter()
                .filter(|b| b.is_superset_of(s))
                .count();
            if hits != 1 {
                return domain(format!(
                    "{name}: {t}-subset {s} lies in {hits} blocks, expected exactly 1"
                ));
            }
        }
        Ok(DesignRecord {
            name: name.to_string(),
            t,
            n,
            k,
            family,
        })
    }

    pub fn params(&self) -> Result<SchemeParams> {
        SchemeParams::new(self.n, self.k, self.t)
    }
}

pub const DESIGN_NAMES: [&str; 2] = ["fano", "sts9"];

/// `fano` (2-(7,3,1)) or `sts9` (2-(9,3,1), the lines of AG(2,3)).
pub fn design_registry(name: &str) -> Result<DesignRecord> {
    let family = match name {
        "fano" => SetFamily::from_points(
            7,
            3,
            &[
                &[1, 2, 3],
                &[1, 4, 5],
                &[1, 6, 7],
                &[2, 4, 6],
                &[2, 5, 7],
                &[3, 4, 7],
                &[3, 5, 6],
            ],
        )?,
        "sts9" => SetFamily::from_points(
            9,
            3,
            &[
                &[1, 2, 3],
                &[4, 5, 6],
                &[7, 8, 9],
                &[1, 4, 7],
                &[2, 5, 8],
                &[3, 6, 9],
                &[1, 5, 9],
                &[2, 6, 7],
                &[3, 4, 8],
                &[1, 6, 8],
                &[2, 4, 9],
                &[3, 5, 7],
            ],
        )?,
        other => {
            return domain(format!(
                "unknown design {other:?}; known: {}",
                DESIGN_NAMES.join(", ")
            ))
        }
    };
    DesignRecord::new(name, 2, family)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyRow {
    pub i: u32,
    /// Distance index `k - i`.
    pub index: u32,
    pub a: Rational,
    pub e: Rational,
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub design: String,
    pub params: SchemeParams,
    pub inner_distribution: Vec<Rational>,
    pub rows: Vec<ConsistencyRow>,
    pub all_match: bool,
}

/// Compares the closed-form a-vector with the measured inner distribution
/// of the design, for indices `k - i`, `i = 0..t`.
pub fn design_consistency_check(record: &DesignRecord) -> Result<ConsistencyReport> {
    let params = record.params()?;
    let e = params.scheme()?.inner_distribution(&record.family)?;
    let a = a_vector(params)?;
    let rows: Vec<ConsistencyRow> = (0..params.t)
        .map(|i| {
            let index = params.k - i;
            let av = a.get(i).clone();
            let ev = e.get(index).cloned().unwrap_or_default();
            ConsistencyRow {
                i,
                index,
                matches: av == ev,
                a: av,
                e: ev,
            }
        })
        .collect();
    Ok(ConsistencyReport {
        design: record.name.clone(),
        params,
        all_match: rows.iter().all(|r| r.matches),
        inner_distribution: e.e,
        rows,
    })
}
