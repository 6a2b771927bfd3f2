//! Edge-weighted `r`-path vertex covers of a (truncated) suspension: the
//! cover predicate, minimality, the `γ`-function, associated irreducible
//! ideals, and the `𝒫`-order used to cut a decomposition down to its
//! irredundant core.
//!
//! A weighted cover `(V″, δ″)` assigns positive weights to a vertex subset
//! so that every `r`-path carries at least one vertex whose weight is
//! dominated by the path's exponent at that position. The order on covers
//! is: smaller support with larger weights is *smaller*; covers are upward
//! closed in this order, so minimality is certified by single-step
//! weakenings (delete one vertex, or raise one weight by one).

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::graph::{enumerate_r_paths, Path, SuspVertex, SuspendedGraph};
use crate::monomial::IrreducibleIdeal;
use crate::pathideal::path_exponents;

/// Errors raised by cover operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoverError {
    #[error("the given pair is not an edge-weighted r-path vertex cover")]
    NotACover,
    #[error("base vertex {0} carries more than one cover vertex")]
    MultipleOnWhisker(usize),
}

/// A weighted vertex set `(V″, δ″)`: map from suspension vertices to
/// positive weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct WeightedCover {
    assignment: BTreeMap<SuspVertex, u64>,
}

impl WeightedCover {
    /// The empty pair `(∅, ∅)`.
    pub fn empty() -> Self {
        WeightedCover::default()
    }

    /// Builds a cover candidate from `(vertex, weight)` pairs.
    ///
    /// Panics on zero weights.
    pub fn new<I: IntoIterator<Item = (SuspVertex, u64)>>(pairs: I) -> Self {
        let assignment: BTreeMap<SuspVertex, u64> = pairs.into_iter().collect();
        assert!(
            assignment.values().all(|&w| w > 0),
            "cover weights must be positive"
        );
        WeightedCover { assignment }
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    /// Weight of `v`, or `None` if `v` is outside the support.
    pub fn weight(&self, v: SuspVertex) -> Option<u64> {
        self.assignment.get(&v).copied()
    }

    /// Support `V″` in `(base, level)` order.
    pub fn domain(&self) -> impl Iterator<Item = SuspVertex> + '_ {
        self.assignment.keys().copied()
    }

    pub fn entries(&self) -> impl Iterator<Item = (SuspVertex, u64)> + '_ {
        self.assignment.iter().map(|(&v, &w)| (v, w))
    }

    /// Base indices `q(V″) = { i | v_{i,j} ∈ V″ }`.
    pub fn q_support(&self) -> BTreeSet<usize> {
        self.assignment.keys().map(|v| v.base).collect()
    }

    /// Decorated-set rendering `{v1^2, v2_1^3}` with names from `s`.
    pub fn render(&self, s: &SuspendedGraph) -> String {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(&v, &w)| format!("{}^{}", s.vertex_name(v), w))
            .collect();
        format!("{{{}}}", parts.join(", "))
    }
}

impl fmt::Display for WeightedCover {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .assignment
            .iter()
            .map(|(&v, &w)| format!("{v}^{w}"))
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// `h_{i,j}`: the maximal edge weight among edges incident to each vertex.
/// Isolated vertices (possible only in a bare base graph) have no entry.
pub fn h_values(s: &SuspendedGraph) -> BTreeMap<SuspVertex, u64> {
    let mut out = BTreeMap::new();
    for v in s.vertices() {
        let h = s
            .neighbors(v)
            .into_iter()
            .filter_map(|u| s.edge_weight(v, u))
            .max();
        if let Some(h) = h {
            out.insert(v, h);
        }
    }
    out
}

fn covers_path(c: &WeightedCover, path: &Path, exps: &[u64]) -> bool {
    path.vertices()
        .iter()
        .zip(exps)
        .any(|(&v, &e)| c.weight(v).is_some_and(|w| w <= e))
}

fn covers_all(c: &WeightedCover, paths: &[Path], exps: &[Vec<u64>]) -> bool {
    paths.iter().zip(exps).all(|(p, e)| covers_path(c, p, e))
}

fn paths_with_exponents(s: &SuspendedGraph, r: usize) -> (Vec<Path>, Vec<Vec<u64>>) {
    let paths = enumerate_r_paths(s, r);
    let exps = paths
        .iter()
        .map(|p| path_exponents(p, s).expect("enumerated path is a path"))
        .collect();
    (paths, exps)
}

/// The cover predicate: every `r`-path of `s` has a position `j` whose
/// vertex lies in the cover with weight at most the path exponent `e_j`.
/// Vacuously true when `s` has no `r`-paths.
pub fn is_cover(c: &WeightedCover, s: &SuspendedGraph, r: usize) -> bool {
    let (paths, exps) = paths_with_exponents(s, r);
    covers_all(c, &paths, &exps)
}

fn is_minimal_with(c: &WeightedCover, paths: &[Path], exps: &[Vec<u64>]) -> bool {
    for (v, w) in c.entries() {
        let mut weakened = c.clone();
        weakened.assignment.remove(&v);
        if covers_all(&weakened, paths, exps) {
            return false;
        }
        weakened
            .assignment
            .insert(v, w.checked_add(1).expect("weight overflow"));
        if covers_all(&weakened, paths, exps) {
            return false;
        }
    }
    true
}

/// Minimality test: `c` is minimal iff it is a cover and no single-step
/// weakening (delete one vertex, or raise one weight by one) stays a cover.
/// Upward closure of the cover predicate makes this sound and complete.
pub fn is_minimal_cover(
    c: &WeightedCover,
    s: &SuspendedGraph,
    r: usize,
) -> Result<bool, CoverError> {
    let (paths, exps) = paths_with_exponents(s, r);
    if !covers_all(c, &paths, &exps) {
        return Err(CoverError::NotACover);
    }
    Ok(is_minimal_with(c, &paths, &exps))
}

/// Enumerates every minimal edge-weighted `r`-path vertex cover of `s`, in
/// canonical order.
///
/// The search branches over the first uncovered path: each candidate
/// weight at each of its vertices is tried, weights drawn from the path
/// exponents occurring at that vertex (a minimal cover's weight always
/// equals one of them, else it could rise). Leaves are covers; the
/// single-step minimality filter then discards the non-minimal ones.
pub fn enumerate_minimal_covers(s: &SuspendedGraph, r: usize) -> Vec<WeightedCover> {
    let (paths, exps) = paths_with_exponents(s, r);
    if paths.is_empty() {
        return vec![WeightedCover::empty()];
    }
    let search = CoverSearch::new(&paths, &exps);
    let found = search.run();
    let mut covers: Vec<WeightedCover> = found
        .into_iter()
        .map(|state| search.to_cover(&state))
        .filter(|c| is_minimal_with(c, &paths, &exps))
        .collect();
    covers.sort();
    covers
}

/// Flat-indexed search state for the cover enumeration. Only vertices that
/// lie on some path participate; weight 0 encodes "unassigned".
struct CoverSearch {
    verts: Vec<SuspVertex>,
    // Per path, the (vertex index, exponent) pairs.
    path_slots: Vec<Vec<(usize, u64)>>,
    // Per vertex, the ascending candidate weights.
    candidates: Vec<Vec<u64>>,
}

impl CoverSearch {
    fn new(paths: &[Path], exps: &[Vec<u64>]) -> Self {
        let verts: Vec<SuspVertex> = paths
            .iter()
            .flat_map(|p| p.vertices().iter().copied())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let index: BTreeMap<SuspVertex, usize> =
            verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let path_slots: Vec<Vec<(usize, u64)>> = paths
            .iter()
            .zip(exps)
            .map(|(p, e)| {
                p.vertices()
                    .iter()
                    .zip(e)
                    .map(|(&v, &ev)| (index[&v], ev))
                    .collect()
            })
            .collect();
        let mut candidate_sets: Vec<BTreeSet<u64>> = vec![BTreeSet::new(); verts.len()];
        for slots in &path_slots {
            for &(vi, ev) in slots {
                candidate_sets[vi].insert(ev);
            }
        }
        let candidates = candidate_sets
            .into_iter()
            .map(|set| set.into_iter().collect())
            .collect();
        CoverSearch {
            verts,
            path_slots,
            candidates,
        }
    }

    fn run(&self) -> HashSet<Vec<u64>> {
        let mut found = HashSet::new();
        let mut visited = HashSet::new();
        let mut state = vec![0u64; self.verts.len()];
        self.search(&mut state, &mut visited, &mut found);
        found
    }

    fn path_covered(&self, state: &[u64], pi: usize) -> bool {
        self.path_slots[pi]
            .iter()
            .any(|&(vi, ev)| state[vi] != 0 && state[vi] <= ev)
    }

    fn search(
        &self,
        state: &mut Vec<u64>,
        visited: &mut HashSet<Vec<u64>>,
        found: &mut HashSet<Vec<u64>>,
    ) {
        let uncovered = (0..self.path_slots.len()).find(|&pi| !self.path_covered(state, pi));
        let Some(pi) = uncovered else {
            found.insert(state.clone());
            return;
        };
        for &(vi, ev) in &self.path_slots[pi] {
            if state[vi] != 0 {
                // Its assigned weight failed to cover this path; lowering it
                // is explored through branches that picked the lower weight.
                continue;
            }
            for &w in self.candidates[vi].iter().take_while(|&&w| w <= ev) {
                state[vi] = w;
                if visited.insert(state.clone()) {
                    self.search(state, visited, found);
                }
                state[vi] = 0;
            }
        }
    }

    fn to_cover(&self, state: &[u64]) -> WeightedCover {
        WeightedCover::new(
            state
                .iter()
                .enumerate()
                .filter(|&(_, &w)| w != 0)
                .map(|(vi, &w)| (self.verts[vi], w)),
        )
    }
}

/// Per-base-vertex value of the `γ`-function, `∞` when no cover vertex on
/// that whisker sits below its `h`-value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gamma {
    Finite(u64),
    Infinite,
}

impl Gamma {
    pub fn is_finite(&self) -> bool {
        matches!(self, Gamma::Finite(_))
    }

    /// `self ≥ other` with `∞` as top element.
    fn ge(&self, other: &Gamma) -> bool {
        match (self, other) {
            (Gamma::Infinite, _) => true,
            (Gamma::Finite(_), Gamma::Infinite) => false,
            (Gamma::Finite(a), Gamma::Finite(b)) => a >= b,
        }
    }
}

impl fmt::Display for Gamma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gamma::Finite(v) => write!(f, "{v}"),
            Gamma::Infinite => write!(f, "inf"),
        }
    }
}

/// The `γ`-function of a cover: one value per base vertex of `q(V″)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaValues {
    values: BTreeMap<usize, Gamma>,
}

impl GammaValues {
    /// Value at base vertex `i`; `None` if `i ∉ q(V″)`.
    pub fn get(&self, base: usize) -> Option<Gamma> {
        self.values.get(&base).copied()
    }

    /// Domain `q(V″)` with values, in base-index order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, Gamma)> + '_ {
        self.values.iter().map(|(&i, &g)| (i, g))
    }
}

/// Computes `γ_{(V″,δ″)}` on `q(V″)`: for each base vertex, the minimum of
/// `δ″(v_{i,j}) + Σ_{k<j} h_{i,k}` over the cover vertices `v_{i,j}` with
/// `δ″(v_{i,j}) ≤ h_{i,j}`, and `∞` when there are none.
///
/// The minimum is provably attained at the smallest such level; that is
/// re-derived here and checked by a debug assertion.
pub fn gamma(c: &WeightedCover, s: &SuspendedGraph) -> GammaValues {
    let h = h_values(s);
    let mut per_base: BTreeMap<usize, Vec<(usize, u64)>> = BTreeMap::new();
    for (v, w) in c.entries() {
        per_base.entry(v.base).or_default().push((v.level, w));
    }
    let mut values = BTreeMap::new();
    for (&base, members) in &per_base {
        let eligible: Vec<(usize, u64)> = members
            .iter()
            .copied()
            .filter(|&(level, w)| {
                h.get(&SuspVertex::new(base, level))
                    .is_some_and(|&hv| w <= hv)
            })
            .collect();
        let value = eligible
            .iter()
            .map(|&(level, w)| {
                let prefix: u64 = (0..level)
                    .map(|k| h[&SuspVertex::new(base, k)])
                    .try_fold(0u64, |acc, hv| acc.checked_add(hv))
                    .expect("h-sum overflow");
                w.checked_add(prefix).expect("gamma overflow")
            })
            .min();
        match value {
            Some(min) => {
                if cfg!(debug_assertions) {
                    // The minimum is attained at the smallest eligible level.
                    let (level, w) = *eligible.iter().min_by_key(|&&(level, _)| level).unwrap();
                    let prefix: u64 = (0..level).map(|k| h[&SuspVertex::new(base, k)]).sum();
                    debug_assert_eq!(min, w + prefix);
                }
                values.insert(base, Gamma::Finite(min));
            }
            None => {
                values.insert(base, Gamma::Infinite);
            }
        }
    }
    GammaValues { values }
}

/// The irreducible ideal `P(q(V″), γ)`: one generator `X_i^{γ(v_i)}` per
/// base vertex with finite `γ`. Returns the zero-ideal marker when no
/// value is finite.
pub fn cover_ideal(c: &WeightedCover, s: &SuspendedGraph) -> IrreducibleIdeal {
    IrreducibleIdeal::new(gamma(c, s).entries().filter_map(|(base, g)| match g {
        Gamma::Finite(v) => Some((SuspVertex::base_vertex(base), v)),
        Gamma::Infinite => None,
    }))
}

/// The `𝒫`-order: `c1 ≤_𝒫 c2` iff `q(V₁″) ⊆ q(V₂″)` and `γ₁ ≥ γ₂` on
/// `q(V₁″)` (with `∞` on top). Equivalent to containment of the associated
/// irreducible ideals.
pub fn p_leq(c1: &WeightedCover, c2: &WeightedCover, s: &SuspendedGraph) -> bool {
    let q1 = c1.q_support();
    let q2 = c2.q_support();
    if !q1.is_subset(&q2) {
        return false;
    }
    let g1 = gamma(c1, s);
    let g2 = gamma(c2, s);
    q1.iter()
        .all(|&i| g1.get(i).unwrap().ge(&g2.get(i).unwrap()))
}

/// Level/weight criterion for `c1 ≤_𝒫 c2` between minimal covers, which
/// carry at most one cover vertex per base vertex: the supports must have
/// equal `q`-image and, on each base vertex, `c1`'s level is strictly
/// larger, or the levels agree and `c1`'s weight is at least `c2`'s.
///
/// Agrees with [`p_leq`] on all pairs of minimal covers.
pub fn p_criterion_leq(
    c1: &WeightedCover,
    c2: &WeightedCover,
    s: &SuspendedGraph,
) -> Result<bool, CoverError> {
    debug_assert!(c1.domain().chain(c2.domain()).all(|v| s.contains_vertex(v)));
    let m1 = whisker_positions(c1)?;
    let m2 = whisker_positions(c2)?;
    if m1.keys().ne(m2.keys()) {
        return Ok(false);
    }
    Ok(m1.iter().all(|(base, &(j1, w1))| {
        let (j2, w2) = m2[base];
        j1 > j2 || (j1 == j2 && w1 >= w2)
    }))
}

fn whisker_positions(c: &WeightedCover) -> Result<BTreeMap<usize, (usize, u64)>, CoverError> {
    let mut out = BTreeMap::new();
    for (v, w) in c.entries() {
        if out.insert(v.base, (v.level, w)).is_some() {
            return Err(CoverError::MultipleOnWhisker(v.base));
        }
    }
    Ok(out)
}

/// Enumerates the `𝒫`-minimal covers: the minimal covers whose associated
/// ideal properly contains no other minimal cover's ideal. Their ideals are
/// exactly the irredundant components of the decomposition.
pub fn enumerate_p_minimal_covers(s: &SuspendedGraph, r: usize) -> Vec<WeightedCover> {
    let minimal = enumerate_minimal_covers(s, r);
    let ideals: Vec<IrreducibleIdeal> = minimal.iter().map(|c| cover_ideal(c, s)).collect();
    minimal
        .iter()
        .enumerate()
        .filter(|&(k, _)| {
            !ideals
                .iter()
                .enumerate()
                .any(|(l, other)| l != k && other != &ideals[k] && ideals[k].contains(other))
        })
        .map(|(_, c)| c.clone())
        .collect()
}
