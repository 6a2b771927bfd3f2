//! Exact monomial and monomial-ideal arithmetic, and an independent
//! irreducible-decomposition oracle via coprime splitting.
//!
//! Variables are the suspension vertices themselves ([`SuspVertex`]), using
//! the bijection `X_{i,j} ↔ v_{i,j}`; base-ring variables are the level-0
//! vertices. Exponents are `u64` with checked arithmetic, so overflow can
//! never wrap silently.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::graph::SuspVertex;

/// Errors raised by ideal operations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MonomialError {
    #[error("the zero ideal has no irreducible decomposition")]
    ZeroIdeal,
    #[error("the unit ideal has no irreducible decomposition")]
    UnitIdeal,
}

/// A monomial as a sparse map variable → positive exponent.
///
/// The empty map is the unit monomial 1. Zero exponents are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: BTreeMap<SuspVertex, u64>,
}

impl Monomial {
    /// The unit monomial 1.
    pub fn one() -> Self {
        Monomial {
            exponents: BTreeMap::new(),
        }
    }

    /// `X_v^e`. An exponent of 0 yields the unit monomial.
    pub fn var_pow(v: SuspVertex, e: u64) -> Self {
        let mut exponents = BTreeMap::new();
        if e > 0 {
            exponents.insert(v, e);
        }
        Monomial { exponents }
    }

    /// Builds a monomial from `(variable, exponent)` pairs; zero exponents
    /// are dropped and repeated variables accumulate.
    pub fn from_pairs<I: IntoIterator<Item = (SuspVertex, u64)>>(pairs: I) -> Self {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            if e > 0 {
                let slot = m.exponents.entry(v).or_insert(0);
                *slot = slot.checked_add(e).expect("exponent overflow");
            }
        }
        m
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    /// Exponent of `v` (0 if absent).
    pub fn exponent(&self, v: SuspVertex) -> u64 {
        self.exponents.get(&v).copied().unwrap_or(0)
    }

    /// Variables with positive exponent, in order.
    pub fn support(&self) -> impl Iterator<Item = SuspVertex> + '_ {
        self.exponents.keys().copied()
    }

    pub fn support_size(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> impl Iterator<Item = (SuspVertex, u64)> + '_ {
        self.exponents.iter().map(|(&v, &e)| (v, e))
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents
            .values()
            .try_fold(0u64, |acc, &e| acc.checked_add(e))
            .expect("degree overflow")
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&v, &e) in &other.exponents {
            let slot = out.exponents.entry(v).or_insert(0);
            *slot = slot.checked_add(e).expect("exponent overflow");
        }
        out
    }

    /// True iff `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().all(|(&v, &e)| other.exponent(v) >= e)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (&v, &e) in &other.exponents {
            let slot = out.exponents.entry(v).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    /// Compares by the dense exponent vector over variables in increasing
    /// `(base, level)` order; absent variables count as exponent 0.
    pub fn cmp_exponent_vectors(&self, other: &Monomial) -> std::cmp::Ordering {
        let mut a = self.exponents.iter().peekable();
        let mut b = other.exponents.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return std::cmp::Ordering::Equal,
                (Some(_), None) => return std::cmp::Ordering::Greater,
                (None, Some(_)) => return std::cmp::Ordering::Less,
                (Some(&(&va, &ea)), Some(&(&vb, &eb))) => {
                    if va < vb {
                        // self has a positive exponent where other has 0
                        return std::cmp::Ordering::Greater;
                    }
                    if vb < va {
                        return std::cmp::Ordering::Less;
                    }
                    match ea.cmp(&eb) {
                        std::cmp::Ordering::Equal => {
                            a.next();
                            b.next();
                        }
                        ord => return ord,
                    }
                }
            }
        }
    }

    /// Renders with variables in `(base, level)` order as
    /// `name^e * name^e * …`, suppressing `^1`; base names come from
    /// `labels`, level `j > 0` appends `_j`. The unit monomial renders as `1`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.is_unit() {
            return "1".to_string();
        }
        self.exponents
            .iter()
            .map(|(&v, &e)| {
                let name = if v.level == 0 {
                    labels[v.base].clone()
                } else {
                    format!("{}_{}", labels[v.base], v.level)
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    /// Index-based rendering `x<i>_<j>^<e>` with `_0` and `^1` suppressed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exponents
            .iter()
            .map(|(&v, &e)| {
                let name = if v.level == 0 {
                    format!("x{}", v.base + 1)
                } else {
                    format!("x{}_{}", v.base + 1, v.level)
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A monomial ideal held as its unique minimal generating set, sorted in
/// decreasing exponent-vector order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// The zero ideal (no generators).
    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    /// Builds the ideal generated by `gens`, reduced to the minimal
    /// generating set and canonically sorted.
    pub fn new<I: IntoIterator<Item = Monomial>>(gens: I) -> Self {
        let mut gens: Vec<Monomial> = gens.into_iter().collect();
        gens.sort_by(|a, b| b.cmp_exponent_vectors(a));
        gens.dedup();
        let mut keep: Vec<Monomial> = Vec::with_capacity(gens.len());
        for m in gens {
            if !keep.iter().any(|g| g.divides(&m)) {
                keep.retain(|g| !m.divides(g));
                keep.push(m);
            }
        }
        keep.sort_by(|a, b| b.cmp_exponent_vectors(a));
        MonomialIdeal { gens: keep }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True iff this is the whole ring, i.e. generated by 1.
    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_unit()
    }

    /// Minimal generators in canonical (decreasing exponent-vector) order.
    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    /// Membership test: some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// True iff `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    /// Variables appearing in some generator.
    pub fn support(&self) -> BTreeSet<SuspVertex> {
        self.gens.iter().flat_map(|g| g.support()).collect()
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.render(labels)).collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        let parts: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Reduces a generating set to the minimal one (drops every generator
/// divisible by another). Idempotent and order-independent.
pub fn minimalize<I: IntoIterator<Item = Monomial>>(gens: I) -> MonomialIdeal {
    MonomialIdeal::new(gens)
}

/// Sum `I + J`: the minimalized union of generators.
pub fn ideal_sum(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::new(i.generators().iter().chain(j.generators()).cloned())
}

/// Intersection `I ∩ J`, generated by the pairwise lcms.
///
/// Intersecting with the zero ideal yields the zero ideal.
pub fn ideal_intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    if i.is_zero() || j.is_zero() {
        return MonomialIdeal::zero();
    }
    let mut gens = Vec::with_capacity(i.generators().len() * j.generators().len());
    for f in i.generators() {
        for g in j.generators() {
            gens.push(f.lcm(g));
        }
    }
    MonomialIdeal::new(gens)
}

/// True iff `J ⊆ I` (note the argument order: the containing ideal first).
pub fn ideal_contains_ideal(i: &MonomialIdeal, j: &MonomialIdeal) -> bool {
    i.contains_ideal(j)
}

/// True iff every variable of `vars` has some pure power inside `I`, i.e.
/// the quotient by `I` is Artinian on that variable set.
pub fn is_artinian(i: &MonomialIdeal, vars: &[SuspVertex]) -> bool {
    vars.iter().all(|&v| {
        i.generators()
            .iter()
            .any(|g| g.support_size() == 1 && g.exponent(v) > 0)
    })
}

/// An irreducible monomial ideal: pure powers `X_v^{e_v}` for the variables
/// in the map. Variables absent from the map are not generators (exponent
/// `∞`). The empty map is the zero-ideal marker `(0)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrreducibleIdeal {
    powers: BTreeMap<SuspVertex, u64>,
}

impl IrreducibleIdeal {
    /// The zero-ideal marker (no generators).
    pub fn zero() -> Self {
        IrreducibleIdeal {
            powers: BTreeMap::new(),
        }
    }

    /// Builds `(X_v^{e_v} | v)`; every exponent must be positive.
    pub fn new<I: IntoIterator<Item = (SuspVertex, u64)>>(powers: I) -> Self {
        let powers: BTreeMap<SuspVertex, u64> = powers.into_iter().collect();
        assert!(
            powers.values().all(|&e| e > 0),
            "pure-power exponents must be positive"
        );
        IrreducibleIdeal { powers }
    }

    pub fn is_zero(&self) -> bool {
        self.powers.is_empty()
    }

    /// Exponent of `v`, or `None` for `∞` (no generator on `v`).
    pub fn power(&self, v: SuspVertex) -> Option<u64> {
        self.powers.get(&v).copied()
    }

    pub fn powers(&self) -> impl Iterator<Item = (SuspVertex, u64)> + '_ {
        self.powers.iter().map(|(&v, &e)| (v, e))
    }

    /// The same ideal as a [`MonomialIdeal`].
    pub fn to_monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::new(self.powers.iter().map(|(&v, &e)| Monomial::var_pow(v, e)))
    }

    /// True iff `other ⊆ self`. For pure-power ideals this holds exactly
    /// when every generator variable of `other` appears in `self` with a
    /// smaller-or-equal exponent.
    pub fn contains(&self, other: &IrreducibleIdeal) -> bool {
        other
            .powers
            .iter()
            .all(|(&v, &e)| self.power(v).is_some_and(|mine| mine <= e))
    }

    /// Sum with another pure-power ideal: union of supports, minimum
    /// exponent where both have one. The result is again irreducible.
    pub fn sum_pure(&self, other: &IrreducibleIdeal) -> IrreducibleIdeal {
        let mut powers = self.powers.clone();
        for (&v, &e) in &other.powers {
            let slot = powers.entry(v).or_insert(e);
            *slot = (*slot).min(e);
        }
        IrreducibleIdeal { powers }
    }

    pub fn render(&self, labels: &[String]) -> String {
        if self.is_zero() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self
            .powers
            .iter()
            .map(|(&v, &e)| {
                let name = if v.level == 0 {
                    labels[v.base].clone()
                } else {
                    format!("{}_{}", labels[v.base], v.level)
                };
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect();
        format!("({})", parts.join(", "))
    }
}

impl fmt::Display for IrreducibleIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial_ideal())
    }
}

/// Computes the irredundant irreducible decomposition of a proper nonzero
/// monomial ideal by coprime splitting: a generator `m = m₁·m₂` with
/// coprime non-unit parts splits `I` into `(I' + m₁) ∩ (I' + m₂)`; leaves
/// are pure-power ideals, which are then deduplicated and pruned down to
/// the inclusion-minimal components.
///
/// The pivot is always the canonically first generator supported on at
/// least two variables, split into its first variable's pure power times
/// the rest; any pivot strategy reaches the same final set.
pub fn irreducible_decompose(i: &MonomialIdeal) -> Result<Vec<IrreducibleIdeal>, MonomialError> {
    decompose_with(i, &mut first_mixed_pivot)
}

/// Chooses a generator index with support ≥ 2 and one of its variables to
/// split at, or `None` when every generator is a pure power.
pub(crate) type PivotFn<'a> = &'a mut dyn FnMut(&[Monomial]) -> Option<(usize, SuspVertex)>;

/// Pivot used by [`irreducible_decompose`]: the first generator (canonical
/// order) with support on two or more variables, split at its first
/// variable.
pub(crate) fn first_mixed_pivot(gens: &[Monomial]) -> Option<(usize, SuspVertex)> {
    gens.iter()
        .position(|g| g.support_size() >= 2)
        .map(|idx| (idx, gens[idx].support().next().unwrap()))
}

/// Splitting recursion with an injectable pivot choice, so tests can verify
/// pivot independence. The pivot function must return a generator index
/// with support ≥ 2 and one of its support variables.
pub(crate) fn decompose_with(
    i: &MonomialIdeal,
    pivot: PivotFn<'_>,
) -> Result<Vec<IrreducibleIdeal>, MonomialError> {
    if i.is_zero() {
        return Err(MonomialError::ZeroIdeal);
    }
    if i.is_unit() {
        return Err(MonomialError::UnitIdeal);
    }
    let mut memo: HashMap<MonomialIdeal, BTreeSet<IrreducibleIdeal>> = HashMap::new();
    let raw = split(i, pivot, &mut memo);
    // Keep the inclusion-minimal components: a pure-power component is
    // redundant exactly when it contains a distinct remaining one.
    let kept: Vec<IrreducibleIdeal> = raw
        .iter()
        .filter(|c| !raw.iter().any(|d| d != *c && c.contains(d)))
        .cloned()
        .collect();
    Ok(kept)
}

fn split(
    i: &MonomialIdeal,
    pivot: PivotFn<'_>,
    memo: &mut HashMap<MonomialIdeal, BTreeSet<IrreducibleIdeal>>,
) -> BTreeSet<IrreducibleIdeal> {
    if let Some(hit) = memo.get(i) {
        return hit.clone();
    }
    let result = match pivot(i.generators()) {
        None => {
            // Every generator is a pure power: the ideal is irreducible.
            let leaf = IrreducibleIdeal::new(
                i.generators()
                    .iter()
                    .map(|g| g.exponents().next().expect("nonunit pure power")),
            );
            std::iter::once(leaf).collect()
        }
        Some((idx, v)) => {
            let m = &i.generators()[idx];
            debug_assert!(m.support_size() >= 2 && m.exponent(v) > 0);
            let head = Monomial::var_pow(v, m.exponent(v));
            let tail = Monomial::from_pairs(m.exponents().filter(|&(u, _)| u != v));
            let rest = i
                .generators()
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != idx)
                .map(|(_, g)| g.clone());
            let left = MonomialIdeal::new(rest.clone().chain(std::iter::once(head)));
            let right = MonomialIdeal::new(rest.chain(std::iter::once(tail)));
            let mut acc = split(&left, pivot, memo);
            acc.extend(split(&right, pivot, memo));
            acc
        }
    };
    memo.insert(i.clone(), result.clone());
    result
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{base_mono, sv};

    fn x(base: usize, e: u64) -> Monomial {
        Monomial::var_pow(sv(base, 0), e)
    }

    fn pure(powers: &[(usize, u64)]) -> IrreducibleIdeal {
        IrreducibleIdeal::new(powers.iter().map(|&(b, e)| (sv(b, 0), e)))
    }

    /// `I₃((Σ₂P₁)_λ')R = (X1¹²X2², X1⁴X2⁶, X1²X2¹¹)`.
    fn projected_truncated_p1() -> MonomialIdeal {
        MonomialIdeal::new(vec![
            base_mono(&[(0, 12), (1, 2)]),
            base_mono(&[(0, 4), (1, 6)]),
            base_mono(&[(0, 2), (1, 11)]),
        ])
    }

    #[test]
    fn minimalize_drops_divisible_generators() {
        let i = minimalize(vec![x(0, 1), base_mono(&[(0, 1), (1, 1)])]);
        assert_eq!(i.generators(), &[x(0, 1)]);
        assert!(minimalize(Vec::new()).is_zero());
        // Idempotent.
        let again = minimalize(i.generators().to_vec());
        assert_eq!(again, i);
    }

    #[test]
    fn membership_examples() {
        let i = MonomialIdeal::new(vec![x(0, 2), x(1, 3)]);
        assert!(i.contains(&base_mono(&[(0, 1), (1, 3)])));
        assert!(!MonomialIdeal::new(vec![x(0, 2)]).contains(&x(0, 1)));
        assert!(projected_truncated_p1().contains(&base_mono(&[(0, 4), (1, 6)])));
    }

    #[test]
    fn sum_examples() {
        let a = MonomialIdeal::new(vec![x(0, 2)]);
        let b = MonomialIdeal::new(vec![x(1, 2)]);
        assert_eq!(ideal_sum(&a, &b).generators(), &[x(0, 2), x(1, 2)]);

        // No absorption between the three mixed generators and the two pure
        // powers: five minimal generators.
        let sum = ideal_sum(
            &projected_truncated_p1(),
            &MonomialIdeal::new(vec![x(0, 14), x(1, 13)]),
        );
        assert_eq!(sum.generators().len(), 5);

        assert_eq!(
            ideal_sum(&projected_truncated_p1(), &MonomialIdeal::zero()),
            projected_truncated_p1()
        );
    }

    #[test]
    fn intersection_of_vertex_cover_ideals() {
        let a = MonomialIdeal::new(vec![x(0, 1), x(2, 1)]);
        let b = MonomialIdeal::new(vec![x(1, 1)]);
        assert_eq!(
            ideal_intersect(&a, &b),
            MonomialIdeal::new(vec![
                base_mono(&[(0, 1), (1, 1)]),
                base_mono(&[(1, 1), (2, 1)])
            ])
        );
    }

    #[test]
    fn intersection_of_the_eight_cover_components() {
        let pairs: [(u64, u64); 6] = [(7, 3), (12, 3), (4, 7), (7, 6), (12, 6), (4, 11)];
        let mut acc = ideal_intersect(
            &MonomialIdeal::new(vec![x(0, 2)]),
            &MonomialIdeal::new(vec![x(1, 2)]),
        );
        for (a, b) in pairs {
            acc = ideal_intersect(&acc, &MonomialIdeal::new(vec![x(0, a), x(1, b)]));
        }
        assert_eq!(acc, projected_truncated_p1());
    }

    #[test]
    fn intersection_is_idempotent() {
        let i = projected_truncated_p1();
        assert_eq!(ideal_intersect(&i, &i), i);
    }

    #[test]
    fn ideal_containment_examples() {
        let big = MonomialIdeal::new(vec![x(0, 12), x(1, 3)]);
        let small = MonomialIdeal::new(vec![x(0, 12), x(1, 6)]);
        assert!(ideal_contains_ideal(&big, &small));
        assert!(!ideal_contains_ideal(&small, &big));
        assert!(!ideal_contains_ideal(
            &MonomialIdeal::new(vec![x(0, 2)]),
            &MonomialIdeal::new(vec![x(0, 1)])
        ));
        assert!(ideal_contains_ideal(&big, &big));
    }

    #[test]
    fn decompose_single_squarefree_generator() {
        let i = MonomialIdeal::new(vec![base_mono(&[(0, 1), (1, 1)])]);
        let comps = irreducible_decompose(&i).unwrap();
        assert_eq!(comps, vec![pure(&[(0, 1)]), pure(&[(1, 1)])]);

        // One generator per variable of a squarefree 3-path generator.
        let long = MonomialIdeal::new(vec![base_mono(&[(0, 1), (1, 1), (2, 1), (3, 1)])]);
        assert_eq!(irreducible_decompose(&long).unwrap().len(), 4);
    }

    #[test]
    fn decompose_projected_full_suspension_of_p1() {
        // I₃((Σ₃P₁)_λ)R = truncated ideal + (X1¹⁴, X2¹³).
        let i = ideal_sum(
            &projected_truncated_p1(),
            &MonomialIdeal::new(vec![x(0, 14), x(1, 13)]),
        );
        let comps = irreducible_decompose(&i).unwrap();
        let expected: BTreeSet<IrreducibleIdeal> = [
            pure(&[(0, 2), (1, 13)]),
            pure(&[(0, 14), (1, 2)]),
            pure(&[(0, 12), (1, 6)]),
            pure(&[(0, 4), (1, 11)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(comps.iter().cloned().collect::<BTreeSet<_>>(), expected);
        // Intersecting the components recovers the ideal.
        let back = comps
            .iter()
            .map(IrreducibleIdeal::to_monomial_ideal)
            .reduce(|a, b| ideal_intersect(&a, &b))
            .unwrap();
        assert_eq!(back, i);
    }

    #[test]
    fn decompose_truncated_unweighted_p2() {
        // I₃(Σ₂P₂)R: the eight projected path generators.
        let i = MonomialIdeal::new(vec![
            base_mono(&[(0, 3), (1, 1)]),
            base_mono(&[(0, 1), (1, 3)]),
            base_mono(&[(1, 3), (2, 1)]),
            base_mono(&[(1, 1), (2, 3)]),
            base_mono(&[(0, 2), (1, 2)]),
            base_mono(&[(1, 2), (2, 2)]),
            base_mono(&[(0, 2), (1, 1), (2, 1)]),
            base_mono(&[(0, 1), (1, 1), (2, 2)]),
        ]);
        let comps = irreducible_decompose(&i).unwrap();
        let expected: BTreeSet<IrreducibleIdeal> = [
            pure(&[(1, 1)]),
            pure(&[(0, 1), (2, 1)]),
            pure(&[(0, 1), (1, 2), (2, 3)]),
            pure(&[(0, 3), (1, 2), (2, 1)]),
            pure(&[(0, 2), (1, 3), (2, 2)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(comps.iter().cloned().collect::<BTreeSet<_>>(), expected);
    }

    #[test]
    fn decompose_rejects_zero_and_unit() {
        assert_eq!(
            irreducible_decompose(&MonomialIdeal::zero()).unwrap_err(),
            MonomialError::ZeroIdeal
        );
        assert_eq!(
            irreducible_decompose(&MonomialIdeal::new(vec![Monomial::one()])).unwrap_err(),
            MonomialError::UnitIdeal
        );
    }

    #[test]
    fn decomposition_is_pivot_independent() {
        let i = ideal_sum(
            &projected_truncated_p1(),
            &MonomialIdeal::new(vec![x(0, 14), x(1, 13)]),
        );
        let reference = irreducible_decompose(&i).unwrap();
        // Pivot on the last mixed generator and its last variable instead.
        let mut alt = |gens: &[Monomial]| {
            gens.iter()
                .rposition(|g| g.support_size() >= 2)
                .map(|idx| (idx, gens[idx].support().last().unwrap()))
        };
        let other = decompose_with(&i, &mut alt).unwrap();
        assert_eq!(
            reference.iter().collect::<BTreeSet<_>>(),
            other.iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn decomposition_is_unique_under_random_pivoting() {
        use rand::{Rng, SeedableRng};
        let ideals = vec![
            ideal_sum(
                &projected_truncated_p1(),
                &MonomialIdeal::new(vec![x(0, 14), x(1, 13)]),
            ),
            MonomialIdeal::new(vec![
                base_mono(&[(0, 3), (1, 1)]),
                base_mono(&[(0, 1), (1, 3)]),
                base_mono(&[(1, 3), (2, 1)]),
                base_mono(&[(0, 2), (1, 2)]),
                base_mono(&[(0, 2), (1, 1), (2, 1)]),
            ]),
        ];
        for ideal in ideals {
            let reference = irreducible_decompose(&ideal).unwrap();
            for seed in 0..5u64 {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
                let mut random_pivot = |gens: &[Monomial]| {
                    let mixed: Vec<usize> = gens
                        .iter()
                        .enumerate()
                        .filter(|(_, g)| g.support_size() >= 2)
                        .map(|(i, _)| i)
                        .collect();
                    if mixed.is_empty() {
                        return None;
                    }
                    let idx = mixed[rng.random_range(0..mixed.len())];
                    let vars: Vec<SuspVertex> = gens[idx].support().collect();
                    Some((idx, vars[rng.random_range(0..vars.len())]))
                };
                let shuffled = decompose_with(&ideal, &mut random_pivot).unwrap();
                assert_eq!(
                    reference.iter().collect::<BTreeSet<_>>(),
                    shuffled.iter().collect::<BTreeSet<_>>()
                );
            }
        }
    }

    #[test]
    fn artinian_detection() {
        let vars = [sv(0, 0), sv(1, 0)];
        assert!(is_artinian(
            &MonomialIdeal::new(vec![x(0, 14), x(1, 13)]),
            &vars
        ));
        assert!(!is_artinian(
            &MonomialIdeal::new(vec![base_mono(&[(0, 1), (1, 1)])]),
            &vars
        ));
        assert!(is_artinian(&MonomialIdeal::new(vec![x(0, 1)]), &[sv(0, 0)]));
    }

    #[test]
    fn rendering_follows_the_canonical_format() {
        let m = Monomial::from_pairs([(sv(0, 2), 3), (sv(0, 1), 4), (sv(0, 0), 4)]);
        assert_eq!(m.to_string(), "x1^4*x1_1^4*x1_2^3");
        let labels: Vec<String> = ["v1", "v2"].iter().map(|s| s.to_string()).collect();
        assert_eq!(base_mono(&[(0, 8), (1, 1)]).render(&labels), "v1^8*v2");
        assert_eq!(Monomial::one().to_string(), "1");
        assert_eq!(pure(&[(0, 12), (1, 6)]).render(&labels), "(v1^12, v2^6)");
        assert_eq!(MonomialIdeal::zero().to_string(), "(0)");
    }
}
