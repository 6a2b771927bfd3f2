//! Cohen-Macaulay type of the suspension quotient, computed two ways and
//! cross-checked: counting `𝒫`-minimal covers of the truncated suspension,
//! and counting the components of the splitting oracle's irredundant
//! decomposition of the projected ideal.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::covers::{
    cover_ideal, enumerate_minimal_covers, enumerate_p_minimal_covers, WeightedCover,
};
use crate::graph::{
    suspend, truncate_suspension, validate_weight_condition, GraphError, SuspendedGraph,
    WeightedGraph,
};
use crate::monomial::{irreducible_decompose, IrreducibleIdeal, MonomialError};
use crate::pathideal::{frobenius_power_ideal, project, weighted_path_ideal};

/// Errors raised by the type computation.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum TypeError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Monomial(#[from] MonomialError),
    #[error(
        "weight condition violated on base edges {violations:?}; pass force to compute anyway"
    )]
    WeightCondition { violations: Vec<(usize, usize)> },
    #[error("suspension has no r-path; malformed input")]
    Degenerate,
    #[error(
        "route disagreement: {combinatorial} cover components vs {algebraic} oracle components"
    )]
    InternalConsistency { combinatorial: u64, algebraic: u64 },
}

/// Result of a type computation, with both routes reported.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeReport {
    /// The Cohen-Macaulay type: number of components in the irredundant
    /// irreducible decomposition of the projected ideal.
    pub type_value: u64,
    /// Number of `𝒫`-minimal edge-weighted `r`-path vertex covers of the
    /// truncated suspension.
    pub route_combinatorial: u64,
    /// Component count from the splitting oracle.
    pub route_algebraic: u64,
    /// The decomposition components, sorted.
    pub components: Vec<IrreducibleIdeal>,
    /// False when the computation was forced past a weight-condition
    /// violation; the two routes are then reported but not asserted equal.
    pub weight_condition_ok: bool,
    /// True if distinct `𝒫`-minimal covers collapsed onto one component
    /// ideal (never observed; would signal a gap in the bijection).
    pub duplicate_ideals: bool,
}

fn prune_nested(components: BTreeSet<IrreducibleIdeal>) -> Vec<IrreducibleIdeal> {
    components
        .iter()
        .filter(|c| !components.iter().any(|d| &d != c && c.contains(d)))
        .cloned()
        .collect()
}

/// Computes the Cohen-Macaulay type of the quotient by the edge-weighted
/// `r`-path ideal of `(Σ_r G)_λ`.
///
/// The weight condition (base edge weights dominated by the first whisker
/// edge weight at both endpoints) is required unless `force` is set; a
/// forced report carries `weight_condition_ok = false`, its type taken from
/// the algebraic route alone.
pub fn cm_type(
    g: &WeightedGraph,
    r: usize,
    whisker_weights: &[Vec<u64>],
    force: bool,
) -> Result<TypeReport, TypeError> {
    let s = suspend(g, r, whisker_weights)?;
    let violations = validate_weight_condition(&s);
    let weight_condition_ok = violations.is_empty();
    if !weight_condition_ok && !force {
        return Err(TypeError::WeightCondition { violations });
    }

    let truncated = truncate_suspension(&s);
    let p_minimal = enumerate_p_minimal_covers(&truncated, r);
    let whisker_powers = frobenius_power_ideal(&s);
    let cover_components: BTreeSet<IrreducibleIdeal> = p_minimal
        .iter()
        .map(|c| cover_ideal(c, &truncated).sum_pure(&whisker_powers))
        .collect();
    let cover_components = prune_nested(cover_components);
    let route_combinatorial = p_minimal.len() as u64;
    let duplicate_ideals = cover_components.len() != p_minimal.len();

    let full_ideal = weighted_path_ideal(&s, r);
    if full_ideal.is_zero() {
        // Unreachable for valid suspensions: every whisker supplies an r-path.
        return Err(TypeError::Degenerate);
    }
    let oracle = irreducible_decompose(&project(&full_ideal))?;
    let route_algebraic = oracle.len() as u64;

    if weight_condition_ok
        && (cover_components.iter().collect::<BTreeSet<_>>()
            != oracle.iter().collect::<BTreeSet<_>>()
            || route_combinatorial != route_algebraic)
    {
        return Err(TypeError::InternalConsistency {
            combinatorial: cover_components.len() as u64,
            algebraic: route_algebraic,
        });
    }

    let mut components = oracle;
    components.sort();
    Ok(TypeReport {
        type_value: route_algebraic,
        route_combinatorial,
        route_algebraic,
        components,
        weight_condition_ok,
        duplicate_ideals,
    })
}

/// Special case `r = 1` of [`cm_type`] for edge-weighted suspensions, one
/// whisker weight per base vertex. Additionally checks that
/// the type equals the number of minimal edge-weighted vertex covers of the
/// base graph (every minimal cover is `𝒫`-minimal when `r = 1`).
pub fn cm_type_r1_weighted(
    g: &WeightedGraph,
    whisker_weights: &[u64],
) -> Result<TypeReport, TypeError> {
    let lists: Vec<Vec<u64>> = whisker_weights.iter().map(|&w| vec![w]).collect();
    let report = cm_type(g, 1, &lists, false)?;
    let base = SuspendedGraph::from_base(g.clone());
    let minimal = enumerate_minimal_covers(&base, 1).len() as u64;
    if minimal != report.type_value {
        return Err(TypeError::InternalConsistency {
            combinatorial: minimal,
            algebraic: report.type_value,
        });
    }
    Ok(report)
}

/// The irredundant decomposition of the projected ideal with provenance:
/// each component paired with an originating `𝒫`-minimal cover. Asserts
/// componentwise equality with the splitting oracle.
pub fn decomposition_report(
    g: &WeightedGraph,
    r: usize,
    whisker_weights: &[Vec<u64>],
) -> Result<Vec<(WeightedCover, IrreducibleIdeal)>, TypeError> {
    let s = suspend(g, r, whisker_weights)?;
    let violations = validate_weight_condition(&s);
    if !violations.is_empty() {
        return Err(TypeError::WeightCondition { violations });
    }
    let truncated = truncate_suspension(&s);
    let whisker_powers = frobenius_power_ideal(&s);
    let mut pairs: Vec<(WeightedCover, IrreducibleIdeal)> =
        enumerate_p_minimal_covers(&truncated, r)
            .into_iter()
            .map(|c| {
                let component = cover_ideal(&c, &truncated).sum_pure(&whisker_powers);
                (c, component)
            })
            .collect();
    pairs.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));

    let oracle = irreducible_decompose(&project(&weighted_path_ideal(&s, r)))?;
    let from_covers: BTreeSet<&IrreducibleIdeal> = pairs.iter().map(|(_, i)| i).collect();
    let from_oracle: BTreeSet<&IrreducibleIdeal> = oracle.iter().collect();
    if from_covers != from_oracle {
        return Err(TypeError::InternalConsistency {
            combinatorial: from_covers.len() as u64,
            algebraic: from_oracle.len() as u64,
        });
    }
    Ok(pairs)
}
