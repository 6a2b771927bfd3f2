//! Edge-weighted `r`-path ideals of graph suspensions.
//!
//! Starting from a finite simple graph with positive integer edge weights,
//! this crate builds `r`-path suspensions (a fresh path of length `r`
//! whiskered onto every vertex), the monomial ideals generated by the
//! weighted `r`-paths of those suspensions, and the projection of such an
//! ideal into the base polynomial ring. The projected ideal decomposes into
//! irreducible pure-power ideals indexed by edge-weighted `r`-path vertex
//! covers of the truncated suspension, and the irredundant decomposition is
//! indexed by the covers that are minimal in the `𝒫`-order. Counting those
//! components yields the Cohen-Macaulay type of the suspension's quotient
//! ring, which [`cmtype::cm_type`] computes along two independent routes:
//!
//! * combinatorially, by enumerating `𝒫`-minimal covers ([`covers`]);
//! * algebraically, by a coprime-splitting irreducible decomposition of the
//!   projected ideal ([`monomial::irreducible_decompose`]).
//!
//! Both routes are exact integer combinatorics; no floating point, no field
//! arithmetic. All enumeration orders are deterministic.
//!
//! ```
//! use wpath::{cm_type, WeightedGraph};
//!
//! // A single weighted edge v1 —2— v2, suspended by 3-whiskers.
//! let g = WeightedGraph::from_edges(vec!["v1", "v2"], &[(0, 1, 2)])?;
//! let report = cm_type(&g, 3, &[vec![2, 5, 2], vec![3, 4, 2]], false)?;
//! assert_eq!(report.type_value, 4);
//! assert_eq!(report.route_combinatorial, report.route_algebraic);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod cmtype;
pub mod covers;
pub mod graph;
pub mod monomial;
pub mod pathideal;

pub use cmtype::{cm_type, cm_type_r1_weighted, decomposition_report, TypeError, TypeReport};
pub use covers::{
    cover_ideal, enumerate_minimal_covers, enumerate_p_minimal_covers, gamma, h_values, is_cover,
    is_minimal_cover, p_criterion_leq, p_leq, CoverError, Gamma, GammaValues, WeightedCover,
};
pub use graph::{
    enumerate_r_paths, suspend, truncate_suspension, validate_weight_condition, GraphError, Path,
    SuspVertex, SuspendedGraph, WeightedGraph,
};
pub use monomial::{
    ideal_contains_ideal, ideal_intersect, ideal_sum, irreducible_decompose, is_artinian,
    minimalize, IrreducibleIdeal, Monomial, MonomialError, MonomialIdeal,
};
pub use pathideal::{frobenius_power_ideal, path_exponents, project, weighted_path_ideal};

#[cfg(test)]
pub(crate) mod fixtures {
    //! Recurring worked instances shared by the unit tests.

    use crate::graph::{suspend, SuspVertex, SuspendedGraph, WeightedGraph};
    use crate::monomial::Monomial;

    /// `P₂` with weights 1, 2: `v1 —1— v2 —2— v3`.
    pub fn p2_weighted() -> WeightedGraph {
        WeightedGraph::from_edges(vec!["v1", "v2", "v3"], &[(0, 1, 1), (1, 2, 2)]).unwrap()
    }

    /// `(Σ₂P₂)_λ` with whiskers (4,3), (3,3), (2,5).
    pub fn susp2_p2() -> SuspendedGraph {
        suspend(&p2_weighted(), 2, &[vec![4, 3], vec![3, 3], vec![2, 5]]).unwrap()
    }

    /// `P₁` with weight 2: `v1 —2— v2`.
    pub fn p1_weighted() -> WeightedGraph {
        WeightedGraph::from_edges(vec!["v1", "v2"], &[(0, 1, 2)]).unwrap()
    }

    /// `(Σ₂P₁)_λ` with whiskers (2,5), (3,4).
    pub fn susp2_p1() -> SuspendedGraph {
        suspend(&p1_weighted(), 2, &[vec![2, 5], vec![3, 4]]).unwrap()
    }

    /// `(Σ₃P₁)_λ` with whiskers (2,5,2), (3,4,2).
    pub fn susp3_p1() -> SuspendedGraph {
        suspend(&p1_weighted(), 3, &[vec![2, 5, 2], vec![3, 4, 2]]).unwrap()
    }

    /// Unweighted `P₂` and its suspensions.
    pub fn p2_unweighted() -> WeightedGraph {
        WeightedGraph::from_edges(vec!["v1", "v2", "v3"], &[(0, 1, 1), (1, 2, 1)]).unwrap()
    }

    pub fn susp_unweighted(g: &WeightedGraph, r: usize) -> SuspendedGraph {
        let whiskers = vec![vec![1; r]; g.vertex_count()];
        suspend(g, r, &whiskers).unwrap()
    }

    /// The five-vertex weighted graph with edges
    /// `v1–2–v2, v2–3–v3, v2–4–v4, v3–9–v4, v4–7–v5`.
    pub fn five_vertex_graph() -> WeightedGraph {
        WeightedGraph::from_edges(
            vec!["v1", "v2", "v3", "v4", "v5"],
            &[(0, 1, 2), (1, 2, 3), (1, 3, 4), (2, 3, 9), (3, 4, 7)],
        )
        .unwrap()
    }

    pub fn sv(base: usize, level: usize) -> SuspVertex {
        SuspVertex::new(base, level)
    }

    /// Monomial from `(base, level, exponent)` triples.
    pub fn mono(parts: &[(usize, usize, u64)]) -> Monomial {
        Monomial::from_pairs(parts.iter().map(|&(b, l, e)| (sv(b, l), e)))
    }

    /// Monomial in base variables from `(base, exponent)` pairs.
    pub fn base_mono(parts: &[(usize, u64)]) -> Monomial {
        Monomial::from_pairs(parts.iter().map(|&(b, e)| (sv(b, 0), e)))
    }
}
