//! Edge-weighted `r`-path ideals, projection into the base ring, and the
//! whisker power ideal `(X_1^{a_1}, …, X_d^{a_d})`.

use crate::graph::{enumerate_r_paths, GraphError, Path, SuspVertex, SuspendedGraph};
use crate::monomial::{IrreducibleIdeal, Monomial, MonomialIdeal};

/// Exponent sequence of a weighted path: first and last entries are the
/// endpoint edge weights, interior entries the maximum of the two adjacent
/// edge weights. Invariant under reversal of the path.
pub fn path_exponents(p: &Path, s: &SuspendedGraph) -> Result<Vec<u64>, GraphError> {
    let vs = p.vertices();
    let mut edge_weights = Vec::with_capacity(vs.len() - 1);
    for pair in vs.windows(2) {
        match s.edge_weight(pair[0], pair[1]) {
            Some(w) => edge_weights.push(w),
            None => return Err(GraphError::NotAdjacent(pair[0], pair[1])),
        }
    }
    let r = edge_weights.len();
    let mut exps = Vec::with_capacity(r + 1);
    exps.push(edge_weights[0]);
    for j in 1..r {
        exps.push(edge_weights[j - 1].max(edge_weights[j]));
    }
    exps.push(edge_weights[r - 1]);
    Ok(exps)
}

/// Monomial generator of a single path: `∏ X_{v_k}^{e_k}`.
pub fn path_generator(p: &Path, s: &SuspendedGraph) -> Result<Monomial, GraphError> {
    let exps = path_exponents(p, s)?;
    Ok(Monomial::from_pairs(p.vertices().iter().copied().zip(exps)))
}

/// The edge-weighted `r`-path ideal: one generator per canonical `r`-path,
/// minimalized. The zero ideal if the graph has no `r`-paths.
pub fn weighted_path_ideal(s: &SuspendedGraph, r: usize) -> MonomialIdeal {
    assert!(r >= 1, "r must be at least 1");
    let gens: Vec<Monomial> = enumerate_r_paths(s, r)
        .iter()
        .map(|p| path_generator(p, s).expect("enumerated path is a path"))
        .collect();
    MonomialIdeal::new(gens)
}

/// Applies the projection `X_{i,j} ↦ X_i` to every generator (exponents of
/// a common base index add up) and minimalizes. Ideals already in base
/// variables are unchanged.
pub fn project(i: &MonomialIdeal) -> MonomialIdeal {
    MonomialIdeal::new(i.generators().iter().map(|g| {
        Monomial::from_pairs(
            g.exponents()
                .map(|(v, e)| (SuspVertex::base_vertex(v.base), e)),
        )
    }))
}

/// The pure-power ideal `(X_1^{a_1}, …, X_d^{a_d})` with
/// `a_i = Σ_{k=0}^{r} e_{i,k}` the exponent sum along the whisker of
/// vertex `i`: first edge weight, interior maxima, last edge weight.
pub fn frobenius_power_ideal(s: &SuspendedGraph) -> IrreducibleIdeal {
    assert!(s.r() >= 1, "the suspension must have whiskers");
    let r = s.r();
    IrreducibleIdeal::new(s.whisker_weights().iter().enumerate().map(|(i, ws)| {
        let mut a = ws[0];
        for k in 1..r {
            a = a
                .checked_add(ws[k - 1].max(ws[k]))
                .expect("exponent overflow");
        }
        a = a.checked_add(ws[r - 1]).expect("exponent overflow");
        (SuspVertex::base_vertex(i), a)
    }))
}
