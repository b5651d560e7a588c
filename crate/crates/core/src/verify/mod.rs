//! Independent oracles, generating polynomials and the sweep driver.

pub mod checks;
pub mod classical;
pub mod poly;

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{domain, Result};
use crate::kshape::k_shapes_of_boundary;
use crate::partition::{residue, Partition};
use crate::poset::{enumerate_paths, equivalence_classes};
use crate::weak::{charge_any_weight, enumerate_semistandard, WeakTableau};

pub use checks::{run_check, CheckMode, CheckParams, VerificationReport, CHECKS};
pub use poly::{compositions, TPolynomial, TruncatedSymPoly};

/// Sizes the global worker pool from `KSHAPE_WORKERS` when it is set.
pub fn init_workers() -> Result<Option<usize>> {
    let Ok(v) = std::env::var("KSHAPE_WORKERS") else { return Ok(None) };
    let n: usize = match v.trim().parse() {
        Ok(n) if n > 0 => n,
        _ => return domain(format!("KSHAPE_WORKERS must be a positive integer, got {v:?}")),
    };
    // a pool that already exists keeps its size
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(Some(n))
}

/// Whether tableaux contribute `t^charge` or just `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Weighting {
    Charge,
    Count,
}

/// `Σ t^{charge(Q)} x^{weight(Q)}` over weak tableaux of shape `λ` whose
/// weight fits in `vars` variables.
pub fn dual_kschur_truncated(l: &Partition, k: usize, vars: usize, mode: Weighting) -> Result<TruncatedSymPoly> {
    if !l.is_p_core(k + 1)? {
        return domain(format!("{l} is not a {}-core", k + 1));
    }
    let n = l.boundary_size(k);
    let mut memo: BTreeMap<Vec<usize>, TPolynomial> = BTreeMap::new();
    let mut out = TruncatedSymPoly::zero(vars);
    for alpha in compositions(n, vars, k) {
        let packed: Vec<usize> = alpha.iter().copied().filter(|&a| a > 0).collect();
        if !memo.contains_key(&packed) {
            let mut c = TPolynomial::zero();
            for q in enumerate_semistandard(l, k, &packed)? {
                let d = match mode {
                    Weighting::Charge => charge_any_weight(&q)? as usize,
                    Weighting::Count => 0,
                };
                c = &c + &TPolynomial::monomial(d, 1);
            }
            memo.insert(packed.clone(), c);
        }
        out.add_term(alpha, &memo[&packed]);
    }
    Ok(out)
}

/// `Σ t^{charge}` over the diamond classes of paths from `λ` to `μ`.
pub fn branching_poly(l: &Partition, mu: &Partition, k: usize) -> Result<TPolynomial> {
    let paths = enumerate_paths(l, mu, k)?;
    let mut p = TPolynomial::zero();
    for c in equivalence_classes(&paths)? {
        p = &p + &TPolynomial::monomial(c.charge(), 1);
    }
    Ok(p)
}

/// The k-cores reachable from shapes with k-boundary of size `n`.
pub fn k_cores_of_boundary(k: usize, n: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for l in k_shapes_of_boundary(k, n)? {
        if l.is_p_core(k)? {
            out.push(l);
        }
    }
    Ok(out)
}

/// (k+1)-cores with k-boundary of size `n`.
pub fn weak_shapes(k: usize, n: usize) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for l in k_shapes_of_boundary(k, n)? {
        if l.is_p_core(k + 1)? {
            out.push(l);
        }
    }
    Ok(out)
}

/// Splits every letter of a weak tableau into single-residue steps, the
/// residues of a letter taken in cyclic runs `j, j+1, ...`, runs ordered from
/// right to left by the column of their leftmost cell.
pub fn standardize(t: &WeakTableau) -> Result<WeakTableau> {
    let k = t.k;
    let mut chain = vec![Partition::empty()];
    for i in 1..=t.letters() {
        let res = t.residues_of(i);
        let cells = t.letter_cells(i);
        let starts: Vec<usize> = res.iter().copied().filter(|&j| !res.contains(&((j + k) % (k + 1)))).collect();
        let mut runs: Vec<(usize, Vec<usize>)> = starts
            .into_iter()
            .map(|j| {
                let mut run = vec![j];
                while res.contains(&((run.last().unwrap() + 1) % (k + 1))) {
                    run.push((run.last().unwrap() + 1) % (k + 1));
                }
                let col = cells.iter().filter(|c| residue(**c, k) == j).map(|c| c.col).min().unwrap();
                (col, run)
            })
            .collect();
        runs.sort_by(|a, b| b.cmp(a));
        for j in runs.into_iter().flat_map(|(_, r)| r) {
            let cur = chain.last().unwrap();
            let add: BTreeSet<_> = cells.iter().copied().filter(|c| residue(*c, k) == j).collect();
            chain.push(cur.union_cells(&add)?);
        }
    }
    WeakTableau::from_chain(k, chain)
}
