//! Named verification sweeps.

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::Filling;
use crate::kshape::is_k_shape;
use crate::kshape_tableau::{
    chain_characterization, charge_cocharge_residual, charge_kshape, cocharge_kshape, enumerate_kshape_tableaux,
    per_letter_identity, KShapeTableau,
};
use crate::moves::MoveOrderKey;
use crate::partition::{partitions_of, Partition};
use crate::poset::{enumerate_paths, equivalence_classes, Poset};
use crate::pushout::{full_descent, weak_bijection_standard};
use crate::verify::classical::{classical_charge, standard_young_tableaux};
use crate::verify::{
    branching_poly, compositions, dual_kschur_truncated, k_cores_of_boundary, standardize, weak_shapes,
    TruncatedSymPoly, Weighting,
};
use crate::weak::{
    charge_any_weight, charge_dominant_semistandard, charge_standard, cocharge_standard, enumerate_semistandard,
    enumerate_standard, extract_words, sigma, word_charge, WeakTableau,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckMode {
    Theorem,
    Conjecture,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckParams {
    pub k_max: Option<usize>,
    pub n_max: Option<usize>,
    pub vars: Option<usize>,
}

pub struct CheckSpec {
    pub name: &'static str,
    pub mode: CheckMode,
    pub k_max: usize,
    pub n_max: usize,
    pub vars: usize,
    pub about: &'static str,
}

pub const CHECKS: &[CheckSpec] = &[
    CheckSpec { name: "worked-examples", mode: CheckMode::Theorem, k_max: 0, n_max: 0, vars: 0, about: "fixed k-shape, path and charge examples" },
    CheckSpec { name: "poset-fixture", mode: CheckMode::Theorem, k_max: 3, n_max: 5, vars: 0, about: "posets (k,N) = (2,4) and (3,5) against stored vertex and edge sets" },
    CheckSpec { name: "theorem-additivity", mode: CheckMode::Theorem, k_max: 7, n_max: 7, vars: 0, about: "charge and cocharge split along the weak bijection, 2 <= k <= n" },
    CheckSpec { name: "descent-classical", mode: CheckMode::Theorem, k_max: 0, n_max: 6, vars: 0, about: "sum of path charges over the full descent equals classical charge" },
    CheckSpec { name: "charge-cocharge-duality", mode: CheckMode::Theorem, k_max: 3, n_max: 6, vars: 0, about: "charge = n(n-1)/2 - cocharge - |interior| on k-shape tableaux, and per letter" },
    CheckSpec { name: "charge-level-stability", mode: CheckMode::Theorem, k_max: 4, n_max: 7, vars: 0, about: "k-shape charge of a k-tableau is the same at levels k and k+1" },
    CheckSpec { name: "tableau-characterization", mode: CheckMode::Theorem, k_max: 4, n_max: 7, vars: 0, about: "reverse-maximal chains ending at cores are exactly the standard k-tableaux" },
    CheckSpec { name: "large-k-classical", mode: CheckMode::Theorem, k_max: 0, n_max: 6, vars: 0, about: "for k >= n weak charge equals classical charge" },
    CheckSpec { name: "bijection-counting", mode: CheckMode::Theorem, k_max: 4, n_max: 7, vars: 0, about: "weak bijection is injective and both sides have equal size" },
    CheckSpec { name: "branching-t1", mode: CheckMode::Theorem, k_max: 3, n_max: 6, vars: 4, about: "branching of dual k-Schur functions at t = 1 modulo the ideal" },
    CheckSpec { name: "sigma-coxeter", mode: CheckMode::Conjecture, k_max: 3, n_max: 6, vars: 4, about: "sigma is well defined, involutive, satisfies Coxeter relations and preserves charge" },
    CheckSpec { name: "branching-generic-t", mode: CheckMode::Conjecture, k_max: 3, n_max: 6, vars: 4, about: "branching of dual k-Schur functions with t kept formal" },
    CheckSpec { name: "sigma-commutation", mode: CheckMode::Conjecture, k_max: 3, n_max: 6, vars: 4, about: "sigma commutes with the weak bijection through standardization" },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub name: String,
    pub mode: CheckMode,
    pub k_max: usize,
    pub n_max: usize,
    pub vars: usize,
    pub instances: usize,
    pub failures: usize,
    pub counterexamples: Vec<String>,
    pub notes: Vec<String>,
    pub passed: bool,
    pub wall_ms: u64,
}

impl VerificationReport {
    pub fn line(&self) -> String {
        let mode = match self.mode {
            CheckMode::Theorem => "theorem",
            CheckMode::Conjecture => "conjecture",
        };
        format!(
            "{} [{mode}] {}: {} instances, {} failures, {} ms",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.instances,
            self.failures,
            self.wall_ms
        )
    }
}

const MAX_EXAMPLES: usize = 10;

/// Outcome of one instance: `None` on success.
type Outcome = Result<Option<String>>;

#[derive(Default)]
struct Tally {
    instances: usize,
    failures: usize,
    examples: Vec<String>,
    notes: Vec<String>,
    kinds: BTreeMap<String, usize>,
}

impl Tally {
    fn record(&mut self, label: &str, o: Outcome) {
        self.instances += 1;
        let msg = match o {
            Ok(None) => return,
            Ok(Some(m)) => m,
            Err(e) => e.to_string(),
        };
        self.failures += 1;
        let kind = msg.split(':').next().unwrap_or_default().to_string();
        *self.kinds.entry(kind).or_default() += 1;
        if self.examples.len() < MAX_EXAMPLES {
            self.examples.push(format!("{label}: {msg}"));
        }
    }

    fn sweep<T: Sync>(&mut self, items: &[T], label: impl Fn(&T) -> String + Sync, f: impl Fn(&T) -> Outcome + Sync) {
        let out: Vec<(String, Outcome)> = items.par_iter().map(|x| (label(x), f(x))).collect();
        for (l, o) in out {
            self.record(&l, o);
        }
    }

    fn expect<T: PartialEq + std::fmt::Debug>(&mut self, label: &str, got: Result<T>, want: T) {
        let o = got.map(|g| if g == want { None } else { Some(format!("got {g:?}, expected {want:?}")) });
        self.record(label, o);
    }
}

fn fail_if(bad: bool, msg: impl FnOnce() -> String) -> Outcome {
    Ok(if bad { Some(msg()) } else { None })
}

pub fn run_check(name: &str, params: CheckParams) -> Result<VerificationReport> {
    let spec = CHECKS
        .iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::Domain(format!("unknown check {name:?}")))?;
    let k_max = params.k_max.unwrap_or(spec.k_max);
    let n_max = params.n_max.unwrap_or(spec.n_max);
    let vars = params.vars.unwrap_or(spec.vars);
    let start = Instant::now();
    let mut t = Tally::default();
    match name {
        "worked-examples" => worked_examples(&mut t),
        "poset-fixture" => poset_fixture(&mut t),
        "theorem-additivity" => theorem_additivity(&mut t, k_max, n_max)?,
        "descent-classical" => descent_classical(&mut t, n_max),
        "charge-cocharge-duality" => duality(&mut t, k_max, n_max)?,
        "charge-level-stability" => level_stability(&mut t, k_max, n_max)?,
        "tableau-characterization" => characterization(&mut t, k_max, n_max)?,
        "large-k-classical" => large_k(&mut t, n_max)?,
        "bijection-counting" => bijection_counting(&mut t, k_max, n_max)?,
        "branching-t1" => branching(&mut t, k_max, n_max, vars, Weighting::Count)?,
        "branching-generic-t" => branching(&mut t, k_max, n_max, vars, Weighting::Charge)?,
        "sigma-coxeter" => sigma_coxeter(&mut t, k_max, n_max, vars)?,
        "sigma-commutation" => sigma_commutation(&mut t, k_max, n_max, vars)?,
        _ => unreachable!(),
    }
    if spec.mode == CheckMode::Conjecture {
        let kinds: Vec<String> = t.kinds.iter().map(|(k, n)| format!("{k}: {n}")).collect();
        if !kinds.is_empty() {
            t.notes.push(format!("failure kinds: {}", kinds.join(", ")));
        }
    }
    Ok(VerificationReport {
        name: name.to_string(),
        mode: spec.mode,
        k_max,
        n_max,
        vars,
        instances: t.instances,
        failures: t.failures,
        counterexamples: t.examples,
        notes: t.notes,
        passed: t.failures == 0,
        wall_ms: start.elapsed().as_millis() as u64,
    })
}

fn p(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

fn path_charges(from: &str, to: &str, k: usize) -> Result<(Vec<usize>, Vec<usize>)> {
    let paths = enumerate_paths(&p(from), &p(to), k)?;
    let mut pc: Vec<usize> = paths.iter().map(|x| x.charge()).collect();
    pc.sort();
    let mut cc: Vec<usize> = equivalence_classes(&paths)?.iter().map(|c| c.charge()).collect();
    cc.sort();
    Ok((pc, cc))
}

fn worked_examples(t: &mut Tally) {
    let l = p("8,4,3,2,1,1,1");
    t.expect("k-shape (8,4,3,2,1,1,1) k=4", is_k_shape(&l, 4), true);
    t.expect("rs (8,4,3,2,1,1,1) k=4", Ok(l.row_shape(4)), vec![4, 2, 2, 1, 1, 1, 1]);
    t.expect("cs (8,4,3,2,1,1,1) k=4", Ok(l.col_shape(4)), vec![3, 2, 2, 1, 1, 1, 1, 1]);
    t.expect("k-shape (3,3,1) k=4", is_k_shape(&p("3,3,1"), 4), false);
    t.expect("paths (3,1,1)->(4,3,2,1) k=2", path_charges("3,1,1", "4,3,2,1", 2), (vec![2, 3], vec![2, 3]));
    t.expect("paths (3,2,1)->(4,2,1,1) k=3", path_charges("3,2,1", "4,2,1,1", 3), (vec![1, 1], vec![1]));
    let q = WeakTableau::parse(4, "1 2 3 5 7 9 10 / 4 6 10 / 5 7 / 8 / 10");
    t.expect("standard 4-tableau charge", q.as_ref().map_err(Clone::clone).and_then(charge_standard), 25);
    t.expect("standard 4-tableau cocharge", q.as_ref().map_err(Clone::clone).and_then(cocharge_standard), 16);
    let s = KShapeTableau::parse(4, "1 2 4 6 8 9 / 3 5 7 / 4 6 9 / 7 / 9");
    t.expect("k-shape tableau charge", s.as_ref().map_err(Clone::clone).and_then(charge_kshape), 16);
    t.expect("k-shape tableau cocharge", s.as_ref().map_err(Clone::clone).and_then(cocharge_kshape), 15);
    t.expect(
        "k-shape tableau duality",
        s.as_ref().map_err(Clone::clone).map(|s| (s.letters(), s.shape().k_interior(4).size())),
        (9, 5),
    );
    t.expect("k-shape tableau residual", s.as_ref().map_err(Clone::clone).and_then(charge_cocharge_residual), 0);
    let d = WeakTableau::parse(4, "1 1 2 3 4 4 5 5 6 / 2 3 5 5 6 / 3 4 7 / 5 6 / 6 / 7");
    let words = d.as_ref().map_err(Clone::clone).and_then(|d| {
        extract_words(d)?.iter().map(|w| word_charge(d, w)).collect::<Result<Vec<_>>>()
    });
    t.expect("dominant tableau word charges", words, vec![5, 7]);
    t.expect("dominant tableau weight", d.as_ref().map_err(Clone::clone).map(|d| d.weight.clone()), vec![2, 2, 2, 2, 2, 2, 1]);
    t.expect("dominant tableau charge", d.as_ref().map_err(Clone::clone).and_then(charge_dominant_semistandard), 12);
}

fn poset_fixture(t: &mut Tally) {
    let sorted = |v: &[&str]| {
        let mut x: Vec<Partition> = v.iter().map(|s| p(s)).collect();
        x.sort();
        x
    };
    let edges = |ps: &Poset| {
        let mut e: Vec<(String, String, char)> = ps
            .hasse_edges()
            .into_iter()
            .map(|m| (m.source.to_string(), m.target.to_string(), m.orientation.letter()))
            .collect();
        e.sort();
        e
    };
    let want = |v: &[(&str, &str, char)]| {
        let mut e: Vec<(String, String, char)> = v.iter().map(|(a, b, c)| (a.to_string(), b.to_string(), *c)).collect();
        e.sort();
        e
    };
    let small = Poset::build(2, 4);
    t.expect(
        "poset k=2 N=4 vertices",
        small.as_ref().map_err(Clone::clone).map(|ps| ps.vertices.clone()),
        sorted(&["2,2,1,1", "3,1,1", "4,2", "3,2,1,1", "4,2,1", "4,3,2,1"]),
    );
    t.expect(
        "poset k=2 N=4 edges",
        small.as_ref().map_err(Clone::clone).map(edges),
        want(&[
            ("2,2,1,1", "3,2,1,1", 'r'),
            ("3,1,1", "3,2,1,1", 'c'),
            ("3,1,1", "4,2,1", 'r'),
            ("4,2", "4,2,1", 'c'),
            ("3,2,1,1", "4,3,2,1", 'r'),
            ("4,2,1", "4,3,2,1", 'c'),
        ]),
    );
    let big = Poset::build(3, 5);
    t.expect(
        "poset k=3 N=5 vertices",
        big.as_ref().map_err(Clone::clone).map(|ps| ps.vertices.clone()),
        sorted(&["2,2,1,1,1", "3,1,1,1", "3,2,1", "4,1,1", "5,2", "3,2,1,1", "4,2,1", "3,2,2,1,1", "4,2,1,1", "5,3,1"]),
    );
    t.expect(
        "poset k=3 N=5 edges",
        big.as_ref().map_err(Clone::clone).map(edges),
        want(&[
            ("2,2,1,1,1", "3,2,2,1,1", 'r'),
            ("3,1,1,1", "3,2,1,1", 'r'),
            ("3,2,1", "3,2,1,1", 'c'),
            ("3,2,1", "4,2,1", 'r'),
            ("4,1,1", "4,2,1", 'c'),
            ("5,2", "5,3,1", 'c'),
            ("3,2,1,1", "3,2,2,1,1", 'c'),
            ("3,2,1,1", "4,2,1,1", 'r'),
            ("4,2,1", "4,2,1,1", 'c'),
            ("4,2,1", "5,3,1", 'r'),
        ]),
    );
}

fn standard_tableaux(k: usize, n: usize) -> Result<Vec<WeakTableau>> {
    let mut out = Vec::new();
    for l in weak_shapes(k, n)? {
        out.extend(enumerate_standard(&l, k)?);
    }
    Ok(out)
}

fn theorem_additivity(t: &mut Tally, k_max: usize, n_max: usize) -> Result<()> {
    let mut all = Vec::new();
    for n in 2..=n_max {
        for k in 2..=n.min(k_max) {
            all.extend(standard_tableaux(k, n)?);
        }
    }
    t.sweep(&all, |q| format!("k={} {}", q.k, q.filling()), |q| weak_bijection_standard(q).map(|_| None));
    Ok(())
}

fn all_syt(n_max: usize) -> Vec<Filling> {
    (1..=n_max).flat_map(|n| partitions_of(n).into_iter().flat_map(|l| standard_young_tableaux(&l))).collect()
}

fn descent_classical(t: &mut Tally, n_max: usize) {
    t.sweep(&all_syt(n_max), |f| f.to_string(), |f| {
        let r = full_descent(f)?;
        let n = f.max_letter();
        let c = classical_charge(f)?;
        fail_if(r.total_charge != c || r.total_cocharge != n * (n - 1) / 2 - c, || {
            format!("descent gives {}/{}, classical charge {c}", r.total_charge, r.total_cocharge)
        })
    });
}

fn duality(t: &mut Tally, k_max: usize, n_max: usize) -> Result<()> {
    let mut all = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            all.extend(enumerate_kshape_tableaux(n, k)?);
        }
    }
    t.sweep(&all, |s| format!("k={} {}", s.k, s.filling()), |s| {
        let r = charge_cocharge_residual(s)?;
        fail_if(r != 0 || !per_letter_identity(s)?, || format!("residual {r}"))
    });
    Ok(())
}

fn level_stability(t: &mut Tally, k_max: usize, n_max: usize) -> Result<()> {
    let mut all = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            all.extend(standard_tableaux(k, n)?);
        }
    }
    t.sweep(&all, |q| format!("k={} {}", q.k, q.filling()), |q| {
        let lo = KShapeTableau::from_chain(q.k, q.chain.clone())?;
        let hi = KShapeTableau::from_chain(q.k + 1, q.chain.clone())?;
        let v = [charge_kshape(&lo)?, charge_kshape(&hi)?, charge_standard(q)?];
        let w = [cocharge_kshape(&lo)?, cocharge_kshape(&hi)?, cocharge_standard(q)?];
        fail_if(v.iter().any(|&x| x != v[0]) || w.iter().any(|&x| x != w[0]), || {
            format!("charges {v:?}, cocharges {w:?}")
        })
    });
    Ok(())
}

fn characterization(t: &mut Tally, k_max: usize, n_max: usize) -> Result<()> {
    let mut cases = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            cases.push((k, n));
        }
    }
    t.sweep(&cases, |(k, n)| format!("k={k} n={n}"), |&(k, n)| {
        let mut from_chains = Vec::new();
        let mut lower = Vec::new();
        for s in enumerate_kshape_tableaux(n, k)? {
            let c = chain_characterization(&s.chain, k)?;
            if c.is_k_tableau {
                from_chains.push(s.chain.clone());
            }
            if c.is_km1_tableau {
                lower.push(s.chain);
            }
        }
        let mut direct: Vec<Vec<Partition>> = standard_tableaux(k, n)?.into_iter().map(|q| q.chain).collect();
        let mut direct_lower: Vec<Vec<Partition>> =
            k_cores_of_boundary(k, n)?.iter().map(|l| enumerate_standard(l, k - 1)).collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .map(|q| q.chain)
                .collect();
        from_chains.sort();
        direct.sort();
        lower.sort();
        direct_lower.sort();
        fail_if(from_chains != direct || lower != direct_lower, || {
            format!(
                "{} reverse-maximal vs {} k-tableaux, {} maximal vs {} (k-1)-tableaux",
                from_chains.len(),
                direct.len(),
                lower.len(),
                direct_lower.len()
            )
        })
    });
    Ok(())
}

fn large_k(t: &mut Tally, n_max: usize) -> Result<()> {
    t.sweep(&all_syt(n_max), |f| f.to_string(), |f| {
        let n = f.max_letter();
        let q = WeakTableau::from_filling(n.max(2), f)?;
        let (a, b) = (charge_standard(&q)?, classical_charge(f)? as i64);
        fail_if(a != b, || format!("weak {a}, classical {b}"))
    });
    let mut ss = Vec::new();
    for n in 1..=n_max {
        for l in partitions_of(n) {
            for m in partitions_of(n) {
                for f in crate::verify::classical::semistandard_young_tableaux(&l, m.parts()) {
                    ss.push(f);
                }
            }
        }
    }
    t.sweep(&ss, |f| f.to_string(), |f| {
        let n: usize = f.rows.iter().map(Vec::len).sum();
        let q = WeakTableau::from_filling(n.max(2), f)?;
        let (a, b) = (charge_any_weight(&q)?, classical_charge(f)? as i64);
        fail_if(a != b, || format!("weak {a}, classical {b}"))
    });
    Ok(())
}

fn bijection_counting(t: &mut Tally, k_max: usize, n_max: usize) -> Result<()> {
    let mut shapes = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            for l in weak_shapes(k, n)? {
                shapes.push((k, n, l));
            }
        }
    }
    t.sweep(&shapes, |(k, _, l)| format!("k={k} shape {l}"), |(k, n, l)| {
        let k = *k;
        let tabs = enumerate_standard(l, k)?;
        let mut rhs = 0usize;
        let mut class_ids: HashMap<Partition, HashMap<Vec<MoveOrderKey>, usize>> = HashMap::new();
        for mu in k_cores_of_boundary(k, *n)? {
            let classes = equivalence_classes(&enumerate_paths(l, &mu, k)?)?;
            if classes.is_empty() {
                continue;
            }
            rhs += enumerate_standard(&mu, k - 1)?.len() * classes.len();
            let ids = classes
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.members.iter().map(move |m| (m.order_key(), i)))
                .collect();
            class_ids.insert(mu, ids);
        }
        let mut images = BTreeMap::new();
        for q in &tabs {
            let b = weak_bijection_standard(q)?;
            let id = class_ids
                .get(b.path.end())
                .and_then(|m| m.get(&b.path.order_key()))
                .ok_or_else(|| Error::Integrity(format!("path {} not enumerated", b.path.text())))?;
            if let Some(other) = images.insert((b.lower.clone(), *id), q.filling()) {
                return Ok(Some(format!("{} and {} have the same image", other, q.filling())));
            }
        }
        fail_if(tabs.len() != rhs, || format!("{} tableaux, {} pairs", tabs.len(), rhs))
    });
    Ok(())
}

fn branching(t: &mut Tally, k_max: usize, n_max: usize, vars: usize, mode: Weighting) -> Result<()> {
    let mut shapes = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            for l in weak_shapes(k, n)? {
                shapes.push((k, n, l));
            }
        }
    }
    t.sweep(&shapes, |(k, _, l)| format!("k={k} shape {l}"), |(k, n, l)| {
        let k = *k;
        let rhs = dual_kschur_truncated(l, k, vars, mode)?.reduce(k - 1);
        let mut lhs = TruncatedSymPoly::zero(vars);
        for mu in k_cores_of_boundary(k, *n)? {
            let mut b = branching_poly(l, &mu, k)?;
            if mode == Weighting::Count {
                b = crate::verify::TPolynomial::monomial(0, b.eval(1));
            }
            if b.is_zero() {
                continue;
            }
            lhs = &lhs + &dual_kschur_truncated(&mu, k - 1, vars, mode)?.scale(&b);
        }
        let lhs = lhs.reduce(k - 1);
        if lhs == rhs {
            return Ok(None);
        }
        let bad: Vec<String> = rhs
            .terms
            .keys()
            .chain(lhs.terms.keys())
            .filter(|e| lhs.coeff(e) != rhs.coeff(e))
            .take(3)
            .map(|e| format!("x^{e:?}: {} vs {}", lhs.coeff(e), rhs.coeff(e)))
            .collect();
        Ok(Some(bad.join("; ")))
    });
    Ok(())
}

/// Weak tableaux of every shape with boundary `n` and every `k`-bounded
/// weight with positive entries that fits in `vars` letters.
fn semistandard_tableaux(k: usize, n: usize, vars: usize) -> Result<Vec<WeakTableau>> {
    let mut out = Vec::new();
    let weights: Vec<Vec<usize>> =
        compositions(n, vars, k).into_iter().filter(|w| w.iter().all(|&a| a > 0) || n == 0).collect();
    for l in weak_shapes(k, n)? {
        for w in &weights {
            out.extend(enumerate_semistandard(&l, k, w)?);
        }
    }
    Ok(out)
}

fn sigma_coxeter(t: &mut Tally, k_max: usize, n_max: usize, vars: usize) -> Result<()> {
    let mut all = Vec::new();
    for k in 2..=k_max {
        for n in 1..=n_max {
            all.extend(semistandard_tableaux(k, n, vars)?);
        }
    }
    t.sweep(&all, |q| format!("k={} {}", q.k, q.filling()), |q| {
        let m = q.letters();
        let c = charge_any_weight(q)?;
        for i in 1..m {
            let s = sigma(q, i)?;
            let mut w = q.weight.clone();
            w.swap(i - 1, i);
            if s.weight != w {
                return Ok(Some(format!("sigma_{i} gives weight {:?}", s.weight)));
            }
            if sigma(&s, i)? != *q {
                return Ok(Some(format!("sigma_{i} is not an involution")));
            }
            if charge_any_weight(&s)? != c {
                return Ok(Some(format!("sigma_{i} changes charge")));
            }
            for j in i + 1..m {
                let (a, b) = if j == i + 1 {
                    (sigma(&sigma(&sigma(q, i)?, j)?, i)?, sigma(&sigma(&sigma(q, j)?, i)?, j)?)
                } else {
                    (sigma(&sigma(q, i)?, j)?, sigma(&sigma(q, j)?, i)?)
                };
                if a != b {
                    return Ok(Some(format!("relation between sigma_{i} and sigma_{j} fails")));
                }
            }
        }
        Ok(None)
    });
    Ok(())
}

/// The image of a semistandard tableau under standardization, the weak
/// bijection and regrouping of the letters.
fn bijection_through_std(q: &WeakTableau) -> Result<std::result::Result<(WeakTableau, crate::poset::Path), String>> {
    let std = standardize(q).map_err(|e| Error::Integrity(format!("standardization: {e}")))?;
    let b = weak_bijection_standard(&std)?;
    let mut chain = vec![Partition::empty()];
    let mut at = 0;
    for &a in &q.weight {
        at += a;
        chain.push(b.lower[at].clone());
    }
    Ok(match WeakTableau::from_chain(q.k - 1, chain) {
        Ok(lo) => Ok((lo, b.path)),
        Err(e) => Err(format!("image does not regroup: {} ({e})", b.lower_filling())),
    })
}

fn sigma_commutation(t: &mut Tally, k_max: usize, n_max: usize, vars: usize) -> Result<()> {
    let mut all = Vec::new();
    for k in 3..=k_max {
        for n in 1..=n_max {
            all.extend(semistandard_tableaux(k, n, vars)?);
        }
    }
    t.notes.push("levels k >= 3 only; the level below must carry its own sigma".into());
    t.sweep(&all, |q| format!("k={} {}", q.k, q.filling()), |q| {
        let (lo, path) = match bijection_through_std(q)? {
            Ok(x) => x,
            Err(m) => return Ok(Some(m)),
        };
        for i in 1..q.letters() {
            if q.weight[i - 1] == q.weight[i] {
                continue;
            }
            let (lo2, path2) = match bijection_through_std(&sigma(q, i)?)? {
                Ok(x) => x,
                Err(m) => return Ok(Some(m)),
            };
            if path2.start != path.start || path2.end() != path.end() {
                return Ok(Some(format!("path endpoints: sigma_{i} moves them")));
            }
            let classes = equivalence_classes(&enumerate_paths(&path.start, path.end(), q.k)?)?;
            let same = classes.iter().any(|c| {
                c.members.iter().any(|m| m.order_key() == path.order_key())
                    && c.members.iter().any(|m| m.order_key() == path2.order_key())
            });
            if !same {
                return Ok(Some(format!("path class: sigma_{i} changes it")));
            }
            if sigma(&lo, i)? != lo2 {
                return Ok(Some(format!("image: sigma_{i} does not commute on {}", lo.filling())));
            }
        }
        Ok(None)
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_check() {
        assert!(run_check("nope", CheckParams::default()).is_err());
    }

    #[test]
    fn small_checks_pass() {
        for name in ["worked-examples", "poset-fixture"] {
            let r = run_check(name, CheckParams::default()).unwrap();
            assert!(r.passed, "{:?}", r.counterexamples);
        }
        let small = CheckParams { k_max: Some(3), n_max: Some(4), vars: Some(3) };
        for name in ["theorem-additivity", "charge-cocharge-duality", "bijection-counting", "branching-t1"] {
            let r = run_check(name, small).unwrap();
            assert!(r.passed && r.instances > 0, "{name}: {:?}", r.counterexamples);
        }
    }
}
