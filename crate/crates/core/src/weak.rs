//! Weak tableaux: chains of (k+1)-cores, their charge and cocharge, and the
//! symmetric group action used to reach dominant weight.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, integrity, Error, Result};
use crate::filling::Filling;
use crate::partition::{diag_count, partitions_between, residue, Cell, Partition};

/// `outer / inner` is a horizontal strip, as integer sequences.
pub fn is_horizontal_strip(outer: &[usize], inner: &[usize]) -> bool {
    let g = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let n = outer.len().max(inner.len());
    (0..n).all(|i| g(inner, i) <= g(outer, i) && (i == 0 || g(outer, i) <= g(inner, i - 1)))
}

pub fn is_vertical_strip(outer: &[usize], inner: &[usize]) -> bool {
    let g = |v: &[usize], i: usize| v.get(i).copied().unwrap_or(0);
    let n = outer.len().max(inner.len());
    (0..n).all(|i| g(inner, i) <= g(outer, i) && g(outer, i) <= g(inner, i) + 1)
}

/// Size of the step `from ⊆ to` between (k+1)-cores if it is a valid weak
/// tableau step, i.e. the row profile grows by a horizontal strip and the
/// column profile by a vertical strip of the same size.
pub fn weak_step_size(from: &Partition, to: &Partition, k: usize) -> Option<usize> {
    if !to.contains_partition(from) {
        return None;
    }
    let (r0, r1) = (from.row_shape(k), to.row_shape(k));
    let (c0, c1) = (from.col_shape(k), to.col_shape(k));
    if !is_horizontal_strip(&r1, &r0) || !is_vertical_strip(&c1, &c0) {
        return None;
    }
    let (a, b) = (r1.iter().sum::<usize>() - r0.iter().sum::<usize>(), c1.iter().sum::<usize>() - c0.iter().sum::<usize>());
    (a == b).then_some(a)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeakTableau {
    pub k: usize,
    /// `∅ = λ^(0) ⊆ ... ⊆ λ^(N)`.
    pub chain: Vec<Partition>,
    pub weight: Vec<usize>,
}

impl WeakTableau {
    pub fn from_chain(k: usize, chain: Vec<Partition>) -> Result<Self> {
        if k < 1 {
            return domain("k must be positive");
        }
        if chain.first().map(|p| !p.is_empty()).unwrap_or(true) {
            return domain("a weak tableau chain starts at the empty partition");
        }
        let mut weight = Vec::with_capacity(chain.len() - 1);
        for (i, w) in chain.windows(2).enumerate() {
            if !w[1].is_p_core(k + 1)? {
                return domain(format!("{} is not a {}-core", w[1], k + 1));
            }
            let a = weak_step_size(&w[0], &w[1], k)
                .ok_or_else(|| Error::Domain(format!("step {} ({} to {}) is not a weak strip", i + 1, w[0], w[1])))?;
            let res: BTreeSet<usize> = w[1].skew_cells(&w[0]).iter().map(|c| residue(*c, k)).collect();
            if res.len() != a {
                return integrity(format!("letter {} has {} residues but weight {a}", i + 1, res.len()));
            }
            weight.push(a);
        }
        Ok(WeakTableau { k, chain, weight })
    }

    pub fn from_filling(k: usize, f: &Filling) -> Result<Self> {
        WeakTableau::from_chain(k, f.chain()?)
    }

    pub fn parse(k: usize, s: &str) -> Result<Self> {
        WeakTableau::from_filling(k, &s.parse()?)
    }

    pub fn filling(&self) -> Filling {
        Filling::from_chain(&self.chain).expect("valid chain")
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("chain is nonempty")
    }

    pub fn letters(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn letter_cells(&self, n: usize) -> Vec<Cell> {
        self.chain[n].skew_cells(&self.chain[n - 1])
    }

    pub fn residues_of(&self, n: usize) -> BTreeSet<usize> {
        self.letter_cells(n).iter().map(|c| residue(*c, self.k)).collect()
    }

    /// Uppermost cell of letter `n`.
    pub fn up(&self, n: usize) -> Cell {
        uppermost(&self.letter_cells(n))
    }

    /// Lowermost cell of letter `n`.
    pub fn down(&self, n: usize) -> Cell {
        lowermost(&self.letter_cells(n))
    }

    pub fn is_standard(&self) -> bool {
        self.chain.windows(2).all(|w| {
            let cells = w[1].skew_cells(&w[0]);
            let rows: BTreeSet<usize> = cells.iter().map(|c| c.row).collect();
            let cols: BTreeSet<usize> = cells.iter().map(|c| c.col).collect();
            rows.len() == cells.len()
                && cols.len() == cells.len()
                && w[1].boundary_size(self.k) == w[0].boundary_size(self.k) + 1
        })
    }

    pub fn is_dominant(&self) -> bool {
        self.weight.windows(2).all(|w| w[0] >= w[1])
    }
}

fn uppermost(cells: &[Cell]) -> Cell {
    *cells.iter().max_by_key(|c| (c.row, std::cmp::Reverse(c.col))).expect("letter occupies a cell")
}

fn lowermost(cells: &[Cell]) -> Cell {
    *cells.iter().min_by_key(|c| (c.row, c.col)).expect("letter occupies a cell")
}

/// Per-letter charge from a sequence of up markers.
fn charge_from_markers(core: &Partition, ups: &[Cell], k: usize) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(ups.len());
    for (i, &b) in ups.iter().enumerate() {
        if i == 0 {
            out.push(0);
            continue;
        }
        let prev = ups[i - 1];
        let last = out[i - 1];
        let v = if prev.row >= b.row {
            last + diag_count(core, prev, b, residue(prev, k), k)? as i64 + 1
        } else {
            last - diag_count(core, b, prev, residue(b, k), k)? as i64
        };
        out.push(v);
    }
    Ok(out)
}

fn cocharge_from_markers(core: &Partition, downs: &[Cell], k: usize) -> Result<Vec<i64>> {
    let mut out = Vec::with_capacity(downs.len());
    for (i, &b) in downs.iter().enumerate() {
        if i == 0 {
            out.push(0);
            continue;
        }
        let prev = downs[i - 1];
        let last = out[i - 1];
        let v = if prev.row >= b.row {
            last - diag_count(core, prev, b, residue(prev, k), k)? as i64
        } else {
            last + diag_count(core, b, prev, residue(b, k), k)? as i64 + 1
        };
        out.push(v);
    }
    Ok(out)
}

fn require_standard(t: &WeakTableau) -> Result<()> {
    if !t.is_standard() {
        return domain("charge_standard needs a standard weak tableau");
    }
    Ok(())
}

pub fn charge_standard_letters(t: &WeakTableau) -> Result<Vec<i64>> {
    require_standard(t)?;
    let ups: Vec<Cell> = (1..=t.letters()).map(|n| t.up(n)).collect();
    charge_from_markers(t.shape(), &ups, t.k)
}

pub fn cocharge_standard_letters(t: &WeakTableau) -> Result<Vec<i64>> {
    require_standard(t)?;
    let downs: Vec<Cell> = (1..=t.letters()).map(|n| t.down(n)).collect();
    cocharge_from_markers(t.shape(), &downs, t.k)
}

pub fn charge_standard(t: &WeakTableau) -> Result<i64> {
    Ok(charge_standard_letters(t)?.iter().sum())
}

pub fn cocharge_standard(t: &WeakTableau) -> Result<i64> {
    Ok(cocharge_standard_letters(t)?.iter().sum())
}

/// One extracted word: `(letter, residue)` pairs starting at letter 1.
pub type Word = Vec<(usize, usize)>;

/// Splits a dominant-weight tableau into its standard words.
pub fn extract_words(t: &WeakTableau) -> Result<Vec<Word>> {
    if !t.is_dominant() {
        return domain(format!("weight {:?} is not dominant", t.weight));
    }
    let k = t.k;
    let mut avail: Vec<BTreeSet<usize>> = (1..=t.letters()).map(|n| t.residues_of(n)).collect();
    let a1 = t.weight.first().copied().unwrap_or(0);
    let mut words = Vec::with_capacity(a1);
    for w in 0..a1 {
        // the remaining 1s sit in the bottom row with residues 0..a1
        let start = a1 - 1 - w;
        if !avail[0].remove(&start) {
            return integrity(format!("letter 1 lacks residue {start}"));
        }
        let mut word = vec![(1, start)];
        let mut j = start;
        for n in 2..=t.letters() {
            let opts = &avail[n - 1];
            if opts.is_empty() {
                break;
            }
            let best = opts
                .iter()
                .copied()
                .filter(|&x| x != j)
                .max_by_key(|&x| (x + 2 * (k + 1) - j - 1) % (k + 1))
                .ok_or_else(|| Error::Integrity(format!("letter {n} only offers residue {j}")))?;
            avail[n - 1].remove(&best);
            word.push((n, best));
            j = best;
        }
        words.push(word);
    }
    if avail.iter().any(|a| !a.is_empty()) {
        return integrity("letters left over after word extraction");
    }
    Ok(words)
}

pub fn word_charge(t: &WeakTableau, word: &Word) -> Result<i64> {
    let ups: Vec<Cell> = word
        .iter()
        .map(|&(n, j)| {
            let cells: Vec<Cell> = t.letter_cells(n).into_iter().filter(|c| residue(*c, t.k) == j).collect();
            uppermost(&cells)
        })
        .collect();
    Ok(charge_from_markers(t.shape(), &ups, t.k)?.iter().sum())
}

pub fn charge_dominant_semistandard(t: &WeakTableau) -> Result<i64> {
    let mut total = 0;
    for w in extract_words(t)? {
        total += word_charge(t, &w)?;
    }
    Ok(total)
}

/// The involution swapping the weights of letters `i` and `i + 1`.
pub fn sigma(t: &WeakTableau, i: usize) -> Result<WeakTableau> {
    let n = t.letters();
    if i < 1 || i >= n {
        return domain(format!("sigma index {i} out of range 1..{n}"));
    }
    let k = t.k;
    let f = t.filling();
    let (a, b) = (i, i + 1);
    let a_res: BTreeSet<usize> = t.residues_of(a);
    let b_res: BTreeSet<usize> = t.residues_of(b);
    let mut word: Vec<(usize, bool, usize)> = Vec::new();
    for &j in &a_res {
        word.push((2 * j + 1, false, j));
    }
    for &j in &b_res {
        let floor = t
            .letter_cells(b)
            .iter()
            .filter(|c| residue(**c, k) == j)
            .any(|c| c.row == 1 || f.get(Cell::new(c.row - 1, c.col)) != Some(a));
        let jt = if floor { j } else { (j + 1) % (k + 1) };
        word.push((2 * jt, true, jt));
    }
    word.sort();
    // bracket b̃ (open) against a (close)
    let mut paired = vec![false; word.len()];
    let mut stack = Vec::new();
    for (p, &(_, is_b, _)) in word.iter().enumerate() {
        if is_b {
            stack.push(p);
        } else if let Some(q) = stack.pop() {
            paired[p] = true;
            paired[q] = true;
        }
    }
    let free: Vec<usize> = (0..word.len()).filter(|&p| !paired[p]).collect();
    let s = free.iter().filter(|&&p| word[p].1).count();
    let mut new_a: Vec<usize> = (0..word.len()).filter(|&p| paired[p] && !word[p].1).map(|p| word[p].2).collect();
    new_a.extend(free.iter().take(s).map(|&p| word[p].2));
    let new_set: BTreeSet<usize> = new_a.iter().copied().collect();
    if new_set.len() != new_a.len() {
        return integrity(format!("sigma_{i}: repeated residue among new letters {a}"));
    }
    let (lo, hi) = (&t.chain[i - 1], &t.chain[i + 1]);
    let (wa, wb) = (t.weight[i - 1], t.weight[i]);
    let cands: Vec<Partition> = partitions_between(lo, hi)
        .into_iter()
        .filter(|nu| {
            nu.skew_cells(lo).iter().map(|c| residue(*c, k)).collect::<BTreeSet<_>>() == new_set
                && nu.is_p_core(k + 1).unwrap_or(false)
                && weak_step_size(lo, nu, k) == Some(wb)
                && weak_step_size(nu, hi, k) == Some(wa)
        })
        .collect();
    if cands.len() != 1 {
        return integrity(format!(
            "sigma_{i} on {}: {} candidate shapes for residues {:?}",
            f,
            cands.len(),
            new_set
        ));
    }
    let mut chain = t.chain.clone();
    chain[i] = cands.into_iter().next().unwrap();
    WeakTableau::from_chain(k, chain)
}

/// Sorts the weight into dominant order with σ at the smallest ascent,
/// returning the tableau and the indices used.
pub fn to_dominant(t: &WeakTableau) -> Result<(WeakTableau, Vec<usize>)> {
    let mut cur = t.clone();
    let mut used = Vec::new();
    while let Some(p) = cur.weight.windows(2).position(|w| w[0] < w[1]) {
        cur = sigma(&cur, p + 1)?;
        used.push(p + 1);
    }
    Ok((cur, used))
}

pub fn charge_any_weight(t: &WeakTableau) -> Result<i64> {
    if t.weight.iter().any(|&a| a > t.k) {
        return domain(format!("weight {:?} is not {}-bounded", t.weight, t.k));
    }
    charge_dominant_semistandard(&to_dominant(t)?.0)
}

/// All (k+1)-cores contained in `shape`.
pub fn cores_inside(shape: &Partition, k: usize) -> Vec<Partition> {
    partitions_between(&Partition::empty(), shape)
        .into_iter()
        .filter(|p| p.is_p_core(k + 1).unwrap_or(false))
        .collect()
}

pub fn enumerate_standard(shape: &Partition, k: usize) -> Result<Vec<WeakTableau>> {
    if !shape.is_p_core(k + 1)? {
        return domain(format!("{shape} is not a {}-core", k + 1));
    }
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    standard_rec(shape, k, &mut chain, &mut out)?;
    Ok(out)
}

fn standard_rec(shape: &Partition, k: usize, chain: &mut Vec<Partition>, out: &mut Vec<WeakTableau>) -> Result<()> {
    let cur = chain.last().unwrap().clone();
    if &cur == shape {
        out.push(WeakTableau::from_chain(k, chain.clone())?);
        return Ok(());
    }
    let corners: Vec<Cell> = cur.addable_corners().into_iter().filter(|c| shape.contains(*c)).collect();
    let db = cur.boundary_size(k);
    for mask in 1u32..(1 << corners.len()) {
        let sub: BTreeSet<Cell> = (0..corners.len()).filter(|i| mask >> i & 1 == 1).map(|i| corners[i]).collect();
        let next = cur.union_cells(&sub)?;
        if !next.is_p_core(k + 1)? || next.boundary_size(k) != db + 1 {
            continue;
        }
        if sub.iter().map(|c| residue(*c, k)).collect::<BTreeSet<_>>().len() != 1 {
            return integrity(format!("standard step {cur} -> {next} mixes residues"));
        }
        chain.push(next);
        standard_rec(shape, k, chain, out)?;
        chain.pop();
    }
    Ok(())
}

/// Weak tableaux of the given shape and weight (zeros allowed).
pub fn enumerate_semistandard(shape: &Partition, k: usize, weight: &[usize]) -> Result<Vec<WeakTableau>> {
    if !shape.is_p_core(k + 1)? {
        return domain(format!("{shape} is not a {}-core", k + 1));
    }
    let cores = cores_inside(shape, k);
    enumerate_semistandard_in(shape, k, weight, &cores)
}

pub fn enumerate_semistandard_in(
    shape: &Partition,
    k: usize,
    weight: &[usize],
    cores: &[Partition],
) -> Result<Vec<WeakTableau>> {
    let mut out = Vec::new();
    if weight.iter().sum::<usize>() != shape.boundary_size(k) {
        return Ok(out);
    }
    let mut chain = vec![Partition::empty()];
    fn rec(
        shape: &Partition,
        k: usize,
        weight: &[usize],
        cores: &[Partition],
        chain: &mut Vec<Partition>,
        out: &mut Vec<WeakTableau>,
    ) -> Result<()> {
        let i = chain.len() - 1;
        let cur = chain.last().unwrap().clone();
        if i == weight.len() {
            if &cur == shape {
                out.push(WeakTableau::from_chain(k, chain.clone())?);
            }
            return Ok(());
        }
        for nu in cores {
            if nu.contains_partition(&cur) && weak_step_size(&cur, nu, k) == Some(weight[i]) {
                chain.push(nu.clone());
                rec(shape, k, weight, cores, chain, out)?;
                chain.pop();
            }
        }
        Ok(())
    }
    rec(shape, k, weight, cores, &mut chain, &mut out)?;
    Ok(out)
}
