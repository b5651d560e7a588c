//! Covers, standard k-shape tableaux, k-connected rows and the k-shape
//! charge and cocharge.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::filling::Filling;
use crate::kshape::{
    addable_below, addable_above, addable_chain_below, classify_string, is_k_shape, removable_above,
    removable_below, StringKind, StringOfCells,
};
use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cover {
    pub inner: Partition,
    pub outer: Partition,
    pub string: StringOfCells,
}

impl Cover {
    pub fn new(inner: &Partition, outer: &Partition, k: usize) -> Result<Cover> {
        if !is_k_shape(inner, k)? || !is_k_shape(outer, k)? {
            return domain(format!("{inner} -> {outer}: both ends of a cover must be {k}-shapes"));
        }
        let s = classify_string(inner, outer, k)?;
        if s.kind != StringKind::Cover {
            return domain(format!("{outer}/{inner} is a {:?} string, not a cover", s.kind));
        }
        Ok(Cover { inner: inner.clone(), outer: outer.clone(), string: s })
    }

    pub fn cells(&self) -> &[Cell] {
        &self.string.cells
    }

    pub fn len(&self) -> usize {
        self.string.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.string.cells.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverStatus {
    pub continues_below: bool,
    pub continues_above: bool,
    pub reverse_below: bool,
    pub reverse_above: bool,
    pub maximal: bool,
    pub reverse_maximal: bool,
}

pub fn cover_status(c: &Cover, k: usize) -> CoverStatus {
    let top = c.string.top();
    let bot = c.string.bottom();
    let continues_below = addable_below(&c.inner, bot, k).is_some();
    let continues_above = addable_above(&c.inner, top, k).is_some();
    let reverse_below = removable_below(&c.outer, bot, k).is_some();
    let reverse_above = removable_above(&c.outer, top, k).is_some();
    CoverStatus {
        continues_below,
        continues_above,
        reverse_below,
        reverse_above,
        maximal: !continues_below && !continues_above,
        reverse_maximal: !reverse_below && !reverse_above,
    }
}

/// All covers out of a k-shape.
pub fn covers_from(l: &Partition, k: usize) -> Result<Vec<Cover>> {
    let mut out = Vec::new();
    for t in l.addable_corners() {
        let mut chain = vec![t];
        chain.extend(addable_chain_below(l, t, k));
        for ell in 1..=chain.len() {
            let mu = l.union_cells(&chain[..ell].iter().copied().collect())?;
            if let Ok(c) = Cover::new(l, &mu, k) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct KShapeTableau {
    pub k: usize,
    pub chain: Vec<Partition>,
}

impl KShapeTableau {
    pub fn from_chain(k: usize, chain: Vec<Partition>) -> Result<Self> {
        if chain.first().map(|p| !p.is_empty()).unwrap_or(true) {
            return domain("a k-shape tableau starts at the empty partition");
        }
        for w in chain.windows(2) {
            Cover::new(&w[0], &w[1], k)?;
        }
        Ok(KShapeTableau { k, chain })
    }

    pub fn parse(k: usize, s: &str) -> Result<Self> {
        let f: Filling = s.parse()?;
        KShapeTableau::from_chain(k, f.chain()?)
    }

    pub fn filling(&self) -> Filling {
        Filling::from_chain(&self.chain).expect("valid chain")
    }

    pub fn letters(&self) -> usize {
        self.chain.len() - 1
    }

    pub fn shape(&self) -> &Partition {
        self.chain.last().expect("nonempty chain")
    }

    pub fn cover(&self, n: usize) -> Cover {
        Cover::new(&self.chain[n - 1], &self.chain[n], self.k).expect("validated on construction")
    }

    pub fn letter_cells(&self, n: usize) -> Vec<Cell> {
        self.chain[n].skew_cells(&self.chain[n - 1])
    }

    pub fn up(&self, n: usize) -> Cell {
        *self.letter_cells(n).iter().max_by_key(|c| c.row).expect("nonempty cover")
    }

    pub fn down(&self, n: usize) -> Cell {
        *self.letter_cells(n).iter().min_by_key(|c| c.row).expect("nonempty cover")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCharacterization {
    pub is_k_tableau: bool,
    pub is_km1_tableau: bool,
}

pub fn chain_characterization(chain: &[Partition], k: usize) -> Result<ChainCharacterization> {
    let mut rev = true;
    let mut max = true;
    for w in chain.windows(2) {
        let st = cover_status(&Cover::new(&w[0], &w[1], k)?, k);
        rev &= st.reverse_maximal;
        max &= st.maximal;
    }
    let last = chain.last().cloned().unwrap_or_default();
    Ok(ChainCharacterization { is_k_tableau: rev && last.is_p_core(k + 1)?, is_km1_tableau: max })
}

/// Every standard k-shape tableau with `n` letters.
pub fn enumerate_kshape_tableaux(n: usize, k: usize) -> Result<Vec<KShapeTableau>> {
    let mut out = Vec::new();
    let mut chain = vec![Partition::empty()];
    fn rec(n: usize, k: usize, chain: &mut Vec<Partition>, out: &mut Vec<KShapeTableau>) -> Result<()> {
        if chain.len() == n + 1 {
            out.push(KShapeTableau { k, chain: chain.clone() });
            return Ok(());
        }
        let cur = chain.last().unwrap().clone();
        for c in covers_from(&cur, k)? {
            chain.push(c.outer);
            rec(n, k, chain, out)?;
            chain.pop();
        }
        Ok(())
    }
    rec(n, k, &mut chain, &mut out)?;
    Ok(out)
}

/// For each row with an addable corner, the k-connected row below it (if
/// any) and whether the connection is contiguous.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedRows {
    pub k: usize,
    pub below: BTreeMap<usize, Option<(usize, bool)>>,
}

impl ConnectedRows {
    pub fn new(l: &Partition, k: usize) -> ConnectedRows {
        let corners = l.addable_corners();
        let mut below = BTreeMap::new();
        for a in &corners {
            let next = corners
                .iter()
                .filter(|b| b.row < a.row && a.distance(b) <= k as i64 + 1)
                .min_by_key(|b| b.row)
                .map(|b| (b.row, a.distance(b) >= k as i64));
            below.insert(a.row, next);
        }
        ConnectedRows { k, below }
    }

    /// Rows `r = r_1 > r_2 > ...` obtained by following the connections.
    pub fn sequence(&self, r: usize) -> Result<Vec<usize>> {
        if !self.below.contains_key(&r) {
            return domain(format!("row {r} has no addable corner"));
        }
        let mut out = vec![r];
        let mut cur = r;
        while let Some(Some((nx, _))) = self.below.get(&cur) {
            out.push(*nx);
            cur = *nx;
        }
        Ok(out)
    }

    /// Length of the connected sequence from `r` down to `r2`, with each
    /// endpoint counted or not.
    pub fn interval(&self, r: usize, r2: usize, include_r: bool, include_r2: bool) -> Result<usize> {
        let seq = self.sequence(r)?;
        let mut n = seq.iter().filter(|&&x| if include_r2 { x >= r2 } else { x > r2 }).count();
        if !include_r && n > 0 {
            n -= 1;
        }
        Ok(n)
    }
}

pub fn charge_kshape_letters(t: &KShapeTableau) -> Result<Vec<i64>> {
    let mut out = vec![0i64];
    for n in 2..=t.letters() {
        let rows = ConnectedRows::new(&t.chain[n - 1], t.k);
        let r = t.up(n - 1).row + 1;
        let r2 = t.up(n).row;
        let last = out[n - 2];
        let v = if r >= r2 {
            last + rows.interval(r, r2, true, false)? as i64
        } else {
            last - rows.interval(r2, r, false, true)? as i64
        };
        out.push(v);
    }
    if t.letters() == 0 {
        out.clear();
    }
    Ok(out)
}

pub fn cocharge_kshape_letters(t: &KShapeTableau) -> Result<Vec<i64>> {
    let mut out = vec![0i64];
    for n in 2..=t.letters() {
        let rows = ConnectedRows::new(&t.chain[n - 1], t.k);
        let r = t.down(n - 1).row + 1;
        let r2 = t.down(n).row;
        let last = out[n - 2];
        let v = if r > r2 {
            last - rows.interval(r, r2, false, false)? as i64
        } else {
            last + rows.interval(r2, r, true, true)? as i64
        };
        out.push(v);
    }
    if t.letters() == 0 {
        out.clear();
    }
    Ok(out)
}

pub fn charge_kshape(t: &KShapeTableau) -> Result<i64> {
    Ok(charge_kshape_letters(t)?.iter().sum())
}

pub fn cocharge_kshape(t: &KShapeTableau) -> Result<i64> {
    Ok(cocharge_kshape_letters(t)?.iter().sum())
}

/// `charge(T) - (n(n-1)/2 - cocharge(T) - |Int^k(λ)|)`, which should vanish.
pub fn charge_cocharge_residual(t: &KShapeTableau) -> Result<i64> {
    let n = t.letters() as i64;
    let int = t.shape().k_interior(t.k).size() as i64;
    Ok(charge_kshape(t)? - (n * (n - 1) / 2 - cocharge_kshape(t)? - int))
}

/// Checks `ch(n) = n - cocharge(n) - |c_n|` letter by letter.
pub fn per_letter_identity(t: &KShapeTableau) -> Result<bool> {
    let ch = charge_kshape_letters(t)?;
    let co = cocharge_kshape_letters(t)?;
    Ok((1..=t.letters()).all(|n| ch[n - 1] == n as i64 - co[n - 1] - t.letter_cells(n).len() as i64))
}

impl TryFrom<&crate::weak::WeakTableau> for KShapeTableau {
    type Error = Error;
    fn try_from(w: &crate::weak::WeakTableau) -> Result<Self> {
        KShapeTableau::from_chain(w.k, w.chain.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;
    use crate::weak::{charge_standard, cocharge_standard, enumerate_standard, WeakTableau};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    const EXA36: &str = "1 2 4 6 8 9 / 3 5 7 / 4 6 9 / 7 / 9";

    #[test]
    fn worked_charge() {
        let t = KShapeTableau::parse(4, EXA36).unwrap();
        assert_eq!(charge_kshape_letters(&t).unwrap(), vec![0, 1, 1, 1, 2, 2, 2, 4, 3]);
        assert_eq!(charge_kshape(&t).unwrap(), 16);
        assert_eq!(cocharge_kshape_letters(&t).unwrap(), vec![0, 0, 1, 1, 2, 2, 3, 3, 3]);
        assert_eq!(cocharge_kshape(&t).unwrap(), 15);
        assert_eq!(t.shape().k_interior(4).size(), 5);
        assert_eq!(charge_cocharge_residual(&t).unwrap(), 0);
        assert!(per_letter_identity(&t).unwrap());
    }

    #[test]
    fn single_letter() {
        let t = KShapeTableau::parse(3, "1").unwrap();
        assert_eq!((charge_kshape(&t).unwrap(), cocharge_kshape(&t).unwrap()), (0, 0));
        assert_eq!(charge_cocharge_residual(&t).unwrap(), 0);
        let c = chain_characterization(&t.chain, 3).unwrap();
        assert!(c.is_k_tableau && c.is_km1_tableau);
    }

    #[test]
    fn worked_three_shape_tableau() {
        let t = KShapeTableau::parse(3, "1 2 4 5 6 7 / 3 5 6 / 4 8 / 6 / 8").unwrap();
        assert_eq!(t.letters(), 8);
        assert_eq!(t.shape(), &p("6,3,2,1,1"));
    }

    #[test]
    fn connected_rows_example() {
        let cr = ConnectedRows::new(&p("12,8,6,4,2,1"), 5);
        let pairs: Vec<(usize, usize)> =
            cr.below.iter().filter_map(|(&r, v)| v.map(|(x, _)| (r, x))).collect();
        assert_eq!(pairs, vec![(2, 1), (3, 2), (4, 2), (5, 3), (6, 4), (7, 5)]);
        assert_eq!(cr.below[&4], Some((2, true)));
        assert_eq!(cr.below[&5], Some((3, true)));
        assert_eq!(cr.below[&7], Some((5, false)));
        assert_eq!(cr.below[&3], Some((2, false)));
        assert_eq!(cr.sequence(7).unwrap(), vec![7, 5, 3, 2, 1]);
        assert_eq!(cr.interval(7, 1, true, true).unwrap(), 5);
        assert_eq!(cr.interval(7, 7, true, false).unwrap(), 0);
        assert_eq!(cr.interval(4, 2, false, true).unwrap(), 1);
        let e = ConnectedRows::new(&Partition::empty(), 3);
        assert_eq!(e.below.len(), 1);
        assert_eq!(e.below[&1], None);
    }

    #[test]
    fn cover_examples() {
        let c = Cover::new(&Partition::empty(), &p("1"), 2).unwrap();
        let s = cover_status(&c, 2);
        assert!(s.maximal && s.reverse_maximal);
        let c = Cover::new(&p("1"), &p("1,1"), 2).unwrap();
        assert!(cover_status(&c, 2).continues_below);
        assert!(Cover::new(&p("1,1"), &p("2,1"), 2).is_err());
    }

    #[test]
    fn duality_and_identity_sweep() {
        for k in 2..=3 {
            for n in 1..=6 {
                for t in enumerate_kshape_tableaux(n, k).unwrap() {
                    assert_eq!(t.shape().boundary_size(k), n);
                    assert_eq!(charge_cocharge_residual(&t).unwrap(), 0, "{}", t.filling());
                    assert!(per_letter_identity(&t).unwrap(), "{}", t.filling());
                }
            }
        }
    }

    #[test]
    fn weak_tableaux_are_reverse_maximal_chains() {
        for k in 2..=4 {
            for n in 1..=6 {
                let from_shapes: Vec<KShapeTableau> = enumerate_kshape_tableaux(n, k)
                    .unwrap()
                    .into_iter()
                    .filter(|t| chain_characterization(&t.chain, k).unwrap().is_k_tableau)
                    .collect();
                let mut direct = Vec::new();
                for s in 0..=3 * n {
                    for l in partitions_of(s) {
                        if l.is_p_core(k + 1).unwrap() && l.boundary_size(k) == n {
                            direct.extend(enumerate_standard(&l, k).unwrap());
                        }
                    }
                }
                assert_eq!(from_shapes.len(), direct.len(), "k={k} n={n}");
                for w in &direct {
                    let t = KShapeTableau::try_from(w).unwrap();
                    assert!(from_shapes.contains(&t));
                    assert_eq!(charge_kshape(&t).unwrap(), charge_standard(w).unwrap());
                    assert_eq!(cocharge_kshape(&t).unwrap(), cocharge_standard(w).unwrap());
                }
            }
        }
    }

    #[test]
    fn maximal_chains_are_lower_tableaux() {
        for k in 3..=4 {
            for n in 1..=6 {
                for t in enumerate_kshape_tableaux(n, k).unwrap() {
                    let c = chain_characterization(&t.chain, k).unwrap();
                    let as_lower = WeakTableau::from_chain(k - 1, t.chain.clone()).map(|w| w.is_standard());
                    assert_eq!(c.is_km1_tableau, matches!(as_lower, Ok(true)), "{}", t.filling());
                }
            }
        }
    }

    #[test]
    fn charge_agrees_one_level_up() {
        for k in 2..=3 {
            for n in 1..=6 {
                for s in 0..=3 * n {
                    for l in partitions_of(s) {
                        if !l.is_p_core(k + 1).unwrap() || l.boundary_size(k) != n {
                            continue;
                        }
                        for w in enumerate_standard(&l, k).unwrap() {
                            let lo = KShapeTableau::from_chain(k, w.chain.clone()).unwrap();
                            let hi = KShapeTableau::from_chain(k + 1, w.chain.clone()).unwrap();
                            assert!(chain_characterization(&hi.chain, k + 1).unwrap().is_km1_tableau);
                            assert_eq!(charge_kshape(&lo).unwrap(), charge_kshape(&hi).unwrap());
                            assert_eq!(cocharge_kshape(&lo).unwrap(), cocharge_kshape(&hi).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn ground_residues_follow_connections() {
        for k in 2..=4 {
            for n in 1..=8 {
                for l in crate::verify::weak_shapes(k, n).unwrap() {
                    let cr = ConnectedRows::new(&l, k);
                    let ground = |r: usize| -> Vec<Cell> {
                        let hi = if r == 1 { l.row(1) + k + 2 } else { l.row(r - 1) };
                        (l.row(r) + 1..=hi).map(|c| Cell::new(r, c)).collect()
                    };
                    for (&r, next) in &cr.below {
                        let Some((r2, _)) = next else { continue };
                        for b in ground(r) {
                            assert!(
                                ground(*r2).iter().any(|b2| b2.diag() == b.diag() + k as i64 + 1),
                                "k={k} {l} rows {r}->{r2} cell {b}"
                            );
                        }
                    }
                }
            }
        }
    }
}
