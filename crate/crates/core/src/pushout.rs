//! The pushout algorithm and the weak bijection on standard k-tableaux.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{domain, integrity, Result};
use crate::filling::Filling;
use crate::kshape::{addable_chain_above, addable_chain_below};
use crate::kshape_tableau::{charge_kshape, cocharge_kshape, cover_status, Cover, KShapeTableau};
use crate::moves::{enumerate_moves, Move, Orientation};
use crate::partition::{Cell, Partition};
use crate::poset::Path;
use crate::weak::{charge_standard, cocharge_standard, WeakTableau};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PushoutType {
    I,
    II,
    III,
    IV,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    MaximizeBelow,
    MaximizeAbove,
    Pushout(Orientation, PushoutType),
}

/// ```text
/// λ --top--> ν
/// |c         |c̃
/// μ --bot--> η
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushoutSquare {
    pub kind: StepKind,
    pub left: Cover,
    pub right: Cover,
    pub top: Option<Move>,
    pub bottom: Option<Move>,
}

impl PushoutSquare {
    pub fn top_left(&self) -> &Partition {
        &self.left.inner
    }

    pub fn bottom_left(&self) -> &Partition {
        &self.left.outer
    }

    pub fn top_right(&self) -> &Partition {
        &self.right.inner
    }

    pub fn bottom_right(&self) -> &Partition {
        &self.right.outer
    }

    fn check(&self) -> Result<()> {
        let top_end = self.top.as_ref().map(|m| &m.target).unwrap_or(self.top_left());
        let bot_end = self.bottom.as_ref().map(|m| &m.target).unwrap_or(self.bottom_left());
        let sizes = |m: &Option<Move>| m.as_ref().map(Move::size).unwrap_or(0) as i64;
        let ok = top_end == self.top_right()
            && bot_end == self.bottom_right()
            && self.top.as_ref().map(|m| &m.source == self.top_left()).unwrap_or(true)
            && self.bottom.as_ref().map(|m| &m.source == self.bottom_left()).unwrap_or(true)
            && self.right.len() as i64 - self.left.len() as i64 == sizes(&self.bottom) - sizes(&self.top);
        if ok {
            Ok(())
        } else {
            integrity(format!("square does not commute: {self:?}"))
        }
    }
}

fn find_move(source: &Partition, cells: &BTreeSet<Cell>, o: Orientation, k: usize) -> Result<Move> {
    enumerate_moves(source, k)?
        .into_iter()
        .find(|m| m.orientation == o && &m.cells() == cells)
        .ok_or_else(|| {
            let cs: Vec<String> = cells.iter().map(ToString::to_string).collect();
            crate::Error::Integrity(format!("no {o:?} move from {source} adding {}", cs.join(" ")))
        })
}

fn cover_with(inner: &Partition, cells: &BTreeSet<Cell>, k: usize) -> Result<Cover> {
    Cover::new(inner, &inner.union_cells(cells)?, k)
        .map_err(|e| crate::Error::Integrity(format!("expected a cover over {inner}: {e}")))
}

/// Step 1: extends `c` downward and returns the extended cover together
/// with the row move it induces from the outer shape of `c`.
pub fn maximize_below(c: &Cover, k: usize) -> Result<(Cover, Move)> {
    let ext = addable_chain_below(&c.inner, c.string.bottom(), k);
    if ext.is_empty() {
        return domain(format!("{}/{} cannot be continued below", c.outer, c.inner));
    }
    maximize(c, ext, Orientation::Row, k)
}

/// Step 2: the mirror of [`maximize_below`], producing a column move.
pub fn maximize_above(c: &Cover, k: usize) -> Result<(Cover, Move)> {
    let st = cover_status(c, k);
    if st.continues_below || !st.continues_above {
        return domain(format!("{}/{} is not continuable above only", c.outer, c.inner));
    }
    maximize(c, addable_chain_above(&c.inner, c.string.top(), k), Orientation::Column, k)
}

fn maximize(c: &Cover, ext: Vec<Cell>, o: Orientation, k: usize) -> Result<(Cover, Move)> {
    let ext: BTreeSet<Cell> = ext.into_iter().collect();
    let m = find_move(&c.outer, &ext, o, k)?;
    let mut all = c.string.cell_set();
    all.extend(ext);
    Ok((cover_with(&c.inner, &all, k)?, m))
}

fn shift(cells: impl IntoIterator<Item = Cell>, o: Orientation) -> BTreeSet<Cell> {
    cells
        .into_iter()
        .map(|b| match o {
            Orientation::Row => Cell::new(b.row, b.col + 1),
            Orientation::Column => Cell::new(b.row + 1, b.col),
        })
        .collect()
}

fn shift_across(cells: impl IntoIterator<Item = Cell>, o: Orientation) -> BTreeSet<Cell> {
    shift(
        cells,
        match o {
            Orientation::Row => Orientation::Column,
            Orientation::Column => Orientation::Row,
        },
    )
}

/// Step 3: pushes a maximal cover `c` through a move `m` out of its inner
/// shape.
pub fn maximal_pushout(c: &Cover, m: &Move, k: usize) -> Result<PushoutSquare> {
    if m.source != c.inner {
        return domain(format!("move starts at {} but the cover at {}", m.source, c.inner));
    }
    let st = cover_status(c, k);
    if !st.maximal {
        return domain(format!("{}/{} is not maximal", c.outer, c.inner));
    }
    let o = m.orientation;
    let cc = c.string.cell_set();
    let mc = m.cells();
    let both: BTreeSet<Cell> = cc.intersection(&mc).copied().collect();
    let (ty, new_c, new_m) = if both.is_empty() {
        let union = c.outer.union_cells(&mc);
        let fits = match &union {
            Ok(u) => crate::kshape::is_k_shape(u, k)?,
            Err(_) => false,
        };
        if fits {
            (PushoutType::I, cc, mc)
        } else {
            let comp = shift(m.strings.last().expect("nonempty move").iter().copied(), o);
            (PushoutType::II, &cc | &comp, &mc | &comp)
        }
    } else {
        let lo = both.iter().map(|b| b.row).min().unwrap();
        let hi = both.iter().map(|b| b.row).max().unwrap();
        let above = cc.iter().any(|b| b.row > hi);
        let below = cc.iter().any(|b| b.row < lo);
        let rest_c: BTreeSet<Cell> = &cc - &both;
        let rest_m: BTreeSet<Cell> = &mc - &both;
        let (three, four) = match o {
            Orientation::Row => (above && !below, above && below),
            Orientation::Column => (below && !above, above && below),
        };
        if three {
            (PushoutType::III, rest_c, rest_m)
        } else if four {
            let moved = shift_across(both.iter().copied(), o);
            (PushoutType::IV, &rest_c | &moved, &rest_m | &moved)
        } else {
            return integrity(format!(
                "no pushout type applies to cover {}/{} and move {m}",
                c.outer, c.inner
            ));
        }
    };
    let right = cover_with(&m.target, &new_c, k)?;
    let bottom = if new_m.is_empty() { None } else { Some(find_move(&c.outer, &new_m, o, k)?) };
    let sq = PushoutSquare {
        kind: StepKind::Pushout(o, ty),
        left: c.clone(),
        right,
        top: Some(m.clone()),
        bottom,
    };
    sq.check()?;
    Ok(sq)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PushResult {
    pub cover: Cover,
    pub path: Path,
    pub squares: Vec<PushoutSquare>,
}

/// Pushes `c` through every move of `p`, maximizing fully before each
/// move is consumed.
pub fn push_cover_through_path(c: &Cover, p: &Path, k: usize) -> Result<PushResult> {
    if p.start != c.inner {
        return domain(format!("path starts at {} but the cover at {}", p.start, c.inner));
    }
    let mut cur = c.clone();
    let mut path = Path::empty(c.outer.clone());
    let mut squares = Vec::new();
    let mut rest = p.moves.iter();
    loop {
        let st = cover_status(&cur, k);
        let sq = if st.continues_below || st.continues_above {
            let (kind, (next, m)) = if st.continues_below {
                (StepKind::MaximizeBelow, maximize_below(&cur, k)?)
            } else {
                (StepKind::MaximizeAbove, maximize_above(&cur, k)?)
            };
            PushoutSquare { kind, left: cur.clone(), right: next, top: None, bottom: Some(m) }
        } else {
            match rest.next() {
                Some(m) => maximal_pushout(&cur, m, k)?,
                None => break,
            }
        };
        sq.check()?;
        if let Some(m) = &sq.bottom {
            path.moves.push(m.clone());
        }
        cur = sq.right.clone();
        squares.push(sq);
    }
    Ok(PushResult { cover: cur, path, squares })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeakBijection {
    pub k: usize,
    /// The image chain, a standard (k-1)-tableau.
    pub lower: Vec<Partition>,
    pub path: Path,
    pub squares: usize,
}

impl WeakBijection {
    pub fn lower_filling(&self) -> Filling {
        Filling::from_chain(&self.lower).expect("valid chain")
    }
}

/// Sends a standard k-tableau to a standard (k-1)-tableau and a path,
/// checking that charge and cocharge split additively.
pub fn weak_bijection_standard(q: &WeakTableau) -> Result<WeakBijection> {
    let k = q.k;
    if k < 2 {
        return domain("the weak bijection needs k >= 2");
    }
    if !q.is_standard() {
        return domain(format!("{} is not standard", q.filling()));
    }
    let mut path = Path::empty(Partition::empty());
    let mut lower = vec![Partition::empty()];
    let mut squares = 0;
    for w in q.chain.windows(2) {
        let c = Cover::new(&w[0], &w[1], k)?;
        let r = push_cover_through_path(&c, &path, k)?;
        if !cover_status(&r.cover, k).maximal {
            return integrity(format!("pushed cover {}/{} is not maximal", r.cover.outer, r.cover.inner));
        }
        if &r.cover.inner != lower.last().unwrap() {
            return integrity("pushed cover does not continue the image chain");
        }
        squares += r.squares.len();
        lower.push(r.cover.outer.clone());
        path = r.path;
    }
    let out = WeakBijection { k, lower, path, squares };
    check_additivity(q, &out)?;
    Ok(out)
}

fn check_additivity(q: &WeakTableau, b: &WeakBijection) -> Result<()> {
    let k = q.k;
    let lower = WeakTableau::from_chain(k - 1, b.lower.clone())?;
    if !lower.is_standard() {
        return integrity(format!("{} is not a standard {}-tableau", b.lower_filling(), k - 1));
    }
    let as_shapes = KShapeTableau::from_chain(k, b.lower.clone())?;
    let (ch, co) = (charge_standard(q)?, cocharge_standard(q)?);
    let (pc, pco) = (b.path.charge() as i64, b.path.cocharge() as i64);
    let (lch, lco) = (charge_kshape(&as_shapes)?, cocharge_kshape(&as_shapes)?);
    if ch != lch + pc || co != lco + pco {
        return integrity(format!(
            "charge does not split for {}: {ch} vs {lch}+{pc}, cocharge {co} vs {lco}+{pco}",
            q.filling()
        ));
    }
    if k > 2 && (charge_standard(&lower)? != lch || cocharge_standard(&lower)? != lco) {
        return integrity(format!("{} has different charge at levels {} and {k}", b.lower_filling(), k - 1));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentLevel {
    pub k: usize,
    pub tableau: String,
    pub lower: String,
    pub path: String,
    pub charge: usize,
    pub cocharge: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DescentRecord {
    pub source: String,
    pub levels: Vec<DescentLevel>,
    pub total_charge: usize,
    pub total_cocharge: usize,
}

impl DescentRecord {
    pub fn text(&self) -> String {
        let mut s = format!("tableau {}\n", self.source);
        for l in &self.levels {
            let _ = writeln!(s, "k={}: {} -> {}", l.k, l.tableau, l.lower);
            let _ = writeln!(s, "  path {}", l.path);
            let _ = writeln!(s, "  charge {} cocharge {}", l.charge, l.cocharge);
        }
        let _ = writeln!(s, "total charge {} cocharge {}", self.total_charge, self.total_cocharge);
        s
    }
}

/// Runs the weak bijection for `k = n, n-1, ..., 2` starting from a
/// standard Young tableau on `n` letters.
pub fn full_descent(t: &Filling) -> Result<DescentRecord> {
    let n = t.max_letter();
    let mut chain = t.chain()?;
    if chain.len() != n + 1 || chain.windows(2).any(|w| w[1].size() != w[0].size() + 1) {
        return domain(format!("{t} is not a standard tableau"));
    }
    let mut levels = Vec::new();
    for k in (2..=n).rev() {
        let q = WeakTableau::from_chain(k, chain.clone())?;
        let b = weak_bijection_standard(&q)?;
        levels.push(DescentLevel {
            k,
            tableau: q.filling().to_string(),
            lower: b.lower_filling().to_string(),
            path: b.path.text(),
            charge: b.path.charge(),
            cocharge: b.path.cocharge(),
        });
        chain = b.lower;
    }
    Ok(DescentRecord {
        source: t.to_string(),
        total_charge: levels.iter().map(|l| l.charge).sum(),
        total_cocharge: levels.iter().map(|l| l.cocharge).sum(),
        levels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kshape_tableau::covers_from;
    use crate::weak::enumerate_standard;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn maximize_below_small() {
        let c = Cover::new(&p("1"), &p("1,1"), 2).unwrap();
        let (c2, m) = maximize_below(&c, 2).unwrap();
        assert_eq!(c2.outer, p("2,1"));
        assert_eq!(m.orientation, Orientation::Row);
        assert_eq!(m.cells().into_iter().collect::<Vec<_>>(), vec![Cell::new(1, 2)]);
        assert!(maximize_above(&c, 2).is_err());
    }

    #[test]
    fn maximize_above_small() {
        let c = Cover::new(&p("1"), &p("2"), 2).unwrap();
        let (c2, m) = maximize_above(&c, 2).unwrap();
        assert_eq!(c2.outer, p("2,1"));
        assert_eq!(m.orientation, Orientation::Column);
        assert_eq!(m.cells().into_iter().collect::<Vec<_>>(), vec![Cell::new(2, 1)]);
        assert!(maximize_below(&c, 2).is_err());
    }

    #[test]
    fn maximization_sweep() {
        for k in 2..=3 {
            for n in 1..=6 {
                for l in crate::kshape::k_shapes_of_boundary(k, n).unwrap() {
                    if l.size() > 8 {
                        continue;
                    }
                    for c in covers_from(&l, k).unwrap() {
                        let st = cover_status(&c, k);
                        if st.continues_below {
                            let (c2, m) = maximize_below(&c, k).unwrap();
                            assert!(!cover_status(&c2, k).continues_below);
                            assert_eq!(m.source, c.outer);
                            assert_eq!(m.target, c2.outer);
                        } else if st.continues_above {
                            let (c2, m) = maximize_above(&c, k).unwrap();
                            assert!(cover_status(&c2, k).maximal);
                            assert_eq!(m.target, c2.outer);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn empty_path_push() {
        let c = Cover::new(&Partition::empty(), &p("1"), 3).unwrap();
        let r = push_cover_through_path(&c, &Path::empty(Partition::empty()), 3).unwrap();
        assert_eq!(r.cover, c);
        assert!(r.path.moves.is_empty());
        let c = Cover::new(&p("1"), &p("1,1"), 2).unwrap();
        let r = push_cover_through_path(&c, &Path::empty(p("1")), 2).unwrap();
        assert_eq!(r.cover.outer, p("2,1"));
        assert_eq!(r.path.moves.len(), 1);
    }

    #[test]
    fn small_bijection() {
        let q = WeakTableau::parse(2, "1 2 3 / 3").unwrap();
        let b = weak_bijection_standard(&q).unwrap();
        assert_eq!(b.path.start, p("3,1"));
        assert_eq!(b.path.end(), &p("3,2,1"));
        assert_eq!(b.path.charge(), 2);
        assert_eq!(b.lower, vec![p(""), p("1"), p("2,1"), p("3,2,1")]);
        let q = WeakTableau::parse(3, "1").unwrap();
        let b = weak_bijection_standard(&q).unwrap();
        assert!(b.path.moves.is_empty());
    }

    #[test]
    fn all_pushout_types_occur() {
        let mut seen = BTreeSet::new();
        for k in 2..=3 {
            for n in 1..=6 {
                for s in 0..=3 * n {
                    for l in crate::partition::partitions_of(s) {
                        if !l.is_p_core(k + 1).unwrap() || l.boundary_size(k) != n {
                            continue;
                        }
                        for q in enumerate_standard(&l, k).unwrap() {
                            let mut path = Path::empty(Partition::empty());
                            for w in q.chain.windows(2) {
                                let c = Cover::new(&w[0], &w[1], k).unwrap();
                                let r = push_cover_through_path(&c, &path, k).unwrap();
                                for sq in &r.squares {
                                    if let StepKind::Pushout(o, t) = sq.kind {
                                        seen.insert(format!("{o:?}{t:?}"));
                                    }
                                }
                                path = r.path;
                            }
                        }
                    }
                }
            }
        }
        assert!(seen.contains("RowI") && seen.contains("ColumnI"), "{seen:?}");
    }

    #[test]
    fn descent_small() {
        let r = full_descent(&"1".parse().unwrap()).unwrap();
        assert!(r.levels.is_empty());
        assert_eq!(r.total_charge, 0);
        let r = full_descent(&"1 2 3".parse().unwrap()).unwrap();
        assert_eq!(r.total_charge, 3);
        assert_eq!(r.total_cocharge, 0);
        let r = full_descent(&"1 / 2 / 3".parse().unwrap()).unwrap();
        assert_eq!(r.total_charge, 0);
        assert_eq!(r.total_cocharge, 3);
        assert!(r.text().contains("total charge 0 cocharge 3"));
        assert!(full_descent(&"1 1".parse().unwrap()).is_err());
    }
}
