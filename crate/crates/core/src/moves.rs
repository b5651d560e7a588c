//! Row and column moves between k-shapes.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::kshape::{addable_chain_below, is_k_shape, string_kind, StringKind};
use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Orientation {
    Row,
    Column,
}

impl Orientation {
    pub fn letter(&self) -> char {
        match self {
            Orientation::Row => 'r',
            Orientation::Column => 'c',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Move {
    pub orientation: Orientation,
    pub rank: usize,
    pub length: usize,
    /// Each string top to bottom, in the order they are added.
    pub strings: Vec<Vec<Cell>>,
    pub source: Partition,
    pub target: Partition,
}

/// Sort key used for canonical ordering of moves and paths.
pub type MoveOrderKey = (Orientation, Cell, usize, usize, Vec<Cell>);

impl Move {
    pub fn cells(&self) -> BTreeSet<Cell> {
        self.strings.iter().flatten().copied().collect()
    }

    pub fn size(&self) -> usize {
        self.rank * self.length
    }

    pub fn charge(&self) -> usize {
        match self.orientation {
            Orientation::Row => 0,
            Orientation::Column => self.size(),
        }
    }

    pub fn cocharge(&self) -> usize {
        match self.orientation {
            Orientation::Row => self.size(),
            Orientation::Column => 0,
        }
    }

    pub fn top_cell(&self) -> Cell {
        self.strings[0][0]
    }

    pub fn identity(&self) -> (Orientation, Partition, BTreeSet<Cell>) {
        (self.orientation, self.source.clone(), self.cells())
    }

    pub fn order_key(&self) -> MoveOrderKey {
        (self.orientation, self.top_cell(), self.rank, self.length, self.cells().into_iter().collect())
    }

    pub fn transpose(&self) -> Move {
        let strings = self
            .strings
            .iter()
            .map(|s| {
                let mut t: Vec<Cell> = s.iter().map(Cell::transpose).collect();
                t.sort_by_key(|b| std::cmp::Reverse(b.row));
                t
            })
            .collect();
        Move {
            orientation: match self.orientation {
                Orientation::Row => Orientation::Column,
                Orientation::Column => Orientation::Row,
            },
            rank: self.rank,
            length: self.length,
            strings,
            source: self.source.conjugate(),
            target: self.target.conjugate(),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}@{}", self.orientation.letter(), self.rank, self.length, self.top_cell())
    }
}

/// Everything needed to decide whether two strings are translates.
#[derive(Debug, PartialEq, Eq)]
struct Diagram {
    bullets: BTreeSet<(i64, i64)>,
    circles: BTreeSet<(i64, i64)>,
    row_segments: BTreeMap<i64, usize>,
    col_segments: BTreeMap<i64, usize>,
}

fn boundary_cells(l: &Partition, k: usize) -> BTreeSet<Cell> {
    let hooks = l.hooks();
    l.cells().filter(|c| hooks[c.row - 1][c.col - 1] <= k).collect()
}

fn diagram(inner: &Partition, outer: &Partition, cells: &[Cell], k: usize) -> Diagram {
    let o = cells[0];
    let rel = |c: &Cell| (c.row as i64 - o.row as i64, c.col as i64 - o.col as i64);
    let bi = boundary_cells(inner, k);
    let bo = boundary_cells(outer, k);
    let circles: Vec<Cell> = bi.difference(&bo).copied().collect();
    let common: Vec<Cell> = bi.intersection(&bo).copied().collect();
    let rows: BTreeSet<usize> = cells.iter().chain(&circles).map(|c| c.row).collect();
    let cols: BTreeSet<usize> = cells.iter().chain(&circles).map(|c| c.col).collect();
    Diagram {
        bullets: cells.iter().map(rel).collect(),
        circles: circles.iter().map(rel).collect(),
        row_segments: rows
            .iter()
            .map(|&r| (r as i64 - o.row as i64, common.iter().filter(|c| c.row == r).count()))
            .collect(),
        col_segments: cols
            .iter()
            .map(|&c| (c as i64 - o.col as i64, common.iter().filter(|x| x.col == c).count()))
            .collect(),
    }
}

fn row_moves(l: &Partition, k: usize) -> Result<Vec<Move>> {
    let mut out = Vec::new();
    for t in l.addable_corners() {
        let mut chain = vec![t];
        chain.extend(addable_chain_below(l, t, k));
        for ell in 1..=chain.len() {
            let s1 = chain[..ell].to_vec();
            let l1 = l.union_cells(&s1.iter().copied().collect())?;
            if string_kind(l, &l1, k) != Some(StringKind::Row) {
                continue;
            }
            let d1 = diagram(l, &l1, &s1, k);
            let mut strings = vec![s1.clone()];
            let mut cur = l1;
            loop {
                if is_k_shape(&cur, k)? {
                    out.push(Move {
                        orientation: Orientation::Row,
                        rank: strings.len(),
                        length: ell,
                        strings: strings.clone(),
                        source: l.clone(),
                        target: cur.clone(),
                    });
                }
                if strings.len() > 2 * k {
                    break;
                }
                let c = strings.last().unwrap()[0].col + 1;
                let b1 = Cell::new(cur.col(c) + 1, c);
                if !cur.is_addable(b1) {
                    break;
                }
                let next: Vec<Cell> = s1
                    .iter()
                    .map(|a| {
                        let r = b1.row as i64 + a.row as i64 - s1[0].row as i64;
                        let cc = b1.col as i64 + a.col as i64 - s1[0].col as i64;
                        (r, cc)
                    })
                    .filter(|&(r, cc)| r >= 1 && cc >= 1)
                    .map(|(r, cc)| Cell::new(r as usize, cc as usize))
                    .collect();
                if next.len() != ell || !next.iter().all(|b| cur.is_addable(*b)) {
                    break;
                }
                let nxt = cur.union_cells(&next.iter().copied().collect())?;
                if string_kind(&cur, &nxt, k) != Some(StringKind::Row) || diagram(&cur, &nxt, &next, k) != d1 {
                    break;
                }
                strings.push(next);
                cur = nxt;
            }
        }
    }
    Ok(out)
}

fn dedup_sorted(mut moves: Vec<Move>) -> Vec<Move> {
    moves.sort_by_key(|m| m.order_key());
    let mut seen = BTreeSet::new();
    moves.retain(|m| seen.insert(m.identity()));
    moves
}

/// Every move out of a k-shape, in canonical order, without duplicates.
pub fn enumerate_moves(l: &Partition, k: usize) -> Result<Vec<Move>> {
    Ok(dedup_sorted(enumerate_moves_raw(l, k)?))
}

/// Like [`enumerate_moves`] but keeps distinct string decompositions of
/// the same cell set.
pub fn enumerate_moves_raw(l: &Partition, k: usize) -> Result<Vec<Move>> {
    if !is_k_shape(l, k)? {
        return domain(format!("{l} is not a {k}-shape"));
    }
    let mut all = row_moves(l, k)?;
    all.extend(row_moves(&l.conjugate(), k)?.iter().map(Move::transpose));
    Ok(all)
}
