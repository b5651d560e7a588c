//! k-shapes and strings of contiguous cells.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::partition::{Cell, Partition};

fn weakly_decreasing(v: &[usize]) -> bool {
    v.windows(2).all(|w| w[0] >= w[1])
}

pub fn is_k_shape(l: &Partition, k: usize) -> Result<bool> {
    if k < 2 {
        return domain(format!("k-shapes need k >= 2, got {k}"));
    }
    Ok(weakly_decreasing(&l.row_shape(k)) && weakly_decreasing(&l.col_shape(k)))
}

/// Two cells are contiguous when their diagonals differ by `k` or `k + 1`.
pub fn contiguous(a: Cell, b: Cell, k: usize) -> bool {
    let d = a.distance(&b);
    d == k as i64 || d == k as i64 + 1
}

/// `v[i] - u[i]` with both padded by zeros.
pub fn diff_vec(v: &[usize], u: &[usize]) -> Vec<i64> {
    let n = v.len().max(u.len());
    (0..n)
        .map(|i| *v.get(i).unwrap_or(&0) as i64 - *u.get(i).unwrap_or(&0) as i64)
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum StringKind {
    Row,
    Column,
    Cover,
    Cocover,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct StringOfCells {
    /// Top to bottom.
    pub cells: Vec<Cell>,
    pub inner: Partition,
    pub outer: Partition,
    pub kind: StringKind,
}

impl StringOfCells {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn top(&self) -> Cell {
        self.cells[0]
    }

    pub fn bottom(&self) -> Cell {
        *self.cells.last().expect("strings are nonempty")
    }

    pub fn cell_set(&self) -> BTreeSet<Cell> {
        self.cells.iter().copied().collect()
    }
}

/// Sorts cells top to bottom and checks the contiguity chain.
pub fn string_order(cells: &[Cell], k: usize) -> Option<Vec<Cell>> {
    let mut cs = cells.to_vec();
    cs.sort_by(|a, b| b.row.cmp(&a.row).then(a.col.cmp(&b.col)));
    if cs.is_empty() {
        return None;
    }
    for w in cs.windows(2) {
        let (a, b) = (w[0], w[1]);
        if b.row >= a.row || !contiguous(a, b, k) || b.diag() < a.diag() {
            return None;
        }
    }
    Some(cs)
}

/// Kind of the string `outer / inner` from its row and column profile changes.
pub fn string_kind(inner: &Partition, outer: &Partition, k: usize) -> Option<StringKind> {
    let drs = diff_vec(&outer.row_shape(k), &inner.row_shape(k));
    let dcs = diff_vec(&outer.col_shape(k), &inner.col_shape(k));
    if drs.iter().all(|&d| d == 0) {
        Some(StringKind::Row)
    } else if dcs.iter().all(|&d| d == 0) {
        Some(StringKind::Column)
    } else if drs.iter().any(|&d| d > 0) && dcs.iter().any(|&d| d > 0) {
        Some(StringKind::Cover)
    } else if drs.iter().any(|&d| d < 0) && dcs.iter().any(|&d| d < 0) {
        Some(StringKind::Cocover)
    } else {
        None
    }
}

pub fn classify_string(inner: &Partition, outer: &Partition, k: usize) -> Result<StringOfCells> {
    if !outer.contains_partition(inner) {
        return domain(format!("{inner} is not contained in {outer}"));
    }
    let cells = outer.skew_cells(inner);
    let cells = string_order(&cells, k)
        .ok_or_else(|| Error::NotAString(format!("{outer}/{inner} is not a chain of contiguous cells")))?;
    let kind = string_kind(inner, outer, k)
        .ok_or_else(|| Error::NotAString(format!("{outer}/{inner} has no string type")))?;
    Ok(StringOfCells { cells, inner: inner.clone(), outer: outer.clone(), kind })
}

/// The contiguous addable corner of `l` directly below `b`, if any.
pub fn addable_below(l: &Partition, b: Cell, k: usize) -> Option<Cell> {
    l.addable_corners().into_iter().find(|c| c.row < b.row && contiguous(*c, b, k) && c.diag() > b.diag())
}

pub fn addable_above(l: &Partition, b: Cell, k: usize) -> Option<Cell> {
    l.addable_corners().into_iter().find(|c| c.row > b.row && contiguous(*c, b, k) && c.diag() < b.diag())
}

pub fn removable_below(l: &Partition, b: Cell, k: usize) -> Option<Cell> {
    l.removable_corners().into_iter().find(|c| c.row < b.row && contiguous(*c, b, k) && c.diag() > b.diag())
}

pub fn removable_above(l: &Partition, b: Cell, k: usize) -> Option<Cell> {
    l.removable_corners().into_iter().find(|c| c.row > b.row && contiguous(*c, b, k) && c.diag() < b.diag())
}

/// The longest chain of contiguous addable corners of `l` starting strictly
/// below `b`, top to bottom.
pub fn addable_chain_below(l: &Partition, b: Cell, k: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut cur = b;
    while let Some(c) = addable_below(l, cur, k) {
        out.push(c);
        cur = c;
    }
    out
}

pub fn addable_chain_above(l: &Partition, b: Cell, k: usize) -> Vec<Cell> {
    let mut out = Vec::new();
    let mut cur = b;
    while let Some(c) = addable_above(l, cur, k) {
        out.push(c);
        cur = c;
    }
    out
}

/// All k-shapes with k-boundary of size `n`.
pub fn k_shapes_of_boundary(k: usize, n: usize) -> Result<Vec<Partition>> {
    if k < 2 {
        return domain(format!("k-shapes need k >= 2, got {k}"));
    }
    // every row and column of a k-shape meets its boundary
    let mut out: Vec<Partition> = crate::partition::partitions_in_box(n, n)
        .into_iter()
        .filter(|l| l.boundary_size(k) == n)
        .filter(|l| is_k_shape(l, k).unwrap_or(false))
        .collect();
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn k_shape_examples() {
        assert!(is_k_shape(&p("8,4,3,2,1,1,1"), 4).unwrap());
        assert!(!is_k_shape(&p("3,3,1"), 4).unwrap());
        assert!(is_k_shape(&Partition::empty(), 2).unwrap());
        assert!(is_k_shape(&p("1"), 1).is_err());
    }

    #[test]
    fn cores_are_k_shapes() {
        for n in 0..10 {
            for l in crate::partition::partitions_of(n) {
                if l.is_p_core(3).unwrap() || l.is_p_core(4).unwrap() {
                    assert!(is_k_shape(&l, 3).unwrap(), "{l}");
                }
            }
        }
    }

    #[test]
    fn string_examples() {
        let s = classify_string(&p("4,2,1"), &p("5,3,1,1"), 3).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s.cells, vec![Cell::new(4, 1), Cell::new(2, 3), Cell::new(1, 5)]);
        let s = classify_string(&Partition::empty(), &p("1"), 2).unwrap();
        assert_eq!(s.kind, StringKind::Cover);
        let s = classify_string(&p("1,1"), &p("2,1"), 2).unwrap();
        assert_eq!(s.kind, StringKind::Row);
        assert!(matches!(classify_string(&p("1"), &p("2,1"), 3), Err(Error::NotAString(_))));
    }

    #[test]
    fn chains() {
        let l = p("12,8,6,4,2,1");
        assert!(addable_chain_below(&l, Cell::new(7, 1), 5).is_empty());
        let ch = addable_chain_below(&l, Cell::new(6, 2), 5);
        assert_eq!(ch, vec![Cell::new(4, 5), Cell::new(2, 9), Cell::new(1, 13)]);
        assert_eq!(addable_chain_above(&l, Cell::new(3, 7), 5), vec![Cell::new(5, 3)]);
    }
}
