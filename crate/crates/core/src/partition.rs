//! Partitions, cells and the k-boundary machinery.
//!
//! Cells use French coordinates: `row` 1 is the bottom row, `col` 1 the
//! leftmost column. Both are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn diag(&self) -> i64 {
        self.col as i64 - self.row as i64
    }

    pub fn transpose(&self) -> Cell {
        Cell::new(self.col, self.row)
    }

    /// `|diag(x) - diag(y)|`.
    pub fn distance(&self, other: &Cell) -> i64 {
        (self.diag() - other.diag()).abs()
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Residue of a diagonal index modulo `k + 1`, always in `0..=k`.
pub fn residue_of_diag(d: i64, k: usize) -> usize {
    d.rem_euclid(k as i64 + 1) as usize
}

pub fn residue(b: Cell, k: usize) -> usize {
    residue_of_diag(b.diag(), k)
}

#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition, trimming trailing zeros. Fails if the parts are
    /// not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Length of row `i` (1-based); zero above the diagram.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Height of column `j` (1-based).
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn contains(&self, b: Cell) -> bool {
        b.row >= 1 && b.col >= 1 && self.row(b.row) >= b.col
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.row(1);
        Partition { parts: (1..=w).map(|j| self.col(j)).collect() }
    }

    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| Cell::new(i + 1, j)))
    }

    pub fn contains_partition(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells of `self` not in `inner`.
    pub fn skew_cells(&self, inner: &Partition) -> Vec<Cell> {
        self.cells().filter(|c| !inner.contains(*c)).collect()
    }

    pub fn arm(&self, b: Cell) -> usize {
        self.row(b.row) - b.col
    }

    pub fn leg(&self, b: Cell) -> usize {
        self.col(b.col) - b.row
    }

    pub fn hook_length(&self, b: Cell) -> Result<usize> {
        if !self.contains(b) {
            return domain(format!("cell {b} is outside {self}"));
        }
        Ok(self.arm(b) + self.leg(b) + 1)
    }

    /// All hook lengths, indexed `[row-1][col-1]`.
    pub fn hooks(&self) -> Vec<Vec<usize>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| (0..p).map(|j| p - j - 1 + conj.parts[j] - i - 1 + 1).collect())
            .collect()
    }

    pub fn is_p_core(&self, p: usize) -> Result<bool> {
        if p < 2 {
            return domain(format!("core parameter must be at least 2, got {p}"));
        }
        Ok(self.hooks().iter().flatten().all(|&h| h != p))
    }

    pub fn k_interior(&self, k: usize) -> Partition {
        let parts = self
            .hooks()
            .iter()
            .map(|r| r.iter().filter(|&&h| h > k).count())
            .collect();
        Partition::new(parts).expect("interior of a partition is a partition")
    }

    pub fn k_boundary(&self, k: usize) -> SkewShape {
        SkewShape { outer: self.clone(), inner: self.k_interior(k) }
    }

    /// Number of boundary cells in each row, bottom to top.
    pub fn row_shape(&self, k: usize) -> Vec<usize> {
        self.hooks().iter().map(|r| r.iter().filter(|&&h| h <= k).count()).collect()
    }

    /// Number of boundary cells in each column, left to right.
    pub fn col_shape(&self, k: usize) -> Vec<usize> {
        self.conjugate().row_shape(k)
    }

    pub fn boundary_size(&self, k: usize) -> usize {
        self.hooks().iter().flatten().filter(|&&h| h <= k).count()
    }

    pub fn addable_corners(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for i in 1..=self.len() + 1 {
            let c = self.row(i) + 1;
            if i == 1 || self.row(i - 1) >= c {
                out.push(Cell::new(i, c));
            }
        }
        out
    }

    pub fn removable_corners(&self) -> Vec<Cell> {
        (1..=self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| Cell::new(i, self.row(i)))
            .collect()
    }

    pub fn is_addable(&self, b: Cell) -> bool {
        b.row >= 1 && b.col >= 1 && self.row(b.row) + 1 == b.col && (b.row == 1 || self.row(b.row - 1) >= b.col)
    }

    pub fn is_removable(&self, b: Cell) -> bool {
        self.contains(b) && self.row(b.row) == b.col && self.row(b.row + 1) < b.col
    }

    /// Adds a set of cells, failing unless the result is a partition.
    pub fn add_cells<'a>(&self, cells: impl IntoIterator<Item = &'a Cell>) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for c in cells {
            if parts.len() < c.row {
                parts.resize(c.row, 0);
            }
            parts[c.row - 1] += 1;
        }
        let p = Partition::new(parts)?;
        Ok(p)
    }

    /// Adds a set of cells with an exact membership check.
    pub fn union_cells(&self, cells: &BTreeSet<Cell>) -> Result<Partition> {
        if cells.iter().any(|c| self.contains(*c)) {
            return domain("cell already present");
        }
        let p = self.add_cells(cells)?;
        let got: BTreeSet<Cell> = p.skew_cells(self).into_iter().collect();
        if &got != cells {
            return Err(Error::InvalidPartition(format!("adding {} cells to {self} is not a partition", cells.len())));
        }
        Ok(p)
    }

    pub fn remove_cells(&self, cells: &BTreeSet<Cell>) -> Result<Partition> {
        let mut parts = self.parts.clone();
        for c in cells {
            if !self.contains(*c) {
                return domain(format!("cell {c} not in {self}"));
            }
            parts[c.row - 1] -= 1;
        }
        let p = Partition::new(parts)?;
        let got: BTreeSet<Cell> = self.skew_cells(&p).into_iter().collect();
        if &got != cells {
            return Err(Error::InvalidPartition("removal does not leave a partition".into()));
        }
        Ok(p)
    }

    pub fn union(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        Partition { parts: (1..=n).map(|i| self.row(i).max(other.row(i))).collect() }
    }

    /// Dominance order `self ≤ other`, for partitions of equal size.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for i in 1..=n {
            a += self.row(i);
            b += other.row(i);
            if a > b {
                return false;
            }
        }
        a == b
    }
}

/// All partitions of `n`, in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            rec(rem - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions fitting in a box of `rows` rows and `cols` columns.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    fn rec(rows_left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: cur.clone() });
        if rows_left == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(rows_left - 1, p, cur, out);
            cur.pop();
        }
    }
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}

/// All partitions `ν` with `inner ⊆ ν ⊆ outer`.
pub fn partitions_between(inner: &Partition, outer: &Partition) -> Vec<Partition> {
    let mut out = Vec::new();
    if !outer.contains_partition(inner) {
        return out;
    }
    fn rec(i: usize, inner: &Partition, outer: &Partition, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i > outer.len() {
            out.push(Partition::new(cur.clone()).expect("bounded by the previous row"));
            return;
        }
        let hi = if i == 1 { outer.row(1) } else { outer.row(i).min(cur[i - 2]) };
        for p in inner.row(i)..=hi {
            cur.push(p);
            rec(i + 1, inner, outer, cur, out);
            cur.pop();
        }
    }
    rec(1, inner, outer, &mut Vec::new(), &mut out);
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "-" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner`, keeping both partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    pub outer: Partition,
    pub inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains_partition(&inner) {
            return domain(format!("{inner} is not contained in {outer}"));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn cells(&self) -> Vec<Cell> {
        self.outer.skew_cells(&self.inner)
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }
}

/// Number of diagonals of residue `e` strictly between the diagonals of
/// `b2` and `b1`, where `b2` lies weakly below `b1`.
pub fn diag_count(core: &Partition, b1: Cell, b2: Cell, e: usize, k: usize) -> Result<usize> {
    let _ = core;
    if e > k {
        return domain(format!("residue {e} out of range for k={k}"));
    }
    if b2.row > b1.row {
        return domain(format!("{b2} lies above {b1}"));
    }
    let (lo, hi) = (b1.diag().min(b2.diag()), b1.diag().max(b2.diag()));
    Ok(((lo + 1)..hi).filter(|&d| residue_of_diag(d, k) == e).count())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn hooks_small() {
        assert_eq!(p("2,1").hook_length(Cell::new(1, 1)).unwrap(), 3);
        assert_eq!(p("1").hook_length(Cell::new(1, 1)).unwrap(), 1);
        assert!(p("1").hook_length(Cell::new(2, 1)).is_err());
    }

    #[test]
    fn cores() {
        assert!(Partition::empty().is_p_core(5).unwrap());
        assert!(!p("2,1").is_p_core(3).unwrap());
        assert!(p("3,1").is_p_core(3).unwrap());
        assert!(p("1").is_p_core(1).is_err());
    }

    #[test]
    fn boundary_of_worked_shape() {
        let l = p("8,4,3,2,1,1,1");
        assert_eq!(l.k_interior(4), p("4,2,1,1"));
        assert_eq!(l.boundary_size(4), 12);
        assert_eq!(l.row_shape(4), vec![4, 2, 2, 1, 1, 1, 1]);
        assert_eq!(l.col_shape(4), vec![3, 2, 2, 1, 1, 1, 1, 1]);
        assert_eq!(p("3,3,1").row_shape(4), vec![2, 3, 1]);
        assert_eq!(p("2,1").k_interior(2), p("1"));
        assert_eq!(p("1").k_interior(1), Partition::empty());
        assert!(Partition::empty().row_shape(3).is_empty());
    }

    #[test]
    fn residues() {
        assert_eq!(residue(Cell::new(1, 1), 7), 0);
        assert_eq!(residue(Cell::new(2, 1), 3), 3);
        assert_eq!(residue(Cell::new(1, 6), 4), 0);
    }

    #[test]
    fn diag_counts() {
        let c = p("3,1");
        let b = Cell::new(1, 2);
        assert_eq!(diag_count(&c, b, b, 0, 2).unwrap(), 0);
        // diagonals strictly between -1 and 4 with residue 2 mod 5: only 2
        assert_eq!(diag_count(&c, Cell::new(2, 1), Cell::new(1, 5), 2, 4).unwrap(), 1);
        assert!(diag_count(&c, Cell::new(1, 1), Cell::new(2, 1), 0, 2).is_err());
    }

    #[test]
    fn corners_examples() {
        let e = Partition::empty();
        assert_eq!(e.addable_corners(), vec![Cell::new(1, 1)]);
        assert!(e.removable_corners().is_empty());
        let one = p("1");
        assert_eq!(one.addable_corners(), vec![Cell::new(1, 2), Cell::new(2, 1)]);
        assert_eq!(one.removable_corners(), vec![Cell::new(1, 1)]);
        let l = p("12,8,6,4,2,1");
        let cols: Vec<usize> = l.addable_corners().iter().map(|c| c.col).collect();
        assert_eq!(cols, vec![13, 9, 7, 5, 3, 2, 1]);
    }

    #[test]
    fn text_roundtrip() {
        assert_eq!(Partition::empty().to_string(), "-");
        assert_eq!(p(""), Partition::empty());
        assert_eq!(p("-"), Partition::empty());
        assert_eq!(p("4,2,2").to_string(), "4,2,2");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("1,x".parse::<Partition>().is_err());
    }

    #[test]
    fn counts() {
        let sizes: Vec<usize> = (0..8).map(|n| partitions_of(n).len()).collect();
        assert_eq!(sizes, vec![1, 1, 2, 3, 5, 7, 11, 15]);
        // binomial(4, 2) partitions in a 2x2 box
        assert_eq!(partitions_in_box(2, 2).len(), 6);
        assert_eq!(partitions_between(&Partition::empty(), &p("2,2")).len(), 6);
        assert_eq!(partitions_between(&p("1"), &p("2,1")).len(), 4);
        assert!(partitions_between(&p("3"), &p("2,1")).is_empty());
    }

    fn arb_partition() -> impl Strategy<Value = Partition> {
        proptest::collection::vec(1usize..7, 0..7).prop_map(|mut v| {
            v.sort_unstable_by(|a, b| b.cmp(a));
            Partition::new(v).unwrap()
        })
    }

    proptest! {
        #[test]
        fn conjugate_involution(l in arb_partition()) {
            prop_assert_eq!(l.conjugate().conjugate(), l.clone());
            let c = l.conjugate();
            for b in l.cells() {
                prop_assert_eq!(l.hook_length(b).unwrap(), c.hook_length(b.transpose()).unwrap());
            }
        }

        #[test]
        fn boundary_identities(l in arb_partition(), k in 1usize..7) {
            let int = l.k_interior(k);
            prop_assert!(l.contains_partition(&int));
            prop_assert_eq!(l.boundary_size(k), l.size() - int.size());
            prop_assert_eq!(l.conjugate().row_shape(k), l.col_shape(k));
            prop_assert_eq!(l.row_shape(k).iter().sum::<usize>(), l.boundary_size(k));
        }

        #[test]
        fn corners_are_corners(l in arb_partition()) {
            for a in l.addable_corners() {
                prop_assert!(l.is_addable(a));
                prop_assert!(l.add_cells(&[a]).is_ok());
            }
            for r in l.removable_corners() {
                prop_assert!(l.is_removable(r));
                prop_assert!(l.remove_cells(&[r].into_iter().collect()).is_ok());
            }
        }

        #[test]
        fn core_has_no_hook(l in arb_partition(), p in 2usize..6) {
            if l.is_p_core(p).unwrap() {
                prop_assert!(l.cells().all(|b| l.hook_length(b).unwrap() != p));
            }
        }
    }
}
