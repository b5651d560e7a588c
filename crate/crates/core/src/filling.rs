//! Tableau fillings and their text form.
//!
//! Rows are listed bottom to top, separated by `/`; entries within a row
//! are separated by whitespace, e.g. `1 1 2 / 2 3`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Cell, Partition};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Filling {
    /// `rows[0]` is the bottom row.
    pub rows: Vec<Vec<usize>>,
}

impl Filling {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("validated on construction")
    }

    pub fn get(&self, b: Cell) -> Option<usize> {
        self.rows.get(b.row.checked_sub(1)?)?.get(b.col.checked_sub(1)?).copied()
    }

    pub fn max_letter(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn cells_of(&self, n: usize) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            for (j, &x) in r.iter().enumerate() {
                if x == n {
                    out.push(Cell::new(i + 1, j + 1));
                }
            }
        }
        out
    }

    pub fn content(&self) -> Vec<usize> {
        let mut w = vec![0; self.max_letter()];
        for &x in self.rows.iter().flatten() {
            w[x - 1] += 1;
        }
        w
    }

    /// `λ^(i)` = cells holding letters `≤ i`, for `i = 0..=max`.
    ///
    /// Fails unless every such set is a partition.
    pub fn chain(&self) -> Result<Vec<Partition>> {
        let n = self.max_letter();
        (0..=n)
            .map(|i| {
                let parts: Vec<usize> =
                    self.rows.iter().map(|r| r.iter().filter(|&&x| x <= i).count()).collect();
                if self.rows.iter().any(|r| r.windows(2).any(|w| w[0] > w[1])) {
                    return Err(Error::Parse("rows must be weakly increasing".into()));
                }
                Partition::new(parts)
            })
            .collect()
    }

    pub fn from_chain(chain: &[Partition]) -> Result<Filling> {
        let shape = chain.last().cloned().unwrap_or_default();
        let mut rows: Vec<Vec<usize>> = shape.parts().iter().map(|&p| vec![0; p]).collect();
        for (i, w) in chain.windows(2).enumerate() {
            if !w[1].contains_partition(&w[0]) {
                return Err(Error::Domain(format!("chain is not increasing at step {}", i + 1)));
            }
            for c in w[1].skew_cells(&w[0]) {
                rows[c.row - 1][c.col - 1] = i + 1;
            }
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::Domain("chain does not start at the empty partition".into()));
        }
        Ok(Filling { rows })
    }
}

impl std::str::FromStr for Filling {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Ok(Filling { rows: Vec::new() });
        }
        let rows = s
            .split('/')
            .map(|r| {
                r.split_whitespace()
                    .map(|t| match t.parse::<usize>() {
                        Ok(0) => Err(Error::Parse("letters start at 1".into())),
                        Ok(x) => Ok(x),
                        Err(e) => Err(Error::Parse(format!("{t:?}: {e}"))),
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        if rows.iter().any(Vec::is_empty) || rows.windows(2).any(|w| w[0].len() < w[1].len()) {
            return Err(Error::Parse("row lengths must be positive and weakly decreasing upward".into()));
        }
        Ok(Filling { rows })
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "-");
        }
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}
