//! Ordinary tableaux and the classical charge statistic.

use crate::error::{domain, Result};
use crate::filling::Filling;
use crate::partition::Partition;
use crate::verify::poly::TPolynomial;

/// Rows read top to bottom, each left to right.
pub fn reading_word(t: &Filling) -> Vec<usize> {
    t.rows.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition, computed by peeling off
/// standard subwords from the right.
pub fn charge_word(w: &[usize]) -> Result<usize> {
    let m = w.iter().copied().max().unwrap_or(0);
    let mut content = vec![0usize; m];
    for &x in w {
        if x == 0 {
            return domain("letters start at 1");
        }
        content[x - 1] += 1;
    }
    if content.windows(2).any(|c| c[0] < c[1]) {
        return domain(format!("content {content:?} is not a partition"));
    }
    let mut used = vec![false; w.len()];
    let mut left = w.len();
    let mut total = 0;
    while left > 0 {
        let top = (1..=m).take_while(|&r| content[r - 1] > 0).last().unwrap_or(0);
        let mut pos = w.len();
        let mut idx = 0;
        for r in 1..=top {
            let n = w.len();
            let start = if pos == n { n - 1 } else { (pos + n - 1) % n };
            let mut p = start;
            let mut wrapped = pos == n;
            loop {
                if !used[p] && w[p] == r {
                    break;
                }
                if p == 0 {
                    p = n - 1;
                    wrapped = true;
                } else {
                    p -= 1;
                }
            }
            if r > 1 && (wrapped || p > pos) {
                idx += 1;
            }
            total += idx;
            used[p] = true;
            content[r - 1] -= 1;
            left -= 1;
            pos = p;
        }
    }
    Ok(total)
}

pub fn classical_charge(t: &Filling) -> Result<usize> {
    charge_word(&reading_word(t))
}

/// Standard Young tableaux of the given shape.
pub fn standard_young_tableaux(shape: &Partition) -> Vec<Filling> {
    let mut out = Vec::new();
    let mut chain = vec![shape.clone()];
    fn rec(chain: &mut Vec<Partition>, out: &mut Vec<Filling>) {
        let cur = chain.last().unwrap().clone();
        if cur.is_empty() {
            let mut c = chain.clone();
            c.reverse();
            out.push(Filling::from_chain(&c).expect("valid chain"));
            return;
        }
        for b in cur.removable_corners() {
            chain.push(cur.remove_cells(&[b].into_iter().collect()).expect("corner"));
            rec(chain, out);
            chain.pop();
        }
    }
    rec(&mut chain, &mut out);
    out.sort();
    out
}

fn horizontal_strip(outer: &Partition, inner: &Partition) -> bool {
    outer.contains_partition(inner) && (1..=outer.len()).all(|i| inner.row(i) >= outer.row(i + 1))
}

/// Semistandard Young tableaux of the given shape and weight.
pub fn semistandard_young_tableaux(shape: &Partition, weight: &[usize]) -> Vec<Filling> {
    let mut out = Vec::new();
    if weight.iter().sum::<usize>() != shape.size() {
        return out;
    }
    let mut chain = vec![Partition::empty()];
    fn rec(shape: &Partition, weight: &[usize], chain: &mut Vec<Partition>, out: &mut Vec<Filling>) {
        let i = chain.len() - 1;
        let cur = chain.last().unwrap().clone();
        if i == weight.len() {
            out.push(Filling::from_chain(chain).expect("valid chain"));
            return;
        }
        for nu in crate::partition::partitions_between(&cur, shape) {
            if nu.size() == cur.size() + weight[i] && horizontal_strip(&nu, &cur) {
                chain.push(nu);
                rec(shape, weight, chain, out);
                chain.pop();
            }
        }
    }
    rec(shape, weight, &mut chain, &mut out);
    out
}

/// `K_{λμ}(t)` as a sum over semistandard tableaux.
pub fn kostka_foulkes(shape: &Partition, weight: &Partition) -> Result<TPolynomial> {
    let mut p = TPolynomial::zero();
    for t in semistandard_young_tableaux(shape, weight.parts()) {
        p = &p + &TPolynomial::monomial(classical_charge(&t)?, 1);
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::partitions_of;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn words() {
        assert_eq!(charge_word(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(charge_word(&[3, 2, 1]).unwrap(), 0);
        assert_eq!(charge_word(&[3, 1, 2]).unwrap(), 2);
        assert_eq!(charge_word(&[2, 1, 3]).unwrap(), 1);
        assert_eq!(charge_word(&[2, 1, 1]).unwrap(), 0);
        assert_eq!(charge_word(&[1, 1, 2]).unwrap(), 1);
        assert!(charge_word(&[2, 2, 1]).is_err());
    }

    #[test]
    fn rows_and_columns() {
        for n in 1..=6 {
            let row = Filling { rows: vec![(1..=n).collect()] };
            assert_eq!(classical_charge(&row).unwrap(), n * (n - 1) / 2);
            let col = Filling { rows: (1..=n).map(|i| vec![i]).collect() };
            assert_eq!(classical_charge(&col).unwrap(), 0);
        }
    }

    #[test]
    fn small_kostka_foulkes() {
        assert_eq!(kostka_foulkes(&p("2,1"), &p("1,1,1")).unwrap(), TPolynomial::new(vec![0, 1, 1]));
        assert_eq!(kostka_foulkes(&p("3"), &p("1,1,1")).unwrap(), TPolynomial::monomial(3, 1));
        assert_eq!(kostka_foulkes(&p("2,1"), &p("2,1")).unwrap(), TPolynomial::one());
        assert_eq!(kostka_foulkes(&p("3"), &p("2,1")).unwrap(), TPolynomial::monomial(1, 1));
    }

    #[test]
    fn kostka_foulkes_properties() {
        for n in 1..=6 {
            let ps = partitions_of(n);
            for l in &ps {
                let syt = standard_young_tableaux(l);
                let hooks: usize = l.hooks().iter().flatten().product();
                assert_eq!(syt.len() * hooks, (1..=n).product::<usize>());
                for m in &ps {
                    let k = kostka_foulkes(l, m).unwrap();
                    if l == m {
                        assert_eq!(k, TPolynomial::one());
                    }
                    if !k.is_zero() {
                        assert!(m.dominated_by(l));
                    }
                }
                let total = kostka_foulkes(l, &Partition::new(vec![1; n]).unwrap()).unwrap();
                assert_eq!(total.eval(1), syt.len() as i64);
                // charge on standard words is n(n-1)/2 - cocharge, with
                // cocharge the sum of descents
                for t in &syt {
                    let w = reading_word(t);
                    let pos = |x: usize| w.iter().position(|&y| y == x).unwrap();
                    let maj: usize = (1..n).filter(|&i| pos(i + 1) < pos(i)).map(|i| n - i).sum();
                    assert_eq!(classical_charge(t).unwrap(), n * (n - 1) / 2 - maj);
                }
            }
        }
    }
}
