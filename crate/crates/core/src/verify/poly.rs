//! Exact polynomials in `t` and truncated symmetric polynomials with
//! polynomial coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TPolynomial {
    /// `coeffs[d]` is the coefficient of `t^d`; no trailing zeros.
    coeffs: Vec<i64>,
}

impl TPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        TPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        TPolynomial::default()
    }

    pub fn one() -> Self {
        TPolynomial::monomial(0, 1)
    }

    pub fn monomial(degree: usize, c: i64) -> Self {
        let mut v = vec![0; degree + 1];
        v[degree] = c;
        TPolynomial::new(v)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, t: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * t + c)
    }
}

impl Add for &TPolynomial {
    type Output = TPolynomial;
    fn add(self, o: &TPolynomial) -> TPolynomial {
        let n = self.coeffs.len().max(o.coeffs.len());
        let get = |v: &[i64], i: usize| v.get(i).copied().unwrap_or(0);
        TPolynomial::new((0..n).map(|i| get(&self.coeffs, i) + get(&o.coeffs, i)).collect())
    }
}

impl Mul for &TPolynomial {
    type Output = TPolynomial;
    fn mul(self, o: &TPolynomial) -> TPolynomial {
        if self.is_zero() || o.is_zero() {
            return TPolynomial::zero();
        }
        let mut v = vec![0; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        TPolynomial::new(v)
    }
}

impl fmt::Display for TPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(d, &c)| match (d, c) {
                (0, c) => c.to_string(),
                (1, 1) => "t".into(),
                (1, c) => format!("{c}t"),
                (d, 1) => format!("t^{d}"),
                (d, c) => format!("{c}t^{d}"),
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

/// A polynomial in `x_1..x_v` with coefficients in `Z[t]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TruncatedSymPoly {
    pub vars: usize,
    pub terms: BTreeMap<Vec<usize>, TPolynomial>,
}

impl TruncatedSymPoly {
    pub fn zero(vars: usize) -> Self {
        TruncatedSymPoly { vars, terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, exps: Vec<usize>, c: &TPolynomial) {
        assert_eq!(exps.len(), self.vars);
        let e = self.terms.entry(exps).or_default();
        *e = &*e + c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn coeff(&self, exps: &[usize]) -> TPolynomial {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &TPolynomial) -> Self {
        let mut out = TruncatedSymPoly::zero(self.vars);
        for (e, a) in &self.terms {
            out.add_term(e.clone(), &(a * c));
        }
        out
    }

    /// Drops every monomial with an exponent above `bound`.
    pub fn reduce(&self, bound: usize) -> Self {
        let terms = self.terms.iter().filter(|(e, _)| e.iter().all(|&x| x <= bound));
        TruncatedSymPoly { vars: self.vars, terms: terms.map(|(e, c)| (e.clone(), c.clone())).collect() }
    }

    pub fn at_t(&self, t: i64) -> BTreeMap<Vec<usize>, i64> {
        self.terms.iter().map(|(e, c)| (e.clone(), c.eval(t))).filter(|(_, c)| *c != 0).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(e, c)| {
            let mut s = e.clone();
            s.sort_unstable_by(|a, b| b.cmp(a));
            self.coeff(&s) == *c
        })
    }
}

impl Add for &TruncatedSymPoly {
    type Output = TruncatedSymPoly;
    fn add(self, o: &TruncatedSymPoly) -> TruncatedSymPoly {
        let mut out = self.clone();
        for (e, c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
}

/// Weak compositions of `n` into `parts` entries, each at most `max`.
pub fn compositions(n: usize, parts: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(parts);
    fn rec(n: usize, parts: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == parts {
            if n == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for a in 0..=n.min(max) {
            cur.push(a);
            rec(n - a, parts, max, cur, out);
            cur.pop();
        }
    }
    rec(n, parts, max, &mut cur, &mut out);
    out
}
