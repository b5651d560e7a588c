//! The poset of k-shapes, paths in it, and diamond equivalence of paths.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::kshape::{is_k_shape, k_shapes_of_boundary};
use crate::moves::{enumerate_moves, Move, MoveOrderKey};
use crate::partition::Partition;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Poset {
    pub k: usize,
    pub n: usize,
    pub vertices: Vec<Partition>,
    /// Moves, grouped by source in vertex order.
    pub edges: Vec<Move>,
}

impl Poset {
    pub fn build(k: usize, n: usize) -> Result<Poset> {
        let vertices = k_shapes_of_boundary(k, n)?;
        let per_vertex: Vec<Vec<Move>> = vertices
            .par_iter()
            .map(|v| enumerate_moves(v, k))
            .collect::<Result<_>>()?;
        Ok(Poset { k, n, vertices, edges: per_vertex.into_iter().flatten().collect() })
    }

    pub fn out_degree(&self, v: &Partition) -> usize {
        self.edges.iter().filter(|m| &m.source == v).count()
    }

    pub fn in_degree(&self, v: &Partition) -> usize {
        self.edges.iter().filter(|m| &m.target == v).count()
    }

    /// Vertices with no incoming move (the tops of the poset).
    pub fn maximal(&self) -> Vec<Partition> {
        self.vertices.iter().filter(|v| self.in_degree(v) == 0).cloned().collect()
    }

    /// Vertices with no outgoing move.
    pub fn minimal(&self) -> Vec<Partition> {
        self.vertices.iter().filter(|v| self.out_degree(v) == 0).cloned().collect()
    }

    /// Every move adds cells, so acyclicity reduces to each target being
    /// strictly larger; this checks it along with closure of the vertex set.
    pub fn is_acyclic(&self) -> bool {
        self.edges
            .iter()
            .all(|m| m.target.size() > m.source.size() && self.vertices.binary_search(&m.target).is_ok())
    }

    /// Moves that are covering relations, i.e. not the endpoints of any
    /// longer path.
    pub fn hasse_edges(&self) -> Vec<&Move> {
        let reach = |from: &Partition, to: &Partition| -> bool {
            let mut stack = vec![from.clone()];
            while let Some(v) = stack.pop() {
                if &v == to {
                    return true;
                }
                if to.contains_partition(&v) {
                    stack.extend(self.edges.iter().filter(|m| m.source == v).map(|m| m.target.clone()));
                }
            }
            false
        };
        self.edges
            .iter()
            .filter(|m| {
                !self
                    .edges
                    .iter()
                    .any(|o| o.source == m.source && o.target != m.target && reach(&o.target, &m.target))
            })
            .collect()
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "digraph kshapes_k{}_n{} {{", self.k, self.n);
        for (i, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(s, "  v{i} [label=\"{v}\"];");
        }
        for m in &self.edges {
            let a = self.vertices.binary_search(&m.source).unwrap_or(usize::MAX);
            let b = self.vertices.binary_search(&m.target).unwrap_or(usize::MAX);
            let _ = writeln!(s, "  v{a} -> v{b} [label=\"{}({},{})\"];", m.orientation.letter(), m.rank, m.length);
        }
        s.push_str("}\n");
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Path {
    pub start: Partition,
    pub moves: Vec<Move>,
}

impl Path {
    pub fn empty(start: Partition) -> Path {
        Path { start, moves: Vec::new() }
    }

    pub fn end(&self) -> &Partition {
        self.moves.last().map(|m| &m.target).unwrap_or(&self.start)
    }

    pub fn charge(&self) -> usize {
        self.moves.iter().map(Move::charge).sum()
    }

    pub fn cocharge(&self) -> usize {
        self.moves.iter().map(Move::cocharge).sum()
    }

    pub fn order_key(&self) -> Vec<MoveOrderKey> {
        self.moves.iter().map(Move::order_key).collect()
    }

    pub fn is_chain(&self) -> bool {
        let mut cur = &self.start;
        for m in &self.moves {
            if &m.source != cur {
                return false;
            }
            cur = &m.target;
        }
        true
    }

    /// `λ; o:r:ℓ@(row,col); ...`
    pub fn text(&self) -> String {
        let mut s = self.start.to_string();
        for m in &self.moves {
            let _ = write!(s, "; {m}");
        }
        s
    }
}

/// Memoized move lists keyed by shape.
#[derive(Debug, Default)]
pub struct MoveCache {
    k: usize,
    map: HashMap<Partition, Vec<Move>>,
}

impl MoveCache {
    pub fn new(k: usize) -> Self {
        MoveCache { k, map: HashMap::new() }
    }

    pub fn moves(&mut self, l: &Partition) -> Result<&[Move]> {
        if !self.map.contains_key(l) {
            let ms = enumerate_moves(l, self.k)?;
            self.map.insert(l.clone(), ms);
        }
        Ok(&self.map[l])
    }
}

pub fn enumerate_paths(from: &Partition, to: &Partition, k: usize) -> Result<Vec<Path>> {
    enumerate_paths_cached(from, to, &mut MoveCache::new(k))
}

pub fn enumerate_paths_cached(from: &Partition, to: &Partition, cache: &mut MoveCache) -> Result<Vec<Path>> {
    let k = cache.k;
    if !is_k_shape(from, k)? || !is_k_shape(to, k)? {
        return domain(format!("{from} and {to} must both be {k}-shapes"));
    }
    if from.boundary_size(k) != to.boundary_size(k) {
        return domain(format!("{from} and {to} have different {k}-boundary sizes"));
    }
    let mut memo: HashMap<Partition, Vec<Vec<Move>>> = HashMap::new();
    let suffixes = paths_rec(from, to, cache, &mut memo)?;
    let mut out: Vec<Path> = suffixes
        .into_iter()
        .map(|moves| Path { start: from.clone(), moves })
        .collect();
    out.sort_by_key(Path::order_key);
    Ok(out)
}

fn paths_rec(
    cur: &Partition,
    to: &Partition,
    cache: &mut MoveCache,
    memo: &mut HashMap<Partition, Vec<Vec<Move>>>,
) -> Result<Vec<Vec<Move>>> {
    if cur == to {
        return Ok(vec![Vec::new()]);
    }
    if !to.contains_partition(cur) {
        return Ok(Vec::new());
    }
    if let Some(v) = memo.get(cur) {
        return Ok(v.clone());
    }
    let mut out = Vec::new();
    for m in cache.moves(cur)?.to_vec() {
        for tail in paths_rec(&m.target, to, cache, memo)? {
            let mut p = Vec::with_capacity(tail.len() + 1);
            p.push(m.clone());
            p.extend(tail);
            out.push(p);
        }
    }
    memo.insert(cur.clone(), out.clone());
    Ok(out)
}

/// Number of paths from `from` to `to`, without materializing them.
pub fn count_paths(from: &Partition, to: &Partition, cache: &mut MoveCache) -> Result<u64> {
    fn rec(cur: &Partition, to: &Partition, cache: &mut MoveCache, memo: &mut HashMap<Partition, u64>) -> Result<u64> {
        if cur == to {
            return Ok(1);
        }
        if !to.contains_partition(cur) {
            return Ok(0);
        }
        if let Some(&v) = memo.get(cur) {
            return Ok(v);
        }
        let mut total = 0;
        for m in cache.moves(cur)?.to_vec() {
            total += rec(&m.target, to, cache, memo)?;
        }
        memo.insert(cur.clone(), total);
        Ok(total)
    }
    rec(from, to, cache, &mut HashMap::new())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PathClass {
    pub representative: Path,
    pub members: Vec<Path>,
}

impl PathClass {
    pub fn charge(&self) -> usize {
        self.representative.charge()
    }

    pub fn cocharge(&self) -> usize {
        self.representative.cocharge()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Partitions paths with common endpoints into diamond classes.
///
/// Two paths are related by one rewrite when they agree outside a window
/// of one or two consecutive moves and the windows carry the same charge.
pub fn equivalence_classes(paths: &[Path]) -> Result<Vec<PathClass>> {
    if paths.is_empty() {
        return Ok(Vec::new());
    }
    let (s, e) = (&paths[0].start, paths[0].end().clone());
    if paths.iter().any(|p| &p.start != s || p.end() != &e) {
        return domain("paths do not share endpoints");
    }
    let mut ids = HashMap::new();
    let encoded: Vec<Vec<usize>> = paths
        .iter()
        .map(|p| {
            p.moves
                .iter()
                .map(|m| {
                    let n = ids.len();
                    *ids.entry(m.identity()).or_insert(n)
                })
                .collect()
        })
        .collect();
    let mut uf = UnionFind((0..paths.len()).collect());
    let mut seen: HashMap<(&[usize], &[usize], usize), usize> = HashMap::new();
    for (pi, (p, enc)) in paths.iter().zip(&encoded).enumerate() {
        for i in 0..enc.len() {
            for len in 1..=2 {
                if i + len > enc.len() {
                    continue;
                }
                let ch: usize = p.moves[i..i + len].iter().map(Move::charge).sum();
                let key = (&enc[..i], &enc[i + len..], ch);
                match seen.get(&key) {
                    Some(&q) => uf.union(pi, q),
                    None => {
                        seen.insert(key, pi);
                    }
                }
            }
        }
    }
    let mut groups: BTreeMap<usize, Vec<Path>> = BTreeMap::new();
    for (i, p) in paths.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(p.clone());
    }
    let mut classes: Vec<PathClass> = groups
        .into_values()
        .map(|mut members| {
            members.sort_by_key(Path::order_key);
            PathClass { representative: members[0].clone(), members }
        })
        .collect();
    classes.sort_by_key(|c| c.representative.order_key());
    Ok(classes)
}

/// The diamond class of `path` among all paths with its endpoints.
pub fn class_of(path: &Path, k: usize) -> Result<PathClass> {
    let all = enumerate_paths(&path.start, path.end(), k)?;
    let target = path.order_key();
    equivalence_classes(&all)?
        .into_iter()
        .find(|c| c.members.iter().any(|m| m.order_key() == target))
        .ok_or_else(|| crate::Error::Integrity(format!("path {} not found among enumerated paths", path.text())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moves::Orientation;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn shapes(v: &[&str]) -> Vec<Partition> {
        let mut out: Vec<Partition> = v.iter().map(|s| p(s)).collect();
        out.sort();
        out
    }

    #[test]
    fn poset_2_4() {
        let ps = Poset::build(2, 4).unwrap();
        assert_eq!(ps.vertices, shapes(&["2,2,1,1", "3,1,1", "4,2", "3,2,1,1", "4,2,1", "4,3,2,1"]));
        assert_eq!(ps.edges.len(), 6);
        assert_eq!(ps.hasse_edges().len(), 6);
        assert!(ps.is_acyclic());
        assert_eq!(ps.minimal(), vec![p("4,3,2,1")]);
    }

    #[test]
    fn poset_3_5() {
        let ps = Poset::build(3, 5).unwrap();
        let expected = shapes(&[
            "2,2,1,1,1", "3,1,1,1", "3,2,1", "4,1,1", "5,2", "3,2,1,1", "4,2,1", "3,2,2,1,1", "4,2,1,1", "5,3,1",
        ]);
        assert_eq!(ps.vertices, expected);
        assert_eq!(ps.edges.len(), 12);
        let mut edges: Vec<(String, String, char)> = ps
            .hasse_edges()
            .into_iter()
            .map(|m| (m.source.to_string(), m.target.to_string(), m.orientation.letter()))
            .collect();
        edges.sort();
        let mut diagram: Vec<(String, String, char)> = [
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
        ]
        .iter()
        .map(|(a, b, c)| (a.to_string(), b.to_string(), *c))
        .collect();
        diagram.sort();
        assert_eq!(edges, diagram);
    }

    #[test]
    fn trivial_poset() {
        let ps = Poset::build(2, 0).unwrap();
        assert_eq!(ps.vertices, vec![Partition::empty()]);
        assert!(ps.edges.is_empty());
    }

    #[test]
    fn extremes_are_cores() {
        for k in 2..=4 {
            for n in 0..=7 {
                let ps = Poset::build(k, n).unwrap();
                assert!(ps.is_acyclic());
                let mut cores_hi: Vec<Partition> =
                    ps.vertices.iter().filter(|v| v.is_p_core(k + 1).unwrap()).cloned().collect();
                let mut cores_lo: Vec<Partition> =
                    ps.vertices.iter().filter(|v| v.is_p_core(k).unwrap()).cloned().collect();
                cores_hi.sort();
                cores_lo.sort();
                assert_eq!(ps.maximal(), cores_hi, "k={k} n={n}");
                assert_eq!(ps.minimal(), cores_lo, "k={k} n={n}");
            }
        }
    }

    #[test]
    fn worked_paths() {
        let ps = enumerate_paths(&p("3,1,1"), &p("4,3,2,1"), 2).unwrap();
        let mut ch: Vec<usize> = ps.iter().map(Path::charge).collect();
        ch.sort();
        assert_eq!(ch, vec![2, 3]);
        assert_eq!(equivalence_classes(&ps).unwrap().len(), 2);

        let ps = enumerate_paths(&p("3,2,1"), &p("4,2,1,1"), 3).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|x| x.charge() == 1));
        let cl = equivalence_classes(&ps).unwrap();
        assert_eq!(cl.len(), 1);
        assert_eq!(cl[0].representative.moves[0].orientation, Orientation::Row);

        let ps = enumerate_paths(&p("3,2,1"), &p("3,2,1"), 3).unwrap();
        assert_eq!(ps.len(), 1);
        assert!(ps[0].moves.is_empty());
        assert_eq!(equivalence_classes(&ps).unwrap().len(), 1);
        assert!(enumerate_paths(&p("3,2,1"), &p("5,3,1,1"), 3).is_err());
    }

    #[test]
    fn classes_have_constant_charge() {
        for k in 2..=3 {
            for n in 2..=6 {
                let ps = Poset::build(k, n).unwrap();
                let mut cache = MoveCache::new(k);
                for a in ps.maximal() {
                    for b in ps.minimal() {
                        let paths = enumerate_paths_cached(&a, &b, &mut cache).unwrap();
                        assert_eq!(paths.len() as u64, count_paths(&a, &b, &mut cache).unwrap());
                        for c in equivalence_classes(&paths).unwrap() {
                            assert!(c.members.iter().all(|m| m.charge() == c.charge() && m.cocharge() == c.cocharge()));
                            assert!(c.members.iter().all(Path::is_chain));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_output() {
        let d = Poset::build(2, 4).unwrap().to_dot();
        assert!(d.starts_with("digraph"));
        assert_eq!(d.matches("->").count(), 6);
        assert!(d.contains("label=\"4,3,2,1\""));
    }
}
