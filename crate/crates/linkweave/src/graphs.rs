//! Complete-graph combinatorics: vertex sets, oriented triangles, cycles and their
//! fan decompositions into triangle chains.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub type VertexId = usize;

/// Largest order accepted by [`enumerate_cycles`].
pub const CYCLE_ENUMERATION_LIMIT: usize = 9;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {n} exceeds the limit {limit}")]
    OrderTooLarge { n: usize, limit: usize },
    #[error("order {0} is below 3")]
    OrderTooSmall(usize),
    #[error("vertex {0} is not on the cycle")]
    BaseNotOnCycle(VertexId),
    #[error("vertex {0} appears twice")]
    DuplicateVertex(VertexId),
    #[error("a cycle needs at least 3 vertices")]
    ShortCycle,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A set of vertices stored as a bitmask (orders up to 64).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn single(v: VertexId) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: VertexId) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn with(self, v: VertexId) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: VertexId) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, o: Self) -> Self {
        VertexSet(self.0 | o.0)
    }

    pub fn intersection(self, o: Self) -> Self {
        VertexSet(self.0 & o.0)
    }

    pub fn minus(self, o: Self) -> Self {
        VertexSet(self.0 & !o.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_disjoint(self, o: Self) -> bool {
        self.0 & o.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn least(self) -> Option<VertexId> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = VertexId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<VertexId> {
        self.iter().collect()
    }

    /// Space-separated vertex list, as used in star literals.
    pub fn spaced(self) -> String {
        self.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
    }
}

impl FromIterator<VertexId> for VertexSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet::EMPTY, VertexSet::with)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_vec().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<VertexId>::deserialize(d)?;
        Ok(v.into_iter().collect())
    }
}

/// An oriented triangle, stored with its least vertex first.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrientedTriangle {
    v: [VertexId; 3],
}

impl OrientedTriangle {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Self, GraphError> {
        if a == b || a == c {
            return Err(GraphError::DuplicateVertex(a));
        }
        if b == c {
            return Err(GraphError::DuplicateVertex(b));
        }
        let v = if a < b && a < c {
            [a, b, c]
        } else if b < c {
            [b, c, a]
        } else {
            [c, a, b]
        };
        Ok(OrientedTriangle { v })
    }

    /// Panicking constructor for vertices known to be distinct.
    pub fn of(a: VertexId, b: VertexId, c: VertexId) -> Self {
        Self::new(a, b, c).expect("distinct vertices")
    }

    pub fn vertices(&self) -> [VertexId; 3] {
        self.v
    }

    pub fn reversed(&self) -> Self {
        OrientedTriangle { v: [self.v[0], self.v[2], self.v[1]] }
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.v.contains(&x)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.v.iter().copied().collect()
    }

    /// Vertices in increasing order.
    pub fn sorted(&self) -> [VertexId; 3] {
        let mut s = self.v;
        s.sort_unstable();
        s
    }

    /// +1 when the orientation agrees with increasing vertex order.
    pub fn orientation(&self) -> i64 {
        if self.v[1] < self.v[2] {
            1
        } else {
            -1
        }
    }

    /// Rank of the underlying unoriented triangle among all triangles of any K_n
    /// (colexicographic order of the sorted vertex triple).
    pub fn rank(&self) -> usize {
        let [i, j, k] = self.sorted();
        binom(k, 3) + binom(j, 2) + i
    }

    /// The same triangle rotated so that `x` comes first.
    pub fn starting_at(&self, x: VertexId) -> Option<[VertexId; 3]> {
        let pos = self.v.iter().position(|&y| y == x)?;
        Some([self.v[pos], self.v[(pos + 1) % 3], self.v[(pos + 2) % 3]])
    }

    pub fn directed_edges(&self) -> [(VertexId, VertexId); 3] {
        [(self.v[0], self.v[1]), (self.v[1], self.v[2]), (self.v[2], self.v[0])]
    }

    /// Number of shared vertices with another triangle.
    pub fn common_vertices(&self, o: &OrientedTriangle) -> usize {
        self.vertex_set().intersection(o.vertex_set()).len()
    }
}

impl fmt::Debug for OrientedTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}.{}", self.v[0], self.v[1], self.v[2])
    }
}

impl fmt::Display for OrientedTriangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for OrientedTriangle {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split('.').collect();
        if parts.len() != 3 {
            return Err(GraphError::Parse(format!("triangle {s:?} is not a.b.c")));
        }
        let mut v = [0usize; 3];
        for (slot, p) in v.iter_mut().zip(&parts) {
            *slot = p.parse().map_err(|_| GraphError::Parse(format!("bad vertex in {s:?}")))?;
        }
        OrientedTriangle::new(v[0], v[1], v[2])
    }
}

impl Serialize for OrientedTriangle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of triangles in K_n.
pub fn triangle_count(n: usize) -> usize {
    binom(n, 3)
}

/// All triangles of K_n in increasing-vertex orientation, ordered by [`OrientedTriangle::rank`].
pub fn all_triangles(n: usize) -> Vec<OrientedTriangle> {
    let mut out = Vec::with_capacity(triangle_count(n));
    for k in 2..n {
        for j in 1..k {
            for i in 0..j {
                out.push(OrientedTriangle { v: [i, j, k] });
            }
        }
    }
    out
}

/// A cycle of K_n as a vertex sequence, stored rotated so its least vertex is first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    v: Vec<VertexId>,
}

impl Cycle {
    pub fn new(vertices: Vec<VertexId>) -> Result<Self, GraphError> {
        if vertices.len() < 3 {
            return Err(GraphError::ShortCycle);
        }
        let mut seen = VertexSet::EMPTY;
        for &x in &vertices {
            if seen.contains(x) {
                return Err(GraphError::DuplicateVertex(x));
            }
            seen = seen.with(x);
        }
        let start = (0..vertices.len()).min_by_key(|&i| vertices[i]).unwrap_or(0);
        let mut v = vertices;
        v.rotate_left(start);
        Ok(Cycle { v })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.v
    }

    pub fn len(&self) -> usize {
        self.v.len()
    }

    pub fn is_empty(&self) -> bool {
        self.v.is_empty()
    }

    pub fn reversed(&self) -> Cycle {
        let mut v = self.v.clone();
        v.reverse();
        Cycle::new(v).expect("reversal keeps a valid cycle")
    }

    pub fn contains(&self, x: VertexId) -> bool {
        self.v.contains(&x)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.v.iter().copied().collect()
    }

    pub fn directed_edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        let n = self.v.len();
        (0..n).map(move |i| (self.v[i], self.v[(i + 1) % n]))
    }

    /// Signed edge multiset with keys `(min, max)`.
    pub fn edge_chain(&self) -> BTreeMap<(VertexId, VertexId), i64> {
        let mut m = BTreeMap::new();
        for (a, b) in self.directed_edges() {
            add_edge(&mut m, a, b, 1);
        }
        m
    }
}

impl fmt::Debug for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.v.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "))
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Serialize for Cycle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.v.serialize(s)
    }
}

fn add_edge(m: &mut BTreeMap<(VertexId, VertexId), i64>, a: VertexId, b: VertexId, c: i64) {
    let (key, s) = if a < b { ((a, b), c) } else { ((b, a), -c) };
    let e = m.entry(key).or_insert(0);
    *e += s;
    if *e == 0 {
        m.remove(&key);
    }
}

/// Every cycle of K_n exactly once, up to rotation and reversal.
///
/// Each cycle starts at its least vertex and has its second vertex smaller than its last.
/// Output is sorted by length, then lexicographically.
pub fn enumerate_cycles(n: usize, max_len: Option<usize>) -> Result<Vec<Cycle>, GraphError> {
    if n > CYCLE_ENUMERATION_LIMIT {
        return Err(GraphError::OrderTooLarge { n, limit: CYCLE_ENUMERATION_LIMIT });
    }
    if n < 3 {
        return Err(GraphError::OrderTooSmall(n));
    }
    let top = max_len.unwrap_or(n).min(n);
    let mut out = Vec::new();
    for len in 3..=top {
        let mut path = Vec::with_capacity(len);
        for start in 0..n {
            path.clear();
            path.push(start);
            extend(n, len, VertexSet::single(start), &mut path, &mut out);
        }
    }
    Ok(out)
}

fn extend(n: usize, len: usize, used: VertexSet, path: &mut Vec<VertexId>, out: &mut Vec<Cycle>) {
    if path.len() == len {
        if path[1] < path[len - 1] {
            out.push(Cycle { v: path.clone() });
        }
        return;
    }
    for x in (path[0] + 1)..n {
        if !used.contains(x) {
            path.push(x);
            extend(n, len, used.with(x), path, out);
            path.pop();
        }
    }
}

/// Closed-form count of cycles of K_n: sum over k of C(n,k) (k-1)!/2.
pub fn cycle_count(n: usize) -> usize {
    (3..=n).map(|k| binom(n, k) * (1..k).product::<usize>() / 2).sum()
}

/// A formal integer combination of oriented triangles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangleChain {
    pub terms: Vec<(OrientedTriangle, i8)>,
}

impl TriangleChain {
    /// Signed edge multiset of the chain's boundary, keyed by `(min, max)`.
    pub fn edge_chain(&self) -> BTreeMap<(VertexId, VertexId), i64> {
        let mut m = BTreeMap::new();
        for (t, c) in &self.terms {
            for (a, b) in t.directed_edges() {
                add_edge(&mut m, a, b, *c as i64);
            }
        }
        m
    }
}

/// Fan decomposition of `c` from `base`: triangles `(base, v_i, v_{i+1})`, coefficient +1.
pub fn triangle_decomposition(c: &Cycle, base: VertexId) -> Result<TriangleChain, GraphError> {
    let pos = c.v.iter().position(|&x| x == base).ok_or(GraphError::BaseNotOnCycle(base))?;
    let k = c.v.len();
    let at = |i: usize| c.v[(pos + i) % k];
    let terms = (1..k - 1).map(|i| (OrientedTriangle::of(base, at(i), at(i + 1)), 1i8)).collect();
    Ok(TriangleChain { terms })
}

/// The four faces `p1p2p3, p3p2p0, p0p1p3, p2p1p0` of the tetrahedron on `p`; they sum to zero.
pub fn boundary_quadruple(p: [VertexId; 4]) -> Result<[OrientedTriangle; 4], GraphError> {
    for i in 0..4 {
        for j in (i + 1)..4 {
            if p[i] == p[j] {
                return Err(GraphError::DuplicateVertex(p[i]));
            }
        }
    }
    let [p0, p1, p2, p3] = p;
    Ok([
        OrientedTriangle::of(p1, p2, p3),
        OrientedTriangle::of(p3, p2, p0),
        OrientedTriangle::of(p0, p1, p3),
        OrientedTriangle::of(p2, p1, p0),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_canonical_rotation() {
        let t = OrientedTriangle::of(2, 0, 1);
        assert_eq!(t.vertices(), [0, 1, 2]);
        assert_eq!(t, OrientedTriangle::of(1, 2, 0));
        assert_ne!(t, OrientedTriangle::of(0, 2, 1));
        assert_eq!(t.reversed(), OrientedTriangle::of(0, 2, 1));
    }

    #[test]
    fn ranks_are_dense() {
        for (i, t) in all_triangles(7).iter().enumerate() {
            assert_eq!(t.rank(), i);
        }
    }

    #[test]
    fn triangle_parse_round_trip() {
        let t: OrientedTriangle = "3.1.2".parse().unwrap();
        assert_eq!(t.to_string(), "1.2.3");
        assert!("1.1.2".parse::<OrientedTriangle>().is_err());
    }

    #[test]
    fn vertex_set_ops() {
        let s: VertexSet = [1, 4, 6].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert_eq!(s.least(), Some(1));
        assert_eq!(s.to_vec(), vec![1, 4, 6]);
        assert_eq!(s.spaced(), "1 4 6");
        assert!(s.minus(VertexSet::single(4)).is_disjoint(VertexSet::single(4)));
    }
}
