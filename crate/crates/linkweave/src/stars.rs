//! Star and fan patterns of oriented triangles, and the link maps they induce.
//!
//! A star `p|O|I` over K_n is the set of oriented triangles `pqr` with `q` in `O` and `r`
//! in `I`. A fan (`|O| = 1` or `|I| = 1`) has more than one apex: `p{q}I` equals `qI{p}`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{all_triangles, triangle_count, OrientedTriangle, VertexId, VertexSet};

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum StarError {
    #[error("apex, out-set and in-set do not partition the {n} vertices")]
    NotPartition { n: usize },
    #[error("out-set and in-set must both be nonempty")]
    EmptyPart,
    #[error("triangle {triangle} has value {value}; star detection needs values in -1..=1")]
    ValuesOutOfRange { triangle: OrientedTriangle, value: i64 },
    #[error("both stars have apex {0}")]
    SameApex(VertexId),
    #[error("parse error: {0}")]
    Parse(String),
}

/// An ordered partition `({apex}, out, inn)` of the vertices of K_n.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct Star {
    pub n: usize,
    pub apex: VertexId,
    pub out: VertexSet,
    #[serde(rename = "in")]
    pub inn: VertexSet,
}

impl Star {
    pub fn new(n: usize, apex: VertexId, out: VertexSet, inn: VertexSet) -> Result<Self, StarError> {
        if out.is_empty() || inn.is_empty() {
            return Err(StarError::EmptyPart);
        }
        let all = VertexSet::single(apex).union(out).union(inn);
        let sizes = 1 + out.len() + inn.len();
        if apex >= n || all != VertexSet::full(n) || sizes != n {
            return Err(StarError::NotPartition { n });
        }
        Ok(Star { n, apex, out, inn })
    }

    /// Star over K_n whose in-set is everything not named.
    pub fn with_rest_in(n: usize, apex: VertexId, out: VertexSet) -> Result<Self, StarError> {
        let inn = VertexSet::full(n).minus(out).without(apex);
        Star::new(n, apex, out, inn)
    }

    pub fn is_proper(&self) -> bool {
        self.out.len() >= 2 && self.inn.len() >= 2
    }

    pub fn is_fan(&self) -> bool {
        !self.is_proper()
    }

    /// The oriented triangles `apex q r`, `q` in `out`, `r` in `inn`.
    pub fn triangles(&self) -> Vec<OrientedTriangle> {
        let mut v = Vec::with_capacity(self.out.len() * self.inn.len());
        for q in self.out.iter() {
            for r in self.inn.iter() {
                v.push(OrientedTriangle::of(self.apex, q, r));
            }
        }
        v
    }

    /// `p|I|O`, the same triangles with opposite orientation.
    pub fn reversed(&self) -> Star {
        Star { n: self.n, apex: self.apex, out: self.inn, inn: self.out }
    }

    /// The star with the sign applied (`-1` reverses).
    pub fn signed(&self, sign: i64) -> Star {
        if sign < 0 {
            self.reversed()
        } else {
            *self
        }
    }

    /// Every `(apex, out, in)` description of the same triangle set, including `self`.
    pub fn representations(&self) -> Vec<Star> {
        let mut found = vec![*self];
        let mut i = 0;
        while i < found.len() {
            let s = found[i];
            let mut next = Vec::new();
            if let Some(q) = single(s.out) {
                // p{q}I = qI{p}
                next.push(Star { n: s.n, apex: q, out: s.inn, inn: VertexSet::single(s.apex) });
            }
            if let Some(r) = single(s.inn) {
                // pO{r} = r{p}O
                next.push(Star { n: s.n, apex: r, out: VertexSet::single(s.apex), inn: s.out });
            }
            for t in next {
                if !found.iter().any(|f| f.apex == t.apex && f.out == t.out) {
                    found.push(t);
                }
            }
            i += 1;
        }
        found
    }

    /// Vertices that can serve as apex.
    pub fn apexes(&self) -> VertexSet {
        self.representations().iter().map(|s| s.apex).collect()
    }

    /// The representation with the least apex.
    pub fn canonical(&self) -> Star {
        self.representations().into_iter().min_by_key(|s| s.apex).expect("self is a representation")
    }

    /// The representation with the given apex, if any.
    pub fn with_apex(&self, p: VertexId) -> Option<Star> {
        self.representations().into_iter().find(|s| s.apex == p)
    }

    /// +1, -1 or 0: the star's value on an oriented triangle.
    pub fn value(&self, t: &OrientedTriangle) -> i64 {
        match t.starting_at(self.apex) {
            Some([_, q, r]) if self.out.contains(q) && self.inn.contains(r) => 1,
            Some([_, q, r]) if self.inn.contains(q) && self.out.contains(r) => -1,
            _ => 0,
        }
    }

    /// The link map of a curve linking K_n in this star.
    pub fn indicator(&self) -> LinkMap {
        let mut m = LinkMap::zero(self.n);
        for t in self.triangles() {
            m.set(&t, 1);
        }
        m
    }

    /// Literal `p|q1 q2|r1 r2`.
    pub fn literal(&self) -> String {
        format!("{}|{}|{}", self.apex, self.out.spaced(), self.inn.spaced())
    }
}

fn single(s: VertexSet) -> Option<VertexId> {
    if s.len() == 1 {
        s.least()
    } else {
        None
    }
}

impl PartialEq for Star {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = (self.canonical(), other.canonical());
        a.n == b.n && a.apex == b.apex && a.out == b.out && a.inn == b.inn
    }
}

impl Eq for Star {}

impl Hash for Star {
    fn hash<H: Hasher>(&self, state: &mut H) {
        let c = self.canonical();
        (c.n, c.apex, c.out, c.inn).hash(state);
    }
}

impl fmt::Display for Star {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.literal())
    }
}

impl FromStr for Star {
    type Err = StarError;

    /// Parses `p|q1 q2|r1 r2 r3`; the order is the number of vertices named.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split('|').collect();
        if parts.len() != 3 {
            return Err(StarError::Parse(format!("{s:?} is not apex|out|in")));
        }
        let list = |t: &str| -> Result<Vec<VertexId>, StarError> {
            t.split_whitespace()
                .map(|x| x.parse::<VertexId>().map_err(|_| StarError::Parse(format!("bad vertex {x:?}"))))
                .collect()
        };
        let apex = list(parts[0])?;
        if apex.len() != 1 {
            return Err(StarError::Parse("apex must be a single vertex".into()));
        }
        let out = list(parts[1])?;
        let inn = list(parts[2])?;
        if out.iter().chain(&inn).chain(&apex).any(|&v| v >= 64) {
            return Err(StarError::Parse("vertex index above 63".into()));
        }
        let n = 1 + out.len() + inn.len();
        Star::new(n, apex[0], out.into_iter().collect(), inn.into_iter().collect())
    }
}

/// Integer value for every oriented triangle of K_n, antisymmetric under reversal.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LinkMap {
    n: usize,
    values: Vec<i64>,
}

impl LinkMap {
    pub fn zero(n: usize) -> Self {
        LinkMap { n, values: vec![0; triangle_count(n)] }
    }

    /// Builds a map from values on increasingly oriented triangles, in rank order.
    pub fn from_values(n: usize, values: Vec<i64>) -> Self {
        assert_eq!(values.len(), triangle_count(n), "one value per triangle");
        LinkMap { n, values }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, t: &OrientedTriangle) -> i64 {
        self.values[t.rank()] * t.orientation()
    }

    pub fn set(&mut self, t: &OrientedTriangle, v: i64) {
        self.values[t.rank()] = v * t.orientation();
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn negated(&self) -> LinkMap {
        LinkMap { n: self.n, values: self.values.iter().map(|v| -v).collect() }
    }

    pub fn plus(&self, o: &LinkMap) -> LinkMap {
        assert_eq!(self.n, o.n);
        LinkMap { n: self.n, values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect() }
    }

    /// Nonzero entries, each triangle oriented so that its value is positive.
    pub fn support(&self) -> Vec<(OrientedTriangle, i64)> {
        all_triangles(self.n)
            .into_iter()
            .zip(&self.values)
            .filter(|(_, &v)| v != 0)
            .map(|(t, &v)| if v > 0 { (t, v) } else { (t.reversed(), -v) })
            .collect()
    }

    /// Vertices lying on every nonzero triangle.
    pub fn common_vertices(&self) -> VertexSet {
        self.support().iter().fold(VertexSet::full(self.n), |acc, (t, _)| acc.intersection(t.vertex_set()))
    }
}

/// The star whose indicator equals `m`, in canonical form, if there is one.
pub fn detect_star(m: &LinkMap) -> Result<Option<Star>, StarError> {
    let support = m.support();
    if let Some((t, v)) = support.iter().find(|(_, v)| *v > 1) {
        return Err(StarError::ValuesOutOfRange { triangle: *t, value: *v });
    }
    if support.is_empty() {
        return Ok(None);
    }
    let n = m.order();
    'candidates: for p in m.common_vertices().iter() {
        let mut out = VertexSet::EMPTY;
        let mut inn = VertexSet::EMPTY;
        for (t, _) in &support {
            let [_, q, r] = t.starting_at(p).expect("p is common");
            out = out.with(q);
            inn = inn.with(r);
        }
        if !out.is_disjoint(inn) {
            continue 'candidates;
        }
        if let Ok(s) = Star::new(n, p, out, inn) {
            if support.len() == out.len() * inn.len() {
                return Ok(Some(s.canonical()));
            }
        }
    }
    Ok(None)
}

/// Signs `(e1, e2)` making `e1*s1` and `e2*s2` mutually oriented (each apex in the other's out-set).
pub fn mutual_orientation(s1: &Star, s2: &Star) -> Result<(i64, i64), StarError> {
    if s1.apex == s2.apex {
        return Err(StarError::SameApex(s1.apex));
    }
    let e1 = if s1.out.contains(s2.apex) { 1 } else { -1 };
    let e2 = if s2.out.contains(s1.apex) { 1 } else { -1 };
    Ok((e1, e2))
}

/// The least vertex that can be the apex of both stars.
pub fn common_apex(s1: &Star, s2: &Star) -> Option<VertexId> {
    s1.apexes().intersection(s2.apexes()).least()
}

/// Every star of K_n, each triangle set once (canonical forms).
pub fn all_stars(n: usize) -> Vec<Star> {
    let mut out = Vec::new();
    for p in 0..n {
        let rest = VertexSet::full(n).without(p);
        let elems = rest.to_vec();
        for mask in 1u64..(1u64 << elems.len()) - 1 {
            let o: VertexSet = elems.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect();
            let s = Star::new(n, p, o, rest.minus(o)).expect("partition by construction");
            if s.canonical().apex == p {
                out.push(s.canonical());
            }
        }
    }
    out.sort_by_key(|s| (s.apex, s.out, s.inn));
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        let s: Star = "0|1 2|3 4 5".parse().unwrap();
        assert_eq!(s.n, 6);
        assert_eq!(s.literal(), "0|1 2|3 4 5");
        assert!(s.is_proper());
        assert!("0|1|1 2".parse::<Star>().is_err());
    }

    #[test]
    fn fan_has_two_apexes() {
        let s: Star = "2|0|1 3".parse().unwrap();
        assert_eq!(s.apexes().to_vec(), vec![0, 2]);
        let c = s.canonical();
        assert_eq!(c.literal(), "0|1 3|2");
        assert_eq!(c, s);
    }

    #[test]
    fn triangle_star_has_three_apexes() {
        let s: Star = "0|1|2".parse().unwrap();
        assert_eq!(s.apexes().len(), 3);
    }
}
