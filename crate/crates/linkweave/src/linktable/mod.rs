//! Triangle-pair linking tables between G = K_m and H = K_n, and the cycle-pair linking
//! numbers they determine.

mod status;

pub use status::{linkage_status, sample_status, LinkageStatus, SampleOutcome, Witness, EXHAUSTIVE_LIMIT};

use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{
    all_triangles, boundary_quadruple, triangle_count, triangle_decomposition, Cycle, GraphError, OrientedTriangle,
    VertexId,
};
use crate::stars::LinkMap;

/// Which graph of the pair.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    G,
    H,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::G => Side::H,
            Side::H => Side::G,
        }
    }
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Side::G => "G",
            Side::H => "H",
        })
    }
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum TableError {
    #[error("tetrahedron {quadruple:?} of {side} against {fixed} sums to {sum}")]
    Inconsistent { side: Side, quadruple: [VertexId; 4], fixed: OrientedTriangle, sum: i64 },
    #[error("cycle-pair value depends on the fan base; the table is inconsistent")]
    InconsistentTable,
    #[error("conflicting values for {0} / {1}")]
    Conflict(OrientedTriangle, OrientedTriangle),
    #[error("vertex {vertex} outside a graph of order {order}")]
    VertexOutOfRange { vertex: VertexId, order: usize },
    #[error("order {m}x{n} exceeds the exhaustive limit {limit}")]
    OrderTooLarge { m: usize, n: usize, limit: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("table format: {0}")]
    Parse(String),
}

/// Linking number of every (G triangle, H triangle) pair.
///
/// Stored densely over increasingly oriented triangles in rank order; other orientations
/// follow by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TriangleLinkTable {
    m: usize,
    n: usize,
    values: Vec<i64>,
}

impl TriangleLinkTable {
    pub fn zero(m: usize, n: usize) -> Self {
        TriangleLinkTable { m, n, values: vec![0; triangle_count(m) * triangle_count(n)] }
    }

    /// Fills every entry from `f(T, U)` with `T`, `U` increasingly oriented.
    pub fn from_fn(m: usize, n: usize, mut f: impl FnMut(&OrientedTriangle, &OrientedTriangle) -> i64) -> Self {
        let hs = all_triangles(n);
        let mut values = Vec::with_capacity(triangle_count(m) * hs.len());
        for t in all_triangles(m) {
            for u in &hs {
                values.push(f(&t, u));
            }
        }
        TriangleLinkTable { m, n, values }
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn order(&self, side: Side) -> usize {
        match side {
            Side::G => self.m,
            Side::H => self.n,
        }
    }

    fn index(&self, t: &OrientedTriangle, u: &OrientedTriangle) -> usize {
        t.rank() * triangle_count(self.n) + u.rank()
    }

    pub fn get(&self, t: &OrientedTriangle, u: &OrientedTriangle) -> i64 {
        self.values[self.index(t, u)] * t.orientation() * u.orientation()
    }

    pub fn set(&mut self, t: &OrientedTriangle, u: &OrientedTriangle, v: i64) {
        let i = self.index(t, u);
        self.values[i] = v * t.orientation() * u.orientation();
    }

    /// The table with G and H exchanged.
    pub fn transposed(&self) -> TriangleLinkTable {
        let ns = triangle_count(self.n);
        let ms = triangle_count(self.m);
        let mut values = vec![0; self.values.len()];
        for i in 0..ms {
            for j in 0..ns {
                values[j * ms + i] = self.values[i * ns + j];
            }
        }
        TriangleLinkTable { m: self.n, n: self.m, values }
    }

    pub fn negated(&self) -> TriangleLinkTable {
        TriangleLinkTable { m: self.m, n: self.n, values: self.values.iter().map(|v| -v).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// How the G triangle `t` links the triangles of H.
    pub fn row(&self, t: &OrientedTriangle) -> LinkMap {
        let ns = triangle_count(self.n);
        let start = t.rank() * ns;
        let sign = t.orientation();
        LinkMap::from_values(self.n, self.values[start..start + ns].iter().map(|v| v * sign).collect())
    }

    /// How the H triangle `u` links the triangles of G.
    pub fn column(&self, u: &OrientedTriangle) -> LinkMap {
        let ns = triangle_count(self.n);
        let sign = u.orientation();
        let j = u.rank();
        LinkMap::from_values(self.m, (0..triangle_count(self.m)).map(|i| self.values[i * ns + j] * sign).collect())
    }

    /// Link map of a triangle on `side` against the other side.
    pub fn link_map(&self, side: Side, t: &OrientedTriangle) -> LinkMap {
        match side {
            Side::G => self.row(t),
            Side::H => self.column(t),
        }
    }

    /// Triangles of `side` (increasingly oriented) that link some triangle of the other side.
    pub fn linking_triangles(&self, side: Side) -> Vec<OrientedTriangle> {
        all_triangles(self.order(side)).into_iter().filter(|t| !self.link_map(side, t).is_zero()).collect()
    }

    /// Nonzero entries on increasingly oriented triangle pairs, in rank order.
    pub fn nonzero(&self) -> Vec<(OrientedTriangle, OrientedTriangle, i64)> {
        let hs = all_triangles(self.n);
        let mut out = Vec::new();
        for (i, t) in all_triangles(self.m).into_iter().enumerate() {
            for (j, u) in hs.iter().enumerate() {
                let v = self.values[i * hs.len() + j];
                if v != 0 {
                    out.push((t, *u, v));
                }
            }
        }
        out
    }

    pub fn max_abs(&self) -> i64 {
        self.values.iter().map(|v| v.abs()).max().unwrap_or(0)
    }

    /// Text form: header `m n`, then `a.b.c d.e.f value` for each nonzero entry.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}\n", self.m, self.n);
        for (t, u, v) in self.nonzero() {
            let _ = writeln!(s, "{t} {u} {v}");
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self, TableError> {
        let mut lines = text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| TableError::Parse("missing header".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| TableError::Parse(format!("bad header {header:?}"))))
            .collect::<Result<_, _>>()?;
        let [m, n] = dims[..] else {
            return Err(TableError::Parse(format!("header {header:?} is not `m n`")));
        };
        let mut table = TriangleLinkTable::zero(m, n);
        let mut seen = vec![false; table.values.len()];
        for line in lines {
            let f: Vec<&str> = line.split_whitespace().collect();
            if f.len() != 3 {
                return Err(TableError::Parse(format!("line {line:?} is not `T U value`")));
            }
            let t: OrientedTriangle = f[0].parse()?;
            let u: OrientedTriangle = f[1].parse()?;
            let v: i64 = f[2].parse().map_err(|_| TableError::Parse(format!("bad value in {line:?}")))?;
            for (tri, order) in [(&t, m), (&u, n)] {
                if let Some(&x) = tri.vertices().iter().find(|&&x| x >= order) {
                    return Err(TableError::VertexOutOfRange { vertex: x, order });
                }
            }
            let i = table.index(&t, &u);
            if seen[i] && table.get(&t, &u) != v {
                return Err(TableError::Conflict(t, u));
            }
            seen[i] = true;
            table.set(&t, &u, v);
        }
        Ok(table)
    }
}

/// Checks the tetrahedron sums on both sides (antisymmetry holds by storage).
pub fn validate_consistency(t: &TriangleLinkTable) -> Result<(), TableError> {
    check_side(t, Side::G)?;
    check_side(t, Side::H)
}

fn check_side(t: &TriangleLinkTable, side: Side) -> Result<(), TableError> {
    let k = t.order(side);
    let others = all_triangles(t.order(side.other()));
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                for d in c + 1..k {
                    let faces = boundary_quadruple([a, b, c, d])?;
                    for u in &others {
                        let sum: i64 = faces
                            .iter()
                            .map(|f| match side {
                                Side::G => t.get(f, u),
                                Side::H => t.get(u, f),
                            })
                            .sum();
                        if sum != 0 {
                            return Err(TableError::Inconsistent { side, quadruple: [a, b, c, d], fixed: *u, sum });
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn pair_value(t: &TriangleLinkTable, c: &Cycle, cb: VertexId, d: &Cycle, db: VertexId) -> Result<i64, TableError> {
    let dc = triangle_decomposition(c, cb)?;
    let dd = triangle_decomposition(d, db)?;
    let mut s = 0;
    for (x, a) in &dc.terms {
        for (y, b) in &dd.terms {
            s += t.get(x, y) * (*a as i64) * (*b as i64);
        }
    }
    Ok(s)
}

/// Linking number of a G cycle and an H cycle by double fan decomposition.
///
/// Evaluated from two different bases on each cycle; a mismatch means the table is not
/// consistent.
pub fn cycle_pair_linking(t: &TriangleLinkTable, c: &Cycle, d: &Cycle) -> Result<i64, TableError> {
    let v = pair_value(t, c, c.vertices()[0], d, d.vertices()[0])?;
    let w = pair_value(t, c, c.vertices()[1], d, d.vertices()[1])?;
    if v != w {
        return Err(TableError::InconsistentTable);
    }
    Ok(v)
}

/// [`cycle_pair_linking`] with explicit fan bases.
pub fn cycle_pair_linking_from(
    t: &TriangleLinkTable,
    c: &Cycle,
    c_base: VertexId,
    d: &Cycle,
    d_base: VertexId,
) -> Result<i64, TableError> {
    pair_value(t, c, c_base, d, d_base)
}
