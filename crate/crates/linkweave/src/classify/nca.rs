use serde::Serialize;

use super::ClassifyError;
use crate::graphs::{VertexId, VertexSet};
use crate::stars::{common_apex, mutual_orientation, Star};

/// How two stars without a common apex meet, after mutual orientation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum NcaCase {
    /// `I_1 = {p3}` and `O_2 = {p1, p3}`.
    C1 { p1: VertexId, p2: VertexId, p3: VertexId, signs: (i64, i64) },
    /// `I_2 = {p3}` and `O_1 = {p2, p3}`.
    C2 { p1: VertexId, p2: VertexId, p3: VertexId, signs: (i64, i64) },
    /// `O_1 = {p2, p3}` and `O_2 = {p1, p3}`.
    C3 { p1: VertexId, p2: VertexId, p3: VertexId, signs: (i64, i64) },
    /// The pair cannot occur in a weakly linked pair of complete graphs.
    Incompatible,
}

impl NcaCase {
    pub fn label(&self) -> &'static str {
        match self {
            NcaCase::C1 { .. } => "C1",
            NcaCase::C2 { .. } => "C2",
            NcaCase::C3 { .. } => "C3",
            NcaCase::Incompatible => "Incompatible",
        }
    }

    /// The triangle `p1p2p3` shared by the case, if any.
    pub fn triangle(&self) -> Option<[VertexId; 3]> {
        match *self {
            NcaCase::C1 { p1, p2, p3, .. } | NcaCase::C2 { p1, p2, p3, .. } | NcaCase::C3 { p1, p2, p3, .. } => {
                Some([p1, p2, p3])
            }
            NcaCase::Incompatible => None,
        }
    }
}

fn only(s: VertexSet) -> Option<VertexId> {
    (s.len() == 1).then(|| s.least()).flatten()
}

fn pair_rest(s: VertexSet, known: VertexId) -> Option<VertexId> {
    (s.len() == 2 && s.contains(known)).then(|| s.without(known).least()).flatten()
}

/// Decides which of C1, C2, C3 relates two stars with no common apex.
pub fn nca_case(s1: &Star, s2: &Star) -> Result<NcaCase, ClassifyError> {
    if let Some(p) = common_apex(s1, s2) {
        return Err(ClassifyError::CommonApex(p));
    }
    for r1 in s1.representations() {
        for r2 in s2.representations() {
            let signs = mutual_orientation(&r1, &r2)?;
            let (a, b) = (r1.signed(signs.0), r2.signed(signs.1));
            let (p1, p2) = (a.apex, b.apex);
            if let Some(p3) = only(a.inn) {
                if pair_rest(b.out, p1) == Some(p3) {
                    return Ok(NcaCase::C1 { p1, p2, p3, signs });
                }
            }
            if let Some(p3) = only(b.inn) {
                if pair_rest(a.out, p2) == Some(p3) {
                    return Ok(NcaCase::C2 { p1, p2, p3, signs });
                }
            }
            if let (Some(p3), Some(r3)) = (pair_rest(a.out, p2), pair_rest(b.out, p1)) {
                if p3 == r3 {
                    return Ok(NcaCase::C3 { p1, p2, p3, signs });
                }
            }
        }
    }
    Ok(NcaCase::Incompatible)
}
