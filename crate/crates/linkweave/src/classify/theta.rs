use serde::Serialize;

use super::patterns::{theta_common_apex, theta_three_apexes};
use super::{is_partition, ClassifyError};
use crate::graphs::{enumerate_cycles, triangle_decomposition, VertexId, VertexSet};
use crate::stars::{detect_star, LinkMap, Star, StarError};

/// Weak linking pattern of a theta curve (cycles `C_1, C_2, C_3`) against K_n.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case")]
pub enum ThetaClassification {
    /// Common apex `p`; `C_i` links `p O_i I_i` with `O_i` the union of the other two parts.
    A1 { p: VertexId, parts: [VertexSet; 3], sign: i64 },
    /// Apexes `p_1, p_2, p_3`; `C_i` links `p_i {p_j, p_k} I`.
    A2 { apexes: [VertexId; 3], inn: VertexSet, sign: i64 },
}

impl ThetaClassification {
    pub fn label(&self) -> &'static str {
        match self {
            ThetaClassification::A1 { .. } => "A1",
            ThetaClassification::A2 { .. } => "A2",
        }
    }

    /// Maps regenerated from the recovered parameters.
    pub fn pattern(&self, n: usize) -> [LinkMap; 3] {
        match self {
            ThetaClassification::A1 { p, parts, sign } => theta_common_apex(n, *p, *parts, *sign),
            ThetaClassification::A2 { apexes, sign, .. } => theta_three_apexes(n, *apexes, *sign),
        }
    }

    pub fn describe(&self, n: usize) -> String {
        let maps = self.pattern(n);
        let stars: Vec<String> = maps
            .iter()
            .map(|m| match detect_star(m) {
                Ok(Some(s)) => s.literal(),
                _ => "0".into(),
            })
            .collect();
        match self {
            ThetaClassification::A1 { p, parts, sign } => format!(
                "A1 p={p} I1={} I2={} I3={} sign={sign:+} stars=[{}]",
                parts[0],
                parts[1],
                parts[2],
                stars.join(", ")
            ),
            ThetaClassification::A2 { apexes, inn, sign } => format!(
                "A2 p1={} p2={} p3={} I={inn} sign={sign:+} stars=[{}]",
                apexes[0],
                apexes[1],
                apexes[2],
                stars.join(", ")
            ),
        }
    }
}

fn star_or_none(m: &LinkMap) -> Result<Option<Star>, ClassifyError> {
    match detect_star(m) {
        Ok(Some(s)) => Ok(Some(s)),
        Ok(None) if m.is_zero() => Ok(None),
        Ok(None) => Err(ClassifyError::NotWeaklyLinked("a cycle links K_n outside any star".into())),
        Err(StarError::ValuesOutOfRange { triangle, value }) => {
            Err(ClassifyError::NotWeaklyLinked(format!("triangle {triangle} has linking number {value}")))
        }
        Err(e) => Err(e.into()),
    }
}

fn star_maps(maps: &[LinkMap; 3]) -> Result<(usize, Vec<Option<Star>>), ClassifyError> {
    let n = maps[0].order();
    if maps.iter().any(|m| m.order() != n) || !maps[0].plus(&maps[1]).plus(&maps[2]).is_zero() {
        return Err(ClassifyError::NotThetaCycles);
    }
    let stars: Vec<Option<Star>> = maps.iter().map(star_or_none).collect::<Result<_, _>>()?;
    if stars.iter().all(Option::is_none) {
        return Err(ClassifyError::NotWeaklyLinked("no cycle links K_n".into()));
    }
    Ok((n, stars))
}

/// Case A1 with the least possible apex, if the maps fit it.
pub fn match_a1(maps: &[LinkMap; 3]) -> Result<Option<ThetaClassification>, ClassifyError> {
    let (n, stars) = star_maps(maps)?;
    let common = stars.iter().flatten().fold(VertexSet::full(n), |acc, s| {
        acc.intersection(s.triangles().iter().fold(VertexSet::full(n), |a, t| a.intersection(t.vertex_set())))
    });
    for p in common.iter() {
        for sign in [1, -1] {
            let mut parts = [VertexSet::EMPTY; 3];
            let mut ok = true;
            for (slot, s) in parts.iter_mut().zip(&stars) {
                if let Some(s) = s {
                    match s.signed(sign).with_apex(p) {
                        Some(r) => *slot = r.inn,
                        None => ok = false,
                    }
                }
            }
            let cls = ThetaClassification::A1 { p, parts, sign };
            if ok && is_partition(&parts, VertexSet::full(n).without(p)) && cls.pattern(n) == *maps {
                return Ok(Some(cls));
            }
        }
    }
    Ok(None)
}

/// Case A2, read off the fan representations of `C_1`'s star. Needs n >= 5; over K4 the
/// A2 formulas describe A1 patterns.
pub fn match_a2(maps: &[LinkMap; 3]) -> Result<Option<ThetaClassification>, ClassifyError> {
    let (n, stars) = star_maps(maps)?;
    if n < 5 {
        return Ok(None);
    }
    let Some(Some(first)) = stars.first() else {
        return Ok(None);
    };
    for sign in [1, -1] {
        for r in first.signed(sign).representations() {
            if r.out.len() != 2 {
                continue;
            }
            let v = r.out.to_vec();
            let inn = VertexSet::full(n).minus(r.out).without(r.apex);
            for apexes in [[r.apex, v[0], v[1]], [r.apex, v[1], v[0]]] {
                let cls = ThetaClassification::A2 { apexes, inn, sign };
                if cls.pattern(n) == *maps {
                    return Ok(Some(cls));
                }
            }
        }
    }
    Ok(None)
}

/// Recovers case A1 or A2 from the link maps of `C_1, C_2, C_3`, where `C_1 + C_2 + C_3 = 0`.
pub fn classify_theta(maps: &[LinkMap; 3]) -> Result<ThetaClassification, ClassifyError> {
    if let Some(c) = match_a1(maps)? {
        return Ok(c);
    }
    if let Some(c) = match_a2(maps)? {
        return Ok(c);
    }
    Err(ClassifyError::NotWeaklyLinked("the maps match neither A1 nor A2".into()))
}

/// Largest |lk| between a theta cycle and any cycle of K_n, with the maps' decompositions.
pub fn theta_max_linking(maps: &[LinkMap; 3]) -> Result<i64, ClassifyError> {
    let n = maps[0].order();
    let mut best = 0;
    for d in enumerate_cycles(n, None)? {
        let dec = triangle_decomposition(&d, d.vertices()[0])?;
        for m in maps {
            let v: i64 = dec.terms.iter().map(|(t, k)| m.get(t) * *k as i64).sum();
            best = best.max(v.abs());
        }
    }
    Ok(best)
}
