use std::f64::consts::{PI, TAU};

use serde::Serialize;

use super::router::chord_route;
use super::{validate_disjoint_embeddings, ConstructError, GraphEmbedding};
use crate::classify::PqClassification;
use crate::corpus::pq_params;
use crate::geom::{approx, int, ratio, to_f64, unit_circle_point, Point3, Rational};

const DEN: i64 = 1_000_000;
const TWISTS: usize = 6;
const LEG_TRIES: [i64; 3] = [64, 256, 1024];

/// Parameters of the pq-embedding: `ell` clusters per side with the given sizes, cluster
/// radius `rho`, and the allowed distance `delta` between a cluster center and its ideal
/// root-of-unity position.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PqParams {
    pub x_sizes: Vec<usize>,
    pub y_sizes: Vec<usize>,
    #[serde(with = "crate::geom::rational_string")]
    pub rho: Rational,
    #[serde(with = "crate::geom::rational_string")]
    pub delta: Rational,
}

impl PqParams {
    /// Default radius about a quarter of the distance between neighbouring roots of unity.
    pub fn new(x_sizes: Vec<usize>, y_sizes: Vec<usize>) -> Result<Self, ConstructError> {
        let ell = x_sizes.len();
        if ell < 2 {
            return Err(ConstructError::Params(format!("need at least two clusters per side, got {ell}")));
        }
        let rho = approx(2.0 * (PI / (2.0 * ell as f64)).sin() / 4.0, 1000);
        let delta = &rho / int(8);
        let p = PqParams { x_sizes, y_sizes, rho, delta };
        p.check()?;
        Ok(p)
    }

    pub fn ell(&self) -> usize {
        self.x_sizes.len()
    }

    pub fn orders(&self) -> (usize, usize) {
        (1 + self.x_sizes.iter().sum::<usize>(), 1 + self.y_sizes.iter().sum::<usize>())
    }

    pub fn check(&self) -> Result<(), ConstructError> {
        let ell = self.ell();
        if ell < 2 {
            return Err(ConstructError::Params(format!("need at least two clusters per side, got {ell}")));
        }
        if self.y_sizes.len() != ell {
            return Err(ConstructError::Params(format!("{ell} X clusters but {} Y clusters", self.y_sizes.len())));
        }
        if self.x_sizes.iter().chain(&self.y_sizes).any(|&s| s == 0) {
            return Err(ConstructError::Params("every cluster needs at least one vertex".into()));
        }
        let zero = int(0);
        if self.rho <= zero || self.delta <= zero {
            return Err(ConstructError::Params("rho and delta must be positive".into()));
        }
        let (m, n) = self.orders();
        if m > 64 || n > 64 {
            return Err(ConstructError::Params(format!("orders {m}x{n} exceed 64")));
        }
        Ok(())
    }

    /// The common-vertex pattern this embedding realizes, for the given global sign.
    pub fn expected(&self, sign: i64) -> PqClassification {
        pq_params(&self.x_sizes, &self.y_sizes, sign, None).2
    }

    /// Cluster centers: index `2j` is X_j, `2j + 1` is Y_j.
    fn centers(&self) -> Result<Vec<(Rational, Rational)>, ConstructError> {
        let ell = self.ell();
        let mut out = Vec::new();
        for k in 0..2 * ell {
            let theta = PI * k as f64 / ell as f64;
            let c = unit_circle_point(theta, DEN);
            let err = ((to_f64(&c.0) - theta.cos()).powi(2) + (to_f64(&c.1) - theta.sin()).powi(2)).sqrt();
            if err >= to_f64(&self.delta) {
                return Err(ConstructError::Params(format!("center {k} is {err:e} from its target, above delta")));
            }
            out.push(c);
        }
        let rho2 = &self.rho * &self.rho;
        for (i, a) in out.iter().enumerate() {
            if &a.0 * &a.0 + &a.1 * &a.1 <= rho2 {
                return Err(ConstructError::Invalid(format!("disk {i} contains the origin")));
            }
            for (j, b) in out.iter().enumerate().skip(i + 1) {
                let (dx, dy) = (&a.0 - &b.0, &a.1 - &b.1);
                if dx.clone() * dx + dy.clone() * dy <= int(4) * &rho2 {
                    return Err(ConstructError::Invalid(format!("disks {i} and {j} overlap")));
                }
            }
        }
        Ok(out)
    }
}

fn cluster(center: &(Rational, Rational), rho: &Rational, size: usize, twist: f64, z: i64) -> Vec<Point3> {
    (0..size)
        .map(|i| {
            let (x, y) = unit_circle_point(TAU * (i as f64 + twist) / size as f64, 1000);
            Point3::new(&center.0 + x * rho, &center.1 + y * rho, int(z))
        })
        .collect()
}

/// One side: apex at height `apex_z`, clusters in the plane `-apex_z`, non-apex edges
/// routed beyond that plane at distinct levels.
fn side(apex_z: i64, clusters: Vec<Vec<Point3>>, leg: &Rational) -> GraphEmbedding {
    let mut vertices = vec![Point3::from_ints(0, 0, apex_z)];
    vertices.extend(clusters.into_iter().flatten());
    let k = vertices.len();
    let mut emb = GraphEmbedding::new(vertices);
    let away = -apex_z.signum();
    let mut layer = 0;
    for a in 1..k {
        emb.add_straight(0, a);
        for b in a + 1..k {
            layer += 1;
            let level = int(away) * (int(1) + ratio(layer, 4));
            let r = chord_route(&emb.vertices[a], &emb.vertices[b], &level, leg);
            emb.add_edge(a, b, r);
        }
    }
    emb
}

/// The pq-embedding: `p = (0,0,1)` with X clusters in the plane `z = -1`, `q = (0,0,-1)`
/// with Y clusters in `z = 1`, cluster `X_j` about angle `2 pi j / ell` and `Y_j` about
/// `pi (2j + 1) / ell`. Vertex 0 is the apex on each side and clusters follow in order.
pub fn build_pq(params: &PqParams) -> Result<(GraphEmbedding, GraphEmbedding), ConstructError> {
    params.check()?;
    let centers = params.centers()?;
    let ell = params.ell();
    let mut last = None;
    for den in LEG_TRIES {
        let leg = ratio(1, den);
        for t in 0..TWISTS {
            let twist = 0.1 + t as f64 / TWISTS as f64 * 0.8;
            let xs = (0..ell).map(|j| cluster(&centers[2 * j], &params.rho, params.x_sizes[j], twist, -1)).collect();
            let ys = (0..ell).map(|j| cluster(&centers[2 * j + 1], &params.rho, params.y_sizes[j], twist, 1)).collect();
            let g = side(1, xs, &leg);
            let h = side(-1, ys, &leg);
            let checked = g.validate().and_then(|_| h.validate()).and_then(|_| validate_disjoint_embeddings(&g, &h));
            match checked {
                Ok(()) => return Ok((g, h)),
                Err(e) => last = Some(e),
            }
        }
    }
    Err(last.unwrap_or_else(|| ConstructError::Invalid("no routing attempt succeeded".into())))
}
