use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{realize_table, realize_theta, theta_link_maps, theta_status, verify_embedding_pair, ConstructError, GraphEmbedding};
use crate::classify::patterns::{k4_common_vertex, k4_three_apexes};
use crate::classify::{classify_theta, PairClassification, ThetaClassification};
use crate::corpus::Generator;
use crate::graphs::VertexSet;
use crate::linktable::{LinkageStatus, TriangleLinkTable};

/// Environment variable naming the asset directory.
pub const DATA_ENV: &str = "LINKWEAVE_DATA";
const MANIFEST: &str = "manifest.json";

/// The asset directory: `$LINKWEAVE_DATA` if set, else the crate's `data/`.
pub fn data_dir() -> PathBuf {
    std::env::var_os(DATA_ENV)
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data"))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AssetKind {
    /// Theta graph against K_n.
    Theta,
    /// K_m against K_n.
    Complete,
}

/// One manifest line: files plus the classification the geometry must reproduce.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Expected {
    pub name: String,
    pub kind: AssetKind,
    pub g_file: String,
    pub h_file: String,
    pub g_order: usize,
    pub h_order: usize,
    pub label: String,
    pub description: String,
    pub classification: serde_json::Value,
}

#[derive(Clone, Debug)]
pub enum Source {
    Theta { n: usize, case: ThetaClassification },
    Table { m: usize, n: usize, generator: Generator },
}

/// How a curated asset is generated.
#[derive(Clone, Debug)]
pub struct AssetSpec {
    pub name: &'static str,
    pub source: Source,
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

/// The six figure assets.
pub fn curated_specs() -> Vec<AssetSpec> {
    vec![
        AssetSpec {
            name: "fig2-left",
            source: Source::Theta {
                n: 5,
                case: ThetaClassification::A1 { p: 0, parts: [set(&[1]), set(&[2, 3]), set(&[4])], sign: 1 },
            },
        },
        AssetSpec {
            name: "fig2-right",
            source: Source::Theta { n: 5, case: ThetaClassification::A2 { apexes: [0, 1, 2], inn: set(&[3, 4]), sign: 1 } },
        },
        AssetSpec {
            name: "fig3-left",
            source: Source::Table {
                m: 4,
                n: 5,
                generator: Generator::B1 { q: 0, parts: [set(&[1]), set(&[2]), set(&[3]), set(&[4])], sign: 1 },
            },
        },
        AssetSpec {
            name: "fig3-right",
            source: Source::Table { m: 4, n: 5, generator: Generator::B2 { labels: [0, 1, 2, 3], q: [0, 1, 2], sign: 1 } },
        },
        AssetSpec {
            name: "fig4-left",
            source: Source::Table {
                m: 5,
                n: 5,
                generator: Generator::Pair(PairClassification::D1 {
                    t_star: [0, 1, 2],
                    q: 0,
                    parts: [set(&[4]), set(&[1]), set(&[2]), set(&[3])],
                    sign: 1,
                }),
            },
        },
        AssetSpec {
            name: "fig4-right",
            source: Source::Table {
                m: 5,
                n: 5,
                generator: Generator::Pair(PairClassification::D2 { t_star: [0, 1, 2], u_star: [0, 1, 2], sign: 1 }),
            },
        },
    ]
}

pub fn asset_names() -> Vec<&'static str> {
    curated_specs().iter().map(|s| s.name).collect()
}

fn generator_table(m: usize, n: usize, g: &Generator) -> TriangleLinkTable {
    match g {
        Generator::B1 { q, parts, sign } => k4_common_vertex(n, *q, *parts, *sign),
        Generator::B2 { labels, q, sign } => k4_three_apexes(n, *labels, *q, *sign),
        Generator::Pair(c) => c.pattern(m, n),
    }
}

/// An asset loaded from disk with its manifest entry.
#[derive(Clone, Debug)]
pub struct CuratedAsset {
    pub expected: Expected,
    pub g: GraphEmbedding,
    pub h: GraphEmbedding,
}

fn failed(asset: &str, reason: impl Into<String>) -> ConstructError {
    ConstructError::AssetValidationFailed { asset: asset.to_string(), reason: reason.into() }
}

fn read_manifest(dir: &Path) -> Result<Vec<Expected>, ConstructError> {
    let text = fs::read_to_string(dir.join(MANIFEST))?;
    serde_json::from_str(&text).map_err(|e| ConstructError::Parse(format!("{MANIFEST}: {e}")))
}

/// Loads an asset from [`data_dir`].
pub fn load_curated(name: &str) -> Result<CuratedAsset, ConstructError> {
    load_curated_from(&data_dir(), name)
}

pub fn load_curated_from(dir: &Path, name: &str) -> Result<CuratedAsset, ConstructError> {
    let expected = read_manifest(dir)?
        .into_iter()
        .find(|e| e.name == name)
        .ok_or_else(|| ConstructError::Params(format!("no asset named {name}")))?;
    let g = GraphEmbedding::from_text(&fs::read_to_string(dir.join(&expected.g_file))?)?;
    let h = GraphEmbedding::from_text(&fs::read_to_string(dir.join(&expected.h_file))?)?;
    Ok(CuratedAsset { expected, g, h })
}

/// What the geometry of an asset yields.
#[derive(Clone, Debug, Serialize)]
pub struct AssetOutcome {
    pub name: String,
    pub status: LinkageStatus,
    pub label: String,
    pub description: String,
    pub classification: serde_json::Value,
}

fn json<T: Serialize>(v: &T) -> serde_json::Value {
    serde_json::to_value(v).expect("classifications serialize")
}

fn compute(name: &str, kind: AssetKind, g: &GraphEmbedding, h: &GraphEmbedding) -> Result<AssetOutcome, ConstructError> {
    match kind {
        AssetKind::Theta => {
            let maps = theta_link_maps(g, h)?;
            let status = theta_status(&maps)?;
            let c = classify_theta(&maps)?;
            Ok(AssetOutcome {
                name: name.into(),
                status,
                label: c.label().into(),
                description: c.describe(h.order()),
                classification: json(&c),
            })
        }
        AssetKind::Complete => {
            let v = verify_embedding_pair(g, h)?;
            let c = v.classification.ok_or_else(|| failed(name, format!("status is {}", v.status.label())))?;
            Ok(AssetOutcome {
                name: name.into(),
                status: v.status,
                label: c.label().into(),
                description: c.describe(),
                classification: json(&c),
            })
        }
    }
}

/// Recomputes an asset from its geometry and compares with the manifest: status must be
/// Weak by exhaustive enumeration and the classification must match exactly.
pub fn validate_asset(asset: &CuratedAsset) -> Result<AssetOutcome, ConstructError> {
    let e = &asset.expected;
    if asset.g.order() != e.g_order || asset.h.order() != e.h_order {
        return Err(failed(&e.name, "orders differ from the manifest"));
    }
    let out = compute(&e.name, e.kind, &asset.g, &asset.h).map_err(|err| match err {
        ConstructError::AssetValidationFailed { .. } => err,
        other => failed(&e.name, other.to_string()),
    })?;
    if !out.status.is_weak() {
        return Err(failed(&e.name, format!("status is {}", out.status.label())));
    }
    if out.label != e.label || out.description != e.description || out.classification != e.classification {
        return Err(failed(&e.name, format!("expected {}, geometry gives {}", e.description, out.description)));
    }
    Ok(out)
}

/// Generates every curated asset into `dir` with the verifier in the loop and writes the
/// manifest. Output is deterministic.
pub fn regenerate_assets(dir: &Path) -> Result<Vec<Expected>, ConstructError> {
    fs::create_dir_all(dir)?;
    let mut manifest = Vec::new();
    for spec in curated_specs() {
        let (kind, g, h) = match &spec.source {
            Source::Theta { n, case } => {
                let (g, h) = realize_theta(&case.pattern(*n))?;
                (AssetKind::Theta, g, h)
            }
            Source::Table { m, n, generator } => {
                let (g, h) = realize_table(&generator_table(*m, *n, generator))?;
                (AssetKind::Complete, g, h)
            }
        };
        let out = compute(spec.name, kind, &g, &h)?;
        if !out.status.is_weak() {
            return Err(failed(spec.name, format!("generated asset is {}", out.status.label())));
        }
        let g_file = format!("{}.g.emb", spec.name);
        let h_file = format!("{}.h.emb", spec.name);
        fs::write(dir.join(&g_file), g.to_text())?;
        fs::write(dir.join(&h_file), h.to_text())?;
        manifest.push(Expected {
            name: spec.name.into(),
            kind,
            g_file,
            h_file,
            g_order: g.order(),
            h_order: h.order(),
            label: out.label,
            description: out.description,
            classification: out.classification,
        });
    }
    let text = serde_json::to_string_pretty(&manifest).map_err(|e| ConstructError::Io(e.to_string()))?;
    fs::write(dir.join(MANIFEST), text + "\n")?;
    Ok(manifest)
}
