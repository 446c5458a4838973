//! Spatial embeddings of graph pairs: the star cone, the pq-embedding, clasp-realized
//! curated assets, and the pipeline from geometry to classification.

mod assets;
mod clasp;
mod embedding;
mod pq;
mod router;
mod star_cone;
mod table;
mod verify;

pub use assets::{
    asset_names, curated_specs, data_dir, load_curated, load_curated_from, regenerate_assets, validate_asset, AssetKind,
    AssetOutcome, AssetSpec, CuratedAsset, Expected, Source, DATA_ENV,
};
pub use clasp::{realize_table, realize_theta, theta_embedding_layout};
pub use embedding::{validate_disjoint_embeddings, GraphEmbedding};
pub use pq::{build_pq, PqParams};
pub use star_cone::build_star_cone;
pub use table::{
    curve_link_map, edge_crossings, table_from_embeddings, theta_cycles, theta_link_maps, EdgeCrossings,
};
pub use verify::{sabotage_fixture, theta_status, verify_embedding_pair, Verification};

use thiserror::Error;

use crate::classify::ClassifyError;
use crate::geom::GeomError;
use crate::graphs::GraphError;
use crate::linktable::TableError;
use crate::stars::StarError;

#[derive(Debug, Clone, Error, PartialEq)]
pub enum ConstructError {
    #[error("invalid parameters: {0}")]
    Params(String),
    #[error("construction invalid: {0}")]
    Invalid(String),
    #[error("embedding has no edge {0}-{1}")]
    MissingEdge(usize, usize),
    #[error("embedding format: {0}")]
    Parse(String),
    #[error("asset {asset} failed validation: {reason}")]
    AssetValidationFailed { asset: String, reason: String },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error(transparent)]
    Geom(#[from] GeomError),
    #[error(transparent)]
    Table(#[from] TableError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Star(#[from] StarError),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

impl From<std::io::Error> for ConstructError {
    fn from(e: std::io::Error) -> Self {
        ConstructError::Io(e.to_string())
    }
}
