//! Exact linking numbers for polygonal curves and spatial graphs, and the classification
//! of weakly linked embeddings of complete graphs.
//!
//! Layers, bottom up: [`geom`] (exact rational geometry and linking numbers), [`graphs`]
//! (triangles, cycles, fan decompositions), [`stars`] (link maps and star detection),
//! [`linktable`] (triangle linking tables and exhaustive weak/strong status), [`classify`]
//! (pattern matchers for every case), [`construct`] (embeddings that realise the patterns)
//! and [`cli`]. [`corpus`] generates pattern tables for testing.

pub mod classify;
pub mod cli;
pub mod construct;
pub mod corpus;
pub mod geom;
pub mod graphs;
pub mod linktable;
pub mod stars;
