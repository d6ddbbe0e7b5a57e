//! Reward engineering toolkit for RL-based image captioning.
//!
//! The crate is organized around the training-data and reward pipeline:
//!
//! - [`geometry`] — cosine similarity, the pairwise-cosine-variance diversity
//!   score over query embeddings, and leave-one-out contribution used to prune
//!   redundant queries.
//! - [`gateway`] — a uniform client over remote generator / judge / embedding
//!   models, with deterministic mock implementations for offline testing.
//! - [`curation`] — multi-model query sampling with validity filtering,
//!   dedup, and diversity gating; builds JSONL query datasets.
//! - [`rewards`] — completeness (query answering), correctness (sub-caption
//!   grounding), the hybrid blend, and group-normalized advantages.
//! - [`sampler`] — per-query contribution scores, weighted query selection,
//!   and the per-epoch contribution update.
//! - [`config`] — the on-disk configuration document shared by the CLI and
//!   the reward service.

pub mod config;
pub mod curation;
pub mod gateway;
pub mod geometry;
pub mod rewards;
pub mod sampler;
pub mod text;

pub use gateway::{EndpointKind, Gateway, ImageRef, ModelEndpoint, QueryCandidate, Transport};
pub use geometry::{DiversityReport, EmbeddingVector};
pub use rewards::{GroupResult, RewardBreakdown, RewardConfig};
pub use sampler::{AccuracyStats, ContributionState};
