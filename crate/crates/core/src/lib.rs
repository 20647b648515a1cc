pub mod arrow;
pub mod bitset;
pub mod blowup_search;
pub mod canon;
pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod embedder;
pub mod error;
pub mod graph;
pub mod io;
pub mod nikiforov;
pub mod partite;
pub mod regularity;
pub mod robustness;
pub mod search;
pub mod subgraph;
