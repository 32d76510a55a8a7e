//! Graph products of finite cyclic groups and their outer automorphism groups.

pub mod automorphism;
pub mod classify;
pub mod cli;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod presentation;
pub mod sil;
pub mod word;

pub use error::{Error, Result};
pub use graph::{LabelledGraph, Vertex, VertexSet};
pub use word::{Letter, NormalForm, Word};
pub use automorphism::{Automorphism, InnerVerdict, OutVerdict, PartialConjugation};
pub use presentation::{FormTag, Presentation};
pub use classify::{classify, Classification, Verdict};
