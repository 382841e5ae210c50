//! Two-page book embeddings of planar graphs with maximum degree four.
//!
//! Two pipelines are provided: subhamiltonian cycles for triconnected inputs
//! (through separating-triangle recursion) and a recursive two-page embedder for
//! any 4-planar graph. Independent verifiers and brute-force oracles check both.

pub mod book;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod planar;
pub mod subham;
pub mod twopage;
pub mod verify;

pub use book::{BookEmbedding, Page};
pub use graph::{EdgeId, Graph, GraphError, VertexId};
pub use planar::{planar_embed, PlanarEmbedding};
pub use subham::{subham_triconnected, SubhamCycle};
pub use twopage::embed_two_page;
pub use verify::{verify_book_embedding, verify_subhamiltonian, VerificationReport};
