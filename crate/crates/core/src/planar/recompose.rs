use thiserror::Error;

use crate::book::BookEmbedding;
use crate::graph::{Graph, VertexId};
use crate::verify::verify_book_embedding;

/// Parent link per block: the parent block index and the shared cut vertex.
#[derive(Clone, Debug, Default)]
pub struct BlockCutTree {
    pub parent: Vec<Option<(usize, VertexId)>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecomposeError {
    #[error("block {block} lists parent {parent} which is not earlier in the list")]
    ParentOrder { block: usize, parent: usize },
    #[error("cut vertex {0} missing from a block order")]
    MissingCutVertex(VertexId),
    #[error("spliced embedding fails verification: {0}")]
    Verification(String),
}

/// Splices each block's spine right after its cut vertex in the parent block,
/// the block's own copy of the cut vertex first. Blocks are listed parents first.
pub fn recompose_book_embeddings(
    g: &Graph,
    blocks: &[BookEmbedding],
    tree: &BlockCutTree,
) -> Result<BookEmbedding, RecomposeError> {
    let mut out = BookEmbedding::new(Vec::new(), g.edge_bound());
    for (b, block) in blocks.iter().enumerate() {
        for (i, p) in block.pages.iter().enumerate() {
            if let Some(p) = p {
                out.pages[i] = Some(*p);
            }
        }
        match tree.parent.get(b).copied().flatten() {
            None => {
                if out.order.is_empty() {
                    out.order = block.order.clone();
                } else {
                    out.order.extend(block.order.iter().copied());
                }
            }
            Some((p, cut)) => {
                if p >= b {
                    return Err(RecomposeError::ParentOrder { block: b, parent: p });
                }
                let mut child = block.order.clone();
                let i = child
                    .iter()
                    .position(|&v| v == cut)
                    .ok_or(RecomposeError::MissingCutVertex(cut))?;
                child.rotate_left(i);
                let at = out
                    .order
                    .iter()
                    .position(|&v| v == cut)
                    .ok_or(RecomposeError::MissingCutVertex(cut))?;
                out.order.splice(at + 1..at + 1, child.into_iter().skip(1));
            }
        }
    }
    let report = verify_book_embedding(g, &out);
    if !report.pass() {
        return Err(RecomposeError::Verification(report.to_string()));
    }
    Ok(out)
}
