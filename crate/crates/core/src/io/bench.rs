//! Wall-time measurements over generator families, emitted as `family,n,m,millis`.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;
use std::time::Instant;

use thiserror::Error;

use crate::graph::Graph;
use crate::io::gen::{self, GenError};
use crate::subham::{subham_triconnected, SubhamError};
use crate::twopage::{embed_two_page, EmbedError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Grid,
    PrismStack,
    GadgetChain,
    Random4Planar,
}

impl Family {
    pub const ALL: [Family; 4] = [Family::Grid, Family::PrismStack, Family::GadgetChain, Family::Random4Planar];

    pub fn name(self) -> &'static str {
        match self {
            Family::Grid => "grid",
            Family::PrismStack => "prism_stack",
            Family::GadgetChain => "gadget_chain",
            Family::Random4Planar => "random_4planar",
        }
    }

    /// `size` is a vertex target for grids and random graphs and a level or
    /// triangle count for prism stacks and gadget chains.
    pub fn build(self, size: usize, seed: u64) -> Result<Graph, GenError> {
        match self {
            Family::Grid => {
                let rows = (size as f64).sqrt().floor().max(1.0) as usize;
                gen::grid(rows, size.div_ceil(rows).max(1))
            }
            Family::PrismStack => gen::prism_stack(size),
            Family::GadgetChain => gen::gadget_chain(size),
            Family::Random4Planar => gen::random_4planar(size, seed),
        }
    }

    pub fn default_pipeline(self) -> Pipeline {
        match self {
            Family::Grid | Family::Random4Planar => Pipeline::Embed,
            Family::PrismStack | Family::GadgetChain => Pipeline::Subham,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family `{s}`"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Pipeline {
    Embed,
    Subham,
}

#[derive(Debug, Error)]
pub enum BenchError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("embedding failed at size {size}: {source}")]
    Embed { size: usize, source: EmbedError },
    #[error("subhamiltonian cycle failed at size {size}: {source}")]
    Subham { size: usize, source: SubhamError },
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub millis: f64,
}

/// Time of one pipeline run on `g`, in milliseconds.
pub fn time_once(g: &Graph, pipeline: Pipeline, size: usize) -> Result<f64, BenchError> {
    let start = Instant::now();
    match pipeline {
        Pipeline::Embed => {
            embed_two_page(g).map_err(|source| BenchError::Embed { size, source })?;
        }
        Pipeline::Subham => {
            subham_triconnected(g).map_err(|source| BenchError::Subham { size, source })?;
        }
    }
    Ok(start.elapsed().as_secs_f64() * 1e3)
}

/// Rows in increasing size; each row keeps the fastest of `reps` runs.
pub fn run(
    family: Family,
    sizes: &[usize],
    seed: u64,
    pipeline: Pipeline,
    reps: usize,
) -> Result<Vec<BenchRow>, BenchError> {
    let mut sizes = sizes.to_vec();
    sizes.sort_unstable();
    sizes.dedup();
    let mut rows = Vec::with_capacity(sizes.len());
    for size in sizes {
        let g = family.build(size, seed)?;
        let mut best = f64::INFINITY;
        for _ in 0..reps.max(1) {
            best = best.min(time_once(&g, pipeline, size)?);
        }
        rows.push(BenchRow { family, n: g.vertex_count(), m: g.edge_count(), millis: best });
    }
    Ok(rows)
}

pub fn to_csv(rows: &[BenchRow]) -> String {
    let mut s = String::from("family,n,m,millis\n");
    for r in rows {
        writeln!(s, "{},{},{},{:.3}", r.family, r.n, r.m, r.millis).unwrap();
    }
    s
}
