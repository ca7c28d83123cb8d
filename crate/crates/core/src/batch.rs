//! Batch drivers over independent instances.
//!
//! Every operation in this crate is a pure function over immutable values,
//! so batches parallelize trivially. With the `parallel` feature (default)
//! the plain entry points fan out over rayon; without it they fall back to
//! the sequential versions. The `_seq` variants are always available, which
//! lets the bench suite compare both on one build.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::coloring::{classify, vizing_color, ClassLabel, ColoringError, EdgeColoring, SearchBudget};
use crate::graph::Graph;
use crate::matching::matching_number;

pub fn matching_numbers_seq(graphs: &[Graph]) -> Vec<usize> {
    graphs.iter().map(matching_number).collect()
}

pub fn vizing_colorings_seq(graphs: &[Graph]) -> Vec<Result<EdgeColoring, ColoringError>> {
    graphs.iter().map(vizing_color).collect()
}

pub fn classify_all_seq(
    graphs: &[Graph],
    budget: &SearchBudget,
) -> Vec<Result<ClassLabel, ColoringError>> {
    graphs.iter().map(|g| classify(g, budget)).collect()
}

/// `alpha'` of each graph, in input order.
pub fn matching_numbers(graphs: &[Graph]) -> Vec<usize> {
    #[cfg(feature = "parallel")]
    {
        graphs.par_iter().map(matching_number).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        matching_numbers_seq(graphs)
    }
}

/// A `(Delta+1)`-bounded proper coloring of each graph, in input order.
pub fn vizing_colorings(graphs: &[Graph]) -> Vec<Result<EdgeColoring, ColoringError>> {
    #[cfg(feature = "parallel")]
    {
        graphs.par_iter().map(vizing_color).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        vizing_colorings_seq(graphs)
    }
}

/// Classification of each graph, in input order.
pub fn classify_all(
    graphs: &[Graph],
    budget: &SearchBudget,
) -> Vec<Result<ClassLabel, ColoringError>> {
    #[cfg(feature = "parallel")]
    {
        graphs.par_iter().map(|g| classify(g, budget)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        classify_all_seq(graphs, budget)
    }
}

/// Runs independent jobs and collects results in input order.
///
/// This is the primitive the CLI uses to process several bundle files in
/// one invocation.
pub fn run_jobs<T, R, F>(items: &[T], job: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        items.par_iter().map(job).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(job).collect()
    }
}
