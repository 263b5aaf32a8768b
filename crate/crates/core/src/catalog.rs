//! Named constructors for the specific graphs the rest of the crate keeps
//! referring to, plus the parameterized families (paths, cycles, stars,
//! complete bipartite) used as test oracles.
//!
//! Construction is deterministic: the same name always yields the same vertex
//! labeling.

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("invalid parameter for {family}: {detail}")]
    InvalidParameter { family: &'static str, detail: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Symbolic graph names accepted by the CLI and used throughout tests.
///
/// `S1`..`S4` are the stars on 1..4 vertices. `Q` is the double star: an edge
/// whose two ends each carry two pendants. `W` is `Q` with its central edge
/// subdivided once; it is pinned as the unique 7-vertex tree with maximum
/// degree 3 and energy below 7, and tests assert that uniqueness by scanning.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    S1,
    S2,
    S3,
    S4,
    W,
    Q,
    K22,
    K23,
    K33,
    Path(usize),
    Cycle(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
}

impl NamedGraph {
    pub fn build(&self) -> Result<Graph, CatalogError> {
        match *self {
            NamedGraph::S1 => Ok(Graph::build(1, &[])?),
            NamedGraph::S2 => Ok(Graph::build(2, &[(0, 1)])?),
            NamedGraph::S3 => NamedGraph::Star(3).build(),
            NamedGraph::S4 => NamedGraph::Star(4).build(),
            // spine (0,1), pendants 2,3 on 0 and 4,5 on 1
            NamedGraph::Q => Ok(Graph::build(
                6,
                &[(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)],
            )?),
            // Q with the spine subdivided by vertex 2
            NamedGraph::W => Ok(Graph::build(
                7,
                &[(0, 2), (1, 2), (0, 3), (0, 4), (1, 5), (1, 6)],
            )?),
            NamedGraph::K22 => NamedGraph::CompleteBipartite(2, 2).build(),
            NamedGraph::K23 => NamedGraph::CompleteBipartite(2, 3).build(),
            NamedGraph::K33 => NamedGraph::CompleteBipartite(3, 3).build(),
            NamedGraph::Path(k) => {
                check_order("path", k, 1)?;
                let edges: Vec<_> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Ok(Graph::build(k, &edges)?)
            }
            NamedGraph::Cycle(k) => {
                check_order("cycle", k, 3)?;
                let mut edges: Vec<_> = (0..k - 1).map(|i| (i, i + 1)).collect();
                edges.push((0, k - 1));
                Ok(Graph::build(k, &edges)?)
            }
            NamedGraph::Star(k) => {
                check_order("star", k, 1)?;
                let edges: Vec<_> = (1..k).map(|i| (0, i)).collect();
                Ok(Graph::build(k, &edges)?)
            }
            NamedGraph::CompleteBipartite(a, b) => {
                if a == 0 || b == 0 {
                    return Err(CatalogError::InvalidParameter {
                        family: "complete bipartite",
                        detail: format!("parts must be nonempty, got {a}x{b}"),
                    });
                }
                check_order("complete bipartite", a + b, 2)?;
                let mut edges = Vec::with_capacity(a * b);
                for i in 0..a {
                    for j in 0..b {
                        edges.push((i, a + j));
                    }
                }
                Ok(Graph::build(a + b, &edges)?)
            }
        }
    }

    /// Parses a CLI name, case-insensitively: `s1..s4, w, q, k22, k23, k33,
    /// p<k>, c<k>, star<k>, kb<a>x<b>`.
    pub fn parse(s: &str) -> Option<NamedGraph> {
        let s = s.to_ascii_lowercase();
        match s.as_str() {
            "s1" => return Some(NamedGraph::S1),
            "s2" => return Some(NamedGraph::S2),
            "s3" => return Some(NamedGraph::S3),
            "s4" => return Some(NamedGraph::S4),
            "w" => return Some(NamedGraph::W),
            "q" => return Some(NamedGraph::Q),
            "k22" => return Some(NamedGraph::K22),
            "k23" => return Some(NamedGraph::K23),
            "k33" => return Some(NamedGraph::K33),
            _ => {}
        }
        if let Some(rest) = s.strip_prefix("star") {
            return rest.parse().ok().map(NamedGraph::Star);
        }
        if let Some(rest) = s.strip_prefix("kb") {
            let (a, b) = rest.split_once('x')?;
            return Some(NamedGraph::CompleteBipartite(
                a.parse().ok()?,
                b.parse().ok()?,
            ));
        }
        if let Some(rest) = s.strip_prefix('p') {
            return rest.parse().ok().map(NamedGraph::Path);
        }
        if let Some(rest) = s.strip_prefix('c') {
            return rest.parse().ok().map(NamedGraph::Cycle);
        }
        None
    }

    pub fn name(&self) -> String {
        match *self {
            NamedGraph::S1 => "S1".into(),
            NamedGraph::S2 => "S2".into(),
            NamedGraph::S3 => "S3".into(),
            NamedGraph::S4 => "S4".into(),
            NamedGraph::W => "W".into(),
            NamedGraph::Q => "Q".into(),
            NamedGraph::K22 => "K22".into(),
            NamedGraph::K23 => "K23".into(),
            NamedGraph::K33 => "K33".into(),
            NamedGraph::Path(k) => format!("P{k}"),
            NamedGraph::Cycle(k) => format!("C{k}"),
            NamedGraph::Star(k) => format!("Star{k}"),
            NamedGraph::CompleteBipartite(a, b) => format!("K{a},{b}"),
        }
    }
}

fn check_order(family: &'static str, k: usize, min: usize) -> Result<(), CatalogError> {
    if k < min || k > MAX_VERTICES {
        return Err(CatalogError::InvalidParameter {
            family,
            detail: format!("order {k} outside {min}..={MAX_VERTICES}"),
        });
    }
    Ok(())
}

/// Spec-level constructor, same as [`NamedGraph::build`].
pub fn named(name: &NamedGraph) -> Result<Graph, CatalogError> {
    name.build()
}

/// The four connected graphs with maximum degree 3 whose energy equals their
/// order.
pub fn energy_equals_order_set() -> [NamedGraph; 4] {
    [NamedGraph::S2, NamedGraph::K22, NamedGraph::Q, NamedGraph::K33]
}

/// The five hypoenergetic connected graphs with maximum degree 3.
pub fn hypoenergetic_set() -> [NamedGraph; 5] {
    [
        NamedGraph::S1,
        NamedGraph::S3,
        NamedGraph::S4,
        NamedGraph::W,
        NamedGraph::K23,
    ]
}

/// The nine graphs above: everything excluded from certificate building.
pub fn exceptional_set() -> [NamedGraph; 9] {
    [
        NamedGraph::S1,
        NamedGraph::S2,
        NamedGraph::S3,
        NamedGraph::S4,
        NamedGraph::W,
        NamedGraph::Q,
        NamedGraph::K22,
        NamedGraph::K23,
        NamedGraph::K33,
    ]
}
