//! Graph JSON and DOT encodings.
//!
//! Graph JSON stores doubled coordinates (`coord_scale` is always 2), the
//! vertex list sorted lexicographically and edges as sorted index pairs
//! `[i, j]` with `i < j`. Output is compact, newline-terminated and
//! byte-stable, so `parse -> serialize` reproduces canonical input exactly.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{CenteredGraph, Family, LatticeParity, MeshGraph, Point};

pub const COORD_SCALE: u32 = 2;

/// Wire form of a graph. `family` and `p` are absent for bare witnesses.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub parity: LatticeParity,
    pub k: usize,
    pub coord_scale: u32,
    pub vertices: Vec<Vec<i32>>,
    pub edges: Vec<[usize; 2]>,
    pub centers: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u32>,
}

impl GraphJson {
    pub fn from_mesh(g: &MeshGraph) -> Self {
        GraphJson {
            parity: g.parity(),
            k: g.dim(),
            coord_scale: COORD_SCALE,
            vertices: g.vertices().iter().map(|v| v.coords().to_vec()).collect(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
            centers: Vec::new(),
            family: None,
            p: None,
        }
    }

    pub fn from_centered(g: &CenteredGraph) -> Self {
        let mut out = Self::from_mesh(g.graph());
        out.centers = g
            .centers()
            .iter()
            .map(|c| g.graph().index_of(c).expect("centers are vertices"))
            .collect();
        out.family = Some(g.family().as_str().to_string());
        out.p = Some(g.p());
        out
    }

    /// Rebuilds the graph, rejecting anything that is not in canonical form.
    pub fn into_mesh(self) -> Result<MeshGraph> {
        if self.coord_scale != COORD_SCALE {
            return Err(Error::Format(format!(
                "coord_scale must be {COORD_SCALE}, found {}",
                self.coord_scale
            )));
        }
        if self.vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Format("vertices must be strictly sorted".into()));
        }
        if self.edges.iter().any(|e| e[0] >= e[1]) {
            return Err(Error::Format("edge pairs must satisfy i < j".into()));
        }
        if self.edges.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Format("edges must be strictly sorted".into()));
        }
        let vertices = self.vertices.into_iter().map(Point::new).collect();
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        MeshGraph::from_indexed(self.parity, self.k, vertices, &edges)
    }

    pub fn into_centered(mut self) -> Result<CenteredGraph> {
        let family: Family = self
            .family
            .take()
            .ok_or_else(|| Error::Format("missing field `family`".into()))?
            .parse()?;
        let p = self
            .p
            .take()
            .ok_or_else(|| Error::Format("missing field `p`".into()))?;
        let centers = std::mem::take(&mut self.centers);
        let graph = self.into_mesh()?;
        let len = graph.vertex_count();
        let centers = centers
            .into_iter()
            .map(|i| {
                graph
                    .vertices()
                    .get(i)
                    .cloned()
                    .ok_or(Error::IndexOutOfRange { index: i, len })
            })
            .collect::<Result<Vec<_>>>()?;
        if centers.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Format("centers must be strictly sorted".into()));
        }
        CenteredGraph::new(graph, centers, p, family)
    }

    pub fn to_string_canonical(&self) -> String {
        let mut s = serde_json::to_string(self).expect("graph json is always serializable");
        s.push('\n');
        s
    }
}

pub fn to_json(g: &CenteredGraph) -> String {
    GraphJson::from_centered(g).to_string_canonical()
}

pub fn from_json(text: &str) -> Result<CenteredGraph> {
    serde_json::from_str::<GraphJson>(text)?.into_centered()
}

pub fn mesh_to_json(g: &MeshGraph) -> String {
    GraphJson::from_mesh(g).to_string_canonical()
}

pub fn mesh_from_json(text: &str) -> Result<MeshGraph> {
    serde_json::from_str::<GraphJson>(text)?.into_mesh()
}

/// Undirected DOT with true-coordinate labels; centers are drawn boxed.
pub fn to_dot(g: &CenteredGraph) -> String {
    let name = format!("{}_{}_{}", g.family(), g.dim(), g.p());
    dot_body(g.graph(), g.centers(), &name)
}

pub fn mesh_to_dot(g: &MeshGraph) -> String {
    dot_body(g, &[], "mesh")
}

fn dot_body(g: &MeshGraph, centers: &[Point], name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "graph {name} {{");
    for (i, v) in g.vertices().iter().enumerate() {
        let shape = if centers.contains(v) {
            ", shape=box"
        } else {
            ""
        };
        let _ = writeln!(out, "  v{i} [label=\"{v}\"{shape}];");
    }
    for &(a, b) in g.edges() {
        let _ = writeln!(out, "  v{a} -- v{b};");
    }
    out.push_str("}\n");
    out
}
