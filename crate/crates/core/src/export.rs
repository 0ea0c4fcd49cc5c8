//! Deterministic DOT and JSON serializations of orbit graphs.
//!
//! Output is byte-for-byte stable for a fixed input: vertices are already
//! sorted by (codim, one-line notation) in the graph, edges by
//! (source, target), and both writers iterate in stored order.

use serde::{Deserialize, Serialize};

use crate::orbit::{Edge, Orbit, OrbitGraph};
use crate::perm::Involution;
use crate::{Error, Result};

/// Edge styling for DOT output. The same-stratum/cross-stratum distinction
/// is computed; it deliberately does not reproduce the hand-drawn
/// solid/dotted styling of the published figures, which follows the proof
/// rather than a reconstructible rule.
#[derive(Clone, Debug)]
pub struct DotStyle {
    pub same_stratum: String,
    pub cross_stratum: String,
}

impl Default for DotStyle {
    fn default() -> Self {
        DotStyle {
            same_stratum: "solid".into(),
            cross_stratum: "dashed".into(),
        }
    }
}

/// Renders the graph as DOT text. Vertices of equal codimension share a
/// rank row; edges run from deeper to shallower orbits, so the deepest
/// orbits sit at the top, matching the published layout.
pub fn export_dot(g: &OrbitGraph, style: &DotStyle) -> String {
    let mut out = String::new();
    out.push_str("digraph orbits {\n");
    out.push_str("  rankdir=TB;\n");
    out.push_str("  node [shape=plaintext];\n");
    for o in &g.vertices {
        out.push_str(&format!(
            "  \"O_{}\" [codim={}, stratum={}];\n",
            o.w.cycles_string(),
            o.codim,
            o.stratum
        ));
    }
    let mut codims: Vec<usize> = g.vertices.iter().map(|o| o.codim).collect();
    codims.sort_unstable();
    codims.dedup();
    codims.reverse(); // deepest row first
    for d in codims {
        out.push_str("  { rank=same;");
        for o in g.vertices.iter().filter(|o| o.codim == d) {
            out.push_str(&format!(" \"O_{}\";", o.w.cycles_string()));
        }
        out.push_str(" }\n");
    }
    for e in &g.edges {
        let s = if e.cross_stratum {
            &style.cross_stratum
        } else {
            &style.same_stratum
        };
        out.push_str(&format!(
            "  \"O_{}\" -> \"O_{}\" [style={}];\n",
            g.vertices[e.source].w.cycles_string(),
            g.vertices[e.target].w.cycles_string(),
            s
        ));
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    fpf_only: bool,
    vertices: Vec<JsonVertex>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct JsonVertex {
    one_line: Vec<u32>,
    cycles: String,
    codim: usize,
    stratum: usize,
    fpf: bool,
}

/// Serializes the graph as JSON. Vertices are listed in the graph's
/// (codim, one-line) order; edges reference vertices by index.
pub fn export_json(g: &OrbitGraph) -> String {
    let doc = JsonGraph {
        n: g.n,
        fpf_only: g.fpf_only,
        vertices: g
            .vertices
            .iter()
            .map(|o| JsonVertex {
                one_line: o.w.one_line().to_vec(),
                cycles: o.w.cycles_string(),
                codim: o.codim,
                stratum: o.stratum,
                fpf: o.fpf,
            })
            .collect(),
        edges: g.edges.clone(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("graph serialization cannot fail");
    s.push('\n');
    s
}

/// Parses `export_json` output back into an `OrbitGraph`, recomputing the
/// derived orbit attributes and checking them against the stated ones.
pub fn parse_graph_json(text: &str) -> Result<OrbitGraph> {
    let doc: JsonGraph =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for v in &doc.vertices {
        let w = Involution::new(v.one_line.clone())?;
        let orbit = Orbit::new(w);
        if orbit.codim != v.codim || orbit.stratum != v.stratum || orbit.fpf != v.fpf {
            return Err(Error::Consistency(format!(
                "stated attributes of {} disagree with recomputation",
                v.cycles
            )));
        }
        vertices.push(orbit);
    }
    for e in &doc.edges {
        if e.source >= vertices.len() || e.target >= vertices.len() {
            return Err(Error::Parse(format!(
                "edge ({}, {}) out of range",
                e.source, e.target
            )));
        }
    }
    Ok(OrbitGraph {
        n: doc.n,
        fpf_only: doc.fpf_only,
        vertices,
        edges: doc.edges,
    })
}
