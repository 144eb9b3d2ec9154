//! The JSON graph format.
//!
//! ```json
//! { "kind": "bidirected",
//!   "vertices": ["a", "b"],
//!   "edges": [ {"id": "e1", "ends": ["a", "b"], "signs": ["+", "-"]} ] }
//! ```
//!
//! Directed edges list `[tail, head]` and carry no signs; bidirected edges
//! give the sign at each listed end. File order is the canonical order.

use cyclepack_core::{
    BidirectedGraph, CycleGraph, DirectedGraph, GraphKind, Sign, UndirectedGraph,
};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub kind: String,
    pub vertices: Vec<String>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeEntry {
    pub id: String,
    pub ends: [String; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<[String; 2]>,
}

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] cyclepack_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyGraph {
    Undirected(UndirectedGraph),
    Directed(DirectedGraph),
    Bidirected(BidirectedGraph),
}

impl AnyGraph {
    pub fn kind(&self) -> GraphKind {
        self.as_dyn().kind()
    }

    pub fn as_dyn(&self) -> &dyn CycleGraph {
        match self {
            AnyGraph::Undirected(g) => g,
            AnyGraph::Directed(g) => g,
            AnyGraph::Bidirected(g) => g,
        }
    }
}

pub fn parse_kind(s: &str) -> Result<GraphKind, FormatError> {
    match s {
        "undirected" => Ok(GraphKind::Undirected),
        "directed" => Ok(GraphKind::Directed),
        "bidirected" => Ok(GraphKind::Bidirected),
        other => Err(FormatError::Invalid(format!("unknown graph kind {other:?}"))),
    }
}

fn parse_sign(s: &str) -> Result<Sign, FormatError> {
    match s {
        "+" => Ok(Sign::Plus),
        "-" => Ok(Sign::Minus),
        other => Err(FormatError::Invalid(format!("sign must be \"+\" or \"-\", got {other:?}"))),
    }
}

pub fn parse_graph(text: &str) -> Result<AnyGraph, FormatError> {
    from_file(serde_json::from_str(text)?)
}

pub fn from_file(file: GraphFile) -> Result<AnyGraph, FormatError> {
    let kind = parse_kind(&file.kind)?;
    let index = |name: &str| {
        file.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| FormatError::Invalid(format!("edge end {name:?} is not a vertex")))
    };
    let mut plain = Vec::with_capacity(file.edges.len());
    let mut signed = Vec::with_capacity(file.edges.len());
    for e in &file.edges {
        let (u, v) = (index(&e.ends[0])?, index(&e.ends[1])?);
        match (&e.signs, kind) {
            (None, GraphKind::Bidirected) => {
                return Err(FormatError::Invalid(format!("bidirected edge {:?} needs signs", e.id)))
            }
            (Some(_), GraphKind::Undirected | GraphKind::Directed) => {
                return Err(FormatError::Invalid(format!(
                    "edge {:?} has signs in a {} graph",
                    e.id,
                    kind.as_str()
                )))
            }
            (Some([a, b]), GraphKind::Bidirected) => {
                signed.push((e.id.clone(), u, v, parse_sign(a)?, parse_sign(b)?))
            }
            (None, _) => plain.push((e.id.clone(), u, v)),
        }
    }
    let vertices = file.vertices;
    Ok(match kind {
        GraphKind::Undirected => AnyGraph::Undirected(UndirectedGraph::new(vertices, plain)?),
        GraphKind::Directed => AnyGraph::Directed(DirectedGraph::new(vertices, plain)?),
        GraphKind::Bidirected => AnyGraph::Bidirected(BidirectedGraph::new(vertices, signed)?),
    })
}

pub fn to_file(g: &AnyGraph) -> GraphFile {
    let d = g.as_dyn();
    let vertices = (0..d.vertex_count()).map(|v| d.vertex_name(v).to_string()).collect();
    let edges = (0..d.edge_count())
        .map(|e| {
            let [a, b] = d.ends(e);
            let signs = match g {
                AnyGraph::Bidirected(bg) => {
                    let [sa, sb] = bg.signs(e);
                    Some([sa.symbol().to_string(), sb.symbol().to_string()])
                }
                _ => None,
            };
            EdgeEntry {
                id: d.edge_name(e).to_string(),
                ends: [d.vertex_name(a).to_string(), d.vertex_name(b).to_string()],
                signs,
            }
        })
        .collect();
    GraphFile {
        kind: g.kind().as_str().to_string(),
        vertices,
        edges,
    }
}

/// Pretty JSON with a trailing newline.
pub fn serialize_graph(g: &AnyGraph) -> String {
    let mut s = serde_json::to_string_pretty(&to_file(g)).expect("graph files always serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_each_kind() {
        let d = parse_graph(
            r#"{"kind":"directed","vertices":["a","b"],"edges":[{"id":"x","ends":["a","b"]},{"id":"y","ends":["b","a"]}]}"#,
        )
        .unwrap();
        assert_eq!(d.kind(), GraphKind::Directed);
        assert_eq!(d.as_dyn().ends(1), [1, 0]);
        let b = parse_graph(
            r#"{"kind":"bidirected","vertices":["u","v"],"edges":[{"id":"p","ends":["u","v"],"signs":["+","-"]}]}"#,
        )
        .unwrap();
        let AnyGraph::Bidirected(bg) = &b else { panic!() };
        assert_eq!(bg.signs(0), [Sign::Plus, Sign::Minus]);
        assert_eq!(parse_graph(&serialize_graph(&b)).unwrap(), b);
    }

    #[test]
    fn rejects_bad_files() {
        for bad in [
            r#"{"kind":"directed","vertices":["a","a"],"edges":[]}"#,
            r#"{"kind":"directed","vertices":["a","b"],"edges":[{"id":"x","ends":["a","b"]},{"id":"x","ends":["b","a"]}]}"#,
            r#"{"kind":"directed","vertices":["a"],"edges":[{"id":"x","ends":["a","a"]}]}"#,
            r#"{"kind":"directed","vertices":["a"],"edges":[{"id":"x","ends":["a","z"]}]}"#,
            r#"{"kind":"bidirected","vertices":["a","b"],"edges":[{"id":"x","ends":["a","b"]}]}"#,
            r#"{"kind":"bidirected","vertices":["a","b"],"edges":[{"id":"x","ends":["a","b"],"signs":["+","*"]}]}"#,
            r#"{"kind":"undirected","vertices":["a","b"],"edges":[{"id":"x","ends":["a","b"],"signs":["+","-"]}]}"#,
            r#"{"kind":"mixed","vertices":[],"edges":[]}"#,
            r#"{"kind":"directed","vertices":[],"edges":[],"extra":1}"#,
            r#"{"kind":"directed""#,
        ] {
            assert!(parse_graph(bad).is_err(), "accepted {bad}");
        }
    }
}
