//! Seeded random graphs in the canonical format.

use cyclepack_core::{BidirectedGraph, DirectedGraph, GraphKind, Sign, UndirectedGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::format::{parse_graph, serialize_graph, AnyGraph, FormatError};

/// `m` edges with endpoints drawn uniformly among distinct vertex pairs.
/// Parallel edges and digons are allowed.
pub fn random_graph(kind: GraphKind, n: usize, m: usize, seed: u64) -> Result<AnyGraph, FormatError> {
    if m > 0 && n < 2 {
        return Err(FormatError::Invalid(format!("{m} edges need at least 2 vertices, got {n}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let vertices: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let mut pairs = Vec::with_capacity(m);
    for j in 0..m {
        let u = rng.gen_range(0..n);
        let mut w = rng.gen_range(0..n - 1);
        if w >= u {
            w += 1;
        }
        pairs.push((format!("e{j}"), u, w));
    }
    let g = match kind {
        GraphKind::Undirected => AnyGraph::Undirected(UndirectedGraph::new(vertices, pairs)?),
        GraphKind::Directed => AnyGraph::Directed(DirectedGraph::new(vertices, pairs)?),
        GraphKind::Bidirected => {
            let mut sign = || if rng.gen_bool(0.5) { Sign::Plus } else { Sign::Minus };
            let signed = pairs
                .into_iter()
                .map(|(id, u, w)| (id, u, w, sign(), sign()))
                .collect();
            AnyGraph::Bidirected(BidirectedGraph::new(vertices, signed)?)
        }
    };
    Ok(g)
}

/// Serialized graph, checked by parsing it back.
pub fn generate(kind: GraphKind, n: usize, m: usize, seed: u64) -> Result<String, FormatError> {
    let g = random_graph(kind, n, m, seed)?;
    let text = serialize_graph(&g);
    if parse_graph(&text)? != g {
        return Err(FormatError::Invalid(String::from("generated graph does not round-trip")));
    }
    Ok(text)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_and_invalid() {
        let g = random_graph(GraphKind::Directed, 0, 0, 1).unwrap();
        assert_eq!(g.as_dyn().vertex_count(), 0);
        assert!(random_graph(GraphKind::Directed, 1, 1, 1).is_err());
    }

    #[test]
    fn seeded() {
        for kind in [GraphKind::Undirected, GraphKind::Directed, GraphKind::Bidirected] {
            assert_eq!(generate(kind, 5, 8, 7).unwrap(), generate(kind, 5, 8, 7).unwrap());
        }
        assert_ne!(
            generate(GraphKind::Directed, 5, 8, 7).unwrap(),
            generate(GraphKind::Directed, 5, 8, 8).unwrap()
        );
    }
}
