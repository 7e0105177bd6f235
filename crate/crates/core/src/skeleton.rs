//! Skeletons of crystal components: contract each quasi-crystal component to
//! its standard Young tableau, keep one minimal-label edge per ordered pair,
//! and analyse the level subgraphs induced by descent-composition length.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::crystal::quasi_kashiwara_f;
use crate::error::Error;
use crate::graph::{build_component, GraphKind};
use crate::insertion::schensted_insert;
use crate::tableau::{
    descent_composition, enumerate_syt, highest_weight_young_tableau, StandardYoungTableau,
};
use crate::word::{Composition, Partition};
use crate::Result;

/// The skeleton of the crystal component of shape `lambda`: vertices are the
/// standard Young tableaux of that shape, edges the contracted strict edges
/// with minimal label per ordered pair.
#[derive(Clone, Debug)]
pub struct SkeletonGraph {
    lambda: Partition,
    rank_used: u32,
    vertices: Vec<StandardYoungTableau>,
    descent_compositions: Vec<Composition>,
    edges: Vec<(usize, usize, u32)>,
}

/// Skeletons built at different valid ranks compare equal: the rank is build
/// metadata, not part of the contracted graph.
impl PartialEq for SkeletonGraph {
    fn eq(&self, other: &Self) -> bool {
        self.lambda == other.lambda && self.vertices == other.vertices && self.edges == other.edges
    }
}

impl Eq for SkeletonGraph {}

impl SkeletonGraph {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn rank_used(&self) -> u32 {
        self.rank_used
    }

    /// Vertices in lexicographic row-reading order.
    pub fn vertices(&self) -> &[StandardYoungTableau] {
        &self.vertices
    }

    pub fn descent_composition_of(&self, v: usize) -> &Composition {
        &self.descent_compositions[v]
    }

    /// Edges `(src, dst, label)` sorted by source, destination, label.
    pub fn edges(&self) -> &[(usize, usize, u32)] {
        &self.edges
    }

    /// JSON export: tableaux with their descent compositions, plus edges.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("skeleton serialization cannot fail")
    }

    /// DOT export labelling each vertex with its row reading and descent
    /// composition.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for (i, s) in self.vertices.iter().enumerate() {
            out.push_str(&format!(
                "  {i} [label=\"{} dc={}\"];\n",
                s.row_reading(),
                self.descent_compositions[i]
            ));
        }
        for &(src, dst, label) in &self.edges {
            out.push_str(&format!("  {src} -> {dst} [label=\"{label}\"];\n"));
        }
        out.push_str("}\n");
        out
    }
}

/// An induced level subgraph of a skeleton.
#[derive(Clone, Debug)]
pub struct HSubgraph {
    /// Skeleton vertex indices whose descent compositions have the requested
    /// number of parts.
    pub vertices: Vec<usize>,
    /// Directed skeleton edges between those vertices.
    pub edges: Vec<(usize, usize, u32)>,
}

impl HSubgraph {
    /// Antiparallel pairs collapse to a single undirected edge.
    pub fn undirected_edges(&self) -> BTreeSet<(usize, usize)> {
        self.edges
            .iter()
            .map(|&(a, b, _)| (a.min(b), a.max(b)))
            .collect()
    }
}

/// Shape of a connected undirected component of a level subgraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentShape {
    Singleton,
    /// A path with two endpoints.
    Chain,
    /// Acyclic but not a path.
    Tree,
    /// Contains at least one cycle.
    CycleBearing,
}

/// Builds the skeleton of shape `lambda`, over rank `n` when given (default:
/// the weight of `lambda`). Any rank at least the maximum descent-composition
/// length yields the same skeleton.
pub fn skeleton(lambda: &Partition, n: Option<u32>) -> Result<SkeletonGraph> {
    if lambda.is_empty() {
        return Err(Error::Parameter("shape must be nonempty".into()));
    }
    let vertices = enumerate_syt(lambda);
    let descent_compositions: Vec<Composition> = vertices.iter().map(descent_composition).collect();
    let min_rank = descent_compositions
        .iter()
        .map(|c| c.len() as u32)
        .max()
        .expect("nonempty");
    let rank = n.unwrap_or_else(|| lambda.weight());
    if rank < min_rank {
        return Err(Error::Parameter(format!(
            "rank {rank} is below the required minimum {min_rank} for shape {lambda}"
        )));
    }

    let seed = highest_weight_young_tableau(lambda).column_reading();
    let crystal = build_component(&seed, GraphKind::Plac, rank)?;

    // standardization of the insertion tableau names the quasi-crystal
    // component of each vertex
    let syt_index: HashMap<StandardYoungTableau, usize> = vertices
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    let mut vertex_syt: Vec<usize> = Vec::with_capacity(crystal.vertex_count());
    for payload in crystal.vertices() {
        let word = payload.as_word().expect("crystal vertices are words");
        let s = schensted_insert(word).standardize();
        let idx = *syt_index.get(&s).ok_or_else(|| {
            Error::Structure(format!(
                "vertex {word} standardizes outside the expected shape"
            ))
        })?;
        vertex_syt.push(idx);
    }

    // quasi-crystal components via union-find over the non-strict edges
    let mut parent: Vec<usize> = (0..crystal.vertex_count()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let root = find(parent, parent[x]);
            parent[x] = root;
        }
        parent[x]
    }
    for e in crystal.edges() {
        let src_word = crystal.vertices()[e.src].as_word().expect("word");
        let dst_word = crystal.vertices()[e.dst].as_word().expect("word");
        if quasi_kashiwara_f(src_word, e.label).as_ref() == Some(dst_word) {
            let a = find(&mut parent, e.src);
            let b = find(&mut parent, e.dst);
            parent[a] = b;
        }
    }

    // each component carries a single tableau, and distinct components carry
    // distinct tableaux
    let mut component_syt: HashMap<usize, usize> = HashMap::new();
    for (v, &syt) in vertex_syt.iter().enumerate() {
        let root = find(&mut parent, v);
        match component_syt.get(&root) {
            Some(&s) if s != syt => {
                return Err(Error::Structure(
                    "a quasi-crystal component carries two standardizations".into(),
                ));
            }
            Some(_) => {}
            None => {
                component_syt.insert(root, syt);
            }
        }
    }
    let mut used: BTreeSet<usize> = BTreeSet::new();
    for &s in component_syt.values() {
        if !used.insert(s) {
            return Err(Error::Structure(
                "two quasi-crystal components share a standardization".into(),
            ));
        }
    }
    if used.len() != vertices.len() {
        return Err(Error::Structure(format!(
            "{} quasi-crystal components for {} standard tableaux",
            used.len(),
            vertices.len()
        )));
    }

    // contract: minimal label per ordered pair of components
    let mut contracted: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for e in crystal.edges() {
        let a = vertex_syt[e.src];
        let b = vertex_syt[e.dst];
        if a != b {
            contracted
                .entry((a, b))
                .and_modify(|label| *label = (*label).min(e.label))
                .or_insert(e.label);
        }
    }
    let edges: Vec<(usize, usize, u32)> = contracted
        .into_iter()
        .map(|((a, b), label)| (a, b, label))
        .collect();

    Ok(SkeletonGraph {
        lambda: lambda.clone(),
        rank_used: rank,
        vertices,
        descent_compositions,
        edges,
    })
}

/// The induced subgraph on tableaux whose descent compositions have exactly
/// `s` parts.
pub fn h_subgraph(skel: &SkeletonGraph, s: usize) -> HSubgraph {
    let vertices: Vec<usize> = (0..skel.vertices.len())
        .filter(|&v| skel.descent_compositions[v].len() == s)
        .collect();
    let level: BTreeSet<usize> = vertices.iter().copied().collect();
    let edges = skel
        .edges
        .iter()
        .copied()
        .filter(|&(a, b, _)| level.contains(&a) && level.contains(&b))
        .collect();
    HSubgraph { vertices, edges }
}

/// Parity of the sum of the even-indexed parts of the descent composition.
pub fn parity(t: &StandardYoungTableau) -> u8 {
    let dc = descent_composition(t);
    let sum: u32 = dc.parts().iter().skip(1).step_by(2).sum();
    (sum % 2) as u8
}

/// True iff the undirected simple level graph is bipartite with the two
/// parity classes as parts, i.e. every edge joins opposite parities. This
/// forces every cycle to have even length.
pub fn check_even_cycles(skel: &SkeletonGraph, s: usize) -> bool {
    let h = h_subgraph(skel, s);
    h.undirected_edges()
        .iter()
        .all(|&(a, b)| parity(&skel.vertices[a]) != parity(&skel.vertices[b]))
}

/// Classifies the connected components of the undirected simple level graph.
pub fn component_shapes(h: &HSubgraph) -> Vec<(Vec<usize>, ComponentShape)> {
    let undirected = h.undirected_edges();
    let mut adjacency: BTreeMap<usize, BTreeSet<usize>> =
        h.vertices.iter().map(|&v| (v, BTreeSet::new())).collect();
    for &(a, b) in &undirected {
        adjacency.get_mut(&a).expect("endpoint in level").insert(b);
        adjacency.get_mut(&b).expect("endpoint in level").insert(a);
    }

    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut out = Vec::new();
    for &start in &h.vertices {
        if seen.contains(&start) {
            continue;
        }
        let mut component = vec![start];
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adjacency[&v] {
                if seen.insert(w) {
                    component.push(w);
                    stack.push(w);
                }
            }
        }
        component.sort_unstable();
        let edge_count = undirected
            .iter()
            .filter(|&&(a, _)| component.binary_search(&a).is_ok())
            .count();
        let shape = if component.len() == 1 {
            ComponentShape::Singleton
        } else if edge_count >= component.len() {
            ComponentShape::CycleBearing
        } else {
            let degrees: Vec<usize> = component.iter().map(|v| adjacency[v].len()).collect();
            let endpoints = degrees.iter().filter(|&&d| d == 1).count();
            if degrees.iter().all(|&d| d <= 2) && endpoints == 2 {
                ComponentShape::Chain
            } else {
                ComponentShape::Tree
            }
        };
        out.push((component, shape));
    }
    out
}

/// Number of independent cycles of the undirected simple level graph.
pub fn cycle_rank(h: &HSubgraph) -> usize {
    let components = component_shapes(h);
    let edges = h.undirected_edges().len();
    let vertices = h.vertices.len();
    edges + components.len() - vertices
}

/// Plain-text per-level report: vertex counts, component shapes, parity
/// bipartiteness.
pub fn report(skel: &SkeletonGraph) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "skeleton of {}: {} vertices, {} edges (rank {})\n",
        skel.lambda,
        skel.vertices.len(),
        skel.edges.len(),
        skel.rank_used
    ));
    let lengths: BTreeSet<usize> = skel
        .descent_compositions
        .iter()
        .map(Composition::len)
        .collect();
    for s in lengths {
        let h = h_subgraph(skel, s);
        let shapes = component_shapes(&h);
        let mut tally: BTreeMap<&'static str, usize> = BTreeMap::new();
        for (_, shape) in &shapes {
            let name = match shape {
                ComponentShape::Singleton => "singleton",
                ComponentShape::Chain => "chain",
                ComponentShape::Tree => "tree",
                ComponentShape::CycleBearing => "cycle-bearing",
            };
            *tally.entry(name).or_insert(0) += 1;
        }
        let summary: Vec<String> = tally.iter().map(|(k, v)| format!("{v} {k}")).collect();
        out.push_str(&format!(
            "H_{s}: {} vertices, {} undirected edges, components: {}; bipartite by parity: {}\n",
            h.vertices.len(),
            h.undirected_edges().len(),
            if summary.is_empty() {
                "none".to_string()
            } else {
                summary.join(", ")
            },
            check_even_cycles(skel, s)
        ));
    }
    out
}

impl Serialize for SkeletonGraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Vertex<'a> {
            rows: &'a [Vec<u32>],
            dc: &'a [u32],
        }
        #[derive(Serialize)]
        struct EdgeOut {
            src: usize,
            dst: usize,
            label: u32,
        }
        let mut s = serializer.serialize_struct("SkeletonGraph", 4)?;
        s.serialize_field("lambda", &self.lambda.parts())?;
        s.serialize_field("rank", &self.rank_used)?;
        let vertices: Vec<Vertex> = self
            .vertices
            .iter()
            .zip(&self.descent_compositions)
            .map(|(t, dc)| Vertex {
                rows: t.rows(),
                dc: dc.parts(),
            })
            .collect();
        s.serialize_field("vertices", &vertices)?;
        let edges: Vec<EdgeOut> = self
            .edges
            .iter()
            .map(|&(src, dst, label)| EdgeOut { src, dst, label })
            .collect();
        s.serialize_field("edges", &edges)?;
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn partition(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn single_row_is_a_point() {
        let s = skeleton(&partition(&[4]), None).unwrap();
        assert_eq!(s.vertices().len(), 1);
        assert!(s.edges().is_empty());
    }

    #[test]
    fn hook_of_weight_three() {
        let s = skeleton(&partition(&[2, 1]), Some(3)).unwrap();
        assert_eq!(s.vertices().len(), 2);
        // one contracted edge with the minimal label of the two strict edges
        assert_eq!(s.edges(), &[(0, 1, 1)]);
        let h = h_subgraph(&s, 2);
        assert_eq!(h.vertices.len(), 2);
        assert_eq!(component_shapes(&h)[0].1, ComponentShape::Chain);
        assert!(check_even_cycles(&s, 2));
    }

    #[test]
    fn parity_examples() {
        let s = crate::tableau::YoungTableau::new(vec![
            vec![1, 2, 5, 6, 12],
            vec![3, 4, 9],
            vec![7, 8],
            vec![10, 11],
        ])
        .unwrap();
        let s = StandardYoungTableau::new(s).unwrap();
        // dc = (2,4,3,3): even-indexed parts sum to 7
        assert_eq!(parity(&s), 1);

        let row = crate::tableau::YoungTableau::new(vec![vec![1, 2, 3]]).unwrap();
        assert_eq!(parity(&StandardYoungTableau::new(row).unwrap()), 0);
    }

    #[test]
    fn adjacent_levels_alternate_parity() {
        for w in 2..=5u32 {
            for lambda in Partition::all_of_weight(w) {
                let s = skeleton(&lambda, None).unwrap();
                let lengths: BTreeSet<usize> = s
                    .descent_compositions
                    .iter()
                    .map(Composition::len)
                    .collect();
                for level in lengths {
                    let h = h_subgraph(&s, level);
                    for (a, b) in h.undirected_edges() {
                        assert_ne!(parity(&s.vertices()[a]), parity(&s.vertices()[b]));
                    }
                }
            }
        }
    }

    #[test]
    fn rank_independence_small() {
        for w in 2..=5u32 {
            for lambda in Partition::all_of_weight(w) {
                let vertices = enumerate_syt(&lambda);
                let min_rank = vertices
                    .iter()
                    .map(|t| descent_composition(t).len() as u32)
                    .max()
                    .unwrap();
                let a = skeleton(&lambda, Some(min_rank)).unwrap();
                let b = skeleton(&lambda, Some(min_rank + 1)).unwrap();
                assert_eq!(a, b, "{lambda}");
                assert!(min_rank == 1 || skeleton(&lambda, Some(min_rank - 1)).is_err());
            }
        }
    }

    #[test]
    fn rank_error_names_bound() {
        let err = skeleton(&partition(&[2, 1]), Some(1)).unwrap_err();
        assert!(err.to_string().contains("minimum 2"), "{err}");
    }

    #[test]
    fn counterexample_shape_has_21_vertices() {
        let s = skeleton(&partition(&[3, 2, 2]), Some(5)).unwrap();
        assert_eq!(s.vertices().len(), 21);
        let h3 = h_subgraph(&s, 3);
        assert_eq!(h3.vertices.len(), 3);
        let h4 = h_subgraph(&s, 4);
        assert_eq!(h4.vertices.len(), 12);
        let h5 = h_subgraph(&s, 5);
        assert_eq!(h5.vertices.len(), 6);
    }
}
