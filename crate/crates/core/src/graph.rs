//! Labelled digraphs generated by the operator families: crystal components,
//! quasi-crystal components, and quasi-array graphs, together with
//! isomorphism checks, lattice coordinates, and byte-stable exports.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::crystal::{kashiwara_e, kashiwara_f, quasi_kashiwara_e, quasi_kashiwara_f};
use crate::error::Error;
use crate::insertion::hypoplactic_insert;
use crate::quasi_array::{direct_transport, enumerate_in_rank, genqa, pickqrt, QuasiArray};
use crate::word::{evaluation, Evaluation, Word};
use crate::Result;

/// Which operator family generated a graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GraphKind {
    Plac,
    Hypo,
    QuasiArray,
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            GraphKind::Plac => "plac",
            GraphKind::Hypo => "hypo",
            GraphKind::QuasiArray => "quasi_array",
        };
        write!(f, "{name}")
    }
}

/// Vertex payload: a word for crystal / quasi-crystal graphs, a quasi-array
/// for the diagonal-operator graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Payload {
    Word(Word),
    Array(QuasiArray),
}

impl Payload {
    pub fn as_word(&self) -> Option<&Word> {
        match self {
            Payload::Word(w) => Some(w),
            Payload::Array(_) => None,
        }
    }

    pub fn as_array(&self) -> Option<&QuasiArray> {
        match self {
            Payload::Word(_) => None,
            Payload::Array(q) => Some(q),
        }
    }

    /// Letter counts: of the word, or of the determining first row.
    pub fn evaluation(&self) -> Evaluation {
        match self {
            Payload::Word(w) => evaluation(w),
            Payload::Array(q) => crate::word::evaluation_of_entries(q.first_row().iter().copied()),
        }
    }

    /// Single-line label used in DOT exports.
    pub fn label_text(&self) -> String {
        match self {
            Payload::Word(w) => w.to_string(),
            Payload::Array(q) => q.render().trim_end().replace('\n', "\\n"),
        }
    }
}

/// A directed edge labelled by an operator index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Edge {
    pub src: usize,
    pub dst: usize,
    pub label: u32,
}

/// A finite labelled digraph closed under the generating operators.
///
/// Vertex indices follow BFS discovery order (diagonal graphs enumerate
/// lexicographically), so serializations are byte-stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph {
    kind: GraphKind,
    rank: u32,
    vertices: Vec<Payload>,
    edges: Vec<Edge>,
    out_edges: Vec<BTreeMap<u32, usize>>,
    in_edges: Vec<BTreeMap<u32, usize>>,
    index: HashMap<Payload, usize>,
}

#[derive(Serialize, Deserialize)]
struct GraphFile {
    kind: GraphKind,
    rank: u32,
    vertices: Vec<Payload>,
    edges: Vec<Edge>,
}

impl LabeledDigraph {
    fn from_parts(
        kind: GraphKind,
        rank: u32,
        vertices: Vec<Payload>,
        edges: Vec<Edge>,
    ) -> Result<Self> {
        let mut out_edges = vec![BTreeMap::new(); vertices.len()];
        let mut in_edges = vec![BTreeMap::new(); vertices.len()];
        for e in &edges {
            if e.src >= vertices.len() || e.dst >= vertices.len() {
                return Err(Error::Parse("edge endpoint out of range".into()));
            }
            if out_edges[e.src].insert(e.label, e.dst).is_some() {
                return Err(Error::Structure(format!(
                    "duplicate out-edge with label {} at vertex {}",
                    e.label, e.src
                )));
            }
            if in_edges[e.dst].insert(e.label, e.src).is_some() {
                return Err(Error::Structure(format!(
                    "duplicate in-edge with label {} at vertex {}",
                    e.label, e.dst
                )));
            }
        }
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, payload) in vertices.iter().enumerate() {
            if index.insert(payload.clone(), i).is_some() {
                return Err(Error::Structure("duplicate vertex payload".into()));
            }
        }
        Ok(LabeledDigraph {
            kind,
            rank,
            vertices,
            edges,
            out_edges,
            in_edges,
            index,
        })
    }

    pub fn kind(&self) -> GraphKind {
        self.kind
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[Payload] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_index(&self, payload: &Payload) -> Option<usize> {
        self.index.get(payload).copied()
    }

    pub fn word_index(&self, w: &Word) -> Option<usize> {
        self.index.get(&Payload::Word(w.clone())).copied()
    }

    pub fn out_labels(&self, v: usize) -> &BTreeMap<u32, usize> {
        &self.out_edges[v]
    }

    pub fn in_labels(&self, v: usize) -> &BTreeMap<u32, usize> {
        &self.in_edges[v]
    }

    pub fn has_edge(&self, src: usize, dst: usize) -> bool {
        self.out_edges[src].values().any(|&d| d == dst)
    }

    /// The unique vertex with no incoming edges.
    pub fn highest_weight(&self) -> Result<usize> {
        self.unique_extremal(true)
    }

    /// The unique vertex with no outgoing edges.
    pub fn lowest_weight(&self) -> Result<usize> {
        self.unique_extremal(false)
    }

    fn unique_extremal(&self, sources: bool) -> Result<usize> {
        let candidates: Vec<usize> = (0..self.vertices.len())
            .filter(|&v| {
                if sources {
                    self.in_edges[v].is_empty()
                } else {
                    self.out_edges[v].is_empty()
                }
            })
            .collect();
        match candidates.as_slice() {
            [v] => Ok(*v),
            _ => Err(Error::Structure(format!(
                "expected a unique {} vertex, found {}",
                if sources {
                    "highest-weight"
                } else {
                    "lowest-weight"
                },
                candidates.len()
            ))),
        }
    }

    /// Maximum number of outgoing edges over all vertices.
    pub fn max_outdegree(&self) -> usize {
        self.out_edges.iter().map(BTreeMap::len).max().unwrap_or(0)
    }

    /// Lattice coordinates of a quasi-crystal component: each vertex becomes
    /// the row-by-row entry vector of its quasi-ribbon tableau.
    pub fn polytope_coordinates(&self) -> Result<Vec<Vec<u32>>> {
        if self.kind != GraphKind::Hypo {
            return Err(Error::Parameter(
                "coordinates require a quasi-crystal component".into(),
            ));
        }
        Ok(self
            .vertices
            .iter()
            .map(|p| {
                hypoplactic_insert(p.as_word().expect("hypo graphs hold words")).ribbon_entries()
            })
            .collect())
    }

    /// Compact JSON form; stable bytes for fixed build parameters.
    pub fn to_json(&self) -> String {
        let file = GraphFile {
            kind: self.kind,
            rank: self.rank,
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        };
        serde_json::to_string(&file).expect("graph serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("graph json: {e}")))?;
        LabeledDigraph::from_parts(file.kind, file.rank, file.vertices, file.edges)
    }

    /// DOT form with vertex labels from the payload renderer.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph {\n");
        for (i, payload) in self.vertices.iter().enumerate() {
            out.push_str(&format!("  {i} [label=\"{}\"];\n", payload.label_text()));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "  {} -> {} [label=\"{}\"];\n",
                e.src, e.dst, e.label
            ));
        }
        out.push_str("}\n");
        out
    }
}

type PartialOp = fn(&Word, u32) -> Option<Word>;

/// Builds the connected component of `seed` in the crystal graph (`Plac`) or
/// quasi-crystal graph (`Hypo`) of rank `n`.
///
/// BFS from the seed; at each vertex the operators are tried with ascending
/// label, `e` before `f`, which fixes the vertex numbering.
pub fn build_component(seed: &Word, kind: GraphKind, n: u32) -> Result<LabeledDigraph> {
    if n == 0 {
        return Err(Error::Parameter("rank must be at least 1".into()));
    }
    seed.ensure_rank(n)?;
    let (e_op, f_op): (PartialOp, PartialOp) = match kind {
        GraphKind::Plac => (kashiwara_e, kashiwara_f),
        GraphKind::Hypo => (quasi_kashiwara_e, quasi_kashiwara_f),
        GraphKind::QuasiArray => {
            return Err(Error::Parameter(
                "component building requires a word kind".into(),
            ))
        }
    };

    let mut vertices: Vec<Word> = vec![seed.clone()];
    let mut index: HashMap<Word, usize> = HashMap::from([(seed.clone(), 0)]);
    let mut edge_set: BTreeSet<Edge> = BTreeSet::new();
    let mut queue: VecDeque<usize> = VecDeque::from([0]);

    while let Some(u) = queue.pop_front() {
        let word = vertices[u].clone();
        for i in 1..n {
            if let Some(parent) = e_op(&word, i) {
                let p = intern(parent, &mut vertices, &mut index, &mut queue);
                edge_set.insert(Edge {
                    src: p,
                    dst: u,
                    label: i,
                });
            }
            if let Some(child) = f_op(&word, i) {
                let c = intern(child, &mut vertices, &mut index, &mut queue);
                edge_set.insert(Edge {
                    src: u,
                    dst: c,
                    label: i,
                });
            }
        }
    }

    let payloads = vertices.into_iter().map(Payload::Word).collect();
    LabeledDigraph::from_parts(kind, n, payloads, edge_set.into_iter().collect())
}

fn intern(
    word: Word,
    vertices: &mut Vec<Word>,
    index: &mut HashMap<Word, usize>,
    queue: &mut VecDeque<usize>,
) -> usize {
    if let Some(&i) = index.get(&word) {
        return i;
    }
    let i = vertices.len();
    index.insert(word.clone(), i);
    vertices.push(word);
    queue.push_back(i);
    i
}

/// Builds the quasi-array graph on all size-`m` quasi-arrays whose first row
/// stays within `1..=n`, with an edge labelled `k` for each defined `td_k`
/// that stays within rank.
pub fn build_delta(n: u32, m: usize) -> Result<LabeledDigraph> {
    if n == 0 || m == 0 {
        return Err(Error::Parameter("rank and size must be at least 1".into()));
    }
    let arrays = enumerate_in_rank(n, m);
    let index: HashMap<QuasiArray, usize> = arrays
        .iter()
        .enumerate()
        .map(|(i, q)| (q.clone(), i))
        .collect();
    let mut edges = Vec::new();
    for (i, q) in arrays.iter().enumerate() {
        for k in 1..=m {
            if let Some(next) = q.td(k) {
                if next.in_rank(n) {
                    let j = index[&next];
                    edges.push(Edge {
                        src: i,
                        dst: j,
                        label: k as u32,
                    });
                }
            }
        }
    }
    edges.sort_unstable();
    let payloads = arrays.into_iter().map(Payload::Array).collect();
    LabeledDigraph::from_parts(GraphKind::QuasiArray, n, payloads, edges)
}

/// Requested strength of a digraph isomorphism.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IsoMode {
    LabelledWeighted,
    Labelled,
    Unlabelled,
}

impl std::str::FromStr for IsoMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "labelled-weighted" | "labelled_weighted" => Ok(IsoMode::LabelledWeighted),
            "labelled" => Ok(IsoMode::Labelled),
            "unlabelled" => Ok(IsoMode::Unlabelled),
            other => Err(Error::Parse(format!("unknown isomorphism mode `{other}`"))),
        }
    }
}

/// A verified isomorphism: `vertex_map[i]` is the image in the second graph
/// of the first graph's vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoWitness {
    pub vertex_map: Vec<usize>,
    pub labelled: bool,
    pub weighted: bool,
}

/// Outcome of an unlabelled comparison: the procedure is one-sided, so a
/// missing witness is only a definitive negative when certified by a counting
/// invariant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UnlabelledOutcome {
    Witness(IsoWitness),
    CertifiedNonIsomorphic(String),
    NoWitnessFound,
}

/// Decides isomorphism at the requested strength.
///
/// Labelled modes run a simultaneous BFS from the unique highest-weight
/// vertices; the transition determinism of the operator graphs makes the
/// resulting map the only candidate. Unlabelled mode constructs the shape
/// transport map and verifies it (see [`unlabelled_isomorphism`]).
pub fn isomorphic(g1: &LabeledDigraph, g2: &LabeledDigraph, mode: IsoMode) -> Option<IsoWitness> {
    match mode {
        IsoMode::LabelledWeighted => labelled_isomorphism(g1, g2, true),
        IsoMode::Labelled => labelled_isomorphism(g1, g2, false),
        IsoMode::Unlabelled => match unlabelled_isomorphism(g1, g2) {
            UnlabelledOutcome::Witness(w) => Some(w),
            _ => None,
        },
    }
}

/// Simultaneous-BFS labelled isomorphism rooted at highest-weight vertices.
pub fn labelled_isomorphism(
    g1: &LabeledDigraph,
    g2: &LabeledDigraph,
    weighted: bool,
) -> Option<IsoWitness> {
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return None;
    }
    let root1 = g1.highest_weight().ok()?;
    let root2 = g2.highest_weight().ok()?;

    let mut map: Vec<Option<usize>> = vec![None; g1.vertex_count()];
    let mut matched: Vec<bool> = vec![false; g2.vertex_count()];
    map[root1] = Some(root2);
    matched[root2] = true;
    let mut queue = VecDeque::from([(root1, root2)]);

    while let Some((u, v)) = queue.pop_front() {
        if weighted && g1.vertices[u].evaluation() != g2.vertices[v].evaluation() {
            return None;
        }
        let pairs = [
            (&g1.out_edges[u], &g2.out_edges[v]),
            (&g1.in_edges[u], &g2.in_edges[v]),
        ];
        for (adj1, adj2) in pairs {
            if adj1.keys().ne(adj2.keys()) {
                return None;
            }
            for (label, &t1) in adj1 {
                let t2 = adj2[label];
                match map[t1] {
                    Some(existing) => {
                        if existing != t2 {
                            return None;
                        }
                    }
                    None => {
                        if matched[t2] {
                            return None;
                        }
                        map[t1] = Some(t2);
                        matched[t2] = true;
                        queue.push_back((t1, t2));
                    }
                }
            }
        }
    }

    let vertex_map: Vec<usize> = map.into_iter().collect::<Option<_>>()?;
    Some(IsoWitness {
        vertex_map,
        labelled: true,
        weighted,
    })
}

/// Verifies a candidate vertex map as an unlabelled directed isomorphism.
pub fn verify_unlabelled_map(
    g1: &LabeledDigraph,
    g2: &LabeledDigraph,
    vertex_map: &[usize],
) -> Option<IsoWitness> {
    if vertex_map.len() != g1.vertex_count() || g1.vertex_count() != g2.vertex_count() {
        return None;
    }
    let mut seen = vec![false; g2.vertex_count()];
    for &v in vertex_map {
        if v >= g2.vertex_count() || seen[v] {
            return None;
        }
        seen[v] = true;
    }
    // compare edge multisets so parallel edges in loaded graphs cannot hide
    let mut mapped: Vec<(usize, usize)> = g1
        .edges()
        .iter()
        .map(|e| (vertex_map[e.src], vertex_map[e.dst]))
        .collect();
    let mut target: Vec<(usize, usize)> = g2.edges().iter().map(|e| (e.src, e.dst)).collect();
    mapped.sort_unstable();
    target.sort_unstable();
    if mapped != target {
        return None;
    }
    Some(IsoWitness {
        vertex_map: vertex_map.to_vec(),
        labelled: false,
        weighted: false,
    })
}

/// Builds and verifies the shape-transport map between operator graphs of
/// equal word length: quasi-ribbon extraction / completion between a
/// quasi-array graph and a quasi-crystal component, and their composition
/// between two quasi-crystal components.
pub fn unlabelled_isomorphism(g1: &LabeledDigraph, g2: &LabeledDigraph) -> UnlabelledOutcome {
    if g1.vertex_count() != g2.vertex_count() {
        return UnlabelledOutcome::CertifiedNonIsomorphic(format!(
            "vertex counts differ: {} vs {}",
            g1.vertex_count(),
            g2.vertex_count()
        ));
    }
    if g1.edge_count() != g2.edge_count() {
        return UnlabelledOutcome::CertifiedNonIsomorphic(format!(
            "edge counts differ: {} vs {}",
            g1.edge_count(),
            g2.edge_count()
        ));
    }
    if g1.vertex_count() <= 1 || g1.vertices == g2.vertices {
        let identity: Vec<usize> = (0..g1.vertex_count()).collect();
        if let Some(w) = verify_unlabelled_map(g1, g2, &identity) {
            return UnlabelledOutcome::Witness(w);
        }
    }
    let candidate = match (g1.kind, g2.kind) {
        (GraphKind::Hypo, GraphKind::Hypo) => transport_map(g1, g2),
        (GraphKind::QuasiArray, GraphKind::Hypo) => extraction_map(g1, g2),
        (GraphKind::Hypo, GraphKind::QuasiArray) => completion_map(g1, g2),
        _ => None,
    };
    match candidate.and_then(|map| verify_unlabelled_map(g1, g2, &map)) {
        Some(w) => UnlabelledOutcome::Witness(w),
        None => UnlabelledOutcome::NoWitnessFound,
    }
}

/// Shape of a quasi-crystal component: the shape of any vertex's insertion
/// tableau (they all agree).
fn component_shape(g: &LabeledDigraph) -> Option<crate::word::Composition> {
    let w = g.vertices.first()?.as_word()?;
    Some(hypoplactic_insert(w).shape())
}

fn transport_map(g1: &LabeledDigraph, g2: &LabeledDigraph) -> Option<Vec<usize>> {
    let tau = component_shape(g2)?;
    g1.vertices
        .iter()
        .map(|p| {
            let t = hypoplactic_insert(p.as_word()?);
            let moved = direct_transport(&t, &tau).ok()?;
            g2.word_index(&moved.column_reading())
        })
        .collect()
}

fn extraction_map(g1: &LabeledDigraph, g2: &LabeledDigraph) -> Option<Vec<usize>> {
    let sigma = component_shape(g2)?;
    g1.vertices
        .iter()
        .map(|p| {
            let t = pickqrt(p.as_array()?, &sigma).ok()?;
            g2.word_index(&t.column_reading())
        })
        .collect()
}

fn completion_map(g1: &LabeledDigraph, g2: &LabeledDigraph) -> Option<Vec<usize>> {
    g1.vertices
        .iter()
        .map(|p| {
            let q = genqa(&hypoplactic_insert(p.as_word()?));
            g2.vertex_index(&Payload::Array(q))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::highest_weight_quasi_ribbon;
    use crate::word::{words_up_to_length, Composition};

    fn word(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn hypo(seed: &str, n: u32) -> LabeledDigraph {
        build_component(&word(seed), GraphKind::Hypo, n).unwrap()
    }

    fn plac(seed: &str, n: u32) -> LabeledDigraph {
        build_component(&word(seed), GraphKind::Plac, n).unwrap()
    }

    fn word_list(g: &LabeledDigraph) -> Vec<String> {
        g.vertices()
            .iter()
            .map(|p| p.as_word().unwrap().to_string())
            .collect()
    }

    #[test]
    fn quasi_crystal_components_of_rank_three() {
        let g = hypo("211", 3);
        assert_eq!(word_list(&g), vec!["211", "311", "312", "322"]);
        assert_eq!(
            g.edges(),
            &[
                Edge {
                    src: 0,
                    dst: 1,
                    label: 2
                },
                Edge {
                    src: 1,
                    dst: 2,
                    label: 1
                },
                Edge {
                    src: 2,
                    dst: 3,
                    label: 1
                },
            ]
        );

        let g = hypo("212", 3);
        assert_eq!(word_list(&g), vec!["212", "213", "313", "323"]);
        assert_eq!(
            g.edges(),
            &[
                Edge {
                    src: 0,
                    dst: 1,
                    label: 2
                },
                Edge {
                    src: 1,
                    dst: 2,
                    label: 2
                },
                Edge {
                    src: 2,
                    dst: 3,
                    label: 1
                },
            ]
        );
    }

    #[test]
    fn crystal_component_is_union_plus_strict_edges() {
        let g = plac("211", 3);
        let mut words = word_list(&g);
        words.sort();
        assert_eq!(
            words,
            vec!["211", "212", "213", "311", "312", "313", "322", "323"]
        );
        assert_eq!(g.edge_count(), 8);

        let edge_words: BTreeSet<(String, String, u32)> = g
            .edges()
            .iter()
            .map(|e| {
                (
                    g.vertices()[e.src].as_word().unwrap().to_string(),
                    g.vertices()[e.dst].as_word().unwrap().to_string(),
                    e.label,
                )
            })
            .collect();
        let expected: BTreeSet<(String, String, u32)> = [
            ("211", "311", 2),
            ("311", "312", 1),
            ("312", "322", 1),
            ("212", "213", 2),
            ("213", "313", 2),
            ("313", "323", 1),
            ("211", "212", 1),
            ("322", "323", 2),
        ]
        .iter()
        .map(|(a, b, l)| (a.to_string(), b.to_string(), *l))
        .collect();
        assert_eq!(edge_words, expected);
    }

    #[test]
    fn hypo_is_subgraph_of_plac() {
        for seed in words_up_to_length(5, 3) {
            let p = plac(&seed.to_string(), 3);
            let h = build_component(&seed, GraphKind::Hypo, 3).unwrap();
            for v in h.vertices() {
                assert!(p.vertex_index(v).is_some());
            }
            for e in h.edges() {
                let src = p.vertex_index(&h.vertices()[e.src]).unwrap();
                let dst = p.vertex_index(&h.vertices()[e.dst]).unwrap();
                assert_eq!(p.out_labels(src).get(&e.label), Some(&dst));
            }
            // the crystal component is partitioned by quasi-crystal components
            let mut covered = 0;
            let mut seen: BTreeSet<String> = BTreeSet::new();
            for v in p.vertices() {
                let w = v.as_word().unwrap();
                if seen.contains(&w.to_string()) {
                    continue;
                }
                let comp = build_component(w, GraphKind::Hypo, 3).unwrap();
                for cv in comp.vertices() {
                    assert!(seen.insert(cv.as_word().unwrap().to_string()));
                    assert!(p.vertex_index(cv).is_some());
                    covered += 1;
                }
            }
            assert_eq!(covered, p.vertex_count());
        }
    }

    #[test]
    fn delta_examples() {
        let d = build_delta(3, 4).unwrap();
        assert_eq!(d.vertex_count(), 15);
        assert_eq!(d.max_outdegree(), 2);

        // full edge list of the size-4 graph over three letters, written as
        // first rows
        let edges: BTreeSet<(String, String, u32)> = d
            .edges()
            .iter()
            .map(|e| {
                let row = |i: usize| {
                    d.vertices()[i]
                        .as_array()
                        .unwrap()
                        .first_row()
                        .iter()
                        .map(|a| a.to_string())
                        .collect::<String>()
                };
                (row(e.src), row(e.dst), e.label)
            })
            .collect();
        let expected: BTreeSet<(String, String, u32)> = [
            ("1111", "1112", 4),
            ("1112", "1122", 3),
            ("1112", "1113", 4),
            ("1122", "1222", 2),
            ("1122", "1123", 4),
            ("1113", "1123", 3),
            ("1222", "2222", 1),
            ("1222", "1223", 4),
            ("1123", "1223", 2),
            ("1123", "1133", 3),
            ("2222", "2223", 4),
            ("1223", "2223", 1),
            ("1223", "1233", 3),
            ("1133", "1233", 2),
            ("2223", "2233", 3),
            ("1233", "2233", 1),
            ("1233", "1333", 2),
            ("2233", "2333", 2),
            ("1333", "2333", 1),
            ("2333", "3333", 1),
        ]
        .iter()
        .map(|(a, b, l)| (a.to_string(), b.to_string(), *l))
        .collect();
        assert_eq!(edges, expected);

        let single = build_delta(1, 3).unwrap();
        assert_eq!(single.vertex_count(), 1);
        assert_eq!(single.edge_count(), 0);

        let path = build_delta(4, 1).unwrap();
        assert_eq!(path.vertex_count(), 4);
        assert_eq!(path.edge_count(), 3);
        assert!(path
            .edges()
            .iter()
            .all(|e| e.label == 1 && e.dst == e.src + 1));
    }

    #[test]
    fn delta_truncated_to_one_more_letter_realizes_full_outdegree() {
        for m in 1..=4usize {
            let d = build_delta(m as u32 + 1, m).unwrap();
            assert_eq!(d.max_outdegree(), m);
        }
    }

    #[test]
    fn extremal_vertices() {
        let g = hypo("211", 3);
        assert_eq!(word_list(&g)[g.highest_weight().unwrap()], "211");
        assert_eq!(word_list(&g)[g.lowest_weight().unwrap()], "322");

        let lone = hypo("1", 1);
        assert_eq!(lone.highest_weight().unwrap(), 0);
        assert_eq!(lone.lowest_weight().unwrap(), 0);
    }

    #[test]
    fn labelled_isomorphism_follows_congruence() {
        use crate::insertion::hypoplactic_equivalent;
        let words: Vec<Word> = words_up_to_length(4, 3);
        for u in &words {
            let gu = build_component(u, GraphKind::Hypo, 3).unwrap();
            for v in &words {
                let gv = build_component(v, GraphKind::Hypo, 3).unwrap();
                let iso = labelled_isomorphism(&gu, &gv, true);
                let maps_u_to_v = iso.as_ref().is_some_and(|w| {
                    w.vertex_map[gu.word_index(u).unwrap()] == gv.word_index(v).unwrap()
                });
                assert_eq!(maps_u_to_v, hypoplactic_equivalent(u, v), "{u} {v}");
            }
        }
    }

    #[test]
    fn identity_witness() {
        let g = hypo("211", 3);
        let w = isomorphic(&g, &g, IsoMode::LabelledWeighted).unwrap();
        assert_eq!(w.vertex_map, vec![0, 1, 2, 3]);
        let w = isomorphic(&g, &g, IsoMode::Unlabelled).unwrap();
        assert_eq!(w.vertex_map, vec![0, 1, 2, 3]);
    }

    #[test]
    fn unlabelled_psi_witness_between_shapes() {
        // same length, different shapes, ranks shifted by the length difference
        let sigma = Composition::new(vec![2, 1, 1]).unwrap();
        let tau = Composition::new(vec![3, 1]).unwrap();
        let g1 = build_component(
            &highest_weight_quasi_ribbon(&sigma).column_reading(),
            GraphKind::Hypo,
            5,
        )
        .unwrap();
        let g2 = build_component(
            &highest_weight_quasi_ribbon(&tau).column_reading(),
            GraphKind::Hypo,
            4,
        )
        .unwrap();
        assert_eq!(g1.vertex_count(), 15);
        assert!(matches!(
            unlabelled_isomorphism(&g1, &g2),
            UnlabelledOutcome::Witness(_)
        ));

        let delta = build_delta(3, 4).unwrap();
        assert!(matches!(
            unlabelled_isomorphism(&delta, &g1),
            UnlabelledOutcome::Witness(_)
        ));
        assert!(matches!(
            unlabelled_isomorphism(&g1, &delta),
            UnlabelledOutcome::Witness(_)
        ));

        let smaller = hypo("211", 3);
        assert!(matches!(
            unlabelled_isomorphism(&g1, &smaller),
            UnlabelledOutcome::CertifiedNonIsomorphic(_)
        ));
    }

    #[test]
    fn isolated_vertices_have_full_row_count() {
        // words whose quasi-ribbon tableau uses as many rows as the rank are
        // isolated vertices
        for w in words_up_to_length(5, 3) {
            let rows = hypoplactic_insert(&w).shape().len();
            let g = build_component(&w, GraphKind::Hypo, 3).unwrap();
            if rows == 3 {
                assert_eq!(g.vertex_count(), 1, "{w}");
                assert_eq!(g.edge_count(), 0, "{w}");
            }
        }
    }

    #[test]
    fn row_component_sizes_are_binomial() {
        fn binomial(n: u64, k: u64) -> u64 {
            let mut r = 1u64;
            for i in 0..k {
                r = r * (n + i) / (i + 1);
            }
            r
        }
        for n in 1..=6u32 {
            for m in 1..=6usize {
                let seed = Word::new(vec![1; m]).unwrap();
                let g = build_component(&seed, GraphKind::Hypo, n).unwrap();
                // C(n + m - 1, m) weakly increasing rows
                assert_eq!(g.vertex_count() as u64, binomial(n as u64, m as u64));
            }
        }
    }

    #[test]
    fn coordinates_of_row_and_hook_shapes() {
        let g = build_component(&word("111"), GraphKind::Hypo, 4).unwrap();
        let coords = g.polytope_coordinates().unwrap();
        assert_eq!(coords.len(), 20);
        for c in &coords {
            assert!(c[0] >= 1 && c[0] <= c[1] && c[1] <= c[2] && c[2] <= 4);
        }

        let line = build_component(&word("1"), GraphKind::Hypo, 5).unwrap();
        let mut points = line.polytope_coordinates().unwrap();
        points.sort();
        assert_eq!(points, (1..=5).map(|x| vec![x]).collect::<Vec<_>>());
    }

    /// As a lattice, a component's edges are exactly the unit steps between
    /// its points, and each edge is labelled by the plane it crosses: the
    /// stepped coordinate's value at the source.
    #[test]
    fn lattice_edges_are_unit_steps() {
        for (sigma, rank) in [
            (Composition::new(vec![3]).unwrap(), 4),
            (Composition::new(vec![2, 1]).unwrap(), 5),
            (Composition::new(vec![1, 2]).unwrap(), 4),
        ] {
            let seed = highest_weight_quasi_ribbon(&sigma).column_reading();
            let g = build_component(&seed, GraphKind::Hypo, rank).unwrap();
            let coords = g.polytope_coordinates().unwrap();
            let point_set: BTreeSet<&Vec<u32>> = coords.iter().collect();

            let mut edge_steps: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
            for e in g.edges() {
                let from = &coords[e.src];
                let to = &coords[e.dst];
                let diffs: Vec<usize> = (0..from.len()).filter(|&h| from[h] != to[h]).collect();
                assert_eq!(diffs.len(), 1, "one coordinate steps");
                let h = diffs[0];
                assert_eq!(to[h], from[h] + 1, "step crosses one hyperplane");
                assert_eq!(e.label, from[h], "label reads the crossed plane");
                edge_steps.insert((from.clone(), to.clone()));
            }

            // conversely, every unit step between points of the component is
            // an edge
            let mut unit_steps: BTreeSet<(Vec<u32>, Vec<u32>)> = BTreeSet::new();
            for p in &coords {
                for h in 0..p.len() {
                    let mut q = p.clone();
                    q[h] += 1;
                    if point_set.contains(&q) {
                        unit_steps.insert((p.clone(), q));
                    }
                }
            }
            assert_eq!(unit_steps, edge_steps, "{sigma}");
            if *sigma.parts() == [3] {
                assert_eq!(g.edge_count(), 30);
            }
        }
    }

    #[test]
    fn shifted_coordinates_match_transport() {
        // the shift image of the rank-4 row component is the (2,1) component
        // with entries up to 5
        let row = build_component(&word("111"), GraphKind::Hypo, 4).unwrap();
        let hook = build_component(
            &highest_weight_quasi_ribbon(&Composition::new(vec![2, 1]).unwrap()).column_reading(),
            GraphKind::Hypo,
            5,
        )
        .unwrap();
        let mut shifted: Vec<Vec<u32>> = row
            .polytope_coordinates()
            .unwrap()
            .into_iter()
            .map(|c| vec![c[0], c[1], c[2] + 1])
            .collect();
        shifted.sort();
        let mut actual = hook.polytope_coordinates().unwrap();
        actual.sort();
        assert_eq!(actual, shifted);
    }

    #[test]
    fn label_transport_under_extraction() {
        // an edge labelled k in the quasi-array graph maps to an edge labelled
        // by the ribbon entry on diagonal k
        let sigma = Composition::new(vec![2, 2]).unwrap();
        let delta = build_delta(3, 4).unwrap();
        let g = build_component(
            &highest_weight_quasi_ribbon(&sigma).column_reading(),
            GraphKind::Hypo,
            4,
        )
        .unwrap();
        for e in delta.edges() {
            let q = delta.vertices()[e.src].as_array().unwrap();
            let t = pickqrt(q, &sigma).unwrap();
            let ell = t.ribbon_entries()[e.label as usize - 1];
            let src = g.word_index(&t.column_reading()).unwrap();
            let dst_t = pickqrt(delta.vertices()[e.dst].as_array().unwrap(), &sigma).unwrap();
            let dst = g.word_index(&dst_t.column_reading()).unwrap();
            assert_eq!(g.out_labels(src).get(&ell), Some(&dst));
        }
    }

    #[test]
    fn exports_are_stable() {
        let g = hypo("211", 3);
        let json = g.to_json();
        assert_eq!(
            json,
            "{\"kind\":\"hypo\",\"rank\":3,\"vertices\":[\"211\",\"311\",\"312\",\"322\"],\
             \"edges\":[{\"src\":0,\"dst\":1,\"label\":2},{\"src\":1,\"dst\":2,\"label\":1},\
             {\"src\":2,\"dst\":3,\"label\":1}]}"
        );
        let again = hypo("211", 3);
        assert_eq!(again.to_json(), json);
        let parsed = LabeledDigraph::from_json(&json).unwrap();
        assert_eq!(parsed, g);

        let dot = g.to_dot();
        assert!(dot.starts_with("digraph {\n  0 [label=\"211\"];\n"));
        assert!(dot.contains("  0 -> 1 [label=\"2\"];\n"));

        let delta = build_delta(2, 2).unwrap();
        let roundtrip = LabeledDigraph::from_json(&delta.to_json()).unwrap();
        assert_eq!(roundtrip, delta);
    }

    #[test]
    fn empty_rank_one_component() {
        let g = build_component(&word("11"), GraphKind::Hypo, 1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.max_outdegree(), 0);
        assert!(build_component(&word("2"), GraphKind::Hypo, 1).is_err());
    }

    #[test]
    fn parallel_edges_cannot_fake_a_witness() {
        let g1 = LabeledDigraph::from_json(
            "{\"kind\":\"hypo\",\"rank\":3,\"vertices\":[\"1\",\"2\"],\
             \"edges\":[{\"src\":0,\"dst\":1,\"label\":1},{\"src\":0,\"dst\":1,\"label\":2}]}",
        )
        .unwrap();
        let g2 = LabeledDigraph::from_json(
            "{\"kind\":\"hypo\",\"rank\":3,\"vertices\":[\"1\",\"2\"],\
             \"edges\":[{\"src\":0,\"dst\":1,\"label\":1},{\"src\":1,\"dst\":0,\"label\":1}]}",
        )
        .unwrap();
        assert!(verify_unlabelled_map(&g1, &g2, &[0, 1]).is_none());
        assert!(verify_unlabelled_map(&g1, &g2, &[1, 0]).is_none());
        assert!(!matches!(
            unlabelled_isomorphism(&g1, &g2),
            UnlabelledOutcome::Witness(_)
        ));
    }

    #[test]
    fn single_vertex_graphs_are_trivially_isomorphic() {
        let a = build_delta(1, 2).unwrap();
        let b = build_delta(1, 3).unwrap();
        assert!(matches!(
            unlabelled_isomorphism(&a, &b),
            UnlabelledOutcome::Witness(_)
        ));
    }

    #[test]
    fn empty_graph_serialization() {
        let json = "{\"kind\":\"hypo\",\"rank\":3,\"vertices\":[],\"edges\":[]}";
        let g = LabeledDigraph::from_json(json).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.to_json(), json);
    }
}
