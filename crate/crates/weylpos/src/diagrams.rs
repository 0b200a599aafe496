//! Graphs, positive harmonic functions, and simply-laced Dynkin diagrams.
//!
//! A connected graph carrying a positive integer function `h` with
//! `2 h(i) = sum of h over the neighbors of i` and `min h = 1` is an affine
//! extension of a simply-laced Dynkin diagram; deleting a vertex with
//! `h = 1` recovers the diagram itself. [`find_harmonic`] solves for `h`
//! exactly, [`delete_low_vertex`] performs the deletion, and [`cartan`]
//! emits the Cartan matrix of a validated diagram.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A finite simple graph with opaque string vertex identifiers.
///
/// Edges are unordered; self-loops and parallel edges are rejected at
/// construction. Matrix orderings downstream always follow the vertex
/// input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    index: HashMap<String, usize>,
    edges: BTreeSet<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<(String, String)>,
}

impl Graph {
    pub fn new<S: Into<String>>(vertices: Vec<S>, edges: &[(&str, &str)]) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            if index.insert(v.clone(), k).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{v}`")));
            }
        }
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            let ia = *index
                .get(*a)
                .ok_or_else(|| Error::UnknownVertex(a.to_string()))?;
            let ib = *index
                .get(*b)
                .ok_or_else(|| Error::UnknownVertex(b.to_string()))?;
            if ia == ib {
                return Err(Error::InvalidGraph(format!("self-loop at `{a}`")));
            }
            set.insert((ia.min(ib), ia.max(ib)));
        }
        Ok(Graph {
            vertices,
            index,
            edges: set,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        for &(a, b) in &self.edges {
            if a == v {
                out.push(b);
            } else if b == v {
                out.push(a);
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).len()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return false;
        }
        self.component_of(0).len() == self.vertices.len()
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertices.len()];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut out = vec![start];
        while let Some(v) = queue.pop_front() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components, each a sorted list of vertex indices.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.vertices.len()];
        let mut out = Vec::new();
        for v in 0..self.vertices.len() {
            if !seen[v] {
                let comp = self.component_of(v);
                for &w in &comp {
                    seen[w] = true;
                }
                out.push(comp);
            }
        }
        out
    }

    /// Induced subgraph on all vertices except `drop`.
    pub fn without_vertex(&self, drop: usize) -> Graph {
        let vertices: Vec<String> = self
            .vertices
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != drop)
            .map(|(_, v)| v.clone())
            .collect();
        let mut index = HashMap::new();
        for (k, v) in vertices.iter().enumerate() {
            index.insert(v.clone(), k);
        }
        let remap = |old: usize| -> usize {
            if old < drop {
                old
            } else {
                old - 1
            }
        };
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| *a != drop && *b != drop)
            .map(|&(a, b)| (remap(a), remap(b)))
            .collect();
        Graph {
            vertices,
            index,
            edges,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let edges: Vec<(String, String)> = self
            .edges
            .iter()
            .map(|&(a, b)| (self.vertices[a].clone(), self.vertices[b].clone()))
            .collect();
        serde_json::to_value(GraphJson {
            vertices: self.vertices.clone(),
            edges,
        })
        .expect("graph serialization cannot fail")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let raw: GraphJson =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let edges: Vec<(&str, &str)> = raw
            .edges
            .iter()
            .map(|(a, b)| (a.as_str(), b.as_str()))
            .collect();
        Graph::new(raw.vertices, &edges)
    }
}

/// A positive integer harmonic function on a connected graph, normalized
/// so that its minimum value is 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HarmonicFunction {
    values: Vec<u64>,
}

impl HarmonicFunction {
    pub fn value(&self, v: usize) -> u64 {
        self.values[v]
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn to_json(&self, g: &Graph) -> serde_json::Value {
        let map: BTreeMap<String, u64> = g
            .vertices()
            .iter()
            .cloned()
            .zip(self.values.iter().copied())
            .collect();
        serde_json::to_value(map).expect("map serialization cannot fail")
    }
}

/// Cartan matrix of a simply-laced diagram: 2 on the diagonal, -1 for an
/// edge, 0 otherwise, rows and columns in vertex input order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    pub fn entries(&self) -> &Vec<Vec<i64>> {
        &self.entries
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }
}

/// Solves `2 h(i) = sum of h(j) over neighbors j` for a positive integer
/// vector, normalized to minimum value 1. Returns `None` when no positive
/// solution exists. Empty or disconnected input is an error.
pub fn find_harmonic(g: &Graph) -> Result<Option<HarmonicFunction>> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let n = g.vertex_count();
    // Kernel of 2*Id - adjacency over the rationals.
    let mut m: Vec<Vec<BigRational>> = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        m[i][i] = BigRational::from_integer(BigInt::from(2));
        for j in g.neighbors(i) {
            m[i][j] = -BigRational::one();
        }
    }
    let kernel = rational_kernel(&mut m, n);
    if kernel.len() != 1 {
        // With more than one kernel vector, 2 is not the Perron eigenvalue
        // and no positive solution exists.
        return Ok(None);
    }
    let basis = &kernel[0];
    // Clear denominators, divide by content, fix sign.
    let mut denom_lcm = BigInt::one();
    for x in basis {
        denom_lcm = denom_lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = basis
        .iter()
        .map(|x| (x * BigRational::from_integer(denom_lcm.clone())).to_integer())
        .collect();
    let mut content = BigInt::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return Ok(None);
    }
    let sign = match ints.iter().find(|x| !x.is_zero()) {
        Some(x) if x.is_negative() => -BigInt::one(),
        _ => BigInt::one(),
    };
    let scaled: Vec<BigInt> = ints.iter().map(|x| x / (&content * &sign)).collect();
    if scaled.iter().any(|x| !x.is_positive()) {
        return Ok(None);
    }
    let values: Vec<u64> = scaled
        .iter()
        .map(|x| u64::try_from(x).expect("harmonic values fit in u64"))
        .collect();
    if values.iter().min() != Some(&1) {
        return Ok(None);
    }
    // Exact harmonicity re-check in integer arithmetic.
    for i in 0..n {
        let s: u64 = g.neighbors(i).iter().map(|&j| values[j]).sum();
        if 2 * values[i] != s {
            return Ok(None);
        }
    }
    Ok(Some(HarmonicFunction { values }))
}

/// Kernel basis of an n x n rational matrix, via row reduction.
fn rational_kernel(m: &mut [Vec<BigRational>], n: usize) -> Vec<Vec<BigRational>> {
    let mut pivot_col_of_row = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..n).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let pivot = m[row][col].clone();
        for x in m[row].iter_mut() {
            *x /= pivot.clone();
        }
        for r in 0..n {
            if r != row && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in 0..n {
                    let sub = &f * &m[row][c];
                    m[r][c] -= sub;
                }
            }
        }
        pivot_col_of_row.push(col);
        row += 1;
        if row == n {
            break;
        }
    }
    let pivot_cols: BTreeSet<usize> = pivot_col_of_row.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![BigRational::zero(); n];
        v[free] = BigRational::one();
        for (r, &pc) in pivot_col_of_row.iter().enumerate() {
            v[pc] = -m[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Removes a vertex with harmonic value 1, yielding the induced subgraph.
pub fn delete_low_vertex(g: &Graph, h: &HarmonicFunction, v: usize) -> Result<Graph> {
    if v >= g.vertex_count() {
        return Err(Error::UnknownVertex(format!("#{v}")));
    }
    if h.value(v) != 1 {
        return Err(Error::HarmonicValueNotOne(g.vertices()[v].clone()));
    }
    Ok(g.without_vertex(v))
}

/// Simply-laced Dynkin diagram shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AdeType {
    A(usize),
    D(usize),
    E(usize),
}

impl AdeType {
    pub fn rank(self) -> usize {
        match self {
            AdeType::A(n) | AdeType::D(n) | AdeType::E(n) => n,
        }
    }

    pub fn name(self) -> String {
        match self {
            AdeType::A(n) => format!("A{n}"),
            AdeType::D(n) => format!("D{n}"),
            AdeType::E(n) => format!("E{n}"),
        }
    }
}

/// Classifies a connected graph as an ADE diagram, or explains why it is not
/// one. Arm lengths are measured from the unique branch vertex.
pub fn classify_component(g: &Graph, comp: &[usize]) -> Result<AdeType> {
    let edges_in: Vec<(usize, usize)> = comp
        .iter()
        .flat_map(|&a| {
            comp.iter()
                .filter(move |&&b| b > a && g.has_edge(a, b))
                .map(move |&b| (a, b))
        })
        .collect();
    let n = comp.len();
    if edges_in.len() != n - 1 {
        return Err(Error::NotSimplyLaced("component contains a cycle".into()));
    }
    let degree = |v: usize| comp.iter().filter(|&&w| g.has_edge(v, w)).count();
    let branches: Vec<usize> = comp.iter().copied().filter(|&v| degree(v) >= 3).collect();
    match branches.len() {
        0 => Ok(AdeType::A(n)),
        1 => {
            let b = branches[0];
            if degree(b) != 3 {
                return Err(Error::NotSimplyLaced(format!(
                    "branch vertex `{}` has degree {}",
                    g.vertices()[b],
                    degree(b)
                )));
            }
            let mut arms: Vec<usize> = g
                .neighbors(b)
                .into_iter()
                .map(|start| {
                    let mut len = 1;
                    let mut prev = b;
                    let mut cur = start;
                    loop {
                        let next: Vec<usize> =
                            g.neighbors(cur).into_iter().filter(|&w| w != prev).collect();
                        match next.as_slice() {
                            [] => break,
                            [w] => {
                                prev = cur;
                                cur = *w;
                                len += 1;
                            }
                            _ => unreachable!("second branch vertex already excluded"),
                        }
                    }
                    len
                })
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => Ok(AdeType::D(n)),
                [1, 2, 2] => Ok(AdeType::E(6)),
                [1, 2, 3] => Ok(AdeType::E(7)),
                [1, 2, 4] => Ok(AdeType::E(8)),
                other => Err(Error::NotSimplyLaced(format!(
                    "arm lengths {other:?} are not of ADE shape"
                ))),
            }
        }
        _ => Err(Error::NotSimplyLaced("more than one branch vertex".into())),
    }
}

/// Cartan matrix of a graph all of whose components are ADE diagrams.
pub fn cartan(g: &Graph) -> Result<CartanMatrix> {
    if g.vertex_count() == 0 {
        return Err(Error::EmptyGraph);
    }
    for comp in g.components() {
        classify_component(g, &comp)?;
    }
    let n = g.vertex_count();
    let mut entries = vec![vec![0i64; n]; n];
    for i in 0..n {
        entries[i][i] = 2;
        for j in 0..n {
            if i != j && g.has_edge(i, j) {
                entries[i][j] = -1;
            }
        }
    }
    Ok(CartanMatrix { entries })
}

/// A validated diagram: every connected component is of ADE type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    graph: Graph,
    cartan: CartanMatrix,
    components: Vec<(AdeType, Vec<usize>)>,
}

impl Diagram {
    pub fn new(graph: Graph) -> Result<Self> {
        let cartan = cartan(&graph)?;
        let components = graph
            .components()
            .into_iter()
            .map(|comp| classify_component(&graph, &comp).map(|t| (t, comp)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Diagram {
            graph,
            cartan,
            components,
        })
    }

    /// Builds a named diagram: `A1`..`A8`, `D4`..`D8`, `E6`, `E7`, `E8`,
    /// or products joined by `x` such as `A1xA1` or `A2xA1`.
    pub fn named(name: &str) -> Result<Self> {
        let parts: Vec<&str> = name.split('x').collect();
        let mut types = Vec::new();
        for p in parts {
            types.push(parse_type_name(p)?);
        }
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        for (c, t) in types.iter().enumerate() {
            let g = ade_graph(*t);
            let prefix = if types.len() == 1 {
                String::new()
            } else {
                format!("{}.", (b'a' + c as u8) as char)
            };
            let names: Vec<String> = g.vertices().iter().map(|v| format!("{prefix}{v}")).collect();
            for &(a, b) in &g.edges {
                edges.push((names[a].clone(), names[b].clone()));
            }
            vertices.extend(names);
        }
        let edge_refs: Vec<(&str, &str)> =
            edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
        Diagram::new(Graph::new(vertices, &edge_refs)?)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn components(&self) -> &[(AdeType, Vec<usize>)] {
        &self.components
    }

    /// The vertex order of the underlying path when the whole diagram is a
    /// single type-A component; used by the matrix realizations.
    pub fn path_order(&self) -> Option<Vec<usize>> {
        if self.components.len() != 1 {
            return None;
        }
        let (t, comp) = &self.components[0];
        if !matches!(t, AdeType::A(_)) {
            return None;
        }
        if comp.len() == 1 {
            return Some(comp.clone());
        }
        let ends: Vec<usize> = comp
            .iter()
            .copied()
            .filter(|&v| self.graph.degree(v) == 1)
            .collect();
        let start = *ends.iter().min()?;
        let mut order = vec![start];
        let mut prev = usize::MAX;
        let mut cur = start;
        while order.len() < comp.len() {
            let next = self
                .graph
                .neighbors(cur)
                .into_iter()
                .find(|&w| w != prev)?;
            order.push(next);
            prev = cur;
            cur = next;
        }
        Some(order)
    }
}

fn parse_type_name(p: &str) -> Result<AdeType> {
    let bad = || Error::Parse(format!("unknown diagram name `{p}`"));
    let (letter, num) = p.split_at(1);
    let n: usize = num.parse().map_err(|_| bad())?;
    match (letter, n) {
        ("A" | "a", 1..=8) => Ok(AdeType::A(n)),
        ("D" | "d", 4..=8) => Ok(AdeType::D(n)),
        ("E" | "e", 6..=8) => Ok(AdeType::E(n)),
        _ => Err(bad()),
    }
}

/// The standard graph of an ADE type, vertices named "1".."n".
///
/// A(n) is the path 1--2--...--n; D(n) is the path 1--...--(n-2) with both
/// n-1 and n attached to n-2; E(n) is the path 1--...--(n-1) with n attached
/// to vertex 3.
pub fn ade_graph(t: AdeType) -> Graph {
    let n = t.rank();
    let names: Vec<String> = (1..=n).map(|k| k.to_string()).collect();
    let mut edges: Vec<(String, String)> = Vec::new();
    let mut edge = |a: usize, b: usize| edges.push((a.to_string(), b.to_string()));
    match t {
        AdeType::A(_) => {
            for k in 1..n {
                edge(k, k + 1);
            }
        }
        AdeType::D(_) => {
            for k in 1..n - 2 {
                edge(k, k + 1);
            }
            edge(n - 2, n - 1);
            edge(n - 2, n);
        }
        AdeType::E(_) => {
            for k in 1..n - 1 {
                edge(k, k + 1);
            }
            edge(3, n);
        }
    }
    let refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::new(names, &refs).expect("ADE graphs are valid by construction")
}

/// Affine extension of an ADE diagram: one extra vertex "0" attached so that
/// a positive harmonic function exists. A(1) has no simple affine graph and
/// is rejected.
pub fn affine_graph(t: AdeType) -> Result<Graph> {
    let n = t.rank();
    match t {
        AdeType::A(1) => Err(Error::Capability(
            "the affine extension of A1 is a doubled edge, not a simple graph".into(),
        )),
        AdeType::A(_) => {
            // Cycle on n+1 vertices.
            let names: Vec<String> = std::iter::once("0".to_string())
                .chain((1..=n).map(|k| k.to_string()))
                .collect();
            let mut edges: Vec<(String, String)> = (1..n)
                .map(|k| (k.to_string(), (k + 1).to_string()))
                .collect();
            edges.push(("0".to_string(), "1".to_string()));
            edges.push(("0".to_string(), n.to_string()));
            let refs: Vec<(&str, &str)> =
                edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
            Graph::new(names, &refs)
        }
        AdeType::D(_) => attach_affine(t, "2"),
        AdeType::E(6) => attach_affine(t, "6"),
        AdeType::E(7) => attach_affine(t, "1"),
        AdeType::E(8) => attach_affine(t, "7"),
        AdeType::E(_) => unreachable!("only E6, E7, E8 exist"),
    }
}

fn attach_affine(t: AdeType, to: &str) -> Result<Graph> {
    let g = ade_graph(t);
    let mut names: Vec<String> = vec!["0".to_string()];
    names.extend(g.vertices().iter().cloned());
    let mut edges: Vec<(String, String)> = g
        .edges
        .iter()
        .map(|&(a, b)| (g.vertices()[a].clone(), g.vertices()[b].clone()))
        .collect();
    edges.push(("0".to_string(), to.to_string()));
    let refs: Vec<(&str, &str)> = edges.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    Graph::new(names, &refs)
}

/// All ADE types of rank at most `max_rank`.
pub fn ade_catalog(max_rank: usize) -> Vec<AdeType> {
    let mut out = Vec::new();
    for n in 1..=max_rank {
        out.push(AdeType::A(n));
    }
    for n in 4..=max_rank.min(8) {
        if n >= 4 {
            out.push(AdeType::D(n));
        }
    }
    for n in 6..=max_rank.min(8) {
        out.push(AdeType::E(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        affine_graph(AdeType::A(n - 1)).unwrap()
    }

    #[test]
    fn harmonic_on_cycles_is_constant_one() {
        for n in 3..=9 {
            let g = cycle(n);
            let h = find_harmonic(&g).unwrap().expect("cycle carries h = 1");
            assert!(h.values().iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn harmonic_on_nine_vertex_chain_with_branch() {
        // Chain 1--2--...--8 with 9 attached to 6.
        let g = Graph::new(
            (1..=9).map(|k| k.to_string()).collect::<Vec<_>>(),
            &[
                ("1", "2"),
                ("2", "3"),
                ("3", "4"),
                ("4", "5"),
                ("5", "6"),
                ("6", "7"),
                ("7", "8"),
                ("6", "9"),
            ],
        )
        .unwrap();
        let h = find_harmonic(&g).unwrap().expect("affine E8 shape");
        assert_eq!(h.values(), &[1, 2, 3, 4, 5, 6, 4, 2, 3]);
    }

    #[test]
    fn harmonic_absent_on_single_edge() {
        let g = Graph::new(vec!["i", "j"], &[("i", "j")]).unwrap();
        assert_eq!(find_harmonic(&g).unwrap(), None);
    }

    #[test]
    fn harmonic_rejects_bad_input() {
        let empty = Graph::new(Vec::<String>::new(), &[]).unwrap();
        assert!(matches!(find_harmonic(&empty), Err(Error::EmptyGraph)));
        let disc = Graph::new(vec!["a", "b", "c"], &[("a", "b")]).unwrap();
        assert!(matches!(find_harmonic(&disc), Err(Error::Disconnected)));
    }

    #[test]
    fn delete_low_vertex_on_triangle_gives_a2() {
        let g = cycle(3);
        let h = find_harmonic(&g).unwrap().unwrap();
        let reduced = delete_low_vertex(&g, &h, 0).unwrap();
        assert_eq!(classify_component(&reduced, &[0, 1]).unwrap(), AdeType::A(2));
    }

    #[test]
    fn delete_low_vertex_recovers_e8_labels() {
        let g = affine_graph(AdeType::E(8)).unwrap();
        let h = find_harmonic(&g).unwrap().unwrap();
        let zero = g.vertex_index("0").unwrap();
        assert_eq!(h.value(zero), 1);
        let reduced = delete_low_vertex(&g, &h, zero).unwrap();
        let comp: Vec<usize> = (0..reduced.vertex_count()).collect();
        assert_eq!(classify_component(&reduced, &comp).unwrap(), AdeType::E(8));
        // Restriction of h, with labels sorted by value along the chain.
        let mut rest: Vec<u64> = (0..reduced.vertex_count())
            .map(|v| {
                let name = &reduced.vertices()[v];
                h.value(g.vertex_index(name).unwrap())
            })
            .collect();
        rest.sort_unstable();
        assert_eq!(rest, vec![2, 2, 3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn delete_requires_value_one() {
        let g = affine_graph(AdeType::E(8)).unwrap();
        let h = find_harmonic(&g).unwrap().unwrap();
        let six = g.vertex_index("3").unwrap();
        assert!(delete_low_vertex(&g, &h, six).is_err());
    }

    #[test]
    fn cycle_minus_vertex_is_path() {
        for n in 3..=8 {
            let g = cycle(n);
            let h = find_harmonic(&g).unwrap().unwrap();
            let p = delete_low_vertex(&g, &h, 0).unwrap();
            let comp: Vec<usize> = (0..n - 1).collect();
            assert_eq!(classify_component(&p, &comp).unwrap(), AdeType::A(n - 1));
        }
    }

    #[test]
    fn cartan_examples() {
        let single = Graph::new(vec!["i"], &[]).unwrap();
        assert_eq!(cartan(&single).unwrap().entries(), &vec![vec![2]]);

        let path = Graph::new(vec!["i", "j"], &[("i", "j")]).unwrap();
        assert_eq!(
            cartan(&path).unwrap().entries(),
            &vec![vec![2, -1], vec![-1, 2]]
        );

        let pair = Graph::new(vec!["i", "j"], &[]).unwrap();
        assert_eq!(
            cartan(&pair).unwrap().entries(),
            &vec![vec![2, 0], vec![0, 2]]
        );
    }

    #[test]
    fn cartan_rejects_non_ade() {
        assert!(cartan(&cycle(4)).is_err());
        // Star with four arms.
        let g = Graph::new(
            vec!["c", "1", "2", "3", "4"],
            &[("c", "1"), ("c", "2"), ("c", "3"), ("c", "4")],
        )
        .unwrap();
        assert!(cartan(&g).is_err());
    }

    #[test]
    fn affine_extension_carries_harmonic_for_all_small_ranks() {
        for t in ade_catalog(8) {
            if t == AdeType::A(1) {
                continue;
            }
            let g = affine_graph(t).unwrap();
            let h = find_harmonic(&g).unwrap();
            assert!(h.is_some(), "affine {} must carry h", t.name());
        }
    }

    #[test]
    fn named_diagrams() {
        assert_eq!(Diagram::named("A2").unwrap().rank(), 2);
        assert_eq!(Diagram::named("E8").unwrap().rank(), 8);
        let prod = Diagram::named("A1xA1").unwrap();
        assert_eq!(prod.rank(), 2);
        assert_eq!(prod.components().len(), 2);
        assert!(Diagram::named("B2").is_err());
    }

    #[test]
    fn graph_json_round_trip() {
        let g = ade_graph(AdeType::D(4));
        let j = g.to_json();
        assert_eq!(Graph::from_json(&j).unwrap(), g);
    }
}
