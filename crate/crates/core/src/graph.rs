//! Simple undirected graphs, their Laplacians, and cut functionals.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Errors from graph construction and cut evaluation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    /// Graphs must have at least one vertex.
    EmptyGraph,
    /// An edge endpoint is outside `[0, n)`.
    VertexOutOfRange { vertex: usize, n: usize },
    /// Self-loops are not allowed.
    SelfLoop { vertex: usize },
    /// The same unordered pair appeared twice in the input.
    DuplicateEdge { u: usize, v: usize },
    /// A cut was requested for `W = ∅` or `W = V`.
    TrivialCut,
    /// A vertex set was empty where a nonempty one is required.
    EmptyVertexSet,
    /// Vector or matrix dimensions do not match.
    DimensionMismatch { expected: usize, got: usize },
    /// A vertex set's ambient size differs from the graph order.
    AmbientMismatch { expected: usize, got: usize },
    /// A dense matrix failed the Laplacian structure checks.
    NotLaplacian,
    /// A cut vector entry was neither +1 nor -1.
    InvalidCutEntry,
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::EmptyGraph => write!(f, "graph must have at least one vertex"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for order {n}")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
            GraphError::TrivialCut => write!(f, "cut side must be a proper nonempty subset"),
            GraphError::EmptyVertexSet => write!(f, "vertex set must be nonempty"),
            GraphError::DimensionMismatch { expected, got } => {
                write!(f, "dimension mismatch: expected {expected}, got {got}")
            }
            GraphError::AmbientMismatch { expected, got } => {
                write!(f, "ambient size mismatch: expected {expected}, got {got}")
            }
            GraphError::NotLaplacian => write!(f, "matrix is not a valid Laplacian"),
            GraphError::InvalidCutEntry => write!(f, "cut vector entries must be +1 or -1"),
        }
    }
}

impl core::error::Error for GraphError {}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as canonical `(min, max)` pairs, sorted. Duplicate
/// edges in the input are rejected rather than deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        let mut canon: Vec<(usize, usize)> = Vec::new();
        for (a, b) in edges {
            for &v in &[a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            let e = (a.min(b), a.max(b));
            canon.push(e);
        }
        canon.sort_unstable();
        for w in canon.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        Ok(Graph { n, edges: canon })
    }

    /// Graph with no edges.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, core::iter::empty())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical sorted edge list.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    /// Adjacency lists for all vertices.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Dense Laplacian: degrees on the diagonal, -1 at adjacent pairs.
    pub fn laplacian(&self) -> Laplacian {
        let n = self.n;
        let mut data = vec![0.0; n * n];
        for &(a, b) in &self.edges {
            data[a * n + b] = -1.0;
            data[b * n + a] = -1.0;
            data[a * n + a] += 1.0;
            data[b * n + b] += 1.0;
        }
        Laplacian { n, data }
    }

    /// True iff the graph has a single connected component.
    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Number of edges with exactly one endpoint in `w`.
    pub fn cut_cost(&self, w: &VertexSet) -> Result<u64, GraphError> {
        if w.ambient() != self.n {
            return Err(GraphError::AmbientMismatch { expected: self.n, got: w.ambient() });
        }
        if w.len() == 0 || w.len() == self.n {
            return Err(GraphError::TrivialCut);
        }
        let mask = w.mask();
        Ok(self
            .edges
            .iter()
            .filter(|&&(a, b)| mask[a] != mask[b])
            .count() as u64)
    }

    /// Cut edges over the smaller side's size, as an exact reduced ratio.
    pub fn cut_ratio(&self, w: &VertexSet) -> Result<Ratio, GraphError> {
        let cut = self.cut_cost(w)?;
        let small = w.len().min(self.n - w.len()) as u64;
        Ok(Ratio::new(cut, small))
    }

    /// Subgraph induced on `w`, relabeled `0..|w|` in sorted order of the
    /// original labels.
    pub fn induced_subgraph(&self, w: &VertexSet) -> Result<Graph, GraphError> {
        if w.ambient() != self.n {
            return Err(GraphError::AmbientMismatch { expected: self.n, got: w.ambient() });
        }
        if w.len() == 0 {
            return Err(GraphError::EmptyVertexSet);
        }
        let mut relabel = vec![usize::MAX; self.n];
        for (new, &old) in w.members().iter().enumerate() {
            relabel[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(a, b)| relabel[a] != usize::MAX && relabel[b] != usize::MAX)
            .map(|&(a, b)| (relabel[a], relabel[b]));
        Graph::new(w.len(), edges)
    }

    /// Disjoint union; vertex blocks are concatenated in list order.
    pub fn disjoint_union(gs: &[Graph]) -> Result<Graph, GraphError> {
        if gs.is_empty() {
            return Err(GraphError::EmptyGraph);
        }
        let n: usize = gs.iter().map(|g| g.n).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in gs {
            edges.extend(g.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
            offset += g.n;
        }
        Graph::new(n, edges)
    }
}

/// Dense symmetric matrix with zero row sums, stored row-major.
///
/// Covers plain graph Laplacians and composite ones assembled from them;
/// off-diagonal entries need not be restricted to `{0, -1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct Laplacian {
    n: usize,
    data: Vec<f64>,
}

impl Laplacian {
    /// Wraps raw entries after checking symmetry and zero row sums.
    pub fn from_entries(n: usize, data: Vec<f64>) -> Result<Self, GraphError> {
        if data.len() != n * n {
            return Err(GraphError::DimensionMismatch { expected: n * n, got: data.len() });
        }
        for i in 0..n {
            let mut row = 0.0;
            for j in 0..n {
                if data[i * n + j] != data[j * n + i] {
                    return Err(GraphError::NotLaplacian);
                }
                row += data[i * n + j];
            }
            if row.abs() > 1e-9 {
                return Err(GraphError::NotLaplacian);
            }
        }
        Ok(Laplacian { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn entries(&self) -> &[f64] {
        &self.data
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        libm::sqrt(self.data.iter().map(|x| x * x).sum())
    }

    /// Matrix-vector product `L v`.
    pub fn apply(&self, v: &[f64]) -> Result<Vec<f64>, GraphError> {
        if v.len() != self.n {
            return Err(GraphError::DimensionMismatch { expected: self.n, got: v.len() });
        }
        let mut out = vec![0.0; self.n];
        for i in 0..self.n {
            let row = &self.data[i * self.n..(i + 1) * self.n];
            out[i] = row.iter().zip(v).map(|(a, b)| a * b).sum();
        }
        Ok(out)
    }

    /// Bilinear form `uᵀ L v`.
    pub fn quadratic_form(&self, u: &[f64], v: &[f64]) -> Result<f64, GraphError> {
        if u.len() != self.n {
            return Err(GraphError::DimensionMismatch { expected: self.n, got: u.len() });
        }
        let lv = self.apply(v)?;
        Ok(u.iter().zip(&lv).map(|(a, b)| a * b).sum())
    }

    /// Entrywise sum; row sums stay zero.
    pub fn add(&self, other: &Laplacian) -> Result<Laplacian, GraphError> {
        if self.n != other.n {
            return Err(GraphError::DimensionMismatch { expected: self.n, got: other.n });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Laplacian { n: self.n, data })
    }
}

/// Subset of the vertices `0..n`, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet {
    n: usize,
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new<I>(n: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut m: Vec<usize> = members.into_iter().collect();
        m.sort_unstable();
        m.dedup();
        if let Some(&v) = m.last() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(VertexSet { n, members: m })
    }

    /// All of `0..n`.
    pub fn full(n: usize) -> Self {
        VertexSet { n, members: (0..n).collect() }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn complement(&self) -> VertexSet {
        let members = (0..self.n).filter(|&v| !self.contains(v)).collect();
        VertexSet { n: self.n, members }
    }

    /// Boolean membership mask over `0..n`.
    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.n];
        for &v in &self.members {
            m[v] = true;
        }
        m
    }

    /// Indicator difference `1_W - 1_{W^c}` as a ±1 vector.
    pub fn cut_vector(&self) -> CutVector {
        let values = (0..self.n)
            .map(|v| if self.contains(v) { 1 } else { -1 })
            .collect();
        CutVector { values }
    }
}

/// A ±1 valued vector encoding a two-sided cut.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutVector {
    values: Vec<i8>,
}

impl CutVector {
    pub fn new(values: Vec<i8>) -> Result<Self, GraphError> {
        if values.iter().any(|&v| v != 1 && v != -1) {
            return Err(GraphError::InvalidCutEntry);
        }
        Ok(CutVector { values })
    }

    pub fn values(&self) -> &[i8] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The `+1` side as a vertex set.
    pub fn plus_side(&self) -> VertexSet {
        let members: Vec<usize> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(i, _)| i)
            .collect();
        VertexSet { n: self.values.len(), members }
    }

    pub fn as_f64(&self) -> Vec<f64> {
        self.values.iter().map(|&v| v as f64).collect()
    }
}

/// Exact reduced nonnegative rational.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    num: u64,
    den: u64,
}

impl Ratio {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.max(1), den);
        Ratio { num: num / g, den: den / g }
    }

    pub fn numerator(&self) -> u64 {
        self.num
    }

    pub fn denominator(&self) -> u64 {
        self.den
    }

    pub fn to_f64(&self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
