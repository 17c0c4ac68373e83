//! Simple undirected graph over dense integer vertex ids.

use rand::Rng;

use crate::error::{Error, Result};
use crate::set::VertexSet;

pub type Vertex = usize;

/// Immutable simple undirected graph; vertices are `0..n`, adjacency lists
/// are sorted, loop-free, and symmetric by construction.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<Vertex>>,
    m: usize,
    name: Option<String>,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting out-of-range endpoints,
    /// self-loops, and duplicate edges.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if adj[u].contains(&v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            adj,
            m,
            name: None,
        })
    }

    #[must_use]
    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    #[must_use]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Edge count.
    #[must_use]
    pub fn m(&self) -> usize {
        self.m
    }

    #[must_use]
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Degree of `u`; panics on out-of-range ids (use `neighbors` for the
    /// checked variant).
    #[must_use]
    pub fn degree(&self, u: Vertex) -> usize {
        self.adj[u].len()
    }

    /// Sorted neighbor slice of `u`; panics on out-of-range ids.
    #[must_use]
    pub fn neighbors_slice(&self, u: Vertex) -> &[Vertex] {
        &self.adj[u]
    }

    /// N(u) as a set.
    pub fn neighbors(&self, u: Vertex) -> Result<VertexSet> {
        self.check_vertex(u)?;
        VertexSet::from_members(self.n, self.adj[u].iter().copied())
    }

    #[must_use]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as (u, v) with u < v, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// N(A): vertices outside `a` adjacent to `a`.
    pub fn open_boundary(&self, a: &VertexSet) -> Result<VertexSet> {
        a.check_host(self.n)?;
        let mut out = VertexSet::new(self.n);
        for u in a.iter() {
            for &v in &self.adj[u] {
                out.insert(v);
            }
        }
        out.difference_with(a);
        Ok(out)
    }

    /// N[A] = N(A) ∪ A.
    pub fn closed_neighborhood(&self, a: &VertexSet) -> Result<VertexSet> {
        a.check_host(self.n)?;
        let mut out = a.clone();
        for u in a.iter() {
            for &v in &self.adj[u] {
                out.insert(v);
            }
        }
        Ok(out)
    }

    /// Connected components of G − removed, ordered by smallest member id.
    pub fn components(&self, removed: &VertexSet) -> Result<Vec<VertexSet>> {
        removed.check_host(self.n)?;
        let mut seen = removed.clone();
        let mut out = Vec::new();
        let mut queue = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            queue.clear();
            queue.push(start);
            seen.insert(start);
            comp.insert(start);
            while let Some(u) = queue.pop() {
                for &v in &self.adj[u] {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        queue.push(v);
                    }
                }
            }
            out.push(comp);
        }
        Ok(out)
    }

    #[must_use]
    pub fn is_connected(&self) -> bool {
        self.components(&VertexSet::new(self.n))
            .map(|c| c.len() == 1)
            .unwrap_or(false)
    }

    /// True when the subgraph induced by `a` is connected (empty sets count
    /// as disconnected, singletons as connected).
    pub fn induced_connected(&self, a: &VertexSet) -> Result<bool> {
        a.check_host(self.n)?;
        let Some(start) = a.min_member() else {
            return Ok(false);
        };
        let target = a.len();
        let mut seen = VertexSet::new(self.n);
        let mut queue = vec![start];
        seen.insert(start);
        let mut reached = 1;
        while let Some(u) = queue.pop() {
            for &v in &self.adj[u] {
                if a.contains(v) && !seen.contains(v) {
                    seen.insert(v);
                    reached += 1;
                    queue.push(v);
                }
            }
        }
        Ok(reached == target)
    }

    /// Common degree if the graph is regular.
    #[must_use]
    pub fn is_k_regular(&self) -> Option<usize> {
        let k = self.adj[0].len();
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    #[must_use]
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Per-vertex neighborhoods as dense bitsets; built on demand by the
    /// search algorithms (kept off the struct so huge sparse graphs stay
    /// cheap to hold).
    #[must_use]
    pub fn adjacency_bitsets(&self) -> Vec<VertexSet> {
        (0..self.n)
            .map(|u| {
                let mut row = VertexSet::new(self.n);
                for &v in &self.adj[u] {
                    row.insert(v);
                }
                row
            })
            .collect()
    }

    /// Re-checks the structural invariants (symmetry, no loops, sortedness,
    /// no duplicates). Construction enforces them; tests call this to verify.
    pub fn validate(&self) -> Result<()> {
        let mut m = 0;
        for u in 0..self.n {
            let list = &self.adj[u];
            for w in list.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
                }
            }
            for &v in list {
                if v == u {
                    return Err(Error::SelfLoop(u));
                }
                self.check_vertex(v)?;
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
                }
            }
            m += list.len();
        }
        debug_assert_eq!(m, 2 * self.m);
        Ok(())
    }
}

/// Cycle C_m, vertices 0..m in ring order; m ≥ 3.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(Error::BadFamilyParameter(format!(
            "cycle needs m >= 3, got {m}"
        )));
    }
    let edges = (0..m).map(|i| (i, (i + 1) % m));
    Ok(Graph::from_edges(m, edges)?.with_name(format!("cycle:{m}")))
}

/// Path P_m on m vertices 0..m in line order; m ≥ 1.
pub fn path(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::BadFamilyParameter("path needs m >= 1".into()));
    }
    let edges = (1..m).map(|i| (i - 1, i));
    Ok(Graph::from_edges(m, edges)?.with_name(format!("path:{m}")))
}

/// Complete graph K_m; m ≥ 1.
pub fn complete(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(Error::BadFamilyParameter("complete needs m >= 1".into()));
    }
    let edges = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v)));
    Ok(Graph::from_edges(m, edges)?.with_name(format!("complete:{m}")))
}

/// Random connected G(n, p) graph, resampled until connected. Used by the
/// property-test corpus; determinism comes from the caller's seeded RNG.
pub fn random_connected_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    assert!(n >= 1, "need at least one vertex");
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::from_edges(n, edges).expect("generated edges are in range and simple");
        if g.is_connected() {
            return g;
        }
    }
}
