//! Structural invariants: girth, internally disjoint path counts, vertex
//! connectivity, and closed-form hypothesis reporting.

use std::fmt;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::set::VertexSet;

/// Girth: length of the shortest cycle, infinite for acyclic graphs.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum GirthValue {
    Finite(usize),
    Infinite,
}

impl GirthValue {
    /// True when the girth is at least `t` (infinite girth passes every bound).
    #[must_use]
    pub fn at_least(self, t: usize) -> bool {
        match self {
            GirthValue::Finite(v) => v >= t,
            GirthValue::Infinite => true,
        }
    }

    #[must_use]
    pub fn finite(self) -> Option<usize> {
        match self {
            GirthValue::Finite(v) => Some(v),
            GirthValue::Infinite => None,
        }
    }
}

impl PartialOrd for GirthValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GirthValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use GirthValue::{Finite, Infinite};
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for GirthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GirthValue::Finite(v) => write!(f, "{v}"),
            GirthValue::Infinite => write!(f, "inf"),
        }
    }
}

/// Shortest cycle candidate from a BFS rooted at `root`: every non-tree edge
/// (u, v) closes a walk of length dist(u)+dist(v)+1 through the root, which
/// contains a cycle no longer than that; the minimum over all roots is exact
/// because a root on a shortest cycle realizes the girth.
fn girth_from_root(
    g: &Graph,
    root: Vertex,
    dist: &mut [usize],
    parent: &mut [usize],
) -> Option<usize> {
    const UNSEEN: usize = usize::MAX;
    dist.fill(UNSEEN);
    parent.fill(UNSEEN);
    let mut best: Option<usize> = None;
    let mut queue = std::collections::VecDeque::new();
    dist[root] = 0;
    queue.push_back(root);
    while let Some(u) = queue.pop_front() {
        if let Some(b) = best {
            // Deeper vertices can only close longer walks.
            if 2 * dist[u] + 1 >= b {
                break;
            }
        }
        for &v in g.neighbors_slice(u) {
            if dist[v] == UNSEEN {
                dist[v] = dist[u] + 1;
                parent[v] = u;
                queue.push_back(v);
            } else if parent[u] != v {
                let cand = dist[u] + dist[v] + 1;
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            }
        }
    }
    best
}

/// Girth with an explicit parallelism choice.
#[must_use]
pub fn girth_with(g: &Graph, parallel: bool) -> GirthValue {
    let n = g.n();
    let run_root = |root: Vertex| {
        let mut dist = vec![0usize; n];
        let mut parent = vec![0usize; n];
        girth_from_root(g, root, &mut dist, &mut parent)
    };
    let best = if crate::effective_parallel(parallel) {
        #[cfg(feature = "parallel")]
        {
            (0..n).into_par_iter().filter_map(run_root).min()
        }
        #[cfg(not(feature = "parallel"))]
        unreachable!("effective_parallel is false without the parallel feature")
    } else {
        let mut dist = vec![0usize; n];
        let mut parent = vec![0usize; n];
        let mut best: Option<usize> = None;
        for root in 0..n {
            if best == Some(3) {
                break;
            }
            if let Some(c) = girth_from_root(g, root, &mut dist, &mut parent) {
                if best.map_or(true, |b| c < b) {
                    best = Some(c);
                }
            }
        }
        best
    };
    best.map_or(GirthValue::Infinite, GirthValue::Finite)
}

/// Length of the shortest cycle via per-root breadth-first search.
#[must_use]
pub fn girth(g: &Graph) -> GirthValue {
    girth_with(g, true)
}

/// Unit-vertex-capacity flow network: vertex v splits into in-node 2v and
/// out-node 2v+1 joined by a capacity-1 arc; each graph edge becomes a pair
/// of effectively unbounded arcs between out- and in-nodes.
struct SplitNetwork {
    arc_to: Vec<u32>,
    arc_cap: Vec<u32>,
    adj: Vec<Vec<u32>>,
}

impl SplitNetwork {
    fn build(g: &Graph) -> Self {
        let n = g.n();
        let inf = n as u32 + 1;
        let mut net = SplitNetwork {
            arc_to: Vec::new(),
            arc_cap: Vec::new(),
            adj: vec![Vec::new(); 2 * n],
        };
        for v in 0..n {
            net.push_arc(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            net.push_arc(2 * u + 1, 2 * v, inf);
            net.push_arc(2 * v + 1, 2 * u, inf);
        }
        net
    }

    /// Adds a forward arc and its zero-capacity reverse; pairs live at ids
    /// (2i, 2i+1) so `arc ^ 1` is the reverse.
    fn push_arc(&mut self, from: usize, to: usize, cap: u32) {
        let id = self.arc_to.len() as u32;
        self.arc_to.push(to as u32);
        self.arc_cap.push(cap);
        self.adj[from].push(id);
        self.arc_to.push(from as u32);
        self.arc_cap.push(0);
        self.adj[to].push(id + 1);
    }

    /// Max flow from out-node of `x` to in-node of `y`, stopping early once
    /// `cutoff` is reached; caps are copied so the template stays reusable.
    fn max_flow(&self, x: Vertex, y: Vertex, cutoff: usize) -> usize {
        let s = 2 * x + 1;
        let t = 2 * y;
        let mut cap = self.arc_cap.clone();
        let mut flow = 0;
        let mut pred: Vec<u32> = vec![u32::MAX; self.adj.len()];
        let mut queue: std::collections::VecDeque<usize> = std::collections::VecDeque::new();
        while flow < cutoff {
            pred.fill(u32::MAX);
            queue.clear();
            queue.push_back(s);
            let mut reached = false;
            'bfs: while let Some(u) = queue.pop_front() {
                for &a in &self.adj[u] {
                    let v = self.arc_to[a as usize] as usize;
                    if cap[a as usize] > 0 && pred[v] == u32::MAX && v != s {
                        pred[v] = a;
                        if v == t {
                            reached = true;
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !reached {
                break;
            }
            let mut v = t;
            while v != s {
                let a = pred[v] as usize;
                cap[a] -= 1;
                cap[a ^ 1] += 1;
                v = self.arc_to[a ^ 1] as usize;
            }
            flow += 1;
        }
        flow
    }
}

/// Maximum number of internally vertex-disjoint x–y paths (equivalently the
/// minimum x–y vertex separator size, by Menger). Endpoints must be distinct
/// and non-adjacent.
pub fn max_internally_disjoint_paths(g: &Graph, x: Vertex, y: Vertex) -> Result<usize> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: x,
            n: g.n(),
        });
    }
    if y >= g.n() {
        return Err(Error::VertexOutOfRange {
            vertex: y,
            n: g.n(),
        });
    }
    if x == y {
        return Err(Error::IdenticalEndpoints(x));
    }
    if g.has_edge(x, y) {
        return Err(Error::AdjacentEndpoints(x, y));
    }
    let net = SplitNetwork::build(g);
    Ok(net.max_flow(x, y, g.n()))
}

/// True iff every vertex pair is adjacent (complete graphs have no
/// disconnecting set at all).
#[must_use]
pub fn is_complete(g: &Graph) -> bool {
    g.m() == g.n() * (g.n() - 1) / 2
}

/// Vertex connectivity κ(G) with an explicit parallelism choice.
#[must_use]
pub fn vertex_connectivity_with(g: &Graph, parallel: bool) -> usize {
    let n = g.n();
    if is_complete(g) {
        return n - 1;
    }
    if !g.is_connected() {
        return 0;
    }
    // Exact reduction: with u a minimum-degree vertex, every minimum cut S
    // either misses u (then flows from u to the far side see |S|) or contains
    // u; in that case u has a neighbor w outside S on each side, so flows
    // from some neighbor of u cover S. Flow values of non-adjacent pairs
    // never undershoot κ, so the minimum over this family is exact.
    let u = (0..n)
        .min_by_key(|&v| g.degree(v))
        .expect("graph is nonempty");
    let delta = g.degree(u);
    let mut sources = vec![u];
    sources.extend(g.neighbors_slice(u).iter().copied());
    let mut pairs = Vec::new();
    for s in sources {
        for t in 0..n {
            if t != s && !g.has_edge(s, t) {
                pairs.push((s, t));
            }
        }
    }
    let net = SplitNetwork::build(g);
    // Flows are cut off at δ: κ ≤ δ always, so capping each value at δ cannot
    // change the minimum.
    let flow_of = |&(s, t): &(Vertex, Vertex)| net.max_flow(s, t, delta);
    let best = if crate::effective_parallel(parallel) {
        #[cfg(feature = "parallel")]
        {
            pairs.par_iter().map(flow_of).min()
        }
        #[cfg(not(feature = "parallel"))]
        unreachable!("effective_parallel is false without the parallel feature")
    } else {
        pairs.iter().map(flow_of).min()
    };
    best.unwrap_or(n - 1).min(delta)
}

/// Vertex connectivity κ(G): n−1 for complete graphs, 0 for disconnected
/// input, otherwise the minimum vertex-cut size via max-flow.
#[must_use]
pub fn vertex_connectivity(g: &Graph) -> usize {
    vertex_connectivity_with(g, true)
}

/// How a graph measures up against the closed forms' hypotheses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    /// Regularity degree, if regular.
    pub k: Option<usize>,
    pub kappa: usize,
    pub girth: GirthValue,
    /// κ(G) = δ(G).
    pub maximally_connected: bool,
    /// Largest g in 0..=3 with girth ≥ g+4, k ≥ 2, and maximal connectivity.
    pub qualifies_for_g: Option<usize>,
}

#[must_use]
pub fn hypothesis_report(g: &Graph) -> HypothesisReport {
    let k = g.is_k_regular();
    let kappa = vertex_connectivity(g);
    let girth_v = girth(g);
    let maximally_connected = kappa == g.min_degree();
    let qualifies_for_g = if maximally_connected && k.is_some_and(|k| k >= 2) {
        (0..=3).rev().find(|&gg| girth_v.at_least(gg + 4))
    } else {
        None
    };
    HypothesisReport {
        k,
        kappa,
        girth: girth_v,
        maximally_connected,
        qualifies_for_g,
    }
}

/// Minimum vertex count of a k-regular graph with the given finite girth:
/// (girth−2)(k−1)+2, valid for k ≥ 2 and girth ≥ 5; equality holds exactly
/// for cycles (k = 2).
pub fn vertex_count_lower_bound(k: usize, girth: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::HypothesisViolation(format!("need k >= 2, got {k}")));
    }
    if girth < 5 {
        return Err(Error::HypothesisViolation(format!(
            "need girth >= 5, got {girth}"
        )));
    }
    Ok((girth - 2) * (k - 1) + 2)
}

/// Exhaustive minimum x–y separator by subset enumeration; test oracle for
/// the flow implementation on small graphs.
pub fn min_separator_exhaustive(g: &Graph, x: Vertex, y: Vertex) -> Result<usize> {
    if x == y {
        return Err(Error::IdenticalEndpoints(x));
    }
    if g.has_edge(x, y) {
        return Err(Error::AdjacentEndpoints(x, y));
    }
    let n = g.n();
    let others: Vec<Vertex> = (0..n).filter(|&v| v != x && v != y).collect();
    for size in 0..=others.len() {
        let mut found = false;
        crate::extra::for_each_subset(&others, size, |subset| {
            let removed = VertexSet::from_members(n, subset.iter().copied())
                .expect("subset members are vertex ids");
            let comps = g.components(&removed).expect("set matches graph");
            let separated = comps
                .iter()
                .find(|c| c.contains(x))
                .is_some_and(|cx| !cx.contains(y));
            if separated {
                found = true;
            }
            !found
        });
        if found {
            return Ok(size);
        }
    }
    unreachable!("removing all other vertices always separates non-adjacent x and y")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path, Graph};
    use crate::named::{heawood, mcgee, petersen};

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle(7).unwrap()), GirthValue::Finite(7));
        assert_eq!(girth(&path(5).unwrap()), GirthValue::Infinite);
        assert_eq!(girth(&petersen()), GirthValue::Finite(5));
        assert_eq!(girth(&heawood()), GirthValue::Finite(6));
        assert_eq!(girth(&mcgee()), GirthValue::Finite(7));
        assert_eq!(girth(&complete(4).unwrap()), GirthValue::Finite(3));
    }

    #[test]
    fn girth_seq_matches_parallel() {
        for g in [cycle(9).unwrap(), petersen(), heawood(), mcgee()] {
            assert_eq!(girth_with(&g, false), girth_with(&g, true));
        }
    }

    #[test]
    fn girth_ordering() {
        assert!(GirthValue::Finite(5) < GirthValue::Finite(6));
        assert!(GirthValue::Finite(100) < GirthValue::Infinite);
        assert!(GirthValue::Infinite.at_least(7));
        assert!(!GirthValue::Finite(5).at_least(6));
    }

    #[test]
    fn disjoint_paths_examples() {
        let c6 = cycle(6).unwrap();
        assert_eq!(max_internally_disjoint_paths(&c6, 0, 3).unwrap(), 2);
        let p4 = path(4).unwrap();
        assert_eq!(max_internally_disjoint_paths(&p4, 0, 3).unwrap(), 1);
        let k4 = complete(4).unwrap();
        assert!(matches!(
            max_internally_disjoint_paths(&k4, 0, 1),
            Err(Error::AdjacentEndpoints(0, 1))
        ));
        assert!(matches!(
            max_internally_disjoint_paths(&k4, 2, 2),
            Err(Error::IdenticalEndpoints(2))
        ));
    }

    #[test]
    fn petersen_disjoint_paths() {
        let p = petersen();
        assert_eq!(max_internally_disjoint_paths(&p, 0, 7).unwrap(), 3);
    }

    #[test]
    fn connectivity_examples() {
        assert_eq!(vertex_connectivity(&complete(4).unwrap()), 3);
        assert_eq!(vertex_connectivity(&cycle(9).unwrap()), 2);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&heawood()), 3);
        assert_eq!(vertex_connectivity(&mcgee()), 3);
        assert_eq!(vertex_connectivity(&path(4).unwrap()), 1);
        let disconnected = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(vertex_connectivity(&disconnected), 0);
        assert_eq!(vertex_connectivity(&complete(1).unwrap()), 0);
    }

    #[test]
    fn connectivity_seq_matches_parallel() {
        for g in [cycle(8).unwrap(), petersen(), heawood()] {
            assert_eq!(
                vertex_connectivity_with(&g, false),
                vertex_connectivity_with(&g, true)
            );
        }
    }

    #[test]
    fn flow_matches_exhaustive_separator_on_small_graphs() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..25 {
            let g = crate::graph::random_connected_graph(8, 0.35, &mut rng);
            for x in 0..8 {
                for y in (x + 1)..8 {
                    if g.has_edge(x, y) {
                        continue;
                    }
                    assert_eq!(
                        max_internally_disjoint_paths(&g, x, y).unwrap(),
                        min_separator_exhaustive(&g, x, y).unwrap(),
                        "graph {:?} pair ({x},{y})",
                        g
                    );
                }
            }
        }
    }

    #[test]
    fn reports() {
        let r = hypothesis_report(&cycle(5).unwrap());
        assert_eq!(r.k, Some(2));
        assert_eq!(r.kappa, 2);
        assert_eq!(r.girth, GirthValue::Finite(5));
        assert!(r.maximally_connected);
        assert_eq!(r.qualifies_for_g, Some(1));

        assert_eq!(
            hypothesis_report(&cycle(7).unwrap()).qualifies_for_g,
            Some(3)
        );
        let m = hypothesis_report(&mcgee());
        assert_eq!((m.k, m.kappa, m.girth), (Some(3), 3, GirthValue::Finite(7)));
        assert_eq!(m.qualifies_for_g, Some(3));

        let p = hypothesis_report(&path(4).unwrap());
        assert_eq!(p.qualifies_for_g, None);
        assert_eq!(
            hypothesis_report(&complete(5).unwrap()).qualifies_for_g,
            None
        );
    }

    #[test]
    fn count_bound() {
        assert_eq!(vertex_count_lower_bound(2, 5).unwrap(), 5);
        assert_eq!(vertex_count_lower_bound(3, 5).unwrap(), 8);
        assert_eq!(vertex_count_lower_bound(3, 7).unwrap(), 12);
        assert!(vertex_count_lower_bound(1, 5).is_err());
        assert!(vertex_count_lower_bound(3, 4).is_err());
    }
}
