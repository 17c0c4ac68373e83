//! Exact g-extra connectivity by two independent methods — a plain
//! subset-enumeration oracle and a connected-component branch-and-bound —
//! plus cut-certificate validation and builders for the structured cuts
//! whose sizes match the closed-form minimum terms.
//!
//! # Why enumerating components suffices
//!
//! The branch-and-bound enumerates connected candidate components `A`
//! instead of cuts. For a connected set `A` define the enriched candidate
//! cut
//!
//! ```text
//! S(A) = N(A) ∪ { components of G − N[A] with at most g vertices }
//! ```
//!
//! When at least one component of `G − N[A]` keeps more than `g` vertices,
//! the components of `G − S(A)` are exactly `A` together with those
//! survivors, so `S(A)` is a g-extra cut whenever `|A| > g`.
//!
//! Completeness: let `S` be a minimum g-extra cut and `A` a smallest
//! component of `G − S`. Then `N(A) ⊆ S`, and every component of `G − S`
//! other than `A` is connected inside `G − N[A]`, so each component of
//! `G − N[A]` either contains a whole surviving component (hence has more
//! than `g` vertices) or consists purely of vertices of `S ∖ N(A)`. The
//! absorbed components all have at most `g` vertices, hence contain no
//! surviving component, hence lie inside `S ∖ N(A)`; therefore
//! `|S(A)| ≤ |S|`, and since `S(A)` is itself a valid g-extra cut,
//! `|S(A)| = κ_g`. Visiting every connected `A` up to the size cap
//! `⌊(n − κ)/2⌋` (a smallest component fits inside half of what survives
//! a cut of size ≥ κ) therefore finds the exact value.
//!
//! Plain `N(A)` alone would not do for g ≥ 1: a minimum cut may strand a
//! small component that only the enriched candidate absorbs. The unit
//! test `enriched_candidate_needed` keeps a 7-vertex witness of this.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::invariants::{is_complete, vertex_connectivity_with};
use crate::product::{Axis, ProductGraph};
use crate::set::VertexSet;

/// A candidate cut together with the evidence for (or against) it being a
/// g-extra cut: the component sizes of `G − S` and the validity verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutCertificate {
    pub s: VertexSet,
    pub g: usize,
    /// Sizes of the components of `G − S`, ascending.
    pub component_sizes: Vec<usize>,
    /// True iff `G − S` has at least two components, all larger than `g`.
    pub valid: bool,
}

impl CutCertificate {
    /// Deterministic text block (for archival diffing of witnesses).
    #[must_use]
    pub fn emit(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("g {}\n", self.g));
        out.push_str(&format!("size {}\n", self.s.len()));
        out.push_str(&format!("valid {}\n", self.valid));
        let ids: Vec<String> = self.s.iter().map(|v| v.to_string()).collect();
        out.push_str(&format!("cut {}\n", ids.join(" ")));
        let sizes: Vec<String> = self.component_sizes.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("components {}\n", sizes.join(" ")));
        out
    }
}

/// Judge a candidate set: components of `G − S` and whether `S` is a
/// g-extra cut (the graph splits and every part keeps more than `g`
/// vertices).
pub fn is_g_extra_cut(graph: &Graph, s: &VertexSet, g: usize) -> Result<CutCertificate> {
    let comps = graph.components(s)?;
    let mut component_sizes: Vec<usize> = comps.iter().map(VertexSet::len).collect();
    component_sizes.sort_unstable();
    let valid = component_sizes.len() >= 2 && component_sizes.iter().all(|&c| c > g);
    Ok(CutCertificate {
        s: s.clone(),
        g,
        component_sizes,
        valid,
    })
}

/// Outcome of a κ_g computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KappaG {
    Finite(usize),
    /// Exhaustion proved that no g-extra cut exists.
    Infinite,
    /// Enumeration stopped at a caller-imposed size cap below the level at
    /// which absence could be proved; the true value is unknown.
    UnknownAboveCap {
        cap: usize,
    },
    /// Node budget or deadline ran out; the true value is unknown.
    UnknownAboveBudget,
}

impl KappaG {
    #[must_use]
    pub fn finite(&self) -> Option<usize> {
        match self {
            KappaG::Finite(v) => Some(*v),
            _ => None,
        }
    }

    #[must_use]
    pub fn is_known(&self) -> bool {
        matches!(self, KappaG::Finite(_) | KappaG::Infinite)
    }
}

impl std::fmt::Display for KappaG {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KappaG::Finite(v) => write!(f, "{v}"),
            KappaG::Infinite => write!(f, "Infinite"),
            KappaG::UnknownAboveCap { .. } | KappaG::UnknownAboveBudget => write!(f, "unknown"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Oracle,
    BranchAndBound,
}

impl Method {
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            Method::Oracle => "oracle",
            Method::BranchAndBound => "branch_and_bound",
        }
    }
}

/// Result of a κ_g computation with witness and search statistics.
///
/// When `value` is finite the witness certificate is present, valid, and
/// `|witness.s| = value`, and `witness_component` is one component of the
/// cut graph. When the value is unknown but a feasible cut was seen before
/// the budget ran out, the witness documents that upper bound only.
#[derive(Clone, Debug)]
pub struct ExtraConnResult {
    pub value: KappaG,
    pub witness: Option<CutCertificate>,
    pub witness_component: Option<VertexSet>,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub method: Method,
}

/// Controls for [`kappa_g_oracle`].
#[derive(Clone, Debug)]
pub struct OracleConfig {
    /// Largest cut size to try; `None` means unbounded (the oracle still
    /// skips sizes that provably cannot host a cut).
    pub size_cap: Option<usize>,
    /// Refuse to start a size level once the cumulative subset count
    /// exceeds this estimate.
    pub work_guard: u128,
    pub parallel: bool,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            size_cap: None,
            work_guard: 50_000_000,
            parallel: true,
        }
    }
}

/// Controls for [`kappa_g_search`].
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Abort with an unknown verdict after this many enumeration nodes.
    pub node_budget: u64,
    /// Abort with an unknown verdict after this much wall-clock time.
    pub deadline: Option<Duration>,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: u64::MAX,
            deadline: None,
            parallel: true,
        }
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Visit every `size`-subset of `items` in lexicographic order (by item
/// position). The callback returns `false` to stop early.
pub fn for_each_subset(items: &[Vertex], size: usize, mut f: impl FnMut(&[Vertex]) -> bool) {
    if size > items.len() {
        return;
    }
    if size == 0 {
        f(&[]);
        return;
    }
    let n = items.len();
    let mut idx: Vec<usize> = (0..size).collect();
    let mut buf: Vec<Vertex> = idx.iter().map(|&i| items[i]).collect();
    loop {
        if !f(&buf) {
            return;
        }
        // Advance the rightmost index that still has room, reset the rest.
        let mut i = size;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] < n - size + i {
                idx[i] += 1;
                for j in i + 1..size {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
        for (slot, &pos) in buf.iter_mut().zip(idx.iter()) {
            *slot = items[pos];
        }
    }
}

/// Visit every nonempty connected vertex set of size at most `max_size`
/// exactly once. The callback returns `false` to stop early.
///
/// Uses the canonical grow-only scheme: sets are rooted at their smallest
/// vertex, extensions only pick boundary vertices, and forbidden sets
/// prevent a set from being reached along two different orders.
pub fn for_each_connected_set(graph: &Graph, max_size: usize, f: impl FnMut(&VertexSet) -> bool) {
    if max_size == 0 {
        return;
    }
    let n = graph.n();
    let adj = graph.adjacency_bitsets();

    struct Walk<'a, F: FnMut(&VertexSet) -> bool> {
        adj: &'a [VertexSet],
        max_size: usize,
        f: F,
        stopped: bool,
    }

    impl<F: FnMut(&VertexSet) -> bool> Walk<'_, F> {
        fn recurse(
            &mut self,
            a: &mut VertexSet,
            boundary: &mut VertexSet,
            d: &mut VertexSet,
            size: usize,
        ) {
            if self.stopped {
                return;
            }
            if !(self.f)(a) {
                self.stopped = true;
                return;
            }
            if size == self.max_size {
                return;
            }
            let mut ext = boundary.clone();
            ext.difference_with(d);
            let ext: Vec<Vertex> = ext.iter().collect();
            let mut claimed = Vec::with_capacity(ext.len());
            for v in ext {
                a.insert(v);
                boundary.remove(v);
                let mut added = Vec::new();
                for w in self.adj[v].iter() {
                    if !a.contains(w) && !boundary.contains(w) {
                        boundary.insert(w);
                        added.push(w);
                    }
                }
                self.recurse(a, boundary, d, size + 1);
                a.remove(v);
                for w in added {
                    boundary.remove(w);
                }
                boundary.insert(v);
                d.insert(v);
                claimed.push(v);
                if self.stopped {
                    break;
                }
            }
            for v in claimed {
                d.remove(v);
            }
        }
    }

    let mut walk = Walk {
        adj: &adj,
        max_size,
        f,
        stopped: false,
    };
    for root in 0..n {
        if walk.stopped {
            return;
        }
        let mut a = VertexSet::new(n);
        a.insert(root);
        let mut boundary = adj[root].clone();
        let mut d = VertexSet::new(n);
        for small in 0..root {
            d.insert(small);
        }
        walk.recurse(&mut a, &mut boundary, &mut d, 1);
    }
}

/// Fast validity test used in the oracle's hot loop: does removing `s`
/// split the graph into at least two components, all larger than `g`?
fn cut_is_valid_fast(adj: &[VertexSet], full: &VertexSet, s: &VertexSet, g: usize) -> bool {
    let mut remaining = full.clone();
    remaining.difference_with(s);
    let mut comps = 0usize;
    while let Some(start) = remaining.min_member() {
        let mut comp = VertexSet::new(full.host_n());
        comp.insert(start);
        let mut frontier = comp.clone();
        loop {
            let mut next = VertexSet::new(full.host_n());
            for v in frontier.iter() {
                next.union_with(&adj[v]);
            }
            next.intersect_with(&remaining);
            next.difference_with(&comp);
            if next.is_empty() {
                break;
            }
            comp.union_with(&next);
            frontier = next;
        }
        if comp.len() <= g {
            return false;
        }
        comps += 1;
        remaining.difference_with(&comp);
    }
    comps >= 2
}

/// κ_g by brute force: try cut sizes in increasing order; the first size
/// admitting a valid cut is the answer. Reports `Infinite` only when the
/// cap was high enough that exhaustion proves no cut exists, and
/// `UnknownAboveCap` otherwise. The lexicographically first witness at the
/// winning size is returned, independent of parallel scheduling.
pub fn kappa_g_oracle(graph: &Graph, g: usize, config: &OracleConfig) -> Result<ExtraConnResult> {
    let start = Instant::now();
    let n = graph.n();
    let adj = graph.adjacency_bitsets();
    let full = VertexSet::full(n);
    let user_cap = config.size_cap.unwrap_or(n).min(n);
    // A valid cut leaves at least two components of more than g vertices,
    // so sizes above n − 2(g+1) cannot succeed and are skipped. The skip
    // saves work only; the Infinite/Unknown verdict below is based on the
    // caller's cap.
    let feasible_cap = n.saturating_sub(2 * (g + 1));
    let max_size = user_cap.min(feasible_cap);
    let run_parallel = crate::effective_parallel(config.parallel);
    let tested = AtomicU64::new(0);

    let mut work: u128 = 0;
    let mut hit: Option<VertexSet> = None;
    // Fewer than 2(g+1) vertices cannot split into two parts larger than
    // g, so no size (not even the empty set) needs testing.
    if n >= 2 * (g + 1) {
        for size in 0..=max_size {
            work = work.saturating_add(binomial(n, size));
            if work > config.work_guard {
                return Err(Error::WorkGuardExceeded {
                    estimate: work,
                    guard: config.work_guard,
                });
            }
            if let Some(s) = oracle_level(graph, g, size, &adj, &full, run_parallel, &tested) {
                hit = Some(s);
                break;
            }
        }
    }

    let nodes_explored = tested.load(Ordering::Relaxed);
    if let Some(s) = hit {
        let cert = is_g_extra_cut(graph, &s, g)?;
        debug_assert!(cert.valid);
        let comps = graph.components(&s)?;
        let witness_component = comps
            .iter()
            .min_by(|a, b| (a.len(), a.min_member()).cmp(&(b.len(), b.min_member())))
            .cloned();
        let value = KappaG::Finite(s.len());
        return Ok(ExtraConnResult {
            value,
            witness: Some(cert),
            witness_component,
            nodes_explored,
            elapsed: start.elapsed(),
            method: Method::Oracle,
        });
    }
    let value = if user_cap >= n.saturating_sub(g + 1) {
        KappaG::Infinite
    } else {
        KappaG::UnknownAboveCap { cap: user_cap }
    };
    Ok(ExtraConnResult {
        value,
        witness: None,
        witness_component: None,
        nodes_explored,
        elapsed: start.elapsed(),
        method: Method::Oracle,
    })
}

/// One oracle size level. Returns the lexicographically first valid cut of
/// exactly `size` vertices, if any.
fn oracle_level(
    graph: &Graph,
    g: usize,
    size: usize,
    adj: &[VertexSet],
    full: &VertexSet,
    run_parallel: bool,
    tested: &AtomicU64,
) -> Option<VertexSet> {
    let n = graph.n();
    if size == 0 {
        tested.fetch_add(1, Ordering::Relaxed);
        let empty = VertexSet::new(n);
        return cut_is_valid_fast(adj, full, &empty, g).then_some(empty);
    }
    let items: Vec<Vertex> = (0..n).collect();
    // Partition by first element: blocks are disjoint, block order is the
    // lexicographic order, and each block is scanned in order, so the
    // first hit over blocks is the globally lexicographically first cut.
    let scan_block = |first: Vertex| -> Option<VertexSet> {
        let mut local: u64 = 0;
        let mut found = None;
        let mut scratch = VertexSet::new(n);
        for_each_subset(&items[first + 1..], size - 1, |rest| {
            local += 1;
            scratch.clear();
            scratch.insert(first);
            for &v in rest {
                scratch.insert(v);
            }
            if cut_is_valid_fast(adj, full, &scratch, g) {
                found = Some(scratch.clone());
                return false;
            }
            true
        });
        tested.fetch_add(local, Ordering::Relaxed);
        found
    };
    let last_first = n - size;
    #[cfg(feature = "parallel")]
    if run_parallel {
        return (0..=last_first).into_par_iter().find_map_first(&scan_block);
    }
    let _ = run_parallel;
    (0..=last_first).find_map(|first| scan_block(first))
}

/// Candidate evaluation: components of `G − N[A]`, absorbing those with at
/// most `g` vertices into the cut. Returns the enriched cut size when at
/// least one component survives.
fn evaluate_candidate(
    adj: &[VertexSet],
    full: &VertexSet,
    a: &VertexSet,
    boundary: &VertexSet,
    g: usize,
) -> Option<usize> {
    let mut far = full.clone();
    far.difference_with(a);
    far.difference_with(boundary);
    let mut absorbed = 0usize;
    let mut survivors = 0usize;
    while let Some(start) = far.min_member() {
        let mut comp = VertexSet::new(full.host_n());
        comp.insert(start);
        let mut frontier = comp.clone();
        loop {
            let mut next = VertexSet::new(full.host_n());
            for v in frontier.iter() {
                next.union_with(&adj[v]);
            }
            next.intersect_with(&far);
            next.difference_with(&comp);
            if next.is_empty() {
                break;
            }
            comp.union_with(&next);
            frontier = next;
        }
        if comp.len() <= g {
            absorbed += comp.len();
        } else {
            survivors += 1;
        }
        far.difference_with(&comp);
    }
    (survivors >= 1).then_some(boundary.len() + absorbed)
}

/// Reconstruct the enriched cut `S(A)` for a recorded witness component.
fn enriched_cut(graph: &Graph, a: &VertexSet, g: usize) -> Result<VertexSet> {
    let mut s = graph.open_boundary(a)?;
    let closed = graph.closed_neighborhood(a)?;
    for comp in graph.components(&closed)? {
        if comp.len() <= g {
            s.union_with(&comp);
        }
    }
    Ok(s)
}

struct SearchShared<'a> {
    adj: &'a [VertexSet],
    full: &'a VertexSet,
    g: usize,
    cap: usize,
    incumbent: AtomicUsize,
    nodes: AtomicU64,
    node_budget: u64,
    stop: AtomicBool,
    deadline: Option<Instant>,
}

struct RootRun<'a, 'b> {
    shared: &'b SearchShared<'a>,
    unflushed: u64,
    best: Option<(usize, VertexSet)>,
}

/// How many nodes a worker counts privately before publishing them.
const NODE_FLUSH: u64 = 256;

impl RootRun<'_, '_> {
    fn bump_node(&mut self) -> bool {
        self.unflushed += 1;
        if self.unflushed == NODE_FLUSH {
            self.shared.nodes.fetch_add(NODE_FLUSH, Ordering::Relaxed);
            self.unflushed = 0;
            if let Some(deadline) = self.shared.deadline {
                if Instant::now() >= deadline {
                    self.shared.stop.store(true, Ordering::Relaxed);
                }
            }
        }
        if self.shared.nodes.load(Ordering::Relaxed) + self.unflushed > self.shared.node_budget {
            self.shared.stop.store(true, Ordering::Relaxed);
        }
        !self.shared.stop.load(Ordering::Relaxed)
    }

    fn flush_nodes(&mut self) {
        self.shared
            .nodes
            .fetch_add(self.unflushed, Ordering::Relaxed);
        self.unflushed = 0;
    }

    fn record(&mut self, value: usize, a: &VertexSet) {
        self.shared.incumbent.fetch_min(value, Ordering::Relaxed);
        let better = match &self.best {
            None => true,
            Some((best_v, best_a)) => {
                value < *best_v
                    || (value == *best_v && a.lex_cmp(best_a) == std::cmp::Ordering::Less)
            }
        };
        if better {
            self.best = Some((value, a.clone()));
        }
    }

    /// Depth-first walk over canonical connected extensions of `a`.
    ///
    /// `boundary` is `N(a)` (forbidden vertices included — they stay cut
    /// members), `d` the forbidden set, `a_len`/`boundary_len` tracked
    /// sizes. Pruning is strict (`>` against the incumbent) so every
    /// candidate achieving the final value is visited no matter how the
    /// roots interleave; the reported witness is therefore deterministic.
    fn recurse(
        &mut self,
        a: &mut VertexSet,
        boundary: &mut VertexSet,
        d: &mut VertexSet,
        a_len: usize,
    ) {
        if !self.bump_node() {
            return;
        }
        let shared = self.shared;
        let n = shared.full.host_n();
        let boundary_len = boundary.len();
        // Far side monotonically shrinks as `a` grows; once it cannot hold
        // a surviving component the whole subtree is infeasible.
        if n - a_len - boundary_len <= shared.g {
            return;
        }
        // Boundary vertices already forbidden can never join `a`, and at
        // most cap − |a| of the free ones can; the rest are committed cut
        // members for every descendant (and for `a` itself).
        let committed = boundary.intersection_count(d);
        let free = boundary_len - committed;
        let lower = committed + free.saturating_sub(shared.cap - a_len);
        if lower > shared.incumbent.load(Ordering::Relaxed) {
            return;
        }
        if a_len > shared.g {
            if let Some(value) = evaluate_candidate(shared.adj, shared.full, a, boundary, shared.g)
            {
                self.record(value, a);
            }
        }
        if a_len == shared.cap {
            return;
        }
        let mut ext = boundary.clone();
        ext.difference_with(d);
        let ext: Vec<Vertex> = ext.iter().collect();
        let mut claimed = Vec::with_capacity(ext.len());
        for v in ext {
            a.insert(v);
            boundary.remove(v);
            let mut added = Vec::new();
            for w in shared.adj[v].iter() {
                if !a.contains(w) && !boundary.contains(w) {
                    boundary.insert(w);
                    added.push(w);
                }
            }
            self.recurse(a, boundary, d, a_len + 1);
            a.remove(v);
            for w in added {
                boundary.remove(w);
            }
            boundary.insert(v);
            d.insert(v);
            claimed.push(v);
            if self.shared.stop.load(Ordering::Relaxed) {
                break;
            }
        }
        for v in claimed {
            d.remove(v);
        }
    }
}

fn run_root(shared: &SearchShared<'_>, root: Vertex) -> Option<(usize, VertexSet)> {
    let n = shared.full.host_n();
    let mut run = RootRun {
        shared,
        unflushed: 0,
        best: None,
    };
    let mut a = VertexSet::new(n);
    a.insert(root);
    let mut boundary = shared.adj[root].clone();
    let mut d = VertexSet::new(n);
    for small in 0..root {
        d.insert(small);
    }
    run.recurse(&mut a, &mut boundary, &mut d, 1);
    run.flush_nodes();
    run.best
}

/// κ_g by branch-and-bound over connected candidate components (see the
/// module docs for the completeness argument). Exact when it finishes;
/// budget or deadline exhaustion yields `UnknownAboveBudget`, never a
/// wrong number. Among minimum cuts the reported witness component is the
/// lexicographically smallest one, independent of thread scheduling.
pub fn kappa_g_search(graph: &Graph, g: usize, config: &SearchConfig) -> Result<ExtraConnResult> {
    let start = Instant::now();
    if !graph.is_connected() {
        return Err(Error::NotConnected);
    }
    let n = graph.n();
    let run_parallel = crate::effective_parallel(config.parallel);
    let kappa = vertex_connectivity_with(graph, config.parallel);
    let cap = (n - kappa) / 2;
    let adj = graph.adjacency_bitsets();
    let full = VertexSet::full(n);

    if cap < g + 1 || is_complete(graph) {
        // No component of any cut can reach g+1 vertices: exhaustion is
        // immediate and no g-extra cut exists.
        return Ok(ExtraConnResult {
            value: KappaG::Infinite,
            witness: None,
            witness_component: None,
            nodes_explored: 0,
            elapsed: start.elapsed(),
            method: Method::BranchAndBound,
        });
    }

    let shared = SearchShared {
        adj: &adj,
        full: &full,
        g,
        cap,
        incumbent: AtomicUsize::new(usize::MAX),
        nodes: AtomicU64::new(0),
        node_budget: config.node_budget,
        stop: AtomicBool::new(false),
        deadline: config.deadline.map(|d| start + d),
    };

    #[cfg(feature = "parallel")]
    let per_root: Vec<Option<(usize, VertexSet)>> = if run_parallel {
        (0..n)
            .into_par_iter()
            .map(|root| run_root(&shared, root))
            .collect()
    } else {
        (0..n).map(|root| run_root(&shared, root)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let per_root: Vec<Option<(usize, VertexSet)>> = {
        let _ = run_parallel;
        (0..n).map(|root| run_root(&shared, root)).collect()
    };

    // Reduce in root order: the winner is the first root attaining the
    // minimum, and within it the lexicographically smallest component.
    // Since every set's root is its smallest member this is the global
    // lexicographic minimum over optimal components.
    let mut best: Option<(usize, VertexSet)> = None;
    for candidate in per_root.into_iter().flatten() {
        let better = match &best {
            None => true,
            Some((v, a)) => {
                candidate.0 < *v
                    || (candidate.0 == *v && candidate.1.lex_cmp(a) == std::cmp::Ordering::Less)
            }
        };
        if better {
            best = Some(candidate);
        }
    }

    let nodes_explored = shared.nodes.load(Ordering::Relaxed);
    let aborted = shared.stop.load(Ordering::Relaxed);
    let (witness, witness_component, found_value) = match best {
        Some((value, a)) => {
            let s = enriched_cut(graph, &a, g)?;
            debug_assert_eq!(s.len(), value);
            let cert = is_g_extra_cut(graph, &s, g)?;
            debug_assert!(cert.valid);
            debug_assert!(graph.components(&s)?.iter().any(|c| *c == a));
            (Some(cert), Some(a), Some(value))
        }
        None => (None, None, None),
    };
    let value = if aborted {
        KappaG::UnknownAboveBudget
    } else {
        match found_value {
            Some(v) => KappaG::Finite(v),
            None => KappaG::Infinite,
        }
    };
    Ok(ExtraConnResult {
        value,
        witness,
        witness_component,
        nodes_explored,
        elapsed: start.elapsed(),
        method: Method::BranchAndBound,
    })
}

/// Find a simple path of `wanted` vertices in `factor` starting at
/// `start`, preferring smaller vertex ids (deterministic).
fn simple_path_from(factor: &Graph, start: Vertex, wanted: usize) -> Option<Vec<Vertex>> {
    fn extend(factor: &Graph, path: &mut Vec<Vertex>, wanted: usize) -> bool {
        if path.len() == wanted {
            return true;
        }
        let last = *path.last().expect("path starts nonempty");
        for &next in factor.neighbors_slice(last) {
            if !path.contains(&next) {
                path.push(next);
                if extend(factor, path, wanted) {
                    return true;
                }
                path.pop();
            }
        }
        false
    }
    let mut path = vec![start];
    extend(factor, &mut path, wanted).then_some(path)
}

/// Cut around a path of `g+1` vertices laid inside one layer of the
/// product: the layer copies the `axis` factor, the path starts at
/// `anchor`. For factors meeting the closed-form hypotheses the resulting
/// certificate is valid with size equal to the matching minimum term.
pub fn build_layer_path_cut(
    product: &ProductGraph,
    g: usize,
    axis: Axis,
    anchor: Vertex,
) -> Result<(CutCertificate, VertexSet)> {
    let (x0, y0) = product.coords(anchor)?;
    let wanted = g + 1;
    let path_in_factor = match axis {
        Axis::G1 => simple_path_from(product.factor1(), x0, wanted),
        Axis::G2 => simple_path_from(product.factor2(), y0, wanted),
    }
    .ok_or(Error::AnchorPathMissing { wanted })?;
    let n = product.graph().n();
    let mut a = VertexSet::new(n);
    for &p in &path_in_factor {
        let v = match axis {
            Axis::G1 => product.vertex_id(p, y0)?,
            Axis::G2 => product.vertex_id(x0, p)?,
        };
        a.insert(v);
    }
    let s = product.graph().open_boundary(&a)?;
    let cert = is_g_extra_cut(product.graph(), &s, g)?;
    Ok((cert, a))
}

/// Cut around a 2×2 block `{x₁,x₂}×{y₁,y₂}` over factor edges, checked as
/// a 3-extra cut. For qualifying factors the size is `4k₁k₂−4`.
pub fn build_block_cut(
    product: &ProductGraph,
    x_pair: (Vertex, Vertex),
    y_pair: (Vertex, Vertex),
) -> Result<(CutCertificate, VertexSet)> {
    let (x1, x2) = x_pair;
    let (y1, y2) = y_pair;
    if x1 == x2 || !product.factor1().has_edge(x1.min(x2), x1.max(x2)) {
        return Err(Error::AnchorNotAnEdge(x1, x2));
    }
    if y1 == y2 || !product.factor2().has_edge(y1.min(y2), y1.max(y2)) {
        return Err(Error::AnchorNotAnEdge(y1, y2));
    }
    let n = product.graph().n();
    let mut a = VertexSet::new(n);
    for &x in &[x1, x2] {
        for &y in &[y1, y2] {
            a.insert(product.vertex_id(x, y)?);
        }
    }
    let s = product.graph().open_boundary(&a)?;
    let cert = is_g_extra_cut(product.graph(), &s, 3)?;
    Ok((cert, a))
}

/// Slice condition satisfied by minimum cuts of products: every nonempty
/// slice of the witness cut through a factor-1 vertex has at least κ(G₂)
/// vertices, and symmetrically for factor-2 slices.
pub fn check_layer_slice_property(
    product: &ProductGraph,
    result: &ExtraConnResult,
) -> Result<bool> {
    let witness = match (&result.value, &result.witness) {
        (KappaG::Finite(_), Some(w)) => w,
        _ => return Err(Error::NoFiniteWitness),
    };
    let kappa1 = vertex_connectivity_with(product.factor1(), false);
    let kappa2 = vertex_connectivity_with(product.factor2(), false);
    for x in 0..product.n1() {
        let slice = product.slice_through_x(&witness.s, x)?;
        if !slice.is_empty() && slice.len() < kappa2 {
            return Ok(false);
        }
    }
    for y in 0..product.n2() {
        let slice = product.slice_through_y(&witness.s, y)?;
        if !slice.is_empty() && slice.len() < kappa1 {
            return Ok(false);
        }
    }
    Ok(true)
}
