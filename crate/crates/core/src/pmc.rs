//! PMC-model distinguishability, fault-set admissibility under the
//! g-extra condition, indistinguishable-pair witness construction, and
//! t-diagnosability checks (exhaustive on tiny graphs, sampled beyond).
//!
//! Everything works at the set-theoretic level: two fault sets are
//! distinguishable exactly when some edge leaves `V − (R₁ ∪ R₂)` into the
//! symmetric difference `R₁ Δ R₂`. Syndrome decoding is never simulated.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::extra::is_g_extra_cut;
use crate::graph::{Graph, Vertex};
use crate::set::VertexSet;

/// Verdict for one pair of fault sets, with the deciding edge when the
/// pair is distinguishable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaultSetPair {
    pub r1: VertexSet,
    pub r2: VertexSet,
    pub distinguishable: bool,
    /// Edge `(u, v)` with `u ∉ R₁ ∪ R₂` and `v ∈ R₁ Δ R₂`; present iff
    /// distinguishable.
    pub boundary_witness: Option<(Vertex, Vertex)>,
}

/// PMC-model distinguishability: scan for an edge from outside both fault
/// sets into their symmetric difference. Symmetric in `(r1, r2)`; the
/// reported edge is the first in (vertex, neighbor) order.
pub fn is_distinguishable(graph: &Graph, r1: &VertexSet, r2: &VertexSet) -> Result<FaultSetPair> {
    r1.check_host(graph.n())?;
    r2.check_host(graph.n())?;
    if r1 == r2 {
        return Err(Error::IdenticalFaultSets);
    }
    let mut union = r1.clone();
    union.union_with(r2);
    let mut delta = union.clone();
    let mut both = r1.clone();
    both.intersect_with(r2);
    delta.difference_with(&both);
    let mut boundary_witness = None;
    'scan: for u in 0..graph.n() {
        if union.contains(u) {
            continue;
        }
        for &v in graph.neighbors_slice(u) {
            if delta.contains(v) {
                boundary_witness = Some((u, v));
                break 'scan;
            }
        }
    }
    Ok(FaultSetPair {
        r1: r1.clone(),
        r2: r2.clone(),
        distinguishable: boundary_witness.is_some(),
        boundary_witness,
    })
}

/// Which reading of "conditioned fault set" to apply.
///
/// `ComponentsOnly` (the adopted default) asks only that every component
/// of `G − F` keeps more than `g` vertices — a fault set smaller than κ_g
/// cannot disconnect the graph, so demanding disconnection would exclude
/// almost every set below the threshold. `RequireDisconnection` is the
/// strict alternative (F must be a full g-extra cut) so the two readings
/// can be compared empirically.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibilityMode {
    ComponentsOnly,
    RequireDisconnection,
}

/// Admissibility of a fault set under the g-extra condition, in the
/// chosen reading.
pub fn is_admissible_fault_set_with(
    graph: &Graph,
    f: &VertexSet,
    g: usize,
    mode: AdmissibilityMode,
) -> Result<bool> {
    let comps = graph.components(f)?;
    let all_large = comps.iter().all(|c| c.len() > g);
    Ok(match mode {
        AdmissibilityMode::ComponentsOnly => all_large,
        AdmissibilityMode::RequireDisconnection => all_large && comps.len() >= 2,
    })
}

/// Admissibility in the default components-only reading.
pub fn is_admissible_fault_set(graph: &Graph, f: &VertexSet, g: usize) -> Result<bool> {
    is_admissible_fault_set_with(graph, f, g, AdmissibilityMode::ComponentsOnly)
}

/// The classical indistinguishable pair built from a connected set `A` of
/// `g+1` vertices whose boundary is a valid g-extra cut: `F₁ = N(A)`,
/// `F₂ = N[A]`. Both are admissible, `|F₂| = |F₁| + g + 1`, and no edge
/// reaches `R₁ Δ R₂ = A` from outside `N[A]`, so the pair certifies that
/// the graph is not `(|F₁| + g + 1)`-diagnosable.
pub fn witness_pair(graph: &Graph, a: &VertexSet, g: usize) -> Result<FaultSetPair> {
    a.check_host(graph.n())?;
    if a.len() != g + 1 {
        return Err(Error::WitnessPrecondition(format!(
            "witness component has {} vertices, need g+1 = {}",
            a.len(),
            g + 1
        )));
    }
    if !graph.induced_connected(a)? {
        return Err(Error::WitnessPrecondition(
            "witness component must induce a connected subgraph".into(),
        ));
    }
    let f1 = graph.open_boundary(a)?;
    let cert = is_g_extra_cut(graph, &f1, g)?;
    if !cert.valid {
        return Err(Error::WitnessPrecondition(
            "open boundary of the witness component is not a valid g-extra cut".into(),
        ));
    }
    let f2 = graph.closed_neighborhood(a)?;
    debug_assert_eq!(f2.len(), f1.len() + g + 1);
    for (name, f) in [("F1", &f1), ("F2", &f2)] {
        if !is_admissible_fault_set(graph, f, g)? {
            return Err(Error::WitnessPrecondition(format!(
                "{name} is not an admissible fault set"
            )));
        }
    }
    let pair = is_distinguishable(graph, &f1, &f2)?;
    debug_assert!(!pair.distinguishable);
    Ok(pair)
}

/// How a diagnosability verdict was reached: full enumeration, or a
/// fixed-seed sample that can refute but never prove.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VerdictMode {
    Exhaustive,
    Sampled { samples: u64, seed: u64 },
}

/// Outcome of a t-diagnosability check.
#[derive(Clone, Debug)]
pub struct DiagnosabilityVerdict {
    pub t: usize,
    pub g: usize,
    /// Exhaustive mode: no indistinguishable admissible pair of sizes ≤ t
    /// exists. Sampled mode: none was found among the samples.
    pub holds: bool,
    pub counterexample: Option<FaultSetPair>,
    pub mode: VerdictMode,
}

/// Controls for [`is_t_diagnosable_exhaustive`].
#[derive(Clone, Debug)]
pub struct ExhaustiveConfig {
    /// Refuse when the admissible-pair estimate exceeds this.
    pub work_guard: u128,
    pub admissibility: AdmissibilityMode,
    pub parallel: bool,
}

impl Default for ExhaustiveConfig {
    fn default() -> Self {
        ExhaustiveConfig {
            work_guard: 10_000_000,
            admissibility: AdmissibilityMode::ComponentsOnly,
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

/// Exhaustive t-diagnosability on small graphs: every unordered pair of
/// distinct admissible fault sets with at most `t` vertices each must be
/// distinguishable. The counterexample, if any, is the first pair in
/// (size, lexicographic) subset order, independent of scheduling.
pub fn is_t_diagnosable_exhaustive(
    graph: &Graph,
    g: usize,
    t: usize,
    config: &ExhaustiveConfig,
) -> Result<DiagnosabilityVerdict> {
    let n = graph.n();
    let t_eff = t.min(n);
    let mut subset_count: u128 = 0;
    for size in 0..=t_eff {
        subset_count = subset_count.saturating_add(binomial(n, size));
    }
    let pair_estimate = subset_count.saturating_mul(subset_count.saturating_sub(1)) / 2;
    if pair_estimate > config.work_guard {
        return Err(Error::WorkGuardExceeded {
            estimate: pair_estimate,
            guard: config.work_guard,
        });
    }

    let items: Vec<Vertex> = (0..n).collect();
    let mut admissible: Vec<VertexSet> = Vec::new();
    for size in 0..=t_eff {
        crate::extra::for_each_subset(&items, size, |members| {
            let f = VertexSet::from_members(n, members.iter().copied())
                .expect("subset members are vertex ids");
            let ok = is_admissible_fault_set_with(graph, &f, g, config.admissibility)
                .expect("host size fixed");
            if ok {
                admissible.push(f);
            }
            true
        });
    }

    let check_row = |i: usize| -> Option<FaultSetPair> {
        let left = &admissible[i];
        for right in &admissible[i + 1..] {
            let pair = is_distinguishable(graph, left, right).expect("distinct admissible sets");
            if !pair.distinguishable {
                return Some(pair);
            }
        }
        None
    };

    let run_parallel = crate::effective_parallel(config.parallel);
    #[cfg(feature = "parallel")]
    let counterexample = if run_parallel {
        (0..admissible.len())
            .into_par_iter()
            .find_map_first(&check_row)
    } else {
        (0..admissible.len()).find_map(|i| check_row(i))
    };
    #[cfg(not(feature = "parallel"))]
    let counterexample = {
        let _ = run_parallel;
        (0..admissible.len()).find_map(|i| check_row(i))
    };

    Ok(DiagnosabilityVerdict {
        t,
        g,
        holds: counterexample.is_none(),
        counterexample,
        mode: VerdictMode::Exhaustive,
    })
}

/// Controls for [`is_t_diagnosable_sampled`].
#[derive(Clone, Debug)]
pub struct SampleConfig {
    pub samples: u64,
    pub seed: u64,
    pub admissibility: AdmissibilityMode,
    /// Per-sample cap on redraws while hunting for an admissible distinct
    /// pair; an index that exhausts it contributes nothing.
    pub max_rejections: u32,
    pub parallel: bool,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig {
            samples: 10_000,
            seed: 7,
            admissibility: AdmissibilityMode::ComponentsOnly,
            max_rejections: 1_000,
            parallel: true,
        }
    }
}

fn draw_set(rng: &mut ChaCha8Rng, n: usize, max_size: usize) -> VertexSet {
    let size = rng.gen_range(0..=max_size);
    let mut out = VertexSet::new(n);
    for idx in sample(rng, n, size) {
        out.insert(idx);
    }
    out
}

/// Sampled t-diagnosability: draws admissible pairs from a fixed-seed
/// generator (one independent stream per sample index, so the verdict
/// does not depend on worker scheduling). Can only refute — `holds`
/// merely records that no counterexample was found; the mode flag keeps
/// that distinction visible.
pub fn is_t_diagnosable_sampled(
    graph: &Graph,
    g: usize,
    t: usize,
    config: &SampleConfig,
) -> Result<DiagnosabilityVerdict> {
    let n = graph.n();
    let t_eff = t.min(n);
    let try_index = |i: u64| -> Option<FaultSetPair> {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        rng.set_stream(i);
        for _ in 0..config.max_rejections {
            let r1 = draw_set(&mut rng, n, t_eff);
            let r2 = draw_set(&mut rng, n, t_eff);
            if r1 == r2 {
                continue;
            }
            let ok1 = is_admissible_fault_set_with(graph, &r1, g, config.admissibility)
                .expect("host size fixed");
            let ok2 = is_admissible_fault_set_with(graph, &r2, g, config.admissibility)
                .expect("host size fixed");
            if !(ok1 && ok2) {
                continue;
            }
            let pair = is_distinguishable(graph, &r1, &r2).expect("distinct sets");
            return (!pair.distinguishable).then_some(pair);
        }
        None
    };

    let run_parallel = crate::effective_parallel(config.parallel);
    #[cfg(feature = "parallel")]
    let counterexample = if run_parallel {
        (0..config.samples)
            .into_par_iter()
            .find_map_first(&try_index)
    } else {
        (0..config.samples).find_map(|i| try_index(i))
    };
    #[cfg(not(feature = "parallel"))]
    let counterexample = {
        let _ = run_parallel;
        (0..config.samples).find_map(|i| try_index(i))
    };

    Ok(DiagnosabilityVerdict {
        t,
        g,
        holds: counterexample.is_none(),
        counterexample,
        mode: VerdictMode::Sampled {
            samples: config.samples,
            seed: config.seed,
        },
    })
}

/// Preconditions under which the diagnosability equality t̃ = κ_g + g is
/// proven: the graph is large enough (n ≥ 2(κ_g + g) + 1) and the witness
/// component realizes a minimum g-extra cut as its open boundary, with
/// g+1 vertices inducing a connected subgraph.
pub fn diagnosability_preconditions(
    graph: &Graph,
    g: usize,
    kappa_g: usize,
    witness_a: &VertexSet,
) -> Result<bool> {
    witness_a.check_host(graph.n())?;
    if graph.n() < 2 * (kappa_g + g) + 1 {
        return Ok(false);
    }
    if witness_a.len() != g + 1 || !graph.induced_connected(witness_a)? {
        return Ok(false);
    }
    let boundary = graph.open_boundary(witness_a)?;
    if boundary.len() != kappa_g {
        return Ok(false);
    }
    Ok(is_g_extra_cut(graph, &boundary, g)?.valid)
}
