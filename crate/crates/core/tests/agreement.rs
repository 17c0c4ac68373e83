//! Deterministic oracle/search cross-validation corpus: catalog graphs,
//! product graphs, and a seeded random batch. Every finite witness is
//! re-validated, minimum cuts of strong products are checked against the
//! layer-slice lower bound, and the parallel and sequential searches must
//! return identical witnesses, not just identical values.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use xconn_core::extra::{
    check_layer_slice_property, is_g_extra_cut, kappa_g_oracle, kappa_g_search, KappaG,
    OracleConfig, SearchConfig,
};
use xconn_core::family::generate_full;
use xconn_core::graph::{random_connected_graph, Graph};
use xconn_core::product::{ProductGraph, ProductKind};

/// Runs both solvers, checks mutual agreement and witness validity, and
/// returns the common value.
fn cross_check(graph: &Graph, g: usize, label: &str) -> KappaG {
    let oracle = kappa_g_oracle(graph, g, &OracleConfig::default())
        .unwrap_or_else(|e| panic!("oracle failed on {label} g={g}: {e}"));
    let search = kappa_g_search(graph, g, &SearchConfig::default())
        .unwrap_or_else(|e| panic!("search failed on {label} g={g}: {e}"));

    assert!(
        oracle.value.is_known(),
        "{label} g={g}: oracle returned unknown"
    );
    assert!(
        search.value.is_known(),
        "{label} g={g}: search returned unknown"
    );
    assert_eq!(
        oracle.value, search.value,
        "{label} g={g}: solver disagreement"
    );

    for result in [&oracle, &search] {
        if let KappaG::Finite(v) = result.value {
            let cert = result
                .witness
                .as_ref()
                .expect("finite value carries a witness");
            assert_eq!(cert.s.len(), v, "{label} g={g}: witness size mismatch");
            let check = is_g_extra_cut(graph, &cert.s, g).unwrap();
            assert!(check.valid, "{label} g={g}: witness failed re-validation");
            let comp = result
                .witness_component
                .as_ref()
                .expect("finite value carries a witness component");
            let comps = graph.components(&cert.s).unwrap();
            assert!(
                comps.contains(comp),
                "{label} g={g}: witness component is not a component of the cut graph"
            );
        }
    }
    search.value
}

/// Asserts κ_g never decreases when g grows (infinity at the top).
fn assert_monotone(values: &[KappaG], label: &str) {
    for pair in values.windows(2) {
        let ok = match (pair[0], pair[1]) {
            (KappaG::Finite(a), KappaG::Finite(b)) => a <= b,
            (_, KappaG::Infinite) => true,
            _ => false,
        };
        assert!(
            ok,
            "{label}: kappa_g decreased across consecutive g: {pair:?}"
        );
    }
}

/// For strong products with a finite minimum cut, every nonempty slice of
/// the witness must meet the factor connectivity lower bound.
fn assert_slice_property(product: &ProductGraph, g: usize, label: &str) {
    let search = kappa_g_search(product.graph(), g, &SearchConfig::default()).unwrap();
    if matches!(search.value, KappaG::Finite(_)) {
        let ok = check_layer_slice_property(product, &search).unwrap();
        assert!(
            ok,
            "{label} g={g}: minimum cut violates the layer-slice bound"
        );
    }
}

/// Parallel and sequential runs must return byte-identical witnesses: the
/// strict pruning rule plus the lexicographic reduction make the reported
/// cut independent of thread scheduling.
fn assert_schedule_independent(graph: &Graph, g: usize, label: &str) {
    let par = SearchConfig {
        parallel: true,
        ..SearchConfig::default()
    };
    let seq = SearchConfig {
        parallel: false,
        ..SearchConfig::default()
    };
    let a = kappa_g_search(graph, g, &par).unwrap();
    let b = kappa_g_search(graph, g, &seq).unwrap();
    assert_eq!(
        a.value, b.value,
        "{label} g={g}: parallel/sequential value drift"
    );
    let emit = |r: &xconn_core::extra::ExtraConnResult| {
        r.witness
            .as_ref()
            .map(xconn_core::extra::CutCertificate::emit)
    };
    assert_eq!(
        emit(&a),
        emit(&b),
        "{label} g={g}: parallel/sequential witness drift"
    );
}

#[test]
fn catalog_graphs_agree_across_solvers() {
    let mut specs: Vec<String> = Vec::new();
    specs.extend((3..=8).map(|m| format!("cycle:{m}")));
    specs.extend((2..=7).map(|m| format!("path:{m}")));
    specs.extend((2..=5).map(|m| format!("complete:{m}")));
    specs.push("petersen".into());
    specs.push("heawood".into());
    specs.push("mcgee".into());

    for spec in &specs {
        let graph = generate_full(spec).unwrap().into_graph();
        let values: Vec<KappaG> = (0..=3).map(|g| cross_check(&graph, g, spec)).collect();
        assert_monotone(&values, spec);
    }
}

#[test]
fn random_corpus_agrees_across_solvers() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_c0de);
    for index in 0..40 {
        let n = 4 + index % 9; // 4..=12
        let p = [0.25, 0.4, 0.55][index % 3];
        let graph = random_connected_graph(n, p, &mut rng);
        let label = format!("random[{index}] n={n}");
        let values: Vec<KappaG> = (0..=3).map(|g| cross_check(&graph, g, &label)).collect();
        assert_monotone(&values, &label);
    }
}

#[test]
fn product_graphs_agree_across_solvers() {
    let cases: &[(&str, usize)] = &[
        ("strong(cycle:3,cycle:3)", 3),
        ("strong(cycle:3,cycle:4)", 3),
        ("strong(path:3,path:4)", 3),
        ("strong(path:2,cycle:5)", 3),
        ("strong(cycle:4,cycle:4)", 3),
        ("strong(cycle:5,cycle:5)", 1),
        ("cartesian(cycle:4,cycle:4)", 3),
        ("cartesian(cycle:3,cycle:5)", 3),
        ("cartesian(cycle:5,cycle:5)", 2),
    ];
    for &(spec, max_g) in cases {
        let generated = generate_full(spec).unwrap();
        let product = generated.as_product().unwrap();
        let mut values = Vec::new();
        for g in 0..=max_g {
            values.push(cross_check(product.graph(), g, spec));
            if product.kind() == ProductKind::Strong {
                assert_slice_property(product, g, spec);
            }
        }
        assert_monotone(&values, spec);
    }
}

#[test]
fn known_product_values() {
    let expect = |spec: &str, g: usize, want: usize| {
        let graph = generate_full(spec).unwrap().into_graph();
        let got = kappa_g_search(&graph, g, &SearchConfig::default())
            .unwrap()
            .value;
        assert_eq!(got, KappaG::Finite(want), "{spec} g={g}");
    };

    // Strong products of maximally connected 2-regular factors with girth
    // at least g+4 land exactly on the closed forms.
    expect("strong(cycle:5,cycle:5)", 0, 8); // k1k2+k1+k2
    expect("strong(cycle:5,cycle:5)", 1, 10); // 2k1k2+2k1-2
    expect("strong(cycle:6,cycle:6)", 2, 12); // 3k1k2+2k-4 at k1=k2=2
                                              // Cartesian analogues for the same factor class.
    expect("cartesian(cycle:5,cycle:5)", 0, 4); // k1+k2
    expect("cartesian(cycle:5,cycle:5)", 1, 6); // 2k1+2k2-2
    expect("cartesian(cycle:5,cycle:5)", 2, 7); // 3k1+3k2-5
}

#[test]
fn witnesses_are_schedule_independent() {
    for (spec, g) in [
        ("strong(cycle:5,cycle:5)", 1),
        ("strong(cycle:4,cycle:4)", 2),
        ("strong(path:3,path:4)", 1),
        ("cartesian(cycle:5,cycle:5)", 2),
        ("petersen", 1),
        ("mcgee", 3),
    ] {
        let graph = generate_full(spec).unwrap().into_graph();
        assert_schedule_independent(&graph, g, spec);
    }
}
