//! Strong and Cartesian graph products with layer/projection accessors.
//!
//! Product vertex (x, y) has id `x * n2 + y`; all layer, slice, and
//! projection helpers work through that fixed numbering so certificates are
//! reproducible across runs.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::set::VertexSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ProductKind {
    Strong,
    Cartesian,
}

impl ProductKind {
    #[must_use]
    pub fn label(self) -> &'static str {
        match self {
            ProductKind::Strong => "strong",
            ProductKind::Cartesian => "cartesian",
        }
    }
}

/// Factor axis selector: `G1` is the first coordinate, `G2` the second.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Axis {
    G1,
    G2,
}

/// A materialized product graph together with its factors and the
/// (x, y) ↦ x·n₂+y vertex numbering.
#[derive(Clone, Debug)]
pub struct ProductGraph {
    graph: Graph,
    g1: Graph,
    g2: Graph,
    kind: ProductKind,
    factor_names: (String, String),
}

fn product(g1: &Graph, g2: &Graph, kind: ProductKind) -> ProductGraph {
    let (n1, n2) = (g1.n(), g2.n());
    let id = |x: Vertex, y: Vertex| x * n2 + y;
    let mut edges = Vec::new();
    for x in 0..n1 {
        for (y1, y2) in g2.edges() {
            edges.push((id(x, y1), id(x, y2)));
        }
    }
    for (x1, x2) in g1.edges() {
        for y in 0..n2 {
            edges.push((id(x1, y), id(x2, y)));
        }
    }
    if kind == ProductKind::Strong {
        for (x1, x2) in g1.edges() {
            for (y1, y2) in g2.edges() {
                edges.push((id(x1, y1), id(x2, y2)));
                edges.push((id(x1, y2), id(x2, y1)));
            }
        }
    }
    let name1 = g1.name().unwrap_or("G1").to_string();
    let name2 = g2.name().unwrap_or("G2").to_string();
    let graph = Graph::from_edges(n1 * n2, edges)
        .expect("product edges are in range and simple by construction")
        .with_name(format!("{}({},{})", kind.label(), name1, name2));
    ProductGraph {
        graph,
        g1: g1.clone(),
        g2: g2.clone(),
        kind,
        factor_names: (name1, name2),
    }
}

/// G₁ ⊠ G₂: vertices adjacent when each coordinate is equal or adjacent and
/// the pairs differ.
pub fn strong_product(g1: &Graph, g2: &Graph) -> ProductGraph {
    product(g1, g2, ProductKind::Strong)
}

/// G₁ □ G₂: exactly one coordinate equal, the other adjacent.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> ProductGraph {
    product(g1, g2, ProductKind::Cartesian)
}

impl ProductGraph {
    #[must_use]
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    #[must_use]
    pub fn into_graph(self) -> Graph {
        self.graph
    }

    #[must_use]
    pub fn factor1(&self) -> &Graph {
        &self.g1
    }

    #[must_use]
    pub fn factor2(&self) -> &Graph {
        &self.g2
    }

    #[must_use]
    pub fn n1(&self) -> usize {
        self.g1.n()
    }

    #[must_use]
    pub fn n2(&self) -> usize {
        self.g2.n()
    }

    #[must_use]
    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    #[must_use]
    pub fn factor_names(&self) -> (&str, &str) {
        (&self.factor_names.0, &self.factor_names.1)
    }

    /// Product vertex id of (x, y).
    pub fn vertex_id(&self, x: Vertex, y: Vertex) -> Result<Vertex> {
        if x >= self.n1() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n1(),
            });
        }
        if y >= self.n2() {
            return Err(Error::VertexOutOfRange {
                vertex: y,
                n: self.n2(),
            });
        }
        Ok(x * self.n2() + y)
    }

    /// Factor coordinates (x, y) of a product vertex.
    pub fn coords(&self, v: Vertex) -> Result<(Vertex, Vertex)> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.graph.n(),
            });
        }
        Ok((v / self.n2(), v % self.n2()))
    }

    /// The G₁-layer through second coordinate `y`: {(x, y) : x ∈ V(G₁)}.
    /// Its induced subgraph is an isomorphic copy of G₁.
    pub fn layer_g1(&self, y: Vertex) -> Result<VertexSet> {
        if y >= self.n2() {
            return Err(Error::VertexOutOfRange {
                vertex: y,
                n: self.n2(),
            });
        }
        VertexSet::from_members(self.graph.n(), (0..self.n1()).map(|x| x * self.n2() + y))
    }

    /// The G₂-layer through first coordinate `x`: {(x, y) : y ∈ V(G₂)}.
    pub fn layer_g2(&self, x: Vertex) -> Result<VertexSet> {
        if x >= self.n1() {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                n: self.n1(),
            });
        }
        VertexSet::from_members(self.graph.n(), (0..self.n2()).map(|y| x * self.n2() + y))
    }

    /// Image of a product vertex set under the coordinate projection; the
    /// result indexes the chosen factor.
    pub fn project(&self, s: &VertexSet, axis: Axis) -> Result<VertexSet> {
        s.check_host(self.graph.n())?;
        match axis {
            Axis::G1 => VertexSet::from_members(self.n1(), s.iter().map(|v| v / self.n2())),
            Axis::G2 => VertexSet::from_members(self.n2(), s.iter().map(|v| v % self.n2())),
        }
    }

    /// ₓS: the part of `s` inside the G₂-layer through `x`, as product ids.
    pub fn slice_through_x(&self, s: &VertexSet, x: Vertex) -> Result<VertexSet> {
        s.check_host(self.graph.n())?;
        let mut out = self.layer_g2(x)?;
        out.intersect_with(s);
        Ok(out)
    }

    /// S_y: the part of `s` inside the G₁-layer through `y`, as product ids.
    pub fn slice_through_y(&self, s: &VertexSet, y: Vertex) -> Result<VertexSet> {
        s.check_host(self.graph.n())?;
        let mut out = self.layer_g1(y)?;
        out.intersect_with(s);
        Ok(out)
    }

    /// Comment lines recording the construction, for edge-list files.
    #[must_use]
    pub fn description_comments(&self) -> Vec<String> {
        vec![
            format!(
                "{} product of {} (n1={}) and {} (n2={})",
                self.kind.label(),
                self.factor_names.0,
                self.n1(),
                self.factor_names.1,
                self.n2()
            ),
            "vertex (x, y) has id x*n2 + y".to_string(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn strong_of_edges_is_clique() {
        let k2 = complete(2).unwrap();
        let p = strong_product(&k2, &k2);
        assert_eq!(p.graph().n(), 4);
        assert_eq!(p.graph().m(), 6);
        assert_eq!(p.graph().is_k_regular(), Some(3));
    }

    #[test]
    fn strong_c5_c5_degree_and_edges() {
        let c5 = cycle(5).unwrap();
        let p = strong_product(&c5, &c5);
        assert_eq!(p.graph().n(), 25);
        assert_eq!(p.graph().is_k_regular(), Some(8));
        assert_eq!(p.graph().m(), 100);
    }

    #[test]
    fn cartesian_examples() {
        let k2 = complete(2).unwrap();
        let c4 = cartesian_product(&k2, &k2);
        assert_eq!(c4.graph().n(), 4);
        assert_eq!(c4.graph().is_k_regular(), Some(2));
        assert_eq!(c4.graph().m(), 4);

        let c5 = cycle(5).unwrap();
        let p = cartesian_product(&c5, &c5);
        assert_eq!(p.graph().is_k_regular(), Some(4));

        let grid = cartesian_product(&path(2).unwrap(), &path(3).unwrap());
        assert_eq!(grid.graph().n(), 6);
        assert_eq!(grid.graph().m(), 7);
    }

    #[test]
    fn edge_count_identity() {
        let g1 = petersen_like();
        let g2 = cycle(6).unwrap();
        let p = strong_product(&g1, &g2);
        let expect = g1.n() * g2.m() + g2.n() * g1.m() + 2 * g1.m() * g2.m();
        assert_eq!(p.graph().m(), expect);
    }

    fn petersen_like() -> Graph {
        crate::named::petersen()
    }

    #[test]
    fn layers_and_numbering() {
        let c5 = cycle(5).unwrap();
        let p = strong_product(&c5, &c5);
        assert_eq!(p.layer_g1(0).unwrap().to_vec(), vec![0, 5, 10, 15, 20]);
        assert_eq!(p.layer_g2(1).unwrap().to_vec(), vec![5, 6, 7, 8, 9]);
        assert_eq!(p.vertex_id(2, 3).unwrap(), 13);
        assert_eq!(p.coords(13).unwrap(), (2, 3));
        assert!(p.layer_g1(5).is_err());
    }

    #[test]
    fn layer_induces_factor_copy() {
        let c5 = cycle(5).unwrap();
        let c6 = cycle(6).unwrap();
        let p = strong_product(&c5, &c6);
        for y in 0..6 {
            for x1 in 0..5 {
                for x2 in 0..5 {
                    let u = p.vertex_id(x1, y).unwrap();
                    let v = p.vertex_id(x2, y).unwrap();
                    assert_eq!(p.graph().has_edge(u, v), c5.has_edge(x1, x2));
                }
            }
        }
    }

    #[test]
    fn projections() {
        let c5 = cycle(5).unwrap();
        let p = strong_product(&c5, &c5);
        let s = VertexSet::from_members(25, [0, 1, 2]).unwrap();
        assert_eq!(p.project(&s, Axis::G1).unwrap().to_vec(), vec![0]);
        assert_eq!(p.project(&s, Axis::G2).unwrap().to_vec(), vec![0, 1, 2]);
        let all = VertexSet::full(25);
        assert_eq!(p.project(&all, Axis::G1).unwrap().len(), 5);
    }

    #[test]
    fn slices() {
        let c5 = cycle(5).unwrap();
        let p = strong_product(&c5, &c5);
        let s = VertexSet::from_members(25, [0, 1, 7, 20]).unwrap();
        assert_eq!(p.slice_through_x(&s, 0).unwrap().to_vec(), vec![0, 1]);
        assert_eq!(p.slice_through_x(&s, 1).unwrap().to_vec(), vec![7]);
        assert_eq!(p.slice_through_y(&s, 0).unwrap().to_vec(), vec![0, 20]);
    }

    #[test]
    fn cartesian_edges_subset_of_strong() {
        let c5 = cycle(5).unwrap();
        let c4 = cycle(4).unwrap();
        let s = strong_product(&c5, &c4);
        let c = cartesian_product(&c5, &c4);
        for (u, v) in c.graph().edges() {
            assert!(s.graph().has_edge(u, v));
        }
    }

    #[test]
    fn strong_adjacency_rule_pointwise() {
        let c4 = cycle(4).unwrap();
        let c5 = cycle(5).unwrap();
        let p = strong_product(&c4, &c5);
        for u in 0..20 {
            for v in 0..20 {
                if u == v {
                    continue;
                }
                let (x1, y1) = p.coords(u).unwrap();
                let (x2, y2) = p.coords(v).unwrap();
                let rule = (x1 == x2 && c5.has_edge(y1, y2))
                    || (y1 == y2 && c4.has_edge(x1, x2))
                    || (c4.has_edge(x1, x2) && c5.has_edge(y1, y2));
                assert_eq!(p.graph().has_edge(u, v), rule, "pair ({u},{v})");
            }
        }
    }
}
