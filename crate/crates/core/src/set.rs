//! Dense vertex set indexed against a fixed host graph size.

use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Vertex;

/// A set of vertex ids of one host graph; every member is `< host_n()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    /// Empty set over a host graph with `host_n` vertices.
    #[must_use]
    pub fn new(host_n: usize) -> Self {
        Self {
            bits: FixedBitSet::with_capacity(host_n),
        }
    }

    /// Builds a set from members, rejecting out-of-range ids.
    pub fn from_members<I: IntoIterator<Item = Vertex>>(host_n: usize, members: I) -> Result<Self> {
        let mut s = Self::new(host_n);
        for v in members {
            if v >= host_n {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    n: host_n,
                });
            }
            s.bits.insert(v);
        }
        Ok(s)
    }

    /// The full vertex set {0, .., host_n-1}.
    #[must_use]
    pub fn full(host_n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(host_n);
        bits.insert_range(..);
        Self { bits }
    }

    #[must_use]
    pub fn host_n(&self) -> usize {
        self.bits.len()
    }

    #[must_use]
    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    #[must_use]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[must_use]
    pub fn contains(&self, v: Vertex) -> bool {
        v < self.bits.len() && self.bits.contains(v)
    }

    /// Inserts `v`; panics if out of range (internal callers guarantee range).
    pub fn insert(&mut self, v: Vertex) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: Vertex) {
        self.bits.set(v, false);
    }

    pub fn clear(&mut self) {
        self.bits.clear();
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.bits.ones()
    }

    /// Members as a sorted vector.
    #[must_use]
    pub fn to_vec(&self) -> Vec<Vertex> {
        self.bits.ones().collect()
    }

    #[must_use]
    pub fn min_member(&self) -> Option<Vertex> {
        self.bits.ones().next()
    }

    pub fn union_with(&mut self, other: &Self) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &Self) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &Self) {
        self.bits.difference_with(&other.bits);
    }

    #[must_use]
    pub fn intersection_count(&self, other: &Self) -> usize {
        self.bits.intersection_count(&other.bits)
    }

    #[must_use]
    pub fn difference_count(&self, other: &Self) -> usize {
        self.bits.difference_count(&other.bits)
    }

    #[must_use]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    #[must_use]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// Lexicographic order on the ascending member sequences; total order
    /// used for deterministic witness tie-breaking.
    #[must_use]
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) => match x.cmp(&y) {
                    Ordering::Equal => continue,
                    ord => return ord,
                },
            }
        }
    }

    /// Checks this set against a graph size, for operations taking caller sets.
    pub fn check_host(&self, graph_n: usize) -> Result<()> {
        if self.host_n() == graph_n {
            Ok(())
        } else {
            Err(Error::HostMismatch {
                set_n: self.host_n(),
                graph_n,
            })
        }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexSet({self})")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}
