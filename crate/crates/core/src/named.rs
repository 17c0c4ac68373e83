//! Named cubic graphs embedded as literal edge data.
//!
//! Each constructor validates its data on the spot (vertex count, regularity,
//! connectivity, girth) so a corrupted table cannot silently produce wrong
//! acceptance graphs.

use crate::graph::Graph;
use crate::invariants::{girth, GirthValue};

fn checked(name: &str, n: usize, k: usize, want_girth: usize, edges: &[(usize, usize)]) -> Graph {
    let g = Graph::from_edges(n, edges.iter().copied())
        .unwrap_or_else(|e| panic!("{name} edge table is malformed: {e}"))
        .with_name(name);
    assert_eq!(g.is_k_regular(), Some(k), "{name} must be {k}-regular");
    assert!(g.is_connected(), "{name} must be connected");
    assert_eq!(
        girth(&g),
        GirthValue::Finite(want_girth),
        "{name} must have girth {want_girth}"
    );
    g
}

/// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9 (5-7-9-6-8),
/// spokes i — i+5. 10 vertices, 15 edges, 3-regular, girth 5.
#[must_use]
pub fn petersen() -> Graph {
    checked(
        "petersen",
        10,
        3,
        5,
        &[
            (0, 1),
            (0, 4),
            (0, 5),
            (1, 2),
            (1, 6),
            (2, 3),
            (2, 7),
            (3, 4),
            (3, 8),
            (4, 9),
            (5, 7),
            (5, 8),
            (6, 8),
            (6, 9),
            (7, 9),
        ],
    )
}

/// Heawood graph: 14-cycle 0..13 plus the seven chords (0,5), (1,10), (2,7),
/// (3,12), (4,9), (6,11), (8,13). 14 vertices, 21 edges, 3-regular, girth 6.
#[must_use]
pub fn heawood() -> Graph {
    checked(
        "heawood",
        14,
        3,
        6,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 11),
            (11, 12),
            (12, 13),
            (0, 13),
            (0, 5),
            (1, 10),
            (2, 7),
            (3, 12),
            (4, 9),
            (6, 11),
            (8, 13),
        ],
    )
}

/// McGee graph: 24-cycle 0..23 plus twelve chords — (0,12), (3,15), (6,18),
/// (9,21) spanning the ring, and (1,8), (4,11), (7,14), (10,17), (13,20),
/// (16,23), (2,19), (5,22). 24 vertices, 36 edges, 3-regular, girth 7.
#[must_use]
pub fn mcgee() -> Graph {
    checked(
        "mcgee",
        24,
        3,
        7,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 8),
            (8, 9),
            (9, 10),
            (10, 11),
            (11, 12),
            (12, 13),
            (13, 14),
            (14, 15),
            (15, 16),
            (16, 17),
            (17, 18),
            (18, 19),
            (19, 20),
            (20, 21),
            (21, 22),
            (22, 23),
            (0, 23),
            (0, 12),
            (3, 15),
            (6, 18),
            (9, 21),
            (1, 8),
            (4, 11),
            (7, 14),
            (10, 17),
            (13, 20),
            (16, 23),
            (2, 19),
            (5, 22),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn petersen_counts() {
        let g = petersen();
        assert_eq!((g.n(), g.m()), (10, 15));
        assert_eq!(g.neighbors(0).unwrap().to_vec(), vec![1, 4, 5]);
    }

    #[test]
    fn heawood_counts() {
        let g = heawood();
        assert_eq!((g.n(), g.m()), (14, 21));
    }

    #[test]
    fn mcgee_counts() {
        let g = mcgee();
        assert_eq!((g.n(), g.m()), (24, 36));
    }
}
