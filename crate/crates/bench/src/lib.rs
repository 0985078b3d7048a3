//! Workloads shared by the criterion benchmarks in `benches/`.

use cofactor_core::cofactor::Point;
use cofactor_core::graph::{edge, EdgeSet, Graph};

/// `K_n` minus the edge `0-1`, a rigid graph whose closure is all of `K_n`.
pub fn complete_minus_edge(n: usize) -> EdgeSet {
    let mut e = Graph::complete(n).edges().clone();
    e.remove(&edge(0, 1));
    e
}

/// Fixed integer placement for the bad-map evaluation.
pub fn six_points() -> [Point; 6] {
    [
        Point::int(3, 7),
        Point::int(-5, 2),
        Point::int(11, -4),
        Point::int(1, 13),
        Point::int(-8, -9),
        Point::int(6, 17),
    ]
}
