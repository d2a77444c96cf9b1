//! Shared fixtures for the criterion benches: representative graphs sized so
//! each kernel's cost is visible without making `cargo bench` take minutes.

use slq_core::families;
use slq_core::Graph;

/// Instances for the float eigensolver (dense Jacobi sweeps).
pub fn jacobi_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle(32)", families::cycle(32).unwrap()),
        ("complete(24)", families::complete(24).unwrap()),
        ("u1(20,17)", families::u1(20, 17).unwrap()),
    ]
}

/// Instances for exact characteristic-polynomial extraction.
pub fn charpoly_instances() -> Vec<(&'static str, Graph)> {
    vec![
        ("cycle(20)", families::cycle(20).unwrap()),
        ("u1(9,8)", families::u1(9, 8).unwrap()),
        ("tstar(21,3)", families::t_star(21, 3).unwrap()),
    ]
}

/// A graph whose top-k sum sits well below the conjectured bound, so the
/// certification path exercises isolation at its default widths.
pub fn certify_instance() -> Graph {
    families::theta_graph(5, 5, 3).unwrap()
}

/// A mid-sized tree for canonical-form timing.
pub fn canon_instance() -> Graph {
    families::t_star(11, 2).unwrap()
}

#[cfg(test)]
mod tests {
    #[test]
    fn fixtures_build() {
        assert_eq!(super::jacobi_instances().len(), 3);
        assert_eq!(super::charpoly_instances().len(), 3);
        assert_eq!(super::certify_instance().vertex_count(), 7);
        assert_eq!(super::canon_instance().vertex_count(), 11);
    }
}
