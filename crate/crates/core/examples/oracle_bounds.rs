//! Certified bounds for graphs outside the families.

use mvrank::oracle::{mvr_bounds, numeric_rep_search, OracleConfig};
use mvrank::Graph;

fn main() {
    let cfg = OracleConfig {
        restarts: 20,
        ..OracleConfig::default()
    };
    let c5c = Graph::cycle(5).complement();
    if let Some(r) = numeric_rep_search(&c5c, 3, &cfg) {
        println!(
            "complement of C5 in R^3: max zero product {:.1e}, restart {}",
            r.max_zero, r.restart
        );
    }

    let petersen = Graph::from_edges(
        10,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 0),
            (0, 5),
            (1, 6),
            (2, 7),
            (3, 8),
            (4, 9),
            (5, 7),
            (7, 9),
            (9, 6),
            (6, 8),
            (8, 5),
        ],
    );
    for (name, g) in [
        ("P4", Graph::path(4)),
        ("K4 - e", Graph::complete(4).complement().complement()),
        ("Petersen", petersen),
    ] {
        let b = mvr_bounds(&g, &cfg);
        println!(
            "{name}: {} (lower by {:?}, upper by {:?} / {:?})",
            b.value, b.lower.reason, b.upper.source, b.upper.class
        );
    }
}
