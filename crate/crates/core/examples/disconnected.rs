//! Complement criticality of a disjoint union from its components.

use mvrank::criticality::{check_criticality, disconnected_rule};
use mvrank::Graph;

fn main() -> mvrank::Result<()> {
    for g in [
        Graph::empty(1).union(&Graph::complete(2)),
        Graph::path(4).union(&Graph::star(5)),
        Graph::star(5).union(&Graph::cycle(5)),
        Graph::path(5).union(&Graph::path(4)),
    ] {
        let rule = disconnected_rule(&g)?;
        let sweep = check_criticality(&g)?;
        println!(
            "{g}: rule says {}, sweep says {} ({:?})",
            rule.complement_critical, sweep.complement_critical, rule.basis
        );
    }
    Ok(())
}
