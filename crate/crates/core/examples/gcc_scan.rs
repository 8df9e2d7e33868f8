//! Check mvr(G) + mvr(complement) <= n + 2 over every graph on up to six vertices.

use mvrank::corpus::atlas;
use mvrank::graph::write_graph6;
use mvrank::oracle::{gcc_check, gcc_scan, OracleConfig};
use mvrank::Graph;

fn main() {
    let cfg = OracleConfig::default();
    let p4 = gcc_check(&Graph::path(4), &cfg);
    println!(
        "P4: {:?}, sum {} (equality {})",
        p4.status, p4.sum_hi, p4.equality
    );

    for n in 1..=6 {
        let lines: Vec<String> = atlas(n).iter().map(write_graph6).collect();
        let r = gcc_scan(&lines, &cfg);
        println!(
            "n = {n}: {} checked, {} verified, {} flagged, {} equality cases, {} complement critical",
            r.graphs_checked,
            r.gcc_verified,
            r.flagged.len(),
            r.equality_cases.len(),
            r.complement_critical_found.len()
        );
    }
}
