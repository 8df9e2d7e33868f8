//! Read and write graph6 and edge lists; malformed input reports a byte offset.

use mvrank::graph::{parse_edge_list, parse_graph6, write_edge_list, write_graph6};
use mvrank::Graph;

fn main() -> mvrank::Result<()> {
    let c5 = Graph::cycle(5);
    let text = write_graph6(&c5);
    println!("C5 as graph6: {text}");
    assert_eq!(parse_graph6(&text)?, c5);

    let edges = write_edge_list(&Graph::path(3));
    print!("P3 as an edge list:\n{edges}");
    assert_eq!(parse_edge_list(&edges)?, Graph::path(3));

    for bad in ["", "D", "Bx", "C~~"] {
        match parse_graph6(bad) {
            Ok(g) => println!("{bad:?} parsed as {g}"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}
