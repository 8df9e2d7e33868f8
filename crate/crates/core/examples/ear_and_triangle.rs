//! Grow representations by closing a long ear and by hanging a triangle.

use mvrank::rep::{attach_triangle, build_complement_rep, close_ear, verify_representation};
use mvrank::Graph;

fn main() -> mvrank::Result<()> {
    // complement of C_n from the complement of the path C_n - (n-1)
    for n in [5, 8, 13] {
        let (base, _) = build_complement_rep(&Graph::path(n - 1))?;
        let (rep, report) = close_ear(&Graph::cycle(n), &base, n - 1)?;
        let ok = verify_representation(&Graph::cycle(n).complement(), &rep)?.is_accepted();
        println!(
            "C{n}: t = {} after {} tries ({} constraints), verified {ok}",
            report.t, report.tried, report.constraints
        );
    }

    // P5 plus a triangle hanging at its middle vertex
    let mut edges = Graph::path(5).edges();
    edges.extend([(2, 5), (2, 6), (5, 6)]);
    let g = Graph::from_edges(7, &edges);
    let (base, _) = build_complement_rep(&Graph::path(5))?;
    let rep = attach_triangle(&g, &base, 5, 6)?;
    println!(
        "triangle attached: {:?}",
        verify_representation(&g.complement(), &rep)?
    );
    Ok(())
}
