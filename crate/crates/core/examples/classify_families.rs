//! Family recognition and the induced patterns that move complement ranks.

use mvrank::families::{b_t_m, classify, s_n_3, sun};
use mvrank::graph::{structure_queries, Pattern};
use mvrank::Graph;

fn main() -> mvrank::Result<()> {
    let named = [
        ("star K1,6", Graph::star(7)),
        ("P6", Graph::path(6)),
        ("C7", Graph::cycle(7)),
        ("S^3_8", s_n_3(8)?),
        ("5-sun", sun(5)?),
        ("L4-bar", Pattern::L4Bar.graph()),
        ("B^5_3", b_t_m(5, 3)?),
        ("kite", Pattern::Kite.graph()),
        ("Petersen", Graph::cycle(5).union(&Graph::cycle(5))),
    ];
    for (name, g) in &named {
        let c = classify(g);
        println!(
            "{name:>10}: {:?}, cycles {}, binding {:?}, L4-bar {}, kite {}, C4 {}",
            c.kind,
            c.cycle_count,
            c.binding_edge,
            c.flags.has_l4bar,
            c.flags.has_kite,
            c.flags.has_c4
        );
    }

    let s = structure_queries(&s_n_3(5)?);
    println!(
        "S^3_5 pendants {:?}, cut vertices {:?}",
        s.pendants, s.blocks.cut_vertices
    );
    Ok(())
}
