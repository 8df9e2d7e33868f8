//! Exact mvr and mr+ from the rule engine, with replayable derivations.

use mvrank::families::{b_t_m, sun};
use mvrank::rank::{mr_plus_exact, mvr_exact, replay, tree_cover_count, Derivation};
use mvrank::Graph;

fn show(d: &Derivation, depth: usize) {
    println!(
        "{}{} by {:?} on {}",
        "  ".repeat(depth),
        d.value,
        d.rule,
        d.graph
    );
    for c in &d.children {
        show(c, depth + 1);
    }
}

fn main() -> mvrank::Result<()> {
    for (name, g) in [
        ("P5", Graph::path(5)),
        ("complement of C6", Graph::cycle(6).complement()),
        ("B^4_3", b_t_m(4, 3)?),
        ("P4 + K1", Graph::path(4).union(&Graph::empty(1))),
        ("C5 join K2", Graph::cycle(5).join(&Graph::complete(2))),
    ] {
        let r = mvr_exact(&g);
        println!("mvr({name}) = {}", r.value);
        show(&r.trace, 1);
        assert_eq!(replay(&r.trace)?, r.value);
    }

    let g = Graph::path(4).union(&Graph::empty(2));
    println!("mr+(P4 + 2K1) = {}", mr_plus_exact(&g).value);

    // necklace formula through a tree cover: mvr = n - (c + 1)
    let s = sun(4)?;
    let cover = tree_cover_count(&s)?;
    println!(
        "4-sun: {} induced trees {:?}, mvr {}",
        cover.count,
        cover.parts,
        mvr_exact(&s).value
    );
    Ok(())
}
