use crate::graph::{bits, Graph};

/// Independence number with a maximum independent set as witness.
pub fn independence_number(g: &Graph) -> (usize, Vec<usize>) {
    let mut best = 0u64;
    branch(g, g.vertex_mask(), 0, &mut best);
    (best.count_ones() as usize, bits(best).collect())
}

fn branch(g: &Graph, cand: u64, chosen: u64, best: &mut u64) {
    if cand == 0 {
        if chosen.count_ones() > best.count_ones() {
            *best = chosen;
        }
        return;
    }
    if chosen.count_ones() + cand.count_ones() <= best.count_ones() {
        return;
    }
    // vertices with no candidate neighbors always go in
    let free = bits(cand)
        .filter(|&v| g.neighbor_mask(v) & cand == 0)
        .fold(0u64, |m, v| m | 1u64 << v);
    if free != 0 {
        branch(g, cand & !free, chosen | free, best);
        return;
    }
    let v = bits(cand)
        .max_by_key(|&v| (g.neighbor_mask(v) & cand).count_ones())
        .expect("nonempty");
    branch(
        g,
        cand & !(1u64 << v) & !g.neighbor_mask(v),
        chosen | 1u64 << v,
        best,
    );
    branch(g, cand & !(1u64 << v), chosen, best);
}
