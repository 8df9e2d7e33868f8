//! Necklaces with an induced L4-bar need four dimensions: subdivide the squares,
//! represent in three, then lift.

use mvrank::rep::{
    build_complement_rep, lift_four_cycles, subdivide_four_cycles, verify_representation,
};
use mvrank::Graph;

fn main() -> mvrank::Result<()> {
    // square 0-1-2-3 with pendants on 0 and 1, bridged from 2 to the triangle 6-7-8
    let g = Graph::from_edges(
        9,
        &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 0),
            (0, 4),
            (1, 5),
            (2, 6),
            (6, 7),
            (7, 8),
            (8, 6),
        ],
    );
    let (sub, record) = subdivide_four_cycles(&g)?;
    println!("splits: {:?}", record.splits);
    let (flat, _) = build_complement_rep(&sub)?;
    println!("subdivided complement in dimension {}", flat.dim);
    let rep = lift_four_cycles(&flat, &record)?;
    println!(
        "lifted: {:?}",
        verify_representation(&g.complement(), &rep)?
    );
    Ok(())
}
