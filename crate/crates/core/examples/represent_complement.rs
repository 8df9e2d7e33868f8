//! Build, verify and replay an exact representation of a family complement.

use mvrank::corpus::random_book;
use mvrank::rep::{build_complement_rep, replay, verify_representation};
use mvrank::Graph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> mvrank::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let graphs = [Graph::path(7), Graph::cycle(9), random_book(&mut rng, 11)];
    for g in &graphs {
        let (rep, trace) = build_complement_rep(g)?;
        let verdict = verify_representation(&g.complement(), &rep)?;
        println!(
            "{g}: dimension {}, {} steps, {verdict:?}",
            rep.dim,
            trace.steps.len()
        );
        assert_eq!(replay(&trace)?, rep);
    }

    let (rep, _) = build_complement_rep(&Graph::path(4))?;
    println!("{}", serde_json::to_string(&rep).expect("serializes"));
    Ok(())
}
