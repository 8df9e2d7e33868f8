//! The same questions for mr+: suns are mr+-critical but not mvr-critical.

use mvrank::criticality::{check_criticality, msr_criticality};
use mvrank::families::sun;
use mvrank::rank::{mr_plus_exact, mvr_exact};

fn main() -> mvrank::Result<()> {
    for n in 3..=6 {
        let g = sun(n)?;
        let msr = msr_criticality(&g)?;
        let mvr = check_criticality(&g)?;
        println!(
            "{n}-sun: mvr {} / mr+ {}; vector critical for mvr {}, for mr+ {}",
            mvr_exact(&g).value,
            mr_plus_exact(&g).value,
            mvr.vector_critical,
            msr.vector_critical
        );
    }
    Ok(())
}
