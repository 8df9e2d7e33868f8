//! Vector and complement criticality by deletion sweep and by family structure.

use mvrank::criticality::{analyze_criticality, check_criticality, structural_criticality};
use mvrank::families::{b_t_m, s_n_3};
use mvrank::Graph;

fn main() -> mvrank::Result<()> {
    let p4 = check_criticality(&Graph::path(4))?;
    for o in &p4.per_vertex {
        println!(
            "P4 - {}: mvr {}, complement {}, sum lowered {}",
            o.vertex, o.rank, o.complement_rank, o.decreased
        );
    }

    for (name, g) in [
        ("C3", Graph::cycle(3)),
        ("C5", Graph::cycle(5)),
        ("K1,6", Graph::star(7)),
        ("S^3_8", s_n_3(8)?),
        ("B^4_3", b_t_m(4, 3)?),
        ("B^5_2", b_t_m(5, 2)?),
    ] {
        let s = structural_criticality(&g)?;
        let a = analyze_criticality(&g)?;
        println!(
            "{name:>6}: vector {}, complement {}, agree {}, basis {:?}, witness {:?}",
            a.vector_critical, a.complement_critical, a.agree, s.basis, s.witness
        );
    }
    Ok(())
}
