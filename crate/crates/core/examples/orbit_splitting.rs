// Orbits of PSL_2(q) and PGL_2(q) on 3-subsets and 4-subsets of the
// projective line, and the subline orbit splitting when 3^d is a square.

use psl_sqs::constructions::subline_psl_orbit_unsanctioned;
use psl_sqs::{Family, ProjectiveGroup, Result};

pub fn run_example() -> Result<()> {
    for q in [7u64, 13] {
        for family in [Family::PSL, Family::PGL] {
            let g = ProjectiveGroup::standard(family, 2, q)?;
            let triples = g.orbits_on_k_subsets(3)?;
            let quads = g.orbits_on_k_subsets(4)?;
            println!(
                "{}_2({q}): 3-subset orbits {:?}, 4-subset orbits {:?}",
                family.name(),
                triples.sizes(),
                quads.sizes()
            );
        }
    }

    let split = subline_psl_orbit_unsanctioned(2)?;
    println!(
        "subline in PG(1,9): PSL orbit {} blocks, PGL orbit {} blocks",
        split.blocks.len(),
        split.pgl_orbit_size
    );
    assert!(!split.coincides_with_pgl_orbit);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("orbit example failed");
}
