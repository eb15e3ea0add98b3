// Builds one design from each family and checks it from scratch.

use psl_sqs::constructions::{build_sixth_root, build_split_subline, build_subline, preserving_overgroups};
use psl_sqs::design::verify;
use psl_sqs::{Family, Result};

pub fn run_example() -> Result<()> {
    let built = [
        build_subline(3, Family::PSL)?,
        build_sixth_root(19)?,
        build_split_subline(2)?,
    ];
    for c in &built {
        let report = verify(&c.design);
        assert!(report.is_valid);
        let over = preserving_overgroups(&c.design, c.q as u64)?;
        println!(
            "{} at q = {}: {} blocks from orbits {:?}, preserved by {}",
            c.family.id(),
            c.q,
            report.b,
            c.orbit_sizes,
            over.maximal.name()
        );
        for base in &c.base_blocks {
            println!("  base block {base}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("construction failed");
}
