// Stabilizers of a few 4-subsets of PG(1,9) under PSL_2(9), and how each
// stabilizer permutes the four points of its block.

use psl_sqs::design::Block;
use psl_sqs::{stabilizer_action_on_block, Family, ProjectiveGroup, Result};

pub fn run_example() -> Result<()> {
    let q = 9;
    let psl = ProjectiveGroup::standard(Family::PSL, 2, q)?;
    let order = psl.order().expect("standard group has a known order");
    for pts in [vec![0, 1, 2, 9], vec![0, 1, 3, 9], vec![0, 1, 4, 5]] {
        let block = Block::new(pts)?;
        let stab = psl.stabilizer(&block, order)?;
        let action = stabilizer_action_on_block(&psl, &stab.elements, &block)?;
        println!(
            "{block}: orbit {}, stabilizer {}, induced group of size {}{}",
            order / stab.order,
            stab.order,
            action.size(),
            if action.is_full_symmetric() { " (all of S4)" } else { "" }
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("stabilizer example failed");
}
