// Writes a design to the text format, reads it back, and derives it at
// the point at infinity.

use psl_sqs::constructions::build_sixth_root;
use psl_sqs::design::{derived, design_from_str, design_to_string, verify};
use psl_sqs::Result;

pub fn run_example() -> Result<()> {
    let sqs = build_sixth_root(7)?.design;
    let text = design_to_string(&sqs);
    print!("{text}");

    let back = design_from_str(&text)?;
    assert_eq!(back, sqs);

    let sts = derived(&back, 7)?;
    let report = verify(&sts);
    println!("derived at 7: {} with {} blocks, valid: {}", sts.parameters(), report.b, report.is_valid);

    let mut broken = text.replacen("0 1", "0 2", 1);
    broken.push_str("0 1 2\n");
    match design_from_str(&broken) {
        Ok(_) => println!("unexpectedly parsed"),
        Err(e) => println!("rejected edited file: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("design file example failed");
}
