// Closed-form verdicts: the projective line for q < 50, and higher
// dimensions for q < 10.

use psl_sqs::constructions::{classify, Verdict};
use psl_sqs::field::prime_power;
use psl_sqs::Result;

pub fn run_example() -> Result<()> {
    for n in 2..=4u32 {
        let bound = if n == 2 { 50 } else { 10 };
        for q in 2..bound {
            if prime_power(q).is_none() {
                continue;
            }
            let line = match classify(n, q)? {
                Verdict::Families(cases) => {
                    let ids: Vec<_> = cases.iter().map(|c| c.family.id()).collect();
                    format!("families {}", ids.join(", "))
                }
                Verdict::None(reason) => format!("none ({})", reason.describe(n, q)),
            };
            println!("n = {n}, q = {q:>2}: {line}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("classification failed");
}
