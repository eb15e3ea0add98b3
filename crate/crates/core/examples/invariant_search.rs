// Exhaustive search for PSL-invariant Steiner quadruple systems by exact
// cover over orbits, for a few small parameter pairs.

use psl_sqs::constructions::invariant_sqs_search;
use psl_sqs::design::verify;
use psl_sqs::Result;

pub fn run_example() -> Result<()> {
    for (n, q) in [(2, 7), (2, 9), (2, 13), (4, 3)] {
        let report = invariant_sqs_search(n, q)?;
        println!(
            "PSL_{n}({q}): {} triple orbits, {} quadruple orbits, {} solution(s)",
            report.incidence.triples.count(),
            report.incidence.quadruples.count(),
            report.solutions.len()
        );
        for d in &report.designs {
            assert!(verify(d).is_valid);
        }
    }
    print!("{}", invariant_sqs_search(2, 9)?.render());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("search failed");
}
