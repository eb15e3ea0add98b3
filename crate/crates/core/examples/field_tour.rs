// Arithmetic in GF(9) and GF(27): the chosen modulus and primitive
// element, a few products, squares, and the Frobenius map.

use psl_sqs::{Field, Result};

pub fn run_example() -> Result<()> {
    for (p, d) in [(3, 2), (3, 3), (7, 1)] {
        let f = Field::new(p, d)?;
        println!("GF({}): modulus coefficients {:?}, primitive element {}", f.q(), f.modulus(), f.generator().code());
        let squares = f.elements().filter(|&a| !a.is_zero() && f.is_square(a).unwrap_or(false)).count();
        println!("  nonzero squares: {squares} of {}", f.q() - 1);
        let g = f.generator();
        let g2 = f.mul(g, g);
        println!("  g^2 = {}, g^-1 = {}, frob(g) = {}", g2.code(), f.inv(g)?.code(), f.frobenius(g, 1).code());
    }

    let f13 = Field::new(13, 1)?;
    let a = f13.element(5)?;
    let b = f13.element(11)?;
    assert_eq!(f13.mul(a, b).code(), 3);
    assert_eq!(f13.div(f13.mul(a, b), b)?, a);

    let f19 = Field::new(19, 1)?;
    let w = f19.primitive_sixth_root()?;
    assert_eq!(f19.order(w)?, 6);
    println!("GF(19) primitive sixth root of unity: {}", w.code());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("field tour failed");
}
