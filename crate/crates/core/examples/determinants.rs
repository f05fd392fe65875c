//! Link determinants and the gcd of the two closure determinants, which divides the
//! determinant of every link containing the tangle.
//!
//! ```text
//! cargo run --example determinants
//! ```

use tangle_gate::alexander::{determinant, krebes_gcd, squarefree_part};
use tangle_gate::diagram::*;
use tangle_gate::skein::bracket_at_zeta;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let r = rational_tangle(&[3, 1, 2]);
    println!("[3, 1, 2]: det N = {}, det D = {}", determinant(&numerator(&r))?, determinant(&denominator(&r))?);
    // the determinant is |bracket| at a primitive 8th root of unity
    let z = bracket_at_zeta(&numerator(&r))?;
    println!("bracket of N at zeta: {z}, norm {:?}", z.abs_norm());

    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/square.tg");
    let t = TangleDiagram::load(&std::fs::read_to_string(path)?)?;
    let g = krebes_gcd(&t)?;
    println!("\nsquare tangle: gcd(det N, det D) = {g}");

    // a virtual closure only keeps the square-free part of the gcd
    let m = all_matchings(2).into_iter().find(|m| !m.is_noncrossing()).unwrap();
    let v = close(&t, &m)?;
    println!("virtual closure {m}: det {}, square-free part of gcd {}", determinant(&v)?, squarefree_part(g));
    Ok(())
}
