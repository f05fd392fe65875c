//! Build rational tangles from continued fractions, close them, and print the diagrams.
//!
//! ```text
//! cargo run --example rational_tangles
//! ```

use tangle_gate::alexander::determinant;
use tangle_gate::diagram::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for seq in [vec![3], vec![2, 2], vec![3, 1, 2], vec![2, 2, 1, 1, 2]] {
        let t = rational_tangle(&seq);
        let (n, d) = (numerator(&t), denominator(&t));
        println!(
            "{seq:?}: {} crossings, N has {} component(s) and det {}, D has {} component(s) and det {}",
            t.crossing_count(),
            n.components.len(),
            determinant(&n)?.abs(),
            d.components.len(),
            determinant(&d)?.abs(),
        );
    }

    // products, rotations and mirrors compose like the tangle operations they name
    let t = tangle_product(&crossing_tangle(true), &rotate(&vertical_twist(2)))?;
    println!("\n[1] * rot([2]) as a diagram:\n{}", t.canonical_relabel());
    let m = mirror(&t);
    println!("its mirror closes to a link with det {}", determinant(&numerator(&m))?.abs());
    Ok(())
}
