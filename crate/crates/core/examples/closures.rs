//! Enumerate boundary matchings of a 4-tangle and the bracket of every closure,
//! including the virtual closure by the crossing matching.
//!
//! ```text
//! cargo run --example closures
//! ```

use tangle_gate::diagram::*;
use tangle_gate::skein::{bracket, tl_decompose};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/square.tg");
    let t = TangleDiagram::load(&std::fs::read_to_string(path)?)?;

    println!("noncrossing matchings of 6 points: {}", catalan_matchings(3).len());
    println!("all matchings of 6 points: {}", all_matchings(3).len());

    for m in all_matchings(t.n) {
        let l = close(&t, &m)?;
        println!("{m}: {} component(s), bracket {}", l.components.len(), bracket(&l)?);
    }

    // every closure is a combination of the flat tangles' closures
    println!("\nflat decomposition:\n{}", tl_decompose(&t, 24)?);
    Ok(())
}
