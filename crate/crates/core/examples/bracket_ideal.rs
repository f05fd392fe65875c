//! The bracket ideal of a 10-crossing tangle and membership tests for links it might
//! embed in.
//!
//! ```text
//! cargo run --example bracket_ideal
//! ```

use tangle_gate::diagram::TangleDiagram;
use tangle_gate::skein::{bracket, bracket_ideal, virtual_bracket_ideal};

fn load(name: &str) -> Result<TangleDiagram, Box<dyn std::error::Error>> {
    Ok(TangleDiagram::load(&std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))?)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let t = load("krebes.tg")?;
    let i = bracket_ideal(&t)?;
    println!("I(t)   = {i}");
    println!("I_v(t) = {}", virtual_bracket_ideal(&t)?);
    println!("at a primitive 8th root of unity: {}", i.at_zeta());

    for name in ["k8_5.tg", "k6_2.tg", "k6_2-mirror.tg", "l4a1.tg", "l4a1-mirror.tg", "unknot.tg"] {
        let b = bracket(&load(name)?)?;
        let verdict = if i.contains(&b) { "may contain t" } else { "cannot contain t" };
        println!("{name:16} {verdict}");
    }
    Ok(())
}
