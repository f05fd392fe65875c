//! Smith normal form of a presentation over Q[x^±1], the elementary divisors it yields,
//! and the evaluation of τβ at x = −1.
//!
//! ```text
//! cargo run --example smith_form
//! ```

use tangle_gate::alexander::*;
use tangle_gate::linalg::{smith_normal_form, to_rational_laurent};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/presentations/synthetic-1.pres");
    let p = ModulePresentation::parse(&std::fs::read_to_string(path)?)?;
    println!("{p}");

    let snf = smith_normal_form(&to_rational_laurent(&p.relations, "x")?);
    let diag: Vec<String> = snf.diagonal.iter().map(|d| d.to_string()).collect();
    println!("diagonal: {}", diag.join(", "));

    let (t, b) = (tau_of(&p)?, beta_of(&p, LabelingMode::Oriented)?);
    println!("tau = {t}\nbeta = {b}");

    let u = p.specialize(LabelingMode::Unoriented)?;
    println!("at x = -1: tau = {}, beta = {}", tau_of(&u)?, beta_of(&u, LabelingMode::Unoriented)?);
    Ok(())
}
