//! Alexander–Fox presentation of a tangle and its persistent invariants τ and β in the
//! colored, oriented and unoriented modes.
//!
//! ```text
//! cargo run --example alexander_module
//! ```

use tangle_gate::alexander::*;
use tangle_gate::diagram::TangleDiagram;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/square.tg");
    let mut t = TangleDiagram::load(&std::fs::read_to_string(path)?)?;

    println!("{}", fox_presentation(&t, LabelingMode::Colored)?);
    for mode in [LabelingMode::Colored, LabelingMode::Oriented, LabelingMode::Unoriented] {
        println!("{:10} tau = {}, beta = {}", mode.to_string(), tau(&t, mode)?, beta(&t, mode)?);
    }

    // both invariants depend on orientation
    t.reverse_component(0);
    println!("\nfirst strand reversed:");
    println!("colored    tau = {}, beta = {}", tau(&t, LabelingMode::Colored)?, beta(&t, LabelingMode::Colored)?);
    Ok(())
}
