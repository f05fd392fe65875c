//! Decide whether a tangle can possibly sit inside a link by running every applicable
//! obstruction.
//!
//! ```text
//! cargo run --example embedding_check
//! ```

use tangle_gate::alexander::{check_embedding_obstruction, colors_compatible, LabelingMode};
use tangle_gate::diagram::TangleDiagram;

fn load(name: &str) -> Result<TangleDiagram, Box<dyn std::error::Error>> {
    Ok(TangleDiagram::load(&std::fs::read_to_string(format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR")))?)?)
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let square = load("square.tg")?;
    for link in ["unknot.tg", "hopf.tg", "unlink2.tg", "square-d.tg", "square-n.tg"] {
        let l = load(link)?;
        // colors stand for link components, so colored mode needs the tangle's colors in the link
        let mode = if colors_compatible(&square, &l) { LabelingMode::Colored } else { LabelingMode::Oriented };
        let v = check_embedding_obstruction(&square, &l, mode)?;
        println!("square tangle in {link} ({mode}):\n{v}");
    }
    Ok(())
}
