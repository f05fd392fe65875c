//! Kauffman bracket, Jones, HOMFLYPT and Conway polynomials of small links.
//!
//! ```text
//! cargo run --example skein_polynomials
//! ```

use tangle_gate::diagram::*;
use tangle_gate::skein::*;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let links = [
        ("trefoil", numerator(&rational_tangle(&[3]))),
        ("figure-eight", denominator(&rational_tangle(&[2, 2]))),
        ("Hopf link", numerator(&rational_tangle(&[2]))),
    ];
    for (name, mut l) in links {
        l.orient_all();
        println!("{name}");
        println!("  bracket  {}", bracket(&l)?);
        println!("  jones    {}", format_quarter(&jones(&l)?, "s", "t"));
        println!("  homflypt {}", homflypt(&l)?);
        println!("  conway   {}", conway(&l)?);
        assert_eq!(jones(&l)?, jones_from_homflypt(&l)?);
    }
    Ok(())
}
