//! Lists the catalog up to order 32 and does some arithmetic in D16.

use twogroups::catalog::{self, Family};
use twogroups::Result;

pub fn run() -> Result<()> {
    for g in catalog::catalog_all(32)? {
        let d = g.descriptor();
        println!(
            "{:<8} order {:>2}  generators {:?}  involutions {}",
            d.short_name(),
            g.order(),
            g.generator_names(),
            g.involutions()?.len()
        );
    }

    let g = catalog::group(Family::Dihedral, 3)?;
    let (a, b) = (g.a(), g.parse_word("b")?);
    let ba = g.mul(b, a);
    println!("in D16: b*a = {} with exponents {:?}", g.word(ba), g.exponents(ba));
    println!("a0 = {}, center order {}", g.word(g.a0()), g.center()?.order);
    let h = g.closure(&[g.parse_word("a^2")?, b])?;
    println!("<a^2, b> has order {} and is dihedral: {}", h.order, h.is_dihedral(&g));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
