//! Explicit automorphism groups, checked against exhaustive search.

use twogroups::aut::{brute_force_automorphisms, closed_form_aut_order, explicit_aut};
use twogroups::catalog::{self, Family};
use twogroups::Result;

pub fn run() -> Result<()> {
    let g = catalog::group(Family::DihedralTimesZ2, 3)?;
    let aut = explicit_aut(&g)?;
    println!("Aut(D16xZ2): order {}", aut.order());
    for (name, f) in aut.names().iter().zip(aut.generators()) {
        println!("  {name:<6} {:?} -> {:?}", g.generator_names(), f.words(&g));
    }

    for g in catalog::catalog_all(32)? {
        let d = g.descriptor();
        let mut explicit: Vec<_> = explicit_aut(&g)?
            .materialize(&g)?
            .iter()
            .map(|f| f.permutation(&g))
            .collect::<Result<_>>()?;
        let mut searched: Vec<_> = brute_force_automorphisms(&g)?
            .iter()
            .map(|f| f.permutation(&g))
            .collect::<Result<_>>()?;
        explicit.sort();
        searched.sort();
        println!(
            "{:<8} |Aut| = {:>4} (closed form {:>4}), matches search: {}",
            d.short_name(),
            explicit.len(),
            closed_form_aut_order(d),
            explicit == searched
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
