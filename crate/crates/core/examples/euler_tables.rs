//! Maps of D:Z2 with their Euler characteristics, checked against the table.

use twogroups::catalog::{self, Family};
use twogroups::maps::{chi_form, classify_full};
use twogroups::{tables, Result};

pub fn run() -> Result<()> {
    let g = catalog::group(Family::DihedralSemiZ2, 4)?;
    let c = classify_full(&g)?;
    println!("{}: {} maps", g.descriptor().short_name(), c.records.len());
    for rec in c.survivors() {
        println!(
            "  {:<4} {:<24} V={:<3} E={:<3} F={:<3} chi={:<4} ({})",
            rec.map_type.label(),
            rec.tuple.display(&g),
            rec.vertices,
            rec.edges,
            rec.faces,
            rec.chi,
            chi_form(rec.chi)
        );
    }
    let check = tables::check(&g, &c)?;
    println!("{} table rows, agreement: {}", check.rows, check.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
