//! Runs every check on each catalog group with ell <= 5.

use twogroups::catalog;
use twogroups::verify::{verify_charfree, verify_group, VerifyOptions};
use twogroups::Result;

pub fn run() -> Result<bool> {
    let opts = VerifyOptions { oracle: true, ..VerifyOptions::default() };
    let mut ok = true;
    for d in catalog::descriptors_up_to(1 << 7) {
        if d.effective_ell() > 5 {
            continue;
        }
        let report = verify_group(&catalog::build(d)?, &opts)?;
        println!("{:<10} {} checks, passed: {}", d.short_name(), report.checks.len(), report.passed());
        for c in report.failures() {
            println!("  {}: expected {}, computed {}", c.name, c.expected, c.computed);
        }
        ok &= report.passed();
    }
    let sq = verify_charfree()?;
    println!("square divisors passed: {}", sq.passed());
    Ok(ok && sq.passed())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    if !run()? {
        std::process::exit(1);
    }
    Ok(())
}
