//! Smallest square divisors of 2^d - 1 and squarefree tests of map characteristics.

use twogroups::charfree::{is_squarefree, square_divisor_scan};
use twogroups::Result;

pub fn run() -> Result<()> {
    for d in [6, 20, 21, 110, 136, 7] {
        match square_divisor_scan(d, 1000)? {
            Some(x) => println!("2^{d} - 1 is divisible by {x}^2"),
            None => println!("2^{d} - 1 has no square divisor x^2 with x <= 1000"),
        }
    }
    for ell in 2..=12u32 {
        let chi = 2 - (1i64 << ell);
        println!("chi = {chi:>6}: squarefree {}", is_squarefree(chi)?);
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
