//! Aut-orbits of generating triples in D16 and the listed representatives.

use twogroups::catalog::{self, Family};
use twogroups::triples::{self, match_representatives, GenTuple, TupleKind};
use twogroups::Result;

pub fn run() -> Result<()> {
    let g = catalog::group(Family::Dihedral, 3)?;
    for kind in TupleKind::ALL {
        let p = triples::orbits(&g, kind)?;
        println!(
            "{kind}: {} tuples in {} orbits, semiregular: {}",
            p.total(),
            p.len(),
            p.is_semiregular()
        );
        let m = match_representatives(&g, kind)?;
        println!("  listed representatives form a transversal: {}", m.passed());
    }
    for rep in triples::orbits(&g, TupleKind::Reversing)?.representatives() {
        println!("  {}", rep.display(&g));
    }

    let t1 = GenTuple::parse(&g, TupleKind::Reversing, &["b", "a*b", "a^4"])?;
    let t2 = GenTuple::parse(&g, TupleKind::Reversing, &["a^4", "b", "a*b"])?;
    println!(
        "{} ~ {}: {}",
        t1.display(&g),
        t2.display(&g),
        triples::equivalent(&g, &t1, &t2)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run()
}
