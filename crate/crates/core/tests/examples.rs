//! Every cargo example runs to completion.

#[path = "../examples/automorphisms.rs"]
mod automorphisms;
#[path = "../examples/build_catalog.rs"]
mod build_catalog;
#[path = "../examples/euler_tables.rs"]
mod euler_tables;
#[path = "../examples/orbit_classification.rs"]
mod orbit_classification;
#[path = "../examples/square_divisors.rs"]
mod square_divisors;
#[path = "../examples/verify_all.rs"]
mod verify_all;

#[test]
fn build_catalog_runs() {
    build_catalog::run().unwrap();
}

#[test]
fn automorphisms_runs() {
    automorphisms::run().unwrap();
}

#[test]
fn orbit_classification_runs() {
    orbit_classification::run().unwrap();
}

#[test]
fn euler_tables_runs() {
    euler_tables::run().unwrap();
}

#[test]
fn square_divisors_runs() {
    square_divisors::run().unwrap();
}

#[test]
fn verify_all_passes() {
    assert!(verify_all::run().unwrap());
}
