//! The binary's exit codes, formats and determinism.

use std::process::{Command, Output};

fn twogroups(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twogroups"))
        .args(args)
        .output()
        .expect("spawn twogroups")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dihedral_verify_reports_orbit_counts() {
    let o = twogroups(&["verify", "--family", "Dihedral", "--ell", "2..4", "--oracle"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("orbits: 9 (ℓ=2), 15 (ℓ=3), 27 (ℓ=4)"));
}

#[test]
fn quaternion_maps_are_empty() {
    let o = twogroups(&["maps", "--family", "Quaternion", "--ell", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).is_empty());
}

#[test]
fn squarefree_witness() {
    let o = twogroups(&["squarefree", "--d", "21"]);
    assert_eq!(o.status.code(), Some(0));
    let last = stdout(&o).lines().last().unwrap().to_string();
    assert_eq!(last.split_whitespace().collect::<Vec<_>>(), ["21", "1000", "7"]);
    let o = twogroups(&["squarefree", "--n", "-6", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,squarefree\n-6,yes\n");
}

#[test]
fn usage_errors() {
    for args in [
        &["verify", "--family", "Dihedral", "--ell", "2..7", "--oracle"][..],
        &["frobnicate"],
        &["maps", "--family", "SemiDihedral", "--ell", "2"],
        &["orbits", "--family", "Dihedral", "--ell", "9"],
        &["maps", "--family", "Dihedral", "--all"],
    ] {
        assert_eq!(twogroups(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn map_rows_in_json_and_csv() {
    let o = twogroups(&["maps", "--family", "Dihedral", "--ell", "3", "--survivors", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "maps");
    let rows = v["results"].as_array().unwrap();
    assert!(!rows.is_empty());
    for r in rows {
        let chi = r["chi"].as_i64().unwrap();
        let (vv, e, f) = (r["V"].as_i64().unwrap(), r["E"].as_i64().unwrap(), r["F"].as_i64().unwrap());
        assert_eq!(vv - e + f, chi);
        assert_eq!(r["passes_filter"], true);
        assert_eq!(r["family"], "Dihedral");
        assert_eq!(r["ell"], 3);
        assert!(r["tuple"].as_array().unwrap().iter().all(|w| !w.as_str().unwrap().contains(' ')));
    }
    let o = twogroups(&["maps", "--family", "Dihedral", "--ell", "3", "--survivors", "--format", "csv"]);
    let csv = stdout(&o);
    assert!(csv.starts_with("family,ell,group,map_type,tuple,chi,V,E,F,passes_filter,chi_form\n"));
    assert!(csv.contains("Dihedral,3,D16,2*,b;a*b;a^4,1,"));
    assert_eq!(csv.lines().count(), rows.len() + 1);
}

#[test]
fn output_is_deterministic_and_can_go_to_a_file() {
    let dir = std::env::temp_dir().join(format!("twogroups-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("orbits.json");
    let args = ["orbits", "--all", "--ell", "2..3", "--format", "json", "--seed", "7"];
    let first = twogroups(&args);
    let second = twogroups(&args);
    assert_eq!(first.stdout, second.stdout);
    let p = path.to_str().unwrap();
    let o = twogroups(&[&args[..], &["--out", p]].concat());
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), first.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
