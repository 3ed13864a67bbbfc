//! The verification matrix and its fault injection.

use std::process::Command;

fn verify(extra: &[&str]) -> (Option<i32>, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_sbc"))
        .args(["verify", "--prime", "5", "--jobs", "2"])
        .args(extra)
        .output()
        .unwrap();
    (out.status.code(), String::from_utf8(out.stdout).unwrap())
}

fn row<'a>(table: &'a str, name: &str) -> &'a str {
    table
        .lines()
        .find(|l| l.split_whitespace().next() == Some(name))
        .unwrap_or_else(|| panic!("no row {name}"))
}

#[test]
fn clean_run_and_injected_fault() {
    let (code, table) = verify(&[]);
    assert_eq!(code, Some(0), "{table}");
    assert!(table.lines().filter(|l| l.contains("  pass  ")).count() >= 20);
    assert!(row(&table, "aut-composition").contains("pass"));

    let (code, table) = verify(&["--inject-fault", "composition"]);
    assert_eq!(code, Some(1));
    assert!(row(&table, "aut-composition").contains("FAIL"));
    let failing: Vec<&str> = table.lines().filter(|l| l.contains("FAIL")).collect();
    assert_eq!(failing.len(), 2, "{failing:?}");
}

#[test]
fn fault_flag_is_hidden() {
    let out = Command::new(env!("CARGO_BIN_EXE_sbc"))
        .args(["verify", "--help"])
        .output()
        .unwrap();
    let help = String::from_utf8(out.stdout).unwrap();
    assert!(help.contains("--oracle"));
    assert!(!help.contains("inject"));
}
