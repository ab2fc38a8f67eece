use posetforge_core::verify::{run_all, CHECKS};

#[test]
fn every_check_passes_up_to_size_six() {
    let outcomes = run_all(6);
    let failures: Vec<String> = outcomes
        .iter()
        .filter(|o| !o.passed())
        .map(|o| format!("{} at n={}: {}", o.name, o.n, o.result.as_ref().unwrap_err()))
        .collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
    for &(name, _, cap) in CHECKS {
        let sizes = outcomes.iter().filter(|o| o.name == name).count();
        assert_eq!(sizes, cap.min(6) + 1, "{name}");
    }
}
