use duality::lab::criteria::{run, CRITERIA};

#[test]
fn acceptance_criteria() {
    let mut failed = Vec::new();
    for &(id, _, _) in CRITERIA.iter() {
        let outcome = run(id).expect("registered criterion");
        println!("{outcome}");
        if !outcome.passed() {
            failed.push(id);
        }
    }
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
