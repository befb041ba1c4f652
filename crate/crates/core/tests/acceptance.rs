use skein_core::verify::{self, Bounds, CriterionResult};

fn report(results: &[CriterionResult]) {
    for r in results {
        println!("{r}");
    }
    let failed: Vec<u8> = results.iter().filter(|r| !r.pass).map(|r| r.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}

#[test]
fn acceptance() {
    report(&verify::run_all(&Bounds::full()));
}

#[test]
#[ignore = "slow: ring homomorphism with |λ|+|μ| = 6"]
fn ring_homomorphism_six_cells() {
    report(&[verify::ring_homomorphism(6)]);
}
