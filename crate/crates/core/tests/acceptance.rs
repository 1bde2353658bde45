//! Acceptance gate: one PASS/FAIL line per criterion, run with
//! `cargo test --test acceptance -- --nocapture`.

use std::time::Instant;

use gysin::verify::{self, CheckResult};
use gysin::Convention;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 20240917;

fn report(id: usize, budget_secs: f64, run: impl FnOnce() -> CheckResult) -> bool {
    let start = Instant::now();
    let r = run();
    let secs = start.elapsed().as_secs_f64();
    let status = if r.passed { "PASS" } else { "FAIL" };
    println!(
        "{status} [{id}] {} ({secs:.2}s, budget {budget_secs}s): {}",
        r.name, r.detail
    );
    r.passed
}

#[test]
fn acceptance() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let prop = Convention::Prop;
    let mut results = Vec::new();

    results.push(report(1, 5.0, || verify::check_schur(2..=4, 6, prop)));
    results.push(report(2, 10.0, || verify::check_segre(2..=6, 4, prop)));
    results.push(report(3, 30.0, || {
        verify::check_two_forms(&mut rng, 4, 6, 100, prop)
    }));

    let start = Instant::now();
    let corpus = verify::random_corpus(&mut rng, 4, 6, 100).expect("corpus");
    let outputs = verify::evaluate_corpus(&corpus, prop);
    let sym_outputs = verify::evaluate_corpus(&corpus, Convention::Sym);
    println!(
        "corpus of {} cases evaluated in both conventions ({:.2}s)",
        corpus.len(),
        start.elapsed().as_secs_f64()
    );
    results.push(report(4, 30.0, || {
        verify::check_polynomiality(&corpus, &outputs)
    }));
    results.push(report(5, 30.0, || {
        verify::check_degree_law(&corpus, &outputs)
    }));

    results.push(report(6, 60.0, || {
        verify::check_functoriality(&mut rng, 5, 50, prop)
    }));
    results.push(report(7, 30.0, || {
        verify::check_divided_differences(&mut rng, 4, 50, prop)
    }));
    results.push(report(8, 30.0, || verify::check_weyl_structure(6, 4)));
    results.push(report(9, 30.0, || {
        verify::check_convention_relation(&corpus, &outputs, &sym_outputs)
    }));
    results.push(report(10, 10.0, || verify::check_parser(&mut rng, 200, 6)));

    let passed = results.iter().filter(|&&p| p).count();
    println!("{passed}/{} criteria passed", results.len());
    assert!(results.iter().all(|&p| p));
}
