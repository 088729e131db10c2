//! Runs every verification suite over the built-in corpus and tallies verdicts.
//!
//!     cargo run --release --example verify_corpus

use std::collections::BTreeMap;
use std::sync::Arc;

use schurring::corpus::builtin;
use schurring::verifiers::{run_suite, Suite, SuiteConfig};

fn main() {
    let cfg = SuiteConfig::default();
    let mut tally: BTreeMap<(String, String), usize> = BTreeMap::new();
    let mut fatal = 0;
    for (name, g) in builtin() {
        for d in run_suite(Suite::All, &Arc::new(g), &cfg).unwrap() {
            if d.is_fatal() {
                fatal += 1;
                println!("{name}: {} refuted {:?}", d.check, d.notes);
            }
            let verdict = serde_json::to_value(d.verdict).unwrap().as_str().unwrap().to_string();
            *tally.entry((d.check, verdict)).or_default() += 1;
        }
    }
    for ((check, verdict), n) in tally {
        println!("{check:>26} {verdict:>13} {n:>3}");
    }
    println!("fatal refutations: {fatal}");
}
