//! Build the maximal unrefinable chain of E8 (length 136), print its
//! first steps, and certify every step against the maximal-subgroup
//! database.

use groupchain::{length, max_length_chain, parse, ChainVerdict, Characteristic, MaxSubDb};

fn main() {
    let g = parse("E8").unwrap();
    let chain = max_length_chain(&g, Characteristic::Zero).unwrap();
    assert_eq!(chain.length_of(), length(&g));
    println!("l(E8) = {}", chain.length_of());
    for step in chain.groups().iter().take(10) {
        println!("  > {}", step.render());
    }
    println!("  ... ({} groups total)", chain.groups().len());

    let report = chain.verify(MaxSubDb::builtin());
    match report.verdict {
        ChainVerdict::Verified => println!("all {} steps certified maximal", chain.length_of()),
        other => println!("unexpected verdict: {other:?}"),
    }
}
