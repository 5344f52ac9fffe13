//! Serialize a chain certificate, parse it back, then corrupt it and
//! watch the verifier refute the damaged step.

use groupchain::{
    min_chain_simple, parse, ChainCertificate, ChainVerdict, Characteristic, MaxSubDb,
};

fn main() {
    let db = MaxSubDb::builtin();
    let t = parse("E7").unwrap().as_simple().unwrap();
    let chain = min_chain_simple(t, Characteristic::Prime(3)).unwrap();
    let text = chain.serialize();
    println!("{text}");

    let parsed = ChainCertificate::parse(&text).unwrap();
    assert_eq!(parsed.serialize(), text, "round trip must be byte-identical");
    assert_eq!(parsed.verify(db).verdict, ChainVerdict::Verified);
    println!("round trip ok, certificate verified");

    // Delete an intermediate group: the resulting jump skips a known
    // maximal subgroup, so the chain is refinable and gets refuted.
    let mut lines: Vec<&str> = text.lines().collect();
    lines.remove(3);
    let mutated = ChainCertificate::parse(&(lines.join("\n") + "\n")).unwrap();
    match mutated.verify(db).verdict {
        ChainVerdict::Refuted {
            index,
            intermediate,
        } => println!(
            "mutant refuted: step {index} refines through {}",
            intermediate.render()
        ),
        other => println!("mutant verdict: {other:?}"),
    }
}
