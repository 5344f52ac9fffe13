//! Golden minimal-chain certificates, frozen as literal text, plus
//! mutation tests: damaged certificates must never verify.

use groupchain::{
    depth_simple, min_chain_simple, parse, tables, ChainCertificate, ChainVerdict, Characteristic,
    MaxSubDb,
};

/// (characteristic, expected length, certificate body). The body is the
/// exact serialized form; the builder must reproduce it byte for byte.
const GOLDEN: &[(u64, u64, &str)] = &[
    (2, 6, "A2\nU2 A1 T1\nA1 T1\nA1\nU1 T1\nT1\n1\n"),
    (2, 5, "B2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 5, "G2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 6, "A3\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 6, "C3\nG2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 9, "A4\nU4 A3 T1\nA3 T1\nA3\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 7, "B4\nB2^2\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 7, "C4\nB2^2\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 7, "D4\nB3\nG2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 8, "F4\nC4\nB2^2\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (3, 7, "E7\nG2 A1\nA2 A1\nA1^2\nA1\nU1 T1\nT1\n1\n"),
    (2, 9, "E8\nD8\nB4\nB2^2\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n"),
];

fn full_text(p: u64, body: &str) -> String {
    format!("groupchain-cert v1\nchar {p}\n{body}")
}

#[test]
fn golden_chains_verify_and_match_builder() {
    let db = MaxSubDb::builtin();
    for &(p, len, body) in GOLDEN {
        let text = full_text(p, body);
        let cert = ChainCertificate::parse(&text).unwrap();
        let top = body.lines().next().unwrap();
        assert_eq!(cert.length_of(), len, "{top} p={p}");
        assert_eq!(
            cert.verify(db).verdict,
            ChainVerdict::Verified,
            "{top} p={p} must certify"
        );

        // The builder reproduces the stored route exactly.
        let t = parse(top).unwrap().as_simple().unwrap();
        let built = min_chain_simple(t, Characteristic::Prime(p)).unwrap();
        assert_eq!(built.serialize(), text, "{top} p={p} route drift");

        // The route length is the tabulated depth.
        let d = depth_simple(t, Characteristic::Prime(p)).unwrap();
        assert!(d.is_exact());
        assert_eq!(d.lower, len);
        assert_eq!(tables::depth_exact(t, Characteristic::Prime(p)), Some(len));
    }
}

#[test]
fn deleting_any_interior_group_is_rejected() {
    let db = MaxSubDb::builtin();
    for &(p, _, body) in GOLDEN {
        let lines: Vec<&str> = body.lines().collect();
        let top = lines[0];
        // Skip top (would change the group) and bottom (must stay trivial).
        for cut in 1..lines.len() - 1 {
            let mut mutated: Vec<&str> = lines.clone();
            mutated.remove(cut);
            let text = full_text(p, &(mutated.join("\n") + "\n"));
            let cert = match ChainCertificate::parse(&text) {
                Ok(c) => c,
                // Structural rejection (e.g. no longer descending) is fine.
                Err(_) => continue,
            };
            let verdict = cert.verify(db).verdict;
            assert_ne!(
                verdict,
                ChainVerdict::Verified,
                "{top} p={p}: deleting line {cut} must not verify"
            );
        }
    }
}

#[test]
fn refinable_jump_is_refuted() {
    let db = MaxSubDb::builtin();
    // B3 > A1 skips the intermediate G2 (or A1^2): refinable, so refuted.
    let text = full_text(7, "B3\nA1\nU1 T1\nT1\n1\n");
    let cert = ChainCertificate::parse(&text).unwrap();
    match cert.verify(db).verdict {
        ChainVerdict::Refuted { index, .. } => assert_eq!(index, 0),
        other => panic!("B3 > A1 should be refuted, got {other:?}"),
    }

    // E8 > B4 at p = 2 skips D8.
    let text = full_text(2, "E8\nB4\nB2^2\nB2\nA1^2\nA1\nU1 T1\nT1\n1\n");
    let cert = ChainCertificate::parse(&text).unwrap();
    match cert.verify(db).verdict {
        ChainVerdict::Refuted { index, intermediate } => {
            assert_eq!(index, 0);
            assert_eq!(intermediate.render(), "D8");
        }
        other => panic!("E8 > B4 should be refuted, got {other:?}"),
    }
}

#[test]
fn unknown_step_downgrades_to_uncertifiable() {
    let db = MaxSubDb::builtin();
    // No witness for G2 as a maximal connected subgroup of E8 at p = 7,
    // and no stored row refutes it either.
    let text = full_text(7, "E8\nG2\nA1^2\nA1\nU1 T1\nT1\n1\n");
    let cert = ChainCertificate::parse(&text).unwrap();
    match cert.verify(db).verdict {
        ChainVerdict::Unverifiable { uncertified } => assert!(uncertified.contains(&0)),
        other => panic!("expected uncertifiable, got {other:?}"),
    }
}
