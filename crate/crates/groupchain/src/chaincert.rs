//! Chain certificates: explicit descending chains of group descriptors
//! together with a verifier that certifies, refutes, or abstains on each
//! step using the curated maximal-subgroup data.

use crate::descriptor::{Characteristic, GroupDescriptor};
use crate::error::{Error, Result};
use crate::maxsubdb::{MaxStepWitness, MaxSubDb};
use serde::{Deserialize, Serialize};

/// A descending chain G = G_0 > G_1 > ... > G_t = 1, recorded with the
/// characteristic it is asserted in. Construction always validates the
/// structural invariants, so an in-memory certificate is well formed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainCertificate {
    characteristic: Characteristic,
    groups: Vec<GroupDescriptor>,
}

/// Verdict for a single step of a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepVerdict {
    /// The step matches curated data; the witness says why it is maximal.
    Certified(MaxStepWitness),
    /// Curated data neither certifies nor refutes the step.
    Uncertified,
    /// A curated fact exhibits a strictly intermediate subgroup, so the
    /// step is refinable. The witness is the intermediate group.
    Refuted { intermediate: GroupDescriptor },
}

/// Verdict for a whole certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum ChainVerdict {
    /// Every step certified: the chain is unrefinable.
    Verified,
    /// No step refuted, but the listed steps (by index) lack witnesses.
    Unverifiable { uncertified: Vec<usize> },
    /// At least one step is refinable; `index` is the first such step.
    Refuted {
        index: usize,
        intermediate: GroupDescriptor,
    },
}

/// Per-step detail alongside the overall verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub verdict: ChainVerdict,
    pub steps: Vec<StepVerdict>,
}

impl ChainCertificate {
    /// Validates and wraps a chain. Requirements: at least two entries,
    /// last entry trivial, strictly decreasing dimensions, and on ties of
    /// dimension (impossible by the previous rule) distinct descriptors.
    pub fn new(
        characteristic: Characteristic,
        groups: Vec<GroupDescriptor>,
    ) -> Result<ChainCertificate> {
        if groups.len() < 2 {
            return Err(Error::Structural {
                msg: "a chain needs at least a top group and the trivial group".into(),
                indices: vec![],
            });
        }
        let last = groups.len() - 1;
        if !groups[last].is_trivial() {
            return Err(Error::Structural {
                msg: "chain must terminate in the trivial group".into(),
                indices: vec![last],
            });
        }
        let mut bad = Vec::new();
        for i in 0..last {
            if groups[i + 1].dim() >= groups[i].dim() {
                bad.push(i);
            }
        }
        if !bad.is_empty() {
            return Err(Error::Structural {
                msg: "dimensions must strictly decrease along the chain".into(),
                indices: bad,
            });
        }
        Ok(ChainCertificate {
            characteristic,
            groups,
        })
    }

    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn groups(&self) -> &[GroupDescriptor] {
        &self.groups
    }

    pub fn top(&self) -> &GroupDescriptor {
        &self.groups[0]
    }

    /// Number of steps, i.e. the chain length being certified.
    pub fn length_of(&self) -> u64 {
        (self.groups.len() - 1) as u64
    }

    /// Checks every step against the database. Never errors: absence of
    /// data yields `Uncertified`, not failure.
    pub fn verify(&self, db: &MaxSubDb) -> VerifyReport {
        let c = self.characteristic;
        let mut steps = Vec::with_capacity(self.groups.len() - 1);
        let mut uncertified = Vec::new();
        let mut refuted: Option<(usize, GroupDescriptor)> = None;
        for i in 0..self.groups.len() - 1 {
            let parent = &self.groups[i];
            let child = &self.groups[i + 1];
            if let Some(w) = db.is_maximal_step(parent, child, c) {
                steps.push(StepVerdict::Certified(w));
                continue;
            }
            // Refutation searches stored rows only: a stored maximal
            // subgroup X of the parent that strictly contains the child
            // exhibits parent > X > child.
            let mut found = None;
            for row in db.stored_steps(parent, c) {
                if row.child.dim() > child.dim()
                    && db.is_maximal_step(&row.child, child, c).is_some()
                {
                    found = Some(row.child);
                    break;
                }
            }
            match found {
                Some(x) => {
                    if refuted.is_none() {
                        refuted = Some((i, x.clone()));
                    }
                    steps.push(StepVerdict::Refuted { intermediate: x });
                }
                None => {
                    uncertified.push(i);
                    steps.push(StepVerdict::Uncertified);
                }
            }
        }
        let verdict = match refuted {
            Some((index, intermediate)) => ChainVerdict::Refuted {
                index,
                intermediate,
            },
            None if uncertified.is_empty() => ChainVerdict::Verified,
            None => ChainVerdict::Unverifiable { uncertified },
        };
        VerifyReport { verdict, steps }
    }

    /// Byte-deterministic text form: fixed header, characteristic line,
    /// then one canonically rendered group per line, top first.
    pub fn serialize(&self) -> String {
        let mut out = String::from("groupchain-cert v1\n");
        out.push_str(&format!("char {}\n", self.characteristic));
        for g in &self.groups {
            out.push_str(&g.render());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<ChainCertificate> {
        let mut lines = text.lines();
        match lines.next() {
            Some("groupchain-cert v1") => {}
            _ => {
                return Err(Error::Parse {
                    pos: 0,
                    msg: "missing `groupchain-cert v1` header".into(),
                })
            }
        }
        let char_line = lines.next().ok_or(Error::Parse {
            pos: 0,
            msg: "missing characteristic line".into(),
        })?;
        let value = char_line.strip_prefix("char ").ok_or(Error::Parse {
            pos: 0,
            msg: "second line must be `char <n>`".into(),
        })?;
        let n: u64 = value.trim().parse().map_err(|_| Error::Parse {
            pos: 0,
            msg: format!("bad characteristic `{value}`"),
        })?;
        let characteristic = Characteristic::new(n)?;
        let mut groups = Vec::new();
        for line in lines {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            groups.push(crate::descriptor::parse(line)?);
        }
        ChainCertificate::new(characteristic, groups)
    }
}
