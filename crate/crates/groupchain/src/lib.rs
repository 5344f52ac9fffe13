//! Exact structural invariants of connected algebraic groups over
//! algebraically closed fields: unrefinable subgroup chains, their
//! maximal and minimal lengths, and certified chain verification.

pub mod chaincert;
pub mod depth;
pub mod descriptor;
pub mod error;
pub mod invariants;
pub mod length;
pub mod maxsubdb;
pub mod rootdata;
pub mod tables;

pub use chaincert::{ChainCertificate, ChainVerdict, StepVerdict, VerifyReport};
pub use depth::{
    classical_upper_table, depth, depth_simple, depth_upper_len, min_chain, min_chain_simple, psi,
    psi_big, steinberg_tower, ClassicalUpperTable, DepthBounds, SteinbergTower, TowerRank,
};
pub use descriptor::{parse, Characteristic, GroupDescriptor};
pub use error::{Error, Result};
pub use invariants::{
    chain_difference, chain_ratio, check_cd_bound, check_cr_bound, check_simple_cd_bound,
    check_ss_cd_bound, depth_equals_length_classifier, sum_dims_floor, CheckReport,
    DepthLengthClass, IntInterval, RatioInterval,
};
pub use length::{length, length_equals_dim, length_exceeds_half_dim, max_length_chain};
pub use maxsubdb::{
    maximal_parabolics, CompletenessStatus, CompletenessTag, MaxStepWitness, MaxSubDb, StepKind,
};
pub use rootdata::{canonicalize, Family, SimpleType};
