//! Exhaustive verification: fuzzy-set grids, equivalence suites, generation
//! of small BL-algebras, and the claim auditor.

mod audit;
mod equivalence;
mod generate;
mod grid;
mod oracle;

pub use audit::{
    audit_examples, audit_file, parse_claims, AuditEntry, AuditError, AuditFinding, Claim,
    ClaimFinding, ClaimSubject, ClaimsFile,
};
pub use equivalence::{
    threshold_battery, verify_decomposition, verify_equivalences, verify_selected, Counterexample,
    Equivalence, EquivalenceCheck, EquivalenceReport,
};
pub use generate::{
    canonical_key, generate_bl_algebras, isomorphic, GenerateError, MAX_GENERATED, MIN_GENERATED,
};
pub use grid::{enumerate_fuzzy_sets, fuzzy_set_at, GridError, GridSpec};
pub use oracle::oracle_threshold_verdict;
