//! `gamma1`, bounds on `gamma2`, the zero-set checker and certificates.

mod bounds;
mod certificate;
mod family;
mod gamma1;
mod linearize;
mod table;
mod zeroset;

pub use bounds::{theorem_bounds, tightest, Bound, ParentValues};
pub use certificate::{
    bound_consistency, certify, check_certificate, coset_basis_rank, zero_set_error, CertifyOptions,
    CheckFailure, DesignId, Gamma2, Gamma2Lower, Gamma2Upper, GammaCertificate, StrengthInfo, ZeroSetSummary,
};
pub use family::{auto_family, generators_hash, FamilySpec};
pub use gamma1::{count_threshold, gamma1, gamma1_bruteforce, Gamma1, RankEvidence};
pub use linearize::{gamma2_lower_linearization, verify_linearization, LinearTerm, LinearizationCertificate};
pub use table::{reproduce_row, row_setup, table_row, RowOutcome, TableRow, TABLE};
pub use zeroset::{zero_set_check, Verdict, ZeroSetReport};
