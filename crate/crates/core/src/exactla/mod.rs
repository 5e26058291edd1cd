//! Exact linear algebra over the rationals.

mod incidence;
mod matrix;
mod rank;
mod span;

pub use incidence::{
    annihilates_polynomial, delta_coordinates, delta_index, delta_len, delta_matrix, delta_vector,
    elementary_evaluation_matrix, incidence_matrix,
};
pub use matrix::{rat, ExactMatrix, SparseRow};
pub use rank::{bareiss_rank, modular_rank, rank, rank_with_method, RankMethod, MODULUS};
pub use span::{in_row_span, kernel, rref, RowSpace, SpanResult};
