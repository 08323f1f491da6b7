//! Characteristic-`p` decomposition of the tensor power `T^p(V)`.

pub mod maps;
pub mod pbw;
pub mod summand;

pub use maps::{alpha_map, beta_map, sigma_map, sigma_of_factors};
pub use pbw::{lie_basis, pbw_basis, pbw_classes, PbwElement, TypeOrder};
pub use summand::{
    bp_space, check_summand, check_summand_in, lie_power_words, SummandReport, TypeSummary,
    MAX_TENSOR_DIM, SUPPORTED_PRIMES,
};
