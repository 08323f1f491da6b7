//! Tensor, symmetric and metabelian powers of a free abelian group with a
//! derivation action, and the maps between them.

pub mod action;
pub mod exactness;
pub mod identities;
pub mod metabelian;
pub mod symmetric;
pub mod tensor;

pub use action::{ActionSpec, Derive, LieDeriver, Linear};
pub use exactness::{check_exactness, ExactnessReport};
pub use identities::{check_identity, test_alphabet, Identity, IdentityReport};
pub use metabelian::{
    divide_exactly, division_audit, eta, is_normal_word, lambda, mu, mu_monomial, normal_words,
    theta, theta_monomial, theta_numerator, theta_numerator_with, theta_with, DivisionAudit,
    MetabelianElement,
};
pub use symmetric::{kappa, multisets, MixedElement, Multiset, SymElement};
pub use tensor::{expand_tree, nu, rho, rho_with, Embedding, TensorElement, TensorWord};
