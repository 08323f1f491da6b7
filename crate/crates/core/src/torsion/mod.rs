//! Torsion of `(L')^p / [(L')^p, L]` for the free Lie ring of rank 2,
//! computed degree by degree as `L^p(A) ⊗_U Z` with `A = L'/L''`.

pub mod agen;
pub mod bp;
pub mod component;
pub mod metabelian_side;
pub mod theorem;

pub use agen::{a_action, a_alphabet, a_generators, word_bidegree, AGenerator};
pub use bp::{bp_freeness_check, bp_kernel_basis, BpDegree, BpReport};
pub use component::{
    action_matrix, blockwise_cokernel, graded_cokernel, lie_power_basis, LieComponent,
};
pub use metabelian_side::{
    metabelian_element, metabelian_torsion_check, BasisFlags, MetabelianComponent,
    MetabelianTorsionReport,
};
pub use theorem::{
    theorem_element, theorem_element_with, theorem_indices, theorem_numerator, torsion_report,
    verify_theorem_degree, TheoremCheck, TorsionReport, TorsionTable, COMPOSITE_NOTE,
};
