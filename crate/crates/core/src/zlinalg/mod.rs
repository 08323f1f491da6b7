//! Exact integer linear algebra: Smith normal form, saturated kernels,
//! cokernels of relation matrices; plus elimination over fields.

pub mod field;
pub mod matrix;
pub mod presentation;
pub mod snf;

pub use matrix::IntMat;
pub use presentation::{ElementOrder, Presentation};
pub use snf::{
    cokernel_structure, integer_kernel, rank, smith_normal_form, CokernelStructure, SnfResult,
};
