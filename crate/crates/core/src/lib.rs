// `!(x > 0.0)` is deliberate throughout: it rejects NaN along with the bound.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Reference constants keep every digit they were tabulated with.
#![allow(clippy::excessive_precision)]

pub mod error;
pub mod gamma;
pub mod msm;
pub mod pathway;
pub mod quadrature;
pub mod series;
pub mod special;
pub mod verify;
pub mod wright;
