//! Power-series special functions: Bessel and Struve functions of the first
//! kind, the Bessel-Struve kernel, Gauss 2F1 and Appell F3.

mod appell;
mod bessel;
mod hyp2f1;
mod kernel;
mod struve;

pub use appell::{appell_f3, appell_f3_with, F3Args};
pub use bessel::{bessel_first_kind, bessel_first_kind_with};
pub use hyp2f1::{gauss_2f1, gauss_2f1_with};
pub use kernel::{bessel_struve_kernel, bessel_struve_kernel_with};
pub use struve::{struve, struve_with};

pub(crate) use appell::appell_f3_complement;
