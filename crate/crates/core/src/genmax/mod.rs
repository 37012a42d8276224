//! Generation engines and maximality certificates.

mod certificate;
mod coset;
mod decompose;
mod engines;

pub use certificate::{check_certificate, verify_certificate, Branch, Certificate, Rejection};
pub use coset::{cyclic_descents, double_coset_invariant};
pub use decompose::{swap_decompose, swap_product};
pub use engines::{express_via_swap_and_t, express_via_three_cycle_and_t, maximality_certificate};
