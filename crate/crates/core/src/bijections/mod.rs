//! The maps κ, Φ, ρ, the non-crossing to 312-avoiding chain, and Ψ, each with its inverse.

mod kappa;
mod nc312;
mod phi;
mod psi;
mod rho;

pub use kappa::{alpha_vector, kappa, kappa_inv};
pub use nc312::{
    from_lehmer_code, lehmer_code, lemma_majors, nc_from_312, nc_to_312, nc_to_312_trace,
    path_from_peaks_valleys, Nc312Trace,
};
pub use phi::{phi, phi_inv, phi_trace};
pub use psi::{psi, psi_inv};
pub use rho::{descent_sets_of, rho, rho_inv};
