//! Closed-form laws of the processes: state probabilities, probability
//! generating functions, covariance and codifference, Lévy measures and the
//! f̃_m functional of the general-subordinator version.

mod invert;
mod levy;
mod moments;
mod pgf;
mod pmf;
mod ot;
mod table;

pub use invert::invert_pgf;
pub use levy::{
    levy_measure_c, levy_measure_n, levy_n_partial_mass_closed_form, LevyPointMass,
};
pub use moments::{codifference, covariance, z_factor};
pub use ot::{pmf_ot, pmf_table_via_inversion, KMAX_TOTAL_LIMIT, PMF_OT_TOL};
pub use pgf::{
    char_fn_coordinate, compound_pgf, f_tilde, pgf, pgf_complex, pgf_ot, pgf_ot_complex,
};
pub use pmf::{compound_pmf, pmf, pmf_eta1, PmfRoute};
pub use table::PmfTable;
