//! Drivers for the inverse problems: spectral formulas, conditioning
//! reports, the inverse potential and Jones fixed-point iterations, and the
//! fractional Sturm-Liouville spectrum.

mod jones;
mod potential;
mod report;
mod spectral;
mod sturm;

pub use jones::{jones_fixed_point, jones_h, jones_operator, JonesRun};
pub use potential::{
    tent_potential, potential_fixed_point, relative_l2_error, synthetic_final_data, PotentialProblem, PotentialRun,
};
pub use report::{conditioning_report, write_spectra_csv, write_summaries_csv, ConditioningReport};
pub use spectral::{
    backward_reconstruct, critical_time, forward_backward_modes, forward_source_modes, growth_factors, laplace_modes,
    source_space_reconstruct, SpectralData,
};
pub use sturm::{cauchy_growth_demo, sturm_liouville_spectrum, SlSpectrum, SlVariant};
