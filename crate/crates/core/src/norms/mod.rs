//! Norms and distribution diagnostics on sampled functions.

mod bmo;
mod orlicz;
mod rearrangement;

pub use bmo::{
    bmo_p_seminorm, bmo_seminorm, exp_average, exp_average_sup, layer_cake_moment,
    level_set_oscillation_measure, oscillation_moment, BmoMethod, ExpAverage,
};
pub(crate) use orlicz::luxemburg_weighted;
pub use orlicz::{
    luxemburg_average, luxemburg_of, zygmund_quasinorm, Luxemburg, OrliczFunction,
    BISECTION_MAX_ITER, BISECTION_RTOL,
};
pub use rearrangement::{
    distribution_measure, rearrangement, weak_lorentz_quasinorm, RearrangementProfile,
};
