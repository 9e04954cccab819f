//! Closed forms, gadget builders and the realization planner.

mod closed_forms;
mod gadgets;
mod plan;

pub use closed_forms::{c_n, r_n, residue_modulus, sigma, tau};
pub use gadgets::{add_delta_step, delta_gadget, rebuild, twist_embedding, twist_spatial, TwistParams};
pub use plan::{plan_realization, realize, realize_verified, Branch, RealizationPlan};
