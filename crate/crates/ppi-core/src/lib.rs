//! Piecewise polynomial interpolation (PPI) of prohibited-operating-zone
//! constraints.
//!
//! A variable restricted to a union of disjoint closed intervals (the
//! complement of its prohibited zones) cannot be handled directly by a
//! gradient-based NLP method. This crate provides the smooth machinery that
//! replaces such a constraint: each allowed interval is parameterized by a
//! line segment over `[0, 1]`, and a single C¹ function `m(p, α)` of the
//! variable `p` and the interpolation coordinates `α` vanishes exactly when
//! `p` lies on one of the segment images. Enforcing `m(p, α) = 0` with
//! `α ∈ [0, 1]^(NP+1)` is then equivalent to the original disjoint
//! membership constraint.
//!
//! ```
//! use ppi_core::{ZoneSet, ppi_eval};
//!
//! let zone = ZoneSet::new(vec![(0.0, 1.0), (2.0, 3.0)]).unwrap();
//! let alpha = zone.recover_alpha(2.4).unwrap();
//! let eval = ppi_eval(&zone, 2.4, &alpha).unwrap();
//! assert!(eval.value.abs() < 1e-12);
//! assert!((eval.grad_p.abs() - 1.0).abs() < 1e-9);
//! ```

mod alpha;
mod error;
mod eval;
mod grid;
mod zone;

pub use alpha::AlphaVector;
pub use error::PpiError;
pub use eval::{bracket_term, heaviside, ppi_eval, ppi_eval_slice, ppi_value, PpiEvaluation};
pub use grid::{min_abs_over_alpha_grid, min_abs_over_alpha_sampled, MAX_GRID_AXES};
pub use zone::{Membership, ZoneSet};
