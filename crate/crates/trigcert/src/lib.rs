//! Certification engine for Wilker- and Huygens-type trigonometric
//! inequalities on (0, pi/2).
//!
//! The crate is organised in layers:
//!
//! * [`rational`] / [`bernoulli`] — exact big-rational arithmetic,
//!   factorials, binomials and Bernoulli numbers (the substrate for every
//!   coefficient law).
//! * [`dyadic`] / [`interval`] / [`pi`] — validated interval arithmetic with
//!   outward rounding on dyadic endpoints, plus a self-contained rigorous
//!   enclosure of pi.
//! * [`pilaurent`] — exact Laurent polynomials in pi, used for every
//!   closed-form sharp constant.
//! * [`series`] — exact truncated power series over the rationals, the
//!   independent oracle for limits at 0.
//! * [`trigpoly`] / [`kernels`] — trigonometric polynomials with exact
//!   coefficients, rigorous sin/cos/tan enclosures, and the singularity-free
//!   "cleared" forms of every catalogued gap function.
//! * [`sequences`] — the discrete side: coefficient laws, claim
//!   inequalities, proof sequences and the exponential-polynomial identity
//!   verifiers.
//! * [`certifier`] — the inequality catalog, the adaptive bisection engine
//!   producing sign [`certifier::Certificate`]s, best-constant extraction
//!   and grid sweeps.

pub mod bernoulli;
pub mod certifier;
pub mod dyadic;
pub mod error;
pub mod interval;
pub mod kernels;
pub mod pi;
pub mod pilaurent;
pub mod rational;
pub mod sequences;
pub mod series;
pub mod trigpoly;

pub use error::Error;
pub use interval::{Interval, IntervalCmp};
pub use pilaurent::PiLaurent;
pub use rational::Rational;
