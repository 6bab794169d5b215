//! Real-root classification of quartic polynomials.
//!
//! A depressed quartic `t^4 + m t^2 + p t + q` with `m < 0` is mapped by
//! `t = sqrt(-m) cos(theta)` onto `f(theta) = a cos(theta) + cos(4 theta) + b`
//! on `[0, pi]`. Zeros of `f` are the roots in `[-sqrt(-m), sqrt(-m)]`; the
//! signs of `f(0)` and `f(pi)` decide the (at most one per side) roots outside.
//! Quartics with `m >= 0` are globally convex and handled separately.
//!
//! The [`oracle`] module holds independent checks (Sturm sequences and a
//! simultaneous-iteration all-roots solver).

mod bisect;
pub mod classify;
pub mod cli;
pub mod error;
pub mod oracle;
pub mod poly;
pub mod segments;
pub mod trig;

pub use classify::{
    classify, classify_biquadratic, classify_m_nonneg, find_exterior_root, CaseLabel,
    Classification, Diagnostic, Flag, RealRoot, RootOrigin, Side,
};
pub use error::{Error, Result};
pub use oracle::{
    discriminant_from_roots, oracle_report, solve_all_roots, sturm_count, Discriminant,
    OracleReport, SturmChain,
};
pub use poly::{cauchy_root_bound, depress, eval_quartic, DepressedQuartic, GeneralQuartic};
pub use segments::{
    count_interior_zeros, decompose, solve_critical_cubic, CriticalSet, InteriorZeroReport,
    MonotoneSegment, Tolerances,
};
pub use trig::{boundary_values, eval_f, eval_f_prime, reduce, TrigParams};
