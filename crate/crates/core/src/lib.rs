//! Shuffling measures on finite Coxeter groups built from the orthogonal
//! idempotents of Solomon's descent algebra.
//!
//! The crate enumerates the groups of types `A_n`, `B_n`, `D_n`, `I2(p)` and
//! `G2`, constructs the signed measures `M_{W,x} = Σ_λ e_λ / x^{‖λ‖}` in exact
//! rational arithmetic, analyses the random walks they drive, and compares
//! them against semisimple-orbit statistics computed by enumerating
//! polynomials over prime fields.
//!
//! ```
//! use coxeter_shuffle::{coxeter::{build_group, GroupDescriptor}, measures::measure, rational::q};
//!
//! let g2 = build_group(GroupDescriptor::g2()).unwrap();
//! let m = measure(&g2, q(7, 1)).unwrap();
//! assert_eq!(m.coefficient(g2.identity()), q(8, 49));
//! assert_eq!(m.coefficient(g2.longest_element()), q(1, 49));
//! ```

pub mod caps;
pub mod coxeter;
pub mod descent_algebra;
pub mod error;
pub mod gfpoly;
pub mod markov;
pub mod measures;
pub mod necklaces;
pub mod rational;
pub mod report;

pub use caps::Caps;
pub use error::{Error, Result};
pub use rational::Q;
pub use report::{Check, VerificationReport};
