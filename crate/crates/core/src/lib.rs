//! HOMFLY polynomials of two-strand torus knots and their connected sums,
//! reduced modulo primes after substituting `z = N`.
//!
//! * [`poly`], [`poly1`], [`poly2`]: sparse Laurent polynomials over Z and Z/p.
//! * [`torus`]: exact `T(2,n)` polynomials and the modular coefficient recurrence.
//! * [`knot`]: connected sums, mirror images and the trivializing construction.
//! * [`skein`]: an independent skein-tree resolver for braid closures.
//! * [`classify`]: the mod-2, `z = 1` classification in degree windows.
//! * [`table`]: the knot table and its CSV form.

pub mod braid;
pub mod classify;
pub mod error;
pub mod fib;
pub mod knot;
pub mod poly;
pub mod poly1;
pub mod poly2;
pub mod ring;
pub mod skein;
pub mod table;
pub mod torus;

pub use braid::{BraidWord, Letter};
pub use classify::{ClassificationReport, DegreeWindow, SearchConfig};
pub use error::{Error, Result};
pub use knot::{trivial_knot, Factor, KnotExpr};
pub use poly::{Exp2, LPoly1, LPoly2};
pub use ring::{Coeff, Ring};
pub use skein::SkeinOracle;
pub use table::{KnotRecord, KnotTable};
pub use torus::{torus_period, torus_poly, trivializing_exponent, TorusState};
