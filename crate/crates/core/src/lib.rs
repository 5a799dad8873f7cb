//! Degree computations for parabolic quantum groups at roots of unity.
//!
//! The crate is `no_std` (with `alloc`) and purely computational:
//!
//! * [`cartan`]: Cartan data, root systems, the invariant form and good integers.
//! * [`weyl`]: Weyl group elements, reduced words, longest elements, the
//!   parabolic factorization `w0 = wbar * w0_levi` and convex orders of roots.
//! * [`exactla`]: exact rank over the rationals and prime fields, kernels and
//!   Smith normal form on arbitrary-precision integer matrices.
//! * [`degree`]: the skew form `T` and the [`DegreeReport`](degree::DegreeReport).
//! * [`oracles`]: brute-force checks of the lemmas behind the rank formula
//!   and explicit quantum torus representations.
//!
//! Simple roots are numbered as in Bourbaki. All indices in this crate are
//! 0-based (`i` stands for Bourbaki's `alpha_{i+1}`); front ends print them
//! 1-based.
//!
//! Only simple types are supported. For a semisimple algebra the degree is the
//! product of the degrees of its simple factors.
#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

pub mod cartan;
pub mod degree;
mod error;
pub mod exactla;
pub mod oracles;
pub mod weyl;

pub use error::{Error, Result};
