//! Certified real-root counting and positivity checks for algebraic and cosine
//! polynomials over exact rational arithmetic.

#![allow(clippy::result_large_err)]

pub mod cert;
pub mod cli;
pub mod exact;
pub mod expr;
pub mod paperlib;
pub mod poly;
pub mod sturm;
pub mod trig;
