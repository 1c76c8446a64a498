//! Lax descent categories of pseudofunctors out of the truncated simplex
//! category, computed on finite data.
//!
//! The crate is organised bottom-up:
//!
//! * [`fincat`]: categories, functors, natural transformations, adjunctions,
//!   limits and the law checkers used everywhere else.
//! * [`finset`]: finite sets, slices, change of base and the basic indexed
//!   category `Set/-`, plus set-valued diagrams.
//! * [`delta3`]: the category `Δ₃` by generators, relations and normal forms.
//! * [`pseudo`]: pseudofunctors `Δ₃ → Cat`, indexed categories and precategories.
//! * [`laxdesc`]: lax descent categories and their universal property.
//! * [`kan`]: pointwise Kan extensions.
//! * [`monadics`]: monads, Eilenberg–Moore categories, Beck–Chevalley.
//! * [`descent`]: kernel pairs, descent factorizations, effective descent.
//! * [`theorems`]: instance-level verification harnesses.
//! * [`frontend`]: the `.lcat` language and the command line driver.

pub mod delta3;
pub mod descent;
pub mod error;
pub mod fincat;
pub mod finset;
pub mod frontend;
pub mod kan;
pub mod laxdesc;
pub mod monadics;
pub mod pseudo;
pub mod theorems;

pub use error::{Error, Result};
