//! Pseudofunctors out of `Δ₃` and out of opposite base categories, and
//! precategories.

mod cosimp;
mod indexed;
mod precategory;

pub use cosimp::{derived_cells, validate_trunc_cosimp, DerivedCells, TruncCosimp};
pub use indexed::{
    validate_indexed, BaseMor, BaseObj, FamIndexed, FiberMor, FiberObj, IndexedCategory, TableIndexed, Twisted,
};
pub(crate) use indexed::identity_cell;
pub use precategory::{
    compose_indexed_with_precategory, nerve, sigma_precategory, validate_precategory, Precategory,
};
