//! The quantum supergroup `SL_{h,g}(1/2)` from the graded FRT construction.

pub mod blocks;
pub mod det;
pub mod hopf;
pub mod linalg;
pub mod localize;
pub mod poly;
pub mod relations;
pub mod rewrite;

pub use blocks::{cross_check_block_relations, BlockMutation};
pub use localize::{Loc, Localization};
pub use poly::{FrtGen, NcPoly, Word};
pub use relations::{derive_rmm_relations, Relation, RelationSet, RttSigns};
pub use rewrite::{Budget, RewriteSystem};

#[cfg(test)]
mod tests;
