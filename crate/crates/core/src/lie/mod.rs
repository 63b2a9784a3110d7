//! Bracket expressions in `A`, `B` and the Lazard elimination producing the
//! generating sets of the Lie algebra of classical mechanics.

mod expr;
mod lazard;

pub use expr::{grade, BracketExpr, Grade, Symbol};
pub use lazard::{
    count_by_order, lazard_enumerate, lazard_enumerate_bounded, set_sizes, Definition, Generator,
    GeneratorRecord, GeneratorTable, OrderCounts, SetSizePair, DEFAULT_ENTRY_BOUND,
};
