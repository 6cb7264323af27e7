//! Unary encodings of interpretations and the automata operations that
//! act on variable tracks.

mod interpretation;
mod tracks;
mod valid;

pub use interpretation::{
    decode_lasso, encode_interpretation, Interpretation, UltimatelyPeriodicSet,
};
pub use tracks::{add_variable, align, project_variable, reorder_variables};
pub use valid::valid_encodings_automaton;
