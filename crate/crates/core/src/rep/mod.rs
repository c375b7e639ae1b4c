//! Semisimple decomposition and characters of `H` and `H*`.

mod chars;
mod data;
mod irr;
mod module;
mod roots;
mod table;

pub use chars::{
    char_eval, char_ops, char_power, char_product, char_star, decompose, induced_trivial_character,
    left_ideal_of_augmentation, phi_inverse, phi_map, phi_matrix, regular_character,
    value_bound_report, CharOp, PhiMap, ValueBoundReport,
};
pub use data::CharacterData;
pub use irr::{
    center, central_primitive_idempotents, irr_characters, irr_cocharacters, Character, IrrBlock,
    IrrData,
};
pub use module::{left_ideal_rep, left_quotient_rep, rep_from_block, tensor_rep, Representation};
pub use table::{character_table_text, CharacterTable};
