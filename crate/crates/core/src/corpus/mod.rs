//! Built-in example algebras and the structure-constant file format.

pub mod builtins;
pub mod format;
pub mod groups;
pub mod kac_paljutkin;

pub use builtins::{builtin, builtins, Builtin};
pub use format::{parse_algebra, AlgebraSpecFile, Metadata, MAX_FILE_DIM};
pub use groups::{dual_group_algebra, group_algebra, GroupTable};
pub use kac_paljutkin::kac_paljutkin;
