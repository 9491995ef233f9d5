//! Finite fields GF(p^e) with p^e <= 256 and dense matrices over them.

mod field;
mod matrix;

pub use field::{make_field, Field, FieldElem, FieldSpec};
pub use matrix::Mat;
