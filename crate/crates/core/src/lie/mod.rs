//! Free Lie rings on finite ordered alphabets in the Lyndon basis.

pub mod alphabet;
pub mod element;
pub mod lyndon;
pub mod tree;

pub use alphabet::{Alphabet, Generator, Letter};
pub use element::{bracket, bracketing, left_normed_product, BracketCache, LieElement};
pub use lyndon::{is_lyndon, lyndon_words, lyndon_words_with, necklace_count, LyndonWord};
pub use tree::{
    evaluate_left_normed, left_normalize, left_normalize_element, normal_form, normal_form_with,
    LeftNormed, LieTree,
};
