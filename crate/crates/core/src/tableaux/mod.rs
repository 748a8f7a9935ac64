//! Partitions, skew shapes and skew tableaux.

pub mod shape;
pub mod squash;
pub mod tableau;

pub use shape::{basic_skew_shapes, partitions_in_box, skew_shapes_in_box, Partition, SkewShape};
pub use squash::{canonical_tableau, is_squashed, slide_bound, squash, staircase_shape};
pub use tableau::{
    enumerate_std, enumerate_std_with_cap, perm_of, restrict_above, restrict_below, shape_genset,
    tau_col, tau_top, word_of, SkewTableau, DEFAULT_STD_CAP,
};
