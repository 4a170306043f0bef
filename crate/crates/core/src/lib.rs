//! Quaternary linear codes over Z4 and the quaternary linear Reed-Muller
//! families `RM_s(r, m)`.
//!
//! ```
//! use z4rm::{rm_code, RmIndex, min_lee_distance, DEFAULT_CAP};
//!
//! let code = rm_code(RmIndex::new(1, 1, 3).unwrap());
//! assert_eq!((code.gamma(), code.delta()), (0, 2));
//! assert_eq!(min_lee_distance(&code, DEFAULT_CAP).unwrap(), 4);
//! ```

pub mod analysis;
mod canonical;
pub mod code;
pub mod constructions;
pub mod duality;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod format;
pub mod gf4;
pub mod matrix;
pub mod verify;

pub use analysis::{
    extended_perfect_check, gray_image_is_xor_closed, gray_image_params, hadamard_check,
    is_gray_image_linear, GrayImageReport,
};
pub use code::{canonical_form, codes_equal, is_subcode, CodeType, QuaternaryCode};
pub use constructions::{
    bq_plotkin, double_plotkin, gen_hat, gen_prime, plotkin, quaternary_plotkin,
};
pub use duality::{
    dual_code, inner_product, kronecker_diagonal, kronecker_inner, macwilliams_check,
    macwilliams_transform, standard_inner, verify_dual_pair, InnerProductKind, KroneckerDiagonal,
};
pub use enumerate::{
    enumerate_codewords, lee_weight_distribution, min_lee_distance, min_lee_distance_by_ball,
    LeeWeightDistribution, DEFAULT_CAP,
};
pub use error::{Error, Result};
pub use family::{
    rm_code, rm_dimension, rm_gamma_delta_predicted, rm_table, RmBuilder, RmIndex, RmTable,
};
pub use format::{read_q4code, write_q4code};
pub use gf4::{Z2Vector, Z4Vector};
pub use matrix::GeneratorMatrix;
