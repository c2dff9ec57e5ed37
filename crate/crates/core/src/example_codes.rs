//! Small reference codes used throughout the tests and shipped fixtures.

use crate::codes::{Codeword, LinearCode};
use crate::gf::Field;

/// Binary [11, 6] code whose CSS pair is an [[11, 1, 3]] scheme. Its
/// generator is already in reduced row-echelon form.
pub fn binary_11_6() -> LinearCode {
    let f = Field::prime(2).unwrap();
    LinearCode::from_generator(
        &f,
        &[
            vec![1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1],
            vec![0, 1, 0, 0, 0, 0, 1, 1, 1, 1, 1],
            vec![0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 1],
            vec![0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1],
        ],
    )
    .expect("valid generator")
}

/// The weight-3 codeword 00000100101 conventionally used to label the
/// encoding coset of [`binary_11_6`].
pub fn binary_11_6_g() -> Codeword {
    let f = Field::prime(2).unwrap();
    Codeword::new(&f, vec![0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 1]).unwrap()
}

/// Hamming [7, 4]; contains its simplex dual, giving the Steane-style
/// [[7, 1, 3]] pair.
pub fn hamming_7_4() -> LinearCode {
    let f = Field::prime(2).unwrap();
    LinearCode::from_generator(
        &f,
        &[
            vec![1, 0, 0, 0, 0, 1, 1],
            vec![0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .expect("valid generator")
}

/// Ternary [3, 2] zero-sum code; its dual is the repetition code.
pub fn ternary_zero_sum() -> LinearCode {
    let f = Field::prime(3).unwrap();
    LinearCode::from_generator(&f, &[vec![1, 0, 2], vec![0, 1, 2]]).expect("valid generator")
}

/// Binary [3, 2] code containing span{110}: a degenerate distance-1 pair.
pub fn degenerate_3_2() -> LinearCode {
    let f = Field::prime(2).unwrap();
    LinearCode::from_generator(&f, &[vec![1, 1, 0], vec![0, 0, 1]]).expect("valid generator")
}

/// GF(4) [9, 5] code built by gluing two equal coordinates onto the
/// F4-lifted Hamming/simplex pair. Its CSS pair is a valid [[9, 1, 3]]
/// scheme whose stabilizer contains a weight-2 word, so it is impure.
pub fn impure_9_5_gf4() -> LinearCode {
    let f = Field::new(2, 2, None).unwrap();
    LinearCode::from_generator(
        &f,
        &[
            vec![1, 1, 0, 0, 0, 0, 0, 0, 0],
            vec![0, 0, 1, 0, 0, 0, 0, 1, 1],
            vec![0, 0, 0, 1, 0, 0, 1, 0, 1],
            vec![0, 0, 0, 0, 1, 0, 1, 1, 0],
            vec![0, 0, 0, 0, 0, 1, 1, 1, 1],
        ],
    )
    .expect("valid generator")
}
