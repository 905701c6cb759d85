//! Reference ideals used by the tests, the acceptance suite and `bench`.

use crate::monomial::Ideal;

/// `(x1x2, x1x3, x2x4, x4x5, x4x6, x2x7, x6x8, x6x9)` in 9 variables.
pub fn example1() -> Ideal {
    Ideal::from_supports(
        9,
        &[&[1, 2], &[1, 3], &[2, 4], &[4, 5], &[4, 6], &[2, 7], &[6, 8], &[6, 9]],
    )
    .expect("valid fixture")
}

/// `(x1x2, x1x3, x2x4, x4x5, x4x6, x6x7, x6x8, x6x9)` in 9 variables.
pub fn example2() -> Ideal {
    Ideal::from_supports(
        9,
        &[&[1, 2], &[1, 3], &[2, 4], &[4, 5], &[4, 6], &[6, 7], &[6, 8], &[6, 9]],
    )
    .expect("valid fixture")
}
