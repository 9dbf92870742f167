//! In-place O(n·2^n) butterflies over the subset lattice.
//!
//! Every routine expects `a.len() == 2^n` and walks the bits one at a time;
//! after processing bit `i`, `a[S]` aggregates over subsets of `S` that differ
//! from it only in bits `0..=i`.

use crate::scalar::Scalar;

fn for_each_pair<T: Copy>(a: &mut [T], mut f: impl FnMut(T, &mut T)) {
    debug_assert!(a.len().is_power_of_two());
    let mut half = 1;
    while half < a.len() {
        for block in a.chunks_exact_mut(2 * half) {
            let (lo, hi) = block.split_at_mut(half);
            for (x, y) in lo.iter().zip(hi.iter_mut()) {
                f(*x, y);
            }
        }
        half <<= 1;
    }
}

/// `a[S] <- Σ_{T ⊆ S} a[T]`
pub(crate) fn zeta<T: Scalar>(a: &mut [T]) {
    for_each_pair(a, |x, y| *y = *y + x);
}

/// Inverse of [`zeta`]: `a[S] <- Σ_{T ⊆ S} (−1)^{|S∖T|} a[T]`
pub(crate) fn mobius<T: Scalar>(a: &mut [T]) {
    for_each_pair(a, |x, y| *y = *y - x);
}

/// `a[S] <- max_{T ⊆ S} a[T]`
pub(crate) fn max_zeta<T: Scalar>(a: &mut [T]) {
    for_each_pair(a, |x, y| *y = y.max_of(x));
}
