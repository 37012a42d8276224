use crate::addresses::Address;
use crate::elements::Element;

/// Cyclic descents of the image column of a pair list sorted by domain.
/// Unlike [`double_coset_invariant`] this accepts unreduced pair lists.
pub fn cyclic_descents(pairs: &[(Address, Address)]) -> usize {
    let n = pairs.len();
    if n < 2 {
        return 1;
    }
    (0..n)
        .filter(|&i| pairs[i].1 > pairs[(i + 1) % n].1)
        .count()
}

/// Number of cyclic descents of the image sequence read in domain order.
///
/// Relabelling the images by a circular-order-preserving map shifts every
/// rank difference by the same amount mod n, and rotating the sequence does
/// not change the cyclic count, so the value is constant on double cosets
/// `TgT`. Refining a pair inserts an ascent and nothing else. It equals 1
/// exactly on T.
pub fn double_coset_invariant(g: &Element) -> usize {
    // the identity refines to 0 -> 0, 1 -> 1, which has one descent
    cyclic_descents(g.pairs())
}
