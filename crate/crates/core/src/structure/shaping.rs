//! Building elements of T that carry marked leaves onto marked leaves.

use crate::addresses::{Address, Antichain};
use crate::elements::Element;
use crate::error::{Error, Result};

use super::{as_swap, in_t};

/// Circular gaps between consecutive marks, gap `j` following mark `j`.
fn gaps(tree: &Antichain, marks: &[usize]) -> Vec<Vec<Address>> {
    let n = tree.len();
    let k = marks.len();
    (0..k)
        .map(|j| {
            let start = marks[j];
            let end = if j + 1 < k {
                marks[j + 1]
            } else {
                marks[0] + n
            };
            (start + 1..end)
                .map(|i| tree.leaves()[i % n].clone())
                .collect()
        })
        .collect()
}

/// Splits leaves of `gap` until it has `target` leaves. The shallowest leaf is
/// split each time, the lexicographically last among equals.
fn grow_gap(gap: &mut Vec<Address>, target: usize) {
    while gap.len() < target {
        let (idx, _) = gap
            .iter()
            .enumerate()
            .min_by(|(_, x), (_, y)| x.len().cmp(&y.len()).then_with(|| y.cmp(x)))
            .expect("gap is nonempty");
        let leaf = gap.remove(idx);
        gap.insert(idx, leaf.child(1));
        gap.insert(idx, leaf.child(0));
    }
}

/// The circular-order-preserving element sending `dom_marks` to `ran_marks`
/// leaf for leaf, pairing the gaps between them after equalising their sizes.
/// Marks are leaf indices in increasing order.
pub fn shape_by_gaps(
    dom: &Antichain,
    dom_marks: &[usize],
    ran: &Antichain,
    ran_marks: &[usize],
) -> Result<Element> {
    if dom_marks.is_empty() || dom_marks.len() != ran_marks.len() {
        return Err(Error::LengthMismatch);
    }
    let dom_gaps = gaps(dom, dom_marks);
    let ran_gaps = gaps(ran, ran_marks);
    let mut pairs = Vec::with_capacity(dom.len().max(ran.len()));
    for (j, (mut dg, mut rg)) in dom_gaps.into_iter().zip(ran_gaps).enumerate() {
        if dg.is_empty() != rg.is_empty() {
            return Err(Error::GapMismatch);
        }
        let size = dg.len().max(rg.len());
        grow_gap(&mut dg, size);
        grow_gap(&mut rg, size);
        pairs.push((
            dom.leaves()[dom_marks[j]].clone(),
            ran.leaves()[ran_marks[j]].clone(),
        ));
        pairs.extend(dg.into_iter().zip(rg));
    }
    let t = Element::new(pairs)?;
    debug_assert!(in_t(&t));
    Ok(t)
}

fn marks_of(tree: &Antichain, seq: &[Address]) -> Result<Vec<usize>> {
    let marks = seq
        .iter()
        .map(|a| {
            tree.index_of(a)
                .ok_or_else(|| Error::LeafNotPresent(a.clone()))
        })
        .collect::<Result<Vec<_>>>()?;
    if marks.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::NotOrdered);
    }
    let n = tree.len();
    if marks.len() >= 2
        && (0..marks.len()).any(|j| (marks[j] + 1) % n == marks[(j + 1) % marks.len()])
    {
        return Err(Error::NotInterleaved);
    }
    Ok(marks)
}

/// An element of T mapping the cone at `alphas[i]` exactly onto the cone at
/// `betas[i]` for every `i`. Both sequences must be ordered leaf sequences of
/// their trees with no two entries circularly adjacent.
pub fn shape_in_t(
    a: &Antichain,
    alphas: &[Address],
    b: &Antichain,
    betas: &[Address],
) -> Result<Element> {
    if alphas.is_empty() || alphas.len() != betas.len() {
        return Err(Error::LengthMismatch);
    }
    let dm = marks_of(a, alphas)?;
    let rm = marks_of(b, betas)?;
    shape_by_gaps(a, &dm, b, &rm)
}

/// The standard interleaved swap every interleaved swap is T-conjugate to.
pub fn standard_swap() -> Element {
    Element::swap(&"00".parse().unwrap(), &"10".parse().unwrap()).unwrap()
}

/// For an interleaved swap `s`, an element `g` of T with `s^g = (00 10)`.
pub fn canonicalize_interleaved_swap(s: &Element) -> Result<Element> {
    let (x, y) = as_swap(s).ok_or(Error::NotInterleavedSwap)?;
    let tree = Antichain::containing(&[x.clone(), y.clone()])?;
    let target_tree = Antichain::uniform(2);
    shape_in_t(
        &tree,
        &[x, y],
        &target_tree,
        &["00".parse().unwrap(), "10".parse().unwrap()],
    )
    .map_err(|e| match e {
        Error::NotInterleaved | Error::GapMismatch => Error::NotInterleavedSwap,
        other => other,
    })
}
