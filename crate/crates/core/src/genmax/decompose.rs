use std::collections::HashMap;

use crate::addresses::Address;
use crate::elements::Element;
use crate::error::Result;

fn normalized(x: Address, y: Address) -> (Address, Address) {
    if x < y {
        (x, y)
    } else {
        (y, x)
    }
}

/// Index `i` of the lexicographically least sibling pair `(leaves[i], leaves[i+1])`.
fn sibling_pair(leaves: &[Address]) -> usize {
    leaves
        .windows(2)
        .position(|w| w[0].len() == w[1].len() && w[0].sibling().as_ref() == Some(&w[1]))
        .expect("a complete antichain with two or more leaves has a sibling pair")
}

fn merge_at(leaves: &[Address], i: usize) -> Vec<Address> {
    let mut out = Vec::with_capacity(leaves.len() - 1);
    out.extend_from_slice(&leaves[..i]);
    out.push(leaves[i].parent().unwrap());
    out.extend_from_slice(&leaves[i + 2..]);
    out
}

/// Swaps whose product sends every leaf of `from` onto a leaf of `to` by
/// prefix replacement, with the resulting leaf correspondence. Both are
/// sorted complete antichains of the same size.
fn tree_change(
    from: &[Address],
    to: &[Address],
) -> (Vec<(Address, Address)>, HashMap<Address, Address>) {
    if from.len() == 1 {
        return (
            Vec::new(),
            HashMap::from([(from[0].clone(), to[0].clone())]),
        );
    }
    let i = sibling_pair(from);
    let j = sibling_pair(to);
    let (merged_from, merged_to) = (merge_at(from, i), merge_at(to, j));
    let (px, py) = (from[i].parent().unwrap(), to[j].parent().unwrap());
    let (mut swaps, mut phi) = tree_change(&merged_from, &merged_to);
    let z = phi[&px].clone();
    if z != py {
        // Route the merged cone onto py; whoever went to py takes z instead.
        let w = phi
            .iter()
            .find(|(_, v)| **v == py)
            .map(|(k, _)| k.clone())
            .unwrap();
        phi.insert(w, z.clone());
        swaps.push((z, py.clone()));
    }
    phi.remove(&px);
    phi.insert(px.child(0), py.child(0));
    phi.insert(px.child(1), py.child(1));
    (swaps, phi)
}

/// Writes `g` as a product of an even number of swaps, read left to right.
/// Each swap is reported with its lexicographically smaller address first.
///
/// With domain leaves `Dᵢ` and images `Rᵢ`, a tree change by swaps carries the
/// `Rᵢ` onto the domain tree, transpositions of domain leaves put each `Rᵢ` on
/// `Dᵢ`, and `g` is the inverse of that product.
pub fn swap_decompose(g: &Element) -> Result<Vec<(Address, Address)>> {
    let domain: Vec<Address> = g.pairs().iter().map(|p| p.0.clone()).collect();
    let mut range: Vec<Address> = g.images().cloned().collect();
    range.sort();
    let (mut swaps, phi) = tree_change(&range, &domain);

    // holder[k]: domain leaf currently carrying the image cone of leaf k
    let index: HashMap<&Address, usize> = domain.iter().enumerate().map(|(k, d)| (d, k)).collect();
    let mut holder: Vec<usize> = g.pairs().iter().map(|(_, r)| index[&phi[r]]).collect();
    let mut owner: Vec<usize> = vec![0; domain.len()];
    for (k, &h) in holder.iter().enumerate() {
        owner[h] = k;
    }
    for k in 0..domain.len() {
        let h = holder[k];
        if h != k {
            // leaf k currently holds owner[k]'s cone; exchange with position h
            let other = owner[k];
            swaps.push((domain[h].clone(), domain[k].clone()));
            holder[k] = k;
            owner[k] = k;
            holder[other] = h;
            owner[h] = other;
        }
    }

    // g · s₁ · … · sₘ is the identity, so g = sₘ · … · s₁.
    let mut swaps: Vec<(Address, Address)> = swaps
        .into_iter()
        .rev()
        .map(|(x, y)| normalized(x, y))
        .collect();
    if swaps.len() % 2 == 1 {
        let (idx, _) = swaps
            .iter()
            .enumerate()
            .min_by(|x, y| x.1.cmp(y.1))
            .unwrap();
        let (x, y) = swaps.remove(idx);
        swaps.insert(idx, (x.child(1), y.child(1)));
        swaps.insert(idx, (x.child(0), y.child(0)));
    }
    Ok(swaps)
}

/// Product of a swap list, left to right.
pub fn swap_product(swaps: &[(Address, Address)]) -> Result<Element> {
    let mut acc = Element::identity();
    for (x, y) in swaps {
        acc = acc.compose(&Element::swap(x, y)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn el(pairs: &[(&str, &str)]) -> Element {
        Element::new(pairs.iter().map(|(d, r)| (a(d), a(r))).collect()).unwrap()
    }

    fn check(g: &Element) -> Vec<(Address, Address)> {
        let s = swap_decompose(g).unwrap();
        assert_eq!(s.len() % 2, 0);
        assert_eq!(&swap_product(&s).unwrap(), g);
        s
    }

    #[test]
    fn identity_is_empty() {
        assert!(check(&Element::identity()).is_empty());
    }

    #[test]
    fn single_swap_is_split() {
        let s = check(&Element::swap(&a("0"), &a("10")).unwrap());
        assert_eq!(s, vec![(a("00"), a("100")), (a("01"), a("101"))]);
    }

    #[test]
    fn infinite_order_elements() {
        check(&el(&[("0", "00"), ("10", "01"), ("11", "1")]));
        check(&el(&[("0", "1"), ("1", "0")]));
        check(&el(&[("00", "1"), ("01", "01"), ("1", "00")]));
        check(&el(&[("0", "11"), ("10", "0"), ("11", "10")]));
        check(&el(&[("00", "0"), ("01", "10"), ("1", "11")]));
        check(&el(&[
            ("000", "1"),
            ("001", "001"),
            ("01", "000"),
            ("1", "01"),
        ]));
    }

    #[test]
    fn finite_order_elements() {
        let c = Element::cycle(&[a("00"), a("110"), a("010"), a("101")])
            .unwrap()
            .compose(&Element::cycle(&[a("011"), a("111")]).unwrap())
            .unwrap();
        check(&c);
        check(&Element::cycle(&[a("00"), a("100"), a("1100")]).unwrap());
    }
}
