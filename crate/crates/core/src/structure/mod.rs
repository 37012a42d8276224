//! Finite-order structure and the subgroups T and F.
//!
//! A finite-order element is brought into common-tree form `(D, D, σ)` by a
//! partition-refinement fixpoint: starting from the join of its domain and
//! range antichains, keep joining with the image antichain until the image of
//! the current partition is the partition itself.

mod interleave;
mod shaping;

use std::fmt;

use crate::addresses::{Address, Antichain, DEFAULT_MAX_DEPTH};
use crate::elements::Element;
use crate::error::{Error, Result};

pub use interleave::{interleave, interleave_permutation, Interleaving};
pub use shaping::{canonicalize_interleaved_swap, shape_by_gaps, shape_in_t, standard_swap};

/// Leaf bound used when a caller does not pick one.
pub const DEFAULT_LEAF_BOUND: usize = 4096;

/// A permutation of the leaves of one antichain: leaf `i` goes to leaf `perm[i]`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConePermutation {
    tree: Antichain,
    perm: Vec<usize>,
}

impl fmt::Debug for ConePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ConePermutation({:?}, {:?})", self.tree, self.perm)
    }
}

impl ConePermutation {
    pub fn new(tree: Antichain, perm: Vec<usize>) -> Result<Self> {
        let n = tree.len();
        let mut seen = vec![false; n];
        if perm.len() != n {
            return Err(Error::NotBijective);
        }
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::NotBijective);
            }
            seen[p] = true;
        }
        Ok(ConePermutation { tree, perm })
    }

    /// Builds the permutation from a leaf-to-leaf address map.
    pub fn from_images(tree: Antichain, images: &[Address]) -> Result<Self> {
        let perm = images
            .iter()
            .map(|a| tree.index_of(a).ok_or(Error::NotBijective))
            .collect::<Result<Vec<_>>>()?;
        Self::new(tree, perm)
    }

    pub fn tree(&self) -> &Antichain {
        &self.tree
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn image(&self, leaf: &Address) -> Option<&Address> {
        self.tree
            .index_of(leaf)
            .map(|i| &self.tree.leaves()[self.perm[i]])
    }

    pub fn is_moved(&self, i: usize) -> bool {
        self.perm[i] != i
    }

    pub fn moved(&self) -> Vec<usize> {
        (0..self.perm.len()).filter(|&i| self.is_moved(i)).collect()
    }

    pub fn moved_leaves(&self) -> Vec<Address> {
        self.moved()
            .into_iter()
            .map(|i| self.tree.leaves()[i].clone())
            .collect()
    }

    pub fn to_element(&self) -> Element {
        let leaves = self.tree.leaves();
        Element::from_pairs_unchecked(
            leaves
                .iter()
                .zip(&self.perm)
                .map(|(l, &p)| (l.clone(), leaves[p].clone()))
                .collect(),
        )
    }

    /// Cycles of length at least two, each listed from its least index.
    pub fn index_cycles(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.perm[start] == start {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut cur = self.perm[start];
            while cur != start {
                seen[cur] = true;
                cyc.push(cur);
                cur = self.perm[cur];
            }
            out.push(cyc);
        }
        out
    }

    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.index_cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, l| acc / gcd(acc, l) * l)
    }

    /// Every moved leaf has both circular neighbours fixed.
    pub fn is_interleaved(&self) -> bool {
        let n = self.perm.len();
        self.moved()
            .into_iter()
            .all(|i| !self.is_moved((i + n - 1) % n) && !self.is_moved((i + 1) % n))
    }

    /// Replaces a fixed leaf by its two (fixed) children.
    pub fn split_fixed(&self, leaf: &Address) -> Result<ConePermutation> {
        let i = self
            .tree
            .index_of(leaf)
            .ok_or_else(|| Error::LeafNotPresent(leaf.clone()))?;
        if self.is_moved(i) {
            return Err(Error::Internal(format!("leaf {leaf} is moved")));
        }
        let tree = self.tree.split(leaf)?;
        let shift = |p: usize| if p > i { p + 1 } else { p };
        let mut perm = Vec::with_capacity(self.perm.len() + 1);
        for (j, &p) in self.perm.iter().enumerate() {
            if j == i {
                perm.push(i);
                perm.push(i + 1);
            } else {
                perm.push(shift(p));
            }
        }
        Ok(ConePermutation { tree, perm })
    }

    /// The shallowest fixed leaf, lexicographically least among ties.
    pub fn shallowest_fixed(&self) -> Option<Address> {
        (0..self.perm.len())
            .filter(|&i| !self.is_moved(i))
            .map(|i| &self.tree.leaves()[i])
            .min_by_key(|l| l.len())
            .cloned()
    }
}

/// Finds `(D, σ)` with `D` a common refinement of the domain and range of `g`
/// that `g` permutes. Fails with `BoundExceeded` once the partition passes
/// `bound` leaves or the default depth bound; both mean no witness was found.
pub fn common_tree_form(g: &Element, bound: usize) -> Result<ConePermutation> {
    let mut part = g.domain().join(&g.range());
    loop {
        if part.len() > bound || part.max_depth() > DEFAULT_MAX_DEPTH {
            return Err(Error::BoundExceeded { bound });
        }
        let images: Vec<Address> = part
            .leaves()
            .iter()
            .map(|l| g.apply(l))
            .collect::<Result<_>>()?;
        let mut sorted = images.clone();
        sorted.sort();
        if sorted.as_slice() == part.leaves() {
            return ConePermutation::from_images(part, &images);
        }
        let image_part = Antichain::new(sorted).expect("image of a partition is a partition");
        part = part.join(&image_part);
    }
}

/// Order of `g`, or `None` when no finite-order witness exists within `bound`.
pub fn order_of(g: &Element, bound: usize) -> Option<u64> {
    common_tree_form(g, bound).ok().map(|p| p.order())
}

/// Disjoint cycles of cones over a common tree, fixed leaves listed apart.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleDecomposition {
    pub tree: Antichain,
    pub cycles: Vec<Vec<Address>>,
    pub fixed: Vec<Address>,
}

impl CycleDecomposition {
    pub fn product(&self) -> Result<Element> {
        let mut acc = Element::identity();
        for c in &self.cycles {
            acc = acc.compose(&Element::cycle(c)?)?;
        }
        Ok(acc)
    }
}

impl fmt::Display for CycleDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for (i, c) in self.cycles.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str("(")?;
            for (j, a) in c.iter().enumerate() {
                if j > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{a}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl From<&ConePermutation> for CycleDecomposition {
    fn from(p: &ConePermutation) -> Self {
        let leaves = p.tree.leaves();
        // Index order is lex order, so each cycle starts at its least member
        // and the cycles come out sorted by that member.
        let cycles = p
            .index_cycles()
            .into_iter()
            .map(|c| c.into_iter().map(|i| leaves[i].clone()).collect())
            .collect();
        let fixed = (0..leaves.len())
            .filter(|&i| !p.is_moved(i))
            .map(|i| leaves[i].clone())
            .collect();
        CycleDecomposition {
            tree: p.tree.clone(),
            cycles,
            fixed,
        }
    }
}

pub fn cycle_decomposition(g: &Element) -> Result<CycleDecomposition> {
    let p = common_tree_form(g, DEFAULT_LEAF_BOUND).map_err(|e| match e {
        Error::BoundExceeded { .. } => Error::NotFiniteOrder,
        other => other,
    })?;
    Ok(CycleDecomposition::from(&p))
}

/// Ranks of the images read in domain order.
fn image_ranks(g: &Element) -> Vec<usize> {
    let mut sorted: Vec<&Address> = g.images().collect();
    sorted.sort();
    g.images()
        .map(|r| sorted.binary_search(&r).unwrap())
        .collect()
}

/// Circular order is preserved: images in domain order are a rotation of
/// their sorted order.
pub fn in_t(g: &Element) -> bool {
    let ranks = image_ranks(g);
    let n = ranks.len();
    ranks
        .iter()
        .enumerate()
        .all(|(i, &r)| ranks[(i + 1) % n] == (r + 1) % n)
}

/// Linear order is preserved.
pub fn in_f(g: &Element) -> bool {
    image_ranks(g).iter().enumerate().all(|(i, &r)| i == r)
}

/// The element of T sending the `i`-th leaf of `p` to leaf `i + k (mod n)`.
pub fn rotation(p: &Antichain, k: i64) -> Element {
    let n = p.len() as i64;
    let leaves = p.leaves();
    Element::from_pairs_unchecked(
        (0..n)
            .map(|i| {
                (
                    leaves[i as usize].clone(),
                    leaves[(i + k).rem_euclid(n) as usize].clone(),
                )
            })
            .collect(),
    )
}

/// Recognises `g` as a single cycle of `len` cones `(a₀ a₁ …)` and returns the
/// coarsest such cones, starting from the lexicographically least.
pub fn as_cone_cycle(g: &Element, len: usize) -> Option<Vec<Address>> {
    let p = common_tree_form(g, DEFAULT_LEAF_BOUND).ok()?;
    let cycles = p.index_cycles();
    let first = cycles.first()?;
    if first.len() != len {
        return None;
    }
    let orbit: Vec<&Address> = first.iter().map(|&i| &p.tree().leaves()[i]).collect();
    let common = (0..=orbit.iter().map(|a| a.len()).min().unwrap())
        .take_while(|&l| {
            orbit
                .iter()
                .all(|a| a.bits()[a.len() - l..] == orbit[0].bits()[orbit[0].len() - l..])
        })
        .last()
        .unwrap_or(0);
    for l in (0..=common).rev() {
        let cones: Vec<Address> = orbit
            .iter()
            .map(|a| Address::from_bits(a.bits()[..a.len() - l].iter().copied()))
            .collect();
        if let Ok(c) = Element::cycle(&cones) {
            if &c == g {
                let start = (0..len).min_by_key(|&i| &cones[i]).unwrap();
                return Some((0..len).map(|i| cones[(start + i) % len].clone()).collect());
            }
        }
    }
    None
}

pub fn as_swap(g: &Element) -> Option<(Address, Address)> {
    as_cone_cycle(g, 2).map(|c| (c[0].clone(), c[1].clone()))
}
