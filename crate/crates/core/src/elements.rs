//! Elements of Thompson's group V as reduced prefix substitution maps.
//!
//! All products use the right-action convention: `p·(gh) = (p·g)·h`, so
//! `g.compose(&h)` applies `g` first. Conjugation is `g^h = h⁻¹gh` and the
//! commutator is `[g,h] = g⁻¹h⁻¹gh`.

use std::fmt;

use crate::addresses::{is_complete_antichain, Address, Antichain, DEFAULT_MAX_DEPTH};
use crate::error::{Error, Result};

/// A prefix substitution map `αᵢw ↦ βᵢw`, kept in reduced canonical form with
/// pairs sorted by domain address.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    pairs: Vec<(Address, Address)>,
}

fn leaf_above_by<T>(items: &[T], key: impl Fn(&T) -> &Address, addr: &Address) -> Option<usize> {
    let idx = items.partition_point(|x| key(x) <= addr);
    if idx == 0 {
        return None;
    }
    key(&items[idx - 1]).is_prefix_of(addr).then_some(idx - 1)
}

/// Merges sibling pairs `(α0→β0, α1→β1)` into `α→β` until none remain.
/// Input must be sorted by domain.
fn reduce_sorted(pairs: Vec<(Address, Address)>) -> Vec<(Address, Address)> {
    let mut stack: Vec<(Address, Address)> = Vec::with_capacity(pairs.len());
    for p in pairs {
        stack.push(p);
        while stack.len() >= 2 {
            let n = stack.len();
            let (d0, r0) = &stack[n - 2];
            let (d1, r1) = &stack[n - 1];
            let mergeable = d0.bits().last() == Some(&0)
                && r0.bits().last() == Some(&0)
                && d1.bits().last() == Some(&1)
                && r1.bits().last() == Some(&1)
                && d0.sibling().as_ref() == Some(d1)
                && r0.sibling().as_ref() == Some(r1);
            if !mergeable {
                break;
            }
            let merged = (d0.parent().unwrap(), r0.parent().unwrap());
            stack.truncate(n - 2);
            stack.push(merged);
        }
    }
    stack
}

impl Element {
    pub fn identity() -> Self {
        Element {
            pairs: vec![(Address::root(), Address::root())],
        }
    }

    /// Builds the reduced element described by a list of cone pairs.
    pub fn new(pairs: Vec<(Address, Address)>) -> Result<Self> {
        let mut doms: Vec<&Address> = pairs.iter().map(|p| &p.0).collect();
        let mut rans: Vec<&Address> = pairs.iter().map(|p| &p.1).collect();
        doms.sort();
        rans.sort();
        if doms.windows(2).any(|w| w[0] == w[1]) || rans.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::NotBijective);
        }
        let dom: Vec<Address> = pairs.iter().map(|p| p.0.clone()).collect();
        if !is_complete_antichain(&dom) {
            return Err(Error::IncompleteDomain);
        }
        let ran: Vec<Address> = pairs.iter().map(|p| p.1.clone()).collect();
        if !is_complete_antichain(&ran) {
            return Err(Error::IncompleteRange);
        }
        Ok(Self::from_pairs_unchecked(pairs))
    }

    /// Sorts and reduces pairs already known to describe a valid map.
    pub(crate) fn from_pairs_unchecked(mut pairs: Vec<(Address, Address)>) -> Self {
        pairs.sort();
        Element {
            pairs: reduce_sorted(pairs),
        }
    }

    /// The element sending the `i`-th leaf of `domain` to `images[i]`.
    pub fn from_leaf_map(domain: &Antichain, images: Vec<Address>) -> Result<Self> {
        if domain.len() != images.len() {
            return Err(Error::NotBijective);
        }
        Self::new(domain.leaves().iter().cloned().zip(images).collect())
    }

    pub fn pairs(&self) -> &[(Address, Address)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.pairs.len() == 1 && self.pairs[0].0.is_root()
    }

    pub fn domain(&self) -> Antichain {
        Antichain::from_sorted_unchecked(self.pairs.iter().map(|p| p.0.clone()).collect())
    }

    pub fn range(&self) -> Antichain {
        let mut r: Vec<Address> = self.pairs.iter().map(|p| p.1.clone()).collect();
        r.sort();
        Antichain::from_sorted_unchecked(r)
    }

    /// Range addresses read in the lexicographic order of their domain leaves.
    pub fn images(&self) -> impl Iterator<Item = &Address> {
        self.pairs.iter().map(|p| &p.1)
    }

    pub fn max_depth(&self) -> usize {
        self.pairs
            .iter()
            .map(|(d, r)| d.len().max(r.len()))
            .max()
            .unwrap_or(0)
    }

    /// Canonical form of an arbitrary pair list; idempotent on elements.
    pub fn reduce(&self) -> Element {
        Element {
            pairs: reduce_sorted(self.pairs.clone()),
        }
    }

    /// Image of `addr`; fails when `addr` is a strict prefix of domain leaves.
    pub fn apply(&self, addr: &Address) -> Result<Address> {
        let i = leaf_above_by(&self.pairs, |p| &p.0, addr)
            .ok_or_else(|| Error::AddressTooShort(addr.clone()))?;
        let (d, r) = &self.pairs[i];
        Ok(r.concat(d.suffix_in(addr).unwrap()))
    }

    /// Pairs of `self` refined so that the domain side is exactly `domain`,
    /// which must refine the domain antichain of `self`.
    pub fn pairs_on(&self, domain: &Antichain) -> Result<Vec<(Address, Address)>> {
        domain
            .leaves()
            .iter()
            .map(|l| Ok((l.clone(), self.apply(l)?)))
            .collect()
    }

    /// "Apply `self`, then `other`" with the default depth bound.
    pub fn compose(&self, other: &Element) -> Result<Element> {
        self.compose_bounded(other, DEFAULT_MAX_DEPTH)
    }

    pub fn compose_bounded(&self, other: &Element, max_depth: usize) -> Result<Element> {
        if self.is_identity() {
            return Ok(other.clone());
        }
        if other.is_identity() {
            return Ok(self.clone());
        }
        let mut by_range: Vec<(&Address, &Address)> =
            self.pairs.iter().map(|(d, r)| (r, d)).collect();
        by_range.sort();
        let middle = self.range().join(&other.domain());
        let mut out = Vec::with_capacity(middle.len());
        for m in middle.leaves() {
            let i = leaf_above_by(&by_range, |p| p.0, m).expect("join refines range");
            let (r, d) = by_range[i];
            let dom = d.concat(r.suffix_in(m).unwrap());
            let j = leaf_above_by(&other.pairs, |p| &p.0, m).expect("join refines domain");
            let (d2, r2) = &other.pairs[j];
            let ran = r2.concat(d2.suffix_in(m).unwrap());
            let depth = dom.len().max(ran.len());
            if depth > max_depth {
                return Err(Error::DepthExceeded {
                    depth,
                    max: max_depth,
                });
            }
            out.push((dom, ran));
        }
        Ok(Self::from_pairs_unchecked(out))
    }

    pub fn invert(&self) -> Element {
        Self::from_pairs_unchecked(
            self.pairs
                .iter()
                .map(|(d, r)| (r.clone(), d.clone()))
                .collect(),
        )
    }

    /// `h⁻¹ · self · h`.
    pub fn conjugate(&self, h: &Element) -> Result<Element> {
        h.invert().compose(self)?.compose(h)
    }

    /// `self⁻¹ · h⁻¹ · self · h`.
    pub fn commutator(&self, h: &Element) -> Result<Element> {
        self.invert()
            .compose(&h.invert())?
            .compose(self)?
            .compose(h)
    }

    pub fn pow(&self, n: usize) -> Result<Element> {
        let mut acc = Element::identity();
        for _ in 0..n {
            acc = acc.compose(self)?;
        }
        Ok(acc)
    }

    /// The swap interchanging the disjoint cones at `a` and `b`.
    pub fn swap(a: &Address, b: &Address) -> Result<Element> {
        Self::cycle(&[a.clone(), b.clone()])
    }

    /// The element cyclically permuting the listed cones `a₀ → a₁ → … → a₀`.
    pub fn cycle(addrs: &[Address]) -> Result<Element> {
        if addrs.len() < 2 {
            return Err(Error::TooShort);
        }
        let tree = Antichain::containing(addrs)?;
        let n = addrs.len();
        let pairs = tree
            .leaves()
            .iter()
            .map(|l| match addrs.iter().position(|a| a == l) {
                Some(i) => (l.clone(), addrs[(i + 1) % n].clone()),
                None => (l.clone(), l.clone()),
            })
            .collect();
        Ok(Self::from_pairs_unchecked(pairs))
    }

    /// Reduced domain leaves that are moved. For finite-order elements their
    /// union is exactly the support; otherwise it over-approximates it.
    pub fn support_cones(&self) -> Vec<Address> {
        self.pairs
            .iter()
            .filter(|(d, r)| d != r)
            .map(|(d, _)| d.clone())
            .collect()
    }

    /// Some cone is fixed pointwise. A fixed cone in any representation
    /// survives reduction as a pair `α → α`, so one scan suffices.
    pub fn is_small_support(&self) -> bool {
        self.pairs.iter().any(|(d, r)| d == r)
    }

    /// Pair list on one line, comma separated.
    pub fn to_line(&self) -> String {
        self.pairs
            .iter()
            .map(|(d, r)| format!("{d} -> {r}"))
            .collect::<Vec<_>>()
            .join(", ")
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (d, r)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            write!(f, "{d} -> {r}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]", self.to_line())
    }
}
