//! Addresses of cones in Cantor space and complete antichains of them.
//!
//! An [`Address`] is a finite binary word; it names the cone of all infinite
//! sequences that begin with it. A complete [`Antichain`] is a set of pairwise
//! incomparable addresses whose cones partition Cantor space, i.e. the leaf set
//! of a finite rooted binary tree. Antichains are kept as sorted leaf lists and
//! the tree is never materialised.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default bound on address length for every refining operation.
pub const DEFAULT_MAX_DEPTH: usize = 64;

/// A finite word over `{0, 1}`. The empty word is the root and is written `e`.
///
/// The derived order is the lexicographic order on addresses, extended to
/// comparable pairs by putting the proper prefix first.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Address(Vec<u8>);

/// How two addresses sit relative to each other in the prefix order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixRelation {
    Equal,
    AIsPrefix,
    BIsPrefix,
    Incomparable,
}

#[allow(clippy::len_without_is_empty)]
impl Address {
    pub fn root() -> Self {
        Address(Vec::new())
    }

    /// Builds an address from bits; every entry must be 0 or 1.
    pub fn from_bits<I: IntoIterator<Item = u8>>(bits: I) -> Self {
        let bits: Vec<u8> = bits.into_iter().collect();
        assert!(bits.iter().all(|&b| b <= 1), "address bits must be 0 or 1");
        Address(bits)
    }

    pub fn bits(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_root(&self) -> bool {
        self.0.is_empty()
    }

    pub fn child(&self, bit: u8) -> Address {
        debug_assert!(bit <= 1);
        let mut bits = Vec::with_capacity(self.0.len() + 1);
        bits.extend_from_slice(&self.0);
        bits.push(bit);
        Address(bits)
    }

    pub fn concat(&self, suffix: &[u8]) -> Address {
        let mut bits = Vec::with_capacity(self.0.len() + suffix.len());
        bits.extend_from_slice(&self.0);
        bits.extend_from_slice(suffix);
        Address(bits)
    }

    pub fn parent(&self) -> Option<Address> {
        if self.0.is_empty() {
            None
        } else {
            Some(Address(self.0[..self.0.len() - 1].to_vec()))
        }
    }

    pub fn sibling(&self) -> Option<Address> {
        let (&last, init) = self.0.split_last()?;
        let mut bits = init.to_vec();
        bits.push(1 - last);
        Some(Address(bits))
    }

    /// True when `self` is a (not necessarily proper) prefix of `other`.
    pub fn is_prefix_of(&self, other: &Address) -> bool {
        other.0.starts_with(&self.0)
    }

    /// The suffix `w` with `other = self · w`, if `self` is a prefix of `other`.
    pub fn suffix_in<'a>(&self, other: &'a Address) -> Option<&'a [u8]> {
        other.0.strip_prefix(self.0.as_slice())
    }

    pub fn is_incomparable(&self, other: &Address) -> bool {
        prefix_relation(self, other) == PrefixRelation::Incomparable
    }
}

impl fmt::Display for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("e");
        }
        for &b in &self.0 {
            f.write_str(if b == 0 { "0" } else { "1" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Address {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Address({self})")
    }
}

/// Error returned when a string is not `e` or a nonempty word over `0`/`1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvalidAddress(pub String);

impl fmt::Display for InvalidAddress {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid address {:?}", self.0)
    }
}

impl std::error::Error for InvalidAddress {}

impl FromStr for Address {
    type Err = InvalidAddress;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        if s == "e" {
            return Ok(Address::root());
        }
        if s.is_empty() {
            return Err(InvalidAddress(s.to_string()));
        }
        s.bytes()
            .map(|c| match c {
                b'0' => Ok(0),
                b'1' => Ok(1),
                _ => Err(InvalidAddress(s.to_string())),
            })
            .collect::<std::result::Result<Vec<u8>, _>>()
            .map(Address)
    }
}

pub fn prefix_relation(a: &Address, b: &Address) -> PrefixRelation {
    match (a.is_prefix_of(b), b.is_prefix_of(a)) {
        (true, true) => PrefixRelation::Equal,
        (true, false) => PrefixRelation::AIsPrefix,
        (false, true) => PrefixRelation::BIsPrefix,
        (false, false) => PrefixRelation::Incomparable,
    }
}

/// Lexicographic order: `a < b` when they agree up to a position where `a`
/// has 0 and `b` has 1. A proper prefix sorts before its extensions.
pub fn lex_compare(a: &Address, b: &Address) -> Ordering {
    a.cmp(b)
}

/// Pairwise incomparable and covering Cantor space.
pub fn is_complete_antichain(addrs: &[Address]) -> bool {
    if addrs.is_empty() {
        return false;
    }
    let mut sorted: Vec<&Address> = addrs.iter().collect();
    sorted.sort();
    // In sorted order any comparable pair shows up as a comparable adjacent pair.
    if sorted.windows(2).any(|w| !w[0].is_incomparable(w[1])) {
        return false;
    }
    // Fold sibling leaves together; a complete set collapses to the root.
    let mut stack: Vec<Address> = Vec::with_capacity(sorted.len());
    for a in sorted {
        stack.push(a.clone());
        while stack.len() >= 2 {
            let n = stack.len();
            let (x, y) = (&stack[n - 2], &stack[n - 1]);
            if x.len() == y.len() && !x.is_root() && x.sibling().as_ref() == Some(y) {
                let p = y.parent().unwrap();
                stack.truncate(n - 2);
                stack.push(p);
            } else {
                break;
            }
        }
    }
    stack.len() == 1 && stack[0].is_root()
}

/// A complete antichain of addresses stored in lexicographic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    leaves: Vec<Address>,
}

impl fmt::Debug for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, l) in self.leaves.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.leaves.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl Antichain {
    /// The trivial partition `{e}`.
    pub fn root() -> Self {
        Antichain {
            leaves: vec![Address::root()],
        }
    }

    /// Returns `None` unless `leaves` is a complete antichain.
    pub fn new(mut leaves: Vec<Address>) -> Option<Self> {
        if !is_complete_antichain(&leaves) {
            return None;
        }
        leaves.sort();
        Some(Antichain { leaves })
    }

    pub(crate) fn from_sorted_unchecked(leaves: Vec<Address>) -> Self {
        debug_assert!(is_complete_antichain(&leaves));
        debug_assert!(leaves.windows(2).all(|w| w[0] < w[1]));
        Antichain { leaves }
    }

    /// The full tree of depth `depth`, i.e. all words of that length.
    pub fn uniform(depth: usize) -> Self {
        let leaves = (0..1usize << depth)
            .map(|k| Address::from_bits((0..depth).rev().map(|i| ((k >> i) & 1) as u8)))
            .collect();
        Antichain { leaves }
    }

    /// The right comb below `prefix` with `count` leaves:
    /// `prefix·0, prefix·10, …, prefix·1^(count-2)·0, prefix·1^(count-1)`.
    pub fn comb_leaves(prefix: &Address, count: usize) -> Vec<Address> {
        assert!(count >= 1);
        let mut out = Vec::with_capacity(count);
        let mut cur = prefix.clone();
        for _ in 0..count - 1 {
            out.push(cur.child(0));
            cur = cur.child(1);
        }
        out.push(cur);
        out
    }

    pub fn comb(count: usize) -> Self {
        Antichain {
            leaves: Self::comb_leaves(&Address::root(), count),
        }
    }

    /// The coarsest complete antichain having every address of `addrs` as a
    /// leaf. The addresses must be pairwise incomparable.
    pub fn containing(addrs: &[Address]) -> Result<Self> {
        for (i, a) in addrs.iter().enumerate() {
            for b in &addrs[i + 1..] {
                if !a.is_incomparable(b) {
                    return Err(Error::NotIncomparable(a.clone(), b.clone()));
                }
            }
        }
        if addrs.is_empty() || (addrs.len() == 1 && addrs[0].is_root()) {
            return Ok(Antichain::root());
        }
        let mut internal = BTreeSet::new();
        for a in addrs {
            for k in 0..a.len() {
                internal.insert(Address(a.0[..k].to_vec()));
            }
        }
        let mut leaves: Vec<Address> = internal
            .iter()
            .flat_map(|x| [x.child(0), x.child(1)])
            .filter(|c| !internal.contains(c))
            .collect();
        leaves.sort();
        Ok(Antichain::from_sorted_unchecked(leaves))
    }

    pub fn leaves(&self) -> &[Address] {
        &self.leaves
    }

    pub fn len(&self) -> usize {
        self.leaves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.leaves.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.leaves.iter().map(Address::len).max().unwrap_or(0)
    }

    pub fn index_of(&self, leaf: &Address) -> Option<usize> {
        self.leaves.binary_search(leaf).ok()
    }

    pub fn contains(&self, leaf: &Address) -> bool {
        self.index_of(leaf).is_some()
    }

    /// Index of the leaf that is a prefix of (or equal to) `addr`, if any.
    pub fn leaf_above(&self, addr: &Address) -> Option<usize> {
        // The only leaves sorting between a prefix leaf and `addr` would extend
        // that leaf, which an antichain forbids.
        let idx = self.leaves.partition_point(|l| l <= addr);
        if idx == 0 {
            return None;
        }
        let cand = &self.leaves[idx - 1];
        cand.is_prefix_of(addr).then_some(idx - 1)
    }

    /// True when every leaf of `self` lies below some leaf of `coarser`.
    pub fn refines(&self, coarser: &Antichain) -> bool {
        self.leaves.iter().all(|l| coarser.leaf_above(l).is_some())
    }

    /// Coarsest common refinement of two complete antichains.
    pub fn join(&self, other: &Antichain) -> Antichain {
        let (p, q) = (&self.leaves, &other.leaves);
        let mut out = Vec::with_capacity(p.len().max(q.len()));
        let (mut i, mut j) = (0, 0);
        while i < p.len() && j < q.len() {
            let (a, b) = (&p[i], &q[j]);
            match prefix_relation(a, b) {
                PrefixRelation::Equal => {
                    out.push(a.clone());
                    i += 1;
                    j += 1;
                }
                PrefixRelation::AIsPrefix => {
                    out.push(b.clone());
                    j += 1;
                    if j == q.len() || !a.is_prefix_of(&q[j]) {
                        i += 1;
                    }
                }
                PrefixRelation::BIsPrefix => {
                    out.push(a.clone());
                    i += 1;
                    if i == p.len() || !b.is_prefix_of(&p[i]) {
                        j += 1;
                    }
                }
                PrefixRelation::Incomparable => {
                    unreachable!("complete antichains are traversed in lockstep")
                }
            }
        }
        Antichain::from_sorted_unchecked(out)
    }

    /// Replaces `leaf` by its two children.
    pub fn split(&self, leaf: &Address) -> Result<Antichain> {
        let idx = self
            .index_of(leaf)
            .ok_or_else(|| Error::LeafNotPresent(leaf.clone()))?;
        let mut leaves = Vec::with_capacity(self.leaves.len() + 1);
        leaves.extend_from_slice(&self.leaves[..idx]);
        leaves.push(leaf.child(0));
        leaves.push(leaf.child(1));
        leaves.extend_from_slice(&self.leaves[idx + 1..]);
        Ok(Antichain { leaves })
    }

    /// Left and right neighbours of `leaf` in the circular leaf order.
    pub fn circular_neighbors(&self, leaf: &Address) -> Result<(Address, Address)> {
        let idx = self
            .index_of(leaf)
            .ok_or_else(|| Error::LeafNotPresent(leaf.clone()))?;
        let n = self.leaves.len();
        if n < 2 {
            return Err(Error::SingletonAntichain);
        }
        Ok((
            self.leaves[(idx + n - 1) % n].clone(),
            self.leaves[(idx + 1) % n].clone(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(s: &str) -> Address {
        s.parse().unwrap()
    }

    fn ac(s: &str) -> Antichain {
        Antichain::new(s.split_whitespace().map(a).collect()).unwrap()
    }

    #[test]
    fn prefix_relation_examples() {
        assert_eq!(
            prefix_relation(&a("0"), &a("01")),
            PrefixRelation::AIsPrefix
        );
        assert_eq!(
            prefix_relation(&a("01"), &a("0")),
            PrefixRelation::BIsPrefix
        );
        assert_eq!(
            prefix_relation(&a("00"), &a("10")),
            PrefixRelation::Incomparable
        );
        assert_eq!(prefix_relation(&a("e"), &a("e")), PrefixRelation::Equal);
    }

    #[test]
    fn lex_order() {
        assert_eq!(lex_compare(&a("00"), &a("100")), Ordering::Less);
        assert_eq!(lex_compare(&a("1110"), &a("1100")), Ordering::Greater);
        assert_eq!(lex_compare(&a("011"), &a("011")), Ordering::Equal);
        // proper prefix first
        assert_eq!(lex_compare(&a("0"), &a("01")), Ordering::Less);
        assert_eq!(lex_compare(&a("e"), &a("0")), Ordering::Less);
        let mut v = vec![a("1110"), a("00"), a("1100"), a("100")];
        v.sort_by(lex_compare);
        assert_eq!(v, vec![a("00"), a("100"), a("1100"), a("1110")]);
    }

    #[test]
    fn address_text() {
        assert_eq!(a("e"), Address::root());
        assert_eq!(Address::root().to_string(), "e");
        assert_eq!(a("0110").to_string(), "0110");
        assert!("".parse::<Address>().is_err());
        assert!("012".parse::<Address>().is_err());
        assert!("ee".parse::<Address>().is_err());
    }

    #[test]
    fn completeness() {
        let v = |s: &str| s.split_whitespace().map(a).collect::<Vec<_>>();
        assert!(is_complete_antichain(&v("0 10 11")));
        assert!(!is_complete_antichain(&v("0 1 11")));
        assert!(!is_complete_antichain(&v("0 11")));
        assert!(is_complete_antichain(&v("e")));
        assert!(!is_complete_antichain(&[]));
        assert!(!is_complete_antichain(&v("0 1 1")));
        assert!(is_complete_antichain(&v("11 0 100 101")));
    }

    #[test]
    fn join_examples() {
        assert_eq!(ac("0 1").join(&ac("0 10 11")), ac("0 10 11"));
        assert_eq!(ac("00 01 1").join(&ac("0 10 11")), ac("00 01 10 11"));
        let p = ac("000 001 01 1");
        assert_eq!(p.join(&p), p);
        assert_eq!(Antichain::root().join(&p), p);
    }

    #[test]
    fn split_examples() {
        assert_eq!(ac("0 1").split(&a("1")).unwrap(), ac("0 10 11"));
        assert_eq!(ac("00 01 1").split(&a("00")).unwrap(), ac("000 001 01 1"));
        assert_eq!(
            ac("0 1").split(&a("01")),
            Err(Error::LeafNotPresent(a("01")))
        );
    }

    #[test]
    fn neighbors() {
        let p = ac("00 01 10 11");
        assert_eq!(p.circular_neighbors(&a("00")).unwrap(), (a("11"), a("01")));
        assert_eq!(p.circular_neighbors(&a("11")).unwrap(), (a("10"), a("00")));
        assert_eq!(
            ac("0 10 11").circular_neighbors(&a("10")).unwrap(),
            (a("0"), a("11"))
        );
        assert_eq!(
            Antichain::root().circular_neighbors(&a("e")),
            Err(Error::SingletonAntichain)
        );
        assert_eq!(
            p.circular_neighbors(&a("0")),
            Err(Error::LeafNotPresent(a("0")))
        );
    }

    #[test]
    fn containing_is_minimal() {
        assert_eq!(
            Antichain::containing(&[a("00"), a("10")]).unwrap(),
            ac("00 01 10 11")
        );
        assert_eq!(
            Antichain::containing(&[a("00"), a("100"), a("1100")]).unwrap(),
            ac("00 01 100 101 1100 1101 111")
        );
        assert!(Antichain::containing(&[a("0"), a("01")]).is_err());
        assert_eq!(Antichain::containing(&[a("e")]).unwrap(), Antichain::root());
    }

    #[test]
    fn leaf_above_lookup() {
        let p = ac("0 10 11");
        assert_eq!(p.leaf_above(&a("0110")), Some(0));
        assert_eq!(p.leaf_above(&a("10")), Some(1));
        assert_eq!(p.leaf_above(&a("1")), None);
        assert_eq!(p.leaf_above(&a("e")), None);
    }

    #[test]
    fn combs() {
        assert_eq!(Antichain::comb(1), Antichain::root());
        assert_eq!(Antichain::comb(4), ac("0 10 110 111"));
        assert_eq!(
            Antichain::comb_leaves(&a("0"), 3),
            vec![a("00"), a("010"), a("011")]
        );
        assert_eq!(Antichain::uniform(2), ac("00 01 10 11"));
    }
}
