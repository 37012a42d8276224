//! Conjugating a finite-order element into interleaved position.
//!
//! Elements of T preserve the circular order, so T-conjugation alone cannot
//! separate two adjacent moved cones. The search below conjugates by words in
//! the element itself and a rotation of its common tree. The tree is first
//! padded (splitting fixed leaves) to a prime number of leaves: the rotation
//! group then has no blocks, so together with a 3-cycle it generates the full
//! alternating group and an interleaved position is always reachable.

use std::collections::{HashMap, VecDeque};

use crate::elements::Element;
use crate::error::{Error, Result};
use crate::word::{Token, Word};

use super::{common_tree_form, rotation, ConePermutation, DEFAULT_LEAF_BOUND};

const MAX_STATES: usize = 400_000;

/// A conjugator word (with `A` standing for the input element) and the
/// interleaved permutation it produces: `perm = conjugator⁻¹ · A · conjugator`.
#[derive(Debug, Clone)]
pub struct Interleaving {
    pub conjugator: Word,
    pub perm: ConePermutation,
}

pub fn interleave(g: &Element) -> Result<Interleaving> {
    if g.is_identity() {
        return Err(Error::IdentityInput);
    }
    if !g.is_small_support() {
        return Err(Error::FullSupport);
    }
    let p = common_tree_form(g, DEFAULT_LEAF_BOUND).map_err(|e| match e {
        Error::BoundExceeded { .. } => Error::NotFiniteOrder,
        other => other,
    })?;
    interleave_permutation(&p)
}

fn is_prime(n: usize) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn no_two_adjacent(set: &[usize], n: usize) -> bool {
    // `set` is sorted
    let k = set.len();
    k < 2
        || (0..k).all(|j| {
            let next = if j + 1 < k { set[j + 1] } else { set[0] + n };
            next - set[j] >= 2
        })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Move {
    Rot,
    RotInv,
    Gen,
    GenInv,
}

/// Interleaves a permutation given on its own tree; `A` in the returned word
/// is the element `p` represents.
pub fn interleave_permutation(p: &ConePermutation) -> Result<Interleaving> {
    if p.moved().is_empty() {
        return Err(Error::IdentityInput);
    }
    if p.is_interleaved() {
        return Ok(Interleaving {
            conjugator: Word::new(),
            perm: p.clone(),
        });
    }
    if p.shallowest_fixed().is_none() {
        return Err(Error::FullSupport);
    }
    let moved_count = p.moved().len();
    let mut target = p.tree().len().max(2 * moved_count + 1).max(7);
    while !is_prime(target) {
        target += 1;
    }
    let mut p = p.clone();
    while p.tree().len() < target {
        let leaf = p
            .shallowest_fixed()
            .expect("fixed leaves survive splitting");
        p = p.split_fixed(&leaf)?;
    }
    let n = p.tree().len();
    let sigma = p.perm().to_vec();
    let mut sigma_inv = vec![0; n];
    for (i, &s) in sigma.iter().enumerate() {
        sigma_inv[s] = i;
    }
    let step = |set: &[usize], mv: Move| -> Vec<usize> {
        let mut out: Vec<usize> = set
            .iter()
            .map(|&i| match mv {
                Move::Rot => (i + 1) % n,
                Move::RotInv => (i + n - 1) % n,
                Move::Gen => sigma[i],
                Move::GenInv => sigma_inv[i],
            })
            .collect();
        out.sort_unstable();
        out
    };

    // 0-1 search: rotations are free, uses of the element cost one.
    let start = p.moved();
    let mut parent: HashMap<Vec<usize>, Option<(Vec<usize>, Move)>> = HashMap::new();
    let mut dist: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    dist.insert(start.clone(), 0);
    parent.insert(start.clone(), None);
    queue.push_back(start);
    let mut goal = None;
    while let Some(set) = queue.pop_front() {
        if no_two_adjacent(&set, n) {
            goal = Some(set);
            break;
        }
        let d = dist[&set];
        for mv in [Move::Rot, Move::RotInv, Move::Gen, Move::GenInv] {
            let cost = if matches!(mv, Move::Rot | Move::RotInv) {
                0
            } else {
                1
            };
            let next = step(&set, mv);
            if dist.get(&next).is_some_and(|&old| old <= d + cost) {
                continue;
            }
            dist.insert(next.clone(), d + cost);
            parent.insert(next.clone(), Some((set.clone(), mv)));
            if cost == 0 {
                queue.push_front(next);
            } else {
                queue.push_back(next);
            }
            if dist.len() > MAX_STATES {
                return Err(Error::SearchExhausted { states: dist.len() });
            }
        }
    }
    let goal = goal.ok_or(Error::SearchExhausted { states: dist.len() })?;
    let mut moves = Vec::new();
    let mut cur = goal;
    while let Some(Some((prev, mv))) = parent.get(&cur) {
        moves.push(*mv);
        cur = prev.clone();
    }
    moves.reverse();

    // Position map of the conjugator, first move applied first.
    let mut w: Vec<usize> = (0..n).collect();
    for &mv in &moves {
        for x in w.iter_mut() {
            *x = match mv {
                Move::Rot => (*x + 1) % n,
                Move::RotInv => (*x + n - 1) % n,
                Move::Gen => sigma[*x],
                Move::GenInv => sigma_inv[*x],
            };
        }
    }
    let mut conj = vec![0; n];
    for i in 0..n {
        conj[w[i]] = w[sigma[i]];
    }
    let perm = ConePermutation::new(p.tree().clone(), conj)?;

    let rot = rotation(p.tree(), 1);
    let rot_inv = rot.invert();
    let mut conjugator = Word::new();
    for mv in moves {
        conjugator.push(match mv {
            Move::Rot => Token::T(rot.clone()),
            Move::RotInv => Token::T(rot_inv.clone()),
            Move::Gen => Token::A,
            Move::GenInv => Token::AInv,
        });
    }
    debug_assert!(perm.is_interleaved());
    Ok(Interleaving { conjugator, perm })
}
