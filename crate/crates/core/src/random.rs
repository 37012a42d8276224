//! Seeded generators for test corpora.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::addresses::{Address, Antichain};
use crate::elements::Element;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Profile {
    General,
    FiniteOrder,
    InT,
    Swap,
    ThreeCycle,
}

/// A complete antichain with exactly `leaves` leaves, grown by splitting a
/// uniformly chosen leaf at each step.
pub fn random_antichain<R: Rng + ?Sized>(rng: &mut R, leaves: usize) -> Antichain {
    let mut tree = vec![Address::root()];
    while tree.len() < leaves.max(1) {
        let i = rng.gen_range(0..tree.len());
        let leaf = tree.swap_remove(i);
        tree.push(leaf.child(0));
        tree.push(leaf.child(1));
    }
    Antichain::new(tree).expect("splitting leaves keeps the antichain complete")
}

/// A deterministic element of the requested class with at most
/// `max_leaves` leaves on each side. `max_leaves` is raised to the least
/// value the class needs (2, or 3 for 3-cycles).
pub fn random_element(seed: u64, max_leaves: usize, profile: Profile) -> Element {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_element_with(&mut rng, max_leaves, profile)
}

pub fn random_element_with<R: Rng + ?Sized>(
    rng: &mut R,
    max_leaves: usize,
    profile: Profile,
) -> Element {
    let least = if profile == Profile::ThreeCycle { 3 } else { 2 };
    let n = rng.gen_range(least..=max_leaves.max(least));
    let dom = random_antichain(rng, n);
    let leaves = dom.leaves();
    match profile {
        Profile::General => {
            let mut ran = random_antichain(rng, n).leaves().to_vec();
            ran.shuffle(rng);
            Element::from_leaf_map(&dom, ran)
        }
        Profile::FiniteOrder => {
            let mut ran = leaves.to_vec();
            ran.shuffle(rng);
            Element::from_leaf_map(&dom, ran)
        }
        Profile::InT => {
            let ran = random_antichain(rng, n);
            let k = rng.gen_range(0..n);
            let images = (0..n).map(|i| ran.leaves()[(i + k) % n].clone()).collect();
            Element::from_leaf_map(&dom, images)
        }
        Profile::Swap => {
            let picked: Vec<&Address> = leaves.choose_multiple(rng, 2).collect();
            Element::swap(picked[0], picked[1])
        }
        Profile::ThreeCycle => {
            let picked: Vec<Address> = leaves.choose_multiple(rng, 3).cloned().collect();
            Element::cycle(&picked)
        }
    }
    .expect("generated data is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::{in_t, order_of, DEFAULT_LEAF_BOUND};

    #[test]
    fn class_contracts() {
        for seed in 0..200 {
            let s = random_element(seed, 12, Profile::Swap);
            assert_eq!(order_of(&s, DEFAULT_LEAF_BOUND), Some(2));
            assert!(in_t(&random_element(seed, 12, Profile::InT)));
            let c = random_element(seed, 12, Profile::ThreeCycle);
            assert_eq!(order_of(&c, DEFAULT_LEAF_BOUND), Some(3));
            let f = random_element(seed, 12, Profile::FiniteOrder);
            assert!(order_of(&f, DEFAULT_LEAF_BOUND).is_some());
            assert!(random_element(seed, 12, Profile::General).len() <= 12);
        }
    }

    #[test]
    fn deterministic() {
        for p in [Profile::General, Profile::InT, Profile::ThreeCycle] {
            assert_eq!(random_element(7, 16, p), random_element(7, 16, p));
        }
    }
}
