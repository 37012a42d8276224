//! Constructive generation: from one element outside T (or a small-support
//! swap, or a small-support 3-cycle) together with T, build any target.

use std::collections::HashMap;

use crate::addresses::{Address, Antichain};
use crate::elements::Element;
use crate::error::{Error, Result};
use crate::structure::{
    as_cone_cycle, as_swap, canonicalize_interleaved_swap, in_t, interleave_permutation, rotation,
    shape_in_t, ConePermutation,
};
use crate::word::{Token, Word};

use super::certificate::{Branch, Certificate};
use super::decompose::swap_decompose;

fn addr(s: &str) -> Address {
    s.parse().expect("literal address")
}

fn addrs(s: &str) -> Vec<Address> {
    s.split_whitespace().map(addr).collect()
}

fn ensure(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Internal(what.to_string()))
    }
}

fn ensure_in_t(e: &Element, what: &str) -> Result<()> {
    ensure(in_t(e), &format!("{what} is not in T"))
}

/// Handles targets that need no construction.
fn trivial_word(gen: &Element, target: &Element) -> Option<Word> {
    if target.is_identity() {
        Some(Word::new())
    } else if target == gen {
        Some(Word::generator())
    } else if in_t(target) {
        Some(Word::t(target.clone()))
    } else {
        None
    }
}

/// The leaf-level permutation of a cone cycle on the coarsest tree carrying it.
fn cone_cycle_permutation(g: &Element, cones: &[Address]) -> Result<ConePermutation> {
    cone_perm_on(g, &Antichain::containing(cones)?)
}

/// An interleaved swap in `⟨s, T⟩`, as a word in `s` and T, with its cones.
fn interleaved_swap_word(
    s: &Element,
    x: &Address,
    y: &Address,
    cert: &mut Certificate,
) -> Result<(Word, Address, Address)> {
    let mut p = cone_cycle_permutation(s, &[x.clone(), y.clone()])?;
    while p.tree().len() < 4 {
        let leaf = p.shallowest_fixed().ok_or(Error::FullSupportSwap)?;
        p = p.split_fixed(&leaf)?;
    }
    let tree = p.tree().clone();
    let n = tree.len();
    let (i, j) = (tree.index_of(x).unwrap(), tree.index_of(y).unwrap());
    let (first, second) = if (i + 1) % n == j {
        (i, j)
    } else if (j + 1) % n == i {
        (j, i)
    } else {
        return Ok((Word::generator(), x.clone(), y.clone()));
    };
    // Adjacent: rotate one step so the swap moves onto (second third), then
    // conjugate the original by that copy.
    let third = (second + 1) % n;
    let leaves = tree.leaves();
    let rho = rotation(&tree, 1);
    ensure_in_t(&rho, "rotation")?;
    let moved = Word::generator().conjugated_by_t(&rho);
    ensure(
        moved.evaluate(s)? == Element::swap(&leaves[second], &leaves[third])?,
        "rotated swap",
    )?;
    let u = Word::generator().conjugated_by(&moved);
    let (p0, p1) = (leaves[first].clone(), leaves[third].clone());
    let u_elem = u.evaluate(s)?;
    ensure(u_elem == Element::swap(&p0, &p1)?, "conjugated swap")?;
    cert.record("rho", &rho);
    Ok((u, p0, p1))
}

/// Generation engine for a swap of small support: writes `target` over `s` and T.
pub fn express_via_swap_and_t(s: &Element, target: &Element) -> Result<Certificate> {
    let (x, y) = as_swap(s).ok_or(Error::NotSwap)?;
    if !s.is_small_support() {
        return Err(Error::FullSupportSwap);
    }
    if let Some(word) = trivial_word(s, target) {
        return Ok(Certificate::new(target.clone(), word));
    }
    let mut cert = Certificate::new(target.clone(), Word::new());
    let (u_word, u0, u1) = interleaved_swap_word(s, &x, &y, &mut cert)?;
    let u_elem = Element::swap(&u0, &u1)?;
    cert.record("u", &u_elem);
    let canon_u = canonicalize_interleaved_swap(&u_elem)?;
    ensure_in_t(&canon_u, "canonicalizer of u")?;
    cert.record("canon_u", &canon_u);

    let full = Element::swap(&addr("0"), &addr("1"))?;
    let mut cache: HashMap<(Address, Address), Word> = HashMap::new();
    let mut word_for_interleaved = |p: &Address, q: &Address| -> Result<Word> {
        if let Some(w) = cache.get(&(p.clone(), q.clone())) {
            return Ok(w.clone());
        }
        let g = canonicalize_interleaved_swap(&Element::swap(p, q)?)?;
        ensure_in_t(&g, "canonicalizer")?;
        // σ(p,q) = σ(00,10)^{g⁻¹} = u^{canon_u · g⁻¹}
        let k = canon_u.compose(&g.invert())?;
        let w = u_word.conjugated_by_t(&k);
        cache.insert((p.clone(), q.clone()), w.clone());
        Ok(w)
    };

    let mut word = Word::new();
    for (p, q) in swap_decompose(target)? {
        let sw = Element::swap(&p, &q)?;
        if sw == full {
            word.push(Token::T(full.clone()));
            continue;
        }
        match word_for_interleaved(&p, &q) {
            Ok(w) => word.append(&w),
            Err(Error::NotInterleavedSwap) => {
                // both halves of a split swap are interleaved
                word.append(&word_for_interleaved(&p.child(0), &q.child(0))?);
                word.append(&word_for_interleaved(&p.child(1), &q.child(1))?);
            }
            Err(e) => return Err(e),
        }
    }
    cert.word = word;
    Ok(cert)
}

/// Generation engine for a 3-cycle of small support, following the chain
/// `(00 100 1100)` → `(00 1110)(100 1100)` → `(00 1100)(100 1110)` → `(0 10)`.
pub fn express_via_three_cycle_and_t(f: &Element, target: &Element) -> Result<Certificate> {
    let cones = as_cone_cycle(f, 3).ok_or(Error::NotThreeCycle)?;
    if !f.is_small_support() {
        return Err(Error::FullSupport);
    }
    if let Some(word) = trivial_word(f, target) {
        return Ok(Certificate::new(target.clone(), word));
    }
    let mut cert = Certificate::new(target.clone(), Word::new());

    // Interleave, then orient so the cycle runs in lexicographic order.
    let p = cone_cycle_permutation(f, &cones)?;
    let il = interleave_permutation(&p)?;
    for t in il.conjugator.t_elements() {
        ensure_in_t(t, "interleaving rotation")?;
    }
    let h = &il.perm;
    let moved = h.moved_leaves();
    ensure(moved.len() == 3, "interleaved 3-cycle")?;
    let oriented = if h.image(&moved[0]) == Some(&moved[1]) {
        Word::generator()
    } else {
        Word::generator_inverse()
    };
    let f1 = oriented.conjugated_by(&il.conjugator);
    ensure(
        f1.evaluate(f)? == Element::cycle(&moved)?,
        "oriented interleaved 3-cycle",
    )?;
    cert.record("interleaved", &Element::cycle(&moved)?);

    // Shape onto (00 100 1100).
    let base = addrs("00 100 1100");
    let base_tree = Antichain::containing(&base)?;
    let t = shape_in_t(h.tree(), &moved, &base_tree, &base)?;
    ensure_in_t(&t, "t")?;
    let f2 = f1.conjugated_by_t(&t);
    let c0 = Element::cycle(&base)?;
    ensure(f2.evaluate(f)? == c0, "(00 100 1100)")?;
    cert.record("t", &t);

    // (00 100 1100)^x = (00 100 1110)
    let moved_base = addrs("00 100 1110");
    let x = shape_in_t(
        &base_tree,
        &base,
        &Antichain::containing(&moved_base)?,
        &moved_base,
    )?;
    ensure_in_t(&x, "x")?;
    ensure(
        c0.conjugate(&x)? == Element::cycle(&moved_base)?,
        "(00 100 1110)",
    )?;
    cert.record("x", &x);

    let sw = |a: &str, b: &str| Element::swap(&addr(a), &addr(b));
    let prod = f2.clone().then(&f2.conjugated_by_t(&x));
    ensure(
        prod.evaluate(f)? == sw("00", "1110")?.compose(&sw("100", "1100")?)?,
        "(00 1110)(100 1100)",
    )?;
    let q = prod.conjugated_by(&f2);
    let q_elem = q.evaluate(f)?;
    ensure(
        q_elem == sw("00", "1100")?.compose(&sw("100", "1110")?)?,
        "(00 1100)(100 1110)",
    )?;
    cert.record("q", &q_elem);

    let support = addrs("00 100 1100 1110");
    let support_tree = Antichain::containing(&support)?;
    let shaped = |targets: &str| -> Result<Element> {
        let tgt = addrs(targets);
        shape_in_t(&support_tree, &support, &Antichain::containing(&tgt)?, &tgt)
    };
    let y = shaped("000 010 1000 1010")?;
    let z = shaped("001 011 1001 1011")?;
    ensure_in_t(&y, "y")?;
    ensure_in_t(&z, "z")?;
    let qy = q_elem.conjugate(&y)?;
    let qz = q_elem.conjugate(&z)?;
    ensure(
        qy == sw("000", "1000")?.compose(&sw("010", "1010")?)?,
        "(000 1000)(010 1010)",
    )?;
    ensure(
        qz == sw("001", "1001")?.compose(&sw("011", "1011")?)?,
        "(001 1001)(011 1011)",
    )?;
    cert.record("y", &y);
    cert.record("z", &z);
    cert.record("q^y", &qy);
    cert.record("q^z", &qz);

    let s_word = q.conjugated_by_t(&y).then(&q.conjugated_by_t(&z));
    let s_elem = s_word.evaluate(f)?;
    ensure(s_elem == sw("0", "10")?, "(0 10)")?;
    cert.record("swap", &s_elem);

    let inner = express_via_swap_and_t(&s_elem, target)?;
    cert.absorb_audit("swap", &inner);
    cert.word = inner.word.substitute(&s_word);
    Ok(cert)
}

/// Builds a certificate that `target` lies in `⟨a, T⟩` for `a` outside T.
pub fn maximality_certificate(a: &Element, target: &Element) -> Result<Certificate> {
    if in_t(a) {
        return Err(Error::GeneratorInT);
    }
    let mut cert = Certificate::new(target.clone(), Word::new());
    let dom = a.domain();
    let ran = a.range();
    let n = dom.len();
    let leaves = dom.leaves();

    // (1) b ∈ T takes the range tree back to the domain tree with a rotation
    // that returns the image of the first leaf to where it started.
    let rank: Vec<usize> = a.images().map(|r| ran.index_of(r).unwrap()).collect();
    let k = (n - rank[0]) % n;
    let b = Element::new(
        ran.leaves()
            .iter()
            .enumerate()
            .map(|(j, r)| (r.clone(), leaves[(j + k) % n].clone()))
            .collect(),
    )?;
    ensure_in_t(&b, "b")?;
    let c_perm = ConePermutation::new(dom.clone(), rank.iter().map(|&r| (r + k) % n).collect())?;
    let c = a.compose(&b)?;
    ensure(c == c_perm.to_element(), "c = ab permutes the domain tree")?;
    ensure(!c_perm.is_moved(0), "c fixes a leaf")?;
    cert.record("b", &b);
    cert.record("c", &c);

    // (2) Conjugate so that c fixes the cone at 0 and moves the cone at 10:
    // send the circular leaf sequence, starting at a fixed leaf followed by a
    // moved one, onto the comb 0, 10, 110, ….
    let i0 = (0..n)
        .find(|&i| !c_perm.is_moved(i) && c_perm.is_moved((i + 1) % n))
        .ok_or_else(|| Error::Internal("c moves no leaf".into()))?;
    let comb = Antichain::comb(n);
    let s = Element::new(
        (0..n)
            .map(|j| (leaves[(i0 + j) % n].clone(), comb.leaves()[j].clone()))
            .collect(),
    )?;
    ensure_in_t(&s, "s")?;
    let c1 = c.conjugate(&s)?;
    let c1_perm = cone_perm_on(&c1, &comb)?;
    let (zero, ten, eleven) = (addr("0"), addr("10"), addr("11"));
    ensure(c1_perm.image(&zero) == Some(&zero), "c fixes 0")?;
    let ten_image = c1_perm.image(&ten).unwrap().clone();
    ensure(eleven.is_prefix_of(&ten_image), "10 moves into 11")?;
    cert.record("s", &s);
    cert.record("c'", &c1);

    // (3) the rightmost moved leaf and its right circular neighbour γ
    let rightmost = *c1_perm.moved().last().unwrap();
    let gamma = (rightmost + 1) % n;
    ensure(!c1_perm.is_moved(gamma), "γ is fixed")?;

    // (4) d ∈ T sends the rightmost moved leaf to 10, γ to 11 and the rest
    // onto a comb under 0.
    let mut range_seq = vec![ten.clone(), eleven.clone()];
    range_seq.extend(Antichain::comb_leaves(&zero, n - 2));
    let d = Element::new(
        (0..n)
            .map(|j| {
                (
                    comb.leaves()[(rightmost + j) % n].clone(),
                    range_seq[j].clone(),
                )
            })
            .collect(),
    )?;
    ensure_in_t(&d, "d")?;
    cert.record("d", &d);

    // (5) e = c'^d and f = [c', e] = c'⁻¹e⁻¹c'e
    let e = c1.conjugate(&d)?;
    let f = c1.commutator(&e)?;
    let beta2 = e.apply(&ten)?;
    let beta3 = ten_image;
    ensure(zero.is_prefix_of(&beta2), "β₂ lies under 0")?;
    ensure(
        f == Element::cycle(&[ten.clone(), beta2.clone(), beta3.clone()])?,
        "[c', e] is the 3-cycle (10 β₂ β₃)",
    )?;
    cert.record("e", &e);
    cert.record("f", &f);

    // Words for c' and f over a.
    let c1_word = Word::t(s.invert())
        .then(&Word::generator())
        .then(&Word::t(b.compose(&s)?));
    ensure(c1_word.evaluate(a)? == c1, "word for c'")?;

    // (6) full support forces c' = (10 11); otherwise use the 3-cycle.
    let (inner, gen_word, branch) = if !f.is_small_support() {
        ensure(beta2 == zero && beta3 == eleven, "full-support commutator")?;
        ensure(c1 == Element::swap(&ten, &eleven)?, "c' = (10 11)")?;
        (express_via_swap_and_t(&c1, target)?, c1_word, Branch::Swap)
    } else {
        let e_word = c1_word.conjugated_by_t(&d);
        let f_word = c1_word
            .inverse()
            .then(&e_word.inverse())
            .then(&c1_word)
            .then(&e_word);
        ensure(f_word.evaluate(a)? == f, "word for f")?;
        (
            express_via_three_cycle_and_t(&f, target)?,
            f_word,
            Branch::ThreeCycle,
        )
    };
    cert.absorb_audit(branch.as_str(), &inner);
    cert.branch = Some(branch);
    // (7) unwind into a word over a.
    cert.word = inner.word.substitute(&gen_word);
    Ok(cert)
}

fn cone_perm_on(g: &Element, tree: &Antichain) -> Result<ConePermutation> {
    let images = tree
        .leaves()
        .iter()
        .map(|l| g.apply(l))
        .collect::<Result<Vec<_>>>()?;
    ConePermutation::from_images(tree.clone(), &images)
}
