//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Runs without the libtest harness so the report is printed on every run.
//! Exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use thompson::formats::{parse_element, print_element, Style};
use thompson::genmax::{
    check_certificate, cyclic_descents, double_coset_invariant, express_via_swap_and_t,
    express_via_three_cycle_and_t, maximality_certificate, swap_decompose, swap_product, Branch,
    Certificate,
};
use thompson::random::{random_antichain, random_element, random_element_with, Profile};
use thompson::structure::{
    common_tree_form, cycle_decomposition, in_t, order_of, shape_in_t, DEFAULT_LEAF_BOUND,
};
use thompson::word::Token;
use thompson::{Address, Antichain, Element, Error};

const SEED: u64 = 0x7468_6f6d_7073_6f6e;

const BUDGET_IDENTITIES: Duration = Duration::from_secs(1);
const BUDGET_DCOSET: Duration = Duration::from_secs(5);
const BUDGET_SHAPING: Duration = Duration::from_secs(5);
const BUDGET_ENGINES: Duration = Duration::from_secs(60);
const BUDGET_MAXIMAL_EACH: Duration = Duration::from_secs(1);
const BUDGET_MAXIMAL_SUITE: Duration = Duration::from_secs(180);
const BUDGET_ALGEBRA: Duration = Duration::from_secs(30);
const BUDGET_FINITE_ORDER: Duration = Duration::from_secs(10);

/// Extra depth below each marked cone at which shaped maps are evaluated.
const SHAPE_PROBE_DEPTH: usize = 4;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! require {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn a(s: &str) -> Address {
    s.parse().unwrap()
}

fn addrs(s: &str) -> Vec<Address> {
    s.split_whitespace().map(a).collect()
}

fn swap(x: &str, y: &str) -> Element {
    Element::swap(&a(x), &a(y)).unwrap()
}

fn cycle(s: &str) -> Element {
    Element::cycle(&addrs(s)).unwrap()
}

fn within(start: Instant, budget: Duration) -> Check {
    let took = start.elapsed();
    if took > budget {
        Err(format!("took {took:?}, budget {budget:?}"))
    } else {
        Ok(format!("{took:.2?} of {budget:?}"))
    }
}

/// `k` distinct leaves of a random tree with between `k` and `max` leaves.
fn random_incomparable(rng: &mut ChaCha8Rng, k: usize, max: usize) -> Vec<Address> {
    let n = rng.gen_range(k..=max);
    let tree = random_antichain(rng, n);
    tree.leaves().choose_multiple(rng, k).cloned().collect()
}

fn evaluate(cert: &Certificate, gen: &Element, what: &str) -> Result<(), String> {
    check_certificate(cert, gen).map_err(|r| format!("{what}: {r}"))?;
    for t in cert.word.tokens() {
        if let Token::T(e) = t {
            require!(in_t(e), "{what}: T token outside T");
        }
    }
    Ok(())
}

fn identities() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let f1 = cycle("00 100 1100");
    let p = f1.compose(&cycle("00 100 1110")).unwrap();
    require!(
        p == swap("00", "1110").compose(&swap("100", "1100")).unwrap(),
        "F2 F2^x product"
    );
    require!(
        p.conjugate(&f1).unwrap() == swap("00", "1100").compose(&swap("100", "1110")).unwrap(),
        "conjugate of the product"
    );
    for _ in 0..50 {
        let t = random_incomparable(&mut rng, 3, 12);
        let ab = Element::swap(&t[0], &t[1]).unwrap();
        let bc = Element::swap(&t[1], &t[2]).unwrap();
        require!(
            ab.conjugate(&bc).unwrap() == Element::swap(&t[0], &t[2]).unwrap(),
            "swap conjugation on {t:?}"
        );
    }
    for _ in 0..50 {
        let t = random_incomparable(&mut rng, 2, 12);
        let split = Element::swap(&t[0].child(0), &t[1].child(0))
            .unwrap()
            .compose(&Element::swap(&t[0].child(1), &t[1].child(1)).unwrap())
            .unwrap();
        require!(
            Element::swap(&t[0], &t[1]).unwrap() == split,
            "swap splitting on {t:?}"
        );
    }
    require!(in_t(&swap("0", "1")), "(0 1) lies in T");
    require!(!in_t(&swap("00", "10")), "(00 10) lies outside T");
    within(start, BUDGET_IDENTITIES)
}

fn double_cosets() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let reps = [
        (Element::identity(), 1),
        (swap("00", "01"), 2),
        (swap("00", "10"), 3),
    ];
    for (g, want) in &reps {
        require!(
            double_coset_invariant(g) == *want,
            "{g:?} should give {want}"
        );
    }
    for _ in 0..200 {
        let t1 = random_element_with(&mut rng, 10, Profile::InT);
        let t2 = random_element_with(&mut rng, 10, Profile::InT);
        for (g, want) in &reps {
            let h = t1.compose(g).unwrap().compose(&t2).unwrap();
            require!(
                double_coset_invariant(&h) == *want,
                "t1 g t2 changed the invariant for {g:?}"
            );
        }
    }
    for _ in 0..100 {
        for (g, want) in &reps {
            let mut leaves = g.domain().leaves().to_vec();
            for _ in 0..rng.gen_range(1..=6) {
                let i = rng.gen_range(0..leaves.len());
                let leaf = leaves.swap_remove(i);
                leaves.push(leaf.child(0));
                leaves.push(leaf.child(1));
            }
            let finer = Antichain::new(leaves).unwrap();
            let pairs = g.pairs_on(&finer).unwrap();
            require!(
                cyclic_descents(&pairs) == *want,
                "refinement changed the invariant for {g:?}"
            );
        }
    }
    within(start, BUDGET_DCOSET)
}

/// Leaf positions no two of which are circularly adjacent.
fn spaced_positions(rng: &mut ChaCha8Rng, n: usize, k: usize) -> Vec<usize> {
    loop {
        let all: Vec<usize> = (0..n).collect();
        let mut pos: Vec<usize> = all.choose_multiple(rng, k).cloned().collect();
        pos.sort();
        let ok = k < 2
            || (0..k).all(|i| {
                let (x, y) = (pos[i], pos[(i + 1) % k]);
                (y + n - x) % n != 1
            });
        if ok {
            return pos;
        }
    }
}

fn shaping() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 3);
    for _ in 0..100 {
        let k = rng.gen_range(1..=5);
        let least = (2 * k).max(2);
        let (na, nb) = (rng.gen_range(least..=24), rng.gen_range(least..=24));
        let ta = random_antichain(&mut rng, na);
        let tb = random_antichain(&mut rng, nb);
        let alphas: Vec<Address> = spaced_positions(&mut rng, ta.len(), k)
            .into_iter()
            .map(|i| ta.leaves()[i].clone())
            .collect();
        let betas: Vec<Address> = spaced_positions(&mut rng, tb.len(), k)
            .into_iter()
            .map(|i| tb.leaves()[i].clone())
            .collect();
        let t = shape_in_t(&ta, &alphas, &tb, &betas)
            .map_err(|e| format!("shape {alphas:?} -> {betas:?}: {e}"))?;
        require!(in_t(&t), "shaped map outside T");
        let probes = Antichain::uniform(SHAPE_PROBE_DEPTH);
        for (x, y) in alphas.iter().zip(&betas) {
            for w in probes.leaves() {
                let got = t.apply(&x.concat(w.bits())).map_err(|e| e.to_string())?;
                require!(
                    got == y.concat(w.bits()),
                    "{x}{w} should map to {y}{w}, got {got}"
                );
            }
        }
    }
    within(start, BUDGET_SHAPING)
}

fn small_support(rng: &mut ChaCha8Rng, profile: Profile) -> Element {
    loop {
        let g = random_element_with(rng, 24, profile);
        if g.is_small_support() {
            return g;
        }
    }
}

fn engines() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    for i in 0..100 {
        let s = small_support(&mut rng, Profile::Swap);
        let target = random_element_with(&mut rng, 24, Profile::General);
        let cert = express_via_swap_and_t(&s, &target).map_err(|e| format!("swap #{i}: {e}"))?;
        evaluate(&cert, &s, &format!("swap #{i}"))?;
    }
    for i in 0..100 {
        let f = small_support(&mut rng, Profile::ThreeCycle);
        let target = random_element_with(&mut rng, 24, Profile::General);
        let cert =
            express_via_three_cycle_and_t(&f, &target).map_err(|e| format!("3-cycle #{i}: {e}"))?;
        evaluate(&cert, &f, &format!("3-cycle #{i}"))?;
    }
    within(start, BUDGET_ENGINES)
}

fn maximality() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let (ten, eleven) = (a("10"), a("11"));
    let mut slowest = Duration::ZERO;
    let (mut swaps, mut cycles) = (0, 0);
    for i in 0..200 {
        let gen = loop {
            let g = random_element_with(&mut rng, 16, Profile::General);
            if !in_t(&g) {
                break g;
            }
        };
        let v = random_element_with(&mut rng, 16, Profile::General);
        let t0 = Instant::now();
        let cert = maximality_certificate(&gen, &v).map_err(|e| format!("#{i}: {e}"))?;
        evaluate(&cert, &gen, &format!("#{i}"))?;
        slowest = slowest.max(t0.elapsed());
        require!(
            t0.elapsed() <= BUDGET_MAXIMAL_EACH,
            "#{i} took {:?}",
            t0.elapsed()
        );
        let f = cert.audit_entry("f").ok_or("missing f")?;
        let c = cert.audit_entry("c'").ok_or("missing c'")?;
        match cert.branch {
            Some(Branch::ThreeCycle) => {
                let b2 = f.apply(&ten).map_err(|e| e.to_string())?;
                let b3 = f.apply(&b2).map_err(|e| e.to_string())?;
                let expected = Element::cycle(&[ten.clone(), b2, b3]).map_err(|e| e.to_string())?;
                require!(
                    f == &expected && f.is_small_support(),
                    "#{i}: f is not (10 β₂ β₃)"
                );
                cycles += 1;
            }
            Some(Branch::Swap) => {
                require!(
                    c == &Element::swap(&ten, &eleven).unwrap(),
                    "#{i}: full-support branch without c' = (10 11)"
                );
                swaps += 1;
            }
            None => return Err(format!("#{i}: no branch recorded")),
        }
    }
    let total = within(start, BUDGET_MAXIMAL_SUITE)?;
    Ok(format!(
        "{total}, slowest {slowest:.2?}; {cycles} three-cycle, {swaps} swap"
    ))
}

fn algebra() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 6);
    let e = Element::identity();
    for _ in 0..500 {
        let x = random_element_with(&mut rng, 8, Profile::General);
        let y = random_element_with(&mut rng, 8, Profile::General);
        let z = random_element_with(&mut rng, 8, Profile::General);
        let lhs = x.compose(&y).unwrap().compose(&z).unwrap();
        let rhs = x.compose(&y.compose(&z).unwrap()).unwrap();
        require!(lhs == rhs, "associativity");
        require!(x.compose(&x.invert()).unwrap() == e, "right inverse");
        require!(x.invert().compose(&x).unwrap() == e, "left inverse");
        require!(
            x.compose(&e).unwrap() == x && e.compose(&x).unwrap() == x,
            "identity"
        );
        require!(
            x.reduce() == x && x.reduce().reduce() == x.reduce(),
            "reduce idempotence"
        );
        let text = print_element(&x, Style::Pairs).unwrap();
        require!(
            parse_element(&text).as_ref() == Ok(&x),
            "pairs round trip of {x:?}"
        );
        let f = random_element_with(&mut rng, 8, Profile::FiniteOrder);
        let text = print_element(&f, Style::Cycles).unwrap();
        require!(
            parse_element(&text).as_ref() == Ok(&f),
            "cycles round trip of {f:?}"
        );
    }
    for i in 0..100 {
        let g = random_element(SEED + i, 12, Profile::General);
        let s = swap_decompose(&g).map_err(|e| format!("{g:?}: {e}"))?;
        require!(s.len() % 2 == 0, "odd swap count for {g:?}");
        require!(
            swap_product(&s).as_ref() == Ok(&g),
            "swap product for {g:?}"
        );
    }
    within(start, BUDGET_ALGEBRA)
}

fn finite_order() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 7);
    require!(
        order_of(&swap("00", "10"), DEFAULT_LEAF_BOUND) == Some(2),
        "swap order"
    );
    require!(
        order_of(&cycle("00 100 1100"), DEFAULT_LEAF_BOUND) == Some(3),
        "3-cycle order"
    );
    let ex = parse_element("(00 110 010 101)(011 111)").unwrap();
    require!(
        order_of(&ex, DEFAULT_LEAF_BOUND) == Some(4),
        "order of the six-cone example"
    );
    for _ in 0..100 {
        let g = random_element_with(&mut rng, 16, Profile::FiniteOrder);
        let p = common_tree_form(&g, DEFAULT_LEAF_BOUND).map_err(|e| format!("{g:?}: {e}"))?;
        require!(p.to_element() == g, "common tree form of {g:?}");
        let cd = cycle_decomposition(&g).unwrap();
        require!(cd.product().as_ref() == Ok(&g), "cycle product of {g:?}");
    }
    let witness = parse_element("0 -> 00, 10 -> 01, 11 -> 1").unwrap();
    require!(
        matches!(
            common_tree_form(&witness, DEFAULT_LEAF_BOUND),
            Err(Error::BoundExceeded {
                bound: DEFAULT_LEAF_BOUND
            })
        ),
        "infinite-order witness"
    );
    require!(
        order_of(&witness, DEFAULT_LEAF_BOUND).is_none(),
        "order_of witness"
    );
    within(start, BUDGET_FINITE_ORDER)
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 identity suite", identities),
        ("2 double-coset separation", double_cosets),
        ("3 shaping", shaping),
        ("4 generation engines", engines),
        ("5 maximality end-to-end", maximality),
        ("6 algebra core", algebra),
        ("7 finite-order machinery", finite_order),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match std::panic::catch_unwind(run) {
            Ok(Ok(detail)) => println!("PASS criterion {name} ({detail})"),
            Ok(Err(why)) => {
                failed += 1;
                println!("FAIL criterion {name}: {why}");
            }
            Err(_) => {
                failed += 1;
                println!("FAIL criterion {name}: panicked");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
