//! Acceptance suite. Runs every criterion, prints one line per criterion and
//! exits nonzero if any fails. All checks are exact.
//!
//! The oracles in this file are deliberately naive: they work on raw letter
//! vectors and the generator permutations, and never consult the coset table,
//! the basis slots or the library's rewriting.

use std::collections::{HashMap, HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::process::Command;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use schreier_core::sample::{random_permutation, random_transitive_action, random_word_up_to};
use schreier_core::*;

// ---------------------------------------------------------------- oracles --

type Raw = Vec<(usize, i32)>;

fn raw(w: &Word) -> Raw {
    w.letters().iter().map(|l| (l.gen(), l.sign())).collect()
}

fn from_raw(r: &Raw) -> Word {
    Word::from_letters(r.iter().map(|&(g, s)| Letter::with_sign(g, s)))
}

/// Free reduction by repeatedly deleting the first cancelling pair.
fn naive_reduce(mut r: Raw) -> Raw {
    while let Some(i) = r
        .windows(2)
        .position(|p| p[0].0 == p[1].0 && p[0].1 == -p[1].1)
    {
        r.drain(i..i + 2);
    }
    r
}

fn is_reduced(r: &Raw) -> bool {
    r.windows(2)
        .all(|p| !(p[0].0 == p[1].0 && p[0].1 == -p[1].1))
}

fn naive_invert(r: &Raw) -> Raw {
    r.iter().rev().map(|&(g, s)| (g, -s)).collect()
}

fn naive_concat(a: &Raw, b: &Raw) -> Raw {
    naive_reduce(a.iter().chain(b).copied().collect())
}

/// Point image of one letter, inverses found by search.
fn naive_step(perms: &[Vec<usize>], p: usize, (g, s): (usize, i32)) -> usize {
    if s > 0 {
        perms[g][p]
    } else {
        perms[g].iter().position(|&q| q == p).unwrap()
    }
}

fn naive_eval(perms: &[Vec<usize>], p: usize, r: &Raw) -> usize {
    r.iter().fold(p, |p, &l| naive_step(perms, p, l))
}

fn perms_of(act: &FiniteAction) -> Vec<Vec<usize>> {
    act.generator_perms()
        .iter()
        .map(|p| p.images().to_vec())
        .collect()
}

/// All reduced words of length <= max_len over n generators, by brute force
/// filtering of all signed sequences.
fn enumerate_words(n: usize, max_len: usize) -> Vec<Raw> {
    let mut out = vec![vec![]];
    let mut frontier: Vec<Raw> = vec![vec![]];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for g in 0..n {
                for s in [1, -1] {
                    let mut v = w.clone();
                    v.push((g, s));
                    if is_reduced(&v) {
                        next.push(v);
                    }
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Shortlex key with letter order x0 < x0^-1 < x1 < ...
fn shortlex_key(r: &Raw) -> (usize, Vec<usize>) {
    (
        r.len(),
        r.iter().map(|&(g, s)| 2 * g + usize::from(s < 0)).collect(),
    )
}

fn order_key(order: TransversalOrder, r: &Raw) -> (usize, usize, Vec<usize>) {
    let inverses = r.iter().filter(|l| l.1 < 0).count();
    let (len, letters) = shortlex_key(r);
    match order {
        TransversalOrder::Shortlex => (0, len, letters),
        TransversalOrder::PositiveFirst => (inverses, len, letters),
    }
}

/// Rewriting by direct scan over points: at each letter, look up the
/// transversal element of the current point and form the Schreier generator
/// word explicitly, then find it in the list of basis words.
fn oracle_rewrite(
    perms: &[Vec<usize>],
    rep_of_point: &HashMap<usize, Raw>,
    basis_index: &HashMap<Raw, usize>,
    base: usize,
    h: &Raw,
) -> Raw {
    let mut point = base;
    let mut out: Raw = Vec::new();
    for &(g, s) in h {
        let (from, to) = if s > 0 {
            (point, perms[g][point])
        } else {
            (naive_step(perms, point, (g, -1)), point)
        };
        let t = &rep_of_point[&from];
        let word = naive_concat(
            &naive_concat(t, &vec![(g, 1)]),
            &naive_invert(&rep_of_point[&to]),
        );
        if !word.is_empty() {
            out.push((basis_index[&word], s));
        }
        point = if s > 0 { to } else { from };
    }
    assert_eq!(point, base, "oracle_rewrite needs an element of H");
    naive_reduce(out)
}

struct Case {
    act: FiniteAction,
    base: usize,
    order: TransversalOrder,
    table: CosetTable,
    transversal: SchreierTransversal,
    basis: SchreierBasis,
}

impl Case {
    fn new(act: FiniteAction, base: usize, order: TransversalOrder) -> Self {
        let (table, transversal) = build_table_with_order(&act, base, order).unwrap();
        let basis = compute_basis(&table, &transversal);
        Self {
            act,
            base,
            order,
            table,
            transversal,
            basis,
        }
    }

    fn rep_of_point(&self) -> HashMap<usize, Raw> {
        self.transversal
            .reps()
            .iter()
            .enumerate()
            .map(|(c, t)| (self.table.cosets()[c], raw(t)))
            .collect()
    }

    fn basis_index(&self) -> HashMap<Raw, usize> {
        self.basis
            .elements()
            .iter()
            .enumerate()
            .map(|(k, e)| (raw(&e.word), k))
            .collect()
    }
}

const ORDERS: [TransversalOrder; 2] = [TransversalOrder::PositiveFirst, TransversalOrder::Shortlex];

fn transitive_cases(
    seed: u64,
    count: usize,
    ns: &[usize],
    max_m: usize,
) -> Vec<(FiniteAction, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = ns[i % ns.len()];
            let m = rng.gen_range(1..=max_m);
            let act = random_transitive_action(&mut rng, &Alphabet::numbered("x", n), m);
            let base = rng.gen_range(0..m);
            (act, base)
        })
        .collect()
}

// -------------------------------------------------------------- criteria --

fn c1_schreier_formula() -> String {
    let cases = transitive_cases(1, 200, &[1, 2, 3, 4], 50);
    for (act, base) in &cases {
        for order in ORDERS {
            let case = Case::new(act.clone(), *base, order);
            let (m, n) = (act.degree(), act.alphabet().len());
            assert_eq!(
                case.table.index(),
                m,
                "transitive action has index = degree"
            );
            assert_eq!(case.basis.len(), 1 + m * (n - 1));
            assert_eq!(case.basis.degenerate_count(), m - 1);
            // independent count of degenerate pairs from the words themselves
            let rep_of_point = case.rep_of_point();
            let perms = perms_of(act);
            let degenerate = rep_of_point
                .iter()
                .flat_map(|(&p, t)| {
                    let perms = &perms;
                    let rep_of_point = &rep_of_point;
                    (0..n).map(move |g| {
                        let tx = naive_concat(t, &vec![(g, 1)]);
                        naive_concat(&tx, &naive_invert(&rep_of_point[&perms[g][p]])).is_empty()
                    })
                })
                .filter(|&d| d)
                .count();
            assert_eq!(degenerate, m - 1);
        }
    }
    format!("{} actions x 2 transversal orders", cases.len())
}

fn c2_basis_distinct() -> String {
    let cases = transitive_cases(1, 200, &[1, 2, 3, 4], 50);
    let mut elements = 0;
    for (act, base) in &cases {
        let perms = perms_of(act);
        for order in ORDERS {
            let case = Case::new(act.clone(), *base, order);
            let rep_of_point = case.rep_of_point();
            let mut seen = HashSet::new();
            for e in case.basis.elements() {
                let r = raw(&e.word);
                assert!(!r.is_empty(), "identity in basis");
                assert!(is_reduced(&r), "basis word not reduced");
                assert!(seen.insert(r.clone()), "repeated basis word");
                assert_eq!(
                    naive_eval(&perms, *base, &r),
                    *base,
                    "basis word moves basepoint"
                );
                // the stored word is literally t x (rep(t x))^-1
                let t = raw(&e.t);
                let tx = naive_concat(&t, &vec![(e.gen, 1)]);
                let target = naive_eval(&perms, *base, &tx);
                let rep = &rep_of_point[&target];
                assert_eq!(naive_concat(&tx, &naive_invert(rep)), r);
                elements += 1;
            }
        }
    }
    format!("{elements} basis words checked")
}

fn c3_schreier_property() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut checked = 0;
    let mut words_enumerated = 0;
    for i in 0..90 {
        let n = 1 + i % 3;
        let m = rng.gen_range(1..=8);
        let act = random_transitive_action(&mut rng, &Alphabet::numbered("x", n), m);
        let base = rng.gen_range(0..m);
        let perms = perms_of(&act);
        for order in ORDERS {
            let case = Case::new(act.clone(), base, order);
            let reps: Vec<Raw> = case.transversal.reps().iter().map(raw).collect();
            assert!(reps[0].is_empty(), "reps[0] must be the identity");
            let set: HashSet<&Raw> = reps.iter().collect();
            assert_eq!(set.len(), m);
            for r in &reps {
                for k in 0..=r.len() {
                    assert!(
                        set.contains(&r[..k].to_vec()),
                        "transversal not prefix-closed"
                    );
                }
            }
            let longest = reps.iter().map(Vec::len).max().unwrap();
            if longest > 5 {
                continue;
            }
            // brute-force minimum per point under the order
            let mut best: HashMap<usize, Raw> = HashMap::new();
            let all = enumerate_words(n, longest);
            words_enumerated += all.len();
            for w in all {
                let p = naive_eval(&perms, base, &w);
                let better = best
                    .get(&p)
                    .is_none_or(|b| order_key(order, &w) < order_key(order, b));
                if better {
                    best.insert(p, w);
                }
            }
            for (c, r) in reps.iter().enumerate() {
                let p = case.table.cosets()[c];
                assert_eq!(naive_eval(&perms, base, r), p);
                assert_eq!(
                    &best[&p], r,
                    "rep of coset {c} is not minimal ({:?})",
                    order
                );
            }
            checked += 1;
        }
    }
    assert!(
        checked >= 120,
        "too few instances with reps of length <= 5: {checked}"
    );
    format!("{checked} transversals minimal, {words_enumerated} words enumerated")
}

fn c4_action_axioms() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=4);
        let m = rng.gen_range(1..=12);
        let alphabet = Alphabet::numbered("x", n);
        let act = schreier_core::sample::random_action(&mut rng, &alphabet, m);
        let perms = perms_of(&act);
        let v = random_word_up_to(&mut rng, n, 12);
        let w = random_word_up_to(&mut rng, n, 12);
        let p = rng.gen_range(0..m);
        assert_eq!(act.evaluate(p, &Word::identity()).unwrap(), p);
        let vw = v.concat(&w);
        let lhs = act.evaluate(p, &vw).unwrap();
        let mid = act.evaluate(p, &v).unwrap();
        assert_eq!(lhs, act.evaluate(mid, &w).unwrap());
        // agrees with the naive fold of the unreduced concatenation
        let unreduced: Raw = raw(&v).into_iter().chain(raw(&w)).collect();
        assert_eq!(lhs, naive_eval(&perms, p, &unreduced));
        let pv = act.perm_of_word(&v).unwrap();
        let pw = act.perm_of_word(&w).unwrap();
        let pvw = act.perm_of_word(&vw).unwrap();
        for q in 0..m {
            assert_eq!(pvw.apply(q), pw.apply(pv.apply(q)));
        }
    }
    "1000 random (action, v, w, p)".into()
}

fn c5_rewrite_round_trip() -> String {
    let cases = transitive_cases(5, 12, &[2, 3], 6);
    let mut sampled = 0;
    let mut exhaustive = 0;
    for (act, base) in &cases {
        let n = act.alphabet().len();
        let perms = perms_of(act);
        for order in ORDERS {
            let case = Case::new(act.clone(), *base, order);
            let basis_words: Vec<Raw> =
                case.basis.elements().iter().map(|e| raw(&e.word)).collect();
            let expand_naive = |bw: &BWord| -> Raw {
                bw.factors().fold(Vec::new(), |acc, (k, s)| {
                    let w = if s > 0 {
                        basis_words[k].clone()
                    } else {
                        naive_invert(&basis_words[k])
                    };
                    naive_concat(&acc, &w)
                })
            };
            let rep_of_point = case.rep_of_point();
            let mut rng = ChaCha8Rng::seed_from_u64(55);
            for _ in 0..500 {
                let u = random_word_up_to(&mut rng, n, 12);
                let ubar = &rep_of_point[&naive_eval(&perms, *base, &raw(&u))];
                let h = naive_concat(&raw(&u), &naive_invert(ubar));
                let bw = rewrite(&case.table, &case.basis, &from_raw(&h)).unwrap();
                assert_eq!(expand_naive(&bw), h);
                assert_eq!(raw(&expand(&case.basis, &bw).unwrap()), h);
                sampled += 1;
            }
            for w in enumerate_words(n, 6) {
                if naive_eval(&perms, *base, &w) != *base {
                    continue;
                }
                let bw = rewrite(&case.table, &case.basis, &from_raw(&w)).unwrap();
                assert_eq!(expand_naive(&bw), w);
                assert_eq!(bw.is_empty(), w.is_empty(), "rewrite(h) = [] iff h = 1");
                exhaustive += 1;
            }
            for (k, b) in basis_words.iter().enumerate() {
                let bw = rewrite(&case.table, &case.basis, &from_raw(b)).unwrap();
                assert_eq!(bw.factors().collect::<Vec<_>>(), vec![(k, 1)]);
            }
        }
    }
    format!("{sampled} sampled + {exhaustive} enumerated elements of H")
}

fn c6_induced_action() -> String {
    let cases = transitive_cases(6, 20, &[1, 2, 3], 7);
    let mut triples = 0;
    for (i, (act, base)) in cases.iter().enumerate() {
        let n = act.alphabet().len();
        let perms = perms_of(act);
        for order in ORDERS {
            let case = Case::new(act.clone(), *base, order);
            let mut rng = ChaCha8Rng::seed_from_u64(600 + i as u64);
            let fiber = rng.gen_range(1..=4);
            let sigma_perms: Vec<Permutation> = (0..case.basis.len())
                .map(|_| random_permutation(&mut rng, fiber))
                .collect();
            let sigma = HAction::new(fiber, sigma_perms.clone()).unwrap();
            let ind = induce(&sigma, &case.table, &case.basis).unwrap();

            // restriction to A x {H} is sigma
            assert_eq!(restrict_to_h(&ind, &case.basis).unwrap(), sigma_perms);
            // (a, H) t = (a, Ht)
            assert!(check_claim(&ind, &case.table, &case.transversal));
            for t in case.transversal.reps() {
                let c = case.table.coset_of(t).unwrap();
                for a in 0..fiber {
                    let p = ind.action().evaluate(ind.encode(a, 0), t).unwrap();
                    assert_eq!(ind.decode(p), (a, c));
                }
            }
            // action axioms on A x H\F
            let ind_perms = perms_of(ind.action());
            for _ in 0..50 {
                let p = rng.gen_range(0..ind.action().degree());
                let v = random_word_up_to(&mut rng, n, 10);
                let w = random_word_up_to(&mut rng, n, 10);
                assert_eq!(ind.action().evaluate(p, &Word::identity()).unwrap(), p);
                let lhs = ind.action().evaluate(p, &v.concat(&w)).unwrap();
                let mid = ind.action().evaluate(p, &v).unwrap();
                assert_eq!(lhs, ind.action().evaluate(mid, &w).unwrap());
                let unreduced: Raw = raw(&v).into_iter().chain(raw(&w)).collect();
                assert_eq!(lhs, naive_eval(&ind_perms, p, &unreduced));
            }
            // transfer formula against the letter-by-letter construction,
            // with the H-element acting through the naive scan rewriting
            let rep_of_point = case.rep_of_point();
            let basis_index = case.basis_index();
            for _ in 0..200 {
                let a = rng.gen_range(0..fiber);
                let prior = raw(&random_word_up_to(&mut rng, n, 8));
                let g = raw(&random_word_up_to(&mut rng, n, 8));
                let from = naive_eval(&perms, *base, &prior);
                let to = naive_eval(&perms, from, &g);
                let h = naive_concat(
                    &naive_concat(&rep_of_point[&from], &g),
                    &naive_invert(&rep_of_point[&to]),
                );
                let bw = oracle_rewrite(&perms, &rep_of_point, &basis_index, *base, &h);
                let a_expected = bw.iter().fold(a, |a, &(k, s)| {
                    let p = &sigma_perms[k];
                    if s > 0 {
                        p.apply(a)
                    } else {
                        p.inverse().apply(a)
                    }
                });
                let c_from = case.table.coset_of_point(from).unwrap();
                let c_to = case.table.coset_of_point(to).unwrap();
                let direct = ind
                    .action()
                    .evaluate(ind.encode(a, c_from), &from_raw(&g))
                    .unwrap();
                assert_eq!(ind.decode(direct), (a_expected, c_to));
                let via = tensor_transfer(
                    &sigma,
                    &case.table,
                    &case.transversal,
                    &case.basis,
                    a,
                    &from_raw(&prior),
                    &from_raw(&g),
                )
                .unwrap();
                assert_eq!(via, (a_expected, c_to));
                triples += 1;
            }
        }
    }
    format!("{triples} (a, w_prior, g) triples")
}

fn c7_worked_example() -> String {
    let act = FiniteAction::new(
        Alphabet::new(["x", "y"]).unwrap(),
        3,
        vec![
            Permutation::from_cycles(3, &[&[0, 1, 2]]).unwrap(),
            Permutation::identity(3),
        ],
    )
    .unwrap();
    let a = act.alphabet().clone();
    let case = Case::new(act, 0, TransversalOrder::PositiveFirst);
    assert_eq!(case.order, TransversalOrder::default());
    assert_eq!(case.base, 0);
    let reps: Vec<String> = case
        .transversal
        .reps()
        .iter()
        .map(|t| a.format(t))
        .collect();
    assert_eq!(reps, ["1", "x", "x^2"]);
    let basis: Vec<String> = case
        .basis
        .elements()
        .iter()
        .map(|e| a.format(&e.word))
        .collect();
    assert_eq!(basis, ["y", "x y x^-1", "x^3", "x^2 y x^-2"]);

    let h = a.parse("x y x^2").unwrap();
    let bw = rewrite(&case.table, &case.basis, &h).unwrap();
    let expected = [(1usize, 1i32), (2, 1)];
    assert_eq!(a.format(case.basis.word(1).unwrap()), "x y x^-1");
    assert_eq!(a.format(case.basis.word(2).unwrap()), "x^3");
    assert_eq!(bw.factors().collect::<Vec<_>>(), expected);

    // naive scan over points
    let perms = perms_of(&case.act);
    let scan = oracle_rewrite(
        &perms,
        &case.rep_of_point(),
        &case.basis_index(),
        0,
        &raw(&h),
    );
    assert_eq!(scan, expected);

    // exhaustive search over B-words of length <= 3: exactly one expands to h
    let basis_words: Vec<Raw> = case.basis.elements().iter().map(|e| raw(&e.word)).collect();
    let k = basis_words.len();
    let mut hits = Vec::new();
    let mut queue: VecDeque<Raw> = VecDeque::from([vec![]]);
    while let Some(bw) = queue.pop_front() {
        let value = bw.iter().fold(Vec::new(), |acc, &(i, s)| {
            let w = if s > 0 {
                basis_words[i].clone()
            } else {
                naive_invert(&basis_words[i])
            };
            naive_concat(&acc, &w)
        });
        if value == raw(&h) {
            hits.push(bw.clone());
        }
        if bw.len() < 3 {
            for i in 0..k {
                for s in [1, -1] {
                    let mut next = bw.clone();
                    next.push((i, s));
                    if is_reduced(&next) {
                        queue.push_back(next);
                    }
                }
            }
        }
    }
    assert_eq!(hits, vec![expected.to_vec()]);
    "T = [1, x, x^2]; B = {y, x y x^-1, x^3, x^2 y x^-2}; x y x^2 = b1 b2".into()
}

fn c8_cli_golden() -> String {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures");
    let act = fixtures.join("act3cycle.txt").display().to_string();
    let hact = fixtures.join("hact_swap.txt").display().to_string();
    let run = |args: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_schreier"))
            .args(args)
            .env("SCHREIER_COLOR", "0")
            .output()
            .unwrap()
    };
    let cases: [(&[&str], &str, i32); 6] = [
        (&["basis", &act, "--base", "0"], "basis.out", 0),
        (&["transversal", &act, "--base", "0"], "transversal.out", 0),
        (&["member", &act, "--base", "0", "x"], "member_x.out", 1),
        (&["member", &act, "--base", "0", "1"], "member_1.out", 0),
        (
            &["rewrite", &act, "--base", "0", "x y x^2"],
            "rewrite.out",
            0,
        ),
        (&["induce", &act, "--base", "0", &hact], "induce.out", 0),
    ];
    for (args, golden, code) in cases {
        let out = run(args);
        let expected = std::fs::read(fixtures.join(golden)).unwrap();
        assert_eq!(out.stdout, expected, "{golden} differs");
        assert_eq!(out.status.code(), Some(code), "{golden} exit code");
    }
    let check = run(&["check", &act, "--base", "0"]);
    assert_eq!(check.status.code(), Some(0), "check failed");
    "5 commands byte-identical, check exits 0".into()
}

type Criterion = fn() -> String;

fn main() {
    let criteria: [(&str, Criterion); 8] = [
        ("1 schreier formula", c1_schreier_formula),
        ("2 basis distinctness", c2_basis_distinct),
        ("3 schreier property", c3_schreier_property),
        ("4 action axioms", c4_action_axioms),
        ("5 rewriting round trip", c5_rewrite_round_trip),
        ("6 induced-action obligations", c6_induced_action),
        ("7 worked example", c7_worked_example),
        ("8 cli golden files", c8_cli_golden),
    ];

    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (name, criterion) in criteria {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(criterion));
        let elapsed = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("PASS  criterion {name:<30} {elapsed:>6.2}s  {detail}"),
            Err(payload) => {
                failed += 1;
                let msg = payload
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| payload.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                println!("FAIL  criterion {name:<30} {elapsed:>6.2}s  {msg}");
            }
        }
    }
    let _ = std::panic::take_hook();
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
