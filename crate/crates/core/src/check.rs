//! Runs every structural invariant of the pipeline against one action.
//!
//! Each named check either passes or reports the first counterexample it
//! found. Random inputs come from a seeded ChaCha generator, so a report is
//! reproducible from `(action, basepoint, config)`.

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::actions::{FiniteAction, Permutation};
use crate::cosets::{build_table_with_order, CosetTable, SchreierTransversal, TransversalOrder};
use crate::error::Result;
use crate::induce::{check_claim, induce, restrict_to_h, tensor_transfer, HAction};
use crate::rewrite::{expand, rewrite, BWord};
use crate::sample;
use crate::schreier::{compute_basis, schreier_rank, SchreierBasis};
use crate::words::{Alphabet, Letter, Word};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckConfig {
    /// Length bound for exhaustive enumeration.
    pub max_len: usize,
    pub seed: u64,
    /// Number of random samples per randomized check.
    pub trials: usize,
    pub order: TransversalOrder,
}

impl Default for CheckConfig {
    fn default() -> Self {
        Self {
            max_len: 6,
            seed: 0,
            trials: 200,
            order: TransversalOrder::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub name: &'static str,
    /// `None` on success, otherwise a description of the failure.
    pub failure: Option<String>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckReport {
    pub index: usize,
    pub rank: usize,
    pub basis_len: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl CheckReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(CheckOutcome::passed)
    }
}

type Outcome = std::result::Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Ctx<'a> {
    action: &'a FiniteAction,
    alphabet: &'a Alphabet,
    table: CosetTable,
    transversal: SchreierTransversal,
    basis: SchreierBasis,
    config: &'a CheckConfig,
    /// All reduced words up to `config.max_len`.
    words: Vec<Word>,
}

impl Ctx<'_> {
    fn fmt(&self, w: &Word) -> String {
        self.alphabet.format(w)
    }

    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.config.seed ^ salt.wrapping_mul(0x9e37_79b9_7f4a_7c15))
    }

    fn random_word(&self, rng: &mut ChaCha8Rng) -> Word {
        sample::random_word_up_to(rng, self.alphabet.len(), 12)
    }
}

type CheckFn = fn(&Ctx) -> Outcome;

/// Runs the full suite. Fails only if the basepoint is out of range.
pub fn run_checks(
    action: &FiniteAction,
    basepoint: usize,
    config: &CheckConfig,
) -> Result<CheckReport> {
    let (table, transversal) = build_table_with_order(action, basepoint, config.order)?;
    let basis = compute_basis(&table, &transversal);
    let ctx = Ctx {
        action,
        alphabet: action.alphabet(),
        words: sample::all_reduced_words(action.alphabet().len(), config.max_len),
        table,
        transversal,
        basis,
        config,
    };

    let checks: [(&'static str, CheckFn); 22] = [
        ("action-identity", action_identity),
        ("action-compatibility", action_compatibility),
        ("action-unreduced", action_unreduced),
        ("perm-homomorphism", perm_homomorphism),
        ("transversal-identity", transversal_identity),
        ("transversal-prefix-closed", transversal_prefix_closed),
        ("transversal-cosets", transversal_cosets),
        ("transversal-minimal", transversal_minimal),
        ("bar-map", bar_map),
        ("basis-count", basis_count),
        ("basis-degenerate", basis_degenerate),
        ("basis-distinct", basis_distinct),
        ("basis-membership", basis_membership),
        ("rewrite-basis-fidelity", rewrite_basis_fidelity),
        ("rewrite-round-trip", rewrite_round_trip),
        ("rewrite-exhaustive", rewrite_exhaustive),
        ("rewrite-homomorphism", rewrite_homomorphism),
        ("induce-restriction", induce_restriction),
        ("induce-claim", induce_claim),
        ("induce-action-axioms", induce_action_axioms),
        ("induce-tensor-formula", induce_tensor_formula),
        ("induce-relabel", induce_relabel),
    ];

    let outcomes = checks
        .iter()
        .map(|(name, check)| CheckOutcome {
            name,
            failure: check(&ctx).err(),
        })
        .collect();

    Ok(CheckReport {
        index: ctx.table.index(),
        rank: ctx.alphabet.len(),
        basis_len: ctx.basis.len(),
        outcomes,
    })
}

fn action_identity(ctx: &Ctx) -> Outcome {
    for p in 0..ctx.action.degree() {
        let q = ctx
            .action
            .evaluate(p, &Word::identity())
            .map_err(|e| e.to_string())?;
        ensure(p == q, || format!("{p} . 1 = {q}"))?;
    }
    Ok(())
}

fn action_compatibility(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(1);
    for _ in 0..ctx.config.trials {
        let p = rng.gen_range(0..ctx.action.degree());
        let v = ctx.random_word(&mut rng);
        let w = ctx.random_word(&mut rng);
        let lhs = ctx
            .action
            .evaluate(p, &v.concat(&w))
            .map_err(|e| e.to_string())?;
        let mid = ctx.action.evaluate(p, &v).map_err(|e| e.to_string())?;
        let rhs = ctx.action.evaluate(mid, &w).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || {
            format!("p={p} v={} w={}: {lhs} != {rhs}", ctx.fmt(&v), ctx.fmt(&w))
        })?;
    }
    Ok(())
}

fn action_unreduced(ctx: &Ctx) -> Outcome {
    let n = ctx.alphabet.len();
    if n == 0 {
        return Ok(());
    }
    let mut rng = ctx.rng(2);
    for _ in 0..ctx.config.trials {
        let p = rng.gen_range(0..ctx.action.degree());
        let raw: Vec<Letter> = (0..rng.gen_range(0..16))
            .map(|_| Letter::from_rank(rng.gen_range(0..2 * n)))
            .collect();
        let folded = ctx
            .action
            .evaluate_letters(p, &raw)
            .map_err(|e| e.to_string())?;
        let reduced = ctx
            .action
            .evaluate(p, &Word::from_letters(raw.clone()))
            .map_err(|e| e.to_string())?;
        ensure(folded == reduced, || {
            format!("p={p}: {folded} != {reduced}")
        })?;
    }
    Ok(())
}

fn perm_homomorphism(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(3);
    for _ in 0..ctx.config.trials {
        let v = ctx.random_word(&mut rng);
        let w = ctx.random_word(&mut rng);
        let pv = ctx.action.perm_of_word(&v).map_err(|e| e.to_string())?;
        let pw = ctx.action.perm_of_word(&w).map_err(|e| e.to_string())?;
        let pvw = ctx
            .action
            .perm_of_word(&v.concat(&w))
            .map_err(|e| e.to_string())?;
        ensure(pvw == pv.then(&pw), || {
            format!("v={} w={}", ctx.fmt(&v), ctx.fmt(&w))
        })?;
    }
    Ok(())
}

fn transversal_identity(ctx: &Ctx) -> Outcome {
    ensure(ctx.transversal.get(0).is_identity(), || {
        format!("reps[0] = {}", ctx.fmt(ctx.transversal.get(0)))
    })
}

fn transversal_prefix_closed(ctx: &Ctx) -> Outcome {
    let reps: HashSet<&Word> = ctx.transversal.reps().iter().collect();
    for t in ctx.transversal.reps() {
        for p in t.prefixes() {
            ensure(reps.contains(&p), || {
                format!("prefix {} of {} missing", ctx.fmt(&p), ctx.fmt(t))
            })?;
        }
    }
    Ok(())
}

fn transversal_cosets(ctx: &Ctx) -> Outcome {
    let orbit = ctx
        .action
        .orbit(ctx.table.basepoint())
        .map_err(|e| e.to_string())?;
    ensure(orbit.len() == ctx.transversal.len(), || {
        format!(
            "{} reps for orbit of size {}",
            ctx.transversal.len(),
            orbit.len()
        )
    })?;
    let distinct: HashSet<&Word> = ctx.transversal.reps().iter().collect();
    ensure(distinct.len() == ctx.transversal.len(), || {
        "repeated rep".into()
    })?;
    for (c, t) in ctx.transversal.reps().iter().enumerate() {
        ensure(Word::from_letters(t.letters().to_vec()) == *t, || {
            format!("{} not reduced", ctx.fmt(t))
        })?;
        let p = ctx
            .action
            .evaluate(ctx.table.basepoint(), t)
            .map_err(|e| e.to_string())?;
        ensure(p == ctx.table.cosets()[c], || {
            format!(
                "rep {} lands on {p}, coset {c} is point {}",
                ctx.fmt(t),
                ctx.table.cosets()[c]
            )
        })?;
    }
    Ok(())
}

fn transversal_minimal(ctx: &Ctx) -> Outcome {
    let order = ctx.transversal.order();
    let longest = ctx
        .transversal
        .reps()
        .iter()
        .map(Word::len)
        .max()
        .unwrap_or(0);
    for w in ctx.words.iter().take_while(|w| w.len() <= longest) {
        let c = ctx.table.coset_of(w).map_err(|e| e.to_string())?;
        let rep = ctx.transversal.get(c);
        ensure(order.cmp_words(w, rep).is_ge(), || {
            format!("{} precedes rep {} of coset {c}", ctx.fmt(w), ctx.fmt(rep))
        })?;
    }
    Ok(())
}

fn bar_map(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(4);
    for (c, t) in ctx.transversal.reps().iter().enumerate() {
        let r = ctx
            .transversal
            .rep(&ctx.table, t)
            .map_err(|e| e.to_string())?;
        ensure(r == t, || format!("rep of rep {c} differs"))?;
    }
    for _ in 0..ctx.config.trials {
        let w = ctx.random_word(&mut rng);
        let v = ctx.random_word(&mut rng);
        let h = sample::random_subgroup_element(&mut rng, &ctx.table, &ctx.transversal, 8);
        let rw = ctx
            .transversal
            .rep(&ctx.table, &w)
            .map_err(|e| e.to_string())?;
        let rrw = ctx
            .transversal
            .rep(&ctx.table, rw)
            .map_err(|e| e.to_string())?;
        ensure(rw == rrw, || {
            format!("rep not idempotent on {}", ctx.fmt(&w))
        })?;
        let rhw = ctx
            .transversal
            .rep(&ctx.table, &h.concat(&w))
            .map_err(|e| e.to_string())?;
        ensure(rhw == rw, || {
            format!("rep(h w) != rep(w) for w={}", ctx.fmt(&w))
        })?;
        let lhs = ctx
            .table
            .coset_of(&w.concat(&v))
            .map_err(|e| e.to_string())?;
        let c = ctx.table.coset_of(&w).map_err(|e| e.to_string())?;
        let rhs = ctx.table.walk(c, &v).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || {
            "coset of w v not determined by coset of w".to_string()
        })?;
    }
    Ok(())
}

fn basis_count(ctx: &Ctx) -> Outcome {
    let (m, n) = (ctx.table.index(), ctx.alphabet.len());
    let expected = schreier_rank(m, n);
    ensure(ctx.basis.len() == expected, || {
        format!("|B| = {} but 1 + m(n-1) = {expected}", ctx.basis.len())
    })
}

fn basis_degenerate(ctx: &Ctx) -> Outcome {
    let m = ctx.table.index();
    let pairs = ctx.basis.degenerate_pairs();
    ensure(pairs.len() + 1 == m || (m == 1 && pairs.is_empty()), || {
        format!("{} degenerate pairs for index {m}", pairs.len())
    })?;
    let owned: HashSet<(usize, usize)> = (1..m)
        .filter_map(|c| {
            ctx.basis
                .degenerate_pair_for(&ctx.table, &ctx.transversal, c)
        })
        .collect();
    let actual: HashSet<(usize, usize)> = pairs.into_iter().collect();
    ensure(owned.len() == m - 1 && owned == actual, || {
        "degenerate pairs not in bijection with nonempty representatives".into()
    })
}

fn basis_distinct(ctx: &Ctx) -> Outcome {
    let mut seen = HashSet::new();
    for e in ctx.basis.elements() {
        ensure(!e.word.is_identity(), || "identity in basis".into())?;
        ensure(
            Word::from_letters(e.word.letters().to_vec()) == e.word,
            || format!("{} not reduced", ctx.fmt(&e.word)),
        )?;
        ensure(seen.insert(&e.word), || {
            format!("{} repeated", ctx.fmt(&e.word))
        })?;
    }
    Ok(())
}

fn basis_membership(ctx: &Ctx) -> Outcome {
    for e in ctx.basis.elements() {
        let p = ctx
            .action
            .evaluate(ctx.table.basepoint(), &e.word)
            .map_err(|e| e.to_string())?;
        ensure(p == ctx.table.basepoint(), || {
            format!("{} moves the basepoint", ctx.fmt(&e.word))
        })?;
    }
    Ok(())
}

fn rewrite_basis_fidelity(ctx: &Ctx) -> Outcome {
    for (k, e) in ctx.basis.elements().iter().enumerate() {
        let r = rewrite(&ctx.table, &ctx.basis, &e.word).map_err(|e| e.to_string())?;
        ensure(r == BWord::from_factors([(k, 1)]), || {
            format!("basis word {k} rewrites to {r}")
        })?;
    }
    Ok(())
}

fn round_trip(ctx: &Ctx, h: &Word) -> Outcome {
    let r = rewrite(&ctx.table, &ctx.basis, h).map_err(|e| e.to_string())?;
    let back = expand(&ctx.basis, &r).map_err(|e| e.to_string())?;
    ensure(back == *h, || {
        format!("{} -> {r} -> {}", ctx.fmt(h), ctx.fmt(&back))
    })?;
    ensure(r.is_empty() == h.is_identity(), || {
        format!("{} rewrites to {r}", ctx.fmt(h))
    })
}

fn rewrite_round_trip(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(5);
    for _ in 0..ctx.config.trials {
        let h = sample::random_subgroup_element(&mut rng, &ctx.table, &ctx.transversal, 12);
        round_trip(ctx, &h)?;
    }
    Ok(())
}

fn rewrite_exhaustive(ctx: &Ctx) -> Outcome {
    for w in &ctx.words {
        let c = ctx.table.coset_of(w).map_err(|e| e.to_string())?;
        if c == 0 {
            round_trip(ctx, w)?;
        } else {
            match rewrite(&ctx.table, &ctx.basis, w) {
                Err(Error::NotInSubgroup { coset }) if coset == c => {}
                other => return Err(format!("{} outside H gave {other:?}", ctx.fmt(w))),
            }
        }
    }
    Ok(())
}

fn rewrite_homomorphism(ctx: &Ctx) -> Outcome {
    let mut rng = ctx.rng(6);
    for _ in 0..ctx.config.trials {
        let h1 = sample::random_subgroup_element(&mut rng, &ctx.table, &ctx.transversal, 10);
        let h2 = sample::random_subgroup_element(&mut rng, &ctx.table, &ctx.transversal, 10);
        let r1 = rewrite(&ctx.table, &ctx.basis, &h1).map_err(|e| e.to_string())?;
        let r2 = rewrite(&ctx.table, &ctx.basis, &h2).map_err(|e| e.to_string())?;
        let r12 = rewrite(&ctx.table, &ctx.basis, &h1.concat(&h2)).map_err(|e| e.to_string())?;
        ensure(r12 == r1.concat(&r2), || {
            format!("rewrite({} * {})", ctx.fmt(&h1), ctx.fmt(&h2))
        })?;
    }
    Ok(())
}

const SIGMA_SAMPLES: u64 = 4;

fn random_sigma(ctx: &Ctx, rng: &mut ChaCha8Rng) -> HAction {
    let degree = rng.gen_range(1..=4);
    let perms = (0..ctx.basis.len())
        .map(|_| sample::random_permutation(rng, degree))
        .collect();
    HAction::new(degree, perms).expect("valid random H-action")
}

fn for_each_sigma(
    ctx: &Ctx,
    salt: u64,
    mut f: impl FnMut(&HAction, &mut ChaCha8Rng) -> Outcome,
) -> Outcome {
    let mut rng = ctx.rng(salt);
    for _ in 0..SIGMA_SAMPLES {
        let sigma = random_sigma(ctx, &mut rng);
        f(&sigma, &mut rng)?;
    }
    Ok(())
}

fn induce_restriction(ctx: &Ctx) -> Outcome {
    for_each_sigma(ctx, 7, |sigma, _| {
        let ind = induce(sigma, &ctx.table, &ctx.basis).map_err(|e| e.to_string())?;
        let restricted = restrict_to_h(&ind, &ctx.basis).map_err(|e| e.to_string())?;
        ensure(restricted == sigma.perms(), || {
            "restriction differs from sigma".into()
        })
    })
}

fn induce_claim(ctx: &Ctx) -> Outcome {
    for_each_sigma(ctx, 8, |sigma, _| {
        let ind = induce(sigma, &ctx.table, &ctx.basis).map_err(|e| e.to_string())?;
        ensure(check_claim(&ind, &ctx.table, &ctx.transversal), || {
            "(a, H) t != (a, Ht)".into()
        })
    })
}

fn induce_action_axioms(ctx: &Ctx) -> Outcome {
    for_each_sigma(ctx, 9, |sigma, rng| {
        let ind = induce(sigma, &ctx.table, &ctx.basis).map_err(|e| e.to_string())?;
        let act = ind.action();
        for _ in 0..ctx.config.trials {
            let p = rng.gen_range(0..act.degree());
            let v = ctx.random_word(rng);
            let w = ctx.random_word(rng);
            let lhs = act.evaluate(p, &v.concat(&w)).map_err(|e| e.to_string())?;
            let mid = act.evaluate(p, &v).map_err(|e| e.to_string())?;
            let rhs = act.evaluate(mid, &w).map_err(|e| e.to_string())?;
            ensure(lhs == rhs, || "induced action not compatible".into())?;
            ensure(act.evaluate(p, &Word::identity()) == Ok(p), || {
                "identity moves a point".into()
            })?;
            let (_, c) = ind.decode(p);
            let (_, c2) = ind.decode(lhs);
            let expect = ctx
                .table
                .walk(c, &v.concat(&w))
                .map_err(|e| e.to_string())?;
            ensure(c2 == expect, || "coset projection not equivariant".into())?;
        }
        Ok(())
    })
}

fn induce_tensor_formula(ctx: &Ctx) -> Outcome {
    for_each_sigma(ctx, 10, |sigma, rng| {
        let ind = induce(sigma, &ctx.table, &ctx.basis).map_err(|e| e.to_string())?;
        for _ in 0..ctx.config.trials {
            let a = rng.gen_range(0..sigma.degree());
            let prior = ctx.random_word(rng);
            let g = ctx.random_word(rng);
            let c = ctx.table.coset_of(&prior).map_err(|e| e.to_string())?;
            let direct = ind
                .action()
                .evaluate(ind.encode(a, c), &g)
                .map_err(|e| e.to_string())?;
            let via = tensor_transfer(
                sigma,
                &ctx.table,
                &ctx.transversal,
                &ctx.basis,
                a,
                &prior,
                &g,
            )
            .map_err(|e| e.to_string())?;
            ensure(ind.decode(direct) == via, || {
                format!("a={a} prior={} g={}", ctx.fmt(&prior), ctx.fmt(&g))
            })?;
        }
        Ok(())
    })
}

fn induce_relabel(ctx: &Ctx) -> Outcome {
    for_each_sigma(ctx, 11, |sigma, rng| {
        let f = sample::random_permutation(rng, sigma.degree());
        let relabelled = sigma.relabel(&f).map_err(|e| e.to_string())?;
        let ind = induce(sigma, &ctx.table, &ctx.basis).map_err(|e| e.to_string())?;
        let ind2 = induce(&relabelled, &ctx.table, &ctx.basis).map_err(|e| e.to_string())?;
        // f x id on A x H\F
        let m = ctx.table.index();
        let lifted = Permutation::new(
            (0..sigma.degree() * m)
                .map(|p| {
                    let (a, c) = ind.decode(p);
                    ind.encode(f.apply(a), c)
                })
                .collect(),
        )
        .map_err(|e| e.to_string())?;
        for (p, q) in ind
            .action()
            .generator_perms()
            .iter()
            .zip(ind2.action().generator_perms())
        {
            ensure(p.relabel(&lifted) == *q, || {
                "induced actions not conjugate".into()
            })?;
        }
        Ok(())
    })
}
