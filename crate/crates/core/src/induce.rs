//! Induced actions `A ⊗_H F`, identified with `A × H\F`.
//!
//! Given an action of `H` on `A` (one permutation per Schreier generator),
//! the free group acts on `A × H\F` by
//!
//! ```text
//! (a, c) · x = (σ(s)(a), c · x),   s = t_c x (t̄_c x)⁻¹
//! ```
//!
//! where degenerate `s` acts as the identity. Point `(a, c)` is encoded as
//! `a + |A| * c`.

use crate::actions::{FiniteAction, Permutation};
use crate::cosets::{CosetTable, SchreierTransversal};
use crate::error::{Error, Result};
use crate::rewrite::{rewrite, BWord};
use crate::schreier::{SchreierBasis, Slot};

/// An action of `H` on `{0..degree-1}` given on the Schreier basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HAction {
    degree: usize,
    perms: Vec<Permutation>,
    inverses: Vec<Permutation>,
}

impl HAction {
    pub fn new(degree: usize, perms: Vec<Permutation>) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation(
                "degree must be at least 1".into(),
            ));
        }
        if let Some(p) = perms.iter().find(|p| p.degree() != degree) {
            return Err(Error::SizeMismatch {
                expected: degree,
                found: p.degree(),
            });
        }
        let inverses = perms.iter().map(Permutation::inverse).collect();
        Ok(Self {
            degree,
            perms,
            inverses,
        })
    }

    /// Every basis element acts trivially.
    pub fn trivial(degree: usize, basis_len: usize) -> Result<Self> {
        Self::new(degree, vec![Permutation::identity(degree); basis_len])
    }

    /// Reads an action file whose generators are named `b0, b1, ...`.
    pub fn from_action(action: &FiniteAction) -> Result<Self> {
        let names = action.alphabet().names();
        let mut perms: Vec<Option<Permutation>> = vec![None; names.len()];
        for (name, perm) in names.iter().zip(action.generator_perms()) {
            let k = name
                .strip_prefix('b')
                .and_then(|d| d.parse::<usize>().ok())
                .filter(|&k| k < names.len() && format!("b{k}") == *name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            perms[k] = Some(perm.clone());
        }
        let perms = perms
            .into_iter()
            .enumerate()
            .map(|(k, p)| p.ok_or_else(|| Error::UnknownGenerator(format!("b{k}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(action.degree(), perms)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// `a · bword`, factors applied left to right.
    pub fn apply(&self, a: usize, bword: &BWord) -> Result<usize> {
        if a >= self.degree {
            return Err(Error::PointOutOfRange {
                point: a,
                degree: self.degree,
            });
        }
        bword.factors().try_fold(a, |a, (k, s)| {
            let table = if s < 0 { &self.inverses } else { &self.perms };
            table
                .get(k)
                .map(|p| p.apply(a))
                .ok_or(Error::BasisIndexOutOfRange {
                    index: k,
                    size: self.perms.len(),
                })
        })
    }

    /// Relabels points by a bijection `f` of `A`.
    pub fn relabel(&self, f: &Permutation) -> Result<Self> {
        Self::new(
            self.degree,
            self.perms.iter().map(|p| p.relabel(f)).collect(),
        )
    }
}

/// The action of `F` on `A × H\F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedAction {
    action: FiniteAction,
    fiber: usize,
    index: usize,
}

impl InducedAction {
    pub fn action(&self) -> &FiniteAction {
        &self.action
    }

    pub fn into_action(self) -> FiniteAction {
        self.action
    }

    /// `|A|`.
    pub fn fiber(&self) -> usize {
        self.fiber
    }

    /// `[F:H]`.
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn encode(&self, a: usize, coset: usize) -> usize {
        a + self.fiber * coset
    }

    pub fn decode(&self, point: usize) -> (usize, usize) {
        (point % self.fiber, point / self.fiber)
    }
}

pub fn induce(sigma: &HAction, table: &CosetTable, basis: &SchreierBasis) -> Result<InducedAction> {
    if sigma.len() != basis.len() {
        return Err(Error::SizeMismatch {
            expected: basis.len(),
            found: sigma.len(),
        });
    }
    let fiber = sigma.degree();
    let m = table.index();
    let perms = (0..table.rank())
        .map(|g| {
            let mut images = vec![0; fiber * m];
            for c in 0..m {
                let next = table.next(c, g);
                for a in 0..fiber {
                    let image = match basis.slot(c, g) {
                        Slot::Basis(k) => sigma.perms[k].apply(a),
                        Slot::Degenerate => a,
                    };
                    images[a + fiber * c] = image + fiber * next;
                }
            }
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>>>()?;
    let action = FiniteAction::new(table.action().alphabet().clone(), fiber * m, perms)?;
    Ok(InducedAction {
        action,
        fiber,
        index: m,
    })
}

/// For each basis element `b`, the permutation `a ↦ first coordinate of
/// (a, H) · b`. For an induced action this recovers `σ`.
pub fn restrict_to_h(ind: &InducedAction, basis: &SchreierBasis) -> Result<Vec<Permutation>> {
    basis
        .elements()
        .iter()
        .map(|e| {
            let images = (0..ind.fiber)
                .map(|a| {
                    let p = ind.action.evaluate(ind.encode(a, 0), &e.word)?;
                    let (image, coset) = ind.decode(p);
                    if coset != 0 {
                        return Err(Error::NotInSubgroup { coset });
                    }
                    Ok(image)
                })
                .collect::<Result<Vec<_>>>()?;
            Permutation::new(images)
        })
        .collect()
}

/// `(a, H) · t = (a, Ht)` for every representative `t` and every `a`.
pub fn check_claim(
    ind: &InducedAction,
    table: &CosetTable,
    transversal: &SchreierTransversal,
) -> bool {
    transversal.reps().iter().all(|t| {
        let Ok(coset) = table.coset_of(t) else {
            return false;
        };
        (0..ind.fiber)
            .all(|a| ind.action.evaluate(ind.encode(a, 0), t).ok() == Some(ind.encode(a, coset)))
    })
}

/// Transfer of the tensor-product action through the coordinates
/// `A × H\F`, computed on whole words rather than letter by letter:
///
/// ```text
/// (a, H w) · g = (a · (w̄ g (w̄g)‾⁻¹), H w g)
/// ```
///
/// where the `H`-element in the first coordinate acts through its rewriting
/// over the Schreier basis. Returns `(a', coset')`. Agrees with [`induce`];
/// kept as an independent route for checking it.
pub fn tensor_transfer(
    sigma: &HAction,
    table: &CosetTable,
    transversal: &SchreierTransversal,
    basis: &SchreierBasis,
    a: usize,
    prior: &crate::words::Word,
    g: &crate::words::Word,
) -> Result<(usize, usize)> {
    let coset = table.coset_of(prior)?;
    let tg = transversal.get(coset).concat(g);
    let target = table.coset_of(&tg)?;
    let h = tg.concat(&transversal.get(target).invert());
    let a = sigma.apply(a, &rewrite(table, basis, &h)?)?;
    Ok((a, target))
}
