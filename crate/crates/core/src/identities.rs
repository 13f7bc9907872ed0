//! A randomized suite of every identity the library relies on.
//!
//! Each case draws fresh nonzero octonions and checks all identities on them.
//! Exact runs compare with tolerance 0; a failure there is a bug. Float runs
//! scale the tolerance by the larger of 1 and the biggest coefficient being
//! compared, since some identities involve four-factor products whose
//! coefficients reach 1e5.

use std::sync::OnceLock;

use rayon::prelude::*;

use crate::brackets::{
    additive_associator, multiplicative_associator, multiplicative_commutator, schafer_sides,
};
use crate::error::Result;
use crate::octonion::{check_tolerance, Octonion};
use crate::sample;
use crate::scalar::Scalar;
use crate::trees::{enumerate_trees, ProductTree};

/// Longest word used by the bi-associativity identity.
pub const MAX_WORD_LEN: usize = 8;

pub const IDENTITIES: [&str; 14] = [
    "eq2",
    "eq3",
    "eq4",
    "associator-forms",
    "associator-unit-norm",
    "commutator-unit-norm",
    "commutator-contract",
    "duality",
    "schafer",
    "biassociativity",
    "inverse",
    "norm-multiplicativity",
    "alternativity",
    "moufang",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityOutcome {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    /// Smallest failing case index, if any.
    pub first_failure: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteReport {
    pub cases: usize,
    pub seed: u64,
    pub outcomes: Vec<IdentityOutcome>,
}

impl SuiteReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes.iter().all(|o| o.failed == 0)
    }
}

fn trees_up_to_word_len() -> &'static [Vec<ProductTree>] {
    static TREES: OnceLock<Vec<Vec<ProductTree>>> = OnceLock::new();
    TREES.get_or_init(|| {
        (1..=MAX_WORD_LEN)
            .map(|n| enumerate_trees(n).expect("within enumeration bound"))
            .collect()
    })
}

pub fn run_suite<S: Scalar>(cases: usize, seed: u64, tolerance: &S) -> Result<SuiteReport> {
    check_tolerance(tolerance)?;
    let per_case: Vec<Vec<bool>> = (0..cases)
        .into_par_iter()
        .map(|case| run_case(seed, case as u64, tolerance))
        .collect();
    let outcomes = IDENTITIES
        .iter()
        .enumerate()
        .map(|(k, &name)| {
            let failures: Vec<usize> = per_case
                .iter()
                .enumerate()
                .filter(|(_, r)| !r[k])
                .map(|(case, _)| case)
                .collect();
            IdentityOutcome {
                name,
                passed: cases - failures.len(),
                failed: failures.len(),
                first_failure: failures.first().copied(),
            }
        })
        .collect();
    Ok(SuiteReport {
        cases,
        seed,
        outcomes,
    })
}

/// Results for one case, in [`IDENTITIES`] order. Evaluation errors count as
/// failures.
fn run_case<S: Scalar>(seed: u64, case: u64, tol: &S) -> Vec<bool> {
    let mut rng = sample::case_rng(seed, case);
    let x: Octonion<S> = sample::nonzero_octonion(&mut rng);
    let y: Octonion<S> = sample::nonzero_octonion(&mut rng);
    let z: Octonion<S> = sample::nonzero_octonion(&mut rng);
    let a: Octonion<S> = sample::nonzero_octonion(&mut rng);
    let word = sample::word::<S, _>(&mut rng, MAX_WORD_LEN);

    let eq = |p: &Octonion<S>, q: &Octonion<S>| {
        let scale = [S::one(), p.max_abs(), q.max_abs()]
            .into_iter()
            .fold(S::zero(), |m, v| if v > m { v } else { m });
        p.equals(q, &(tol.clone() * scale)).unwrap_or(false)
    };
    let one = Octonion::one();
    let unit_norm = |v: &Octonion<S>| eq(&Octonion::real(v.norm_sq()), &one);

    let xy = &x * &y;
    let yx = &y * &x;
    let left = &xy * &z;
    let right = &x * &(&y * &z);

    let assoc = multiplicative_associator(&x, &y, &z).ok();
    let comm = multiplicative_commutator(&x, &y).ok();
    let inv_left = left.inverse().ok();
    let inverses = (x.inverse(), y.inverse(), z.inverse());

    let eq2 = assoc.as_ref().is_some_and(|a| eq(&(&left * a), &right));
    let eq3 = assoc
        .as_ref()
        .is_some_and(|a| eq(&left, &(&right * &a.conjugate())));
    let eq4 = match (&inv_left, &inverses) {
        (Some(il), (Ok(xi), Ok(yi), Ok(zi))) => eq(il, &(zi * &(yi * xi))),
        _ => false,
    };
    let forms = match (&assoc, &inv_left) {
        (Some(a), Some(il)) => eq(a, &(il * &right)),
        _ => false,
    };
    let assoc_norm = assoc.as_ref().is_some_and(unit_norm);
    let comm_norm = comm.as_ref().is_some_and(unit_norm);
    let comm_contract = comm
        .as_ref()
        .is_some_and(|c| eq(&(&xy * c), &yx) && eq(&xy, &(&yx * &c.conjugate())));
    let zero = Octonion::zero();
    let duality = assoc
        .as_ref()
        .is_some_and(|m| eq(&additive_associator(&x, &y, &z), &zero) == eq(m, &one));
    let (schafer_lhs, schafer_rhs) = schafer_sides(&a, &x, &y, &z);
    let schafer = eq(&schafer_lhs, &schafer_rhs);
    let biassoc = word.substitute(&x, &y).is_ok_and(|factors| {
        let trees = &trees_up_to_word_len()[factors.len() - 1];
        let reference = trees[0].eval_unchecked(&factors);
        trees[1..]
            .iter()
            .all(|t| eq(&t.eval_unchecked(&factors), &reference))
    });
    let inverse = inverses
        .0
        .as_ref()
        .is_ok_and(|xi| eq(&(&x * xi), &one) && eq(&(xi * &x), &one));
    let norm_mult = eq(
        &Octonion::real(xy.norm_sq()),
        &Octonion::real(x.norm_sq() * y.norm_sq()),
    );
    let alternativity = eq(&(&x * &xy), &(&(&x * &x) * &y)) && eq(&(&yx * &x), &(&y * &(&x * &x)));
    let moufang = eq(&(&(&xy * &x) * &z), &(&x * &(&y * &(&x * &z))));

    vec![
        eq2,
        eq3,
        eq4,
        forms,
        assoc_norm,
        comm_norm,
        comm_contract,
        duality,
        schafer,
        biassoc,
        inverse,
        norm_mult,
        alternativity,
        moufang,
    ]
}
