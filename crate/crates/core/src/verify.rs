//! Range verification: for every prime up to a bound, compute each
//! representation and every route for the cubic character of 2, cross-check
//! them, and collect any disagreement as a failure on that prime's record.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::characters::TABLE_LIMIT;
use crate::eisenstein::{classify_rational_prime, EisensteinInt, PrimeClass};
use crate::error::{Error, Result};
use crate::representations::{
    four_p_solutions, parity_link_check, solve_norm_form, solve_norm_form_via_jacobi, solve_p_27,
    split_rational_prime, FourPRep, NormFormRep, P27Rep,
};
use crate::solvability::{
    cubic2_full, cubic2_oracle, inert_cube_bijection_check, lemma14_check, quad2_by_legendre, quad2_by_search,
    quad2_cross_check, Cubic2Verdict, Quad2,
};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeRecord {
    pub p: u64,
    pub class: PrimeClass,
    pub norm_form: Option<NormFormRep>,
    pub four_p: Option<FourPRep>,
    pub p27: Option<P27Rep>,
    pub cubic2: Cubic2Verdict,
    pub quad2: Option<Quad2>,
    pub failures: Vec<String>,
}

/// A known published claim compared against an exhaustive computation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub modulus: u64,
    pub claimed_solvable: bool,
    pub oracle_root: Option<u64>,
    pub note: String,
    /// Informational records never fail a run.
    pub informational: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub max: u64,
    pub primes: usize,
    pub ramified: usize,
    pub inert: usize,
    pub split: usize,
    /// Split primes modulo which 2 is a cube.
    pub split_cubic_residue: usize,
    /// split_cubic_residue / split, when there is at least one split prime.
    pub density: Option<f64>,
    pub failed_primes: usize,
    pub ring_trials: Option<RingTrials>,
    pub discrepancies: Vec<Discrepancy>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub records: Vec<PrimeRecord>,
    pub summary: Summary,
}

impl VerifyReport {
    /// Any failure on a record, in the ring trials, or a non-informational
    /// discrepancy.
    pub fn has_failures(&self) -> bool {
        self.summary.failed_primes > 0
            || self.summary.ring_trials.is_some_and(|t| t.failures > 0)
            || self.summary.discrepancies.iter().any(|d| !d.informational)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTrials {
    pub seed: u64,
    pub trials: u64,
    pub failures: u64,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct VerifyOptions {
    /// Worker threads; 0 uses the rayon default.
    pub jobs: usize,
    pub paper_examples: bool,
    /// Seed for randomized ring-property trials, if any are requested.
    pub seed: Option<u64>,
}

pub const RING_TRIALS_PER_RUN: u64 = 10_000;

fn check(failures: &mut Vec<String>, ok: Result<bool>, what: &str) {
    match ok {
        Ok(true) => {}
        Ok(false) => failures.push(what.to_owned()),
        Err(e) => failures.push(format!("{what}: {e}")),
    }
}

/// The record for one prime with every applicable cross-check.
pub fn verify_prime(p: u64) -> Result<PrimeRecord> {
    let class = classify_rational_prime(p)?;
    let cubic2 = cubic2_full(p)?;
    let mut failures = Vec::new();
    if !cubic2.consistent() {
        failures.push(format!(
            "cubic2 routes disagree: rep={:?} sym={:?} oracle={}",
            cubic2.by_representation, cubic2.by_symbol, cubic2.by_oracle
        ));
    }

    let (mut norm_form, mut four_p, mut p27) = (None, None, None);
    if class == PrimeClass::Split {
        let nf = solve_norm_form(p)?;
        if nf.value() != p as i128 {
            failures.push(format!("norm form ({}, {}) does not represent p", nf.a, nf.b));
        }
        if p <= TABLE_LIMIT {
            match solve_norm_form_via_jacobi(p) {
                Ok(j) if j.value() == p as i128 && j.equivalent(&nf) => {}
                Ok(j) => failures.push(format!("Jacobi sum pair ({}, {}) not equivalent to ({}, {})", j.a, j.b, nf.a, nf.b)),
                Err(e) => failures.push(format!("Jacobi sum: {e}")),
            }
        }
        let reps = four_p_solutions(p)?;
        if reps.len() != 1 {
            failures.push(format!("{} normalized solutions of 4p = A² + 27B²", reps.len()));
        }
        check(&mut failures, parity_link_check(p), "parity link between (A, B) and (C, D)");
        let (pi, pi_bar) = split_rational_prime(p)?;
        if !(pi.is_primary() && pi.checked_mul(pi_bar)? == EisensteinInt::from_int(p as i64)) {
            failures.push(format!("splitting {pi}·{pi_bar} is not primary or does not multiply to p"));
        }
        check(&mut failures, lemma14_check(pi), "parity criterion for (2/π)₃");
        norm_form = Some(nf);
        four_p = reps.first().copied();
        p27 = solve_p_27(p)?;
    }
    if class == PrimeClass::Inert {
        check(&mut failures, inert_cube_bijection_check(p), "cubing is not bijective");
    }

    let quad2 = if p > 2 {
        check(&mut failures, quad2_cross_check(p), "quadratic character of ±2");
        let by_search = quad2_by_search(p)?;
        if quad2_by_legendre(p)? != by_search {
            failures.push("Legendre symbols of ±2 disagree with square search".to_owned());
        }
        Some(by_search)
    } else {
        None
    };

    Ok(PrimeRecord { p, class, norm_form, four_p, p27, cubic2, quad2, failures })
}

/// Examples whose published conclusion conflicts with exhaustive search.
pub fn paper_example_discrepancies() -> Result<Vec<Discrepancy>> {
    let mut out = Vec::new();
    let root = cubic2_oracle(259)?;
    out.push(Discrepancy {
        modulus: 259,
        claimed_solvable: true,
        oracle_root: root,
        note: format!(
            "259 = 4² + 27·3² but 259 = 7·37 is composite, outside the prime hypothesis of the C² + 27D² criterion; \
             oracle: {}",
            match root {
                Some(x) => format!("root {x}"),
                None => "no root (2 is not a cube mod 7)".to_owned(),
            }
        ),
        informational: true,
    });
    let root = cubic2_oracle(29)?;
    out.push(Discrepancy {
        modulus: 29,
        claimed_solvable: false,
        oracle_root: root,
        note: format!(
            "29 has no representation C² + 27D², but 29 ≡ 2 (mod 3) so every residue is a cube; oracle: {}",
            match root {
                Some(x) => format!("root {x}"),
                None => "no root".to_owned(),
            }
        ),
        informational: true,
    });
    Ok(out)
}

/// Norm multiplicativity, Euclidean division, conjugation and primary
/// uniqueness on random elements; returns the failure count.
pub fn ring_property_trials(seed: u64, trials: u64) -> RingTrials {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bound = 1i64 << 30;
    let mut failures = 0;
    for _ in 0..trials {
        let mut draw = || EisensteinInt::new(rng.gen_range(-bound..=bound), rng.gen_range(-bound..=bound));
        let (x, y) = (draw(), draw());
        let ok = (|| -> Result<bool> {
            let mult = x.checked_mul(y)?.norm()?.0 == x.norm()?.0 * y.norm()?.0;
            let div = if y.is_zero() {
                true
            } else {
                let (q, r) = x.divmod(y)?;
                q.checked_mul(y)?.checked_add(r)? == x && r.norm()? < y.norm()?
            };
            let conj = x.conj()?.conj()? == x && x.checked_mul(y)?.conj()? == x.conj()?.checked_mul(y.conj()?)?;
            let primary = x.norm()?.0 % 3 == 0
                || x.associates()?.iter().filter(|z| z.is_primary()).count() == 1;
            Ok(mult && div && conj && primary)
        })();
        if !matches!(ok, Ok(true)) {
            failures += 1;
        }
    }
    RingTrials { seed, trials, failures }
}

/// Verifies every prime up to `max`; records come back in ascending order.
pub fn verify_range(max: u64, options: VerifyOptions) -> Result<VerifyReport> {
    if max < 2 {
        return Err(Error::ModulusTooSmall(max));
    }
    let primes = arith::primes_up_to(max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(options.jobs)
        .build()
        .expect("thread pool");
    let records = pool.install(|| primes.par_iter().map(|&p| verify_prime(p)).collect::<Result<Vec<_>>>())?;

    let count = |c: PrimeClass| records.iter().filter(|r| r.class == c).count();
    let split = count(PrimeClass::Split);
    let split_cubic_residue = records
        .iter()
        .filter(|r| r.class == PrimeClass::Split && r.cubic2.by_oracle)
        .count();
    let summary = Summary {
        max,
        primes: records.len(),
        ramified: count(PrimeClass::Ramified),
        inert: count(PrimeClass::Inert),
        split,
        split_cubic_residue,
        density: (split > 0).then(|| split_cubic_residue as f64 / split as f64),
        failed_primes: records.iter().filter(|r| !r.failures.is_empty()).count(),
        ring_trials: options.seed.map(|s| ring_property_trials(s, RING_TRIALS_PER_RUN)),
        discrepancies: if options.paper_examples { paper_example_discrepancies()? } else { Vec::new() },
    };
    Ok(VerifyReport { records, summary })
}
