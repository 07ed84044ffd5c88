//! Representations of a prime p ≡ 1 (mod 3) by the forms a² − ab + b²,
//! A² + 27B² (of 4p) and C² + 27D², and the splitting p = π·π̄.
//!
//! All solvers are bounded exhaustive searches; the bounds come from the
//! positivity of each form.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::characters::{build_character, jacobi_sum_cubic};
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};

/// p = a² − ab + b².
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NormFormRep {
    pub a: i64,
    pub b: i64,
}

/// 4p = A² + 27B² with A > 0, B ≥ 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FourPRep {
    #[serde(rename = "A")]
    pub a: i64,
    #[serde(rename = "B")]
    pub b: i64,
}

/// p = C² + 27D² with C > 0, D ≥ 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct P27Rep {
    #[serde(rename = "C")]
    pub c: i64,
    #[serde(rename = "D")]
    pub d: i64,
}

impl NormFormRep {
    pub fn value(&self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        a * a - a * b + b * b
    }

    pub fn as_eisenstein(&self) -> EisensteinInt {
        EisensteinInt::new(self.a, self.b)
    }

    /// The orbit under the six units and conjugation.
    pub fn orbit(&self) -> Vec<NormFormRep> {
        let x = self.as_eisenstein();
        let conj = x.conj().expect("pairs within form range");
        let mut out: Vec<NormFormRep> = [x, conj]
            .into_iter()
            .flat_map(|y| y.associates().expect("nonzero"))
            .map(|y| NormFormRep { a: y.a, b: y.b })
            .collect();
        out.sort_by_key(|r| (r.a, r.b));
        out.dedup();
        out
    }

    /// Same class under units and conjugation.
    pub fn equivalent(&self, other: &NormFormRep) -> bool {
        self.orbit().contains(other)
    }

    /// a > b > 0 with least b when the orbit has one, else the
    /// lexicographically least pair with both entries non-negative.
    pub fn normalized(&self) -> NormFormRep {
        let orbit = self.orbit();
        orbit
            .iter()
            .filter(|r| r.a > r.b && r.b > 0)
            .min_by_key(|r| (r.b, r.a))
            .or_else(|| orbit.iter().filter(|r| r.a >= 0 && r.b >= 0).min_by_key(|r| (r.a, r.b)))
            .copied()
            .unwrap_or(*self)
    }
}

impl FourPRep {
    pub fn value(&self) -> i128 {
        let (a, b) = (self.a as i128, self.b as i128);
        a * a + 27 * b * b
    }
}

impl P27Rep {
    pub fn value(&self) -> i128 {
        let (c, d) = (self.c as i128, self.d as i128);
        c * c + 27 * d * d
    }
}

/// ⌊√n⌋ and whether n is a perfect square.
pub fn isqrt(n: i128) -> Result<(u128, bool)> {
    if n < 0 {
        return Err(Error::Negative(n));
    }
    let n = n as u128;
    let r = n.isqrt();
    Ok((r, r * r == n))
}

fn square_root(n: i128) -> Option<i64> {
    match isqrt(n) {
        Ok((r, true)) => Some(r as i64),
        _ => None,
    }
}

/// p prime and p ≡ 1 (mod 3).
pub fn require_split(p: u64) -> Result<u64> {
    arith::require_prime(p)?;
    if p % 3 != 1 {
        return Err(Error::NotSplit { p });
    }
    Ok(p)
}

/// Some (a, b) with a² − ab + b² = p, normalized.
pub fn solve_norm_form(p: u64) -> Result<NormFormRep> {
    require_split(p)?;
    let p = p as i128;
    // a² − ab + b² = p has discriminant 4p − 3b² in a, so 3b² ≤ 4p.
    let bound = isqrt(4 * p / 3)?.0 as i128 + 1;
    for b in 0..=bound {
        let Some(s) = square_root(4 * p - 3 * b * b) else { continue };
        let s = s as i128;
        if (b + s) % 2 == 0 {
            let rep = NormFormRep { a: ((b + s) / 2) as i64, b: b as i64 };
            debug_assert_eq!(rep.value(), p);
            return Ok(rep.normalized());
        }
    }
    Err(Error::MissingRepresentation { p: p as u64 })
}

/// The coordinates of the cubic Jacobi sum J(χ, χ), which has norm p.
pub fn solve_norm_form_via_jacobi(p: u64) -> Result<NormFormRep> {
    require_split(p)?;
    let chi = build_character(p, 3)?;
    let j = jacobi_sum_cubic(&chi, &chi)?;
    Ok(NormFormRep { a: j.a, b: j.b })
}

/// Every (A, B) with A > 0, B ≥ 0 and A² + 27B² = 4p, by full scan over B.
pub fn four_p_solutions(p: u64) -> Result<Vec<FourPRep>> {
    require_split(p)?;
    let four_p = 4 * p as i128;
    let bound = isqrt(four_p / 27)?.0 as i128;
    Ok((0..=bound)
        .filter_map(|b| {
            square_root(four_p - 27 * b * b)
                .filter(|&a| a > 0)
                .map(|a| FourPRep { a, b: b as i64 })
        })
        .collect())
}

/// The normalized (A, B) with 4p = A² + 27B².
pub fn solve_4p(p: u64) -> Result<FourPRep> {
    four_p_solutions(p)?
        .first()
        .copied()
        .ok_or(Error::MissingRepresentation { p })
}

/// (C, D) with p = C² + 27D², if any.
pub fn solve_p_27(p: u64) -> Result<Option<P27Rep>> {
    require_split(p)?;
    let p = p as i128;
    let bound = isqrt(p / 27)?.0 as i128;
    Ok((0..=bound).find_map(|d| {
        square_root(p - 27 * d * d)
            .filter(|&c| c > 0)
            .map(|c| P27Rep { c, d: d as i64 })
    }))
}

/// A and B both even exactly when p = C² + 27D², and then (C, D) = (A/2, B/2).
pub fn parity_link_check(p: u64) -> Result<bool> {
    let four = solve_4p(p)?;
    let p27 = solve_p_27(p)?;
    let even = four.a % 2 == 0 && four.b % 2 == 0;
    Ok(match p27 {
        Some(rep) => even && rep == P27Rep { c: four.a / 2, d: four.b / 2 },
        None => !even,
    })
}

/// p = π·π̄ with π primary. Of the two primary conjugates the one with
/// negative ω-coordinate is returned first.
pub fn split_rational_prime(p: u64) -> Result<(EisensteinInt, EisensteinInt)> {
    let rep = solve_norm_form(p)?;
    let (_, pi0) = rep.as_eisenstein().primary_associate()?;
    let pi1 = pi0.conj()?;
    // b = 0 would make p a square, so the two b-coordinates are ±b ≠ 0
    let (pi, pi_bar) = if (pi0.b, -pi0.a) <= (pi1.b, -pi1.a) { (pi0, pi1) } else { (pi1, pi0) };
    debug_assert_eq!(pi.checked_mul(pi_bar)?, EisensteinInt::from_int(p as i64));
    Ok((pi, pi_bar))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nf(a: i64, b: i64) -> NormFormRep {
        NormFormRep { a, b }
    }

    #[test]
    fn integer_square_roots() {
        assert_eq!(isqrt(0).unwrap(), (0, true));
        assert_eq!(isqrt(97).unwrap(), (9, false));
        assert_eq!(isqrt(244 - 27 * 9).unwrap(), (1, true));
        assert_eq!(isqrt(-1), Err(Error::Negative(-1)));
        assert!(!isqrt(i128::MAX).unwrap().1);
    }

    #[test]
    fn norm_form_examples() {
        let r61 = solve_norm_form(61).unwrap();
        assert_eq!(r61.value(), 61);
        assert!(r61.equivalent(&nf(9, 5)));
        assert_eq!(r61, nf(9, 4));
        assert_eq!(solve_norm_form(7).unwrap(), nf(3, 1));
        assert_eq!(solve_norm_form(13).unwrap(), nf(4, 1));
        assert_eq!(solve_norm_form(11), Err(Error::NotSplit { p: 11 }));
        assert_eq!(solve_norm_form(91), Err(Error::NotPrime(91)));
    }

    #[test]
    fn norm_form_via_jacobi() {
        for (p, expected) in [(7, nf(-1, -3)), (13, nf(-4, -3)), (61, nf(-4, -9))] {
            let r = solve_norm_form_via_jacobi(p).unwrap();
            assert_eq!(r, expected);
            assert_eq!(r.value(), p as i128);
            assert!(r.equivalent(&solve_norm_form(p).unwrap()));
        }
        assert!(solve_norm_form_via_jacobi(61).unwrap().equivalent(&nf(9, 5)));
    }

    #[test]
    fn orbit_has_twelve_elements_for_split_primes() {
        assert_eq!(nf(9, 5).orbit().len(), 12);
        assert_eq!(nf(9, 5).normalized(), nf(9, 4));
        // 2 is fixed by conjugation up to units
        assert_eq!(nf(2, 0).orbit().len(), 6);
        assert_eq!(nf(2, 0).normalized(), nf(0, 2));
    }

    #[test]
    fn four_p_examples() {
        assert_eq!(solve_4p(61).unwrap(), FourPRep { a: 1, b: 3 });
        assert_eq!(solve_4p(31).unwrap(), FourPRep { a: 4, b: 2 });
        assert_eq!(solve_4p(37).unwrap(), FourPRep { a: 11, b: 1 });
        assert_eq!(four_p_solutions(37).unwrap().len(), 1);
        assert_eq!(solve_4p(29), Err(Error::NotSplit { p: 29 }));
    }

    #[test]
    fn p27_examples() {
        assert_eq!(solve_p_27(29), Err(Error::NotSplit { p: 29 }));
        assert_eq!(solve_p_27(31).unwrap(), Some(P27Rep { c: 2, d: 1 }));
        assert_eq!(solve_p_27(43).unwrap(), Some(P27Rep { c: 4, d: 1 }));
        assert_eq!(solve_p_27(61).unwrap(), None);
        for p in [7, 13, 19] {
            assert_eq!(solve_p_27(p).unwrap(), None);
        }
    }

    #[test]
    fn parity_links() {
        for p in [61, 31, 37, 43, 7, 13] {
            assert!(parity_link_check(p).unwrap(), "p = {p}");
        }
        assert!(parity_link_check(11).is_err());
    }

    #[test]
    fn splitting() {
        assert_eq!(split_rational_prime(13).unwrap(), (EisensteinInt::new(-4, -3), EisensteinInt::new(-1, 3)));
        assert_eq!(split_rational_prime(61).unwrap().0, EisensteinInt::new(-4, -9));
        assert_eq!(split_rational_prime(7).unwrap().0, EisensteinInt::new(-1, -3));
        assert_eq!(split_rational_prime(3), Err(Error::NotSplit { p: 3 }));
    }

    #[test]
    fn range_properties() {
        for p in arith::primes_up_to(20_000).into_iter().filter(|p| p % 3 == 1) {
            let r = solve_norm_form(p).unwrap();
            assert_eq!(r.value(), p as i128);
            assert!(r.a > r.b && r.b > 0);
            let f = solve_4p(p).unwrap();
            assert_eq!(f.value(), 4 * p as i128);
            assert_eq!((f.a as i128 * f.a as i128 - 4 * p as i128).rem_euclid(27), 0);
            assert_ne!(f.a % 3, 0);
            let (pi, pi_bar) = split_rational_prime(p).unwrap();
            assert!(pi.is_primary() && pi_bar.is_primary());
            assert_eq!(pi * pi_bar, EisensteinInt::from_int(p as i64));
        }
    }
}
