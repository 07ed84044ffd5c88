//! Residue symbols: the cubic residue character (α/π)₃ by the Euler
//! criterion in Z[ω]/π, the Legendre symbol, and the quadratic character of ±2.
//!
//! Residues are never canonicalized; two residues are equal when π divides
//! their difference.

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::unity::CubicValue;

/// Largest modulus norm accepted by [`cubic_symbol`].
pub const NORM_LIMIT: u128 = 1 << 48;

/// Value of (α/π)₃.
pub type CubicSymbolValue = CubicValue;

/// α^e mod π by square-and-multiply, reducing after every product.
pub fn eis_pow_mod(alpha: EisensteinInt, mut e: u128, pi: EisensteinInt) -> Result<EisensteinInt> {
    if pi.is_zero() {
        return Err(Error::ZeroInput("eis_pow_mod"));
    }
    let mut base = alpha.mod_reduce(pi)?;
    let mut acc = EisensteinInt::ONE.mod_reduce(pi)?;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.checked_mul(base)?.mod_reduce(pi)?;
        }
        base = base.checked_mul(base)?.mod_reduce(pi)?;
        e >>= 1;
    }
    Ok(acc)
}

fn require_symbol_modulus(pi: EisensteinInt) -> Result<u128> {
    if pi.is_zero() {
        return Err(Error::ZeroInput("cubic_symbol"));
    }
    let n = pi.norm()?.0;
    if n == 3 {
        return Err(Error::NormThree(pi));
    }
    if n > NORM_LIMIT {
        return Err(Error::NormTooLarge(n));
    }
    if !pi.is_prime() {
        return Err(Error::NotEisensteinPrime(pi));
    }
    Ok(n)
}

/// The cubic residue character (α/π)₃ for a prime π of norm ≠ 3.
///
/// Zero when π | α; otherwise the k with α^((Nπ−1)/3) ≡ ω^k (mod π).
pub fn cubic_symbol(alpha: EisensteinInt, pi: EisensteinInt) -> Result<CubicSymbolValue> {
    let n = require_symbol_modulus(pi)?;
    if pi.divides(alpha)? {
        return Ok(CubicValue::Zero);
    }
    let r = eis_pow_mod(alpha, (n - 1) / 3, pi)?;
    let roots = [EisensteinInt::ONE, EisensteinInt::OMEGA, EisensteinInt::OMEGA_SQ];
    for (k, root) in roots.into_iter().enumerate() {
        if r.congruent(root, pi)? {
            return Ok(CubicValue::omega_power(k as u64));
        }
    }
    Err(Error::NotEisensteinPrime(pi))
}

/// (αβ/π)₃ = (α/π)₃(β/π)₃.
pub fn cubic_symbol_multiplicativity_check(alpha: EisensteinInt, beta: EisensteinInt, pi: EisensteinInt) -> Result<bool> {
    let lhs = cubic_symbol(alpha.checked_mul(beta)?, pi)?;
    Ok(lhs == cubic_symbol(alpha, pi)? * cubic_symbol(beta, pi)?)
}

/// (π₁/π₂)₃ = (π₂/π₁)₃ for primary primes of distinct norms ≠ 3.
pub fn cubic_reciprocity_check(pi1: EisensteinInt, pi2: EisensteinInt) -> Result<bool> {
    let mut norms = [0u128; 2];
    for (slot, pi) in norms.iter_mut().zip([pi1, pi2]) {
        *slot = require_symbol_modulus(pi)?;
        if !pi.is_primary() {
            return Err(Error::NotPrimary(pi));
        }
    }
    if norms[0] == norms[1] {
        return Err(Error::EqualNorms(norms[0]));
    }
    Ok(cubic_symbol(pi1, pi2)? == cubic_symbol(pi2, pi1)?)
}

/// (a/p) by the Euler criterion.
pub fn legendre(a: i64, p: u64) -> Result<i8> {
    arith::require_odd_prime(p)?;
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return Ok(0);
    }
    Ok(if arith::pow_mod(a, (p - 1) / 2, p) == 1 { 1 } else { -1 })
}

/// (2/p) = (−1)^((p²−1)/8), read off p mod 8.
pub fn quad_char_of_2(p: u64) -> Result<i8> {
    arith::require_odd_prime(p)?;
    Ok(match p % 8 {
        1 | 7 => 1,
        _ => -1,
    })
}

/// Residue status of +2 and −2 for one class of odd primes mod 8.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuadCase {
    pub residue_class: u8,
    pub plus2: i8,
    pub minus2: i8,
}

impl QuadCase {
    pub fn label(&self) -> &'static str {
        match (self.plus2, self.minus2) {
            (1, 1) => "both residues",
            (-1, 1) => "+2 nonresidue, -2 residue",
            (-1, -1) => "both nonresidues",
            _ => "+2 residue, -2 nonresidue",
        }
    }
}

/// The four cases for ±2 by p mod 8.
pub fn gauss_four_case(p: u64) -> Result<QuadCase> {
    arith::require_odd_prime(p)?;
    let residue_class = (p % 8) as u8;
    let (plus2, minus2) = match residue_class {
        3 => (-1, 1),
        5 => (-1, -1),
        7 => (1, -1),
        _ => (1, 1),
    };
    Ok(QuadCase { residue_class, plus2, minus2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::unity::{OMEGA_SQ, ONE};
    use proptest::prelude::*;

    const fn e(a: i64, b: i64) -> EisensteinInt {
        EisensteinInt::new(a, b)
    }

    #[test]
    fn powers() {
        let pi = e(-4, -3);
        let alpha = e(5, 1);
        assert!(eis_pow_mod(alpha, 0, pi).unwrap().congruent(EisensteinInt::ONE, pi).unwrap());
        assert_eq!(eis_pow_mod(alpha, 1, pi).unwrap(), alpha.mod_reduce(pi).unwrap());
        assert!(eis_pow_mod(alpha, 12, pi).unwrap().congruent(EisensteinInt::ONE, pi).unwrap());
        assert!(eis_pow_mod(alpha, 3, EisensteinInt::ZERO).is_err());
    }

    #[test]
    fn worked_example_symbol() {
        assert_eq!(cubic_symbol(e(3, -1), e(5, 0)).unwrap(), OMEGA_SQ);
    }

    #[test]
    fn symbol_edge_cases() {
        assert_eq!(cubic_symbol(e(10, 0), e(5, 0)).unwrap(), CubicValue::Zero);
        assert_eq!(cubic_symbol(e(0, 0), e(-4, -3)).unwrap(), CubicValue::Zero);
        assert_eq!(cubic_symbol(e(2, 0), e(11, 0)).unwrap(), ONE);
        assert_eq!(cubic_symbol(e(2, 0), e(1, -1)), Err(Error::NormThree(e(1, -1))));
        assert_eq!(cubic_symbol(e(2, 0), e(7, 0)), Err(Error::NotEisensteinPrime(e(7, 0))));
        assert!(cubic_symbol(e(2, 0), EisensteinInt::ZERO).is_err());
        // inert 2^24 + 43 ≡ 2 (mod 3) is prime, but its norm exceeds the cap
        let q = (1i64 << 24) + 43;
        assert!(arith::is_prime(q as u64));
        assert_eq!(cubic_symbol(e(2, 0), e(q, 0)), Err(Error::NormTooLarge((q as u128).pow(2))));
    }

    #[test]
    fn multiplicativity_examples() {
        let pi = e(-4, -3);
        assert!(cubic_symbol_multiplicativity_check(e(2, 0), e(5, 1), pi).unwrap());
        assert!(cubic_symbol_multiplicativity_check(e(2, 7), EisensteinInt::ONE, pi).unwrap());
        assert!(cubic_symbol_multiplicativity_check(pi, e(5, 1), pi).unwrap());
    }

    #[test]
    fn reciprocity_examples() {
        assert!(cubic_reciprocity_check(e(2, 0), e(-4, -3)).unwrap());
        // −1 − 3ω has prime norm 7 and is primary, so it is accepted
        assert!(cubic_reciprocity_check(e(2, 0), e(-1, -3)).unwrap());
        assert_eq!(cubic_reciprocity_check(e(2, 0), e(-7, 0)), Err(Error::NotEisensteinPrime(e(-7, 0))));
        assert_eq!(cubic_reciprocity_check(e(2, 0), e(3, -1)), Err(Error::NotPrimary(e(3, -1))));
        assert_eq!(cubic_reciprocity_check(e(-4, -3), e(-1, 3)), Err(Error::EqualNorms(13)));
        assert_eq!(cubic_reciprocity_check(e(2, 0), e(1, -1)), Err(Error::NormThree(e(1, -1))));
    }

    #[test]
    fn legendre_symbols() {
        assert_eq!(legendre(2, 11).unwrap(), -1);
        assert_eq!(legendre(4, 13).unwrap(), 1);
        assert_eq!(legendre(2, 7).unwrap(), 1);
        assert_eq!(legendre(22, 11).unwrap(), 0);
        assert_eq!(legendre(-2, 11).unwrap(), 1);
        assert_eq!(legendre(2, 2), Err(Error::NotOddPrime(2)));
        assert_eq!(legendre(2, 15), Err(Error::NotOddPrime(15)));
    }

    #[test]
    fn quadratic_character_of_two() {
        assert_eq!(quad_char_of_2(11).unwrap(), -1);
        assert_eq!(quad_char_of_2(7).unwrap(), 1);
        assert_eq!(quad_char_of_2(17).unwrap(), 1);
        assert_eq!(gauss_four_case(11).unwrap(), QuadCase { residue_class: 3, plus2: -1, minus2: 1 });
        assert_eq!(gauss_four_case(13).unwrap(), QuadCase { residue_class: 5, plus2: -1, minus2: -1 });
        assert_eq!(gauss_four_case(17).unwrap(), QuadCase { residue_class: 1, plus2: 1, minus2: 1 });
        assert_eq!(gauss_four_case(7).unwrap(), QuadCase { residue_class: 7, plus2: 1, minus2: -1 });
        assert!(gauss_four_case(2).is_err());
        assert!(gauss_four_case(21).is_err());
    }

    #[test]
    fn legendre_matches_square_search() {
        for p in arith::primes_up_to(1000).into_iter().skip(1) {
            let mut square = vec![false; p as usize];
            for x in 0..p {
                square[(x * x % p) as usize] = true;
            }
            for a in 0..p {
                let expected = if a == 0 { 0 } else if square[a as usize] { 1 } else { -1 };
                assert_eq!(legendre(a as i64, p).unwrap(), expected, "({a}/{p})");
            }
        }
    }

    /// Primary primes with norm at most `bound`, excluding norm 3.
    fn primary_primes(bound: i64) -> Vec<EisensteinInt> {
        let r = (bound as f64).sqrt() as i64 * 2 + 2;
        let mut out = Vec::new();
        for a in -r..=r {
            for b in -r..=r {
                let x = e(a, b);
                let n = x.norm().unwrap().0 as i64;
                if n <= bound && n != 3 && x.is_primary() && x.is_prime() {
                    out.push(x);
                }
            }
        }
        out
    }

    #[test]
    fn euler_criterion_lands_on_roots_and_counts_cubes() {
        for pi in primary_primes(500) {
            let n = pi.norm().unwrap().0 as i64;
            let mut counts = [0usize; 3];
            let mut cubes = std::collections::HashSet::new();
            let residues: Vec<EisensteinInt> = if pi.b == 0 {
                let q = pi.a.abs();
                (0..q).flat_map(|a| (0..q).map(move |b| e(a, b))).collect()
            } else {
                (0..n).map(|a| e(a, 0)).collect()
            };
            assert_eq!(residues.len() as i64, n);
            for &x in &residues {
                cubes.insert((x * x * x).mod_reduce(pi).unwrap());
            }
            for &x in &residues {
                let v = cubic_symbol(x, pi).unwrap();
                let is_cube = cubes.iter().any(|c| c.congruent(x, pi).unwrap());
                match v {
                    CubicValue::Zero => assert!(pi.divides(x).unwrap()),
                    CubicValue::OmegaPower(k) => {
                        counts[k as usize] += 1;
                        assert_eq!(k == 0, is_cube, "({x}/{pi})");
                    }
                }
            }
            let third = (n as usize - 1) / 3;
            assert_eq!(counts, [third; 3], "π = {pi}");
        }
    }

    proptest! {
        #[test]
        fn multiplicativity(a in -200i64..200, b in -200i64..200, c in -200i64..200, d in -200i64..200) {
            for pi in [e(-4, -3), e(2, 0), e(-1, -3), e(5, 0), e(-4, -9)] {
                prop_assert!(cubic_symbol_multiplicativity_check(e(a, b), e(c, d), pi).unwrap());
            }
        }
    }
}
