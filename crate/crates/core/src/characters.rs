//! Multiplicative characters of F_p^×, Gauss sums and Jacobi sums.
//!
//! Every character mod p is a power of one generator: with g the least
//! primitive root and `dlog` the discrete-log table base g, the character of
//! index k sends g to ζ_{p−1}^k. Characters of the same prime share one table.
//!
//! Conventions: χ(0) = 0 for every nontrivial χ and ε(0) = 1, so ε is 1 on
//! all of F_p. Gauss sums are evaluated in floating point and every identity
//! about them is checked to a tolerance; Jacobi sums of cubic characters are
//! computed exactly in Z[ω].

use std::f64::consts::PI;
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_complex::Complex64;

use crate::arith;
use crate::eisenstein::EisensteinInt;
use crate::error::{Error, Result};
use crate::unity::{eisenstein_to_complex, CubicValue};

/// Largest prime for which a discrete-log table is built.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Relative tolerance for complex identities.
pub const REL_TOL: f64 = 1e-6;

/// Tolerance for |g|² = p, scaled by p.
pub const SQ_MAG_TOL: f64 = 1e-8;

/// Discrete logarithms base the least primitive root of p.
pub struct DlogTable {
    p: u64,
    generator: u64,
    dlog: Vec<u32>,
    roots_p: OnceLock<Vec<Complex64>>,
    roots_group: OnceLock<Vec<Complex64>>,
}

impl fmt::Debug for DlogTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DlogTable")
            .field("p", &self.p)
            .field("generator", &self.generator)
            .finish_non_exhaustive()
    }
}

fn unit_roots(n: u64) -> Vec<Complex64> {
    (0..n)
        .map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / n as f64))
        .collect()
}

impl DlogTable {
    pub fn new(p: u64) -> Result<Arc<Self>> {
        if p > TABLE_LIMIT {
            return Err(Error::TooLarge { p, limit: TABLE_LIMIT });
        }
        arith::require_prime(p)?;
        let generator = arith::least_primitive_root(p);
        let mut dlog = vec![0u32; p as usize];
        let mut x = 1u64;
        for e in 0..p - 1 {
            dlog[x as usize] = e as u32;
            x = x * generator % p;
        }
        Ok(Arc::new(Self {
            p,
            generator,
            dlog,
            roots_p: OnceLock::new(),
            roots_group: OnceLock::new(),
        }))
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn generator(&self) -> u64 {
        self.generator
    }

    /// log_g(t) for t ≢ 0 (mod p).
    pub fn log(&self, t: i64) -> Option<u64> {
        let t = t.rem_euclid(self.p as i64) as usize;
        (t != 0).then(|| self.dlog[t] as u64)
    }

    /// The character of exact order `order`, sending g to ζ_order.
    pub fn character(self: &Arc<Self>, order: u64) -> Result<Character> {
        if order == 0 || (self.p - 1) % order != 0 {
            return Err(Error::OrderDoesNotDivide { p: self.p, order });
        }
        Ok(Character {
            table: Arc::clone(self),
            index: ((self.p - 1) / order) % (self.p - 1),
        })
    }

    /// All p − 1 characters, indexed by the exponent of χ(g) in ζ_{p−1}.
    pub fn characters(self: &Arc<Self>) -> impl Iterator<Item = Character> + '_ {
        (0..self.p - 1).map(move |index| Character {
            table: Arc::clone(self),
            index,
        })
    }

    fn roots_p(&self) -> &[Complex64] {
        self.roots_p.get_or_init(|| unit_roots(self.p))
    }

    fn roots_group(&self) -> &[Complex64] {
        self.roots_group.get_or_init(|| unit_roots(self.p - 1))
    }
}

/// A multiplicative character χ: F_p^× → C^×, extended by χ(0) = 0 for
/// χ ≠ ε and ε(0) = 1.
#[derive(Clone, Debug)]
pub struct Character {
    table: Arc<DlogTable>,
    /// χ(g) = ζ_{p−1}^index
    index: u64,
}

/// Character of exact order `order` modulo the prime `p`.
pub fn build_character(p: u64, order: u64) -> Result<Character> {
    DlogTable::new(p)?.character(order)
}

impl Character {
    pub fn p(&self) -> u64 {
        self.table.p
    }

    pub fn generator(&self) -> u64 {
        self.table.generator
    }

    pub fn table(&self) -> &Arc<DlogTable> {
        &self.table
    }

    pub fn order(&self) -> u64 {
        let n = self.p() - 1;
        n / arith::gcd_u64(self.index, n)
    }

    pub fn is_trivial(&self) -> bool {
        self.index == 0
    }

    /// j with χ(t) = ζ_order^j, or `None` when p | t.
    pub fn root_exponent(&self, t: i64) -> Option<u64> {
        let n = self.p() - 1;
        let step = n / self.order();
        self.table
            .log(t)
            .map(|l| ((l as u128 * self.index as u128) % n as u128) as u64 / step)
    }

    pub fn eval(&self, t: i64) -> Complex64 {
        let n = self.p() - 1;
        match self.table.log(t) {
            None if self.is_trivial() => Complex64::new(1.0, 0.0),
            None => Complex64::new(0.0, 0.0),
            Some(l) => {
                let e = ((l as u128 * self.index as u128) % n as u128) as usize;
                self.table.roots_group()[e]
            }
        }
    }

    /// Exact value of a cubic character.
    pub fn eval_cubic(&self, t: i64) -> Result<CubicValue> {
        if self.order() != 3 {
            return Err(Error::NotCubic(self.order()));
        }
        Ok(self.cubic_unchecked(t))
    }

    fn cubic_unchecked(&self, t: i64) -> CubicValue {
        match self.root_exponent(t) {
            None => CubicValue::Zero,
            Some(j) => CubicValue::omega_power(j),
        }
    }

    fn same_field(&self, other: &Character) -> Result<()> {
        if self.p() != other.p() {
            return Err(Error::MismatchedPrime(self.p(), other.p()));
        }
        Ok(())
    }

    /// The pointwise product χλ.
    pub fn product(&self, other: &Character) -> Result<Character> {
        self.same_field(other)?;
        Ok(Character {
            table: Arc::clone(&self.table),
            index: (self.index + other.index) % (self.p() - 1),
        })
    }

    pub fn pow(&self, m: u64) -> Character {
        let n = self.p() - 1;
        Character {
            table: Arc::clone(&self.table),
            index: ((self.index as u128 * m as u128) % n as u128) as u64,
        }
    }

    /// χ̄ = χ⁻¹.
    pub fn conj(&self) -> Character {
        let n = self.p() - 1;
        Character {
            table: Arc::clone(&self.table),
            index: (n - self.index) % n,
        }
    }
}

impl PartialEq for Character {
    fn eq(&self, other: &Self) -> bool {
        self.p() == other.p() && self.index == other.index
    }
}

/// An exact value of Σ_t χ(t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExactSum {
    Integer(i64),
    Eisenstein(EisensteinInt),
    /// Coefficients of the remainder mod the order-th cyclotomic polynomial,
    /// in powers of ζ_order.
    Cyclotomic { order: u64, coeffs: Vec<i64> },
}

impl ExactSum {
    pub fn is_zero(&self) -> bool {
        match self {
            ExactSum::Integer(n) => *n == 0,
            ExactSum::Eisenstein(x) => x.is_zero(),
            ExactSum::Cyclotomic { coeffs, .. } => coeffs.iter().all(|&c| c == 0),
        }
    }
}

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
pub fn cyclotomic_polynomial(n: u64) -> Vec<i64> {
    // Φ_n = Π_{d | n} (x^d − 1)^{μ(n/d)}
    let n = n as usize;
    let mut num = vec![1i64];
    let mut den = vec![1i64];
    for d in (1..=n).filter(|d| n % d == 0) {
        match mobius((n / d) as u64) {
            1 => num = mul_xd_minus_one(&num, d),
            -1 => den = mul_xd_minus_one(&den, d),
            _ => {}
        }
    }
    div_exact(&num, &den)
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            n /= d;
            if n % d == 0 {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn mul_xd_minus_one(poly: &[i64], d: usize) -> Vec<i64> {
    let mut out = vec![0i64; poly.len() + d];
    for (i, &c) in poly.iter().enumerate() {
        out[i + d] += c;
        out[i] -= c;
    }
    out
}

/// Exact division of integer polynomials; `den` must be monic up to sign.
fn div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let lead = den[dd];
    let mut quot = vec![0i64; num.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd] / lead;
        quot[i] = c;
        for (j, &dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&c| c == 0));
    quot
}

/// Remainder of `poly` modulo a monic polynomial.
fn reduce_mod_monic(poly: &[i64], modulus: &[i64]) -> Vec<i64> {
    let deg = modulus.len() - 1;
    let mut rem = poly.to_vec();
    for i in (deg..rem.len()).rev() {
        let c = rem[i];
        if c != 0 {
            for (j, &m) in modulus.iter().enumerate() {
                rem[i - deg + j] -= c * m;
            }
        }
    }
    rem.truncate(deg);
    rem.resize(deg, 0);
    rem
}

/// Σ_{t ∈ F_p} χ(t), evaluated exactly.
///
/// The values are tallied by power of ζ_order and the resulting element of
/// Z[ζ_order] is reduced: order 2 gives an integer, order 3 an Eisenstein
/// integer, and higher orders a remainder mod the cyclotomic polynomial.
pub fn char_sum(chi: &Character) -> ExactSum {
    let p = chi.p();
    if chi.is_trivial() {
        return ExactSum::Integer(p as i64);
    }
    let order = chi.order();
    // χ(0) = 0 contributes nothing
    let mut counts = vec![0i64; order as usize];
    for t in 1..p as i64 {
        if let Some(j) = chi.root_exponent(t) {
            counts[j as usize] += 1;
        }
    }
    match order {
        2 => ExactSum::Integer(counts[0] - counts[1]),
        3 => ExactSum::Eisenstein(EisensteinInt::new(counts[0] - counts[2], counts[1] - counts[2])),
        _ if counts.iter().all(|&c| c == counts[0]) => {
            // c·(1 + ζ + … + ζ^{n−1}) = 0 for n > 1
            ExactSum::Integer(0)
        }
        _ => ExactSum::Cyclotomic {
            order,
            coeffs: reduce_mod_monic(&counts, &cyclotomic_polynomial(order)),
        },
    }
}

/// Σ_{t=0}^{p−1} ζ_p^{at}: p when p | a, otherwise 0.
pub fn zeta_geometric_sum(a: i64, p: u64) -> i64 {
    let exact = if a.rem_euclid(p as i64) == 0 { p as i64 } else { 0 };
    debug_assert!(
        p > 1 << 16
            || (zeta_geometric_sum_numeric(a, p) - Complex64::new(exact as f64, 0.0)).norm() <= REL_TOL * p as f64
    );
    exact
}

/// Floating-point evaluation of Σ_{t=0}^{p−1} ζ_p^{at}.
pub fn zeta_geometric_sum_numeric(a: i64, p: u64) -> Complex64 {
    let a = a.rem_euclid(p as i64) as u64;
    (0..p)
        .map(|t| Complex64::from_polar(1.0, 2.0 * PI * (arith::mul_mod(a, t, p)) as f64 / p as f64))
        .sum()
}

/// p⁻¹ Σ_t ζ_p^{t(x−y)}.
pub fn kronecker_delta_sum(x: i64, y: i64, p: u64) -> Complex64 {
    zeta_geometric_sum_numeric(x.wrapping_sub(y), p) / p as f64
}

/// Does p⁻¹ Σ_t ζ_p^{t(x−y)} equal δ(x, y) in F_p, within tolerance?
pub fn kronecker_delta_check(x: i64, y: i64, p: u64) -> Result<bool> {
    arith::require_prime(p)?;
    if p > TABLE_LIMIT {
        return Err(Error::TooLarge { p, limit: TABLE_LIMIT });
    }
    let delta = if (x as i128 - y as i128).rem_euclid(p as i128) == 0 { 1.0 } else { 0.0 };
    Ok((kronecker_delta_sum(x, y, p) - Complex64::new(delta, 0.0)).norm() <= REL_TOL)
}

/// g_a(χ) = Σ_t χ(t) ζ_p^{at}.
pub fn gauss_sum(chi: &Character, a: i64) -> Complex64 {
    let p = chi.p();
    let a = a.rem_euclid(p as i64) as u64;
    let roots = chi.table.roots_p();
    (0..p)
        .map(|t| chi.eval(t as i64) * roots[arith::mul_mod(a, t, p) as usize])
        .sum()
}

/// J(χ, λ) = Σ_{a+b=1} χ(a)λ(b), numerically.
pub fn jacobi_sum(chi: &Character, lambda: &Character) -> Result<Complex64> {
    chi.same_field(lambda)?;
    let p = chi.p() as i64;
    Ok((0..p).map(|a| chi.eval(a) * lambda.eval(1 - a)).sum())
}

/// J(χ, λ) for cubic characters, exactly in Z[ω].
pub fn jacobi_sum_cubic(chi: &Character, lambda: &Character) -> Result<EisensteinInt> {
    chi.same_field(lambda)?;
    for c in [chi, lambda] {
        if c.order() != 3 {
            return Err(Error::NotCubic(c.order()));
        }
    }
    if chi.product(lambda)?.is_trivial() {
        return Err(Error::TrivialComposition);
    }
    let p = chi.p() as i64;
    let mut counts = [0i64; 3];
    for a in 0..p {
        if let Some(k) = (chi.cubic_unchecked(a) * lambda.cubic_unchecked(1 - a)).exponent() {
            counts[k as usize] += 1;
        }
    }
    // n0 + n1ω + n2ω² with ω² = −1 − ω
    Ok(EisensteinInt::new(counts[0] - counts[2], counts[1] - counts[2]))
}

fn close(x: Complex64, y: Complex64) -> bool {
    (x - y).norm() <= REL_TOL * x.norm().max(y.norm()).max(1.0)
}

/// Checks J(χ, λ) = g(χ)g(λ)/g(χλ) and |J(χ, λ)| = √p, within [`REL_TOL`].
pub fn jacobi_gauss_relation_check(chi: &Character, lambda: &Character) -> Result<bool> {
    chi.same_field(lambda)?;
    if chi.is_trivial() || lambda.is_trivial() {
        return Err(Error::TrivialCharacter);
    }
    let both = chi.product(lambda)?;
    if both.is_trivial() {
        return Err(Error::TrivialComposition);
    }
    let j = jacobi_sum(chi, lambda)?;
    let ratio = gauss_sum(chi, 1) * gauss_sum(lambda, 1) / gauss_sum(&both, 1);
    let sqrt_p = (chi.p() as f64).sqrt();
    Ok(close(j, ratio) && (j.norm() - sqrt_p).abs() <= REL_TOL * sqrt_p)
}

/// Complex value of an exact cubic Jacobi sum, for comparison with
/// the Gauss-sum side.
pub fn jacobi_cubic_as_complex(j: EisensteinInt) -> Complex64 {
    eisenstein_to_complex(j)
}
