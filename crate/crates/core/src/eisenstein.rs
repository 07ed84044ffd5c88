//! Exact arithmetic in Z[ω], ω = (−1 + √−3)/2.
//!
//! Elements are stored as coordinates `a + bω` in `i64`. Every product is
//! formed in `i128` and narrowed with a range check, so results are exact or
//! an [`Error::Overflow`]; nothing wraps. Multiplication uses ω² = −1 − ω.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

/// The norm a² − ab + b² of an Eisenstein integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Norm(pub u128);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PrimeClass {
    /// p = 3, a unit times (1 − ω)².
    Ramified,
    /// p ≡ 2 (mod 3), stays prime in Z[ω].
    Inert,
    /// p ≡ 1 (mod 3), p = π·π̄.
    Split,
}

impl fmt::Display for PrimeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PrimeClass::Ramified => "ramified",
            PrimeClass::Inert => "inert",
            PrimeClass::Split => "split",
        })
    }
}

fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// (a + bω)(c + dω) over i128 coordinates.
fn mul_wide(a: i128, b: i128, c: i128, d: i128) -> Option<(i128, i128)> {
    let ac = a.checked_mul(c)?;
    let bd = b.checked_mul(d)?;
    let ad = a.checked_mul(d)?;
    let bc = b.checked_mul(c)?;
    Some((ac.checked_sub(bd)?, ad.checked_add(bc)?.checked_sub(bd)?))
}

/// n / d rounded to nearest, halves away from zero. Requires d > 0.
fn round_div(n: i128, d: i128) -> Option<i128> {
    let twice = n.checked_abs()?.checked_mul(2)?;
    let q = twice.checked_add(d)? / d.checked_mul(2)?;
    Some(if n < 0 { -q } else { q })
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);
    pub const OMEGA_SQ: Self = Self::new(-1, -1);

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn from_int(n: i64) -> Self {
        Self { a: n, b: 0 }
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_add(rhs.a).ok_or(Error::Overflow("add"))?,
            self.b.checked_add(rhs.b).ok_or(Error::Overflow("add"))?,
        ))
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_sub(rhs.a).ok_or(Error::Overflow("sub"))?,
            self.b.checked_sub(rhs.b).ok_or(Error::Overflow("sub"))?,
        ))
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_neg().ok_or(Error::Overflow("neg"))?,
            self.b.checked_neg().ok_or(Error::Overflow("neg"))?,
        ))
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let (a, b) = mul_wide(self.a.into(), self.b.into(), rhs.a.into(), rhs.b.into())
            .ok_or(Error::Overflow("mul"))?;
        Ok(Self::new(narrow(a, "mul")?, narrow(b, "mul")?))
    }

    /// a + bω² = (a − b) − bω.
    pub fn conj(self) -> Result<Self> {
        Ok(Self::new(
            self.a.checked_sub(self.b).ok_or(Error::Overflow("conj"))?,
            self.b.checked_neg().ok_or(Error::Overflow("conj"))?,
        ))
    }

    pub fn norm(self) -> Result<Norm> {
        let (a, b) = (self.a as i128, self.b as i128);
        let n = (|| a.checked_mul(a)?.checked_sub(a.checked_mul(b)?)?.checked_add(b.checked_mul(b)?))()
            .ok_or(Error::Overflow("norm"))?;
        Ok(Norm(n as u128))
    }

    /// ±1, ±ω, ±ω².
    pub const fn units() -> [Self; 6] {
        [
            Self::new(1, 0),
            Self::new(-1, 0),
            Self::new(0, 1),
            Self::new(0, -1),
            Self::new(-1, -1),
            Self::new(1, 1),
        ]
    }

    pub fn is_unit(&self) -> bool {
        Self::units().contains(self)
    }

    /// The six products u·x over the units u.
    pub fn associates(self) -> Result<Vec<Self>> {
        if self.is_zero() {
            return Err(Error::ZeroInput("associates"));
        }
        Self::units().iter().map(|&u| u.checked_mul(self)).collect()
    }

    /// x ≡ 2 (mod 3), i.e. a ≡ 2 and b ≡ 0 (mod 3).
    pub fn is_primary(&self) -> bool {
        self.a.rem_euclid(3) == 2 && self.b.rem_euclid(3) == 0
    }

    /// The unit u and the unique primary associate y = u·x.
    pub fn primary_associate(self) -> Result<(Self, Self)> {
        if self.is_zero() {
            return Err(Error::ZeroInput("primary_associate"));
        }
        // 1 − ω divides x exactly when 3 divides the norm, i.e. a + b ≡ 0 (mod 3).
        if (self.a as i128 + self.b as i128).rem_euclid(3) == 0 {
            return Err(Error::NoPrimaryAssociate(self));
        }
        for u in Self::units() {
            let y = u.checked_mul(self)?;
            if y.is_primary() {
                return Ok((u, y));
            }
        }
        unreachable!("an element coprime to 1 - ω always has a primary associate")
    }

    /// Euclidean division: self = q·divisor + r with N(r) < N(divisor).
    ///
    /// q is the exact quotient self·conj(divisor)/N(divisor) with each
    /// coordinate rounded half away from zero.
    pub fn divmod(self, divisor: Self) -> Result<(Self, Self)> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = divisor.norm()?.0 as i128;
        let (c, d) = (divisor.a as i128, divisor.b as i128);
        let (u, v) = mul_wide(self.a.into(), self.b.into(), c - d, -d).ok_or(Error::Overflow("divmod"))?;
        let qa = round_div(u, n).ok_or(Error::Overflow("divmod"))?;
        let qb = round_div(v, n).ok_or(Error::Overflow("divmod"))?;
        let (pa, pb) = mul_wide(qa, qb, c, d).ok_or(Error::Overflow("divmod"))?;
        let ra = (self.a as i128).checked_sub(pa).ok_or(Error::Overflow("divmod"))?;
        let rb = (self.b as i128).checked_sub(pb).ok_or(Error::Overflow("divmod"))?;
        Ok((
            Self::new(narrow(qa, "divmod")?, narrow(qb, "divmod")?),
            Self::new(narrow(ra, "divmod")?, narrow(rb, "divmod")?),
        ))
    }

    /// Remainder of [`divmod`](Self::divmod); the canonical residue mod `m`.
    pub fn mod_reduce(self, m: Self) -> Result<Self> {
        if m.is_zero() {
            return Err(Error::ZeroInput("mod_reduce"));
        }
        Ok(self.divmod(m)?.1)
    }

    /// Does `self` divide `other`? Zero divides only zero.
    pub fn divides(self, other: Self) -> Result<bool> {
        if self.is_zero() {
            return Ok(other.is_zero());
        }
        let n = self.norm()?.0 as i128;
        let c = self.conj()?;
        let (u, v) = mul_wide(other.a.into(), other.b.into(), c.a.into(), c.b.into())
            .ok_or(Error::Overflow("divides"))?;
        Ok(u % n == 0 && v % n == 0)
    }

    /// x ≡ y (mod m), decided by m | x − y.
    pub fn congruent(self, other: Self, m: Self) -> Result<bool> {
        m.divides(self.checked_sub(other)?)
    }

    /// Primality in Z[ω]: prime norm, or an associate of an inert rational prime.
    pub fn is_prime(self) -> bool {
        let Ok(Norm(n)) = self.norm() else { return false };
        if n > u64::MAX as u128 {
            return false;
        }
        let n = n as u64;
        if arith::is_prime(n) {
            return true;
        }
        let q = n.isqrt();
        q * q == n
            && q % 3 == 2
            && arith::is_prime(q)
            && Self::from_int(q as i64).divides(self).unwrap_or(false)
    }

    /// Canonical gcd: 1 for coprime inputs, the primary associate when the
    /// norm is prime to 3, otherwise the associate with a > 0 and least |b|.
    pub fn gcd(self, other: Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        let (mut x, mut y) = (self, other);
        while !y.is_zero() {
            let r = x.mod_reduce(y)?;
            x = y;
            y = r;
        }
        x.normalize()
    }

    /// Canonical representative of the associate class of a nonzero element.
    pub fn normalize(self) -> Result<Self> {
        if self.is_unit() {
            return Ok(Self::ONE);
        }
        match self.primary_associate() {
            Ok((_, y)) => Ok(y),
            Err(Error::NoPrimaryAssociate(_)) => self
                .associates()?
                .into_iter()
                .filter(|z| z.a > 0)
                .min_by_key(|z| (z.b.unsigned_abs(), z.a, z.b))
                .ok_or(Error::ZeroInput("normalize")),
            Err(e) => Err(e),
        }
    }
}

/// How a rational prime decomposes in Z[ω].
pub fn classify_rational_prime(p: u64) -> Result<PrimeClass> {
    if p < 2 {
        return Err(Error::NotPrime(p));
    }
    arith::require_prime(p)?;
    Ok(match p % 3 {
        0 => PrimeClass::Ramified,
        1 => PrimeClass::Split,
        _ => PrimeClass::Inert,
    })
}

impl From<i64> for EisensteinInt {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Eisenstein integer overflow")
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("Eisenstein integer overflow")
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Eisenstein integer overflow")
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("Eisenstein integer overflow")
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let omega = |f: &mut fmt::Formatter<'_>, b: i64, lead: bool| match (b, lead) {
            (1, true) => write!(f, "ω"),
            (1, false) => write!(f, "+ω"),
            (-1, _) => write!(f, "-ω"),
            (b, false) if b > 0 => write!(f, "+{b}ω"),
            (b, _) => write!(f, "{b}ω"),
        };
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, b) => omega(f, b, true),
            (a, b) => {
                write!(f, "{a}")?;
                omega(f, b, false)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {0:?} as an Eisenstein integer (expected \"a,b\" or an integer)")]
pub struct ParseEisensteinError(pub String);

impl FromStr for EisensteinInt {
    type Err = ParseEisensteinError;

    /// Accepts `"a,b"` for a + bω or a bare integer `n` for n + 0ω.
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let err = || ParseEisensteinError(s.to_owned());
        match s.split_once(',') {
            Some((a, b)) => Ok(Self::new(
                a.trim().parse().map_err(|_| err())?,
                b.trim().parse().map_err(|_| err())?,
            )),
            None => Ok(Self::from_int(s.trim().parse().map_err(|_| err())?)),
        }
    }
}
