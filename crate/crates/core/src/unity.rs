//! Values in {0, 1, ω, ω²}: cubic characters and cubic residue symbols.

use std::fmt;
use std::ops::Mul;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::eisenstein::EisensteinInt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Repr", into = "Repr")]
pub enum CubicValue {
    Zero,
    /// ω^k with k ∈ {0, 1, 2}.
    OmegaPower(u8),
}

pub const ONE: CubicValue = CubicValue::OmegaPower(0);
pub const OMEGA: CubicValue = CubicValue::OmegaPower(1);
pub const OMEGA_SQ: CubicValue = CubicValue::OmegaPower(2);

impl CubicValue {
    pub fn omega_power(k: u64) -> Self {
        CubicValue::OmegaPower((k % 3) as u8)
    }

    pub fn is_one(&self) -> bool {
        *self == ONE
    }

    pub fn exponent(&self) -> Option<u8> {
        match self {
            CubicValue::Zero => None,
            CubicValue::OmegaPower(k) => Some(*k),
        }
    }

    /// Complex conjugate; ω ↔ ω².
    pub fn conj(self) -> Self {
        match self {
            CubicValue::Zero => CubicValue::Zero,
            CubicValue::OmegaPower(k) => CubicValue::OmegaPower((3 - k) % 3),
        }
    }

    pub fn to_eisenstein(self) -> EisensteinInt {
        match self {
            CubicValue::Zero => EisensteinInt::ZERO,
            CubicValue::OmegaPower(0) => EisensteinInt::ONE,
            CubicValue::OmegaPower(1) => EisensteinInt::OMEGA,
            CubicValue::OmegaPower(_) => EisensteinInt::OMEGA_SQ,
        }
    }

    pub fn to_complex(self) -> Complex64 {
        eisenstein_to_complex(self.to_eisenstein())
    }
}

/// a + bω as a complex number.
pub fn eisenstein_to_complex(x: EisensteinInt) -> Complex64 {
    let (a, b) = (x.a as f64, x.b as f64);
    Complex64::new(a - b / 2.0, b * 3f64.sqrt() / 2.0)
}

impl Mul for CubicValue {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        match (self, rhs) {
            (CubicValue::OmegaPower(j), CubicValue::OmegaPower(k)) => CubicValue::OmegaPower((j + k) % 3),
            _ => CubicValue::Zero,
        }
    }
}

impl fmt::Display for CubicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CubicValue::Zero => "0",
            CubicValue::OmegaPower(0) => "1",
            CubicValue::OmegaPower(1) => "ω",
            CubicValue::OmegaPower(_) => "ω^2",
        })
    }
}

/// JSON form: `{"omega_power": k}`, with `null` for zero.
#[derive(Serialize, Deserialize)]
struct Repr {
    omega_power: Option<u8>,
}

impl From<Repr> for CubicValue {
    fn from(r: Repr) -> Self {
        match r.omega_power {
            None => CubicValue::Zero,
            Some(k) => CubicValue::OmegaPower(k % 3),
        }
    }
}

impl From<CubicValue> for Repr {
    fn from(v: CubicValue) -> Self {
        Repr { omega_power: v.exponent() }
    }
}
