// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Exact arithmetic in the Eisenstein integers `Z[ω]`, where `ω` is a
//! primitive cube root of unity and `ω² = −ω − 1`.
//!
//! Elements are stored in the basis `{1, ω}` as a pair of `i64`
//! coefficients. The operator impls panic on overflow; the `checked_*`
//! family reports it as [`Error::Overflow`]. Nothing ever wraps.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `a + bω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealityClass {
    Zero,
    Real,
    PurelyImaginary,
    Generic,
}

impl EisensteinInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const OMEGA: Self = Self::new(0, 1);
    pub const OMEGA2: Self = Self::new(-1, -1);

    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    pub const fn from_int(a: i64) -> Self {
        Self { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        Ok(Self {
            a: self.a.checked_add(rhs.a).ok_or(Error::Overflow("add"))?,
            b: self.b.checked_add(rhs.b).ok_or(Error::Overflow("add"))?,
        })
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        Ok(Self {
            a: self.a.checked_sub(rhs.a).ok_or(Error::Overflow("sub"))?,
            b: self.b.checked_sub(rhs.b).ok_or(Error::Overflow("sub"))?,
        })
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Self {
            a: self.a.checked_neg().ok_or(Error::Overflow("neg"))?,
            b: self.b.checked_neg().ok_or(Error::Overflow("neg"))?,
        })
    }

    /// `(a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω`.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let of = || Error::Overflow("mul");
        let ac = self.a.checked_mul(rhs.a).ok_or_else(of)?;
        let bd = self.b.checked_mul(rhs.b).ok_or_else(of)?;
        let ad = self.a.checked_mul(rhs.b).ok_or_else(of)?;
        let bc = self.b.checked_mul(rhs.a).ok_or_else(of)?;
        Ok(Self {
            a: ac.checked_sub(bd).ok_or_else(of)?,
            b: ad
                .checked_add(bc)
                .and_then(|s| s.checked_sub(bd))
                .ok_or_else(of)?,
        })
    }

    pub fn checked_scale(self, k: i64) -> Result<Self> {
        Ok(Self {
            a: self.a.checked_mul(k).ok_or(Error::Overflow("scale"))?,
            b: self.b.checked_mul(k).ok_or(Error::Overflow("scale"))?,
        })
    }

    /// Complex conjugate: `a + bω² = (a − b) − bω`.
    pub fn conj(self) -> Self {
        Self {
            a: self.a.checked_sub(self.b).expect("overflow in conj"),
            b: self.b.checked_neg().expect("overflow in conj"),
        }
    }

    /// `x · conj(x) = a² − ab + b²`, always a nonnegative integer.
    pub fn checked_norm(self) -> Result<i64> {
        let of = || Error::Overflow("norm");
        let aa = self.a.checked_mul(self.a).ok_or_else(of)?;
        let ab = self.a.checked_mul(self.b).ok_or_else(of)?;
        let bb = self.b.checked_mul(self.b).ok_or_else(of)?;
        aa.checked_sub(ab).and_then(|s| s.checked_add(bb)).ok_or_else(of)
    }

    pub fn norm(self) -> i64 {
        self.checked_norm().expect("overflow in norm")
    }

    /// Divides by an integer, failing unless both components are multiples of `d`.
    pub fn div_int_exact(self, d: i64) -> Result<Self> {
        if d == 0 {
            return Err(Error::InexactDivision(format!("{self} / 0")));
        }
        if self.a % d != 0 || self.b % d != 0 {
            return Err(Error::InexactDivision(format!("{self} / {d}")));
        }
        Ok(Self::new(self.a / d, self.b / d))
    }

    /// Exact quotient `self / rhs` in `Z[ω]`, computed as
    /// `self · conj(rhs) / N(rhs)`.
    pub fn div_exact(self, rhs: Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::InexactDivision(format!("{self} / 0")));
        }
        let num = self.checked_mul(rhs.conj())?;
        num.div_int_exact(rhs.checked_norm()?)
            .map_err(|_| Error::InexactDivision(format!("{self} / {rhs}")))
    }

    pub fn reality_class(self) -> RealityClass {
        if self.is_zero() {
            RealityClass::Zero
        } else if self.b == 0 {
            RealityClass::Real
        } else if 2 * self.a as i128 == self.b as i128 {
            RealityClass::PurelyImaginary
        } else {
            RealityClass::Generic
        }
    }

    pub fn is_real(self) -> bool {
        self.b == 0
    }

    pub fn is_unit(self) -> bool {
        self.checked_norm() == Ok(1)
    }

    /// `ω^(j mod 3)`.
    pub fn unit_root(j: i64) -> Self {
        match j.rem_euclid(3) {
            0 => Self::ONE,
            1 => Self::OMEGA,
            _ => Self::OMEGA2,
        }
    }

    /// Approximate complex value `(a − b/2, b·√3/2)`. Diagnostics only;
    /// never feed this back into an exact decision.
    pub fn embed_complex(self) -> (f64, f64) {
        let (a, b) = (self.a as f64, self.b as f64);
        (a - b / 2.0, b * 3f64.sqrt() / 2.0)
    }

    pub fn checked_sum<I: IntoIterator<Item = Self>>(iter: I) -> Result<Self> {
        iter.into_iter().try_fold(Self::ZERO, Self::checked_add)
    }

    pub fn checked_product<I: IntoIterator<Item = Self>>(iter: I) -> Result<Self> {
        iter.into_iter().try_fold(Self::ONE, Self::checked_mul)
    }
}

impl From<i64> for EisensteinInt {
    fn from(a: i64) -> Self {
        Self::from_int(a)
    }
}

impl Add for EisensteinInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("Eisenstein overflow")
    }
}

impl AddAssign for EisensteinInt {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Sub for EisensteinInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs).expect("Eisenstein overflow")
    }
}

impl Mul for EisensteinInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs).expect("Eisenstein overflow")
    }
}

impl Neg for EisensteinInt {
    type Output = Self;
    fn neg(self) -> Self {
        self.checked_neg().expect("Eisenstein overflow")
    }
}

impl fmt::Display for EisensteinInt {
    /// Renders as `a+bw` / `a-bw`, e.g. `-1-1w`, `2+1w`, `0+0w`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}{}w", self.a, self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

impl FromStr for EisensteinInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected `a+bw`, got {s:?}"));
        let body = s.trim().strip_suffix('w').ok_or_else(bad)?;
        // split at the sign that starts the ω coefficient (never at index 0)
        let split = body
            .char_indices()
            .skip(1)
            .filter(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .next()
            .ok_or_else(bad)?;
        let (a, b) = body.split_at(split);
        let b = b.strip_prefix('+').unwrap_or(b);
        if b.is_empty() || b.starts_with('+') {
            return Err(bad());
        }
        Ok(Self::new(
            a.parse().map_err(|_| bad())?,
            b.parse().map_err(|_| bad())?,
        ))
    }
}
