//! Exact dyadic rationals: numerator over a power of two.
//!
//! Every addition and comparison is exact; nothing here ever rounds. This is
//! the carrier for Kraft sums of the form Σ 2^{−ℓ}.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

/// A nonnegative rational `numerator / 2^exponent` in canonical form: the
/// numerator is odd, zero, or the exponent is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    num: BigUint,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: BigUint, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        d.canonicalize();
        d
    }

    pub fn zero() -> Self {
        Dyadic { num: BigUint::ZERO, exp: 0 }
    }

    pub fn one() -> Self {
        Dyadic { num: BigUint::one(), exp: 0 }
    }

    /// 2^{−exp}.
    pub fn pow2_reciprocal(exp: u32) -> Self {
        Dyadic { num: BigUint::one(), exp }
    }

    pub fn numerator(&self) -> &BigUint {
        &self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.exp = 0;
            return;
        }
        let trailing = self.num.trailing_zeros().unwrap_or(0);
        let shift = trailing.min(u64::from(self.exp)) as u32;
        if shift > 0 {
            self.num >>= shift;
            self.exp -= shift;
        }
    }

    /// Exact halving.
    pub fn half(&self) -> Self {
        if self.num.is_zero() {
            return Self::zero();
        }
        Dyadic { num: self.num.clone(), exp: self.exp + 1 }
    }

    /// Exact subtraction; `None` when the result would be negative.
    pub fn checked_sub(&self, other: &Dyadic) -> Option<Dyadic> {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        if a < b {
            return None;
        }
        Some(Dyadic::new(a - b, exp))
    }

    /// Exact conversion where the value fits; large values saturate like
    /// `BigUint::to_f64`.
    pub fn to_f64(&self) -> f64 {
        self.num.to_f64().unwrap_or(f64::INFINITY) * (-(f64::from(self.exp))).exp2()
    }

    /// Truncated decimal expansion with exactly `digits` fractional digits.
    pub fn to_decimal_string(&self, digits: usize) -> String {
        let int_part = &self.num >> u64::from(self.exp);
        if digits == 0 {
            return int_part.to_string();
        }
        let frac = &self.num - (&int_part << u64::from(self.exp));
        let scaled = (frac * BigUint::from(10u8).pow(digits as u32)) >> u64::from(self.exp);
        format!("{int_part}.{scaled:0>digits$}")
    }
}

impl Add<&Dyadic> for &Dyadic {
    type Output = Dyadic;

    fn add(self, other: &Dyadic) -> Dyadic {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        Dyadic::new(a + b, exp)
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let exp = self.exp.max(other.exp);
        let a = &self.num << (exp - self.exp);
        let b = &other.num << (exp - other.exp);
        a.cmp(&b)
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/2^{}", self.num, self.exp)
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Dyadic({self})")
    }
}
