//! Truncated formal power series over exact integers.
//!
//! A [`PowerSeries`] of order `T` stores `c_0..=c_T`; every operation
//! discards terms beyond `x^T`. Binary operations require both operands to
//! carry the same order.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("truncation orders differ: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("reversion needs c_0 = 0 and c_1 = 1")]
    NotNormalized,
    #[error("reciprocal needs constant term 1 or -1")]
    NotInvertible,
    #[error("composition needs the inner series to have zero constant term")]
    InnerConstant,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// Builds a series of the given order, padding with zeros or truncating.
    pub fn new<I, C>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = C>,
        C: Into<BigInt>,
    {
        let mut coeffs: Vec<BigInt> = coeffs.into_iter().take(order + 1).map(Into::into).collect();
        coeffs.resize(order + 1, BigInt::zero());
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// `coeff · x^power`, truncated.
    pub fn monomial(coeff: BigInt, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coeff;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `[x^i]`, zero beyond the order.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    fn check_order(&self, other: &Self) -> Result<(), SeriesError> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(SeriesError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(PowerSeries { coeffs })
    }

    pub fn scale(&self, factor: &BigInt) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self, SeriesError> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![BigInt::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Ok(PowerSeries { coeffs: out })
    }

    /// `self^e` truncated.
    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// `x · self`. The order grows by one, so no information is lost.
    pub fn mul_x(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(BigInt::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        PowerSeries { coeffs }
    }

    /// `self / x` for a series with zero constant term; the order drops by
    /// one. Returns `None` if `c_0 ≠ 0` or the order is already zero.
    pub fn div_x(&self) -> Option<Self> {
        if !self.coeffs[0].is_zero() || self.order() == 0 {
            return None;
        }
        Some(PowerSeries {
            coeffs: self.coeffs[1..].to_vec(),
        })
    }

    /// Multiplicative inverse of a series with constant term ±1.
    pub fn recip(&self) -> Result<Self, SeriesError> {
        let c0 = &self.coeffs[0];
        if !(c0.is_one() || (-c0).is_one()) {
            return Err(SeriesError::NotInvertible);
        }
        let order = self.order();
        let mut inv: Vec<BigInt> = Vec::with_capacity(order + 1);
        inv.push(c0.clone());
        for n in 1..=order {
            let s: BigInt = (1..=n).map(|i| &self.coeffs[i] * &inv[n - i]).sum();
            // c0 = ±1 so dividing by it is multiplying by it
            inv.push(-(s * c0));
        }
        Ok(PowerSeries { coeffs: inv })
    }

    /// `self(inner(x))`, requiring `inner` to have zero constant term.
    pub fn compose(&self, inner: &Self) -> Result<Self, SeriesError> {
        self.check_order(inner)?;
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstant);
        }
        let order = self.order();
        let mut acc = Self::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner)?;
            acc.coeffs[0] += c;
        }
        Ok(acc)
    }

    /// Compositional inverse of `x + c_2 x^2 + …`.
    ///
    /// Coefficients are solved one at a time: `[x^n] f(g) = g_n + Σ_{k≥2}
    /// c_k [x^n] g^k`, and `[x^n] g^k` for `k ≥ 2` only involves
    /// `g_1..g_{n-1}`. The power table is filled diagonally so the whole
    /// solve is `O(T^3)`.
    pub fn reversion(&self) -> Result<Self, SeriesError> {
        let order = self.order();
        if !self.coeffs[0].is_zero() || (order >= 1 && !self.coeffs[1].is_one()) {
            return Err(SeriesError::NotNormalized);
        }
        // powers[k][m] = [x^m] g^k
        let mut powers = vec![vec![BigInt::zero(); order + 1]; order + 1];
        let mut g = vec![BigInt::zero(); order + 1];
        for n in 1..=order {
            for k in 2..=n {
                let mut v = BigInt::zero();
                for m in 1..=n + 1 - k {
                    v += &g[m] * &powers[k - 1][n - m];
                }
                powers[k][n] = v;
            }
            let mut gn = if n == 1 { BigInt::one() } else { BigInt::zero() };
            for k in 2..=n {
                gn -= &self.coeffs[k] * &powers[k][n];
            }
            powers[1][n] = gn.clone();
            g[n] = gn;
        }
        Ok(PowerSeries { coeffs: g })
    }
}

impl fmt::Display for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(c: &[i64], order: usize) -> PowerSeries {
        PowerSeries::new(c.iter().copied(), order)
    }

    #[test]
    fn mul_examples() {
        assert_eq!(s(&[1, 1], 2).mul(&s(&[1, -1], 2)).unwrap(), s(&[1, 0, -1], 2));
        assert_eq!(s(&[1, 1, 1], 2).mul(&s(&[1, 1, 1], 2)).unwrap(), s(&[1, 2, 3], 2));
        let geo = s(&[1, 1, 1, 1], 3);
        assert_eq!(geo.mul(&geo).unwrap(), s(&[1, 2, 3, 4], 3));
    }

    #[test]
    fn mul_order_mismatch() {
        let err = s(&[1], 2).mul(&s(&[1], 3)).unwrap_err();
        assert_eq!(err, SeriesError::OrderMismatch { left: 2, right: 3 });
    }

    #[test]
    fn reversion_identity() {
        let x = s(&[0, 1], 6);
        assert_eq!(x.reversion().unwrap(), x);
    }

    #[test]
    fn reversion_of_x_minus_x2_is_catalan() {
        let g = s(&[0, 1, -1], 8).reversion().unwrap();
        assert_eq!(g, s(&[0, 1, 1, 2, 5, 14, 42, 132, 429], 8));
    }

    #[test]
    fn reversion_satisfies_composition() {
        let f = s(&[0, 1, -1, -1], 4);
        let g = f.reversion().unwrap();
        assert_eq!(f.compose(&g).unwrap(), s(&[0, 1], 4));
        assert_eq!(g.compose(&f).unwrap(), s(&[0, 1], 4));
    }

    #[test]
    fn reversion_rejects_unnormalized() {
        assert_eq!(s(&[1, 1], 3).reversion().unwrap_err(), SeriesError::NotNormalized);
        assert_eq!(s(&[0, 2], 3).reversion().unwrap_err(), SeriesError::NotNormalized);
    }

    #[test]
    fn recip_geometric() {
        let r = s(&[1, -1], 5).recip().unwrap();
        assert_eq!(r, s(&[1, 1, 1, 1, 1, 1], 5));
        assert!(s(&[2, 1], 3).recip().is_err());
        let neg = s(&[-1, 3, 2], 6);
        assert_eq!(neg.mul(&neg.recip().unwrap()).unwrap(), PowerSeries::one(6));
    }

    #[test]
    fn shifts() {
        let a = s(&[1, 2, 3], 2);
        assert_eq!(a.mul_x(), s(&[0, 1, 2, 3], 3));
        assert_eq!(a.mul_x().div_x().unwrap(), a);
        assert!(a.div_x().is_none());
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, 0, -1], 2).to_string(), "1 + -1x^2 + O(x^3)");
        assert_eq!(PowerSeries::zero(1).to_string(), "0 + O(x^2)");
    }
}
