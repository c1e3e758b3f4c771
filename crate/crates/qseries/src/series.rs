use std::fmt;

use num_traits::{CheckedAdd, CheckedMul, CheckedSub, One, Zero};

use crate::{Result, SeriesError};

/// Coefficient ring for [`TruncatedSeries`]. Arithmetic goes through the
/// checked operations so that fixed-width types report overflow.
pub trait Coeff:
    Clone + fmt::Debug + fmt::Display + PartialEq + Zero + One + CheckedAdd + CheckedSub + CheckedMul + From<i64>
{
}

impl<T> Coeff for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + PartialEq
        + Zero
        + One
        + CheckedAdd
        + CheckedSub
        + CheckedMul
        + From<i64>
{
}

pub(crate) fn add<C: Coeff>(x: &C, y: &C) -> Result<C> {
    x.checked_add(y).ok_or(SeriesError::Overflow)
}

pub(crate) fn sub<C: Coeff>(x: &C, y: &C) -> Result<C> {
    x.checked_sub(y).ok_or(SeriesError::Overflow)
}

pub(crate) fn mul<C: Coeff>(x: &C, y: &C) -> Result<C> {
    x.checked_mul(y).ok_or(SeriesError::Overflow)
}

/// Coefficients `c_0..=c_N` of a power series modulo `q^(N+1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coeff> TruncatedSeries<C> {
    pub fn zero(n: usize) -> Self {
        TruncatedSeries { coeffs: vec![C::zero(); n + 1] }
    }

    pub fn one(n: usize) -> Self {
        let mut s = Self::zero(n);
        s.coeffs[0] = C::one();
        s
    }

    /// `c * q^e`, or zero when `e > n`.
    pub fn monomial(n: usize, e: usize, c: C) -> Self {
        let mut s = Self::zero(n);
        if e <= n {
            s.coeffs[e] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<C>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| C::from(c)).collect())
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, e: usize) -> &C {
        &self.coeffs[e]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [C] {
        &mut self.coeffs
    }

    fn same_truncation(&self, other: &Self) -> Result<()> {
        if self.truncation() != other.truncation() {
            return Err(SeriesError::TruncationMismatch {
                left: self.truncation(),
                right: other.truncation(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_truncation(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| add(x, y))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_truncation(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| sub(x, y))
            .collect::<Result<_>>()?;
        Ok(TruncatedSeries { coeffs })
    }

    pub fn neg(&self) -> Result<Self> {
        Self::zero(self.truncation()).sub(self)
    }

    /// Cauchy product, truncated.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_truncation(other)?;
        let n = self.truncation();
        let mut out = Self::zero(n);
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..=n - i].iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = add(&out.coeffs[i + j], &mul(x, y)?)?;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse when the constant term is `+1` or `-1`.
    pub fn invert_unit(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        let minus_one = C::zero().checked_sub(&C::one()).ok_or(SeriesError::Overflow)?;
        if *c0 != C::one() && *c0 != minus_one {
            return Err(SeriesError::NotUnit);
        }
        let n = self.truncation();
        let mut t = Self::zero(n);
        t.coeffs[0] = c0.clone();
        for m in 1..=n {
            let mut acc = C::zero();
            for j in 1..=m {
                if self.coeffs[j].is_zero() {
                    continue;
                }
                acc = add(&acc, &mul(&self.coeffs[j], &t.coeffs[m - j])?)?;
            }
            // t_m = -c0 * acc, and c0 is its own inverse
            t.coeffs[m] = sub(&C::zero(), &mul(c0, &acc)?)?;
        }
        Ok(t)
    }

    /// Multiplies in place by `1 + q^e` when `plus`, else by `1 - q^e`.
    pub(crate) fn mul_binomial(&mut self, e: usize, plus: bool) -> Result<()> {
        if e == 0 || e > self.truncation() {
            return Ok(());
        }
        for i in (e..=self.truncation()).rev() {
            let shifted = self.coeffs[i - e].clone();
            self.coeffs[i] = if plus {
                add(&self.coeffs[i], &shifted)?
            } else {
                sub(&self.coeffs[i], &shifted)?
            };
        }
        Ok(())
    }

    /// Multiplies in place by `1 / (1 - q^e)`.
    pub(crate) fn div_geometric(&mut self, e: usize) -> Result<()> {
        for i in e..=self.truncation() {
            let prev = self.coeffs[i - e].clone();
            self.coeffs[i] = add(&self.coeffs[i], &prev)?;
        }
        Ok(())
    }

    /// Smallest exponent where the two series differ.
    pub fn first_discrepancy(&self, other: &Self) -> Option<usize> {
        self.coeffs.iter().zip(&other.coeffs).position(|(x, y)| x != y)
    }
}

impl<C: Coeff> fmt::Display for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(q^{})", self.truncation() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    fn s(c: &[i64]) -> Series {
        Series::from_i64s(c).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        assert_eq!(s(&[1, 1, 0]).mul(&s(&[1, -1, 0])).unwrap(), s(&[1, 0, -1]));
    }

    #[test]
    fn geometric_inverse() {
        assert_eq!(s(&[1, -1, 0, 0, 0, 0]).mul(&s(&[1; 6])).unwrap(), Series::one(5));
        assert_eq!(s(&[1, -1, 0, 0]).invert_unit().unwrap(), s(&[1, 1, 1, 1]));
        assert_eq!(Series::one(4).invert_unit().unwrap(), Series::one(4));
        assert_eq!(s(&[-1, 1]).invert_unit().unwrap(), s(&[-1, -1]));
    }

    #[test]
    fn errors() {
        assert_eq!(
            s(&[1, 2]).mul(&s(&[1])),
            Err(SeriesError::TruncationMismatch { left: 1, right: 0 })
        );
        assert_eq!(s(&[2, 1]).invert_unit(), Err(SeriesError::NotUnit));
        assert_eq!(s(&[0]).invert_unit(), Err(SeriesError::NotUnit));
        assert_eq!(Series::from_coeffs(vec![]), Err(SeriesError::Empty));
        assert_eq!(
            s(&[i64::MAX, 0]).add(&s(&[1, 0])),
            Err(SeriesError::Overflow)
        );
        assert_eq!(
            s(&[1 << 40, 0]).mul(&s(&[1 << 40, 0])),
            Err(SeriesError::Overflow)
        );
    }

    #[test]
    fn identity_and_display() {
        let x = s(&[3, 0, -2]);
        assert_eq!(x.mul(&Series::one(2)).unwrap(), x);
        assert_eq!(x.to_string(), "3 + -2q^2 + O(q^3)");
        assert_eq!(x.neg().unwrap(), s(&[-3, 0, 2]));
        assert_eq!(x.first_discrepancy(&s(&[3, 0, 2])), Some(2));
    }
}
