use partition_core::{count_family, Family};

use crate::series::{add, Coeff, TruncatedSeries};
use crate::{Result, SeriesError};

/// Sign of the base in `(±q^a; q^m)_∞`: `Plus` gives `Π (1 - q^(a+jm))`,
/// `Minus` gives `Π (1 + q^(a+jm))`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `(±q^a; q^m)_∞` truncated at `n`.
pub fn poch_inf<C: Coeff>(sign: Sign, a: u32, m: u32, n: usize) -> Result<TruncatedSeries<C>> {
    if a == 0 || m == 0 {
        return Err(SeriesError::InvalidPochhammer { a, m });
    }
    let mut s = TruncatedSeries::one(n);
    let mut e = a as usize;
    while e <= n {
        s.mul_binomial(e, sign == Sign::Minus)?;
        e += m as usize;
    }
    Ok(s)
}

/// Bilateral theta series `Σ (-1)^n q^((α n² + β n)/2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ThetaSpec {
    pub alpha: i64,
    pub beta: i64,
}

impl ThetaSpec {
    pub fn new(alpha: i64, beta: i64) -> Result<Self> {
        if alpha <= 0 || (alpha + beta) % 2 != 0 {
            return Err(SeriesError::ThetaSpec { alpha, beta });
        }
        Ok(ThetaSpec { alpha, beta })
    }

    /// Theta side of the Gordon identity: `(k+½)n² + (k-a+½)n`.
    pub fn gordon(k: u32, a: u32) -> Self {
        let (k, a) = (i64::from(k), i64::from(a));
        ThetaSpec { alpha: 2 * k + 1, beta: 2 * (k - a) + 1 }
    }

    /// Theta side of the parity variants: `(k+1)n² + (k+1-a)n`.
    pub fn parity(k: u32, a: u32) -> Self {
        let (k, a) = (i64::from(k), i64::from(a));
        ThetaSpec { alpha: 2 * (k + 1), beta: 2 * (k + 1 - a) }
    }

    pub fn exponent(&self, n: i64) -> i64 {
        (self.alpha * n * n + self.beta * n) / 2
    }
}

pub fn theta_sum<C: Coeff>(spec: ThetaSpec, n: usize) -> Result<TruncatedSeries<C>> {
    let spec = ThetaSpec::new(spec.alpha, spec.beta)?;
    let mut s = TruncatedSeries::zero(n);
    // beyond |j| = bound the exponent exceeds n
    let bound = (spec.beta.abs() + 2 * n as i64 + 1) / spec.alpha + 1;
    let one = C::one();
    let minus_one = C::zero().checked_sub(&one).ok_or(SeriesError::Overflow)?;
    for j in 0..=bound {
        for m in if j == 0 { vec![0] } else { vec![j, -j] } {
            let e = spec.exponent(m);
            if e < 0 {
                return Err(SeriesError::NegativeExponent(e));
            }
            if e as usize <= n {
                let c = if m % 2 == 0 { &one } else { &minus_one };
                let slot = &mut s.coeffs_mut()[e as usize];
                *slot = add(slot, c)?;
            }
        }
    }
    Ok(s)
}

/// Partitions whose parts avoid the given residues modulo `modulus`.
pub fn restricted_gf<C: Coeff>(
    forbidden: &[u32],
    modulus: u32,
    n: usize,
) -> Result<TruncatedSeries<C>> {
    if modulus == 0 {
        return Err(SeriesError::Modulus(modulus));
    }
    let mut s = TruncatedSeries::one(n);
    for p in 1..=n {
        if !forbidden.contains(&(p as u32 % modulus)) {
            s.div_geometric(p)?;
        }
    }
    Ok(s)
}

/// The multiple sum
/// `Σ q^(N_1²+…+N_{k-1}² + N_a+…+N_{k-1}) / ((q)_{n_1}…(q)_{n_{k-1}})`
/// with `N_j = n_j + … + n_{k-1}`.
pub fn multisum_rrg<C: Coeff>(k: u32, a: u32, n: usize) -> Result<TruncatedSeries<C>> {
    partition_core::GordonParams::new(k, a, partition_core::ParityMode::None)?;
    // inv[m] = 1/(q;q)_m, partitions into parts at most m
    let mut inv: Vec<TruncatedSeries<C>> = vec![TruncatedSeries::one(n)];
    let max_part = (n as f64).sqrt() as usize + 1;
    for m in 1..=max_part {
        let mut next = inv[m - 1].clone();
        next.div_geometric(m)?;
        inv.push(next);
    }
    let mut total = TruncatedSeries::zero(n);
    let mut big_n = Vec::new();
    walk(k as usize - 1, a as usize, n, usize::MAX, 0, &mut big_n, &inv, &mut total)?;
    return Ok(total);

    #[allow(clippy::too_many_arguments)]
    fn walk<C: Coeff>(
        len: usize,
        a: usize,
        n: usize,
        cap: usize,
        squares: usize,
        big_n: &mut Vec<usize>,
        inv: &[TruncatedSeries<C>],
        total: &mut TruncatedSeries<C>,
    ) -> Result<()> {
        if big_n.len() == len {
            // big_n is N_1 >= N_2 >= ... >= N_{k-1}
            let lin: usize = big_n.iter().skip(a.saturating_sub(1)).sum();
            let e = squares + lin;
            if e > n {
                return Ok(());
            }
            let mut term = TruncatedSeries::monomial(n, e, C::one());
            for j in 0..len {
                let next = big_n.get(j + 1).copied().unwrap_or(0);
                let nj = big_n[j] - next;
                if nj > 0 {
                    term = term.mul(&inv[nj])?;
                }
            }
            *total = total.add(&term)?;
            return Ok(());
        }
        let mut v = 0;
        while v <= cap && squares + v * v <= n {
            big_n.push(v);
            walk(len, a, n, v, squares + v * v, big_n, inv, total)?;
            big_n.pop();
            v += 1;
        }
        Ok(())
    }
}

/// Coefficient `n` is `count_family(family, k, a, n)`.
pub fn family_gf<C: Coeff>(family: Family, k: u32, a: u32, n: usize) -> Result<TruncatedSeries<C>> {
    let mut coeffs = Vec::with_capacity(n + 1);
    for w in 0..=n {
        let c = count_family(family, k, a, w as u32)?;
        coeffs.push(C::from(i64::try_from(c).map_err(|_| SeriesError::Overflow)?));
    }
    TruncatedSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    fn s(c: &[i64]) -> Series {
        Series::from_i64s(c).unwrap()
    }

    #[test]
    fn pochhammer_examples() {
        assert_eq!(poch_inf::<i64>(Sign::Plus, 1, 1, 3).unwrap(), s(&[1, -1, -1, 0]));
        assert_eq!(poch_inf::<i64>(Sign::Minus, 1, 2, 4).unwrap(), s(&[1, 1, 0, 1, 1]));
        assert_eq!(poch_inf::<i64>(Sign::Plus, 5, 4, 4).unwrap(), Series::one(4));
        assert!(poch_inf::<i64>(Sign::Plus, 0, 4, 4).is_err());
        assert!(poch_inf::<i64>(Sign::Plus, 1, 0, 4).is_err());
    }

    #[test]
    fn partition_numbers_by_inversion() {
        let p = poch_inf::<i64>(Sign::Plus, 1, 1, 6).unwrap().invert_unit().unwrap();
        assert_eq!(p, s(&[1, 1, 2, 3, 5, 7, 11]));
    }

    #[test]
    fn theta_examples() {
        let t: Series = theta_sum(ThetaSpec::new(7, 1).unwrap(), 17).unwrap();
        let mut want = vec![0i64; 18];
        want[0] = 1;
        want[3] = -1;
        want[4] = -1;
        want[13] = 1;
        want[15] = 1;
        assert_eq!(t.coeffs(), &want[..]);
        assert_eq!(theta_sum::<i64>(ThetaSpec::new(7, 1).unwrap(), 0).unwrap(), Series::one(0));
        assert!(ThetaSpec::new(7, 2).is_err());
        assert!(ThetaSpec::new(0, 2).is_err());
        assert_eq!(
            theta_sum::<i64>(ThetaSpec { alpha: 2, beta: 4 }, 5),
            Err(SeriesError::NegativeExponent(-1))
        );
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_gf::<i64>(&[0, 2, 3], 5, 4).unwrap(), s(&[1, 1, 1, 1, 2]));
        assert_eq!(restricted_gf::<i64>(&[], 1, 0).unwrap(), Series::one(0));
        assert_eq!(*restricted_gf::<i64>(&[0, 3, 4], 7, 5).unwrap().coeff(5), 4);
        assert!(restricted_gf::<i64>(&[], 0, 3).is_err());
    }

    #[test]
    fn multisum_examples() {
        assert_eq!(multisum_rrg::<i64>(2, 2, 4).unwrap(), s(&[1, 1, 1, 1, 2]));
        let m = multisum_rrg::<i64>(2, 1, 2).unwrap();
        assert_eq!((m.coeff(0), m.coeff(1)), (&1, &0));
        assert_eq!(multisum_rrg::<i64>(4, 3, 0).unwrap(), Series::one(0));
        assert!(multisum_rrg::<i64>(1, 1, 3).is_err());
    }

    #[test]
    fn family_examples() {
        assert_eq!(family_gf::<i64>(Family::B, 2, 2, 5).unwrap(), s(&[1, 1, 1, 1, 2, 2]));
        // (1,1) at 2; (3,1) and (2,2) at 4; (5) and (3,1,1) at 5
        assert_eq!(family_gf::<i64>(Family::W, 3, 3, 5).unwrap(), s(&[1, 1, 1, 1, 2, 2]));
        assert_eq!(family_gf::<i64>(Family::A, 4, 2, 0).unwrap(), Series::one(0));
    }
}
