use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use andrews_involutions::Pipeline;
use partition_core::{count_family, Family, GordonParams, ParityMode};
use qseries::{family_gf, multisum_rrg, poch_inf, theta_sum, Series, Sign, ThetaSpec};

use crate::{Discrepancy, HarnessError, Result, Status, VerificationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `A_{k,a}(n) = B_{k,a}(n)` for each `n`.
    RrgCounts,
    /// `(q;q)_∞ Σ B_{k,a}(n) qⁿ` against the Gordon theta series.
    Ebf,
    /// `W_{k,a}` with `k`, `a` even.
    Thm13,
    /// `W_{k,a}` with `k`, `a` odd.
    Thm14,
    /// `Wbar_{k,a}` with `k` odd, `a` even.
    Thm15,
    /// Multiple sum against the generating function of `A_{k,a}`.
    Multisum,
    /// Triple product for modulus `2k+1` against the theta series.
    Jtp,
    /// Product relation used to restate the identity of a pipeline.
    Prelude(Pipeline),
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IdentityId::RrgCounts => f.write_str("rrg"),
            IdentityId::Ebf => f.write_str("ebf"),
            IdentityId::Thm13 => f.write_str("thm13"),
            IdentityId::Thm14 => f.write_str("thm14"),
            IdentityId::Thm15 => f.write_str("thm15"),
            IdentityId::Multisum => f.write_str("multisum"),
            IdentityId::Jtp => f.write_str("jtp"),
            IdentityId::Prelude(p) => write!(f, "prelude-{}", p.to_string().to_ascii_lowercase()),
        }
    }
}

impl FromStr for IdentityId {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "rrg" | "rrg_counts" => IdentityId::RrgCounts,
            "ebf" => IdentityId::Ebf,
            "thm13" => IdentityId::Thm13,
            "thm14" => IdentityId::Thm14,
            "thm15" => IdentityId::Thm15,
            "multisum" => IdentityId::Multisum,
            "jtp" | "jtp_instance" => IdentityId::Jtp,
            other => match other.strip_prefix("prelude-") {
                Some(p) => IdentityId::Prelude(p.parse()?),
                None => return Err(format!("unknown identity {s:?}")),
            },
        })
    }
}

/// How denominators are handled.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Mode {
    /// Compare `lhs_num · rhs_den` with `rhs_num · lhs_den`.
    #[default]
    CrossMultiplied,
    /// Invert both denominators and compare the quotients.
    Inverted,
}

/// Each side is `num / den`.
struct Sides {
    lhs: (Series, Series),
    rhs: (Series, Series),
}

fn poch(sign: Sign, a: u32, m: u32, n: usize) -> Result<Series> {
    Ok(poch_inf(sign, a, m, n)?)
}

/// `(q^a;q^m)(q^(m-a);q^m)(q^m;q^m)`.
fn triple(a: u32, m: u32, n: usize) -> Result<Series> {
    Ok(poch(Sign::Plus, a, m, n)?
        .mul(&poch(Sign::Plus, m - a, m, n)?)?
        .mul(&poch(Sign::Plus, m, m, n)?)?)
}

fn sides(id: IdentityId, k: u32, a: u32, n: usize) -> Result<Sides> {
    let one = Series::one(n);
    let check = |mode| -> Result<()> {
        GordonParams::new(k, a, mode)?;
        Ok(())
    };
    Ok(match id {
        IdentityId::RrgCounts => {
            check(ParityMode::None)?;
            let counts = |fam| -> Result<Series> {
                let c = (0..=n as u32)
                    .map(|m| {
                        let c = count_family(fam, k, a, m)?;
                        i64::try_from(c).map_err(|_| HarnessError::Series(qseries::SeriesError::Overflow))
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(Series::from_coeffs(c)?)
            };
            Sides { lhs: (counts(Family::A)?, one.clone()), rhs: (counts(Family::B)?, one) }
        }
        IdentityId::Ebf => {
            check(ParityMode::None)?;
            Sides {
                lhs: (family_gf(Family::B, k, a, n)?, one),
                rhs: (theta_sum(ThetaSpec::gordon(k, a), n)?, poch(Sign::Plus, 1, 1, n)?),
            }
        }
        IdentityId::Jtp => {
            check(ParityMode::None)?;
            Sides {
                lhs: (triple(a, 2 * k + 1, n)?, one.clone()),
                rhs: (theta_sum(ThetaSpec::gordon(k, a), n)?, one),
            }
        }
        IdentityId::Multisum => {
            check(ParityMode::None)?;
            Sides {
                lhs: (multisum_rrg(k, a, n)?, one.clone()),
                rhs: (family_gf(Family::A, k, a, n)?, one),
            }
        }
        IdentityId::Thm13 | IdentityId::Thm14 | IdentityId::Thm15 => {
            let p = match id {
                IdentityId::Thm13 => Pipeline::EE,
                IdentityId::Thm14 => Pipeline::OO,
                _ => Pipeline::OE,
            };
            p.check(k, a).map_err(|e| HarnessError::Params(e.to_string()))?;
            let j = triple(a, 2 * k + 2, n)?;
            let lhs = (family_gf(p.family(), k, a, n)?, one.clone());
            let rhs = match p {
                Pipeline::EE => {
                    (poch(Sign::Minus, 1, 2, n)?.mul(&j)?, poch(Sign::Plus, 2, 2, n)?)
                }
                Pipeline::OO => (poch(Sign::Plus, 2, 4, n)?.mul(&j)?, poch(Sign::Plus, 1, 1, n)?),
                Pipeline::OE => {
                    (j, poch(Sign::Minus, 1, 2, n)?.mul(&poch(Sign::Plus, 1, 1, n)?)?)
                }
            };
            Sides { lhs, rhs }
        }
        IdentityId::Prelude(Pipeline::EE | Pipeline::OO) => Sides {
            lhs: (poch(Sign::Minus, 1, 2, n)?, poch(Sign::Plus, 2, 2, n)?),
            rhs: (poch(Sign::Plus, 2, 4, n)?, poch(Sign::Plus, 1, 1, n)?),
        },
        IdentityId::Prelude(Pipeline::OE) => Sides {
            lhs: (one.clone(), poch(Sign::Minus, 1, 2, n)?.mul(&poch(Sign::Plus, 1, 1, n)?)?),
            rhs: (poch(Sign::Minus, 2, 2, n)?, poch(Sign::Plus, 2, 2, n)?),
        },
    })
}

/// Checks an identity in cross-multiplied form.
pub fn check_identity(id: IdentityId, k: u32, a: u32, n: usize) -> Result<VerificationReport> {
    check_identity_with(id, k, a, n, Mode::CrossMultiplied)
}

pub fn check_identity_with(
    id: IdentityId,
    k: u32,
    a: u32,
    n: usize,
    mode: Mode,
) -> Result<VerificationReport> {
    let start = Instant::now();
    let Sides { lhs, rhs } = sides(id, k, a, n)?;
    let (l, r) = match mode {
        Mode::CrossMultiplied => (lhs.0.mul(&rhs.1)?, rhs.0.mul(&lhs.1)?),
        Mode::Inverted => (lhs.0.mul(&lhs.1.invert_unit()?)?, rhs.0.mul(&rhs.1.invert_unit()?)?),
    };
    let first = l.first_discrepancy(&r).map(|e| Discrepancy {
        exponent: e,
        lhs: *l.coeff(e),
        rhs: *r.coeff(e),
    });
    Ok(VerificationReport {
        identity: id.to_string(),
        k,
        a,
        truncation: n,
        status: if first.is_none() { Status::Pass } else { Status::Fail },
        first_discrepancy: first,
        checked: None,
        counterexample: None,
        elapsed: start.elapsed(),
    })
}

/// Both sides in cross-multiplied form, for inspecting single coefficients.
pub fn compared_sides(id: IdentityId, k: u32, a: u32, n: usize) -> Result<(Series, Series)> {
    let Sides { lhs, rhs } = sides(id, k, a, n)?;
    Ok((lhs.0.mul(&rhs.1)?, rhs.0.mul(&lhs.1)?))
}
