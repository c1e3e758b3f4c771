use std::time::Instant;

use andrews_involutions::{involute_pipeline, pipeline_fixed_gf, Pipeline, PipelineOutcome};
use gordon_involution::{GordonInvolution, InvolutionOutcome};
use partition_core::{distinct_partitions, enumerate_family, Family, PartitionPair, SignedPartition};
use qseries::{theta_sum, Series, ThetaSpec};
use rayon::prelude::*;

use crate::{
    Counterexample, Discrepancy, HarnessError, Result, Scope, Status, VerificationReport,
};

pub const DEFAULT_SWEEP_CAP: u32 = 30;

/// Largest weight a sweep accepts; `RRG_MAX_SWEEP` overrides the default.
pub fn sweep_cap() -> u32 {
    std::env::var("RRG_MAX_SWEEP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_SWEEP_CAP)
}

fn check_params(scope: Scope, k: u32, a: u32) -> Result<()> {
    match scope {
        Scope::Gordon => {
            GordonInvolution::new(k, a)?;
        }
        Scope::Pipeline(p) => p.check(k, a).map_err(|e| HarnessError::Params(e.to_string()))?,
    }
    Ok(())
}

/// All configurations of exactly weight `w`, ordered by the weight of `A`
/// and then by the enumeration order of each side.
pub fn ground_set(scope: Scope, k: u32, a: u32, w: u32) -> Result<Vec<PartitionPair>> {
    check_params(scope, k, a)?;
    let family = match scope {
        Scope::Gordon => Family::B,
        Scope::Pipeline(p) => p.family(),
    };
    let even_a = matches!(scope, Scope::Pipeline(p) if p.even_a());
    let mut out = Vec::new();
    for wa in 0..=w {
        let alist: Vec<SignedPartition> = if !even_a {
            distinct_partitions(wa)
        } else if wa % 2 == 0 {
            distinct_partitions(wa / 2)
                .into_iter()
                .map(|s| SignedPartition::new(s.parts().iter().map(|x| 2 * x).collect()))
                .collect::<std::result::Result<_, _>>()?
        } else {
            continue;
        };
        let bs = enumerate_family(family, k, a, w - wa)?;
        for ap in &alist {
            for b in &bs {
                out.push(PartitionPair::new(ap.clone(), b.clone()));
            }
        }
    }
    Ok(out)
}

/// What one configuration contributes to a sweep.
enum Visit {
    Fixed(i64),
    Paired,
    Broken(Counterexample),
}

fn broken(law: &str, p: &PartitionPair, image: Option<&PartitionPair>, detail: String) -> Visit {
    Visit::Broken(Counterexample {
        law: law.to_string(),
        config: p.into(),
        image: image.map(Into::into),
        detail,
    })
}

fn check_partner(
    p: &PartitionPair,
    q: &PartitionPair,
    member: bool,
    back: Option<&PartitionPair>,
) -> Visit {
    if !member {
        return broken("closure", p, Some(q), "image is outside the ground set".into());
    }
    if q.weight() != p.weight() {
        return broken("weight", p, Some(q), format!("{} != {}", q.weight(), p.weight()));
    }
    if q.sign() == p.sign() {
        return broken("sign", p, Some(q), "image has the same sign".into());
    }
    match back {
        Some(b) if b == p => Visit::Paired,
        Some(b) => broken("involution", p, Some(q), format!("image maps to {b}")),
        None => broken("involution", p, Some(q), "image is a fixed point".into()),
    }
}

fn visit_gordon(g: &GordonInvolution, p: &PartitionPair) -> Visit {
    match g.involute(p) {
        Err(e) => broken("defined", p, None, e.to_string()),
        Ok(InvolutionOutcome::Fixed(tag)) => {
            if g.match_fixed(p) != Some(tag) {
                return broken("fixed", p, None, format!("reported {tag} but is not that template"));
            }
            Visit::Fixed(p.sign())
        }
        Ok(InvolutionOutcome::Partner(m)) => {
            let back = g.involute(&m.pair).ok();
            check_partner(p, &m.pair, g.is_member(&m.pair), back.as_ref().and_then(|b| b.partner()))
        }
    }
}

fn visit_pipeline(pl: Pipeline, k: u32, a: u32, p: &PartitionPair) -> Visit {
    match involute_pipeline(p, pl, k, a) {
        Err(e) => broken("defined", p, None, e.to_string()),
        Ok(PipelineOutcome::Fixed(c)) => {
            if c.weight() != p.weight() || c.sign() != p.sign() {
                return broken(
                    "fixed",
                    p,
                    None,
                    format!("canonical form of weight {} and sign {}", c.weight(), c.sign()),
                );
            }
            Visit::Fixed(p.sign())
        }
        Ok(PipelineOutcome::Partner { pair: q, .. }) => {
            let back = involute_pipeline(&q, pl, k, a).ok();
            check_partner(p, &q, pl.is_member(&q, k, a), back.as_ref().and_then(|b| b.partner()))
        }
    }
}

fn expected_fixed_gf(scope: Scope, k: u32, a: u32, n: usize) -> Result<Series> {
    Ok(match scope {
        Scope::Gordon => theta_sum(ThetaSpec::gordon(k, a), n)?,
        Scope::Pipeline(p) => {
            let direct = p.e_factor(n)?.mul(&theta_sum(ThetaSpec::parity(k, a), n)?)?;
            let listed = pipeline_fixed_gf(p, k, a, n)?;
            if let Some(e) = direct.first_discrepancy(&listed) {
                return Err(HarnessError::Params(format!(
                    "fixed-point templates disagree with the product form at q^{e}"
                )));
            }
            listed
        }
    })
}

/// Exhaustively checks that the scope's map is a weight-preserving,
/// sign-reversing involution on every configuration of weight at most `n`,
/// and that its signed fixed points sum to the expected series.
///
/// Each weight class is checked in parallel. The reported counterexample is
/// the first one in (weight, enumeration) order, so reports are
/// deterministic.
pub fn check_involution_laws(scope: Scope, k: u32, a: u32, n: u32) -> Result<VerificationReport> {
    let cap = sweep_cap();
    if n > cap {
        return Err(HarnessError::SweepCap { n, cap });
    }
    check_params(scope, k, a)?;
    let start = Instant::now();
    let gordon = match scope {
        Scope::Gordon => Some(GordonInvolution::new(k, a)?),
        Scope::Pipeline(_) => None,
    };
    let mut gf = vec![0i64; n as usize + 1];
    let mut checked = 0u64;
    let mut counterexample = None;
    for w in 0..=n {
        let ground = ground_set(scope, k, a, w)?;
        checked += ground.len() as u64;
        let visits: Vec<Visit> = ground
            .par_iter()
            .map(|p| match (scope, &gordon) {
                (Scope::Pipeline(pl), _) => visit_pipeline(pl, k, a, p),
                (Scope::Gordon, g) => visit_gordon(g.as_ref().expect("built above"), p),
            })
            .collect();
        for v in visits {
            match v {
                Visit::Fixed(s) => gf[w as usize] += s,
                Visit::Paired => {}
                Visit::Broken(c) => {
                    counterexample.get_or_insert(c);
                }
            }
        }
    }
    let want = expected_fixed_gf(scope, k, a, n as usize)?;
    let got = Series::from_coeffs(gf)?;
    let first_discrepancy = got.first_discrepancy(&want).map(|e| Discrepancy {
        exponent: e,
        lhs: *got.coeff(e),
        rhs: *want.coeff(e),
    });
    let pass = counterexample.is_none() && first_discrepancy.is_none();
    Ok(VerificationReport {
        identity: format!("laws-{scope}"),
        k,
        a,
        truncation: n as usize,
        status: if pass { Status::Pass } else { Status::Fail },
        first_discrepancy,
        checked: Some(checked),
        counterexample,
        elapsed: start.elapsed(),
    })
}
