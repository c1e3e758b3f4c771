use andrews_involutions::{involute_pipeline, PipelineOutcome};
use gordon_involution::{GordonInvolution, InvolutionOutcome};
use partition_core::PartitionPair;
use serde::Serialize;

use crate::{FixedJson, HarnessError, PairJson, Result, Scope};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    /// Classification of the configuration the step starts from.
    pub label: String,
    pub config: PairJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Terminal {
    Partner,
    Fixed { fixed: FixedJson },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitTrace {
    pub scope: String,
    pub k: u32,
    pub a: u32,
    pub start: PairJson,
    pub weight: u64,
    pub steps: Vec<TraceStep>,
    pub terminal: Terminal,
}

enum Image {
    Partner(String, PartitionPair),
    Fixed(FixedJson),
}

fn image(scope: Scope, k: u32, a: u32, p: &PartitionPair) -> Result<Image> {
    Ok(match scope {
        Scope::Gordon => {
            let g = GordonInvolution::new(k, a)?;
            if !g.is_member(p) {
                return Err(HarnessError::NotMember(p.to_string()));
            }
            match g.involute(p)? {
                InvolutionOutcome::Fixed(tag) => Image::Fixed(FixedJson::gordon(tag, p)),
                InvolutionOutcome::Partner(m) => {
                    let label = match m.map {
                        Some(map) => format!("{} via {map}", m.label),
                        None => m.label.to_string(),
                    };
                    Image::Partner(label, m.pair)
                }
            }
        }
        Scope::Pipeline(pl) => {
            pl.check(k, a).map_err(|e| HarnessError::Params(e.to_string()))?;
            if !pl.is_member(p, k, a) {
                return Err(HarnessError::NotMember(p.to_string()));
            }
            match involute_pipeline(p, pl, k, a)? {
                PipelineOutcome::Fixed(c) => Image::Fixed(FixedJson::canonical(&c)),
                PipelineOutcome::Partner { pair, step } => Image::Partner(step.to_string(), pair),
            }
        }
    })
}

/// Applies the involution to `start` and then to its image, recording the
/// classification at each step. Fails if the second application does not
/// return to `start`.
pub fn trace_orbit(start: &PartitionPair, scope: Scope, k: u32, a: u32) -> Result<OrbitTrace> {
    let (steps, terminal) = match image(scope, k, a, start)? {
        Image::Fixed(f) => (vec![], Terminal::Fixed { fixed: f }),
        Image::Partner(label, q) => match image(scope, k, a, &q)? {
            Image::Partner(back_label, back) if &back == start => (
                vec![
                    TraceStep { label, config: (&q).into() },
                    TraceStep { label: back_label, config: (&back).into() },
                ],
                Terminal::Partner,
            ),
            Image::Partner(_, back) => {
                return Err(HarnessError::NotInvolution(format!("{start} -> {q} -> {back}")))
            }
            Image::Fixed(_) => {
                return Err(HarnessError::NotInvolution(format!("{start} -> {q}, a fixed point")))
            }
        },
    };
    Ok(OrbitTrace {
        scope: scope.to_string(),
        k,
        a,
        start: start.into(),
        weight: start.weight(),
        steps,
        terminal,
    })
}
