//! Gordon's sign-reversing involution on pairs `(A|B)` where `A` has
//! distinct parts and `B` satisfies the Gordon conditions for `(k, a)`.
//!
//! The configuration space has signed generating function
//! `(q;q)_∞ Σ B_{k,a}(n) q^n`. Everything cancels except two families of
//! fixed points whose weights are `(k+½)n² ± (k−a+½)n`.
//!
//! ```
//! use gordon_involution::{GordonInvolution, InvolutionOutcome};
//! use partition_core::PartitionPair;
//!
//! let g = GordonInvolution::new(3, 3).unwrap();
//! let pair = PartitionPair::from_parts(vec![6, 1], vec![5, 5]).unwrap();
//! match g.involute(&pair).unwrap() {
//!     InvolutionOutcome::Partner(m) => assert_eq!(m.pair.to_string(), "(6 | 6,5)"),
//!     InvolutionOutcome::Fixed(_) => unreachable!(),
//! }
//! ```

mod classify;
mod maps;

use std::fmt;

use partition_core::{gordon_condition, Part, PartitionError, PartitionPair};
use qseries::{Series, SeriesError};
use thiserror::Error;

pub use classify::ClassParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GordonError {
    #[error(transparent)]
    Params(#[from] PartitionError),
    #[error("{0} is not in the configuration space for k={1}, a={2}")]
    NotMember(String, u32, u32),
    #[error("{op} does not apply to {pair} (class {label})")]
    WrongClass { op: &'static str, pair: String, label: ClassLabel },
    #[error("internal consistency failure at {pair}: {detail}")]
    Consistency { pair: String, detail: String },
    #[error("fixed-point index must be at least 1, got {0}")]
    InvalidIndex(u32),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

pub type Result<T> = std::result::Result<T, GordonError>;

/// Which fixed point: the empty pair or a member of one of the two families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedTag {
    Empty,
    First(u32),
    Second(u32),
}

impl FixedTag {
    pub fn n(self) -> u32 {
        match self {
            FixedTag::Empty => 0,
            FixedTag::First(n) | FixedTag::Second(n) => n,
        }
    }

    /// `None` for the empty pair, else 1 or 2.
    pub fn family(self) -> Option<u8> {
        match self {
            FixedTag::Empty => None,
            FixedTag::First(_) => Some(1),
            FixedTag::Second(_) => Some(2),
        }
    }
}

impl fmt::Display for FixedTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FixedTag::Empty => write!(f, "fixed(n=0)"),
            FixedTag::First(n) => write!(f, "fixed(family 1, n={n})"),
            FixedTag::Second(n) => write!(f, "fixed(family 2, n={n})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClassLabel {
    MoveBtoA,
    MoveAtoB,
    /// `U_i^class`; `i` in `1..=k`, class in `1..=4`.
    U { i: u32, class: u8 },
    Fixed(FixedTag),
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassLabel::MoveBtoA => write!(f, "MoveBtoA"),
            ClassLabel::MoveAtoB => write!(f, "MoveAtoB"),
            ClassLabel::U { i, class } => write!(f, "U({i},{class})"),
            ClassLabel::Fixed(t) => write!(f, "{t}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Alpha,
    AlphaInv,
    Beta,
    BetaInv,
    Gamma,
    GammaInv,
}

impl fmt::Display for MapKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MapKind::Alpha => "alpha",
            MapKind::AlphaInv => "alpha^-1",
            MapKind::Beta => "beta",
            MapKind::BetaInv => "beta^-1",
            MapKind::Gamma => "gamma",
            MapKind::GammaInv => "gamma^-1",
        };
        f.write_str(s)
    }
}

/// A non-fixed image together with how it was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Move {
    pub pair: PartitionPair,
    pub label: ClassLabel,
    pub map: Option<MapKind>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InvolutionOutcome {
    Partner(Move),
    Fixed(FixedTag),
}

impl InvolutionOutcome {
    pub fn partner(&self) -> Option<&PartitionPair> {
        match self {
            InvolutionOutcome::Partner(m) => Some(&m.pair),
            InvolutionOutcome::Fixed(_) => None,
        }
    }
}

/// The involution for one choice of `(k, a)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GordonInvolution {
    k: u32,
    a: u32,
}

impl GordonInvolution {
    pub fn new(k: u32, a: u32) -> Result<Self> {
        partition_core::GordonParams::new(k, a, partition_core::ParityMode::None)?;
        Ok(GordonInvolution { k, a })
    }

    /// Also accepts `k = 1`, where `B` must be empty and the involution is
    /// Franklin's involution on `A`. Reductions of the parity variants land
    /// there.
    pub fn with_degenerate(k: u32, a: u32) -> Result<Self> {
        if k == 1 && a == 1 {
            return Ok(GordonInvolution { k, a });
        }
        Self::new(k, a)
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> u32 {
        self.a
    }

    pub fn is_member(&self, pair: &PartitionPair) -> bool {
        gordon_condition(pair.b.parts(), self.k, self.a)
    }

    fn check_member(&self, pair: &PartitionPair) -> Result<()> {
        if !self.is_member(pair) {
            return Err(GordonError::NotMember(pair.to_string(), self.k, self.a));
        }
        Ok(())
    }

    pub fn classify(&self, pair: &PartitionPair) -> Result<ClassLabel> {
        self.check_member(pair)?;
        classify::classify(self, pair)
    }

    pub fn compute_params(&self, pair: &PartitionPair) -> Result<ClassParams> {
        match self.classify(pair)? {
            ClassLabel::U { i, .. } => Ok(classify::params(self, pair, i)),
            label => Err(GordonError::WrongClass {
                op: "compute_params",
                pair: pair.to_string(),
                label,
            }),
        }
    }

    /// The largest-part exchange for the two non-exceptional classes.
    pub fn step1_move(&self, pair: &PartitionPair) -> Result<PartitionPair> {
        let label = self.classify(pair)?;
        let (a, b) = (pair.a.parts(), pair.b.parts());
        let (na, nb) = match label {
            ClassLabel::MoveBtoA => {
                let mut na = vec![b[0]];
                na.extend_from_slice(a);
                (na, b[1..].to_vec())
            }
            ClassLabel::MoveAtoB => {
                let mut nb = vec![a[0]];
                nb.extend_from_slice(b);
                (a[1..].to_vec(), nb)
            }
            label => {
                return Err(GordonError::WrongClass {
                    op: "step1_move",
                    pair: pair.to_string(),
                    label,
                })
            }
        };
        Ok(PartitionPair::from_parts(na, nb)?)
    }

    /// Applies the map attached to a `U` class.
    pub fn apply_map(&self, pair: &PartitionPair) -> Result<InvolutionOutcome> {
        match self.classify(pair)? {
            ClassLabel::U { i, class } => maps::apply(self, pair, i, class),
            label => Err(GordonError::WrongClass {
                op: "apply_map",
                pair: pair.to_string(),
                label,
            }),
        }
    }

    pub fn involute(&self, pair: &PartitionPair) -> Result<InvolutionOutcome> {
        let label = self.classify(pair)?;
        match label {
            ClassLabel::Fixed(t) => Ok(InvolutionOutcome::Fixed(t)),
            ClassLabel::MoveBtoA | ClassLabel::MoveAtoB => {
                let image = self.step1_move(pair)?;
                Ok(InvolutionOutcome::Partner(Move { pair: image, label, map: None }))
            }
            ClassLabel::U { i, class } => maps::apply(self, pair, i, class),
        }
    }

    /// Template pair of `family` (1 or 2) at index `n >= 1`.
    pub fn fixed_point(&self, family: u8, n: u32) -> Result<PartitionPair> {
        if n == 0 {
            return Err(GordonError::InvalidIndex(n));
        }
        let (k, a) = (self.k, self.a);
        let (top, first, second) = match family {
            1 => (2 * n, k - a, a - 1),
            2 => (2 * n - 1, a - 1, k - a),
            _ => {
                return Err(GordonError::Consistency {
                    pair: String::new(),
                    detail: format!("no fixed-point family {family}"),
                })
            }
        };
        let a_parts: Vec<Part> = (top - n + 1..=top).rev().collect();
        let mut b_parts = Vec::new();
        for (j, v) in (1..=top).rev().enumerate() {
            let m = if j % 2 == 0 { first } else { second };
            b_parts.extend(std::iter::repeat(v).take(m as usize));
        }
        Ok(PartitionPair::from_parts(a_parts, b_parts)?)
    }

    /// Recognises a template pair.
    pub fn match_fixed(&self, pair: &PartitionPair) -> Option<FixedTag> {
        if pair.is_empty() {
            return Some(FixedTag::Empty);
        }
        let n = pair.a.len() as u32;
        if n == 0 {
            return None;
        }
        if self.fixed_point(1, n).ok().as_ref() == Some(pair) {
            return Some(FixedTag::First(n));
        }
        if self.fixed_point(2, n).ok().as_ref() == Some(pair) {
            return Some(FixedTag::Second(n));
        }
        None
    }

    /// Signed generating function of all fixed points up to weight `n`.
    pub fn fixed_gf(&self, n: usize) -> Result<Series> {
        let mut coeffs = vec![0i64; n + 1];
        coeffs[0] = 1;
        for family in [1, 2] {
            let mut m = 1;
            loop {
                let p = self.fixed_point(family, m)?;
                let w = p.weight() as usize;
                if w > n {
                    break;
                }
                coeffs[w] += p.sign();
                m += 1;
            }
        }
        Ok(Series::from_coeffs(coeffs)?)
    }
}

pub fn classify(pair: &PartitionPair, k: u32, a: u32) -> Result<ClassLabel> {
    GordonInvolution::new(k, a)?.classify(pair)
}

pub fn step1_move(pair: &PartitionPair, k: u32, a: u32) -> Result<PartitionPair> {
    GordonInvolution::new(k, a)?.step1_move(pair)
}

pub fn compute_params(pair: &PartitionPair, k: u32, a: u32) -> Result<ClassParams> {
    GordonInvolution::new(k, a)?.compute_params(pair)
}

pub fn apply_map(pair: &PartitionPair, k: u32, a: u32) -> Result<InvolutionOutcome> {
    GordonInvolution::new(k, a)?.apply_map(pair)
}

pub fn involute_gordon(pair: &PartitionPair, k: u32, a: u32) -> Result<InvolutionOutcome> {
    GordonInvolution::new(k, a)?.involute(pair)
}

pub fn gordon_fixed_point(family: u8, n: u32, k: u32, a: u32) -> Result<PartitionPair> {
    GordonInvolution::new(k, a)?.fixed_point(family, n)
}

pub fn gordon_fixed_gf(k: u32, a: u32, n: usize) -> Result<Series> {
    GordonInvolution::new(k, a)?.fixed_gf(n)
}
