use andrews_involutions::{
    canonicalize_fixed, involute_pipeline, pipeline_fixed_gf, pipeline_fixed_triple, redistribute,
    to_triple, AndrewsError, PartitionTriple, Pipeline, PipelineOutcome, PipelineStep,
};
use gordon_involution::FixedTag;
use partition_core::{Partition, PartitionPair, SignedPartition};
use qseries::{poch_inf, theta_sum, Series, Sign, ThetaSpec};

fn pp(a: &[u32], b: &[u32]) -> PartitionPair {
    PartitionPair::from_parts(a.to_vec(), b.to_vec()).unwrap()
}

fn rep(v: u32, m: usize) -> Vec<u32> {
    vec![v; m]
}

fn partner(pair: &PartitionPair, p: Pipeline, k: u32, a: u32) -> PartitionPair {
    match involute_pipeline(pair, p, k, a).unwrap() {
        PipelineOutcome::Partner { pair, .. } => pair,
        PipelineOutcome::Fixed(c) => panic!("{pair} is fixed: {c:?}"),
    }
}

#[test]
fn even_even_partners() {
    let x = pp(&[10, 8, 5], &[5, 4, 4, 4, 4]);
    let y = pp(&[10, 5], &[5, 5, 5, 4, 4, 3, 3]);
    assert_eq!(x.weight(), 44);
    assert_eq!(partner(&x, Pipeline::EE, 6, 6), y);
    assert_eq!(partner(&y, Pipeline::EE, 6, 6), x);
}

#[test]
fn odd_odd_fixed_point_at_189() {
    let mut b = vec![9];
    for v in [7, 5, 3, 1] {
        b.extend(rep(v, 8));
    }
    let x = pp(&[16, 14, 12, 10], &b);
    assert_eq!(x.weight(), 189);
    let PipelineOutcome::Fixed(c) = involute_pipeline(&x, Pipeline::OO, 9, 9).unwrap() else {
        panic!("not fixed");
    };
    assert_eq!(c.tag, FixedTag::First(4));
    assert_eq!(c.e.parts(), &[9, 7, 5, 3, 1]);
    let mut core = Vec::new();
    for v in [7, 5, 3, 1] {
        core.extend(rep(v, 7));
    }
    assert_eq!(c.core, pp(&[16, 14, 12, 10], &core));
    assert_eq!((c.weight(), c.sign()), (189, 1));
}

#[test]
fn odd_odd_canonicalization() {
    let middle: Vec<u32> = [14, 10, 6, 2].iter().flat_map(|&v| rep(v, 3)).collect();
    let t = PartitionTriple {
        a: SignedPartition::new(vec![16, 14, 12, 10]).unwrap(),
        middle: Partition::new(middle.clone()).unwrap(),
        d: Partition::new(vec![9, 7, 7, 5, 5, 3, 3, 1, 1]).unwrap(),
        e: Partition::empty(),
    };
    let c = canonicalize_fixed(&t, Pipeline::OO, 9, 9).unwrap();
    assert_eq!(c.tag, FixedTag::First(4));
    assert_eq!(c.e.parts(), &[9, 7, 5, 3, 1]);

    // the triple before redistribution
    let before = to_triple(&pp(&[16, 14, 12, 10], &{
        let mut b = vec![9];
        for v in [7, 5, 3, 1] {
            b.extend(rep(v, 8));
        }
        b
    }), Pipeline::OO, 9, 9)
    .unwrap();
    assert_eq!(before.middle.len(), 16);
    assert_eq!(redistribute(&before, Pipeline::OO).unwrap(), t);
}

#[test]
fn odd_even_partners() {
    let x = pp(&[10, 2], &[4, 4, 4, 4, 4, 2, 2, 2, 1, 1]);
    let y = pp(&[10], &[5, 5, 4, 4, 4, 2, 2, 2, 1, 1]);
    assert_eq!(x.weight(), 40);
    match involute_pipeline(&x, Pipeline::OE, 7, 6).unwrap() {
        PipelineOutcome::Partner { pair, step: PipelineStep::Reduced(_) } => assert_eq!(pair, y),
        other => panic!("{other:?}"),
    }
    assert_eq!(partner(&y, Pipeline::OE, 7, 6), x);
}

#[test]
fn fixed_triples() {
    let t = pipeline_fixed_triple(Pipeline::EE, 1, 1, 6, 6).unwrap();
    assert_eq!((t.a.parts(), t.middle.parts()), (&[4][..], &[2, 2][..]));
    assert!(t.d.is_empty() && t.e.is_empty());
    assert_eq!(t.weight(), 8);

    let t = pipeline_fixed_triple(Pipeline::OO, 1, 4, 9, 9).unwrap();
    assert_eq!(t.a.parts(), &[16, 14, 12, 10]);
    let middle: Vec<u32> = [14, 10, 6, 2].iter().flat_map(|&v| rep(v, 3)).collect();
    assert_eq!(t.middle.parts(), &middle[..]);
    assert_eq!(t.a.weight() + t.middle.weight(), 148);
    assert_eq!(t.d.parts(), &[7, 5, 3, 1]);

    assert!(matches!(
        pipeline_fixed_triple(Pipeline::EE, 1, 0, 6, 6),
        Err(AndrewsError::Precondition(_))
    ));
}

#[test]
fn fixed_series() {
    assert_eq!(pipeline_fixed_gf(Pipeline::OO, 3, 3, 0).unwrap(), Series::one(0));
    let want = poch_inf::<i64>(Sign::Minus, 2, 2, 8)
        .unwrap()
        .mul(&theta_sum(ThetaSpec::new(8, 4).unwrap(), 8).unwrap())
        .unwrap();
    assert_eq!(pipeline_fixed_gf(Pipeline::OE, 3, 2, 8).unwrap(), want);
    let want = poch_inf::<i64>(Sign::Plus, 2, 4, 6)
        .unwrap()
        .mul(&theta_sum(ThetaSpec::parity(2, 2), 6).unwrap())
        .unwrap();
    assert_eq!(pipeline_fixed_gf(Pipeline::EE, 2, 2, 6).unwrap(), want);
}

#[test]
fn empty_pair_is_fixed_everywhere() {
    for (p, k, a) in [(Pipeline::EE, 4, 2), (Pipeline::OO, 5, 3), (Pipeline::OE, 5, 2)] {
        match involute_pipeline(&PartitionPair::empty(), p, k, a).unwrap() {
            PipelineOutcome::Fixed(c) => {
                assert_eq!(c.tag, FixedTag::Empty);
                assert_eq!(c.weight(), 0);
            }
            other => panic!("{other:?}"),
        }
    }
}

#[test]
fn preconditions() {
    let e = PartitionPair::empty();
    assert!(matches!(involute_pipeline(&e, Pipeline::EE, 5, 3), Err(AndrewsError::Parity { .. })));
    assert!(matches!(involute_pipeline(&e, Pipeline::OE, 5, 3), Err(AndrewsError::Parity { .. })));
    assert!(matches!(
        involute_pipeline(&pp(&[3], &[]), Pipeline::OO, 5, 3),
        Err(AndrewsError::NotMember { .. })
    ));
    assert!(matches!(
        involute_pipeline(&pp(&[], &[2]), Pipeline::OO, 5, 3),
        Err(AndrewsError::NotMember { .. })
    ));
}
