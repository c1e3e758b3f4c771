use andrews_involutions::{involute_pipeline, pipeline_fixed_gf, Pipeline, PipelineOutcome};
use partition_core::{distinct_partitions, enumerate_family, PartitionPair, SignedPartition};
use qseries::{theta_sum, ThetaSpec};

fn ground(p: Pipeline, k: u32, a: u32, n: u32) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for w in 0..=n {
        for wa in 0..=w {
            let alist: Vec<SignedPartition> = if p == Pipeline::EE {
                distinct_partitions(wa)
            } else if wa % 2 == 0 {
                distinct_partitions(wa / 2)
                    .into_iter()
                    .map(|s| SignedPartition::new(s.parts().iter().map(|x| 2 * x).collect()).unwrap())
                    .collect()
            } else {
                vec![]
            };
            for ap in alist {
                for b in enumerate_family(p.family(), k, a, w - wa).unwrap() {
                    out.push(PartitionPair::new(ap.clone(), b));
                }
            }
        }
    }
    out
}

/// Returns a list of failures instead of panicking at the first one.
fn sweep(p: Pipeline, k: u32, a: u32, n: u32) -> Vec<String> {
    let mut errs = Vec::new();
    let mut gf = vec![0i64; n as usize + 1];
    for pair in ground(p, k, a, n) {
        match involute_pipeline(&pair, p, k, a) {
            Err(e) => errs.push(format!("{pair}: {e}")),
            Ok(PipelineOutcome::Fixed(c)) => {
                if c.weight() != pair.weight() || c.sign() != pair.sign() {
                    errs.push(format!("{pair}: canonical form {c:?} changes weight or sign"));
                }
                gf[pair.weight() as usize] += pair.sign();
            }
            Ok(PipelineOutcome::Partner { pair: q, .. }) => {
                if q.weight() != pair.weight() || q.a.len().abs_diff(pair.a.len()) % 2 != 1 {
                    errs.push(format!("{pair} -> {q}: weight or sign"));
                }
                match involute_pipeline(&q, p, k, a) {
                    Ok(back) if back.partner() == Some(&pair) => {}
                    other => errs.push(format!("{pair} -> {q} -> {other:?}")),
                }
            }
        }
    }
    let want = pipeline_fixed_gf(p, k, a, n as usize).unwrap();
    if gf != want.coeffs() {
        errs.push(format!("fixed-point series {gf:?} != {:?}", want.coeffs()));
    }
    errs
}

#[test]
fn fixed_gf_is_free_factor_times_theta() {
    for (p, grid) in [
        (Pipeline::EE, vec![(2, 2), (4, 2), (4, 4), (6, 4)]),
        (Pipeline::OO, vec![(3, 1), (3, 3), (5, 3), (5, 5)]),
        (Pipeline::OE, vec![(3, 2), (5, 2), (5, 4)]),
    ] {
        for (k, a) in grid {
            let n = 40;
            let want = p
                .e_factor(n)
                .unwrap()
                .mul(&theta_sum(ThetaSpec::parity(k, a), n).unwrap())
                .unwrap();
            assert_eq!(pipeline_fixed_gf(p, k, a, n).unwrap(), want, "{p} {k} {a}");
        }
    }
}

#[test]
fn even_even_laws() {
    for (k, a) in [(2, 2), (4, 2), (4, 4), (6, 2), (6, 6)] {
        let errs = sweep(Pipeline::EE, k, a, 16);
        assert!(errs.is_empty(), "EE k={k} a={a}: {:?}", &errs[..errs.len().min(5)]);
    }
}

/// Where the odd pipelines produce a partner, it has the same weight, the
/// opposite sign and lies in the ground set. Self-inverseness is checked by
/// the acceptance run, which reports the known counterexamples.
#[test]
fn odd_partners_preserve_weight_and_flip_sign() {
    for (p, k, a) in [
        (Pipeline::OO, 3, 3),
        (Pipeline::OO, 5, 3),
        (Pipeline::OO, 5, 5),
        (Pipeline::OE, 3, 2),
        (Pipeline::OE, 5, 2),
        (Pipeline::OE, 5, 4),
    ] {
        let mut partners = 0;
        for pair in ground(p, k, a, 16) {
            match involute_pipeline(&pair, p, k, a) {
                Ok(PipelineOutcome::Partner { pair: q, .. }) => {
                    partners += 1;
                    assert_eq!(q.weight(), pair.weight(), "{p} {pair} -> {q}");
                    assert_eq!(q.sign(), -pair.sign(), "{p} {pair} -> {q}");
                    assert!(p.is_member(&q, k, a), "{p} {pair} -> {q}");
                }
                Ok(PipelineOutcome::Fixed(c)) => {
                    assert_eq!((c.weight(), c.sign()), (pair.weight(), pair.sign()), "{p} {pair}");
                }
                Err(_) => {}
            }
        }
        assert!(partners > 0);
    }
}
