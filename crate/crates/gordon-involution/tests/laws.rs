use gordon_involution::{GordonInvolution, InvolutionOutcome};
use partition_core::{distinct_partitions, enumerate_family, Family, PartitionPair};
use qseries::{family_gf, poch_inf, theta_sum, Series, Sign, ThetaSpec};
use rayon::prelude::*;

fn ground(k: u32, a: u32, n: u32) -> Vec<PartitionPair> {
    let mut out = Vec::new();
    for w in 0..=n {
        for wa in 0..=w {
            for a_part in distinct_partitions(wa) {
                for b in enumerate_family(Family::B, k, a, w - wa).unwrap() {
                    out.push(PartitionPair::new(a_part.clone(), b));
                }
            }
        }
    }
    out
}

fn sweep(k: u32, a: u32, n: u32) {
    let g = GordonInvolution::new(k, a).unwrap();
    let pairs = ground(k, a, n);
    let fixed: Vec<(u64, i64)> = pairs
        .par_iter()
        .filter_map(|p| match g.involute(p).unwrap() {
            InvolutionOutcome::Fixed(tag) => {
                assert_eq!(g.match_fixed(p), Some(tag), "{p}");
                Some((p.weight(), p.sign()))
            }
            InvolutionOutcome::Partner(m) => {
                let q = &m.pair;
                assert!(g.is_member(q), "{p} -> {q}");
                assert_eq!(q.weight(), p.weight(), "{p} -> {q}");
                assert_eq!(q.a.len().abs_diff(p.a.len()), 1, "{p} -> {q}");
                let back = g.involute(q).unwrap();
                assert_eq!(back.partner(), Some(p), "{p} -> {q} -> {back:?}");
                None
            }
        })
        .collect();
    let mut gf = vec![0i64; n as usize + 1];
    for (w, s) in fixed {
        gf[w as usize] += s;
    }
    let theta: Series = theta_sum(ThetaSpec::gordon(k, a), n as usize).unwrap();
    assert_eq!(gf, theta.coeffs(), "k={k} a={a}");
    assert_eq!(g.fixed_gf(n as usize).unwrap(), theta);

    // the signed count of the whole space, computed independently
    let mut total = vec![0i64; n as usize + 1];
    for p in &pairs {
        total[p.weight() as usize] += p.sign();
    }
    let lhs = poch_inf::<i64>(Sign::Plus, 1, 1, n as usize)
        .unwrap()
        .mul(&family_gf(Family::B, k, a, n as usize).unwrap())
        .unwrap();
    assert_eq!(total, lhs.coeffs());
    assert_eq!(lhs, theta);
}

#[test]
fn involution_laws_small_grid() {
    for k in 2..=5 {
        for a in 1..=k {
            sweep(k, a, 15);
        }
    }
}

#[test]
fn involution_laws_k3_deeper() {
    sweep(3, 3, 20);
    sweep(3, 1, 20);
}

#[test]
fn templates_have_theta_weights() {
    for k in 2..=6u32 {
        for a in 1..=k {
            let g = GordonInvolution::new(k, a).unwrap();
            for n in 1..=6u32 {
                let (k2, a2, n2) = (2 * k as i64, 2 * a as i64, n as i64);
                // twice the weights (k+½)n² ± (k−a+½)n
                let w1 = (k2 + 1) * n2 * n2 + (k2 - a2 + 1) * n2;
                let w2 = (k2 + 1) * n2 * n2 - (k2 - a2 + 1) * n2;
                for (fam, w) in [(1, w1), (2, w2)] {
                    let p = g.fixed_point(fam, n).unwrap();
                    assert_eq!(2 * p.weight() as i64, w);
                    assert_eq!(p.a.len() as u32, n);
                    assert!(g.is_member(&p));
                }
            }
        }
    }
}

#[test]
fn weight_seventeen_has_no_fixed_point() {
    let g = GordonInvolution::new(3, 3).unwrap();
    for p in ground(3, 3, 17).into_iter().filter(|p| p.weight() == 17) {
        assert!(matches!(g.involute(&p).unwrap(), InvolutionOutcome::Partner(_)), "{p}");
    }
}

#[test]
fn franklin_on_k1() {
    let g = GordonInvolution::with_degenerate(1, 1).unwrap();
    let mut gf = vec![0i64; 31];
    for w in 0..=30 {
        for a in distinct_partitions(w) {
            let p = PartitionPair::new(a, Default::default());
            match g.involute(&p).unwrap() {
                InvolutionOutcome::Fixed(_) => gf[w as usize] += p.sign(),
                InvolutionOutcome::Partner(m) => {
                    assert_eq!(g.involute(&m.pair).unwrap().partner(), Some(&p))
                }
            }
        }
    }
    let euler = poch_inf::<i64>(Sign::Plus, 1, 1, 30).unwrap();
    assert_eq!(gf, euler.coeffs());
}

/// Rows of the published alpha table for k = a = 3. The table disagrees with
/// the alpha formula, so these record what the formula gives rather than
/// what was tabulated: (6 | 5,5,1) goes to (5,1 | 5,5,1), not (5 | 5,4,3).
/// The tabulated image is instead a gamma-domain pair of class U(2,4).
#[test]
fn alpha_table_rows_follow_the_formula() {
    let g = GordonInvolution::new(3, 3).unwrap();
    let pp = |a: &[u32], b: &[u32]| PartitionPair::from_parts(a.to_vec(), b.to_vec()).unwrap();
    let partner = |p: &PartitionPair| match g.involute(p).unwrap() {
        InvolutionOutcome::Partner(m) => (m.label.to_string(), m.pair),
        other => panic!("{p}: {other:?}"),
    };

    let (label, image) = partner(&pp(&[6], &[5, 5, 1]));
    assert_eq!(label, "U(1,2)");
    assert_eq!(image, pp(&[5, 1], &[5, 5, 1]));
    assert_eq!(partner(&image).1, pp(&[6], &[5, 5, 1]));

    let (label, _) = partner(&pp(&[5], &[5, 4, 3]));
    assert_eq!(label, "U(2,4)");
}
