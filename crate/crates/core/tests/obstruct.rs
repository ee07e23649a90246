use num_bigint::BigInt;
use pretri_core::catops::{FreeModules, HomBifunctor, Preadditive};
use pretri_core::muro::{cone, generating_objects, r2_to_arrows, Z4Mat};
use pretri_core::obstruct::*;
use pretri_core::prescat::{compute_category, muro_r1, muro_r2};

fn z(rows: &[Vec<i64>], cols: usize) -> Z4Mat {
    Z4Mat::from_rows(rows, cols)
}

#[test]
fn reduction_extensions() {
    let ok = make_extension(reduction_extension(4, 2), vec![1, 2]).unwrap();
    assert_eq!(ok.kernel_order(0, 0), Some(2));
    assert_eq!(ok.kernel_order(1, 1), Some(16));
    assert!(matches!(make_extension(reduction_extension(8, 2), vec![1]), Err(ObstructError::KernelNotSquareZero)));
}

#[test]
fn triangles_extension_kernel_is_theta() {
    let objs = generating_objects();
    let data = make_extension(triangles_extension(), objs.clone()).unwrap();
    assert_eq!(data.kernel_order(3, 3), Some(2));
    assert!(kernel_is_theta(&objs));
}

#[test]
fn massey_two_two_two() {
    let two = z(&[vec![2]], 1);
    let m = massey_muro(&two, &two, &two).unwrap();
    let mut got: Vec<String> = m.coset.iter().map(|c| c.to_string()).collect();
    got.sort();
    assert_eq!(got, ["[[1]]", "[[3]]"]);
    assert!(m.result.consistent);
    assert!(m.result.exhaustive);
}

#[test]
fn massey_condition_on_cones() {
    for f in [z(&[vec![2]], 1), Z4Mat::zeros(1, 1), Z4Mat::identity(1), z(&[vec![2, 1], vec![0, 2]], 2)] {
        assert!(massey_condition(&f).unwrap(), "{f}");
        let _ = cone(&f);
    }
}

#[test]
fn identity_pushforward_recovers_total() {
    let ext = reduction_extension(4, 2);
    let d1 = CokernelBifunctor { ext: &ext, theta: &FullKernel(&ext) };
    let _ = d1;
    let p = pushforward(&ext, HomBifunctor(FreeModules::new(2)), |_: &usize, _: &usize, k: &[BigInt]| {
        k.iter().map(|x| x / BigInt::from(2)).collect()
    });
    for n in 0..3usize {
        assert_eq!(p.hom(&n, &n).group().order_u64(), FreeModules::new(4).hom(&n, &n).group().order_u64());
    }
}

#[test]
fn verdict_for_muro() {
    let r2 = muro_r2();
    let f = r2_to_arrows(&r2);
    let ext = triangles_extension();
    let v = is_pushforward_along(&ext, &MuroTheta, &r2, &f, 1 << 24).unwrap();
    assert!(v.is_not_pushforward(), "{v:?}");
    let v = is_pushforward_along(&ext, &FullKernel(&ext), &r2, &f, 1 << 24).unwrap();
    assert!(!v.is_not_pushforward());
    let _ = compute_category(&muro_r1(), 8).unwrap();
}

#[test]
fn k0_vanishes() {
    for bound in [2, 3] {
        let k = k0_muro(bound, 1 << 12).unwrap();
        assert!(k.group.is_trivial(), "bound {bound}: {}", k.group.describe());
        eprintln!("bound {bound}: {} relations, {} skipped", k.relations.len(), k.skipped_pairs);
    }
}

#[test]
fn verify_muro_passes() {
    let t = std::time::Instant::now();
    let r = verify_muro(&VerifyConfig::default()).unwrap();
    eprintln!("{}\n{:?}", r.to_text(), t.elapsed());
    assert!(r.all_pass());
}

#[test]
fn verify_controls() {
    let c = VerifyConfig { theta: ThetaChoice::FullKernel, ..VerifyConfig::default() };
    let r = verify_step(6, &c).unwrap();
    assert_eq!(r[0].verdict, CheckVerdict::Inconclusive);
    let c = VerifyConfig { drop_r2_relation: true, ..VerifyConfig::default() };
    let r = assemble(vec![verify_step(2, &c).unwrap()]);
    assert!(!r.step_passes(2));
}

#[test]
fn massey_over_r1_pushforward() {
    let two = z(&[vec![2]], 1);
    let m = massey_muro_r1(&two, &two, &two).unwrap();
    assert!(m.compatible);
    assert!(m.pushed.ambient.is_trivial());
    assert!(!m.equal);
}

#[test]
fn karoubi_extension_is_valid() {
    let ka = KaroubiExtension::new(triangles_extension());
    let mut objs = generating_objects();
    let t = pretri_core::muro::Triangles0;
    objs.push(pretri_core::catops::CompCategory::direct_sum(&t, &objs[0], &objs[3]).sum);
    let window = ka.window(&objs);
    eprintln!("{} Karoubi objects", window.len());
    let data = make_extension(ka, window).unwrap();
    assert!(data.kernels.len() > 16);
}

#[test]
fn massey_condition_window() {
    for f in representatives(2) {
        assert!(massey_condition(&f).unwrap(), "{f}");
    }
}
