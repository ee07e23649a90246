use pretri_core::abgrp::FinAbGroup;
use pretri_core::catops::{check_biproduct, Bifunctor, CompCategory, Preadditive, TodaBifunctor};
use pretri_core::muro::*;
use pretri_core::prescat::{check_functor, compute_category, muro_r, muro_r2};

fn m(rows: &[&[i64]]) -> Z4Mat {
    let r: Vec<Vec<i64>> = rows.iter().map(|x| x.to_vec()).collect();
    Z4Mat::from_rows(&r, 0)
}

fn dcit() -> [Arrow; 4] {
    let g = generating_objects();
    [g[0].clone(), g[1].clone(), g[2].clone(), g[3].clone()]
}

#[test]
fn diagonal_form_examples() {
    for (x, d) in [
        (m(&[&[2]]), m(&[&[2]])),
        (m(&[&[1, 2], &[2, 2]]), m(&[&[1, 0], &[0, 2]])),
        (m(&[&[2, 2], &[2, 2]]), m(&[&[2, 0], &[0, 0]])),
    ] {
        let (p, dd, q) = x.diagonal_form();
        assert_eq!(dd, d);
        assert_eq!(p.mul(&x).mul(&q), d);
        assert!(p.is_invertible() && q.is_invertible());
    }
}

#[test]
fn every_cone_in_window_is_acyclic() {
    for f in Triangles0.window(2) {
        let t = Triangles0.triangle(&f);
        assert!(t.is_acyclic(2), "{}", mat(&f));
        assert!(t.rotate().is_acyclic(2));
        assert!(t.rotate().rotate().is_acyclic(2));
    }
    let t = cone(&m(&[&[2]]));
    assert_eq!(t.rotate().rotate().rotate().f, m(&[&[3 * 2]]));
}

#[test]
fn triangles0_homs() {
    let [d, c, i, t] = dcit();
    let tri = Triangles0;
    assert_eq!(tri.hom(&t, &t).group().order_u64(), Some(16));
    assert_eq!(tri.theta_group(&t, &t), FinAbGroup::cyclic(2));
    assert_eq!(tri.theta_group(&t, &d), FinAbGroup::cyclic(2));
    assert!(tri.theta_group(&i, &t).is_trivial());
    let l = tri.lift_tr5(&t, &t, &m(&[&[1]]), &m(&[&[1]])).unwrap();
    assert_eq!(l.c, m(&[&[1]]));
    let l = tri.lift_tr5(&t, &t, &m(&[&[0]]), &m(&[&[0]])).unwrap();
    assert_eq!(l.c, m(&[&[0]]));
    assert!(tri.lift_tr5(&t, &t, &m(&[&[1]]), &m(&[&[0]])).is_err());
    let x = Tri0Mor { a: Z4Mat::zeros(0, 1), b: m(&[&[2]]), c: m(&[&[1]]) };
    assert!(x.is_valid(&tri.triangle(&t), &tri.triangle(&d)));
    assert!(tri.is_excising(&x));
    assert!(tri.is_excising_paranoid(&t, &d, &x, 2));
    let _ = c;
}

#[test]
fn triangles0_biproducts_and_translation() {
    let tri = Triangles0;
    let objs = dcit();
    for a in &objs {
        for b in &objs {
            assert!(check_biproduct(&tri, a, b));
        }
    }
    let t = &objs[3];
    let tt = tri.translate_obj(t).unwrap();
    let h = tri.hom(t, t);
    for x in h.elements().unwrap() {
        let y = tri.translate_mor(t, t, &x).unwrap();
        assert!(tri.hom(&tt, &tt).contains(&y));
    }
}

#[test]
fn upsilon_theta_tables() {
    let arrows = base_arrows();
    let toda = TodaBifunctor::new(&arrows);
    let tri = Triangles0;
    let objs = dcit();
    for f in &objs {
        for g in &objs {
            assert_eq!(toda.value(f, g).group(), &tri.theta_group(f, g));
        }
    }
    let [d, c, _, t] = dcit();
    assert!(tri.theta_mor(&t, &t).image().group.is_trivial());
    assert!(tri.theta_mor(&c, &d).is_isomorphism());
    assert!(is_theta_natural(&objs));
    for f in &objs {
        assert!(split_theta_iso(f, 1));
    }
}

#[test]
fn equivalences_are_functors() {
    let r = muro_r();
    assert!(check_functor(&r, &r_to_triangles(&r), &Triangles0));
    let r2 = muro_r2();
    assert!(check_functor(&r2, &r2_to_arrows(&r2), &base_arrows()));
    let fr = compute_category(&r, 8).unwrap();
    for x in 0..4 {
        for y in 0..4 {
            let objs = generating_objects();
            assert_eq!(
                fr.hom_group(x, y).order_u64(),
                Triangles0.hom(&objs[x], &objs[y]).group().order_u64()
            );
        }
    }
}

#[test]
fn pretriangles_and_homology() {
    let [_, _, i, t] = dcit();
    let p = Triangles0.pretriangle(&t).unwrap();
    assert_eq!(p.i_f.c, m(&[&[2]]));
    assert_eq!(p.j_f.c, m(&[&[2]]));
    assert!(Triangles0.pretriangle(&i).unwrap().j_f.c.is_zero());
    for f in Triangles0.window(1) {
        assert!(homology_check(1, &f).passed());
        assert!(conrep_bijection_holds(&f, 1));
        assert!(conrep_bijection_holds(&f, 2));
    }
}

#[test]
fn square_zero_rank_one() {
    let r = square_zero_violations(1);
    assert_eq!(r.arrows, 7);
    assert!(r.violations.is_empty());
}

#[test]
fn square_zero_rank_two() {
    let r = square_zero_violations(2);
    assert_eq!(r.arrows, 297);
    assert!(r.violations.is_empty());
}
