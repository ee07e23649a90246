use num_bigint::BigInt;
use pretri_core::abgrp::FinAbGroup;
use pretri_core::catops::*;
use pretri_core::prescat::{compute_category, cyclic_ring};

fn z4() -> FreeModules {
    FreeModules::new(4)
}

fn r(v: &[i64]) -> Raw {
    raw_from_i64(v)
}

#[test]
fn additive_completion_of_cyclic_ring() {
    let f4 = compute_category(&cyclic_ring(4), 4).unwrap();
    let c = AdditiveCompletion::new(&f4, vec![0usize]);
    assert_eq!(c.hom(&vec![0], &vec![0]).group(), &FinAbGroup::cyclic(4));
    assert_eq!(c.hom(&vec![0, 0], &vec![0]).group().order_u64(), Some(16));
    assert!(c.hom(&vec![], &vec![0, 0]).group().is_trivial());
    for a in c.window(2) {
        for b in c.window(2) {
            assert!(check_biproduct(&c, &a, &b));
        }
    }
}

#[test]
fn arrow_hom_of_doubling() {
    let arrows = ArrowCategory::new(z4());
    let t = arrows.object(1, 1, &r(&[2]));
    assert_eq!(arrows.hom(&t, &t).group().order_u64(), Some(8));
    assert_eq!(arrows.translate_obj(&t).unwrap(), t);
    let id = arrows.id_arrow(&1);
    assert_eq!(arrows.hom(&id, &id).group(), &FinAbGroup::cyclic(4));
}

#[test]
fn toda_values() {
    let arrows = ArrowCategory::new(z4());
    let toda = TodaBifunctor::new(&arrows);
    let t = arrows.object(1, 1, &r(&[2]));
    let c = arrows.cobang(&1);
    let d = arrows.bang(&1);
    let i = arrows.id_arrow(&1);
    assert_eq!(toda.value(&c, &d).group(), &FinAbGroup::cyclic(4));
    assert_eq!(toda.value(&t, &t).group(), &FinAbGroup::cyclic(2));
    assert_eq!(toda.value(&t, &d).group(), &FinAbGroup::cyclic(2));
    assert_eq!(toda.value(&c, &t).group(), &FinAbGroup::cyclic(2));
    for x in [&t, &c, &d, &i] {
        assert!(toda.value(&i, x).group().is_trivial());
        assert!(toda.value(x, &i).group().is_trivial());
        assert!(toda.value(&d, x).group().is_trivial());
        assert!(toda.value(x, &c).group().is_trivial());
    }
}

#[test]
fn semidirect_examples() {
    let z2 = FreeModules::new(2);
    let s = SemidirectProduct::new(z2, HomBifunctor(z2));
    let m = s.join(&r(&[1]), &r(&[1]));
    let sq = s.compose(&1, &1, &1, &m, &m);
    assert!(s.hom(&1, &1).equal(&sq, &s.join(&r(&[1]), &r(&[0]))));
    let k = s.kernel_inclusion(&1, &1, &r(&[1]));
    assert!(s.hom(&1, &1).is_zero(&s.compose(&1, &1, &1, &k, &k)));
    for a in 0..=2 {
        for b in 0..=2 {
            assert!(check_biproduct(&s, &a, &b));
        }
    }
}

#[test]
fn ideals_and_quotients() {
    let c = z4();
    let win = c.window(2);
    let two = IdealData::Multiple(BigInt::from(2));
    assert!(is_ideal(&c, &two, &win));
    let sq = ideal_product(&c, &two, &two, &win);
    assert!(is_zero_ideal(&c, &sq, &win));
    let q = QuotientCategory::new(c, two);
    assert_eq!(q.hom(&1, &1).group(), &FinAbGroup::cyclic(2));
    assert!(q.kernel_recovers_ideal(&2, &1));
    assert!(reflects_isomorphisms(&q, &win).is_ok());
    let e = lift_idempotent(&q, &2, &r(&[1, 0, 0, 0]), 2).unwrap();
    assert_eq!(e, r(&[1, 0, 0, 0]));
    assert_eq!(lift_idempotent(&q, &1, &r(&[3]), 2).unwrap(), r(&[1]));
}

#[test]
fn karoubi_and_splitting() {
    let k = KaroubiEnvelope::new(z4());
    assert_eq!(k.idempotents(&1).len(), 2);
    let arrows = ArrowCategory::new(z4());
    let f = arrows.object(2, 2, &r(&[2, 0, 0, 2]));
    let p = r(&[1, 0, 0, 0]);
    let c = r(&[1, 0]);
    let d = r(&[1, 0]);
    let ab = arrows.pair(&p, &p);
    let sp = split_arrow_idempotent(&arrows, &f, &1, &1, (&c, &d), (&c, &d), &ab).unwrap();
    assert_eq!(sp.g.map, r(&[2]));
}

#[test]
fn cross_effects() {
    let z2 = FreeModules::new(2);
    assert!(cross_effect2(&z2, &HomFunctor(1usize), &1, &1).is_trivial());
    let g = cross_effect2(&z2, &TensorSquare(HomFunctor(1usize)), &1, &1);
    assert_eq!(g.order_u64(), Some(4));
    assert!(cross_effect2(&z2, &TensorSquare(HomFunctor(1usize)), &0, &1).is_trivial());
}
