use pretri_core::abgrp::FinAbGroup;
use pretri_core::prescat::{compute_category, muro_r, muro_r1, muro_r2, PresentedCategory};

fn obj(c: &PresentedCategory, n: &str) -> usize {
    c.presentation.object(n).unwrap()
}

fn hom(c: &PresentedCategory, x: &str, y: &str) -> FinAbGroup {
    c.hom_group(obj(c, x), obj(c, y)).clone()
}

#[test]
fn muro_r_hom_table() {
    let t = std::time::Instant::now();
    let r = compute_category(&muro_r(), 8).unwrap();
    eprintln!("R stabilized at {} in {:?}", r.truncation_used, t.elapsed());
    for x in ["d", "c", "i", "t"] {
        for y in ["d", "c", "i", "t"] {
            eprintln!("Hom({x},{y}) = {}", hom(&r, x, y));
        }
    }
    let z4 = FinAbGroup::cyclic(4);
    for (x, y) in [("d", "c"), ("c", "i"), ("i", "d")] {
        assert!(hom(&r, x, y).is_trivial());
    }
    assert_eq!(hom(&r, "d", "t"), z4);
    assert_eq!(hom(&r, "t", "t").order_u64(), Some(16));
}

#[test]
fn muro_r1_r2() {
    let r1 = compute_category(&muro_r1(), 8).unwrap();
    let r2 = compute_category(&muro_r2(), 8).unwrap();
    assert_eq!(hom(&r2, "t", "t").order_u64(), Some(8));
    assert_eq!(hom(&r1, "t", "d"), FinAbGroup::cyclic(2));
}
