use alloc::vec::Vec;

use super::presentation::{QuiverPresentation, Relation};

const OBJECTS: [&str; 4] = ["d", "c", "i", "t"];
const ARROWS: [(&str, &str, &str); 6] = [
    ("gamma", "i", "t"),
    ("phi", "t", "i"),
    ("delta", "d", "t"),
    ("xi", "t", "d"),
    ("eta", "t", "c"),
    ("varsigma", "c", "t"),
];

fn must(p: Result<QuiverPresentation, super::PresError>) -> QuiverPresentation {
    p.expect("built-in presentation is well formed")
}

/// Muro's quiver `R`: objects d, c, i, t and six arrows, torsion 4.
pub fn muro_r() -> QuiverPresentation {
    let mut p = must(QuiverPresentation::new(&OBJECTS, &ARROWS, Some(4)));
    let rels: [&[(i64, &[&str])]; 9] = [
        &[(2, &["delta", "xi"])],
        &[(2, &["varsigma", "eta"])],
        &[(1, &["eta", "delta"])],
        &[(1, &["phi", "varsigma"])],
        &[(1, &["xi", "gamma"])],
        &[(1, &["xi", "delta"]), (-2, &["id(d)"])],
        &[(1, &["eta", "varsigma"]), (-2, &["id(c)"])],
        &[(1, &["phi", "gamma"]), (-2, &["id(i)"])],
        &[(1, &["gamma", "phi"]), (-1, &["delta", "xi"]), (-1, &["varsigma", "eta"])],
    ];
    for r in rels {
        p.add_relation(r).expect("built-in relation is well formed");
    }
    p
}

/// Extra relations `2ξ = 0, 2ς = 0, ξς = 0` defining `R₁`.
pub fn r1_extra(r: &QuiverPresentation) -> Vec<Relation> {
    let rels: [&[(i64, &[&str])]; 3] =
        [&[(2, &["xi"])], &[(2, &["varsigma"])], &[(1, &["xi", "varsigma"])]];
    rels.iter().map(|t| r.relation(t).expect("well formed")).collect()
}

/// Extra relation `γφ = 2·id_t` defining `R₂` from `R₁`.
pub fn r2_extra(r: &QuiverPresentation) -> Vec<Relation> {
    alloc::vec![r.relation(&[(1, &["gamma", "phi"]), (-2, &["id(t)"])]).expect("well formed")]
}

pub fn muro_r1() -> QuiverPresentation {
    let r = muro_r();
    let extra = r1_extra(&r);
    must(super::quotient_presentation(&r, &extra))
}

pub fn muro_r2() -> QuiverPresentation {
    let r1 = muro_r1();
    let extra = r2_extra(&r1);
    must(super::quotient_presentation(&r1, &extra))
}

/// One object with endomorphism ring `Z/n`.
pub fn cyclic_ring(n: u64) -> QuiverPresentation {
    must(QuiverPresentation::new(&["x"], &[], Some(n)))
}

/// Looks up `R`, `R1`, `R2`, `F4`, `F2`, `F8`.
pub fn builtin(name: &str) -> Option<QuiverPresentation> {
    match name {
        "R" => Some(muro_r()),
        "R1" => Some(muro_r1()),
        "R2" => Some(muro_r2()),
        "F2" => Some(cyclic_ring(2)),
        "F4" => Some(cyclic_ring(4)),
        "F8" => Some(cyclic_ring(8)),
        _ => None,
    }
}

pub const BUILTIN_NAMES: [&str; 6] = ["R", "R1", "R2", "F2", "F4", "F8"];
