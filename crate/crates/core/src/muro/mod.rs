//! Muro's triangulated category `F(Z/4)` with identity translation.

mod checks;
mod cone;
mod triangles;
mod z4;

use alloc::vec::Vec;

pub use checks::{
    theta_log_order,
    conrep_bijection_holds, homology_check, is_theta_natural, split_theta_iso, square_zero_violations, HomologyCheck,
    SquareZeroReport,
};
pub use cone::{cone, exact_pair, TriangleData};
pub use triangles::{
    arrow, base_arrows, constraint_matrix, mat, post_mor, third_component, Arrow, Pretriangle, Tri0Mor, Triangles0,
};
pub use z4::{in_span, lex_min, span_elements, span_order_log2, Z4Mat};

use crate::catops::{ArrowObj, Raw};
use crate::prescat::FunctorData;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MuroError {
    #[error("square does not commute: f'a != bf")]
    NonCommutingSquare,
    #[error("no third component completes the morphism")]
    NoFillIn,
    #[error("lift is not unique")]
    AmbiguousLift,
}

/// The generating objects `d = (0 → Z/4)`, `c = (Z/4 → 0)`, `i = id`, `t = 2`,
/// in the object order of the built-in presentations.
pub fn generating_objects() -> Vec<Arrow> {
    let z = Z4Mat::zeros;
    alloc::vec![arrow(&z(1, 0)), arrow(&z(0, 1)), arrow(&Z4Mat::identity(1)), arrow(&Z4Mat::scalar(1, 2))]
}

fn scalar_or_empty(rows: usize, cols: usize, k: i64) -> Z4Mat {
    if rows == 0 || cols == 0 {
        Z4Mat::zeros(rows, cols)
    } else {
        Z4Mat::scalar(rows, k)
    }
}

/// Images `(a, b, c)` of `γ, φ, δ, ξ, η, ς` in `Triangles₀`; the arrow
/// category images are the pairs `(a, b)`.
pub const GENERATOR_TRIPLES: [(i64, i64, i64); 6] = [(1, 2, 0), (2, 1, 0), (0, 1, 2), (0, 2, 1), (1, 0, 2), (2, 0, 1)];

fn generator_triple(src: &ArrowObj<usize>, dst: &ArrowObj<usize>, (a, b, c): (i64, i64, i64)) -> Tri0Mor {
    let t = Triangles0;
    let (cs, cd) = (t.triangle(src).cone_rank(), t.triangle(dst).cone_rank());
    Tri0Mor {
        a: scalar_or_empty(dst.src, src.src, a),
        b: scalar_or_empty(dst.dst, src.dst, b),
        c: scalar_or_empty(cd, cs, c),
    }
}

fn endpoints(p: &crate::prescat::QuiverPresentation, objs: &[Arrow], k: usize) -> (Arrow, Arrow) {
    let ar = &p.arrows[k];
    (objs[ar.src].clone(), objs[ar.dst].clone())
}

/// `R → Triangles₀` on the generating objects.
pub fn r_to_triangles(p: &crate::prescat::QuiverPresentation) -> FunctorData<Arrow> {
    let objs = generating_objects();
    let arrow_map = (0..p.arrows.len())
        .map(|k| {
            let (s, d) = endpoints(p, &objs, k);
            generator_triple(&s, &d, GENERATOR_TRIPLES[k]).to_raw()
        })
        .collect();
    FunctorData { object_map: objs, arrow_map }
}

/// `R₂ → F(Z/4)^[1]` on the generating objects.
pub fn r2_to_arrows(p: &crate::prescat::QuiverPresentation) -> FunctorData<Arrow> {
    let objs = generating_objects();
    let arrow_map: Vec<Raw> = (0..p.arrows.len())
        .map(|k| {
            let (s, d) = endpoints(p, &objs, k);
            let x = generator_triple(&s, &d, GENERATOR_TRIPLES[k]);
            let mut v = x.a.to_raw();
            v.extend(x.b.to_raw());
            v
        })
        .collect();
    FunctorData { object_map: objs, arrow_map }
}
