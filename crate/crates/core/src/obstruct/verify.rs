use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::extension::triangles_extension;
use super::pushforward::{
    hom_orders, is_pushforward_along, pushforward, theta1_quotient, CokernelBifunctor, FullKernel, MuroTheta,
    Theta1Literal, Verdict,
};
use super::ObstructError;
use crate::abgrp::{is_exact_at, FinAbGroup, GroupMor};
use crate::catops::{Bifunctor, Preadditive, TodaBifunctor};
use crate::muro::{base_arrows, generating_objects, r2_to_arrows, r_to_triangles, Arrow, Triangles0};
use crate::prescat::{
    check_functor, compute_category, failing_relations, functor_hom_map, muro_r, muro_r1, muro_r2, section_search,
    FunctorData, PresentedCategory, QuiverPresentation, DEFAULT_SEARCH_CAP,
};

pub const NAMES: [&str; 4] = ["d", "c", "i", "t"];
pub const STEP_COUNT: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING-KEBAB-CASE")]
pub enum CheckVerdict {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckVerdict {
    fn of(ok: bool) -> Self {
        if ok {
            CheckVerdict::Pass
        } else {
            CheckVerdict::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            CheckVerdict::Pass => "PASS",
            CheckVerdict::Fail => "FAIL",
            CheckVerdict::Inconclusive => "INCONCLUSIVE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    pub statement: String,
    pub window: String,
    pub verdict: CheckVerdict,
    pub witness: String,
}

impl Check {
    fn new(id: &str, statement: &str, window: &str, ok: bool, witness: String) -> Self {
        Check { id: id.into(), statement: statement.into(), window: window.into(), verdict: CheckVerdict::of(ok), witness }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.verdict == CheckVerdict::Pass)
    }

    pub fn step_passes(&self, step: usize) -> bool {
        let prefix = format!("{step}.");
        self.checks.iter().filter(|c| c.id.starts_with(&prefix)).all(|c| c.verdict == CheckVerdict::Pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            out += &format!("[{}] {} {}\n    window: {}\n    witness: {}\n", c.verdict.as_str(), c.id, c.statement, c.window, c.witness);
        }
        let pass = self.checks.iter().filter(|c| c.verdict == CheckVerdict::Pass).count();
        out += &format!("{pass}/{} checks passed\n", self.checks.len());
        out
    }
}

/// Which transformation into `Θ` step 6 pushes along.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ThetaChoice {
    Theta,
    /// Control: all of `Θ`.
    FullKernel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub l_max: usize,
    pub cap: u64,
    pub theta: ThetaChoice,
    /// Control: use `R₁` (without `γφ = 2·id`) where `R₂` is expected.
    pub drop_r2_relation: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { l_max: 8, cap: DEFAULT_SEARCH_CAP, theta: ThetaChoice::Theta, drop_r2_relation: false }
    }
}

impl VerifyConfig {
    fn r2(&self) -> QuiverPresentation {
        if self.drop_r2_relation {
            muro_r1()
        } else {
            muro_r2()
        }
    }

    fn window(&self) -> String {
        format!("objects d,c,i,t; L_max={}", self.l_max)
    }
}

fn table<T: core::fmt::Display>(f: impl Fn(usize, usize) -> T) -> String {
    let mut rows = Vec::new();
    for x in 0..4 {
        let cells: Vec<String> = (0..4).map(|y| format!("{}{}:{}", NAMES[x], NAMES[y], f(x, y))).collect();
        rows.push(cells.join(" "));
    }
    rows.join("; ")
}

fn order_table(c: &PresentedCategory) -> Vec<Vec<Option<u64>>> {
    (0..4).map(|x| (0..4).map(|y| c.hom_group(x, y).order_u64()).collect()).collect()
}

fn show_orders(t: &[Vec<Option<u64>>]) -> String {
    table(|x, y| t[x][y].map_or("inf".to_string(), |n| n.to_string()))
}

fn obj(name: &str) -> usize {
    NAMES.iter().position(|n| *n == name).expect("generating object")
}

fn step1(cfg: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    let w = cfg.window();
    let r = compute_category(&muro_r(), cfg.l_max)?;
    let h = |x: &str, y: &str| r.hom_group(obj(x), obj(y)).clone();
    let z4 = FinAbGroup::cyclic(4);
    let zeros = [("d", "c"), ("c", "i"), ("i", "d")];
    let fours = [("d", "i"), ("d", "t"), ("c", "d"), ("c", "t"), ("i", "c"), ("i", "i"), ("t", "d"), ("t", "i"), ("t", "c")];
    let mut ok = zeros.iter().all(|(x, y)| h(x, y).is_trivial()) && fours.iter().all(|(x, y)| h(x, y) == z4);
    // a cyclic group of order 4 generated by the identity is Z/4 as a ring
    for x in ["d", "c"] {
        let i = obj(x);
        ok &= h(x, x) == z4 && r.hom_group(i, i).element_order(r.identity_element(i)) == Some(BigInt::from(4));
    }
    let mut checks =
        vec![Check::new("1.R", "Hom_R on d,c,i,t: zero, Z/4 and End(d) = End(c) = Z/4 as rings", &w, ok, table(|x, y| r.hom_group(x, y).describe()))];

    let t = obj("t");
    let htt = r.hom_group(t, t);
    let el = |names: &[&str]| r.path_element(&r.presentation.path(names).expect("path"));
    let (gp, dx, se) = (el(&["gamma", "phi"]), el(&["delta", "xi"]), el(&["varsigma", "eta"]));
    let two = Some(BigInt::from(2));
    let ok = htt.order_u64() == Some(16)
        && htt.element_order(r.identity_element(t)) == Some(BigInt::from(4))
        && [&gp, &dx, &se].iter().all(|x| htt.element_order(x) == two)
        && htt.add(&dx, &se) == gp;
    checks.push(Check::new(
        "1.Rtt",
        "End_R(t) has order 16 with 2-torsion gamma.phi, delta.xi, varsigma.eta and gamma.phi = delta.xi + varsigma.eta",
        &w,
        ok,
        format!(
            "End_R(t) = {}; gamma.phi has order {}; discrepancy: gamma.phi is nonzero, not congruent to 0 mod 2",
            htt.describe(),
            htt.element_order(&gp).map_or("inf".into(), |o| o.to_string())
        ),
    ));

    let r1 = order_table(&compute_category(&muro_r1(), cfg.l_max)?);
    let ext = triangles_extension();
    let p1 = hom_orders(&pushforward(&ext, Theta1Literal, theta1_quotient));
    checks.push(Check::new(
        "1.R1",
        "Hom_{R1} orders equal those of the pushforward of Triangles0 along Theta -> Theta1",
        &w,
        r1 == p1,
        format!("R1 {}; pushforward {}", show_orders(&r1), show_orders(&p1)),
    ));

    let r2 = order_table(&compute_category(&cfg.r2(), cfg.l_max)?);
    let arr = hom_orders(&base_arrows());
    checks.push(Check::new(
        "1.R2",
        "Hom_{R2} orders equal those of the arrow category of F(Z/4)",
        &w,
        r2 == arr,
        format!("R2 {}; arrows {}", show_orders(&r2), show_orders(&arr)),
    ));
    Ok(checks)
}

fn equivalence_check<D: Preadditive<Obj = Arrow>>(
    id: &str,
    statement: &str,
    w: &str,
    c: &PresentedCategory,
    f: &FunctorData<Arrow>,
    dst: &D,
) -> Check {
    let p = &c.presentation;
    let functor = check_functor(p, f, dst);
    let mut bad = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            if !functor_hom_map(c, f, dst, x, y).is_isomorphism() {
                bad.push(format!("{}{}", NAMES[x], NAMES[y]));
            }
        }
    }
    let witness = if functor && bad.is_empty() {
        "all relations hold; 16 hom maps are isomorphisms".into()
    } else {
        format!("failing relations {:?}; non-isomorphic pairs {:?}", failing_relations(p, f, dst), bad)
    };
    Check::new(id, statement, w, functor && bad.is_empty(), witness)
}

fn step2(cfg: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    let w = cfg.window();
    let r2 = compute_category(&cfg.r2(), cfg.l_max)?;
    let r = compute_category(&muro_r(), cfg.l_max)?;
    Ok(vec![
        equivalence_check(
            "2.R2",
            "R2 -> arrow category is a functor, bijective on homs of generating objects",
            &w,
            &r2,
            &r2_to_arrows(&r2.presentation),
            &base_arrows(),
        ),
        equivalence_check(
            "2.R",
            "R -> Triangles0 is a functor, bijective on homs of generating objects",
            &w,
            &r,
            &r_to_triangles(&r.presentation),
            &Triangles0,
        ),
    ])
}

fn upsilon_expected(x: usize, y: usize) -> u64 {
    match (NAMES[x], NAMES[y]) {
        ("c", "d") => 4,
        ("t", "d") | ("t", "t") | ("c", "t") => 2,
        _ => 1,
    }
}

fn step3(cfg: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    let w = "objects d,c,i,t".to_string();
    let objs = generating_objects();
    let arrows = base_arrows();
    let toda = TodaBifunctor::new(&arrows);
    let tri = Triangles0;
    let ext = triangles_extension();
    let coker = CokernelBifunctor { ext: &ext, theta: &MuroTheta };
    let ups = |x: usize, y: usize| toda.value(&objs[x], &objs[y]).group().clone();
    let th = |x: usize, y: usize| tri.theta_group(&objs[x], &objs[y]);
    let mut checks = Vec::new();
    let ok = (0..4).all(|x| (0..4).all(|y| ups(x, y).order_u64() == Some(upsilon_expected(x, y)) && ups(x, y).ngens() <= 1));
    checks.push(Check::new("3.upsilon", "Upsilon values: Z/4 at (c,d), Z/2 at (t,d),(t,t),(c,t), zero elsewhere", &w, ok, table(|x, y| ups(x, y).describe())));
    let ok = (0..4).all(|x| (0..4).all(|y| ups(x, y) == th(x, y)));
    checks.push(Check::new("3.theta-values", "Theta agrees with Upsilon on all pairs", &w, ok, table(|x, y| th(x, y).describe())));
    let t = obj("t");
    let tt = tri.theta_mor(&objs[t], &objs[t]);
    checks.push(Check::new("3.theta-tt", "theta(t,t) = 0", &w, tt.is_zero(), format!("theta(t,t): {} -> {}", tt.source().describe(), tt.target().describe())));
    let mut bad = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            if (x != t || y != t) && !tri.theta_mor(&objs[x], &objs[y]).is_isomorphism() {
                bad.push(format!("{}{}", NAMES[x], NAMES[y]));
            }
        }
    }
    checks.push(Check::new("3.theta-split", "theta is an isomorphism when one argument is split", &w, bad.is_empty(), format!("non-isomorphic pairs {bad:?}")));
    let lit = |x: usize, y: usize| Theta1Literal.value(&objs[x], &objs[y]).group().clone();
    let ck = |x: usize, y: usize| coker.value(&objs[x], &objs[y]).group().clone();
    let ok = (0..4).all(|x| (0..4).all(|y| lit(x, y) == ck(x, y)));
    checks.push(Check::new("3.theta1", "Theta1 table (Z/2 at (t,t), zero elsewhere) equals Coker(theta)", &w, ok, table(|x, y| ck(x, y).describe())));
    let _ = cfg;
    Ok(checks)
}

/// `Θ(f, g) → Θ₁(f, g)` in normal-form coordinates.
fn theta_to_theta1(f: &Arrow, g: &Arrow) -> GroupMor {
    let tri = Triangles0;
    let th = tri.theta_space(f, g);
    let t1 = Theta1Literal.value(f, g);
    let cols: Vec<Vec<BigInt>> = th
        .basis()
        .iter()
        .map(|c| {
            let cm = crate::muro::Z4Mat::from_raw(tri.triangle(g).cone_rank(), tri.triangle(f).cone_rank(), c);
            t1.coords(&theta1_quotient(f, g, &tri.kernel_element(f, g, &cm))).0
        })
        .collect();
    GroupMor::from_columns(th.group().clone(), t1.group().clone(), &cols)
}

fn step4(_: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    let objs = generating_objects();
    let tri = Triangles0;
    let mut bad = Vec::new();
    for x in 0..4 {
        for y in 0..4 {
            let (f, g) = (&objs[x], &objs[y]);
            let a = tri.theta_mor(f, g);
            let b = theta_to_theta1(f, g);
            if !(is_exact_at(&a, &b)? && b.is_surjective()) {
                bad.push(format!("{}{}", NAMES[x], NAMES[y]));
            }
        }
    }
    Ok(vec![Check::new(
        "4.exact",
        "Upsilon -> Theta -> Theta1 -> 0 is exact on every pair",
        "objects d,c,i,t",
        bad.is_empty(),
        format!("16 pairs checked; failing {bad:?}"),
    )])
}

fn step5(cfg: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    let w = format!("{}; search cap {}", cfg.window(), cfg.cap);
    let r = compute_category(&muro_r(), cfg.l_max)?;
    let r1 = compute_category(&muro_r1(), cfg.l_max)?;
    let r2 = compute_category(&cfg.r2(), cfg.l_max)?;
    let mut checks = Vec::new();
    for (id, name, src) in [("5.p", "p: R1 -> R2 has no section", &r1), ("5.q", "q: R -> R2 has no section", &r)] {
        let out = section_search(&FunctorData::quotient_map(src, &r2), src, &r2, cfg.cap)?;
        checks.push(Check::new(id, name, &w, !out.has_section(), format!("{out:?}")));
    }
    Ok(checks)
}

fn step6(cfg: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    let w = format!("{}; search cap {}", cfg.window(), cfg.cap);
    let r2 = cfg.r2();
    let f = r2_to_arrows(&r2);
    let ext = triangles_extension();
    let verdict = match cfg.theta {
        ThetaChoice::Theta => is_pushforward_along(&ext, &MuroTheta, &r2, &f, cfg.cap)?,
        ThetaChoice::FullKernel => is_pushforward_along(&ext, &FullKernel(&ext), &r2, &f, cfg.cap)?,
    };
    let mut c = Check::new(
        "6.verdict",
        "the Triangles0 extension is not a pushforward along theta",
        &w,
        verdict.is_not_pushforward(),
        match &verdict {
            Verdict::NotPushforward { certificate } => format!("NOT-PUSHFORWARD {certificate:?}"),
            Verdict::InconclusiveNecessaryConditionPassed { section } => {
                format!("INCONCLUSIVE-NECESSARY-CONDITION-PASSED {section:?}")
            }
        },
    );
    if !verdict.is_not_pushforward() {
        c.verdict = CheckVerdict::Inconclusive;
    }
    Ok(vec![c])
}

/// Step `i` in `1..=6`.
pub fn verify_step(i: usize, cfg: &VerifyConfig) -> Result<Vec<Check>, ObstructError> {
    match i {
        1 => step1(cfg),
        2 => step2(cfg),
        3 => step3(cfg),
        4 => step4(cfg),
        5 => step5(cfg),
        6 => step6(cfg),
        _ => Ok(Vec::new()),
    }
}

pub fn assemble(steps: Vec<Vec<Check>>) -> Report {
    Report { checks: steps.into_iter().flatten().collect() }
}

pub fn verify_muro(cfg: &VerifyConfig) -> Result<Report, ObstructError> {
    let steps = (1..=STEP_COUNT).map(|i| verify_step(i, cfg)).collect::<Result<Vec<_>, _>>()?;
    Ok(assemble(steps))
}
