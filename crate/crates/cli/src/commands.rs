use num_bigint::BigInt;
use pretri_core::abgrp::{group_from_presentation, smith_normal_form, IntMatrix};
use pretri_core::catops::{is_idempotent, Bifunctor, Preadditive, TodaBifunctor};
use pretri_core::muro::{base_arrows, cone, generating_objects, is_theta_natural, Triangles0};
use pretri_core::obstruct::{
    assemble, k0_muro, make_extension, massey_muro, verify_step, KaroubiExtension, ObstructError, Report,
    ThetaChoice, VerifyConfig, STEP_COUNT,
};
use pretri_core::prescat::{compute_category, section_search, FunctorData, PresError, SectionOutcome};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{load_presentation, parse_arrow, parse_int_rows, parse_z4};
use crate::CliError;

pub struct Output {
    pub text: String,
    /// Pretty JSON, newline terminated.
    pub machine: String,
    pub ok: bool,
}

fn doc<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

impl Output {
    fn new(text: String, machine: Value) -> Self {
        Output { text, machine: doc(&machine), ok: true }
    }

    fn checked(text: String, machine: Value, ok: bool) -> Self {
        Output { text, machine: doc(&machine), ok }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub rank_bound: usize,
    pub l_max: usize,
    pub paranoid: bool,
    pub budget: u64,
    pub threads: Option<usize>,
}

impl From<PresError> for CliError {
    fn from(e: PresError) -> Self {
        match e {
            PresError::SearchBudgetExceeded { cap } => CliError::Budget(cap),
            e => CliError::Input(e.to_string()),
        }
    }
}

impl From<ObstructError> for CliError {
    fn from(e: ObstructError) -> Self {
        match e {
            ObstructError::BudgetExceeded { cap } => CliError::Budget(cap),
            ObstructError::Pres(p) => p.into(),
            e => CliError::Input(e.to_string()),
        }
    }
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

pub fn snf(matrix: &str, o: &Options) -> Result<Output, CliError> {
    let m = IntMatrix::from_rows(&parse_int_rows(matrix)?);
    let s = smith_normal_form(&m);
    let inv = strings(&s.invariant_factors());
    let mut text = format!("D = {}\nU = {}\nV = {}\ninvariant factors: [{}]\n", s.d, s.u, s.v, inv.join(", "));
    let mut out_ok = true;
    if o.paranoid {
        let ok = s.u.mul(&m).mul(&s.v) == s.d && s.u.is_unimodular() && s.v.is_unimodular();
        text += &format!("UMV = D, U and V unimodular: {ok}\n");
        out_ok = ok;
    }
    let machine = json!({"d": s.d.to_string(), "u": s.u.to_string(), "v": s.v.to_string(), "invariant_factors": inv});
    Ok(Output::checked(text, machine, out_ok))
}

pub fn group(matrix: &str) -> Result<Output, CliError> {
    let rows = parse_int_rows(matrix)?;
    let m = IntMatrix::from_rows(&rows);
    let g = group_from_presentation(&m).group;
    let torsion = strings(g.torsion());
    let order = g.order().map(|n| n.to_string());
    let text = format!("{}\norder: {}\n", g.describe(), order.clone().unwrap_or_else(|| "infinite".into()));
    Ok(Output::new(text, json!({"group": g.describe(), "torsion": torsion, "free_rank": g.free_rank(), "order": order})))
}

pub fn homtable(spec: &str, o: &Options) -> Result<Output, CliError> {
    let p = load_presentation(spec)?;
    let c = compute_category(&p, o.l_max)?;
    let mut text = format!("stabilized at L = {}\n", c.truncation_used);
    let mut entries = Vec::new();
    for x in 0..c.object_count() {
        for y in 0..c.object_count() {
            let (sx, sy) = (c.object_name(x), c.object_name(y));
            let g = c.hom_group(x, y);
            let gens = c.generator_names(x, y);
            text += &format!("Hom({sx},{sy}) = {}    generators: {}\n", g.describe(), gens.join(", "));
            entries.push(json!({"src": sx, "dst": sy, "group": g.describe(), "order": g.order().map(|n| n.to_string()), "generators": gens}));
        }
    }
    Ok(Output::new(text, json!({"presentation": spec, "truncation": c.truncation_used, "homs": entries})))
}

pub fn cone_cmd(matrix: &str, o: &Options) -> Result<Output, CliError> {
    let f = parse_z4(matrix)?;
    let t = cone(&f);
    let mut text = format!("triangle ({}; (Z/4)^{}; u={}; v={})\n", t.f, t.cone_rank(), t.u, t.v);
    let mut ok = true;
    let mut machine = json!({"f": t.f.to_string(), "cone_rank": t.cone_rank(), "u": t.u.to_string(), "v": t.v.to_string()});
    if o.paranoid {
        let acyclic = t.composites_vanish() && t.is_acyclic(o.rank_bound) && t.rotate().is_acyclic(o.rank_bound);
        text += &format!("acyclic with its rotation up to rank {}: {acyclic}\n", o.rank_bound);
        machine["acyclic"] = json!(acyclic);
        ok = acyclic;
    }
    Ok(Output::checked(text, machine, ok))
}

pub fn theta(f: &str, g: &str, o: &Options) -> Result<Output, CliError> {
    let (f, g) = (parse_arrow(f)?, parse_arrow(g)?);
    let t = Triangles0;
    let th = t.theta_group(&f, &g);
    let map = t.theta_mor(&f, &g);
    let mut text = format!(
        "Theta = {}\ntheta: {} -> {}  injective: {}  surjective: {}\n",
        th.describe(),
        map.source().describe(),
        map.target().describe(),
        map.is_injective(),
        map.is_surjective()
    );
    let mut machine = json!({"theta": th.describe(), "upsilon": map.source().describe(), "theta_injective": map.is_injective(), "theta_surjective": map.is_surjective()});
    let mut ok = true;
    if o.paranoid {
        let natural = is_theta_natural(&[f, g]);
        text += &format!("theta natural on the pair: {natural}\n");
        machine["natural"] = json!(natural);
        ok = natural;
    }
    Ok(Output::checked(text, machine, ok))
}

pub fn upsilon(f: &str, g: &str) -> Result<Output, CliError> {
    let (f, g) = (parse_arrow(f)?, parse_arrow(g)?);
    let arrows = base_arrows();
    let v = TodaBifunctor::new(&arrows).value(&f, &g);
    let text = format!("Upsilon = {}\n", v.group().describe());
    Ok(Output::new(text, json!({"upsilon": v.group().describe()})))
}

pub fn massey(f: &str, g: &str, h: &str) -> Result<Output, CliError> {
    let (f, g, h) = (parse_z4(f)?, parse_z4(g)?, parse_z4(h)?);
    let m = massey_muro(&f, &g, &h)?;
    let coset: Vec<String> = m.coset.iter().map(ToString::to_string).collect();
    let text = format!(
        "{{{}, {}, {}}} = {{{}}}\ncontains identity: {}\nlift pairs checked: {} (exhaustive: {})  consistent: {}\n",
        h,
        g,
        f,
        coset.join(", "),
        m.contains_identity,
        m.result.lifts_checked,
        m.result.exhaustive,
        m.result.consistent
    );
    let machine = json!({
        "coset": coset,
        "contains_identity": m.contains_identity,
        "lifts_checked": m.result.lifts_checked,
        "exhaustive": m.result.exhaustive,
        "consistent": m.result.consistent,
    });
    Ok(Output::checked(text, machine, m.result.consistent))
}

pub fn k0(o: &Options) -> Result<Output, CliError> {
    let k = k0_muro(o.rank_bound, o.budget)?;
    let text = format!(
        "K0 = {}\nwindow: ranks 0..={}, {} relations, {} pairs skipped at search bound {}\n",
        k.group.describe(),
        k.rank_bound,
        k.relations.len(),
        k.skipped_pairs,
        k.search_bound
    );
    let machine = json!({"k0": k.group.describe(), "rank_bound": k.rank_bound, "relations": k.relations.len(), "skipped_pairs": k.skipped_pairs, "search_bound": k.search_bound});
    Ok(Output::new(text, machine))
}

pub fn karoubi(spec: Option<&str>, o: &Options) -> Result<Output, CliError> {
    let Some(spec) = spec else {
        let ka = KaroubiExtension::new(pretri_core::obstruct::triangles_extension());
        let window = ka.window(&generating_objects());
        let n = window.len();
        let valid = make_extension(ka, window).is_ok();
        let text = format!("Karoubi envelope of the Triangles0 extension: {n} objects, singular extension: {valid}\n");
        return Ok(Output::checked(text, json!({"objects": n, "valid": valid}), valid));
    };
    let c = compute_category(&load_presentation(spec)?, o.l_max)?;
    let mut text = String::new();
    let mut rows = Vec::new();
    for x in 0..c.object_count() {
        let h = c.hom(&x, &x);
        let els = h.elements_capped(o.budget).map_err(|_| CliError::Budget(o.budget))?;
        let idem: Vec<String> = els.iter().filter(|e| is_idempotent(&c, &x, e)).map(|e| format!("{:?}", strings(e))).collect();
        text += &format!("{}: {} idempotents {}\n", c.object_name(x), idem.len(), idem.join(" "));
        rows.push(json!({"object": c.object_name(x), "idempotents": idem}));
    }
    Ok(Output::new(text, json!({"presentation": spec, "objects": rows})))
}

pub fn section(src: &str, dst: &str, o: &Options) -> Result<Output, CliError> {
    let (s, d) = (compute_category(&load_presentation(src)?, o.l_max)?, compute_category(&load_presentation(dst)?, o.l_max)?);
    if s.presentation.objects != d.presentation.objects || s.presentation.arrows != d.presentation.arrows {
        return Err(CliError::Input("target must be a quotient presentation of the source".into()));
    }
    let out = section_search(&FunctorData::quotient_map(&s, &d), &s, &d, o.budget)?;
    let text = match &out {
        SectionOutcome::Section { arrow_map, space_size, visited } => {
            format!("section found after {visited} of {space_size} candidates: {arrow_map:?}\n")
        }
        SectionOutcome::NoSection { space_size, visited, candidates_per_arrow } => {
            format!("no section: {visited} nodes, space {space_size}, candidates per arrow {candidates_per_arrow:?}\n")
        }
    };
    Ok(Output { text, machine: doc(&out), ok: true })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Control {
    None,
    FullKernel,
    DropR2Relation,
}

pub fn run_verify(o: &Options, control: Control) -> Result<Report, CliError> {
    let cfg = VerifyConfig {
        l_max: o.l_max,
        cap: o.budget,
        theta: if control == Control::FullKernel { ThetaChoice::FullKernel } else { ThetaChoice::Theta },
        drop_r2_relation: control == Control::DropR2Relation,
    };
    let run = || (1..=STEP_COUNT).into_par_iter().map(|i| verify_step(i, &cfg)).collect::<Result<Vec<_>, _>>();
    let steps = match o.threads {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Input(e.to_string()))?
            .install(run),
        None => run(),
    }?;
    Ok(assemble(steps))
}

pub fn verify_muro(o: &Options, control: Control) -> Result<Output, CliError> {
    let report = run_verify(o, control)?;
    let ok = report.all_pass();
    Ok(Output { text: report.to_text(), machine: doc(&report), ok })
}
