//! Hom groups of a quiver presentation by path-length truncation.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::presentation::{Path, QuiverPresentation};
use super::PresError;
use crate::abgrp::{group_from_presentation, FinAbGroup, GroupElement, GroupMor, IntMatrix, Presented};
use crate::catops::{HomSpace, Preadditive, Raw};

pub type Combo = Vec<(BigInt, Path)>;

struct LevelPair {
    paths: Vec<Path>,
    index: BTreeMap<Vec<usize>, usize>,
    presented: Presented,
}

struct Level {
    len: usize,
    n: usize,
    pairs: Vec<LevelPair>,
}

impl Level {
    fn pair(&self, x: usize, y: usize) -> &LevelPair {
        &self.pairs[x * self.n + y]
    }
}

fn all_paths(p: &QuiverPresentation, max_len: usize) -> Vec<Vec<Path>> {
    let n = p.objects.len();
    let mut by_pair: Vec<Vec<Path>> = vec![Vec::new(); n * n];
    let mut frontier: Vec<Path> = (0..n).map(Path::identity).collect();
    for _ in 0..=max_len {
        let mut next = Vec::new();
        for path in &frontier {
            by_pair[path.src * n + path.dst].push(path.clone());
            for (a, arrow) in p.arrows.iter().enumerate() {
                if arrow.src == path.dst {
                    let mut arrows = vec![a];
                    arrows.extend_from_slice(&path.arrows);
                    next.push(Path { src: path.src, dst: arrow.dst, arrows });
                }
            }
        }
        frontier = next;
    }
    for list in &mut by_pair {
        list.sort_by(|a, b| (a.len(), &a.arrows).cmp(&(b.len(), &b.arrows)));
    }
    by_pair
}

fn build_level(p: &QuiverPresentation, len: usize) -> Level {
    let n = p.objects.len();
    let paths = all_paths(p, len);
    let mut pairs = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let list = paths[x * n + y].clone();
            let index: BTreeMap<Vec<usize>, usize> =
                list.iter().enumerate().map(|(i, q)| (q.arrows.clone(), i)).collect();
            let mut rows: BTreeSet<Vec<BigInt>> = BTreeSet::new();
            for r in &p.relations {
                let (s, t) = r.endpoints().expect("validated relation");
                let m = r.max_len();
                if m > len {
                    continue;
                }
                for q in paths[x * n + s].iter().filter(|q| q.len() + m <= len) {
                    for pre in paths[t * n + y].iter().filter(|pre| pre.len() + q.len() + m <= len) {
                        let mut row = vec![BigInt::zero(); list.len()];
                        for (c, term) in &r.terms {
                            let full = pre.after(term).after(q);
                            row[index[&full.arrows]] += c;
                        }
                        if row.iter().any(|v| !v.is_zero()) {
                            rows.insert(row);
                        }
                    }
                }
            }
            if let Some(t) = p.torsion {
                for i in 0..list.len() {
                    let mut row = vec![BigInt::zero(); list.len()];
                    row[i] = BigInt::from(t);
                    rows.insert(row);
                }
            }
            let flat: Vec<BigInt> = rows.iter().flatten().cloned().collect();
            let rel = IntMatrix::from_data(rows.len(), list.len(), flat);
            let presented = group_from_presentation(&rel);
            pairs.push(LevelPair { paths: list, index, presented });
        }
    }
    Level { len, n, pairs }
}

/// Expresses every path of length `len + 1` through shorter ones, using
/// the relations visible at length `len + 1`.
fn reduction_table(lo: &Level, hi: &Level) -> Option<BTreeMap<Vec<usize>, Combo>> {
    let mut table = BTreeMap::new();
    for x in 0..lo.n {
        for y in 0..lo.n {
            let hp = hi.pair(x, y);
            let short = lo.pair(x, y).paths.len();
            if hp.paths.len() == short {
                continue;
            }
            let g = &hp.presented.group;
            let lattice: Vec<Raw> = (0..g.torsion().len())
                .map(|i| {
                    let mut v = vec![BigInt::zero(); g.ngens()];
                    v[i] = g.modulus(i);
                    v
                })
                .collect();
            let gens: Vec<Raw> = (0..short).map(|j| hp.presented.to_group.column(j)).collect();
            let span = HomSpace::new(g.ngens(), lattice, gens);
            for (j, path) in hp.paths.iter().enumerate().skip(short) {
                let coeffs = span.combination(&hp.presented.to_group.column(j))?;
                let combo: Combo = coeffs
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(k, c)| (c, hp.paths[k].clone()))
                    .collect();
                table.insert(path.arrows.clone(), combo);
            }
        }
    }
    Some(table)
}

/// Truncated category at one level with its reduction table.
struct Truncated<'a> {
    level: &'a Level,
    table: BTreeMap<Vec<usize>, Combo>,
    memo: BTreeMap<Vec<usize>, Vec<(BigInt, Vec<usize>)>>,
}

impl Truncated<'_> {
    fn reduce(&mut self, arrows: &[usize]) -> Vec<(BigInt, Vec<usize>)> {
        let l = self.level.len;
        if arrows.len() <= l {
            return vec![(BigInt::one(), arrows.to_vec())];
        }
        if let Some(r) = self.memo.get(arrows) {
            return r.clone();
        }
        let (head, tail) = arrows.split_at(l + 1);
        let mut acc: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
        for (c, w) in self.table[head].clone() {
            let mut joined = w.arrows.clone();
            joined.extend_from_slice(tail);
            for (c2, q) in self.reduce(&joined) {
                *acc.entry(q).or_insert_with(BigInt::zero) += &c * c2;
            }
        }
        let out: Vec<(BigInt, Vec<usize>)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).map(|(q, c)| (c, q)).collect();
        self.memo.insert(arrows.to_vec(), out.clone());
        out
    }

    /// Class of a path in the truncated hom group.
    fn class(&mut self, path: &Path) -> GroupElement {
        let pair = self.level.pair(path.src, path.dst);
        let mut raw = vec![BigInt::zero(); pair.paths.len()];
        for (c, q) in self.reduce(&path.arrows) {
            raw[pair.index[&q]] += c;
        }
        pair.presented.element_of_raw(&raw)
    }

    fn generator_paths(&self, x: usize, y: usize, k: usize) -> Combo {
        let pair = self.level.pair(x, y);
        let col = pair.presented.from_group.column(k);
        col.into_iter()
            .zip(&pair.paths)
            .filter(|(c, _)| !c.is_zero())
            .map(|(c, q)| (c, q.clone()))
            .collect()
    }

    fn compose_combos(&mut self, x: usize, z: usize, g: &Combo, f: &Combo) -> GroupElement {
        let group = self.level.pair(x, z).presented.group.clone();
        let mut acc = group.zero();
        for (cg, pg) in g {
            for (cf, pf) in f {
                let cls = self.class(&pg.after(pf));
                acc = group.add(&acc, &group.scale(&(cg * cf), &cls));
            }
        }
        acc
    }

    fn tensor(&mut self, x: usize, y: usize, z: usize) -> Vec<Vec<GroupElement>> {
        let ng = self.level.pair(y, z).presented.group.ngens();
        let nf = self.level.pair(x, y).presented.group.ngens();
        let gs: Vec<Combo> = (0..ng).map(|i| self.generator_paths(y, z, i)).collect();
        let fs: Vec<Combo> = (0..nf).map(|j| self.generator_paths(x, y, j)).collect();
        gs.iter().map(|g| fs.iter().map(|f| self.compose_combos(x, z, g, f)).collect()).collect()
    }

    fn group(&self, x: usize, y: usize) -> &FinAbGroup {
        &self.level.pair(x, y).presented.group
    }

    /// The map from this level to the next one, on normal-form generators.
    fn comparison(&self, next: &Level, x: usize, y: usize) -> GroupMor {
        let lo = self.level.pair(x, y);
        let hi = next.pair(x, y);
        let cols: Vec<Vec<BigInt>> = (0..lo.presented.group.ngens())
            .map(|k| {
                let raw = lo.presented.from_group.column(k);
                let mut ext = vec![BigInt::zero(); hi.paths.len()];
                for (i, c) in raw.into_iter().enumerate() {
                    ext[hi.index[&lo.paths[i].arrows]] += c;
                }
                hi.presented.element_of_raw(&ext).0
            })
            .collect();
        GroupMor::from_columns(lo.presented.group.clone(), hi.presented.group.clone(), &cols)
    }
}

/// Stored data for one ordered pair of objects.
#[derive(Clone, Debug)]
pub struct HomEntry {
    pub group: FinAbGroup,
    /// Normal-form generators as path combinations.
    pub generators: Vec<Combo>,
    space: HomSpace,
}

/// Computed category of a quiver presentation.
#[derive(Clone, Debug)]
pub struct PresentedCategory {
    pub presentation: QuiverPresentation,
    pub truncation_used: usize,
    homs: Vec<HomEntry>,
    comp: Vec<Vec<Vec<GroupElement>>>,
    identities: Vec<GroupElement>,
    arrow_classes: Vec<GroupElement>,
    n: usize,
}

pub fn compute_category(p: &QuiverPresentation, l_max: usize) -> Result<PresentedCategory, PresError> {
    p.validate()?;
    let n = p.objects.len();
    let mut levels: Vec<Level> = Vec::new();
    for len in 0..=l_max {
        levels.push(build_level(p, len));
    }
    for l in 1..=l_max.saturating_sub(2) {
        let Some(t0) = reduction_table(&levels[l], &levels[l + 1]) else { continue };
        let Some(t1) = reduction_table(&levels[l + 1], &levels[l + 2]) else { continue };
        let mut lo = Truncated { level: &levels[l], table: t0, memo: BTreeMap::new() };
        let mut hi = Truncated { level: &levels[l + 1], table: t1, memo: BTreeMap::new() };
        let comps: Vec<GroupMor> = (0..n * n).map(|k| lo.comparison(&levels[l + 1], k / n, k % n)).collect();
        if !comps.iter().all(GroupMor::is_isomorphism) {
            continue;
        }
        let mut stable = true;
        let mut comp = Vec::with_capacity(n * n * n);
        'outer: for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let t_lo = lo.tensor(x, y, z);
                    let t_hi = hi.tensor(x, y, z);
                    let (cxy, cyz, cxz) = (&comps[x * n + y], &comps[y * n + z], &comps[x * n + z]);
                    for (i, row) in t_lo.iter().enumerate() {
                        for (j, v) in row.iter().enumerate() {
                            // express images of lo generators in hi coordinates
                            let gi = cyz.apply(&lo.group(y, z).generator(i));
                            let fj = cxy.apply(&lo.group(x, y).generator(j));
                            let expect = cxz.apply(v);
                            let mut acc = hi.group(x, z).zero();
                            for (a, ca) in gi.0.iter().enumerate() {
                                for (b, cb) in fj.0.iter().enumerate() {
                                    if ca.is_zero() || cb.is_zero() {
                                        continue;
                                    }
                                    let g = hi.group(x, z).clone();
                                    acc = g.add(&acc, &g.scale(&(ca * cb), &t_hi[a][b]));
                                }
                            }
                            if acc != expect {
                                stable = false;
                                break 'outer;
                            }
                        }
                    }
                    comp.push(t_lo);
                }
            }
        }
        if !stable {
            continue;
        }
        let homs: Vec<HomEntry> = (0..n * n)
            .map(|k| {
                let (x, y) = (k / n, k % n);
                let group = lo.group(x, y).clone();
                let generators = (0..group.ngens()).map(|i| lo.generator_paths(x, y, i)).collect();
                let space = HomSpace::standard(&group);
                HomEntry { group, generators, space }
            })
            .collect();
        let identities = (0..n).map(|x| lo.class(&Path::identity(x))).collect();
        let arrow_classes = (0..p.arrows.len()).map(|a| lo.class(&p.arrow_path(a))).collect();
        return Ok(PresentedCategory {
            presentation: p.clone(),
            truncation_used: l,
            homs,
            comp,
            identities,
            arrow_classes,
            n,
        });
    }
    Err(PresError::NoStabilization { l_max })
}

impl PresentedCategory {
    pub fn object_count(&self) -> usize {
        self.n
    }

    pub fn object_name(&self, x: usize) -> &str {
        &self.presentation.objects[x]
    }

    pub fn entry(&self, x: usize, y: usize) -> &HomEntry {
        &self.homs[x * self.n + y]
    }

    pub fn hom_group(&self, x: usize, y: usize) -> &FinAbGroup {
        &self.entry(x, y).group
    }

    pub fn identity_element(&self, x: usize) -> &GroupElement {
        &self.identities[x]
    }

    pub fn arrow_element(&self, a: usize) -> &GroupElement {
        &self.arrow_classes[a]
    }

    /// `g ∘ f` on coordinates, `f: x → y`, `g: y → z`.
    pub fn compose_elements(&self, x: usize, y: usize, z: usize, g: &GroupElement, f: &GroupElement) -> GroupElement {
        let t = &self.comp[(x * self.n + y) * self.n + z];
        let target = self.hom_group(x, z);
        let mut acc = target.zero();
        for (i, gi) in g.0.iter().enumerate() {
            if gi.is_zero() {
                continue;
            }
            for (j, fj) in f.0.iter().enumerate() {
                if !fj.is_zero() {
                    acc = target.add(&acc, &target.scale(&(gi * fj), &t[i][j]));
                }
            }
        }
        acc
    }

    /// Class of an arbitrary path, by composing arrow classes.
    pub fn path_element(&self, path: &Path) -> GroupElement {
        let mut acc = self.identities[path.src].clone();
        let mut cur = path.src;
        for &a in path.arrows.iter().rev() {
            let arrow = &self.presentation.arrows[a];
            acc = self.compose_elements(path.src, cur, arrow.dst, &self.arrow_classes[a], &acc);
            cur = arrow.dst;
        }
        acc
    }

    /// Readable generator list for a pair, e.g. `["1*[gamma phi]"]`.
    pub fn generator_names(&self, x: usize, y: usize) -> Vec<String> {
        self.entry(x, y)
            .generators
            .iter()
            .map(|combo| {
                let parts: Vec<String> = combo
                    .iter()
                    .map(|(c, q)| alloc::format!("{c}*[{}]", self.presentation.path_name(q)))
                    .collect();
                parts.join(" + ")
            })
            .collect()
    }
}

impl Preadditive for PresentedCategory {
    type Obj = usize;

    fn hom(&self, a: &usize, b: &usize) -> HomSpace {
        self.entry(*a, *b).space.clone()
    }

    fn compose(&self, a: &usize, b: &usize, c: &usize, g: &[BigInt], f: &[BigInt]) -> Raw {
        let ge = self.hom_group(*b, *c).reduce(g);
        let fe = self.hom_group(*a, *b).reduce(f);
        self.compose_elements(*a, *b, *c, &ge, &fe).0
    }

    fn identity(&self, a: &usize) -> Raw {
        self.identities[*a].0.clone()
    }

    fn describe_obj(&self, a: &usize) -> String {
        self.presentation.objects[*a].clone()
    }
}
