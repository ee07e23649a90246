use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::matrix::IntMatrix;
use super::snf::{integer_kernel, smith_normal_form, solve_integer};
use super::AlgebraError;

/// Hard cap on exhaustive element enumeration.
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Finitely generated abelian group `Z/d_1 + ... + Z/d_k + Z^r` with
/// `d_1 | d_2 | ... | d_k`, every `d_i >= 2`. Torsion generators come first.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FinAbGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

/// Coordinates with respect to the generators of the owning group.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct GroupElement(pub Vec<BigInt>);

impl GroupElement {
    pub fn zero(n: usize) -> Self {
        GroupElement(vec![BigInt::zero(); n])
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.0[i] = BigInt::one();
        e
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        GroupElement(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl FinAbGroup {
    /// Validates the divisibility chain.
    pub fn new(torsion: Vec<BigInt>, free_rank: usize) -> Result<Self, AlgebraError> {
        let two = BigInt::from(2);
        if torsion.iter().any(|d| d < &two) {
            return Err(AlgebraError::InvalidInvariants);
        }
        if torsion.windows(2).any(|w| !w[1].is_multiple_of(&w[0])) {
            return Err(AlgebraError::InvalidInvariants);
        }
        Ok(FinAbGroup { torsion, free_rank })
    }

    pub fn trivial() -> Self {
        FinAbGroup { torsion: Vec::new(), free_rank: 0 }
    }

    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => FinAbGroup { torsion: Vec::new(), free_rank: 1 },
            1 => Self::trivial(),
            _ => FinAbGroup { torsion: vec![BigInt::from(n)], free_rank: 0 },
        }
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup { torsion: Vec::new(), free_rank: rank }
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn ngens(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.ngens() == 0
    }

    pub fn order(&self) -> Option<BigInt> {
        self.is_finite().then(|| self.torsion.iter().product())
    }

    /// Order as a machine integer; `None` for infinite or huge groups.
    pub fn order_u64(&self) -> Option<u64> {
        self.order().and_then(|o| o.to_u64())
    }

    /// Modulus of generator `i`; zero for free generators.
    pub fn modulus(&self, i: usize) -> BigInt {
        self.torsion.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn moduli(&self) -> Vec<BigInt> {
        (0..self.ngens()).map(|i| self.modulus(i)).collect()
    }

    /// Diagonal relation matrix `diag(d_1..d_k, 0..0)` (square, ngens x ngens).
    pub fn relation_matrix(&self) -> IntMatrix {
        IntMatrix::diagonal(&self.moduli(), self.ngens(), self.ngens())
    }

    pub fn reduce(&self, v: &[BigInt]) -> GroupElement {
        assert_eq!(v.len(), self.ngens(), "coordinate count mismatch");
        GroupElement(
            v.iter()
                .enumerate()
                .map(|(i, x)| match self.torsion.get(i) {
                    Some(d) => x.mod_floor(d),
                    None => x.clone(),
                })
                .collect(),
        )
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement::zero(self.ngens())
    }

    pub fn generator(&self, i: usize) -> GroupElement {
        GroupElement::basis(self.ngens(), i)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.reduce(&v)
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = a.0.iter().map(|x| -x).collect();
        self.reduce(&v)
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, k: &BigInt, a: &GroupElement) -> GroupElement {
        let v: Vec<BigInt> = a.0.iter().map(|x| x * k).collect();
        self.reduce(&v)
    }

    pub fn contains(&self, a: &GroupElement) -> bool {
        a.0.len() == self.ngens() && self.reduce(&a.0) == *a
    }

    /// Order of an element; `None` if it has infinite order.
    pub fn element_order(&self, a: &GroupElement) -> Option<BigInt> {
        let mut ord = BigInt::one();
        for (i, x) in a.0.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let d = self.torsion.get(i)?;
            ord = ord.lcm(&(d / d.gcd(x)));
        }
        Some(ord)
    }

    /// Every element once, lexicographic in the coordinates.
    pub fn enumerate_elements(&self) -> Result<Vec<GroupElement>, AlgebraError> {
        self.enumerate_elements_capped(ENUMERATION_CAP)
    }

    pub fn enumerate_elements_capped(&self, cap: u64) -> Result<Vec<GroupElement>, AlgebraError> {
        if !self.is_finite() {
            return Err(AlgebraError::InfiniteGroup);
        }
        let order = self.order_u64().filter(|&o| o <= cap).ok_or(AlgebraError::BudgetExceeded {
            what: "element enumeration",
            cap,
        })?;
        let moduli: Vec<u64> = self.torsion.iter().map(|d| d.to_u64().unwrap()).collect();
        let mut out = Vec::with_capacity(order as usize);
        let mut cur = vec![0u64; moduli.len()];
        loop {
            out.push(GroupElement(cur.iter().map(|&c| BigInt::from(c)).collect()));
            let mut k = moduli.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < moduli[k] {
                    break;
                }
                cur[k] = 0;
            }
        }
    }

    /// Direct sum of the generator sets, renormalised.
    pub fn direct_sum(groups: &[FinAbGroup]) -> DirectSum {
        let raw: usize = groups.iter().map(FinAbGroup::ngens).sum();
        let mut moduli = Vec::with_capacity(raw);
        let mut offsets = Vec::with_capacity(groups.len());
        for g in groups {
            offsets.push(moduli.len());
            moduli.extend(g.moduli());
        }
        let presented = group_from_presentation(&IntMatrix::diagonal(&moduli, raw, raw));
        DirectSum { summands: groups.to_vec(), offsets, presented }
    }

    pub fn describe(&self) -> String {
        use core::fmt::Write;
        if self.is_trivial() {
            return String::from("0");
        }
        let mut s = String::new();
        for d in &self.torsion {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            let _ = write!(s, "Z/{d}");
        }
        if self.free_rank > 0 {
            if !s.is_empty() {
                s.push_str(" + ");
            }
            if self.free_rank == 1 {
                s.push('Z');
            } else {
                let _ = write!(s, "Z^{}", self.free_rank);
            }
        }
        s
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// A group presented on some raw generating set, brought to normal form.
///
/// `to_group` maps raw coordinates to normal-form coordinates (columns are
/// the images of raw generators); `from_group` expresses each normal-form
/// generator in raw coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presented {
    pub group: FinAbGroup,
    pub to_group: IntMatrix,
    pub from_group: IntMatrix,
}

impl Presented {
    pub fn raw_count(&self) -> usize {
        self.to_group.cols()
    }

    pub fn element_of_raw(&self, raw: &[BigInt]) -> GroupElement {
        self.group.reduce(&self.to_group.mul_vec(raw))
    }

    pub fn raw_of_element(&self, x: &GroupElement) -> Vec<BigInt> {
        self.from_group.mul_vec(&x.0)
    }
}

/// Cokernel of `relations^T`: one row per relation, one column per generator.
pub fn group_from_presentation(relations: &IntMatrix) -> Presented {
    let n = relations.cols();
    let snf = smith_normal_form(relations);
    let mut torsion = Vec::new();
    let mut keep = Vec::new();
    for i in 0..snf.rank {
        let d = snf.d[(i, i)].clone();
        if !d.is_one() {
            torsion.push(d);
            keep.push(i);
        }
    }
    let free_rank = n - snf.rank;
    keep.extend(snf.rank..n);
    let group = FinAbGroup { torsion, free_rank };
    let mut to_group = IntMatrix::zeros(keep.len(), n);
    let mut from_group = IntMatrix::zeros(n, keep.len());
    for (k, &idx) in keep.iter().enumerate() {
        for j in 0..n {
            to_group[(k, j)] = snf.v[(j, idx)].clone();
            from_group[(j, k)] = snf.v_inv[(idx, j)].clone();
        }
    }
    // reduce the torsion rows so reports are canonical
    for (k, d) in group.torsion.iter().enumerate() {
        for j in 0..n {
            let v = to_group[(k, j)].mod_floor(d);
            to_group[(k, j)] = v;
        }
    }
    Presented { group, to_group, from_group }
}

#[derive(Clone, Debug)]
pub struct DirectSum {
    pub summands: Vec<FinAbGroup>,
    pub offsets: Vec<usize>,
    pub presented: Presented,
}

impl DirectSum {
    pub fn group(&self) -> &FinAbGroup {
        &self.presented.group
    }

    pub fn inject(&self, k: usize, x: &GroupElement) -> GroupElement {
        let mut raw = vec![BigInt::zero(); self.presented.raw_count()];
        for (i, c) in x.0.iter().enumerate() {
            raw[self.offsets[k] + i] = c.clone();
        }
        self.presented.element_of_raw(&raw)
    }

    /// Element from per-summand components.
    pub fn assemble(&self, parts: &[GroupElement]) -> GroupElement {
        let raw: Vec<BigInt> = parts.iter().flat_map(|p| p.0.iter().cloned()).collect();
        self.presented.element_of_raw(&raw)
    }

    pub fn components(&self, x: &GroupElement) -> Vec<GroupElement> {
        let raw = self.presented.raw_of_element(x);
        self.summands
            .iter()
            .zip(&self.offsets)
            .map(|(g, &o)| g.reduce(&raw[o..o + g.ngens()]))
            .collect()
    }

    pub fn injection(&self, k: usize) -> GroupMor {
        let g = &self.summands[k];
        let cols: Vec<Vec<BigInt>> =
            (0..g.ngens()).map(|i| self.inject(k, &g.generator(i)).0).collect();
        GroupMor::from_columns(g.clone(), self.group().clone(), &cols)
    }

    pub fn projection(&self, k: usize) -> GroupMor {
        let cols: Vec<Vec<BigInt>> = (0..self.group().ngens())
            .map(|i| self.components(&self.group().generator(i))[k].0.clone())
            .collect();
        GroupMor::from_columns(self.group().clone(), self.summands[k].clone(), &cols)
    }
}

/// Homomorphism given by its action on generators: column `j` of `matrix`
/// is the image of source generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMor {
    source: FinAbGroup,
    target: FinAbGroup,
    matrix: IntMatrix,
}

/// A subgroup or subquotient with its structure map.
#[derive(Clone, Debug)]
pub struct SubGroup {
    pub group: FinAbGroup,
    /// Inclusion into (or projection onto) the ambient group.
    pub map: GroupMor,
}

impl GroupMor {
    pub fn new(source: FinAbGroup, target: FinAbGroup, matrix: IntMatrix) -> Result<Self, AlgebraError> {
        if matrix.rows() != target.ngens() || matrix.cols() != source.ngens() {
            return Err(AlgebraError::ShapeMismatch);
        }
        let mut m = matrix;
        for j in 0..m.cols() {
            let col = target.reduce(&m.column(j));
            for (i, x) in col.0.into_iter().enumerate() {
                m[(i, j)] = x;
            }
        }
        let mor = GroupMor { source, target, matrix: m };
        if !mor.respects_torsion() {
            return Err(AlgebraError::NotWellDefined);
        }
        Ok(mor)
    }

    /// Panics if the map is not well defined; for internally built maps.
    pub fn from_columns(source: FinAbGroup, target: FinAbGroup, cols: &[Vec<BigInt>]) -> Self {
        let m = IntMatrix::from_columns(target.ngens(), cols);
        GroupMor::new(source, target, m).expect("structure map must be well defined")
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let m = IntMatrix::zeros(target.ngens(), source.ngens());
        GroupMor { source, target, matrix: m }
    }

    pub fn identity(g: FinAbGroup) -> Self {
        let m = IntMatrix::identity(g.ngens());
        GroupMor { source: g.clone(), target: g, matrix: m }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    fn respects_torsion(&self) -> bool {
        self.source.torsion.iter().enumerate().all(|(j, d)| {
            let img: Vec<BigInt> = self.matrix.column(j).iter().map(|x| x * d).collect();
            self.target.reduce(&img).is_zero()
        })
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        self.target.reduce(&self.matrix.mul_vec(&x.0))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMor) -> Result<GroupMor, AlgebraError> {
        if self.target != other.source {
            return Err(AlgebraError::NotComposable);
        }
        GroupMor::new(self.source.clone(), other.target.clone(), other.matrix.mul(&self.matrix))
    }

    pub fn is_zero(&self) -> bool {
        (0..self.source.ngens()).all(|j| self.apply(&self.source.generator(j)).is_zero())
    }

    pub fn kernel(&self) -> SubGroup {
        let n = self.source.ngens();
        let stacked = self.matrix.hstack(&self.target.relation_matrix());
        let k = integer_kernel(&stacked);
        let gens: Vec<GroupElement> =
            (0..k.cols()).map(|j| self.source.reduce(&k.column(j)[..n])).collect();
        subgroup(&self.source, &gens)
    }

    pub fn image(&self) -> SubGroup {
        let gens: Vec<GroupElement> =
            (0..self.source.ngens()).map(|j| self.apply(&self.source.generator(j))).collect();
        subgroup(&self.target, &gens)
    }

    pub fn cokernel(&self) -> SubGroup {
        let gens: Vec<GroupElement> =
            (0..self.source.ngens()).map(|j| self.apply(&self.source.generator(j))).collect();
        quotient(&self.target, &gens)
    }

    /// Some `x` with `self(x) = y`.
    pub fn preimage(&self, y: &GroupElement) -> Option<GroupElement> {
        let n = self.source.ngens();
        let stacked = self.matrix.hstack(&self.target.relation_matrix());
        let sol = solve_integer(&stacked, &y.0)?;
        Some(self.source.reduce(&sol[..n]))
    }

    pub fn is_injective(&self) -> bool {
        self.kernel().group.is_trivial()
    }

    pub fn is_surjective(&self) -> bool {
        self.cokernel().group.is_trivial()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }
}

/// Subgroup of `g` generated by `gens`, with its inclusion.
pub fn subgroup(g: &FinAbGroup, gens: &[GroupElement]) -> SubGroup {
    let k = gens.len();
    let cols: Vec<Vec<BigInt>> = gens.iter().map(|x| x.0.clone()).collect();
    let s = IntMatrix::from_columns(g.ngens(), &cols);
    let ker = integer_kernel(&s.hstack(&g.relation_matrix()));
    let rel_rows: Vec<Vec<BigInt>> = (0..ker.cols()).map(|j| ker.column(j)[..k].to_vec()).collect();
    let rel = IntMatrix::from_columns(k, &rel_rows).transpose();
    let p = group_from_presentation(&rel);
    let incl_cols: Vec<Vec<BigInt>> = (0..p.group.ngens())
        .map(|i| g.reduce(&s.mul_vec(&p.from_group.column(i))).0)
        .collect();
    let map = GroupMor::from_columns(p.group.clone(), g.clone(), &incl_cols);
    SubGroup { group: p.group, map }
}

/// Quotient of `g` by the subgroup generated by `gens`, with the projection.
pub fn quotient(g: &FinAbGroup, gens: &[GroupElement]) -> SubGroup {
    let mut rows: Vec<Vec<BigInt>> = (0..g.torsion.len()).map(|i| {
        let mut r = vec![BigInt::zero(); g.ngens()];
        r[i] = g.torsion[i].clone();
        r
    }).collect();
    rows.extend(gens.iter().map(|x| x.0.clone()));
    let rel = IntMatrix::from_columns(g.ngens(), &rows).transpose();
    let p = group_from_presentation(&rel);
    let cols: Vec<Vec<BigInt>> = (0..g.ngens()).map(|j| p.to_group.column(j)).collect();
    let map = GroupMor::from_columns(g.clone(), p.group.clone(), &cols);
    SubGroup { group: p.group, map }
}

/// Whether `y` lies in the subgroup of `g` generated by `gens`.
pub fn in_span(g: &FinAbGroup, gens: &[GroupElement], y: &GroupElement) -> bool {
    let cols: Vec<Vec<BigInt>> = gens.iter().map(|x| x.0.clone()).collect();
    let s = IntMatrix::from_columns(g.ngens(), &cols).hstack(&g.relation_matrix());
    solve_integer(&s, &y.0).is_some()
}

/// `image(f) == kernel(g)` inside `target(f) == source(g)`.
pub fn is_exact_at(f: &GroupMor, g: &GroupMor) -> Result<bool, AlgebraError> {
    if f.target != g.source {
        return Err(AlgebraError::NotComposable);
    }
    if !f.then(g)?.is_zero() {
        return Ok(false);
    }
    let ker = g.kernel();
    let img: Vec<GroupElement> =
        (0..f.source.ngens()).map(|j| f.apply(&f.source.generator(j))).collect();
    Ok((0..ker.group.ngens())
        .all(|i| in_span(&f.target, &img, &ker.map.apply(&ker.group.generator(i)))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u64) -> FinAbGroup {
        FinAbGroup::cyclic(n)
    }

    fn mul_map(g: &FinAbGroup, k: i64) -> GroupMor {
        GroupMor::new(g.clone(), g.clone(), IntMatrix::from_rows(&[[k]])).unwrap()
    }

    #[test]
    fn presentations() {
        assert_eq!(group_from_presentation(&IntMatrix::from_rows(&[[4]])).group, z(4));
        let p = group_from_presentation(&IntMatrix::from_rows(&[[2, 0], [0, 3]]));
        assert_eq!(p.group, z(6));
        let free = group_from_presentation(&IntMatrix::zeros(0, 2));
        assert_eq!(free.group, FinAbGroup::free(2));
    }

    #[test]
    fn presentation_maps_are_inverse_on_generators() {
        let p = group_from_presentation(&IntMatrix::from_rows(&[[2, 4, 0], [0, 6, 3]]));
        for i in 0..p.group.ngens() {
            let raw = p.raw_of_element(&p.group.generator(i));
            assert_eq!(p.element_of_raw(&raw), p.group.generator(i));
        }
    }

    #[test]
    fn doubling_on_z4() {
        let h = mul_map(&z(4), 2);
        assert_eq!(h.kernel().group, z(2));
        assert_eq!(h.image().group, z(2));
        assert_eq!(h.cokernel().group, z(2));
    }

    #[test]
    fn identity_and_zero_maps() {
        let id = GroupMor::identity(FinAbGroup::free(2));
        assert!(id.kernel().group.is_trivial());
        assert!(id.cokernel().group.is_trivial());
        let zero = mul_map(&z(4), 0);
        assert_eq!(zero.kernel().group, z(4));
        assert_eq!(zero.cokernel().group, z(4));
    }

    #[test]
    fn exactness() {
        let two = mul_map(&z(4), 2);
        assert!(is_exact_at(&two, &two).unwrap());
        let incl = GroupMor::zero(FinAbGroup::trivial(), z(4));
        assert!(is_exact_at(&incl, &mul_map(&z(4), 1)).unwrap());
        let zero = mul_map(&z(4), 0);
        assert!(!is_exact_at(&zero, &zero).unwrap());
        assert_eq!(is_exact_at(&two, &mul_map(&z(2), 1)), Err(AlgebraError::NotComposable));
    }

    #[test]
    fn enumeration() {
        let e = z(2).enumerate_elements().unwrap();
        assert_eq!(e, [GroupElement::from_i64(&[0]), GroupElement::from_i64(&[1])]);
        let k = FinAbGroup::new(vec![BigInt::from(2), BigInt::from(2)], 0).unwrap();
        assert_eq!(k.enumerate_elements().unwrap().len(), 4);
        assert_eq!(FinAbGroup::free(1).enumerate_elements(), Err(AlgebraError::InfiniteGroup));
        let big = FinAbGroup::new(vec![BigInt::from(1024); 3], 0).unwrap();
        assert!(matches!(big.enumerate_elements(), Err(AlgebraError::BudgetExceeded { .. })));
    }

    #[test]
    fn direct_sum_renormalises() {
        let s = FinAbGroup::direct_sum(&[z(2), z(3)]);
        assert_eq!(*s.group(), z(6));
        let x = s.assemble(&[GroupElement::from_i64(&[1]), GroupElement::from_i64(&[2])]);
        assert_eq!(s.components(&x), [GroupElement::from_i64(&[1]), GroupElement::from_i64(&[2])]);
        assert!(s.injection(0).then(&s.projection(0)).unwrap() == GroupMor::identity(z(2)));
    }

    #[test]
    fn invalid_invariants_rejected() {
        assert!(FinAbGroup::new(vec![BigInt::from(4), BigInt::from(2)], 0).is_err());
        assert!(FinAbGroup::new(vec![BigInt::from(1)], 0).is_err());
    }
}
