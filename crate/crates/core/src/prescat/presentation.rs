use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::PresError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Arrow {
    pub name: String,
    pub src: usize,
    pub dst: usize,
}

/// Composable arrow sequence in composition order: `[a, b]` is `a ∘ b`.
/// An empty sequence is the identity of `src == dst`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Path {
    pub src: usize,
    pub dst: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn identity(obj: usize) -> Self {
        Path { src: obj, dst: obj, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self ∘ other`.
    pub fn after(&self, other: &Path) -> Path {
        debug_assert_eq!(other.dst, self.src);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path { src: other.src, dst: self.dst, arrows }
    }
}

/// `Σ coeff · path = 0`, all paths parallel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Relation {
    pub terms: Vec<(BigInt, Path)>,
}

impl Relation {
    pub fn endpoints(&self) -> Option<(usize, usize)> {
        self.terms.first().map(|(_, p)| (p.src, p.dst))
    }

    pub fn max_len(&self) -> usize {
        self.terms.iter().map(|(_, p)| p.len()).max().unwrap_or(0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuiverPresentation {
    pub objects: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
    pub torsion: Option<u64>,
}

impl QuiverPresentation {
    pub fn new(objects: &[&str], arrows: &[(&str, &str, &str)], torsion: Option<u64>) -> Result<Self, PresError> {
        let objects: Vec<String> = objects.iter().map(|s| s.to_string()).collect();
        let mut p = QuiverPresentation { objects, arrows: Vec::new(), relations: Vec::new(), torsion };
        for &(name, s, d) in arrows {
            let src = p.object(s)?;
            let dst = p.object(d)?;
            if p.arrow(name).is_ok() {
                return Err(PresError::DuplicateName(name.to_string()));
            }
            p.arrows.push(Arrow { name: name.to_string(), src, dst });
        }
        p.validate()?;
        Ok(p)
    }

    pub fn object(&self, name: &str) -> Result<usize, PresError> {
        self.objects
            .iter()
            .position(|o| o == name)
            .ok_or_else(|| PresError::UnknownName(name.to_string()))
    }

    pub fn arrow(&self, name: &str) -> Result<usize, PresError> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| PresError::UnknownName(name.to_string()))
    }

    /// Path from arrow names in composition order; `id(X)` is an identity.
    pub fn path(&self, names: &[&str]) -> Result<Path, PresError> {
        if let [single] = names {
            if let Some(obj) = single.strip_prefix("id(").and_then(|s| s.strip_suffix(')')) {
                return Ok(Path::identity(self.object(obj)?));
            }
        }
        if names.is_empty() {
            return Err(PresError::Malformed("empty path; spell identities id(X)".into()));
        }
        let arrows: Vec<usize> = names.iter().map(|n| self.arrow(n)).collect::<Result<_, _>>()?;
        for w in arrows.windows(2) {
            if self.arrows[w[0]].src != self.arrows[w[1]].dst {
                return Err(PresError::NotComposable(format!(
                    "{} after {}",
                    self.arrows[w[0]].name, self.arrows[w[1]].name
                )));
            }
        }
        let src = self.arrows[*arrows.last().unwrap()].src;
        let dst = self.arrows[arrows[0]].dst;
        Ok(Path { src, dst, arrows })
    }

    pub fn relation(&self, terms: &[(i64, &[&str])]) -> Result<Relation, PresError> {
        let terms = terms
            .iter()
            .map(|(c, names)| Ok((BigInt::from(*c), self.path(names)?)))
            .collect::<Result<Vec<_>, PresError>>()?;
        let rel = Relation { terms };
        self.check_relation(&rel)?;
        Ok(rel)
    }

    pub fn add_relation(&mut self, terms: &[(i64, &[&str])]) -> Result<(), PresError> {
        let r = self.relation(terms)?;
        self.relations.push(r);
        Ok(())
    }

    fn check_path(&self, p: &Path) -> Result<(), PresError> {
        if p.src >= self.objects.len() || p.dst >= self.objects.len() {
            return Err(PresError::Malformed("object index out of range".into()));
        }
        if p.arrows.is_empty() {
            return if p.src == p.dst {
                Ok(())
            } else {
                Err(PresError::Malformed("identity path with distinct endpoints".into()))
            };
        }
        if p.arrows.iter().any(|&a| a >= self.arrows.len()) {
            return Err(PresError::Malformed("arrow index out of range".into()));
        }
        let ok_chain = p.arrows.windows(2).all(|w| self.arrows[w[0]].src == self.arrows[w[1]].dst);
        let ok_ends = self.arrows[p.arrows[0]].dst == p.dst
            && self.arrows[*p.arrows.last().unwrap()].src == p.src;
        if ok_chain && ok_ends {
            Ok(())
        } else {
            Err(PresError::NotComposable(self.path_name(p)))
        }
    }

    fn check_relation(&self, r: &Relation) -> Result<(), PresError> {
        let Some(ends) = r.endpoints() else {
            return Err(PresError::Malformed("empty relation".into()));
        };
        for (_, p) in &r.terms {
            self.check_path(p)?;
            if (p.src, p.dst) != ends {
                return Err(PresError::Malformed(format!("non-parallel paths in relation {}", self.relation_name(r))));
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<(), PresError> {
        for (i, a) in self.objects.iter().enumerate() {
            if self.objects[..i].contains(a) {
                return Err(PresError::DuplicateName(a.clone()));
            }
        }
        for (i, a) in self.arrows.iter().enumerate() {
            if self.arrows[..i].iter().any(|b| b.name == a.name) || self.objects.contains(&a.name) {
                return Err(PresError::DuplicateName(a.name.clone()));
            }
            if a.src >= self.objects.len() || a.dst >= self.objects.len() {
                return Err(PresError::Malformed(format!("arrow {} has unknown endpoint", a.name)));
            }
        }
        if self.torsion == Some(0) {
            return Err(PresError::Malformed("torsion must be positive".into()));
        }
        self.relations.iter().try_for_each(|r| self.check_relation(r))
    }

    pub fn path_name(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return format!("id({})", self.objects[p.src]);
        }
        let names: Vec<&str> = p.arrows.iter().map(|&a| self.arrows[a].name.as_str()).collect();
        names.join(" ")
    }

    pub fn relation_name(&self, r: &Relation) -> String {
        let parts: Vec<String> =
            r.terms.iter().map(|(c, p)| format!("{c}*[{}]", self.path_name(p))).collect();
        parts.join(" + ")
    }

    /// Every arrow as a generator path.
    pub fn arrow_path(&self, a: usize) -> Path {
        Path { src: self.arrows[a].src, dst: self.arrows[a].dst, arrows: alloc::vec![a] }
    }

    /// Drops zero coefficients; used when comparing relation lists.
    pub fn normalized(&self) -> Self {
        let mut p = self.clone();
        for r in &mut p.relations {
            r.terms.retain(|(c, _)| !c.is_zero());
        }
        p
    }
}

/// Appends relations; the identity-on-objects quotient functor is the
/// identity assignment on arrows.
pub fn quotient_presentation(p: &QuiverPresentation, extra: &[Relation]) -> Result<QuiverPresentation, PresError> {
    let mut q = p.clone();
    for r in extra {
        q.check_relation(r)?;
        q.relations.push(r.clone());
    }
    Ok(q)
}
