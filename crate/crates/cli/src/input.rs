use std::fs;

use pretri_core::muro::{arrow, generating_objects, Arrow, Z4Mat};
use pretri_core::prescat::{builtin, QuiverPresentation, BUILTIN_NAMES};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// On-disk presentation: names instead of indices.
///
/// ```json
/// {
///   "objects": ["x", "y"],
///   "arrows": [{"name": "a", "src": "x", "dst": "y"}],
///   "relations": [[[2, ["a"]]], [[1, ["b", "a"]], [-1, ["id(x)"]]]],
///   "torsion": 4
/// }
/// ```
///
/// A term `[k, [a1, ..., an]]` is `k · a1 ∘ ... ∘ an`; `id(X)` is the identity path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationFile {
    pub objects: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
    #[serde(default)]
    pub relations: Vec<Vec<(i64, Vec<String>)>>,
    #[serde(default)]
    pub torsion: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowEntry {
    pub name: String,
    pub src: String,
    pub dst: String,
}

impl PresentationFile {
    pub fn to_presentation(&self) -> Result<QuiverPresentation, CliError> {
        let objs: Vec<&str> = self.objects.iter().map(String::as_str).collect();
        let arrows: Vec<(&str, &str, &str)> =
            self.arrows.iter().map(|a| (a.name.as_str(), a.src.as_str(), a.dst.as_str())).collect();
        let mut p = QuiverPresentation::new(&objs, &arrows, self.torsion).map_err(|e| CliError::Input(e.to_string()))?;
        for rel in &self.relations {
            let names: Vec<Vec<&str>> = rel.iter().map(|(_, ns)| ns.iter().map(String::as_str).collect()).collect();
            let terms: Vec<(i64, &[&str])> = rel.iter().zip(&names).map(|((k, _), ns)| (*k, ns.as_slice())).collect();
            p.add_relation(&terms).map_err(|e| CliError::Input(e.to_string()))?;
        }
        Ok(p)
    }

    pub fn from_presentation(p: &QuiverPresentation) -> Self {
        let objects = p.objects.clone();
        let arrows = p
            .arrows
            .iter()
            .map(|a| ArrowEntry { name: a.name.clone(), src: objects[a.src].clone(), dst: objects[a.dst].clone() })
            .collect();
        let relations = p
            .relations
            .iter()
            .map(|r| {
                r.terms
                    .iter()
                    .map(|(k, path)| {
                        let names = if path.arrows.is_empty() {
                            vec![format!("id({})", objects[path.src])]
                        } else {
                            path.arrows.iter().map(|&a| p.arrows[a].name.clone()).collect()
                        };
                        (i64::try_from(k).expect("coefficient fits in i64"), names)
                    })
                    .collect()
            })
            .collect();
        PresentationFile { objects, arrows, relations, torsion: p.torsion }
    }
}

/// `builtin:NAME` or a path to a presentation file.
pub fn load_presentation(spec: &str) -> Result<QuiverPresentation, CliError> {
    if let Some(name) = spec.strip_prefix("builtin:") {
        return builtin(name)
            .ok_or_else(|| CliError::Input(format!("unknown builtin `{name}`; known: {}", BUILTIN_NAMES.join(", "))));
    }
    let text = fs::read_to_string(spec).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    let file: PresentationFile = serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{spec}: {e}")))?;
    file.to_presentation()
}

/// An integer matrix written as JSON rows, e.g. `[[2,4],[6,8]]`.
pub fn parse_int_rows(s: &str) -> Result<Vec<Vec<i64>>, CliError> {
    let rows: Vec<Vec<i64>> = serde_json::from_str(s).map_err(|e| CliError::Input(format!("matrix `{s}`: {e}")))?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(CliError::Input(format!("matrix `{s}` is ragged")));
    }
    Ok(rows)
}

/// A `Z/4` matrix: JSON rows, or `0xN` / `Nx0` for the empty maps.
pub fn parse_z4(s: &str) -> Result<Z4Mat, CliError> {
    if let Some((r, c)) = s.split_once('x') {
        if let (Ok(r), Ok(c)) = (r.trim().parse::<usize>(), c.trim().parse::<usize>()) {
            if r == 0 || c == 0 {
                return Ok(Z4Mat::zeros(r, c));
            }
        }
    }
    let rows = parse_int_rows(s)?;
    let cols = rows.first().map_or(0, Vec::len);
    Ok(Z4Mat::from_rows(&rows, cols))
}

/// A generating object `d`, `c`, `i`, `t`, or a matrix.
pub fn parse_arrow(s: &str) -> Result<Arrow, CliError> {
    match ["d", "c", "i", "t"].iter().position(|n| *n == s) {
        Some(k) => Ok(generating_objects()[k].clone()),
        None => Ok(arrow(&parse_z4(s)?)),
    }
}
