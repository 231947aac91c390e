//! Versioned JSON formats for algebras, modules and complexes.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path as FsPath, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};
use tiltkit_core::algebra::{build_path_algebra, Arrow, BasicAlgebra, Element, Path, Quiver, Relation};
use tiltkit_core::complex::ProjComplex;
use tiltkit_core::linalg::{format_scalar, parse_scalar, Matrix};
use tiltkit_core::module::{injective, projective, simple, HomMatrix, Representation};
use tiltkit_core::Error;

pub const FORMAT: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub format: u32,
    pub vertices: Vec<String>,
    #[serde(default)]
    pub arrows: Vec<ArrowSpec>,
    #[serde(default)]
    pub relations: Vec<Vec<Term>>,
}

/// A matrix entry: one term or a list of terms (empty for zero).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Entry {
    Terms(Vec<Term>),
    Single(Term),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexFile {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    pub terms: BTreeMap<i32, Vec<String>>,
    #[serde(default)]
    pub diffs: BTreeMap<i32, Vec<Vec<Entry>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StandardKind {
    Simple,
    Projective,
    Injective,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Standard {
    pub kind: StandardKind,
    pub vertex: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleFile {
    pub format: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub standard: Option<Standard>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dims: Option<BTreeMap<String, usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub maps: Option<BTreeMap<String, Vec<Vec<String>>>>,
}

fn check_format(f: u32) -> Result<(), Error> {
    if f != FORMAT {
        return Err(Error::Parse(format!("unsupported format version {f}")));
    }
    Ok(())
}

fn vertex(q: &Quiver, name: &str) -> Result<usize, Error> {
    q.vertex_index(name).ok_or_else(|| Error::Parse(format!("unknown vertex {name:?}")))
}

fn parse_path(q: &Quiver, names: &[String]) -> Result<Path, Error> {
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    q.path(&refs)
}

pub fn algebra_from_file(f: &AlgebraFile, max_path_len: usize) -> Result<BasicAlgebra, Error> {
    check_format(f.format)?;
    let names: Vec<&str> = f.vertices.iter().map(String::as_str).collect();
    let probe = Quiver::from_names(&names, &[])?;
    let arrows = f
        .arrows
        .iter()
        .map(|a| Ok(Arrow { name: a.name.clone(), source: vertex(&probe, &a.source)?, target: vertex(&probe, &a.target)? }))
        .collect::<Result<Vec<_>, Error>>()?;
    let q = Quiver::new(f.vertices.clone(), arrows)?;
    let relations = f
        .relations
        .iter()
        .map(|r| {
            let terms = r
                .iter()
                .map(|t| Ok((parse_scalar(&t.coeff)?, parse_path(&q, &t.path)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Relation::new(terms))
        })
        .collect::<Result<Vec<_>, Error>>()?;
    build_path_algebra(q, relations, max_path_len)
}

fn path_names(q: &Quiver, p: &Path) -> Vec<String> {
    p.arrows.iter().map(|&a| q.arrows()[a].name.clone()).collect()
}

pub fn algebra_to_file(a: &BasicAlgebra) -> AlgebraFile {
    let q = a.quiver();
    AlgebraFile {
        format: FORMAT,
        vertices: q.vertices().to_vec(),
        arrows: q
            .arrows()
            .iter()
            .map(|x| ArrowSpec {
                name: x.name.clone(),
                source: q.vertices()[x.source].clone(),
                target: q.vertices()[x.target].clone(),
            })
            .collect(),
        relations: a
            .relations()
            .iter()
            .map(|r| r.terms.iter().map(|(c, p)| Term { coeff: format_scalar(c), path: path_names(q, p) }).collect())
            .collect(),
    }
}

fn element_terms(a: &BasicAlgebra, x: &Element) -> Vec<Term> {
    x.terms()
        .iter()
        .map(|(i, c)| Term { coeff: format_scalar(c), path: path_names(a.quiver(), &a.basis()[*i]) })
        .collect()
}

fn entry_element(a: &BasicAlgebra, e: &Entry, source: usize, target: usize) -> Result<Element, Error> {
    let terms: &[Term] = match e {
        Entry::Terms(t) => t,
        Entry::Single(t) => std::slice::from_ref(t),
    };
    let mut x = Element::zero();
    for t in terms {
        let c = parse_scalar(&t.coeff)?;
        let p = if t.path.is_empty() {
            if source != target {
                return Err(Error::Parse(String::from("trivial path between different vertices")));
            }
            Path::trivial(source)
        } else {
            parse_path(a.quiver(), &t.path)?
        };
        x.add_scaled(&a.path_element(&p), &c);
    }
    Ok(x)
}

pub fn complex_from_file(a: &BasicAlgebra, f: &ComplexFile) -> Result<ProjComplex, Error> {
    check_format(f.format)?;
    let q = a.quiver();
    let (Some(&lo), Some(&hi)) = (f.terms.keys().next(), f.terms.keys().next_back()) else {
        return Ok(ProjComplex::zero());
    };
    if let Some(d) = f.diffs.keys().find(|&&d| d < lo || d >= hi) {
        return Err(Error::Parse(format!("differential at degree {d} outside the term range")));
    }
    let terms = (lo..=hi)
        .map(|d| f.terms.get(&d).map_or(Ok(Vec::new()), |ls| ls.iter().map(|l| vertex(q, l)).collect()))
        .collect::<Result<Vec<Vec<usize>>, Error>>()?;
    let mut diffs = Vec::new();
    for d in lo..hi {
        let (s, t) = (&terms[(d - lo) as usize], &terms[(d - lo + 1) as usize]);
        let mut h = HomMatrix::zero(s.clone(), t.clone());
        if let Some(rows) = f.diffs.get(&d) {
            if rows.len() != s.len() || rows.iter().any(|r| r.len() != t.len()) {
                return Err(Error::DimensionMismatch(format!(
                    "differential at degree {d} must be {} x {}",
                    s.len(),
                    t.len()
                )));
            }
            for (k, row) in rows.iter().enumerate() {
                for (l, e) in row.iter().enumerate() {
                    h.set(k, l, entry_element(a, e, t[l], s[k])?);
                }
            }
        }
        diffs.push(h);
    }
    ProjComplex::new(a, lo, terms, diffs)
}

pub fn complex_to_file(a: &BasicAlgebra, c: &ProjComplex, algebra: Option<String>) -> ComplexFile {
    let q = a.quiver();
    let name = |v: &usize| q.vertices()[*v].clone();
    let mut terms = BTreeMap::new();
    let mut diffs = BTreeMap::new();
    if !c.is_zero() {
        for d in c.degrees() {
            terms.insert(d, c.term(d).iter().map(name).collect());
            if d < c.hi() {
                let h = c.diff(d);
                let rows = (0..h.rows())
                    .map(|k| (0..h.cols()).map(|l| Entry::Terms(element_terms(a, h.get(k, l)))).collect())
                    .collect();
                diffs.insert(d, rows);
            }
        }
    }
    ComplexFile { format: FORMAT, algebra, terms, diffs }
}

pub fn module_from_file(a: &BasicAlgebra, f: &ModuleFile) -> Result<Representation, Error> {
    check_format(f.format)?;
    let q = a.quiver();
    if let Some(s) = &f.standard {
        let v = vertex(q, &s.vertex)?;
        return Ok(match s.kind {
            StandardKind::Simple => simple(a, v),
            StandardKind::Projective => projective(a, v),
            StandardKind::Injective => injective(a, v),
        });
    }
    let given = f.dims.clone().unwrap_or_default();
    for k in given.keys() {
        vertex(q, k)?;
    }
    let dims: Vec<usize> = q.vertices().iter().map(|v| given.get(v).copied().unwrap_or(0)).collect();
    let mut given_maps = f.maps.clone().unwrap_or_default();
    let maps = q
        .arrows()
        .iter()
        .map(|x| {
            let (r, c) = (dims[x.source], dims[x.target]);
            match given_maps.remove(&x.name) {
                None => Ok(Matrix::zeros(r, c)),
                Some(rows) => {
                    if rows.len() != r || rows.iter().any(|row| row.len() != c) {
                        return Err(Error::DimensionMismatch(format!("map for {} must be {r} x {c}", x.name)));
                    }
                    let rows = rows
                        .iter()
                        .map(|row| row.iter().map(|s| parse_scalar(s)).collect::<Result<Vec<_>, Error>>())
                        .collect::<Result<Vec<_>, Error>>()?;
                    Ok(Matrix::from_rows(rows, c))
                }
            }
        })
        .collect::<Result<Vec<_>, Error>>()?;
    if let Some(name) = given_maps.keys().next() {
        return Err(Error::Parse(format!("unknown arrow {name:?}")));
    }
    Representation::new(a, dims, maps)
}

pub fn module_to_file(a: &BasicAlgebra, m: &Representation, algebra: Option<String>) -> ModuleFile {
    let q = a.quiver();
    let dims = q.vertices().iter().cloned().zip(m.dims().iter().copied()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, x)| {
            let mat = m.map(i);
            let rows = (0..mat.rows()).map(|r| mat.row(r).iter().map(format_scalar).collect()).collect();
            (x.name.clone(), rows)
        })
        .collect();
    ModuleFile { format: FORMAT, algebra, standard: None, dims: Some(dims), maps: Some(maps) }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &FsPath) -> anyhow::Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn load_algebra(path: &FsPath, max_path_len: usize) -> anyhow::Result<BasicAlgebra> {
    let f: AlgebraFile = read_json(path)?;
    algebra_from_file(&f, max_path_len).with_context(|| format!("building algebra from {}", path.display()))
}

/// Checks that an `"algebra"` reference inside `file` names the same algebra as `algebra_path`.
pub fn check_algebra_ref(file: &FsPath, reference: Option<&str>, algebra_path: &FsPath) -> anyhow::Result<()> {
    let Some(r) = reference else { return Ok(()) };
    let resolved: PathBuf = file.parent().unwrap_or(FsPath::new(".")).join(r);
    let same_file = match (resolved.canonicalize(), algebra_path.canonicalize()) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    };
    if same_file {
        return Ok(());
    }
    let same_content = match (read_json::<AlgebraFile>(&resolved), read_json::<AlgebraFile>(algebra_path)) {
        (Ok(a), Ok(b)) => a == b,
        _ => false,
    };
    if !same_content {
        bail!("{} refers to algebra {r:?}, not {}", file.display(), algebra_path.display());
    }
    Ok(())
}

pub fn load_complex(a: &BasicAlgebra, path: &FsPath, algebra_path: &FsPath) -> anyhow::Result<ProjComplex> {
    let f: ComplexFile = read_json(path)?;
    check_algebra_ref(path, f.algebra.as_deref(), algebra_path)?;
    complex_from_file(a, &f).with_context(|| format!("reading complex {}", path.display()))
}

pub fn load_module(a: &BasicAlgebra, path: &FsPath, algebra_path: &FsPath) -> anyhow::Result<Representation> {
    let f: ModuleFile = read_json(path)?;
    check_algebra_ref(path, f.algebra.as_deref(), algebra_path)?;
    module_from_file(a, &f).with_context(|| format!("reading module {}", path.display()))
}
