use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::linalg::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Finite quiver with named vertices and arrows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate vertex {v:?}")));
            }
        }
        let mut names = BTreeSet::new();
        for a in &arrows {
            if !names.insert(a.name.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow {:?}", a.name)));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(Error::InvalidQuiver(format!("arrow {:?} has an unknown endpoint", a.name)));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from `(name, source, target)` triples with vertex names.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Self> {
        let vs: Vec<String> = vertices.iter().map(|s| String::from(*s)).collect();
        let find = |n: &str| {
            vs.iter().position(|v| v == n).ok_or_else(|| Error::InvalidQuiver(format!("unknown vertex {n:?}")))
        };
        let mut arr = Vec::new();
        for (name, s, t) in arrows {
            arr.push(Arrow { name: String::from(*name), source: find(s)?, target: find(t)? });
        }
        Quiver::new(vs, arr)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// Path from arrow names (left to right); an empty list is rejected, use [`Path::trivial`].
    pub fn path(&self, names: &[&str]) -> Result<Path> {
        let mut idx = Vec::new();
        for n in names {
            idx.push(self.arrow_index(n).ok_or_else(|| Error::InvalidQuiver(format!("unknown arrow {n:?}")))?);
        }
        Path::from_arrows(self, idx)
    }
}

/// Path in a quiver; arrows are concatenated left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { source: v, target: v, arrows: Vec::new() }
    }

    pub fn from_arrows(q: &Quiver, arrows: Vec<usize>) -> Result<Self> {
        let Some(&first) = arrows.first() else {
            return Err(Error::InvalidQuiver(String::from("empty arrow list for path")));
        };
        let source = q.arrows[first].source;
        let mut at = source;
        for &a in &arrows {
            let arr = q.arrows.get(a).ok_or_else(|| Error::InvalidQuiver(format!("arrow index {a}")))?;
            if arr.source != at {
                return Err(Error::InvalidQuiver(format!("arrows do not compose at {:?}", arr.name)));
            }
            at = arr.target;
        }
        Ok(Path { source, target: at, arrows })
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Concatenation `self` then `other`, if composable.
    pub fn concat(&self, other: &Path) -> Option<Path> {
        if self.target != other.source {
            return None;
        }
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Some(Path { source: self.source, target: other.target, arrows })
    }

    pub fn display(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e{}", q.vertices[self.source]);
        }
        let names: Vec<&str> = self.arrows.iter().map(|&a| q.arrows[a].name.as_str()).collect();
        names.join("*")
    }

    /// Order used for normal forms: shorter first, then lexicographic on arrows, then source.
    pub fn order_key(&self) -> (usize, &[usize], usize) {
        (self.arrows.len(), &self.arrows, self.source)
    }
}

/// Linear combination of parallel paths.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Path)>) -> Self {
        Relation { terms }
    }

    pub fn monomial(p: Path) -> Self {
        Relation { terms: alloc::vec![(num_traits::One::one(), p)] }
    }

    pub fn display(&self, q: &Quiver) -> String {
        let parts: Vec<String> =
            self.terms.iter().map(|(c, p)| format!("{}*{}", crate::linalg::format_scalar(c), p.display(q))).collect();
        parts.join(" + ")
    }
}
