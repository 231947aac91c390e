use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::path_algebra::{build_path_algebra, close_ideal, BasicAlgebra, Stage};
use super::quiver::{Arrow, Path, Quiver, Relation};
use super::structure::StructureAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Scalar, Span};
use crate::Config;

/// Quiver presentation of an abstract basic algebra.
#[derive(Clone, Debug)]
pub struct Presentation {
    /// `kQ/(R)` built from the recovered quiver and relations.
    pub algebra: BasicAlgebra,
    /// Primitive idempotents in structure coordinates, one per vertex.
    pub idempotents: Vec<Vec<Scalar>>,
    /// Image of each arrow in structure coordinates.
    pub arrow_elements: Vec<Vec<Scalar>>,
    /// Row `i` is the image of basis path `i` of `algebra` in structure coordinates.
    pub iso: Matrix,
    /// Nilpotency index of the radical.
    pub loewy_length: usize,
}

/// Recovers quiver and relations of a basic split algebra.
///
/// `idempotents` may be supplied (a complete orthogonal primitive set); otherwise they are
/// computed from the semisimple quotient.
pub fn quiver_presentation(
    a: &StructureAlgebra,
    idempotents: Option<Vec<Vec<Scalar>>>,
    cfg: &Config,
) -> Result<Presentation> {
    let n = a.dim();
    let powers = a.radical_powers()?;
    let empty = Span::new(n);
    let rad = powers.first().unwrap_or(&empty);
    let rad2 = powers.get(1).unwrap_or(&empty);
    let loewy_length = powers.len() + 1;
    let ids = match idempotents {
        Some(v) => v,
        None => {
            let ids = a.primitive_idempotents(rad, cfg.seed);
            if !ids.split {
                return Err(Error::NotBasic(String::from("semisimple quotient does not split over Q")));
            }
            ids.elements
        }
    };
    check_idempotents(a, &ids, rad)?;
    let r = ids.len();

    // Arrows: complement of e_i J^2 e_j in e_i J e_j.
    let mut arrows = Vec::new();
    let mut arrow_elements = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let sandwich = |x: &[Scalar]| a.mul(&a.mul(&ids[i], x), &ids[j]);
            let mut acc = Span::from_vectors(n, rad2.basis().iter().map(|x| sandwich(x)));
            for x in rad.basis() {
                let y = sandwich(x);
                if acc.insert(y.clone()) {
                    arrows.push(Arrow { name: format!("a{}", arrows.len()), source: i, target: j });
                    arrow_elements.push(y);
                }
            }
        }
    }
    let vertices: Vec<String> = (1..=r).map(|v| v.to_string()).collect();
    let quiver = Quiver::new(vertices, arrows)?;

    // Images of all paths of length <= loewy_length; longer ones vanish.
    let bound = loewy_length + 1;
    let stage = Stage::enumerate(&quiver, bound)?;
    let images: Vec<Vec<Scalar>> = stage
        .paths
        .iter()
        .map(|p| {
            let mut x = ids[p.source].clone();
            for &ar in &p.arrows {
                x = a.mul(&x, &arrow_elements[ar]);
            }
            x
        })
        .collect();
    let phi = Matrix::from_rows(images.clone(), n);
    let kernel = Span::from_vectors(stage.paths.len(), phi.left_kernel_basis());

    let mut generated = Span::new(stage.paths.len());
    let mut relations = Vec::new();
    for (_, row) in kernel.echelon() {
        if generated.contains(row) {
            continue;
        }
        relations.push(Relation::new(
            row.iter()
                .enumerate()
                .filter(|t| !t.1.is_zero())
                .map(|(k, c)| (c.clone(), stage.paths[k].clone()))
                .collect(),
        ));
        close_ideal(&stage, &quiver, &mut generated, vec![row.to_vec()], bound);
    }
    if generated.dim() != kernel.dim() {
        return Err(Error::InternalDisagreement(String::from("relation ideal does not match kernel")));
    }

    let algebra = build_path_algebra(quiver, relations, cfg.max_path_len)?;
    if algebra.dim() != n {
        return Err(Error::InternalDisagreement(format!(
            "presented algebra has dimension {} instead of {n}",
            algebra.dim()
        )));
    }
    let rows: Vec<Vec<Scalar>> = algebra
        .basis()
        .iter()
        .map(|p| images[stage.lookup(p.source, &p.arrows).expect("basis path enumerated")].clone())
        .collect();
    let iso = Matrix::from_rows(rows, n);
    if iso.rank() != n {
        return Err(Error::InternalDisagreement(String::from("presentation map is not bijective")));
    }
    for i in 0..n {
        for j in 0..n {
            let lhs = iso.vec_mul(&algebra.mul_basis(i, j).to_dense(n));
            let rhs = a.mul(iso.row(i), iso.row(j));
            if lhs != rhs {
                return Err(Error::InternalDisagreement(String::from("presentation map is not multiplicative")));
            }
        }
    }
    Ok(Presentation { algebra, idempotents: ids, arrow_elements, iso, loewy_length })
}

fn check_idempotents(a: &StructureAlgebra, ids: &[Vec<Scalar>], rad: &Span) -> Result<()> {
    let n = a.dim();
    let mut sum = vec![Scalar::zero(); n];
    for (i, e) in ids.iter().enumerate() {
        for (j, f) in ids.iter().enumerate() {
            let ef = a.mul(e, f);
            let ok = if i == j { &ef == e } else { ef.iter().all(Zero::is_zero) };
            if !ok {
                return Err(Error::NotBasic(String::from("idempotents are not orthogonal")));
            }
        }
        if a.corner_top_dim(e, rad) != 1 {
            return Err(Error::NotBasic(String::from("idempotent is not primitive with split local corner")));
        }
        for (s, x) in sum.iter_mut().zip(e) {
            *s += x;
        }
    }
    if sum != a.one() {
        return Err(Error::NotBasic(String::from("idempotents do not sum to the identity")));
    }
    if n - rad.dim() != ids.len() {
        return Err(Error::NotBasic(format!(
            "semisimple quotient has dimension {} but there are {} primitive idempotents",
            n - rad.dim(),
            ids.len()
        )));
    }
    Ok(())
}

/// Validates structure constants and returns the algebra with its recovered presentation.
pub fn algebra_from_structure_constants(
    dim: usize,
    table: Vec<Vec<Scalar>>,
    one: Vec<Scalar>,
    cfg: &Config,
) -> Result<(StructureAlgebra, Presentation)> {
    let a = StructureAlgebra::new(dim, table, one)?;
    let p = quiver_presentation(&a, None, cfg)?;
    Ok((a, p))
}

impl Presentation {
    /// Image of a path of the presented quiver, in structure coordinates.
    pub fn path_image(&self, a: &StructureAlgebra, path: &Path) -> Vec<Scalar> {
        let mut x = self.idempotents[path.source].clone();
        for &ar in &path.arrows {
            x = a.mul(&x, &self.arrow_elements[ar]);
        }
        x
    }
}
