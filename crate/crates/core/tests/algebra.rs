mod common;

use common::{cycle, cycle_end, path, zigzag, zigzag_end};
use proptest::prelude::*;
use tiltkit_core::algebra::{build_path_algebra, quiver_presentation, Element, Quiver, Relation, StructureAlgebra};
use tiltkit_core::linalg::{int, Matrix, Scalar};
use tiltkit_core::{Config, Error};

fn cartan_rows(c: &Matrix) -> Vec<Vec<i64>> {
    (0..c.rows()).map(|i| (0..c.cols()).map(|j| c.get(i, j).to_integer().try_into().unwrap()).collect()).collect()
}

#[test]
fn corpus_dimensions_and_cartan() {
    let a = cycle();
    assert_eq!(a.dim(), 11);
    assert_eq!(cartan_rows(&a.cartan()), vec![vec![1, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
    assert_eq!(a.cartan().det(), int(1));

    let s = zigzag();
    assert_eq!(s.dim(), 13);
    let row_sums: Vec<i64> = cartan_rows(&s.cartan()).iter().map(|r| r.iter().sum()).collect();
    assert_eq!(row_sums, vec![3, 3, 4, 3]);

    assert_eq!(cycle_end().dim(), 9);
    assert_eq!(zigzag_end().dim(), 15);
}

#[test]
fn normal_forms_respect_relations() {
    let s = zigzag();
    let bb = s.path_element(&path(&s, &["beta'", "beta"]));
    let gg = s.path_element(&path(&s, &["gamma", "gamma'"]));
    assert!(!bb.is_zero());
    assert_eq!(bb, gg);
    for r in s.relations() {
        assert!(s.relation_element(r).is_zero());
    }
    assert!(s.path_element(&path(&s, &["alpha", "alpha'", "alpha"])).is_zero());
}

/// Brute-force oracle: the structure constants are associative and the unit is `sum e_v`.
fn assert_associative(a: &tiltkit_core::algebra::BasicAlgebra) {
    let n = a.dim();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let (bi, bj, bk) = (Element::basis(i), Element::basis(j), Element::basis(k));
                assert_eq!(a.mul(&a.mul(&bi, &bj), &bk), a.mul(&bi, &a.mul(&bj, &bk)));
            }
        }
        assert_eq!(a.mul(&a.one(), &Element::basis(i)), Element::basis(i));
    }
}

#[test]
fn corpus_algebras_are_associative() {
    for a in [cycle(), cycle_end(), zigzag(), zigzag_end()] {
        assert_associative(&a);
    }
}

#[test]
fn non_admissible_is_rejected() {
    let q = Quiver::from_names(&["1"], &[("x", "1", "1")]).unwrap();
    assert!(matches!(build_path_algebra(q.clone(), vec![], 12), Err(Error::NotAdmissible(_))));
    let bad = Relation::new(vec![(int(1), q.path(&["x"]).unwrap())]);
    assert!(matches!(build_path_algebra(q, vec![bad], 12), Err(Error::NotAdmissible(_))));
}

fn structure_of(a: &tiltkit_core::algebra::BasicAlgebra) -> StructureAlgebra {
    let n = a.dim();
    let mut table = Vec::new();
    for i in 0..n {
        for j in 0..n {
            table.push(a.mul_basis(i, j).to_dense(n));
        }
    }
    StructureAlgebra::new(n, table, a.one().to_dense(n)).unwrap()
}

#[test]
fn presentation_round_trip() {
    let cfg = Config::default();
    for a in [cycle(), cycle_end(), zigzag(), zigzag_end()] {
        let sa = structure_of(&a);
        let p = quiver_presentation(&sa, None, &cfg).unwrap();
        assert_eq!(p.algebra.dim(), a.dim());
        assert_eq!(p.algebra.num_vertices(), a.num_vertices());
        assert_eq!(p.algebra.quiver().arrows().len(), a.quiver().arrows().len());
        let mut c1 = cartan_rows(&a.cartan()).concat();
        let mut c2 = cartan_rows(&p.algebra.cartan()).concat();
        c1.sort();
        c2.sort();
        assert_eq!(c1, c2);
    }
}

#[test]
fn radical_is_nilpotent_ideal() {
    let a = zigzag();
    let sa = structure_of(&a);
    let powers = sa.radical_powers().unwrap();
    let j = &powers[0];
    assert_eq!(j.dim(), a.dim() - a.num_vertices());
    for x in j.basis() {
        for i in 0..a.dim() {
            let b = sa.basis_vec(i);
            assert!(j.contains(&sa.mul(x, &b)));
            assert!(j.contains(&sa.mul(&b, x)));
        }
    }
    assert_eq!(powers.len() + 1, 3);
}

#[test]
fn bad_structure_constants() {
    let z = || vec![int(0), int(0)];
    // Basis {1, x} with x*1 = 0: no identity.
    let t = vec![vec![int(1), int(0)], vec![int(0), int(1)], z(), z()];
    assert!(matches!(StructureAlgebra::new(2, t, vec![int(1), int(0)]), Err(Error::NoIdentity(_))));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Random monomial relations on a random quiver: the normal-form basis is exactly the
    /// set of paths avoiding every relation, and the product is associative.
    #[test]
    fn monomial_algebras_match_path_count(
        arrows in proptest::collection::vec((0usize..3, 0usize..3), 1..5),
        rels in proptest::collection::vec(proptest::collection::vec(0usize..5, 2..4), 0..4),
    ) {
        let names: Vec<String> = (0..arrows.len()).map(|i| format!("x{i}")).collect();
        let triples: Vec<(&str, String, String)> =
            arrows.iter().enumerate().map(|(i, (s, t))| (names[i].as_str(), s.to_string(), t.to_string())).collect();
        let tr: Vec<(&str, &str, &str)> = triples.iter().map(|(n, s, t)| (*n, s.as_str(), t.as_str())).collect();
        let q = Quiver::from_names(&["0", "1", "2"], &tr).unwrap();
        let mut relations: Vec<Relation> = Vec::new();
        let mut forbidden: Vec<Vec<usize>> = Vec::new();
        for r in &rels {
            let idx: Vec<usize> = r.iter().map(|&i| i % arrows.len()).collect();
            if let Ok(p) = tiltkit_core::algebra::Path::from_arrows(&q, idx.clone()) {
                relations.push(Relation::monomial(p));
                forbidden.push(idx);
            }
        }
        // Oracle: count paths not containing a forbidden subpath, by DFS with length cap.
        let cap = 8;
        let mut count = q.num_vertices();
        let mut frontier: Vec<Vec<usize>> = (0..arrows.len()).map(|a| vec![a]).collect();
        let mut infinite = false;
        for len in 1..=cap {
            let mut next = Vec::new();
            for p in frontier {
                let bad = forbidden.iter().any(|f| p.windows(f.len()).any(|w| w == f.as_slice()));
                if bad { continue; }
                if len == cap { infinite = true; break; }
                count += 1;
                for a in 0..arrows.len() {
                    if q.arrows()[*p.last().unwrap()].target == q.arrows()[a].source {
                        let mut np = p.clone();
                        np.push(a);
                        next.push(np);
                    }
                }
            }
            frontier = next;
        }
        match build_path_algebra(q, relations, cap - 1) {
            Ok(a) => {
                prop_assert!(!infinite);
                prop_assert_eq!(a.dim(), count);
                assert_associative(&a);
            }
            Err(Error::NotAdmissible(_)) => prop_assert!(infinite),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn scalar_sanity() {
    let x: Scalar = int(3) / int(6);
    assert_eq!(tiltkit_core::linalg::format_scalar(&x), "1/2");
}
