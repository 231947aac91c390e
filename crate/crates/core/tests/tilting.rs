mod common;

use common::{cycle, cycle_end, path, zigzag, zigzag_end};
use tiltkit_core::algebra::BasicAlgebra;
use tiltkit_core::complex::ProjComplex;
use tiltkit_core::module::{projective, simple, HomMatrix};
use tiltkit_core::tilting::*;
use tiltkit_core::{Config, Error};

fn cycle_t(a: &BasicAlgebra) -> ProjComplex {
    let mut d = HomMatrix::zero(vec![1, 1, 2], vec![0]);
    d.set(0, 0, a.path_element(&path(a, &["alpha"])));
    ProjComplex::new(a, -1, vec![vec![1, 1, 2], vec![0]], vec![d]).unwrap()
}

#[test]
fn cycle_nu_stable() {
    let cfg = Config::default();
    let r = maximal_nu_stable(&cycle(), &cfg);
    assert_eq!(r.e, vec![1, 2]);
    assert_eq!(r.projectives.iter().map(|p| p.projective_injective).collect::<Vec<_>>(), [false, true, true]);
    let s = maximal_nu_stable(&zigzag(), &cfg);
    assert!([0, 2, 3].iter().all(|v| s.e.contains(v)));
}

#[test]
fn cycle_example_end_to_end() {
    let cfg = Config::default();
    let a = cycle();
    let t = cycle_t(&a);
    let rep = verify_tilting(&a, &t, false, &cfg).unwrap();
    assert!(rep.self_orthogonal && rep.k0_unimodular && rep.basic);
    assert_eq!(rep.generation_status, GenerationStatus::K0NecessaryOnly);
    assert_eq!(rep.hom_dims[&0], 9);
    let end = end_algebra(&a, &t, &cfg).unwrap();
    let b = end.algebra();
    assert_eq!(b.dim(), 9);
    assert!(presentations_match(&cycle_end(), b).is_some());
    let crit = check_iterated_nu_stable(&a, &t, &cfg).unwrap();
    assert_eq!(crit.verdict, Some(true));
    assert_eq!(crit.conditions.len(), 1);
    assert_eq!((crit.conditions[0].vertex, crit.conditions[0].multiplicity_t0), (0, 1));
    assert!(crit.conditions[0].off_degrees.is_empty());
    let simples = check_simple_images(&a, &end, &cfg).unwrap();
    assert!(simples.iter().all(|s| s.pass));
}

#[test]
fn cycle_stable_images() {
    let cfg = Config::default();
    let a = cycle();
    let t = cycle_t(&a);
    let end = end_algebra(&a, &t, &cfg).unwrap();
    let cert = stable_image(&a, &end, &simple(&a, 0), &cfg).unwrap();
    assert_eq!(cert.module.total_dim(), 1);
    assert_eq!(cert.hom_dim, 1);
    // The simple sits at the vertex of the two-term summand.
    let v = cert.module.dims().iter().position(|&d| d == 1).unwrap();
    assert_eq!(end.summands[v].width(), 1);
    let p1 = projective(&a, 0);
    assert_eq!(f_homology(&a, &end, &p1, 1).unwrap().total_dim(), 2);
    match stable_image(&a, &end, &p1, &cfg) {
        Err(Error::NotConcentrated(p)) => assert_eq!(p[&1].iter().sum::<usize>(), 2),
        other => panic!("expected NotConcentrated, got {other:?}"),
    }
}

#[test]
fn zigzag_construction() {
    let cfg = Config::default();
    let s = zigzag();
    let c = construct_tpq(&s, &[0], &[2, 3], 1, 1, &cfg).unwrap();
    assert!(c.decomposition.verify(&s, &c.raw));
    let mut shapes: Vec<(i32, Vec<Vec<usize>>)> =
        c.decomposition.summands.iter().map(|(x, m)| { assert_eq!(*m, 1); (x.lo(), x.terms().to_vec()) }).collect();
    shapes.sort();
    assert_eq!(
        shapes,
        vec![(-1, vec![vec![0]]), (-1, vec![vec![0], vec![1], vec![2]]), (1, vec![vec![2]]), (1, vec![vec![3]])]
    );
    let rep = verify_tilting(&s, &c.complex, true, &cfg).unwrap();
    assert!(rep.is_tilting() && rep.basic);
    assert_eq!(rep.generation_status, GenerationStatus::ProvedByConstruction);
    let end = end_algebra(&s, &c.complex, &cfg).unwrap();
    let b = end.algebra();
    assert_eq!((b.num_vertices(), b.quiver().arrows().len()), (4, 5));
    assert!(presentations_match(&zigzag_end(), b).is_some());
    assert_eq!(check_iterated_nu_stable(&s, &c.complex, &cfg).unwrap().verdict, Some(true));
    let simples = check_simple_images(&s, &end, &cfg).unwrap();
    assert_eq!(simples.iter().map(|x| x.vertex).collect::<Vec<_>>(), vec![1]);
    assert!(simples[0].pass);
}

#[test]
fn construction_for_small_parameters() {
    let cfg = Config::default();
    let s = zigzag();
    for r in 1..=2 {
        for t in 1..=2 {
            let c = construct_tpq(&s, &[0], &[2, 3], r, t, &cfg).unwrap();
            let rep = verify_tilting(&s, &c.complex, true, &cfg).unwrap();
            assert!(rep.self_orthogonal, "r = {r}, s = {t}");
            assert_eq!(c.decomposition.num_indecomposables(), 4);
        }
    }
}

#[test]
fn empty_parameters_give_stalk_algebra() {
    let cfg = Config::default();
    let a = cycle();
    let c = construct_tpq(&a, &[], &[], 1, 1, &cfg).unwrap();
    assert_eq!(c.complex, ProjComplex::stalk(0, vec![0, 1, 2]));
    let end = end_algebra(&a, &c.complex, &cfg).unwrap();
    assert!(presentations_match(&a, end.algebra()).is_some());
}

#[test]
fn preconditions_are_checked() {
    let cfg = Config::default();
    let s = zigzag();
    // Hom(P1, P2) != 0.
    assert!(matches!(construct_tpq(&s, &[0], &[1], 1, 1, &cfg), Err(Error::PreconditionFailed(_))));
    // P(1) over the three-cycle is not ν-stable.
    assert!(matches!(construct_tpq(&cycle(), &[0], &[], 1, 1, &cfg), Err(Error::PreconditionFailed(_))));
    assert!(matches!(construct_tpq(&s, &[0], &[2, 3], 0, 1, &cfg), Err(Error::PreconditionFailed(_))));
}

#[test]
fn negative_controls() {
    let cfg = Config::default();
    let a = cycle();
    let t = cycle_t(&a);
    let doubled = ProjComplex::direct_sum(&[&t, &t]);
    let rep = verify_tilting(&a, &doubled, false, &cfg).unwrap();
    assert!(rep.self_orthogonal && !rep.basic);
    assert!(matches!(end_algebra(&a, &doubled, &cfg), Err(Error::NotBasic(_))));
    let id = ProjComplex::new(&a, 0, vec![vec![0], vec![0]], vec![HomMatrix::identity(&a, &[0])]).unwrap();
    assert_eq!(verify_tilting(&a, &id, false, &cfg).unwrap_err(), Error::NotRadical);
    let not_tilting = ProjComplex::stalk(0, vec![0]);
    let r = verify_tilting(&a, &not_tilting, false, &cfg).unwrap();
    assert!(!r.k0_unimodular);
}

#[test]
fn add_nu_routes_agree_on_corpus() {
    let cfg = Config::default();
    for a in [cycle(), cycle_end(), zigzag(), zigzag_end()] {
        let n = a.num_vertices();
        for mask in 0u32..(1 << n) {
            let labels: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
            let x = tiltkit_core::module::projective_sum(&a, &labels);
            check_add_nu_equal(&a, &x, &cfg).unwrap();
        }
    }
}

#[test]
fn profiles_are_additive() {
    let cfg = Config::default();
    let a = cycle();
    let t = cycle_t(&a);
    let end = end_algebra(&a, &t, &cfg).unwrap();
    let mods: Vec<_> = (0..3).map(|v| simple(&a, v)).chain((0..3).map(|v| projective(&a, v))).collect();
    for x in &mods {
        for y in &mods {
            let xy = tiltkit_core::module::Representation::direct_sum(&[x, y]);
            let (px, py, pxy) =
                (homology_profile(&a, &end, x).unwrap(), homology_profile(&a, &end, y).unwrap(), homology_profile(&a, &end, &xy).unwrap());
            for i in -1..=1 {
                let get = |p: &tiltkit_core::Profile| p.get(&i).cloned().unwrap_or(vec![0; 3]);
                let sum: Vec<usize> = get(&px).iter().zip(get(&py)).map(|(u, v)| u + v).collect();
                assert_eq!(get(&pxy), sum);
            }
        }
    }
}

#[test]
fn add_nu_routes_can_disagree_off_tilting_terms() {
    // Two-cycle with radical square zero: ν swaps the two projectives, so P(1) lies in
    // add(E) while add(P(1)) != add(ν P(1)).
    use tiltkit_core::algebra::{build_path_algebra, Quiver, Relation};
    use tiltkit_core::linalg::int;
    let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
    let rels = vec![
        Relation::new(vec![(int(1), q.path(&["a", "b"]).unwrap())]),
        Relation::new(vec![(int(1), q.path(&["b", "a"]).unwrap())]),
    ];
    let a = build_path_algebra(q, rels, 30).unwrap();
    let cfg = Config::default();
    assert_eq!(nu_permutation(&a, &cfg), vec![Some(1), Some(0)]);
    let c = compare_add_nu(&a, &projective(&a, 0), &cfg).unwrap();
    assert!(!c.add_equal && c.in_add_e);
    assert!(matches!(check_add_nu_equal(&a, &projective(&a, 0), &cfg), Err(Error::InternalDisagreement(_))));
    let both = tiltkit_core::module::projective_sum(&a, &[0, 1]);
    assert!(check_add_nu_equal(&a, &both, &cfg).unwrap());
}
