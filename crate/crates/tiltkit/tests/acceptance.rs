//! Acceptance criteria 1-7. Each criterion prints one PASS/FAIL line.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tiltkit::format::{load_algebra, load_complex, load_module};
use tiltkit::report::{loewy_display, name};
use tiltkit_core::algebra::{BasicAlgebra, Element};
use tiltkit_core::complex::{homotopy_hom_dim, iso_indecomposable_complex, minimize, ProjComplex};
use tiltkit_core::linalg::int;
use tiltkit_core::module::{
    hom_dim, injective, loewy_layers, projective, projective_sum, simple, HomMatrix, Representation,
};
use tiltkit_core::tilting::{
    check_add_nu_equal, check_iterated_nu_stable, check_simple_images, construct_tpq, end_algebra, f_homology,
    homology_profile, maximal_nu_stable, presentations_match, stable_image, verify_tilting,
};
use tiltkit_core::{Config, Error, Profile};

type Outcome = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn corpus(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../corpus").join(name)
}

fn algebra(name: &str) -> BasicAlgebra {
    load_algebra(&corpus(name), 30).unwrap()
}

fn complex(a: &BasicAlgebra, file: &str, alg: &str) -> ProjComplex {
    load_complex(a, &corpus(file), &corpus(alg)).unwrap()
}

fn run(n: u32, title: &str, limit: Duration, f: impl FnOnce() -> Outcome) -> bool {
    let start = Instant::now();
    let res = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
        let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
        Err(format!("panicked: {}", msg.unwrap_or_default()))
    });
    let took = start.elapsed();
    let res = res.and_then(|_| {
        if took <= limit {
            Ok(())
        } else {
            Err(format!("took {took:?}, limit {limit:?}"))
        }
    });
    match &res {
        Ok(()) => println!("criterion {n}: PASS ({} ms) {title}", took.as_millis()),
        Err(e) => println!("criterion {n}: FAIL ({} ms) {title}: {e}", took.as_millis()),
    }
    res.is_ok()
}

fn c1() -> Outcome {
    let cfg = Config::default();
    let a = algebra("sec5_A.json");
    ensure!(a.dim() == 13, "dim {}", a.dim());
    let table: Vec<String> =
        (0..4).map(|v| format!("P{}:{}", name(&a, v), loewy_display(&a, &loewy_layers(&a, &projective(&a, v))))).collect();
    ensure!(table == ["P1:1/2/1", "P2:2/{1,3}", "P3:3/{2,4}/3", "P4:4/3/4"], "Loewy table {table:?}");
    let c = construct_tpq(&a, &[0], &[2, 3], 1, 1, &cfg).map_err(|e| e.to_string())?;
    let dec = &c.decomposition;
    ensure!(dec.verify(&a, &c.raw), "decomposition certificate");
    ensure!(dec.summands.len() == 4 && dec.summands.iter().all(|s| s.1 == 1), "summands {:?}", dec.summands.len());
    for i in 0..4 {
        for j in i + 1..4 {
            ensure!(
                iso_indecomposable_complex(&a, &dec.summands[i].0, &dec.summands[j].0).is_none(),
                "summands {i} and {j} isomorphic"
            );
        }
    }
    ensure!(
        dec.summands.iter().any(|(x, _)| x.terms() == [vec![0], vec![1], vec![2]]),
        "no summand P1 -> P2 -> P3"
    );
    let rep = verify_tilting(&a, &c.complex, true, &cfg).map_err(|e| e.to_string())?;
    ensure!(rep.is_tilting() && rep.basic, "verify_tilting");
    let end = end_algebra(&a, &c.complex, &cfg).map_err(|e| e.to_string())?;
    let b = end.algebra();
    ensure!(b.num_vertices() == 4 && b.quiver().arrows().len() == 5, "quiver of B");
    ensure!(presentations_match(&algebra("sec5_B.json"), b).is_some(), "relation ideal of B");
    let crit = check_iterated_nu_stable(&a, &c.complex, &cfg).map_err(|e| e.to_string())?;
    ensure!(crit.verdict == Some(true), "criterion verdict {:?}", crit.verdict);
    Ok(())
}

fn c2() -> Outcome {
    let cfg = Config::default();
    let a = algebra("fig1.json");
    ensure!(maximal_nu_stable(&a, &cfg).e == [1, 2], "E");
    let t = complex(&a, "fig1_T.json", "fig1.json");
    let v = t.validate(&a);
    ensure!(v.d_squared_failure.is_none() && v.is_radical, "validate");
    let rep = verify_tilting(&a, &t, false, &cfg).map_err(|e| e.to_string())?;
    ensure!(rep.hom_dims.iter().all(|(n, d)| *n == 0 || *d == 0), "self-orthogonality {:?}", rep.hom_dims);
    ensure!(rep.is_tilting() && rep.basic, "verify_tilting");
    let end = end_algebra(&a, &t, &cfg).map_err(|e| e.to_string())?;
    let b = end.algebra();
    let cycle_end = algebra("fig2.json");
    ensure!(b.dim() == cycle_end.dim(), "dim {} vs {}", b.dim(), cycle_end.dim());
    let m = presentations_match(&cycle_end, b).ok_or("relation ideals differ")?;
    let (cf, cb) = (cycle_end.cartan(), b.cartan());
    for i in 0..3 {
        for j in 0..3 {
            ensure!(cf.get(i, j) == cb.get(m.vertex_map[i], m.vertex_map[j]), "Cartan entry ({i},{j})");
        }
    }
    let crit = check_iterated_nu_stable(&a, &t, &cfg).map_err(|e| e.to_string())?;
    ensure!(crit.verdict == Some(true), "verdict");
    let w = crit.conditions.iter().find(|c| c.vertex == 0).ok_or("no witness for P(1)")?;
    ensure!(w.a && w.b && w.multiplicity_t0 == 1, "witness {w:?}");
    Ok(())
}

fn c3() -> Outcome {
    let cfg = Config::default();
    let cycle = algebra("fig1.json");
    let zigzag = algebra("sec5_A.json");
    let zigzag_t = complex(&zigzag, "sec5_T.json", "sec5_A.json");
    let mut cases = vec![(cycle.clone(), complex(&cycle, "fig1_T.json", "fig1.json")), (zigzag.clone(), zigzag_t)];
    for a in [cycle, algebra("fig2.json"), zigzag] {
        let all: Vec<usize> = (0..a.num_vertices()).collect();
        cases.push((a, ProjComplex::stalk(0, all)));
    }
    for (i, (a, t)) in cases.iter().enumerate() {
        let crit = check_iterated_nu_stable(a, t, &cfg).map_err(|e| e.to_string())?;
        let end = end_algebra(a, t, &cfg).map_err(|e| e.to_string())?;
        let simples = check_simple_images(a, &end, &cfg).map_err(|e| e.to_string())?;
        let by_images = simples.iter().all(|s| s.pass);
        ensure!(crit.verdict == Some(by_images), "case {i}: {:?} vs {by_images}", crit.verdict);
    }
    Ok(())
}

fn c4() -> Outcome {
    let cfg = Config::default();
    let mut cases = 0;
    for file in ["fig1.json", "fig2.json", "sec5_A.json", "sec5_B.json"] {
        let a = algebra(file);
        let n = a.num_vertices();
        for mask in 1u32..(1 << n) {
            let labels: Vec<usize> = (0..n).filter(|v| mask & (1 << v) != 0).collect();
            check_add_nu_equal(&a, &projective_sum(&a, &labels), &cfg).map_err(|e| format!("{file} {labels:?}: {e}"))?;
            cases += 1;
        }
        // Multiplicities do not change add-closures.
        let doubled: Vec<usize> = (0..n).chain(0..n).collect();
        check_add_nu_equal(&a, &projective_sum(&a, &doubled), &cfg).map_err(|e| format!("{file} doubled: {e}"))?;
        cases += 1;
    }
    ensure!(cases >= 20, "only {cases} cases");
    Ok(())
}

fn random_radical(a: &BasicAlgebra, src: &[usize], tgt: &[usize], rng: &mut ChaCha8Rng) -> HomMatrix {
    let mut h = HomMatrix::zero(src.to_vec(), tgt.to_vec());
    for (k, &s) in src.iter().enumerate() {
        for (l, &t) in tgt.iter().enumerate() {
            let mut x = Element::zero();
            for &p in a.peirce(t, s) {
                if !a.basis()[p].is_trivial() {
                    x.add_scaled(&Element::basis(p), &int((rng.next_u32() % 5) as i64 - 2));
                }
            }
            h.set(k, l, x);
        }
    }
    h
}

/// `x` plus a contractible piece, conjugated by a random degreewise automorphism.
fn disguise(a: &BasicAlgebra, x: &ProjComplex, rng: &mut ChaCha8Rng) -> ProjComplex {
    let v = (rng.next_u32() as usize) % a.num_vertices();
    let d = x.lo() + (rng.next_u32() % (x.width() as u32 + 1)) as i32 - 1;
    let cone = ProjComplex::new(a, d, vec![vec![v], vec![v]], vec![HomMatrix::identity(a, &[v])]).unwrap();
    let y = ProjComplex::direct_sum(&[x, &cone]);
    let autos: Vec<(HomMatrix, HomMatrix)> = y
        .degrees()
        .map(|d| {
            let ls = y.term(d);
            let g = HomMatrix::identity(a, ls).add(&random_radical(a, ls, ls, rng));
            let inv = g.inverse(a).unwrap();
            (g, inv)
        })
        .collect();
    let diffs: Vec<HomMatrix> = (0..autos.len() - 1)
        .map(|i| autos[i].0.then(a, &y.diff(y.lo() + i as i32)).then(a, &autos[i + 1].1))
        .collect();
    let terms: Vec<Vec<usize>> = y.degrees().map(|d| y.term(d).to_vec()).collect();
    ProjComplex::new(a, y.lo(), terms, diffs).unwrap()
}

fn sorted_terms(x: &ProjComplex) -> Vec<(i32, Vec<usize>)> {
    if x.is_zero() {
        return Vec::new();
    }
    x.degrees()
        .map(|d| {
            let mut t = x.term(d).to_vec();
            t.sort_unstable();
            (d, t)
        })
        .filter(|(_, t)| !t.is_empty())
        .collect()
}

fn c5() -> Outcome {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let cycle = algebra("fig1.json");
    let zigzag = algebra("sec5_A.json");
    let radical = [
        (cycle.clone(), complex(&cycle, "fig1_T.json", "fig1.json")),
        (zigzag.clone(), complex(&zigzag, "sec5_T.json", "sec5_A.json")),
    ];
    for (a, x) in &radical {
        for round in 0..3 {
            let y = disguise(a, x, &mut rng);
            let m = minimize(a, &y);
            ensure!(m.complex.is_radical(a), "minimized complex not radical");
            ensure!(minimize(a, &m.complex).complex == m.complex, "minimize not idempotent");
            ensure!(sorted_terms(&m.complex) == sorted_terms(x), "round {round}: radical forms differ degreewise");
            for n in -2..=2 {
                ensure!(
                    homotopy_hom_dim(a, &y, &y, n) == homotopy_hom_dim(a, &m.complex, &m.complex, n),
                    "hom dim changed under minimization at shift {n}"
                );
            }
        }
    }
    let mut modules: Vec<(BasicAlgebra, Representation)> = Vec::new();
    for file in ["fig1.json", "fig2.json", "sec5_A.json", "sec5_B.json"] {
        let a = algebra(file);
        for v in 0..a.num_vertices() {
            for m in [projective(&a, v), injective(&a, v), simple(&a, v)] {
                modules.push((a.clone(), m));
            }
        }
    }
    for file in ["S1.json", "P1.json"] {
        modules.push((cycle.clone(), load_module(&cycle, &corpus(file), &corpus("fig1.json")).unwrap()));
    }
    for (a, x) in &modules {
        for i in 0..a.num_vertices() {
            ensure!(hom_dim(a, &projective(a, i), x) == x.dims()[i], "Yoneda count at vertex {i}");
        }
    }
    Ok(())
}

fn add_profiles(p: &mut Profile, q: &Profile) {
    for (d, v) in q {
        let e = p.entry(*d).or_insert_with(|| vec![0; v.len()]);
        for (x, y) in e.iter_mut().zip(v) {
            *x += y;
        }
    }
}

fn c6() -> Outcome {
    let cfg = Config::default();
    let a = algebra("fig1.json");
    let t = complex(&a, "fig1_T.json", "fig1.json");
    let end = end_algebra(&a, &t, &cfg).map_err(|e| e.to_string())?;
    let s1 = stable_image(&a, &end, &simple(&a, 0), &cfg).map_err(|e| e.to_string())?;
    ensure!(s1.module.total_dim() == 1, "image of S(1) has dim {}", s1.module.total_dim());
    let p1 = projective(&a, 0);
    ensure!(f_homology(&a, &end, &p1, 1).map_err(|e| e.to_string())?.total_dim() == 2, "H^1 of P(1)");
    ensure!(
        matches!(stable_image(&a, &end, &p1, &cfg), Err(Error::NotConcentrated(_))),
        "P(1) should not be concentrated"
    );
    let mut pool: Vec<Representation> = Vec::new();
    for v in 0..3 {
        pool.extend([simple(&a, v), projective(&a, v), injective(&a, v)]);
    }
    let profiles: Vec<Profile> =
        pool.iter().map(|m| homology_profile(&a, &end, m)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for round in 0..10 {
        let k = 2 + (rng.next_u32() % 3) as usize;
        let picks: Vec<usize> = (0..k).map(|_| (rng.next_u32() as usize) % pool.len()).collect();
        let parts: Vec<&Representation> = picks.iter().map(|&i| &pool[i]).collect();
        let sum = Representation::direct_sum(&parts);
        let got = homology_profile(&a, &end, &sum).map_err(|e| e.to_string())?;
        let mut want = Profile::new();
        for &i in &picks {
            add_profiles(&mut want, &profiles[i]);
        }
        want.retain(|_, v| v.iter().any(|&x| x != 0));
        ensure!(got == want, "round {round}: profile of {picks:?}");
    }
    Ok(())
}

fn c7() -> Outcome {
    let cfg = Config::default();
    let a = algebra("fig1.json");
    let doubled = complex(&a, "doubled_T.json", "fig1.json");
    let rep = verify_tilting(&a, &doubled, false, &cfg).map_err(|e| e.to_string())?;
    ensure!(!rep.basic, "doubled complex reported basic");
    let unit = complex(&a, "unit_T.json", "fig1.json");
    ensure!(!unit.validate(&a).is_radical, "unit differential reported radical");
    let s = algebra("sec5_A.json");
    // Hom(P(1), P(2)) != 0 in both algebras.
    ensure!(!a.peirce(1, 0).is_empty(), "fixture assumption");
    match construct_tpq(&a, &[0], &[1], 1, 1, &cfg) {
        Err(Error::PreconditionFailed(_)) => {}
        other => return Err(format!("cycle: expected PreconditionFailed, got {:?}", other.map(|_| ()))),
    }
    match construct_tpq(&s, &[0], &[1], 1, 1, &cfg) {
        Err(Error::PreconditionFailed(_)) => {}
        other => return Err(format!("zigzag: expected PreconditionFailed, got {:?}", other.map(|_| ()))),
    }
    Ok(())
}

fn main() {
    let results = [
        run(1, "constructed complex on the four-vertex algebra", Duration::from_secs(10), c1),
        run(2, "three-cycle example and its endomorphism algebra", Duration::from_secs(5), c2),
        run(3, "simple-image criterion agrees with the stability criterion", Duration::from_secs(10), c3),
        run(4, "add-closure routes agree on projectives", Duration::from_secs(5), c4),
        run(5, "homotopy category infrastructure", Duration::from_secs(10), c5),
        run(6, "stable images and homology profiles", Duration::from_secs(5), c6),
        run(7, "negative controls", Duration::from_secs(2), c7),
    ];
    let failed: Vec<usize> = results.iter().enumerate().filter(|(_, ok)| !**ok).map(|(i, _)| i + 1).collect();
    if !failed.is_empty() {
        println!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
    println!("all {} criteria passed", results.len());
}
