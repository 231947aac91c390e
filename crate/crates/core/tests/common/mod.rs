#![allow(dead_code)]

use tiltkit_core::algebra::{build_path_algebra, BasicAlgebra, Path, Quiver, Relation};
use tiltkit_core::linalg::int;

fn rel(q: &Quiver, terms: &[(i64, &[&str])]) -> Relation {
    Relation::new(terms.iter().map(|(c, p)| (int(*c), q.path(p).unwrap())).collect())
}

/// Three-cycle 1 -> 2 -> 3 -> 1 with all paths of length three killed.
pub fn cycle() -> BasicAlgebra {
    let q = Quiver::from_names(&["1", "2", "3"], &[("alpha", "1", "2"), ("beta", "2", "3"), ("gamma", "3", "1")])
        .unwrap();
    let r = vec![
        rel(&q, &[(1, &["alpha", "beta", "gamma"])]),
        rel(&q, &[(1, &["beta", "gamma", "alpha", "beta"])]),
        rel(&q, &[(1, &["gamma", "alpha", "beta", "gamma"])]),
    ];
    build_path_algebra(q, r, 30).unwrap()
}

/// Endomorphism algebra of the tilting complex over `cycle`.
pub fn cycle_end() -> BasicAlgebra {
    let q = Quiver::from_names(
        &["1", "2", "3"],
        &[("alpha", "1", "2"), ("beta", "2", "1"), ("gamma", "2", "3"), ("delta", "3", "2")],
    )
    .unwrap();
    let r = vec![
        rel(&q, &[(1, &["alpha", "gamma"])]),
        rel(&q, &[(1, &["delta", "beta"])]),
        rel(&q, &[(1, &["alpha", "beta"])]),
        rel(&q, &[(1, &["delta", "gamma", "delta"])]),
        rel(&q, &[(1, &["beta", "alpha"]), (-1, &["gamma", "delta"])]),
    ];
    build_path_algebra(q, r, 30).unwrap()
}

/// Four-vertex algebra with zigzag 1 - 2 - 3 - 4.
pub fn zigzag() -> BasicAlgebra {
    let q = Quiver::from_names(
        &["1", "2", "3", "4"],
        &[
            ("alpha", "1", "2"),
            ("alpha'", "2", "1"),
            ("beta", "2", "3"),
            ("beta'", "3", "2"),
            ("gamma", "3", "4"),
            ("gamma'", "4", "3"),
        ],
    )
    .unwrap();
    let r = vec![
        rel(&q, &[(1, &["alpha'", "alpha"])]),
        rel(&q, &[(1, &["beta", "beta'"])]),
        rel(&q, &[(1, &["alpha", "beta"])]),
        rel(&q, &[(1, &["beta", "gamma"])]),
        rel(&q, &[(1, &["beta'", "alpha'"])]),
        rel(&q, &[(1, &["gamma'", "beta'"])]),
        rel(&q, &[(1, &["beta'", "beta"]), (-1, &["gamma", "gamma'"])]),
    ];
    build_path_algebra(q, r, 30).unwrap()
}

/// Endomorphism algebra of the constructed tilting complex over `zigzag`.
pub fn zigzag_end() -> BasicAlgebra {
    let q = Quiver::from_names(
        &["1", "2", "3", "4"],
        &[("alpha", "1", "2"), ("alpha'", "2", "1"), ("beta", "2", "4"), ("gamma", "4", "3"), ("delta", "3", "2")],
    )
    .unwrap();
    let r = vec![
        rel(&q, &[(1, &["alpha'", "alpha"])]),
        rel(&q, &[(1, &["alpha", "beta"])]),
        rel(&q, &[(1, &["delta", "alpha'"])]),
        rel(&q, &[(1, &["beta", "gamma", "delta"])]),
        rel(&q, &[(1, &["gamma", "delta", "beta", "gamma"])]),
    ];
    build_path_algebra(q, r, 30).unwrap()
}

pub fn path(a: &BasicAlgebra, names: &[&str]) -> Path {
    a.quiver().path(names).unwrap()
}
