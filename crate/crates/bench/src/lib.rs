//! Fixtures shared by the benchmarks.

use superpair::catalog;
use superpair::{GjspObject, MetricModuleTriple};

/// Pairs of increasing size: type I for each `(p, q)` and the Kantor pairs `M_n`.
pub fn pairs() -> Vec<(String, GjspObject)> {
    let mut out = Vec::new();
    for (p, q) in [(1, 2), (2, 2), (2, 3)] {
        out.push((format!("I_{p},{q}"), catalog::jordan_pair_type_i(p, q).expect("valid parameters")));
    }
    for n in [2, 3] {
        out.push((format!("M_{n}"), catalog::kantor_pair_mn(n).expect("valid parameters")));
    }
    out
}

/// `gl(m|n)` with the supertrace form on the natural module.
pub fn triples() -> Vec<(String, MetricModuleTriple)> {
    [(1, 1), (2, 1), (2, 2)].iter().map(|&(m, n)| (format!("gl({m}|{n})"), catalog::gl_supertrace(m, n))).collect()
}
