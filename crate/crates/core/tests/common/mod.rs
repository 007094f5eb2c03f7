//! Fixtures shared by the integration tests.
#![allow(dead_code)]

use superpair::catalog::{self, gl_supertrace, jordan_pair_type_i, jordan_pair_type_iv, kantor_pair_mn, nonfaithful_fixture};
use superpair::faulkner::faithful_part;
use superpair::{
    faulkner_forward, gjsp_tensor, onedim_object, GjspObject, Matrix, MetricModuleTriple, Parity, Scalar, ShiftParameter, Witness,
};

pub const TYPE_I_GRID: [(usize, usize); 4] = [(1, 1), (1, 2), (2, 2), (2, 3)];

pub fn s(x: i64) -> Scalar {
    Scalar::from(x)
}

pub fn alpha(lambda: i64, a: u8) -> ShiftParameter {
    ShiftParameter::new(Scalar::from(lambda), Parity::from_bit(a).unwrap())
}

/// `(λ, a)` for λ ∈ {-2..2} and both parities.
pub fn onedim_grid() -> Vec<ShiftParameter> {
    (-2..=2).flat_map(|l| (0..2).map(move |a| alpha(l, a))).collect()
}

pub fn diag(entries: &[Scalar]) -> Matrix {
    Matrix::from_fn(entries.len(), entries.len(), |i, j| if i == j { entries[i].clone() } else { Scalar::zero() })
}

pub fn indices<S>(w: &Witness<S>) -> Vec<usize> {
    w.indices.iter().map(|(_, i)| *i).collect()
}

pub fn gl11_pair() -> GjspObject {
    faulkner_forward(&gl_supertrace(1, 1)).unwrap()
}

/// Every pair-with-pairing fixture: the catalog, the one-dimensional grid and
/// a few tensor products, including super ones.
pub fn pair_fixtures() -> Vec<(String, GjspObject)> {
    let mut out = Vec::new();
    for (p, q) in TYPE_I_GRID {
        out.push((format!("I_{p},{q}"), jordan_pair_type_i(p, q).unwrap()));
    }
    for n in 1..=3 {
        out.push((format!("IV_{n}"), jordan_pair_type_iv(n).unwrap()));
        out.push((format!("M_{n}"), kantor_pair_mn(n).unwrap()));
    }
    for a in onedim_grid() {
        out.push((format!("V_{a}"), onedim_object(&a)));
    }
    let i11 = jordan_pair_type_i(1, 1).unwrap();
    let i12 = jordan_pair_type_i(1, 2).unwrap();
    let iv2 = jordan_pair_type_iv(2).unwrap();
    let gl = gl11_pair();
    out.push(("gl(1|1) pair".into(), gl.clone()));
    out.push(("I_1,1 ⊗ I_1,1".into(), gjsp_tensor(&i11, &i11).unwrap()));
    out.push(("I_1,2 ⊗ IV_2".into(), gjsp_tensor(&i12, &iv2).unwrap()));
    out.push(("V_(1, 1) ⊗ I_1,2".into(), gjsp_tensor(&onedim_object(&alpha(1, 1)), &i12).unwrap()));
    out.push(("gl(1|1) pair ⊗ I_1,2".into(), gjsp_tensor(&gl, &i12).unwrap()));
    out
}

pub fn faithful_triples() -> Vec<(String, MetricModuleTriple)> {
    let mut out: Vec<(String, MetricModuleTriple)> =
        [(1, 0), (2, 0), (1, 1), (2, 1)].iter().map(|&(m, n)| (format!("gl({m}|{n})"), gl_supertrace(m, n))).collect();
    out.push(("nonfaithful fixture, faithful part".into(), faithful_part(&nonfaithful_fixture()).unwrap()));
    out
}

/// `x ↦ A x B` on `p × q` matrices for diagonal `A`, `B`, with the inverse
/// transpose on the minus side.
pub fn diagonal_aut_type_i(a: &[i64], b: &[i64]) -> (Matrix, Matrix) {
    let plus: Vec<Scalar> = a.iter().flat_map(|&x| b.iter().map(move |&y| s(x * y))).collect();
    let minus: Vec<Scalar> = plus.iter().map(|x| x.inv().unwrap()).collect();
    (diag(&minus), diag(&plus))
}

/// `c_λ = (λ⁻¹ id, λ id)`.
pub fn c_lambda(lambda: i64, n_minus: usize, n_plus: usize) -> (Matrix, Matrix) {
    (Matrix::identity(n_minus).scale(&s(lambda).inv().unwrap()), Matrix::identity(n_plus).scale(&s(lambda)))
}

pub fn catalog_pair(name: &str, params: &[&str]) -> GjspObject {
    let params: Vec<String> = params.iter().map(|p| p.to_string()).collect();
    match catalog::by_name(name, &params).unwrap() {
        catalog::CatalogObject::Pair(o) => o,
        catalog::CatalogObject::Triple(_) => panic!("{name} is a triple"),
    }
}
