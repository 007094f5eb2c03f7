mod common;

use common::*;
use superpair::catalog::{
    self, by_name, gl_supertrace, jordan_pair_type_i, jordan_pair_type_iv, kantor_pair_mn, nonfaithful_fixture, CatalogObject,
};
use superpair::faulkner::{faulkner_forward, instr_lm};
use superpair::linalg::unit;
use superpair::{onedim_parameter, CheckConfig, GjspObject, Matrix, Scalar, Sign};

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn unit_matrix(rows: usize, cols: usize, k: usize) -> Matrix {
    Matrix::from_fn(rows, cols, |r, c| if r * cols + c == k { s(1) } else { s(0) })
}

fn flat(m: &Matrix) -> Vec<Scalar> {
    m.as_slice().to_vec()
}

/// Compares every basis product of `o` with a matrix-level rule on `rows × cols` matrices.
fn check_rule(o: &GjspObject, rows: usize, cols: usize, rule: impl Fn(&Matrix, &Matrix, &Matrix) -> Matrix) {
    let n = rows * cols;
    for sigma in Sign::BOTH {
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    let (mx, my, mz) = (unit_matrix(rows, cols, x), unit_matrix(rows, cols, y), unit_matrix(rows, cols, z));
                    let got = o.pair.product(sigma, &unit(n, x), &unit(n, y), &unit(n, z));
                    assert_eq!(got, flat(&rule(&mx, &my, &mz)), "{sigma:?} ({x}, {y}, {z})");
                }
            }
        }
    }
}

#[test]
fn type_i_products_are_matrix_products() {
    for (p, q) in TYPE_I_GRID {
        let o = jordan_pair_type_i(p, q).unwrap();
        check_rule(&o, p, q, |x, y, z| x.mul(&y.transpose()).mul(z).add(&z.mul(&y.transpose()).mul(x)));
        // t(E_ij, E_kl) = δ_ik δ_jl
        assert_eq!(o.pairing.matrix, Matrix::identity(p * q));
        assert!(o.pair.classify_flavor().jordan_pair);
    }
    let o = jordan_pair_type_i(1, 1).unwrap();
    assert_eq!(o.pair.product(Sign::Plus, &[s(3)], &[s(5)], &[s(7)]), vec![s(2 * 3 * 5 * 7)]);
}

#[test]
fn type_iv_products() {
    for n in 1..=3 {
        let o = jordan_pair_type_iv(n).unwrap();
        let q = |a: &Matrix, b: &Matrix| -> Scalar { a.as_slice().iter().zip(b.as_slice()).map(|(u, v)| u * v).sum() };
        check_rule(&o, 1, n, |x, y, z| z.scale(&q(x, y)).add(&x.scale(&q(z, y))).sub(&y.scale(&q(x, z))));
        assert!(o.pair.check_fundamental_identity(cfg()).passed());
        assert!(o.pair.classify_flavor().jordan_pair);
    }
    let o = jordan_pair_type_iv(1).unwrap();
    assert_eq!(o.pair.product(Sign::Plus, &[s(1)], &[s(1)], &[s(1)]), vec![s(1)]);
}

#[test]
fn kantor_products() {
    for n in 1..=3 {
        let o = kantor_pair_mn(n).unwrap();
        check_rule(&o, n, n, |x, y, z| {
            x.mul(&y.transpose()).mul(z).add(&z.mul(&y.transpose()).mul(x)).sub(&z.mul(&x.transpose()).mul(y))
        });
        assert!(o.check_membership(cfg()).passed());
    }
    let f = kantor_pair_mn(2).unwrap().pair.classify_flavor();
    assert!(!f.jordan_pair);
}

#[test]
fn gl_triples() {
    let gl1 = gl_supertrace(1, 0);
    assert_eq!(gl1.algebra().dim(), 1);
    assert_eq!(gl1.form().gram(), &Matrix::identity(1));
    for (m, n) in [(1, 0), (2, 0), (1, 1), (2, 1), (2, 2)] {
        let t = gl_supertrace(m, n);
        assert_eq!(t.algebra().dim(), (m + n) * (m + n));
        assert!(t.check(cfg()).passed(), "gl({m}|{n})");
        assert!(t.module().representation_kernel().is_empty());
    }
}

#[test]
fn nonfaithful_fixture_parts() {
    let t = nonfaithful_fixture();
    assert_eq!(t.module().representation_kernel().len(), 1);
    let il = instr_lm(&t).unwrap();
    assert_eq!(il.basis.len(), 4);
    assert!(il.report.passed());
}

#[test]
fn worked_isomorphisms() {
    for (p, q) in TYPE_I_GRID {
        let w = catalog::standard_iso_type_i(p, q).unwrap();
        assert!(w.report.passed());
        assert_eq!(w.source.pairing.matrix, w.target.pairing.matrix);
    }
    // the shifted left side loses the 2δδ term
    let w = catalog::standard_iso_type_i(2, 2).unwrap();
    let ix = |i: usize, j: usize| i * 2 + j;
    let got = w.source.pair.product(Sign::Plus, &unit(4, ix(0, 0)), &unit(4, ix(0, 0)), &unit(4, ix(1, 1)));
    assert_eq!(got, vec![s(0); 4]);
    for n in 1..=3 {
        assert!(catalog::standard_iso_mn(n).unwrap().report.passed());
    }
    let w = catalog::standard_iso_mn(1).unwrap();
    assert_eq!(onedim_parameter(&w.source).unwrap(), onedim_parameter(&w.target).unwrap());
}

#[test]
fn lookup_by_name() {
    let params = |xs: &[&str]| xs.iter().map(|x| x.to_string()).collect::<Vec<_>>();
    assert!(matches!(by_name("type-i", &params(&["2", "3"])).unwrap(), CatalogObject::Pair(_)));
    assert!(matches!(by_name("gl", &params(&["1", "1"])).unwrap(), CatalogObject::Triple(_)));
    let o = catalog_pair("onedim", &["-3/2", "1"]);
    assert_eq!(onedim_parameter(&o).unwrap().lambda, Scalar::frac(-3, 2));
    assert!(by_name("type-i", &params(&["2"])).is_err());
    assert!(by_name("type-i", &params(&["0", "1"])).is_err());
    assert!(by_name("gl", &params(&["0", "0"])).is_err());
    assert!(by_name("nope", &[]).is_err());
    for (name, _) in catalog::NAMES {
        assert!(by_name(name, &[]).is_err() || *name == "nonfaithful");
    }
}

#[test]
fn forward_of_gl_is_a_super_pair_with_odd_parts() {
    let o = faulkner_forward(&gl_supertrace(2, 1)).unwrap();
    assert!(o.check_membership(cfg()).passed());
    assert_eq!(o.pair.space(Sign::Plus).sdim(), (2, 1));
}
