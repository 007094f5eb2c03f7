mod common;

use std::sync::Arc;

use common::*;
use superpair::catalog::{gl_supertrace, jordan_pair_type_i, jordan_pair_type_iv, kantor_pair_mn, nonfaithful_fixture};
use superpair::faulkner::{
    bracket_of, faithful_part, faulkner_backward, faulkner_forward, instr_lm, roundtrip_check, Correspondence, Start,
};
use superpair::linalg::{unit, Span};
use superpair::{
    onedim_object, onedim_parameter, CheckConfig, Error, Gjsp, GjspObject, InvariantForm, LieSuperAlgebra, Matrix,
    MetricModuleTriple, QuadExt, QuadRing, Scalar, Sign, SuperModule, SuperSpace,
};

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn e(n: usize, i: usize) -> Vec<Scalar> {
    unit(n, i)
}

fn neg(v: Vec<Scalar>) -> Vec<Scalar> {
    v.into_iter().map(|x| -x).collect()
}

/// `b(x_i, y) = ⟨x_i·f, v⟩ = -⟨f, x_i·v⟩` for an even dual basis vector `f = m^k`.
fn bracket_oracle(t: &MetricModuleTriple, k: usize, v: usize, y: &[Scalar]) -> bool {
    let g = t.form().gram();
    (0..t.algebra().dim()).all(|i| {
        let lhs: Scalar = (0..y.len()).map(|c| &g[(i, c)] * &y[c]).sum();
        lhs == -t.module().rho(i)[(k, v)].clone()
    })
}

#[test]
fn gl11_brackets_solve_the_gram_system() {
    let t = gl_supertrace(1, 1);
    let m0 = e(2, 0);
    let b00 = bracket_of(&t, &m0, &e(2, 0)).unwrap();
    assert_eq!(b00, neg(e(4, 0)));
    assert!(bracket_oracle(&t, 0, 0, &b00));
    let b01 = bracket_of(&t, &m0, &e(2, 1)).unwrap();
    assert_eq!(b01, neg(e(4, 2)));
    assert!(bracket_oracle(&t, 0, 1, &b01));
    assert!(t.algebra().space().vector_parity(&b01).unwrap().is_odd());
}

#[test]
fn brackets_vanish_on_zero_arguments() {
    let t = gl_supertrace(1, 1);
    let zero = vec![Scalar::zero(); 2];
    assert!(bracket_of(&t, &zero, &e(2, 1)).unwrap().iter().all(Scalar::is_zero));
    assert!(bracket_of(&t, &e(2, 1), &zero).unwrap().iter().all(Scalar::is_zero));
}

#[test]
fn forward_gl11_minus_product() {
    let o = faulkner_forward(&gl_supertrace(1, 1)).unwrap();
    assert_eq!(o.pair.product(Sign::Minus, &e(2, 0), &e(2, 0), &e(2, 0)), e(2, 0));
    assert!(o.check_membership(cfg()).passed());
    assert_eq!(o.pairing.matrix, Matrix::identity(2));
}

#[test]
fn forward_gl1_reads_off_as_a_onedim_object() {
    let o = faulkner_forward(&gl_supertrace(1, 0)).unwrap();
    let a = onedim_parameter(&o).unwrap();
    // {v, f, v} = λ v with ν(v, f) acting on the plus side
    let lambda = o.pair.product(Sign::Plus, &e(1, 0), &e(1, 0), &e(1, 0))[0].clone();
    assert_eq!(a.lambda, lambda);
    assert!(a.a.bit() == 0);
}

#[test]
fn degenerate_form_is_rejected_by_forward() {
    let lie = Arc::new(LieSuperAlgebra::abelian(SuperSpace::standard(1, 0)));
    let module = SuperModule::from_entries(Arc::clone(&lie), SuperSpace::standard(1, 0), &[(0, 0, 0, Scalar::one())]).unwrap();
    let form = InvariantForm::new(lie, Matrix::zeros(1, 1)).unwrap();
    let t = MetricModuleTriple::new(module, form).unwrap();
    assert!(faulkner_forward(&t).is_err());
}

#[test]
fn instr_lm_of_faithful_and_trivial_modules() {
    let t = gl_supertrace(1, 1);
    let il = instr_lm(&t).unwrap();
    assert_eq!(il.basis.len(), 4);
    assert!(il.kernel.is_empty());
    assert!(il.report.passed());

    let trivial = MetricModuleTriple::new(SuperModule::trivial(Arc::clone(t.algebra()), SuperSpace::standard(1, 1)), t.form().clone()).unwrap();
    let il = instr_lm(&trivial).unwrap();
    assert!(il.basis.is_empty());
    assert_eq!(il.kernel.len(), 4);
}

#[test]
fn instr_lm_of_the_nonfaithful_fixture() {
    let t = nonfaithful_fixture();
    let il = instr_lm(&t).unwrap();
    assert!(il.report.passed());
    let gl = Span::from_generators(5, &(0..4).map(|i| e(5, i)).collect::<Vec<_>>());
    let span = Span::from_generators(5, &il.basis);
    assert_eq!(span.dim(), 4);
    assert!(il.basis.iter().all(|b| gl.contains(b)));
    let z = e(5, 4);
    assert!(Span::from_generators(5, &il.kernel).contains(&z));
    assert!(Span::from_generators(5, &il.perp).contains(&z));
    assert_eq!(faithful_part(&t).unwrap().algebra().dim(), 4);
}

#[test]
fn backward_type_i_11() {
    let b = faulkner_backward(&jordan_pair_type_i(1, 1).unwrap()).unwrap();
    assert_eq!(b.triple.algebra().dim(), 1);
    assert_eq!(b.triple.form().gram()[(0, 0)], s(2));
    assert!(b.audit.passed());
}

#[test]
fn backward_type_iv_3_form_is_sound() {
    let b = faulkner_backward(&jordan_pair_type_iv(3).unwrap()).unwrap();
    assert_eq!(b.triple.algebra().dim(), 4);
    assert!(b.triple.form().check_form(cfg()).passed());
    assert!(b.triple.is_faithful());
}

#[test]
fn backward_of_a_zero_pair_has_zero_algebra() {
    let space = SuperSpace::standard(1, 0);
    let o = GjspObject::new(Gjsp::zero(space.clone(), space), Matrix::identity(1)).unwrap();
    let b = faulkner_backward(&o).unwrap();
    assert_eq!(b.triple.algebra().dim(), 0);
    assert!(roundtrip_check(Start::Object(&o)).unwrap().report.passed());
}

#[test]
fn backward_rejects_a_nonsymmetric_pairing() {
    let o = jordan_pair_type_i(1, 2).unwrap();
    let mut p = o.pairing.matrix.clone();
    p[(0, 0)] = s(2);
    let bad = GjspObject::new(o.pair.clone(), p).unwrap();
    match faulkner_backward(&bad) {
        Err(Error::Precondition { report, .. }) => assert!(!report.passed()),
        other => panic!("expected a precondition failure, got {other:?}"),
    }
}

#[test]
fn roundtrips_from_both_ends() {
    let c = roundtrip_check(Start::Triple(&gl_supertrace(1, 1))).unwrap();
    assert!(c.report.passed());
    let c = roundtrip_check(Start::Object(&jordan_pair_type_i(2, 2).unwrap())).unwrap();
    assert!(c.report.passed());
    assert_eq!(c.triple.algebra().dim(), 7);
    let c = roundtrip_check(Start::Object(&onedim_object(&alpha(1, 0)))).unwrap();
    assert!(c.report.passed());
    assert_eq!(c.triple.algebra().dim(), 1);
}

#[test]
fn roundtrip_of_kantor_pairs() {
    for n in 1..=3 {
        let c = roundtrip_check(Start::Object(&kantor_pair_mn(n).unwrap())).unwrap();
        assert!(c.report.passed(), "M_{n}: {}", c.report);
    }
}

#[test]
fn scaling_the_pairing_scales_the_form() {
    for (name, o) in pair_fixtures().into_iter().filter(|(n, _)| n.starts_with("I_") || n.starts_with("gl")) {
        let base = faulkner_backward(&o).unwrap();
        for c in [s(2), s(-1), Scalar::frac(1, 3)] {
            let scaled = faulkner_backward(&o.scale_pairing(&c)).unwrap();
            assert_eq!(scaled.triple.form().gram(), &base.triple.form().gram().scale(&c), "{name}, λ = {c}");
            assert_eq!(scaled.triple.module(), base.triple.module(), "{name}, λ = {c}");
        }
    }
    for (name, t) in faithful_triples() {
        let base = faulkner_forward(&t).unwrap();
        let c = Scalar::frac(1, 3);
        let form = InvariantForm::new(Arc::clone(t.algebra()), t.form().gram().scale(&c)).unwrap();
        let scaled = faulkner_forward(&MetricModuleTriple::new(t.module().clone(), form).unwrap()).unwrap();
        // the brackets scale by 1/λ, so the products do too while the pairing stays canonical
        for sigma in Sign::BOTH {
            let expect: Vec<Matrix> = base.pair.operators(sigma).iter().map(|d| d.scale(&c.inv().unwrap())).collect();
            assert_eq!(scaled.pair.operators(sigma), expect.as_slice(), "{name}");
        }
    }
}

#[test]
fn identity_transfers_to_identity() {
    let o = jordan_pair_type_i(1, 2).unwrap();
    let c = Correspondence::from_object(&o, cfg()).unwrap();
    let m = c.pair_to_module(&id(2), &id(2)).unwrap();
    assert_eq!(m.phi0, Matrix::identity(4));
    let t = c.module_to_pair(&id(4), &id(2)).unwrap();
    assert_eq!(t.phi_minus, Matrix::identity(2));
}

#[test]
fn diagonal_automorphism_of_i12_lands_in_aut_l_b() {
    let o = jordan_pair_type_i(1, 2).unwrap();
    let c = Correspondence::from_object(&o, cfg()).unwrap();
    let (pm, pp) = diagonal_aut_type_i(&[1], &[2, 3]);
    assert_eq!(pm, diag(&[Scalar::frac(1, 2), Scalar::frac(1, 3)]));
    let m = c.pair_to_module(&pm, &pp).unwrap();
    assert!(m.report.passed(), "{}", m.report);
    let g = c.triple.form().gram();
    assert_eq!(&m.phi0.transpose().mul(g).mul(&m.phi0), g);
    // φ₀ conjugates the plus operators
    for a in 0..c.triple.algebra().dim() {
        let lhs = pp.mul(c.triple.module().rho(a));
        let rhs = c.triple.module().operator(&m.phi0.column(a)).mul(&pp);
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn scalar_automorphism_of_a_onedim_object_is_trivial_on_l() {
    let o = onedim_object(&alpha(1, 0));
    let c = Correspondence::from_object(&o, cfg()).unwrap();
    let (pm, pp) = c_lambda(2, 1, 1);
    let m = c.pair_to_module(&pm, &pp).unwrap();
    assert_eq!(m.phi0, Matrix::identity(1));

    let ring = QuadRing::monic(Scalar::zero(), s(-2));
    let t = ring.generator();
    let t_inv = ring.elem(Scalar::zero(), Scalar::frac(1, 2));
    assert!((t.clone() * t_inv.clone()) == ring.elem(Scalar::one(), Scalar::zero()));
    let pm = Matrix::<QuadExt>::from_fn(1, 1, |_, _| t_inv.clone());
    let pp = Matrix::<QuadExt>::from_fn(1, 1, |_, _| t.clone());
    let m = c.pair_to_module(&pm, &pp).unwrap();
    assert!(m.report.passed());
    assert!(m.phi0 == Matrix::<QuadExt>::lift(&Matrix::identity(1)));
}

#[test]
fn infinitesimal_non_derivation_is_rejected() {
    let o = jordan_pair_type_i(1, 2).unwrap();
    let c = Correspondence::from_object(&o, cfg()).unwrap();
    let eps = QuadRing::dual_numbers().generator();
    let id = Matrix::<QuadExt>::lift(&Matrix::identity(2));
    let phi = id.add(&Matrix::lift(&Matrix::identity(2)).scale(&eps));
    // (id, id) is not a derivation of a cubic product
    match c.pair_to_module(&phi, &phi) {
        Err(Error::NotAutomorphism(report)) => assert!(!report.passed()),
        other => panic!("expected NotAutomorphism, got {:?}", other.map(|_| ())),
    }
}

#[test]
fn transfer_from_a_triple_start() {
    let t = gl_supertrace(2, 1);
    let c = Correspondence::from_triple(&t, cfg()).unwrap();
    // conjugation by a diagonal even element of GL(2|1) acts on gl(2|1) and the natural module
    let g = diag(&[s(1), s(2), s(-1)]);
    let g_inv = g.inverse().unwrap();
    let n = t.algebra().dim();
    let phi0 = Matrix::from_fn(n, n, |r, col| {
        let (i, j) = (col / 3, col % 3);
        let (k, l) = (r / 3, r % 3);
        if (i, j) == (k, l) {
            &g[(i, i)] * &g_inv[(j, j)]
        } else {
            Scalar::zero()
        }
    });
    let p = c.module_to_pair(&phi0, &g).unwrap();
    assert!(p.report.passed(), "{}", p.report);
    let back = c.pair_to_module(&p.phi_minus, &p.phi_plus).unwrap();
    assert_eq!(back.phi0, phi0);
}

fn id(n: usize) -> Matrix {
    Matrix::identity(n)
}
