mod common;

use std::sync::Arc;

use common::*;
use superpair::catalog::{gl_supertrace, jordan_pair_type_i, jordan_pair_type_iv, kantor_pair_mn, nonfaithful_fixture};
use superpair::gjsp::nu_derivation_report;
use superpair::liesuper::supercommutator;
use superpair::linalg::{orthogonal_complement, unit, Span};
use superpair::superlinear::{tensor_pairing, SuperMap};
use superpair::{
    check_pair_hom, eta, hom_fixed, CheckConfig, Gjsp, InvariantForm, LieSuperAlgebra, Matrix, OperatorFamily, PairingForm,
    Parity, Scalar, Sign, SuperModule, SuperSpace,
};

const E: Parity = Parity::Even;
const O: Parity = Parity::Odd;

fn cfg() -> CheckConfig {
    CheckConfig::default()
}

fn sgn(negative: bool) -> Scalar {
    Scalar::one().signed(negative)
}

#[test]
fn eta_examples() {
    assert_eq!(eta(&[E, O]).unwrap(), 1);
    assert_eq!(eta(&[O, O]).unwrap(), -1);
    assert_eq!(eta(&[O, O, O]).unwrap(), -1);
    assert!(eta(&[O]).is_err());
    assert!(eta(&[O, O, O, O]).is_err());
}

#[test]
fn solve_examples() {
    let x = Matrix::identity(2).solve(&[s(1), Scalar::frac(1, 2)]).unwrap().unwrap();
    assert_eq!(x, vec![s(1), Scalar::frac(1, 2)]);
    let a = Matrix::from_rows(1, vec![vec![s(2)]]).unwrap();
    assert_eq!(a.solve(&[s(3)]).unwrap().unwrap(), vec![Scalar::frac(3, 2)]);
    let a = Matrix::from_rows(2, vec![vec![s(1), s(1)], vec![s(1), s(1)]]).unwrap();
    assert_eq!(a.solve(&[s(0), s(1)]).unwrap(), None);
    assert!(a.solve(&[s(0)]).is_err());
}

#[test]
fn dual_maps_satisfy_their_defining_identities() {
    let space = SuperSpace::standard(1, 1);
    let id = SuperMap::identity(&space);
    assert_eq!(id.left_dual(), id);
    assert_eq!(id.right_dual(), id);

    let even = SuperSpace::standard(3, 0);
    let m = Matrix::from_fn(3, 3, |i, j| s((3 * i + j) as i64 - 4));
    let f = SuperMap::new(even.clone(), even, m.clone()).unwrap();
    assert_eq!(f.left_dual().matrix, m.transpose());

    // m_0 ↔ m_1, odd
    let swap = Matrix::from_fn(2, 2, |i, j| if i != j { s(1) } else { s(0) });
    let f = SuperMap::new(space.clone(), space.clone(), swap.clone()).unwrap();
    let (l, r) = (f.left_dual().matrix, f.right_dual().matrix);
    for i in 0..2 {
        for j in 0..2 {
            // ⟨φ^← f_i, v_j⟩ = η_{φ,f_i} ⟨f_i, φ v_j⟩ and ⟨v_j, φ^→ f_i⟩ = η_{φ,v_j} ⟨φ v_j, f_i⟩
            assert_eq!(l[(j, i)], &sgn(space.parity(i).is_odd()) * &swap[(i, j)]);
            assert_eq!(r[(j, i)], &sgn(space.parity(j).is_odd()) * &swap[(i, j)]);
        }
    }
    assert_eq!(f.left_dual().parity(), Some(O));
}

#[test]
fn tensor_pairing_examples() {
    let one = |p: Parity| PairingForm::canonical(&SuperSpace::new(vec![p]));
    assert_eq!(tensor_pairing(&one(E), &one(E)).matrix, Matrix::identity(1));
    assert_eq!(tensor_pairing(&one(E), &one(O)).matrix, Matrix::identity(1));
    let sp = SuperSpace::standard(1, 1);
    let p = PairingForm::canonical(&sp);
    let t = tensor_pairing(&p, &p);
    for (f, g, v, w) in (0..16).map(|k| (k >> 3, (k >> 2) & 1, (k >> 1) & 1, k & 1)) {
        for (v2, w2) in [(v, w)] {
            let delta = if f == v2 && g == w2 { s(1) } else { s(0) };
            let expect = &sgn(sp.parity(g).is_odd() && sp.parity(v2).is_odd()) * &delta;
            assert_eq!(t.matrix[(f * 2 + g, v2 * 2 + w2)], expect);
        }
    }
    assert!(t.is_even() && t.is_nondegenerate());
}

#[test]
fn orthogonal_complement_examples() {
    let b = diag(&[s(1), s(-1)]);
    let all = vec![unit(2, 0), unit(2, 1)];
    assert!(orthogonal_complement(&b, &all).unwrap().is_empty());
    assert_eq!(orthogonal_complement(&b, &[]).unwrap().len(), 2);
    let line = vec![vec![s(1), s(1)]];
    let c = orthogonal_complement(&b, &line).unwrap();
    assert_eq!(c.len(), 1);
    assert!(Span::from_generators(2, &c).contains(&line[0]));
}

#[test]
fn lie_examples() {
    let ab = LieSuperAlgebra::abelian(SuperSpace::standard(2, 2));
    assert!(ab.check_lie_axioms(cfg()).passed());
    let gl = gl_supertrace(1, 1);
    assert!(gl.algebra().check_lie_axioms(cfg()).passed());
    let mut entries = gl.algebra().entries();
    entries[0].3 = &entries[0].3 + &s(1);
    let bad = LieSuperAlgebra::from_entries(gl.algebra().space().clone(), &entries).unwrap();
    let r = bad.check_lie_axioms(cfg());
    assert!(!r.passed());
    assert!(r.failures().all(|p| !p.witnesses.is_empty()));
}

#[test]
fn module_examples() {
    let ab = Arc::new(LieSuperAlgebra::abelian(SuperSpace::standard(1, 1)));
    assert!(SuperModule::trivial(ab, SuperSpace::standard(2, 1)).check_module(cfg()).passed());
    let gl = gl_supertrace(1, 1);
    let natural = gl.module();
    assert!(natural.check_module(cfg()).passed());
    // x·v = xv for the matrix units
    for i in 0..2 {
        for j in 0..2 {
            let op = natural.rho(i * 2 + j);
            let expect = Matrix::from_fn(2, 2, |r, c| if (r, c) == (i, j) { s(1) } else { s(0) });
            assert_eq!(op, &expect);
        }
    }
    let mut rho = natural.operators().to_vec();
    rho[1][(0, 1)] = s(-1);
    let flipped = natural.with_algebra(Arc::clone(gl.algebra()), rho).unwrap();
    assert!(!flipped.check_module(cfg()).passed());
}

#[test]
fn form_examples() {
    let gl = gl_supertrace(1, 1);
    let r = gl.form().check_form(cfg());
    assert!(r.passed(), "{r}");
    assert_eq!(r.properties.len(), 4);
    let zero = InvariantForm::new(Arc::clone(gl.algebra()), Matrix::zeros(4, 4)).unwrap();
    assert_eq!(zero.check_form(cfg()).failed_names(), ["nondegenerate"]);
}

#[test]
fn dual_modules() {
    let lie = Arc::new(LieSuperAlgebra::abelian(SuperSpace::standard(1, 0)));
    let m = SuperModule::from_entries(Arc::clone(&lie), SuperSpace::standard(2, 0), &[(0, 0, 1, s(3)), (0, 1, 1, s(-1))]).unwrap();
    assert_eq!(m.left_dual().rho(0), &m.rho(0).transpose().neg());
    assert_eq!(m.left_dual(), m.right_dual());
    let t = SuperModule::trivial(lie, SuperSpace::standard(1, 2));
    assert_eq!(t.left_dual(), t);

    let gl = gl_supertrace(2, 1);
    let nat = gl.module();
    let dual = nat.left_dual();
    assert!(dual.check_module(cfg()).passed());
    for x in 0..gl.algebra().dim() {
        let a = gl.algebra().parity(x);
        for f in 0..3 {
            for v in 0..3 {
                // (x·f)(v) = -η_{x,f} f(x·v)
                let expect = -(&sgn(a.is_odd() && nat.space().parity(f).is_odd()) * &nat.rho(x)[(f, v)]);
                assert_eq!(dual.rho(x)[(v, f)], expect);
            }
        }
    }
    assert_eq!(&dual.right_dual(), nat);
    assert_eq!(&dual.left_dual().left_dual().left_dual(), nat);
}

#[test]
fn tensor_modules() {
    let gl = gl_supertrace(1, 1);
    let nat = gl.module();
    let one = SuperModule::trivial(Arc::clone(gl.algebra()), SuperSpace::standard(1, 0));
    assert_eq!(&nat.tensor(&one).unwrap(), nat);
    let t = nat.tensor(nat).unwrap();
    assert!(t.check_module(cfg()).passed());
    let sp = nat.space();
    for x in 0..4 {
        let a = gl.algebra().parity(x);
        for v in 0..2 {
            for w in 0..2 {
                // x·(v⊗w) = (x·v)⊗w + η_{x,v} v⊗(x·w)
                let mut expect = vec![Scalar::zero(); 4];
                for r in 0..2 {
                    expect[r * 2 + w] = &expect[r * 2 + w] + &nat.rho(x)[(r, v)];
                    let c = &sgn(a.is_odd() && sp.parity(v).is_odd()) * &nat.rho(x)[(r, w)];
                    expect[v * 2 + r] = &expect[v * 2 + r] + &c;
                }
                assert_eq!(t.rho(x).column(v * 2 + w), expect);
            }
        }
    }
    // (M ⊗ N)^← ≅ M^← ⊗ N^← through the tensor pairing
    let p = tensor_pairing(&PairingForm::canonical(sp), &PairingForm::canonical(sp)).matrix.transpose();
    let lhs = t.left_dual();
    let rhs = nat.left_dual().tensor(&nat.left_dual()).unwrap();
    for x in 0..4 {
        assert_eq!(lhs.rho(x).mul(&p), p.mul(rhs.rho(x)));
    }
    let other = gl_supertrace(2, 1);
    assert!(nat.tensor(other.module()).is_err());
}

#[test]
fn triple_direct_sums() {
    let gl = gl_supertrace(1, 1);
    let one = superpair::MetricModuleTriple::direct_sum(std::slice::from_ref(&gl)).unwrap();
    assert_eq!(one.form().gram(), gl.form().gram());
    let two = superpair::MetricModuleTriple::direct_sum(&[gl.clone(), gl.clone()]).unwrap();
    assert_eq!((two.algebra().dim(), two.module().dim()), (8, 4));
    assert_eq!(two.form().gram(), &gl.form().gram().block_diag(gl.form().gram()));
    assert!(two.is_faithful());
    assert!(two.check(cfg()).passed());
    assert!(superpair::MetricModuleTriple::direct_sum(&[]).is_err());
}

#[test]
fn representation_kernels() {
    let gl = gl_supertrace(1, 1);
    let trivial = SuperModule::trivial(Arc::clone(gl.algebra()), SuperSpace::standard(1, 0));
    assert_eq!(trivial.representation_kernel().len(), 4);
    assert!(gl.module().representation_kernel().is_empty());
    let nf = nonfaithful_fixture();
    let k = nf.module().representation_kernel();
    assert_eq!(k.len(), 1);
    assert!(Span::from_generators(5, &k).contains(&unit(5, 4)));
}

#[test]
fn hom_modules() {
    let gl = gl_supertrace(1, 1);
    let nat = gl.module();
    let one = SuperModule::trivial(Arc::clone(gl.algebra()), SuperSpace::standard(1, 0));
    assert_eq!(SuperModule::hom(nat, &one).unwrap(), nat.left_dual());
    let t1 = SuperModule::trivial(Arc::clone(gl.algebra()), SuperSpace::standard(1, 1));
    assert!(SuperModule::hom(&t1, &t1).unwrap().operators().iter().all(Matrix::is_zero));
    let end = SuperModule::hom(nat, nat).unwrap();
    assert_eq!(end.dim(), 4);
    assert!(end.check_module(cfg()).passed());
}

#[test]
fn fixed_homs() {
    let w = SuperSpace::standard(2, 0);
    let v = SuperSpace::standard(4, 0);
    let none = OperatorFamily { parities: vec![], ops: vec![] };
    assert_eq!(hom_fixed(&w, &none, &v, &none, &none).unwrap().basis.len(), 8);

    // gl_2 on W and on W ⊕ W
    let units: Vec<Matrix> =
        (0..4).map(|k| Matrix::from_fn(2, 2, |r, c| if (r, c) == (k / 2, k % 2) { s(1) } else { s(0) })).collect();
    let s_w = OperatorFamily { parities: vec![E; 4], ops: units.clone() };
    let s_v = OperatorFamily { parities: vec![E; 4], ops: units.iter().map(|u| u.block_diag(u)).collect() };
    let fixed = hom_fixed(&w, &s_w, &v, &s_v, &none).unwrap();
    assert_eq!(fixed.basis.len(), 2);

    let noncommuting = OperatorFamily { parities: vec![E], ops: vec![units[1].block_diag(&Matrix::zeros(2, 2))] };
    assert!(hom_fixed(&w, &s_w, &v, &s_v, &noncommuting).is_err());
}

#[test]
fn fundamental_identity_examples() {
    let o = jordan_pair_type_i(1, 2).unwrap();
    assert!(o.pair.check_fundamental_identity(cfg()).passed());
    let zero = Gjsp::zero(SuperSpace::standard(2, 1), SuperSpace::standard(1, 2));
    assert!(zero.check_fundamental_identity(cfg()).passed());
    let mut plus = o.pair.entries(Sign::Plus);
    plus[2].4 = &plus[2].4 + &s(1);
    let bad = Gjsp::from_entries(o.pair.space(Sign::Minus).clone(), o.pair.space(Sign::Plus).clone(), &o.pair.entries(Sign::Minus), &plus)
        .unwrap();
    let r = bad.check_fundamental_identity(cfg());
    assert!(!r.passed());
    assert!(r.failures().all(|p| !p.witnesses.is_empty()));
}

#[test]
fn pairing_property_examples() {
    for (p, q) in TYPE_I_GRID {
        let r = jordan_pair_type_i(p, q).unwrap().check_pairing_properties(cfg());
        assert!(r.passed(), "I_{p},{q}: {r}");
    }
    for n in 1..=3 {
        assert!(jordan_pair_type_iv(n).unwrap().check_pairing_properties(cfg()).passed());
    }
    assert!(gl11_pair().check_membership(cfg()).passed());
}

#[test]
fn nu_examples() {
    let o = jordan_pair_type_i(1, 1).unwrap();
    assert!(o.pair.nu(&[s(0)], &[s(1)]).is_zero());
    let n = o.pair.nu(&[s(1)], &[s(1)]);
    assert_eq!((n.minus[(0, 0)].clone(), n.plus[(0, 0)].clone()), (s(2), s(-2)));
}

#[test]
fn nu_operators_act_as_derivations_of_nu() {
    for o in [jordan_pair_type_i(2, 2).unwrap(), gl11_pair()] {
        let pair = &o.pair;
        let (nm, np) = (pair.dim(Sign::Minus), pair.dim(Sign::Plus));
        let par = |s: Sign, i: usize| pair.space(s).parity(i);
        for (x, y, z, w) in (0..nm * np * nm * np).map(|k| (k / (np * nm * np), (k / (nm * np)) % np, (k / np) % nm, k % np)) {
            let (a, b) = (par(Sign::Minus, x) + par(Sign::Plus, y), par(Sign::Minus, z) + par(Sign::Plus, w));
            let (xm, xp) = pair.nu_basis(x, y);
            let (zm, zp) = pair.nu_basis(z, w);
            let lhs = (supercommutator(&xm, a, &zm, b), supercommutator(&xp, a, &zp, b));
            // [ν(x,y), ν(z,w)] = ν(ν(x,y)z, w) + η_{x+y,z} ν(z, ν(x,y)w)
            let first = pair.nu(&xm.column(z), &unit(np, w));
            let second = pair.nu(&unit(nm, z), &xp.column(w));
            let c = sgn(a.is_odd() && par(Sign::Minus, z).is_odd());
            let rhs = (first.minus.add(&second.minus.scale(&c)), first.plus.add(&second.plus.scale(&c)));
            assert_eq!(lhs, rhs, "({x}, {y}), ({z}, {w})");
        }
    }
}

#[test]
fn instr_examples() {
    let zero = Gjsp::zero(SuperSpace::standard(1, 0), SuperSpace::standard(1, 0));
    assert_eq!(zero.instr().unwrap().dim(), 0);
    assert_eq!(jordan_pair_type_i(1, 1).unwrap().pair.instr().unwrap().dim(), 1);
}

#[test]
fn derivation_examples() {
    let i11 = jordan_pair_type_i(1, 1).unwrap();
    let z = Matrix::zeros(1, 1);
    assert!(i11.pair.check_derivation(&z, &z, E, cfg()).passed());
    let id = Matrix::identity(1);
    assert!(!i11.pair.check_derivation(&id, &id, E, cfg()).passed());
    assert!(nu_derivation_report(&jordan_pair_type_iv(3).unwrap().pair, cfg()).passed());
}

#[test]
fn flavors() {
    for n in 1..=3 {
        let f = jordan_pair_type_iv(n).unwrap().pair.classify_flavor();
        assert!(f.jordan_pair && f.jordan_superpair && !f.antipair);
    }
    let f = kantor_pair_mn(2).unwrap().pair.classify_flavor();
    assert!(!f.jordan_pair && !f.symmetry.witnesses.is_empty());
    let f = Gjsp::zero(SuperSpace::standard(0, 1), SuperSpace::standard(0, 1)).classify_flavor();
    assert!(f.jordan_superpair && f.antipair && !f.jordan_pair);
    assert!(jordan_pair_type_i(2, 3).unwrap().pair.classify_flavor().jordan_pair);
}

#[test]
fn pair_homomorphisms() {
    let o = jordan_pair_type_i(1, 2).unwrap();
    let id: Matrix = Matrix::identity(2);
    assert!(check_pair_hom(&id, &id, &o.pair, &o.pair, Some((&o.pairing, &o.pairing)), cfg()).passed());
    let (pm, pp) = diagonal_aut_type_i(&[1], &[2, 3]);
    let r = check_pair_hom(&pm, &pp, &o.pair, &o.pair, Some((&o.pairing, &o.pairing)), cfg());
    assert!(r.passed(), "{r}");
    assert!(r.property("invertible").is_some_and(|p| p.passed));
}
