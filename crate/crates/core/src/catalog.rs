//! Concrete objects: Jordan pairs of types I and IV, the Kantor pair of
//! `n×n` matrices, `gl(m|n)` with its supertrace form, and the two worked
//! isomorphisms between tensor products and classical pairs.

use std::sync::Arc;

use crate::gjsp::{check_pair_hom, Gjsp, GjspObject, ProductEntry};
use crate::liesuper::{InvariantForm, LieSuperAlgebra, MetricModuleTriple, SuperModule};
use crate::linalg::Matrix;
use crate::report::{CheckConfig, Report};
use crate::scalar::Scalar;
use crate::superlinear::{eta2, Parity, SuperSpace};
use crate::tensorops::{gjsp_tensor, onedim_object, tensor_shift, ShiftParameter};
use crate::Error;

fn positive(n: usize, what: &str) -> Result<(), Error> {
    if n < 1 {
        return Err(Error::Invalid(format!("{what} must be at least 1")));
    }
    Ok(())
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// Builds a pair whose two sides share one basis-level product rule.
fn symmetric_pair(space: SuperSpace, rule: impl Fn(usize, usize, usize) -> Vec<(usize, i64)>, pairing: Matrix) -> GjspObject {
    let n = space.dim();
    let mut entries: Vec<ProductEntry> = Vec::new();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let mut acc = vec![0i64; n];
                for (out, c) in rule(x, y, z) {
                    acc[out] += c;
                }
                for (out, c) in acc.into_iter().enumerate() {
                    if c != 0 {
                        entries.push((x, y, z, out, Scalar::from(c)));
                    }
                }
            }
        }
    }
    let pair = Gjsp::from_entries(space.clone(), space, &entries, &entries).expect("indices in range");
    GjspObject::new(pair, pairing).expect("square pairing")
}

/// Type `I_{p,q}`: `p×q` matrices with `{x,y,z} = x yᵀ z + z yᵀ x` and `t(x,y) = tr(x yᵀ)`.
/// Basis `E_ij` at index `i·q + j`.
pub fn jordan_pair_type_i(p: usize, q: usize) -> Result<GjspObject, Error> {
    positive(p, "p")?;
    positive(q, "q")?;
    let n = p * q;
    let ij = |x: usize| (x / q, x % q);
    Ok(symmetric_pair(
        SuperSpace::standard(n, 0),
        |x, y, z| {
            let ((i, j), (k, l), (m, nn)) = (ij(x), ij(y), ij(z));
            let mut out = Vec::new();
            if delta(j, l) && delta(k, m) {
                out.push((i * q + nn, 1));
            }
            if delta(nn, l) && delta(k, i) {
                out.push((m * q + j, 1));
            }
            out
        },
        Matrix::identity(n),
    ))
}

/// Type `IV_n` with the standard scalar product.
pub fn jordan_pair_type_iv(n: usize) -> Result<GjspObject, Error> {
    positive(n, "n")?;
    jordan_pair_type_iv_with_form(&Matrix::identity(n))
}

/// Type `IV_n` for a nondegenerate symmetric form `q`:
/// `{x,y,z} = q(x,y) z + q(z,y) x - q(x,z) y` and `t = q`.
pub fn jordan_pair_type_iv_with_form(q: &Matrix) -> Result<GjspObject, Error> {
    let n = q.rows();
    positive(n, "n")?;
    if !q.is_square() || *q != q.transpose() {
        return Err(Error::Invalid("the form of type IV must be symmetric".into()));
    }
    if !q.is_invertible() {
        return Err(Error::DegenerateForm);
    }
    let space = SuperSpace::standard(n, 0);
    let mut entries: Vec<ProductEntry> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut acc = vec![Scalar::zero(); n];
                acc[k] = &acc[k] + &q[(i, j)];
                acc[i] = &acc[i] + &q[(k, j)];
                acc[j] = &acc[j] - &q[(i, k)];
                for (out, c) in acc.into_iter().enumerate() {
                    if !c.is_zero() {
                        entries.push((i, j, k, out, c));
                    }
                }
            }
        }
    }
    let pair = Gjsp::from_entries(space.clone(), space, &entries, &entries)?;
    GjspObject::new(pair, q.clone())
}

/// The Kantor pair of `n×n` matrices with the transpose involution:
/// `{x,y,z} = x yᵀ z + z yᵀ x - z xᵀ y`, `t(x,y) = tr(x yᵀ)`.
pub fn kantor_pair_mn(n: usize) -> Result<GjspObject, Error> {
    positive(n, "n")?;
    let ij = |x: usize| (x / n, x % n);
    Ok(symmetric_pair(
        SuperSpace::standard(n * n, 0),
        |x, y, z| {
            let ((i, j), (k, l), (m, nn)) = (ij(x), ij(y), ij(z));
            let mut out = Vec::new();
            if delta(j, l) && delta(k, m) {
                out.push((i * n + nn, 1));
            }
            if delta(nn, l) && delta(k, i) {
                out.push((m * n + j, 1));
            }
            if delta(nn, j) && delta(i, k) {
                out.push((m * n + l, -1));
            }
            out
        },
        Matrix::identity(n * n),
    ))
}

/// `gl(m|n)` on the natural module with `b(x,y) = str(xy)`.
///
/// Basis `E_ij` at index `i·(m+n) + j`; indices `≥ m` are odd.
pub fn gl_supertrace(m: usize, n: usize) -> MetricModuleTriple {
    assert!(m + n >= 1, "gl(0|0) is not supported");
    let big = m + n;
    let p = |i: usize| if i >= m { Parity::Odd } else { Parity::Even };
    let idx = |i: usize, j: usize| i * big + j;
    let space = SuperSpace::new((0..big * big).map(|x| p(x / big) + p(x % big)).collect());
    let mut br = Vec::new();
    for i in 0..big {
        for j in 0..big {
            for k in 0..big {
                for l in 0..big {
                    // [E_ij, E_kl] = δ_jk E_il - η δ_li E_kj
                    if j == k {
                        br.push((idx(i, j), idx(k, l), idx(i, l), Scalar::one()));
                    }
                    if l == i {
                        let neg = !eta2(p(i) + p(j), p(k) + p(l));
                        br.push((idx(i, j), idx(k, l), idx(k, j), Scalar::one().signed(neg)));
                    }
                }
            }
        }
    }
    let lie = Arc::new(LieSuperAlgebra::from_entries(space, &br).expect("indices in range"));
    let mut form = Vec::new();
    for i in 0..big {
        for j in 0..big {
            // str(E_ij E_ji) = ±1 by the parity of i
            form.push((idx(i, j), idx(j, i), Scalar::one().signed(p(i).is_odd())));
        }
    }
    let b = InvariantForm::from_entries(Arc::clone(&lie), &form).expect("indices in range");
    let mut act = Vec::new();
    for i in 0..big {
        for j in 0..big {
            act.push((idx(i, j), j, i, Scalar::one()));
        }
    }
    let module = SuperModule::from_entries(Arc::clone(&lie), SuperSpace::new((0..big).map(p).collect()), &act).expect("indices in range");
    MetricModuleTriple::new(module, b).expect("same algebra")
}

/// `gl(1|1) ⊕ F z` with `z` even, central, acting as zero on the natural module,
/// and `b = str ⊥ (z, z) ↦ 1`. The module is not faithful.
pub fn nonfaithful_fixture() -> MetricModuleTriple {
    let gl = gl_supertrace(1, 1);
    let line = LieSuperAlgebra::abelian(SuperSpace::standard(1, 0));
    let lie = Arc::new(gl.algebra().direct_sum(&line));
    let gram = gl.form().gram().block_diag(&Matrix::identity(1));
    let form = InvariantForm::new(Arc::clone(&lie), gram).expect("square");
    let mut rho = gl.module().operators().to_vec();
    rho.push(Matrix::zeros(2, 2));
    let module = SuperModule::new(lie, gl.module().space().clone(), rho).expect("dimensions");
    MetricModuleTriple::new(module, form).expect("same algebra")
}

/// An isomorphism between two objects, checked on every basis tuple.
#[derive(Clone, Debug)]
pub struct IsoWitness {
    pub source: GjspObject,
    pub target: GjspObject,
    pub phi_minus: Matrix,
    pub phi_plus: Matrix,
    pub report: Report,
}

fn identity_iso(source: GjspObject, target: GjspObject) -> Result<IsoWitness, Error> {
    use crate::gjsp::Sign;
    for s in Sign::BOTH {
        if source.pair.dim(s) != target.pair.dim(s) {
            return Err(Error::Dimension("the two sides have different dimensions".into()));
        }
    }
    let phi_minus = Matrix::identity(source.pair.dim(Sign::Minus));
    let phi_plus = Matrix::identity(source.pair.dim(Sign::Plus));
    let report = check_pair_hom(
        &phi_minus,
        &phi_plus,
        &source.pair,
        &target.pair,
        Some((&source.pairing, &target.pairing)),
        CheckConfig::default(),
    );
    Ok(IsoWitness { source, target, phi_minus, phi_plus, report })
}

/// `e_i ⊗ e_j ↦ E_ij` from `(I_{1,p} ⊗ I_{1,q})^{[-2]}` to `I_{p,q}`.
pub fn standard_iso_type_i(p: usize, q: usize) -> Result<IsoWitness, Error> {
    let t = gjsp_tensor(&jordan_pair_type_i(1, p)?, &jordan_pair_type_i(1, q)?)?;
    let shifted = tensor_shift(&t, &ShiftParameter::new(Scalar::from(-2), Parity::Even))?;
    identity_iso(shifted, jordan_pair_type_i(p, q)?)
}

/// `e_i ⊗ e_j ↦ E_ij` from `(I_{1,n} ⊗ IV_n)^{[-2]}` to the Kantor pair of `M_n`.
pub fn standard_iso_mn(n: usize) -> Result<IsoWitness, Error> {
    let t = gjsp_tensor(&jordan_pair_type_i(1, n)?, &jordan_pair_type_iv(n)?)?;
    let shifted = tensor_shift(&t, &ShiftParameter::new(Scalar::from(-2), Parity::Even))?;
    identity_iso(shifted, kantor_pair_mn(n)?)
}

/// Any catalog object.
#[derive(Clone, Debug)]
pub enum CatalogObject {
    Pair(GjspObject),
    Triple(MetricModuleTriple),
}

/// Names accepted by [`by_name`], with their parameters.
pub const NAMES: &[(&str, &str)] = &[
    ("type-i", "P Q"),
    ("type-iv", "N"),
    ("kantor-m", "N"),
    ("gl", "M N"),
    ("nonfaithful", ""),
    ("onedim", "LAMBDA PARITY"),
];

/// Looks up a catalog constructor by name; parameters are given as text.
pub fn by_name(name: &str, params: &[String]) -> Result<CatalogObject, Error> {
    let int = |k: usize| -> Result<usize, Error> {
        params
            .get(k)
            .ok_or_else(|| Error::Invalid(format!("{name} needs more parameters")))?
            .parse::<usize>()
            .map_err(|_| Error::Invalid(format!("parameter {:?} is not a nonnegative integer", params[k])))
    };
    let expect = |n: usize| {
        if params.len() != n {
            Err(Error::Invalid(format!("{name} takes {n} parameters, got {}", params.len())))
        } else {
            Ok(())
        }
    };
    match name {
        "type-i" => {
            expect(2)?;
            Ok(CatalogObject::Pair(jordan_pair_type_i(int(0)?, int(1)?)?))
        }
        "type-iv" => {
            expect(1)?;
            Ok(CatalogObject::Pair(jordan_pair_type_iv(int(0)?)?))
        }
        "kantor-m" => {
            expect(1)?;
            Ok(CatalogObject::Pair(kantor_pair_mn(int(0)?)?))
        }
        "gl" => {
            expect(2)?;
            let (m, n) = (int(0)?, int(1)?);
            if m + n == 0 {
                return Err(Error::Invalid("gl needs m + n >= 1".into()));
            }
            Ok(CatalogObject::Triple(gl_supertrace(m, n)))
        }
        "nonfaithful" => {
            expect(0)?;
            Ok(CatalogObject::Triple(nonfaithful_fixture()))
        }
        "onedim" => {
            expect(2)?;
            let lambda = crate::scalar::Field::Rational.parse(&params[0])?;
            let a = Parity::from_bit(int(1)? as u8)?;
            Ok(CatalogObject::Pair(onedim_object(&ShiftParameter::new(lambda, a))))
        }
        _ => Err(Error::Invalid(format!("unknown catalog entry {name:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gjsp::Sign;

    #[test]
    fn type_i_11_is_twice_the_product() {
        let o = jordan_pair_type_i(1, 1).unwrap();
        assert_eq!(o.pair.d(Sign::Minus, 0, 0)[(0, 0)], Scalar::from(2));
        assert_eq!(o.pair.d(Sign::Plus, 0, 0)[(0, 0)], Scalar::from(2));
        assert_eq!(o.pairing.matrix[(0, 0)], Scalar::one());
    }

    #[test]
    fn type_iv_1_is_identity_product() {
        let o = jordan_pair_type_iv(1).unwrap();
        assert_eq!(o.pair.d(Sign::Minus, 0, 0)[(0, 0)], Scalar::one());
    }

    #[test]
    fn type_iv_rejects_bad_forms() {
        let asym = Matrix::from_fn(2, 2, |i, j| Scalar::from((i * 2 + j) as i64));
        assert!(jordan_pair_type_iv_with_form(&asym).is_err());
        let deg = Matrix::from_fn(2, 2, |_, _| Scalar::one());
        assert!(matches!(jordan_pair_type_iv_with_form(&deg), Err(Error::DegenerateForm)));
    }

    #[test]
    fn constructors_reject_zero_sizes() {
        assert!(jordan_pair_type_i(0, 2).is_err());
        assert!(kantor_pair_mn(0).is_err());
        assert!(by_name("gl", &["0".into(), "0".into()]).is_err());
        assert!(by_name("nope", &[]).is_err());
    }

    #[test]
    fn gl10_is_gl1_with_unit_form() {
        let t = gl_supertrace(1, 0);
        assert_eq!(t.algebra().dim(), 1);
        assert_eq!(t.form().gram()[(0, 0)], Scalar::one());
    }
}
