//! Tensor products and direct sums of pairs with a pairing, the one-dimensional
//! objects `V_α`, tensor-shifts and factorization along an orthogonal split.

use std::fmt;
use std::ops::Add;
use std::sync::Arc;

use crate::faulkner::{faulkner_backward, forward_raw};
use crate::gjsp::{check_pair_hom, sweep_nested, Gjsp, GjspObject, Sign};
use crate::liesuper::{hom_fixed, InvariantForm, LieSuperAlgebra, MetricModuleTriple, OperatorFamily, SuperModule};
use crate::linalg::{dot, Matrix, Span};
use crate::report::{compare, sweep, CheckConfig, PropertyOutcome, Report};
use crate::scalar::{Ring, Scalar};
use crate::superlinear::{eta2, tensor_pairing, Parity, SuperSpace};
use crate::Error;

/// An element `α = (λ, a)` of `𝔽 × ℤ₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct ShiftParameter {
    pub lambda: Scalar,
    pub a: Parity,
}

impl ShiftParameter {
    pub fn new(lambda: Scalar, a: Parity) -> ShiftParameter {
        ShiftParameter { lambda, a }
    }

    pub fn zero() -> ShiftParameter {
        ShiftParameter { lambda: Scalar::zero(), a: Parity::Even }
    }
}

impl Add for &ShiftParameter {
    type Output = ShiftParameter;
    fn add(self, rhs: &ShiftParameter) -> ShiftParameter {
        ShiftParameter { lambda: &self.lambda + &rhs.lambda, a: self.a + rhs.a }
    }
}

impl Add for ShiftParameter {
    type Output = ShiftParameter;
    fn add(self, rhs: ShiftParameter) -> ShiftParameter {
        &self + &rhs
    }
}

impl fmt::Display for ShiftParameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lambda, self.a)
    }
}

fn sign(neg: bool) -> Scalar {
    Scalar::one().signed(neg)
}

/// `diag(η_{p, ε_i})` on a space.
fn sign_diag(space: &SuperSpace, p: Parity) -> Matrix {
    Matrix::from_fn(space.dim(), space.dim(), |i, j| if i == j { sign(eta2(p, space.parity(i))) } else { Scalar::zero() })
}

/// `M` viewed as a module over `L1 ⊕ L2`, with the other summand acting by zero.
fn inflate(m: &SuperModule, algebra: &Arc<LieSuperAlgebra>, offset: usize) -> Result<SuperModule, Error> {
    let n = m.dim();
    let rho = (0..algebra.dim())
        .map(|a| if a >= offset && a < offset + m.algebra().dim() { m.rho(a - offset).clone() } else { Matrix::zeros(n, n) })
        .collect();
    SuperModule::new(Arc::clone(algebra), m.space().clone(), rho)
}

/// `(L1 ⊕ L2, M1 ⊗ M2, b1 ⊥ b2)`.
fn tensor_triple(t1: &MetricModuleTriple, t2: &MetricModuleTriple) -> Result<MetricModuleTriple, Error> {
    let algebra = Arc::new(t1.algebra().direct_sum(t2.algebra()));
    let m1 = inflate(t1.module(), &algebra, 0)?;
    let m2 = inflate(t2.module(), &algebra, t1.algebra().dim())?;
    let form = InvariantForm::new(Arc::clone(&algebra), t1.form().gram().block_diag(t2.form().gram()))?;
    MetricModuleTriple::new(m1.tensor(&m2)?, form)
}

/// The (left) tensor product, through the associated triples: `L = L1 ⊕ L2`,
/// `b = b1 ⊥ b2`, `M = M1 ⊗ M2`. The result lives on `V1^σ ⊗ V2^σ` with the
/// tensor pairing.
pub fn gjsp_tensor(o1: &GjspObject, o2: &GjspObject) -> Result<GjspObject, Error> {
    let b1 = faulkner_backward(o1)?;
    let b2 = faulkner_backward(o2)?;
    let raw = forward_raw(&tensor_triple(&b1.triple, &b2.triple)?)?;
    // f ↦ ⟨f, ·⟩ identifies V1⁻ ⊗ V2⁻ with the dual basis of M
    let pairing = tensor_pairing(&o1.pairing, &o2.pairing);
    let minus = o1.pair.space(Sign::Minus).tensor(o2.pair.space(Sign::Minus));
    let plus = raw.pair.space(Sign::Plus).clone();
    let psi = pairing.matrix.transpose();
    raw.transport(&psi, &Matrix::identity(plus.dim()), minus, plus)
}

/// The flip `V1 ⊗ V2 → V2 ⊗ V1`, `x ⊗ y ↦ η_{x,y} y ⊗ x`.
pub fn flip_matrix(s1: &SuperSpace, s2: &SuperSpace) -> Matrix {
    let (n1, n2) = (s1.dim(), s2.dim());
    let mut m = Matrix::zeros(n1 * n2, n1 * n2);
    for a in 0..n1 {
        for b in 0..n2 {
            m[(b * n1 + a, a * n2 + b)] = sign(eta2(s1.parity(a), s2.parity(b)));
        }
    }
    m
}

/// The right tensor product `V1 →⊗ V2`: `V2 ←⊗ V1` transported along the
/// signed flip, so the flip is an isomorphism `V1 →⊗ V2 ≅ V2 ←⊗ V1` by construction.
pub fn gjsp_tensor_right(o1: &GjspObject, o2: &GjspObject) -> Result<GjspObject, Error> {
    let swapped = gjsp_tensor(o2, o1)?;
    let s = |o: &GjspObject, sigma: Sign| o.pair.space(sigma).clone();
    let fm = flip_matrix(&s(o1, Sign::Minus), &s(o2, Sign::Minus));
    let fp = flip_matrix(&s(o1, Sign::Plus), &s(o2, Sign::Plus));
    swapped.transport(&fm, &fp, s(o1, Sign::Minus).tensor(&s(o2, Sign::Minus)), s(o1, Sign::Plus).tensor(&s(o2, Sign::Plus)))
}

/// Componentwise direct sum with block pairing.
pub fn gjsp_direct_sum(objects: &[GjspObject]) -> Result<GjspObject, Error> {
    let (first, rest) = objects.split_first().ok_or(Error::Empty)?;
    let mut pair = first.pair.clone();
    let mut pairing = first.pairing.matrix.clone();
    for o in rest {
        pair = pair.direct_sum(&o.pair);
        pairing = pairing.block_diag(&o.pairing.matrix);
    }
    GjspObject::new(pair, pairing)
}

/// `V_α`: basis `f`, `v` of parity `a` with `⟨v, f⟩ = 1`, `{v,f,v} = λv` and
/// `{f,v,f} = η_a λ f`.
pub fn onedim_object(alpha: &ShiftParameter) -> GjspObject {
    let space = SuperSpace::new(vec![alpha.a]);
    let eta_a = sign(alpha.a.is_odd());
    let d_minus = vec![Matrix::from_fn(1, 1, |_, _| &eta_a * &alpha.lambda)];
    let d_plus = vec![Matrix::from_fn(1, 1, |_, _| alpha.lambda.clone())];
    let pair = Gjsp::new(space.clone(), space, d_minus, d_plus).expect("1x1 operators");
    GjspObject::new(pair, Matrix::from_fn(1, 1, |_, _| eta_a.clone())).expect("1x1 pairing")
}

/// The classifying parameter of a one-dimensional object.
pub fn onedim_parameter(o: &GjspObject) -> Result<ShiftParameter, Error> {
    if o.pair.dim(Sign::Minus) != 1 || o.pair.dim(Sign::Plus) != 1 {
        return Err(Error::Dimension("both components must be one-dimensional".into()));
    }
    let c = &o.pairing.matrix[(0, 0)];
    if c.is_zero() {
        return Err(Error::DegenerateForm);
    }
    let a = o.pair.space(Sign::Minus).parity(0);
    if o.pair.space(Sign::Plus).parity(0) != a {
        return Err(Error::Invalid("mixed parity with a nonzero pairing".into()));
    }
    // rescale f so that ⟨v, f⟩ = η_a ⟨f, v⟩ = 1, then {v, f, v} = λ v
    let scale = (&sign(a.is_odd()) * c).inv().ok_or(Error::DivisionByZero)?;
    let lambda = &o.pair.d(Sign::Plus, 0, 0)[(0, 0)] * &scale;
    Ok(ShiftParameter { lambda, a })
}

/// `V^{[α]}` by the closed formulas on the spaces of `V`: parities shift by `a`,
/// `⟨f,v⟩' = η_a η_{a,v} ⟨f,v⟩`, `{x,y,z}⁺' = η_{a,y}({x,y,z}⁺ + λ⟨x,y⟩z)` and
/// `{x,y,z}⁻' = η_a η_{a,y}({x,y,z}⁻ + λ⟨x,y⟩z)`.
pub fn tensor_shift(o: &GjspObject, alpha: &ShiftParameter) -> Result<GjspObject, Error> {
    let report = o.check_membership(CheckConfig::default());
    if !report.passed() {
        return Err(Error::precondition("pair with pairing", report));
    }
    let a = alpha.a;
    let minus = o.pair.space(Sign::Minus);
    let plus = o.pair.space(Sign::Plus);
    let p = &o.pairing.matrix;
    let flipped = o.pairing.flipped();
    let (nm, np) = (minus.dim(), plus.dim());
    let shifted = |d: &Matrix, value: &Scalar, s: Scalar| {
        let mut out = d.clone();
        if !value.is_zero() && !alpha.lambda.is_zero() {
            let c = &alpha.lambda * value;
            for i in 0..out.rows() {
                out[(i, i)] = &out[(i, i)] + &c;
            }
        }
        out.scale(&s)
    };
    let d_minus = (0..nm * np)
        .map(|k| {
            let (x, y) = (k / np, k % np);
            let s = sign(a.is_odd() != eta2(a, plus.parity(y)));
            shifted(o.pair.d(Sign::Minus, x, y), &p[(x, y)], s)
        })
        .collect();
    let d_plus = (0..np * nm)
        .map(|k| {
            let (x, y) = (k / nm, k % nm);
            shifted(o.pair.d(Sign::Plus, x, y), &flipped[(x, y)], sign(eta2(a, minus.parity(y))))
        })
        .collect();
    let pairing = Matrix::from_fn(nm, np, |i, j| p[(i, j)].clone().signed(a.is_odd() != eta2(a, plus.parity(j))));
    GjspObject::new(Gjsp::new(minus.shift(a), plus.shift(a), d_minus, d_plus)?, pairing)
}

fn compare_objects(name: &str, lhs: &GjspObject, rhs: &GjspObject, cfg: CheckConfig) -> Report {
    let mut r = Report::new(name);
    let same_spaces = Sign::BOTH.iter().all(|&s| lhs.pair.space(s) == rhs.pair.space(s));
    r.push(PropertyOutcome::flag("spaces", same_spaces, "dimensions or parities differ"));
    if !same_spaces {
        return r;
    }
    let (nm, np) = (lhs.pair.dim(Sign::Minus), lhs.pair.dim(Sign::Plus));
    r.push(sweep("pairing", &["f", "v"], &[nm, np], cfg, |idx| {
        compare(vec![lhs.pairing.matrix[(idx[0], idx[1])].clone()], vec![rhs.pairing.matrix[(idx[0], idx[1])].clone()])
    }));
    for sigma in Sign::BOTH {
        let (n, m) = (lhs.pair.dim(sigma), lhs.pair.dim(sigma.opposite()));
        r.push(sweep_nested(&format!("product{}", sigma.symbol()), &["x", "y"], &[n, m], "z", cfg, |idx| {
            mismatches(lhs.pair.d(sigma, idx[0], idx[1]), rhs.pair.d(sigma, idx[0], idx[1]))
        }));
    }
    r
}

fn mismatches(l: &Matrix, r: &Matrix) -> Vec<(usize, Vec<Scalar>, Vec<Scalar>)> {
    (0..l.cols())
        .filter_map(|u| {
            let (a, b) = (l.column(u), r.column(u));
            (a != b).then_some((u, a, b))
        })
        .collect()
}

/// Compares [`tensor_shift`] with `V ⊗ V_α` computed through the triples, on the
/// matching `x ⊗ e ↦ x`.
pub fn verify_tensor_shift(o: &GjspObject, alpha: &ShiftParameter) -> Result<Report, Error> {
    let closed = tensor_shift(o, alpha)?;
    let through = gjsp_tensor(o, &onedim_object(alpha))?;
    Ok(compare_objects("tensor-shift against the tensor product with V_α", &closed, &through, CheckConfig::default()))
}

/// Checks the closed formulas for `V1 ⊗ V2`: the pairing is the tensor
/// superproduct, the generators of `instr` are
/// `η_{f2,v1}(⟨f2,v2⟩ν(f1,v1) + ⟨f1,v1⟩ν(f2,v2))` and the triple products are
/// `η_{x2,y1}({x1,y1,z1} ⊗ ⟨x2,y2⟩z2 + η_{z1,x2}η_{z1,y2}⟨x1,y1⟩ z1 ⊗ {x2,y2,z2})`.
pub fn verify_tensor_formulas(o1: &GjspObject, o2: &GjspObject) -> Result<Report, Error> {
    verify_tensor_formulas_with(o1, o2, CheckConfig::default())
}

pub fn verify_tensor_formulas_with(o1: &GjspObject, o2: &GjspObject, cfg: CheckConfig) -> Result<Report, Error> {
    let t = gjsp_tensor(o1, o2)?;
    let mut r = Report::new("closed formulas for the tensor product");
    let expected = tensor_pairing(&o1.pairing, &o2.pairing);
    let (m1, m2) = (o1.pair.dim(Sign::Minus), o2.pair.dim(Sign::Minus));
    let (p1, p2) = (o1.pair.dim(Sign::Plus), o2.pair.dim(Sign::Plus));
    r.push(sweep("pairing", &["f", "v"], &[m1 * m2, p1 * p2], cfg, |idx| {
        compare(vec![t.pairing.matrix[(idx[0], idx[1])].clone()], vec![expected.matrix[(idx[0], idx[1])].clone()])
    }));

    let flip1 = o1.pairing.flipped();
    let flip2 = o2.pairing.flipped();
    let pair_value = |o: &GjspObject, flip: &Matrix, sigma: Sign, x: usize, y: usize| match sigma {
        Sign::Minus => o.pairing.matrix[(x, y)].clone(),
        Sign::Plus => flip[(x, y)].clone(),
    };
    // A1 ⊗ I + S ⊗ A2 with the given coefficients, S the Koszul sign of the second factor
    let combine = |sigma: Sign, c1: &Scalar, a1: &Matrix, c2: &Scalar, a2: &Matrix, p: Parity, outer: bool| {
        let s1 = o1.pair.space(sigma);
        let id2 = Matrix::identity(o2.pair.dim(sigma));
        let mut m = a1.kron(&id2).scale(c1);
        m.add_scaled(c2, &sign_diag(s1, p).kron(a2));
        m.scale(&sign(outer))
    };

    for sigma in Sign::BOTH {
        let tau = sigma.opposite();
        let (n1, n2) = (o1.pair.dim(sigma), o2.pair.dim(sigma));
        let (k1, k2) = (o1.pair.dim(tau), o2.pair.dim(tau));
        let sx2 = o2.pair.space(sigma);
        let (sy1, sy2) = (o1.pair.space(tau), o2.pair.space(tau));
        r.push(sweep_nested(&format!("product{}", sigma.symbol()), &["x1", "x2", "y1", "y2"], &[n1, n2, k1, k2], "z", cfg, |idx| {
            let (x1, x2, y1, y2) = (idx[0], idx[1], idx[2], idx[3]);
            let c1 = pair_value(o2, &flip2, sigma, x2, y2);
            let c2 = pair_value(o1, &flip1, sigma, x1, y1);
            let p = sx2.parity(x2) + sy2.parity(y2);
            let want = combine(sigma, &c1, o1.pair.d(sigma, x1, y1), &c2, o2.pair.d(sigma, x2, y2), p, eta2(sx2.parity(x2), sy1.parity(y1)));
            mismatches(t.pair.d(sigma, x1 * n2 + x2, y1 * k2 + y2), &want)
        }));
    }

    let (sf2, sv1) = (o2.pair.space(Sign::Minus), o1.pair.space(Sign::Plus));
    r.push(sweep("generators", &["f1", "f2", "v1", "v2"], &[m1, m2, p1, p2], cfg, |idx| {
        let (f1, f2, v1, v2) = (idx[0], idx[1], idx[2], idx[3]);
        let nu = t.pair.nu_basis(f1 * m2 + f2, v1 * p2 + v2);
        let (a1, b1) = o1.pair.nu_basis(f1, v1);
        let (a2, b2) = o2.pair.nu_basis(f2, v2);
        let c1 = o2.pairing.matrix[(f2, v2)].clone();
        let c2 = o1.pairing.matrix[(f1, v1)].clone();
        let p = sf2.parity(f2) + o2.pair.space(Sign::Plus).parity(v2);
        let outer = eta2(sf2.parity(f2), sv1.parity(v1));
        let want_minus = combine(Sign::Minus, &c1, &a1, &c2, &a2, p, outer);
        let want_plus = combine(Sign::Plus, &c1, &b1, &c2, &b2, p, outer);
        let mut lhs = nu.0.as_slice().to_vec();
        lhs.extend_from_slice(nu.1.as_slice());
        let mut rhs = want_minus.as_slice().to_vec();
        rhs.extend_from_slice(want_plus.as_slice());
        compare(lhs, rhs)
    }));
    Ok(r)
}

/// Builds `V_α ⊗ V_β` and `V_{α+β}` and checks the isomorphism
/// `(η_{ab}·id, id) : V_{α+β} → V_α ⊗ V_β`.
pub fn verify_onedim_addition(alpha: &ShiftParameter, beta: &ShiftParameter) -> Result<Report, Error> {
    let t = gjsp_tensor(&onedim_object(alpha), &onedim_object(beta))?;
    let sum = alpha + beta;
    let target = onedim_object(&sum);
    let mut r = Report::new(format!("V_{alpha} ⊗ V_{beta} against V_{sum}"));
    let got = onedim_parameter(&t)?;
    r.push(PropertyOutcome::flag("parameter", got == sum, format!("tensor product has parameter {got}")));
    let phi_minus = Matrix::from_fn(1, 1, |_, _| sign(eta2(alpha.a, beta.a)));
    let phi_plus = Matrix::identity(1);
    r.absorb(
        "isomorphism",
        check_pair_hom(&phi_minus, &phi_plus, &target.pair, &t.pair, Some((&target.pairing, &t.pairing)), CheckConfig::default()),
    );
    Ok(r)
}

/// Checks that `φ1 ⊗ φ2 = (φ1⁻ ⊗ φ2⁻, φ1⁺ ⊗ φ2⁺)` is an automorphism of
/// `V1 ⊗ V2` preserving the pairing, for automorphisms `φi` of `Vi` over a ring.
pub fn verify_aut_tensor<R: Ring>(
    phi1: (&Matrix<R>, &Matrix<R>),
    phi2: (&Matrix<R>, &Matrix<R>),
    o1: &GjspObject,
    o2: &GjspObject,
) -> Result<Report<R>, Error> {
    let cfg = CheckConfig::default();
    for (phi, o) in [(phi1, o1), (phi2, o2)] {
        let rep = check_pair_hom(phi.0, phi.1, &o.pair, &o.pair, Some((&o.pairing, &o.pairing)), cfg);
        if !rep.passed() {
            return Err(Error::NotAutomorphism(Box::new(rep.map(|x| x.to_string()))));
        }
    }
    let t = gjsp_tensor(o1, o2)?;
    let minus = phi1.0.kron(phi2.0);
    let plus = phi1.1.kron(phi2.1);
    Ok(check_pair_hom(&minus, &plus, &t.pair, &t.pair, Some((&t.pairing, &t.pairing)), cfg))
}

/// A factorization `V ≅ V_H ⊗ V_W` along `instr(V) = L1 ⊥ L2`, where `W` is an
/// irreducible `L1`-submodule of `V⁺` and `H = Hom_{L1}(W, V⁺)` carries the
/// action of `L2`.
#[derive(Clone, Debug)]
pub struct Factorization {
    /// The factor on `H = Hom_{L1}(W, V⁺)`, with inner structure `L2`.
    pub hom_factor: GjspObject,
    /// The factor on `W`, with inner structure `L1`.
    pub w_factor: GjspObject,
    /// `hom_factor ⊗ w_factor`.
    pub tensor: GjspObject,
    /// Isomorphism `tensor → V`; `phi_plus` is the evaluation `h ⊗ w ↦ h(w)`.
    pub phi_minus: Matrix,
    pub phi_plus: Matrix,
    pub report: Report,
}

fn homogeneous_space(space: &SuperSpace, vectors: &[Vec<Scalar>], what: &str) -> Result<SuperSpace, Error> {
    let parities: Option<Vec<Parity>> = vectors.iter().map(|v| space.vector_parity(v)).collect();
    parities.map(SuperSpace::new).ok_or_else(|| Error::InvalidSplit(format!("{what} has a non-homogeneous basis vector")))
}

fn split_part(lie: &LieSuperAlgebra, basis: &[Vec<Scalar>], what: &str) -> Result<(LieSuperAlgebra, Span), Error> {
    lie.subalgebra(basis).map_err(|e| Error::InvalidSplit(format!("{what}: {e}")))
}

/// Factors `O` along a `b`-orthogonal split of `instr(O)` into graded ideals
/// `L1`, `L2` (given by coordinates in the basis of `O.pair.instr()`) and an
/// irreducible `L1`-submodule `W ⊆ V⁺` (given by a basis).
pub fn tensor_factorize(o: &GjspObject, l1: &[Vec<Scalar>], l2: &[Vec<Scalar>], w: &[Vec<Scalar>]) -> Result<Factorization, Error> {
    let back = faulkner_backward(o)?;
    let lie = back.triple.algebra();
    let m = back.triple.module();
    let gram = back.triple.form().gram();
    let (dl, dv) = (lie.dim(), m.dim());

    let (alg1, span1) = split_part(lie, l1, "L1")?;
    let (alg2, span2) = split_part(lie, l2, "L2")?;
    let all = Span::from_generators(dl, l1.iter().chain(l2));
    if all.dim() != dl {
        return Err(Error::InvalidSplit(format!("L1 + L2 has dimension {} but instr has dimension {dl}", all.dim())));
    }
    for (span, basis, what) in [(&span1, l1, "L1"), (&span2, l2, "L2")] {
        for a in 0..dl {
            let e = crate::linalg::unit(dl, a);
            if basis.iter().any(|y| !span.contains(&lie.bracket(&e, y))) {
                return Err(Error::InvalidSplit(format!("{what} is not an ideal")));
            }
        }
    }
    if l1.iter().any(|x| l2.iter().any(|y| !dot(x, &gram.mul_vec(y)).is_zero())) {
        return Err(Error::InvalidSplit("L1 and L2 are not orthogonal".into()));
    }

    let w_space = homogeneous_space(m.space(), w, "W").map_err(|_| Error::NotSubmodule("W has a non-homogeneous basis vector".into()))?;
    let w_span = Span::from_generators(dv, w);
    if w_span.dim() != w.len() || w.is_empty() {
        return Err(Error::NotSubmodule("W basis must be nonempty and linearly independent".into()));
    }
    let family = |basis: &[Vec<Scalar>], alg: &LieSuperAlgebra| OperatorFamily {
        parities: (0..alg.dim()).map(|a| alg.parity(a)).collect(),
        ops: basis.iter().map(|x| m.operator(x)).collect(),
    };
    let s_on_v = family(l1, &alg1);
    let t_on_v = family(l2, &alg2);
    let mut s_on_w = OperatorFamily { parities: s_on_v.parities.clone(), ops: Vec::new() };
    for op in &s_on_v.ops {
        let cols: Option<Vec<Vec<Scalar>>> = w.iter().map(|v| w_span.coords(&op.mul_vec(v))).collect();
        let cols = cols.ok_or_else(|| Error::NotSubmodule("W is not stable under L1".into()))?;
        s_on_w.ops.push(Matrix::from_columns(w.len(), &cols));
    }

    // Schur: the commutant of an absolutely irreducible W is the scalars
    let empty = OperatorFamily { parities: Vec::new(), ops: Vec::new() };
    let schur = hom_fixed(&w_space, &s_on_w, &w_space, &s_on_w, &empty)?;
    if schur.basis.len() != 1 {
        return Err(Error::NotIrreducible(schur.basis.len()));
    }
    let h = hom_fixed(&w_space, &s_on_w, m.space(), &s_on_v, &t_on_v)?;
    let dh = h.basis.len();
    // maps W → V⁺ in coordinates of V⁺, composed with the embedding of W
    let phi_plus = Matrix::from_columns(
        dv,
        &(0..dh * w.len()).map(|k| h.basis[k / w.len()].column(k % w.len())).collect::<Vec<_>>(),
    );
    if !phi_plus.is_square() || !phi_plus.is_invertible() {
        return Err(Error::NotIrreducible(1));
    }

    let restricted = |basis: &[Vec<Scalar>], alg: LieSuperAlgebra| -> Result<InvariantForm, Error> {
        let g = Matrix::from_fn(basis.len(), basis.len(), |a, c| dot(&basis[a], &gram.mul_vec(&basis[c])));
        InvariantForm::new(Arc::new(alg), g)
    };
    let b1 = restricted(l1, alg1)?;
    let b2 = restricted(l2, alg2)?;
    let w_module = SuperModule::new(Arc::clone(b1.algebra()), w_space, s_on_w.ops)?;
    let h_module = SuperModule::new(Arc::clone(b2.algebra()), h.space.clone(), h.t_action.clone())?;
    let w_factor = forward_raw(&MetricModuleTriple::new(w_module, b1)?)?;
    let hom_factor = forward_raw(&MetricModuleTriple::new(h_module, b2)?)?;
    let tensor = gjsp_tensor(&hom_factor, &w_factor)?;

    // the pairing fixes φ⁻ from φ⁺: φ⁻ᵀ P φ⁺ = P_tensor
    let p = &o.pairing.matrix;
    let p_inv_t = p.inverse().ok_or(Error::DegenerateForm)?.transpose();
    let e_inv_t = phi_plus.inverse().ok_or(Error::Singular)?.transpose();
    let phi_minus = p_inv_t.mul(&e_inv_t).mul(&tensor.pairing.matrix.transpose());
    let report = check_pair_hom(&phi_minus, &phi_plus, &tensor.pair, &o.pair, Some((&tensor.pairing, &o.pairing)), CheckConfig::default());
    Ok(Factorization { hom_factor, w_factor, tensor, phi_minus, phi_plus, report })
}
