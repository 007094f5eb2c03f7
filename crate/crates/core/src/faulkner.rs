//! The correspondence between metric module triples `(L, M, b)` and pairs
//! with a pairing `(V, ⟨·,·⟩)`, in both directions, with round-trip witnesses
//! and transfer of automorphisms.

use std::sync::Arc;

use rayon::prelude::*;

use crate::gjsp::{check_pair_hom, sweep_nested, Gjsp, GjspObject, Instr, Sign};
use crate::liesuper::{InvariantForm, MetricModuleTriple};
use crate::linalg::{axpy, dot, orthogonal_complement, Matrix, Span};
use crate::report::{compare, sweep, CheckConfig, PropertyOutcome, Report};
use crate::scalar::{Ring, Scalar};
use crate::superlinear::{eta2, is_homogeneous_of, PairingForm};
use crate::Error;

/// The elements `[f_i, v_j] ∈ L` for all pairs of dual and module basis vectors.
#[derive(Clone, Debug)]
pub struct BracketTable {
    n: usize,
    brackets: Vec<Vec<Scalar>>,
}

impl BracketTable {
    /// Solves `b(x_a, [f_i, v_j]) = ⟨x_a·f_i, v_j⟩` for all `i, j`, with the dual
    /// module `M* = M^←` on the dual basis.
    pub fn new(t: &MetricModuleTriple) -> Result<BracketTable, Error> {
        let ginv = t.gram_inverse()?;
        let dual = t.module().left_dual();
        let n = t.module().dim();
        let l = t.algebra().dim();
        let brackets = (0..n * n)
            .into_par_iter()
            .map(|k| {
                let (i, j) = (k / n, k % n);
                // ⟨x_a·f_i, v_j⟩ is entry (j, i) of ρ*(x_a)
                let r: Vec<Scalar> = (0..l).map(|a| dual.rho(a)[(j, i)].clone()).collect();
                ginv.mul_vec(&r)
            })
            .collect();
        Ok(BracketTable { n, brackets })
    }

    /// `[f_i, v_j]`.
    pub fn get(&self, i: usize, j: usize) -> &[Scalar] {
        &self.brackets[i * self.n + j]
    }

    /// `[f, v]` for arbitrary vectors, by bilinearity.
    pub fn bracket(&self, f: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let l = self.brackets.first().map_or(0, |b| b.len());
        let mut out = vec![Scalar::zero(); l];
        for (i, fi) in f.iter().enumerate() {
            for (j, vj) in v.iter().enumerate() {
                if !fi.is_zero() && !vj.is_zero() {
                    axpy(&mut out, &(fi * vj), self.get(i, j));
                }
            }
        }
        out
    }
}

/// `[f, v]` for a single pair of vectors.
pub fn bracket_of(t: &MetricModuleTriple, f: &[Scalar], v: &[Scalar]) -> Result<Vec<Scalar>, Error> {
    let n = t.module().dim();
    if f.len() != n || v.len() != n {
        return Err(Error::Dimension(format!("vectors must have length {n}")));
    }
    let ginv = t.gram_inverse()?;
    let dual = t.module().left_dual();
    let r: Vec<Scalar> = (0..t.algebra().dim()).map(|a| dot(v, &dual.rho(a).mul_vec(f))).collect();
    Ok(ginv.mul_vec(&r))
}

fn require(context: &str, report: Report) -> Result<(), Error> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(context, report))
    }
}

fn require_triple(t: &MetricModuleTriple, cfg: CheckConfig) -> Result<(), Error> {
    require("metric module triple axioms", t.check(cfg))
}

/// The pair `(M*, M)` with `{f,v,g} = [f,v]·g`, `{v,f,w} = [v,f]·w` and
/// `⟨f, v⟩ = f(v)`.
pub fn faulkner_forward(t: &MetricModuleTriple) -> Result<GjspObject, Error> {
    faulkner_forward_with(t, CheckConfig::default())
}

pub fn faulkner_forward_with(t: &MetricModuleTriple, cfg: CheckConfig) -> Result<GjspObject, Error> {
    require_triple(t, cfg)?;
    Ok(forward_unchecked(t, &BracketTable::new(t)?))
}

/// Forward construction without the triple checks, for callers that built the
/// triple from checked parts.
pub(crate) fn forward_raw(t: &MetricModuleTriple) -> Result<GjspObject, Error> {
    Ok(forward_unchecked(t, &BracketTable::new(t)?))
}

fn forward_unchecked(t: &MetricModuleTriple, table: &BracketTable) -> GjspObject {
    let m = t.module();
    let dual = m.left_dual();
    let n = m.dim();
    let space = m.space().clone();
    let d_minus: Vec<Matrix> = (0..n * n).into_par_iter().map(|k| dual.operator(table.get(k / n, k % n))).collect();
    let d_plus: Vec<Matrix> = (0..n * n)
        .into_par_iter()
        .map(|k| {
            // D⁺_{v_x, f_y} = ρ([v_x, f_y]) with [v, f] = -η_{f,v} [f, v]
            let (x, y) = (k / n, k % n);
            let neg = !eta2(space.parity(y), space.parity(x));
            m.operator(table.get(y, x)).scale(&Scalar::one().signed(neg))
        })
        .collect();
    let pair = Gjsp::new(space.clone(), space.clone(), d_minus, d_plus).expect("consistent dimensions");
    GjspObject::new(pair, Matrix::identity(n)).expect("square pairing")
}

/// `instr(L, M)`, the span of all `[f, v]`, with the checks that it is an ideal,
/// that its orthogonal complement is the kernel of the representation, and in the
/// faithful case that it is all of `L` and maps bijectively onto `instr(V)`.
#[derive(Clone, Debug)]
pub struct InstrLm {
    pub basis: Vec<Vec<Scalar>>,
    pub kernel: Vec<Vec<Scalar>>,
    pub perp: Vec<Vec<Scalar>>,
    pub report: Report,
}

pub fn instr_lm(t: &MetricModuleTriple) -> Result<InstrLm, Error> {
    instr_lm_with(t, CheckConfig::default())
}

pub fn instr_lm_with(t: &MetricModuleTriple, cfg: CheckConfig) -> Result<InstrLm, Error> {
    require_triple(t, cfg)?;
    let table = BracketTable::new(t)?;
    let lie = t.algebra();
    let (l, n) = (lie.dim(), t.module().dim());
    let span = Span::from_generators(l, &table.brackets);
    let basis = span.basis().to_vec();
    let dual = t.module().left_dual();
    let mut report = Report::new("instr(L, M)");

    // [x, [f, v]] = [x·f, v] + η_{x,f} [f, x·v]
    report.push(sweep("ideal", &["x", "f", "v"], &[l, n, n], cfg, |idx| {
        let (a, i, j) = (idx[0], idx[1], idx[2]);
        let lhs = lie.ad(a).mul_vec(table.get(i, j));
        let mut rhs = table.bracket(&dual.rho(a).column(i), &crate::linalg::unit(n, j));
        let right = table.bracket(&crate::linalg::unit(n, i), &t.module().rho(a).column(j));
        let sign = Scalar::one().signed(eta2(lie.parity(a), t.module().space().parity(i)));
        axpy(&mut rhs, &sign, &right);
        compare(lhs, rhs)
    }));

    let kernel = t.module().representation_kernel();
    let perp = orthogonal_complement(t.form().gram(), &basis)?;
    let kspan = Span::from_generators(l, &kernel);
    let pspan = Span::from_generators(l, &perp);
    let same = kspan.dim() == pspan.dim() && perp.iter().all(|v| kspan.contains(v));
    report.push(PropertyOutcome::flag(
        "kernel_is_perp",
        same,
        format!("kernel has dimension {}, complement of instr has dimension {}", kspan.dim(), pspan.dim()),
    ));

    if kernel.is_empty() {
        let full = basis.len() == l;
        let o = forward_unchecked(t, &table);
        let instr = o.pair.instr()?;
        let phi = representation_map(t, &instr);
        let bij = phi.as_ref().is_some_and(|m| m.is_invertible());
        report.push(PropertyOutcome::flag(
            "faithful_bijective",
            full && bij,
            format!("instr(L, M) has dimension {} of {l}; map onto instr(V) bijective: {bij}", basis.len()),
        ));
    }
    Ok(InstrLm { basis, kernel, perp, report })
}

/// The restriction of `T` to `instr(L, M)`, a faithful triple when `L` is the
/// orthogonal sum of `instr(L, M)` and the kernel of the representation.
pub fn faithful_part(t: &MetricModuleTriple) -> Result<MetricModuleTriple, Error> {
    let il = instr_lm(t)?;
    if !il.report.passed() {
        return Err(Error::precondition("instr(L, M) is an ideal with complement the kernel", il.report));
    }
    let (alg, _) = t.algebra().subalgebra(&il.basis)?;
    let g = t.form().gram();
    let gram = Matrix::from_fn(il.basis.len(), il.basis.len(), |a, c| dot(&il.basis[a], &g.mul_vec(&il.basis[c])));
    let alg = Arc::new(alg);
    let rho = il.basis.iter().map(|x| t.module().operator(x)).collect();
    let module = crate::SuperModule::new(Arc::clone(&alg), t.module().space().clone(), rho)?;
    MetricModuleTriple::new(module, InvariantForm::new(alg, gram)?)
}

/// Columns: coordinates of `(ρ*(x_a), ρ(x_a))` in the basis of `instr(V)`.
fn representation_map(t: &MetricModuleTriple, instr: &Instr) -> Option<Matrix> {
    let dual = t.module().left_dual();
    let cols: Option<Vec<Vec<Scalar>>> =
        (0..t.algebra().dim()).map(|a| instr.coords(dual.rho(a), t.module().rho(a))).collect();
    Some(Matrix::from_columns(instr.dim(), &cols?))
}

/// Output of the backward construction.
#[derive(Clone, Debug)]
pub struct Backward {
    pub triple: MetricModuleTriple,
    pub instr: Instr,
    /// The well-definedness audit of the induced form.
    pub audit: Report,
}

/// `L = instr(V)` acting on `M = V⁺`, with `b(ν(f,v), ν(g,w)) = ⟨D_{f,v} g, w⟩`.
pub fn faulkner_backward(o: &GjspObject) -> Result<Backward, Error> {
    faulkner_backward_with(o, CheckConfig::default())
}

pub fn faulkner_backward_with(o: &GjspObject, cfg: CheckConfig) -> Result<Backward, Error> {
    require("pair with pairing", o.check_membership(cfg))?;
    let instr = o.pair.instr()?;
    let (nm, np) = (o.pair.dim(Sign::Minus), o.pair.dim(Sign::Plus));
    let p = &o.pairing.matrix;
    let value = |i: usize, j: usize, k: usize, l: usize| {
        // ⟨D⁻_{f_i, v_j} f_k, v_l⟩
        let d = o.pair.d(Sign::Minus, i, j);
        let mut s = Scalar::zero();
        for a in 0..nm {
            if !d[(a, k)].is_zero() {
                s = &s + &(&d[(a, k)] * &p[(a, l)]);
            }
        }
        s
    };
    let gens = instr.generators().to_vec();
    let dim = gens.len();
    let gram = Matrix::from_fn(dim, dim, |a, c| {
        let ((i, j), (k, l)) = (gens[a], gens[c]);
        value(i, j, k, l)
    });

    // every generator pair must give the same value through the basis expressions
    let exprs: Vec<&[Scalar]> = (0..nm * np).map(|g| instr.expression(g / np, g % np)).collect();
    let be: Vec<Vec<Scalar>> = exprs.par_iter().map(|e| gram.mul_vec(e)).collect();
    let mut audit = Report::new("well-definedness of the induced form");
    audit.push(sweep("well_defined", &["f", "v", "g", "w"], &[nm, np, nm, np], cfg, |idx| {
        let (i, j, k, l) = (idx[0], idx[1], idx[2], idx[3]);
        let through = dot(exprs[i * np + j], &be[k * np + l]);
        compare(vec![through], vec![value(i, j, k, l)])
    }));
    if !audit.passed() {
        return Err(Error::WellDefinedness(Box::new(audit)));
    }
    let form = InvariantForm::new(Arc::clone(instr.algebra()), gram)?;
    let triple = MetricModuleTriple::new(instr.plus_module(), form)?;
    Ok(Backward { triple, instr, audit })
}

/// Checks that `(φ₀, φ⁺)` is a homomorphism of triples `T → T2` over a ring:
/// an even algebra map preserving brackets and forms with `φ⁺(x·v) = φ₀(x)·φ⁺(v)`.
pub fn check_triple_hom<R: Ring>(
    phi0: &Matrix<R>,
    phi_plus: &Matrix<R>,
    t: &MetricModuleTriple,
    t2: &MetricModuleTriple,
    cfg: CheckConfig,
) -> Report<R> {
    let mut r = Report::new("triple homomorphism");
    let (l, l2, n, n2) = (t.algebra().dim(), t2.algebra().dim(), t.module().dim(), t2.module().dim());
    if phi0.rows() != l2 || phi0.cols() != l || phi_plus.rows() != n2 || phi_plus.cols() != n {
        r.push(PropertyOutcome::fail("shape", "map matrices do not match the dimensions"));
        return r;
    }
    let even = is_homogeneous_of(phi0, t.algebra().space(), t2.algebra().space(), crate::Parity::Even)
        && is_homogeneous_of(phi_plus, t.module().space(), t2.module().space(), crate::Parity::Even);
    r.push(PropertyOutcome::flag("even", even, "maps do not preserve parity"));

    let ad2: Vec<Matrix<R>> = (0..l2).map(|a| Matrix::lift(t2.algebra().ad(a))).collect();
    let ad1: Vec<Matrix<R>> = (0..l).map(|a| Matrix::lift(t.algebra().ad(a))).collect();
    let image = |i: usize| phi0.column(i);
    let op2 = |x: &[R], ops: &[Matrix<R>], d: usize| {
        let mut out = Matrix::<R>::zeros(d, d);
        for (c, m) in x.iter().zip(ops) {
            out.add_scaled(c, m);
        }
        out
    };
    r.push(sweep("bracket", &["x", "y"], &[l, l], cfg, |idx| {
        let (i, j) = (idx[0], idx[1]);
        let lhs = phi0.mul_vec(&ad1[i].column(j));
        let rhs = op2(&image(i), &ad2, l2).mul_vec(&image(j));
        compare(lhs, rhs)
    }));
    let g1: Matrix<R> = Matrix::lift(t.form().gram());
    let g2: Matrix<R> = Matrix::lift(t2.form().gram());
    let pulled = phi0.transpose().mul(&g2).mul(phi0);
    r.push(sweep("form", &["x", "y"], &[l, l], cfg, |idx| {
        compare(vec![pulled[(idx[0], idx[1])].clone()], vec![g1[(idx[0], idx[1])].clone()])
    }));
    let rho1: Vec<Matrix<R>> = t.module().operators().iter().map(Matrix::lift).collect();
    let rho2: Vec<Matrix<R>> = t2.module().operators().iter().map(Matrix::lift).collect();
    r.push(sweep_nested("equivariance", &["x"], &[l], "v", cfg, |idx| {
        let i = idx[0];
        let lhs = phi_plus.mul(&rho1[i]);
        let rhs = op2(&image(i), &rho2, n2).mul(phi_plus);
        (0..n)
            .filter_map(|u| {
                let (a, b) = (lhs.column(u), rhs.column(u));
                (a != b).then_some((u, a, b))
            })
            .collect()
    }));
    let invertible = phi0.is_square() && phi_plus.is_square() && phi0.inverse_in_ring().is_some() && phi_plus.inverse_in_ring().is_some();
    r.push(PropertyOutcome::flag("invertible", invertible, "maps are not both invertible"));
    r
}

/// Two associated objects with the identifications that make them match.
#[derive(Clone, Debug)]
pub struct Correspondence {
    pub triple: MetricModuleTriple,
    pub object: GjspObject,
    /// `instr(V)` of the pair, with its generator expressions.
    pub instr: Instr,
    /// Even isomorphism `L → instr(V)` (columns are coordinates in the instr basis).
    pub algebra_map: Matrix,
    /// Identification of `V⁻` with the dual module used by the round trip
    /// (identity when starting from the triple, `Pᵀ` when starting from the pair).
    pub minus_map: Matrix,
    /// The round-trip comparison.
    pub report: Report,
}

/// Where a round trip starts.
#[derive(Clone, Copy, Debug)]
pub enum Start<'a> {
    Triple(&'a MetricModuleTriple),
    Object(&'a GjspObject),
}

/// Applies both constructions and compares the result with the start object
/// under explicit identification maps.
pub fn roundtrip_check(start: Start<'_>) -> Result<Correspondence, Error> {
    roundtrip_check_with(start, CheckConfig::default())
}

pub fn roundtrip_check_with(start: Start<'_>, cfg: CheckConfig) -> Result<Correspondence, Error> {
    match start {
        Start::Triple(t) => Correspondence::from_triple(t, cfg),
        Start::Object(o) => Correspondence::from_object(o, cfg),
    }
}

impl Correspondence {
    pub fn from_triple(t: &MetricModuleTriple, cfg: CheckConfig) -> Result<Correspondence, Error> {
        let mut pre = t.check(cfg);
        pre.push(PropertyOutcome::flag("module.faithful", t.is_faithful(), "the representation has a nonzero kernel"));
        require("faithful metric module triple", pre)?;
        let object = forward_unchecked(t, &BracketTable::new(t)?);
        let back = faulkner_backward_with(&object, cfg)?;
        let algebra_map = representation_map(t, &back.instr)
            .ok_or_else(|| Error::Invalid("the representation does not land in instr(V)".into()))?;
        let mut report = Report::new("backward after forward");
        report.absorb("", check_triple_hom(&algebra_map, &Matrix::identity(t.module().dim()), t, &back.triple, cfg));
        let n = t.module().dim();
        Ok(Correspondence { triple: t.clone(), object, instr: back.instr, algebra_map, minus_map: Matrix::identity(n), report })
    }

    pub fn from_object(o: &GjspObject, cfg: CheckConfig) -> Result<Correspondence, Error> {
        let back = faulkner_backward_with(o, cfg)?;
        let again = forward_unchecked(&back.triple, &BracketTable::new(&back.triple)?);
        // f ↦ ⟨f, ·⟩ identifies V⁻ with the dual of V⁺
        let minus_map = o.pairing.matrix.transpose();
        let plus = Matrix::identity(o.pair.dim(Sign::Plus));
        let mut report = Report::new("forward after backward");
        report.absorb(
            "",
            check_pair_hom(&minus_map, &plus, &o.pair, &again.pair, Some((&o.pairing, &again.pairing)), cfg),
        );
        let dim = back.instr.dim();
        Ok(Correspondence {
            triple: back.triple,
            object: o.clone(),
            instr: back.instr,
            algebra_map: Matrix::identity(dim),
            minus_map,
            report,
        })
    }

    fn pairing(&self) -> &PairingForm {
        &self.object.pairing
    }

    /// Transfers `(φ⁻, φ⁺) ∈ Aut(V, ⟨·,·⟩)` to `(φ₀, φ⁺) ∈ Aut(L, M, b)` with
    /// `φ₀(ν(f,v)) = ν(φ⁻f, φ⁺v)`.
    pub fn pair_to_module<R: Ring>(&self, phi_minus: &Matrix<R>, phi_plus: &Matrix<R>) -> Result<TransferredAut<R>, Error> {
        let cfg = CheckConfig::default();
        let pre = check_pair_hom(phi_minus, phi_plus, &self.object.pair, &self.object.pair, Some((self.pairing(), self.pairing())), cfg);
        if !pre.passed() {
            return Err(Error::NotAutomorphism(Box::new(pre.map(|x| x.to_string()))));
        }
        let dim = self.instr.dim();
        let nm = self.object.pair.dim(Sign::Minus);
        let np = self.object.pair.dim(Sign::Plus);
        let exprs: Vec<Vec<R>> =
            (0..nm * np).map(|g| self.instr.expression(g / np, g % np).iter().map(|c| R::from(c.clone())).collect()).collect();
        let cols: Vec<Vec<R>> = self
            .instr
            .generators()
            .par_iter()
            .map(|&(i, j)| {
                let mut col = vec![R::zero(); dim];
                for k in 0..nm {
                    let a = &phi_minus[(k, i)];
                    if a.is_zero() {
                        continue;
                    }
                    for l in 0..np {
                        let b = &phi_plus[(l, j)];
                        if b.is_zero() {
                            continue;
                        }
                        crate::linalg::axpy(&mut col, &(a.clone() * b.clone()), &exprs[k * np + l]);
                    }
                }
                col
            })
            .collect();
        let on_instr = Matrix::from_columns(dim, &cols);
        let map: Matrix<R> = Matrix::lift(&self.algebra_map);
        let inv: Matrix<R> = Matrix::lift(&self.algebra_map.inverse().ok_or(Error::Singular)?);
        let phi0 = inv.mul(&on_instr).mul(&map);
        let report = check_triple_hom(&phi0, phi_plus, &self.triple, &self.triple, cfg);
        Ok(TransferredAut { phi0, phi_minus: phi_minus.clone(), phi_plus: phi_plus.clone(), report })
    }

    /// Transfers `(φ₀, φ⁺) ∈ Aut(L, M, b)` to `(φ⁻, φ⁺)` with `φ⁻` the inverse
    /// dual of `φ⁺` with respect to the pairing.
    pub fn module_to_pair<R: Ring>(&self, phi0: &Matrix<R>, phi_plus: &Matrix<R>) -> Result<TransferredAut<R>, Error> {
        let cfg = CheckConfig::default();
        let pre = check_triple_hom(phi0, phi_plus, &self.triple, &self.triple, cfg);
        if !pre.passed() {
            return Err(Error::NotAutomorphism(Box::new(pre.map(|x| x.to_string()))));
        }
        // ⟨φ⁻ f, φ⁺ v⟩ = ⟨f, v⟩ means φ⁻ᵀ P φ⁺ = P
        let p = &self.pairing().matrix;
        let p_inv_t: Matrix<R> = Matrix::lift(&p.inverse().ok_or(Error::DegenerateForm)?.transpose());
        let phi_inv = phi_plus.inverse_in_ring().ok_or(Error::Singular)?;
        let phi_minus = p_inv_t.mul(&phi_inv.transpose()).mul(&Matrix::lift(&p.transpose()));
        let report = check_pair_hom(&phi_minus, phi_plus, &self.object.pair, &self.object.pair, Some((self.pairing(), self.pairing())), cfg);
        Ok(TransferredAut { phi0: phi0.clone(), phi_minus, phi_plus: phi_plus.clone(), report })
    }
}

/// An automorphism seen on both sides of the correspondence.
#[derive(Clone, Debug)]
pub struct TransferredAut<R: Ring = Scalar> {
    pub phi0: Matrix<R>,
    pub phi_minus: Matrix<R>,
    pub phi_plus: Matrix<R>,
    /// Membership of the transferred map.
    pub report: Report<R>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| Scalar::from(x)).collect()
    }

    #[test]
    fn gl11_brackets_by_hand() {
        let t = catalog::gl_supertrace(1, 1);
        // [m⁰, m_0] = -E11 and [m⁰, m_1] = -E21
        assert_eq!(bracket_of(&t, &v(&[1, 0]), &v(&[1, 0])).unwrap(), v(&[-1, 0, 0, 0]));
        assert_eq!(bracket_of(&t, &v(&[1, 0]), &v(&[0, 1])).unwrap(), v(&[0, 0, -1, 0]));
        assert_eq!(bracket_of(&t, &v(&[0, 0]), &v(&[0, 1])).unwrap(), v(&[0, 0, 0, 0]));
        let o = faulkner_forward(&t).unwrap();
        // {m⁰, m_0, m⁰} = m⁰
        assert_eq!(o.pair.d(Sign::Minus, 0, 0).column(0), v(&[1, 0]));
    }

    #[test]
    fn gl1_gives_lambda_one() {
        let t = catalog::gl_supertrace(1, 0);
        let o = faulkner_forward(&t).unwrap();
        assert_eq!(o.pair.d(Sign::Plus, 0, 0)[(0, 0)], Scalar::one());
        assert_eq!(o.pair.d(Sign::Minus, 0, 0)[(0, 0)], Scalar::one());
    }

    #[test]
    fn degenerate_form_is_rejected() {
        let lie = Arc::new(crate::LieSuperAlgebra::abelian(crate::SuperSpace::standard(1, 0)));
        let m = crate::SuperModule::trivial(Arc::clone(&lie), crate::SuperSpace::standard(1, 0));
        let b = InvariantForm::new(lie, Matrix::zeros(1, 1)).unwrap();
        let t = MetricModuleTriple::new(m, b).unwrap();
        let err = faulkner_forward(&t).unwrap_err();
        let rep = err.report().unwrap();
        assert_eq!(rep.failed_names(), vec!["form.nondegenerate"]);
    }

    #[test]
    fn type_i_11_backward() {
        let o = catalog::jordan_pair_type_i(1, 1).unwrap();
        let b = faulkner_backward(&o).unwrap();
        assert_eq!(b.triple.algebra().dim(), 1);
        assert_eq!(b.triple.form().gram()[(0, 0)], Scalar::from(2));
    }
}
