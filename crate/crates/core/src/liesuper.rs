//! Lie superalgebras, supermodules, invariant forms and metric module triples.

use std::sync::{Arc, OnceLock};

use crate::linalg::{axpy, graded_kernel, Matrix, Span};
use crate::report::{compare, sweep, CheckConfig, PropertyOutcome, Report};
use crate::scalar::Scalar;
use crate::superlinear::{eta2, is_homogeneous_of, left_dual_matrix, right_dual_matrix, Parity, SuperSpace};
use crate::Error;

/// A Lie superalgebra given by structure constants on a homogeneous basis.
///
/// Column `j` of `ad[i]` is `[xᵢ, xⱼ]`.
#[derive(Clone, Debug, PartialEq)]
pub struct LieSuperAlgebra {
    space: SuperSpace,
    ad: Vec<Matrix>,
}

fn check_index(i: usize, n: usize, what: &str) -> Result<(), Error> {
    if i >= n {
        return Err(Error::Dimension(format!("{what} index {i} out of range 0..{n}")));
    }
    Ok(())
}

impl LieSuperAlgebra {
    pub fn new(space: SuperSpace, ad: Vec<Matrix>) -> Result<Self, Error> {
        let n = space.dim();
        if ad.len() != n || ad.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension(format!("structure constants do not match dimension {n}")));
        }
        Ok(LieSuperAlgebra { space, ad })
    }

    /// From entries `(i, j, k, c)` meaning `[xᵢ, xⱼ]` has coefficient `c` on `x_k`.
    /// Repeated entries add up.
    pub fn from_entries(space: SuperSpace, entries: &[(usize, usize, usize, Scalar)]) -> Result<Self, Error> {
        let n = space.dim();
        let mut ad = vec![Matrix::zeros(n, n); n];
        for (i, j, k, c) in entries {
            for &x in [i, j, k] {
                check_index(x, n, "basis")?;
            }
            ad[*i][(*k, *j)] = &ad[*i][(*k, *j)] + c;
        }
        Ok(LieSuperAlgebra { space, ad })
    }

    pub fn abelian(space: SuperSpace) -> Self {
        let n = space.dim();
        LieSuperAlgebra { space, ad: vec![Matrix::zeros(n, n); n] }
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.space.parity(i)
    }

    /// `ad xᵢ` as a matrix.
    pub fn ad(&self, i: usize) -> &Matrix {
        &self.ad[i]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.ad[i].column(j)
    }

    pub fn bracket(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let w = self.ad[i].mul_vec(v);
            axpy(&mut out, a, &w);
        }
        out
    }

    /// Nonzero structure constants `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let c = &self.ad[i][(k, j)];
                    if !c.is_zero() {
                        out.push((i, j, k, c.clone()));
                    }
                }
            }
        }
        out
    }

    /// `self ⊕ other`, basis of `self` first.
    pub fn direct_sum(&self, other: &LieSuperAlgebra) -> LieSuperAlgebra {
        let space = self.space.direct_sum(&other.space);
        let (n1, n2) = (self.dim(), other.dim());
        let mut ad = Vec::with_capacity(n1 + n2);
        for m in &self.ad {
            ad.push(m.block_diag(&Matrix::zeros(n2, n2)));
        }
        for m in &other.ad {
            ad.push(Matrix::zeros(n1, n1).block_diag(m));
        }
        LieSuperAlgebra { space, ad }
    }

    /// The subalgebra spanned by the homogeneous, independent vectors `basis`,
    /// written in that basis, with the span used for coordinates.
    pub fn subalgebra(&self, basis: &[Vec<Scalar>]) -> Result<(LieSuperAlgebra, Span), Error> {
        let parities: Option<Vec<Parity>> = basis.iter().map(|v| self.space.vector_parity(v)).collect();
        let space = SuperSpace::new(parities.ok_or_else(|| Error::Invalid("basis vector is not homogeneous".into()))?);
        let span = Span::from_generators(self.dim(), basis);
        if span.dim() != basis.len() {
            return Err(Error::Invalid("basis is linearly dependent".into()));
        }
        let k = basis.len();
        let mut ad = Vec::with_capacity(k);
        for x in basis {
            let cols: Option<Vec<Vec<Scalar>>> = basis.iter().map(|y| span.coords(&self.bracket(x, y))).collect();
            ad.push(Matrix::from_columns(k, &cols.ok_or_else(|| Error::Invalid("not closed under the bracket".into()))?));
        }
        Ok((LieSuperAlgebra::new(space, ad)?, span))
    }

    /// Two sides of a named identity at basis indices, for re-evaluating witnesses.
    pub fn evaluate(&self, property: &str, idx: &[usize]) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let p = |i: usize| self.parity(i);
        match (property, idx) {
            ("parity", &[i, j]) => {
                let v = self.bracket_basis(i, j);
                let want = p(i) + p(j);
                let offending: Vec<Scalar> =
                    v.iter().enumerate().map(|(k, c)| if p(k) == want { Scalar::zero() } else { c.clone() }).collect();
                Some((offending, vec![Scalar::zero(); self.dim()]))
            }
            ("anticommutativity", &[i, j]) => {
                let lhs = self.bracket_basis(i, j);
                let rhs = self.bracket_basis(j, i).into_iter().map(|c| -c.signed(eta2(p(i), p(j)))).collect();
                Some((lhs, rhs))
            }
            ("jacobi", &[i, j, k]) => {
                let jk = self.bracket_basis(j, k);
                let lhs = self.ad[i].mul_vec(&jk);
                let ij = self.bracket_basis(i, j);
                let mut rhs = self.bracket(&ij, &crate::linalg::unit(self.dim(), k));
                let ik = self.bracket_basis(i, k);
                let t = self.ad[j].mul_vec(&ik);
                let s = if eta2(p(i), p(j)) { -Scalar::one() } else { Scalar::one() };
                axpy(&mut rhs, &s, &t);
                Some((lhs, rhs))
            }
            _ => None,
        }
    }

    /// Parity of the bracket, super anticommutativity and the super Jacobi identity.
    pub fn check_lie_axioms(&self, cfg: CheckConfig) -> Report {
        let n = self.dim();
        let mut r = Report::new("Lie superalgebra axioms");
        for (name, labels) in [("parity", &["i", "j"][..]), ("anticommutativity", &["i", "j"]), ("jacobi", &["i", "j", "k"])] {
            let dims = vec![n; labels.len()];
            r.push(sweep(name, labels, &dims, cfg, |idx| {
                let (l, rr) = self.evaluate(name, idx).unwrap();
                compare(l, rr)
            }));
        }
        r
    }
}

/// Homogeneous operators acting on one space, e.g. a restricted representation.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorFamily {
    pub parities: Vec<Parity>,
    pub ops: Vec<Matrix>,
}

/// A supermodule over a Lie superalgebra.
#[derive(Clone, Debug)]
pub struct SuperModule {
    algebra: Arc<LieSuperAlgebra>,
    space: SuperSpace,
    rho: Vec<Matrix>,
}

impl PartialEq for SuperModule {
    fn eq(&self, other: &SuperModule) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.space == other.space && self.rho == other.rho
    }
}

pub(crate) fn same_algebra(a: &Arc<LieSuperAlgebra>, b: &Arc<LieSuperAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

impl SuperModule {
    pub fn new(algebra: Arc<LieSuperAlgebra>, space: SuperSpace, rho: Vec<Matrix>) -> Result<Self, Error> {
        let n = space.dim();
        if rho.len() != algebra.dim() || rho.iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::Dimension(format!(
                "action needs {} operators of size {n}x{n}",
                algebra.dim()
            )));
        }
        Ok(SuperModule { algebra, space, rho })
    }

    /// From entries `(i, j, k, c)` meaning `xᵢ·v_j` has coefficient `c` on `v_k`.
    pub fn from_entries(
        algebra: Arc<LieSuperAlgebra>,
        space: SuperSpace,
        entries: &[(usize, usize, usize, Scalar)],
    ) -> Result<Self, Error> {
        let n = space.dim();
        let mut rho = vec![Matrix::zeros(n, n); algebra.dim()];
        for (i, j, k, c) in entries {
            check_index(*i, algebra.dim(), "algebra")?;
            check_index(*j, n, "module")?;
            check_index(*k, n, "module")?;
            rho[*i][(*k, *j)] = &rho[*i][(*k, *j)] + c;
        }
        Ok(SuperModule { algebra, space, rho })
    }

    pub fn trivial(algebra: Arc<LieSuperAlgebra>, space: SuperSpace) -> Self {
        let n = space.dim();
        let rho = vec![Matrix::zeros(n, n); algebra.dim()];
        SuperModule { algebra, space, rho }
    }

    /// The adjoint module.
    pub fn adjoint(algebra: Arc<LieSuperAlgebra>) -> Self {
        let rho = (0..algebra.dim()).map(|i| algebra.ad(i).clone()).collect();
        let space = algebra.space().clone();
        SuperModule { algebra, space, rho }
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.algebra
    }

    pub fn space(&self) -> &SuperSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn operators(&self) -> &[Matrix] {
        &self.rho
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn operator(&self, x: &[Scalar]) -> Matrix {
        Matrix::combination(self.dim(), self.dim(), x, &self.rho)
    }

    /// Nonzero action entries `(i, j, k, c)` in lexicographic order.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let mut out = Vec::new();
        for (i, m) in self.rho.iter().enumerate() {
            for j in 0..self.dim() {
                for k in 0..self.dim() {
                    if !m[(k, j)].is_zero() {
                        out.push((i, j, k, m[(k, j)].clone()));
                    }
                }
            }
        }
        out
    }

    /// The same operators viewed as a module over `algebra`, e.g. after a change of basis of `L`.
    pub fn with_algebra(&self, algebra: Arc<LieSuperAlgebra>, rho: Vec<Matrix>) -> Result<Self, Error> {
        SuperModule::new(algebra, self.space.clone(), rho)
    }

    pub fn evaluate(&self, property: &str, idx: &[usize]) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let lie = &self.algebra;
        match (property, idx) {
            ("parity", &[i, j]) => {
                let v = self.rho[i].column(j);
                let want = lie.parity(i) + self.space.parity(j);
                let off = v
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if self.space.parity(k) == want { Scalar::zero() } else { c.clone() })
                    .collect();
                Some((off, vec![Scalar::zero(); self.dim()]))
            }
            ("representation", &[i, j, k]) => {
                let br = lie.bracket_basis(i, j);
                let vk = crate::linalg::unit(self.dim(), k);
                let lhs = self.operator(&br).mul_vec(&vk);
                let a = self.rho[i].mul_vec(&self.rho[j].column(k));
                let b = self.rho[j].mul_vec(&self.rho[i].column(k));
                let mut rhs = a;
                let s = if eta2(lie.parity(i), lie.parity(j)) { Scalar::one() } else { -Scalar::one() };
                axpy(&mut rhs, &s, &b);
                Some((lhs, rhs))
            }
            _ => None,
        }
    }

    /// Parity compatibility and `ρ([x,y]) = ρ(x)ρ(y) - η_{x,y} ρ(y)ρ(x)`.
    pub fn check_module(&self, cfg: CheckConfig) -> Report {
        let (n, m) = (self.algebra.dim(), self.dim());
        let mut r = Report::new("supermodule axioms");
        r.push(sweep("parity", &["x", "v"], &[n, m], cfg, |idx| {
            let (a, b) = self.evaluate("parity", idx).unwrap();
            compare(a, b)
        }));
        r.push(sweep("representation", &["x", "y", "v"], &[n, n, m], cfg, |idx| {
            let (a, b) = self.evaluate("representation", idx).unwrap();
            compare(a, b)
        }));
        r
    }

    /// The dual module on the dual basis with `ρ*(x) = -ρ(x)^←`.
    pub fn left_dual(&self) -> SuperModule {
        let rho = self.rho.iter().map(|m| left_dual_matrix(m, &self.space).neg()).collect();
        SuperModule { algebra: Arc::clone(&self.algebra), space: self.space.clone(), rho }
    }

    /// The dual module with `ρ*(x) = -ρ(x)^→`.
    pub fn right_dual(&self) -> SuperModule {
        let rho = self.rho.iter().map(|m| right_dual_matrix(m, &self.space).neg()).collect();
        SuperModule { algebra: Arc::clone(&self.algebra), space: self.space.clone(), rho }
    }

    /// `M ⊗ N` with `x·(m⊗n) = xm⊗n + η_{x,m} m⊗xn`; basis `m_a⊗n_b` at `a·dim N + b`.
    pub fn tensor(&self, other: &SuperModule) -> Result<SuperModule, Error> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::DifferentAlgebras);
        }
        let space = self.space.tensor(&other.space);
        let id_n = Matrix::identity(other.dim());
        let rho = (0..self.algebra.dim())
            .map(|i| {
                let px = self.algebra.parity(i);
                let sign = Matrix::from_fn(self.dim(), self.dim(), |a, b| {
                    if a != b {
                        Scalar::zero()
                    } else {
                        Scalar::one().signed(eta2(px, self.space.parity(a)))
                    }
                });
                self.rho[i].kron(&id_n).add(&sign.kron(&other.rho[i]))
            })
            .collect();
        Ok(SuperModule { algebra: Arc::clone(&self.algebra), space, rho })
    }

    pub fn direct_sum(&self, other: &SuperModule) -> Result<SuperModule, Error> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::DifferentAlgebras);
        }
        let space = self.space.direct_sum(&other.space);
        let rho = self.rho.iter().zip(&other.rho).map(|(a, b)| a.block_diag(b)).collect();
        Ok(SuperModule { algebra: Arc::clone(&self.algebra), space, rho })
    }

    /// `Hom(M, N)` with basis `E_(t,s)` (sending `m_s` to `n_t`) at index `t·dim M + s`
    /// and action `x·f = ρ_N(x)∘f - η_{x,f} f∘ρ_M(x)`.
    pub fn hom(source: &SuperModule, target: &SuperModule) -> Result<SuperModule, Error> {
        if !same_algebra(&source.algebra, &target.algebra) {
            return Err(Error::DifferentAlgebras);
        }
        let (dm, dn) = (source.dim(), target.dim());
        let space = SuperSpace::new(
            (0..dn).flat_map(|t| (0..dm).map(move |s| (t, s))).map(|(t, s)| target.space.parity(t) + source.space.parity(s)).collect(),
        );
        let rho = (0..source.algebra.dim())
            .map(|i| {
                let px = source.algebra.parity(i);
                let mut m = Matrix::zeros(dn * dm, dn * dm);
                for t in 0..dn {
                    for s in 0..dm {
                        let col = t * dm + s;
                        for t2 in 0..dn {
                            let c = &target.rho[i][(t2, t)];
                            if !c.is_zero() {
                                m[(t2 * dm + s, col)] = &m[(t2 * dm + s, col)] + c;
                            }
                        }
                        let neg = !eta2(px, space.parity(col));
                        for u in 0..dm {
                            let c = &source.rho[i][(s, u)];
                            if !c.is_zero() {
                                m[(t * dm + u, col)] = &m[(t * dm + u, col)] + &c.clone().signed(neg);
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Ok(SuperModule { algebra: Arc::clone(&source.algebra), space, rho })
    }

    /// The graded subspace `{x ∈ L : ρ(x) = 0}`.
    pub fn representation_kernel(&self) -> Vec<Vec<Scalar>> {
        let n = self.algebra.dim();
        let d = self.dim();
        let m = Matrix::from_fn(d * d, n, |r, i| self.rho[i].as_slice()[r].clone());
        graded_kernel(&m, self.algebra.space().parities())
    }

    pub fn is_faithful(&self) -> bool {
        self.representation_kernel().is_empty()
    }

    /// The operators of homogeneous elements `xs` of the algebra.
    pub fn restrict(&self, xs: &[Vec<Scalar>]) -> Result<OperatorFamily, Error> {
        let mut parities = Vec::with_capacity(xs.len());
        for x in xs {
            if x.len() != self.algebra.dim() {
                return Err(Error::Dimension("element of the wrong length".into()));
            }
            let p = self
                .algebra
                .space()
                .vector_parity(x)
                .ok_or_else(|| Error::Invalid("inhomogeneous algebra element".into()))?;
            parities.push(p);
        }
        Ok(OperatorFamily { parities, ops: xs.iter().map(|x| self.operator(x)).collect() })
    }
}

/// An even bilinear form on a Lie superalgebra, given by its Gram matrix.
#[derive(Clone, Debug)]
pub struct InvariantForm {
    algebra: Arc<LieSuperAlgebra>,
    gram: Matrix,
}

impl InvariantForm {
    pub fn new(algebra: Arc<LieSuperAlgebra>, gram: Matrix) -> Result<Self, Error> {
        let n = algebra.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::Dimension(format!("Gram matrix must be {n}x{n}")));
        }
        Ok(InvariantForm { algebra, gram })
    }

    pub fn from_entries(algebra: Arc<LieSuperAlgebra>, entries: &[(usize, usize, Scalar)]) -> Result<Self, Error> {
        let n = algebra.dim();
        let mut gram = Matrix::zeros(n, n);
        for (i, j, c) in entries {
            check_index(*i, n, "basis")?;
            check_index(*j, n, "basis")?;
            gram[(*i, *j)] = &gram[(*i, *j)] + c;
        }
        Ok(InvariantForm { algebra, gram })
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.algebra
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn value(&self, u: &[Scalar], v: &[Scalar]) -> Scalar {
        crate::linalg::dot(u, &self.gram.mul_vec(v))
    }

    pub fn entries(&self) -> Vec<(usize, usize, Scalar)> {
        let n = self.gram.rows();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                if !self.gram[(i, j)].is_zero() {
                    out.push((i, j, self.gram[(i, j)].clone()));
                }
            }
        }
        out
    }

    pub fn evaluate(&self, property: &str, idx: &[usize]) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let lie = &self.algebra;
        let n = lie.dim();
        match (property, idx) {
            ("homogeneous", &[i, j]) => {
                let v = &self.gram[(i, j)];
                let off = if lie.parity(i) == lie.parity(j) { Scalar::zero() } else { v.clone() };
                Some((vec![off], vec![Scalar::zero()]))
            }
            ("invariant", &[i, j, k]) => {
                let ij = lie.bracket_basis(i, j);
                let jk = lie.bracket_basis(j, k);
                let lhs = self.value(&ij, &crate::linalg::unit(n, k));
                let rhs = self.value(&crate::linalg::unit(n, i), &jk);
                Some((vec![lhs], vec![rhs]))
            }
            ("supersymmetric", &[i, j]) => {
                let lhs = self.gram[(i, j)].clone();
                let rhs = self.gram[(j, i)].clone().signed(eta2(lie.parity(i), lie.parity(j)));
                Some((vec![lhs], vec![rhs]))
            }
            _ => None,
        }
    }

    /// Evenness, invariance, supersymmetry and nondegeneracy.
    pub fn check_form(&self, cfg: CheckConfig) -> Report {
        let n = self.algebra.dim();
        let mut r = Report::new("invariant form");
        for (name, labels) in [("homogeneous", &["i", "j"][..]), ("invariant", &["i", "j", "k"]), ("supersymmetric", &["i", "j"])] {
            let dims = vec![n; labels.len()];
            r.push(sweep(name, labels, &dims, cfg, |idx| {
                let (a, b) = self.evaluate(name, idx).unwrap();
                compare(a, b)
            }));
        }
        let rank = self.gram.rank();
        r.push(PropertyOutcome::flag("nondegenerate", rank == n, format!("Gram matrix has rank {rank} < {n}")));
        r
    }

    /// Orthogonal sum on `self.algebra ⊕ other.algebra`, attached to `algebra`.
    pub fn orthogonal_sum(&self, other: &InvariantForm, algebra: Arc<LieSuperAlgebra>) -> Result<Self, Error> {
        InvariantForm::new(algebra, self.gram.block_diag(&other.gram))
    }
}

/// A Lie superalgebra with a supermodule and an even nondegenerate
/// supersymmetric invariant form.
#[derive(Clone, Debug)]
pub struct MetricModuleTriple {
    module: SuperModule,
    form: InvariantForm,
    gram_inv: OnceLock<Option<Matrix>>,
}

impl MetricModuleTriple {
    pub fn new(module: SuperModule, form: InvariantForm) -> Result<Self, Error> {
        if !same_algebra(&module.algebra, &form.algebra) {
            return Err(Error::DifferentAlgebras);
        }
        Ok(MetricModuleTriple { module, form, gram_inv: OnceLock::new() })
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.module.algebra
    }

    pub fn module(&self) -> &SuperModule {
        &self.module
    }

    pub fn form(&self) -> &InvariantForm {
        &self.form
    }

    /// Inverse of the Gram matrix, computed once.
    pub fn gram_inverse(&self) -> Result<&Matrix, Error> {
        self.gram_inv.get_or_init(|| self.form.gram.inverse()).as_ref().ok_or(Error::DegenerateForm)
    }

    /// All axioms of the triple, grouped by component.
    pub fn check(&self, cfg: CheckConfig) -> Report {
        let mut r = Report::new("metric module triple");
        r.absorb("lie", self.algebra().check_lie_axioms(cfg));
        r.absorb("module", self.module.check_module(cfg));
        r.absorb("form", self.form.check_form(cfg));
        r
    }

    pub fn is_faithful(&self) -> bool {
        self.module.is_faithful()
    }

    /// Direct sum of triples: `L = ⊕ Lᵢ`, `b = ⊥ bᵢ`, `M = ⊕ Mᵢ` with each `Lᵢ`
    /// acting on its own summand.
    pub fn direct_sum(parts: &[MetricModuleTriple]) -> Result<MetricModuleTriple, Error> {
        let first = parts.first().ok_or(Error::Empty)?;
        let mut algebra = (**first.algebra()).clone();
        for p in &parts[1..] {
            algebra = algebra.direct_sum(p.algebra());
        }
        let algebra = Arc::new(algebra);
        let gram = parts[1..].iter().fold(first.form.gram.clone(), |g, p| g.block_diag(&p.form.gram));
        let mdim: usize = parts.iter().map(|p| p.module.dim()).sum();
        let space = parts[1..].iter().fold(first.module.space.clone(), |s, p| s.direct_sum(&p.module.space));
        let mut rho = Vec::with_capacity(algebra.dim());
        let mut offset = 0;
        for p in parts {
            for op in &p.module.rho {
                let mut m = Matrix::zeros(mdim, mdim);
                for a in 0..op.rows() {
                    for b in 0..op.cols() {
                        m[(offset + a, offset + b)] = op[(a, b)].clone();
                    }
                }
                rho.push(m);
            }
            offset += p.module.dim();
        }
        let module = SuperModule::new(Arc::clone(&algebra), space, rho)?;
        MetricModuleTriple::new(module, InvariantForm::new(algebra, gram)?)
    }
}

/// `Hom_S(W, V)`: maps `f : W → V` with `f∘ρ_W(s) = η_{f,s} ρ_V(s)∘f`,
/// carrying the action `t·f = ρ_V(t)∘f` of a second family `T`.
#[derive(Clone, Debug)]
pub struct FixedHom {
    pub space: SuperSpace,
    /// Basis maps `W → V` as `dim V × dim W` matrices.
    pub basis: Vec<Matrix>,
    /// Action of each `t` on the basis.
    pub t_action: Vec<Matrix>,
}

/// Supercommutator `AB - η_{a,b} BA` of homogeneous operators.
pub fn supercommutator(a: &Matrix, pa: Parity, b: &Matrix, pb: Parity) -> Matrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    if eta2(pa, pb) {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    }
}

/// Computes `Hom_S(W, V)` and the action of `T` on it.
///
/// `s_on_w`, `s_on_v` are the same homogeneous elements acting on `W` and `V`;
/// `t_on_v` must supercommute with `s_on_v`.
pub fn hom_fixed(
    w: &SuperSpace,
    s_on_w: &OperatorFamily,
    v: &SuperSpace,
    s_on_v: &OperatorFamily,
    t_on_v: &OperatorFamily,
) -> Result<FixedHom, Error> {
    if s_on_w.parities != s_on_v.parities || s_on_w.ops.len() != s_on_v.ops.len() {
        return Err(Error::Dimension("S acts through different elements on W and V".into()));
    }
    let (dv, dw) = (v.dim(), w.dim());
    let mut report = Report::new("supercommutation of S and T on V");
    let ns = s_on_v.ops.len();
    let nt = t_on_v.ops.len();
    report.push(sweep("supercommute", &["s", "t"], &[ns, nt], CheckConfig::default(), |idx| {
        let c = supercommutator(&s_on_v.ops[idx[0]], s_on_v.parities[idx[0]], &t_on_v.ops[idx[1]], t_on_v.parities[idx[1]]);
        compare(c.as_slice().to_vec(), vec![Scalar::zero(); dv * dv])
    }));
    if !report.passed() {
        return Err(Error::NonCommuting(Box::new(report)));
    }

    let mut basis = Vec::new();
    let mut parities = Vec::new();
    for a in [Parity::Even, Parity::Odd] {
        let unknowns: Vec<(usize, usize)> =
            (0..dv).flat_map(|i| (0..dw).map(move |j| (i, j))).filter(|&(i, j)| v.parity(i) + w.parity(j) == a).collect();
        if unknowns.is_empty() {
            continue;
        }
        // one row per (s, i, j): (ρV(s) f - (-1)^{a ε_s} f ρW(s))_{ij} = 0
        let mut rows = Vec::new();
        for k in 0..ns {
            let neg = eta2(a, s_on_v.parities[k]);
            let (sv, sw) = (&s_on_v.ops[k], &s_on_w.ops[k]);
            for i in 0..dv {
                for j in 0..dw {
                    let mut row = vec![Scalar::zero(); unknowns.len()];
                    let mut any = false;
                    for (u, &(p, q)) in unknowns.iter().enumerate() {
                        let mut c = Scalar::zero();
                        if q == j && !sv[(i, p)].is_zero() {
                            c = &c + &sv[(i, p)];
                        }
                        if p == i && !sw[(q, j)].is_zero() {
                            let t = sw[(q, j)].clone().signed(!neg);
                            c = &c + &t;
                        }
                        if !c.is_zero() {
                            any = true;
                        }
                        row[u] = c;
                    }
                    if any {
                        rows.push(row);
                    }
                }
            }
        }
        let sys = Matrix::from_rows(unknowns.len(), rows)?;
        for k in sys.kernel() {
            let mut f = Matrix::zeros(dv, dw);
            for (u, &(p, q)) in unknowns.iter().enumerate() {
                f[(p, q)] = k[u].clone();
            }
            basis.push(f);
            parities.push(a);
        }
    }

    let flat: Vec<Vec<Scalar>> = basis.iter().map(|f| f.as_slice().to_vec()).collect();
    let span = Span::from_generators(dv * dw, &flat);
    let mut t_action = Vec::with_capacity(nt);
    for t in &t_on_v.ops {
        let mut cols = Vec::with_capacity(basis.len());
        for f in &basis {
            let g = t.mul(f);
            let c = span
                .coords(g.as_slice())
                .ok_or_else(|| Error::Invalid("T does not preserve Hom_S(W, V)".into()))?;
            cols.push(c);
        }
        t_action.push(Matrix::from_columns(basis.len(), &cols));
    }
    debug_assert!(basis.iter().zip(&parities).all(|(f, &a)| is_homogeneous_of(f, w, v, a)));
    Ok(FixedHom { space: SuperSpace::new(parities), basis, t_action })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn gl11_axioms_hold() {
        let t = catalog::gl_supertrace(1, 1);
        assert!(t.check(CheckConfig::default()).passed());
        assert!(t.is_faithful());
    }

    #[test]
    fn broken_jacobi_is_caught() {
        let t = catalog::gl_supertrace(1, 1);
        let mut entries = t.algebra().entries();
        // [E12, E12] += E11
        entries.push((1, 1, 0, Scalar::one()));
        let bad = LieSuperAlgebra::from_entries(t.algebra().space().clone(), &entries).unwrap();
        let r = bad.check_lie_axioms(CheckConfig::default());
        assert_eq!(r.failed_names(), vec!["jacobi"]);
    }

    #[test]
    fn trace_form_is_not_supersymmetric() {
        let t = catalog::gl_supertrace(1, 1);
        let lie = Arc::clone(t.algebra());
        // ordinary trace tr(E_ij E_kl) = δ_jk δ_il
        let mut e = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                e.push((i * 2 + j, j * 2 + i, Scalar::one()));
            }
        }
        let f = InvariantForm::from_entries(lie, &e).unwrap();
        let r = f.check_form(CheckConfig::default());
        let p = r.property("supersymmetric").unwrap();
        assert!(!p.passed);
        let idx: Vec<usize> = p.witnesses[0].indices.iter().map(|x| x.1).collect();
        assert_eq!(idx, vec![1, 2]);
    }

    #[test]
    fn duals_and_tensors_are_modules() {
        let t = catalog::gl_supertrace(1, 2);
        let m = t.module();
        let cfg = CheckConfig::default();
        assert!(m.left_dual().check_module(cfg).passed());
        assert!(m.right_dual().check_module(cfg).passed());
        assert!(m.tensor(&m.left_dual()).unwrap().check_module(cfg).passed());
        assert!(SuperModule::hom(m, m).unwrap().check_module(cfg).passed());
        assert!(SuperModule::adjoint(Arc::clone(t.algebra())).check_module(cfg).passed());
    }

    #[test]
    fn broken_action_is_caught() {
        let t = catalog::gl_supertrace(1, 1);
        let m = t.module();
        let mut rho = m.operators().to_vec();
        rho[1] = rho[1].neg();
        let bad = m.with_algebra(Arc::clone(m.algebra()), rho).unwrap();
        assert!(!bad.check_module(CheckConfig::default()).passed());
    }

    #[test]
    fn modules_over_different_algebras_do_not_tensor() {
        let a = catalog::gl_supertrace(1, 1);
        let b = catalog::gl_supertrace(2, 1);
        assert!(matches!(a.module().tensor(b.module()), Err(Error::DifferentAlgebras)));
    }

    #[test]
    fn nonfaithful_kernel_is_the_center_line() {
        let t = catalog::nonfaithful_fixture();
        let k = t.module().representation_kernel();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0][4], Scalar::one());
    }

    #[test]
    fn hom_fixed_of_trivial_action() {
        // S = {0} acting on W = F^{1|0}, V = F^{1|1}: Hom_S(W, V) = Hom(W, V)
        let w = SuperSpace::standard(1, 0);
        let v = SuperSpace::standard(1, 1);
        let s_w = OperatorFamily { parities: vec![Parity::Even], ops: vec![Matrix::zeros(1, 1)] };
        let s_v = OperatorFamily { parities: vec![Parity::Even], ops: vec![Matrix::zeros(2, 2)] };
        let t_v = OperatorFamily { parities: vec![Parity::Odd], ops: vec![Matrix::from_fn(2, 2, |i, j| if i == 1 && j == 0 { Scalar::one() } else { Scalar::zero() })] };
        let h = hom_fixed(&w, &s_w, &v, &s_v, &t_v).unwrap();
        assert_eq!(h.space.sdim(), (1, 1));
        assert_eq!(h.t_action[0][(1, 0)], Scalar::one());
    }
}
