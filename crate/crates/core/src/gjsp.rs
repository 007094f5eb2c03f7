//! Generalized Jordan superpairs and pairs with a bilinear pairing.

use std::sync::Arc;

use rayon::prelude::*;

use crate::linalg::{axpy, unit, Matrix, Span};
use crate::liesuper::{supercommutator, LieSuperAlgebra, SuperModule};
use crate::report::{compare, CheckConfig, PropertyOutcome, Report, Witness};
use crate::scalar::{Ring, Scalar};
use crate::superlinear::{eta2, eta3, is_homogeneous_of, map_parity, PairingForm, Parity, SuperSpace};
use crate::Error;

/// Which side of the pair: `V⁻` or `V⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Minus, Sign::Plus];

    pub fn opposite(self) -> Sign {
        match self {
            Sign::Minus => Sign::Plus,
            Sign::Plus => Sign::Minus,
        }
    }

    fn slot(self) -> usize {
        self as usize
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Minus => '-',
            Sign::Plus => '+',
        }
    }
}

/// A trilinear pair `(V⁻, V⁺)` with products `{x,y,z}^σ`, stored as the
/// operators `D^σ_{x,y}` on `V^σ` for basis `x ∈ V^σ`, `y ∈ V^{-σ}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Gjsp {
    spaces: [SuperSpace; 2],
    d: [Vec<Matrix>; 2],
}

/// One triple-product entry: `{e_x, e_y, e_z}` has coefficient `value` on `e_out`.
pub type ProductEntry = (usize, usize, usize, usize, Scalar);

impl Gjsp {
    /// `d_minus[x·dim V⁺ + y] = D⁻_{x,y}` and `d_plus[x·dim V⁻ + y] = D⁺_{x,y}`.
    pub fn new(minus: SuperSpace, plus: SuperSpace, d_minus: Vec<Matrix>, d_plus: Vec<Matrix>) -> Result<Gjsp, Error> {
        let (nm, np) = (minus.dim(), plus.dim());
        let ok = |ops: &[Matrix], n: usize| ops.len() == nm * np && ops.iter().all(|m| m.rows() == n && m.cols() == n);
        if !ok(&d_minus, nm) || !ok(&d_plus, np) {
            return Err(Error::Dimension(format!("triple products do not match dimensions ({nm}, {np})")));
        }
        Ok(Gjsp { spaces: [minus, plus], d: [d_minus, d_plus] })
    }

    pub fn zero(minus: SuperSpace, plus: SuperSpace) -> Gjsp {
        let (nm, np) = (minus.dim(), plus.dim());
        let d_minus = vec![Matrix::zeros(nm, nm); nm * np];
        let d_plus = vec![Matrix::zeros(np, np); nm * np];
        Gjsp { spaces: [minus, plus], d: [d_minus, d_plus] }
    }

    /// From sparse entries for each side. Repeated entries add up.
    pub fn from_entries(
        minus: SuperSpace,
        plus: SuperSpace,
        minus_entries: &[ProductEntry],
        plus_entries: &[ProductEntry],
    ) -> Result<Gjsp, Error> {
        let mut g = Gjsp::zero(minus, plus);
        for (sigma, entries) in [(Sign::Minus, minus_entries), (Sign::Plus, plus_entries)] {
            let (n, m) = (g.dim(sigma), g.dim(sigma.opposite()));
            for (x, y, z, out, c) in entries {
                if *x >= n || *z >= n || *out >= n || *y >= m {
                    return Err(Error::Dimension(format!(
                        "product entry [{x}, {y}, {z}, {out}] out of range for side {}",
                        sigma.symbol()
                    )));
                }
                let d = &mut g.d[sigma.slot()][x * m + y];
                d[(*out, *z)] = &d[(*out, *z)] + c;
            }
        }
        Ok(g)
    }

    pub fn space(&self, sigma: Sign) -> &SuperSpace {
        &self.spaces[sigma.slot()]
    }

    pub fn dim(&self, sigma: Sign) -> usize {
        self.spaces[sigma.slot()].dim()
    }

    /// `D^σ_{x,y}` for basis indices.
    pub fn d(&self, sigma: Sign, x: usize, y: usize) -> &Matrix {
        &self.d[sigma.slot()][x * self.dim(sigma.opposite()) + y]
    }

    pub fn operators(&self, sigma: Sign) -> &[Matrix] {
        &self.d[sigma.slot()]
    }

    /// `D^σ_{x,y}` for arbitrary vectors.
    pub fn d_op(&self, sigma: Sign, x: &[Scalar], y: &[Scalar]) -> Matrix {
        let n = self.dim(sigma);
        let mut out = Matrix::zeros(n, n);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                out.add_scaled(&(xa * yb), self.d(sigma, a, b));
            }
        }
        out
    }

    /// `{x, y, z}^σ`.
    pub fn product(&self, sigma: Sign, x: &[Scalar], y: &[Scalar], z: &[Scalar]) -> Vec<Scalar> {
        self.d_op(sigma, x, y).mul_vec(z)
    }

    /// Nonzero entries `(x, y, z, out, c)` of side `σ` in lexicographic order.
    pub fn entries(&self, sigma: Sign) -> Vec<ProductEntry> {
        let (n, m) = (self.dim(sigma), self.dim(sigma.opposite()));
        let mut out = Vec::new();
        for x in 0..n {
            for y in 0..m {
                let d = self.d(sigma, x, y);
                for z in 0..n {
                    for o in 0..n {
                        if !d[(o, z)].is_zero() {
                            out.push((x, y, z, o, d[(o, z)].clone()));
                        }
                    }
                }
            }
        }
        out
    }

    fn par(&self, sigma: Sign, i: usize) -> Parity {
        self.spaces[sigma.slot()].parity(i)
    }

    /// Both sides of a named identity at basis indices.
    pub fn evaluate(&self, property: &str, idx: &[usize]) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let (name, sigma) = split_sigma(property)?;
        let tau = sigma.opposite();
        match (name, idx) {
            ("parity", &[x, y, z]) => {
                let v = self.d(sigma, x, y).column(z);
                let want = self.par(sigma, x) + self.par(tau, y) + self.par(sigma, z);
                let off = v
                    .iter()
                    .enumerate()
                    .map(|(k, c)| if self.par(sigma, k) == want { Scalar::zero() } else { c.clone() })
                    .collect();
                Some((off, vec![Scalar::zero(); self.dim(sigma)]))
            }
            ("fundamental", &[x, y, z, w, u]) => {
                let (l, r) = self.fundamental_matrices(sigma, x, y, z, w);
                Some((l.column(u), r.column(u)))
            }
            ("jordan", &[x, y, z]) => {
                let lhs = self.d(sigma, x, y).column(z);
                let neg = eta3(self.par(sigma, x), self.par(tau, y), self.par(sigma, z));
                let rhs = self.d(sigma, z, y).column(x).into_iter().map(|c| c.signed(neg)).collect();
                Some((lhs, rhs))
            }
            _ => None,
        }
    }

    /// Left and right sides of the fundamental identity as operators on `V^σ`.
    fn fundamental_matrices(&self, sigma: Sign, x: usize, y: usize, z: usize, w: usize) -> (Matrix, Matrix) {
        let tau = sigma.opposite();
        let (px, py, pz, pw) = (self.par(sigma, x), self.par(tau, y), self.par(sigma, z), self.par(tau, w));
        let dxy = self.d(sigma, x, y);
        let dzw = self.d(sigma, z, w);
        let lhs = supercommutator(dxy, px + py, dzw, pz + pw);
        let n = self.dim(sigma);
        let mut rhs = Matrix::zeros(n, n);
        for a in 0..n {
            rhs.add_scaled(&dxy[(a, z)], self.d(sigma, a, w));
        }
        let dyx = self.d(tau, y, x);
        let neg = Scalar::one().signed(!eta3(px, py, pz));
        for b in 0..self.dim(tau) {
            let c = &dyx[(b, w)];
            if !c.is_zero() {
                rhs.add_scaled(&(c * &neg), self.d(sigma, z, b));
            }
        }
        (lhs, rhs)
    }

    /// Parity additivity of both products and the fundamental identity for `σ = ±`.
    pub fn check_fundamental_identity(&self, cfg: CheckConfig) -> Report {
        let mut r = Report::new("generalized Jordan superpair");
        for sigma in Sign::BOTH {
            let (n, m) = (self.dim(sigma), self.dim(sigma.opposite()));
            let name = format!("parity{}", sigma.symbol());
            r.push(crate::report::sweep(&name, &["x", "y", "z"], &[n, m, n], cfg, |idx| {
                let (a, b) = self.evaluate(&name, idx).unwrap();
                compare(a, b)
            }));
        }
        for sigma in Sign::BOTH {
            let (n, m) = (self.dim(sigma), self.dim(sigma.opposite()));
            let name = format!("fundamental{}", sigma.symbol());
            r.push(sweep_nested(&name, &["x", "y", "z", "w"], &[n, m, n, m], "u", cfg, |idx| {
                let (l, rr) = self.fundamental_matrices(sigma, idx[0], idx[1], idx[2], idx[3]);
                column_mismatches(&l, &rr)
            }));
        }
        r
    }

    /// `{D x, y, z} + η_{D,x} {x, D y, z} + η_{D,D_{x,y}} {x, y, D z} = D {x, y, z}` on both sides.
    pub fn check_derivation(&self, d_minus: &Matrix, d_plus: &Matrix, a: Parity, cfg: CheckConfig) -> Report {
        let mut r = Report::new("superderivation");
        let ops = [d_minus, d_plus];
        let homogeneous = Sign::BOTH.iter().all(|&s| {
            let sp = self.space(s);
            is_homogeneous_of(ops[s.slot()], sp, sp, a)
        });
        r.push(PropertyOutcome::flag("degree", homogeneous, format!("operators are not homogeneous of degree {a}")));
        for sigma in Sign::BOTH {
            let tau = sigma.opposite();
            let (n, m) = (self.dim(sigma), self.dim(tau));
            let (ds, dt) = (ops[sigma.slot()], ops[tau.slot()]);
            let name = format!("derivation{}", sigma.symbol());
            r.push(crate::report::sweep(&name, &["x", "y", "z"], &[n, m, n], cfg, |idx| {
                let (x, y, z) = (idx[0], idx[1], idx[2]);
                let (px, py) = (self.par(sigma, x), self.par(tau, y));
                let lhs = ds.mul_vec(&self.d(sigma, x, y).column(z));
                let ez = unit(n, z);
                let mut rhs = self.d_op(sigma, &ds.column(x), &unit(m, y)).mul_vec(&ez);
                let t2 = self.d_op(sigma, &unit(n, x), &dt.column(y)).mul_vec(&ez);
                axpy(&mut rhs, &Scalar::one().signed(eta2(a, px)), &t2);
                let t3 = self.d(sigma, x, y).mul_vec(&ds.column(z));
                axpy(&mut rhs, &Scalar::one().signed(eta2(a, px + py)), &t3);
                compare(lhs, rhs)
            }));
        }
        r
    }

    /// Symmetry `{x,y,z} = η_{x,y,z} {z,y,x}` and the parity type.
    pub fn classify_flavor(&self) -> Flavor {
        let cfg = CheckConfig::default();
        let mut symmetry = PropertyOutcome::pass("jordan");
        for sigma in Sign::BOTH {
            let (n, m) = (self.dim(sigma), self.dim(sigma.opposite()));
            let name = format!("jordan{}", sigma.symbol());
            let out = crate::report::sweep(&name, &["x", "y", "z"], &[n, m, n], cfg, |idx| {
                let (a, b) = self.evaluate(&name, idx).unwrap();
                compare(a, b)
            });
            if !out.passed && symmetry.passed {
                symmetry = out;
            }
        }
        let even = self.spaces.iter().all(|s| s.sdim().1 == 0);
        let odd = self.spaces.iter().all(|s| s.sdim().0 == 0);
        let j = symmetry.passed;
        Flavor { jordan_superpair: j, jordan_pair: j && even, antipair: j && odd, even, odd, symmetry }
    }

    /// `ν(x, y) = (D⁻_{x,y}, -η_{x,y} D⁺_{y,x})`, extended bilinearly.
    pub fn nu(&self, x: &[Scalar], y: &[Scalar]) -> NuOperator {
        let (nm, np) = (self.dim(Sign::Minus), self.dim(Sign::Plus));
        let mut minus = Matrix::zeros(nm, nm);
        let mut plus = Matrix::zeros(np, np);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let c = xi * yj;
                let (m, p) = self.nu_basis(i, j);
                minus.add_scaled(&c, &m);
                plus.add_scaled(&c, &p);
            }
        }
        let pm = map_parity(&minus, self.space(Sign::Minus), self.space(Sign::Minus));
        let pp = map_parity(&plus, self.space(Sign::Plus), self.space(Sign::Plus));
        let parity = match (minus.is_zero(), plus.is_zero()) {
            (true, true) => Some(Parity::Even),
            (false, true) => pm,
            (true, false) => pp,
            (false, false) => pm.filter(|&a| pp == Some(a)),
        };
        NuOperator { minus, plus, parity }
    }

    /// `ν(f_i, v_j)` for basis indices.
    pub fn nu_basis(&self, i: usize, j: usize) -> (Matrix, Matrix) {
        let minus = self.d(Sign::Minus, i, j).clone();
        let neg = !eta2(self.par(Sign::Minus, i), self.par(Sign::Plus, j));
        let plus = self.d(Sign::Plus, j, i).scale(&Scalar::one().signed(neg));
        (minus, plus)
    }

    /// The inner structure superalgebra.
    pub fn instr(&self) -> Result<Instr, Error> {
        Instr::new(self)
    }

    /// Transport of structure along an even isomorphism `φ : new → self`, given
    /// by the matrices of `φ⁻` and `φ⁺` (columns are images of the new basis).
    pub fn transport(&self, phi_minus: &Matrix, phi_plus: &Matrix, minus: SuperSpace, plus: SuperSpace) -> Result<Gjsp, Error> {
        let inv = [
            phi_minus.inverse().ok_or(Error::Singular)?,
            phi_plus.inverse().ok_or(Error::Singular)?,
        ];
        let phi = [phi_minus, phi_plus];
        let mut out = Gjsp::zero(minus, plus);
        for sigma in Sign::BOTH {
            let tau = sigma.opposite();
            let (n, m) = (self.dim(sigma), self.dim(tau));
            let ops: Vec<Matrix> = (0..n * m)
                .into_par_iter()
                .map(|k| {
                    let (x, y) = (k / m, k % m);
                    let d = self.d_op(sigma, &phi[sigma.slot()].column(x), &phi[tau.slot()].column(y));
                    inv[sigma.slot()].mul(&d).mul(phi[sigma.slot()])
                })
                .collect();
            out.d[sigma.slot()] = ops;
        }
        Ok(out)
    }

    /// Componentwise direct sum.
    pub fn direct_sum(&self, other: &Gjsp) -> Gjsp {
        let minus = self.space(Sign::Minus).direct_sum(other.space(Sign::Minus));
        let plus = self.space(Sign::Plus).direct_sum(other.space(Sign::Plus));
        let mut out = Gjsp::zero(minus, plus);
        for sigma in Sign::BOTH {
            let tau = sigma.opposite();
            let (n1, m1) = (self.dim(sigma), self.dim(tau));
            let (n2, m2) = (other.dim(sigma), other.dim(tau));
            let m = m1 + m2;
            for x in 0..n1 {
                for y in 0..m1 {
                    out.d[sigma.slot()][x * m + y] = self.d(sigma, x, y).block_diag(&Matrix::zeros(n2, n2));
                }
            }
            for x in 0..n2 {
                for y in 0..m2 {
                    out.d[sigma.slot()][(n1 + x) * m + m1 + y] = Matrix::zeros(n1, n1).block_diag(other.d(sigma, x, y));
                }
            }
        }
        out
    }
}

fn split_sigma(property: &str) -> Option<(&str, Sign)> {
    let (name, last) = property.split_at(property.len().checked_sub(1)?);
    let sigma = match last {
        "-" => Sign::Minus,
        "+" => Sign::Plus,
        _ => return None,
    };
    Some((name, sigma))
}

/// Columns where two operators differ, as `(column, lhs, rhs)`.
fn column_mismatches<R: Ring>(l: &Matrix<R>, r: &Matrix<R>) -> Vec<(usize, Vec<R>, Vec<R>)> {
    (0..l.cols())
        .filter_map(|u| {
            let (a, b) = (l.column(u), r.column(u));
            (a != b).then_some((u, a, b))
        })
        .collect()
}

/// Like [`crate::report::sweep`], for tests that compare a whole operator at
/// once; the innermost index (`inner`) comes from the mismatching column.
pub fn sweep_nested<S, F>(
    name: &str,
    labels: &[&str],
    dims: &[usize],
    inner: &str,
    cfg: CheckConfig,
    test: F,
) -> PropertyOutcome<S>
where
    S: Send,
    F: Fn(&[usize]) -> Vec<(usize, Vec<S>, Vec<S>)> + Sync,
{
    let total: usize = dims.iter().product();
    let decode = |mut k: usize| {
        let mut idx = vec![0; dims.len()];
        for (slot, &d) in idx.iter_mut().zip(dims).rev() {
            *slot = k % d;
            k /= d;
        }
        idx
    };
    let witnesses = |k: usize| {
        let idx = decode(k);
        test(&idx)
            .into_iter()
            .map(|(u, lhs, rhs)| {
                let mut indices: Vec<(String, usize)> = labels.iter().map(|l| l.to_string()).zip(idx.iter().copied()).collect();
                indices.push((inner.to_string(), u));
                Witness { indices, lhs, rhs }
            })
            .collect::<Vec<_>>()
    };
    let found: Vec<Witness<S>> = if cfg.all_witnesses {
        (0..total).into_par_iter().flat_map_iter(witnesses).collect()
    } else {
        (0..total).into_par_iter().find_map_first(|k| witnesses(k).into_iter().next()).into_iter().collect()
    };
    PropertyOutcome { name: name.to_string(), passed: found.is_empty(), witnesses: found, note: None }
}

/// Result of [`Gjsp::classify_flavor`].
#[derive(Clone, Debug)]
pub struct Flavor {
    pub jordan_superpair: bool,
    pub jordan_pair: bool,
    pub antipair: bool,
    /// All basis vectors even.
    pub even: bool,
    /// All basis vectors odd.
    pub odd: bool,
    /// The symmetry identity, with a witness when it fails.
    pub symmetry: PropertyOutcome,
}

/// An operator pair acting on `V⁻ × V⁺`.
#[derive(Clone, Debug, PartialEq)]
pub struct NuOperator {
    pub minus: Matrix,
    pub plus: Matrix,
    /// `None` for an inhomogeneous combination.
    pub parity: Option<Parity>,
}

impl NuOperator {
    pub fn is_zero(&self) -> bool {
        self.minus.is_zero() && self.plus.is_zero()
    }

    /// Flattened `(minus, plus)` entries.
    pub fn flatten(&self) -> Vec<Scalar> {
        flatten(&self.minus, &self.plus)
    }
}

fn flatten(minus: &Matrix, plus: &Matrix) -> Vec<Scalar> {
    let mut v = minus.as_slice().to_vec();
    v.extend_from_slice(plus.as_slice());
    v
}

/// `instr(V)`: a basis of the span of all `ν(f_i, v_j)`, its bracket, and the
/// expression of every generator in that basis.
#[derive(Clone, Debug)]
pub struct Instr {
    algebra: Arc<LieSuperAlgebra>,
    minus_ops: Vec<Matrix>,
    plus_ops: Vec<Matrix>,
    generators: Vec<(usize, usize)>,
    expressions: Vec<Vec<Scalar>>,
    span: Span,
    minus: SuperSpace,
    plus: SuperSpace,
}

impl Instr {
    fn new(pair: &Gjsp) -> Result<Instr, Error> {
        let (nm, np) = (pair.dim(Sign::Minus), pair.dim(Sign::Plus));
        let gens: Vec<Vec<Scalar>> = (0..nm * np)
            .into_par_iter()
            .map(|k| {
                let (m, p) = pair.nu_basis(k / np, k % np);
                flatten(&m, &p)
            })
            .collect();
        let span = Span::from_generators(nm * nm + np * np, &gens);
        let generators: Vec<(usize, usize)> = span.chosen().iter().map(|&k| (k / np, k % np)).collect();
        let expressions: Vec<Vec<Scalar>> = gens.par_iter().map(|g| span.coords(g).expect("generator in its own span")).collect();
        let split = |v: &[Scalar]| {
            (
                Matrix::from_rows(nm, v[..nm * nm].chunks(nm.max(1)).map(|c| c.to_vec()).collect()).unwrap_or_else(|_| Matrix::zeros(nm, nm)),
                Matrix::from_rows(np, v[nm * nm..].chunks(np.max(1)).map(|c| c.to_vec()).collect()).unwrap_or_else(|_| Matrix::zeros(np, np)),
            )
        };
        let (minus_ops, plus_ops): (Vec<Matrix>, Vec<Matrix>) = span.basis().iter().map(|b| split(b)).unzip();
        let parities: Vec<Parity> = generators
            .iter()
            .map(|&(i, j)| pair.space(Sign::Minus).parity(i) + pair.space(Sign::Plus).parity(j))
            .collect();
        let space = SuperSpace::new(parities);
        let dim = space.dim();
        let cols: Vec<Result<Vec<Vec<Scalar>>, Error>> = (0..dim)
            .into_par_iter()
            .map(|a| {
                (0..dim)
                    .map(|c| {
                        let (pa, pc) = (space.parity(a), space.parity(c));
                        let m = supercommutator(&minus_ops[a], pa, &minus_ops[c], pc);
                        let p = supercommutator(&plus_ops[a], pa, &plus_ops[c], pc);
                        span.coords(&flatten(&m, &p)).ok_or(Error::NotClosed(a, c))
                    })
                    .collect()
            })
            .collect();
        let mut ad = Vec::with_capacity(dim);
        for col in cols {
            ad.push(Matrix::from_columns(dim, &col?));
        }
        let algebra = Arc::new(LieSuperAlgebra::new(space, ad)?);
        Ok(Instr {
            algebra,
            minus_ops,
            plus_ops,
            generators,
            expressions,
            span,
            minus: pair.space(Sign::Minus).clone(),
            plus: pair.space(Sign::Plus).clone(),
        })
    }

    pub fn algebra(&self) -> &Arc<LieSuperAlgebra> {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    /// The generator pair `(i, j)` behind each basis element `ν(f_i, v_j)`.
    pub fn generators(&self) -> &[(usize, usize)] {
        &self.generators
    }

    /// Coordinates of `ν(f_i, v_j)`.
    pub fn expression(&self, i: usize, j: usize) -> &[Scalar] {
        &self.expressions[i * self.plus.dim() + j]
    }

    pub fn minus_operator(&self, a: usize) -> &Matrix {
        &self.minus_ops[a]
    }

    pub fn plus_operator(&self, a: usize) -> &Matrix {
        &self.plus_ops[a]
    }

    /// Coordinates of an operator pair, if it lies in `instr(V)`.
    pub fn coords(&self, minus: &Matrix, plus: &Matrix) -> Option<Vec<Scalar>> {
        self.span.coords(&flatten(minus, plus))
    }

    /// `V⁺` as an `instr(V)`-supermodule.
    pub fn plus_module(&self) -> SuperModule {
        SuperModule::new(Arc::clone(&self.algebra), self.plus.clone(), self.plus_ops.clone()).expect("consistent dimensions")
    }

    /// `V⁻` as an `instr(V)`-supermodule.
    pub fn minus_module(&self) -> SuperModule {
        SuperModule::new(Arc::clone(&self.algebra), self.minus.clone(), self.minus_ops.clone()).expect("consistent dimensions")
    }
}

/// A pair together with a bilinear pairing `⟨·,·⟩ : V⁻ × V⁺ → F`.
#[derive(Clone, Debug, PartialEq)]
pub struct GjspObject {
    pub pair: Gjsp,
    pub pairing: PairingForm,
}

/// Pairing properties a member object must satisfy.
pub const MEMBERSHIP_PAIRING: [&str; 5] =
    ["homogeneous", "nondegenerate", "left_superinvariant", "left_supersymmetric_1", "left_supersymmetric_2"];

impl GjspObject {
    pub fn new(pair: Gjsp, pairing: Matrix) -> Result<GjspObject, Error> {
        let pairing = PairingForm::new(pair.space(Sign::Minus).clone(), pair.space(Sign::Plus).clone(), pairing)?;
        Ok(GjspObject { pair, pairing })
    }

    fn pair_value_d(&self, sigma: Sign, x: usize, y: usize, z: usize, other: usize) -> Scalar {
        // ⟨D⁻_{x,y} e_z, e_other⟩ or ⟨e_other, D⁺_{x,y} e_z⟩
        let d = self.pair.d(sigma, x, y);
        let p = &self.pairing.matrix;
        let mut s = Scalar::zero();
        for a in 0..d.rows() {
            let c = &d[(a, z)];
            if c.is_zero() {
                continue;
            }
            let q = match sigma {
                Sign::Minus => &p[(a, other)],
                Sign::Plus => &p[(other, a)],
            };
            s = &s + &(c * q);
        }
        s
    }

    /// Both sides of a pairing identity at `(x, y, z, w)`, `x, z ∈ V⁻`, `y, w ∈ V⁺`.
    pub fn evaluate(&self, property: &str, idx: &[usize]) -> Option<(Vec<Scalar>, Vec<Scalar>)> {
        let pm = |i: usize| self.pair.space(Sign::Minus).parity(i);
        let pp = |i: usize| self.pair.space(Sign::Plus).parity(i);
        if property == "homogeneous" {
            let &[i, j] = idx else { return None };
            let v = &self.pairing.matrix[(i, j)];
            let off = if pm(i) == pp(j) { Scalar::zero() } else { v.clone() };
            return Some((vec![off], vec![Scalar::zero()]));
        }
        let &[x, y, z, w] = idx else { return None };
        let (px, py, pz, pw) = (pm(x), pp(y), pm(z), pp(w));
        let (lhs, rhs) = match property {
            "left_superinvariant" | "right_superinvariant" => {
                let neg = if property.starts_with("left") { eta3(px, py, pz) } else { eta3(px, py, pw) };
                (self.pair_value_d(Sign::Minus, x, y, z, w), self.pair_value_d(Sign::Plus, y, x, w, z).signed(neg))
            }
            "left_supersymmetric_1" | "right_supersymmetric_1" => {
                let neg = if property.starts_with("left") { eta2(px + py, pz + pw) } else { eta2(px + pw, pz + py) };
                (self.pair_value_d(Sign::Minus, x, y, z, w), self.pair_value_d(Sign::Minus, z, w, x, y).signed(neg))
            }
            "left_supersymmetric_2" | "right_supersymmetric_2" => {
                let neg = if property.starts_with("left") { eta2(px + py, pz + pw) } else { eta2(px + pw, pz + py) };
                (self.pair_value_d(Sign::Plus, y, z, w, x), self.pair_value_d(Sign::Plus, w, x, y, z).signed(neg))
            }
            _ => return None,
        };
        Some((vec![lhs], vec![rhs]))
    }

    /// Homogeneity, nondegeneracy, and the left/right superinvariance and
    /// supersymmetry identities.
    pub fn check_pairing_properties(&self, cfg: CheckConfig) -> Report {
        let (nm, np) = (self.pair.dim(Sign::Minus), self.pair.dim(Sign::Plus));
        let mut r = Report::new("pairing");
        r.push(crate::report::sweep("homogeneous", &["f", "v"], &[nm, np], cfg, |idx| {
            let (a, b) = self.evaluate("homogeneous", idx).unwrap();
            compare(a, b)
        }));
        let square = nm == np;
        let rank = self.pairing.matrix.rank();
        r.push(PropertyOutcome::flag(
            "nondegenerate",
            square && rank == nm,
            format!("pairing matrix is {nm}x{np} of rank {rank}"),
        ));
        for name in [
            "left_superinvariant",
            "right_superinvariant",
            "left_supersymmetric_1",
            "left_supersymmetric_2",
            "right_supersymmetric_1",
            "right_supersymmetric_2",
        ] {
            r.push(crate::report::sweep(name, &["x", "y", "z", "w"], &[nm, np, nm, np], cfg, |idx| {
                let (a, b) = self.evaluate(name, idx).unwrap();
                compare(a, b)
            }));
        }
        r
    }

    /// Fundamental identity plus the pairing properties required of a member.
    pub fn check_membership(&self, cfg: CheckConfig) -> Report {
        let mut r = Report::new("pair with pairing");
        r.absorb("pair", self.pair.check_fundamental_identity(cfg));
        let pairing = self.check_pairing_properties(cfg);
        for p in pairing.properties {
            if MEMBERSHIP_PAIRING.contains(&p.name.as_str()) {
                r.push(PropertyOutcome { name: format!("pairing.{}", p.name), ..p });
            }
        }
        r
    }

    /// Transport along an even isomorphism `φ : new → self` (see [`Gjsp::transport`]);
    /// the new pairing is `⟨φ⁻ f, φ⁺ v⟩`.
    pub fn transport(&self, phi_minus: &Matrix, phi_plus: &Matrix, minus: SuperSpace, plus: SuperSpace) -> Result<GjspObject, Error> {
        let pair = self.pair.transport(phi_minus, phi_plus, minus, plus)?;
        let p = phi_minus.transpose().mul(&self.pairing.matrix).mul(phi_plus);
        GjspObject::new(pair, p)
    }

    /// Same pair with the pairing multiplied by `c`.
    pub fn scale_pairing(&self, c: &Scalar) -> GjspObject {
        GjspObject { pair: self.pair.clone(), pairing: PairingForm { matrix: self.pairing.matrix.scale(c), ..self.pairing.clone() } }
    }
}

/// Checks that the even maps `(φ⁻, φ⁺)` form a homomorphism `V → W`, optionally
/// preserving pairings, over any ring containing the base field.
pub fn check_pair_hom<R: Ring>(
    phi_minus: &Matrix<R>,
    phi_plus: &Matrix<R>,
    v: &Gjsp,
    w: &Gjsp,
    pairings: Option<(&PairingForm, &PairingForm)>,
    cfg: CheckConfig,
) -> Report<R> {
    let mut r = Report::new("pair homomorphism");
    let phi = [phi_minus, phi_plus];
    let shapes_ok = Sign::BOTH
        .iter()
        .all(|&s| phi[s.slot()].rows() == w.dim(s) && phi[s.slot()].cols() == v.dim(s));
    if !shapes_ok {
        r.push(PropertyOutcome::fail("shape", "map matrices do not match the dimensions of the pairs"));
        return r;
    }
    let even = Sign::BOTH.iter().all(|&s| is_homogeneous_of(phi[s.slot()], v.space(s), w.space(s), Parity::Even));
    r.push(PropertyOutcome::flag("even", even, "maps do not preserve parity"));
    let lifted: [Vec<Matrix<R>>; 2] = [
        w.operators(Sign::Minus).iter().map(Matrix::lift).collect(),
        w.operators(Sign::Plus).iter().map(Matrix::lift).collect(),
    ];
    for sigma in Sign::BOTH {
        let tau = sigma.opposite();
        let (n, m) = (v.dim(sigma), v.dim(tau));
        let (wn, wm) = (w.dim(sigma), w.dim(tau));
        let (ps, pt) = (phi[sigma.slot()], phi[tau.slot()]);
        let name = format!("homomorphism{}", sigma.symbol());
        r.push(sweep_nested(&name, &["x", "y"], &[n, m], "z", cfg, |idx| {
            let (x, y) = (idx[0], idx[1]);
            let lhs = ps.mul(&Matrix::lift(v.d(sigma, x, y)));
            let mut dw = Matrix::<R>::zeros(wn, wn);
            for a in 0..wn {
                let pa = &ps[(a, x)];
                if pa.is_zero() {
                    continue;
                }
                for b in 0..wm {
                    let pb = &pt[(b, y)];
                    if pb.is_zero() {
                        continue;
                    }
                    dw.add_scaled(&(pa.clone() * pb.clone()), &lifted[sigma.slot()][a * wm + b]);
                }
            }
            let rhs = dw.mul(ps);
            column_mismatches(&lhs, &rhs)
        }));
    }
    if let Some((pv, pw)) = pairings {
        let ok_shape = pv.matrix.rows() == v.dim(Sign::Minus)
            && pv.matrix.cols() == v.dim(Sign::Plus)
            && pw.matrix.rows() == w.dim(Sign::Minus)
            && pw.matrix.cols() == w.dim(Sign::Plus);
        if !ok_shape {
            r.push(PropertyOutcome::fail("pairing", "pairing matrices do not match the pairs"));
        } else {
            let lhs = phi_minus.transpose().mul(&Matrix::lift(&pw.matrix)).mul(phi_plus);
            let rhs: Matrix<R> = Matrix::lift(&pv.matrix);
            let (n, m) = (v.dim(Sign::Minus), v.dim(Sign::Plus));
            r.push(crate::report::sweep("pairing", &["f", "v"], &[n, m], cfg, |idx| {
                let l = lhs[(idx[0], idx[1])].clone();
                let rr = rhs[(idx[0], idx[1])].clone();
                compare(vec![l], vec![rr])
            }));
        }
    }
    let invertible = Sign::BOTH
        .iter()
        .all(|&s| phi[s.slot()].is_square() && phi[s.slot()].inverse_in_ring().is_some());
    r.push(PropertyOutcome::flag("invertible", invertible, "maps are not both invertible"));
    r
}

/// Evaluates `ν` as a derivation check helper: all `ν(f_i, v_j)` are superderivations.
pub fn nu_derivation_report(pair: &Gjsp, cfg: CheckConfig) -> Report {
    let (nm, np) = (pair.dim(Sign::Minus), pair.dim(Sign::Plus));
    let mut r = Report::new("inner superderivations");
    for i in 0..nm {
        for j in 0..np {
            let (m, p) = pair.nu_basis(i, j);
            let a = pair.space(Sign::Minus).parity(i) + pair.space(Sign::Plus).parity(j);
            let sub = pair.check_derivation(&m, &p, a, cfg);
            r.absorb(&format!("nu({i},{j})"), sub);
        }
    }
    r
}

