//! ℤ/2-graded vector spaces, homogeneous maps and pairings.

use std::fmt;
use std::ops::{Add, Mul};

use crate::linalg::Matrix;
use crate::scalar::{Ring, Scalar};
use crate::Error;

/// An element of ℤ/2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    pub fn from_bit(b: u8) -> Result<Parity, Error> {
        match b {
            0 => Ok(Parity::Even),
            1 => Ok(Parity::Odd),
            _ => Err(Error::Invalid(format!("parity must be 0 or 1, got {b}"))),
        }
    }

    pub fn bit(self) -> u8 {
        self as u8
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    /// `(-1)^self` as a scalar.
    pub fn sign<R: Ring>(self) -> R {
        if self.is_odd() {
            -R::one()
        } else {
            R::one()
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        if self == rhs {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl Mul for Parity {
    type Output = Parity;
    fn mul(self, rhs: Parity) -> Parity {
        if self.is_odd() && rhs.is_odd() {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// Koszul sign of a pair: `-1` exactly when both are odd.
pub fn eta2(x: Parity, y: Parity) -> bool {
    (x * y).is_odd()
}

/// Koszul sign of a triple, `(-1)^(xy + yz + zx)`.
pub fn eta3(x: Parity, y: Parity, z: Parity) -> bool {
    (x * y + y * z + z * x).is_odd()
}

/// Koszul sign of two or three parities as `±1`; other arities are an error.
pub fn eta(parities: &[Parity]) -> Result<i8, Error> {
    let neg = match parities {
        [x, y] => eta2(*x, *y),
        [x, y, z] => eta3(*x, *y, *z),
        _ => return Err(Error::EtaArity(parities.len())),
    };
    Ok(if neg { -1 } else { 1 })
}

/// A finite-dimensional super vector space given by the parities of its basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SuperSpace {
    parities: Vec<Parity>,
}

impl SuperSpace {
    pub fn new(parities: Vec<Parity>) -> SuperSpace {
        SuperSpace { parities }
    }

    /// `m` even basis vectors followed by `n` odd ones.
    pub fn standard(m: usize, n: usize) -> SuperSpace {
        let mut p = vec![Parity::Even; m];
        p.extend(std::iter::repeat_n(Parity::Odd, n));
        SuperSpace { parities: p }
    }

    pub fn dim(&self) -> usize {
        self.parities.len()
    }

    pub fn parity(&self, i: usize) -> Parity {
        self.parities[i]
    }

    pub fn parities(&self) -> &[Parity] {
        &self.parities
    }

    /// `(dim V_0, dim V_1)`.
    pub fn sdim(&self) -> (usize, usize) {
        let odd = self.parities.iter().filter(|p| p.is_odd()).count();
        (self.dim() - odd, odd)
    }

    /// Basis `vᵢ ⊗ wⱼ` at index `i * dim W + j`.
    pub fn tensor(&self, other: &SuperSpace) -> SuperSpace {
        let mut p = Vec::with_capacity(self.dim() * other.dim());
        for &a in &self.parities {
            for &b in &other.parities {
                p.push(a + b);
            }
        }
        SuperSpace { parities: p }
    }

    pub fn direct_sum(&self, other: &SuperSpace) -> SuperSpace {
        let mut p = self.parities.clone();
        p.extend_from_slice(&other.parities);
        SuperSpace { parities: p }
    }

    /// Parity shift by `a`.
    pub fn shift(&self, a: Parity) -> SuperSpace {
        SuperSpace { parities: self.parities.iter().map(|&p| p + a).collect() }
    }

    /// Parity of a vector if it is homogeneous; the zero vector counts as even.
    pub fn vector_parity(&self, v: &[Scalar]) -> Option<Parity> {
        let mut found = None;
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            match found {
                None => found = Some(self.parities[i]),
                Some(p) if p != self.parities[i] => return None,
                _ => {}
            }
        }
        Some(found.unwrap_or(Parity::Even))
    }
}

/// Parity of a linear map `target ← source` given as a matrix, if homogeneous.
/// The zero map is reported as even.
pub fn map_parity<R: Ring>(m: &Matrix<R>, source: &SuperSpace, target: &SuperSpace) -> Option<Parity> {
    let mut found = None;
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if m[(i, j)].is_zero() {
                continue;
            }
            let p = target.parity(i) + source.parity(j);
            match found {
                None => found = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
    }
    Some(found.unwrap_or(Parity::Even))
}

/// Whether every nonzero entry of `m` respects parity shift `a`.
pub fn is_homogeneous_of<R: Ring>(m: &Matrix<R>, source: &SuperSpace, target: &SuperSpace, a: Parity) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| m[(i, j)].is_zero() || target.parity(i) + source.parity(j) == a))
}

/// A linear map between super spaces.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperMap {
    pub source: SuperSpace,
    pub target: SuperSpace,
    pub matrix: Matrix,
}

impl SuperMap {
    pub fn new(source: SuperSpace, target: SuperSpace, matrix: Matrix) -> Result<SuperMap, Error> {
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} matrix for a map from dimension {} to {}",
                matrix.rows(),
                matrix.cols(),
                source.dim(),
                target.dim()
            )));
        }
        Ok(SuperMap { source, target, matrix })
    }

    pub fn identity(space: &SuperSpace) -> SuperMap {
        SuperMap { source: space.clone(), target: space.clone(), matrix: Matrix::identity(space.dim()) }
    }

    fn part(&self, want: Parity) -> SuperMap {
        let m = Matrix::from_fn(self.matrix.rows(), self.matrix.cols(), |i, j| {
            if self.target.parity(i) + self.source.parity(j) == want {
                self.matrix[(i, j)].clone()
            } else {
                Scalar::zero()
            }
        });
        SuperMap { source: self.source.clone(), target: self.target.clone(), matrix: m }
    }

    pub fn even_part(&self) -> SuperMap {
        self.part(Parity::Even)
    }

    pub fn odd_part(&self) -> SuperMap {
        self.part(Parity::Odd)
    }

    pub fn parity(&self) -> Option<Parity> {
        map_parity(&self.matrix, &self.source, &self.target)
    }

    pub fn compose(&self, first: &SuperMap) -> Result<SuperMap, Error> {
        if first.target != self.source {
            return Err(Error::Dimension("composition of maps with mismatched spaces".into()));
        }
        Ok(SuperMap { source: first.source.clone(), target: self.target.clone(), matrix: self.matrix.mul(&first.matrix) })
    }

    /// The left dual `N* → M*` with respect to the dual bases: it satisfies
    /// `⟨φ^←(f), v⟩ = η_{φ,f} ⟨f, φ(v)⟩`. Extended additively to mixed maps.
    pub fn left_dual(&self) -> SuperMap {
        self.dual_with(|p, row_parity, _| p * row_parity)
    }

    /// The right dual, `⟨v, φ^→(f)⟩ = η_{φ,v} ⟨φ(v), f⟩`.
    pub fn right_dual(&self) -> SuperMap {
        self.dual_with(|p, _, col_parity| p * col_parity)
    }

    fn dual_with(&self, sign: impl Fn(Parity, Parity, Parity) -> Parity) -> SuperMap {
        let m = &self.matrix;
        let dual = Matrix::from_fn(m.cols(), m.rows(), |j, i| {
            let x = &m[(i, j)];
            if x.is_zero() {
                return Scalar::zero();
            }
            let p = self.target.parity(i) + self.source.parity(j);
            x.clone().signed(sign(p, self.target.parity(i), self.source.parity(j)).is_odd())
        });
        SuperMap { source: self.target.clone(), target: self.source.clone(), matrix: dual }
    }
}

/// Left dual of a square operator on a space, as a matrix.
pub fn left_dual_matrix(m: &Matrix, space: &SuperSpace) -> Matrix {
    SuperMap { source: space.clone(), target: space.clone(), matrix: m.clone() }.left_dual().matrix
}

/// Right dual of a square operator on a space, as a matrix.
pub fn right_dual_matrix(m: &Matrix, space: &SuperSpace) -> Matrix {
    SuperMap { source: space.clone(), target: space.clone(), matrix: m.clone() }.right_dual().matrix
}

/// A bilinear pairing `⟨·,·⟩ : left × right → F`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairingForm {
    pub left: SuperSpace,
    pub right: SuperSpace,
    pub matrix: Matrix,
}

impl PairingForm {
    pub fn new(left: SuperSpace, right: SuperSpace, matrix: Matrix) -> Result<PairingForm, Error> {
        if matrix.rows() != left.dim() || matrix.cols() != right.dim() {
            return Err(Error::Dimension(format!(
                "{}x{} pairing matrix for spaces of dimension {} and {}",
                matrix.rows(),
                matrix.cols(),
                left.dim(),
                right.dim()
            )));
        }
        Ok(PairingForm { left, right, matrix })
    }

    /// The canonical pairing of a space with its dual basis.
    pub fn canonical(space: &SuperSpace) -> PairingForm {
        PairingForm { left: space.clone(), right: space.clone(), matrix: Matrix::identity(space.dim()) }
    }

    pub fn value(&self, f: &[Scalar], v: &[Scalar]) -> Scalar {
        let pv = self.matrix.mul_vec(v);
        crate::linalg::dot(f, &pv)
    }

    /// Whether nonzero entries only pair basis vectors of equal parity.
    pub fn is_even(&self) -> bool {
        (0..self.left.dim())
            .all(|i| (0..self.right.dim()).all(|j| self.matrix[(i, j)].is_zero() || self.left.parity(i) == self.right.parity(j)))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.is_invertible()
    }

    /// The flipped pairing `⟨v, f⟩ := η_{f,v} ⟨f, v⟩` as a matrix indexed `(v, f)`.
    pub fn flipped(&self) -> Matrix {
        Matrix::from_fn(self.right.dim(), self.left.dim(), |j, i| {
            self.matrix[(i, j)].clone().signed(eta2(self.left.parity(i), self.right.parity(j)))
        })
    }
}

/// Pairing on tensor products, `⟨f⊗g, v⊗w⟩ = η_{g,v} ⟨f,v⟩ ⟨g,w⟩`.
pub fn tensor_pairing(p: &PairingForm, q: &PairingForm) -> PairingForm {
    let left = p.left.tensor(&q.left);
    let right = p.right.tensor(&q.right);
    let (nq, mq) = (q.left.dim(), q.right.dim());
    let m = Matrix::from_fn(left.dim(), right.dim(), |r, c| {
        let (a, b) = (r / nq, r % nq);
        let (cc, d) = (c / mq, c % mq);
        let x = &p.matrix[(a, cc)];
        let y = &q.matrix[(b, d)];
        if x.is_zero() || y.is_zero() {
            return Scalar::zero();
        }
        (x * y).signed(eta2(q.left.parity(b), p.right.parity(cc)))
    });
    PairingForm { left, right, matrix: m }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parity() -> impl Strategy<Value = Parity> {
        prop_oneof![Just(Parity::Even), Just(Parity::Odd)]
    }

    #[test]
    fn eta_table() {
        use Parity::*;
        assert_eq!(eta(&[Odd, Odd]).unwrap(), -1);
        assert_eq!(eta(&[Odd, Even]).unwrap(), 1);
        assert_eq!(eta(&[Odd, Odd, Even]).unwrap(), -1);
        assert_eq!(eta(&[Odd, Odd, Odd]).unwrap(), -1);
        assert_eq!(eta(&[Even, Odd, Even]).unwrap(), 1);
        assert!(matches!(eta(&[Odd]), Err(Error::EtaArity(1))));
        assert!(matches!(eta(&[Odd; 4]), Err(Error::EtaArity(4))));
    }

    #[test]
    fn tensor_space_indexing() {
        let v = SuperSpace::standard(1, 1);
        let w = SuperSpace::standard(2, 1);
        let t = v.tensor(&w);
        assert_eq!(t.dim(), 6);
        assert_eq!(t.parity(1 * 3 + 2), Parity::Even);
        assert_eq!(t.sdim(), (3, 3));
    }

    fn homogeneous_map(space: SuperSpace, a: Parity, seed: Vec<i64>) -> SuperMap {
        let n = space.dim();
        let m = Matrix::from_fn(n, n, |i, j| {
            if space.parity(i) + space.parity(j) == a {
                Scalar::from(seed[(i * n + j) % seed.len()])
            } else {
                Scalar::zero()
            }
        });
        SuperMap::new(space.clone(), space, m).unwrap()
    }

    proptest! {
        #[test]
        fn eta_symmetric(x in parity(), y in parity(), z in parity()) {
            prop_assert_eq!(eta(&[x, y]).unwrap(), eta(&[y, x]).unwrap());
            let e = eta(&[x, y, z]).unwrap();
            prop_assert_eq!(e, eta(&[z, x, y]).unwrap());
            prop_assert_eq!(e, eta(&[y, x, z]).unwrap());
        }

        #[test]
        fn duals_satisfy_pairing_identity(
            ps in proptest::collection::vec(parity(), 1..5),
            a in parity(),
            seed in proptest::collection::vec(-4i64..=4, 1..30),
        ) {
            let space = SuperSpace::new(ps);
            let phi = homogeneous_map(space.clone(), a, seed);
            let l = phi.left_dual();
            let r = phi.right_dual();
            let n = space.dim();
            // ⟨φ^←(e*_i), e_j⟩ = η_{φ,i} ⟨e*_i, φ(e_j)⟩ with the canonical pairing
            for i in 0..n {
                for j in 0..n {
                    let lhs = l.matrix[(j, i)].clone();
                    let rhs = phi.matrix[(i, j)].clone().signed(eta2(a, space.parity(i)));
                    prop_assert_eq!(lhs, rhs);
                    let lhs = r.matrix[(i, j)].clone();
                    let rhs = phi.matrix[(j, i)].clone().signed(eta2(a, space.parity(i)));
                    prop_assert_eq!(lhs, rhs);
                }
            }
            prop_assert_eq!(&l.right_dual(), &phi);
            prop_assert_eq!(&r.left_dual(), &phi);
            let ll = l.left_dual();
            let expected = if a.is_odd() { phi.even_part().matrix.sub(&phi.odd_part().matrix) } else { phi.matrix.clone() };
            prop_assert_eq!(&ll.matrix, &expected);
            prop_assert_eq!(&ll.left_dual().left_dual(), &phi);
        }

        #[test]
        fn even_odd_parts_sum(ps in proptest::collection::vec(parity(), 1..5), seed in proptest::collection::vec(-3i64..=3, 1..25)) {
            let space = SuperSpace::new(ps);
            let n = space.dim();
            let m = Matrix::from_fn(n, n, |i, j| Scalar::from(seed[(i * n + j) % seed.len()]));
            let phi = SuperMap::new(space.clone(), space, m).unwrap();
            prop_assert_eq!(phi.even_part().matrix.add(&phi.odd_part().matrix), phi.matrix.clone());
            prop_assert_eq!(phi.even_part().parity(), Some(Parity::Even));
        }
    }

    #[test]
    fn tensor_pairing_sign() {
        let v = SuperSpace::standard(0, 1);
        let p = PairingForm::canonical(&v);
        let t = tensor_pairing(&p, &p);
        // ⟨f⊗g, v⊗w⟩ picks up η_{g,v} = -1 for odd g, v
        assert_eq!(t.matrix[(0, 0)], Scalar::from(-1));
        let w = SuperSpace::standard(1, 0);
        let q = PairingForm::canonical(&w);
        assert_eq!(tensor_pairing(&p, &q).matrix[(0, 0)], Scalar::one());
    }
}
