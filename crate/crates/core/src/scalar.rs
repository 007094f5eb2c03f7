//! Exact scalars.
//!
//! [`Scalar`] is an element of either ℚ or a prime field 𝔽_p (p odd). Integer
//! constants are shared by every field: a rational with a denominator prime to
//! `p` is silently reduced when it meets a residue mod `p`. An object built
//! from integer structure constants can therefore be evaluated over any of
//! the supported fields without being rebuilt.
//!
//! [`Ring`] abstracts the commutative rings the linear algebra runs over. Besides
//! [`Scalar`] it is implemented by [`QuadExt`], elements of `F[t]/(t² − c₁t − c₀)`
//! (dual numbers when `c₁ = c₀ = 0`).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

use crate::linalg::Matrix;
use crate::Error;

/// Largest modulus accepted for prime fields; keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The base field of a computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

impl Field {
    /// The prime field 𝔽_p. Rejects `p = 2`, composites and moduli above [`MAX_PRIME`].
    pub fn prime(p: u64) -> Result<Field, Error> {
        if p == 2 {
            return Err(Error::CharacteristicTwo);
        }
        if p < 2 || p > MAX_PRIME || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rational => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::from(n),
            Field::Prime(p) => Scalar::modular(n.rem_euclid(*p as i64) as u64, *p),
        }
    }

    /// Brings a scalar into canonical form for this field.
    pub fn canonical(&self, s: &Scalar) -> Scalar {
        match self {
            Field::Rational => s.clone(),
            Field::Prime(p) => s.reduce_mod(*p).expect("denominator divisible by the characteristic"),
        }
    }

    /// Parses `"n"`, `"-n"` or `"n/d"`. In a prime field the value is reduced mod p.
    pub fn parse(&self, text: &str) -> Result<Scalar, Error> {
        let q = parse_rational(text)?;
        match self {
            Field::Rational => Ok(q),
            Field::Prime(p) => q
                .reduce_mod(*p)
                .ok_or_else(|| Error::Invalid(format!("{text:?} has a denominator divisible by {p}"))),
        }
    }

    /// Canonical text form: reduced fraction with the sign on the numerator,
    /// or the least nonnegative residue.
    pub fn format(&self, s: &Scalar) -> String {
        self.canonical(s).to_string()
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F_{p}"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

fn parse_rational(text: &str) -> Result<Scalar, Error> {
    let bad = || Error::Invalid(format!("malformed scalar {text:?}"));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let valid = |s: &str, signed: bool| {
        let digits = if signed { s.strip_prefix('-').unwrap_or(s) } else { s };
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num, true) || !valid(den, false) {
        return Err(bad());
    }
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(Scalar::from_big(BigRational::new(n, d)))
}

/// An exact field element.
#[derive(Clone)]
pub struct Scalar(Repr);

#[derive(Clone)]
enum Repr {
    Small(Ratio<i64>),
    Big(BigRational),
    Mod { v: u64, p: u64 },
}

impl Scalar {
    pub fn zero() -> Scalar {
        Scalar(Repr::Small(Ratio::from_integer(0)))
    }

    pub fn one() -> Scalar {
        Scalar(Repr::Small(Ratio::from_integer(1)))
    }

    /// `n / d` as a rational. Panics on `d == 0`.
    pub fn frac(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        Scalar::from_big(BigRational::new(n.into(), d.into()))
    }

    pub fn modular(v: u64, p: u64) -> Scalar {
        Scalar(Repr::Mod { v: v % p, p })
    }

    fn from_big(q: BigRational) -> Scalar {
        let fits = |x: &BigInt| x.abs() < BigInt::from(i64::MAX);
        if fits(q.numer()) && fits(q.denom()) {
            let n = q.numer().to_i64().unwrap();
            let d = q.denom().to_i64().unwrap();
            Scalar(Repr::Small(Ratio::new_raw(n, d)))
        } else {
            Scalar(Repr::Big(q))
        }
    }

    fn to_big(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Small(r) => Some(BigRational::new_raw((*r.numer()).into(), (*r.denom()).into())),
            Repr::Big(b) => Some(b.clone()),
            Repr::Mod { .. } => None,
        }
    }

    /// The residue of this value mod `p`, if it has one.
    fn reduce_mod(&self, p: u64) -> Option<Scalar> {
        match &self.0 {
            Repr::Mod { v, p: q } => {
                assert_eq!(*q, p, "mixing prime fields F_{q} and F_{p}");
                Some(Scalar::modular(*v, p))
            }
            _ => {
                let b = self.to_big().unwrap();
                let pb = BigInt::from(p);
                let n = b.numer().mod_floor(&pb).to_u64().unwrap();
                let d = b.denom().mod_floor(&pb).to_u64().unwrap();
                if d == 0 {
                    return None;
                }
                Some(Scalar::modular(n * mod_inv(d, p) % p, p))
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(b) => b.is_zero(),
            Repr::Mod { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Small(r) => Scalar(Repr::Small(r.recip())),
            Repr::Big(b) => Scalar::from_big(b.recip()),
            Repr::Mod { v, p } => Scalar::modular(mod_inv(*v, *p), *p),
        })
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, Error> {
        other.inv().map(|i| self * &i).ok_or(Error::DivisionByZero)
    }

    /// `-self` when `negate` is set. Used for the super signs.
    pub fn signed(self, negate: bool) -> Scalar {
        if negate {
            -self
        } else {
            self
        }
    }

    fn binop(
        &self,
        other: &Scalar,
        small: fn(&Ratio<i64>, &Ratio<i64>) -> Option<Ratio<i64>>,
        big: fn(BigRational, BigRational) -> BigRational,
        modular: fn(u64, u64, u64) -> u64,
    ) -> Scalar {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => match small(a, b) {
                Some(r) if *r.numer() != i64::MIN => Scalar(Repr::Small(r)),
                _ => Scalar::from_big(big(self.to_big().unwrap(), other.to_big().unwrap())),
            },
            (Repr::Mod { v, p }, _) => {
                let w = other.mod_value(*p);
                Scalar::modular(modular(*v, w, *p), *p)
            }
            (_, Repr::Mod { v, p }) => {
                let w = self.mod_value(*p);
                Scalar::modular(modular(w, *v, *p), *p)
            }
            _ => Scalar::from_big(big(self.to_big().unwrap(), other.to_big().unwrap())),
        }
    }

    fn mod_value(&self, p: u64) -> u64 {
        match self.reduce_mod(p).expect("value not representable in the prime field").0 {
            Repr::Mod { v, .. } => v,
            _ => unreachable!(),
        }
    }
}

fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn mod_inv(v: u64, p: u64) -> u64 {
    mod_pow(v, p - 2, p)
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => a == b,
            (Repr::Mod { v, p }, _) => other.reduce_mod(*p).is_some_and(|o| o.mod_value(*p) == *v),
            (_, Repr::Mod { .. }) => other == self,
            _ => self.to_big() == other.to_big(),
        }
    }
}

impl Eq for Scalar {}

impl PartialOrd for Scalar {
    /// Orders rationals numerically; residues are not ordered against anything.
    fn partial_cmp(&self, other: &Scalar) -> Option<Ordering> {
        match (self.to_big(), other.to_big()) {
            (Some(a), Some(b)) => a.partial_cmp(&b),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) => write!(f, "{r}"),
            Repr::Big(b) => write!(f, "{b}"),
            Repr::Mod { v, .. } => write!(f, "{v}"),
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { v, p } => write!(f, "{v} (mod {p})"),
            _ => write!(f, "{self}"),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Scalar {
        if n == i64::MIN {
            Scalar(Repr::Big(BigRational::from_integer(n.into())))
        } else {
            Scalar(Repr::Small(Ratio::from_integer(n)))
        }
    }
}

impl From<i32> for Scalar {
    fn from(n: i32) -> Scalar {
        Scalar::from(n as i64)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        self.binop(rhs, |a, b| a.checked_add(b), |a, b| a + b, |a, b, p| (a + b) % p)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        if rhs.is_zero() {
            return self.clone();
        }
        self.binop(rhs, |a, b| a.checked_sub(b), |a, b| a - b, |a, b, p| (a + p - b) % p)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            // keep the field tag of a residue
            return match (&self.0, &rhs.0) {
                (Repr::Mod { p, .. }, _) | (_, Repr::Mod { p, .. }) => Scalar::modular(0, *p),
                _ => Scalar::zero(),
            };
        }
        self.binop(rhs, |a, b| a.checked_mul(b), |a, b| a * b, |a, b, p| a * b % p)
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Small(r) => Scalar(Repr::Small(-r)),
            Repr::Big(b) => Scalar::from_big(-b),
            Repr::Mod { v, p } => Scalar::modular((p - v) % p, *p),
        }
    }
}

macro_rules! forward_by_value {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar { (&self).$m(rhs) }
        }
    )*};
}
forward_by_value!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

/// A commutative unital ring containing the base field constants.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + From<Scalar>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// Inverse of a unit; `None` for non-units.
    fn inverse(&self) -> Option<Self>;
    /// `self += a * b`.
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = self.clone() + a.clone() * b.clone();
        }
    }
    /// Inverse of a square matrix over this ring.
    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>>;
}

impl Ring for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn one() -> Self {
        Scalar::one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        self.inv()
    }
    fn add_product(&mut self, a: &Self, b: &Self) {
        if !a.is_zero() && !b.is_zero() {
            *self = &*self + &(a * b);
        }
    }
    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        m.inverse()
    }
}

/// The relation `t² = c₁·t + c₀` defining a quadratic algebra over the base field.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadRing {
    c1: Scalar,
    c0: Scalar,
}

impl QuadRing {
    /// 𝔽[ε]/(ε²).
    pub fn dual_numbers() -> Arc<QuadRing> {
        Arc::new(QuadRing { c1: Scalar::zero(), c0: Scalar::zero() })
    }

    /// 𝔽[t]/(t² + a₁t + a₀) for the monic polynomial with the given lower coefficients.
    pub fn monic(a1: Scalar, a0: Scalar) -> Arc<QuadRing> {
        Arc::new(QuadRing { c1: -a1, c0: -a0 })
    }

    pub fn elem(self: &Arc<Self>, a: Scalar, b: Scalar) -> QuadExt {
        QuadExt { a, b, ring: Some(Arc::clone(self)) }
    }

    /// The class of `t`.
    pub fn generator(self: &Arc<Self>) -> QuadExt {
        self.elem(Scalar::zero(), Scalar::one())
    }

    /// Monic coefficients `(a₁, a₀)` of the defining polynomial.
    pub fn coefficients(&self) -> (Scalar, Scalar) {
        (-&self.c1, -&self.c0)
    }
}

/// `a + b·t` in a [`QuadRing`]. Elements with `b = 0` need no ring tag.
#[derive(Clone, Debug)]
pub struct QuadExt {
    a: Scalar,
    b: Scalar,
    ring: Option<Arc<QuadRing>>,
}

impl QuadExt {
    pub fn parts(&self) -> (&Scalar, &Scalar) {
        (&self.a, &self.b)
    }

    fn merge_ring(&self, other: &QuadExt) -> Option<Arc<QuadRing>> {
        match (&self.ring, &other.ring) {
            (Some(r), Some(s)) => {
                assert!(Arc::ptr_eq(r, s) || r == s, "mixing different quadratic rings");
                Some(Arc::clone(r))
            }
            (Some(r), None) | (None, Some(r)) => Some(Arc::clone(r)),
            (None, None) => None,
        }
    }

    /// Matrix of multiplication by `self` on the basis `(1, t)`.
    fn regular(&self) -> [[Scalar; 2]; 2] {
        let (c1, c0) = match &self.ring {
            Some(r) => (r.c1.clone(), r.c0.clone()),
            None => (Scalar::zero(), Scalar::zero()),
        };
        [
            [self.a.clone(), &self.b * &c0],
            [self.b.clone(), &self.a + &(&self.b * &c1)],
        ]
    }
}

impl PartialEq for QuadExt {
    fn eq(&self, other: &QuadExt) -> bool {
        self.a == other.a && self.b == other.b
    }
}

impl fmt::Display for QuadExt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{}+({})t", self.a, self.b)
        }
    }
}

impl From<Scalar> for QuadExt {
    fn from(a: Scalar) -> QuadExt {
        QuadExt { a, b: Scalar::zero(), ring: None }
    }
}

impl Add for QuadExt {
    type Output = QuadExt;
    fn add(self, rhs: QuadExt) -> QuadExt {
        let ring = self.merge_ring(&rhs);
        QuadExt { a: self.a + rhs.a, b: self.b + rhs.b, ring }
    }
}

impl Sub for QuadExt {
    type Output = QuadExt;
    fn sub(self, rhs: QuadExt) -> QuadExt {
        let ring = self.merge_ring(&rhs);
        QuadExt { a: self.a - rhs.a, b: self.b - rhs.b, ring }
    }
}

impl Neg for QuadExt {
    type Output = QuadExt;
    fn neg(self) -> QuadExt {
        QuadExt { a: -self.a, b: -self.b, ring: self.ring }
    }
}

impl Mul for QuadExt {
    type Output = QuadExt;
    fn mul(self, rhs: QuadExt) -> QuadExt {
        let ring = self.merge_ring(&rhs);
        let bd = &self.b * &rhs.b;
        let (c1, c0) = match (&ring, bd.is_zero()) {
            (_, true) => (Scalar::zero(), Scalar::zero()),
            (Some(r), false) => (r.c1.clone(), r.c0.clone()),
            (None, false) => unreachable!("t-components without a ring"),
        };
        let a = &(&self.a * &rhs.a) + &(&bd * &c0);
        let b = &(&(&self.a * &rhs.b) + &(&self.b * &rhs.a)) + &(&bd * &c1);
        QuadExt { a, b, ring }
    }
}

impl Ring for QuadExt {
    fn zero() -> Self {
        QuadExt::from(Scalar::zero())
    }
    fn one() -> Self {
        QuadExt::from(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        if self.b.is_zero() {
            return self.a.inv().map(QuadExt::from);
        }
        let r = self.ring.as_ref()?;
        // (a + bt)(a + b c1 - bt) = a² + ab c1 - b² c0
        let norm = &(&(&self.a * &self.a) + &(&(&self.a * &self.b) * &r.c1)) - &(&(&self.b * &self.b) * &r.c0);
        let ni = norm.inv()?;
        Some(QuadExt {
            a: &(&self.a + &(&self.b * &r.c1)) * &ni,
            b: -(&self.b * &ni),
            ring: Some(Arc::clone(r)),
        })
    }
    fn invert_matrix(m: &Matrix<Self>) -> Option<Matrix<Self>> {
        // invert the regular representation over the base field and read the
        // result back from the images of 1
        let n = m.rows();
        if n != m.cols() {
            return None;
        }
        let ring = m.iter().find_map(|x| x.ring.clone());
        let mut big = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                let block = m[(i, j)].regular();
                for (r, row) in block.iter().enumerate() {
                    for (c, v) in row.iter().enumerate() {
                        big[(2 * i + r, 2 * j + c)] = v.clone();
                    }
                }
            }
        }
        let inv = big.inverse()?;
        Some(Matrix::from_fn(n, n, |i, j| QuadExt {
            a: inv[(2 * i, 2 * j)].clone(),
            b: inv[(2 * i + 1, 2 * j)].clone(),
            ring: ring.clone(),
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic_is_exact() {
        let a = Scalar::frac(1, 3);
        let b = Scalar::frac(1, 6);
        assert_eq!(&a + &b, Scalar::frac(1, 2));
        assert_eq!(&a * &b, Scalar::frac(1, 18));
        assert_eq!(&a / &b, Scalar::from(2));
        assert_eq!((&a - &a), Scalar::zero());
        assert_eq!(Scalar::frac(2, -4).to_string(), "-1/2");
    }

    #[test]
    fn overflow_promotes_to_bignum() {
        let big = Scalar::from(i64::MAX - 1);
        let sq = &big * &big;
        let back = &sq / &big;
        assert_eq!(back, big);
        assert!(sq.to_string().len() > 30);
    }

    #[test]
    fn division_by_zero_is_rejected() {
        assert!(Scalar::zero().inv().is_none());
        assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
        assert!(matches!(Field::Rational.parse("1/0"), Err(Error::DivisionByZero)));
    }

    #[test]
    fn characteristic_two_is_rejected() {
        assert!(matches!(Field::prime(2), Err(Error::CharacteristicTwo)));
        assert!(matches!(Field::prime(9), Err(Error::NotPrime(9))));
        assert!(Field::prime(7).is_ok());
    }

    #[test]
    fn constants_meet_residues() {
        let f = Field::prime(7).unwrap();
        let x = f.parse("3").unwrap();
        assert_eq!(&x * &Scalar::from(5), f.from_i64(1));
        assert_eq!(Scalar::frac(1, 2), f.from_i64(4));
        assert_eq!(f.parse("1/2").unwrap().to_string(), "4");
        assert_eq!(f.format(&Scalar::from(-1)), "6");
        assert_eq!(x.inv().unwrap(), f.from_i64(5));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "a", "1/", "/2", "1/-2", "1.5", "--1"] {
            assert!(Field::Rational.parse(bad).is_err(), "{bad}");
        }
        assert_eq!(Field::Rational.parse("-6/4").unwrap().to_string(), "-3/2");
    }

    #[test]
    fn dual_numbers_square_to_zero() {
        let r = QuadRing::dual_numbers();
        let eps = r.generator();
        assert!((eps.clone() * eps.clone()).is_zero());
        let u = r.elem(Scalar::from(2), Scalar::from(3));
        let ui = u.inverse().unwrap();
        assert_eq!(u * ui, QuadExt::one());
        assert!(eps.inverse().is_none());
    }

    #[test]
    fn quadratic_extension_inverse() {
        let r = QuadRing::monic(Scalar::zero(), Scalar::from(-2));
        let t = r.generator();
        assert_eq!(t.clone() * t.clone(), QuadExt::from(Scalar::from(2)));
        let ti = t.inverse().unwrap();
        assert_eq!(ti, r.elem(Scalar::zero(), Scalar::frac(1, 2)));
        let m = Matrix::from_fn(2, 2, |i, j| if i == j { t.clone() } else { QuadExt::from(Scalar::one()) });
        let mi = QuadExt::invert_matrix(&m).unwrap();
        assert_eq!(m.mul(&mi), Matrix::identity(2));
    }
}
