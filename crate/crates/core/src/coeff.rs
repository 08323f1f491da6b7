//! Coefficient domains for Lie, tensor and symmetric elements.
//!
//! Three domains are supported: arbitrary-precision integers, exact
//! rationals, and the prime field `Fp<P>`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Which ring the coefficients of an element live in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Domain {
    Integers,
    Rationals,
    IntegersModP(u64),
}

/// A commutative coefficient ring.
pub trait Coefficient:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
{
    const DOMAIN: Domain;

    fn from_bigint(n: &BigInt) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_bigint(&BigInt::from(n))
    }
}

impl Coefficient for BigInt {
    const DOMAIN: Domain = Domain::Integers;

    fn from_bigint(n: &BigInt) -> Self {
        n.clone()
    }
}

impl Coefficient for BigRational {
    const DOMAIN: Domain = Domain::Rationals;

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

/// A coefficient ring in which every nonzero element is invertible.
pub trait Field: Coefficient {
    fn inv(&self) -> Option<Self>;
}

impl Field for BigRational {
    fn inv(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Residue class modulo the prime `P`, stored in `0..P`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(Fp(inverse_mod(self.0, P)))
        }
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp((self.0 + rhs.0) % P)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp((self.0 + P - rhs.0) % P)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Coefficient for Fp<P> {
    const DOMAIN: Domain = Domain::IntegersModP(P);

    fn from_bigint(n: &BigInt) -> Self {
        Fp(reduce_bigint(n, P))
    }
}

impl<const P: u64> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        self.inverse()
    }
}

/// `n mod p` in `0..p`.
pub fn reduce_bigint(n: &BigInt, p: u64) -> u64 {
    let r = n.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}

/// Reduces a rational whose denominator is prime to `p`.
pub fn reduce_rational(q: &BigRational, p: u64) -> Option<u64> {
    let den = reduce_bigint(q.denom(), p);
    if den == 0 {
        return None;
    }
    let num = reduce_bigint(q.numer(), p);
    Some(mul_mod(num, inverse_mod(den, p), p))
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

/// Inverse of a unit `a` modulo `m` by the extended Euclidean algorithm.
pub fn inverse_mod(a: u64, m: u64) -> u64 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1, "{a} is not invertible modulo {m}");
    t0.rem_euclid(m as i128) as u64
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Exact quotient `n / d`, or `None` when `d` does not divide `n`.
pub fn exact_div(n: &BigInt, d: &BigInt) -> Option<BigInt> {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        Some(q)
    } else {
        None
    }
}

pub fn abs(n: &BigInt) -> BigInt {
    n.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fp_arithmetic() {
        let a = Fp::<5>::new(3);
        let b = Fp::<5>::new(4);
        assert_eq!((a + b).value(), 2);
        assert_eq!((a - b).value(), 4);
        assert_eq!((a * b).value(), 2);
        assert_eq!((-a).value(), 2);
        assert_eq!(a.inverse().unwrap().value(), 2);
        assert!(Fp::<5>::new(0).inverse().is_none());
        assert_eq!(Fp::<3>::from_i64(-1).value(), 2);
    }

    #[test]
    fn factorial_inverses_mod_p() {
        // 1/3! = 1/6 and 6 = 1 mod 5
        assert_eq!(reduce_bigint(&factorial(3), 5), 1);
        assert_eq!(inverse_mod(2, 3), 2);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(reduce_rational(&half, 3), Some(2));
        assert_eq!(reduce_rational(&half, 2), None);
    }

    #[test]
    fn primes() {
        let ps: Vec<u64> = (0..20).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }
}
