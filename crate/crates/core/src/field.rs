//! Exact scalar fields.
//!
//! Everything above this module is generic over [`Scalar`]. Two families of
//! fields are provided: prime fields and the rationals. Prime fields come in a
//! compile-time flavour ([`Fp`]) used by the library and tests, and a runtime
//! flavour ([`DynFp`]) whose modulus is fixed once per process, which is what
//! the command line uses for `--field gf:<p>` with an arbitrary prime.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::atomic::{AtomicU32, Ordering};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An exact field.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_i64(v: i64) -> Self;

    fn from_bigint(v: &BigInt) -> Self;

    /// `num / den`, or `None` when `den` vanishes in the field.
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        let d = Self::from_bigint(den);
        if d.is_zero() {
            None
        } else {
            Some(Self::from_bigint(num) * d.inv())
        }
    }

    /// 0 for the rationals.
    fn characteristic() -> u64;

    fn spec() -> FieldSpec {
        match Self::characteristic() {
            0 => FieldSpec::Rationals,
            p => FieldSpec::Prime(p as u32),
        }
    }
}

pub const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p < 4 {
        return true;
    }
    if p.is_multiple_of(2) {
        return false;
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Which field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    Prime(u32),
}

impl FieldSpec {
    pub const DEFAULT_PRIME: u32 = 32003;

    pub fn prime(p: u32) -> Result<Self> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        Ok(FieldSpec::Prime(p))
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        FieldSpec::Prime(Self::DEFAULT_PRIME)
    }
}

impl Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "q"),
            FieldSpec::Prime(p) => write!(f, "gf:{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s.eq_ignore_ascii_case("qq") {
            return Ok(FieldSpec::Rationals);
        }
        let digits = s
            .strip_prefix("gf:")
            .or_else(|| s.strip_prefix("GF:"))
            .ok_or_else(|| Error::Input(format!("unknown field '{s}' (expected q or gf:<p>)")))?;
        let p: u32 = digits
            .parse()
            .map_err(|_| Error::Input(format!("bad prime in field '{s}'")))?;
        FieldSpec::prime(p)
    }
}

const fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(a != 0, "inverse of zero in GF({p})");
    // extended Euclid on i64
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1);
    t0.rem_euclid(p as i64) as u32
}

fn bigint_mod(v: &BigInt, p: u32) -> u32 {
    let r = v.mod_floor(&BigInt::from(p));
    r.to_u32().expect("residue fits in u32")
}

/// The prime field GF(P), with P fixed at compile time.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    const PRIME_CHECK: () = assert!(is_prime(P as u64) && P < (1 << 31), "modulus must be a prime below 2^31");

    pub fn new(v: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::PRIME_CHECK;
        Fp((v % P as u64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // print residues above p/2 as negatives; matrices read better
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + P - o.0 })
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(mul_mod(self.0, o.0, P))
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp(if self.0 == 0 { 0 } else { P - self.0 })
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Scalar for Fp<P> {
    fn inv(&self) -> Self {
        Fp(inv_mod(self.0, P))
    }
    fn from_i64(v: i64) -> Self {
        Fp::new(v.rem_euclid(P as i64) as u64)
    }
    fn from_bigint(v: &BigInt) -> Self {
        Fp(bigint_mod(v, P))
    }
    fn characteristic() -> u64 {
        P as u64
    }
}

static DYN_MODULUS: AtomicU32 = AtomicU32::new(0);

/// A prime field whose modulus is chosen at run time, once per process.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct DynFp(u32);

impl DynFp {
    /// Fix the process-wide modulus. Setting the same prime twice is fine;
    /// switching to a different one is an error.
    pub fn set_modulus(p: u32) -> Result<()> {
        if p >= 1 << 31 || !is_prime(p as u64) {
            return Err(Error::Input(format!("{p} is not a prime below 2^31")));
        }
        match DYN_MODULUS.compare_exchange(0, p, Ordering::SeqCst, Ordering::SeqCst) {
            Ok(_) => Ok(()),
            Err(q) if q == p => Ok(()),
            Err(q) => Err(Error::Input(format!(
                "runtime prime field already fixed to {q}, cannot switch to {p}"
            ))),
        }
    }

    pub fn modulus() -> u32 {
        let p = DYN_MODULUS.load(Ordering::Relaxed);
        assert!(p != 0, "DynFp used before set_modulus");
        p
    }

    pub fn value(self) -> u32 {
        self.0
    }
}

impl Debug for DynFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Display for DynFp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = Self::modulus();
        if self.0 > p / 2 {
            write!(f, "-{}", p - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl Add for DynFp {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let p = Self::modulus();
        let s = self.0 + o.0;
        DynFp(if s >= p { s - p } else { s })
    }
}

impl Sub for DynFp {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        let p = Self::modulus();
        DynFp(if self.0 >= o.0 { self.0 - o.0 } else { self.0 + p - o.0 })
    }
}

impl Mul for DynFp {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        DynFp(mul_mod(self.0, o.0, Self::modulus()))
    }
}

impl Div for DynFp {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Self) -> Self {
        self * o.inv()
    }
}

impl Neg for DynFp {
    type Output = Self;
    fn neg(self) -> Self {
        DynFp(if self.0 == 0 { 0 } else { Self::modulus() - self.0 })
    }
}

impl Zero for DynFp {
    fn zero() -> Self {
        DynFp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl One for DynFp {
    fn one() -> Self {
        DynFp(1)
    }
}

impl Scalar for DynFp {
    fn inv(&self) -> Self {
        DynFp(inv_mod(self.0, Self::modulus()))
    }
    fn from_i64(v: i64) -> Self {
        DynFp(v.rem_euclid(Self::modulus() as i64) as u32)
    }
    fn from_bigint(v: &BigInt) -> Self {
        DynFp(bigint_mod(v, Self::modulus()))
    }
    fn characteristic() -> u64 {
        Self::modulus() as u64
    }
}

impl Scalar for BigRational {
    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational");
        self.recip()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_bigint(v: &BigInt) -> Self {
        BigRational::from_integer(v.clone())
    }
    fn from_ratio(num: &BigInt, den: &BigInt) -> Option<Self> {
        if den.is_zero() {
            None
        } else {
            Some(BigRational::new(num.clone(), den.clone()))
        }
    }
    fn characteristic() -> u64 {
        0
    }
}

/// Exact rationals.
pub type Rational = BigRational;
/// The default working field.
pub type Gf32003 = Fp<32003>;
pub type Gf2 = Fp<2>;
pub type Gf3 = Fp<3>;
pub type Gf7 = Fp<7>;

/// Clears denominators of a rational, returning `(integer numerators, lcm of denominators)`.
pub fn clear_denominators(v: &[BigRational]) -> (Vec<BigInt>, BigInt) {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let nums = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    (nums, l.abs())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_arithmetic() {
        let a = Fp::<7>::from_i64(3);
        let b = Fp::<7>::from_i64(5);
        assert_eq!(a + b, Fp::from_i64(1));
        assert_eq!(a - b, Fp::from_i64(-2));
        assert_eq!(a * b, Fp::from_i64(1));
        assert_eq!(a / b, Fp::from_i64(2));
        assert_eq!(-a, Fp::from_i64(4));
        for v in 1..7 {
            let x = Fp::<7>::from_i64(v);
            assert_eq!(x * x.inv(), Fp::one());
        }
    }

    #[test]
    fn large_prime_inverse() {
        for v in [1i64, 2, 31999, 32002, 12345] {
            let x = Gf32003::from_i64(v);
            assert_eq!(x * x.inv(), Gf32003::one());
        }
        type Big = Fp<2147483647>;
        let x = Big::from_i64(-5);
        assert_eq!(x * x.inv(), Big::one());
    }

    #[test]
    fn ratio_into_prime_field() {
        let half = Fp::<7>::from_ratio(&BigInt::from(1), &BigInt::from(2)).unwrap();
        assert_eq!(half * Fp::from_i64(2), Fp::one());
        assert!(Fp::<7>::from_ratio(&BigInt::from(1), &BigInt::from(14)).is_none());
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rationals);
        assert_eq!("gf:32003".parse::<FieldSpec>().unwrap(), FieldSpec::Prime(32003));
        assert!("gf:32004".parse::<FieldSpec>().is_err());
        assert!("gf:1".parse::<FieldSpec>().is_err());
        assert!("reals".parse::<FieldSpec>().is_err());
        assert_eq!(FieldSpec::default().to_string(), "gf:32003");
        assert_eq!(Gf32003::spec(), FieldSpec::Prime(32003));
        assert_eq!(Rational::spec(), FieldSpec::Rationals);
    }

    #[test]
    fn runtime_prime_field() {
        // the only test in this binary that touches the process-wide modulus
        DynFp::set_modulus(101).unwrap();
        assert!(DynFp::set_modulus(101).is_ok());
        assert!(DynFp::set_modulus(103).is_err());
        let a = DynFp::from_i64(-1);
        assert_eq!(a.value(), 100);
        assert_eq!(a * a, DynFp::one());
        assert_eq!(DynFp::from_i64(37) * DynFp::from_i64(37).inv(), DynFp::one());
        assert_eq!(DynFp::characteristic(), 101);
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..30).filter(|&p| is_prime(p)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(is_prime(32003));
        assert!(is_prime(2147483647));
        assert!(!is_prime(32001));
    }

    #[test]
    fn denominators() {
        let v = vec![
            BigRational::new(1.into(), 2.into()),
            BigRational::new((-2).into(), 3.into()),
        ];
        let (nums, l) = clear_denominators(&v);
        assert_eq!(l, BigInt::from(6));
        assert_eq!(nums, vec![BigInt::from(3), BigInt::from(-4)]);
    }
}
