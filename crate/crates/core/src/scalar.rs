//! Exact scalars: arbitrary-precision rationals and residues modulo a small prime.
//!
//! Every tensor in the crate is tagged with a [`Field`]; scalars of different
//! fields are never mixed, and doing so is a programming error that panics.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted for prime fields. Keeps products inside `u64`.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

/// The base field of a computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Builds `𝔽_p`, rejecting composite or oversized moduli.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..=MAX_PRIME).contains(&p) || !is_prime(p) {
            return Err(Error::Input(format!("{p} is not a supported prime modulus")));
        }
        Ok(Field::Prime(p))
    }

    pub fn characteristic(self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }

    pub fn zero(self) -> Scalar {
        self.from_int(0)
    }

    pub fn one(self) -> Scalar {
        self.from_int(1)
    }

    pub fn from_int(self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => Scalar::Modular { residue: n.rem_euclid(p as i64) as u64, modulus: p },
        }
    }

    /// `num/den` in this field; fails when `den` vanishes.
    pub fn from_ratio(self, num: i64, den: i64) -> Result<Scalar> {
        let d = self.from_int(den);
        let inv = d.inverse().ok_or_else(|| Error::Input(format!("denominator {den} is zero in {self}")))?;
        Ok(&self.from_int(num) * &inv)
    }

    /// Maps a rational number into this field.
    pub fn from_rational(self, q: &BigRational) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(Scalar::Rational(q.clone())),
            Field::Prime(p) => {
                let big_p = BigInt::from(p);
                let reduce = |n: &BigInt| -> u64 {
                    let r = ((n % &big_p) + &big_p) % &big_p;
                    r.to_u64().expect("residue fits")
                };
                let num = Scalar::Modular { residue: reduce(q.numer()), modulus: p };
                let den = Scalar::Modular { residue: reduce(q.denom()), modulus: p };
                let inv = den.inverse().ok_or_else(|| Error::Input(format!("denominator of {q} is zero in {self}")))?;
                Ok(&num * &inv)
            }
        }
    }

    /// Parses `"n"` or `"n/d"` into this field.
    pub fn parse(self, text: &str) -> Result<Scalar> {
        let q = parse_rational(text)?;
        self.from_rational(&q)
    }

    /// All field elements in canonical order, for finite fields.
    pub fn elements(self) -> Option<Vec<Scalar>> {
        match self {
            Field::Rationals => None,
            Field::Prime(p) => Some((0..p).map(|residue| Scalar::Modular { residue, modulus: p }).collect()),
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    /// Fails unless every integer in `2..=n` is invertible in this field.
    pub fn require_inverses_up_to(self, n: u64, operation: &str) -> Result<()> {
        if let Field::Prime(p) = self {
            if p <= n {
                return Err(Error::Characteristic {
                    operation: operation.to_string(),
                    denominator: p,
                    characteristic: p,
                });
            }
        }
        Ok(())
    }

    /// Checks that a scalar lives in this field.
    pub fn owns(self, s: &Scalar) -> bool {
        s.field() == self
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "F{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = Error;

    /// Accepts `Q`, `QQ`, `F5`, `Fp5`, or `GF5`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") || t.eq_ignore_ascii_case("qq") {
            return Ok(Field::Rationals);
        }
        let digits = t
            .strip_prefix("GF")
            .or_else(|| t.strip_prefix("Fp"))
            .or_else(|| t.strip_prefix('F'))
            .ok_or_else(|| Error::Input(format!("unknown field '{s}'")))?;
        let p: u64 = digits.parse().map_err(|_| Error::Input(format!("unknown field '{s}'")))?;
        Field::prime(p)
    }
}

fn is_prime(n: u64) -> bool {
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

fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::Input(format!("malformed scalar '{text}'"));
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Input(format!("zero denominator in '{text}'")));
    }
    Ok(BigRational::new(num, den))
}

/// An exact field element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    /// Canonical representative in `[0, modulus)`.
    Modular {
        residue: u64,
        modulus: u64,
    },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rational(_) => Field::Rationals,
            Scalar::Modular { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Modular { residue, .. } => *residue == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_one(),
            Scalar::Modular { residue, .. } => *residue == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(q) => Scalar::Rational(q.recip()),
            Scalar::Modular { residue, modulus } => {
                Scalar::Modular { residue: pow_mod(*residue, modulus - 2, *modulus), modulus: *modulus }
            }
        })
    }

    /// Lifts an `𝔽_p` residue to its canonical integer representative in ℚ.
    pub fn to_rational(&self) -> BigRational {
        match self {
            Scalar::Rational(q) => q.clone(),
            Scalar::Modular { residue, .. } => BigRational::from_integer(BigInt::from(*residue)),
        }
    }

    /// Canonical text form: `"n"` or `"n/d"` with `d > 1`, or the residue.
    pub fn to_canonical_string(&self) -> String {
        self.to_string()
    }

    fn combine(
        &self,
        other: &Scalar,
        op: fn(u64, u64, u64) -> u64,
        qop: fn(&BigRational, &BigRational) -> BigRational,
    ) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(qop(a, b)),
            (Scalar::Modular { residue: a, modulus: p }, Scalar::Modular { residue: b, modulus: q }) if p == q => {
                Scalar::Modular { residue: op(*a, *b, *p), modulus: *p }
            }
            _ => panic!("scalar field mismatch: {} vs {}", self.field(), other.field()),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => {
                if q.denom().is_one() {
                    write!(f, "{}", q.numer())
                } else {
                    write!(f, "{}/{}", q.numer(), q.denom())
                }
            }
            Scalar::Modular { residue, .. } => write!(f, "{residue}"),
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        self.combine(rhs, |a, b, p| (a + b) % p, |a, b| a + b)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        self.combine(rhs, |a, b, p| (a + p - b) % p, |a, b| a - b)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        self.combine(rhs, |a, b, p| a * b % p, |a, b| a * b)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(q) => Scalar::Rational(-q),
            Scalar::Modular { residue, modulus } => {
                Scalar::Modular { residue: (modulus - residue) % modulus, modulus: *modulus }
            }
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        &self + &rhs
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// Wire form of a [`Field`]: `"Q"` or `{"Fp": p}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum FieldRepr {
    Name(String),
    Prime {
        #[serde(rename = "Fp")]
        fp: u64,
    },
}

impl TryFrom<FieldRepr> for Field {
    type Error = Error;
    fn try_from(r: FieldRepr) -> Result<Field> {
        match r {
            FieldRepr::Name(n) if n == "Q" => Ok(Field::Rationals),
            FieldRepr::Name(n) => {
                Err(Error::Input(format!("unknown field name '{n}' (expected \"Q\" or {{\"Fp\": p}})")))
            }
            FieldRepr::Prime { fp } => Field::prime(fp),
        }
    }
}

impl From<Field> for FieldRepr {
    fn from(f: Field) -> Self {
        match f {
            Field::Rationals => FieldRepr::Name("Q".into()),
            Field::Prime(p) => FieldRepr::Prime { fp: p },
        }
    }
}

/// Wire form of a scalar: an integer or a `"num/den"` string.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRepr {
    Int(i64),
    Text(String),
}

impl ScalarRepr {
    pub fn into_scalar(self, field: Field) -> Result<Scalar> {
        match self {
            ScalarRepr::Int(n) => Ok(field.from_int(n)),
            ScalarRepr::Text(t) => field.parse(&t),
        }
    }
}

impl From<&Scalar> for ScalarRepr {
    fn from(s: &Scalar) -> Self {
        ScalarRepr::Text(s.to_canonical_string())
    }
}

/// Sign of a rational scalar, used for pretty-printing.
pub fn is_negative(s: &Scalar) -> bool {
    matches!(s, Scalar::Rational(q) if q.is_negative())
}
