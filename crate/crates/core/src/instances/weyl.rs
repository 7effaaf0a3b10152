//! The Weyl algebra `W⟨x, y⟩` with `[x, y] = 1`, truncated per variable.
//!
//! Elements are normal-ordered polynomials `Σ c_{ij} xⁱyʲ` over `ℚ`. The
//! algebra is simple, so no finite quotient exists; instead every operation
//! reports a capacity error as soon as a monomial `xⁱyʲ` with `i > N` or
//! `j > N` would appear. Identities are then verified on windows of
//! monomials whose evaluation stays below that bound.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{input, Error, Result};

/// A normal-ordered polynomial, keyed by exponents `(i, j)` of `xⁱyʲ`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct WeylPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl WeylPoly {
    pub fn zero() -> Self {
        WeylPoly::default()
    }

    pub fn monomial(i: u32, j: u32) -> Self {
        WeylPoly::term(i, j, BigRational::one())
    }

    pub fn term(i: u32, j: u32, c: BigRational) -> Self {
        let mut p = WeylPoly::zero();
        p.add_term(i, j, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn add(&self, other: &WeylPoly) -> WeylPoly {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &WeylPoly) -> WeylPoly {
        self.add(&other.scale(&-BigRational::one()))
    }

    pub fn scale(&self, s: &BigRational) -> WeylPoly {
        let mut out = WeylPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c * s);
        }
        out
    }

    /// Largest `x`- and `y`-exponents present.
    pub fn degrees(&self) -> (u32, u32) {
        self.terms.keys().fold((0, 0), |(a, b), &(i, j)| (a.max(i), b.max(j)))
    }
}

impl fmt::Display for WeylPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(&(i, j), c)| format!("({c})·x^{i}y^{j}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn binomial(n: u32, k: u32) -> BigInt {
    (0..k).fold(BigInt::one(), |acc, r| acc * BigInt::from(n - r) / BigInt::from(r + 1))
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, r| acc * BigInt::from(r))
}

/// The Weyl algebra with per-variable truncation degree `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TruncatedWeyl {
    degree: u32,
}

impl TruncatedWeyl {
    pub fn new(degree: u32) -> Result<Self> {
        if degree < 4 {
            return input("truncated_weyl needs N ≥ 4");
        }
        Ok(TruncatedWeyl { degree })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    fn admit(&self, i: u32, j: u32) -> Result<()> {
        if i > self.degree || j > self.degree {
            return Err(Error::Capacity(format!("monomial x^{i}y^{j} exceeds the truncation degree {}", self.degree)));
        }
        Ok(())
    }

    fn admit_all(&self, p: &WeylPoly) -> Result<()> {
        p.terms.keys().try_for_each(|&(i, j)| self.admit(i, j))
    }

    /// `xⁱyʲ` as an element, if it lies within the truncation.
    pub fn monomial(&self, i: u32, j: u32) -> Result<WeylPoly> {
        self.admit(i, j)?;
        Ok(WeylPoly::monomial(i, j))
    }

    /// The normal-ordered product, using
    /// `yʲxᵏ = Σ_r (−1)^r C(j,r) C(k,r) r! x^{k−r} y^{j−r}`.
    pub fn mul(&self, a: &WeylPoly, b: &WeylPoly) -> Result<WeylPoly> {
        self.admit_all(a)?;
        self.admit_all(b)?;
        let mut out = WeylPoly::zero();
        for (&(i, j), c) in &a.terms {
            for (&(k, l), d) in &b.terms {
                for r in 0..=j.min(k) {
                    let mut coeff = BigRational::from_integer(binomial(j, r) * binomial(k, r) * factorial(r));
                    if r % 2 == 1 {
                        coeff = -coeff;
                    }
                    let (xi, yj) = (i + k - r, j + l - r);
                    self.admit(xi, yj)?;
                    out.add_term(xi, yj, coeff * c * d);
                }
            }
        }
        Ok(out)
    }

    /// `∫ xⁱyʲ dy = xⁱy^{j+1}/(j+1)`.
    pub fn integral(&self, a: &WeylPoly) -> Result<WeylPoly> {
        self.admit_all(a)?;
        let mut out = WeylPoly::zero();
        for (&(i, j), c) in &a.terms {
            self.admit(i, j + 1)?;
            out.add_term(i, j + 1, c / BigRational::from_integer(BigInt::from(j + 1)));
        }
        Ok(out)
    }

    /// `ad_x(a) = xa − ax`.
    pub fn ad_x(&self, a: &WeylPoly) -> Result<WeylPoly> {
        let x = WeylPoly::monomial(1, 0);
        Ok(self.mul(&x, a)?.sub(&self.mul(a, &x)?))
    }

    /// `m ⋆ n = ∫(m)·n + m·∫(n)`, the product induced by `∫`.
    pub fn induced_mul(&self, m: &WeylPoly, n: &WeylPoly) -> Result<WeylPoly> {
        Ok(self.mul(&self.integral(m)?, n)?.add(&self.mul(m, &self.integral(n)?)?))
    }

    /// `m ·_∫ a = ∫(m)a − ∫(ma)`.
    pub fn induced_left(&self, m: &WeylPoly, a: &WeylPoly) -> Result<WeylPoly> {
        Ok(self.mul(&self.integral(m)?, a)?.sub(&self.integral(&self.mul(m, a)?)?))
    }

    /// `a ·_∫ m = a∫(m) − ∫(am)`.
    pub fn induced_right(&self, a: &WeylPoly, m: &WeylPoly) -> Result<WeylPoly> {
        Ok(self.mul(a, &self.integral(m)?)?.sub(&self.integral(&self.mul(a, m)?)?))
    }

    /// Monomials `xⁱyʲ` with `i, j ≤ w`.
    pub fn window(&self, w: u32) -> Result<Vec<(u32, u32)>> {
        self.admit(w, w)?;
        Ok((0..=w).flat_map(|i| (0..=w).map(move |j| (i, j))).collect())
    }

    fn check_pairs(
        &self,
        identity: &str,
        w: u32,
        mut sides: impl FnMut(&WeylPoly, &WeylPoly) -> Result<(WeylPoly, WeylPoly)>,
    ) -> Result<WindowReport> {
        let window = self.window(w)?;
        let mut checked = 0;
        for &(i, j) in &window {
            for &(k, l) in &window {
                let (lhs, rhs) = sides(&WeylPoly::monomial(i, j), &WeylPoly::monomial(k, l))?;
                checked += 1;
                if lhs != rhs {
                    let failure = WindowFailure { monomials: vec![(i, j), (k, l)], lhs, rhs };
                    return Ok(self.report(identity, w, checked, Some(failure)));
                }
            }
        }
        Ok(self.report(identity, w, checked, None))
    }

    fn check_singles(
        &self,
        identity: &str,
        w: u32,
        mut sides: impl FnMut(&WeylPoly) -> Result<(WeylPoly, WeylPoly)>,
    ) -> Result<WindowReport> {
        let window = self.window(w)?;
        let mut checked = 0;
        for &(i, j) in &window {
            let (lhs, rhs) = sides(&WeylPoly::monomial(i, j))?;
            checked += 1;
            if lhs != rhs {
                let failure = WindowFailure { monomials: vec![(i, j)], lhs, rhs };
                return Ok(self.report(identity, w, checked, Some(failure)));
            }
        }
        Ok(self.report(identity, w, checked, None))
    }

    fn report(&self, identity: &str, w: u32, checked: usize, failure: Option<WindowFailure>) -> WindowReport {
        WindowReport { identity: identity.to_string(), degree: self.degree, window: w, checked, failure }
    }

    /// `∫(a)∫(b) = ∫(∫(a)b + a∫(b))` on window pairs.
    pub fn rb_window(&self, w: u32) -> Result<WindowReport> {
        self.check_pairs("∫(a)∫(b) = ∫(∫(a)b + a∫(b))", w, |a, b| {
            let lhs = self.mul(&self.integral(a)?, &self.integral(b)?)?;
            let rhs = self.integral(&self.induced_mul(a, b)?)?;
            Ok((lhs, rhs))
        })
    }

    /// `[x, ∫ a dy] = a` on window monomials.
    pub fn inverse_window(&self, w: u32) -> Result<WindowReport> {
        self.check_singles("[x, ∫a dy] = a", w, |a| Ok((self.ad_x(&self.integral(a)?)?, a.clone())))
    }

    /// `ad_x(ab) = ad_x(a)b + a·ad_x(b)` on window pairs.
    pub fn derivation_window(&self, w: u32) -> Result<WindowReport> {
        self.check_pairs("ad_x(ab) = ad_x(a)b + a ad_x(b)", w, |a, b| {
            let lhs = self.ad_x(&self.mul(a, b)?)?;
            let rhs = self.mul(&self.ad_x(a)?, b)?.add(&self.mul(a, &self.ad_x(b)?)?);
            Ok((lhs, rhs))
        })
    }

    /// The GRB identity for `Ω = ad_x: W → W_ass` with the induced actions:
    /// `Ω(a) ⋆ Ω(b) = Ω(Ω(a)·_∫ b + a·_∫ Ω(b))`.
    pub fn derivation_dual_window(&self, w: u32) -> Result<WindowReport> {
        self.check_pairs("Ω(a)⋆Ω(b) = Ω(Ω(a)·b + a·Ω(b))", w, |a, b| {
            let (oa, ob) = (self.ad_x(a)?, self.ad_x(b)?);
            let lhs = self.induced_mul(&oa, &ob)?;
            let rhs = self.ad_x(&self.induced_left(&oa, b)?.add(&self.induced_right(a, &ob)?))?;
            Ok((lhs, rhs))
        })
    }

    /// `N(a)N(b) = N(N(a)b + aN(b)) − N(N(ab))` for `N = ∫∘ad_x`.
    pub fn nijenhuis_window(&self, w: u32) -> Result<WindowReport> {
        let n = |p: &WeylPoly| self.integral(&self.ad_x(p)?);
        self.check_pairs("N(a)N(b) = N(N(a)b + aN(b)) − N(N(ab))", w, |a, b| {
            let (na, nb) = (n(a)?, n(b)?);
            let lhs = self.mul(&na, &nb)?;
            let inner = self.mul(&na, b)?.add(&self.mul(a, &nb)?);
            let rhs = n(&inner)?.sub(&n(&n(&self.mul(a, b)?)?)?);
            Ok((lhs, rhs))
        })
    }

    /// All window checks at once.
    pub fn verify(&self, w: u32) -> Result<Vec<WindowReport>> {
        Ok(vec![
            self.rb_window(w)?,
            self.inverse_window(w)?,
            self.derivation_window(w)?,
            self.derivation_dual_window(w)?,
            self.nijenhuis_window(w)?,
        ])
    }
}

/// A window monomial (or pair) where an identity fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowFailure {
    pub monomials: Vec<(u32, u32)>,
    pub lhs: WeylPoly,
    pub rhs: WeylPoly,
}

/// The outcome of checking one identity on the window `i, j ≤ w`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowReport {
    pub identity: String,
    pub degree: u32,
    pub window: u32,
    pub checked: usize,
    pub failure: Option<WindowFailure>,
}

impl WindowReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }
}

impl fmt::Display for WindowReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.failure {
            None => write!(
                f,
                "{}: verified on window i, j ≤ {} at N = {} ({} cases)",
                self.identity, self.window, self.degree, self.checked
            ),
            Some(fail) => {
                write!(f, "{}: fails at {:?}: lhs = {}, rhs = {}", self.identity, fail.monomials, fail.lhs, fail.rhs)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn commutation_relation() {
        let w = TruncatedWeyl::new(4).unwrap();
        let (x, y) = (WeylPoly::monomial(1, 0), WeylPoly::monomial(0, 1));
        let yx = w.mul(&y, &x).unwrap();
        assert_eq!(yx, WeylPoly::monomial(1, 1).sub(&WeylPoly::monomial(0, 0)));
        assert_eq!(w.ad_x(&y).unwrap(), WeylPoly::monomial(0, 0));
    }

    #[test]
    fn integral_of_one_squared() {
        let w = TruncatedWeyl::new(4).unwrap();
        let one = WeylPoly::monomial(0, 0);
        let y = w.integral(&one).unwrap();
        assert_eq!(w.mul(&y, &y).unwrap(), WeylPoly::monomial(0, 2));
        assert_eq!(w.integral(&w.induced_mul(&one, &one).unwrap()).unwrap(), WeylPoly::monomial(0, 2));
    }

    #[test]
    fn x_bracket_inverts_integral_on_xy() {
        let w = TruncatedWeyl::new(4).unwrap();
        let xy = WeylPoly::monomial(1, 1);
        assert_eq!(w.integral(&xy).unwrap(), WeylPoly::term(1, 2, q(1, 2)));
        assert_eq!(w.ad_x(&w.integral(&xy).unwrap()).unwrap(), xy);
    }

    #[test]
    fn overflow_names_the_monomial() {
        let w = TruncatedWeyl::new(4).unwrap();
        let a = WeylPoly::monomial(3, 0);
        match w.mul(&a, &a) {
            Err(Error::Capacity(msg)) => assert!(msg.contains("x^6y^0"), "{msg}"),
            other => panic!("expected a capacity error, got {other:?}"),
        }
        assert!(w.window(5).is_err());
    }

    #[test]
    fn small_window_holds() {
        let w = TruncatedWeyl::new(6).unwrap();
        for report in w.verify(2).unwrap() {
            assert!(report.holds(), "{report}");
        }
    }
}
