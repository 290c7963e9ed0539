//! Sparse Laurent polynomials in one variable with big-integer coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `Σ c_e x^e` with finitely many nonzero `c_e`. Zero coefficients are never
/// stored, so structural equality is polynomial equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(0)
    }

    /// `x^e`.
    pub fn monomial(e: i64) -> Self {
        LaurentPoly::term(e, BigInt::one())
    }

    /// `c x^e`.
    pub fn term(e: i64, c: impl Into<BigInt>) -> Self {
        let mut p = LaurentPoly::zero();
        p.add_term(e, c.into());
        p
    }

    /// Sum of monomials `x^e` over an iterator of exponents (with repetition).
    pub fn from_exponents(exps: impl IntoIterator<Item = i64>) -> Self {
        let mut p = LaurentPoly::zero();
        for e in exps {
            p.add_term(e, BigInt::one());
        }
        p
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Multiplication by `x^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&k, c)| (k + e, c.clone()))
                .collect(),
        }
    }

    /// `f(x) ↦ f(x^d)`.
    pub fn substitute_power(&self, d: u64) -> Self {
        assert!(d >= 1, "substitution power must be positive");
        let d = d as i64;
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (d * e, c.clone()))
                .collect(),
        }
    }

    /// Keeps exactly the terms whose exponent is `≡ k (mod d)`.
    pub fn project_mod(&self, k: u64, d: u64) -> Self {
        assert!(d >= 1 && k < d, "projection needs 0 <= k < d");
        let (k, d) = (k as i64, d as i64);
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .filter(|(&e, _)| e.rem_euclid(d) == k)
                .map(|(&e, c)| (e, c.clone()))
                .collect(),
        }
    }

    /// `x^r + x^{r-1} + .. + x^{r+1-count}`, the expansion of
    /// `(x^{r+1-count} - x^{r+1}) / (1 - x)`.
    pub fn geometric_segment(r: i64, count: u64) -> Self {
        assert!(count >= 1, "segment length must be positive");
        LaurentPoly::from_exponents((0..count as i64).map(|a| r - a))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        &self - &rhs
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, ca) in &self.terms {
            for (&b, cb) in &rhs.terms {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

/// Canonical rendering: `+1*x^-2 +2*x^-1 -3*x^4`, increasing exponents,
/// explicit signs; the zero polynomial renders as `0`.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let sign = if c.is_negative() { '-' } else { '+' };
            write!(f, "{sign}{}*x^{e}", c.abs())?;
        }
        Ok(())
    }
}
