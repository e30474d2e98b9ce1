//! Sparse Laurent polynomials in the deformation parameter `t`.

use super::{Ring, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Laurent polynomial over [`Scalar`]: finitely many terms `c * t^e` with
/// integer (possibly negative) exponents. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(exp: i64, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        LaurentPoly { terms }
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::monomial(1, Scalar::one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> Scalar {
        self.terms.get(&exp).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True iff no negative power of `t` occurs (zero counts as polynomial).
    pub fn is_polynomial(&self) -> bool {
        self.min_exp().is_none_or(|e| e >= 0)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == 0)
    }

    /// Value at `t = 0`; only meaningful when `is_polynomial()`.
    pub fn eval_at_zero(&self) -> Scalar {
        self.coeff(0)
    }

    /// Evaluates at a nonzero rational point.
    pub fn eval(&self, x: &Scalar) -> Scalar {
        assert!(!x.is_zero(), "Laurent polynomial evaluated at 0");
        let mut acc = Scalar::zero();
        for (e, c) in &self.terms {
            let mut p = Scalar::one();
            let (mag, inv) = if *e < 0 { ((-e) as u32, true) } else { (*e as u32, false) };
            for _ in 0..mag {
                p *= x;
            }
            if inv {
                p = p.recip();
            }
            acc += c * p;
        }
        acc
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    fn add_term(&mut self, exp: i64, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(Scalar::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Quotient and remainder of `self / rhs` with both shifted to ordinary
    /// polynomials; remainder is reported in the shifted frame.
    fn poly_divmod(&self, rhs: &Self) -> (Self, Self) {
        let (dl, dc) = rhs
            .terms
            .iter()
            .next_back()
            .map(|(e, c)| (*e, c.clone()))
            .expect("division by zero Laurent polynomial");
        let mut rem = self.clone();
        let mut quot = LaurentPoly::zero();
        loop {
            let (re, rc) = match rem.terms.iter().next_back() {
                Some((&e, c)) => (e, c.clone()),
                None => break,
            };
            if re < dl {
                break;
            }
            let qe = re - dl;
            let qc = &rc / &dc;
            quot.add_term(qe, &qc);
            for (e, c) in rhs.terms.iter() {
                let sub = -(c * &qc);
                rem.add_term(e + qe, &sub);
            }
        }
        (quot, rem)
    }
}

impl Ring for LaurentPoly {
    fn zero() -> Self {
        Self::default()
    }
    fn one() -> Self {
        Self::constant(Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
    fn from_scalar(s: &Scalar) -> Self {
        Self::constant(s.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        // Shift both to ordinary polynomials so the quotient's t-power
        // factor is carried separately; top-down division then terminates
        // exactly when the division is exact.
        let a = self.min_exp().unwrap();
        let b = rhs.min_exp().unwrap();
        let (q, r) = self.shift(-a).poly_divmod(&rhs.shift(-b));
        if r.is_zero() {
            Some(q.shift(a - b))
        } else {
            None
        }
    }
    fn term_count(&self) -> usize {
        self.terms.len()
    }
}

/// Monic univariate gcd via Euclid; both arguments shifted to min exponent 0.
pub(crate) fn laurent_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let normalize = |p: &LaurentPoly| -> LaurentPoly {
        match p.min_exp() {
            Some(e) => p.shift(-e),
            None => LaurentPoly::zero(),
        }
    };
    let mut a = normalize(a);
    let mut b = normalize(b);
    while !b.is_zero() {
        let (_, r) = a.poly_divmod(&b);
        a = b;
        b = normalize(&r);
    }
    if a.is_zero() {
        return a;
    }
    let lead = a.terms.iter().next_back().map(|(_, c)| c.clone()).unwrap();
    a.scale(&lead.recip())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match *e {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c} t")?,
                e => write!(f, "{c} t^{e}")?,
            }
        }
        Ok(())
    }
}
