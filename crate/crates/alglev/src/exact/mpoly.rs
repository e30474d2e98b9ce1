//! Sparse multivariate polynomials over the rationals.

use super::{Ring, Scalar};
use std::collections::BTreeMap;
use std::fmt;

/// Multivariate polynomial with exact rational coefficients. Terms are
/// keyed by exponent vectors with trailing zeros trimmed, so the ordering
/// of the map is the lex order with implicit zeros and polynomials compare
/// equal independently of their nominal variable count. Zero coefficients
/// are never stored.
#[derive(Clone, Eq, Debug)]
pub struct MPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, Scalar>,
}

impl PartialEq for MPoly {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl std::hash::Hash for MPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

fn trim(mut exps: Vec<u16>) -> Vec<u16> {
    while exps.last() == Some(&0) {
        exps.pop();
    }
    exps
}

impl MPoly {
    pub fn zero(nvars: usize) -> Self {
        MPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    /// The variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exps = vec![0u16; i + 1];
        exps[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(exps, Scalar::one());
        MPoly { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u16], &Scalar)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn constant_value(&self) -> Option<Scalar> {
        if self.terms.is_empty() {
            return Some(Scalar::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn add_term(&mut self, exps: Vec<u16>, coeff: &Scalar) {
        if coeff.is_zero() {
            return;
        }
        let exps = trim(exps);
        match self.terms.get_mut(&exps) {
            Some(entry) => {
                *entry += coeff;
                if entry.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, coeff.clone());
            }
        }
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    /// Reinterprets the polynomial in a larger variable set (indices kept).
    pub fn widen(&self, nvars: usize) -> Self {
        assert!(nvars >= self.nvars);
        MPoly {
            nvars,
            terms: self.terms.clone(),
        }
    }

    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (exps, c) in &self.terms {
            assert!(exps.len() <= point.len(), "evaluation point too short");
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps.iter()) {
                for _ in 0..e {
                    term *= x;
                }
            }
            acc += term;
        }
        acc
    }

    /// Substitutes scalars for a subset of the variables; the result keeps
    /// the same variable numbering.
    pub fn substitute(&self, assignment: &[Option<Scalar>]) -> Self {
        let mut out = Self::zero(self.nvars);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = exps.clone();
            for (i, slot) in assignment.iter().enumerate() {
                if i >= exps.len() {
                    break;
                }
                if let Some(v) = slot {
                    for _ in 0..exps[i] {
                        coeff *= v;
                    }
                    rest[i] = 0;
                }
            }
            out.add_term(rest, &coeff);
        }
        out
    }

    /// `den^deg(self) * self(nums[0]/den, ..., nums[n-1]/den)` as a polynomial.
    pub fn eval_frac(&self, nums: &[MPoly], den: &MPoly) -> MPoly {
        assert!(nums.len() >= self.nvars);
        let out_vars = den.nvars;
        let deg = self.total_degree();
        let mut acc = MPoly::zero(out_vars);
        for (exps, c) in &self.terms {
            let mut term = MPoly::constant(out_vars, c.clone());
            let mut used = 0usize;
            for (i, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&nums[i]);
                }
                used += e as usize;
            }
            for _ in used..deg {
                term = term.mul(den);
            }
            acc = acc.add(&term);
        }
        acc
    }

    fn leading(&self) -> Option<(&Vec<u16>, &Scalar)> {
        self.terms.iter().next_back()
    }
}

impl Ring for MPoly {
    fn zero() -> Self {
        // A variable-free polynomial; widen before mixing with others.
        MPoly::zero(0)
    }
    fn one() -> Self {
        MPoly::constant(0, Scalar::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, rhs: &Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        let mut out = self.widen(nvars);
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c);
        }
        out
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }
    fn mul(&self, rhs: &Self) -> Self {
        let nvars = self.nvars.max(rhs.nvars);
        let mut out = MPoly::zero(nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let len = e1.len().max(e2.len());
                let mut exps = vec![0u16; len];
                for (i, x) in exps.iter_mut().enumerate() {
                    let a = e1.get(i).copied().unwrap_or(0);
                    let b = e2.get(i).copied().unwrap_or(0);
                    *x = a + b;
                }
                out.add_term(exps, &(c1 * c2));
            }
        }
        out
    }
    fn neg(&self) -> Self {
        MPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
    fn from_scalar(s: &Scalar) -> Self {
        MPoly::constant(0, s.clone())
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let nvars = self.nvars.max(rhs.nvars);
        let mut rem = self.widen(nvars);
        let mut quot = MPoly::zero(nvars);
        let (dexp, dcoeff) = {
            let (e, c) = rhs.leading().unwrap();
            (e.clone(), c.clone())
        };
        loop {
            let (rexp, rcoeff) = match rem.leading() {
                Some((e, c)) => (e.clone(), c.clone()),
                None => break,
            };
            let len = rexp.len().max(dexp.len());
            let mut qexp = vec![0u16; len];
            for i in 0..len {
                let r = rexp.get(i).copied().unwrap_or(0);
                let d = dexp.get(i).copied().unwrap_or(0);
                if r < d {
                    return None;
                }
                qexp[i] = r - d;
            }
            let qcoeff = &rcoeff / &dcoeff;
            quot.add_term(qexp.clone(), &qcoeff);
            for (e, c) in &rhs.terms {
                let len = e.len().max(qexp.len());
                let mut exps = vec![0u16; len];
                for (i, x) in exps.iter_mut().enumerate() {
                    *x = e.get(i).copied().unwrap_or(0) + qexp.get(i).copied().unwrap_or(0);
                }
                rem.add_term(exps, &-(c * &qcoeff));
            }
        }
        Some(quot)
    }
    fn term_count(&self) -> usize {
        self.terms.len()
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let is_const = exps.iter().all(|&e| e == 0);
            if is_const || c != &super::int(1) {
                write!(f, "{c}")?;
            }
            for (i, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, " x{}", i + 1)?,
                    e => write!(f, " x{}^{}", i + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{frac, int};
    use super::*;

    #[test]
    fn ring_ops() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = x.add(&y).mul(&x.sub(&y));
        let x2 = x.mul(&x);
        let y2 = y.mul(&y);
        assert_eq!(p, x2.sub(&y2));
        assert_eq!(p.eval(&[int(3), int(2)]), int(5));
    }

    #[test]
    fn exact_division_multivariate() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let d = x.add(&y);
        let p = d.mul(&d).mul(&x);
        let q = p.exact_div(&d).unwrap();
        assert_eq!(q, d.mul(&x));
        assert!(x.mul(&x).sub(&y).exact_div(&d).is_none());
    }

    #[test]
    fn substitution_keeps_remaining_vars() {
        let x = MPoly::var(2, 0);
        let y = MPoly::var(2, 1);
        let p = x.mul(&y).add(&y);
        let s = p.substitute(&[Some(frac(1, 2)), None]);
        assert_eq!(s, y.scale(&frac(3, 2)));
    }

    #[test]
    fn fraction_evaluation_clears_denominator() {
        // f = x^2 + y; f(a/d, b/d) * d^2 = a^2 + b d
        let f = {
            let x = MPoly::var(2, 0);
            let y = MPoly::var(2, 1);
            x.mul(&x).add(&y)
        };
        let a = MPoly::var(3, 0);
        let b = MPoly::var(3, 1);
        let d = MPoly::var(3, 2);
        let got = f.eval_frac(&[a.clone(), b.clone()], &d);
        assert_eq!(got, a.mul(&a).add(&b.mul(&d)));
    }
}
