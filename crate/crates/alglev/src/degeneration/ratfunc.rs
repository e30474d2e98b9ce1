//! Univariate rational functions in `t`, reduced on construction.
//!
//! The denominator is kept as a monic ordinary polynomial with nonzero
//! constant term; any pure `t`-power factor lives in the numerator's
//! Laurent exponents. A reduced value is a Laurent polynomial exactly when
//! the denominator is 1.

use crate::exact::laurent_gcd;
use crate::exact::{LaurentPoly, Ring, Scalar};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RatFunc {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        RatFunc {
            num,
            den: LaurentPoly::one(),
        }
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
        assert!(!den.is_zero(), "division by zero rational function");
        if num.is_zero() {
            return Self::zero();
        }
        let num_shift = num.min_exp().unwrap();
        let den_shift = den.min_exp().unwrap();
        let num_poly = num.shift(-num_shift);
        let den_poly = den.shift(-den_shift);
        let g = laurent_gcd(&num_poly, &den_poly);
        let num_red = num_poly.exact_div(&g).unwrap();
        let den_red = den_poly.exact_div(&g).unwrap();
        let lead = den_red.coeff(den_red.max_exp().unwrap());
        let den_monic = den_red.scale(&lead.clone().recip());
        let num_final = num_red
            .scale(&lead.recip())
            .shift(num_shift - den_shift);
        RatFunc {
            num: num_final,
            den: den_monic,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Self::normalized(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Self::normalized(
            self.num.mul(&rhs.den).sub(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        Self::normalized(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }

    pub fn inv(&self) -> Self {
        Self::normalized(self.den.clone(), self.num.clone())
    }

    /// The value as a Laurent polynomial, when the reduced denominator is
    /// trivial.
    pub fn to_laurent(&self) -> Option<LaurentPoly> {
        if self.den == LaurentPoly::one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    #[cfg(test)]
    pub fn eval(&self, x: &Scalar) -> Scalar {
        &self.num.eval(x) / &self.den.eval(x)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        RatFunc::add(self, rhs)
    }
    fn sub(&self, rhs: &Self) -> Self {
        RatFunc::sub(self, rhs)
    }
    fn mul(&self, rhs: &Self) -> Self {
        RatFunc::mul(self, rhs)
    }
    fn neg(&self) -> Self {
        RatFunc::zero().sub(self)
    }
    fn from_scalar(s: &Scalar) -> Self {
        RatFunc::from_laurent(LaurentPoly::constant(s.clone()))
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if RatFunc::is_zero(rhs) {
            None
        } else {
            Some(RatFunc::mul(self, &rhs.inv()))
        }
    }
}

impl std::fmt::Display for RatFunc {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == LaurentPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}
