use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::poly::{gcd_v, v_coefficients, LaurentPoly};
use super::Symbols;
use crate::error::{Error, Result};

/// Quotient of two Laurent polynomials in canonical form.
///
/// The denominator is nonzero, has minimal exponent zero in every slot, has a
/// positive lexicographically leading coefficient, shares no integer content
/// with the numerator and is exactly `1` whenever the value is polynomial.
/// Common factors in `v` are cancelled; other common factors may survive, so
/// equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct ScalarFraction {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// Builds the canonical fraction `num / den`.
pub fn fraction_reduce(num: LaurentPoly, den: LaurentPoly) -> Result<ScalarFraction> {
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(reduce_nonzero(num, den))
}

fn reduce_nonzero(mut num: LaurentPoly, mut den: LaurentPoly) -> ScalarFraction {
    if num.is_zero() {
        return ScalarFraction::zero();
    }
    if den.is_one() {
        return ScalarFraction::from(num);
    }
    let shift = den.min_monomial();
    if !shift.is_one() {
        let inv = shift.inv();
        num = num.scale_monomial(&inv);
        den = den.scale_monomial(&inv);
    }
    if den.num_terms() > 1 {
        if let Some(q) = num.exact_div(&den) {
            return ScalarFraction::from(q);
        }
        let g = if den.is_v_only() {
            v_coefficients(&num)
                .iter()
                .fold(den.clone(), |g, part| gcd_v(&g, part))
        } else if num.is_v_only() {
            v_coefficients(&den)
                .iter()
                .fold(num.clone(), |g, part| gcd_v(&g, part))
        } else {
            LaurentPoly::one()
        };
        if g.num_terms() > 1 {
            if let (Some(n), Some(d)) = (num.exact_div(&g), den.exact_div(&g)) {
                num = n;
                den = d;
                let shift = den.min_monomial();
                if !shift.is_one() {
                    let inv = shift.inv();
                    num = num.scale_monomial(&inv);
                    den = den.scale_monomial(&inv);
                }
            }
        }
    }
    let c = num.content().gcd(&den.content());
    if !c.is_one() {
        num = num.div_int_exact(&c);
        den = den.div_int_exact(&c);
    }
    if den.leading().is_some_and(|(_, c)| c.is_negative()) {
        num = -num;
        den = -den;
    }
    ScalarFraction { num, den }
}

impl ScalarFraction {
    pub fn zero() -> Self {
        ScalarFraction {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::from(LaurentPoly::v_pow(e))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        fraction_reduce(num, den)
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::NonInvertible("0".into()));
        }
        Ok(reduce_nonzero(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, k: i32) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        reduce_nonzero(self.num.scale_int(c), self.den.clone())
    }

    pub fn fmt_with(&self, sym: &Symbols) -> String {
        if self.den.is_one() {
            return self.num.fmt_with(sym);
        }
        let wrap = |p: &LaurentPoly| {
            let s = p.fmt_with(sym);
            if p.num_terms() > 1 || s.contains('*') {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl From<LaurentPoly> for ScalarFraction {
    fn from(num: LaurentPoly) -> Self {
        ScalarFraction {
            num,
            den: LaurentPoly::one(),
        }
    }
}

impl From<i64> for ScalarFraction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl PartialEq for ScalarFraction {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for ScalarFraction {}

impl PartialEq<LaurentPoly> for ScalarFraction {
    fn eq(&self, other: &LaurentPoly) -> bool {
        if self.den.is_one() {
            &self.num == other
        } else {
            self.num == other * &self.den
        }
    }
}

impl fmt::Display for ScalarFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.fmt_with(&Symbols::default()))
    }
}

impl<'a> Add<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn add(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let num = &self.num + &rhs.num;
            if self.den.is_one() {
                return ScalarFraction::from(num);
            }
            return reduce_nonzero(num, self.den.clone());
        }
        reduce_nonzero(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn sub(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a ScalarFraction> for &'a ScalarFraction {
    type Output = ScalarFraction;
    fn mul(self, rhs: &'a ScalarFraction) -> ScalarFraction {
        if self.is_zero() || rhs.is_zero() {
            return ScalarFraction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return ScalarFraction::from(&self.num * &rhs.num);
        }
        if self.num.is_unit() && self.den.is_one() {
            return ScalarFraction {
                num: &self.num * &rhs.num,
                den: rhs.den.clone(),
            };
        }
        if rhs.num.is_unit() && rhs.den.is_one() {
            return ScalarFraction {
                num: &self.num * &rhs.num,
                den: self.den.clone(),
            };
        }
        reduce_nonzero(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Mul<&LaurentPoly> for &ScalarFraction {
    type Output = ScalarFraction;
    fn mul(self, rhs: &LaurentPoly) -> ScalarFraction {
        self * &ScalarFraction::from(rhs.clone())
    }
}

impl Neg for &ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        ScalarFraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for ScalarFraction {
    type Output = ScalarFraction;
    fn neg(self) -> ScalarFraction {
        ScalarFraction {
            num: -self.num,
            den: self.den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<ScalarFraction> for ScalarFraction {
            type Output = ScalarFraction;
            fn $f(self, rhs: ScalarFraction) -> ScalarFraction {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a ScalarFraction> for ScalarFraction {
            type Output = ScalarFraction;
            fn $f(self, rhs: &'a ScalarFraction) -> ScalarFraction {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<&ScalarFraction> for ScalarFraction {
    fn add_assign(&mut self, rhs: &ScalarFraction) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num += &rhs.num;
        } else {
            *self = &*self + rhs;
        }
    }
}

impl SubAssign<&ScalarFraction> for ScalarFraction {
    fn sub_assign(&mut self, rhs: &ScalarFraction) {
        if self.den.is_one() && rhs.den.is_one() {
            self.num -= &rhs.num;
        } else {
            *self = &*self - rhs;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(e: i32) -> LaurentPoly {
        LaurentPoly::v_pow(e)
    }

    #[test]
    fn telescoping() {
        let one = LaurentPoly::one();
        let f = fraction_reduce(&one - &v(4), &one - &v(2)).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &(&one + &v(2)));
    }

    #[test]
    fn base_pairing_value_canonical() {
        let one = LaurentPoly::one();
        let f = fraction_reduce(one.clone(), &one - &v(-2)).unwrap();
        assert_eq!(f.num(), &v(2));
        assert_eq!(f.den(), &(&v(2) - &one));
        // multiply back
        let back = &f * &ScalarFraction::from(&one - &v(-2));
        assert!(back.is_one());
    }

    #[test]
    fn zero_normal_form_and_errors() {
        let f = fraction_reduce(LaurentPoly::zero(), &v(1) + &v(3)).unwrap();
        assert!(f.is_zero());
        assert!(f.den().is_one());
        assert_eq!(
            fraction_reduce(v(1), LaurentPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn cancels_v_factor_against_multivariate_numerator() {
        let one = LaurentPoly::one();
        let s = LaurentPoly::var_pow(1, 1);
        let x = &s + &v(-1);
        let d = &one - &v(2);
        let f = fraction_reduce(&x * &d, d.clone()).unwrap();
        assert!(f.is_polynomial());
        assert_eq!(f.num(), &x);
        let h = &one + &v(1);
        let g = fraction_reduce(&x * &h, &d * &h).unwrap();
        assert_eq!(g, fraction_reduce(x.clone(), d.clone()).unwrap());
        assert_eq!(g.den(), &(&v(2) - &one));
    }

    #[test]
    fn inverse_and_sign() {
        let one = LaurentPoly::one();
        let f = ScalarFraction::from(&one - &v(2));
        let g = f.inv().unwrap();
        assert!(g.den().leading().unwrap().1.is_positive());
        assert!((&f * &g).is_one());
        assert!(ScalarFraction::zero().inv().is_err());
    }
}
