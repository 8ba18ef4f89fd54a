//! Scalars of the form a + b*sqrt(d) with rational a, b and a fixed
//! squarefree integer d. Purely rational values carry d = 0 and combine
//! with any extension, so generic code can mix integer literals in.

use super::{Field, Int, Rat};
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuadExtScalar {
    pub re: Rat,
    pub im: Rat,
    pub d: Int,
}

impl QuadExtScalar {
    pub fn new(re: Rat, im: Rat, d: Int) -> Self {
        let mut s = QuadExtScalar { re, im, d };
        s.reduce();
        s
    }

    pub fn from_rat(re: Rat) -> Self {
        QuadExtScalar {
            re,
            im: Rat::zero(),
            d: Int::zero(),
        }
    }

    /// sqrt(d) itself.
    pub fn root(d: i64) -> Self {
        assert!(d != 0 && d != 1, "not a proper quadratic extension");
        QuadExtScalar {
            re: Rat::zero(),
            im: Rat::from_integer(Int::from(1)),
            d: Int::from(d),
        }
    }

    fn reduce(&mut self) {
        if self.im.is_zero() {
            self.d = Int::zero();
        }
    }

    fn join(&self, other: &Self) -> Int {
        if self.d.is_zero() {
            other.d.clone()
        } else if other.d.is_zero() || self.d == other.d {
            self.d.clone()
        } else {
            panic!("mixed quadratic extensions: {} vs {}", self.d, other.d)
        }
    }

    pub fn conj(&self) -> Self {
        QuadExtScalar {
            re: self.re.clone(),
            im: -self.im.clone(),
            d: self.d.clone(),
        }
    }

    /// Field norm re^2 - d * im^2; zero exactly on the zero scalar.
    pub fn norm(&self) -> Rat {
        &self.re * &self.re - Rat::from_integer(self.d.clone()) * &self.im * &self.im
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn inv(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in quadratic extension");
        QuadExtScalar::new(&self.re / &n, -&self.im / &n, self.d.clone())
    }
}

impl Add for QuadExtScalar {
    type Output = Self;
    fn add(self, other: Self) -> Self {
        let d = self.join(&other);
        QuadExtScalar::new(self.re + other.re, self.im + other.im, d)
    }
}

impl Sub for QuadExtScalar {
    type Output = Self;
    fn sub(self, other: Self) -> Self {
        self + (-other)
    }
}

impl Mul for QuadExtScalar {
    type Output = Self;
    fn mul(self, other: Self) -> Self {
        let d = self.join(&other);
        let dr = Rat::from_integer(d.clone());
        QuadExtScalar::new(
            &self.re * &other.re + &dr * &self.im * &other.im,
            &self.re * &other.im + &self.im * &other.re,
            d,
        )
    }
}

impl Div for QuadExtScalar {
    type Output = Self;
    fn div(self, other: Self) -> Self {
        let inv = other.inv();
        self * inv
    }
}

impl Neg for QuadExtScalar {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExtScalar {
            re: -self.re,
            im: -self.im,
            d: self.d,
        }
    }
}

impl Zero for QuadExtScalar {
    fn zero() -> Self {
        QuadExtScalar::from_rat(Rat::zero())
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for QuadExtScalar {
    fn one() -> Self {
        QuadExtScalar::from_rat(Rat::one())
    }
}

impl Field for QuadExtScalar {
    fn from_rat(r: &Rat) -> Self {
        QuadExtScalar::from_rat(r.clone())
    }
}

impl fmt::Display for QuadExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}*sqrt({})", self.im, self.d);
        }
        if self.im.is_negative() {
            write!(f, "{} - {}*sqrt({})", self.re, -self.im.clone(), self.d)
        } else {
            write!(f, "{} + {}*sqrt({})", self.re, self.im, self.d)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn arithmetic_in_sqrt_minus_three() {
        // z = (1 + sqrt(-3))/2 satisfies z^2 - z + 1 = 0
        let z = QuadExtScalar::new(ratio(1, 2), ratio(1, 2), Int::from(-3));
        let back = z.clone() * z.clone() - z + QuadExtScalar::one();
        assert!(back.is_zero());
    }

    #[test]
    fn inverse_and_norm() {
        let x = QuadExtScalar::new(rat(2), rat(1), Int::from(5));
        assert_eq!(x.norm(), rat(-1));
        assert!((x.clone() * x.inv() - QuadExtScalar::one()).is_zero());
        let c = x.clone() * x.conj();
        assert!(c.is_rational());
        assert_eq!(c.re, x.norm());
    }

    #[test]
    fn rational_values_mix_with_any_extension() {
        let two = QuadExtScalar::from_rat(rat(2));
        let r = QuadExtScalar::root(-3);
        let s = two * r;
        assert_eq!(s.im, rat(2));
        assert_eq!(s.d, Int::from(-3));
    }
}
