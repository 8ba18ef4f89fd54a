//! Exact scalar arithmetic and the small linear/polynomial toolkit the rest
//! of the crate is built on: arbitrary-precision rationals, a quadratic
//! extension scalar, fraction-free matrix routines, binary forms with
//! squarefree factorization, sparse multivariate polynomials, and complete
//! rational root extraction.

pub mod binary_form;
pub mod matrix;
pub mod modp;
pub mod multipoly;
pub mod quadext;
pub mod roots;
pub mod upoly;

pub use binary_form::BinaryForm;
pub use matrix::RatMatrix;
pub use multipoly::MultiPoly;
pub use quadext::QuadExtScalar;
pub use roots::rational_roots;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

pub fn int(n: i64) -> Int {
    BigInt::from(n)
}

pub fn rat(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

pub fn ratio(num: i64, den: i64) -> Rat {
    Rat::new(int(num), int(den))
}

/// Operations required of scalars by the generic geometry code. Implemented
/// by `Rat` and by `QuadExtScalar`.
pub trait Field:
    Clone
    + PartialEq
    + std::fmt::Debug
    + Zero
    + One
    + std::ops::Neg<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Div<Output = Self>
{
    fn from_rat(r: &Rat) -> Self;
}

impl Field for Rat {
    fn from_rat(r: &Rat) -> Self {
        r.clone()
    }
}

/// Clears denominators and divides by the integer content. The zero vector
/// maps to itself; otherwise the first nonzero entry of the result is
/// positive, so the output is a canonical representative of the input's
/// projective class.
pub fn primitive_integer_vector(v: &[Rat]) -> Vec<Int> {
    let mut den = Int::one();
    for x in v {
        den = den.lcm(x.denom());
    }
    let mut ints: Vec<Int> = v.iter().map(|x| x.numer() * (&den / x.denom())).collect();
    let mut content = Int::zero();
    for x in &ints {
        content = content.gcd(x);
    }
    if content.is_zero() {
        return ints;
    }
    let first_neg = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    if first_neg {
        content = -content;
    }
    for x in &mut ints {
        *x = &*x / &content;
    }
    ints
}

/// Same normalization, returned as rationals for callers that keep working
/// in the field.
pub fn primitive_rational_vector(v: &[Rat]) -> Vec<Rat> {
    primitive_integer_vector(v)
        .into_iter()
        .map(Rat::from_integer)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_vector_normalizes_sign_and_content() {
        let v = vec![ratio(-2, 3), rat(0), ratio(4, 9)];
        assert_eq!(primitive_integer_vector(&v), vec![int(3), int(0), int(-2)]);
        let z = vec![rat(0), rat(0)];
        assert_eq!(primitive_integer_vector(&z), vec![int(0), int(0)]);
    }
}
