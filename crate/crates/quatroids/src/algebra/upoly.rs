//! Dense univariate polynomials over the rationals, little-endian
//! coefficient vectors. Shared by the binary form code (after
//! dehomogenization) and the resultant computations.

use super::Rat;
use num_traits::{One, Zero};

pub fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().map_or(false, |c| c.is_zero()) {
        v.pop();
    }
    v
}

/// Degree, or None for the zero polynomial.
pub fn deg(p: &[Rat]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn is_zero(p: &[Rat]) -> bool {
    deg(p).is_none()
}

pub fn add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] += c;
    }
    trim(out)
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let n = a.len().max(b.len());
    let mut out = vec![Rat::zero(); n];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

pub fn mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if is_zero(a) || is_zero(b) {
        return Vec::new();
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(out)
}

pub fn scale(a: &[Rat], s: &Rat) -> Vec<Rat> {
    trim(a.iter().map(|c| c * s).collect())
}

pub fn derivative(p: &[Rat]) -> Vec<Rat> {
    if p.len() <= 1 {
        return Vec::new();
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rat::from_integer(super::int(i as i64)))
            .collect(),
    )
}

pub fn eval(p: &[Rat], x: &Rat) -> Rat {
    let mut acc = Rat::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Exact Euclidean division; the divisor must be nonzero.
pub fn divrem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = deg(den).expect("division by zero polynomial");
    let lead = den[dd].clone();
    let mut rem: Vec<Rat> = num.to_vec();
    let mut quo: Vec<Rat> = Vec::new();
    loop {
        let Some(dr) = deg(&rem) else { break };
        if dr < dd {
            break;
        }
        let shift = dr - dd;
        let f = &rem[dr] / &lead;
        if quo.len() < shift + 1 {
            quo.resize(shift + 1, Rat::zero());
        }
        quo[shift] = f.clone();
        for i in 0..=dd {
            let t = &rem[shift + i] - &f * &den[i];
            rem[shift + i] = t;
        }
        rem = trim(rem);
    }
    (trim(quo), trim(rem))
}

/// The unique polynomial of degree < n through n points with distinct
/// abscissae, by Lagrange's formula.
pub fn interpolate(xs: &[Rat], ys: &[Rat]) -> Vec<Rat> {
    assert_eq!(xs.len(), ys.len());
    let mut out = Vec::new();
    for (i, y) in ys.iter().enumerate() {
        if y.is_zero() {
            continue;
        }
        let mut basis = vec![Rat::one()];
        let mut denom = Rat::one();
        for (j, x) in xs.iter().enumerate() {
            if j == i {
                continue;
            }
            basis = mul(&basis, &[-x.clone(), Rat::one()]);
            denom *= &xs[i] - x;
        }
        out = add(&out, &scale(&basis, &(y / denom)));
    }
    trim(out)
}

/// Monic gcd (or zero when both inputs are zero).
pub fn gcd(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !is_zero(&y) {
        let (_, r) = divrem(&x, &y);
        x = y;
        y = r;
    }
    match deg(&x) {
        None => Vec::new(),
        Some(d) => {
            let lead = x[d].clone();
            scale(&x, &(Rat::one() / lead))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn p(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&c| rat(c)).collect()
    }

    #[test]
    fn division_reconstructs_product() {
        let a = p(&[1, 0, -3, 2]);
        let b = p(&[-1, 1]);
        let prod = mul(&a, &b);
        let (q, r) = divrem(&prod, &b);
        assert!(is_zero(&r));
        assert_eq!(q, a);
    }

    #[test]
    fn gcd_picks_common_factor() {
        let common = p(&[-2, 1]);
        let a = mul(&common, &p(&[1, 1]));
        let b = mul(&common, &p(&[3, 0, 1]));
        assert_eq!(gcd(&a, &b), p(&[-2, 1]));
        assert!(is_zero(&gcd(&[], &[])));
    }

    #[test]
    fn eval_and_derivative() {
        let f = p(&[1, 2, 3]);
        assert_eq!(eval(&f, &rat(2)), rat(17));
        assert_eq!(derivative(&f), p(&[2, 6]));
    }

    #[test]
    fn interpolation_recovers_samples() {
        let f = p(&[3, 0, -2, 0, 0, 1]);
        let xs: Vec<Rat> = (0..6).map(rat).collect();
        let ys: Vec<Rat> = xs.iter().map(|x| eval(&f, x)).collect();
        assert_eq!(interpolate(&xs, &ys), f);
    }
}
