//! Homogeneous binary forms over the rationals. Coefficient k multiplies
//! t0^(d-k) t1^k, so dehomogenizing at t0 = 1 is just reading the vector as
//! a little-endian univariate polynomial in u = t1/t0.

use super::{primitive_integer_vector, upoly, Int, Rat};
use num_traits::Zero;
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinaryForm {
    coeffs: Vec<Rat>,
}

impl BinaryForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a form needs a declared degree");
        BinaryForm { coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm {
            coeffs: vec![Rat::zero(); degree + 1],
        }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        BinaryForm::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    /// The linear form a*t0 + b*t1.
    pub fn linear(a: Rat, b: Rat) -> Self {
        BinaryForm::new(vec![a, b])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rat {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn eval(&self, t0: &Rat, t1: &Rat) -> Rat {
        let d = self.degree();
        let mut p0 = vec![Rat::from_integer(Int::from(1))];
        let mut p1 = vec![Rat::from_integer(Int::from(1))];
        for _ in 0..d {
            p0.push(p0.last().unwrap() * t0);
            p1.push(p1.last().unwrap() * t1);
        }
        let mut acc = Rat::zero();
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc += c * &p0[d - k] * &p1[k];
            }
        }
        acc
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in add");
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in sub");
        BinaryForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = vec![Rat::zero(); self.degree() + other.degree() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        BinaryForm::new(out)
    }

    pub fn scale(&self, s: &Rat) -> Self {
        BinaryForm::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = BinaryForm::new(vec![Rat::from_integer(Int::from(1))]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Content-1 integer coefficients with positive leading nonzero entry.
    pub fn primitive_integer(&self) -> Vec<Int> {
        primitive_integer_vector(&self.coeffs)
    }

    pub fn normalized(&self) -> Self {
        BinaryForm::new(
            self.primitive_integer()
                .into_iter()
                .map(Rat::from_integer)
                .collect(),
        )
    }

    /// Exact division by the linear factor vanishing at the root [a : b],
    /// that is by b*t0 - a*t1. None if the division leaves a remainder.
    pub fn divide_root(&self, a: &Int, b: &Int) -> Option<Self> {
        let d = self.degree();
        if d == 0 {
            return None;
        }
        let av = Rat::from_integer(a.clone());
        let bv = Rat::from_integer(b.clone());
        // Synthetic division front to back when b != 0, back to front otherwise.
        let mut q = vec![Rat::zero(); d];
        if !b.is_zero() {
            // self = (b t0 - a t1) * q  =>  c_k = b q_k - a q_{k-1}
            let mut prev = Rat::zero();
            for k in 0..d {
                let t = (&self.coeffs[k] + &av * &prev) / &bv;
                q[k] = t.clone();
                prev = t;
            }
            // remainder check: c_d must equal -a q_{d-1}
            if self.coeffs[d] != -&av * &q[d - 1] {
                return None;
            }
        } else {
            // factor is -a t1 (a != 0): requires c_0 = 0
            if !self.coeffs[0].is_zero() {
                return None;
            }
            for k in 0..d {
                q[k] = &self.coeffs[k + 1] / &(-&av);
            }
        }
        Some(BinaryForm::new(q))
    }

    /// Multiplicity of the root [a : b].
    pub fn root_multiplicity(&self, a: &Int, b: &Int) -> u32 {
        let mut m = 0;
        let mut f = self.clone();
        while let Some(next) = f.divide_root(a, b) {
            m += 1;
            if next.degree() == 0 {
                break;
            }
            f = next;
        }
        m
    }

    fn strip(&self) -> (usize, usize, Vec<Rat>) {
        let lo = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .expect("strip of zero form");
        let hi = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap();
        (lo, self.degree() - hi, self.coeffs[lo..=hi].to_vec())
    }

    fn rehomogenize(p: &[Rat]) -> Self {
        BinaryForm::new(p.to_vec())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.normalized();
        }
        if other.is_zero() {
            return self.normalized();
        }
        let (lo_a, hi_a, core_a) = self.strip();
        let (lo_b, hi_b, core_b) = other.strip();
        let g = upoly::gcd(&core_a, &core_b);
        let mut out = BinaryForm::rehomogenize(&g);
        let t1 = BinaryForm::from_integers(&[0, 1]);
        let t0 = BinaryForm::from_integers(&[1, 0]);
        out = out.mul(&t1.pow(lo_a.min(lo_b) as u32));
        out = out.mul(&t0.pow(hi_a.min(hi_b) as u32));
        out.normalized()
    }

    /// Yun decomposition into pairwise coprime squarefree parts with their
    /// multiplicities, multiplicity ascending. Linear factors t0 and t1 are
    /// reported like any other factor. Degree-zero inputs give an empty list.
    pub fn squarefree_decomposition(&self) -> Vec<(BinaryForm, u32)> {
        assert!(!self.is_zero(), "squarefree decomposition of zero");
        if self.degree() == 0 {
            return Vec::new();
        }
        let (lo, hi, core) = self.strip();
        let mut parts: Vec<(BinaryForm, u32)> = Vec::new();
        if core.len() > 1 {
            for (f, m) in yun(&core) {
                parts.push((BinaryForm::rehomogenize(&f).normalized(), m));
            }
        }
        if lo > 0 {
            push_merged(&mut parts, BinaryForm::from_integers(&[0, 1]), lo as u32);
        }
        if hi > 0 {
            push_merged(&mut parts, BinaryForm::from_integers(&[1, 0]), hi as u32);
        }
        parts.sort_by_key(|(_, m)| *m);
        parts
    }
}

fn push_merged(parts: &mut Vec<(BinaryForm, u32)>, f: BinaryForm, m: u32) {
    for (g, gm) in parts.iter_mut() {
        if *gm == m {
            *g = g.mul(&f).normalized();
            return;
        }
    }
    parts.push((f, m));
}

/// Yun's squarefree factorization of a nonconstant univariate polynomial.
fn yun(f: &[Rat]) -> Vec<(Vec<Rat>, u32)> {
    let df = upoly::derivative(f);
    let a0 = upoly::gcd(f, &df);
    let mut b = upoly::divrem(f, &a0).0;
    let mut c = upoly::divrem(&df, &a0).0;
    let mut d = upoly::sub(&c, &upoly::derivative(&b));
    let mut out = Vec::new();
    let mut i = 1u32;
    loop {
        let a = upoly::gcd(&b, &d);
        if upoly::deg(&a).unwrap_or(0) > 0 {
            out.push((a.clone(), i));
        }
        b = upoly::divrem(&b, &a).0;
        if upoly::deg(&b).is_none() || upoly::deg(&b) == Some(0) {
            break;
        }
        c = upoly::divrem(&d, &a).0;
        d = upoly::sub(&c, &upoly::derivative(&b));
        i += 1;
    }
    out
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.degree();
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})", c)?;
            if d - k > 0 {
                write!(f, "*t0^{}", d - k)?;
            }
            if k > 0 {
                write!(f, "*t1^{}", k)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{int, rat};

    #[test]
    fn multiplication_matches_evaluation() {
        let f = BinaryForm::from_integers(&[1, 2, 3]);
        let g = BinaryForm::from_integers(&[-1, 1]);
        let h = f.mul(&g);
        let (a, b) = (rat(5), rat(7));
        assert_eq!(h.eval(&a, &b), f.eval(&a, &b) * g.eval(&a, &b));
    }

    #[test]
    fn divide_root_inverts_linear_multiplication() {
        let f = BinaryForm::from_integers(&[2, -1, 5]);
        // root [3 : 2] corresponds to the factor 2 t0 - 3 t1
        let lin = BinaryForm::from_integers(&[2, -3]);
        let prod = f.mul(&lin);
        let q = prod.divide_root(&int(3), &int(2)).unwrap();
        assert_eq!(q, f);
        assert!(prod.divide_root(&int(1), &int(1)).is_none());
    }

    #[test]
    fn squarefree_decomposition_recovers_planted_multiplicities() {
        // t0^2 * (t0 - t1)^3 * (t0 + 2 t1)
        let t0 = BinaryForm::from_integers(&[1, 0]);
        let l1 = BinaryForm::from_integers(&[1, -1]);
        let l2 = BinaryForm::from_integers(&[1, 2]);
        let f = t0.pow(2).mul(&l1.pow(3)).mul(&l2);
        let parts = f.squarefree_decomposition();
        assert_eq!(parts.len(), 3);
        assert_eq!(parts[0], (l2.clone(), 1));
        assert_eq!(parts[1], (t0.clone(), 2));
        assert_eq!(parts[2], (l1.clone(), 3));
    }

    #[test]
    fn gcd_of_forms_with_shared_torus_and_boundary_roots() {
        let t1 = BinaryForm::from_integers(&[0, 1]);
        let l = BinaryForm::from_integers(&[1, -4]);
        let a = t1.pow(2).mul(&l).mul(&BinaryForm::from_integers(&[1, 1]));
        let b = t1.mul(&l.pow(2)).mul(&BinaryForm::from_integers(&[3, 1]));
        let g = a.gcd(&b);
        assert_eq!(g, t1.mul(&l).normalized());
    }

    #[test]
    fn root_multiplicity_counts_exactly() {
        let lin = BinaryForm::from_integers(&[1, -2]); // root [2 : 1]? eval(2,1)=1*2-2*1=0
        let f = lin.pow(3).mul(&BinaryForm::from_integers(&[1, 1]));
        assert_eq!(f.root_multiplicity(&int(2), &int(1)), 3);
        assert_eq!(f.root_multiplicity(&int(1), &int(0)), 0);
    }
}
