//! Sparse multivariate polynomials over the rationals with a fixed number
//! of variables. Enough arithmetic for ternary cubic manipulation and for
//! deciding whether a determinant restricted to a kernel vanishes
//! identically.

use super::Rat;
use num_traits::Zero;
use std::collections::BTreeMap;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u8>, Rat>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u8; nvars];
        e[i] = 1;
        let mut p = MultiPoly::zero(nvars);
        p.terms.insert(e, Rat::from_integer(super::int(1)));
        p
    }

    pub fn monomial(nvars: usize, exps: &[u8], c: Rat) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = MultiPoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps.to_vec(), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u8>, &Rat)> {
        self.terms.iter()
    }

    pub fn total_degree(&self) -> usize {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| x as usize).sum())
            .max()
            .unwrap_or(0)
    }

    fn insert(&mut self, e: Vec<u8>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), -c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rat) -> Self {
        if s.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c * s);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let e: Vec<u8> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.insert(e, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::constant(self.nvars, Rat::from_integer(super::int(1)));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        assert!(i < self.nvars);
        let mut out = MultiPoly::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.insert(e2, c * Rat::from_integer(super::int(e[i] as i64)));
        }
        out
    }

    pub fn eval(&self, xs: &[Rat]) -> Rat {
        assert_eq!(xs.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    t *= &xs[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Substitute each variable by a linear form in a new set of variables.
    pub fn substitute_linear(&self, forms: &[MultiPoly]) -> Self {
        assert_eq!(forms.len(), self.nvars);
        let out_vars = forms
            .first()
            .map(|f| f.nvars)
            .unwrap_or(self.nvars);
        let mut acc = MultiPoly::zero(out_vars);
        for (e, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (i, &p) in e.iter().enumerate() {
                for _ in 0..p {
                    term = term.mul(&forms[i]);
                }
            }
            acc = acc.add(&term);
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn product_rule_and_eval_agree() {
        let n = 3;
        let x = MultiPoly::var(n, 0);
        let y = MultiPoly::var(n, 1);
        let z = MultiPoly::var(n, 2);
        let f = x.mul(&y).add(&z.pow(2)).sub(&MultiPoly::constant(n, rat(4)));
        let pt = [rat(2), rat(3), rat(-1)];
        assert_eq!(f.eval(&pt), rat(2 * 3 + 1 - 4));
        assert_eq!(f.derivative(2).eval(&pt), rat(-2));
    }

    #[test]
    fn substitution_into_linear_forms() {
        let f = MultiPoly::var(2, 0).mul(&MultiPoly::var(2, 1)); // x*y
        // x -> s + t, y -> s - t gives s^2 - t^2
        let s_plus_t = MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1));
        let s_minus_t = MultiPoly::var(2, 0).sub(&MultiPoly::var(2, 1));
        let g = f.substitute_linear(&[s_plus_t, s_minus_t]);
        let expect = MultiPoly::var(2, 0)
            .pow(2)
            .sub(&MultiPoly::var(2, 1).pow(2));
        assert_eq!(g, expect);
    }

    #[test]
    fn cancellation_removes_terms() {
        let x = MultiPoly::var(1, 0);
        let z = x.sub(&x);
        assert!(z.is_zero());
        assert_eq!(z.total_degree(), 0);
    }
}
