//! The discriminant restricted to a pencil of cubics. Substituting the
//! linear parameter into each coefficient turns the degree-4 and degree-6
//! invariants into binary forms, and 64 S^3 - T^2 into a binary form of
//! degree 12 whose roots are the singular members.

use super::aronhold_tables::{S_TERMS, T_TERMS};
use super::Cubic;
use crate::algebra::{rat, BinaryForm};

fn invariant_form(terms: &[([u8; 10], i64)], lin: &[BinaryForm], degree: usize) -> BinaryForm {
    let mut acc = BinaryForm::zero(degree);
    for (exps, k) in terms {
        let mut term = BinaryForm::new(vec![rat(*k)]);
        for (l, &e) in lin.iter().zip(exps.iter()) {
            for _ in 0..e {
                term = term.mul(l);
            }
        }
        acc = acc.add(&term);
    }
    acc
}

/// The discriminant of t0*c0 + t1*c1 as a binary form in (t0, t1) of
/// degree 12. Identically zero exactly when every member is singular.
pub fn pencil_disc(c0: &Cubic, c1: &Cubic) -> BinaryForm {
    let lin: Vec<BinaryForm> = (0..10)
        .map(|i| BinaryForm::linear(c0.coeffs()[i].clone(), c1.coeffs()[i].clone()))
        .collect();
    let s = invariant_form(S_TERMS, &lin, 4);
    let t = invariant_form(T_TERMS, &lin, 6);
    s.mul(&s).mul(&s).scale(&rat(64)).sub(&t.mul(&t))
}
