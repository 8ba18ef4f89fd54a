//! Complete rational root extraction for binary forms. Squarefree parts of
//! degree at most two are solved directly; higher degrees go through a
//! single word-sized prime: roots are found over F_p, Newton-lifted to a
//! modulus exceeding the coefficient bounds, reconstructed as fractions,
//! and then verified exactly, so no true root can be missed and no false
//! one can survive.

use super::modp;
use super::{BinaryForm, Int};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A projective root [a : b], normalized: gcd(a, b) = 1 and b > 0, except
/// the point at t1 = 0 which is stored as (1, 0).
pub type Root = (Int, Int);

fn normalize_root(a: Int, b: Int) -> Root {
    if b.is_zero() {
        assert!(!a.is_zero());
        return (Int::one(), Int::zero());
    }
    let mut a = a;
    let mut b = b;
    if b.is_negative() {
        a = -a;
        b = -b;
    }
    let g = a.gcd(&b);
    if !g.is_zero() && !g.is_one() {
        a = &a / &g;
        b = &b / &g;
    }
    (a, b)
}

/// All rational projective roots of a nonzero form, with multiplicities,
/// sorted by (b == 0, a/b ascending) so output order is deterministic.
pub fn rational_roots(f: &BinaryForm) -> Vec<(Root, u32)> {
    assert!(!f.is_zero(), "roots of the zero form");
    let mut out: Vec<(Root, u32)> = Vec::new();
    for (part, mult) in f.squarefree_decomposition() {
        for root in roots_of_squarefree(&part) {
            out.push((root, mult));
        }
    }
    out.sort_by(|((a1, b1), _), ((a2, b2), _)| {
        let inf1 = b1.is_zero();
        let inf2 = b2.is_zero();
        inf1.cmp(&inf2).then_with(|| {
            if inf1 {
                std::cmp::Ordering::Equal
            } else {
                (a1 * b2).cmp(&(a2 * b1))
            }
        })
    });
    out
}

fn roots_of_squarefree(g: &BinaryForm) -> Vec<Root> {
    let mut c = g.primitive_integer();
    let mut out = Vec::new();
    // f = sum c_k t0^(d-k) t1^k, so a zero leading coefficient means t1
    // divides (root [1:0]) and a zero trailing one means t0 divides (root
    // [0:1]); squarefree input carries each factor at most once
    if c.len() > 1 && c[0].is_zero() {
        out.push((Int::one(), Int::zero()));
        c.remove(0);
    }
    if c.len() > 1 && c[c.len() - 1].is_zero() {
        out.push((Int::zero(), Int::one()));
        c.pop();
    }
    match c.len() - 1 {
        0 => {}
        1 => {
            // c0 t0 + c1 t1 vanishes at [-c1 : c0]
            out.push(normalize_root(-c[1].clone(), c[0].clone()));
        }
        2 => out.extend(quadratic_roots(&c)),
        _ => out.extend(high_degree_roots(&c)),
    }
    out
}

fn exact_sqrt(n: &Int) -> Option<Int> {
    if n.is_negative() {
        return None;
    }
    let s = n.sqrt();
    if &(&s * &s) == n {
        Some(s)
    } else {
        None
    }
}

/// Roots of c0 t0^2 + c1 t0 t1 + c2 t1^2 with integer coefficients.
fn quadratic_roots(c: &[Int]) -> Vec<Root> {
    // In u = t1/t0 this is c2 u^2 + c1 u + c0; squarefree parts have
    // nonzero ends, but stay defensive about c2 = 0.
    if c[2].is_zero() {
        if c[1].is_zero() {
            return Vec::new();
        }
        // t0 divides: roots are [0 : 1] and the linear factor's [-c1 : c0]
        return vec![
            normalize_root(-c[1].clone(), c[0].clone()),
            (Int::zero(), Int::one()),
        ];
    }
    let disc = &c[1] * &c[1] - Int::from(4) * &c[0] * &c[2];
    let Some(s) = exact_sqrt(&disc) else {
        return Vec::new();
    };
    let two_c2 = Int::from(2) * &c[2];
    let u1 = (-&c[1] + &s, two_c2.clone());
    let u2 = (-&c[1] - &s, two_c2);
    // u = a/b means the projective root is [b : a]
    let mut out = vec![
        normalize_root(u1.1.clone(), u1.0.clone()),
        normalize_root(u2.1.clone(), u2.0.clone()),
    ];
    out.dedup();
    out
}

/// Degree >= 3 squarefree primitive integer coefficients, nonzero ends.
fn high_degree_roots(c: &[Int]) -> Vec<Root> {
    let n = c.len() - 1;
    // dehomogenized g(u) = sum c_k u^k, constant and leading terms nonzero
    debug_assert!(!c[0].is_zero() && !c[n].is_zero());
    let (p, gp) = modp::suitable_prime(c);
    let residues = modp::roots_mod_p(&gp, p);
    if residues.is_empty() {
        return Vec::new();
    }
    // any root a/b in lowest terms has a | c_0 and b | c_n
    let num_bound = c[0].abs();
    let den_bound = c[n].abs();
    let target = Int::from(2) * &num_bound * &den_bound;
    let deriv: Vec<Int> = c
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, v)| Int::from(i as u64) * v)
        .collect();
    let mut out = Vec::new();
    for r0 in residues {
        let mut modulus = Int::from(p);
        let mut r = Int::from(r0);
        while modulus <= target {
            let m2 = &modulus * &modulus;
            let gval = eval_mod(c, &r, &m2);
            let dval = eval_mod(&deriv, &r, &m2);
            let dinv = match invert_mod(&dval, &m2) {
                Some(v) => v,
                None => break, // cannot happen for squarefree reductions
            };
            r = (&r - gval * dinv).mod_floor(&m2);
            modulus = m2;
        }
        if modulus <= target {
            continue;
        }
        let Some((a, b)) = modp::reconstruct_rational(&r, &modulus, &num_bound, &den_bound) else {
            continue;
        };
        if b.is_zero() {
            continue;
        }
        // exact verification: sum c_k a^k b^(n-k) = 0
        if homogeneous_eval(c, &a, &b).is_zero() {
            // u-root a/b corresponds to projective root [b : a]
            let root = normalize_root(b, a);
            if !out.contains(&root) {
                out.push(root);
            }
        }
    }
    out
}

fn eval_mod(c: &[Int], x: &Int, m: &Int) -> Int {
    let mut acc = Int::zero();
    for k in c.iter().rev() {
        acc = (acc * x + k).mod_floor(m);
    }
    acc
}

fn invert_mod(a: &Int, m: &Int) -> Option<Int> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn homogeneous_eval(c: &[Int], a: &Int, b: &Int) -> Int {
    let n = c.len() - 1;
    let mut pa = vec![Int::one()];
    let mut pb = vec![Int::one()];
    for _ in 0..n {
        pa.push(pa.last().unwrap() * a);
        pb.push(pb.last().unwrap() * b);
    }
    let mut acc = Int::zero();
    for (k, v) in c.iter().enumerate() {
        acc += v * &pa[k] * &pb[n - k];
    }
    acc
}
