//! Arithmetic modulo a word-sized prime, plus the polynomial routines used
//! to locate candidate rational roots: root finding over F_p by
//! distinct-degree splitting, followed elsewhere by Hensel lifting.

use super::Int;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn addmod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

pub fn submod(a: u64, b: u64, p: u64) -> u64 {
    addmod(a, p - b % p, p)
}

pub fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

pub fn invmod(a: u64, p: u64) -> u64 {
    // p prime, a nonzero mod p
    powmod(a, p - 2, p)
}

/// Deterministic Miller-Rabin, complete for 64-bit inputs with this base set.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &q in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d & 1 == 0 {
        d >>= 1;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn reduce_int(x: &Int, p: u64) -> u64 {
    let m = x.mod_floor(&Int::from(p));
    m.to_u64().expect("reduced residue fits u64")
}

// ----- dense polynomials over F_p, little-endian -----

pub fn ptrim(mut v: Vec<u64>) -> Vec<u64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub fn pdeg(v: &[u64]) -> Option<usize> {
    v.iter().rposition(|&c| c != 0)
}

pub fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            if y != 0 {
                out[i + j] = addmod(out[i + j], mulmod(x, y, p), p);
            }
        }
    }
    ptrim(out)
}

pub fn prem(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let dd = pdeg(den).expect("polynomial division by zero");
    let lead_inv = invmod(den[dd], p);
    let mut rem = num.to_vec();
    while let Some(dr) = pdeg(&rem) {
        if dr < dd {
            break;
        }
        let f = mulmod(rem[dr], lead_inv, p);
        let shift = dr - dd;
        for i in 0..=dd {
            rem[shift + i] = submod(rem[shift + i], mulmod(f, den[i], p), p);
        }
    }
    ptrim(rem)
}

pub fn pgcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = ptrim(a.to_vec());
    let mut y = ptrim(b.to_vec());
    while !y.is_empty() {
        let r = prem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(d) = pdeg(&x) {
        let inv = invmod(x[d], p);
        x = x.iter().map(|&c| mulmod(c, inv, p)).collect();
    }
    x
}

pub fn pderiv(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return Vec::new();
    }
    ptrim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| mulmod(c, (i as u64) % p, p))
            .collect(),
    )
}

pub fn peval(f: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    for &c in f.iter().rev() {
        acc = addmod(mulmod(acc, x, p), c, p);
    }
    acc
}

/// base^e mod (f, p) where base is a polynomial.
fn ppowmod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut acc = vec![1u64];
    let mut b = prem(base, f, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = prem(&pmul(&acc, &b, p), f, p);
        }
        b = prem(&pmul(&b, &b, p), f, p);
        e >>= 1;
    }
    acc
}

/// All roots of f in F_p, for f nonzero of modest degree. Splits the
/// product of distinct linear factors with randomized gcds; the generator
/// is fixed-seeded so runs are reproducible.
pub fn roots_mod_p(f: &[u64], p: u64) -> Vec<u64> {
    let f = ptrim(f.to_vec());
    let d = match pdeg(&f) {
        None => panic!("roots of the zero polynomial"),
        Some(d) => d,
    };
    if d == 0 {
        return Vec::new();
    }
    // gcd(x^p - x, f) keeps exactly the roots in F_p
    let xp = ppowmod(&[0, 1], p, &f, p);
    let mut xpx = xp;
    if xpx.len() < 2 {
        xpx.resize(2, 0);
    }
    xpx[1] = submod(xpx[1], 1, p);
    let linear_part = pgcd(&xpx, &f, p);
    let mut rng = ChaCha8Rng::seed_from_u64(0x9e3779b97f4a7c15);
    let mut out = Vec::new();
    split_linear(&linear_part, p, &mut rng, &mut out);
    out.sort_unstable();
    out
}

fn split_linear(f: &[u64], p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<u64>) {
    let Some(d) = pdeg(f) else { return };
    if d == 0 {
        return;
    }
    if d == 1 {
        // c0 + c1 x = 0
        out.push(mulmod(submod(0, f[0], p), invmod(f[1], p), p));
        return;
    }
    // f splits into distinct linear factors; (x + c)^((p-1)/2) - 1 separates
    // roots by quadratic residuosity of root + c.
    loop {
        let c = rng.gen_range(0..p);
        let mut w = ppowmod(&[c, 1], (p - 1) / 2, f, p);
        if w.is_empty() {
            w = vec![0];
        }
        w[0] = submod(w[0], 1, p);
        let g = pgcd(&w, f, p);
        if let Some(dg) = pdeg(&g) {
            if dg > 0 && dg < d {
                let h = pdiv_exact(f, &g, p);
                split_linear(&g, p, rng, out);
                split_linear(&h, p, rng, out);
                return;
            }
        }
    }
}

fn pdiv_exact(num: &[u64], den: &[u64], p: u64) -> Vec<u64> {
    let dd = pdeg(den).unwrap();
    let lead_inv = invmod(den[dd], p);
    let mut rem = num.to_vec();
    let mut quo = vec![0u64; num.len()];
    while let Some(dr) = pdeg(&rem) {
        if dr < dd {
            break;
        }
        let f = mulmod(rem[dr], lead_inv, p);
        let shift = dr - dd;
        quo[shift] = f;
        for i in 0..=dd {
            rem[shift + i] = submod(rem[shift + i], mulmod(f, den[i], p), p);
        }
    }
    debug_assert!(ptrim(rem).is_empty());
    ptrim(quo)
}

/// First prime >= 2^62 for which the reduction of g is squarefree of full
/// degree. Such a prime exists because only finitely many divide the
/// leading coefficient or the discriminant.
pub fn suitable_prime(g: &[Int]) -> (u64, Vec<u64>) {
    let lead = g.last().expect("nonempty polynomial");
    assert!(!lead.is_zero());
    let mut p: u64 = (1u64 << 62) + 1;
    loop {
        if is_prime_u64(p) {
            let gp: Vec<u64> = g.iter().map(|c| reduce_int(c, p)).collect();
            if pdeg(&gp) == Some(g.len() - 1) {
                let d = pderiv(&gp, p);
                let gc = pgcd(&gp, &d, p);
                if pdeg(&gc) == Some(0) {
                    return (p, gp);
                }
            }
        }
        p += 2;
    }
}

/// Extended-Euclid rational reconstruction: the unique a/b with
/// a = r*b mod m, |a| <= num_bound, 0 < b <= den_bound, if one exists.
/// Requires m > 2 * num_bound * den_bound for uniqueness.
pub fn reconstruct_rational(r: &Int, m: &Int, num_bound: &Int, den_bound: &Int) -> Option<(Int, Int)> {
    let mut r0 = m.clone();
    let mut r1 = r.mod_floor(m);
    let mut t0 = Int::zero();
    let mut t1 = Int::from(1);
    while &r1 > num_bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        let t2 = &t0 - &q * &t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if t1.is_zero() {
        return None;
    }
    let (mut a, mut b) = (r1, t1);
    if b.is_negative() {
        a = -a;
        b = -b;
    }
    if b > *den_bound {
        return None;
    }
    let g = a.gcd(&b);
    if !g.is_zero() {
        a = &a / &g;
        b = &b / &g;
    }
    Some((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_and_modular_inverse() {
        assert!(is_prime_u64(2305843009213693951)); // 2^61 - 1
        assert!(!is_prime_u64((1u64 << 62) - 1));
        let p = 1000000007u64;
        for a in [2u64, 999999999, 123456789] {
            assert_eq!(mulmod(a, invmod(a, p), p), 1);
        }
    }

    #[test]
    fn roots_of_a_factored_polynomial() {
        let p = 1000003u64;
        // (x - 3)(x - 7)(x^2 + 1), and x^2 + 1 has roots iff p = 1 mod 4
        let f = {
            let a = vec![p - 3, 1];
            let b = vec![p - 7, 1];
            let c = vec![1, 0, 1];
            pmul(&pmul(&a, &b, p), &c, p)
        };
        let mut roots = roots_mod_p(&f, p);
        assert!(roots.contains(&3) && roots.contains(&7));
        roots.retain(|&r| r != 3 && r != 7);
        for r in roots {
            assert_eq!(peval(&[1, 0, 1], r, p), 0);
        }
    }

    #[test]
    fn reconstruction_round_trip() {
        let m = Int::from(1000000007u64) * Int::from(998244353u64);
        let a = Int::from(-1234567i64);
        let b = Int::from(891011i64);
        let binv = {
            // b^{-1} mod m via extended gcd
            let e = b.extended_gcd(&m);
            e.x.mod_floor(&m)
        };
        let r = (a.mod_floor(&m) * binv).mod_floor(&m);
        let (ra, rb) =
            reconstruct_rational(&r, &m, &Int::from(10_000_000i64), &Int::from(1_000_000i64))
                .unwrap();
        assert_eq!(ra * b, rb * a);
    }
}
