//! Plane cubics through eight marked points. Eight points in suitably
//! general position impose independent conditions on cubics, leaving a
//! pencil; the discriminant of that pencil is a degree-12 binary form
//! whose rational roots locate the singular members. Everything here is
//! exact rational arithmetic.

mod aronhold_tables;
pub mod classify;
pub mod count;
pub mod disc;
pub mod factor;

pub use classify::classify_singular;
pub use count::{
    cayley_bacharach, count_rational, multiplicity_probe, nonreduced_base_locus, BaseLocus,
    MemberReport, PencilError, PencilIntersection, ReducibleCount,
};
pub use disc::pencil_disc;
pub use factor::{factor_cubic, Factorization, MemberFactor, SingularCubicType};

use crate::algebra::{
    matrix::RatMatrix, primitive_integer_vector, rat, Field, Int, MultiPoly, Rat,
};
use crate::realization::{veronese2, Configuration, DegenerateInput};
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Exponent triples of the ten cubic monomials, in the fixed order
/// x0^3, x0^2 x1, x0^2 x2, x0 x1^2, x0 x1 x2, x0 x2^2, x1^3, x1^2 x2,
/// x1 x2^2, x2^3.
pub const CUBIC_MONOMIALS: [[u8; 3]; 10] = [
    [3, 0, 0],
    [2, 1, 0],
    [2, 0, 1],
    [1, 2, 0],
    [1, 1, 1],
    [1, 0, 2],
    [0, 3, 0],
    [0, 2, 1],
    [0, 1, 2],
    [0, 0, 3],
];

pub fn cubic_monomial_index(e: &[u8; 3]) -> usize {
    CUBIC_MONOMIALS
        .iter()
        .position(|m| m == e)
        .expect("exponents of a cubic monomial")
}

/// The ten degree-3 monomials evaluated at a point, in coefficient order.
pub fn veronese3<F: Field>(p: &[F; 3]) -> Vec<F> {
    CUBIC_MONOMIALS
        .iter()
        .map(|e| {
            let mut v = F::one();
            for (x, &k) in p.iter().zip(e.iter()) {
                for _ in 0..k {
                    v = v * x.clone();
                }
            }
            v
        })
        .collect()
}

/// A ternary cubic form, stored by its ten coefficients in the order of
/// `CUBIC_MONOMIALS`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cubic {
    coeffs: Vec<Rat>,
}

impl Cubic {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert_eq!(coeffs.len(), 10, "a cubic has ten coefficients");
        Cubic { coeffs }
    }

    pub fn from_integers(c: &[i64]) -> Self {
        assert_eq!(c.len(), 10);
        Cubic::new(c.iter().map(|&v| rat(v)).collect())
    }

    pub fn zero() -> Self {
        Cubic::new(vec![Rat::zero(); 10])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn eval<F: Field>(&self, p: &[F; 3]) -> F {
        let mut acc = F::zero();
        for (c, v) in self.coeffs.iter().zip(veronese3(p)) {
            acc = acc + F::from_rat(c) * v;
        }
        acc
    }

    /// a*c0 + b*c1, the pencil member at parameter [a : b].
    pub fn combine(a: &Rat, c0: &Cubic, b: &Rat, c1: &Cubic) -> Cubic {
        let coeffs = c0
            .coeffs
            .iter()
            .zip(c1.coeffs.iter())
            .map(|(x, y)| a * x + b * y)
            .collect();
        Cubic::new(coeffs)
    }

    /// The three partial derivatives, each a quadric in the six-coefficient
    /// order x0^2, x0 x1, x0 x2, x1^2, x1 x2, x2^2.
    pub fn partials(&self) -> [Vec<Rat>; 3] {
        let mut out = [
            vec![Rat::zero(); 6],
            vec![Rat::zero(); 6],
            vec![Rat::zero(); 6],
        ];
        for (i, e) in CUBIC_MONOMIALS.iter().enumerate() {
            for var in 0..3 {
                if e[var] == 0 {
                    continue;
                }
                let mut d = *e;
                d[var] -= 1;
                let j = quadric_monomial_index(&d);
                out[var][j] = &out[var][j] + &(&self.coeffs[i] * rat(e[var] as i64));
            }
        }
        out
    }

    pub fn gradient<F: Field>(&self, p: &[F; 3]) -> [F; 3] {
        let parts = self.partials();
        let v = veronese2(p);
        let mut out = [F::zero(), F::zero(), F::zero()];
        for var in 0..3 {
            let mut acc = F::zero();
            for (c, m) in parts[var].iter().zip(v.iter()) {
                acc = acc + F::from_rat(c) * m.clone();
            }
            out[var] = acc;
        }
        out
    }

    pub fn to_poly(&self) -> MultiPoly {
        let mut f = MultiPoly::zero(3);
        for (c, e) in self.coeffs.iter().zip(CUBIC_MONOMIALS.iter()) {
            if !c.is_zero() {
                f = f.add(&MultiPoly::monomial(3, e, c.clone()));
            }
        }
        f
    }

    /// Reads back a homogeneous degree-3 polynomial in three variables.
    pub fn from_poly(f: &MultiPoly) -> Self {
        assert_eq!(f.nvars(), 3);
        let mut coeffs = vec![Rat::zero(); 10];
        for (e, c) in f.terms() {
            assert_eq!(e.iter().map(|&k| k as u32).sum::<u32>(), 3, "not a cubic");
            coeffs[cubic_monomial_index(&[e[0], e[1], e[2]])] = c.clone();
        }
        Cubic::new(coeffs)
    }

    /// The composite C(M x) for an invertible coordinate change M.
    pub fn substitute(&self, m: &RatMatrix) -> Cubic {
        assert_eq!((m.nrows(), m.ncols()), (3, 3));
        let images: Vec<MultiPoly> = (0..3)
            .map(|row| {
                let mut f = MultiPoly::zero(3);
                for col in 0..3 {
                    let mut e = [0u8; 3];
                    e[col] = 1;
                    f = f.add(&MultiPoly::monomial(3, &e, m.at(row, col).clone()));
                }
                f
            })
            .collect();
        Cubic::from_poly(&self.to_poly().substitute_linear(&images))
    }

    /// Integer coefficients cleared of content, first nonzero positive.
    pub fn primitive(&self) -> Vec<Int> {
        primitive_integer_vector(&self.coeffs)
    }

    pub fn normalized(&self) -> Cubic {
        Cubic::new(self.primitive().into_iter().map(Rat::from).collect())
    }

    /// True when the two cubics agree up to a nonzero scalar.
    pub fn proportional(&self, other: &Cubic) -> bool {
        !self.is_zero() && !other.is_zero() && self.primitive() == other.primitive()
    }
}

impl fmt::Display for Cubic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", poly_text(&self.to_poly()))
    }
}

const VAR_NAMES: [&str; 3] = ["x0", "x1", "x2"];

/// Human-readable polynomial with explicit signs, e.g. "2*x0^2*x1 - x2^3".
pub fn poly_text(p: &MultiPoly) -> String {
    let mut s = String::new();
    for (e, c) in p.terms().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if s.is_empty() {
            if c.is_negative() {
                s.push('-');
            }
        } else {
            s.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mut parts: Vec<String> = Vec::new();
        if !mag.is_one() || e.iter().all(|&k| k == 0) {
            parts.push(mag.to_string());
        }
        for (var, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => parts.push(VAR_NAMES[var].to_string()),
                _ => parts.push(format!("{}^{}", VAR_NAMES[var], k)),
            }
        }
        s.push_str(&parts.join("*"));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// Exponent triples of the six quadric monomials, matching `veronese2`.
pub const QUADRIC_MONOMIALS: [[u8; 3]; 6] = [
    [2, 0, 0],
    [1, 1, 0],
    [1, 0, 1],
    [0, 2, 0],
    [0, 1, 1],
    [0, 0, 2],
];

pub fn quadric_monomial_index(e: &[u8; 3]) -> usize {
    QUADRIC_MONOMIALS
        .iter()
        .position(|m| m == e)
        .expect("exponents of a quadric monomial")
}

/// The degree-4 invariant of a ternary cubic, evaluated from its
/// coefficients. Normalized so that on y^2 z = x^3 + a x z^2 + b z^3 it
/// takes the value -48a.
pub fn aronhold_s(c: &Cubic) -> Rat {
    eval_invariant(aronhold_tables::S_TERMS, c.coeffs())
}

/// The degree-6 invariant, normalized to 6912b on the same curve family.
pub fn aronhold_t(c: &Cubic) -> Rat {
    eval_invariant(aronhold_tables::T_TERMS, c.coeffs())
}

/// 64 S^3 - T^2. Vanishes exactly on the singular cubics.
pub fn discriminant(c: &Cubic) -> Rat {
    let s = aronhold_s(c);
    let t = aronhold_t(c);
    rat(64) * s.clone() * s.clone() * s - t.clone() * t
}

fn eval_invariant(terms: &[([u8; 10], i64)], coeffs: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (exps, k) in terms {
        let mut term = rat(*k);
        for (c, &e) in coeffs.iter().zip(exps.iter()) {
            for _ in 0..e {
                term = term * c.clone();
            }
        }
        acc = acc + term;
    }
    acc
}

/// The linear system of cubics through the eight points: a basis of its
/// coefficient space together with the two positional degeneracies that
/// decide whether the singular members can stay finite in number.
pub struct CubicSystem {
    pub basis: Vec<Cubic>,
    /// Some four of the points lie on a line.
    pub four_collinear: bool,
    /// Some seven of the points lie on a conic, possibly a degenerate one.
    pub seven_coconic: bool,
}

impl CubicSystem {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Exactly two independent cubics: the generic situation.
    pub fn is_pencil(&self) -> bool {
        self.basis.len() == 2
    }
}

/// Interpolates the cubics vanishing on all eight points, reporting the
/// collinearity and co-conic degeneracies alongside. The system dimension
/// exceeds 2 only under those degeneracies.
pub fn cubic_system(p: &Configuration) -> Result<CubicSystem, DegenerateInput> {
    crate::realization::check_distinct(p)?;
    let rows: Vec<Vec<Rat>> = p.points.iter().map(veronese3).collect();
    let basis: Vec<Cubic> = RatMatrix::from_rows(&rows)
        .kernel_basis()
        .into_iter()
        .map(Cubic::new)
        .collect();

    let mut four_collinear = false;
    for a in 0..8 {
        for b in a + 1..8 {
            for c in b + 1..8 {
                for d in c + 1..8 {
                    let quad: Vec<Vec<Rat>> =
                        [a, b, c, d].iter().map(|&i| p.points[i].to_vec()).collect();
                    let m = RatMatrix::from_rows(&quad);
                    if m.rank() <= 2 {
                        four_collinear = true;
                    }
                }
            }
        }
    }
    let mut seven_coconic = false;
    for skip in 0..8 {
        let rows: Vec<Vec<Rat>> = (0..8)
            .filter(|&i| i != skip)
            .map(|i| veronese2(&p.points[i]))
            .collect();
        if RatMatrix::from_rows(&rows).rank() <= 5 {
            seven_coconic = true;
        }
    }
    Ok(CubicSystem {
        basis,
        four_collinear,
        seven_coconic,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn weierstrass(a: i64, b: i64) -> Cubic {
        // y^2 z - x^3 - a x z^2 - b z^3 with (x, y, z) = (x0, x1, x2)
        let mut c = vec![Rat::zero(); 10];
        c[cubic_monomial_index(&[0, 2, 1])] = rat(1);
        c[cubic_monomial_index(&[3, 0, 0])] = rat(-1);
        c[cubic_monomial_index(&[1, 0, 2])] = rat(-a);
        c[cubic_monomial_index(&[0, 0, 3])] = rat(-b);
        Cubic::new(c)
    }

    #[test]
    fn invariants_take_the_reference_values_on_weierstrass_curves() {
        for (a, b) in [(0, 1), (1, 0), (-1, 1), (2, 3), (-4, 7)] {
            let c = weierstrass(a, b);
            assert_eq!(aronhold_s(&c), rat(-48 * a));
            assert_eq!(aronhold_t(&c), rat(6912 * b));
            assert_eq!(
                discriminant(&c),
                rat(-1769472) * rat(4 * a * a * a + 27 * b * b)
            );
        }
    }

    #[test]
    fn discriminant_vanishes_exactly_on_singular_curves() {
        // cusp at (0 : 0 : 1)
        assert_eq!(discriminant(&weierstrass(0, 0)), Rat::zero());
        // node: y^2 = x^2(x + 1) has a = -1/3, b = 2/27 after centering,
        // easier checked directly on x0 x1^2 - x2^2 (x2 - x0)
        let nodal = Cubic::from_poly(
            &MultiPoly::monomial(3, &[1, 2, 0], rat(1))
                .sub(&MultiPoly::monomial(3, &[0, 0, 3], rat(1)))
                .add(&MultiPoly::monomial(3, &[1, 0, 2], rat(1))),
        );
        assert_eq!(discriminant(&nodal), Rat::zero());
        assert!(!discriminant(&weierstrass(-1, 0)).is_zero());
    }

    #[test]
    fn invariants_scale_with_the_right_weights() {
        let c = weierstrass(2, -5);
        let scaled = Cubic::new(c.coeffs().iter().map(|x| x * rat(3)).collect());
        assert_eq!(aronhold_s(&scaled), rat(81) * aronhold_s(&c));
        assert_eq!(aronhold_t(&scaled), rat(729) * aronhold_t(&c));
    }

    #[test]
    fn substitution_is_a_right_action_on_coefficients() {
        let c = weierstrass(1, 2);
        let m = RatMatrix::from_rows(&[
            vec![rat(1), rat(2), rat(0)],
            vec![rat(0), rat(1), rat(3)],
            vec![rat(1), rat(0), rat(1)],
        ]);
        let cm = c.substitute(&m);
        // C(Mx) evaluated at e0 + e1 equals C at M(e0 + e1)
        let x = [rat(1), rat(1), rat(0)];
        let mx = [rat(3), rat(1), rat(1)];
        assert_eq!(cm.eval(&x), c.eval(&mx));
        assert_eq!(cm.to_poly().total_degree(), 3);
    }

    #[test]
    fn gradient_matches_finite_differences_of_eval() {
        let c = weierstrass(3, 1);
        let p = [rat(2), ratio(1, 3), rat(-1)];
        let g = c.gradient(&p);
        for var in 0..3 {
            // exact directional derivative via the cubic Taylor expansion:
            // C(p + t e) = C(p) + t dC + t^2 (...) + t^3 (...), solve from
            // three evaluations
            let shift = |t: i64| {
                let mut q = p.clone();
                q[var] = &q[var] + rat(t);
                c.eval(&q)
            };
            let c0 = c.eval(&p);
            let f1 = shift(1) - &c0;
            let f2 = shift(2) - &c0;
            let f3 = shift(3) - &c0;
            // f(t) = a t + b t^2 + c t^3; a = 3f1 - 3/2 f2 + 1/3 f3
            let a = rat(3) * f1 - ratio(3, 2) * f2 + ratio(1, 3) * f3;
            assert_eq!(g[var], a);
        }
    }

    #[test]
    fn eight_generic_points_leave_a_pencil() {
        let p: Configuration = "1 0 0 1 1 2 3 4 / 0 1 0 1 2 1 5 1 / 0 0 1 1 3 5 1 2"
            .parse()
            .unwrap();
        let sys = cubic_system(&p).unwrap();
        assert!(sys.is_pencil());
        assert!(!sys.four_collinear && !sys.seven_coconic);
        for c in &sys.basis {
            for pt in &p.points {
                assert!(c.eval(pt).is_zero());
            }
        }
    }

    #[test]
    fn four_collinear_points_inflate_the_system() {
        // four on a line still give a pencil, but one with the line as a
        // fixed component; five on a line grow the system itself
        let p: Configuration = "1 2 3 4 1 0 1 2 / 0 0 0 0 1 1 2 3 / 1 1 1 1 0 1 5 7"
            .parse()
            .unwrap();
        let sys = cubic_system(&p).unwrap();
        assert!(sys.four_collinear);
        assert_eq!(sys.dimension(), 2);
        let q: Configuration = "1 2 3 4 5 0 1 2 / 0 0 0 0 0 1 2 3 / 1 1 1 1 1 1 5 7"
            .parse()
            .unwrap();
        let big = cubic_system(&q).unwrap();
        assert!(big.four_collinear);
        assert_eq!(big.dimension(), 3);
        assert!(!big.is_pencil());
    }

    #[test]
    fn poly_text_spells_out_signs_and_powers() {
        let f = MultiPoly::monomial(3, &[2, 1, 0], rat(2))
            .sub(&MultiPoly::monomial(3, &[0, 0, 3], rat(1)));
        assert_eq!(poly_text(&f), "2*x0^2*x1 - x2^3");
    }
}
