//! Exact factorization of pencil members. Every line component of a
//! reducible cubic through the eight points passes through at least two
//! of them (otherwise the residual conic would carry seven), so trying
//! the at most 28 lines spanned by point pairs is a complete reducibility
//! test, and the residual quadric is split by the rank of its Gram matrix.

use super::{poly_text, Cubic, QUADRIC_MONOMIALS};
use crate::algebra::{
    matrix::RatMatrix, primitive_integer_vector, rat, rational_roots, BinaryForm, MultiPoly, Rat,
};
use crate::realization::{veronese2, Configuration};
use num_traits::Zero;
use std::fmt;

/// The eight orbits of singular plane cubics under linear changes of
/// coordinates, ordered by how degenerate they are.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum SingularCubicType {
    Nodal,
    Cuspidal,
    ConicSecant,
    ConicTangent,
    Triangle,
    Asterisk,
    DoubleLinePlusLine,
    TripleLine,
}

impl SingularCubicType {
    /// Multiplicity of a cubic of this type as a point of the degree-12
    /// discriminant hypersurface.
    pub fn multiplicity(&self) -> u32 {
        match self {
            SingularCubicType::Nodal => 1,
            SingularCubicType::Cuspidal => 2,
            SingularCubicType::ConicSecant => 2,
            SingularCubicType::ConicTangent => 3,
            SingularCubicType::Triangle => 3,
            SingularCubicType::Asterisk => 4,
            SingularCubicType::DoubleLinePlusLine => 6,
            SingularCubicType::TripleLine => 8,
        }
    }

    /// Nodal and cuspidal cubics are irreducible; the rest factor.
    pub fn reducible(&self) -> bool {
        !matches!(
            self,
            SingularCubicType::Nodal | SingularCubicType::Cuspidal
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            SingularCubicType::Nodal => "nodal cubic",
            SingularCubicType::Cuspidal => "cuspidal cubic",
            SingularCubicType::ConicSecant => "conic + secant line",
            SingularCubicType::ConicTangent => "conic + tangent line",
            SingularCubicType::Triangle => "triangle",
            SingularCubicType::Asterisk => "asterisk",
            SingularCubicType::DoubleLinePlusLine => "double line + line",
            SingularCubicType::TripleLine => "triple line",
        }
    }
}

impl fmt::Display for SingularCubicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One irreducible factor of a member over Q: a line, or a quadric that
/// is either an irreducible conic or an irrational pair of lines.
#[derive(Clone, PartialEq, Debug)]
pub struct MemberFactor {
    pub poly: MultiPoly,
    pub multiplicity: u32,
}

impl fmt::Display for MemberFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplicity == 1 {
            write!(f, "({})", poly_text(&self.poly))
        } else {
            write!(f, "({})^{}", poly_text(&self.poly), self.multiplicity)
        }
    }
}

#[derive(Clone, PartialEq, Debug)]
pub enum Factorization {
    Irreducible,
    Reducible {
        kind: SingularCubicType,
        factors: Vec<MemberFactor>,
    },
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factorization::Irreducible => f.write_str("irreducible"),
            Factorization::Reducible { kind, factors } => {
                let parts: Vec<String> = factors.iter().map(|x| x.to_string()).collect();
                write!(f, "{} = {}", kind, parts.join(" * "))
            }
        }
    }
}

pub fn cross(a: &[Rat; 3], b: &[Rat; 3]) -> [Rat; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn rat_vec(ints: Vec<crate::algebra::Int>) -> Vec<Rat> {
    ints.into_iter().map(Rat::from).collect()
}

pub fn line_poly(l: &[Rat]) -> MultiPoly {
    let mut f = MultiPoly::zero(3);
    for (i, c) in l.iter().enumerate() {
        if !c.is_zero() {
            let mut e = [0u8; 3];
            e[i] = 1;
            f = f.add(&MultiPoly::monomial(3, &e, c.clone()));
        }
    }
    f
}

pub fn quadric_poly(q: &[Rat]) -> MultiPoly {
    let mut f = MultiPoly::zero(3);
    for (e, c) in QUADRIC_MONOMIALS.iter().zip(q.iter()) {
        if !c.is_zero() {
            f = f.add(&MultiPoly::monomial(3, e, c.clone()));
        }
    }
    f
}

pub fn quadric_eval(q: &[Rat], p: &[Rat; 3]) -> Rat {
    q.iter()
        .zip(veronese2(p))
        .map(|(c, m)| c * &m)
        .fold(Rat::zero(), |a, b| a + b)
}

/// Twice the symmetric Gram matrix of a quadric; same rank, no halves.
pub fn quadric_gram(q: &[Rat]) -> RatMatrix {
    let two = |i: usize| &q[i] + &q[i];
    RatMatrix::from_rows(&[
        vec![two(0), q[1].clone(), q[2].clone()],
        vec![q[1].clone(), two(3), q[4].clone()],
        vec![q[2].clone(), q[4].clone(), two(5)],
    ])
}

/// Factor structure of a nonzero quadric over Q, decided by Gram rank.
#[derive(Clone, PartialEq, Debug)]
pub enum QuadricSplit {
    /// Rank 3: an irreducible conic.
    Irreducible,
    /// Rank 2 with rational branches: two distinct lines.
    Lines([Vec<Rat>; 2]),
    /// Rank 2, branches conjugate over a quadratic extension; the stored
    /// point is where the two lines cross.
    ConjugatePair { singular: [Rat; 3] },
    /// Rank 1: a doubled line.
    DoubleLine(Vec<Rat>),
}

pub fn split_quadric(q: &[Rat]) -> QuadricSplit {
    assert!(q.iter().any(|c| !c.is_zero()), "zero quadric");
    let gram = quadric_gram(q);
    match gram.rank() {
        3 => QuadricSplit::Irreducible,
        2 => {
            let v = gram
                .kernel_basis()
                .into_iter()
                .next()
                .expect("rank 2 leaves a kernel");
            let s: [Rat; 3] = [v[0].clone(), v[1].clone(), v[2].clone()];
            let k = (0..3).find(|&i| !s[i].is_zero()).unwrap();
            let [i, j] = match k {
                0 => [1usize, 2],
                1 => [0, 2],
                _ => [0, 1],
            };
            let unit = |t: usize| {
                let mut v = [Rat::zero(), Rat::zero(), Rat::zero()];
                v[t] = rat(1);
                v
            };
            let (p0, p1) = (unit(i), unit(j));
            let alpha = quadric_eval(q, &p0);
            let gamma = quadric_eval(q, &p1);
            let both = [
                &p0[0] + &p1[0],
                &p0[1] + &p1[1],
                &p0[2] + &p1[2],
            ];
            let beta = quadric_eval(q, &both) - &alpha - &gamma;
            let f = BinaryForm::new(vec![alpha, beta, gamma]);
            let roots = rational_roots(&f);
            match roots.len() {
                2 => {
                    let mut lines: Vec<Vec<Rat>> = Vec::new();
                    for ((a, b), _) in roots {
                        let (a, b) = (Rat::from(a), Rat::from(b));
                        let pt = [
                            &a * &p0[0] + &b * &p1[0],
                            &a * &p0[1] + &b * &p1[1],
                            &a * &p0[2] + &b * &p1[2],
                        ];
                        lines.push(rat_vec(primitive_integer_vector(&cross(&s, &pt))));
                    }
                    let l1 = lines.pop().unwrap();
                    let l0 = lines.pop().unwrap();
                    QuadricSplit::Lines([l0, l1])
                }
                0 => QuadricSplit::ConjugatePair { singular: s },
                _ => unreachable!("rank-2 quadrics meet a transversal line twice"),
            }
        }
        1 => {
            let row = (0..3)
                .map(|r| gram.row(r).to_vec())
                .find(|r| r.iter().any(|x| !x.is_zero()))
                .expect("rank 1 has a nonzero row");
            QuadricSplit::DoubleLine(rat_vec(primitive_integer_vector(&row)))
        }
        _ => unreachable!("nonzero quadric has positive Gram rank"),
    }
}

/// Exact division: the quadric q with l * q = c, when it exists.
pub fn divide_by_line(c: &Cubic, l: &[Rat]) -> Option<Vec<Rat>> {
    assert!(l.iter().any(|x| !x.is_zero()), "zero line");
    let mut m = RatMatrix::zero(10, 6);
    for (j, qe) in QUADRIC_MONOMIALS.iter().enumerate() {
        for (var, coef) in l.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mut e = *qe;
            e[var] += 1;
            let row = super::cubic_monomial_index(&e);
            *m.at_mut(row, j) = m.at(row, j) + coef;
        }
    }
    m.solve(c.coeffs())
}

/// Exact division by a quadric: the line l with q * l = c, when it exists.
pub fn divide_by_quadric(c: &Cubic, q: &[Rat]) -> Option<Vec<Rat>> {
    assert!(q.iter().any(|x| !x.is_zero()), "zero quadric");
    let mut m = RatMatrix::zero(10, 3);
    for var in 0..3 {
        for (qi, qe) in QUADRIC_MONOMIALS.iter().enumerate() {
            if q[qi].is_zero() {
                continue;
            }
            let mut e = *qe;
            e[var] += 1;
            let row = super::cubic_monomial_index(&e);
            *m.at_mut(row, var) = m.at(row, var) + &q[qi];
        }
    }
    m.solve(c.coeffs())
}

/// Restriction of a quadric to a line as a binary quadratic; zero
/// discriminant means tangency.
pub fn line_conic_tangent(l: &[Rat], q: &[Rat]) -> bool {
    let basis = RatMatrix::from_rows(&[l.to_vec()]).kernel_basis();
    assert_eq!(basis.len(), 2, "a line in the plane has two parameters");
    let p0: [Rat; 3] = [basis[0][0].clone(), basis[0][1].clone(), basis[0][2].clone()];
    let p1: [Rat; 3] = [basis[1][0].clone(), basis[1][1].clone(), basis[1][2].clone()];
    let alpha = quadric_eval(q, &p0);
    let gamma = quadric_eval(q, &p1);
    let both = [&p0[0] + &p1[0], &p0[1] + &p1[1], &p0[2] + &p1[2]];
    let beta = quadric_eval(q, &both) - &alpha - &gamma;
    &beta * &beta == rat(4) * alpha * gamma
}

fn line_factor(l: &[Rat], multiplicity: u32) -> MemberFactor {
    MemberFactor {
        poly: line_poly(&rat_vec(primitive_integer_vector(l))),
        multiplicity,
    }
}

fn quadric_factor(q: &[Rat], multiplicity: u32) -> MemberFactor {
    MemberFactor {
        poly: quadric_poly(&rat_vec(primitive_integer_vector(q))),
        multiplicity,
    }
}

fn sort_factors(mut factors: Vec<MemberFactor>) -> Vec<MemberFactor> {
    factors.sort_by_key(|f| {
        let coeffs: Vec<Rat> = f.poly.terms().map(|(_, c)| c.clone()).collect();
        (
            f.poly.total_degree(),
            std::cmp::Reverse(f.multiplicity),
            format!("{:?}", coeffs),
        )
    });
    factors
}

/// Classifies l * q given that this product is the cubic; q need not be
/// irreducible.
pub fn classify_split(l: &[Rat], q: &[Rat]) -> (SingularCubicType, Vec<MemberFactor>) {
    let lp = primitive_integer_vector(l);
    let dot = |a: &[Rat], b: &[Rat; 3]| {
        a.iter()
            .zip(b.iter())
            .map(|(x, y)| x * y)
            .fold(Rat::zero(), |s, t| s + t)
    };
    match split_quadric(q) {
        QuadricSplit::Irreducible => {
            let kind = if line_conic_tangent(l, q) {
                SingularCubicType::ConicTangent
            } else {
                SingularCubicType::ConicSecant
            };
            (kind, sort_factors(vec![line_factor(l, 1), quadric_factor(q, 1)]))
        }
        QuadricSplit::Lines([m, n]) => {
            let mp = primitive_integer_vector(&m);
            let np = primitive_integer_vector(&n);
            if lp == mp || lp == np {
                let other = if lp == mp { &n } else { &m };
                (
                    SingularCubicType::DoubleLinePlusLine,
                    sort_factors(vec![line_factor(l, 2), line_factor(other, 1)]),
                )
            } else {
                let ma: [Rat; 3] = [m[0].clone(), m[1].clone(), m[2].clone()];
                let na: [Rat; 3] = [n[0].clone(), n[1].clone(), n[2].clone()];
                let vertex = cross(&ma, &na);
                let kind = if dot(l, &vertex).is_zero() {
                    SingularCubicType::Asterisk
                } else {
                    SingularCubicType::Triangle
                };
                (
                    kind,
                    sort_factors(vec![
                        line_factor(l, 1),
                        line_factor(&m, 1),
                        line_factor(&n, 1),
                    ]),
                )
            }
        }
        QuadricSplit::ConjugatePair { singular } => {
            let kind = if dot(l, &singular).is_zero() {
                SingularCubicType::Asterisk
            } else {
                SingularCubicType::Triangle
            };
            (kind, sort_factors(vec![line_factor(l, 1), quadric_factor(q, 1)]))
        }
        QuadricSplit::DoubleLine(m) => {
            let mp = primitive_integer_vector(&m);
            if lp == mp {
                (
                    SingularCubicType::TripleLine,
                    vec![line_factor(&m, 3)],
                )
            } else {
                (
                    SingularCubicType::DoubleLinePlusLine,
                    sort_factors(vec![line_factor(&m, 2), line_factor(l, 1)]),
                )
            }
        }
    }
}

/// Candidate component lines: the distinct lines spanned by pairs of the
/// eight points.
pub fn candidate_lines(p: &Configuration) -> Vec<Vec<Rat>> {
    let mut seen: Vec<Vec<crate::algebra::Int>> = Vec::new();
    let mut out = Vec::new();
    for a in 0..8 {
        for b in a + 1..8 {
            let l = cross(&p.points[a], &p.points[b]);
            let key = primitive_integer_vector(&l);
            assert!(
                key.iter().any(|x| !x.is_zero()),
                "coincident points have no span"
            );
            if !seen.contains(&key) {
                seen.push(key.clone());
                out.push(rat_vec(key));
            }
        }
    }
    out
}

/// Complete reducibility test for a cubic through the eight points. A
/// line component must hold two of the points (a component missing them
/// would push seven points onto the residual conic), so dividing by each
/// spanned line either factors the member or proves it irreducible.
pub fn factor_cubic(c: &Cubic, p: &Configuration) -> Factorization {
    debug_assert!(
        p.points.iter().all(|pt| c.eval(pt).is_zero()),
        "member must vanish on the configuration"
    );
    for l in candidate_lines(p) {
        if let Some(q) = divide_by_line(c, &l) {
            let (kind, factors) = classify_split(&l, &q);
            return Factorization::Reducible { kind, factors };
        }
    }
    Factorization::Irreducible
}

/// Product of the stored factors, for exactness checks.
pub fn expand_factors(factors: &[MemberFactor]) -> MultiPoly {
    let mut acc = MultiPoly::constant(3, rat(1));
    for f in factors {
        for _ in 0..f.multiplicity {
            acc = acc.mul(&f.poly);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pencil::quadric_monomial_index;

    fn cubic_from(poly: &MultiPoly) -> Cubic {
        Cubic::from_poly(poly)
    }

    fn mono(e: [u8; 3], c: i64) -> MultiPoly {
        MultiPoly::monomial(3, &e, rat(c))
    }

    #[test]
    fn division_by_a_line_inverts_multiplication() {
        // (x0 + 2 x2) * (x0 x1 - x2^2)
        let l = vec![rat(1), rat(0), rat(2)];
        let q = vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(-1)];
        let prod = cubic_from(&line_poly(&l).mul(&quadric_poly(&q)));
        assert_eq!(divide_by_line(&prod, &l), Some(q.clone()));
        assert_eq!(divide_by_quadric(&prod, &q), Some(l.clone()));
        let other = vec![rat(1), rat(1), rat(0)];
        assert_eq!(divide_by_line(&prod, &other), None);
    }

    #[test]
    fn gram_rank_separates_the_three_quadric_shapes() {
        // irreducible x0 x2 - x1^2
        let smooth = vec![rat(0), rat(0), rat(1), rat(-1), rat(0), rat(0)];
        assert_eq!(split_quadric(&smooth), QuadricSplit::Irreducible);
        // x0 x1 splits rationally
        let pair = vec![rat(0), rat(1), rat(0), rat(0), rat(0), rat(0)];
        match split_quadric(&pair) {
            QuadricSplit::Lines([a, b]) => {
                let mut got = vec![
                    primitive_integer_vector(&a),
                    primitive_integer_vector(&b),
                ];
                got.sort();
                assert_eq!(
                    got,
                    vec![
                        primitive_integer_vector(&[rat(0), rat(1), rat(0)]),
                        primitive_integer_vector(&[rat(1), rat(0), rat(0)]),
                    ]
                );
            }
            other => panic!("expected rational lines, got {other:?}"),
        }
        // x0^2 + x1^2 splits only over Q(i)
        let conj = vec![rat(1), rat(0), rat(0), rat(1), rat(0), rat(0)];
        match split_quadric(&conj) {
            QuadricSplit::ConjugatePair { singular } => {
                assert!(singular[0].is_zero() && singular[1].is_zero());
                assert!(!singular[2].is_zero());
            }
            other => panic!("expected a conjugate pair, got {other:?}"),
        }
        // (x0 - 3 x1)^2
        let dbl = vec![rat(1), rat(-6), rat(0), rat(9), rat(0), rat(0)];
        match split_quadric(&dbl) {
            QuadricSplit::DoubleLine(m) => {
                assert_eq!(
                    primitive_integer_vector(&m),
                    primitive_integer_vector(&[rat(1), rat(-3), rat(0)])
                );
            }
            other => panic!("expected a double line, got {other:?}"),
        }
    }

    #[test]
    fn tangency_is_read_from_the_restriction_discriminant() {
        // x0 x2 = x1^2 touches x2 = 0 at (1 : 0 : 0) and crosses x1 = 0
        let q = vec![rat(0), rat(0), rat(1), rat(-1), rat(0), rat(0)];
        assert!(line_conic_tangent(&[rat(0), rat(0), rat(1)], &q));
        assert!(!line_conic_tangent(&[rat(0), rat(1), rat(0)], &q));
    }

    #[test]
    fn split_classification_covers_all_reducible_types() {
        let check = |l: Vec<i64>, q: &MultiPoly, want: SingularCubicType| {
            let l: Vec<Rat> = l.into_iter().map(rat).collect();
            let qc: Vec<Rat> = {
                let mut v = vec![Rat::zero(); 6];
                for (e, c) in q.terms() {
                    v[quadric_monomial_index(&[e[0], e[1], e[2]])] = c.clone();
                }
                v
            };
            let (kind, factors) = classify_split(&l, &qc);
            assert_eq!(kind, want, "line {l:?} quadric {q:?}");
            // factors multiply back to the member up to scalar
            let member = cubic_from(&line_poly(&l).mul(q));
            let back = Cubic::from_poly(&expand_factors(&factors));
            assert!(back.proportional(&member));
        };
        // conic + secant / tangent
        let conic = mono([1, 0, 1], 1).sub(&mono([0, 2, 0], 1));
        check(vec![0, 1, 0], &conic, SingularCubicType::ConicSecant);
        check(vec![0, 0, 1], &conic, SingularCubicType::ConicTangent);
        // triangle and asterisk, rational splits
        let xy = mono([1, 1, 0], 1);
        check(vec![0, 0, 1], &xy, SingularCubicType::Triangle);
        check(vec![1, 1, 0], &xy, SingularCubicType::Asterisk);
        // triangle and asterisk through a conjugate pair x0^2 + x1^2
        let sum = mono([2, 0, 0], 1).add(&mono([0, 2, 0], 1));
        check(vec![0, 0, 1], &sum, SingularCubicType::Triangle);
        check(vec![1, 2, 0], &sum, SingularCubicType::Asterisk);
        // repeated lines
        check(vec![1, 0, 0], &xy, SingularCubicType::DoubleLinePlusLine);
        let sq = mono([2, 0, 0], 1);
        check(vec![0, 1, 0], &sq, SingularCubicType::DoubleLinePlusLine);
        check(vec![1, 0, 0], &sq, SingularCubicType::TripleLine);
    }

    #[test]
    fn factoring_against_a_configuration_finds_the_triangle() {
        // three lines x0, x1, x2 with eight marked points spread over them
        let p: Configuration = "0 0 0 1 1 2 1 1 / 1 0 1 0 0 0 1 2 / 0 1 1 0 1 1 0 0"
            .parse()
            .unwrap();
        let triangle = cubic_from(&mono([1, 1, 1], 1));
        match factor_cubic(&triangle, &p) {
            Factorization::Reducible { kind, factors } => {
                assert_eq!(kind, SingularCubicType::Triangle);
                assert_eq!(factors.len(), 3);
            }
            other => panic!("expected a triangle, got {other:?}"),
        }
        // an irreducible member through none of the spanned lines
        let nodal = mono([1, 2, 0], 1)
            .sub(&mono([0, 0, 3], 1))
            .sub(&mono([1, 0, 2], 1));
        // nodal cubic does not vanish on these points, so only use the
        // division loop, not the full precondition
        let mut divides = false;
        for l in candidate_lines(&p) {
            divides |= divide_by_line(&cubic_from(&nodal), &l).is_some();
        }
        assert!(!divides);
    }
}
