//! Isomorphism type of a singular plane cubic.
//!
//! `classify_singular` locates the singular locus by exact elimination and
//! names the projective isomorphism class of the curve. Reducible answers
//! are certified by polynomial division; irreducible answers (node, cusp)
//! follow once every candidate component has been excluded. Singular points
//! living in a quadratic extension are handled by passing to Q(sqrt(d)).

use super::factor::{
    classify_split, divide_by_line, divide_by_quadric, SingularCubicType,
};
use super::{cubic_monomial_index, discriminant, Cubic};
use crate::algebra::roots::rational_roots;
use crate::algebra::{int, BinaryForm, Int, QuadExtScalar, Rat, RatMatrix};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CHART_ATTEMPTS: usize = 32;

/// Projective type of a singular cubic, or `None` when the curve is smooth.
///
/// Panics on the zero cubic. A cubic with vanishing discriminant always
/// has a singular point; random coordinate charts are tried until the
/// elimination below isolates one.
pub fn classify_singular(c: &Cubic) -> Option<SingularCubicType> {
    assert!(!c.is_zero(), "zero cubic has no isomorphism type");
    if !discriminant(c).is_zero() {
        return None;
    }
    if let Some(v) = cone_vertex(c) {
        return Some(classify_cone(c, &v));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5107);
    for attempt in 0..CHART_ATTEMPTS {
        let cm = if attempt == 0 {
            c.clone()
        } else {
            c.substitute(&random_unimodular(&mut rng).0)
        };
        if let Some(kind) = classify_chart(&cm) {
            return Some(kind);
        }
    }
    panic!("singular cubic resisted {CHART_ATTEMPTS} coordinate charts");
}

/// Vertex of a cone: v with v . grad C identically zero. The cubics fixed
/// by a whole line of translations are exactly l^2 m and l^3, plus the
/// asterisk when the vertex is unique.
fn cone_vertex(c: &Cubic) -> Option<Vec<Rat>> {
    let parts = c.partials();
    let mut m = RatMatrix::zero(6, 3);
    for var in 0..3 {
        for row in 0..6 {
            *m.at_mut(row, var) = parts[var][row].clone();
        }
    }
    m.kernel_basis().into_iter().next()
}

/// A cone is determined by its restriction to any line missing the vertex;
/// the root multiplicities of that binary cubic decide the type.
fn classify_cone(c: &Cubic, v: &[Rat]) -> SingularCubicType {
    let k = (0..3).position(|i| !v[i].is_zero()).unwrap();
    let (a, b) = complement(k);
    let mut coeffs = Vec::with_capacity(4);
    for j in 0..=3u8 {
        let mut e = [0u8; 3];
        e[a] = 3 - j;
        e[b] = j;
        coeffs.push(c.coeffs()[cubic_monomial_index(&e)].clone());
    }
    let g = BinaryForm::new(coeffs);
    assert!(!g.is_zero(), "cone restricted to a complement line vanished");
    let mult = g
        .squarefree_decomposition()
        .iter()
        .map(|(_, m)| *m)
        .max()
        .unwrap();
    match mult {
        1 => SingularCubicType::Asterisk,
        2 => SingularCubicType::DoubleLinePlusLine,
        _ => SingularCubicType::TripleLine,
    }
}

fn complement(k: usize) -> (usize, usize) {
    match k {
        0 => (1, 2),
        1 => (0, 2),
        _ => (0, 1),
    }
}

/// One attempt at locating a singular point in the current coordinates.
/// `None` asks the caller for a fresh random chart.
fn classify_chart(cm: &Cubic) -> Option<SingularCubicType> {
    let parts = cm.partials();
    // Partial i is c_i x2^2 + L_i(x0,x1) x2 + Q_i(x0,x1); quadric
    // coefficient order is (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2).
    let cs: Vec<Rat> = (0..3).map(|i| parts[i][5].clone()).collect();
    let ls: Vec<BinaryForm> = (0..3)
        .map(|i| BinaryForm::linear(parts[i][2].clone(), parts[i][4].clone()))
        .collect();
    let qs: Vec<BinaryForm> = (0..3)
        .map(|i| {
            BinaryForm::new(vec![
                parts[i][0].clone(),
                parts[i][1].clone(),
                parts[i][3].clone(),
            ])
        })
        .collect();

    if cs.iter().all(|c| c.is_zero()) {
        let s = [Rat::zero(), Rat::zero(), Rat::one()];
        return Some(classify_rational_point(cm, &s));
    }
    let i0 = (0..3).position(|i| !cs[i].is_zero()).unwrap();

    // Cross the pivot partial against the others to cancel x2^2; a common
    // zero with the pivot satisfies A x2 + B = 0.
    let mut pivot: Option<(BinaryForm, BinaryForm)> = None;
    for j in 0..3 {
        if j == i0 {
            continue;
        }
        let a = ls[i0].scale(&cs[j]).sub(&ls[j].scale(&cs[i0]));
        let b = qs[i0].scale(&cs[j]).sub(&qs[j].scale(&cs[i0]));
        if !a.is_zero() {
            pivot = Some((a, b));
            break;
        }
    }
    let (af, bf) = pivot?;

    // Substitute x2 = -B/A into each partial and clear A^2.
    let ab = af.mul(&bf);
    let a2 = af.mul(&af);
    let b2 = bf.mul(&bf);
    let mut h: Option<BinaryForm> = None;
    for i in 0..3 {
        let n = b2.scale(&cs[i]).sub(&ls[i].mul(&ab)).add(&qs[i].mul(&a2));
        if n.is_zero() {
            continue;
        }
        h = Some(match h {
            None => n.normalized(),
            Some(g) => g.gcd(&n),
        });
    }
    let h = h?;
    if h.degree() == 0 || h.gcd(&af).degree() > 0 {
        return None;
    }

    let roots = rational_roots(&h);
    if let Some(((a, b), _)) = roots.first() {
        let t0 = Rat::from(a.clone());
        let t1 = Rat::from(b.clone());
        let av = af.eval(&t0, &t1);
        assert!(!av.is_zero());
        let x2 = -bf.eval(&t0, &t1) / av;
        let s = [t0, t1, x2];
        assert!(cm.gradient(&s).iter().all(|g| g.is_zero()));
        return Some(classify_rational_point(cm, &s));
    }

    let radical = h
        .squarefree_decomposition()
        .iter()
        .fold(BinaryForm::new(vec![Rat::one()]), |acc, (f, _)| acc.mul(f));
    match radical.degree() {
        // Three conjugate singular points force a triangle of lines.
        3 => Some(SingularCubicType::Triangle),
        2 => Some(classify_conjugate_pair(cm, &radical, &af, &bf)),
        _ => None,
    }
}

/// Two conjugate singular points. The line joining them is rational and
/// must divide the cubic, so the type follows from the quotient conic.
fn classify_conjugate_pair(
    cm: &Cubic,
    radical: &BinaryForm,
    af: &BinaryForm,
    bf: &BinaryForm,
) -> SingularCubicType {
    let uvw = radical.primitive_integer();
    let (u, v, w) = (uvw[0].clone(), uvw[1].clone(), uvw[2].clone());
    assert!(!u.is_zero(), "irreducible quadratic cannot have root [1:0]");
    let d = &v * &v - int(4) * &u * &w;
    let two_u = Rat::from(int(2) * &u);
    let alpha = QuadExtScalar::new(
        Rat::from(-v) / two_u.clone(),
        Rat::one() / two_u,
        d,
    );
    let one = QuadExtScalar::one();
    let av = eval_at(af, &alpha);
    assert!(!av.is_zero(), "pivot line meets the radical despite trivial gcd");
    let x2 = -eval_at(bf, &alpha) * av.inv();
    let s = [alpha, one, x2];
    assert!(cm.gradient(&s).iter().all(|g| g.is_zero()));
    let sbar = [s[0].conj(), s[1].conj(), s[2].conj()];
    let joint = cross_ext(&s, &sbar);
    let mut line = Vec::with_capacity(3);
    for e in &joint {
        // v x conj(v) is anti-symmetric under conjugation, so the rational
        // parts cancel and the sqrt(d) parts carry the line.
        assert!(e.re.is_zero());
        line.push(e.im.clone());
    }
    assert!(line.iter().any(|x| !x.is_zero()));
    let q = divide_by_line(cm, &line)
        .expect("line through two singular points must divide the cubic");
    classify_split(&line, &q).0
}

/// f(x, 1) over the quadratic extension.
fn eval_at(f: &BinaryForm, x: &QuadExtScalar) -> QuadExtScalar {
    let mut acc = QuadExtScalar::zero();
    for c in f.coeffs() {
        acc = acc * x.clone() + QuadExtScalar::from_rat(c.clone());
    }
    acc
}

fn cross_ext(a: &[QuadExtScalar; 3], b: &[QuadExtScalar; 3]) -> [QuadExtScalar; 3] {
    [
        a[1].clone() * b[2].clone() - a[2].clone() * b[1].clone(),
        a[2].clone() * b[0].clone() - a[0].clone() * b[2].clone(),
        a[0].clone() * b[1].clone() - a[1].clone() * b[0].clone(),
    ]
}

/// Type of a cubic with a known rational singular point. Complete for
/// non-cones: every reducible configuration puts a component through one of
/// the tangent directions at s, so failed divisions certify irreducibility.
fn classify_rational_point(cm: &Cubic, s: &[Rat; 3]) -> SingularCubicType {
    let k = (0..3).position(|i| !s[i].is_zero()).unwrap();
    let (a, b) = complement(k);
    let mut m = RatMatrix::zero(3, 3);
    *m.at_mut(a, 0) = Rat::one();
    *m.at_mut(b, 1) = Rat::one();
    for row in 0..3 {
        *m.at_mut(row, 2) = s[row].clone();
    }
    let c2 = cm.substitute(&m);
    let co = c2.coeffs();
    for e in [[0, 0, 3], [1, 0, 2], [0, 1, 2]] {
        assert!(co[cubic_monomial_index(&e)].is_zero(), "point not singular");
    }
    let tangent_cone = BinaryForm::new(vec![
        co[cubic_monomial_index(&[2, 0, 1])].clone(),
        co[cubic_monomial_index(&[1, 1, 1])].clone(),
        co[cubic_monomial_index(&[0, 2, 1])].clone(),
    ]);
    assert!(!tangent_cone.is_zero(), "triple point on a non-cone cubic");
    let roots = rational_roots(&tangent_cone);
    match roots.len() {
        2 => {
            for ((a, b), _) in &roots {
                let l = direction_line(a, b);
                if let Some(q) = divide_by_line(&c2, &l) {
                    return classify_split(&l, &q).0;
                }
            }
            SingularCubicType::Nodal
        }
        1 => {
            let ((a, b), mult) = &roots[0];
            assert_eq!(*mult, 2, "rational quadratic with a stray root");
            let l = direction_line(a, b);
            match divide_by_line(&c2, &l) {
                Some(q) => classify_split(&l, &q).0,
                None => SingularCubicType::Cuspidal,
            }
        }
        _ => {
            // Conjugate tangent directions: the only reducible option is
            // that their product, a rational conic, splits off.
            let pair = vec![
                tangent_cone.coeff(0).clone(),
                tangent_cone.coeff(1).clone(),
                Rat::zero(),
                tangent_cone.coeff(2).clone(),
                Rat::zero(),
                Rat::zero(),
            ];
            match divide_by_quadric(&c2, &pair) {
                Some(l) => classify_split(&l, &pair).0,
                None => SingularCubicType::Nodal,
            }
        }
    }
}

/// Tangent line at the moved singular point (0 : 0 : 1) with direction
/// (t0 : t1), namely t1 x0 - t0 x1.
fn direction_line(t0: &Int, t1: &Int) -> Vec<Rat> {
    vec![Rat::from(t1.clone()), -Rat::from(t0.clone()), Rat::zero()]
}

/// Random integer change of coordinates with determinant one, returned with
/// its inverse. Built from a few elementary shears.
pub(crate) fn random_unimodular<R: Rng>(rng: &mut R) -> (RatMatrix, RatMatrix) {
    let mut m = identity3();
    let mut inv = identity3();
    // enough shears that the product has no structural zeros left
    for _ in 0..8 {
        let i = rng.gen_range(0..3usize);
        let mut j = rng.gen_range(0..2usize);
        if j >= i {
            j += 1;
        }
        let lam = Rat::from(int([-2i64, -1, 1, 2][rng.gen_range(0..4usize)]));
        for r in 0..3 {
            let add = lam.clone() * m.at(r, i).clone();
            *m.at_mut(r, j) = m.at(r, j).clone() + add;
        }
        for c in 0..3 {
            let sub = lam.clone() * inv.at(j, c).clone();
            *inv.at_mut(i, c) = inv.at(i, c).clone() - sub;
        }
    }
    (m, inv)
}

pub(crate) fn identity3() -> RatMatrix {
    let mut m = RatMatrix::zero(3, 3);
    for i in 0..3 {
        *m.at_mut(i, i) = Rat::one();
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use SingularCubicType::*;

    fn cubic(v: [i64; 10]) -> Cubic {
        Cubic::from_integers(&v)
    }

    // Monomial order: x0^3, x0^2x1, x0^2x2, x0x1^2, x0x1x2, x0x2^2,
    //                 x1^3, x1^2x2, x1x2^2, x2^3.
    fn representatives() -> Vec<(Cubic, SingularCubicType)> {
        vec![
            // x0 x1^2 - x2^2 (x2 - x0)
            (cubic([0, 0, 0, 1, 0, 1, 0, 0, 0, -1]), Nodal),
            // x0 x1^2 - x2^3
            (cubic([0, 0, 0, 1, 0, 0, 0, 0, 0, -1]), Cuspidal),
            // x0 (x0^2 + x1^2 - x2^2)
            (cubic([1, 0, 0, 1, 0, -1, 0, 0, 0, 0]), ConicSecant),
            // x0 (x0 x1 + x2^2)
            (cubic([0, 1, 0, 0, 0, 1, 0, 0, 0, 0]), ConicTangent),
            // x0 x1 x2
            (cubic([0, 0, 0, 0, 1, 0, 0, 0, 0, 0]), Triangle),
            // x0 x1 (x0 + x1)
            (cubic([0, 1, 0, 1, 0, 0, 0, 0, 0, 0]), Asterisk),
            // x0^2 x1
            (cubic([0, 1, 0, 0, 0, 0, 0, 0, 0, 0]), DoubleLinePlusLine),
            // x0^3
            (cubic([1, 0, 0, 0, 0, 0, 0, 0, 0, 0]), TripleLine),
        ]
    }

    #[test]
    fn normal_forms_are_classified() {
        for (c, want) in representatives() {
            assert_eq!(classify_singular(&c), Some(want), "cubic {c}");
        }
    }

    #[test]
    fn smooth_cubic_is_rejected() {
        let fermat = cubic([1, 0, 0, 0, 0, 0, 1, 0, 0, 1]);
        assert_eq!(classify_singular(&fermat), None);
    }

    #[test]
    fn conjugate_node_pair_is_found_in_an_extension() {
        // x2 (x0^2 + x1^2 - 3 x2^2): the line meets the conic in two
        // conjugate points over Q(i), so no singular point is rational.
        let c = cubic([0, 0, 1, 0, 0, 0, 0, 1, 0, -3]);
        assert_eq!(classify_singular(&c), Some(ConicSecant));
    }

    #[test]
    fn norm_form_triangle_has_conjugate_vertices() {
        // x0^3 + 2 x1^3 + 4 x2^3 - 6 x0 x1 x2 splits into three lines
        // conjugate over the cube root of 2.
        let c = cubic([1, 0, 0, 0, -6, 0, 2, 0, 0, 4]);
        assert_eq!(classify_singular(&c), Some(Triangle));
    }

    #[test]
    fn node_with_conjugate_tangents_is_still_nodal() {
        // x0^3 + x2 (x0^2 + x1^2): rational node, tangent cone irreducible.
        let c = cubic([1, 0, 1, 0, 0, 0, 0, 1, 0, 0]);
        assert_eq!(classify_singular(&c), Some(Nodal));
    }

    #[test]
    fn classification_ignores_coordinates() {
        let r = crate::algebra::rat;
        let m = RatMatrix::from_rows(&[
            vec![r(1), r(1), r(0)],
            vec![r(0), r(1), r(2)],
            vec![r(1), r(0), r(1)],
        ]);
        assert!(!m.det().is_zero());
        for (c, want) in representatives() {
            assert_eq!(classify_singular(&c.substitute(&m)), Some(want));
        }
    }

    #[test]
    fn unimodular_charts_invert() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let (m, inv) = random_unimodular(&mut rng);
            assert_eq!(m.det(), Rat::one());
            let mut prod = RatMatrix::zero(3, 3);
            for r in 0..3 {
                for c in 0..3 {
                    let mut acc = Rat::zero();
                    for t in 0..3 {
                        acc += m.at(r, t).clone() * inv.at(t, c).clone();
                    }
                    *prod.at_mut(r, c) = acc;
                }
            }
            assert_eq!(prod, identity3());
        }
    }
}
