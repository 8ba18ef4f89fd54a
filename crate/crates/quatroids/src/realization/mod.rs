//! From incidence types to actual point configurations and back: exact
//! coordinates realizing a type, verification of claimed realizations,
//! and the combinatorial obstruction that rules one type out.

pub mod base_locus;
pub mod search;

pub use search::{search_representative, SearchFailure};

use crate::algebra::matrix::{det_field, kernel_field};
use crate::algebra::quadext::QuadExtScalar;
use crate::algebra::{primitive_integer_vector, rat, ratio, Field, Int, Rat};
use crate::quatroid::{all_sextuples, all_triples, points_of, Pair};
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// Eight labeled points of the projective plane, stored as homogeneous
/// coordinate triples over an exact field.
#[derive(Clone, Debug, PartialEq)]
pub struct Configuration<F: Field = Rat> {
    pub points: Vec<[F; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum DegenerateInput {
    #[error("point {0} has all coordinates zero")]
    ZeroPoint(usize),
    #[error("points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
}

impl<F: Field> Configuration<F> {
    pub fn new(points: Vec<[F; 3]>) -> Self {
        assert_eq!(points.len(), 8, "a configuration has eight points");
        Configuration { points }
    }

    /// Relabels the points by the permutation written as images of 1..8.
    pub fn permute(&self, images: &[u8; 8]) -> Self {
        let mut points = vec![[F::zero(), F::zero(), F::zero()]; 8];
        for (from, &to) in images.iter().enumerate() {
            points[to as usize - 1] = self.points[from].clone();
        }
        Configuration { points }
    }
}

impl Configuration<Rat> {
    /// Three integer rows with each column cleared to a primitive vector.
    pub fn integer_rows(&self) -> [Vec<Int>; 3] {
        let mut rows: [Vec<Int>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for p in &self.points {
            let col = primitive_integer_vector(&[p[0].clone(), p[1].clone(), p[2].clone()]);
            for (r, v) in col.into_iter().enumerate() {
                rows[r].push(v);
            }
        }
        rows
    }
}

impl fmt::Display for Configuration<Rat> {
    /// Three slash-separated rows of integers, columns scaled primitive.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows = self.integer_rows();
        let text: Vec<String> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", text.join(" / "))
    }
}

impl FromStr for Configuration<Rat> {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let rows: Vec<&str> = s.split('/').collect();
        if rows.len() != 3 {
            return Err(format!("expected 3 rows separated by '/', got {}", rows.len()));
        }
        let mut parsed: Vec<Vec<Rat>> = Vec::new();
        for row in rows {
            let entries: Result<Vec<Rat>, String> = row
                .split_whitespace()
                .map(|t| Rat::from_str(t).map_err(|e| format!("bad entry {:?}: {}", t, e)))
                .collect();
            let entries = entries?;
            if entries.len() != 8 {
                return Err(format!("expected 8 entries per row, got {}", entries.len()));
            }
            parsed.push(entries);
        }
        let points = (0..8)
            .map(|c| {
                [
                    parsed[0][c].clone(),
                    parsed[1][c].clone(),
                    parsed[2][c].clone(),
                ]
            })
            .collect();
        Ok(Configuration::new(points))
    }
}

fn det3<F: Field>(a: &[F; 3], b: &[F; 3], c: &[F; 3]) -> F {
    let m: Vec<Vec<F>> = vec![a.to_vec(), b.to_vec(), c.to_vec()];
    det_field(&m)
}

/// Row of the degree-2 monomial values of a point, in the order
/// x0^2, x0x1, x0x2, x1^2, x1x2, x2^2.
pub fn veronese2<F: Field>(p: &[F; 3]) -> Vec<F> {
    vec![
        p[0].clone() * p[0].clone(),
        p[0].clone() * p[1].clone(),
        p[0].clone() * p[2].clone(),
        p[1].clone() * p[1].clone(),
        p[1].clone() * p[2].clone(),
        p[2].clone() * p[2].clone(),
    ]
}

/// Whether the quadric with coefficient vector q (in the veronese2
/// monomial order) is irreducible, by the determinant of twice its
/// symmetric matrix.
pub fn quadric_irreducible<F: Field>(q: &[F]) -> bool {
    let two = F::one() + F::one();
    let sym: Vec<Vec<F>> = vec![
        vec![two.clone() * q[0].clone(), q[1].clone(), q[2].clone()],
        vec![q[1].clone(), two.clone() * q[3].clone(), q[4].clone()],
        vec![q[2].clone(), q[4].clone(), two * q[5].clone()],
    ];
    !det_field(&sym).is_zero()
}

pub fn check_distinct<F: Field>(c: &Configuration<F>) -> Result<(), DegenerateInput> {
    for (i, p) in c.points.iter().enumerate() {
        if p.iter().all(|v| v.is_zero()) {
            return Err(DegenerateInput::ZeroPoint(i + 1));
        }
    }
    for i in 0..8 {
        for j in i + 1..8 {
            let (a, b) = (&c.points[i], &c.points[j]);
            let proportional = (0..3).all(|r| {
                (0..3).all(|s| {
                    (a[r].clone() * b[s].clone() - a[s].clone() * b[r].clone()).is_zero()
                })
            });
            if proportional {
                return Err(DegenerateInput::CoincidentPoints(i + 1, j + 1));
            }
        }
    }
    Ok(())
}

/// The incidence type of a configuration: collinear triples by vanishing
/// 3x3 determinants, co-conic sextuples by a unique interpolating quadric
/// that is irreducible. Sextuples on a degenerate quadric are excluded;
/// their collinear parts already show up among the triples.
pub fn quatroid_of<F: Field>(c: &Configuration<F>) -> Result<Pair, DegenerateInput> {
    check_distinct(c)?;
    let triples: Vec<u8> = all_triples()
        .iter()
        .copied()
        .filter(|&t| {
            let pts = points_of(t);
            det3(
                &c.points[pts[0] as usize - 1],
                &c.points[pts[1] as usize - 1],
                &c.points[pts[2] as usize - 1],
            )
            .is_zero()
        })
        .collect();
    let sextuples: Vec<u8> = all_sextuples()
        .iter()
        .copied()
        .filter(|&s| {
            let rows: Vec<Vec<F>> = points_of(s)
                .iter()
                .map(|&p| veronese2(&c.points[p as usize - 1]))
                .collect();
            let kernel = kernel_field(&rows, 6);
            kernel.len() == 1 && quadric_irreducible(&kernel[0])
        })
        .collect();
    Ok(Pair::new(triples, sextuples))
}

/// How a claimed realization disagrees with its target type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub missing_triples: Vec<u8>,
    pub extra_triples: Vec<u8>,
    pub missing_sextuples: Vec<u8>,
    pub extra_sextuples: Vec<u8>,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |masks: &[u8]| {
            masks
                .iter()
                .map(|&m| {
                    points_of(m)
                        .iter()
                        .map(|p| p.to_string())
                        .collect::<String>()
                })
                .collect::<Vec<_>>()
                .join(" ")
        };
        let mut parts = Vec::new();
        if !self.missing_triples.is_empty() {
            parts.push(format!("missing lines {}", show(&self.missing_triples)));
        }
        if !self.extra_triples.is_empty() {
            parts.push(format!("extra lines {}", show(&self.extra_triples)));
        }
        if !self.missing_sextuples.is_empty() {
            parts.push(format!("missing conics {}", show(&self.missing_sextuples)));
        }
        if !self.extra_sextuples.is_empty() {
            parts.push(format!("extra conics {}", show(&self.extra_sextuples)));
        }
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error("{0}")]
    Degenerate(#[from] DegenerateInput),
    #[error("incidences disagree: {0}")]
    WrongIncidences(Mismatch),
}

fn set_diff(a: &[u8], b: &[u8]) -> Vec<u8> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

/// Checks that a configuration realizes exactly the given type, with the
/// offending incidences spelled out on failure.
pub fn verify_representative<F: Field>(
    c: &Configuration<F>,
    q: &Pair,
) -> Result<(), VerifyError> {
    let got = quatroid_of(c)?;
    if &got == q {
        return Ok(());
    }
    Err(VerifyError::WrongIncidences(Mismatch {
        missing_triples: set_diff(q.triples(), got.triples()),
        extra_triples: set_diff(got.triples(), q.triples()),
        missing_sextuples: set_diff(q.sextuples(), got.sextuples()),
        extra_sextuples: set_diff(got.sextuples(), q.sextuples()),
    }))
}

/// The one orbit needing an imaginary quadratic extension: eight points
/// carrying eight collinear triples in a pattern with no rational (or even
/// real) realization.
pub fn extension_only_type() -> Pair {
    "lines: 123 145 167 246 258 357 368 478 ; conics: -"
        .parse()
        .unwrap()
}

/// A realization of the extension-only type together with the data that
/// rules out real coordinates.
#[derive(Clone, Debug)]
pub struct ExtensionRealization {
    pub config: Configuration<QuadExtScalar>,
    /// The conjugate realization (the other root of the same quadratic).
    pub conjugate: Configuration<QuadExtScalar>,
    /// Discriminant of z^2 - z + 1, the minimal polynomial pinning the
    /// one non-rational coordinate; negative, so both roots are non-real.
    pub discriminant: i64,
}

/// Builds the extension realization: all coordinates rational except one,
/// which must satisfy z^2 - z + 1 = 0 and therefore lives in Q(sqrt(-3)).
pub fn realize_extension_only() -> ExtensionRealization {
    // z = (1 + sqrt(-3)) / 2, the primitive sixth root of unity
    let z = QuadExtScalar::new(ratio(1, 2), ratio(1, 2), Int::from(-3));
    let zero = QuadExtScalar::zero;
    let one = QuadExtScalar::one;
    let q = |n: i64| QuadExtScalar::from_rat(rat(n));
    let build = |z: QuadExtScalar| {
        Configuration::new(vec![
            [one(), zero(), zero()],
            [zero(), one(), zero()],
            [one(), one() - z.clone(), zero()],
            [zero(), zero(), one()],
            [one(), zero(), z.clone()],
            [zero(), one(), one()],
            [one(), one(), one()],
            [one(), one(), z.clone()],
        ])
    };
    let config = build(z.clone());
    let conjugate = build(z.clone().conj());
    debug_assert!((z.clone() * z.clone() - z + q(1)).is_zero());
    ExtensionRealization {
        config,
        conjugate,
        discriminant: -3,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatroid::mask_of;

    fn config(rows: [[i64; 8]; 3]) -> Configuration {
        Configuration::new(
            (0..8)
                .map(|c| [rat(rows[0][c]), rat(rows[1][c]), rat(rows[2][c])])
                .collect(),
        )
    }

    #[test]
    fn one_line_one_conic() {
        // first three points share a line, the other five plus point 1
        // share an irreducible conic
        let p = config([
            [24, 2, -2, 0, 0, 24, -1, 1],
            [0, 4, 4, 24, 0, 24, -4, 3],
            [0, -3, -3, 0, 24, 24, 2, -3],
        ]);
        let q = quatroid_of(&p).unwrap();
        assert_eq!(q, "lines: 123 ; conics: 145678".parse().unwrap());
        assert!(verify_representative(&p, &q).is_ok());
        match verify_representative(&p, &Pair::empty()) {
            Err(VerifyError::WrongIncidences(m)) => {
                assert_eq!(m.extra_triples, vec![mask_of(&[1, 2, 3])]);
                assert_eq!(m.extra_sextuples, vec![mask_of(&[1, 4, 5, 6, 7, 8])]);
                assert!(m.missing_triples.is_empty());
            }
            other => panic!("expected an incidence mismatch, got {:?}", other),
        }
    }

    #[test]
    fn five_marked_lines() {
        let p = config([
            [-2, 2, 2, 1, -2, 1, 2, -2],
            [2, -2, -2, 2, -1, -2, -1, 1],
            [0, 2, -2, 1, -1, 1, -1, 2],
        ]);
        let q = quatroid_of(&p).unwrap();
        assert_eq!(q, "lines: 123 145 167 246 357 ; conics: -".parse().unwrap());
    }

    #[test]
    fn coincident_points_are_rejected() {
        let p = config([
            [1, 1, 0, 0, 1, 1, 2, 3],
            [0, 0, 1, 1, 1, 1, 5, 7],
            [2, 2, 0, 0, 3, 3, 11, 13],
        ]);
        // columns 1,2 and 3,4 and 5,6 coincide; the first pair is reported
        assert_eq!(
            quatroid_of(&p),
            Err(DegenerateInput::CoincidentPoints(1, 2))
        );
    }

    #[test]
    fn degenerate_interpolating_quadrics_do_not_count_as_conics() {
        // points 1..6 sit on two lines (three on each); the unique quadric
        // through them is that line pair, so no sextuple appears
        let p = config([
            [1, 2, 4, 1, 3, 5, 5, 4],
            [0, 0, 0, 1, 3, 5, 4, -5],
            [1, 1, 1, 1, 1, 1, 0, 3],
        ]);
        let q = quatroid_of(&p).unwrap();
        assert_eq!(q.sextuples(), &[] as &[u8]);
        assert_eq!(q.triples(), &[mask_of(&[1, 2, 3]), mask_of(&[4, 5, 6])]);
    }

    #[test]
    fn extension_realization_has_exactly_the_eight_lines() {
        let r = realize_extension_only();
        assert_eq!(r.discriminant, -3);
        assert!(verify_representative(&r.config, &extension_only_type()).is_ok());
        assert!(verify_representative(&r.conjugate, &extension_only_type()).is_ok());
        // the two roots differ, so conjugation swaps two genuinely
        // different realizations
        assert_ne!(r.config.points[4], r.conjugate.points[4]);
    }

    #[test]
    fn round_trip_text_format() {
        let p = config([
            [24, 2, -2, 0, 0, 24, -1, 1],
            [0, 4, 4, 24, 0, 24, -4, 3],
            [0, -3, -3, 0, 24, 24, 2, -3],
        ]);
        // printing normalizes each point to a primitive integer vector with
        // positive leading coordinate
        let text = p.to_string();
        assert_eq!(
            text,
            "1 2 2 0 0 1 1 1 / 0 4 -4 1 0 1 4 3 / 0 -3 3 0 1 1 -2 -3"
        );
        let back: Configuration = text.parse().unwrap();
        assert_eq!(back.to_string(), text);
        assert_eq!(quatroid_of(&back), quatroid_of(&p));
    }

    #[test]
    fn permuting_points_permutes_the_type() {
        let p = config([
            [24, 2, -2, 0, 0, 24, -1, 1],
            [0, 4, 4, 24, 0, 24, -4, 3],
            [0, -3, -3, 0, 24, 24, 2, -3],
        ]);
        let images = [3u8, 1, 2, 5, 4, 7, 8, 6];
        let idx = crate::perm::tables()
            .perms
            .iter()
            .position(|perm| (0..8).all(|k| perm[k] + 1 == images[k]))
            .unwrap();
        let q = quatroid_of(&p).unwrap();
        let pq = quatroid_of(&p.permute(&images)).unwrap();
        assert_eq!(pq, q.apply_perm(idx));
    }
}
