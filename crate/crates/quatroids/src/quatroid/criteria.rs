//! Admissibility criteria. A pair is a candidate incidence type when its
//! triples form a realizable collinearity pattern (the flats of a rank-3
//! simple matroid) and the closure conditions below hold; it is Bezoutian
//! when in addition no two triples share two points and no two sextuples
//! share five, the combinatorial shadow of Bezout's theorem for the curves
//! carrying them.

use super::{all_sextuples, all_triples, points_of, Mask, Pair};

/// Merge overlapping supports until no two share more than `share` points.
/// With share = 1 these are the lines of the configuration, with share = 4
/// the irreducible conics.
pub fn flats(masks: &[Mask], share: u32) -> Vec<Mask> {
    let mut flats: Vec<Mask> = masks.to_vec();
    let mut changed = true;
    while changed {
        changed = false;
        let mut out: Vec<Mask> = Vec::with_capacity(flats.len());
        for &f in &flats {
            match out.iter().position(|&g| (f & g).count_ones() > share) {
                Some(i) => {
                    out[i] |= f;
                    changed = true;
                }
                None => out.push(f),
            }
        }
        flats = out;
    }
    flats
}

pub fn line_flats(triples: &[Mask]) -> Vec<Mask> {
    flats(triples, 1)
}

pub fn conic_flats(sextuples: &[Mask]) -> Vec<Mask> {
    flats(sextuples, 4)
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CriterionViolation {
    #[error("triple {0} and sextuple {1} share more than two points")]
    TripleInsideSextuple(String, String),
    #[error("triples {0} and {1} share two points but {2} is missing")]
    OpenTriplePair(String, String, String),
    #[error("sextuples {0} and {1} share five points but {2} is missing")]
    OpenSextuplePair(String, String, String),
}

fn fmt_mask(m: Mask) -> String {
    points_of(m).iter().map(|p| p.to_string()).collect()
}

/// The closure conditions every incidence type of distinct points must
/// satisfy: a line meets an irreducible conic in at most two points, two
/// triples spanning the same line make all its 3-subsets collinear, and
/// two sextuples on the same conic make all 6-subsets of the union
/// co-conic.
pub fn weak_criteria(pair: &Pair) -> Result<(), CriterionViolation> {
    let i = pair.triples();
    let j = pair.sextuples();
    for &a in i {
        for &b in j {
            if (a & b).count_ones() > 2 {
                return Err(CriterionViolation::TripleInsideSextuple(
                    fmt_mask(a),
                    fmt_mask(b),
                ));
            }
        }
    }
    for (x, &a) in i.iter().enumerate() {
        for &b in &i[x + 1..] {
            if (a & b).count_ones() > 1 {
                let u = a | b;
                for &t in all_triples() {
                    if t & u == t && !i.contains(&t) {
                        return Err(CriterionViolation::OpenTriplePair(
                            fmt_mask(a),
                            fmt_mask(b),
                            fmt_mask(t),
                        ));
                    }
                }
            }
        }
    }
    for (x, &a) in j.iter().enumerate() {
        for &b in &j[x + 1..] {
            if (a & b).count_ones() > 4 {
                let u = a | b;
                for &s in all_sextuples() {
                    if s & u == s && !j.contains(&s) {
                        return Err(CriterionViolation::OpenSextuplePair(
                            fmt_mask(a),
                            fmt_mask(b),
                            fmt_mask(s),
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum StrongViolation {
    #[error("triples {0} and {1} share two points")]
    SharedSegment(String, String),
    #[error("sextuples {0} and {1} share five points")]
    SharedPentad(String, String),
}

/// Two distinct lines meet once, two distinct irreducible conics meet at
/// most four times.
pub fn strong_criteria(pair: &Pair) -> Result<(), StrongViolation> {
    let i = pair.triples();
    for (x, &a) in i.iter().enumerate() {
        for &b in &i[x + 1..] {
            if (a & b).count_ones() > 1 {
                return Err(StrongViolation::SharedSegment(fmt_mask(a), fmt_mask(b)));
            }
        }
    }
    let j = pair.sextuples();
    for (x, &a) in j.iter().enumerate() {
        for &b in &j[x + 1..] {
            if (a & b).count_ones() > 4 {
                return Err(StrongViolation::SharedPentad(fmt_mask(a), fmt_mask(b)));
            }
        }
    }
    Ok(())
}

pub fn is_bezoutian(pair: &Pair) -> bool {
    weak_criteria(pair).is_ok() && strong_criteria(pair).is_ok()
}

/// The triple list is exactly the set of 3-subsets of a family of "line"
/// flats that pairwise meet in at most one point.
pub fn matroidal(triples: &[Mask]) -> bool {
    let fl = line_flats(triples);
    let mut count = 0usize;
    for &f in &fl {
        let k = f.count_ones() as usize;
        count += k * (k - 1) * (k - 2) / 6;
        for &t in all_triples() {
            if t & f == t && !triples.contains(&t) {
                return false;
            }
        }
    }
    if count != triples.len() {
        return false;
    }
    for (x, &a) in fl.iter().enumerate() {
        for &b in &fl[x + 1..] {
            if (a & b).count_ones() > 1 {
                return false;
            }
        }
    }
    true
}

pub fn is_candidate(pair: &Pair) -> bool {
    matroidal(pair.triples()) && weak_criteria(pair).is_ok()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatroid::Pair;

    #[test]
    fn flats_merge_transitively() {
        // triples 123, 124 force the 4-point line 1234
        let t = vec![super::super::mask_of(&[1, 2, 3]), super::super::mask_of(&[1, 2, 4])];
        assert_eq!(line_flats(&t), vec![super::super::mask_of(&[1, 2, 3, 4])]);
    }

    #[test]
    fn weak_criteria_catch_each_violation_kind() {
        let bad1 = Pair::from_lists(&[&[1, 2, 3]], &[&[1, 2, 3, 4, 5, 6]]);
        assert!(matches!(
            weak_criteria(&bad1),
            Err(CriterionViolation::TripleInsideSextuple(..))
        ));
        let bad2 = Pair::from_lists(&[&[1, 2, 3], &[1, 2, 4]], &[]);
        assert!(matches!(
            weak_criteria(&bad2),
            Err(CriterionViolation::OpenTriplePair(..))
        ));
        let bad3 = Pair::from_lists(&[], &[&[1, 2, 3, 4, 5, 6], &[1, 2, 3, 4, 5, 7]]);
        assert!(matches!(
            weak_criteria(&bad3),
            Err(CriterionViolation::OpenSextuplePair(..))
        ));
    }

    #[test]
    fn four_point_line_is_matroidal_but_not_bezoutian() {
        let p: Pair = "lines: 123 124 134 234 ; conics: -".parse().unwrap();
        assert!(matroidal(p.triples()));
        assert!(weak_criteria(&p).is_ok());
        assert!(strong_criteria(&p).is_err());
        assert!(!is_bezoutian(&p));
    }

    #[test]
    fn seven_point_conic_family_is_weakly_closed() {
        // all six-subsets of {1..7}
        let js: Vec<&[u8]> = vec![
            &[2, 3, 4, 5, 6, 7],
            &[1, 3, 4, 5, 6, 7],
            &[1, 2, 4, 5, 6, 7],
            &[1, 2, 3, 5, 6, 7],
            &[1, 2, 3, 4, 6, 7],
            &[1, 2, 3, 4, 5, 7],
            &[1, 2, 3, 4, 5, 6],
        ];
        let p = Pair::from_lists(&[], &js);
        assert!(weak_criteria(&p).is_ok());
        assert!(strong_criteria(&p).is_err());
    }

    #[test]
    fn incomplete_long_line_fails_matroidal() {
        // 1234 collinear needs all four triples, not three
        let t = vec![
            super::super::mask_of(&[1, 2, 3]),
            super::super::mask_of(&[1, 2, 4]),
            super::super::mask_of(&[1, 3, 4]),
        ];
        assert!(!matroidal(&t));
    }
}
