//! The reducible members of the pencil of cubics through a generic
//! realization, read off combinatorially. Every reducible member of such a
//! pencil is a line plus a conic (possibly further degenerate); the counts
//! below, together with the tangency marker, determine how many of the
//! twelve singular members (with multiplicity) are rational, and hence the
//! rational-cubic count d = 12 - 2i - 3j - tangency.

use super::order::{degeneration_of, split_sextuples, Degeneration};
use super::{Mask, Pair};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ReducibleProfile {
    /// Members splitting as a marked line plus the conic through the five
    /// remaining points (counted by lone triples and sextuples).
    pub conic_line_members: u32,
    /// Members splitting as three marked lines.
    pub triangle_members: u32,
    /// Whether one member degenerates beyond its shape.
    pub degeneration: Option<Degeneration>,
}

impl ReducibleProfile {
    /// Total multiplicity the reducible members absorb from the twelve
    /// singular pencil members: 2 per conic+line, 3 per triangle, plus one
    /// for a tangency degeneration.
    pub fn multiplicity(&self) -> u32 {
        2 * self.conic_line_members
            + 3 * self.triangle_members
            + self.degeneration.map_or(0, |_| 1)
    }

    /// Rational cubics through a generic realization of the type.
    pub fn rational_count(&self) -> i64 {
        12 - self.multiplicity() as i64
    }
}

fn disjoint_pairs(triples: &[Mask]) -> Vec<(Mask, Mask)> {
    let mut out = Vec::new();
    for (x, &a) in triples.iter().enumerate() {
        for &b in &triples[x + 1..] {
            if a & b == 0 {
                out.push((a, b));
            }
        }
    }
    out
}

/// Count of triple pairs covering disjoint supports, minus the coverings
/// of all eight points by three triples (those triple covers are a single
/// triangle member, not three distinct split conics).
pub fn triangle_count(triples: &[Mask]) -> u32 {
    let d = disjoint_pairs(triples).len() as u32;
    let mut u = 0u32;
    for (x, &a) in triples.iter().enumerate() {
        for (y, &b) in triples.iter().enumerate().skip(x + 1) {
            for &c in &triples[y + 1..] {
                if a | b | c == 0xFF {
                    u += 1;
                }
            }
        }
    }
    d - u
}

/// Combinatorial multiplicity absorbed by reducible members, by direct
/// overcount: every condition forces a split member worth two, then the
/// corrections remove double counting (a line through a conic point names
/// the same member as the conic, a disjoint triple pair upgrades two split
/// conics into one triangle, three triples covering all eight points name
/// one triangle twice). Equals `multiplicity()` minus the tangency unit.
pub fn overcount_multiplicity(q: &Pair) -> i64 {
    let i = q.triples();
    let j = q.sextuples();
    let meet_once = i
        .iter()
        .flat_map(|&a| j.iter().map(move |&b| a & b))
        .filter(|m| m.count_ones() == 1)
        .count() as i64;
    let d = disjoint_pairs(i).len() as i64;
    let mut u = 0i64;
    for (x, &a) in i.iter().enumerate() {
        for (y, &b) in i.iter().enumerate().skip(x + 1) {
            for &c in &i[y + 1..] {
                if a | b | c == 0xFF {
                    u += 1;
                }
            }
        }
    }
    2 * (i.len() as i64) + 2 * (j.len() as i64) - 2 * meet_once - d - u
}

/// Profile of a Bezoutian pair.
pub fn reducible_profile(q: &Pair) -> ReducibleProfile {
    debug_assert!(super::criteria::is_bezoutian(q));
    let i = q.triples();
    let j = q.sextuples();
    let paired: Vec<Mask> = split_sextuples(i);
    let lone = i
        .iter()
        .filter(|&&t| !paired.iter().any(|&u| u & t == t))
        .count() as u32;
    let meet_once = i
        .iter()
        .flat_map(|&a| j.iter().map(move |&b| a & b))
        .filter(|m| m.count_ones() == 1)
        .count() as u32;
    ReducibleProfile {
        conic_line_members: lone + j.len() as u32 - meet_once,
        triangle_members: triangle_count(i),
        degeneration: degeneration_of(q),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_type_has_twelve_rational_cubics() {
        let p = Pair::empty();
        let prof = reducible_profile(&p);
        assert_eq!(prof.conic_line_members, 0);
        assert_eq!(prof.triangle_members, 0);
        assert_eq!(prof.rational_count(), 12);
    }

    #[test]
    fn single_conditions() {
        // one sextuple: the conic through it plus the line through the
        // remaining two points is a member
        let p: Pair = "lines: - ; conics: 123456".parse().unwrap();
        let prof = reducible_profile(&p);
        assert_eq!((prof.conic_line_members, prof.triangle_members), (1, 0));
        assert_eq!(prof.rational_count(), 10);
        // one triple likewise pairs with the conic through the other five
        let q: Pair = "lines: 123 ; conics: -".parse().unwrap();
        let prof = reducible_profile(&q);
        assert_eq!((prof.conic_line_members, prof.triangle_members), (1, 0));
        assert_eq!(prof.rational_count(), 10);
    }

    #[test]
    fn shared_point_cancels_a_member_and_marks_tangency() {
        // line and conic sharing a point: the split member is tangent
        let p: Pair = "lines: 123 ; conics: 145678".parse().unwrap();
        let prof = reducible_profile(&p);
        assert_eq!((prof.conic_line_members, prof.triangle_members), (1, 0));
        assert_eq!(prof.degeneration, Some(Degeneration::TangentConic));
        assert_eq!(prof.rational_count(), 9);
    }

    #[test]
    fn disjoint_triples_pair_into_triangles() {
        // two disjoint triples: each stops being lone, their union plus the
        // line through the remaining two points is a triangle member
        let p: Pair = "lines: 123 456 ; conics: -".parse().unwrap();
        let prof = reducible_profile(&p);
        assert_eq!((prof.conic_line_members, prof.triangle_members), (0, 1));
        assert_eq!(prof.degeneration, None);
        assert_eq!(prof.rational_count(), 9);
    }

    #[test]
    fn three_triples_covering_everything_count_once() {
        let p: Pair = "lines: 123 145 678 ; conics: -".parse().unwrap();
        let prof = reducible_profile(&p);
        assert_eq!((prof.conic_line_members, prof.triangle_members), (0, 1));
        assert_eq!(prof.degeneration, Some(Degeneration::Asterisk));
        assert_eq!(prof.rational_count(), 8);
    }

    #[test]
    fn overcount_agrees_with_the_member_census() {
        use crate::data::{classification, RowKind};
        for row in &classification().rows {
            if !matches!(row.kind, RowKind::Counted { .. }) {
                continue;
            }
            let q = row.pair.canonical();
            let prof = reducible_profile(&q);
            let shape = 2 * prof.conic_line_members as i64 + 3 * prof.triangle_members as i64;
            assert_eq!(overcount_multiplicity(&q), shape, "row {}", row.index);
            let tangency = prof.degeneration.map_or(0, |_| 1);
            assert_eq!(
                prof.rational_count(),
                12 - overcount_multiplicity(&q) - tangency,
                "row {}",
                row.index
            );
        }
    }
}
