//! The combinatorial objects under study: pairs of collinear triples and
//! co-conic sextuples on eight labeled points, their admissibility
//! criteria, the specialization order, and the reducible-member profile
//! that the count of rational cubics is read from.

pub mod certify;
pub mod criteria;
pub mod order;
pub mod profile;

use crate::perm;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

/// Bitmask over points 1..8, bit k set = point k + 1 is in the subset.
pub type Mask = u8;

pub fn mask_of(points: &[u8]) -> Mask {
    let mut m = 0;
    for &p in points {
        assert!((1..=8).contains(&p), "point out of range");
        m |= 1 << (p - 1);
    }
    m
}

pub fn points_of(mask: Mask) -> Vec<u8> {
    (1..=8).filter(|&p| mask >> (p - 1) & 1 == 1).collect()
}

pub fn all_triples() -> &'static [Mask] {
    static T: OnceLock<Vec<Mask>> = OnceLock::new();
    T.get_or_init(|| (0u16..256).map(|m| m as u8).filter(|m| m.count_ones() == 3).collect())
}

pub fn all_sextuples() -> &'static [Mask] {
    static S: OnceLock<Vec<Mask>> = OnceLock::new();
    S.get_or_init(|| (0u16..256).map(|m| m as u8).filter(|m| m.count_ones() == 6).collect())
}

/// All k-element subsets of the points in `mask`, as sorted masks.
pub fn k_subsets(mask: Mask, k: u32) -> Vec<Mask> {
    let mut out: Vec<Mask> = (0u16..256)
        .map(|m| m as u8)
        .filter(|m| m.count_ones() == k && m & !mask == 0)
        .collect();
    out.sort_unstable();
    out
}

/// A pair (triples, sextuples): which 3-subsets are collinear and which
/// 6-subsets lie on an irreducible conic. Stored sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Pair {
    triples: Vec<Mask>,
    sextuples: Vec<Mask>,
}

impl Pair {
    pub fn new(mut triples: Vec<Mask>, mut sextuples: Vec<Mask>) -> Self {
        assert!(triples.iter().all(|m| m.count_ones() == 3), "non-triple mask");
        assert!(
            sextuples.iter().all(|m| m.count_ones() == 6),
            "non-sextuple mask"
        );
        triples.sort_unstable();
        triples.dedup();
        sextuples.sort_unstable();
        sextuples.dedup();
        Pair { triples, sextuples }
    }

    pub fn empty() -> Self {
        Pair {
            triples: Vec::new(),
            sextuples: Vec::new(),
        }
    }

    pub fn from_lists(triples: &[&[u8]], sextuples: &[&[u8]]) -> Self {
        Pair::new(
            triples.iter().map(|t| mask_of(t)).collect(),
            sextuples.iter().map(|s| mask_of(s)).collect(),
        )
    }

    pub fn triples(&self) -> &[Mask] {
        &self.triples
    }

    pub fn sextuples(&self) -> &[Mask] {
        &self.sextuples
    }

    pub fn n_conditions(&self) -> usize {
        self.triples.len() + self.sextuples.len()
    }

    /// Union of all condition supports.
    pub fn support(&self) -> Mask {
        self.triples
            .iter()
            .chain(&self.sextuples)
            .fold(0, |m, &s| m | s)
    }

    /// Every point lies on at least one condition.
    pub fn is_exhaustive(&self) -> bool {
        self.support() == 0xFF
    }

    pub fn canonical(&self) -> Pair {
        let (t, s) = perm::canonical(&self.triples, &self.sextuples);
        Pair {
            triples: t,
            sextuples: s,
        }
    }

    pub fn orbit_size(&self) -> u64 {
        perm::orbit_size(&self.triples, &self.sextuples)
    }

    /// Image under a permutation table index.
    pub fn apply_perm(&self, p: usize) -> Pair {
        let t = perm::tables();
        Pair::new(
            self.triples.iter().map(|&m| t.apply(p, m)).collect(),
            self.sextuples.iter().map(|&m| t.apply(p, m)).collect(),
        )
    }

    /// Remove every condition whose support contains the given point. The
    /// remaining points keep their labels.
    pub fn delete_point(&self, point: u8) -> Pair {
        let b = 1 << (point - 1);
        Pair {
            triples: self.triples.iter().copied().filter(|m| m & b == 0).collect(),
            sextuples: self
                .sextuples
                .iter()
                .copied()
                .filter(|m| m & b == 0)
                .collect(),
        }
    }
}

fn write_masks(f: &mut fmt::Formatter<'_>, masks: &[Mask]) -> fmt::Result {
    if masks.is_empty() {
        return write!(f, "-");
    }
    for (i, &m) in masks.iter().enumerate() {
        if i > 0 {
            write!(f, " ")?;
        }
        for p in points_of(m) {
            write!(f, "{}", p)?;
        }
    }
    Ok(())
}

impl fmt::Display for Pair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lines: ")?;
        write_masks(f, &self.triples)?;
        write!(f, " ; conics: ")?;
        write_masks(f, &self.sextuples)
    }
}

#[derive(Debug, thiserror::Error)]
#[error("malformed pair literal: {0}")]
pub struct PairParseError(String);

fn parse_masks(s: &str, want: u32, what: &str) -> Result<Vec<Mask>, PairParseError> {
    let mut out = Vec::new();
    for tok in s.split_whitespace() {
        if tok == "-" {
            continue;
        }
        let mut pts = Vec::new();
        for ch in tok.chars() {
            let d = ch
                .to_digit(10)
                .filter(|&d| (1..=8).contains(&d))
                .ok_or_else(|| PairParseError(format!("bad point '{}' in {}", ch, what)))?;
            pts.push(d as u8);
        }
        if pts.len() != want as usize {
            return Err(PairParseError(format!(
                "{} '{}' must list exactly {} points",
                what, tok, want
            )));
        }
        let m = mask_of(&pts);
        if m.count_ones() != want {
            return Err(PairParseError(format!("repeated point in {} '{}'", what, tok)));
        }
        out.push(m);
    }
    Ok(out)
}

impl FromStr for Pair {
    type Err = PairParseError;

    /// Accepts the literal form `lines: 123 145 ; conics: 234678`, with `-`
    /// standing for an empty side.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let rest = s.trim();
        let rest = rest
            .strip_prefix("lines:")
            .ok_or_else(|| PairParseError("expected 'lines:' prefix".into()))?;
        let (lines_part, conics_part) = rest
            .split_once(';')
            .ok_or_else(|| PairParseError("expected ';' separator".into()))?;
        let conics_part = conics_part
            .trim()
            .strip_prefix("conics:")
            .ok_or_else(|| PairParseError("expected 'conics:' after ';'".into()))?;
        Ok(Pair::new(
            parse_masks(lines_part, 3, "line")?,
            parse_masks(conics_part, 6, "conic")?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_round_trip() {
        let p = Pair::from_lists(&[&[1, 2, 3], &[1, 4, 5]], &[&[2, 3, 4, 6, 7, 8]]);
        let s = p.to_string();
        assert_eq!(s, "lines: 123 145 ; conics: 234678");
        assert_eq!(s.parse::<Pair>().unwrap(), p);
        let e = Pair::empty();
        assert_eq!(e.to_string(), "lines: - ; conics: -");
        assert_eq!("lines: - ; conics: -".parse::<Pair>().unwrap(), e);
    }

    #[test]
    fn parse_rejects_malformed_input() {
        assert!("lines: 12 ; conics: -".parse::<Pair>().is_err());
        assert!("lines: 123 ; conics: 12345".parse::<Pair>().is_err());
        assert!("lines: 123".parse::<Pair>().is_err());
        assert!("lines: 119 ; conics: -".parse::<Pair>().is_err());
        assert!("lines: 112 ; conics: -".parse::<Pair>().is_err());
    }

    #[test]
    fn deletion_keeps_labels() {
        let p = Pair::from_lists(&[&[1, 2, 3], &[4, 5, 6]], &[&[1, 2, 4, 5, 6, 7]]);
        let q = p.delete_point(3);
        assert_eq!(q, Pair::from_lists(&[&[4, 5, 6]], &[&[1, 2, 4, 5, 6, 7]]));
    }

    #[test]
    fn exhaustive_and_support() {
        let p = Pair::from_lists(&[&[1, 2, 3]], &[&[1, 4, 5, 6, 7, 8]]);
        assert!(p.is_exhaustive());
        assert!(!Pair::from_lists(&[&[1, 2, 3]], &[]).is_exhaustive());
    }
}
