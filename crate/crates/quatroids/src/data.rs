//! Bundled classification table and the point-line incidence patterns
//! it is organized by, with parsers for the compact display format.
//!
//! Display conventions, shared by the table and by all emitted reports:
//! a lines entry with more than 3 digits means every 3-subset of those
//! points is collinear (one long line), and a conics entry with more
//! than 6 digits means every 6-subset is co-conic. Columns show maximal
//! point sets, so `1234 567` is two lines carrying 4 + 1 collinear
//! triples.

use crate::quatroid::criteria::{conic_flats, line_flats};
use crate::quatroid::order::Degeneration;
use crate::quatroid::{k_subsets, points_of, Pair};
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::sync::OnceLock;

pub const ORBIT_TABLE_TEXT: &str = include_str!("../data/orbit_table.txt");
pub const MATROIDS_TEXT: &str = include_str!("../data/matroids8.txt");

/// How the count of rational cubics is settled for one row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RowKind {
    /// Pencil has finitely many reducible members; d = 12 - multiplicity sum.
    Counted {
        conic_line: u32,
        triangle: u32,
        degeneration: Option<Degeneration>,
        d: u32,
    },
    /// Every cubic through such a configuration is reducible (NB).
    NoIrreducibleCubic,
    /// No 8 distinct points realize this type (NR).
    NotRealizable,
}

#[derive(Clone, Debug)]
pub struct TableRow {
    /// 1-based position in the table.
    pub index: usize,
    pub orbit_size: u64,
    pub pair: Pair,
    pub kind: RowKind,
}

impl TableRow {
    pub fn d(&self) -> Option<u32> {
        match &self.kind {
            RowKind::Counted { d, .. } => Some(*d),
            RowKind::NoIrreducibleCubic => Some(0),
            RowKind::NotRealizable => None,
        }
    }
}

pub struct Classification {
    pub rows: Vec<TableRow>,
    by_canonical: BTreeMap<Pair, usize>,
}

impl Classification {
    /// Table index (1-based) of the orbit containing `pair`.
    pub fn index_of(&self, pair: &Pair) -> Option<usize> {
        self.by_canonical.get(&pair.canonical()).map(|&i| i + 1)
    }

    pub fn row_of(&self, pair: &Pair) -> Option<&TableRow> {
        self.by_canonical
            .get(&pair.canonical())
            .map(|&i| &self.rows[i])
    }

    pub fn row(&self, index: usize) -> &TableRow {
        &self.rows[index - 1]
    }
}

pub fn classification() -> &'static Classification {
    static C: OnceLock<Classification> = OnceLock::new();
    C.get_or_init(|| {
        let rows: Vec<TableRow> = ORBIT_TABLE_TEXT
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| parse_row(l).unwrap_or_else(|e| panic!("bad table row {:?}: {}", l, e)))
            .collect();
        let mut by_canonical = BTreeMap::new();
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.index, i + 1, "table rows out of order");
            let prev = by_canonical.insert(r.pair.canonical(), i);
            assert!(prev.is_none(), "duplicate orbit in table at row {}", i + 1);
        }
        Classification { rows, by_canonical }
    })
}

/// Maximal collinear point sets of the 67 incidence patterns, one mask
/// per long line. The free pattern is the empty list.
pub fn matroid_patterns() -> &'static Vec<Vec<u8>> {
    static M: OnceLock<Vec<Vec<u8>>> = OnceLock::new();
    M.get_or_init(|| {
        MATROIDS_TEXT
            .lines()
            .filter(|l| !l.starts_with('#'))
            .map(|l| {
                l.split_whitespace()
                    .map(|g| parse_point_group(g).expect("bad matroid entry"))
                    .collect()
            })
            .collect()
    })
}

/// All 3-subsets of each mask in the pattern, merged and sorted.
pub fn expand_pattern(pattern: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = Vec::new();
    for &m in pattern {
        out.extend(k_subsets(m, 3));
    }
    out.sort_unstable();
    out.dedup();
    out
}

fn parse_point_group(s: &str) -> Result<u8, String> {
    let mut m: u8 = 0;
    for ch in s.chars() {
        let d = ch.to_digit(10).ok_or_else(|| format!("bad digit {:?}", ch))?;
        if !(1..=8).contains(&d) {
            return Err(format!("point {} out of range", d));
        }
        let bit = 1u8 << (d - 1);
        if m & bit != 0 {
            return Err(format!("repeated point in {:?}", s));
        }
        m |= bit;
    }
    Ok(m)
}

fn parse_incidence_column(field: &str, arity: u32) -> Result<Vec<u8>, String> {
    if field == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for g in field.split_whitespace() {
        let m = parse_point_group(g)?;
        let k = m.count_ones();
        if k < arity {
            return Err(format!("entry {:?} smaller than {}", g, arity));
        }
        out.extend(k_subsets(m, arity));
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

fn parse_row(line: &str) -> Result<TableRow, String> {
    let f: Vec<&str> = line.split('|').collect();
    if f.len() != 6 {
        return Err(format!("expected 6 fields, got {}", f.len()));
    }
    let index: usize = f[0].parse().map_err(|e| format!("index: {}", e))?;
    let orbit_size: u64 = f[1].parse().map_err(|e| format!("size: {}", e))?;
    let triples = parse_incidence_column(f[2], 3)?;
    let sextuples = parse_incidence_column(f[3], 6)?;
    let kind = match (f[4], f[5]) {
        ("NB", "0") => RowKind::NoIrreducibleCubic,
        ("NR", "NR") => RowKind::NotRealizable,
        (profile, d) => {
            let (conic_line, triangle, degeneration) = parse_profile(profile)?;
            RowKind::Counted {
                conic_line,
                triangle,
                degeneration,
                d: d.parse().map_err(|e| format!("d: {}", e))?,
            }
        }
    };
    Ok(TableRow {
        index,
        orbit_size,
        pair: Pair::new(triples, sextuples),
        kind,
    })
}

fn parse_profile(s: &str) -> Result<(u32, u32, Option<Degeneration>), String> {
    if s == "-" {
        return Ok((0, 0, None));
    }
    let (body, degeneration) = if let Some(b) = s.strip_suffix("(o)") {
        (b, Some(Degeneration::TangentConic))
    } else if let Some(b) = s.strip_suffix("(t)") {
        (b, Some(Degeneration::Asterisk))
    } else {
        (s, None)
    };
    let mut i = 0u32;
    let mut j = 0u32;
    let mut rest = body;
    if let Some(r) = rest.strip_prefix("o^") {
        let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
        i = digits.parse().map_err(|e| format!("profile: {}", e))?;
        rest = &r[digits.len()..];
    }
    if let Some(r) = rest.strip_prefix("t^") {
        let digits: String = r.chars().take_while(|c| c.is_ascii_digit()).collect();
        j = digits.parse().map_err(|e| format!("profile: {}", e))?;
        rest = &r[digits.len()..];
    }
    if !rest.is_empty() {
        return Err(format!("unparsed profile tail {:?}", rest));
    }
    Ok((i, j, degeneration))
}

fn mask_string(m: u8) -> String {
    points_of(m).iter().map(|p| p.to_string()).collect()
}

/// Lines column: maximal collinear sets, `-` if no triple is collinear.
pub fn format_lines(triples: &[u8]) -> String {
    format_flats(&line_flats(triples))
}

/// Conics column: maximal co-conic sets, `-` if none.
pub fn format_conics(sextuples: &[u8]) -> String {
    format_flats(&conic_flats(sextuples))
}

fn format_flats(flats: &[u8]) -> String {
    if flats.is_empty() {
        return "-".to_string();
    }
    let mut parts: Vec<String> = flats.iter().map(|&m| mask_string(m)).collect();
    parts.sort();
    parts.join(" ")
}

pub fn format_profile(
    conic_line: u32,
    triangle: u32,
    degeneration: Option<Degeneration>,
) -> String {
    let mut s = String::new();
    if conic_line > 0 {
        write!(s, "o^{}", conic_line).unwrap();
    }
    if triangle > 0 {
        write!(s, "t^{}", triangle).unwrap();
    }
    match degeneration {
        Some(Degeneration::TangentConic) => s.push_str("(o)"),
        Some(Degeneration::Asterisk) => s.push_str("(t)"),
        None => {}
    }
    if s.is_empty() {
        s.push('-');
    }
    s
}

pub fn format_row(row: &TableRow) -> String {
    let (profile, d) = match &row.kind {
        RowKind::Counted {
            conic_line,
            triangle,
            degeneration,
            d,
        } => (
            format_profile(*conic_line, *triangle, *degeneration),
            d.to_string(),
        ),
        RowKind::NoIrreducibleCubic => ("NB".to_string(), "0".to_string()),
        RowKind::NotRealizable => ("NR".to_string(), "NR".to_string()),
    };
    format!(
        "{}|{}|{}|{}|{}|{}",
        row.index,
        row.orbit_size,
        format_lines(row.pair.triples()),
        format_conics(row.pair.sextuples()),
        profile,
        d
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quatroid::mask_of;

    #[test]
    fn table_parses_and_rows_round_trip() {
        let c = classification();
        assert_eq!(c.rows.len(), 126);
        let data_lines: Vec<&str> = ORBIT_TABLE_TEXT
            .lines()
            .filter(|l| !l.starts_with('#'))
            .collect();
        for (row, original) in c.rows.iter().zip(data_lines) {
            assert_eq!(format_row(row), original, "row {}", row.index);
        }
    }

    #[test]
    fn orbit_sizes_sum_over_all_pairs() {
        let c = classification();
        let total: u64 = c.rows.iter().map(|r| r.orbit_size).sum();
        assert_eq!(total, 780617);
        for r in &c.rows {
            assert_eq!(r.orbit_size, r.pair.orbit_size() as u64, "row {}", r.index);
        }
    }

    #[test]
    fn lookup_finds_relabelings() {
        let c = classification();
        // line meets the conic in one point vs two: different orbits
        let q: Pair = "lines: 268 ; conics: 134567".parse().unwrap();
        assert_eq!(c.row_of(&q).map(|r| r.index), Some(10));
        let q: Pair = "lines: 268 ; conics: 123456".parse().unwrap();
        assert_eq!(c.row_of(&q).map(|r| r.index), Some(9));
        assert_eq!(c.index_of(&Pair::empty()), Some(1));
    }

    #[test]
    fn long_line_entries_expand_combinatorially() {
        let c = classification();
        let r83 = c.row(83);
        assert_eq!(r83.pair.triples().len(), 35);
        assert!(r83.pair.sextuples().is_empty());
        let r7 = c.row(7);
        assert_eq!(r7.pair.sextuples().len(), 28);
        let r126 = c.row(126);
        assert_eq!(r126.pair.triples().len(), 56);
    }

    #[test]
    fn matroid_patterns_expand_to_valid_triple_sets() {
        let pats = matroid_patterns();
        assert_eq!(pats.len(), 67);
        assert!(pats[0].is_empty());
        let expanded = expand_pattern(&[mask_of(&[1, 2, 3, 4, 5])]);
        assert_eq!(expanded.len(), 10);
        for p in pats {
            let triples = expand_pattern(p);
            assert!(crate::quatroid::criteria::matroidal(&triples), "{:?}", p);
        }
    }

    #[test]
    fn profile_text_round_trips() {
        for s in ["-", "o^3", "t^2", "o^4t^1(t)", "o^2(o)", "o^1t^1"] {
            let (i, j, dg) = parse_profile(s).unwrap();
            assert_eq!(format_profile(i, j, dg), s);
        }
    }
}
