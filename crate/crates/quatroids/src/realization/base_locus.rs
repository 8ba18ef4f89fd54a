//! Combinatorics of the nine base points of the cubic pencil through a
//! configuration. The eight marked points plus one more point carry
//! forced collinearities: every collinear triple of the type, and for
//! each co-conic sextuple the residual pair together with the ninth
//! point (the line completing the conic to a pencil member). Two closure
//! rules propagate these within the base locus:
//!
//! * two collinear sets sharing two points span one line, so every
//!   3-subset of their union is collinear;
//! * two disjoint collinear triples lie in a pencil member that is a
//!   product of three lines, so the complementary triple of base points
//!   is collinear too.
//!
//! Both rules assume the nine base points are distinct and reduced,
//! which holds when the type covers all eight points, passes the
//! pairwise-intersection bounds, and has no tangency degeneration.

use crate::quatroid::order::degeneration_of;
use crate::quatroid::{criteria, Pair};
use std::collections::BTreeSet;

/// Bitmask over the nine base points; bit k = point k + 1, point 9 is
/// the one the pencil adds.
pub type Mask9 = u16;

const ALL9: Mask9 = 0x1FF;

fn k_subsets9(mask: Mask9, k: u32) -> Vec<Mask9> {
    (0u16..512)
        .filter(|m| m.count_ones() == k && m & !mask == 0)
        .collect()
}

/// Closure of a family of collinear triples among the nine base points
/// under the two propagation rules. Keeps only 3-sets; both rules only
/// ever produce 3-sets.
pub fn close9(family: &BTreeSet<Mask9>) -> BTreeSet<Mask9> {
    let mut t = family.clone();
    loop {
        let snapshot: Vec<Mask9> = t.iter().copied().collect();
        let before = t.len();
        for (ai, &a) in snapshot.iter().enumerate() {
            for &b in &snapshot[ai + 1..] {
                let shared = (a & b).count_ones();
                if shared >= 2 {
                    for c in k_subsets9(a | b, 3) {
                        t.insert(c);
                    }
                } else if shared == 0 {
                    t.insert(ALL9 & !(a | b));
                }
            }
        }
        if t.len() == before {
            return t;
        }
    }
}

/// Initial forced collinearities for a type, before closure.
fn seed_family(pair: &Pair) -> BTreeSet<Mask9> {
    let mut nb: BTreeSet<Mask9> = pair.triples().iter().map(|&m| m as Mask9).collect();
    for &j in pair.sextuples() {
        nb.insert(ALL9 & !(j as Mask9));
    }
    nb
}

/// All collinear triples forced among the nine base points.
pub fn base_locus_family(pair: &Pair) -> BTreeSet<Mask9> {
    close9(&seed_family(pair))
}

/// Why the nine-point arguments do not apply to a type.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BaseLocusGuard {
    /// Some marked point lies on no line or conic of the type; the
    /// deletion bookkeeping would silently drop it.
    SupportIncomplete,
    /// An intersection bound fails, so some pencil member is forced to
    /// share a component with another and the base locus degenerates.
    IntersectionBoundViolated,
    /// The type specializes a tangency, so one base point is a double
    /// point of the scheme rather than a ninth distinct point.
    TangentBasePoint,
}

fn guard(pair: &Pair) -> Result<(), BaseLocusGuard> {
    if !pair.is_exhaustive() {
        return Err(BaseLocusGuard::SupportIncomplete);
    }
    if !criteria::is_bezoutian(pair) {
        return Err(BaseLocusGuard::IntersectionBoundViolated);
    }
    if degeneration_of(pair).is_some() {
        return Err(BaseLocusGuard::TangentBasePoint);
    }
    Ok(())
}

/// The forced collinearity structure on nine distinct base points, only
/// for types where those nine points are guaranteed distinct.
pub fn base_locus_matroid(pair: &Pair) -> Result<BTreeSet<Mask9>, BaseLocusGuard> {
    guard(pair)?;
    Ok(base_locus_family(pair))
}

fn relabel_without(s: Mask9, k: u8) -> u8 {
    let low = s & ((1 << (k - 1)) - 1);
    let high = s >> k;
    (low | (high << (k - 1))) as u8
}

/// The nine types obtained by discarding one base point and reading the
/// surviving structure on the remaining eight: kept triples stay lines,
/// and each dropped triple means the other six base points lie on a
/// conic (unless that conic would contain a whole kept line, in which
/// case it is not irreducible and imposes nothing new). Result pairs are
/// canonical; distinct choices of point can give the same type.
pub fn modifications(pair: &Pair) -> Result<BTreeSet<Pair>, BaseLocusGuard> {
    let nb9 = base_locus_matroid(pair)?;
    let mut out = BTreeSet::new();
    for k in 1..=9u8 {
        let kb: Mask9 = 1 << (k - 1);
        let keep: Vec<Mask9> = nb9.iter().copied().filter(|s| s & kb == 0).collect();
        let cons: Vec<Mask9> = nb9
            .iter()
            .filter(|&&s| s & kb != 0)
            .map(|&s| ALL9 & !s)
            .filter(|&c| !keep.iter().any(|&t| t & !c == 0))
            .collect();
        let triples: Vec<u8> = keep.iter().map(|&s| relabel_without(s, k)).collect();
        let sextuples: Vec<u8> = cons.iter().map(|&c| relabel_without(c, k)).collect();
        out.insert(Pair::new(triples, sextuples).canonical());
    }
    Ok(out)
}

/// One point-deletion step of the irreducibility reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Deleted point (original label).
    pub point: u8,
    /// Line and conic flats through the point at deletion time.
    pub lines_through: usize,
    pub conics_through: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    /// Core has no conic conditions and at most six lines; an
    /// irreducible cubic through a generic realization exists by a
    /// dimension count, so the original type inherits one.
    Settled,
    /// Greedy deletion cannot settle the type; it needs a separate
    /// argument.
    Stuck,
}

#[derive(Clone, Debug)]
pub struct ReductionTrace {
    pub steps: Vec<ReductionStep>,
    pub core: Pair,
    pub outcome: ReductionOutcome,
}

/// Deletes, while possible, a point on at most two lines and no conic,
/// or on at most one conic and no line. Such a point adds an independent
/// linear condition, so irreducibility of a generic pencil member only
/// gets harder after deletion; scanning restarts from the smallest label
/// after every deletion.
pub fn reduce(pair: &Pair) -> ReductionTrace {
    let mut current = pair.clone();
    let mut alive: Vec<u8> = (1..=8).collect();
    let mut steps = Vec::new();
    'outer: loop {
        let lf = criteria::line_flats(current.triples());
        let cf = criteria::conic_flats(current.sextuples());
        for &p in &alive {
            let b = 1u8 << (p - 1);
            let nl = lf.iter().filter(|&&f| f & b != 0).count();
            let nc = cf.iter().filter(|&&f| f & b != 0).count();
            if (nc == 0 && nl <= 2) || (nl == 0 && nc <= 1) {
                steps.push(ReductionStep {
                    point: p,
                    lines_through: nl,
                    conics_through: nc,
                });
                current = current.delete_point(p);
                alive.retain(|&q| q != p);
                continue 'outer;
            }
        }
        break;
    }
    let outcome = if current.sextuples().is_empty()
        && criteria::line_flats(current.triples()).len() <= 6
    {
        ReductionOutcome::Settled
    } else {
        ReductionOutcome::Stuck
    };
    ReductionTrace {
        steps,
        core: current,
        outcome,
    }
}

/// Seven of the nine base points forced into a projective plane of order
/// two: pairwise single intersections covering every point pair. No such
/// pattern of seven genuinely concurrent lines exists over a field of
/// characteristic zero, so a type forcing one is not realizable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoObstruction {
    pub lines: [Mask9; 7],
}

impl FanoObstruction {
    pub fn support(&self) -> Vec<u8> {
        let m = self.lines.iter().fold(0, |acc, &l| acc | l);
        (1..=9).filter(|&p| m >> (p - 1) & 1 == 1).collect()
    }

    /// Re-derives the forced collinearities (including the distinctness
    /// guard they rest on) and checks the seven lines are among them and
    /// form the order-two plane.
    pub fn verify(&self, pair: &Pair) -> bool {
        let Ok(family) = base_locus_matroid(pair) else {
            return false;
        };
        if !self.lines.iter().all(|l| family.contains(l)) {
            return false;
        }
        is_fano(&self.lines)
    }
}

fn is_fano(lines: &[Mask9; 7]) -> bool {
    let mut support = 0u16;
    for (i, &a) in lines.iter().enumerate() {
        if a.count_ones() != 3 {
            return false;
        }
        support |= a;
        for &b in &lines[i + 1..] {
            if (a & b).count_ones() != 1 {
                return false;
            }
        }
    }
    support.count_ones() == 7
}

/// Searches the forced collinearities for a Fano subfamily. Types where
/// the closure rules do not apply (guard failures) are never refuted
/// here; their collinearity closure would not be trustworthy anyway.
pub fn fano_refutation(pair: &Pair) -> Option<FanoObstruction> {
    let family: Vec<Mask9> = base_locus_matroid(pair).ok()?.into_iter().collect();
    let mut chosen: Vec<Mask9> = Vec::with_capacity(7);
    fn search(family: &[Mask9], start: usize, chosen: &mut Vec<Mask9>) -> Option<[Mask9; 7]> {
        if chosen.len() == 7 {
            let arr: [Mask9; 7] = chosen.as_slice().try_into().unwrap();
            return is_fano(&arr).then_some(arr);
        }
        for i in start..family.len() {
            let c = family[i];
            if chosen.iter().all(|&a| (a & c).count_ones() == 1) {
                let sup = chosen.iter().fold(c, |acc, &a| acc | a);
                if sup.count_ones() <= 7 {
                    chosen.push(c);
                    if let Some(hit) = search(family, i + 1, chosen) {
                        return Some(hit);
                    }
                    chosen.pop();
                }
            }
        }
        None
    }
    search(&family, 0, &mut chosen).map(|lines| FanoObstruction { lines })
}
