//! Random search for rational configurations realizing a given type.
//!
//! Points are placed one at a time. Whenever a point is the last missing
//! member of a required line or conic, it is constructed exactly on that
//! flat; the remaining coordinates are random integers. A final exact
//! incidence check accepts only configurations realizing the target type
//! on the nose, so the randomness only affects how long the search takes.
//!
//! Types whose points all sit on several flats at once rarely yield to
//! direct placement. Those are harvested from the pencil geometry instead:
//! a realization of a related type is extended by its ninth base point,
//! and deleting one of the nine points leaves eight points realizing the
//! requested type.

use super::{quatroid_of, verify_representative, veronese2, Configuration};
use crate::algebra::{rat, Rat, RatMatrix};
use crate::data::{classification, RowKind};
use crate::pencil::count::{cayley_bacharach, count_rational, BaseLocus};
use crate::pencil::factor::{cross, quadric_eval, quadric_gram};
use crate::perm::{map_between, tables};
use crate::quatroid::criteria::is_bezoutian;
use crate::quatroid::profile::reducible_profile;
use crate::quatroid::{points_of, Pair};
use crate::realization::base_locus::modifications;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SearchFailure {
    #[error("no rational realization found within {0} attempts")]
    Exhausted(u32),
}

/// Searches for a configuration whose incidences are exactly `q`, first by
/// direct placement, then by harvesting ninth-point deletions of related
/// types. Deterministic for fixed `seed`.
pub fn search_representative(
    q: &Pair,
    seed: u64,
    attempts: u32,
) -> Result<Configuration, SearchFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ pair_hash(q));
    for attempt in 0..attempts {
        if let Some(c) = direct_attempt(q, &mut rng, attempt) {
            return Ok(c);
        }
    }
    harvest(q, seed, attempts).ok_or(SearchFailure::Exhausted(attempts))
}

/// Like `search_representative`, but additionally requires the pencil
/// through the points to show the generic singular-member pattern for the
/// type, retrying with shifted seeds when the first hit is too special.
pub fn search_generic_representative(
    q: &Pair,
    seed: u64,
    attempts: u32,
) -> Result<Configuration, SearchFailure> {
    if !is_bezoutian(q) {
        return search_representative(q, seed, attempts);
    }
    let target = reducible_profile(q).rational_count();
    let mut fallback = None;
    for shift in 0..8u64 {
        let c = search_representative(q, seed.wrapping_add(shift), attempts)?;
        let out = count_rational(&c).expect("searched points are distinct");
        if out.rational_count == target {
            return Ok(c);
        }
        fallback = Some(c);
    }
    Ok(fallback.expect("loop ran"))
}

fn pair_hash(q: &Pair) -> u64 {
    let mut h = 0xcbf2_9ce4_8422_2325u64;
    for &m in q.triples().iter().chain(q.sextuples()) {
        h ^= u64::from(m);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    h
}

/// Active constraints on point k: flats of the type through k whose other
/// members are all placed. Lines give the placed pair, conics the placed
/// five.
fn active_flats(
    q: &Pair,
    placed: &[Option<[Rat; 3]>],
    k: usize,
) -> (Vec<[usize; 2]>, Vec<[usize; 5]>) {
    let kb = 1u8 << k;
    let ready = |mask: u8| {
        points_of(mask & !kb)
            .iter()
            .all(|&p| placed[p as usize - 1].is_some())
    };
    let mut lines = Vec::new();
    for &t in q.triples() {
        if t & kb != 0 && ready(t) {
            let pts = points_of(t & !kb);
            lines.push([pts[0] as usize - 1, pts[1] as usize - 1]);
        }
    }
    let mut conics = Vec::new();
    for &s in q.sextuples() {
        if s & kb != 0 && ready(s) {
            let pts = points_of(s & !kb);
            let mut five = [0usize; 5];
            for (slot, &p) in five.iter_mut().zip(pts.iter()) {
                *slot = p as usize - 1;
            }
            conics.push(five);
        }
    }
    (lines, conics)
}

/// Next point to place: one with the most active constraints, so that
/// forced flats are hit by construction. Ties break randomly.
fn choose_next(q: &Pair, placed: &[Option<[Rat; 3]>], rng: &mut ChaCha8Rng) -> usize {
    let mut best: Vec<usize> = Vec::new();
    let mut best_score = 0usize;
    for k in 0..8 {
        if placed[k].is_some() {
            continue;
        }
        let (lines, conics) = active_flats(q, placed, k);
        let score = lines.len() + conics.len();
        if best.is_empty() || score > best_score {
            best_score = score;
            best.clear();
        }
        if score == best_score {
            best.push(k);
        }
    }
    best[rng.gen_range(0..best.len())]
}

fn random_coord(rng: &mut ChaCha8Rng, half_width: i64) -> Rat {
    rat(rng.gen_range(-half_width..=half_width))
}

fn proportional(a: &[Rat; 3], b: &[Rat; 3]) -> bool {
    cross(a, b).iter().all(|v| v.is_zero())
}

fn collides(placed: &[Option<[Rat; 3]>], x: &[Rat; 3]) -> bool {
    placed
        .iter()
        .flatten()
        .any(|p| proportional(p, x))
}

fn on_line(x: &[Rat; 3], l: &[Rat; 3]) -> bool {
    (0..3).map(|i| x[i].clone() * l[i].clone()).sum::<Rat>().is_zero()
}

/// One full placement pass. `None` means this attempt failed somewhere;
/// the caller retries with fresh randomness.
fn direct_attempt(q: &Pair, rng: &mut ChaCha8Rng, attempt: u32) -> Option<Configuration> {
    let half_width = (8 + i64::from(attempt) / 4).min(50);
    let mut placed: Vec<Option<[Rat; 3]>> = vec![None; 8];
    for _ in 0..8 {
        let k = choose_next(q, &placed, rng);
        let x = place_point(q, &placed, k, half_width, rng)?;
        placed[k] = Some(x);
    }
    let config = Configuration::new(placed.into_iter().map(Option::unwrap).collect());
    match quatroid_of(&config) {
        Ok(got) if &got == q => Some(config),
        _ => None,
    }
}

fn place_point(
    q: &Pair,
    placed: &[Option<[Rat; 3]>],
    k: usize,
    half_width: i64,
    rng: &mut ChaCha8Rng,
) -> Option<[Rat; 3]> {
    let (lines, conics) = active_flats(q, placed, k);
    let pt = |i: usize| placed[i].as_ref().unwrap();
    let line_of = |pair: &[usize; 2]| cross(pt(pair[0]), pt(pair[1]));

    if lines.len() >= 2 {
        // Fully determined: intersect two lines, then demand the rest.
        let x = cross(&line_of(&lines[0]), &line_of(&lines[1]));
        if x.iter().all(|v| v.is_zero()) {
            return None;
        }
        for extra in &lines[2..] {
            if !on_line(&x, &line_of(extra)) {
                return None;
            }
        }
        for five in &conics {
            let quadric = conic_through(placed, five)?;
            if !quadric_eval(&quadric, &x).is_zero() {
                return None;
            }
        }
        if collides(placed, &x) {
            return None;
        }
        return Some(x);
    }
    if lines.len() == 1 && conics.is_empty() {
        let a = pt(lines[0][0]);
        let b = pt(lines[0][1]);
        for _ in 0..8 {
            let t = random_coord(rng, half_width);
            if t.is_zero() {
                continue;
            }
            let x = [
                a[0].clone() + t.clone() * b[0].clone(),
                a[1].clone() + t.clone() * b[1].clone(),
                a[2].clone() + t * b[2].clone(),
            ];
            if !collides(placed, &x) {
                return Some(x);
            }
        }
        return None;
    }
    if lines.is_empty() && conics.len() == 1 {
        let quadric = conic_through(placed, &conics[0])?;
        let gram = quadric_gram(&quadric);
        let base = pt(conics[0][rng.gen_range(0..5)]).clone();
        for _ in 0..8 {
            let r = random_projective(rng, half_width)?;
            // Second intersection of the line through `base` and r with
            // the conic: q(r) base - <base, r> r, by the polarized form.
            let qr = quadric_eval(&quadric, &r);
            let mut beta = Rat::zero();
            for i in 0..3 {
                for j in 0..3 {
                    beta += base[i].clone() * gram.at(i, j).clone() * r[j].clone();
                }
            }
            let x = [
                qr.clone() * base[0].clone() - beta.clone() * r[0].clone(),
                qr.clone() * base[1].clone() - beta.clone() * r[1].clone(),
                qr * base[2].clone() - beta * r[2].clone(),
            ];
            if x.iter().all(|v| v.is_zero()) {
                continue;
            }
            if !collides(placed, &x) {
                return Some(x);
            }
        }
        return None;
    }
    if !conics.is_empty() {
        // Line-conic or conic-conic intersections are irrational in
        // general; leave such types to the harvest path.
        return None;
    }
    for _ in 0..8 {
        let x = random_projective(rng, half_width)?;
        if !collides(placed, &x) {
            return Some(x);
        }
    }
    None
}

fn random_projective(rng: &mut ChaCha8Rng, half_width: i64) -> Option<[Rat; 3]> {
    for _ in 0..8 {
        let x = [
            random_coord(rng, half_width),
            random_coord(rng, half_width),
            random_coord(rng, half_width),
        ];
        if x.iter().any(|v| !v.is_zero()) {
            return Some(x);
        }
    }
    None
}

/// The unique conic through the five placed points, or `None` when they
/// are too degenerate to pin one down.
fn conic_through(placed: &[Option<[Rat; 3]>], five: &[usize; 5]) -> Option<Vec<Rat>> {
    let rows: Vec<Vec<Rat>> = five
        .iter()
        .map(|&i| veronese2(placed[i].as_ref().unwrap()))
        .collect();
    let mut kernel = RatMatrix::from_rows(&rows).kernel_basis();
    if kernel.len() == 1 {
        kernel.pop()
    } else {
        None
    }
}

/// Realizes `q` by deleting one point from a nine-point pencil base locus.
/// Sources are the counted types whose ninth-point structure contains the
/// orbit of `q`.
fn harvest(q: &Pair, seed: u64, attempts: u32) -> Option<Configuration> {
    let want = q.canonical();
    for row in &classification().rows {
        if !matches!(&row.kind, RowKind::Counted { .. }) {
            continue;
        }
        let Ok(mods) = modifications(&row.pair) else {
            continue;
        };
        if !mods.contains(&want) {
            continue;
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ pair_hash(&row.pair) ^ 0x4861_7276);
        let mut sources = 0;
        for attempt in 0..attempts {
            if sources >= 5 {
                break;
            }
            let Some(source) = direct_attempt(&row.pair, &mut rng, attempt) else {
                continue;
            };
            sources += 1;
            let Ok(BaseLocus::Reduced { ninth }) = cayley_bacharach(&source) else {
                continue;
            };
            let mut nine = source.points.clone();
            nine.push(ninth);
            for k in 0..9 {
                let pts: Vec<[Rat; 3]> = nine
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| *i != k)
                    .map(|(_, p)| p.clone())
                    .collect();
                let eight = Configuration::new(pts);
                let Ok(actual) = quatroid_of(&eight) else {
                    continue;
                };
                if actual.canonical() != want {
                    continue;
                }
                let Some(p) = map_between(
                    (actual.triples(), actual.sextuples()),
                    (q.triples(), q.sextuples()),
                ) else {
                    continue;
                };
                let mut images = [0u8; 8];
                for (slot, &v) in images.iter_mut().zip(tables().perms[p].iter()) {
                    *slot = v + 1;
                }
                let relabeled = eight.permute(&images);
                if verify_representative(&relabeled, q).is_ok() {
                    return Some(relabeled);
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn found(q: &Pair) -> Configuration {
        let c = search_representative(q, 0, 200).expect("searchable type");
        verify_representative(&c, q).expect("search output verifies");
        c
    }

    #[test]
    fn finds_generic_points() {
        found(&Pair::new(vec![], vec![]));
    }

    #[test]
    fn finds_one_line() {
        found(&Pair::from_lists(&[&[1, 2, 3]], &[]));
    }

    #[test]
    fn finds_concurrent_lines() {
        found(&Pair::from_lists(&[&[1, 2, 3], &[1, 4, 5], &[1, 6, 7]], &[]));
    }

    #[test]
    fn finds_one_conic() {
        found(&Pair::from_lists(&[], &[&[1, 2, 3, 4, 5, 6]]));
    }

    #[test]
    fn finds_line_and_conic() {
        found(&Pair::from_lists(&[&[1, 2, 7]], &[&[1, 2, 3, 4, 5, 6]]));
    }

    #[test]
    fn generic_search_hits_the_expected_count() {
        let q = Pair::from_lists(&[&[1, 2, 3]], &[]);
        let c = search_generic_representative(&q, 0, 200).unwrap();
        let out = count_rational(&c).unwrap();
        assert_eq!(out.rational_count, reducible_profile(&q).rational_count());
    }
}
