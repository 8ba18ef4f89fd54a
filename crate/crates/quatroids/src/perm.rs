//! The symmetric group on the eight points, acting on subsets encoded as
//! bitmasks (bit k = point k + 1). A flat table of all 40320 permutation
//! images of all 256 masks makes canonical forms, stabilizers, and orbit
//! scans cheap enough to run thousands of times during enumeration.

use std::sync::OnceLock;

pub const N_PERMS: usize = 40320;

pub struct SymTables {
    /// Lexicographically ordered; perms[0] is the identity. perms[i][k] is
    /// the image of point k (0-based).
    pub perms: Vec<[u8; 8]>,
    /// images[p * 256 + mask] = image of mask under perms[p]
    images: Vec<u8>,
}

impl SymTables {
    #[inline]
    pub fn apply(&self, p: usize, mask: u8) -> u8 {
        self.images[p * 256 + mask as usize]
    }

    /// Sorted images of a sorted mask list under permutation p.
    pub fn apply_sorted(&self, p: usize, masks: &[u8], out: &mut Vec<u8>) {
        out.clear();
        let row = &self.images[p * 256..p * 256 + 256];
        out.extend(masks.iter().map(|&m| row[m as usize]));
        out.sort_unstable();
    }
}

pub fn tables() -> &'static SymTables {
    static TABLES: OnceLock<SymTables> = OnceLock::new();
    TABLES.get_or_init(build_tables)
}

fn build_tables() -> SymTables {
    let mut perms = Vec::with_capacity(N_PERMS);
    let mut cur = [0u8, 1, 2, 3, 4, 5, 6, 7];
    loop {
        perms.push(cur);
        // next lexicographic permutation
        let Some(i) = (0..7).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..8).rev().find(|&j| cur[j] > cur[i]).unwrap();
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    assert_eq!(perms.len(), N_PERMS);
    let mut images = vec![0u8; N_PERMS * 256];
    for (p, perm) in perms.iter().enumerate() {
        let row = &mut images[p * 256..(p + 1) * 256];
        let mut bit_image = [0u8; 8];
        for k in 0..8 {
            bit_image[k] = 1 << perm[k];
        }
        for mask in 1usize..256 {
            let low = mask.trailing_zeros() as usize;
            row[mask] = row[mask & (mask - 1)] | bit_image[low];
        }
    }
    SymTables { perms, images }
}

/// Lexicographic comparison key of a pair of sorted mask lists under a
/// permutation, written into scratch space.
fn image_key(t: &SymTables, p: usize, i: &[u8], j: &[u8], buf_i: &mut Vec<u8>, buf_j: &mut Vec<u8>) {
    t.apply_sorted(p, i, buf_i);
    t.apply_sorted(p, j, buf_j);
}

/// Canonical form of (triples, sextuples) under the listed permutations:
/// the lexicographically least (sorted triple images, sorted sextuple
/// images). Inputs must be sorted.
pub fn canonical_under(
    perm_indices: impl Iterator<Item = usize>,
    triples: &[u8],
    sextuples: &[u8],
) -> (Vec<u8>, Vec<u8>) {
    let t = tables();
    let mut best_i: Vec<u8> = triples.to_vec();
    let mut best_j: Vec<u8> = sextuples.to_vec();
    let mut first = true;
    let mut bi = Vec::with_capacity(triples.len());
    let mut bj = Vec::with_capacity(sextuples.len());
    for p in perm_indices {
        image_key(t, p, triples, sextuples, &mut bi, &mut bj);
        if first
            || (bi.as_slice(), bj.as_slice()) < (best_i.as_slice(), best_j.as_slice())
        {
            best_i.clear();
            best_i.extend_from_slice(&bi);
            best_j.clear();
            best_j.extend_from_slice(&bj);
            first = false;
        }
    }
    (best_i, best_j)
}

pub fn canonical(triples: &[u8], sextuples: &[u8]) -> (Vec<u8>, Vec<u8>) {
    canonical_under(0..N_PERMS, triples, sextuples)
}

/// Indices of permutations fixing both sorted mask lists setwise.
pub fn stabilizer(triples: &[u8], sextuples: &[u8]) -> Vec<usize> {
    let t = tables();
    let mut out = Vec::new();
    let mut bi = Vec::with_capacity(triples.len());
    let mut bj = Vec::with_capacity(sextuples.len());
    for p in 0..N_PERMS {
        image_key(t, p, triples, sextuples, &mut bi, &mut bj);
        if bi == triples && bj == sextuples {
            out.push(p);
        }
    }
    out
}

pub fn orbit_size(triples: &[u8], sextuples: &[u8]) -> u64 {
    (N_PERMS as u64) / (stabilizer(triples, sextuples).len() as u64)
}

/// Some permutation index mapping pair a onto pair b exactly, if one exists.
pub fn map_between(a: (&[u8], &[u8]), b: (&[u8], &[u8])) -> Option<usize> {
    if a.0.len() != b.0.len() || a.1.len() != b.1.len() {
        return None;
    }
    let t = tables();
    let mut bi = Vec::with_capacity(a.0.len());
    let mut bj = Vec::with_capacity(a.1.len());
    (0..N_PERMS).find(|&p| {
        image_key(t, p, a.0, a.1, &mut bi, &mut bj);
        bi == b.0 && bj == b.1
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mask(pts: &[u8]) -> u8 {
        pts.iter().fold(0, |m, &p| m | 1 << (p - 1))
    }

    #[test]
    fn identity_is_first_and_images_are_bijective() {
        let t = tables();
        assert_eq!(t.perms[0], [0, 1, 2, 3, 4, 5, 6, 7]);
        for &p in &[0usize, 1, 137, 40319] {
            let mut seen = [false; 256];
            for m in 0..256u16 {
                let im = t.apply(p, m as u8);
                assert!(!seen[im as usize]);
                seen[im as usize] = true;
                assert_eq!(im.count_ones(), (m as u8).count_ones());
            }
        }
    }

    #[test]
    fn stabilizer_sizes_give_orbit_sizes() {
        // single triple {1,2,3}: orbit C(8,3) = 56
        assert_eq!(orbit_size(&[mask(&[1, 2, 3])], &[]), 56);
        // single sextuple: orbit C(8,6) = 28
        assert_eq!(orbit_size(&[], &[mask(&[1, 2, 3, 4, 5, 6])]), 28);
        // empty pair is fixed by everything
        assert_eq!(orbit_size(&[], &[]), 1);
    }

    #[test]
    fn canonical_form_identifies_relabelings() {
        let a = (vec![mask(&[1, 2, 3])], vec![mask(&[1, 4, 5, 6, 7, 8])]);
        let b = (vec![mask(&[2, 5, 8])], vec![mask(&[1, 3, 4, 6, 7, 8])]);
        let ca = canonical(&a.0, &a.1);
        let cb = canonical(&b.0, &b.1);
        assert_eq!(ca, cb);
        let c = (vec![mask(&[1, 2, 3])], vec![mask(&[1, 2, 4, 5, 6, 7])]);
        assert_ne!(canonical(&c.0, &c.1), ca);
    }

    #[test]
    fn map_between_returns_a_usable_witness() {
        let t = tables();
        let a = (vec![mask(&[1, 2, 3])], vec![]);
        let b = (vec![mask(&[4, 6, 8])], vec![]);
        let p = map_between((&a.0, &a.1), (&b.0, &b.1)).unwrap();
        assert_eq!(t.apply(p, a.0[0]), b.0[0]);
    }
}
