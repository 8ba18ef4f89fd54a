//! Nonrationality certificates. Six minimal configurations admit no
//! rational cubic through a generic realization (their pencils have no
//! irreducible rational member, or no irreducible member at all); every
//! type with count zero specializes one of them, so exhibiting a
//! relabeling that places a type below a generator certifies count zero.

use super::order::relabeling_below;
use super::Pair;
use crate::perm;
use std::sync::OnceLock;

/// The six generators, pairwise incomparable even after relabeling:
/// the full 7-point conic family, two rigid six-line patterns, two
/// line-and-conic hybrids, and the 4-point line.
pub fn forbidden_generators() -> &'static [Pair; 6] {
    static G: OnceLock<[Pair; 6]> = OnceLock::new();
    G.get_or_init(|| {
        let seven_conic = Pair::new(
            Vec::new(),
            super::all_sextuples()
                .iter()
                .copied()
                .filter(|&m| m & 0x80 == 0)
                .collect(),
        );
        let four_line = Pair::new(
            super::all_triples()
                .iter()
                .copied()
                .filter(|&m| m & 0x0F == m)
                .collect(),
            Vec::new(),
        );
        [
            seven_conic,
            "lines: 123 145 167 246 257 347 ; conics: -".parse().unwrap(),
            "lines: 123 145 167 246 258 357 368 478 ; conics: -"
                .parse()
                .unwrap(),
            "lines: 123 145 246 ; conics: 125678 134678 234578"
                .parse()
                .unwrap(),
            "lines: 123 145 246 356 ; conics: 125678 134678"
                .parse()
                .unwrap(),
            four_line,
        ]
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonrationalityCertificate {
    /// Index into forbidden_generators().
    pub generator: usize,
    /// Permutation (images of points 1..8) placing the certified type
    /// below the relabeled generator.
    pub relabeling: [u8; 8],
}

/// Search the six generators for a witnessing relabeling.
pub fn certify_nonrational(q: &Pair) -> Option<NonrationalityCertificate> {
    for (gi, g) in forbidden_generators().iter().enumerate() {
        if let Some(p) = relabeling_below(q, g) {
            let perm = perm::tables().perms[p];
            let mut relabeling = [0u8; 8];
            for k in 0..8 {
                relabeling[k] = perm[k] + 1;
            }
            return Some(NonrationalityCertificate {
                generator: gi,
                relabeling,
            });
        }
    }
    None
}

/// Re-check a certificate from scratch.
pub fn verify_certificate(q: &Pair, cert: &NonrationalityCertificate) -> bool {
    let Some(g) = forbidden_generators().get(cert.generator) else {
        return false;
    };
    let mut imgs = [0u8; 8];
    for k in 0..8 {
        if !(1..=8).contains(&cert.relabeling[k]) {
            return false;
        }
        imgs[k] = cert.relabeling[k] - 1;
    }
    let Some(p) = perm::tables().perms.iter().position(|pp| *pp == imgs) else {
        return false;
    };
    super::order::leq(q, &g.apply_perm(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_certify_themselves() {
        for (i, g) in forbidden_generators().iter().enumerate() {
            let cert = certify_nonrational(g).expect("generator certifies itself");
            assert!(verify_certificate(g, &cert), "generator {}", i);
        }
    }

    #[test]
    fn generators_are_pairwise_incomparable() {
        let gens = forbidden_generators();
        for (i, a) in gens.iter().enumerate() {
            for (j, b) in gens.iter().enumerate() {
                if i != j {
                    assert!(
                        super::super::order::relabeling_below(a, b).is_none(),
                        "{} below {}",
                        i,
                        j
                    );
                }
            }
        }
    }

    #[test]
    fn generic_type_has_no_certificate() {
        let q: Pair = "lines: 123 ; conics: -".parse().unwrap();
        assert!(certify_nonrational(&q).is_none());
        assert!(certify_nonrational(&Pair::empty()).is_none());
    }

    #[test]
    fn bogus_certificates_are_rejected() {
        let g = &forbidden_generators()[5];
        let mut cert = certify_nonrational(g).unwrap();
        cert.relabeling = [1, 1, 1, 1, 1, 1, 1, 1];
        assert!(!verify_certificate(g, &cert));
    }
}
