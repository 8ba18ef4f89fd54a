// Integer coefficient tables for the Aronhold invariants of a ternary cubic.
//
// Monomial order of the 10 cubic coefficients:
//   x0^3, x0^2 x1, x0^2 x2, x0 x1^2, x0 x1 x2, x0 x2^2, x1^3, x1^2 x2, x1 x2^2, x2^3
// Each entry is ([exponents of the 10 coefficients], integer coefficient).
//
// Normalization: on y^2 z - x^3 - a x z^2 - b z^3 these evaluate to
// S = -48a, T = 6912b, so 64*S^3 - T^2 = -1769472*(4a^3 + 27b^2) vanishes
// exactly on singular cubics.

pub const S_TERMS: &[([u8; 10], i64)] = &[
    ([0, 0, 0, 0, 4, 0, 0, 0, 0, 0], 1),
    ([0, 0, 0, 1, 2, 1, 0, 0, 0, 0], -8),
    ([0, 0, 0, 2, 0, 2, 0, 0, 0, 0], 16),
    ([0, 0, 1, 0, 1, 1, 1, 0, 0, 0], 24),
    ([0, 0, 1, 0, 2, 0, 0, 1, 0, 0], -8),
    ([0, 0, 1, 1, 0, 1, 0, 1, 0, 0], -16),
    ([0, 0, 1, 1, 1, 0, 0, 0, 1, 0], 24),
    ([0, 0, 1, 2, 0, 0, 0, 0, 0, 1], -48),
    ([0, 0, 2, 0, 0, 0, 0, 2, 0, 0], 16),
    ([0, 0, 2, 0, 0, 0, 1, 0, 1, 0], -48),
    ([0, 1, 0, 0, 0, 2, 1, 0, 0, 0], -48),
    ([0, 1, 0, 0, 1, 1, 0, 1, 0, 0], 24),
    ([0, 1, 0, 0, 2, 0, 0, 0, 1, 0], -8),
    ([0, 1, 0, 1, 0, 1, 0, 0, 1, 0], -16),
    ([0, 1, 0, 1, 1, 0, 0, 0, 0, 1], 24),
    ([0, 1, 1, 0, 0, 0, 0, 1, 1, 0], -16),
    ([0, 1, 1, 0, 0, 0, 1, 0, 0, 1], 144),
    ([0, 2, 0, 0, 0, 0, 0, 0, 2, 0], 16),
    ([0, 2, 0, 0, 0, 0, 0, 1, 0, 1], -48),
    ([1, 0, 0, 0, 0, 1, 0, 2, 0, 0], -48),
    ([1, 0, 0, 0, 0, 1, 1, 0, 1, 0], 144),
    ([1, 0, 0, 0, 1, 0, 0, 1, 1, 0], 24),
    ([1, 0, 0, 0, 1, 0, 1, 0, 0, 1], -216),
    ([1, 0, 0, 1, 0, 0, 0, 0, 2, 0], -48),
    ([1, 0, 0, 1, 0, 0, 0, 1, 0, 1], 144),
];

pub const T_TERMS: &[([u8; 10], i64)] = &[
    ([0, 0, 0, 0, 6, 0, 0, 0, 0, 0], 8),
    ([0, 0, 0, 1, 4, 1, 0, 0, 0, 0], -96),
    ([0, 0, 0, 2, 2, 2, 0, 0, 0, 0], 384),
    ([0, 0, 0, 3, 0, 3, 0, 0, 0, 0], -512),
    ([0, 0, 1, 0, 3, 1, 1, 0, 0, 0], 288),
    ([0, 0, 1, 0, 4, 0, 0, 1, 0, 0], -96),
    ([0, 0, 1, 1, 1, 2, 1, 0, 0, 0], -1152),
    ([0, 0, 1, 1, 2, 1, 0, 1, 0, 0], 192),
    ([0, 0, 1, 1, 3, 0, 0, 0, 1, 0], 288),
    ([0, 0, 1, 2, 0, 2, 0, 1, 0, 0], 768),
    ([0, 0, 1, 2, 1, 1, 0, 0, 1, 0], -1152),
    ([0, 0, 1, 2, 2, 0, 0, 0, 0, 1], -576),
    ([0, 0, 1, 3, 0, 1, 0, 0, 0, 1], 2304),
    ([0, 0, 2, 0, 0, 2, 2, 0, 0, 0], 1728),
    ([0, 0, 2, 0, 1, 1, 1, 1, 0, 0], -1152),
    ([0, 0, 2, 0, 2, 0, 0, 2, 0, 0], 384),
    ([0, 0, 2, 0, 2, 0, 1, 0, 1, 0], -576),
    ([0, 0, 2, 1, 0, 1, 0, 2, 0, 0], 768),
    ([0, 0, 2, 1, 0, 1, 1, 0, 1, 0], -1152),
    ([0, 0, 2, 1, 1, 0, 0, 1, 1, 0], -1152),
    ([0, 0, 2, 1, 1, 0, 1, 0, 0, 1], 6912),
    ([0, 0, 2, 2, 0, 0, 0, 0, 2, 0], 1728),
    ([0, 0, 2, 2, 0, 0, 0, 1, 0, 1], -4608),
    ([0, 0, 3, 0, 0, 0, 0, 3, 0, 0], -512),
    ([0, 0, 3, 0, 0, 0, 1, 1, 1, 0], 2304),
    ([0, 0, 3, 0, 0, 0, 2, 0, 0, 1], -6912),
    ([0, 1, 0, 0, 2, 2, 1, 0, 0, 0], -576),
    ([0, 1, 0, 0, 3, 1, 0, 1, 0, 0], 288),
    ([0, 1, 0, 0, 4, 0, 0, 0, 1, 0], -96),
    ([0, 1, 0, 1, 0, 3, 1, 0, 0, 0], 2304),
    ([0, 1, 0, 1, 1, 2, 0, 1, 0, 0], -1152),
    ([0, 1, 0, 1, 2, 1, 0, 0, 1, 0], 192),
    ([0, 1, 0, 1, 3, 0, 0, 0, 0, 1], 288),
    ([0, 1, 0, 2, 0, 2, 0, 0, 1, 0], 768),
    ([0, 1, 0, 2, 1, 1, 0, 0, 0, 1], -1152),
    ([0, 1, 1, 0, 0, 2, 1, 1, 0, 0], -1152),
    ([0, 1, 1, 0, 1, 1, 0, 2, 0, 0], -1152),
    ([0, 1, 1, 0, 1, 1, 1, 0, 1, 0], 5760),
    ([0, 1, 1, 0, 2, 0, 0, 1, 1, 0], 192),
    ([0, 1, 1, 0, 2, 0, 1, 0, 0, 1], -5184),
    ([0, 1, 1, 1, 0, 1, 0, 1, 1, 0], 384),
    ([0, 1, 1, 1, 0, 1, 1, 0, 0, 1], -10368),
    ([0, 1, 1, 1, 1, 0, 0, 0, 2, 0], -1152),
    ([0, 1, 1, 1, 1, 0, 0, 1, 0, 1], 5760),
    ([0, 1, 1, 2, 0, 0, 0, 0, 1, 1], -1152),
    ([0, 1, 2, 0, 0, 0, 0, 2, 1, 0], 768),
    ([0, 1, 2, 0, 0, 0, 1, 0, 2, 0], -4608),
    ([0, 1, 2, 0, 0, 0, 1, 1, 0, 1], 6912),
    ([0, 2, 0, 0, 0, 2, 0, 2, 0, 0], 1728),
    ([0, 2, 0, 0, 0, 2, 1, 0, 1, 0], -4608),
    ([0, 2, 0, 0, 1, 1, 0, 1, 1, 0], -1152),
    ([0, 2, 0, 0, 1, 1, 1, 0, 0, 1], 6912),
    ([0, 2, 0, 0, 2, 0, 0, 0, 2, 0], 384),
    ([0, 2, 0, 0, 2, 0, 0, 1, 0, 1], -576),
    ([0, 2, 0, 1, 0, 1, 0, 0, 2, 0], 768),
    ([0, 2, 0, 1, 0, 1, 0, 1, 0, 1], -1152),
    ([0, 2, 0, 1, 1, 0, 0, 0, 1, 1], -1152),
    ([0, 2, 0, 2, 0, 0, 0, 0, 0, 2], 1728),
    ([0, 2, 1, 0, 0, 0, 0, 1, 2, 0], 768),
    ([0, 2, 1, 0, 0, 0, 0, 2, 0, 1], -4608),
    ([0, 2, 1, 0, 0, 0, 1, 0, 1, 1], 6912),
    ([0, 3, 0, 0, 0, 0, 0, 0, 3, 0], -512),
    ([0, 3, 0, 0, 0, 0, 0, 1, 1, 1], 2304),
    ([0, 3, 0, 0, 0, 0, 1, 0, 0, 2], -6912),
    ([1, 0, 0, 0, 0, 3, 2, 0, 0, 0], -6912),
    ([1, 0, 0, 0, 1, 2, 1, 1, 0, 0], 6912),
    ([1, 0, 0, 0, 2, 1, 0, 2, 0, 0], -576),
    ([1, 0, 0, 0, 2, 1, 1, 0, 1, 0], -5184),
    ([1, 0, 0, 0, 3, 0, 0, 1, 1, 0], 288),
    ([1, 0, 0, 0, 3, 0, 1, 0, 0, 1], 4320),
    ([1, 0, 0, 1, 0, 2, 0, 2, 0, 0], -4608),
    ([1, 0, 0, 1, 0, 2, 1, 0, 1, 0], 6912),
    ([1, 0, 0, 1, 1, 1, 0, 1, 1, 0], 5760),
    ([1, 0, 0, 1, 1, 1, 1, 0, 0, 1], -10368),
    ([1, 0, 0, 1, 2, 0, 0, 0, 2, 0], -576),
    ([1, 0, 0, 1, 2, 0, 0, 1, 0, 1], -5184),
    ([1, 0, 0, 2, 0, 1, 0, 0, 2, 0], -4608),
    ([1, 0, 0, 2, 0, 1, 0, 1, 0, 1], 6912),
    ([1, 0, 0, 2, 1, 0, 0, 0, 1, 1], 6912),
    ([1, 0, 0, 3, 0, 0, 0, 0, 0, 2], -6912),
    ([1, 0, 1, 0, 0, 1, 0, 3, 0, 0], 2304),
    ([1, 0, 1, 0, 0, 1, 1, 1, 1, 0], -10368),
    ([1, 0, 1, 0, 0, 1, 2, 0, 0, 1], 31104),
    ([1, 0, 1, 0, 1, 0, 0, 2, 1, 0], -1152),
    ([1, 0, 1, 0, 1, 0, 1, 0, 2, 0], 6912),
    ([1, 0, 1, 0, 1, 0, 1, 1, 0, 1], -10368),
    ([1, 0, 1, 1, 0, 0, 0, 1, 2, 0], -1152),
    ([1, 0, 1, 1, 0, 0, 0, 2, 0, 1], 6912),
    ([1, 0, 1, 1, 0, 0, 1, 0, 1, 1], -10368),
    ([1, 1, 0, 0, 0, 1, 0, 2, 1, 0], -1152),
    ([1, 1, 0, 0, 0, 1, 1, 0, 2, 0], 6912),
    ([1, 1, 0, 0, 0, 1, 1, 1, 0, 1], -10368),
    ([1, 1, 0, 0, 1, 0, 0, 1, 2, 0], -1152),
    ([1, 1, 0, 0, 1, 0, 0, 2, 0, 1], 6912),
    ([1, 1, 0, 0, 1, 0, 1, 0, 1, 1], -10368),
    ([1, 1, 0, 1, 0, 0, 0, 0, 3, 0], 2304),
    ([1, 1, 0, 1, 0, 0, 0, 1, 1, 1], -10368),
    ([1, 1, 0, 1, 0, 0, 1, 0, 0, 2], 31104),
    ([2, 0, 0, 0, 0, 0, 0, 2, 2, 0], 1728),
    ([2, 0, 0, 0, 0, 0, 0, 3, 0, 1], -6912),
    ([2, 0, 0, 0, 0, 0, 1, 0, 3, 0], -6912),
    ([2, 0, 0, 0, 0, 0, 1, 1, 1, 1], 31104),
    ([2, 0, 0, 0, 0, 0, 2, 0, 0, 2], -46656),
];
